#include <stdio.h>
#include <string.h>
#include "lforge.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); return 1; } } while (0)

int main(void) {
    char *json = NULL;
    CHECK(lf_universal_pnm_json(2, 2, &json) == LF_STATUS_OK);
    CHECK(strstr(json, "\"polynomial\":\"x1*x3 - x4\"") != NULL);
    lf_string_free(json);

    LfUPoly *f = NULL;
    LfStability verdict;
    uint64_t k = 0;
    CHECK(lf_upoly_parse("x-2", &f) == LF_STATUS_OK);
    CHECK(lf_upoly_lambda_stable(f, 30, &verdict, &k) == LF_STATUS_OK);
    CHECK(verdict == LF_STABILITY_NOT_STABLE && k == 2);
    lf_upoly_free(f);
    CHECK(lf_upoly_parse("x^", &f) == LF_STATUS_PARSE);
    CHECK(lf_last_error_message() != NULL);

    int64_t a[3] = {1, 0, 0}, b[3] = {1, 0, 0};
    LfWittVector *wa = NULL, *wb = NULL, *sum = NULL;
    CHECK(lf_witt_from_i64(a, 3, &wa) == LF_STATUS_OK);
    CHECK(lf_witt_from_i64(b, 3, &wb) == LF_STATUS_OK);
    CHECK(lf_witt_add(wa, wb, &sum) == LF_STATUS_OK);
    char *c1 = NULL;
    CHECK(lf_witt_component(sum, 0, &c1) == LF_STATUS_OK && strcmp(c1, "2") == 0);
    lf_string_free(c1);
    lf_witt_free(wa);
    lf_witt_free(wb);
    lf_witt_free(sum);

    LfF1Module *m = NULL;
    uint64_t count = 0;
    CHECK(lf_f1module_from_prime_values(5, 12, NULL, 0, &m) == LF_STATUS_OK);
    CHECK(lf_f1module_hom_count(m, &count) == LF_STATUS_OK && count == 5);
    lf_f1module_free(m);

    char *value = NULL, *tail = NULL;
    CHECK(lf_zeta_euler("primes", 2.0, 1000, 80, &value, &tail) == LF_STATUS_OK);
    CHECK(strncmp(value, "1.64", 4) == 0);
    lf_string_free(value);
    lf_string_free(tail);
    CHECK(lf_zeta_euler("primes", 1.0, 1000, 80, &value, &tail) == LF_STATUS_INVALID_ARGUMENT);
    puts("ok");
    return 0;
}
