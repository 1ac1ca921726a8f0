use clap::Args;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::symmetric::UniversalLimits;

/// Truncation orders and bounds shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Args)]
pub struct Config {
    /// Order of truncated λ-series
    #[arg(long, global = true, env = "LFORGE_SERIES_ORDER", default_value_t = 8)]
    pub series_order: usize,
    /// Largest n for generated P_n
    #[arg(long, global = true, env = "LFORGE_UNIVERSAL_N_MAX", default_value_t = 6)]
    pub universal_n_max: usize,
    /// Largest n·m for generated P_{n,m}
    #[arg(long, global = true, env = "LFORGE_UNIVERSAL_NM_MAX", default_value_t = 8)]
    pub universal_nm_max: usize,
    /// Witt vector length
    #[arg(long, global = true, env = "LFORGE_WITT_LENGTH", default_value_t = 8)]
    pub witt_length: usize,
    /// Largest k tried when testing f | f(x^k)
    #[arg(long, global = true, env = "LFORGE_K_MAX_STABILITY", default_value_t = 30)]
    pub k_max_stability: usize,
    /// Number of operations λ_1..λ_N carried by a module
    #[arg(long, global = true, env = "LFORGE_MODULE_BOUND", default_value_t = 12)]
    pub module_bound: usize,
    /// Binary precision of zeta values
    #[arg(long, global = true, env = "LFORGE_ZETA_PRECISION_BITS", default_value_t = 80)]
    pub zeta_precision_bits: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            series_order: 8,
            universal_n_max: 6,
            universal_nm_max: 8,
            witt_length: 8,
            k_max_stability: 30,
            module_bound: 12,
            zeta_precision_bits: 80,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("series_order", self.series_order),
            ("universal_n_max", self.universal_n_max),
            ("universal_nm_max", self.universal_nm_max),
            ("witt_length", self.witt_length),
            ("k_max_stability", self.k_max_stability),
            ("module_bound", self.module_bound),
            ("zeta_precision_bits", self.zeta_precision_bits as usize),
        ];
        match fields.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::InvalidArgument(format!("{name} must be positive"))),
            None => Ok(()),
        }
    }

    pub fn limits(&self) -> UniversalLimits {
        UniversalLimits { n_max: self.universal_n_max, nm_max: self.universal_nm_max }
    }
}
