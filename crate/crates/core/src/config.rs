use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 20_250_101;

/// Search bounds and feature switches shared by the library and the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub seed: u64,
    /// Largest graph handed to the full automorphism search.
    pub ir_max_vertices: usize,
    /// Coset limit for Todd–Coxeter.
    pub coset_bound: usize,
    /// Largest group enumerated element by element.
    pub enum_bound: u128,
    /// Largest group passed to the minimal normal subgroup search.
    pub min_normal_bound: u128,
    /// Enables the stretch constructions.
    pub stretch_graphs: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: DEFAULT_SEED,
            ir_max_vertices: 600,
            coset_bound: 100_000,
            enum_bound: 1_000_000,
            min_normal_bound: 10_000_000,
            stretch_graphs: false,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config {
            seed,
            ..Config::default()
        }
    }

    pub fn rng(&self) -> rand_chacha::ChaCha8Rng {
        use rand::SeedableRng;
        rand_chacha::ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Parses a JSON config; missing fields take their defaults.
    pub fn from_json(text: &str) -> crate::Result<Self> {
        let config: Config = serde_json::from_str(text).map_err(|e| {
            crate::error::ParseError::new(e.column().saturating_sub(1), e.to_string())
        })?;
        config.validate()?;
        Ok(config)
    }

    /// Fails if any bound is zero.
    pub fn validate(&self) -> crate::Result<()> {
        if self.ir_max_vertices == 0
            || self.coset_bound == 0
            || self.enum_bound == 0
            || self.min_normal_bound == 0
        {
            return Err(crate::Error::InvalidArgument(
                "all bounds must be positive".into(),
            ));
        }
        Ok(())
    }
}
