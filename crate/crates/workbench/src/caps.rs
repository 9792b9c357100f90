//! Resource caps, loaded from a TOML file via `--caps`.

use serde::{Deserialize, Serialize};
use uniformity_core::groebner::GroebnerCaps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub groebner_max_basis: usize,
    pub groebner_max_degree: u64,
    /// Largest generator count accepted by the Betti computation.
    pub betti_max_generators: usize,
    /// Largest number of power products the Frobenius check enumerates.
    pub frobenius_max_products: u64,
}

impl Default for Caps {
    fn default() -> Self {
        let g = GroebnerCaps::default();
        Caps {
            groebner_max_basis: g.max_basis,
            groebner_max_degree: g.max_degree,
            betti_max_generators: uniformity_core::resolution::DEFAULT_GENERATOR_CAP,
            frobenius_max_products: 100_000,
        }
    }
}

impl Caps {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn groebner(&self) -> GroebnerCaps {
        GroebnerCaps { max_basis: self.groebner_max_basis, max_degree: self.groebner_max_degree }
    }
}
