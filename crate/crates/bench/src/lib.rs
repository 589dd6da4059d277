//! Shared fixtures for the criterion benchmarks.

use od_core::algebra::VarRegistry;
use od_core::constructions::{aod48_circulant, AodPair, BuildMode};

/// The order-48 full amicable pair used as the medium-size benchmark input.
pub fn order48_pair() -> AodPair {
    aod48_circulant(&mut VarRegistry::new(), BuildMode::Full).expect("catalog design builds")
}
