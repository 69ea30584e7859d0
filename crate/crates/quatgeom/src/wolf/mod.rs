//! The three Wolf spaces ℍP(2), Gr₂(ℂ⁴) and G₂/SO(4) as cohomogeneity-one
//! SU(3)-manifolds: ambient algebras, adapted coframes, orbit-map pullbacks,
//! stabilizers, isotropy weights and the two-ends identification of Gr₂(ℂ⁴).

mod coframe;
mod ends;
mod isotropy;
mod model;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use coframe::{g2_coframe, gr2_coframe, hp2_coframe, hp2_displayed_ad_block, CoframeFamily, COLS, DT};
pub use ends::{gr2_identification, gr2_identification_map, Gr2Identification};
pub use isotropy::{
    isotropy_matrix_pi12, isotropy_weights, orbit_volume_density, orbit_volume_exact, OrbitVolumeIdentity, WeightSpace,
};
pub use model::{OrbitPoint, WolfSpaceModel};

/// Which Wolf space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Hp2,
    Gr2C4,
    G2So4,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown space `{0}` (expected hp2, gr2c4 or g2so4)")]
pub struct UnknownSpace(pub String);

impl Space {
    pub const ALL: [Space; 3] = [Space::Hp2, Space::Gr2C4, Space::G2So4];

    /// Short identifier used on the command line.
    pub fn key(self) -> &'static str {
        match self {
            Space::Hp2 => "hp2",
            Space::Gr2C4 => "gr2c4",
            Space::G2So4 => "g2so4",
        }
    }

    pub fn display_name(self) -> &'static str {
        match self {
            Space::Hp2 => "HP(2)",
            Space::Gr2C4 => "Gr2(C4)",
            Space::G2So4 => "G2/SO(4)",
        }
    }

    /// Right end `T` of the orbit interval, as a multiple of `π/12`.
    pub fn t_end_pi12(self) -> i64 {
        match self {
            Space::Hp2 | Space::G2So4 => 3,
            Space::Gr2C4 => 6,
        }
    }

    pub fn t_end(self) -> f64 {
        self.t_end_pi12() as f64 * std::f64::consts::PI / 12.0
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Space {
    type Err = UnknownSpace;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Space::ALL.into_iter().find(|sp| sp.key().eq_ignore_ascii_case(s.trim())).ok_or_else(|| UnknownSpace(s.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_keys_round_trip() {
        for s in Space::ALL {
            assert_eq!(s.key().parse::<Space>().unwrap(), s);
        }
        assert!("cp2".parse::<Space>().is_err());
    }

    #[test]
    fn interval_ends() {
        assert!((Space::Hp2.t_end() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!((Space::Gr2C4.t_end() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    }
}
