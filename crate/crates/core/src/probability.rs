use std::fmt;

use crate::error::{Error, Result};

/// An existence probability in `(0, 1]`.
///
/// Zero is excluded: an element that cannot exist is simply left out of the
/// framework.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub const ONE: Probability = Probability(1.0);

    pub fn new(p: f64) -> Result<Self> {
        if p > 0.0 && p <= 1.0 {
            Ok(Probability(p))
        } else {
            Err(Error::ProbabilityOutOfRange(p))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_certain(self) -> bool {
        self.0 == 1.0
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;

    fn try_from(p: f64) -> Result<Self> {
        Probability::new(p)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
