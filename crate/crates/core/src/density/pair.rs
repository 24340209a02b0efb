use core::fmt;
use core::str::FromStr;

use super::normal;
use crate::error::{Error, Result};

/// Intermediate probabilities are kept inside `[LO, HI]` so that `Φ⁻¹` and
/// logarithms stay finite.
pub(crate) const LO: f64 = 1e-300;
pub(crate) const HI: f64 = 1.0 - 1e-16;

/// A probability stored together with its complement, so values near 1 keep
/// their upper tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Prob {
    p: f64,
    q: f64,
}

impl Prob {
    pub(crate) fn new(p: f64) -> Self {
        Prob::pair(p, 1.0 - p)
    }

    fn pair(p: f64, q: f64) -> Self {
        Prob {
            p: p.clamp(LO, HI),
            q: q.clamp(LO, HI),
        }
    }

    pub(crate) fn value(self) -> f64 {
        self.p
    }

    /// `Φ⁻¹` of the probability, read from whichever tail is smaller.
    fn z(self) -> f64 {
        if self.p <= 0.5 {
            normal::ppf(self.p)
        } else {
            -normal::ppf(self.q)
        }
    }

    fn ln(self) -> f64 {
        if self.p <= 0.5 {
            libm::log(self.p)
        } else {
            libm::log1p(-self.q)
        }
    }
}

/// `ln(u^-θ + v^-θ - 1)` given `a = -θ ln u` and `b = -θ ln v`, both `>= 0`.
fn clayton_log_sum(a: f64, b: f64) -> f64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    if hi < 30.0 {
        libm::log1p(libm::expm1(a) + libm::expm1(b))
    } else {
        hi + libm::log1p(libm::exp(lo - hi) - libm::exp(-hi))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Independence,
    Gaussian,
    Clayton,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Independence => "independence",
            Family::Gaussian => "gaussian",
            Family::Clayton => "clayton",
        }
    }

    /// Whether the family takes a parameter.
    pub fn has_parameter(self) -> bool {
        !matches!(self, Family::Independence)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "independence" | "indep" => Ok(Family::Independence),
            "gaussian" => Ok(Family::Gaussian),
            "clayton" => Ok(Family::Clayton),
            _ => Err(()),
        }
    }
}

/// A bivariate copula with a validated parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairCopula {
    family: Family,
    param: f64,
}

impl PairCopula {
    pub const INDEPENDENCE: PairCopula = PairCopula {
        family: Family::Independence,
        param: 0.0,
    };

    pub fn independence() -> Self {
        Self::INDEPENDENCE
    }

    /// Requires `|rho| < 1`.
    pub fn gaussian(rho: f64) -> Result<Self> {
        if rho.is_nan() || rho.abs() >= 1.0 {
            return Err(Error::ParameterDomain {
                family: "gaussian",
                value: rho,
            });
        }
        Ok(PairCopula {
            family: Family::Gaussian,
            param: rho,
        })
    }

    /// Requires a finite `theta > 0`.
    pub fn clayton(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta.is_finite()) {
            return Err(Error::ParameterDomain {
                family: "clayton",
                value: theta,
            });
        }
        Ok(PairCopula {
            family: Family::Clayton,
            param: theta,
        })
    }

    pub fn new(family: Family, param: Option<f64>) -> Result<Self> {
        match (family, param) {
            (Family::Independence, None) => Ok(Self::INDEPENDENCE),
            (Family::Gaussian, Some(p)) => Self::gaussian(p),
            (Family::Clayton, Some(p)) => Self::clayton(p),
            (f, p) => Err(Error::ParameterDomain {
                family: f.name(),
                value: p.unwrap_or(f64::NAN),
            }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> Option<f64> {
        self.family.has_parameter().then_some(self.param)
    }

    pub fn density(&self, u: f64, v: f64) -> f64 {
        libm::exp(self.log_density(u, v))
    }

    pub fn log_density(&self, u: f64, v: f64) -> f64 {
        self.log_density_prob(Prob::new(u), Prob::new(v))
    }

    /// `h(u | v) = ∂C(u, v)/∂v`, the conditional distribution of the first
    /// argument given the second.
    pub fn h(&self, u: f64, v: f64) -> f64 {
        self.h_prob(Prob::new(u), Prob::new(v)).value()
    }

    pub(crate) fn log_density_prob(&self, u: Prob, v: Prob) -> f64 {
        match self.family {
            Family::Independence => 0.0,
            Family::Gaussian => {
                let r = self.param;
                let (x, y) = (u.z(), v.z());
                let s = 1.0 - r * r;
                -0.5 * libm::log(s) - (r * r * (x * x + y * y) - 2.0 * r * x * y) / (2.0 * s)
            }
            Family::Clayton => {
                let t = self.param;
                let (lu, lv) = (u.ln(), v.ln());
                let w = clayton_log_sum(-t * lu, -t * lv);
                libm::log1p(t) - (1.0 + t) * (lu + lv) - (2.0 + 1.0 / t) * w
            }
        }
    }

    pub(crate) fn h_prob(&self, u: Prob, v: Prob) -> Prob {
        match self.family {
            Family::Independence => u,
            Family::Gaussian => {
                let r = self.param;
                let t = (u.z() - r * v.z()) / libm::sqrt(1.0 - r * r);
                Prob::pair(normal::cdf(t), normal::cdf(-t))
            }
            Family::Clayton => {
                let t = self.param;
                let (lu, lv) = (u.ln(), v.ln());
                let w = clayton_log_sum(-t * lu, -t * lv);
                let lh = (-(1.0 + t) * lv - (1.0 + 1.0 / t) * w).min(0.0);
                Prob::pair(libm::exp(lh), -libm::expm1(lh))
            }
        }
    }
}

impl fmt::Display for PairCopula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter() {
            Some(p) => write!(f, "{} {}", self.family, p),
            None => write!(f, "{}", self.family),
        }
    }
}

pub fn pc_density(c: &PairCopula, u: f64, v: f64) -> f64 {
    c.density(u, v)
}

pub fn h_func(c: &PairCopula, u: f64, v: f64) -> f64 {
    c.h(u, v)
}
