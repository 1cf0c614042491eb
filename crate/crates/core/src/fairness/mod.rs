//! Exact verification of justified representation, the (α, β)-core and
//! proportional fairness.
//!
//! Every `*_ratio` function returns the smallest factor at which the
//! property holds, computed exactly from order statistics of the per-agent
//! improvement ratios, together with a deviation that attains it.

mod core;
mod jr;
mod pf;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::metric::TOL;

pub use self::core::{core_ratio, core_ratio_with, core_violation, core_violation_with, CoreBackend, CoreOptions};
pub use jr::{improving_pairs, jr_ratio, jr_threshold, jr_violation};
pub use pf::{pf_ratio, pf_threshold, pf_violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Jr,
    Core,
    Pf,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Jr => "jr",
            Property::Core => "core",
            Property::Pf => "pf",
        })
    }
}

/// A rational coalition-size relaxation p/q ≥ 1, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha {
    p: u64,
    q: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Alpha {
    pub const ONE: Alpha = Alpha { p: 1, q: 1 };
    pub const TWO: Alpha = Alpha { p: 2, q: 1 };

    pub fn new(p: u64, q: u64) -> Result<Self, Error> {
        if q == 0 || p < q {
            return Err(Error::InvalidParameter(format!("alpha = {p}/{q} must be a fraction >= 1")));
        }
        let g = gcd(p, q);
        Ok(Alpha { p: p / g, q: q / g })
    }

    pub fn numer(&self) -> u64 {
        self.p
    }

    pub fn denom(&self) -> u64 {
        self.q
    }

    pub fn as_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// Accepts `p`, `p/q` or a terminating decimal such as `1.75`.
impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameter(format!("cannot parse alpha from {s:?}"));
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p = p.trim().parse().map_err(|_| bad())?;
            let q = q.trim().parse().map_err(|_| bad())?;
            return Alpha::new(p, q);
        }
        if let Some((whole, frac)) = s.split_once('.') {
            if frac.len() > 12 || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let q = 10u64.pow(frac.len() as u32);
            let whole: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
            let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
            return Alpha::new(whole * q + frac, q);
        }
        Alpha::new(s.parse().map_err(|_| bad())?, 1)
    }
}

/// A coalition and the stops it would rather have.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub coalition: Vec<usize>,
    pub deviation: Vec<usize>,
    /// Smallest improvement ratio over the coalition.
    pub factor: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FairnessReport {
    pub property: Property,
    pub alpha: Option<Alpha>,
    pub factor: f64,
    pub witness: Option<Witness>,
}

impl FairnessReport {
    fn satisfied(property: Property, alpha: Option<Alpha>) -> Self {
        FairnessReport { property, alpha, factor: 1.0, witness: None }
    }

    /// True when the property holds at factor `beta`.
    pub fn holds_at(&self, beta: f64) -> bool {
        self.factor <= beta + TOL
    }
}

/// cur / dev with 0/0 = 1, x/0 = ∞ and ∞/∞ = 1.
pub fn ratio(cur: f64, dev: f64) -> f64 {
    if cur.is_infinite() && dev.is_infinite() {
        1.0
    } else if dev <= TOL {
        if cur <= TOL {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        cur / dev
    }
}

/// β·dev < cur with tolerance, phrased so that ∞·0 never appears.
pub fn improves(beta: f64, cur: f64, dev: f64) -> bool {
    if dev <= TOL {
        cur > TOL
    } else {
        beta * dev < cur - TOL
    }
}

/// The `k`-th largest value (1-based); `None` when there are fewer than `k`.
pub(crate) fn kth_largest(values: &mut [f64], k: usize) -> Option<f64> {
    if k == 0 || values.len() < k {
        return None;
    }
    let (_, x, _) = values.select_nth_unstable_by(k - 1, |a, b| b.total_cmp(a));
    Some(*x)
}
