use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::algebra::{binom, is_prime, q_binom};
use crate::error::{Error, Result};

/// One of the three graph families, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    /// `k`-subsets of `{1..n}`, adjacent when they share `k-1` elements.
    Johnson { n: u32, k: u32 },
    /// `k`-dimensional subspaces of `GF(q)^n`, adjacent when they meet in dimension `k-1`.
    Grassmann { n: u32, k: u32, q: u32 },
    /// Words in `{+1,-1}^n`, adjacent when they differ in one coordinate.
    Hamming { n: u32 },
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(msg));
        match *self {
            Family::Johnson { n, k } | Family::Grassmann { n, k, .. } => {
                if k < 1 {
                    return bad(format!("{self}: k must be at least 1"));
                }
                if 2 * k > n {
                    return bad(format!("{self}: requires 2k <= n"));
                }
                if let Family::Grassmann { q, .. } = *self {
                    if !is_prime(q as u64) {
                        return bad(format!("{self}: q = {q} is not prime (only prime fields are supported)"));
                    }
                }
                Ok(())
            }
            Family::Hamming { n } => {
                if n < 1 {
                    return bad(format!("{self}: n must be at least 1"));
                }
                Ok(())
            }
        }
    }

    pub fn n(&self) -> u32 {
        match *self {
            Family::Johnson { n, .. } | Family::Grassmann { n, .. } | Family::Hamming { n } => n,
        }
    }

    /// `k` for Johnson and Grassmann, `n` for Hamming.
    pub fn diameter(&self) -> usize {
        match *self {
            Family::Johnson { k, .. } | Family::Grassmann { k, .. } => k as usize,
            Family::Hamming { n } => n as usize,
        }
    }

    /// `|Omega_l|` for `0 <= l <= d`, and 1 for the top level `d + 1`.
    pub fn level_size(&self, level: usize) -> BigInt {
        let d = self.diameter();
        if level == d + 1 {
            return BigInt::one();
        }
        if level > d + 1 {
            return BigInt::from(0);
        }
        let l = level as i64;
        match *self {
            Family::Johnson { n, .. } => binom(n as i64, l),
            Family::Grassmann { n, q, .. } => q_binom(n as i64, l, q as u64),
            Family::Hamming { n } => Pow::pow(&BigInt::from(2), level as u64) * binom(n as i64, l),
        }
    }

    /// Number of vertices `|X| = |Omega_d|`.
    pub fn vertex_count(&self) -> BigInt {
        self.level_size(self.diameter())
    }

    /// Total number of lattice elements including the top.
    pub fn element_count(&self) -> BigInt {
        (0..=self.diameter() + 1).map(|l| self.level_size(l)).sum()
    }

    /// Short human-readable label, e.g. `J(5,2)`, `J_2(4,2)`, `H(3,2)`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Johnson { n, k } => write!(f, "J({n},{k})"),
            Family::Grassmann { n, k, q } => write!(f, "J_{q}({n},{k})"),
            Family::Hamming { n } => write!(f, "H({n},2)"),
        }
    }
}

/// Limits on instance size, checked before any enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    pub max_vertices: usize,
    pub max_elements: usize,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps {
            max_vertices: 20_000,
            max_elements: 100_000,
        }
    }
}

impl SizeCaps {
    pub fn check(&self, family: &Family) -> Result<()> {
        let vertices = family.vertex_count();
        if vertices.to_usize().is_none_or(|v| v > self.max_vertices) {
            return Err(Error::SizeCap(format!(
                "{family} has {vertices} vertices, cap is {}",
                self.max_vertices
            )));
        }
        let elements = family.element_count();
        if elements.to_usize().is_none_or(|v| v > self.max_elements) {
            return Err(Error::SizeCap(format!(
                "{family} has {elements} lattice elements, cap is {}",
                self.max_elements
            )));
        }
        Ok(())
    }
}
