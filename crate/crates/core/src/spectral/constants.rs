//! Closed-form per-level constants of the three families.
//!
//! With `[i]` meaning `i` (Johnson, Hamming) or `[i]_q` (Grassmann):
//!
//! * `c_j = [d - j]` counts the upper covers of a rank-`j` element lying below a fixed vertex above it;
//! * `alpha_j`, `beta_j` are the coefficients in
//!   `sum_{u covers w} u_* = alpha_j iota_w + beta_j w_*`;
//! * `theta_j` is the `j`-th largest eigenvalue of the adjacency operator.

use num_bigint::BigInt;
use serde::Serialize;

use crate::serde_big;
use crate::algebra::{binom, q_binom, q_int, q_pow, Rational};
use crate::error::{Error, Result};
use crate::lattice::Family;

fn level_count(family: &Family, j: i64, l: i64) -> BigInt {
    crate::lattice::level_count_closed_form(family, j, l)
}

/// `c_j`; zero at `j = d` (a vertex has only the top above it).
pub fn c(family: &Family, j: i64) -> BigInt {
    let d = family.diameter() as i64;
    match *family {
        Family::Grassmann { q, .. } => q_int(d - j, q as u64),
        _ => BigInt::from(d - j),
    }
}

/// `alpha_j` for `0 <= j < d`.
pub fn alpha(family: &Family, j: i64) -> BigInt {
    match *family {
        Family::Johnson { n, .. } => BigInt::from(n as i64 - 2 * j),
        Family::Grassmann { n, q, .. } => q_int(n as i64 - 2 * j, q as u64) * q_pow(q as u64, j as u64),
        Family::Hamming { n } => BigInt::from(2 * (n as i64 - j)),
    }
}

/// `beta_j` for `1 <= j < d`. At `j = 0` the lower star of the bottom element
/// is the empty sum, so no coefficient is defined.
pub fn beta(family: &Family, j: i64) -> Option<BigInt> {
    if j < 1 {
        return None;
    }
    Some(match family {
        Family::Hamming { .. } => c(family, j - 1) - 1,
        _ => c(family, j - 1),
    })
}

/// Closed-form eigenvalue `theta_j`.
pub fn theta_closed_form(family: &Family, j: i64) -> BigInt {
    match *family {
        Family::Johnson { n, k } => {
            let (n, k) = (n as i64, k as i64);
            BigInt::from((k - j) * (n - k - j) - j)
        }
        Family::Grassmann { n, k, q } => {
            let (n, k, q) = (n as i64, k as i64, q as u64);
            q_pow(q, (j + 1) as u64) * q_int(k - j, q) * q_int(n - k - j, q) - q_int(j, q)
        }
        Family::Hamming { n } => BigInt::from(n as i64 - 2 * j),
    }
}

/// Eigenvalues from the family-specific recursion: `theta_d = -[k]` (or `-n`)
/// and `theta_j = theta_{j+1} + alpha_j` (or `+ 2` for Hamming).
pub fn theta_recursion(family: &Family) -> Vec<BigInt> {
    let d = family.diameter();
    let mut out = vec![BigInt::from(0); d + 1];
    out[d] = match *family {
        Family::Johnson { k, .. } => -BigInt::from(k),
        Family::Grassmann { k, q, .. } => -q_int(k as i64, q as u64),
        Family::Hamming { n } => -BigInt::from(n),
    };
    for j in (0..d).rev() {
        let step = match family {
            Family::Hamming { .. } => BigInt::from(2),
            _ => alpha(family, j as i64),
        };
        out[j] = &out[j + 1] + step;
    }
    out
}

/// The general recursion behind the eigenvalues, straight from the cover
/// identities: `lambda_d = -a_d^{d-1}`, `nu_d = 1`, and for `j < d`
/// `lambda_j = lambda_{j+1} + nu_{j+1} alpha_j / c_j`,
/// `nu_j = nu_{j+1} beta_j / c_j`. Returns `(lambda, nu)`; `nu_0` is `None`.
pub fn lambda_nu_recursion(family: &Family) -> (Vec<Rational>, Vec<Option<Rational>>) {
    let d = family.diameter();
    let mut lambda = vec![Rational::zero(); d + 1];
    let mut nu = vec![None; d + 1];
    lambda[d] = -Rational::from(level_count(family, d as i64, d as i64 - 1));
    nu[d] = Some(Rational::one());
    for j in (0..d).rev() {
        let cj = Rational::from(c(family, j as i64));
        let nu_next = nu[j + 1].clone().expect("nu defined above level 0");
        lambda[j] = &lambda[j + 1] + &nu_next * Rational::from(alpha(family, j as i64)) / &cj;
        nu[j] = beta(family, j as i64).map(|b| nu_next * Rational::from(b) / &cj);
    }
    (lambda, nu)
}

/// `nu_j` in closed form: `c_{j-1}` (Johnson, Grassmann) or 1 (Hamming), for `j >= 1`.
pub fn nu_closed_form(family: &Family, j: i64) -> Option<BigInt> {
    if j < 1 {
        return None;
    }
    Some(match family {
        Family::Hamming { .. } => BigInt::from(1),
        _ => c(family, j - 1),
    })
}

/// Closed form of the level-1 frame constant `mu_1`.
pub fn mu1_closed_form(family: &Family) -> BigInt {
    match *family {
        Family::Johnson { n, k } => binom(n as i64 - 2, k as i64 - 1),
        Family::Grassmann { n, k, q } => {
            q_binom(n as i64 - 2, k as i64 - 1, q as u64) * q_pow(q as u64, k as u64 - 1)
        }
        Family::Hamming { n } => BigInt::from(2).pow(n - 1),
    }
}

/// Published formula for `p_i(1)`, the eigenvalue of the distance-`i` matrix
/// on the second eigenspace.
pub fn p_i_one_formula(family: &Family, i: i64) -> Rational {
    match *family {
        Family::Johnson { n, k } => {
            let (n, k) = (n as i64, k as i64);
            let mut acc = BigInt::from(0);
            for t in 0..=i.min(1) {
                let term = binom(1, t) * binom(k - 1, i - t) * binom(n - k - 1, i - t);
                if t % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            Rational::from(acc)
        }
        Family::Grassmann { n, k, q } => {
            let (n, k, qq) = (n as i64, k as i64, q as u64);
            let ratio = Rational::new(
                q_int(i, qq) * q_int(n, qq),
                q_int(k, qq) * q_int(n - k, qq) * q_pow(qq, i as u64),
            );
            let scale = Rational::from(q_pow(qq, (i * i) as u64) * q_binom(k, i, qq) * q_binom(n - k, i, qq));
            (Rational::one() - ratio) * scale
        }
        Family::Hamming { n } => {
            let n = n as i64;
            Rational::from(binom(n, i) - BigInt::from(2) * binom(n - 1, i - 1))
        }
    }
}

/// Everything about one level that has a closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelConstants {
    pub j: usize,
    #[serde(with = "serde_big")]
    pub c: BigInt,
    #[serde(with = "serde_big::option")]
    pub alpha: Option<BigInt>,
    #[serde(with = "serde_big::option")]
    pub beta: Option<BigInt>,
    /// `a_j^{j+1}`, undefined at `j = d`.
    #[serde(with = "serde_big::option")]
    pub a_up: Option<BigInt>,
    /// `a_j^{j-1}`, zero at `j = 0`.
    #[serde(with = "serde_big")]
    pub a_down: BigInt,
}

/// Constants for level `j`, `0 <= j <= d`. `alpha`, `a_up` are `None` at `j = d`.
pub fn constants(family: &Family, j: usize) -> Result<LevelConstants> {
    let d = family.diameter();
    if j > d {
        return Err(Error::InvalidParameters(format!("level {j} exceeds diameter {d}")));
    }
    let ji = j as i64;
    let below_top = j < d;
    Ok(LevelConstants {
        j,
        c: c(family, ji),
        alpha: below_top.then(|| alpha(family, ji)),
        beta: if below_top { beta(family, ji) } else { None },
        a_up: below_top.then(|| level_count(family, ji, ji + 1)),
        a_down: level_count(family, ji, ji - 1),
    })
}
