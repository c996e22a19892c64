use serde::Serialize;

use super::constants::{self, LevelConstants};
use super::context::SpectralContext;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{bareiss_rank, nullspace_basis, Rational, SubspaceBasis};
use crate::error::{Error, Result};
use crate::lattice::Family;

/// One eigenspace: its eigenvalue, dimension, frame constant and level constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralRow {
    pub theta: Rational,
    pub dim: usize,
    pub mu: Rational,
    /// `lambda_j` from the cover recursion (equals `theta`).
    pub lambda: Rational,
    pub nu: Option<Rational>,
    #[serde(flatten)]
    pub constants: LevelConstants,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralTable {
    #[serde(flatten)]
    pub family: Family,
    pub vertex_count: usize,
    pub rows: Vec<SpectralRow>,
}

impl SpectralContext<'_> {
    /// Eigenvalues by the closed form, cross-checked against both recursions.
    pub fn thetas(&self) -> Result<Vec<Rational>> {
        let family = self.lattice().family();
        let d = self.diameter();
        let closed: Vec<Rational> = (0..=d)
            .map(|j| Rational::from(constants::theta_closed_form(&family, j as i64)))
            .collect();
        let rec = constants::theta_recursion(&family);
        let (lambda, _) = constants::lambda_nu_recursion(&family);
        for j in 0..=d {
            if Rational::from(rec[j].clone()) != closed[j] || lambda[j] != closed[j] {
                return Err(Error::verification(
                    "spectrum.recursion",
                    format!("theta_{j}: closed form {}, recursion {}, cover recursion {}", closed[j], rec[j], lambda[j]),
                ));
            }
            if j > 0 && closed[j] >= closed[j - 1] {
                return Err(Error::verification(
                    "spectrum.recursion",
                    format!("eigenvalues not strictly decreasing at j={j}"),
                ));
            }
        }
        Ok(closed)
    }

    /// Eigenvalues and multiplicities of the adjacency matrix found by an
    /// independent route: the nullity `|X| - rank(A - theta I)` for each
    /// candidate, with the rank from fraction-free elimination.
    pub fn eigen_oracle(&self, candidates: &[Rational]) -> Vec<(Rational, usize)> {
        let nv = self.vertex_count();
        candidates
            .iter()
            .map(|t| {
                let (num, den) = (t.numer(), t.denom());
                // den * (A - t I) has integer entries
                let rows = (0..nv)
                    .map(|x| {
                        (0..nv)
                            .map(|y| {
                                let a = if self.vertex_distance(x, y) == 1 { den.clone() } else { BigInt::zero() };
                                if x == y {
                                    a - num
                                } else {
                                    a
                                }
                            })
                            .collect()
                    })
                    .collect();
                (t.clone(), nv - bareiss_rank(rows))
            })
            .collect()
    }

    /// Nullspace of `A - theta I` by rational row reduction; slower than
    /// [`eigen_oracle`](Self::eigen_oracle) but yields an explicit basis.
    pub fn eigen_kernel(&self, theta: &Rational) -> SubspaceBasis {
        nullspace_basis(&self.adjacency_matrix(1).minus_scalar_identity(theta))
    }

    /// Checks `A v = theta_j v` on every basis vector of every `V_j`, that the
    /// dimensions match the nullities of `A - theta_j I`, and that the pieces
    /// fill `Q^X`. Returns the full table on success.
    pub fn verify_eigenspaces(&self) -> Result<SpectralTable> {
        let family = self.lattice().family();
        let d = self.diameter();
        let nv = self.vertex_count();
        let thetas = self.thetas()?;
        for (j, theta) in thetas.iter().enumerate() {
            for (i, v) in self.v_basis(j).vectors().iter().enumerate() {
                let av = self.adjacency_apply(v)?;
                if av != v.scaled(theta) {
                    let x = av.first_difference(&v.scaled(theta)).unwrap_or(0);
                    return Err(Error::verification(
                        "spectrum.eigenspaces",
                        format!("V_{j} basis vector {i}: (Av)({x}) = {}, theta v = {}", av.get(x), theta * v.get(x)),
                    ));
                }
            }
        }
        let dims: Vec<usize> = (0..=d).map(|j| self.v_basis(j).dim()).collect();
        let total: usize = dims.iter().sum();
        if total != nv {
            return Err(Error::verification(
                "spectrum.eigenspaces",
                format!("eigenspace dimensions sum to {total}, expected {nv}"),
            ));
        }
        let oracle = self.eigen_oracle(&thetas);
        let nullity_total: usize = oracle.iter().map(|(_, m)| m).sum();
        for (j, (theta, m)) in oracle.iter().enumerate() {
            if *m != dims[j] {
                return Err(Error::verification(
                    "spectrum.eigenspaces",
                    format!("theta_{j} = {theta}: nullity of A - theta I is {m}, V_{j} has dimension {}", dims[j]),
                ));
            }
        }
        if nullity_total != nv {
            return Err(Error::verification(
                "spectrum.eigenspaces",
                format!("nullities sum to {nullity_total}, expected {nv}"),
            ));
        }

        let (lambda, nu) = constants::lambda_nu_recursion(&family);
        let mut rows = Vec::with_capacity(d + 1);
        for j in 0..=d {
            rows.push(SpectralRow {
                theta: thetas[j].clone(),
                dim: dims[j],
                mu: self.mu(j)?,
                lambda: lambda[j].clone(),
                nu: nu[j].clone(),
                constants: constants::constants(&family, j)?,
            });
        }
        Ok(SpectralTable {
            family,
            vertex_count: nv,
            rows,
        })
    }
}
