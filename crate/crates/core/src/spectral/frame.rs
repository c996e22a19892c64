use serde::Serialize;

use super::constants;
use super::context::SpectralContext;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{clear_denominators_with, FunctionVector, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Outcome of checking that the projected level-`j` indicators form a tight
/// frame for `V_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameReport {
    pub j: usize,
    pub mu: Rational,
    /// `|Omega_j|`, the number of frame vectors.
    pub frame_size: usize,
    pub dim: usize,
    /// Number of test vectors `h` on which both forms were checked.
    pub tested: usize,
    /// `mu_1` in closed form, present only for `j = 1`.
    pub mu_closed_form: Option<Rational>,
}

impl SpectralContext<'_> {
    fn check_level(&self, j: usize) -> Result<()> {
        if j > self.diameter() {
            return Err(Error::InvalidParameters(format!(
                "level {j} exceeds diameter {}",
                self.diameter()
            )));
        }
        Ok(())
    }

    /// `U^j = sum over u in Omega_j of iota_u iota_u^T`, built from the indicators.
    pub fn u_matrix(&self, j: usize) -> Result<RationalMatrix> {
        self.check_level(j)?;
        let nv = self.vertex_count();
        let mut counts = vec![0u64; nv * nv];
        for i in 0..self.lattice().level(j).len() {
            let mask = self.iota_mask(crate::lattice::ElementId { level: j, index: i });
            let above: Vec<usize> = (0..nv).filter(|&x| mask[x]).collect();
            for &x in &above {
                for &y in &above {
                    counts[x * nv + y] += 1;
                }
            }
        }
        Ok(RationalMatrix::from_fn(nv, nv, |x, y| Rational::from(counts[x * nv + y])))
    }

    /// `U^j` as the combination `sum_{l=j}^{d} a_l^j A_{d-l}` of distance matrices.
    pub fn u_matrix_from_distances(&self, j: usize) -> Result<RationalMatrix> {
        self.check_level(j)?;
        let d = self.diameter();
        let nv = self.vertex_count();
        let lat = self.lattice();
        let coeff: Vec<Rational> = (0..=d)
            .map(|i| {
                if d - i >= j {
                    Rational::from(lat.a_level_count((d - i) as i64, j as i64))
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Ok(RationalMatrix::from_fn(nv, nv, |x, y| coeff[self.vertex_distance(x, y)].clone()))
    }

    /// `U^j f` without forming the matrix.
    pub fn u_apply(&self, j: usize, f: &FunctionVector) -> Result<FunctionVector> {
        self.check_level(j)?;
        let mut acc = FunctionVector::zeros(self.vertex_count());
        for i in 0..self.lattice().level(j).len() {
            let iota = self.iota_id(crate::lattice::ElementId { level: j, index: i });
            let c = iota.dot(f);
            if !c.is_zero() {
                acc.axpy(&c, &iota);
            }
        }
        Ok(acc)
    }

    /// Eigenvalue `p_i(j)` of the distance-`i` matrix on `V_j`, read off as an
    /// exact ratio and confirmed on every basis vector.
    pub fn p_eigenvalue(&self, i: usize, j: usize) -> Result<Rational> {
        self.check_level(j)?;
        if i > self.diameter() {
            return Err(Error::InvalidParameters(format!("distance {i} exceeds diameter")));
        }
        let mut value: Option<Rational> = None;
        for (b, v) in self.v_basis(j).vectors().iter().enumerate() {
            let av = self.distance_apply(i, v)?;
            let x = (0..v.len()).find(|&x| !v.get(x).is_zero()).expect("basis vectors are nonzero");
            let ratio = av.get(x) / v.get(x);
            if av != v.scaled(&ratio) {
                return Err(Error::verification(
                    "spectrum.distance_matrices",
                    format!("A_{i} does not act as a scalar on V_{j} basis vector {b}"),
                ));
            }
            match &value {
                None => value = Some(ratio),
                Some(p) if *p != ratio => {
                    return Err(Error::verification(
                        "spectrum.distance_matrices",
                        format!("A_{i} has eigenvalues {p} and {ratio} on V_{j}"),
                    ))
                }
                _ => {}
            }
        }
        Ok(value.expect("V_j is nonzero"))
    }

    /// Frame constant `mu_j = sum_{i=0}^{d-j} a_{d-i}^j p_i(j)`, confirmed by
    /// `U^j v = mu_j v` on `V_j` and, for `j = 1`, against the closed form.
    pub fn mu(&self, j: usize) -> Result<Rational> {
        self.check_level(j)?;
        let d = self.diameter();
        let lat = self.lattice();
        let mut mu = Rational::zero();
        for i in 0..=d - j {
            let a = Rational::from(lat.a_level_count((d - i) as i64, j as i64));
            mu += a * self.p_eigenvalue(i, j)?;
        }
        if j == 1 {
            let closed = Rational::from(constants::mu1_closed_form(&lat.family()));
            if closed != mu {
                return Err(Error::verification(
                    "frame.mu1_closed_form",
                    format!("expansion gives {mu}, closed form {closed}"),
                ));
            }
        }
        for (b, v) in self.v_basis(j).vectors().iter().enumerate() {
            if self.u_apply(j, v)? != v.scaled(&mu) {
                return Err(Error::verification(
                    "frame.mu_expansion",
                    format!("U^{j} v != {mu} v for V_{j} basis vector {b}"),
                ));
            }
        }
        Ok(mu)
    }

    /// Tight-frame check on `V_j`: for each test vector `h` (the basis of `V_j`
    /// and its sum), `sum_u <h, pi_j iota_u> pi_j iota_u = mu_j h` and
    /// `sum_u <h, iota_u>^2 = mu_j |h|^2`.
    pub fn tight_frame_check(&self, j: usize) -> Result<FrameReport> {
        self.check_level(j)?;
        let mu = self.mu(j)?;
        let level = self.lattice().level(j);
        let frame: Vec<FunctionVector> = (0..level.len())
            .map(|i| self.pi(j, &self.iota_id(crate::lattice::ElementId { level: j, index: i })))
            .collect::<Result<_>>()?;
        let basis = self.v_basis(j);
        let mut tests: Vec<FunctionVector> = basis.vectors().to_vec();
        if basis.dim() > 1 {
            let mut sum = FunctionVector::zeros(self.vertex_count());
            for v in basis.vectors() {
                sum.axpy(&Rational::one(), v);
            }
            tests.push(sum);
        }
        // Frame vectors as integer rows over one common denominator `d`.
        let cleared: Vec<_> = frame.iter().map(clear_denominators_with).collect();
        let d = cleared.iter().fold(BigInt::one(), |acc, (_, den)| acc.lcm(den));
        let rows: Vec<Vec<BigInt>> = cleared
            .into_iter()
            .map(|(num, den)| {
                let s = &d / &den;
                num.into_iter().map(|x| x * &s).collect()
            })
            .collect();
        let d2 = &d * &d;
        let (mn, md) = (mu.numer().clone(), mu.denom().clone());
        let n = self.vertex_count();
        for (t, h) in tests.iter().enumerate() {
            let (hn, _) = clear_denominators_with(h);
            let mut acc = vec![BigInt::zero(); n];
            let mut scalar = BigInt::zero();
            for (i, row) in rows.iter().enumerate() {
                let c: BigInt = hn.iter().zip(row).map(|(a, b)| a * b).sum();
                if !c.is_zero() {
                    for (a, r) in acc.iter_mut().zip(row) {
                        *a += &c * r;
                    }
                }
                let mask = self.iota_mask(crate::lattice::ElementId { level: j, index: i });
                let raw: BigInt = hn.iter().zip(mask).filter(|(_, &m)| m).map(|(a, _)| a).sum();
                scalar += &raw * &raw;
            }
            let scale = &mn * &d2;
            if acc.iter().zip(&hn).any(|(a, x)| &md * a != &scale * x) {
                return Err(Error::verification(
                    "frame.tight_frame",
                    format!("frame operator differs from {mu} I on test vector {t} of V_{j}"),
                ));
            }
            let norm: BigInt = hn.iter().map(|x| x * x).sum();
            if &md * &scalar != &mn * &norm {
                return Err(Error::verification(
                    "frame.tight_frame",
                    format!(
                        "sum of squared coefficients != mu |h|^2 = {} on test vector {t} of V_{j}",
                        &mu * &h.norm_sq()
                    ),
                ));
            }
        }
        Ok(FrameReport {
            j,
            mu,
            frame_size: level.len(),
            dim: basis.dim(),
            tested: tests.len(),
            mu_closed_form: (j == 1).then(|| Rational::from(constants::mu1_closed_form(&self.lattice().family()))),
        })
    }
}
