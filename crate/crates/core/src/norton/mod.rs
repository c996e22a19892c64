//! Norton product on the second eigenspace `V_1`: `f ⋆ g = pi_1(f g)`.

use serde::Serialize;

use crate::algebra::{q_int, FunctionVector, Rational};
use crate::error::{Error, Result};
use crate::lattice::{ElementId, Family, LatticeElement};
use crate::spectral::SpectralContext;

/// Shape of the closed form for `tau_hat ⋆ sigma_hat` with `tau != sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum OffDiagonal {
    /// Identically zero.
    Zero,
    /// `c (tau_hat + sigma_hat)`.
    PairSum { coefficient: Rational },
    /// `c (tau_hat + sigma_hat) + e * sum of rho_hat over atoms rho <= tau ∨ sigma`.
    PairSumAndJoin { pair: Rational, join: Rational },
    /// No closed form is asserted (`k = 1`). When every product is a common
    /// multiple of `tau_hat + sigma_hat` that multiple is recorded.
    Observed { coefficient: Option<Rational> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairResult {
    pub tau: usize,
    pub sigma: usize,
    pub verified: bool,
}

/// First pair whose numeric product disagreed with the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub tau: LatticeElement,
    pub sigma: LatticeElement,
    pub numeric: FunctionVector,
    pub closed_form: FunctionVector,
}

/// Results of the supporting identities, each checked exhaustively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportingChecks {
    /// `tau_hat ⋆ sigma_hat = pi_1(iota_{tau ∨ sigma}) - (a_1/|X|)(tau_hat + sigma_hat)` for all pairs.
    pub join_projection: bool,
    /// `<iota_rho, iota_{tau ∨ sigma}> = a_{rank(rho ∨ tau ∨ sigma)}` for all atom triples.
    pub triple_inner_products: bool,
    /// The projected atoms sum to zero.
    pub atom_sum_zero: bool,
    /// Frame projection agrees with the Gram–Schmidt projection on every vertex indicator.
    pub frame_projection: bool,
    /// `check(-tau) = -check(tau)`; Hamming only.
    pub sign_symmetry: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Associativity {
    pub triples_checked: usize,
    /// Atom indices `(tau, sigma, rho)` with `(tau ⋆ sigma) ⋆ rho != tau ⋆ (sigma ⋆ rho)`.
    pub witness: Option<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NortonProductReport {
    #[serde(flatten)]
    pub family: Family,
    pub atoms: usize,
    pub diagonal: Rational,
    pub off_diagonal: OffDiagonal,
    pub all_zero: bool,
    pub pairs_checked: usize,
    pub pairs_verified: usize,
    pub verified: bool,
    pub pairs: Vec<PairResult>,
    pub checks: SupportingChecks,
    pub associativity: Associativity,
    pub counterexample: Option<Counterexample>,
}

/// The Norton algebra of one built instance.
pub struct Norton<'c, 'a> {
    ctx: &'c SpectralContext<'a>,
    mu1: Rational,
    /// `a_1 / |X|`
    shift: Rational,
    taus: Vec<FunctionVector>,
}

impl<'c, 'a> Norton<'c, 'a> {
    /// Computes `mu_1` and every projected atom, checking each against the
    /// Gram–Schmidt projection onto `V_1`.
    pub fn new(ctx: &'c SpectralContext<'a>) -> Result<Self> {
        let lattice = ctx.lattice();
        let nv = ctx.vertex_count();
        let mu1 = ctx.mu(1)?;
        let shift = Rational::from(lattice.a(1)) / Rational::from(nv);
        let ones = FunctionVector::ones(nv);
        let mut taus = Vec::with_capacity(lattice.atoms().len());
        for (i, tau) in lattice.atoms().iter().enumerate() {
            let iota = ctx.iota_id(ElementId { level: 1, index: i });
            let mut check = iota.clone();
            check.axpy(&-&shift, &ones);
            if check.dot(&ones) != Rational::zero() || ctx.pi(1, &iota)? != check {
                return Err(Error::verification(
                    "norton.projected_atoms",
                    format!("projection of atom {} onto V_1 is not iota - (a_1/|X|) 1", serde_json::json!(tau)),
                ));
            }
            taus.push(check);
        }
        Ok(Norton { ctx, mu1, shift, taus })
    }

    fn atom_index(&self, tau: &LatticeElement) -> Result<usize> {
        match self.ctx.lattice().id_of(tau) {
            Some(id) if id.level == 1 => Ok(id.index),
            _ => Err(Error::InvalidParameters("expected an atom of the lattice".into())),
        }
    }

    pub fn mu1(&self) -> &Rational {
        &self.mu1
    }

    /// `check(tau) = iota_tau - (a_1/|X|) 1`.
    pub fn tau_check(&self, tau: &LatticeElement) -> Result<FunctionVector> {
        Ok(self.taus[self.atom_index(tau)?].clone())
    }

    pub fn tau_checks(&self) -> &[FunctionVector] {
        &self.taus
    }

    /// `pi_1(h) = sum over atoms tau of <iota_tau, h>/mu_1 * check(tau)`,
    /// evaluated pointwise as `(sum_{tau <= x} c_tau - (a_1/|X|) sum_tau c_tau) / mu_1`
    /// with `c_tau = <iota_tau, h>`.
    pub fn pi1_frame(&self, h: &FunctionVector) -> Result<FunctionVector> {
        let nv = self.ctx.vertex_count();
        if h.len() != nv {
            return Err(Error::DimensionMismatch {
                expected: nv,
                actual: h.len(),
            });
        }
        let coeffs: Vec<Rational> = (0..self.taus.len())
            .map(|i| {
                let mask = self.ctx.iota_mask(ElementId { level: 1, index: i });
                (0..nv).filter(|&x| mask[x]).map(|x| h.get(x)).sum()
            })
            .collect();
        let offset = &self.shift * coeffs.iter().sum::<Rational>();
        let values = (0..nv)
            .map(|x| {
                let below: Rational = self.ctx.atoms_below(x).iter().map(|&i| &coeffs[i]).sum();
                (below - &offset) / &self.mu1
            })
            .collect();
        Ok(FunctionVector::new(values))
    }

    /// `f ⋆ g = pi_1(f g)`, with both inputs required to lie in `V_1`. The frame
    /// projection is cross-checked against the Gram–Schmidt one.
    pub fn norton_product(&self, f: &FunctionVector, g: &FunctionVector) -> Result<FunctionVector> {
        for (name, v) in [("left", f), ("right", g)] {
            if &self.pi1_frame(v)? != v {
                return Err(Error::NotInV1(format!("{name} factor is not fixed by the projection onto V_1")));
            }
        }
        self.product_unchecked(f, g)
    }

    /// The product for factors already known to lie in `V_1`.
    fn product_unchecked(&self, f: &FunctionVector, g: &FunctionVector) -> Result<FunctionVector> {
        let fg = f.hadamard(g);
        let frame = self.pi1_frame(&fg)?;
        if frame != self.ctx.pi(1, &fg)? {
            return Err(Error::verification(
                "norton.frame_projection",
                "frame projection and Gram–Schmidt projection disagree",
            ));
        }
        Ok(frame)
    }

    /// The closed-form coefficients for this family.
    pub fn coefficients(&self) -> (Rational, OffDiagonal) {
        let family = self.ctx.lattice().family();
        match family {
            Family::Hamming { .. } => (Rational::zero(), OffDiagonal::Zero),
            Family::Johnson { n, k } => {
                let (n, k) = (n as i64, k as i64);
                let diag = Rational::one() - Rational::new(2 * k, n);
                if k == 1 {
                    return (diag, OffDiagonal::Observed { coefficient: None });
                }
                (
                    diag,
                    OffDiagonal::PairSum {
                        coefficient: Rational::new(2 * k - n, n * (n - 2)),
                    },
                )
            }
            Family::Grassmann { n, k, q } => {
                let (n, k, q) = (n as i64, k as i64, q as u64);
                let ratio = Rational::new(q_int(k, q), q_int(n, q));
                let diag = Rational::one() - Rational::from(2) * &ratio;
                if k == 1 {
                    return (diag, OffDiagonal::Observed { coefficient: None });
                }
                let join = Rational::new(q_int(k - 1, q), q_int(n - 2, q) * q);
                (diag, OffDiagonal::PairSumAndJoin { pair: -ratio, join })
            }
        }
    }

    /// Closed form of `check(tau) ⋆ check(sigma)`. The off-diagonal forms need
    /// rank-2 joins and are unsupported when `k = 1`.
    pub fn norton_closed_form(&self, tau: &LatticeElement, sigma: &LatticeElement) -> Result<FunctionVector> {
        let (t, s) = (self.atom_index(tau)?, self.atom_index(sigma)?);
        self.closed_form_by_index(t, s)
    }

    fn closed_form_by_index(&self, t: usize, s: usize) -> Result<FunctionVector> {
        let (diag, off) = self.coefficients();
        if t == s {
            return Ok(self.taus[t].scaled(&diag));
        }
        let pair = &self.taus[t] + &self.taus[s];
        match off {
            OffDiagonal::Zero => Ok(FunctionVector::zeros(self.ctx.vertex_count())),
            OffDiagonal::PairSum { coefficient } => Ok(pair.scaled(&coefficient)),
            OffDiagonal::PairSumAndJoin { pair: c, join } => {
                let lattice = self.ctx.lattice();
                let atoms = lattice.atoms();
                let top = lattice.join(&atoms[t], &atoms[s]);
                let mut out = pair.scaled(&c);
                for (r, rho) in atoms.iter().enumerate() {
                    if lattice.leq(rho, &top) {
                        out.axpy(&join, &self.taus[r]);
                    }
                }
                Ok(out)
            }
            OffDiagonal::Observed { .. } => Err(Error::Unsupported(format!(
                "no closed form is asserted for distinct atoms when k = 1 ({})",
                lattice_label(self.ctx)
            ))),
        }
    }

    /// Checks every ordered atom pair against the closed form together with the
    /// supporting identities, and searches for a nonassociative triple.
    pub fn verify(&self) -> Result<NortonProductReport> {
        let lattice = self.ctx.lattice();
        let atoms = lattice.atoms();
        let m = atoms.len();
        let nv = self.ctx.vertex_count();
        let (diagonal, mut off_diagonal) = self.coefficients();

        let mut products = vec![Vec::with_capacity(m); m];
        for t in 0..m {
            for s in 0..m {
                products[t].push(self.product_unchecked(&self.taus[t], &self.taus[s])?);
            }
        }

        let mut pairs = Vec::with_capacity(m * m);
        let mut counterexample = None;
        let mut observed: Option<Option<Rational>> = None;
        for t in 0..m {
            for s in 0..m {
                let numeric = &products[t][s];
                let verified = match self.closed_form_by_index(t, s) {
                    Ok(closed) => {
                        let ok = *numeric == closed;
                        if !ok && counterexample.is_none() {
                            counterexample = Some(Counterexample {
                                tau: atoms[t].clone(),
                                sigma: atoms[s].clone(),
                                numeric: numeric.clone(),
                                closed_form: closed,
                            });
                        }
                        ok
                    }
                    Err(Error::Unsupported(_)) => {
                        let c = common_multiple(numeric, &(&self.taus[t] + &self.taus[s]));
                        observed = Some(match observed {
                            None => c,
                            Some(prev) if prev == c => prev,
                            Some(_) => None,
                        });
                        true
                    }
                    Err(e) => return Err(e),
                };
                pairs.push(PairResult { tau: t, sigma: s, verified });
            }
        }
        if let (OffDiagonal::Observed { coefficient }, Some(c)) = (&mut off_diagonal, observed) {
            *coefficient = c;
        }

        let mut join_projection = true;
        for t in 0..m {
            for s in 0..m {
                let join = lattice.join(&atoms[t], &atoms[s]);
                let mut expected = self.pi1_frame(&self.ctx.iota(&join))?;
                expected.axpy(&-&self.shift, &(&self.taus[t] + &self.taus[s]));
                join_projection &= products[t][s] == expected;
            }
        }

        let mut triple_inner_products = true;
        'outer: for t in 0..m {
            for s in 0..m {
                let ts = lattice.join(&atoms[t], &atoms[s]);
                let mask = self.ctx.iota_mask(self.ctx.id(&ts));
                for (r, rho) in atoms.iter().enumerate() {
                    let atom = self.ctx.iota_mask(ElementId { level: 1, index: r });
                    let lhs = atom.iter().zip(mask).filter(|(a, b)| **a && **b).count();
                    let rank = lattice.rank(&lattice.join(rho, &ts));
                    if Rational::from(lhs as u64) != Rational::from(lattice.a(rank)) {
                        triple_inner_products = false;
                        break 'outer;
                    }
                }
            }
        }

        let mut sum = FunctionVector::zeros(nv);
        for check in &self.taus {
            sum.axpy(&Rational::one(), check);
        }
        let atom_sum_zero = sum.is_zero();

        let mut frame_projection = true;
        for x in 0..nv {
            let iota = self.ctx.iota_id(ElementId {
                level: lattice.diameter(),
                index: x,
            });
            frame_projection &= self.pi1_frame(&iota)? == self.ctx.pi(1, &iota)?;
        }

        let sign_symmetry = match lattice.family() {
            Family::Hamming { .. } => Some(atoms.iter().enumerate().all(|(t, tau)| {
                let neg = tau.negated().expect("Hamming atoms are signed words");
                let n = self.atom_index(&neg).expect("negated atom exists");
                self.taus[n] == self.taus[t].scaled(&-Rational::one())
            })),
            _ => None,
        };

        let mut witness = None;
        let mut triples_checked = 0;
        'search: for t in 0..m {
            for s in 0..m {
                for r in 0..m {
                    triples_checked += 1;
                    let left = self.product_unchecked(&products[t][s], &self.taus[r])?;
                    let right = self.product_unchecked(&self.taus[t], &products[s][r])?;
                    if left != right {
                        witness = Some([t, s, r]);
                        break 'search;
                    }
                }
            }
        }

        let pairs_verified = pairs.iter().filter(|p| p.verified).count();
        let checks = SupportingChecks {
            join_projection,
            triple_inner_products,
            atom_sum_zero,
            frame_projection,
            sign_symmetry,
        };
        let verified = pairs_verified == pairs.len()
            && checks.join_projection
            && checks.triple_inner_products
            && checks.atom_sum_zero
            && checks.frame_projection
            && checks.sign_symmetry != Some(false);
        Ok(NortonProductReport {
            family: lattice.family(),
            atoms: m,
            diagonal,
            off_diagonal,
            all_zero: products.iter().flatten().all(FunctionVector::is_zero),
            pairs_checked: pairs.len(),
            pairs_verified,
            verified,
            pairs,
            checks,
            associativity: Associativity { triples_checked, witness },
            counterexample,
        })
    }
}

fn lattice_label(ctx: &SpectralContext<'_>) -> String {
    ctx.lattice().family().to_string()
}

/// `Some(c)` when `v = c w` (with `w` nonzero).
fn common_multiple(v: &FunctionVector, w: &FunctionVector) -> Option<Rational> {
    let x = (0..w.len()).find(|&x| !w.get(x).is_zero())?;
    let c = v.get(x) / w.get(x);
    (*v == w.scaled(&c)).then_some(c)
}

/// Builds the Norton algebra of an instance and verifies it.
pub fn verify_norton(ctx: &SpectralContext<'_>) -> Result<NortonProductReport> {
    Norton::new(ctx)?.verify()
}
