use crate::algebra::{rational_rank, BasisLabel, FunctionVector, Rational, RationalMatrix, SubspaceBasis};
use crate::error::{Error, Result};
use crate::lattice::{ElementId, GraphLattice, LatticeElement};

/// A built lattice together with everything derived from embedding it into
/// `Q^X`: indicator vectors, the distance matrix, and exact bases of the
/// filtration `Lambda_0 ⊆ ... ⊆ Lambda_d` and of the pieces `V_j`.
pub struct SpectralContext<'a> {
    lattice: &'a GraphLattice,
    /// `masks[l][i][x] = [levels[l][i] <= vertex x]`
    masks: Vec<Vec<Vec<bool>>>,
    /// Row-major `|X| x |X|` graph distances.
    dist: Vec<u8>,
    neighbors: Vec<Vec<usize>>,
    /// Indices of the atoms below each vertex.
    atoms_below: Vec<Vec<usize>>,
    lambda: Vec<SubspaceBasis>,
    eigen: Vec<SubspaceBasis>,
}

impl<'a> SpectralContext<'a> {
    pub fn new(lattice: &'a GraphLattice) -> Result<Self> {
        let vertices = lattice.vertices();
        let nv = vertices.len();
        let masks: Vec<Vec<Vec<bool>>> = lattice
            .levels()
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|z| vertices.iter().map(|x| lattice.leq(z, x)).collect())
                    .collect()
            })
            .collect();

        let mut dist = vec![0u8; nv * nv];
        for x in 0..nv {
            for y in x + 1..nv {
                let d = lattice.distance(&vertices[x], &vertices[y]) as u8;
                dist[x * nv + y] = d;
                dist[y * nv + x] = d;
            }
        }
        let neighbors = (0..nv)
            .map(|x| (0..nv).filter(|&y| dist[x * nv + y] == 1).collect())
            .collect();

        let atoms_below = match masks.get(1) {
            Some(atoms) if lattice.diameter() >= 1 => (0..nv)
                .map(|x| (0..atoms.len()).filter(|&i| atoms[i][x]).collect())
                .collect(),
            _ => vec![Vec::new(); nv],
        };
        let mut ctx = SpectralContext {
            lattice,
            atoms_below,
            masks,
            dist,
            neighbors,
            lambda: Vec::new(),
            eigen: Vec::new(),
        };
        ctx.build_filtration()?;
        Ok(ctx)
    }

    fn build_filtration(&mut self) -> Result<()> {
        let d = self.lattice.diameter();
        let nv = self.vertex_count();
        for j in 0..=d {
            let candidates = (0..self.lattice.level(j).len()).map(|i| FunctionVector::indicator(&self.masks[j][i]));
            let (basis, _) = SubspaceBasis::extract(nv, candidates, BasisLabel::Lambda(j), None)?;
            if j > 0 {
                let prev = &self.lambda[j - 1];
                let mut stacked = basis.vectors().to_vec();
                stacked.extend_from_slice(prev.vectors());
                if rational_rank(&stacked) != basis.dim() {
                    return Err(Error::verification(
                        "filtration",
                        format!("span of level {} is not contained in span of level {j}", j - 1),
                    ));
                }
            }
            self.lambda.push(basis);
        }
        if self.lambda[d].dim() != nv {
            return Err(Error::verification(
                "filtration",
                format!("top filtration space has dimension {} < {nv}", self.lambda[d].dim()),
            ));
        }

        for j in 0..=d {
            let basis = if j == 0 {
                SubspaceBasis::from_independent(nv, self.lambda[0].vectors().to_vec(), BasisLabel::Eigen(0))?
            } else {
                let expected = self.lambda[j].dim() - self.lambda[j - 1].dim();
                let prev = &self.lambda[j - 1];
                let masks = &self.masks[j];
                let candidates = masks.iter().map(|m| {
                    let v = FunctionVector::indicator(m);
                    let p = prev.project(&v).expect("lengths agree");
                    &v - &p
                });
                let (basis, _) = SubspaceBasis::extract(nv, candidates, BasisLabel::Eigen(j), Some(expected))?;
                if basis.dim() != expected {
                    return Err(Error::verification(
                        "filtration",
                        format!("V_{j} has dimension {} but the filtration step is {expected}", basis.dim()),
                    ));
                }
                basis
            };
            if basis.dim() == 0 {
                return Err(Error::verification("filtration", format!("V_{j} is zero")));
            }
            self.eigen.push(basis);
        }
        Ok(())
    }

    pub fn lattice(&self) -> &'a GraphLattice {
        self.lattice
    }

    pub fn diameter(&self) -> usize {
        self.lattice.diameter()
    }

    pub fn vertex_count(&self) -> usize {
        self.lattice.vertex_count()
    }

    pub(crate) fn id(&self, z: &LatticeElement) -> ElementId {
        self.lattice.id_of(z).expect("element does not belong to this lattice")
    }

    pub fn iota_mask(&self, id: ElementId) -> &[bool] {
        &self.masks[id.level][id.index]
    }

    /// `iota_z(x) = [z <= x]` over the vertices.
    pub fn iota(&self, z: &LatticeElement) -> FunctionVector {
        self.iota_id(self.id(z))
    }

    pub fn iota_id(&self, id: ElementId) -> FunctionVector {
        FunctionVector::indicator(self.iota_mask(id))
    }

    pub fn vertex_distance(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.vertex_count() + y] as usize
    }

    pub fn atoms_below(&self, x: usize) -> &[usize] {
        &self.atoms_below[x]
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.neighbors[x]
    }

    fn check_len(&self, f: &FunctionVector) -> Result<()> {
        if f.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: self.vertex_count(),
                actual: f.len(),
            });
        }
        Ok(())
    }

    /// `(A f)(x) = sum of f over the neighbours of x`.
    pub fn adjacency_apply(&self, f: &FunctionVector) -> Result<FunctionVector> {
        self.check_len(f)?;
        Ok(FunctionVector::new(
            self.neighbors
                .iter()
                .map(|nb| nb.iter().map(|&y| f.get(y)).sum())
                .collect(),
        ))
    }

    /// `(A_i f)(x) = sum of f over the vertices at distance i from x`.
    pub fn distance_apply(&self, i: usize, f: &FunctionVector) -> Result<FunctionVector> {
        self.check_len(f)?;
        let nv = self.vertex_count();
        Ok(FunctionVector::new(
            (0..nv)
                .map(|x| {
                    (0..nv)
                        .filter(|&y| self.dist[x * nv + y] as usize == i)
                        .map(|y| f.get(y))
                        .sum()
                })
                .collect(),
        ))
    }

    /// The 0/1 distance-`i` matrix `A_i`.
    pub fn adjacency_matrix(&self, i: usize) -> RationalMatrix {
        let nv = self.vertex_count();
        RationalMatrix::from_fn(nv, nv, |x, y| {
            if self.dist[x * nv + y] as usize == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// `p_{ij}^h`: the number of `z` with `d(x,z) = i`, `d(y,z) = j` for a pair at
    /// distance `h`, after checking that every such pair gives the same count.
    pub fn intersection_number(&self, i: usize, j: usize, h: usize) -> Result<usize> {
        let d = self.diameter();
        if i > d || j > d || h > d {
            return Err(Error::InvalidParameters(format!("distances ({i},{j},{h}) exceed diameter {d}")));
        }
        let nv = self.vertex_count();
        let mut value = None;
        for x in 0..nv {
            for y in 0..nv {
                if self.vertex_distance(x, y) != h {
                    continue;
                }
                let count = (0..nv)
                    .filter(|&z| self.vertex_distance(x, z) == i && self.vertex_distance(y, z) == j)
                    .count();
                match value {
                    None => value = Some(count),
                    Some(v) if v != count => {
                        return Err(Error::verification(
                            "spectrum.distance_regular",
                            format!("p_{{{i},{j}}}^{h} is {v} for one pair and {count} for ({x},{y})"),
                        ))
                    }
                    _ => {}
                }
            }
        }
        Ok(value.unwrap_or(0))
    }

    /// All intersection numbers, indexed `[h][i][j]`, with the same constancy check.
    pub fn intersection_numbers(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let d = self.diameter();
        let nv = self.vertex_count();
        let mut table: Vec<Option<Vec<usize>>> = vec![None; d + 1];
        let mut counts = vec![0usize; (d + 1) * (d + 1)];
        for x in 0..nv {
            for y in 0..nv {
                let h = self.vertex_distance(x, y);
                counts.iter_mut().for_each(|c| *c = 0);
                for z in 0..nv {
                    counts[self.vertex_distance(x, z) * (d + 1) + self.vertex_distance(y, z)] += 1;
                }
                match &table[h] {
                    None => table[h] = Some(counts.clone()),
                    Some(prev) if *prev != counts => {
                        return Err(Error::verification(
                            "spectrum.distance_regular",
                            format!("intersection numbers for distance {h} differ at pair ({x},{y})"),
                        ))
                    }
                    _ => {}
                }
            }
        }
        Ok(table
            .into_iter()
            .map(|t| {
                let t = t.unwrap_or_else(|| vec![0; (d + 1) * (d + 1)]);
                t.chunks(d + 1).map(<[usize]>::to_vec).collect()
            })
            .collect())
    }

    /// `w^*`: sum of the indicator vectors of the upper covers of `w`.
    pub fn star_upper(&self, w: &LatticeElement) -> FunctionVector {
        let id = self.id(w);
        let mut acc = FunctionVector::zeros(self.vertex_count());
        for c in self.lattice.upper_cover_ids(id) {
            acc.axpy(&Rational::one(), &self.iota_id(c));
        }
        acc
    }

    /// `w_*`: sum of the indicator vectors of the lower covers of `w`.
    pub fn star_lower(&self, w: &LatticeElement) -> FunctionVector {
        let id = self.id(w);
        let mut acc = FunctionVector::zeros(self.vertex_count());
        for c in self.lattice.lower_cover_ids(id) {
            acc.axpy(&Rational::one(), &self.iota_id(c));
        }
        acc
    }

    /// `Phi_w(x) = [rank(w ∧ x) = rank(w) - 1]`, computed from meets.
    pub fn phi(&self, w: &LatticeElement) -> FunctionVector {
        let j = self.lattice.rank(w);
        let mask: Vec<bool> = self
            .lattice
            .vertices()
            .iter()
            .map(|x| j >= 1 && self.lattice.rank(&self.lattice.meet(w, x)) == j - 1)
            .collect();
        FunctionVector::indicator(&mask)
    }

    /// Maximal independent subset of `{iota_u : u in Omega_j}`, in canonical order.
    pub fn lambda_basis(&self, j: usize) -> &SubspaceBasis {
        &self.lambda[j]
    }

    /// Basis of `V_j = Lambda_j ∩ Lambda_{j-1}^⊥`.
    pub fn v_basis(&self, j: usize) -> &SubspaceBasis {
        &self.eigen[j]
    }

    /// Orthogonal projection onto `V_j`, as the difference of the projections
    /// onto `Lambda_j` and `Lambda_{j-1}`.
    pub fn pi(&self, j: usize, h: &FunctionVector) -> Result<FunctionVector> {
        let upper = self.lambda[j].project(h)?;
        if j == 0 {
            return Ok(upper);
        }
        let lower = self.lambda[j - 1].project(h)?;
        Ok(&upper - &lower)
    }
}
