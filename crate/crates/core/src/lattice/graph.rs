use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Pow, Zero};
use serde::Serialize;

use super::element::LatticeElement;
use super::family::{Family, SizeCaps};
use crate::algebra::{binom, q_binom, GFMatrix};
use crate::error::Result;

/// Position of an element: its level (= rank) and its index within the
/// canonically ordered level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementId {
    pub level: usize,
    pub index: usize,
}

/// A fully enumerated lattice `Omega_0 ∪ ... ∪ Omega_{d+1}` for one graph.
///
/// Levels are in canonical order, so vertex `i` is `levels[d][i]`.
#[derive(Clone, Debug)]
pub struct GraphLattice {
    family: Family,
    levels: Vec<Vec<LatticeElement>>,
    index: HashMap<LatticeElement, ElementId>,
    /// `up[l][i]`: indices in level `l + 1` of the upper covers of `levels[l][i]`.
    up: Vec<Vec<Vec<usize>>>,
    /// `down[l][i]`: indices in level `l - 1` of the lower covers.
    down: Vec<Vec<Vec<usize>>>,
}

fn combinations(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k as usize {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len() as u32;
        for v in start..=n {
            if n - v + 1 < remaining {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn johnson_levels(n: u32, k: u32) -> Vec<Vec<LatticeElement>> {
    (0..=k)
        .map(|l| combinations(n, l).into_iter().map(LatticeElement::Subset).collect())
        .collect()
}

fn hamming_levels(n: u32) -> Vec<Vec<LatticeElement>> {
    let mut levels = vec![Vec::new(); n as usize + 1];
    let total = 3usize.pow(n);
    // Odometer over {0,1,2}^n with coordinate 1 most significant: lexicographic order.
    let mut word = vec![0u8; n as usize];
    for _ in 0..total {
        let plus: Vec<u32> = (0..n).filter(|&i| word[i as usize] == 0).map(|i| i + 1).collect();
        let minus: Vec<u32> = (0..n).filter(|&i| word[i as usize] == 1).map(|i| i + 1).collect();
        levels[plus.len() + minus.len()].push(LatticeElement::SignedWord { plus, minus });
        for pos in (0..n as usize).rev() {
            word[pos] += 1;
            if word[pos] < 3 {
                break;
            }
            word[pos] = 0;
        }
    }
    levels
}

fn grassmann_level(n: u32, dim: u32, q: u32) -> Vec<LatticeElement> {
    let cols = n as usize;
    let mut out: Vec<GFMatrix> = Vec::new();
    for pivots in combinations(n, dim) {
        let pivots: Vec<usize> = pivots.iter().map(|&p| p as usize - 1).collect();
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..cols).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let combos = (q as usize).pow(free.len() as u32);
        for mut code in 0..combos {
            let mut entries = vec![0u32; dim as usize * cols];
            for (r, &pc) in pivots.iter().enumerate() {
                entries[r * cols + pc] = 1;
            }
            for &(r, c) in free.iter().rev() {
                entries[r * cols + c] = (code % q as usize) as u32;
                code /= q as usize;
            }
            out.push(GFMatrix::from_raw(q, dim as usize, cols, entries));
        }
    }
    out.sort_by(|a, b| a.raw_entries().cmp(b.raw_entries()));
    out.into_iter().map(LatticeElement::Subspace).collect()
}

impl GraphLattice {
    /// Builds the lattice with the default size caps.
    pub fn build(family: Family) -> Result<Self> {
        Self::build_with_caps(family, SizeCaps::default())
    }

    pub fn build_with_caps(family: Family, caps: SizeCaps) -> Result<Self> {
        family.validate()?;
        caps.check(&family)?;
        let mut levels = match family {
            Family::Johnson { n, k } => johnson_levels(n, k),
            Family::Grassmann { n, k, q } => (0..=k).map(|l| grassmann_level(n, l, q)).collect(),
            Family::Hamming { n } => hamming_levels(n),
        };
        levels.push(vec![LatticeElement::Top]);

        let mut index = HashMap::new();
        for (level, elems) in levels.iter().enumerate() {
            for (i, e) in elems.iter().enumerate() {
                index.insert(e.clone(), ElementId { level, index: i });
            }
        }

        let mut lattice = GraphLattice {
            family,
            levels,
            index,
            up: Vec::new(),
            down: Vec::new(),
        };
        lattice.compute_covers();
        Ok(lattice)
    }

    fn compute_covers(&mut self) {
        let top = self.levels.len() - 1;
        let mut up: Vec<Vec<Vec<usize>>> = Vec::with_capacity(self.levels.len());
        let mut down: Vec<Vec<Vec<usize>>> = self.levels.iter().map(|l| vec![Vec::new(); l.len()]).collect();
        for l in 0..self.levels.len() {
            let mut level_up = Vec::with_capacity(self.levels[l].len());
            for (i, w) in self.levels[l].iter().enumerate() {
                let covers: Vec<usize> = if l == top {
                    Vec::new()
                } else {
                    self.levels[l + 1]
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| self.leq(w, v))
                        .map(|(j, _)| j)
                        .collect()
                };
                for &j in &covers {
                    down[l + 1][j].push(i);
                }
                level_up.push(covers);
            }
            up.push(level_up);
        }
        self.up = up;
        self.down = down;
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn diameter(&self) -> usize {
        self.family.diameter()
    }

    /// All levels `Omega_0 .. Omega_{d+1}`.
    pub fn levels(&self) -> &[Vec<LatticeElement>] {
        &self.levels
    }

    pub fn level(&self, l: usize) -> &[LatticeElement] {
        &self.levels[l]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn vertices(&self) -> &[LatticeElement] {
        &self.levels[self.diameter()]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    pub fn atoms(&self) -> &[LatticeElement] {
        &self.levels[1]
    }

    pub fn bottom(&self) -> &LatticeElement {
        &self.levels[0][0]
    }

    pub fn element(&self, id: ElementId) -> &LatticeElement {
        &self.levels[id.level][id.index]
    }

    pub fn id_of(&self, e: &LatticeElement) -> Option<ElementId> {
        self.index.get(e).copied()
    }

    /// Index of a vertex in the canonical vertex order.
    pub fn vertex_index(&self, x: &LatticeElement) -> Option<usize> {
        self.id_of(x).filter(|id| id.level == self.diameter()).map(|id| id.index)
    }

    pub fn rank(&self, u: &LatticeElement) -> usize {
        u.finite_rank().unwrap_or(self.diameter() + 1)
    }

    pub fn leq(&self, u: &LatticeElement, w: &LatticeElement) -> bool {
        use LatticeElement::*;
        match (u, w) {
            (_, Top) => true,
            (Top, _) => false,
            (Subset(a), Subset(b)) => a.iter().all(|x| b.binary_search(x).is_ok()),
            (Subspace(a), Subspace(b)) => a.rows() <= b.rows() && b.row_space_contains(a),
            (SignedWord { plus: pa, minus: ma }, SignedWord { plus: pb, minus: mb }) => {
                pa.iter().all(|x| pb.binary_search(x).is_ok()) && ma.iter().all(|x| mb.binary_search(x).is_ok())
            }
            _ => panic!("comparing elements of different lattice families"),
        }
    }

    pub fn meet(&self, u: &LatticeElement, w: &LatticeElement) -> LatticeElement {
        use LatticeElement::*;
        match (u, w) {
            (Top, x) | (x, Top) => x.clone(),
            (Subset(a), Subset(b)) => Subset(sorted_intersection(a, b)),
            (Subspace(a), Subspace(b)) => Subspace(a.intersect(b)),
            (SignedWord { plus: pa, minus: ma }, SignedWord { plus: pb, minus: mb }) => SignedWord {
                plus: sorted_intersection(pa, pb),
                minus: sorted_intersection(ma, mb),
            },
            _ => panic!("meet of elements of different lattice families"),
        }
    }

    pub fn join(&self, u: &LatticeElement, w: &LatticeElement) -> LatticeElement {
        use LatticeElement::*;
        let d = self.diameter();
        match (u, w) {
            (Top, _) | (_, Top) => Top,
            (Subset(a), Subset(b)) => {
                let union = sorted_union(a, b);
                if union.len() <= d {
                    Subset(union)
                } else {
                    Top
                }
            }
            (Subspace(a), Subspace(b)) => {
                let span = a.span_with(b);
                if span.rows() <= d {
                    Subspace(span)
                } else {
                    Top
                }
            }
            (SignedWord { plus: pa, minus: ma }, SignedWord { plus: pb, minus: mb }) => {
                let plus = sorted_union(pa, pb);
                let minus = sorted_union(ma, mb);
                if sorted_intersection(&plus, &minus).is_empty() {
                    SignedWord { plus, minus }
                } else {
                    Top
                }
            }
            _ => panic!("join of elements of different lattice families"),
        }
    }

    /// `w` covers `u`: `u < w` with ranks differing by one.
    pub fn covers(&self, w: &LatticeElement, u: &LatticeElement) -> bool {
        self.rank(w) == self.rank(u) + 1 && self.leq(u, w)
    }

    pub fn upper_cover_ids(&self, id: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.up[id.level][id.index].iter().map(move |&index| ElementId {
            level: id.level + 1,
            index,
        })
    }

    pub fn lower_cover_ids(&self, id: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.down[id.level][id.index].iter().map(move |&index| ElementId {
            level: id.level - 1,
            index,
        })
    }

    pub fn upper_covers(&self, w: &LatticeElement) -> Vec<LatticeElement> {
        let id = self.id_of(w).expect("element not in lattice");
        self.upper_cover_ids(id).map(|c| self.element(c).clone()).collect()
    }

    pub fn lower_covers(&self, w: &LatticeElement) -> Vec<LatticeElement> {
        let id = self.id_of(w).expect("element not in lattice");
        self.lower_cover_ids(id).map(|c| self.element(c).clone()).collect()
    }

    /// Closed form for `a_j^l`: the number of level-`l` elements below (`l <= j`)
    /// or above (`l >= j`) any fixed level-`j` element. Zero for negative levels.
    pub fn a_level_count(&self, j: i64, l: i64) -> BigInt {
        level_count_closed_form(&self.family, j, l)
    }

    /// `a_j`: vertices above a level-`j` element; `a_{d+1} = 0`.
    pub fn a(&self, j: usize) -> BigInt {
        let d = self.diameter();
        if j > d {
            BigInt::zero()
        } else {
            self.a_level_count(j as i64, d as i64)
        }
    }

    /// Graph distance between two vertices, `d - rank(x ∧ y)`.
    pub fn distance(&self, x: &LatticeElement, y: &LatticeElement) -> usize {
        self.diameter() - self.rank(&self.meet(x, y))
    }

    pub fn export(&self) -> LatticeExport<'_> {
        LatticeExport {
            family: self.family,
            diameter: self.diameter(),
            level_sizes: self.level_sizes(),
            levels: &self.levels,
            vertex_index: self.vertices(),
        }
    }
}

pub fn level_count_closed_form(family: &Family, j: i64, l: i64) -> BigInt {
    if j < 0 || l < 0 {
        return BigInt::zero();
    }
    let n = family.n() as i64;
    if l <= j {
        match *family {
            Family::Grassmann { q, .. } => q_binom(j, l, q as u64),
            _ => binom(j, l),
        }
    } else {
        match *family {
            Family::Johnson { .. } => binom(n - j, l - j),
            Family::Grassmann { q, .. } => q_binom(n - j, l - j, q as u64),
            Family::Hamming { .. } => Pow::pow(&BigInt::from(2), (l - j) as u64) * binom(n - j, l - j),
        }
    }
}

fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn sorted_union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Serialized form of a lattice (`lattice.json`).
#[derive(Serialize)]
pub struct LatticeExport<'a> {
    #[serde(flatten)]
    pub family: Family,
    pub diameter: usize,
    pub level_sizes: Vec<usize>,
    pub levels: &'a [Vec<LatticeElement>],
    /// Vertices in index order: position `i` holds vertex `i`.
    pub vertex_index: &'a [LatticeElement],
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> LatticeElement {
        LatticeElement::Subset(v.to_vec())
    }

    fn word(plus: &[u32], minus: &[u32]) -> LatticeElement {
        LatticeElement::SignedWord {
            plus: plus.to_vec(),
            minus: minus.to_vec(),
        }
    }

    fn space(rows: &[Vec<i64>]) -> LatticeElement {
        LatticeElement::Subspace(GFMatrix::from_rows(2, 4, rows).unwrap().rref())
    }

    #[test]
    fn level_sizes_of_small_instances() {
        let j = GraphLattice::build(Family::Johnson { n: 5, k: 2 }).unwrap();
        assert_eq!(j.level_sizes(), vec![1, 5, 10, 1]);
        let h = GraphLattice::build(Family::Hamming { n: 3 }).unwrap();
        assert_eq!(h.level_sizes(), vec![1, 6, 12, 8, 1]);
        let g = GraphLattice::build(Family::Grassmann { n: 4, k: 2, q: 2 }).unwrap();
        assert_eq!(g.level_sizes(), vec![1, 15, 35, 1]);
    }

    #[test]
    fn canonical_orders() {
        let j = GraphLattice::build(Family::Johnson { n: 4, k: 2 }).unwrap();
        assert_eq!(j.vertices()[..3], [set(&[1, 2]), set(&[1, 3]), set(&[1, 4])]);
        let h = GraphLattice::build(Family::Hamming { n: 2 }).unwrap();
        assert_eq!(
            h.vertices(),
            [word(&[1, 2], &[]), word(&[1], &[2]), word(&[2], &[1]), word(&[], &[1, 2])]
        );
        assert_eq!(h.atoms(), [word(&[1], &[]), word(&[], &[1]), word(&[2], &[]), word(&[], &[2])]);
        let h4 = GraphLattice::build(Family::Hamming { n: 4 }).unwrap();
        for level in h4.levels().iter().take(5) {
            for pair in level.windows(2) {
                assert!(pair[0].ternary_key(4) < pair[1].ternary_key(4));
            }
        }
        let g = GraphLattice::build(Family::Grassmann { n: 4, k: 2, q: 2 }).unwrap();
        for level in g.levels() {
            for pair in level.windows(2) {
                let (LatticeElement::Subspace(a), LatticeElement::Subspace(b)) = (&pair[0], &pair[1]) else {
                    continue;
                };
                assert!(a.raw_entries() < b.raw_entries());
            }
        }
        assert!(matches!(&g.levels()[0][0], LatticeElement::Subspace(m) if m.rows() == 0 && m.cols() == 4));
    }

    #[test]
    fn meets_and_joins() {
        let j = GraphLattice::build(Family::Johnson { n: 5, k: 2 }).unwrap();
        assert_eq!(j.meet(&set(&[1, 2]), &set(&[2, 3])), set(&[2]));
        assert_eq!(j.join(&set(&[1]), &set(&[2])), set(&[1, 2]));
        assert_eq!(j.join(&set(&[1, 2]), &set(&[2, 3])), LatticeElement::Top);
        assert_eq!(j.meet(&set(&[1, 2]), &LatticeElement::Top), set(&[1, 2]));

        let h = GraphLattice::build(Family::Hamming { n: 3 }).unwrap();
        assert_eq!(h.meet(&word(&[1], &[2]), &word(&[1], &[3])), word(&[1], &[]));
        assert_eq!(h.join(&word(&[1], &[]), &word(&[], &[1])), LatticeElement::Top);

        let g = GraphLattice::build(Family::Grassmann { n: 4, k: 2, q: 2 }).unwrap();
        let e12 = space(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let e23 = space(&[vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        assert_eq!(g.meet(&e12, &e23), space(&[vec![0, 1, 0, 0]]));
        assert_eq!(g.join(&e12, &e23), LatticeElement::Top);
        assert_eq!(g.rank(&e12), 2);
    }

    #[test]
    fn ranks_and_covers() {
        let j = GraphLattice::build(Family::Johnson { n: 5, k: 2 }).unwrap();
        assert_eq!(j.rank(j.bottom()), 0);
        assert!(j.vertices().iter().all(|x| j.rank(x) == 2));
        assert_eq!(j.rank(&LatticeElement::Top), 3);
        assert!(j.leq(&set(&[1]), &set(&[1, 3])));
        assert!(!j.leq(&set(&[2]), &set(&[1, 3])));
        assert_eq!(j.upper_covers(&set(&[1])).len(), 4);
        assert!(j.covers(&set(&[1, 3]), &set(&[1])));
        assert!(!j.covers(&set(&[1, 3]), &set(&[])));

        let h = GraphLattice::build(Family::Hamming { n: 3 }).unwrap();
        for x in h.vertices() {
            assert_eq!(h.lower_covers(x).len(), 3);
            assert_eq!(h.upper_covers(x), vec![LatticeElement::Top]);
        }
        assert_eq!(h.lower_covers(&LatticeElement::Top).len(), 8);
    }

    #[test]
    fn closed_form_counts() {
        let j = GraphLattice::build(Family::Johnson { n: 5, k: 2 }).unwrap();
        assert_eq!(level_count_closed_form(&Family::Johnson { n: 7, k: 3 }, 3, 2), BigInt::from(3));
        assert_eq!(j.a(3), BigInt::zero());
        let h = GraphLattice::build(Family::Hamming { n: 3 }).unwrap();
        assert_eq!(h.a_level_count(1, 3), BigInt::from(4));
        let g = GraphLattice::build(Family::Grassmann { n: 4, k: 2, q: 2 }).unwrap();
        // 2-spaces of GF(2)^4 through a fixed line: lines of the quotient GF(2)^3
        assert_eq!(g.a(1), BigInt::from(7));
        assert_eq!(g.a(1) * 5, BigInt::from(g.vertex_count()));
        assert_eq!(g.a_level_count(1, -1), BigInt::zero());
    }

    #[test]
    fn distances() {
        let j = GraphLattice::build(Family::Johnson { n: 5, k: 2 }).unwrap();
        assert_eq!(j.distance(&set(&[1, 2]), &set(&[1, 2])), 0);
        assert_eq!(j.distance(&set(&[1, 2]), &set(&[1, 3])), 1);
        assert_eq!(j.distance(&set(&[1, 2]), &set(&[3, 4])), 2);
        let h = GraphLattice::build(Family::Hamming { n: 3 }).unwrap();
        assert_eq!(h.distance(&word(&[1, 2, 3], &[]), &word(&[3], &[1, 2])), 2);
    }

    #[test]
    fn rejects_bad_parameters() {
        use crate::error::Error;
        assert!(matches!(
            GraphLattice::build(Family::Johnson { n: 3, k: 2 }),
            Err(Error::InvalidParameters(_))
        ));
        let tiny = SizeCaps {
            max_vertices: 5,
            max_elements: 100,
        };
        assert!(matches!(
            GraphLattice::build_with_caps(Family::Johnson { n: 5, k: 2 }, tiny),
            Err(Error::SizeCap(_))
        ));
    }

    #[test]
    fn every_element_well_formed_and_indexed() {
        for fam in [
            Family::Johnson { n: 6, k: 3 },
            Family::Hamming { n: 3 },
            Family::Grassmann { n: 4, k: 2, q: 3 },
        ] {
            let lat = GraphLattice::build(fam).unwrap();
            for (l, level) in lat.levels().iter().enumerate() {
                for (i, e) in level.iter().enumerate() {
                    assert!(e.is_well_formed(fam.n()));
                    assert_eq!(lat.rank(e), l);
                    assert_eq!(lat.id_of(e), Some(ElementId { level: l, index: i }));
                }
            }
        }
    }
}
