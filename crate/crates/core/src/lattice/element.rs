use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::GFMatrix;

/// An element of one of the three lattices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticeElement {
    /// Sorted subset of `{1..n}` (Johnson).
    Subset(Vec<u32>),
    /// Subspace of `GF(q)^n` in canonical RREF form; the zero subspace has no rows (Grassmann).
    Subspace(GFMatrix),
    /// Partial signed word: coordinates set to `+1` and to `-1`, disjoint (Hamming).
    SignedWord { plus: Vec<u32>, minus: Vec<u32> },
    /// The adjoined maximum.
    Top,
}

impl LatticeElement {
    pub fn is_top(&self) -> bool {
        matches!(self, LatticeElement::Top)
    }

    /// Rank of a non-top element; `None` for `Top`, whose rank depends on the lattice.
    pub fn finite_rank(&self) -> Option<usize> {
        match self {
            LatticeElement::Subset(s) => Some(s.len()),
            LatticeElement::Subspace(m) => Some(m.rows()),
            LatticeElement::SignedWord { plus, minus } => Some(plus.len() + minus.len()),
            LatticeElement::Top => None,
        }
    }

    /// Checks the per-variant representation invariants.
    pub fn is_well_formed(&self, n: u32) -> bool {
        let strictly_sorted = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&i| (1..=n).contains(&i));
        match self {
            LatticeElement::Subset(s) => strictly_sorted(s),
            LatticeElement::Subspace(m) => m.cols() == n as usize && m.is_rref(),
            LatticeElement::SignedWord { plus, minus } => {
                strictly_sorted(plus) && strictly_sorted(minus) && plus.iter().all(|i| !minus.contains(i))
            }
            LatticeElement::Top => true,
        }
    }

    /// The signed word with every sign flipped.
    pub fn negated(&self) -> Option<LatticeElement> {
        match self {
            LatticeElement::SignedWord { plus, minus } => Some(LatticeElement::SignedWord {
                plus: minus.clone(),
                minus: plus.clone(),
            }),
            _ => None,
        }
    }

    /// Ternary word for a Hamming element of length `n`: 0 for `+1`, 1 for `-1`,
    /// 2 for an unset coordinate. Sorting by this gives the canonical order.
    #[cfg(test)]
    pub(crate) fn ternary_key(&self, n: u32) -> Vec<u8> {
        match self {
            LatticeElement::SignedWord { plus, minus } => (1..=n)
                .map(|i| {
                    if plus.contains(&i) {
                        0
                    } else if minus.contains(&i) {
                        1
                    } else {
                        2
                    }
                })
                .collect(),
            _ => Vec::new(),
        }
    }
}

impl Serialize for LatticeElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            LatticeElement::Subset(s) => s.serialize(serializer),
            LatticeElement::Subspace(m) => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("modulus", &m.modulus())?;
                map.serialize_entry("rref", &m.row_vecs())?;
                map.end()
            }
            LatticeElement::SignedWord { plus, minus } => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("plus", plus)?;
                map.serialize_entry("minus", minus)?;
                map.end()
            }
            LatticeElement::Top => serializer.serialize_str("top"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_formedness() {
        assert!(LatticeElement::Subset(vec![1, 3]).is_well_formed(3));
        assert!(!LatticeElement::Subset(vec![3, 1]).is_well_formed(3));
        assert!(!LatticeElement::Subset(vec![0]).is_well_formed(3));
        let clash = LatticeElement::SignedWord {
            plus: vec![1],
            minus: vec![1],
        };
        assert!(!clash.is_well_formed(2));
    }

    #[test]
    fn serialized_forms() {
        let w = LatticeElement::SignedWord {
            plus: vec![1],
            minus: vec![3],
        };
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"plus":[1],"minus":[3]}"#);
        let m = GFMatrix::from_rows(2, 3, &[vec![1, 0, 1]]).unwrap();
        assert_eq!(
            serde_json::to_string(&LatticeElement::Subspace(m)).unwrap(),
            r#"{"modulus":2,"rref":[[1,0,1]]}"#
        );
        assert_eq!(serde_json::to_string(&LatticeElement::Top).unwrap(), r#""top""#);
        assert_eq!(w.ternary_key(3), vec![0, 2, 1]);
    }
}
