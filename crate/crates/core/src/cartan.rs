//! Cartan matrices, the finite type catalog, and derived Coxeter matrices.
//!
//! The catalog uses Bourbaki numbering throughout. For `Dn` the branch node
//! is `n-2` in Bourbaki convention, which for `D4` makes node 2 the one bonded
//! to all three others. The paper-facing conventions that matter (`m(s_i, s_2) = 3`
//! for `i = 1, 3, 4` in `D4`; the short root of `C2` attached to `s_1`) are
//! pinned by unit tests.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Maximum supported rank. Indexing, packing and the element cap are all sized
/// for this bound; every catalog type fits well inside it.
pub const MAX_RANK: usize = 8;

/// Integer Cartan matrix of a (claimed) finite crystallographic type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i32>, // row-major
}

impl CartanMatrix {
    /// Validates and wraps a row-major rank×rank integer matrix.
    pub fn new(rank: usize, entries: Vec<i32>) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::MalformedCartan(format!(
                "rank must be between 1 and {MAX_RANK}, got {rank}"
            )));
        }
        if entries.len() != rank * rank {
            return Err(Error::MalformedCartan(format!(
                "expected {} entries for rank {rank}, got {}",
                rank * rank,
                entries.len()
            )));
        }
        let m = CartanMatrix { rank, entries };
        for i in 0..rank {
            if m.get(i, i) != 2 {
                return Err(Error::MalformedCartan(format!(
                    "diagonal entry ({i},{i}) must be 2"
                )));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let a = m.get(i, j);
                if a > 0 {
                    return Err(Error::MalformedCartan(format!(
                        "off-diagonal entry ({i},{j}) must be <= 0"
                    )));
                }
                if (a == 0) != (m.get(j, i) == 0) {
                    return Err(Error::MalformedCartan(format!(
                        "entries ({i},{j}) and ({j},{i}) must vanish together"
                    )));
                }
                // Bond products 0..3 give m = 2, 3, 4, 6. Anything larger is
                // affine or indefinite.
                if a * m.get(j, i) > 3 {
                    return Err(Error::NonFiniteType);
                }
            }
        }
        Ok(m)
    }

    /// Builds the Cartan matrix of a catalog type from its label, e.g. `"D4"`.
    pub fn from_label(label: &str) -> Result<Self> {
        let mut chars = label.chars();
        let family = chars.next().ok_or_else(|| Error::UnknownType(label.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(label.to_string()))?;
        let supported = match family {
            'A' => (1..=7).contains(&rank),
            'B' | 'C' => (2..=4).contains(&rank),
            'D' => (4..=6).contains(&rank),
            'E' => rank == 6,
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if !supported {
            return Err(Error::UnknownType(label.to_string()));
        }

        let mut entries = vec![0i32; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 2;
        }
        let mut bond = |i: usize, j: usize, down: i32, up: i32| {
            entries[i * rank + j] = down;
            entries[j * rank + i] = up;
        };
        match family {
            'A' => {
                for i in 0..rank - 1 {
                    bond(i, i + 1, -1, -1);
                }
            }
            'B' => {
                // last simple root short
                for i in 0..rank - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(rank - 2, rank - 1, -1, -2);
            }
            'C' => {
                // last simple root long
                for i in 0..rank - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(rank - 2, rank - 1, -2, -1);
            }
            'D' => {
                for i in 0..rank - 2 {
                    bond(i, i + 1, -1, -1);
                }
                bond(rank - 3, rank - 1, -1, -1);
            }
            'E' => {
                bond(0, 2, -1, -1);
                bond(2, 3, -1, -1);
                bond(3, 4, -1, -1);
                bond(4, 5, -1, -1);
                bond(1, 3, -1, -1);
            }
            'F' => {
                bond(0, 1, -1, -1);
                bond(1, 2, -1, -2);
                bond(2, 3, -1, -1);
            }
            'G' => {
                bond(0, 1, -3, -1);
            }
            _ => unreachable!(),
        }
        CartanMatrix::new(rank, entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.rank + j]
    }

    /// Order m(s_i, s_j) of the product of two generators.
    pub fn coxeter_order(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        match self.get(i, j) * self.get(j, i) {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => unreachable!("rejected at construction"),
        }
    }

    /// Full rank×rank Coxeter matrix, row-major.
    pub fn coxeter_matrix(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.rank * self.rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                m[i * self.rank + j] = self.coxeter_order(i, j);
            }
        }
        m
    }

    /// All off-diagonal bond orders are 2 or 3.
    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank).all(|i| (0..self.rank).all(|j| i == j || self.coxeter_order(i, j) <= 3))
    }
}

/// Labels of every catalog type, in a fixed deterministic order.
pub fn catalog_labels() -> Vec<&'static str> {
    vec![
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
        "D6", "E6", "F4", "G2",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_labels_all_build() {
        for label in catalog_labels() {
            let c = CartanMatrix::from_label(label).unwrap();
            assert!(c.rank() >= 1);
        }
    }

    #[test]
    fn d4_branch_node_is_2() {
        let c = CartanMatrix::from_label("D4").unwrap();
        // 1-based: m(s_i, s_2) = 3 for i = 1, 3, 4 and m(s_i, s_j) = 2 otherwise.
        assert_eq!(c.coxeter_order(0, 1), 3);
        assert_eq!(c.coxeter_order(2, 1), 3);
        assert_eq!(c.coxeter_order(3, 1), 3);
        assert_eq!(c.coxeter_order(0, 2), 2);
        assert_eq!(c.coxeter_order(0, 3), 2);
        assert_eq!(c.coxeter_order(2, 3), 2);
    }

    #[test]
    fn c2_has_short_first_root() {
        // a_{12} = -2 means alpha_1 is the short root of the pair.
        let c = CartanMatrix::from_label("C2").unwrap();
        assert_eq!(c.get(0, 1), -2);
        assert_eq!(c.get(1, 0), -1);
        assert_eq!(c.coxeter_order(0, 1), 4);
        assert!(!c.is_simply_laced());
    }

    #[test]
    fn simply_laced_flags() {
        for label in ["A1", "A5", "D4", "D6", "E6"] {
            assert!(CartanMatrix::from_label(label).unwrap().is_simply_laced(), "{label}");
        }
        for label in ["B2", "B4", "C2", "C4", "F4", "G2"] {
            assert!(!CartanMatrix::from_label(label).unwrap().is_simply_laced(), "{label}");
        }
    }

    #[test]
    fn unknown_labels_rejected() {
        for label in ["A0", "A8", "B1", "D3", "D7", "E7", "E8", "H3", "I5", "X2", "", "A", "2A"] {
            assert!(matches!(CartanMatrix::from_label(label), Err(Error::UnknownType(_))), "{label}");
        }
    }

    #[test]
    fn malformed_matrices_rejected() {
        // bad diagonal
        assert!(matches!(
            CartanMatrix::new(2, vec![1, -1, -1, 2]),
            Err(Error::MalformedCartan(_))
        ));
        // positive off-diagonal
        assert!(matches!(
            CartanMatrix::new(2, vec![2, 1, -1, 2]),
            Err(Error::MalformedCartan(_))
        ));
        // zeros must be symmetric
        assert!(matches!(
            CartanMatrix::new(2, vec![2, 0, -1, 2]),
            Err(Error::MalformedCartan(_))
        ));
        // wrong entry count
        assert!(matches!(
            CartanMatrix::new(2, vec![2, -1, -1]),
            Err(Error::MalformedCartan(_))
        ));
        // rank out of range
        assert!(matches!(CartanMatrix::new(0, vec![]), Err(Error::MalformedCartan(_))));
        assert!(matches!(
            CartanMatrix::new(9, vec![2; 81]),
            Err(Error::MalformedCartan(_))
        ));
    }

    #[test]
    fn affine_bond_rejected() {
        // a_{12} a_{21} = 4 gives m = infinity (affine A1~).
        assert_eq!(CartanMatrix::new(2, vec![2, -2, -2, 2]), Err(Error::NonFiniteType));
    }
}
