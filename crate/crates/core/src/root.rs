//! Crystallographic root systems over the simple-root lattice.
//!
//! Roots are integer coefficient vectors over the simple roots. Positive roots
//! are generated by closing the simple roots under all simple reflections;
//! the closure terminating is exactly finiteness of the Weyl group, so the
//! generation caps double as the non-finite-type detector.
//!
//! Signed root indices: a root is referred to by an `i16`. Value `k >= 0`
//! means positive root number `k` in the canonical (height, coords) order;
//! value `k < 0` means the negative of positive root number `-k - 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cartan::{CartanMatrix, MAX_RANK};
use crate::error::{Error, Result};

/// Bail out of root generation well before coefficient packing could overflow.
const COEFF_CAP: i32 = 60;
/// No finite type of rank <= 8 has more than 120 positive roots.
const ROOT_CAP: usize = 4096;

/// A root written in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: [i32; MAX_RANK],
    rank: u8,
}

impl Root {
    pub(crate) fn new(coords: [i32; MAX_RANK], rank: usize) -> Self {
        Root { coords, rank: rank as u8 }
    }

    /// Coefficients over the simple roots.
    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.rank as usize]
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i32 {
        self.coords().iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0) && self.coords().iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coords().iter().all(|&c| c <= 0) && self.coords().iter().any(|&c| c < 0)
    }
}

#[inline]
pub(crate) fn negate_sidx(v: i16) -> i16 {
    -v - 1
}

#[inline]
pub(crate) fn sidx_is_negative(v: i16) -> bool {
    v < 0
}

#[inline]
pub(crate) fn sidx_root(v: i16) -> usize {
    if v < 0 {
        (-v - 1) as usize
    } else {
        v as usize
    }
}

fn pack(coords: &[i32; MAX_RANK]) -> u64 {
    let mut key = 0u64;
    for (slot, &c) in coords.iter().enumerate() {
        debug_assert!((-COEFF_CAP..=COEFF_CAP).contains(&c));
        key |= (((c + 64) as u8) as u64) << (8 * slot);
    }
    key
}

/// The set of positive roots of a finite system plus the generator action
/// tables used by all element arithmetic.
#[derive(Debug)]
pub(crate) struct RootSystem {
    rank: usize,
    coords: Vec<[i32; MAX_RANK]>,
    index: BTreeMap<u64, u16>,
    /// `gen_perm[s][r]` is the signed index of `s(beta_r)` for positive `r`.
    gen_perm: Vec<Vec<i16>>,
}

impl RootSystem {
    pub(crate) fn generate(cartan: &CartanMatrix) -> Result<RootSystem> {
        let rank = cartan.rank();
        let mut coords: Vec<[i32; MAX_RANK]> = Vec::new();
        let mut index: BTreeMap<u64, u16> = BTreeMap::new();
        for i in 0..rank {
            let mut c = [0i32; MAX_RANK];
            c[i] = 1;
            index.insert(pack(&c), coords.len() as u16);
            coords.push(c);
        }
        // Close the positive roots under all simple reflections.
        let mut next = 0usize;
        while next < coords.len() {
            let c = coords[next];
            for s in 0..rank {
                let image = apply_simple(cartan, s, &c);
                if image.iter().any(|&x| x.abs() > COEFF_CAP) {
                    return Err(Error::NonFiniteType);
                }
                if image[..rank].iter().all(|&x| x >= 0) && !index.contains_key(&pack(&image)) {
                    index.insert(pack(&image), coords.len() as u16);
                    coords.push(image);
                    if coords.len() > ROOT_CAP {
                        return Err(Error::NonFiniteType);
                    }
                }
            }
            next += 1;
        }

        // Canonical order: simple roots first in generator order (element
        // arithmetic relies on root j being alpha_j for j < rank), then by
        // (height, coordinate-lexicographic). Positive roots of height one
        // are exactly the simple roots.
        coords.sort_by_key(|c| {
            let height: i32 = c.iter().sum();
            if height == 1 {
                let generator = c.iter().position(|&x| x == 1).expect("unit coordinate") as i32;
                (1, generator, [0; MAX_RANK])
            } else {
                (2, height, *c)
            }
        });
        let mut index = BTreeMap::new();
        for (i, c) in coords.iter().enumerate() {
            index.insert(pack(c), i as u16);
        }

        let mut gen_perm = Vec::with_capacity(rank);
        for s in 0..rank {
            let mut table = Vec::with_capacity(coords.len());
            for c in &coords {
                let image = apply_simple(cartan, s, c);
                table.push(lookup_signed(&index, rank, &image));
            }
            gen_perm.push(table);
        }

        Ok(RootSystem { rank, coords, index, gen_perm })
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    pub(crate) fn num_positive(&self) -> usize {
        self.coords.len()
    }

    pub(crate) fn root(&self, positive_index: usize) -> Root {
        Root::new(self.coords[positive_index], self.rank)
    }

    /// Image of positive root `r` under generator `s` (0-based), as a signed index.
    #[inline]
    pub(crate) fn gen_image(&self, s: usize, sidx: i16) -> i16 {
        let r = sidx_root(sidx);
        let image = self.gen_perm[s][r];
        if sidx_is_negative(sidx) {
            negate_sidx(image)
        } else {
            image
        }
    }

    /// Image of the root `sidx` under the element whose simple-root images are
    /// `images`. Linearity over the simple-root coordinates.
    pub(crate) fn apply_images(&self, images: &[i16; MAX_RANK], sidx: i16) -> i16 {
        let r = sidx_root(sidx);
        let c = &self.coords[r];
        let mut acc = [0i32; MAX_RANK];
        for j in 0..self.rank {
            let cj = c[j];
            if cj == 0 {
                continue;
            }
            let im = images[j];
            let base = &self.coords[sidx_root(im)];
            let sign = if sidx_is_negative(im) { -cj } else { cj };
            for k in 0..self.rank {
                acc[k] += sign * base[k];
            }
        }
        if sidx_is_negative(sidx) {
            for a in acc.iter_mut() {
                *a = -*a;
            }
        }
        lookup_signed(&self.index, self.rank, &acc)
    }

    /// Linear combination `coords(a) - factor * coords(b)` resolved back to a
    /// signed root index. Used by incremental right multiplication.
    pub(crate) fn combine(&self, a: i16, factor: i32, b: i16) -> i16 {
        let mut acc = [0i32; MAX_RANK];
        let base_a = &self.coords[sidx_root(a)];
        let sign_a = if sidx_is_negative(a) { -1 } else { 1 };
        for k in 0..self.rank {
            acc[k] = sign_a * base_a[k];
        }
        if factor != 0 {
            let base_b = &self.coords[sidx_root(b)];
            let sign_b = if sidx_is_negative(b) { -factor } else { factor };
            for k in 0..self.rank {
                acc[k] -= sign_b * base_b[k];
            }
        }
        lookup_signed(&self.index, self.rank, &acc)
    }
}

fn apply_simple(cartan: &CartanMatrix, s: usize, coords: &[i32; MAX_RANK]) -> [i32; MAX_RANK] {
    let rank = cartan.rank();
    let mut out = *coords;
    let mut pairing = 0i32;
    for j in 0..rank {
        pairing += cartan.get(s, j) * coords[j];
    }
    out[s] -= pairing;
    out
}

fn lookup_signed(index: &BTreeMap<u64, u16>, rank: usize, coords: &[i32; MAX_RANK]) -> i16 {
    if coords[..rank].iter().all(|&c| c >= 0) {
        *index.get(&pack(coords)).expect("image of a root must be a root") as i16
    } else {
        debug_assert!(coords[..rank].iter().all(|&c| c <= 0), "mixed-sign root image");
        let mut neg = [0i32; MAX_RANK];
        for (k, &c) in coords.iter().enumerate() {
            neg[k] = -c;
        }
        negate_sidx(*index.get(&pack(&neg)).expect("image of a root must be a root") as i16)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn positive_root_count(label: &str) -> usize {
        let cartan = CartanMatrix::from_label(label).unwrap();
        RootSystem::generate(&cartan).unwrap().num_positive()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(positive_root_count("A1"), 1);
        assert_eq!(positive_root_count("A2"), 3);
        assert_eq!(positive_root_count("A3"), 6);
        assert_eq!(positive_root_count("B2"), 4);
        assert_eq!(positive_root_count("C3"), 9);
        assert_eq!(positive_root_count("D4"), 12);
        assert_eq!(positive_root_count("E6"), 36);
        assert_eq!(positive_root_count("F4"), 24);
        assert_eq!(positive_root_count("G2"), 6);
    }

    #[test]
    fn closure_under_all_generators() {
        for label in ["A3", "C2", "D4", "G2"] {
            let cartan = CartanMatrix::from_label(label).unwrap();
            let rs = RootSystem::generate(&cartan).unwrap();
            for r in 0..rs.num_positive() {
                for s in 0..rs.rank() {
                    // gen_image panics internally if the image is not a root.
                    let image = rs.gen_image(s, r as i16);
                    assert!(sidx_root(image) < rs.num_positive());
                }
            }
        }
    }

    #[test]
    fn simple_reflection_negates_only_its_root() {
        let cartan = CartanMatrix::from_label("D4").unwrap();
        let rs = RootSystem::generate(&cartan).unwrap();
        for s in 0..4 {
            for r in 0..rs.num_positive() {
                let image = rs.gen_image(s, r as i16);
                if r == s {
                    assert_eq!(image, negate_sidx(s as i16));
                } else {
                    assert!(!sidx_is_negative(image));
                }
            }
        }
    }

    #[test]
    fn affine_matrix_fails_generation() {
        // All bond products <= 3 but the group is infinite (affine A2~):
        // a triangle of simple bonds.
        let cartan = CartanMatrix::new(
            3,
            vec![2, -1, -1, -1, 2, -1, -1, -1, 2],
        )
        .unwrap();
        assert_eq!(RootSystem::generate(&cartan).unwrap_err(), Error::NonFiniteType);
    }

    #[test]
    fn simple_roots_sorted_first() {
        let cartan = CartanMatrix::from_label("A3").unwrap();
        let rs = RootSystem::generate(&cartan).unwrap();
        for i in 0..3 {
            let root = rs.root(i);
            assert_eq!(root.height(), 1);
            assert_eq!(root.coords()[i], 1);
        }
        assert!(rs.root(3).height() >= 2);
    }
}
