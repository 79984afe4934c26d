//! A fully enumerated group with dense multiplication tables.
//!
//! Interval construction, degree scans and whole-group sweeps all run on
//! plain integer indices into the sorted element list; elements themselves
//! are only materialized at API boundaries. Everything here is immutable
//! after construction and safe to share across threads.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::element::GroupElement;
use crate::error::Result;
use crate::system::CoxeterSystem;

/// An enumerated Coxeter group with index tables for multiplication by
/// generators (both sides), right multiplication by reflections, and
/// inversion.
pub struct Universe<'s> {
    sys: &'s CoxeterSystem,
    elements: Vec<GroupElement>,
    index: BTreeMap<u128, u32>,
    right_gen: Vec<u32>,
    left_gen: Vec<u32>,
    right_refl: Vec<u32>,
    refl_elem: Vec<u32>,
}

impl<'s> Universe<'s> {
    /// Enumerates the group (erroring with `CapExceeded` if it is larger than
    /// `cap`) and builds all index tables.
    pub fn new(sys: &'s CoxeterSystem, cap: usize) -> Result<Universe<'s>> {
        let (elements, index) = sys.enumerate_raw(cap)?;
        let order = elements.len();
        let rank = sys.rank();
        let nrefl = sys.num_reflections();

        let lookup = |images: &[i16]| -> u32 {
            let mut key = 0u128;
            for (slot, &v) in images.iter().enumerate() {
                key |= ((v as u16) as u128) << (16 * slot);
            }
            *index.get(&key).expect("product stays inside the group")
        };

        let mut right_gen = vec![0u32; order * rank];
        let mut left_gen = vec![0u32; order * rank];
        for (i, el) in elements.iter().enumerate() {
            for s in 0..rank {
                let mut raw = sys.to_raw(el);
                sys.raw_right_mul(&mut raw, s);
                right_gen[i * rank + s] = lookup(&raw.images);
                let mut raw = sys.to_raw(el);
                sys.raw_left_mul(&mut raw, s);
                left_gen[i * rank + s] = lookup(&raw.images);
            }
        }

        let mut refl_elem = vec![0u32; nrefl];
        for (t, refl) in sys.reflections().iter().enumerate() {
            refl_elem[t] = lookup(&refl.element().images);
        }

        let mut right_refl = vec![0u32; order * nrefl];
        let mut scratch = [0i16; crate::cartan::MAX_RANK];
        for (i, el) in elements.iter().enumerate() {
            for (t, refl) in sys.reflections().iter().enumerate() {
                let t_images = &refl.element().images;
                for j in 0..rank {
                    scratch[j] = sys.apply_root(&el.images, t_images[j]);
                }
                right_refl[i * nrefl + t] = lookup(&scratch[..rank]);
            }
        }

        Ok(Universe { sys, elements, index, right_gen, left_gen, right_refl, refl_elem })
    }

    pub fn system(&self) -> &'s CoxeterSystem {
        self.sys
    }

    /// |W|.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements, sorted by `(length, ShortLex word)`.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, idx: u32) -> &GroupElement {
        &self.elements[idx as usize]
    }

    pub fn index_of(&self, w: &GroupElement) -> Result<u32> {
        self.sys.check(w)?;
        Ok(*self.index.get(&w.key()).expect("element of the system is enumerated"))
    }

    #[inline]
    pub(crate) fn len_of(&self, idx: u32) -> u32 {
        self.elements[idx as usize].length
    }

    #[inline]
    pub(crate) fn right_gen(&self, idx: u32, s0: usize) -> u32 {
        self.right_gen[idx as usize * self.sys.rank() + s0]
    }

    #[inline]
    pub(crate) fn left_gen(&self, idx: u32, s0: usize) -> u32 {
        self.left_gen[idx as usize * self.sys.rank() + s0]
    }

    #[inline]
    pub(crate) fn right_refl(&self, idx: u32, t: usize) -> u32 {
        self.right_refl[idx as usize * self.sys.num_reflections() + t]
    }

    #[inline]
    pub(crate) fn reflection_element_idx(&self, t: usize) -> u32 {
        self.refl_elem[t]
    }

    /// Out-neighbors of `idx` in the full Bruhat graph, ascending.
    pub(crate) fn up_neighbors(&self, idx: u32) -> Vec<u32> {
        let mut ups: Vec<u32> = (0..self.sys.num_reflections())
            .map(|t| self.right_refl(idx, t))
            .filter(|&y| self.len_of(y) > self.len_of(idx))
            .collect();
        ups.sort_unstable();
        ups
    }
}

/// Plain bitmap over element indices.
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub(crate) fn new(n: usize) -> BitSet {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    /// Returns true if the bit was newly set.
    #[inline]
    pub(crate) fn insert(&mut self, i: u32) -> bool {
        let word = &mut self.words[(i / 64) as usize];
        let mask = 1u64 << (i % 64);
        let fresh = *word & mask == 0;
        *word |= mask;
        fresh
    }

    #[inline]
    pub(crate) fn contains(&self, i: u32) -> bool {
        self.words[(i / 64) as usize] & (1u64 << (i % 64)) != 0
    }
}

impl CoxeterSystem {
    /// Image of the signed root `sidx` under the element with the given
    /// simple-root images. Exposed for table construction.
    pub(crate) fn apply_root(&self, images: &[i16; crate::cartan::MAX_RANK], sidx: i16) -> i16 {
        self.root_system().apply_images(images, sidx)
    }
}
