//! Group elements in their canonical root-action representation.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use crate::cartan::MAX_RANK;

/// An element of a finite Weyl group, represented canonically by the images
/// of the simple roots under its action on the root lattice.
///
/// Two elements are equal exactly when their image lists (and system) agree.
/// The inverse's images are carried alongside so that left descents and
/// inverses are cheap, and the ShortLex reduced word is cached for
/// deterministic labeling. Ordering is by `(length, word)`, the ShortLex
/// order used everywhere for output determinism.
#[derive(Debug, Clone)]
pub struct GroupElement {
    pub(crate) system_id: u64,
    pub(crate) length: u32,
    pub(crate) images: [i16; MAX_RANK],
    pub(crate) inv_images: [i16; MAX_RANK],
    pub(crate) word: Box<[u8]>,
}

impl GroupElement {
    /// Number of positive roots sent negative; the Coxeter length.
    pub fn length(&self) -> u32 {
        self.length
    }

    /// Canonical ShortLex reduced word, as 1-based generator indices.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Generators occurring in the reduced word, sorted, 1-based.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = [false; MAX_RANK];
        for &letter in self.word.iter() {
            seen[(letter - 1) as usize] = true;
        }
        (1..=MAX_RANK).filter(|&i| seen[i - 1]).collect()
    }

    /// Whether the element squares to the identity. The identity counts.
    pub fn is_involution(&self) -> bool {
        // w^2 = e exactly when w equals its inverse.
        self.images == self.inv_images
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Packed canonical key; unique per element within one system.
    pub(crate) fn key(&self) -> u128 {
        let mut key = 0u128;
        for (slot, &v) in self.images.iter().enumerate() {
            key |= ((v as u16) as u128) << (16 * slot);
        }
        key
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.system_id == other.system_id && self.images == other.images
    }
}

impl Eq for GroupElement {}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.images.cmp(&other.images))
            .then_with(|| self.system_id.cmp(&other.system_id))
    }
}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.system_id.hash(state);
        self.images.hash(state);
    }
}
