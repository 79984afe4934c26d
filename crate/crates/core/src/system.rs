//! Finite crystallographic Coxeter systems and exact element arithmetic.
//!
//! Everything reduces to integer root-lattice operations: an element is its
//! action on the simple roots, length is the count of inverted positive
//! roots, and descent tests are sign reads. No word rewriting is performed;
//! the cached ShortLex word is derived from the action by greedy descent
//! stripping.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cartan::{CartanMatrix, MAX_RANK};
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::root::{sidx_is_negative, Root, RootSystem};

/// Default cap on group enumeration; covers E6 comfortably.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A reflection together with the positive root it inverts.
///
/// The root <-> reflection correspondence is a bijection; reflection lists
/// are always ordered by the canonical positive-root order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    element: GroupElement,
    root: Root,
}

impl Reflection {
    pub fn element(&self) -> &GroupElement {
        &self.element
    }

    pub fn root(&self) -> &Root {
        &self.root
    }
}

/// Mutable element state without the cached word; all incremental arithmetic
/// runs on this and materializes a `GroupElement` only at the end.
#[derive(Clone, Copy)]
pub(crate) struct Raw {
    pub(crate) images: [i16; MAX_RANK],
    pub(crate) inv: [i16; MAX_RANK],
    pub(crate) len: u32,
}

/// A finite crystallographic Coxeter system realized over its root lattice.
pub struct CoxeterSystem {
    id: u64,
    label: String,
    cartan: CartanMatrix,
    simply_laced: bool,
    roots: RootSystem,
    reflections: Vec<Reflection>,
    refl_index: BTreeMap<u128, u16>,
    identity: GroupElement,
}

impl CoxeterSystem {
    /// Builds a catalog system from its type label, e.g. `"D4"`.
    pub fn from_label(label: &str) -> Result<Self> {
        Self::from_cartan(CartanMatrix::from_label(label)?, label)
    }

    /// Builds a system from an explicit Cartan matrix.
    pub fn from_cartan(cartan: CartanMatrix, label: &str) -> Result<Self> {
        let roots = RootSystem::generate(&cartan)?;
        let id = system_id(label, &cartan);
        let simply_laced = cartan.is_simply_laced();
        let rank = cartan.rank();

        let mut sys = CoxeterSystem {
            id,
            label: label.to_string(),
            cartan,
            simply_laced,
            roots,
            reflections: Vec::new(),
            refl_index: BTreeMap::new(),
            identity: GroupElement {
                system_id: id,
                length: 0,
                images: [0; MAX_RANK],
                inv_images: [0; MAX_RANK],
                word: Vec::new().into_boxed_slice(),
            },
        };
        let mut ident = [0i16; MAX_RANK];
        for (j, slot) in ident.iter_mut().enumerate().take(rank) {
            *slot = j as i16;
        }
        sys.identity.images = ident;
        sys.identity.inv_images = ident;

        sys.build_reflections();
        Ok(sys)
    }

    /// Every reflection is a conjugate of a generator; walking the roots by
    /// increasing height lets each t_beta be built as s * t_{s(beta)} * s.
    fn build_reflections(&mut self) {
        let rank = self.rank();
        let n = self.roots.num_positive();
        let mut raws: Vec<Raw> = Vec::with_capacity(n);
        for idx in 0..n {
            let root = self.roots.root(idx);
            if root.height() == 1 {
                let s = root.coords().iter().position(|&c| c == 1).expect("simple root");
                raws.push(self.raw_generator(s));
            } else {
                let s = (0..rank)
                    .find(|&s| {
                        let image = self.roots.gen_image(s, idx as i16);
                        !sidx_is_negative(image)
                            && self.roots.root(image as usize).height() < root.height()
                    })
                    .expect("positive non-simple root has a height-lowering generator");
                let lower = self.roots.gen_image(s, idx as i16) as usize;
                debug_assert!(lower < idx);
                let mut raw = raws[lower];
                self.raw_left_mul(&mut raw, s);
                self.raw_right_mul(&mut raw, s);
                raws.push(raw);
            }
        }
        for (idx, raw) in raws.into_iter().enumerate() {
            let element = self.raw_to_element(raw);
            self.refl_index.insert(element.key(), idx as u16);
            self.reflections.push(Reflection { element, root: self.roots.root(idx) });
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    /// Bond order m(s_i, s_j), 1-based generator indices.
    pub fn coxeter_order(&self, i: usize, j: usize) -> u32 {
        self.cartan.coxeter_order(i - 1, j - 1)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn num_reflections(&self) -> usize {
        self.reflections.len()
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        (0..self.roots.num_positive()).map(|i| self.roots.root(i)).collect()
    }

    pub fn identity(&self) -> GroupElement {
        self.identity.clone()
    }

    /// Generator s_i, 1-based.
    pub fn generator(&self, i: usize) -> Result<GroupElement> {
        if i == 0 || i > self.rank() {
            return Err(Error::PreconditionViolated("generator index out of range"));
        }
        Ok(self.reflections[i - 1].element.clone())
    }

    /// All reflections, ordered by their positive roots.
    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    /// The canonical reflection equal to `w`, if `w` is one.
    pub fn reflection_from_element(&self, w: &GroupElement) -> Result<Reflection> {
        self.check(w)?;
        match self.refl_index.get(&w.key()) {
            Some(&idx) => Ok(self.reflections[idx as usize].clone()),
            None => Err(Error::PreconditionViolated("element is not a reflection")),
        }
    }

    pub(crate) fn reflection_index(&self, w: &GroupElement) -> Option<u16> {
        self.refl_index.get(&w.key()).copied()
    }

    /// Multiplies a 1-based word out to an element. The word need not be
    /// reduced; the result is canonical regardless.
    pub fn element_from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut raw = self.raw_identity();
        for &letter in word {
            if letter == 0 || letter > self.rank() {
                return Err(Error::PreconditionViolated("word letter out of range"));
            }
            self.raw_right_mul(&mut raw, letter - 1);
        }
        Ok(self.raw_to_element(raw))
    }

    pub fn multiply(&self, u: &GroupElement, v: &GroupElement) -> Result<GroupElement> {
        self.check(u)?;
        self.check(v)?;
        let raw = self.raw_multiply(&self.to_raw(u), &self.to_raw(v));
        Ok(self.raw_to_element(raw))
    }

    pub fn inverse(&self, w: &GroupElement) -> Result<GroupElement> {
        self.check(w)?;
        let raw = Raw { images: w.inv_images, inv: w.images, len: w.length };
        Ok(self.raw_to_element(raw))
    }

    /// N(w) = { t : l(tw) < l(w) }, ordered by root. Computed as the
    /// reflections whose root is inverted by w^{-1}; the equivalence with the
    /// defining length condition is pinned by tests on small groups.
    pub fn inversion_set(&self, w: &GroupElement) -> Result<Vec<Reflection>> {
        self.check(w)?;
        Ok((0..self.roots.num_positive())
            .filter(|&r| sidx_is_negative(self.roots.apply_images(&w.inv_images, r as i16)))
            .map(|r| self.reflections[r].clone())
            .collect())
    }

    /// D_L(w) = { s : l(sw) < l(w) }, 1-based, sorted.
    pub fn left_descents(&self, w: &GroupElement) -> Result<Vec<usize>> {
        self.check(w)?;
        Ok((0..self.rank()).filter(|&s| sidx_is_negative(w.inv_images[s])).map(|s| s + 1).collect())
    }

    /// D_R(w) = { s : l(ws) < l(w) }, 1-based, sorted.
    pub fn right_descents(&self, w: &GroupElement) -> Result<Vec<usize>> {
        self.check(w)?;
        Ok((0..self.rank()).filter(|&s| sidx_is_negative(w.images[s])).map(|s| s + 1).collect())
    }

    /// Longest element of the parabolic subgroup generated by `gens`
    /// (1-based indices). Greedy ascent: repeatedly left-multiply by the
    /// smallest generator in `gens` that raises length.
    pub fn longest_element(&self, gens: &[usize]) -> Result<GroupElement> {
        for &g in gens {
            if g == 0 || g > self.rank() {
                return Err(Error::PreconditionViolated("generator index out of range"));
            }
        }
        let mut raw = self.raw_identity();
        loop {
            // l(sw) > l(w) iff w^{-1}(alpha_s) > 0.
            match gens.iter().copied().filter(|&g| !sidx_is_negative(raw.inv[g - 1])).min() {
                Some(g) => self.raw_left_mul(&mut raw, g - 1),
                None => return Ok(self.raw_to_element(raw)),
            }
        }
    }

    /// All group elements, ordered by `(length, ShortLex word)`.
    pub fn enumerate_group(&self, cap: usize) -> Result<Vec<GroupElement>> {
        Ok(self.enumerate_raw(cap)?.0)
    }

    pub(crate) fn enumerate_raw(&self, cap: usize) -> Result<(Vec<GroupElement>, BTreeMap<u128, u32>)> {
        let rank = self.rank();
        let mut raws: Vec<Raw> = Vec::new();
        let mut seen: BTreeMap<u128, u32> = BTreeMap::new();
        let ident = self.raw_identity();
        seen.insert(raw_key(&ident), 0);
        raws.push(ident);
        let mut next = 0usize;
        while next < raws.len() {
            let current = raws[next];
            for s in 0..rank {
                let mut image = current;
                self.raw_right_mul(&mut image, s);
                let key = raw_key(&image);
                if let alloc::collections::btree_map::Entry::Vacant(entry) = seen.entry(key) {
                    if raws.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    entry.insert(0);
                    raws.push(image);
                }
            }
            next += 1;
        }
        let mut elements: Vec<GroupElement> =
            raws.into_iter().map(|raw| self.raw_to_element(raw)).collect();
        elements.sort_unstable();
        let mut index = BTreeMap::new();
        for (i, el) in elements.iter().enumerate() {
            index.insert(el.key(), i as u32);
        }
        Ok((elements, index))
    }

    pub(crate) fn check(&self, w: &GroupElement) -> Result<()> {
        if w.system_id == self.id {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    pub(crate) fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    /// Whether reflection number `t` lies in N(w).
    pub(crate) fn inversion_contains(&self, w: &GroupElement, t: usize) -> bool {
        sidx_is_negative(self.roots.apply_images(&w.inv_images, t as i16))
    }

    // ---- raw arithmetic -------------------------------------------------

    pub(crate) fn raw_identity(&self) -> Raw {
        Raw { images: self.identity.images, inv: self.identity.inv_images, len: 0 }
    }

    fn raw_generator(&self, s: usize) -> Raw {
        let mut raw = self.raw_identity();
        self.raw_right_mul(&mut raw, s);
        raw
    }

    pub(crate) fn to_raw(&self, w: &GroupElement) -> Raw {
        Raw { images: w.images, inv: w.inv_images, len: w.length }
    }

    /// w -> s w, 0-based s.
    pub(crate) fn raw_left_mul(&self, raw: &mut Raw, s: usize) {
        let rank = self.rank();
        let ascent = !sidx_is_negative(raw.inv[s]);
        for j in 0..rank {
            raw.images[j] = self.roots.gen_image(s, raw.images[j]);
        }
        // (sw)^{-1}(alpha_j) = w^{-1}(alpha_j) - a_{sj} w^{-1}(alpha_s)
        let inv_s = raw.inv[s];
        for j in 0..rank {
            raw.inv[j] = self.roots.combine(raw.inv[j], self.cartan.get(s, j), inv_s);
        }
        raw.len = if ascent { raw.len + 1 } else { raw.len - 1 };
    }

    /// w -> w s, 0-based s.
    pub(crate) fn raw_right_mul(&self, raw: &mut Raw, s: usize) {
        let rank = self.rank();
        let ascent = !sidx_is_negative(raw.images[s]);
        let im_s = raw.images[s];
        for j in 0..rank {
            raw.images[j] = self.roots.combine(raw.images[j], self.cartan.get(s, j), im_s);
        }
        for j in 0..rank {
            raw.inv[j] = self.roots.gen_image(s, raw.inv[j]);
        }
        raw.len = if ascent { raw.len + 1 } else { raw.len - 1 };
    }

    pub(crate) fn raw_multiply(&self, u: &Raw, v: &Raw) -> Raw {
        let rank = self.rank();
        let mut out = self.raw_identity();
        for j in 0..rank {
            out.images[j] = self.roots.apply_images(&u.images, v.images[j]);
            out.inv[j] = self.roots.apply_images(&v.inv, u.inv[j]);
        }
        // Length never comes from word concatenation: count inverted roots.
        out.len = (0..self.roots.num_positive())
            .filter(|&r| sidx_is_negative(self.roots.apply_images(&out.images, r as i16)))
            .count() as u32;
        out
    }

    /// Smallest left descent, 0-based, if any.
    #[inline]
    pub(crate) fn raw_first_left_descent(&self, raw: &Raw) -> Option<usize> {
        (0..self.rank()).find(|&s| sidx_is_negative(raw.inv[s]))
    }

    /// Greedy smallest-descent stripping yields the ShortLex-minimal reduced
    /// word (1-based letters).
    fn raw_word(&self, raw: &Raw) -> Vec<u8> {
        let mut scratch = *raw;
        let mut word = Vec::with_capacity(raw.len as usize);
        while scratch.len > 0 {
            let s = self.raw_first_left_descent(&scratch).expect("positive length has a descent");
            word.push((s + 1) as u8);
            self.raw_left_mul(&mut scratch, s);
        }
        word
    }

    pub(crate) fn raw_to_element(&self, raw: Raw) -> GroupElement {
        let word = self.raw_word(&raw).into_boxed_slice();
        debug_assert_eq!(word.len(), raw.len as usize);
        GroupElement {
            system_id: self.id,
            length: raw.len,
            images: raw.images,
            inv_images: raw.inv,
            word,
        }
    }
}

pub(crate) fn raw_key(raw: &Raw) -> u128 {
    let mut key = 0u128;
    for (slot, &v) in raw.images.iter().enumerate() {
        key |= ((v as u16) as u128) << (16 * slot);
    }
    key
}

fn system_id(label: &str, cartan: &CartanMatrix) -> u64 {
    // FNV-1a over the identifying content; deterministic across runs.
    let mut hash = 0xcbf29ce484222325u64;
    let mut eat = |byte: u8| {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    };
    for b in label.bytes() {
        eat(b);
    }
    eat(0xff);
    eat(cartan.rank() as u8);
    for i in 0..cartan.rank() {
        for j in 0..cartan.rank() {
            for b in cartan.get(i, j).to_le_bytes() {
                eat(b);
            }
        }
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(label: &str) -> CoxeterSystem {
        CoxeterSystem::from_label(label).unwrap()
    }

    fn word(sys: &CoxeterSystem, w: &[usize]) -> GroupElement {
        sys.element_from_word(w).unwrap()
    }

    #[test]
    fn group_orders() {
        for (label, order) in [
            ("A1", 2usize),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("C2", 8),
            ("G2", 12),
            ("B3", 48),
            ("D4", 192),
        ] {
            let s = sys(label);
            assert_eq!(s.enumerate_group(DEFAULT_ELEMENT_CAP).unwrap().len(), order, "{label}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_starts_at_identity() {
        let s = sys("A3");
        let all = s.enumerate_group(DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(all[0], s.identity());
        for pair in all.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn enumeration_cap_exceeded() {
        let s = sys("A3");
        assert_eq!(s.enumerate_group(10), Err(Error::CapExceeded { cap: 10 }));
    }

    #[test]
    fn generator_squares_to_identity() {
        let s = sys("A2");
        let s1 = s.generator(1).unwrap();
        assert_eq!(s.multiply(&s1, &s1).unwrap(), s.identity());
    }

    #[test]
    fn product_of_distinct_generators_has_length_two() {
        let s = sys("A2");
        let s1 = s.generator(1).unwrap();
        let s2 = s.generator(2).unwrap();
        let p = s.multiply(&s1, &s2).unwrap();
        assert_eq!(p.length(), 2);
        assert_eq!(p.word(), &[1, 2]);
    }

    #[test]
    fn braid_cube_in_a2() {
        // (s1 s2)^3 = e, so (s1 s2)^2 = s2 s1.
        let s = sys("A2");
        let s1s2 = word(&s, &[1, 2]);
        let sq = s.multiply(&s1s2, &s1s2).unwrap();
        assert_eq!(sq, word(&s, &[2, 1]));
        let cube = s.multiply(&sq, &s1s2).unwrap();
        assert!(cube.is_identity());
    }

    #[test]
    fn non_reduced_words_are_canonicalized() {
        let s = sys("A2");
        assert_eq!(word(&s, &[1, 1]), s.identity());
        assert_eq!(word(&s, &[2, 1, 1, 2, 2]), word(&s, &[2]));
        // Both sides of the braid relation land on the same element with the
        // ShortLex word.
        let lhs = word(&s, &[1, 2, 1]);
        let rhs = word(&s, &[2, 1, 2]);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.word(), &[1, 2, 1]);
    }

    #[test]
    fn word_letter_out_of_range() {
        let s = sys("A2");
        assert!(matches!(
            s.element_from_word(&[1, 3]),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(s.element_from_word(&[0]), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn length_examples() {
        let s = sys("A2");
        assert_eq!(s.identity().length(), 0);
        assert_eq!(s.longest_element(&[1, 2]).unwrap().length(), 3);
        let d4 = sys("D4");
        assert_eq!(word(&d4, &[2, 1, 3, 4, 2]).length(), 5);
    }

    #[test]
    fn inverse_examples() {
        let s = sys("A2");
        assert_eq!(s.inverse(&s.identity()).unwrap(), s.identity());
        assert_eq!(s.inverse(&word(&s, &[1, 2])).unwrap(), word(&s, &[2, 1]));
        for t in s.reflections() {
            assert_eq!(&s.inverse(t.element()).unwrap(), t.element());
        }
        // Inverse words are recanonicalized, not merely reversed.
        let a3 = sys("A3");
        let w = word(&a3, &[2, 1, 3]);
        let inv = a3.inverse(&w).unwrap();
        assert_eq!(inv.word(), &[1, 3, 2]);
        assert_eq!(inv.length(), w.length());
        assert!(a3.multiply(&w, &inv).unwrap().is_identity());
    }

    #[test]
    fn reflection_counts_and_contents() {
        let a2 = sys("A2");
        assert_eq!(a2.num_reflections(), 3);
        let words: Vec<&[u8]> = a2.reflections().iter().map(|t| t.element().word()).collect();
        assert_eq!(words, [&[1][..], &[2][..], &[1, 2, 1][..]]);
        assert_eq!(sys("A1").num_reflections(), 1);
        assert_eq!(sys("A3").num_reflections(), 6);
        for t in sys("A3").reflections() {
            assert!(t.element().is_involution());
            assert!(t.root().is_positive());
        }
    }

    #[test]
    fn reflection_from_element_round_trip() {
        let s = sys("A3");
        let t = word(&s, &[2, 3, 2]);
        let refl = s.reflection_from_element(&t).unwrap();
        assert_eq!(refl.element(), &t);
        let not_refl = word(&s, &[1, 2]);
        assert!(matches!(
            s.reflection_from_element(&not_refl),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn inversion_set_examples() {
        let s = sys("A2");
        assert!(s.inversion_set(&s.identity()).unwrap().is_empty());
        let s1 = s.generator(1).unwrap();
        let inv = s.inversion_set(&s1).unwrap();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].element(), &s1);
        let w0 = s.longest_element(&[1, 2]).unwrap();
        assert_eq!(s.inversion_set(&w0).unwrap().len(), 3);
    }

    #[test]
    fn inversion_set_matches_length_definition() {
        // N(w) = { t : l(tw) < l(w) }, checked directly.
        for label in ["A3", "C2"] {
            let s = sys(label);
            for w in s.enumerate_group(DEFAULT_ELEMENT_CAP).unwrap() {
                let by_roots: Vec<GroupElement> =
                    s.inversion_set(&w).unwrap().into_iter().map(|t| t.element().clone()).collect();
                let by_def: Vec<GroupElement> = s
                    .reflections()
                    .iter()
                    .map(|t| t.element().clone())
                    .filter(|t| s.multiply(t, &w).unwrap().length() < w.length())
                    .collect();
                assert_eq!(by_roots, by_def);
                assert_eq!(by_roots.len() as u32, w.length());
            }
        }
    }

    #[test]
    fn descent_examples() {
        let s = sys("A2");
        assert!(s.left_descents(&s.identity()).unwrap().is_empty());
        let w0 = s.longest_element(&[1, 2]).unwrap();
        assert_eq!(s.left_descents(&w0).unwrap(), [1, 2]);
        let d4 = sys("D4");
        let w = word(&d4, &[2, 1, 3, 4, 2]);
        assert_eq!(d4.left_descents(&w).unwrap(), [2]);
        // Derived directly from l(s_i w).
        for i in 1..=4 {
            let si = d4.generator(i).unwrap();
            let raised = d4.multiply(&si, &w).unwrap().length() > w.length();
            assert_eq!(raised, !d4.left_descents(&w).unwrap().contains(&i));
        }
    }

    #[test]
    fn longest_element_examples() {
        let a2 = sys("A2");
        assert_eq!(a2.longest_element(&[1, 2]).unwrap(), word(&a2, &[1, 2, 1]));
        assert_eq!(a2.longest_element(&[]).unwrap(), a2.identity());
        let a3 = sys("A3");
        assert_eq!(a3.longest_element(&[1, 3]).unwrap(), word(&a3, &[1, 3]));
        // Brute force over the parabolic <s1, s3>: the longest of its four
        // elements.
        let parabolic = [
            a3.identity(),
            word(&a3, &[1]),
            word(&a3, &[3]),
            word(&a3, &[1, 3]),
        ];
        let max = parabolic.iter().max_by_key(|w| w.length()).unwrap();
        assert_eq!(&a3.longest_element(&[1, 3]).unwrap(), max);
    }

    #[test]
    fn longest_element_is_longest_involution() {
        for label in ["A3", "C2", "G2"] {
            let s = sys(label);
            let gens: Vec<usize> = (1..=s.rank()).collect();
            let w0 = s.longest_element(&gens).unwrap();
            assert!(w0.is_involution());
            for v in s.enumerate_group(DEFAULT_ELEMENT_CAP).unwrap() {
                if v != w0 {
                    assert!(v.length() < w0.length());
                }
            }
        }
    }

    #[test]
    fn support_examples() {
        let a3 = sys("A3");
        assert!(a3.identity().support().is_empty());
        assert_eq!(word(&a3, &[1, 3]).support(), [1, 3]);
        let d4 = sys("D4");
        assert_eq!(word(&d4, &[2, 1, 3, 4, 2]).support(), [1, 2, 3, 4]);
    }

    #[test]
    fn involution_examples() {
        let a2 = sys("A2");
        assert!(a2.identity().is_involution());
        assert!(!word(&a2, &[1, 2]).is_involution());
        let d4 = sys("D4");
        let w = word(&d4, &[2, 1, 3, 4, 2]);
        assert!(w.is_involution());
        // Squaring oracle.
        assert!(d4.multiply(&w, &w).unwrap().is_identity());
    }

    #[test]
    fn system_mismatch_detected() {
        let a2 = sys("A2");
        let a3 = sys("A3");
        let u = a2.generator(1).unwrap();
        let v = a3.generator(1).unwrap();
        assert_eq!(a2.multiply(&u, &v), Err(Error::SystemMismatch));
        assert_eq!(a3.inversion_set(&u), Err(Error::SystemMismatch));
    }

    #[test]
    fn multiply_length_parity_and_bound() {
        let s = sys("B3");
        let all = s.enumerate_group(DEFAULT_ELEMENT_CAP).unwrap();
        for u in all.iter().step_by(5) {
            for v in all.iter().step_by(7) {
                let p = s.multiply(u, v).unwrap();
                assert!(p.length() <= u.length() + v.length());
                assert_eq!((p.length() + u.length() + v.length()) % 2, 0);
            }
        }
    }
}
