//! Bruhat order, lower intervals and Bruhat graphs.
//!
//! The order test is the lifting recursion: for s in D_L(w), u <= w iff
//! (su <= sw when s in D_L(u), else u <= sw). One branch is taken per step,
//! so a point query costs O(l(w)) integer operations. Interval construction
//! evaluates the same recursion for every element at once by climbing the
//! descent chain of w: [e, w] = [e, sw] union s[e, sw].

use alloc::vec::Vec;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::root::sidx_is_negative;
use crate::system::CoxeterSystem;
use crate::universe::{BitSet, Universe};

impl CoxeterSystem {
    /// Bruhat order comparison, u <= w.
    pub fn bruhat_leq(&self, u: &GroupElement, w: &GroupElement) -> Result<bool> {
        self.check(u)?;
        self.check(w)?;
        let mut u = self.to_raw(u);
        let mut w = self.to_raw(w);
        loop {
            if u.len == 0 {
                return Ok(true);
            }
            if u.len > w.len {
                return Ok(false);
            }
            let s = self.raw_first_left_descent(&w).expect("w has positive length");
            if sidx_is_negative(u.inv[s]) {
                self.raw_left_mul(&mut u, s);
            }
            self.raw_left_mul(&mut w, s);
        }
    }
}

/// The lower interval [e, w] with its elements bucketed by length.
#[derive(Debug, Clone)]
pub struct BruhatInterval {
    top: GroupElement,
    elements: Vec<GroupElement>,
    level_offsets: Vec<usize>,
}

impl BruhatInterval {
    pub fn top(&self) -> &GroupElement {
        &self.top
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Members sorted by `(length, ShortLex word)`.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// Members of the given length.
    pub fn by_length(&self, length: u32) -> &[GroupElement] {
        let l = length as usize;
        if l >= self.level_offsets.len() - 1 {
            return &[];
        }
        &self.elements[self.level_offsets[l]..self.level_offsets[l + 1]]
    }

    pub fn contains(&self, z: &GroupElement) -> bool {
        self.elements.binary_search(z).is_ok()
    }

    /// Position of `z` in the sorted member list.
    pub fn position(&self, z: &GroupElement) -> Option<usize> {
        self.elements.binary_search(z).ok()
    }
}

/// The Bruhat graph of a lower interval: every edge (u, ut) with t a
/// reflection, both endpoints in the interval and length increasing.
/// Non-cover edges (length jumps greater than one) are included.
#[derive(Debug, Clone)]
pub struct BruhatGraph {
    interval: BruhatInterval,
    /// Directed edges as positions into the interval's element list, sorted.
    edges: Vec<(u32, u32)>,
    /// Undirected incidence counts, indexed by interval position.
    degrees: Vec<u32>,
}

impl BruhatGraph {
    pub fn interval(&self) -> &BruhatInterval {
        &self.interval
    }

    pub fn vertex_count(&self) -> usize {
        self.interval.size()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Undirected degree of a vertex.
    pub fn degree(&self, z: &GroupElement) -> Result<u32> {
        match self.interval.position(z) {
            Some(pos) => Ok(self.degrees[pos]),
            None => Err(Error::PreconditionViolated("vertex is not in the interval")),
        }
    }
}

impl Universe<'_> {
    /// Membership bitmap and sorted member indices of [e, w].
    pub(crate) fn interval_members(&self, w_idx: u32) -> (BitSet, Vec<u32>) {
        let word = self.element(w_idx).word().to_vec();
        let mut bits = BitSet::new(self.order());
        let mut members: Vec<u32> = Vec::new();
        bits.insert(0);
        members.push(0);
        debug_assert!(self.element(0).is_identity());
        for &letter in word.iter().rev() {
            let s0 = (letter - 1) as usize;
            let frontier = members.len();
            for k in 0..frontier {
                let m = self.left_gen(members[k], s0);
                if bits.insert(m) {
                    members.push(m);
                }
            }
        }
        members.sort_unstable();
        (bits, members)
    }

    /// The lower interval [e, w].
    pub fn lower_interval(&self, w: &GroupElement) -> Result<BruhatInterval> {
        let w_idx = self.index_of(w)?;
        let (_, members) = self.interval_members(w_idx);
        Ok(self.materialize_interval(w_idx, &members))
    }

    pub(crate) fn materialize_interval(&self, w_idx: u32, members: &[u32]) -> BruhatInterval {
        let top = self.element(w_idx).clone();
        let elements: Vec<GroupElement> =
            members.iter().map(|&m| self.element(m).clone()).collect();
        let top_len = top.length() as usize;
        let mut level_offsets = Vec::with_capacity(top_len + 2);
        let mut level = 0usize;
        level_offsets.push(0);
        for (pos, el) in elements.iter().enumerate() {
            while level < el.length() as usize {
                level += 1;
                level_offsets.push(pos);
            }
        }
        while level <= top_len {
            level += 1;
            level_offsets.push(elements.len());
        }
        BruhatInterval { top, elements, level_offsets }
    }

    /// The Bruhat graph of [e, w].
    pub fn bruhat_graph(&self, w: &GroupElement) -> Result<BruhatGraph> {
        let w_idx = self.index_of(w)?;
        let (bits, members) = self.interval_members(w_idx);
        let interval = self.materialize_interval(w_idx, &members);

        let nrefl = self.system().num_reflections();
        let mut position = alloc::collections::BTreeMap::new();
        for (pos, &m) in members.iter().enumerate() {
            position.insert(m, pos as u32);
        }
        let mut edges: Vec<(u32, u32)> = Vec::new();
        let mut degrees = alloc::vec![0u32; members.len()];
        for (pos, &m) in members.iter().enumerate() {
            for t in 0..nrefl {
                let y = self.right_refl(m, t);
                if self.len_of(y) > self.len_of(m) && bits.contains(y) {
                    let ypos = position[&y];
                    edges.push((pos as u32, ypos));
                    degrees[pos] += 1;
                    degrees[ypos as usize] += 1;
                }
            }
        }
        edges.sort_unstable();
        Ok(BruhatGraph { interval, edges, degrees })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::DEFAULT_ELEMENT_CAP;

    fn sys(label: &str) -> CoxeterSystem {
        CoxeterSystem::from_label(label).unwrap()
    }

    fn word(sys: &CoxeterSystem, w: &[usize]) -> GroupElement {
        sys.element_from_word(w).unwrap()
    }

    #[test]
    fn identity_below_everything() {
        let s = sys("A2");
        let e = s.identity();
        for w in s.enumerate_group(DEFAULT_ELEMENT_CAP).unwrap() {
            assert!(s.bruhat_leq(&e, &w).unwrap());
        }
    }

    #[test]
    fn figure_interval_membership() {
        let s = sys("D4");
        let w = word(&s, &[2, 1, 3, 4, 2]);
        assert!(s.bruhat_leq(&word(&s, &[2, 3]), &w).unwrap());
    }

    #[test]
    fn dihedral_incomparable_at_equal_length() {
        let s = sys("C2");
        let a = word(&s, &[2, 1, 2]);
        let b = word(&s, &[1, 2, 1]);
        assert!(!s.bruhat_leq(&a, &b).unwrap());
        assert!(!s.bruhat_leq(&b, &a).unwrap());
    }

    #[test]
    fn leq_mismatch_error() {
        let a2 = sys("A2");
        let a3 = sys("A3");
        let u = a2.generator(1).unwrap();
        let w = a3.generator(1).unwrap();
        assert_eq!(a2.bruhat_leq(&u, &w), Err(Error::SystemMismatch));
    }

    #[test]
    fn interval_sizes() {
        let a2 = sys("A2");
        let uni = Universe::new(&a2, DEFAULT_ELEMENT_CAP).unwrap();
        let w0 = a2.longest_element(&[1, 2]).unwrap();
        assert_eq!(uni.lower_interval(&w0).unwrap().size(), 6);
        assert_eq!(uni.lower_interval(&a2.identity()).unwrap().size(), 1);

        let d4 = sys("D4");
        let uni = Universe::new(&d4, DEFAULT_ELEMENT_CAP).unwrap();
        let w = word(&d4, &[2, 1, 3, 4, 2]);
        assert_eq!(uni.lower_interval(&w).unwrap().size(), 30);
    }

    #[test]
    fn interval_matches_pointwise_filter() {
        for label in ["A3", "C2"] {
            let s = sys(label);
            let uni = Universe::new(&s, DEFAULT_ELEMENT_CAP).unwrap();
            for w in uni.elements() {
                let interval = uni.lower_interval(w).unwrap();
                for z in uni.elements() {
                    assert_eq!(interval.contains(z), s.bruhat_leq(z, w).unwrap());
                }
            }
        }
    }

    #[test]
    fn interval_is_downward_closed_with_unique_top() {
        let s = sys("A3");
        let uni = Universe::new(&s, DEFAULT_ELEMENT_CAP).unwrap();
        let w = word(&s, &[2, 1, 3, 2]);
        let interval = uni.lower_interval(&w).unwrap();
        assert!(interval.contains(&s.identity()));
        assert!(interval.contains(&w));
        assert_eq!(interval.by_length(w.length()).len(), 1);
        for z in interval.elements() {
            for under in uni.elements() {
                if s.bruhat_leq(under, z).unwrap() {
                    assert!(interval.contains(under));
                }
            }
        }
    }

    #[test]
    fn figure_graph_shape_a2() {
        let s = sys("A2");
        let uni = Universe::new(&s, DEFAULT_ELEMENT_CAP).unwrap();
        let w0 = s.longest_element(&[1, 2]).unwrap();
        let g = uni.bruhat_graph(&w0).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
        // Long edge e -> s1s2s1 is present even though it skips two levels.
        let e_pos = g.interval().position(&s.identity()).unwrap() as u32;
        let top_pos = g.interval().position(&w0).unwrap() as u32;
        assert!(g.edges().contains(&(e_pos, top_pos)));
    }

    #[test]
    fn figure_graph_shape_d4() {
        let s = sys("D4");
        let uni = Universe::new(&s, DEFAULT_ELEMENT_CAP).unwrap();
        let w = word(&s, &[2, 1, 3, 4, 2]);
        let g = uni.bruhat_graph(&w).unwrap();
        assert_eq!(g.vertex_count(), 30);
        assert_eq!(g.degree(&s.identity()).unwrap(), 7);
        assert_eq!(g.degree(&w).unwrap(), 5);
    }

    #[test]
    fn degree_of_outside_vertex_is_an_error() {
        let s = sys("A2");
        let uni = Universe::new(&s, DEFAULT_ELEMENT_CAP).unwrap();
        let g = uni.bruhat_graph(&s.generator(1).unwrap()).unwrap();
        assert!(matches!(
            g.degree(&s.generator(2).unwrap()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let s = sys("B3");
        let uni = Universe::new(&s, DEFAULT_ELEMENT_CAP).unwrap();
        for w in uni.elements().iter().step_by(7) {
            let g = uni.bruhat_graph(w).unwrap();
            let total: u32 = g.degrees().iter().sum();
            assert_eq!(total as usize, 2 * g.edge_count());
            assert_eq!(g.degree(w).unwrap(), w.length());
        }
    }

    #[test]
    fn chain_definition_equivalence() {
        // u <= w iff a directed path from u to w exists in the full Bruhat
        // graph; checked exhaustively on A3 and C2 via transitive closure.
        for label in ["A3", "C2"] {
            let s = sys(label);
            let uni = Universe::new(&s, DEFAULT_ELEMENT_CAP).unwrap();
            let n = uni.order();
            let mut reach = alloc::vec![false; n * n];
            for i in 0..n as u32 {
                reach[i as usize * n + i as usize] = true;
            }
            // Edges u -> ut, relaxed to a fixpoint.
            let mut changed = true;
            while changed {
                changed = false;
                for i in 0..n as u32 {
                    for up in uni.up_neighbors(i) {
                        for j in 0..n {
                            if reach[up as usize * n + j] && !reach[i as usize * n + j] {
                                reach[i as usize * n + j] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
            for (i, u) in uni.elements().iter().enumerate() {
                for (j, w) in uni.elements().iter().enumerate() {
                    assert_eq!(s.bruhat_leq(u, w).unwrap(), reach[i * n + j], "{label}");
                }
            }
        }
    }
}
