//! Reflection subgroups: closure, canonical generators, dihedral recognition,
//! and the induced-versus-internal Bruhat graph comparison.
//!
//! Subgroup elements stay in their ambient representation throughout; the
//! comparison theorem is about the induced structure and re-encoding would
//! obscure the check.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::system::Reflection;
use crate::universe::{BitSet, Universe};

/// A subgroup generated by reflections of the ambient system.
#[derive(Debug, Clone)]
pub struct ReflectionSubgroup {
    elements: Vec<GroupElement>,
    member_keys: BTreeSet<u128>,
    reflections_in: Vec<Reflection>,
    canonical_gens: Vec<Reflection>,
}

impl ReflectionSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Members sorted by ambient `(length, ShortLex word)`.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    /// W' ∩ T, ordered by root.
    pub fn reflections_in(&self) -> &[Reflection] {
        &self.reflections_in
    }

    /// The canonical generating set X = { t : N(t) ∩ W' = {t} }, ordered by
    /// root. (W', X) is itself a Coxeter system.
    pub fn canonical_generators(&self) -> &[Reflection] {
        &self.canonical_gens
    }

    pub fn contains(&self, w: &GroupElement) -> bool {
        self.member_keys.contains(&w.key())
    }
}

impl Universe<'_> {
    /// Closure of the given reflections under multiplication. The subgroup's
    /// reflection set is recomputed as members ∩ T and may strictly contain
    /// the generators.
    pub fn reflection_closure(&self, gens: &[Reflection]) -> Result<ReflectionSubgroup> {
        let sys = self.system();
        let mut gen_ts = Vec::with_capacity(gens.len());
        for g in gens {
            sys.check(g.element())?;
            let t = sys
                .reflection_index(g.element())
                .ok_or(Error::PreconditionViolated("generator is not a reflection"))?;
            gen_ts.push(t as usize);
        }
        let mut bits = BitSet::new(self.order());
        let mut members: Vec<u32> = Vec::new();
        bits.insert(0);
        members.push(0);
        let mut next = 0usize;
        while next < members.len() {
            let m = members[next];
            for &t in &gen_ts {
                let product = self.right_refl(m, t);
                if bits.insert(product) {
                    members.push(product);
                }
            }
            next += 1;
        }
        members.sort_unstable();
        Ok(self.subgroup_from_members(&members))
    }

    fn subgroup_from_members(&self, members: &[u32]) -> ReflectionSubgroup {
        let sys = self.system();
        let member_set = {
            let mut bits = BitSet::new(self.order());
            for &m in members {
                bits.insert(m);
            }
            bits
        };
        let reflections_in: Vec<Reflection> = (0..sys.num_reflections())
            .filter(|&t| member_set.contains(self.reflection_element_idx(t)))
            .map(|t| sys.reflections()[t].clone())
            .collect();

        // X = { t in W' ∩ T : N(t) ∩ W' = {t} }. Each t lies in its own
        // inversion set, so the condition is that no other member of W'
        // shows up there.
        let canonical_gens: Vec<Reflection> = reflections_in
            .iter()
            .filter(|t| {
                sys.inversion_set(t.element())
                    .expect("same system")
                    .iter()
                    .filter(|r| {
                        let idx = self
                            .index_of(r.element())
                            .expect("reflection is enumerated");
                        member_set.contains(idx)
                    })
                    .count()
                    == 1
            })
            .cloned()
            .collect();

        let elements: Vec<GroupElement> =
            members.iter().map(|&m| self.element(m).clone()).collect();
        let member_keys = elements.iter().map(|el| el.key()).collect();
        ReflectionSubgroup { elements, member_keys, reflections_in, canonical_gens }
    }

    /// Dihedral subgroup generated by a quadruple of reflections with
    /// t1 t2 = t3 t4 != e.
    pub fn dihedral_from_quadruple(
        &self,
        t1: &Reflection,
        t2: &Reflection,
        t3: &Reflection,
        t4: &Reflection,
    ) -> Result<ReflectionSubgroup> {
        let sys = self.system();
        let p12 = sys.multiply(t1.element(), t2.element())?;
        let p34 = sys.multiply(t3.element(), t4.element())?;
        if p12 != p34 {
            return Err(Error::PreconditionViolated("t1 t2 and t3 t4 differ"));
        }
        if p12.is_identity() {
            return Err(Error::PreconditionViolated("t1 t2 must not be the identity"));
        }
        self.reflection_closure(&[t1.clone(), t2.clone(), t3.clone(), t4.clone()])
    }

    /// Bond order m of a dihedral reflection subgroup: the order of the
    /// product of its two canonical generators.
    pub fn dihedral_type(&self, subgroup: &ReflectionSubgroup) -> Result<u32> {
        let gens = subgroup.canonical_generators();
        if gens.len() != 2 {
            return Err(Error::PreconditionViolated("subgroup is not dihedral"));
        }
        let sys = self.system();
        let product = sys.multiply(gens[0].element(), gens[1].element())?;
        let p_idx = self.index_of(&product)?;
        let mut power = p_idx;
        let mut order = 1u32;
        while !self.element(power).is_identity() {
            let raw = sys.raw_multiply(
                &sys.to_raw(self.element(power)),
                &sys.to_raw(&product),
            );
            power = self.index_of(&sys.raw_to_element(raw))?;
            order += 1;
        }
        Ok(order)
    }

    /// Compares the subgraph of the ambient Bruhat graph induced on W'
    /// against the Bruhat graph of the abstract system (W', X), whose edge
    /// directions come from the internal length |N(u) ∩ W'|. Both graphs
    /// live on the same vertex set; the edge sets are compared directly.
    pub fn compare_bruhat_graphs(&self, subgroup: &ReflectionSubgroup) -> Result<bool> {
        let sys = self.system();
        let sub_ts: Vec<usize> = subgroup
            .reflections_in()
            .iter()
            .map(|t| sys.reflection_index(t.element()).expect("member reflection") as usize)
            .collect();
        let member_idx: Vec<u32> = subgroup
            .elements()
            .iter()
            .map(|el| self.index_of(el))
            .collect::<Result<_>>()?;

        // Internal length of each member: inversions of the ambient set that
        // land inside W'.
        let mut internal_len = alloc::collections::BTreeMap::new();
        for &m in &member_idx {
            let el = self.element(m);
            let count = sub_ts.iter().filter(|&&t| sys.inversion_contains(el, t)).count() as u32;
            internal_len.insert(m, count);
        }

        let mut ambient_edges = BTreeSet::new();
        let mut internal_edges = BTreeSet::new();
        for &m in &member_idx {
            for &t in &sub_ts {
                let product = self.right_refl(m, t);
                // u and ut both lie in W', so every ambient reflection edge
                // between members comes from some t in W' ∩ T.
                if self.len_of(product) > self.len_of(m) {
                    ambient_edges.insert((m, product));
                }
                if internal_len[&product] > internal_len[&m] {
                    internal_edges.insert((m, product));
                }
            }
        }
        Ok(ambient_edges == internal_edges)
    }
}
