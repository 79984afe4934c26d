//! Two independent rational-smoothness oracles with certificate extraction.
//!
//! Oracle one: the Bruhat graph of [e, w] is regular. Oracle two: [e, w]
//! contains no broken rhombus. Both decide rational smoothness of the
//! Schubert variety X_w; `cross_validate` sweeps a whole group checking they
//! agree. A definite smoothness verdict is only attached for simply laced
//! systems, where smooth and rationally smooth coincide; multiply laced
//! systems get `smooth: None`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bruhat::BruhatGraph;
use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::universe::Universe;

/// A vertex whose degree differs from l(w); the graph cannot be regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDefect {
    pub vertex: GroupElement,
    pub degree: u32,
    /// l(w), the degree every vertex of a regular interval graph must have.
    pub expected: u32,
}

/// Result of scanning all vertex degrees of a Bruhat graph.
#[derive(Debug, Clone)]
pub struct RegularityCheck {
    pub regular: bool,
    pub common_degree: Option<u32>,
    /// A vertex of maximal degree, present exactly when irregular.
    pub defect: Option<DegreeDefect>,
}

impl BruhatGraph {
    /// Checks whether every vertex has the same degree. Since the top vertex
    /// always has degree l(w), regularity is equivalent to all degrees
    /// equalling l(w).
    pub fn regularity(&self) -> RegularityCheck {
        let expected = self.interval().top().length();
        let mut max_pos = 0usize;
        let mut max_deg = 0u32;
        let mut regular = true;
        for (pos, &deg) in self.degrees().iter().enumerate() {
            if deg != expected {
                regular = false;
            }
            if deg > max_deg {
                max_deg = deg;
                max_pos = pos;
            }
        }
        if regular {
            RegularityCheck { regular: true, common_degree: Some(expected), defect: None }
        } else {
            RegularityCheck {
                regular: false,
                common_degree: None,
                defect: Some(DegreeDefect {
                    vertex: self.interval().elements()[max_pos].clone(),
                    degree: max_deg,
                    expected,
                }),
            }
        }
    }
}

/// A triple (x, u, v) in [e, w] with cover edges x <- u -> v (both upper
/// corners exactly one level above u) such that some y completes
/// x -> y <- v but every such y lies outside [e, w].
///
/// The cover requirement on the lower half is essential: without it the
/// configuration stops characterizing rational smoothness. In C2 the
/// interval below s1s2s1 is regular, yet (s1, e, s1s2s1) with its single
/// completion w0 would pass the three conditions if arbitrary-length edges
/// were allowed on the lower half. The completions y themselves range over
/// ordinary Bruhat-graph edges of any length jump.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrokenRhombus {
    pub x: GroupElement,
    pub u: GroupElement,
    pub v: GroupElement,
    /// All y with x -> y <- v, sorted; nonempty, all outside [e, w].
    pub witnesses_y: Vec<GroupElement>,
}

impl BrokenRhombus {
    /// Re-checks the three defining conditions against `top`, using only
    /// `multiply`, `inverse` and `bruhat_leq` — no dense tables — so a
    /// certificate produced by the fast scan is validated along an
    /// independent code path.
    pub fn validate(&self, sys: &CoxeterSystem, top: &GroupElement) -> Result<()> {
        let below = |z: &GroupElement| sys.bruhat_leq(z, top);
        if !(below(&self.x)? && below(&self.u)? && below(&self.v)?) {
            return Err(Error::PreconditionViolated("rhombus corner is not below w"));
        }
        let edge = |a: &GroupElement, b: &GroupElement| -> Result<bool> {
            let t = sys.multiply(&sys.inverse(a)?, b)?;
            Ok(a.length() < b.length() && sys.reflection_from_element(&t).is_ok())
        };
        let cover = |a: &GroupElement, b: &GroupElement| -> Result<bool> {
            Ok(b.length() == a.length() + 1 && edge(a, b)?)
        };
        if !(cover(&self.u, &self.x)? && cover(&self.u, &self.v)?) {
            return Err(Error::PreconditionViolated("condition (1) fails: u -> x or u -> v missing"));
        }
        let mut ys = Vec::new();
        for t in sys.reflections() {
            let y = sys.multiply(&self.x, t.element())?;
            if y.length() > self.x.length() && edge(&self.v, &y)? {
                ys.push(y);
            }
        }
        ys.sort_unstable();
        if ys.is_empty() {
            return Err(Error::PreconditionViolated("condition (2) fails: no completing y"));
        }
        if ys != self.witnesses_y {
            return Err(Error::PreconditionViolated("witness list does not match the y-set"));
        }
        for y in &ys {
            if below(y)? {
                return Err(Error::PreconditionViolated("condition (3) fails: some y lies below w"));
            }
        }
        Ok(())
    }
}

/// Evidence attached to a smoothness verdict.
#[derive(Debug, Clone)]
pub enum Evidence {
    RegularGraph { common_degree: u32 },
    DegreeDefect(DegreeDefect),
    Rhombus(BrokenRhombus),
}

/// Verdict plus evidence for one element.
#[derive(Debug, Clone)]
pub struct SmoothnessCertificate {
    pub element: GroupElement,
    pub rationally_smooth: bool,
    /// Only populated for simply laced systems, where it equals
    /// `rationally_smooth`.
    pub smooth: Option<bool>,
    pub evidence: Evidence,
}

/// Whether a rhombus scan stops at the first certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhombusSearch {
    First,
    All,
}

/// One element on which the two oracles disagreed. Must never be produced.
#[derive(Debug, Clone)]
pub struct Disagreement {
    pub element: GroupElement,
    pub carrell_peterson: bool,
    pub broken_rhombus: bool,
}

/// Outcome of running both oracles over every element of a group.
#[derive(Debug, Clone)]
pub struct CrossValidationReport {
    pub system: String,
    pub checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl CrossValidationReport {
    pub fn agreement(&self) -> bool {
        self.disagreements.is_empty()
    }
}

impl Universe<'_> {
    /// Rational smoothness by the degree-regularity criterion.
    pub fn rationally_smooth_cp(&self, w: &GroupElement) -> Result<SmoothnessCertificate> {
        let w_idx = self.index_of(w)?;
        Ok(self.cp_certificate(w_idx))
    }

    pub(crate) fn cp_certificate(&self, w_idx: u32) -> SmoothnessCertificate {
        let (regular, defect) = self.regularity_scan(w_idx);
        let element = self.element(w_idx).clone();
        let evidence = match defect {
            None => Evidence::RegularGraph { common_degree: element.length() },
            Some((vertex_idx, degree)) => Evidence::DegreeDefect(DegreeDefect {
                vertex: self.element(vertex_idx).clone(),
                degree,
                expected: element.length(),
            }),
        };
        self.certificate(element, regular, evidence)
    }

    fn certificate(
        &self,
        element: GroupElement,
        rationally_smooth: bool,
        evidence: Evidence,
    ) -> SmoothnessCertificate {
        let smooth = self.system().is_simply_laced().then_some(rationally_smooth);
        SmoothnessCertificate { element, rationally_smooth, smooth, evidence }
    }

    /// Degree scan over [e, w] without materializing the graph. Returns
    /// whether all degrees equal l(w) and, if not, a vertex of maximal
    /// degree (the first such in canonical order) with its degree.
    pub(crate) fn regularity_scan(&self, w_idx: u32) -> (bool, Option<(u32, u32)>) {
        let (bits, members) = self.interval_members(w_idx);
        let expected = self.len_of(w_idx);
        let nrefl = self.system().num_reflections();
        let mut regular = true;
        let mut max: Option<(u32, u32)> = None;
        for &m in &members {
            let mut degree = 0u32;
            for t in 0..nrefl {
                if bits.contains(self.right_refl(m, t)) {
                    degree += 1;
                }
            }
            if degree != expected {
                regular = false;
            }
            if max.map_or(true, |(_, best)| degree > best) {
                max = Some((m, degree));
            }
        }
        if regular {
            (true, None)
        } else {
            (false, max)
        }
    }

    /// Enumerates broken rhombi of [e, w]. Scan order: u ascending in
    /// `(length, ShortLex)`, then the second corner v, then the first corner
    /// x, both ascending over u's covers in the interval; the first
    /// qualifying triple under this order is the canonical certificate.
    pub fn find_broken_rhombi(
        &self,
        w: &GroupElement,
        mode: RhombusSearch,
    ) -> Result<Vec<BrokenRhombus>> {
        let w_idx = self.index_of(w)?;
        Ok(self.rhombus_scan(w_idx, mode))
    }

    pub(crate) fn rhombus_scan(&self, w_idx: u32, mode: RhombusSearch) -> Vec<BrokenRhombus> {
        let mut found = Vec::new();
        let (bits, members) = self.interval_members(w_idx);
        if members.len() == self.order() {
            // Every y satisfies y <= w0, so condition (3) can never hold.
            return found;
        }
        for &u in &members {
            // Covers of u that stay in the interval, ascending.
            let target = self.len_of(u) + 1;
            let nbrs: Vec<u32> = self
                .up_neighbors(u)
                .into_iter()
                .filter(|&y| self.len_of(y) == target && bits.contains(y))
                .collect();
            if nbrs.len() < 2 {
                continue;
            }
            let ups: Vec<Vec<u32>> = nbrs.iter().map(|&n| self.up_neighbors(n)).collect();
            for (vi, &v) in nbrs.iter().enumerate() {
                for (xi, &x) in nbrs.iter().enumerate() {
                    if xi == vi {
                        continue;
                    }
                    let mut any = false;
                    let mut all_outside = true;
                    for &y in intersect_sorted(&ups[xi], &ups[vi]).iter() {
                        any = true;
                        if bits.contains(y) {
                            all_outside = false;
                            break;
                        }
                    }
                    if any && all_outside {
                        let witnesses_y = intersect_sorted(&ups[xi], &ups[vi])
                            .into_iter()
                            .map(|y| self.element(y).clone())
                            .collect();
                        found.push(BrokenRhombus {
                            x: self.element(x).clone(),
                            u: self.element(u).clone(),
                            v: self.element(v).clone(),
                            witnesses_y,
                        });
                        if mode == RhombusSearch::First {
                            return found;
                        }
                    }
                }
            }
        }
        found
    }

    /// Rational smoothness by the broken-rhombus criterion.
    pub fn rationally_smooth_br(&self, w: &GroupElement) -> Result<SmoothnessCertificate> {
        let rhombi = self.find_broken_rhombi(w, RhombusSearch::First)?;
        let element = w.clone();
        match rhombi.into_iter().next() {
            // No rhombus means rationally smooth; the graph is then regular
            // of the forced common degree l(w).
            None => Ok(self.certificate(
                element.clone(),
                true,
                Evidence::RegularGraph { common_degree: element.length() },
            )),
            Some(rhombus) => Ok(self.certificate(element, false, Evidence::Rhombus(rhombus))),
        }
    }

    /// Runs both oracles over every element of the group and reports any
    /// disagreement. The returned list must always be empty.
    pub fn cross_validate(&self) -> CrossValidationReport {
        let mut disagreements = Vec::new();
        for idx in 0..self.order() as u32 {
            let (cp, _) = self.regularity_scan(idx);
            let br = self.rhombus_scan(idx, RhombusSearch::First).is_empty();
            if cp != br {
                disagreements.push(Disagreement {
                    element: self.element(idx).clone(),
                    carrell_peterson: cp,
                    broken_rhombus: br,
                });
            }
        }
        CrossValidationReport {
            system: self.system().label().into(),
            checked: self.order(),
            disagreements,
        }
    }
}

fn intersect_sorted(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
