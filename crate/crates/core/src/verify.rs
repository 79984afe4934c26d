//! Involution classification and exhaustive theorem sweeps.
//!
//! For every involution v of a finite Weyl group the verifier decides whether
//! v is the longest element of a parabolic subgroup and computes a smoothness
//! certificate. In simply laced types the two must coincide; singular
//! involutions additionally get a constructive witness — either the degree
//! defect at the identity, or a broken rhombus of the shape (st, sts, ts)
//! built from a generator s and a reflection t found below sv but not below v.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::element::GroupElement;
use crate::error::{Error, Result};
use crate::root::sidx_is_negative;
use crate::smoothness::{BrokenRhombus, DegreeDefect, SmoothnessCertificate};
use crate::system::{CoxeterSystem, Reflection};
use crate::universe::Universe;

/// Constructive singularity witness for an involution.
#[derive(Debug, Clone)]
pub struct ProofWitness {
    /// Generator with v < sv, 1-based; the smallest such in the support.
    pub s: usize,
    /// The smallest reflection (by root order) with t <= sv but t != <= v.
    pub t: Reflection,
    /// The triple (st, sts, ts), a broken rhombus of [e, v].
    pub rhombus: BrokenRhombus,
}

/// Singularity evidence: a degree defect at the identity, or a rhombus
/// witness.
#[derive(Debug, Clone)]
pub enum WitnessOutcome {
    Defect(DegreeDefect),
    Witness(ProofWitness),
}

/// Classification of a single involution.
#[derive(Debug, Clone)]
pub struct InvolutionVerdict {
    pub element: GroupElement,
    /// S(v), sorted 1-based generator indices.
    pub support: Vec<usize>,
    pub is_parabolic_longest: bool,
    pub certificate: SmoothnessCertificate,
    /// Present for singular involutions of simply laced systems.
    pub proof_witness: Option<WitnessOutcome>,
}

/// Outcome of sweeping every involution of a group.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub system: alloc::string::String,
    pub simply_laced: bool,
    pub involution_count: usize,
    pub verdicts: Vec<InvolutionVerdict>,
    /// Whether "parabolic longest" and "rationally smooth" agreed on every
    /// involution. Always true for simply laced systems (enforced); may be
    /// false for multiply laced ones (C2 is the expected counterexample).
    pub equivalence_holds: bool,
    pub witnesses_validated: usize,
}

impl TheoremReport {
    /// Rationally smooth involutions, in order.
    pub fn smooth(&self) -> impl Iterator<Item = &InvolutionVerdict> {
        self.verdicts.iter().filter(|v| v.certificate.rationally_smooth)
    }

    /// Involutions that are not rationally smooth, in order.
    pub fn singular(&self) -> impl Iterator<Item = &InvolutionVerdict> {
        self.verdicts.iter().filter(|v| !v.certificate.rationally_smooth)
    }

    /// Involutions where the two notions disagree (multiply laced only).
    pub fn mismatches(&self) -> impl Iterator<Item = &InvolutionVerdict> {
        self.verdicts
            .iter()
            .filter(|v| v.is_parabolic_longest != v.certificate.rationally_smooth)
    }
}

impl CoxeterSystem {
    /// Whether v is the longest element of a parabolic subgroup. Since
    /// support(w0(J)) = J, it suffices to compare v against w0(S(v)).
    pub fn is_parabolic_longest(&self, v: &GroupElement) -> Result<bool> {
        self.check(v)?;
        Ok(v == &self.longest_element(&v.support())?)
    }
}

impl Universe<'_> {
    /// All involutions (including the identity), in `(length, ShortLex)` order.
    pub fn involutions(&self) -> Vec<GroupElement> {
        self.elements().iter().filter(|w| w.is_involution()).cloned().collect()
    }

    /// Classifies one involution.
    pub fn involution_verdict(&self, v: &GroupElement) -> Result<InvolutionVerdict> {
        let sys = self.system();
        sys.check(v)?;
        if !v.is_involution() {
            return Err(Error::PreconditionViolated("element is not an involution"));
        }
        let is_parabolic_longest = sys.is_parabolic_longest(v)?;
        let certificate = self.cp_certificate(self.index_of(v)?);
        let proof_witness = if sys.is_simply_laced() && !is_parabolic_longest {
            Some(self.proof_witness(v)?)
        } else {
            None
        };
        Ok(InvolutionVerdict {
            element: v.clone(),
            support: v.support(),
            is_parabolic_longest,
            certificate,
            proof_witness,
        })
    }

    /// Constructive singularity witness for an involution of a simply laced
    /// system that is not a parabolic longest element.
    ///
    /// If deg_v(e) differs from l(v) the degree defect at the identity is
    /// returned directly. Otherwise the search picks the smallest s in S(v)
    /// with v < sv, then the smallest reflection t (by root order) with
    /// t <= sv and t not below v, and returns the rhombus (st, sts, ts).
    pub fn proof_witness(&self, v: &GroupElement) -> Result<WitnessOutcome> {
        let sys = self.system();
        sys.check(v)?;
        if !v.is_involution() {
            return Err(Error::PreconditionViolated("element is not an involution"));
        }
        if !sys.is_simply_laced() {
            return Err(Error::PreconditionViolated("system is multiply laced"));
        }
        if sys.is_parabolic_longest(v)? {
            return Err(Error::PreconditionViolated("element is a parabolic longest element"));
        }

        let v_idx = self.index_of(v)?;
        let (v_bits, _) = self.interval_members(v_idx);
        let nrefl = sys.num_reflections();
        let deg_e = (0..nrefl)
            .filter(|&t| v_bits.contains(self.reflection_element_idx(t)))
            .count() as u32;
        if deg_e != v.length() {
            return Ok(WitnessOutcome::Defect(DegreeDefect {
                vertex: sys.identity(),
                degree: deg_e,
                expected: v.length(),
            }));
        }

        // v != w0(S(v)), so some support generator raises v on the left.
        let s = v
            .support()
            .into_iter()
            .find(|&s| !sidx_is_negative(v.inv_images[s - 1]))
            .expect("a non-longest element has an ascent in its support");
        let sv_idx = self.left_gen(v_idx, s - 1);
        let (sv_bits, _) = self.interval_members(sv_idx);
        let t = (0..nrefl)
            .find(|&t| {
                let el = self.reflection_element_idx(t);
                sv_bits.contains(el) && !v_bits.contains(el)
            })
            .expect("deg(e) grows strictly from v to sv");
        let t_idx = self.reflection_element_idx(t);

        let st = self.left_gen(t_idx, s - 1);
        let ts = self.right_gen(t_idx, s - 1);
        let sts = self.right_gen(st, s - 1);
        let witnesses_y: Vec<GroupElement> = {
            let st_ups = self.up_neighbors(st);
            let ts_ups = self.up_neighbors(ts);
            st_ups
                .into_iter()
                .filter(|y| ts_ups.binary_search(y).is_ok())
                .map(|y| self.element(y).clone())
                .collect()
        };
        Ok(WitnessOutcome::Witness(ProofWitness {
            s,
            t: sys.reflections()[t].clone(),
            rhombus: BrokenRhombus {
                x: self.element(st).clone(),
                u: self.element(sts).clone(),
                v: self.element(ts).clone(),
                witnesses_y,
            },
        }))
    }

    /// Sweeps every involution. In simply laced systems a mismatch between
    /// "parabolic longest" and "rationally smooth", or a witness failing
    /// revalidation, raises `TheoremViolation`.
    pub fn verify_theorem(&self) -> Result<TheoremReport> {
        let verdicts = self
            .involutions()
            .iter()
            .map(|v| self.involution_verdict(v))
            .collect::<Result<Vec<_>>>()?;
        self.report_from_verdicts(verdicts)
    }

    /// Assembles and checks a report from per-involution verdicts (which may
    /// have been computed in parallel by the caller). Verdicts must be the
    /// full involution list in canonical order.
    pub fn report_from_verdicts(&self, verdicts: Vec<InvolutionVerdict>) -> Result<TheoremReport> {
        let sys = self.system();
        let equivalence_holds = verdicts
            .iter()
            .all(|v| v.is_parabolic_longest == v.certificate.rationally_smooth);

        let mut witnesses_validated = 0usize;
        for verdict in &verdicts {
            if let Some(WitnessOutcome::Witness(witness)) = &verdict.proof_witness {
                witness.rhombus.validate(sys, &verdict.element).map_err(|err| {
                    Error::TheoremViolation {
                        system: sys.label().into(),
                        detail: alloc::format!(
                            "witness for {:?} failed revalidation: {err}",
                            verdict.element.word()
                        ),
                    }
                })?;
                witnesses_validated += 1;
            }
        }

        if sys.is_simply_laced() && !equivalence_holds {
            let bad = verdicts
                .iter()
                .find(|v| v.is_parabolic_longest != v.certificate.rationally_smooth)
                .expect("mismatch exists");
            return Err(Error::TheoremViolation {
                system: sys.label().into(),
                detail: alloc::format!(
                    "involution {:?}: parabolic longest = {}, rationally smooth = {}",
                    bad.element.word(),
                    bad.is_parabolic_longest,
                    bad.certificate.rationally_smooth
                ),
            });
        }

        Ok(TheoremReport {
            system: sys.label().to_string(),
            simply_laced: sys.is_simply_laced(),
            involution_count: verdicts.len(),
            verdicts,
            equivalence_holds,
            witnesses_validated,
        })
    }
}
