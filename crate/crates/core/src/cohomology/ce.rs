use super::complex::TwistedComplex;
use crate::graded::{DegRange, SymWord, TruncProfile};
use crate::mc::{twist, MCElem, Scalars};
use crate::structures::{FiniteCdga, FreeCdga, LinftyAlg, LinftyMap, Vector};
use crate::{Error, Result};

/// The representing cdga `C(g) = (Ŝ Σ⁻¹g*, Q)`.
pub fn ce_of(g: &LinftyAlg) -> FreeCdga {
    g.ce_of()
}

/// `C(V)_+` modulo words longer than `weight`, its word basis, and the degrees
/// where nothing was cut.
pub fn ce_coefficients(v: &LinftyAlg, weight: usize) -> (FiniteCdga, Vec<SymWord>, DegRange) {
    let ce = v.ce_of();
    let (a, words) = FiniteCdga::truncated_free(&ce, weight);
    (a, words, ce.truncation_complete(weight))
}

/// The element of `MC(U, C(V)_+)` classifying an L∞ map `f: V → U`.
pub fn ce_mc_of_map(f: &LinftyMap, weight: usize) -> Result<MCElem> {
    let (a, words, _) = ce_coefficients(&f.source, weight);
    let comps = f
        .images
        .iter()
        .map(|p| {
            let mut v = Vector::zero();
            for (w, c) in p.iter() {
                if w.is_unit() {
                    return Err(Error::NonContinuous("map image has a constant term".into()));
                }
                if let Some(i) = words.iter().position(|x| x == w) {
                    v.add_term(i, c.clone());
                }
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    MCElem::new(f.target.clone(), a, comps)
}

/// `C^ξ_CE(V, U) = (Ŝ Σ⁻¹V* ⊗ U)^ξ`, or the truncated `([Ŝ Σ⁻¹V*]_+ ⊗ U)^ξ`,
/// with the coefficients cut at the profile weight.
pub fn ce_complex(
    v: &LinftyAlg,
    u: &LinftyAlg,
    xi: &MCElem,
    trunc: &TruncProfile,
    truncated: bool,
) -> Result<TwistedComplex> {
    let (a, _, complete) = ce_coefficients(v, trunc.weight_max);
    if xi.coeff != a {
        return Err(Error::InvalidTruncation(format!(
            "coefficients must be C(V)_+ cut at weight {}",
            trunc.weight_max
        )));
    }
    if &xi.alg != u {
        return Err(Error::Unsupported("MC element lives over a different algebra".into()));
    }
    let tw = twist(xi, trunc)?;
    let scalars = if truncated { Scalars::Ideal } else { Scalars::Unital };
    TwistedComplex::build(tw, scalars, complete, trunc)
}
