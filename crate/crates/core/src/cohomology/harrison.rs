use super::complex::TwistedComplex;
use crate::graded::{Deg, GradedSpace, FreeLie, Lin, TruncProfile};
use crate::linalg::{ratio, Rat};
use crate::mc::{twist, MCElem, Scalars};
use crate::structures::{DglaTable, FiniteCdga, FiniteMap, LinftyAlg, Vector};
use crate::{Error, Result};

/// `L(A)`: the free Lie algebra on `Σ⁻¹A*` with the differential dual to
/// `d_A` and the product, cut at a Lie weight.
#[derive(Clone, Debug)]
pub struct HarrisonLie {
    pub source: FiniteCdga,
    pub lie: FreeLie,
    pub table: DglaTable,
    pub alg: LinftyAlg,
}

fn sgn(odd: bool) -> Rat {
    if odd {
        -ratio(1, 1)
    } else {
        ratio(1, 1)
    }
}

impl HarrisonLie {
    /// Basis index of the letter dual to `a_α`.
    pub fn letter(&self, alpha: usize) -> usize {
        self.lie.letter_index(alpha)
    }
}

/// Letters `v_α` of degree `−|a_α| − 1` with
/// `d v_γ = −(−1)^{|a_γ|} (Σ_β δ_{γβ} v_β + ½ Σ (−1)^{|v_α||a_β|} μ^γ_{αβ} [v_α, v_β])`.
pub fn harrison_lie_of(a: &FiniteCdga, weight: usize) -> Result<HarrisonLie> {
    if a.is_unital() {
        return Err(Error::Unsupported("Harrison complex needs a non-unital algebra".into()));
    }
    if weight == 0 {
        return Err(Error::InvalidTruncation("Lie weight must be positive".into()));
    }
    let letters = GradedSpace::new(
        a.basis().generators().iter().map(|g| (format!("{}*", g.name), Deg(-g.deg.0 - 1))),
    )?;
    let vdeg = letters.degs();
    let lie = FreeLie::new(letters, weight);
    let n = a.dim();
    let mut dletter: Vec<Lin<usize>> = vec![Lin::zero(); n];
    for beta in 0..n {
        for (gamma, c) in a.diff_of(beta).iter() {
            dletter[*gamma].add_term(lie.letter_index(beta), c.clone());
        }
    }
    let half = ratio(1, 2);
    for (&(alpha, beta), prod) in a.product_table() {
        let br = lie.bracket_basis(lie.letter_index(alpha), lie.letter_index(beta));
        if br.is_zero() {
            continue;
        }
        let s = sgn(vdeg[alpha].is_odd() && a.deg(beta).is_odd()) * &half;
        for (gamma, mu) in prod.iter() {
            dletter[*gamma].add_scaled(&br, &(&s * mu));
        }
    }
    for (gamma, d) in dletter.iter_mut().enumerate() {
        *d = d.scaled(&-sgn(a.deg(gamma).is_odd()));
    }
    let mut diff: Vec<Lin<usize>> = vec![Lin::zero(); lie.dim()];
    for k in 0..lie.dim() {
        diff[k] = match lie.factors(k) {
            None => {
                let alpha = lie.basis()[k].word[0];
                dletter[alpha].clone()
            }
            Some((i, j)) => {
                let mut out = lie.bracket(&diff[i], &Lin::basis(j));
                let t = lie.bracket(&Lin::basis(i), &diff[j]);
                out.add_scaled(&t, &sgn(lie.deg(i).is_odd()));
                out
            }
        };
    }
    let space = lie.as_space();
    let mut table = DglaTable::new(space);
    for (k, d) in diff.into_iter().enumerate() {
        table.diff[k] = d;
    }
    for i in 0..lie.dim() {
        for j in i..lie.dim() {
            let b = lie.bracket_basis(i, j);
            if !b.is_zero() {
                table.set_bracket(i, j, b);
            }
        }
    }
    let alg = LinftyAlg::from_dgla(&table).with_complete(lie.complete_range());
    Ok(HarrisonLie { source: a.clone(), lie, table, alg })
}

/// `ξ = Σ_α f(a_α) ⊗ v_α` for an algebra map `f: A → B`.
pub fn harrison_mc(h: &HarrisonLie, f: &FiniteMap) -> Result<MCElem> {
    if f.source != h.source {
        return Err(Error::Unsupported("map source differs from the Harrison algebra".into()));
    }
    let mut comps = vec![Vector::zero(); h.lie.dim()];
    for (alpha, im) in f.images.iter().enumerate() {
        comps[h.letter(alpha)] = im.clone();
    }
    let xi = MCElem::new(h.alg.clone(), f.target.clone(), comps)?;
    if !xi.in_ideal() {
        return Err(Error::NonContinuous("map hits the unit".into()));
    }
    Ok(xi)
}

/// `C^ξ_Harr(A, B) = (B̃ ⊗ L(A))^ξ`, or the truncated `(B ⊗ L(A))^ξ`.
pub fn harrison_complex(
    h: &HarrisonLie,
    xi: &MCElem,
    trunc: &TruncProfile,
    truncated: bool,
) -> Result<TwistedComplex> {
    if xi.alg != h.alg {
        return Err(Error::Unsupported("MC element lives over a different algebra".into()));
    }
    let tw = twist(xi, trunc)?;
    let scalars = if truncated { Scalars::Ideal } else { Scalars::Unital };
    TwistedComplex::build(tw, scalars, crate::graded::DegRange::ALL, trunc)
}
