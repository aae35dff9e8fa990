use super::elem::MCElem;
use crate::graded::{Deg, Lin, TruncProfile};
use crate::linalg::{inv_factorial, Rat};
use crate::structures::{DglaTable, FiniteCdga, LinftyAlg};
use crate::{Error, Result};

/// Element of `A ⊗ g`, keyed by (coefficient basis index, space basis index).
pub type TensorVec = Lin<(usize, usize)>;

/// The dgla `A ⊗ g` with `d(a⊗x) = d_A a⊗x + (−1)^{|a|} a⊗dx` and
/// `[a⊗x, b⊗y] = (−1)^{|x||b|} ab⊗[x, y]`.
#[derive(Clone, Debug)]
pub struct TensorDgla<'a> {
    pub coeff: &'a FiniteCdga,
    pub table: DglaTable,
}

impl<'a> TensorDgla<'a> {
    pub fn new(alg: &LinftyAlg, coeff: &'a FiniteCdga) -> Result<TensorDgla<'a>> {
        let table = alg.to_dgla().ok_or_else(|| Error::Unsupported("gauge action needs a dgla".into()))?;
        Ok(TensorDgla { coeff, table })
    }

    pub fn deg(&self, key: &(usize, usize)) -> Deg {
        self.coeff.deg(key.0) + self.table.space.deg(key.1)
    }

    pub fn d(&self, x: &TensorVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for ((a, e), c) in x.iter() {
            for (b, cb) in self.coeff.diff_of(*a).iter() {
                out.add_term((*b, *e), c * cb);
            }
            let s = if self.coeff.deg(*a).is_odd() { -c.clone() } else { c.clone() };
            for (f, cf) in self.table.diff[*e].iter() {
                out.add_term((*a, *f), &s * cf);
            }
        }
        out
    }

    pub fn bracket(&self, x: &TensorVec, y: &TensorVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for ((a, e), c) in x.iter() {
            for ((b, f), c2) in y.iter() {
                let br = self.table.bracket_of(*e, *f);
                if br.is_zero() {
                    continue;
                }
                let ab = self.coeff.mul_basis(*a, *b);
                if ab.is_zero() {
                    continue;
                }
                let odd = self.table.space.deg(*e).is_odd() && self.coeff.deg(*b).is_odd();
                let s: Rat = if odd { -(c * c2) } else { c * c2 };
                for (g, cg) in ab.iter() {
                    for (h, ch) in br.iter() {
                        out.add_term((*g, *h), &s * cg * ch);
                    }
                }
            }
        }
        out
    }

    /// `Σ ξ_k ⊗ e_k` for an MC element stored by generator.
    pub fn from_mc(&self, xi: &MCElem) -> TensorVec {
        let mut out = TensorVec::zero();
        for (a, k, c) in xi.terms() {
            out.add_term((a, k), c);
        }
        out
    }

    pub fn to_mc(&self, alg: &LinftyAlg, x: &TensorVec) -> Result<MCElem> {
        let terms: Vec<(usize, usize, Rat)> = x.iter().map(|((a, k), c)| (*a, *k, c.clone())).collect();
        MCElem::from_terms(alg.clone(), self.coeff.clone(), &terms)
    }

    /// `dξ + ½[ξ, ξ]`.
    pub fn curvature(&self, x: &TensorVec) -> TensorVec {
        let mut out = self.d(x);
        out.add_scaled(&self.bracket(x, x), &crate::linalg::ratio(1, 2));
        out
    }
}

/// A degree 0 element of `A ⊗ g` with coefficients in the augmentation ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeParam {
    pub terms: TensorVec,
}

impl GaugeParam {
    pub fn new(alg: &LinftyAlg, coeff: &FiniteCdga, terms: &[(usize, usize, Rat)]) -> Result<GaugeParam> {
        let mut v = TensorVec::zero();
        for (a, k, c) in terms {
            if *a >= coeff.dim() || *k >= alg.dim() {
                return Err(Error::LengthMismatch { expected: alg.dim(), got: *k });
            }
            if Some(*a) == coeff.unit() {
                return Err(Error::NonContinuous("gauge parameter has a unit component".into()));
            }
            let d = coeff.deg(*a) + alg.space().deg(*k);
            if d != Deg(0) {
                return Err(Error::Degree(format!("gauge parameter term of degree {d}")));
            }
            v.add_term((*a, *k), c.clone());
        }
        Ok(GaugeParam { terms: v })
    }

    pub fn zero() -> GaugeParam {
        GaugeParam { terms: TensorVec::zero() }
    }
}

const MAX_DEPTH: usize = 256;

/// `ξ ↦ e^{ad λ} ξ − Σ_{k≥0} (ad λ)^k (dλ) / (k+1)!`.
pub fn gauge_act(lambda: &GaugeParam, xi: &MCElem, _trunc: &TruncProfile) -> Result<MCElem> {
    let g = TensorDgla::new(&xi.alg, &xi.coeff)?;
    let mut out = TensorVec::zero();
    let mut term = g.from_mc(xi);
    let mut n = 0;
    while !term.is_zero() {
        out.add_scaled(&term, &inv_factorial(n));
        term = g.bracket(&lambda.terms, &term);
        n += 1;
        if n > MAX_DEPTH {
            return Err(Error::Unsupported("gauge series does not terminate".into()));
        }
    }
    let mut term = g.d(&lambda.terms);
    let mut k = 0;
    while !term.is_zero() {
        out.add_scaled(&term, &-inv_factorial(k + 1));
        term = g.bracket(&lambda.terms, &term);
        k += 1;
        if k > MAX_DEPTH {
            return Err(Error::Unsupported("gauge series does not terminate".into()));
        }
    }
    g.to_mc(&xi.alg, &out)
}
