use num_traits::Zero;

use super::elem::{mc_verify, MCElem};
use crate::graded::{Deg, GradedSpace, TruncProfile};
use crate::linalg::{rat, Rat};
use crate::structures::{FiniteCdga, LinftyAlg, Vector};
use crate::{Error, Result};

/// `k[z, dz] / (z^m, z^{m−1} dz)` with `|z| = 0` and `dz` in homological degree −1.
/// Basis: `z^i` for `i < m`, then `z^i dz` for `i < m − 1`.
pub fn interval_algebra(m: usize) -> FiniteCdga {
    assert!(m >= 1);
    let name = |i: usize| match i {
        0 => "1".to_string(),
        1 => "z".to_string(),
        _ => format!("z^{i}"),
    };
    let mut gens: Vec<(String, Deg)> = (0..m).map(|i| (name(i), Deg(0))).collect();
    for i in 0..m - 1 {
        let n = if i == 0 { "dz".to_string() } else { format!("{} dz", name(i)) };
        gens.push((n, Deg(-1)));
    }
    let mut b = FiniteCdga::new(GradedSpace::new(gens).expect("distinct names"));
    b.set_unit(Some(0));
    let dz = |i: usize| m + i;
    for i in 1..m {
        b.set_diff(i, Vector::term(dz(i - 1), rat(i as i64)));
    }
    for i in 1..m {
        for j in i..m {
            if i + j < m {
                b.set_product_comm(i, j, Vector::basis(i + j));
            }
        }
        for j in 0..m - 1 {
            if i + j < m - 1 {
                b.set_product_comm(i, dz(j), Vector::basis(dz(i + j)));
            }
        }
    }
    b
}

/// One term `c · a ⊗ z^p (dz) ⊗ e_k` of an interval element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalTerm {
    pub coeff_index: usize,
    pub gen: usize,
    pub zpow: usize,
    pub dz: bool,
    pub scalar: Rat,
}

/// A candidate homotopy: an element of `A[z, dz] ⊗ ΣV` of degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalElem {
    pub alg: LinftyAlg,
    pub coeff: FiniteCdga,
    pub terms: Vec<IntervalTerm>,
}

impl IntervalElem {
    pub fn new(alg: LinftyAlg, coeff: FiniteCdga, terms: Vec<IntervalTerm>) -> Result<IntervalElem> {
        for t in &terms {
            if t.gen >= alg.dim() || t.coeff_index >= coeff.dim() {
                return Err(Error::LengthMismatch { expected: alg.dim(), got: t.gen });
            }
            let d = coeff.deg(t.coeff_index) + if t.dz { Deg(-1) } else { Deg(0) };
            if d != alg.gens().deg(t.gen) {
                return Err(Error::Degree(format!(
                    "interval term along {} has degree {d}",
                    alg.space().name(t.gen)
                )));
            }
        }
        Ok(IntervalElem { alg, coeff, terms })
    }

    /// The constant homotopy at `ξ`.
    pub fn constant(xi: &MCElem) -> IntervalElem {
        let terms = xi
            .terms()
            .into_iter()
            .map(|(a, k, c)| IntervalTerm { coeff_index: a, gen: k, zpow: 0, dz: false, scalar: c })
            .collect();
        IntervalElem { alg: xi.alg.clone(), coeff: xi.coeff.clone(), terms }
    }

    /// Number of powers of `z` kept so the MC equation is computed without loss.
    pub fn modulus(&self) -> usize {
        let p = self.terms.iter().map(|t| t.zpow + usize::from(t.dz)).max().unwrap_or(0);
        self.alg.max_arity().max(1) * p + 2
    }

    /// The element over the finite cdga `A ⊗ k[z, dz]/(z^m, z^{m−1}dz)`.
    pub fn as_mc(&self) -> MCElem {
        let m = self.modulus();
        let b = interval_algebra(m);
        let nb = b.dim();
        let coeff = FiniteCdga::tensor(&self.coeff, &b);
        let mut comps = vec![Vector::zero(); self.alg.dim()];
        for t in &self.terms {
            let j = if t.dz { m + t.zpow } else { t.zpow };
            comps[t.gen].add_term(t.coeff_index * nb + j, t.scalar.clone());
        }
        MCElem { alg: self.alg.clone(), coeff, comps }
    }

    /// Evaluation at `z = t`, `dz = 0`.
    pub fn eval_at(&self, t: &Rat) -> MCElem {
        let mut comps = vec![Vector::zero(); self.alg.dim()];
        for term in self.terms.iter().filter(|x| !x.dz) {
            let mut c = term.scalar.clone();
            for _ in 0..term.zpow {
                c *= t;
            }
            comps[term.gen].add_term(term.coeff_index, c);
        }
        MCElem { alg: self.alg.clone(), coeff: self.coeff.clone(), comps }
    }
}

/// Checks the MC equation over `A[z, dz]` and returns the endpoints.
pub fn homotopy_verify(h: &IntervalElem, trunc: &TruncProfile) -> (bool, MCElem, MCElem) {
    let ok = mc_verify(&h.as_mc(), trunc).0;
    (ok, h.eval_at(&Rat::zero()), h.eval_at(&rat(1)))
}
