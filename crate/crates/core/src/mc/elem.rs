use num_traits::Zero;

use crate::graded::TruncProfile;
use crate::linalg::Rat;
use crate::structures::{format_vector, CdgaMap, FiniteCdga, LinftyAlg, Vector};
use crate::{Error, Result};

/// A Maurer-Cartan candidate `ξ ∈ A ⊗ V` of degree −1, stored as the images
/// `ξ_k ∈ A` of the generators `s_k`, each of degree `|s_k|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MCElem {
    pub alg: LinftyAlg,
    pub coeff: FiniteCdga,
    pub comps: Vec<Vector>,
}

impl MCElem {
    pub fn new(alg: LinftyAlg, coeff: FiniteCdga, comps: Vec<Vector>) -> Result<MCElem> {
        if comps.len() != alg.dim() {
            return Err(Error::LengthMismatch { expected: alg.dim(), got: comps.len() });
        }
        for (k, c) in comps.iter().enumerate() {
            let want = alg.gens().deg(k);
            if let Some(bad) = c.keys().find(|&&a| coeff.deg(a) != want) {
                return Err(Error::Degree(format!(
                    "component {} of {} has degree {}, expected {}",
                    coeff.names()[*bad],
                    alg.space().name(k),
                    coeff.deg(*bad),
                    want
                )));
            }
        }
        Ok(MCElem { alg, coeff, comps })
    }

    pub fn zero(alg: LinftyAlg, coeff: FiniteCdga) -> MCElem {
        let n = alg.dim();
        MCElem { alg, coeff, comps: vec![Vector::zero(); n] }
    }

    /// Build from `(coefficient basis index, space index, scalar)` triples.
    pub fn from_terms(alg: LinftyAlg, coeff: FiniteCdga, terms: &[(usize, usize, Rat)]) -> Result<MCElem> {
        let mut comps = vec![Vector::zero(); alg.dim()];
        for (a, k, c) in terms {
            if *k >= comps.len() || *a >= coeff.dim() {
                return Err(Error::LengthMismatch { expected: comps.len(), got: *k });
            }
            comps[*k].add_term(*a, c.clone());
        }
        MCElem::new(alg, coeff, comps)
    }

    pub fn terms(&self) -> Vec<(usize, usize, Rat)> {
        let mut out = Vec::new();
        for (k, v) in self.comps.iter().enumerate() {
            for (a, c) in v.iter() {
                out.push((*a, k, c.clone()));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// No component along the unit of the coefficients.
    pub fn in_ideal(&self) -> bool {
        match self.coeff.unit() {
            Some(u) => self.comps.iter().all(|c| c.coeff(&u).is_zero()),
            None => true,
        }
    }

    /// `d_A ξ_k − φ(Q s_k)` for every generator.
    pub fn residual(&self) -> Vec<Vector> {
        (0..self.alg.dim())
            .map(|k| {
                let mut r = self.coeff.d(&self.comps[k]);
                r.sub_assign(&self.coeff.eval(self.alg.q_of(k), &self.comps));
                r
            })
            .collect()
    }

    pub fn scaled(&self, c: &Rat) -> MCElem {
        MCElem { comps: self.comps.iter().map(|v| v.scaled(c)).collect(), ..self.clone() }
    }

    /// The same element viewed in the unitalized coefficients.
    pub fn unitalized(&self) -> MCElem {
        let coeff = self.coeff.unitalize();
        let comps = self.comps.iter().map(|v| v.map_keys(|&a| self.coeff.unitalized_index(a))).collect();
        MCElem { alg: self.alg.clone(), coeff, comps }
    }

    pub fn format(&self) -> String {
        let names = self.coeff.names();
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| format!("({})⊗{}", format_vector(v, &names), self.alg.space().name(k)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// The element of `MC(V, C(V)_+)` corresponding to the identity, over the
/// quotient of `C(V)_+` by words longer than `weight`.
pub fn canonical_mc(alg: &LinftyAlg, weight: usize) -> MCElem {
    let (coeff, words) = FiniteCdga::truncated_free(&alg.ce_of(), weight);
    let comps = (0..alg.dim())
        .map(|k| {
            let pos = words.iter().position(|w| *w == crate::graded::SymWord::gen(k)).expect("generators survive");
            Vector::basis(pos)
        })
        .collect();
    MCElem { alg: alg.clone(), coeff, comps }
}

/// Checks the Maurer-Cartan equation. The arity of `Q` is finite, so the
/// series terminates and the profile only bounds nothing further.
pub fn mc_verify(xi: &MCElem, _trunc: &TruncProfile) -> (bool, Vec<Vector>) {
    let r = xi.residual();
    (r.iter().all(|v| v.is_zero()), r)
}

/// Like `mc_verify`, reporting the first failing generator as an error.
pub fn mc_check(xi: &MCElem) -> Result<()> {
    for (k, r) in xi.residual().iter().enumerate() {
        if !r.is_zero() {
            return Err(Error::NotMC(format!(
                "residual at {}: {}",
                xi.alg.space().name(k),
                xi.coeff.format(r)
            )));
        }
    }
    Ok(())
}

/// The MC element of `A ⊗ L` corresponding to a cdga map `C(L) → A`.
pub fn mc_from_map(f: &CdgaMap, alg: &LinftyAlg) -> Result<MCElem> {
    let ce = alg.ce_of();
    if ce.gens.degs() != f.source.gens.degs() || ce.d != f.source.d {
        return Err(Error::Unsupported("map source is not the Chevalley-Eilenberg algebra".into()));
    }
    f.check_continuous()?;
    MCElem::new(alg.clone(), f.target.clone(), f.images.clone())
}

/// The cdga map `C(L) → A` classified by `ξ`.
pub fn mc_to_map(xi: &MCElem) -> CdgaMap {
    CdgaMap { source: xi.alg.ce_of(), target: xi.coeff.clone(), images: xi.comps.clone() }
}
