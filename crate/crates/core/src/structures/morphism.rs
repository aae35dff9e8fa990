use std::collections::BTreeMap;

use num_traits::Zero;

use super::linfty::LinftyAlg;
use crate::graded::{format_poly, poly_deg, poly_substitute, DegRange, Poly, SymWord, TruncProfile};
use crate::linalg::{homology_dims, ComplexSlice, SparseMatrix};
use crate::{Error, Result};

/// An L∞ morphism `source → target`, stored as the cdga map
/// `Ŝ(Σ⁻¹target*) → Ŝ(Σ⁻¹source*)` on the generators of the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinftyMap {
    pub source: LinftyAlg,
    pub target: LinftyAlg,
    pub images: Vec<Poly>,
}

impl LinftyMap {
    pub fn new(source: LinftyAlg, target: LinftyAlg, images: Vec<Poly>) -> Result<LinftyMap> {
        if images.len() != target.dim() {
            return Err(Error::LengthMismatch { expected: target.dim(), got: images.len() });
        }
        Ok(LinftyMap { source, target, images })
    }

    pub fn identity(l: &LinftyAlg) -> LinftyMap {
        let images = (0..l.dim()).map(|k| Poly::basis(SymWord::gen(k))).collect();
        LinftyMap { source: l.clone(), target: l.clone(), images }
    }

    /// Pull back a polynomial in the target generators.
    pub fn apply(&self, p: &Poly, max_weight: Option<usize>) -> Poly {
        poly_substitute(p, &self.images, &self.source.sdegs(), max_weight)
    }

    /// True when every component of arity ≥ 2 vanishes.
    pub fn is_strict(&self) -> bool {
        self.images.iter().all(|p| p.keys().all(|w| w.weight() == 1))
    }

    /// Linear part as a matrix from target generators to source generators:
    /// entry `(i, j)` is the coefficient of `s_i` in the image of `t_j`.
    pub fn linear_matrix(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.source.dim(), self.target.dim());
        for (j, p) in self.images.iter().enumerate() {
            for (w, c) in p.iter() {
                if let [i] = w.letters() {
                    m.set(*i, j, c.clone());
                }
            }
        }
        m
    }

    /// Whether the linear part induces an isomorphism on homology in the window,
    /// tested by acyclicity of its mapping cone.
    pub fn is_quasi_iso(&self, window: DegRange) -> Result<bool> {
        let (Some(lo), Some(hi)) = (window.lo, window.hi) else {
            return Err(Error::InvalidTruncation("quasi-isomorphism test requires a bounded window".into()));
        };
        // generators of degree m dual to V-degree −m−1
        let (slo, shi) = (-hi - 1, -lo - 1);
        let f = self.linear_matrix();
        let sdeg_s = self.source.sdegs();
        let sdeg_t = self.target.sdegs();
        let lin = |l: &LinftyAlg| {
            let mut m = SparseMatrix::zeros(l.dim(), l.dim());
            for (k, p) in l.q().iter().enumerate() {
                for (w, c) in p.iter() {
                    if let [i] = w.letters() {
                        m.set(*i, k, c.clone());
                    }
                }
            }
            m
        };
        let (qs, qt) = (lin(&self.source), lin(&self.target));
        // cone_m = T_{m−1} ⊕ S_m, d(t, s) = (−Q t, F t + Q s)
        let mut basis: BTreeMap<i32, Vec<(bool, usize)>> = BTreeMap::new();
        for m in slo - 2..=shi + 2 {
            let mut b = Vec::new();
            for (j, d) in sdeg_t.iter().enumerate() {
                if d.0 == m - 1 {
                    b.push((true, j));
                }
            }
            for (i, d) in sdeg_s.iter().enumerate() {
                if d.0 == m {
                    b.push((false, i));
                }
            }
            basis.insert(m, b);
        }
        let mut slice = ComplexSlice::new(DegRange::new(slo - 1, shi + 1), DegRange::ALL);
        for m in slo - 2..=shi + 2 {
            slice.set_dim(m, basis[&m].len());
        }
        for m in slo - 1..=shi + 2 {
            let src = &basis[&m];
            let tgt = &basis[&(m - 1)];
            let pos: BTreeMap<(bool, usize), usize> = tgt.iter().enumerate().map(|(i, b)| (*b, i)).collect();
            let mut d = SparseMatrix::zeros(tgt.len(), src.len());
            for (col, &(is_t, idx)) in src.iter().enumerate() {
                if is_t {
                    for r in 0..self.target.dim() {
                        let c = qt.get(r, idx);
                        if !c.is_zero() {
                            d.add_to(pos[&(true, r)], col, &-c);
                        }
                    }
                    for r in 0..self.source.dim() {
                        let c = f.get(r, idx);
                        if !c.is_zero() {
                            d.add_to(pos[&(false, r)], col, &c);
                        }
                    }
                } else {
                    for r in 0..self.source.dim() {
                        let c = qs.get(r, idx);
                        if !c.is_zero() {
                            d.add_to(pos[&(false, r)], col, &c);
                        }
                    }
                }
            }
            slice.set_diff(m, d);
        }
        let h = homology_dims(&slice)?;
        Ok((slo..=shi).all(|m| h.get(m).unwrap_or(0) == 0))
    }
}

/// Verify `Q_source ∘ F = F ∘ Q_target` on the target generators up to the weight bound.
pub fn check_linfty_map(f: &LinftyMap, trunc: &TruncProfile) -> Result<()> {
    let sdeg = f.source.sdegs();
    let tdeg = f.target.sdegs();
    let snames = f.source.gens().names();
    let tnames = f.target.gens().names();
    let w = Some(trunc.weight_max);
    for (j, im) in f.images.iter().enumerate() {
        if im.is_zero() {
            continue;
        }
        if !im.coeff(&SymWord::unit()).is_zero() {
            return Err(Error::NonContinuous(format!("image of {} has a constant term", tnames[j])));
        }
        if poly_deg(im, &sdeg) != Some(tdeg[j]) {
            return Err(Error::violation("map degree", tnames[j].clone(), format_poly(im, &snames)));
        }
    }
    for j in 0..f.target.dim() {
        let lhs = f.source.apply(&f.images[j], w);
        let rhs = f.apply(f.target.q_of(j), w);
        let mut r = lhs;
        r.sub_assign(&rhs);
        if !r.is_zero() {
            return Err(Error::violation(
                "commutes with structure derivations",
                format!("generator {}", tnames[j]),
                format_poly(&r, &snames),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{Deg, GradedSpace};
    use crate::linalg::ratio;
    use crate::structures::{DglaTable, Vector};

    #[test]
    fn identity_passes() {
        let space = GradedSpace::new([("x", Deg(-1)), ("w", Deg(-2))]).unwrap();
        let mut t = DglaTable::new(space);
        t.set_bracket(0, 0, Vector::basis(1));
        t.diff[0] = Vector::term(1, ratio(-1, 2));
        let l = LinftyAlg::from_dgla(&t);
        let id = LinftyMap::identity(&l);
        assert!(check_linfty_map(&id, &TruncProfile::default()).is_ok());
        assert!(id.is_quasi_iso(DegRange::new(-4, 4)).unwrap());
    }

    #[test]
    fn non_chain_map_rejected() {
        // source: abelian x in degree 1 with d = 0; target: x → y contractible pair
        let src = LinftyAlg::abelian(GradedSpace::new([("x", Deg(1))]).unwrap());
        let mut t = DglaTable::new(GradedSpace::new([("x", Deg(1)), ("y", Deg(0))]).unwrap());
        t.diff[0] = Vector::basis(1);
        let tgt = LinftyAlg::from_dgla(&t);
        // image of the dual of x is the dual of x; dual of y maps to 0: fails since Q(s_y) involves s_x
        let images = vec![Poly::basis(SymWord::gen(0)), Poly::zero()];
        let f = LinftyMap::new(src.clone(), tgt.clone(), images).unwrap();
        assert!(check_linfty_map(&f, &TruncProfile::default()).is_err());
        let zero = LinftyMap::new(src, tgt, vec![Poly::zero(), Poly::zero()]).unwrap();
        assert!(check_linfty_map(&zero, &TruncProfile::default()).is_ok());
        assert!(!zero.is_quasi_iso(DegRange::new(-3, 3)).unwrap());
    }
}
