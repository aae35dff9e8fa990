use std::collections::BTreeMap;

use num_traits::Zero;

use super::cdga::{FreeCdga, Vector};
use crate::graded::{format_poly, poly_derive, poly_deg, Deg, DegRange, GradedSpace, Poly, SymWord, TruncProfile};
use crate::linalg::{homology_dims, rat, BettiTable, ComplexSlice, Rat, SparseMatrix};
use crate::{Error, Result};

/// An L∞ algebra on `V`, stored as the degree −1 derivation `Q = d + m` of
/// `Ŝ(Σ⁻¹V*)` on the generators `s_k`, where `|s_k| = −|e_k| − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinftyAlg {
    space: GradedSpace,
    gens: GradedSpace,
    q: Vec<Poly>,
    complete: DegRange,
}

/// A dgla as structure constants: `diff[i] = d(e_i)` and `bracket[(a, b)] = [e_a, e_b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DglaTable {
    pub space: GradedSpace,
    pub diff: Vec<Vector>,
    pub bracket: BTreeMap<(usize, usize), Vector>,
}

fn sign(odd: bool) -> Rat {
    if odd {
        rat(-1)
    } else {
        rat(1)
    }
}

impl DglaTable {
    pub fn new(space: GradedSpace) -> DglaTable {
        let n = space.len();
        DglaTable { space, diff: vec![Vector::zero(); n], bracket: BTreeMap::new() }
    }

    /// Sets `[e_a, e_b] = v` and `[e_b, e_a] = −(−1)^{|a||b|} v`.
    pub fn set_bracket(&mut self, a: usize, b: usize, v: Vector) {
        let (da, db) = (self.space.deg(a), self.space.deg(b));
        let other = v.scaled(&-sign(da.is_odd() && db.is_odd()));
        for (key, val) in [((b, a), other), ((a, b), v)] {
            if val.is_zero() {
                self.bracket.remove(&key);
            } else {
                self.bracket.insert(key, val);
            }
        }
    }

    pub fn bracket_of(&self, a: usize, b: usize) -> Vector {
        self.bracket.get(&(a, b)).cloned().unwrap_or_default()
    }
}

impl LinftyAlg {
    fn gens_for(space: &GradedSpace) -> GradedSpace {
        GradedSpace::new(space.generators().iter().map(|g| (format!("s{}", g.name), g.deg.dual_generator())))
            .expect("prefixing keeps names distinct")
    }

    pub fn new(space: GradedSpace, q: Vec<Poly>) -> Result<LinftyAlg> {
        if q.len() != space.len() {
            return Err(Error::LengthMismatch { expected: space.len(), got: q.len() });
        }
        let gens = LinftyAlg::gens_for(&space);
        Ok(LinftyAlg { space, gens, q, complete: DegRange::ALL })
    }

    pub fn abelian(space: GradedSpace) -> LinftyAlg {
        let n = space.len();
        LinftyAlg::new(space, vec![Poly::zero(); n]).expect("lengths agree")
    }

    pub fn zero() -> LinftyAlg {
        LinftyAlg::abelian(GradedSpace::default())
    }

    /// `Q(s_k) = −Σ_i (−1)^{|s_i|} D_{ki} s_i − ½ Σ_{a,b} (−1)^{|e_a||s_b|} C^k_{ab} s_a s_b`.
    pub fn from_dgla(table: &DglaTable) -> LinftyAlg {
        let space = table.space.clone();
        let gens = LinftyAlg::gens_for(&space);
        let sdeg = gens.degs();
        let edeg = space.degs();
        let mut q = vec![Poly::zero(); space.len()];
        for (i, di) in table.diff.iter().enumerate() {
            for (k, c) in di.iter() {
                let coef = -(c * sign(sdeg[i].is_odd()));
                q[*k].add_term(SymWord::gen(i), coef);
            }
        }
        let half = crate::linalg::ratio(1, 2);
        for (&(a, b), v) in &table.bracket {
            let Some((w, s)) = crate::graded::sym_normalize(&[a, b], &sdeg) else { continue };
            let sg = sign(edeg[a].is_odd() && sdeg[b].is_odd()) * rat(s as i64);
            for (k, c) in v.iter() {
                q[*k].add_term(w.clone(), -(c * &sg * &half));
            }
        }
        LinftyAlg { space, gens, q, complete: DegRange::ALL }
    }

    /// Inverse of `from_dgla`; `None` when operations of arity ≥ 3 are present.
    pub fn to_dgla(&self) -> Option<DglaTable> {
        let sdeg = self.gens.degs();
        let edeg = self.space.degs();
        let mut t = DglaTable::new(self.space.clone());
        let mut pairs: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (k, qk) in self.q.iter().enumerate() {
            for (w, c) in qk.iter() {
                match w.letters() {
                    [i] => t.diff[*i].add_term(k, -(c * sign(sdeg[*i].is_odd()))),
                    [a, b] => {
                        let sigma = sign((edeg[*a].is_odd() && edeg[*b].is_odd()) ^ edeg[*a].is_odd());
                        let factor = if a == b { rat(-2) } else { rat(-1) };
                        pairs.entry((*a, *b)).or_default().add_term(k, c * &sigma * factor);
                    }
                    _ => return None,
                }
            }
        }
        for ((a, b), v) in pairs {
            t.set_bracket(a, b, v);
        }
        Some(t)
    }

    pub fn with_complete(mut self, complete: DegRange) -> LinftyAlg {
        self.complete = complete;
        self
    }

    pub fn complete(&self) -> DegRange {
        self.complete
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn gens(&self) -> &GradedSpace {
        &self.gens
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    pub fn sdegs(&self) -> Vec<Deg> {
        self.gens.degs()
    }

    pub fn q(&self) -> &[Poly] {
        &self.q
    }

    pub fn q_of(&self, k: usize) -> &Poly {
        &self.q[k]
    }

    /// Component of `Q(s_k)` of word length `n`.
    pub fn arity_part(&self, k: usize, n: usize) -> Poly {
        self.q[k].filtered(|w| w.weight() == n)
    }

    pub fn max_arity(&self) -> usize {
        self.q.iter().flat_map(|p| p.keys().map(|w| w.weight())).max().unwrap_or(0)
    }

    pub fn is_minimal(&self) -> bool {
        self.q.iter().all(|p| p.keys().all(|w| w.weight() != 1))
    }

    pub fn is_dgla(&self) -> bool {
        self.max_arity() <= 2
    }

    /// Apply `Q` to a polynomial in the generators.
    pub fn apply(&self, p: &Poly, max_weight: Option<usize>) -> Poly {
        poly_derive(p, &self.q, Deg(-1), &self.sdegs(), max_weight)
    }

    /// Differential on `V`: `d(e_i) = Σ_k D_{ki} e_k` with `D_{ki} = −(−1)^{|s_i|} q_{ki}`.
    pub fn differential(&self) -> Vec<Vector> {
        let sdeg = self.sdegs();
        let mut d = vec![Vector::zero(); self.dim()];
        for (k, qk) in self.q.iter().enumerate() {
            for (w, c) in qk.iter() {
                if let [i] = w.letters() {
                    d[*i].add_term(k, -(c * sign(sdeg[*i].is_odd())));
                }
            }
        }
        d
    }

    /// The chain complex `(V, m₁)` over the window.
    pub fn complex(&self, window: DegRange) -> ComplexSlice {
        let (Some(lo), Some(hi)) = (window.lo, window.hi) else {
            panic!("complex requires a bounded window");
        };
        let d = self.differential();
        let mut slice = ComplexSlice::new(window, self.complete);
        let mut pos: BTreeMap<usize, usize> = BTreeMap::new();
        let mut by_deg: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim() {
            let n = self.space.deg(i).0;
            if (lo - 1..=hi + 1).contains(&n) {
                let v = by_deg.entry(n).or_default();
                pos.insert(i, v.len());
                v.push(i);
            }
        }
        for n in lo - 1..=hi + 1 {
            slice.set_dim(n, by_deg.get(&n).map_or(0, |v| v.len()));
        }
        for n in lo..=hi + 1 {
            let src = by_deg.get(&n).cloned().unwrap_or_default();
            let mut m = SparseMatrix::zeros(slice.dim(n - 1), src.len());
            for (col, &i) in src.iter().enumerate() {
                for (k, c) in d[i].iter() {
                    m.set(pos[k], col, c.clone());
                }
            }
            slice.set_diff(n, m);
        }
        slice.window = window;
        slice
    }

    /// Homology of `(V, m₁)` in the window.
    pub fn homology(&self, window: DegRange) -> Result<BettiTable> {
        let (Some(lo), Some(hi)) = (window.lo, window.hi) else {
            return Err(Error::InvalidTruncation("homology requires a bounded window".into()));
        };
        let full = self.complex(DegRange::new(lo - 1, hi + 1));
        let mut t = homology_dims(&full)?;
        t.entries.retain(|n, _| window.contains(*n));
        Ok(t)
    }

    /// The representing free cdga `C(V) = (Ŝ Σ⁻¹V*, Q)`.
    pub fn ce_of(&self) -> FreeCdga {
        FreeCdga { gens: self.gens.clone(), d: self.q.clone() }
    }

    /// Rebuild from a representing free cdga whose generators are `s_k`.
    pub fn from_free_cdga(c: &FreeCdga) -> LinftyAlg {
        let space = GradedSpace::new(
            c.gens.generators().iter().map(|g| (format!("e{}", g.name), Deg(-g.deg.0 - 1))),
        )
        .expect("prefixed names stay distinct");
        LinftyAlg { space, gens: c.gens.clone(), q: c.d.clone(), complete: DegRange::ALL }
    }

    pub fn format_q(&self, k: usize) -> String {
        format_poly(&self.q[k], &self.gens.names())
    }
}

/// Expand `Q²` on every generator up to the weight bound.
pub fn check_linfty(l: &LinftyAlg, trunc: &TruncProfile) -> Result<()> {
    let sdeg = l.sdegs();
    let names = l.gens.names();
    for (k, qk) in l.q.iter().enumerate() {
        if qk.is_zero() {
            continue;
        }
        if !qk.coeff(&SymWord::unit()).is_zero() {
            return Err(Error::violation("no constant term", format!("Q({})", names[k]), format_poly(qk, &names)));
        }
        if poly_deg(qk, &sdeg) != Some(sdeg[k] + Deg(-1)) {
            return Err(Error::violation("derivation degree", format!("Q({})", names[k]), format_poly(qk, &names)));
        }
    }
    for k in 0..l.dim() {
        let qq = l.apply(&l.q[k], Some(trunc.weight_max));
        if !qq.is_zero() {
            let w = qq.keys().map(|w| w.weight()).min().unwrap_or(0);
            return Err(Error::violation(
                "(m+d)^2 = 0",
                format!("generator {} at weight {w}", names[k]),
                format_poly(&qq.filtered(|x| x.weight() == w), &names),
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    /// x in degree −1, w = [x,x] in degree −2, d(x) = c·w.
    pub(crate) fn acyclic(c: Rat) -> LinftyAlg {
        let space = GradedSpace::new([("x", Deg(-1)), ("w", Deg(-2))]).unwrap();
        let mut t = DglaTable::new(space);
        t.set_bracket(0, 0, Vector::basis(1));
        t.diff[0] = Vector::term(1, c);
        LinftyAlg::from_dgla(&t)
    }

    #[test]
    fn acyclic_dgla_is_valid() {
        let t = TruncProfile::default();
        assert!(check_linfty(&acyclic(ratio(-1, 2)), &t).is_ok());
        // [x,w] has nowhere to live, so d(x) = c[x,x] squares to zero for every c
        assert!(check_linfty(&acyclic(ratio(-1, 3)), &t).is_ok());
        let h = acyclic(ratio(-1, 2)).homology(t.window()).unwrap();
        assert_eq!(h.total_exact(), 0);
    }

    #[test]
    fn dgla_round_trip() {
        let l = acyclic(ratio(-1, 2));
        let t = l.to_dgla().unwrap();
        assert_eq!(t.bracket_of(0, 0), Vector::basis(1));
        assert_eq!(t.diff[0], Vector::term(1, ratio(-1, 2)));
        assert_eq!(LinftyAlg::from_dgla(&t), l);
    }

    #[test]
    fn heisenberg_round_trip_and_jacobi() {
        let space = GradedSpace::new([("e1", Deg(0)), ("e2", Deg(0)), ("e3", Deg(0))]).unwrap();
        let mut t = DglaTable::new(space);
        t.set_bracket(0, 1, Vector::basis(2));
        let l = LinftyAlg::from_dgla(&t);
        assert!(check_linfty(&l, &TruncProfile::default()).is_ok());
        assert_eq!(l.to_dgla().unwrap(), t);
    }

    #[test]
    fn jacobi_violation_detected() {
        // [e1,e2] = e2, [e1,e3] = e1 and [e2,e3] = e1 fail Jacobi
        let space = GradedSpace::new([("e1", Deg(0)), ("e2", Deg(0)), ("e3", Deg(0))]).unwrap();
        let mut t = DglaTable::new(space);
        t.set_bracket(0, 1, Vector::basis(1));
        t.set_bracket(0, 2, Vector::basis(0));
        t.set_bracket(1, 2, Vector::basis(0));
        assert!(check_linfty(&LinftyAlg::from_dgla(&t), &TruncProfile::default()).is_err());
    }

    #[test]
    fn contractible_pair_has_no_homology() {
        let space = GradedSpace::new([("x", Deg(1)), ("y", Deg(0))]).unwrap();
        let mut t = DglaTable::new(space.clone());
        t.diff[0] = Vector::basis(1);
        let l = LinftyAlg::from_dgla(&t);
        assert_eq!(l.homology(DegRange::new(-3, 3)).unwrap().total_exact(), 0);
        let ab = LinftyAlg::abelian(space);
        let h = ab.homology(DegRange::new(-3, 3)).unwrap();
        assert_eq!(h.exact(0), Some(1));
        assert_eq!(h.exact(1), Some(1));
    }
}
