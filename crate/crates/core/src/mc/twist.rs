use super::elem::{mc_check, MCElem};
use super::tensor::{TElem, TensorRing};
use crate::graded::{Deg, DegRange, GradedSpace, Poly, SymWord, TruncProfile};
use crate::linalg::{inv_factorial, rat, Rat};
use crate::structures::{FiniteCdga, LinftyAlg, LinftyMap};
use crate::{Error, Result};

/// Which coefficients survive when an `A`-linear structure is read as a
/// structure over the ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scalars {
    /// `Ã ⊗ V` with `Ã = A ⊕ k`.
    Unital,
    /// `A ⊗ V` for the augmentation ideal `A`.
    Ideal,
}

/// An `Ã`-linear L∞ structure on `Ã ⊗ V`: a degree −1 derivation of
/// `Ã ⊗ Ŝ(Σ⁻¹V*)` extending `d_A`, given on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ALinfty {
    pub alg: LinftyAlg,
    pub coeff: FiniteCdga,
    pub q: Vec<TElem>,
}

fn sgn(odd: bool) -> Rat {
    if odd {
        rat(-1)
    } else {
        rat(1)
    }
}

impl ALinfty {
    /// `Ã`-linear extension of `alg`.
    pub fn extension(alg: &LinftyAlg, coeff: &FiniteCdga) -> ALinfty {
        let coeff = coeff.unitalize();
        let ring = TensorRing::new(&coeff, alg.sdegs(), None);
        let q = alg.q().iter().map(|p| ring.lift(p)).collect();
        ALinfty { alg: alg.clone(), coeff: coeff.clone(), q }
    }

    pub fn ring(&self) -> TensorRing<'_> {
        TensorRing::new(&self.coeff, self.alg.sdegs(), None)
    }

    /// Apply the full derivation `d_A ⊗ 1 + Q`.
    pub fn apply(&self, x: &TElem) -> TElem {
        self.ring().derive(x, &self.q, Deg(-1), true)
    }

    /// No constant term, homogeneous of degree −1, and square zero.
    pub fn check(&self, _trunc: &TruncProfile) -> Result<()> {
        let ring = self.ring();
        let names = self.alg.gens().names();
        for (k, qk) in self.q.iter().enumerate() {
            let c = ring.constant_part(qk);
            if !c.is_zero() {
                return Err(Error::violation("no constant term", names[k].clone(), self.coeff.format(&c)));
            }
            let want = self.alg.gens().deg(k) - Deg(1);
            if let Some(bad) = qk.keys().find(|key| ring.key_deg(key) != want) {
                return Err(Error::violation(
                    "degree",
                    names[k].clone(),
                    format!("term of degree {} in Q({})", ring.key_deg(bad), names[k]),
                ));
            }
            let q2 = self.apply(qk);
            if !q2.is_zero() {
                return Err(Error::violation("Q² = 0", format!("generator {}", names[k]), ring.format(&q2, &names)));
            }
        }
        Ok(())
    }

    pub fn format_q(&self, k: usize) -> String {
        self.ring().format(&self.q[k], &self.alg.gens().names())
    }

    fn coeff_indices(&self, scalars: Scalars) -> Vec<usize> {
        match scalars {
            Scalars::Unital => (0..self.coeff.dim()).collect(),
            Scalars::Ideal => self.coeff.ideal_indices(),
        }
    }

    fn restricted_space(&self, idx: &[usize]) -> Result<GradedSpace> {
        let an = self.coeff.names();
        let sp = self.alg.space();
        let mut gens = Vec::new();
        for &a in idx {
            for k in 0..sp.len() {
                let name = if Some(a) == self.coeff.unit() {
                    sp.name(k).to_string()
                } else {
                    format!("{}⊗{}", an[a], sp.name(k))
                };
                gens.push((name, self.coeff.deg(a) + sp.deg(k)));
            }
        }
        GradedSpace::new(gens)
    }

    /// The expansion `ψ(s_k) = Σ_α ε a_α ⊗ t_{α,k}` into the restricted generators.
    fn psi(&self, ring: &TensorRing<'_>, idx: &[usize]) -> Vec<TElem> {
        let n = self.alg.dim();
        (0..n)
            .map(|k| {
                let mut v = TElem::zero();
                for (pos, &a) in idx.iter().enumerate() {
                    let t = pos * n + k;
                    let eps = sgn(ring.degs[t].is_odd() && self.coeff.deg(a).is_odd());
                    v.add_term((a, SymWord::gen(t)), eps);
                }
                v
            })
            .collect()
    }

    /// Read the structure as a k-linear L∞ algebra on `B ⊗ V`.
    pub fn restrict(&self, scalars: Scalars) -> Result<LinftyAlg> {
        let idx = self.coeff_indices(scalars);
        let space = self.restricted_space(&idx)?;
        let n = self.alg.dim();
        let tdegs: Vec<Deg> = space.degs().iter().map(|d| d.dual_generator()).collect();
        let ring = TensorRing::new(&self.coeff, tdegs.clone(), None);
        let psi = self.psi(&ring, &idx);
        let mut q = vec![Poly::zero(); space.len()];
        for k in 0..n {
            let mut rhs = ring.substitute_linear(&self.q[k], &psi);
            for (pos, &a) in idx.iter().enumerate() {
                let t = pos * n + k;
                let eps = sgn(tdegs[t].is_odd() && self.coeff.deg(a).is_odd());
                for (b, c) in self.coeff.diff_of(a).iter() {
                    rhs.add_term((*b, SymWord::gen(t)), -(c * &eps));
                }
            }
            for ((b, m), c) in rhs.iter() {
                let Some(pos) = idx.iter().position(|a| a == b) else {
                    return Err(Error::Unsupported(format!(
                        "restriction leaves the chosen scalars along {}",
                        self.coeff.names()[*b]
                    )));
                };
                let t = pos * n + k;
                let da = self.coeff.deg(*b);
                let f = sgn(tdegs[t].is_odd() && da.is_odd()) * sgn(da.is_odd());
                q[t].add_term(m.clone(), c * f);
            }
        }
        let complete = shift_complete(self.alg.complete(), idx.iter().map(|&a| self.coeff.deg(a).0));
        Ok(LinftyAlg::new(space, q)?.with_complete(complete))
    }
}

/// Certified range of `B ⊗ V` from that of `V`, given the degrees of a basis of `B`.
pub fn shift_complete(c: DegRange, degs: impl Iterator<Item = i32> + Clone) -> DegRange {
    let (Some(max), Some(min)) = (degs.clone().max(), degs.min()) else {
        return DegRange::ALL;
    };
    if c.is_empty() {
        return DegRange::NONE;
    }
    DegRange { lo: c.lo.map(|l| l + max), hi: c.hi.map(|h| h + min) }
}

fn twist_inputs(xi: &MCElem) -> Result<MCElem> {
    mc_check(xi)?;
    Ok(xi.unitalized())
}

/// Conjugation `e^ξ (d + Q) e^{−ξ}` as the series `Σ E_n / n!` with
/// `E_1 = D_ξ(Q s_k) − d_A ξ_k` and `E_{n+1} = D_ξ(E_n)`.
pub fn twist(xi: &MCElem, _trunc: &TruncProfile) -> Result<ALinfty> {
    let xt = twist_inputs(xi)?;
    let base = ALinfty::extension(&xt.alg, &xt.coeff);
    let ring = base.ring();
    let images: Vec<TElem> = xt.comps.iter().map(|v| ring.scalar(v)).collect();
    let mut q = Vec::with_capacity(base.q.len());
    for (k, qk) in base.q.iter().enumerate() {
        let mut total = qk.clone();
        let mut e = ring.derive(qk, &images, Deg(0), false);
        e.sub_assign(&ring.scalar(&xt.coeff.d(&xt.comps[k])));
        let mut n = 1;
        while !e.is_zero() {
            total.add_scaled(&e, &inv_factorial(n));
            e = ring.derive(&e, &images, Deg(0), false);
            n += 1;
        }
        q.push(total);
    }
    Ok(ALinfty { q, ..base })
}

/// Substitution `Q^ξ(s_k) = Q(s_k)|_{s ↦ s + ξ} − d_A ξ_k`.
pub fn twist_direct(xi: &MCElem, _trunc: &TruncProfile) -> Result<ALinfty> {
    let xt = twist_inputs(xi)?;
    let base = ALinfty::extension(&xt.alg, &xt.coeff);
    let ring = base.ring();
    let images: Vec<TElem> = xt
        .comps
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let mut g = ring.gen(j);
            g.add_assign(&ring.scalar(v));
            g
        })
        .collect();
    let q = (0..base.q.len())
        .map(|k| {
            let mut t = ring.substitute(xt.alg.q_of(k), &images);
            t.sub_assign(&ring.scalar(&xt.coeff.d(&xt.comps[k])));
            t
        })
        .collect();
    Ok(ALinfty { q, ..base })
}

/// The push-forward `f_*(ξ)`: generator images of the target evaluated at `ξ`.
pub fn push_forward(f: &LinftyMap, xi: &MCElem) -> MCElem {
    let comps = f.images.iter().map(|p| xi.coeff.eval(p, &xi.comps)).collect();
    MCElem { alg: f.target.clone(), coeff: xi.coeff.clone(), comps }
}

/// An `Ã`-linear L∞ map, given by target generator images in the source ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ALinftyMap {
    pub source: ALinfty,
    pub target: ALinfty,
    pub images: Vec<TElem>,
}

impl ALinftyMap {
    /// `D_src ∘ F = F ∘ D_tgt` on generators.
    pub fn check(&self) -> Result<()> {
        let ring = self.source.ring();
        let names = self.target.alg.gens().names();
        for (j, im) in self.images.iter().enumerate() {
            let lhs = self.source.apply(im);
            let rhs = ring.substitute_linear(&self.target.q[j], &self.images);
            if lhs != rhs {
                let mut r = lhs;
                r.sub_assign(&rhs);
                return Err(Error::violation(
                    "map commutes with Q",
                    format!("generator {}", names[j]),
                    ring.format(&r, &self.source.alg.gens().names()),
                ));
            }
        }
        Ok(())
    }

    /// Read as a k-linear L∞ map between the restricted structures.
    pub fn restrict(&self, scalars: Scalars) -> Result<LinftyMap> {
        let src = self.source.restrict(scalars)?;
        let tgt = self.target.restrict(scalars)?;
        let idx = self.source.coeff_indices(scalars);
        let ring = TensorRing::new(&self.source.coeff, src.sdegs(), None);
        let psi = self.source.psi(&ring, &idx);
        let n = self.target.alg.dim();
        let mut images = vec![Poly::zero(); tgt.dim()];
        for j in 0..n {
            let x = ring.substitute_linear(&self.images[j], &psi);
            for ((b, m), c) in x.iter() {
                let Some(pos) = idx.iter().position(|a| a == b) else {
                    return Err(Error::Unsupported("map leaves the chosen scalars".into()));
                };
                let u = pos * n + j;
                let eps = sgn(tgt.gens().deg(u).is_odd() && self.source.coeff.deg(*b).is_odd());
                images[u].add_term(m.clone(), c * eps);
            }
        }
        LinftyMap::new(src, tgt, images)
    }
}

/// `f^ξ = e^{f_*ξ} f e^{−ξ}` as an `Ã`-linear map `twist(source, ξ) → twist(target, f_*ξ)`.
pub fn twist_morphism_linear(f: &LinftyMap, xi: &MCElem, trunc: &TruncProfile) -> Result<ALinftyMap> {
    let source = twist(xi, trunc)?;
    let eta = push_forward(f, xi);
    let target = twist(&eta, trunc)?;
    let xt = xi.unitalized();
    let et = eta.unitalized();
    let ring = source.ring();
    let shifted: Vec<TElem> = xt
        .comps
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let mut g = ring.gen(j);
            g.add_assign(&ring.scalar(v));
            g
        })
        .collect();
    let images = f
        .images
        .iter()
        .zip(&et.comps)
        .map(|(p, e)| {
            let mut t = ring.substitute(p, &shifted);
            t.sub_assign(&ring.scalar(e));
            t
        })
        .collect();
    Ok(ALinftyMap { source, target, images })
}

/// The twisted morphism read over the ground field on `Ã ⊗ V`.
pub fn twist_morphism(f: &LinftyMap, xi: &MCElem, trunc: &TruncProfile) -> Result<LinftyMap> {
    twist_morphism_linear(f, xi, trunc)?.restrict(Scalars::Unital)
}
