use crate::graded::{format_poly, poly_mul, Deg, Lin, Poly, SymWord};
use crate::linalg::{rat, Rat};
use crate::structures::{FiniteCdga, Vector};

/// Basis key of `Ã ⊗ Ŝ(W)`: a basis index of `Ã` and a monomial.
pub type TKey = (usize, SymWord);
pub type TElem = Lin<TKey>;

/// The graded-commutative algebra `Ã ⊗ Ŝ(W)` for a unital finite cdga `Ã`,
/// with `(a⊗m)(a'⊗m') = (−1)^{|m||a'|} aa'⊗mm'`.
#[derive(Clone, Debug)]
pub struct TensorRing<'a> {
    pub coeff: &'a FiniteCdga,
    pub degs: Vec<Deg>,
    pub max_weight: Option<usize>,
}

impl<'a> TensorRing<'a> {
    pub fn new(coeff: &'a FiniteCdga, degs: Vec<Deg>, max_weight: Option<usize>) -> TensorRing<'a> {
        assert!(coeff.is_unital(), "tensor ring needs a unital coefficient algebra");
        TensorRing { coeff, degs, max_weight }
    }

    fn unit(&self) -> usize {
        self.coeff.unit().expect("unital")
    }

    pub fn one(&self) -> TElem {
        TElem::basis((self.unit(), SymWord::unit()))
    }

    pub fn key_deg(&self, k: &TKey) -> Deg {
        self.coeff.deg(k.0) + k.1.deg(&self.degs)
    }

    /// `1 ⊗ p`.
    pub fn lift(&self, p: &Poly) -> TElem {
        let u = self.unit();
        p.map_keys(|w| (u, w.clone()))
    }

    /// `v ⊗ 1`.
    pub fn scalar(&self, v: &Vector) -> TElem {
        v.map_keys(|&a| (a, SymWord::unit()))
    }

    pub fn gen(&self, k: usize) -> TElem {
        TElem::basis((self.unit(), SymWord::gen(k)))
    }

    pub fn mul(&self, x: &TElem, y: &TElem) -> TElem {
        let mut out = TElem::zero();
        for ((a, m), c) in x.iter() {
            let dm = m.deg(&self.degs);
            for ((b, n), e) in y.iter() {
                if self.max_weight.is_some_and(|w| m.weight() + n.weight() > w) {
                    continue;
                }
                let ab = self.coeff.mul_basis(*a, *b);
                if ab.is_zero() {
                    continue;
                }
                let mn = poly_mul(&Poly::basis(m.clone()), &Poly::basis(n.clone()), &self.degs, None);
                if mn.is_zero() {
                    continue;
                }
                let sign = if dm.is_odd() && self.coeff.deg(*b).is_odd() { rat(-1) } else { rat(1) };
                let ce: Rat = c * e * sign;
                for (g, cg) in ab.iter() {
                    for (w, cw) in mn.iter() {
                        out.add_term((*g, w.clone()), &ce * cg * cw);
                    }
                }
            }
        }
        out
    }

    /// `d_A ⊗ 1`.
    pub fn d_coeff(&self, x: &TElem) -> TElem {
        let mut out = TElem::zero();
        for ((a, m), c) in x.iter() {
            for (b, cb) in self.coeff.diff_of(*a).iter() {
                out.add_term((*b, m.clone()), c * cb);
            }
        }
        out
    }

    /// Apply the `Ã`-linear derivation of degree `qdeg` with `D(s_k) = images[k]`,
    /// plus `d_A ⊗ 1` when `with_da` is set.
    pub fn derive(&self, x: &TElem, images: &[TElem], qdeg: Deg, with_da: bool) -> TElem {
        let mut out = if with_da { self.d_coeff(x) } else { TElem::zero() };
        let u = self.unit();
        for ((a, m), c) in x.iter() {
            let letters = m.letters();
            let a_sign = qdeg.is_odd() && self.coeff.deg(*a).is_odd();
            let mut prefix = 0i32;
            let mut acc = TElem::zero();
            for (pos, &g) in letters.iter().enumerate() {
                if !images[g].is_zero() {
                    let left = TElem::basis((u, SymWord::from_sorted(letters[..pos].to_vec())));
                    let right = TElem::basis((u, SymWord::from_sorted(letters[pos + 1..].to_vec())));
                    let t = self.mul(&self.mul(&left, &images[g]), &right);
                    if qdeg.is_odd() && prefix.rem_euclid(2) == 1 {
                        acc.sub_assign(&t);
                    } else {
                        acc.add_assign(&t);
                    }
                }
                prefix += self.degs[g].0;
            }
            if acc.is_zero() {
                continue;
            }
            let lifted = self.mul(&TElem::basis((*a, SymWord::unit())), &acc);
            out.add_scaled(&lifted, &if a_sign { -c.clone() } else { c.clone() });
        }
        out
    }

    /// The algebra map `Ŝ(W') → Ã ⊗ Ŝ(W)` sending generator `k` to `images[k]`;
    /// only the letters of `p` are read, so `p` may live over other generators.
    pub fn substitute(&self, p: &Poly, images: &[TElem]) -> TElem {
        let mut out = TElem::zero();
        for (w, c) in p.iter() {
            let mut acc = self.one();
            for &g in w.letters() {
                acc = self.mul(&acc, &images[g]);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// `Ã`-linear extension of `substitute` to an element of another tensor ring over the same `Ã`.
    pub fn substitute_linear(&self, x: &TElem, images: &[TElem]) -> TElem {
        let mut out = TElem::zero();
        for ((a, m), c) in x.iter() {
            let img = self.substitute(&Poly::basis(m.clone()), images);
            let t = self.mul(&TElem::basis((*a, SymWord::unit())), &img);
            out.add_scaled(&t, c);
        }
        out
    }

    /// Component in `Ã ⊗ 1`.
    pub fn constant_part(&self, x: &TElem) -> Vector {
        Vector::from_terms(x.iter().filter(|((_, m), _)| m.is_unit()).map(|((a, _), c)| (*a, c.clone())))
    }

    pub fn format(&self, x: &TElem, names: &[String]) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let anames = self.coeff.names();
        let mut parts = Vec::new();
        for ((a, m), c) in x.iter() {
            let mono = Poly::term(m.clone(), c.clone());
            let body = format_poly(&mono, names);
            if Some(*a) == self.coeff.unit() {
                parts.push(body);
            } else {
                parts.push(format!("{}⊗({body})", anames[*a]));
            }
        }
        parts.join(" + ")
    }
}
