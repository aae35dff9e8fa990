use std::collections::BTreeMap;

use num_traits::Zero;

use crate::graded::{format_poly, poly_derive, poly_deg, Deg, DegRange, GradedSpace, Lin, Poly, SymWord, TruncProfile};
use crate::linalg::{rat, Rat};
use crate::{Error, Result};

pub type Vector = Lin<usize>;

/// Finite-dimensional cdga given by structure constants, optionally with a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCdga {
    basis: GradedSpace,
    product: BTreeMap<(usize, usize), Vector>,
    diff: Vec<Vector>,
    unit: Option<usize>,
}

/// Free graded-commutative algebra on generators with a derivation differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeCdga {
    pub gens: GradedSpace,
    pub d: Vec<Poly>,
}

/// Algebra map from a free cdga, given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgaMap {
    pub source: FreeCdga,
    pub target: FiniteCdga,
    pub images: Vec<Vector>,
}

pub fn format_vector(v: &Vector, names: &[String]) -> String {
    let p: Poly = v.map_keys(|&i| SymWord::gen(i));
    format_poly(&p, names)
}

impl FiniteCdga {
    /// Non-unital algebra with zero product and differential.
    pub fn new(basis: GradedSpace) -> FiniteCdga {
        let n = basis.len();
        FiniteCdga { basis, product: BTreeMap::new(), diff: vec![Vector::zero(); n], unit: None }
    }

    /// The ground field as a unital one-dimensional algebra.
    pub fn ground() -> FiniteCdga {
        let basis = GradedSpace::new([("1", Deg(0))]).expect("single name");
        FiniteCdga { basis, product: BTreeMap::new(), diff: vec![Vector::zero()], unit: Some(0) }
    }

    /// Zero-product algebra on the given generators, e.g. reduced cohomology of a sphere.
    pub fn trivial(basis: GradedSpace) -> FiniteCdga {
        FiniteCdga::new(basis)
    }

    /// `H*(S^n)` with unit, or its augmentation ideal when `unital` is false.
    pub fn sphere(n: i32, unital: bool) -> FiniteCdga {
        let ideal = FiniteCdga::trivial(GradedSpace::new([("x", Deg::from_cohomological(n))]).expect("one name"));
        if unital {
            ideal.unitalize()
        } else {
            ideal
        }
    }

    pub fn basis(&self) -> &GradedSpace {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn deg(&self, i: usize) -> Deg {
        self.basis.deg(i)
    }

    pub fn names(&self) -> Vec<String> {
        self.basis.names()
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    /// Basis indices of the augmentation ideal.
    pub fn ideal_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| Some(i) != self.unit).collect()
    }

    pub fn set_unit(&mut self, unit: Option<usize>) {
        self.unit = unit;
    }

    /// Store `b_i b_j` exactly as given.
    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) {
        if v.is_zero() {
            self.product.remove(&(i, j));
        } else {
            self.product.insert((i, j), v);
        }
    }

    /// Store `b_i b_j = v` and `b_j b_i = (−1)^{|i||j|} v`.
    pub fn set_product_comm(&mut self, i: usize, j: usize, v: Vector) {
        let sign = if self.deg(i).is_odd() && self.deg(j).is_odd() { -1 } else { 1 };
        self.set_product(j, i, v.scaled(&rat(sign)));
        self.set_product(i, j, v);
    }

    pub fn set_diff(&mut self, i: usize, v: Vector) {
        self.diff[i] = v;
    }

    pub fn product_table(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.product
    }

    pub fn diff_of(&self, i: usize) -> &Vector {
        &self.diff[i]
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        if Some(i) == self.unit {
            return Vector::basis(j);
        }
        if Some(j) == self.unit {
            return Vector::basis(i);
        }
        self.product.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c: Rat = a * b;
                out.add_scaled(&self.mul_basis(*i, *j), &c);
            }
        }
        out
    }

    pub fn d(&self, x: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in x.iter() {
            out.add_scaled(&self.diff[*i], a);
        }
        out
    }

    pub fn unit_elem(&self) -> Option<Vector> {
        self.unit.map(Vector::basis)
    }

    pub fn elem_deg(&self, x: &Vector) -> Option<Deg> {
        let mut it = x.keys().map(|&i| self.deg(i));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn format(&self, x: &Vector) -> String {
        format_vector(x, &self.names())
    }

    /// `Ã = A ⊕ k` with the unit at index 0; a unital algebra is returned unchanged.
    pub fn unitalize(&self) -> FiniteCdga {
        if self.unit.is_some() {
            return self.clone();
        }
        let mut gens = vec![("1".to_string(), Deg(0))];
        gens.extend(self.basis.generators().iter().map(|g| (g.name.clone(), g.deg)));
        let basis = GradedSpace::new(gens).unwrap_or_else(|_| {
            let mut g = vec![("1~".to_string(), Deg(0))];
            g.extend(self.basis.generators().iter().map(|g| (g.name.clone(), g.deg)));
            GradedSpace::new(g).expect("unit name is fresh")
        });
        let shift = |v: &Vector| v.map_keys(|&i| i + 1);
        let mut out = FiniteCdga::new(basis);
        out.unit = Some(0);
        for (&(i, j), v) in &self.product {
            out.product.insert((i + 1, j + 1), shift(v));
        }
        for (i, v) in self.diff.iter().enumerate() {
            out.diff[i + 1] = shift(v);
        }
        out
    }

    /// Index in `self.unitalize()` of basis element `i`.
    pub fn unitalized_index(&self, i: usize) -> usize {
        if self.unit.is_some() {
            i
        } else {
            i + 1
        }
    }

    /// Smallest `n` with `A^n = 0`, or `None` if the powers stabilize at a nonzero ideal.
    pub fn nilpotency_index(&self) -> Option<usize> {
        use crate::linalg::VectorSolver;
        if self.unit.is_some() {
            return None;
        }
        let to_sparse = |v: &Vector| v.iter().map(|(k, c)| (*k, c.clone())).collect();
        let mut power: Vec<Vector> = (0..self.dim()).map(Vector::basis).collect();
        let mut n = 1;
        let mut last_dim = self.dim();
        while last_dim > 0 {
            let mut solver = VectorSolver::new();
            let mut next = Vec::new();
            for x in &power {
                for j in 0..self.dim() {
                    let p = self.mul(x, &Vector::basis(j));
                    if !p.is_zero() && solver.push(&to_sparse(&p)) {
                        next.push(p);
                    }
                }
            }
            n += 1;
            if next.len() == last_dim {
                return None;
            }
            last_dim = next.len();
            power = next;
        }
        Some(n)
    }

    /// Graded tensor product with `(a⊗b)(a'⊗b') = (−1)^{|b||a'|} aa'⊗bb'`.
    pub fn tensor(a: &FiniteCdga, b: &FiniteCdga) -> FiniteCdga {
        let nb = b.dim();
        let idx = |i: usize, j: usize| i * nb + j;
        let mut gens = Vec::new();
        for i in 0..a.dim() {
            for j in 0..nb {
                let name = match (Some(i) == a.unit, Some(j) == b.unit) {
                    (true, true) => "1".to_string(),
                    (true, false) => b.basis.name(j).to_string(),
                    (false, true) => a.basis.name(i).to_string(),
                    (false, false) => format!("{}.{}", a.basis.name(i), b.basis.name(j)),
                };
                gens.push((name, a.deg(i) + b.deg(j)));
            }
        }
        let basis = GradedSpace::new(gens.clone()).unwrap_or_else(|_| {
            GradedSpace::new(gens.iter().enumerate().map(|(k, (n, d))| (format!("{n}#{k}"), *d))).expect("indexed")
        });
        let mut out = FiniteCdga::new(basis);
        if let (Some(ua), Some(ub)) = (a.unit, b.unit) {
            out.unit = Some(idx(ua, ub));
        }
        for i in 0..a.dim() {
            for j in 0..nb {
                // d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db
                let mut dv = Vector::zero();
                for (k, c) in a.diff[i].iter() {
                    dv.add_term(idx(*k, j), c.clone());
                }
                let s = if a.deg(i).is_odd() { rat(-1) } else { rat(1) };
                for (k, c) in b.diff[j].iter() {
                    dv.add_term(idx(i, *k), c * &s);
                }
                out.diff[idx(i, j)] = dv;
                if out.unit == Some(idx(i, j)) {
                    continue;
                }
                for i2 in 0..a.dim() {
                    for j2 in 0..nb {
                        if out.unit == Some(idx(i2, j2)) {
                            continue;
                        }
                        let pa = a.mul_basis(i, i2);
                        let pb = b.mul_basis(j, j2);
                        if pa.is_zero() || pb.is_zero() {
                            continue;
                        }
                        let sign = if b.deg(j).is_odd() && a.deg(i2).is_odd() { rat(-1) } else { rat(1) };
                        let mut v = Vector::zero();
                        for (k, ca) in pa.iter() {
                            for (l, cb) in pb.iter() {
                                v.add_term(idx(*k, *l), ca * cb * &sign);
                            }
                        }
                        out.set_product(idx(i, j), idx(i2, j2), v);
                    }
                }
            }
        }
        out
    }

    /// `Ŝ_+(W)` modulo words of weight greater than `weight`, with the induced
    /// differential. Returns the algebra and the word for each basis element.
    pub fn truncated_free(free: &FreeCdga, weight: usize) -> (FiniteCdga, Vec<SymWord>) {
        let degs = free.gens.degs();
        let mut words: Vec<SymWord> = Vec::new();
        let mut layer: Vec<SymWord> = vec![SymWord::unit()];
        for _ in 0..weight {
            let mut next = Vec::new();
            for w in &layer {
                let start = w.letters().last().copied().unwrap_or(0);
                for g in start..free.gens.len() {
                    let mut l = w.letters().to_vec();
                    l.push(g);
                    if let Some((nw, _)) = crate::graded::sym_normalize(&l, &degs) {
                        if !next.contains(&nw) {
                            next.push(nw);
                        }
                    }
                }
            }
            words.extend(next.iter().cloned());
            layer = next;
        }
        let names = free.gens.names();
        let index: BTreeMap<SymWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let basis = GradedSpace::new(words.iter().map(|w| (w.display(&names), w.deg(&degs)))).expect("distinct words");
        let mut out = FiniteCdga::new(basis);
        let to_vec = |p: &Poly| -> Vector {
            Vector::from_terms(p.iter().filter_map(|(w, c)| index.get(w).map(|&i| (i, c.clone()))))
        };
        for (i, wi) in words.iter().enumerate() {
            let dp = poly_derive(&Poly::basis(wi.clone()), &free.d, Deg(-1), &degs, Some(weight));
            out.diff[i] = to_vec(&dp);
            for (j, wj) in words.iter().enumerate() {
                if wi.weight() + wj.weight() > weight {
                    continue;
                }
                let p = crate::graded::poly_mul(&Poly::basis(wi.clone()), &Poly::basis(wj.clone()), &degs, None);
                out.set_product(i, j, to_vec(&p));
            }
        }
        (out, words)
    }

    /// Evaluate a polynomial under generator images in this algebra.
    pub fn eval(&self, p: &Poly, images: &[Vector]) -> Vector {
        let mut out = Vector::zero();
        for (w, c) in p.iter() {
            let mut acc = match self.unit_elem() {
                Some(u) => u,
                None if w.is_unit() => panic!("constant term evaluated in a non-unital algebra"),
                None => images[w.letters()[0]].clone(),
            };
            let skip = usize::from(self.unit.is_none());
            for &g in &w.letters()[skip..] {
                if acc.is_zero() {
                    break;
                }
                acc = self.mul(&acc, &images[g]);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Exhaustive axiom check.
    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        let names = self.names();
        let b = |i: usize| self.basis.name(i).to_string();
        for i in 0..n {
            if !self.diff[i].is_zero() && self.elem_deg(&self.diff[i]) != Some(self.deg(i) + Deg(-1)) {
                return Err(Error::violation("differential degree", format!("d({})", b(i)), self.format(&self.diff[i])));
            }
            let dd = self.d(&self.diff[i]);
            if !dd.is_zero() {
                return Err(Error::violation("d^2 = 0", format!("d(d({}))", b(i)), format_vector(&dd, &names)));
            }
        }
        for (&(i, j), v) in &self.product {
            if self.elem_deg(v) != Some(self.deg(i) + self.deg(j)) {
                return Err(Error::violation("product degree", format!("{}*{}", b(i), b(j)), self.format(v)));
            }
        }
        if let Some(u) = self.unit {
            if self.deg(u) != Deg(0) || !self.diff[u].is_zero() {
                return Err(Error::violation("unit", b(u), self.format(&self.diff[u])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_basis(i, j);
                let mut ji = self.mul_basis(j, i);
                if self.deg(i).is_odd() && self.deg(j).is_odd() {
                    ji = ji.neg();
                }
                if ij != ji {
                    let mut r = ij.clone();
                    r.sub_assign(&ji);
                    return Err(Error::violation("graded commutativity", format!("{}*{}", b(i), b(j)), self.format(&r)));
                }
                // d(ab) = d(a)b + (−1)^{|a|} a d(b)
                let lhs = self.d(&ij);
                let mut rhs = self.mul(&self.diff[i], &Vector::basis(j));
                let t = self.mul(&Vector::basis(i), &self.diff[j]);
                if self.deg(i).is_odd() {
                    rhs.sub_assign(&t);
                } else {
                    rhs.add_assign(&t);
                }
                if lhs != rhs {
                    let mut r = lhs;
                    r.sub_assign(&rhs);
                    return Err(Error::violation("Leibniz rule", format!("d({}*{})", b(i), b(j)), self.format(&r)));
                }
                for k in 0..n {
                    let l = self.mul(&ij, &Vector::basis(k));
                    let r = self.mul(&Vector::basis(i), &self.mul_basis(j, k));
                    if l != r {
                        let mut res = l;
                        res.sub_assign(&r);
                        return Err(Error::violation(
                            "associativity",
                            format!("({}*{})*{}", b(i), b(j), b(k)),
                            self.format(&res),
                        ));
                    }
                }
            }
        }
        if self.unit.is_none() && n > 0 && self.nilpotency_index().is_none() {
            return Err(Error::violation("nilpotence", "augmentation ideal", "powers stabilize at a nonzero ideal"));
        }
        Ok(())
    }
}

impl FreeCdga {
    pub fn new(gens: GradedSpace, d: Vec<Poly>) -> Result<FreeCdga> {
        if d.len() != gens.len() {
            return Err(Error::LengthMismatch { expected: gens.len(), got: d.len() });
        }
        Ok(FreeCdga { gens, d })
    }

    pub fn degs(&self) -> Vec<Deg> {
        self.gens.degs()
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.names()
    }

    /// Apply the differential to a polynomial.
    pub fn diff(&self, p: &Poly, max_weight: Option<usize>) -> Poly {
        poly_derive(p, &self.d, Deg(-1), &self.degs(), max_weight)
    }

    /// Checks degree, absence of constant terms, and `d² = 0` up to the weight bound.
    pub fn check(&self, trunc: &TruncProfile) -> Result<()> {
        let degs = self.degs();
        let names = self.names();
        for (k, dk) in self.d.iter().enumerate() {
            if dk.is_zero() {
                continue;
            }
            if dk.coeff(&SymWord::unit()) != Rat::zero() {
                return Err(Error::violation("no constant term", format!("d({})", names[k]), format_poly(dk, &names)));
            }
            if poly_deg(dk, &degs) != Some(degs[k] + Deg(-1)) {
                return Err(Error::violation("differential degree", format!("d({})", names[k]), format_poly(dk, &names)));
            }
        }
        for k in 0..self.gens.len() {
            let dd = self.diff(&self.d[k], Some(trunc.weight_max));
            if !dd.is_zero() {
                let w = dd.keys().map(|w| w.weight()).min().unwrap_or(0);
                return Err(Error::violation(
                    "d^2 = 0",
                    format!("generator {} at weight {w}", names[k]),
                    format_poly(&dd, &names),
                ));
            }
        }
        Ok(())
    }

    /// Degrees where the truncation `Ŝ_+(W)/(weight > w)` agrees with `Ŝ_+(W)`.
    pub fn truncation_complete(&self, weight: usize) -> DegRange {
        let degs = self.degs();
        if degs.iter().all(|d| d.is_odd()) && weight >= degs.len() {
            return DegRange::ALL;
        }
        crate::graded::tail_free_range(&degs, weight)
    }
}

impl CdgaMap {
    pub fn new(source: FreeCdga, target: FiniteCdga, images: Vec<Vector>) -> Result<CdgaMap> {
        if images.len() != source.gens.len() {
            return Err(Error::LengthMismatch { expected: source.gens.len(), got: images.len() });
        }
        Ok(CdgaMap { source, target, images })
    }

    pub fn zero(source: FreeCdga, target: FiniteCdga) -> CdgaMap {
        let n = source.gens.len();
        CdgaMap { source, target, images: vec![Vector::zero(); n] }
    }

    /// Generator images must lie in the augmentation ideal.
    pub fn check_continuous(&self) -> Result<()> {
        if let Some(u) = self.target.unit() {
            for (k, im) in self.images.iter().enumerate() {
                if !im.coeff(&u).is_zero() {
                    return Err(Error::NonContinuous(format!(
                        "image of {} has a unit component",
                        self.source.gens.name(k)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Evaluate on a polynomial of the source.
    pub fn apply(&self, p: &Poly) -> Vector {
        self.target.eval(p, &self.images)
    }

    pub fn check(&self) -> Result<()> {
        self.check_continuous()?;
        let names = self.source.names();
        for (k, im) in self.images.iter().enumerate() {
            if !im.is_zero() && self.target.elem_deg(im) != Some(self.source.gens.deg(k)) {
                return Err(Error::violation("map degree", names[k].clone(), self.target.format(im)));
            }
            let lhs = self.apply(&self.source.d[k]);
            let rhs = self.target.d(im);
            if lhs != rhs {
                let mut r = lhs;
                r.sub_assign(&rhs);
                return Err(Error::violation(
                    "commutes with differentials",
                    format!("generator {}", names[k]),
                    self.target.format(&r),
                ));
            }
        }
        Ok(())
    }
}

/// A map of finite cdgas given on basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMap {
    pub source: FiniteCdga,
    pub target: FiniteCdga,
    pub images: Vec<Vector>,
}

impl FiniteMap {
    pub fn new(source: FiniteCdga, target: FiniteCdga, images: Vec<Vector>) -> Result<FiniteMap> {
        if images.len() != source.dim() {
            return Err(Error::LengthMismatch { expected: source.dim(), got: images.len() });
        }
        Ok(FiniteMap { source, target, images })
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, c) in x.iter() {
            out.add_scaled(&self.images[*i], c);
        }
        out
    }

    /// Degree, differential, product and unit compatibility.
    pub fn check(&self) -> Result<()> {
        let names = self.source.names();
        for (i, im) in self.images.iter().enumerate() {
            if !im.is_zero() && self.target.elem_deg(im) != Some(self.source.deg(i)) {
                return Err(Error::violation("map degree", names[i].clone(), self.target.format(im)));
            }
            let lhs = self.apply(self.source.diff_of(i));
            if lhs != self.target.d(im) {
                return Err(Error::violation("commutes with differentials", names[i].clone(), self.target.format(&lhs)));
            }
            for j in 0..self.source.dim() {
                let lhs = self.apply(&self.source.mul_basis(i, j));
                let rhs = self.target.mul(im, &self.images[j]);
                if lhs != rhs {
                    return Err(Error::violation(
                        "multiplicative",
                        format!("{} * {}", names[i], names[j]),
                        self.target.format(&lhs),
                    ));
                }
            }
        }
        if let Some(u) = self.source.unit() {
            if self.target.unit_elem().as_ref() != Some(&self.images[u]) {
                return Err(Error::violation("unital", names[u].clone(), self.target.format(&self.images[u])));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::sym_normalize;

    fn poly(terms: &[(i64, &[usize])], degs: &[Deg]) -> Poly {
        let mut p = Poly::zero();
        for (c, w) in terms {
            if let Some((sw, s)) = sym_normalize(w, degs) {
                p.add_term(sw, rat(c * s as i64));
            }
        }
        p
    }

    /// `k[x,y]` with |x| = 2, |y| = 3 cohomological.
    fn sphere_model(dy: &[(i64, &[usize])], dx: &[(i64, &[usize])]) -> FreeCdga {
        let gens = GradedSpace::new([("x", Deg(-2)), ("y", Deg(-3))]).unwrap();
        let degs = gens.degs();
        FreeCdga::new(gens, vec![poly(dx, &degs), poly(dy, &degs)]).unwrap()
    }

    #[test]
    fn sphere_cohomology_is_valid() {
        let a = FiniteCdga::sphere(2, false);
        assert!(a.check().is_ok());
        assert_eq!(a.nilpotency_index(), Some(2));
        assert!(a.unitalize().check().is_ok());
    }

    #[test]
    fn non_nilpotent_ideal_rejected() {
        let mut a = FiniteCdga::new(GradedSpace::new([("e", Deg(0))]).unwrap());
        a.set_product(0, 0, Vector::basis(0));
        assert!(a.check().unwrap_err().is_violation());
    }

    #[test]
    fn free_model_and_broken_variant() {
        let t = TruncProfile::default();
        let good = sphere_model(&[(1, &[0, 0])], &[]);
        assert!(good.check(&t).is_ok());
        // d(x) = y on top of d(y) = x^2: d^2(y) = 2xy
        let bad = sphere_model(&[(1, &[0, 0])], &[(1, &[1])]);
        assert!(bad.check(&t).unwrap_err().is_violation());
    }

    #[test]
    fn truncated_free_is_a_cdga() {
        let b = sphere_model(&[(1, &[0, 0])], &[]);
        let (a, words) = FiniteCdga::truncated_free(&b, 3);
        // x, y, x^2, xy, x^3, x^2 y
        assert_eq!(words.len(), 6);
        assert!(a.check().is_ok());
    }

    #[test]
    fn weak_equivalence_onto_cohomology() {
        let b = sphere_model(&[(1, &[0, 0])], &[]);
        let target = FiniteCdga::trivial(GradedSpace::new([("x", Deg(-2))]).unwrap());
        let f = CdgaMap::new(b.clone(), target.clone(), vec![Vector::basis(0), Vector::zero()]).unwrap();
        assert!(f.check().is_ok());
        // target x^2 != 0 in k[x]/x^3: the map y -> 0 fails
        let mut cube = FiniteCdga::new(GradedSpace::new([("x", Deg(-2)), ("x2", Deg(-4))]).unwrap());
        cube.set_product(0, 0, Vector::basis(1));
        assert!(cube.check().is_ok());
        let g = CdgaMap::new(b, cube, vec![Vector::basis(0), Vector::zero()]).unwrap();
        assert!(g.check().unwrap_err().is_violation());
    }

    #[test]
    fn tensor_with_interval_is_valid() {
        let mut interval = FiniteCdga::new(
            GradedSpace::new([("1", Deg(0)), ("z", Deg(0)), ("dz", Deg(-1))]).unwrap(),
        );
        interval.set_unit(Some(0));
        interval.set_diff(1, Vector::basis(2));
        // z^2 = 0 and z dz = 0
        assert!(interval.check().is_ok());
        let t = FiniteCdga::tensor(&FiniteCdga::sphere(3, false), &interval);
        assert!(t.check().is_ok());
        assert_eq!(t.dim(), 3);
    }
}
