use std::collections::BTreeMap;

use num_traits::Zero;

use crate::graded::DegRange;
use crate::linalg::{rat, ComplexSlice, Rat, SparseMatrix, SparseVec, VectorSolver};
use crate::structures::{FiniteMap, Vector};
use crate::{Error, Result};

/// An ungraded Lie algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieTable {
    pub names: Vec<String>,
    pub bracket: BTreeMap<(usize, usize), Vector>,
}

impl LieTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> LieTable {
        LieTable { names: names.into_iter().map(Into::into).collect(), bracket: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = −v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector) {
        self.bracket.insert((j, i), v.neg());
        self.bracket.insert((i, j), v);
    }

    pub fn bracket_of(&self, i: usize, j: usize) -> Vector {
        self.bracket.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn bracket_vec(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(&self.bracket_of(*i, *j), &(a * b));
            }
        }
        out
    }

    /// `[e1, e2] = e3` with `e3` central.
    pub fn heisenberg() -> LieTable {
        let mut g = LieTable::new(["e1", "e2", "e3"]);
        g.set_bracket(0, 1, Vector::basis(2));
        g
    }

    /// `[e1, e2] = e2`.
    pub fn affine_line() -> LieTable {
        let mut g = LieTable::new(["e1", "e2"]);
        g.set_bracket(0, 1, Vector::basis(1));
        g
    }

    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            if !self.bracket_of(i, i).is_zero() {
                return Err(Error::violation("antisymmetry", self.names[i].clone(), "[e,e] ≠ 0".to_string()));
            }
            for j in 0..n {
                let mut s = self.bracket_of(i, j);
                s.add_assign(&self.bracket_of(j, i));
                if !s.is_zero() {
                    return Err(Error::violation(
                        "antisymmetry",
                        format!("{}, {}", self.names[i], self.names[j]),
                        "nonzero".to_string(),
                    ));
                }
                for k in 0..n {
                    let b = |x: usize, y: usize, z: usize| {
                        self.bracket_vec(&Vector::basis(x), &self.bracket_of(y, z))
                    };
                    let mut jac = b(i, j, k);
                    jac.add_assign(&b(j, k, i));
                    jac.add_assign(&b(k, i, j));
                    if !jac.is_zero() {
                        return Err(Error::violation(
                            "Jacobi",
                            format!("{}, {}, {}", self.names[i], self.names[j], self.names[k]),
                            "nonzero".to_string(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A module over a `LieTable`: one action matrix per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTable {
    pub dim: usize,
    pub action: Vec<SparseMatrix>,
}

impl ModuleTable {
    pub fn trivial(g: &LieTable, dim: usize) -> ModuleTable {
        ModuleTable { dim, action: vec![SparseMatrix::zeros(dim, dim); g.dim()] }
    }

    pub fn adjoint(g: &LieTable) -> ModuleTable {
        let n = g.dim();
        let action = (0..n)
            .map(|i| {
                let mut m = SparseMatrix::zeros(n, n);
                for j in 0..n {
                    for (k, c) in g.bracket_of(i, j).iter() {
                        m.set(*k, j, c.clone());
                    }
                }
                m
            })
            .collect();
        ModuleTable { dim: n, action }
    }

    /// `ρ([x, y]) = ρ(x)ρ(y) − ρ(y)ρ(x)`.
    pub fn check(&self, g: &LieTable) -> Result<()> {
        if self.action.len() != g.dim() {
            return Err(Error::LengthMismatch { expected: g.dim(), got: self.action.len() });
        }
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let mut lhs = SparseMatrix::zeros(self.dim, self.dim);
                for (k, c) in g.bracket_of(i, j).iter() {
                    for (r, col, v) in self.action[*k].entries() {
                        lhs.add_to(r, col, &(v * c));
                    }
                }
                let ab = self.action[i].mul(&self.action[j]);
                let ba = self.action[j].mul(&self.action[i]);
                for r in 0..self.dim {
                    for col in 0..self.dim {
                        if lhs.get(r, col) != ab.get(r, col) - ba.get(r, col) {
                            return Err(Error::violation(
                                "module",
                                format!("{}, {}", g.names[i], g.names[j]),
                                "ρ([x,y]) ≠ [ρx,ρy]".to_string(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, p, &mut Vec::new(), &mut out);
    out
}

fn sign(odd: bool) -> Rat {
    if odd {
        rat(-1)
    } else {
        rat(1)
    }
}

/// Alternating cochains `Hom(Λ^p g, M)` placed in homological degree `−p`,
/// with the differential
/// `(df)(v_1..v_{p+1}) = Σ_{i<j} (−1)^{i+j−1} f([v_i,v_j], …) + Σ_i (−1)^i v_i f(…)`.
pub fn ce_classical(g: &LieTable, m: &ModuleTable, n_max: usize) -> Result<ComplexSlice> {
    g.check()?;
    m.check(g)?;
    let n = g.dim();
    let top = (n_max + 1).min(n);
    let bases: Vec<Vec<Vec<usize>>> = (0..=top + 1).map(|p| subsets(n, p)).collect();
    let index: Vec<BTreeMap<Vec<usize>, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
    let complete = if n_max + 1 >= n { DegRange::ALL } else { DegRange::at_least(-(n_max as i32) - 1) };
    let mut slice = ComplexSlice::new(DegRange::new(-(n_max as i32) - 1, 1), complete);
    slice.set_dim(1, 0);
    for p in 0..=top {
        slice.set_dim(-(p as i32), bases[p].len() * m.dim);
    }
    slice.set_diff(1, SparseMatrix::zeros(slice.dim(0), 0));
    for p in 0..top.min(n_max + 1) {
        let mut d = SparseMatrix::zeros(bases[p + 1].len() * m.dim, bases[p].len() * m.dim);
        for (jrow, jset) in bases[p + 1].iter().enumerate() {
            for a in 0..jset.len() {
                for b in a + 1..jset.len() {
                    let s_ab = sign((a + b + 1) % 2 == 1);
                    let rest: Vec<usize> =
                        jset.iter().enumerate().filter(|(t, _)| *t != a && *t != b).map(|(_, &x)| x).collect();
                    for (k, c) in g.bracket_of(jset[a], jset[b]).iter() {
                        if rest.contains(k) {
                            continue;
                        }
                        let pos = rest.iter().filter(|&&x| x < *k).count();
                        let mut iset = rest.clone();
                        iset.insert(pos, *k);
                        let col = index[p][&iset];
                        let coef = c * &s_ab * sign(pos % 2 == 1);
                        for mm in 0..m.dim {
                            d.add_to(jrow * m.dim + mm, col * m.dim + mm, &coef);
                        }
                    }
                }
                let rest: Vec<usize> = jset.iter().enumerate().filter(|(t, _)| *t != a).map(|(_, &x)| x).collect();
                let col = index[p][&rest];
                let s_a = sign(a % 2 == 0);
                for (r, cc, v) in m.action[jset[a]].entries() {
                    d.add_to(jrow * m.dim + r, col * m.dim + cc, &(v * &s_a));
                }
            }
        }
        slice.set_diff(-(p as i32), d);
    }
    Ok(slice)
}

fn words(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

/// Signed `(p, q)` shuffles of `u` and `w` as `(word, sign)`.
fn shuffles(u: &[usize], w: &[usize]) -> Vec<(Vec<usize>, i32)> {
    if u.is_empty() {
        return vec![(w.to_vec(), 1)];
    }
    if w.is_empty() {
        return vec![(u.to_vec(), 1)];
    }
    let mut out = Vec::new();
    for (mut x, s) in shuffles(&u[1..], w) {
        x.insert(0, u[0]);
        out.push((x, s));
    }
    let flip = if u.len() % 2 == 1 { -1 } else { 1 };
    for (mut x, s) in shuffles(u, &w[1..]) {
        x.insert(0, w[0]);
        out.push((x, s * flip));
    }
    out
}

/// Functionals on `A^{⊗n}` vanishing on all signed shuffle products.
fn shuffle_free(dim: usize, n: usize) -> (Vec<Vec<usize>>, Vec<SparseVec>) {
    let ws = words(dim, n);
    let idx: BTreeMap<Vec<usize>, usize> = ws.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let mut rows = Vec::new();
    for p in 1..n {
        for u in words(dim, p) {
            for w in words(dim, n - p) {
                let mut row = SparseVec::new();
                for (x, s) in shuffles(&u, &w) {
                    let e = row.entry(idx[&x]).or_insert_with(|| rat(0));
                    *e += rat(s as i64);
                }
                row.retain(|_, c| *c != rat(0));
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut m = SparseMatrix::zeros(rows.len(), ws.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            m.set(r, *c, v.clone());
        }
    }
    (ws, m.kernel_basis())
}

/// Harrison cochains of an ungraded nilpotent algebra `A` with coefficients in
/// `B` (an `A`-module through `f`), placed in homological degree `−n`, with
/// `(df)(a_1..a_{n+1}) = a_1 f(a_2..) + Σ_k (−1)^k f(.., a_k a_{k+1}, ..) + (−1)^{n+1} f(a_1..a_n) a_{n+1}`.
pub fn harrison_classical(f: &FiniteMap, n_max: usize) -> Result<ComplexSlice> {
    f.check()?;
    let a = &f.source;
    let b = &f.target;
    if a.basis().degs().iter().chain(b.basis().degs().iter()).any(|d| d.0 != 0) {
        return Err(Error::Unsupported("classical Harrison complex needs ungraded algebras".into()));
    }
    if a.is_unital() {
        return Err(Error::Unsupported("classical Harrison complex needs a non-unital algebra".into()));
    }
    let (na, nb) = (a.dim(), b.dim());
    let levels: Vec<(Vec<Vec<usize>>, Vec<SparseVec>)> = (0..=n_max + 1).map(|n| shuffle_free(na, n)).collect();
    let mut slice = ComplexSlice::new(DegRange::new(-(n_max as i32) - 1, 0), DegRange::at_least(-(n_max as i32) - 1));
    slice.set_dim(0, 0);
    for n in 1..=n_max + 1 {
        slice.set_dim(-(n as i32), levels[n].1.len() * nb);
    }
    slice.set_diff(0, SparseMatrix::zeros(slice.dim(-1), 0));
    for n in 1..=n_max {
        let (ws, basis) = &levels[n];
        let (ws1, basis1) = &levels[n + 1];
        let mut solver = VectorSolver::new();
        let full1 = |kv: &SparseVec, bb: usize| -> SparseVec {
            kv.iter().map(|(w, c)| (w * nb + bb, c.clone())).collect()
        };
        let mut targets = Vec::new();
        for kv in basis1 {
            for bb in 0..nb {
                targets.push(full1(kv, bb));
            }
        }
        for t in &targets {
            solver.push(t);
        }
        let pos: BTreeMap<&Vec<usize>, usize> = ws.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut d = SparseMatrix::zeros(basis1.len() * nb, basis.len() * nb);
        for (ci, kv) in basis.iter().enumerate() {
            for bb in 0..nb {
                // cochain g(word) = kv[word] · b_bb, evaluated on every word of length n+1
                let value = |w: &[usize]| -> Vector {
                    match pos.get(&w.to_vec()) {
                        Some(i) => Vector::term(bb, kv.get(i).cloned().unwrap_or_else(|| rat(0))),
                        None => Vector::zero(),
                    }
                };
                let mut img = SparseVec::new();
                for (wi, w) in ws1.iter().enumerate() {
                    let mut out = b.mul(&f.images[w[0]], &value(&w[1..]));
                    for k in 0..n {
                        let prod = a.mul_basis(w[k], w[k + 1]);
                        let s = sign((k + 1) % 2 == 1);
                        for (g, c) in prod.iter() {
                            let mut w2: Vec<usize> = w[..k].to_vec();
                            w2.push(*g);
                            w2.extend_from_slice(&w[k + 2..]);
                            out.add_scaled(&value(&w2), &(c * &s));
                        }
                    }
                    let last = b.mul(&value(&w[..n]), &f.images[w[n]]);
                    out.add_scaled(&last, &sign((n + 1) % 2 == 1));
                    for (bo, c) in out.iter() {
                        if !c.is_zero() {
                            img.insert(wi * nb + bo, c.clone());
                        }
                    }
                }
                let coords = solver.solve(&img).ok_or_else(|| {
                    Error::violation("Harrison differential", format!("arity {n}"), "leaves shuffle-free cochains".to_string())
                })?;
                for (r, c) in coords {
                    d.set(r, ci * nb + bb, c);
                }
            }
        }
        slice.set_diff(-(n as i32), d);
    }
    Ok(slice)
}
