use std::collections::BTreeMap;

use super::cdga::Vector;
use super::linfty::{DglaTable, LinftyAlg};
use super::morphism::LinftyMap;
use crate::graded::{poly_substitute, Deg, DegRange, GradedSpace, Poly, SymWord};
use crate::linalg::{rat, row_reduce, SparseMatrix, SparseVec};
use crate::{Error, Result};

fn to_sparse(v: &Vector) -> SparseVec {
    v.iter().map(|(k, c)| (*k, c.clone())).collect()
}

/// Restrict to the subspace spanned by homogeneous vectors of `V`. Fails when
/// the span is not closed under the operations.
pub fn restrict_subspace(l: &LinftyAlg, vectors: &[Vector]) -> Result<(LinftyAlg, LinftyMap)> {
    let space = l.space();
    let mut by_deg: BTreeMap<i32, Vec<SparseVec>> = BTreeMap::new();
    for v in vectors {
        let mut degs = v.keys().map(|&i| space.deg(i));
        let Some(d) = degs.next() else { continue };
        if degs.any(|e| e != d) {
            return Err(Error::Degree("subspace vectors must be homogeneous".into()));
        }
        by_deg.entry(d.0).or_default().push(to_sparse(v));
    }
    let mut basis: Vec<(usize, SparseVec)> = Vec::new();
    for (_, vs) in by_deg {
        basis.extend(row_reduce(vs));
    }
    basis.sort_by_key(|(p, _)| *p);
    let mut sub_space = GradedSpace::default();
    for (p, z) in &basis {
        let pure = z.len() == 1;
        let mut name = if pure { space.name(*p).to_string() } else { format!("{}'", space.name(*p)) };
        while sub_space.index(&name).is_ok() {
            name.push('\'');
        }
        sub_space.push(name, space.deg(*p))?;
    }
    // i*(s_k) = Σ_r (z_r)_k t_r
    let mut restrict: Vec<Poly> = vec![Poly::zero(); l.dim()];
    for (r, (_, z)) in basis.iter().enumerate() {
        for (k, c) in z {
            restrict[*k].add_term(SymWord::gen(r), c.clone());
        }
    }
    let sub_degs: Vec<Deg> = sub_space.degs().iter().map(|d| d.dual_generator()).collect();
    let pull = |p: &Poly| poly_substitute(p, &restrict, &sub_degs, None);
    let q: Vec<Poly> = basis.iter().map(|(p, _)| pull(l.q_of(*p))).collect();
    let sub = LinftyAlg::new(sub_space, q)?;
    for k in 0..l.dim() {
        let lhs = pull(l.q_of(k));
        let rhs = sub.apply(&restrict[k], None);
        if lhs != rhs {
            return Err(Error::Unsupported(format!(
                "span is not closed under the operations (generator {})",
                l.gens().name(k)
            )));
        }
    }
    let inclusion = LinftyMap::new(sub.clone(), l.clone(), restrict)?;
    Ok((sub, inclusion))
}

fn kernel_in_degree(idx: &[usize], d: &[Vector]) -> Vec<Vector> {
    let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(a, &i)| (i, a)).collect();
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    for &i in idx {
        for k in d[i].keys() {
            let n = rows.len();
            rows.entry(*k).or_insert(n);
        }
    }
    let mut m = SparseMatrix::zeros(rows.len(), idx.len());
    for &i in idx {
        for (k, c) in d[i].iter() {
            m.set(rows[k], pos[&i], c.clone());
        }
    }
    m.kernel_basis()
        .into_iter()
        .map(|v| Vector::from_terms(v.into_iter().map(|(a, c)| (idx[a], c))))
        .collect()
}

/// `V⟨0⟩`: all of `V_{>0}` together with the cycles in `V_0`, and its inclusion into `V`.
pub fn connected_cover(l: &LinftyAlg) -> Result<(LinftyAlg, LinftyMap)> {
    let d = l.differential();
    let mut vectors: Vec<Vector> = (0..l.dim()).filter(|&i| l.space().deg(i).0 > 0).map(Vector::basis).collect();
    let zero_deg = l.space().in_degree(Deg(0));
    vectors.extend(kernel_in_degree(&zero_deg, &d));
    let (sub, inc) = restrict_subspace(l, &vectors)?;
    let c = l.complete();
    let lo = match c.lo {
        None => None,
        Some(lo) if lo <= -1 => None,
        Some(lo) => Some(lo + 1),
    };
    let complete = DegRange { lo, hi: c.hi };
    let inc = LinftyMap { source: sub.clone().with_complete(complete), ..inc };
    Ok((sub.with_complete(complete), inc))
}

/// `g ⋉ (Σ^{−n} g)⟨0⟩` with the adjoint action on the shifted copy and zero bracket on it.
/// Requires a dgla concentrated in degrees ≥ 0.
pub fn square_zero_extension(g: &LinftyAlg, n: i32) -> Result<LinftyAlg> {
    let table = g.to_dgla().ok_or_else(|| Error::Unsupported("square-zero extension needs a dgla".into()))?;
    if g.space().min_deg().is_some_and(|d| d.0 < 0) {
        return Err(Error::Unsupported("square-zero extension needs a non-negatively graded dgla".into()));
    }
    let m = g.dim();
    let eps = Deg(-n);
    let mut names: Vec<(String, Deg)> = g.space().generators().iter().map(|x| (x.name.clone(), x.deg)).collect();
    for x in g.space().generators() {
        let mut name = format!("e{}", x.name);
        while names.iter().any(|(nm, _)| nm == &name) {
            name.push('\'');
        }
        names.push((name, x.deg + eps));
    }
    let space = GradedSpace::new(names)?;
    let mut t = DglaTable::new(space);
    let shift = |v: &Vector| v.map_keys(|&k| k + m);
    let eps_sign = if eps.is_odd() { rat(-1) } else { rat(1) };
    for i in 0..m {
        t.diff[i] = table.diff[i].clone();
        // d(ε⊗y) = (−1)^{|ε|} ε⊗dy
        t.diff[i + m] = shift(&table.diff[i]).scaled(&eps_sign);
    }
    for (&(a, b), v) in &table.bracket {
        t.bracket.insert((a, b), v.clone());
        // [x, ε⊗y] = (−1)^{|x||ε|} ε⊗[x,y],  [ε⊗x, y] = ε⊗[x,y]
        let sx = if g.space().deg(a).is_odd() && eps.is_odd() { rat(-1) } else { rat(1) };
        t.bracket.insert((a, b + m), shift(v).scaled(&sx));
        t.bracket.insert((a + m, b), shift(v));
    }
    let full = LinftyAlg::from_dgla(&t);
    let d = full.differential();
    let mut vectors: Vec<Vector> = (0..m).map(Vector::basis).collect();
    let shifted: Vec<usize> = (m..2 * m).collect();
    vectors.extend(shifted.iter().filter(|&&i| full.space().deg(i).0 > 0).map(|&i| Vector::basis(i)));
    let zero: Vec<usize> = shifted.iter().copied().filter(|&i| full.space().deg(i).0 == 0).collect();
    vectors.extend(kernel_in_degree(&zero, &d));
    let (sub, _) = restrict_subspace(&full, &vectors)?;
    Ok(sub.with_complete(g.complete()))
}
