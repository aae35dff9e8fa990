use std::collections::BTreeMap;

use super::linfty::LinftyAlg;
use super::morphism::LinftyMap;
use crate::graded::{poly_derive, poly_substitute, Deg, DegRange, GradedSpace, Poly, SymWord, TruncProfile};
use crate::linalg::{SparseMatrix, SparseVec, VectorSolver};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Homology(usize),
    Boundary,
    Chain(usize),
}

struct Splitting {
    vectors: Vec<SparseVec>,
    roles: Vec<Role>,
    coords: Vec<SparseVec>,
    hom_degs: Vec<Deg>,
    hom_names: Vec<String>,
}

fn linear_map(l: &LinftyAlg) -> Vec<SparseVec> {
    l.q().iter()
        .map(|p| p.iter().filter_map(|(w, c)| match w.letters() {
            [i] => Some((*i, c.clone())),
            _ => None,
        }).collect())
        .collect()
}

/// Split the generators as `H' ⊕ B ⊕ C` with `Q₁: C ≅ B`, preferring
/// earlier generators both for `C` and for homology representatives.
fn split(l: &LinftyAlg) -> Splitting {
    let sdeg = l.sdegs();
    let q1 = linear_map(l);
    let n = l.dim();
    let mut by_deg: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (k, d) in sdeg.iter().enumerate() {
        by_deg.entry(d.0).or_default().push(k);
    }
    let mut vectors = Vec::new();
    let mut roles = Vec::new();
    let mut boundary_of: BTreeMap<i32, Vec<SparseVec>> = BTreeMap::new();
    let mut chains: Vec<(SparseVec, SparseVec)> = Vec::new();
    for idx in by_deg.values() {
        let mut solver = VectorSolver::new();
        for &k in idx {
            if !q1[k].is_empty() && solver.push(&q1[k]) {
                let mut c = SparseVec::new();
                c.insert(k, crate::linalg::rat(1));
                chains.push((c, q1[k].clone()));
                boundary_of.entry(sdeg[k].0 - 1).or_default().push(q1[k].clone());
            }
        }
    }
    let mut hom_degs = Vec::new();
    let mut hom_names = Vec::new();
    let mut homology: Vec<(i32, SparseVec)> = Vec::new();
    for (&m, idx) in &by_deg {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(a, &k)| (k, a)).collect();
        let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
        for &k in idx {
            for i in q1[k].keys() {
                let r = rows.len();
                rows.entry(*i).or_insert(r);
            }
        }
        let mut mat = SparseMatrix::zeros(rows.len(), idx.len());
        for &k in idx {
            for (i, c) in &q1[k] {
                mat.set(rows[i], pos[&k], c.clone());
            }
        }
        let mut cycles: Vec<SparseVec> = mat
            .kernel_basis()
            .into_iter()
            .map(|v| v.into_iter().map(|(a, c)| (idx[a], c)).collect())
            .collect();
        cycles.sort_by_key(|v: &SparseVec| v.keys().next().copied());
        let mut solver = VectorSolver::new();
        for b in boundary_of.get(&m).into_iter().flatten() {
            solver.push(b);
            vectors.push(b.clone());
            roles.push(Role::Boundary);
        }
        for z in cycles {
            if solver.push(&z) {
                homology.push((m, z));
            }
        }
    }
    homology.sort_by_key(|(_, z)| z.keys().next().copied());
    for (m, z) in homology {
        let lead = *z.keys().next().expect("nonzero cycle");
        let e = l.space().name(lead);
        hom_names.push(if z.len() == 1 { format!("[{e}]") } else { format!("[{e}]'") });
        hom_degs.push(Deg(-m - 1));
        roles.push(Role::Homology(hom_degs.len() - 1));
        vectors.push(z);
    }
    for (j, (c, _)) in chains.into_iter().enumerate() {
        vectors.push(c);
        roles.push(Role::Chain(j));
    }
    assert_eq!(vectors.len(), n, "splitting must give a basis");
    let mut solver = VectorSolver::new();
    for v in &vectors {
        assert!(solver.push(v), "splitting vectors are dependent");
    }
    let coords = (0..n)
        .map(|k| {
            let mut e = SparseVec::new();
            e.insert(k, crate::linalg::rat(1));
            solver.solve(&e).expect("basis spans")
        })
        .collect();
    Splitting { vectors, roles, coords, hom_degs, hom_names }
}

fn as_poly(v: &SparseVec) -> Poly {
    Poly::from_terms(v.iter().map(|(k, c)| (SymWord::gen(*k), c.clone())))
}

/// Minimal L∞ structure on the homology of `(V, m₁)` with an L∞ quasi-isomorphism
/// into `L`, computed order by order up to the weight bound.
pub fn minimal_model(l: &LinftyAlg, trunc: &TruncProfile) -> Result<(LinftyAlg, LinftyMap)> {
    let c = l.complete();
    let certified = DegRange { lo: c.lo.map(|x| x + 1), hi: c.hi.map(|x| x - 1) };
    if l.dim() > 0 && certified.is_empty() {
        return Err(Error::WindowTooSmall("no degree of the homology is certified".into()));
    }
    let sp = split(l);
    let h_space = GradedSpace::new(sp.hom_names.iter().cloned().zip(sp.hom_degs.iter().copied()))?;
    let udeg: Vec<Deg> = sp.hom_degs.iter().map(|d| d.dual_generator()).collect();
    let sdeg = l.sdegs();
    let wmax = trunc.weight_max;
    let mut f_new: Vec<Poly> = sp
        .roles
        .iter()
        .map(|r| match r {
            Role::Homology(i) => Poly::basis(SymWord::gen(*i)),
            _ => Poly::zero(),
        })
        .collect();
    let mut qh: Vec<Poly> = vec![Poly::zero(); sp.hom_degs.len()];
    let f_of_s = |f_new: &[Poly]| -> Vec<Poly> {
        sp.coords
            .iter()
            .map(|co| {
                let mut p = Poly::zero();
                for (j, c) in co {
                    p.add_scaled(&f_new[*j], c);
                }
                p
            })
            .collect()
    };
    let chain_boundary: BTreeMap<usize, usize> = {
        // chain j pairs with the boundary vector equal to Q₁ of it
        let q1 = linear_map(l);
        let mut out = BTreeMap::new();
        for (a, r) in sp.roles.iter().enumerate() {
            if let Role::Chain(_) = r {
                let k = *sp.vectors[a].keys().next().expect("chain generator");
                let b = sp.vectors.iter().position(|v| v == &q1[k]).expect("boundary recorded");
                out.insert(a, b);
            }
        }
        out
    };
    for n in 2..=wmax {
        let fs = f_of_s(&f_new);
        let residual = |w: &SparseVec| -> Poly {
            let p = as_poly(w);
            let fw = poly_substitute(&p, &fs, &udeg, Some(n));
            let lhs = poly_derive(&fw, &qh, Deg(-1), &udeg, Some(n));
            let qw = poly_derive(&p, l.q(), Deg(-1), &sdeg, None);
            let rhs = poly_substitute(&qw, &fs, &udeg, Some(n));
            let mut r = lhs;
            r.sub_assign(&rhs);
            r.filtered(|x| x.weight() == n)
        };
        let rs: Vec<Poly> = sp.vectors.iter().map(residual).collect();
        for (a, role) in sp.roles.iter().enumerate() {
            match role {
                Role::Homology(i) => qh[*i].sub_assign(&rs[a]),
                Role::Boundary => {
                    if !rs[a].is_zero() {
                        return Err(Error::violation(
                            "transfer obstruction vanishes",
                            format!("order {n}"),
                            crate::graded::format_poly(&rs[a], &h_space.names()),
                        ));
                    }
                }
                Role::Chain(_) => {
                    let b = chain_boundary[&a];
                    f_new[b].add_assign(&rs[a]);
                }
            }
        }
    }
    let h = LinftyAlg::new(h_space, qh)?.with_complete(certified);
    let images = f_of_s(&f_new);
    let map = LinftyMap::new(h.clone(), l.clone(), images)?;
    Ok((h, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedSpace;
    use crate::linalg::ratio;
    use crate::structures::{check_linfty, check_linfty_map, DglaTable, Vector};

    #[test]
    fn contractible_pair_gives_zero() {
        let mut t = DglaTable::new(GradedSpace::new([("x", Deg(1)), ("y", Deg(0))]).unwrap());
        t.diff[0] = Vector::basis(1);
        let (h, f) = minimal_model(&LinftyAlg::from_dgla(&t), &TruncProfile::default()).unwrap();
        assert_eq!(h.dim(), 0);
        assert!(check_linfty_map(&f, &TruncProfile::default()).is_ok());
    }

    #[test]
    fn acyclic_dgla_gives_zero() {
        let mut t = DglaTable::new(GradedSpace::new([("x", Deg(-1)), ("w", Deg(-2))]).unwrap());
        t.set_bracket(0, 0, Vector::basis(1));
        t.diff[0] = Vector::term(1, ratio(-1, 2));
        let (h, _) = minimal_model(&LinftyAlg::from_dgla(&t), &TruncProfile::default()).unwrap();
        assert_eq!(h.dim(), 0);
    }

    #[test]
    fn minimal_input_is_fixed() {
        let mut t = DglaTable::new(GradedSpace::new([("v", Deg(1)), ("w", Deg(2))]).unwrap());
        t.set_bracket(0, 0, Vector::basis(1));
        let l = LinftyAlg::from_dgla(&t);
        let (h, f) = minimal_model(&l, &TruncProfile::default()).unwrap();
        assert_eq!(h.q(), l.q());
        assert_eq!(f.images, LinftyMap::identity(&l).images);
    }

    #[test]
    fn transferred_massey_type_product() {
        // odd x with [x,x] = c = d(u) and [x,u] = e: homology {x, e} carries a ternary operation
        let space = GradedSpace::new([("x", Deg(1)), ("c", Deg(2)), ("u", Deg(3)), ("e", Deg(4))]).unwrap();
        let mut t = DglaTable::new(space);
        t.set_bracket(0, 0, Vector::basis(1));
        t.diff[2] = Vector::basis(1);
        t.set_bracket(0, 2, Vector::basis(3));
        let l = LinftyAlg::from_dgla(&t);
        let trunc = TruncProfile::default();
        assert!(check_linfty(&l, &trunc).is_ok());
        let (h, f) = minimal_model(&l, &trunc).unwrap();
        assert!(h.is_minimal());
        assert_eq!(h.dim(), 2);
        assert_eq!(h.max_arity(), 3);
        assert!(check_linfty(&h, &trunc).is_ok());
        assert!(check_linfty_map(&f, &trunc).is_ok());
        assert!(f.is_quasi_iso(DegRange::new(-1, 6)).unwrap());
        assert_eq!(h.homology(DegRange::new(-1, 6)).unwrap(), l.homology(DegRange::new(-1, 6)).unwrap());
    }
}
