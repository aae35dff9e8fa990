use super::report::{Agreement, CompareRow, PiRow, Report};
use super::spec::Grading;
use crate::cohomology::{ce_coefficients, harrison_complex, harrison_lie_of, harrison_mc};
use crate::graded::{DegRange, Poly, TruncProfile};
use crate::linalg::{rat, BettiTable, Reliability};
use crate::mc::{mc_verify, shift_complete, twist, MCElem, Scalars};
use crate::graded::{Deg, GradedSpace};
use crate::structures::{connected_cover, DglaTable, FiniteCdga, FiniteMap, FreeCdga, LinftyAlg, Vector};
use crate::{Error, Result};

/// Free Lie algebra on one generator of degree `n − 1`: the Quillen model of `Sⁿ`.
/// For even `n` it is spanned by `v` and `w = [v, v]`.
pub fn sphere_lie(n: i32) -> Result<LinftyAlg> {
    if n < 1 {
        return Err(Error::Degree(format!("sphere dimension must be positive, got {n}")));
    }
    let v = Deg(n - 1);
    if !v.is_odd() {
        return Ok(LinftyAlg::from_dgla(&DglaTable::new(GradedSpace::new([("v", v)])?)));
    }
    let mut t = DglaTable::new(GradedSpace::new([("v", v), ("w", Deg(2 * n - 2))])?);
    t.set_bracket(0, 0, Vector::basis(1));
    Ok(LinftyAlg::from_dgla(&t))
}

fn check_inputs(ax: &FiniteCdga, ly: &LinftyAlg) -> Result<()> {
    if ax.is_unital() {
        return Err(Error::Unsupported("pass the augmentation ideal A(X)₊ of the model of X".into()));
    }
    if let Some(d) = ax.basis().max_deg().filter(|d| d.0 > -1) {
        return Err(Error::Degree(format!(
            "model of X must sit in positive cohomological degrees, found {}",
            d.cohomological()
        )));
    }
    if let Some(d) = ly.space().min_deg().filter(|d| d.0 < 0) {
        return Err(Error::Degree(format!("Lie model of Y must be non-negatively graded, found {d}")));
    }
    Ok(())
}

fn check_xi(ax: &FiniteCdga, ly: &LinftyAlg, xi: &MCElem) -> Result<()> {
    if &xi.alg != ly || &xi.coeff != ax {
        return Err(Error::Unsupported("MC element must live in MC(L(Y), A(X)₊)".into()));
    }
    Ok(())
}

/// `[A(X) ⊗ L(Y)]^ξ⟨0⟩`, or `[A(X)₊ ⊗ L(Y)]^ξ⟨0⟩` when `based`.
/// `ax` is the augmentation ideal; the unit is adjoined for the free variant.
pub fn function_space_model(
    ax: &FiniteCdga,
    ly: &LinftyAlg,
    xi: &MCElem,
    based: bool,
    trunc: &TruncProfile,
) -> Result<LinftyAlg> {
    check_inputs(ax, ly)?;
    check_xi(ax, ly, xi)?;
    let tw = twist(xi, trunc)?;
    let scalars = if based { Scalars::Ideal } else { Scalars::Unital };
    let full = tw.restrict(scalars)?;
    Ok(connected_cover(&full)?.0)
}

/// `dim π_n ⊗ Q = dim H_{n−1}(model)` for `n_min ≤ n ≤ n_max`.
pub fn pi_groups(model: &LinftyAlg, n_min: u32, n_max: u32) -> Result<Report> {
    if n_min == 0 || n_max < n_min {
        return Err(Error::WindowTooSmall(format!("need 1 ≤ n_min ≤ n_max, got {n_min}..{n_max}")));
    }
    let (lo, hi) = (n_min as i32 - 1, n_max as i32 - 1);
    let h = model.homology(DegRange::new(lo, hi))?;
    let mut r = Report::new("rational homotopy groups");
    for n in n_min..=n_max {
        let d = n as i32 - 1;
        let e = h.entries.get(&d).ok_or_else(|| Error::WindowTooSmall(format!("degree {d} not computed")))?;
        r.pi.push(PiRow {
            n,
            homological_degree: d,
            dim: e.dim,
            reliability: e.reliability,
            note: (n == 1).then(|| "Malcev rank of π_1".to_string()),
        });
    }
    if r.pi.iter().any(|p| p.reliability != Reliability::Exact) {
        r.note("boundary rows depend on the truncation and are not certified");
    }
    Ok(r)
}

/// Membership of each named candidate in `MC(L(Y), A(X)₊)`.
pub fn pi0_verify(
    ax: &FiniteCdga,
    ly: &LinftyAlg,
    candidates: &[(String, Vec<Vector>)],
    trunc: &TruncProfile,
) -> Report {
    let mut r = Report::new("Maurer-Cartan membership");
    for (name, comps) in candidates {
        match MCElem::new(ly.clone(), ax.clone(), comps.clone()) {
            Err(e) => r.add_verdict(name, false, format!("rejected: {e}")),
            Ok(xi) => {
                let (ok, residual) = mc_verify(&xi, trunc);
                if ok {
                    r.add_verdict(name, true, "member");
                } else {
                    let names = ax.names();
                    let shown: Vec<String> = residual
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(k, v)| format!("{}: {}", ly.space().name(k), crate::structures::format_vector(v, &names)))
                        .collect();
                    r.add_verdict(name, false, format!("curvature {}", shown.join(", ")));
                }
            }
        }
    }
    r
}

/// The representing cdga `C_CE(model)`.
pub fn sullivan_model(model: &LinftyAlg) -> Result<FreeCdga> {
    if let Some(d) = model.space().min_deg().filter(|d| d.0 < 0) {
        return Err(Error::Degree(format!("model must be non-negatively graded, found {d}")));
    }
    let c = model.ce_of();
    c.check(&TruncProfile::default())?;
    Ok(c)
}

/// Betti numbers of `(A(X)₊ ⊗ L(Y))^ξ` over the window.
pub fn twisted_route(ax: &FiniteCdga, ly: &LinftyAlg, xi: &MCElem, trunc: &TruncProfile) -> Result<BettiTable> {
    check_inputs(ax, ly)?;
    check_xi(ax, ly, xi)?;
    let alg = twist(xi, trunc)?.restrict(Scalars::Ideal)?;
    alg.homology(trunc.window())
}

/// Betti numbers of `(A(X)₊ ⊗ L(C(L(Y))₊))^ξ'`, where `ξ'` is the map
/// `C(L(Y))₊ → A(X)₊` classified by `ξ`.
pub fn harrison_route(ax: &FiniteCdga, ly: &LinftyAlg, xi: &MCElem, trunc: &TruncProfile) -> Result<BettiTable> {
    check_inputs(ax, ly)?;
    check_xi(ax, ly, xi)?;
    let nil = ax
        .nilpotency_index()
        .ok_or_else(|| Error::Unsupported("model of X must be nilpotent".into()))?;
    let word_weight = (nil - 1).max(2);
    let (ay, words, _) = ce_coefficients(ly, word_weight);
    let images: Vec<Vector> = words
        .iter()
        .map(|w| {
            let mut p = Poly::zero();
            p.add_term(w.clone(), rat(1));
            ax.eval(&p, &xi.comps)
        })
        .collect();
    let f = FiniteMap::new(ay.clone(), ax.clone(), images)?;
    f.check()?;
    let h = harrison_lie_of(&ay, trunc.weight_max)?;
    let xi2 = harrison_mc(&h, &f)?;
    let tc = harrison_complex(&h, &xi2, trunc, true)?;
    // words cut from C(L(Y))₊ only feed Lie degrees above this bound
    let cmax = ly.sdegs().iter().map(|d| d.0).max().unwrap_or(-1);
    let exact_lie = DegRange::at_most(-(word_weight as i32 + 1) * cmax - 2);
    let ax_degs: Vec<i32> = ax.basis().degs().iter().map(|d| d.0).collect();
    let complete = tc.algebra.complete().intersect(&shift_complete(exact_lie, ax_degs.into_iter()));
    tc.algebra.with_complete(complete).homology(trunc.window())
}

fn compare(left: &BettiTable, right: &BettiTable, window: DegRange) -> Vec<CompareRow> {
    let (lo, hi) = (window.lo.unwrap_or(0), window.hi.unwrap_or(0));
    (lo..=hi)
        .map(|n| {
            let (l, r) = (left.exact(n), right.exact(n));
            let verdict = match (l, r) {
                (Some(a), Some(b)) if a == b => Agreement::Equal,
                (Some(_), Some(_)) => Agreement::Unequal,
                _ => Agreement::Unchecked,
            };
            CompareRow { degree: n, left: left.get(n), right: right.get(n), verdict }
        })
        .collect()
}

/// Compare the twisted tensor route under `xi_twisted` with the Harrison
/// route under `xi_harrison`, degree by degree.
pub fn cross_check_routes(
    ax: &FiniteCdga,
    ly: &LinftyAlg,
    xi_twisted: &MCElem,
    xi_harrison: &MCElem,
    trunc: &TruncProfile,
) -> Result<Report> {
    let window = trunc.window();
    let left = twisted_route(ax, ly, xi_twisted, trunc)?;
    let right = harrison_route(ax, ly, xi_harrison, trunc)?;
    let mut r = Report::new("twisted tensor route vs Harrison route");
    r.add_betti("(A(X)₊ ⊗ L(Y))^ξ", &left, Grading::Homological);
    r.add_betti("(A(X)₊ ⊗ L(C(L(Y))₊))^ξ", &right, Grading::Homological);
    r.comparison = compare(&left, &right, window);
    if r.comparison.iter().all(|c| c.verdict == Agreement::Unchecked) {
        r.note("no degree is exact in both routes; enlarge the truncation");
    }
    Ok(r)
}

pub fn cross_check(ax: &FiniteCdga, ly: &LinftyAlg, xi: &MCElem, trunc: &TruncProfile) -> Result<Report> {
    cross_check_routes(ax, ly, xi, xi, trunc)
}

/// Number of degrees compared exactly and whether all of them agree.
pub fn agreement(r: &Report) -> (usize, bool) {
    let checked = r.comparison.iter().filter(|c| c.verdict != Agreement::Unchecked).count();
    (checked, r.comparison.iter().all(|c| c.verdict != Agreement::Unequal))
}

