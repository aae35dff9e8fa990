use super::fnspace::{cross_check, function_space_model, pi_groups};
use super::report::Report;
use super::spec::{Grading, MapObject, Model, Object};
use crate::cohomology::{ce_coefficients, ce_complex, cohomology_table, harrison_complex, harrison_lie_of, harrison_mc};
use crate::graded::{Deg, GradedSpace, TruncProfile};
use crate::mc::{canonical_mc, mc_verify, twist, MCElem, Scalars};
use crate::structures::{
    check_linfty, format_vector, minimal_model, DglaTable, FiniteCdga, LinftyAlg,
};
use crate::{Error, Result};

/// Settings shared by all commands.
#[derive(Clone, Debug)]
pub struct Options {
    pub trunc: TruncProfile,
    pub based: bool,
    pub grading: Grading,
    pub n_max: u32,
}

impl Options {
    pub fn for_model(model: &Model) -> Options {
        Options { trunc: model.trunc, based: false, grading: Grading::Homological, n_max: 6 }
    }
}

fn structure_lines(l: &LinftyAlg) -> Vec<String> {
    let names = l.space().names();
    let mut out: Vec<String> = names.iter().enumerate().map(|(i, n)| format!("{n} : {}", l.space().deg(i))).collect();
    for k in 0..l.dim() {
        if !l.q_of(k).is_zero() {
            out.push(format!("Q({}) = {}", l.gens().name(k), l.format_q(k)));
        }
    }
    out
}

/// `(A, d)` as a chain complex, via the zero bracket.
fn cdga_complex(a: &FiniteCdga) -> LinftyAlg {
    let mut t = DglaTable::new(a.basis().clone());
    for i in 0..a.dim() {
        t.diff[i] = a.diff_of(i).clone();
    }
    LinftyAlg::from_dgla(&t)
}

fn mc_or_zero(model: &Model, name: Option<&str>, y: &LinftyAlg, x: &FiniteCdga) -> Result<MCElem> {
    match name {
        None => Ok(MCElem::zero(y.clone(), x.clone())),
        Some(n) => {
            let xi = model.mc(n)?;
            if &xi.alg != y || &xi.coeff != x {
                return Err(Error::Unsupported(format!("mc element `{n}` does not live in MC(Y, X)")));
            }
            Ok(xi.clone())
        }
    }
}

/// Validate every object, map and MC element of the model.
pub fn check(model: &Model, opts: &Options) -> Result<Report> {
    let mut r = Report::new("validation");
    for (name, o) in &model.objects {
        let (what, res) = match o {
            Object::Linfty(l) => ("(m+d)² = 0", check_linfty(l, &opts.trunc)),
            Object::FreeCdga(c) => ("d² = 0, Leibniz", c.check(&opts.trunc)),
            Object::FiniteCdga(a) => ("cdga axioms", a.check()),
        };
        match res {
            Ok(()) => r.add_verdict(name, true, what),
            Err(e) if e.is_violation() => r.add_verdict(name, false, e.to_string()),
            Err(e) => return Err(e),
        }
    }
    for (name, m) in &model.maps {
        let res = match m {
            MapObject::Cdga(f) => f.check(),
            MapObject::FreeCdga(f) => f.check(),
            MapObject::Linfty(f) => crate::structures::check_linfty_map(f, &opts.trunc),
        };
        r.add_verdict(name, res.is_ok(), res.err().map_or("morphism".to_string(), |e| e.to_string()));
    }
    for (name, xi) in &model.mcs {
        let (ok, _) = mc_verify(xi, &opts.trunc);
        r.add_verdict(name, ok, if ok { "Maurer-Cartan" } else { "curvature is nonzero" });
    }
    Ok(r)
}

/// Homology of an object's linear part, or of a cdga's differential.
pub fn homology(model: &Model, object: &str, opts: &Options) -> Result<Report> {
    let w = opts.trunc.window();
    let mut r = Report::new(format!("homology of `{object}`"));
    let table = match model.object(object)? {
        Object::Linfty(l) => l.homology(w)?,
        Object::FiniteCdga(a) => cdga_complex(a).homology(w)?,
        Object::FreeCdga(c) => {
            let weight = opts.trunc.weight_max;
            let (a, _) = FiniteCdga::truncated_free(c, weight);
            let complete = c.truncation_complete(weight);
            cdga_complex(&a).with_complete(complete).homology(w)?
        }
    };
    r.add_betti("homology", &table, opts.grading);
    Ok(r)
}

/// `H_CE(V, U)`; trivial coefficients when `coeff` is absent, the adjoint
/// module twisted by the canonical element when `coeff` names `V` itself.
pub fn ce(model: &Model, object: &str, coeff: Option<&str>, opts: &Options) -> Result<Report> {
    let v = model.linfty(object)?;
    let weight = opts.trunc.weight_max;
    let (u, xi) = match coeff {
        None => {
            let u = LinftyAlg::abelian(GradedSpace::new([("1", Deg(0))])?);
            let xi = MCElem::zero(u.clone(), ce_coefficients(v, weight).0);
            (u, xi)
        }
        Some(n) if n == object => (v.clone(), canonical_mc(v, weight)),
        Some(n) => {
            let u = model.linfty(n)?.clone();
            let xi = MCElem::zero(u.clone(), ce_coefficients(v, weight).0);
            (u, xi)
        }
    };
    let c = ce_complex(v, &u, &xi, &opts.trunc, false)?;
    let mut r = Report::new(format!("Chevalley-Eilenberg cohomology of `{object}`"));
    r.add_betti("H_CE", &cohomology_table(&c)?, opts.grading);
    Ok(r)
}

/// Homology of the Harrison Lie algebra of a cdga, or of the Harrison
/// complex twisted by an algebra map.
pub fn harrison(model: &Model, object: &str, map: Option<&str>, opts: &Options) -> Result<Report> {
    let a = model.finite(object)?;
    let h = harrison_lie_of(a, opts.trunc.weight_max)?;
    let mut r = Report::new(format!("Harrison homology of `{object}`"));
    match map {
        None => {
            r.structure = structure_lines(&h.alg);
            r.add_betti("L(A)", &h.alg.homology(opts.trunc.window())?, opts.grading);
        }
        Some(m) => {
            let MapObject::Cdga(f) = model.map(m)? else {
                return Err(Error::Unsupported(format!("map `{m}` is not a map of finite cdgas")));
            };
            let xi = harrison_mc(&h, f)?;
            let c = harrison_complex(&h, &xi, &opts.trunc, false)?;
            r.add_betti("Harrison", &cohomology_table(&c)?, opts.grading);
        }
    }
    Ok(r)
}

pub fn minmodel(model: &Model, object: &str, opts: &Options) -> Result<Report> {
    let l = model.linfty(object)?;
    let (m, _) = minimal_model(l, &opts.trunc)?;
    let mut r = Report::new(format!("minimal model of `{object}`"));
    r.structure = structure_lines(&m);
    r.add_betti("homology", &m.homology(opts.trunc.window())?, opts.grading);
    Ok(r)
}

pub fn twist_cmd(model: &Model, mc: &str, opts: &Options) -> Result<Report> {
    let xi = model.mc(mc)?;
    let tw = twist(xi, &opts.trunc)?;
    let scalars = if opts.based { Scalars::Ideal } else { Scalars::Unital };
    let l = tw.restrict(scalars)?;
    let mut r = Report::new(format!("twist by `{mc}`"));
    r.structure = (0..xi.alg.dim()).map(|k| format!("Q^ξ({}) = {}", xi.alg.gens().name(k), tw.format_q(k))).collect();
    r.add_betti("twisted homology", &l.homology(opts.trunc.window())?, opts.grading);
    Ok(r)
}

pub fn mc_verify_cmd(model: &Model, names: &[String], opts: &Options) -> Result<Report> {
    let mut r = Report::new("Maurer-Cartan check");
    let all: Vec<String> = if names.is_empty() { model.mcs.keys().cloned().collect() } else { names.to_vec() };
    for n in &all {
        let xi = model.mc(n)?;
        let (ok, residual) = mc_verify(xi, &opts.trunc);
        let detail = if ok {
            "member".to_string()
        } else {
            let cn = xi.coeff.names();
            residual
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| format!("{}: {}", xi.alg.space().name(k), format_vector(v, &cn)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        r.add_verdict(n, ok, detail);
    }
    Ok(r)
}

fn fn_model(model: &Model, x: &str, y: &str, mc: Option<&str>, opts: &Options) -> Result<LinftyAlg> {
    let (ax, ly) = (model.finite(x)?, model.linfty(y)?);
    let xi = mc_or_zero(model, mc, ly, ax)?;
    function_space_model(ax, ly, &xi, opts.based, &opts.trunc)
}

pub fn mapmodel(model: &Model, x: &str, y: &str, mc: Option<&str>, opts: &Options) -> Result<Report> {
    let m = fn_model(model, x, y, mc, opts)?;
    let kind = if opts.based { "based" } else { "free" };
    let mut r = Report::new(format!("Lie model of the {kind} mapping space from `{x}` to `{y}`"));
    r.structure = structure_lines(&m);
    r.add_betti("homology", &m.homology(opts.trunc.window())?, opts.grading);
    Ok(r)
}

pub fn pi(model: &Model, x: &str, y: &str, mc: Option<&str>, opts: &Options) -> Result<Report> {
    let m = fn_model(model, x, y, mc, opts)?;
    let mut r = pi_groups(&m, 1, opts.n_max)?;
    let kind = if opts.based { "based" } else { "free" };
    r.title = format!("rational homotopy of the {kind} mapping space from `{x}` to `{y}`");
    Ok(r)
}

pub fn crosscheck(model: &Model, x: &str, y: &str, mc: Option<&str>, opts: &Options) -> Result<Report> {
    let (ax, ly) = (model.finite(x)?, model.linfty(y)?);
    let xi = mc_or_zero(model, mc, ly, ax)?;
    cross_check(ax, ly, &xi, &opts.trunc)
}
