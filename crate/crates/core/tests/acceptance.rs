//! Acceptance criteria, one line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use fnspace::cohomology::{ce_classical, ce_coefficients, ce_of, harrison_lie_of, LieTable, ModuleTable};
use fnspace::graded::{Deg, DegRange, FreeLie, GradedSpace, TruncProfile};
use fnspace::linalg::{homology_dims, rat, ratio, Rat};
use fnspace::mc::{canonical_mc, gauge_act, mc_verify, twist, twist_direct, ALinfty, GaugeParam, MCElem, Scalars};
use fnspace::models::{agreement, construct_object, cross_check, function_space_model, pi_groups, sphere_lie, ModelSpec};
use fnspace::structures::{minimal_model, FiniteCdga, LinftyAlg, Vector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn acyclic_mc_set() -> Outcome {
    let m = load("acyclic.toml");
    let l = m.linfty("acyclic").unwrap();
    let k = m.finite("k").unwrap();
    let t = TruncProfile::new(4, -6, 6).unwrap();
    let at = |c: Rat| {
        let xi = MCElem::new(l.clone(), k.clone(), vec![Vector::term(0, c), Vector::zero()]).unwrap();
        mc_verify(&xi, &t).0
    };
    let accepted: Vec<bool> = [rat(0), rat(1)].into_iter().map(at).collect();
    let rejected: Vec<bool> = [ratio(1, 2), rat(2), rat(-1)].into_iter().map(at).collect();
    ensure(accepted == [true, true], format!("accepts {{0, x}}: {accepted:?}"))?;
    ensure(rejected.iter().all(|b| !b), format!("rejects {{x/2, 2x, -x}}: {rejected:?}"))?;
    let (min, _) = minimal_model(l, &t).map_err(|e| e.to_string())?;
    ensure(min.dim() == 0, format!("minimal model has dimension {}", min.dim()))?;
    Ok("MC = {0, x}; minimal model = 0".into())
}

fn one_letter_harrison() -> Outcome {
    // the one-dimensional algebra with zero product on x, |x| = 1 cohomologically
    let a = FiniteCdga::new(GradedSpace::new([("x", Deg::from_cohomological(1))]).unwrap());
    let h = harrison_lie_of(&a, 4).map_err(|e| e.to_string())?;
    let c = ce_of(&h.alg);
    let n = c.gens.len();
    let degs: Vec<i32> = c.degs().iter().map(|d| d.cohomological()).collect();
    let shape = format!("{n} generator(s) in cohomological degrees {degs:?}");
    ensure(n == 2, format!("expected 2 generators, got {shape}"))?;
    ensure(degs == [1, 1], format!("expected degrees [1, 1], got {shape}"))?;
    let sq = {
        let mut p = fnspace::graded::Poly::zero();
        if let Some((w, s)) = fnspace::graded::sym_normalize(&[0, 0], &c.degs()) {
            p.add_term(w, rat(s as i64));
        }
        p
    };
    let d1 = &c.d[1];
    let proportional = !sq.is_zero() && d1.len() == 1 && d1.keys().next() == sq.keys().next();
    ensure(proportional, format!("d(generator 2) = {d1:?} is not a nonzero multiple of generator 1 squared"))?;
    Ok(shape)
}

fn validation_suite() -> Outcome {
    let t = TruncProfile::new(4, -6, 6).unwrap();
    let mut objects = 0;
    let (mut invalid, mut caught, mut valid, mut accepted) = (0, 0, 0, 0);
    for f in corpus_files() {
        let spec = ModelSpec::from_toml(&std::fs::read_to_string(&f).unwrap()).map_err(|e| e.to_string())?;
        for o in &spec.objects {
            let obj = construct_object(o).map_err(|e| e.to_string())?;
            obj.validate(&t).map_err(|e| format!("{}: {e}", o.name))?;
            objects += 1;
            for (label, mutant) in single_sign_mutations(o) {
                let Ok(mobj) = construct_object(&mutant) else { continue };
                let verdict = mobj.validate(&t);
                if axioms(&mobj).is_err() {
                    invalid += 1;
                    if verdict.is_err() {
                        caught += 1;
                    } else {
                        return Err(format!("mutation {label} not detected"));
                    }
                } else {
                    valid += 1;
                    if verdict.is_ok() {
                        accepted += 1;
                    } else {
                        return Err(format!("mutation {label} is valid but was rejected"));
                    }
                }
            }
        }
    }
    ensure(objects >= 12, format!("only {objects} corpus objects"))?;
    ensure(invalid >= 20, format!("only {invalid} invalid mutations"))?;
    Ok(format!(
        "{objects} objects valid; {caught}/{invalid} invalid mutations caught; {accepted}/{valid} sign-symmetric mutations accepted"
    ))
}

fn harrison_of_ce_instance(v: &LinftyAlg, word_weight: usize, lie_weight: usize, window: DegRange) -> Result<usize, String> {
    let (a, _, _) = ce_coefficients(v, word_weight);
    let h = harrison_lie_of(&a, lie_weight).map_err(|e| e.to_string())?;
    let cmax = v.sdegs().iter().map(|d| d.0).max().unwrap();
    let cut = DegRange::at_most(-(word_weight as i32 + 1) * cmax - 2);
    let alg = h.alg.clone().with_complete(h.alg.complete().intersect(&cut));
    let lhs = alg.homology(window).map_err(|e| e.to_string())?;
    let rhs = v.homology(window).map_err(|e| e.to_string())?;
    let mut compared = 0;
    for (&n, e) in &rhs.entries {
        if let Some(d) = lhs.exact(n) {
            ensure(d == e.dim, format!("degree {n}: Harrison {d}, V {}", e.dim))?;
            compared += 1;
        }
    }
    for n in v.space().dims().keys() {
        ensure(lhs.is_exact(*n), format!("degree {n} of V not certified"))?;
    }
    Ok(compared)
}

fn harrison_recovers_v() -> Outcome {
    let window = DegRange::new(-1, 3);
    let abelian = LinftyAlg::abelian(GradedSpace::new([("v", Deg(1))]).unwrap());
    let s2 = sphere_lie(2).unwrap();
    let m = load("lie.toml");
    let contractible = m.linfty("contractible").unwrap().clone();
    let mut degrees = 0;
    for (name, v, ww, lw) in [("abelian", &abelian, 3, 4), ("minimal pair", &s2, 2, 3), ("contractible", &contractible, 2, 3)] {
        degrees += harrison_of_ce_instance(v, ww, lw, window).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(format!("3 instances, {degrees} degrees compared"))
}

fn twist_instances() -> Vec<(String, MCElem)> {
    let sp = load("spheres.toml");
    let lie = load("lie.toml");
    let ac = load("acyclic.toml");
    let cd = load("cdga.toml");
    let interval = cd.finite("interval").unwrap();
    let sl2 = lie.linfty("sl2").unwrap();
    let dz_h = MCElem::new(
        sl2.clone(),
        interval.clone(),
        vec![Vector::zero(), Vector::zero(), Vector::basis(interval.basis().index("dz").unwrap())],
    )
    .unwrap();
    vec![
        ("acyclic, x".into(), ac.mc("x").unwrap().clone()),
        ("L(S2) over S2xS2".into(), sp.mc("x.v").unwrap().clone()),
        ("quartic, canonical".into(), canonical_mc(lie.linfty("quartic").unwrap(), 4)),
        ("mixed, canonical".into(), canonical_mc(lie.linfty("mixed").unwrap(), 3)),
        ("L(S2), canonical".into(), canonical_mc(sp.linfty("L(S2)").unwrap(), 4)),
        ("sl2 over interval".into(), dz_h),
    ]
}

fn twisting_consistency() -> Outcome {
    let t = TruncProfile::new(4, -6, 6).unwrap();
    let inst = twist_instances();
    for (name, xi) in &inst {
        ensure(mc_verify(xi, &t).0, format!("{name}: not MC"))?;
        let a = twist(xi, &t).map_err(|e| e.to_string())?;
        let b = twist_direct(xi, &t).map_err(|e| e.to_string())?;
        ensure(a == b, format!("{name}: twist and direct substitution differ"))?;
        let zero = MCElem::zero(xi.alg.clone(), xi.coeff.clone());
        let z = twist(&zero, &t).map_err(|e| e.to_string())?;
        ensure(z == ALinfty::extension(&xi.alg, &xi.coeff), format!("{name}: zero twist is not the extension"))?;
    }
    Ok(format!("{} instances agree term by term", inst.len()))
}

fn gauge_invariance() -> Outcome {
    let t = TruncProfile::new(4, -6, 6).unwrap();
    let inst = twist_instances();
    let mut pairs = 0;
    let mut moved = 0;
    for (name, xi) in &inst {
        if xi.alg.to_dgla().is_none() {
            continue;
        }
        for a in xi.coeff.ideal_indices() {
            for k in 0..xi.alg.dim() {
                if xi.coeff.deg(a) + xi.alg.space().deg(k) != Deg(0) {
                    continue;
                }
                let lam = GaugeParam::new(&xi.alg, &xi.coeff, &[(a, k, ratio(3, 2))]).map_err(|e| e.to_string())?;
                let eta = gauge_act(&lam, xi, &t).map_err(|e| e.to_string())?;
                ensure(mc_verify(&eta, &t).0, format!("{name}: gauge image is not MC"))?;
                let w = t.window();
                let b1 = twist(xi, &t).unwrap().restrict(Scalars::Ideal).unwrap().homology(w).unwrap();
                let b2 = twist(&eta, &t).unwrap().restrict(Scalars::Ideal).unwrap().homology(w).unwrap();
                ensure(b1 == b2, format!("{name}: Betti tables differ after gauge"))?;
                pairs += 1;
                moved += usize::from(&eta != xi);
            }
        }
    }
    ensure(pairs >= 5, format!("only {pairs} gauge pairs"))?;
    Ok(format!("{pairs} pairs ({moved} with ξ moved), Betti tables equal"))
}

fn ce_harrison_routes() -> Outcome {
    let t = TruncProfile::new(3, -4, 2).unwrap();
    let mut lines = Vec::new();
    for (n, yn) in [(2, 2), (2, 3), (3, 2), (1, 3)] {
        let (x, y) = (FiniteCdga::sphere(n, false), sphere_lie(yn).unwrap());
        let xi = MCElem::zero(y.clone(), x.clone());
        let r = cross_check(&x, &y, &xi, &t).map_err(|e| e.to_string())?;
        let (checked, ok) = agreement(&r);
        ensure(ok, format!("S^{n} -> S^{yn}: unequal\n{r}"))?;
        ensure(checked > 0, format!("S^{n} -> S^{yn}: nothing compared"))?;
        lines.push(format!("S{n}->S{yn}: {checked} degrees"));
    }
    Ok(lines.join(", "))
}

fn pis(model: &LinftyAlg, n_max: u32) -> Result<Vec<usize>, String> {
    let r = pi_groups(model, 1, n_max).map_err(|e| e.to_string())?;
    ensure(r.pi.iter().all(|p| p.reliability == fnspace::linalg::Reliability::Exact), "uncertified degrees")?;
    Ok(r.pi.iter().map(|p| p.dim).collect())
}

fn loop_spaces() -> Outcome {
    let t = TruncProfile::new(3, -6, 6).unwrap();
    let s1 = FiniteCdga::sphere(1, false);
    let l3 = sphere_lie(3).unwrap();
    let free = function_space_model(&s1, &l3, &MCElem::zero(l3.clone(), s1.clone()), false, &t).map_err(|e| e.to_string())?;
    let p = pis(&free, 6)?;
    ensure(p[1..] == [1, 1, 0, 0, 0], format!("free loops on S3: π_2..π_6 = {:?}", &p[1..]))?;
    let l2 = sphere_lie(2).unwrap();
    let based = function_space_model(&s1, &l2, &MCElem::zero(l2.clone(), s1.clone()), true, &t).map_err(|e| e.to_string())?;
    let q = pis(&based, 6)?;
    ensure(q == [1, 1, 0, 0, 0, 0], format!("based loops on S2: π_1..π_6 = {q:?}"))?;
    Ok(format!("LS3 π_1..6 = {p:?}; ΩS2 π_1..6 = {q:?}"))
}

fn based_maps_s2_s3() -> Outcome {
    let t = TruncProfile::new(3, -6, 6).unwrap();
    let s2 = FiniteCdga::sphere(2, false);
    let l3 = sphere_lie(3).unwrap();
    let m = function_space_model(&s2, &l3, &MCElem::zero(l3.clone(), s2.clone()), true, &t).map_err(|e| e.to_string())?;
    let p = pis(&m, 4)?;
    ensure(p[0] == 1 && p[2] == 1, format!("π_1..π_4 = {p:?}; expected dim π_1 = dim π_3 = 1"))?;
    Ok(format!("π_1..π_4 = {p:?}"))
}

fn classical_oracles() -> Outcome {
    let betti = |g: &LieTable| -> Result<Vec<usize>, String> {
        let c = ce_classical(g, &ModuleTable::trivial(g, 1), g.dim()).map_err(|e| e.to_string())?;
        let h = homology_dims(&c).map_err(|e| e.to_string())?;
        Ok((0..=g.dim() as i32).map(|p| h.exact(-p).unwrap_or(usize::MAX)).collect())
    };
    let h3 = betti(&LieTable::heisenberg())?;
    ensure(h3 == [1, 2, 2, 1], format!("h3: {h3:?}"))?;
    let aff = betti(&LieTable::affine_line())?;
    ensure(aff == [1, 1, 0], format!("affine line: {aff:?}"))?;
    let mut checked = 0;
    for k in 1..=3usize {
        for parity in [0, 1] {
            let sp = GradedSpace::new((0..k).map(|i| (format!("a{i}"), Deg(2 * i as i32 + parity)))).unwrap();
            let lie = FreeLie::new(sp, 5);
            for n in 1..=5 {
                let got = (0..lie.dim()).filter(|&i| lie.weight(i) == n).count();
                let want = if parity == 0 { witt_even(k, n) } else { witt_odd(k, n) };
                ensure(got == want, format!("{k} letters of parity {parity}, weight {n}: {got} vs {want}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("h3 {h3:?}, affine {aff:?}, {checked} Witt dimensions"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("acyclic dgla: MC set and minimal model", 1, acyclic_mc_set),
        ("one-letter Harrison algebra: two generators in degree 1", 1, one_letter_harrison),
        ("structure validation and sign mutations", 30, validation_suite),
        ("Harrison of C(V)_+ recovers H(V)", 30, harrison_recovers_v),
        ("twist agrees with direct substitution", 30, twisting_consistency),
        ("gauge invariance of twisted homology", 30, gauge_invariance),
        ("twisted tensor route equals Harrison route", 60, ce_harrison_routes),
        ("loop spaces of spheres", 5, loop_spaces),
        ("based maps S2 -> S3", 5, based_maps_s2_s3),
        ("classical oracles and Witt dimensions", 10, classical_oracles),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let res = match res {
            Ok(d) if took > Duration::from_secs(*limit) => Err(format!("{d}; exceeded {limit} s")),
            r => r,
        };
        let (tag, detail) = match &res {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        println!("criterion {:>2} {tag} [{:.2}s] {name}: {detail}", i + 1, took.as_secs_f64());
        failed += usize::from(res.is_err());
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
