mod common;

use common::*;
use fnspace::mc::mc_verify;
use fnspace::models::{Model, ModelSpec, Object};

#[test]
fn corpus_round_trips() {
    for f in corpus_files() {
        let src = std::fs::read_to_string(&f).unwrap();
        let spec = ModelSpec::from_toml(&src).unwrap();
        let again = ModelSpec::from_toml(&spec.to_toml()).unwrap();
        assert_eq!(spec, again, "{}", f.display());
        let a = Model::build(spec).unwrap();
        let b = Model::build(again).unwrap();
        assert_eq!(a.objects, b.objects);
    }
}

#[test]
fn corpus_is_large_enough_and_valid() {
    let mut n = 0;
    for f in corpus_files() {
        let m = Model::parse(&std::fs::read_to_string(&f).unwrap()).unwrap();
        n += m.objects.len();
    }
    assert!(n >= 12, "{n} objects");
}

#[test]
fn declared_mc_elements() {
    let m = load("acyclic.toml");
    let verdicts: Vec<(String, bool)> =
        m.mcs.iter().map(|(k, xi)| (k.clone(), mc_verify(xi, &m.trunc).0)).collect();
    assert_eq!(
        verdicts,
        vec![("half-x".into(), false), ("x".into(), true), ("zero".into(), true)]
    );
    assert!(mc_verify(load("spheres.toml").mc("x.v").unwrap(), &m.trunc).0);
}

#[test]
fn cohomological_declarations_are_normalized() {
    let m = load("cdga.toml");
    let Object::FreeCdga(c) = m.object("filt").unwrap() else { panic!() };
    assert!(c.degs().iter().all(|d| d.cohomological() == 1));
    // x has odd degree, so x² = 0 and d(y) vanishes
    assert!(c.d[1].is_zero());
    let a = m.finite("CP2").unwrap();
    assert_eq!(a.deg(1).cohomological(), 4);
}

#[test]
fn parse_errors_carry_locations() {
    let cases = [
        ("[[object]]\nname = \"a\"\nkind = \"dgla\"\ngenerators = [\"x\"]\n", "generators[0]"),
        ("[[object]]\nname = \"a\"\nkind = \"dgla\"\ngenerators = [\"x:0\"]\ndifferential = { y = \"x\" }\n", "differential.y"),
        ("[[object]]\nname = \"a\"\nkind = \"dgla\"\ngenerators = [\"x:0\"]\nbracket = { \"[x,x]\" = \"2 q\" }\n", "bracket.[x,x]"),
        ("[[object]]\nname = \"a\"\nkind = \"wrong\"\n", "byte"),
        ("[[object]]\nname = \"a\"\nkind = \"sphere\"\n", "needs `n`"),
        ("[[object]]\nname = \"a\"\nkind = \"dgla\"\ngenerators = [\"x:0\", \"x:1\"]\n", "duplicate"),
        ("[[mc]]\nname = \"m\"\nalgebra = \"nope\"\ncoeff = \"k\"\n", "nope"),
    ];
    for (src, needle) in cases {
        let e = Model::parse(src).unwrap_err();
        assert_eq!(e.exit_code(), 2, "{src}");
        assert!(e.to_string().contains(needle), "{e} lacks {needle}");
    }
}

#[test]
fn violations_surface_with_a_witness() {
    let src = "[[object]]\nname = \"bad\"\nkind = \"cdga-table\"\ngenerators = [\"a:-1\", \"b:-2\"]\ndifferential = { a = \"b\" }\nproduct = { \"a*b\" = \"b\" }\n";
    let e = Model::parse(src).unwrap_err();
    assert_eq!(e.exit_code(), 1);
    assert!(e.to_string().contains("bad"), "{e}");
}
