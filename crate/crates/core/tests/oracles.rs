mod common;

use common::*;
use fnspace::graded::{Deg, FreeLie, GradedSpace};
use fnspace::models::Object;

#[test]
fn oracle_accepts_the_corpus() {
    for f in corpus_files() {
        let m = fnspace::models::Model::parse(&std::fs::read_to_string(&f).unwrap()).unwrap();
        for (name, o) in &m.objects {
            axioms(o).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}

#[test]
fn oracle_rejects_a_broken_jacobi() {
    let m = load("lie.toml");
    let Object::Linfty(l) = m.object("sl2").unwrap() else { panic!() };
    let mut t = l.to_dgla().unwrap();
    t.set_bracket(2, 0, fnspace::structures::Vector::basis(0).scaled(&fnspace::linalg::rat(-2)));
    assert!(dgla_axioms(&t).is_err());
}

#[test]
fn witt_formula_small_values() {
    assert_eq!((1..=6).map(|n| witt_even(2, n)).collect::<Vec<_>>(), vec![2, 1, 2, 3, 6, 9]);
    assert_eq!((1..=4).map(|n| witt_odd(1, n)).collect::<Vec<_>>(), vec![1, 1, 0, 0]);
    assert_eq!(witt_odd(2, 2), 3);
}

#[test]
fn free_lie_matches_witt_with_mixed_even_degrees() {
    let sp = GradedSpace::new([("a", Deg(0)), ("b", Deg(2)), ("c", Deg(4))]).unwrap();
    let lie = FreeLie::new(sp, 5);
    for n in 1..=5 {
        let got = (0..lie.dim()).filter(|&i| lie.weight(i) == n).count();
        assert_eq!(got, witt_even(3, n), "weight {n}");
    }
}

#[test]
fn flip_term_round_trips() {
    assert_eq!(flip_term("a - 2 b", 1).unwrap(), "a + 2 b");
    assert_eq!(flip_term("-1/2 sv^2", 0).unwrap(), "1/2 sv^2");
    assert_eq!(flip_term("x", 1), None);
}
