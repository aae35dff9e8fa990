mod common;

use common::*;
use fnspace::graded::{Deg, DegRange, FreeLie, GradedSpace, Lin, TruncProfile};
use fnspace::linalg::{rat, ratio, Reliability, SparseMatrix};
use fnspace::mc::{gauge_act, mc_verify, twist, twist_direct, GaugeParam, MCElem, Scalars};
use fnspace::models::{function_space_model, pi_groups, sphere_lie};
use fnspace::structures::{FiniteCdga, Vector};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..3, c), r))
}

fn sign(a: Deg, b: Deg) -> i64 {
    if a.is_odd() && b.is_odd() { -1 } else { 1 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in small_matrix()) {
        let a = SparseMatrix::from_dense(&m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>());
        let r = a.rank();
        prop_assert_eq!(r, a.transpose().rank());
        let k = a.kernel_basis();
        prop_assert_eq!(r + k.len(), a.cols());
        for v in &k {
            prop_assert!(a.apply(v).is_empty());
        }
    }

    #[test]
    fn free_lie_is_graded_antisymmetric_and_jacobi(
        degs in prop::collection::vec(-3i32..4, 1..4),
        picks in prop::collection::vec(0usize..64, 3),
    ) {
        let space = GradedSpace::new(degs.iter().enumerate().map(|(i, &d)| (format!("a{i}"), Deg(d)))).unwrap();
        let lie = FreeLie::new(space, 4);
        let n = lie.dim();
        let (i, j, k) = (picks[0] % n, picks[1] % n, picks[2] % n);
        let (x, y, z) = (Lin::basis(i), Lin::basis(j), Lin::basis(k));
        let (dx, dy) = (lie.deg(i), lie.deg(j));
        let xy = lie.bracket(&x, &y);
        let yx = lie.bracket(&y, &x).scaled(&rat(sign(dx, dy)));
        prop_assert_eq!(xy, yx.neg());
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        let lhs = lie.bracket(&x, &lie.bracket(&y, &z));
        let mut rhs = lie.bracket(&lie.bracket(&x, &y), &z);
        rhs.add_scaled(&lie.bracket(&y, &lie.bracket(&x, &z)), &rat(sign(dx, dy)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rescaled_mc_elements_twist_alike(c in -6i64..7, d in 1i64..5) {
        let t = TruncProfile::new(4, -6, 4).unwrap();
        let xi = load("spheres.toml").mc("x.v").unwrap().scaled(&ratio(c, d));
        prop_assert!(mc_verify(&xi, &t).0);
        prop_assert_eq!(twist(&xi, &t).unwrap(), twist_direct(&xi, &t).unwrap());
        let h = twist(&xi, &t).unwrap().restrict(Scalars::Ideal).unwrap().homology(t.window()).unwrap();
        let base = load("spheres.toml").mc("x.v").unwrap().clone();
        let h1 = twist(&base, &t).unwrap().restrict(Scalars::Ideal).unwrap().homology(t.window()).unwrap();
        let h0 = twist(&MCElem::zero(xi.alg.clone(), xi.coeff.clone()), &t).unwrap().restrict(Scalars::Ideal).unwrap().homology(t.window()).unwrap();
        prop_assert_eq!(h, if c == 0 { h0 } else { h1 });
    }

    #[test]
    fn acyclic_mc_set_is_zero_and_x(c in -8i64..9, d in 1i64..5) {
        let t = TruncProfile::new(3, -3, 3).unwrap();
        let m = load("acyclic.toml");
        let xi = m.mc("x").unwrap().scaled(&ratio(c, d));
        let expected = c == 0 || c == d;
        prop_assert_eq!(mc_verify(&xi, &t).0, expected);
    }

    #[test]
    fn gauge_preserves_mc_and_homology(a in -5i64..6, b in 1i64..4, which in 0usize..3) {
        let t = TruncProfile::new(4, -4, 4).unwrap();
        let cd = load("cdga.toml");
        let interval = cd.finite("interval").unwrap().clone();
        let sl2 = load("lie.toml").linfty("sl2").unwrap().clone();
        let dz = interval.basis().index("dz").unwrap();
        let xi = MCElem::new(sl2.clone(), interval.clone(), vec![Vector::zero(), Vector::zero(), Vector::basis(dz)]).unwrap();
        let z = interval.basis().index("z").unwrap();
        let lam = GaugeParam::new(&sl2, &interval, &[(z, which, ratio(a, b))]).unwrap();
        let eta = gauge_act(&lam, &xi, &t).unwrap();
        prop_assert!(mc_verify(&eta, &t).0);
        let h = |m: &MCElem| twist(m, &t).unwrap().restrict(Scalars::Ideal).unwrap().homology(t.window()).unwrap();
        prop_assert_eq!(h(&xi), h(&eta));
    }

    #[test]
    fn tensor_products_of_spheres_are_cdgas(n in 1i32..5, m in 1i32..5, ua: bool, ub: bool) {
        let p = FiniteCdga::tensor(&FiniteCdga::sphere(n, ua), &FiniteCdga::sphere(m, ub));
        prop_assert!(p.check().is_ok());
        prop_assert!(cdga_axioms(&p).is_ok());
    }

    #[test]
    fn split_of_free_maps_into_based_maps_and_target(n in 1i32..4, yn in 2i32..5) {
        let t = TruncProfile::new(3, -6, 6).unwrap();
        let x = FiniteCdga::sphere(n, false);
        let y = sphere_lie(yn).unwrap();
        let zero = MCElem::zero(y.clone(), x.clone());
        let w = DegRange::new(0, 4);
        let free = function_space_model(&x, &y, &zero, false, &t).unwrap().homology(w).unwrap();
        let based = function_space_model(&x, &y, &zero, true, &t).unwrap().homology(w).unwrap();
        let target = fnspace::structures::connected_cover(&y).unwrap().0.homology(w).unwrap();
        for d in 0..=4 {
            if let (Some(f), Some(b), Some(c)) = (free.exact(d), based.exact(d), target.exact(d)) {
                prop_assert_eq!(f, b + c, "degree {}", d);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn enlarging_truncation_never_changes_exact_answers(yn in 2i32..5, w in 2usize..4, lo in -6i32..-3) {
        let small = TruncProfile::new(w, lo, 3).unwrap();
        let large = TruncProfile::new(w + 1, lo - 2, 5).unwrap();
        let x = load("spheres.toml").finite("S2xS2").unwrap().clone();
        let y = sphere_lie(yn).unwrap();
        let zero = MCElem::zero(y.clone(), x.clone());
        let a = pi_groups(&function_space_model(&x, &y, &zero, true, &small).unwrap(), 1, 5).unwrap();
        let b = pi_groups(&function_space_model(&x, &y, &zero, true, &large).unwrap(), 1, 5).unwrap();
        prop_assert!(a.pi.iter().any(|p| p.reliability == Reliability::Exact));
        for (p, q) in a.pi.iter().zip(&b.pi) {
            if p.reliability == Reliability::Exact {
                prop_assert_eq!(q.reliability, Reliability::Exact);
                prop_assert_eq!(p.dim, q.dim);
            }
        }
    }
}
