use homhopf_core::fixtures::*;
use homhopf_core::foundation::{frac, int, LinComb, LinearOperator};
use homhopf_core::hom_core::*;
use homhopf_core::Error;
use proptest::prelude::*;

fn e(i: usize) -> LinComb<usize> {
    LinComb::basis(i)
}

#[test]
fn twist_of_dual_numbers_by_identity_is_associative() {
    let a = twist_algebra(&dual_numbers(), &LinearOperator::identity(2)).unwrap();
    assert!(check_hom_algebra(&a).passed());
    assert_eq!(a, dual_numbers());
}

#[test]
fn twisted_upper_triangular_passes_brute_force() {
    let a = upper_triangular_twisted();
    let r = check_hom_algebra(&a);
    assert!(r.passed(), "{:?}", r.failed_ids());
    assert_eq!(r.item("hom-assoc").unwrap().checked, 27);
}

#[test]
fn non_multiplicative_map_is_rejected() {
    let t = LinearOperator::new(2, vec![e(0).plus(&e(1)), e(1)]).unwrap();
    assert_eq!(twist_algebra(&pointwise_k2(), &t), Err(Error::NotEndomorphism));
    assert_eq!(twist_algebra(&upper_triangular_twisted(), &diag_conjugation()), Err(Error::NotAssociative));
}

#[test]
fn perturbed_mult_entry_gives_witness_triple() {
    let mut a = upper_triangular_twisted();
    let k = 0; // E11 • E11
    let old = a.mult[k].clone().unwrap();
    a.mult[k] = Some(old.plus(&e(1)));
    let r = check_hom_algebra(&a);
    let it = r.item("hom-assoc").unwrap();
    assert!(it.failures > 0);
    assert_eq!(it.violations[0].witness.len(), 3);
    // E11•(E11•E11) = E11 while (E11•E11)•E11 = E11 + E12
    assert_eq!(it.violations[0].witness, vec![0, 0, 0]);
    assert_eq!(it.violations[0].lhs, vec![(vec![0], int(1))]);
    assert_eq!(it.violations[0].rhs, vec![(vec![0], int(1)), (vec![1], int(1))]);
}

#[test]
fn kz4_twist_passes_full_suite() {
    let h = kz4_twisted();
    let r = check_hopf_suite(&h);
    assert!(r.passed(), "{:?}", r.failed_ids());
    for i in 1..=9 {
        assert!(r.item_passed(&format!("bialg-{i}")));
    }
}

#[test]
fn identity_twist_returns_input() {
    let h = cyclic_group_algebra(4);
    let id = LinearOperator::identity(4);
    assert_eq!(hopf_twist(&h, &id, &id).unwrap(), h);
}

#[test]
fn sign_character_is_not_a_bialgebra_map() {
    let h = cyclic_group_algebra(4);
    let sign = LinearOperator::from_fn(4, |i| e(i).scaled(&int(if i % 2 == 0 { 1 } else { -1 }))).unwrap();
    assert_eq!(hopf_twist(&h, &sign, &sign), Err(Error::NotBialgebraMorphism));
    let swap01 = LinearOperator::new(4, vec![e(1), e(0), e(2), e(3)]).unwrap();
    assert_eq!(hopf_twist(&h, &cyclic_inversion(4), &swap01), Err(Error::NotCommutingPair));
}

#[test]
fn op_and_cop_of_commutative_fixture_are_unchanged() {
    let h = kz4_twisted();
    let (op, cop) = op_cop_variants(&h).unwrap();
    assert_eq!(op, h);
    assert_eq!(cop, h);
}

#[test]
fn op_and_cop_of_sweedler_pass() {
    let h = sweedler();
    assert!(check_hopf_suite(&h).passed());
    assert!(!h.antipode.compose(&h.antipode).is_identity());
    let (op, cop) = op_cop_variants(&h).unwrap();
    assert!(check_hopf_suite(&op).passed());
    assert!(check_hopf_suite(&cop).passed());
    assert_ne!(op, h);
}

#[test]
fn non_invertible_antipode_has_no_variants() {
    let mut h = kz4_twisted();
    h.antipode = LinearOperator::new(4, vec![e(0); 4]).unwrap();
    assert_eq!(op_cop_variants(&h).err(), Some(Error::AntipodeNotInvertible));
}

#[test]
fn coalgebra_checks() {
    assert!(check_hom_coalgebra(&matrix_coalgebra()).passed());
    let base = cyclic_group_algebra(4).coalg;
    let co = cotwist_coalgebra(&base, &cyclic_inversion(4)).unwrap();
    assert!(check_hom_coalgebra(&co).passed());
    let mut bad = matrix_coalgebra();
    bad.comult[1].add_term((1, 1), int(1));
    let r = check_hom_coalgebra(&bad);
    assert!(!r.item_passed("hom-coassoc"));
    // Δ(E11) already involves Δ(E12)
    assert_eq!(r.item("hom-coassoc").unwrap().violations[0].witness, vec![0]);
}

#[test]
fn bialgebra_checks() {
    let gl = group_like_hom_bialgebra(4, &cyclic_inversion(4));
    let r = check_hom_bialgebra(&gl);
    assert!(r.passed(), "{:?}", r.failed_ids());
    assert!(check_hom_algebra(&gl.alg).passed());
    assert!(check_hom_coalgebra(&gl.coalg).passed());
    assert!(check_hom_bialgebra(&cyclic_group_algebra(3)).passed());
    let mut bad = kz4_twisted();
    bad.coalg.beta = LinearOperator::new(4, vec![e(1), e(0), e(2), e(3)]).unwrap().invertible().unwrap();
    let r = check_hom_bialgebra(&bad);
    assert!(!r.item_passed("bialg-9"));
}

#[test]
fn antipode_checks() {
    assert!(check_hom_hopf(&kz4_twisted()).passed());
    assert!(check_hopf_suite(&trivial_hopf()).passed());
    let mut bad = kz4_twisted();
    bad.antipode = LinearOperator::identity(4);
    let r = check_hom_hopf(&bad);
    let it = r.item("antipode-left").unwrap();
    assert!(it.failures > 0);
    assert_eq!(it.violations[0].witness, vec![1]);
}

#[test]
fn hom_inverses() {
    let a = kz4_twisted().alg;
    assert_eq!(hom_inverse(&a, &a.unit, HOM_INVERSE_BOUND), Some((e(0), 0)));
    let (y, n) = hom_inverse(&a, &e(1), HOM_INVERSE_BOUND).unwrap();
    assert_eq!((y, n), (e(3), 0));
    assert_eq!(hom_inverse(&dual_numbers(), &e(1), HOM_INVERSE_BOUND), None);
}

#[test]
fn module_checks() {
    let a = upper_triangular_twisted();
    let regular = ActionData::from_fn(Side::Left, 3, 3, a.alpha.clone(), |x, y| a.mul(x, y).unwrap().clone()).unwrap();
    assert!(check_hom_module(&a, &regular).passed());
    let right = ActionData::from_fn(Side::Right, 3, 3, a.alpha.clone(), |x, y| a.mul(y, x).unwrap().clone()).unwrap();
    assert!(check_hom_module(&a, &right).passed());
    let empty = ActionData::new(Side::Left, 3, 0, vec![], LinearOperator::identity(0)).unwrap();
    assert!(check_hom_module(&a, &empty).passed());
    let wrong = ActionData { gamma: LinearOperator::identity(3), ..regular };
    assert!(!check_hom_module(&a, &wrong).passed());
}

#[test]
fn comodule_checks() {
    let c = kz4_twisted().coalg;
    let selfco = CoactionData::new(4, 4, c.comult.clone(), c.beta.clone()).unwrap();
    assert!(check_hom_comodule(&c, &selfco).passed());
    let trivial = CoactionData::new(4, 4, (0..4).map(|v| LinComb::term((c.beta.image(v).leading().unwrap().0.clone(), 0), int(1))).collect(), c.beta.clone()).unwrap();
    assert!(check_hom_comodule(&c, &trivial).passed());
    let untwisted = CoactionData::new(4, 4, (0..4).map(|v| LinComb::basis((v, 0))).collect(), c.beta.clone()).unwrap();
    assert!(!check_hom_comodule(&c, &untwisted).item_passed("comodule-counit"));
}

#[test]
fn antipode_is_the_unique_convolution_inverse() {
    for h in [kz4_twisted(), sweedler(), trivial_hopf(), group_like_hom_bialgebra(3, &cyclic_inversion(3))] {
        let s = antipode_by_convolution(&h).expect("unique solution");
        assert_eq!(s.images(), h.antipode.images());
    }
}

proptest! {
    #[test]
    fn diagonal_twists_of_upper_triangular_pass(c in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 5])) {
        let t = LinearOperator::new(3, vec![e(0), e(1).scaled(&frac(1, c)), e(2)]).unwrap();
        let a = twist_algebra(&upper_triangular(), &t).unwrap();
        prop_assert!(check_hom_algebra(&a).passed());
    }

    #[test]
    fn power_map_twists_of_cyclic_algebras_pass(n in 2usize..7, k in 1usize..7, l in 1usize..7) {
        let gcd = |mut a: usize, mut b: usize| { while b != 0 { let t = a % b; a = b; b = t; } a };
        prop_assume!(gcd(k, n) == 1 && gcd(l, n) == 1);
        let h = hopf_twist(&cyclic_group_algebra(n), &cyclic_power_map(n, k), &cyclic_power_map(n, l)).unwrap();
        let r = check_hopf_suite(&h);
        prop_assert!(r.passed());
        let s = antipode_by_convolution(&h).unwrap();
        prop_assert_eq!(s.images(), h.antipode.images());
    }
}
