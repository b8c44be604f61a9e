use homhopf_core::fixtures::*;
use homhopf_core::foundation::LinearOperator;
use homhopf_core::hom_core::check_hopf_suite;
use homhopf_core::hom_lie::HomLieData;
use homhopf_core::uea::*;

fn abelian(n: usize) -> HomLieData {
    HomLieData::abelian(n, LinearOperator::identity(n)).unwrap()
}

#[test]
fn dims_one_dimensional() {
    let u = build_truncated_uea(&abelian(1), 3).unwrap();
    assert_eq!(u.dims(), vec![1, 1, 1, 1]);
}

#[test]
fn dims_two_dimensional_abelian() {
    let u = build_truncated_uea(&abelian(2), 3).unwrap();
    assert_eq!(u.dims(), vec![1, 2, 3, 4]);
}

#[test]
fn hopf_suite_on_truncation() {
    let u = build_truncated_uea(&abelian(2), 3).unwrap();
    let r = check_hopf_suite(&u.hopf);
    assert!(r.passed(), "{:?}", r.failed_ids());
    assert!(check_relations_hopf_ideal(&u).passed());
}

#[test]
fn sl2_dims() {
    let u = build_truncated_uea(&sl2(), 2).unwrap();
    assert_eq!(u.dims(), vec![1, 3, 6]);
    let r = check_hopf_suite(&u.hopf);
    assert!(r.passed(), "{:?}", r.failed_ids());
}

#[test]
fn weighted_oracle_agrees() {
    let (d, folded) = weighted_quotient_dims(&abelian(1), 3, 1);
    assert_eq!(d, vec![1, 1, 1, 1]);
    assert!(folded);
}

#[test]
fn weight_two_trees() {
    let ctx = TreeCtx::new(&LinearOperator::identity(2), Shift::Weights);
    let mut n = 0;
    for d in 0..=3 {
        for t in trees_of_degree(d, 2, 2) {
            assert!(coassociator(&ctx, &t).is_zero(), "{t:?}");
            n += 1;
        }
    }
    assert!(n > 0);
    let (d, folded) = weighted_quotient_dims(&abelian(1), 2, 2);
    assert_eq!(d, vec![1, 1, 1]);
    assert!(folded);
}
