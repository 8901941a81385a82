use num_bigint::BigInt;
use schurdet::exactnum::rat;
use schurdet::harness::theorem2_parameter_set;
use schurdet::theorems::*;
use schurdet::{BigRat, Exec, StaircaseParams};

fn sp(n: u32, l: u32, lp: u32) -> StaircaseParams {
    StaircaseParams::new(n, l, lp).unwrap()
}

#[test]
fn constants() {
    for l in 1..=4 {
        assert_eq!(expected_constant(sp(1, l, 1)), -1);
    }
    assert_eq!(expected_constant(sp(2, 2, 1)), 0);
    assert_eq!(expected_constant(sp(2, 1, 0)), -1);
    assert_eq!(expected_constant(sp(1, 2, 1)), -1);
    assert_eq!(matrix_size(sp(3, 1, 1)), 4);
}

#[test]
fn verified_parameter_set() {
    let set = theorem2_parameter_set();
    assert_eq!(set.len(), 22);
    let mut zeros = 0;
    for p in set {
        let generic_xy = p.n() <= 2 && p.l() <= 2;
        let r = theorem2_verify(p, TheoremTwoOptions { generic_xy, force: false }).unwrap();
        assert!(r.pass, "{p}");
        assert_eq!(r.lhs, r.rhs, "{p}");
        let c = BigRat::from_integer(BigInt::from(r.constant_expected));
        assert_eq!(r.constant_found, Some(c), "{p}");
        assert!([-1, 0, 1].contains(&r.constant_expected));
        if generic_xy {
            assert_eq!(r.generic_agrees, Some(true), "{p}");
        }
        if r.constant_expected == 0 {
            assert!(r.lhs.is_zero());
            zeros += 1;
        }
    }
    // gcd(ℓ+2, ℓ′+1) > 1 only at (2,2,1) within the set
    assert_eq!(zeros, 1);
}

#[test]
fn documented_instances() {
    let r = theorem2_verify(sp(1, 1, 1), TheoremTwoOptions::default()).unwrap();
    assert_eq!(r.size, 2);
    assert_eq!(r.lhs.as_constant(), Some(rat(-1)));
    let r = theorem2_verify(sp(2, 1, 0), TheoremTwoOptions { generic_xy: true, force: false }).unwrap();
    assert!(r.pass);
    assert_eq!(r.lhs.arity(), 2);
    assert!(theorem2_verify(sp(2, 2, 1), TheoremTwoOptions::default()).unwrap().lhs.is_zero());
}

#[test]
fn divisibility() {
    for p in [sp(2, 1, 0), sp(2, 1, 1), sp(3, 1, 0), sp(2, 3, 1)] {
        assert!(theorem2_divisibility_probe(p, false).unwrap(), "{p}");
    }
    assert!(theorem2_divisibility_probe(sp(1, 1, 0), false).is_err());
}

#[test]
fn outside_the_feasible_range() {
    assert!(matches!(theorem2_verify(sp(4, 1, 0), TheoremTwoOptions::default()), Err(TheoremError::Infeasible(_))));
    assert!(matches!(theorem2_verify(sp(3, 2, 0), TheoremTwoOptions::default()), Err(TheoremError::Infeasible(_))));
}

#[test]
fn asm_determinant_from_the_identity() {
    let printed = [(3usize, 1i64), (4, -7), (5, 1764)];
    for (n, d) in printed {
        let v = theorem1_via_theorem2_values(n, Exec::Parallel).unwrap();
        assert!(v.passed(), "n = {n}");
        assert_eq!(v.derived_det, Some(rat(d)));
    }
    let v = theorem1_via_theorem2_values(2, Exec::Sequential).unwrap();
    assert_eq!(v.q1, rat(-3));
    assert_eq!(v.derived_det, Some(rat(-1)));
}
