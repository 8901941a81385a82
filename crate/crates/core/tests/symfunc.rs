use schurdet::exactnum::{rat, ratio};
use schurdet::symfunc::*;
use schurdet::{BigRat, Coeff, Poly, Vars};

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn sp(n: u32, l: u32, lp: u32) -> StaircaseParams {
    StaircaseParams::new(n, l, lp).unwrap()
}

fn ones(k: usize) -> Vec<BigRat> {
    vec![rat(1); k]
}

#[test]
fn partitions_parse_and_validate() {
    assert_eq!("2,2,1,1,0,0".parse::<Partition>().unwrap(), part(&[2, 2, 1, 1, 0, 0]));
    assert_eq!("(3, 1)".parse::<Partition>().unwrap(), part(&[3, 1]));
    assert!(Partition::new(vec![1, 2]).is_err());
    assert!("a,b".parse::<Partition>().is_err());
    assert!(StaircaseParams::new(2, 1, 2).is_err());
    assert!(StaircaseParams::new(0, 1, 0).is_err());
}

#[test]
fn staircase_shapes() {
    assert_eq!(two_staircase(sp(3, 1, 0)), part(&[2, 2, 1, 1, 0, 0]));
    assert_eq!(two_staircase(sp(5, 3, 2)), part(&[14, 12, 11, 9, 8, 6, 5, 3, 2, 0]));
    assert_eq!(two_staircase(sp(1, 4, 2)), part(&[2, 0]));
    assert_eq!(staircase(3, 1), part(&[2, 1, 0]));
    assert_eq!(staircase(4, 2), part(&[6, 4, 2, 0]));
}

#[test]
fn m_staircase_rule() {
    for n in 1..=5 {
        for l in 0..=3 {
            assert_eq!(m_staircase(n, 1, l, &part(&[0])).unwrap(), staircase(n, l));
        }
    }
    for n in 1..=4u32 {
        for l in 0..=3 {
            for lp in 0..=l {
                let m = m_staircase(2 * n as usize, 2, l, &part(&[lp, 0])).unwrap();
                assert_eq!(m, two_staircase(sp(n, l, lp)));
            }
        }
    }
    let lam = m_staircase(11, 3, 4, &part(&[5, 2, 1])).unwrap();
    assert_eq!(lam, part(&[14, 13, 13, 10, 9, 9, 6, 5, 5, 2, 1]));
    assert!(m_staircase(4, 2, 0, &part(&[1, 0])).is_err());
}

#[test]
fn bialternant_examples() {
    let z = Vars::indexed("z", 2);
    assert_eq!(*schur_bialternant(&part(&[1, 0])), &Poly::var(&z, 0) + &Poly::var(&z, 1));
    assert_eq!(schur_bialternant(&part(&[1, 1, 0, 0])).eval(&ones(4)).unwrap(), rat(6));

    let z3 = Vars::indexed("z", 3);
    let u2 = chebyshev_u(2);
    let mut prod = Poly::one(&z3);
    for i in 0..3 {
        for j in i + 1..3 {
            prod = &prod * &u2.compose(&z3, &[Poly::var(&z3, i), Poly::var(&z3, j)]).unwrap();
        }
    }
    assert_eq!(*schur_bialternant(&part(&[4, 2, 0])), prod);
}

#[test]
fn specialized_examples() {
    assert_eq!(schur_specialized(&part(&[1, 1, 0, 0]), &ones(4)).unwrap(), rat(6));
    assert_eq!(schur_specialized(&staircase(4, 2), &ones(4)).unwrap(), rat(729));
    assert_eq!(schur_specialized(&part(&[0, 0, 0]), &[rat(5), ratio(1, 2), rat(-3)]).unwrap(), rat(1));
    assert_eq!(schur_specialized(&part(&[2, 2, 1, 1, 0, 0]), &ones(6)).unwrap(), rat(189));
    let pts = [ratio(1, 2), rat(3), rat(-2)];
    let lam = part(&[3, 1, 0]);
    assert_eq!(schur_specialized(&lam, &pts).unwrap(), schur_bialternant(&lam).eval(&pts).unwrap());
    assert_eq!(schur_ratio_at(&lam, &pts).unwrap(), schur_bialternant(&lam).eval(&pts).unwrap());
}

#[test]
fn spin_wheel_examples() {
    assert!(wheel_check(sp(2, 1, 0), [1, 2, 3], [0, 1, 2]).unwrap());
    assert!(wheel_check(sp(2, 1, 0), [2, 3, 4], [0, 1, 2]).unwrap());
    assert!(wheel_check(sp(2, 2, 1), [1, 2, 4], [0, 1, 3]).unwrap());
    assert!(wheel_check(sp(3, 1, 1), [1, 3, 5], [0, 1, 2]).unwrap());
    assert!(wheel_check(sp(2, 1, 0), [1, 1, 2], [0, 1, 2]).is_err());
    assert!(wheel_check(sp(2, 1, 0), [1, 2, 3], [0, 1, 3]).is_err());
}

#[test]
fn recursion_examples() {
    assert!(recursion_check(sp(2, 1, 0), 1, 2, 1).unwrap());
    assert!(recursion_check(sp(2, 2, 1), 1, 2, 2).unwrap());
    assert!(recursion_check(sp(2, 3, 1), 2, 4, 2).unwrap());
    let (lhs, rhs) = recursion_sides(sp(3, 1, 0), 1, 3, 2).unwrap();
    assert!(!lhs.is_zero());
    assert_eq!(lhs, rhs);
}

#[test]
fn gcd_vanishing() {
    assert_eq!(gcd_vanishing_check(sp(2, 2, 1), 1, 2).unwrap(), Some(true));
    assert_eq!(gcd_vanishing_check(sp(2, 1, 0), 1, 2).unwrap(), None);
    assert_eq!(gcd_vanishing_check(sp(3, 4, 2), 2, 5).unwrap(), Some(true));
}

#[test]
fn m_wheel_examples() {
    assert_eq!(m_wheel_check(4, 3, 1, &part(&[1, 0, 0]), &[1, 2, 3, 4], &[1, 2, 3, 4]).unwrap(), WheelOutcome::Vanishes);
    assert_eq!(m_wheel_check(3, 3, 2, &part(&[0, 0, 0]), &[1, 2, 3, 4], &[1, 2, 3, 4]).unwrap(), WheelOutcome::Vacuous);
    assert!(WheelOutcome::Vacuous.passed());
    // m = 2 agrees with the main-text wheel on the same substitution, exponents shifted by one
    for (pos, ks) in [([1u32, 2, 3], [1u32, 2, 3]), ([2, 3, 4], [1, 3, 4])] {
        let a = m_wheel_check(4, 2, 2, &part(&[1, 0]), &pos, &ks).unwrap();
        let b = wheel_check(sp(2, 2, 1), pos, [ks[0] % 4, ks[1] % 4, ks[2] % 4]).unwrap();
        assert_eq!(a.passed(), b);
    }
}

#[test]
fn m_recursion_examples() {
    assert!(m_recursion_check(4, 3, 1, &part(&[0, 0, 0]), &[1, 2, 3], &[1, 2, 4]).unwrap());
    assert!(m_recursion_check(4, 2, 2, &part(&[1, 0]), &[1, 3], &[2, 3]).unwrap());
    let (lhs, rhs) = m_recursion_sides(4, 2, 1, &part(&[1, 0]), &[2, 4], &[1, 3]).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn splitting_examples() {
    assert!(splitting_check(&part(&[2]), &part(&[1])).unwrap());
    assert!(splitting_check(&part(&[1, 1]), &part(&[0, 0])).unwrap());
    assert!(splitting_check(&part(&[2, 2]), &part(&[1, 0])).unwrap());
    assert!(splitting_check(&part(&[1]), &part(&[2])).is_err());
}

#[test]
fn unfactorability_examples() {
    let z = Vars::new(["z"]);
    for (l, lp, deg, c) in [(1, 0, 2, 3), (2, 1, 6, 8), (3, 0, 6, 10)] {
        let (value, formula) = unfactorability_values(sp(2, l, lp)).unwrap();
        assert_eq!(value, formula);
        assert_eq!(value.rename(&z), Poly::var_pow(&z, 0, deg).scale(&BigRat::from_i64(c)));
    }
    assert!(unfactorability_probe(sp(2, 2, 2)).unwrap());
}

#[test]
fn degree_triples() {
    for n in 1..=3u32 {
        for l in 0..=2 {
            let t = degree_triple(2 * n as usize, 2, l).unwrap();
            assert_eq!(t.total, l * n * (n - 1));
        }
    }
    for big_n in 1..=5usize {
        let t = degree_triple(big_n, 1, 2).unwrap();
        assert_eq!(t.total, 2 * (big_n * (big_n - 1) / 2) as u32);
    }
    let t = degree_triple(2, 3, 1).unwrap();
    assert_eq!((t.total, t.single, t.in_m), (0, 0, None));
    assert_eq!(degree_triple(4, 3, 1).unwrap(), degree_triple_of_polynomial(4, 3, 1).unwrap());
}

#[test]
fn wheel_space_examples() {
    assert_eq!(wheel_space_dimension(3, 1, 1, None).unwrap(), 1);
    assert_eq!(wheel_space_dimension(4, 2, 1, None).unwrap(), 1);
    assert_eq!(wheel_space_dimension(2, 3, 1, None).unwrap(), 1);
    assert!(matches!(wheel_space_dimension(4, 2, 14, None), Err(SymError::TooLarge(_))));
}
