use detvar_core::cohomology::{GradedClass, Space};
use detvar_core::partitions::{box_complement, box_partitions, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[test]
fn poincare_duality() {
    for k in 0..=4 {
        for rest in 0..=4 {
            let n = k + rest;
            if n == 0 {
                continue;
            }
            let space = Space::grassmannian(k, n).unwrap();
            let basis = box_partitions(k, rest);
            for lam in &basis {
                let a = GradedClass::schubert(&space, std::slice::from_ref(lam)).unwrap();
                let dual = box_complement(lam, k, rest).unwrap();
                for mu in basis
                    .iter()
                    .filter(|mu| mu.weight() + lam.weight() == k * rest)
                {
                    let b = GradedClass::schubert(&space, std::slice::from_ref(mu)).unwrap();
                    let expected = if *mu == dual { q(1) } else { q(0) };
                    assert_eq!(
                        a.multiply(&b).unwrap().integrate(),
                        expected,
                        "G({k},{n}) {lam} {mu}"
                    );
                }
            }
        }
    }
}

#[test]
fn special_classes_multiply_to_the_point() {
    for k in 1..=4 {
        for n in k + 1..=k + 4 {
            let space = Space::grassmannian(k, n).unwrap();
            let row = GradedClass::schubert(&space, &[Partition::row(n - k)]).unwrap();
            assert_eq!(row.pow(k).integrate(), q(1), "G({k},{n})");
        }
    }
}

#[test]
fn degree_of_grassmannian() {
    // number of standard tableaux of the k x (n-k) rectangle
    fn rectangle_tableaux(k: usize, c: usize) -> BigInt {
        let mut num: BigInt = (1..=k * c).map(BigInt::from).product();
        for i in 0..k {
            for j in 0..c {
                num /= BigInt::from(k - i + c - j - 1);
            }
        }
        num
    }
    for (k, n) in [(1, 4), (2, 4), (2, 5), (3, 6), (2, 7), (4, 8)] {
        let space = Space::grassmannian(k, n).unwrap();
        let h = GradedClass::schubert(&space, &[Partition::row(1)]).unwrap();
        let d = h.pow(k * (n - k)).integrate();
        assert_eq!(
            d,
            BigRational::from_integer(rectangle_tableaux(k, n - k)),
            "G({k},{n})"
        );
    }
}

#[test]
fn product_spaces_integrate_factorwise() {
    let space = Space::new(&[(1, 3), (2, 4)]).unwrap();
    assert_eq!(space.dimension(), 6);
    let h1 = GradedClass::factor_schubert(&space, 0, &Partition::row(1)).unwrap();
    let h2 = GradedClass::factor_schubert(&space, 1, &Partition::row(1)).unwrap();
    // int h1^2 h2^4 = 1 * 2, and the total (h1+h2)^6 gives C(6,2) * 2
    assert_eq!(h1.pow(2).multiply(&h2.pow(4)).unwrap().integrate(), q(2));
    assert_eq!((&h1 + &h2).pow(6).integrate(), q(30));
    assert!(h1.pow(3).is_zero());
}

#[test]
fn mismatched_spaces_are_rejected() {
    let a = GradedClass::one(&Space::grassmannian(1, 3).unwrap());
    let b = GradedClass::one(&Space::grassmannian(1, 4).unwrap());
    assert!(a.multiply(&b).is_err());
    assert!(a.try_add(&b).is_err());
    assert!(Space::new(&[(3, 2)]).is_err());
    assert!(Space::new(&[(0, 0)]).is_err());
}

#[test]
fn components_sum_back() {
    let space = Space::grassmannian(2, 5).unwrap();
    let h = GradedClass::schubert(&space, &[Partition::row(1)]).unwrap();
    let x = &GradedClass::one(&space) + &h;
    let total = x.pow(6);
    let parts = total.components();
    assert_eq!(parts.len(), 7);
    let mut sum = GradedClass::zero(&space);
    for (d, c) in parts.iter().enumerate() {
        assert!(c.is_zero() || c.homogeneous_degree() == Some(d));
        sum = &sum + c;
    }
    assert_eq!(sum, total);
    assert_eq!(total.constant_term(), BigRational::one());
}

fn random_class(space: &Space, coeffs: &[i64]) -> GradedClass {
    let mut c = GradedClass::zero(space);
    for (g, &v) in coeffs.iter().enumerate().take(space.basis_len()) {
        if v != 0 {
            let key = space.basis_key(g);
            c = &c + &GradedClass::schubert(space, &key).unwrap().scale_int(v);
        }
    }
    c
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], 20)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ring_axioms(a in coeffs(), b in coeffs(), c in coeffs()) {
        let space = Space::new(&[(2, 4), (1, 3)]).unwrap();
        let (a, b, c) = (random_class(&space, &a), random_class(&space, &b), random_class(&space, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &GradedClass::one(&space), a.clone());
    }

    #[test]
    fn integration_is_linear(a in coeffs(), b in coeffs(), s in -5i64..=5) {
        let space = Space::grassmannian(2, 5).unwrap();
        let (a, b) = (random_class(&space, &a), random_class(&space, &b));
        let lhs = (&a.scale_int(s) + &b).integrate();
        prop_assert_eq!(lhs, a.integrate() * q(s) + b.integrate());
        prop_assert!(!(&a + &b).integrate().is_zero() || (&a + &b).component(6).is_zero());
    }
}
