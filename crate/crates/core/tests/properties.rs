use std::collections::BTreeMap;
use std::sync::Arc;

use ktinv::derivations::mst::{lie_derivative, mst_project};
use ktinv::derivations::Derivation;
use ktinv::killing_space::{KillingSpace, VectorFieldM};
use ktinv::linalg::{nullspace, SparseVec};
use ktinv::ratpoly::{rat, Monomial, Poly, Rational, VarKind, VarTable};
use num_traits::Zero;
use proptest::prelude::*;

fn table() -> Arc<VarTable> {
    VarTable::new([("x", VarKind::Geometric), ("y", VarKind::Geometric), ("z", VarKind::Parameter)]).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), rational()), 0..6).prop_map(|terms| {
        let t = table();
        Poly::from_terms(&t, terms.into_iter().map(|((a, b, c), r)| (Monomial::new(vec![a, b, c]), r)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Poly::one(p.table()), p.clone());
    }

    #[test]
    fn leibniz_rule(p in poly(), q in poly(), i in 0usize..3) {
        let lhs = (&p * &q).diff(i);
        let rhs = &(&p.diff(i) * &q) + &(&p * &q.diff(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(), q in poly(), s in poly()) {
        let mut map = BTreeMap::new();
        map.insert(0usize, s);
        prop_assert_eq!((&p * &q).subst(&map).unwrap(), &p.subst(&map).unwrap() * &q.subst(&map).unwrap());
        prop_assert_eq!((&p + &q).subst(&map).unwrap(), &p.subst(&map).unwrap() + &q.subst(&map).unwrap());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), pt in proptest::collection::vec(rational(), 3)) {
        prop_assert_eq!((&p * &q).eval(&pt).unwrap(), p.eval(&pt).unwrap() * q.eval(&pt).unwrap());
    }

    #[test]
    fn coefficient_split_round_trips(p in poly()) {
        let t = p.table().clone();
        let parts = p.coeff_poly_in(&[0, 1]);
        let rebuilt = parts.iter().fold(Poly::zero(&t), |acc, (m, c)| {
            &acc + &(&Poly::monomial(&t, m.clone(), Rational::from_integer(1.into())) * c)
        });
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn text_round_trips(p in poly()) {
        let again = Poly::parse(p.table(), &p.to_string()).unwrap();
        prop_assert_eq!(again, p);
    }

    #[test]
    fn derivation_is_a_derivation(p in poly(), q in poly(), c0 in poly(), c2 in poly()) {
        let t = p.table().clone();
        let d = Derivation::from_terms(&t, [(0, c0), (2, c2)]).unwrap();
        let lhs = d.apply(&(&p * &q)).unwrap();
        let rhs = &(&d.apply(&p).unwrap() * &q) + &(&p * &d.apply(&q).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in proptest::collection::vec(proptest::collection::vec(rational(), 5), 1..5)) {
        let sparse: Vec<SparseVec> = rows
            .iter()
            .map(|r| r.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let k = nullspace(sparse.clone(), 5);
        prop_assert_eq!(k.len() + ktinv::linalg::rank(&rows), 5);
        for v in &k {
            for r in &rows {
                let dot: Rational = v.iter().map(|(i, x)| x * &r[*i]).sum();
                prop_assert!(dot.is_zero());
            }
        }
    }
}

fn values(n: usize) -> impl Strategy<Value = (usize, Vec<Rational>)> {
    (1usize..=n).prop_flat_map(|n| {
        let d = (n + 1) * (n + 2) / 2;
        (Just(n), proptest::collection::vec(rational(), d))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn general_element_coordinates_round_trip((n, vals) in values(5)) {
        let space = KillingSpace::new(n).unwrap();
        let k = space.assign(&vals).unwrap();
        let coords: Vec<Rational> = space.coordinates(&k).unwrap().iter().map(|p| p.constant_term()).collect();
        prop_assert_eq!(coords, vals);
    }

    #[test]
    fn projection_is_linear((n, v1) in values(4), seed in 0u64..1000, alpha in rational(), beta in rational()) {
        let space = KillingSpace::new(n).unwrap();
        let d = space.dimension();
        let v2: Vec<Rational> = (0..d).map(|i| rat(((seed as i64 + 3 * i as i64) % 11) - 5, 1 + (i as i64 % 3))).collect();
        let v1 = &v1[..d];
        let k1 = space.assign(v1).unwrap();
        let k2 = space.assign(&v2).unwrap();
        let combo = k1.scale(&alpha).add(&k2.scale(&beta)).unwrap();
        for field in VectorFieldM::isometry_basis(&space.table).unwrap() {
            let p = |k| mst_project(&lie_derivative(&field, k).unwrap(), &space).unwrap();
            let lhs = p(&combo);
            let rhs = p(&k1).scale(&alpha).add(&p(&k2).scale(&beta)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
