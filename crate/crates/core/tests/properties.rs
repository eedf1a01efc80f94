mod common;

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use toric_cartier::birational::{non_lc_ideal, BasePointData};
use toric_cartier::cartier::{divisor_to_w, w_to_divisor, CartierData, TripleData};
use toric_cartier::fixed::{enumerate_fixed, ShiftedNewton};
use toric_cartier::geometry::cone::apply;
use toric_cartier::geometry::{rational, Constraint, Kind, LatticePoint, Region};
use toric_cartier::ideal::MonomialIdeal;
use toric_cartier::oracle::{verify_fixed, witness_is_sound, Verdict};
use toric_cartier::semigroup::Semigroup;

use common::*;

fn frobenius() -> impl Strategy<Value = (u64, u32)> {
    prop_oneof![Just((2, 1)), Just((3, 1)), Just((2, 2)), Just((5, 1))]
}

fn cartier() -> impl Strategy<Value = CartierData> {
    (cone2(), -3i64..=3, -3i64..=3, frobenius()).prop_map(|(cone, a, b, (prime, e))| {
        CartierData::new(Arc::new(Semigroup::new(cone)), prime, e, p(&[a, b])).unwrap()
    })
}

fn triple() -> impl Strategy<Value = TripleData> {
    (
        cone_and_ideal(),
        -3i64..=3,
        -3i64..=3,
        prop_oneof![Just(2u64), Just(3)],
        0i64..=6,
        1i64..=5,
    )
        .prop_filter_map("admissible exponent", |((s, a), w0, w1, prime, num, den)| {
            let c = CartierData::new(s, prime, 1, p(&[w0, w1])).ok()?;
            let tr = TripleData::new(c, a, rational(num, den)).ok()?;
            (tr.period() <= 4).then_some(tr)
        })
}

fn list(tr: &TripleData) -> Vec<MonomialIdeal> {
    enumerate_fixed(&ShiftedNewton::new(tr).unwrap())
        .unwrap()
        .into_iter()
        .map(|r| r.ideal)
        .collect()
}

fn in_cone(s: &Semigroup, r: i64) -> Vec<LatticePoint> {
    box_points(s.dim(), r).into_iter().filter(|x| s.contains(x)).collect()
}

fn unimodular() -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec((0usize..4, -2i64..=2), 1..=3).prop_map(|steps| {
        let mut u = vec![vec![1i64, 0], vec![0, 1]];
        for (kind, k) in steps {
            let e = match kind {
                0 => vec![vec![1, k], vec![0, 1]],
                1 => vec![vec![1, 0], vec![k, 1]],
                2 => vec![vec![0, -1], vec![1, 0]],
                _ => vec![vec![-1, 0], vec![0, -1]],
            };
            u = (0..2)
                .map(|i| (0..2).map(|j| e[i][0] * u[0][j] + e[i][1] * u[1][j]).collect())
                .collect();
        }
        u
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn unimodular_maps_have_unit_determinant(u in unimodular()) {
        prop_assert_eq!((u[0][0] * u[1][1] - u[0][1] * u[1][0]).abs(), 1);
    }

    #[test]
    fn dual_is_an_involution(cone in cone_any()) {
        let back = cone.dual().dual();
        prop_assert_eq!(back.rays(), cone.rays());
        prop_assert_eq!(back.facets(), cone.facets());
    }

    #[test]
    fn minimal_points_form_a_dominating_antichain(
        cone in cone2(),
        offsets in proptest::collection::vec((-4i64..=4, 1i64..=3), 2),
        extra in (0i64..=2, 0i64..=2, 0i64..=6),
    ) {
        let s = Semigroup::new(cone.clone());
        let facets = cone.facets();
        let mut constraints: Vec<Constraint> = facets
            .iter()
            .zip(&offsets)
            .map(|(n, &(a, b))| Constraint { normal: n.clone(), offset: rational(a, b), kind: Kind::AtLeast })
            .collect();
        let normal = &facets[0].scale(extra.0) + &facets[1].scale(extra.1);
        constraints.push(Constraint { normal, offset: rational(extra.2, 1), kind: Kind::Greater });
        let region = Region::new(2, constraints);
        let mins = s.minimal_points(&region).unwrap();
        for (i, a) in mins.iter().enumerate() {
            prop_assert!(region.contains_point(a) && s.contains(a));
            for (j, b) in mins.iter().enumerate() {
                prop_assert!(i == j || !s.divides(a, b), "{} divides {}", a, b);
            }
        }
        for x in in_cone(&s, 6) {
            if region.contains_point(&x) {
                prop_assert!(mins.iter().any(|m| s.divides(m, &x)), "{} not dominated", x);
            }
        }
    }

    #[test]
    fn ideal_operations_are_lattice_like(
        (s, i) in cone_and_ideal(),
        cj in proptest::collection::vec(0u8..=3, 2..=6),
        ck in proptest::collection::vec(0u8..=3, 2..=6),
    ) {
        let j = MonomialIdeal::from_generators(s.clone(), &points_in(s.cone(), &cj)).unwrap();
        let k = MonomialIdeal::from_generators(s.clone(), &points_in(s.cone(), &ck)).unwrap();
        prop_assert_eq!(i.sum(&i).unwrap(), i.clone());
        prop_assert_eq!(i.intersection(&i).unwrap(), i.clone());
        let jk = j.sum(&k).unwrap();
        prop_assert_eq!(i.product(&jk).unwrap(), i.product(&j).unwrap().sum(&i.product(&k).unwrap()).unwrap());
        prop_assert_eq!(
            i.intersection(&jk).unwrap(),
            i.intersection(&j).unwrap().sum(&i.intersection(&k).unwrap()).unwrap()
        );
        for x in in_cone(&s, 6) {
            let (a, b) = (i.contains(&x), j.contains(&x));
            prop_assert_eq!(i.sum(&j).unwrap().contains(&x), a || b);
            prop_assert_eq!(i.intersection(&j).unwrap().contains(&x), a && b);
            if i.product(&j).unwrap().contains(&x) {
                prop_assert!(a && b);
            }
        }
    }

    #[test]
    fn containment_is_monotone((s, i) in cone_and_ideal(), cj in proptest::collection::vec(0u8..=3, 2..=6)) {
        let j = MonomialIdeal::from_generators(s.clone(), &points_in(s.cone(), &cj)).unwrap();
        let sum = i.sum(&j).unwrap();
        let meet = i.intersection(&j).unwrap();
        prop_assert!(sum.contains_ideal(&i) && i.contains_ideal(&meet));
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()));
        prop_assert!(MonomialIdeal::unit(s.clone()).contains_ideal(&i));
        prop_assert!(i.contains_ideal(&MonomialIdeal::zero(s.clone())));
    }

    #[test]
    fn phi_is_inverse_frobenius_linear(c in cartier(), ci in proptest::collection::vec(0u8..=3, 2..=6), cv in proptest::collection::vec(0u8..=2, 2)) {
        let s = c.ambient().clone();
        let i = MonomialIdeal::from_generators(s.clone(), &points_in(s.cone(), &ci)).unwrap();
        let v = points_in(s.cone(), &cv).pop().unwrap();
        let lhs = c.phi_on_ideal(&i.translate(&v.scale(c.q())).unwrap()).unwrap();
        let rhs = c.phi_on_ideal(&i).unwrap().translate(&v).unwrap();
        prop_assert!(lhs.contains_ideal(&rhs));
        if c.maps_into_ring() {
            prop_assert_eq!(lhs, rhs);
        }
        for u in i.generators() {
            if let Some(m) = c.phi_on_monomial(u) {
                prop_assert!(c.phi_on_ideal(&i).unwrap().contains(&m));
            }
        }
    }

    #[test]
    fn phi_composes(c in cartier(), ci in proptest::collection::vec(0u8..=3, 2..=6)) {
        let s = c.ambient().clone();
        let i = MonomialIdeal::from_generators(s.clone(), &points_in(s.cone(), &ci)).unwrap();
        let twice = c.phi_on_ideal(&c.phi_on_ideal(&i).unwrap()).unwrap();
        prop_assert_eq!(c.power(2).unwrap().phi_on_ideal(&i).unwrap(), twice);
    }

    #[test]
    fn divisor_round_trip(c in cartier()) {
        let sigma = c.ambient().cone();
        let delta = w_to_divisor(sigma, c.w(), c.q());
        prop_assert_eq!(&divisor_to_w(sigma, &delta, c.p(), c.e(), false).unwrap(), c.w());
        prop_assert_eq!(BasePointData::from_divisor(sigma, &delta).unwrap(), BasePointData::from_cartier(&c));
    }

    #[test]
    fn face_ideals_shrink_along_inclusion(c in cartier()) {
        let sn = ShiftedNewton::new(&TripleData::pair(c)).unwrap();
        let ideals = sn.face_ideals().unwrap();
        for (g, fg) in sn.faces().faces.iter().enumerate() {
            for (f, ff) in sn.faces().faces.iter().enumerate() {
                if fg.is_subface_of(ff) {
                    prop_assert!(ideals[g].contains_ideal(&ideals[f]), "face {} vs {}", g, f);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_unimodular_equivariant(c in cartier(), u in unimodular()) {
        let moved = Arc::new(Semigroup::new(c.ambient().cone().transform(&u).unwrap()));
        let image = CartierData::new(moved.clone(), c.p(), c.e(), apply(&u, c.w())).unwrap();
        let mut expected: Vec<MonomialIdeal> = list(&TripleData::pair(c))
            .iter()
            .map(|i| {
                if i.is_zero() {
                    return MonomialIdeal::zero(moved.clone());
                }
                let gens: Vec<LatticePoint> = i.generators().iter().map(|g| apply(&u, g)).collect();
                MonomialIdeal::from_generators(moved.clone(), &gens).unwrap()
            })
            .collect();
        expected.sort();
        prop_assert_eq!(list(&TripleData::pair(image)), expected);
    }

    #[test]
    fn stable_image_is_fixed(c in cartier()) {
        let stable = c.stable_image(64).unwrap();
        prop_assert_eq!(c.phi_on_ideal(&stable).unwrap(), stable.clone());
        let first = c.phi_on_ideal(&MonomialIdeal::unit(c.ambient().clone())).unwrap();
        prop_assert!(first.contains_ideal(&stable));
        prop_assert!(c.phi_on_ideal(&first).unwrap().contains_ideal(&stable));
        prop_assert!(first.contains_ideal(&c.phi_on_ideal(&first).unwrap()));
    }

    #[test]
    fn non_lc_is_antitone(tr in triple(), dt in 0i64..=4, s1 in 0i64..=2, ds in 0i64..=2) {
        let bp = BasePointData::from_cartier(tr.cartier());
        let a = tr.a_ideal();
        let t2 = tr.t() + rational(dt, 3);
        let (s_lo, s_hi) = (rational(s1, 2), rational(s1 + ds, 2));
        let lo = non_lc_ideal(&bp, a, tr.t(), a, &s_lo).unwrap();
        prop_assert!(lo.contains_ideal(&non_lc_ideal(&bp, a, &t2, a, &s_lo).unwrap()));
        prop_assert!(lo.contains_ideal(&non_lc_ideal(&bp, a, tr.t(), a, &s_hi).unwrap()));
    }

    #[test]
    fn cartier_operator_grows_with_n(tr in triple(), ci in proptest::collection::vec(0u8..=3, 2..=6)) {
        let s = tr.ambient().clone();
        let i = MonomialIdeal::from_generators(s.clone(), &points_in(s.cone(), &ci)).unwrap();
        let n0 = tr.period();
        let once = tr.cartier_operator(&i, n0).unwrap();
        let twice = tr.cartier_operator(&i, 2 * n0).unwrap();
        prop_assert!(twice.contains_ideal(&once));
        prop_assert_eq!(once, tr.cartier_step(&i, n0).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn oracle_agrees_with_engine(tr in triple(), ci in proptest::collection::vec(0u8..=3, 2..=6)) {
        let fixed = list(&tr);
        let big_n = 3 * tr.period();
        for i in &fixed {
            prop_assert!(verify_fixed(&tr, i, big_n).unwrap().is_fixed(), "{} rejected", i);
        }
        let s = tr.ambient().clone();
        let probe = MonomialIdeal::from_generators(s.clone(), &points_in(s.cone(), &ci)).unwrap();
        match verify_fixed(&tr, &probe, big_n).unwrap() {
            Verdict::Fixed => prop_assert!(fixed.contains(&probe), "{} accepted but not enumerated", probe),
            Verdict::NotFixed(w) => {
                prop_assert!(!fixed.contains(&probe));
                prop_assert!(witness_is_sound(&tr, &probe, &w).unwrap());
            }
            Verdict::Inconclusive(why) => prop_assert!(false, "inconclusive: {}", why),
        }
    }

    #[test]
    fn reparametrization_keeps_the_list(tr in triple()) {
        let wide = tr.reparametrize().unwrap();
        prop_assert_eq!(wide.period(), 1);
        prop_assert_eq!(list(&wide), list(&tr));
    }

    #[test]
    fn zero_exponent_matches_pair(c in cartier()) {
        let unit = MonomialIdeal::unit(c.ambient().clone());
        let tr = TripleData::new(c.clone(), unit, BigRational::zero()).unwrap();
        prop_assert_eq!(list(&tr), list(&TripleData::pair(c)));
    }
}
