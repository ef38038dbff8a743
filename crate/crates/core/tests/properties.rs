use mfkit::catalog::WeierstrassCurve;
use mfkit::groebner::{groebner_basis, ModuleGens, Over};
use mfkit::mf::MatrixFactorization;
use mfkit::{FieldSpec, Monomial, Poly, PolyRing};
use proptest::prelude::*;

const P: u32 = 101;

fn fp() -> FieldSpec {
    FieldSpec::Prime(P)
}

fn poly_from(terms: Vec<([u16; 3], i64)>, field: FieldSpec) -> Poly {
    Poly::from_terms(
        terms
            .into_iter()
            .map(|(e, c)| (Monomial::from_exponents(&e), field.from_i64(c)))
            .collect(),
    )
}

fn any_poly(field: FieldSpec) -> impl Strategy<Value = Poly> {
    prop::collection::vec(([0u16..3, 0u16..3, 0u16..3], -50i64..50), 0..6)
        .prop_map(move |t| poly_from(t, field))
}

fn homogeneous(deg: u16, field: FieldSpec) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0..=deg, 0..=deg, -20i64..20), 1..5).prop_map(move |t| {
        let terms = t
            .into_iter()
            .filter(|(a, b, _)| a + b <= deg)
            .map(|(a, b, c)| ([a, b, deg - a - b], c))
            .collect();
        poly_from(terms, field)
    })
}

fn rational_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(([0u16..3, 0u16..3, 0u16..3], -30i64..30, 1i64..7), 0..5).prop_map(
        |t| {
            let q = FieldSpec::Rationals;
            Poly::from_terms(
                t.into_iter()
                    .map(|(e, n, d)| {
                        (
                            Monomial::from_exponents(&e),
                            &q.from_i64(n) / &q.from_i64(d),
                        )
                    })
                    .collect(),
            )
        },
    )
}

fn catalog_object() -> impl Strategy<Value = (usize, i64)> {
    (0usize..10, -3i64..4)
}

fn catalog_mf(index: usize, twist: i64) -> MatrixFactorization {
    let c = WeierstrassCurve::from_ints(FieldSpec::Rationals, 0, 1).unwrap();
    let kinds = WeierstrassCurve::all_kinds(&[c.point(2, 3).unwrap()]);
    c.catalog_mf(&kinds[index % kinds.len()]).unwrap().twist(twist)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in any_poly(fp()), b in any_poly(fp()), c in any_poly(fp())) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn exact_division_inverts_product(a in any_poly(fp()), b in any_poly(fp())) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn print_parse_round_trip_prime(a in any_poly(fp())) {
        let r = PolyRing::xyz(fp());
        prop_assert_eq!(r.parse(&r.format(&a)).unwrap(), a);
    }

    #[test]
    fn print_parse_round_trip_rational(a in rational_poly()) {
        let r = PolyRing::xyz(FieldSpec::Rationals);
        prop_assert_eq!(r.parse(&r.format(&a)).unwrap(), a);
    }

    #[test]
    fn ideal_members_reduce_to_zero(
        g1 in homogeneous(2, fp()),
        g2 in homogeneous(2, fp()),
        c1 in homogeneous(1, fp()),
        c2 in homogeneous(1, fp()),
    ) {
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        let gens = ModuleGens::new(vec![0], vec![vec![g1.clone()], vec![g2.clone()]], Over::Poly).unwrap();
        let gb = groebner_basis(&gens).unwrap();
        prop_assert!(gb.check_buchberger());
        let member = c1.mul(&g1).add(&c2.mul(&g2));
        prop_assert!(gb.contains(&[member]).unwrap());
        prop_assert!(gb.contains(&[g1]).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(
        g in homogeneous(2, fp()),
        v in homogeneous(3, fp()),
    ) {
        prop_assume!(!g.is_zero());
        let gens = ModuleGens::new(vec![0], vec![vec![g]], Over::Poly).unwrap();
        let gb = groebner_basis(&gens).unwrap();
        let once = gb.normal_form(&[v]).unwrap();
        prop_assert_eq!(gb.normal_form(&once).unwrap(), once);
    }

    #[test]
    fn shift_twist_relations((k, t) in catalog_object(), a in -3i64..4, b in -3i64..4) {
        let m = catalog_mf(k, t);
        prop_assert_eq!(m.shift(2), m.twist(3));
        prop_assert_eq!(m.shift(a).shift(b), m.shift(a + b));
        prop_assert_eq!(m.twist(a).twist(b), m.twist(a + b));
        prop_assert_eq!(m.transpose().transpose(), m.clone());
        prop_assert!(m.shift(a).is_valid());
        prop_assert!(m.transpose().is_valid());
    }

    #[test]
    fn reduction_is_idempotent(
        (k1, t1) in catalog_object(),
        (k2, t2) in catalog_object(),
        trivial_twists in prop::collection::vec(-2i64..3, 0..3),
    ) {
        let a = catalog_mf(k1, t1);
        let b = catalog_mf(k2, t2);
        let mut sum = a.direct_sum(&b).unwrap();
        for tw in &trivial_twists {
            let triv = MatrixFactorization::trivial(&a.ring, &a.f, *tw);
            sum = sum.direct_sum(&triv).unwrap().direct_sum(&triv.shift(1)).unwrap();
        }
        let red = sum.reduce();
        prop_assert!(red.is_valid());
        prop_assert!(red.is_reduced());
        prop_assert_eq!(red.reduce(), red.clone());
        prop_assert_eq!(red.rank(), a.reduce().rank() + b.reduce().rank());
    }

    #[test]
    fn determinants_multiply_to_power_of_f((k, t) in catalog_object()) {
        let m = catalog_mf(k, t);
        let da = m.alpha.determinant(&m.ring).unwrap();
        let db = m.beta.determinant(&m.ring).unwrap();
        prop_assert_eq!(da.mul(&db), m.f.pow(m.rank() as u32));
    }
}
