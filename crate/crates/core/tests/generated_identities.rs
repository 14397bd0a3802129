use proptest::prelude::*;
use theta_core::complex::io::{parse_facet_file, write_facet_file};
use theta_core::harness::checks::{
    ball_reports, triangulation_reports, verify_locality, verify_theta_formula, TriangulationChecks,
};
use theta_core::harness::{InstanceClass, InstanceGenerator, Outcome};
use theta_core::invariants::{h_poly, theta, theta_from_h, h_vector, RestrictionTable};
use theta_core::poly::symmetric_decomposition;
use theta_core::subdivision::io::{parse_triangulation_file, write_triangulation_file};
use theta_core::subdivision::{antiprism, barycentric, edgewise, stellar, Triangulation};
use theta_core::{FieldChoice, VerifiedBall};

const Q: FieldChoice = FieldChoice::Rational;

fn class() -> impl Strategy<Value = InstanceClass> {
    prop_oneof![
        Just(InstanceClass::Ball),
        Just(InstanceClass::Sphere),
        Just(InstanceClass::CohenMacaulay),
        Just(InstanceClass::FlagSphere),
        Just(InstanceClass::FlagBall),
    ]
}

fn subdivisions(c: &theta_core::SimplicialComplex) -> Vec<Triangulation> {
    let facet = c.facets()[0].clone();
    vec![
        barycentric(c),
        antiprism(c),
        stellar(c, &facet, "apex").unwrap(),
        edgewise(c, 2).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theta_and_locality_formulas(seed in any::<u64>(), class in class(), dim in 1usize..=2, index in 0u64..4) {
        let g = InstanceGenerator::new(seed, class, dim, 7).unwrap();
        let inst = g.instance(index);
        for t in subdivisions(&inst.complex) {
            let table = RestrictionTable::new(&t, Q).unwrap();
            let loc = verify_locality(&inst.name, &t, &table);
            prop_assert!(loc.passed(), "{}", loc.to_json_line());
            let th = verify_theta_formula(&inst.name, &t, &table);
            prop_assert!(th.passed(), "{}", th.to_json_line());
        }
    }

    #[test]
    fn every_group_is_clean_on_small_balls(seed in any::<u64>(), dim in 1usize..=2) {
        let inst = InstanceGenerator::new(seed, InstanceClass::Ball, dim, 6).unwrap().instance(0);
        let ball = VerifiedBall::verify(&inst.complex, Q).unwrap();
        for r in ball_reports(&inst.name, &ball, Q) {
            prop_assert!(r.outcome != Outcome::Fail || !r.is_defect(), "{}", r.to_json_line());
        }
        let t = barycentric(&inst.complex);
        for r in triangulation_reports(&inst.name, &t, Q, TriangulationChecks::all()) {
            prop_assert!(!r.is_defect(), "{}", r.to_json_line());
        }
    }

    #[test]
    fn theta_of_balls_agrees_three_ways(seed in any::<u64>(), dim in 1usize..=3) {
        let inst = InstanceGenerator::new(seed, InstanceClass::Ball, dim, dim + 5).unwrap().instance(1);
        let ball = VerifiedBall::verify(&inst.complex, Q).unwrap();
        let th = theta(&ball).unwrap();
        prop_assert_eq!(&th, &(h_poly(ball.complex()) - h_poly(ball.boundary())));
        prop_assert_eq!(&th, &theta_from_h(&h_vector(ball.complex())));
        let d = symmetric_decomposition(&h_poly(ball.complex()), ball.rank() - 1).unwrap();
        prop_assert_eq!(d.b.shift(1), th);
    }

    #[test]
    fn files_round_trip(seed in any::<u64>(), class in class(), dim in 1usize..=3) {
        let inst = InstanceGenerator::new(seed, class, dim, dim + 4).unwrap().instance(0);
        let c = &inst.complex;
        prop_assert_eq!(&parse_facet_file(&write_facet_file(c)).unwrap(), c);
        for t in [barycentric(c), stellar(c, &c.facets()[0], "apex").unwrap()] {
            let back = parse_triangulation_file(&write_triangulation_file(&t)).unwrap();
            prop_assert!(back.same_as(&t));
        }
    }
}
