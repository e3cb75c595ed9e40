use proptest::prelude::*;
use rand::SeedableRng;

use skew_core::catalog::{self, from_spec};
use skew_core::completion::Nilpotency;
use skew_core::oracle::single_step_oracle_mul;
use skew_core::parser::{parse_element, print};
use skew_core::random;
use skew_core::{Degree, Element, Exec, Presentation};

fn algebra(which: u8) -> Presentation {
    let spec = match which % 4 {
        0 => "qmat2",
        1 => "kn2",
        2 => "qmat(2, base=central-series:6)",
        _ => "kn(2, base=central-series:6)",
    };
    from_spec(spec).unwrap()
}

fn sample(p: &Presentation, seed: u64, below: usize) -> Element {
    let mut rng = random::SampleRng::seed_from_u64(seed);
    random::element(&mut rng, p, 3, 4, below)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(which in 0u8..4, s in any::<u64>()) {
        let p = algebra(which);
        let (a, b, c) = (sample(&p, s, 4), sample(&p, s ^ 1, 4), sample(&p, s ^ 2, 4));
        let left = p.nf_mul(&p.nf_mul(&a, &b).unwrap(), &c).unwrap();
        let right = p.nf_mul(&a, &p.nf_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn recursive_product_matches_rewriting(which in 0u8..4, s in any::<u64>()) {
        let p = algebra(which);
        let (a, b) = (sample(&p, s, 4), sample(&p, s ^ 7, 4));
        prop_assert_eq!(p.nf_mul(&a, &b).unwrap(), single_step_oracle_mul(&p, &a, &b).unwrap());
    }

    #[test]
    fn sequential_and_parallel_agree(which in 0u8..4, s in any::<u64>()) {
        let p = algebra(which);
        let (a, b) = (sample(&p, s, 4), sample(&p, s ^ 3, 4));
        prop_assert_eq!(
            p.mul_with(&a, &b, Exec::Sequential).unwrap(),
            p.mul_with(&a, &b, Exec::Parallel).unwrap()
        );
    }

    #[test]
    fn delta_is_a_left_tau_derivation(which in 0u8..4, s in any::<u64>(), level in 1usize..4) {
        let p = algebra(which);
        let (a, b) = (sample(&p, s, level), sample(&p, s ^ 5, level));
        let ab = p.nf_mul(&a, &b).unwrap();
        let lhs = p.apply_delta(level, &ab).unwrap();
        let rhs = p
            .nf_mul(&p.apply_tau(level, &a).unwrap(), &p.apply_delta(level, &b).unwrap())
            .unwrap()
            .try_add(&p.nf_mul(&p.apply_delta(level, &a).unwrap(), &b).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_round_trip(which in 0u8..4, s in any::<u64>()) {
        let p = algebra(which);
        let a = sample(&p, s, 4);
        prop_assert_eq!(parse_element(&print(&a, &p), &p).unwrap(), a);
    }

    #[test]
    fn degree_is_additive(which in 0u8..4, s in any::<u64>()) {
        let p = algebra(which);
        let mut rng = random::SampleRng::seed_from_u64(s);
        let a = random::nonzero_element(&mut rng, &p, 3, 3, 4);
        let b = random::nonzero_element(&mut rng, &p, 3, 3, 4);
        let ab = p.nf_mul(&a, &b).unwrap();
        prop_assert_eq!(ab.min_degree(), a.min_degree() + b.min_degree());
    }

    #[test]
    fn unit_series_invert(which in 0u8..4, s in any::<u64>()) {
        let p = algebra(which);
        let mut rng = random::SampleRng::seed_from_u64(s);
        let f = random::series(&mut rng, &p, 5, 4, 4, true);
        let g = p.ts_invert(&f).unwrap();
        prop_assert_eq!(p.ts_mul(&f, &g).unwrap(), p.series_one(5).unwrap());
        prop_assert_eq!(p.ts_mul(&g, &f).unwrap(), p.series_one(5).unwrap());
    }
}

#[test]
fn polynomial_delta_is_locally_nilpotent() {
    let p = from_spec("qmat2").unwrap();
    let y22 = p.index_of("y22").unwrap();
    let f = parse_element("y11^6 + y12*y11^3 - 2*y21", &p).unwrap();
    assert!(matches!(
        p.poly_nilpotency_probe(y22, &f, 20).unwrap(),
        Nilpotency::Nilpotent(k) if k <= 7
    ));
}

// Each iterate of delta_22 on the geometric series in y11 starts two degrees
// higher, so K nonzero iterates need order 2K.
#[test]
fn geometric_witness_survives_at_double_order() {
    let p = from_spec("qmat2").unwrap();
    let (y11, y22) = (p.index_of("y11").unwrap(), p.index_of("y22").unwrap());
    let f = p.geometric_series(y11, 16).unwrap();
    let probe = p.series_nilpotency_probe(y22, &f, 8).unwrap();
    assert!(probe.all_nonzero());
    let expected: Vec<Degree> = (1..=8).map(|k| Degree::Finite(2 * k)).collect();
    assert_eq!(probe.iterates, expected);

    let short = p.series_nilpotency_probe(y22, &p.geometric_series(y11, 8).unwrap(), 8).unwrap();
    assert_eq!(short.nonzero_count(), 4);
}

#[test]
fn catalog_families_pass_both_checkers() {
    for n in 1..=3 {
        for p in [
            catalog::quantum_matrices(&catalog::QuantumMatrixParams::defaults(n)).unwrap(),
            catalog::horton_kn(&catalog::HortonParams::defaults(n)).unwrap(),
        ] {
            assert!(skew_core::check::check_well_defined(&p).passed());
            assert!(skew_core::check::check_setup(&p).passed());
        }
    }
}
