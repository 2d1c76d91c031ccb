use coprime_ap::arith::Integer;
use coprime_ap::crt::{solve, Congruence, CongruenceSystem, CrtOutcome};
use coprime_ap::decomposition::{coprime_length_bound, delta_capped, CappedDelta};
use coprime_ap::pillai::{
    construct_counterexample_ring, coprime_term_via_consecutive, coprime_to_all, find_coprime_term,
    multiples, squares_ap_triples, transfer_ap_to_consecutive, verify_bound_sweep, CoprimeReport,
    SweepReport,
};
use coprime_ap::rings::{gcd_ring, IMAGINARY_ALLOWLIST, REAL_ALLOWLIST};
use coprime_ap::{ArithmeticProgression, Ring};
use num_integer::Integer as _;
use proptest::prelude::*;

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (-10_000i64..=10_000, -10_000i64..=10_000).prop_filter("coprime", |(a, d)| a.gcd(d) == 1)
}

#[test]
fn sharpness_in_every_supported_ring() {
    for &m in IMAGINARY_ALLOWLIST.iter().chain(REAL_ALLOWLIST.iter()) {
        let ring = Ring::quadratic(m).unwrap();
        let CappedDelta::Finite(delta) = delta_capped(ring).unwrap() else { continue };
        assert_eq!(coprime_length_bound(ring).unwrap(), 16.min(1 + delta as usize));
        for n in (delta as usize + 2)..17 {
            let c = construct_counterexample_ring(ring, n).unwrap();
            for i in 1..=n {
                assert!(!coprime_to_all(i, &c.progression).unwrap(), "{ring}, n = {n}, index {i}");
            }
        }
    }
}

#[test]
fn bound_sweeps_in_small_rings() {
    for &m in IMAGINARY_ALLOWLIST.iter().chain(REAL_ALLOWLIST.iter()) {
        let ring = Ring::quadratic(m).unwrap();
        let n_max = coprime_length_bound(ring).unwrap();
        let report = verify_bound_sweep(ring, 3, n_max).unwrap();
        assert!(report.violations.is_empty(), "{ring}: {:?}", report.violations.first());
    }
}

#[test]
fn gaussian_crt_matches_exhaustive_search() {
    // residues mod a Gaussian modulus b are represented by a box of side |N(b)|
    let g = Ring::gaussian();
    let moduli = [g.element(1, 1).unwrap(), g.element(2, 1).unwrap(), g.element(2, -1).unwrap(), g.embed(3), g.element(1, 2).unwrap()];
    for v1 in &moduli {
        for v2 in &moduli {
            let (n1, n2) = (v1.norm().to_i64().unwrap(), v2.norm().to_i64().unwrap());
            for u1 in 0..n1 {
                for u2 in 0..n2 {
                    let (u1, u2) = (g.embed(u1), g.embed(u2));
                    let sys = CongruenceSystem::new(vec![
                        Congruence::new(u1.clone(), v1.clone()).unwrap(),
                        Congruence::new(u2.clone(), v2.clone()).unwrap(),
                    ])
                    .unwrap();
                    let side = n1 * n2;
                    let brute = (0..side)
                        .flat_map(|x| (0..side).map(move |y| (x, y)))
                        .map(|(x, y)| g.element(x, y).unwrap())
                        .find(|z| sys.congruences().iter().all(|c| c.is_satisfied_by(z)));
                    match solve(&sys).unwrap() {
                        CrtOutcome::Solved(sol) => {
                            assert!(brute.is_some());
                            assert!(sys.congruences().iter().all(|c| c.is_satisfied_by(&sol.value)));
                        }
                        CrtOutcome::Incompatible(_) => assert!(brute.is_none(), "{u1} mod {v1}, {u2} mod {v2}"),
                    }
                }
            }
        }
    }
}

#[test]
fn squares_are_square_progressions() {
    for (a, b, c) in squares_ap_triples(60).unwrap() {
        assert_eq!(&a + &c, &b * 2i64);
        for s in [&a, &b, &c] {
            let r = coprime_ap::arith::nth_root_floor(s, 2);
            assert_eq!(&r * &r, *s);
        }
        assert!(a.gcd(&(&b - &a)).is_one());
    }
}

#[test]
fn reports_round_trip_through_json() {
    let ap = ArithmeticProgression::integers(2, 1, 5).unwrap();
    let report = find_coprime_term(&ap).unwrap();
    let back: CoprimeReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(back, report);
    let sweep = verify_bound_sweep(Ring::gaussian(), 1, 6).unwrap();
    let back: SweepReport = serde_json::from_str(&serde_json::to_string(&sweep).unwrap()).unwrap();
    assert_eq!(back, sweep);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn multiples_respect_ceiling((a, d) in coprime_pair(), n in 2usize..=16, m in 2i64..=16) {
        prop_assume!(m as usize <= n);
        let terms = ArithmeticProgression::integers(a, d, n).unwrap().terms();
        let count = multiples(&Ring::Integers.embed(m), &terms).unwrap().len();
        prop_assert!(count <= n.div_ceil(m as usize));
    }

    #[test]
    fn transfer_is_sound((a, d) in coprime_pair(), n in 1usize..=16) {
        let ap = ArithmeticProgression::integers(a, d, n).unwrap();
        let z = transfer_ap_to_consecutive(&ap).unwrap();
        for (k, t) in ap.terms().iter().enumerate() {
            let diff = &z - &Integer::from(k as i64 + 1);
            if t.is_zero() {
                prop_assert!(diff.is_zero());
            } else {
                prop_assert!(diff.is_multiple_of(t.x()));
            }
        }
        let k = coprime_term_via_consecutive(&ap).unwrap();
        prop_assert!(k.is_some());
        prop_assert!(coprime_to_all(k.unwrap(), &ap).unwrap());
    }

    #[test]
    fn reports_are_consistent((a, d) in coprime_pair(), n in 1usize..=24) {
        let ap = ArithmeticProgression::integers(a, d, n).unwrap();
        let report = find_coprime_term(&ap).unwrap();
        if n <= 16 {
            prop_assert!(report.witness.is_some());
        }
        if let Some(w) = report.witness {
            prop_assert!(coprime_to_all(w, &ap).unwrap());
            prop_assert!((1..w).all(|i| report.pairwise_offenders.contains_key(&i)));
        } else {
            prop_assert_eq!(report.pairwise_offenders.len(), n);
        }
        for (&i, &j) in &report.pairwise_offenders {
            let g = gcd_ring(&ap.term(i).unwrap(), &ap.term(j).unwrap()).unwrap();
            prop_assert!(!g.is_unit());
        }
    }
}
