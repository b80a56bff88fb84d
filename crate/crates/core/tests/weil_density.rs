mod common;

use common::modulus_defect;
use deuring::weil::{
    brute_force_census, decimal_10, density_report_with, surface_census, surface_disc,
};
use deuring::{b_number_bucket, density_report, is_ordinary, is_weil_surface, legendre, FieldSize};
use proptest::prelude::*;

/// A fourfold root at ±√q (a = ±4√q) limits double precision root finding
/// to about 3e-5; non-Weil grid points stay above 0.39.
const ORACLE_TOLERANCE: f64 = 1e-4;

fn field(p: u64, n: u32) -> FieldSize {
    FieldSize::new(p, n).unwrap()
}

#[test]
fn weil_examples() {
    let f = field(3, 1);
    for b in -100..100 {
        assert!(!is_weil_surface(&f, 7, b));
    }
    assert!(!is_weil_surface(&f, 0, 7));
    assert!(is_weil_surface(&f, 0, 6));
    assert!(is_weil_surface(&f, 0, -6));
    assert!(!is_weil_surface(&f, 0, -7));
    assert!(modulus_defect(3, 0, -6) < ORACLE_TOLERANCE);
    assert!(modulus_defect(3, 0, -7) > ORACLE_TOLERANCE);
}

#[test]
fn ordinary_and_legendre_examples() {
    assert!(!is_ordinary(3, 6));
    assert!(is_ordinary(3, 1));
    assert!(!is_ordinary(5, 10));
    assert!(is_ordinary(3, -1));
    assert_eq!(legendre(1, 3), 1);
    assert_eq!(legendre(3, 3), 0);
    assert_eq!(legendre(2, 3), -1);
    assert_eq!(legendre(-1, 5), 1);
    assert_eq!(legendre(-1, 7), -1);
}

#[test]
fn legendre_matches_squares() {
    for p in [3u64, 5, 7, 11, 13] {
        for m in -30i64..30 {
            let r = m.rem_euclid(p as i64) as u64;
            let oracle = if r == 0 {
                0
            } else if (1..p).any(|x| x * x % p == r) {
                1
            } else {
                -1
            };
            assert_eq!(legendre(m, p), oracle, "({m}/{p})");
        }
    }
}

#[test]
fn buckets_follow_discriminant() {
    let f = field(3, 1);
    for a in -6..=6 {
        for b in -24..=24 {
            if !is_weil_surface(&f, a, b) || !is_ordinary(3, b) {
                continue;
            }
            let d = surface_disc(&f, a, b);
            assert_eq!(d, (a * a) as i128 - 4 * (b as i128 - 6));
            let want = if legendre(d.rem_euclid(3) as i64, 3) == 1 {
                2
            } else {
                1
            };
            assert_eq!(b_number_bucket(&f, a, b), want);
        }
    }
}

#[test]
fn field_validation() {
    assert!(FieldSize::new(2, 1).is_err());
    assert!(FieldSize::new(9, 1).is_err());
    assert!(FieldSize::new(3, 0).is_err());
    assert!(FieldSize::new(3, 40).is_err());
    assert_eq!(field(3, 8).q, 6561);
}

#[test]
fn oracle_equivalence_on_grid() {
    for (p, n) in [(3u64, 1u32), (5, 1), (3, 2)] {
        let f = field(p, n);
        let q = f.q as i64;
        let amax = (4.0 * (q as f64).sqrt()).ceil() as i64;
        let mut disagreements = Vec::new();
        for a in -amax..=amax {
            for b in -8 * q..=8 * q {
                let oracle = modulus_defect(q as u64, a, b) < ORACLE_TOLERANCE;
                if oracle != is_weil_surface(&f, a, b) {
                    disagreements.push((a, b));
                }
            }
        }
        assert!(disagreements.is_empty(), "q={q}: {disagreements:?}");
    }
}

#[test]
fn oracle_has_a_clear_gap() {
    for (p, n) in [(3u64, 1u32), (5, 1), (3, 2)] {
        let f = field(p, n);
        let q = f.q as i64;
        let amax = (4.0 * (q as f64).sqrt()).ceil() as i64;
        let (mut inside, mut outside) = (0.0f64, f64::MAX);
        for a in -amax..=amax {
            for b in -8 * q..=8 * q {
                let d = modulus_defect(q as u64, a, b);
                if is_weil_surface(&f, a, b) {
                    inside = inside.max(d);
                } else {
                    outside = outside.min(d);
                }
            }
        }
        assert!(inside < ORACLE_TOLERANCE / 3.0, "q={q}: {inside:e}");
        assert!(outside > 0.3, "q={q}: {outside:e}");
    }
}

#[test]
fn sign_of_a_is_symmetric() {
    let f = field(3, 1);
    for a in -7..=7 {
        for b in -30..=30 {
            assert_eq!(is_weil_surface(&f, a, b), is_weil_surface(&f, -a, b));
        }
    }
}

#[test]
fn fast_census_matches_brute_force() {
    for (p, n) in [
        (3u64, 1u32),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
        (7, 1),
        (11, 1),
    ] {
        let f = field(p, n);
        assert_eq!(
            surface_census(&f, 3).unwrap(),
            brute_force_census(&f),
            "q={}",
            f.q
        );
    }
}

#[test]
fn frozen_small_counts() {
    // computed by brute_force_census
    let c = surface_census(&field(3, 1), 1).unwrap();
    assert_eq!((c.total, c.b1, c.b2), (40, 32, 8));
    let c = surface_census(&field(5, 1), 1).unwrap();
    assert_eq!((c.total, c.b1, c.b2), (102, 68, 34));
}

#[test]
fn worker_count_does_not_matter() {
    let f = field(3, 5);
    let one = surface_census(&f, 1).unwrap();
    for w in [2, 3, 7, 64] {
        assert_eq!(surface_census(&f, w).unwrap(), one);
        assert_eq!(
            density_report_with(&f, w).unwrap(),
            density_report_with(&f, 1).unwrap()
        );
    }
}

#[test]
fn report_is_consistent() {
    for (p, n) in [(3u64, 1u32), (3, 2), (5, 1), (5, 3)] {
        let r = density_report(&field(p, n)).unwrap();
        assert_eq!(r.b1 + r.b2, r.total);
        assert_eq!(r.d1.0 + r.d2.0, 1.into());
        assert_eq!(*r.d1.0.numer() * r.total / *r.d1.0.denom(), r.b1);
    }
}

#[test]
fn csv_and_json() {
    let r = density_report(&field(3, 1)).unwrap();
    assert_eq!(deuring::DensityReport::CSV_HEADER, "q,total,b1,b2,d1,d2");
    assert_eq!(r.csv_row(), "3,40,32,8,0.8000000000,0.2000000000");
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["d1"]["numerator"], 4);
    assert_eq!(v["d1"]["denominator"], 5);
    assert_eq!(v["d1"]["decimal"], "0.8000000000");
}

#[test]
fn decimal_rounding() {
    assert_eq!(decimal_10(1, 3), "0.3333333333");
    assert_eq!(decimal_10(2, 3), "0.6666666667");
    assert_eq!(decimal_10(1, 1), "1.0000000000");
    // exact ties round to even
    assert_eq!(decimal_10(1, 2 * 10_000_000_000), "0.0000000000");
    assert_eq!(decimal_10(3, 2 * 10_000_000_000), "0.0000000002");
}

proptest! {
    #[test]
    fn weil_predicate_matches_oracle(a in -12i64..=12, b in -72i64..=72) {
        let f = field(3, 2);
        let oracle = modulus_defect(9, a, b) < ORACLE_TOLERANCE;
        prop_assert_eq!(is_weil_surface(&f, a, b), oracle);
    }

    #[test]
    fn buckets_partition(p in prop::sample::select(vec![3u64, 5, 7, 11, 13]), n in 1u32..3) {
        let f = field(p, n);
        let c = surface_census(&f, 2).unwrap();
        prop_assert_eq!(c.b1 + c.b2, c.total);
    }
}
