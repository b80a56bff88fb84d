//! Ordinary abelian surfaces over F_q: Weil polynomials
//! `X⁴ + aX³ + bX² + qaX + q²` and the b-number census.

use std::fmt;
use std::thread;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported q; keeps every intermediate product inside `i128`.
pub const MAX_Q: u64 = 1 << 40;

/// `q = pⁿ` with `p` an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FieldSize {
    pub p: u64,
    pub n: u32,
    pub q: u64,
}

impl FieldSize {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::UnsupportedPrime(p));
        }
        if n == 0 {
            return Err(Error::Parse("exponent n must be at least 1".into()));
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= MAX_Q)
            .ok_or_else(|| Error::Overflow(format!("{p}^{n} exceeds the supported range 2^40")))?;
        Ok(FieldSize { p, n, q })
    }
}

impl fmt::Display for FieldSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.n)
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Whether all roots of `X⁴ + aX³ + bX² + qaX + q²` have absolute value √q.
///
/// Equivalent to the real polynomial `T² + aT + (b − 2q)` having both roots
/// in `[−2√q, 2√q]`, which is decided with integers only:
/// `a² ≤ 16q`, `4b ≤ a² + 8q`, `b + 2q ≥ 0` and `4a²q ≤ (b + 2q)²`.
pub fn is_weil_surface(field: &FieldSize, a: i64, b: i64) -> bool {
    let (q, a, b) = (field.q as i128, a as i128, b as i128);
    let a2 = a * a;
    if a2 > 16 * q || 4 * b > a2 + 8 * q {
        return false;
    }
    let m = b + 2 * q;
    m >= 0 && 4 * a2 * q <= m * m
}

pub fn is_ordinary(p: u64, b: i64) -> bool {
    b.rem_euclid(p as i64) != 0
}

/// Legendre symbol `(m/p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre(m: i64, p: u64) -> i8 {
    let r = m.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let mut base = r as u128;
    let mut e = (p - 1) / 2;
    let modulus = p as u128;
    let mut acc: u128 = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

/// `a² − 4(b − 2q)`, the discriminant of the real quadratic.
pub fn surface_disc(field: &FieldSize, a: i64, b: i64) -> i128 {
    let (q, a, b) = (field.q as i128, a as i128, b as i128);
    a * a - 4 * (b - 2 * q)
}

/// 2 when p splits in the real quadratic subfield, otherwise 1.
pub fn b_number_bucket(field: &FieldSize, a: i64, b: i64) -> u8 {
    let d = surface_disc(field, a, b).rem_euclid(field.p as i128) as i64;
    if legendre(d, field.p) == 1 {
        2
    } else {
        1
    }
}

/// Exact census counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SurfaceCensus {
    pub total: u64,
    pub b1: u64,
    pub b2: u64,
}

impl SurfaceCensus {
    fn merge(self, other: Self) -> Result<Self> {
        let add = |x: u64, y: u64| {
            x.checked_add(y)
                .ok_or_else(|| Error::Overflow("census count".into()))
        };
        Ok(SurfaceCensus {
            total: add(self.total, other.total)?,
            b1: add(self.b1, other.b1)?,
            b2: add(self.b2, other.b2)?,
        })
    }
}

/// Inclusive `b` range of Weil surfaces for a fixed `a` (empty when `lo > hi`).
pub fn b_range(field: &FieldSize, a: i64) -> (i64, i64) {
    let q = field.q as i128;
    let a = a as i128;
    let hi = (a * a + 8 * q).div_euclid(4);
    let lo = ceil_sqrt(4 * a * a * q) - 2 * q;
    (lo as i64, hi as i64)
}

/// Largest `|a|` with `a² ≤ 16q`.
pub fn a_bound(field: &FieldSize) -> i64 {
    (field.q as f64 * 16.0).sqrt() as i64 + 1
}

fn ceil_sqrt(n: i128) -> i128 {
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while r * r < n {
        r += 1;
    }
    r
}

fn census_for_a(field: &FieldSize, a: i64, squares: &[bool]) -> SurfaceCensus {
    let mut c = SurfaceCensus::default();
    let (lo, hi) = b_range(field, a);
    let p = field.p as i64;
    let base = (a as i128 * a as i128 + 8 * field.q as i128).rem_euclid(p as i128) as i64;
    for b in lo..=hi {
        let r = b.rem_euclid(p);
        if r == 0 {
            continue;
        }
        debug_assert!(is_weil_surface(field, a, b));
        c.total += 1;
        let d = (base - 4 * r).rem_euclid(p);
        if d != 0 && squares[d as usize] {
            c.b2 += 1;
        } else {
            c.b1 += 1;
        }
    }
    c
}

/// Counts ordinary Weil surfaces over `field`, split across `workers`
/// threads by value of `a`. The result does not depend on `workers`.
pub fn surface_census(field: &FieldSize, workers: usize) -> Result<SurfaceCensus> {
    let p = field.p as usize;
    let mut squares = vec![false; p];
    for x in 1..p {
        squares[x * x % p] = true;
    }
    let bound = a_bound(field);
    let a_values: Vec<i64> = (-bound..=bound)
        .filter(|&a| (a as i128) * (a as i128) <= 16 * field.q as i128)
        .collect();
    let workers = workers.clamp(1, a_values.len().max(1));
    let chunk = a_values.len().div_ceil(workers).max(1);
    let parts: Vec<SurfaceCensus> = thread::scope(|scope| {
        let handles: Vec<_> = a_values
            .chunks(chunk)
            .map(|slice| {
                let squares = &squares;
                scope.spawn(move || {
                    slice.iter().map(|&a| census_for_a(field, a, squares)).fold(
                        SurfaceCensus::default(),
                        |x, y| SurfaceCensus {
                            total: x.total + y.total,
                            b1: x.b1 + y.b1,
                            b2: x.b2 + y.b2,
                        },
                    )
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("census worker"))
            .collect()
    });
    parts
        .into_iter()
        .try_fold(SurfaceCensus::default(), SurfaceCensus::merge)
}

/// Census by direct evaluation of every predicate over a box; slow, used to
/// cross-check [`surface_census`].
pub fn brute_force_census(field: &FieldSize) -> SurfaceCensus {
    let q = field.q as i64;
    let bound = a_bound(field);
    let mut c = SurfaceCensus::default();
    for a in -bound..=bound {
        for b in -8 * q..=8 * q {
            if is_weil_surface(field, a, b) && is_ordinary(field.p, b) {
                c.total += 1;
                match b_number_bucket(field, a, b) {
                    2 => c.b2 += 1,
                    _ => c.b1 += 1,
                }
            }
        }
    }
    c
}

/// An exact density with its 10-digit rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density(pub Ratio<u64>);

impl Density {
    pub fn decimal(&self) -> String {
        decimal_10(*self.0.numer(), *self.0.denom())
    }

    pub fn to_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl Serialize for Density {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            numerator: u64,
            denominator: u64,
            decimal: String,
        }
        Repr {
            numerator: *self.0.numer(),
            denominator: *self.0.denom(),
            decimal: self.decimal(),
        }
        .serialize(s)
    }
}

/// `num/den` rounded to 10 fractional digits, ties to even.
pub fn decimal_10(num: u64, den: u64) -> String {
    let scale: u128 = 10_000_000_000;
    let scaled = num as u128 * scale;
    let (den, mut quot) = (den as u128, scaled / den as u128);
    let rem = scaled % den;
    if 2 * rem > den || (2 * rem == den && quot % 2 == 1) {
        quot += 1;
    }
    format!("{}.{:010}", quot / scale, quot % scale)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub p: u64,
    pub n: u32,
    pub q: u64,
    pub total: u64,
    pub b1: u64,
    pub b2: u64,
    pub d1: Density,
    pub d2: Density,
}

impl DensityReport {
    pub const CSV_HEADER: &'static str = "q,total,b1,b2,d1,d2";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.q,
            self.total,
            self.b1,
            self.b2,
            self.d1.decimal(),
            self.d2.decimal()
        )
    }
}

pub fn density_report(field: &FieldSize) -> Result<DensityReport> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get());
    density_report_with(field, workers)
}

pub fn density_report_with(field: &FieldSize, workers: usize) -> Result<DensityReport> {
    let c = surface_census(field, workers)?;
    if c.total == 0 {
        return Err(Error::Overflow(format!(
            "no ordinary classes over q = {}",
            field.q
        )));
    }
    Ok(DensityReport {
        p: field.p,
        n: field.n,
        q: field.q,
        total: c.total,
        b1: c.b1,
        b2: c.b2,
        d1: Density(Ratio::new(c.b1, c.total)),
        d2: Density(Ratio::new(c.b2, c.total)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, n: u32) -> FieldSize {
        FieldSize::new(p, n).unwrap()
    }

    #[test]
    fn field_validation() {
        assert_eq!(FieldSize::new(2, 3), Err(Error::UnsupportedPrime(2)));
        assert_eq!(FieldSize::new(9, 1), Err(Error::UnsupportedPrime(9)));
        assert!(FieldSize::new(3, 0).is_err());
        assert!(FieldSize::new(3, 40).is_err());
        assert_eq!(f(3, 8).q, 6561);
    }

    #[test]
    fn weil_examples() {
        let q3 = f(3, 1);
        assert!(!is_weil_surface(&q3, 7, 0));
        assert!(!is_weil_surface(&q3, 0, 7));
        assert!(is_weil_surface(&q3, 0, 6));
        assert!(is_weil_surface(&q3, 0, -6));
        assert!(!is_weil_surface(&q3, 0, -7));
    }

    #[test]
    fn ordinary_and_legendre() {
        assert!(!is_ordinary(3, 6));
        assert!(is_ordinary(3, 1));
        assert!(!is_ordinary(5, 10));
        assert!(is_ordinary(5, -3));
        assert_eq!(legendre(1, 3), 1);
        assert_eq!(legendre(3, 3), 0);
        assert_eq!(legendre(2, 3), -1);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 7), -1);
    }

    #[test]
    fn buckets() {
        let q5 = f(5, 1);
        // disc = 1 - 4(b - 10) with b = 9 gives 5: ramified
        assert_eq!(b_number_bucket(&q5, 1, 9), 1);
        // a = 0, b = 9: disc = 4, a square
        assert_eq!(b_number_bucket(&q5, 0, 9), 2);
        // a = 0, b = 8: disc = 8 ≡ 3, a non-residue mod 5
        assert_eq!(b_number_bucket(&q5, 0, 8), 1);
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(decimal_10(61, 180), "0.3388888889");
        assert_eq!(decimal_10(1, 3), "0.3333333333");
        assert_eq!(decimal_10(1, 1), "1.0000000000");
        // exact ties: 1/2^11 = 0.00048828125
        assert_eq!(decimal_10(1, 2048), "0.0004882812");
        assert_eq!(decimal_10(3, 2048), "0.0014648438");
    }

    #[test]
    fn fast_census_matches_brute_force() {
        for (p, n) in [(3, 1), (3, 2), (5, 1), (7, 1)] {
            let field = f(p, n);
            assert_eq!(
                surface_census(&field, 3).unwrap(),
                brute_force_census(&field),
                "q={}",
                field.q
            );
        }
    }
}
