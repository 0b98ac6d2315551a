//! Exact elements of `Z[ζ_m]` in the power basis modulo the `m`-th
//! cyclotomic polynomial.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::grp::prime_factors;

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

pub fn euler_phi(m: u32) -> u32 {
    prime_factors(m as u64)
        .into_iter()
        .fold(m, |acc, p| acc / p as u32 * (p as u32 - 1))
}

/// Coefficients (low degree first) of the monic cyclotomic polynomial `Φ_m`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d of m
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        poly = exact_div_monic(&poly, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(poly);
    cache.lock().unwrap().insert(m, poly.clone());
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i];
        if c != 0 {
            quot[i - dd] = c;
            for (j, &b) in den.iter().enumerate() {
                rem[i - dd + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of `Z[ζ_m]` stored as its coordinates in `1, ζ, …, ζ^{φ(m)-1}`.
///
/// Equality compares values, not representations: operands of different
/// conductors are lifted to the common multiple first.
#[derive(Clone, Serialize, Deserialize)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![0; euler_phi(conductor) as usize],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![n],
        }
    }

    /// `ζ_m^k`.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        let mut raw = vec![0i64; m as usize];
        raw[k.rem_euclid(m as i64) as usize] = 1;
        Cyclotomic::from_exponents(m, &raw)
    }

    /// `Σ raw[j] ζ_m^j` for any number of terms; exponents wrap modulo `m`.
    pub fn from_exponents(m: u32, raw: &[i64]) -> Self {
        let mut folded = vec![0i64; m as usize];
        for (j, &c) in raw.iter().enumerate() {
            folded[j % m as usize] += c;
        }
        Cyclotomic {
            conductor: m,
            coeffs: reduce_mod_phi(folded, m),
        }
    }

    /// Builds from power-basis coordinates, checking their count.
    pub fn from_coeffs(m: u32, coeffs: Vec<i64>) -> Option<Self> {
        (m > 0 && coeffs.len() == euler_phi(m) as usize).then_some(Cyclotomic {
            conductor: m,
            coeffs,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The integer value, if rational.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then(|| self.coeffs[0])
    }

    /// The same value written over `Q(ζ_n)`; `n` must be a multiple of the conductor.
    pub fn lift_to(&self, n: u32) -> Cyclotomic {
        assert!(
            n % self.conductor == 0,
            "{n} is not a multiple of {}",
            self.conductor
        );
        if n == self.conductor {
            return self.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut raw = vec![0i64; n as usize];
        for (j, &c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c;
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce_mod_phi(raw, n),
        }
    }

    /// Image under `ζ ↦ ζ^k` with `k` prime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let m = self.conductor as i64;
        let mut raw = vec![0i64; m as usize];
        for (j, &c) in self.coeffs.iter().enumerate() {
            raw[(j as i64 * k).rem_euclid(m) as usize] += c;
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: reduce_mod_phi(raw, self.conductor),
        }
    }

    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    pub fn scale(&self, k: i64) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Division by an integer, if every coordinate is divisible.
    pub fn div_exact(&self, d: i64) -> Option<Cyclotomic> {
        if d == 0 || self.coeffs.iter().any(|c| c % d != 0) {
            return None;
        }
        Some(Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c / d).collect(),
        })
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let n = lcm(self.conductor, other.conductor);
        (self.lift_to(n), other.lift_to(n))
    }

    /// Lexicographic comparison of coordinates over `Q(ζ_n)`.
    pub fn cmp_at(&self, other: &Cyclotomic, n: u32) -> Ordering {
        self.lift_to(n).coeffs.cmp(&other.lift_to(n).coeffs)
    }
}

fn reduce_mod_phi(mut raw: Vec<i64>, m: u32) -> Vec<i64> {
    let phi = cyclotomic_polynomial(m);
    let d = phi.len() - 1;
    for i in (d..raw.len()).rev() {
        let c = raw[i];
        if c != 0 {
            for (j, &b) in phi.iter().enumerate() {
                raw[i - d + j] -= c * b;
            }
        }
    }
    raw.truncate(d);
    raw.resize(d, 0);
    raw
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-1)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let m = a.conductor as usize;
        let mut raw = vec![0i64; m];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                raw[(i + j) % m] += x * y;
            }
        }
        Cyclotomic {
            conductor: a.conductor,
            coeffs: reduce_mod_phi(raw, a.conductor),
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            write!(f, "{sign}")?;
            match (j, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => write!(f, "z{}^{j}", self.conductor)?,
                _ => write!(f, "{mag}*z{}^{j}", self.conductor)?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
        assert_eq!(euler_phi(420), 96);
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for m in [1u32, 2, 3, 4, 6, 8, 9, 12, 15] {
            let mut acc = Cyclotomic::zero(m);
            for k in 0..m as i64 {
                acc = &acc + &Cyclotomic::root_of_unity(m, k);
            }
            let expect = if m == 1 { 1 } else { 0 };
            assert_eq!(acc.as_integer(), Some(expect), "m = {m}");
        }
    }

    #[test]
    fn equality_across_conductors() {
        // ζ_3 = ζ_6^2, and -1 = ζ_2
        assert_eq!(
            Cyclotomic::root_of_unity(3, 1),
            Cyclotomic::root_of_unity(6, 2)
        );
        assert_eq!(Cyclotomic::root_of_unity(2, 1), Cyclotomic::from_int(-1));
        assert_ne!(
            Cyclotomic::root_of_unity(4, 1),
            Cyclotomic::root_of_unity(4, 3)
        );
        // ζ_3 + ζ_3^2 = -1
        let s = &Cyclotomic::root_of_unity(3, 1) + &Cyclotomic::root_of_unity(3, 2);
        assert_eq!(s, Cyclotomic::from_int(-1));
    }

    #[test]
    fn norm_of_a_root_is_one() {
        let z = Cyclotomic::root_of_unity(12, 5);
        assert_eq!(&z * &z.conj(), Cyclotomic::from_int(1));
    }

    proptest! {
        #[test]
        fn exponents_add_under_multiplication(m in 1u32..40, a in -50i64..50, b in -50i64..50) {
            let prod = &Cyclotomic::root_of_unity(m, a) * &Cyclotomic::root_of_unity(m, b);
            prop_assert_eq!(prod, Cyclotomic::root_of_unity(m, a + b));
        }

        #[test]
        fn ring_laws_hold(m in 1u32..25,
                          x in proptest::collection::vec(-5i64..5, 25),
                          y in proptest::collection::vec(-5i64..5, 25),
                          z in proptest::collection::vec(-5i64..5, 25)) {
            let x = Cyclotomic::from_exponents(m, &x);
            let y = Cyclotomic::from_exponents(m, &y);
            let z = Cyclotomic::from_exponents(2 * m, &z);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(x.lift_to(6 * m), x.clone());
            prop_assert!((&x - &x).is_zero());
        }
    }
}
