//! Arithmetic in `Z/pZ` and in the binary field `GF(2^k)` that carries a
//! primitive `p`-th root of unity.
//!
//! Field elements are `k`-bit masks where bit `i` is the coefficient of `t^i`.
//! The field is always the smallest one containing the roots of unity, i.e.
//! `k` is the multiplicative order of 2 modulo `p`, and both the modulus and
//! the generator are chosen with smallest-bitmask tie-breaking so that `zeta`
//! is reproducible bit for bit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: u32 = 16;

/// Trial-division primality test; inputs here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue class modulo `modulus`, always stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ZmodP {
    value: u64,
    modulus: u64,
}

impl ZmodP {
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        Ok(Self::reduce(value, modulus))
    }

    pub(crate) fn reduce(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        ZmodP {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn zero(modulus: u64) -> Self {
        ZmodP { value: 0, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for ZmodP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ZmodP {
    type Output = ZmodP;

    fn add(self, rhs: ZmodP) -> ZmodP {
        debug_assert_eq!(self.modulus, rhs.modulus);
        ZmodP {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for ZmodP {
    type Output = ZmodP;

    fn neg(self) -> ZmodP {
        ZmodP {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for ZmodP {
    type Output = ZmodP;

    fn sub(self, rhs: ZmodP) -> ZmodP {
        self + (-rhs)
    }
}

impl Mul for ZmodP {
    type Output = ZmodP;

    fn mul(self, rhs: ZmodP) -> ZmodP {
        debug_assert_eq!(self.modulus, rhs.modulus);
        ZmodP {
            value: (self.value * rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

/// Least `k >= 1` with `2^k = 1 (mod p)`.
pub fn multiplicative_order_of_two(p: u64) -> Result<u32> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let mut k = 1;
    let mut acc = 2 % p;
    while acc != 1 {
        acc = (acc * 2) % p;
        k += 1;
    }
    Ok(k)
}

fn poly_degree(a: u64) -> Option<u32> {
    (a != 0).then(|| 63 - a.leading_zeros())
}

/// Remainder of `a` modulo `b` in `GF(2)[t]`.
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b).expect("division by the zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility over `GF(2)` by trial division with every polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(poly: u64) -> bool {
    let Some(deg) = poly_degree(poly) else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    (2u64..(1u64 << (deg / 2 + 1))).all(|d| poly_rem(poly, d) != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `GF(2^k)` together with a distinguished primitive `p`-th root of unity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BinaryField {
    pub p: u64,
    pub k: u32,
    pub modulus_poly: u32,
    pub zeta: u32,
}

impl BinaryField {
    /// Builds the minimal binary field containing a primitive `p`-th root of
    /// unity.
    pub fn build(p: u64) -> Result<Self> {
        let k = multiplicative_order_of_two(p)?;
        if k > MAX_EXTENSION_DEGREE {
            return Err(Error::FieldTooLarge { p, k });
        }
        let modulus_poly = ((1u64 << k)..(1u64 << (k + 1)))
            .find(|&m| is_irreducible(m))
            .expect("an irreducible polynomial exists in every degree") as u32;
        let mut field = BinaryField {
            p,
            k,
            modulus_poly,
            zeta: 1,
        };
        let group_order = field.group_order();
        let factors = prime_factors(group_order);
        let generator = (2..(1u32 << k))
            .find(|&g| factors.iter().all(|&q| field.pow(g, group_order / q) != 1))
            .unwrap_or(1);
        field.zeta = field.pow(generator, group_order / p);
        Ok(field)
    }

    /// Order of the multiplicative group, `2^k - 1`.
    pub fn group_order(&self) -> u64 {
        (1u64 << self.k) - 1
    }

    /// Number of field elements.
    pub fn size(&self) -> u32 {
        1u32 << self.k
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    /// Carry-less product reduced by the modulus.
    pub fn mul(&self, mut a: u32, mut b: u32) -> u32 {
        let top = 1u32 << self.k;
        let mut acc = 0u32;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus_poly;
            }
        }
        acc
    }

    pub fn pow(&self, base: u32, mut exp: u64) -> u32 {
        let mut result = 1u32;
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, square);
            }
            square = self.mul(square, square);
            exp >>= 1;
        }
        result
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.group_order() - 1))
    }

    /// `zeta^e` for an exponent taken modulo `p`.
    pub fn zeta_pow(&self, e: u64) -> u32 {
        self.pow(self.zeta, e % self.p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("field descriptor serializes")
    }
}
