use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 8]>;

/// A monomial as a dense exponent vector.
///
/// Variable positions follow the layout `x_1..x_r, y_1..y_r, z_1..z_s, w_1..w_s`.
/// The derived `Ord` is plain lexicographic comparison of exponent vectors and
/// only serves set storage; use [`MonomialOrder`](super::MonomialOrder) for
/// term orders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(smallvec::smallvec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(Exponents::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.0[index]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`, componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / divisor`, if `divisor | self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), divisor.nvars());
        self.0
            .iter()
            .zip(divisor.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Exponents>>()
            .map(Monomial)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.nvars() != other.nvars() {
            return Err(Error::VariableCount(self.nvars(), other.nvars()));
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Exponents>>()
            .map(Monomial)
            .ok_or(Error::ExponentOverflow)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// No variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variable indices with multiplicity, in increasing index order.
    pub fn occurrences(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u16] {
        &mut self.0
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.checked_mul(rhs).expect("monomial product")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.0.as_slice())
    }
}

/// All monomials in `nvars` variables of total degree exactly `degree`,
/// in decreasing lexicographic order of exponent vectors.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left as u16;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e as u16;
            rec(pos + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u16; nvars];
    rec(0, degree, &mut cur, &mut out);
    out
}
