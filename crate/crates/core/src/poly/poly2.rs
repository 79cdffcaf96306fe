use std::collections::BTreeSet;
use std::ops::{Add, AddAssign, Mul};

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A polynomial over `GF(2)`: the set of monomials with coefficient 1.
///
/// Addition is symmetric difference of the term sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Poly2 {
    terms: BTreeSet<Monomial>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly2 {
            terms: BTreeSet::from([m]),
        }
    }

    /// Sums the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut p = Poly2::zero();
        for t in terms {
            p.toggle(t);
        }
        p
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.is_monomial() {
            self.terms.first()
        } else {
            None
        }
    }

    /// Adds a single monomial.
    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub(crate) fn remove(&mut self, m: &Monomial) -> bool {
        self.terms.remove(m)
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.first().map(Monomial::nvars)
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn lm(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.terms.iter().reduce(|a, b| order.max(a, b))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        self.lm(order).cloned().ok_or(Error::ZeroPolynomial)
    }

    /// Terms in descending order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<&Monomial> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b, a));
        v
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly2 {
        // Shifting by a monomial is injective, so no cancellation happens.
        Poly2 {
            terms: self.terms.iter().map(|t| t * m).collect(),
        }
    }

    pub fn map_monomials<F: FnMut(&Monomial) -> Monomial>(&self, f: F) -> Poly2 {
        Poly2::from_terms(self.terms.iter().map(f))
    }
}

impl From<Monomial> for Poly2 {
    fn from(m: Monomial) -> Self {
        Poly2::monomial(m)
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        for t in &rhs.terms {
            self.toggle(t.clone());
        }
    }
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        Poly2 {
            terms: self.terms.symmetric_difference(&rhs.terms).cloned().collect(),
        }
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for t in &rhs.terms {
            out += &self.mul_monomial(t);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn characteristic_two() {
        let f = Poly2::from_terms([m(&[3, 0]), m(&[0, 3])]);
        assert!((&f + &f).is_zero());
        assert_eq!(Poly2::from_terms([m(&[1, 0]), m(&[1, 0])]), Poly2::zero());
        // (x + y)^2 = x^2 + y^2
        let s = Poly2::from_terms([m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(&s * &s, Poly2::from_terms([m(&[2, 0]), m(&[0, 2])]));
    }

    #[test]
    fn leading_monomials() {
        let f = Poly2::from_terms([m(&[3, 0]), m(&[0, 3])]);
        let lex = MonomialOrder::lex(2);
        let swapped = lex.clone().with_perm(vec![1, 0]).unwrap();
        assert_eq!(f.leading_monomial(&lex).unwrap(), m(&[3, 0]));
        assert_eq!(f.leading_monomial(&swapped).unwrap(), m(&[0, 3]));
        assert_eq!(
            Poly2::monomial(m(&[1, 1])).leading_monomial(&lex).unwrap(),
            m(&[1, 1])
        );
        assert_eq!(Poly2::zero().leading_monomial(&lex), Err(Error::ZeroPolynomial));
        assert_eq!(f.sorted_terms(&swapped), vec![&m(&[0, 3]), &m(&[3, 0])]);
    }
}
