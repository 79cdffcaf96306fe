use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
    Weighted,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
            OrderKind::Weighted => "weighted",
        }
    }
}

/// A monomial order: one of the classical kinds, applied after permuting
/// the variables.
///
/// `perm[i]` is the variable compared at position `i`, so position 0 is the
/// most significant variable for lex. Weights of a weighted order are indexed
/// by the original variable index; ties fall back to lex over the permuted
/// variables.
///
/// grevlex: the higher total degree wins; on a tie the monomial with the
/// smaller exponent in the last differing permuted position wins.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    weights: Vec<u32>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        Self::identity(OrderKind::Lex, nvars)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::identity(OrderKind::Grlex, nvars)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::identity(OrderKind::Grevlex, nvars)
    }

    pub fn weighted(weights: Vec<u32>) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidOrder("weights must be positive".into()));
        }
        Ok(MonomialOrder {
            kind: OrderKind::Weighted,
            perm: (0..weights.len()).collect(),
            weights,
        })
    }

    fn identity(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            perm: (0..nvars).collect(),
            weights: Vec::new(),
        }
    }

    /// Replaces the variable permutation.
    pub fn with_perm(mut self, perm: Vec<usize>) -> Result<Self> {
        if perm.len() != self.perm.len() {
            return Err(Error::VariableCount(perm.len(), self.perm.len()));
        }
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidOrder(format!("{perm:?} is not a permutation")));
            }
        }
        self.perm = perm;
        Ok(self)
    }

    /// Checks a deserialized order for internal consistency.
    pub fn validate(&self) -> Result<()> {
        let again = match self.kind {
            OrderKind::Weighted => {
                if self.weights.len() != self.perm.len() {
                    return Err(Error::VariableCount(self.weights.len(), self.perm.len()));
                }
                Self::weighted(self.weights.clone())?
            }
            kind => {
                if !self.weights.is_empty() {
                    return Err(Error::InvalidOrder(format!(
                        "{} takes no weights",
                        kind.name()
                    )));
                }
                Self::identity(kind, self.perm.len())
            }
        };
        again.with_perm(self.perm.clone()).map(|_| ())
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    /// Compares two monomials, rejecting mismatched variable counts.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != self.nvars() {
            return Err(Error::VariableCount(a.nvars(), self.nvars()));
        }
        if b.nvars() != self.nvars() {
            return Err(Error::VariableCount(b.nvars(), self.nvars()));
        }
        Ok(self.compare(a, b))
    }

    /// Compares two monomials over this order's variables.
    ///
    /// Callers guarantee matching variable counts; see [`Self::try_compare`].
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let lex = || {
            self.perm
                .iter()
                .map(|&i| ea[i].cmp(&eb[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            OrderKind::Lex => lex(),
            OrderKind::Grlex => a.degree().cmp(&b.degree()).then_with(lex),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                self.perm
                    .iter()
                    .rev()
                    .map(|&i| eb[i].cmp(&ea[i]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
            OrderKind::Weighted => {
                let weigh = |e: &[u16]| -> u64 {
                    e.iter()
                        .zip(&self.weights)
                        .map(|(&x, &w)| x as u64 * w as u64)
                        .sum()
                };
                weigh(ea).cmp(&weigh(eb)).then_with(lex)
            }
        }
    }

    /// A key whose plain lexicographic comparison agrees with [`Self::compare`].
    pub fn sort_key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        let permuted = self.perm.iter().map(|&i| e[i] as i64);
        match self.kind {
            OrderKind::Lex => permuted.collect(),
            OrderKind::Grlex => std::iter::once(m.degree() as i64).chain(permuted).collect(),
            OrderKind::Grevlex => std::iter::once(m.degree() as i64)
                .chain(self.perm.iter().rev().map(|&i| -(e[i] as i64)))
                .collect(),
            OrderKind::Weighted => {
                let w: u64 = e
                    .iter()
                    .zip(&self.weights)
                    .map(|(&x, &w)| x as u64 * w as u64)
                    .sum();
                std::iter::once(w as i64).chain(permuted).collect()
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        if self.perm.iter().enumerate().any(|(i, &v)| i != v) {
            write!(f, " perm={:?}", self.perm)?;
        }
        if !self.weights.is_empty() {
            write!(f, " weights={:?}", self.weights)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn named_examples() {
        let lex = MonomialOrder::lex(2);
        assert_eq!(lex.compare(&m(&[3, 0]), &m(&[2, 5])), Ordering::Greater);
        let grlex = MonomialOrder::grlex(2);
        assert_eq!(grlex.compare(&m(&[1, 1]), &m(&[3, 0])), Ordering::Less);
        for order in [lex, grlex, MonomialOrder::grevlex(2)] {
            assert_eq!(order.compare(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
            assert_eq!(order.compare(&m(&[2, 1]), &m(&[2, 1])), Ordering::Equal);
        }
    }

    #[test]
    fn grevlex_differs_from_grlex() {
        // x y^0 z^2 vs x^0 y^2 z: grlex favours xz^2 (x wins),
        // grevlex favours y^2 z (smaller z exponent wins).
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 2, 1]);
        assert_eq!(MonomialOrder::grlex(3).compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::grevlex(3).compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn permutation_flips_lex() {
        let swapped = MonomialOrder::lex(2).with_perm(vec![1, 0]).unwrap();
        assert_eq!(swapped.compare(&m(&[3, 0]), &m(&[0, 3])), Ordering::Less);
        assert!(MonomialOrder::lex(2).with_perm(vec![0, 0]).is_err());
        assert!(MonomialOrder::lex(2).with_perm(vec![0]).is_err());
    }

    #[test]
    fn weighted_with_lex_tiebreak() {
        let o = MonomialOrder::weighted(vec![1, 3]).unwrap();
        assert_eq!(o.compare(&m(&[2, 0]), &m(&[0, 1])), Ordering::Less);
        assert_eq!(o.compare(&m(&[3, 0]), &m(&[0, 1])), Ordering::Greater);
        assert!(MonomialOrder::weighted(vec![1, 0]).is_err());
    }

    #[test]
    fn mismatched_counts() {
        let o = MonomialOrder::lex(2);
        assert_eq!(
            o.try_compare(&m(&[1]), &m(&[1, 0])),
            Err(Error::VariableCount(1, 2))
        );
    }

    #[test]
    fn json_shape() {
        let o = MonomialOrder::lex(2).with_perm(vec![1, 0]).unwrap();
        assert_eq!(
            serde_json::to_string(&o).unwrap(),
            r#"{"kind":"lex","perm":[1,0]}"#
        );
        let back: MonomialOrder = serde_json::from_str(r#"{"kind":"grevlex","perm":[0,1]}"#).unwrap();
        assert_eq!(back, MonomialOrder::grevlex(2));
        let bad: MonomialOrder =
            serde_json::from_str(r#"{"kind":"weighted","perm":[0,1],"weights":[1]}"#).unwrap();
        assert!(bad.validate().is_err());
    }
}
