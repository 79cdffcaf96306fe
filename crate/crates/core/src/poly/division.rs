use super::{Monomial, MonomialOrder, Poly2};
use crate::error::Result;

/// `(T/LM(f1))·f1 + (T/LM(f2))·f2` with `T = lcm(LM(f1), LM(f2))`.
pub fn s_polynomial(f1: &Poly2, f2: &Poly2, order: &MonomialOrder) -> Result<Poly2> {
    let lm1 = f1.leading_monomial(order)?;
    let lm2 = f2.leading_monomial(order)?;
    Ok(s_polynomial_with_lms(f1, &lm1, f2, &lm2))
}

pub(crate) fn s_polynomial_with_lms(f1: &Poly2, lm1: &Monomial, f2: &Poly2, lm2: &Monomial) -> Poly2 {
    let t = lm1.lcm(lm2);
    let c1 = t.checked_div(lm1).expect("lm divides lcm");
    let c2 = t.checked_div(lm2).expect("lm divides lcm");
    let mut s = f1.mul_monomial(&c1);
    s += &f2.mul_monomial(&c2);
    s
}

/// Result of the division algorithm: `f = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Poly2>,
    pub remainder: Poly2,
}

/// Multivariate division over `GF(2)`.
///
/// The largest term of the running polynomial is reduced by the first divisor
/// (in list order) whose leading monomial divides it, otherwise it moves to the
/// remainder. Zero divisors are skipped.
pub fn divide(f: &Poly2, divisors: &[Poly2], order: &MonomialOrder) -> Division {
    let mut quotients = vec![Poly2::zero(); divisors.len()];
    let remainder = reduce(f, divisors, order, Some(&mut quotients));
    Division { quotients, remainder }
}

/// Remainder of [`divide`] without tracking quotients.
pub fn normal_form(f: &Poly2, divisors: &[Poly2], order: &MonomialOrder) -> Poly2 {
    reduce(f, divisors, order, None)
}

fn reduce(
    f: &Poly2,
    divisors: &[Poly2],
    order: &MonomialOrder,
    mut quotients: Option<&mut Vec<Poly2>>,
) -> Poly2 {
    let lms: Vec<Option<Monomial>> = divisors.iter().map(|g| g.lm(order).cloned()).collect();
    let mut work = f.clone();
    let mut remainder = Poly2::zero();
    while let Some(lead) = work.lm(order).cloned() {
        let hit = lms
            .iter()
            .enumerate()
            .find_map(|(i, lm)| lm.as_ref().and_then(|lm| lead.checked_div(lm)).map(|q| (i, q)));
        match hit {
            Some((i, q)) => {
                work += &divisors[i].mul_monomial(&q);
                if let Some(qs) = quotients.as_deref_mut() {
                    qs[i].toggle(q);
                }
            }
            None => {
                work.remove(&lead);
                remainder.toggle(lead);
            }
        }
    }
    remainder
}
