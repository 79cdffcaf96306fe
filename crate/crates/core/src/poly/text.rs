//! Text format for monomials and polynomials.
//!
//! Monomials render as `x1^2*y1*w2` with factors in variable-index order and
//! exponent 1 omitted; the constant monomial is `1`. Polynomials join terms
//! with ` + ` in descending order; the zero polynomial is `0`.

use super::{Monomial, MonomialOrder, Poly2};
use crate::error::{Error, Result};

/// Variable naming for `x_1..x_r, y_1..y_r, z_1..z_s, w_1..w_s`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VarNames {
    pub r: usize,
    pub s: usize,
}

impl VarNames {
    pub fn new(r: usize, s: usize) -> Self {
        VarNames { r, s }
    }

    pub fn nvars(&self) -> usize {
        2 * self.r + 2 * self.s
    }

    pub fn name(&self, index: usize) -> String {
        let (r, s) = (self.r, self.s);
        if index < r {
            format!("x{}", index + 1)
        } else if index < 2 * r {
            format!("y{}", index - r + 1)
        } else if index < 2 * r + s {
            format!("z{}", index - 2 * r + 1)
        } else {
            format!("w{}", index - 2 * r - s + 1)
        }
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        let unknown = || Error::UnknownVariable(name.to_string());
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(unknown)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(unknown());
        }
        let i: usize = digits.parse().map_err(|_| unknown())?;
        let (base, count) = match letter {
            'x' => (0, self.r),
            'y' => (self.r, self.r),
            'z' => (2 * self.r, self.s),
            'w' => (2 * self.r + self.s, self.s),
            _ => return Err(unknown()),
        };
        if i > count {
            return Err(unknown());
        }
        Ok(base + i - 1)
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let mut m = Monomial::one(self.nvars());
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => {
                    let e: u16 = exp
                        .trim()
                        .parse()
                        .map_err(|_| Error::MalformedExponent(factor.to_string()))?;
                    (name.trim(), e)
                }
                None => (factor, 1),
            };
            let i = self.index(name)?;
            let slot = &mut m.exponents_mut()[i];
            *slot = slot.checked_add(exp).ok_or(Error::ExponentOverflow)?;
        }
        Ok(m)
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.name(i)
                } else {
                    format!("{}^{}", self.name(i), e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    pub fn parse_poly(&self, text: &str) -> Result<Poly2> {
        let text = text.trim();
        if text == "0" {
            return Ok(Poly2::zero());
        }
        text.split('+')
            .map(|t| self.parse_monomial(t))
            .collect::<Result<Vec<_>>>()
            .map(Poly2::from_terms)
    }

    pub fn render_poly(&self, f: &Poly2, order: &MonomialOrder) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        f.sorted_terms(order)
            .into_iter()
            .map(|m| self.render_monomial(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Renders with the default grevlex order.
    pub fn render_poly_default(&self, f: &Poly2) -> String {
        self.render_poly(f, &MonomialOrder::grevlex(self.nvars()))
    }
}
