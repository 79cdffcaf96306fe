//! The `D_2p` representation and its action on monomials and polynomials.
//!
//! `σ` swaps `x_i ↔ y_i` and `z_j ↔ w_j`. `ρ` fixes `z_j, w_j` and scales
//! `x_i` by `ζ^{a_i}` and `y_i` by `ζ^{-a_i}`, so on a monomial it acts by
//! `ζ^{weight}` where the weight is computed in `Z/p`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, BinaryField, ZmodP};
use crate::poly::{Monomial, Poly2, VarNames};

/// Wire form of a representation; `weights` defaults to all ones.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RepSpec {
    pub p: u64,
    pub r: usize,
    pub s: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RepSpec", into = "RepSpec")]
pub struct DihedralRep {
    p: u64,
    r: usize,
    s: usize,
    weights: Vec<u64>,
}

impl TryFrom<RepSpec> for DihedralRep {
    type Error = Error;

    fn try_from(spec: RepSpec) -> Result<Self> {
        DihedralRep::new(spec.p, spec.r, spec.s, spec.weights)
    }
}

impl From<DihedralRep> for RepSpec {
    fn from(rep: DihedralRep) -> Self {
        RepSpec {
            p: rep.p,
            r: rep.r,
            s: rep.s,
            weights: Some(rep.weights.iter().map(|&w| w as i64).collect()),
        }
    }
}

impl DihedralRep {
    /// Accepts any odd `p >= 3`; operations that need primality check it
    /// themselves.
    pub fn new(p: u64, r: usize, s: usize, weights: Option<Vec<i64>>) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::InvalidModulus(p));
        }
        if r == 0 && s == 0 {
            return Err(Error::EmptyRepresentation);
        }
        let weights = weights.unwrap_or_else(|| vec![1; r]);
        if weights.len() != r {
            return Err(Error::WeightCount {
                expected: r,
                got: weights.len(),
            });
        }
        let weights = weights
            .into_iter()
            .map(|a| ZmodP::reduce(a, p))
            .map(|a| if a.is_zero() { Err(Error::ZeroWeight) } else { Ok(a.value()) })
            .collect::<Result<Vec<_>>>()?;
        Ok(DihedralRep { p, r, s, weights })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn p_is_prime(&self) -> bool {
        is_prime(self.p)
    }

    pub fn require_prime(&self) -> Result<()> {
        if self.p_is_prime() {
            Ok(())
        } else {
            Err(Error::NotOddPrime(self.p))
        }
    }

    pub fn nvars(&self) -> usize {
        2 * self.r + 2 * self.s
    }

    pub fn vars(&self) -> VarNames {
        VarNames::new(self.r, self.s)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, index: usize) -> Monomial {
        Monomial::var(self.nvars(), index)
    }

    pub fn x(&self, i: usize) -> usize {
        i
    }

    pub fn y(&self, i: usize) -> usize {
        self.r + i
    }

    pub fn z(&self, j: usize) -> usize {
        2 * self.r + j
    }

    pub fn w(&self, j: usize) -> usize {
        2 * self.r + self.s + j
    }

    /// Variables on which `ρ` acts trivially (the `z` and `w` block).
    pub fn is_trivial_var(&self, index: usize) -> bool {
        index >= 2 * self.r
    }

    /// Index of `σ(u)` for the variable `u`.
    pub fn sigma_index(&self, index: usize) -> usize {
        let (r, s) = (self.r, self.s);
        if index < r {
            index + r
        } else if index < 2 * r {
            index - r
        } else if index < 2 * r + s {
            index + s
        } else {
            index - s
        }
    }

    /// The `ρ`-character of a single variable as a residue.
    pub fn var_weight(&self, index: usize) -> ZmodP {
        if index < self.r {
            ZmodP::reduce(self.weights[index] as i64, self.p)
        } else if index < 2 * self.r {
            ZmodP::reduce(-(self.weights[index - self.r] as i64), self.p)
        } else {
            ZmodP::zero(self.p)
        }
    }

    pub fn sigma(&self, m: &Monomial) -> Monomial {
        let mut out = m.clone();
        let e = out.exponents_mut();
        for i in 0..self.r {
            e.swap(i, i + self.r);
        }
        let base = 2 * self.r;
        for j in 0..self.s {
            e.swap(base + j, base + self.s + j);
        }
        out
    }

    /// `Σ a_i (e_{x_i} - e_{y_i}) mod p`.
    pub fn rho_weight(&self, m: &Monomial) -> ZmodP {
        let e = m.exponents();
        let total: i64 = (0..self.r)
            .map(|i| self.weights[i] as i64 * (e[i] as i64 - e[i + self.r] as i64))
            .sum();
        ZmodP::reduce(total, self.p)
    }

    pub fn is_rho_invariant(&self, m: &Monomial) -> bool {
        self.rho_weight(m).is_zero()
    }

    pub fn is_g_invariant(&self, m: &Monomial) -> bool {
        self.sigma(m) == *m
    }

    /// `o(m)`: `m` when `σ(m) = m`, else `m + σ(m)`. Defined on `ρ`-invariant
    /// monomials only.
    pub fn orbit_sum(&self, m: &Monomial) -> Result<Poly2> {
        if !self.is_rho_invariant(m) {
            return Err(Error::NotRhoInvariant(self.vars().render_monomial(m)));
        }
        let image = self.sigma(m);
        if image == *m {
            Ok(Poly2::monomial(image))
        } else {
            Ok(Poly2::from_terms([m.clone(), image]))
        }
    }

    pub fn sigma_poly(&self, f: &Poly2) -> Poly2 {
        f.map_monomials(|m| self.sigma(m))
    }
}

/// A polynomial with coefficients in `GF(2^k)`. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyK {
    terms: BTreeMap<Monomial, u32>,
}

impl PolyK {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, u32)>>(terms: I) -> Self {
        let mut out = PolyK::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        let sum = self.coefficient(&m) ^ c;
        if sum == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<&Poly2> for PolyK {
    fn from(f: &Poly2) -> Self {
        PolyK {
            terms: f.terms().map(|m| (m.clone(), 1)).collect(),
        }
    }
}

fn check_field(rep: &DihedralRep, field: &BinaryField) -> Result<()> {
    if rep.p() != field.p {
        return Err(Error::Precondition(format!(
            "field built for p = {} but representation has p = {}",
            field.p,
            rep.p()
        )));
    }
    Ok(())
}

pub fn apply_sigma(rep: &DihedralRep, f: &PolyK) -> PolyK {
    PolyK {
        terms: f.terms().map(|(m, c)| (rep.sigma(m), c)).collect(),
    }
}

/// Multiplies the coefficient of each monomial by `ζ^{weight}`.
pub fn apply_rho(rep: &DihedralRep, field: &BinaryField, f: &PolyK) -> Result<PolyK> {
    check_field(rep, field)?;
    Ok(PolyK {
        terms: f
            .terms()
            .map(|(m, c)| (m.clone(), field.mul(c, field.zeta_pow(rep.rho_weight(m).value()))))
            .collect(),
    })
}

/// Fixed by both generators of the group.
pub fn is_invariant_poly(rep: &DihedralRep, field: &BinaryField, f: &PolyK) -> Result<bool> {
    Ok(apply_sigma(rep, f) == *f && apply_rho(rep, field, f)? == *f)
}
