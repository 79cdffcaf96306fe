//! Buchberger's algorithm over `GF(2)`, reduced bases, lead-term ideals and
//! standard monomials.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::action::DihedralRep;
use crate::basis::universal_basis;
use crate::error::{Error, Result};
use crate::poly::{normal_form, s_polynomial_with_lms, Monomial, MonomialOrder, Poly2};

/// Default cap on the number of basis elements during completion.
pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    pub elements: Vec<Poly2>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("basis elements are nonzero"))
            .collect()
    }

    pub fn normal_form(&self, f: &Poly2) -> Poly2 {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(Poly2::degree).max().unwrap_or(0)
    }
}

pub fn buchberger(gens: &[Poly2], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_cap(gens, order, DEFAULT_ELEMENT_CAP)
}

/// Completes `gens` to a Gröbner basis and returns the reduced basis.
///
/// Pairs are processed by smallest lcm degree, then by the order on the lcm,
/// then by element indices. Pairs with coprime leading monomials are skipped
/// (their S-polynomials reduce to zero).
pub fn buchberger_with_cap(gens: &[Poly2], order: &MonomialOrder, cap: usize) -> Result<GroebnerBasis> {
    let mut basis: Vec<Poly2> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut seen = HashSet::new();
    for g in gens {
        if !g.is_zero() && seen.insert(g.clone()) {
            lms.push(g.leading_monomial(order)?);
            basis.push(g.clone());
        }
    }
    if basis.len() > cap {
        return Err(Error::ResourceCap(cap));
    }

    let mut queue: BTreeSet<(u32, Vec<i64>, usize, usize)> = BTreeSet::new();
    let push_pairs = |queue: &mut BTreeSet<_>, lms: &[Monomial], basis: &[Poly2], j: usize| {
        for i in 0..j {
            if lms[i].is_coprime(&lms[j]) || (basis[i].is_monomial() && basis[j].is_monomial()) {
                continue;
            }
            let lcm = lms[i].lcm(&lms[j]);
            queue.insert((lcm.degree(), order.sort_key(&lcm), i, j));
        }
    };
    for j in 0..basis.len() {
        push_pairs(&mut queue, &lms, &basis, j);
    }

    while let Some((_, _, i, j)) = queue.pop_first() {
        let s = s_polynomial_with_lms(&basis[i], &lms[i], &basis[j], &lms[j]);
        let rem = normal_form(&s, &basis, order);
        if rem.is_zero() {
            continue;
        }
        if basis.len() >= cap {
            return Err(Error::ResourceCap(cap));
        }
        lms.push(rem.leading_monomial(order)?);
        basis.push(rem);
        push_pairs(&mut queue, &lms, &basis, basis.len() - 1);
    }

    Ok(GroebnerBasis {
        elements: reduce_basis(&basis, order),
        order: order.clone(),
        reduced: true,
    })
}

/// Minimalizes and interreduces a Gröbner basis, sorting ascending by leading
/// monomial. Over `GF(2)` every element is already monic.
pub fn reduce_basis(basis: &[Poly2], order: &MonomialOrder) -> Vec<Poly2> {
    let mut items: Vec<(Monomial, &Poly2)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.leading_monomial(order).expect("nonzero"), g))
        .collect();
    items.sort_by(|a, b| order.compare(&a.0, &b.0));
    let mut minimal: Vec<(Monomial, Poly2)> = Vec::new();
    for (lm, g) in items {
        if !minimal.iter().any(|(m, _)| m.divides(&lm)) {
            minimal.push((lm, g.clone()));
        }
    }
    let snapshot: Vec<Poly2> = minimal.iter().map(|(_, g)| g.clone()).collect();
    minimal
        .into_iter()
        .map(|(lm, g)| {
            let mut tail = g;
            tail.toggle(lm.clone());
            let mut out = normal_form(&tail, &snapshot, order);
            out.toggle(lm);
            out
        })
        .collect()
}

/// A pair whose S-polynomial does not reduce to zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FailedPair {
    pub i: usize,
    pub j: usize,
    pub remainder: Poly2,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriterionCheck {
    pub pairs_checked: usize,
    pub failures: Vec<FailedPair>,
}

impl CriterionCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Buchberger's criterion on every pair, with the failing pairs as a
/// certificate.
pub fn is_groebner_basis(g: &[Poly2], order: &MonomialOrder) -> Result<CriterionCheck> {
    let lms = g
        .iter()
        .map(|f| f.leading_monomial(order))
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for j in 0..g.len() {
        for i in 0..j {
            pairs_checked += 1;
            let s = s_polynomial_with_lms(&g[i], &lms[i], &g[j], &lms[j]);
            let remainder = normal_form(&s, g, order);
            if !remainder.is_zero() {
                failures.push(FailedPair { i, j, remainder });
            }
        }
    }
    Ok(CriterionCheck {
        pairs_checked,
        failures,
    })
}

/// Divisibility-minimal generators of a monomial ideal, ascending under
/// `order`, duplicates removed.
pub fn minimize_monomials(monomials: &[Monomial], order: &MonomialOrder) -> Vec<Monomial> {
    let mut sorted: Vec<&Monomial> = monomials.iter().collect();
    sorted.sort_by(|a, b| order.compare(a, b));
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|n| n.divides(m)) {
            out.push(m.clone());
        }
    }
    out
}

/// Minimal generators of the ideal of leading monomials of `g`.
pub fn lead_term_ideal(g: &[Poly2], order: &MonomialOrder) -> Result<Vec<Monomial>> {
    let lms = g
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.leading_monomial(order))
        .collect::<Result<Vec<_>>>()?;
    Ok(minimize_monomials(&lms, order))
}

pub fn in_monomial_ideal(lt_gens: &[Monomial], m: &Monomial) -> bool {
    lt_gens.iter().any(|g| g.divides(m))
}

/// Monomials outside the monomial ideal, grouped by increasing degree and in
/// increasing exponent-vector order within a degree.
///
/// The quotient must be finite-dimensional: every variable needs a pure
/// power among the generators.
pub fn standard_monomials(lt_gens: &[Monomial], nvars: usize) -> Result<Vec<Monomial>> {
    for v in 0..nvars {
        let has_power = lt_gens
            .iter()
            .any(|g| g.exponent(v) > 0 && (0..nvars).all(|i| i == v || g.exponent(i) == 0));
        if !has_power {
            return Err(Error::InfiniteQuotient(v));
        }
    }
    let one = Monomial::one(nvars);
    if in_monomial_ideal(lt_gens, &one) {
        return Ok(Vec::new());
    }
    let mut out = vec![one.clone()];
    let mut layer = BTreeSet::from([one]);
    while !layer.is_empty() {
        // Standard monomials are closed under division, so each one of
        // degree d + 1 is a variable times one of degree d.
        let mut next = BTreeSet::new();
        for m in &layer {
            for v in 0..nvars {
                let mut n = m.clone();
                n.exponents_mut()[v] += 1;
                if !in_monomial_ideal(lt_gens, &n) {
                    next.insert(n);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoinvariantStats {
    pub dimension: usize,
    pub top_degree: u32,
    pub standard_monomials: Vec<Monomial>,
    pub lt_generators: Vec<Monomial>,
}

impl CoinvariantStats {
    pub fn from_lead_terms(lt_generators: Vec<Monomial>, nvars: usize) -> Result<Self> {
        let standard_monomials = standard_monomials(&lt_generators, nvars)?;
        Ok(CoinvariantStats {
            dimension: standard_monomials.len(),
            top_degree: standard_monomials.iter().map(Monomial::degree).max().unwrap_or(0),
            standard_monomials,
            lt_generators,
        })
    }

    /// Number of standard monomials in each degree `0..=top_degree`.
    pub fn graded_dimensions(&self) -> Vec<usize> {
        let mut out = vec![0; self.top_degree as usize + 1];
        for m in &self.standard_monomials {
            out[m.degree() as usize] += 1;
        }
        out
    }
}

/// Dimension and top degree of the coinvariant algebra, read off the lead
/// terms of `𝒢` under `order`.
pub fn coinvariant_stats(rep: &DihedralRep, order: &MonomialOrder) -> Result<CoinvariantStats> {
    let g = universal_basis(rep)?;
    let lt = lead_term_ideal(&g.polys(), order)?;
    CoinvariantStats::from_lead_terms(lt, rep.nvars())
}
