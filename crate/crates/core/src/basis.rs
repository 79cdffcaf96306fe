//! Hilbert-ideal generators and the universal Gröbner basis `𝒢`.
//!
//! `𝒢` is the union of three families:
//!
//! * `m + σ(m)` for `ρ`-invariant, non-`σ`-fixed `m` of degree at most `p`;
//! * `u·m` for `ρ`-invariant `m` of degree at most `p` and a variable `u | m`;
//! * the norms `x_i y_i` and `z_j w_j`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::action::DihedralRep;
use crate::error::Result;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Poly2, VarNames};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    OrbitSum,
    MonomialMultiple,
    NormPair,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub family: Family,
    pub poly: Poly2,
}

/// Serialized form of one generator.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub family: Family,
    pub polynomial: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GeneratorSet {
    pub elements: Vec<Generator>,
}

impl GeneratorSet {
    pub fn polys(&self) -> Vec<Poly2> {
        self.elements.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn count(&self, family: Family) -> usize {
        self.elements.iter().filter(|g| g.family == family).count()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(|g| g.poly.degree()).max().unwrap_or(0)
    }

    pub fn records(&self, vars: VarNames) -> Vec<GeneratorRecord> {
        let order = MonomialOrder::grevlex(vars.nvars());
        self.elements
            .iter()
            .map(|g| GeneratorRecord {
                family: g.family,
                polynomial: vars.render_poly(&g.poly, &order),
            })
            .collect()
    }

    pub fn to_json(&self, vars: VarNames) -> String {
        serde_json::to_string(&self.records(vars)).expect("generator records serialize")
    }
}

/// Degree first, then grevlex with the identity permutation.
fn canonical_cmp(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| order.compare(a, b))
}

/// All `ρ`-invariant monomials of degree at most `dmax` (including 1), in
/// ascending canonical order.
pub fn enumerate_rho_invariant_monomials(rep: &DihedralRep, dmax: u32) -> Vec<Monomial> {
    let order = MonomialOrder::grevlex(rep.nvars());
    let mut out = Vec::new();
    for d in 0..=dmax {
        let mut layer: Vec<Monomial> = monomials_of_degree(rep.nvars(), d)
            .into_iter()
            .filter(|m| rep.is_rho_invariant(m))
            .collect();
        layer.sort_by(|a, b| canonical_cmp(&order, a, b));
        out.extend(layer);
    }
    out
}

/// Orbit sums of `ρ`-invariant monomials in the given degree range, with
/// `m` and `σ(m)` contributing a single element.
pub fn orbit_sums_in_degrees(rep: &DihedralRep, min_degree: u32, max_degree: u32) -> Vec<Poly2> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for m in enumerate_rho_invariant_monomials(rep, max_degree) {
        if m.degree() < min_degree {
            continue;
        }
        let key = std::cmp::min(m.clone(), rep.sigma(&m));
        if seen.insert(key) {
            out.push(rep.orbit_sum(&m).expect("enumerated monomials are rho-invariant"));
        }
    }
    out
}

/// `{o(m) : m ∈ M^ρ, 1 <= deg m <= p}`, which generates the Hilbert ideal.
///
/// Accepted for odd composite `p` as well; the degree bound is only proven
/// for primes, which reports flag separately.
pub fn hilbert_ideal_generators(rep: &DihedralRep) -> Vec<Poly2> {
    orbit_sums_in_degrees(rep, 1, rep.p() as u32)
}

/// The three families of `𝒢`, unpruned. Requires `p` prime.
pub fn universal_basis(rep: &DihedralRep) -> Result<GeneratorSet> {
    rep.require_prime()?;
    let p = rep.p() as u32;
    let mut orbit = Vec::new();
    let mut multiples = Vec::new();
    let mut seen_orbits = BTreeSet::new();
    let mut seen_multiples = BTreeSet::new();

    for m in enumerate_rho_invariant_monomials(rep, p).into_iter().skip(1) {
        let image = rep.sigma(&m);
        if image != m && seen_orbits.insert(std::cmp::min(m.clone(), image.clone())) {
            orbit.push(Poly2::from_terms([m.clone(), image]));
        }
        for u in (0..rep.nvars()).filter(|&i| m.exponent(i) > 0) {
            let um = &m * &rep.var(u);
            if seen_multiples.insert(um.clone()) {
                multiples.push(Poly2::monomial(um));
            }
        }
    }

    let norms = (0..rep.r())
        .map(|i| (rep.x(i), rep.y(i)))
        .chain((0..rep.s()).map(|j| (rep.z(j), rep.w(j))))
        .map(|(a, b)| Poly2::monomial(&rep.var(a) * &rep.var(b)));

    let tag = |family| move |poly| Generator { family, poly };
    Ok(GeneratorSet {
        elements: orbit
            .into_iter()
            .map(tag(Family::OrbitSum))
            .chain(multiples.into_iter().map(tag(Family::MonomialMultiple)))
            .chain(norms.map(tag(Family::NormPair)))
            .collect(),
    })
}

/// Drops redundant elements without changing the ideal or the lead-term ideal
/// under any order.
///
/// A monomial element goes if another monomial element divides it (exact
/// duplicates keep their first occurrence). A polynomial element goes if each
/// of its terms is divisible by a surviving monomial element, since then it
/// lies in the monomial ideal and its leading monomial is covered whatever the
/// order.
pub fn prune_redundant(gs: &GeneratorSet) -> GeneratorSet {
    let monomials: Vec<(usize, &Monomial)> = gs
        .elements
        .iter()
        .enumerate()
        .filter_map(|(i, g)| g.poly.as_monomial().map(|m| (i, m)))
        .collect();
    let survivors: Vec<&Monomial> = monomials
        .iter()
        .filter(|&&(i, m)| {
            !monomials
                .iter()
                .any(|&(j, n)| j != i && n.divides(m) && (n != m || j < i))
        })
        .map(|&(_, m)| m)
        .collect();

    let mut seen = BTreeSet::new();
    let elements = gs
        .elements
        .iter()
        .filter(|g| match g.poly.as_monomial() {
            Some(m) => survivors.contains(&m) && seen.insert(g.poly.clone()),
            None => {
                !g.poly.terms().all(|t| survivors.iter().any(|s| s.divides(t)))
                    && seen.insert(g.poly.clone())
            }
        })
        .cloned()
        .collect();
    GeneratorSet { elements }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(p: u64, r: usize, s: usize) -> DihedralRep {
        DihedralRep::new(p, r, s, None).unwrap()
    }

    fn poly_set(rep: &DihedralRep, texts: &[&str]) -> BTreeSet<Poly2> {
        texts.iter().map(|t| rep.vars().parse_poly(t).unwrap()).collect()
    }

    /// Independent scan over exponent pairs for r = 1, s = 0.
    fn brute_invariants_r1(p: u64, dmax: u16) -> BTreeSet<Monomial> {
        let mut out = BTreeSet::new();
        for ex in 0..=dmax {
            for ey in 0..=(dmax - ex) {
                if (ex as i64 - ey as i64).rem_euclid(p as i64) == 0 {
                    out.insert(Monomial::from_exponents(&[ex, ey]));
                }
            }
        }
        out
    }

    #[test]
    fn enumeration_examples() {
        let r = rep(3, 1, 0);
        let got = enumerate_rho_invariant_monomials(&r, 3);
        let want: Vec<_> = ["1", "x1*y1", "y1^3", "x1^3"]
            .iter()
            .map(|t| r.vars().parse_monomial(t).unwrap())
            .collect();
        assert_eq!(got, want);
        assert_eq!(got.iter().cloned().collect::<BTreeSet<_>>(), brute_invariants_r1(3, 3));
        for p in [3, 5, 7] {
            let got: BTreeSet<_> = enumerate_rho_invariant_monomials(&rep(p, 1, 0), 12)
                .into_iter()
                .collect();
            assert_eq!(got, brute_invariants_r1(p, 12));
        }

        let zw = rep(3, 0, 1);
        assert_eq!(enumerate_rho_invariant_monomials(&zw, 1).len(), 3);
        assert_eq!(enumerate_rho_invariant_monomials(&zw, 0), vec![zw.one()]);
    }

    #[test]
    fn hilbert_generators_examples() {
        let r = rep(3, 1, 0);
        let got: BTreeSet<_> = hilbert_ideal_generators(&r).into_iter().collect();
        assert_eq!(got, poly_set(&r, &["x1*y1", "x1^3 + y1^3"]));

        let zw = rep(3, 0, 1);
        let got: BTreeSet<_> = hilbert_ideal_generators(&zw).into_iter().collect();
        assert_eq!(
            got,
            poly_set(
                &zw,
                &["z1 + w1", "z1*w1", "z1^2 + w1^2", "z1^3 + w1^3", "z1^2*w1 + z1*w1^2"]
            )
        );
    }

    #[test]
    fn universal_basis_example() {
        let r = rep(3, 1, 0);
        let g = universal_basis(&r).unwrap();
        let fams: Vec<_> = g.elements.iter().map(|e| e.family).collect();
        assert_eq!(
            fams,
            [
                Family::OrbitSum,
                Family::MonomialMultiple,
                Family::MonomialMultiple,
                Family::MonomialMultiple,
                Family::MonomialMultiple,
                Family::NormPair
            ]
        );
        let all: BTreeSet<_> = g.polys().into_iter().collect();
        assert_eq!(
            all,
            poly_set(&r, &["x1^3 + y1^3", "x1^2*y1", "x1*y1^2", "x1^4", "y1^4", "x1*y1"])
        );
        let pruned: BTreeSet<_> = prune_redundant(&g).polys().into_iter().collect();
        assert_eq!(pruned, poly_set(&r, &["x1*y1", "x1^3 + y1^3", "x1^4", "y1^4"]));

        let zw = rep(3, 0, 1);
        let pruned: BTreeSet<_> = prune_redundant(&universal_basis(&zw).unwrap())
            .polys()
            .into_iter()
            .collect();
        assert_eq!(pruned, poly_set(&zw, &["z1 + w1", "z1*w1", "z1^2", "w1^2"]));
    }

    #[test]
    fn composite_p_refused() {
        let r = rep(9, 1, 0);
        assert!(universal_basis(&r).is_err());
        assert!(!hilbert_ideal_generators(&r).is_empty());
    }

    #[test]
    fn prune_examples() {
        let r = rep(3, 1, 0);
        let v = r.vars();
        let gs = GeneratorSet {
            elements: ["x1*y1", "x1^2*y1", "x1*y1"]
                .iter()
                .map(|t| Generator {
                    family: Family::MonomialMultiple,
                    poly: v.parse_poly(t).unwrap(),
                })
                .collect(),
        };
        let pruned = prune_redundant(&gs);
        assert_eq!(pruned.polys(), vec![v.parse_poly("x1*y1").unwrap()]);
        assert_eq!(prune_redundant(&pruned), pruned);
    }

    #[test]
    fn family_shapes() {
        for (p, r, s) in [(3, 2, 0), (5, 1, 1), (3, 0, 2)] {
            let rep = rep(p, r, s);
            for g in universal_basis(&rep).unwrap().elements {
                match g.family {
                    Family::OrbitSum => {
                        assert_eq!(g.poly.len(), 2);
                        assert!(g.poly.is_homogeneous());
                        assert!(g.poly.degree() <= p as u32);
                    }
                    Family::MonomialMultiple => {
                        assert!(g.poly.is_monomial());
                        assert!(g.poly.degree() <= p as u32 + 1);
                    }
                    Family::NormPair => assert_eq!(g.poly.degree(), 2),
                }
            }
        }
    }

    #[test]
    fn records_json() {
        let r = rep(3, 1, 0);
        let g = prune_redundant(&universal_basis(&r).unwrap());
        assert_eq!(
            g.to_json(r.vars()),
            r#"[{"family":"orbit_sum","polynomial":"x1^3 + y1^3"},{"family":"monomial_multiple","polynomial":"y1^4"},{"family":"monomial_multiple","polynomial":"x1^4"},{"family":"norm_pair","polynomial":"x1*y1"}]"#
        );
    }
}
