mod common;

use std::cmp::Ordering;

use dihedral_core::{
    apply_rho, apply_sigma, buchberger, divide, enumerate_rho_invariant_monomials, hilbert_ideal_generators,
    hilbert_series_product, monomials_of_degree, normal_form, universal_basis, BinaryField, DihedralRep, Monomial,
    MonomialOrder, Poly2, PolyK,
};
use proptest::prelude::*;
use proptest::sample::Index;

const NVARS: usize = 4;
const SHAPES: [(usize, usize); 5] = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)];

fn monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..4, n).prop_map(|e| Monomial::from_exponents(&e))
}

fn poly(n: usize) -> impl Strategy<Value = Poly2> {
    prop::collection::vec(monomial(n), 0..6).prop_map(Poly2::from_terms)
}

fn order(n: usize) -> impl Strategy<Value = MonomialOrder> {
    let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
    (0u8..4, perm, prop::collection::vec(1u32..=1000, n)).prop_map(move |(kind, perm, weights)| {
        let base = match kind {
            0 => MonomialOrder::lex(n),
            1 => MonomialOrder::grlex(n),
            2 => MonomialOrder::grevlex(n),
            _ => MonomialOrder::weighted(weights).unwrap(),
        };
        base.with_perm(perm).unwrap()
    })
}

fn rep() -> impl Strategy<Value = DihedralRep> {
    (prop_oneof![Just(3u64), Just(5)], 0..SHAPES.len(), prop::collection::vec(0i64..4, 2)).prop_map(
        |(p, shape, w)| {
            let (r, s) = SHAPES[shape];
            let weights = w[..r].iter().map(|a| a % (p as i64 - 1) + 1).collect();
            DihedralRep::new(p, r, s, Some(weights)).unwrap()
        },
    )
}

fn rep_and_order() -> impl Strategy<Value = (DihedralRep, MonomialOrder)> {
    rep().prop_flat_map(|rep| {
        let n = rep.nvars();
        (Just(rep), order(n))
    })
}

proptest! {
    #[test]
    fn order_axioms(o in order(NVARS), a in monomial(NVARS), b in monomial(NVARS), c in monomial(NVARS)) {
        let ab = o.compare(&a, &b);
        prop_assert_eq!(ab, o.compare(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
            prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
        }
        prop_assert_ne!(o.compare(&Monomial::one(NVARS), &a), Ordering::Greater);
        prop_assert_eq!(o.compare(&(&a * &c), &(&b * &c)), ab);
        prop_assert_eq!(o.sort_key(&a).cmp(&o.sort_key(&b)), ab);
    }

    #[test]
    fn ring_axioms(f in poly(NVARS), g in poly(NVARS), h in poly(NVARS), m in monomial(NVARS)) {
        prop_assert!((&f + &f).is_zero());
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!((&f + &g).mul_monomial(&m), &f.mul_monomial(&m) + &g.mul_monomial(&m));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn division_contract(
        o in order(3),
        f in poly(3),
        divisors in prop::collection::vec(poly(3), 0..4),
    ) {
        let d = divide(&f, &divisors, &o);
        let mut rebuilt = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&divisors) {
            rebuilt += &(q * g);
        }
        prop_assert_eq!(&rebuilt, &f);
        for g in divisors.iter().filter(|g| !g.is_zero()) {
            let lm = g.lm(&o).unwrap();
            prop_assert!(d.remainder.terms().all(|t| !lm.divides(t)));
        }
        prop_assert_eq!(normal_form(&f, &divisors, &o), d.remainder);
    }

    #[test]
    fn weight_rules(rep in rep(), a in monomial(4), b in monomial(4)) {
        let n = rep.nvars();
        let a = Monomial::from_exponents(&a.exponents()[..n]);
        let b = Monomial::from_exponents(&b.exponents()[..n]);
        prop_assert_eq!(rep.rho_weight(&(&a * &b)), rep.rho_weight(&a) + rep.rho_weight(&b));
        prop_assert_eq!(rep.rho_weight(&rep.sigma(&a)), -rep.rho_weight(&a));
        prop_assert_eq!(rep.rho_weight(&a).value(), common::weight_oracle(&rep, &a));
    }

    #[test]
    fn oracle_relations(rep in rep(), terms in prop::collection::vec((monomial(4), 1u32..16), 0..5)) {
        let n = rep.nvars();
        let field = BinaryField::build(rep.p()).unwrap();
        let f = PolyK::from_terms(
            terms
                .into_iter()
                .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[..n]), c % field.size().max(2))),
        );
        let rho = |g: &PolyK| apply_rho(&rep, &field, g).unwrap();
        let rho_n = |g: &PolyK, k: u64| (0..k).fold(g.clone(), |h, _| rho(&h));
        prop_assert_eq!(&apply_sigma(&rep, &apply_sigma(&rep, &f)), &f);
        prop_assert_eq!(&rho_n(&f, rep.p()), &f);
        prop_assert_eq!(apply_sigma(&rep, &rho(&apply_sigma(&rep, &f))), rho_n(&f, rep.p() - 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn small_multiples_lie_in_hilbert_ideal(
        (rep, o) in rep_and_order(),
        pick in any::<Index>(),
        var in any::<Index>(),
    ) {
        let p = rep.p() as u32;
        let gb = buchberger(&hilbert_ideal_generators(&rep), &o).unwrap();
        let candidates: Vec<Monomial> = enumerate_rho_invariant_monomials(&rep, p)
            .into_iter()
            .filter(|m| !m.is_one())
            .collect();
        let m = pick.get(&candidates);
        let occ: Vec<usize> = m.occurrences().collect();
        let u = rep.var(*var.get(&occ));
        prop_assert!(gb.normal_form(&Poly2::monomial(&u * m)).is_zero());
    }

    #[test]
    fn equal_weight_swap_lies_in_hilbert_ideal(
        (rep, o) in rep_and_order(),
        pick in any::<Index>(),
    ) {
        let p = rep.p() as u32;
        let gb = buchberger(&hilbert_ideal_generators(&rep), &o).unwrap();
        let mut triples = Vec::new();
        for m in enumerate_rho_invariant_monomials(&rep, p) {
            for u1 in (0..rep.nvars()).filter(|&i| m.exponent(i) >= 2) {
                for u2 in (0..rep.nvars()).filter(|&j| rep.var_weight(j) == rep.var_weight(u1)) {
                    triples.push((m.clone(), u2));
                }
            }
        }
        prop_assume!(!triples.is_empty());
        let (m, u2) = pick.get(&triples);
        prop_assert!(gb.normal_form(&Poly2::monomial(&rep.var(*u2) * m)).is_zero());
    }

    #[test]
    fn normal_form_is_unique(
        (rep, o) in rep_and_order(),
        raw in prop::collection::vec(monomial(4), 0..8),
    ) {
        let n = rep.nvars();
        let f = Poly2::from_terms(raw.iter().map(|m| Monomial::from_exponents(&m.exponents()[..n])));
        let g = universal_basis(&rep).unwrap().polys();
        let gb = buchberger(&hilbert_ideal_generators(&rep), &o).unwrap();
        prop_assert_eq!(normal_form(&f, &g, &o), gb.normal_form(&f));
    }

    #[test]
    fn hilbert_series_identities(degrees in prop::collection::vec(1u64..10, 1..7)) {
        let series = hilbert_series_product(&degrees).unwrap();
        prop_assert_eq!(series.len() as u64 - 1, degrees.iter().map(|d| d - 1).sum::<u64>());
        prop_assert_eq!(series.iter().sum::<u64>(), degrees.iter().product::<u64>());
        let reversed: Vec<u64> = series.iter().rev().copied().collect();
        prop_assert_eq!(reversed, series);
    }
}

#[test]
fn sigma_fixed_monomials_have_weight_zero() {
    for p in [3u64, 5] {
        for (r, s) in SHAPES {
            let rep = DihedralRep::new(p, r, s, None).unwrap();
            for d in 0..=p as u32 {
                for m in monomials_of_degree(rep.nvars(), d) {
                    if rep.sigma(&m) == m {
                        assert!(rep.rho_weight(&m).is_zero(), "{m:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn graded_dimensions_match_linear_algebra() {
    for rep in common::grid().into_iter().filter(|r| r.p() == 3) {
        let oracle = common::graded_dimensions_oracle(&hilbert_ideal_generators(&rep), rep.nvars());
        for o in dihedral_core::sample_orders(&rep, 4, 0) {
            let stats = dihedral_core::coinvariant_stats(&rep, &o).unwrap();
            assert_eq!(stats.graded_dimensions(), oracle, "{o}");
        }
    }
}
