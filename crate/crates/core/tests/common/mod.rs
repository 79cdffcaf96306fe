#![allow(dead_code)]

use std::collections::BTreeMap;

use dihedral_core::{monomials_of_degree, DihedralRep, Monomial, Poly2};
use rand::Rng;

/// All weight vectors over `{1, …, p−1}^r`, thinned to at most four evenly
/// spaced ones.
pub fn weight_vectors(p: u64, r: usize) -> Vec<Vec<i64>> {
    let all: Vec<Vec<i64>> = (0..r)
        .map(|_| 1..p as i64)
        .fold(vec![vec![]], |acc, range| {
            acc.into_iter()
                .flat_map(|v| {
                    range.clone().map(move |a| {
                        let mut v = v.clone();
                        v.push(a);
                        v
                    })
                })
                .collect()
        });
    if all.len() <= 4 {
        return all;
    }
    let n = all.len() - 1;
    (0..4).map(|i| all[(i * n + 1) / 3].clone()).collect()
}

/// `p ∈ {3, 5}` × `(r, s)` shapes × thinned weight vectors.
pub fn grid() -> Vec<DihedralRep> {
    let shapes = [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)];
    let mut reps = Vec::new();
    for p in [3u64, 5] {
        for (r, s) in shapes {
            for w in weight_vectors(p, r) {
                reps.push(DihedralRep::new(p, r, s, Some(w)).unwrap());
            }
        }
    }
    reps
}

pub fn random_monomial(rng: &mut impl Rng, nvars: usize, degree: u32) -> Monomial {
    let mut e = vec![0u16; nvars];
    for _ in 0..degree {
        e[rng.random_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(&e)
}

/// Weight of a monomial computed straight from the exponent vector.
pub fn weight_oracle(rep: &DihedralRep, m: &Monomial) -> u64 {
    let p = rep.p() as i64;
    let e = m.exponents();
    let w: i64 = (0..rep.r())
        .map(|i| rep.weights()[i] as i64 * (e[i] as i64 - e[rep.r() + i] as i64))
        .sum();
    w.rem_euclid(p) as u64
}

pub fn random_invariant_monomial(rng: &mut impl Rng, rep: &DihedralRep, lo: u32, hi: u32) -> Monomial {
    loop {
        let d = rng.random_range(lo..=hi);
        let m = random_monomial(rng, rep.nvars(), d);
        if weight_oracle(rep, &m) == 0 {
            return m;
        }
    }
}

/// Rank over GF(2) of a set of vectors given as bitsets.
fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, |r| r.len() * 64);
    for col in 0..width {
        let (word, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][word] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[word] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of `(F[V] / ⟨gens⟩)_d` for homogeneous `gens`, by spanning the
/// degree-`d` part of the ideal with all monomial multiples and taking the
/// rank. Independent of any monomial order or Gröbner machinery.
pub fn quotient_dimension_in_degree(gens: &[Poly2], nvars: usize, d: u32) -> usize {
    let basis = monomials_of_degree(nvars, d);
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let words = basis.len().div_ceil(64).max(1);
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.degree();
        if gd > d {
            continue;
        }
        for u in monomials_of_degree(nvars, d - gd) {
            let mut row = vec![0u64; words];
            for t in g.terms() {
                let i = index[&(&u * t)];
                row[i / 64] ^= 1 << (i % 64);
            }
            rows.push(row);
        }
    }
    basis.len() - gf2_rank(rows)
}

/// Graded dimensions of the quotient, stopping at the first zero degree.
pub fn graded_dimensions_oracle(gens: &[Poly2], nvars: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for d in 0.. {
        let dim = quotient_dimension_in_degree(gens, nvars, d);
        if dim == 0 {
            break;
        }
        out.push(dim);
    }
    out
}
