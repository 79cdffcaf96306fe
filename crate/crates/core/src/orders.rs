//! The sampled order set used as a stand-in for "every monomial order".

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::DihedralRep;
use crate::poly::MonomialOrder;

/// Default number of sampled orders.
pub const DEFAULT_ORDER_COUNT: usize = 12;

/// Lex with `y_i` ahead of `x_i` and `w_j` ahead of `z_j`.
pub fn sigma_swapped_lex(rep: &DihedralRep) -> MonomialOrder {
    let perm = (0..rep.nvars()).map(|i| rep.sigma_index(i)).collect();
    MonomialOrder::lex(rep.nvars())
        .with_perm(perm)
        .expect("sigma is a permutation")
}

/// `lex`, `grlex`, `grevlex` (identity permutation), σ-swapped `lex`, then
/// `count − 4` weighted orders with weights uniform in `1..=1000` and a random
/// tie-break permutation, all drawn from a ChaCha8 stream seeded by `seed`.
pub fn sample_orders(rep: &DihedralRep, count: usize, seed: u64) -> Vec<MonomialOrder> {
    let n = rep.nvars();
    let mut out = vec![
        MonomialOrder::lex(n),
        MonomialOrder::grlex(n),
        MonomialOrder::grevlex(n),
        sigma_swapped_lex(rep),
    ];
    out.truncate(count);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while out.len() < count {
        let weights: Vec<u32> = (0..n).map(|_| rng.random_range(1..=1000)).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        out.push(
            MonomialOrder::weighted(weights)
                .and_then(|o| o.with_perm(perm))
                .expect("weights are positive and perm is a permutation"),
        );
    }
    out
}
