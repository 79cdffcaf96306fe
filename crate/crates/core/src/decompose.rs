//! Splitting large `ρ`-invariant monomials into smaller invariant pieces.

use crate::action::DihedralRep;
use crate::error::{Error, Result};
use crate::poly::Monomial;
use crate::zerosum::{schmid_zero_sum, zerosum_completion};

fn product_of(rep: &DihedralRep, vars: impl IntoIterator<Item = usize>) -> Monomial {
    let mut m = rep.one();
    for v in vars {
        m.exponents_mut()[v] += 1;
    }
    m
}

fn render(rep: &DihedralRep, m: &Monomial) -> String {
    rep.vars().render_monomial(m)
}

fn check_invariant(rep: &DihedralRep, m: &Monomial) -> Result<()> {
    if m.nvars() != rep.nvars() {
        return Err(Error::VariableCount(m.nvars(), rep.nvars()));
    }
    if !rep.is_rho_invariant(m) {
        return Err(Error::NotRhoInvariant(render(rep, m)));
    }
    Ok(())
}

/// Writes a `ρ`-invariant `m` of degree at least `p + 1` as `m1·m2` with both
/// factors `ρ`-invariant, nonconstant and of smaller degree.
///
/// A variable with trivial `ρ`-action splits off directly. Otherwise the first
/// `p + 1` variable occurrences of `m` (in index order) feed the zero-sum
/// search; `m1` is the pair's first variable times the completing subset.
pub fn monomial_decompose(rep: &DihedralRep, m: &Monomial) -> Result<(Monomial, Monomial)> {
    check_invariant(rep, m)?;
    let p = rep.p();
    if (m.degree() as u64) < p + 1 {
        return Err(Error::Precondition(format!(
            "{} has degree {} < p + 1 = {}",
            render(rep, m),
            m.degree(),
            p + 1
        )));
    }
    if let Some(u) = (0..rep.nvars()).find(|&i| rep.is_trivial_var(i) && m.exponent(i) > 0) {
        let u = rep.var(u);
        let rest = m.checked_div(&u).expect("u divides m");
        return Ok((u, rest));
    }
    let occurrences: Vec<usize> = m.occurrences().take(p as usize + 1).collect();
    let weights: Vec<u64> = occurrences.iter().map(|&v| rep.var_weight(v).value()).collect();
    let witness = schmid_zero_sum(&weights, p)?;
    let m1 = product_of(
        rep,
        std::iter::once(occurrences[witness.k1]).chain(witness.subset.iter().map(|&i| occurrences[i])),
    );
    let m2 = m.checked_div(&m1).expect("chosen occurrences divide m");
    Ok((m1, m2))
}

/// For `u | m` with `m` `ρ`-invariant of degree above `p`, finds a
/// `ρ`-invariant `m' | m` of degree at most `p` with `u | m'`, so that
/// `u·m ∈ ⟨u·m'⟩`. Requires `p` prime.
pub fn reduce_multiple_to_small(rep: &DihedralRep, u: usize, m: &Monomial) -> Result<Monomial> {
    rep.require_prime()?;
    check_invariant(rep, m)?;
    let p = rep.p();
    if u >= rep.nvars() || m.exponent(u) == 0 {
        return Err(Error::Precondition(format!(
            "variable index {u} does not divide {}",
            render(rep, m)
        )));
    }
    if (m.degree() as u64) <= p {
        return Err(Error::Precondition(format!(
            "{} already has degree <= p",
            render(rep, m)
        )));
    }
    // u itself is invariant: u·m lies in ⟨u^2⟩.
    if rep.is_trivial_var(u) {
        return Ok(rep.var(u));
    }
    // Strip the invariant variables; what remains is still invariant and
    // divisible by u.
    let mut core = m.clone();
    for i in (0..rep.nvars()).filter(|&i| rep.is_trivial_var(i)) {
        core.exponents_mut()[i] = 0;
    }
    if core.degree() as u64 <= p {
        return Ok(core);
    }
    // u's character twice, then p − 1 further occurrences from m / u.
    let rest = core.checked_div(&rep.var(u)).expect("u divides m");
    let occurrences: Vec<usize> = [u, u]
        .into_iter()
        .chain(rest.occurrences().take(p as usize - 1))
        .collect();
    let weights: Vec<u64> = occurrences.iter().map(|&v| rep.var_weight(v).value()).collect();
    let subset = zerosum_completion(&weights, 0, 1, p)?.ok_or_else(|| {
        Error::Precondition("no zero-sum completion for the duplicated variable".into())
    })?;
    Ok(product_of(
        rep,
        std::iter::once(u).chain(subset.into_iter().map(|i| occurrences[i])),
    ))
}
