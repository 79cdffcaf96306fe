//! Closed-form degree and dimension bounds for the coinvariants.

use crate::action::DihedralRep;
use crate::error::{Error, Result};

/// Top degree of the coinvariants: `s + max(r, p)` when `r >= 1`, else `s`.
pub fn top_degree_formula(rep: &DihedralRep) -> Result<u32> {
    rep.require_prime()?;
    let (p, r, s) = (rep.p() as u32, rep.r() as u32, rep.s() as u32);
    Ok(if r >= 1 { s + r.max(p) } else { s })
}

fn check_degrees(degrees: &[u64]) -> Result<()> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::Precondition(
            "hsop degrees must be a nonempty list of positive integers".into(),
        ));
    }
    Ok(())
}

/// Bounds from the degrees `d_i` of a homogeneous system of parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct HsopBounds {
    /// `Σ (d_i − 1)`
    pub top_degree: u64,
    /// `Π d_i`
    pub dimension: u64,
}

pub fn hsop_bounds(degrees: &[u64]) -> Result<HsopBounds> {
    check_degrees(degrees)?;
    Ok(HsopBounds {
        top_degree: degrees.iter().map(|d| d - 1).sum(),
        dimension: degrees.iter().product(),
    })
}

/// The specialization where every parameter has degree `|G|`, for `n`
/// variables: top degree at most `n(|G| − 1)`, dimension at most `|G|^n`.
pub fn group_order_bounds(group_order: u64, nvars: u32) -> HsopBounds {
    HsopBounds {
        top_degree: nvars as u64 * (group_order - 1),
        dimension: group_order.pow(nvars),
    }
}

/// Coefficients of `Π (1 + t + … + t^{d_i − 1})`.
pub fn hilbert_series_product(degrees: &[u64]) -> Result<Vec<u64>> {
    check_degrees(degrees)?;
    let mut coeffs = vec![1u64];
    for &d in degrees {
        let mut next = vec![0u64; coeffs.len() + d as usize - 1];
        for (i, &c) in coeffs.iter().enumerate() {
            for slot in &mut next[i..i + d as usize] {
                *slot += c;
            }
        }
        coeffs = next;
    }
    Ok(coeffs)
}
