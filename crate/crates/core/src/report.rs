//! Run configuration and the machine-readable verification report.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{is_invariant_poly, DihedralRep, PolyK, RepSpec};
use crate::basis::{
    hilbert_ideal_generators, orbit_sums_in_degrees, prune_redundant, universal_basis, GeneratorRecord, GeneratorSet,
};
use crate::bounds::{hsop_bounds, top_degree_formula, HsopBounds};
use crate::error::{Error, Result};
use crate::field::BinaryField;
use crate::groebner::{
    buchberger_with_cap, in_monomial_ideal, is_groebner_basis, lead_term_ideal, CoinvariantStats, GroebnerBasis,
    DEFAULT_ELEMENT_CAP,
};
use crate::orders::{sample_orders, sigma_swapped_lex, DEFAULT_ORDER_COUNT};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Poly2, VarNames};

fn default_sampled_orders() -> usize {
    DEFAULT_ORDER_COUNT
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub rep: RepSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<MonomialOrder>>,
    #[serde(default = "default_sampled_orders")]
    pub sampled_orders: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hsop_degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element_cap: Option<usize>,
}

impl RunConfig {
    pub fn new(p: u64, r: usize, s: usize, weights: Option<Vec<i64>>) -> Self {
        RunConfig {
            rep: RepSpec { p, r, s, weights },
            orders: None,
            sampled_orders: DEFAULT_ORDER_COUNT,
            seed: 0,
            hsop_degrees: None,
            output: None,
            element_cap: None,
        }
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Validates the configuration and builds the representation.
    pub fn representation(&self) -> Result<DihedralRep> {
        let rep = DihedralRep::try_from(self.rep.clone())?;
        if self.sampled_orders == 0 {
            return Err(Error::Precondition("sampled_orders must be at least 1".into()));
        }
        if let Some(orders) = &self.orders {
            if orders.is_empty() {
                return Err(Error::Precondition("explicit order list is empty".into()));
            }
            for o in orders {
                o.validate()?;
                if o.nvars() != rep.nvars() {
                    return Err(Error::VariableCount(o.nvars(), rep.nvars()));
                }
            }
        }
        if let Some(d) = &self.hsop_degrees {
            hsop_bounds(d)?;
        }
        Ok(rep)
    }

    pub fn order_list(&self, rep: &DihedralRep) -> Vec<MonomialOrder> {
        match &self.orders {
            Some(orders) => orders.clone(),
            None => sample_orders(rep, self.sampled_orders, self.seed),
        }
    }

    pub fn cap(&self) -> usize {
        self.element_cap.unwrap_or(DEFAULT_ELEMENT_CAP)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrderChecks {
    pub buchberger_ok: bool,
    pub ideal_equal: bool,
    pub steinberg_ok: bool,
    pub top_degree_ok: bool,
    pub degree_bound_ok: bool,
}

impl OrderChecks {
    pub fn all(&self) -> bool {
        self.buchberger_ok && self.ideal_equal && self.steinberg_ok && self.top_degree_ok && self.degree_bound_ok
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrderRecord {
    pub order: MonomialOrder,
    pub gb_size: usize,
    pub lt_generators: Vec<String>,
    pub dimension: usize,
    pub top_degree: u32,
    pub checks: OrderChecks,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GeneratorCounts {
    pub hilbert_ideal: usize,
    pub orbit_sum: usize,
    pub monomial_multiple: usize,
    pub norm_pair: usize,
    pub pruned: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoinvariantSummary {
    pub dimension: usize,
    pub top_degree: u32,
    pub graded_dimensions: Vec<usize>,
    pub lt_generators: Vec<String>,
    pub standard_monomials: Vec<String>,
}

impl CoinvariantSummary {
    fn new(stats: &CoinvariantStats, vars: VarNames) -> Self {
        CoinvariantSummary {
            dimension: stats.dimension,
            top_degree: stats.top_degree,
            graded_dimensions: stats.graded_dimensions(),
            lt_generators: stats.lt_generators.iter().map(|m| vars.render_monomial(m)).collect(),
            standard_monomials: stats.standard_monomials.iter().map(|m| vars.render_monomial(m)).collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FormulaComparison {
    pub name: String,
    pub expected: u64,
    pub computed: u64,
    pub ok: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HsopComparison {
    pub degrees: Vec<u64>,
    pub bounds: HsopBounds,
    pub computed_top_degree: u64,
    pub computed_dimension: u64,
    pub within_bounds: bool,
    pub attained: bool,
}

impl HsopComparison {
    pub fn new(degrees: &[u64], stats: &CoinvariantStats) -> Result<Self> {
        let bounds = hsop_bounds(degrees)?;
        let top = stats.top_degree as u64;
        let dim = stats.dimension as u64;
        Ok(HsopComparison {
            degrees: degrees.to_vec(),
            bounds,
            computed_top_degree: top,
            computed_dimension: dim,
            within_bounds: top <= bounds.top_degree && dim <= bounds.dimension,
            attained: top == bounds.top_degree && dim == bounds.dimension,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub field: Option<BinaryField>,
    pub generator_counts: GeneratorCounts,
    pub orders: Vec<OrderRecord>,
    pub coinvariants: CoinvariantSummary,
    pub formulas: Vec<FormulaComparison>,
    pub checks: Vec<NamedCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hsop: Option<HsopComparison>,
    pub pass: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.ok)
    }
}

/// Lower bound on the coinvariant dimension: the order of the group acting
/// faithfully, `2p` when `r >= 1` and `2` (only `σ` acts) when `r = 0`.
pub fn steinberg_bound(rep: &DihedralRep) -> usize {
    if rep.r() >= 1 {
        2 * rep.p() as usize
    } else {
        2
    }
}

/// Everything the per-order checks need that does not depend on the order.
struct Shared {
    rep: DihedralRep,
    hilbert: Vec<Poly2>,
    full: GeneratorSet,
    pruned: GeneratorSet,
    extra_orbit_sums: Vec<Poly2>,
    top_formula: u32,
    cap: usize,
}

fn verify_order(shared: &Shared, order: &MonomialOrder) -> Result<OrderRecord> {
    let rep = &shared.rep;
    let vars = rep.vars();
    let full = shared.full.polys();
    let pruned = shared.pruned.polys();

    let buchberger_ok =
        is_groebner_basis(&full, order)?.holds() && is_groebner_basis(&pruned, order)?.holds();

    let from_hilbert = buchberger_with_cap(&shared.hilbert, order, shared.cap)?;
    let from_g = buchberger_with_cap(&full, order, shared.cap)?;
    let lt_g = lead_term_ideal(&full, order)?;
    let lt_hilbert = lead_term_ideal(&from_hilbert.elements, order)?;
    let ideal_equal = from_g.elements == from_hilbert.elements && lt_g == lt_hilbert;

    let stats = CoinvariantStats::from_lead_terms(lt_g, rep.nvars())?;
    let p = rep.p() as u32;
    // Orbit sums of degree p+1..2p already lie in the ideal, so adding them
    // leaves the reduced basis unchanged.
    let degree_bound_ok = shared.full.max_degree() <= p + 1
        && shared
            .extra_orbit_sums
            .iter()
            .all(|f| from_hilbert.normal_form(f).is_zero());

    Ok(OrderRecord {
        order: order.clone(),
        gb_size: from_hilbert.len(),
        lt_generators: lt_hilbert.iter().map(|m| vars.render_monomial(m)).collect(),
        dimension: stats.dimension,
        top_degree: stats.top_degree,
        checks: OrderChecks {
            buchberger_ok,
            ideal_equal,
            steinberg_ok: stats.dimension >= steinberg_bound(rep),
            top_degree_ok: stats.top_degree == shared.top_formula,
            degree_bound_ok,
        },
    })
}

/// `y_1⋯y_r·w_1⋯w_s`, and `y_1^p·w_1⋯w_s` when `r >= 1`: monomials of top
/// degree that lie outside the Hilbert ideal.
pub fn top_degree_witnesses(rep: &DihedralRep) -> Vec<Monomial> {
    let mut base = rep.one();
    for j in 0..rep.s() {
        base.exponents_mut()[rep.w(j)] = 1;
    }
    let mut first = base.clone();
    for i in 0..rep.r() {
        first.exponents_mut()[rep.y(i)] = 1;
    }
    let mut out = vec![first];
    if rep.r() >= 1 {
        let mut second = base;
        second.exponents_mut()[rep.y(0)] = rep.p() as u16;
        out.push(second);
    }
    out
}

/// For `r = 1, s = 0`: every Hilbert-ideal element of degree below `p` is a
/// multiple of `x y`. Checked on monomials: in each degree `d < p` the
/// monomials in the lead-term ideal are exactly the multiples of `x y`; since
/// `⟨xy⟩ ⊆ I_H` and both are homogeneous, equal dimensions give equality.
pub fn low_degree_divisible_by_norm(rep: &DihedralRep, gb: &GroebnerBasis) -> Result<bool> {
    if rep.r() != 1 || rep.s() != 0 {
        return Err(Error::Precondition("only defined for r = 1, s = 0".into()));
    }
    let lt = lead_term_ideal(&gb.elements, &gb.order)?;
    let xy = &rep.var(rep.x(0)) * &rep.var(rep.y(0));
    Ok((0..rep.p() as u32).all(|d| {
        monomials_of_degree(rep.nvars(), d)
            .iter()
            .all(|m| in_monomial_ideal(&lt, m) == xy.divides(m))
    }))
}

pub fn verify(config: &RunConfig) -> Result<Report> {
    let rep = config.representation()?;
    rep.require_prime()?;
    let vars = rep.vars();
    let p = rep.p() as u32;

    let full = universal_basis(&rep)?;
    let shared = Shared {
        hilbert: hilbert_ideal_generators(&rep),
        pruned: prune_redundant(&full),
        extra_orbit_sums: orbit_sums_in_degrees(&rep, p + 1, 2 * p),
        top_formula: top_degree_formula(&rep)?,
        cap: config.cap(),
        full,
        rep,
    };
    let rep = &shared.rep;

    let orders = config.order_list(rep);
    let records = orders
        .par_iter()
        .map(|o| verify_order(&shared, o))
        .collect::<Result<Vec<_>>>()?;

    let field = BinaryField::build(rep.p()).ok();
    let mut checks = Vec::new();

    if let Some(field) = &field {
        let invariant = shared
            .hilbert
            .iter()
            .chain(shared.full.polys().iter().filter(|f| f.len() == 2))
            .map(|f| is_invariant_poly(rep, field, &PolyK::from(f)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b);
        checks.push(NamedCheck {
            name: "generators_invariant".into(),
            ok: invariant,
        });
    }

    let witness_orders = [MonomialOrder::lex(rep.nvars()), sigma_swapped_lex(rep)];
    let witness_bases = witness_orders
        .iter()
        .map(|o| buchberger_with_cap(&shared.hilbert, o, shared.cap))
        .collect::<Result<Vec<_>>>()?;
    let witnesses_ok = top_degree_witnesses(rep).iter().all(|w| {
        witness_bases
            .iter()
            .all(|gb| !gb.normal_form(&Poly2::monomial(w.clone())).is_zero())
    });
    checks.push(NamedCheck {
        name: "top_degree_witnesses_nonzero".into(),
        ok: witnesses_ok,
    });

    let dims_agree = records.windows(2).all(|w| {
        w[0].dimension == w[1].dimension && w[0].top_degree == w[1].top_degree
    });
    checks.push(NamedCheck {
        name: "stats_order_independent".into(),
        ok: dims_agree,
    });

    if rep.r() == 1 && rep.s() == 0 {
        let lex_degree = witness_bases.iter().all(|gb| gb.max_degree() == p + 1);
        checks.push(NamedCheck {
            name: "lex_basis_has_degree_p_plus_1".into(),
            ok: lex_degree,
        });
        let low = witness_bases
            .iter()
            .map(|gb| low_degree_divisible_by_norm(rep, gb))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b);
        checks.push(NamedCheck {
            name: "low_degree_divisible_by_xy".into(),
            ok: low,
        });
    }

    let stats = CoinvariantStats::from_lead_terms(
        lead_term_ideal(&shared.full.polys(), &orders[0])?,
        rep.nvars(),
    )?;
    let formulas = vec![
        FormulaComparison {
            name: "top_degree".into(),
            expected: shared.top_formula as u64,
            computed: stats.top_degree as u64,
            ok: shared.top_formula == stats.top_degree,
        },
        FormulaComparison {
            name: "max_basis_degree".into(),
            expected: p as u64 + 1,
            computed: shared.full.max_degree() as u64,
            ok: shared.full.max_degree() <= p + 1,
        },
    ];
    let hsop = config
        .hsop_degrees
        .as_ref()
        .map(|d| HsopComparison::new(d, &stats))
        .transpose()?;

    let pass = records.iter().all(|r| r.checks.all())
        && formulas.iter().all(|f| f.ok)
        && checks.iter().all(|c| c.ok)
        && hsop.as_ref().is_none_or(|h| h.within_bounds);

    Ok(Report {
        config: config.clone(),
        field,
        generator_counts: GeneratorCounts {
            hilbert_ideal: shared.hilbert.len(),
            orbit_sum: shared.full.count(crate::basis::Family::OrbitSum),
            monomial_multiple: shared.full.count(crate::basis::Family::MonomialMultiple),
            norm_pair: shared.full.count(crate::basis::Family::NormPair),
            pruned: shared.pruned.len(),
        },
        orders: records,
        coinvariants: CoinvariantSummary::new(&stats, vars),
        formulas,
        checks,
        hsop,
        pass,
    })
}

/// Output of the `basis` command.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasisListing {
    pub rep: DihedralRep,
    pub p_is_prime: bool,
    pub hilbert_ideal_generators: Vec<String>,
    pub universal_basis: Vec<GeneratorRecord>,
    pub pruned: Vec<GeneratorRecord>,
}

pub fn basis_listing(rep: &DihedralRep) -> Result<BasisListing> {
    let full = universal_basis(rep)?;
    let vars = rep.vars();
    Ok(BasisListing {
        rep: rep.clone(),
        p_is_prime: rep.p_is_prime(),
        hilbert_ideal_generators: hilbert_ideal_generators(rep)
            .iter()
            .map(|f| vars.render_poly_default(f))
            .collect(),
        pruned: prune_redundant(&full).records(vars),
        universal_basis: full.records(vars),
    })
}

/// Output of the `coinv` command.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoinvariantListing {
    pub rep: DihedralRep,
    pub order: MonomialOrder,
    pub stats: CoinvariantSummary,
    pub top_degree_formula: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hsop: Option<HsopComparison>,
}

pub fn coinvariant_listing(config: &RunConfig) -> Result<CoinvariantListing> {
    let rep = config.representation()?;
    rep.require_prime()?;
    let order = config
        .orders
        .as_ref()
        .and_then(|o| o.first().cloned())
        .unwrap_or_else(|| MonomialOrder::lex(rep.nvars()));
    let stats = crate::groebner::coinvariant_stats(&rep, &order)?;
    let hsop = config
        .hsop_degrees
        .as_ref()
        .map(|d| HsopComparison::new(d, &stats))
        .transpose()?;
    Ok(CoinvariantListing {
        stats: CoinvariantSummary::new(&stats, rep.vars()),
        top_degree_formula: top_degree_formula(&rep)?,
        order,
        hsop,
        rep,
    })
}
