use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dihedral_core::report::{basis_listing, coinvariant_listing, verify, CoinvariantListing, Report, RunConfig};
use dihedral_core::{
    exhaustive_sweep, is_prime, sampled_sweep, schmid_zero_sum, sigma_swapped_lex, zerosum_completion, BinaryField,
    DihedralRep, MonomialOrder, SweepSummary,
};
use serde_json::json;

/// Largest p for which `schmid --exhaustive` enumerates every sequence.
const EXHAUSTIVE_MAX_P: u64 = 5;

#[derive(Parser)]
#[command(
    name = "dihedral",
    version,
    about = "Hilbert ideal, universal Gröbner basis and coinvariants of the dihedral group D_2p in characteristic two"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Hilbert-ideal generators and the universal basis (full and pruned).
    Basis {
        #[command(flatten)]
        rep: RepArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the per-order verification suite; exit status 0 iff everything passes.
    Verify {
        #[command(flatten)]
        rep: RepArgs,
        /// Seed for the sampled weighted orders.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of sampled orders.
        #[arg(long)]
        orders: Option<usize>,
        /// Degrees of a homogeneous system of parameters, e.g. 2,3.
        #[arg(long, value_delimiter = ',')]
        hsop: Option<Vec<u64>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Zero-sum completions of sequences modulo p.
    Schmid {
        #[arg(long)]
        p: u64,
        /// Comma-separated sequence entries.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        seq: Option<Vec<i64>>,
        /// A 1-based index pair k1,k2 with equal entries.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        pair: Option<Vec<usize>>,
        /// Sweep all sequences of length p+1 (sampled when p > 5).
        #[arg(long)]
        exhaustive: bool,
        /// Reject sequences too short to guarantee an equal pair.
        #[arg(long)]
        require_pair: bool,
        /// Sample size for the sampled sweep.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coinvariant statistics and standard monomials under one order.
    Coinv {
        #[command(flatten)]
        rep: RepArgs,
        /// lex, grlex, grevlex or lex-sigma (y before x, w before z).
        #[arg(long)]
        order: Option<String>,
        /// Degrees of a homogeneous system of parameters, e.g. 2,3.
        #[arg(long, value_delimiter = ',')]
        hsop: Option<Vec<u64>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Describe the field GF(2^k) holding the p-th roots of unity.
    Field {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct RepArgs {
    /// JSON run configuration; the flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Comma-separated weights a_1..a_r.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weights: Option<Vec<i64>>,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write output to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] dihedral_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_resource_cap() => 3,
            _ => 2,
        }
    }

    fn hint(&self) -> Option<String> {
        match self {
            CliError::Core(dihedral_core::Error::NotOddPrime(p)) if p % 2 == 1 && *p >= 3 => Some(format!(
                "p = {p} is odd but composite. The universal basis, its verification and the coinvariant \
                 formulas are stated for odd primes only; zero-sum questions for composite moduli remain \
                 available through `dihedral schmid --p {p}`."
            )),
            _ => None,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced: the rendered output and whether its checks passed.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

impl RepArgs {
    fn config(&self) -> CliResult<RunConfig> {
        let mut config = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                RunConfig::from_json(&text).map_err(|source| CliError::Json {
                    path: path.clone(),
                    source,
                })?
            }
            None => {
                let p = self
                    .p
                    .ok_or_else(|| CliError::Usage("either --config or --p is required".into()))?;
                RunConfig::new(p, 1, 0, None)
            }
        };
        if let Some(p) = self.p {
            config.rep.p = p;
        }
        if let Some(r) = self.r {
            config.rep.r = r;
        }
        if let Some(s) = self.s {
            config.rep.s = s;
        }
        if let Some(w) = &self.weights {
            config.rep.weights = Some(w.clone());
        }
        Ok(config)
    }
}

fn json_text<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes") + "\n"
}

fn rep_line(rep: &DihedralRep) -> String {
    format!("p = {}, r = {}, s = {}, weights {:?}", rep.p(), rep.r(), rep.s(), rep.weights())
}

fn cmd_basis(rep_args: &RepArgs, json: bool) -> CliResult<Outcome> {
    let rep = rep_args.config()?.representation()?;
    rep.require_prime()?;
    let listing = basis_listing(&rep)?;
    if json {
        return Ok(Outcome::ok(json_text(&listing)));
    }
    let mut t = String::new();
    writeln!(t, "representation: {}", rep_line(&rep)).unwrap();
    writeln!(t, "\nHilbert ideal generators ({}):", listing.hilbert_ideal_generators.len()).unwrap();
    for g in &listing.hilbert_ideal_generators {
        writeln!(t, "  {g}").unwrap();
    }
    for (title, records) in [("universal basis", &listing.universal_basis), ("pruned", &listing.pruned)] {
        writeln!(t, "\n{title} ({}):", records.len()).unwrap();
        let width = records.iter().map(|r| family_name(r.family).len()).max().unwrap_or(0);
        for r in records {
            writeln!(t, "  {:<width$}  {}", family_name(r.family), r.polynomial).unwrap();
        }
    }
    Ok(Outcome::ok(t))
}

fn family_name(f: dihedral_core::Family) -> &'static str {
    match f {
        dihedral_core::Family::OrbitSum => "orbit_sum",
        dihedral_core::Family::MonomialMultiple => "monomial_multiple",
        dihedral_core::Family::NormPair => "norm_pair",
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn field_line(field: &BinaryField) -> String {
    format!(
        "GF(2^{}), modulus {} ({:#b}), zeta = {:#b}",
        field.k,
        render_bitpoly(field.modulus_poly),
        field.modulus_poly,
        field.zeta
    )
}

fn render_verify(report: &Report) -> String {
    let rep = report.config.representation().expect("validated");
    let mut t = String::new();
    writeln!(t, "representation: {}", rep_line(&rep)).unwrap();
    if let Some(field) = &report.field {
        writeln!(t, "field: {}", field_line(field)).unwrap();
    }
    let c = &report.generator_counts;
    writeln!(
        t,
        "generators: hilbert ideal {}, orbit sums {}, monomial multiples {}, norm pairs {}, pruned {}",
        c.hilbert_ideal, c.orbit_sum, c.monomial_multiple, c.norm_pair, c.pruned
    )
    .unwrap();
    let orders: Vec<String> = report.orders.iter().map(|o| o.order.to_string()).collect();
    let width = orders.iter().map(String::len).max().unwrap_or(5).max(5);
    let header = format!(
        "{:<width$}  {:>4}  {:>5}  {:>4}  {:<5} {:<5} {:<5} {:<5} {}",
        "order", "gb", "dim", "top", "buch", "ideal", "stein", "topdg", "degbd"
    );
    writeln!(t, "\n{header}").unwrap();
    for (name, o) in orders.iter().zip(&report.orders) {
        let k = &o.checks;
        writeln!(
            t,
            "{:<width$}  {:>4}  {:>5}  {:>4}  {:<5} {:<5} {:<5} {:<5} {}",
            name,
            o.gb_size,
            o.dimension,
            o.top_degree,
            mark(k.buchberger_ok),
            mark(k.ideal_equal),
            mark(k.steinberg_ok),
            mark(k.top_degree_ok),
            mark(k.degree_bound_ok)
        )
        .unwrap();
    }
    writeln!(t).unwrap();
    for f in &report.formulas {
        writeln!(t, "{:<30} expected {:>4}  computed {:>4}  {}", f.name, f.expected, f.computed, mark(f.ok)).unwrap();
    }
    for c in &report.checks {
        writeln!(t, "{:<30} {}", c.name, mark(c.ok)).unwrap();
    }
    if let Some(h) = &report.hsop {
        writeln!(
            t,
            "hsop {:?}: bounds (top {}, dim {}), computed (top {}, dim {}), {}",
            h.degrees,
            h.bounds.top_degree,
            h.bounds.dimension,
            h.computed_top_degree,
            h.computed_dimension,
            if h.attained {
                "attained"
            } else if h.within_bounds {
                "within bounds"
            } else {
                "VIOLATED"
            }
        )
        .unwrap();
    }
    writeln!(t, "\noverall: {}", if report.pass { "PASS" } else { "FAIL" }).unwrap();
    t
}

fn cmd_verify(
    rep_args: &RepArgs,
    seed: Option<u64>,
    orders: Option<usize>,
    hsop: &Option<Vec<u64>>,
    json: bool,
) -> CliResult<(Outcome, Option<PathBuf>)> {
    let mut config = rep_args.config()?;
    if let Some(seed) = seed {
        config.seed = seed;
    }
    if let Some(n) = orders {
        config.sampled_orders = n;
        config.orders = None;
    }
    if hsop.is_some() {
        config.hsop_degrees = hsop.clone();
    }
    let report = verify(&config)?;
    let text = if json { json_text(&report) } else { render_verify(&report) };
    Ok((
        Outcome {
            text,
            passed: report.pass,
        },
        config.output.map(PathBuf::from),
    ))
}

fn parse_order(name: &str, rep: &DihedralRep) -> CliResult<MonomialOrder> {
    let n = rep.nvars();
    Ok(match name {
        "lex" => MonomialOrder::lex(n),
        "grlex" => MonomialOrder::grlex(n),
        "grevlex" => MonomialOrder::grevlex(n),
        "lex-sigma" => sigma_swapped_lex(rep),
        other => {
            return Err(CliError::Usage(format!(
                "unknown order `{other}` (expected lex, grlex, grevlex or lex-sigma)"
            )))
        }
    })
}

fn render_coinv(listing: &CoinvariantListing) -> String {
    let vars = listing.rep.vars();
    let mut t = String::new();
    writeln!(t, "representation: {}", rep_line(&listing.rep)).unwrap();
    writeln!(t, "order: {}", listing.order).unwrap();
    writeln!(
        t,
        "dimension {}, top degree {} (formula {})",
        listing.stats.dimension, listing.stats.top_degree, listing.top_degree_formula
    )
    .unwrap();
    writeln!(t, "lead-term ideal: {}", listing.stats.lt_generators.join(", ")).unwrap();
    let mut by_degree: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
    for m in &listing.stats.standard_monomials {
        let d = vars.parse_monomial(m).expect("rendered monomials parse").degree();
        by_degree.entry(d).or_default().push(m);
    }
    writeln!(t, "\ndegree  count  standard monomials").unwrap();
    for (d, ms) in &by_degree {
        writeln!(t, "{:>6}  {:>5}  {}", d, ms.len(), ms.join(", ")).unwrap();
    }
    if let Some(h) = &listing.hsop {
        writeln!(t, "\nhsop degrees {:?}", h.degrees).unwrap();
        writeln!(t, "{:<12} {:>6} {:>9}", "", "bound", "computed").unwrap();
        writeln!(t, "{:<12} {:>6} {:>9}", "top degree", h.bounds.top_degree, h.computed_top_degree).unwrap();
        writeln!(t, "{:<12} {:>6} {:>9}", "dimension", h.bounds.dimension, h.computed_dimension).unwrap();
        writeln!(
            t,
            "{}",
            if h.attained {
                "bounds attained (equality)"
            } else if h.within_bounds {
                "within bounds"
            } else {
                "bounds VIOLATED"
            }
        )
        .unwrap();
    }
    t
}

fn cmd_coinv(rep_args: &RepArgs, order: &Option<String>, hsop: &Option<Vec<u64>>, json: bool) -> CliResult<Outcome> {
    let mut config = rep_args.config()?;
    let rep = config.representation()?;
    rep.require_prime()?;
    if let Some(name) = order {
        config.orders = Some(vec![parse_order(name, &rep)?]);
    }
    if hsop.is_some() {
        config.hsop_degrees = hsop.clone();
    }
    let listing = coinvariant_listing(&config)?;
    let passed = listing.hsop.as_ref().is_none_or(|h| h.within_bounds);
    let text = if json { json_text(&listing) } else { render_coinv(&listing) };
    Ok(Outcome { text, passed })
}

fn residues(seq: &[i64], p: u64) -> Vec<u64> {
    seq.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()
}

fn one_based(indices: &[usize]) -> Vec<usize> {
    indices.iter().map(|i| i + 1).collect()
}

fn subset_text(indices: &[usize]) -> String {
    let items: Vec<String> = one_based(indices).iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn sweep_text(s: &SweepSummary) -> String {
    let kind = if s.exhaustive { "all" } else { "sampled" };
    let mut t = format!(
        "p = {}: {} {} sequences of length {}, {} equal pairs, {} without a completion\n",
        s.p,
        kind,
        s.sequences,
        s.p + 1,
        s.pairs,
        s.failures
    );
    if let Some(f) = &s.first_failure {
        writeln!(t, "first failure: seq {:?}, pair ({}, {})", f.seq, f.k1 + 1, f.k2 + 1).unwrap();
    } else {
        writeln!(t, "all {} pairs completable", s.pairs).unwrap();
    }
    t
}

#[allow(clippy::too_many_arguments)]
fn cmd_schmid(
    p: u64,
    seq: &Option<Vec<i64>>,
    pair: &Option<Vec<usize>>,
    exhaustive: bool,
    require_pair: bool,
    samples: u64,
    seed: u64,
    json: bool,
) -> CliResult<Outcome> {
    if p < 2 {
        return Err(dihedral_core::Error::ModulusTooSmall(p).into());
    }
    if exhaustive {
        if seq.is_some() || pair.is_some() {
            return Err(CliError::Usage("--exhaustive does not take --seq or --pair".into()));
        }
        let summary = if p <= EXHAUSTIVE_MAX_P {
            exhaustive_sweep(p)?
        } else {
            sampled_sweep(p, samples, seed)?
        };
        let text = if json { json_text(&summary) } else { sweep_text(&summary) };
        return Ok(Outcome {
            text,
            passed: summary.passed(),
        });
    }
    let raw = seq
        .as_ref()
        .ok_or_else(|| CliError::Usage("schmid needs --seq or --exhaustive".into()))?;
    let values = residues(raw, p);
    if let Some(i) = values.iter().position(|&x| x == 0) {
        return Err(CliError::Usage(format!("entry {} is zero mod {p}", i + 1)));
    }
    if let Some(pair) = pair {
        let [k1, k2] = pair[..] else {
            return Err(CliError::Usage("--pair takes exactly two indices k1,k2".into()));
        };
        if k1 == 0 || k2 == 0 {
            return Err(CliError::Usage("--pair indices are 1-based".into()));
        }
        let found = zerosum_completion(&values, k1 - 1, k2 - 1, p)?;
        let text = if json {
            json_text(&json!({
                "p": p, "seq": raw, "pair": [k1, k2],
                "subset": found.as_ref().map(|s| one_based(s)),
            }))
        } else {
            match &found {
                Some(s) => format!("pair ({k1}, {k2}), subset {}\n", subset_text(s)),
                None => format!("pair ({k1}, {k2}): no completion\n"),
            }
        };
        return Ok(Outcome::ok(text));
    }
    if values.len() < p as usize + 1 {
        if require_pair {
            return Err(CliError::Usage(format!(
                "sequence has length {} but --require-pair needs at least p + 1 = {} entries",
                values.len(),
                p + 1
            )));
        }
        let mut rows = Vec::new();
        for k1 in 0..values.len() {
            for k2 in k1 + 1..values.len() {
                if values[k1] == values[k2] {
                    rows.push((k1, k2, zerosum_completion(&values, k1, k2, p)?));
                }
            }
        }
        let text = if json {
            json_text(&json!({
                "p": p, "seq": raw,
                "pairs": rows.iter().map(|(a, b, s)| json!({
                    "pair": [a + 1, b + 1], "subset": s.as_ref().map(|s| one_based(s)),
                })).collect::<Vec<_>>(),
            }))
        } else if rows.is_empty() {
            "no equal pairs\n".to_string()
        } else {
            rows.iter()
                .map(|(a, b, s)| match s {
                    Some(s) => format!("pair ({}, {}), subset {}\n", a + 1, b + 1, subset_text(s)),
                    None => format!("pair ({}, {}): no completion\n", a + 1, b + 1),
                })
                .collect()
        };
        return Ok(Outcome::ok(text));
    }
    match schmid_zero_sum(&values, p) {
        Ok(w) => {
            let text = if json {
                json_text(&json!({
                    "p": p, "seq": raw, "pair": [w.k1 + 1, w.k2 + 1], "subset": one_based(&w.subset),
                }))
            } else {
                format!("pair ({}, {}), subset {}\n", w.k1 + 1, w.k2 + 1, subset_text(&w.subset))
            };
            Ok(Outcome::ok(text))
        }
        Err(dihedral_core::Error::Precondition(msg)) if !is_prime(p) => Ok(Outcome {
            text: if json {
                json_text(&json!({ "p": p, "seq": raw, "pair": null, "reason": msg }))
            } else {
                format!("{msg} (p = {p} is not prime)\n")
            },
            passed: false,
        }),
        Err(e) => Err(e.into()),
    }
}

fn render_bitpoly(mask: u32) -> String {
    let terms: Vec<String> = (0..32)
        .rev()
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    terms.join(" + ")
}

fn cmd_field(p: u64, json: bool) -> CliResult<Outcome> {
    let field = BinaryField::build(p)?;
    let text = if json {
        field.to_json() + "\n"
    } else {
        format!("p = {p}: {}, zeta has order {p}\n", field_line(&field))
    };
    Ok(Outcome::ok(text))
}

fn emit(text: &str, out: Option<PathBuf>) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|source| CliError::Io { path, source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    let (outcome, out) = match &cli.command {
        Command::Basis { rep, out } => (cmd_basis(rep, out.json)?, out.out.clone()),
        Command::Verify {
            rep,
            seed,
            orders,
            hsop,
            out,
        } => {
            let (outcome, from_config) = cmd_verify(rep, *seed, *orders, hsop, out.json)?;
            (outcome, out.out.clone().or(from_config))
        }
        Command::Schmid {
            p,
            seq,
            pair,
            exhaustive,
            require_pair,
            samples,
            seed,
            out,
        } => (
            cmd_schmid(*p, seq, pair, *exhaustive, *require_pair, *samples, *seed, out.json)?,
            out.out.clone(),
        ),
        Command::Coinv { rep, order, hsop, out } => (cmd_coinv(rep, order, hsop, out.json)?, out.out.clone()),
        Command::Field { p, out } => (cmd_field(*p, out.json)?, out.out.clone()),
    };
    emit(&outcome.text, out)?;
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(hint) = e.hint() {
                eprintln!("{hint}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
