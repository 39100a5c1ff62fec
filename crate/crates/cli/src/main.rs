//! `shiftop`: multiplicities, branching tables and identity checks from the
//! command line.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use shiftop::diffformula::{branching_table, super_branching_table};
use shiftop::oracle::{
    hook_length_dimension, oracle_hook_schur, oracle_pieri, oracle_vandermonde,
};
use shiftop::partitions::{parse_shape_tag, super_m_from_lambda};
use shiftop::report::{MultiplicityResult, OccupancyReport, VerificationRecord};
use shiftop::{
    occupancy_table, verify_symmetry_identities, Backend,
    HookPartition, MVector, Multiplicities, Occupancy, Partition, RootSubset, SpinConfig,
    SuperMultiplicities, SuperRootSubset,
};

#[derive(Parser)]
#[command(name = "shiftop", version, about = "Tensor-power multiplicities via Weyl-denominator shift operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of one diagram (or all of them) in a tensor power of A_r.
    Multiplicity(MultiplicityArgs),
    /// Branching multiplicities for a regular subalgebra of A_r.
    Branch(BranchArgs),
    /// Conjectured multiplicities for sl(m|n) and its subalgebras.
    Super(SuperArgs),
    /// Occupancy coefficients c(M).
    Occupancy(OccupancyArgs),
    /// Run an identity or cross-check suite.
    Verify(VerifyArgs),
    /// Time the occupancy backends over a grid and print CSV.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendChoice {
    Dp,
    Poly,
    Both,
}

impl BackendChoice {
    fn primary(self) -> Backend {
        match self {
            BackendChoice::Poly => Backend::Poly,
            _ => Backend::Dp,
        }
    }
}

#[derive(Args, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
    /// Occupancy backend; `both` computes with each and fails on any mismatch.
    #[arg(long, value_enum, default_value = "dp")]
    backend: BackendChoice,
    /// Worker threads for table computations.
    #[arg(long, env = "SHIFTOP_THREADS")]
    jobs: Option<usize>,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args, Clone)]
struct SpinArgs {
    /// Twice the spin: one value (with --L) or a comma-separated list.
    #[arg(long = "twoS", value_delimiter = ',', required = true)]
    two_s: Vec<u32>,
    /// Number of tensor factors.
    #[arg(long = "L")]
    sites: Option<usize>,
}

impl SpinArgs {
    fn config(&self) -> Result<SpinConfig> {
        let list = match (self.two_s.as_slice(), self.sites) {
            ([d], Some(l)) => vec![*d; l],
            (ds, None) => ds.to_vec(),
            (ds, Some(l)) if ds.len() == l => ds.to_vec(),
            (ds, Some(l)) => bail!("--twoS lists {} factors but --L is {l}", ds.len()),
        };
        Ok(SpinConfig::new(list)?)
    }

    fn uniform(&self) -> Result<(u32, usize)> {
        let spins = self.config()?;
        if !spins.is_uniform() {
            bail!("superalgebra queries need a single --twoS value");
        }
        Ok((spins.two_s()[0], spins.sites()))
    }
}

#[derive(Args)]
struct MultiplicityArgs {
    /// Algebra, e.g. A2.
    #[arg(long)]
    algebra: String,
    #[command(flatten)]
    spins: SpinArgs,
    /// Target diagram, e.g. 3,2,1.
    #[arg(long, conflicts_with = "table")]
    lambda: Option<String>,
    /// Every diagram with at most r+1 rows.
    #[arg(long)]
    table: bool,
    /// Cross-check against the Vandermonde oracle.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BranchArgs {
    #[arg(long)]
    algebra: String,
    /// Positive roots generating the subalgebra, e.g. "L1-L3,L3-L4" or "a1+a2".
    #[arg(long, default_value = "")]
    roots: String,
    #[command(flatten)]
    spins: SpinArgs,
    /// Ambient occupancy vector for a single query, e.g. 3,1.
    #[arg(long = "M", value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "table")]
    m: Option<Vec<i64>>,
    #[arg(long)]
    table: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SuperArgs {
    /// Hook shape m,n of sl(m|n).
    #[arg(long)]
    shape: String,
    #[command(flatten)]
    spins: SpinArgs,
    /// Target hook diagram, e.g. 3,2,1.
    #[arg(long, conflicts_with_all = ["table", "m"])]
    lambda: Option<String>,
    /// Occupancy vector for a single (branching) query.
    #[arg(long = "M", value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "table")]
    m: Option<Vec<i64>>,
    /// Restrict to the subalgebra generated by these roots ("L1-L2", "L2-K1", ...).
    #[arg(long)]
    roots: Option<String>,
    #[arg(long)]
    table: bool,
    /// Per-variable truncation bound of the shift operator (defaults to M).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    truncation: Option<Vec<i64>>,
    /// Cross-check against the hook-Schur oracle.
    #[arg(long)]
    check: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct OccupancyArgs {
    #[arg(long)]
    algebra: String,
    #[command(flatten)]
    spins: SpinArgs,
    /// Single occupancy vector; without it the full table is printed.
    #[arg(long = "M", value_delimiter = ',', allow_hyphen_values = true)]
    m: Option<Vec<i64>>,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// c(M) invariant under adjacent transpositions.
    #[value(name = "appendixB")]
    AppendixB,
    /// Difference formula against the Vandermonde and Pieri oracles.
    Theorem,
    /// mu equals the hook-length dimension at 2s = 1.
    #[value(name = "hooklength")]
    HookLength,
    /// DP against polynomial occupancy backend.
    Backends,
    /// Super difference formula against the hook-Schur oracle.
    Super,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Rank r of A_r (ordinary suites).
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Hook shape m,n (super suite).
    #[arg(long, default_value = "2,1")]
    shape: String,
    #[command(flatten)]
    spins: SpinArgs,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long = "r", value_delimiter = ',', default_value = "1,2,3")]
    ranks: Vec<usize>,
    #[arg(long = "twoS", value_delimiter = ',', default_value = "1,2,3")]
    two_s: Vec<u32>,
    #[arg(long = "L", value_delimiter = ',', default_value = "2,4,6")]
    sites: Vec<usize>,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

/// Failure of a cross-check, reported with exit code 3.
#[derive(Debug)]
struct Mismatch(String);

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Mismatch {}

fn parse_rank(algebra: &str) -> Result<usize> {
    let digits = algebra
        .strip_prefix(['A', 'a'])
        .ok_or_else(|| anyhow!("unsupported algebra {algebra:?}; expected A<r>"))?;
    let r: usize = digits.parse().with_context(|| format!("bad rank in {algebra:?}"))?;
    if r == 0 {
        bail!("rank must be positive");
    }
    Ok(r)
}

fn setup_threads(jobs: Option<usize>) {
    if let Some(n) = jobs {
        // the global pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn emit(common_output: &Option<std::path::PathBuf>, text: &str) -> Result<()> {
    match common_output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cross_backend<F: Fn(Backend) -> Vec<(Vec<i64>, BigInt)>>(choice: BackendChoice, f: F) -> Result<Vec<(Vec<i64>, BigInt)>> {
    let first = f(choice.primary());
    if choice == BackendChoice::Both {
        let second = f(Backend::Poly);
        if let Some((a, b)) = first.iter().zip(&second).find(|(a, b)| a != b) {
            return Err(Mismatch(format!("backends disagree at M={:?}: dp {} vs poly {}", a.0, a.1, b.1)).into());
        }
        if first.len() != second.len() {
            return Err(Mismatch("backends produced different row sets".into()).into());
        }
    }
    Ok(first)
}

fn cmd_multiplicity(a: MultiplicityArgs) -> Result<()> {
    setup_threads(a.common.jobs);
    let r = parse_rank(&a.algebra)?;
    let spins = a.spins.config()?;
    let targets: Vec<Partition> = match (&a.lambda, a.table) {
        (Some(l), false) => vec![l.parse()?],
        (None, true) => Partition::all_of_size(spins.total_degree() as usize, r + 1),
        _ => bail!("give either --lambda or --table"),
    };
    for lam in &targets {
        Multiplicities::new(&spins, r, Backend::Dp).m_of(lam)?;
    }
    let rows = cross_backend(a.common.backend, |backend| {
        let mult = Multiplicities::new(&spins, r, backend);
        let mut rows: Vec<(Vec<i64>, BigInt)> = targets
            .iter()
            .map(|lam| {
                let mv = mult.m_of(lam).expect("validated");
                (mv.entries().to_vec(), mult.at(mv.entries()))
            })
            .collect();
        rows.sort();
        rows
    })?;
    let mult = Multiplicities::new(&spins, r, Backend::Dp);
    let oracle = a.check.then(|| oracle_vandermonde(&spins, r));
    let query = json!({"algebra": a.algebra, "twoS": spins.two_s(), "L": spins.sites()});
    let mut out = String::new();
    let mut json_rows = Vec::new();
    let mut mismatch = None;
    if a.common.format == Format::Tsv {
        out.push_str(if oracle.is_some() { "M\tlambda\tmu\toracle\n" } else { "M\tlambda\tmu\n" });
    }
    for (m, mu) in &rows {
        let mv = MVector::new(m.clone(), spins.total_degree() as i64);
        let lam = shiftop::partitions::lambda_from_m(&mv)?;
        let mut q = query.clone();
        q["lambda"] = json!(lam.to_string());
        let mut res = MultiplicityResult::new(q, mu, m.clone(), mult.witness_terms(&lam)?);
        if let Some(o) = &oracle {
            let ov = o.get(&lam);
            if &ov != mu && mismatch.is_none() {
                mismatch = Some(format!("lambda={lam}: formula {mu}, oracle {ov}"));
            }
            res.oracle = Some(ov.to_string());
        }
        match a.common.format {
            Format::Tsv => {
                let _ = write!(out, "{}\t{}\t{}", mv, lam, mu);
                if let Some(o) = &res.oracle {
                    let _ = write!(out, "\t{o}");
                }
                out.push('\n');
            }
            Format::Json => json_rows.push(res),
        }
    }
    if a.common.format == Format::Json {
        out = if a.table { render_json(&json_rows) } else { render_json(&json_rows[0]) };
    }
    emit(&a.common.output, &out)?;
    match mismatch {
        Some(m) => Err(Mismatch(m).into()),
        None => Ok(()),
    }
}

fn cmd_branch(a: BranchArgs) -> Result<()> {
    setup_threads(a.common.jobs);
    let r = parse_rank(&a.algebra)?;
    let spins = a.spins.config()?;
    let spec = RootSubset::parse(r, &a.roots)?.close();
    let rows = cross_backend(a.common.backend, |backend| {
        if let Some(m) = &a.m {
            let occ = Occupancy::ordinary(&spins, r, backend);
            vec![(m.clone(), shiftop::diffformula::branching_at(&spec, &occ, m))]
        } else {
            branching_table(&spec, &spins, backend).into_iter().collect()
        }
    });
    if let Some(m) = &a.m {
        if m.len() != r {
            bail!("--M needs {r} entries");
        }
    } else if !a.table {
        bail!("give either --M or --table");
    }
    let rows = rows?;
    let total = spins.total_degree() as i64;
    let mut out = String::new();
    match a.common.format {
        Format::Tsv => {
            let _ = writeln!(out, "# {spec}");
            out.push_str("M\tweight\tmu\n");
            for (m, mu) in &rows {
                let mv = MVector::new(m.clone(), total);
                let _ = writeln!(out, "{}\t{}\t{}", mv, weight_label(&spec, &mv.exponents()), mu);
            }
        }
        Format::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|(m, mu)| {
                    let mv = MVector::new(m.clone(), total);
                    json!({"M": m, "weight": weight_label(&spec, &mv.exponents()), "mu": mu.to_string()})
                })
                .collect();
            let comps: Vec<&Vec<usize>> = spec.components().iter().collect();
            out = render_json(&json!({
                "query": {"algebra": a.algebra, "roots": a.roots, "twoS": spins.two_s(), "L": spins.sites()},
                "components": comps,
                "abelian": spec.abelian_indices(),
                "entries": entries,
            }));
        }
    }
    emit(&a.common.output, &out)
}

/// `"(3,2)[1]"`: one diagram per component, then the abelian charges.
fn weight_label(spec: &shiftop::SubalgebraSpec, exps: &[i64]) -> String {
    let comps: Vec<String> = spec
        .components()
        .iter()
        .map(|c| format!("({})", c.iter().map(|&l| exps[l - 1].to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let charges: Vec<String> = spec.abelian_indices().iter().map(|&l| exps[l - 1].to_string()).collect();
    let mut s = comps.join("");
    if !charges.is_empty() {
        let _ = write!(s, "[{}]", charges.join(","));
    }
    s
}

fn cmd_super(a: SuperArgs) -> Result<()> {
    setup_threads(a.common.jobs);
    let (m, n) = parse_shape_tag(&a.shape)?;
    if m + n < 2 {
        bail!("sl(m|n) needs m + n >= 2");
    }
    let (two_s, sites) = a.spins.uniform()?;
    let total = two_s as i64 * sites as i64;

    if let Some(roots) = &a.roots {
        let sub = SuperRootSubset::parse(m, n, roots)?;
        let rows: Vec<(Vec<i64>, BigInt)> = match (&a.m, a.table) {
            (Some(mv), false) => {
                let bound = a.truncation.clone().unwrap_or_else(|| mv.iter().map(|&x| x.max(0)).collect());
                let den = shiftop::weyl::weyl_denominator_super_subalgebra::<BigInt>(&sub, &bound)?;
                let occ = Occupancy::superalgebra(two_s, sites, m, n, a.common.backend.primary());
                if mv.len() != m + n - 1 {
                    bail!("--M needs {} entries", m + n - 1);
                }
                vec![(mv.clone(), shiftop::apply_shift(&den, |x| occ.coefficient(x), mv))]
            }
            (None, true) => cross_backend(a.common.backend, |b| {
                super_branching_table(&sub, two_s, sites, b).into_iter().collect()
            })?,
            _ => bail!("give either --M or --table"),
        };
        let mut out = String::new();
        match a.common.format {
            Format::Tsv => {
                let _ = writeln!(out, "# {sub}");
                out.push_str("M\tmu\n");
                for (mv, mu) in &rows {
                    let _ = writeln!(out, "{}\t{}", MVector::new(mv.clone(), total), mu);
                }
            }
            Format::Json => {
                let entries: Vec<Value> =
                    rows.iter().map(|(mv, mu)| json!({"M": mv, "mu": mu.to_string()})).collect();
                out = render_json(&json!({
                    "query": {"shape": [m, n], "roots": roots, "twoS": two_s, "L": sites},
                    "entries": entries,
                }));
            }
        }
        return emit(&a.common.output, &out);
    }

    let targets: Vec<HookPartition> = match (&a.lambda, &a.m, a.table) {
        (Some(l), None, false) => vec![HookPartition::new(l.parse()?, m, n)?],
        (None, Some(mv), false) => {
            let smv = shiftop::SuperMVector::new(mv.clone(), total, m, n)?;
            vec![shiftop::partitions::lambda_from_super_m(&smv)?]
        }
        (None, None, true) => Partition::all_in_hook(total as usize, m, n)
            .into_iter()
            .map(|p| HookPartition::new(p, m, n))
            .collect::<shiftop::Result<_>>()?,
        _ => bail!("give exactly one of --lambda, --M or --table"),
    };
    let mut ms = Vec::new();
    for lam in &targets {
        ms.push(super_m_from_lambda(lam, total as u64)?.entries().to_vec());
    }
    let truncated = match &a.truncation {
        Some(bound) => Some(shiftop::weyl::weyl_denominator_super::<BigInt>(m, n, bound)?),
        None => None,
    };
    let rows = cross_backend(a.common.backend, |backend| {
        let sm = SuperMultiplicities::new(m, n, two_s, sites, backend);
        let mut rows: Vec<(Vec<i64>, BigInt)> = ms
            .iter()
            .map(|mv| {
                let mu = match &truncated {
                    Some(den) => shiftop::apply_shift(den, |x| sm.occupancy().coefficient(x), mv),
                    None => sm.at(mv),
                };
                (mv.clone(), mu)
            })
            .collect();
        rows.sort();
        rows
    })?;
    let oracle = if a.check { Some(oracle_hook_schur(two_s, sites, m, n)?) } else { None };
    let mut mismatch = None;
    let mut out = String::new();
    let mut json_rows = Vec::new();
    let witness = SuperMultiplicities::new(m, n, two_s, sites, Backend::Dp);
    if a.common.format == Format::Tsv {
        out.push_str(if oracle.is_some() { "M\tlambda\tmu\toracle\n" } else { "M\tlambda\tmu\n" });
    }
    for (mv, mu) in &rows {
        let smv = shiftop::SuperMVector::new(mv.clone(), total, m, n)?;
        let lam = shiftop::partitions::lambda_from_super_m(&smv)?;
        let ov = oracle.as_ref().map(|o| o.get(&lam).cloned().unwrap_or_default());
        if let Some(ov) = &ov {
            if ov != mu && mismatch.is_none() {
                mismatch = Some(format!("lambda={lam}: formula {mu}, oracle {ov}"));
            }
        }
        match a.common.format {
            Format::Tsv => {
                let _ = write!(out, "{}\t{}\t{}", MVector::new(mv.clone(), total), lam.shape(), mu);
                if let Some(ov) = &ov {
                    let _ = write!(out, "\t{ov}");
                }
                out.push('\n');
            }
            Format::Json => {
                let q = json!({"shape": [m, n], "twoS": two_s, "L": sites, "lambda": lam.shape().to_string()});
                let mut res = MultiplicityResult::new(q, mu, mv.clone(), witness.witness_terms(mv));
                res.oracle = ov.map(|v| v.to_string());
                json_rows.push(res);
            }
        }
    }
    if a.common.format == Format::Json {
        out = if a.table { render_json(&json_rows) } else { render_json(&json_rows[0]) };
    }
    emit(&a.common.output, &out)?;
    match mismatch {
        Some(m) => Err(Mismatch(m).into()),
        None => Ok(()),
    }
}

fn cmd_occupancy(a: OccupancyArgs) -> Result<()> {
    setup_threads(a.common.jobs);
    let r = parse_rank(&a.algebra)?;
    let spins = a.spins.config()?;
    let total = spins.total_degree() as i64;
    let rows = cross_backend(a.common.backend, |backend| match &a.m {
        Some(mv) => {
            let occ = Occupancy::ordinary(&spins, r, backend);
            vec![(mv.clone(), occ.coefficient(mv))]
        }
        None => occupancy_table(&spins, r, true, backend).entries.into_iter().collect(),
    });
    if let Some(mv) = &a.m {
        if mv.len() != r {
            bail!("--M needs {r} entries");
        }
    }
    let rows = rows?;
    let out = match a.common.format {
        Format::Json => {
            let table = shiftop::OccupancyTable { rank: r, spins: spins.clone(), entries: rows.into_iter().collect() };
            render_json(&OccupancyReport::from(&table))
        }
        Format::Tsv => {
            let mut s = String::from("M\tc\n");
            for (mv, c) in rows {
                let _ = writeln!(s, "{}\t{}", MVector::new(mv, total), c);
            }
            s
        }
    };
    emit(&a.common.output, &out)
}

fn cmd_verify(a: VerifyArgs) -> Result<()> {
    setup_threads(a.common.jobs);
    let spins = a.spins.config()?;
    let r = a.r;
    let mut records: Vec<VerificationRecord> = Vec::new();
    let mut summary = String::new();
    match a.suite {
        Suite::AppendixB => {
            let rep = verify_symmetry_identities(&spins, r);
            for v in &rep.violations {
                records.push(VerificationRecord::new(
                    json!({"M": v.m, "transposition": v.transposition}),
                    &v.lhs,
                    &v.rhs,
                ));
            }
            let _ = writeln!(summary, "{} identities checked, {} violations", rep.checked, rep.violations.len());
        }
        Suite::Theorem | Suite::HookLength => {
            let mult = Multiplicities::new(&spins, r, Backend::Dp);
            let vdm = oracle_vandermonde(&spins, r);
            let pieri = oracle_pieri(&spins, r);
            for (_, (lam, mu)) in mult.table() {
                let oracle = match a.suite {
                    Suite::HookLength => {
                        if spins.two_s().iter().any(|&d| d != 1) {
                            bail!("the hook-length suite needs --twoS 1");
                        }
                        hook_length_dimension(&lam)
                    }
                    _ => {
                        let v = vdm.get(&lam);
                        if v != pieri.get(&lam) {
                            records.push(VerificationRecord::new(
                                json!({"lambda": lam.to_string(), "oracle": "pieri"}),
                                &v,
                                &pieri.get(&lam),
                            ));
                        }
                        v
                    }
                };
                records.push(VerificationRecord::new(json!({"lambda": lam.to_string()}), &mu, &oracle));
            }
        }
        Suite::Backends => {
            let occ = Occupancy::ordinary(&spins, r, Backend::Dp);
            for mv in MVector::all_standard(r, spins.total_degree() as i64) {
                let dp = occ.coefficient_with(Backend::Dp, mv.entries());
                let poly = occ.coefficient_with(Backend::Poly, mv.entries());
                records.push(VerificationRecord::new(json!({"M": mv.entries()}), &dp, &poly));
            }
        }
        Suite::Super => {
            let (m, n) = parse_shape_tag(&a.shape)?;
            let (two_s, sites) = a.spins.uniform()?;
            let oracle = oracle_hook_schur(two_s, sites, m, n)?;
            for (_, (lam, mu)) in SuperMultiplicities::new(m, n, two_s, sites, Backend::Dp).table() {
                let ov = oracle.get(&lam).cloned().unwrap_or_default();
                records.push(VerificationRecord::new(json!({"lambda": lam.to_string()}), &mu, &ov));
            }
        }
    }
    let failures: Vec<&VerificationRecord> = records.iter().filter(|r| !r.equal).collect();
    if a.suite != Suite::AppendixB {
        let _ = writeln!(summary, "{} checks, {} violations", records.len(), failures.len());
    }
    let out = match a.common.format {
        Format::Json => records.iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect(),
        Format::Tsv => summary.clone(),
    };
    emit(&a.common.output, &out)?;
    if let Some(first) = failures.first() {
        eprintln!("first failure: {}", serde_json::to_string(first).unwrap());
        return Err(Mismatch(summary.trim().to_string()).into());
    }
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    let mut out = String::from("r,twoS,L,backend,entries,seconds\n");
    for &r in &a.ranks {
        for &two_s in &a.two_s {
            for &sites in &a.sites {
                let spins = SpinConfig::uniform(two_s, sites)?;
                let all = MVector::all_standard(r, spins.total_degree() as i64);
                for backend in [Backend::Dp, Backend::Poly] {
                    let start = Instant::now();
                    let occ = Occupancy::ordinary(&spins, r, backend);
                    for mv in &all {
                        std::hint::black_box(occ.coefficient(mv.entries()));
                    }
                    let secs = start.elapsed().as_secs_f64();
                    let name = match backend {
                        Backend::Dp => "dp",
                        Backend::Poly => "poly",
                    };
                    let _ = writeln!(out, "{r},{two_s},{sites},{name},{},{secs:.6}", all.len());
                }
            }
        }
    }
    emit(&a.output, &out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Multiplicity(a) => cmd_multiplicity(a),
        Command::Branch(a) => cmd_branch(a),
        Command::Super(a) => cmd_super(a),
        Command::Occupancy(a) => cmd_occupancy(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Mismatch>() => {
            eprintln!("verification failed: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
