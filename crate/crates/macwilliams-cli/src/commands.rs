//! The subcommands. Each validates its inputs, runs exact computations
//! from the core library, renders one report in the requested format,
//! and says whether every requested check passed. All output is
//! deterministic: map iteration is sorted, row order is fixed, and
//! worker count never reorders anything.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use clap::{ArgGroup, Args, ValueEnum};
use macwilliams_core::code::{
    code_from_generator, decomposition_enumerator, dual_brute_force, dual_code,
    dual_from_standard_form, weight_enumerator, Enumerator, LinearCode,
};
use macwilliams_core::cyclotomic::CycInt;
use macwilliams_core::krawtchouk::{block_pair_table, kraw_cyc};
use macwilliams_core::lp::{build_lp, partition_for_lp, solve_lp, verify_optimality, LpMode};
use macwilliams_core::num::{BigRational, One, Zero};
use macwilliams_core::partition::{all_decompositions, applicable_partitions, build_partition};
use macwilliams_core::transform::{
    counterexample_search, verify_identity, verify_identity_with, CounterexamplePair,
    IdentityReport,
};
use macwilliams_core::weight::WeightKind;
use macwilliams_core::{Element, Error, Ring};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{
    self, block_listing, enumerator_counts, parse_partition, parse_rational, parse_weight,
    partition_name, weight_name, BlockDto, CodeSpec, EnumeratorEntry, EnumeratorFile, RingSpec,
};
use crate::golden;
use crate::output::{
    aligned_table, csv_row, print_json, rational_string, seq_string, OutputFormat,
};

/// A failed run, classified for the exit code: `Config` is bad input or
/// an exceeded guard (exit 2); `Check` is a failed verification or a
/// broken internal invariant (exit 1).
#[derive(Debug)]
pub enum Failure {
    Config(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::GuardExceeded { .. } => {
                Failure::Config(format!("{e} (set MACWILLIAMS_GUARD to raise the ceiling)"))
            }
            Error::NotRational
            | Error::NonIntegerResult(_)
            | Error::MixedCyclotomicOrder { .. }
            | Error::NotFound(_)
            | Error::Infeasible
            | Error::Unbounded => Failure::Check(e.to_string()),
            other => Failure::Config(other.to_string()),
        }
    }
}

/// Bad input reported through anyhow, with its context chain inline.
/// An exceeded guard anywhere in the chain keeps its raise-the-ceiling
/// hint.
pub fn cfg(e: anyhow::Error) -> Failure {
    let guard_hit = e
        .chain()
        .any(|cause| matches!(cause.downcast_ref(), Some(Error::GuardExceeded { .. })));
    if guard_hit {
        Failure::Config(format!(
            "{e:#} (set MACWILLIAMS_GUARD to raise the ceiling)"
        ))
    } else {
        Failure::Config(format!("{e:#}"))
    }
}

/// Shared run context: output format, worker bound, enumeration guard.
pub struct Ctx {
    pub format: OutputFormat,
    pub jobs: usize,
    pub guard: u64,
}

/// Maps items in input order, fanning out over a bounded worker pool
/// when more than one job is allowed. Results keep the input order
/// regardless of the worker count.
fn map_ordered<T, U, F>(jobs: usize, items: &[T], f: F) -> Result<Vec<U>, Failure>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U, Failure> + Sync + Send,
{
    if jobs <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Config(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| items.par_iter().map(f).collect())
}

fn csv_unsupported(what: &str) -> Failure {
    Failure::Config(format!(
        "csv output is not defined for {what}; use json or pretty"
    ))
}

/// Plain text name of a ring for pretty output.
fn ring_text(ring: &Ring) -> String {
    if ring.r() == 1 {
        format!("Z/{}Z", ring.char_order())
    } else {
        format!("GR({}^{}, {})", ring.p(), ring.s(), ring.r())
    }
}

#[derive(Serialize)]
struct WeightEntryDto {
    value: String,
    count: u64,
}

fn weight_entries(map: &BTreeMap<BigRational, u64>) -> Vec<WeightEntryDto> {
    map.iter()
        .map(|(value, &count)| WeightEntryDto {
            value: rational_string(value),
            count,
        })
        .collect()
}

// ---------------------------------------------------------------- enumerate

#[derive(Args)]
#[command(group = ArgGroup::new("target").required(true).args(["partition", "weight"]))]
pub struct EnumerateArgs {
    /// Code description: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub code: String,
    /// Decomposition enumerator over this partition: lee | hamming | hom | subfield.
    #[arg(long)]
    pub partition: Option<String>,
    /// Weight enumerator for this weight: lee | hamming | homogeneous |
    /// subfield[:<num>[/<den>]].
    #[arg(long)]
    pub weight: Option<String>,
    /// Include the partition's block listing in the output.
    #[arg(long, requires = "partition")]
    pub blocks: bool,
}

#[derive(Serialize)]
struct WeightEnumeratorReport {
    weight: String,
    entries: Vec<WeightEntryDto>,
}

pub fn enumerate(args: &EnumerateArgs, ctx: &Ctx) -> Result<bool, Failure> {
    let spec: CodeSpec = config::load(&args.code, "code").map_err(cfg)?;
    let code = spec.build(ctx.guard).map_err(cfg)?;

    if let Some(name) = &args.partition {
        let kind = parse_partition(name).map_err(cfg)?;
        let partition = build_partition(kind, code.ring())?;
        let e = decomposition_enumerator(&code, &partition)?;
        let file = EnumeratorFile {
            partition: partition_name(kind).to_string(),
            entries: e
                .entries()
                .iter()
                .map(|(pi, &count)| EnumeratorEntry {
                    pi: pi.clone(),
                    count,
                })
                .collect(),
            blocks: args.blocks.then(|| block_listing(&partition)),
        };
        match ctx.format {
            OutputFormat::Json => print_json(&file),
            OutputFormat::Csv => {
                println!("{}", csv_row(&["pi".into(), "count".into()]));
                for entry in &file.entries {
                    println!(
                        "{}",
                        csv_row(&[seq_string(&entry.pi), entry.count.to_string()])
                    );
                }
            }
            OutputFormat::Pretty => {
                println!(
                    "{} decomposition enumerator, {} blocks, code of size {} over {}",
                    file.partition,
                    partition.block_count(),
                    code.size(),
                    ring_text(code.ring())
                );
                let mut rows = vec![vec!["pi".to_string(), "count".to_string()]];
                for entry in &file.entries {
                    rows.push(vec![seq_string(&entry.pi), entry.count.to_string()]);
                }
                print!("{}", aligned_table(&rows));
                if let Some(blocks) = &file.blocks {
                    println!("blocks:");
                    for block in blocks {
                        let cells: Vec<String> = block
                            .elements
                            .iter()
                            .map(|e| serde_json::to_string(e).expect("element"))
                            .collect();
                        println!("  {}: {}", block.label, cells.join(" "));
                    }
                }
            }
        }
        return Ok(true);
    }

    let kind = parse_weight(args.weight.as_deref().expect("clap group")).map_err(cfg)?;
    let dist = weight_enumerator(&code, &kind)?;
    let report = WeightEnumeratorReport {
        weight: weight_name(&kind),
        entries: weight_entries(&dist),
    };
    match ctx.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Csv => {
            println!("{}", csv_row(&["weight".into(), "count".into()]));
            for entry in &report.entries {
                println!(
                    "{}",
                    csv_row(&[entry.value.clone(), entry.count.to_string()])
                );
            }
        }
        OutputFormat::Pretty => {
            println!(
                "{} weight enumerator, code of size {} over {}",
                report.weight,
                code.size(),
                ring_text(code.ring())
            );
            let mut rows = vec![vec!["weight".to_string(), "count".to_string()]];
            for entry in &report.entries {
                rows.push(vec![entry.value.clone(), entry.count.to_string()]);
            }
            print!("{}", aligned_table(&rows));
        }
    }
    Ok(true)
}

// --------------------------------------------------------------------- dual

#[derive(Args)]
pub struct DualArgs {
    /// Code description: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub code: String,
    /// Recompute by scanning the whole ambient space instead of by
    /// standard form (slow; an independent cross-check).
    #[arg(long)]
    pub brute_force: bool,
}

pub fn dual(args: &DualArgs, ctx: &Ctx) -> Result<bool, Failure> {
    let spec: CodeSpec = config::load(&args.code, "code").map_err(cfg)?;
    let code = spec.build(ctx.guard).map_err(cfg)?;
    let dual = if args.brute_force {
        dual_brute_force(&code, ctx.guard)?
    } else {
        dual_from_standard_form(&code, ctx.guard)?
    };
    let described = CodeSpec::describe(&dual);
    match ctx.format {
        OutputFormat::Json => print_json(&described),
        OutputFormat::Csv => return Err(csv_unsupported("dual")),
        OutputFormat::Pretty => {
            println!(
                "dual of a size-{} code: size {} over {}, generators:",
                code.size(),
                dual.size(),
                ring_text(code.ring())
            );
            for row in &described.generators {
                println!("  {}", serde_json::to_string(row).expect("row"));
            }
        }
    }
    Ok(true)
}

// --------------------------------------------------------------- krawtchouk

#[derive(Args)]
pub struct KrawtchoukArgs {
    /// Ring description: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub ring: String,
    /// Alphabet partition: lee | hamming | hom | subfield.
    #[arg(long)]
    pub partition: String,
    /// Tuple length.
    #[arg(short = 'n', long = "length")]
    pub n: u64,
    /// Include the partition's block listing in the output.
    #[arg(long)]
    pub blocks: bool,
}

/// One coefficient: a rational (almost always an integer), or — off the
/// rational subfield — canonical cyclotomic coefficients c_e of ξ^e.
#[derive(Serialize)]
#[serde(untagged)]
enum KrawEntryDto {
    Rational { rational: String },
    Cyclotomic { cyclotomic: CycDto },
}

#[derive(Serialize)]
struct CycDto {
    order: u64,
    coefficients: Vec<String>,
}

fn kraw_entry(k: &CycInt) -> Result<KrawEntryDto, Failure> {
    match k.to_rational() {
        Ok(x) => Ok(KrawEntryDto::Rational {
            rational: rational_string(&x),
        }),
        Err(Error::NotRational) => Ok(KrawEntryDto::Cyclotomic {
            cyclotomic: CycDto {
                order: k.order(),
                coefficients: k.coefficients().iter().map(|c| c.to_string()).collect(),
            },
        }),
        Err(other) => Err(other.into()),
    }
}

fn kraw_cell(entry: &KrawEntryDto) -> String {
    match entry {
        KrawEntryDto::Rational { rational } => rational.clone(),
        KrawEntryDto::Cyclotomic { cyclotomic } => {
            format!("cyc {}", cyclotomic.coefficients.join(" "))
        }
    }
}

#[derive(Serialize)]
struct KrawtchoukReport {
    ring: RingSpec,
    partition: String,
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    blocks: Option<Vec<BlockDto>>,
    decompositions: Vec<Vec<u64>>,
    matrix: Vec<Vec<KrawEntryDto>>,
}

pub fn krawtchouk(args: &KrawtchoukArgs, ctx: &Ctx) -> Result<bool, Failure> {
    let spec: RingSpec = config::load(&args.ring, "ring").map_err(cfg)?;
    let ring = spec.build().map_err(cfg)?;
    let kind = parse_partition(&args.partition).map_err(cfg)?;
    let partition = build_partition(kind, &ring)?;
    let table = block_pair_table(&partition);
    let decs = all_decompositions(partition.block_count(), args.n);

    let matrix = map_ordered(ctx.jobs, &decs, |pi| {
        decs.iter()
            .map(|rho| kraw_entry(&kraw_cyc(&table, pi, rho)?))
            .collect::<Result<Vec<_>, Failure>>()
    })?;

    let report = KrawtchoukReport {
        ring: RingSpec::describe(&ring),
        partition: partition_name(kind).to_string(),
        n: args.n,
        blocks: args.blocks.then(|| block_listing(&partition)),
        decompositions: decs.clone(),
        matrix,
    };
    match ctx.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Csv => {
            let mut header = vec!["pi".to_string()];
            header.extend(decs.iter().map(|rho| seq_string(rho)));
            println!("{}", csv_row(&header));
            for (pi, row) in decs.iter().zip(&report.matrix) {
                let mut cells = vec![seq_string(pi)];
                cells.extend(row.iter().map(kraw_cell));
                println!("{}", csv_row(&cells));
            }
        }
        OutputFormat::Pretty => {
            println!(
                "{} Krawtchouk matrix over {}, n = {}: K[pi][rho]",
                report.partition,
                ring_text(&ring),
                args.n
            );
            let mut rows = Vec::new();
            let mut header = vec!["pi \\ rho".to_string()];
            header.extend(decs.iter().map(|rho| seq_string(rho)));
            rows.push(header);
            for (pi, row) in decs.iter().zip(&report.matrix) {
                let mut cells = vec![seq_string(pi)];
                cells.extend(row.iter().map(kraw_cell));
                rows.push(cells);
            }
            print!("{}", aligned_table(&rows));
        }
    }
    Ok(true)
}

// ------------------------------------------------------------------- verify

#[derive(Args)]
pub struct VerifyArgs {
    /// Code description: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub code: String,
    /// Check only this partition (default: every partition applicable
    /// to the ring): lee | hamming | hom | subfield.
    #[arg(long)]
    pub partition: Option<String>,
    /// Take the code-side enumerator from this document (as emitted by
    /// `enumerate --partition …`) instead of recomputing it.
    #[arg(long)]
    pub precomputed: Option<String>,
}

#[derive(Serialize)]
struct IdentityRowDto {
    rho: Vec<u64>,
    predicted: String,
    oracle: String,
    matches: bool,
}

#[derive(Serialize)]
struct PartitionReportDto {
    partition: String,
    enumerator_source: &'static str,
    pass: bool,
    elapsed_micros: u64,
    rows: Vec<IdentityRowDto>,
}

#[derive(Serialize)]
struct VerifyReport {
    pass: bool,
    reports: Vec<PartitionReportDto>,
}

fn report_dto(
    report: &IdentityReport,
    source: &'static str,
    elapsed_micros: u64,
) -> PartitionReportDto {
    PartitionReportDto {
        partition: partition_name(report.kind).to_string(),
        enumerator_source: source,
        pass: report.pass,
        elapsed_micros,
        rows: report
            .rows
            .iter()
            .map(|row| IdentityRowDto {
                rho: row.rho.clone(),
                predicted: rational_string(&row.predicted),
                oracle: rational_string(&row.oracle),
                matches: row.matches,
            })
            .collect(),
    }
}

pub fn verify(args: &VerifyArgs, ctx: &Ctx) -> Result<bool, Failure> {
    let spec: CodeSpec = config::load(&args.code, "code").map_err(cfg)?;
    let code = spec.build(ctx.guard).map_err(cfg)?;

    let reports: Vec<PartitionReportDto> = if let Some(arg) = &args.precomputed {
        let file: EnumeratorFile = config::load(arg, "enumerator").map_err(cfg)?;
        let kind = parse_partition(&file.partition).map_err(cfg)?;
        if let Some(requested) = &args.partition {
            let requested = parse_partition(requested).map_err(cfg)?;
            if requested != kind {
                return Err(Failure::Config(format!(
                    "--partition {} conflicts with the precomputed enumerator's `{}`",
                    partition_name(requested),
                    file.partition
                )));
            }
        }
        let partition = build_partition(kind, code.ring())?;
        let counts = enumerator_counts(&file, &partition, code.length()).map_err(cfg)?;
        let e = Enumerator::from_counts(counts);
        if e.total() != code.size() {
            return Err(Failure::Config(format!(
                "enumerator total {} does not match the code size {}",
                e.total(),
                code.size()
            )));
        }
        let started = Instant::now();
        let mut report = verify_identity_with(&code, &partition, &e, ctx.guard)?;
        report.elapsed_micros = Some(started.elapsed().as_micros() as u64);
        vec![report_dto(
            &report,
            "precomputed",
            report.elapsed_micros.unwrap(),
        )]
    } else {
        let kinds = match &args.partition {
            Some(name) => vec![parse_partition(name).map_err(cfg)?],
            None => applicable_partitions(code.ring()),
        };
        map_ordered(ctx.jobs, &kinds, |&kind| {
            let partition = build_partition(kind, code.ring())?;
            let started = Instant::now();
            let mut report = verify_identity(&code, &partition, ctx.guard)?;
            report.elapsed_micros = Some(started.elapsed().as_micros() as u64);
            Ok(report_dto(
                &report,
                "computed",
                report.elapsed_micros.unwrap(),
            ))
        })?
    };

    let pass = reports.iter().all(|r| r.pass);
    let report = VerifyReport { pass, reports };
    match ctx.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Csv => return Err(csv_unsupported("verify")),
        OutputFormat::Pretty => {
            for r in &report.reports {
                println!(
                    "{}: {} ({} rows, {} enumerator, {} µs)",
                    r.partition,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.rows.len(),
                    r.enumerator_source,
                    r.elapsed_micros
                );
                for row in r.rows.iter().filter(|row| !row.matches) {
                    println!(
                        "  rho {}: predicted {}, dual has {}",
                        seq_string(&row.rho),
                        row.predicted,
                        row.oracle
                    );
                }
            }
            println!(
                "{}",
                if report.pass {
                    "all identities verified"
                } else {
                    "identity verification FAILED"
                }
            );
        }
    }
    Ok(pass)
}

// ----------------------------------------------------------- counterexample

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SearchOrder {
    /// Canonical order: all single generators, then generator pairs.
    Scan,
    /// The same candidates in a seeded pseudo-random order, so small
    /// budgets sample the space instead of its canonical prefix.
    Shuffled,
}

#[derive(Args)]
pub struct CounterexampleArgs {
    /// Ring description: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub ring: String,
    /// Weight whose enumerator must agree while the duals' differ.
    #[arg(long)]
    pub weight: String,
    /// Code length.
    #[arg(short = 'n', long = "length")]
    pub n: usize,
    /// Maximum number of candidate generator matrices to examine.
    #[arg(long, default_value_t = 10_000)]
    pub budget: u64,
    /// Candidate visiting order.
    #[arg(long, value_enum, default_value_t = SearchOrder::Scan)]
    pub order: SearchOrder,
    /// RNG seed for --order shuffled.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Serialize)]
struct CounterexampleReport {
    ring: RingSpec,
    weight: String,
    n: usize,
    budget: u64,
    order: &'static str,
    seed: u64,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    first: Option<CodeSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second: Option<CodeSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shared_weights: Option<Vec<WeightEntryDto>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_dual_weights: Option<Vec<WeightEntryDto>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second_dual_weights: Option<Vec<WeightEntryDto>>,
}

/// The shuffled-order sibling of the library's scan: same candidate
/// space (single rows, then row pairs), same group-and-compare logic,
/// same brute-force re-verification of any hit — only the visiting
/// order differs, drawn from a seeded generator.
fn shuffled_search(
    ring: &Ring,
    kind: &WeightKind,
    n: usize,
    budget: u64,
    seed: u64,
    guard: u64,
) -> Result<Option<CounterexamplePair>, Failure> {
    let size = ring.tuple_space_size(n);
    if size > u128::from(guard) {
        return Err(Error::GuardExceeded { size, guard }.into());
    }
    let mut tuples: Vec<Vec<Element>> = Vec::new();
    ring.for_each_tuple(n, |t| tuples.push(t.to_vec()));
    let nonzero: Vec<Vec<Element>> = tuples
        .into_iter()
        .filter(|t| t.iter().any(|x| !ring.is_zero(x)))
        .collect();

    // The full candidate list is materialized for shuffling, so cap it
    // by the same ceiling that caps enumerations.
    let m = nonzero.len() as u128;
    let spec_count = m + m * (m - 1) / 2;
    if spec_count > u128::from(guard) {
        return Err(Error::GuardExceeded {
            size: spec_count,
            guard,
        }
        .into());
    }
    let mut specs: Vec<Vec<usize>> = Vec::with_capacity(spec_count as usize);
    for i in 0..nonzero.len() {
        specs.push(vec![i]);
    }
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            specs.push(vec![i, j]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in (1..specs.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        specs.swap(i, j);
    }
    specs.truncate(budget.min(u64::MAX) as usize);

    type WeightMap = BTreeMap<BigRational, u64>;
    let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
    let mut kept: Vec<(LinearCode, WeightMap)> = Vec::new();
    let mut groups: BTreeMap<WeightMap, Vec<usize>> = BTreeMap::new();
    for spec in specs {
        let rows: Vec<Vec<Element>> = spec.iter().map(|&i| nonzero[i].clone()).collect();
        let code = code_from_generator(ring, n, &rows, guard)?;
        let key: Vec<Vec<u64>> = code
            .codewords()
            .iter()
            .map(|w| w.iter().map(|x| ring.encode(x)).collect())
            .collect();
        if !seen.insert(key) {
            continue;
        }
        let weights = weight_enumerator(&code, kind)?;
        let dual_weights = weight_enumerator(&dual_code(&code, guard)?, kind)?;
        let mut hit = None;
        if let Some(indices) = groups.get(&weights) {
            for &idx in indices {
                if kept[idx].1 != dual_weights {
                    hit = Some(idx);
                    break;
                }
            }
        }
        if let Some(idx) = hit {
            let first = kept[idx].0.clone();
            let first_bf = weight_enumerator(&dual_brute_force(&first, guard)?, kind)?;
            let second_bf = weight_enumerator(&dual_brute_force(&code, guard)?, kind)?;
            if first_bf == second_bf {
                return Err(Failure::Check(
                    "dual computations disagree: standard form and brute force differ".into(),
                ));
            }
            return Ok(Some(CounterexamplePair {
                first,
                second: code,
                shared_weights: weights,
                first_dual_weights: first_bf,
                second_dual_weights: second_bf,
            }));
        }
        groups.entry(weights.clone()).or_default().push(kept.len());
        kept.push((code, dual_weights));
    }
    Ok(None)
}

pub fn counterexample(args: &CounterexampleArgs, ctx: &Ctx) -> Result<bool, Failure> {
    let spec: RingSpec = config::load(&args.ring, "ring").map_err(cfg)?;
    let ring = spec.build().map_err(cfg)?;
    let kind = parse_weight(&args.weight).map_err(cfg)?;

    let found = match args.order {
        SearchOrder::Scan => counterexample_search(&ring, &kind, args.n, args.budget, ctx.guard)?,
        SearchOrder::Shuffled => {
            shuffled_search(&ring, &kind, args.n, args.budget, args.seed, ctx.guard)?
        }
    };

    let report = CounterexampleReport {
        ring: RingSpec::describe(&ring),
        weight: weight_name(&kind),
        n: args.n,
        budget: args.budget,
        order: match args.order {
            SearchOrder::Scan => "scan",
            SearchOrder::Shuffled => "shuffled",
        },
        seed: args.seed,
        found: found.is_some(),
        first: found.as_ref().map(|pair| CodeSpec::describe(&pair.first)),
        second: found.as_ref().map(|pair| CodeSpec::describe(&pair.second)),
        shared_weights: found
            .as_ref()
            .map(|pair| weight_entries(&pair.shared_weights)),
        first_dual_weights: found
            .as_ref()
            .map(|pair| weight_entries(&pair.first_dual_weights)),
        second_dual_weights: found
            .as_ref()
            .map(|pair| weight_entries(&pair.second_dual_weights)),
    };

    match ctx.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Csv => {
            println!(
                "{}",
                csv_row(&[
                    "weight".into(),
                    "shared".into(),
                    "first_dual".into(),
                    "second_dual".into(),
                ])
            );
            if let Some(pair) = &found {
                let mut values: BTreeSet<&BigRational> = pair.shared_weights.keys().collect();
                values.extend(pair.first_dual_weights.keys());
                values.extend(pair.second_dual_weights.keys());
                let at = |map: &BTreeMap<BigRational, u64>, v: &BigRational| {
                    map.get(v).copied().unwrap_or(0).to_string()
                };
                for value in values {
                    println!(
                        "{}",
                        csv_row(&[
                            rational_string(value),
                            at(&pair.shared_weights, value),
                            at(&pair.first_dual_weights, value),
                            at(&pair.second_dual_weights, value),
                        ])
                    );
                }
            }
        }
        OutputFormat::Pretty => match &found {
            None => println!(
                "no counterexample within budget {} over {} ({} order)",
                args.budget,
                ring_text(&ring),
                report.order
            ),
            Some(pair) => {
                println!(
                    "counterexample over {}: equal {} enumerators, distinct dual enumerators",
                    ring_text(&ring),
                    report.weight
                );
                for (label, code) in [("first", &pair.first), ("second", &pair.second)] {
                    let described = CodeSpec::describe(code);
                    println!(
                        "  {label} generators: {}",
                        serde_json::to_string(&described.generators).expect("rows")
                    );
                }
                let mut rows = vec![vec![
                    "weight".to_string(),
                    "shared".to_string(),
                    "first_dual".to_string(),
                    "second_dual".to_string(),
                ]];
                let mut values: BTreeSet<&BigRational> = pair.shared_weights.keys().collect();
                values.extend(pair.first_dual_weights.keys());
                values.extend(pair.second_dual_weights.keys());
                for value in values {
                    let at = |map: &BTreeMap<BigRational, u64>| {
                        map.get(value).copied().unwrap_or(0).to_string()
                    };
                    rows.push(vec![
                        rational_string(value),
                        at(&pair.shared_weights),
                        at(&pair.first_dual_weights),
                        at(&pair.second_dual_weights),
                    ]);
                }
                print!("{}", aligned_table(&rows));
            }
        },
    }
    Ok(true)
}

// ----------------------------------------------------------------- lp-bound

#[derive(Args)]
pub struct LpBoundArgs {
    /// Ring description: inline JSON or a path to a JSON file.
    #[arg(long)]
    pub ring: String,
    /// Weight kind: lee | hamming | homogeneous | subfield[:<num>[/<den>]].
    #[arg(long)]
    pub weight: String,
    /// Code length.
    #[arg(short = 'n', long = "length")]
    pub n: u64,
    /// Minimum-weight threshold d (rational, e.g. 3 or 7/2).
    #[arg(short = 'd', long = "distance")]
    pub d: String,
    /// Fold variables by the unit-scaling symmetry (Lee weight over
    /// ℤ/p^s ℤ only); never weakens the bound.
    #[arg(long)]
    pub lee_symmetry: bool,
}

#[derive(Serialize)]
struct LpBoundReport {
    ring: RingSpec,
    weight: String,
    n: u64,
    d: String,
    mode: &'static str,
    partition: String,
    variables: usize,
    constraints: usize,
    bound: String,
    active_constraints: Vec<usize>,
    certified: bool,
}

pub fn lp_bound(args: &LpBoundArgs, ctx: &Ctx) -> Result<bool, Failure> {
    let spec: RingSpec = config::load(&args.ring, "ring").map_err(cfg)?;
    let ring = spec.build().map_err(cfg)?;
    let kind = parse_weight(&args.weight).map_err(cfg)?;
    let d = parse_rational(&args.d).map_err(cfg)?;
    let mode = if args.lee_symmetry {
        LpMode::UnitOrbits
    } else {
        LpMode::PerDecomposition
    };

    let partition_kind = partition_for_lp(&ring);
    let partition = build_partition(partition_kind, &ring)?;
    let problem = build_lp(&partition, &kind, args.n, &d, mode, ctx.guard)?;
    let solution = solve_lp(&problem)?;
    if !verify_optimality(&problem, &solution)? {
        return Err(Failure::Check(
            "the simplex optimum failed its optimality certificate".into(),
        ));
    }
    let bound = BigRational::one() + &solution.value;
    let active: Vec<usize> = problem
        .constraints
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let lhs: BigRational = c
                .coeffs
                .iter()
                .zip(&solution.assignment)
                .map(|(a, x)| a * x)
                .fold(BigRational::zero(), |acc, t| acc + t);
            lhs == c.rhs
        })
        .map(|(i, _)| i)
        .collect();

    let report = LpBoundReport {
        ring: RingSpec::describe(&ring),
        weight: weight_name(&kind),
        n: args.n,
        d: rational_string(&d),
        mode: match mode {
            LpMode::PerDecomposition => "per-decomposition",
            LpMode::UnitOrbits => "unit-orbits",
        },
        partition: partition_name(partition_kind).to_string(),
        variables: problem.variables.len(),
        constraints: problem.constraints.len(),
        bound: rational_string(&bound),
        active_constraints: active,
        certified: true,
    };
    match ctx.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Csv => return Err(csv_unsupported("lp-bound")),
        OutputFormat::Pretty => {
            println!(
                "code size over {} at length {} with minimum {} weight {} is at most {}",
                ring_text(&ring),
                args.n,
                report.weight,
                report.d,
                report.bound
            );
            println!(
                "mode {}, {} variables, {} constraints, optimality certificate verified",
                report.mode, report.variables, report.constraints
            );
            println!(
                "active constraints at the optimum: {:?}",
                report.active_constraints
            );
        }
    }
    Ok(true)
}

// ----------------------------------------------------------------- examples

#[derive(Serialize)]
struct CaseDto {
    name: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct ExamplesReport {
    pass: bool,
    cases: Vec<CaseDto>,
}

pub fn examples(ctx: &Ctx) -> Result<bool, Failure> {
    let outcomes = golden::run_all(ctx.guard);
    let report = ExamplesReport {
        pass: outcomes.iter().all(|o| o.pass),
        cases: outcomes
            .into_iter()
            .map(|o| CaseDto {
                name: o.name,
                pass: o.pass,
                detail: o.detail,
            })
            .collect(),
    };
    match ctx.format {
        OutputFormat::Json => print_json(&report),
        OutputFormat::Csv => return Err(csv_unsupported("examples")),
        OutputFormat::Pretty => {
            for case in &report.cases {
                println!(
                    "{}: {} ({})",
                    case.name,
                    if case.pass { "PASS" } else { "FAIL" },
                    case.detail
                );
            }
            println!(
                "{}",
                if report.pass {
                    "all reference cases pass"
                } else {
                    "reference cases FAILED"
                }
            );
        }
    }
    Ok(report.pass)
}
