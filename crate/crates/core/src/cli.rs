//! Command-line front end. Exit codes: 0 integral or matching, 1 non-integral
//! or golden mismatch, 2 usage or internal error.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{catalog, manifest, quotients, QuotientFilter, ALL};
use crate::characters::{bh1_spectrum, character_table, integer_spectrum};
use crate::presentation::{parse_presentation, todd_coxeter, DEFAULT_MAX_COSETS};
use crate::repro::{self, TARGETS};
use crate::search::{is_cayley_integral, SearchOptions, Strategy, DEFAULT_MATRIX_ORDER_BOUND, DEFAULT_MAX_SUBSETS};
use crate::spectral::{is_integral_graph, ConnectionSet};
use crate::GroupTable;

#[derive(Parser, Debug)]
#[command(name = "cayint", version, about = "Integrality of Cayley graphs over finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group from a catalog name or a presentation and describe it.
    Group {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Spectrum of one Cayley graph.
    Spectrum {
        group: String,
        /// Comma-separated words in the generator labels.
        #[arg(long, conflicts_with = "indices", required_unless_present = "indices")]
        set: Option<String>,
        /// Comma-separated element indices.
        #[arg(long)]
        indices: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Matrix)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether every Cayley graph on the group is integral.
    Check {
        group: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check several catalog groups.
    Classify {
        /// `all` or a comma-separated list of catalog names.
        #[arg(long, default_value = "all")]
        catalog: String,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Recompute a stored result and compare it with its golden record.
    Reproduce {
        /// Target id or `all`.
        target: String,
        #[arg(long, env = "CAYINT_JOBS", default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Quotients by normal subgroups, identified against the catalog.
    Quotients {
        group: String,
        /// e.g. `nonabelian,exponent=12`
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long)]
        json: bool,
    },
    /// List catalog groups.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(clap::Args, Debug)]
struct SearchArgs {
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    #[arg(long, env = "CAYINT_JOBS", default_value_t = 1)]
    jobs: usize,
    /// Check every set instead of stopping at the first witness.
    #[arg(long)]
    audit: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_SUBSETS)]
    max_subsets: u64,
    #[arg(long, default_value_t = DEFAULT_MATRIX_ORDER_BOUND)]
    matrix_order_bound: usize,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        let strategy = match self.strategy {
            StrategyArg::Matrix => Strategy::Matrix,
            StrategyArg::CharactersWhenValid => Strategy::CharactersWhenValid,
            StrategyArg::Auto => Strategy::Auto,
        };
        let mut o = SearchOptions::default()
            .with_strategy(strategy)
            .with_jobs(self.jobs)
            .with_audit(self.audit)
            .with_max_subsets(self.max_subsets);
        o.matrix_order_bound = self.matrix_order_bound;
        o
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Matrix,
    CharactersWhenValid,
    Auto,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Matrix,
    Characters,
}

/// Failure that maps to exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parse `args` (program name first), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Group { group, json } => group_cmd(&group, json, out),
        Command::Spectrum {
            group,
            set,
            indices,
            method,
            json,
        } => spectrum_cmd(&group, set.as_deref(), indices.as_deref(), method, json, out),
        Command::Check { group, search, json } => check_cmd(&group, &search, json, out),
        Command::Classify {
            catalog,
            search,
            output,
            json,
        } => classify_cmd(&catalog, &search, output.as_deref(), json, out),
        Command::Reproduce { target, jobs, json } => reproduce_cmd(&target, jobs, json, out),
        Command::Quotients { group, filter, json } => quotients_cmd(&group, &filter, json, out),
        Command::Catalog { json } => catalog_cmd(json, out),
    }
}

/// A catalog name, or a presentation when the text starts with `<`.
fn resolve(text: &str) -> Result<Arc<GroupTable>, Failure> {
    if text.trim_start().starts_with('<') {
        let p = parse_presentation(text)?;
        Ok(Arc::new(todd_coxeter(&p, DEFAULT_MAX_COSETS)?))
    } else {
        Ok(catalog(text)?)
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

#[derive(Serialize)]
struct GroupSummary {
    name: String,
    order: usize,
    exponent: usize,
    abelian: bool,
    generators: Vec<(String, usize)>,
    /// `(element order, count)` ascending.
    order_spectrum: Vec<(usize, usize)>,
    center_order: usize,
    class_sizes: Vec<usize>,
}

fn group_cmd(text: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let g = resolve(text)?;
    let mut spectrum: Vec<(usize, usize)> = Vec::new();
    for o in g.order_spectrum() {
        match spectrum.last_mut() {
            Some(last) if last.0 == o => last.1 += 1,
            _ => spectrum.push((o, 1)),
        }
    }
    let s = GroupSummary {
        name: g.name().to_string(),
        order: g.order(),
        exponent: g.exponent(),
        abelian: g.is_abelian(),
        generators: g.generators().to_vec(),
        order_spectrum: spectrum,
        center_order: g.center().len(),
        class_sizes: g.conjugacy_classes().iter().map(Vec::len).collect(),
    };
    if json {
        print_json(out, &s)?;
    } else {
        let gens: Vec<String> = s.generators.iter().map(|(l, i)| format!("{l}={i}")).collect();
        let orders: Vec<String> = s.order_spectrum.iter().map(|(o, n)| format!("{o}:{n}")).collect();
        writeln!(out, "group {}", s.name)?;
        writeln!(out, "order {}", s.order)?;
        writeln!(out, "exponent {}", s.exponent)?;
        writeln!(out, "abelian {}", s.abelian)?;
        writeln!(out, "generators {}", gens.join(" "))?;
        writeln!(out, "element orders {}", orders.join(" "))?;
        writeln!(out, "center order {}", s.center_order)?;
        writeln!(out, "classes {} with sizes {:?}", s.class_sizes.len(), s.class_sizes)?;
    }
    Ok(0)
}

fn split_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

#[derive(Serialize)]
struct CharacterSpectrumJson {
    group: String,
    set: Vec<String>,
    verdict: &'static str,
    roots: Option<Vec<(i64, usize)>>,
    eigenvalues: Vec<(String, usize)>,
}

fn spectrum_cmd(
    group: &str,
    words: Option<&str>,
    indices: Option<&str>,
    method: Method,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let g = resolve(group)?;
    let set = match (words, indices) {
        (Some(w), _) => ConnectionSet::from_words(&g, &split_list(w))?,
        (None, Some(i)) => {
            let idx = split_list(i)
                .into_iter()
                .map(|s| s.parse::<usize>().map_err(|_| Failure(format!("bad index `{s}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            ConnectionSet::new(&g, idx)?
        }
        (None, None) => return Err(Failure("one of --set or --indices is required".into())),
    };
    let integral = match method {
        Method::Matrix => {
            let report = is_integral_graph(&g, &set);
            if json {
                print_json(out, &report.to_json())?;
            } else {
                writeln!(out, "{}", report.display())?;
                writeln!(out, "{}", if report.is_integral() { "integral" } else { "non-integral" })?;
            }
            report.is_integral()
        }
        Method::Characters => {
            let table = character_table(&g)?;
            let entries = bh1_spectrum(&g, &set, &table)?;
            let roots = integer_spectrum(&entries);
            let verdict = if roots.is_some() { "integral" } else { "non-integral" };
            let eigenvalues = entries.iter().map(|e| (e.value.to_string(), e.multiplicity)).collect();
            if json {
                let j = CharacterSpectrumJson {
                    group: g.name().to_string(),
                    set: set.words(&g),
                    verdict,
                    roots: roots.clone(),
                    eigenvalues,
                };
                print_json(out, &j)?;
            } else {
                for e in &entries {
                    writeln!(out, "{} x{}", e.value, e.multiplicity)?;
                }
                writeln!(out, "{verdict}")?;
            }
            roots.is_some()
        }
    };
    Ok(if integral { 0 } else { 1 })
}

fn check_cmd(group: &str, search: &SearchArgs, json: bool, out: &mut dyn Write) -> Outcome {
    let g = resolve(group)?;
    let v = is_cayley_integral(&g, &search.options())?;
    if json {
        print_json(out, &v.to_json())?;
    } else {
        write_verdict(out, &g, &v)?;
    }
    Ok(if v.cayley_integral { 0 } else { 1 })
}

fn write_verdict(out: &mut dyn Write, g: &GroupTable, v: &crate::search::IntegralityVerdict) -> Result<(), Failure> {
    let b = &v.method_breakdown;
    writeln!(
        out,
        "{}: {} ({} of {} sets; character {}, matrix {}, fast-reject {})",
        v.group,
        if v.cayley_integral { "Cayley integral" } else { "not Cayley integral" },
        v.sets_checked,
        v.total_sets,
        b.character,
        b.matrix,
        b.fast_reject
    )?;
    if let Some(w) = &v.witness {
        writeln!(out, "  witness {{{}}}", w.set.words(g).join(", "))?;
        writeln!(out, "  {}", w.report.display())?;
    }
    if let Some(f) = v.failures {
        writeln!(out, "  non-integral sets: {f}")?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyReport {
    integral: Vec<String>,
    non_integral: Vec<String>,
    verdicts: Vec<crate::search::VerdictJson>,
}

fn classify_cmd(
    names: &str,
    search: &SearchArgs,
    output: Option<&std::path::Path>,
    json: bool,
    out: &mut dyn Write,
) -> Outcome {
    let names: Vec<&str> = if names == "all" { ALL.to_vec() } else { split_list(names) };
    let opts = search.options();
    let mut report = ClassifyReport {
        integral: Vec::new(),
        non_integral: Vec::new(),
        verdicts: Vec::new(),
    };
    for name in names {
        let g = resolve(name)?;
        let v = is_cayley_integral(&g, &opts)?;
        if v.cayley_integral {
            report.integral.push(v.group.clone());
        } else {
            report.non_integral.push(v.group.clone());
        }
        if !json && output.is_none() {
            write_verdict(out, &g, &v)?;
        }
        report.verdicts.push(v.to_json());
    }
    if let Some(path) = output {
        std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
    } else if json {
        print_json(out, &report)?;
    }
    Ok(if report.non_integral.is_empty() { 0 } else { 1 })
}

#[derive(Serialize)]
struct ReproJson {
    id: String,
    matches: bool,
    computed: String,
    diff: Vec<repro::DiffLine>,
}

fn reproduce_cmd(target: &str, jobs: usize, json: bool, out: &mut dyn Write) -> Outcome {
    let ids: Vec<&str> = if target == "all" {
        TARGETS.iter().map(|t| t.id).collect()
    } else {
        vec![target]
    };
    let mut all_match = true;
    let mut records = Vec::new();
    for id in ids {
        let o = repro::run(id, jobs)?;
        let diff = o.diff();
        all_match &= diff.is_empty();
        if json {
            records.push(ReproJson {
                id: o.id.clone(),
                matches: diff.is_empty(),
                computed: o.computed.clone(),
                diff,
            });
            continue;
        }
        write!(out, "{}", o.computed)?;
        if diff.is_empty() {
            writeln!(out, "{id}: matches golden")?;
        } else {
            writeln!(out, "{id}: MISMATCH")?;
            for d in diff {
                writeln!(out, "  line {}", d.line)?;
                writeln!(out, "    expected: {}", d.expected.as_deref().unwrap_or("<missing>"))?;
                writeln!(out, "    computed: {}", d.computed.as_deref().unwrap_or("<missing>"))?;
            }
        }
    }
    if json {
        print_json(out, &records)?;
    }
    Ok(if all_match { 0 } else { 1 })
}

fn quotients_cmd(group: &str, filter: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let g = resolve(group)?;
    let f = QuotientFilter::parse(filter).map_err(Failure)?;
    let records = quotients(&g, f)?;
    if json {
        print_json(out, &records)?;
    } else {
        for r in &records {
            writeln!(
                out,
                "|N| = {}: quotient of order {}, exponent {}, {}, {}",
                r.normal_order,
                r.quotient_order,
                r.exponent,
                if r.abelian { "abelian" } else { "non-abelian" },
                r.identified.as_deref().unwrap_or("unidentified")
            )?;
        }
        writeln!(out, "{} quotients", records.len())?;
    }
    Ok(0)
}

fn catalog_cmd(json: bool, out: &mut dyn Write) -> Outcome {
    let entries = manifest()?;
    if json {
        print_json(out, &entries)?;
    } else {
        for e in &entries {
            writeln!(out, "{:<18} {:>3}  {}", e.name, e.order, e.description)?;
        }
    }
    Ok(0)
}
