//! `vpg` — recognize contact B0-VPG graphs, draw certified grid layouts,
//! generate named instances, and cross-check the recognizer against an
//! exhaustive search.

mod format;

use std::collections::HashMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use format::{emit_edge_list, emit_graph6, parse_graph};
use vpg::classes::{decide_contact, ClassError, ClassHint};
use vpg::families::{all_base_trees_le5, thick_spider, thin_spider};
use vpg::graph::Graph;
use vpg::layouts::represent_any;
use vpg::oracle::{canonical_code, default_budget, oracle_with, OracleVerdict};
use vpg::patterns::{make_pattern, make_t_member, PatternId, Witness};
use vpg::recognize::Decision;
use vpg::render::{render_ascii, render_svg};

/// Exit codes: 0 = YES / success, 1 = NO (with witness), 2 = input outside
/// the requested class, unparsable, or otherwise unusable.
#[derive(Parser)]
#[command(name = "vpg", version, about = "Contact B0-VPG recognition with checkable certificates")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, ValueEnum)]
enum ClassArg {
    Auto,
    Chordal,
    TreeCograph,
    P4Tidy,
    P5Free,
}

impl ClassArg {
    fn hint(self) -> ClassHint {
        match self {
            ClassArg::Auto => ClassHint::Auto,
            ClassArg::Chordal => ClassHint::Chordal,
            ClassArg::TreeCograph => ClassHint::TreeCograph,
            ClassArg::P4Tidy => ClassHint::P4Tidy,
            ClassArg::P5Free => ClassHint::P5Free,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum RepFormat {
    Json,
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the input graph admits a contact B0-VPG layout.
    ///
    /// Reads graph6 or an "n m" edge list from FILE (or stdin). Exits 0 on
    /// YES, 1 on NO, 2 when the input is outside the requested class.
    Recognize {
        /// Input file; "-" or absent reads stdin.
        input: Option<PathBuf>,
        /// Graph class whose decision procedure to apply.
        #[arg(long, value_enum, default_value_t = ClassArg::Auto)]
        class: ClassArg,
        /// On NO, print the forbidden pattern name and its vertex map.
        #[arg(long)]
        witness: bool,
        /// Emit the verdict as a JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Build and print a validated grid layout (or the refuting witness).
    Represent {
        /// Input file; "-" or absent reads stdin.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RepFormat::Json)]
        format: RepFormat,
        /// Write the layout to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a named graph from one of the built-in families.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Emit graph6 instead of an edge list.
        #[arg(long, global = true)]
        graph6: bool,
        /// Write to a file instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Cross-check the recognizer against an exhaustive reference search.
    ///
    /// Streams one report line per graph. Exits 0 when every verdict agrees
    /// with the reference, 1 on any disagreement, 2 when the reference ran
    /// out of time somewhere but no disagreement was found.
    Certify {
        /// Directory of graph files (graph6 or edge list) to certify.
        corpus_dir: Option<PathBuf>,
        /// Instead, certify every labeled graph on up to N vertices (N <= 6)
        /// that lies in a supported class.
        #[arg(long, value_name = "N", conflicts_with = "corpus_dir")]
        enumerate: Option<usize>,
        /// Time budget per reference search, in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Minimal non-representable tree-cograph grown from a base tree.
    T {
        /// One of: path2, path3, path4, claw, path5, chair.
        #[arg(long)]
        base_tree: String,
    },
    /// Thin spider: k-clique, one pendant leg per clique vertex, r extras.
    ThinSpider {
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
    },
    /// Thick spider: each leg misses exactly one clique vertex.
    ThickSpider {
        #[arg(short)]
        k: usize,
        #[arg(short, default_value_t = 0)]
        r: usize,
    },
    /// A fixed forbidden or boundary pattern by name (e.g. K5, K4-e, K3,3,
    /// K3,3*, co-C6, H0, B1, B2, B3, G1, G2, G3, G4, G_P2).
    Pattern { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Recognize {
            input,
            class,
            witness,
            json,
        } => cmd_recognize(input.as_deref(), class, witness, json),
        Cmd::Represent { input, format, out } => cmd_represent(input.as_deref(), format, out.as_deref()),
        Cmd::Generate { family, graph6, out } => cmd_generate(&family, graph6, out.as_deref()),
        Cmd::Certify {
            corpus_dir,
            enumerate,
            budget_ms,
        } => cmd_certify(corpus_dir.as_deref(), enumerate, budget_ms),
    };
    match code {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<Graph, String> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            buf
        }
    };
    parse_graph(&text).map_err(|e| e.to_string())
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn witness_text(w: &Witness) -> String {
    format!("{} {:?}", w.pattern.name(), w.map)
}

fn cmd_recognize(
    input: Option<&Path>,
    class: ClassArg,
    witness: bool,
    json: bool,
) -> Result<ExitCode, String> {
    let g = read_input(input)?;
    match decide_contact(&g, class.hint()) {
        Ok(Decision::Yes(_)) => {
            if json {
                println!("{}", serde_json::json!({ "verdict": "YES" }));
            } else {
                println!("YES");
            }
            Ok(ExitCode::SUCCESS)
        }
        Ok(Decision::No(w)) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "verdict": "NO",
                        "witness": { "pattern": w.pattern.name(), "map": w.map },
                    })
                );
            } else if witness {
                println!("NO {}", witness_text(&w));
            } else {
                println!("NO");
            }
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_represent(
    input: Option<&Path>,
    format: RepFormat,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    let g = read_input(input)?;
    match decide_contact(&g, ClassHint::Auto) {
        Ok(Decision::Yes(_)) => {}
        Ok(Decision::No(w)) => {
            println!("NO {}", witness_text(&w));
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.to_string()),
    }
    let rep = represent_any(&g).map_err(|e| format!("layout construction failed: {e}"))?;
    debug_assert!(rep.is_valid(&g));
    let content = match format {
        RepFormat::Json => {
            let mut s = rep.to_json();
            s.push('\n');
            s
        }
        RepFormat::Ascii => render_ascii(&rep),
        RepFormat::Svg => render_svg(&rep),
    };
    write_output(out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn pattern_by_name(name: &str) -> Option<PatternId> {
    let all = [
        PatternId::K5,
        PatternId::K4MinusE,
        PatternId::K33,
        PatternId::K33Star,
        PatternId::CoC6,
        PatternId::H0,
        PatternId::B1,
        PatternId::B2,
        PatternId::B3,
        PatternId::G1,
        PatternId::G2,
        PatternId::G3,
        PatternId::G4,
        PatternId::GP2,
    ];
    all.into_iter()
        .find(|p| p.name().eq_ignore_ascii_case(name))
}

fn cmd_generate(family: &Family, graph6: bool, out: Option<&Path>) -> Result<ExitCode, String> {
    let g = match family {
        Family::T { base_tree } => {
            let names = ["path2", "path3", "path4", "claw", "path5", "chair"];
            let idx = names
                .iter()
                .position(|n| n.eq_ignore_ascii_case(base_tree))
                .ok_or_else(|| format!("unknown base tree {base_tree:?}; one of {names:?}"))?;
            make_t_member(&all_base_trees_le5()[idx])
        }
        Family::ThinSpider { k, r } => thin_spider(*k, *r).map_err(|e| e.to_string())?.0,
        Family::ThickSpider { k, r } => thick_spider(*k, *r).map_err(|e| e.to_string())?.0,
        Family::Pattern { name } => make_pattern(
            &pattern_by_name(name).ok_or_else(|| format!("unknown pattern {name:?}"))?,
        ),
    };
    let content = if graph6 {
        let mut s = emit_graph6(&g).map_err(|e| e.to_string())?;
        s.push('\n');
        s
    } else {
        emit_edge_list(&g)
    };
    write_output(out, &content)?;
    Ok(ExitCode::SUCCESS)
}

/// The recognizer's side of a certification row, with its certificate
/// already checked: a NO must carry a validating witness and a YES must
/// admit a validating constructed layout.
fn certified_verdict(g: &Graph) -> Result<(String, bool), String> {
    let (class, decision) = first_supported_class(g).ok_or("no supported class")?;
    match decision {
        Decision::Yes(_) => match represent_any(g) {
            Ok(rep) if rep.is_valid(g) => Ok((class.into(), true)),
            _ => Err(format!("{class}: YES verdict but layout construction failed")),
        },
        Decision::No(w) => {
            if w.validate(g) {
                Ok((class.into(), false))
            } else {
                Err(format!("{class}: NO verdict with invalid witness"))
            }
        }
    }
}

fn first_supported_class(g: &Graph) -> Option<(&'static str, Decision)> {
    for (name, hint) in [
        ("chordal", ClassHint::Chordal),
        ("tree-cograph", ClassHint::TreeCograph),
        ("p4-tidy", ClassHint::P4Tidy),
        ("p5-free", ClassHint::P5Free),
    ] {
        match decide_contact(g, hint) {
            Ok(d) => return Some((name, d)),
            Err(ClassError::NotInClass(_)) => continue,
            Err(_) => return None,
        }
    }
    None
}

struct CertifyTally {
    graphs: usize,
    disagreements: usize,
    unknown: usize,
}

impl CertifyTally {
    fn exit(&self) -> ExitCode {
        println!(
            "certified {} graphs: {} disagreements, {} reference timeouts",
            self.graphs, self.disagreements, self.unknown
        );
        if self.disagreements > 0 {
            ExitCode::from(1)
        } else if self.unknown > 0 {
            ExitCode::from(2)
        } else {
            ExitCode::SUCCESS
        }
    }
}

fn reference_verdict(
    g: &Graph,
    budget: Duration,
    cache: &mut HashMap<u64, Option<bool>>,
) -> Option<bool> {
    let key = canonical_code(g);
    if let Some(&v) = cache.get(&key) {
        return v;
    }
    let v = match oracle_with(g, Some(budget)) {
        OracleVerdict::Yes(_) => Some(true),
        OracleVerdict::No => Some(false),
        OracleVerdict::Unknown => None,
    };
    cache.insert(key, v);
    v
}

fn report_line(
    out: &mut impl Write,
    tally: &mut CertifyTally,
    label: &str,
    verdict: Result<(String, bool), String>,
    reference: Option<bool>,
) {
    tally.graphs += 1;
    let show = |v: bool| if v { "YES" } else { "NO" };
    let (status, detail) = match (&verdict, reference) {
        (Ok((class, v)), Some(r)) if *v == r => (
            "ok",
            format!("class={class} verdict={} reference={}", show(*v), show(r)),
        ),
        (Ok((class, v)), Some(r)) => {
            tally.disagreements += 1;
            (
                "DISAGREE",
                format!("class={class} verdict={} reference={}", show(*v), show(r)),
            )
        }
        (Ok((class, v)), None) => {
            tally.unknown += 1;
            (
                "unknown",
                format!("class={class} verdict={} reference=timeout", show(*v)),
            )
        }
        (Err(msg), _) => {
            tally.disagreements += 1;
            ("FAIL", msg.clone())
        }
    };
    writeln!(out, "{label} {detail} {status}").expect("stdout");
}

fn cmd_certify(
    corpus_dir: Option<&Path>,
    enumerate: Option<usize>,
    budget_ms: Option<u64>,
) -> Result<ExitCode, String> {
    let budget = budget_ms.map(Duration::from_millis).unwrap_or_else(default_budget);
    let mut cache: HashMap<u64, Option<bool>> = HashMap::new();
    let mut tally = CertifyTally {
        graphs: 0,
        disagreements: 0,
        unknown: 0,
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());

    match (corpus_dir, enumerate) {
        (Some(dir), None) => {
            let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
                .map_err(|e| format!("{}: {e}", dir.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            if files.is_empty() {
                return Err(format!("{}: no files to certify", dir.display()));
            }
            for f in files {
                let label = f.file_name().unwrap_or_default().to_string_lossy().into_owned();
                let text = std::fs::read_to_string(&f).map_err(|e| format!("{label}: {e}"))?;
                let g = parse_graph(&text).map_err(|e| format!("{label}: {e}"))?;
                if first_supported_class(&g).is_none() {
                    writeln!(out, "{label} skipped (no supported class)").expect("stdout");
                    continue;
                }
                let verdict = certified_verdict(&g);
                let reference = reference_verdict(&g, budget, &mut cache);
                report_line(&mut out, &mut tally, &label, verdict, reference);
            }
        }
        (None, Some(n)) => {
            if n > 6 {
                return Err("--enumerate supports at most 6 vertices".into());
            }
            for size in 1..=n {
                let pairs: Vec<(usize, usize)> = (0..size)
                    .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
                    .collect();
                for mask in 0u64..1 << pairs.len() {
                    let edges: Vec<(usize, usize)> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask >> b & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    let g = Graph::from_edges(size, &edges).expect("generated edges are simple");
                    if first_supported_class(&g).is_none() {
                        continue;
                    }
                    let verdict = certified_verdict(&g);
                    let reference = reference_verdict(&g, budget, &mut cache);
                    let label = format!("n={size} edges={mask:#x}");
                    report_line(&mut out, &mut tally, &label, verdict, reference);
                }
            }
        }
        _ => return Err("pass a corpus directory or --enumerate N".into()),
    }
    out.flush().expect("stdout");
    drop(out);
    Ok(tally.exit())
}
