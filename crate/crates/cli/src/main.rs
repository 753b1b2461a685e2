//! Command-line surface for the cluster category engine.

mod doc;

use clap::{Parser, Subcommand, ValueEnum};
use cluscat::{
    classify, relations, verify_roundtrip, CTObject, CategorySpec, ClusterCategory, DCandidate,
    Error, Family, Indec, Quiver, Shape, TrianglePart,
};
use doc::QuiverDocument;
use std::collections::BTreeSet;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cluscat", version, about = "Cluster categories of types A and D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Emit {
    Counts,
    Dot,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Build a category and print counts, the AR-quiver or the Hom/Ext tables.
    Build {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        rank: u32,
        #[arg(long, value_enum, default_value = "counts")]
        emit: Emit,
    },
    /// List all cluster-tilting objects in canonical order.
    Enumerate {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        count_only: bool,
    },
    /// Print the quiver of End(T)^op for an explicit object.
    Quiver {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        rank: u32,
        /// Summand coordinates, e.g. "(0,1) (0,2) (0,3)".
        #[arg(long)]
        object: String,
        #[arg(long)]
        relations: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Classify a quiver file as TypeA or one of the three D shapes.
    Classify { quiver_file: String },
    /// Produce an explicit cluster-tilting object realizing a quiver file.
    Reconstruct {
        quiver_file: String,
        #[arg(long)]
        verify: bool,
    },
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = 8)]
        max_rank_a: u32,
        #[arg(long, default_value_t = 6)]
        max_rank_d: u32,
    },
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::InvalidSpec { .. } => 2,
        Error::NotClusterTilting { .. } | Error::NotMember(_) => 3,
        Error::BadQuiver(_) => 4,
        Error::NotClusterTilted(_) => 5,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Build { family, rank, emit } => build_cmd(family.into(), rank, emit),
        Command::Enumerate { family, rank, count_only } => {
            enumerate_cmd(family.into(), rank, count_only)
        }
        Command::Quiver { family, rank, object, relations, dot } => {
            quiver_cmd(family.into(), rank, &object, relations, dot)
        }
        Command::Classify { quiver_file } => classify_cmd(&quiver_file),
        Command::Reconstruct { quiver_file, verify } => reconstruct_cmd(&quiver_file, verify),
        Command::Selftest { max_rank_a, max_rank_d } => selftest_cmd(max_rank_a, max_rank_d),
    }
}

fn build_cmd(family: Family, rank: u32, emit: Emit) -> Result<ExitCode, Error> {
    let (specs, note) = CategorySpec::normalize(family, rank)?;
    if let Some(note) = note {
        println!("note: {note}");
    }
    for spec in specs {
        let cat = ClusterCategory::build(spec)?;
        println!("category: {spec}");
        match emit {
            Emit::Counts => {
                println!("indecomposables: {}", cat.indecs().len());
                let mut seen: BTreeSet<Indec> = BTreeSet::new();
                for &x in cat.indecs() {
                    if !seen.insert(x) {
                        continue;
                    }
                    let mut y = cat.tau(x, 1);
                    let mut len = 1;
                    while y != x {
                        seen.insert(y);
                        y = cat.tau(y, 1);
                        len += 1;
                    }
                    println!("tau-orbit at {x}: length {len}");
                }
            }
            Emit::Dot => {
                println!("digraph ar_quiver {{");
                for &x in cat.indecs() {
                    println!("  \"{x}\";");
                }
                for (s, t) in cat.ar_arrows() {
                    println!("  \"{s}\" -> \"{t}\";");
                }
                println!("}}");
            }
            Emit::Table => {
                for table in ["hom", "ext"] {
                    let header: Vec<String> =
                        cat.indecs().iter().map(|x| x.to_string()).collect();
                    println!("{table}\t{}", header.join("\t"));
                    for &x in cat.indecs() {
                        let row: Vec<String> = cat
                            .indecs()
                            .iter()
                            .map(|&y| {
                                let d = if table == "hom" {
                                    cat.hom_dim(x, y)
                                } else {
                                    cat.ext_dim(x, y)
                                };
                                d.to_string()
                            })
                            .collect();
                        println!("{x}\t{}", row.join("\t"));
                    }
                    println!();
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate_cmd(family: Family, rank: u32, count_only: bool) -> Result<ExitCode, Error> {
    let spec = CategorySpec::new(family, rank)?;
    let cat = ClusterCategory::build(spec)?;
    let objects = cluscat::enumerate_ct(&cat);
    if count_only {
        println!("{}", objects.len());
    } else {
        for t in &objects {
            println!("{t}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_coords(s: &str) -> Result<Vec<Indec>, Error> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        let inner = tok
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::BadQuiver(format!("expected (orbit,row), got {tok:?}")))?;
        let (o, r) = inner
            .split_once(',')
            .ok_or_else(|| Error::BadQuiver(format!("expected (orbit,row), got {tok:?}")))?;
        let orbit = o
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::BadQuiver(format!("bad orbit in {tok:?}: {e}")))?;
        let row = r
            .trim()
            .parse::<u32>()
            .map_err(|e| Error::BadQuiver(format!("bad row in {tok:?}: {e}")))?;
        out.push(Indec::new(orbit, row));
    }
    Ok(out)
}

fn quiver_cmd(
    family: Family,
    rank: u32,
    object: &str,
    with_relations: bool,
    dot: bool,
) -> Result<ExitCode, Error> {
    let spec = CategorySpec::new(family, rank)?;
    let cat = ClusterCategory::build(spec)?;
    let t = CTObject::new(&cat, parse_coords(object)?)?;
    let q = cluscat::ct_quiver(&cat, &t)?;
    let pres = relations(&q)?;
    if dot {
        println!("digraph quiver {{");
        for l in q.labels() {
            println!("  \"{l}\";");
        }
        for (&(i, j), &m) in q.arrows() {
            for _ in 0..m {
                println!("  \"{}\" -> \"{}\";", q.label(i), q.label(j));
            }
        }
        let path = |p: &[usize]| {
            p.iter().map(|&v| q.label(v).to_string()).collect::<Vec<_>>().join(" -> ")
        };
        for p in &pres.zero_relations {
            println!("  // zero relation: {}", path(p));
        }
        for (r, s) in &pres.commutativity_relations {
            println!("  // commutativity relation: {} = {}", path(r), path(s));
        }
        println!("}}");
        return Ok(ExitCode::SUCCESS);
    }
    println!("category: {spec}");
    println!("object: {t}");
    if with_relations {
        print!("{pres}");
    } else {
        println!("vertices: {}", q.n());
        println!("arrows:");
        for (&(i, j), &m) in q.arrows() {
            for _ in 0..m {
                println!("  {} -> {}", q.label(i), q.label(j));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_quiver(path: &str) -> Result<Quiver, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadQuiver(format!("cannot read {path}: {e}")))?;
    QuiverDocument::parse(&text)?.to_quiver()
}

fn part_line(q: &Quiver, part: &Option<TrianglePart>) -> String {
    match part {
        None => "none".into(),
        Some(p) => {
            let members: Vec<String> = p
                .members
                .iter()
                .map(|&v| q.label(v).to_string())
                .collect();
            format!("star {}, members {}", q.label(p.star), members.join(" "))
        }
    }
}

fn print_candidate(q: &Quiver, idx: usize, cand: &DCandidate) {
    println!("candidate {idx}: {}", cand.shape);
    let cyc: Vec<String> = cand.cycle.iter().map(|&v| q.label(v).to_string()).collect();
    match cand.shape {
        Shape::D1 => {
            println!("  central pair: {}", cyc.join(" "));
            println!("  triangle pointing in: {}", part_line(q, &cand.spikes[0]));
            println!("  triangle pointing out: {}", part_line(q, &cand.spikes[1]));
        }
        _ => {
            println!("  central cycle: {}", cyc.join(" "));
            let c = cand.cycle.len();
            for i in 0..c {
                println!(
                    "  triangle on {} => {}: {}",
                    cyc[i],
                    cyc[(i + 1) % c],
                    part_line(q, &cand.spikes[i])
                );
            }
        }
    }
}

fn classify_cmd(path: &str) -> Result<ExitCode, Error> {
    let q = read_quiver(path)?;
    let dec = classify(&q)?;
    println!("shape: {}", dec.shape);
    if dec.shape == Shape::TypeA {
        let conn: Vec<String> = dec
            .connecting
            .iter()
            .map(|&v| q.label(v).to_string())
            .collect();
        println!("connecting vertices: {}", conn.join(", "));
    } else {
        for (i, cand) in dec.candidates.iter().enumerate() {
            print_candidate(&q, i, cand);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn reconstruct_cmd(path: &str, verify: bool) -> Result<ExitCode, Error> {
    let q = read_quiver(path)?;
    let rec = cluscat::reconstruct(&q)?;
    println!("family: {}", rec.spec.family);
    println!("rank: {}", rec.spec.rank);
    println!("object: {}", rec.object);
    println!("placement:");
    for (v, s) in rec.placement.iter().enumerate() {
        println!("  {} -> {s}", q.label(v));
    }
    println!(
        "shape: {} (candidate {}, branch {})",
        rec.shape, rec.candidate_index, rec.branch
    );
    if verify {
        let report = verify_roundtrip(&q);
        print!("{report}");
        if !report.ok {
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn selftest_cmd(max_rank_a: u32, max_rank_d: u32) -> Result<ExitCode, Error> {
    let report = cluscat::selftest::run(max_rank_a, max_rank_d)?;
    print!("{report}");
    if report.all_passed() {
        println!("selftest: all criteria passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("selftest: FAILED");
        Ok(ExitCode::from(1))
    }
}
