//! Command-line interface: generate the library's example dessins, classify
//! files of dessins for symmetry, transform them (mirror, duals, Walsh map,
//! growth), and look up triangle-group inclusions by type.
//!
//! Exit codes: 0 success, 1 parse error, 2 not a regular dessin,
//! 3 construction error, 4 internal invariant violated.

mod format;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use dessin_core::constructions::{
    biggs_map, exceptional_dessin, join, klein21, torus_map, v4_map, ChiralVariant, TorusKind,
};
use dessin_core::symmetry::{grow_normal, table1_candidates};
use dessin_core::{DessinType, RegularDessin};

use format::{
    load_census, load_dessin, parse_dual_kind, report_for, save_json, CliError, DessinFile,
    OrientedMapFile, ReportRecord,
};

#[derive(Parser)]
#[command(
    name = "dessin",
    about = "Classify regular dessins d'enfants: does the underlying surface admit an anticonformal involution?",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print degree, type, genus and group order for each dessin file.
    Info { paths: Vec<PathBuf> },

    /// Run the symmetry classification on each dessin file.
    Classify {
        paths: Vec<PathBuf>,
        /// Emit one JSON report per line (includes witness permutations).
        #[arg(long, conflicts_with = "table")]
        json: bool,
        /// Emit an aligned text table (the default).
        #[arg(long)]
        table: bool,
        /// Assert that the triangle group of the dessin's type is maximal
        /// among those normalising the uniformising subgroup, and use the
        /// stricter two-condition verdict rule.
        #[arg(long)]
        maximal: bool,
    },

    /// Build one of the example dessins and write it to a file.
    ///
    /// Specs: `biggs:<q>` | `v4` | `torus:<44|36>:<12|21>` |
    /// `join:<spec>,<spec>` | `exceptional:<e>` | `klein21`
    Generate {
        spec: String,
        #[arg(short, long)]
        out: PathBuf,
    },

    /// Classify every dessin in a JSON array file and print aggregate counts.
    Census {
        path: PathBuf,
        /// Number of worker threads; the output is identical for every value.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },

    /// Write a dual of a dessin.
    Dual {
        path: PathBuf,
        /// Which colour pair to transpose: 01, 02 or 12.
        #[arg(long)]
        which: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },

    /// Write the mirror image of a dessin.
    Mirror {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },

    /// Write the Walsh bipartite map of a dessin (darts, rotation, edge
    /// involution).
    Walsh {
        path: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },

    /// Grow a dessin along the normal triangle-group inclusions.
    Grow {
        path: PathBuf,
        /// Write each grown dessin into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },

    /// List the triangle-group inclusions whose sub-type matches (l, m, n).
    Table1 { l: u64, m: u64, n: u64 },
}

fn main() {
    std::process::exit(run(Cli::parse()));
}

fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Info { paths } => cmd_info(&paths),
        Command::Classify {
            paths,
            json,
            table: _,
            maximal,
        } => cmd_classify(&paths, json, maximal),
        Command::Generate { spec, out } => cmd_generate(&spec, &out).map(|()| 0),
        Command::Census { path, parallel } => cmd_census(&path, parallel),
        Command::Dual { path, which, out } => cmd_transform(&path, out.as_deref(), |d| {
            Ok(d.dual(parse_dual_kind(&which)?))
        })
        .map(|()| 0),
        Command::Mirror { path, out } => {
            cmd_transform(&path, out.as_deref(), |d| Ok(d.mirror())).map(|()| 0)
        }
        Command::Walsh { path, out } => cmd_walsh(&path, out.as_deref()).map(|()| 0),
        Command::Grow { path, emit } => cmd_grow(&path, emit.as_deref()).map(|()| 0),
        Command::Table1 { l, m, n } => cmd_table1(l, m, n).map(|()| 0),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn cmd_info(paths: &[PathBuf]) -> Result<i32, CliError> {
    let mut worst = 0;
    for path in paths {
        match load_dessin(path) {
            Ok((d, name)) => {
                let t = d.dessin_type();
                println!(
                    "{name}: degree {} type {t} genus {} order {}{}",
                    d.degree(),
                    d.genus(),
                    d.order(),
                    if d.is_degenerate() { " degenerate" } else { "" },
                );
            }
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                worst = worst.max(e.exit_code());
            }
        }
    }
    Ok(worst)
}

fn classify_one(d: &RegularDessin, name: String, maximal: bool) -> Result<ReportRecord, CliError> {
    catch_unwind(AssertUnwindSafe(|| report_for(d, name, maximal)))
        .unwrap_or_else(|p| Err(CliError::Internal(panic_message(p))))
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| p.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".into())
}

fn table_line(r: &ReportRecord) -> String {
    let [l, m, n] = r.dessin_type;
    let flag = |b: bool| if b { "yes" } else { "no" };
    format!(
        "{:<20} {:>6}  ({l},{m},{n})  g={:<4} refl={:<3} c1={:<3} c2={:<3} c3={:<3} c4={:<3} symmetric={}{}",
        r.name,
        r.degree,
        r.genus,
        flag(r.reflexible),
        flag(r.conditions.c1.present),
        flag(r.conditions.c2.present),
        flag(r.conditions.c3.present),
        flag(r.conditions.c4),
        flag(r.symmetric),
        if r.degenerate { " degenerate" } else { "" },
    )
}

fn cmd_classify(paths: &[PathBuf], json: bool, maximal: bool) -> Result<i32, CliError> {
    let mut worst = 0;
    for path in paths {
        let record = load_dessin(path).and_then(|(d, name)| classify_one(&d, name, maximal));
        match record {
            Ok(r) => {
                if json {
                    let line =
                        serde_json::to_string(&r).map_err(|e| CliError::Internal(e.to_string()))?;
                    println!("{line}");
                } else {
                    println!("{}", table_line(&r));
                }
            }
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                worst = worst.max(e.exit_code());
            }
        }
    }
    Ok(worst)
}

fn build_spec(spec: &str) -> Result<RegularDessin, CliError> {
    if let Some(rest) = spec.strip_prefix("join:") {
        let (left, right) = rest.split_once(',').ok_or_else(|| {
            CliError::Construction("join spec needs two comma-separated parts".into())
        })?;
        if left.starts_with("join:") || right.starts_with("join:") {
            return Err(CliError::Construction(
                "nested join is not supported".into(),
            ));
        }
        return join(&build_spec(left)?, &build_spec(right)?).map_err(CliError::construction);
    }
    if let Some(q) = spec.strip_prefix("biggs:") {
        let q: u64 = q
            .parse()
            .map_err(|_| CliError::Construction(format!("bad field size '{q}'")))?;
        return biggs_map(q).map_err(CliError::construction);
    }
    if let Some(rest) = spec.strip_prefix("torus:") {
        let (kind, variant) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Construction("torus spec is torus:<44|36>:<12|21>".into()))?;
        let kind = match kind {
            "44" => TorusKind::FourFour,
            "36" => TorusKind::ThreeSix,
            other => {
                return Err(CliError::Construction(format!(
                    "unknown torus kind '{other}', expected 44 or 36"
                )))
            }
        };
        let variant = match variant {
            "12" => ChiralVariant::OneTwo,
            "21" => ChiralVariant::TwoOne,
            other => {
                return Err(CliError::Construction(format!(
                    "unknown torus variant '{other}', expected 12 or 21"
                )))
            }
        };
        return Ok(torus_map(kind, variant));
    }
    if let Some(e) = spec.strip_prefix("exceptional:") {
        let e: u32 = e
            .parse()
            .map_err(|_| CliError::Construction(format!("bad extension degree '{e}'")))?;
        return exceptional_dessin(e).map_err(CliError::construction);
    }
    match spec {
        "v4" => Ok(v4_map()),
        "klein21" => Ok(klein21()),
        other => Err(CliError::Construction(format!(
            "unknown construction spec '{other}'"
        ))),
    }
}

fn cmd_generate(spec: &str, out: &Path) -> Result<(), CliError> {
    let d = build_spec(spec)?;
    let file = DessinFile::from_dessin(&d, Some(spec.to_string()));
    save_json(&file, Some(out))
}

fn cmd_census(path: &Path, parallel: usize) -> Result<i32, CliError> {
    let files = load_census(path)?;
    let n = files.len();
    let workers = parallel.clamp(1, n.max(1));
    let mut results: Vec<Option<Result<ReportRecord, CliError>>> = Vec::new();
    results.resize_with(n, || None);

    let chunk = n.div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        for (file_chunk, result_chunk) in files.chunks(chunk).zip(results.chunks_mut(chunk)) {
            scope.spawn(move || {
                for (file, slot) in file_chunk.iter().zip(result_chunk.iter_mut()) {
                    let name = file.name.clone().unwrap_or_else(|| "record".into());
                    let outcome = file.to_dessin().and_then(|d| classify_one(&d, name, false));
                    *slot = Some(outcome);
                }
            });
        }
    });

    let mut errors = 0usize;
    let mut worst = 0;
    let mut symmetric = 0usize;
    let mut chiral_but_symmetric = 0usize;
    let mut reflexible = 0usize;
    let mut degenerate = 0usize;
    let mut by_condition = [0usize; 4];
    for (i, slot) in results.into_iter().enumerate() {
        match slot.expect("every record is processed") {
            Ok(r) => {
                if r.symmetric {
                    symmetric += 1;
                    if !r.reflexible {
                        chiral_but_symmetric += 1;
                    }
                }
                if r.reflexible {
                    reflexible += 1;
                }
                if r.degenerate {
                    degenerate += 1;
                }
                for (k, present) in [
                    r.conditions.c1.present,
                    r.conditions.c2.present,
                    r.conditions.c3.present,
                    r.conditions.c4,
                ]
                .into_iter()
                .enumerate()
                {
                    if present {
                        by_condition[k] += 1;
                    }
                }
            }
            Err(e) => {
                eprintln!("error: record {i}: {e}");
                errors += 1;
                worst = worst.max(e.exit_code());
            }
        }
    }

    println!("records {n}");
    println!("errors {errors}");
    println!("symmetric {symmetric}");
    println!("chiral_but_symmetric {chiral_but_symmetric}");
    println!("reflexible {reflexible}");
    println!("degenerate {degenerate}");
    println!(
        "by_condition c1={} c2={} c3={} c4={}",
        by_condition[0], by_condition[1], by_condition[2], by_condition[3]
    );
    Ok(worst)
}

fn cmd_transform(
    path: &Path,
    out: Option<&Path>,
    f: impl FnOnce(&RegularDessin) -> Result<RegularDessin, CliError>,
) -> Result<(), CliError> {
    let (d, name) = load_dessin(path)?;
    let transformed = f(&d)?;
    save_json(&DessinFile::from_dessin(&transformed, Some(name)), out)
}

fn cmd_walsh(path: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let (d, _) = load_dessin(path)?;
    save_json(&OrientedMapFile::from_map(&d.walsh()), out)
}

fn cmd_grow(path: &Path, emit: Option<&Path>) -> Result<(), CliError> {
    let (d, name) = load_dessin(path)?;
    let steps = grow_normal(&d);
    if steps.is_empty() {
        println!("no growth applies");
        return Ok(());
    }
    for step in &steps {
        let t = step.grown.dessin_type();
        println!(
            "{}: order {} type {t} genus {}",
            step.rule,
            step.grown.order(),
            step.grown.genus()
        );
        if let Some(dir) = emit {
            std::fs::create_dir_all(dir)
                .map_err(|e| CliError::Construction(format!("{}: {e}", dir.display())))?;
            let label = step.rule.to_string().replace('@', "_");
            let out = dir.join(format!("{name}.{label}.json"));
            let grown_name = format!("{name}.{}", step.rule);
            save_json(
                &DessinFile::from_dessin(&step.grown, Some(grown_name)),
                Some(&out),
            )?;
        }
    }
    Ok(())
}

fn cmd_table1(l: u64, m: u64, n: u64) -> Result<(), CliError> {
    let t = DessinType::new(l, m, n);
    let matches = table1_candidates(&t);
    if matches.is_empty() {
        println!("no inclusion row matches {t}");
        return Ok(());
    }
    for m in matches {
        let row = m.row;
        let sub = format!(
            "({},{},{})",
            row.sub_type[0], row.sub_type[1], row.sub_type[2]
        );
        println!(
            "{}: {} < {} index {} group {} {} conditions {}",
            row.case_label,
            sub,
            m.over_type,
            row.index,
            row.group_name,
            if row.normal { "normal" } else { "non-normal" },
            row.theorem_conditions,
        );
    }
    Ok(())
}
