//! Command-line surface over the frame-glueing library: validation,
//! glueing, classification, functorial actions and the law suites.
//!
//! Exit codes: 0 on success or all-pass, 1 on a law or verification
//! failure, 2 on an input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use artin_core::catalog::Catalog;
use artin_core::extension::{
    canonical_glue_iso, characteristic_map, extension_from_element, is_weakly_schreier,
    AdjointExtension, ExtensionClass,
};
use artin_core::frame::FiniteFrame;
use artin_core::functorial::{
    baer_meet, pullback_extension, pushout_extension, verify_pullback_universal,
    verify_pushout_universal, ExtensionSet,
};
use artin_core::glueing::glue;
use artin_core::hom::left_adjoint;
use artin_core::io::{
    read_frame_file, read_map_file, resolve_frame, to_dot, write_json, FrameFile, IoError,
    MapFile, FORMAT_VERSION,
};
use artin_core::laws::{run_all, LawSuiteConfig};
use artin_core::report::LawReport;

#[derive(Parser)]
#[command(name = "artin", version, about = "Finite frame glueings and split extensions")]
struct Cli {
    /// Directory of extra frame files to add to the built-in catalog.
    #[arg(long, global = true, value_name = "DIR")]
    catalog: Option<PathBuf>,

    /// Abort enumerations over frames with more elements than this.
    #[arg(long, global = true, default_value_t = 12, value_name = "N")]
    max_frame_size: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a frame file is a bounded distributive lattice.
    Validate {
        /// Frame file or catalog name.
        frame: String,
    },
    /// Glue along a map file and emit the carrier frame.
    Glue {
        /// Map file for the glueing map `alpha : H → N`.
        map: PathBuf,
        /// Output frame file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write the carrier's Hasse diagram as DOT.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Classify the extension carried by an element: emit its
    /// characteristic map and the isomorphism witness onto the glueing.
    Classify {
        /// Frame file or catalog name for the total frame.
        frame: String,
        /// Element id carrying the extension.
        element: String,
        /// Output file (stdout if omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Verify that a (kernel, cokernel, section) triple of map files is an
    /// adjoint extension.
    CheckExtension {
        #[arg(long, value_name = "MAP")]
        kernel: PathBuf,
        #[arg(long, value_name = "MAP")]
        cokernel: PathBuf,
        #[arg(long, value_name = "MAP")]
        section: PathBuf,
    },
    /// Pull an extension class back along a map: emits the new
    /// characteristic map.
    Pullback {
        /// Map file for the classifying map `alpha : H → N`.
        alpha: PathBuf,
        /// Map file for `f : H' → H`.
        map: PathBuf,
        /// Run the brute-force universal-property oracle as well.
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Push an extension class out along a map: emits the new
    /// characteristic map.
    Pushout {
        /// Map file for the classifying map `alpha : H → N`.
        alpha: PathBuf,
        /// Map file for `g : N → N'`.
        map: PathBuf,
        /// Run the brute-force universal-property oracle as well.
        #[arg(long)]
        verify: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Baer meet of two extension classes over the same frames.
    BaerMeet {
        alpha: PathBuf,
        beta: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// List all extension classes of H by N, one map per line.
    EnumerateExtensions {
        /// Frame file or catalog name for the quotient H.
        quotient: String,
        /// Frame file or catalog name for the normal part N.
        normal: String,
    },
    /// Run the law suites over the catalog; one JSON verdict per line.
    CheckLaws {
        /// Cap for the classification sweep.
        #[arg(long, default_value_t = 8)]
        classification_max: usize,
        /// Cap for universal-property instances and probes.
        #[arg(long, default_value_t = 6)]
        universal_max: usize,
        /// Cap for the section-search sweep.
        #[arg(long, default_value_t = 9)]
        schreier_max: usize,
        /// Cap for the bifunctor sweep.
        #[arg(long, default_value_t = 4)]
        bifunctor_max: usize,
    },
    /// Hasse diagram of a frame in DOT format.
    ExportDot {
        /// Frame file or catalog name.
        frame: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum Outcome {
    Pass,
    LawFailure,
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::LawFailure) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let mut catalog = Catalog::builtin();
    if let Some(dir) = &cli.catalog {
        load_catalog_dir(dir, &mut catalog)?;
    }

    match cli.command {
        Command::Validate { frame } => validate_cmd(&frame, &mut catalog),
        Command::Glue { map, out, dot } => glue_cmd(&map, out, dot, &catalog),
        Command::Classify { frame, element, out } => {
            classify_cmd(&frame, &element, out, &mut catalog)
        }
        Command::CheckExtension {
            kernel,
            cokernel,
            section,
        } => check_extension_cmd(&kernel, &cokernel, &section, &catalog),
        Command::Pullback {
            alpha,
            map,
            verify,
            out,
        } => transport_cmd(&alpha, &map, verify, out, &catalog, Transport::Pullback),
        Command::Pushout {
            alpha,
            map,
            verify,
            out,
        } => transport_cmd(&alpha, &map, verify, out, &catalog, Transport::Pushout),
        Command::BaerMeet { alpha, beta, out } => baer_meet_cmd(&alpha, &beta, out, &catalog),
        Command::EnumerateExtensions { quotient, normal } => {
            enumerate_cmd(&quotient, &normal, cli.max_frame_size, &mut catalog)
        }
        Command::CheckLaws {
            classification_max,
            universal_max,
            schreier_max,
            bifunctor_max,
        } => {
            let cfg = LawSuiteConfig {
                classification_max,
                universal_max,
                schreier_max,
                bifunctor_max,
            };
            check_laws_cmd(&catalog, &cfg)
        }
        Command::ExportDot { frame, out } => export_dot_cmd(&frame, out, &mut catalog),
    }
}

fn load_catalog_dir(dir: &Path, catalog: &mut Catalog) -> Result<()> {
    let mut entries: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("cannot read catalog directory `{}`", dir.display()))?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    entries.sort();
    for path in entries {
        let (name, frame) = read_frame_file(&path)?
            .into_frame()
            .with_context(|| format!("in catalog file `{}`", path.display()))?;
        catalog.insert(name, frame);
    }
    Ok(())
}

fn emit<T: Serialize>(out: Option<PathBuf>, value: &T) -> Result<()> {
    match out {
        Some(path) => write_json(&path, value)?,
        None => println!("{}", serde_json::to_string_pretty(value)?),
    }
    Ok(())
}

fn validate_cmd(name_or_path: &str, catalog: &mut Catalog) -> Result<Outcome> {
    if catalog.get(name_or_path).is_some() {
        println!("ok: catalog frame `{name_or_path}` is a finite frame");
        return Ok(Outcome::Pass);
    }
    let file = read_frame_file(Path::new(name_or_path))?;
    let name = file.name.clone();
    match file.into_frame() {
        Ok((_, frame)) => {
            println!(
                "ok: `{name}` is a finite frame with {} elements",
                frame.len()
            );
            Ok(Outcome::Pass)
        }
        Err(IoError::Poset(e)) => {
            println!("rejected: `{name}` is not a poset: {e}");
            Ok(Outcome::LawFailure)
        }
        Err(IoError::Frame(e)) => {
            println!("rejected: `{name}` is not a frame: {e}");
            Ok(Outcome::LawFailure)
        }
        Err(other) => Err(other.into()),
    }
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "map".to_string())
}

fn glue_cmd(
    map_path: &Path,
    out: Option<PathBuf>,
    dot: Option<PathBuf>,
    catalog: &Catalog,
) -> Result<Outcome> {
    let map_file = read_map_file(map_path)?;
    let alpha = map_file.clone().into_hom(catalog)?;
    let glueing = glue(&alpha);
    let carrier_name = format!("Gl({})", stem(map_path));
    let frame_file = FrameFile::from_frame(&carrier_name, glueing.carrier());
    emit(out, &frame_file)?;
    if let Some(dot_path) = dot {
        std::fs::write(&dot_path, to_dot(&carrier_name, glueing.carrier()))
            .with_context(|| format!("cannot write `{}`", dot_path.display()))?;
    }
    Ok(Outcome::Pass)
}

#[derive(Serialize)]
struct ClassifyOutput {
    format_version: u32,
    alpha: MapFile,
    normal: FrameFile,
    quotient: FrameFile,
    carrier: FrameFile,
    iso: MapFile,
    iso_inverse: MapFile,
}

fn classify_cmd(
    name_or_path: &str,
    element: &str,
    out: Option<PathBuf>,
    catalog: &mut Catalog,
) -> Result<Outcome> {
    let (name, frame) = resolve_frame(name_or_path, catalog)?;
    let u = frame
        .require(element)
        .map_err(|e| anyhow!("in frame `{name}`: {e}"))?;
    let ext = extension_from_element(&frame, u);
    let alpha = characteristic_map(&ext);
    let iso = canonical_glue_iso(&ext).map_err(|e| anyhow!("classification failed: {e}"))?;

    let normal_name = format!("{name}.up.{element}");
    let quotient_name = format!("{name}.down.{element}");
    let carrier_name = format!("Gl({name},{element})");
    let output = ClassifyOutput {
        format_version: FORMAT_VERSION,
        alpha: MapFile::from_hom(&quotient_name, &normal_name, &alpha),
        normal: FrameFile::from_frame(&normal_name, ext.normal()),
        quotient: FrameFile::from_frame(&quotient_name, ext.quotient()),
        carrier: FrameFile::from_frame(&carrier_name, iso.forward().cod()),
        iso: MapFile::from_hom(&name, &carrier_name, iso.forward()),
        iso_inverse: MapFile::from_hom(&carrier_name, &name, iso.backward()),
    };
    emit(out, &output)?;
    Ok(Outcome::Pass)
}

fn check_extension_cmd(
    kernel_path: &Path,
    cokernel_path: &Path,
    section_path: &Path,
    catalog: &Catalog,
) -> Result<Outcome> {
    let kernel = read_map_file(kernel_path)?.into_hom(catalog)?;
    let cokernel = read_map_file(cokernel_path)?.into_hom(catalog)?;
    let section = read_map_file(section_path)?.into_hom(catalog)?;

    let retract = match left_adjoint(&kernel) {
        Ok(raw) => match raw.into_meet_hom() {
            Ok(m) => m,
            Err(e) => {
                println!("fail: the kernel's left adjoint does not preserve meets: {e}");
                return Ok(Outcome::LawFailure);
            }
        },
        Err(e) => {
            println!("fail: the kernel has no left adjoint: {e}");
            return Ok(Outcome::LawFailure);
        }
    };

    let ext = AdjointExtension::new_unchecked(kernel, cokernel, section, retract);
    match ext.verify() {
        Ok(()) => println!("ok: adjoint extension laws hold"),
        Err(e) => {
            println!("fail: {e}");
            return Ok(Outcome::LawFailure);
        }
    }
    if !is_weakly_schreier(&ext) {
        println!("fail: the weakly Schreier decomposition does not hold");
        return Ok(Outcome::LawFailure);
    }
    println!("ok: weakly Schreier decomposition holds");
    match canonical_glue_iso(&ext) {
        Ok(_) => println!("ok: isomorphic to the glueing along its characteristic map"),
        Err(e) => {
            println!("fail: {e}");
            return Ok(Outcome::LawFailure);
        }
    }
    Ok(Outcome::Pass)
}

enum Transport {
    Pullback,
    Pushout,
}

fn transport_cmd(
    alpha_path: &Path,
    map_path: &Path,
    verify: bool,
    out: Option<PathBuf>,
    catalog: &Catalog,
    direction: Transport,
) -> Result<Outcome> {
    let alpha_file = read_map_file(alpha_path)?;
    let map_file = read_map_file(map_path)?;
    let alpha = alpha_file.clone().into_hom(catalog)?;
    let map = map_file.clone().into_hom(catalog)?;
    let ext = glue(&alpha).as_extension();

    let instance = format!(
        "alpha={}→{}, map={}→{}",
        alpha_file.dom, alpha_file.cod, map_file.dom, map_file.cod
    );
    let (result, dom_name, cod_name) = match direction {
        Transport::Pullback => {
            let result = pullback_extension(&ext, &map)
                .map_err(|e| anyhow!("cannot pull back: {e}"))?;
            if verify {
                let probes = probe_frames(catalog);
                let check = verify_pullback_universal(&ext, &map, &result, &probes);
                let failed = check.is_err();
                let report = LawReport::of_result("pullback_universal", &instance, check);
                eprintln!("{}", serde_json::to_string(&report)?);
                if failed {
                    return Ok(Outcome::LawFailure);
                }
            }
            (result, map_file.dom.clone(), alpha_file.cod.clone())
        }
        Transport::Pushout => {
            let result = pushout_extension(&ext, &map)
                .map_err(|e| anyhow!("cannot push out: {e}"))?;
            if verify {
                let probes = probe_frames(catalog);
                let check = verify_pushout_universal(&ext, &map, &result, &probes);
                let failed = check.is_err();
                let report = LawReport::of_result("pushout_universal", &instance, check);
                eprintln!("{}", serde_json::to_string(&report)?);
                if failed {
                    return Ok(Outcome::LawFailure);
                }
            }
            (result, alpha_file.dom.clone(), map_file.cod.clone())
        }
    };
    let char_map = characteristic_map(&result);
    emit(out, &MapFile::from_hom(&dom_name, &cod_name, &char_map))?;
    Ok(Outcome::Pass)
}

fn probe_frames(catalog: &Catalog) -> Vec<Arc<FiniteFrame>> {
    catalog
        .frames_up_to(6)
        .into_iter()
        .map(|(_, f)| f.clone())
        .collect()
}

fn baer_meet_cmd(
    alpha_path: &Path,
    beta_path: &Path,
    out: Option<PathBuf>,
    catalog: &Catalog,
) -> Result<Outcome> {
    let alpha_file = read_map_file(alpha_path)?;
    let beta_file = read_map_file(beta_path)?;
    if alpha_file.dom != beta_file.dom || alpha_file.cod != beta_file.cod {
        bail!(
            "classes live over different frames: ({}, {}) vs ({}, {})",
            alpha_file.dom,
            alpha_file.cod,
            beta_file.dom,
            beta_file.cod
        );
    }
    let alpha = ExtensionClass::new(alpha_file.clone().into_hom(catalog)?);
    let beta = ExtensionClass::new(beta_file.into_hom(catalog)?);
    let meet = baer_meet(&alpha, &beta).map_err(|e| anyhow!("cannot meet: {e}"))?;
    emit(
        out,
        &MapFile::from_hom(&alpha_file.dom, &alpha_file.cod, meet.alpha()),
    )?;
    Ok(Outcome::Pass)
}

fn enumerate_cmd(
    quotient_arg: &str,
    normal_arg: &str,
    max_frame_size: usize,
    catalog: &mut Catalog,
) -> Result<Outcome> {
    let (h_name, h) = resolve_frame(quotient_arg, catalog)?;
    let (n_name, n) = resolve_frame(normal_arg, catalog)?;
    if h.len() > max_frame_size || n.len() > max_frame_size {
        bail!(
            "enumeration over frames with {} and {} elements exceeds --max-frame-size {}",
            h.len(),
            n.len(),
            max_frame_size
        );
    }
    let set = ExtensionSet::enumerate(&h, &n);
    for class in set.classes() {
        let file = MapFile::from_hom(&h_name, &n_name, class.alpha());
        println!("{}", serde_json::to_string(&file)?);
    }
    eprintln!("{} classes of extensions of {h_name} by {n_name}", set.len());
    Ok(Outcome::Pass)
}

fn check_laws_cmd(catalog: &Catalog, cfg: &LawSuiteConfig) -> Result<Outcome> {
    let names: Vec<&str> = catalog.frames().map(|(n, _)| n).collect();
    eprintln!(
        "catalog: {}; caps: classification<={} universal<={} schreier<={} bifunctor<={}",
        names.join(","),
        cfg.classification_max,
        cfg.universal_max,
        cfg.schreier_max,
        cfg.bifunctor_max
    );
    let reports = run_all(catalog, cfg);
    let mut failures = 0usize;
    for report in &reports {
        println!("{}", serde_json::to_string(report)?);
        if !report.passed() {
            failures += 1;
        }
    }
    print_summary_table(&reports);
    if failures == 0 {
        Ok(Outcome::Pass)
    } else {
        eprintln!("{failures} law instances failed");
        Ok(Outcome::LawFailure)
    }
}

fn print_summary_table(reports: &[LawReport]) {
    let mut order: Vec<&str> = Vec::new();
    let mut tally: std::collections::BTreeMap<&str, (usize, usize)> = Default::default();
    for r in reports {
        if !tally.contains_key(r.statement.as_str()) {
            order.push(&r.statement);
        }
        let entry = tally.entry(&r.statement).or_insert((0, 0));
        entry.1 += 1;
        if r.passed() {
            entry.0 += 1;
        }
    }
    let width = order.iter().map(|s| s.len()).max().unwrap_or(0);
    eprintln!("{:-^1$}", " law summary ", width + 18);
    for statement in order {
        let (pass, total) = tally[statement];
        let verdict = if pass == total { "pass" } else { "FAIL" };
        eprintln!("{statement:width$}  {pass:>4}/{total:<4} {verdict}");
    }
}

fn export_dot_cmd(name_or_path: &str, out: Option<PathBuf>, catalog: &mut Catalog) -> Result<Outcome> {
    let (name, frame) = resolve_frame(name_or_path, catalog)?;
    let dot = to_dot(&name, &frame);
    match out {
        Some(path) => std::fs::write(&path, dot)
            .with_context(|| format!("cannot write `{}`", path.display()))?,
        None => print!("{dot}"),
    }
    Ok(Outcome::Pass)
}
