//! Implementations of the CLI subcommands. Every command returns its stdout
//! payload plus warning lines destined for stderr, so rendering stays
//! deterministic and testable without spawning a process.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use strata_core::catalog::{self, CatalogEntry, CatalogModel, ExampleReport, SpaceKind};
use strata_core::formulas::{
    compare_theories, hi_cone_chain_model, hi_suspension_chain_model, validate_link,
    ConeSpaceSpec, LinkModel, LinkValidation, SpaceSpec, SuspensionSpaceSpec, TheoryComparison,
};
use strata_core::les::{mayer_vietoris, solve_exact, DimSlot, ExactSequenceSpec, MVOutcome, SolveOutcome};
use strata_core::{GradedBetti, Perversity, SimplicialComplex};

use crate::cli::{
    CatalogArgs, Command, ConeArgs, ExampleArgs, Format, HomologyArgs, LesArgs, MvArgs,
    SuspensionArgs, Theory,
};
use crate::error::CliError;
use crate::formats::{
    looks_like_json, parse_facets, parse_les, parse_perversity, BettiTableDocument, MVDocument,
};

/// What a command hands back to the process shell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmdOutput {
    pub stdout: String,
    pub warnings: Vec<String>,
}

impl CmdOutput {
    fn new(stdout: String) -> Self {
        CmdOutput {
            stdout,
            warnings: Vec::new(),
        }
    }

    fn with_warnings(stdout: String, warnings: Vec<String>) -> Self {
        CmdOutput { stdout, warnings }
    }
}

pub fn dispatch(command: Command) -> Result<CmdOutput, CliError> {
    match command {
        Command::Homology(args) => homology(&args),
        Command::Cone(args) => cone(&args),
        Command::Suspension(args) => suspension(&args),
        Command::Example(args) => example(&args),
        Command::Mv(args) => mv(&args),
        Command::Les(args) => les(&args),
        Command::Catalog(args) => catalog_command(&args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {}", path.display(), e)))
}

fn input_error(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn to_json(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents serialize to JSON");
    text.push('\n');
    text
}

fn betti_doc(betti: &GradedBetti) -> BettiTableDocument {
    BettiTableDocument::from_graded(betti, true).0
}

fn push_betti_lines(out: &mut String, betti: &GradedBetti, dense: bool) {
    if dense {
        let low = betti.support().first().copied().unwrap_or(0).min(0);
        let high = betti.top_degree().max(low);
        for d in low..=high {
            let _ = writeln!(out, "  {}: {}", d, betti.rank(d));
        }
    } else if betti.is_empty() {
        out.push_str("  (none)\n");
    } else {
        for (d, r) in betti.iter() {
            let _ = writeln!(out, "  {}: {}", d, r);
        }
    }
}

fn join_degrees(degrees: &[i64]) -> String {
    if degrees.is_empty() {
        return String::from("(none)");
    }
    degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn inline_betti(betti: &GradedBetti) -> String {
    if betti.is_empty() {
        return String::from("(none)");
    }
    betti
        .iter()
        .map(|(d, r)| format!("{}:{}", d, r))
        .collect::<Vec<_>>()
        .join(" ")
}

fn homology(args: &HomologyArgs) -> Result<CmdOutput, CliError> {
    let text = read_file(&args.file)?;
    if looks_like_json(&text) {
        return Err(CliError::Input(String::from(
            "homology expects a facet file, not a JSON document",
        )));
    }
    let complex = parse_facets(&text).map_err(input_error)?;
    let betti = complex.betti();
    match args.format {
        Format::Json => {
            let (doc, warnings) = BettiTableDocument::from_graded(&betti, true);
            Ok(CmdOutput::with_warnings(to_json(&doc), warnings))
        }
        Format::Table => {
            let mut out = String::new();
            match complex.dimension() {
                Some(d) => {
                    let _ = writeln!(out, "reduced Betti numbers (dimension {})", d);
                }
                None => out.push_str("reduced Betti numbers (empty complex)\n"),
            }
            push_betti_lines(&mut out, &betti, args.dense);
            let _ = writeln!(
                out,
                "Euler characteristic: {}",
                betti.euler_characteristic() + 1
            );
            Ok(CmdOutput::new(out))
        }
    }
}

/// A link read from disk: the formula-facing model, plus the complex itself
/// when the input was a facet file (needed for chain-model verification).
struct LoadedLink {
    model: LinkModel,
    complex: Option<SimplicialComplex>,
}

fn load_link(path: &Path) -> Result<LoadedLink, CliError> {
    let text = read_file(path)?;
    if looks_like_json(&text) {
        let doc = BettiTableDocument::parse(&text).map_err(input_error)?;
        let (betti, dim) = doc.to_reduced_link().map_err(input_error)?;
        Ok(LoadedLink {
            model: LinkModel::Betti { betti, dim },
            complex: None,
        })
    } else {
        let complex = parse_facets(&text).map_err(input_error)?;
        Ok(LoadedLink {
            model: LinkModel::Complex(complex.clone()),
            complex: Some(complex),
        })
    }
}

/// One evaluated (space, perversity) cell: the comparison tables plus the
/// verification outcome when it was requested.
struct SpaceRow {
    cmp: TheoryComparison,
    verification: Option<String>,
}

fn evaluate_row(
    spec: &SpaceSpec,
    complex: Option<&SimplicialComplex>,
    connected: bool,
    p: &Perversity,
    verify: bool,
) -> Result<SpaceRow, CliError> {
    let cmp = compare_theories(spec, p).map_err(input_error)?;
    let verification = if verify {
        Some(run_verification(spec, complex, connected, p, &cmp)?)
    } else {
        None
    };
    Ok(SpaceRow { cmp, verification })
}

/// Degrees where two tables disagree, optionally ignoring degree 0: for
/// disconnected links the closed formulas keep the link's reduced degree-0
/// rank while the chain models work with the genuinely reduced complex.
fn filtered_diff(model: &GradedBetti, formula: &GradedBetti, connected: bool) -> Vec<i64> {
    model
        .differing_degrees(formula)
        .into_iter()
        .filter(|&d| connected || d >= 1)
        .collect()
}

fn run_verification(
    spec: &SpaceSpec,
    complex: Option<&SimplicialComplex>,
    connected: bool,
    p: &Perversity,
    cmp: &TheoryComparison,
) -> Result<String, CliError> {
    let Some(c) = complex else {
        return Ok(String::from(
            "skipped (needs a facet complex; the input was a Betti table)",
        ));
    };
    let note = if connected {
        ""
    } else {
        " (degree 0 excluded: disconnected links use the reduced-homology convention)"
    };
    match spec {
        SpaceSpec::Cone(_) => {
            let model = hi_cone_chain_model(c, p).map_err(input_error)?;
            let diff = filtered_diff(&model, &cmp.hi, connected);
            if !diff.is_empty() {
                return Err(CliError::VerifyMismatch(format!(
                    "cone chain model disagrees with the closed formula at degrees {}: model {}, formula {}",
                    join_degrees(&diff),
                    inline_betti(&model),
                    inline_betti(&cmp.hi)
                )));
            }
            if let Some(ih) = &cmp.ih {
                let (trunc, _) = c.chain_complex(true).truncate(cmp.cutoff_degree);
                let trunc_betti = trunc.betti();
                let diff = trunc_betti.differing_degrees(ih);
                if !diff.is_empty() {
                    return Err(CliError::VerifyMismatch(format!(
                        "truncation homology disagrees with the intersection homology table at degrees {}: truncation {}, formula {}",
                        join_degrees(&diff),
                        inline_betti(&trunc_betti),
                        inline_betti(ih)
                    )));
                }
            }
            Ok(format!("chain models match the closed formulas{}", note))
        }
        SpaceSpec::Suspension(_) => {
            let model = hi_suspension_chain_model(c, p).map_err(input_error)?;
            let diff = filtered_diff(&model, &cmp.hi, connected);
            if !diff.is_empty() {
                return Err(CliError::VerifyMismatch(format!(
                    "suspension chain model disagrees with the closed formula at degrees {}: model {}, formula {}",
                    join_degrees(&diff),
                    inline_betti(&model),
                    inline_betti(&cmp.hi)
                )));
            }
            Ok(format!("chain model matches the closed formula{}", note))
        }
    }
}

/// The perversity grid for `--sweep-perversities`: the four standard families
/// plus every constant value list from -2 up to `link_dim + 1`, so the sweep
/// crosses both degenerate regimes (cutoff at or below 0, cutoff above the
/// cone dimension).
fn sweep_grid(link_dim: usize) -> Vec<Perversity> {
    let mut out = vec![
        Perversity::Zero,
        Perversity::LowerMiddle,
        Perversity::UpperMiddle,
        Perversity::Top,
    ];
    for c in -2..=(link_dim as i64 + 1) {
        out.push(
            Perversity::from_values(vec![c; link_dim])
                .expect("a constant value list over a positive-dimensional link is well formed"),
        );
    }
    out
}

fn show_ih(theory: Theory) -> bool {
    matches!(theory, Theory::Ih | Theory::Both)
}

fn show_hi(theory: Theory) -> bool {
    matches!(theory, Theory::Hi | Theory::Both)
}

fn render_cone_table(link_dim: usize, row: &SpaceRow, theory: Theory, dense: bool) -> String {
    let cmp = &row.cmp;
    let mut out = String::new();
    let _ = writeln!(out, "open cone over a {}-dimensional link", link_dim);
    let _ = writeln!(out, "perversity: {}", cmp.perversity);
    let _ = writeln!(out, "cutoff degree: {}", cmp.cutoff_degree);
    if show_ih(theory) {
        out.push_str("IH:\n");
        push_betti_lines(
            &mut out,
            cmp.ih.as_ref().expect("cones always carry an IH table"),
            dense,
        );
    }
    if show_hi(theory) {
        out.push_str("HI:\n");
        push_betti_lines(&mut out, &cmp.hi, dense);
    }
    if matches!(theory, Theory::Both) {
        let _ = writeln!(
            out,
            "theories differ at: {}",
            join_degrees(&cmp.differing_degrees)
        );
    }
    if let Some(v) = &row.verification {
        let _ = writeln!(out, "verification: {}", v);
    }
    out
}

fn render_suspension_table(link_dim: usize, row: &SpaceRow, dense: bool) -> String {
    let cmp = &row.cmp;
    let mut out = String::new();
    let _ = writeln!(out, "suspension of a {}-dimensional link", link_dim);
    let _ = writeln!(out, "perversity: {}", cmp.perversity);
    let _ = writeln!(out, "cutoff degree: {}", cmp.cutoff_degree);
    out.push_str("HI:\n");
    push_betti_lines(&mut out, &cmp.hi, dense);
    out.push_str("ordinary homology of the suspension:\n");
    push_betti_lines(
        &mut out,
        cmp.ordinary
            .as_ref()
            .expect("suspensions always carry the ordinary table"),
        dense,
    );
    let _ = writeln!(
        out,
        "HI differs from ordinary homology at: {}",
        join_degrees(&cmp.differing_degrees)
    );
    if let Some(v) = &row.verification {
        let _ = writeln!(out, "verification: {}", v);
    }
    out
}

fn short_verification(v: &str) -> &'static str {
    if v.starts_with("skipped") {
        "skipped"
    } else {
        "match"
    }
}

fn render_cone_sweep(link_dim: usize, rows: &[SpaceRow], theory: Theory) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "open cone over a {}-dimensional link: sweep over {} perversities",
        link_dim,
        rows.len()
    );
    for row in rows {
        let cmp = &row.cmp;
        let mut line = format!("{}: k={}", cmp.perversity, cmp.cutoff_degree);
        if show_ih(theory) {
            let _ = write!(
                line,
                "; IH = {}",
                inline_betti(cmp.ih.as_ref().expect("cones always carry an IH table"))
            );
        }
        if show_hi(theory) {
            let _ = write!(line, "; HI = {}", inline_betti(&cmp.hi));
        }
        if matches!(theory, Theory::Both) {
            let _ = write!(line, "; differ = {}", join_degrees(&cmp.differing_degrees));
        }
        if let Some(v) = &row.verification {
            let _ = write!(line, "; verification = {}", short_verification(v));
        }
        let _ = writeln!(out, "{}", line);
    }
    out
}

fn render_suspension_sweep(link_dim: usize, rows: &[SpaceRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suspension of a {}-dimensional link: sweep over {} perversities",
        link_dim,
        rows.len()
    );
    if let Some(first) = rows.first() {
        let ordinary = first
            .cmp
            .ordinary
            .as_ref()
            .expect("suspensions always carry the ordinary table");
        let _ = writeln!(out, "ordinary homology: {}", inline_betti(ordinary));
    }
    for row in rows {
        let cmp = &row.cmp;
        let mut line = format!(
            "{}: k={}; HI = {}; differs from ordinary at = {}",
            cmp.perversity,
            cmp.cutoff_degree,
            inline_betti(&cmp.hi),
            join_degrees(&cmp.differing_degrees)
        );
        if let Some(v) = &row.verification {
            let _ = write!(line, "; verification = {}", short_verification(v));
        }
        let _ = writeln!(out, "{}", line);
    }
    out
}

#[derive(Serialize)]
struct SpaceReportDoc {
    space: &'static str,
    link_dim: usize,
    perversity: String,
    cutoff_degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ih: Option<BettiTableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordinary: Option<BettiTableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hi: Option<BettiTableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    differing_degrees: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<String>,
}

fn cone_doc(link_dim: usize, row: &SpaceRow, theory: Theory) -> SpaceReportDoc {
    let cmp = &row.cmp;
    SpaceReportDoc {
        space: "open cone",
        link_dim,
        perversity: cmp.perversity.clone(),
        cutoff_degree: cmp.cutoff_degree,
        ih: if show_ih(theory) {
            cmp.ih.as_ref().map(betti_doc)
        } else {
            None
        },
        ordinary: None,
        hi: if show_hi(theory) {
            Some(betti_doc(&cmp.hi))
        } else {
            None
        },
        differing_degrees: if matches!(theory, Theory::Both) {
            Some(cmp.differing_degrees.clone())
        } else {
            None
        },
        verification: row.verification.clone(),
    }
}

fn suspension_doc(link_dim: usize, row: &SpaceRow) -> SpaceReportDoc {
    let cmp = &row.cmp;
    SpaceReportDoc {
        space: "suspension",
        link_dim,
        perversity: cmp.perversity.clone(),
        cutoff_degree: cmp.cutoff_degree,
        ih: None,
        ordinary: cmp.ordinary.as_ref().map(betti_doc),
        hi: Some(betti_doc(&cmp.hi)),
        differing_degrees: Some(cmp.differing_degrees.clone()),
        verification: row.verification.clone(),
    }
}

#[derive(Serialize)]
struct SweepDoc {
    space: &'static str,
    link_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordinary: Option<BettiTableDocument>,
    rows: Vec<SpaceReportDoc>,
}

fn cone_sweep_doc(link_dim: usize, rows: &[SpaceRow], theory: Theory) -> SweepDoc {
    SweepDoc {
        space: "open cone",
        link_dim,
        ordinary: None,
        rows: rows.iter().map(|r| cone_doc(link_dim, r, theory)).collect(),
    }
}

fn suspension_sweep_doc(link_dim: usize, rows: &[SpaceRow]) -> SweepDoc {
    SweepDoc {
        space: "suspension",
        link_dim,
        ordinary: rows
            .first()
            .and_then(|r| r.cmp.ordinary.as_ref())
            .map(betti_doc),
        rows: rows.iter().map(|r| suspension_doc(link_dim, r)).collect(),
    }
}

fn evaluate_sweep(
    spec: &SpaceSpec,
    complex: Option<&SimplicialComplex>,
    validation: &LinkValidation,
    verify: bool,
) -> Result<Vec<SpaceRow>, CliError> {
    let mut rows = Vec::new();
    for p in sweep_grid(validation.link_dim) {
        rows.push(evaluate_row(
            spec,
            complex,
            validation.connected,
            &p,
            verify,
        )?);
    }
    Ok(rows)
}

fn cone(args: &ConeArgs) -> Result<CmdOutput, CliError> {
    let link = load_link(&args.file)?;
    let validation = validate_link(&link.model, false).map_err(input_error)?;
    let spec = SpaceSpec::Cone(ConeSpaceSpec {
        link: link.model.clone(),
        simply_connected_asserted: false,
    });
    if args.sweep_perversities {
        let rows = evaluate_sweep(&spec, link.complex.as_ref(), &validation, args.verify)?;
        let warnings = rows
            .first()
            .map(|r| r.cmp.warnings.clone())
            .unwrap_or_default();
        let stdout = match args.format {
            Format::Table => render_cone_sweep(validation.link_dim, &rows, args.theory),
            Format::Json => to_json(&cone_sweep_doc(validation.link_dim, &rows, args.theory)),
        };
        return Ok(CmdOutput::with_warnings(stdout, warnings));
    }
    let p_text = args.perversity.as_deref().ok_or_else(|| {
        CliError::Input(String::from(
            "pass --perversity <P> or --sweep-perversities",
        ))
    })?;
    let p = parse_perversity(p_text, args.extended).map_err(input_error)?;
    let row = evaluate_row(
        &spec,
        link.complex.as_ref(),
        validation.connected,
        &p,
        args.verify,
    )?;
    let warnings = row.cmp.warnings.clone();
    let stdout = match args.format {
        Format::Table => render_cone_table(validation.link_dim, &row, args.theory, args.dense),
        Format::Json => to_json(&cone_doc(validation.link_dim, &row, args.theory)),
    };
    Ok(CmdOutput::with_warnings(stdout, warnings))
}

fn suspension(args: &SuspensionArgs) -> Result<CmdOutput, CliError> {
    let link = load_link(&args.file)?;
    let validation = validate_link(&link.model, false).map_err(input_error)?;
    let spec = SpaceSpec::Suspension(SuspensionSpaceSpec {
        link: link.model.clone(),
        simply_connected_asserted: false,
    });
    if args.sweep_perversities {
        let rows = evaluate_sweep(&spec, link.complex.as_ref(), &validation, args.verify)?;
        let warnings = rows
            .first()
            .map(|r| r.cmp.warnings.clone())
            .unwrap_or_default();
        let stdout = match args.format {
            Format::Table => render_suspension_sweep(validation.link_dim, &rows),
            Format::Json => to_json(&suspension_sweep_doc(validation.link_dim, &rows)),
        };
        return Ok(CmdOutput::with_warnings(stdout, warnings));
    }
    let p_text = args.perversity.as_deref().ok_or_else(|| {
        CliError::Input(String::from(
            "pass --perversity <P> or --sweep-perversities",
        ))
    })?;
    let p = parse_perversity(p_text, args.extended).map_err(input_error)?;
    let row = evaluate_row(
        &spec,
        link.complex.as_ref(),
        validation.connected,
        &p,
        args.verify,
    )?;
    let warnings = row.cmp.warnings.clone();
    let stdout = match args.format {
        Format::Table => render_suspension_table(validation.link_dim, &row, args.dense),
        Format::Json => to_json(&suspension_doc(validation.link_dim, &row)),
    };
    Ok(CmdOutput::with_warnings(stdout, warnings))
}

#[derive(Serialize)]
struct ExampleDoc {
    name: String,
    kind: String,
    link: String,
    link_dim: usize,
    link_betti: BettiTableDocument,
    perversity: String,
    cutoff_degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ih: Option<BettiTableDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ordinary: Option<BettiTableDocument>,
    hi: BettiTableDocument,
    differing_degrees: Vec<i64>,
    provenance: Vec<String>,
    notes: Vec<String>,
}

fn example_doc(report: &ExampleReport) -> ExampleDoc {
    ExampleDoc {
        name: report.name.clone(),
        kind: report.kind.to_string(),
        link: String::from(report.link_name),
        link_dim: report.link_dim,
        link_betti: betti_doc(&report.link_betti),
        perversity: report.perversity.clone(),
        cutoff_degree: report.cutoff_degree,
        ih: report.ih.as_ref().map(betti_doc),
        ordinary: report.ordinary.as_ref().map(betti_doc),
        hi: betti_doc(&report.hi),
        differing_degrees: report.differing_degrees.clone(),
        provenance: report.provenance.clone(),
        notes: report.notes.clone(),
    }
}

fn render_example_table(report: &ExampleReport) -> String {
    let mut out = String::new();
    let connective = match report.kind {
        SpaceKind::Cone => "over",
        SpaceKind::Suspension => "of",
    };
    let _ = writeln!(
        out,
        "{}: {} {} {} (link dimension {})",
        report.name, report.kind, connective, report.link_name, report.link_dim
    );
    let _ = writeln!(out, "perversity: {}", report.perversity);
    let _ = writeln!(out, "cutoff degree: {}", report.cutoff_degree);
    out.push_str("link reduced Betti numbers:\n");
    push_betti_lines(&mut out, &report.link_betti, false);
    if let Some(ih) = &report.ih {
        out.push_str("IH:\n");
        push_betti_lines(&mut out, ih, false);
    }
    out.push_str("HI:\n");
    push_betti_lines(&mut out, &report.hi, false);
    if let Some(ordinary) = &report.ordinary {
        out.push_str("ordinary homology of the suspension:\n");
        push_betti_lines(&mut out, ordinary, false);
        let _ = writeln!(
            out,
            "HI differs from ordinary homology at: {}",
            join_degrees(&report.differing_degrees)
        );
    } else {
        let _ = writeln!(
            out,
            "theories differ at: {}",
            join_degrees(&report.differing_degrees)
        );
    }
    if !report.provenance.is_empty() {
        out.push_str("provenance:\n");
        for line in &report.provenance {
            let _ = writeln!(out, "  - {}", line);
        }
    }
    if !report.notes.is_empty() {
        out.push_str("notes:\n");
        for line in &report.notes {
            let _ = writeln!(out, "  - {}", line);
        }
    }
    out
}

fn example(args: &ExampleArgs) -> Result<CmdOutput, CliError> {
    let p = parse_perversity(&args.perversity, args.extended).map_err(input_error)?;
    let report = catalog::run_example(&args.name, &p).map_err(input_error)?;
    let warnings = report.warnings.clone();
    let stdout = match args.format {
        Format::Table => render_example_table(&report),
        Format::Json => to_json(&example_doc(&report)),
    };
    Ok(CmdOutput::with_warnings(stdout, warnings))
}

fn mv(args: &MvArgs) -> Result<CmdOutput, CliError> {
    let text = read_file(&args.file)?;
    let doc = MVDocument::parse(&text).map_err(input_error)?;
    let problem = doc.to_problem().map_err(input_error)?;
    match mayer_vietoris(&problem) {
        MVOutcome::Solved { union, audit } => {
            if !audit.exactness_verified || !audit.euler_identity_verified {
                return Err(CliError::Inconsistent(String::from(
                    "solver audit failed: the assembled union does not replay through the exact sequence",
                )));
            }
            match args.format {
                Format::Table => {
                    let mut out = String::new();
                    out.push_str("Mayer-Vietoris union: solved\n");
                    out.push_str("reduced Betti numbers of the union:\n");
                    push_betti_lines(&mut out, &union, false);
                    out.push_str("audit: exact sequence replayed; Euler identity holds\n");
                    Ok(CmdOutput::new(out))
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct AuditDoc {
                        exactness_verified: bool,
                        euler_identity_verified: bool,
                    }
                    #[derive(Serialize)]
                    struct MvSolvedDoc {
                        status: &'static str,
                        union: BettiTableDocument,
                        audit: AuditDoc,
                    }
                    Ok(CmdOutput::new(to_json(&MvSolvedDoc {
                        status: "solved",
                        union: betti_doc(&union),
                        audit: AuditDoc {
                            exactness_verified: audit.exactness_verified,
                            euler_identity_verified: audit.euler_identity_verified,
                        },
                    })))
                }
            }
        }
        MVOutcome::Underdetermined { missing_degrees } => match args.format {
            Format::Table => {
                let mut out = String::new();
                out.push_str("Mayer-Vietoris union: UNDERDETERMINED\n");
                let _ = writeln!(
                    out,
                    "missing intersection-map ranks at degrees: {}",
                    join_degrees(&missing_degrees)
                );
                out.push_str("supply those ranks in the document's \"ranks\" object to pin the union\n");
                Ok(CmdOutput::new(out))
            }
            Format::Json => {
                #[derive(Serialize)]
                struct MvOpenDoc {
                    status: &'static str,
                    missing_degrees: Vec<i64>,
                }
                Ok(CmdOutput::new(to_json(&MvOpenDoc {
                    status: "underdetermined",
                    missing_degrees,
                })))
            }
        },
        MVOutcome::Inconsistent(inc) => Err(CliError::Inconsistent(inc.to_string())),
    }
}

fn les_term_label(spec: &ExactSequenceSpec, index: usize) -> String {
    match &spec.terms[index] {
        DimSlot::Known(_) => format!("#{}", index),
        DimSlot::Unknown(name) => format!("#{} ({})", index, name),
    }
}

fn les(args: &LesArgs) -> Result<CmdOutput, CliError> {
    let text = read_file(&args.file)?;
    let spec = parse_les(&text).map_err(input_error)?;
    let outcome = solve_exact(&spec).map_err(input_error)?;
    match outcome {
        SolveOutcome::Solved {
            term_dims,
            arrow_ranks,
            symbols,
        } => match args.format {
            Format::Table => {
                let mut out = String::new();
                out.push_str("exact sequence: solved\n");
                out.push_str("terms:\n");
                for (i, d) in term_dims.iter().enumerate() {
                    let _ = writeln!(out, "  {} = {}", les_term_label(&spec, i), d);
                }
                out.push_str("arrow ranks:\n");
                for (i, r) in arrow_ranks.iter().enumerate() {
                    let tag = if spec.arrows[i].connecting {
                        " (connecting)"
                    } else {
                        ""
                    };
                    let _ = writeln!(out, "  #{} -> #{}: {}{}", i, i + 1, r, tag);
                }
                if !symbols.is_empty() {
                    out.push_str("symbols:\n");
                    for (name, value) in &symbols {
                        let _ = writeln!(out, "  {} = {}", name, value);
                    }
                }
                Ok(CmdOutput::new(out))
            }
            Format::Json => {
                #[derive(Serialize)]
                struct LesSolvedDoc {
                    status: &'static str,
                    term_dims: Vec<usize>,
                    arrow_ranks: Vec<usize>,
                    symbols: BTreeMap<String, usize>,
                }
                Ok(CmdOutput::new(to_json(&LesSolvedDoc {
                    status: "solved",
                    term_dims,
                    arrow_ranks,
                    symbols,
                })))
            }
        },
        SolveOutcome::Underdetermined {
            term_dims,
            arrow_ranks,
            residual_constraints,
        } => match args.format {
            Format::Table => {
                let mut out = String::new();
                out.push_str("exact sequence: UNDERDETERMINED\n");
                out.push_str("terms:\n");
                for (i, d) in term_dims.iter().enumerate() {
                    let shown = match d {
                        Some(v) => v.to_string(),
                        None => String::from("?"),
                    };
                    let _ = writeln!(out, "  {} = {}", les_term_label(&spec, i), shown);
                }
                out.push_str("arrow ranks:\n");
                for (i, r) in arrow_ranks.iter().enumerate() {
                    let shown = match r {
                        Some(v) => v.to_string(),
                        None => String::from("?"),
                    };
                    let tag = if spec.arrows[i].connecting {
                        " (connecting)"
                    } else {
                        ""
                    };
                    let _ = writeln!(out, "  #{} -> #{}: {}{}", i, i + 1, shown, tag);
                }
                if !residual_constraints.is_empty() {
                    out.push_str("residual constraints:\n");
                    for c in &residual_constraints {
                        let _ = writeln!(out, "  {}", c);
                    }
                }
                Ok(CmdOutput::new(out))
            }
            Format::Json => {
                #[derive(Serialize)]
                struct LesOpenDoc {
                    status: &'static str,
                    term_dims: Vec<Option<usize>>,
                    arrow_ranks: Vec<Option<usize>>,
                    residual_constraints: Vec<String>,
                }
                Ok(CmdOutput::new(to_json(&LesOpenDoc {
                    status: "underdetermined",
                    term_dims,
                    arrow_ranks,
                    residual_constraints,
                })))
            }
        },
        SolveOutcome::Inconsistent(inc) => Err(CliError::Inconsistent(inc.to_string())),
    }
}

fn model_summary(model: &CatalogModel) -> String {
    match model {
        CatalogModel::Complex(c) => match c.dimension() {
            Some(d) => format!("simplicial complex of dimension {}", d),
            None => String::from("empty simplicial complex"),
        },
        CatalogModel::Betti { dim, .. } => format!("Betti table of dimension {}", dim),
        CatalogModel::Cone { link } => format!("open cone over {}", link),
        CatalogModel::Suspension { link } => format!("suspension of {}", link),
    }
}

fn entry_intrinsic_betti(entry: &CatalogEntry) -> Option<(GradedBetti, i64)> {
    match &entry.model {
        CatalogModel::Complex(c) => {
            let dim = c.dimension().map(|d| d as i64).unwrap_or(-1);
            Some((c.betti(), dim))
        }
        CatalogModel::Betti { betti, dim } => Some((betti.clone(), *dim as i64)),
        _ => None,
    }
}

fn render_entry_table(entry: &CatalogEntry) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", entry.name);
    let _ = writeln!(out, "  model: {}", model_summary(&entry.model));
    let _ = writeln!(
        out,
        "  simply connected: {}",
        if entry.simply_connected { "yes" } else { "no" }
    );
    match entry_intrinsic_betti(entry) {
        Some((betti, _)) => {
            out.push_str("  reduced Betti numbers:\n");
            if betti.is_empty() {
                out.push_str("    (none)\n");
            } else {
                for (d, r) in betti.iter() {
                    let _ = writeln!(out, "    {}: {}", d, r);
                }
            }
        }
        None => {
            let _ = writeln!(
                out,
                "  invariants: run `strata example {} <perversity>`",
                entry.name
            );
        }
    }
    let _ = writeln!(out, "  provenance: {}", entry.provenance);
    if !entry.notes.is_empty() {
        let _ = writeln!(out, "  notes: {}", entry.notes);
    }
    out
}

#[derive(Serialize)]
struct CatalogEntryDoc {
    name: &'static str,
    model: String,
    simply_connected: bool,
    provenance: &'static str,
    notes: &'static str,
}

fn catalog_command(args: &CatalogArgs) -> Result<CmdOutput, CliError> {
    match &args.name {
        None => {
            let entries = catalog::builtin();
            match args.format {
                Format::Table => {
                    let mut out = String::new();
                    out.push_str("catalog entries:\n");
                    for e in &entries {
                        let _ = writeln!(out, "  {}: {}", e.name, model_summary(&e.model));
                    }
                    out.push_str(
                        "run `strata catalog <name>` for details, or `strata example <name> <perversity>` on cones and suspensions\n",
                    );
                    Ok(CmdOutput::new(out))
                }
                Format::Json => {
                    let docs: Vec<CatalogEntryDoc> = entries
                        .iter()
                        .map(|e| CatalogEntryDoc {
                            name: e.name,
                            model: model_summary(&e.model),
                            simply_connected: e.simply_connected,
                            provenance: e.provenance,
                            notes: e.notes,
                        })
                        .collect();
                    Ok(CmdOutput::new(to_json(&docs)))
                }
            }
        }
        Some(name) => {
            let entry = catalog::get(name).map_err(input_error)?;
            match args.format {
                Format::Table => Ok(CmdOutput::new(render_entry_table(&entry))),
                Format::Json => match entry_intrinsic_betti(&entry) {
                    Some((betti, dim)) => {
                        let mut doc = betti_doc(&betti);
                        doc.dim = dim;
                        Ok(CmdOutput::new(to_json(&doc)))
                    }
                    None => Err(CliError::Input(format!(
                        "{} is a cone or suspension with no intrinsic Betti table; run `strata example {} <perversity>`",
                        name, name
                    ))),
                },
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lower_middle() -> Perversity {
        Perversity::LowerMiddle
    }

    #[test]
    fn inline_helpers_render_empty_markers() {
        assert_eq!(join_degrees(&[]), "(none)");
        assert_eq!(join_degrees(&[4, 5, 9]), "4, 5, 9");
        assert_eq!(inline_betti(&GradedBetti::new(3)), "(none)");
    }

    #[test]
    fn sweep_grid_covers_families_and_constants() {
        let grid = sweep_grid(9);
        assert_eq!(grid.len(), 4 + 13);
        let grid = sweep_grid(1);
        assert_eq!(grid.len(), 4 + 5);
    }

    #[test]
    fn example_table_reports_both_theories() {
        let report = catalog::run_example("su3-universal-implosion", &lower_middle()).unwrap();
        let table = render_example_table(&report);
        assert!(table.contains("open cone over Y (link dimension 9)"));
        assert!(table.contains("cutoff degree: 5"));
        assert!(table.contains("IH:\n  4: 1\n"));
        assert!(table.contains("HI:\n  5: 1\n  9: 1\n"));
        assert!(table.contains("theories differ at: 4, 5, 9"));
    }

    #[test]
    fn example_doc_round_trips_tables() {
        let report = catalog::run_example("qh-su2-double", &lower_middle()).unwrap();
        let doc = example_doc(&report);
        assert_eq!(doc.kind, "suspension");
        assert_eq!(doc.hi.betti.get("3"), Some(&1));
        let ordinary = doc.ordinary.expect("suspension reports carry the ordinary table");
        assert_eq!(ordinary.betti.get("4"), Some(&1));
    }

    #[test]
    fn dense_rendering_fills_gaps() {
        let betti = GradedBetti::from_pairs(&[(2, 1)], 3);
        let mut out = String::new();
        push_betti_lines(&mut out, &betti, true);
        assert_eq!(out, "  0: 0\n  1: 0\n  2: 1\n  3: 0\n");
    }

    #[test]
    fn catalog_summaries_name_the_construction() {
        let entry = catalog::get("su3-universal-implosion").unwrap();
        assert_eq!(model_summary(&entry.model), "open cone over Y");
        let entry = catalog::get("qh-su2-double").unwrap();
        assert_eq!(model_summary(&entry.model), "suspension of su2");
    }
}
