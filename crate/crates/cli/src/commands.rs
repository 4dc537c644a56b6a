//! Implementations of the CLI commands, independent of argument parsing so
//! the tests can drive them on in-memory sources.

use std::fmt::Write as _;

use num::rational::BigRational;

use ncalg::bettienum::{enumerate, group_by_series};
use ncalg::complexcheck::FreeComplex;
use ncalg::diamond::RewriteSystem;
use ncalg::hilbert::{
    normal_word_count, normal_word_count_bigraded, recognize_product_form, HilbertFunction,
};
use ncalg::liealg::{
    ce_complex, delta_form, lie_betti, lie_from_presentation, wedge_bracket_rank,
    GradedLieAlgebra, Side,
};
use ncalg::Error as CoreError;

use crate::parse::{
    emit_complex, parse_algebra_str, parse_complex_str, parse_lie_str, AlgebraSpec, ParseDiag,
};
use crate::report::RunReport;

/// Failure modes of a command, mapped to exit codes by `main`: input
/// problems exit 2, failed checks exit 1.
#[derive(Debug)]
pub enum CliError {
    Parse { path: String, diag: ParseDiag },
    Io { path: String, err: String },
    Core(CoreError),
    Usage(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { path, diag } => write!(f, "{path}: {diag}"),
            CliError::Io { path, err } => write!(f, "{path}: {err}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

pub struct CommandOutput {
    pub stdout: String,
    pub tsv: String,
    pub failed: bool,
}

impl CommandOutput {
    fn ok(stdout: String, tsv: String) -> Self {
        CommandOutput { stdout, tsv, failed: false }
    }
}

fn parse_algebra(path: &str, src: &str) -> Result<AlgebraSpec, CliError> {
    parse_algebra_str(src).map_err(|diag| CliError::Parse { path: path.to_string(), diag })
}

fn required_cap(file_cap: Option<u32>, flag_cap: Option<u32>) -> Result<u32, CliError> {
    flag_cap
        .or(file_cap)
        .ok_or_else(|| CliError::Usage("no cap given: add a `cap` line or pass --cap".into()))
}

/// Builds the certified rewrite system of an algebra file.
pub fn build_system(
    spec: &AlgebraSpec,
    flag_cap: Option<u32>,
    flag_order: Option<&str>,
) -> Result<RewriteSystem, CliError> {
    let cap = required_cap(spec.cap, flag_cap)?;
    let order = match flag_order {
        Some(src) => crate::parse::parse_order_flag(src, &spec.gens)
            .map_err(|diag| CliError::Parse { path: "--order".into(), diag })?,
        None => spec.order.clone(),
    };
    if spec.relations.is_empty() {
        return Ok(RewriteSystem::free(&spec.gens, order, cap));
    }
    Ok(RewriteSystem::complete(&spec.relations, &order, cap)?)
}

pub fn cmd_complete(
    path: &str,
    src: &str,
    flag_cap: Option<u32>,
    flag_order: Option<&str>,
) -> Result<CommandOutput, CliError> {
    let spec = parse_algebra(path, src)?;
    let s = build_system(&spec, flag_cap, flag_order)?;
    let mut out = String::new();
    let mut tsv = String::new();
    for rule in s.rules() {
        let lead = rule.lead().display(s.gens());
        let _ = writeln!(out, "{lead} -> {}", rule.tail());
        let _ = writeln!(tsv, "{lead}\t{}", rule.tail());
    }
    let _ = writeln!(
        out,
        "confluent-upto {} ambiguities {}",
        s.degree_cap(),
        s.ambiguities_checked()
    );
    let _ = writeln!(tsv, "confluent-upto\t{}\tambiguities\t{}", s.degree_cap(), s.ambiguities_checked());
    Ok(CommandOutput::ok(out, tsv))
}

fn product_form_line(h: &HilbertFunction) -> String {
    match recognize_product_form(h) {
        Some(ns) => {
            let parts: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
            format!("product-form: {}", parts.join(","))
        }
        None => "product-form: none-within-cap".to_string(),
    }
}

pub fn cmd_hilbert(
    path: &str,
    src: &str,
    flag_cap: Option<u32>,
    flag_order: Option<&str>,
    bigraded: bool,
) -> Result<CommandOutput, CliError> {
    let spec = parse_algebra(path, src)?;
    let s = build_system(&spec, flag_cap, flag_order)?;
    let cap = s.degree_cap();
    let mut out = String::new();
    if bigraded {
        let counts = normal_word_count_bigraded(&s, cap)?;
        for (&(a, b), c) in counts.entries() {
            let _ = writeln!(out, "{a}\t{b}\t{c}");
        }
        out.push_str(&product_form_line(&counts.totalize()));
        out.push('\n');
    } else {
        let counts = normal_word_count(&s, cap)?;
        for d in 0..=cap {
            let _ = writeln!(out, "{d}\t{}", counts.coeff(d));
        }
        out.push_str(&product_form_line(&counts));
        out.push('\n');
    }
    let tsv = out.clone();
    Ok(CommandOutput::ok(out, tsv))
}

pub fn cmd_check_complex(
    alg_path: &str,
    alg_src: &str,
    cpx_path: &str,
    cpx_src: &str,
    flag_cap: Option<u32>,
) -> Result<CommandOutput, CliError> {
    let spec = parse_algebra(alg_path, alg_src)?;
    let s = build_system(&spec, flag_cap, None)?;
    let complex = parse_complex_str(cpx_src, &spec.gens)
        .map_err(|diag| CliError::Parse { path: cpx_path.to_string(), diag })?;
    let cap = s.degree_cap();

    let mut report = RunReport::new("check-complex");
    report.digest(alg_path, alg_src);
    report.digest(cpx_path, cpx_src);
    report.cap("checks", cap);

    let violations = complex.check_homogeneous();
    report.check(
        "homogeneous",
        violations.is_empty(),
        violations
            .first()
            .map(|v| format!("map {} entry ({}, {}): {}", v.map, v.row, v.col, v.detail))
            .unwrap_or_default(),
    );

    let composites = complex.compose_zero(&s)?;
    report.check(
        "compose-zero",
        composites.is_empty(),
        composites
            .first()
            .map(|c| {
                format!(
                    "map {} * map {} entry ({}, {}) = {}",
                    c.p,
                    c.p + 1,
                    c.row,
                    c.col,
                    c.normal_form
                )
            })
            .unwrap_or_default(),
    );

    report.check("minimal", complex.check_minimal(), "an entry has a constant term");

    let counts = normal_word_count(&s, cap)?;
    match complex.euler_check(&counts) {
        Ok(ok) => report.check("euler", ok, "alternating shift sum times the series is not 1"),
        Err(e) => report.fail("euler", e.to_string()),
    }

    let mut tsv = String::new();
    if violations.is_empty() {
        let h = complex.graded_homology(&s, cap)?;
        let expected = h.is_field_at_origin();
        report.check(
            "homology-is-residue-field",
            expected,
            format!("nonzero entries beyond (0,0): {:?}", h.nonzero()),
        );
        for (p, j, d) in h.nonzero() {
            let _ = writeln!(tsv, "{p}\t{j}\t{d}");
        }
    } else {
        report.fail("homology-is-residue-field", "skipped: complex is not homogeneous");
    }

    let failed = !report.all_pass();
    let mut stdout = report.render();
    stdout.push_str(&tsv);
    Ok(CommandOutput { stdout, tsv, failed })
}

fn lie_algebra_from(
    path: &str,
    src: &str,
    flag_cap: Option<u32>,
) -> Result<(GradedLieAlgebra, u32), CliError> {
    let spec =
        parse_lie_str(src).map_err(|diag| CliError::Parse { path: path.to_string(), diag })?;
    let cap = required_cap(spec.cap, flag_cap)?;
    let g = lie_from_presentation(&spec.gens, &spec.relators, spec.truncate, cap)?;
    Ok((g, cap))
}

pub fn cmd_lie_betti(path: &str, src: &str, flag_cap: Option<u32>) -> Result<CommandOutput, CliError> {
    let (g, _) = lie_algebra_from(path, src, flag_cap)?;
    let b = lie_betti(&g);
    let mut out = String::new();
    for (&(p, j), &m) in b.entries() {
        let _ = writeln!(out, "{p}\t{j}\t{m}");
    }
    let tsv = out.clone();
    Ok(CommandOutput::ok(out, tsv))
}

pub fn cmd_lie_pbw(path: &str, src: &str, flag_cap: Option<u32>) -> Result<CommandOutput, CliError> {
    let (g, cap) = lie_algebra_from(path, src, flag_cap)?;
    let series = g.pbw_series();
    let h = series.expand(cap);
    let mut out = String::new();
    let _ = writeln!(out, "# hilbert function {:?}", g.hilbert_function());
    let _ = writeln!(out, "# series {series}");
    let mut tsv = String::new();
    for d in 0..=cap {
        let _ = writeln!(tsv, "{d}\t{}", h.coeff(d));
    }
    out.push_str(&tsv);
    Ok(CommandOutput::ok(out, tsv))
}

pub fn cmd_lie_delta(path: &str, src: &str, flag_cap: Option<u32>) -> Result<CommandOutput, CliError> {
    let (g, _) = lie_algebra_from(path, src, flag_cap)?;
    let d = delta_form(&g);
    let mut out = String::new();
    if d.is_zero() {
        let _ = writeln!(out, "delta-form\t0");
    } else {
        for (tuple, c) in d.terms() {
            let names: Vec<&str> = tuple.iter().map(|&i| g.name(i)).collect();
            let _ = writeln!(out, "delta-form\t{c}\t{}", names.join("^"));
        }
    }
    let tsv = out.clone();
    Ok(CommandOutput::ok(out, tsv))
}

pub fn cmd_lie_ce(
    path: &str,
    src: &str,
    flag_cap: Option<u32>,
    side: Side,
) -> Result<CommandOutput, CliError> {
    let (g, _) = lie_algebra_from(path, src, flag_cap)?;
    let c: FreeComplex = ce_complex(&g, side)?;
    let text = emit_complex(&c);
    Ok(CommandOutput::ok(text.clone(), text))
}

/// Exploration: scan antisymmetric bracket forms on four degree-one
/// generators with a single degree-two target and report the rank of the
/// deciding differential slice. Entries of the form range over the given
/// values.
pub fn cmd_lie_rank_scan(values: &[i64]) -> Result<CommandOutput, CliError> {
    let names = ["x", "y", "z", "w", "e"];
    let pairs = [(0usize, 1usize), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut histogram: std::collections::BTreeMap<usize, u64> = std::collections::BTreeMap::new();
    let mut assignment = vec![0usize; pairs.len()];
    let total = values.len().pow(pairs.len() as u32);
    for idx in 0..total {
        let mut rem = idx;
        for slot in assignment.iter_mut() {
            *slot = rem % values.len();
            rem /= values.len();
        }
        let mut brackets = std::collections::BTreeMap::new();
        let mut any = false;
        for (p, &(i, j)) in pairs.iter().enumerate() {
            let v = values[assignment[p]];
            if v != 0 {
                any = true;
                brackets.insert((i, j), vec![(4usize, BigRational::from_integer(v.into()))]);
            }
        }
        if !any {
            continue; // degree two would not be generated
        }
        let g = GradedLieAlgebra::new(
            names.iter().map(|s| s.to_string()).collect(),
            vec![1, 1, 1, 1, 2],
            brackets,
        )?;
        debug_assert_eq!(g.check_jacobi(), Ok(()));
        let rank = wedge_bracket_rank(&g, 3, 3);
        *histogram.entry(rank).or_insert(0) += 1;
    }
    let mut out = String::new();
    for (rank, count) in &histogram {
        let _ = writeln!(out, "{rank}\t{count}");
    }
    let tsv = out.clone();
    Ok(CommandOutput::ok(out, tsv))
}

pub fn cmd_enumerate(n_max: usize, l_max: u32, cap: u32) -> Result<CommandOutput, CliError> {
    let types = enumerate(n_max, l_max, cap);
    let groups = group_by_series(&types);
    let group_of = |t: &ncalg::bettienum::BettiType| -> usize {
        groups
            .iter()
            .position(|g| g.members.contains(t))
            .map(|i| i + 1)
            .unwrap_or(0)
    };
    let mut out = String::new();
    for t in &types {
        let a: Vec<String> = t.a().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            t.n(),
            a.join(","),
            t.l(),
            group_of(t),
            t.existence()
        );
    }
    let tsv = out.clone();
    Ok(CommandOutput::ok(out, tsv))
}

pub fn cmd_verify_paper() -> Result<CommandOutput, CliError> {
    let report = crate::verify::run_all()?;
    let failed = !report.all_pass();
    let stdout = report.render();
    let tsv = report.tsv.clone();
    Ok(CommandOutput { stdout, tsv, failed })
}
