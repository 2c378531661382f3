//! Subcommands. Each returns an [`Outcome`]; nothing is printed here.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use colorhom::algebra::{Bilinear, LieModule};
use colorhom::cohomology::{cohomology_table, verify_main_theorem, CochainComplex, CohomologyTable};
use colorhom::glinalg::GradedSpace;
use colorhom::variety::{scan_family, DEFAULT_GRID_CAP};
use colorhom::{CycLieAlgebra, CycScalar};

use crate::problem::{parse_spec, Claim, Problem, Structure};
use crate::report::{self, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "colorhom",
    version,
    about = "Exact cohomology of left-symmetric color algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the bicharacter, the algebra identity and the coefficients.
    Validate { file: PathBuf },
    /// Print the commutator algebra and check the Lie color identities.
    Commutator {
        file: PathBuf,
        #[arg(long)]
        force: bool,
    },
    /// Tabulate cochain, cocycle, coboundary and cohomology dimensions.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        max_n: Option<usize>,
        /// natural, trivial or explicit; defaults to the file's choice.
        #[arg(long)]
        module: Option<String>,
        /// Also write the machine report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Compare H^(n+1)(A,V) with H^n([A],Hom(A,V)) for every level 1..=n.
    VerifyTheorem {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        module: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Evaluate the left-symmetric identity over a parameter grid (CSV).
    Scan {
        #[arg(long)]
        family: PathBuf,
    },
    /// Invariants H^0 by degree.
    H0 {
        file: PathBuf,
        #[arg(long)]
        module: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: message.into() + "\n",
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command),
        Err(e) if !e.use_stderr() => Outcome {
            code: EXIT_OK,
            stdout: e.to_string(),
            stderr: String::new(),
        },
        Err(e) => Outcome::input(e.to_string().trim_end()),
    }
}

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Validate { file } => with_problem(file, validate),
        Command::Commutator { file, force } => with_problem(file, |p| commutator(p, *force)),
        Command::Cohomology {
            file,
            max_n,
            module,
            json,
            force,
        } => with_problem(file, |p| {
            cohomology(p, *max_n, module.as_deref(), json.as_deref(), *force)
        }),
        Command::VerifyTheorem {
            file,
            n,
            module,
            json,
            force,
        } => with_problem(file, |p| verify(p, *n, module.as_deref(), json.as_deref(), *force)),
        Command::Scan { family } => with_problem(family, scan),
        Command::H0 { file, module } => with_problem(file, |p| h0(p, module.as_deref())),
    }
}

fn with_problem(path: &Path, f: impl FnOnce(&Problem) -> Outcome) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::input(format!("cannot read {}: {e}", path.display())),
    };
    match parse_spec(&text) {
        Ok(p) => f(&p),
        Err(errors) => {
            let lines: Vec<String> = errors.iter().map(|e| format!("schema error at {e}")).collect();
            Outcome::input(lines.join("\n"))
        }
    }
}

fn name(p: &Problem) -> String {
    p.spec.name.clone().unwrap_or_else(|| "unnamed algebra".into())
}

fn validate(p: &Problem) -> Outcome {
    let mut out = format!("{}: {}-dimensional over {}\n", name(p), p.space.dim(), p.group);
    let mut failures = 0;
    if let Some(w) = eps_warning(p) {
        out += &format!("warning: {w}\n");
    }
    match &p.structure {
        Structure::LeftSymmetric(a) => {
            let bad = a.left_symmetric_violations();
            report_violations(
                &mut out,
                "left-symmetric identity",
                bad.iter().map(|v| v.describe(a.space())),
            );
            failures += bad.len();
            if a.left_mult_nilpotent() {
                out += "every left multiplication is nilpotent\n";
            }
            match p.module(None) {
                Ok(v) => {
                    let bad = v.violations(a);
                    report_violations(&mut out, "bimodule axioms", bad.iter().map(|x| x.describe(v.space())));
                    failures += bad.len();
                }
                Err(e) => return Outcome::input(format!("schema error at {e}")),
            }
        }
        Structure::Lie(l) => {
            let bad = l.lie_violations();
            report_violations(
                &mut out,
                "Lie color identities",
                bad.iter().map(|v| v.describe(l.space())),
            );
            failures += bad.len();
        }
    }
    Outcome {
        code: if failures == 0 { EXIT_OK } else { EXIT_CHECK },
        stdout: out,
        stderr: String::new(),
    }
}

fn eps_warning(p: &Problem) -> Option<String> {
    let w = p.eps.warnings();
    let first = w.first()?;
    Some(format!(
        "bicharacter table is not biadditive ({} failures): {first}",
        w.len()
    ))
}

fn report_violations(out: &mut String, what: &str, items: impl Iterator<Item = String>) {
    let items: Vec<String> = items.collect();
    if items.is_empty() {
        *out += &format!("{what}: ok\n");
    } else {
        *out += &format!("{what}: {} violation(s)\n", items.len());
        for i in items {
            *out += &format!("  {i}\n");
        }
    }
}

fn nonzero_table(l: &CycLieAlgebra) -> String {
    let s = l.space();
    let mut rows = Vec::new();
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let v = l.bracket_basis(i, j);
            if v.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                rows.push(vec![
                    format!("[{},{}]", s.label(i), s.label(j)),
                    colorhom::algebra::format_vector(s, v),
                ]);
            }
        }
    }
    if rows.is_empty() {
        return "all brackets vanish\n".into();
    }
    report::aligned(&["bracket", "value"], &rows)
}

fn commutator(p: &Problem, force: bool) -> Outcome {
    let l = match &p.structure {
        Structure::Lie(l) => l.clone(),
        Structure::LeftSymmetric(a) => match a.commutator_algebra(force || p.spec.options.force) {
            Ok(l) => l,
            Err(e) => {
                return Outcome {
                    code: EXIT_CHECK,
                    stdout: String::new(),
                    stderr: format!("{e}\n"),
                }
            }
        },
    };
    let mut out = nonzero_table(&l);
    let bad = l.lie_violations();
    report_violations(
        &mut out,
        "Lie color identities",
        bad.iter().map(|v| v.describe(l.space())),
    );
    Outcome {
        code: if bad.is_empty() { EXIT_OK } else { EXIT_CHECK },
        stdout: out,
        stderr: String::new(),
    }
}

fn lie_module(l: &CycLieAlgebra, name: &str) -> Result<LieModule<CycScalar>, String> {
    let m = match name {
        "natural" => LieModule::new(l, l.space().clone(), l.bracket().clone()),
        "trivial" => {
            let g = GradedSpace::ground(l.space().group(), "1");
            LieModule::new(l, g, Bilinear::zeros(l.dim(), 1, 1))
        }
        other => return Err(format!("module `{other}` is not available for Lie color algebras")),
    };
    m.map_err(|e| e.to_string())
}

fn module_name(p: &Problem, given: Option<&str>) -> String {
    match (given, &p.spec.module) {
        (Some(n), _) => n.to_string(),
        (None, crate::problem::ModuleSpec::Named(n)) => n.clone(),
        (None, crate::problem::ModuleSpec::Explicit(_)) => "explicit".into(),
    }
}

struct Computed {
    report: Report,
    table: CohomologyTable,
}

fn compute(p: &Problem, max_n: usize, module: Option<&str>, force: bool) -> Result<Computed, Outcome> {
    let module_label = module_name(p, module);
    let mut warnings: Vec<String> = eps_warning(p).into_iter().collect();
    let complex = match &p.structure {
        Structure::LeftSymmetric(a) => {
            let v = p
                .module(module)
                .map_err(|e| Outcome::input(format!("schema error at {e}")))?;
            if let Some(bad) = a.left_symmetric_violations().first() {
                warnings.push(format!("algebra is not left-symmetric: {}", bad.describe(a.space())));
            }
            match CochainComplex::left_symmetric(a, &v, max_n) {
                Ok(c) => c,
                Err(e) if force => {
                    warnings.push(e.to_string());
                    CochainComplex::left_symmetric_unchecked(a, &v, max_n)
                }
                Err(e) => return Err(check_failure(e.to_string())),
            }
        }
        Structure::Lie(l) => {
            if let Some(bad) = l.lie_violations().first() {
                warnings.push(format!("bracket is not Lie color: {}", bad.describe(l.space())));
            }
            let w = lie_module(l, &module_label).map_err(Outcome::input)?;
            CochainComplex::lie_color(l, &w, max_n).map_err(|e| check_failure(e.to_string()))?
        }
    };
    let square_nonzero = complex.square_nonzero_levels();
    for n in &square_nonzero {
        warnings.push(format!(
            "d_{} d_{n} is not zero; dimensions at level {} are not cohomology",
            n + 1,
            n + 1
        ));
    }
    let table = cohomology_table(&complex);
    for c in &p.spec.claims {
        if c.n <= max_n {
            if let Some(w) = claim_warning(p, c, &table) {
                warnings.push(w);
            }
        }
    }
    let kind = serde_json::to_value(complex.kind).expect("kind serializes");
    Ok(Computed {
        report: Report {
            algebra: name(p),
            complex: kind.as_str().unwrap_or_default().to_string(),
            module: module_label,
            max_n,
            entries: report::entries(&table),
            theorem_checks: Vec::new(),
            square_nonzero,
            warnings,
        },
        table,
    })
}

fn check_failure(message: String) -> Outcome {
    Outcome {
        code: EXIT_CHECK,
        stdout: String::new(),
        stderr: message + "\n",
    }
}

fn claim_warning(p: &Problem, c: &Claim, table: &CohomologyTable) -> Option<String> {
    let (computed, at) = match p.claim_degree(c) {
        Some(d) => (table.get(c.n, &d).dim_h, format!(" at degree {d}")),
        None => (table.total_h(c.n), String::new()),
    };
    if computed == c.dim_h {
        return None;
    }
    let note = c.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default();
    Some(format!(
        "claimed dim H{}{at} = {}{note}, computed {computed}",
        c.n, c.dim_h
    ))
}

fn emit(report: &Report, json: Option<&Path>, code: i32) -> Outcome {
    let mut out = Outcome {
        code,
        stdout: report.text(),
        stderr: String::new(),
    };
    if let Some(path) = json {
        if let Err(e) = std::fs::write(path, report.json()) {
            return Outcome::input(format!("cannot write {}: {e}", path.display()));
        }
    }
    for w in &report.warnings {
        out.stderr += &format!("warning: {w}\n");
    }
    out
}

fn cohomology(p: &Problem, max_n: Option<usize>, module: Option<&str>, json: Option<&Path>, force: bool) -> Outcome {
    let max_n = max_n.unwrap_or(p.spec.options.max_n);
    match compute(p, max_n, module, force || p.spec.options.force) {
        Ok(c) => {
            let code = if c.report.square_nonzero.is_empty() {
                EXIT_OK
            } else {
                EXIT_CHECK
            };
            emit(&c.report, json, code)
        }
        Err(o) => o,
    }
}

fn verify(p: &Problem, n: usize, module: Option<&str>, json: Option<&Path>, force: bool) -> Outcome {
    let force = force || p.spec.options.force;
    let Some(a) = p.algebra() else {
        return Outcome::input("verify-theorem needs a left-symmetric algebra");
    };
    if n == 0 {
        return Outcome::input("--n must be at least 1");
    }
    let v = match p.module(module) {
        Ok(v) => v,
        Err(e) => return Outcome::input(format!("schema error at {e}")),
    };
    let mut computed = match compute(p, n + 1, module, force) {
        Ok(c) => c,
        Err(o) => return o,
    };
    for level in 1..=n {
        match verify_main_theorem(a, &v, level, force) {
            Ok(r) => {
                computed.report.theorem_checks.extend(report::checks(&r.checks));
                for w in r.warnings {
                    if !computed.report.warnings.contains(&w) {
                        computed.report.warnings.push(w);
                    }
                }
            }
            Err(e) => return check_failure(e.to_string()),
        }
    }
    let holds = computed
        .report
        .theorem_checks
        .iter()
        .all(|c| c.equal && c.intertwining_zero);
    emit(&computed.report, json, if holds { EXIT_OK } else { EXIT_CHECK })
}

fn h0(p: &Problem, module: Option<&str>) -> Outcome {
    match compute(p, 0, module, p.spec.options.force) {
        Ok(c) => {
            let dims = c.table.h_dims(0);
            let mut out = String::new();
            if dims.is_empty() {
                out += "dim H0 = 0\n";
            }
            for (d, k) in &dims {
                out += &format!("dim H0 = {k} at degree {d}\n");
            }
            let mut o = emit(&c.report, None, EXIT_OK);
            o.stdout = out;
            o
        }
        Err(o) => o,
    }
}

fn grid_cap() -> Result<usize, String> {
    match std::env::var("COLORHOM_MAX_GRID") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("COLORHOM_MAX_GRID must be a positive integer, got `{s}`")),
        Err(_) => Ok(DEFAULT_GRID_CAP),
    }
}

fn scan(p: &Problem) -> Outcome {
    let family = match p.family() {
        Ok(f) => f,
        Err(e) => return Outcome::input(format!("schema error at {e}")),
    };
    let grids = match p.grid() {
        Ok(g) => g,
        Err(e) => return Outcome::input(format!("schema error at {e}")),
    };
    let cap = match grid_cap() {
        Ok(c) => c,
        Err(e) => return Outcome::input(e),
    };
    let points = match scan_family(&family, &grids, cap) {
        Ok(p) => p,
        Err(e) => return Outcome::input(e.to_string()),
    };
    let names = family.parameters();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["point", "pass", "violation"])
        .expect("in-memory writer");
    let mut passing = 0;
    for pt in &points {
        let point: Vec<String> = names.iter().zip(&pt.values).map(|(n, v)| format!("{n}={v}")).collect();
        let violation = pt
            .violation
            .as_ref()
            .map(|t| format!("({},{},{})", t[0], t[1], t[2]))
            .unwrap_or_default();
        passing += usize::from(pt.pass);
        w.write_record([point.join(";"), pt.pass.to_string(), violation])
            .expect("in-memory writer");
    }
    let bytes = w.into_inner().expect("in-memory writer");
    Outcome {
        code: EXIT_OK,
        stdout: String::from_utf8(bytes).expect("csv of utf-8 fields"),
        stderr: format!(
            "{passing} of {} points satisfy the left-symmetric identity\n",
            points.len()
        ),
    }
}
