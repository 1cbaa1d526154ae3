//! Batch front-end: runs verification sweeps over a weight spec and emits
//! CSV or JSON tables with a provenance header. The `stepjacobi` binary is
//! a thin wrapper around [`RunConfig`] and [`run`].

use num_complex::Complex64;
use serde::Serialize;
use std::fmt::Write as _;

use crate::asymptotics::{
    k_infty, local_prediction, outer_prediction, outer_ratio_numeric, recurrence_prediction, Order,
};
use crate::error::{Error, Result};
use crate::orthopoly::{build_recurrence, cd_kernel, eval_monic};
use crate::quadrature::WeightSpec;
use crate::specfun::props::property_suite;
use crate::szego::{hbar, phi_cap, rho, szego_boundary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPS_FAILED: i32 = 2;
pub const EXIT_CONFIG: i32 = 64;
pub const EXIT_NUMERIC: i32 = 70;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Recur,
    Outer,
    Local,
    Kernel,
    Zeros,
    Szego,
    Props,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Recur => "recur",
            CommandKind::Outer => "outer",
            CommandKind::Local => "local",
            CommandKind::Kernel => "kernel",
            CommandKind::Zeros => "zeros",
            CommandKind::Szego => "szego",
            CommandKind::Props => "props",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Everything one run needs; deterministic output is part of the contract.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub spec: WeightSpec,
    pub command: CommandKind,
    pub n_list: Vec<usize>,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub zs: Vec<Complex64>,
    pub k_range: (i64, i64),
    /// written when set; the rendered table is always returned as well
    pub out_path: Option<std::path::PathBuf>,
    pub format: OutputFormat,
    pub tol: f64,
}

impl RunConfig {
    pub fn new(spec: WeightSpec, command: CommandKind) -> Self {
        RunConfig {
            spec,
            command,
            n_list: Vec::new(),
            xs: Vec::new(),
            ys: Vec::new(),
            zs: Vec::new(),
            k_range: (-5, 5),
            out_path: None,
            format: OutputFormat::Csv,
            tol: 1e-12,
        }
    }

    fn validate(&self) -> Result<()> {
        self.spec
            .validate()
            .map_err(|e| Error::Config(e.to_string()))?;
        if !(self.tol > 0.0) {
            return Err(Error::Config("tol must be positive".into()));
        }
        let needs_n = matches!(
            self.command,
            CommandKind::Recur
                | CommandKind::Outer
                | CommandKind::Local
                | CommandKind::Kernel
                | CommandKind::Zeros
        );
        if needs_n && self.n_list.is_empty() {
            return Err(Error::Config(format!(
                "command `{}` needs a non-empty --n list",
                self.command.name()
            )));
        }
        if self.k_range.0 > self.k_range.1 {
            return Err(Error::Config("k range must satisfy min <= max".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Bool(bool),
    Text(&'static str),
}

#[derive(Clone, Debug, Serialize)]
struct Provenance {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    alpha: f64,
    beta: f64,
    c: f64,
    logh_cheb: Vec<f64>,
    quad_npts_per_half: Option<usize>,
    tol: f64,
}

/// The rendered artifact plus the process exit status.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub rendered: String,
}

struct TableOut {
    provenance: Provenance,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

fn fmt_cell(cell: &Cell) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        // 17 significant digits: lossless round-trip of binary doubles
        Cell::Num(v) => format!("{v:.16e}"),
        Cell::Bool(v) => v.to_string(),
        Cell::Text(v) => v.to_string(),
    }
}

fn render(table: &TableOut, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let p = &table.provenance;
            let logh = p
                .logh_cheb
                .iter()
                .map(|v| format!("{v}"))
                .collect::<Vec<_>>()
                .join(";");
            let mut out = String::new();
            let _ = writeln!(
                out,
                "# {} {} command={} alpha={} beta={} c={} logh={} quad_npts_per_half={} tol={}",
                p.tool,
                p.version,
                p.command,
                p.alpha,
                p.beta,
                p.c,
                if logh.is_empty() {
                    "0".to_string()
                } else {
                    logh
                },
                p.quad_npts_per_half
                    .map_or("-".to_string(), |v| v.to_string()),
                p.tol
            );
            let _ = writeln!(out, "{}", table.columns.join(","));
            for row in &table.rows {
                let line = row.iter().map(fmt_cell).collect::<Vec<_>>().join(",");
                let _ = writeln!(out, "{line}");
            }
            out
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct JsonOut<'a> {
                provenance: &'a Provenance,
                columns: &'a [&'static str],
                rows: &'a [Vec<Cell>],
            }
            let mut s = serde_json::to_string_pretty(&JsonOut {
                provenance: &table.provenance,
                columns: &table.columns,
                rows: &table.rows,
            })
            .expect("tables serialize");
            s.push('\n');
            s
        }
    }
}

/// Execute a config and return the rendered table plus exit status.
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    let spec = &config.spec;
    let mut provenance = Provenance {
        tool: "stepjacobi",
        version: env!("CARGO_PKG_VERSION"),
        command: config.command.name(),
        alpha: spec.alpha,
        beta: spec.beta,
        c: spec.c,
        logh_cheb: spec.logh_cheb.clone(),
        quad_npts_per_half: None,
        tol: config.tol,
    };
    let mut exit_code = EXIT_OK;

    let (columns, rows): (Vec<&'static str>, Vec<Vec<Cell>>) = match config.command {
        CommandKind::Recur => {
            // b_n needs one degree beyond the largest requested n
            let n_max = *config.n_list.iter().max().expect("validated") + 1;
            let table = build_recurrence(spec, n_max)?;
            provenance.quad_npts_per_half = Some(table.quad_npts);
            let mut rows = Vec::new();
            for &n in &config.n_list {
                let (pa, pb) = recurrence_prediction(spec, n)?;
                let a_n = table.a(n);
                let b_n = table.b(n);
                let nf = n as f64;
                rows.push(vec![
                    Cell::Int(n as i64),
                    Cell::Num(a_n),
                    Cell::Num(b_n),
                    Cell::Num(table.leading_coeff(n)),
                    Cell::Num(pa),
                    Cell::Num(pb),
                    Cell::Num((a_n - pa).abs() * nf * nf),
                    Cell::Num((b_n - pb).abs() * nf * nf),
                ]);
            }
            (
                vec![
                    "n",
                    "a_n",
                    "b_n",
                    "k_n",
                    "pred_a",
                    "pred_b",
                    "err_a_times_n2",
                    "err_b_times_n2",
                ],
                rows,
            )
        }
        CommandKind::Outer => {
            if config.zs.is_empty() {
                return Err(Error::Config("outer needs at least one --z point".into()));
            }
            let n_max = *config.n_list.iter().max().expect("validated");
            let table = build_recurrence(spec, n_max)?;
            provenance.quad_npts_per_half = Some(table.quad_npts);
            let mut rows = Vec::new();
            for &z in &config.zs {
                for &n in &config.n_list {
                    let numeric = outer_ratio_numeric(&table, n, z)?;
                    let p0 = outer_prediction(spec, n, z, Order::Leading)?;
                    let p1 = outer_prediction(spec, n, z, Order::WithCorrection)?;
                    rows.push(vec![
                        Cell::Int(n as i64),
                        Cell::Num(z.re),
                        Cell::Num(z.im),
                        Cell::Num(numeric.re),
                        Cell::Num(numeric.im),
                        Cell::Num(p0.re),
                        Cell::Num(p0.im),
                        Cell::Num(p1.re),
                        Cell::Num(p1.im),
                        Cell::Num((numeric - p0).norm()),
                        Cell::Num((numeric - p1).norm()),
                    ]);
                }
            }
            (
                vec![
                    "n",
                    "re_z",
                    "im_z",
                    "numeric_re",
                    "numeric_im",
                    "pred0_re",
                    "pred0_im",
                    "pred1_re",
                    "pred1_im",
                    "abs_err0",
                    "abs_err1",
                ],
                rows,
            )
        }
        CommandKind::Local => {
            if config.xs.is_empty() {
                return Err(Error::Config("local needs at least one --x point".into()));
            }
            let n_max = *config.n_list.iter().max().expect("validated");
            let table = build_recurrence(spec, n_max)?;
            provenance.quad_npts_per_half = Some(table.quad_npts);
            let mut rows = Vec::new();
            for &x in &config.xs {
                for &n in &config.n_list {
                    let numeric = eval_monic(&table, n, Complex64::new(x, 0.0))?.re;
                    let p0 = local_prediction(spec, n, x, Order::Leading)?;
                    let p1 = local_prediction(spec, n, x, Order::WithCorrection)?;
                    rows.push(vec![
                        Cell::Int(n as i64),
                        Cell::Num(x),
                        Cell::Num(numeric),
                        Cell::Num(p0),
                        Cell::Num(p1),
                        Cell::Num((numeric - p0).abs()),
                        Cell::Num((numeric - p1).abs()),
                    ]);
                }
            }
            (
                vec![
                    "n",
                    "x",
                    "numeric",
                    "predicted_order0",
                    "predicted_order1",
                    "abs_err0",
                    "abs_err1",
                ],
                rows,
            )
        }
        CommandKind::Kernel => {
            if config.xs.len() != config.ys.len() || config.xs.is_empty() {
                return Err(Error::Config(
                    "kernel needs --x and --y lists of equal nonzero length".into(),
                ));
            }
            let n_max = *config.n_list.iter().max().expect("validated");
            let table = build_recurrence(spec, n_max)?;
            provenance.quad_npts_per_half = Some(table.quad_npts);
            let mut rows = Vec::new();
            for (&x, &y) in config.xs.iter().zip(&config.ys) {
                let predicted = k_infty(spec, x, y)?;
                for &n in &config.n_list {
                    let nf = n as f64;
                    let numeric = std::f64::consts::PI / nf
                        * cd_kernel(
                            &table,
                            n,
                            std::f64::consts::PI * x / nf,
                            std::f64::consts::PI * y / nf,
                        )?;
                    rows.push(vec![
                        Cell::Int(n as i64),
                        Cell::Num(x),
                        Cell::Num(y),
                        Cell::Num(numeric),
                        Cell::Num(predicted),
                        Cell::Num((numeric - predicted).abs()),
                    ]);
                }
            }
            (
                vec!["n", "x", "y", "numeric_scaled", "predicted", "abs_err"],
                rows,
            )
        }
        CommandKind::Zeros => {
            let n_max = *config.n_list.iter().max().expect("validated");
            let table = build_recurrence(spec, n_max)?;
            provenance.quad_npts_per_half = Some(table.quad_npts);
            let (k_min, k_max) = config.k_range;
            let mut rows = Vec::new();
            for &n in &config.n_list {
                let report = crate::zerolab::spacing_report(spec, &table, n, k_min, k_max)?;
                for row in &report.rows {
                    rows.push(vec![
                        Cell::Int(n as i64),
                        Cell::Int(row.k),
                        Cell::Num(row.x_k),
                        Cell::Num(row.normalized_spacing),
                        Cell::Num(row.zeta_k),
                        Cell::Num(row.predicted_spacing),
                        Cell::Num(row.deviation),
                    ]);
                }
            }
            (
                vec![
                    "n",
                    "k",
                    "x_k",
                    "n_over_pi_spacing",
                    "zeta_k",
                    "predicted_spacing",
                    "deviation",
                ],
                rows,
            )
        }
        CommandKind::Szego => {
            let xs: Vec<f64> = if config.xs.is_empty() {
                (1..40)
                    .map(|k| -0.975 + k as f64 * 0.05)
                    .filter(|x| *x != 0.0)
                    .collect()
            } else {
                config.xs.clone()
            };
            let mut rows = Vec::new();
            for &x in &xs {
                let d = szego_boundary(spec, x, true)?;
                rows.push(vec![
                    Cell::Num(x),
                    Cell::Num(d.re),
                    Cell::Num(d.im),
                    Cell::Num(hbar(spec, x)?),
                    Cell::Num(phi_cap(spec, x)?),
                    Cell::Num(rho(spec, x)?),
                ]);
            }
            (
                vec!["x", "re_d_plus", "im_d_plus", "hbar", "phi_cap", "rho"],
                rows,
            )
        }
        CommandKind::Props => {
            let checks = property_suite(spec.c)?;
            let mut rows = Vec::new();
            let mut all_pass = true;
            for check in &checks {
                all_pass &= check.pass;
                rows.push(vec![
                    Cell::Text(check.name),
                    Cell::Int(check.points as i64),
                    Cell::Num(check.worst_margin),
                    Cell::Bool(check.pass),
                ]);
            }
            if !all_pass {
                exit_code = EXIT_PROPS_FAILED;
            }
            (vec!["property", "points", "worst_margin", "pass"], rows)
        }
    };

    let table = TableOut {
        provenance,
        columns,
        rows,
    };
    let rendered = render(&table, config.format);
    if let Some(path) = &config.out_path {
        std::fs::write(path, rendered.as_bytes())?;
    }
    Ok(RunOutcome {
        exit_code,
        rendered,
    })
}

/// "32,64" or "a:b:step" into a sorted list.
pub fn parse_n_list(text: &str) -> Result<Vec<usize>> {
    let bad = |m: &str| Error::Config(format!("bad --n list `{text}`: {m}"));
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(bad("range form is start:end:step"));
        }
        let start: usize = parts[0]
            .trim()
            .parse()
            .map_err(|_| bad("non-integer start"))?;
        let end: usize = parts[1]
            .trim()
            .parse()
            .map_err(|_| bad("non-integer end"))?;
        let step: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| bad("non-integer step"))?;
        if step == 0 || end < start {
            return Err(bad("need step > 0 and end >= start"));
        }
        Ok((start..=end).step_by(step).collect())
    } else {
        text.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| bad("non-integer entry"))
            })
            .collect()
    }
}

pub fn parse_f64_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("bad numeric list entry `{p}`")))
        })
        .collect()
}

/// Parse "2", "0.5+0.8i", "-1.5-0.3i", "2i".
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s = text.trim().replace(' ', "");
    let bad = || Error::Config(format!("bad complex number `{text}`"));
    if let Ok(re) = s.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    if let Some(body) = s.strip_suffix('i') {
        // find the split between real and imaginary parts: the last +/-
        // that is not an exponent sign and not the leading sign
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let b = bytes[i];
            if (b == b'+' || b == b'-') && bytes[i - 1] != b'e' && bytes[i - 1] != b'E' {
                split = Some(i);
                break;
            }
        }
        return match split {
            Some(i) => {
                let re: f64 = body[..i].parse().map_err(|_| bad())?;
                let im_text = &body[i..];
                let im: f64 = if im_text == "+" {
                    1.0
                } else if im_text == "-" {
                    -1.0
                } else {
                    im_text.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = if body.is_empty() {
                    1.0
                } else {
                    body.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(0.0, im))
            }
        };
    }
    Err(bad())
}

pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>> {
    text.split(',').map(parse_complex).collect()
}

/// "min:max" (or a single k) into an index range.
pub fn parse_k_range(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::Config(format!("bad --k range `{text}`"));
    if let Some((lo, hi)) = text.split_once(':') {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        Ok((lo, hi))
    } else {
        let k: i64 = text.trim().parse().map_err(|_| bad())?;
        Ok((k, k))
    }
}
