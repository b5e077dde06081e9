//! Single-point evaluations and one-axis parameter sweeps, with CSV and JSON
//! reports.
//!
//! Radii are given as `r/r_s`; with `r_s = 0` the same field is read as an
//! absolute radius in flat space. Rows are evaluated in parallel and emitted
//! in axis order, so identical configurations give byte-identical reports.

use std::fmt::{self, Write as _};
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::epr::{
    bell_state, chsh_value, corrected_chsh, nonrelativistic_limit, transport_pair, BellState,
    ExpectationMode, ObservableSet,
};
use crate::error::{Error, Result};
use crate::geometry::SchwarzschildParams;
use crate::kinematics::{circular_kinematics, geodesic_rapidity, CircularWorldline};
use crate::spinor::{ordered_exponential, wigner_angle, REFERENCE_ORIENTATION};

/// Default number of ordered-exponential steps.
pub const DEFAULT_STEPS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    WignerAngle,
    ChshRaw,
    ChshNormalized,
    ChshCorrected,
    NrAngle,
    NrChsh,
    Acceleration,
    GeodesicRapidity,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::WignerAngle,
        Quantity::ChshRaw,
        Quantity::ChshNormalized,
        Quantity::ChshCorrected,
        Quantity::NrAngle,
        Quantity::NrChsh,
        Quantity::Acceleration,
        Quantity::GeodesicRapidity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::WignerAngle => "wigner_angle",
            Quantity::ChshRaw => "chsh_raw",
            Quantity::ChshNormalized => "chsh_normalized",
            Quantity::ChshCorrected => "chsh_corrected",
            Quantity::NrAngle => "nr_angle",
            Quantity::NrChsh => "nr_chsh",
            Quantity::Acceleration => "acceleration",
            Quantity::GeodesicRapidity => "geodesic_rapidity",
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown quantity `{s}`")))
    }
}

/// Orbital rapidity: a fixed value, or the force-free value at each radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rapidity {
    Value(f64),
    Geodesic,
}

impl FromStr for Rapidity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "geodesic" {
            return Ok(Rapidity::Geodesic);
        }
        s.parse::<f64>()
            .map(Rapidity::Value)
            .map_err(|_| Error::InvalidParams(format!("rapidity must be a number or `geodesic`, got `{s}`")))
    }
}

/// One evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointConfig {
    pub rs: f64,
    /// `r/r_s`, or the absolute radius when `rs == 0`.
    pub r_over_rs: f64,
    pub xi: Rapidity,
    pub phi: f64,
    pub c: f64,
    /// Expectation mode used by `chsh_corrected`.
    pub mode: ExpectationMode,
    pub steps: usize,
}

impl Default for PointConfig {
    fn default() -> Self {
        Self {
            rs: 1.0,
            r_over_rs: 3.0,
            xi: Rapidity::Value(0.0),
            phi: std::f64::consts::TAU,
            c: 1.0,
            mode: ExpectationMode::Raw,
            steps: DEFAULT_STEPS,
        }
    }
}

/// A point with the radius and rapidity resolved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolvedPoint {
    pub params: SchwarzschildParams,
    pub orbit: CircularWorldline,
}

impl PointConfig {
    pub fn params(&self) -> Result<SchwarzschildParams> {
        SchwarzschildParams::new(self.rs, self.c)
    }

    pub fn radius(&self) -> f64 {
        if self.rs > 0.0 {
            self.r_over_rs * self.rs
        } else {
            self.r_over_rs
        }
    }

    /// Resolves the radius and rapidity; the orbit runs along
    /// [`REFERENCE_ORIENTATION`].
    pub fn resolve(&self) -> Result<ResolvedPoint> {
        let params = self.params()?;
        let r = self.radius();
        params.check_exterior(r)?;
        let xi = match self.xi {
            Rapidity::Value(xi) => xi,
            Rapidity::Geodesic => geodesic_rapidity(&params, r)?,
        };
        let orbit = CircularWorldline::new(r, xi, self.phi, REFERENCE_ORIENTATION)?;
        Ok(ResolvedPoint { params, orbit })
    }

    pub fn evaluate(&self, quantity: Quantity) -> Result<f64> {
        let ResolvedPoint { params, orbit } = self.resolve()?;
        let singlet = bell_state(BellState::PsiMinus);
        let obs = ObservableSet::standard();
        match quantity {
            Quantity::WignerAngle => wigner_angle(&params, &orbit),
            Quantity::ChshRaw => chsh_value(&transport_pair(&singlet, &params, &orbit)?, &obs, ExpectationMode::Raw),
            Quantity::ChshNormalized => {
                chsh_value(&transport_pair(&singlet, &params, &orbit)?, &obs, ExpectationMode::Normalized)
            }
            Quantity::ChshCorrected => {
                let corrected = corrected_chsh(&params, &orbit)?;
                Ok(match self.mode {
                    ExpectationMode::Raw => corrected.raw,
                    ExpectationMode::Normalized => corrected.normalized,
                })
            }
            Quantity::NrAngle => Ok(nonrelativistic_limit(&params, &orbit)?.angle),
            Quantity::NrChsh => Ok(nonrelativistic_limit(&params, &orbit)?.chsh),
            Quantity::Acceleration => Ok(circular_kinematics(&params, &orbit)?.radial_acceleration()),
            Quantity::GeodesicRapidity => geodesic_rapidity(&params, orbit.r),
        }
    }

    /// Magnitude of the rotation angle tracked by the ordered product.
    pub fn ordered_angle(&self) -> Result<f64> {
        let ResolvedPoint { params, orbit } = self.resolve()?;
        Ok(ordered_exponential(&params, &orbit, self.steps)?.alpha)
    }

    fn set(&mut self, axis: AxisKind, value: f64) {
        match axis {
            AxisKind::ROverRs => self.r_over_rs = value,
            AxisKind::Xi => self.xi = Rapidity::Value(value),
            AxisKind::Phi => self.phi = value,
            AxisKind::C => self.c = value,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.rs.is_finite() && self.rs >= 0.0) {
            return Err(Error::InvalidParams(format!("rs must be finite and >= 0, got {}", self.rs)));
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(Error::InvalidParams(format!("c must be finite and > 0, got {}", self.c)));
        }
        if self.steps == 0 {
            return Err(Error::NonPositiveSteps);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxisKind {
    ROverRs,
    Xi,
    Phi,
    C,
}

impl AxisKind {
    pub fn name(self) -> &'static str {
        match self {
            AxisKind::ROverRs => "r_over_rs",
            AxisKind::Xi => "xi",
            AxisKind::Phi => "phi",
            AxisKind::C => "c",
        }
    }
}

impl FromStr for AxisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "r_over_rs" | "r-over-rs" => Ok(AxisKind::ROverRs),
            "xi" => Ok(AxisKind::Xi),
            "phi" => Ok(AxisKind::Phi),
            "c" => Ok(AxisKind::C),
            _ => Err(Error::InvalidParams(format!("unknown sweep axis `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub kind: AxisKind,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub scale: Scale,
}

impl Axis {
    /// Sample points, both endpoints included.
    pub fn samples(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    return self.stop;
                }
                let t = i as f64 / last;
                match self.scale {
                    Scale::Linear => self.start + (self.stop - self.start) * t,
                    Scale::Log => (self.start.ln() + (self.stop.ln() - self.start.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::InvalidParams(format!("unknown output format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub quantity: Quantity,
    pub fixed: PointConfig,
    pub vary: Axis,
    /// Adds the ordered-exponential angle next to `wigner_angle`.
    pub cross_check: bool,
    pub output: OutputFormat,
}

impl SweepConfig {
    /// Checks the axis and the endpoints against the parameter domain.
    /// Failures that depend on the individual row are reported per row.
    pub fn validate(&self) -> Result<()> {
        self.fixed.validate()?;
        let axis = &self.vary;
        if axis.count < 2 {
            return Err(Error::InvalidParams(format!("sweep needs at least 2 samples, got {}", axis.count)));
        }
        if !(axis.start.is_finite() && axis.stop.is_finite()) {
            return Err(Error::InvalidParams("sweep bounds must be finite".into()));
        }
        if axis.scale == Scale::Log && !(axis.start > 0.0 && axis.stop > 0.0) {
            return Err(Error::InvalidParams("log sweep bounds must be positive".into()));
        }
        if axis.kind == AxisKind::Xi && self.fixed.xi == Rapidity::Geodesic {
            return Err(Error::InvalidParams("cannot sweep xi in geodesic mode".into()));
        }
        if self.cross_check && self.quantity != Quantity::WignerAngle {
            return Err(Error::InvalidParams("cross-check is only available for wigner_angle".into()));
        }
        for end in [axis.start, axis.stop] {
            let mut point = self.fixed;
            point.set(axis.kind, end);
            point.validate()?;
            let params = point.params()?;
            params.check_exterior(point.radius())?;
            if let Rapidity::Value(xi) = point.xi {
                if !(xi.is_finite() && xi >= 0.0) {
                    return Err(Error::InvalidParams(format!("rapidity must be finite and >= 0, got {xi}")));
                }
            }
            if !(point.phi.is_finite() && point.phi >= 0.0) {
                return Err(Error::InvalidParams(format!("azimuth must be finite and >= 0, got {}", point.phi)));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

/// Column-named rows, ready for [`emit_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

/// Evaluates one row per axis sample.
///
/// Columns: the swept parameter, the remaining parameters (`rs`, `r_over_rs`,
/// `xi`, `phi`, `c`) with `xi` resolved per row, the quantity, the optional
/// `ordered_exponential` angle and a `status` column that is `ok` or the
/// error message. Failed rows carry `NaN` values.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Table> {
    cfg.validate()?;
    let params_order = [AxisKind::ROverRs, AxisKind::Xi, AxisKind::Phi, AxisKind::C];
    let mut columns = vec![cfg.vary.kind.name().to_string(), "rs".to_string()];
    columns.extend(params_order.iter().filter(|k| **k != cfg.vary.kind).map(|k| k.name().to_string()));
    columns.push(cfg.quantity.name().to_string());
    if cfg.cross_check {
        columns.push("ordered_exponential".to_string());
    }
    columns.push("status".to_string());

    let rows = cfg
        .vary
        .samples()
        .into_par_iter()
        .map(|value| {
            let mut point = cfg.fixed;
            point.set(cfg.vary.kind, value);
            let xi = match point.xi {
                Rapidity::Value(xi) => Ok(xi),
                Rapidity::Geodesic => point.params().and_then(|p| geodesic_rapidity(&p, point.radius())),
            };
            let param = |kind: AxisKind| match kind {
                AxisKind::ROverRs => point.r_over_rs,
                AxisKind::Xi => *xi.as_ref().unwrap_or(&f64::NAN),
                AxisKind::Phi => point.phi,
                AxisKind::C => point.c,
            };
            let mut row = vec![Cell::Num(value), Cell::Num(point.rs)];
            row.extend(params_order.iter().filter(|k| **k != cfg.vary.kind).map(|k| Cell::Num(param(*k))));

            let value = point.evaluate(cfg.quantity);
            let check = cfg.cross_check.then(|| point.ordered_angle());
            row.push(Cell::Num(*value.as_ref().unwrap_or(&f64::NAN)));
            if let Some(check) = &check {
                row.push(Cell::Num(*check.as_ref().unwrap_or(&f64::NAN)));
            }
            let status = match (value, check) {
                (Err(e), _) | (_, Some(Err(e))) => e.to_string(),
                _ => "ok".to_string(),
            };
            row.push(Cell::Text(status));
            row
        })
        .collect();
    Ok(Table { columns, rows })
}

/// Where a report goes.
#[derive(Debug, Clone, Copy)]
pub enum Destination<'a> {
    Stdout,
    File(&'a Path),
}

/// Writes the table as CSV (header row first) or as a JSON array of flat
/// objects. Numbers carry 17 significant digits; non-finite values are left
/// empty in CSV and written as `null` in JSON.
pub fn emit_report(table: &Table, format: OutputFormat, destination: Destination<'_>) -> Result<()> {
    let text = render_report(table, format)?;
    let (result, path) = match destination {
        Destination::Stdout => (std::io::stdout().lock().write_all(text.as_bytes()), "<stdout>".to_string()),
        Destination::File(path) => (std::fs::write(path, text.as_bytes()), path.display().to_string()),
    };
    result.map_err(|e| Error::Io { path, message: e.to_string() })
}

/// Renders the report to a string.
pub fn render_report(table: &Table, format: OutputFormat) -> Result<String> {
    if table.rows.is_empty() {
        return Err(Error::EmptySweep);
    }
    match format {
        OutputFormat::Csv => render_csv(table),
        OutputFormat::Json => Ok(render_json(table)),
    }
}

/// `{:.16e}`: 17 significant digits, enough to recover every `f64` exactly.
pub fn format_number(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

fn render_csv(table: &Table) -> Result<String> {
    let csv_error = |e: csv::Error| Error::Io { path: "<csv>".into(), message: e.to_string() };
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&table.columns).map_err(csv_error)?;
    for row in &table.rows {
        let record = row.iter().map(|cell| match cell {
            Cell::Num(x) => format_number(*x).unwrap_or_default(),
            Cell::Text(s) => s.clone(),
        });
        writer.write_record(record).map_err(csv_error)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io { path: "<csv>".into(), message: e.to_string() })?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn render_json(table: &Table) -> String {
    let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let mut out = String::from("[\n");
    for (i, row) in table.rows.iter().enumerate() {
        out.push_str("  {");
        for (j, (name, cell)) in table.columns.iter().zip(row).enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            let value = match cell {
                Cell::Num(x) => format_number(*x).unwrap_or_else(|| "null".into()),
                Cell::Text(s) => quote(s),
            };
            let _ = write!(out, "{}: {}", quote(name), value);
        }
        out.push('}');
        if i + 1 < table.rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]\n");
    out
}
