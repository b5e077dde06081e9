use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fermi_walker::epr::{bell_state, chsh_value, corrected_chsh, transport_pair, BellState};
use fermi_walker::spinor::{closed_form_operator, ordered_exponential, transport_generator, TransportOperator};
use fermi_walker::sweep::{
    emit_report, run_sweep, Axis, AxisKind, Cell, Destination, OutputFormat, PointConfig, Quantity, Rapidity,
    Scale, SweepConfig, Table, DEFAULT_STEPS,
};
use fermi_walker::{Error, ExpectationMode, ObservableSet};

#[derive(Parser)]
#[command(name = "fermi-walker", version, about = "Wigner rotation and EPR correlations on circular Schwarzschild orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wigner rotation angle, closed form and ordered product.
    Angle(PointArgs),
    /// Transport operator entries from both methods.
    Transport(PointArgs),
    /// CHSH value of the transported singlet.
    Chsh(PointArgs),
    /// One-axis parameter sweep.
    Sweep(SweepArgs),
}

#[derive(Args, Clone)]
struct PointArgs {
    /// Orbit radius in units of r_s (absolute radius when --rs 0).
    #[arg(long, default_value_t = 3.0)]
    r_over_rs: f64,
    /// Rapidity, or `geodesic` for the force-free orbit.
    #[arg(long, default_value = "0")]
    xi: Rapidity,
    /// Swept azimuth in radians.
    #[arg(long, default_value_t = std::f64::consts::TAU)]
    phi: f64,
    /// Speed of light.
    #[arg(long, default_value_t = 1.0)]
    c: f64,
    /// Schwarzschild radius; 0 selects flat space.
    #[arg(long, default_value_t = 1.0)]
    rs: f64,
    /// Expectation convention for CHSH values.
    #[arg(long, value_enum, default_value_t = ModeArg::Raw)]
    mode: ModeArg,
    /// Steps of the ordered product.
    #[arg(long, default_value_t = DEFAULT_STEPS)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    point: PointArgs,
    #[arg(long, value_enum)]
    quantity: QuantityArg,
    /// Parameter to vary.
    #[arg(long, value_enum)]
    vary: AxisArg,
    #[arg(long)]
    start: f64,
    #[arg(long)]
    stop: f64,
    #[arg(long, default_value_t = 11)]
    count: usize,
    #[arg(long, value_enum, default_value_t = ScaleArg::Linear)]
    scale: ScaleArg,
    /// Add the ordered-product angle (wigner_angle only).
    #[arg(long)]
    cross_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Raw,
    Normalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Linear,
    Log,
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    ROverRs,
    Xi,
    Phi,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum QuantityArg {
    WignerAngle,
    ChshRaw,
    ChshNormalized,
    ChshCorrected,
    NrAngle,
    NrChsh,
    Acceleration,
    GeodesicRapidity,
}

impl From<QuantityArg> for Quantity {
    fn from(q: QuantityArg) -> Self {
        match q {
            QuantityArg::WignerAngle => Quantity::WignerAngle,
            QuantityArg::ChshRaw => Quantity::ChshRaw,
            QuantityArg::ChshNormalized => Quantity::ChshNormalized,
            QuantityArg::ChshCorrected => Quantity::ChshCorrected,
            QuantityArg::NrAngle => Quantity::NrAngle,
            QuantityArg::NrChsh => Quantity::NrChsh,
            QuantityArg::Acceleration => Quantity::Acceleration,
            QuantityArg::GeodesicRapidity => Quantity::GeodesicRapidity,
        }
    }
}

impl From<AxisArg> for AxisKind {
    fn from(a: AxisArg) -> Self {
        match a {
            AxisArg::ROverRs => AxisKind::ROverRs,
            AxisArg::Xi => AxisKind::Xi,
            AxisArg::Phi => AxisKind::Phi,
            AxisArg::C => AxisKind::C,
        }
    }
}

impl PointArgs {
    fn config(&self) -> PointConfig {
        PointConfig {
            rs: self.rs,
            r_over_rs: self.r_over_rs,
            xi: self.xi,
            phi: self.phi,
            c: self.c,
            mode: match self.mode {
                ModeArg::Raw => ExpectationMode::Raw,
                ModeArg::Normalized => ExpectationMode::Normalized,
            },
            steps: self.steps,
        }
    }

    fn format(&self) -> OutputFormat {
        match self.format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }

    fn emit(&self, table: &Table) -> Result<(), Error> {
        let destination = match &self.out {
            Some(path) => Destination::File(path),
            None => Destination::Stdout,
        };
        emit_report(table, self.format(), destination)
    }
}

fn single_row(columns: &[&str], row: Vec<Cell>) -> Table {
    Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: vec![row] }
}

fn resolved_xi(point: &PointConfig) -> Result<f64, Error> {
    Ok(point.resolve()?.orbit.rapidity)
}

fn angle(args: &PointArgs) -> Result<Table, Error> {
    let point = args.config();
    let resolved = point.resolve()?;
    let generator = transport_generator(&resolved.params, &resolved.orbit)?;
    let ordered = ordered_exponential(&resolved.params, &resolved.orbit, point.steps)?;
    Ok(single_row(
        &["xi", "wigner_angle", "eta1", "eta2", "beta", "ordered_exponential"],
        vec![
            Cell::Num(resolved.orbit.rapidity),
            Cell::Num(generator.alpha),
            Cell::Num(generator.eta1),
            Cell::Num(generator.eta2),
            Cell::Num(generator.beta),
            Cell::Num(ordered.alpha),
        ],
    ))
}

fn transport(args: &PointArgs) -> Result<Table, Error> {
    let point = args.config();
    let resolved = point.resolve()?;
    let closed = closed_form_operator(&transport_generator(&resolved.params, &resolved.orbit)?);
    let ordered = ordered_exponential(&resolved.params, &resolved.orbit, point.steps)?;
    let row = |name: &str, op: &TransportOperator| {
        let mut cells = vec![Cell::Text(name.to_string())];
        for entry in op.matrix.0.iter().flatten() {
            cells.push(Cell::Num(entry.re));
            cells.push(Cell::Num(entry.im));
        }
        cells.push(Cell::Num(op.alpha));
        cells.push(Cell::Num(op.unitarity_defect()));
        cells.push(Cell::Num(op.matrix.distance(&closed.matrix)));
        cells
    };
    let columns = [
        "operator", "m00_re", "m00_im", "m01_re", "m01_im", "m10_re", "m10_im", "m11_re", "m11_im", "alpha",
        "unitarity_defect", "distance_to_closed_form",
    ];
    Ok(Table {
        columns: columns.iter().map(|c| c.to_string()).collect(),
        rows: vec![row("closed_form", &closed), row("ordered_exponential", &ordered)],
    })
}

fn chsh(args: &PointArgs) -> Result<Table, Error> {
    let point = args.config();
    let resolved = point.resolve()?;
    let state = transport_pair(&bell_state(BellState::PsiMinus), &resolved.params, &resolved.orbit)?;
    let value = chsh_value(&state, &ObservableSet::standard(), point.mode)?;
    let corrected = corrected_chsh(&resolved.params, &resolved.orbit)?;
    let corrected_value = match point.mode {
        ExpectationMode::Raw => corrected.raw,
        ExpectationMode::Normalized => corrected.normalized,
    };
    let mode = match point.mode {
        ExpectationMode::Raw => "raw",
        ExpectationMode::Normalized => "normalized",
    };
    Ok(single_row(
        &["xi", "mode", "wigner_angle", "norm_sqr", "chsh", "chsh_corrected", "bound"],
        vec![
            Cell::Num(resolved_xi(&point)?),
            Cell::Text(mode.to_string()),
            Cell::Num(point.evaluate(Quantity::WignerAngle)?),
            Cell::Num(state.norm_sqr()),
            Cell::Num(value),
            Cell::Num(corrected_value),
            Cell::Num(corrected.bound),
        ],
    ))
}

fn sweep(args: &SweepArgs) -> Result<Table, Error> {
    let cfg = SweepConfig {
        quantity: args.quantity.into(),
        fixed: args.point.config(),
        vary: Axis {
            kind: args.vary.into(),
            start: args.start,
            stop: args.stop,
            count: args.count,
            scale: match args.scale {
                ScaleArg::Linear => Scale::Linear,
                ScaleArg::Log => Scale::Log,
            },
        },
        cross_check: args.cross_check,
        output: args.point.format(),
    };
    run_sweep(&cfg)
}

/// 2 for configuration errors, 1 for failures while running.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::HorizonViolation { .. }
        | Error::InvalidParams(_)
        | Error::NoGeodesic { .. }
        | Error::NonPositiveSteps
        | Error::StaticProperTime
        | Error::StaticWorldline => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, point) = match &cli.command {
        Command::Angle(args) => (angle(args), args),
        Command::Transport(args) => (transport(args), args),
        Command::Chsh(args) => (chsh(args), args),
        Command::Sweep(args) => (sweep(args), &args.point),
    };
    match result.and_then(|table| point.emit(&table)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
