//! Instance parsing, result documents, figures and the command surface of `toric-cartier`.

pub mod document;
pub mod error;
pub mod instance;
pub mod svg;

use std::time::Instant;

use toric_cartier::birational::{non_lc_ideal, BasePointData};
use toric_cartier::fixed::{enumerate_fixed, largest_fixed, smallest_nonzero_fixed, ShiftedNewton};
use toric_cartier::ideal::MonomialIdeal;
use toric_cartier::oracle::{cross_validate, verify_fixed, CrossOptions};

pub use document::ResultDocument;
pub use error::{CliError, Result};
pub use instance::{parse_ideal_arg, parse_instance, InstanceConfig, Twist};

use document::{ExtremalDoc, IdealDoc, OracleDoc, RecordDoc, VerdictDoc};

/// Iteration budget for the stable image chain.
const STABLE_IMAGE_STEPS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Enumerate,
    Verify,
    NonLc,
    TestIdeal,
    StableImage,
    CrossValidate,
    Plot,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Enumerate => "enumerate",
            Command::Verify => "verify",
            Command::NonLc => "non-lc",
            Command::TestIdeal => "test-ideal",
            Command::StableImage => "stable-image",
            Command::CrossValidate => "cross-validate",
            Command::Plot => "plot",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Doc,
    Svg,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub ideal: Option<String>,
    pub n: Option<u32>,
    pub margin: Option<i64>,
    pub format: Option<Format>,
    pub timing: bool,
}

/// Rendered output and whether it counts as success (exit code 0) or a negative answer (1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

pub fn run(cmd: Command, cfg: &InstanceConfig, opts: &Options) -> Result<Output> {
    let start = Instant::now();
    let mut cfg = cfg.clone();
    if let Some(m) = opts.margin {
        cfg.margin = m;
    }
    let tr = cfg.build()?.triple;
    if let Some(n) = opts.n {
        if n < tr.period() {
            return Err(CliError::Invalid {
                field: "N".into(),
                reason: format!("must be at least the period {} of t", tr.period()),
            });
        }
        cfg.n_max = Some(n);
    }
    let format = opts
        .format
        .unwrap_or(if cmd == Command::Plot { Format::Svg } else { Format::Doc });
    if format == Format::Svg && cmd != Command::Plot {
        return Err(CliError::Unsupported(format!(
            "`{}` has no SVG output; only `plot` does",
            cmd.name()
        )));
    }

    let big_n = cfg.effective_n(tr.period());
    let mut doc = ResultDocument::new(cmd.name(), &cfg, &tr);
    let mut success = true;
    match cmd {
        Command::Enumerate | Command::Plot => {
            let sn = ShiftedNewton::new(&tr)?;
            let records = enumerate_fixed(&sn)?;
            if format == Format::Svg {
                return Ok(Output {
                    text: svg::render(&tr, &records, cfg.margin)?,
                    success,
                });
            }
            let smallest = match smallest_nonzero_fixed(&sn) {
                Ok(i) => Some(IdealDoc::new(&i)),
                Err(toric_cartier::Error::AllFixedIdealsZero) => None,
                Err(e) => return Err(e.into()),
            };
            doc.extremal = Some(ExtremalDoc {
                smallest_nonzero: smallest,
                largest: IdealDoc::new(&largest_fixed(&sn)?),
            });
            doc.records = Some(records.iter().map(|r| RecordDoc::new(r, &sn)).collect());
        }
        Command::Verify => {
            let arg = opts.ideal.as_deref().ok_or(CliError::Missing("--ideal"))?;
            let gens = parse_ideal_arg(arg)?;
            let ideal = MonomialIdeal::from_generators(tr.ambient().clone(), &gens)
                .map_err(|e| CliError::invalid("ideal", e))?;
            let verdict = verify_fixed(&tr, &ideal, big_n)?;
            success = verdict.is_fixed();
            doc.verdict = Some(VerdictDoc::new(&ideal, &verdict, big_n));
        }
        Command::NonLc => {
            let bp = BasePointData::from_cartier(tr.cartier());
            let unit = MonomialIdeal::unit(tr.ambient().clone());
            let ideal = non_lc_ideal(&bp, tr.a_ideal(), tr.t(), &unit, &num_traits::Zero::zero())?;
            doc.ideal = Some(IdealDoc::new(&ideal));
        }
        Command::TestIdeal => {
            let sn = ShiftedNewton::new(&tr)?;
            let ideal = match smallest_nonzero_fixed(&sn) {
                Ok(i) => i,
                Err(toric_cartier::Error::AllFixedIdealsZero) => MonomialIdeal::zero(tr.ambient().clone()),
                Err(e) => return Err(e.into()),
            };
            doc.ideal = Some(IdealDoc::new(&ideal));
        }
        Command::StableImage => {
            doc.ideal = Some(IdealDoc::new(&tr.cartier().stable_image(STABLE_IMAGE_STEPS)?));
        }
        Command::CrossValidate => {
            let opts = CrossOptions {
                margin: cfg.margin,
                pool_cap: cfg.pool_cap,
                n_max: Some(big_n),
            };
            let report = cross_validate(&tr, &opts)?;
            success = report.passed();
            doc.oracle = Some(OracleDoc::new(&report));
        }
    }
    if opts.timing {
        doc.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(Output {
        text: doc.to_json()?,
        success,
    })
}
