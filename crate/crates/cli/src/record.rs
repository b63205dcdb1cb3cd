//! Solver runs and their CSV rows.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use pwt_core::{brute_force, dp_solve, fptas_solve, Instance, Solution, SolveStats};

use crate::error::CliError;

pub const CSV_HEADER: [&str; 10] = [
    "instance",
    "m",
    "algo",
    "eps",
    "B",
    "Bprime",
    "AR_B",
    "AR_Bprime",
    "seconds",
    "peak_entries",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algo {
    Dp,
    Fptas(f64),
    Brute,
}

impl Algo {
    pub fn tag(self) -> &'static str {
        match self {
            Algo::Dp => "dp",
            Algo::Fptas(_) => "fptas",
            Algo::Brute => "brute",
        }
    }

    pub fn epsilon(self) -> Option<f64> {
        match self {
            Algo::Fptas(eps) => Some(eps),
            _ => None,
        }
    }

    /// Builds an algorithm from its tag and the optional `--eps` value.
    pub fn from_parts(tag: &str, eps: Option<f64>) -> Result<Self, CliError> {
        match (tag, eps) {
            ("dp", _) => Ok(Algo::Dp),
            ("brute", _) => Ok(Algo::Brute),
            ("fptas", Some(eps)) => Ok(Algo::Fptas(eps)),
            ("fptas", None) => Err(CliError::Usage("fptas requires --eps".into())),
            (other, _) => Err(CliError::Usage(format!(
                "unknown algorithm `{other}` (expected dp, fptas or brute)"
            ))),
        }
    }
}

/// Accepts `dp`, `brute` and `fptas:<eps>`.
impl FromStr for Algo {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            Some(("fptas", eps)) => {
                let eps = eps
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad eps in `{s}`")))?;
                Ok(Algo::Fptas(eps))
            }
            Some(_) => Err(CliError::Usage(format!("unknown algorithm `{s}`"))),
            None => Algo::from_parts(s, None),
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algo::Fptas(eps) => write!(f, "fptas({eps})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// A solution and the solver's wall time, excluding parsing and output.
pub struct Run {
    pub solution: Solution,
    pub seconds: f64,
}

pub fn run_algorithm(instance: &Instance, algo: Algo) -> Result<Run, CliError> {
    let start = Instant::now();
    let solution = match algo {
        Algo::Dp => dp_solve(instance),
        Algo::Fptas(eps) => fptas_solve(instance, eps)?,
        Algo::Brute => {
            let (selection, evaluation) = brute_force(instance)?;
            Solution {
                selection,
                evaluation,
                stats: SolveStats::default(),
            }
        }
    };
    Ok(Run {
        solution,
        seconds: start.elapsed().as_secs_f64(),
    })
}

/// `100 * obj / opt`; 100 when both are zero, undefined when only `opt` is.
pub fn approximation_rate(obj: f64, opt: f64) -> Option<f64> {
    if opt == 0.0 {
        (obj == 0.0).then_some(100.0)
    } else {
        Some(100.0 * obj / opt)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub instance: String,
    pub m: usize,
    pub algo: Algo,
    pub benefit: f64,
    pub gain: f64,
    pub ar_benefit: Option<f64>,
    pub ar_gain: Option<f64>,
    pub seconds: f64,
    pub peak_entries: usize,
}

impl RunRecord {
    /// `opt` is the optimal `(B, B')` pair, when known.
    pub fn new(instance: &Instance, algo: Algo, run: &Run, opt: Option<(f64, f64)>) -> Self {
        let eval = run.solution.evaluation;
        RunRecord {
            instance: instance.name().to_string(),
            m: instance.item_count(),
            algo,
            benefit: eval.benefit,
            gain: eval.gain,
            ar_benefit: opt.and_then(|(b, _)| approximation_rate(eval.benefit, b)),
            ar_gain: opt.and_then(|(_, g)| approximation_rate(eval.gain, g)),
            seconds: run.seconds,
            peak_entries: run.solution.stats.peak_entries,
        }
    }

    pub fn fields(&self) -> [String; 10] {
        let real = |v: f64| format!("{v:.10}");
        let opt_real = |v: Option<f64>| v.map(real).unwrap_or_default();
        [
            self.instance.clone(),
            self.m.to_string(),
            self.algo.tag().to_string(),
            opt_real(self.algo.epsilon()),
            real(self.benefit),
            real(self.gain),
            opt_real(self.ar_benefit),
            opt_real(self.ar_gain),
            real(self.seconds),
            self.peak_entries.to_string(),
        ]
    }
}

/// Writes the header (if asked) and the records.
pub fn write_csv<W: Write>(out: W, header: bool, records: &[RunRecord]) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(out);
    if header {
        writer.write_record(CSV_HEADER)?;
    }
    for record in records {
        writer.write_record(record.fields())?;
    }
    writer.flush().map_err(csv::Error::from)?;
    Ok(())
}
