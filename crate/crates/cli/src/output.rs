//! Report documents and their text and JSON renderings.
//!
//! Every report serializes to JSON with a fixed field order, so identical
//! runs print identical bytes once timing is suppressed (`--no-timing`).
//! Exact rationals are authoritative; decimals are renderings at
//! [`DECIMAL_SIG`] significant digits.

use std::fmt::Write as _;
use std::time::Duration;

use anyhow::Result;
use ffd_core::{decimal_string, Design, Encoding, Rat};
use serde::Serialize;

/// Significant digits used for every decimal rendering.
pub const DECIMAL_SIG: usize = 6;

/// An exact rational alongside its decimal rendering.
#[derive(Clone, Serialize, Debug)]
pub struct RatOut {
    pub num: String,
    pub den: String,
    pub decimal: String,
}

impl RatOut {
    pub fn new(value: &Rat) -> Self {
        RatOut {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
            decimal: decimal_string(value, DECIMAL_SIG),
        }
    }

    /// `num/den`, or just `num` for integers.
    pub fn exact(&self) -> String {
        if self.den == "1" {
            self.num.clone()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

/// Milliseconds with microsecond resolution, e.g. `"317.909"`.
pub fn elapsed_ms(elapsed: Duration) -> String {
    format!("{:.3}", elapsed.as_secs_f64() * 1e3)
}

/// A design's rows in the requested text encoding.
pub fn design_rows(design: &Design, encoding: Encoding) -> Vec<String> {
    design
        .to_text(encoding)
        .lines()
        .map(str::to_string)
        .collect()
}

/// Prints a report as pretty JSON or as the prepared text rendering.
pub fn emit<T: Serialize>(json: bool, report: &T, text: String) -> Result<()> {
    if json {
        let mut payload = serde_json::to_string_pretty(report)?;
        payload.push('\n');
        write_stdout(&payload)
    } else {
        write_stdout(&text)
    }
}

/// Writes to stdout, treating a broken pipe (e.g. `| head`) as a normal
/// end of output rather than an error.
pub fn write_stdout(payload: &str) -> Result<()> {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    match out.write_all(payload.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(err) if err.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(err) => Err(err.into()),
    }
}

#[derive(Serialize, Debug)]
pub struct AfdOut {
    pub affinely_full_dimensional: bool,
    pub affine_dimension: usize,
}

#[derive(Serialize, Debug)]
pub struct CriterionOut {
    pub criterion: String,
    pub value: RatOut,
    pub provenance: String,
}

#[derive(Serialize, Debug)]
pub struct EvalReport {
    pub digest: String,
    pub runs: usize,
    pub factors: usize,
    pub distinct_rows: bool,
    pub design: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<RatOut>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gma_key: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub afd: Option<AfdOut>,
    pub criteria: Vec<CriterionOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<String>,
}

impl EvalReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digest         {}", self.digest);
        let _ = writeln!(out, "runs           {}", self.runs);
        let _ = writeln!(out, "factors        {}", self.factors);
        let _ = writeln!(out, "distinct rows  {}", self.distinct_rows);
        out.push_str("design\n");
        for row in &self.design {
            let _ = writeln!(out, "  {row}");
        }
        if let Some(spectrum) = &self.spectrum {
            out.push_str("spectrum\n");
            for (s, b) in spectrum.iter().enumerate() {
                let _ = writeln!(out, "  B{:<3} {:<14} {}", s + 1, b.exact(), b.decimal);
            }
        }
        if let Some(key) = &self.gma_key {
            let _ = writeln!(out, "gma key\n  ({})", key.join(", "));
        }
        if let Some(afd) = &self.afd {
            out.push_str("afd\n");
            let _ = writeln!(
                out,
                "  affinely full-dimensional  {}",
                afd.affinely_full_dimensional
            );
            let _ = writeln!(out, "  affine dimension           {}", afd.affine_dimension);
        }
        if !self.criteria.is_empty() {
            out.push_str("criteria\n");
            out.push_str(&criteria_table(&self.criteria));
        }
        push_elapsed(&mut out, &self.elapsed_ms);
        out
    }
}

fn criteria_table(criteria: &[CriterionOut]) -> String {
    let label_w = criteria
        .iter()
        .map(|c| c.criterion.len())
        .max()
        .unwrap_or(0)
        .max(8);
    let exact_w = criteria
        .iter()
        .map(|c| c.value.exact().len())
        .max()
        .unwrap_or(0)
        .max(6);
    let mut out = String::new();
    for c in criteria {
        let _ = writeln!(
            out,
            "  {:<label_w$}  {:<exact_w$}  {:<10}  {}",
            c.criterion,
            c.value.exact(),
            c.value.decimal,
            c.provenance
        );
    }
    out
}

fn push_elapsed(out: &mut String, elapsed_ms: &Option<String>) {
    if let Some(ms) = elapsed_ms {
        let _ = writeln!(out, "elapsed        {ms} ms");
    }
}

#[derive(Serialize, Debug)]
pub struct OracleReport {
    pub digest: String,
    pub runs: usize,
    pub factors: usize,
    pub scenario: String,
    pub support: String,
    pub oracle: RatOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<RatOut>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<String>,
}

impl OracleReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digest         {}", self.digest);
        let _ = writeln!(out, "runs           {}", self.runs);
        let _ = writeln!(out, "factors        {}", self.factors);
        let _ = writeln!(out, "scenario       {}", self.scenario);
        let _ = writeln!(out, "support        {} models", self.support);
        let _ = writeln!(
            out,
            "oracle         {}  ({})",
            self.oracle.exact(),
            self.oracle.decimal
        );
        if let Some(cf) = &self.closed_form {
            let _ = writeln!(out, "closed form    {}  ({})", cf.exact(), cf.decimal);
        }
        let _ = writeln!(out, "verdict        {}", self.verdict);
        push_elapsed(&mut out, &self.elapsed_ms);
        out
    }
}

#[derive(Serialize, Debug)]
pub struct ClassOut {
    /// Canonical row codes, ascending; bit `j` set means factor `j` at `−1`.
    pub codes: Vec<u16>,
    pub design: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct SearchReport {
    pub criterion: String,
    pub method: String,
    pub runs: usize,
    pub factors: usize,
    pub distinct_rows: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restarts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub value: RatOut,
    /// Witness: the first optimal class, in canonical row order.
    pub design: Vec<String>,
    /// Every optimal canonical class found.
    pub classes: Vec<ClassOut>,
    pub visited: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<String>,
}

impl SearchReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "criterion      {}", self.criterion);
        let _ = writeln!(out, "method         {}", self.method);
        let _ = writeln!(
            out,
            "space          {} runs × {} factors, repeats {}",
            self.runs,
            self.factors,
            if self.distinct_rows {
                "excluded"
            } else {
                "allowed"
            }
        );
        if let Some(restarts) = self.restarts {
            let _ = writeln!(out, "restarts       {restarts}");
        }
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed           {seed}");
        }
        let _ = writeln!(
            out,
            "value          {}  ({})",
            self.value.exact(),
            self.value.decimal
        );
        let _ = writeln!(out, "evaluations    {}", self.visited);
        let _ = writeln!(out, "classes        {}", self.classes.len());
        for (idx, class) in self.classes.iter().enumerate() {
            let codes = class
                .codes
                .iter()
                .map(u16::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(out, "class {idx} (codes {codes})");
            for row in &class.design {
                let _ = writeln!(out, "  {row}");
            }
        }
        for line in &self.trace {
            let _ = writeln!(out, "trace          {line}");
        }
        push_elapsed(&mut out, &self.elapsed_ms);
        out
    }
}

#[derive(Serialize, Debug)]
pub struct VerifyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<String>,
}

impl VerifyReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let _ = writeln!(
                out,
                "VERIFY {}: {} ({})",
                check.name,
                if check.passed { "PASS" } else { "FAIL" },
                check.detail
            );
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "verify: {passed}/{} checks passed", self.checks.len());
        push_elapsed(&mut out, &self.elapsed_ms);
        out
    }
}
