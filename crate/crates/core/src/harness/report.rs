use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// Result of one check evaluated over many inputs. Merging is associative, and
/// the counterexample kept is the earliest one in input order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub examined: u64,
    pub failed: u64,
    pub counterexample: Option<String>,
}

impl Tally {
    pub fn pass() -> Self {
        Tally {
            examined: 1,
            ..Tally::default()
        }
    }

    pub fn fail(counterexample: impl Into<String>) -> Self {
        Tally {
            examined: 1,
            failed: 1,
            counterexample: Some(counterexample.into()),
        }
    }

    /// `pass()` if `ok`, otherwise a failure described by `describe`.
    pub fn check(ok: bool, describe: impl FnOnce() -> String) -> Self {
        if ok {
            Tally::pass()
        } else {
            Tally::fail(describe())
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.examined += other.examined;
        self.failed += other.failed;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }
}

impl std::iter::Sum for Tally {
    fn sum<I: Iterator<Item = Tally>>(iter: I) -> Tally {
        iter.fold(Tally::default(), Tally::merge)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Whether a failure should fail the run.
    pub gating: bool,
    pub examined: u64,
    pub passed: u64,
    pub failed: u64,
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, gating: bool, tally: Tally) -> Self {
        CheckReport {
            name: name.into(),
            gating,
            examined: tally.examined,
            passed: tally.examined - tally.failed,
            failed: tally.failed,
            counterexample: tally.counterexample,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub schema: &'static str,
    pub checks: Vec<CheckReport>,
    pub words_examined: u64,
    #[serde(serialize_with = "as_seconds")]
    pub wall_time: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SweepReport {
    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn gating_failed(&self) -> bool {
        self.checks.iter().any(|c| c.gating && !c.ok())
    }

    /// JSON without timing, so identical runs give identical bytes.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Stable<'a> {
            schema: &'a str,
            checks: &'a [CheckReport],
            words_examined: u64,
        }
        serde_json::to_string(&Stable {
            schema: self.schema,
            checks: &self.checks,
            words_examined: self.words_examined,
        })
        .expect("report serializes")
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(5).max(5);
        writeln!(
            f,
            "{:<width$}  {:>10}  {:>8}  {:<6}  counterexample",
            "check", "examined", "failed", "gating"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<width$}  {:>10}  {:>8}  {:<6}  {}",
                c.name,
                c.examined,
                c.failed,
                if c.gating { "yes" } else { "no" },
                c.counterexample.as_deref().unwrap_or("-")
            )?;
        }
        write!(f, "words examined: {}", self.words_examined)
    }
}
