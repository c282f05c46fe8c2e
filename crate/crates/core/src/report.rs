//! Structured validation reports shared by every checker.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::scalar::{fmt_slice, Field};
use crate::tensor::{LinMap, MultiVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexValue {
    pub name: String,
    pub value: usize,
}

/// The first failing instance of an identity, with both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub at: Vec<IndexValue>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: Status,
    /// Number of index tuples the identity was evaluated on.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_ms: Option<f64>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn skipped(id: &str, statement: &str, reason: &str) -> Self {
        Check {
            id: id.into(),
            statement: statement.into(),
            status: Status::Skipped,
            cases: 0,
            counterexample: None,
            note: Some(reason.into()),
            wall_ms: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    #[serde(default)]
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), notes: Vec::new(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
        self.checks.extend(other.checks);
    }

    pub fn strip_timings(&mut self) {
        for c in &mut self.checks {
            c.wall_ms = None;
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {}", self.suite);
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(s, "{status:4} {} ({} cases)", c.id, c.cases);
            if let Some(ms) = c.wall_ms {
                let _ = write!(s, " [{ms:.1} ms]");
            }
            let _ = writeln!(s);
            if let Some(n) = &c.note {
                let _ = writeln!(s, "     note: {n}");
            }
            if let Some(ce) = &c.counterexample {
                let at: Vec<String> = ce.at.iter().map(|iv| format!("{}={}", iv.name, iv.value)).collect();
                let _ = writeln!(s, "     at {}", at.join(", "));
                let _ = writeln!(s, "     lhs {}", ce.lhs);
                let _ = writeln!(s, "     rhs {}", ce.rhs);
            }
        }
        s
    }
}

/// Outcome of evaluating one instance of an identity: `Ok(None)` when it
/// holds, `Ok(Some((lhs, rhs)))` when the sides differ. An error counts as a
/// failure.
pub type Verdict = crate::Result<Option<(String, String)>>;

/// Evaluate an identity on every index tuple in `cases` (in parallel) and
/// keep the first failure in the given order.
pub fn check_cases<E>(id: &str, statement: &str, names: &[&str], cases: Vec<Vec<usize>>, eval: E) -> Check
where
    E: Fn(&[usize]) -> Verdict + Sync,
{
    let start = Instant::now();
    let failure = cases.par_iter().find_map_first(|c| {
        let sides = match eval(c) {
            Ok(v) => v,
            Err(e) => Some((format!("evaluation error: {e}"), String::new())),
        };
        sides.map(|s| (c.clone(), s))
    });
    let wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    let counterexample = failure.map(|(idx, (lhs, rhs))| Counterexample {
        at: names.iter().zip(idx).map(|(n, v)| IndexValue { name: n.to_string(), value: v }).collect(),
        lhs,
        rhs,
    });
    Check {
        id: id.into(),
        statement: statement.into(),
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        cases: cases.len(),
        counterexample,
        note: None,
        wall_ms,
    }
}

/// All index tuples in `0..b_1 x ... x 0..b_m`, lexicographically.
pub fn index_tuples(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * b);
        for t in &out {
            for i in 0..b {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

pub fn render_multivec<F: Field>(v: &MultiVec<F>) -> String {
    let shape: Vec<String> = v.shape().iter().map(|d| d.to_string()).collect();
    format!("[{}] {}", shape.join("x"), fmt_slice(v.data()))
}

pub fn render_map<F: Field>(m: &LinMap<F>) -> String {
    format!("[{}x{}] {}", m.rows(), m.cols(), fmt_slice(m.data()))
}

pub fn compare_vecs<F: Field>(lhs: &[F], rhs: &[F]) -> Option<(String, String)> {
    (lhs != rhs).then(|| (fmt_slice(lhs), fmt_slice(rhs)))
}

pub fn compare_multivecs<F: Field>(lhs: &MultiVec<F>, rhs: &MultiVec<F>) -> Option<(String, String)> {
    (lhs != rhs).then(|| (render_multivec(lhs), render_multivec(rhs)))
}

pub fn compare_maps<F: Field>(lhs: &LinMap<F>, rhs: &LinMap<F>) -> Option<(String, String)> {
    (lhs != rhs).then(|| (render_map(lhs), render_map(rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_are_lexicographic() {
        assert_eq!(index_tuples(&[2, 2]), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(index_tuples(&[]), vec![Vec::<usize>::new()]);
        assert!(index_tuples(&[3, 0]).is_empty());
    }

    #[test]
    fn first_failure_in_order() {
        let cases = index_tuples(&[10]);
        let c = check_cases("t", "x < 4", &["x"], cases, |i| Ok((i[0] >= 4).then(|| (i[0].to_string(), "<4".into()))));
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.counterexample.unwrap().at[0].value, 4);
    }
}
