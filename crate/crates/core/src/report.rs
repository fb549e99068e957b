//! Check outcomes and the witnesses they carry.

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::model::{Bounded, PairSeq, Pred, Seq, SeqList, SeqPair};

/// A value bound to a quantified variable in a witness.
///
/// Sequences use the same comma separated encoding as the command line
/// `--input` flag, so a reported counterexample can be fed straight back in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Value {
    Seq(Seq),
    /// A pair sequence, stored as its two projections.
    Pairs {
        fst: Seq,
        snd: Seq,
    },
    SeqPair {
        fst: Seq,
        snd: Seq,
    },
    Bounded {
        n: usize,
        seq: Seq,
    },
    SeqList(Vec<Seq>),
    Pred(Pred),
    Nat(usize),
    Bool(bool),
    Label(String),
}

impl Value {
    pub fn as_seq(&self) -> Option<&Seq> {
        match self {
            Value::Seq(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_pred(&self) -> Option<Pred> {
        match self {
            Value::Pred(p) => Some(*p),
            _ => None,
        }
    }

    pub fn as_nat(&self) -> Option<usize> {
        match self {
            Value::Nat(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_seq_list(&self) -> Option<SeqList> {
        match self {
            Value::SeqList(l) => Some(SeqList(l.clone())),
            _ => None,
        }
    }

    /// Rebuilds a pair sequence; `None` if the projections differ in length.
    pub fn as_pairs(&self) -> Option<PairSeq> {
        match self {
            Value::Pairs { fst, snd } if fst.len() == snd.len() => {
                Some(fst.iter().copied().zip(snd.iter().copied()).collect())
            }
            _ => None,
        }
    }

    pub fn as_seq_pair(&self) -> Option<SeqPair> {
        match self {
            Value::SeqPair { fst, snd } => Some(SeqPair(fst.clone(), snd.clone())),
            _ => None,
        }
    }

    pub fn as_bounded(&self) -> Option<Bounded> {
        match self {
            Value::Bounded { n, seq } => Some(Bounded::new(*n, seq.clone())),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Seq(s) => write!(f, "[{s}]"),
            Value::Pairs { fst, snd } => {
                let pairs: PairSeq = fst.iter().copied().zip(snd.iter().copied()).collect();
                write!(f, "{pairs}")
            }
            Value::SeqPair { fst, snd } => write!(f, "([{fst}], [{snd}])"),
            Value::Bounded { n, seq } => write!(f, "({n}, [{seq}])"),
            Value::SeqList(l) => write!(f, "{}", SeqList(l.clone())),
            Value::Pred(p) => write!(f, "{p}"),
            Value::Nat(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Label(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub name: String,
    #[serde(flatten)]
    pub value: Value,
}

impl Binding {
    pub fn new(name: impl Into<String>, value: Value) -> Self {
        Binding {
            name: name.into(),
            value,
        }
    }
}

/// A concrete assignment of the quantified variables that violates a law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// The (sub-)law the assignment violates.
    pub law: String,
    pub bindings: Vec<Binding>,
}

impl Witness {
    pub fn new(law: impl Into<String>) -> Self {
        Witness {
            law: law.into(),
            bindings: Vec::new(),
        }
    }

    pub fn bind(mut self, name: impl Into<String>, value: Value) -> Self {
        self.bindings.push(Binding::new(name, value));
        self
    }

    pub fn bind_all(mut self, bindings: impl IntoIterator<Item = Binding>) -> Self {
        self.bindings.extend(bindings);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings
            .iter()
            .find(|b| b.name == name)
            .map(|b| &b.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// Outcome of one exhaustive check.
///
/// `cases_checked` counts quantified assignments in enumeration order up to
/// and including the witness, so it does not depend on how the work was
/// split between workers. `evaluations` is what the check charged against
/// its budget.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub law: String,
    pub verdict: Verdict,
    pub cases_checked: u64,
    pub counterexample: Option<Witness>,
    pub evaluations: u64,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn pass(law: impl Into<String>, cases_checked: u64) -> Self {
        CheckReport {
            law: law.into(),
            verdict: Verdict::Pass,
            cases_checked,
            counterexample: None,
            evaluations: 0,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(law: impl Into<String>, cases_checked: u64, witness: Witness) -> Self {
        CheckReport {
            verdict: Verdict::Fail,
            counterexample: Some(witness),
            ..CheckReport::pass(law, cases_checked)
        }
    }

    pub fn not_applicable(law: impl Into<String>, cases_checked: u64, witness: Witness) -> Self {
        CheckReport {
            verdict: Verdict::NotApplicable,
            counterexample: Some(witness),
            ..CheckReport::pass(law, cases_checked)
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub(crate) fn charged(mut self, evaluations: u64) -> Self {
        self.evaluations = evaluations;
        self
    }

    pub(crate) fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    /// Prepends bindings to the witness, e.g. the predicate a per-predicate
    /// sub-check was run for.
    pub fn with_context(mut self, context: &[Binding]) -> Self {
        if let Some(w) = self.counterexample.as_mut() {
            let mut bindings = context.to_vec();
            bindings.append(&mut w.bindings);
            w.bindings = bindings;
        }
        self
    }

    /// Sequential composition of sub-checks: the first failing report
    /// decides the verdict (otherwise the first not-applicable one), and
    /// cases are summed up to that point.
    pub fn combine(law: impl Into<String>, parts: impl IntoIterator<Item = CheckReport>) -> Self {
        let mut out = CheckReport::pass(law, 0);
        let mut pending_na: Option<CheckReport> = None;
        for part in parts {
            out.cases_checked += part.cases_checked;
            out.evaluations += part.evaluations;
            out.elapsed += part.elapsed;
            match part.verdict {
                Verdict::Fail => {
                    out.verdict = Verdict::Fail;
                    out.counterexample = part.counterexample;
                    return out;
                }
                Verdict::NotApplicable if pending_na.is_none() => pending_na = Some(part),
                _ => {}
            }
        }
        if let Some(na) = pending_na {
            out.verdict = Verdict::NotApplicable;
            out.counterexample = na.counterexample;
        }
        out
    }

    /// Equality ignoring wall-clock time.
    pub fn same_outcome(&self, other: &CheckReport) -> bool {
        self.law == other.law
            && self.verdict == other.verdict
            && self.cases_checked == other.cases_checked
            && self.counterexample == other.counterexample
    }
}
