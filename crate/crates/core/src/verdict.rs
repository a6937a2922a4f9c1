//! Outcome of checking one claim on one ring.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Element {
        index: Elem,
        label: String,
    },
    Pair {
        a: Elem,
        b: Elem,
        labels: [String; 2],
    },
    Cycle {
        vertices: Vec<Elem>,
        labels: Vec<String>,
    },
    /// A computed quantity disagreeing with the claimed one, pinned to a
    /// representative element of the ring.
    Value {
        quantity: String,
        expected: String,
        actual: String,
        at: Elem,
        label: String,
    },
}

impl Witness {
    pub fn element(r: &Ring, x: Elem) -> Self {
        Witness::Element {
            index: x,
            label: r.label(x),
        }
    }

    pub fn pair(r: &Ring, a: Elem, b: Elem) -> Self {
        Witness::Pair {
            a,
            b,
            labels: [r.label(a), r.label(b)],
        }
    }

    pub fn cycle(r: &Ring, vertices: Vec<Elem>) -> Self {
        let labels = vertices.iter().map(|&v| r.label(v)).collect();
        Witness::Cycle { vertices, labels }
    }

    pub fn value(
        r: &Ring,
        quantity: &str,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        at: Elem,
    ) -> Self {
        Witness::Value {
            quantity: quantity.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            at,
            label: r.label(at),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element { label, .. } => write!(f, "element {label}"),
            Witness::Pair { labels, .. } => write!(f, "pair {} / {}", labels[0], labels[1]),
            Witness::Cycle { labels, .. } => write!(f, "cycle {}", labels.join(" – ")),
            Witness::Value {
                quantity,
                expected,
                actual,
                label,
                ..
            } => {
                write!(
                    f,
                    "{quantity}: expected {expected}, got {actual} (at {label})"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Mismatch { witness: Witness, note: String },
    Skipped { reason: String },
}

impl Verdict {
    pub fn mismatch(witness: Witness, note: impl Into<String>) -> Self {
        Verdict::Mismatch {
            witness,
            note: note.into(),
        }
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Verdict::Skipped {
            reason: reason.into(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self, Verdict::Mismatch { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Verdict::Skipped { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Mismatch { witness, note } => write!(f, "mismatch: {witness} ({note})"),
            Verdict::Skipped { reason } => write!(f, "skipped: {reason}"),
        }
    }
}
