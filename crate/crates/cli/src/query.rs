//! Structured output. Field order is fixed by declaration order and every
//! number is an integer, so a document decodes and re-encodes to the same
//! bytes.

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryResult {
    pub schema: String,
    pub command: String,
    pub input: Input,
    pub result: Payload,
    pub trace: Trace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    pub n: usize,
    pub k: usize,
    pub rims: Vec<Vec<usize>>,
    pub degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub path: String,
    pub rotation: Option<usize>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Period {
        period: Option<u64>,
        projective: bool,
    },
    Ext {
        degree: u32,
        shape: String,
        exponents: Vec<u32>,
        dimension: u64,
        context: Vec<usize>,
    },
    Word {
        raw: String,
        reduced: String,
        s: usize,
        boxes: Vec<[usize; 2]>,
        letters: Vec<LetterSpan>,
    },
    Matrix {
        name: String,
        rows: Vec<usize>,
        cols: Vec<usize>,
        entries: Vec<MatrixEntry>,
    },
    Table {
        rims: Vec<Vec<usize>>,
        dims: Vec<Vec<u64>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterSpan {
    pub kind: String,
    pub start_edge: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub arrow: Option<String>,
    pub exponent: u32,
}

impl QueryResult {
    pub fn new(command: &str, input: Input, result: Payload, trace: Trace) -> Self {
        QueryResult {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            input,
            result,
            trace,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data always serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
