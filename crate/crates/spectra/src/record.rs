//! Self-describing result records.

use indexmap::IndexMap;
use spectra_core::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Bool(bool),
    Text(String),
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        i64::try_from(v).map_or(Value::Real(v as f64), Value::Int)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::from(v as u64)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(i64::from(v))
    }
}

impl From<i32> for Value {
    fn from(v: i32) -> Self {
        Value::Int(i64::from(v))
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Real(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

/// One output row. Field order is insertion order, which is fixed per
/// command, so reruns serialize identically.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub id: String,
    pub fields: IndexMap<String, Value>,
}

impl Record {
    pub fn new(id: impl Into<String>) -> Self {
        Record {
            id: id.into(),
            fields: IndexMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.set(key, value);
        self
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }

    /// Stores `key_re` and `key_im`.
    pub fn complex(mut self, key: &str, z: Complex64) -> Self {
        self.set(&format!("{key}_re"), z.re);
        self.set(&format!("{key}_im"), z.im);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn real(&self, key: &str) -> Option<f64> {
        match self.fields.get(key)? {
            Value::Real(v) => Some(*v),
            Value::Int(v) => Some(*v as f64),
            _ => None,
        }
    }
}

/// Builds records with ids `<command>-<index>`.
#[derive(Debug)]
pub struct RecordSet {
    command: String,
    pub records: Vec<Record>,
}

impl RecordSet {
    pub fn new(command: &str) -> Self {
        RecordSet {
            command: command.to_string(),
            records: Vec::new(),
        }
    }

    pub fn next(&self) -> Record {
        Record::new(format!("{}-{}", self.command, self.records.len()))
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }
}
