//! Machine-readable output: one line of `key=value` pairs separated by single
//! spaces. Keys are `[A-Za-z0-9_-]+`; values are nonempty and contain no
//! whitespace.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RecordError {
    #[error("empty record")]
    Empty,
    #[error("field {0} has no '='")]
    MissingEquals(usize),
    #[error("field {0} has an invalid key")]
    InvalidKey(usize),
    #[error("field {0} has an empty value")]
    EmptyValue(usize),
    #[error("fields must be separated by single spaces")]
    Separator,
}

fn valid_key(k: &str) -> bool {
    !k.is_empty() && k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn valid_value(v: &str) -> bool {
    !v.is_empty() && !v.chars().any(char::is_whitespace)
}

impl Record {
    pub fn new(cmd: &str) -> Self {
        Record::default().with("cmd", cmd)
    }

    /// Appends a field. Whitespace in the rendered value is removed so the
    /// line stays splittable.
    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl fmt::Display) {
        assert!(valid_key(key), "invalid record key {key:?}");
        let v: String = value.to_string().chars().filter(|c| !c.is_whitespace()).collect();
        self.fields.push((key.to_string(), if v.is_empty() { "-".to_string() } else { v }));
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl FromStr for Record {
    type Err = RecordError;

    fn from_str(line: &str) -> Result<Self, RecordError> {
        if line.is_empty() {
            return Err(RecordError::Empty);
        }
        let mut fields = Vec::new();
        for (i, part) in line.split(' ').enumerate() {
            if part.is_empty() {
                return Err(RecordError::Separator);
            }
            let (k, v) = part.split_once('=').ok_or(RecordError::MissingEquals(i))?;
            if !valid_key(k) {
                return Err(RecordError::InvalidKey(i));
            }
            if !valid_value(v) {
                return Err(if v.is_empty() { RecordError::EmptyValue(i) } else { RecordError::Separator });
            }
            fields.push((k.to_string(), v.to_string()));
        }
        Ok(Record { fields })
    }
}

pub fn parse_record(line: &str) -> Result<Record, RecordError> {
    line.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Record::new("cohomology").with("bundle", "L").with("h", "[2, 0]");
        let line = r.to_string();
        assert_eq!(line, "cmd=cohomology bundle=L h=[2,0]");
        assert_eq!(parse_record(&line).unwrap(), r);
        assert_eq!(parse_record(&line).unwrap().get("h"), Some("[2,0]"));
    }

    #[test]
    fn values_may_contain_equals() {
        let r = parse_record("a=b=c").unwrap();
        assert_eq!(r.get("a"), Some("b=c"));
        assert_eq!(r.to_string(), "a=b=c");
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_record(""), Err(RecordError::Empty));
        assert_eq!(parse_record("a=1  b=2"), Err(RecordError::Separator));
        assert_eq!(parse_record("a"), Err(RecordError::MissingEquals(0)));
        assert_eq!(parse_record("a=1 b="), Err(RecordError::EmptyValue(1)));
        assert_eq!(parse_record("a b=1"), Err(RecordError::MissingEquals(0)));
        assert_eq!(parse_record("a.b=1"), Err(RecordError::InvalidKey(0)));
        assert_eq!(parse_record("a=1\tb"), Err(RecordError::Separator));
    }
}
