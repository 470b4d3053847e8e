//! Line-oriented session files.
//!
//! ```text
//! torus g=1 J=[[0,-1],[1,0]]
//! bundle L E=[[0,2],[-2,0]] chi=[0,0]
//! cohomology L
//! ```

use std::collections::BTreeMap;
use std::fmt;

use doubletorus_core::bundles::{make_bundle, LineBundle};
use doubletorus_core::exactlinalg::{IntMat, PolyMat, RatMat};
use doubletorus_core::tfold::NilfoldPolarization;
use doubletorus_core::torus::{make_torus, ComplexTorus};
use doubletorus_core::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::syntax::{Cursor, SyntaxError, SyntaxResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionError {
    pub kind: ErrorKind,
    /// One-based line number.
    pub line: usize,
    /// One-based column, for syntax errors.
    pub column: Option<usize>,
    pub message: String,
}

impl SessionError {
    fn semantic(line: usize, message: impl Into<String>) -> Self {
        SessionError { kind: ErrorKind::Semantic, line, column: None, message: message.into() }
    }

    fn syntax(line: usize, e: SyntaxError) -> Self {
        SessionError { kind: ErrorKind::Syntax, line, column: Some(e.column), message: e.message }
    }
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.column) {
            (ErrorKind::Syntax, Some(c)) => write!(f, "line {}, column {}: syntax error: {}", self.line, c, self.message),
            (ErrorKind::Syntax, None) => write!(f, "line {}: syntax error: {}", self.line, self.message),
            (ErrorKind::Semantic, _) => write!(f, "line {}: {}", self.line, self.message),
        }
    }
}

impl std::error::Error for SessionError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Cohomology(String),
    Hom(String, String),
    Lift(String),
    Intersect(String, String),
    ExtCheck(String, String),
    GcsCheck,
    TDuality { n: BigInt, w: BigInt, r: BigRational, alpha: BigRational },
    Nilfold { m: BigInt, polarization: NilfoldPolarization },
    Decompose(PolyMat),
}

impl Command {
    fn needs_torus(&self) -> bool {
        !matches!(self, Command::TDuality { .. } | Command::Nilfold { .. } | Command::Decompose(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub line: usize,
    pub command: Command,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    torus: Option<ComplexTorus>,
    bundles: BTreeMap<String, LineBundle>,
    commands: Vec<Statement>,
}

impl Session {
    pub fn torus(&self) -> Option<&ComplexTorus> {
        self.torus.as_ref()
    }

    pub fn bundle(&self, name: &str) -> Option<&LineBundle> {
        self.bundles.get(name)
    }

    pub fn bundle_names(&self) -> impl Iterator<Item = &str> {
        self.bundles.keys().map(String::as_str)
    }

    pub fn commands(&self) -> &[Statement] {
        &self.commands
    }
}

/// Values after `key=` in a statement.
enum Value {
    Int(BigInt),
    Rational(BigRational),
    Vector(Vec<BigRational>),
    Matrix(RatMat),
    Word(String),
}

#[derive(Clone, Copy)]
enum Kind {
    Int,
    Rational,
    Vector,
    Matrix,
    Word,
}

fn parse_args(c: &mut Cursor, keys: &[(&str, Kind)]) -> SyntaxResult<Vec<Value>> {
    let mut found: Vec<Option<Value>> = keys.iter().map(|_| None).collect();
    loop {
        c.skip_ws();
        if c.at_end() {
            break;
        }
        let at = c.clone();
        let key = c.word()?;
        let idx = match keys.iter().position(|(k, _)| *k == key) {
            Some(i) => i,
            None => return at.error(format!("unknown argument '{key}'")),
        };
        if found[idx].is_some() {
            return at.error(format!("duplicate argument '{key}'"));
        }
        c.expect('=')?;
        found[idx] = Some(match keys[idx].1 {
            Kind::Int => Value::Int(c.integer()?),
            Kind::Rational => Value::Rational(c.rational()?),
            Kind::Vector => Value::Vector(c.vector()?),
            Kind::Matrix => Value::Matrix(c.matrix()?),
            Kind::Word => Value::Word(c.word()?.to_string()),
        });
        if !c.at_end() && !c.peek().is_some_and(char::is_whitespace) {
            return c.error("expected whitespace between arguments");
        }
    }
    let mut out = Vec::with_capacity(keys.len());
    for ((key, _), v) in keys.iter().zip(found) {
        match v {
            Some(v) => out.push(v),
            None => return c.error(format!("missing argument '{key}'")),
        }
    }
    Ok(out)
}

fn name(c: &mut Cursor) -> SyntaxResult<String> {
    c.skip_ws();
    let at = c.clone();
    let w = c.word()?;
    if !w.starts_with(|ch: char| ch.is_ascii_alphabetic() || ch == '_') || w.contains(['-', '\'']) {
        return at.error(format!("invalid bundle name '{w}'"));
    }
    Ok(w.to_string())
}

fn names<const N: usize>(c: &mut Cursor) -> SyntaxResult<[String; N]> {
    let mut out: [String; N] = std::array::from_fn(|_| String::new());
    for slot in &mut out {
        *slot = name(c)?;
    }
    c.finish()?;
    Ok(out)
}

enum Parsed {
    Torus { g: BigInt, j: RatMat },
    Bundle { name: String, e: RatMat, chi: Vec<BigRational> },
    Command(Command),
}

fn parse_line(text: &str) -> SyntaxResult<Option<Parsed>> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    if c.at_end() {
        return Ok(None);
    }
    let at = c.clone();
    let keyword = c.word()?;
    let parsed = match keyword {
        "torus" => {
            let mut v = parse_args(&mut c, &[("g", Kind::Int), ("J", Kind::Matrix)])?.into_iter();
            match (v.next(), v.next()) {
                (Some(Value::Int(g)), Some(Value::Matrix(j))) => Parsed::Torus { g, j },
                _ => unreachable!("argument kinds follow the key table"),
            }
        }
        "bundle" => {
            let name = name(&mut c)?;
            let mut v = parse_args(&mut c, &[("E", Kind::Matrix), ("chi", Kind::Vector)])?.into_iter();
            match (v.next(), v.next()) {
                (Some(Value::Matrix(e)), Some(Value::Vector(chi))) => Parsed::Bundle { name, e, chi },
                _ => unreachable!("argument kinds follow the key table"),
            }
        }
        "cohomology" => {
            let [a] = names(&mut c)?;
            Parsed::Command(Command::Cohomology(a))
        }
        "hom" => {
            let [a, b] = names(&mut c)?;
            Parsed::Command(Command::Hom(a, b))
        }
        "lift" => {
            let [a] = names(&mut c)?;
            Parsed::Command(Command::Lift(a))
        }
        "intersect" => {
            let [a, b] = names(&mut c)?;
            Parsed::Command(Command::Intersect(a, b))
        }
        "ext-check" => {
            let [a, b] = names(&mut c)?;
            Parsed::Command(Command::ExtCheck(a, b))
        }
        "gcs-check" => {
            c.finish()?;
            Parsed::Command(Command::GcsCheck)
        }
        "tduality" => {
            let keys = [("n", Kind::Int), ("w", Kind::Int), ("R", Kind::Rational), ("a", Kind::Rational)];
            let mut v = parse_args(&mut c, &keys)?.into_iter();
            match (v.next(), v.next(), v.next(), v.next()) {
                (Some(Value::Int(n)), Some(Value::Int(w)), Some(Value::Rational(r)), Some(Value::Rational(alpha))) => {
                    Parsed::Command(Command::TDuality { n, w, r, alpha })
                }
                _ => unreachable!("argument kinds follow the key table"),
            }
        }
        "tfold" => {
            c.skip_ws();
            let at = c.clone();
            match c.word()? {
                "nilfold" => {
                    let mut v = parse_args(&mut c, &[("m", Kind::Int), ("polarization", Kind::Word)])?.into_iter();
                    let (m, p) = match (v.next(), v.next()) {
                        (Some(Value::Int(m)), Some(Value::Word(p))) => (m, p),
                        _ => unreachable!("argument kinds follow the key table"),
                    };
                    let polarization = match p.as_str() {
                        "G" => NilfoldPolarization::G,
                        "H" => NilfoldPolarization::H,
                        "T" => NilfoldPolarization::T,
                        other => return Err(SyntaxError { column: at.column(), message: format!("unknown polarization '{other}' (expected G, H or T)") }),
                    };
                    Parsed::Command(Command::Nilfold { m, polarization })
                }
                "decompose" => {
                    c.skip_ws();
                    let h = c.poly_matrix()?;
                    c.finish()?;
                    Parsed::Command(Command::Decompose(h))
                }
                other => return at.error(format!("unknown tfold command '{other}'")),
            }
        }
        other => return at.error(format!("unknown statement '{other}'")),
    };
    Ok(Some(parsed))
}

fn integral(m: &RatMat, what: &str, line: usize) -> Result<IntMat, SessionError> {
    m.to_int().ok_or_else(|| SessionError::semantic(line, format!("{what} must be integral")))
}

fn bundle_error(e: Error, line: usize) -> SessionError {
    let message = match e {
        Error::NotAlternating => "E not alternating".to_string(),
        Error::NotOneOne => "E is not of type (1,1) for J".to_string(),
        Error::DimensionMismatch(_) => "bundle data does not match the torus dimension".to_string(),
        other => other.to_string(),
    };
    SessionError::semantic(line, message)
}

/// Parses and validates a session; the first error wins.
pub fn parse_session(text: &str) -> Result<Session, SessionError> {
    let mut session = Session { torus: None, bundles: BTreeMap::new(), commands: Vec::new() };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let parsed = match parse_line(content).map_err(|e| SessionError::syntax(line, e))? {
            Some(p) => p,
            None => continue,
        };
        match parsed {
            Parsed::Torus { g, j } => {
                if session.torus.is_some() {
                    return Err(SessionError::semantic(line, "torus already declared"));
                }
                let g: usize = match usize::try_from(&g) {
                    Ok(g) if g > 0 => g,
                    _ => return Err(SessionError::semantic(line, "g must be a positive integer")),
                };
                let x = make_torus(g, j).map_err(|e| match e {
                    Error::NotComplexStructure => SessionError::semantic(line, "J is not a complex structure (J^2 != -I)"),
                    Error::DimensionMismatch(_) | Error::NotSquare => SessionError::semantic(line, "J must be 2g x 2g"),
                    other => SessionError::semantic(line, other.to_string()),
                })?;
                session.torus = Some(x);
            }
            Parsed::Bundle { name, e, chi } => {
                let x = session.torus.as_ref().ok_or_else(|| SessionError::semantic(line, "no torus declared"))?;
                if session.bundles.contains_key(&name) {
                    return Err(SessionError::semantic(line, format!("bundle '{name}' already declared")));
                }
                let e = integral(&e, "E", line)?;
                if !e.is_alternating() {
                    return Err(SessionError::semantic(line, "E not alternating"));
                }
                let l = make_bundle(x, e, chi).map_err(|err| bundle_error(err, line))?;
                session.bundles.insert(name, l);
            }
            Parsed::Command(command) => {
                if command.needs_torus() && session.torus.is_none() {
                    return Err(SessionError::semantic(line, "no torus declared"));
                }
                validate(&session, &command, line)?;
                session.commands.push(Statement { line, command });
            }
        }
    }
    Ok(session)
}

fn validate(session: &Session, command: &Command, line: usize) -> Result<(), SessionError> {
    let known = |n: &String| {
        if session.bundles.contains_key(n) {
            Ok(())
        } else {
            Err(SessionError::semantic(line, format!("unknown bundle '{n}'")))
        }
    };
    match command {
        Command::Cohomology(a) | Command::Lift(a) => known(a),
        Command::Hom(a, b) | Command::Intersect(a, b) | Command::ExtCheck(a, b) => known(a).and(known(b)),
        Command::GcsCheck => Ok(()),
        Command::TDuality { r, alpha, .. } => {
            if !r.is_positive() {
                Err(SessionError::semantic(line, "R must be positive"))
            } else if !alpha.is_positive() {
                Err(SessionError::semantic(line, "a must be positive"))
            } else {
                Ok(())
            }
        }
        Command::Nilfold { .. } => Ok(()),
        Command::Decompose(h) => {
            if h.rows() != h.cols() || h.rows() % 2 != 0 {
                Err(SessionError::semantic(line, "decompose expects a 2n x 2n matrix"))
            } else {
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_session() {
        let s = parse_session("torus g=1 J=[[0,-1],[1,0]]\nbundle L E=[[0,2],[-2,0]] chi=[0,0]\ncohomology L").unwrap();
        assert_eq!(s.commands().len(), 1);
        assert_eq!(s.commands()[0].command, Command::Cohomology("L".into()));
        assert_eq!(s.bundle_names().collect::<Vec<_>>(), vec!["L"]);
    }

    #[test]
    fn missing_torus() {
        let e = parse_session("bundle L E=[[0,2],[-2,0]] chi=[0,0]").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Semantic);
        assert_eq!(e.message, "no torus declared");
        assert_eq!(parse_session("gcs-check").unwrap_err().message, "no torus declared");
    }

    #[test]
    fn non_alternating() {
        let e = parse_session("torus g=1 J=[[0,-1],[1,0]]\nbundle L E=[[0,1],[1,0]] chi=[0,0]").unwrap_err();
        assert_eq!(e.message, "E not alternating");
        assert_eq!(e.line, 2);
    }

    #[test]
    fn comments_and_blank_lines() {
        let s = parse_session("# header\n\ntorus g=1 J=[[0,-1],[1,0]] # trailing\n  gcs-check\n").unwrap();
        assert_eq!(s.commands().len(), 1);
    }

    #[test]
    fn torus_free_commands() {
        let s = parse_session("tduality n=1 w=0 R=2 a=1\ntfold nilfold m=1 polarization=T\ntfold decompose [[1,0],[0,1]]").unwrap();
        assert_eq!(s.commands().len(), 3);
        assert!(s.torus().is_none());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_session("torus g=1 J=[[0,-1],[1,0]]\nbundle L E=[[0,2],[-2,0] chi=[0,0]").unwrap_err();
        assert_eq!(e.kind, ErrorKind::Syntax);
        assert_eq!(e.line, 2);
        assert_eq!(e.column, Some(26));
        let e = parse_session("frobnicate").unwrap_err();
        assert_eq!((e.line, e.column), (1, Some(1)));
        let e = parse_session("tfold nilfold m=1 polarization=X").unwrap_err();
        assert!(e.message.contains("unknown polarization"));
    }

    #[test]
    fn semantic_errors() {
        let t = "torus g=1 J=[[0,-1],[1,0]]\n";
        assert_eq!(parse_session(&format!("{t}cohomology M")).unwrap_err().message, "unknown bundle 'M'");
        let dup = format!("{t}bundle L E=[[0,0],[0,0]] chi=[0,0]\nbundle L E=[[0,0],[0,0]] chi=[0,0]");
        assert_eq!(parse_session(&dup).unwrap_err().message, "bundle 'L' already declared");
        assert_eq!(parse_session(&format!("{t}{t}")).unwrap_err().message, "torus already declared");
        assert!(parse_session("torus g=1 J=[[1,0],[0,1]]").unwrap_err().message.contains("complex structure"));
        assert!(parse_session(&format!("{t}bundle L E=[[0,1/2],[-1/2,0]] chi=[0,0]")).unwrap_err().message.contains("integral"));
        assert_eq!(parse_session("tduality n=1 w=0 R=0 a=1").unwrap_err().message, "R must be positive");
        let g2 = "torus g=2 J=[[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]\nbundle L E=[[0,0,1,0],[0,0,0,0],[-1,0,0,0],[0,0,0,0]] chi=[0,0,0,0]";
        assert!(parse_session(g2).unwrap_err().message.contains("(1,1)"));
    }
}
