//! Value syntax shared by session statements: exact rationals, bracketed
//! vectors and matrices, and univariate polynomials in `x`.

use std::fmt;

use doubletorus_core::exactlinalg::{Poly, PolyMat, RatMat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Largest polynomial degree accepted by the parser.
pub const MAX_DEGREE: usize = 256;
const MAX_DEPTH: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// One-based character column within the parsed text.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for SyntaxError {}

pub type SyntaxResult<T> = Result<T, SyntaxError>;

#[derive(Clone, Debug)]
pub struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    pub fn error<T>(&self, message: impl Into<String>) -> SyntaxResult<T> {
        Err(SyntaxError { column: self.column(), message: message.into() })
    }

    pub fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> SyntaxResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{c}', found '{found}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.bump();
        }
        &self.text[start..self.pos]
    }

    /// A keyword or key: letters, digits, `_`, `-` and `'`.
    pub fn word(&mut self) -> SyntaxResult<&'a str> {
        let w = self.take_while(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '\''));
        if w.is_empty() {
            return match self.peek() {
                Some(c) => self.error(format!("unexpected '{c}'")),
                None => self.error("unexpected end of input"),
            };
        }
        Ok(w)
    }

    pub fn finish(&mut self) -> SyntaxResult<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected trailing '{c}'")),
        }
    }

    fn digits(&mut self) -> SyntaxResult<BigInt> {
        let d = self.take_while(|c| c.is_ascii_digit());
        if d.is_empty() {
            return self.error("expected a digit");
        }
        Ok(d.parse().expect("ascii digits"))
    }

    pub fn integer(&mut self) -> SyntaxResult<BigInt> {
        let neg = self.eat('-');
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    pub fn rational(&mut self) -> SyntaxResult<BigRational> {
        let p = self.integer()?;
        if self.eat('/') {
            let at = self.clone();
            let q = self.digits()?;
            if q.is_zero() {
                return at.error("zero denominator");
            }
            return Ok(BigRational::new(p, q));
        }
        Ok(BigRational::from_integer(p))
    }

    fn bracketed<T>(&mut self, what: &str, mut item: impl FnMut(&mut Self) -> SyntaxResult<T>) -> SyntaxResult<Vec<T>> {
        self.expect('[')?;
        self.skip_ws();
        if self.peek() == Some(']') {
            return self.error(format!("empty {what}"));
        }
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            out.push(item(self)?);
            self.skip_ws();
            if self.eat(']') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    pub fn vector(&mut self) -> SyntaxResult<Vec<BigRational>> {
        self.bracketed("vector", Cursor::rational)
    }

    fn rows<T>(&mut self, mut entry: impl FnMut(&mut Self) -> SyntaxResult<T>) -> SyntaxResult<Vec<Vec<T>>> {
        let start = self.clone();
        let rows = self.bracketed("matrix", |c| c.bracketed("row", &mut entry))?;
        if rows.iter().any(|r| r.len() != rows[0].len()) {
            return start.error("rows have different lengths");
        }
        Ok(rows)
    }

    pub fn matrix(&mut self) -> SyntaxResult<RatMat> {
        let rows = self.rows(Cursor::rational)?;
        Ok(RatMat::from_rows(rows).expect("validated rectangular rows"))
    }

    pub fn poly_matrix(&mut self) -> SyntaxResult<PolyMat> {
        let rows = self.rows(Cursor::poly)?;
        Ok(PolyMat::from_rows(rows).expect("validated rectangular rows"))
    }

    /// `expr := [+|-] term ((+|-) term)*`, `term := power (* power)*`,
    /// `power := atom [^ n]`, `atom := rational | x | ( expr )`.
    pub fn poly(&mut self) -> SyntaxResult<Poly> {
        self.expr(0)
    }

    fn expr(&mut self, depth: usize) -> SyntaxResult<Poly> {
        if depth > MAX_DEPTH {
            return self.error("expression nested too deeply");
        }
        self.skip_ws();
        let mut acc = if self.eat('-') {
            -self.term(depth)?
        } else {
            self.eat('+');
            self.term(depth)?
        };
        loop {
            self.skip_ws();
            if self.eat('+') {
                acc = acc + self.term(depth)?;
            } else if self.eat('-') {
                acc = acc - self.term(depth)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, depth: usize) -> SyntaxResult<Poly> {
        let mut acc = self.power(depth)?;
        loop {
            self.skip_ws();
            if !self.eat('*') {
                return Ok(acc);
            }
            let at = self.clone();
            let rhs = self.power(depth)?;
            if degree(&acc) + degree(&rhs) > MAX_DEGREE {
                return at.error("polynomial degree too large");
            }
            acc = acc * rhs;
        }
    }

    fn power(&mut self, depth: usize) -> SyntaxResult<Poly> {
        let base = self.atom(depth)?;
        self.skip_ws();
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.clone();
        let e = self.digits()?;
        let e: usize = match e.try_into() {
            Ok(e) if e <= MAX_DEGREE => e,
            _ => return at.error("exponent too large"),
        };
        if degree(&base) * e > MAX_DEGREE {
            return at.error("polynomial degree too large");
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self, depth: usize) -> SyntaxResult<Poly> {
        self.skip_ws();
        match self.peek() {
            Some('x') => {
                self.bump();
                Ok(Poly::x())
            }
            Some('(') => {
                self.bump();
                let inner = self.expr(depth + 1)?;
                self.skip_ws();
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let mut value = BigRational::from_integer(n);
                if self.eat('/') {
                    let at = self.clone();
                    let q = self.digits()?;
                    if q.is_zero() {
                        return at.error("zero denominator");
                    }
                    value /= BigRational::from_integer(q);
                }
                Ok(Poly::constant(value))
            }
            Some(c) => self.error(format!("unexpected '{c}' in polynomial")),
            None => self.error("unexpected end of polynomial"),
        }
    }
}

fn degree(p: &Poly) -> usize {
    p.degree().unwrap_or(0)
}

fn whole<'a, T>(text: &'a str, f: impl FnOnce(&mut Cursor<'a>) -> SyntaxResult<T>) -> SyntaxResult<T> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    let v = f(&mut c)?;
    c.finish()?;
    Ok(v)
}

pub fn parse_rational(text: &str) -> SyntaxResult<BigRational> {
    whole(text, Cursor::rational)
}

pub fn parse_vector(text: &str) -> SyntaxResult<Vec<BigRational>> {
    whole(text, Cursor::vector)
}

pub fn parse_matrix(text: &str) -> SyntaxResult<RatMat> {
    whole(text, Cursor::matrix)
}

pub fn parse_poly(text: &str) -> SyntaxResult<Poly> {
    whole(text, Cursor::poly)
}

pub fn parse_poly_matrix(text: &str) -> SyntaxResult<PolyMat> {
    whole(text, Cursor::poly_matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use doubletorus_core::exactlinalg::rat;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rational("1/0").unwrap_err().column, 3);
        assert!(parse_rational("1/").is_err());
        assert!(parse_rational("1 2").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn vectors_and_matrices() {
        assert_eq!(parse_vector("[1/3, 0]").unwrap(), vec![rat(1, 3), rat(0, 1)]);
        let m = parse_matrix("[[0,2],[-2,0]]").unwrap();
        assert_eq!(m.to_string(), "[[0,2],[-2,0]]");
        let e = parse_matrix("[[0,1],[1]]").unwrap_err();
        assert_eq!(e.message, "rows have different lengths");
        assert_eq!(e.column, 1);
        assert!(parse_matrix("[]").is_err());
        assert!(parse_matrix("[[1,2],[3,4]").is_err());
        assert_eq!(parse_matrix("[[1,2],[3;4]]").unwrap_err().column, 10);
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("1+1^2*x^2").unwrap().to_string(), "x^2+1");
        assert_eq!(parse_poly("-x").unwrap().to_string(), "-x");
        assert_eq!(parse_poly("(x+1)^2 - 2*x").unwrap().to_string(), "x^2+1");
        assert_eq!(parse_poly("1/2*x").unwrap().to_string(), "1/2*x");
        assert_eq!(parse_poly("3/4").unwrap().to_string(), "3/4");
        assert_eq!(parse_poly("x-x").unwrap().to_string(), "0");
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("y").is_err());
        assert!(parse_poly("x^1000").is_err());
        assert!(parse_poly("(x^200)*(x^200)").is_err());
        assert!(parse_poly(&"(".repeat(100)).is_err());
    }

    #[test]
    fn poly_matrices() {
        let m = parse_poly_matrix("[[1+x^2, 0], [-x, 1]]").unwrap();
        assert_eq!(m.to_string(), "[[x^2+1,0],[-x,1]]");
    }
}
