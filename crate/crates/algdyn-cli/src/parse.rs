//! Input languages: algebra presentations, rational-function and matrix
//! literals, and the sparse structure-constant document.
//!
//! Grammar sketch (whitespace insignificant):
//!
//! ```text
//! algebra   := document | factor (" x " factor)*
//! factor    := "Q[" letter "]/(" poly ")" | "C^" nat | "Mat(" nat ")"
//! poly/ratf := expr with + - * / ^, one variable letter, integer and
//!              rational literals ("5", "5/2")
//! matrix    := "[[" int ("," int)* "]" ("," row)* "]"
//! document  := JSON { "dim": d, "names": [...], "constants": [[i,j,k,v]] }
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Deserialize;

use algdyn::algebra::{matrix_algebra, product_algebra, quotient_algebra, split_algebra, Algebra};
use algdyn::exactnum::{IntMatrix, Rat, UniPoly};
use algdyn::induced::UniRationalFunction;

/// Syntax error with a character position into the input.
#[derive(Debug, Clone)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn parse_nat_digits(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn parse_usize(&mut self) -> PResult<usize> {
        let digits = self.parse_nat_digits()?;
        digits.parse::<usize>().map_err(|_| ParseError {
            pos: self.pos,
            msg: "number out of range".into(),
        })
    }

    fn parse_bigint(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let negative = self.eat('-');
        let digits = self.parse_nat_digits()?;
        let mut n = BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(ParseError {
            pos: self.pos,
            msg: "bad integer literal".into(),
        })?;
        if negative {
            n = -n;
        }
        Ok(n)
    }
}

// --- rational-function expressions ---

struct ExprParser {
    scanner: Scanner,
    var: Option<char>,
}

impl ExprParser {
    fn new(text: &str) -> Self {
        ExprParser {
            scanner: Scanner::new(text),
            var: None,
        }
    }

    fn expr(&mut self) -> PResult<UniRationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.scanner.eat('+') {
                let rhs = self.term()?;
                acc = acc.add(&rhs).map_err(|e| self.math_err(e))?;
            } else if self.scanner.eat('-') {
                let rhs = self.term()?;
                acc = acc.add(&rhs.neg()).map_err(|e| self.math_err(e))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<UniRationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.scanner.eat('*') {
                let rhs = self.unary()?;
                acc = acc.mul(&rhs).map_err(|e| self.math_err(e))?;
            } else if self.scanner.eat('/') {
                let rhs = self.unary()?;
                acc = acc.div(&rhs).map_err(|e| self.math_err(e))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<UniRationalFunction> {
        if self.scanner.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.postfix()
    }

    fn postfix(&mut self) -> PResult<UniRationalFunction> {
        let mut base = self.atom()?;
        while self.scanner.eat('^') {
            let e = self.scanner.parse_usize()?;
            base = base.pow(e as i64).map_err(|e| self.math_err(e))?;
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<UniRationalFunction> {
        match self.scanner.peek() {
            Some('(') => {
                self.scanner.expect('(')?;
                let inner = self.expr()?;
                self.scanner.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.scanner.bump();
                match self.var {
                    None => self.var = Some(c),
                    Some(v) if v == c => {}
                    Some(v) => {
                        return self
                            .scanner
                            .err(format!("one variable per expression: '{v}' then '{c}'"))
                    }
                }
                Ok(UniRationalFunction::from_poly(UniPoly::x()))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.scanner.parse_bigint()?;
                Ok(UniRationalFunction::from_poly(UniPoly::constant(
                    Rat::from_integer(n),
                )))
            }
            Some(c) => self.scanner.err(format!("unexpected character '{c}'")),
            None => self.scanner.err("unexpected end of input"),
        }
    }

    fn math_err(&self, e: algdyn::Error) -> ParseError {
        ParseError {
            pos: self.scanner.pos,
            msg: e.to_string(),
        }
    }
}

/// Parse a single-variable rational function such as `(t^2+1)/(t-2)`.
pub fn parse_ratfunc(text: &str) -> PResult<(UniRationalFunction, char)> {
    let mut parser = ExprParser::new(text);
    let value = {
        let v = parser.expr()?;
        if !parser.scanner.at_end() {
            return parser.scanner.err("unexpected trailing input");
        }
        v
    };
    Ok((value, parser.var.unwrap_or('t')))
}

/// Parse a polynomial (rejects genuine denominators); used for moduli.
fn parse_poly(text: &str) -> PResult<(UniPoly, char)> {
    let (f, var) = parse_ratfunc(text)?;
    if !f.is_polynomial() {
        return Err(ParseError {
            pos: 0,
            msg: "expected a polynomial, found a denominator".into(),
        });
    }
    // normalize away the constant monic denominator
    let num = f.num().clone();
    let den = f.den().coeff(0);
    Ok((num.scale(&(Rat::one() / den)), var))
}

/// Parse a square integer matrix literal `[[2,1],[1,1]]`.
pub fn parse_matrix(text: &str) -> PResult<IntMatrix> {
    let mut s = Scanner::new(text);
    s.expect('[')?;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    loop {
        s.expect('[')?;
        let mut row = Vec::new();
        loop {
            row.push(s.parse_bigint()?);
            if !s.eat(',') {
                break;
            }
        }
        s.expect(']')?;
        rows.push(row);
        if !s.eat(',') {
            break;
        }
    }
    s.expect(']')?;
    if !s.at_end() {
        return s.err("unexpected trailing input");
    }
    let size = rows.len();
    if rows.iter().any(|r| r.len() != size) {
        return s.err("matrix must be square");
    }
    IntMatrix::new(size, rows.into_iter().flatten().collect()).map_err(|e| ParseError {
        pos: 0,
        msg: e.to_string(),
    })
}

// --- algebra sources ---

#[derive(Deserialize)]
struct ScDocument {
    dim: usize,
    #[serde(default)]
    names: Option<Vec<String>>,
    constants: Vec<(usize, usize, usize, serde_json::Value)>,
}

fn rat_from_json(v: &serde_json::Value) -> Result<Rat, String> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(BigInt::from(i)))
            } else {
                Err(format!(
                    "non-integer numeric literal {n}; use a string \"a/b\""
                ))
            }
        }
        serde_json::Value::String(s) => parse_rat_literal(s),
        other => Err(format!("expected a number or string, found {other}")),
    }
}

/// Parse `"a"` or `"a/b"` into an exact rational.
pub fn parse_rat_literal(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::parse_bytes(num_str.as_bytes(), 10)
        .ok_or_else(|| format!("bad integer '{num_str}'"))?;
    let den = BigInt::parse_bytes(den_str.as_bytes(), 10)
        .ok_or_else(|| format!("bad integer '{den_str}'"))?;
    if den.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rat::new(num, den))
}

fn algebra_from_document(text: &str) -> PResult<Algebra> {
    let doc: ScDocument = serde_json::from_str(text).map_err(|e| ParseError {
        pos: 0,
        msg: format!("bad structure-constant document: {e}"),
    })?;
    let d = doc.dim;
    if d == 0 {
        return Err(ParseError {
            pos: 0,
            msg: "dim must be positive".into(),
        });
    }
    let names = doc
        .names
        .unwrap_or_else(|| (0..d).map(|i| format!("e{}", i + 1)).collect());
    let mut constants = vec![Rat::zero(); d * d * d];
    let mut seen = std::collections::BTreeSet::new();
    for (i, j, k, value) in &doc.constants {
        if *i >= d || *j >= d || *k >= d {
            return Err(ParseError {
                pos: 0,
                msg: format!("index ({i},{j},{k}) out of range for dim {d}"),
            });
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(ParseError {
                pos: 0,
                msg: format!("duplicate constant entry ({i},{j},{k})"),
            });
        }
        constants[(*i * d + *j) * d + *k] =
            rat_from_json(value).map_err(|msg| ParseError { pos: 0, msg })?;
    }
    Algebra::new(d, names, constants).map_err(|e| ParseError {
        pos: 0,
        msg: e.to_string(),
    })
}

fn parse_algebra_atom(text: &str) -> PResult<Algebra> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("Q[") {
        let mut s = Scanner::new(rest);
        let var = match s.bump() {
            Some(c) if c.is_ascii_alphabetic() => c,
            _ => return s.err("expected a variable letter after 'Q['"),
        };
        s.expect(']')?;
        s.expect('/')?;
        s.expect('(')?;
        // the modulus runs to the matching close paren at depth zero
        let open = s.pos;
        let mut depth = 1usize;
        let mut end = None;
        for (idx, &c) in s.chars.iter().enumerate().skip(open) {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(idx);
                        break;
                    }
                }
                _ => {}
            }
        }
        let Some(end) = end else {
            return s.err("unterminated modulus");
        };
        let body: String = s.chars[open..end].iter().collect();
        let tail: String = s.chars[end + 1..].iter().collect();
        if !tail.trim().is_empty() {
            return Err(ParseError {
                pos: end + 1,
                msg: "unexpected trailing input after the modulus".into(),
            });
        }
        let (poly, poly_var) = parse_poly(&body)?;
        if poly_var != var && poly.degree_or_zero() > 0 {
            return Err(ParseError {
                pos: open,
                msg: format!("modulus must use the variable '{var}'"),
            });
        }
        if poly.degree_or_zero() == 0 {
            return Err(ParseError {
                pos: open,
                msg: "modulus must be a nonconstant polynomial".into(),
            });
        }
        return quotient_algebra(&poly, var).map_err(|e| ParseError {
            pos: 0,
            msg: e.to_string(),
        });
    }
    if let Some(rest) = t.strip_prefix("C^") {
        let n = rest.trim().parse::<usize>().map_err(|_| ParseError {
            pos: 2,
            msg: "expected a positive integer after 'C^'".into(),
        })?;
        return split_algebra(n).map_err(|e| ParseError {
            pos: 0,
            msg: e.to_string(),
        });
    }
    if let Some(rest) = t.strip_prefix("Mat(") {
        let inner = rest.strip_suffix(')').ok_or(ParseError {
            pos: t.len(),
            msg: "expected ')' closing Mat(".into(),
        })?;
        let n = inner.trim().parse::<usize>().map_err(|_| ParseError {
            pos: 4,
            msg: "expected a positive integer inside Mat(...)".into(),
        })?;
        return matrix_algebra(n).map_err(|e| ParseError {
            pos: 0,
            msg: e.to_string(),
        });
    }
    Err(ParseError {
        pos: 0,
        msg: format!(
            "unrecognized algebra '{t}': expected Q[v]/(P), C^n, Mat(n), a product with ' x ', or a JSON document"
        ),
    })
}

/// Parse an algebra source: a JSON structure-constant document, a builtin, a
/// quotient presentation, or a product of factors joined by ` x `.
pub fn parse_algebra(text: &str) -> PResult<Algebra> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ParseError {
            pos: 0,
            msg: "empty algebra specification".into(),
        });
    }
    if t.starts_with('{') {
        return algebra_from_document(t);
    }
    let parts: Vec<&str> = t.split(" x ").collect();
    if parts.len() == 1 {
        return parse_algebra_atom(parts[0]);
    }
    let factors: Vec<Algebra> = parts
        .iter()
        .map(|p| parse_algebra_atom(p))
        .collect::<PResult<_>>()?;
    product_algebra(&factors).map_err(|e| ParseError {
        pos: 0,
        msg: e.to_string(),
    })
}

// --- printing (round-trip side) ---

/// Render a rational function with its variable letter.
pub fn render_ratfunc(f: &UniRationalFunction, var: char) -> String {
    f.render(var)
}

/// Render a matrix literal, `[[2,1],[1,1]]`.
pub fn render_matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .rows()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Render an algebra as its canonical structure-constant document.
pub fn render_algebra_document(alg: &Algebra) -> String {
    let d = alg.dim();
    let mut constants = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let v = alg.sc(i, j, k);
                if !v.is_zero() {
                    constants.push(serde_json::json!([i, j, k, v.to_string()]));
                }
            }
        }
    }
    let doc = serde_json::json!({
        "dim": d,
        "names": alg.names(),
        "constants": constants,
    });
    serde_json::to_string(&doc).expect("document serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfunc_literals() {
        let (f, var) = parse_ratfunc("(t^2+1)/(t-2)").unwrap();
        assert_eq!(var, 't');
        assert_eq!(f.deg(), 2);
        assert_eq!(*f.num(), UniPoly::from_i64_coeffs(&[1, 0, 1]));
        assert_eq!(*f.den(), UniPoly::from_i64_coeffs(&[-2, 1]));

        let (f, _) = parse_ratfunc("t^2").unwrap();
        assert!(f.is_polynomial());

        let (f, _) = parse_ratfunc("3/2*t - 1").unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num().coeff(1), parse_rat_literal("3/2").unwrap());
    }

    #[test]
    fn ratfunc_rejects_mixed_variables_and_garbage() {
        assert!(parse_ratfunc("t + u").is_err());
        assert!(parse_ratfunc("t +").is_err());
        assert!(parse_ratfunc("(t").is_err());
        assert!(parse_ratfunc("1/0").is_err());
        assert!(parse_ratfunc("t^2 %").is_err());
    }

    #[test]
    fn matrix_literals() {
        let m = parse_matrix("[[2,1],[1,1]]").unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(*m.get(0, 0), BigInt::from(2));
        let m = parse_matrix("[[ -3 ]]").unwrap();
        assert_eq!(*m.get(0, 0), BigInt::from(-3));
        assert!(parse_matrix("[[1,2],[3]]").is_err());
        assert!(parse_matrix("[[1,2]").is_err());
        assert!(parse_matrix("[]").is_err());
    }

    #[test]
    fn algebra_builtins() {
        let a = parse_algebra("C^2").unwrap();
        assert_eq!(a.dim(), 2);
        let a = parse_algebra("Mat(2)").unwrap();
        assert_eq!(a.dim(), 4);
        assert!(!a.predicates().commutative);
        let a = parse_algebra("Q[t]/(t^3 - t)").unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.predicates().abelian);
    }

    #[test]
    fn algebra_products_and_documents() {
        let a = parse_algebra("Q[t]/(t^2) x C^2").unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.predicates().abelian);

        let doc = r#"{"dim": 2, "constants": [[0,0,0,1],[0,1,1,1],[1,0,1,1]]}"#;
        let b = parse_algebra(doc).unwrap();
        assert_eq!(b.dim(), 2);
        // this document is the dual numbers
        let dual = parse_algebra("Q[t]/(t^2)").unwrap();
        assert!(b.same_structure(&dual));
    }

    #[test]
    fn algebra_document_rejects_bad_input() {
        assert!(parse_algebra(r#"{"dim": 0, "constants": []}"#).is_err());
        assert!(parse_algebra(r#"{"dim": 2, "constants": [[0,0,5,1]]}"#).is_err());
        assert!(parse_algebra(r#"{"dim": 2, "constants": [[0,0,0,1],[0,0,0,2]]}"#).is_err());
        assert!(parse_algebra(r#"{"dim": 2, "constants": [[0,0,0,1.5]]}"#).is_err());
    }

    #[test]
    fn algebra_rejects_bad_presentations() {
        assert!(parse_algebra("Q[t]/(2)").is_err());
        assert!(parse_algebra("Q[t]/(0)").is_err());
        assert!(parse_algebra("Q[t]/(u^2)").is_err());
        assert!(parse_algebra("Z[t]/(t^2)").is_err());
        assert!(parse_algebra("").is_err());
    }

    #[test]
    fn round_trips() {
        // matrix
        let m = parse_matrix("[[2,1],[1,1]]").unwrap();
        assert_eq!(parse_matrix(&render_matrix(&m)).unwrap(), m);
        // rational function
        let (f, var) = parse_ratfunc("(t^2+1)/(t-2)").unwrap();
        let printed = render_ratfunc(&f, var);
        let (g, _) = parse_ratfunc(&printed).unwrap();
        assert_eq!(f, g);
        // algebra document
        let a = parse_algebra("Q[t]/(t^3 - t) x Mat(2)").unwrap();
        let doc = render_algebra_document(&a);
        let b = parse_algebra(&doc).unwrap();
        assert_eq!(a, b);
    }
}
