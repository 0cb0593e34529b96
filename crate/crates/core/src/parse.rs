//! Text syntax for polynomials, monomials and orderings.
//!
//! Columns in errors are 1-based character positions within the parsed text.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ordering::{GradedTableOrdering, MatrixOrdering, OrderingSpec};
use crate::poly::{Coeff, Monomial, Polynomial, Ring};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    /// Next non-whitespace character, consumed if it equals `c`.
    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.column(), message)
    }

    fn error_at(&self, column: usize, message: impl Into<String>) -> Error {
        Error::parse(column, message)
    }

    fn identifier(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        Some((start + 1, self.chars[start..self.pos].iter().collect()))
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start + 1, self.chars[start..self.pos].iter().collect()))
    }

    fn nat(&mut self, what: &str) -> Result<u32> {
        let col = {
            self.skip_ws();
            self.column()
        };
        let (_, d) = self
            .digits()
            .ok_or_else(|| self.error(format!("malformed {what}: expected a natural number")))?;
        d.parse()
            .map_err(|_| self.error_at(col, format!("{what} {d} is too large")))
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        self.skip_ws();
        let col = self.column();
        let (_, d) = self
            .digits()
            .ok_or_else(|| self.error("expected an integer"))?;
        let v: i64 = d
            .parse()
            .map_err(|_| self.error_at(col, format!("integer {d} is too large")))?;
        Ok(if neg { -v } else { v })
    }

    /// `integer ('/' positive-integer)?`, without sign.
    fn unsigned_rational(&mut self) -> Result<Option<Coeff>> {
        let Some((_, num)) = self.digits() else {
            return Ok(None);
        };
        let num: BigInt = num.parse().expect("digits");
        if self.eat('/') {
            self.skip_ws();
            let col = self.column();
            let (_, den) = self
                .digits()
                .ok_or_else(|| self.error("expected a denominator after '/'"))?;
            let den: BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return Err(self.error_at(col, "division by zero denominator"));
            }
            return Ok(Some(Coeff::new(num, den)));
        }
        Ok(Some(Coeff::from_integer(num)))
    }

    fn rational(&mut self) -> Result<Coeff> {
        let neg = self.eat('-');
        self.skip_ws();
        let q = self
            .unsigned_rational()?
            .ok_or_else(|| self.error("expected a rational number"))?;
        Ok(if neg { -q } else { q })
    }

    /// Text from the current position to the end, with its starting column.
    fn rest(&mut self) -> (usize, String) {
        self.skip_ws();
        let col = self.column();
        let s = self.chars[self.pos..].iter().collect();
        self.pos = self.chars.len();
        (col, s)
    }

    /// Contents of a balanced `( ... )` group, with the column after `(`.
    fn group(&mut self) -> Result<(usize, String)> {
        self.expect('(')?;
        let start = self.pos;
        let mut depth = 1;
        while let Some(c) = self.peek() {
            self.pos += 1;
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        let s = self.chars[start..self.pos - 1].iter().collect();
                        return Ok((start + 1, s));
                    }
                }
                _ => {}
            }
        }
        Err(self.error("unbalanced '('"))
    }
}

/// Splits a run of letters such as `yz` or `xdx` into ring variables, longest
/// name first. Used only where juxtaposition is allowed.
fn split_juxtaposed(word: &str, ring: &Ring) -> Option<Vec<usize>> {
    if word.is_empty() {
        return Some(Vec::new());
    }
    let mut names: Vec<(usize, &str)> = ring
        .names()
        .iter()
        .map(String::as_str)
        .enumerate()
        .collect();
    names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
    for (i, name) in names {
        if let Some(rest) = word.strip_prefix(name) {
            if let Some(mut tail) = split_juxtaposed(rest, ring) {
                tail.insert(0, i);
                return Some(tail);
            }
        }
    }
    None
}

fn variable(cur: &mut Cursor, ring: &Ring, juxtapose: bool) -> Result<Vec<(usize, usize)>> {
    cur.skip_ws();
    let col = cur.column();
    let (col, name) = cur
        .identifier()
        .ok_or_else(|| cur.error_at(col, "expected a variable"))?;
    if let Some(i) = ring.index_of(&name) {
        return Ok(vec![(i, col)]);
    }
    if juxtapose {
        if let Some(vs) = split_juxtaposed(&name, ring) {
            return Ok(vs.into_iter().map(|i| (i, col)).collect());
        }
    }
    Err(cur.error_at(
        col,
        format!(
            "unknown variable '{name}' (ring has {})",
            ring.names().join(", ")
        ),
    ))
}

fn powprod(
    cur: &mut Cursor,
    ring: &Ring,
    noncommutative: bool,
    juxtapose: bool,
) -> Result<Monomial> {
    let mut exps = vec![0u32; ring.nvars()];
    let mut last: Option<usize> = None;
    loop {
        let vars = variable(cur, ring, juxtapose)?;
        let e = if cur.eat('^') {
            cur.nat("exponent")?
        } else {
            1
        };
        let n = vars.len();
        for (k, (i, col)) in vars.into_iter().enumerate() {
            if noncommutative && last.is_some_and(|l| l > i) {
                return Err(cur.error_at(
                    col,
                    format!(
                        "variables out of order in a noncommutative ring: write {} before {} and rewrite with the relations",
                        ring.name(i),
                        ring.name(last.expect("checked"))
                    ),
                ));
            }
            last = Some(i);
            // the exponent binds to the last variable of a juxtaposed run
            let e = if k + 1 == n { e } else { 1 };
            exps[i] = exps[i]
                .checked_add(e)
                .ok_or_else(|| cur.error("exponent overflow"))?;
        }
        if !cur.eat('*') {
            return Ok(Monomial::new(exps));
        }
    }
}

fn term(cur: &mut Cursor, ring: &Ring, noncommutative: bool) -> Result<(Monomial, Coeff)> {
    cur.skip_ws();
    let col = cur.column();
    if let Some(c) = cur.unsigned_rational()? {
        if cur.eat('*') {
            return Ok((powprod(cur, ring, noncommutative, false)?, c));
        }
        return Ok((Monomial::one(ring.nvars()), c));
    }
    if cur
        .peek()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
    {
        return Ok((
            powprod(cur, ring, noncommutative, false)?,
            Coeff::from_integer(1.into()),
        ));
    }
    Err(cur.error_at(col, "expected a term"))
}

/// Parses `term (('+'|'-') term)*` with an optional leading sign. In a
/// noncommutative ring each monomial must list its variables in ring order.
pub fn parse_polynomial(text: &str, ring: &Ring, noncommutative: bool) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let mut terms = Vec::new();
    let mut neg = cur.eat('-');
    if !neg {
        cur.eat('+');
    }
    loop {
        let (m, c) = term(&mut cur, ring, noncommutative)?;
        terms.push((m, if neg { -c } else { c }));
        if cur.at_end() {
            break;
        }
        neg = match cur.peek() {
            Some('+') => false,
            Some('-') => true,
            _ => return Err(cur.error("expected '+' or '-'")),
        };
        cur.pos += 1;
    }
    Ok(Polynomial::from_terms(ring.nvars(), terms))
}

/// A single monomial: `1`, a product with `*` and `^`, or juxtaposed
/// variable names such as `yz`.
pub fn parse_monomial(text: &str, ring: &Ring) -> Result<Monomial> {
    let mut cur = Cursor::new(text);
    let m = monomial_at(&mut cur, ring)?;
    if !cur.at_end() {
        return Err(cur.error("unexpected input after monomial"));
    }
    Ok(m)
}

fn monomial_at(cur: &mut Cursor, ring: &Ring) -> Result<Monomial> {
    cur.skip_ws();
    if cur.peek() == Some('1') {
        let col = cur.column();
        cur.pos += 1;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(cur.error_at(col, "only the coefficient-free monomial 1 is allowed"));
        }
        return Ok(Monomial::one(ring.nvars()));
    }
    powprod(cur, ring, false, true)
}

/// Comma-separated monomials, optionally wrapped in `<...>`.
pub fn parse_monomial_list(text: &str, ring: &Ring) -> Result<Vec<Monomial>> {
    let mut cur = Cursor::new(text);
    let bracketed = cur.eat('<');
    let mut out = Vec::new();
    let close = |cur: &mut Cursor| !bracketed || cur.eat('>');
    if bracketed && cur.eat('>') || !bracketed && cur.at_end() {
        return Ok(out);
    }
    loop {
        out.push(monomial_at(&mut cur, ring)?);
        if !cur.eat(',') {
            break;
        }
    }
    if !close(&mut cur) {
        return Err(cur.error("expected '>'"));
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected input after monomial list"));
    }
    Ok(out)
}

fn variable_order(text: &str, offset: usize, ring: &Ring) -> Result<Vec<usize>> {
    let mut cur = Cursor::new(text);
    let mut order = Vec::new();
    loop {
        cur.skip_ws();
        let col = cur.column();
        let (_, name) = cur
            .identifier()
            .ok_or_else(|| cur.error("expected a variable").at_line(1, offset - 1))?;
        let i = ring
            .index_of(&name)
            .ok_or_else(|| Error::parse(col + offset - 1, format!("unknown variable '{name}'")))?;
        if order.contains(&i) {
            return Err(Error::parse(
                col + offset - 1,
                format!("variable '{name}' listed twice"),
            ));
        }
        order.push(i);
        if !cur.eat(',') {
            break;
        }
    }
    if !cur.at_end() || order.len() != ring.nvars() {
        return Err(Error::parse(
            offset,
            "order=(...) must list every variable once",
        ));
    }
    Ok(order)
}

fn matrix_rows(cur: &mut Cursor) -> Result<Vec<Vec<i64>>> {
    cur.expect('[')?;
    let mut rows = Vec::new();
    if cur.eat(']') {
        return Ok(rows);
    }
    loop {
        cur.expect('[')?;
        let mut row = vec![cur.integer()?];
        while cur.eat(',') {
            row.push(cur.integer()?);
        }
        cur.expect(']')?;
        rows.push(row);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect(']')?;
    Ok(rows)
}

/// Parses a nested ordering appearing at `col` within the enclosing text.
fn nested_matrix(text: &str, col: usize, ring: &Ring) -> Result<MatrixOrdering> {
    match parse_ordering(text, ring).map_err(|e| e.at_line(1, col - 1))? {
        OrderingSpec::Matrix(m) => Ok(m),
        OrderingSpec::Table(_) => Err(Error::parse(col, "expected a matrix ordering here")),
    }
}

/// Ordering syntax:
///
/// ```text
/// lex | grlex | grevlex            [order=(y,x)]
/// matrix [[1,1],[1,0]]
/// weighted w=(2,1) [tie=<ordering>]
/// table D=2 deg1=(y,z) deg2=(yz,y^2,z^2) [fallback=<ordering>]
/// ```
///
/// Table slices are listed ascending. `tie` and `fallback` take the rest of
/// the line and default to `lex` and `grlex`.
pub fn parse_ordering(text: &str, ring: &Ring) -> Result<OrderingSpec> {
    let n = ring.nvars();
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let head_col = cur.column();
    let (_, head) = cur
        .identifier()
        .ok_or_else(|| cur.error("expected an ordering name"))?;
    let shape = |e: Error| match e {
        Error::Parse { .. } => e,
        other => Error::parse(head_col, other.to_string()),
    };
    match head.as_str() {
        "lex" | "grlex" | "grevlex" => {
            let mut order: Vec<usize> = (0..n).collect();
            if !cur.at_end() {
                key(&mut cur, "order")?;
                let (col, body) = cur.group()?;
                order = variable_order(&body, col, ring)?;
            }
            if !cur.at_end() {
                return Err(cur.error("unexpected input after ordering"));
            }
            Ok(match head.as_str() {
                "lex" => MatrixOrdering::lex_by(&order),
                "grlex" => MatrixOrdering::grlex_by(&order),
                _ => MatrixOrdering::grevlex_by(&order),
            }
            .into())
        }
        "matrix" => {
            let rows = matrix_rows(&mut cur)?;
            if !cur.at_end() {
                return Err(cur.error("unexpected input after matrix"));
            }
            if let Some(bad) = rows.iter().find(|r| r.len() != n) {
                return Err(Error::parse(
                    head_col,
                    format!("matrix rows need {n} entries, found a row with {}", bad.len()),
                ));
            }
            Ok(MatrixOrdering::new(n, rows).map_err(shape)?.into())
        }
        "weighted" => {
            key(&mut cur, "w")?;
            let (col, body) = cur.group()?;
            let mut inner = Cursor::new(&body);
            let mut w = vec![inner.integer().map_err(|e| e.at_line(1, col - 1))?];
            while inner.eat(',') {
                w.push(inner.integer().map_err(|e| e.at_line(1, col - 1))?);
            }
            if !inner.at_end() || w.len() != n {
                return Err(Error::parse(col, format!("weight vector needs {n} integers")));
            }
            let tie = if cur.at_end() {
                MatrixOrdering::lex(n)
            } else {
                key(&mut cur, "tie")?;
                let (col, rest) = cur.rest();
                nested_matrix(&rest, col, ring)?
            };
            Ok(MatrixOrdering::weighted(w, &tie).map_err(shape)?.into())
        }
        "table" => {
            let mut depth: Option<(usize, u32)> = None;
            let mut slices: Vec<Option<Vec<Monomial>>> = Vec::new();
            let mut fallback = MatrixOrdering::grlex(n);
            while !cur.at_end() {
                let kcol = cur.column();
                let (_, k) = cur
                    .identifier()
                    .ok_or_else(|| cur.error("expected D=, degK= or fallback="))?;
                cur.expect('=')?;
                if k == "D" {
                    depth = Some((kcol, cur.nat("depth")?));
                } else if k == "fallback" {
                    let (col, rest) = cur.rest();
                    fallback = nested_matrix(&rest, col, ring)?;
                } else if let Some(d) = k.strip_prefix("deg").and_then(|d| d.parse::<usize>().ok()) {
                    let (col, body) = cur.group()?;
                    let ms = parse_monomial_list(&body, ring).map_err(|e| e.at_line(1, col - 1))?;
                    if d >= slices.len() {
                        slices.resize(d + 1, None);
                    }
                    if slices[d].replace(ms).is_some() {
                        return Err(Error::parse(kcol, format!("slice deg{d} given twice")));
                    }
                } else {
                    return Err(Error::parse(kcol, format!("unknown table key '{k}'")));
                }
            }
            let given = slices.len().saturating_sub(1) as u32;
            let depth = match depth {
                Some((col, d)) if d < given => {
                    return Err(Error::parse(col, format!("D={d} but a slice of degree {given} is given")))
                }
                Some((_, d)) => d,
                None => given,
            };
            slices.resize(depth as usize + 1, None);
            let mut full = Vec::with_capacity(slices.len());
            for (d, s) in slices.into_iter().enumerate() {
                match s {
                    Some(s) => full.push(s),
                    None if d == 0 => full.push(vec![Monomial::one(n)]),
                    None => return Err(Error::parse(head_col, format!("missing slice deg{d}"))),
                }
            }
            Ok(GradedTableOrdering::new(n, full, fallback).map_err(shape)?.into())
        }
        other => Err(Error::parse(
            head_col,
            format!("unknown ordering '{other}' (expected lex, grlex, grevlex, matrix, weighted or table)"),
        )),
    }
}

/// `-?integer ('/' positive-integer)?`
pub fn parse_rational(text: &str) -> Result<Coeff> {
    let mut cur = Cursor::new(text);
    let q = cur.rational()?;
    if !cur.at_end() {
        return Err(cur.error("unexpected input after number"));
    }
    Ok(q)
}

fn key(cur: &mut Cursor, expected: &str) -> Result<()> {
    cur.skip_ws();
    let col = cur.column();
    match cur.identifier() {
        Some((_, k)) if k == expected => cur.expect('='),
        _ => Err(cur.error_at(col, format!("expected {expected}="))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::new(["x", "y"]).unwrap()
    }

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(n.into(), d.into())
    }

    fn column_of(e: Error) -> usize {
        match e {
            Error::Parse { column, .. } => column,
            other => panic!("not a parse error: {other}"),
        }
    }

    #[test]
    fn polynomials() {
        let r = ring();
        let p = parse_polynomial("x^2 - y", &r, false).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![2, 0])), q(1, 1));
        assert_eq!(p.coeff(&Monomial::new(vec![0, 1])), q(-1, 1));
        let p = parse_polynomial("3/2*x*y + x*y", &r, false).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&Monomial::new(vec![1, 1])), q(5, 2));
        let p = parse_polynomial("-  y*x + 4/6", &r, false).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![1, 1])), q(-1, 1));
        assert_eq!(p.coeff(&Monomial::one(2)), q(2, 3));
        assert!(parse_polynomial("x - x", &r, false).unwrap().is_zero());
    }

    #[test]
    fn polynomial_errors() {
        let r = ring();
        assert_eq!(
            column_of(parse_polynomial("x^2 -", &r, false).unwrap_err()),
            6
        );
        assert_eq!(
            column_of(parse_polynomial("x + z", &r, false).unwrap_err()),
            5
        );
        assert_eq!(column_of(parse_polynomial("x^", &r, false).unwrap_err()), 3);
        assert_eq!(
            column_of(parse_polynomial("1/0*x", &r, false).unwrap_err()),
            3
        );
        assert_eq!(column_of(parse_polynomial("y*x", &r, true).unwrap_err()), 3);
        assert!(parse_polynomial("x*y", &r, true).is_ok());
        assert_eq!(
            column_of(parse_polynomial("x y", &r, false).unwrap_err()),
            3
        );
        assert_eq!(column_of(parse_polynomial("", &r, false).unwrap_err()), 1);
    }

    #[test]
    fn monomials() {
        let r = Ring::new(["x", "dx", "y"]).unwrap();
        assert_eq!(
            parse_monomial("xdx^2", &r).unwrap(),
            Monomial::new(vec![1, 2, 0])
        );
        assert_eq!(parse_monomial("1", &r).unwrap(), Monomial::one(3));
        assert_eq!(
            parse_monomial_list("<x^2, x*y>", &r).unwrap(),
            vec![Monomial::new(vec![2, 0, 0]), Monomial::new(vec![1, 0, 1])]
        );
        assert!(parse_monomial_list("<>", &r).unwrap().is_empty());
        assert!(parse_monomial("q", &r).is_err());
    }

    #[test]
    fn orderings() {
        let r = ring();
        assert_eq!(parse_ordering("grlex", &r).unwrap(), OrderingSpec::grlex(2));
        assert_eq!(
            parse_ordering("lex order=(y,x)", &r).unwrap(),
            MatrixOrdering::lex_by(&[1, 0]).into()
        );
        assert_eq!(
            parse_ordering("matrix [[1,1],[1,0]]", &r).unwrap(),
            MatrixOrdering::new(2, vec![vec![1, 1], vec![1, 0]])
                .unwrap()
                .into()
        );
        assert_eq!(
            parse_ordering("weighted w=(2,1) tie=lex", &r).unwrap(),
            MatrixOrdering::new(2, vec![vec![2, 1], vec![1, 0], vec![0, 1]])
                .unwrap()
                .into()
        );
        for o in [
            OrderingSpec::grevlex(2),
            MatrixOrdering::new(2, vec![vec![3, 1]]).unwrap().into(),
        ] {
            let text = o.display(&r).to_string();
            assert_eq!(parse_ordering(&text, &r).unwrap(), o, "{text}");
        }
    }

    #[test]
    fn tables() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let t = parse_ordering(
            "table D=2 deg1=(z,y,x) deg2=(z^2,yz,y^2,xz,xy,x^2) fallback=grlex",
            &r,
        )
        .unwrap();
        let text = t.display(&r).to_string();
        assert_eq!(parse_ordering(&text, &r).unwrap(), t);
        let e = parse_ordering("table D=1 deg1=(z,y)", &r).unwrap_err();
        assert!(matches!(e, Error::Parse { .. }), "{e}");
        let e = parse_ordering("table deg1=(x,y,w)", &r).unwrap_err();
        assert_eq!(column_of(e), 17);
        assert!(parse_ordering("spiral", &r).is_err());
    }
}
