//! Boolean expressions over named components.
//!
//! The grammar is the usual logical-model line format: `!` negation,
//! `&` conjunction, `|` disjunction, parentheses, literals `0`/`1`, and
//! names matching `[A-Za-z_][A-Za-z0-9_]*`. `&` binds tighter than `|`.

use std::fmt;
use std::ops;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoolExpr {
    Const(bool),
    Var(String),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    pub fn var(name: impl Into<String>) -> Self {
        BoolExpr::Var(name.into())
    }

    pub fn constant(value: bool) -> Self {
        BoolExpr::Const(value)
    }

    /// Evaluate with an assignment of the named variables.
    pub fn eval(&self, assign: &dyn Fn(&str) -> bool) -> bool {
        match self {
            BoolExpr::Const(c) => *c,
            BoolExpr::Var(name) => assign(name),
            BoolExpr::Not(e) => !e.eval(assign),
            BoolExpr::And(a, b) => a.eval(assign) && b.eval(assign),
            BoolExpr::Or(a, b) => a.eval(assign) || b.eval(assign),
        }
    }

    /// Names referenced by the expression, in first-occurrence order.
    pub fn variables(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            BoolExpr::Const(_) => {}
            BoolExpr::Var(name) => {
                if !out.contains(&name.as_str()) {
                    out.push(name);
                }
            }
            BoolExpr::Not(e) => e.collect_vars(out),
            BoolExpr::And(a, b) | BoolExpr::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Replace every occurrence of `name` by `replacement`.
    pub fn substitute(&self, name: &str, replacement: &BoolExpr) -> BoolExpr {
        match self {
            BoolExpr::Const(_) => self.clone(),
            BoolExpr::Var(n) if n == name => replacement.clone(),
            BoolExpr::Var(_) => self.clone(),
            BoolExpr::Not(e) => BoolExpr::Not(Box::new(e.substitute(name, replacement))),
            BoolExpr::And(a, b) => BoolExpr::And(
                Box::new(a.substitute(name, replacement)),
                Box::new(b.substitute(name, replacement)),
            ),
            BoolExpr::Or(a, b) => BoolExpr::Or(
                Box::new(a.substitute(name, replacement)),
                Box::new(b.substitute(name, replacement)),
            ),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            BoolExpr::Or(..) => 0,
            BoolExpr::And(..) => 1,
            BoolExpr::Not(..) => 2,
            BoolExpr::Const(_) | BoolExpr::Var(_) => 3,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let prec = self.precedence();
        if prec < min {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            BoolExpr::Const(c) => write!(f, "{}", *c as u8),
            BoolExpr::Var(name) => write!(f, "{name}"),
            BoolExpr::Not(e) => {
                write!(f, "!")?;
                e.fmt_prec(f, 3)
            }
            BoolExpr::And(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " & ")?;
                b.fmt_prec(f, 2)
            }
            BoolExpr::Or(a, b) => {
                a.fmt_prec(f, 0)?;
                write!(f, " | ")?;
                b.fmt_prec(f, 1)
            }
        }
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl ops::Not for BoolExpr {
    type Output = BoolExpr;
    fn not(self) -> BoolExpr {
        BoolExpr::Not(Box::new(self))
    }
}

impl ops::BitAnd for BoolExpr {
    type Output = BoolExpr;
    fn bitand(self, rhs: BoolExpr) -> BoolExpr {
        BoolExpr::And(Box::new(self), Box::new(rhs))
    }
}

impl ops::BitOr for BoolExpr {
    type Output = BoolExpr;
    fn bitor(self, rhs: BoolExpr) -> BoolExpr {
        BoolExpr::Or(Box::new(self), Box::new(rhs))
    }
}

/// Conjunction of all expressions; `1` when empty.
pub fn and_all(exprs: impl IntoIterator<Item = BoolExpr>) -> BoolExpr {
    exprs
        .into_iter()
        .reduce(|a, b| a & b)
        .unwrap_or(BoolExpr::Const(true))
}

/// Disjunction of all expressions; `0` when empty.
pub fn or_all(exprs: impl IntoIterator<Item = BoolExpr>) -> BoolExpr {
    exprs
        .into_iter()
        .reduce(|a, b| a | b)
        .unwrap_or(BoolExpr::Const(false))
}

/// Expression with variable references resolved to component indices,
/// for fast repeated evaluation over packed states.
#[derive(Debug, Clone)]
pub(crate) enum Resolved {
    Const(bool),
    Var(usize),
    Not(Box<Resolved>),
    And(Box<Resolved>, Box<Resolved>),
    Or(Box<Resolved>, Box<Resolved>),
}

impl Resolved {
    pub(crate) fn resolve(expr: &BoolExpr, index_of: &dyn Fn(&str) -> Option<usize>) -> Result<Resolved> {
        Ok(match expr {
            BoolExpr::Const(c) => Resolved::Const(*c),
            BoolExpr::Var(name) => Resolved::Var(
                index_of(name).ok_or_else(|| Error::UnknownComponent(name.clone()))?,
            ),
            BoolExpr::Not(e) => Resolved::Not(Box::new(Resolved::resolve(e, index_of)?)),
            BoolExpr::And(a, b) => Resolved::And(
                Box::new(Resolved::resolve(a, index_of)?),
                Box::new(Resolved::resolve(b, index_of)?),
            ),
            BoolExpr::Or(a, b) => Resolved::Or(
                Box::new(Resolved::resolve(a, index_of)?),
                Box::new(Resolved::resolve(b, index_of)?),
            ),
        })
    }

    #[inline]
    pub(crate) fn eval_bits(&self, bits: u64) -> bool {
        match self {
            Resolved::Const(c) => *c,
            Resolved::Var(i) => (bits >> i) & 1 == 1,
            Resolved::Not(e) => !e.eval_bits(bits),
            Resolved::And(a, b) => a.eval_bits(bits) && b.eval_bits(bits),
            Resolved::Or(a, b) => a.eval_bits(bits) || b.eval_bits(bits),
        }
    }
}

/// Parse a single expression. `col_offset` shifts reported columns so the
/// network parser can point into the original line; `declared` rejects
/// variable references at their exact position.
pub(crate) fn parse_expr(
    src: &str,
    line: usize,
    col_offset: usize,
    declared: &dyn Fn(&str) -> bool,
) -> Result<BoolExpr> {
    let mut p = Parser {
        chars: src.char_indices().peekable(),
        src,
        line,
        col_offset,
        declared,
    };
    p.skip_ws();
    let e = p.or_expr()?;
    p.skip_ws();
    if let Some(&(i, c)) = p.chars.peek() {
        return Err(p.err(i, format!("unexpected `{c}`")));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
    line: usize,
    col_offset: usize,
    declared: &'a dyn Fn(&str) -> bool,
}

impl<'a> Parser<'a> {
    fn err(&self, byte_pos: usize, msg: String) -> Error {
        let col = self.src[..byte_pos].chars().count() + 1 + self.col_offset;
        Error::Parse {
            line: self.line,
            col,
            msg,
        }
    }

    fn err_eol(&self, msg: &str) -> Error {
        let col = self.src.chars().count() + 1 + self.col_offset;
        Error::Parse {
            line: self.line,
            col,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(&(_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn or_expr(&mut self) -> Result<BoolExpr> {
        let mut lhs = self.and_expr()?;
        loop {
            self.skip_ws();
            if matches!(self.chars.peek(), Some(&(_, '|'))) {
                self.chars.next();
                self.skip_ws();
                let rhs = self.and_expr()?;
                lhs = lhs | rhs;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn and_expr(&mut self) -> Result<BoolExpr> {
        let mut lhs = self.unary()?;
        loop {
            self.skip_ws();
            if matches!(self.chars.peek(), Some(&(_, '&'))) {
                self.chars.next();
                self.skip_ws();
                let rhs = self.unary()?;
                lhs = lhs & rhs;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<BoolExpr> {
        self.skip_ws();
        if matches!(self.chars.peek(), Some(&(_, '!'))) {
            self.chars.next();
            return Ok(!self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<BoolExpr> {
        self.skip_ws();
        match self.chars.peek().copied() {
            None => Err(self.err_eol("unexpected end of expression")),
            Some((_, '0')) => {
                self.chars.next();
                Ok(BoolExpr::Const(false))
            }
            Some((_, '1')) => {
                self.chars.next();
                Ok(BoolExpr::Const(true))
            }
            Some((i, '(')) => {
                self.chars.next();
                let inner = self.or_expr()?;
                self.skip_ws();
                match self.chars.next() {
                    Some((_, ')')) => Ok(inner),
                    _ => Err(self.err(i, "unclosed parenthesis".to_string())),
                }
            }
            Some((start, c)) if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = start + c.len_utf8();
                self.chars.next();
                while let Some(&(i, c)) = self.chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        end = i + c.len_utf8();
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                let name = &self.src[start..end];
                if !(self.declared)(name) {
                    let col = self.src[..start].chars().count() + 1 + self.col_offset;
                    return Err(Error::Undeclared {
                        name: name.to_string(),
                        line: self.line,
                        col,
                    });
                }
                Ok(BoolExpr::Var(name.to_string()))
            }
            Some((i, c)) => Err(self.err(i, format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> BoolExpr {
        parse_expr(s, 1, 0, &|_| true).unwrap()
    }

    #[test]
    fn precedence_and_parens() {
        // & binds tighter than |
        let e = parse("a | b & c");
        assert_eq!(e, parse("a | (b & c)"));
        assert_ne!(e, parse("(a | b) & c"));
        assert_eq!(parse("!a & b"), parse("(!a) & b"));
    }

    #[test]
    fn display_round_trip() {
        for s in ["a & (b | !c)", "!(a | b)", "0 | x_1 & 1", "!!a"] {
            let e = parse(s);
            assert_eq!(parse(&e.to_string()), e, "round trip of `{s}`");
        }
    }

    #[test]
    fn eval_matches_structure() {
        let e = parse("(x & !y) | z");
        let assign = |vals: [bool; 3]| move |n: &str| match n {
            "x" => vals[0],
            "y" => vals[1],
            "z" => vals[2],
            _ => unreachable!(),
        };
        assert!(e.eval(&assign([true, false, false])));
        assert!(!e.eval(&assign([true, true, false])));
        assert!(e.eval(&assign([false, true, true])));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_expr("a &", 3, 0, &|_| true).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                col: 4,
                msg: "unexpected end of expression".to_string()
            }
        );
        let any = |_: &str| true;
        assert!(matches!(parse_expr("a # b", 1, 0, &any), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("(a | b", 1, 0, &any), Err(Error::Parse { .. })));
    }

    #[test]
    fn undeclared_reference_is_located() {
        let declared = |n: &str| n == "a";
        let err = parse_expr("a & bad", 2, 4, &declared).unwrap_err();
        assert_eq!(
            err,
            Error::Undeclared {
                name: "bad".to_string(),
                line: 2,
                col: 9,
            }
        );
    }

    #[test]
    fn substitute_replaces_all_occurrences() {
        let e = parse("v & (a | v)");
        let sub = e.substitute("v", &parse("!b"));
        assert_eq!(sub, parse("!b & (a | !b)"));
    }
}
