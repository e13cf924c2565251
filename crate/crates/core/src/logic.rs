//! Classical propositional formulas over named variables, and universes whose
//! worlds are the valuations of a variable list.
//!
//! Concrete syntax, loosest binding first:
//!
//! ```text
//! iff   := imp ("<->" imp)*
//! imp   := or ("->" imp)?
//! or    := and ("|" and)*
//! and   := unary ("&" unary)*
//! unary := "!" unary | var | "true" | "false" | "(" iff ")"
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::universe::WorldUniverse;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Const(bool),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

/// A syntax error in formula text. `offset` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {expected}, found {found}")]
pub struct FormulaError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn parse(text: &str) -> std::result::Result<Self, FormulaError> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            end: text.len(),
        };
        let f = parser.iff()?;
        match parser.peek() {
            None => Ok(f),
            Some((offset, tok)) => Err(FormulaError {
                offset,
                expected: "end of input or a binary connective".into(),
                found: tok.describe(),
            }),
        }
    }

    pub fn variables(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Var(v) => {
                out.insert(v);
            }
            Formula::Const(_) => {}
            Formula::Not(f) => f.collect_vars(out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Truth-functional evaluation; `lookup` returns `None` for undeclared
    /// variables.
    fn eval_with<F>(&self, lookup: &F) -> Result<bool>
    where
        F: Fn(&str) -> Option<bool>,
    {
        Ok(match self {
            Formula::Var(v) => lookup(v).ok_or_else(|| Error::UndeclaredVariable(v.clone()))?,
            Formula::Const(c) => *c,
            Formula::Not(f) => !f.eval_with(lookup)?,
            Formula::And(a, b) => a.eval_with(lookup)? & b.eval_with(lookup)?,
            Formula::Or(a, b) => a.eval_with(lookup)? | b.eval_with(lookup)?,
            Formula::Implies(a, b) => !a.eval_with(lookup)? | b.eval_with(lookup)?,
            Formula::Iff(a, b) => a.eval_with(lookup)? == b.eval_with(lookup)?,
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Iff(..) => 0,
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = FormulaError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

struct Wrapped<'a>(&'a Formula, u8);

impl fmt::Display for Wrapped<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.precedence() < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Prints with the minimum parentheses needed to re-parse to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Const(c) => write!(f, "{c}"),
            Formula::Not(g) => write!(f, "!{}", Wrapped(g, 4)),
            Formula::And(a, b) => write!(f, "{} & {}", Wrapped(a, 3), Wrapped(b, 4)),
            Formula::Or(a, b) => write!(f, "{} | {}", Wrapped(a, 2), Wrapped(b, 3)),
            Formula::Implies(a, b) => write!(f, "{} -> {}", Wrapped(a, 2), Wrapped(b, 1)),
            Formula::Iff(a, b) => write!(f, "{} <-> {}", Wrapped(a, 0), Wrapped(b, 1)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("variable `{s}`"),
            Token::True => "`true`".into(),
            Token::False => "`false`".into(),
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
        }
    }
}

fn tokenize(text: &str) -> std::result::Result<Vec<(usize, Token)>, FormulaError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Token::Implies
            }
            b'<' if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') => {
                i += 2;
                Token::Iff
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                match &text[start..=i] {
                    "true" => Token::True,
                    "false" => Token::False,
                    ident => Token::Ident(ident.to_string()),
                }
            }
            _ => {
                let found = text[start..].chars().next().unwrap_or('?');
                return Err(FormulaError {
                    offset: start,
                    expected: "a variable, constant, connective or parenthesis".into(),
                    found: format!("`{found}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

type ParseResult = std::result::Result<Formula, FormulaError>;

impl Parser {
    fn peek(&self) -> Option<(usize, &Token)> {
        self.tokens.get(self.pos).map(|(o, t)| (*o, t))
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek().map(|(_, t)| t) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> ParseResult {
        let mut lhs = self.imp()?;
        while self.eat(&Token::Iff) {
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> ParseResult {
        let lhs = self.or()?;
        if self.eat(&Token::Implies) {
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> ParseResult {
        let mut lhs = self.and()?;
        while self.eat(&Token::Or) {
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> ParseResult {
        let mut lhs = self.unary()?;
        while self.eat(&Token::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> ParseResult {
        let Some((offset, tok)) = self.peek() else {
            return Err(FormulaError {
                offset: self.end,
                expected: "a formula".into(),
                found: "end of input".into(),
            });
        };
        let tok = tok.clone();
        self.pos += 1;
        match tok {
            Token::Not => Ok(Formula::not(self.unary()?)),
            Token::Ident(v) => Ok(Formula::Var(v)),
            Token::True => Ok(Formula::Const(true)),
            Token::False => Ok(Formula::Const(false)),
            Token::LParen => {
                let inner = self.iff()?;
                if self.eat(&Token::RParen) {
                    Ok(inner)
                } else {
                    let (offset, found) = match self.peek() {
                        Some((o, t)) => (o, t.describe()),
                        None => (self.end, "end of input".into()),
                    };
                    Err(FormulaError {
                        offset,
                        expected: "`)`".into(),
                        found,
                    })
                }
            }
            other => Err(FormulaError {
                offset,
                expected: "a formula".into(),
                found: other.describe(),
            }),
        }
    }
}

/// A total assignment of truth values to a declared variable list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    assignment: BTreeMap<String, bool>,
}

impl Valuation {
    pub fn new<I, S>(assignment: I) -> Self
    where
        I: IntoIterator<Item = (S, bool)>,
        S: Into<String>,
    {
        Self {
            assignment: assignment.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }

    pub fn get(&self, var: &str) -> Option<bool> {
        self.assignment.get(var).copied()
    }

    pub fn satisfies(&self, f: &Formula) -> Result<bool> {
        f.eval_with(&|v: &str| self.get(v))
    }
}

/// A world universe generated from a variable list: one world per valuation.
///
/// World names join one token per variable with `.`, the token being the
/// variable name when true and `!name` when false. Worlds are enumerated by
/// binary counting with the first variable most significant and true before
/// false, so `[F, D]` yields `F.D, F.!D, !F.D, !F.!D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropUniverse {
    vars: Vec<String>,
    universe: Arc<WorldUniverse>,
    valuations: Vec<Valuation>,
}

impl PropUniverse {
    pub fn generate<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut seen = BTreeSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        let k = vars.len();
        let count = 1usize
            .checked_shl(k as u32)
            .filter(|_| k < usize::BITS as usize)
            .expect("too many variables");
        let mut names = Vec::with_capacity(count);
        let mut valuations = Vec::with_capacity(count);
        for i in 0..count {
            let values: Vec<bool> = (0..k).map(|j| i >> (k - 1 - j) & 1 == 0).collect();
            let name = vars
                .iter()
                .zip(&values)
                .map(|(v, &t)| if t { v.clone() } else { format!("!{v}") })
                .collect::<Vec<_>>()
                .join(".");
            names.push(name);
            valuations.push(Valuation::new(vars.iter().cloned().zip(values)));
        }
        Ok(Self {
            vars,
            universe: Arc::new(WorldUniverse::new(names)?),
            valuations,
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn universe(&self) -> &Arc<WorldUniverse> {
        &self.universe
    }

    pub fn valuation(&self, world: usize) -> &Valuation {
        &self.valuations[world]
    }

    /// The world assigning `values[i]` to the `i`-th declared variable.
    pub fn world_for(&self, values: &[bool]) -> usize {
        debug_assert_eq!(values.len(), self.vars.len());
        values
            .iter()
            .fold(0, |acc, &t| (acc << 1) | usize::from(!t))
    }

    fn check_declared(&self, f: &Formula) -> Result<()> {
        match f.variables().into_iter().find(|v| !self.vars.iter().any(|d| d == v)) {
            Some(v) => Err(Error::UndeclaredVariable(v.to_string())),
            None => Ok(()),
        }
    }

    /// Worlds whose valuation satisfies `f`, in universe order.
    pub fn models(&self, f: &Formula) -> Result<Vec<usize>> {
        self.check_declared(f)?;
        let mut out = Vec::new();
        for (w, v) in self.valuations.iter().enumerate() {
            if v.satisfies(f)? {
                out.push(w);
            }
        }
        Ok(out)
    }
}
