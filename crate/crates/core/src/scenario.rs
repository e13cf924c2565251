//! Scenario files and the pedigree wire format.
//!
//! Scenario grammar (UTF-8, `#` starts a comment, one declaration per line):
//!
//! ```text
//! # format 1
//! worlds a b c                 # or: vars F D
//! world ok = F D               # alias for a generated world (vars only)
//! source s0 rank 1
//!   pairs b < a, b < c         # indented; may repeat
//! source s2 rank 2
//!   layers [a c] > [b]*        # one line; `*` marks a fully connected block
//! agent A1 = s0 s2
//! ```
//!
//! `pairs` states are validated into belief states; `layers` states are
//! belief states by construction. A source with no body holds the empty
//! relation.
//!
//! Pedigree format: a `pedigree` header line, then one `x < y @ rank` line
//! per pair, sorted by `(x, y)` in universe order.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;

use crate::aggregate::{Profile, Rank, Source};
use crate::belief::{BeliefState, Block, LayeredForm};
use crate::error::Error;
use crate::logic::PropUniverse;
use crate::pedigree::{Agent, PedigreedBeliefState};
use crate::relation::Relation;
use crate::universe::WorldUniverse;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Malformed text.
    Syntax,
    /// Well-formed text naming unknown or duplicate entities.
    Semantic,
    /// A `pairs` source whose relation is not a belief state.
    InvalidState { source: String, error: Box<Error> },
}

/// A positioned parse failure; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: Option<String>,
    pub kind: ParseErrorKind,
}

type PResult<T> = std::result::Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    column: usize,
}

impl Spanned {
    fn text(&self) -> String {
        match &self.tok {
            Tok::Word(w) => w.clone(),
            Tok::Sym(c) => c.to_string(),
        }
    }
}

const SYMBOLS: &[char] = &['[', ']', '*', '>', '<', ',', '=', '@'];

fn tokenize_line(line: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    let mut word = String::new();
    let mut word_col = 0;
    for (col, c) in line.chars().enumerate().map(|(i, c)| (i + 1, c)) {
        if c.is_whitespace() || SYMBOLS.contains(&c) {
            if !word.is_empty() {
                out.push(Spanned {
                    tok: Tok::Word(std::mem::take(&mut word)),
                    column: word_col,
                });
            }
            if !c.is_whitespace() {
                out.push(Spanned {
                    tok: Tok::Sym(c),
                    column: col,
                });
            }
        } else {
            if word.is_empty() {
                word_col = col;
            }
            word.push(c);
        }
    }
    if !word.is_empty() {
        out.push(Spanned {
            tok: Tok::Word(word),
            column: word_col,
        });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Cursor over one line's tokens.
struct Line<'a> {
    number: usize,
    toks: &'a [Spanned],
    pos: usize,
    end_column: usize,
}

impl<'a> Line<'a> {
    fn err(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        let (column, token) = match self.toks.get(self.pos) {
            Some(t) => (t.column, Some(t.text())),
            None => (self.end_column, None),
        };
        ParseError {
            line: self.number,
            column,
            message: message.into(),
            token,
            kind,
        }
    }

    fn err_at(&self, idx: usize, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        let t = &self.toks[idx];
        ParseError {
            line: self.number,
            column: t.column,
            message: message.into(),
            token: Some(t.text()),
            kind,
        }
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        self.err(ParseErrorKind::Syntax, message)
    }

    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn word(&mut self, what: &str) -> PResult<(usize, &'a str)> {
        match self.toks.get(self.pos) {
            Some(Spanned {
                tok: Tok::Word(w), ..
            }) => {
                self.pos += 1;
                Ok((self.pos - 1, w.as_str()))
            }
            _ => Err(self.syntax(format!("expected {what}"))),
        }
    }

    fn sym(&mut self, c: char) -> PResult<()> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{c}`")))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Tok::Word(w)) if w == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.syntax(format!("expected `{kw}`"))),
        }
    }

    fn expect_end(&self) -> PResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.syntax("unexpected trailing input"))
        }
    }

    fn rank(&mut self) -> PResult<Rank> {
        let (idx, w) = self.word("a rank")?;
        parse_rank(w).map_err(|(kind, msg)| self.err_at(idx, kind, msg))
    }
}

fn parse_rank(w: &str) -> std::result::Result<Rank, (ParseErrorKind, String)> {
    if let Some(rest) = w.strip_prefix('-') {
        if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err((ParseErrorKind::Semantic, format!("negative rank `{w}`")));
        }
    }
    if w.is_empty() || !w.bytes().all(|b| b.is_ascii_digit()) {
        return Err((ParseErrorKind::Syntax, format!("rank `{w}` is not an integer")));
    }
    w.parse::<u32>()
        .map(Rank)
        .map_err(|_| (ParseErrorKind::Syntax, format!("rank `{w}` is out of range")))
}

/// How the scenario's worlds were declared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WorldDecl {
    Named(Arc<WorldUniverse>),
    Vars {
        props: PropUniverse,
        /// Alias name and the generated world it denotes, in declaration order.
        aliases: Vec<(String, usize)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub worlds: WorldDecl,
    pub sources: Profile,
    pub agents: Vec<Agent>,
}

impl Scenario {
    pub fn universe(&self) -> &Arc<WorldUniverse> {
        match &self.worlds {
            WorldDecl::Named(u) => u,
            WorldDecl::Vars { props, .. } => props.universe(),
        }
    }

    pub fn props(&self) -> Option<&PropUniverse> {
        match &self.worlds {
            WorldDecl::Named(_) => None,
            WorldDecl::Vars { props, .. } => Some(props),
        }
    }

    pub fn agent(&self, id: &str) -> Option<&Agent> {
        self.agents.iter().find(|a| a.id == id)
    }

    pub fn parse(text: &str) -> PResult<Scenario> {
        ScenarioParser::default().run(text)
    }

    /// Parses raw bytes; invalid UTF-8 is reported as a syntax error.
    pub fn parse_bytes(bytes: &[u8]) -> PResult<Scenario> {
        Scenario::parse(utf8(bytes)?)
    }
}

fn utf8(bytes: &[u8]) -> PResult<&str> {
    std::str::from_utf8(bytes).map_err(|e| {
        let valid = &bytes[..e.valid_up_to()];
        let line = valid.iter().filter(|b| **b == b'\n').count() + 1;
        let line_start = valid.iter().rposition(|b| *b == b'\n').map_or(0, |i| i + 1);
        let column = String::from_utf8_lossy(&valid[line_start..]).chars().count() + 1;
        ParseError {
            line,
            column,
            message: "invalid UTF-8".into(),
            token: None,
            kind: ParseErrorKind::Syntax,
        }
    })
}

/// Canonical text: sources are printed as layers, worlds by canonical name.
impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# format 1")?;
        match &self.worlds {
            WorldDecl::Named(u) => writeln!(f, "worlds {}", u.worlds().join(" "))?,
            WorldDecl::Vars { props, aliases } => {
                writeln!(f, "vars {}", props.vars().join(" "))?;
                for (name, w) in aliases {
                    let v = props.valuation(*w);
                    let lits: Vec<String> = props
                        .vars()
                        .iter()
                        .map(|var| {
                            if v.get(var) == Some(true) {
                                var.clone()
                            } else {
                                format!("!{var}")
                            }
                        })
                        .collect();
                    writeln!(f, "world {name} = {}", lits.join(" "))?;
                }
            }
        }
        for s in self.sources.sources() {
            writeln!(f, "source {} rank {}", s.id, s.rank)?;
            writeln!(f, "  layers {}", s.state.to_layers())?;
        }
        for a in &self.agents {
            let ids: Vec<&str> = a.informants.sources().iter().map(|s| s.id.as_str()).collect();
            if ids.is_empty() {
                writeln!(f, "agent {} =", a.id)?;
            } else {
                writeln!(f, "agent {} = {}", a.id, ids.join(" "))?;
            }
        }
        Ok(())
    }
}

enum Body {
    Empty,
    Pairs(Vec<(usize, usize)>),
    Layers(Vec<Block>),
}

struct PendingSource {
    id: String,
    rank: Rank,
    line: usize,
    column: usize,
    body: Body,
}

struct PendingAgent {
    id: String,
    line: usize,
    column: usize,
    sources: Vec<(String, usize)>,
}

#[derive(Default)]
struct ScenarioParser {
    worlds: Option<WorldDecl>,
    names: HashMap<String, usize>,
    sources: Vec<Source>,
    source_ids: HashSet<String>,
    current: Option<PendingSource>,
    agents: Vec<PendingAgent>,
}

impl ScenarioParser {
    fn run(mut self, text: &str) -> PResult<Scenario> {
        let mut last_line = 0;
        for (i, raw) in text.lines().enumerate() {
            last_line = i + 1;
            let content = strip_comment(raw);
            let toks = tokenize_line(content);
            if toks.is_empty() {
                continue;
            }
            let mut line = Line {
                number: i + 1,
                toks: &toks,
                pos: 0,
                end_column: content.chars().count() + 1,
            };
            let indented = raw.starts_with([' ', '\t']);
            if indented {
                self.body_line(&mut line)?;
            } else {
                self.finish_source()?;
                self.top_line(&mut line)?;
            }
        }
        self.finish_source()?;
        let Some(worlds) = self.worlds.take() else {
            return Err(ParseError {
                line: last_line.max(1),
                column: 1,
                message: "missing `worlds` or `vars` declaration".into(),
                token: None,
                kind: ParseErrorKind::Syntax,
            });
        };
        let universe = match &worlds {
            WorldDecl::Named(u) => Arc::clone(u),
            WorldDecl::Vars { props, .. } => Arc::clone(props.universe()),
        };
        let profile = Profile::new(&universe, std::mem::take(&mut self.sources))
            .expect("sources validated during parsing");
        let mut agents: Vec<Agent> = Vec::new();
        for pa in std::mem::take(&mut self.agents) {
            let mut informants = Vec::new();
            let mut seen = HashSet::new();
            for (sid, column) in &pa.sources {
                let err = |message: String| ParseError {
                    line: pa.line,
                    column: *column,
                    message,
                    token: Some(sid.clone()),
                    kind: ParseErrorKind::Semantic,
                };
                let Some(s) = profile.get(sid) else {
                    return Err(err(format!("unknown source `{sid}`")));
                };
                if !seen.insert(sid.as_str()) {
                    return Err(err(format!("source `{sid}` listed twice")));
                }
                informants.push(s.clone());
            }
            if agents.iter().any(|a| a.id == pa.id) {
                return Err(ParseError {
                    line: pa.line,
                    column: pa.column,
                    message: format!("duplicate agent id `{}`", pa.id),
                    token: Some(pa.id.clone()),
                    kind: ParseErrorKind::Semantic,
                });
            }
            let informants = Profile::new(&universe, informants).expect("validated above");
            agents.push(Agent::new(pa.id, informants));
        }
        Ok(Scenario {
            worlds,
            sources: profile,
            agents,
        })
    }

    fn universe(&self) -> Option<&Arc<WorldUniverse>> {
        self.worlds.as_ref().map(|w| match w {
            WorldDecl::Named(u) => u,
            WorldDecl::Vars { props, .. } => props.universe(),
        })
    }

    fn require_worlds(&self, line: &Line) -> PResult<()> {
        if self.worlds.is_none() {
            return Err(line.err_at(
                0,
                ParseErrorKind::Syntax,
                "`worlds` or `vars` must be declared first",
            ));
        }
        Ok(())
    }

    fn top_line(&mut self, line: &mut Line) -> PResult<()> {
        let (idx, kw) = line.word("a declaration")?;
        match kw {
            "worlds" | "vars" => {
                if self.worlds.is_some() {
                    return Err(line.err_at(idx, ParseErrorKind::Syntax, "worlds already declared"));
                }
                let mut names = Vec::new();
                while !line.at_end() {
                    let (i, w) = line.word("a name")?;
                    if names.iter().any(|(_, n)| n == w) {
                        let what = if kw == "vars" { "variable" } else { "world" };
                        return Err(line.err_at(
                            i,
                            ParseErrorKind::Semantic,
                            format!("duplicate {what} `{w}`"),
                        ));
                    }
                    names.push((i, w.to_string()));
                }
                if names.is_empty() {
                    return Err(line.syntax(format!("`{kw}` needs at least one name")));
                }
                let decl = if kw == "worlds" {
                    WorldDecl::Named(Arc::new(
                        WorldUniverse::new(names.iter().map(|(_, n)| n.clone()))
                            .expect("names checked non-empty and distinct"),
                    ))
                } else {
                    for (i, n) in &names {
                        if !is_identifier(n) {
                            return Err(line.err_at(
                                *i,
                                ParseErrorKind::Syntax,
                                format!("`{n}` is not a valid variable name"),
                            ));
                        }
                    }
                    if names.len() > 16 {
                        return Err(line.err_at(names[16].0, ParseErrorKind::Semantic, "at most 16 variables"));
                    }
                    WorldDecl::Vars {
                        props: PropUniverse::generate(names.iter().map(|(_, n)| n.clone()))
                            .expect("names checked non-empty and distinct"),
                        aliases: Vec::new(),
                    }
                };
                let universe = match &decl {
                    WorldDecl::Named(u) => Arc::clone(u),
                    WorldDecl::Vars { props, .. } => Arc::clone(props.universe()),
                };
                self.names = universe
                    .worlds()
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (w.clone(), i))
                    .collect();
                self.worlds = Some(decl);
                Ok(())
            }
            "world" => self.alias(line, idx),
            "source" => {
                self.require_worlds(line)?;
                let (id_idx, id) = line.word("a source id")?;
                line.keyword("rank")?;
                let rank = line.rank()?;
                line.expect_end()?;
                if !self.source_ids.insert(id.to_string()) {
                    return Err(line.err_at(
                        id_idx,
                        ParseErrorKind::Semantic,
                        format!("duplicate source id `{id}`"),
                    ));
                }
                self.current = Some(PendingSource {
                    id: id.to_string(),
                    rank,
                    line: line.number,
                    column: line.toks[id_idx].column,
                    body: Body::Empty,
                });
                Ok(())
            }
            "agent" => {
                let (id_idx, id) = line.word("an agent id")?;
                line.sym('=')?;
                let mut sources = Vec::new();
                while !line.at_end() {
                    let (i, s) = line.word("a source id")?;
                    sources.push((s.to_string(), line.toks[i].column));
                }
                self.agents.push(PendingAgent {
                    id: id.to_string(),
                    line: line.number,
                    column: line.toks[id_idx].column,
                    sources,
                });
                Ok(())
            }
            "pairs" | "layers" => Err(line.err_at(
                idx,
                ParseErrorKind::Syntax,
                format!("`{kw}` lines must be indented under a source"),
            )),
            _ => Err(line.err_at(idx, ParseErrorKind::Syntax, format!("unknown declaration `{kw}`"))),
        }
    }

    fn alias(&mut self, line: &mut Line, kw_idx: usize) -> PResult<()> {
        self.require_worlds(line)?;
        let Some(WorldDecl::Vars { props, aliases }) = self.worlds.as_mut() else {
            return Err(line.err_at(
                kw_idx,
                ParseErrorKind::Syntax,
                "`world` aliases require a `vars` declaration",
            ));
        };
        let (name_idx, name) = line.word("an alias name")?;
        line.sym('=')?;
        let mut values: Vec<Option<bool>> = vec![None; props.vars().len()];
        while !line.at_end() {
            let (i, lit) = line.word("a literal")?;
            let (var, value) = match lit.strip_prefix('!') {
                Some(v) => (v, false),
                None => (lit, true),
            };
            let Some(pos) = props.vars().iter().position(|d| d == var) else {
                return Err(line.err_at(i, ParseErrorKind::Semantic, format!("undeclared variable `{var}`")));
            };
            if values[pos].replace(value).is_some() {
                return Err(line.err_at(i, ParseErrorKind::Semantic, format!("variable `{var}` given twice")));
            }
        }
        if let Some(missing) = values.iter().position(Option::is_none) {
            return Err(line.err(
                ParseErrorKind::Semantic,
                format!("alias `{name}` does not assign `{}`", props.vars()[missing]),
            ));
        }
        if self.names.contains_key(name) {
            return Err(line.err_at(name_idx, ParseErrorKind::Semantic, format!("world name `{name}` already in use")));
        }
        let values: Vec<bool> = values.into_iter().map(|v| v.unwrap_or(false)).collect();
        let world = props.world_for(&values);
        aliases.push((name.to_string(), world));
        self.names.insert(name.to_string(), world);
        Ok(())
    }

    fn resolve(&self, line: &Line, idx: usize, name: &str) -> PResult<usize> {
        self.names.get(name).copied().ok_or_else(|| {
            line.err_at(idx, ParseErrorKind::Semantic, format!("unknown world `{name}`"))
        })
    }

    fn body_line(&mut self, line: &mut Line) -> PResult<()> {
        let Some(mut current) = self.current.take() else {
            return Err(line.syntax("indented line outside a source block"));
        };
        let (kw_idx, kw) = line.word("`pairs` or `layers`")?;
        match (kw, &mut current.body) {
            ("pairs", Body::Layers(_)) | ("layers", Body::Pairs(_)) | ("layers", Body::Layers(_)) => {
                self.current = Some(current);
                Err(line.err_at(kw_idx, ParseErrorKind::Syntax, "a source takes either `pairs` lines or one `layers` line"))
            }
            ("pairs", body) => {
                let mut pairs = match std::mem::replace(body, Body::Empty) {
                    Body::Pairs(p) => p,
                    _ => Vec::new(),
                };
                loop {
                    let (xi, x) = line.word("a world")?;
                    line.sym('<')?;
                    let (yi, y) = line.word("a world")?;
                    pairs.push((self.resolve(line, xi, x)?, self.resolve(line, yi, y)?));
                    if line.at_end() {
                        break;
                    }
                    line.sym(',')?;
                }
                current.body = Body::Pairs(pairs);
                self.current = Some(current);
                Ok(())
            }
            ("layers", Body::Empty) => {
                let n = self.universe().map_or(0, |u| u.len());
                let mut seen = vec![false; n];
                let mut blocks = Vec::new();
                loop {
                    line.sym('[')?;
                    let mut worlds = Vec::new();
                    while let Some(Tok::Word(_)) = line.peek() {
                        let (i, w) = line.word("a world")?;
                        let idx = self.resolve(line, i, w)?;
                        if std::mem::replace(&mut seen[idx], true) {
                            return Err(line.err_at(i, ParseErrorKind::Semantic, format!("world `{w}` appears twice in layers")));
                        }
                        worlds.push(idx);
                    }
                    if worlds.is_empty() {
                        return Err(line.syntax("expected a world"));
                    }
                    line.sym(']')?;
                    let connected = line.eat_sym('*');
                    blocks.push(Block { worlds, connected });
                    if line.at_end() {
                        break;
                    }
                    line.sym('>')?;
                }
                if let Some(missing) = seen.iter().position(|s| !s) {
                    let name = self.universe().map(|u| u.name(missing).to_string()).unwrap_or_default();
                    return Err(line.err(ParseErrorKind::Semantic, format!("layers omit world `{name}`")));
                }
                current.body = Body::Layers(blocks);
                self.current = Some(current);
                Ok(())
            }
            (other, _) => Err(line.err_at(kw_idx, ParseErrorKind::Syntax, format!("expected `pairs` or `layers`, found `{other}`"))),
        }
    }

    fn finish_source(&mut self) -> PResult<()> {
        let Some(p) = self.current.take() else {
            return Ok(());
        };
        let universe = Arc::clone(self.universe().expect("sources follow the worlds declaration"));
        let state = match p.body {
            Body::Empty => BeliefState::empty(&universe),
            Body::Pairs(pairs) => {
                BeliefState::from_relation(Relation::from_pairs(&universe, pairs)).map_err(|error| {
                    ParseError {
                        line: p.line,
                        column: p.column,
                        message: format!("source `{}`: {error}", p.id),
                        token: Some(p.id.clone()),
                        kind: ParseErrorKind::InvalidState {
                            source: p.id.clone(),
                            error: Box::new(error),
                        },
                    }
                })?
            }
            Body::Layers(blocks) => BeliefState::from_layers(
                &LayeredForm::new(&universe, blocks).expect("partition checked while parsing"),
            ),
        };
        self.sources.push(Source {
            id: p.id,
            rank: p.rank,
            state,
        });
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "true"
        && s != "false"
}

pub fn serialize_pedigree(p: &PedigreedBeliefState) -> String {
    let u = p.universe();
    let mut out = String::from("pedigree\n");
    for ((x, y), r) in p.pairs() {
        let _ = writeln!(out, "{} < {} @ {}", u.name(x), u.name(y), r);
    }
    out
}

/// Parses the pedigree wire format against a known universe.
pub fn parse_pedigree(text: &str, universe: &Arc<WorldUniverse>) -> PResult<PedigreedBeliefState> {
    let mut header_seen = false;
    let mut pairs: Vec<((usize, usize), Rank)> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        let content = strip_comment(raw);
        let toks = tokenize_line(content);
        if toks.is_empty() {
            continue;
        }
        let mut line = Line {
            number: i + 1,
            toks: &toks,
            pos: 0,
            end_column: content.chars().count() + 1,
        };
        if !header_seen {
            line.keyword("pedigree")?;
            line.expect_end()?;
            header_seen = true;
            continue;
        }
        let world = |line: &mut Line| -> PResult<usize> {
            let (idx, w) = line.word("a world")?;
            universe
                .get(w)
                .ok_or_else(|| line.err_at(idx, ParseErrorKind::Semantic, format!("unknown world `{w}`")))
        };
        let x = world(&mut line)?;
        line.sym('<')?;
        let y = world(&mut line)?;
        line.sym('@')?;
        let rank = line.rank()?;
        line.expect_end()?;
        if pairs.iter().any(|(p, _)| *p == (x, y)) {
            return Err(ParseError {
                line: line.number,
                column: 1,
                message: format!("pair {} < {} listed twice", universe.name(x), universe.name(y)),
                token: None,
                kind: ParseErrorKind::Semantic,
            });
        }
        pairs.push(((x, y), rank));
    }
    if !header_seen {
        return Err(ParseError {
            line: last_line.max(1),
            column: 1,
            message: "missing `pedigree` header".into(),
            token: None,
            kind: ParseErrorKind::Syntax,
        });
    }
    PedigreedBeliefState::new(universe, pairs).map_err(|e| ParseError {
        line: last_line.max(1),
        column: 1,
        message: e.to_string(),
        token: None,
        kind: ParseErrorKind::Semantic,
    })
}

pub fn parse_pedigree_bytes(bytes: &[u8], universe: &Arc<WorldUniverse>) -> PResult<PedigreedBeliefState> {
    parse_pedigree(utf8(bytes)?, universe)
}
