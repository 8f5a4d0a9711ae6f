//! Textual presentations of local rings.
//!
//! ```text
//! spec      := semigroup | quotient | extension
//! semigroup := "semigroup" [field] INT+
//! quotient  := "ring" field "[" varlist "]" "/" "(" polylist ")" ["dim" INT]
//! field     := "Q" | "F" INT
//! extension := "extend" "(" spec ")" "by" INT
//! ```
//!
//! Inside an ideal, `(x,y,z)^k` stands for all monomials of degree `k` in the
//! listed variables. Multiplication must be written with `*`. `#` starts a
//! comment that runs to the end of the line.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result, SourcePos};
use crate::field::{is_prime, FieldSpec};
use crate::poly::{IntPoly, Monomial, MAX_EXP, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// `k[[t^a : a ∈ generators]]`
    Semigroup { generators: Vec<u64> },
    /// `k[[variables]] / (ideal)`
    Quotient {
        field: FieldSpec,
        variables: Vec<String>,
        ideal: Vec<IntPoly>,
        declared_dimension: Option<usize>,
    },
    /// `base[X_1..X_m]` localized at `(m, X_1..X_m)`.
    Extension { base: Box<RingSpec>, extra_vars: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub pos: Option<SourcePos>,
    pub message: String,
}

impl Diagnostic {
    pub fn error(pos: Option<SourcePos>, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match self.pos {
            Some(p) => write!(f, "{sev} at {p}: {}", self.message),
            None => write!(f, "{sev}: {}", self.message),
        }
    }
}

/// A spec with its presentation flattened: extensions of a polynomial
/// quotient become a quotient in more variables; extensions of a semigroup
/// ring keep the semigroup and count the free variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flat {
    Semigroup { generators: Vec<u64>, extra_vars: usize },
    Quotient {
        field: FieldSpec,
        variables: Vec<String>,
        ideal: Vec<IntPoly>,
    },
}

impl RingSpec {
    pub fn semigroup(generators: &[u64]) -> RingSpec {
        let mut g = generators.to_vec();
        g.sort_unstable();
        g.dedup();
        RingSpec::Semigroup { generators: g }
    }

    pub fn flatten(&self) -> Flat {
        match self {
            RingSpec::Semigroup { generators } => Flat::Semigroup {
                generators: generators.clone(),
                extra_vars: 0,
            },
            RingSpec::Quotient {
                field,
                variables,
                ideal,
                ..
            } => Flat::Quotient {
                field: *field,
                variables: variables.clone(),
                ideal: ideal.clone(),
            },
            RingSpec::Extension { base, extra_vars } => match base.flatten() {
                Flat::Semigroup {
                    generators,
                    extra_vars: e,
                } => Flat::Semigroup {
                    generators,
                    extra_vars: e + extra_vars,
                },
                Flat::Quotient {
                    field,
                    mut variables,
                    ideal,
                } => {
                    let fresh = fresh_names(&variables, *extra_vars);
                    variables.extend(fresh);
                    Flat::Quotient {
                        field,
                        variables,
                        ideal,
                    }
                }
            },
        }
    }

    /// Number of algebra generators of the presentation (the embedding variables).
    pub fn num_generators(&self) -> usize {
        match self {
            RingSpec::Semigroup { generators } => generators.len(),
            RingSpec::Quotient { variables, .. } => variables.len(),
            RingSpec::Extension { base, extra_vars } => base.num_generators() + extra_vars,
        }
    }

    /// Display names of the algebra generators, in presentation order.
    pub fn generator_names(&self) -> Vec<String> {
        match self.flatten() {
            Flat::Semigroup {
                generators,
                extra_vars,
            } => {
                let mut names: Vec<String> = generators.iter().map(|a| format!("t{a}")).collect();
                let fresh = fresh_names(&names, extra_vars);
                names.extend(fresh);
                names
            }
            Flat::Quotient { variables, .. } => variables,
        }
    }

    pub fn field(&self) -> Option<FieldSpec> {
        match self {
            RingSpec::Semigroup { .. } => None,
            RingSpec::Quotient { field, .. } => Some(*field),
            RingSpec::Extension { base, .. } => base.field(),
        }
    }

    pub fn declared_dimension(&self) -> Option<usize> {
        match self {
            RingSpec::Semigroup { .. } => None,
            RingSpec::Quotient {
                declared_dimension, ..
            } => *declared_dimension,
            RingSpec::Extension { base, extra_vars } => {
                base.declared_dimension().map(|d| d + extra_vars)
            }
        }
    }

    /// Largest total degree among ideal generators (1 for semigroup rings).
    pub fn max_generator_degree(&self) -> u32 {
        match self.flatten() {
            Flat::Semigroup { .. } => 1,
            Flat::Quotient { ideal, .. } => ideal.iter().map(|p| p.max_degree()).max().unwrap_or(1).max(1),
        }
    }
}

/// `count` names `X1, X2, ...` not already in `taken`.
pub fn fresh_names(taken: &[String], count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    let mut k = 1;
    while out.len() < count {
        let name = format!("X{k}");
        if !taken.contains(&name) {
            out.push(name);
        }
        k += 1;
    }
    out
}

/// Checks every invariant; an empty list means the spec is valid.
pub fn validate(spec: &RingSpec) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    validate_into(spec, &mut out);
    out
}

fn validate_into(spec: &RingSpec, out: &mut Vec<Diagnostic>) {
    match spec {
        RingSpec::Semigroup { generators } => {
            if generators.is_empty() {
                out.push(Diagnostic::error(None, "semigroup needs at least one generator"));
                return;
            }
            if generators.contains(&0) {
                out.push(Diagnostic::error(None, "semigroup generators must be positive"));
            }
            if generators.windows(2).any(|w| w[0] >= w[1]) {
                out.push(Diagnostic::error(
                    None,
                    "semigroup generators must be sorted ascending without duplicates",
                ));
            }
            let g = generators.iter().fold(0u64, |acc, &a| acc.gcd(&a));
            if g != 1 {
                out.push(Diagnostic::error(
                    None,
                    format!("semigroup generators have gcd {g}, expected 1"),
                ));
            }
            if generators.len() > MAX_VARS {
                out.push(Diagnostic::error(
                    None,
                    format!("at most {MAX_VARS} generators are supported"),
                ));
            }
        }
        RingSpec::Quotient {
            field,
            variables,
            ideal,
            ..
        } => {
            if let FieldSpec::PrimeField { p } = field {
                if !is_prime(*p) || *p <= 2 || *p >= (1 << 31) {
                    out.push(Diagnostic::error(
                        None,
                        format!("characteristic {p} must be an odd prime below 2^31"),
                    ));
                }
            }
            if variables.len() > MAX_VARS {
                out.push(Diagnostic::error(
                    None,
                    format!("at most {MAX_VARS} variables are supported"),
                ));
            }
            for (i, v) in variables.iter().enumerate() {
                if !is_identifier(v) {
                    out.push(Diagnostic::error(None, format!("invalid variable name `{v}`")));
                }
                if variables[..i].contains(v) {
                    out.push(Diagnostic::error(None, format!("variable `{v}` declared twice")));
                }
            }
            for (k, g) in ideal.iter().enumerate() {
                if g.support_len() > variables.len() {
                    out.push(Diagnostic::error(
                        None,
                        format!("generator {} uses an undeclared variable", k + 1),
                    ));
                }
                if g.constant_term() != 0 {
                    out.push(Diagnostic::error(
                        None,
                        format!(
                            "generator {} has constant term {}; generators must lie in the maximal ideal",
                            k + 1,
                            g.constant_term()
                        ),
                    ));
                }
            }
        }
        RingSpec::Extension { base, extra_vars } => {
            if *extra_vars < 1 {
                out.push(Diagnostic::error(None, "extension needs m >= 1 new variables"));
            }
            validate_into(base, out);
            if spec.num_generators() > MAX_VARS {
                out.push(Diagnostic::error(
                    None,
                    format!("at most {MAX_VARS} variables are supported"),
                ));
            }
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Semigroup { generators } => {
                write!(f, "semigroup")?;
                for g in generators {
                    write!(f, " {g}")?;
                }
                Ok(())
            }
            RingSpec::Quotient {
                field,
                variables,
                ideal,
                declared_dimension,
            } => {
                let gens: Vec<String> = ideal.iter().map(|p| p.render(variables)).collect();
                write!(f, "ring {field}[{}] / ({})", variables.join(","), gens.join(", "))?;
                if let Some(d) = declared_dimension {
                    write!(f, " dim {d}")?;
                }
                Ok(())
            }
            RingSpec::Extension { base, extra_vars } => write!(f, "extend ({base}) by {extra_vars}"),
        }
    }
}

// ---------------------------------------------------------------- parsing

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
}

fn position(text: &str, offset: usize) -> SourcePos {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    SourcePos {
        offset,
        line,
        column,
    }
}

impl<'a> Lexer<'a> {
    fn run(text: &'a str) -> Result<Lexer<'a>> {
        let mut toks = Vec::new();
        let bytes: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < bytes.len() {
            let (off, c) = bytes[i];
            if c.is_whitespace() {
                i += 1;
            } else if c == '#' {
                while i < bytes.len() && bytes[i].1 != '\n' {
                    i += 1;
                }
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().map(|b| b.1).collect();
                toks.push((Tok::Int(s), off));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < bytes.len() && (bytes[i].1.is_ascii_alphanumeric() || bytes[i].1 == '_') {
                    i += 1;
                }
                let s: String = bytes[start..i].iter().map(|b| b.1).collect();
                toks.push((Tok::Ident(s), off));
            } else if "[]()/,+-*^".contains(c) {
                toks.push((Tok::Sym(c), off));
                i += 1;
            } else {
                return Err(Error::Syntax {
                    pos: position(text, off),
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        toks.push((Tok::End, text.len()));
        Ok(Lexer { text, toks })
    }
}

struct Parser<'a> {
    lex: Lexer<'a>,
    at: usize,
    diags: Vec<Diagnostic>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.lex.toks[self.at].0
    }

    fn pos(&self) -> SourcePos {
        position(self.lex.text, self.lex.toks[self.at].1)
    }

    fn bump(&mut self) -> Tok {
        let t = self.lex.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected `{c}`, found {}", Self::describe(self.peek())))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.bump();
                Ok(())
            }
            t => {
                let found = Self::describe(t);
                self.fail(format!("expected `{kw}`, found {found}"))
            }
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek().clone() {
            Tok::Int(s) => match s.parse::<u64>() {
                Ok(v) if v <= i64::MAX as u64 => {
                    self.bump();
                    Ok(v)
                }
                _ => self.fail(format!("integer `{s}` is too large")),
            },
            t => self.fail(format!("expected an integer, found {}", Self::describe(&t))),
        }
    }

    fn spec(&mut self) -> Result<RingSpec> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "semigroup" => {
                self.bump();
                self.semigroup()
            }
            Tok::Ident(s) if s == "ring" => {
                self.bump();
                self.quotient()
            }
            Tok::Ident(s) if s == "extend" => {
                self.bump();
                self.expect_sym('(')?;
                let base = self.spec()?;
                self.expect_sym(')')?;
                self.expect_keyword("by")?;
                let m = self.int()? as usize;
                Ok(RingSpec::Extension {
                    base: Box::new(base),
                    extra_vars: m,
                })
            }
            t => self.fail(format!(
                "expected `semigroup`, `ring` or `extend`, found {}",
                Self::describe(&t)
            )),
        }
    }

    fn field_opt(&mut self) -> Result<Option<FieldSpec>> {
        match self.peek().clone() {
            Tok::Ident(s) if s == "Q" => {
                self.bump();
                Ok(Some(FieldSpec::Rationals))
            }
            Tok::Ident(s) if s == "F" => {
                self.bump();
                let p = self.int()?;
                Ok(Some(FieldSpec::PrimeField { p }))
            }
            Tok::Ident(s) if s.len() > 1 && s.starts_with('F') && s[1..].chars().all(|c| c.is_ascii_digit()) => {
                let Ok(p) = s[1..].parse::<u64>() else {
                    return self.fail(format!("characteristic in `{s}` is too large"));
                };
                self.bump();
                Ok(Some(FieldSpec::PrimeField { p }))
            }
            _ => Ok(None),
        }
    }

    fn semigroup(&mut self) -> Result<RingSpec> {
        let fpos = self.pos();
        if let Some(f) = self.field_opt()? {
            self.diags.push(Diagnostic {
                severity: Severity::Warning,
                pos: Some(fpos),
                message: format!("field {f} ignored: lengths of semigroup rings do not depend on the field"),
            });
        }
        let mut gens = Vec::new();
        while let Tok::Int(_) = self.peek() {
            let p = self.pos();
            let a = self.int()?;
            if a == 0 {
                self.diags.push(Diagnostic::error(Some(p), "semigroup generators must be positive"));
            }
            gens.push(a);
        }
        if gens.is_empty() {
            return self.fail("expected at least one semigroup generator");
        }
        gens.sort_unstable();
        gens.dedup();
        gens.retain(|&a| a > 0);
        Ok(RingSpec::Semigroup { generators: gens })
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            t => self.fail(format!("expected a variable name, found {}", Self::describe(&t))),
        }
    }

    fn varlist(&mut self) -> Result<Vec<(String, SourcePos)>> {
        let mut vars = Vec::new();
        loop {
            let p = self.pos();
            vars.push((self.ident()?, p));
            if *self.peek() == Tok::Sym(',') {
                self.bump();
            } else {
                return Ok(vars);
            }
        }
    }

    fn quotient(&mut self) -> Result<RingSpec> {
        let Some(field) = self.field_opt()? else {
            return self.fail(format!("expected a field `Q` or `F<p>`, found {}", Self::describe(self.peek())));
        };
        self.expect_sym('[')?;
        let vars: Vec<(String, SourcePos)> = if *self.peek() == Tok::Sym(']') {
            Vec::new()
        } else {
            self.varlist()?
        };
        self.expect_sym(']')?;
        for (i, (v, p)) in vars.iter().enumerate() {
            if vars[..i].iter().any(|(w, _)| w == v) {
                self.diags
                    .push(Diagnostic::error(Some(*p), format!("variable `{v}` declared twice")));
            }
        }
        if vars.len() > MAX_VARS {
            self.diags.push(Diagnostic::error(
                None,
                format!("at most {MAX_VARS} variables are supported"),
            ));
        }
        let names: Vec<String> = vars.into_iter().map(|v| v.0).collect();
        self.expect_sym('/')?;
        self.expect_sym('(')?;
        let mut ideal = Vec::new();
        if *self.peek() != Tok::Sym(')') {
            loop {
                self.ideal_item(&names, &mut ideal)?;
                if *self.peek() == Tok::Sym(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect_sym(')')?;
        let mut declared_dimension = None;
        if matches!(self.peek(), Tok::Ident(s) if s == "dim") {
            self.bump();
            declared_dimension = Some(self.int()? as usize);
        }
        Ok(RingSpec::Quotient {
            field,
            variables: names,
            ideal,
            declared_dimension,
        })
    }

    fn var_index(&mut self, names: &[String], name: &str, p: SourcePos) -> usize {
        match names.iter().position(|n| n == name) {
            Some(i) => i,
            None => {
                self.diags
                    .push(Diagnostic::error(Some(p), format!("unknown variable `{name}`")));
                usize::MAX
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let p = self.pos();
        let e = self.int()?;
        if e > MAX_EXP as u64 {
            self.diags.push(Diagnostic::error(
                Some(p),
                format!("exponent {e} exceeds the supported maximum {MAX_EXP}"),
            ));
            return Ok(MAX_EXP);
        }
        Ok(e as u32)
    }

    fn ideal_item(&mut self, names: &[String], out: &mut Vec<IntPoly>) -> Result<()> {
        if *self.peek() == Tok::Sym('(') {
            self.bump();
            let vars = self.varlist()?;
            self.expect_sym(')')?;
            self.expect_sym('^')?;
            let k = self.exponent()?;
            let idx: Vec<usize> = vars
                .iter()
                .map(|(v, p)| self.var_index(names, v, *p))
                .collect();
            if idx.contains(&usize::MAX) || names.len() > MAX_VARS {
                return Ok(());
            }
            for m in Monomial::all_of_degree(idx.len(), k) {
                let mut exps = vec![0u32; names.len()];
                for (j, &i) in idx.iter().enumerate() {
                    exps[i] += m.exp(j);
                }
                match Monomial::from_exps(&exps) {
                    Some(mono) => out.push(IntPoly::monomial(mono, 1)),
                    None => {
                        self.diags
                            .push(Diagnostic::error(None, "exponent exceeds the supported maximum"));
                        return Ok(());
                    }
                }
            }
            return Ok(());
        }
        let start = self.pos();
        let mut terms = Vec::new();
        let mut sign = 1i64;
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                sign = -1;
            }
            Tok::Sym('+') => {
                self.bump();
            }
            _ => {}
        }
        let mut ok = true;
        loop {
            match self.term(names)? {
                Some((m, c)) => match c.checked_mul(sign) {
                    Some(c) => terms.push((m, c)),
                    None => ok = false,
                },
                None => ok = false,
            }
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    sign = 1;
                }
                Tok::Sym('-') => {
                    self.bump();
                    sign = -1;
                }
                _ => break,
            }
        }
        if !ok {
            return Ok(());
        }
        match IntPoly::from_terms(terms) {
            Some(p) => out.push(p),
            None => self
                .diags
                .push(Diagnostic::error(Some(start), "coefficient overflow")),
        }
        Ok(())
    }

    /// `None` when the term referenced an unknown variable (already diagnosed).
    fn term(&mut self, names: &[String]) -> Result<Option<(Monomial, i64)>> {
        let mut coeff = 1i64;
        let mut exps = vec![0u32; names.len().min(MAX_VARS)];
        let mut valid = names.len() <= MAX_VARS;
        let mut need_power = true;
        if let Tok::Int(_) = self.peek() {
            let p = self.pos();
            let c = self.int()?;
            coeff = match i64::try_from(c) {
                Ok(c) => c,
                Err(_) => {
                    self.diags.push(Diagnostic::error(Some(p), "coefficient too large"));
                    valid = false;
                    1
                }
            };
            if *self.peek() == Tok::Sym('*') {
                self.bump();
            } else {
                need_power = false;
            }
        }
        if need_power {
            loop {
                let p = self.pos();
                let name = self.ident()?;
                let i = self.var_index(names, &name, p);
                let mut e = 1;
                if *self.peek() == Tok::Sym('^') {
                    self.bump();
                    e = self.exponent()?;
                }
                if i == usize::MAX || i >= exps.len() {
                    valid = false;
                } else {
                    exps[i] = exps[i].saturating_add(e);
                    if exps[i] > MAX_EXP {
                        self.diags.push(Diagnostic::error(
                            Some(p),
                            format!("exponent of `{name}` exceeds the supported maximum {MAX_EXP}"),
                        ));
                        valid = false;
                        exps[i] = 0;
                    }
                }
                if *self.peek() == Tok::Sym('*') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        if !valid {
            return Ok(None);
        }
        Ok(Monomial::from_exps(&exps).map(|m| (m, coeff)))
    }
}

/// Parses and validates; warnings are returned alongside the spec.
pub fn parse_ring_spec_with_warnings(text: &str) -> Result<(RingSpec, Vec<Diagnostic>)> {
    let lex = Lexer::run(text)?;
    let mut parser = Parser {
        lex,
        at: 0,
        diags: Vec::new(),
    };
    let spec = parser.spec()?;
    if *parser.peek() != Tok::End {
        return parser.fail(format!(
            "unexpected {} after the ring specification",
            Parser::describe(parser.peek())
        ));
    }
    let mut diags = parser.diags;
    // parse-time diagnostics carry positions; add whatever the structural check finds
    if !diags.iter().any(|d| d.severity == Severity::Error) {
        diags.extend(validate(&spec));
    }
    let (errors, warnings): (Vec<_>, Vec<_>) = diags
        .into_iter()
        .partition(|d| d.severity == Severity::Error);
    if !errors.is_empty() {
        return Err(Error::Validation(errors));
    }
    Ok((spec, warnings))
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    parse_ring_spec_with_warnings(text).map(|(s, _)| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_semigroup() {
        let s = parse_ring_spec("semigroup 6 7 11 15 16").unwrap();
        assert_eq!(
            s,
            RingSpec::Semigroup {
                generators: vec![6, 7, 11, 15, 16]
            }
        );
        let s = parse_ring_spec("semigroup 16 7 6 7 11 15").unwrap();
        assert_eq!(s.to_string(), "semigroup 6 7 11 15 16");
    }

    #[test]
    fn semigroup_gcd_is_validated() {
        match parse_ring_spec("semigroup 4 6") {
            Err(Error::Validation(d)) => assert!(d[0].message.contains("gcd 2")),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn semigroup_field_is_a_warning() {
        let (s, w) = parse_ring_spec_with_warnings("semigroup Q 2 3").unwrap();
        assert_eq!(s, RingSpec::semigroup(&[2, 3]));
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].severity, Severity::Warning);
    }

    #[test]
    fn parses_quotient() {
        let s = parse_ring_spec("ring Q[x,y,z] / (x*z - y*z, x*z + y^3 - z^2)").unwrap();
        match &s {
            RingSpec::Quotient {
                field,
                variables,
                ideal,
                declared_dimension,
            } => {
                assert_eq!(*field, FieldSpec::Rationals);
                assert_eq!(variables.len(), 3);
                assert_eq!(ideal.len(), 2);
                assert_eq!(*declared_dimension, None);
            }
            _ => panic!(),
        }
        assert_eq!(s.to_string(), "ring Q[x,y,z] / (x*z - y*z, x*z - z^2 + y^3)");
    }

    #[test]
    fn expands_power_of_variables() {
        let s = parse_ring_spec("ring F32003[x,y,z] / (x^2, x*y, y^2, (x,y,z)^3)").unwrap();
        match s {
            RingSpec::Quotient { ideal, field, .. } => {
                assert_eq!(field, FieldSpec::PrimeField { p: 32003 });
                assert_eq!(ideal.len(), 3 + 10);
            }
            _ => panic!(),
        }
        assert!(parse_ring_spec("ring F 7 [x] / (x^2) dim 0").is_ok());
    }

    #[test]
    fn constant_term_rejected() {
        match parse_ring_spec("ring Q[x] / (x + 1)") {
            Err(Error::Validation(d)) => assert!(d[0].message.contains("constant term")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_variable_has_position() {
        match parse_ring_spec("ring Q[x,y] / (x*w)") {
            Err(Error::Validation(d)) => {
                assert!(d[0].message.contains("unknown variable `w`"));
                assert_eq!(d[0].pos.unwrap().column, 18);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(parse_ring_spec("ring F9[x] / (x^2)"), Err(Error::Validation(_))));
        assert!(matches!(parse_ring_spec("ring F2[x] / (x^2)"), Err(Error::Validation(_))));
    }

    #[test]
    fn syntax_errors_have_positions() {
        match parse_ring_spec("ring Q[x,y] / (x y)") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos.column, 18),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ring_spec(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ring_spec("semigroup 2 3 $"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&RingSpec::semigroup(&[6, 7, 11, 15, 16])).is_empty());
        let base = parse_ring_spec("ring Q[x] / (x^2)").unwrap();
        let bad = RingSpec::Extension {
            base: Box::new(base.clone()),
            extra_vars: 0,
        };
        let d = validate(&bad);
        assert_eq!(d.len(), 1);
        assert!(d[0].message.contains("m >= 1"));
        assert_eq!(validate(&bad), d);
        let with_constant = RingSpec::Quotient {
            field: FieldSpec::Rationals,
            variables: vec!["x".into()],
            ideal: vec![IntPoly::from_terms(vec![(Monomial::var(0), 1), (Monomial::ONE, 1)]).unwrap()],
            declared_dimension: None,
        };
        let d = validate(&with_constant);
        assert_eq!(d.len(), 1);
        assert!(d[0].message.contains("constant term"));
    }

    #[test]
    fn extension_round_trip() {
        let s = parse_ring_spec("extend (semigroup 3 4 5) by 2").unwrap();
        assert_eq!(s.to_string(), "extend (semigroup 3 4 5) by 2");
        assert_eq!(s.num_generators(), 5);
        assert_eq!(s.generator_names(), vec!["t3", "t4", "t5", "X1", "X2"]);
        assert!(matches!(parse_ring_spec("extend (semigroup 3 4) by 0"), Err(Error::Validation(_))));
    }

    #[test]
    fn comments_and_newlines() {
        let s = parse_ring_spec("# a curve\nring Q[x,y]\n / (x^3 - y^2) # cusp\n").unwrap();
        assert_eq!(s.to_string(), "ring Q[x,y] / (-y^2 + x^3)");
    }

    fn poly_strategy() -> impl Strategy<Value = String> {
        let term = (1i64..5, 0u32..3, 0u32..3, 0u32..2)
            .prop_filter("in the maximal ideal", |(_, a, b, c)| a + b + c > 0)
            .prop_map(|(c, a, b, d)| {
                let mut parts = vec![c.to_string()];
                for (n, e) in [("x", a), ("y", b), ("z", d)] {
                    if e > 0 {
                        parts.push(format!("{n}^{e}"));
                    }
                }
                parts.join("*")
            });
        prop::collection::vec((term, any::<bool>()), 1..4).prop_map(|ts| {
            let mut s = String::new();
            for (k, (t, neg)) in ts.into_iter().enumerate() {
                if k > 0 || neg {
                    s.push_str(if neg { " - " } else { " + " });
                }
                s.push_str(&t);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn print_parse_is_stable(polys in prop::collection::vec(poly_strategy(), 0..4), ext in 0usize..3) {
            let mut text = format!("ring F32003[x,y,z] / ({})", polys.join(", "));
            if ext > 0 {
                text = format!("extend ({text}) by {ext}");
            }
            if let Ok(spec) = parse_ring_spec(&text) {
                let again = parse_ring_spec(&spec.to_string()).unwrap();
                prop_assert_eq!(&again, &spec);
                prop_assert_eq!(again.to_string(), spec.to_string());
            }
        }

        #[test]
        fn parsing_is_total(text in "[ -~\\n]{0,60}") {
            match parse_ring_spec(&text) {
                Ok(spec) => prop_assert!(validate(&spec).is_empty()),
                Err(Error::Syntax { pos, .. }) => prop_assert!(pos.offset <= text.len()),
                Err(Error::Validation(d)) => prop_assert!(!d.is_empty()),
                Err(e) => prop_assert!(false, "unexpected error {e}"),
            }
        }

        #[test]
        fn parsing_keyword_soup_is_total(parts in prop::collection::vec(
            prop::sample::select(vec!["ring", "semigroup", "extend", "by", "dim", "Q", "F", "F7", "x", "y",
                "[", "]", "(", ")", "/", ",", "+", "-", "*", "^", "2", "3", "0", "99999999999999999999"]), 0..20)) {
            let text = parts.join(" ");
            let _ = parse_ring_spec(&text);
        }
    }
}
