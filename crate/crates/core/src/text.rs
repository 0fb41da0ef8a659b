//! The `.ht` model format.
//!
//! Line oriented; `#` starts a comment and blank lines are ignored:
//!
//! ```text
//! vertex crew
//! relation R_report(r1, r2)
//! report = < incident, location ; R_report ; b_fire, b_police > : alpha
//! ```
//!
//! The tag segment may be left out entirely, as may `: kind` (alpha). A
//! participant written `!x` is the anti-vertex of `x`. Names may be used
//! before they are declared.
//!
//! [`serialize`] writes the canonical form: vertices, then relations, then
//! hypersimplices, each in stored order, with the kind always spelled out.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::axioms::{self, Defect};
use crate::error::{ParseError, ParseErrorKind, SourceSpan};
use crate::model::{
    is_identifier_char, Hypernetwork, HypernetworkParts, Hypersimplex, Identifier, Kind,
    Participant, RelationSymbol,
};

pub fn serialize(h: &Hypernetwork) -> String {
    let mut out = String::new();
    for v in h.vertices() {
        let _ = writeln!(out, "vertex {v}");
    }
    for r in h.relations() {
        let roles: Vec<&str> = r.roles().iter().map(Identifier::as_str).collect();
        let _ = writeln!(out, "relation {}({})", r.id(), roles.join(", "));
    }
    for s in h.simplices() {
        out.push_str(&simplex_line(s));
        out.push('\n');
    }
    out
}

/// Canonical one-line rendering of a hypersimplex declaration.
pub fn simplex_line(s: &Hypersimplex) -> String {
    let participants: Vec<String> = s.participants().iter().map(ToString::to_string).collect();
    let mut line = format!(
        "{} = < {} ; {}",
        s.id(),
        participants.join(", "),
        s.relation()
    );
    if !s.tags().is_empty() {
        let tags: Vec<&str> = s.tags().iter().map(Identifier::as_str).collect();
        let _ = write!(line, " ; {}", tags.join(", "));
    }
    let _ = write!(line, " > : {}", s.kind());
    line
}

/// Parses and validates. Every defect is reported with the position of the
/// declaration or reference that caused it.
pub fn parse(text: &str) -> Result<Hypernetwork, ParseError> {
    let (parts, spans) = parse_with_spans(text)?;
    let report = axioms::validate_parts(&parts);
    match report.violations.first() {
        None => Ok(Hypernetwork::new(parts).expect("validated parts construct")),
        Some(v) => {
            let span = match v.defect {
                Defect::Duplicate => spans.duplicate.get(&v.subject),
                Defect::Unresolved | Defect::NotAVertex => spans.reference.get(&v.subject),
                Defect::Arity | Defect::DuplicateTag | Defect::Cycle => {
                    spans.declaration.get(&v.subject)
                }
            }
            .copied()
            .unwrap_or(SourceSpan { line: 1, column: 1 });
            Err(ParseError {
                kind: v.defect.into(),
                span,
                message: v.message.clone(),
            })
        }
    }
}

/// Parses without resolving names, so that invalid models can still be
/// handed to [`axioms::validate_parts`]. Only syntax errors are reported.
pub fn parse_unchecked(text: &str) -> Result<HypernetworkParts, ParseError> {
    parse_with_spans(text).map(|(parts, _)| parts)
}

#[derive(Default)]
struct Spans {
    declaration: HashMap<Identifier, SourceSpan>,
    duplicate: HashMap<Identifier, SourceSpan>,
    reference: HashMap<Identifier, SourceSpan>,
}

impl Spans {
    fn declare(&mut self, id: &Identifier, span: SourceSpan) {
        if self.declaration.contains_key(id) {
            self.duplicate.entry(id.clone()).or_insert(span);
        } else {
            self.declaration.insert(id.clone(), span);
        }
    }

    fn refer(&mut self, id: &Identifier, span: SourceSpan) {
        self.reference.entry(id.clone()).or_insert(span);
    }
}

fn parse_with_spans(text: &str) -> Result<(HypernetworkParts, Spans), ParseError> {
    let mut parts = HypernetworkParts::default();
    let mut spans = Spans::default();
    for (n, raw) in text.lines().enumerate() {
        let tokens = tokenize(raw, n + 1)?;
        if tokens.is_empty() {
            continue;
        }
        let mut line = Line {
            tokens,
            at: 0,
            line: n + 1,
            end_column: raw.chars().count() + 1,
        };
        line.declaration(&mut parts, &mut spans)?;
    }
    Ok((parts, spans))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Punct(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: SourceSpan,
}

fn tokenize(raw: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = raw.chars().enumerate().peekable();
    while let Some((i, c)) = chars.next() {
        let span = SourceSpan {
            line,
            column: i + 1,
        };
        match c {
            '#' => break,
            c if c.is_whitespace() => {}
            '<' | '>' | ';' | ',' | '=' | ':' | '!' | '(' | ')' => tokens.push(Token {
                tok: Tok::Punct(c),
                span,
            }),
            c if is_identifier_char(c) => {
                let mut name = String::from(c);
                while let Some(&(_, next)) = chars.peek() {
                    if !is_identifier_char(next) {
                        break;
                    }
                    name.push(next);
                    chars.next();
                }
                tokens.push(Token {
                    tok: Tok::Name(name),
                    span,
                });
            }
            other => return Err(syntax(span, format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

fn syntax(span: SourceSpan, message: impl Into<String>) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Syntax,
        span,
        message: message.into(),
    }
}

struct Line {
    tokens: Vec<Token>,
    at: usize,
    line: usize,
    end_column: usize,
}

impl Line {
    fn span(&self) -> SourceSpan {
        self.tokens
            .get(self.at)
            .map(|t| t.span)
            .unwrap_or(SourceSpan {
                line: self.line,
                column: self.end_column,
            })
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|t| &t.tok)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.tokens.get(self.at + offset).map(|t| &t.tok)
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(Tok::Name(n)) => format!("`{n}`"),
            Some(Tok::Punct(c)) => format!("`{c}`"),
            None => "end of line".into(),
        }
    }

    fn name(&mut self, what: &str) -> Result<(Identifier, SourceSpan), ParseError> {
        let span = self.span();
        match self.peek() {
            Some(Tok::Name(n)) => {
                let id = Identifier::new(n).expect("tokenizer only yields identifier characters");
                self.at += 1;
                Ok((id, span))
            }
            _ => Err(syntax(
                span,
                format!("expected {what}, found {}", self.found()),
            )),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(syntax(
                self.span(),
                format!("expected `{c}`, found {}", self.found()),
            ))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Punct(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        if self.at == self.tokens.len() {
            Ok(())
        } else {
            Err(syntax(
                self.span(),
                format!("unexpected {} after declaration", self.found()),
            ))
        }
    }

    /// `ITEM (, ITEM)*`
    fn list<T>(
        &mut self,
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        let mut items = vec![item(self)?];
        while self.eat(',') {
            items.push(item(self)?);
        }
        Ok(items)
    }

    fn declaration(
        &mut self,
        parts: &mut HypernetworkParts,
        spans: &mut Spans,
    ) -> Result<(), ParseError> {
        let keyword = match (self.peek(), self.peek_at(1)) {
            (Some(Tok::Name(k)), Some(Tok::Name(_))) => Some(k.clone()),
            _ => None,
        };
        match keyword.as_deref() {
            Some("vertex") => {
                self.at += 1;
                let (id, span) = self.name("vertex name")?;
                self.end()?;
                spans.declare(&id, span);
                parts.vertices.push(id);
            }
            Some("relation") => {
                self.at += 1;
                let (id, span) = self.name("relation name")?;
                self.punct('(')?;
                let roles = self.list(|l| l.name("role name").map(|(r, _)| r))?;
                self.punct(')')?;
                self.end()?;
                let relation = RelationSymbol::new(id.clone(), roles)
                    .map_err(|e| syntax(span, e.to_string()))?;
                spans.declare(&id, span);
                parts.relations.push(relation);
            }
            Some(other) => {
                return Err(syntax(
                    self.span(),
                    format!("unknown declaration keyword `{other}`, expected vertex or relation"),
                ))
            }
            None => self.simplex(parts, spans)?,
        }
        Ok(())
    }

    fn simplex(
        &mut self,
        parts: &mut HypernetworkParts,
        spans: &mut Spans,
    ) -> Result<(), ParseError> {
        let (id, span) = self.name("declaration")?;
        self.punct('=')?;
        self.punct('<')?;
        let participants = self.list(|l| {
            let excluded = l.eat('!');
            let (x, span) = l.name("participant")?;
            spans.refer(&x, span);
            Ok(if excluded {
                Participant::Excluded(x)
            } else {
                Participant::Present(x)
            })
        })?;
        self.punct(';')?;
        let (relation, relation_span) = self.name("relation name")?;
        spans.refer(&relation, relation_span);
        let mut tags = Vec::new();
        let mut tag_spans = Vec::new();
        if self.eat(';') {
            for (tag, tag_span) in self.list(|l| l.name("boundary tag"))? {
                tags.push(tag);
                tag_spans.push(tag_span);
            }
        }
        self.punct('>')?;
        let kind = if self.eat(':') {
            let (k, kind_span) = self.name("kind")?;
            k.as_str()
                .parse::<Kind>()
                .map_err(|msg| syntax(kind_span, msg))?
        } else {
            Kind::Alpha
        };
        self.end()?;
        let simplex = Hypersimplex::new(id.clone(), participants, relation, kind, tags.clone())
            .map_err(|e| {
                let at = tags
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(i, t)| tags[..*i].contains(t))
                    .map(|(i, _)| tag_spans[i])
                    .unwrap_or(span);
                ParseError {
                    kind: ParseErrorKind::DuplicateTag,
                    span: at,
                    message: e.to_string(),
                }
            })?;
        spans.declare(&id, span);
        parts.simplices.push(simplex);
        Ok(())
    }
}
