//! A minimal s-expression reader with source positions, shared by the
//! program and formula notations.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom { text: String, pos: usize },
    List { items: Vec<Sexp>, pos: usize },
}

impl Sexp {
    pub fn pos(&self) -> usize {
        match self {
            Sexp::Atom { pos, .. } | Sexp::List { pos, .. } => *pos,
        }
    }
}

/// A parse failure at a character offset (0-based) into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: {}", self.pos + 1, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Deepest list nesting accepted. Consumers walk the tree recursively.
pub const MAX_DEPTH: usize = 1_000;

/// Parses exactly one datum; trailing input is an error.
pub fn parse(text: &str) -> Result<Sexp, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let datum = read(&chars, &mut pos)?;
    skip_ws(&chars, &mut pos);
    if pos < chars.len() {
        return Err(ParseError::new(pos, "unexpected trailing input"));
    }
    Ok(datum)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && chars[*pos].is_whitespace() {
        *pos += 1;
    }
}

fn read(chars: &[char], pos: &mut usize) -> Result<Sexp, ParseError> {
    let mut open: Vec<(usize, Vec<Sexp>)> = Vec::new();
    loop {
        skip_ws(chars, pos);
        let Some(&c) = chars.get(*pos) else {
            return Err(match open.last() {
                Some((start, _)) => ParseError::new(*start, "unclosed `(`"),
                None => ParseError::new(*pos, "empty input"),
            });
        };
        let done = match c {
            '(' => {
                if open.len() == MAX_DEPTH {
                    return Err(ParseError::new(
                        *pos,
                        format!("nesting deeper than {MAX_DEPTH}"),
                    ));
                }
                open.push((*pos, Vec::new()));
                *pos += 1;
                None
            }
            ')' => {
                let Some((start, items)) = open.pop() else {
                    return Err(ParseError::new(*pos, "unbalanced `)`"));
                };
                *pos += 1;
                Some(Sexp::List { items, pos: start })
            }
            _ => {
                let start = *pos;
                while *pos < chars.len()
                    && !chars[*pos].is_whitespace()
                    && chars[*pos] != '('
                    && chars[*pos] != ')'
                {
                    *pos += 1;
                }
                Some(Sexp::Atom {
                    text: chars[start..*pos].iter().collect(),
                    pos: start,
                })
            }
        };
        if let Some(datum) = done {
            match open.last_mut() {
                Some((_, items)) => items.push(datum),
                None => return Ok(datum),
            }
        }
    }
}
