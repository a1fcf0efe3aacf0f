//! Line-based text formats for fence diagrams and rectilinear fronts.
//!
//! ```text
//! fence 1            front 1
//! strands 2          segments
//! bands 1-2 1-2      H 0 0 5
//!                    V 5 0 3
//!                    ...
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Line and column numbers
//! in errors are 1-based and refer to the original text.

use crate::diagram::{Band, FenceDiagram};
use crate::error::{Error, Result};
use crate::legendrian::{FrontSegment, RectilinearFront};

/// A whitespace-separated token with its source position.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, each split into tokens.
fn logical_lines(text: &str) -> Vec<Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .filter_map(|(n, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (i, c) in content.char_indices().chain([(content.len(), ' ')]) {
                match (c.is_whitespace(), start) {
                    (false, None) => start = Some(i),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..i],
                            line: n + 1,
                            column: content[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(tokens)
        })
        .collect()
}

/// Expects a line starting with `keyword`; `last_line` locates the error
/// when the input ends early.
fn keyword_line<'a>(
    lines: &mut std::vec::IntoIter<Vec<Token<'a>>>,
    keyword: &str,
    last_line: usize,
) -> Result<Vec<Token<'a>>> {
    let tokens = lines
        .next()
        .ok_or_else(|| parse_error(last_line + 1, 1, format!("expected `{keyword}`")))?;
    if tokens[0].text != keyword {
        return Err(parse_error(
            tokens[0].line,
            tokens[0].column,
            format!("expected `{keyword}`, found `{}`", tokens[0].text),
        ));
    }
    Ok(tokens)
}

fn integer<T: std::str::FromStr>(token: &Token<'_>, what: &str) -> Result<T> {
    token.text.parse().map_err(|_| {
        parse_error(
            token.line,
            token.column,
            format!("expected {what}, found `{}`", token.text),
        )
    })
}

fn header(lines: &mut std::vec::IntoIter<Vec<Token<'_>>>, keyword: &str) -> Result<usize> {
    let tokens = keyword_line(lines, keyword, 0)?;
    match tokens.as_slice() {
        [_, version] if version.text == "1" => Ok(version.line),
        [_, version, ..] => Err(parse_error(
            version.line,
            version.column,
            format!("unsupported version `{}`", version.text),
        )),
        [kw] => Err(parse_error(
            kw.line,
            kw.column + kw.text.len(),
            "missing version",
        )),
        [] => unreachable!("logical lines are non-empty"),
    }
}

fn trailing(lines: &mut std::vec::IntoIter<Vec<Token<'_>>>) -> Result<()> {
    match lines.next() {
        Some(tokens) => Err(parse_error(
            tokens[0].line,
            tokens[0].column,
            "unexpected content after the diagram",
        )),
        None => Ok(()),
    }
}

pub fn parse_fence(text: &str) -> Result<FenceDiagram> {
    let mut lines = logical_lines(text).into_iter();
    let header_line = header(&mut lines, "fence")?;
    let strands_tokens = keyword_line(&mut lines, "strands", header_line)?;
    let strands: usize = match strands_tokens.as_slice() {
        [_, count] => integer(count, "a strand count")?,
        [kw] => {
            return Err(parse_error(kw.line, kw.column + kw.text.len(), "missing strand count"));
        }
        [_, _, extra, ..] => return Err(parse_error(extra.line, extra.column, "unexpected token")),
        [] => unreachable!("logical lines are non-empty"),
    };
    let strands_line = strands_tokens[0].line;
    if strands == 0 {
        return Err(Error::Range {
            line: strands_line,
            message: "at least one strand is required".into(),
        });
    }
    let band_tokens = keyword_line(&mut lines, "bands", strands_line)?;
    let mut word = Vec::with_capacity(band_tokens.len() - 1);
    for token in &band_tokens[1..] {
        let (top, bottom) = token.text.split_once('-').ok_or_else(|| {
            parse_error(
                token.line,
                token.column,
                format!("expected a band `i-j`, found `{}`", token.text),
            )
        })?;
        let number = |s: &str, offset: usize| {
            s.parse::<usize>().map_err(|_| {
                parse_error(
                    token.line,
                    token.column + offset,
                    format!("expected a line number, found `{s}`"),
                )
            })
        };
        let top = number(top, 0)?;
        let bottom = number(bottom, top.to_string().len() + 1)?;
        if top == 0 || top >= bottom || bottom > strands {
            return Err(Error::Range {
                line: token.line,
                message: format!("band {top}-{bottom} needs 1 <= i < j <= {strands}"),
            });
        }
        word.push(Band::new(top, bottom)?);
    }
    trailing(&mut lines)?;
    FenceDiagram::new(strands, word)
}

pub fn serialize_fence(f: &FenceDiagram) -> String {
    let mut out = format!("fence 1\nstrands {}\nbands", f.strands());
    for band in f.word() {
        out.push_str(&format!(" {band}"));
    }
    out.push('\n');
    out
}

pub fn parse_front(text: &str) -> Result<RectilinearFront> {
    let mut lines = logical_lines(text).into_iter();
    let header_line = header(&mut lines, "front")?;
    let first = keyword_line(&mut lines, "segments", header_line)?;
    let tokens: Vec<Token<'_>> = first
        .into_iter()
        .skip(1)
        .chain(lines.flatten())
        .collect();
    let mut segments = Vec::new();
    for group in tokens.chunks(4) {
        let kind = group[0];
        if group.len() < 4 {
            let last = group[group.len() - 1];
            return Err(parse_error(
                last.line,
                last.column + last.text.len(),
                "segment needs three coordinates",
            ));
        }
        let (a, b, c) = (
            integer(&group[1], "a coordinate")?,
            integer(&group[2], "a coordinate")?,
            integer(&group[3], "a coordinate")?,
        );
        segments.push(match kind.text {
            "H" | "h" => FrontSegment::Horizontal { y: a, x1: b, x2: c },
            "V" | "v" => FrontSegment::Vertical { x: a, y1: b, y2: c },
            other => {
                return Err(parse_error(
                    kind.line,
                    kind.column,
                    format!("expected `H` or `V`, found `{other}`"),
                ));
            }
        });
    }
    Ok(RectilinearFront::new(segments))
}

pub fn serialize_front(w: &RectilinearFront) -> String {
    let mut out = String::from("front 1\nsegments\n");
    for s in &w.segments {
        match *s {
            FrontSegment::Horizontal { y, x1, x2 } => out.push_str(&format!("H {y} {x1} {x2}\n")),
            FrontSegment::Vertical { x, y1, y2 } => out.push_str(&format!("V {x} {y1} {y2}\n")),
        }
    }
    out
}
