//! Shared plumbing for the crate's text formats: a byte scanner with offset
//! tracking, the common parse-error type, and a statement splitter for the
//! line-oriented formats (tangle programs, fronts, PD files).
//!
//! Statements are separated by newlines or semicolons; `#` starts a comment
//! that runs to the end of the line.

use alloc::vec::Vec;
use core::fmt;

/// Parse error with the byte offset of the failure and a description of what
/// was expected there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: &'static str,
}

impl ParseError {
    pub fn new(offset: usize, expected: &'static str) -> Self {
        ParseError { offset, expected }
    }

    /// 1-based line and column of the error inside `src`.
    pub fn line_col(&self, src: &str) -> (usize, usize) {
        offset_to_line_col(src, self.offset)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected {}", self.offset, self.expected)
    }
}

/// Maps a byte offset to a 1-based `(line, column)` pair.
pub fn offset_to_line_col(src: &str, offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut col = 1;
    for (pos, b) in src.bytes().enumerate() {
        if pos >= offset {
            break;
        }
        if b == b'\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

pub struct Scanner<'a> {
    bytes: &'a [u8],
    base: usize,
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), base: 0, pos: 0 }
    }

    /// Scanner over a slice of a larger source; reported offsets are
    /// relative to the original source.
    pub fn with_base(s: &'a str, base: usize) -> Self {
        Scanner { bytes: s.as_bytes(), base, pos: 0 }
    }

    pub fn offset(&self) -> usize {
        self.base + self.pos
    }

    pub fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    pub fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    pub fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    pub fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, b: u8, what: &'static str) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    pub fn err(&self, expected: &'static str) -> ParseError {
        ParseError { offset: self.offset(), expected }
    }

    pub fn digits(&mut self) -> Result<&'a [u8], ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            Err(self.err("a digit"))
        } else {
            Ok(&self.bytes[start..self.pos])
        }
    }

    /// Signed decimal integer constrained to `i32`.
    pub fn int(&mut self) -> Result<i32, ParseError> {
        let start = self.offset();
        let neg = self.eat(b'-');
        let ds = self.digits()?;
        let mut value: i64 = 0;
        for &d in ds {
            value = value * 10 + i64::from(d - b'0');
            if value > i64::from(i32::MAX) + 1 {
                return Err(ParseError::new(start, "an integer within i32 range"));
            }
        }
        let value = if neg { -value } else { value };
        i32::try_from(value).map_err(|_| ParseError::new(start, "an integer within i32 range"))
    }

    /// Bare identifier: ASCII alphabetic or `_`, then alphanumeric or `_`.
    pub fn ident(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        if !self.peek().is_some_and(|b| b.is_ascii_alphabetic() || b == b'_') {
            return Err(self.err("an identifier"));
        }
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .map_err(|_| self.err("an ASCII identifier"))
    }
}

/// Splits source into nonempty statements, separated by `;` or newlines,
/// with `#` comments stripped. Yields `(byte_offset, statement_text)`.
pub fn statements(src: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut start = 0;
    let mut in_comment = false;
    let mut comment_from = 0;
    let mut push = |from: usize, to: usize, out: &mut Vec<(usize, &str)>| {
        let piece = &src[from..to];
        let trimmed = piece.trim();
        if !trimmed.is_empty() {
            let lead = piece.len() - piece.trim_start().len();
            out.push((from + lead, trimmed));
        }
    };
    for (pos, &b) in bytes.iter().enumerate() {
        match b {
            b'#' if !in_comment => {
                in_comment = true;
                comment_from = pos;
            }
            b'\n' | b';' => {
                let end = if in_comment { comment_from } else { pos };
                push(start, end, &mut out);
                start = pos + 1;
                in_comment = false;
            }
            _ => {}
        }
    }
    if !in_comment {
        push(start, src.len(), &mut out);
    } else {
        push(start, comment_from, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statement_splitting() {
        let src = "width 2; cross 1 +\n# comment line\n twist 1 k ; close trace";
        let stmts = statements(src);
        let texts: Vec<&str> = stmts.iter().map(|&(_, t)| t).collect();
        assert_eq!(texts, ["width 2", "cross 1 +", "twist 1 k", "close trace"]);
        // offsets point at the first non-space byte of each statement
        assert_eq!(stmts[0].0, 0);
        assert_eq!(&src[stmts[2].0..stmts[2].0 + 5], "twist");
    }

    #[test]
    fn line_col_mapping() {
        let src = "ab\ncd";
        assert_eq!(offset_to_line_col(src, 0), (1, 1));
        assert_eq!(offset_to_line_col(src, 4), (2, 2));
    }
}
