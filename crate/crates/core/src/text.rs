//! Line-oriented readers shared by the `.gpd`, `.map` and `.cspec` parsers.

use crate::error::{Error, Result};

pub(crate) struct LineReader<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> LineReader<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let mut lines: Vec<&str> = text.lines().map(str::trim_end).collect();
        while lines.last().is_some_and(|l| l.trim().is_empty()) {
            lines.pop();
        }
        LineReader { lines, pos: 0 }
    }

    /// 1-based number of the line the next call to `next_line` returns.
    pub(crate) fn line_no(&self) -> usize {
        self.pos + 1
    }

    pub(crate) fn next_line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let no = self.line_no();
        match self.lines.get(self.pos) {
            Some(line) => {
                self.pos += 1;
                Ok((no, line.trim()))
            }
            None => Err(Error::malformed(no, format!("unexpected end of input, expected {what}"))),
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if self.pos < self.lines.len() {
            return Err(Error::malformed(self.line_no(), "unexpected trailing content"));
        }
        Ok(())
    }

    pub(crate) fn read_count(&mut self, what: &str) -> Result<usize> {
        let (no, line) = self.next_line(what)?;
        parse_usize(no, line, what)
    }

    /// Reads one row of exactly `len` entries, each below `bound`.
    pub(crate) fn read_row(&mut self, len: usize, bound: usize, what: &str) -> Result<Vec<usize>> {
        let (no, line) = self.next_line(what)?;
        parse_row(no, line, len, bound)
    }
}

pub(crate) fn parse_usize(line_no: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::malformed(line_no, format!("expected {what}, found {token:?}")))
}

pub(crate) fn parse_row(line_no: usize, line: &str, len: usize, bound: usize) -> Result<Vec<usize>> {
    let row = line
        .split_whitespace()
        .map(|tok| parse_usize(line_no, tok, "an entry"))
        .collect::<Result<Vec<_>>>()?;
    if row.len() != len {
        return Err(Error::malformed(
            line_no,
            format!("expected {len} entries, found {}", row.len()),
        ));
    }
    if let Some(bad) = row.iter().find(|&&v| v >= bound) {
        return Err(Error::malformed(
            line_no,
            format!("entry {bad} out of range (must be < {bound})"),
        ));
    }
    Ok(row)
}

pub(crate) fn write_row(out: &mut String, row: &[usize]) {
    let mut first = true;
    for v in row {
        if !first {
            out.push(' ');
        }
        first = false;
        out.push_str(&v.to_string());
    }
    out.push('\n');
}
