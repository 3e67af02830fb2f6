//! The on-disk table format: a header line `p l n k` (four base-10
//! integers separated by single spaces) followed by `p^{l·n}` base-10
//! values in `[0, p^k)`, whitespace-separated, in the little-endian
//! mixed-radix index order of [`GbFunc`]. Lines starting with `#` are
//! comments. One file holds one function.

use std::fmt;

use gbent_core::cyclotomic::is_odd_prime;
use gbent_core::GbFunc;

/// A parse failure with 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, col, message: message.into() }
}

/// Tokens of one line with their 1-based column positions.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_table(text: &str) -> Result<GbFunc, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'));

    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| err(1, 1, "empty input: expected a header line `p l n k`"))?;

    let head_tokens = tokens(header);
    if head_tokens.len() != 4 {
        return Err(err(
            header_line,
            1,
            format!("header must be four integers `p l n k`, found {} tokens", head_tokens.len()),
        ));
    }
    let mut nums = [0u64; 4];
    for (slot, (col, tok)) in nums.iter_mut().zip(&head_tokens) {
        *slot = tok
            .parse::<u64>()
            .map_err(|_| err(header_line, *col, format!("`{tok}` is not a base-10 integer")))?;
    }
    let [p, l, n, k] = nums;
    if !is_odd_prime(p) {
        return Err(err(header_line, head_tokens[0].0, format!("p = {p} is not an odd prime")));
    }
    let (l, n, k) = (
        u32::try_from(l).map_err(|_| err(header_line, head_tokens[1].0, "l out of range"))?,
        u32::try_from(n).map_err(|_| err(header_line, head_tokens[2].0, "n out of range"))?,
        u32::try_from(k).map_err(|_| err(header_line, head_tokens[3].0, "k out of range"))?,
    );
    if l == 0 || n == 0 || k == 0 {
        return Err(err(header_line, 1, "l, n, k must all be at least 1"));
    }
    if l > k {
        return Err(err(header_line, head_tokens[1].0, format!("l = {l} exceeds k = {k}")));
    }
    let modulus = p
        .checked_pow(k)
        .ok_or_else(|| err(header_line, head_tokens[3].0, "p^k overflows"))?;
    let expected = p
        .checked_pow(l)
        .and_then(|r| r.checked_pow(n))
        .and_then(|s| usize::try_from(s).ok())
        .ok_or_else(|| err(header_line, head_tokens[2].0, "p^(l*n) overflows"))?;

    let mut table = Vec::with_capacity(expected);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        for (col, tok) in tokens(line) {
            let value = tok
                .parse::<u64>()
                .map_err(|_| err(line_no, col, format!("`{tok}` is not a base-10 integer")))?;
            if value >= modulus {
                return Err(err(
                    line_no,
                    col,
                    format!("value {value} is out of range [0, {modulus})"),
                ));
            }
            if table.len() == expected {
                return Err(err(line_no, col, format!("too many values: expected {expected}")));
            }
            table.push(value);
        }
    }
    if table.len() != expected {
        return Err(err(
            last_line,
            1,
            format!("expected {expected} values, found {}", table.len()),
        ));
    }
    Ok(GbFunc::new(p, l, n, k, table).expect("parser enforced every invariant"))
}

/// Serializes a function in the same format `parse_table` reads, one
/// domain row (`p^l` values) per line.
pub fn emit_table(f: &GbFunc) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {} {} {}\n", f.p(), f.l(), f.n(), f.k()));
    let row = f.domain_radix() as usize;
    for chunk in f.table().chunks(row) {
        let line: Vec<String> = chunk.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_table() {
        let f = parse_table("3 1 1 1\n0 0 0\n").unwrap();
        assert_eq!((f.p(), f.l(), f.n(), f.k()), (3, 1, 1, 1));
        assert_eq!(f.table(), &[0, 0, 0]);
    }

    #[test]
    fn parses_with_comments_and_layout() {
        let text = "# a comment\n3 1 2 2\n0 1 2\n3 4 5\n# trailing comment\n6 7 8";
        let f = parse_table(text).unwrap();
        assert_eq!(f.table(), &[0, 1, 2, 3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn rejects_even_p() {
        let e = parse_table("4 1 1 1\n0 0 0 0\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("odd prime"));
    }

    #[test]
    fn rejects_l_above_k() {
        let e = parse_table("3 2 1 1\n0 0 0 0 0 0 0 0 0\n").unwrap_err();
        assert!(e.message.contains("exceeds"));
    }

    #[test]
    fn rejects_out_of_range_value_with_position() {
        let e = parse_table("3 1 1 1\n0 3 0\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        assert!(e.message.contains("out of range"));
    }

    #[test]
    fn rejects_wrong_count() {
        let e = parse_table("3 1 1 1\n0 0\n").unwrap_err();
        assert!(e.message.contains("expected 3 values"));
        let e = parse_table("3 1 1 1\n0 0 0 0\n").unwrap_err();
        assert!(e.message.contains("too many"));
    }

    #[test]
    fn rejects_garbage_token() {
        let e = parse_table("3 1 1 1\n0 x 0\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
    }

    #[test]
    fn emit_parse_roundtrip() {
        let f = GbFunc::from_fn(3, 1, 2, 2, |x| (x[0] * 4 + x[1] * 7) % 9).unwrap();
        assert_eq!(parse_table(&emit_table(&f)).unwrap(), f);
    }
}
