//! Plain-text matrix files: a `ROWS COLS` header line followed by the
//! entries, whitespace separated. ASCII, Unix or Windows newlines.

use lawrence_core::Configuration;

/// A parse failure with a 1-based position for diagnostics.
#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

fn err(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

/// Tokens with their 1-based (line, col) origin.
fn tokens(text: &str) -> Vec<(usize, usize, &str)> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.strip_suffix('\r').unwrap_or(line);
        let mut col = 0;
        for piece in line.split_whitespace() {
            let at = line[col..].find(piece).expect("piece comes from line") + col;
            out.push((li + 1, at + 1, piece));
            col = at + piece.len();
        }
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Configuration, ParseError> {
    let toks = tokens(text);
    let int = |idx: usize, what: &str| -> Result<i64, ParseError> {
        let Some(&(l, c, t)) = toks.get(idx) else {
            let (l, c) = toks.last().map(|&(l, c, t)| (l, c + t.len())).unwrap_or((1, 1));
            return Err(err(l, c, format!("expected {what}, found end of file")));
        };
        t.parse::<i64>()
            .map_err(|_| err(l, c, format!("expected {what}, found `{t}`")))
    };
    let rows = int(0, "row count")?;
    let cols = int(1, "column count")?;
    if rows <= 0 || cols <= 0 {
        let (l, c, _) = toks[if rows <= 0 { 0 } else { 1 }];
        return Err(err(l, c, "matrix dimensions must be positive"));
    }
    let (rows, cols) = (rows as usize, cols as usize);
    let want = rows * cols;
    let mut entries = Vec::with_capacity(want);
    for k in 0..want {
        entries.push(int(2 + k, "matrix entry")?);
    }
    if let Some(&(l, c, t)) = toks.get(2 + want) {
        return Err(err(l, c, format!("trailing token `{t}` after {want} entries")));
    }
    Configuration::new(rows, cols, entries).map_err(|e| err(1, 1, e.to_string()))
}

pub fn print_matrix(m: &Configuration) -> String {
    let mut out = format!("{} {}\n", m.d(), m.n());
    for i in 0..m.d() {
        let row: Vec<String> = (0..m.n()).map(|j| m.entry(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Basis output shares the matrix format; rows are the elements.
pub fn print_rows(rows: &[Vec<i64>], cols: usize) -> String {
    let mut out = format!("{} {}\n", rows.len(), cols);
    for r in rows {
        let row: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let text = "2 4\n3 2 1 0\n0 1 2 3\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(print_matrix(&m), text);
    }

    #[test]
    fn windows_newlines() {
        let m = parse_matrix("1 2\r\n1 1\r\n").unwrap();
        assert_eq!(m.d(), 1);
        assert_eq!(m.n(), 2);
    }

    #[test]
    fn diagnostics_carry_position() {
        let e = parse_matrix("2 2\n1 x\n3 4\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        let e = parse_matrix("2 2\n1 2\n3\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_matrix("1 2\n1 2 3\n").unwrap_err();
        assert_eq!((e.line, e.col), (2, 5));
    }
}
