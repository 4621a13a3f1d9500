//! PD text: `X[a,b,c,d]` terms (brackets or parentheses) and `U` markers
//! for crossing-free loops, separated by whitespace or commas.

use std::fmt::Write as _;

use super::CodecError;
use crate::diagram::LinkDiagram;

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line,
            col: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == ',') {
            self.bump();
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn syntax(&self, message: impl Into<String>) -> CodecError {
        CodecError::Syntax {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }
}

/// Parses one link in PD text. Newlines are treated as whitespace.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, CodecError> {
    parse_pd_at(text, 1)
}

fn parse_pd_at(text: &str, first_line: usize) -> Result<LinkDiagram, CodecError> {
    let mut cur = Cursor::new(text, first_line);
    let mut quads = Vec::new();
    let mut loops = 0;
    loop {
        cur.skip_separators();
        let Some(c) = cur.peek() else { break };
        match c {
            'U' | 'u' => {
                cur.bump();
                if matches!(cur.peek(), Some(c) if c.is_alphanumeric()) {
                    return Err(cur.syntax("expected separator after U"));
                }
                loops += 1;
            }
            'X' | 'x' => {
                let (line, col) = (cur.line, cur.col);
                cur.bump();
                cur.skip_ws();
                let close = match cur.bump() {
                    Some('[') => ']',
                    Some('(') => ')',
                    _ => return Err(cur.syntax("expected '[' or '(' after X")),
                };
                let mut labels = Vec::new();
                loop {
                    cur.skip_separators();
                    match cur.peek() {
                        Some(c) if c == close => {
                            cur.bump();
                            break;
                        }
                        Some(c) if c.is_ascii_digit() => {
                            let (l, cl) = (cur.line, cur.col);
                            let mut v: u64 = 0;
                            while let Some(d) = cur.peek().and_then(|c| c.to_digit(10)) {
                                v = v * 10 + d as u64;
                                if v > u32::MAX as u64 {
                                    return Err(cur.syntax("arc label too large"));
                                }
                                cur.bump();
                            }
                            if v == 0 {
                                return Err(CodecError::Syntax {
                                    line: l,
                                    col: cl,
                                    message: "arc labels must be positive".into(),
                                });
                            }
                            labels.push(v as u32);
                        }
                        Some(_) => return Err(cur.syntax(format!("expected arc label or '{close}'"))),
                        None => return Err(cur.syntax(format!("unterminated crossing, expected '{close}'"))),
                    }
                }
                let q: [u32; 4] = labels
                    .as_slice()
                    .try_into()
                    .map_err(|_| CodecError::ArcCount { line, col, found: labels.len() })?;
                quads.push(q);
            }
            other => return Err(cur.syntax(format!("unexpected character '{other}'"))),
        }
    }
    Ok(LinkDiagram::from_pd_quads(&quads, loops)?)
}

/// Parses a PD file: one link per line, `#` starts a comment, blank lines
/// are skipped. Returns the 1-based line number with each link.
pub fn parse_pd_file(text: &str) -> Result<Vec<(usize, LinkDiagram)>, CodecError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        out.push((i + 1, parse_pd_at(line, i + 1)?));
    }
    Ok(out)
}

/// Canonical PD text of a diagram.
pub fn serialize_pd(d: &LinkDiagram) -> String {
    let c = d.canonical();
    let mut s = String::new();
    for x in c.crossings() {
        if !s.is_empty() {
            s.push(' ');
        }
        let [a, b, cc, dd] = x.arcs();
        let _ = write!(s, "X[{a},{b},{cc},{dd}]");
    }
    for _ in 0..c.unknotted_loops() {
        if !s.is_empty() {
            s.push(' ');
        }
        s.push('U');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Sign;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn empty_text_is_empty_link() {
        assert!(parse_pd("").unwrap().is_empty());
        assert!(parse_pd("  \n ").unwrap().is_empty());
        assert_eq!(serialize_pd(&LinkDiagram::empty()), "");
    }

    #[test]
    fn trefoil_parses_and_is_canonical() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(serialize_pd(&d), TREFOIL);
    }

    #[test]
    fn relabeled_trefoil_serializes_canonically() {
        // labels shifted by one along the knot, crossings reordered, parens
        let d = parse_pd("X(6,3,1,4), X(2,5,3,6)\n X(4,1,5,2)").unwrap();
        assert_eq!(serialize_pd(&d), TREFOIL);
    }

    #[test]
    fn kinked_unknot() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (1, 1));
        assert_eq!(d.crossings()[0].sign(), Sign::Positive);
        assert_eq!(serialize_pd(&d), "X[1,1,2,2]");
    }

    #[test]
    fn loops_serialize_as_u() {
        let d = parse_pd("U x[1,1,2,2] u").unwrap();
        assert_eq!(d.unknotted_loops(), 2);
        assert_eq!(serialize_pd(&d), "X[1,1,2,2] U U");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_pd("X[1,2,3,4] Y") {
            Err(CodecError::Syntax { line: 1, col: 12, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_pd("X[1,2,3]") {
            Err(CodecError::ArcCount { line: 1, col: 1, found: 3 }) => {}
            other => panic!("{other:?}"),
        }
        match parse_pd("X[1,2,\n0,4]") {
            Err(CodecError::Syntax { line: 2, col: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_pd("X[1,2,3,4"), Err(CodecError::Syntax { .. })));
        assert!(matches!(parse_pd("X[1,2,3,4)"), Err(CodecError::Syntax { .. })));
        assert_eq!(parse_pd("X[1,1,1,2]").unwrap_err().code(), "DanglingArc");
    }

    #[test]
    fn file_with_comments() {
        let text = "# table\n\nX[1,4,2,5] X[3,6,4,1] X[5,2,6,3] # 3_1\nU\n";
        let links = parse_pd_file(text).unwrap();
        assert_eq!(links.len(), 2);
        assert_eq!(links[0].0, 3);
        assert_eq!(links[1].1, LinkDiagram::unknot());
        match parse_pd_file("U\nX[1,2]\n") {
            Err(CodecError::ArcCount { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
    }
}
