//! Plain-text edge lists.
//!
//! ```text
//! n m
//! u v      (m lines, 1 <= u < v <= n)
//! ```
//!
//! ASCII only, every line (including the last) terminated by `\n`.

use crate::error::ParseError;
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = line.split(' ').collect();
    if fields.len() != 2 {
        return Err(ParseError::new(
            lineno,
            format!("expected `{what}` as two integers separated by one space, got {line:?}"),
        ));
    }
    let parse = |s: &str| {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::new(lineno, format!("{s:?} is not a non-negative integer")));
        }
        s.parse::<usize>()
            .map_err(|e| ParseError::new(lineno, format!("{s:?}: {e}")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    if let Some(pos) = text.bytes().position(|b| !b.is_ascii()) {
        let line = text.as_bytes()[..pos].iter().filter(|&&b| b == b'\n').count() + 1;
        return Err(ParseError::new(line, "non-ASCII byte"));
    }
    if text.is_empty() {
        return Err(ParseError::new(1, "empty input"));
    }
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.lines().count();
        return Err(ParseError::new(line, "missing final newline"));
    };
    let lines: Vec<&str> = body.split('\n').collect();
    for (i, line) in lines.iter().enumerate() {
        if line.ends_with('\r') {
            return Err(ParseError::new(i + 1, "carriage return in line ending"));
        }
    }

    let (n, m) = parse_pair(lines[0], 1, "n m")?;
    if n == 0 {
        return Err(ParseError::new(1, "vertex count must be positive"));
    }
    if lines.len() - 1 != m {
        // First missing line, or first surplus line.
        let line = if lines.len() - 1 < m { lines.len() + 1 } else { m + 2 };
        return Err(ParseError::new(
            line,
            format!("header announces {m} edges, found {}", lines.len() - 1),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::BTreeSet::new();
    for (k, line) in lines[1..].iter().enumerate() {
        let lineno = k + 2;
        let (u, v) = parse_pair(line, lineno, "u v")?;
        if u >= v {
            return Err(ParseError::new(lineno, format!("need u < v, got {u} {v}")));
        }
        if u == 0 || v > n {
            return Err(ParseError::new(lineno, format!("vertex out of range 1..={n}")));
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::new(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| ParseError::new(1, e.to_string()))
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.order(), graph.size());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::make_u_ng;

    #[test]
    fn round_trip() {
        let g = make_u_ng(9, 4).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("9 9\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn p2() {
        let g = parse_edge_list("2 1\n1 2\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn rejections_carry_line_numbers() {
        let cases = [
            ("2 1\n1 2", 2),
            ("2 1\n2 1\n", 2),
            ("3 2\n1 2\n1 2\n", 3),
            ("3 2\n1 2\n", 3),
            ("3 1\n1 2\n2 3\n", 3),
            ("3 1\n1 x\n", 2),
            ("3 1\n1  2\n", 2),
            ("3 1\n1 4\n", 2),
            ("0 0\n", 1),
            ("3 1\n\n", 2),
            ("3\n", 1),
            ("3 1\r\n1 2\r\n", 1),
            ("3 1\n1 é\n", 2),
        ];
        for (text, line) in cases {
            let err = parse_edge_list(text).unwrap_err();
            assert_eq!(err.line, line, "{text:?}: {err}");
        }
    }
}
