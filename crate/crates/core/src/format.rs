//! The edge-list text format shared with the CLI.
//!
//! UTF-8 lines; `#` starts a comment anywhere in a line. The first
//! non-comment line is `n <count>`; every following line is `u v k` (or
//! `u v`, meaning `k = 1`) with `0 <= u, v < count`, `u != v`, `k >= 1`.
//! Repeated pairs accumulate multiplicity.

use crate::error::{Error, Result};
use crate::multigraph::{Multigraph, MultigraphBuilder};

/// Parses the edge-list text format; errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut builder: Option<MultigraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match builder {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected header 'n <count>', found {content:?}"),
                    });
                }
                let n: usize = fields[1].parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("invalid vertex count {:?}", fields[1]),
                })?;
                builder = Some(MultigraphBuilder::new(n));
            }
            Some(ref mut b) => {
                if fields.len() != 2 && fields.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected 'u v' or 'u v k', found {content:?}"),
                    });
                }
                let parse_field = |s: &str, what: &str| -> Result<u64> {
                    s.parse().map_err(|_| Error::Parse {
                        line,
                        msg: format!("invalid {what} {s:?}"),
                    })
                };
                let u = parse_field(fields[0], "vertex id")? as usize;
                let v = parse_field(fields[1], "vertex id")? as usize;
                let k = if fields.len() == 3 {
                    parse_field(fields[2], "multiplicity")?
                } else {
                    1
                };
                b.add_edge(u, v, k).map_err(|e| Error::Parse {
                    line,
                    msg: e.to_string(),
                })?;
            }
        }
    }
    match builder {
        Some(b) => b.build(),
        None => Err(Error::Parse {
            line: 1,
            msg: "missing 'n <count>' header".into(),
        }),
    }
}

/// Writes the canonical edge-list form: header, then one `u v k` line per
/// pair in ascending order.
pub fn to_edge_list(g: &Multigraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v, k) in g.edges() {
        out.push_str(&format!("{u} {v} {k}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_defaults_and_accumulation() {
        let text = "# sample\nn 4  # four vertices\n0 1\n0 1 2\n2 3 5\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.multiplicity(0, 1).unwrap(), 3);
        assert_eq!(g.multiplicity(2, 3).unwrap(), 5);
    }

    #[test]
    fn round_trip_is_canonical() {
        let text = "n 3\n1 0 2\n1 2 1\n";
        let g = parse_edge_list(text).unwrap();
        let written = to_edge_list(&g);
        assert_eq!(written, "n 3\n0 1 2\n1 2 1\n");
        let g2 = parse_edge_list(&written).unwrap();
        assert_eq!(g.edges(), g2.edges());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", 1, "header"),
            ("m 3\n", 1, "header"),
            ("n x\n", 1, "count"),
            ("n 3\n0 0 1\n", 2, "loop"),
            ("n 3\n0 5\n", 2, "range"),
            ("n 3\n0 1 0\n", 2, "multiplicity"),
            ("n 3\n0 1 2 3\n", 2, "expected"),
            ("n 3\n0 one\n", 2, "invalid"),
        ];
        for (text, want_line, hint) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line, msg }) => {
                    assert_eq!(line, want_line, "line for {text:?}");
                    assert!(
                        msg.to_lowercase().contains(hint),
                        "message {msg:?} should mention {hint:?}"
                    );
                }
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn empty_graph_parses() {
        let g = parse_edge_list("n 0\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(to_edge_list(&g), "n 0\n");
    }
}
