//! Reading graphs, budgets, and partitions from files or stdin.

use std::fs;
use std::io::Read;

use degpart::budgets::DegreeFunction;
use degpart::error::{Error, Result};
use degpart::format::parse_edge_list;
use degpart::multigraph::Multigraph;
use serde::Deserialize;
use sha2::{Digest, Sha256};

/// Reads a file, or stdin when the path is `-`.
pub fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Input(format!("failed to read stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Input(format!("failed to read {path}: {e}")))
    }
}

/// Parses the graph from a path or stdin, keeping the raw text for the
/// input digest.
pub fn load_graph(path: &str) -> Result<(Multigraph, String)> {
    let text = read_input(path)?;
    let graph = parse_edge_list(&text)?;
    Ok((graph, text))
}

#[derive(Deserialize)]
struct BudgetsFile {
    a: Vec<i64>,
    b: Vec<i64>,
}

/// Two-way budgets from `--a-const`/`--b-const` or a JSON file
/// `{"a": [...], "b": [...]}`.
pub fn load_two_way_budgets(
    n: usize,
    a_const: Option<i64>,
    b_const: Option<i64>,
    budgets_path: Option<&str>,
) -> Result<(DegreeFunction, DegreeFunction)> {
    match (a_const, b_const, budgets_path) {
        (Some(a), Some(b), None) => Ok((
            DegreeFunction::constant(n, a)?,
            DegreeFunction::constant(n, b)?,
        )),
        (None, None, Some(path)) => {
            let text = read_input(path)?;
            let parsed: BudgetsFile = serde_json::from_str(&text)
                .map_err(|e| Error::Input(format!("invalid budgets JSON: {e}")))?;
            if parsed.a.len() != n || parsed.b.len() != n {
                return Err(Error::Input(format!(
                    "budget arrays must have length {n} (got {} and {})",
                    parsed.a.len(),
                    parsed.b.len()
                )));
            }
            Ok((
                DegreeFunction::from_values(parsed.a)?,
                DegreeFunction::from_values(parsed.b)?,
            ))
        }
        _ => Err(Error::Input(
            "provide either --a-const and --b-const, or --budgets <file>".into(),
        )),
    }
}

#[derive(Deserialize)]
struct MultiwayFile {
    fs: Vec<Vec<i64>>,
    #[serde(default)]
    h: Option<u8>,
}

/// Multiway budgets from a JSON file `{"fs": [[...], ...], "h": 1}` or a
/// constant list like `1,2,1`. Returns the budgets and the file's `h`
/// hint, if any.
pub fn load_multiway_budgets(
    n: usize,
    budgets_path: Option<&str>,
    const_list: Option<&str>,
) -> Result<(Vec<DegreeFunction>, Option<u8>)> {
    match (budgets_path, const_list) {
        (Some(path), None) => {
            let text = read_input(path)?;
            let parsed: MultiwayFile = serde_json::from_str(&text)
                .map_err(|e| Error::Input(format!("invalid budgets JSON: {e}")))?;
            let mut fs = Vec::with_capacity(parsed.fs.len());
            for (i, values) in parsed.fs.into_iter().enumerate() {
                if values.len() != n {
                    return Err(Error::Input(format!(
                        "part budget {i} must have length {n} (got {})",
                        values.len()
                    )));
                }
                fs.push(DegreeFunction::from_values(values)?);
            }
            Ok((fs, parsed.h))
        }
        (None, Some(list)) => {
            let mut fs = Vec::new();
            for piece in list.split(',') {
                let c: i64 = piece
                    .trim()
                    .parse()
                    .map_err(|_| Error::Input(format!("invalid constant budget {piece:?}")))?;
                fs.push(DegreeFunction::constant(n, c)?);
            }
            Ok((fs, None))
        }
        _ => Err(Error::Input(
            "provide either --budgets <file> or --const <list>".into(),
        )),
    }
}

/// Comma-separated vertex ids.
pub fn parse_id_list(list: &str) -> Result<Vec<usize>> {
    list.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("invalid vertex id {piece:?}")))
        })
        .collect()
}

#[derive(Deserialize)]
struct PartitionFile {
    #[serde(default)]
    partition: Option<TwoSidesFile>,
    #[serde(default)]
    a: Option<Vec<usize>>,
    #[serde(default)]
    b: Option<Vec<usize>>,
    #[serde(default)]
    parts: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
struct TwoSidesFile {
    a: Vec<usize>,
    b: Vec<usize>,
}

/// A partition from JSON: either `{"a": [...], "b": [...]}`, a solver
/// report with a `partition` field, or `{"parts": [[...], ...]}`.
pub fn parse_partition_json(text: &str) -> Result<Vec<Vec<usize>>> {
    let parsed: PartitionFile = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("invalid partition JSON: {e}")))?;
    if let Some(two) = parsed.partition {
        return Ok(vec![two.a, two.b]);
    }
    if let (Some(a), Some(b)) = (parsed.a, parsed.b) {
        return Ok(vec![a, b]);
    }
    if let Some(parts) = parsed.parts {
        return Ok(parts);
    }
    Err(Error::Input(
        "partition JSON needs fields a/b, partition, or parts".into(),
    ))
}

/// Hex SHA-256 over the graph text and the budget description.
pub fn input_digest(graph_text: &str, budget_desc: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(graph_text.as_bytes());
    hasher.update(b"\n--budgets--\n");
    hasher.update(budget_desc.as_bytes());
    let digest = hasher.finalize();
    let mut out = String::with_capacity(7 + digest.len() * 2);
    out.push_str("sha256:");
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}
