//! JSON report types emitted on stdout.
//!
//! Field order is fixed by declaration so identical inputs produce
//! byte-identical reports; timing is opt-in for the same reason. Vertex
//! lists are always sorted.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct TwoWayPartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Serialize)]
pub struct PartitionReport {
    pub schema: u32,
    pub mode: String,
    pub input_digest: String,
    pub partition: TwoWayPartition,
    pub move_count: usize,
    pub final_weight: i64,
    pub validation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Serialize)]
pub struct MultiwayReport {
    pub schema: u32,
    pub mode: String,
    pub input_digest: String,
    pub parts: Vec<Vec<usize>>,
    pub validation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Serialize)]
pub struct ExistsReport {
    pub schema: u32,
    pub input_digest: String,
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<TwoWayPartition>,
}

#[derive(Serialize)]
pub struct MeagerReport {
    pub schema: u32,
    pub set: Vec<usize>,
    pub meager_peel: bool,
    pub meager_enumeration: bool,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct CertifyReport {
    pub schema: u32,
    pub family: String,
    pub t: u64,
    pub vertex_count: usize,
    pub relaxed_bound_holds: bool,
    pub feasible_partition_exists: bool,
    pub certified: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub feasible: bool,
    pub reasons: Vec<String>,
}

#[derive(Serialize)]
pub struct NiceSubsetReport {
    pub schema: u32,
    pub minimal: bool,
    pub subset: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub schema: u32,
    pub error: ErrorBody,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}
