//! JSON report types. Every run prints exactly one report object; field
//! order is fixed by the struct declarations and all sets arrive sorted, so
//! identical inputs serialize to identical bytes. Rationals are rendered as
//! canonical `p/q` strings, never floats. Timing is attached only on
//! request: it would break byte-for-byte reproducibility.

use serde::Serialize;
use sha2::{Digest, Sha256};
use statepoly::scalar::rat_string;
use statepoly::{Polytope, Rat};

#[derive(Serialize)]
pub struct RunReport<P: Serialize> {
    pub command: &'static str,
    pub digest: String,
    pub outcome: &'static str,
    pub payload: P,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Serialize)]
pub struct Timing {
    pub millis: u128,
}

impl<P: Serialize> RunReport<P> {
    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string(self).expect("reports serialize")
        );
    }
}

/// Digest of everything that determines the answer: the command, the raw
/// input bytes and the semantic parameters. Execution knobs (budget, jobs,
/// timing) stay out so reruns under different settings stay comparable.
pub fn input_digest(command: &str, file_bytes: &[u8], params: &[String]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(command.as_bytes());
    hasher.update([0u8]);
    hasher.update(file_bytes);
    for p in params {
        hasher.update([0u8]);
        hasher.update(p.as_bytes());
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(7 + 64);
    out.push_str("sha256:");
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

#[derive(Serialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &Polytope<Rat>) -> Self {
        // points are kept sorted by the polytope itself
        PolytopeJson {
            dim: p.dim(),
            vertices: p
                .points()
                .iter()
                .map(|v| v.iter().map(rat_string).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct StatesPayload {
    pub n_vars: usize,
    pub degree: u32,
    pub q: usize,
    pub p: usize,
    pub states: Vec<Vec<i64>>,
    pub polytope: PolytopeJson,
}

#[derive(Serialize)]
pub struct MuPayload {
    pub n_vars: usize,
    pub degree: u32,
    pub weights: Vec<i64>,
    pub recentred: Vec<String>,
    pub mu: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<MuDualPayload>,
}

#[derive(Serialize)]
pub struct MuDualPayload {
    pub mu_dual: String,
    pub equal: bool,
}

#[derive(Serialize)]
pub struct VerifyChainPayload {
    pub n_vars: usize,
    pub degree: u32,
    pub variant: &'static str,
    pub boundaries: Vec<usize>,
    pub q: usize,
    pub tau: Vec<i64>,
    pub checks: ChecksPayload,
}

#[derive(Serialize, Default)]
pub struct ChecksPayload {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub states: Option<StatesCheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polytope: Option<PolytopeCheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<VerticesCheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<MuCheckJson>>,
}

#[derive(Serialize)]
pub struct StatesCheckJson {
    pub pass: bool,
    pub full_states: usize,
    pub combined_states: usize,
    /// chain states the block sums never reach
    pub missing: Vec<Vec<i64>>,
    /// block sums that are not chain states
    pub extra: Vec<Vec<i64>>,
}

#[derive(Serialize)]
pub struct PolytopeCheckJson {
    pub pass: bool,
    pub full_vertices: usize,
    pub combined_vertices: usize,
}

#[derive(Serialize)]
pub struct VerticesCheckJson {
    pub pass: bool,
    pub block_vertex_counts: Vec<usize>,
    pub expected_product: usize,
    pub full_vertex_count: usize,
}

#[derive(Serialize)]
pub struct MuCheckJson {
    pub weights: Vec<i64>,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub block_mu: Vec<String>,
}

#[derive(Serialize)]
pub struct GotzmannPayload {
    pub coefficients: Vec<String>,
    pub representation: Vec<u32>,
    pub gotzmann_number: u64,
}
