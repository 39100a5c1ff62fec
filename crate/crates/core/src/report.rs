//! JSON shapes for tables, query results and verification records.
//!
//! Big integers are written as decimal strings so that no consumer rounds
//! them through a double.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::occupancy::OccupancyTable;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OccupancyEntry {
    #[serde(rename = "M")]
    pub m: Vec<i64>,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OccupancyReport {
    pub r: usize,
    #[serde(rename = "twoS")]
    pub two_s: Vec<u32>,
    #[serde(rename = "L")]
    pub sites: usize,
    pub entries: Vec<OccupancyEntry>,
}

impl From<&OccupancyTable> for OccupancyReport {
    fn from(t: &OccupancyTable) -> Self {
        OccupancyReport {
            r: t.rank,
            two_s: t.spins.two_s().to_vec(),
            sites: t.spins.sites(),
            entries: t
                .entries
                .iter()
                .map(|(m, c)| OccupancyEntry { m: m.clone(), c: c.to_string() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "M")]
    pub m: Vec<i64>,
    pub terms: usize,
}

/// One multiplicity answer: the query echoed back, the value and the `M`
/// it was evaluated at together with the number of shift terms used.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiplicityResult {
    pub query: Value,
    pub mu: String,
    pub witness: Witness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

impl MultiplicityResult {
    pub fn new(query: Value, mu: &BigInt, m: Vec<i64>, terms: usize) -> Self {
        MultiplicityResult { query, mu: mu.to_string(), witness: Witness { m, terms }, oracle: None }
    }
}

/// One line of a verification log.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationRecord {
    pub query: Value,
    pub diff_formula_value: String,
    pub oracle_value: String,
    pub equal: bool,
}

impl VerificationRecord {
    pub fn new(query: Value, diff: &BigInt, oracle: &BigInt) -> Self {
        VerificationRecord {
            query,
            diff_formula_value: diff.to_string(),
            oracle_value: oracle.to_string(),
            equal: diff == oracle,
        }
    }
}
