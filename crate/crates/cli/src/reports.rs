//! JSON report shapes. Every report deserializes back to itself so output
//! can be re-read by other tools.

use mgs_core::report::Check;
use serde::{Deserialize, Serialize};

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleEntry {
    pub id: usize,
    pub descriptor: String,
    pub name: String,
    pub dimvec: Vec<usize>,
    pub brick: bool,
    pub projective: bool,
    pub simple: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogReport {
    pub algebra: String,
    pub vertices: usize,
    pub modules: Vec<ModuleEntry>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleRef {
    pub id: usize,
    pub descriptor: String,
    pub name: String,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct BricksReport {
    pub algebra: String,
    pub count: usize,
    pub bricks: Vec<ModuleRef>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct Sequence {
    pub index: usize,
    pub class: usize,
    pub ids: Vec<usize>,
    pub descriptors: Vec<String>,
    pub names: Vec<String>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct MgsReport {
    pub algebra: String,
    pub count: usize,
    pub sequences: Vec<Sequence>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub index: usize,
    /// Canonical key: summand names in sorted summand order.
    pub summands: Vec<String>,
    pub members: Vec<usize>,
    pub representative: Vec<String>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassesReport {
    pub algebra: String,
    pub count: usize,
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct PosetNode {
    pub class: usize,
    pub summand_count: usize,
    pub representative: Vec<String>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct PosetReport {
    pub algebra: String,
    pub order: String,
    pub nodes: Vec<PosetNode>,
    /// Strict relations `[lower, upper]`.
    pub relation: Vec<[usize; 2]>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct Layer {
    pub brick: String,
    pub factor: Vec<String>,
    pub multiplicity: usize,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct HnReport {
    pub algebra: String,
    pub mgs: Vec<String>,
    pub module: Vec<String>,
    pub layers: Vec<Layer>,
    pub stable: Vec<String>,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub algebra: String,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}
