//! Catalog construction and submodule structure for the two supported
//! algebra families.

pub mod nakayama;
pub mod typea;

use crate::algebra::AlgebraSpec;
use crate::module::{Descriptor, Indec, IndecId, ModuleSum, SesRecord, SubShape};

pub use nakayama::Nakayama;
pub use typea::TypeA;

#[derive(Clone, Debug)]
pub enum Backend {
    Nakayama(Nakayama),
    TypeA(TypeA),
}

impl Backend {
    pub fn for_spec(spec: &AlgebraSpec) -> Self {
        match spec {
            AlgebraSpec::Nakayama { cyclic, kupisch } => Backend::Nakayama(Nakayama::new(kupisch, *cyclic)),
            AlgebraSpec::TypeA { .. } => Backend::TypeA(TypeA::new(spec.num_vertices(), spec.arrows())),
        }
    }

    pub fn build_catalog(&self) -> Vec<Indec> {
        match self {
            Backend::Nakayama(b) => b.build_catalog(),
            Backend::TypeA(b) => b.build_catalog(),
        }
    }

    pub fn projective(&self, v: usize) -> IndecId {
        match self {
            Backend::Nakayama(b) => b.projective(v),
            Backend::TypeA(b) => b.projective(v),
        }
    }

    pub fn sub_quotient_pairs(&self, id: IndecId) -> Vec<SesRecord> {
        match self {
            Backend::Nakayama(b) => b.sub_quotient_pairs(id),
            Backend::TypeA(b) => b.sub_quotient_pairs(id),
        }
    }

    pub fn id_of(&self, d: Descriptor) -> Option<IndecId> {
        match (self, d) {
            (Backend::Nakayama(b), Descriptor::Uniserial { top, length }) => b.id_of(top, length),
            (Backend::TypeA(b), Descriptor::Interval { a, b: hi }) => b.id_of(a, hi),
            _ => None,
        }
    }

    pub fn zero_shape(&self, id: IndecId) -> SubShape {
        match self {
            Backend::Nakayama(_) => SubShape::Length(0),
            Backend::TypeA(b) => SubShape::Support(vec![false; b.support_mask(id).len()]),
        }
    }

    pub fn full_shape(&self, id: IndecId) -> SubShape {
        match self {
            Backend::Nakayama(b) => SubShape::Length(b.length(id)),
            Backend::TypeA(b) => SubShape::Support(b.support_mask(id)),
        }
    }

    /// The module `outer / inner` for nested submodules of `id`.
    pub fn subquotient(&self, id: IndecId, outer: &SubShape, inner: &SubShape) -> ModuleSum {
        match (self, outer, inner) {
            (Backend::Nakayama(b), SubShape::Length(o), SubShape::Length(i)) => b.subquotient(id, *o, *i),
            (Backend::TypeA(b), SubShape::Support(o), SubShape::Support(i)) => b.subquotient(o, i),
            _ => panic!("submodule shape does not match backend"),
        }
    }

    pub fn as_nakayama(&self) -> Option<&Nakayama> {
        match self {
            Backend::Nakayama(b) => Some(b),
            Backend::TypeA(_) => None,
        }
    }
}
