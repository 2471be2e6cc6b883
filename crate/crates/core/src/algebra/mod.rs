//! Group, field and ring verification.
//!
//! Everything here rests on two tricks: associativity only needs checking
//! against a generating set, and an abelian group of order `n` has a basis
//! `B` with `B + B = G` and `|B| = O(√n)`, which cuts the distributivity
//! checks down to `O(n²)` triples.

mod abelian;
mod field_ring;
pub mod fixtures;
mod group;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::structure::{ElementId, StructureError};
use crate::verify::VerifyError;

pub use abelian::{abelian_basis, abelian_decomposition, element_orders};
pub use field_ring::{field_verify, ring_check, ring_verify, RingReport};
pub use group::{
    closure, find_identity_element, find_inverses, greedy_generators, group_report, is_associative_brute,
    light_associativity, rs_associativity_test,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("generators do not generate the structure (closure has {closure} of {n} elements)")]
    NotGenerating { closure: usize, n: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AssocMethod {
    Light,
    Randomized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub identity_elem: Option<ElementId>,
    pub inverses_ok: bool,
    pub associative: bool,
    pub assoc_method: AssocMethod,
    pub abelian: bool,
}

impl GroupReport {
    pub fn is_group(&self) -> bool {
        self.identity_elem.is_some() && self.inverses_ok && self.associative
    }
}

/// A set `B` with `B op B` equal to the whole structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Basis {
    pub elements: BTreeSet<ElementId>,
    pub op: String,
}

impl Basis {
    /// Whether every element is `b₁ op b₂` for some `b₁, b₂ ∈ B`.
    pub fn covers(&self, s: &crate::structure::Structure) -> Result<bool, StructureError> {
        let t = s.table(&self.op)?;
        let mut seen = vec![false; s.n()];
        for &x in &self.elements {
            for &y in &self.elements {
                seen[t.get(x, y) as usize] = true;
            }
        }
        Ok(seen.into_iter().all(|b| b))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}
