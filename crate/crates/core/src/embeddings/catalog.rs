use serde::{Deserialize, Serialize};

use crate::rootsys::TypeSpec;

use super::EmbeddingKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubgroupClass {
    /// Maximal-rank subgroups and Levi factors.
    MaximalRank,
    /// Reductive subgroups of smaller rank.
    Seitz,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DataSource {
    /// An explicit embedding ships in the data files.
    Explicit,
    /// Only the type is recorded; a subsystem may still be built from `removal`.
    TypeOnly,
}

/// One reductive subgroup in the classification tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub g: TypeSpec,
    pub h: TypeSpec,
    pub class: SubgroupClass,
    pub kind: Option<EmbeddingKind>,
    pub source: DataSource,
    /// Node of the extended diagram whose deletion produces a subsystem of this type.
    pub removal: Option<usize>,
}

impl CatalogEntry {
    pub fn label(&self) -> String {
        format!("{}/{}", self.g, self.h)
    }
}

use DataSource::{Explicit as X, TypeOnly as T};
use EmbeddingKind::{Derived, Folded, Levi, Subsystem};
use SubgroupClass::{MaximalRank as M, Seitz as S};

type Row = (
    &'static str,
    &'static str,
    SubgroupClass,
    Option<EmbeddingKind>,
    DataSource,
    Option<usize>,
);

const TABLE: &[Row] = &[
    ("G2", "A2", M, Some(Subsystem), X, Some(1)),
    ("G2", "A1xA1", M, Some(Subsystem), T, Some(2)),
    ("G2", "A1", S, None, T, None),
    ("F4", "A1xC3", M, Some(Subsystem), T, Some(1)),
    ("F4", "A2xA2", M, Some(Subsystem), T, Some(2)),
    ("F4", "A3xA1", M, Some(Subsystem), T, Some(3)),
    ("F4", "B4", M, Some(Subsystem), X, Some(4)),
    ("F4", "A1xG2", S, None, T, None),
    ("F4", "A1", S, None, T, None),
    ("E6", "A5xA1", M, Some(Subsystem), X, Some(2)),
    ("E6", "A2xA2xA2", M, Some(Subsystem), T, Some(4)),
    ("E6", "D5xT1", M, Some(Levi), X, None),
    ("E6", "A2", S, None, T, None),
    ("E6", "G2", S, None, T, None),
    ("E6", "C4", S, Some(Folded), X, None),
    ("E6", "F4", S, Some(Folded), X, None),
    ("E6", "A2xG2", S, None, T, None),
    ("E7", "A7", M, Some(Subsystem), X, Some(2)),
    ("E7", "E6xT1", M, Some(Levi), X, None),
    ("E7", "A3xA3xA1", M, Some(Subsystem), T, Some(4)),
    ("E7", "A5xA2", M, Some(Subsystem), T, Some(5)),
    ("E7", "D6xA1", M, Some(Subsystem), X, Some(6)),
    ("E7", "A1", S, None, T, None),
    ("E7", "A2", S, None, T, None),
    ("E7", "A1xA1", S, None, T, None),
    ("E7", "A1xG2", S, None, T, None),
    ("E7", "A1xF4", S, Some(Derived), X, None),
    ("E7", "G2xC3", S, None, T, None),
    ("E8", "E7xA1", M, Some(Subsystem), T, Some(8)),
    ("E8", "E6xA2", M, Some(Subsystem), T, Some(7)),
    ("E8", "A3xD5", M, Some(Subsystem), T, Some(6)),
    ("E8", "A4xA4", M, Some(Subsystem), T, Some(5)),
    ("E8", "A5xA2xA1", M, Some(Subsystem), T, Some(4)),
    ("E8", "A7xA1", M, Some(Subsystem), T, Some(3)),
    ("E8", "D8", M, Some(Subsystem), T, Some(1)),
    ("E8", "A8", M, Some(Subsystem), T, Some(2)),
    ("E8", "G2xF4", S, None, T, None),
    ("E8", "A2xA1", S, None, T, None),
    ("E8", "B2", S, None, T, None),
    ("E8", "A1", S, None, T, None),
];

/// All subgroups of the classification tables, in table order.
pub fn catalog() -> Vec<CatalogEntry> {
    TABLE
        .iter()
        .map(|&(g, h, class, kind, source, removal)| CatalogEntry {
            g: g.parse().expect("static type"),
            h: h.parse().expect("static type"),
            class,
            kind,
            source,
            removal,
        })
        .collect()
}

pub fn catalog_for(g: &TypeSpec) -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| &e.g == g).collect()
}
