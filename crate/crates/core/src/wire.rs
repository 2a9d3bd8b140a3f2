//! JSON records for descriptors and local types. Field names and layout
//! are part of the command-line output format.

use serde::{Deserialize, Serialize};

use crate::localtype::LocalType;
use crate::parahoric::{Flags, ParahoricDescriptor};
use crate::rational::{self, Q};
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentRecord {
    pub root: Vec<i64>,
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorRecord {
    #[serde(with = "rational::serde_fractions")]
    pub theta: Vec<Q>,
    pub exponents: Vec<ExponentRecord>,
    pub flags: Flags,
    pub facet_dimension: usize,
}

impl DescriptorRecord {
    pub fn new(rs: &RootSystem, d: &ParahoricDescriptor) -> Self {
        Self {
            theta: d.theta.coords().to_vec(),
            exponents: rs
                .root_ids()
                .map(|r| ExponentRecord {
                    root: rs.root(r).coords.clone(),
                    m: d.exponents.get(r),
                })
                .collect(),
            flags: d.flags,
            facet_dimension: d.facet.dimension,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
/// Wire form of a local type. `Δ` is reported as its residue in `[0, d)`
/// and `theta` is `Δ/d` for that residue.
pub struct LocalTypeRecord {
    pub d: u64,
    pub delta_coroot_coords: Vec<i64>,
    #[serde(with = "rational::serde_fractions")]
    pub theta: Vec<Q>,
    /// The alcove representative of `theta`.
    #[serde(with = "rational::serde_fractions")]
    pub alcove_theta: Vec<Q>,
}

impl LocalTypeRecord {
    pub fn new(rs: &RootSystem, lt: &LocalType, alcove_theta: Vec<Q>) -> Self {
        let delta = lt.normalized_delta();
        let d = Q::from(lt.d as i128);
        let theta = rs
            .coroot_to_coweight(&delta)
            .expect("delta has the system's rank")
            .into_iter()
            .map(|x| Q::from(x as i128) / d)
            .collect();
        Self {
            d: lt.d,
            delta_coroot_coords: delta,
            theta,
            alcove_theta,
        }
    }
}
