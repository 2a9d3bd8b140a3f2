//! Parahoric subgroups `P_θ(K)` through their filtration exponents.
//!
//! `P_θ(K)` is generated by `T(A)` and the root groups `U_r(z^{m_r} A)` with
//! `m_r(θ) = -floor((θ, r))`. The torus part is common to every descriptor
//! and is not stored. Smaller exponents mean bigger root subgroups, so
//! containment of descriptors is rootwise `<=` on exponents.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::apartment::{self, ApartmentPoint, Facet};
use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::rootsys::{RootId, RootSystem, SimpleType};

/// `m_r` for every root, in the root order of the system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(pub Vec<i64>);

impl Exponents {
    pub fn get(&self, r: RootId) -> i64 {
        self.0[r.0]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Flags {
    pub maximal: bool,
    pub hyperspecial: bool,
    pub standard: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParahoricDescriptor {
    pub system: Vec<(SimpleType, usize)>,
    /// The defining point (the barycenter when built from a set).
    pub theta: ApartmentPoint,
    pub omega: Option<Vec<ApartmentPoint>>,
    pub exponents: Exponents,
    pub facet: Facet,
    pub flags: Flags,
}

/// `m_r(Ω) = -floor(min_{θ ∈ Ω} (θ, r))`.
pub fn bounds_exponents(rs: &RootSystem, omega: &[ApartmentPoint]) -> Result<Exponents> {
    if omega.is_empty() {
        return Err(Error::EmptySet);
    }
    for p in omega {
        rs.check_len(p.coords().len())?;
    }
    Ok(Exponents(
        rs.root_ids()
            .map(|r| {
                let min = omega
                    .iter()
                    .map(|p| rs.pairing_unchecked(p.coords(), r))
                    .min()
                    .expect("nonempty");
                -rational::floor(&min)
            })
            .collect(),
    ))
}

fn exponents_at(rs: &RootSystem, theta: &[Q]) -> Exponents {
    Exponents(
        rs.root_ids()
            .map(|r| -rational::floor(&rs.pairing_unchecked(theta, r)))
            .collect(),
    )
}

/// Descriptor of `P_θ(K)`; `θ` is first carried into the closed alcove.
pub fn descriptor(rs: &RootSystem, theta: &ApartmentPoint) -> Result<ParahoricDescriptor> {
    let reduced = apartment::reduce_to_alcove(rs, theta)?.point;
    build(rs, reduced, None)
}

/// Descriptor of `P_Ω(K)` for a finite set inside one closed facet. The
/// exponents come from `Ω` itself; facet and flags from its barycenter.
pub fn descriptor_of_set(rs: &RootSystem, omega: &[ApartmentPoint]) -> Result<ParahoricDescriptor> {
    let bary = apartment::facet_interior_point(rs, omega)?;
    let mut d = build(rs, bary, Some(omega.to_vec()))?;
    d.exponents = bounds_exponents(rs, omega)?;
    d.flags.standard = d.exponents.0.iter().all(|&m| m >= 0);
    Ok(d)
}

fn build(
    rs: &RootSystem,
    theta: ApartmentPoint,
    omega: Option<Vec<ApartmentPoint>>,
) -> Result<ParahoricDescriptor> {
    let exponents = exponents_at(rs, theta.coords());
    let facet = apartment::facet_of(rs, &theta)?;
    let flags = Flags {
        maximal: facet.dimension == 0,
        hyperspecial: hyperspecial_reduced(rs, &theta),
        standard: exponents.0.iter().all(|&m| m >= 0),
    };
    Ok(ParahoricDescriptor {
        system: rs.signature(),
        theta,
        omega,
        exponents,
        facet,
        flags,
    })
}

/// `d2 ⊆ d1`, judged by comparing generators rootwise.
pub fn contains(d1: &ParahoricDescriptor, d2: &ParahoricDescriptor) -> Result<bool> {
    if d1.system != d2.system || d1.exponents.0.len() != d2.exponents.0.len() {
        return Err(Error::MismatchedSystems);
    }
    Ok(d1
        .exponents
        .0
        .iter()
        .zip(&d2.exponents.0)
        .all(|(a, b)| a <= b))
}

/// `P_θ(K) ⊆ G(A)`, i.e. every `m_r(θ) >= 0`.
pub fn is_subgroup_of_ga(rs: &RootSystem, theta: &ApartmentPoint) -> Result<bool> {
    rs.check_len(theta.coords().len())?;
    Ok(exponents_at(rs, theta.coords()).0.iter().all(|&m| m >= 0))
}

/// The `I ⊆ S` with `P_θ(K) = ev⁻¹(P_I)`.
pub fn closed_fiber_parabolic(rs: &RootSystem, theta: &ApartmentPoint) -> Result<Vec<usize>> {
    if !is_subgroup_of_ga(rs, theta)? {
        return Err(Error::NotStandard);
    }
    Ok((0..rs.rank())
        .filter(|&i| theta.coords()[i].is_zero())
        .collect())
}

/// `{r : (θ, r) = 0}`.
pub fn levi_roots(rs: &RootSystem, theta: &ApartmentPoint) -> Result<Vec<RootId>> {
    rs.check_len(theta.coords().len())?;
    Ok(rs
        .root_ids()
        .filter(|&r| rs.pairing_unchecked(theta.coords(), r).is_zero())
        .collect())
}

/// `{r : (θ, r) ∈ Z}`, the roots of the centralizer of `ρ_θ(γ)`. On the
/// affine wall this is strictly larger than [`levi_roots`].
pub fn centralizer_roots(rs: &RootSystem, theta: &ApartmentPoint) -> Result<Vec<RootId>> {
    rs.check_len(theta.coords().len())?;
    Ok(rs
        .root_ids()
        .filter(|&r| rational::is_integer(&rs.pairing_unchecked(theta.coords(), r)))
        .collect())
}

pub fn is_maximal(rs: &RootSystem, theta: &ApartmentPoint) -> Result<bool> {
    let reduced = apartment::reduce_to_alcove(rs, theta)?.point;
    Ok(apartment::facet_of(rs, &reduced)?.dimension == 0)
}

pub fn is_hyperspecial(rs: &RootSystem, theta: &ApartmentPoint) -> Result<bool> {
    let reduced = apartment::reduce_to_alcove(rs, theta)?.point;
    Ok(hyperspecial_reduced(rs, &reduced))
}

// Per factor: 0, or θ_α with c_α = 1 (i.e. the single coordinate equals 1).
fn hyperspecial_reduced(rs: &RootSystem, theta: &ApartmentPoint) -> bool {
    rs.factors().iter().all(|f| {
        let coords = &theta.coords()[f.simple_indices()];
        let marks = &rs.marks()[f.simple_indices()];
        let nonzero: Vec<usize> = (0..f.rank).filter(|&k| !coords[k].is_zero()).collect();
        match nonzero.as_slice() {
            [] => true,
            [k] => marks[*k] == 1 && coords[*k].is_one(),
            _ => false,
        }
    })
}

/// One descriptor per alcove vertex: `Π (ℓ_f + 1)` in total.
pub fn enumerate_maximal_classes(rs: &RootSystem) -> Result<Vec<ParahoricDescriptor>> {
    apartment::alcove_vertices(rs)
        .into_iter()
        .map(|v| build(rs, v, None))
        .collect()
}

/// The Iwahori descriptor, at the barycenter of the alcove.
pub fn iwahori(rs: &RootSystem) -> Result<ParahoricDescriptor> {
    let bary = apartment::facet_interior_point(rs, &apartment::alcove_vertices(rs))?;
    build(rs, bary, None)
}
