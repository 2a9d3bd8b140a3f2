//! Local types `(d, Δ)`: a representation of the cyclic isotropy group of
//! order `d` into the torus, recorded by `Δ ∈ Y(T)` (the coroot lattice,
//! since `G` is simply connected), and its rational weight `θ = Δ / d`.
//!
//! `Hom(Z/d, T) ≅ Y(T) / d·Y(T)`, so two local types with the same `d` and
//! `Δ ≡ Δ' (mod d·Y(T))` are equal.

use serde::{Deserialize, Serialize};

use crate::apartment::{self, ApartmentPoint, Reduction};
use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::rootsys::{RootId, RootSystem};

#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
pub struct LocalType {
    pub d: u64,
    /// `Δ` in coroot-lattice coordinates.
    #[serde(rename = "delta_coroot_coords")]
    pub delta: Vec<i64>,
    /// `Δ / d` in coweight coordinates, not reduced to the alcove.
    pub theta: ApartmentPoint,
}

impl PartialEq for LocalType {
    fn eq(&self, other: &Self) -> bool {
        let d = self.d as i64;
        self.d == other.d
            && self.delta.len() == other.delta.len()
            && self
                .delta
                .iter()
                .zip(&other.delta)
                .all(|(a, b)| (a - b).rem_euclid(d) == 0)
    }
}

impl LocalType {
    pub fn new(rs: &RootSystem, d: u64, delta: Vec<i64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroOrder);
        }
        let coweight = rs.coroot_to_coweight(&delta)?;
        let theta = coweight
            .iter()
            .map(|&x| Q::new(x as i128, d as i128))
            .collect();
        Ok(Self {
            d,
            delta,
            theta: ApartmentPoint::from_coords_unchecked(theta),
        })
    }

    pub fn trivial(rs: &RootSystem) -> Self {
        Self::new(rs, 1, vec![0; rs.rank()]).expect("d = 1 is valid")
    }

    /// `Δ` with each coordinate lifted to `[0, d)`.
    pub fn normalized_delta(&self) -> Vec<i64> {
        self.delta
            .iter()
            .map(|x| x.rem_euclid(self.d as i64))
            .collect()
    }
}

/// The alcove point of the conjugacy class of `ρ(γ)` for the local type
/// `(d, Δ)`, with the affine Weyl element realising the reduction.
pub fn weight_of_local_rep(rs: &RootSystem, d: u64, delta: &[i64]) -> Result<Reduction> {
    let lt = LocalType::new(rs, d, delta.to_vec())?;
    apartment::reduce_to_alcove(rs, &lt.theta)
}

/// The local type of least order `d` with `d·θ ∈ Y(T)`, and `Δ = d·θ`.
pub fn local_rep_of_weight(rs: &RootSystem, theta: &ApartmentPoint) -> Result<LocalType> {
    let c = rs.coweight_to_coroot(theta.coords())?;
    let d = rational::lcm_of_denominators(&c);
    let delta = c
        .iter()
        .map(|q| (q * Q::from_integer(d)).to_integer() as i64)
        .collect();
    LocalType::new(rs, d as u64, delta)
}

/// `r(Δ) = d·(θ, r)`.
pub fn delta_pairing(rs: &RootSystem, lt: &LocalType, r: RootId) -> Result<i64> {
    let r = rs.check_root(r)?;
    let coweight = rs.coroot_to_coweight(&lt.delta)?;
    Ok(coweight
        .iter()
        .zip(&rs.root(r).coords)
        .map(|(a, b)| a * b)
        .sum())
}

/// Exponent `k ∈ [0, d)` with `ρ(γ) U_r(B) ρ(γ)⁻¹ = U_r(ζ^k B)`.
pub fn root_group_action(rs: &RootSystem, lt: &LocalType, r: RootId) -> Result<u64> {
    Ok(delta_pairing(rs, lt, r)?.rem_euclid(lt.d as i64) as u64)
}
