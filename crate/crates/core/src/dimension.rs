//! Dimension counts: `e(θ)`, `μ(α)`, `ν(α)`, Weil's `H¹` formula, the
//! representation-space and moduli-space dimensions, and Hecke fibres.

use serde::{Deserialize, Serialize};

use crate::apartment::{self, ApartmentPoint};
use crate::error::{Error, Result};
use crate::parahoric::{self, ParahoricDescriptor};
use crate::rational;
use crate::rootsys::{RootSystem, SimpleType};

/// Rank of `Id - Ad ρ_θ(γ)`: the number of roots with non-integral pairing
/// against `θ`. The point is carried into the alcove first; the count is
/// invariant under the affine Weyl group anyway.
pub fn e_theta(rs: &RootSystem, theta: &ApartmentPoint) -> Result<usize> {
    let reduced = apartment::reduce_to_alcove(rs, theta)?.point;
    Ok(e_theta_in_alcove(rs, &reduced))
}

// dim K_G - |S| - #{r : (θ, r) ∈ {-1, 0, 1}}
fn e_theta_in_alcove(rs: &RootSystem, theta: &ApartmentPoint) -> usize {
    let integral = rs
        .root_ids()
        .filter(|&r| {
            let v = rs.pairing_unchecked(theta.coords(), r);
            rational::is_integer(&v) && v.to_integer().abs() <= 1
        })
        .count();
    rs.dim_g() - rs.rank() - integral
}

fn coefficient(rs: &RootSystem, r: crate::RootId, i: usize) -> i64 {
    rs.root(r).coords[i]
}

/// `#{r ∈ R⁺ : coefficient of α in r is c_α}`.
pub fn mu(rs: &RootSystem, alpha: usize) -> Result<usize> {
    if alpha >= rs.rank() {
        return Err(Error::NotSimple(alpha));
    }
    let c = rs.marks()[alpha];
    Ok(rs
        .positive_ids()
        .filter(|&r| coefficient(rs, r, alpha) == c)
        .count())
}

/// `#{r ∈ R⁻ : r does not involve α}`.
pub fn nu(rs: &RootSystem, alpha: usize) -> Result<usize> {
    if alpha >= rs.rank() {
        return Err(Error::NotSimple(alpha));
    }
    Ok(rs
        .negative_ids()
        .filter(|&r| coefficient(rs, r, alpha) == 0)
        .count())
}

/// `dim G/P_α` for the maximal parabolic `P_α = P_{S \ {α}}`.
pub fn maximal_flag_dimension(rs: &RootSystem, alpha: usize) -> Result<usize> {
    if alpha >= rs.rank() {
        return Err(Error::NotSimple(alpha));
    }
    let others: Vec<usize> = (0..rs.rank()).filter(|&i| i != alpha).collect();
    rs.flag_dimension(&others)
}

/// `e(θ_α)` computed three ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EVertex {
    /// `dim K_G - 2μ - 2ν - ℓ`
    pub via_mu_nu: i64,
    /// `2 (dim G/P_α - μ)`
    pub via_flag: i64,
    /// the root count of [`e_theta`] at `θ_α`
    pub via_roots: i64,
}

impl EVertex {
    pub fn value(&self) -> i64 {
        self.via_roots
    }
}

pub fn e_vertex(rs: &RootSystem, alpha: usize) -> Result<EVertex> {
    let m = mu(rs, alpha)? as i64;
    let n = nu(rs, alpha)? as i64;
    let flag = maximal_flag_dimension(rs, alpha)? as i64;
    let theta = apartment::vertex_of_simple(rs, alpha)?;
    let out = EVertex {
        via_mu_nu: rs.dim_g() as i64 - 2 * m - 2 * n - rs.rank() as i64,
        via_flag: 2 * (flag - m),
        via_roots: e_theta(rs, &theta)? as i64,
    };
    if out.via_mu_nu != out.via_flag || out.via_flag != out.via_roots {
        return Err(Error::Inconsistent(format!(
            "e(θ_{}) disagrees between formulas: {out:?}",
            alpha + 1
        )));
    }
    Ok(out)
}

/// `dim_R H¹(π, ρ) = 2d(g - 1) + 2 h⁰ + Σ e_ν`.
pub fn weil_h1_dim(d: i64, genus: i64, h0: i64, e: &[i64]) -> i64 {
    2 * d * (genus - 1) + 2 * h0 + e.iter().sum::<i64>()
}

/// Genus and marked-point weights; the weights are stored alcove-reduced.
#[derive(Debug, Clone)]
pub struct ModuliSpec<'a> {
    rs: &'a RootSystem,
    genus: u32,
    weights: Vec<ApartmentPoint>,
    notices: Vec<String>,
}

impl<'a> ModuliSpec<'a> {
    pub fn new(rs: &'a RootSystem, genus: u32, weights: Vec<ApartmentPoint>) -> Result<Self> {
        let mut notices = Vec::new();
        if genus < 2 {
            notices.push(format!("genus {genus} < 2: the formulas are evaluated but the existence results assume g >= 2"));
        }
        let mut reduced = Vec::with_capacity(weights.len());
        for (i, w) in weights.into_iter().enumerate() {
            let red = apartment::reduce_to_alcove(rs, &w)?;
            if red.point != w {
                notices.push(format!("weight {} {} reduced to {}", i + 1, w, red.point));
            }
            reduced.push(red.point);
        }
        Ok(Self {
            rs,
            genus,
            weights: reduced,
            notices,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn weights(&self) -> &[ApartmentPoint] {
        &self.weights
    }

    pub fn notices(&self) -> &[String] {
        &self.notices
    }

    pub fn e_values(&self) -> Vec<usize> {
        self.weights
            .iter()
            .map(|w| e_theta_in_alcove(self.rs, w))
            .collect()
    }

    /// `(2g - 1) dim K_G + Σ e(θ_i)`, a real dimension.
    pub fn rep_space_dim(&self) -> i64 {
        let e: usize = self.e_values().iter().sum();
        (2 * self.genus as i64 - 1) * self.rs.dim_g() as i64 + e as i64
    }

    /// `dim G (g - 1) + Σ e(θ_i)/2`, a complex dimension.
    pub fn moduli_dim(&self) -> Result<i64> {
        let mut half = 0i64;
        for e in self.e_values() {
            if e % 2 != 0 {
                return Err(Error::Inconsistent(format!("odd e(θ) = {e}")));
            }
            half += e as i64 / 2;
        }
        Ok(self.rs.dim_g() as i64 * (self.genus as i64 - 1) + half)
    }

    pub fn report(&self, with_mu_nu: bool) -> Result<DimensionReport> {
        let rep = self.rep_space_dim();
        let moduli = self.moduli_dim()?;
        let dim_k = self.rs.dim_g() as i64;
        let mu_nu = if with_mu_nu {
            Some(mu_nu_table(self.rs)?)
        } else {
            None
        };
        Ok(DimensionReport {
            system: self.rs.signature(),
            genus: self.genus,
            weights: self.weights.clone(),
            e: self.e_values(),
            dim_k,
            rep_space_dim: rep,
            moduli_dim: moduli,
            residue: rep - dim_k - 2 * moduli,
            notices: self.notices.clone(),
            mu_nu,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub system: Vec<(SimpleType, usize)>,
    pub genus: u32,
    pub weights: Vec<ApartmentPoint>,
    pub e: Vec<usize>,
    pub dim_k: i64,
    pub rep_space_dim: i64,
    pub moduli_dim: i64,
    /// `rep_space_dim - dim K_G - 2 moduli_dim`, always 0.
    pub residue: i64,
    pub notices: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu_nu: Option<Vec<MuNuRow>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuNuRow {
    pub simple_root: usize,
    pub mark: i64,
    pub mu: usize,
    pub nu: usize,
    pub dim_g_mod_p: usize,
    pub e: i64,
}

pub fn mu_nu_table(rs: &RootSystem) -> Result<Vec<MuNuRow>> {
    (0..rs.rank())
        .map(|i| {
            Ok(MuNuRow {
                simple_root: i + 1,
                mark: rs.marks()[i],
                mu: mu(rs, i)?,
                nu: nu(rs, i)?,
                dim_g_mod_p: maximal_flag_dimension(rs, i)?,
                e: e_vertex(rs, i)?.value(),
            })
        })
        .collect()
}

/// Dimension of the fibre `upper / lower` of the Hecke correspondence:
/// `Σ_r (m_r(lower) - m_r(upper))`. For standard parahorics
/// `ev⁻¹(P_I) ⊆ ev⁻¹(P_J)` this is also `dim P_J / P_I`, and both routes
/// are checked against each other.
pub fn hecke_fiber_dim(
    rs: &RootSystem,
    lower: &ParahoricDescriptor,
    upper: &ParahoricDescriptor,
) -> Result<usize> {
    if !parahoric::contains(upper, lower)? {
        return Err(Error::NotContained);
    }
    let by_exponents: i64 = lower
        .exponents
        .0
        .iter()
        .zip(&upper.exponents.0)
        .map(|(l, u)| l - u)
        .sum();
    if lower.flags.standard && upper.flags.standard {
        let i = parahoric::closed_fiber_parabolic(rs, &lower.theta)?;
        let j = parahoric::closed_fiber_parabolic(rs, &upper.theta)?;
        let by_flags = rs.flag_dimension(&i)? as i64 - rs.flag_dimension(&j)? as i64;
        if by_flags != by_exponents {
            return Err(Error::Inconsistent(format!(
                "Hecke fibre: flag count {by_flags} vs exponent count {by_exponents}"
            )));
        }
    }
    debug_assert!(!by_exponents.is_negative());
    Ok(by_exponents as usize)
}
