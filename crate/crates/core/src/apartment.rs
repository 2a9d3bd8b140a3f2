//! Rational points of the apartment `Y(T) ⊗ Q`, the Weyl alcove and
//! reduction modulo the affine Weyl group `W ⋉ Y(T)`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Q};
use crate::rootsys::{RootId, RootSystem};

/// A rational point in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ApartmentPoint(#[serde(with = "rational::serde_fractions")] Vec<Q>);

impl ApartmentPoint {
    pub fn new(rs: &RootSystem, coords: Vec<Q>) -> Result<Self> {
        rs.check_len(coords.len())?;
        Ok(Self(coords))
    }

    pub fn origin(rs: &RootSystem) -> Self {
        Self(vec![Q::zero(); rs.rank()])
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Q> {
        self.0
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<Q>) -> Self {
        Self(coords)
    }
}

impl fmt::Display for ApartmentPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A wall of the alcove.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Wall {
    /// `(x, α_i) = 0` for the simple root with this global index.
    Simple(usize),
    /// `(x, α_max) = 1` for the highest root of this factor.
    Affine(usize),
}

impl Wall {
    fn order_key(self, rank: usize) -> usize {
        match self {
            Wall::Simple(i) => i,
            Wall::Affine(f) => rank + f,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum AlcoveVerdict {
    Interior,
    Boundary { walls: Vec<Wall> },
    Outside { violated: Vec<Wall> },
}

/// `x ↦ w(x) + t` with `w` a word in simple reflections and `t` in the
/// coroot lattice (stored in coweight coordinates).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeylElement {
    /// `[i1, ..., ik]` means `s_{i1} ∘ ... ∘ s_{ik}`.
    pub word: Vec<usize>,
    pub translation: Vec<i64>,
}

impl AffineWeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self {
            word: Vec::new(),
            translation: vec![0; rs.rank()],
        }
    }

    /// Pure translation by `Σ c_i α_i∨`.
    pub fn translation_by_coroot(rs: &RootSystem, coroot_coords: &[i64]) -> Result<Self> {
        Ok(Self {
            word: Vec::new(),
            translation: rs.coroot_to_coweight(coroot_coords)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty() && self.translation.iter().all(|&t| t == 0)
    }

    pub fn apply_linear(&self, rs: &RootSystem, x: &[Q]) -> Vec<Q> {
        let mut y = x.to_vec();
        for &i in self.word.iter().rev() {
            rs.reflect_coweight(i, &mut y);
        }
        y
    }

    fn apply_linear_int(&self, rs: &RootSystem, x: &[i64]) -> Vec<i64> {
        let mut y = x.to_vec();
        for &i in self.word.iter().rev() {
            rs.reflect_coweight_int(i, &mut y);
        }
        y
    }

    pub fn apply(&self, rs: &RootSystem, p: &ApartmentPoint) -> Result<ApartmentPoint> {
        rs.check_len(p.0.len())?;
        let mut y = self.apply_linear(rs, &p.0);
        for (yi, &ti) in y.iter_mut().zip(&self.translation) {
            *yi += rational::int(ti);
        }
        Ok(ApartmentPoint(y))
    }

    /// `self ∘ other`.
    pub fn compose(&self, rs: &RootSystem, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        let moved = self.apply_linear_int(rs, &other.translation);
        let translation = moved
            .iter()
            .zip(&self.translation)
            .map(|(a, b)| a + b)
            .collect();
        Self { word, translation }
    }

    pub fn inverse(&self, rs: &RootSystem) -> Self {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        let inv_linear = Self {
            word: word.clone(),
            translation: vec![0; rs.rank()],
        };
        let translation = inv_linear
            .apply_linear_int(rs, &self.translation)
            .iter()
            .map(|t| -t)
            .collect();
        Self { word, translation }
    }

    /// Translation part in coroot-lattice coordinates.
    pub fn translation_coroot_coords(&self, rs: &RootSystem) -> Vec<i64> {
        let t: Vec<Q> = self.translation.iter().map(|&x| rational::int(x)).collect();
        rs.coweight_to_coroot(&t)
            .expect("translation has rank entries")
            .iter()
            .map(|q| q.to_integer() as i64)
            .collect()
    }
}

/// The alcove representative of a point and the element carrying it there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub point: ApartmentPoint,
    /// `element · input = point`.
    pub element: AffineWeylElement,
}

/// Per factor: `0` and `θ_α = α*/c_α`. Products are Cartesian, in
/// lexicographic order of the per-factor vertex indices.
pub fn alcove_vertices(rs: &RootSystem) -> Vec<ApartmentPoint> {
    let per_factor: Vec<Vec<Vec<Q>>> = (0..rs.factors().len())
        .map(|f| factor_vertices(rs, f))
        .collect();
    let mut out = vec![Vec::<Q>::new()];
    for verts in &per_factor {
        out = out
            .iter()
            .flat_map(|prefix| {
                verts.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.extend_from_slice(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(ApartmentPoint).collect()
}

/// The `ℓ_f + 1` vertices of factor `f`, in that factor's own coordinates.
pub fn factor_vertices(rs: &RootSystem, f: usize) -> Vec<Vec<Q>> {
    let factor = rs.factors()[f];
    let marks = &rs.marks()[factor.simple_indices()];
    let mut verts = vec![vec![Q::zero(); factor.rank]];
    for (k, &c) in marks.iter().enumerate() {
        let mut v = vec![Q::zero(); factor.rank];
        v[k] = Q::new(1, c as i128);
        verts.push(v);
    }
    verts
}

/// `θ_α = α*/c_α` for the simple root with global index `i`.
pub fn vertex_of_simple(rs: &RootSystem, i: usize) -> Result<ApartmentPoint> {
    if i >= rs.rank() {
        return Err(Error::NotSimple(i));
    }
    let mut v = vec![Q::zero(); rs.rank()];
    v[i] = Q::new(1, rs.marks()[i] as i128);
    Ok(ApartmentPoint(v))
}

/// Signed violation of each wall: positive means the point is on the wrong
/// side, zero means the wall is tight.
fn wall_defects(rs: &RootSystem, x: &[Q]) -> Vec<(Wall, Q)> {
    let mut out: Vec<(Wall, Q)> = (0..rs.rank()).map(|i| (Wall::Simple(i), -x[i])).collect();
    for f in 0..rs.factors().len() {
        let (h, _) = rs.highest_root(f).expect("factor index in range");
        out.push((Wall::Affine(f), rs.pairing_unchecked(x, h) - Q::one()));
    }
    out
}

pub fn in_alcove(rs: &RootSystem, p: &ApartmentPoint) -> Result<AlcoveVerdict> {
    rs.check_len(p.0.len())?;
    let defects = wall_defects(rs, &p.0);
    let violated: Vec<Wall> = defects
        .iter()
        .filter(|(_, d)| d.is_positive())
        .map(|(w, _)| *w)
        .collect();
    if !violated.is_empty() {
        return Ok(AlcoveVerdict::Outside { violated });
    }
    let walls: Vec<Wall> = defects
        .iter()
        .filter(|(_, d)| d.is_zero())
        .map(|(w, _)| *w)
        .collect();
    Ok(if walls.is_empty() {
        AlcoveVerdict::Interior
    } else {
        AlcoveVerdict::Boundary { walls }
    })
}

pub fn is_in_closed_alcove(rs: &RootSystem, p: &ApartmentPoint) -> Result<bool> {
    Ok(!matches!(in_alcove(rs, p)?, AlcoveVerdict::Outside { .. }))
}

/// Number of affine root hyperplanes that can separate `x` from the open
/// alcove; each walking step crosses exactly one of them.
fn walk_bound(rs: &RootSystem, x: &[Q]) -> usize {
    rs.positive_ids()
        .map(|r| rational::floor(&rs.pairing_unchecked(x, r)).unsigned_abs() as usize + 1)
        .sum()
}

/// Alcove walking: reflect in the most violated wall (ties to the lowest
/// wall index) until the point lies in the closed alcove.
pub fn reduce_to_alcove(rs: &RootSystem, p: &ApartmentPoint) -> Result<Reduction> {
    rs.check_len(p.0.len())?;
    let cap = walk_bound(rs, &p.0);
    let mut x = p.0.clone();
    let mut g = AffineWeylElement::identity(rs);
    for _ in 0..=cap {
        let worst = wall_defects(rs, &x)
            .into_iter()
            .filter(|(_, d)| d.is_positive())
            .max_by(|(wa, da), (wb, db)| {
                da.cmp(db)
                    .then_with(|| wb.order_key(rs.rank()).cmp(&wa.order_key(rs.rank())))
            });
        let Some((wall, _)) = worst else {
            return Ok(Reduction {
                point: ApartmentPoint(x),
                element: g,
            });
        };
        let step = match wall {
            Wall::Simple(i) => AffineWeylElement {
                word: vec![i],
                translation: vec![0; rs.rank()],
            },
            Wall::Affine(f) => {
                let (h, _) = rs.highest_root(f)?;
                AffineWeylElement {
                    word: rs.highest_reflection_word(f).to_vec(),
                    translation: rs.root(h).coroot.clone(),
                }
            }
        };
        x = step.apply(rs, &ApartmentPoint(x))?.0;
        g = step.compose(rs, &g);
    }
    Err(Error::IterationCap(cap))
}

/// Vanishing set `{(r, n) : (θ, r) = n ∈ Z}` and the facet dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub vanishing: Vec<(RootId, i64)>,
    pub dimension: usize,
}

pub fn facet_of(rs: &RootSystem, p: &ApartmentPoint) -> Result<Facet> {
    rs.check_len(p.0.len())?;
    let vanishing: Vec<(RootId, i64)> = rs
        .root_ids()
        .filter_map(|r| {
            let v = rs.pairing_unchecked(&p.0, r);
            rational::is_integer(&v).then(|| (r, v.to_integer() as i64))
        })
        .collect();
    let rows: Vec<Vec<Q>> = vanishing
        .iter()
        .map(|&(r, _)| {
            rs.root(r)
                .coords
                .iter()
                .map(|&c| rational::int(c))
                .collect()
        })
        .collect();
    let dimension = rs.rank() - linalg::rank(&rows);
    Ok(Facet {
        vanishing,
        dimension,
    })
}

/// Barycenter of a finite point set.
pub fn facet_interior_point(rs: &RootSystem, omega: &[ApartmentPoint]) -> Result<ApartmentPoint> {
    if omega.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = Q::from_integer(omega.len() as i128);
    let mut sum = vec![Q::zero(); rs.rank()];
    for p in omega {
        rs.check_len(p.0.len())?;
        for (s, c) in sum.iter_mut().zip(&p.0) {
            *s += c;
        }
    }
    Ok(ApartmentPoint(sum.into_iter().map(|s| s / n).collect()))
}
