//! Root data for semisimple simply connected groups of types A–G and their
//! finite products.
//!
//! Conventions:
//!
//! * roots are integer vectors in the simple-root basis;
//! * coroots (and every apartment point) are vectors in the basis of
//!   fundamental coweights `α*`, dual to the simple roots, so the canonical
//!   pairing of a coweight with a root is a plain dot product;
//! * `cartan[i][j] = (α_i∨, α_j)`, i.e. row `i` is the coweight vector of
//!   the simple coroot `α_i∨`;
//! * simple roots are numbered as in Bourbaki's tables.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub const ALL: [SimpleType; 7] = [
        Self::A,
        Self::B,
        Self::C,
        Self::D,
        Self::E,
        Self::F,
        Self::G,
    ];

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Self::A => rank >= 1,
            Self::B | Self::C => rank >= 2,
            Self::D => rank >= 3,
            Self::E => (6..=8).contains(&rank),
            Self::F => rank == 4,
            Self::G => rank == 2,
        }
    }

    /// All valid ranks `<= max_rank`, in increasing order.
    pub fn ranks_up_to(self, max_rank: usize) -> impl Iterator<Item = usize> {
        (1..=max_rank).filter(move |&r| self.is_valid_rank(r))
    }

    fn rank_requirement(self) -> &'static str {
        match self {
            Self::A => "type A needs rank >= 1",
            Self::B => "type B needs rank >= 2",
            Self::C => "type C needs rank >= 2",
            Self::D => "type D needs rank >= 3",
            Self::E => "type E needs rank 6, 7 or 8",
            Self::F => "type F only exists in rank 4",
            Self::G => "type G only exists in rank 2",
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for SimpleType {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "C" | "c" => Ok(Self::C),
            "D" | "d" => Ok(Self::D),
            "E" | "e" => Ok(Self::E),
            "F" | "f" => Ok(Self::F),
            "G" | "g" => Ok(Self::G),
            _ => Err(()),
        }
    }
}

/// One simple factor of a product root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub kind: SimpleType,
    pub rank: usize,
    /// Index of this factor's first simple root in the global numbering.
    pub offset: usize,
}

impl Factor {
    pub fn simple_indices(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.rank
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

/// Index of a root in the deterministic root order of its [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Simple-root coordinates; all of one sign.
    pub coords: Vec<i64>,
    /// Coroot in fundamental-coweight coordinates.
    pub coroot: Vec<i64>,
    pub factor: usize,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.coords.iter().any(|&c| c > 0)
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

/// Immutable root datum of a semisimple simply connected group.
#[derive(Debug, Clone)]
pub struct RootSystem {
    factors: Vec<Factor>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    n_positive: usize,
    index: HashMap<Vec<i64>, usize>,
    highest: Vec<usize>,
    marks: Vec<i64>,
    highest_reflection_words: Vec<Vec<usize>>,
    coweight_to_coroot: Vec<Vec<Q>>,
}

fn cartan_of(kind: SimpleType, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        SimpleType::A | SimpleType::B | SimpleType::C => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
        }
        SimpleType::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        SimpleType::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
        }
        SimpleType::F => {
            bond(0, 1);
            bond(1, 2);
            bond(2, 3);
        }
        SimpleType::G => bond(0, 1),
    }
    // Multiple bonds: the short root's coroot pairs to -k with the long root.
    match kind {
        SimpleType::B => a[n - 1][n - 2] = -2,
        SimpleType::C => a[n - 2][n - 1] = -2,
        SimpleType::F => a[2][1] = -2,
        SimpleType::G => a[0][1] = -3,
        _ => {}
    }
    a
}

/// Parses `A2`, `G2`, `A1xA1`, `B3xG2`...
pub fn parse_type_spec(s: &str) -> Result<Vec<(SimpleType, usize)>> {
    let bad = || Error::TypeSyntax(s.to_string());
    s.split(['x', 'X', '×'])
        .map(|part| {
            let part = part.trim();
            let mut chars = part.chars();
            let kind: SimpleType = chars
                .next()
                .ok_or_else(bad)?
                .to_string()
                .parse()
                .map_err(|_| bad())?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            Ok((kind, rank))
        })
        .collect()
}

impl RootSystem {
    /// Builds the root datum by reflection closure from the Cartan matrix.
    pub fn new(spec: &[(SimpleType, usize)]) -> Result<Self> {
        if spec.is_empty() {
            return Err(Error::EmptySystem);
        }
        let mut factors = Vec::with_capacity(spec.len());
        let mut offset = 0;
        for &(kind, rank) in spec {
            if !kind.is_valid_rank(rank) {
                return Err(Error::InvalidType {
                    kind,
                    rank,
                    reason: kind.rank_requirement(),
                });
            }
            factors.push(Factor { kind, rank, offset });
            offset += rank;
        }
        let l = offset;
        let mut cartan = vec![vec![0i64; l]; l];
        for f in &factors {
            let block = cartan_of(f.kind, f.rank);
            for (i, row) in block.iter().enumerate() {
                cartan[f.offset + i][f.offset..f.offset + f.rank].copy_from_slice(row);
            }
        }

        let factor_of = |i: usize| {
            factors
                .iter()
                .position(|f| f.simple_indices().contains(&i))
                .unwrap()
        };

        // Reflection closure on positive (root, coroot) pairs.
        let mut positive: Vec<Root> = (0..l)
            .map(|i| {
                let mut coords = vec![0; l];
                coords[i] = 1;
                Root {
                    coords,
                    coroot: cartan[i].clone(),
                    factor: factor_of(i),
                }
            })
            .collect();
        let mut seen: HashMap<Vec<i64>, usize> = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();
        let mut cursor = 0;
        while cursor < positive.len() {
            let r = positive[cursor].clone();
            for j in 0..l {
                let (coords, coroot) = reflect_pair(&cartan, j, &r.coords, &r.coroot);
                if coords.iter().all(|&c| c >= 0) && coords.iter().any(|&c| c > 0) {
                    match seen.get(&coords) {
                        Some(&k) => debug_assert_eq!(positive[k].coroot, coroot),
                        None => {
                            seen.insert(coords.clone(), positive.len());
                            positive.push(Root {
                                coords,
                                coroot,
                                factor: r.factor,
                            });
                        }
                    }
                }
            }
            cursor += 1;
        }
        positive.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coords.cmp(&a.coords))
        });
        let n_positive = positive.len();
        let negative: Vec<Root> = positive
            .iter()
            .map(|r| Root {
                coords: r.coords.iter().map(|c| -c).collect(),
                coroot: r.coroot.iter().map(|c| -c).collect(),
                factor: r.factor,
            })
            .collect();
        let roots: Vec<Root> = positive.into_iter().chain(negative).collect();
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.clone(), k))
            .collect();

        let mut highest = Vec::with_capacity(factors.len());
        let mut marks = vec![0i64; l];
        for (fi, f) in factors.iter().enumerate() {
            let h = (0..n_positive)
                .filter(|&k| roots[k].factor == fi)
                .max_by_key(|&k| roots[k].height())
                .expect("every factor has a simple root");
            for i in f.simple_indices() {
                marks[i] = roots[h].coords[i];
            }
            highest.push(h);
        }

        let cartan_t: Vec<Vec<Q>> = (0..l)
            .map(|i| (0..l).map(|j| rational::int(cartan[j][i])).collect())
            .collect();
        let coweight_to_coroot =
            linalg::inverse(&cartan_t).expect("Cartan matrices are invertible");

        let mut rs = RootSystem {
            factors,
            cartan,
            roots,
            n_positive,
            index,
            highest,
            marks,
            highest_reflection_words: Vec::new(),
            coweight_to_coroot,
        };
        rs.highest_reflection_words = (0..rs.factors.len())
            .map(|f| rs.reflection_word_of_highest(f))
            .collect();
        Ok(rs)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(&parse_type_spec(s)?)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The `(type, rank)` list this system was built from.
    pub fn signature(&self) -> Vec<(SimpleType, usize)> {
        self.factors.iter().map(|f| (f.kind, f.rank)).collect()
    }

    pub fn name(&self) -> String {
        self.factors
            .iter()
            .map(Factor::to_string)
            .collect::<Vec<_>>()
            .join("x")
    }

    /// ℓ, the number of simple roots.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn dim_g(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.0]
    }

    pub fn root_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.roots.len()).map(RootId)
    }

    pub fn positive_ids(&self) -> impl Iterator<Item = RootId> {
        (0..self.n_positive).map(RootId)
    }

    pub fn negative_ids(&self) -> impl Iterator<Item = RootId> {
        (self.n_positive..self.roots.len()).map(RootId)
    }

    pub fn num_positive(&self) -> usize {
        self.n_positive
    }

    pub fn negate(&self, id: RootId) -> RootId {
        if id.0 < self.n_positive {
            RootId(id.0 + self.n_positive)
        } else {
            RootId(id.0 - self.n_positive)
        }
    }

    pub fn find(&self, coords: &[i64]) -> Option<RootId> {
        self.index.get(coords).map(|&k| RootId(k))
    }

    pub fn simple_root(&self, i: usize) -> Result<RootId> {
        let mut coords = vec![0; self.rank()];
        *coords.get_mut(i).ok_or(Error::NotSimple(i))? = 1;
        Ok(self.find(&coords).expect("simple roots are roots"))
    }

    pub fn check_root(&self, id: RootId) -> Result<RootId> {
        if id.0 < self.roots.len() {
            Ok(id)
        } else {
            Err(Error::RootOutOfRange(id.0))
        }
    }

    /// Concatenated marks `c_α` of all factors.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn factor_of_simple(&self, i: usize) -> Result<usize> {
        self.factors
            .iter()
            .position(|f| f.simple_indices().contains(&i))
            .ok_or(Error::NotSimple(i))
    }

    /// Highest root of a factor and that factor's marks.
    pub fn highest_root(&self, factor: usize) -> Result<(RootId, Vec<i64>)> {
        let f = self.factors.get(factor).ok_or(Error::FactorOutOfRange {
            index: factor,
            count: self.factors.len(),
        })?;
        let id = RootId(self.highest[factor]);
        Ok((id, self.marks[f.simple_indices()].to_vec()))
    }

    /// `(θ, r)` for a coweight vector `θ`.
    pub fn pairing(&self, theta: &[Q], r: RootId) -> Result<Q> {
        self.check_len(theta.len())?;
        let r = self.check_root(r)?;
        Ok(rational::dot(theta, &self.roots[r.0].coords))
    }

    pub(crate) fn pairing_unchecked(&self, theta: &[Q], r: RootId) -> Q {
        rational::dot(theta, &self.roots[r.0].coords)
    }

    pub(crate) fn check_len(&self, got: usize) -> Result<()> {
        if got == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got,
            })
        }
    }

    /// `dim G/P_I = #(R⁺ \ R⁺_I)`.
    pub fn flag_dimension(&self, subset: &[usize]) -> Result<usize> {
        let mut inside = vec![false; self.rank()];
        for &i in subset {
            *inside.get_mut(i).ok_or(Error::NotSimple(i))? = true;
        }
        Ok(self
            .positive_ids()
            .filter(|&id| {
                self.root(id)
                    .coords
                    .iter()
                    .zip(&inside)
                    .any(|(&c, &ins)| c != 0 && !ins)
            })
            .count())
    }

    /// Coroot-lattice coordinates of a coweight vector.
    pub fn coweight_to_coroot(&self, theta: &[Q]) -> Result<Vec<Q>> {
        self.check_len(theta.len())?;
        Ok(self
            .coweight_to_coroot
            .iter()
            .map(|row| row.iter().zip(theta).map(|(a, t)| a * t).sum())
            .collect())
    }

    /// Coweight coordinates of `Σ c_i α_i∨`.
    pub fn coroot_to_coweight(&self, coroot_coords: &[i64]) -> Result<Vec<i64>> {
        self.check_len(coroot_coords.len())?;
        Ok((0..self.rank())
            .map(|j| {
                (0..self.rank())
                    .map(|i| coroot_coords[i] * self.cartan[i][j])
                    .sum()
            })
            .collect())
    }

    /// Simple reflection `s_i` on a coweight vector: `x - (x, α_i) α_i∨`.
    pub fn reflect_coweight(&self, i: usize, x: &mut [Q]) {
        let xi = x[i];
        for (xj, &a) in x.iter_mut().zip(&self.cartan[i]) {
            *xj -= xi * rational::int(a);
        }
    }

    pub fn reflect_coweight_int(&self, i: usize, x: &mut [i64]) {
        let xi = x[i];
        for (xj, &a) in x.iter_mut().zip(&self.cartan[i]) {
            *xj -= xi * a;
        }
    }

    /// Simple reflection `s_i` on a root, in simple-root coordinates.
    pub fn reflect_root(&self, i: usize, r: &[i64]) -> Vec<i64> {
        let c: i64 = self.cartan[i].iter().zip(r).map(|(a, x)| a * x).sum();
        let mut out = r.to_vec();
        out[i] -= c;
        out
    }

    /// Word in simple reflections (leftmost acts last) equal to the
    /// reflection in the highest root of `factor`.
    pub fn highest_reflection_word(&self, factor: usize) -> &[usize] {
        &self.highest_reflection_words[factor]
    }

    fn reflection_word_of_highest(&self, factor: usize) -> Vec<usize> {
        let mut r = self.roots[self.highest[factor]].coords.clone();
        let mut path = Vec::new();
        loop {
            if r.iter().sum::<i64>() == 1 {
                let j = r.iter().position(|&c| c == 1).unwrap();
                let mut word = path.clone();
                word.push(j);
                word.extend(path.iter().rev());
                return word;
            }
            let i = (0..self.rank())
                .find(|&i| {
                    self.cartan[i]
                        .iter()
                        .zip(&r)
                        .map(|(a, x)| a * x)
                        .sum::<i64>()
                        > 0
                })
                .expect("a non-simple positive root can be lowered");
            r = self.reflect_root(i, &r);
            path.push(i);
        }
    }
}

fn reflect_pair(
    cartan: &[Vec<i64>],
    j: usize,
    root: &[i64],
    coroot: &[i64],
) -> (Vec<i64>, Vec<i64>) {
    let c: i64 = cartan[j].iter().zip(root).map(|(a, x)| a * x).sum();
    let mut r = root.to_vec();
    r[j] -= c;
    let k = coroot[j];
    let v = coroot
        .iter()
        .zip(&cartan[j])
        .map(|(x, a)| x - k * a)
        .collect();
    (r, v)
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for RootSystem {}

#[cfg(test)]
mod tests {
    use super::*;
    use SimpleType::*;

    fn closed_form_count(kind: SimpleType, n: usize) -> usize {
        match kind {
            A => n * (n + 1),
            B | C => 2 * n * n,
            D => 2 * n * (n - 1),
            E => [72, 126, 240][n - 6],
            F => 48,
            G => 12,
        }
    }

    fn all_simple(max_rank: usize) -> Vec<(SimpleType, usize)> {
        SimpleType::ALL
            .iter()
            .flat_map(|&k| k.ranks_up_to(max_rank).map(move |r| (k, r)))
            .collect()
    }

    #[test]
    fn small_examples() {
        let a1 = RootSystem::new(&[(A, 1)]).unwrap();
        assert_eq!((a1.roots().len(), a1.rank(), a1.dim_g()), (2, 1, 3));
        let a2 = RootSystem::new(&[(A, 2)]).unwrap();
        assert_eq!((a2.roots().len(), a2.dim_g()), (6, 8));
        assert_eq!(a2.marks(), &[1, 1]);
        let g2 = RootSystem::new(&[(G, 2)]).unwrap();
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.marks(), &[3, 2]);
    }

    #[test]
    fn root_counts_match_closed_forms() {
        for (kind, n) in all_simple(8) {
            let rs = RootSystem::new(&[(kind, n)]).unwrap();
            assert_eq!(rs.roots().len(), closed_form_count(kind, n), "{kind}{n}");
            assert_eq!(rs.dim_g() - rs.rank(), rs.roots().len());
        }
    }

    #[test]
    fn structural_invariants() {
        for (kind, n) in all_simple(8) {
            let rs = RootSystem::new(&[(kind, n)]).unwrap();
            for id in rs.root_ids() {
                let r = rs.root(id);
                let neg: Vec<i64> = r.coords.iter().map(|c| -c).collect();
                assert_eq!(rs.find(&neg), Some(rs.negate(id)));
                assert!(r.coords.iter().all(|&c| c >= 0) || r.coords.iter().all(|&c| c <= 0));
                // (r∨, r) = 2
                let pr: i64 = r.coroot.iter().zip(&r.coords).map(|(a, b)| a * b).sum();
                assert_eq!(pr, 2);
                // (α_j∨, r) from the Cartan matrix
                for j in 0..rs.rank() {
                    let via_cartan: i64 = rs.cartan()[j]
                        .iter()
                        .zip(&r.coords)
                        .map(|(a, b)| a * b)
                        .sum();
                    let via_coroot: i64 = rs
                        .root(rs.simple_root(j).unwrap())
                        .coroot
                        .iter()
                        .zip(&r.coords)
                        .map(|(a, b)| a * b)
                        .sum();
                    assert_eq!(via_cartan, via_coroot);
                }
                // reflections permute R
                for j in 0..rs.rank() {
                    assert!(rs.find(&rs.reflect_root(j, &r.coords)).is_some());
                }
            }
            let (h, marks) = rs.highest_root(0).unwrap();
            assert_eq!(rs.root(h).coords, marks);
            assert!(marks.iter().all(|&c| c >= 1));
        }
    }

    #[test]
    fn highest_roots_and_marks() {
        let a2 = RootSystem::new(&[(A, 2)]).unwrap();
        let (h, c) = a2.highest_root(0).unwrap();
        assert_eq!((a2.root(h).coords.clone(), c), (vec![1, 1], vec![1, 1]));
        let c2 = RootSystem::new(&[(C, 2)]).unwrap();
        let (h, c) = c2.highest_root(0).unwrap();
        assert_eq!((c2.root(h).coords.clone(), c), (vec![2, 1], vec![2, 1]));
        let a1 = RootSystem::new(&[(A, 1)]).unwrap();
        assert_eq!(a1.highest_root(0).unwrap().1, vec![1]);
        assert!(matches!(
            a1.highest_root(1),
            Err(Error::FactorOutOfRange { .. })
        ));

        let table: &[(SimpleType, usize, &[i64])] = &[
            (B, 4, &[1, 2, 2, 2]),
            (C, 4, &[2, 2, 2, 1]),
            (D, 5, &[1, 2, 2, 1, 1]),
            (E, 6, &[1, 2, 2, 3, 2, 1]),
            (E, 7, &[2, 2, 3, 4, 3, 2, 1]),
            (E, 8, &[2, 3, 4, 6, 5, 4, 3, 2]),
            (F, 4, &[2, 3, 4, 2]),
        ];
        for &(k, n, marks) in table {
            assert_eq!(RootSystem::new(&[(k, n)]).unwrap().marks(), marks, "{k}{n}");
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = RootSystem::new(&[(A, 2)]).unwrap();
        let sum = a2.find(&[1, 1]).unwrap();
        assert_eq!(
            a2.pairing(&[Q::from(1), Q::from(0)], sum).unwrap(),
            Q::from(1)
        );
        assert_eq!(
            a2.pairing(&[Q::new(1, 3), Q::new(1, 3)], sum).unwrap(),
            Q::new(2, 3)
        );
        assert!(matches!(
            a2.pairing(&[Q::from(1)], sum),
            Err(Error::DimensionMismatch { .. })
        ));
        let c2 = RootSystem::new(&[(C, 2)]).unwrap();
        let top = c2.find(&[2, 1]).unwrap();
        assert_eq!(
            c2.pairing(&[Q::new(1, 2), Q::from(0)], top).unwrap(),
            Q::from(1)
        );
    }

    #[test]
    fn flag_dimensions() {
        let a2 = RootSystem::new(&[(A, 2)]).unwrap();
        assert_eq!(a2.flag_dimension(&[]).unwrap(), 3);
        assert_eq!(a2.flag_dimension(&[0]).unwrap(), 2);
        assert_eq!(a2.flag_dimension(&[0, 1]).unwrap(), 0);
        assert!(a2.flag_dimension(&[5]).is_err());
    }

    #[test]
    fn products_concatenate() {
        let rs = RootSystem::parse("A1xG2xB3").unwrap();
        assert_eq!(rs.rank(), 6);
        assert_eq!(rs.roots().len(), 2 + 12 + 18);
        assert_eq!(rs.marks(), &[1, 3, 2, 1, 2, 2]);
        assert_eq!(rs.name(), "A1xG2xB3");
        for f in 0..3 {
            let (h, m) = rs.highest_root(f).unwrap();
            assert_eq!(
                &rs.root(h).coords[rs.factors()[f].simple_indices()],
                m.as_slice()
            );
        }
    }

    #[test]
    fn deterministic_order() {
        let a2 = RootSystem::new(&[(A, 2)]).unwrap();
        let coords: Vec<_> = a2.roots().iter().map(|r| r.coords.clone()).collect();
        assert_eq!(
            coords,
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![-1, 0],
                vec![0, -1],
                vec![-1, -1]
            ]
        );
    }

    #[test]
    fn rejects_invalid_types() {
        for (k, n) in [
            (B, 1),
            (C, 1),
            (D, 2),
            (E, 5),
            (E, 9),
            (F, 3),
            (G, 3),
            (A, 0),
        ] {
            assert!(
                matches!(RootSystem::new(&[(k, n)]), Err(Error::InvalidType { .. })),
                "{k}{n}"
            );
        }
        assert!(RootSystem::new(&[]).is_err());
        assert!(RootSystem::parse("Q3").is_err());
        assert!(RootSystem::parse("A").is_err());
        assert!(RootSystem::parse("A2x").is_err());
    }

    #[test]
    fn highest_reflection_word_reflects_highest_root() {
        for (kind, n) in all_simple(8) {
            let rs = RootSystem::new(&[(kind, n)]).unwrap();
            let (h, _) = rs.highest_root(0).unwrap();
            let mut r = rs.root(h).coords.clone();
            for &i in rs.highest_reflection_word(0).iter().rev() {
                r = rs.reflect_root(i, &r);
            }
            assert_eq!(r, rs.root(rs.negate(h)).coords, "{kind}{n}");
        }
    }

    #[test]
    fn coroot_coordinate_round_trip() {
        let rs = RootSystem::parse("C3").unwrap();
        let cw = rs.coroot_to_coweight(&[1, -2, 3]).unwrap();
        let q: Vec<Q> = cw.iter().map(|&x| rational::int(x)).collect();
        assert_eq!(
            rs.coweight_to_coroot(&q).unwrap(),
            vec![Q::from(1), Q::from(-2), Q::from(3)]
        );
    }
}
