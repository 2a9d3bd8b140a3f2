//! Small dense exact linear algebra over `Q`.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use crate::rational::Q;

/// Rank of the row set, by Gaussian elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col];
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col] / p;
                for c in col..ncols {
                    let v = m[rank][c];
                    m[r][c] -= f * v;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col];
        for c in 0..2 * n {
            m[col][c] /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rank_of_small_sets() {
        assert_eq!(rank(&mat(&[&[1, 0], &[0, 1], &[1, 1]])), 2);
        assert_eq!(rank(&mat(&[&[1, 1], &[-1, -1]])), 1);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn inverse_of_a2_cartan() {
        let inv = inverse(&mat(&[&[2, -1], &[-1, 2]])).unwrap();
        assert_eq!(
            inv,
            vec![
                vec![Q::new(2, 3), Q::new(1, 3)],
                vec![Q::new(1, 3), Q::new(2, 3)]
            ]
        );
        assert!(inverse(&mat(&[&[1, 2], &[2, 4]])).is_none());
    }
}
