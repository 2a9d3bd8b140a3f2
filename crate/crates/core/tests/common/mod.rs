#![allow(dead_code)]

use parahoric_core::apartment::{self, ApartmentPoint};
use parahoric_core::{RootSystem, SimpleType, Q};
use rand::Rng;

pub fn simple_types(max_rank: usize) -> Vec<(SimpleType, usize)> {
    SimpleType::ALL
        .iter()
        .flat_map(|&k| k.ranks_up_to(max_rank).map(move |r| (k, r)))
        .collect()
}

/// A point of the closed alcove from random barycentric weights on each
/// factor's vertices.
pub fn random_alcove_point<R: Rng>(
    rs: &RootSystem,
    rng: &mut R,
    max_weight: u32,
) -> ApartmentPoint {
    let mut coords = Vec::with_capacity(rs.rank());
    for f in 0..rs.factors().len() {
        let verts = apartment::factor_vertices(rs, f);
        let w: Vec<u32> = loop {
            let w: Vec<u32> = verts
                .iter()
                .map(|_| rng.gen_range(0..=max_weight))
                .collect();
            if w.iter().any(|&x| x > 0) {
                break w;
            }
        };
        let total = Q::from(w.iter().sum::<u32>() as i128);
        let mut p = vec![Q::from(0); verts[0].len()];
        for (v, &wi) in verts.iter().zip(&w) {
            for (pi, vi) in p.iter_mut().zip(v) {
                *pi += vi * Q::from(wi as i128) / total;
            }
        }
        coords.extend(p);
    }
    ApartmentPoint::new(rs, coords).unwrap()
}

/// Any rational point with small numerators and denominators.
pub fn random_point<R: Rng>(
    rs: &RootSystem,
    rng: &mut R,
    span: i128,
    max_den: i128,
) -> ApartmentPoint {
    let coords = (0..rs.rank())
        .map(|_| {
            Q::new(
                rng.gen_range(-span * max_den..=span * max_den),
                rng.gen_range(1..=max_den),
            )
        })
        .collect();
    ApartmentPoint::new(rs, coords).unwrap()
}
