//! Quadrics vanishing on the Plücker image of `Gr(k, m)`, found by
//! sampling. The Plücker ideal is graded by `Z^m` (the diagonal torus of
//! `GL_m`), so the kernel splits into small blocks, one per multidegree.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::linalg::ExactMatrix;
use crate::algebra::modular::{kernel_mod, rank_mod};
use crate::algebra::scalar::{self, Scalar};
use crate::error::{Error, Result};

use super::plucker::{plucker_mod, plucker_of_rows, subsets};

/// Monomial `p_a·p_b` with `a ≤ b`.
pub type QuadMono = (usize, usize);

/// Quadric as a sparse combination of Plücker monomials, modulo a prime.
pub type ModQuadric = Vec<(QuadMono, u64)>;

#[derive(Clone, Debug, Serialize)]
pub struct QuadricSpace {
    pub k: usize,
    pub m: usize,
    pub dimension: usize,
    pub monomials: usize,
    pub blocks: usize,
    pub samples_per_block: usize,
    pub primes: Vec<u64>,
    /// Blocks whose relation count was recomputed over the rationals.
    pub exact_blocks_checked: usize,
    #[serde(skip)]
    pub basis: Vec<(u64, Vec<ModQuadric>)>,
}

impl QuadricSpace {
    pub fn basis_mod(&self, p: u64) -> Option<&[ModQuadric]> {
        self.basis.iter().find(|(q, _)| *q == p).map(|(_, b)| b.as_slice())
    }
}

fn blocks(k: usize, m: usize) -> (Vec<Vec<usize>>, Vec<Vec<QuadMono>>) {
    let sets = subsets(m, k);
    let mut by_degree: BTreeMap<Vec<u8>, Vec<QuadMono>> = BTreeMap::new();
    for a in 0..sets.len() {
        for b in a..sets.len() {
            let mut deg = vec![0u8; m];
            for &i in sets[a].iter().chain(&sets[b]) {
                deg[i] += 1;
            }
            by_degree.entry(deg).or_default().push((a, b));
        }
    }
    (sets, by_degree.into_values().collect())
}

fn random_plane_mod(rng: &mut ChaCha8Rng, k: usize, m: usize, p: u64) -> Vec<Vec<u64>> {
    (0..k).map(|_| (0..m).map(|_| rng.gen_range(0..p)).collect()).collect()
}

fn eval_block(points: &[Vec<u64>], block: &[QuadMono], p: u64) -> Vec<Vec<u64>> {
    points
        .iter()
        .map(|x| block.iter().map(|&(a, b)| crate::algebra::modular::mul_mod(x[a], x[b], p)).collect())
        .collect()
}

/// Relations in one block over the rationals, from small integer planes.
fn exact_block_relations(block: &[QuadMono], k: usize, m: usize, count: usize, rng: &mut ChaCha8Rng) -> usize {
    let rows: Vec<Vec<Scalar>> = (0..count)
        .map(|_| {
            let plane: Vec<Vec<Scalar>> =
                (0..k).map(|_| (0..m).map(|_| scalar::int(rng.gen_range(-6..=6))).collect()).collect();
            match plucker_of_rows(&plane, m) {
                Ok(pv) => block.iter().map(|&(a, b)| &pv.coords[a] * &pv.coords[b]).collect(),
                Err(_) => vec![Scalar::zero(); block.len()],
            }
        })
        .collect();
    block.len() - ExactMatrix::from_rows(rows).rank()
}

pub fn plucker_quadric_space(k: usize, m: usize, seed: u64, primes: &[u64]) -> Result<QuadricSpace> {
    if k == 0 || k >= m {
        return Err(Error::domain("need 0 < k < m"));
    }
    if primes.is_empty() {
        return Err(Error::domain("no primes given"));
    }
    let (sets, blocks) = blocks(k, m);
    let biggest = blocks.iter().map(Vec::len).max().unwrap_or(0);
    // the first 80% of the samples already have to reach full rank
    let samples = ((biggest + 4) * 5).div_ceil(4);
    let head = (samples * 4) / 5;
    let mut dims = Vec::new();
    let mut basis = Vec::new();
    for (pi, &p) in primes.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (pi as u64).wrapping_mul(0x9e37_79b9));
        let points: Vec<Vec<u64>> =
            (0..samples).map(|_| plucker_mod(&random_plane_mod(&mut rng, k, m, p), p, &sets)).collect();
        let mut dim = 0;
        let mut quads: Vec<ModQuadric> = Vec::new();
        for block in &blocks {
            let rows = eval_block(&points, block, p);
            let full = rank_mod(rows.clone(), block.len(), p);
            let part = rank_mod(rows[..head].to_vec(), block.len(), p);
            if full != part {
                return Err(Error::Unstable(format!("block of size {} not stabilized modulo {p}", block.len())));
            }
            let ker = kernel_mod(rows, block.len(), p);
            dim += ker.len();
            for v in ker {
                quads.push(block.iter().zip(v).filter(|(_, c)| *c != 0).map(|(mono, c)| (*mono, c)).collect());
            }
        }
        dims.push(dim);
        basis.push((p, quads));
    }
    if dims.iter().any(|d| *d != dims[0]) {
        return Err(Error::Unstable(format!("primes disagree on the dimension: {dims:?}")));
    }
    // exact recount on a spread of blocks that carry relations
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(17));
    let b0 = &basis[0].1;
    let with_rel: Vec<&Vec<QuadMono>> = blocks.iter().filter(|b| b.len() > 1).collect();
    let step = (with_rel.len() / 8).max(1);
    let mut checked = 0;
    for block in with_rel.iter().step_by(step).take(8) {
        let exact = exact_block_relations(block, k, m, block.len() + 4, &mut rng);
        let modular = b0.iter().filter(|q| q.first().is_some_and(|(mono, _)| block.contains(mono))).count();
        if exact != modular {
            return Err(Error::Unstable(format!("exact and modular relation counts differ ({exact} vs {modular})")));
        }
        checked += 1;
    }
    Ok(QuadricSpace {
        k,
        m,
        dimension: dims[0],
        monomials: sets.len() * (sets.len() + 1) / 2,
        blocks: blocks.len(),
        samples_per_block: samples,
        primes: primes.to_vec(),
        exact_blocks_checked: checked,
        basis,
    })
}

/// Exact check that a Plücker point satisfies a quadric given modulo `p`.
pub fn vanishes_mod(q: &ModQuadric, x: &[u64], p: u64) -> bool {
    let mut acc = 0u64;
    for ((a, b), c) in q {
        let t = crate::algebra::modular::mul_mod(*c, crate::algebra::modular::mul_mod(x[*a], x[*b], p), p);
        acc = (acc + t) % p;
    }
    acc == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::modular::DEFAULT_PRIMES;

    #[test]
    fn small_grassmannians() {
        assert_eq!(plucker_quadric_space(2, 4, 0, &DEFAULT_PRIMES).unwrap().dimension, 1);
        assert_eq!(plucker_quadric_space(1, 5, 0, &DEFAULT_PRIMES).unwrap().dimension, 0);
        // Gr(2,5): the five 4×4 Pfaffians
        assert_eq!(plucker_quadric_space(2, 5, 0, &DEFAULT_PRIMES).unwrap().dimension, 5);
    }
}
