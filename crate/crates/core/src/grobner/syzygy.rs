//! First syzygies of homogeneous forms, as exact kernels.

use crate::algebra::form::Form;
use crate::algebra::linalg::{left_kernel, SVec};
use crate::algebra::mono::{dim_graded, mono_basis};
use crate::error::{Error, Result};

/// A syzygy `(a_1, …, a_k)` with `Σ a_i g_i = 0`.
pub type Syzygy = Vec<Form>;

/// Syzygies of total degree `d`: `deg a_i = d − deg g_i`.
pub fn syzygies_in_degree(gens: &[Form], d: u32) -> Vec<Syzygy> {
    let Some(first) = gens.first() else { return Vec::new() };
    let (ring, n) = (first.ring(), first.nvars());
    // one row per (generator, monomial multiplier)
    let mut labels: Vec<(usize, u32, usize)> = Vec::new();
    let mut rows: Vec<SVec> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if g.degree() > d {
            continue;
        }
        let e = d - g.degree();
        for (mi, m) in mono_basis(n, e).monos().iter().enumerate() {
            labels.push((k, e, mi));
            rows.push(g.mul_mono(m).to_sparse());
        }
    }
    left_kernel(&rows, dim_graded(n, d))
        .into_iter()
        .map(|v| {
            let mut tuple: Vec<Form> = gens
                .iter()
                .map(|g| Form::zero(ring, n, d.saturating_sub(g.degree())))
                .collect();
            for (idx, c) in v {
                let (k, e, mi) = labels[idx];
                let m = Form::monomial(ring, c, mono_basis(n, e).get(mi).clone());
                tuple[k] = tuple[k].add(&m).expect("same degree");
            }
            tuple
        })
        .collect()
}

/// Linear syzygies among quadrics: kernel of `S_1 ⊗ span(gens) → S_3`.
pub fn linear_syzygies(gens: &[Form]) -> Result<Vec<Syzygy>> {
    if gens.iter().any(|g| g.degree() != 2) {
        return Err(Error::domain("linear_syzygies expects quadrics"));
    }
    Ok(syzygies_in_degree(gens, 3))
}

/// Syzygy bases for every total degree up to `d_max`.
pub fn module_syzygies(gens: &[Form], d_max: u32) -> Vec<(u32, Vec<Syzygy>)> {
    (0..=d_max).map(|d| (d, syzygies_in_degree(gens, d))).collect()
}

/// Check `Σ a_i g_i = 0`.
pub fn is_syzygy(gens: &[Form], syz: &[Form]) -> bool {
    let Some(first) = gens.first() else { return true };
    let d = syz.iter().zip(gens).map(|(a, g)| a.degree() + g.degree()).max().unwrap_or(0);
    let mut acc = Form::zero(first.ring(), first.nvars(), d);
    for (a, g) in syz.iter().zip(gens) {
        if a.is_zero() {
            continue;
        }
        acc = acc.add(&a.mul(g).unwrap()).unwrap();
    }
    acc.is_zero()
}
