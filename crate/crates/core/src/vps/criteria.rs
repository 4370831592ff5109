//! Membership in VPS(Q, H) and the criteria separating limits of
//! saturated ideals on the boundary.

use serde::Serialize;

use crate::algebra::form::{Form, Ring};
use crate::algebra::linalg::Subspace;
use crate::algebra::scalar;
use crate::apolarity::quadric::apolar_piece;
use crate::apolarity::{apply_diff, line_in_inverse_quadric, LinearSubspace, Quadric};
use crate::error::{Error, Result};
use crate::grobner::syzygy::linear_syzygies;
use crate::grobner::{intersect_ideals, is_saturated, saturate, GradedIdeal, HilbFn};

#[derive(Clone, Debug, Serialize)]
pub struct VpsVerdict {
    pub in_vps: bool,
    pub saturated: bool,
    pub sbl_necessary: Option<bool>,
    pub kri: Option<bool>,
    /// Basis of the line `L ⊂ T_1`, as linear forms.
    pub line: Option<Vec<String>>,
    pub hilbert: Vec<usize>,
    pub details: String,
}

/// The line in `V((I^sat)_2)` together with its ideal.
#[derive(Clone, Debug)]
pub struct LineData {
    pub line: LinearSubspace,
    pub ideal: GradedIdeal,
}

fn linear_ideal(ring: Ring, n: usize, forms: Vec<Form>) -> GradedIdeal {
    GradedIdeal::new(ring, n, forms).unwrap()
}

/// Restrict a form to the linear subspace cut out by `eqs` (an echelon
/// basis of linear forms): each pivot variable is solved for.
fn restrict(f: &Form, eqs: &Subspace) -> Form {
    let n = f.nvars();
    let mut sub: Vec<Vec<scalar::Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { scalar::one() } else { scalar::zero() }).collect())
        .collect();
    for row in eqs.basis() {
        let p = row[0].0;
        let mut r = vec![scalar::zero(); n];
        for (j, c) in row.iter().skip(1) {
            r[*j] = -c.clone();
        }
        sub[p] = r;
    }
    f.linear_substitute(&sub)
}

/// Find the line `L` with `V((I^sat)_2) = L` or `L` plus a point.
pub fn detect_line(ideal: &GradedIdeal) -> Result<LineData> {
    let n = ideal.nvars();
    let sat = saturate(ideal);
    let j = saturate(&sat.truncation(2));
    let j1 = j.piece(1);
    let lin_forms = |s: &Subspace| s.basis().iter().map(|r| Form::from_sparse(Ring::S, n, 1, r)).collect::<Vec<_>>();
    let eqs: Vec<Form> = if j1.dim() + 2 == n {
        lin_forms(&j1)
    } else if j1.dim() + 3 == n {
        // a plane containing the line and one more (possibly embedded) point:
        // the two conics are ℓ·a1, ℓ·a2 and (a2, −a1) is their syzygy
        let conics: Vec<Form> = j.piece_forms(2).iter().map(|c| restrict(c, &j1)).collect();
        let span = Subspace::span(
            crate::algebra::mono::dim_graded(n, 2),
            &conics.iter().map(Form::to_sparse).collect::<Vec<_>>(),
        );
        if span.dim() != 2 {
            return Err(Error::domain(format!("expected two conics in the plane, found {}", span.dim())));
        }
        let c: Vec<Form> = span.basis().iter().map(|r| Form::from_sparse(Ring::S, n, 2, r)).collect();
        let syz = linear_syzygies(&c)?;
        let a1 = syz
            .iter()
            .map(|s| s[1].neg())
            .find(|a| !a.is_zero() && !j1.contains(&a.to_sparse()))
            .ok_or_else(|| Error::domain("the conics share no linear factor"))?;
        let ell = c[0]
            .divide_exact(&a1)
            .ok_or_else(|| Error::domain("line factor not found"))?;
        let mut f = lin_forms(&j1);
        f.push(ell);
        f
    } else {
        return Err(Error::domain(format!(
            "V(I_2) is not a line (plus a point): dim of linear forms {}",
            j1.dim()
        )));
    };
    let ideal_l = linear_ideal(Ring::S, n, eqs.clone());
    let eq_space = LinearSubspace::span(Ring::S, n, &eqs);
    if eq_space.dim() + 2 != n {
        return Err(Error::domain("line equations have the wrong rank"));
    }
    Ok(LineData { line: eq_space.perp(), ideal: ideal_l })
}

/// `N = (I^sat)_1^⊥ ⊂ T_1`, the span of `V(I^sat)`.
pub fn saturation_span(ideal: &GradedIdeal) -> LinearSubspace {
    let sat = saturate(ideal);
    LinearSubspace::new(Ring::S, (*sat.piece(1)).clone()).perp()
}

/// Does `H_{S/I^sat}` equal `(1, n−2, n−1, n, n, …)`?
pub fn has_line_plus_point_hilbert(ideal: &GradedIdeal) -> bool {
    let n = ideal.nvars();
    let sat = saturate(ideal);
    let h = sat.hilbert_function(sat.determinacy_bound().max(4));
    h.matches_eventually_constant(&[1, n - 2, n - 1, n])
}

/// `I^sat · I_L ⊆ I`, checked on products of generators.
pub fn sbl_necessary(ideal: &GradedIdeal) -> Result<bool> {
    let line = detect_line(ideal)?;
    let sat = saturate(ideal);
    for a in sat.generators() {
        for b in line.ideal.generators() {
            if !ideal.contains(&a.mul(b).unwrap()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `q^{-1}(L·N) = 0`.
pub fn kri_check(ideal: &GradedIdeal, q: &Quadric) -> Result<bool> {
    let line = detect_line(ideal)?;
    let nsp = saturation_span(ideal);
    kri_for(&line.line, &nsp, q)
}

pub fn kri_for(l: &LinearSubspace, nsp: &LinearSubspace, q: &Quadric) -> Result<bool> {
    let qi = q.inverse()?;
    for a in l.forms() {
        for b in nsp.forms() {
            if !apply_diff(qi.form(), &a.mul(&b).unwrap())?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `I_2 ⊆ (q^⊥)_2` (and hence `I ⊆ q^⊥` when `I_1 = 0`).
pub fn is_apolar(ideal: &GradedIdeal, q: &Quadric) -> bool {
    if ideal.dim(1) != 0 && q.is_full_rank() {
        return false;
    }
    let perp = apolar_piece(q.form(), 2);
    perp.contains_space(&ideal.piece(2))
}

pub fn check_vps(ideal: &GradedIdeal, q: &Quadric) -> Result<VpsVerdict> {
    let n = ideal.nvars();
    if q.nvars() != n || q.ring() != Ring::T {
        return Err(Error::domain("quadric must be in T with the same number of variables"));
    }
    let bound = ideal.determinacy_bound();
    let h: HilbFn = ideal.hilbert_function(bound);
    let hf_ok = h.is_one_n_n(n);
    let apolar = is_apolar(ideal, q);
    let in_vps = hf_ok && apolar;
    let saturated = is_saturated(ideal);
    let mut v = VpsVerdict {
        in_vps,
        saturated,
        sbl_necessary: None,
        kri: None,
        line: None,
        hilbert: h.values().to_vec(),
        details: String::new(),
    };
    if !hf_ok {
        v.details = format!("Hilbert function {h} is not (1,{n},{n},…)");
        return Ok(v);
    }
    if !apolar {
        v.details = "I_2 is not contained in q^⊥".into();
        return Ok(v);
    }
    if saturated {
        v.details = "saturated apolar ideal".into();
        return Ok(v);
    }
    match detect_line(ideal) {
        Ok(line) => {
            v.line = Some(line.line.forms().iter().map(|f| f.to_string()).collect());
            let nsp = saturation_span(ideal);
            v.kri = Some(kri_for(&line.line, &nsp, q)?);
            if has_line_plus_point_hilbert(ideal) {
                v.sbl_necessary = Some(sbl_necessary(ideal)?);
                v.details = "unsaturated; line detected".into();
            } else {
                v.details = "unsaturated; line detected, but H(S/I^sat) is not (1,n-2,n-1,n,…) so the product criterion does not apply".into();
            }
        }
        Err(e) => v.details = format!("unsaturated; {e}"),
    }
    Ok(v)
}

/// `I_Γ ∩ q^⊥` for a length-4 scheme on a line in `P^3`.
#[derive(Clone, Debug)]
pub struct UnsatLimit {
    pub ideal: GradedIdeal,
    pub line: LinearSubspace,
    /// `L ⊂ Q^{-1}`; when false the ideal cannot be a limit of saturated
    /// apolar ideals.
    pub line_in_inverse_quadric: bool,
}

pub fn build_unsat_limit(gamma: &GradedIdeal, q: &Quadric) -> Result<UnsatLimit> {
    let n = gamma.nvars();
    if n != 4 {
        return Err(Error::domain("the unsaturated-limit constructor is for n = 4"));
    }
    let h = gamma.hilbert_function(gamma.determinacy_bound());
    if !h.matches_eventually_constant(&[1, 2, 3, 4]) {
        return Err(Error::domain(format!("Γ must have Hilbert function (1,2,3,4,4,…), found {h}")));
    }
    let line = LinearSubspace::new(Ring::S, (*gamma.piece(1)).clone()).perp();
    let on_quadric = line_in_inverse_quadric(&line.space, q)?;
    let top = gamma.max_gen_degree().max(3);
    let ideal = intersect_ideals(gamma, &q.apolar_ideal(), top);
    Ok(UnsatLimit { ideal, line, line_in_inverse_quadric: on_quadric })
}
