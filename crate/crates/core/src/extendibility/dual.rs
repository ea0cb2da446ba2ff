//! One-dimensional dual problems on `K_n`.
//!
//! On the complete graph every edge Hamiltonian built from `I`, `F`, `W`
//! is a combination of `J_S` and `J_B`, so `λ_max` of the dual Hamiltonian
//! is the maximum of affine functions of the dual variable, one per irrep
//! pair `(λ, μ)`.

use crate::budget;
use crate::diagram::pair_operators;
use crate::extendibility::envelope::{envelope_at, minimize_max, AffineFn, EnvelopeMin};
use crate::extendibility::omega::family_pairs;
use crate::extendibility::{check_nd, complete_edges};
use crate::graphs::{edge_sum, Graph};
use crate::operator::{to_f64, SiteOperator};
use crate::spectral::AffinePencil;
use crate::{int, ratio, Error, Rational, Result};

/// `x̃ = 1/(|E|(1 − d))`, the feasible dual point used for the upper bound.
pub fn x_tilde(n: usize, d: usize) -> Rational {
    ratio(1, complete_edges(n) * (1 - d as i128))
}

/// `f_{μ,λ}(x) = (d·cont(μ)/|E| − 1)/(d − 1)
///             + x·(cont(λ) + d·cont(μ) − r(d − 1) − |E|)`.
pub fn isotropic_affine_family(n: usize, d: usize) -> Result<Vec<AffineFn>> {
    check_nd(n, d)?;
    let e = complete_edges(n);
    let di = d as i128;
    Ok(family_pairs(n, d)
        .into_iter()
        .map(|(lambda, mu)| {
            let r = (n - lambda.size()) / 2;
            let cmu = mu.content() as i128;
            let clam = lambda.content() as i128;
            AffineFn {
                offset: ratio(di * cmu - e, e * (di - 1)),
                slope: int(clam + di * cmu - r as i128 * (di - 1) - e),
                lambda,
                mu,
                r,
            }
        })
        .collect())
}

/// Exact minimizer of the isotropic dual.
pub fn isotropic_dual_solution(n: usize, d: usize) -> Result<(Vec<AffineFn>, EnvelopeMin)> {
    let family = isotropic_affine_family(n, d)?;
    let m = minimize_max(&family)?;
    Ok((family, m))
}

/// `p′_I(n, d)` from the dual minimax.
pub fn isotropic_dual_minimax(n: usize, d: usize) -> Result<Rational> {
    Ok(isotropic_dual_solution(n, d)?.1.value)
}

/// `h_{λ,μ}(x) = (cont(μ) − cont(λ) + (n − |λ|)(d − 1)/2)/(d|E|)
///             + (x/d)(1 − cont(μ)/|E|)`.
pub fn q0_affine_family(n: usize, d: usize) -> Result<Vec<AffineFn>> {
    check_nd(n, d)?;
    let e = complete_edges(n);
    let di = d as i128;
    Ok(family_pairs(n, d)
        .into_iter()
        .map(|(lambda, mu)| {
            let r = (n - lambda.size()) / 2;
            let cmu = mu.content() as i128;
            let clam = lambda.content() as i128;
            let spectral = int(cmu - clam) + ratio(((n - lambda.size()) * (d - 1)) as i128, 2);
            AffineFn {
                offset: spectral / int(di * e),
                slope: ratio(e - cmu, di * e),
                lambda,
                mu,
                r,
            }
        })
        .collect())
}

/// `p*(n, d)`: the optimum of the Brauer problem restricted to `q = 0`.
///
/// Every slope is nonnegative and only `μ = (n)` gives zero slope, so the
/// minimum is reached on a ray towards `−∞`.
pub fn q0_dual_value(n: usize, d: usize) -> Result<Rational> {
    Ok(minimize_max(&q0_affine_family(n, d)?)?.value)
}

/// Exact `A`, `B` with `H(x) = A + x·B` the isotropic dual Hamiltonian
/// `Σ_e ((x̃ − x)(I_e − d F_e) + x (F_e − W_e))` on `K_n`.
pub fn iso_hamiltonian_parts(n: usize, d: usize) -> Result<(SiteOperator, SiteOperator)> {
    check_nd(n, d)?;
    budget::check(n, d)?;
    let (w, i, f) = pair_operators(d)?;
    let g = Graph::complete(n)?;
    let di = int(d as i128);
    let base = &i - &f.scaled(di);
    let a = edge_sum(&g, &base)?.scaled(x_tilde(n, d));
    // −(I − dF) + (F − W) = (d + 1)F − W − I
    let slope_op = &(&f.scaled(di + int(1)) - &w) - &i;
    let b = edge_sum(&g, &slope_op)?;
    Ok((a, b))
}

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`,
/// stopping once the bracket is narrower than `width`.
pub fn golden_section_min<F>(mut f: F, mut lo: f64, mut hi: f64, width: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    while hi - lo > width {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
            if f1 < best.1 {
                best = (x1, f1);
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
            if f2 < best.1 {
                best = (x2, f2);
            }
        }
    }
    Ok(best)
}

/// Bracket refinement width for [`iso_dual_numeric`].
pub const GOLDEN_WIDTH: f64 = 1e-12;

/// `min_x λ_max(H(x))` by golden-section search on `[−1, 1]`.
pub fn iso_dual_numeric(n: usize, d: usize) -> Result<f64> {
    let (a, b) = iso_hamiltonian_parts(n, d)?;
    let pencil = AffinePencil::new(&a, &b)?;
    let (_, value) = golden_section_min(|x| pencil.lambda_max(x), -1.0, 1.0, GOLDEN_WIDTH)?;
    Ok(value)
}

/// One sample of the dual objective.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanPoint {
    pub x: Rational,
    /// `max_{(λ,μ)} f_{μ,λ}(x)`, exact.
    pub envelope: Rational,
    /// `λ_max(H(x))`, when the operator fits in the budget.
    pub numeric: Option<f64>,
}

/// Samples the isotropic dual objective at `samples` evenly spaced points
/// of `[lo, hi]`.
pub fn dual_scan(n: usize, d: usize, lo: Rational, hi: Rational, samples: usize) -> Result<Vec<ScanPoint>> {
    if samples < 2 || lo >= hi {
        return Err(Error::InvalidParameters("dual scan needs lo < hi and at least two samples".into()));
    }
    let family = isotropic_affine_family(n, d)?;
    let pencil = if budget::fits(n, d) {
        let (a, b) = iso_hamiltonian_parts(n, d)?;
        Some(AffinePencil::new(&a, &b)?)
    } else {
        None
    };
    (0..samples)
        .map(|k| {
            let x = lo + (hi - lo) * ratio(k as i128, (samples - 1) as i128);
            let envelope = envelope_at(&family, x).expect("family is nonempty");
            let numeric = pencil.as_ref().map(|p| p.lambda_max(to_f64(x))).transpose()?;
            Ok(ScanPoint { x, envelope, numeric })
        })
        .collect()
}
