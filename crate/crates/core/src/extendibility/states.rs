//! Explicit global states on `(C^d)^{⊗n}`: the perfect-matching lower-bound
//! state, the optimal Werner state, and partial traces onto edges.

use num_traits::{One, Zero};

use crate::budget;
use crate::diagram::{projectors, young_symmetrizer, BrauerDiagram};
use crate::extendibility::check_nd;
use crate::graphs::{double_factorial_odd, perfect_matchings_on, Graph};
use crate::operator::{index_to_digits, SiteOperator, SparseMatrix};
use crate::partitions::optimal_rectangular_partition;
use crate::{int, ratio, Error, Rational, Result};

/// Uniform mixture of products of `W/d` over the perfect matchings of
/// `K_n`. For odd `n` each vertex in turn is left out and carries `I/d`.
///
/// Every edge marginal is isotropic with `p′ = 1/(n − 1)` (even `n`) or
/// `p′ = 1/n` (odd `n`).
pub fn matching_lower_bound_state(n: usize, d: usize) -> Result<SiteOperator> {
    check_nd(n, d)?;
    budget::check(n, d)?;
    let g = Graph::complete(n)?;
    let removals: Vec<Option<usize>> = if n.is_multiple_of(2) { vec![None] } else { (0..n).map(Some).collect() };
    let mut acc = SiteOperator::zeros(n, d);
    let mut count: i128 = 0;
    for removed in removals {
        let mut mask = vec![false; n];
        if let Some(v) = removed {
            mask[v] = true;
        }
        for m in perfect_matchings_on(&g, &mask) {
            acc.add_scaled(&BrauerDiagram::bars(n, m.edges())?.matrix_rep(d)?, Rational::one())?;
            count += 1;
        }
    }
    let expected = if n.is_multiple_of(2) {
        double_factorial_odd(n / 2)
    } else {
        n as u128 * double_factorial_odd((n - 1) / 2)
    };
    debug_assert_eq!(count as u128, expected);
    // each term has trace d^{⌈n/2⌉}
    let norm = int(count) * int((d as i128).pow(n.div_ceil(2) as u32));
    Ok(acc.scaled(norm.recip()))
}

/// `Tr_{V∖{u,v}} ρ`, ordered as `(u, v)`.
pub fn reduced_state(rho: &SiteOperator, edge: (usize, usize), n: usize, d: usize) -> Result<SiteOperator> {
    let (u, v) = edge;
    if u >= n || v >= n || u == v {
        return Err(Error::EdgeOutOfRange(u, v, n));
    }
    if rho.sites() != n || rho.local_dim() != d {
        return Err(Error::SizeMismatch(format!(
            "operator on {} sites of dimension {}, expected {n} sites of dimension {d}",
            rho.sites(),
            rho.local_dim()
        )));
    }
    let mut out = SparseMatrix::zeros(d * d);
    for (r, c, value) in rho.matrix().entries() {
        let (x, y) = (index_to_digits(r, n, d), index_to_digits(c, n, d));
        let traced_equal = (0..n).filter(|&k| k != u && k != v).all(|k| x[k] == y[k]);
        if traced_equal {
            out.add_to(x[u] * d + x[v], y[u] * d + y[v], value);
        }
    }
    SiteOperator::new(2, d, out)
}

/// The optimal Werner state `ε_{λ*}/Tr ε_{λ*}` for the most rectangular
/// `λ* ⊢ n` with at most `d` rows, and `Tr[Π_(1,1) ρ_e]` on the edge
/// `(0, 1)`. By symmetry every edge gives the same value.
pub fn werner_primal_certificate(n: usize, d: usize) -> Result<(SiteOperator, Rational)> {
    check_nd(n, d)?;
    budget::check(n, d)?;
    let lambda = optimal_rectangular_partition(n, d);
    let eps = young_symmetrizer(&lambda, n, d)?;
    let tr = eps.trace();
    if tr.is_zero() {
        return Err(Error::InvalidParameters(format!("{lambda} has vanishing trace at d = {d}")));
    }
    let rho = eps.scaled(tr.recip());
    let marginal = reduced_state(&rho, (0, 1), n, d)?;
    let (_, anti, _) = projectors(d)?;
    let achieved = marginal.trace_product(&anti)?;
    Ok((rho, achieved))
}

/// `p′·W/d + (1 − p′)·I/d²`.
pub fn isotropic_prime_state(p_prime: Rational, d: usize) -> Result<SiteOperator> {
    let (w, i, _) = crate::diagram::pair_operators(d)?;
    let di = d as i128;
    Ok(&w.scaled(p_prime / int(di)) + &i.scaled((int(1) - p_prime) / int(di * di)))
}

/// `1/(n + n mod 2 − 1)`, the marginal parameter of the matching state.
pub fn matching_marginal_parameter(n: usize) -> Rational {
    ratio(1, (n + n % 2 - 1) as i128)
}
