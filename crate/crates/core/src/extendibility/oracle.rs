//! Numerical values from Hamiltonian spectra, independent of the closed forms.

use std::cell::RefCell;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget;
use crate::diagram::projectors;
use crate::graphs::{edge_average_hamiltonian, embed_pair_operator, Graph};
use crate::operator::PairOperator;
use crate::spectral::{jacobi, lanczos_max, sparse_lambda_max, FloatCsr, DENSE_LIMIT};
use crate::{int, ratio, Error, Rational, Result};

/// Which edge projector is used: `Π_(1,1)` (Werner) or `Π_∅ = W/d` (Brauer).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Which {
    Werner,
    Brauer,
}

impl Which {
    pub fn projector(&self, d: usize) -> Result<PairOperator> {
        let (empty, anti, _) = projectors(d)?;
        Ok(match self {
            Which::Werner => anti,
            Which::Brauer => empty,
        })
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Werner => "werner",
            Which::Brauer => "brauer",
        })
    }
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "werner" | "w" => Ok(Which::Werner),
            "brauer" | "b" => Ok(Which::Brauer),
            other => Err(Error::Parse(format!("unknown projector family `{other}`"))),
        }
    }
}

/// `λ_max((1/|E|) Σ_e Π_e)`, the optimal value on an edge-transitive graph.
pub fn p_avg_numeric(g: &Graph, which: Which, d: usize) -> Result<f64> {
    budget::check(g.vertex_count(), d)?;
    let h = edge_average_hamiltonian(g, &which.projector(d)?)?;
    sparse_lambda_max(h.matrix())
}

/// Werner value on the even cycle `C_n` at `d = 2`.
pub fn cycle_werner_value(n: usize) -> Result<f64> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!("cycle length must be even and at least 4, got {n}")));
    }
    p_avg_numeric(&Graph::cycle(n)?, Which::Werner, 2)
}

/// Largest grid for [`conjecture_probe`].
pub const PROBE_MAX_EDGES: usize = 5;
pub const PROBE_BUDGET: u128 = 1024;

/// Outcome of comparing the signed-weight and nonnegative-weight minima of
/// `λ_max(Σ_e x_e Π_e)` subject to `Σ_e x_e = 1` on a grid.
#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub graph: String,
    pub which: Which,
    pub d: usize,
    pub resolution: usize,
    pub evaluations: usize,
    pub signed_min: f64,
    pub signed_argmin: Vec<String>,
    pub simplex_min: f64,
    pub simplex_argmin: Vec<String>,
    /// `simplex_min − signed_min`, nonnegative since the simplex grid is a
    /// subset of the signed grid.
    pub gap: f64,
    /// `max(|E| − 1, 1)/resolution`: every point of the hyperplane is within
    /// this `ℓ¹` distance of the grid, and `λ_max` is 1-Lipschitz in `ℓ¹`
    /// because every `Π_e` has norm one.
    pub tolerance: f64,
    pub within_tolerance: bool,
}

impl fmt::Display for ProbeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} ({}, d = {}), grid step 1/{}", self.graph, self.which, self.d, self.resolution)?;
        writeln!(f, "  signed minimum   {:.12} at [{}]", self.signed_min, self.signed_argmin.join(", "))?;
        writeln!(f, "  simplex minimum  {:.12} at [{}]", self.simplex_min, self.simplex_argmin.join(", "))?;
        write!(
            f,
            "  gap {:.3e} vs grid tolerance {:.3e}: {} (numerical observation only)",
            self.gap,
            self.tolerance,
            if self.within_tolerance { "consistent" } else { "NOT consistent" }
        )
    }
}

/// Grid search over `x_e ∈ [−1, 2]` in steps of `1/resolution` for all but
/// the last edge, whose weight is fixed by `Σ_e x_e = 1`.
pub fn conjecture_probe(g: &Graph, which: Which, d: usize, resolution: usize) -> Result<ProbeReport> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if budget::hilbert_dim(n, d) > PROBE_BUDGET.min(budget::current()) {
        return Err(Error::BudgetExceeded {
            dimension: budget::hilbert_dim(n, d),
            budget: PROBE_BUDGET.min(budget::current()),
        });
    }
    if m == 0 || m > PROBE_MAX_EDGES {
        return Err(Error::InvalidGraph(format!("probe needs 1 to {PROBE_MAX_EDGES} edges, got {m}")));
    }
    if resolution == 0 {
        return Err(Error::InvalidParameters("resolution must be positive".into()));
    }
    let pi = which.projector(d)?;
    let terms: Vec<FloatCsr> = g
        .edges()
        .iter()
        .map(|&e| embed_pair_operator(&pi, e, n).map(|op| FloatCsr::from_operator(&op)))
        .collect::<Result<_>>()?;

    let steps = 3 * resolution + 1;
    let free = m - 1;
    let total = steps.pow(free as u32);
    let point = |mut idx: usize| -> Vec<Rational> {
        let mut xs = Vec::with_capacity(m);
        let mut sum = int(0);
        for _ in 0..free {
            let x = ratio((idx % steps) as i128, resolution as i128) - int(1);
            idx /= steps;
            sum += x;
            xs.push(x);
        }
        xs.push(int(1) - sum);
        xs
    };
    let evaluated: Vec<(usize, f64)> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let xs: Vec<f64> = point(idx).into_iter().map(crate::operator::to_f64).collect();
            weighted_lambda_max(&terms, &xs).map(|v| (idx, v))
        })
        .collect::<Result<_>>()?;

    let zero = int(0);
    let better = |best: Option<(usize, f64)>, cand: (usize, f64)| match best {
        Some(b) if b.1 <= cand.1 => Some(b),
        _ => Some(cand),
    };
    let mut signed: Option<(usize, f64)> = None;
    let mut simplex: Option<(usize, f64)> = None;
    for &(idx, v) in &evaluated {
        signed = better(signed, (idx, v));
        if point(idx).iter().all(|x| *x >= zero) {
            simplex = better(simplex, (idx, v));
        }
    }
    let (signed_idx, signed_min) = signed.expect("grid is nonempty");
    let (simplex_idx, simplex_min) = simplex.expect("uniform weights lie on the grid");
    let fmt_point = |idx| point(idx).iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let gap = simplex_min - signed_min;
    let tolerance = free.max(1) as f64 / resolution as f64;
    Ok(ProbeReport {
        graph: g.to_string(),
        which,
        d,
        resolution,
        evaluations: total,
        signed_min,
        signed_argmin: fmt_point(signed_idx),
        simplex_min,
        simplex_argmin: fmt_point(simplex_idx),
        gap,
        tolerance,
        within_tolerance: gap < tolerance,
    })
}

fn weighted_lambda_max(terms: &[FloatCsr], xs: &[f64]) -> Result<f64> {
    let dim = terms[0].dim();
    let scratch = RefCell::new(vec![0.0; dim]);
    let matvec = |v: &[f64], out: &mut [f64]| {
        let mut scratch = scratch.borrow_mut();
        out.iter_mut().for_each(|o| *o = 0.0);
        for (t, &x) in terms.iter().zip(xs) {
            t.matvec(v, &mut scratch);
            for (o, s) in out.iter_mut().zip(scratch.iter()) {
                *o += x * s;
            }
        }
    };
    if dim <= DENSE_LIMIT {
        let mut dense = vec![0.0; dim * dim];
        let mut e = vec![0.0; dim];
        let mut col = vec![0.0; dim];
        for j in 0..dim {
            e.iter_mut().for_each(|v| *v = 0.0);
            e[j] = 1.0;
            matvec(&e, &mut col);
            for i in 0..dim {
                dense[i * dim + j] = col[i];
            }
        }
        jacobi(&mut dense, dim, None)?;
        return Ok((0..dim).map(|i| dense[i * dim + i]).fold(f64::NEG_INFINITY, f64::max));
    }
    let norm: f64 = xs.iter().map(|x| x.abs()).sum();
    Ok(lanczos_max(dim, matvec, norm.max(1e-300))?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extendibility::closed_form::{p_b_complete, p_iso_bipartite, p_w_complete};
    use crate::operator::to_f64;

    #[test]
    fn complete_graph_values() {
        for (n, d) in [(2, 2), (3, 2), (4, 2), (5, 2), (3, 3), (4, 3)] {
            let g = Graph::complete(n).unwrap();
            let w = p_avg_numeric(&g, Which::Werner, d).unwrap();
            let b = p_avg_numeric(&g, Which::Brauer, d).unwrap();
            assert!((w - to_f64(p_w_complete(n, d))).abs() < 1e-9, "W n={n} d={d}: {w}");
            assert!((b - to_f64(p_b_complete(n, d))).abs() < 1e-9, "B n={n} d={d}: {b}");
        }
    }

    #[test]
    fn bipartite_brauer_value() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        let v = p_avg_numeric(&g, Which::Brauer, 2).unwrap();
        assert!((v - to_f64(p_iso_bipartite(2, 3, 2))).abs() < 1e-9);
    }

    #[test]
    fn four_cycle() {
        assert!((cycle_werner_value(4).unwrap() - 0.75).abs() < 1e-9);
        assert!(cycle_werner_value(5).is_err());
        assert!(cycle_werner_value(2).is_err());
    }

    #[test]
    fn probe_on_small_graphs() {
        let k2 = Graph::complete(2).unwrap();
        let r = conjecture_probe(&k2, Which::Werner, 2, 4).unwrap();
        assert!((r.signed_min - 1.0).abs() < 1e-12 && (r.simplex_min - 1.0).abs() < 1e-12);
        let k3 = Graph::complete(3).unwrap();
        let r = conjecture_probe(&k3, Which::Werner, 2, 6).unwrap();
        assert!((r.simplex_min - 0.5).abs() < 1e-9, "{r}");
        assert!(r.gap >= 0.0 && r.within_tolerance, "{r}");
    }
}
