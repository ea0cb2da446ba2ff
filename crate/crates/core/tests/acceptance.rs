//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p monogamy --test acceptance`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monogamy::diagram::{jm_sum_brauer, jm_sum_sym, pair_operators, BrauerDiagram};
use monogamy::extendibility::dual::{isotropic_dual_solution, iso_dual_numeric, q0_dual_value};
use monogamy::extendibility::oracle::{conjecture_probe, cycle_werner_value, p_avg_numeric, Which};
use monogamy::extendibility::states::{matching_lower_bound_state, reduced_state, werner_primal_certificate};
use monogamy::extendibility::{
    brauer_is_separable, is_positive_brauer_prime, p_b_complete, p_iso, p_iso_prime, p_w_complete, BrauerParams,
    LN_2,
};
use monogamy::graphs::{perfect_matchings, Graph};
use monogamy::operator::{to_f64, SiteOperator};
use monogamy::partitions::{enumerate_brauer_irreps, enumerate_sym_irreps, Partition};
use monogamy::spectral::sym_eigen;
use monogamy::{budget, int, ratio, Rational};

type Outcome = Result<String, String>;

fn golden(name: &str) -> Vec<Vec<Rational>> {
    let path = format!("{}/tests/data/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .skip(1)
        .map(|l| {
            l.split_whitespace()
                .skip(1)
                .map(|c| match c.split_once('/') {
                    Some((a, b)) => ratio(a.parse().unwrap(), b.parse().unwrap()),
                    None => int(c.parse().unwrap()),
                })
                .collect()
        })
        .collect()
}

/// `(n, d)` with `n, d ≥ 2` and `d^n ≤ 4096`.
fn budget_cells(max_n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for d in 2..=64usize {
        for n in 2..=max_n {
            if budget::hilbert_dim(n, d) > 4096 {
                break;
            }
            cells.push((n, d));
        }
    }
    cells
}

type ClosedForm = fn(usize, usize) -> Rational;
type Criterion = fn() -> Outcome;

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let families: [(&str, ClosedForm); 4] = [
        ("p_w", p_w_complete),
        ("p_b", p_b_complete),
        ("p_iso_prime", p_iso_prime),
        ("p_iso", p_iso),
    ];
    let mut bad = Vec::new();
    for (name, f) in families {
        let grid = golden(name);
        for d in 2..=9 {
            for n in 2..=9 {
                if f(n, d) != grid[d - 2][n - 2] {
                    bad.push(format!("{name}({n},{d}) = {} vs {}", f(n, d), grid[d - 2][n - 2]));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if !bad.is_empty() {
        return Err(bad.join("; "));
    }
    if elapsed > Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok("4 × 64 cells exact, incl. p_W(7,3)=11/21, p_B(3,3)=5/9, p'_I(3,3)=7/19, p_I(3,3)=25/57".into())
}

fn oracle_equivalence() -> Outcome {
    let cells = budget_cells(usize::MAX);
    for needed in [(12, 2), (7, 3), (6, 4)] {
        if !cells.contains(&needed) {
            return Err(format!("cell {needed:?} missing"));
        }
    }
    let mut worst = 0f64;
    for &(n, d) in &cells {
        let g = Graph::complete(n).unwrap();
        let w = p_avg_numeric(&g, Which::Werner, d).map_err(|e| e.to_string())?;
        let b = p_avg_numeric(&g, Which::Brauer, d).map_err(|e| e.to_string())?;
        let ew = (w - to_f64(p_w_complete(n, d))).abs();
        let eb = (b - to_f64(p_b_complete(n, d))).abs();
        worst = worst.max(ew).max(eb);
        if ew > 1e-9 || eb > 1e-9 {
            return Err(format!("(n={n}, d={d}): werner {w} error {ew:e}, brauer {b} error {eb:e}"));
        }
    }
    Ok(format!("{} cells with d^n ≤ 4096, worst error {worst:.1e}", cells.len()))
}

fn diagram_soundness() -> Outcome {
    let all = BrauerDiagram::all(3);
    if all.len() != 15 {
        return Err(format!("Br_3 has {} diagrams", all.len()));
    }
    let mut checked = 0;
    for d in [2usize, 3] {
        for a in &all {
            for b in &all {
                let (c, loops) = BrauerDiagram::compose(a, b).map_err(|e| e.to_string())?;
                let lhs = &a.matrix_rep(d).unwrap() * &b.matrix_rep(d).unwrap();
                let rhs = c.matrix_rep(d).unwrap().scaled(int((d as i128).pow(loops as u32)));
                if lhs != rhs {
                    return Err(format!("d={d}: {a} · {b}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} products exact (225 ordered pairs × d ∈ {{2,3}})"))
}

/// Paths in the Bratteli diagram of the Brauer algebras that stay inside
/// the labels with `λ′_1 + λ′_2 ≤ d`, counted step by step.
fn bratteli_counts(n: usize, d: usize) -> BTreeMap<Partition, u128> {
    let allowed = |p: &Partition| {
        let c = p.conjugate();
        c.part(0) + c.part(1) <= d
    };
    let mut level: BTreeMap<Partition, u128> = BTreeMap::from([(Partition::empty(), 1)]);
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (p, &count) in &level {
            let mut neighbours = Vec::new();
            for i in 0..=p.rows() {
                let mut parts = p.parts().to_vec();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                if let Ok(q) = Partition::new(parts) {
                    neighbours.push(q);
                }
            }
            for i in 0..p.rows() {
                let mut parts = p.parts().to_vec();
                parts[i] -= 1;
                if let Ok(q) = Partition::new(parts) {
                    neighbours.push(q);
                }
            }
            for q in neighbours.into_iter().filter(|q| allowed(q)) {
                *next.entry(q).or_insert(0) += count;
            }
        }
        level = next;
    }
    level
}

fn spectrum_multiset(op: &SiteOperator, predicted: &[(f64, u128)]) -> Result<(), String> {
    let spec = sym_eigen(op).map_err(|e| e.to_string())?;
    let mut merged: Vec<(f64, u128)> = Vec::new();
    for &(v, m) in predicted {
        match merged.iter_mut().find(|(w, _)| (*w - v).abs() < 1e-12) {
            Some(e) => e.1 += m,
            None => merged.push((v, m)),
        }
    }
    let total: u128 = merged.iter().map(|x| x.1).sum();
    if total != spec.dim() as u128 {
        return Err(format!("predicted multiplicities sum to {total}, dimension {}", spec.dim()));
    }
    for (v, m) in merged {
        let got = spec.eigenvalues().iter().filter(|&&x| (x - v).abs() < 1e-8).count() as u128;
        if got != m {
            return Err(format!("eigenvalue {v}: multiplicity {got}, predicted {m}"));
        }
    }
    Ok(())
}

fn jm_lemmas() -> Outcome {
    let cases = [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)];
    for (n, d) in cases {
        let js: Vec<(f64, u128)> = enumerate_sym_irreps(n, d)
            .iter()
            .map(|mu| (mu.content() as f64, mu.sym_dim() * mu.gl_dim(d).unwrap()))
            .collect();
        spectrum_multiset(&jm_sum_sym(n, d).unwrap(), &js).map_err(|e| format!("J_S (n={n}, d={d}): {e}"))?;
        let walks = bratteli_counts(n, d);
        let jb: Vec<(f64, u128)> = enumerate_brauer_irreps(n, d)
            .iter()
            .map(|l| {
                let value = l.content() as f64 - ((n - l.size()) * (d - 1)) as f64 / 2.0;
                let mult = walks.get(l).copied().unwrap_or(0) * l.orthogonal_dim(d).unwrap();
                (value, mult)
            })
            .collect();
        spectrum_multiset(&jm_sum_brauer(n, d).unwrap(), &jb).map_err(|e| format!("J_B (n={n}, d={d}): {e}"))?;
    }
    Ok(format!("{} cases, J_S and J_B within 1e-8", cases.len()))
}

fn primal_dual_werner() -> Outcome {
    let cells = budget_cells(6);
    for &(n, d) in &cells {
        let (rho, achieved) = werner_primal_certificate(n, d).map_err(|e| e.to_string())?;
        if rho.trace() != int(1) || achieved != p_w_complete(n, d) {
            return Err(format!("(n={n}, d={d}): achieved {achieved}, expected {}", p_w_complete(n, d)));
        }
    }
    Ok(format!("{} cells (n ≤ 6, d^n ≤ 4096) exact", cells.len()))
}

fn isotropic_dual() -> Outcome {
    for n in 2..=9 {
        for d in 2..=9 {
            let (_, m) = isotropic_dual_solution(n, d).map_err(|e| e.to_string())?;
            if m.value != p_iso_prime(n, d) {
                return Err(format!("(n={n}, d={d}): {} vs {}", m.value, p_iso_prime(n, d)));
            }
        }
    }
    let (_, m) = isotropic_dual_solution(5, 3).unwrap();
    if m.lo != Some(ratio(-3, 62)) || m.hi != Some(ratio(-3, 62)) || m.value != ratio(7, 31) {
        return Err(format!("(5,3): minimizer {:?}..{:?}, value {}", m.lo, m.hi, m.value));
    }
    let cells = budget_cells(usize::MAX);
    let mut worst = 0f64;
    for &(n, d) in &cells {
        let v = iso_dual_numeric(n, d).map_err(|e| e.to_string())?;
        let err = (v - to_f64(p_iso_prime(n, d))).abs();
        worst = worst.max(err);
        if err > 1e-8 {
            return Err(format!("golden section (n={n}, d={d}): {v}, error {err:e}"));
        }
    }
    Ok(format!(
        "exact on 2..9², x* = -3/62 → 7/31 at (5,3); golden section on {} cells, worst error {worst:.1e}",
        cells.len()
    ))
}

fn q0_dual() -> Outcome {
    for n in 2..=9 {
        for d in 2..=9 {
            let v = q0_dual_value(n, d).map_err(|e| e.to_string())?;
            if v != p_b_complete(n, d) {
                return Err(format!("(n={n}, d={d}): {v} vs {}", p_b_complete(n, d)));
            }
        }
    }
    Ok("64 cells exact".into())
}

fn matching_states() -> Outcome {
    for m in 1..=5usize {
        let count = perfect_matchings(&Graph::complete(2 * m).unwrap()).len();
        let expected: usize = (1..=m).map(|k| 2 * k - 1).product();
        if count != expected {
            return Err(format!("K_{}: {count} matchings, expected {expected}", 2 * m));
        }
    }
    let cases = [(3, 2), (4, 2), (5, 2), (3, 3), (4, 3)];
    for (n, d) in cases {
        let rho = matching_lower_bound_state(n, d).map_err(|e| e.to_string())?;
        let p = ratio(1, (n + n % 2 - 1) as i128);
        let (w, i, _) = pair_operators(d).unwrap();
        let di = d as i128;
        let target = &w.scaled(p / int(di)) + &i.scaled((int(1) - p) / int(di * di));
        for u in 0..n {
            for v in u + 1..n {
                if reduced_state(&rho, (u, v), n, d).unwrap() != target {
                    return Err(format!("(n={n}, d={d}) edge ({u},{v})"));
                }
            }
        }
    }
    Ok(format!("(2m-1)!! for m ≤ 5; marginals exact on {} cases", cases.len()))
}

fn ppt_region() -> Outcome {
    let steps = 100i128;
    let mut points = 0;
    for d in [2usize, 3] {
        for i in 0..=steps {
            for j in 0..=steps {
                let (p, q) = (ratio(i, steps), ratio(j, steps));
                if p + q > int(1) {
                    continue;
                }
                let params = BrauerParams::from_projector(p, q, d).unwrap();
                let sep = brauer_is_separable(p, q, d).map_err(|e| e.to_string())?;
                let ppt = is_positive_brauer_prime(params.q_prime, params.p_prime, d);
                if sep != ppt {
                    return Err(format!("d={d} (p, q) = ({p}, {q}): separable {sep}, PPT {ppt}"));
                }
                points += 1;
            }
        }
    }
    Ok(format!("{points} valid points of the 101 × 101 grid at d = 2, 3"))
}

fn cycle_graph() -> Outcome {
    let ns = [4, 6, 8, 10];
    let values: Vec<f64> = ns.iter().map(|&n| cycle_werner_value(n).unwrap()).collect();
    if (values[0] - 0.75).abs() > 1e-9 {
        return Err(format!("C_4: {}", values[0]));
    }
    if !values.windows(2).all(|w| w[1] < w[0]) {
        return Err(format!("not strictly decreasing: {values:?}"));
    }
    if !values.iter().all(|&v| v > LN_2) {
        return Err(format!("not all above ln 2: {values:?}"));
    }
    let shown: Vec<String> = ns.iter().zip(&values).map(|(n, v)| format!("C_{n}={v:.9}")).collect();
    Ok(format!("{} > ln 2 = {LN_2:.6}", shown.join(" > ")))
}

fn conjecture_probe_check() -> Outcome {
    let mut parts = Vec::new();
    for g in [Graph::complete(3).unwrap(), Graph::path(3).unwrap()] {
        let r = conjecture_probe(&g, Which::Werner, 2, 24).map_err(|e| e.to_string())?;
        if !(r.gap >= 0.0 && r.gap < r.tolerance) {
            return Err(format!("{}: gap {:e}, tolerance {:e}", r.graph, r.gap, r.tolerance));
        }
        parts.push(format!("{}: gap {:.1e} < {:.1e}", r.graph, r.gap, r.tolerance));
    }
    Ok(format!("{} (observation, not a proof)", parts.join("; ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("table reproduction", table_reproduction),
        ("oracle equivalence", oracle_equivalence),
        ("diagram-algebra soundness", diagram_soundness),
        ("Jucys-Murphy spectra", jm_lemmas),
        ("Werner primal-dual matching", primal_dual_werner),
        ("isotropic dual", isotropic_dual),
        ("q = 0 Brauer dual", q0_dual),
        ("matching states", matching_states),
        ("PPT region", ppt_region),
        ("cycle graph", cycle_graph),
        ("conjecture probe", conjecture_probe_check),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
