//! Cross-checks between the closed forms, the exact dual solvers and the
//! numerical oracles. Each suite returns one [`Check`] per comparison group.

use std::fmt;

use clap::ValueEnum;
use rayon::prelude::*;

use crate::budget;
use crate::diagram::{jm_sum_brauer, jm_sum_sym, BrauerDiagram};
use crate::extendibility::closed_form::{p_b_complete, p_iso, p_iso_prime, p_w_complete, LN_2};
use crate::extendibility::dual::{isotropic_dual_solution, iso_dual_numeric, q0_dual_value};
use crate::extendibility::oracle::{conjecture_probe, cycle_werner_value, p_avg_numeric, Which};
use crate::extendibility::states::{
    isotropic_prime_state, matching_lower_bound_state, matching_marginal_parameter, reduced_state,
    werner_primal_certificate,
};
use crate::extendibility::{brauer_is_separable, is_positive_brauer_prime, BrauerParams, StateFamily};
use crate::graphs::{double_factorial_odd, perfect_matchings, Graph};
use crate::operator::{to_f64, SiteOperator};
use crate::partitions::{brauer_multiplicity, enumerate_brauer_irreps, enumerate_sym_irreps};
use crate::spectral::sym_eigen;
use crate::{int, ratio, Rational, Result};

const GOLDEN_P_W: &str = include_str!("../tests/data/p_w.txt");
const GOLDEN_P_B: &str = include_str!("../tests/data/p_b.txt");
const GOLDEN_P_ISO_PRIME: &str = include_str!("../tests/data/p_iso_prime.txt");
const GOLDEN_P_ISO: &str = include_str!("../tests/data/p_iso.txt");

/// Default absolute tolerance for closed-form vs eigenvalue comparisons.
pub const ORACLE_TOL: f64 = 1e-9;
/// Default tolerance for the golden-section isotropic dual.
pub const GOLDEN_SECTION_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    Tables,
    Oracle,
    Diagrams,
    Jm,
    Certificates,
    Dual,
    Brauer,
    Matchings,
    Ppt,
    Cycle,
    Probe,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Tables,
        Suite::Oracle,
        Suite::Diagrams,
        Suite::Jm,
        Suite::Certificates,
        Suite::Dual,
        Suite::Brauer,
        Suite::Matchings,
        Suite::Ppt,
        Suite::Cycle,
        Suite::Probe,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>, ok_detail: String) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            ok_detail
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            format!("{} failure(s): {}", failures.len(), shown.join("; "))
        };
        Check { name: name.into(), passed, detail }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// Tolerances used by the numeric suites.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    pub oracle: f64,
    pub golden_section: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { oracle: ORACLE_TOL, golden_section: GOLDEN_SECTION_TOL }
    }
}

pub fn run_suite(suite: Suite, tol: Tolerances) -> Result<Vec<Check>> {
    match suite {
        Suite::Tables => Ok(tables()),
        Suite::Oracle => oracle(tol.oracle),
        Suite::Diagrams => diagrams(),
        Suite::Jm => jm(),
        Suite::Certificates => certificates(),
        Suite::Dual => dual(tol.golden_section),
        Suite::Brauer => Ok(vec![brauer_entanglement()]),
        Suite::Matchings => matchings(),
        Suite::Ppt => Ok(vec![ppt_region(100)]),
        Suite::Cycle => cycle(tol.oracle),
        Suite::Probe => probe(),
    }
}

/// A golden table: `cells[(d − 2)][(n − 2)]` for `2 ≤ n, d ≤ 9`.
pub fn golden_table(family: StateFamily) -> Vec<Vec<Rational>> {
    let text = match family {
        StateFamily::Werner => GOLDEN_P_W,
        StateFamily::Brauer => GOLDEN_P_B,
        StateFamily::IsotropicPrime => GOLDEN_P_ISO_PRIME,
        StateFamily::Isotropic => GOLDEN_P_ISO,
    };
    parse_grid(text).expect("bundled tables are well formed")
}

/// Parses a whitespace-separated grid whose first column is a row label and
/// whose first non-comment line is a header.
pub fn parse_grid(text: &str) -> Result<Vec<Vec<Rational>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split_whitespace().skip(1).map(parse_rational).collect())
        .collect()
}

/// Parses `a/b`, an integer, or a terminating decimal such as `-0.125`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || crate::Error::Parse(format!("`{s}` is not a rational number"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| bad())?;
        let den: i128 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(ratio(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let num: i128 = digits.parse().map_err(|_| bad())?;
        let value = ratio(num, 10i128.pow(frac.len() as u32));
        return Ok(if negative { -value } else { value });
    }
    s.parse::<i128>().map(int).map_err(|_| bad())
}

pub fn closed_form(family: StateFamily, n: usize, d: usize) -> Rational {
    match family {
        StateFamily::Werner => p_w_complete(n, d),
        StateFamily::Brauer => p_b_complete(n, d),
        StateFamily::Isotropic => p_iso(n, d),
        StateFamily::IsotropicPrime => p_iso_prime(n, d),
    }
}

fn tables() -> Vec<Check> {
    StateFamily::ALL
        .iter()
        .map(|&family| {
            let grid = golden_table(family);
            let mut failures = Vec::new();
            for d in 2..=9 {
                for n in 2..=9 {
                    let got = closed_form(family, n, d);
                    let want = grid[d - 2][n - 2];
                    if got != want {
                        failures.push(format!("(n={n}, d={d}) {got} != {want}"));
                    }
                }
            }
            Check::new(format!("table {}", family.symbol()), failures, "64 cells match".into())
        })
        .collect()
}

/// `(n, d)` with `n, d ≥ 2` and `d^n` within the budget, `n ≤ max_n`.
pub fn budget_cells(max_n: usize) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for d in 2.. {
        if !budget::fits(2, d) {
            break;
        }
        for n in 2..=max_n {
            if !budget::fits(n, d) {
                break;
            }
            cells.push((n, d));
        }
        if d >= 64 {
            break;
        }
    }
    cells
}

fn oracle(tol: f64) -> Result<Vec<Check>> {
    let cells = budget_cells(usize::MAX);
    let results: Vec<Result<(usize, usize, f64, f64)>> = cells
        .par_iter()
        .map(|&(n, d)| {
            let g = Graph::complete(n)?;
            let w = p_avg_numeric(&g, Which::Werner, d)?;
            let b = p_avg_numeric(&g, Which::Brauer, d)?;
            Ok((n, d, w, b))
        })
        .collect();
    let mut fw = Vec::new();
    let mut fb = Vec::new();
    for r in results {
        let (n, d, w, b) = r?;
        let ew = (w - to_f64(p_w_complete(n, d))).abs();
        let eb = (b - to_f64(p_b_complete(n, d))).abs();
        if ew > tol {
            fw.push(format!("(n={n}, d={d}) error {ew:.2e}"));
        }
        if eb > tol {
            fb.push(format!("(n={n}, d={d}) error {eb:.2e}"));
        }
    }
    let detail = format!("{} cells with d^n ≤ {} within {tol:e}", cells.len(), budget::current());
    Ok(vec![
        Check::new("K_n Werner λ_max vs closed form", fw, detail.clone()),
        Check::new("K_n Brauer λ_max vs closed form", fb, detail),
    ])
}

fn diagrams() -> Result<Vec<Check>> {
    let all = BrauerDiagram::all(3);
    let mut failures = Vec::new();
    for d in [2, 3] {
        let reps: Vec<SiteOperator> = all.iter().map(|x| x.matrix_rep(d)).collect::<Result<_>>()?;
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                let (c, loops) = BrauerDiagram::compose(a, b)?;
                let lhs = &reps[i] * &reps[j];
                let rhs = c.matrix_rep(d)?.scaled(int((d as i128).pow(loops as u32)));
                if lhs != rhs {
                    failures.push(format!("d={d} {a} · {b}"));
                }
            }
        }
    }
    let pairs = all.len() * all.len();
    Ok(vec![Check::new(
        "Br_3 composition vs matrix product",
        failures,
        format!("{pairs} ordered pairs exact at d = 2, 3"),
    )])
}

/// `(eigenvalue, multiplicity)` predicted for `J_S`.
pub fn js_prediction(n: usize, d: usize) -> Result<Vec<(Rational, u128)>> {
    enumerate_sym_irreps(n, d)
        .into_iter()
        .map(|mu| Ok((int(mu.content() as i128), mu.sym_dim() * mu.gl_dim(d)?)))
        .collect()
}

/// `(eigenvalue, multiplicity)` predicted for `J_B`.
pub fn jb_prediction(n: usize, d: usize) -> Result<Vec<(Rational, u128)>> {
    enumerate_brauer_irreps(n, d)
        .into_iter()
        .map(|l| {
            let value = int(l.content() as i128) - ratio(((n - l.size()) * (d - 1)) as i128, 2);
            Ok((value, brauer_multiplicity(&l, n, d) * l.orthogonal_dim(d)?))
        })
        .collect()
}

/// Compares a spectrum with predicted `(value, multiplicity)` pairs, summing
/// multiplicities of coinciding values.
pub fn spectrum_matches(op: &SiteOperator, predicted: &[(Rational, u128)], tol: f64) -> Result<bool> {
    let spec = sym_eigen(op)?;
    let mut merged: Vec<(Rational, u128)> = Vec::new();
    for &(v, m) in predicted {
        if m == 0 {
            continue;
        }
        match merged.iter_mut().find(|(w, _)| *w == v) {
            Some(entry) => entry.1 += m,
            None => merged.push((v, m)),
        }
    }
    let total: u128 = merged.iter().map(|x| x.1).sum();
    Ok(total == spec.dim() as u128
        && merged.len() == spec.clusters().len()
        && merged.iter().all(|&(v, m)| spec.multiplicity_of(to_f64(v), tol) as u128 == m))
}

pub const JM_CASES: [(usize, usize); 6] = [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)];

fn jm() -> Result<Vec<Check>> {
    let mut fs = Vec::new();
    let mut fb = Vec::new();
    for (n, d) in JM_CASES {
        if !spectrum_matches(&jm_sum_sym(n, d)?, &js_prediction(n, d)?, 1e-8)? {
            fs.push(format!("(n={n}, d={d})"));
        }
        if !spectrum_matches(&jm_sum_brauer(n, d)?, &jb_prediction(n, d)?, 1e-8)? {
            fb.push(format!("(n={n}, d={d})"));
        }
    }
    Ok(vec![
        Check::new("J_S spectrum = contents", fs, format!("{} cases", JM_CASES.len())),
        Check::new("J_B spectrum = shifted contents", fb, format!("{} cases", JM_CASES.len())),
    ])
}

fn certificates() -> Result<Vec<Check>> {
    let cells = budget_cells(6);
    let results: Vec<Result<(usize, usize, Rational)>> = cells
        .par_iter()
        .map(|&(n, d)| Ok((n, d, werner_primal_certificate(n, d)?.1)))
        .collect();
    let mut failures = Vec::new();
    for r in results {
        let (n, d, got) = r?;
        if got != p_w_complete(n, d) {
            failures.push(format!("(n={n}, d={d}) achieved {got}"));
        }
    }
    Ok(vec![Check::new(
        "Werner primal certificate attains p_W",
        failures,
        format!("{} cells with n ≤ 6, exact", cells.len()),
    )])
}

fn dual(golden_tol: f64) -> Result<Vec<Check>> {
    let mut fi = Vec::new();
    let mut fq = Vec::new();
    for n in 2..=9 {
        for d in 2..=9 {
            let (_, m) = isotropic_dual_solution(n, d)?;
            if m.value != p_iso_prime(n, d) {
                fi.push(format!("(n={n}, d={d}) {} != {}", m.value, p_iso_prime(n, d)));
            }
            let q = q0_dual_value(n, d)?;
            if q != p_b_complete(n, d) {
                fq.push(format!("(n={n}, d={d}) {q}"));
            }
        }
    }
    let (_, m53) = isotropic_dual_solution(5, 3)?;
    let mut fx = Vec::new();
    if m53.lo != Some(ratio(-3, 62)) || m53.value != ratio(7, 31) {
        fx.push(format!("minimizer {:?}, value {}", m53.lo, m53.value));
    }
    let cells: Vec<(usize, usize)> = budget_cells(usize::MAX);
    let numeric: Vec<Result<(usize, usize, f64)>> =
        cells.par_iter().map(|&(n, d)| Ok((n, d, iso_dual_numeric(n, d)?))).collect();
    let mut fnum = Vec::new();
    for r in numeric {
        let (n, d, v) = r?;
        let err = (v - to_f64(p_iso_prime(n, d))).abs();
        if err > golden_tol {
            fnum.push(format!("(n={n}, d={d}) error {err:.2e}"));
        }
    }
    Ok(vec![
        Check::new("isotropic minimax = p'_I", fi, "2 ≤ n, d ≤ 9 exact".into()),
        Check::new("isotropic minimax at (5,3)", fx, "x* = -3/62, value 7/31".into()),
        Check::new("q = 0 minimax = p_B", fq, "2 ≤ n, d ≤ 9 exact".into()),
        Check::new(
            "golden-section isotropic dual",
            fnum,
            format!("{} cells within {golden_tol:e}", cells.len()),
        ),
    ])
}

fn brauer_entanglement() -> Check {
    let mut failures = Vec::new();
    for d in 2..=9 {
        for n in 2..=40 {
            if p_b_complete(n, d) <= ratio(1, d as i128) {
                failures.push(format!("(n={n}, d={d})"));
            }
        }
    }
    Check::new("p_B > 1/d (entangled marginals)", failures, "2 ≤ d ≤ 9, 2 ≤ n ≤ 40".into())
}

pub const MATCHING_CASES: [(usize, usize); 5] = [(3, 2), (4, 2), (5, 2), (3, 3), (4, 3)];

fn matchings() -> Result<Vec<Check>> {
    let mut fc = Vec::new();
    for m in 1..=5 {
        let count = perfect_matchings(&Graph::complete(2 * m)?).len() as u128;
        if count != double_factorial_odd(m) {
            fc.push(format!("K_{} has {count}", 2 * m));
        }
    }
    let mut fm = Vec::new();
    for (n, d) in MATCHING_CASES {
        if !budget::fits(n, d) {
            continue;
        }
        let rho = matching_lower_bound_state(n, d)?;
        let target = isotropic_prime_state(matching_marginal_parameter(n), d)?;
        for u in 0..n {
            for v in u + 1..n {
                if reduced_state(&rho, (u, v), n, d)? != target {
                    fm.push(format!("(n={n}, d={d}) edge ({u},{v})"));
                }
            }
        }
    }
    Ok(vec![
        Check::new("perfect matchings of K_2m", fc, "(2m-1)!! for m ≤ 5".into()),
        Check::new("matching state marginals", fm, format!("{} cases exact", MATCHING_CASES.len())),
    ])
}

/// Separability against positivity of the partial transpose, which swaps
/// `p′` and `q′`, on a `(steps + 1)²` grid of valid `(p, q)`.
pub fn ppt_region(steps: usize) -> Check {
    let mut failures = Vec::new();
    let mut points = 0usize;
    for d in [2usize, 3] {
        for i in 0..=steps {
            for j in 0..=steps - i {
                let (p, q) = (ratio(i as i128, steps as i128), ratio(j as i128, steps as i128));
                let params = BrauerParams::from_projector(p, q, d).expect("d ≥ 2");
                let sep = brauer_is_separable(p, q, d).expect("valid state");
                let ppt = is_positive_brauer_prime(params.q_prime, params.p_prime, d);
                points += 1;
                if sep != ppt {
                    failures.push(format!("d={d} (p, q) = ({p}, {q})"));
                }
            }
        }
    }
    Check::new("separable ⇔ PPT on Brauer states", failures, format!("{points} grid points at d = 2, 3"))
}

fn cycle(tol: f64) -> Result<Vec<Check>> {
    let ns: Vec<usize> = (4..=10).step_by(2).filter(|&n| budget::fits(n, 2)).collect();
    let values: Vec<f64> = ns.iter().map(|&n| cycle_werner_value(n)).collect::<Result<_>>()?;
    let mut failures = Vec::new();
    if (values[0] - 0.75).abs() > tol {
        failures.push(format!("C_4 gives {}", values[0]));
    }
    for w in values.windows(2) {
        if w[1] >= w[0] {
            failures.push(format!("not decreasing: {} then {}", w[0], w[1]));
        }
    }
    for (&n, &v) in ns.iter().zip(&values) {
        if v <= LN_2 {
            failures.push(format!("C_{n} gives {v} ≤ ln 2"));
        }
    }
    let shown: Vec<String> = ns.iter().zip(&values).map(|(n, v)| format!("C_{n} {v:.9}")).collect();
    Ok(vec![Check::new("cycle Werner values", failures, format!("{} > ln 2", shown.join(", ")))])
}

fn probe() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for g in [Graph::complete(3)?, Graph::path(3)?] {
        let r = conjecture_probe(&g, Which::Werner, 2, 24)?;
        let failures = if r.within_tolerance { Vec::new() } else { vec![format!("gap {:.3e}", r.gap)] };
        out.push(Check::new(
            format!("signed vs nonnegative weights on {} (observation)", r.graph),
            failures,
            format!("gap {:.3e} < tolerance {:.3e}", r.gap, r.tolerance),
        ));
    }
    Ok(out)
}

/// Runs the requested suites in order.
pub fn run_all(suites: &[Suite], tol: Tolerances) -> Result<Vec<(Suite, Vec<Check>)>> {
    suites.iter().map(|&s| Ok((s, run_suite(s, tol)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-3/62").unwrap(), ratio(-3, 62));
        assert_eq!(parse_rational("0.6").unwrap(), ratio(3, 5));
        assert_eq!(parse_rational("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn golden_tables_are_complete() {
        for family in StateFamily::ALL {
            let g = golden_table(family);
            assert_eq!(g.len(), 8);
            assert!(g.iter().all(|row| row.len() == 8));
            assert!(g.iter().flatten().all(|v| !v.is_zero()));
        }
    }

    #[test]
    fn fast_suites_pass() {
        for suite in [Suite::Tables, Suite::Diagrams, Suite::Jm, Suite::Brauer, Suite::Ppt] {
            for check in run_suite(suite, Tolerances::default()).unwrap() {
                assert!(check.passed, "{check}");
            }
        }
    }
}
