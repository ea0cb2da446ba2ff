//! Irrep pairs `(λ, μ)` known to occur in the restriction of Brauer-algebra
//! irreps to the symmetric group, and the resulting joint eigenvalues of
//! `(J_S, J_B)`.
//!
//! Three rules give pairs exactly:
//! 1. `λ = (1^m)`, `m ≤ d`: the partners are the `μ` with `m` odd rows;
//! 2. `λ ⊢ n`: the only partner is `μ = λ`;
//! 3. `μ = (n)`: the partners are the one-row `λ = (n − 2r)`.

use std::collections::BTreeSet;

use crate::partitions::{enumerate_brauer_irreps, enumerate_sym_irreps, Partition};
use crate::{int, ratio, Rational};

/// Pairs `(λ, μ)` admitted by the three rules, sorted and deduplicated.
pub fn easy_pairs(n: usize, d: usize) -> Vec<(Partition, Partition)> {
    let sym = enumerate_sym_irreps(n, d);
    let mut out = BTreeSet::new();
    for m in 0..=d.min(n) {
        if (n - m) % 2 == 1 {
            continue;
        }
        let lambda = Partition::column(m);
        for mu in sym.iter().filter(|mu| mu.odd_row_count() == m) {
            out.insert((lambda.clone(), mu.clone()));
        }
    }
    for lambda in enumerate_brauer_irreps(n, d).into_iter().filter(|l| l.size() == n) {
        out.insert((lambda.clone(), lambda));
    }
    for r in 0..=n / 2 {
        let lambda = Partition::row(n - 2 * r);
        if lambda.is_orthogonal_label(d) {
            out.insert((lambda, Partition::row(n)));
        }
    }
    out.into_iter().collect()
}

/// The distinguished partitions used when `n ≥ d` and `n − d` is even:
/// `λ_1 = (1^d)`, `λ_2 = (1)`, `μ_1 = (n)`, `μ_2 = (n−d+1, 1^{d−1})` and
/// `μ_3 = ((2k+3)^m, (2k+1)^{d−m})` with `k = ⌊(n−d)/2 / d⌋`,
/// `m = (n−d)/2 mod d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPartitions {
    pub lambda1: Partition,
    pub lambda2: Partition,
    pub mu1: Partition,
    pub mu2: Partition,
    pub mu3: Partition,
}

pub fn named_partitions(n: usize, d: usize) -> Option<NamedPartitions> {
    if n < d || (n - d) % 2 == 1 {
        return None;
    }
    let half = (n - d) / 2;
    let (k, m) = (half / d, half % d);
    let mut mu2 = vec![n - d + 1];
    mu2.extend(std::iter::repeat_n(1, d - 1));
    let mut mu3 = vec![2 * k + 3; m];
    mu3.extend(std::iter::repeat_n(2 * k + 1, d - m));
    Some(NamedPartitions {
        lambda1: Partition::column(d),
        lambda2: Partition::row(1),
        mu1: Partition::row(n),
        mu2: Partition::new(mu2).expect("hook shape"),
        mu3: Partition::new(mu3).expect("near-rectangular shape"),
    })
}

/// Pairs among the distinguished partitions that the rules admit:
/// `(λ_2, μ_1)`, `(λ_1, μ_2)` and `(λ_1, μ_3)`.
pub fn named_pairs(n: usize, d: usize) -> Vec<(Partition, Partition)> {
    let Some(p) = named_partitions(n, d) else {
        return Vec::new();
    };
    let admitted: BTreeSet<(Partition, Partition)> = easy_pairs(n, d).into_iter().collect();
    [
        (p.lambda2.clone(), p.mu1.clone()),
        (p.lambda1.clone(), p.mu2),
        (p.lambda1, p.mu3),
    ]
    .into_iter()
    .filter(|pair| admitted.contains(pair))
    .collect::<BTreeSet<_>>()
    .into_iter()
    .collect()
}

/// Easy-case pairs together with the admitted distinguished pairs.
pub fn family_pairs(n: usize, d: usize) -> Vec<(Partition, Partition)> {
    let mut all: BTreeSet<(Partition, Partition)> = easy_pairs(n, d).into_iter().collect();
    all.extend(named_pairs(n, d));
    all.into_iter().collect()
}

/// Eigenvalue of `J_S` on `μ`: `cont(μ)`.
pub fn js_eigenvalue(mu: &Partition) -> Rational {
    int(mu.content() as i128)
}

/// Eigenvalue of `J_B` on `λ`: `cont(λ) − (n − |λ|)(d − 1)/2`.
pub fn jb_eigenvalue(lambda: &Partition, n: usize, d: usize) -> Rational {
    int(lambda.content() as i128) - ratio(((n - lambda.size()) * (d - 1)) as i128, 2)
}
