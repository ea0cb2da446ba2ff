//! Young diagram combinatorics.
//!
//! Partitions are stored trimmed of zero parts; the empty partition `∅` is
//! the empty list and is a legal irrep label for the Brauer algebra.
//! Boxes are addressed as `(row, column)`, both zero-based, so the content
//! of a box is `column − row`.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use crate::{Error, Rational, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single row `(n)`; `∅` when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single column `(1^n)`; `∅` when `n = 0`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows, `λ′_1`.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length `λ_i` (zero-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn content(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                let (r, len) = (r as i64, len as i64);
                len * (len - 1) / 2 - r * len
            })
            .sum()
    }

    /// `r(λ)`: the number of rows of odd length.
    pub fn odd_row_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        let conj = self.conjugate();
        self.part(row) - col + conj.part(col) - row - 1
    }

    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.boxes()
            .map(|(r, c)| self.part(r) - c + conj.part(c) - r - 1)
            .collect()
    }

    /// `d(λ)`: dimension of the symmetric-group irrep, by the hook formula.
    pub fn sym_dim(&self) -> u128 {
        let n = self.size() as u128;
        let mut value = Rational::one();
        let mut k = 1;
        for h in self.hooks() {
            // interleave n!/Π hooks to keep intermediate values small
            value *= Rational::new(k as i128, h as i128);
            k += 1;
        }
        debug_assert_eq!(k as u128, n + 1);
        value.to_integer() as u128
    }

    /// `m_d(λ)`: dimension of the `U(d)` irrep, by the hook-content formula.
    pub fn gl_dim(&self, d: usize) -> Result<u128> {
        if self.rows() > d {
            return Err(Error::TooManyRows {
                partition: self.to_string(),
                rows: self.rows(),
                d,
            });
        }
        let mut value = Rational::one();
        for ((r, c), h) in self.boxes().zip(self.hooks()) {
            let numer = d as i128 + c as i128 - r as i128;
            value *= Rational::new(numer, h as i128);
        }
        Ok(value.to_integer() as u128)
    }

    /// Dimension of the `O(d)` irrep labelled by `λ` (requires
    /// `λ′_1 + λ′_2 ≤ d`).
    ///
    /// Uses the El Samra–King product over boxes after replacing `λ` by its
    /// associate when the first column is longer than `d/2`; a partition and
    /// its associate differ by the determinant character only.
    pub fn orthogonal_dim(&self, d: usize) -> Result<u128> {
        if !self.is_orthogonal_label(d) {
            return Err(Error::InvalidPartition(format!(
                "{self} is not an O({d}) label (λ′_1 + λ′_2 > d)"
            )));
        }
        let conj = self.conjugate();
        let shape = if 2 * conj.part(0) > d {
            let mut cols = conj.parts.clone();
            cols[0] = d - conj.part(0);
            cols.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(cols)?.conjugate()
        } else {
            self.clone()
        };
        let conj = shape.conjugate();
        let mut value = Rational::one();
        for ((i, j), h) in shape.boxes().zip(shape.hooks()) {
            // one-based coordinates in the El Samra–King formula
            let (i1, j1) = (i as i128 + 1, j as i128 + 1);
            let r = if i1 <= j1 {
                shape.part(i) as i128 + shape.part(j) as i128 - i1 - j1
            } else {
                -(conj.part(i) as i128) - conj.part(j) as i128 + i1 + j1 - 2
            };
            value *= Rational::new(d as i128 + r, h as i128);
        }
        Ok(value.to_integer() as u128)
    }

    /// `λ′_1 + λ′_2 ≤ d`: the shape labels an irrep of the Brauer algebra.
    pub fn is_orthogonal_label(&self, d: usize) -> bool {
        let conj = self.conjugate();
        conj.part(0) + conj.part(1) <= d
    }

    /// Shapes obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.rows() {
            if i == 0 || self.part(i) < self.part(i - 1) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Shapes obtained by removing one corner box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.rows() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts).expect("corner removal keeps the shape valid"));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A conjugacy class of the symmetric group, labelled by cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType(partition)
    }

    /// Cycle type of a permutation given in one-line notation on `0..n`.
    pub fn of_permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(Partition { parts: lengths })
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> u128 {
        let mut counts: HashMap<usize, u128> = HashMap::new();
        for &p in self.0.parts() {
            *counts.entry(p).or_default() += 1;
        }
        let mut denom: u128 = 1;
        for (len, m) in counts {
            denom *= (len as u128).pow(m as u32) * factorial(m as usize);
        }
        factorial(self.size()) / denom
    }

    /// `±1` according to the parity of the class.
    pub fn sign(&self) -> i64 {
        let transpositions: usize = self.0.parts().iter().map(|&p| p - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n`, lexicographically descending: `(n)` first.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Irrep labels of the symmetric-group image on `(C^d)^{⊗n}`: `λ ⊢ n` with
/// at most `d` rows.
pub fn enumerate_sym_irreps(n: usize, d: usize) -> Vec<Partition> {
    all_partitions(n)
        .into_iter()
        .filter(|p| p.rows() <= d)
        .collect()
}

/// Irrep labels of the Brauer-algebra image on `(C^d)^{⊗n}`: `λ ⊢ n − 2r`
/// with `λ′_1 + λ′_2 ≤ d`, ordered by size (smallest first) and then
/// lexicographically descending.
pub fn enumerate_brauer_irreps(n: usize, d: usize) -> Vec<Partition> {
    let mut sizes: Vec<usize> = (0..=n / 2).map(|r| n - 2 * r).collect();
    sizes.sort_unstable();
    sizes
        .into_iter()
        .flat_map(all_partitions)
        .filter(|p| p.is_orthogonal_label(d))
        .collect()
}

/// `s*_{(1,1)}(λ) = Σ_{d ≥ i > j ≥ 1} λ_i (λ_j + 1)`, with `λ` padded by
/// zeros to length `d`.
pub fn shifted_schur_11(lambda: &Partition, d: usize) -> Result<Rational> {
    if lambda.rows() > d {
        return Err(Error::TooManyRows {
            partition: lambda.to_string(),
            rows: lambda.rows(),
            d,
        });
    }
    let mut acc: i128 = 0;
    for i in 0..d {
        for j in 0..i {
            acc += lambda.part(i) as i128 * (lambda.part(j) as i128 + 1);
        }
    }
    Ok(Rational::from_integer(acc))
}

/// The most rectangular partition of `n` with at most `d` rows: `k = n mod d`
/// rows of length `(n−k)/d + 1` followed by `d − k` rows of length `(n−k)/d`.
pub fn optimal_rectangular_partition(n: usize, d: usize) -> Partition {
    let k = n % d;
    let base = (n - k) / d;
    let parts: Vec<usize> = (0..d).map(|i| if i < k { base + 1 } else { base }).collect();
    Partition::new(parts).expect("rectangular shape is a partition")
}

/// Irreducible character `χ_λ` on the class `ct`, by Murnaghan–Nakayama.
pub fn mn_character(lambda: &Partition, ct: &CycleType) -> Result<i64> {
    if lambda.size() != ct.size() {
        return Err(Error::SizeMismatch(format!(
            "character of {lambda} on a class of S_{}",
            ct.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(&lambda.parts, ct.partition().parts(), &mut memo))
}

/// Characters of every `λ ⊢ n` on every class, sharing one memo table.
pub fn character_table(n: usize) -> HashMap<(Partition, Partition), i64> {
    let mut memo = HashMap::new();
    let shapes = all_partitions(n);
    let mut table = HashMap::new();
    for lambda in &shapes {
        for ct in &shapes {
            let value = mn_rec(&lambda.parts, &ct.parts, &mut memo);
            table.insert((lambda.clone(), ct.clone()), value);
        }
    }
    table
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

// Rim hooks of length k correspond to moving one bead of the beta-set
// {λ_i + (ℓ − 1 − i)} down by k onto an empty position; the sign is
// (−1)^{beads jumped over}.
fn mn_rec(lambda: &[usize], cycles: &[usize], memo: &mut MnMemo) -> i64 {
    if cycles.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = cycles[0];
    let rest = &cycles[1..];
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[idx] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let m = new_beta.len();
        let mut parts: Vec<usize> = new_beta
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (m - 1 - i))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        total += sign * mn_rec(&parts, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Number of walks `∅ → λ` of length `n` that add or remove one box per
/// step while staying among `O(d)` labels. This is the multiplicity of the
/// `O(d)` irrep `λ` in `(C^d)^{⊗n}`, i.e. the dimension of the matching
/// Brauer-algebra irrep.
pub fn brauer_multiplicity(lambda: &Partition, n: usize, d: usize) -> u128 {
    let mut layer: HashMap<Partition, u128> = HashMap::new();
    layer.insert(Partition::empty(), 1);
    for _ in 0..n {
        let mut next: HashMap<Partition, u128> = HashMap::new();
        for (shape, count) in &layer {
            for nb in shape.add_box().into_iter().chain(shape.remove_box()) {
                if nb.is_orthogonal_label(d) {
                    *next.entry(nb).or_default() += count;
                }
            }
        }
        layer = next;
    }
    layer.get(lambda).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_invalid_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 4, 2]).conjugate(), p(&[3, 3, 2, 2]));
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[3, 3, 1]).content(), 1);
        assert_eq!(p(&[1]).content(), 0);
        assert_eq!(Partition::empty().content(), 0);
        for k in 1..8i64 {
            assert_eq!(Partition::column(k as usize).content(), -k * (k - 1) / 2);
            assert_eq!(Partition::row(k as usize).content(), k * (k - 1) / 2);
        }
    }

    #[test]
    fn odd_rows() {
        assert_eq!(p(&[3, 2, 1]).odd_row_count(), 2);
        assert_eq!(Partition::row(6).odd_row_count(), 0);
        assert_eq!(Partition::column(5).odd_row_count(), 5);
    }

    #[test]
    fn dimensions() {
        assert_eq!(Partition::row(7).sym_dim(), 1);
        assert_eq!(p(&[2, 1]).sym_dim(), 2);
        let burnside: u128 = all_partitions(4).iter().map(|l| l.sym_dim().pow(2)).sum();
        assert_eq!(burnside, 24);
        assert_eq!(p(&[1, 1]).gl_dim(2).unwrap(), 1);
        assert_eq!(p(&[2]).gl_dim(2).unwrap(), 3);
        assert!(p(&[1, 1, 1]).gl_dim(2).is_err());
    }

    #[test]
    fn schur_weyl_dimension_count() {
        for n in 1..=8 {
            for d in 1..=4usize {
                let total: u128 = enumerate_sym_irreps(n, d)
                    .iter()
                    .map(|l| l.sym_dim() * l.gl_dim(d).unwrap())
                    .sum();
                assert_eq!(total, (d as u128).pow(n as u32), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn brauer_dimension_count() {
        // Σ_λ (multiplicity of O(d) irrep) · dim = d^n
        for d in 2..=5usize {
            for n in 1..=6 {
                let total: u128 = enumerate_brauer_irreps(n, d)
                    .iter()
                    .map(|l| brauer_multiplicity(l, n, d) * l.orthogonal_dim(d).unwrap())
                    .sum();
                assert_eq!(total, (d as u128).pow(n as u32), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn orthogonal_small_dims() {
        assert_eq!(p(&[2]).orthogonal_dim(3).unwrap(), 5);
        assert_eq!(p(&[1, 1]).orthogonal_dim(3).unwrap(), 3);
        assert_eq!(p(&[1, 1, 1]).orthogonal_dim(3).unwrap(), 1);
        assert_eq!(p(&[1, 1]).orthogonal_dim(2).unwrap(), 1);
        assert_eq!(p(&[3]).orthogonal_dim(2).unwrap(), 2);
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_sym_irreps(2, 2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_sym_irreps(3, 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(enumerate_sym_irreps(5, 3).len(), 5);
        let e = Partition::empty();
        assert_eq!(enumerate_brauer_irreps(2, 2), vec![e.clone(), p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_brauer_irreps(2, 3), vec![e.clone(), p(&[2]), p(&[1, 1])]);
        // (2,2) has λ′ = (2,2), so λ′_1 + λ′_2 = 4 > 2; likewise (3,1) gives 2+1 = 3.
        assert_eq!(
            enumerate_brauer_irreps(4, 2),
            vec![e, p(&[2]), p(&[1, 1]), p(&[4])]
        );
    }

    #[test]
    fn shifted_schur() {
        assert_eq!(shifted_schur_11(&p(&[2, 1]), 2).unwrap(), Rational::from_integer(3));
        assert_eq!(shifted_schur_11(&p(&[6]), 4).unwrap(), Rational::zero());
        let v = shifted_schur_11(&p(&[3, 2]), 2).unwrap();
        assert_eq!(v, Rational::from_integer(8));
        assert_eq!(v / Rational::from_integer(20), Rational::new(2, 5));
    }

    #[test]
    fn rectangular() {
        assert_eq!(optimal_rectangular_partition(6, 2), p(&[3, 3]));
        assert_eq!(optimal_rectangular_partition(7, 3), p(&[3, 2, 2]));
        assert_eq!(optimal_rectangular_partition(3, 5), p(&[1, 1, 1]));
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=6 {
            for ct in all_partitions(n) {
                let ct = CycleType::new(ct);
                assert_eq!(mn_character(&Partition::row(n), &ct).unwrap(), 1);
                assert_eq!(mn_character(&Partition::column(n), &ct).unwrap(), ct.sign());
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=6 {
            let shapes = all_partitions(n);
            let table = character_table(n);
            let order = factorial(n) as i128;
            for a in &shapes {
                for b in &shapes {
                    let s: i128 = shapes
                        .iter()
                        .map(|ct| {
                            let size = CycleType::new(ct.clone()).class_size() as i128;
                            size * table[&(a.clone(), ct.clone())] as i128
                                * table[&(b.clone(), ct.clone())] as i128
                        })
                        .sum();
                    assert_eq!(s, if a == b { order } else { 0 }, "{a} {b}");
                }
            }
            // column orthogonality: Σ_λ χ_λ(c)χ_λ(c') = δ · n!/|c|
            for c in &shapes {
                for c2 in &shapes {
                    let s: i128 = shapes
                        .iter()
                        .map(|l| {
                            table[&(l.clone(), c.clone())] as i128
                                * table[&(l.clone(), c2.clone())] as i128
                        })
                        .sum();
                    let expected = if c == c2 {
                        order / CycleType::new(c.clone()).class_size() as i128
                    } else {
                        0
                    };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn character_at_identity_is_dimension() {
        for n in 1..=7 {
            let id = CycleType::new(Partition::column(n));
            for l in all_partitions(n) {
                assert_eq!(mn_character(&l, &id).unwrap() as u128, l.sym_dim());
            }
        }
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        (0usize..=12).prop_flat_map(|n| {
            let shapes = all_partitions(n);
            (0..shapes.len()).prop_map(move |i| shapes[i].clone())
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate().size(), l.size());
        }

        #[test]
        fn content_is_antisymmetric(l in arb_partition()) {
            prop_assert_eq!(l.content() + l.conjugate().content(), 0);
        }
    }
}
