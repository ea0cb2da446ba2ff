//! Brauer diagrams, permutations and their matrix action on `(C^d)^{⊗n}`.
//!
//! A diagram on `n` strands pairs up `2n` endpoints. Endpoint `i` is the
//! input `in_i` and endpoint `n + i` is the output `out_i`, both zero-based.
//! A permutation `π` is the diagram pairing `in_j` with `out_{π(j)}`.
//!
//! The matrix of a diagram has rows labelled by output basis states and
//! columns by input basis states; an entry is 1 exactly when every pair of
//! connected endpoints carries equal labels.

use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::operator::{digits_to_index, index_to_digits, PairOperator, SiteOperator, SparseMatrix};
use crate::partitions::{all_partitions, character_table, factorial, CycleType, Partition};
use crate::{int, ratio, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Endpoint {
    In(usize),
    Out(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<usize>,
}

impl BrauerDiagram {
    /// Builds a diagram from a list of endpoint pairs covering all `2n`
    /// endpoints exactly once.
    pub fn from_pairs(n: usize, pairs: &[(Endpoint, Endpoint)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        let index = |e: Endpoint| -> Result<usize> {
            match e {
                Endpoint::In(i) if i < n => Ok(i),
                Endpoint::Out(i) if i < n => Ok(n + i),
                _ => Err(Error::InvalidParameters(format!("endpoint {e:?} out of range for n = {n}"))),
            }
        };
        for &(a, b) in pairs {
            let (a, b) = (index(a)?, index(b)?);
            if a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidParameters(format!(
                    "endpoints {a} and {b} cannot be paired"
                )));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::InvalidParameters("pairing does not cover every endpoint".into()));
        }
        Ok(BrauerDiagram { n, partner })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_permutation(&(0..n).collect::<Vec<_>>()).expect("identity is a permutation")
    }

    /// The diagram of `π` in one-line notation: `in_j` joins `out_{π(j)}`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameters(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let mut partner = vec![0; 2 * n];
        for (j, &p) in perm.iter().enumerate() {
            partner[j] = n + p;
            partner[n + p] = j;
        }
        Ok(BrauerDiagram { n, partner })
    }

    /// The transposition of strands `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n || i == j {
            return Err(Error::EdgeOutOfRange(i, j, n));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        Self::from_permutation(&perm)
    }

    /// The contraction on strands `i, j`: `in_i–in_j`, `out_i–out_j`, all
    /// other strands straight through.
    pub fn bar(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::bars(n, &[(i, j)])
    }

    /// Contractions on each of the given disjoint strand pairs.
    pub fn bars(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![false; n];
        let mut list = Vec::new();
        for &(i, j) in pairs {
            if i >= n || j >= n || i == j || used[i] || used[j] {
                return Err(Error::EdgeOutOfRange(i, j, n));
            }
            used[i] = true;
            used[j] = true;
            list.push((Endpoint::In(i), Endpoint::In(j)));
            list.push((Endpoint::Out(i), Endpoint::Out(j)));
        }
        for (k, &u) in used.iter().enumerate() {
            if !u {
                list.push((Endpoint::In(k), Endpoint::Out(k)));
            }
        }
        Self::from_pairs(n, &list)
    }

    /// Every diagram on `n` strands, `(2n − 1)!!` in total.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
                out.push(partner.clone());
                return;
            };
            for other in first + 1..partner.len() {
                if partner[other] == usize::MAX {
                    partner[first] = other;
                    partner[other] = first;
                    rec(partner, out);
                    partner[first] = usize::MAX;
                    partner[other] = usize::MAX;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![usize::MAX; 2 * n], &mut out);
        out.into_iter()
            .map(|partner| BrauerDiagram { n, partner })
            .collect()
    }

    /// A uniformly random diagram on `n` strands.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut points: Vec<usize> = (0..2 * n).collect();
        points.shuffle(rng);
        let mut partner = vec![0; 2 * n];
        for pair in points.chunks(2) {
            partner[pair[0]] = pair[1];
            partner[pair[1]] = pair[0];
        }
        BrauerDiagram { n, partner }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, e: Endpoint) -> Endpoint {
        self.endpoint(self.partner[self.index(e)])
    }

    /// Pairs as `(a, b)` with `a < b` in endpoint order, sorted.
    pub fn pairs(&self) -> Vec<(Endpoint, Endpoint)> {
        (0..2 * self.n)
            .filter(|&a| a < self.partner[a])
            .map(|a| (self.endpoint(a), self.endpoint(self.partner[a])))
            .collect()
    }

    pub fn is_permutation(&self) -> bool {
        (0..self.n).all(|i| self.partner[i] >= self.n)
    }

    /// One-line notation when the diagram is a permutation.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation()
            .then(|| (0..self.n).map(|j| self.partner[j] - self.n).collect())
    }

    /// `a·b`: `b` is applied first, its outputs glued to the inputs of `a`.
    /// Returns the reduced diagram and the number of closed loops removed.
    pub fn compose(a: &Self, b: &Self) -> Result<(Self, usize)> {
        if a.n != b.n {
            return Err(Error::SizeMismatch(format!(
                "diagrams on {} and {} strands",
                a.n, b.n
            )));
        }
        let n = a.n;
        let mut visited = vec![false; n];
        let mut partner = vec![usize::MAX; 2 * n];

        // Walk from a free endpoint through the middle row until another
        // free endpoint is reached. Free endpoints: inputs of b (index i),
        // outputs of a (index n + i).
        let walk = |start_in_b: bool, start: usize, visited: &mut Vec<bool>| -> usize {
            let (mut in_b, mut e) = (start_in_b, start);
            loop {
                let p = if in_b { b.partner[e] } else { a.partner[e] };
                if in_b && p < n {
                    return p;
                }
                if !in_b && p >= n {
                    return p;
                }
                let k = if in_b { p - n } else { p };
                visited[k] = true;
                if in_b {
                    in_b = false;
                    e = k;
                } else {
                    in_b = true;
                    e = n + k;
                }
            }
        };

        for start in 0..2 * n {
            if partner[start] != usize::MAX {
                continue;
            }
            let end = if start < n {
                walk(true, start, &mut visited)
            } else {
                walk(false, start, &mut visited)
            };
            partner[start] = end;
            partner[end] = start;
        }

        let mut loops = 0;
        for k in 0..n {
            if visited[k] {
                continue;
            }
            loops += 1;
            let mut j = k;
            loop {
                visited[j] = true;
                // a.in_j leads to a middle point, which continues in b
                let m = a.partner[j];
                visited[m] = true;
                let next_b = b.partner[n + m];
                j = next_b - n;
                if j == k {
                    break;
                }
            }
        }
        Ok((BrauerDiagram { n, partner }, loops))
    }

    /// `ψ(π)` on `(C^d)^{⊗n}`.
    pub fn matrix_rep(&self, d: usize) -> Result<SiteOperator> {
        if d < 1 {
            return Err(Error::InvalidParameters("local dimension must be positive".into()));
        }
        let n = self.n;
        let dim = d
            .checked_pow(n as u32)
            .ok_or_else(|| Error::SizeMismatch(format!("{d}^{n} overflows")))?;
        let mut matrix = SparseMatrix::zeros(dim);
        let free_pairs: Vec<(usize, usize)> = (0..n)
            .filter(|&i| self.partner[n + i] >= n && n + i < self.partner[n + i])
            .map(|i| (i, self.partner[n + i] - n))
            .collect();
        let mut out = vec![0; n];
        'col: for col in 0..dim {
            let x = index_to_digits(col, n, d);
            for i in 0..n {
                let p = self.partner[i];
                if p < n {
                    if x[i] != x[p] {
                        continue 'col;
                    }
                } else {
                    out[p - n] = x[i];
                }
            }
            let combos = d.pow(free_pairs.len() as u32);
            for c in 0..combos {
                let labels = index_to_digits(c, free_pairs.len(), d);
                for (&(u, v), &l) in free_pairs.iter().zip(&labels) {
                    out[u] = l;
                    out[v] = l;
                }
                matrix.add_to(digits_to_index(&out, d), col, Rational::one());
            }
        }
        SiteOperator::new(n, d, matrix)
    }

    fn index(&self, e: Endpoint) -> usize {
        match e {
            Endpoint::In(i) => i,
            Endpoint::Out(i) => self.n + i,
        }
    }

    fn endpoint(&self, idx: usize) -> Endpoint {
        if idx < self.n {
            Endpoint::In(idx)
        } else {
            Endpoint::Out(idx - self.n)
        }
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |e: Endpoint| match e {
            Endpoint::In(i) => format!("{}", i + 1),
            Endpoint::Out(i) => format!("{}'", i + 1),
        };
        let body: Vec<String> = self
            .pairs()
            .into_iter()
            .map(|(a, b)| format!("{{{},{}}}", show(a), show(b)))
            .collect();
        write!(f, "[{}]", body.join(" "))
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ψ(π)` for a permutation in one-line notation.
pub fn permutation_matrix(perm: &[usize], d: usize) -> Result<SiteOperator> {
    BrauerDiagram::from_permutation(perm)?.matrix_rep(d)
}

/// The unnormalized maximally entangled operator `W`, the identity `I` and
/// the flip `F` on `C^d ⊗ C^d`.
pub fn pair_operators(d: usize) -> Result<(PairOperator, PairOperator, PairOperator)> {
    check_d(d)?;
    let w = BrauerDiagram::bar(2, 0, 1)?.matrix_rep(d)?;
    let i = SiteOperator::identity(2, d);
    let f = BrauerDiagram::transposition(2, 0, 1)?.matrix_rep(d)?;
    Ok((w, i, f))
}

/// `Π_∅ = W/d`, `Π_(1,1) = (I − F)/2`, `Π_(2) = (I + F)/2 − W/d`.
pub fn projectors(d: usize) -> Result<(PairOperator, PairOperator, PairOperator)> {
    let (w, i, f) = pair_operators(d)?;
    let p_empty = w.scaled(ratio(1, d as i128));
    let p_anti = (&i - &f).scaled(ratio(1, 2));
    let p_sym = &(&i + &f).scaled(ratio(1, 2)) - &p_empty;
    Ok((p_empty, p_anti, p_sym))
}

/// `J_S = Σ_{i<j} F_{ij}`.
pub fn jm_sum_sym(n: usize, d: usize) -> Result<SiteOperator> {
    check_d(d)?;
    let mut acc = SiteOperator::zeros(n, d);
    for i in 0..n {
        for j in i + 1..n {
            let f = BrauerDiagram::transposition(n, i, j)?.matrix_rep(d)?;
            acc.add_scaled(&f, Rational::one())?;
        }
    }
    Ok(acc)
}

/// `J_B = Σ_{i<j} (F_{ij} − W_{ij})`.
pub fn jm_sum_brauer(n: usize, d: usize) -> Result<SiteOperator> {
    let mut acc = jm_sum_sym(n, d)?;
    for i in 0..n {
        for j in i + 1..n {
            let w = BrauerDiagram::bar(n, i, j)?.matrix_rep(d)?;
            acc.add_scaled(&w, -Rational::one())?;
        }
    }
    Ok(acc)
}

/// The central Young symmetrizer
/// `ε_λ = (d(λ)/n!) Σ_{π ∈ S_n} χ_λ(π) ψ(π)`.
pub fn young_symmetrizer(lambda: &Partition, n: usize, d: usize) -> Result<SiteOperator> {
    check_d(d)?;
    if lambda.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda} is not a partition of {n}")));
    }
    if lambda.rows() > d {
        return Err(Error::TooManyRows {
            partition: lambda.to_string(),
            rows: lambda.rows(),
            d,
        });
    }
    let table = character_table(n);
    let class_char: HashMap<Partition, i64> = all_partitions(n)
        .into_iter()
        .map(|ct| {
            let chi = table[&(lambda.clone(), ct.clone())];
            (ct, chi)
        })
        .collect();

    let dim = d.pow(n as u32);
    let digits: Vec<Vec<usize>> = (0..dim).map(|c| index_to_digits(c, n, d)).collect();
    let mut sums: Vec<HashMap<usize, i64>> = vec![HashMap::new(); dim];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = vec![0; n];
    loop {
        let chi = class_char[CycleType::of_permutation(&perm).partition()];
        if chi != 0 {
            for (col, x) in digits.iter().enumerate() {
                for (j, &p) in perm.iter().enumerate() {
                    out[p] = x[j];
                }
                *sums[digits_to_index(&out, d)].entry(col).or_default() += chi;
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }

    let scale = ratio(lambda.sym_dim() as i128, factorial(n) as i128);
    let mut matrix = SparseMatrix::zeros(dim);
    for (row, entries) in sums.into_iter().enumerate() {
        for (col, v) in entries {
            if v != 0 {
                matrix.add_to(row, col, int(v as i128) * scale);
            }
        }
    }
    SiteOperator::new(n, d, matrix)
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

fn check_d(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidParameters(format!("local dimension {d} < 2")));
    }
    Ok(())
}
