//! Floating-point spectra of exact symmetric operators.
//!
//! Full spectra use cyclic Jacobi on the connected blocks of the sparsity
//! pattern. Top eigenvalues of large operators use Lanczos with full
//! reorthogonalization and an explicit residual check.

use std::cell::RefCell;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::operator::{to_f64, SiteOperator, SparseMatrix};
use crate::{Error, Result};

/// Absolute tolerance for grouping eigenvalues into multiplicities.
pub const CLUSTER_TOL: f64 = 1e-8;

/// Largest block diagonalized densely when only `λ_max` is requested.
pub const DENSE_LIMIT: usize = 160;

const JACOBI_REL_TOL: f64 = 1e-14;
const LANCZOS_TARGET: f64 = 1e-12;
const LANCZOS_ACCEPT: f64 = 1e-9;
const LANCZOS_SEED: u64 = 0x6d6f_6e6f;

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    clusters: Vec<(f64, usize)>,
}

impl Spectrum {
    fn from_values(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        let clusters = cluster_sorted(&eigenvalues, CLUSTER_TOL);
        Spectrum {
            eigenvalues,
            clusters,
        }
    }

    /// All eigenvalues, ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Distinct eigenvalues (cluster means) with multiplicities, ascending.
    pub fn clusters(&self) -> &[(f64, usize)] {
        &self.clusters
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("spectrum is nonempty")
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Multiplicity of the cluster within `tol` of `value`, zero if none.
    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.clusters
            .iter()
            .filter(|(v, _)| (v - value).abs() <= tol)
            .map(|(_, m)| m)
            .sum()
    }
}

/// Common eigenvalue pairs `(a, b)` of two commuting operators.
#[derive(Clone, Debug, PartialEq)]
pub struct JointSpectrum {
    pairs: Vec<(f64, f64, usize)>,
}

impl JointSpectrum {
    /// `(a, b, multiplicity)` sorted by `a` then `b`.
    pub fn pairs(&self) -> &[(f64, f64, usize)] {
        &self.pairs
    }

    pub fn dim(&self) -> usize {
        self.pairs.iter().map(|p| p.2).sum()
    }

    pub fn multiplicity_of(&self, a: f64, b: f64, tol: f64) -> usize {
        self.pairs
            .iter()
            .filter(|p| (p.0 - a).abs() <= tol && (p.1 - b).abs() <= tol)
            .map(|p| p.2)
            .sum()
    }
}

/// Eigenvalues and an orthonormal eigenbasis.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Column `k` (stored row-major, `dim × dim`) is the eigenvector of
    /// `values[k]`.
    pub vectors: Vec<f64>,
    pub dim: usize,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        (0..self.dim).map(|i| self.vectors[i * self.dim + k]).collect()
    }
}

/// Compressed sparse rows in floating point, for matrix-vector products.
#[derive(Clone, Debug)]
pub struct FloatCsr {
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<f64>,
}

impl FloatCsr {
    pub fn from_sparse(m: &SparseMatrix) -> Self {
        let mut row_ptr = Vec::with_capacity(m.dim() + 1);
        let mut cols = Vec::with_capacity(m.nnz());
        let mut values = Vec::with_capacity(m.nnz());
        row_ptr.push(0);
        for i in 0..m.dim() {
            for (j, v) in m.row(i) {
                cols.push(j);
                values.push(to_f64(v));
            }
            row_ptr.push(cols.len());
        }
        FloatCsr {
            dim: m.dim(),
            row_ptr,
            cols,
            values,
        }
    }

    pub fn from_operator(op: &SiteOperator) -> Self {
        Self::from_sparse(op.matrix())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `y ← M x`.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate().take(self.dim) {
            *yi = (self.row_ptr[i]..self.row_ptr[i + 1]).map(|k| self.values[k] * x[self.cols[k]]).sum();
        }
    }

    /// Maximum absolute row sum, an upper bound on the spectral norm.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|i| self.values[self.row_ptr[i]..self.row_ptr[i + 1]].iter().map(|v| v.abs()).sum())
            .fold(0.0, f64::max)
    }
}

/// All eigenvalues of a symmetric operator.
pub fn sym_eigen(m: &SiteOperator) -> Result<Spectrum> {
    sparse_eigenvalues(m.matrix())
}

pub fn sparse_eigenvalues(m: &SparseMatrix) -> Result<Spectrum> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut values = Vec::with_capacity(m.dim());
    for block in blocks(&[m]) {
        let mut a = dense_block(m, &block);
        jacobi(&mut a, block.len(), None)?;
        values.extend((0..block.len()).map(|i| a[i * block.len() + i]));
    }
    Ok(Spectrum::from_values(values))
}

/// Eigenvalues with a full orthonormal eigenbasis (dense output; meant for
/// small operators).
pub fn eigen_decomposition(m: &SiteOperator) -> Result<EigenDecomposition> {
    let sm = m.matrix();
    if !sm.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let dim = sm.dim();
    let mut values = Vec::with_capacity(dim);
    let mut vectors = vec![0.0; dim * dim];
    let mut col = 0;
    for block in blocks(&[sm]) {
        let k = block.len();
        let mut a = dense_block(sm, &block);
        let mut v = identity(k);
        jacobi(&mut a, k, Some(&mut v))?;
        for c in 0..k {
            values.push(a[c * k + c]);
            for (r, &g) in block.iter().enumerate() {
                vectors[g * dim + col + c] = v[r * k + c];
            }
        }
        col += k;
    }
    Ok(EigenDecomposition { values, vectors, dim })
}

/// Largest eigenvalue of a symmetric operator.
pub fn lambda_max(m: &SiteOperator) -> Result<f64> {
    sparse_lambda_max(m.matrix())
}

pub fn lambda_min(m: &SiteOperator) -> Result<f64> {
    Ok(-sparse_lambda_max(&m.matrix().scaled(-crate::int(1)))?)
}

pub fn sparse_lambda_max(m: &SparseMatrix) -> Result<f64> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut best = f64::NEG_INFINITY;
    for block in blocks(&[m]) {
        let value = if block.len() <= DENSE_LIMIT {
            let k = block.len();
            let mut a = dense_block(m, &block);
            jacobi(&mut a, k, None)?;
            (0..k).map(|i| a[i * k + i]).fold(f64::NEG_INFINITY, f64::max)
        } else {
            let sub = sub_matrix(m, &block);
            let csr = FloatCsr::from_sparse(&sub);
            let norm = csr.norm_inf();
            lanczos_max(csr.dim(), |x, y| csr.matvec(x, y), norm)?.0
        };
        best = best.max(value);
    }
    Ok(best)
}

/// Largest eigenvalue of `A + x·B` for symmetric `A`, `B`, with `A` and `B`
/// pre-converted (and split into common blocks) so repeated evaluation at
/// many `x` is cheap.
#[derive(Clone, Debug)]
pub struct AffinePencil {
    blocks: Vec<PencilBlock>,
}

#[derive(Clone, Debug)]
enum PencilBlock {
    Dense { k: usize, a: Vec<f64>, b: Vec<f64> },
    Sparse { a: FloatCsr, b: FloatCsr, norm_a: f64, norm_b: f64 },
}

impl AffinePencil {
    pub fn new(a: &SiteOperator, b: &SiteOperator) -> Result<Self> {
        if !a.is_symmetric() || !b.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if a.dim() != b.dim() {
            return Err(Error::SizeMismatch("pencil operators differ in dimension".into()));
        }
        let (ma, mb) = (a.matrix(), b.matrix());
        let blocks = blocks(&[ma, mb])
            .into_iter()
            .map(|block| {
                if block.len() <= DENSE_LIMIT {
                    PencilBlock::Dense { k: block.len(), a: dense_block(ma, &block), b: dense_block(mb, &block) }
                } else {
                    let a = FloatCsr::from_sparse(&sub_matrix(ma, &block));
                    let b = FloatCsr::from_sparse(&sub_matrix(mb, &block));
                    let (norm_a, norm_b) = (a.norm_inf(), b.norm_inf());
                    PencilBlock::Sparse { a, b, norm_a, norm_b }
                }
            })
            .collect();
        Ok(AffinePencil { blocks })
    }

    pub fn lambda_max(&self, x: f64) -> Result<f64> {
        let mut best = f64::NEG_INFINITY;
        for block in &self.blocks {
            let value = match block {
                PencilBlock::Dense { k, a, b } => {
                    let mut m: Vec<f64> = a.iter().zip(b).map(|(p, q)| p + x * q).collect();
                    jacobi(&mut m, *k, None)?;
                    (0..*k).map(|i| m[i * k + i]).fold(f64::NEG_INFINITY, f64::max)
                }
                PencilBlock::Sparse { a, b, norm_a, norm_b } => {
                    let scratch = RefCell::new(vec![0.0; a.dim()]);
                    let matvec = |v: &[f64], out: &mut [f64]| {
                        let mut t = scratch.borrow_mut();
                        a.matvec(v, out);
                        b.matvec(v, &mut t);
                        for (o, bt) in out.iter_mut().zip(t.iter()) {
                            *o += x * bt;
                        }
                    };
                    lanczos_max(a.dim(), matvec, norm_a + x.abs() * norm_b)?.0
                }
            };
            best = best.max(value);
        }
        Ok(best)
    }
}

/// Common eigenpairs of two commuting symmetric operators.
pub fn joint_spectrum(a: &SiteOperator, b: &SiteOperator) -> Result<JointSpectrum> {
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !a.commutes_with(b)? {
        return Err(Error::NotCommuting);
    }
    let (am, bm) = (a.matrix(), b.matrix());
    let mut raw: Vec<(f64, f64)> = Vec::with_capacity(am.dim());
    for block in blocks(&[am, bm]) {
        let k = block.len();
        let mut da = dense_block(am, &block);
        let db = dense_block(bm, &block);
        let mut v = identity(k);
        jacobi(&mut da, k, Some(&mut v))?;
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&i, &j| da[i * k + i].total_cmp(&da[j * k + j]));
        let mut start = 0;
        while start < k {
            let mut end = start + 1;
            while end < k
                && da[order[end] * k + order[end]] - da[order[end - 1] * k + order[end - 1]]
                    <= CLUSTER_TOL
            {
                end += 1;
            }
            let cols = &order[start..end];
            let alpha = cols.iter().map(|&c| da[c * k + c]).sum::<f64>() / cols.len() as f64;
            // B restricted to the eigenspace: Vᵀ B V on the chosen columns
            let m = cols.len();
            let mut bv = vec![0.0; k * m];
            for r in 0..k {
                for (cj, &c) in cols.iter().enumerate() {
                    let mut acc = 0.0;
                    for s in 0..k {
                        acc += db[r * k + s] * v[s * k + c];
                    }
                    bv[r * m + cj] = acc;
                }
            }
            let mut small = vec![0.0; m * m];
            for (ci, &c) in cols.iter().enumerate() {
                for cj in 0..m {
                    let mut acc = 0.0;
                    for r in 0..k {
                        acc += v[r * k + c] * bv[r * m + cj];
                    }
                    small[ci * m + cj] = acc;
                }
            }
            symmetrize(&mut small, m);
            jacobi(&mut small, m, None)?;
            raw.extend((0..m).map(|i| (alpha, small[i * m + i])));
            start = end;
        }
    }
    raw.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
    let mut pairs: Vec<(f64, f64, usize)> = Vec::new();
    for (x, y) in raw {
        if let Some(last) = pairs
            .iter_mut()
            .rev()
            .take_while(|p| x - p.0 <= CLUSTER_TOL)
            .find(|p| (y - p.1).abs() <= CLUSTER_TOL)
        {
            last.2 += 1;
        } else {
            pairs.push((x, y, 1));
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
    Ok(JointSpectrum { pairs })
}

/// Lanczos iteration for the top eigenpair of the symmetric operator given
/// by `matvec`, certified by `‖Mv − λv‖ ≤ 1e−9 · norm`.
pub fn lanczos_max<F>(dim: usize, matvec: F, norm: f64) -> Result<(f64, Vec<f64>)>
where
    F: Fn(&[f64], &mut [f64]),
{
    if dim == 0 {
        return Err(Error::SizeMismatch("empty operator".into()));
    }
    let scale = norm.max(f64::MIN_POSITIVE);
    let mut rng = ChaCha8Rng::seed_from_u64(LANCZOS_SEED);
    let mut start: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>() - 0.5).collect();
    normalize(&mut start);
    let max_basis = dim.min(300);
    let mut best: Option<(f64, Vec<f64>, f64)> = None;

    for _restart in 0..30 {
        let mut basis: Vec<Vec<f64>> = vec![start.clone()];
        let mut alpha: Vec<f64> = Vec::new();
        let mut beta: Vec<f64> = Vec::new();
        let mut w = vec![0.0; dim];
        let y = loop {
            let j = basis.len() - 1;
            matvec(&basis[j], &mut w);
            let a = dot(&basis[j], &w);
            alpha.push(a);
            for _ in 0..2 {
                for q in &basis {
                    let c = dot(q, &w);
                    axpy(-c, q, &mut w);
                }
            }
            let b = norm2(&w);
            let exhausted = b <= 1e-13 * scale || basis.len() == max_basis;
            if exhausted || basis.len().is_multiple_of(8) {
                let (_, s) = top_of_tridiagonal(&alpha, &beta)?;
                let estimate = b * s.last().copied().unwrap_or(0.0).abs();
                if exhausted || estimate <= 0.1 * LANCZOS_TARGET * scale {
                    let mut y = vec![0.0; dim];
                    for (q, &c) in basis.iter().zip(&s) {
                        axpy(c, q, &mut y);
                    }
                    normalize(&mut y);
                    break y;
                }
            }
            beta.push(b);
            let mut next = w.clone();
            next.iter_mut().for_each(|v| *v /= b);
            basis.push(next);
        };
        matvec(&y, &mut w);
        let theta = dot(&y, &w);
        axpy(-theta, &y, &mut w);
        let residual = norm2(&w);
        if best.as_ref().is_none_or(|b| residual < b.2) {
            best = Some((theta, y.clone(), residual));
        }
        if residual <= LANCZOS_TARGET * scale {
            break;
        }
        start = y;
    }
    let (theta, y, residual) = best.expect("at least one restart ran");
    if residual > LANCZOS_ACCEPT * scale {
        return Err(Error::NoConvergence(format!(
            "Lanczos residual {residual:e} exceeds {:e}",
            LANCZOS_ACCEPT * scale
        )));
    }
    Ok((theta, y))
}

/// Largest eigenvalue of the tridiagonal matrix with diagonal `alpha` and
/// off-diagonal `beta`, with its eigenvector.
fn top_of_tridiagonal(alpha: &[f64], beta: &[f64]) -> Result<(f64, Vec<f64>)> {
    let n = alpha.len();
    let mut d = alpha.to_vec();
    let mut z = identity(n);
    tql2(&mut d, &beta[..n - 1], &mut z)?;
    let (k, &theta) = d
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty tridiagonal");
    Ok((theta, (0..n).map(|i| z[i * n + k]).collect()))
}

/// Implicit QL on a symmetric tridiagonal matrix. On return `d` holds the
/// eigenvalues and column `k` of `z` the eigenvector of `d[k]`.
fn tql2(d: &mut [f64], off: &[f64], z: &mut [f64]) -> Result<()> {
    let n = d.len();
    let mut e = vec![0.0; n];
    e[..n.saturating_sub(1)].copy_from_slice(&off[..n.saturating_sub(1)]);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 200 {
                return Err(Error::NoConvergence("tridiagonal QL".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for k in 0..n {
                    let t = z[k * n + i + 1];
                    z[k * n + i + 1] = s * z[k * n + i] + c * t;
                    z[k * n + i] = c * z[k * n + i] - s * t;
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Cyclic Jacobi on a dense symmetric `n × n` matrix (row-major). On
/// return the diagonal holds the eigenvalues; if `v` is given (initially
/// the identity) its columns hold the eigenvectors.
pub fn jacobi(a: &mut [f64], n: usize, mut v: Option<&mut Vec<f64>>) -> Result<()> {
    let fro: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if n < 2 || fro == 0.0 {
        return Ok(());
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    off += a[p * n + q] * a[p * n + q];
                }
            }
        }
        if off.sqrt() <= JACOBI_REL_TOL * fro {
            return Ok(());
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.is_finite() {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                } else {
                    0.0
                };
                if t == 0.0 {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                if let Some(v) = v.as_deref_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    Err(Error::NoConvergence("Jacobi did not reach tolerance in 100 sweeps".into()))
}

/// Connected components of the union of the sparsity patterns, each sorted.
fn blocks(ms: &[&SparseMatrix]) -> Vec<Vec<usize>> {
    let dim = ms[0].dim();
    let mut parent: Vec<usize> = (0..dim).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for m in ms {
        for (i, j, _) in m.entries() {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..dim {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

fn dense_block(m: &SparseMatrix, block: &[usize]) -> Vec<f64> {
    let k = block.len();
    let mut local = vec![usize::MAX; m.dim()];
    for (r, &g) in block.iter().enumerate() {
        local[g] = r;
    }
    let mut out = vec![0.0; k * k];
    for (r, &g) in block.iter().enumerate() {
        for (c, v) in m.row(g) {
            out[r * k + local[c]] = to_f64(v);
        }
    }
    out
}

fn sub_matrix(m: &SparseMatrix, block: &[usize]) -> SparseMatrix {
    let mut local = vec![usize::MAX; m.dim()];
    for (r, &g) in block.iter().enumerate() {
        local[g] = r;
    }
    let mut out = SparseMatrix::zeros(block.len());
    for (r, &g) in block.iter().enumerate() {
        for (c, v) in m.row(g) {
            out.add_to(r, local[c], v);
        }
    }
    out
}

fn identity(n: usize) -> Vec<f64> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    v
}

fn symmetrize(a: &mut [f64], n: usize) {
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = avg;
            a[j * n + i] = avg;
        }
    }
}

fn cluster_sorted(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    let mut prev = f64::NEG_INFINITY;
    for &v in values {
        match out.last_mut() {
            Some(last) if v - prev <= tol => {
                last.1 += 1;
                last.2 += v;
            }
            _ => out.push((v, 1, v)),
        }
        prev = v;
    }
    out.into_iter().map(|(_, m, s)| (s / m as f64, m)).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn norm2(x: &[f64]) -> f64 {
    dot(x, x).sqrt()
}

fn normalize(x: &mut [f64]) {
    let n = norm2(x);
    x.iter_mut().for_each(|v| *v /= n);
}
