//! Interaction graphs and edge-local operators.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagram::pair_operators;
use crate::operator::{digits_to_index, index_to_digits, PairOperator, SiteOperator, SparseMatrix};
use crate::{ratio, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Complete,
    Star,
    Cycle,
    Path,
    CompleteBipartite,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Custom => "custom",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    family: Family,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    family: Family,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(g: GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut graph = Graph::custom(g.n, &edges)?;
        graph.family = g.family;
        Ok(graph)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
            family: g.family,
        }
    }
}

impl Graph {
    /// A graph from an arbitrary edge list; edges are normalized to `u < v`
    /// and kept in the given order.
    pub fn custom(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::EdgeOutOfRange(a, b, n));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!("duplicate edge {e:?}")));
            }
            out.push(e);
        }
        Ok(Graph {
            n,
            edges: out,
            family: Family::Custom,
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        make_family(Family::Complete, n, None)
    }

    pub fn star(n: usize) -> Result<Self> {
        make_family(Family::Star, n, None)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        make_family(Family::Cycle, n, None)
    }

    pub fn path(n: usize) -> Result<Self> {
        make_family(Family::Path, n, None)
    }

    pub fn complete_bipartite(n: usize, m: usize) -> Result<Self> {
        make_family(Family::CompleteBipartite, n, Some(m))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.edges.len();
        write!(f, "{} graph on {} vertices, {m} edge{}", self.family, self.n, if m == 1 { "" } else { "s" })
    }
}

/// Family constructors. `Star` with parameter `n` is `K_{1,n}` on `n + 1`
/// vertices with centre 0; `CompleteBipartite` places the `n` side on
/// vertices `0..n` and the `m` side on `n..n+m`.
pub fn make_family(tag: Family, n: usize, m: Option<usize>) -> Result<Graph> {
    let bad = |msg: String| Err(Error::InvalidGraph(msg));
    let (vertices, edges): (usize, Vec<(usize, usize)>) = match tag {
        Family::Complete => {
            if n < 1 {
                return bad("K_n needs n ≥ 1".into());
            }
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            (n, edges)
        }
        Family::Star => {
            if n < 1 {
                return bad("K_{1,n} needs n ≥ 1".into());
            }
            (n + 1, (1..=n).map(|v| (0, v)).collect())
        }
        Family::Cycle => {
            if n < 3 {
                return bad(format!("C_n needs n ≥ 3, got {n}"));
            }
            let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|u| (u, u + 1)).collect();
            edges.push((0, n - 1));
            (n, edges)
        }
        Family::Path => {
            if n < 1 {
                return bad("P_n needs n ≥ 1".into());
            }
            (n, (0..n.saturating_sub(1)).map(|u| (u, u + 1)).collect())
        }
        Family::CompleteBipartite => {
            let Some(m) = m else {
                return bad("K_{n,m} needs both side sizes".into());
            };
            if n < 1 || m < 1 {
                return bad(format!("K_{{n,m}} needs n, m ≥ 1, got {n}, {m}"));
            }
            let edges = (0..n).flat_map(|u| (0..m).map(move |v| (u, n + v))).collect();
            (n + m, edges)
        }
        Family::Custom => return bad("custom graphs are built from an edge list".into()),
    };
    let mut g = Graph::custom(vertices, &edges)?;
    g.family = tag;
    Ok(g)
}

/// `op` acting on sites `edge.0, edge.1` (in that order) and the identity
/// elsewhere.
pub fn embed_pair_operator(op: &PairOperator, edge: (usize, usize), n: usize) -> Result<SiteOperator> {
    let (u, v) = edge;
    if u >= n || v >= n || u == v {
        return Err(Error::EdgeOutOfRange(u, v, n));
    }
    if op.sites() != 2 {
        return Err(Error::SizeMismatch(format!("expected a two-site operator, got {} sites", op.sites())));
    }
    let d = op.local_dim();
    let dim = d.pow(n as u32);
    let mut matrix = SparseMatrix::zeros(dim);
    for col in 0..dim {
        let mut x = index_to_digits(col, n, d);
        let a = x[u] * d + x[v];
        for b in 0..d * d {
            let value = op.get(b, a);
            if value == Rational::from_integer(0) {
                continue;
            }
            x[u] = b / d;
            x[v] = b % d;
            matrix.add_to(digits_to_index(&x, d), col, value);
        }
    }
    SiteOperator::new(n, d, matrix)
}

/// `Σ_{e ∈ E} op_e` without normalization.
pub fn edge_sum(g: &Graph, op: &PairOperator) -> Result<SiteOperator> {
    let mut acc = SiteOperator::zeros(g.vertex_count(), op.local_dim());
    for &e in g.edges() {
        acc.add_scaled(&embed_pair_operator(op, e, g.vertex_count())?, Rational::one())?;
    }
    Ok(acc)
}

/// `(1/|E|) Σ_{e ∈ E} op_e` for a flip-invariant `op`.
pub fn edge_average_hamiltonian(g: &Graph, op: &PairOperator) -> Result<SiteOperator> {
    if op.sites() != 2 {
        return Err(Error::SizeMismatch("edge Hamiltonians need a two-site operator".into()));
    }
    let (_, _, f) = pair_operators(op.local_dim())?;
    if &(&f * op) * &f != *op {
        return Err(Error::NotFlipInvariant);
    }
    if g.edge_count() == 0 {
        return Err(Error::InvalidGraph("graph has no edges".into()));
    }
    Ok(edge_sum(g, op)?.scaled(ratio(1, g.edge_count() as i128)))
}

/// A set of disjoint edges covering every vertex once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, edge: (usize, usize)) -> bool {
        let e = (edge.0.min(edge.1), edge.0.max(edge.1));
        self.edges.contains(&e)
    }

    pub fn covers_exactly_once(&self, n: usize) -> bool {
        let mut hits = vec![0; n];
        for &(u, v) in &self.edges {
            if u >= n || v >= n {
                return false;
            }
            hits[u] += 1;
            hits[v] += 1;
        }
        hits.iter().all(|&h| h == 1)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        f.write_str(&body.join(" "))
    }
}

/// All perfect matchings, found by pairing the lowest uncovered vertex with
/// each available neighbour in turn.
pub fn perfect_matchings(g: &Graph) -> Vec<Matching> {
    perfect_matchings_on(g, &vec![false; g.vertex_count()])
}

/// Perfect matchings of the subgraph induced on vertices not marked in
/// `removed`.
pub fn perfect_matchings_on(g: &Graph, removed: &[bool]) -> Vec<Matching> {
    fn rec(g: &Graph, covered: &mut Vec<bool>, stack: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        let Some(u) = covered.iter().position(|&c| !c) else {
            out.push(Matching {
                edges: stack.clone(),
            });
            return;
        };
        covered[u] = true;
        for v in u + 1..covered.len() {
            if !covered[v] && g.has_edge(u, v) {
                covered[v] = true;
                stack.push((u, v));
                rec(g, covered, stack, out);
                stack.pop();
                covered[v] = false;
            }
        }
        covered[u] = false;
    }
    let mut out = Vec::new();
    let free = removed.iter().filter(|&&r| !r).count();
    if free % 2 == 1 {
        return out;
    }
    rec(g, &mut removed.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// `(2m − 1)!!`, the number of perfect matchings of `K_{2m}`.
pub fn double_factorial_odd(m: usize) -> u128 {
    (1..=m as u128).map(|k| 2 * k - 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{permutation_matrix, projectors, BrauerDiagram};
    use crate::int;

    #[test]
    fn family_sizes() {
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.has_edge(4, 0));
        assert_eq!(Graph::complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert_eq!(Graph::star(4).unwrap().vertex_count(), 5);
        assert_eq!(Graph::path(3).unwrap().edges(), &[(0, 1), (1, 2)]);
        assert!(Graph::cycle(2).is_err());
        assert!(make_family(Family::CompleteBipartite, 2, None).is_err());
        for n in 1..=9 {
            assert_eq!(Graph::complete(n).unwrap().edge_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn custom_validation() {
        assert!(Graph::custom(3, &[(0, 0)]).is_err());
        assert!(Graph::custom(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::custom(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(4).unwrap();
        let s = g.to_json();
        assert!(s.contains("\"family\":\"cycle\""));
        assert_eq!(Graph::from_json(&s).unwrap(), g);
        let parsed = Graph::from_json(r#"{"n":3,"edges":[[0,1],[2,1]],"family":"custom"}"#).unwrap();
        assert_eq!(parsed.edges(), &[(0, 1), (1, 2)]);
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,5]],"family":"custom"}"#).is_err());
    }

    #[test]
    fn embedding() {
        for d in [2, 3] {
            let (w, _, f) = pair_operators(d).unwrap();
            assert_eq!(embed_pair_operator(&f, (0, 1), 2).unwrap(), f);
            let (p0, _, _) = projectors(d).unwrap();
            for n in 2..=4 {
                let e = embed_pair_operator(&p0, (0, n - 1), n).unwrap();
                assert_eq!(e.trace(), int((d as i128).pow(n as u32 - 2)));
            }
            let f13 = embed_pair_operator(&f, (0, 2), 3).unwrap();
            assert_eq!(f13, BrauerDiagram::transposition(3, 0, 2).unwrap().matrix_rep(d).unwrap());
            let w13 = embed_pair_operator(&w, (2, 0), 3).unwrap();
            assert_eq!(w13, BrauerDiagram::bar(3, 0, 2).unwrap().matrix_rep(d).unwrap());
            assert!(embed_pair_operator(&f, (0, 3), 3).is_err());
        }
    }

    #[test]
    fn hamiltonian_requires_flip_invariance() {
        let d = 2;
        let mut m = SparseMatrix::zeros(4);
        m.add_to(0, 1, int(1));
        m.add_to(1, 0, int(1));
        let op = SiteOperator::new(2, d, m).unwrap();
        let g = Graph::complete(3).unwrap();
        assert_eq!(edge_average_hamiltonian(&g, &op), Err(Error::NotFlipInvariant));
        let (p0, _, _) = projectors(d).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(edge_average_hamiltonian(&k2, &p0).unwrap(), p0);
    }

    #[test]
    fn heisenberg_ring() {
        // (I − F)/2 on a 4-ring, compared with an independent build from
        // Pauli-free bit manipulation: the singlet projector on (a, b) maps
        // |xy⟩ to (|xy⟩ − |yx⟩)/2.
        let (_, pa, _) = projectors(2).unwrap();
        let h = edge_average_hamiltonian(&Graph::cycle(4).unwrap(), &pa).unwrap();
        let mut oracle = SparseMatrix::zeros(16);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
            for col in 0..16usize {
                let (ba, bb) = ((col >> (3 - a)) & 1, (col >> (3 - b)) & 1);
                if ba != bb {
                    let swapped = col ^ (1 << (3 - a)) ^ (1 << (3 - b));
                    oracle.add_to(col, col, ratio(1, 8));
                    oracle.add_to(swapped, col, ratio(-1, 8));
                }
            }
        }
        assert_eq!(h.matrix(), &oracle);
    }

    #[test]
    fn hamiltonians_are_symmetric_and_invariant() {
        let d = 2;
        let (p0, pa, _) = projectors(d).unwrap();
        for n in 3..=5 {
            let kn = Graph::complete(n).unwrap();
            let cn = Graph::cycle(n).unwrap();
            for op in [&p0, &pa] {
                let hk = edge_average_hamiltonian(&kn, op).unwrap();
                let hc = edge_average_hamiltonian(&cn, op).unwrap();
                assert!(hk.is_symmetric() && hc.is_symmetric());
                let mut perm: Vec<usize> = (0..n).collect();
                loop {
                    let p = permutation_matrix(&perm, d).unwrap();
                    assert!(p.commutes_with(&hk).unwrap());
                    if !crate::diagram::next_permutation(&mut perm) {
                        break;
                    }
                }
                for shift in 0..n {
                    let rot: Vec<usize> = (0..n).map(|i| (i + shift) % n).collect();
                    let p = permutation_matrix(&rot, d).unwrap();
                    assert!(p.commutes_with(&hc).unwrap());
                }
            }
        }
    }

    #[test]
    fn matching_counts() {
        assert_eq!(perfect_matchings(&Graph::complete(4).unwrap()).len(), 3);
        let k6 = perfect_matchings(&Graph::complete(6).unwrap());
        assert_eq!(k6.len(), 15);
        for e in Graph::complete(6).unwrap().edges() {
            assert_eq!(k6.iter().filter(|m| m.contains(*e)).count(), 3);
        }
        assert!(perfect_matchings(&Graph::complete(5).unwrap()).is_empty());
        for m in 1..=5 {
            let g = Graph::complete(2 * m).unwrap();
            let all = perfect_matchings(&g);
            assert_eq!(all.len() as u128, double_factorial_odd(m));
            assert!(all.iter().all(|x| x.covers_exactly_once(2 * m)));
        }
        assert_eq!(perfect_matchings(&Graph::cycle(6).unwrap()).len(), 2);
    }
}
