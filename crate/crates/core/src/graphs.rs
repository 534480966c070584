//! Weighted graphs, perturbation sites, and the generator families.
//!
//! All vertex indexing is 0-based. Loops contribute their weight once to the
//! diagonal of the adjacency matrix; the walk-count regression suite pins
//! this convention.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, QuadExt, SqMat};

/// Symmetric rational-weighted graph with optional loops and role labels.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(usize, usize, BigRational)>,
    loops: Vec<(usize, BigRational)>,
    roles: BTreeMap<usize, String>,
}

/// Equality is by canonical sorted edge and loop lists; role labels are
/// presentation data and do not participate.
impl PartialEq for WeightedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.loops == other.loops
    }
}

impl WeightedGraph {
    pub fn new(
        n: usize,
        edges: Vec<(usize, usize, BigRational)>,
        loops: Vec<(usize, BigRational)>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        let mut seen = BTreeSet::new();
        let mut canonical = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!(
                    "self edge ({u},{v}); use a loop entry instead"
                )));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!("edge ({u},{v}) out of range")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidParameter(format!(
                    "duplicated undirected edge ({},{})",
                    key.0, key.1
                )));
            }
            canonical.push((key.0, key.1, w));
        }
        canonical.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut loop_seen = BTreeSet::new();
        let mut loops_sorted = loops;
        for (v, _) in &loops_sorted {
            if *v >= n {
                return Err(Error::InvalidParameter(format!("loop at {v} out of range")));
            }
            if !loop_seen.insert(*v) {
                return Err(Error::InvalidParameter(format!("duplicated loop at {v}")));
            }
        }
        loops_sorted.sort_by_key(|(v, _)| *v);
        Ok(Self { n, edges: canonical, loops: loops_sorted, roles: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, BigRational)] {
        &self.edges
    }

    pub fn loops(&self) -> &[(usize, BigRational)] {
        &self.loops
    }

    pub fn set_role(&mut self, v: usize, role: impl Into<String>) {
        self.roles.insert(v, role.into());
    }

    pub fn role(&self, v: usize) -> Option<&str> {
        self.roles.get(&v).map(String::as_str)
    }

    /// Exact adjacency matrix (loops once on the diagonal).
    pub fn adjacency_exact(&self) -> SqMat<QuadExt> {
        let mut m = SqMat::zeros(self.n);
        for (u, v, w) in &self.edges {
            let w = QuadExt::from_rational(w.clone());
            m[(*u, *v)] = w.clone();
            m[(*v, *u)] = w;
        }
        for (v, w) in &self.loops {
            m[(*v, *v)] = QuadExt::from_rational(w.clone());
        }
        m
    }

    pub fn adjacency_f64(&self) -> nalgebra::DMatrix<f64> {
        let mut m = nalgebra::DMatrix::zeros(self.n, self.n);
        for (u, v, w) in &self.edges {
            let w = crate::exact::quad::rational_to_f64(w);
            m[(*u, *v)] = w;
            m[(*v, *u)] = w;
        }
        for (v, w) in &self.loops {
            m[(*v, *v)] = crate::exact::quad::rational_to_f64(w);
        }
        m
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for (u, v, _) in &self.edges {
            deg[*u] += 1;
            deg[*v] += 1;
        }
        deg
    }

    /// Unweighted neighbor lists over the support of the adjacency.
    fn support_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v, w) in &self.edges {
            if !w.is_zero() {
                adj[*u].push(*v);
                adj[*v].push(*u);
            }
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.support_neighbors();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }
}

/// How the perturbation strength enters the pipeline.
#[derive(Clone, Debug, PartialEq)]
pub enum QMode {
    /// `Q` is an exact indeterminate; transcendence is structural.
    Symbolic,
    /// `Q` fixed to a floating-point stand-in (the numeric path).
    Numeric(f64),
}

/// The revival subset `K` together with the perturbation mode. The ordering
/// of `K` is fixed and preserved in all `K x K` submatrices.
#[derive(Clone, Debug, PartialEq)]
pub struct RevivalSite {
    k: Vec<usize>,
    pub q_mode: QMode,
}

impl RevivalSite {
    pub fn new(k: Vec<usize>, n: usize, q_mode: QMode) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::InvalidParameter("K must be nonempty".into()));
        }
        let mut seen = BTreeSet::new();
        for &v in &k {
            if v >= n {
                return Err(Error::InvalidParameter(format!("K contains {v} >= n = {n}")));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidParameter(format!("K repeats vertex {v}")));
            }
        }
        Ok(Self { k, q_mode })
    }

    pub fn symbolic(k: Vec<usize>, n: usize) -> Result<Self> {
        Self::new(k, n, QMode::Symbolic)
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }

    pub fn with_numeric_q(&self, q: f64) -> Self {
        Self { k: self.k.clone(), q_mode: QMode::Numeric(q) }
    }

    /// `M + q D_K` as floats for a concrete `q`.
    pub fn perturbed_f64(&self, g: &WeightedGraph, q: f64) -> nalgebra::DMatrix<f64> {
        let mut m = g.adjacency_f64();
        for &v in &self.k {
            m[(v, v)] += q;
        }
        m
    }
}

/// A claimed weighted-graph automorphism of finite order.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicAction {
    pub r: usize,
    perm: Vec<usize>,
}

impl CyclicAction {
    pub fn new(r: usize, perm: Vec<usize>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameter("cyclic order must be >= 2".into()));
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        Ok(Self { r, perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    /// Orbit of a vertex, in traversal order.
    pub fn orbit_of(&self, v: usize) -> Vec<usize> {
        let mut orbit = vec![v];
        let mut cur = self.perm[v];
        while cur != v {
            orbit.push(cur);
            cur = self.perm[cur];
        }
        orbit
    }

    /// Exact multiplicative order of the permutation.
    pub fn order(&self) -> usize {
        let n = self.perm.len();
        let mut cur: Vec<usize> = (0..n).collect();
        for step in 1..=n * n {
            cur = cur.iter().map(|&v| self.perm[v]).collect();
            if cur.iter().enumerate().all(|(i, &v)| i == v) {
                return step;
            }
        }
        unreachable!("permutation order divides n!")
    }
}

/// True iff the weighted adjacency (edges and loops) is invariant under the
/// permutation and the permutation has exact order `r`.
pub fn verify_automorphism(g: &WeightedGraph, action: &CyclicAction) -> bool {
    if action.perm.len() != g.n() {
        return false;
    }
    if action.order() != action.r {
        return false;
    }
    let m = g.adjacency_exact();
    for i in 0..g.n() {
        for j in 0..g.n() {
            if m[(i, j)] != m[(action.apply(i), action.apply(j))] {
                return false;
            }
        }
    }
    true
}

/// Largest hop distance from any vertex to the nearest element of `K`,
/// on the unweighted support. Errors if the graph is disconnected.
pub fn eccentricity_to_set(g: &WeightedGraph, k: &[usize]) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let adj = {
        let mut adj = vec![Vec::new(); g.n()];
        for (u, v, w) in g.edges() {
            if !w.is_zero() {
                adj[*u].push(*v);
                adj[*v].push(*u);
            }
        }
        adj
    };
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for &v in k {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    Ok(dist.into_iter().max().unwrap_or(0))
}

// ---------------------------------------------------------------------------
// Generator families.

fn one() -> BigRational {
    BigRational::one()
}

/// Path with `2k+1` edges and a loop of weight `m` at vertex `k`;
/// `K` is the pair of path endpoints.
pub fn build_s_family(k: usize, m: BigRational) -> Result<(WeightedGraph, RevivalSite)> {
    if k < 1 {
        return Err(Error::InvalidParameter("s-family needs k >= 1".into()));
    }
    let n = 2 * k + 2;
    let edges = (0..n - 1).map(|i| (i, i + 1, one())).collect();
    let mut g = WeightedGraph::new(n, edges, vec![(k, m)])?;
    g.set_role(0, "u");
    g.set_role(n - 1, "v");
    let site = RevivalSite::symbolic(vec![0, n - 1], n)?;
    Ok((g, site))
}

/// Path with `2k+1` edges plus a vertex `x` adjacent to path vertices `k-1`
/// and `k`, and a pendant vertex `b` adjacent to path vertex `k+2`;
/// `K` is the pair of path endpoints. The placement is the one reproducing
/// the walk-count table checked by the regression suite.
pub fn build_t_family(k: usize) -> Result<(WeightedGraph, RevivalSite)> {
    if k < 1 {
        return Err(Error::InvalidParameter("t-family needs k >= 1".into()));
    }
    let path_len = 2 * k + 2; // vertices 0..=2k+1
    let x = path_len; // index 2k+2
    let b = path_len + 1; // index 2k+3
    let n = 2 * k + 4;
    let mut edges: Vec<(usize, usize, BigRational)> =
        (0..path_len - 1).map(|i| (i, i + 1, one())).collect();
    edges.push((x, k - 1, one()));
    edges.push((x, k, one()));
    edges.push((b, k + 2, one()));
    let mut g = WeightedGraph::new(n, edges, vec![])?;
    g.set_role(0, "u");
    g.set_role(path_len - 1, "v");
    g.set_role(x, "x");
    g.set_role(b, "b");
    g.set_role(k - 1, "z");
    g.set_role(k, "y");
    g.set_role(k + 2, "a");
    let site = RevivalSite::symbolic(vec![0, path_len - 1], n)?;
    Ok((g, site))
}

/// Which orbit of the diamond-cycle automorphism becomes `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiamondOrbit {
    /// Cycle vertices `c_i` (degree 5).
    Cycle,
    /// Diamond apexes `d_i` (degree 3).
    D,
    /// Pendant-triangle vertices `e_i` (degree 2).
    E,
}

/// Cycle `C_r` with a diamond (two triangles sharing an edge) along each
/// cycle edge: `d_i ~ c_i, c_{i+1}, e_i` and `e_i ~ c_i, d_i`. Vertices are
/// ordered `(c_0..c_{r-1}, d_0..d_{r-1}, e_0..e_{r-1})` and the returned
/// action shifts all three orbits by one.
pub fn build_diamond_cycle_orbit(
    r: usize,
    orbit: DiamondOrbit,
) -> Result<(WeightedGraph, RevivalSite, CyclicAction)> {
    if r < 3 {
        return Err(Error::InvalidParameter("diamond cycle needs r >= 3".into()));
    }
    let n = 3 * r;
    let c = |i: usize| i % r;
    let d = |i: usize| r + i % r;
    let e = |i: usize| 2 * r + i % r;
    let mut edges = Vec::new();
    for i in 0..r {
        edges.push((c(i), c(i + 1), one()));
        edges.push((d(i), c(i), one()));
        edges.push((d(i), c(i + 1), one()));
        edges.push((d(i), e(i), one()));
        edges.push((e(i), c(i), one()));
    }
    let mut g = WeightedGraph::new(n, edges, vec![])?;
    for i in 0..r {
        g.set_role(c(i), format!("c{i}"));
        g.set_role(d(i), format!("d{i}"));
        g.set_role(e(i), format!("e{i}"));
    }
    let mut perm = vec![0usize; n];
    for i in 0..r {
        perm[c(i)] = c(i + 1);
        perm[d(i)] = d(i + 1);
        perm[e(i)] = e(i + 1);
    }
    let action = CyclicAction::new(r, perm)?;
    let k: Vec<usize> = match orbit {
        DiamondOrbit::Cycle => (0..r).collect(),
        DiamondOrbit::D => (r..2 * r).collect(),
        DiamondOrbit::E => (2 * r..3 * r).collect(),
    };
    let site = RevivalSite::symbolic(k, n)?;
    Ok((g, site, action))
}

/// Diamond cycle with the default `K` = cycle orbit.
pub fn build_diamond_cycle(r: usize) -> Result<(WeightedGraph, RevivalSite, CyclicAction)> {
    build_diamond_cycle_orbit(r, DiamondOrbit::Cycle)
}

/// Glues `g2` onto `g1`, identifying `g2`-vertex `from` with `g1`-vertex
/// `to` for every pair `(from, to)` in `identify`. The identified set plays
/// the role of `K`; weights on coinciding edges and loops add. Returns the
/// glued graph and the mapping from `g2` indices to glued indices.
pub fn glue(
    g1: &WeightedGraph,
    g2: &WeightedGraph,
    identify: &[(usize, usize)],
) -> Result<(WeightedGraph, Vec<usize>)> {
    let mut from_seen = BTreeSet::new();
    let mut to_seen = BTreeSet::new();
    for &(from, to) in identify {
        if from >= g2.n() || to >= g1.n() {
            return Err(Error::InvalidGluing("identified vertex out of range".into()));
        }
        if !from_seen.insert(from) || !to_seen.insert(to) {
            return Err(Error::InvalidGluing(
                "identification collides two distinct vertices of the same input".into(),
            ));
        }
    }
    let map2: BTreeMap<usize, usize> = identify.iter().map(|&(f, t)| (f, t)).collect();
    let mut embed2 = vec![usize::MAX; g2.n()];
    let mut next = g1.n();
    for v in 0..g2.n() {
        embed2[v] = match map2.get(&v) {
            Some(&t) => t,
            None => {
                let idx = next;
                next += 1;
                idx
            }
        };
    }
    let n = next;

    // Sum the two embedded adjacencies.
    let mut edge_weights: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
    let mut loop_weights: BTreeMap<usize, BigRational> = BTreeMap::new();
    for (u, v, w) in g1.edges() {
        *edge_weights.entry((*u.min(v), *u.max(v))).or_insert_with(BigRational::zero) +=
            w.clone();
    }
    for (v, w) in g1.loops() {
        *loop_weights.entry(*v).or_insert_with(BigRational::zero) += w.clone();
    }
    for (u, v, w) in g2.edges() {
        let (eu, ev) = (embed2[*u], embed2[*v]);
        *edge_weights.entry((eu.min(ev), eu.max(ev))).or_insert_with(BigRational::zero) +=
            w.clone();
    }
    for (v, w) in g2.loops() {
        *loop_weights.entry(embed2[*v]).or_insert_with(BigRational::zero) += w.clone();
    }

    let edges = edge_weights.into_iter().map(|((u, v), w)| (u, v, w)).collect();
    let loops = loop_weights.into_iter().collect();
    Ok((WeightedGraph::new(n, edges, loops)?, embed2))
}

// ---------------------------------------------------------------------------
// Graph file format.

/// The on-disk JSON form: weights are exact decimal/fraction strings and `q`
/// is either the literal "symbolic" or a decimal value. The optional `action`
/// field carries a cyclic symmetry (image list plus order) for inputs whose
/// certification route needs one; generators that know their symmetry emit it.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize, String)>,
    pub loops: Vec<(usize, String)>,
    #[serde(rename = "K")]
    pub k: Vec<usize>,
    pub q: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionFile>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ActionFile {
    pub r: usize,
    pub perm: Vec<usize>,
}

impl GraphFile {
    pub fn from_parts(
        g: &WeightedGraph,
        site: &RevivalSite,
        action: Option<&CyclicAction>,
    ) -> Self {
        Self {
            n: g.n(),
            edges: g
                .edges()
                .iter()
                .map(|(u, v, w)| (*u, *v, format_rational(w)))
                .collect(),
            loops: g.loops().iter().map(|(v, w)| (*v, format_rational(w))).collect(),
            k: site.k().to_vec(),
            q: match site.q_mode {
                QMode::Symbolic => "symbolic".to_string(),
                QMode::Numeric(q) => format!("{q:.15e}"),
            },
            action: action.map(|a| ActionFile { r: a.r, perm: a.perm().to_vec() }),
        }
    }

    pub fn into_parts(&self) -> Result<(WeightedGraph, RevivalSite, Option<CyclicAction>)> {
        let edges = self
            .edges
            .iter()
            .map(|(u, v, w)| Ok((*u, *v, parse_rational(w)?)))
            .collect::<Result<Vec<_>>>()?;
        let loops = self
            .loops
            .iter()
            .map(|(v, w)| Ok((*v, parse_rational(w)?)))
            .collect::<Result<Vec<_>>>()?;
        let g = WeightedGraph::new(self.n, edges, loops)?;
        let q_mode = if self.q == "symbolic" {
            QMode::Symbolic
        } else {
            let q: f64 = self.q.parse().map_err(|_| {
                Error::Parse(format!("q must be \"symbolic\" or a decimal, got {:?}", self.q))
            })?;
            QMode::Numeric(q)
        };
        let site = RevivalSite::new(self.k.clone(), self.n, q_mode)?;
        let action = match &self.action {
            Some(a) => Some(CyclicAction::new(a.r, a.perm.clone())?),
            None => None,
        };
        Ok((g, site, action))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph file serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical content hash used in certificates.
    pub fn input_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let canonical = serde_json::to_string(self).expect("graph file serializes");
        let mut hasher = Sha256::new();
        hasher.update(canonical.as_bytes());
        let digest = hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn s_family_shapes() {
        let (g, site) = build_s_family(1, rat(1)).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.loops(), &[(1, rat(1))]);
        assert_eq!(site.k(), &[0, 3]);

        let (g, site) = build_s_family(2, rat(3)).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.loops(), &[(2, rat(3))]);
        assert_eq!(site.k(), &[0, 5]);

        assert!(build_s_family(0, rat(1)).is_err());
    }

    #[test]
    fn t_family_shapes() {
        let (g, site) = build_t_family(2).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(site.k(), &[0, 5]);
        // x = 6 adjacent to 1 and 2; b = 7 adjacent to 4.
        let m = g.adjacency_exact();
        assert!(!m[(6, 1)].is_zero() && !m[(6, 2)].is_zero());
        assert!(!m[(7, 4)].is_zero());
        assert_eq!(g.role(6), Some("x"));

        // Boundary: k = 1 puts x adjacent to u = 0 and vertex 1.
        let (g, _) = build_t_family(1).unwrap();
        assert_eq!(g.n(), 6);
        let m = g.adjacency_exact();
        assert!(!m[(4, 0)].is_zero() && !m[(4, 1)].is_zero());

        assert!(build_t_family(0).is_err());
    }

    #[test]
    fn t_family_walk_counts_k2() {
        // (M^2)_{u,y} = 1 and (M^4)_{u,y} = k + 3 = 5 for k = 2.
        let (g, _) = build_t_family(2).unwrap();
        let m = g.adjacency_exact();
        let pows = m.powers(5);
        let y = 2; // vertex role y = path vertex k
        assert_eq!(pows[2][(0, y)], QuadExt::one());
        assert_eq!(pows[4][(0, y)], QuadExt::from_int(5));
    }

    #[test]
    fn diamond_cycle_structure() {
        let (g, site, action) = build_diamond_cycle(5).unwrap();
        assert_eq!(g.n(), 15);
        assert_eq!(site.k(), &[0, 1, 2, 3, 4]);
        let mut deg = g.degree_sequence();
        deg.sort_unstable();
        let mut expected = vec![2usize; 5];
        expected.extend(vec![3usize; 5]);
        expected.extend(vec![5usize; 5]);
        assert_eq!(deg, expected);
        assert!(verify_automorphism(&g, &action));

        // Subblock coupling the d orbit to the c orbit: circulant with ones
        // on the diagonal and superdiagonal (wrap-around).
        let m = g.adjacency_exact();
        let r = 5;
        for i in 0..r {
            for j in 0..r {
                let expected = j == i || j == (i + 1) % r;
                assert_eq!(!m[(r + i, j)].is_zero(), expected, "(d{i}, c{j})");
            }
        }

        // r = 3: every e_i has exactly the neighbors c_i and d_i.
        let (g, _, _) = build_diamond_cycle(3).unwrap();
        let m = g.adjacency_exact();
        for i in 0..3 {
            let e = 6 + i;
            let neighbors: Vec<usize> =
                (0..9).filter(|&j| !m[(e, j)].is_zero()).collect();
            assert_eq!(neighbors, vec![i, 3 + i]);
        }

        assert!(build_diamond_cycle(2).is_err());
    }

    #[test]
    fn glue_paths_into_cycle() {
        // Two paths 0-1-2 glued at both endpoints form a 4-cycle.
        let p3 = WeightedGraph::new(3, vec![(0, 1, rat(1)), (1, 2, rat(1))], vec![]).unwrap();
        let (c4, embed) = glue(&p3, &p3, &[(0, 0), (2, 2)]).unwrap();
        assert_eq!(c4.n(), 4);
        assert_eq!(embed, vec![0, 3, 2]);
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn glue_adds_weights() {
        let e = WeightedGraph::new(2, vec![(0, 1, rat(1))], vec![]).unwrap();
        let (doubled, _) = glue(&e, &e, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(doubled.n(), 2);
        assert_eq!(doubled.edges(), &[(0, 1, rat(2))]);
    }

    #[test]
    fn glue_rejects_collisions() {
        let e = WeightedGraph::new(2, vec![(0, 1, rat(1))], vec![]).unwrap();
        assert!(matches!(glue(&e, &e, &[(0, 0), (1, 0)]), Err(Error::InvalidGluing(_))));
        assert!(matches!(glue(&e, &e, &[(0, 0), (0, 1)]), Err(Error::InvalidGluing(_))));
    }

    #[test]
    fn eccentricity_examples() {
        // Wheel: C_5 plus a hub adjacent to every cycle vertex.
        let mut edges = Vec::new();
        for i in 0..5usize {
            edges.push((i, (i + 1) % 5, rat(1)));
            edges.push((i, 5, rat(1)));
        }
        let wheel = WeightedGraph::new(6, edges, vec![]).unwrap();
        assert_eq!(eccentricity_to_set(&wheel, &[0, 1, 2, 3, 4]).unwrap(), 1);

        let (g5, site, _) = build_diamond_cycle(5).unwrap();
        assert_eq!(eccentricity_to_set(&g5, site.k()).unwrap(), 1);

        let p3 = WeightedGraph::new(3, vec![(0, 1, rat(1)), (1, 2, rat(1))], vec![]).unwrap();
        assert_eq!(eccentricity_to_set(&p3, &[0]).unwrap(), 2);

        let disconnected =
            WeightedGraph::new(3, vec![(0, 1, rat(1))], vec![]).unwrap();
        assert!(matches!(eccentricity_to_set(&disconnected, &[0]), Err(Error::NotConnected)));
    }

    #[test]
    fn automorphism_checks() {
        // Path end-swap has order 2.
        let p3 = WeightedGraph::new(3, vec![(0, 1, rat(1)), (1, 2, rat(1))], vec![]).unwrap();
        let swap = CyclicAction::new(2, vec![2, 1, 0]).unwrap();
        assert!(verify_automorphism(&p3, &swap));

        // Identity claimed with order 2 is rejected.
        let id = CyclicAction::new(2, vec![0, 1, 2]).unwrap();
        assert!(!verify_automorphism(&p3, &id));
    }

    #[test]
    fn graph_file_round_trip() {
        let (g, site, action) = build_diamond_cycle(3).unwrap();
        let file = GraphFile::from_parts(&g, &site, Some(&action));
        let json = file.to_json();
        let parsed = GraphFile::from_json(&json).unwrap();
        let (g2, site2, action2) = parsed.into_parts().unwrap();
        assert_eq!(g, g2);
        assert_eq!(site, site2);
        assert_eq!(action2.as_ref(), Some(&action));
        assert_eq!(file.input_hash(), parsed.input_hash());
    }
}
