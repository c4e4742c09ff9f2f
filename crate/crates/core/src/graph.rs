use std::collections::VecDeque;

use crate::error::GraphError;

/// Undirected simple graph on the vertices `0..n`.
///
/// Neighbor lists are kept sorted; every vertex also owns a bit-row so that
/// edge tests are a single word lookup.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph { n, adj: vec![Vec::new(); n], words, bits: vec![0; n * words] }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        for v in 0..n {
            let row = &g.bits[v * g.words..(v + 1) * g.words];
            let mut list = Vec::new();
            for (wi, &word) in row.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let b = w.trailing_zeros() as usize;
                    list.push(wi * 64 + b);
                    w &= w - 1;
                }
            }
            g.adj[v] = list;
        }
        Ok(g)
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Bit-row of `v`: bit `u` is set iff `uv` is an edge.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| self.adj[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Maximum of `d(x) + d(y)` over edges `xy`; 0 for an edgeless graph.
    pub fn ore_degree(&self) -> usize {
        self.edges().map(|(u, v)| self.degree(u) + self.degree(v)).max().unwrap_or(0)
    }

    /// Number of edges between `v` and the vertex set `set`.
    pub fn edges_to(&self, v: usize, set: &[usize]) -> usize {
        set.iter().filter(|&&u| self.has_edge(v, u)).count()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter(move |&&u| index[u] != usize::MAX && index[u] > i)
                .map(move |&u| (i, index[u]))
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>()).expect("induced subgraph")
    }

    /// Disjoint union, `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self.edges().chain(other.edges().map(|(u, v)| (u + off, v + off))).collect::<Vec<_>>();
        Graph::from_edges(self.n + other.n, edges).expect("union of valid graphs")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// Smallest-last ordering: repeatedly remove a vertex of minimum
    /// remaining degree (lowest index on ties). Returns the removal order
    /// reversed, so each vertex has at most `degeneracy` earlier neighbors.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.n;
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
            removed[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        order.reverse();
        order
    }

    pub fn degeneracy(&self) -> usize {
        let order = self.degeneracy_order();
        let mut pos = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        (0..self.n).map(|v| self.adj[v].iter().filter(|&&u| pos[u] < pos[v]).count()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub ore_degree: usize,
    pub min_degree: usize,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    DegreeStats { max_degree: g.max_degree(), ore_degree: g.ore_degree(), min_degree: g.min_degree() }
}
