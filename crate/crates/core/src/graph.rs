//! Simple undirected graphs on the vertex set `1..=n`, labelings, and the
//! bipartite "star" transform that turns each edge `{i, j}` with `i < j`
//! into the edge `x_i y_j`.
//!
//! Vertices are always 1-based. The neighbor order stored for each vertex is
//! part of the input: it defaults to ascending ids and is transported by
//! relabeling. Caterpillar labelings read it as the left-to-right order of
//! leaves.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph with ascending neighbor order.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_adjacency_order(n, edges, &BTreeMap::new())
    }

    /// Builds a graph, taking the neighbor order of every vertex listed in
    /// `order` from there (it must be a permutation of that vertex's
    /// neighbors). Unlisted vertices get ascending order.
    pub fn with_adjacency_order(
        n: usize,
        edges: &[(usize, usize)],
        order: &BTreeMap<usize, Vec<usize>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut matrix = vec![false; n * n];
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if matrix[(a - 1) * n + (b - 1)] {
                return Err(Error::DuplicateEdge(a, b));
            }
            matrix[(a - 1) * n + (b - 1)] = true;
            matrix[(b - 1) * n + (a - 1)] = true;
            canon.push((a, b));
        }
        canon.sort_unstable();
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adjacency[a - 1].push(b);
            adjacency[b - 1].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        for (&v, wanted) in order {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let mut sorted = wanted.clone();
            sorted.sort_unstable();
            if sorted != adjacency[v - 1] {
                return Err(Error::BadAdjacencyOrder {
                    vertex: v,
                    reason: format!(
                        "{wanted:?} is not a permutation of the neighbors {:?}",
                        adjacency[v - 1]
                    ),
                });
            }
            adjacency[v - 1] = wanted.clone();
        }
        Ok(Graph {
            n,
            edges: canon,
            adjacency,
            matrix,
        })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).expect("complete graph edges are valid")
    }

    /// Star with the given center and every other vertex a leaf.
    pub fn star(n: usize, center: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=n).filter(|&v| v != center).map(|v| (center, v)).collect();
        Graph::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors in stored order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.matrix[(u - 1) * self.n + (v - 1)]
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Neighbor orders that differ from ascending order.
    pub fn custom_adjacency_order(&self) -> BTreeMap<usize, Vec<usize>> {
        self.vertices()
            .filter(|&v| self.adjacency[v - 1].windows(2).any(|w| w[0] > w[1]))
            .map(|v| (v, self.adjacency[v - 1].clone()))
            .collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Neighbor sets as bit masks (bit `v - 1` stands for vertex `v`).
    /// Returns `None` when `n > 64`.
    pub(crate) fn masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | 1 << (w - 1)))
                .collect(),
        )
    }

    /// Renames vertex `v` to `lab.label(v)`; neighbor order is carried over.
    pub fn relabel(&self, lab: &Labeling) -> Result<Graph> {
        if lab.len() != self.n {
            return Err(Error::SizeMismatch {
                labeling: lab.len(),
                graph: self.n,
            });
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (lab.label(u), lab.label(v)))
            .collect();
        let order: BTreeMap<_, _> = self
            .vertices()
            .map(|v| {
                (
                    lab.label(v),
                    self.neighbors(v).iter().map(|&w| lab.label(w)).collect(),
                )
            })
            .collect();
        Graph::with_adjacency_order(self.n, &edges, &order)
    }

    /// BFS distances from `u`; `None` marks unreachable vertices. Index 0 is unused.
    pub fn distances_from(&self, u: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n + 1];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &w in self.neighbors(x) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// All-pairs distances, `table[u][v]`, 1-based.
    pub fn distance_table(&self) -> Vec<Vec<Option<usize>>> {
        let mut table = vec![Vec::new()];
        for u in self.vertices() {
            table.push(self.distances_from(u));
        }
        table
    }

    /// Shortest path from `u` to `v` (smallest-id parents), if any.
    pub fn shortest_path(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut parent = vec![0usize; self.n + 1];
        let mut seen = vec![false; self.n + 1];
        seen[u] = true;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            let mut next: Vec<usize> = self.neighbors(x).to_vec();
            next.sort_unstable();
            for w in next {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        if !seen[v] {
            return None;
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }

    /// Connected components of the subgraph induced on the vertices outside
    /// `removed`: each component sorted, the list sorted by minimum element.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut gone = vec![false; self.n + 1];
        for &v in removed {
            if v >= 1 && v <= self.n {
                gone[v] = true;
            }
        }
        let mut comps = Vec::new();
        for start in self.vertices() {
            if gone[start] {
                continue;
            }
            gone[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &w in self.neighbors(x) {
                    if !gone[w] {
                        gone[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && self.vertices().all(|v| self.degree(v) <= 2)
    }

    pub fn is_caterpillar(&self) -> bool {
        if !self.is_tree() {
            return false;
        }
        self.vertices().filter(|&v| self.degree(v) >= 2).all(|v| {
            self.neighbors(v)
                .iter()
                .filter(|&&w| self.degree(w) >= 2)
                .count()
                <= 2
        })
    }

    /// Edges whose removal disconnects their component (low-link DFS).
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in self.vertices() {
            if disc[root] != 0 {
                continue;
            }
            timer += 1;
            disc[root] = timer;
            low[root] = timer;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, 0usize, 0usize)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.degree(v) {
                    let w = self.neighbors(v)[*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == 0 {
                        timer += 1;
                        disc[w] = timer;
                        low[w] = timer;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != 0 {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn triangle_count(&self) -> usize {
        self.edges
            .iter()
            .map(|&(u, v)| {
                (v + 1..=self.n)
                    .filter(|&w| self.has_edge(u, w) && self.has_edge(v, w))
                    .count()
            })
            .sum()
    }

    pub fn classify(&self) -> Classification {
        let degrees: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let is_connected = self.is_connected();
        Classification {
            n: self.n,
            edges: self.edges.len(),
            is_connected,
            is_tree: self.is_tree(),
            is_path: self.is_path_graph(),
            is_cycle: is_connected && self.n >= 3 && degrees.iter().all(|&d| d == 2),
            is_caterpillar: self.is_caterpillar(),
            bridges: self.bridges(),
            triangles: self.triangle_count(),
        }
    }

    /// Graph on the same vertices joining every pair at distance 1 or 2.
    pub fn square(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in self.vertices() {
            for &w in self.neighbors(u) {
                edges.insert((u.min(w), u.max(w)));
                for &x in self.neighbors(w) {
                    if x != u {
                        edges.insert((u.min(x), u.max(x)));
                    }
                }
            }
        }
        let edges: Vec<_> = edges.into_iter().collect();
        Graph::new(self.n, &edges).expect("square of a valid graph is valid")
    }

    pub fn star_transform(&self) -> BipartiteStar {
        BipartiteStar {
            n: self.n,
            star_edges: self.edges.iter().copied().collect(),
        }
    }

    /// Subgraph induced on `keep` (any order). Vertex `k` of the result is
    /// `keep_sorted[k - 1]`; the returned vector is that map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![0usize; self.n + 1];
        for (k, &v) in keep.iter().enumerate() {
            index[v] = k + 1;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != 0 && index[v] != 0)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let order: BTreeMap<_, _> = keep
            .iter()
            .map(|&v| {
                (
                    index[v],
                    self.neighbors(v)
                        .iter()
                        .filter(|&&w| index[w] != 0)
                        .map(|&w| index[w])
                        .collect(),
                )
            })
            .collect();
        let g = Graph::with_adjacency_order(keep.len().max(1), &edges, &order)
            .expect("induced subgraph of a valid graph is valid");
        (g, keep)
    }

    /// Farthest vertex from `from` within its component, ties to the smallest id.
    fn farthest(&self, from: usize) -> (usize, usize) {
        let dist = self.distances_from(from);
        let mut best = (from, 0);
        for v in self.vertices() {
            if let Some(d) = dist[v] {
                if d > best.1 {
                    best = (v, d);
                }
            }
        }
        best
    }

    /// Longest path of a tree by double sweep: from vertex 1 to its farthest
    /// vertex `a`, then from `a` to its farthest vertex `b` (ties to the
    /// smallest id each time). The result runs from `min(a, b)` to `max(a, b)`.
    pub fn tree_diameter_path(&self) -> Result<Vec<usize>> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let (a, _) = self.farthest(1);
        let (b, _) = self.farthest(a);
        let (s, t) = if a <= b { (a, b) } else { (b, a) };
        Ok(self.shortest_path(s, t).expect("trees are connected"))
    }

    /// Edge count of a longest induced path. Trees use the double sweep;
    /// other graphs fall back to exhaustive search, refused above `max_n_guard`.
    pub fn longest_induced_path_length(&self, max_n_guard: usize) -> Result<usize> {
        if self.is_tree() {
            return Ok(self.tree_diameter_path()?.len() - 1);
        }
        if self.n > max_n_guard {
            return Err(Error::TooLarge {
                n: self.n,
                max: max_n_guard,
            });
        }
        Ok(self.longest_induced_path_exhaustive())
    }

    /// Exhaustive search over induced paths; exponential in `n`.
    pub fn longest_induced_path_exhaustive(&self) -> usize {
        fn extend(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], best: &mut usize) {
            *best = (*best).max(path.len() - 1);
            let last = *path.last().unwrap();
            for &w in g.neighbors(last) {
                if on[w] {
                    continue;
                }
                let chord = path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w));
                if chord {
                    continue;
                }
                on[w] = true;
                path.push(w);
                extend(g, path, on, best);
                path.pop();
                on[w] = false;
            }
        }
        let mut best = 0;
        let mut on = vec![false; self.n + 1];
        for v in self.vertices() {
            on[v] = true;
            extend(self, &mut vec![v], &mut on, &mut best);
            on[v] = false;
        }
        best
    }

    /// Every `d(i, i+1) <= 2` for `1 <= i < n`, reading vertex ids as labels.
    pub fn consecutive_labels_within_two(&self) -> bool {
        (1..self.n).all(|i| matches!(self.distances_from(i)[i + 1], Some(d) if d <= 2))
    }
}

/// Summary of structural properties.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub edges: usize,
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_caterpillar: bool,
    pub bridges: Vec<(usize, usize)>,
    pub triangles: usize,
}

/// A bijection from vertex ids `1..=n` to labels `1..=n`; `perm[v - 1]` is
/// the label of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Labeling(Vec<usize>);

impl Labeling {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted.iter().enumerate().any(|(k, &l)| l != k + 1) {
            return Err(Error::NotBijective(n));
        }
        Ok(Labeling(perm))
    }

    pub fn identity(n: usize) -> Self {
        Labeling((1..=n).collect())
    }

    /// The labeling giving label `k` to `order[k - 1]`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut perm = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            if v == 0 || v > n || perm[v - 1] != 0 {
                return Err(Error::NotBijective(n));
            }
            perm[v - 1] = k + 1;
        }
        Ok(Labeling(perm))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn label(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Vertices in label order: `order()[k - 1]` carries label `k`.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.0.len()];
        for (v, &l) in self.0.iter().enumerate() {
            order[l - 1] = v + 1;
        }
        order
    }

    /// Label `i` becomes `n - i + 1`.
    pub fn reversed(&self) -> Self {
        let n = self.0.len();
        Labeling(self.0.iter().map(|&l| n - l + 1).collect())
    }

    pub fn inverse(&self) -> Self {
        Labeling(self.order())
    }
}

/// The bipartite graph on `x_1..x_n` and `y_1..y_n` with edge `x_i y_j` for
/// every pair `(i, j)`, always `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteStar {
    n: usize,
    star_edges: BTreeSet<(usize, usize)>,
}

impl BipartiteStar {
    pub fn new(n: usize, star_edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(i, j) in star_edges {
            for w in [i, j] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if i >= j {
                return Err(Error::BadPair(i, j));
            }
            if !set.insert((i, j)) {
                return Err(Error::DuplicateEdge(i, j));
            }
        }
        Ok(BipartiteStar { n, star_edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.star_edges.len()
    }

    /// Pairs `(i, j)` standing for `x_i y_j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.star_edges.iter().copied()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.star_edges.contains(&(i, j))
    }

    /// The graph on `1..=n` with `{i, j}` for every `x_i y_j`.
    pub fn unstar(&self) -> Graph {
        let edges: Vec<_> = self.edges().collect();
        Graph::new(self.n.max(1), &edges).expect("star edges are valid")
    }

    /// The bipartite graph itself on `2n` vertices: `x_i` is `i`, `y_j` is `n + j`.
    pub fn to_graph(&self) -> Graph {
        let edges: Vec<_> = self.edges().map(|(i, j)| (i, self.n + j)).collect();
        Graph::new((2 * self.n).max(1), &edges).expect("star edges are valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::new(3, &[(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            Graph::new(3, &[(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert!(Graph::new(0, &[]).is_err());
    }

    #[test]
    fn build_canonicalizes() {
        let g = Graph::new(4, &[(4, 3), (2, 1), (3, 2), (1, 4)]).unwrap();
        assert_eq!(g, c4());
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert_eq!(g.neighbors(1), &[2, 4]);
    }

    #[test]
    fn adjacency_order_is_validated_and_kept() {
        let order = BTreeMap::from([(2, vec![3, 1])]);
        let g = Graph::with_adjacency_order(3, &[(1, 2), (2, 3)], &order).unwrap();
        assert_eq!(g.neighbors(2), &[3, 1]);
        assert_eq!(g.custom_adjacency_order(), order);
        let bad = BTreeMap::from([(2, vec![3])]);
        assert!(matches!(
            Graph::with_adjacency_order(3, &[(1, 2), (2, 3)], &bad),
            Err(Error::BadAdjacencyOrder { vertex: 2, .. })
        ));
    }

    #[test]
    fn relabel_examples() {
        let g = p3();
        assert_eq!(g.relabel(&Labeling::identity(3)).unwrap(), g);
        let swapped = g.relabel(&Labeling::new(vec![1, 3, 2]).unwrap()).unwrap();
        assert_eq!(swapped.edges(), &[(1, 3), (2, 3)]);
        assert!(Labeling::new(vec![1, 1, 2]).is_err());
        assert!(g.relabel(&Labeling::identity(4)).is_err());
    }

    #[test]
    fn relabel_transports_adjacency_order() {
        let order = BTreeMap::from([(2, vec![3, 1])]);
        let g = Graph::with_adjacency_order(3, &[(1, 2), (2, 3)], &order).unwrap();
        let h = g.relabel(&Labeling::new(vec![2, 1, 3]).unwrap()).unwrap();
        assert_eq!(h.neighbors(1), &[3, 2]);
    }

    #[test]
    fn distances() {
        let g = p3();
        assert_eq!(g.distance(1, 3).unwrap(), Some(2));
        assert_eq!(g.distance(2, 2).unwrap(), Some(0));
        let apart = Graph::new(2, &[]).unwrap();
        assert_eq!(apart.distance(1, 2).unwrap(), None);
        assert!(g.distance(0, 1).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(p3().components_without(&[2]), vec![vec![1], vec![3]]);
        assert_eq!(p3().components_without(&[]), vec![vec![1, 2, 3]]);
        assert_eq!(c4().components_without(&[1, 3]), vec![vec![2], vec![4]]);
    }

    #[test]
    fn classify_small_graphs() {
        let k3 = Graph::complete(3);
        let c = k3.classify();
        assert_eq!(c.triangles, 1);
        assert!(c.is_cycle && !c.is_tree && c.bridges.is_empty());
        let c = p3().classify();
        assert!(c.is_tree && c.is_path && c.is_caterpillar);
        assert_eq!(c.bridges, vec![(1, 2), (2, 3)]);
        let c = c4().classify();
        assert!(c.is_cycle && c.bridges.is_empty() && c.triangles == 0);
        let apart = Graph::new(3, &[(1, 2)]).unwrap().classify();
        assert!(!apart.is_connected && !apart.is_tree);
        assert_eq!(apart.bridges, vec![(1, 2)]);
    }

    #[test]
    fn square_examples() {
        assert_eq!(p3().square(), Graph::complete(3));
        assert_eq!(c4().square(), Graph::complete(4));
        assert_eq!(Graph::star(4, 1).unwrap().square(), Graph::complete(4));
        for n in 2..10 {
            assert_eq!(Graph::path(n).square().edge_count(), 2 * n - 3);
        }
    }

    #[test]
    fn star_transform_examples() {
        let s = p3().star_transform();
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        let s = Graph::complete(3).star_transform();
        assert_eq!(s.edges().collect::<Vec<_>>(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(s.unstar(), Graph::complete(3));
        assert_eq!(BipartiteStar::new(3, &[(2, 1)]), Err(Error::BadPair(2, 1)));
        let bip = s.to_graph();
        assert_eq!(bip.n(), 6);
        assert!(bip.has_edge(1, 5));
    }

    #[test]
    fn longest_induced_paths() {
        for n in 1..8 {
            assert_eq!(Graph::path(n).longest_induced_path_length(0).unwrap(), n - 1);
        }
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.longest_induced_path_length(9).unwrap(), 3);
        assert_eq!(
            c5.longest_induced_path_length(4),
            Err(Error::TooLarge { n: 5, max: 4 })
        );
        assert_eq!(Graph::complete(5).longest_induced_path_exhaustive(), 1);
    }

    #[test]
    fn diameter_path_orientation() {
        let star = Graph::star(4, 2).unwrap();
        assert_eq!(star.tree_diameter_path().unwrap(), vec![1, 2, 3]);
        assert_eq!(Graph::path(5).tree_diameter_path().unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(Graph::new(1, &[]).unwrap().tree_diameter_path().unwrap(), vec![1]);
    }

    #[test]
    fn labeling_helpers() {
        let lab = Labeling::new(vec![3, 1, 2]).unwrap();
        assert_eq!(lab.order(), vec![2, 3, 1]);
        assert_eq!(Labeling::from_order(&[2, 3, 1]).unwrap(), lab);
        assert_eq!(lab.reversed().as_slice(), &[1, 3, 2]);
        assert_eq!(lab.reversed().reversed(), lab);
        assert_eq!(lab.inverse().inverse(), lab);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let (h, map) = c4().induced_subgraph(&[4, 1, 2]);
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edges(), &[(1, 2), (1, 3)]);
    }
}
