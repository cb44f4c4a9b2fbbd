//! Labelings of caterpillar trees with `d(i, i+1) <= 2` for every `i`, and
//! ways of gluing such labelings across bridges.
//!
//! A caterpillar is a tree in which every vertex lies on, or next to, one
//! path. The central path used here is the diameter path of
//! [`Graph::tree_diameter_path`]; both of its endpoints are leaves, so the
//! leaf sets `N'(v_1)` and `N'(v_l)` are empty. Leaves hanging on a path
//! vertex are taken "from the right", i.e. from the end of that vertex's
//! stored neighbor order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaterpillarDecomposition {
    /// `v_1, ..., v_l`.
    pub central_path: Vec<usize>,
    /// `leaf_neighbors[k]` lists the off-path neighbors of `central_path[k]`
    /// in stored neighbor order.
    pub leaf_neighbors: Vec<Vec<usize>>,
}

impl CaterpillarDecomposition {
    pub fn len(&self) -> usize {
        self.central_path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.central_path.is_empty()
    }

    /// 1-based position of `v` on the central path.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.central_path.iter().position(|&p| p == v).map(|k| k + 1)
    }

    /// 1-based position of the path vertex carrying leaf `v`.
    pub fn support_of(&self, v: usize) -> Option<usize> {
        self.leaf_neighbors
            .iter()
            .position(|l| l.contains(&v))
            .map(|k| k + 1)
    }

    /// Leaf counts along the path.
    pub fn leaf_counts(&self) -> Vec<usize> {
        self.leaf_neighbors.iter().map(|l| l.len()).collect()
    }

    fn reversed(&self) -> Self {
        let mut r = self.clone();
        r.central_path.reverse();
        r.leaf_neighbors.reverse();
        r
    }
}

/// Splits a caterpillar into its central path and the leaves on it.
pub fn decompose(t: &Graph) -> Result<CaterpillarDecomposition> {
    if !t.is_caterpillar() {
        return Err(Error::NotCaterpillar);
    }
    let path = t.tree_diameter_path()?;
    decompose_along(t, &path)
}

/// Decomposition along a given path of a tree; fails with `BadJoin` unless
/// every vertex is on the path or adjacent to it.
pub fn decompose_along(t: &Graph, path: &[usize]) -> Result<CaterpillarDecomposition> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    for w in path.windows(2) {
        if !t.has_edge(w[0], w[1]) {
            return Err(Error::NotAPath(w[0], w[1]));
        }
    }
    let mut on = vec![false; t.n() + 1];
    for &v in path {
        t.check_vertex(v)?;
        on[v] = true;
    }
    let leaf_neighbors: Vec<Vec<usize>> = path
        .iter()
        .map(|&v| t.neighbors(v).iter().copied().filter(|&w| !on[w]).collect())
        .collect();
    let covered = path.len() + leaf_neighbors.iter().map(Vec::len).sum::<usize>();
    if covered != t.n() || leaf_neighbors.iter().flatten().any(|&w| t.degree(w) != 1) {
        return Err(Error::BadJoin(format!(
            "path {path:?} does not carry every other vertex as a leaf"
        )));
    }
    Ok(CaterpillarDecomposition {
        central_path: path.to_vec(),
        leaf_neighbors,
    })
}

struct Labeler {
    label: Vec<usize>,
    t: usize,
}

impl Labeler {
    fn new(n: usize, t: usize) -> Self {
        Labeler {
            label: vec![0; n + 1],
            t,
        }
    }

    fn put(&mut self, v: usize) -> Result<()> {
        if self.label[v] != 0 {
            return Err(Error::PreconditionFailed(format!("vertex {v} labeled twice")));
        }
        self.label[v] = self.t;
        self.t += 1;
        Ok(())
    }

    /// Labels the still unlabeled leaves, rightmost first.
    fn leaves(&mut self, leaves: &[usize]) -> Result<()> {
        for &v in leaves.iter().rev() {
            if self.label[v] == 0 {
                self.put(v)?;
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<Labeling> {
        Labeling::new(self.label[1..].to_vec())
    }
}

fn sweep_on(n: usize, dec: &CaterpillarDecomposition) -> Result<Labeling> {
    let mut lab = Labeler::new(n, 1);
    for (k, &v) in dec.central_path.iter().enumerate() {
        lab.put(v)?;
        lab.leaves(&dec.leaf_neighbors[k])?;
    }
    lab.finish()
}

/// Labels `v_1` as 1, then each `v_j` followed by its leaves from the right.
pub fn sweep_labeling(t: &Graph) -> Result<Labeling> {
    sweep_on(t.n(), &decompose(t)?)
}

/// Where [`two_phase_labeling`] puts label 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// The start vertex lies on the central path and gets 1.
    PathStart,
    /// The start vertex is a leaf of an inner path vertex; it gets 1 and its
    /// support gets 2.
    LeafStart,
    /// Any start vertex; it gets `n`.
    AssignN,
}

/// The two-phase sweep from path position `i0`, with label `t` next to be
/// handed out. `lab` may already hold labels.
fn two_phase_core(dec: &CaterpillarDecomposition, i0: usize, mut lab: Labeler) -> Result<Labeling> {
    let l = dec.len();
    let v = |k: usize| dec.central_path[k - 1];
    let leaves = |k: usize| dec.leaf_neighbors[k - 1].as_slice();
    let mut j = i0;
    while j + 1 < l {
        lab.leaves(leaves(j + 1))?;
        lab.put(v(j + 2))?;
        j += 2;
    }
    if j + 1 == l {
        lab.put(v(l))?;
        j = l;
    } else {
        lab.put(v(l - 1))?;
        j = l - 1;
    }
    while j > 2 {
        lab.leaves(leaves(j - 1))?;
        lab.put(v(j - 2))?;
        j -= 2;
    }
    if j == 2 && i0 > 1 {
        lab.put(v(1))?;
        j = 1;
    } else if i0 > 2 {
        lab.put(v(2))?;
        j = 2;
    }
    while j + 2 < i0 {
        lab.leaves(leaves(j + 1))?;
        lab.put(v(j + 2))?;
        j += 2;
    }
    if j + 2 == i0 {
        lab.leaves(leaves(i0 - 1))?;
    }
    lab.finish()
}

/// Labeling of a caterpillar with `d(i, i+1) <= 2` built around `start`.
pub fn two_phase_labeling(t: &Graph, start: usize, variant: Variant) -> Result<Labeling> {
    let dec = decompose(t)?;
    two_phase_on(t.n(), &dec, start, variant)
}

/// [`two_phase_labeling`] on a given decomposition.
pub fn two_phase_on(
    n: usize,
    dec: &CaterpillarDecomposition,
    start: usize,
    variant: Variant,
) -> Result<Labeling> {
    if start == 0 || start > n {
        return Err(Error::VertexOutOfRange { vertex: start, n });
    }
    let l = dec.len();
    if !dec.leaf_neighbors[0].is_empty() || !dec.leaf_neighbors[l - 1].is_empty() {
        return Err(Error::PreconditionFailed(
            "central path endpoints must not carry leaves".into(),
        ));
    }
    match variant {
        Variant::PathStart => {
            let i0 = dec.position(start).ok_or_else(|| {
                Error::BadStart(format!("vertex {start} is not on the central path"))
            })?;
            if i0 == 1 {
                return sweep_on(n, dec);
            }
            if i0 == l {
                return sweep_on(n, &dec.reversed());
            }
            let mut lab = Labeler::new(n, 1);
            lab.put(start)?;
            two_phase_core(dec, i0, lab)
        }
        Variant::LeafStart => {
            let i0 = dec.support_of(start).ok_or_else(|| {
                Error::BadStart(format!("vertex {start} is not a leaf off the central path"))
            })?;
            let mut lab = Labeler::new(n, 1);
            lab.put(start)?;
            lab.put(dec.central_path[i0 - 1])?;
            two_phase_core(dec, i0, lab)
        }
        Variant::AssignN => {
            let inner = if dec.position(start).is_some() {
                Variant::PathStart
            } else {
                Variant::LeafStart
            };
            Ok(two_phase_on(n, dec, start, inner)?.reversed())
        }
    }
}

/// Label 1 at `start`, wherever it sits.
pub fn label_one_at(t: &Graph, start: usize) -> Result<Labeling> {
    let dec = decompose(t)?;
    let variant = if dec.position(start).is_some() {
        Variant::PathStart
    } else {
        Variant::LeafStart
    };
    two_phase_on(t.n(), &dec, start, variant)
}

/// Joins `h1` and `h2` by the edge `e = (a, b)`, `a` in `h1` and `b` in
/// `h2`. Vertices of `h2` are renumbered `n1 + 1 ..= n1 + n2`. Vertex `v` of
/// `h1` gets `n1 - lab1(v) + 1` and vertex `w` of `h2` gets `n1 + lab2(w)`,
/// so `a` and `b` carry the consecutive labels `n1` and `n1 + 1`.
pub fn bridge_compose(
    h1: &Graph,
    lab1: &Labeling,
    h2: &Graph,
    lab2: &Labeling,
    e: (usize, usize),
) -> Result<(Graph, Labeling)> {
    let n1 = h1.n();
    for (lab, g) in [(lab1, h1), (lab2, h2)] {
        if lab.len() != g.n() {
            return Err(Error::SizeMismatch {
                labeling: lab.len(),
                graph: g.n(),
            });
        }
    }
    let (a, b) = e;
    h1.check_vertex(a)?;
    h2.check_vertex(b)?;
    if lab1.label(a) != 1 || lab2.label(b) != 1 {
        return Err(Error::BadEndpoints(format!(
            "labels at the bridge endpoints are {} and {}, both must be 1",
            lab1.label(a),
            lab2.label(b)
        )));
    }
    let (g, _) = disjoint_union(h1, h2, &[(a, n1 + b)]);
    let mut perm: Vec<usize> = h1.vertices().map(|v| n1 - lab1.label(v) + 1).collect();
    perm.extend(h2.vertices().map(|w| n1 + lab2.label(w)));
    Ok((g, Labeling::new(perm)?))
}

/// `h1` and `h2` side by side (the latter shifted by `h1.n()`) plus the
/// given edges in combined numbering. Returns the shift.
fn disjoint_union(h1: &Graph, h2: &Graph, extra: &[(usize, usize)]) -> (Graph, usize) {
    let n1 = h1.n();
    let mut edges: Vec<(usize, usize)> = h1.edges().to_vec();
    edges.extend(h2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    edges.extend_from_slice(extra);
    let mut order = std::collections::BTreeMap::new();
    for v in h1.vertices() {
        order.insert(v, h1.neighbors(v).to_vec());
    }
    for v in h2.vertices() {
        order.insert(v + n1, h2.neighbors(v).iter().map(|w| w + n1).collect());
    }
    for &(u, v) in extra {
        order.get_mut(&u).unwrap().push(v);
        order.get_mut(&v).unwrap().push(u);
    }
    let g = Graph::with_adjacency_order(n1 + h2.n(), &edges, &order).expect("disjoint union is valid");
    (g, n1)
}

/// The two sides of a tree cut at a bridge.
#[derive(Debug, Clone)]
pub struct BridgeSplit {
    pub h1: Graph,
    /// `map1[k - 1]` is the original id of vertex `k` of `h1`.
    pub map1: Vec<usize>,
    pub h2: Graph,
    pub map2: Vec<usize>,
    /// The bridge endpoints in local numbering.
    pub a: usize,
    pub b: usize,
}

/// Removes the edge `e = (a, b)` and returns the side of `a` as `h1`, the
/// side of `b` as `h2`.
pub fn split_at_bridge(g: &Graph, e: (usize, usize)) -> Result<BridgeSplit> {
    let (a, b) = e;
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !g.has_edge(a, b) {
        return Err(Error::BadEndpoints(format!("{{{a},{b}}} is not an edge")));
    }
    let edges: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&p| p != (a.min(b), a.max(b)))
        .collect();
    let cut = Graph::new(g.n(), &edges)?;
    let side_a = cut.components().into_iter().find(|c| c.contains(&a)).unwrap();
    if side_a.contains(&b) {
        return Err(Error::BadEndpoints(format!("{{{a},{b}}} is not a bridge")));
    }
    let side_b: Vec<usize> = g.vertices().filter(|v| !side_a.contains(v)).collect();
    let (h1, map1) = g.induced_subgraph(&side_a);
    let (h2, map2) = g.induced_subgraph(&side_b);
    let local = |map: &[usize], v: usize| map.iter().position(|&x| x == v).unwrap() + 1;
    Ok(BridgeSplit {
        a: local(&map1, a),
        b: local(&map2, b),
        h1,
        map1,
        h2,
        map2,
    })
}

/// For a tree made of two caterpillars joined by the bridge `e`: label each
/// side with 1 at its bridge endpoint and glue the two with
/// [`bridge_compose`]. The result is in the original numbering.
pub fn bridge_labeling(g: &Graph, e: (usize, usize)) -> Result<Labeling> {
    let s = split_at_bridge(g, e)?;
    let lab1 = label_one_at(&s.h1, s.a)?;
    let lab2 = label_one_at(&s.h2, s.b)?;
    let (_, lab) = bridge_compose(&s.h1, &lab1, &s.h2, &lab2, (s.a, s.b))?;
    let mut perm = vec![0; g.n()];
    for (k, &orig) in s.map1.iter().chain(s.map2.iter()).enumerate() {
        perm[orig - 1] = lab.label(k + 1);
    }
    Labeling::new(perm)
}

/// Result of [`compose_t1_b_t2`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Composite {
    /// `t1` keeps its ids, `b` follows, then `t2`.
    #[serde(skip)]
    pub graph: Graph,
    pub labeling: Labeling,
    /// Whether a junction leaf of `t1` (resp. `t2`) was moved into the middle piece.
    pub reassigned: [bool; 2],
}

/// Builds `T = T1 ∪ B ∪ T2` from the joins `(u, p)` and `(q, w)`: `u` in
/// `t1`, `p` and `q` in `b`, `w` in `t2`, and every vertex of `b` on the
/// `p`–`q` path or next to it. The join edges extend that path into the
/// middle piece `u, p, ..., q, w`. `t1` is labeled with `n1` at `u`, the
/// middle piece swept from `n1` to `n2`, and `t2` labeled from `n2` at `w`.
/// A junction that is a leaf off its piece's central path is first moved into
/// the middle piece together with its edge.
pub fn compose_t1_b_t2(
    t1: &Graph,
    b: &Graph,
    t2: &Graph,
    joins: [(usize, usize); 2],
) -> Result<Composite> {
    for g in [t1, b, t2] {
        if !g.is_caterpillar() {
            return Err(Error::NotCaterpillar);
        }
    }
    let [(u, p), (q, w)] = joins;
    t1.check_vertex(u)?;
    b.check_vertex(p)?;
    b.check_vertex(q)?;
    t2.check_vertex(w)?;
    let b_path = b.shortest_path(p, q).expect("trees are connected");
    decompose_along(b, &b_path)
        .map_err(|_| Error::BadJoin(format!("every vertex of b must lie on or next to the path {p}..{q}")))?;

    let (n1, nb) = (t1.n(), b.n());
    let (left, _) = disjoint_union(t1, b, &[(u, n1 + p)]);
    let (graph, _) = disjoint_union(&left, t2, &[(n1 + q, n1 + nb + w)]);
    let n = graph.n();

    // Middle path in combined numbering, extended by the junctions.
    let mut middle: Vec<usize> = vec![u];
    middle.extend(b_path.iter().map(|&v| v + n1));
    middle.push(n1 + nb + w);
    let mut reassigned = [false; 2];
    let mut t1_vertices: Vec<usize> = t1.vertices().collect();
    let mut t2_vertices: Vec<usize> = t2.vertices().map(|v| v + n1 + nb).collect();
    for (side, piece, shift) in [(0usize, t1, 0usize), (1, t2, n1 + nb)] {
        let dec = decompose(piece)?;
        let junction = if side == 0 { u } else { w };
        if dec.position(junction).is_none() {
            let support = dec.central_path[dec.support_of(junction).unwrap() - 1];
            reassigned[side] = true;
            let verts = if side == 0 { &mut t1_vertices } else { &mut t2_vertices };
            verts.retain(|&x| x != junction + shift);
            if side == 0 {
                middle.insert(0, support + shift);
            } else {
                middle.push(support + shift);
            }
        }
    }

    let mut perm = vec![0usize; n];
    // T1 side: labels 1..=n1' with n1' at its junction.
    let (t1p, map1) = graph.induced_subgraph(&t1_vertices);
    let j1 = local_id(&map1, middle[0]);
    let lab1 = two_phase_on(t1p.n(), &decompose(&t1p)?, j1, Variant::AssignN)?;
    for (k, &orig) in map1.iter().enumerate() {
        perm[orig - 1] = lab1.label(k + 1);
    }
    let n1p = t1p.n();
    // Middle piece: swept along `middle`, starting at label n1'.
    let mut mid_vertices: Vec<usize> = middle.clone();
    for &v in &middle {
        for &x in graph.neighbors(v) {
            let inner = x > n1 && x <= n1 + nb;
            if inner && !middle.contains(&x) {
                mid_vertices.push(x);
            }
        }
    }
    let (bp, mapb) = graph.induced_subgraph(&mid_vertices);
    let local_path: Vec<usize> = middle.iter().map(|&v| local_id(&mapb, v)).collect();
    let decb = decompose_along(&bp, &local_path)?;
    let labb = sweep_on(bp.n(), &decb)?;
    for (k, &orig) in mapb.iter().enumerate() {
        perm[orig - 1] = labb.label(k + 1) + n1p - 1;
    }
    let n2 = n1p + bp.n() - 1;
    // T2 side: label 1 at its junction, shifted to start at n2.
    let (t2p, map2) = graph.induced_subgraph(&t2_vertices);
    let j2 = local_id(&map2, *middle.last().unwrap());
    let lab2 = label_one_at(&t2p, j2)?;
    for (k, &orig) in map2.iter().enumerate() {
        perm[orig - 1] = lab2.label(k + 1) + n2 - 1;
    }
    Ok(Composite {
        graph,
        labeling: Labeling::new(perm)?,
        reassigned,
    })
}

fn local_id(map: &[usize], v: usize) -> usize {
    map.iter().position(|&x| x == v).expect("vertex in piece") + 1
}
