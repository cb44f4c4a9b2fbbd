//! Closed, weakly closed and m-closed labelings.
//!
//! A graph whose vertex ids are read as labels is *m-closed* for that
//! labeling when every element of the reduced Gröbner basis has degree at
//! most `m`, i.e. every admissible path has at most `m` vertices. The closure
//! number of a graph is the least such `m` over all labelings.

use std::collections::HashSet;

use serde::Serialize;

use crate::admissible;
use crate::error::{Error, Result};
use crate::graph::{BipartiteStar, Graph, Labeling};

/// Default vertex limit for searches over all labelings.
pub const DEFAULT_MAX_N: usize = 9;

/// Closed condition: two edges sharing their smaller endpoint have adjacent
/// larger endpoints, and two edges sharing their larger endpoint have
/// adjacent smaller endpoints.
pub fn is_closed_labeling(g: &Graph) -> bool {
    for v in g.vertices() {
        let up: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        let down: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w < v).collect();
        for side in [up, down] {
            for (a, &p) in side.iter().enumerate() {
                if side[a + 1..].iter().any(|&q| !g.has_edge(p, q)) {
                    return false;
                }
            }
        }
    }
    true
}

fn require_connected_with_edges(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Largest Gröbner basis element degree for the labeling given by the vertex ids.
pub fn m_of_labeling(g: &Graph) -> Result<usize> {
    require_connected_with_edges(g)?;
    Ok(admissible::max_degree(g))
}

/// Largest basis degree after relabeling `g` by `lab`.
pub fn m_under(g: &Graph, lab: &Labeling) -> Result<usize> {
    m_of_labeling(&g.relabel(lab)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub m: usize,
    /// A labeling attaining `m` (original vertex id to label).
    pub witness: Labeling,
    /// Partial labelings visited by the search.
    pub searched: u64,
    pub exhaustive: bool,
    pub symmetry_pruning: bool,
}

struct Search<'a> {
    n: usize,
    nbr: &'a [u64],
    label: Vec<usize>,
    best: usize,
    witness: Vec<usize>,
    searched: u64,
    roots: Vec<usize>,
}

impl Search<'_> {
    /// Largest vertex count of an admissible path between `v`, which just
    /// received the largest label so far, and an already labeled vertex.
    /// Interior vertices are unlabeled (their labels will exceed `v`'s) or
    /// labeled below the other endpoint. Stops early once `limit` is reached.
    fn forced(&self, v: usize, limit: usize) -> usize {
        let mut best = 0;
        self.extend(v, 1 << v, 0, 1, limit, &mut best);
        best
    }

    fn extend(&self, last: usize, blocked: u64, max_inner: usize, len: usize, limit: usize, best: &mut usize) {
        let mut cand = self.nbr[last] & !blocked;
        let blocked = blocked | self.nbr[last] | 1 << last;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let lw = self.label[w];
            if lw != 0 && lw > max_inner {
                *best = (*best).max(len + 1);
                if *best >= limit {
                    return;
                }
            }
            self.extend(w, blocked, max_inner.max(lw), len + 1, limit, best);
            if *best >= limit {
                return;
            }
        }
    }

    fn place(&mut self, k: usize, bound: usize) {
        self.searched += 1;
        if k == self.n {
            self.best = bound;
            self.witness = self.label.clone();
            return;
        }
        let choices: Vec<usize> = if k == 0 {
            self.roots.clone()
        } else {
            (0..self.n).filter(|&v| self.label[v] == 0).collect()
        };
        for v in choices {
            if self.best <= 2 {
                return;
            }
            self.label[v] = k + 1;
            let b = bound.max(self.forced(v, self.best));
            if b < self.best {
                self.place(k + 1, b);
            }
            self.label[v] = 0;
        }
    }
}

/// Exact closure number by branch and bound over labelings. Labels are
/// placed in increasing order; after placing a label, every admissible path
/// whose larger endpoint carries it is already determined, which bounds the
/// branch. With `prune`, label 1 only goes to one vertex per automorphism
/// orbit, which leaves the result exact.
pub fn closure_number(g: &Graph, max_n: usize, prune: bool) -> Result<ClosureReport> {
    if g.n() > max_n.min(64) {
        return Err(Error::TooLarge {
            n: g.n(),
            max: max_n.min(64),
        });
    }
    require_connected_with_edges(g)?;
    let n = g.n();
    // The search indexes vertices from 0: bit `w` of `nbr[v]` is vertex `w + 1`.
    let nbr: Vec<u64> = g.masks().expect("n <= 64");
    let initial = admissible::max_degree(g);
    let roots = if prune {
        vertex_orbits(g).iter().map(|o| o[0] - 1).collect()
    } else {
        (0..n).collect()
    };
    let mut search = Search {
        n,
        nbr: &nbr,
        label: vec![0; n],
        best: initial,
        witness: (1..=n).collect(),
        searched: 0,
        roots,
    };
    search.place(0, 0);
    Ok(ClosureReport {
        m: search.best,
        witness: Labeling::new(search.witness).expect("search labels are a permutation"),
        searched: search.searched,
        exhaustive: true,
        symmetry_pruning: prune,
    })
}

/// Automorphism orbits of the vertices, each sorted, listed by smallest member.
pub fn vertex_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for r in g.vertices() {
        for v in r + 1..=n {
            if find(&mut parent, r) == find(&mut parent, v) || g.degree(r) != g.degree(v) {
                continue;
            }
            if let Some(sigma) = automorphism_mapping(g, r, v) {
                for x in g.vertices() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, sigma[x]));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n + 1];
    for v in g.vertices() {
        let r = find(&mut parent, v);
        if slot[r] == usize::MAX {
            slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[r]].push(v);
    }
    orbits
}

/// An automorphism sending `from` to `to`, as a map indexed by vertex.
fn automorphism_mapping(g: &Graph, from: usize, to: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut seq = vec![from];
    let mut seen = vec![false; n + 1];
    seen[from] = true;
    let mut k = 0;
    while seq.len() < n {
        if k == seq.len() {
            let next = g.vertices().find(|&v| !seen[v]).unwrap();
            seen[next] = true;
            seq.push(next);
        }
        for &w in g.neighbors(seq[k]) {
            if !seen[w] {
                seen[w] = true;
                seq.push(w);
            }
        }
        k += 1;
    }
    let mut map = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    fn go(g: &Graph, seq: &[usize], to: usize, k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if k == seq.len() {
            return true;
        }
        let v = seq[k];
        let candidates: Vec<usize> = if k == 0 {
            vec![to]
        } else {
            g.vertices().filter(|&c| !used[c]).collect()
        };
        for c in candidates {
            if g.degree(c) != g.degree(v)
                || seq[..k].iter().any(|&u| g.has_edge(u, v) != g.has_edge(map[u], c))
            {
                continue;
            }
            map[v] = c;
            used[c] = true;
            if go(g, seq, to, k + 1, map, used) {
                return true;
            }
            used[c] = false;
        }
        false
    }
    go(g, &seq, to, 0, &mut map, &mut used).then_some(map)
}

/// Closure number of the cycle on `n >= 4` vertices: `n/2 + 1` for even `n`,
/// `(n+1)/2 + 1` for odd `n`.
pub fn cycle_closure_formula(n: usize) -> usize {
    if n % 2 == 0 {
        n / 2 + 1
    } else {
        (n + 1) / 2 + 1
    }
}

/// A labeling of the cycle `1 - 2 - ... - n - 1` attaining its closure
/// number. Odd `n`: vertex `i` gets `2i - 1` for `i < m` and `2(i - m + 1)`
/// otherwise. Even `n`: vertex 1 gets 1, then label `i + 1` goes to the
/// vertex at distance `m - 1` from label `i` and label `i + 2` to the next
/// vertex around the cycle, for odd `i`.
pub fn cycle_labeling(n: usize) -> Result<Labeling> {
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    let m = cycle_closure_formula(n);
    let mut perm = vec![0; n];
    if n % 2 == 1 {
        for i in 1..=n {
            perm[i - 1] = if i < m { 2 * i - 1 } else { 2 * (i - m + 1) };
        }
    } else {
        let c = Graph::cycle(n)?;
        perm[0] = 1;
        let mut at = 1;
        let mut i = 1;
        while i < n {
            let dist = c.distances_from(at);
            let vj = (1..=n)
                .find(|&v| perm[v - 1] == 0 && dist[v] == Some(m - 1))
                .expect("the antipode is unlabeled");
            perm[vj - 1] = i + 1;
            at = vj;
            if i + 2 < n {
                let next = vj % n + 1;
                perm[next - 1] = i + 2;
                at = next;
            }
            i += 2;
        }
    }
    Labeling::new(perm)
}

/// For every edge `{i, j}` with `j > i + 1`, each `k` strictly between is
/// adjacent to `i` or to `j`.
pub fn is_weakly_closed_labeling(g: &Graph) -> bool {
    g.edges().iter().all(|&(i, j)| {
        (i + 1..j).all(|k| g.has_edge(i, k) || g.has_edge(k, j))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakClosureReport {
    pub answer: bool,
    pub witness: Option<Labeling>,
    pub searched: u64,
}

/// Whether some labeling is weakly closed, by backtracking over labelings in
/// increasing label order with the condition checked as each label lands.
pub fn is_weakly_closed(g: &Graph, max_n: usize) -> Result<WeakClosureReport> {
    if g.n() > max_n {
        return Err(Error::TooLarge { n: g.n(), max: max_n });
    }
    let n = g.n();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut label = vec![0usize; n + 1];
    let mut searched = 0u64;
    fn go(g: &Graph, order: &mut Vec<usize>, label: &mut [usize], searched: &mut u64) -> bool {
        *searched += 1;
        let n = g.n();
        let k = order.len();
        if k == n {
            return true;
        }
        let j = k + 1;
        for v in g.vertices() {
            if label[v] != 0 {
                continue;
            }
            let ok = g.neighbors(v).iter().all(|&u| {
                let i = label[u];
                i == 0 || (i + 1..j).all(|l| {
                    let w = order[l - 1];
                    g.has_edge(u, w) || g.has_edge(w, v)
                })
            });
            if !ok {
                continue;
            }
            label[v] = j;
            order.push(v);
            if go(g, order, label, searched) {
                return true;
            }
            order.pop();
            label[v] = 0;
        }
        false
    }
    let answer = go(g, &mut order, &mut label, &mut searched);
    let witness = answer.then(|| Labeling::from_order(&order).expect("order is a permutation"));
    Ok(WeakClosureReport {
        answer,
        witness,
        searched,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tree3Report {
    pub answer: bool,
    /// A labeling with `d(i, i+1) <= 2` for all `i`, when one exists.
    pub witness: Option<Labeling>,
}

fn require_non_path_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.is_path_graph() {
        return Err(Error::IsAPath);
    }
    if t.n() > 128 {
        return Err(Error::TooLarge { n: t.n(), max: 128 });
    }
    Ok(())
}

/// Whether a tree that is not a path admits a labeling with `d(i, i+1) <= 2`
/// for all `i`: such labelings are exactly the Hamiltonian paths of the
/// square of the tree, found by backtracking with a memo of dead
/// `(visited set, end vertex)` states and a connectivity cut.
pub fn tree_is_3closed(t: &Graph) -> Result<Tree3Report> {
    require_non_path_tree(t)?;
    let sq = t.square();
    let n = t.n();
    let nbr: Vec<u128> = sq
        .vertices()
        .map(|v| sq.neighbors(v).iter().fold(0u128, |m, &w| m | 1 << (w - 1)))
        .collect();
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut dead: HashSet<(u128, usize)> = HashSet::new();
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.push(start);
        if hamiltonian(&nbr, full, 1 << start, start, &mut path, &mut dead) {
            let order: Vec<usize> = path.iter().map(|&v| v + 1).collect();
            return Ok(Tree3Report {
                answer: true,
                witness: Some(Labeling::from_order(&order)?),
            });
        }
        path.pop();
    }
    Ok(Tree3Report {
        answer: false,
        witness: None,
    })
}

fn reachable_all(nbr: &[u128], from: usize, allowed: u128) -> bool {
    let mut seen = 1u128 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = nbr[v] & allowed & !seen;
        seen |= new;
        frontier |= new;
    }
    seen & allowed == allowed
}

fn hamiltonian(
    nbr: &[u128],
    full: u128,
    visited: u128,
    end: usize,
    path: &mut Vec<usize>,
    dead: &mut HashSet<(u128, usize)>,
) -> bool {
    if visited == full {
        return true;
    }
    if dead.contains(&(visited, end)) {
        return false;
    }
    if !reachable_all(nbr, end, !visited & full) {
        dead.insert((visited, end));
        return false;
    }
    let mut cand = nbr[end] & !visited;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        if hamiltonian(nbr, full, visited | 1 << w, w, path, dead) {
            return true;
        }
        path.pop();
    }
    dead.insert((visited, end));
    false
}

/// Up to `limit` distinct labelings with `d(i, i+1) <= 2`, in the order the
/// backtracking meets them.
pub fn distance_two_labelings(t: &Graph, limit: usize) -> Result<Vec<Labeling>> {
    if t.n() > 64 {
        return Err(Error::TooLarge { n: t.n(), max: 64 });
    }
    let sq = t.square();
    let n = t.n();
    let nbr: Vec<u64> = sq.masks().expect("n <= 64");
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    fn go(nbr: &[u64], full: u64, visited: u64, path: &mut Vec<usize>, out: &mut Vec<Labeling>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if visited == full {
            let order: Vec<usize> = path.iter().map(|&v| v + 1).collect();
            out.push(Labeling::from_order(&order).unwrap());
            return;
        }
        let mut cand = nbr[*path.last().unwrap()] & !visited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(w);
            go(nbr, full, visited | 1 << w, path, out, limit);
            path.pop();
        }
    }
    for start in 0..n {
        let mut path = vec![start];
        go(&nbr, full, 1 << start, &mut path, &mut out, limit);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TnMembership {
    pub member: bool,
    /// Whether the associated graph on `1..=n` is a path.
    pub is_path: bool,
}

/// Membership in the class of bipartite graphs `H` with `i < j` on every
/// edge `x_i y_j`, exactly `n - 1` edges, and for each `i < n` one of:
/// `x_i y_{i+1}`; some `j > i + 1` with `x_i y_j` and `x_{i+1} y_j`; some
/// `j < i` with `x_j y_i` and `x_j y_{i+1}`.
pub fn check_tn_membership(h: &BipartiteStar) -> TnMembership {
    let n = h.n();
    let linked = |i: usize| {
        h.contains(i, i + 1)
            || (i + 2..=n).any(|j| h.contains(i, j) && h.contains(i + 1, j))
            || (1..i).any(|j| h.contains(j, i) && h.contains(j, i + 1))
    };
    let member = h.edge_count() + 1 == n && (1..n).all(linked);
    TnMembership {
        member,
        is_path: h.unstar().is_path_graph(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_closure(g: &Graph) -> usize {
        use itertools::Itertools;
        (1..=g.n())
            .permutations(g.n())
            .map(|p| m_under(g, &Labeling::new(p).unwrap()).unwrap())
            .min()
            .unwrap()
    }

    #[test]
    fn closed_condition_examples() {
        assert!(is_closed_labeling(&Graph::path(3)));
        assert!(!is_closed_labeling(&Graph::new(3, &[(1, 3), (2, 3)]).unwrap()));
        let c4 = Graph::cycle(4).unwrap();
        use itertools::Itertools;
        for p in (1..=4).permutations(4) {
            assert!(!is_closed_labeling(&c4.relabel(&Labeling::new(p).unwrap()).unwrap()));
        }
    }

    #[test]
    fn m_of_labeling_examples() {
        assert_eq!(m_of_labeling(&Graph::cycle(4).unwrap()).unwrap(), 3);
        let ex25 = Graph::new(5, &[(1, 4), (3, 4), (3, 5), (2, 5)]).unwrap();
        assert_eq!(m_of_labeling(&ex25).unwrap(), 5);
        for n in 2..8 {
            assert_eq!(m_of_labeling(&Graph::path(n)).unwrap(), 2);
        }
        assert_eq!(m_of_labeling(&Graph::new(2, &[]).unwrap()), Err(Error::EmptyEdgeSet));
        assert_eq!(
            m_of_labeling(&Graph::new(4, &[(1, 2), (3, 4)]).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn closure_numbers_of_small_cycles() {
        for n in 4..=7 {
            let c = Graph::cycle(n).unwrap();
            for prune in [false, true] {
                let r = closure_number(&c, 9, prune).unwrap();
                assert_eq!(r.m, cycle_closure_formula(n), "C{n}");
                assert_eq!(m_under(&c, &r.witness).unwrap(), r.m);
            }
        }
        assert_eq!(cycle_closure_formula(4), 3);
        assert_eq!(cycle_closure_formula(5), 4);
    }

    #[test]
    fn closure_search_matches_brute_force() {
        let graphs = [
            Graph::star(5, 1).unwrap(),
            Graph::new(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]).unwrap(),
            Graph::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 4)]).unwrap(),
            Graph::new(5, &[(1, 4), (3, 4), (3, 5), (2, 5)]).unwrap(),
        ];
        for g in &graphs {
            let want = naive_closure(g);
            assert_eq!(closure_number(g, 9, false).unwrap().m, want);
            assert_eq!(closure_number(g, 9, true).unwrap().m, want);
        }
    }

    #[test]
    fn closure_guards() {
        assert_eq!(
            closure_number(&Graph::path(10), 9, false),
            Err(Error::TooLarge { n: 10, max: 9 })
        );
        assert_eq!(
            closure_number(&Graph::new(3, &[(1, 2)]).unwrap(), 9, false),
            Err(Error::Disconnected)
        );
        assert_eq!(closure_number(&Graph::path(1), 9, false), Err(Error::EmptyEdgeSet));
    }

    #[test]
    fn orbits() {
        assert_eq!(vertex_orbits(&Graph::path(4)), vec![vec![1, 4], vec![2, 3]]);
        assert_eq!(vertex_orbits(&Graph::cycle(5).unwrap()), vec![vec![1, 2, 3, 4, 5]]);
        assert_eq!(vertex_orbits(&Graph::star(4, 2).unwrap()), vec![vec![1, 3, 4], vec![2]]);
        let paw = Graph::new(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        assert_eq!(vertex_orbits(&paw), vec![vec![1, 2], vec![3], vec![4]]);
    }

    #[test]
    fn cycle_labelings() {
        assert_eq!(cycle_labeling(5).unwrap().as_slice(), &[1, 3, 5, 2, 4]);
        assert_eq!(cycle_labeling(4).unwrap().as_slice(), &[1, 4, 2, 3]);
        assert!(cycle_labeling(3).is_err());
        for n in 4..=12 {
            let c = Graph::cycle(n).unwrap();
            let lab = cycle_labeling(n).unwrap();
            assert_eq!(m_under(&c, &lab).unwrap(), cycle_closure_formula(n), "C{n}");
        }
        let six = Graph::cycle(6).unwrap().relabel(&cycle_labeling(6).unwrap()).unwrap();
        let d: Vec<usize> = (1..6).map(|i| six.distance(i, i + 1).unwrap().unwrap()).collect();
        assert_eq!(d, vec![3, 1, 3, 1, 3]);
    }

    #[test]
    fn weak_closure() {
        for n in 2..8 {
            assert!(is_weakly_closed_labeling(&Graph::path(n)));
        }
        assert!(!is_weakly_closed(&Graph::cycle(5).unwrap(), 9).unwrap().answer);
        let star = Graph::star(5, 3).unwrap();
        let r = is_weakly_closed(&star, 9).unwrap();
        assert!(r.answer);
        assert!(is_weakly_closed_labeling(&star.relabel(&r.witness.unwrap()).unwrap()));
        assert!(is_weakly_closed(&Graph::path(10), 9).is_err());
    }

    #[test]
    fn three_closed_trees() {
        let star = Graph::star(4, 2).unwrap();
        let r = tree_is_3closed(&star).unwrap();
        assert!(r.answer);
        let labeled = star.relabel(&r.witness.unwrap()).unwrap();
        assert!(labeled.consecutive_labels_within_two());
        assert_eq!(tree_is_3closed(&Graph::path(4)), Err(Error::IsAPath));
        assert_eq!(tree_is_3closed(&Graph::cycle(4).unwrap()), Err(Error::NotATree));
        assert!(labeled.consecutive_labels_within_two());
        assert_eq!(m_of_labeling(&labeled).unwrap(), 3);
    }

    #[test]
    fn distance_two_enumeration() {
        let star = Graph::star(4, 1).unwrap();
        let all = distance_two_labelings(&star, 1000).unwrap();
        assert_eq!(all.len(), 24);
        let spider = Graph::new(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]).unwrap();
        for lab in distance_two_labelings(&spider, 1000).unwrap() {
            assert!(spider.relabel(&lab).unwrap().consecutive_labels_within_two());
        }
    }

    #[test]
    fn tn_membership() {
        let star = Graph::new(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(star.consecutive_labels_within_two());
        let t = check_tn_membership(&star.star_transform());
        assert!(t.member && !t.is_path);
        let p = check_tn_membership(&Graph::path(5).star_transform());
        assert!(p.member && p.is_path);
        let c = check_tn_membership(&Graph::cycle(4).unwrap().star_transform());
        assert!(!c.member);
    }
}
