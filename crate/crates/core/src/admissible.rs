//! Admissible paths and the reduced Gröbner basis of the binomial edge ideal
//! `J_G = (x_i y_j - x_j y_i : {i, j} in E, i < j)` under the lex order
//! `x_1 > ... > x_n > y_1 > ... > y_n`.
//!
//! A path `i = i_0, i_1, ..., i_r = j` with `i < j` is admissible when its
//! vertices are distinct, every interior vertex is below `i` or above `j`,
//! and no subsequence obtained by dropping some interior vertices (keeping
//! the path order) is again a path. The last condition holds exactly when
//! the path has no chord: a chord `{i_a, i_b}` with `b > a + 1` lets the
//! vertices strictly between `a` and `b` be dropped, and conversely any
//! shortcut subsequence has two consecutive kept vertices that were not
//! consecutive on the path. [`has_shortcut_subsequence`] checks the
//! subsequence form literally.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `u_pi * f_ij` for an admissible path `pi` from `i` to `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroebnerElement {
    pub edge: (usize, usize),
    pub path: Vec<usize>,
    /// Interior vertices above `j`, ascending.
    pub x: Vec<usize>,
    /// Interior vertices below `i`, ascending.
    pub y: Vec<usize>,
}

impl GroebnerElement {
    /// Builds the element of an admissible path given from `i` to `j`.
    pub fn from_path(path: Vec<usize>) -> Self {
        let (i, j) = (path[0], *path.last().unwrap());
        let interior = &path[1..path.len() - 1];
        let mut x: Vec<usize> = interior.iter().copied().filter(|&v| v > j).collect();
        let mut y: Vec<usize> = interior.iter().copied().filter(|&v| v < i).collect();
        x.sort_unstable();
        y.sort_unstable();
        GroebnerElement {
            edge: (i, j),
            path,
            x,
            y,
        }
    }

    pub fn degree(&self) -> usize {
        self.x.len() + self.y.len() + 2
    }

    /// Text of the expanded polynomial with factors in variable order, e.g.
    /// `x1*x3*x4*x5*y2 - x2*x3*x4*x5*y1`.
    pub fn expanded_text(&self) -> String {
        let (i, j) = self.edge;
        let term = |a: usize, b: usize| {
            let mut xs: Vec<usize> = self.x.clone();
            xs.push(a);
            xs.sort_unstable();
            let mut ys: Vec<usize> = self.y.clone();
            ys.push(b);
            ys.sort_unstable();
            xs.iter()
                .map(|v| format!("x{v}"))
                .chain(ys.iter().map(|v| format!("y{v}")))
                .collect::<Vec<_>>()
                .join("*")
        };
        format!("{} - {}", term(i, j), term(j, i))
    }
}

impl fmt::Display for GroebnerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.x {
            write!(f, "x{v}*")?;
        }
        for v in &self.y {
            write!(f, "y{v}*")?;
        }
        let (i, j) = self.edge;
        write!(f, "(x{i}*y{j} - x{j}*y{i})")
    }
}

fn check_walk(g: &Graph, seq: &[usize]) -> Result<()> {
    for &v in seq {
        g.check_vertex(v)?;
    }
    for w in seq.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(Error::NotAPath(w[0], w[1]));
        }
    }
    Ok(())
}

/// Whether some proper choice of interior vertices, kept in path order,
/// still forms a path from the first to the last vertex. Exponential in the
/// path length; meant as a cross-check of the chord test.
pub fn has_shortcut_subsequence(g: &Graph, seq: &[usize]) -> bool {
    let interior = &seq[1..seq.len() - 1];
    let k = interior.len();
    (0u64..(1u64 << k) - 1).any(|keep| {
        let mut sub = vec![seq[0]];
        sub.extend((0..k).filter(|b| keep >> b & 1 == 1).map(|b| interior[b]));
        sub.push(seq[seq.len() - 1]);
        sub.windows(2).all(|w| g.has_edge(w[0], w[1]))
    })
}

fn has_chord(g: &Graph, seq: &[usize]) -> bool {
    (0..seq.len()).any(|a| (a + 2..seq.len()).any(|b| g.has_edge(seq[a], seq[b])))
}

/// Whether `seq` is an admissible path. A sequence running from the larger
/// endpoint to the smaller one is read reversed.
pub fn is_admissible(g: &Graph, seq: &[usize]) -> Result<bool> {
    if seq.len() < 2 {
        return Err(Error::PreconditionFailed(
            "a path needs at least two vertices".into(),
        ));
    }
    check_walk(g, seq)?;
    let mut seq = seq.to_vec();
    if seq[0] > seq[seq.len() - 1] {
        seq.reverse();
    }
    let (i, j) = (seq[0], seq[seq.len() - 1]);
    let mut sorted = seq.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != seq.len() {
        return Ok(false);
    }
    if seq[1..seq.len() - 1].iter().any(|&v| v > i && v < j) {
        return Ok(false);
    }
    Ok(!has_chord(g, &seq))
}

/// Depth-first search over chordless paths from `i` to `j` whose interior
/// avoids `i..=j`. Paths with more than `cap` vertices are not explored.
fn walk(g: &Graph, i: usize, j: usize, cap: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(
        g: &Graph,
        j: usize,
        i: usize,
        cap: usize,
        path: &mut Vec<usize>,
        blocked: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let last = *path.last().unwrap();
        let mut next: Vec<usize> = g.neighbors(last).to_vec();
        next.sort_unstable();
        for w in next {
            if blocked[w] > 0 {
                continue;
            }
            if w == j {
                path.push(w);
                visit(path);
                path.pop();
                continue;
            }
            if (w > i && w < j) || path.len() + 2 > cap {
                continue;
            }
            // Every earlier vertex except `last` now borders the new end, so
            // their neighbors may no longer appear.
            let before = path[path.len() - 1];
            for &x in g.neighbors(before) {
                blocked[x] += 1;
            }
            blocked[before] += 1;
            path.push(w);
            go(g, j, i, cap, path, blocked, visit);
            path.pop();
            blocked[before] -= 1;
            for &x in g.neighbors(before) {
                blocked[x] -= 1;
            }
        }
    }
    // `blocked[v] > 0` marks vertices on the path or adjacent to a path
    // vertex other than the current end.
    let mut blocked = vec![0u32; g.n() + 1];
    blocked[i] = 1;
    let mut path = vec![i];
    go(g, j, i, cap, &mut path, &mut blocked, visit);
}

/// All admissible paths from `i` to `j` (`i < j`), in lexicographic order.
pub fn enumerate_admissible(g: &Graph, i: usize, j: usize) -> Result<Vec<Vec<usize>>> {
    enumerate_admissible_capped(g, i, j, usize::MAX)
}

/// Like [`enumerate_admissible`] but only paths with at most `cap` vertices.
pub fn enumerate_admissible_capped(
    g: &Graph,
    i: usize,
    j: usize,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if i >= j {
        return Err(Error::BadPair(i, j));
    }
    let mut out = Vec::new();
    walk(g, i, j, cap, &mut |p| out.push(p.to_vec()));
    Ok(out)
}

/// The reduced Gröbner basis, ordered by `(i, j, path)`.
pub fn groebner_basis(g: &Graph) -> Vec<GroebnerElement> {
    let mut out = Vec::new();
    for i in g.vertices() {
        for j in i + 1..=g.n() {
            walk(g, i, j, usize::MAX, &mut |p| {
                out.push(GroebnerElement::from_path(p.to_vec()))
            });
        }
    }
    out
}

/// Largest element degree of the basis (0 without edges), computed without
/// storing the basis.
pub fn max_degree(g: &Graph) -> usize {
    let mut best = 0;
    for i in g.vertices() {
        for j in i + 1..=g.n() {
            walk(g, i, j, usize::MAX, &mut |p| best = best.max(p.len()));
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisStats {
    pub size: usize,
    pub max_degree: usize,
    /// Element count per degree.
    pub histogram: BTreeMap<usize, usize>,
}

pub fn basis_stats(basis: &[GroebnerElement]) -> BasisStats {
    let mut histogram = BTreeMap::new();
    for el in basis {
        *histogram.entry(el.degree()).or_insert(0) += 1;
    }
    BasisStats {
        size: basis.len(),
        max_degree: basis.iter().map(|e| e.degree()).max().unwrap_or(0),
        histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex25() -> Graph {
        Graph::new(5, &[(1, 4), (3, 4), (3, 5), (2, 5)]).unwrap()
    }

    fn star2() -> Graph {
        Graph::star(4, 2).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_admissible(&c4, &[1, 4, 3]).unwrap());
        assert!(!is_admissible(&Graph::path(3), &[1, 2, 3]).unwrap());
        assert!(is_admissible(&ex25(), &[1, 4, 3, 5, 2]).unwrap());
        assert!(is_admissible(&ex25(), &[2, 5, 3, 4, 1]).unwrap());
        assert_eq!(
            is_admissible(&Graph::path(3), &[1, 3]),
            Err(Error::NotAPath(1, 3))
        );
    }

    #[test]
    fn chords_break_admissibility() {
        let k4 = Graph::complete(4);
        assert!(!is_admissible(&k4, &[1, 4, 2]).unwrap());
        assert!(has_shortcut_subsequence(&k4, &[1, 4, 2]));
        assert!(!has_shortcut_subsequence(&ex25(), &[1, 4, 3, 5, 2]));
    }

    #[test]
    fn enumeration_examples() {
        assert!(enumerate_admissible(&Graph::path(3), 1, 3).unwrap().is_empty());
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(enumerate_admissible(&c4, 2, 4).unwrap(), vec![vec![2, 1, 4]]);
        assert_eq!(enumerate_admissible(&star2(), 3, 4).unwrap(), vec![vec![3, 2, 4]]);
        assert_eq!(enumerate_admissible(&c4, 3, 1), Err(Error::BadPair(3, 1)));
    }

    #[test]
    fn basis_examples() {
        let p3 = groebner_basis(&Graph::path(3));
        assert_eq!(p3.len(), 2);
        assert!(p3.iter().all(|e| e.degree() == 2));

        let ex = basis_stats(&groebner_basis(&ex25()));
        assert_eq!(ex.histogram.get(&5), Some(&1));
        assert_eq!(ex.histogram.get(&4), None);
        assert_eq!(ex.max_degree, 5);

        assert!(groebner_basis(&Graph::new(3, &[]).unwrap()).is_empty());
        assert_eq!(basis_stats(&[]).max_degree, 0);

        let c4 = basis_stats(&groebner_basis(&Graph::cycle(4).unwrap()));
        assert_eq!((c4.size, c4.max_degree), (6, 3));
        let p3 = basis_stats(&groebner_basis(&Graph::path(3)));
        assert_eq!((p3.size, p3.max_degree), (2, 2));
        assert_eq!(basis_stats(&groebner_basis(&star2())).size, 4);
    }

    #[test]
    fn text_forms() {
        let basis = groebner_basis(&ex25());
        let top = basis.iter().find(|e| e.degree() == 5).unwrap();
        assert_eq!(top.to_string(), "x3*x4*x5*(x1*y2 - x2*y1)");
        assert_eq!(top.expanded_text(), "x1*x3*x4*x5*y2 - x2*x3*x4*x5*y1");
        let star = groebner_basis(&star2());
        assert_eq!(star.last().unwrap().to_string(), "y2*(x3*y4 - x4*y3)");
        assert_eq!(star[0].to_string(), "(x1*y2 - x2*y1)");
    }

    #[test]
    fn capped_enumeration() {
        assert!(enumerate_admissible_capped(&ex25(), 1, 2, 4).unwrap().is_empty());
        assert_eq!(enumerate_admissible_capped(&ex25(), 1, 2, 5).unwrap().len(), 1);
        assert_eq!(max_degree(&ex25()), 5);
    }
}
