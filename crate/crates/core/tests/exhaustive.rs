use std::path::Path;

use binedge::closedness::closure_number;
use binedge::corpus::{connected_graphs, tree_list_text, BUNDLED};
use binedge::io::{read_graph, Format};
use binedge::Graph;

/// Vertex count of a longest chordless cycle, 0 if none.
fn longest_induced_cycle(g: &Graph) -> usize {
    fn grow(g: &Graph, path: &mut Vec<usize>, best: &mut usize) {
        let (first, last) = (path[0], *path.last().unwrap());
        for &w in g.neighbors(last) {
            if w <= first || path.contains(&w) {
                continue;
            }
            let inner = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
            if inner.iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            if path.len() >= 2 && g.has_edge(first, w) {
                *best = (*best).max(path.len() + 1);
                continue;
            }
            path.push(w);
            grow(g, path, best);
            path.pop();
        }
    }
    let mut best = 0;
    for v in g.vertices() {
        grow(g, &mut vec![v], &mut best);
    }
    best
}

#[test]
fn chordless_cycles_bounded_by_closure_number() {
    assert_eq!(longest_induced_cycle(&Graph::cycle(6).unwrap()), 6);
    assert_eq!(longest_induced_cycle(&Graph::complete(5)), 3);
    assert_eq!(longest_induced_cycle(&Graph::path(5)), 0);
    for n in 3..=8 {
        for g in connected_graphs(n) {
            let m = closure_number(&g, 9, true).unwrap().m;
            let c = longest_induced_cycle(&g);
            assert!(c < 4 || c <= 2 * m - 2, "{:?}: cycle {c}, m = {m}", g.edges());
        }
    }
}

#[test]
fn bundled_tree_lists_match_generator() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    for n in 1..=9 {
        let text = std::fs::read_to_string(dir.join(format!("trees/n{n}.jsonl"))).unwrap();
        assert_eq!(text, tree_list_text(n), "n = {n}");
    }
    for name in BUNDLED {
        let g = read_graph(&dir.join(format!("{name}.json")), Format::Auto).unwrap().unwrap();
        assert_eq!(Some(g), binedge::corpus::bundled(name));
    }
}
