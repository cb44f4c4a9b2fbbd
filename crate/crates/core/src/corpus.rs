//! Small-graph corpora: canonical forms, exhaustive generators, seeded random
//! trees and caterpillars, and the bundled named instances.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Labeling};
use crate::io::parse_json;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_MAX_N: usize = 11;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Stable color classes: start from degrees, split by multisets of neighbor
/// colors until nothing changes. Colors are isomorphism invariant.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { g.degree(v) }).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (1..=n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let distinct: Vec<_> = distinct.into_iter().collect();
        let next: Vec<usize> = std::iter::once(0)
            .chain(sigs.iter().map(|s| distinct.binary_search(&s).unwrap()))
            .collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

struct Canon<'a> {
    g: &'a Graph,
    /// Color allowed at each position.
    slots: Vec<usize>,
    color: Vec<usize>,
    placed: Vec<usize>,
    used: Vec<bool>,
    best: Option<(Vec<u32>, Vec<usize>)>,
    rows: Vec<u32>,
}

impl Canon<'_> {
    /// Bits of position `k` against earlier positions, first position most
    /// significant.
    fn row(&self, v: usize) -> u32 {
        let mut r = 0u32;
        for &u in &self.placed {
            r = (r << 1) | self.g.has_edge(u, v) as u32;
        }
        r
    }

    fn search(&mut self) {
        let k = self.placed.len();
        if k == self.slots.len() {
            if self.best.as_ref().map_or(true, |b| self.rows > b.0) {
                self.best = Some((self.rows.clone(), self.placed.clone()));
            }
            return;
        }
        for v in 1..=self.g.n() {
            if self.used[v] || self.color[v] != self.slots[k] {
                continue;
            }
            let r = self.row(v);
            if let Some((best, _)) = &self.best {
                if self.rows[..] == best[..k] && r < best[k] {
                    continue;
                }
            }
            self.used[v] = true;
            self.placed.push(v);
            self.rows.push(r);
            self.search();
            self.rows.pop();
            self.placed.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical relabeling of `g` together with the vertex order used (the
/// vertex placed at position `k` gets label `k + 1`). Isomorphic graphs have
/// equal canonical forms.
pub fn canonical_form(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::TooLarge { n, max: CANONICAL_MAX_N });
    }
    let color = refine_colors(g);
    let mut slots: Vec<usize> = color[1..].to_vec();
    slots.sort_unstable();
    let mut c = Canon {
        g,
        slots,
        color,
        placed: Vec::with_capacity(n),
        used: vec![false; n + 1],
        best: None,
        rows: Vec::with_capacity(n),
    };
    c.search();
    let order = c.best.map(|b| b.1).unwrap_or_default();
    let form = g.relabel(&Labeling::from_order(&order)?)?;
    Ok((Graph::new(n, form.edges())?, order))
}

pub fn canonical(g: &Graph) -> Graph {
    canonical_form(g).expect("graph within canonical size").0
}

fn extend_by_vertex(graphs: &[Graph], tree_only: bool) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let n = g.n();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        if tree_only {
            subsets.extend((1..=n).map(|v| vec![v]));
        } else {
            for mask in 1u32..(1 << n) {
                subsets.push((1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect());
            }
        }
        for nb in subsets {
            let mut edges = g.edges().to_vec();
            edges.extend(nb.iter().map(|&v| (v, n + 1)));
            let h = canonical(&Graph::new(n + 1, &edges).expect("valid extension"));
            let key = h.edges().to_vec();
            if seen.insert(key) {
                out.push(h);
            }
        }
    }
    out.sort_by(|a, b| a.edge_count().cmp(&b.edge_count()).then(a.edges().cmp(b.edges())));
    out
}

fn by_levels(max_n: usize, tree_only: bool) -> Vec<Vec<Graph>> {
    let mut levels = vec![Vec::new(), vec![Graph::new(1, &[]).unwrap()]];
    for _ in 2..=max_n {
        let next = extend_by_vertex(levels.last().unwrap(), tree_only);
        levels.push(next);
    }
    levels.truncate(max_n + 1);
    levels
}

/// Connected graphs on exactly `n` vertices up to isomorphism, in canonical
/// form. Every connected graph has a vertex whose removal keeps it connected,
/// so adding vertices to smaller connected graphs reaches all of them.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    by_levels(n, false).pop().unwrap()
}

/// Connected graphs with `1 ..= max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    by_levels(max_n.max(1), false).into_iter().flatten().take_while(|g| g.n() <= max_n).collect()
}

/// Trees on exactly `n` vertices up to isomorphism.
pub fn trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    by_levels(n, true).pop().unwrap()
}

/// Every connected graph on the vertex set `[n]`, labeled (`1, 1, 4, 38` for
/// `n = 1..4`).
pub fn labeled_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() < 32, "labeled enumeration is for tiny n");
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| pairs[k])
                .collect();
            Graph::new(n, &edges).unwrap()
        })
        .filter(Graph::is_connected)
        .collect()
}

pub fn random_labeling(n: usize, rng: &mut impl Rng) -> Labeling {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    Labeling::new(perm).unwrap()
}

/// Uniform labeled tree on `[n]` from a random Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 2 {
        return Graph::path(n.max(1));
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let mut degree = vec![1usize; n + 1];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

/// Random caterpillar with `n` vertices: a spine of random length with the
/// remaining vertices hung as leaves on random spine vertices, then randomly
/// renumbered.
pub fn random_caterpillar(n: usize, rng: &mut impl Rng) -> Graph {
    let n = n.max(1);
    let spine = rng.gen_range(1..=n);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|v| (v, v + 1)).collect();
    for leaf in spine + 1..=n {
        edges.push((rng.gen_range(1..=spine), leaf));
    }
    let g = Graph::new(n, &edges).unwrap();
    g.relabel(&random_labeling(n, rng)).unwrap()
}

const FIG1: &str = include_str!("../corpus/fig1.json");
const FIG2: &str = include_str!("../corpus/fig2.json");
const FIG3: &str = include_str!("../corpus/fig3.json");
const FIG4: &str = include_str!("../corpus/fig4.json");
const EX25: &str = include_str!("../corpus/ex25.json");
const C5: &str = include_str!("../corpus/c5.json");

/// Names of the bundled instances.
pub const BUNDLED: [&str; 6] = ["fig1", "fig2", "fig3", "fig4", "ex25", "c5"];

/// A bundled instance by name, with or without the `.json` suffix.
pub fn bundled(name: &str) -> Option<Graph> {
    let text = match name.trim_end_matches(".json") {
        "fig1" => FIG1,
        "fig2" => FIG2,
        "fig3" => FIG3,
        "fig4" => FIG4,
        "ex25" => EX25,
        "c5" => C5,
        _ => return None,
    };
    Some(parse_json(text).expect("bundled instance parses"))
}

/// The JSON-lines text of all trees on `n` vertices.
pub fn tree_list_text(n: usize) -> String {
    trees(n).iter().map(|t| crate::io::to_json(t) + "\n").collect()
}
