//! The verification suite: twelve exact checks over bundled instances,
//! exhaustive small-graph corpora and seeded random families.
//!
//! Every check returns a [`CheckResult`] listing what ran, what failed and
//! what a size cap left out.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use itertools::Itertools;
use rand::Rng;
use serde::Serialize;

use crate::admissible::groebner_basis;
use crate::betti::{verify_tree_basis_size, verify_basis_size_formula};
use crate::buchberger::oracle_matches;
use crate::caterpillar::{two_phase_labeling, bridge_compose, bridge_labeling, label_one_at, sweep_labeling, Variant};
use crate::closedness::{
    closure_number, cycle_closure_formula, cycle_labeling, distance_two_labelings, is_closed_labeling,
    is_weakly_closed, is_weakly_closed_labeling, m_of_labeling, m_under, tree_is_3closed,
};
use crate::corpus::{self, bundled};
use crate::error::Result;
use crate::graph::{Graph, Labeling};
use crate::primes::{caterpillar_minimal_primes, krull_dimension, minimal_primes};

/// Labels of the twelve-vertex caterpillar with label 1 on its third path vertex.
pub const FIG3_LABELS: [usize; 12] = [12, 11, 1, 7, 3, 6, 5, 10, 9, 8, 2, 4];

/// Labels of the two caterpillars joined by the bridge `{3, 15}`.
pub const FIG4_LABELS: [usize; 23] = [
    1, 2, 12, 6, 10, 7, 8, 3, 4, 5, 11, 9, 21, 20, 13, 17, 15, 16, 23, 22, 19, 18, 14,
];

const MAX_FAILURES_KEPT: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Caps every exhaustive size bound in the suite.
    pub max_n: Option<usize>,
    /// Random caterpillars for the prime-decomposition check.
    pub caterpillar_samples: usize,
    /// Labelings sampled per graph when `n!` exceeds this.
    pub labeling_samples: usize,
    /// Random caterpillars (and caterpillar pairs) for the labeling checks.
    pub composite_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            max_n: None,
            caterpillar_samples: 200,
            labeling_samples: 1000,
            composite_samples: 200,
        }
    }
}

impl VerifyConfig {
    fn cap(&self, n: usize) -> usize {
        self.max_n.map_or(n, |m| m.min(n))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub cases: u64,
    pub failure_count: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    /// Parts left out by a size cap.
    pub skipped: Vec<String>,
    pub elapsed_ms: u128,
}

impl CheckResult {
    pub fn complete(&self) -> bool {
        self.skipped.is_empty()
    }
}

struct Tally {
    cases: u64,
    failure_count: u64,
    failures: Vec<String>,
    skipped: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            skipped: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_FAILURES_KEPT {
            self.failures.push(msg);
        }
    }

    /// Records a computation error as a failure.
    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }

    fn skip_above(&mut self, what: &str, wanted: usize, cap: usize) {
        if cap < wanted {
            self.skipped.push(format!("{what} with n = {}..={wanted} (capped at {cap})", cap + 1));
        }
    }
}

fn finish(id: u8, title: &'static str, start: Instant, t: Tally) -> CheckResult {
    CheckResult {
        id,
        title,
        passed: t.failure_count == 0 && t.cases > 0,
        cases: t.cases,
        failure_count: t.failure_count,
        failures: t.failures,
        skipped: t.skipped,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn edges_text(g: &Graph) -> String {
    let e: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), e.join(","))
}

fn bundle(name: &str) -> Graph {
    bundled(name).expect("bundled instance")
}

/// Exact closure numbers of the cycles `C_4 ..= C_9` against the closed formula.
pub fn check_cycles(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let top = cfg.cap(9);
    t.skip_above("cycles", 9, top);
    for n in 4..=top {
        let c = Graph::cycle(n).expect("n >= 3");
        let want = cycle_closure_formula(n);
        if let Some(r) = t.ok(closure_number(&c, 9, true), || format!("C{n}")) {
            t.check(r.m == want, || format!("C{n}: search gives {}, formula {want}", r.m));
        }
        let lab = cycle_labeling(n).expect("n >= 4");
        if let Some(m) = t.ok(m_under(&c, &lab), || format!("C{n} construction")) {
            t.check(m == want, || format!("C{n}: construction gives {m}, formula {want}"));
        }
    }
    if let Some(r) = t.ok(closure_number(&Graph::cycle(4).unwrap(), 9, true), || "C4".into()) {
        t.check(r.m == 3, || format!("C4 closure {} != 3", r.m));
    }
    if let Some(r) = t.ok(closure_number(&bundle("c5"), 9, true), || "C5".into()) {
        t.check(r.m == 4, || format!("C5 closure {} != 4", r.m));
    }
    finish(1, "cycle closure numbers", start, t)
}

/// The five-vertex example has a degree-5 element and none of degree 4.
pub fn check_degree_gap(_cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let basis = groebner_basis(&bundle("ex25"));
    let d5 = basis.iter().filter(|e| e.degree() == 5).count();
    let d4 = basis.iter().filter(|e| e.degree() == 4).count();
    t.check(d5 > 0, || "no degree-5 element".into());
    t.check(d4 == 0, || format!("{d4} degree-4 elements"));
    finish(2, "degree gap in a five-vertex basis", start, t)
}

/// The sixteen-vertex spider has no labeling with `d(i, i+1) <= 2`.
pub fn check_spider(_cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let clock = Instant::now();
    if let Some(r) = t.ok(tree_is_3closed(&bundle("fig1")), || "fig1".into()) {
        t.check(!r.answer, || "fig1 reported 3-closed".into());
    }
    let ms = clock.elapsed().as_millis();
    t.check(ms < 1000, || format!("search took {ms} ms"));
    finish(3, "spider is not 3-closed", start, t)
}

/// Krull dimension of the thirteen-vertex caterpillar.
pub fn check_dimension(_cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    if let Some(r) = t.ok(krull_dimension(&bundle("fig2"), 20), || "fig2".into()) {
        t.check(r.dim == 19, || format!("dim = {}", r.dim));
    }
    finish(4, "caterpillar Krull dimension", start, t)
}

/// Path-rule minimal primes against brute force on random caterpillars.
pub fn check_caterpillar_primes(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let top = cfg.cap(14);
    t.skip_above("random caterpillars", 14, top);
    let mut rng = corpus::rng(cfg.seed);
    let mut graphs = vec![bundle("fig2")];
    for _ in 0..cfg.caterpillar_samples {
        let n = rng.gen_range(2..=top.max(2));
        graphs.push(corpus::random_caterpillar(n, &mut rng));
    }
    for g in graphs {
        let rule = t.ok(caterpillar_minimal_primes(&g), || edges_text(&g));
        let brute = t.ok(minimal_primes(&g, 20), || edges_text(&g));
        if let (Some(a), Some(b)) = (rule, brute) {
            let a: HashSet<_> = a.into_iter().collect();
            let b: HashSet<_> = b.into_iter().collect();
            t.check(a == b, || format!("{}: {} vs {} primes", edges_text(&g), a.len(), b.len()));
        }
    }
    finish(5, "caterpillar minimal primes", start, t)
}

/// Buchberger's reduced basis equals the admissible-path basis.
pub fn check_oracle(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let top = cfg.cap(4);
    t.skip_above("labeled connected graphs", 4, top);
    let mut graphs: Vec<Graph> = (1..=top).flat_map(corpus::labeled_connected_graphs).collect();
    graphs.extend(["ex25", "c5", "fig3"].map(bundle));
    for g in graphs {
        if let Some(ok) = t.ok(oracle_matches(&g, 12), || edges_text(&g)) {
            t.check(ok, || format!("{}: bases differ", edges_text(&g)));
        }
    }
    finish(6, "Buchberger oracle agreement", start, t)
}

/// All labelings of `g` when there are at most `cap` of them, otherwise
/// `cap` random ones.
fn labelings(n: usize, cap: usize, rng: &mut impl Rng) -> Vec<Labeling> {
    let exhaustive = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).is_some_and(|f| f <= cap);
    if exhaustive {
        (1..=n)
            .permutations(n)
            .map(|p| Labeling::new(p).unwrap())
            .collect()
    } else {
        (0..cap).map(|_| corpus::random_labeling(n, rng)).collect()
    }
}

/// The closed condition agrees with quadratic bases for every labeling.
pub fn check_closed(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let top = cfg.cap(6);
    t.skip_above("connected graphs", 6, top);
    let mut rng = corpus::rng(cfg.seed);
    for g in corpus::connected_graphs_up_to(top) {
        if g.edge_count() == 0 {
            continue;
        }
        for lab in labelings(g.n(), cfg.labeling_samples, &mut rng) {
            let h = g.relabel(&lab).unwrap();
            if let Some(m) = t.ok(m_of_labeling(&h), || edges_text(&h)) {
                t.check(is_closed_labeling(&h) == (m == 2), || format!("{}: m = {m}", edges_text(&h)));
            }
        }
    }
    finish(7, "closed condition versus quadratic basis", start, t)
}

/// For trees that are not paths, a distance-two labeling exists exactly when
/// the closure number is 3.
pub fn check_tree_criterion(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let top = cfg.cap(9);
    t.skip_above("trees", 9, top);
    for n in 4..=top {
        for tree in corpus::trees(n) {
            if tree.is_path_graph() {
                continue;
            }
            let fast = t.ok(tree_is_3closed(&tree), || edges_text(&tree));
            let slow = t.ok(closure_number(&tree, 9, true), || edges_text(&tree));
            if let (Some(a), Some(b)) = (fast, slow) {
                t.check(a.answer == (b.m == 3), || {
                    format!("{}: criterion {} but closure {}", edges_text(&tree), a.answer, b.m)
                });
            }
        }
    }
    finish(8, "tree 3-closed criterion", start, t)
}

/// Weakly closed graphs have closure number at most 4; caterpillars are
/// weakly closed and, among trees, the only ones.
pub fn check_weakly_closed(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let top = cfg.cap(7);
    t.skip_above("connected graphs", 7, top);
    for g in corpus::connected_graphs_up_to(top) {
        if g.edge_count() == 0 {
            continue;
        }
        let Some(w) = t.ok(is_weakly_closed(&g, 9), || edges_text(&g)) else {
            continue;
        };
        let Some(lab) = w.witness else { continue };
        // The witness labeling bounds the closure number from above.
        let bound = t.ok(m_under(&g, &lab), || edges_text(&g));
        match bound {
            Some(m) if m <= 4 => t.check(true, String::new),
            _ => {
                if let Some(r) = t.ok(closure_number(&g, 9, true), || edges_text(&g)) {
                    t.check(r.m <= 4, || format!("{}: closure {}", edges_text(&g), r.m));
                }
            }
        }
    }
    let tree_top = cfg.cap(9);
    t.skip_above("trees", 9, tree_top);
    for n in 1..=tree_top {
        for tree in corpus::trees(n) {
            if let Some(w) = t.ok(is_weakly_closed(&tree, 9), || edges_text(&tree)) {
                t.check(w.answer == tree.is_caterpillar(), || {
                    format!("{}: weakly closed {}", edges_text(&tree), w.answer)
                });
            }
        }
    }
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.composite_samples {
        let n = rng.gen_range(2..=24);
        let c = corpus::random_caterpillar(n, &mut rng);
        if let Some(lab) = t.ok(sweep_labeling(&c), || edges_text(&c)) {
            let h = c.relabel(&lab).unwrap();
            t.check(is_weakly_closed_labeling(&h), || format!("{}: sweep not weakly closed", edges_text(&c)));
        }
    }
    finish(9, "weakly closed bound", start, t)
}

/// `|G| = n - 1 + β_{1,3}` for distance-two tree labelings, and the general
/// size formula for labelings with basis degree at most 3.
pub fn check_betti(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let tree_size = |t: &mut Tally, h: &Graph| {
        if let Some(r) = t.ok(verify_tree_basis_size(h), || edges_text(h)) {
            t.check(r.equal, || format!("{}: {} != {}", edges_text(h), r.lhs, r.rhs));
        }
    };
    let top = cfg.cap(9);
    t.skip_above("trees", 9, top);
    for n in 4..=top {
        for tree in corpus::trees(n) {
            if tree.is_path_graph() {
                continue;
            }
            let Some(r) = t.ok(tree_is_3closed(&tree), || edges_text(&tree)) else {
                continue;
            };
            let Some(w) = r.witness else { continue };
            tree_size(&mut t, &tree.relabel(&w).unwrap());
            if let Some(all) = t.ok(distance_two_labelings(&tree, 500), || edges_text(&tree)) {
                for lab in all {
                    tree_size(&mut t, &tree.relabel(&lab).unwrap());
                }
            }
        }
    }
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.composite_samples {
        let n = rng.gen_range(2..=24);
        let c = corpus::random_caterpillar(n, &mut rng);
        let v = rng.gen_range(1..=n);
        if let Some(lab) = t.ok(label_one_at(&c, v), || edges_text(&c)) {
            tree_size(&mut t, &c.relabel(&lab).unwrap());
        }
    }

    let size_formula = |t: &mut Tally, h: &Graph| {
        if let Some(r) = t.ok(verify_basis_size_formula(h), || edges_text(h)) {
            t.check(r.equal, || format!("{}: {} != {}", edges_text(h), r.lhs, r.rhs));
        }
    };
    size_formula(&mut t, &Graph::complete(3));
    size_formula(&mut t, &Graph::cycle(4).unwrap());
    let top = cfg.cap(6);
    t.skip_above("3-closed labeled graphs", 6, top);
    let mut seen = HashSet::new();
    for g in corpus::connected_graphs_up_to(top) {
        if g.edge_count() == 0 {
            continue;
        }
        for p in (1..=g.n()).permutations(g.n()) {
            let h = g.relabel(&Labeling::new(p).unwrap()).unwrap();
            if !seen.insert(h.edges().to_vec()) {
                continue;
            }
            if m_of_labeling(&h).is_ok_and(|m| m <= 3) {
                size_formula(&mut t, &h);
            }
        }
    }
    finish(10, "basis size through beta_{1,3}", start, t)
}

/// The path-start caterpillar labeling and the bridge composition on the
/// bundled instances, label for label.
pub fn check_bundled_labelings(_cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let fig3 = bundle("fig3");
    if let Some(lab) = t.ok(two_phase_labeling(&fig3, 3, Variant::PathStart), || "fig3".into()) {
        t.check(lab.as_slice() == FIG3_LABELS, || format!("fig3 labels {:?}", lab.as_slice()));
        t.check(fig3.relabel(&lab).unwrap().consecutive_labels_within_two(), || {
            "fig3 labeling has a distance above 2".into()
        });
    }
    let fig4 = bundle("fig4");
    if let Some(lab) = t.ok(bridge_labeling(&fig4, (3, 15)), || "fig4".into()) {
        t.check(lab.as_slice() == FIG4_LABELS, || format!("fig4 labels {:?}", lab.as_slice()));
        t.check(fig4.relabel(&lab).unwrap().consecutive_labels_within_two(), || {
            "fig4 labeling has a distance above 2".into()
        });
    }
    finish(11, "caterpillar labelings on bundled instances", start, t)
}

/// `m <= ℓ + 1` with `ℓ` the longest induced path, monotonicity under
/// connected induced subgraphs, and the bridge-composition bound.
pub fn check_bounds(cfg: &VerifyConfig) -> CheckResult {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut memo: HashMap<(usize, Vec<(usize, usize)>), usize> = HashMap::new();
    let mut closure = |t: &mut Tally, g: &Graph| -> Option<usize> {
        let c = corpus::canonical(g);
        let key = (c.n(), c.edges().to_vec());
        if let Some(&m) = memo.get(&key) {
            return Some(m);
        }
        let m = t.ok(closure_number(g, 9, true), || edges_text(g))?.m;
        memo.insert(key, m);
        Some(m)
    };
    let top = cfg.cap(7);
    t.skip_above("connected graphs", 7, top);
    let graphs: Vec<Graph> = corpus::connected_graphs_up_to(top)
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .collect();
    for g in &graphs {
        let ell = g.longest_induced_path_exhaustive();
        if let Some(m) = closure(&mut t, g) {
            t.check(m <= ell + 1, || format!("{}: m = {m}, longest induced path {ell}", edges_text(g)));
        }
    }
    let sub_top = cfg.cap(6);
    t.skip_above("induced subgraphs of connected graphs", 6, sub_top);
    for g in graphs.iter().filter(|g| g.n() <= sub_top) {
        let Some(mg) = closure(&mut t, g) else { continue };
        for size in 2..g.n() {
            for keep in (1..=g.n()).combinations(size) {
                let (h, _) = g.induced_subgraph(&keep);
                if !h.is_connected() {
                    continue;
                }
                if let Some(mh) = closure(&mut t, &h) {
                    t.check(mh <= mg, || {
                        format!("{}: subgraph {keep:?} has m = {mh} > {mg}", edges_text(g))
                    });
                }
            }
        }
    }
    let mut rng = corpus::rng(cfg.seed);
    for _ in 0..cfg.composite_samples {
        let (n1, n2) = (rng.gen_range(2..=12), rng.gen_range(2..=12));
        let h1 = corpus::random_caterpillar(n1, &mut rng);
        let h2 = corpus::random_caterpillar(n2, &mut rng);
        let (a, b) = (rng.gen_range(1..=n1), rng.gen_range(1..=n2));
        let labs = (label_one_at(&h1, a), label_one_at(&h2, b));
        let (Some(l1), Some(l2)) = (t.ok(labs.0, || edges_text(&h1)), t.ok(labs.1, || edges_text(&h2))) else {
            continue;
        };
        let (Some(m1), Some(m2)) = (
            t.ok(m_under(&h1, &l1), || edges_text(&h1)),
            t.ok(m_under(&h2, &l2), || edges_text(&h2)),
        ) else {
            continue;
        };
        if let Some((g, lab)) = t.ok(bridge_compose(&h1, &l1, &h2, &l2, (a, b)), || edges_text(&h1)) {
            if let Some(m) = t.ok(m_under(&g, &lab), || edges_text(&g)) {
                t.check(m <= m1.max(m2), || {
                    format!("{}: composite m = {m} > max({m1}, {m2})", edges_text(&g))
                });
            }
        }
    }
    finish(12, "closure number bounds", start, t)
}

pub type Check = fn(&VerifyConfig) -> CheckResult;

/// The checks in order.
pub const CHECKS: [Check; 12] = [
    check_cycles,
    check_degree_gap,
    check_spider,
    check_dimension,
    check_caterpillar_primes,
    check_oracle,
    check_closed,
    check_tree_criterion,
    check_weakly_closed,
    check_betti,
    check_bundled_labelings,
    check_bounds,
];

pub fn run_check(id: u8, cfg: &VerifyConfig) -> Option<CheckResult> {
    CHECKS.get(usize::from(id).checked_sub(1)?).map(|c| c(cfg))
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckResult> {
    CHECKS.iter().map(|c| c(cfg)).collect()
}
