//! Minimal primes of binomial edge ideals and the Krull dimension.
//!
//! For `S ⊆ [n]` let `G_1, ..., G_c(S)` be the components of `G` minus `S`.
//! The prime `P_S(G)` is generated by `x_i, y_i` for `i in S` and the
//! binomials of the complete graphs on each `G_k`; `J_G` is the intersection
//! of all `P_S(G)`. For connected `G`, `P_S(G)` is a minimal prime exactly
//! when `S` is empty or removing any single vertex from `S` lowers the
//! component count.

use std::fmt;

use serde::Serialize;

use crate::caterpillar::decompose;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for subset enumeration.
pub const DEFAULT_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeComponent {
    pub n: usize,
    /// The cut set, ascending.
    pub s: Vec<usize>,
    /// Components of the complement, each ascending, ordered by minimum.
    pub components: Vec<Vec<usize>>,
}

impl PrimeComponent {
    /// `(n - |S|) + c(S)`, the dimension of `R / P_S(G)`.
    pub fn dim_contribution(&self) -> usize {
        self.n - self.s.len() + self.components.len()
    }
}

fn set_text(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

impl fmt::Display for PrimeComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| set_text(c)).collect();
        write!(
            f,
            "S={}; components=[{}]; dim=({}-{})+{}={}",
            set_text(&self.s),
            comps.join(","),
            self.n,
            self.s.len(),
            self.components.len(),
            self.dim_contribution()
        )
    }
}

fn normalized(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

pub fn prime_component(g: &Graph, s: &[usize]) -> Result<PrimeComponent> {
    let s = normalized(g, s)?;
    Ok(PrimeComponent {
        n: g.n(),
        components: g.components_without(&s),
        s,
    })
}

/// Whether `P_S(G)` is a minimal prime of `J_G` (connected `G`).
pub fn is_minimal_prime(g: &Graph, s: &[usize]) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let s = normalized(g, s)?;
    let c = g.components_without(&s).len();
    Ok(s.iter().all(|&i| {
        let rest: Vec<usize> = s.iter().copied().filter(|&v| v != i).collect();
        g.components_without(&rest).len() < c
    }))
}

/// Component counts `c(S)` for all subsets, indexed by bit mask (bit `v - 1`
/// for vertex `v`).
fn component_table(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let nbr: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << (w - 1)))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    (0..=full)
        .map(|s| {
            let mut left = full & !s;
            let mut count = 0u8;
            while left != 0 {
                count += 1;
                let mut frontier = left & left.wrapping_neg();
                left &= !frontier;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    let new = nbr[v] & left;
                    left &= !new;
                    frontier |= new;
                }
            }
            count
        })
        .collect()
}

fn mask_to_set(mask: u32, n: usize) -> Vec<usize> {
    (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect()
}

fn minimal_masks(g: &Graph, table: &[u8]) -> Vec<u32> {
    let n = g.n();
    (0..table.len() as u32)
        .filter(|&s| {
            (0..n).all(|b| s >> b & 1 == 0 || table[(s & !(1 << b)) as usize] < table[s as usize])
        })
        .collect()
}

fn canonical(mut primes: Vec<PrimeComponent>) -> Vec<PrimeComponent> {
    primes.sort_by(|a, b| a.s.len().cmp(&b.s.len()).then_with(|| a.s.cmp(&b.s)));
    primes
}

fn check_size(g: &Graph, max_n: usize) -> Result<()> {
    let max = max_n.min(31);
    if g.n() > max {
        return Err(Error::TooLarge { n: g.n(), max });
    }
    Ok(())
}

/// All minimal primes, ordered by `|S|` and then lexicographically by `S`.
pub fn minimal_primes(g: &Graph, max_n: usize) -> Result<Vec<PrimeComponent>> {
    check_size(g, max_n)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let table = component_table(g);
    let primes = minimal_masks(g, &table)
        .into_iter()
        .map(|m| prime_component(g, &mask_to_set(m, g.n())))
        .collect::<Result<Vec<_>>>()?;
    Ok(canonical(primes))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub dim: usize,
    /// A cut set attaining the maximum (the first in canonical order).
    pub witness: PrimeComponent,
}

/// `max (n - |S|) + c(S)`. For connected graphs only minimal-prime cut sets
/// are scanned; otherwise all subsets.
pub fn krull_dimension(g: &Graph, max_n: usize) -> Result<DimensionReport> {
    check_size(g, max_n)?;
    let n = g.n();
    let table = component_table(g);
    let candidates: Vec<u32> = if g.is_connected() {
        minimal_masks(g, &table)
    } else {
        (0..table.len() as u32).collect()
    };
    let value = |m: u32| n - m.count_ones() as usize + table[m as usize] as usize;
    let dim = candidates.iter().map(|&m| value(m)).max().unwrap_or(0);
    let mut best: Vec<Vec<usize>> = candidates
        .iter()
        .filter(|&&m| value(m) == dim)
        .map(|&m| mask_to_set(m, n))
        .collect();
    best.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(DimensionReport {
        dim,
        witness: prime_component(g, &best[0])?,
    })
}

/// Minimal primes of a caterpillar read off its central path `v_1..v_l`:
/// `S` is empty or a set of inner path vertices `v_{i_1}, ..., v_{i_k}`
/// (`1 < i_1 < ... < i_k < l`) where a degree-2 member is at path distance
/// at least 2 from both neighbors in `S`, a degree-3 member from at least one
/// of them, and members of degree 4 or more are unconstrained. A missing
/// neighbor (first or last member) counts as far away.
pub fn caterpillar_minimal_primes(t: &Graph) -> Result<Vec<PrimeComponent>> {
    let dec = decompose(t)?;
    let l = dec.len();
    let inner: Vec<usize> = (2..l).collect();
    if inner.len() > 30 {
        return Err(Error::TooLarge { n: inner.len(), max: 30 });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << inner.len()) {
        let idx: Vec<usize> = (0..inner.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| inner[b])
            .collect();
        let ok = (0..idx.len()).all(|k| {
            let far_left = k == 0 || idx[k] - idx[k - 1] >= 2;
            let far_right = k + 1 == idx.len() || idx[k + 1] - idx[k] >= 2;
            match t.degree(dec.central_path[idx[k] - 1]) {
                2 => far_left && far_right,
                3 => far_left || far_right,
                _ => true,
            }
        });
        if ok {
            let s: Vec<usize> = idx.iter().map(|&i| dec.central_path[i - 1]).collect();
            out.push(prime_component(t, &s)?);
        }
    }
    Ok(canonical(out))
}

/// Every edge has an endpoint in `S` or both endpoints in one component,
/// i.e. every generator of `J_G` lies in `P_S(G)`.
pub fn generator_membership(g: &Graph, pc: &PrimeComponent) -> bool {
    let mut comp = vec![usize::MAX; g.n() + 1];
    for (k, c) in pc.components.iter().enumerate() {
        for &v in c {
            if v <= g.n() {
                comp[v] = k;
            }
        }
    }
    g.edges().iter().all(|&(i, j)| {
        pc.s.contains(&i) || pc.s.contains(&j) || (comp[i] != usize::MAX && comp[i] == comp[j])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(p: &[PrimeComponent]) -> Vec<Vec<usize>> {
        p.iter().map(|c| c.s.clone()).collect()
    }

    #[test]
    fn components_and_text() {
        let p3 = Graph::path(3);
        let pc = prime_component(&p3, &[]).unwrap();
        assert_eq!((pc.components.clone(), pc.dim_contribution()), (vec![vec![1, 2, 3]], 4));
        let pc = prime_component(&p3, &[2]).unwrap();
        assert_eq!(pc.to_string(), "S={2}; components=[{1},{3}]; dim=(3-1)+2=4");
        let c4 = Graph::cycle(4).unwrap();
        let pc = prime_component(&c4, &[3, 1]).unwrap();
        assert_eq!((pc.components.clone(), pc.dim_contribution()), (vec![vec![2], vec![4]], 4));
        assert!(prime_component(&p3, &[4]).is_err());
    }

    #[test]
    fn minimality() {
        let p3 = Graph::path(3);
        assert!(is_minimal_prime(&p3, &[2]).unwrap());
        assert!(!is_minimal_prime(&p3, &[1]).unwrap());
        assert!(is_minimal_prime(&p3, &[]).unwrap());
        assert_eq!(sets(&minimal_primes(&p3, 20).unwrap()), vec![vec![], vec![2]]);
        assert_eq!(sets(&minimal_primes(&Graph::complete(5), 20).unwrap()), vec![Vec::<usize>::new()]);
        assert_eq!(
            is_minimal_prime(&Graph::new(2, &[]).unwrap(), &[]),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn dimensions() {
        for n in 1..=8 {
            assert_eq!(krull_dimension(&Graph::path(n), 20).unwrap().dim, n + 1);
        }
        assert_eq!(
            krull_dimension(&Graph::path(21), 20).unwrap_err(),
            Error::TooLarge { n: 21, max: 20 }
        );
        // Two isolated vertices: (2 - 0) + 2.
        assert_eq!(krull_dimension(&Graph::new(2, &[]).unwrap(), 20).unwrap().dim, 4);
    }

    #[test]
    fn caterpillar_rule_on_paths() {
        let p6 = Graph::path(6);
        assert_eq!(
            sets(&caterpillar_minimal_primes(&p6).unwrap()),
            sets(&minimal_primes(&p6, 20).unwrap())
        );
    }

    #[test]
    fn adjacent_degree_three_vertices() {
        // path 1..5 with leaves 6 on 2, 7 on 3, 8 on 4
        let t = Graph::new(8, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7), (4, 8)]).unwrap();
        let cat = sets(&caterpillar_minimal_primes(&t).unwrap());
        assert!(!cat.contains(&vec![2, 3, 4]));
        assert!(cat.contains(&vec![2, 3]));
        assert_eq!(cat, sets(&minimal_primes(&t, 20).unwrap()));
    }

    #[test]
    fn membership() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(generator_membership(&c4, &prime_component(&c4, &[1, 3]).unwrap()));
        let fake = PrimeComponent {
            n: 3,
            s: vec![],
            components: vec![vec![1], vec![2, 3]],
        };
        assert!(!generator_membership(&Graph::path(3), &fake));
    }
}
