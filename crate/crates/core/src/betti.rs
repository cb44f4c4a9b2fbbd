//! The graded Betti number `β_{1,3}` of an edge ideal, counted over
//! three-vertex subsets, and the basis-size identities it enters.
//!
//! For the edge ideal `I(H)`, `β_{1,3}` is the sum over 3-subsets `W` of the
//! rank of reduced 0-th homology of the independence complex of `H[W]`,
//! which is the number of connected components of that complex minus one.

use serde::Serialize;

use crate::admissible::groebner_basis;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiCertificate {
    pub beta13: usize,
    /// 3-subsets with nonzero rank, with that rank.
    pub contributing_triples: Vec<([usize; 3], usize)>,
}

/// Components of the independence complex on `w` minus one. On three
/// vertices its 1-skeleton is the complement of `h[w]`.
fn reduced_h0_rank(h: &Graph, w: [usize; 3]) -> usize {
    let mut comp = [0usize, 1, 2];
    for a in 0..3 {
        for b in a + 1..3 {
            if !h.has_edge(w[a], w[b]) {
                let (ca, cb) = (comp[a], comp[b]);
                for c in comp.iter_mut() {
                    if *c == cb {
                        *c = ca;
                    }
                }
            }
        }
    }
    let mut distinct = comp.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.len() - 1
}

pub fn beta13_edge_ideal(h: &Graph) -> BettiCertificate {
    let n = h.n();
    let mut contributing_triples = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let rank = reduced_h0_rank(h, [a, b, c]);
                if rank > 0 {
                    contributing_triples.push(([a, b, c], rank));
                }
            }
        }
    }
    BettiCertificate {
        beta13: contributing_triples.iter().map(|t| t.1).sum(),
        contributing_triples,
    }
}

/// `β_{1,3}` of the edge ideal of the star transform of `g`.
pub fn beta13_of_star(g: &Graph) -> BettiCertificate {
    beta13_edge_ideal(&g.star_transform().to_graph())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    /// Size of the reduced Gröbner basis.
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
    pub beta13: usize,
}

/// `|G| = n - 1 + β_{1,3}(I(T*))` for a tree labeled with `d(i, i+1) <= 2`.
pub fn verify_tree_basis_size(t: &Graph) -> Result<IdentityCheck> {
    if !t.is_tree() {
        return Err(Error::PreconditionFailed("the graph is not a tree".into()));
    }
    if !t.consecutive_labels_within_two() {
        return Err(Error::PreconditionFailed(
            "some consecutive labels are more than distance 2 apart".into(),
        ));
    }
    let lhs = groebner_basis(t).len();
    let beta13 = beta13_of_star(t).beta13;
    let rhs = t.n() - 1 + beta13;
    Ok(IdentityCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
        beta13,
    })
}

/// `|G| = |E| + β_{1,3}(I(G*)) - 2 K_3(G)` for a labeling whose basis has
/// degree at most 3.
pub fn verify_basis_size_formula(g: &Graph) -> Result<IdentityCheck> {
    let basis = groebner_basis(g);
    if basis.iter().any(|e| e.degree() > 3) {
        return Err(Error::PreconditionFailed(
            "the labeling has a basis element of degree above 3".into(),
        ));
    }
    let lhs = basis.len();
    let beta13 = beta13_of_star(g).beta13;
    let rhs = (g.edge_count() + beta13)
        .checked_sub(2 * g.triangle_count())
        .ok_or_else(|| Error::PreconditionFailed("negative right-hand side".into()))?;
    Ok(IdentityCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
        beta13,
    })
}
