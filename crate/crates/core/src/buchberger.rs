//! A small exact Buchberger engine over the rationals in the variables
//! `x_1 > ... > x_n > y_1 > ... > y_n` with the lexicographic order.
//!
//! It exists to certify the admissible-path basis on small graphs and is
//! guarded by a step budget; it is not meant for large inputs.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::admissible::{groebner_basis, GroebnerElement};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default Buchberger step budget.
pub const DEFAULT_STEP_GUARD: usize = 200_000;

/// Exponent vector over `2n` variables: index `k < n` is `x_{k+1}`, index
/// `n + k` is `y_{k+1}`. The derived ordering compares exponents from `x_1`
/// on, which is the lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_i y_j` style product given by variable indices.
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; nvars];
        for &v in vars {
            e[v] += 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len() / 2;
        let mut factors = Vec::new();
        for (k, &e) in self.0.iter().enumerate() {
            let name = if k < n {
                format!("x{}", k + 1)
            } else {
                format!("y{}", k - n + 1)
            };
            for _ in 0..e {
                factors.push(name.clone());
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> &Monomial {
        self.leading().expect("nonzero polynomial").0
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self -= c * m * other`.
    fn sub_scaled(&mut self, c: &BigRational, m: &Monomial, other: &Polynomial) {
        for (om, oc) in &other.terms {
            self.add_term(m.mul(om), -(c * oc));
        }
    }

    pub fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.leading() {
            let inv = lc.recip();
            for c in self.terms.values_mut() {
                *c *= &inv;
            }
        }
        self
    }

    /// At most two terms, every coefficient `±1`.
    pub fn is_unit_binomial(&self) -> bool {
        self.terms.len() <= 2 && self.terms.values().all(|c| c.abs().is_one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let constant = m.degree() == 0;
            if !a.is_one() || constant {
                write!(f, "{a}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            if !constant {
                m.write(f)?;
            }
        }
        Ok(())
    }
}

fn x(_n: usize, i: usize) -> usize {
    i - 1
}

fn y(n: usize, j: usize) -> usize {
    n + j - 1
}

/// `x_i y_j - x_j y_i` for every edge `{i, j}`, `i < j`.
pub fn edge_generators(g: &Graph) -> Vec<Polynomial> {
    let n = g.n();
    g.edges()
        .iter()
        .map(|&(i, j)| binomial(n, &[], i, j))
        .collect()
}

fn binomial(n: usize, factor: &[usize], i: usize, j: usize) -> Polynomial {
    let nv = 2 * n;
    let mut a: Vec<usize> = factor.to_vec();
    a.extend([x(n, i), y(n, j)]);
    let mut b: Vec<usize> = factor.to_vec();
    b.extend([x(n, j), y(n, i)]);
    Polynomial::from_terms(
        nv,
        [
            (Monomial::from_vars(nv, &a), BigRational::one()),
            (Monomial::from_vars(nv, &b), -BigRational::one()),
        ],
    )
}

/// `u_pi * f_ij` as a polynomial in `2n` variables.
pub fn element_polynomial(el: &GroebnerElement, n: usize) -> Polynomial {
    let mut factor: Vec<usize> = el.x.iter().map(|&v| x(n, v)).collect();
    factor.extend(el.y.iter().map(|&v| y(n, v)));
    binomial(n, &factor, el.edge.0, el.edge.1)
}

/// Full reduction of `p` by `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = p.clone();
    let mut rest = Polynomial::zero(p.nvars);
    while let Some((lm, lc)) = p.leading() {
        let (lm, lc) = (lm.clone(), lc.clone());
        match basis.iter().find(|g| g.leading_monomial().divides(&lm)) {
            Some(g) => {
                let (glm, glc) = g.leading().unwrap();
                p.sub_scaled(&(&lc / glc), &lm.div(glm), g);
            }
            None => {
                p.terms.remove(&lm);
                rest.add_term(lm, lc);
            }
        }
    }
    rest
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading().unwrap();
    let (gm, gc) = g.leading().unwrap();
    let l = fm.lcm(gm);
    let mut s = Polynomial::zero(f.nvars);
    s.sub_scaled(&-fc.recip(), &l.div(fm), f);
    s.sub_scaled(&gc.recip(), &l.div(gm), g);
    s
}

/// Order in which critical pairs are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Smallest lcm of leading monomials first.
    Normal,
    /// Creation order.
    Fifo,
}

#[derive(Debug, Clone)]
pub struct GroebnerRun {
    pub basis: Vec<Polynomial>,
    /// Critical pairs reduced.
    pub steps: usize,
    /// Nonzero remainders that were not `±1` binomials.
    pub non_unit_binomials: usize,
}

/// Reduced Gröbner basis with the normal strategy, monic, sorted by leading
/// monomial.
pub fn reduced_groebner(gens: &[Polynomial], step_guard: usize) -> Result<Vec<Polynomial>> {
    Ok(reduced_groebner_with(gens, step_guard, Strategy::Normal)?.basis)
}

pub fn reduced_groebner_with(
    gens: &[Polynomial],
    step_guard: usize,
    strategy: Strategy,
) -> Result<GroebnerRun> {
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: VecDeque<(usize, usize)> = VecDeque::new();
    let mut open: HashSet<(usize, usize)> = HashSet::new();
    let mut non_unit = 0;
    let add = |p: Polynomial,
                   basis: &mut Vec<Polynomial>,
                   pending: &mut VecDeque<(usize, usize)>,
                   open: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        basis.push(p.monic());
        for i in 0..k {
            pending.push_back((i, k));
            open.insert((i, k));
        }
    };
    for g in gens {
        if !g.is_zero() {
            add(g.clone(), &mut basis, &mut pending, &mut open);
        }
    }
    let mut steps = 0;
    while !pending.is_empty() {
        let pick = match strategy {
            Strategy::Fifo => 0,
            Strategy::Normal => {
                let lcm = |&(i, j): &(usize, usize)| {
                    basis[i].leading_monomial().lcm(basis[j].leading_monomial())
                };
                (0..pending.len())
                    .min_by(|&a, &b| lcm(&pending[a]).cmp(&lcm(&pending[b])).then(a.cmp(&b)))
                    .unwrap()
            }
        };
        let (i, j) = pending.remove(pick).unwrap();
        open.remove(&(i, j));
        let (li, lj) = (basis[i].leading_monomial(), basis[j].leading_monomial());
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().divides(&l)
                && !open.contains(&key(i, k))
                && !open.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        steps += 1;
        if steps > step_guard {
            return Err(Error::GuardExceeded(step_guard));
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            if !r.is_unit_binomial() {
                non_unit += 1;
            }
            add(r, &mut basis, &mut pending, &mut open);
        }
    }
    Ok(GroebnerRun {
        basis: reduce_basis(basis),
        steps,
        non_unit_binomials: non_unit,
    })
}

/// Drops redundant elements, reduces each by the others, makes all monic and
/// sorts by leading monomial.
fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial();
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            let hm = h.leading_monomial();
            o != k && hm.divides(lm) && (hm != lm || o < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(o, _)| o != k)
                .map(|(_, h)| h.clone())
                .collect();
            let g = &minimal[k];
            let (lm, lc) = g.leading().unwrap();
            let mut tail = g.clone();
            tail.terms.remove(lm);
            let mut r = normal_form(&tail, &others);
            r.add_term(lm.clone(), lc.clone());
            r.monic()
        })
        .collect();
    out.sort_by(|a, b| a.leading_monomial().cmp(b.leading_monomial()));
    out
}

/// Whether every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    (0..basis.len()).all(|i| {
        (i + 1..basis.len()).all(|j| normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero())
    })
}

/// The admissible-path basis as sorted polynomials.
pub fn admissible_polynomials(g: &Graph) -> Vec<Polynomial> {
    let mut polys: Vec<Polynomial> = groebner_basis(g)
        .iter()
        .map(|e| element_polynomial(e, g.n()))
        .collect();
    polys.sort_by(|a, b| a.leading_monomial().cmp(b.leading_monomial()));
    polys
}

/// Whether Buchberger's reduced basis equals the admissible-path basis.
pub fn oracle_matches(g: &Graph, max_n: usize) -> Result<bool> {
    oracle_matches_with(g, max_n, DEFAULT_STEP_GUARD)
}

pub fn oracle_matches_with(g: &Graph, max_n: usize, step_guard: usize) -> Result<bool> {
    if g.n() > max_n {
        return Err(Error::TooLarge { n: g.n(), max: max_n });
    }
    let oracle = reduced_groebner(&edge_generators(g), step_guard)?;
    Ok(oracle == admissible_polynomials(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn lex_order() {
        let nv = 4; // x1 x2 y1 y2
        let x1 = Monomial::from_vars(nv, &[0]);
        let x2y2 = Monomial::from_vars(nv, &[1, 3, 3]);
        assert!(x1 > x2y2);
        assert!(Monomial::from_vars(nv, &[3]) > Monomial::one(nv));
    }

    #[test]
    fn generators() {
        assert_eq!(
            texts(&edge_generators(&Graph::path(3))),
            vec!["x1*y2 - x2*y1", "x2*y3 - x3*y2"]
        );
        assert!(edge_generators(&Graph::new(2, &[]).unwrap()).is_empty());
    }

    #[test]
    fn small_bases() {
        let p3 = edge_generators(&Graph::path(3));
        let mut want = p3.clone();
        want.sort_by(|a, b| a.leading_monomial().cmp(b.leading_monomial()));
        assert_eq!(reduced_groebner(&p3, 100).unwrap(), want);
        let single = edge_generators(&Graph::path(2));
        assert_eq!(reduced_groebner(&single, 100).unwrap(), single);
        let c4 = reduced_groebner(&edge_generators(&Graph::cycle(4).unwrap()), 1000).unwrap();
        assert_eq!(c4.len(), 6);
        assert_eq!(c4.iter().map(|p| p.total_degree()).max(), Some(3));
        assert!(is_groebner_basis(&c4));
    }

    #[test]
    fn strategies_agree() {
        let ex25 = Graph::new(5, &[(1, 4), (3, 4), (3, 5), (2, 5)]).unwrap();
        let gens = edge_generators(&ex25);
        let a = reduced_groebner_with(&gens, 1000, Strategy::Normal).unwrap();
        let b = reduced_groebner_with(&gens, 1000, Strategy::Fifo).unwrap();
        assert_eq!(a.basis, b.basis);
        assert_eq!(a.non_unit_binomials, 0);
    }

    #[test]
    fn oracle_examples() {
        let ex25 = Graph::new(5, &[(1, 4), (3, 4), (3, 5), (2, 5)]).unwrap();
        assert!(oracle_matches(&ex25, 5).unwrap());
        assert!(oracle_matches(&Graph::cycle(5).unwrap(), 5).unwrap());
        assert!(oracle_matches(&Graph::complete(4), 5).unwrap());
        assert_eq!(
            oracle_matches(&Graph::path(6), 5),
            Err(Error::TooLarge { n: 6, max: 5 })
        );
    }

    #[test]
    fn guard() {
        let gens = edge_generators(&Graph::cycle(5).unwrap());
        assert_eq!(reduced_groebner(&gens, 1), Err(Error::GuardExceeded(1)));
    }

    #[test]
    fn element_expansion_matches_text() {
        let ex25 = Graph::new(5, &[(1, 4), (3, 4), (3, 5), (2, 5)]).unwrap();
        for el in groebner_basis(&ex25) {
            assert_eq!(element_polynomial(&el, 5).to_string(), el.expanded_text());
        }
    }
}
