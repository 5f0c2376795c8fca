//! Buchberger's algorithm with the normal selection strategy and the two
//! classical pair criteria, reduced bases, normal forms, and Hilbert
//! function values of graded quotients.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::multipoly::{graded_monomials, MPoly, Mono, MonomialOrder, MAX_VARS};

/// Sort key whose natural order agrees with the monomial order.
type Key = u128;

fn key(order: MonomialOrder, m: &Mono) -> Key {
    let mut k: u128 = 0;
    match order {
        MonomialOrder::Grevlex => {
            k = m.degree() as u128;
            for i in (0..MAX_VARS).rev() {
                k = (k << 16) | (u16::MAX - m.0[i]) as u128;
            }
        }
        MonomialOrder::Lex => {
            for i in 0..MAX_VARS {
                k = (k << 16) | m.0[i] as u128;
            }
        }
    }
    k
}

/// Terms sorted by decreasing monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly<F> {
    terms: Vec<(Mono, F)>,
}

impl<F: Field> Poly<F> {
    fn from_mpoly(p: &MPoly<F>, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Mono, F)> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    fn to_mpoly(&self, nvars: usize) -> MPoly<F> {
        MPoly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.inv().expect("leading coefficient is nonzero");
                for (_, c) in &mut self.terms {
                    *c = c.mul(&inv);
                }
            }
        }
        self
    }
}

/// Reduces `f` completely modulo `basis` (each element monic, nonzero).
/// Returns the remainder, sorted, with no term divisible by a leading
/// monomial of `basis`.
fn reduce<F: Field>(
    order: MonomialOrder,
    f: impl IntoIterator<Item = (Mono, F)>,
    basis: &[Poly<F>],
) -> Poly<F> {
    let mut work: BTreeMap<Key, (Mono, F)> = BTreeMap::new();
    let add_into = |work: &mut BTreeMap<Key, (Mono, F)>, m: Mono, c: F| {
        use std::collections::btree_map::Entry;
        match work.entry(key(order, &m)) {
            Entry::Vacant(e) => {
                e.insert((m, c));
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().1.add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.get_mut().1 = sum;
                }
            }
        }
    };
    for (m, c) in f {
        if !c.is_zero() {
            add_into(&mut work, m, c);
        }
    }
    let mut rem = Vec::new();
    while let Some((_, (m, c))) = work.pop_last() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = g.lm().quotient_of(&m);
                let neg_c = c.neg();
                for (gm, gc) in &g.terms[1..] {
                    add_into(&mut work, gm.mul(&q), gc.mul(&neg_c));
                }
            }
            None => rem.push((m, c)),
        }
    }
    Poly { terms: rem }
}

fn s_poly<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Vec<(Mono, F)> {
    let l = f.lm().lcm(g.lm());
    let qf = f.lm().quotient_of(&l);
    let qg = g.lm().quotient_of(&l);
    // both inputs are monic, so the leading terms cancel exactly
    let mut out: Vec<(Mono, F)> = f.terms[1..]
        .iter()
        .map(|(m, c)| (m.mul(&qf), c.clone()))
        .collect();
    out.extend(g.terms[1..].iter().map(|(m, c)| (m.mul(&qg), c.neg())));
    out
}

/// Counters from one Buchberger run. Not part of the basis identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_created: usize,
    pub pairs_coprime: usize,
    pub pairs_chain: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub elapsed: Duration,
}

/// A reduced Groebner basis: monic, auto-reduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F> {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Poly<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn generators(&self) -> Vec<MPoly<F>> {
        self.polys.iter().map(|p| p.to_mpoly(self.nvars)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.polys.iter().map(|p| *p.lm()).collect()
    }

    /// One generator per line in the polynomial literal grammar.
    pub fn dump(&self) -> String {
        self.generators().iter().map(|g| format!("{g}\n")).collect()
    }

    /// Every S-polynomial of a pair of basis elements reduces to zero.
    pub fn satisfies_s_pair_criterion(&self) -> bool {
        let n = self.polys.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                reduce(
                    self.order,
                    s_poly(&self.polys[i], &self.polys[j]),
                    &self.polys,
                )
                .is_zero()
            })
        })
    }

    /// Monic, no leading monomial divides another basis term.
    pub fn is_reduced(&self) -> bool {
        self.polys.iter().enumerate().all(|(i, p)| {
            p.terms[0].1.is_one()
                && p.terms.iter().all(|(m, _)| {
                    self.polys
                        .iter()
                        .enumerate()
                        .all(|(j, q)| i == j || !q.lm().divides(m))
                })
        })
    }
}

/// Buchberger's algorithm; see [`buchberger_with_stats`].
pub fn buchberger<F: Field>(gens: &[MPoly<F>], order: MonomialOrder) -> GroebnerBasis<F> {
    buchberger_with_stats(gens, order).0
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
///
/// Pairs are processed by increasing lcm degree (ties broken by the
/// monomial order, then by indices), skipping pairs with coprime leading
/// monomials and pairs covered by the chain criterion.
pub fn buchberger_with_stats<F: Field>(
    gens: &[MPoly<F>],
    order: MonomialOrder,
) -> (GroebnerBasis<F>, BuchbergerStats) {
    let start = Instant::now();
    let nvars = gens.first().map_or(0, MPoly::nvars);
    assert!(
        gens.iter().all(|g| g.nvars() == nvars),
        "generators in different rings"
    );
    let mut stats = BuchbergerStats::default();

    let mut basis: Vec<Poly<F>> = Vec::new();
    for g in gens {
        let r = reduce(order, Poly::from_mpoly(g, order).terms, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }

    let mut pending: BTreeSet<(u32, Key, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let pair_entry = |basis: &[Poly<F>], i: usize, j: usize| {
        let l = basis[i].lm().lcm(basis[j].lm());
        (l.degree(), key(order, &l), i, j)
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert(pair_entry(&basis, i, j));
            stats.pairs_created += 1;
        }
    }

    while let Some(entry) = pending.pop_first() {
        let (_, _, i, j) = entry;
        let (lmi, lmj) = (*basis[i].lm(), *basis[j].lm());
        if lmi.is_coprime(&lmj) {
            stats.pairs_coprime += 1;
            done.insert((i, j));
            continue;
        }
        let l = lmi.lcm(&lmj);
        let ordered = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&l)
                && done.contains(&ordered(i, k))
                && done.contains(&ordered(j, k))
        });
        done.insert((i, j));
        if chain {
            stats.pairs_chain += 1;
            continue;
        }
        stats.pairs_reduced += 1;
        let r = reduce(order, s_poly(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        let n = basis.len();
        basis.push(r.monic());
        for k in 0..n {
            pending.insert(pair_entry(&basis, k, n));
            stats.pairs_created += 1;
        }
    }

    let polys = interreduce(order, basis);
    stats.elapsed = start.elapsed();
    (
        GroebnerBasis {
            nvars,
            order,
            polys,
        },
        stats,
    )
}

/// Minimalises and fully inter-reduces a Groebner basis.
fn interreduce<F: Field>(order: MonomialOrder, basis: Vec<Poly<F>>) -> Vec<Poly<F>> {
    let mut minimal: Vec<Poly<F>> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && q.lm().divides(p.lm()) && (q.lm() != p.lm() || j < i));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    minimal.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let head = minimal[i].terms[0].clone();
        let tail = reduce(order, minimal[i].terms[1..].iter().cloned(), &others);
        let mut terms = vec![head];
        terms.extend(tail.terms);
        out.push(Poly { terms }.monic());
    }
    out
}

/// The remainder of `f` on division by `gb`; zero iff `f` lies in the ideal.
pub fn normal_form<F: Field>(f: &MPoly<F>, gb: &GroebnerBasis<F>) -> MPoly<F> {
    assert_eq!(
        f.nvars(),
        gb.nvars,
        "polynomial and basis live in different rings"
    );
    reduce(gb.order, f.terms().map(|(m, c)| (*m, c.clone())), &gb.polys).to_mpoly(gb.nvars)
}

fn require_homogeneous<F: Field>(gb: &GroebnerBasis<F>) -> Result<()> {
    for p in &gb.polys {
        let d = p.lm().degree();
        if p.terms.iter().any(|(m, _)| m.degree() != d) {
            return Err(Error::NotHomogeneous);
        }
    }
    Ok(())
}

/// Dimension of the degree-`d` piece of the quotient ring: the number of
/// degree-`d` monomials outside the leading-term ideal.
pub fn quotient_graded_dim<F: Field>(gb: &GroebnerBasis<F>, d: u32) -> Result<usize> {
    require_homogeneous(gb)?;
    let lms = gb.leading_monomials();
    Ok(graded_monomials(gb.nvars, d)
        .iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .count())
}

/// The Hilbert function on `d_from ..= d_from + span`.
pub fn hilbert_values<F: Field>(
    gb: &GroebnerBasis<F>,
    d_from: u32,
    span: u32,
) -> Result<Vec<usize>> {
    (d_from..=d_from + span)
        .map(|d| quotient_graded_dim(gb, d))
        .collect()
}

/// The common value of the Hilbert function on `d_from ..= d_from + span`,
/// or `None` if it is not constant there.
pub fn stable_hilbert_value<F: Field>(
    gb: &GroebnerBasis<F>,
    d_from: u32,
    span: u32,
) -> Result<Option<usize>> {
    let values = hilbert_values(gb, d_from, span)?;
    Ok(values.windows(2).all(|w| w[0] == w[1]).then(|| values[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rat};
    use crate::multipoly::{build_pencil_quartic, parse_poly, restrict_to_hyperplane};

    fn p(s: &str) -> MPoly<Rat> {
        parse_poly(s, 5).unwrap()
    }

    fn fermat_jacobian() -> Vec<MPoly<Rat>> {
        p("y0^4 + y1^4 + y2^4 + y3^4 + y4^4").gradient()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let gb = buchberger(&[p("y0"), p("y1")], MonomialOrder::Grevlex);
        assert_eq!(gb.generators(), vec![p("y1"), p("y0")]);
        assert!(gb.is_reduced());
    }

    #[test]
    fn empty_input_is_zero_ideal() {
        let gb = buchberger::<Rat>(&[], MonomialOrder::Grevlex);
        assert!(gb.is_empty());
    }

    #[test]
    fn fermat_partials() {
        let gb = buchberger(&fermat_jacobian(), MonomialOrder::Grevlex);
        let mut gens: Vec<String> = gb.generators().iter().map(|g| g.to_string()).collect();
        gens.sort();
        assert_eq!(gens, vec!["y0^3", "y1^3", "y2^3", "y3^3", "y4^3"]);
        assert!(normal_form(&p("y0^3"), &gb).is_zero());
        assert_eq!(normal_form(&p("y0^2*y1^2"), &gb), p("y0^2*y1^2"));
        assert_eq!(quotient_graded_dim(&gb, 7).unwrap(), 30);
        assert_eq!(quotient_graded_dim(&gb, 0).unwrap(), 1);
        assert_eq!(stable_hilbert_value(&gb, 11, 3).unwrap(), Some(0));
        assert_eq!(quotient_graded_dim(&gb, 10).unwrap(), 1);
    }

    #[test]
    fn maximal_ideal_quotient_vanishes() {
        let gens: Vec<MPoly<Rat>> = (0..5).map(|i| MPoly::var(5, i)).collect();
        let gb = buchberger(&gens, MonomialOrder::Grevlex);
        for d in 1..4 {
            assert_eq!(stable_hilbert_value(&gb, d, 3).unwrap(), Some(0));
        }
    }

    #[test]
    fn textbook_example() {
        // x^2 - y, x^3 - x in Q[x, y] (padded to 5 vars), lex
        let gens = vec![p("y0^2 - y1"), p("y0^3 - y0")];
        let gb = buchberger(&gens, MonomialOrder::Lex);
        assert!(gb.satisfies_s_pair_criterion());
        assert!(gb.is_reduced());
        assert_eq!(
            gb.generators(),
            vec![p("y1^2 - y1"), p("y0*y1 - y0"), p("y0^2 - y1")]
        );
    }

    #[test]
    fn non_homogeneous_quotient_rejected() {
        let gb = buchberger(&[p("y0^2 - y1")], MonomialOrder::Grevlex);
        assert_eq!(quotient_graded_dim(&gb, 3), Err(Error::NotHomogeneous));
    }

    #[test]
    fn pencil_jacobian_degree_seven() {
        let g = restrict_to_hyperplane(&build_pencil_quartic(&rat(1)));
        let (gb, stats) = buchberger_with_stats(&g.gradient(), MonomialOrder::Grevlex);
        assert!(gb.is_reduced());
        assert!(stats.pairs_reduced > 0);
        assert_eq!(quotient_graded_dim(&gb, 7).unwrap(), 35);
    }
}
