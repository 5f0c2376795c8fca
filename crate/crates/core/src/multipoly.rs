//! Sparse multivariate polynomials over an exact [`Field`].
//!
//! Polynomials carry their variable count (5 for forms on the hyperplane
//! `sum x_i = 0`, 6 for forms in the ambient coordinates). Terms are kept in
//! a map ordered by graded reverse lexicographic order, which is also the
//! rendering order (largest term first).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{split_signed_terms, CycNum, Field, Rat};
use crate::symmetric::Perm;

pub const MAX_VARS: usize = 6;

/// An exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u16; MAX_VARS]);

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Mono(e)
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x += y;
        }
        Mono(e)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0).all(|(&x, y)| x <= y)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        let mut e = other.0;
        for (x, y) in e.iter_mut().zip(self.0) {
            *x -= y;
        }
        Mono(e)
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(other.0) {
            *x = (*x).max(y);
        }
        Mono(e)
    }

    pub fn is_coprime(&self, other: &Mono) -> bool {
        self.0.iter().zip(other.0).all(|(&x, y)| x == 0 || y == 0)
    }

    fn grevlex_cmp(&self, other: &Mono) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..MAX_VARS).rev() {
                if self.0[i] != other.0[i] {
                    return other.0[i].cmp(&self.0[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded reverse lexicographic order with `x0 > x1 > ... `.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Monomial orders understood by the Groebner engine.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize,
)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.grevlex_cmp(b),
            MonomialOrder::Lex => a.0.cmp(&b.0),
        }
    }
}

/// All monomials of degree `d` in `nvars` variables, largest (grevlex) first.
pub fn graded_monomials(nvars: usize, d: u32) -> Vec<Mono> {
    assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
    let mut out = Vec::new();
    let mut cur = [0u16; MAX_VARS];
    fn rec(i: usize, nvars: usize, left: u32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Mono>) {
        if i + 1 == nvars {
            cur[i] = left as u16;
            out.push(Mono(*cur));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(i + 1, nvars, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Mono::one());
        }
        return out;
    }
    rec(0, nvars, d, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A sparse polynomial in `nvars` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<F> {
    nvars: usize,
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(nvars, c, Mono::one())
    }

    pub fn term(nvars: usize, c: F, m: Mono) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::term(nvars, F::one(), Mono::var(i))
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &F)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Mono) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Mono, c: &F) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(F::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul(s))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.nvars, F::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::degree).max()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Mono::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// `Some(d)` if homogeneous of degree `d`, else [`Error::NotHomogeneous`].
    /// The zero polynomial counts as homogeneous of every degree; `None` then.
    pub fn require_homogeneous(&self) -> Result<Option<u32>> {
        if self.is_zero() {
            return Ok(None);
        }
        self.homogeneous_degree()
            .map(Some)
            .ok_or(Error::NotHomogeneous)
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[i] -= 1;
            out.add_term(dm, &c.mul(&F::from_i64(e as i64)));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Evaluates at a point whose coordinates live in an extension `E` of `F`.
    pub fn evaluate<E>(&self, point: &[E]) -> E
    where
        E: Field + From<F>,
    {
        assert_eq!(point.len(), self.nvars, "point has wrong length");
        // powers[i][k] = point[i]^k, computed up to the needed exponent
        let mut max_exp = [0u16; MAX_VARS];
        for m in self.terms.keys() {
            for (mx, e) in max_exp.iter_mut().zip(m.0) {
                *mx = (*mx).max(e);
            }
        }
        let powers: Vec<Vec<E>> = (0..self.nvars)
            .map(|i| {
                let mut pw = vec![E::one()];
                for k in 1..=max_exp[i] as usize {
                    pw.push(pw[k - 1].mul(&point[i]));
                }
                pw
            })
            .collect();
        let mut acc = E::zero();
        for (m, c) in &self.terms {
            let mut v = E::from(c.clone());
            for i in 0..self.nvars {
                if m.0[i] > 0 {
                    v = v.mul(&powers[i][m.0[i] as usize]);
                }
            }
            acc = acc.add(&v);
        }
        acc
    }

    /// Substitutes `x_i <- images[i]` for every variable.
    pub fn substitute(&self, images: &[MPoly<F>]) -> MPoly<F> {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(self.nvars, |p| p.nvars);
        let mut cache: Vec<Vec<MPoly<F>>> = images
            .iter()
            .map(|p| vec![MPoly::constant(target, F::one()), p.clone()])
            .collect();
        let mut out = MPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(target, c.clone());
            for (i, &e) in m.0[..self.nvars].iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap().mul(&images[i]);
                    cache[i].push(next);
                }
                t = t.mul(&cache[i][e as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// Applies a coefficient map, e.g. the embedding `Q -> Q(w)`.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        MPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn lift<G: Field + From<F>>(&self) -> MPoly<G> {
        self.map_coeffs(|c| G::from(c.clone()))
    }

    /// Coefficients along `frame`; errors if a term falls outside it.
    pub fn coeff_vector(&self, frame: &[Mono]) -> Result<Vec<F>> {
        let out: Vec<F> = frame.iter().map(|m| self.coeff(m)).collect();
        let covered = out.iter().filter(|c| !c.is_zero()).count();
        if covered != self.terms.len() {
            return Err(Error::Constraint(
                "polynomial has terms outside the frame".into(),
            ));
        }
        Ok(out)
    }

    pub fn from_coeff_vector(nvars: usize, frame: &[Mono], coeffs: &[F]) -> Self {
        assert_eq!(frame.len(), coeffs.len());
        Self::from_terms(nvars, frame.iter().copied().zip(coeffs.iter().cloned()))
    }

    /// Reinterprets a form in `y_0..y_4` as a form in `x_0..x_5` (`y_i -> x_i`).
    pub fn extend_to_ambient(&self) -> MPoly<F> {
        assert!(self.nvars < MAX_VARS);
        MPoly {
            nvars: self.nvars + 1,
            terms: self.terms.clone(),
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// `F_t = t * sum x_i^4 - (sum x_i^2)^2` in six variables.
pub fn build_pencil_quartic(t: &Rat) -> MPoly<Rat> {
    let n = 6;
    let mut power_sum4 = MPoly::zero(n);
    let mut power_sum2 = MPoly::zero(n);
    for i in 0..n {
        let mut e4 = [0; MAX_VARS];
        e4[i] = 4;
        power_sum4.add_term(Mono(e4), &Rat::one());
        let mut e2 = [0; MAX_VARS];
        e2[i] = 2;
        power_sum2.add_term(Mono(e2), &Rat::one());
    }
    power_sum4.scale(t).sub(&power_sum2.pow(2))
}

/// Restricts a six-variable form to the hyperplane `sum x_i = 0`, using
/// `x_5 = -(y_0 + ... + y_4)` and `x_i = y_i` otherwise.
pub fn restrict_to_hyperplane<F: Field>(f: &MPoly<F>) -> MPoly<F> {
    restrict_dropping(f, MAX_VARS - 1)
}

/// As [`restrict_to_hyperplane`], but eliminating `x_k` instead of `x_5`.
/// The remaining variables keep their relative order.
pub fn restrict_dropping<F: Field>(f: &MPoly<F>, k: usize) -> MPoly<F> {
    assert_eq!(f.nvars(), 6, "expected a form in x0..x5");
    assert!(k < 6);
    let m = 5;
    let minus_sum = (0..m).fold(MPoly::zero(m), |acc, j| acc.sub(&MPoly::var(m, j)));
    let images: Vec<MPoly<F>> = (0..6)
        .map(|i| match i.cmp(&k) {
            Ordering::Less => MPoly::var(m, i),
            Ordering::Equal => minus_sum.clone(),
            Ordering::Greater => MPoly::var(m, i - 1),
        })
        .collect();
    f.substitute(&images)
}

/// The permutation action on six-variable forms: `g` sends `x_i` to
/// `x_{g(i)}`, so `(g h) . f = g . (h . f)` with `(g h)(i) = g(h(i))`.
pub fn permute_vars<F: Field>(g: &Perm, f: &MPoly<F>) -> MPoly<F> {
    assert_eq!(f.nvars(), 6, "permutations act on x0..x5");
    MPoly::from_terms(
        6,
        f.terms.iter().map(|(m, c)| {
            let mut e = [0; MAX_VARS];
            for i in 0..6 {
                e[g.apply(i)] = m.0[i];
            }
            (Mono(e), c.clone())
        }),
    )
}

fn var_prefix(nvars: usize) -> char {
    if nvars == 6 {
        'x'
    } else {
        'y'
    }
}

fn render_mono(m: &Mono, nvars: usize) -> String {
    let p = var_prefix(nvars);
    let parts: Vec<String> = (0..nvars)
        .filter(|&i| m.0[i] > 0)
        .map(|i| match m.0[i] {
            1 => format!("{p}{i}"),
            e => format!("{p}{i}^{e}"),
        })
        .collect();
    parts.join("*")
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let coeff = c.to_string();
            let compound = coeff.contains(" + ") || coeff.contains(" - ");
            let (negative, body) = if compound {
                (false, format!("({coeff})"))
            } else if let Some(rest) = coeff.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, coeff)
            };
            let sep = match (k, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mono = render_mono(m, self.nvars);
            let term = match (mono.is_empty(), body.as_str()) {
                (true, _) => body,
                (false, "1") => mono,
                (false, _) => format!("{body}*{mono}"),
            };
            write!(f, "{sep}{term}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the literal grammar used in reports, e.g.
/// `"3/2*y0^2*y3 - w*y4^3"` or `"(1 + 2*w)*x0 + x5"`.
/// Variables are `x<i>` or `y<i>` with `i < nvars`.
pub fn parse_poly<F>(s: &str, nvars: usize) -> Result<MPoly<F>>
where
    F: Field + std::str::FromStr<Err = Error>,
{
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty polynomial literal".into()));
    }
    let mut out = MPoly::zero(nvars);
    if compact == "0" {
        return Ok(out);
    }
    for (negative, term) in split_signed_terms(&compact)? {
        let (mut coeff, mono) = parse_term::<F>(term, nvars)?;
        if negative {
            coeff = coeff.neg();
        }
        out.add_term(mono, &coeff);
    }
    Ok(out)
}

fn parse_term<F>(term: &str, nvars: usize) -> Result<(F, Mono)>
where
    F: Field + std::str::FromStr<Err = Error>,
{
    let mut coeff = F::one();
    let mut mono = Mono::one();
    let mut rest = term;
    if let Some(inner) = rest.strip_prefix('(') {
        let close = inner
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {term:?}")))?;
        coeff = inner[..close].parse()?;
        rest = &inner[close + 1..];
        rest = rest.strip_prefix('*').unwrap_or(rest);
        if rest.is_empty() {
            return Ok((coeff, mono));
        }
    }
    // factors are separated by '*', but a rational coefficient may contain '/'
    for factor in rest.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in {term:?}")));
        }
        let first = factor.as_bytes()[0];
        if first == b'x' || first == b'y' {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u16>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let idx: usize = name[1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable {name:?}")))?;
            if idx >= nvars {
                return Err(Error::Parse(format!(
                    "variable {name} out of range for {nvars} variables"
                )));
            }
            mono.0[idx] += exp;
        } else {
            coeff = coeff.mul(&factor.parse::<F>()?);
        }
    }
    Ok((coeff, mono))
}

/// Lifts a rational polynomial into `Q(w)`.
pub fn to_cyc(f: &MPoly<Rat>) -> MPoly<CycNum> {
    f.lift()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, ratio};
    use crate::symmetric::Perm;

    fn node() -> Vec<CycNum> {
        let (one, w, w2) = (CycNum::one(), CycNum::w(), CycNum::w2());
        vec![one.clone(), one, w.clone(), w, w2.clone(), w2]
    }

    #[test]
    fn pencil_coefficients() {
        let f = build_pencil_quartic(&rat(2));
        assert_eq!(f.coeff(&Mono::from_exps(&[4])), rat(1));
        assert_eq!(f.coeff(&Mono::from_exps(&[2, 2])), rat(-2));
        assert_eq!(f.homogeneous_degree(), Some(4));
        let f0 = build_pencil_quartic(&rat(0));
        assert_eq!(f0.num_terms(), 21);
    }

    #[test]
    fn pencil_vanishes_at_node_for_any_t() {
        for t in [rat(0), rat(1), ratio(7, 3), rat(-5)] {
            let f = build_pencil_quartic(&t);
            assert!(f.evaluate(&node()).is_zero());
        }
    }

    #[test]
    fn hyperplane_restriction() {
        let lin = (0..6).fold(MPoly::<Rat>::zero(6), |a, i| a.add(&MPoly::var(6, i)));
        assert!(restrict_to_hyperplane(&lin).is_zero());
        let x5 = restrict_to_hyperplane(&MPoly::<Rat>::var(6, 5));
        assert_eq!(x5.to_string(), "-y0 - y1 - y2 - y3 - y4");
        let g = restrict_to_hyperplane(&build_pencil_quartic(&rat(1)));
        assert_eq!(g.homogeneous_degree(), Some(4));
        let y = &node()[..5];
        assert!(g.lift::<CycNum>().evaluate(y).is_zero());
    }

    #[test]
    fn derivatives() {
        let y0 = MPoly::<Rat>::var(5, 0);
        assert_eq!(y0.pow(3).partial(0), y0.pow(2).scale(&rat(3)));
        let g = restrict_to_hyperplane(&build_pencil_quartic(&ratio(7, 3)));
        for d in g.gradient() {
            assert_eq!(d.homogeneous_degree(), Some(3));
        }
    }

    #[test]
    fn ambient_gradient_at_node_is_constant() {
        for t in [rat(1), rat(3), ratio(-2, 5)] {
            let f = build_pencil_quartic(&t).lift::<CycNum>();
            let expected = CycNum::from(t.mul(&rat(4)));
            for d in f.gradient() {
                assert_eq!(d.evaluate(&node()), expected);
            }
        }
    }

    #[test]
    fn evaluation_examples() {
        let y0 = MPoly::<Rat>::var(5, 0);
        assert_eq!(
            y0.pow(3)
                .evaluate(&[rat(2), rat(0), rat(0), rat(0), rat(0)]),
            rat(8)
        );
        let sum_sq = (0..6).fold(MPoly::<Rat>::zero(6), |a, i| {
            a.add(&MPoly::var(6, i).pow(2))
        });
        let r = restrict_to_hyperplane(&sum_sq).lift::<CycNum>();
        assert!(r.evaluate(&node()[..5]).is_zero());
        let b0 = restrict_to_hyperplane(&MPoly::var(6, 0).mul(&sum_sq)).lift::<CycNum>();
        assert!(b0.evaluate(&node()[..5]).is_zero());
    }

    #[test]
    fn permutation_examples() {
        let f = build_pencil_quartic(&ratio(5, 2));
        assert_eq!(permute_vars(&Perm::identity(), &f), f);
        for g in Perm::all() {
            assert_eq!(permute_vars(g, &f), f);
        }
        let x0c = MPoly::<Rat>::var(6, 0).pow(3);
        let swap = Perm::transposition(0, 1);
        assert_eq!(permute_vars(&swap, &x0c), MPoly::var(6, 1).pow(3));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(graded_monomials(5, 3).len(), 35);
        assert_eq!(graded_monomials(5, 7).len(), 330);
        assert_eq!(graded_monomials(1, 4).len(), 1);
        let mons = graded_monomials(5, 3);
        assert!(mons.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(mons[0], Mono::from_exps(&[3]));
    }

    #[test]
    fn grevlex_basics() {
        // x0 > x1 > ... ; y0*y2 vs y1^2: same degree, last differing is index 2
        let a = Mono::from_exps(&[1, 0, 1]);
        let b = Mono::from_exps(&[0, 2, 0]);
        assert!(b > a);
        assert!(Mono::from_exps(&[0, 0, 0, 0, 2]) < Mono::from_exps(&[1, 0, 0, 0, 1]));
        assert!(Mono::from_exps(&[0, 0, 2]) > Mono::from_exps(&[1]));
    }

    #[test]
    fn render_and_parse() {
        let p: MPoly<CycNum> = parse_poly("3/2*y0^2*y3 - w*y4^3", 5).unwrap();
        assert_eq!(p.to_string(), "3/2*y0^2*y3 - w*y4^3");
        let q: MPoly<CycNum> = parse_poly("(1 + 2*w)*y1 - 4 + y0", 5).unwrap();
        assert_eq!(q.to_string(), "y0 + (1 + 2*w)*y1 - 4");
        assert_eq!(parse_poly::<CycNum>(&q.to_string(), 5).unwrap(), q);
        let r: MPoly<Rat> = parse_poly("x5^2 - 1/3*x0*x1", 6).unwrap();
        assert_eq!(r.to_string(), "-1/3*x0*x1 + x5^2");
        assert!(parse_poly::<Rat>("y7", 5).is_err());
        assert!(parse_poly::<Rat>("y0 +", 5).is_err());
        assert!(parse_poly::<Rat>("y0^a", 5).is_err());
    }

    #[test]
    fn homogeneity_guard() {
        let p: MPoly<Rat> = parse_poly("y0^2 + y1", 5).unwrap();
        assert_eq!(p.homogeneous_degree(), None);
        assert_eq!(p.require_homogeneous(), Err(Error::NotHomogeneous));
        assert_eq!(MPoly::<Rat>::zero(5).require_homogeneous(), Ok(None));
    }

    #[test]
    fn coefficient_frames() {
        let frame = graded_monomials(5, 3);
        let p: MPoly<Rat> = parse_poly("y0^3 - 2*y1*y2*y4", 5).unwrap();
        let v = p.coeff_vector(&frame).unwrap();
        assert_eq!(MPoly::from_coeff_vector(5, &frame, &v), p);
        let q: MPoly<Rat> = parse_poly("y0^2", 5).unwrap();
        assert!(q.coeff_vector(&frame).is_err());
    }
}
