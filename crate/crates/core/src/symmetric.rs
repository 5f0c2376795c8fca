//! The symmetric group on six letters: permutations, conjugacy classes,
//! class functions, orbits on projective points, and the normal-subgroup
//! facts used to rule out transitive actions on few points.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{CycNum, Field, Rat};

pub const DEGREE: usize = 6;
pub const ORDER: usize = 720;

/// A permutation of `{0, .., 5}`, stored as its image list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm([u8; DEGREE]);

impl Perm {
    pub fn identity() -> Self {
        Perm([0, 1, 2, 3, 4, 5])
    }

    pub fn from_images(images: [usize; DEGREE]) -> Result<Self> {
        let mut seen = [false; DEGREE];
        for &i in &images {
            if i >= DEGREE || seen[i] {
                return Err(Error::Constraint(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Perm(images.map(|i| i as u8)))
    }

    pub fn transposition(a: usize, b: usize) -> Self {
        let mut p = Self::identity();
        p.0.swap(a, b);
        p
    }

    /// The cycle `(c0 c1 ... ck)`.
    pub fn cycle(points: &[usize]) -> Self {
        let mut p = Self::identity();
        for (k, &a) in points.iter().enumerate() {
            p.0[a] = points[(k + 1) % points.len()] as u8;
        }
        p
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = [0u8; DEGREE];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn fixed_points(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i == j as usize)
            .count()
    }

    pub fn is_even(&self) -> bool {
        let (_, ct) = self.cycles_and_type();
        ct.iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }

    /// Cycle lengths, sorted descending (fixed points included).
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycles_and_type().1
    }

    fn cycles_and_type(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        let mut seen = [false; DEGREE];
        let mut cycles = Vec::new();
        for start in 0..DEGREE {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut j = self.apply(start);
            while j != start {
                seen[j] = true;
                cyc.push(j);
                j = self.apply(j);
            }
            cycles.push(cyc);
        }
        let mut ct: Vec<usize> = cycles.iter().map(Vec::len).collect();
        ct.sort_unstable_by(|a, b| b.cmp(a));
        (cycles, ct)
    }

    /// Acts on coordinate vectors: `(g.v)_{g(i)} = v_i`.
    pub fn act_on_vector<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), DEGREE);
        let mut out = v.to_vec();
        for i in 0..DEGREE {
            out[self.apply(i)] = v[i].clone();
        }
        out
    }

    /// All 720 permutations in lexicographic order of image lists.
    pub fn all() -> &'static [Perm] {
        static ALL: OnceLock<Vec<Perm>> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut out = Vec::with_capacity(ORDER);
            let mut cur = [0u8; DEGREE];
            let mut used = [false; DEGREE];
            fn rec(
                k: usize,
                cur: &mut [u8; DEGREE],
                used: &mut [bool; DEGREE],
                out: &mut Vec<Perm>,
            ) {
                if k == DEGREE {
                    out.push(Perm(*cur));
                    return;
                }
                for v in 0..DEGREE {
                    if !used[v] {
                        used[v] = true;
                        cur[k] = v as u8;
                        rec(k + 1, cur, used, out);
                        used[v] = false;
                    }
                }
            }
            rec(0, &mut cur, &mut used, &mut out);
            out
        })
    }
}

impl fmt::Display for Perm {
    /// Cycle notation without fixed points, e.g. `(0 1)(2 3 4)`; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (cycles, _) = self.cycles_and_type();
        let mut any = false;
        for c in cycles.iter().filter(|c| c.len() > 1) {
            any = true;
            let body: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One conjugacy class of S6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    pub representative: Perm,
    pub cycle_type: Vec<usize>,
    pub size: usize,
}

/// The 11 conjugacy classes, identity first, ordered by cycle type
/// (descending-sorted partitions compared lexicographically).
pub fn conjugacy_classes() -> &'static [ClassData] {
    static CLASSES: OnceLock<Vec<ClassData>> = OnceLock::new();
    CLASSES.get_or_init(|| {
        let mut by_type: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for g in Perm::all() {
            *by_type.entry(g.cycle_type()).or_insert(0) += 1;
        }
        let mut classes: Vec<ClassData> = by_type
            .into_iter()
            .map(|(ct, size)| ClassData {
                representative: standard_representative(&ct),
                cycle_type: ct,
                size,
            })
            .collect();
        classes.sort_by(|a, b| {
            let key = |c: &ClassData| {
                if c.cycle_type.iter().all(|&l| l == 1) {
                    0
                } else {
                    1
                }
            };
            key(a)
                .cmp(&key(b))
                .then_with(|| a.cycle_type.cmp(&b.cycle_type))
        });
        classes
    })
}

/// `(0 1 .. )(..)` built from consecutive points, longest cycle first.
fn standard_representative(cycle_type: &[usize]) -> Perm {
    let mut g = Perm::identity();
    let mut next = 0;
    for &len in cycle_type {
        let pts: Vec<usize> = (next..next + len).collect();
        g = g.compose(&Perm::cycle(&pts));
        next += len;
    }
    g
}

/// Index of the class containing `g` in [`conjugacy_classes`].
pub fn class_index(g: &Perm) -> usize {
    static TABLE: OnceLock<std::collections::HashMap<Perm, usize>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        Perm::all()
            .iter()
            .map(|h| {
                let ct = h.cycle_type();
                let k = conjugacy_classes()
                    .iter()
                    .position(|c| c.cycle_type == ct)
                    .expect("every cycle type has a class");
                (*h, k)
            })
            .collect()
    });
    table[g]
}

/// A class function: one value per conjugacy class, in class order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFunction(pub Vec<Rat>);

impl ClassFunction {
    pub fn from_fn(f: impl Fn(&Perm) -> Rat) -> Self {
        ClassFunction(
            conjugacy_classes()
                .iter()
                .map(|c| f(&c.representative))
                .collect(),
        )
    }

    pub fn at(&self, g: &Perm) -> &Rat {
        &self.0[class_index(g)]
    }

    pub fn trivial() -> Self {
        Self::from_fn(|_| Rat::one())
    }

    pub fn sign() -> Self {
        Self::from_fn(|g| Rat::from(if g.is_even() { 1 } else { -1 }))
    }

    pub fn standard() -> Self {
        Self::from_fn(|g| Rat::from(standard_character(g)))
    }

    pub fn degree(&self) -> &Rat {
        &self.0[0]
    }
}

/// Character of the standard 5-dimensional representation: fixed points minus one.
pub fn standard_character(g: &Perm) -> i64 {
    g.fixed_points() as i64 - 1
}

/// `(1/720) sum_classes |C| chi1(C) chi2(C)`. All S6 characters are real,
/// so no conjugation is applied.
pub fn char_inner_product(chi1: &ClassFunction, chi2: &ClassFunction) -> Rat {
    let classes = conjugacy_classes();
    assert_eq!(chi1.0.len(), classes.len());
    assert_eq!(chi2.0.len(), classes.len());
    let mut acc = Rat::zero();
    for (k, c) in classes.iter().enumerate() {
        acc = acc.add(&Rat::from(c.size as i64).mul(&chi1.0[k].mul(&chi2.0[k])));
    }
    acc.mul(&Rat::new(1, ORDER as i64).expect("nonzero"))
}

/// The same inner product summed element by element over all of S6.
pub fn char_inner_product_brute(chi1: &ClassFunction, chi2: &ClassFunction) -> Rat {
    let mut acc = Rat::zero();
    for g in Perm::all() {
        acc = acc.add(&chi1.at(g).mul(chi2.at(g)));
    }
    acc.mul(&Rat::new(1, ORDER as i64).expect("nonzero"))
}

/// A class function is the character of a faithful representation iff
/// only the identity attains the degree.
pub fn is_faithful(chi: &ClassFunction) -> bool {
    let deg = chi.degree();
    chi.0.iter().skip(1).all(|v| v != deg)
}

/// Faithfulness of S6 on the standard representation.
pub fn faithfulness_check() -> bool {
    is_faithful(&ClassFunction::standard())
}

/// A point of projective 5-space over `Q(w)`, scaled so that the first
/// nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<CycNum>,
}

impl ProjPoint {
    pub fn new(coords: Vec<CycNum>) -> Result<Self> {
        let pivot = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::Constraint("projective point with all coordinates zero".into()))?
            .inv()?;
        Ok(ProjPoint {
            coords: coords.iter().map(|c| c.mul(&pivot)).collect(),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| CycNum::from(c)).collect())
    }

    pub fn coords(&self) -> &[CycNum] {
        &self.coords
    }

    pub fn coordinate_sum(&self) -> CycNum {
        self.coords.iter().fold(CycNum::zero(), |a, c| a.add(c))
    }

    /// The image under `g`, re-canonicalised.
    pub fn act(&self, g: &Perm) -> ProjPoint {
        ProjPoint::new(g.act_on_vector(&self.coords))
            .expect("permutation keeps a nonzero coordinate")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(CycNum::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// How orbit members are identified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedup {
    /// Up to nonzero scalar multiples.
    Projective,
    /// As raw coordinate vectors.
    Raw,
}

/// Orbit of a coordinate vector under all of S6.
pub fn orbit_vectors(seed: &[CycNum], dedup: Dedup) -> BTreeSet<Vec<CycNum>> {
    Perm::all()
        .iter()
        .map(|g| {
            let v = g.act_on_vector(seed);
            match dedup {
                Dedup::Raw => v,
                Dedup::Projective => ProjPoint::new(v).expect("nonzero seed").coords,
            }
        })
        .collect()
}

/// Projective orbit of `seed`, in canonical (sorted) order.
pub fn orbit(seed: &ProjPoint) -> Vec<ProjPoint> {
    let set: BTreeSet<ProjPoint> = Perm::all().iter().map(|g| seed.act(g)).collect();
    set.into_iter().collect()
}

/// A normal subgroup, described as a union of conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalSubgroup {
    pub order: usize,
    /// Indices into [`conjugacy_classes`].
    pub classes: Vec<usize>,
    pub cycle_types: Vec<Vec<usize>>,
}

/// Whether a union of classes (given by a membership mask) is closed under
/// multiplication. Conjugation invariance reduces this to products
/// `r * s` with `r` a class representative.
pub fn is_closed_union(mask: &[bool]) -> bool {
    let classes = conjugacy_classes();
    assert_eq!(mask.len(), classes.len());
    if !mask[0] {
        return false;
    }
    let members: Vec<&Perm> = Perm::all()
        .iter()
        .filter(|g| mask[class_index(g)])
        .collect();
    classes.iter().zip(mask).filter(|(_, &m)| m).all(|(c, _)| {
        members
            .iter()
            .all(|s| mask[class_index(&c.representative.compose(s))])
    })
}

/// All normal subgroups of S6, sorted by order, found by testing every
/// union of classes that contains the identity.
pub fn normal_subgroups() -> Vec<NormalSubgroup> {
    static CACHE: OnceLock<Vec<NormalSubgroup>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let classes = conjugacy_classes();
            let n = classes.len();
            let mut out = Vec::new();
            for bits in 0u32..(1 << (n - 1)) {
                // the identity class is always included
                let mask: Vec<bool> = (0..n)
                    .map(|k| k == 0 || bits & (1 << (k - 1)) != 0)
                    .collect();
                let order: usize = classes
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &m)| m)
                    .map(|(c, _)| c.size)
                    .sum();
                if !ORDER.is_multiple_of(order) || !is_closed_union(&mask) {
                    continue;
                }
                let idx: Vec<usize> = (0..n).filter(|&k| mask[k]).collect();
                out.push(NormalSubgroup {
                    order,
                    cycle_types: idx.iter().map(|&k| classes[k].cycle_type.clone()).collect(),
                    classes: idx,
                });
            }
            out.sort_by_key(|s| s.order);
            out
        })
        .clone()
}

/// Outcome of [`no_transitive_action_on`], with a step-by-step trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityRefutation {
    pub points: usize,
    pub refuted: bool,
    pub trace: Vec<String>,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Tries to rule out a transitive action of S6 on `p` points.
///
/// An action is a homomorphism to `S_p`; its kernel is normal, so the image
/// has order `720 / |N|` for some normal subgroup `N`. An image order is
/// ruled out when it does not divide `p!`, or when it is smaller than `p`
/// (orbits of a group of order `m` have at most `m` points).
pub fn transitive_action_refutation(p: usize) -> TransitivityRefutation {
    let normals = normal_subgroups();
    let image_orders: BTreeSet<usize> = normals.iter().map(|n| ORDER / n.order).collect();
    let mut trace = vec![format!(
        "normal subgroup orders {:?} give possible image orders {:?}",
        normals.iter().map(|n| n.order).collect::<Vec<_>>(),
        image_orders
    )];
    let sym_order = factorial(p);
    let mut refuted = true;
    for &img in image_orders.iter().rev() {
        if !sym_order.is_multiple_of(img) {
            trace.push(format!(
                "image order {img} does not divide {p}! = {sym_order}"
            ));
        } else if img < p {
            trace.push(format!(
                "image order {img} < {p}: every orbit has at most {img} points"
            ));
        } else {
            trace.push(format!("image order {img} not excluded"));
            refuted = false;
        }
    }
    trace.push(if refuted {
        format!("no transitive action of S6 on {p} points")
    } else {
        format!("a transitive action on {p} points is not ruled out")
    });
    TransitivityRefutation {
        points: p,
        refuted,
        trace,
    }
}

/// [`transitive_action_refutation`] restricted to `3 <= p <= 5`, where it
/// always succeeds.
pub fn no_transitive_action_on(p: usize) -> Result<TransitivityRefutation> {
    if !(3..=5).contains(&p) {
        return Err(Error::Precondition(format!(
            "transitivity check needs 3 <= p <= 5, got {p}"
        )));
    }
    Ok(transitive_action_refutation(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn node_seed() -> Vec<CycNum> {
        let (one, w, w2) = (CycNum::one(), CycNum::w(), CycNum::w2());
        vec![one.clone(), one, w.clone(), w, w2.clone(), w2]
    }

    #[test]
    fn composition_and_inverse() {
        let a = Perm::cycle(&[0, 1, 2]);
        let b = Perm::transposition(0, 3);
        assert_eq!(a.compose(&a.inverse()), Perm::identity());
        assert_eq!(a.compose(&b).apply(0), a.apply(b.apply(0)));
        for g in Perm::all().iter().step_by(37) {
            for h in Perm::all().iter().step_by(53) {
                for k in Perm::all().iter().step_by(101) {
                    assert_eq!(g.compose(h).compose(k), g.compose(&h.compose(k)));
                }
            }
        }
        assert!(Perm::from_images([0, 0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn cycle_notation() {
        let g = Perm::transposition(0, 1).compose(&Perm::cycle(&[2, 3, 4]));
        assert_eq!(g.to_string(), "(0 1)(2 3 4)");
        assert_eq!(Perm::identity().to_string(), "()");
        assert_eq!(g.cycle_type(), vec![3, 2, 1]);
    }

    #[test]
    fn class_equation() {
        let classes = conjugacy_classes();
        assert_eq!(classes.len(), 11);
        assert_eq!(classes.iter().map(|c| c.size).sum::<usize>(), ORDER);
        assert_eq!(classes[0].cycle_type, vec![1; 6]);
        for c in classes {
            assert_eq!(c.representative.cycle_type(), c.cycle_type);
        }
    }

    #[test]
    fn standard_character_values() {
        assert_eq!(standard_character(&Perm::identity()), 5);
        assert_eq!(standard_character(&Perm::transposition(2, 5)), 3);
        assert_eq!(standard_character(&Perm::cycle(&[0, 1, 2, 3, 4, 5])), -1);
    }

    #[test]
    fn inner_products_match_brute_force() {
        let v = ClassFunction::standard();
        let triv = ClassFunction::trivial();
        assert_eq!(char_inner_product(&v, &v), rat(1));
        assert_eq!(char_inner_product_brute(&v, &v), rat(1));
        assert_eq!(char_inner_product(&triv, &v), rat(0));
        assert_eq!(char_inner_product_brute(&triv, &v), rat(0));
        let sign = ClassFunction::sign();
        assert_eq!(char_inner_product(&sign, &sign), rat(1));
        assert_eq!(char_inner_product(&sign, &triv), rat(0));
    }

    #[test]
    fn faithfulness() {
        assert!(faithfulness_check());
        assert!(!is_faithful(&ClassFunction::trivial()));
        assert!(!is_faithful(&ClassFunction::sign()));
    }

    #[test]
    fn node_orbit_sizes() {
        assert_eq!(orbit_vectors(&node_seed(), Dedup::Raw).len(), 90);
        assert_eq!(orbit_vectors(&node_seed(), Dedup::Projective).len(), 30);
        let seed = ProjPoint::new(node_seed()).unwrap();
        let nodes = orbit(&seed);
        assert_eq!(nodes.len(), 30);
        for p in &nodes {
            assert!(p.coordinate_sum().is_zero());
            for g in Perm::all().iter().step_by(7) {
                assert!(nodes.binary_search(&p.act(g)).is_ok());
            }
        }
    }

    #[test]
    fn special_orbit_sizes() {
        let sizes: Vec<usize> = [
            [1, -1, 0, 0, 0, 0],
            [-1, -1, -1, 1, 1, 1],
            [-5, 1, 1, 1, 1, 1],
        ]
        .iter()
        .map(|s| orbit(&ProjPoint::from_ints(s).unwrap()).len())
        .collect();
        assert_eq!(sizes, vec![15, 10, 6]);
        for s in sizes {
            assert_eq!(ORDER % s, 0);
        }
    }

    #[test]
    fn projective_canonical_form() {
        let p = ProjPoint::new(vec![
            CycNum::zero(),
            CycNum::w(),
            CycNum::from(2),
            CycNum::zero(),
            CycNum::zero(),
            CycNum::zero(),
        ])
        .unwrap();
        assert_eq!(p.coords()[1], CycNum::one());
        assert_eq!(p.coords()[2], CycNum::from(2).mul(&CycNum::w2()));
        assert!(ProjPoint::from_ints(&[0; 6]).is_err());
    }

    #[test]
    fn normal_subgroup_enumeration() {
        let normals = normal_subgroups();
        let orders: Vec<usize> = normals.iter().map(|n| n.order).collect();
        assert_eq!(orders, vec![1, 360, 720]);
        let alt = &normals[1];
        for &k in &alt.classes {
            assert!(conjugacy_classes()[k].representative.is_even());
        }
        // identity plus transpositions is not closed
        let mut mask = vec![false; 11];
        mask[0] = true;
        mask[class_index(&Perm::transposition(0, 1))] = true;
        assert!(!is_closed_union(&mask));
    }

    #[test]
    fn transitive_actions() {
        for p in 3..=5 {
            let r = no_transitive_action_on(p).unwrap();
            assert!(r.refuted, "{:?}", r.trace);
        }
        assert!(no_transitive_action_on(2).is_err());
        assert!(no_transitive_action_on(6).is_err());
        // the sign map gives a transitive action on two points, the natural one on six
        let sign = ClassFunction::sign();
        assert!(sign.0.iter().any(|v| *v == rat(-1)));
        assert!(!transitive_action_refutation(2).refuted);
        assert!(!transitive_action_refutation(6).refuted);
    }
}
