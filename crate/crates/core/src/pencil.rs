//! Geometry of the pencil member `X_t`: its nodes, the space of cubics
//! through them, the two equivariant maps from the standard representation
//! into that space, both defect computations, and the extra singular
//! orbits at the special parameters.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{ratio, CycNum, Field, Rat};
use crate::exactlinalg::{in_span, operator_trace_on_subspace, span_rank, Mat};
use crate::groebner::{buchberger, hilbert_values, quotient_graded_dim, GroebnerBasis};
use crate::multipoly::{
    build_pencil_quartic, graded_monomials, permute_vars, restrict_to_hyperplane, MPoly, Mono,
    MonomialOrder,
};
use crate::symmetric::{
    char_inner_product, conjugacy_classes, orbit, ClassFunction, Perm, ProjPoint, DEGREE,
};

/// Number of nodes of a generic member.
pub const NODE_COUNT: usize = 30;
/// Dimension of the space of cubic forms on the hyperplane.
pub const CUBIC_FORMS: usize = 35;
/// First degree of the Hilbert-function window used to count singular points.
pub const HILBERT_FROM: u32 = 10;
/// Width of that window: degrees `HILBERT_FROM ..= HILBERT_FROM + HILBERT_SPAN`.
pub const HILBERT_SPAN: u32 = 3;
/// The graded piece of the Jacobian ring that computes the defect of a
/// nodal quartic threefold.
pub const DEFECT_DEGREE: u32 = 7;

/// Parameters where the member is not a 30-nodal quartic.
pub fn excluded_parameters() -> [Rat; 5] {
    [
        ratio(0, 1),
        ratio(2, 1),
        ratio(4, 1),
        ratio(6, 1),
        ratio(10, 7),
    ]
}

pub fn is_excluded(t: &Rat) -> bool {
    excluded_parameters().contains(t)
}

/// Parameters with a second singular orbit on top of the 30 nodes.
pub fn special_parameters() -> [Rat; 3] {
    [ratio(2, 1), ratio(6, 1), ratio(10, 7)]
}

/// `X_t`, in ambient coordinates (`f`) and on the hyperplane chart (`g`).
#[derive(Clone, Debug)]
pub struct PencilMember {
    pub t: Rat,
    pub f: MPoly<Rat>,
    pub g: MPoly<Rat>,
    jacobian: OnceLock<GroebnerBasis<Rat>>,
}

impl PencilMember {
    pub fn new(t: Rat) -> Self {
        let f = build_pencil_quartic(&t);
        let g = restrict_to_hyperplane(&f);
        debug_assert_eq!(f.homogeneous_degree(), Some(4));
        debug_assert_eq!(g.homogeneous_degree(), Some(4));
        PencilMember {
            t,
            f,
            g,
            jacobian: OnceLock::new(),
        }
    }

    /// The five partial derivatives of `g`.
    pub fn jacobian_generators(&self) -> Vec<MPoly<Rat>> {
        self.g.gradient()
    }

    /// Reduced grevlex basis of the Jacobian ideal, computed once.
    pub fn jacobian_basis(&self) -> &GroebnerBasis<Rat> {
        self.jacobian
            .get_or_init(|| buchberger(&self.jacobian_generators(), MonomialOrder::Grevlex))
    }
}

/// `(1, 1, w, w, w^2, w^2)`.
pub fn node_seed() -> ProjPoint {
    let (one, w, w2) = (CycNum::one(), CycNum::w(), CycNum::w2());
    ProjPoint::new(vec![one.clone(), one, w.clone(), w, w2.clone(), w2]).expect("nonzero")
}

/// The S6-orbit of [`node_seed`], canonically ordered.
pub fn nodes() -> &'static [ProjPoint] {
    static NODES: OnceLock<Vec<ProjPoint>> = OnceLock::new();
    NODES.get_or_init(|| orbit(&node_seed()))
}

/// Coordinates on the chart `y_i = x_i, i < 5`.
fn chart_coords(p: &ProjPoint) -> &[CycNum] {
    &p.coords()[..DEGREE - 1]
}

fn require_on_hyperplane(p: &ProjPoint) -> Result<()> {
    if p.coordinate_sum().is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{p} is not on the hyperplane sum x_i = 0"
        )))
    }
}

/// Whether every partial derivative of `g` vanishes at `p`. The value of
/// `g` itself is checked too (it follows by Euler's identity).
pub fn verify_node_singular(member: &PencilMember, p: &ProjPoint) -> Result<bool> {
    require_on_hyperplane(p)?;
    let y = chart_coords(p);
    let grad_vanishes = member
        .jacobian_generators()
        .iter()
        .all(|d| d.lift::<CycNum>().evaluate(y).is_zero());
    let on_surface = member.g.lift::<CycNum>().evaluate(y).is_zero();
    debug_assert!(!grad_vanishes || on_surface);
    Ok(grad_vanishes && on_surface)
}

/// Determinant of the Hessian of the dehomogenised equation at `p`, in the
/// chart `y_k = 1` for the first `k` with `p_k != 0`.
pub fn local_hessian_determinant(member: &PencilMember, p: &ProjPoint) -> Result<CycNum> {
    let y = chart_coords(p);
    let k = y
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::ChartFailure)?;
    let scale = y[k].inv()?;
    let affine: Vec<CycNum> = y.iter().map(|c| c.mul(&scale)).collect();
    let others: Vec<usize> = (0..y.len()).filter(|&i| i != k).collect();
    let g = member.g.lift::<CycNum>();
    let firsts: Vec<MPoly<CycNum>> = others.iter().map(|&i| g.partial(i)).collect();
    let rows: Vec<Vec<CycNum>> = firsts
        .iter()
        .map(|d| {
            others
                .iter()
                .map(|&j| d.partial(j).evaluate(&affine))
                .collect()
        })
        .collect();
    Ok(Mat::from_rows(rows).determinant())
}

/// Ordinary double point test: `p` must be singular; returns whether the
/// local Hessian is nondegenerate.
pub fn verify_odp(member: &PencilMember, p: &ProjPoint) -> Result<bool> {
    if !verify_node_singular(member, p)? {
        return Err(Error::Precondition(format!(
            "{p} is not a singular point of X_{}",
            member.t
        )));
    }
    Ok(!local_hessian_determinant(member, p)?.is_zero())
}

/// Hilbert-function evidence for the number of singular points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularCount {
    pub hilbert_window: Vec<usize>,
    pub stable_value: usize,
    pub nodes_checked: usize,
}

/// Certifies that the singular scheme consists of exactly the 30 known
/// nodes: the Hilbert function of the Jacobian quotient is constant 30 on
/// the window and all 30 nodes are ordinary double points.
pub fn singular_count_certificate(member: &PencilMember) -> Result<SingularCount> {
    let gb = member.jacobian_basis();
    let window = hilbert_values(gb, HILBERT_FROM, HILBERT_SPAN)?;
    if window.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NotStable);
    }
    let stable = window[0];
    if stable != NODE_COUNT {
        return Err(Error::Mismatch {
            expected: NODE_COUNT,
            got: stable,
        });
    }
    for p in nodes() {
        if !verify_odp(member, p)? {
            return Err(Error::Precondition(format!(
                "{p} is not an ordinary double point"
            )));
        }
    }
    Ok(SingularCount {
        hilbert_window: window,
        stable_value: stable,
        nodes_checked: nodes().len(),
    })
}

/// A space of cubic forms on the hyperplane, as coefficient vectors along
/// `graded_monomials(5, 3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSpace {
    pub basis: Vec<Vec<CycNum>>,
    pub frame: Vec<Mono>,
}

impl CubicSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        in_span(v, &self.basis)
    }

    pub fn forms(&self) -> Vec<MPoly<CycNum>> {
        self.basis
            .iter()
            .map(|v| MPoly::from_coeff_vector(DEGREE - 1, &self.frame, v))
            .collect()
    }
}

pub fn cubic_frame() -> Vec<Mono> {
    graded_monomials(DEGREE - 1, 3)
}

/// Rows are points, columns the cubic monomials evaluated there.
pub fn evaluation_matrix(points: &[ProjPoint]) -> Mat<CycNum> {
    let frame = cubic_frame();
    let rows = points
        .iter()
        .map(|p| {
            let y = chart_coords(p);
            frame
                .iter()
                .map(|m| MPoly::term(DEGREE - 1, CycNum::one(), *m).evaluate(y))
                .collect()
        })
        .collect();
    Mat::from_rows(rows)
}

/// Cubic forms vanishing at every point of `points`.
pub fn cubic_space(points: &[ProjPoint]) -> Result<CubicSpace> {
    if points.is_empty() {
        return Err(Error::Precondition(
            "cubic_space needs at least one point".into(),
        ));
    }
    for p in points {
        require_on_hyperplane(p)?;
    }
    Ok(CubicSpace {
        basis: evaluation_matrix(points).kernel_basis(),
        frame: cubic_frame(),
    })
}

/// Matrix of `g` acting on cubic forms on the hyperplane, in the monomial
/// frame: lift to ambient coordinates, permute, restrict again.
pub fn cubic_operator(g: &Perm) -> Mat<Rat> {
    let frame = cubic_frame();
    let cols: Vec<Vec<Rat>> = frame
        .iter()
        .map(|m| {
            let ambient = MPoly::term(DEGREE, Rat::one(), *m);
            restrict_to_hyperplane(&permute_vars(g, &ambient))
                .coeff_vector(&frame)
                .expect("restriction of a cubic is a cubic")
        })
        .collect();
    Mat::from_cols(frame.len(), &cols)
}

fn require_sum_zero(v: &[Rat]) -> Result<()> {
    if v.len() != DEGREE {
        return Err(Error::Constraint(format!(
            "expected {DEGREE} coordinates, got {}",
            v.len()
        )));
    }
    let s = v.iter().fold(Rat::zero(), |a, x| a.add(x));
    if s.is_zero() {
        Ok(())
    } else {
        Err(Error::Constraint(format!("coordinates sum to {s}, not 0")))
    }
}

fn sum_of_squares() -> MPoly<Rat> {
    (0..DEGREE).fold(MPoly::zero(DEGREE), |a, i| {
        a.add(&MPoly::var(DEGREE, i).pow(2))
    })
}

fn linear_form(v: &[Rat]) -> MPoly<Rat> {
    v.iter().enumerate().fold(MPoly::zero(DEGREE), |a, (i, c)| {
        a.add(&MPoly::var(DEGREE, i).scale(c))
    })
}

/// `a(v) = sum v_i x_i^3`, restricted to the hyperplane.
pub fn map_a(v: &[Rat]) -> Result<Vec<Rat>> {
    require_sum_zero(v)?;
    let form = v.iter().enumerate().fold(MPoly::zero(DEGREE), |a, (i, c)| {
        a.add(&MPoly::var(DEGREE, i).pow(3).scale(c))
    });
    restrict_to_hyperplane(&form).coeff_vector(&cubic_frame())
}

/// `b(v) = (sum v_i x_i) * (sum x_j^2)`, restricted to the hyperplane.
pub fn map_b(v: &[Rat]) -> Result<Vec<Rat>> {
    require_sum_zero(v)?;
    restrict_to_hyperplane(&linear_form(v).mul(&sum_of_squares())).coeff_vector(&cubic_frame())
}

/// `e_i - e_5`, `i < 5`: a basis of the standard representation.
pub fn standard_basis() -> Vec<Vec<Rat>> {
    (0..DEGREE - 1)
        .map(|i| {
            let mut v = vec![Rat::zero(); DEGREE];
            v[i] = Rat::one();
            v[DEGREE - 1] = Rat::from(-1);
            v
        })
        .collect()
}

fn lift_vec(v: &[Rat]) -> Vec<CycNum> {
    v.iter().cloned().map(CycNum::from).collect()
}

/// Character of S6 on an invariant subspace of cubics, from traces on the
/// class representatives. Traces must be rational.
pub fn character_on(space: &CubicSpace) -> Result<ClassFunction> {
    let values = conjugacy_classes()
        .iter()
        .map(|c| {
            let op = cubic_operator(&c.representative).map(|x| CycNum::from(x.clone()));
            let tr = operator_trace_on_subspace(&op, &space.basis)?;
            tr.as_rational()
                .cloned()
                .ok_or_else(|| Error::Decomposition(format!("non-rational trace {tr}")))
        })
        .collect::<Result<Vec<Rat>>>()?;
    Ok(ClassFunction(values))
}

/// Result of splitting the space of cubics through the nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_sum: usize,
    pub a_inside: bool,
    pub b_inside: bool,
    pub character: ClassFunction,
    pub mult_standard: Rat,
    pub mult_trivial: Rat,
    pub norm: Rat,
}

/// Checks that `a(V)` and `b(V)` are 5-dimensional, independent and span
/// the 10-dimensional space, then computes the character of the space.
pub fn decompose_c(space: &CubicSpace) -> Result<Decomposition> {
    if space.dim() != 2 * (DEGREE - 1) {
        return Err(Error::Decomposition(format!(
            "expected a 10-dimensional space, got {}",
            space.dim()
        )));
    }
    let a_img: Vec<Vec<CycNum>> = standard_basis()
        .iter()
        .map(|v| map_a(v).map(|c| lift_vec(&c)))
        .collect::<Result<_>>()?;
    let b_img: Vec<Vec<CycNum>> = standard_basis()
        .iter()
        .map(|v| map_b(v).map(|c| lift_vec(&c)))
        .collect::<Result<_>>()?;
    let dim_a = span_rank(&a_img);
    let dim_b = span_rank(&b_img);
    let both: Vec<Vec<CycNum>> = a_img.iter().chain(&b_img).cloned().collect();
    let dim_sum = span_rank(&both);
    let a_inside = a_img.iter().all(|v| space.contains(v));
    let b_inside = b_img.iter().all(|v| space.contains(v));
    if (dim_a, dim_b, dim_sum) != (5, 5, 10) || !a_inside || !b_inside {
        return Err(Error::Decomposition(format!(
            "ranks a={dim_a} b={dim_b} a+b={dim_sum}, a inside={a_inside}, b inside={b_inside}"
        )));
    }
    let character = character_on(space)?;
    Ok(Decomposition {
        dim_a,
        dim_b,
        dim_sum,
        a_inside,
        b_inside,
        mult_standard: char_inner_product(&character, &ClassFunction::standard()),
        mult_trivial: char_inner_product(&character, &ClassFunction::trivial()),
        norm: char_inner_product(&character, &character),
        character,
    })
}

/// The parameter `t` for which `X_t` passes through a rational point, if
/// `sum p_i^4 != 0`: `t = (sum p_i^2)^2 / sum p_i^4`.
pub fn pencil_parameter_through(p: &[Rat]) -> Option<Rat> {
    let s2 = p.iter().fold(Rat::zero(), |a, x| a.add(&x.mul(x)));
    let s4 = p
        .iter()
        .fold(Rat::zero(), |a, x| a.add(&x.mul(x).mul(&x.mul(x))));
    s2.mul(&s2).div(&s4).ok()
}

/// Seed of the extra singular orbit at a special parameter.
pub fn special_seed(t: &Rat) -> Result<[i64; DEGREE]> {
    let seeds = [
        [1, -1, 0, 0, 0, 0],
        [-1, -1, -1, 1, 1, 1],
        [-5, 1, 1, 1, 1, 1],
    ];
    special_parameters()
        .iter()
        .position(|s| s == t)
        .map(|k| seeds[k])
        .ok_or_else(|| Error::UnsupportedParameter(t.to_string()))
}

/// The extra singular orbit at `t` in `{2, 6, 10/7}`.
pub fn special_orbits(t: &Rat) -> Result<Vec<ProjPoint>> {
    Ok(orbit(&ProjPoint::from_ints(&special_seed(t)?)?))
}

/// `x1^3 - x0^3`, the cubic in `a(V)` that separates the extra orbit.
pub fn separating_cubic() -> MPoly<Rat> {
    MPoly::var(DEGREE, 1)
        .pow(3)
        .sub(&MPoly::var(DEGREE, 0).pow(3))
}

/// Witness data for a special parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialReport {
    pub t: Rat,
    pub seed: Vec<i64>,
    pub seed_parameter: Option<Rat>,
    pub orbit_size: usize,
    pub all_singular: bool,
    pub separating_point: Option<ProjPoint>,
    pub separating_value: Option<CycNum>,
    pub hilbert_stable_value: Option<usize>,
    pub dim_cubics: usize,
    pub mult_standard: Rat,
    pub norm: Rat,
}

/// Runs the checks for a special parameter: the extra orbit is singular,
/// `x1^3 - x0^3` is nonzero somewhere on it, and the cubics through all
/// singular points form a copy of the standard representation.
pub fn special_report(t: &Rat) -> Result<SpecialReport> {
    let seed = special_seed(t)?;
    let member = PencilMember::new(t.clone());
    let extra = special_orbits(t)?;
    let all_singular = extra
        .iter()
        .map(|p| verify_node_singular(&member, p))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let sep = separating_cubic().lift::<CycNum>();
    let separating = extra.iter().find_map(|p| {
        let v = sep.evaluate(p.coords());
        (!v.is_zero()).then(|| (p.clone(), v))
    });
    let mut union: Vec<ProjPoint> = nodes().to_vec();
    union.extend(extra.iter().cloned());
    let space = cubic_space(&union)?;
    let character = character_on(&space)?;
    let window = hilbert_values(member.jacobian_basis(), HILBERT_FROM, HILBERT_SPAN)?;
    let stable = window.windows(2).all(|w| w[0] == w[1]).then(|| window[0]);
    let seed_rat: Vec<Rat> = seed.iter().map(|&c| Rat::from(c)).collect();
    Ok(SpecialReport {
        t: t.clone(),
        seed: seed.to_vec(),
        seed_parameter: pencil_parameter_through(&seed_rat),
        orbit_size: extra.len(),
        all_singular,
        separating_point: separating.as_ref().map(|(p, _)| p.clone()),
        separating_value: separating.map(|(_, v)| v),
        hilbert_stable_value: stable,
        dim_cubics: space.dim(),
        mult_standard: char_inner_product(&character, &ClassFunction::standard()),
        norm: char_inner_product(&character, &character),
    })
}

/// `dim C - (35 - #points)`: excess of the cubics through `points` over the
/// expected dimension.
pub fn defect_direct(points: &[ProjPoint]) -> Result<i64> {
    let space = cubic_space(points)?;
    Ok(space.dim() as i64 - (CUBIC_FORMS as i64 - points.len() as i64))
}

/// Jacobian ring of the Fermat quartic, the smooth reference.
pub fn fermat_jacobian_basis() -> &'static GroebnerBasis<Rat> {
    static FERMAT: OnceLock<GroebnerBasis<Rat>> = OnceLock::new();
    FERMAT.get_or_init(|| {
        let fermat = (0..DEGREE - 1).fold(MPoly::<Rat>::zero(DEGREE - 1), |a, i| {
            a.add(&MPoly::var(DEGREE - 1, i).pow(4))
        });
        buchberger(&fermat.gradient(), MonomialOrder::Grevlex)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobianDefect {
    pub dim_r7: usize,
    pub dim_r7_smooth: usize,
    pub defect: i64,
}

/// `dim R_7 - dim R^sm_7` from the graded Jacobian rings.
pub fn defect_jacobian(member: &PencilMember) -> Result<JacobianDefect> {
    let dim_r7 = quotient_graded_dim(member.jacobian_basis(), DEFECT_DEGREE)?;
    let dim_r7_smooth = quotient_graded_dim(fermat_jacobian_basis(), DEFECT_DEGREE)?;
    Ok(JacobianDefect {
        dim_r7,
        dim_r7_smooth,
        defect: dim_r7 as i64 - dim_r7_smooth as i64,
    })
}
