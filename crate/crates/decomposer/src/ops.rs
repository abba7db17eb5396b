//! Submodule restriction, quotients, radical filtrations, and the
//! numerical fingerprint used to shortlist candidate indecomposables.

use crate::hom::sign_multiplicities;
use exact_linalg::{Matrix, Polynomial, Scalar};
use hopf_core::radical_basis;
use rep_modules::ModuleRep;
use serde::Serialize;
use std::sync::Arc;

/// Restriction of the action to the span of the given columns; the span
/// must be a submodule.
pub fn restrict(m: &ModuleRep, span: &Matrix) -> ModuleRep {
    let actions = m
        .actions
        .iter()
        .map(|(n, a)| {
            let coords = span
                .solve(&(a * span))
                .expect("span is not closed under the action");
            (n.clone(), coords)
        })
        .collect();
    ModuleRep::new(Arc::clone(&m.algebra), actions)
}

/// Quotient of m by the submodule spanned by the given columns, presented
/// on a complementary set of coordinate vectors.
pub fn quotient(m: &ModuleRep, span: &Matrix) -> ModuleRep {
    let d = m.dim;
    let k = span.cols();
    // extend the span to a full basis with coordinate vectors
    let (_, pivots) = span.hstack(&Matrix::identity(d)).rref();
    let complement: Vec<usize> = pivots
        .iter()
        .filter(|&&p| p >= k)
        .map(|&p| p - k)
        .collect();
    assert_eq!(complement.len(), d - k, "span columns are dependent");
    let comp = Matrix::from_fn(d, d - k, |i, j| {
        if i == complement[j] {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let full = span.hstack(&comp);
    let actions = m
        .actions
        .iter()
        .map(|(n, a)| {
            let coords = full.solve(&(a * &comp)).expect("full basis is invertible");
            let induced = Matrix::from_fn(d - k, d - k, |i, j| coords[(k + i, j)].clone());
            (n.clone(), induced)
        })
        .collect();
    ModuleRep::new(Arc::clone(&m.algebra), actions)
}

/// Column space of the union of the given matrices' columns.
fn joint_column_space(parts: &[Matrix]) -> Matrix {
    let mut all = Matrix::zeros(parts[0].rows(), 0);
    for p in parts {
        all = all.hstack(p);
    }
    all.column_space()
}

/// Action matrices of a basis of the algebra's Jacobson radical.
pub fn radical_actions(m: &ModuleRep) -> Vec<Matrix> {
    radical_basis(&m.algebra)
        .iter()
        .map(|r| m.action_of_element(r))
        .collect()
}

/// Basis of J·V for a subspace V (columns), under precomputed radical
/// action matrices.
fn radical_image(rads: &[Matrix], v: &Matrix) -> Matrix {
    let images: Vec<Matrix> = rads.iter().map(|r| r * v).collect();
    joint_column_space(&images)
}

/// The radical series V ⊇ JV ⊇ J²V ⊇ … down to zero (first entry the full
/// space).
pub fn radical_series(m: &ModuleRep) -> Vec<Matrix> {
    let rads = radical_actions(m);
    let mut series = vec![Matrix::identity(m.dim)];
    loop {
        let next = radical_image(&rads, series.last().unwrap());
        if next.cols() == 0 {
            return series;
        }
        series.push(next);
    }
}

/// Socle: the joint kernel of the radical action.
pub fn socle(m: &ModuleRep) -> Matrix {
    let rads = radical_actions(m);
    if rads.is_empty() || m.dim == 0 {
        return Matrix::identity(m.dim);
    }
    let mut stacked = Matrix::zeros(0, m.dim);
    for r in &rads {
        stacked = stacked.vstack(r);
    }
    stacked.nullspace()
}

#[derive(Clone, Debug, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    /// Joint eigenspace dimensions of (g,h) in the order
    /// (+,+), (+,−), (−,+), (−,−).
    pub sign_multiplicities: [usize; 4],
    pub top_dim: usize,
    pub socle_dim: usize,
    pub x_rank: usize,
    pub y_rank: usize,
    pub loewy_length: usize,
    pub band_eta: Option<Scalar>,
}

pub fn fingerprint(m: &ModuleRep) -> Fingerprint {
    let series = radical_series(m);
    Fingerprint {
        dim: m.dim,
        sign_multiplicities: sign_multiplicities(m),
        top_dim: m.dim - series.get(1).map_or(0, |j| j.cols()),
        socle_dim: socle(m).cols(),
        x_rank: m.action("x").rank(),
        y_rank: m.action("y").rank(),
        loewy_length: if m.dim == 0 { 0 } else { series.len() },
        band_eta: None,
    }
}

/// A summand of one fingerprint must fit inside the other componentwise.
pub fn fits_inside(part: &Fingerprint, whole: &Fingerprint) -> bool {
    part.dim <= whole.dim
        && part.loewy_length <= whole.loewy_length
        && part.x_rank <= whole.x_rank
        && part.y_rank <= whole.y_rank
        && part
            .sign_multiplicities
            .iter()
            .zip(&whole.sign_multiplicities)
            .all(|(p, w)| p <= w)
}

/// The top-to-radical maps induced by x and y on a Loewy-length ≤ 2
/// module: columns of the returned pair are indexed by a complement of JQ,
/// rows by a basis of JQ.
pub fn top_to_radical_pencil(m: &ModuleRep) -> Option<(Matrix, Matrix)> {
    let series = radical_series(m);
    if series.len() > 2 {
        return None;
    }
    let rad = if series.len() == 2 {
        series[1].clone()
    } else {
        Matrix::zeros(m.dim, 0)
    };
    let k = rad.cols();
    let (_, pivots) = rad.hstack(&Matrix::identity(m.dim)).rref();
    let complement: Vec<usize> = pivots.iter().filter(|&&p| p >= k).map(|&p| p - k).collect();
    let comp = Matrix::from_fn(m.dim, complement.len(), |i, j| {
        if i == complement[j] {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    // on a semisimple piece with nonzero x/y action (the double's matrix
    // blocks) the generator image is not inside JQ and there is no pencil
    let x = rad.solve(&(m.action("x") * &comp))?;
    let y = rad.solve(&(m.action("y") * &comp))?;
    Some((x, y))
}

fn det(a: &Matrix) -> Scalar {
    let n = a.rows();
    if n == 0 {
        return Scalar::one();
    }
    let p = a.char_poly();
    let c = p.eval(&Scalar::zero());
    if n % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Lagrange interpolation through (points[i], values[i]).
fn interpolate(points: &[Scalar], values: &[Scalar]) -> Polynomial {
    let mut out = Polynomial::zero();
    for i in 0..points.len() {
        let mut num = Polynomial::one();
        let mut den = Scalar::one();
        for j in 0..points.len() {
            if i != j {
                num = num.mul(&Polynomial::linear(&points[j]));
                den = den * (points[i].clone() - points[j].clone());
            }
        }
        out = out.add(&num.scale(&(values[i].clone() / den)));
    }
    out
}

/// Rational eigenvalues of the pencil Y − λX on the top-to-radical maps:
/// the determinant of a generically nonsingular square submatrix is
/// interpolated exactly and its rational roots collected. Band summands
/// make the rank drop at their parameter, so every band η (over the
/// tensor square, every ±√η) appears among the roots.
pub fn pencil_roots(x: &Matrix, y: &Matrix) -> Vec<Scalar> {
    pencil_poly(x, y).map_or_else(Vec::new, |p| {
        p.rational_roots().into_iter().map(|(r, _)| r).collect()
    })
}

/// Exact determinant of a generically nonsingular square submatrix of
/// Y − λX, as a polynomial in λ (via interpolation).
pub fn pencil_poly(x: &Matrix, y: &Matrix) -> Option<Polynomial> {
    if x.rows() == 0 || x.cols() == 0 {
        return None;
    }
    // generic evaluation point to read off rank and a well-placed submatrix
    let t0 = Scalar::fraction(91, 53);
    let generic = y - &x.scale(&t0);
    let (_, col_pivots) = generic.rref();
    let r = col_pivots.len();
    if r == 0 {
        return None;
    }
    let (_, row_pivots) = generic.transpose().rref();
    let pick = |m: &Matrix| {
        Matrix::from_fn(r, r, |i, j| m[(row_pivots[i], col_pivots[j])].clone())
    };
    let (xs, ys) = (pick(x), pick(y));
    let points: Vec<Scalar> = (0..=r as i64).map(Scalar::from_int).collect();
    let values: Vec<Scalar> = points
        .iter()
        .map(|t| det(&(&ys - &xs.scale(t))))
        .collect();
    let p = interpolate(&points, &values);
    if p.degree().is_none() {
        return None;
    }
    Some(p)
}

/// The even and odd parts of p in the substituted variable μ = λ²:
/// p(λ) = even(λ²) + λ·odd(λ²). Band parameters over the tensor square
/// enter the pencil as ±√η, so η is a rational root of one of these.
pub fn even_odd_parts(p: &Polynomial) -> (Polynomial, Polynomial) {
    let cs = p.coeffs();
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, c) in cs.iter().enumerate() {
        if i % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    (Polynomial::new(even), Polynomial::new(odd))
}
