//! Constructors for the canonical indecomposable modules over the three
//! 16-dimensional algebras: simples, projective covers (as left ideals on
//! the canonical primitive idempotents), the string families M, W, N, N',
//! and the one-parameter band family C(r,η), together with sign twists.

use crate::label::{Family, IndecLabel};
use crate::module::{tensor, ModuleRep};
use exact_linalg::{Matrix, Scalar};
use hopf_core::{canonical_idempotents, Element, HopfAlgebraData};
use std::sync::Arc;

/// One-dimensional module on which g acts by s1, h by s2, and x, y by 0.
/// Over the double only the two diagonal sign pairs exist: with x and y both
/// zero, xy + yx = 1 − gh forces s1·s2 = 1.
pub fn simple(h: &Arc<HopfAlgebraData>, s1: i8, s2: i8) -> Result<ModuleRep, String> {
    assert!(s1.abs() == 1 && s2.abs() == 1);
    if h.name == "DH4" && s1 * s2 == -1 {
        return Err(format!(
            "no one-dimensional module with signs ({s1},{s2}) over {}",
            h.name
        ));
    }
    let sc = |s: i8| Matrix::from_i64(&[&[s as i64]]);
    let actions = h
        .generators
        .iter()
        .map(|(n, _)| {
            let m = match n.as_str() {
                "g" => sc(s1),
                "h" => sc(s2),
                _ => Matrix::zeros(1, 1),
            };
            (n.clone(), m)
        })
        .collect();
    Ok(ModuleRep::new(Arc::clone(h), actions))
}

/// Restricts the left regular action to the span of the given vectors; the
/// span must be a left ideal.
fn span_module(h: &Arc<HopfAlgebraData>, span: &[Element]) -> ModuleRep {
    let b = Matrix::from_fn(h.dim, span.len(), |i, j| span[j][i].clone());
    let actions = h
        .generators
        .iter()
        .map(|(n, gelem)| {
            let l = h.left_mult_matrix(gelem);
            let coords = b
                .solve(&(&l * &b))
                .expect("span is not closed under the algebra action");
            (n.clone(), coords)
        })
        .collect();
    ModuleRep::new(Arc::clone(h), actions)
}

/// Projective cover of the simple with the given signs, realized as the left
/// ideal on the matching canonical primitive idempotent. The ordered
/// candidate basis (e, xe, ye, xye) keeps the diagram weights visible; over
/// the double with s1·s2 = −1 the ideal is two-dimensional.
pub fn projective(h: &Arc<HopfAlgebraData>, s1: i8, s2: i8) -> Result<ModuleRep, String> {
    assert!(s1.abs() == 1 && s2.abs() == 1);
    let sys = canonical_idempotents(h);
    let idx = match (h.name.as_str(), s1, s2) {
        ("mabar" | "HH", 1, 1) => 0,
        ("mabar" | "HH", 1, -1) => 1,
        ("mabar" | "HH", -1, 1) => 2,
        ("mabar" | "HH", -1, -1) => 3,
        ("DH4", 1, 1) => 0,
        ("DH4", -1, -1) => 1,
        ("DH4", 1, -1) => 2,
        ("DH4", -1, 1) => 4,
        _ => return Err(format!("no projective constructor for algebra {}", h.name)),
    };
    let e = sys.elements[idx].clone();
    let x = h.generator("x").unwrap().clone();
    let y = h.generator("y").unwrap().clone();
    let candidates = [
        e.clone(),
        h.mul(&x, &e),
        h.mul(&y, &e),
        h.product(&[&x, &y, &e]),
    ];
    let mut basis: Vec<Element> = Vec::new();
    let mut stacked = Matrix::zeros(h.dim, 0);
    for c in candidates {
        let next = stacked.hstack(&Matrix::column(c.clone()));
        if next.rank() > stacked.rank() {
            stacked = next;
            basis.push(c);
        }
    }
    let full_ideal_rank = Matrix::from_fn(h.dim, h.dim, |i, j| {
        h.mul(&h.basis_elem(j), &e)[i].clone()
    })
    .rank();
    assert_eq!(
        basis.len(),
        full_ideal_rank,
        "candidate basis does not span the left ideal"
    );
    Ok(span_module(h, &basis))
}

/// Two-layer module diagram: top basis u₁..u_p, bottom basis v₁..v_q, with
/// weighted x- and y-edges from top to bottom and diagonal g/h actions given
/// by a sign pair per vertex.
struct Diagram {
    top: usize,
    bottom: usize,
    /// (s1, s2) per vertex, u's first then v's.
    signs: Vec<(i8, i8)>,
    /// (u index, v index, weight), all 1-based.
    x_edges: Vec<(usize, usize, Scalar)>,
    y_edges: Vec<(usize, usize, Scalar)>,
}

fn diagram_module(h: &Arc<HopfAlgebraData>, d: &Diagram) -> ModuleRep {
    let dim = d.top + d.bottom;
    assert_eq!(d.signs.len(), dim);
    let edge_matrix = |edges: &[(usize, usize, Scalar)]| {
        let mut m = Matrix::zeros(dim, dim);
        for (u, v, w) in edges {
            m[(d.top + v - 1, u - 1)] = w.clone();
        }
        m
    };
    let diag = |pick: fn(&(i8, i8)) -> i8| {
        Matrix::from_fn(dim, dim, |i, j| {
            if i == j {
                Scalar::from_int(pick(&d.signs[i]) as i64)
            } else {
                Scalar::zero()
            }
        })
    };
    let actions = h
        .generators
        .iter()
        .map(|(n, _)| {
            let m = match n.as_str() {
                "g" => diag(|s| s.0),
                "h" => diag(|s| s.1),
                "x" => edge_matrix(&d.x_edges),
                "y" => edge_matrix(&d.y_edges),
                other => panic!("unexpected generator {other}"),
            };
            (n.clone(), m)
        })
        .collect();
    ModuleRep::new(Arc::clone(h), actions)
}

fn one() -> Scalar {
    Scalar::one()
}

/// Vertex signs for the two-generator algebras: x and y each anticommute
/// with both g and h, so every edge flips both signs at once and the two
/// layers carry constant signs (+,+) and (−,−).
fn taft_signs(top: usize, bottom: usize) -> Vec<(i8, i8)> {
    let mut s = vec![(1, 1); top];
    s.extend(vec![(-1, -1); bottom]);
    s
}

/// Vertex signs for the tensor-square algebra, where x flips only the
/// g-sign and y only the h-sign: walking the string alternates signs.
/// Top vertex i carries ((−1)^{i−1}, (−1)^{i−1}); the bottom row starts at
/// `first_bottom` and alternates by flipping both entries each step.
fn hh_signs(top: usize, bottom: usize, first_bottom: (i8, i8)) -> Vec<(i8, i8)> {
    let alt = |i: usize, start: (i8, i8)| {
        if i % 2 == 0 {
            start
        } else {
            (-start.0, -start.1)
        }
    };
    let mut s: Vec<(i8, i8)> = (0..top).map(|i| alt(i, (1, 1))).collect();
    s.extend((0..bottom).map(|i| alt(i, first_bottom)));
    s
}

/// Base (untwisted) string module M, W, N, or N' of the given rank.
pub fn string_module(
    h: &Arc<HopfAlgebraData>,
    family: Family,
    r: usize,
) -> Result<ModuleRep, String> {
    assert!(r >= 1);
    let is_hh = h.name == "HH";
    if !is_hh && h.name != "mabar" && h.name != "DH4" {
        return Err(format!("no string modules over algebra {}", h.name));
    }
    let d = match family {
        // top u₁..u_r, bottom v₁..v_{r+1}; x·uᵢ = vᵢ, y·uᵢ = vᵢ₊₁
        Family::M => Diagram {
            top: r,
            bottom: r + 1,
            signs: if is_hh {
                hh_signs(r, r + 1, (-1, 1))
            } else {
                taft_signs(r, r + 1)
            },
            x_edges: (1..=r).map(|i| (i, i, one())).collect(),
            y_edges: (1..=r).map(|i| (i, i + 1, one())).collect(),
        },
        // top u₁..u_{r+1}, bottom v₁..v_r; over the two-generator algebras
        // x·uᵢ = vᵢ and y·uᵢ = vᵢ₋₁; over the tensor square the roles of
        // x and y are exchanged
        Family::W => Diagram {
            top: r + 1,
            bottom: r,
            signs: if is_hh {
                hh_signs(r + 1, r, (1, -1))
            } else {
                taft_signs(r + 1, r)
            },
            x_edges: if is_hh {
                (2..=r + 1).map(|i| (i, i - 1, one())).collect()
            } else {
                (1..=r).map(|i| (i, i, one())).collect()
            },
            y_edges: if is_hh {
                (1..=r).map(|i| (i, i, one())).collect()
            } else {
                (2..=r + 1).map(|i| (i, i - 1, one())).collect()
            },
        },
        // even truncations of M (family N) and W (family N'), dim 2r
        Family::N => Diagram {
            top: r,
            bottom: r,
            signs: if is_hh {
                hh_signs(r, r, (-1, 1))
            } else {
                taft_signs(r, r)
            },
            x_edges: (1..=r).map(|i| (i, i, one())).collect(),
            y_edges: if is_hh {
                (1..r).map(|i| (i, i + 1, one())).collect()
            } else {
                (2..=r).map(|i| (i, i - 1, one())).collect()
            },
        },
        Family::NPrime => Diagram {
            top: r,
            bottom: r,
            signs: if is_hh {
                hh_signs(r, r, (1, -1))
            } else {
                taft_signs(r, r)
            },
            x_edges: (2..=r).map(|i| (i, i - 1, one())).collect(),
            y_edges: (1..=r).map(|i| (i, i, one())).collect(),
        },
        _ => return Err(format!("{family:?} is not a string family")),
    };
    Ok(diagram_module(h, &d))
}

/// Base band module C(r,η), η ≠ 0. Over the two-generator algebras this is
/// the 2r-dimensional module with x·uᵢ = vᵢ and y·uᵢ = η·vᵢ + vᵢ₋₁; over
/// the tensor square it is the 4r-dimensional analogue with the η-step on
/// the odd top vertices.
pub fn band_module(h: &Arc<HopfAlgebraData>, r: usize, eta: &Scalar) -> Result<ModuleRep, String> {
    assert!(r >= 1 && !eta.is_zero());
    let d = match h.name.as_str() {
        "mabar" | "DH4" => {
            let mut y_edges: Vec<(usize, usize, Scalar)> =
                (1..=r).map(|i| (i, i, eta.clone())).collect();
            y_edges.extend((2..=r).map(|i| (i, i - 1, one())));
            Diagram {
                top: r,
                bottom: r,
                signs: taft_signs(r, r),
                x_edges: (1..=r).map(|i| (i, i, one())).collect(),
                y_edges,
            }
        }
        "HH" => {
            let n = 2 * r;
            let mut y_edges: Vec<(usize, usize, Scalar)> = Vec::new();
            for k in 1..=r {
                y_edges.push((2 * k - 1, 2 * k, eta.clone()));
                if k >= 2 {
                    y_edges.push((2 * k - 1, 2 * k - 2, one()));
                }
                y_edges.push((2 * k, 2 * k - 1, one()));
            }
            let sgn = |i: usize, odd: (i8, i8), even: (i8, i8)| {
                if i % 2 == 1 {
                    odd
                } else {
                    even
                }
            };
            let mut signs: Vec<(i8, i8)> =
                (1..=n).map(|i| sgn(i, (-1, -1), (1, 1))).collect();
            signs.extend((1..=n).map(|i| sgn(i, (1, -1), (-1, 1))));
            Diagram {
                top: n,
                bottom: n,
                signs,
                x_edges: (1..=n).map(|i| (i, i, one())).collect(),
                y_edges,
            }
        }
        other => return Err(format!("no band modules over algebra {other}")),
    };
    Ok(diagram_module(h, &d))
}

/// Right tensor by the one-dimensional module with the given signs.
pub fn sign_twist(m: &ModuleRep, s1: i8, s2: i8) -> Result<ModuleRep, String> {
    if (s1, s2) == (1, 1) {
        return Ok(m.clone());
    }
    let s = simple(&m.algebra, s1, s2)?;
    Ok(tensor(m, &s))
}

/// Builds the module named by a label over the given algebra.
pub fn construct(h: &Arc<HopfAlgebraData>, label: &IndecLabel) -> Result<ModuleRep, String> {
    let (s1, s2) = label.signs;
    match label.family {
        Family::S => simple(h, s1, s2),
        Family::P => projective(h, s1, s2),
        Family::M | Family::W | Family::N | Family::NPrime => {
            let base = string_module(h, label.family, label.rank)?;
            sign_twist(&base, s1, s2)
        }
        Family::C => {
            let base = band_module(h, label.rank, label.eta.as_ref().unwrap())?;
            sign_twist(&base, s1, s2)
        }
    }
}
