//! Ring-theoretic structure of the finite-dimensional algebras: Jacobson
//! radical, idempotent systems, block decomposition and the Ext quiver.
//!
//! The radical is computed as the kernel of the trace form of the regular
//! representation, (x,y) ↦ tr(L_x L_y), which over a characteristic-zero
//! field equals J(A). Idempotents are split by Chinese-remainder idempotents
//! inside the subalgebra generated by a corner element: coprime factors of
//! its minimal polynomial yield complementary idempotents via Bézout
//! coefficients.

use crate::algebra::{Element, HopfAlgebraData};
use exact_linalg::{Matrix, Polynomial, Scalar};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct IdempotentSystem {
    pub elements: Vec<Element>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IdempotentReport {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub complete: bool,
    /// Per-element primitivity verdicts; only present when requested.
    pub primitive: Option<Vec<bool>>,
    pub failures: Vec<String>,
}

impl IdempotentReport {
    pub fn all_pass(&self) -> bool {
        self.idempotent
            && self.orthogonal
            && self.complete
            && self.primitive.as_ref().is_none_or(|v| v.iter().all(|&b| b))
    }
}

fn elem_add(a: &[Scalar], b: &[Scalar]) -> Element {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn elem_scale(a: &[Scalar], c: &Scalar) -> Element {
    a.iter().map(|x| x * c).collect()
}

fn is_zero_elem(a: &[Scalar]) -> bool {
    a.iter().all(|c| c.is_zero())
}

fn columns_matrix(vecs: &[Element], dim: usize) -> Matrix {
    Matrix::from_fn(dim, vecs.len(), |r, c| vecs[c][r].clone())
}

/// Independent spanning subset of the given vectors, as elements.
fn span_basis(vecs: &[Element], dim: usize) -> Vec<Element> {
    let m = columns_matrix(vecs, dim).column_space();
    (0..m.cols()).map(|j| m.col_vec(j)).collect()
}

/// Basis of the corner subalgebra e·A·e.
fn corner_basis(h: &HopfAlgebraData, e: &Element) -> Vec<Element> {
    let prods: Vec<Element> = (0..h.dim)
        .map(|i| h.mul(&h.mul(e, &h.basis_elem(i)), e))
        .collect();
    span_basis(&prods, h.dim)
}

/// Matrix of left multiplication by `w` in the coordinates of `basis`
/// (the span must be closed under multiplication by w).
fn mult_on_span(h: &HopfAlgebraData, w: &Element, basis: &[Element]) -> Matrix {
    let span = columns_matrix(basis, h.dim);
    let prods: Vec<Element> = basis.iter().map(|v| h.mul(w, v)).collect();
    let rhs = columns_matrix(&prods, h.dim);
    span.solve(&rhs)
        .expect("span not closed under multiplication")
}

/// Dimension of the radical of the unital subalgebra spanned by `basis`,
/// via the trace form of its regular representation.
fn span_radical_dim(h: &HopfAlgebraData, basis: &[Element]) -> usize {
    let mats: Vec<Matrix> = basis.iter().map(|v| mult_on_span(h, v, basis)).collect();
    let m = basis.len();
    let gram = Matrix::from_fn(m, m, |i, j| (&mats[i] * &mats[j]).trace());
    m - gram.rank()
}

/// True iff the corner e·A·e is a local ring, i.e. e is a primitive
/// idempotent of A.
pub fn is_primitive_idempotent(h: &HopfAlgebraData, e: &Element) -> bool {
    let basis = corner_basis(h, e);
    basis.len() - span_radical_dim(h, &basis) == 1
}

/// Checks orthogonality, idempotency and completeness; optionally certifies
/// each element primitive by locality of its corner.
pub fn verify_idempotent_system(
    h: &HopfAlgebraData,
    sys: &IdempotentSystem,
    require_primitive: bool,
) -> IdempotentReport {
    let mut rep = IdempotentReport {
        idempotent: true,
        orthogonal: true,
        complete: true,
        primitive: None,
        failures: Vec::new(),
    };
    for (i, e) in sys.elements.iter().enumerate() {
        if &h.mul(e, e) != e {
            rep.idempotent = false;
            rep.failures.push(format!("element {i} is not idempotent"));
        }
    }
    for i in 0..sys.elements.len() {
        for j in 0..sys.elements.len() {
            if i != j && !is_zero_elem(&h.mul(&sys.elements[i], &sys.elements[j])) {
                rep.orthogonal = false;
                rep.failures
                    .push(format!("elements {i} and {j} are not orthogonal"));
            }
        }
    }
    let mut sum = h.zero_elem();
    for e in &sys.elements {
        sum = elem_add(&sum, e);
    }
    if sum != h.unit {
        rep.complete = false;
        rep.failures.push("sum of elements is not 1".into());
    }
    if require_primitive {
        let verdicts: Vec<bool> = sys
            .elements
            .iter()
            .map(|e| is_primitive_idempotent(h, e))
            .collect();
        for (i, &v) in verdicts.iter().enumerate() {
            if !v {
                rep.failures.push(format!("element {i} is not primitive"));
            }
        }
        rep.primitive = Some(verdicts);
    }
    rep
}

/// Basis of the Jacobson radical J(A).
pub fn radical_basis(h: &HopfAlgebraData) -> Vec<Element> {
    let mats: Vec<Matrix> = (0..h.dim)
        .map(|i| h.left_mult_matrix(&h.basis_elem(i)))
        .collect();
    let gram = Matrix::from_fn(h.dim, h.dim, |i, j| (&mats[i] * &mats[j]).trace());
    let ns = gram.nullspace();
    (0..ns.cols()).map(|j| ns.col_vec(j)).collect()
}

/// Evaluate a polynomial at an algebra element, with the constant term
/// multiplied by `unit` (the identity of the subalgebra in play).
fn eval_poly_at(h: &HopfAlgebraData, p: &Polynomial, w: &Element, unit: &Element) -> Element {
    let mut acc = h.zero_elem();
    for c in p.coeffs().iter().rev() {
        acc = h.mul(&acc, w);
        acc = elem_add(&acc, &elem_scale(unit, c));
    }
    acc
}

/// Attempts to split the idempotent f into two orthogonal idempotents inside
/// the corner of f within the span of `ambient` (a unital subalgebra).
/// Candidate corner elements are basis vectors, then pairwise sums and
/// differences; the split comes from a coprime factorization of the minimal
/// polynomial.
fn try_split(
    h: &HopfAlgebraData,
    f: &Element,
    ambient: &[Element],
) -> Option<(Element, Element)> {
    let corner_vecs: Vec<Element> = ambient
        .iter()
        .map(|v| h.mul(&h.mul(f, v), f))
        .collect();
    let basis = span_basis(&corner_vecs, h.dim);
    if basis.len() <= 1 {
        return None;
    }
    let mut candidates: Vec<Element> = basis.clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            candidates.push(elem_add(&basis[i], &basis[j]));
            candidates.push(elem_add(&basis[i], &elem_scale(&basis[j], &-Scalar::one())));
        }
    }
    for w in &candidates {
        let m = mult_on_span(h, w, &basis);
        let p = m.min_poly();
        let factors = p.squarefree_split();
        if factors.len() < 2 {
            continue;
        }
        // first factor (with multiplicity) against the rest
        let mut f1 = Polynomial::one();
        for _ in 0..factors[0].1 {
            f1 = f1.mul(&factors[0].0);
        }
        let mut f2 = Polynomial::one();
        for (q, mult) in &factors[1..] {
            for _ in 0..*mult {
                f2 = f2.mul(q);
            }
        }
        let (g, u, v) = f1.xgcd(&f2);
        if g.degree() != Some(0) {
            continue;
        }
        let e1 = eval_poly_at(h, &u.mul(&f1), w, f);
        let e2 = eval_poly_at(h, &v.mul(&f2), w, f);
        if is_zero_elem(&e1) || is_zero_elem(&e2) {
            continue;
        }
        debug_assert_eq!(h.mul(&e1, &e1), e1);
        debug_assert_eq!(h.mul(&e2, &e2), e2);
        debug_assert!(is_zero_elem(&h.mul(&e1, &e2)));
        return Some((e2, e1));
    }
    None
}

/// Splits 1 into orthogonal idempotents that are primitive relative to the
/// subalgebra spanned by `ambient` (which must contain 1 and be closed
/// under multiplication).
fn split_to_primitives(h: &HopfAlgebraData, ambient: &[Element]) -> Vec<Element> {
    let mut sys = vec![h.unit.clone()];
    loop {
        let mut split_at = None;
        for (i, f) in sys.iter().enumerate() {
            if let Some(pair) = try_split(h, f, ambient) {
                split_at = Some((i, pair));
                break;
            }
        }
        match split_at {
            None => break,
            Some((i, (a, b))) => {
                sys[i] = a;
                sys.insert(i + 1, b);
            }
        }
    }
    sys
}

/// Basis of the center Z(A).
pub fn center_basis(h: &HopfAlgebraData) -> Vec<Element> {
    let mut rows = Vec::new();
    for i in 0..h.dim {
        let l = h.left_mult_matrix(&h.basis_elem(i));
        let r = h.right_mult_matrix(&h.basis_elem(i));
        rows.push(&l - &r);
    }
    let mut stacked = rows[0].clone();
    for m in &rows[1..] {
        stacked = stacked.vstack(m);
    }
    let ns = stacked.nullspace();
    (0..ns.cols()).map(|j| ns.col_vec(j)).collect()
}

/// The primitive central idempotents (block idempotents) of the algebra.
pub fn central_idempotents(h: &HopfAlgebraData) -> IdempotentSystem {
    let z = center_basis(h);
    IdempotentSystem {
        elements: split_to_primitives(h, &z),
    }
}

/// A complete set of primitive orthogonal idempotents, found by repeated
/// corner splitting starting from 1. Every returned element is certified
/// primitive (local corner).
pub fn primitive_orthogonal_idempotents(h: &HopfAlgebraData) -> IdempotentSystem {
    let ambient: Vec<Element> = (0..h.dim).map(|i| h.basis_elem(i)).collect();
    let sys = split_to_primitives(h, &ambient);
    for e in &sys {
        assert!(
            is_primitive_idempotent(h, e),
            "corner splitting stalled on a non-primitive idempotent"
        );
    }
    IdempotentSystem { elements: sys }
}

#[derive(Clone, Debug, Serialize)]
pub struct Quiver {
    /// Number of vertices = iso-classes of simple modules.
    pub vertices: usize,
    /// arrows[i][j] = number of arrows from vertex i to vertex j
    /// (= dim eⱼ(J/J²)eᵢ for class representatives eᵢ, eⱼ).
    pub arrows: Vec<Vec<usize>>,
    /// Indices (into the computed primitive system) grouped by iso-class.
    pub vertex_classes: Vec<Vec<usize>>,
}

/// The Ext quiver: vertices are iso-classes of simples, arrow multiplicities
/// read off J/J² compressed between class representatives.
pub fn ext_quiver(h: &HopfAlgebraData) -> Quiver {
    let prim = primitive_orthogonal_idempotents(h).elements;
    let jbase = radical_basis(h);
    let mut jsq: Vec<Element> = Vec::new();
    for a in &jbase {
        for b in &jbase {
            jsq.push(h.mul(a, b));
        }
    }
    let jsq = span_basis(&jsq, h.dim);

    let compressed_dim = |ei: &Element, ej: &Element, span: &[Element]| -> usize {
        let vecs: Vec<Element> = span.iter().map(|w| h.mul(&h.mul(ej, w), ei)).collect();
        columns_matrix(&vecs, h.dim).rank()
    };
    let ambient: Vec<Element> = (0..h.dim).map(|i| h.basis_elem(i)).collect();

    // eᵢ ~ eⱼ iff the compressed semisimple part eᵢ(A/J)eⱼ is nonzero
    let n = prim.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        class_of[i] = c;
        let mut members = vec![i];
        for j in i + 1..n {
            if class_of[j] == usize::MAX
                && compressed_dim(&prim[i], &prim[j], &ambient)
                    > compressed_dim(&prim[i], &prim[j], &jbase)
            {
                class_of[j] = c;
                members.push(j);
            }
        }
        classes.push(members);
    }

    let reps: Vec<&Element> = classes.iter().map(|m| &prim[m[0]]).collect();
    let k = classes.len();
    let arrows = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    compressed_dim(reps[i], reps[j], &jbase)
                        - compressed_dim(reps[i], reps[j], &jsq)
                })
                .collect()
        })
        .collect();
    Quiver {
        vertices: k,
        arrows,
        vertex_classes: classes,
    }
}

/// Canonical primitive orthogonal idempotent systems from the group-like
/// span: eᵢ = ¼(1 ± g ± h ± gh) for the pointed 16-dimensional algebras,
/// plus the xy-corrected six-element system for the double.
pub fn canonical_idempotents(h: &HopfAlgebraData) -> IdempotentSystem {
    let idx = |l: &str| {
        h.basis_labels
            .iter()
            .position(|x| x == l)
            .unwrap_or_else(|| panic!("no basis monomial {l}"))
    };
    let quarter = Scalar::fraction(1, 4);
    let group_idem = |s1: i64, s2: i64| -> Element {
        let mut v = h.zero_elem();
        v[idx("1")] = quarter.clone();
        v[idx("g")] = &quarter * &Scalar::from_int(s1);
        v[idx("h")] = &quarter * &Scalar::from_int(s2);
        v[idx("gh")] = &quarter * &Scalar::from_int(s1 * s2);
        v
    };
    match h.name.as_str() {
        "mabar" | "HH" => IdempotentSystem {
            elements: vec![
                group_idem(1, 1),
                group_idem(1, -1),
                group_idem(-1, 1),
                group_idem(-1, -1),
            ],
        },
        "DH4" => {
            let e1 = group_idem(1, 1);
            let e2 = group_idem(-1, -1);
            // eᵢ = ⅛·xy·(1+g−h−gh) and its complement ⅛·(2−xy)·(1+g−h−gh),
            // then the same pair with g and h swapped in sign
            let mut xy = h.zero_elem();
            xy[idx("xy")] = Scalar::one();
            let mut two_minus_xy = h.zero_elem();
            two_minus_xy[idx("1")] = Scalar::from_int(2);
            two_minus_xy[idx("xy")] = -Scalar::one();
            // ⅛·w·(1±g∓h−gh) = ½·w·(¼(1±g∓h−gh))
            let half = Scalar::fraction(1, 2);
            let q_plus = group_idem(1, -1);
            let q_minus = group_idem(-1, 1);
            let e3 = elem_scale(&h.mul(&xy, &q_plus), &half);
            let e4 = elem_scale(&h.mul(&two_minus_xy, &q_plus), &half);
            let e5 = elem_scale(&h.mul(&xy, &q_minus), &half);
            let e6 = elem_scale(&h.mul(&two_minus_xy, &q_minus), &half);
            IdempotentSystem {
                elements: vec![e1, e2, e3, e4, e5, e6],
            }
        }
        other => panic!("no canonical idempotent system for {other}"),
    }
}

/// The two central idempotents ½(1±gh) spanning the block decomposition of
/// the 2-rank Taft algebra; complete and orthogonal but not primitive.
pub fn group_block_pair(h: &HopfAlgebraData) -> IdempotentSystem {
    let idx = |l: &str| h.basis_labels.iter().position(|x| x == l).unwrap();
    let half = Scalar::fraction(1, 2);
    let mut f1 = h.zero_elem();
    f1[idx("1")] = half.clone();
    f1[idx("gh")] = half.clone();
    let mut f2 = h.zero_elem();
    f2[idx("1")] = half.clone();
    f2[idx("gh")] = -half;
    IdempotentSystem {
        elements: vec![f1, f2],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_algebra, z2_group_algebra};

    #[test]
    fn canonical_systems_verify() {
        for name in ["mabar", "DH4", "HH"] {
            let h = build_algebra(name).unwrap();
            let sys = canonical_idempotents(&h);
            let rep = verify_idempotent_system(&h, &sys, true);
            assert!(rep.all_pass(), "{name}: {:?}", rep.failures);
        }
    }

    #[test]
    fn block_pair_not_primitive() {
        let h = build_algebra("mabar").unwrap();
        let sys = group_block_pair(&h);
        let rep = verify_idempotent_system(&h, &sys, true);
        assert!(rep.idempotent && rep.orthogonal && rep.complete);
        assert_eq!(rep.primitive, Some(vec![false, false]));
    }

    #[test]
    fn block_counts() {
        for (name, blocks) in [("mabar", 2), ("DH4", 3), ("HH", 1)] {
            let h = build_algebra(name).unwrap();
            let sys = central_idempotents(&h);
            assert_eq!(sys.elements.len(), blocks, "{name}");
            let rep = verify_idempotent_system(&h, &sys, false);
            assert!(rep.all_pass(), "{name}: {:?}", rep.failures);
        }
        let kz2 = z2_group_algebra();
        assert_eq!(central_idempotents(&kz2).elements.len(), 2);
    }

    #[test]
    fn radical_dimensions() {
        assert_eq!(radical_basis(&build_algebra("mabar").unwrap()).len(), 12);
        assert_eq!(radical_basis(&build_algebra("HH").unwrap()).len(), 12);
        assert_eq!(radical_basis(&build_algebra("DH4").unwrap()).len(), 6);
        assert_eq!(radical_basis(&z2_group_algebra()).len(), 0);
    }

    /// Sorted multiset of (out-profile, in-profile) pairs, for comparing
    /// quivers up to vertex relabeling.
    fn profile(q: &Quiver) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        for i in 0..q.vertices {
            let mut o: Vec<usize> = q.arrows[i].clone();
            o.sort();
            let mut inc: Vec<usize> = (0..q.vertices).map(|j| q.arrows[j][i]).collect();
            inc.sort();
            out.push((o, inc));
        }
        out.sort();
        out
    }

    #[test]
    fn quiver_shapes() {
        // two doubled 2-cycles
        let q = ext_quiver(&build_algebra("mabar").unwrap());
        assert_eq!(q.vertices, 4);
        let expect: Vec<(Vec<usize>, Vec<usize>)> =
            vec![(vec![0, 0, 0, 2], vec![0, 0, 0, 2]); 4];
        assert_eq!(profile(&q), expect);
        for i in 0..4 {
            assert_eq!(q.arrows[i][i], 0);
            for j in 0..4 {
                assert_eq!(q.arrows[i][j], q.arrows[j][i], "symmetric");
            }
        }

        // square with one arrow along each directed edge
        let q = ext_quiver(&build_algebra("HH").unwrap());
        assert_eq!(q.vertices, 4);
        let expect: Vec<(Vec<usize>, Vec<usize>)> =
            vec![(vec![0, 0, 1, 1], vec![0, 0, 1, 1]); 4];
        assert_eq!(profile(&q), expect);

        // one doubled 2-cycle plus two isolated (simple projective) vertices
        let q = ext_quiver(&build_algebra("DH4").unwrap());
        assert_eq!(q.vertices, 4);
        let mut prof = profile(&q);
        prof.sort();
        assert_eq!(
            prof,
            vec![
                (vec![0, 0, 0, 0], vec![0, 0, 0, 0]),
                (vec![0, 0, 0, 0], vec![0, 0, 0, 0]),
                (vec![0, 0, 0, 2], vec![0, 0, 0, 2]),
                (vec![0, 0, 0, 2], vec![0, 0, 0, 2]),
            ]
        );
        // the two nontrivial classes are singletons, the isolated ones pair up
        let mut sizes: Vec<usize> = q.vertex_classes.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2]);

        // semisimple control: no arrows at all
        let q = ext_quiver(&z2_group_algebra());
        assert_eq!(q.vertices, 2);
        assert!(q.arrows.iter().all(|r| r.iter().all(|&a| a == 0)));
    }
}
