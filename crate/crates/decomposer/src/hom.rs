//! Intertwiner spaces between module representations, computed blockwise
//! over the joint (g,h)-eigenspaces: a module map commutes with the two
//! involutions, so it is block diagonal in the sign grading, and x and y
//! contribute one linear constraint per sign block.

use exact_linalg::{Matrix, Scalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rep_modules::ModuleRep;

pub const SIGN_ORDER: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

pub fn sign_index(s: (i8, i8)) -> usize {
    SIGN_ORDER.iter().position(|&t| t == s).unwrap()
}

/// How a generator moves the sign grading: over the two-generator Taft
/// algebra and the double, x and y anticommute with both involutions; over
/// the tensor square x anticommutes only with g and y only with h.
fn sign_action(algebra: &str, gen: &str, s: (i8, i8)) -> (i8, i8) {
    match (algebra, gen) {
        ("HH", "x") => (-s.0, s.1),
        ("HH", "y") => (s.0, -s.1),
        (_, "x") | (_, "y") => (-s.0, -s.1),
        _ => s,
    }
}

/// The four joint eigenspace bases of act(g), act(h), in `SIGN_ORDER`.
pub fn sign_spaces(m: &ModuleRep) -> [Matrix; 4] {
    let g = m.action("g");
    let h = m.action("h");
    let d = m.dim;
    SIGN_ORDER.map(|(s1, s2)| {
        let a = g - &Matrix::identity(d).scale(&Scalar::from_int(s1 as i64));
        let b = h - &Matrix::identity(d).scale(&Scalar::from_int(s2 as i64));
        a.vstack(&b).nullspace()
    })
}

pub fn sign_multiplicities(m: &ModuleRep) -> [usize; 4] {
    sign_spaces(m).map(|b| b.cols())
}

struct Graded {
    /// Columns of all four eigenspace bases side by side.
    basis: Matrix,
    inv: Matrix,
    sizes: [usize; 4],
    offsets: [usize; 4],
}

fn grade(m: &ModuleRep) -> Graded {
    let spaces = sign_spaces(m);
    let sizes = [0, 1, 2, 3].map(|i| spaces[i].cols());
    let mut offsets = [0usize; 4];
    for i in 1..4 {
        offsets[i] = offsets[i - 1] + sizes[i - 1];
    }
    let mut basis = Matrix::zeros(m.dim, 0);
    for s in &spaces {
        basis = basis.hstack(s);
    }
    assert_eq!(
        basis.cols(),
        m.dim,
        "g and h do not jointly diagonalize; not a module over this algebra"
    );
    let inv = basis.inverse().expect("eigenbasis is invertible");
    Graded {
        basis,
        inv,
        sizes,
        offsets,
    }
}

/// Generator action in the graded basis, as the 4×4 grid of sign blocks;
/// block[(to, from)] has size sizes[to] × sizes[from].
fn graded_blocks(m: &ModuleRep, g: &Graded, gen: &str) -> Vec<Matrix> {
    let a = &g.inv * &(m.action(gen) * &g.basis);
    let mut out = Vec::with_capacity(16);
    for to in 0..4 {
        for from in 0..4 {
            out.push(Matrix::from_fn(g.sizes[to], g.sizes[from], |i, j| {
                a[(g.offsets[to] + i, g.offsets[from] + j)].clone()
            }));
        }
    }
    out
}

/// Basis of the space of module maps m → n.
pub fn hom_basis(m: &ModuleRep, n: &ModuleRep) -> Vec<Matrix> {
    assert_eq!(m.algebra_name, n.algebra_name);
    let gm = grade(m);
    let gn = grade(n);

    // unknowns: one block φ_s : (m sign s) → (n sign s) per sign, row-major
    let mut unknown_offset = [0usize; 4];
    let mut total = 0usize;
    for s in 0..4 {
        unknown_offset[s] = total;
        total += gn.sizes[s] * gm.sizes[s];
    }
    if total == 0 {
        return Vec::new();
    }

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for gen in ["x", "y"] {
        let am = graded_blocks(m, &gm, gen);
        let an = graded_blocks(n, &gn, gen);
        for s in 0..4 {
            let t = sign_index(sign_action(&m.algebra_name, gen, SIGN_ORDER[s]));
            let xm = &am[t * 4 + s]; // m sign s → m sign t
            let xn = &an[t * 4 + s];
            // constraint: φ_t · xm = xn · φ_s, entrywise over (i, j)
            for i in 0..gn.sizes[t] {
                for j in 0..gm.sizes[s] {
                    let mut row = vec![Scalar::zero(); total];
                    for l in 0..gm.sizes[t] {
                        row[unknown_offset[t] + i * gm.sizes[t] + l] += xm[(l, j)].clone();
                    }
                    for l in 0..gn.sizes[s] {
                        row[unknown_offset[s] + l * gm.sizes[s] + j] -= xn[(i, l)].clone();
                    }
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(1, total)
    } else {
        Matrix::from_rows(rows)
    };
    let kernel = system.nullspace();

    (0..kernel.cols())
        .map(|k| {
            let mut blocked = Matrix::zeros(n.dim, m.dim);
            for s in 0..4 {
                for i in 0..gn.sizes[s] {
                    for j in 0..gm.sizes[s] {
                        blocked[(gn.offsets[s] + i, gm.offsets[s] + j)] =
                            kernel[(unknown_offset[s] + i * gm.sizes[s] + j, k)].clone();
                    }
                }
            }
            &gn.basis * &(&blocked * &gm.inv)
        })
        .collect()
}

/// Basis of the endomorphism algebra of m.
pub fn endomorphism_basis(m: &ModuleRep) -> Vec<Matrix> {
    hom_basis(m, m)
}

/// Deterministic stream of small integer coefficient vectors.
pub struct CoeffStream {
    rng: ChaCha8Rng,
}

impl CoeffStream {
    pub fn new(seed: u64) -> Self {
        CoeffStream {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn combo(&mut self, basis: &[Matrix]) -> Matrix {
        let mut out = Matrix::zeros(basis[0].rows(), basis[0].cols());
        for b in basis {
            let c = Scalar::from_int(self.rng.gen_range(-9..=9));
            out = &out + &b.scale(&c);
        }
        out
    }
}

/// True iff an invertible intertwiner m → n exists. The search tries the
/// hom-basis elements and then seeded random combinations; with a split
/// hom space an isomorphism, if one exists, is found with overwhelming
/// probability well within the retry budget.
pub fn iso_check(m: &ModuleRep, n: &ModuleRep, seed: u64) -> bool {
    if m.dim != n.dim || sign_multiplicities(m) != sign_multiplicities(n) {
        return false;
    }
    if m.dim == 0 {
        return true;
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return false;
    }
    for b in &basis {
        if b.is_invertible() {
            return true;
        }
    }
    let mut stream = CoeffStream::new(seed);
    for _ in 0..40 {
        if stream.combo(&basis).is_invertible() {
            return true;
        }
    }
    false
}
