//! Structure-constant Hopf algebras and the full axiom checker.
//!
//! An algebra is stored by its multiplication tensor, comultiplication
//! tensor, counit vector and antipode matrix over a fixed monomial basis.
//! Elements are plain coefficient vectors over that basis.

use exact_linalg::{Matrix, Scalar};
use serde::Serialize;

pub type Element = Vec<Scalar>;

#[derive(Clone, Serialize)]
pub struct HopfAlgebraData {
    pub name: String,
    pub dim: usize,
    /// Monomial labels, `"1"` for the unit monomial.
    pub basis_labels: Vec<String>,
    /// Generator name → element of this algebra.
    pub generators: Vec<(String, Element)>,
    /// mult[i][j] = coefficient vector of bᵢ·bⱼ.
    pub mult: Vec<Vec<Element>>,
    pub unit: Element,
    /// comult[k][(i,j)] = coefficient of bᵢ⊗bⱼ in Δ(bₖ).
    pub comult: Vec<Matrix>,
    pub counit: Vec<Scalar>,
    /// Column j is S(bⱼ).
    pub antipode: Matrix,
}

impl HopfAlgebraData {
    pub fn zero_elem(&self) -> Element {
        vec![Scalar::zero(); self.dim]
    }

    pub fn basis_elem(&self, i: usize) -> Element {
        let mut v = self.zero_elem();
        v[i] = Scalar::one();
        v
    }

    pub fn generator(&self, name: &str) -> Option<&Element> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Element {
        let mut out = self.zero_elem();
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca * cb;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &c * m;
                    }
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[&[Scalar]]) -> Element {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Δ of an element, as a dim×dim coefficient matrix.
    pub fn comult_elem(&self, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = &self.comult[k];
            for i in 0..self.dim {
                for j in 0..self.dim {
                    if !d[(i, j)].is_zero() {
                        out[(i, j)] += c * &d[(i, j)];
                    }
                }
            }
        }
        out
    }

    pub fn counit_elem(&self, a: &[Scalar]) -> Scalar {
        a.iter()
            .zip(&self.counit)
            .map(|(c, e)| c * e)
            .sum()
    }

    pub fn antipode_elem(&self, a: &[Scalar]) -> Element {
        self.antipode.apply(a)
    }

    /// Δ²(bₖ) = (Δ⊗id)Δ(bₖ), as sparse (i, j, l, coeff) terms.
    pub fn comult2(&self, k: usize) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        let d = &self.comult[k];
        for m in 0..self.dim {
            for l in 0..self.dim {
                let c = &d[(m, l)];
                if c.is_zero() {
                    continue;
                }
                let dm = &self.comult[m];
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        if !dm[(i, j)].is_zero() {
                            out.push((i, j, l, c * &dm[(i, j)]));
                        }
                    }
                }
            }
        }
        out
    }

    /// Left-multiplication matrix of an element on the regular representation.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Element> = (0..self.dim)
            .map(|j| self.mul(a, &self.basis_elem(j)))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }

    pub fn right_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Element> = (0..self.dim)
            .map(|j| self.mul(&self.basis_elem(j), a))
            .collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| cols[j][i].clone())
    }

    /// Multiplication in A⊗A of two coefficient matrices.
    pub fn tensor_square_mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for i1 in 0..self.dim {
            for j1 in 0..self.dim {
                let ca = &a[(i1, j1)];
                if ca.is_zero() {
                    continue;
                }
                for i2 in 0..self.dim {
                    for j2 in 0..self.dim {
                        let cb = &b[(i2, j2)];
                        if cb.is_zero() {
                            continue;
                        }
                        let c = ca * cb;
                        let left = &self.mult[i1][i2];
                        let right = &self.mult[j1][j2];
                        for (k, lk) in left.iter().enumerate() {
                            if lk.is_zero() {
                                continue;
                            }
                            for (l, rl) in right.iter().enumerate() {
                                if !rl.is_zero() {
                                    out[(k, l)] += &(&c * lk) * rl;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn check_hopf_axioms(&self) -> AxiomReport {
        let mut rep = AxiomReport::default();
        let n = self.dim;

        // two-sided unit
        rep.unit = (0..n).all(|i| {
            let b = self.basis_elem(i);
            self.mul(&self.unit, &b) == b && self.mul(&b, &self.unit) == b
        });
        if !rep.unit {
            rep.failures.push("unit is not two-sided identity".into());
        }

        // associativity on all basis triples
        rep.associativity = true;
        'assoc: for i in 0..n {
            for j in 0..n {
                let ij = self.mult[i][j].clone();
                for k in 0..n {
                    let bk = self.basis_elem(k);
                    let lhs = self.mul(&ij, &bk);
                    let rhs = self.mul(&self.basis_elem(i), &self.mult[j][k]);
                    if lhs != rhs {
                        rep.associativity = false;
                        rep.failures
                            .push(format!("associativity fails at basis triple ({i},{j},{k})"));
                        break 'assoc;
                    }
                }
            }
        }

        // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ on each basis element
        rep.coassociativity = (0..n).all(|k| {
            let lhs = self.comult2(k);
            let mut lhs_dense = vec![Scalar::zero(); n * n * n];
            for (i, j, l, c) in lhs {
                lhs_dense[(i * n + j) * n + l] += c;
            }
            let mut rhs_dense = vec![Scalar::zero(); n * n * n];
            let d = &self.comult[k];
            for i in 0..n {
                for m in 0..n {
                    let c = &d[(i, m)];
                    if c.is_zero() {
                        continue;
                    }
                    let dm = &self.comult[m];
                    for j in 0..n {
                        for l in 0..n {
                            if !dm[(j, l)].is_zero() {
                                rhs_dense[(i * n + j) * n + l] += c * &dm[(j, l)];
                            }
                        }
                    }
                }
            }
            lhs_dense == rhs_dense
        });
        if !rep.coassociativity {
            rep.failures.push("coassociativity fails".into());
        }

        // counit laws: (ε⊗id)Δ = id = (id⊗ε)Δ
        rep.counit = (0..n).all(|k| {
            let d = &self.comult[k];
            let mut left = self.zero_elem();
            let mut right = self.zero_elem();
            for i in 0..n {
                for j in 0..n {
                    let c = &d[(i, j)];
                    if c.is_zero() {
                        continue;
                    }
                    left[j] += c * &self.counit[i];
                    right[i] += c * &self.counit[j];
                }
            }
            left == self.basis_elem(k) && right == self.basis_elem(k)
        });
        if !rep.counit {
            rep.failures.push("counit laws fail".into());
        }

        // bialgebra: Δ, ε are algebra maps, Δ(1)=1⊗1, ε(1)=1
        let mut unit_comult = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                unit_comult[(i, j)] = &self.unit[i] * &self.unit[j];
            }
        }
        rep.bialgebra = self.comult_elem(&self.unit) == unit_comult
            && self.counit_elem(&self.unit).is_one();
        'bialg: for i in 0..n {
            if !rep.bialgebra {
                break;
            }
            let di = self.comult[i].clone();
            for j in 0..n {
                let prod = &self.mult[i][j];
                if self.comult_elem(prod) != self.tensor_square_mul(&di, &self.comult[j]) {
                    rep.bialgebra = false;
                    rep.failures
                        .push(format!("Δ not multiplicative at basis pair ({i},{j})"));
                    break 'bialg;
                }
                let eps_prod = self.counit_elem(prod);
                if eps_prod != &self.counit[i] * &self.counit[j] {
                    rep.bialgebra = false;
                    rep.failures
                        .push(format!("ε not multiplicative at basis pair ({i},{j})"));
                    break 'bialg;
                }
            }
        }

        // antipode: m(S⊗id)Δ = uε = m(id⊗S)Δ
        rep.antipode = (0..n).all(|k| {
            let d = &self.comult[k];
            let mut left = self.zero_elem();
            let mut right = self.zero_elem();
            for i in 0..n {
                for j in 0..n {
                    let c = &d[(i, j)];
                    if c.is_zero() {
                        continue;
                    }
                    let s_i = self.antipode_elem(&self.basis_elem(i));
                    let t = self.mul(&s_i, &self.basis_elem(j));
                    for (l, v) in t.iter().enumerate() {
                        left[l] += c * v;
                    }
                    let s_j = self.antipode_elem(&self.basis_elem(j));
                    let t = self.mul(&self.basis_elem(i), &s_j);
                    for (l, v) in t.iter().enumerate() {
                        right[l] += c * v;
                    }
                }
            }
            let target: Element = self
                .unit
                .iter()
                .map(|u| u * &self.counit[k])
                .collect();
            left == target && right == target
        });
        if !rep.antipode {
            rep.failures.push("antipode identities fail".into());
        }

        rep
    }

    /// Pretty element printer for diagnostics and text output.
    pub fn format_elem(&self, a: &[Scalar]) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let lbl = &self.basis_labels[i];
                if c.is_one() && lbl != "1" {
                    lbl.clone()
                } else if lbl == "1" {
                    format!("{c}")
                } else {
                    format!("{c}·{lbl}")
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub associativity: bool,
    pub unit: bool,
    pub coassociativity: bool,
    pub counit: bool,
    pub bialgebra: bool,
    pub antipode: bool,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.associativity
            && self.unit
            && self.coassociativity
            && self.counit
            && self.bialgebra
            && self.antipode
    }
}
