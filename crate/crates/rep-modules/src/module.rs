//! Matrix representations of modules over the structure-constant algebras,
//! with validation, tensor products, and JSON/DOT export.

use exact_linalg::{Matrix, Scalar};
use hopf_core::HopfAlgebraData;
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone, Serialize)]
pub struct ModuleRep {
    #[serde(skip)]
    pub algebra: Arc<HopfAlgebraData>,
    pub algebra_name: String,
    pub dim: usize,
    /// One action matrix per algebra generator, in generator order.
    pub actions: Vec<(String, Matrix)>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ModuleReport {
    /// 1 acts as the identity.
    pub unit: bool,
    /// action(bᵢ)·action(bⱼ) = action(bᵢ·bⱼ) on every basis pair — this
    /// covers every defining relation of the algebra.
    pub structure: bool,
    pub failures: Vec<String>,
}

impl ModuleReport {
    pub fn all_pass(&self) -> bool {
        self.unit && self.structure
    }
}

impl ModuleRep {
    pub fn new(algebra: Arc<HopfAlgebraData>, actions: Vec<(String, Matrix)>) -> Self {
        let dim = actions
            .first()
            .map(|(_, m)| m.rows())
            .expect("module needs at least one generator action");
        ModuleRep {
            algebra_name: algebra.name.clone(),
            algebra,
            dim,
            actions,
        }
    }

    pub fn action(&self, name: &str) -> &Matrix {
        self.actions
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .unwrap_or_else(|| panic!("no action for generator {name}"))
    }

    /// Action of the basis monomial with the given index, as the product of
    /// the generator actions spelled by its label.
    pub fn action_of_basis(&self, idx: usize) -> Matrix {
        let label = &self.algebra.basis_labels[idx];
        let mut out = Matrix::identity(self.dim);
        if label == "1" {
            return out;
        }
        for ch in label.chars() {
            out = &out * self.action(&ch.to_string());
        }
        out
    }

    /// Action of an arbitrary algebra element.
    pub fn action_of_element(&self, v: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.action_of_basis(i).scale(c);
            }
        }
        out
    }

    /// Orbit of a vector under the algebra action; the module is cyclic on
    /// v iff this equals the full dimension.
    pub fn cyclic_span_dim(&self, v: &[Scalar]) -> usize {
        let cols: Vec<Vec<Scalar>> = (0..self.algebra.dim)
            .map(|i| self.action_of_basis(i).apply(v))
            .collect();
        Matrix::from_fn(self.dim, cols.len(), |r, c| cols[c][r].clone()).rank()
    }

    pub fn generated_by(&self, v: &[Scalar]) -> bool {
        self.cyclic_span_dim(v) == self.dim
    }
}

/// Full module-axiom check: the unit acts as the identity and the action is
/// compatible with every structure constant of the algebra.
pub fn validate_module(m: &ModuleRep) -> ModuleReport {
    let mut rep = ModuleReport {
        unit: true,
        structure: true,
        failures: Vec::new(),
    };
    let alg = &m.algebra;
    if m.action_of_element(&alg.unit) != Matrix::identity(m.dim) {
        rep.unit = false;
        rep.failures.push("unit does not act as identity".into());
    }
    let basis_actions: Vec<Matrix> = (0..alg.dim).map(|i| m.action_of_basis(i)).collect();
    'outer: for i in 0..alg.dim {
        for j in 0..alg.dim {
            let lhs = &basis_actions[i] * &basis_actions[j];
            let rhs = m.action_of_element(&alg.mult[i][j]);
            if lhs != rhs {
                rep.structure = false;
                rep.failures.push(format!(
                    "action incompatible with {}·{}",
                    alg.basis_labels[i], alg.basis_labels[j]
                ));
                break 'outer;
            }
        }
    }
    rep
}

/// Tensor product of modules over the same algebra; each generator acts
/// through the comultiplication, Σ G₍₁₎ ⊗ G₍₂₎.
pub fn tensor(m: &ModuleRep, n: &ModuleRep) -> ModuleRep {
    assert!(
        Arc::ptr_eq(&m.algebra, &n.algebra) || m.algebra.name == n.algebra.name,
        "tensor factors over different algebras"
    );
    let alg = &m.algebra;
    let dim = m.dim * n.dim;
    let actions = alg
        .generators
        .iter()
        .map(|(gname, gelem)| {
            let gidx = gelem
                .iter()
                .position(|c| c.is_one())
                .expect("generator is a basis monomial");
            let d = &alg.comult[gidx];
            let mut act = Matrix::zeros(dim, dim);
            for i in 0..alg.dim {
                for j in 0..alg.dim {
                    let c = &d[(i, j)];
                    if c.is_zero() {
                        continue;
                    }
                    let a = m.action_of_basis(i);
                    let b = n.action_of_basis(j);
                    act = &act + &a.kronecker(&b).scale(c);
                }
            }
            (gname.clone(), act)
        })
        .collect();
    ModuleRep::new(Arc::clone(&m.algebra), actions)
}

/// Direct sum of modules over the same algebra (block-diagonal actions).
pub fn direct_sum(m: &ModuleRep, n: &ModuleRep) -> ModuleRep {
    assert_eq!(m.algebra_name, n.algebra_name);
    let dim = m.dim + n.dim;
    let actions = m
        .actions
        .iter()
        .map(|(name, a)| {
            let b = n.action(name);
            let block = Matrix::from_fn(dim, dim, |i, j| {
                if i < m.dim && j < m.dim {
                    a[(i, j)].clone()
                } else if i >= m.dim && j >= m.dim {
                    b[(i - m.dim, j - m.dim)].clone()
                } else {
                    Scalar::zero()
                }
            });
            (name.clone(), block)
        })
        .collect();
    ModuleRep::new(Arc::clone(&m.algebra), actions)
}

/// DOT rendering of the module diagram: vertices are basis lines, solid
/// edges the x-action, dashed edges the y-action (a/b for the 4-dimensional
/// algebra), labeled with non-unit weights and (g,h) signs where diagonal.
pub fn to_dot(m: &ModuleRep, name: &str) -> String {
    let mut out = format!("digraph \"{name}\" {{\n");
    let diag_sign = |mat: &Matrix, i: usize| -> Option<char> {
        let d = &mat[(i, i)];
        if d.is_one() {
            Some('+')
        } else if (-d.clone()).is_one() {
            Some('-')
        } else {
            None
        }
    };
    let g = m.actions.iter().find(|(n, _)| n == "g").map(|(_, m)| m);
    let h = m.actions.iter().find(|(n, _)| n == "h").map(|(_, m)| m);
    for i in 0..m.dim {
        let signs = match (g.and_then(|g| diag_sign(g, i)), h.and_then(|h| diag_sign(h, i))) {
            (Some(a), Some(b)) => format!(" ({a},{b})"),
            _ => String::new(),
        };
        out.push_str(&format!("  v{i} [label=\"v{i}{signs}\"];\n"));
    }
    for (gen, style) in [("x", "solid"), ("y", "dashed"), ("a", "solid"), ("b", "dashed")] {
        let Some((_, mat)) = m.actions.iter().find(|(n, _)| n == gen) else {
            continue;
        };
        for j in 0..m.dim {
            for i in 0..m.dim {
                let c = &mat[(i, j)];
                if c.is_zero() {
                    continue;
                }
                let label = if c.is_one() {
                    String::new()
                } else {
                    format!(", label=\"{c}\"")
                };
                out.push_str(&format!("  v{j} -> v{i} [style={style}{label}];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}
