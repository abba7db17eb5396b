//! The brute-force multiplication bridge: build the modules, tensor them,
//! decompose, and read the product off the summand multiset.

use crate::element::GreenElement;
use decomposer::Decomposer;
use exact_linalg::Scalar;
use hopf_core::HopfAlgebraData;
use rep_modules::{construct, tensor, IndecLabel};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

/// Tensor-and-decompose product engine with a memo keyed by the ordered
/// label pair (the Taft Green ring is noncommutative, so order matters).
pub struct BruteForce {
    pub algebra: Arc<HopfAlgebraData>,
    decomposer: Decomposer,
    cache: RefCell<HashMap<(IndecLabel, IndecLabel), GreenElement>>,
}

impl BruteForce {
    pub fn new(algebra: Arc<HopfAlgebraData>, seed: u64) -> Self {
        BruteForce {
            decomposer: Decomposer::new(Arc::clone(&algebra), seed),
            algebra,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn decomposer(&self) -> &Decomposer {
        &self.decomposer
    }

    /// [a]·[b] = [A ⊗ B], decomposed into canonical labels.
    pub fn multiply_labels(
        &self,
        a: &IndecLabel,
        b: &IndecLabel,
    ) -> Result<GreenElement, String> {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let ma = construct(&self.algebra, a)?;
        let mb = construct(&self.algebra, b)?;
        let t = tensor(&ma, &mb);
        // band parameters of possible summands: the factors' η's, possibly
        // negated by sign twists
        let mut hints: Vec<Scalar> = Vec::new();
        for l in [a, b] {
            if let Some(e) = &l.eta {
                hints.push(e.clone());
                hints.push(-e.clone());
            }
        }
        let dec = self.decomposer.decompose_with_hints(&t, &hints)?;
        let mut out = GreenElement::zero(&self.algebra.name);
        for (label, k) in dec.multiset() {
            out.add_term(&label, &Scalar::from_int(k as i64));
        }
        self.cache.borrow_mut().insert(key, out.clone());
        Ok(out)
    }

    /// Bilinear extension, preserving factor order.
    pub fn multiply(
        &self,
        a: &GreenElement,
        b: &GreenElement,
    ) -> Result<GreenElement, String> {
        if a.algebra != self.algebra.name || b.algebra != self.algebra.name {
            return Err("algebra mismatch".into());
        }
        let mut out = GreenElement::zero(&self.algebra.name);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let prod = self.multiply_labels(la, lb)?;
                out = out.add(&prod.scale(&(ca * cb)));
            }
        }
        Ok(out)
    }
}
