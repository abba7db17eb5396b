//! Elements of the Green ring: finite rational-coefficient combinations of
//! canonical indecomposable labels.

use exact_linalg::Scalar;
use rep_modules::IndecLabel;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A Green-ring element over one fixed algebra: a finite map from canonical
/// indecomposable labels to nonzero rational coefficients. Integer
/// coefficients describe genuine module classes; rational ones arise in the
/// idempotent calculus on the Green algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenElement {
    pub algebra: String,
    pub terms: BTreeMap<IndecLabel, Scalar>,
}

impl GreenElement {
    pub fn zero(algebra: &str) -> Self {
        GreenElement {
            algebra: algebra.into(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_label(algebra: &str, label: IndecLabel) -> Self {
        let mut e = Self::zero(algebra);
        e.add_term(&label, &Scalar::one());
        e
    }

    /// The class of the trivial module, the multiplicative unit.
    pub fn one(algebra: &str) -> Self {
        Self::from_label(algebra, IndecLabel::trivial())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, label: &IndecLabel, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(label.clone())
            .or_insert_with(Scalar::zero);
        *entry = entry.clone() + coeff.clone();
        if entry.is_zero() {
            self.terms.remove(label);
        }
    }

    pub fn add(&self, other: &GreenElement) -> GreenElement {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &GreenElement) -> GreenElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> GreenElement {
        let mut out = GreenElement::zero(&self.algebra);
        for (l, v) in &self.terms {
            out.add_term(l, &(v * c));
        }
        out
    }

    /// Total dimension of the virtual module, Σ coeff · dim(label). Both
    /// multiplication engines preserve it multiplicatively.
    pub fn dimension(&self) -> Scalar {
        let mut total = Scalar::zero();
        for (l, c) in &self.terms {
            total = total + c * &Scalar::from_int(l.dim(&self.algebra) as i64);
        }
        total
    }

    /// True when every coefficient is a nonnegative integer, i.e. the
    /// element is the class of an actual module.
    pub fn is_effective(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for GreenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                if c.is_one() {
                    l.to_string()
                } else {
                    format!("{c}·{l}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for GreenElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len() + 1))?;
        map.serialize_entry("algebra", &self.algebra)?;
        let terms: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(l, c)| (l.to_string(), c.to_string()))
            .collect();
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}
