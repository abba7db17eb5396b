//! Univariate polynomials over exact rationals.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty coefficient list. Factorization goes exactly as far as the engine
//! needs: Yun's squarefree decomposition plus splitting off all rational
//! roots. No general irreducible factorization is attempted.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial t.
    pub fn t() -> Self {
        Polynomial::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// t − root.
    pub fn linear(root: &Scalar) -> Self {
        Polynomial::new(vec![-root, Scalar::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv();
        Polynomial::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluate at a square matrix (Horner on matrices).
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from_int(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Scalar::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::new(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, s: &Scalar) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: (quotient, remainder).
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len();
        if rem.len() < d {
            return (Polynomial::zero(), self.clone());
        }
        let lead_inv = divisor.leading().inv();
        let mut quot = vec![Scalar::zero(); rem.len() - d + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d - 1] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let sub = &q * c;
                rem[k + j] = rem[k + j].clone() - sub;
            }
            quot[k] = q;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) with u·self + v·other = g, g monic.
    pub fn xgcd(&self, other: &Polynomial) -> (Polynomial, Polynomial, Polynomial) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(), Polynomial::zero());
        let (mut t0, mut t1) = (Polynomial::zero(), Polynomial::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.add(&q.mul(&s1).scale(&-Scalar::one())));
            (t0, t1) = (t1.clone(), t0.add(&q.mul(&t1).scale(&-Scalar::one())));
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().inv();
        (
            r0.scale(&inv),
            s0.scale(&inv),
            t0.scale(&inv),
        )
    }

    /// All rational roots with multiplicity, via the rational root theorem on
    /// the integer-cleared polynomial.
    pub fn rational_roots(&self) -> Vec<(Scalar, usize)> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        // clear denominators
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut candidates: Vec<Scalar> = vec![Scalar::zero()];
        let lead = ints.last().unwrap().clone();
        if let Some(a0) = ints.iter().find(|c| !c.is_zero()) {
            for p in divisors(a0) {
                for q in divisors(&lead) {
                    for sign in [1i64, -1] {
                        candidates.push(Scalar::from_ratio(num_rational::BigRational::new(
                            &p * BigInt::from(sign),
                            q.clone(),
                        )));
                    }
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut out = Vec::new();
        let mut p = self.clone();
        for r in candidates {
            let mut mult = 0;
            while !p.is_zero() && p.eval(&r).is_zero() {
                p = p.div_rem(&Polynomial::linear(&r)).0;
                mult += 1;
            }
            if mult > 0 {
                out.push((r, mult));
            }
        }
        out
    }

    /// Squarefree decomposition (Yun) refined by splitting off every rational
    /// root as a linear factor. Returns pairwise-coprime squarefree factors
    /// with multiplicities; the product of factor^multiplicity recovers the
    /// input up to its leading coefficient.
    pub fn squarefree_split(&self) -> Vec<(Polynomial, usize)> {
        assert!(!self.is_zero(), "squarefree_split of zero polynomial");
        let mut out = Vec::new();
        for (sf, mult) in yun(&self.monic()) {
            // pull rational roots out of each squarefree part
            let mut rest = sf;
            for (root, _) in rest.clone().rational_roots() {
                out.push((Polynomial::linear(&root), mult));
                rest = rest.div_rem(&Polynomial::linear(&root)).0;
            }
            if rest.degree().is_some_and(|d| d > 0) {
                out.push((rest.monic(), mult));
            }
        }
        out
    }
}

/// Yun's algorithm on a monic polynomial: list of (squarefree factor, multiplicity).
fn yun(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let dp = p.derivative();
    let a = p.gcd(&dp);
    let mut b = p.div_rem(&a).0;
    let mut c = dp.div_rem(&a).0;
    let mut d = c.add(&b.derivative().scale(&-Scalar::one()));
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let f = b.gcd(&d);
        if f.degree().is_some_and(|deg| deg > 0) {
            out.push((f.clone(), i));
        }
        b = b.div_rem(&f).0;
        c = d.div_rem(&f).0;
        d = c.add(&b.derivative().scale(&-Scalar::one()));
        i += 1;
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    // trial division is fine: the coefficients in play are tiny
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

impl Matrix {
    /// Monic characteristic polynomial det(tI − m), by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> Polynomial {
        assert!(self.is_square(), "char_poly of non-square matrix");
        let n = self.rows();
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::identity(n);
        for k in 1..=n {
            let am = self * &m;
            let c = -(am.trace() / Scalar::from_int(k as i64));
            coeffs[n - k] = c.clone();
            m = &am + &Matrix::identity(n).scale(&c);
        }
        Polynomial::new(coeffs)
    }

    /// Monic minimal polynomial, found as the first linear dependence among
    /// I, m, m², … (viewed as vectors). Divides char_poly; much cheaper when
    /// the matrix has small degree, which is the common case for the
    /// endomorphisms the decomposer feeds in.
    pub fn min_poly(&self) -> Polynomial {
        assert!(self.is_square());
        let n = self.rows();
        let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(n).vectorize()];
        let mut cur = Matrix::identity(n);
        loop {
            cur = &cur * self;
            let cand = cur.vectorize();
            // solve: previous powers · x = cand
            let cols = Matrix::from_vec(powers.len(), n * n, powers.concat()).transpose();
            if let Some(x) = cols.solve(&Matrix::column(cand.clone())) {
                let mut coeffs: Vec<Scalar> = (0..powers.len()).map(|i| -x[(i, 0)].clone()).collect();
                coeffs.push(Scalar::one());
                return Polynomial::new(coeffs);
            }
            powers.push(cand);
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}·t"),
                _ => format!("{c}·t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            Matrix::identity(2).char_poly(),
            Polynomial::from_i64(&[1, -2, 1])
        );
        let shift = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(shift.char_poly(), Polynomial::from_i64(&[0, 0, 0, 1]));
        let d = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(d.char_poly(), Polynomial::from_i64(&[6, -5, 1]));
    }

    #[test]
    fn squarefree_examples() {
        let p = Polynomial::from_i64(&[-1, 0, 1]); // t² − 1
        let f = p.squarefree_split();
        assert_eq!(f.len(), 2);
        assert!(f.iter().all(|(_, m)| *m == 1));

        let t3 = Polynomial::from_i64(&[0, 0, 0, 1]);
        assert_eq!(t3.squarefree_split(), vec![(Polynomial::from_i64(&[0, 1]), 3)]);

        // (t−2)²(t+1)
        let p = Polynomial::linear(&Scalar::from_int(2))
            .mul(&Polynomial::linear(&Scalar::from_int(2)))
            .mul(&Polynomial::linear(&Scalar::from_int(-1)));
        let mut f = p.squarefree_split();
        f.sort_by_key(|(_, m)| *m);
        assert_eq!(
            f,
            vec![
                (Polynomial::linear(&Scalar::from_int(-1)), 1),
                (Polynomial::linear(&Scalar::from_int(2)), 2),
            ]
        );
    }

    #[test]
    fn factors_multiply_back() {
        let p = Polynomial::from_i64(&[2, -3, 0, 1]).mul(&Polynomial::from_i64(&[4, 4, 1]));
        let mut prod = Polynomial::one();
        for (f, m) in p.squarefree_split() {
            for _ in 0..m {
                prod = prod.mul(&f);
            }
        }
        assert_eq!(prod.monic(), p.monic());
    }

    #[test]
    fn min_poly_divides_char_poly() {
        let m = Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let mp = m.min_poly();
        assert_eq!(mp, Polynomial::from_i64(&[2, -3, 1]));
        assert!(m.char_poly().div_rem(&mp).1.is_zero());
    }

    #[test]
    fn xgcd_bezout() {
        let a = Polynomial::from_i64(&[-1, 1]); // t − 1
        let b = Polynomial::from_i64(&[1, 1]); // t + 1
        let (g, u, v) = a.xgcd(&b);
        assert_eq!(g, Polynomial::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Polynomial::one());
    }
}
