//! Small univariate polynomial utilities over exact scalars.
//!
//! Coefficients are stored low-degree-first. Only what the idempotent solver
//! and the fingerprint machinery need: arithmetic, evaluation, gcd over a
//! field, rational-root extraction and factorization of polynomials of degree
//! at most four into domain-representable roots.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Dense univariate polynomial, low degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        let mut p = Poly(coeffs);
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.0.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.0.iter().map(|x| x.mul(c)).collect())
    }

    /// Euclidean division over a field: `self = q * div + r`.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let dd = div.degree().unwrap();
        let lead_inv = div.leading().unwrap().inv();
        let mut q = vec![Scalar::zero(); self.0.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - dd;
            q[shift] = c.clone();
            for k in 0..=dd {
                let t = rem.coeff(shift + k).sub(&div.coeff(k).mul(&c));
                rem.0[shift + k] = t;
            }
            rem.trim();
        }
        (Poly::new(q), rem)
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if let Some(l) = a.leading() {
            let inv = l.inv();
            a = a.scale(&inv);
        }
        a
    }

    /// All rational roots, with multiplicity removed (returned once each).
    /// Coefficients must be rational.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        let mut roots = Vec::new();
        if self.is_zero() {
            return roots;
        }
        // clear denominators to an integer polynomial
        let mut den = BigInt::one();
        for c in &self.0 {
            let r = c.as_rational().expect("rational coefficients required");
            den = num::integer::lcm(den, r.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| {
                let r = c.as_rational().unwrap();
                r.numer() * (&den / r.denom())
            })
            .collect();
        // strip powers of x
        let low = ints.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            roots.push(BigRational::zero());
        }
        let ints = &ints[low..];
        if ints.len() <= 1 {
            return roots;
        }
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1, -1] {
                    let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                    if self.eval(&Scalar::Rational(cand.clone())).is_zero()
                        && !roots.contains(&cand)
                    {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        // only relevant when the constant term vanished entirely; x | poly was
        // already stripped, so this cannot happen
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut f = BigInt::one();
    loop {
        let f2 = &f * &f;
        if &f2 > n {
            break;
        }
        if (n % &f).is_zero() {
            out.push(f.clone());
            let co = n / &f;
            if co != f {
                out.push(co);
            }
        }
        f += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    #[test]
    fn div_rem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[1, 1]));
        let g = a.gcd(&p(&[1, 1]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn rational_roots_of_quartic() {
        // (x - 1/2)(x + 2)(x^2 + 1) * 2
        let a = p(&[-1, 2]).mul(&p(&[2, 1])).mul(&p(&[1, 0, 1]));
        let roots = a.rational_roots();
        assert_eq!(
            roots,
            vec![
                num::rational::BigRational::from(num::bigint::BigInt::from(-2)),
                num::rational::BigRational::new(1.into(), 2.into()),
            ]
        );
    }
}
