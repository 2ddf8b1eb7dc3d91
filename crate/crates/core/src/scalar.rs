//! Exact scalars: arbitrary-precision rationals, elements `a + b*sqrt(d)` of a
//! quadratic extension, and prime-field values.
//!
//! Canonical form invariants, enforced by every constructor and operation:
//!
//! * the unique representation of zero is `Rational(0)`;
//! * `Quadratic { a, b, d }` always has `b != 0` and `d` a squarefree integer
//!   other than 0 and 1 (negative `d` is allowed);
//! * `Mod { value, modulus }` always has `0 < value < modulus`.
//!
//! Rationals embed canonically into every quadratic extension, and integers
//! embed into every prime field, so such mixed operations promote silently.
//! Any other mode mixing (two different `d`, two different moduli, a
//! non-integer rational against `F_p`, a quadratic against `F_p`) is a
//! programming error and panics; the document layer rejects mixed-mode input
//! before arithmetic can see it.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Field mode of a computation, as declared by a document or an enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldMode {
    Rational,
    /// `Q(sqrt(d))` for a fixed squarefree `d`.
    Quadratic(i64),
    /// Integers modulo a prime `p`.
    Mod(u64),
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rational => write!(f, "rational"),
            FieldMode::Quadratic(d) => write!(f, "quadratic(sqrt({d}))"),
            FieldMode::Mod(p) => write!(f, "mod {p}"),
        }
    }
}

/// An exact scalar.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Quadratic {
        a: BigRational,
        b: BigRational,
        d: i64,
    },
    Mod {
        value: u64,
        modulus: u64,
    },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from(BigInt::from(n)))
    }

    /// Rational `n/d`. Panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rational(r)
    }

    /// `a + b*sqrt(d)` with `d` an arbitrary integer; the result is put into
    /// canonical form (square part of `d` folded into `b`, rational collapse
    /// when `b = 0` or `d` is a perfect square).
    pub fn quadratic(a: BigRational, b: BigRational, d: i64) -> Self {
        if b.is_zero() || d == 0 {
            return Scalar::Rational(a);
        }
        let (s, d0) = squarefree_decompose(d);
        if d0 == 1 {
            return Scalar::Rational(a + b * BigRational::from(BigInt::from(s)));
        }
        Scalar::Quadratic {
            a,
            b: b * BigRational::from(BigInt::from(s)),
            d: d0,
        }
    }

    /// Convenience for small quadratic literals: `a + b*sqrt(d)` with rational
    /// parts given as `(num, den)` pairs.
    pub fn quad(a: (i64, i64), b: (i64, i64), d: i64) -> Self {
        Scalar::quadratic(
            BigRational::new(BigInt::from(a.0), BigInt::from(a.1)),
            BigRational::new(BigInt::from(b.0), BigInt::from(b.1)),
            d,
        )
    }

    /// Residue `value mod modulus`; zero collapses to the canonical zero.
    pub fn mod_p(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let m = modulus as i64;
        let v = value.rem_euclid(m) as u64;
        if v == 0 {
            Scalar::zero()
        } else {
            Scalar::Mod { value: v, modulus }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Quadratic { .. } => false,
        }
    }

    /// Mode of this scalar viewed as a field element. Zero is mode-neutral
    /// and reports `Rational`.
    pub fn mode(&self) -> FieldMode {
        match self {
            Scalar::Rational(_) => FieldMode::Rational,
            Scalar::Quadratic { d, .. } => FieldMode::Quadratic(*d),
            Scalar::Mod { modulus, .. } => FieldMode::Mod(*modulus),
        }
    }

    /// The rational value, when this scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Integer value, when this scalar is an integer rational.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(r) if r.denom().is_one() => Some(r.numer().clone()),
            _ => None,
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quadratic { a, b, d } => Scalar::Quadratic {
                a: -a,
                b: -b,
                d: *d,
            },
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: modulus - value,
                modulus: *modulus,
            },
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (
                Scalar::Quadratic { a, b, d },
                Scalar::Quadratic {
                    a: a2,
                    b: b2,
                    d: d2,
                },
            ) => {
                assert_eq!(
                    d, d2,
                    "cannot mix quadratic extensions sqrt({d}) and sqrt({d2})"
                );
                Scalar::quadratic(a + a2, b + b2, *d)
            }
            (Scalar::Rational(x), Scalar::Quadratic { a, b, d })
            | (Scalar::Quadratic { a, b, d }, Scalar::Rational(x)) => {
                Scalar::quadratic(a + x, b.clone(), *d)
            }
            (
                Scalar::Mod { value, modulus },
                Scalar::Mod {
                    value: v2,
                    modulus: m2,
                },
            ) => {
                assert_eq!(modulus, m2, "cannot mix moduli {modulus} and {m2}");
                Scalar::mod_p((value + v2) as i64, *modulus)
            }
            (Scalar::Rational(x), Scalar::Mod { value, modulus })
            | (Scalar::Mod { value, modulus }, Scalar::Rational(x)) => {
                let n = integer_mod(x, *modulus);
                Scalar::mod_p((n + value) as i64, *modulus)
            }
            _ => panic!(
                "cannot mix scalar modes {} and {}",
                self.mode(),
                other.mode()
            ),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (
                Scalar::Quadratic { a, b, d },
                Scalar::Quadratic {
                    a: a2,
                    b: b2,
                    d: d2,
                },
            ) => {
                assert_eq!(
                    d, d2,
                    "cannot mix quadratic extensions sqrt({d}) and sqrt({d2})"
                );
                let dd = BigRational::from(BigInt::from(*d));
                Scalar::quadratic(a * a2 + b * b2 * dd, a * b2 + a2 * b, *d)
            }
            (Scalar::Rational(x), Scalar::Quadratic { a, b, d })
            | (Scalar::Quadratic { a, b, d }, Scalar::Rational(x)) => {
                Scalar::quadratic(a * x, b * x, *d)
            }
            (
                Scalar::Mod { value, modulus },
                Scalar::Mod {
                    value: v2,
                    modulus: m2,
                },
            ) => {
                assert_eq!(modulus, m2, "cannot mix moduli {modulus} and {m2}");
                Scalar::mod_p(((value * v2) % modulus) as i64, *modulus)
            }
            (Scalar::Rational(x), Scalar::Mod { value, modulus })
            | (Scalar::Mod { value, modulus }, Scalar::Rational(x)) => {
                let n = integer_mod(x, *modulus);
                Scalar::mod_p(((n * value) % modulus) as i64, *modulus)
            }
            _ => panic!(
                "cannot mix scalar modes {} and {}",
                self.mode(),
                other.mode()
            ),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rational(r.recip())
            }
            Scalar::Quadratic { a, b, d } => {
                let dd = BigRational::from(BigInt::from(*d));
                let norm = a * a - b * b * dd;
                assert!(!norm.is_zero(), "division by zero in quadratic extension");
                Scalar::quadratic(a / &norm, -(b / &norm), *d)
            }
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            assert!(!other.is_zero(), "division by zero");
            return Scalar::zero();
        }
        self.mul(&other.inv())
    }

    /// Exact square root inside the scalar domain.
    ///
    /// A rational always has a square root in some `Q(sqrt(d))`; a quadratic
    /// element has one in its own extension only when the norm condition
    /// holds, otherwise `None` (the root would have algebraic degree 4).
    /// `F_p` values are searched exhaustively.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        match self {
            Scalar::Rational(r) => Some(sqrt_rational(r)),
            Scalar::Quadratic { a, b, d } => sqrt_quadratic(a, b, *d),
            Scalar::Mod { value, modulus } => {
                let p = *modulus;
                (1..p).find(|s| (s * s) % p == *value).map(|s| Scalar::Mod {
                    value: s,
                    modulus: p,
                })
            }
        }
    }

    /// Canonical string form: `p/q` (or bare integer), `a+b*sqrt(d)`, or a
    /// plain residue. This is the wire format.
    pub fn canonical_string(&self) -> String {
        format!("{self}")
    }

    /// Parse a scalar string in the given field mode.
    ///
    /// Returns the scalar and whether the input was already canonical;
    /// non-canonical input (such as `2/4`) is normalized.
    pub fn parse(text: &str, mode: FieldMode) -> Result<(Scalar, bool)> {
        let t = text.trim();
        let value = match mode {
            FieldMode::Rational => Scalar::Rational(parse_rational(t)?),
            FieldMode::Quadratic(d) => parse_quadratic(t, d)?,
            FieldMode::Mod(p) => {
                let n: i64 = t
                    .parse()
                    .map_err(|_| Error::ScalarParse(format!("`{t}` is not an integer mod {p}")))?;
                Scalar::mod_p(n, p)
            }
        };
        let canonical = value.canonical_string() == t;
        Ok((value, canonical))
    }
}

/// Structural total order on canonical forms; used only to make sorted output
/// deterministic, not as a numeric comparison across modes.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(s: &Scalar) -> u8 {
            match s {
                Scalar::Rational(_) => 0,
                Scalar::Quadratic { .. } => 1,
                Scalar::Mod { .. } => 2,
            }
        }
        match (self, other) {
            (Scalar::Rational(x), Scalar::Rational(y)) => x.cmp(y),
            (
                Scalar::Quadratic { a, b, d },
                Scalar::Quadratic {
                    a: a2,
                    b: b2,
                    d: d2,
                },
            ) => (d, a, b).cmp(&(d2, a2, b2)),
            (
                Scalar::Mod { value, modulus },
                Scalar::Mod {
                    value: v2,
                    modulus: m2,
                },
            ) => (modulus, value).cmp(&(m2, v2)),
            _ => rank(self).cmp(&rank(other)),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Quadratic { a, b, d } => {
                let rat = |r: &BigRational| {
                    if r.denom().is_one() {
                        format!("{}", r.numer())
                    } else {
                        format!("{}/{}", r.numer(), r.denom())
                    }
                };
                if b.is_negative() {
                    write!(f, "{}-{}*sqrt({})", rat(a), rat(&-b), d)
                } else {
                    write!(f, "{}+{}*sqrt({})", rat(a), rat(b), d)
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::ScalarParse(format!("`{t}` is not a rational"));
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::ScalarParse(format!("`{t}` has zero denominator")));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(BigRational::from(n))
    }
}

/// Accepts `a`, `a+b*sqrt(d)`, `a-b*sqrt(d)`, `b*sqrt(d)`, `sqrt(d)`,
/// `-sqrt(d)`; `d` must match the document's extension.
fn parse_quadratic(t: &str, d_mode: i64) -> Result<Scalar> {
    let bad = |m: &str| Error::ScalarParse(format!("`{t}`: {m}"));
    if let Some(idx) = t.find("sqrt(") {
        let close = t[idx..].find(')').ok_or_else(|| bad("missing `)`"))? + idx;
        let d: i64 = t[idx + 5..close]
            .trim()
            .parse()
            .map_err(|_| bad("bad radicand"))?;
        let (s_canon, _) = squarefree_decompose_checked(d)?;
        let (mode_canon, _) = squarefree_decompose_checked(d_mode)?;
        let _ = s_canon;
        if squarefree_decompose(d).1 != squarefree_decompose(d_mode).1 {
            return Err(bad(&format!(
                "radicand {d} does not match field sqrt({d_mode})"
            )));
        }
        let _ = mode_canon;
        // split off the coefficient of sqrt: everything before `sqrt(`,
        // dropping a trailing `*`.
        let head = &t[..idx];
        let (a_part, b_sign, b_part) = split_quadratic_head(head)?;
        let a = if a_part.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(a_part)?
        };
        let b_txt = b_part.trim();
        let mut b = if b_txt.is_empty() {
            BigRational::one()
        } else {
            parse_rational(b_txt)?
        };
        if b_sign < 0 {
            b = -b;
        }
        Ok(Scalar::quadratic(a, b, d))
    } else {
        Ok(Scalar::Rational(parse_rational(t)?))
    }
}

/// Splits `<a><sign><b>*` into the rational part, the sign of the sqrt
/// coefficient and its magnitude text.
fn split_quadratic_head(head: &str) -> Result<(&str, i32, &str)> {
    let head = head.strip_suffix('*').unwrap_or(head);
    // find the +/- separating a from b (not the leading sign of a)
    let bytes = head.as_bytes();
    let mut split = None;
    for i in (1..head.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-')
            && bytes[i - 1] != b'+'
            && bytes[i - 1] != b'-'
            && bytes[i - 1] != b'/'
        {
            split = Some(i);
            break;
        }
    }
    match split {
        Some(i) => {
            let sign = if bytes[i] == b'-' { -1 } else { 1 };
            Ok((&head[..i], sign, &head[i + 1..]))
        }
        None => {
            let t = head.trim();
            if let Some(rest) = t.strip_prefix('-') {
                Ok(("", -1, rest))
            } else {
                Ok(("", 1, t))
            }
        }
    }
}

fn squarefree_decompose_checked(d: i64) -> Result<(i64, i64)> {
    if d == 0 {
        return Err(Error::ScalarParse(
            "sqrt(0) is not a field extension".into(),
        ));
    }
    Ok(squarefree_decompose(d))
}

/// `d = s^2 * d0` with `d0` squarefree (sign kept on `d0`). Returns `(s, d0)`.
pub fn squarefree_decompose(d: i64) -> (i64, i64) {
    if d == 0 {
        return (0, 0);
    }
    let sign = d.signum();
    let mut n = d.abs();
    let mut s = 1i64;
    let mut f = 2i64;
    while f * f <= n {
        while n % (f * f) == 0 {
            n /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, sign * n)
}

fn squarefree_decompose_big(n: &BigInt) -> (BigInt, BigInt) {
    // Trial division; inputs here come from small structure constants.
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut s = BigInt::one();
    let mut f = BigInt::from(2);
    loop {
        let f2 = &f * &f;
        if f2 > m {
            break;
        }
        while (&m % &f2).is_zero() {
            m /= &f2;
            s *= &f;
        }
        f += 1;
    }
    (s, m * BigInt::from(sign))
}

/// Exact square root of a rational inside the domain `union of Q(sqrt(d))`.
pub fn sqrt_rational(r: &BigRational) -> Scalar {
    if r.is_zero() {
        return Scalar::zero();
    }
    // sqrt(p/q) = sqrt(p*q) / q
    let pq = r.numer() * r.denom();
    let (s, d0) = squarefree_decompose_big(&pq);
    let coeff = BigRational::new(s, r.denom().clone());
    if d0.is_one() {
        Scalar::Rational(coeff)
    } else {
        let d: i64 = (&d0)
            .try_into()
            .expect("radicand exceeds supported extension size");
        Scalar::quadratic(BigRational::zero(), coeff, d)
    }
}

/// Square root of a rational when it is a perfect square.
fn rational_exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    match sqrt_rational(r) {
        Scalar::Rational(s) => Some(s),
        _ => None,
    }
}

/// Square root of `u + v*sqrt(d)` (with `v != 0`) inside `Q(sqrt(d))`, if any.
fn sqrt_quadratic(u: &BigRational, v: &BigRational, d: i64) -> Option<Scalar> {
    // (s + t*sqrt(d))^2 = s^2 + t^2 d + 2st sqrt(d)
    // requires norm u^2 - d v^2 to be a rational square m^2 and then
    // s^2 = (u +- m)/2 a rational square with t = v / (2s).
    let dd = BigRational::from(BigInt::from(d));
    let norm = u * u - &dd * v * v;
    let m = rational_exact_sqrt(&norm)?;
    let two = BigRational::from(BigInt::from(2));
    for cand in [(u + &m) / &two, (u - &m) / &two] {
        if let Some(s) = rational_exact_sqrt(&cand) {
            if s.is_zero() {
                continue;
            }
            let t = v / (&two * &s);
            // verify, then return
            if &s * &s + &dd * &t * &t == *u && two.clone() * &s * &t == *v {
                return Some(Scalar::quadratic(s, t, d));
            }
        }
    }
    None
}

fn integer_mod(x: &BigRational, p: u64) -> u64 {
    assert!(
        x.denom().is_one(),
        "cannot mix the rational {x} with values mod {p}"
    );
    let m = BigInt::from(p);
    let r = x.numer().mod_floor(&m);
    let v: u64 = r.try_into().expect("residue fits in u64");
    v
}

fn mod_inverse(v: u64, p: u64) -> u64 {
    // extended Euclid; p is prime and v is nonzero mod p
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, v as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{v} is not invertible mod {p}");
    t.rem_euclid(p as i64) as u64
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= p {
        if p.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$imp(self, rhs)
            }
        }
        impl std::ops::$trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$imp(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$imp(&self, rhs)
            }
        }
    };
}

scalar_binop!(Add, add, add);
scalar_binop!(Sub, sub, sub);
scalar_binop!(Mul, mul, mul);
scalar_binop!(Div, div, div);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}
