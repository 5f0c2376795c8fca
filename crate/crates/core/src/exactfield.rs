//! Exact coefficient fields: the rationals and the Eisenstein field `Q(w)`,
//! where `w` is a primitive cube root of unity (`w^2 + w + 1 = 0`).
//!
//! Both fields implement [`Field`], which is all the polynomial, linear
//! algebra and Groebner code ever asks of its coefficients.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The field contract shared by [`Rat`] and [`CycNum`].
pub trait Field:
    Clone + PartialEq + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    /// Image of a rational under the structure map `Q -> Self`.
    fn from_rat(r: &Rat) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&Rat::from(n))
    }

    fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// `self += a * b`, the inner loop of every elimination.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }
}

/// An arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64`, if it is an integer in range.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        Rat(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rat(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rat(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.0 += &a.0 * &b.0;
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let parse_int = |part: &str| -> Result<BigInt> {
            let part = part.trim();
            let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            part.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rat(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => Rat::new(parse_int(n)?, parse_int(d)?).map_err(|_| bad()),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `a + b*w` with `w^2 = -1 - w`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CycNum {
    pub a: Rat,
    pub b: Rat,
}

impl CycNum {
    pub fn new(a: Rat, b: Rat) -> Self {
        CycNum { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        CycNum::new(Rat::from(a), Rat::from(b))
    }

    /// The cube root of unity `w`.
    pub fn w() -> Self {
        CycNum::from_ints(0, 1)
    }

    /// `w^2 = -1 - w`.
    pub fn w2() -> Self {
        CycNum::from_ints(-1, -1)
    }

    /// The field norm `a^2 - ab + b^2`, i.e. `x * conj(x)`.
    pub fn norm(&self) -> Rat {
        self.a
            .mul(&self.a)
            .sub(&self.a.mul(&self.b))
            .add(&self.b.mul(&self.b))
    }

    /// Complex conjugation, `w -> w^2`: `a + b w -> (a - b) - b w`.
    pub fn conj(&self) -> Self {
        CycNum::new(self.a.sub(&self.b), self.b.neg())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }
}

impl From<Rat> for CycNum {
    fn from(a: Rat) -> Self {
        CycNum::new(a, Rat::zero())
    }
}

impl From<i64> for CycNum {
    fn from(n: i64) -> Self {
        CycNum::from_ints(n, 0)
    }
}

/// Exact product in `Q(w)`.
pub fn cyc_mul(x: &CycNum, y: &CycNum) -> CycNum {
    // (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2, with w^2 = -1 - w
    let ac = x.a.mul(&y.a);
    let bd = x.b.mul(&y.b);
    let ad_bc = x.a.mul(&y.b).add(&x.b.mul(&y.a));
    CycNum::new(ac.sub(&bd), ad_bc.sub(&bd))
}

/// Inverse via the conjugate: `x^-1 = conj(x) / norm(x)`.
pub fn cyc_inv(x: &CycNum) -> Result<CycNum> {
    let n = x.norm();
    if n.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n_inv = n.inv()?;
    let c = x.conj();
    Ok(CycNum::new(c.a.mul(&n_inv), c.b.mul(&n_inv)))
}

impl Field for CycNum {
    fn zero() -> Self {
        CycNum::default()
    }
    fn one() -> Self {
        CycNum::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        CycNum::new(self.a.add(&other.a), self.b.add(&other.b))
    }
    fn sub(&self, other: &Self) -> Self {
        CycNum::new(self.a.sub(&other.a), self.b.sub(&other.b))
    }
    fn mul(&self, other: &Self) -> Self {
        if other.b.is_zero() {
            return CycNum::new(self.a.mul(&other.a), self.b.mul(&other.a));
        }
        if self.b.is_zero() {
            return CycNum::new(other.a.mul(&self.a), other.b.mul(&self.a));
        }
        cyc_mul(self, other)
    }
    fn neg(&self) -> Self {
        CycNum::new(self.a.neg(), self.b.neg())
    }
    fn inv(&self) -> Result<Self> {
        cyc_inv(self)
    }
    fn from_rat(r: &Rat) -> Self {
        CycNum::from(r.clone())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w_term = |b: &Rat| -> String {
            if b.is_one() {
                "w".to_string()
            } else {
                format!("{b}*w")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) if self.b.numer().is_negative() => {
                write!(f, "-{}", w_term(&self.b.neg()))
            }
            (true, false) => write!(f, "{}", w_term(&self.b)),
            (false, false) if self.b.numer().is_negative() => {
                write!(f, "{} - {}", self.a, w_term(&self.b.neg()))
            }
            (false, false) => write!(f, "{} + {}", self.a, w_term(&self.b)),
        }
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycNum {
    type Err = Error;

    /// Accepts sums of terms `q`, `q*w`, `w` with `q` a rational literal,
    /// e.g. `"1/2 - 3*w"`, `"-w"`, `"7"`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic literal".into()));
        }
        let mut acc = CycNum::zero();
        for (negative, term) in split_signed_terms(&compact)? {
            let value = if let Some(coef) = term.strip_suffix("*w") {
                CycNum::new(Rat::zero(), coef.parse()?)
            } else if term == "w" {
                CycNum::w()
            } else {
                CycNum::from(term.parse::<Rat>()?)
            };
            acc = if negative {
                acc.sub(&value)
            } else {
                acc.add(&value)
            };
        }
        Ok(acc)
    }
}

/// Splits `"a-b+c"` into signed terms, keeping `/` inside rationals intact.
/// Signs directly following `(` are left alone; callers never pass parens here.
pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let bytes = s.as_bytes();
    let mut start = 0;
    let mut negative = false;
    if let Some(&c) = bytes.first() {
        if c == b'+' || c == b'-' {
            negative = c == b'-';
            start = 1;
        }
    }
    let mut depth = 0i32;
    let first = start;
    for i in first..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 && i > start && bytes[i - 1] != b'^' => {
                let term = &s[start..i];
                if term.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {s:?}")));
                }
                out.push((negative, term));
                negative = bytes[i] == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    let term = &s[start..];
    if term.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {s:?}")));
    }
    out.push((negative, term));
    Ok(out)
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_ops {
    ($ty:ty) => {
        impl std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                Field::add(&self, &rhs)
            }
        }
        impl std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                Field::sub(&self, &rhs)
            }
        }
        impl std::ops::Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                Field::mul(&self, &rhs)
            }
        }
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                Field::neg(&self)
            }
        }
    };
}

forward_ops!(Rat);
forward_ops!(CycNum);

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from(n)
}

/// Shorthand for `n / d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n, d).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(x: &CycNum) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = x.a.as_big().to_f64().unwrap();
        let b = x.b.as_big().to_f64().unwrap();
        // w = -1/2 + i sqrt(3)/2
        (a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }

    #[test]
    fn w_squared_is_minus_one_minus_w() {
        let w = CycNum::w();
        assert_eq!(cyc_mul(&w, &w), CycNum::from_ints(-1, -1));
        assert_eq!(cyc_mul(&w, &CycNum::w2()), CycNum::one());
    }

    #[test]
    fn one_plus_w_squared_is_w() {
        let x = CycNum::from_ints(1, 1);
        let sq = cyc_mul(&x, &x);
        assert_eq!(sq, CycNum::w());
        // float cross-check of the same product
        let (re, im) = complex(&x);
        let (pre, pim) = (re * re - im * im, 2.0 * re * im);
        let (sre, sim) = complex(&sq);
        assert!((pre - sre).abs() < 1e-12 && (pim - sim).abs() < 1e-12);
    }

    #[test]
    fn inverses() {
        assert_eq!(cyc_inv(&CycNum::w()).unwrap(), CycNum::w2());
        assert_eq!(
            cyc_inv(&CycNum::from(2)).unwrap(),
            CycNum::from(ratio(1, 2))
        );
        let x = CycNum::from_ints(1, 1);
        let inv = cyc_inv(&x).unwrap();
        assert_eq!(inv, CycNum::from_ints(0, -1));
        assert_eq!(cyc_mul(&x, &inv), CycNum::one());
        assert_eq!(cyc_inv(&CycNum::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_rendering_and_parsing() {
        assert_eq!(ratio(6, 4).to_string(), "3/2");
        assert_eq!(ratio(-6, -3).to_string(), "2");
        assert_eq!(ratio(3, -6).to_string(), "-1/2");
        assert_eq!("10/7".parse::<Rat>().unwrap(), ratio(10, 7));
        assert_eq!("0/1".parse::<Rat>().unwrap(), rat(0));
        assert_eq!(" -4 ".parse::<Rat>().unwrap(), rat(-4));
        for bad in ["abc", "", "1/0", "1/", "/2", "1.5", "--1", "1/2/3"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn cyclotomic_rendering_and_parsing() {
        let cases = [
            (CycNum::from_ints(1, 2), "1 + 2*w"),
            (CycNum::from_ints(-1, -1), "-1 - w"),
            (CycNum::from_ints(0, 1), "w"),
            (CycNum::from_ints(0, -3), "-3*w"),
            (CycNum::from_ints(5, 0), "5"),
            (CycNum::new(ratio(1, 2), ratio(-3, 4)), "1/2 - 3/4*w"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(text.parse::<CycNum>().unwrap(), value);
        }
        assert_eq!(
            "w + w - 2".parse::<CycNum>().unwrap(),
            CycNum::from_ints(-2, 2)
        );
        assert!("1 + v".parse::<CycNum>().is_err());
        assert!("1 +".parse::<CycNum>().is_err());
    }

    #[test]
    fn norm_vanishes_only_at_zero() {
        assert!(CycNum::zero().norm().is_zero());
        for a in -3..=3 {
            for b in -3..=3 {
                let x = CycNum::from_ints(a, b);
                assert_eq!(x.norm().is_zero(), x.is_zero());
            }
        }
    }
}
