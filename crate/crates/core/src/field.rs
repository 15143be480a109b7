//! Exact scalar fields with involution: `Q` (trivial involution) and `Q(i)`
//! (complex conjugation).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Which field a subspace or matrix lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    Q,
    Qi,
}

impl Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => f.write_str("Q"),
            FieldTag::Qi => f.write_str("Qi"),
        }
    }
}

impl FromStr for FieldTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(FieldTag::Q),
            "Qi" => Ok(FieldTag::Qi),
            other => Err(Error::InvalidArgument(format!("unknown field `{other}`"))),
        }
    }
}

/// A field with an involutive automorphism `x -> x*`.
///
/// Values are always kept in canonical form, so `Eq` and `Hash` are
/// structural.
pub trait Field:
    Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: Rational) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    /// `x * x*`, which is a nonnegative rational vanishing only at zero.
    fn norm_sq(&self) -> Rational;

    fn parse(s: &str) -> Result<Self>;

    /// A random element with integer parts in `[-bound, bound]`.
    fn sample<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let body = t.strip_prefix('+').unwrap_or(t);
    if body.is_empty() {
        return Err(Error::Scalar(s.to_string()));
    }
    let parsed = match body.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| Error::Scalar(s.to_string()))?;
            let q: BigInt = q.parse().map_err(|_| Error::Scalar(s.to_string()))?;
            if q.is_zero() {
                return Err(Error::Scalar(s.to_string()));
            }
            BigRational::new(p, q)
        }
        None => BigRational::from_integer(body.parse().map_err(|_| Error::Scalar(s.to_string()))?),
    };
    Ok(parsed)
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Q;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn norm_sq(&self) -> Rational {
        self * self
    }
    fn parse(s: &str) -> Result<Self> {
        parse_rational(s)
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        Self::from_i64(rng.gen_range(-bound..=bound))
    }
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(Rational::from_i64(re), Rational::from_i64(im))
    }

    pub fn i() -> Self {
        Gaussian::from_ints(0, 1)
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit_im = |f: &mut fmt::Formatter<'_>, im: &Rational| {
            if One::is_one(im) {
                write!(f, "i")
            } else {
                write!(f, "{im}i")
            }
        };
        if self.is_real() {
            return write!(f, "{}", self.re);
        }
        if Zero::is_zero(&self.re) {
            if One::is_one(&-&self.im) {
                return write!(f, "-i");
            }
            return unit_im(f, &self.im);
        }
        write!(f, "{}", self.re)?;
        if self.im.is_negative() {
            write!(f, "-")?;
            unit_im(f, &-&self.im)
        } else {
            write!(f, "+")?;
            unit_im(f, &self.im)
        }
    }
}

impl Add for &Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        if self.is_real() && rhs.is_real() {
            return Gaussian::new(&self.re * &rhs.re, Zero::zero());
        }
        Gaussian::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-&self.re, -&self.im)
    }
}

impl Field for Gaussian {
    const TAG: FieldTag = FieldTag::Qi;

    fn zero() -> Self {
        Gaussian::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        Gaussian::new(One::one(), Zero::zero())
    }
    fn from_i64(v: i64) -> Self {
        Gaussian::from_ints(v, 0)
    }
    fn from_rational(q: Rational) -> Self {
        Gaussian::new(q, Zero::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if Zero::is_zero(&n) {
            return None;
        }
        Some(Gaussian::new(&self.re / &n, -&self.im / &n))
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }
    fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Gaussian::new(parse_rational(&t)?, Zero::zero()));
        };
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .next_back();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => One::one(),
            "-" => -<Rational as One>::one(),
            other => parse_rational(other).map_err(|_| Error::Scalar(s.to_string()))?,
        };
        let re = parse_rational(re).map_err(|_| Error::Scalar(s.to_string()))?;
        Ok(Gaussian::new(re, im))
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Self {
        Gaussian::from_ints(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(s: &str) -> Rational {
        Rational::parse(s).unwrap()
    }

    #[test]
    fn rational_text_form() {
        assert_eq!(q("2/4").to_string(), "1/2");
        assert_eq!(q("-3").to_string(), "-3");
        assert_eq!(q("6/-4").to_string(), "-3/2");
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("x").is_err());
    }

    #[test]
    fn gaussian_text_form() {
        for s in ["1/2+3/4i", "1-i", "i", "-i", "2i", "-7/3", "0", "-1/2-5i"] {
            let g = Gaussian::parse(s).unwrap();
            assert_eq!(g.to_string(), s, "canonical print of {s}");
            assert_eq!(Gaussian::parse(&g.to_string()).unwrap(), g);
        }
        assert_eq!(Gaussian::parse("0+1i").unwrap(), Gaussian::i());
        assert!(Gaussian::parse("1+xi").is_err());
    }

    #[test]
    fn conjugation_of_i() {
        assert_eq!(Gaussian::i().conj(), Gaussian::from_ints(0, -1));
        assert_eq!(Field::mul(&Gaussian::i(), &Gaussian::i()), Gaussian::from_i64(-1));
    }

    fn field_axioms<F: Field>(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..300 {
            let a = F::sample(&mut rng, 5);
            let b = F::sample(&mut rng, 5);
            let c = F::sample(&mut rng, 5);
            assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.sub(&a), F::zero());
            if let Some(ai) = a.inv() {
                assert!(a.mul(&ai).is_one());
            } else {
                assert!(a.is_zero());
            }
            // involution: automorphism of order <= 2
            assert_eq!(a.conj().conj(), a);
            assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
            assert_eq!(a.mul(&a.conj()), F::from_rational(a.norm_sq()));
            assert_eq!(Zero::is_zero(&a.norm_sq()), a.is_zero());
        }
    }

    #[test]
    fn rational_field_axioms() {
        field_axioms::<Rational>(1);
    }

    #[test]
    fn gaussian_field_axioms() {
        field_axioms::<Gaussian>(2);
    }
}
