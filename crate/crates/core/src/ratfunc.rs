//! Reduced rational functions `num/den` over ℚ and evaluation on ℙ¹(ℚ).

use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, Rational};

/// A point of the projective line over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjectivePoint {
    Finite(Rational),
    Infinity,
}

impl ProjectivePoint {
    pub fn finite(r: Rational) -> Self {
        ProjectivePoint::Finite(r)
    }

    pub fn int(n: i64) -> Self {
        ProjectivePoint::Finite(rational::int(n))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(r) => f.write_str(&rational::to_string(r)),
            ProjectivePoint::Infinity => f.write_str("∞"),
        }
    }
}

/// Invariants: `den` is nonzero and monic, and `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lc = den.leading().expect("nonzero").clone();
        let inv = lc.recip();
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `max(deg num, deg den)`, the topological degree of the map on ℙ¹.
    pub fn degree(&self) -> usize {
        self.num.degree_or_zero().max(self.den.degree_or_zero())
    }

    /// Checks the stored-form invariants. Every constructor already
    /// establishes them; this exists for tests and for values read from disk.
    pub fn is_canonical(&self) -> bool {
        if !self.den.is_monic() {
            return false;
        }
        if self.num.is_zero() {
            return self.den == Poly::one();
        }
        self.num.gcd(&self.den).map(|g| g.is_constant()).unwrap_or(false)
    }

    pub fn evaluate(&self, z: &ProjectivePoint) -> ProjectivePoint {
        match z {
            ProjectivePoint::Finite(x) => {
                let d = self.den.eval(x);
                if d.is_zero() {
                    ProjectivePoint::Infinity
                } else {
                    ProjectivePoint::Finite(self.num.eval(x) / d)
                }
            }
            ProjectivePoint::Infinity => {
                let dn = self.num.degree_or_zero();
                let dd = self.den.degree_or_zero();
                if self.num.is_zero() || dn < dd {
                    ProjectivePoint::Finite(Rational::zero())
                } else if dn > dd {
                    ProjectivePoint::Infinity
                } else {
                    ProjectivePoint::Finite(
                        self.num.leading().expect("nonzero") / self.den.leading().expect("nonzero"),
                    )
                }
            }
        }
    }

    /// `f(1/x)` as a reduced rational function.
    pub fn substitute_reciprocal(&self) -> Self {
        if self.num.is_zero() {
            return self.clone();
        }
        let n = self.num.degree_or_zero();
        let m = self.den.degree_or_zero();
        // N(1/x)/D(1/x) = x^m·rev(N) / (x^n·rev(D))
        let num = self.num.reversed().shift(m);
        let den = self.den.reversed().shift(n);
        RatFunc::new(num, den).expect("reversed denominator is nonzero")
    }

    pub fn recip(&self) -> Result<Self> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// `num − v·den` for a finite branch value `v`: its roots are the
    /// finite preimages of `v`.
    pub fn fiber_numerator(&self, v: &Rational) -> Poly {
        &self.num - &self.den.scale(v)
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.den == Poly::one() {
            self.num.to_text(var)
        } else {
            format!("({}) / ({})", self.num.to_text(var), self.den.to_text(var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: Poly,
            #[serde(default = "Poly::one")]
            den: Poly,
        }
        let raw = Raw::deserialize(d)?;
        RatFunc::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl Div for &RatFunc {
    type Output = Result<RatFunc>;

    fn div(self, rhs: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn symmetric_degree_10() -> RatFunc {
        // z⁸(42z² − 120z + 90) / (90z² − 120z + 42)
        RatFunc::new(p(&[90, -120, 42]).shift(8), p(&[42, -120, 90])).unwrap()
    }

    #[test]
    fn normalization() {
        let f = RatFunc::new(p(&[-2, 0, 2]), p(&[-3, 3])).unwrap();
        assert_eq!(f.num(), &Poly::new(vec![frac(2, 3), frac(2, 3)]));
        assert_eq!(f.den(), &Poly::one());
        assert!(f.is_canonical());
        assert_eq!(RatFunc::new(p(&[1]), Poly::zero()), Err(Error::ZeroDenominator));
        assert_eq!(RatFunc::new(Poly::zero(), p(&[0, 5])).unwrap(), RatFunc::zero());
    }

    #[test]
    fn evaluation() {
        let f = symmetric_degree_10();
        assert!(f.is_canonical());
        assert_eq!(f.evaluate(&ProjectivePoint::int(1)), ProjectivePoint::int(1));
        assert_eq!(f.evaluate(&ProjectivePoint::int(0)), ProjectivePoint::int(0));
        assert_eq!(f.evaluate(&ProjectivePoint::Infinity), ProjectivePoint::Infinity);

        let power = RatFunc::from_poly(Poly::x_pow(6));
        assert_eq!(power.evaluate(&ProjectivePoint::Infinity), ProjectivePoint::Infinity);
        assert_eq!(power.evaluate(&ProjectivePoint::Finite(frac(1, 2))), ProjectivePoint::Finite(frac(1, 64)));

        let poly = RatFunc::from_poly(p(&[0, 0, 0, 10, -15, 6]));
        assert_eq!(poly.evaluate(&ProjectivePoint::int(0)), ProjectivePoint::int(0));

        // pole
        let g = RatFunc::new(p(&[1]), p(&[-2, 1])).unwrap();
        assert_eq!(g.evaluate(&ProjectivePoint::int(2)), ProjectivePoint::Infinity);
        assert_eq!(g.evaluate(&ProjectivePoint::Infinity), ProjectivePoint::int(0));

        // equal degrees at ∞
        let h = RatFunc::new(p(&[1, 6]), p(&[5, 4])).unwrap();
        assert_eq!(h.evaluate(&ProjectivePoint::Infinity), ProjectivePoint::Finite(frac(3, 2)));
    }

    #[test]
    fn reciprocal_substitution() {
        let f = RatFunc::from_poly(Poly::x_pow(5));
        let g = f.substitute_reciprocal();
        assert_eq!(g, RatFunc::new(p(&[1]), Poly::x_pow(5)).unwrap());

        let c = RatFunc::constant(int(7));
        assert_eq!(c.substitute_reciprocal(), c);

        let s = symmetric_degree_10();
        assert_eq!(&s.substitute_reciprocal() * &s, RatFunc::one());
    }

    #[test]
    fn arithmetic() {
        let f = RatFunc::new(p(&[1]), p(&[0, 1])).unwrap();
        let g = RatFunc::new(p(&[1]), p(&[1, 1])).unwrap();
        // 1/x − 1/(x+1) = 1/(x(x+1))
        assert_eq!(&f - &g, RatFunc::new(p(&[1]), p(&[0, 1, 1])).unwrap());
        assert_eq!(&(&f - &g) + &g, f);
        assert_eq!((&f / &f).unwrap(), RatFunc::one());
        assert!((&f / &RatFunc::zero()).is_err());
    }

    #[test]
    fn json_form() {
        let f = symmetric_degree_10();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"num":["0","0","0","0","0","0","0","0","1","-4/3","7/15"],"den":["7/15","-4/3","1"]}"#
        );
        assert_eq!(serde_json::from_str::<RatFunc>(&s).unwrap(), f);
        let unreduced: RatFunc = serde_json::from_str(r#"{"num":["-1","0","1"],"den":["-1","1"]}"#).unwrap();
        assert_eq!(unreduced, RatFunc::from_poly(p(&[1, 1])));
        assert!(serde_json::from_str::<RatFunc>(r#"{"num":["1"],"den":[]}"#).is_err());
    }
}
