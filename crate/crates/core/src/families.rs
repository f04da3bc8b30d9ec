//! Belyi maps given in closed form, their ramification profiles, and the
//! single-cycle check.
//!
//! Profiles come from exact squarefree decompositions of the fiber
//! polynomials `num − v·den` (and of `den` for the fiber over ∞), so no roots
//! are ever isolated. A genus-0 cover of degree `d` has total ramification at
//! most `2d − 2`; it is Belyi exactly when the fibers over 0, 1, ∞ already
//! account for all of it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gensys::{CombinatorialType, GeneratingSystem};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Power,
    Chebyshev,
    #[serde(rename = "poly")]
    SingleCyclePoly,
    #[serde(rename = "symmetric")]
    SymmetricSingleCycle,
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Power => "power",
            Family::Chebyshev => "chebyshev",
            Family::SingleCyclePoly => "poly",
            Family::SymmetricSingleCycle => "symmetric",
            Family::Custom => "custom",
        })
    }
}

/// A rational map ℙ¹ → ℙ¹ with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BelyiMap {
    pub family: Family,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub f: RatFunc,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub claimed_type: Option<CombinatorialType>,
    /// Closed-form coefficients `a_0, …, a_k`, for the two single-cycle families.
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_rationals"
    )]
    pub a: Option<Vec<Rational>>,
    /// The scalar `c` of the polynomial family.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub c: Option<Rational>,
    /// Post-composition applied to the classical form, e.g. `(T_d + 1)/2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<String>,
}

impl BelyiMap {
    /// An arbitrary map, unverified.
    pub fn custom(f: RatFunc) -> Self {
        BelyiMap {
            family: Family::Custom,
            d: f.degree(),
            k: None,
            f,
            claimed_type: None,
            a: None,
            c: None,
            normalization: None,
        }
    }

    pub fn profile(&self) -> Result<RamificationProfile> {
        RamificationProfile::of(&self.f)
    }

    pub fn verify(&self, ct: &CombinatorialType) -> Result<SingleCycleVerdict> {
        Ok(self.profile()?.check_type(ct))
    }

    /// `z ↦ z^d`.
    pub fn power(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ParameterOutOfRange("power map needs d ≥ 1".into()));
        }
        let map = BelyiMap {
            family: Family::Power,
            ..BelyiMap::custom(RatFunc::from_poly(Poly::x_pow(d)))
        };
        let profile = map.profile()?;
        if !profile.is_belyi {
            return Err(Error::Verification(format!("x^{d} reported non-Belyi")));
        }
        Ok(map)
    }

    /// The Chebyshev polynomial moved to branch locus {0, 1, ∞}:
    /// `(T_d + 1)/2`, with `T_d = −1 ↦ 0` and `T_d = 1 ↦ 1`.
    pub fn chebyshev(d: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::ParameterOutOfRange(format!(
                "Chebyshev map needs d ≥ 3, got {d}"
            )));
        }
        let half = rational::frac(1, 2);
        let g = (&chebyshev_t(d) + &Poly::one()).scale(&half);
        let map = BelyiMap {
            family: Family::Chebyshev,
            normalization: Some("(T_d + 1)/2".into()),
            ..BelyiMap::custom(RatFunc::from_poly(g))
        };

        let profile = map.profile()?;
        let gs = GeneratingSystem::chebyshev(d)?;
        let expected: Vec<Vec<usize>> = gs
            .triple()
            .iter()
            .map(|p| p.cycle_type().parts().to_vec())
            .collect();
        if !profile.is_belyi || profile.fibers().to_vec() != expected {
            return Err(Error::Verification(format!(
                "Chebyshev profile {profile} does not match its generating system {gs}"
            )));
        }
        Ok(map)
    }

    /// The degree-`d` single-cycle polynomial of type `(d − k, k + 1, d)`:
    /// `c·x^{d−k}·(a_0 x^k + … + a_k)` with
    /// `a_i = (−1)^{k−i} C(k, i) / (d − i)` and `c = (d)(d−1)⋯(d−k) / k!`.
    pub fn single_cycle_polynomial(d: usize, k: usize) -> Result<Self> {
        check_family_range(d, k)?;
        let a: Vec<Rational> = (0..=k)
            .map(|i| {
                let sign = if (k - i).is_multiple_of(2) { 1 } else { -1 };
                Rational::new(
                    binomial(BigInt::from(k), BigInt::from(i)) * sign,
                    BigInt::from(d - i),
                )
            })
            .collect();
        let falling: BigInt = (0..=k).map(|j| BigInt::from(d - j)).product();
        let k_fact: BigInt = (1..=k).map(BigInt::from).product();
        let c = Rational::new(falling, k_fact);

        // a_i multiplies x^{k−i}
        let inner = Poly::new(a.iter().rev().cloned().collect());
        let f = inner.shift(d - k).scale(&c);
        let ct = CombinatorialType::new(d, d - k, k + 1, d)?;
        let map = BelyiMap {
            family: Family::SingleCyclePoly,
            k: Some(k),
            claimed_type: Some(ct),
            a: Some(a),
            c: Some(c),
            ..BelyiMap::custom(RatFunc::from_poly(f))
        };
        map.verify(&ct)?.into_result()?;
        Ok(map)
    }

    /// The symmetric single-cycle map of type `(d − k, 2k + 1, d − k)`:
    /// `x^{d−k} · (Σ (−1)^i a_i x^{k−i}) / (Σ (−1)^i a_i x^i)`.
    ///
    /// The coefficients are computed both as
    /// `C(k, i) ∏_{k+i+1 ≤ j ≤ 2k} (d − j) ∏_{0 ≤ j < i} (d − j)` and as
    /// `k! C(d, i) C(d − k − i − 1, k − i)`; the two must agree. The family
    /// needs `2k + 1 ≤ d`: otherwise `a_0 = 0` and `e₁ = 2k + 1` exceeds `d`.
    pub fn symmetric_single_cycle(d: usize, k: usize) -> Result<Self> {
        check_family_range(d, k)?;
        if 2 * k + 1 > d {
            return Err(Error::ParameterOutOfRange(format!(
                "symmetric family needs 2k + 1 ≤ d (e1 = {} > d = {d})",
                2 * k + 1
            )));
        }
        let a = symmetric_coefficients(d, k)?;
        if let Some((i, ai)) = a.iter().enumerate().find(|(_, ai)| !ai.is_positive()) {
            return Err(Error::Verification(format!(
                "symmetric coefficient a_{i} = {ai} is not positive for d = {d}, k = {k}"
            )));
        }
        let signed: Vec<Rational> = a
            .iter()
            .enumerate()
            .map(|(i, ai)| {
                let ai = Rational::from_integer(ai.clone());
                if i % 2 == 0 { ai } else { -ai }
            })
            .collect();
        let den = Poly::new(signed.clone());
        let inner = Poly::new(signed.into_iter().rev().collect());
        let f = RatFunc::new(inner.shift(d - k), den)?;

        let ct = CombinatorialType::new(d, d - k, 2 * k + 1, d - k)?;
        let map = BelyiMap {
            family: Family::SymmetricSingleCycle,
            k: Some(k),
            claimed_type: Some(ct),
            a: Some(a.into_iter().map(Rational::from_integer).collect()),
            ..BelyiMap::custom(f)
        };
        map.verify(&ct)?.into_result()?;
        Ok(map)
    }

    /// The closed-form map for a single-cycle type, when one of the two
    /// families covers it: `e∞ = d` (polynomials) or `e₀ = e∞` with `e₁`
    /// odd (symmetric maps).
    pub fn for_type(ct: &CombinatorialType) -> Option<Result<Self>> {
        if ct.e_inf == ct.d {
            Some(Self::single_cycle_polynomial(ct.d, ct.e1 - 1))
        } else if ct.e0 == ct.e_inf && ct.e1 % 2 == 1 {
            Some(Self::symmetric_single_cycle(ct.d, (ct.e1 - 1) / 2))
        } else {
            None
        }
    }
}

fn check_family_range(d: usize, k: usize) -> Result<()> {
    if d < 3 || k < 1 || k + 1 >= d {
        return Err(Error::ParameterOutOfRange(format!(
            "need d ≥ 3 and 1 ≤ k < d − 1, got d = {d}, k = {k}"
        )));
    }
    Ok(())
}

/// Both closed forms of the symmetric-family coefficients, checked equal.
pub fn symmetric_coefficients(d: usize, k: usize) -> Result<Vec<BigInt>> {
    let big = |n: usize| BigInt::from(n);
    let k_fact: BigInt = (1..=k).map(big).product();
    (0..=k)
        .map(|i| {
            let upper: BigInt = (k + i + 1..=2 * k).map(|j| big(d) - big(j)).product();
            let lower: BigInt = (0..i).map(|j| big(d - j)).product();
            let product = binomial(big(k), big(i)) * upper * lower;
            let binom_form = &k_fact
                * binomial(big(d), big(i))
                * binomial(big(d - k - i - 1), big(k - i));
            if product != binom_form {
                return Err(Error::CoefficientFormMismatch {
                    index: i,
                    product: product.to_string(),
                    binomial: binom_form.to_string(),
                });
            }
            Ok(product)
        })
        .collect()
}

/// `T_d` from `T₀ = 1`, `T₁ = x`, `T_{n+1} = 2x·T_n − T_{n−1}`.
pub fn chebyshev_t(d: usize) -> Poly {
    let two_x = Poly::from_ints(&[0, 2]);
    let mut prev = Poly::one();
    let mut cur = Poly::x_pow(1);
    if d == 0 {
        return prev;
    }
    for _ in 1..d {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Ramification indices over 0, 1 and ∞, each sorted in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RamificationProfile {
    pub d: usize,
    pub zero: Vec<usize>,
    pub one: Vec<usize>,
    pub infinity: Vec<usize>,
    /// `Σ (e − 1)` over the three fibers.
    pub total_ramification: usize,
    pub is_belyi: bool,
}

impl RamificationProfile {
    pub fn of(f: &RatFunc) -> Result<Self> {
        if f.is_constant() {
            return Err(Error::ConstantMap);
        }
        let d = f.degree();
        let finite_fiber = |v: i64| -> Result<Vec<usize>> {
            let p = f.fiber_numerator(&rational::int(v));
            let mut idx = indices(&p)?;
            let at_inf = d - p.degree_or_zero();
            if at_inf > 0 {
                idx.push(at_inf);
            }
            Ok(sorted(idx))
        };
        let zero = finite_fiber(0)?;
        let one = finite_fiber(1)?;
        let mut infinity = indices(f.den())?;
        let excess = f.num().degree_or_zero().saturating_sub(f.den().degree_or_zero());
        if excess > 0 {
            infinity.push(excess);
        }
        let infinity = sorted(infinity);

        let total_ramification = [&zero, &one, &infinity]
            .iter()
            .flat_map(|fib| fib.iter().map(|e| e - 1))
            .sum();
        for fiber in [&zero, &one, &infinity] {
            debug_assert_eq!(fiber.iter().sum::<usize>(), d);
        }
        debug_assert!(total_ramification <= 2 * d - 2);
        Ok(RamificationProfile {
            d,
            zero,
            one,
            infinity,
            total_ramification,
            is_belyi: total_ramification == 2 * d - 2,
        })
    }

    pub fn fibers(&self) -> [Vec<usize>; 3] {
        [self.zero.clone(), self.one.clone(), self.infinity.clone()]
    }

    /// Single-cycle check against expected exponents `(e₀, e₁, e∞)`. The
    /// degree is taken from the map.
    pub fn check_exponents(&self, expected: [usize; 3]) -> SingleCycleVerdict {
        if !self.is_belyi {
            return SingleCycleVerdict::fail(format!(
                "not Belyi: total ramification {} < {}",
                self.total_ramification,
                2 * self.d - 2
            ));
        }
        let names = ["0", "1", "∞"];
        let mut found = [0; 3];
        for (i, fiber) in self.fibers().iter().enumerate() {
            let critical: Vec<usize> = fiber.iter().copied().filter(|&e| e >= 2).collect();
            match critical.as_slice() {
                [e] => found[i] = *e,
                _ => {
                    return SingleCycleVerdict::fail(format!(
                        "fiber over {} has {} ramification points, expected exactly one",
                        names[i],
                        critical.len()
                    ))
                }
            }
        }
        for i in 0..3 {
            if found[i] != expected[i] {
                return SingleCycleVerdict::fail(format!(
                    "e{} mismatch: map has {}, expected {}",
                    names[i], found[i], expected[i]
                ));
            }
        }
        SingleCycleVerdict::pass()
    }

    pub fn check_type(&self, ct: &CombinatorialType) -> SingleCycleVerdict {
        if ct.d != self.d {
            return SingleCycleVerdict::fail(format!(
                "degree mismatch: map has degree {}, type has d = {}",
                self.d, ct.d
            ));
        }
        self.check_exponents(ct.exponents())
    }
}

fn indices(p: &Poly) -> Result<Vec<usize>> {
    if p.is_constant() {
        return Ok(Vec::new());
    }
    Ok(p.squarefree()?
        .root_multiplicities()
        .into_iter()
        .map(|m| m as usize)
        .collect())
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[usize]| {
            v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "{{0:[{}], 1:[{}], ∞:[{}]}}",
            show(&self.zero),
            show(&self.one),
            show(&self.infinity)
        )
    }
}

/// Outcome of a single-cycle check; `diagnostic` names the first failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingleCycleVerdict {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl SingleCycleVerdict {
    fn pass() -> Self {
        SingleCycleVerdict {
            pass: true,
            diagnostic: None,
        }
    }

    fn fail(msg: String) -> Self {
        SingleCycleVerdict {
            pass: false,
            diagnostic: Some(msg),
        }
    }

    pub fn into_result(self) -> Result<()> {
        match self.diagnostic {
            None => Ok(()),
            Some(msg) => Err(Error::Verification(msg)),
        }
    }
}

mod opt_rational {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.serialize_some(&rational::to_string(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| rational::parse(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

mod opt_rationals {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            Some(rs) => s.serialize_some(&rs.iter().map(rational::to_string).collect::<Vec<_>>()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<Vec<Rational>>, D::Error> {
        Option::<Vec<String>>::deserialize(d)?
            .map(|v| {
                v.iter()
                    .map(|s| rational::parse(s))
                    .collect::<Result<Vec<_>>>()
                    .map_err(serde::de::Error::custom)
            })
            .transpose()
    }
}
