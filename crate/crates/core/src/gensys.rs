//! Generating systems `(σ₀, σ₁, σ∞)` and single-cycle combinatorial types.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{is_transitive, Permutation};

/// A transitive pair `(σ₀, σ₁)` together with the derived `σ∞ = (σ₀σ₁)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratingSystem {
    sigma0: Permutation,
    sigma1: Permutation,
    sigma_inf: Permutation,
}

impl GeneratingSystem {
    pub fn new(sigma0: Permutation, sigma1: Permutation) -> Result<Self> {
        let sigma_inf = sigma0.compose(&sigma1)?.inverse();
        if !is_transitive(&[sigma0.clone(), sigma1.clone()])? {
            return Err(Error::NotTransitive(sigma0.degree()));
        }
        Ok(GeneratingSystem {
            sigma0,
            sigma1,
            sigma_inf,
        })
    }

    pub fn degree(&self) -> usize {
        self.sigma0.degree()
    }

    pub fn sigma0(&self) -> &Permutation {
        &self.sigma0
    }

    pub fn sigma1(&self) -> &Permutation {
        &self.sigma1
    }

    pub fn sigma_inf(&self) -> &Permutation {
        &self.sigma_inf
    }

    pub fn triple(&self) -> [&Permutation; 3] {
        [&self.sigma0, &self.sigma1, &self.sigma_inf]
    }

    /// Genus of the associated cover, from `2 − 2g = c₀ + c₁ + c∞ − d`.
    pub fn genus(&self) -> usize {
        let cycles: usize = self.triple().iter().map(|p| p.num_cycles()).sum();
        let twice = (self.degree() + 2)
            .checked_sub(cycles)
            .filter(|t| t % 2 == 0)
            .expect("Euler characteristic of a transitive triple is even and at most 2");
        twice / 2
    }

    /// Lengths of the unique nontrivial cycle of σ₀, σ₁, σ∞, when each
    /// permutation has exactly one. No genus condition is imposed.
    pub fn single_cycle_exponents(&self) -> Option<[usize; 3]> {
        let mut out = [0; 3];
        for (slot, p) in out.iter_mut().zip(self.triple()) {
            match p.cycle_type().nontrivial().as_slice() {
                [e] => *slot = *e,
                _ => return None,
            }
        }
        Some(out)
    }

    /// The combinatorial type, if this is a genus-0 single-cycle system.
    pub fn single_cycle_type(&self) -> Option<CombinatorialType> {
        let [e0, e1, e_inf] = self.single_cycle_exponents()?;
        CombinatorialType::new(self.degree(), e0, e1, e_inf).ok()
    }

    /// `τ⁻¹στ` applied to each entry.
    pub fn conjugate(&self, tau: &Permutation) -> Result<Self> {
        Ok(GeneratingSystem {
            sigma0: self.sigma0.conjugate(tau)?,
            sigma1: self.sigma1.conjugate(tau)?,
            sigma_inf: self.sigma_inf.conjugate(tau)?,
        })
    }

    /// Some `τ` with `self.conjugate(τ) == other`, if one exists.
    ///
    /// Transitivity means `τ` is pinned down by the image of point 1, so the
    /// search tries each candidate image and propagates `τ(σ(y)) = σ'(τ(y))`
    /// along the generators. Candidates are restricted to points lying in a
    /// σ₀-cycle and σ₁-cycle of the same lengths as those through 1.
    pub fn conjugator(&self, other: &GeneratingSystem) -> Result<Option<Permutation>> {
        let d = self.degree();
        if d != other.degree() {
            return Err(Error::DegreeMismatch(d, other.degree()));
        }
        for (a, b) in self.triple().into_iter().zip(other.triple()) {
            if a.cycle_type() != b.cycle_type() {
                return Ok(None);
            }
        }
        if d == 0 {
            return Ok(Some(Permutation::identity(0)));
        }

        let gens_a = [&self.sigma0, &self.sigma1];
        let gens_b = [&other.sigma0, &other.sigma1];
        let len_a = [cycle_length_of(&self.sigma0, 1), cycle_length_of(&self.sigma1, 1)];

        'candidate: for target in 1..=d {
            if cycle_length_of(&other.sigma0, target) != len_a[0]
                || cycle_length_of(&other.sigma1, target) != len_a[1]
            {
                continue;
            }
            let mut tau = vec![0usize; d + 1];
            let mut used = vec![false; d + 1];
            tau[1] = target;
            used[target] = true;
            let mut stack = vec![1usize];
            while let Some(y) = stack.pop() {
                for (ga, gb) in gens_a.iter().zip(gens_b.iter()) {
                    let ay = ga.apply(y);
                    let want = gb.apply(tau[y]);
                    if tau[ay] == 0 {
                        if used[want] {
                            continue 'candidate;
                        }
                        tau[ay] = want;
                        used[want] = true;
                        stack.push(ay);
                    } else if tau[ay] != want {
                        continue 'candidate;
                    }
                }
            }
            let tau = Permutation::from_images(&tau[1..])?;
            debug_assert_eq!(&self.conjugate(&tau)?, other);
            return Ok(Some(tau));
        }
        Ok(None)
    }

    /// Equivalence under simultaneous conjugation.
    pub fn equivalent(&self, other: &GeneratingSystem) -> Result<bool> {
        Ok(self.conjugator(other)?.is_some())
    }

    /// The power map `x ↦ x^d`: σ₀ the d-cycle `(1 2 … d)`, σ₁ trivial.
    pub fn power_map(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::ParameterOutOfRange("power map needs d ≥ 1".into()));
        }
        Self::new(Permutation::consecutive_cycle(d, 1, d)?, Permutation::identity(d))
    }

    /// The canonical system of a single-cycle type: `σ₁ = (1 2 … e₁)` and σ₀
    /// an e₀-cycle on `{d−e₀+1, …, d}`.
    ///
    /// The two cycles share the `m = e₀ + e₁ − d` points `d−e₀+1 … e₁`. σ₀
    /// runs through them in decreasing order and then through `e₁+1 … d`;
    /// for `m ≥ 3` the shared points must appear in opposite cyclic orders in
    /// σ₀ and σ₁, otherwise σ∞ picks up extra length and the genus is
    /// positive. For `m = 1` this is `σ₀ = (d−e₀+1 … d)`.
    pub fn canonical_single_cycle(ct: &CombinatorialType) -> Result<Self> {
        ct.validate()?;
        let d = ct.d;
        let shared_start = d - ct.e0 + 1;
        let black: Vec<usize> = (shared_start..=ct.e1).rev().chain(ct.e1 + 1..=d).collect();
        let gs = Self::new(
            Permutation::from_cycles(d, &[black])?,
            Permutation::consecutive_cycle(d, 1, ct.e1)?,
        )?;
        if gs.sigma_inf.cycle_type().nontrivial() != [ct.e_inf] {
            return Err(Error::Verification(format!(
                "σ∞ = {} is not a single {}-cycle",
                gs.sigma_inf, ct.e_inf
            )));
        }
        Ok(gs)
    }

    /// The naive two-hub triple,
    /// `σ₀ = (d−e₀+1 … d)`, `σ₁ = (1 … e₁)`, without any check on σ∞.
    /// It has genus 0 only when the hubs share at most two edges.
    pub fn consecutive_single_cycle(ct: &CombinatorialType) -> Result<Self> {
        ct.validate()?;
        Self::new(
            Permutation::consecutive_cycle(ct.d, ct.d - ct.e0 + 1, ct.d)?,
            Permutation::consecutive_cycle(ct.d, 1, ct.e1)?,
        )
    }

    /// Monodromy of the normalized Chebyshev map `(T_d + 1)/2`.
    ///
    /// The two involutions are `(2 3)(4 5)⋯` and `(1 2)(3 4)⋯`. Both
    /// orderings give a d-cycle at ∞; the one kept puts at σ₀ the involution
    /// with `d mod 2` fixed points, since `T_d = −1` has the simple root
    /// `x = −1` exactly when `d` is odd.
    pub fn chebyshev(d: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::ParameterOutOfRange(format!(
                "Chebyshev system needs d ≥ 3, got {d}"
            )));
        }
        let pairs_from = |start: usize| -> Vec<Vec<usize>> {
            (start..d).step_by(2).map(|i| vec![i, i + 1]).collect()
        };
        let evens = Permutation::from_cycles(d, &pairs_from(2))?;
        let odds = Permutation::from_cycles(d, &pairs_from(1))?;
        for (s0, s1) in [(evens.clone(), odds.clone()), (odds, evens)] {
            let fixed = s0.cycles().iter().filter(|c| c.len() == 1).count();
            if fixed != d % 2 {
                continue;
            }
            let gs = Self::new(s0, s1)?;
            if gs.sigma_inf.cycle_type().parts() == [d] {
                return Ok(gs);
            }
        }
        Err(Error::Verification(format!(
            "no Chebyshev assignment in degree {d} has a d-cycle at ∞"
        )))
    }
}

fn cycle_length_of(p: &Permutation, point: usize) -> usize {
    let mut len = 1;
    let mut i = p.apply(point);
    while i != point {
        i = p.apply(i);
        len += 1;
    }
    len
}

impl fmt::Display for GeneratingSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "σ0 = {}, σ1 = {}, σ∞ = {}",
            self.sigma0, self.sigma1, self.sigma_inf
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct GensysJson {
    d: usize,
    sigma0: Permutation,
    sigma1: Permutation,
    sigma_inf: Permutation,
}

impl Serialize for GeneratingSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GensysJson {
            d: self.degree(),
            sigma0: self.sigma0.clone(),
            sigma1: self.sigma1.clone(),
            sigma_inf: self.sigma_inf.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratingSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GensysJson::deserialize(d)?;
        if raw.sigma0.degree() != raw.d {
            return Err(D::Error::custom(format!(
                "sigma0 has degree {}, expected {}",
                raw.sigma0.degree(),
                raw.d
            )));
        }
        let gs = GeneratingSystem::new(raw.sigma0, raw.sigma1).map_err(D::Error::custom)?;
        if gs.sigma_inf != raw.sigma_inf {
            return Err(D::Error::custom("sigmaInf is not (sigma0·sigma1)⁻¹"));
        }
        Ok(gs)
    }
}

/// Ramification data `(d; e₀, e₁, e∞)` of a genus-0 single-cycle map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CombinatorialType {
    pub d: usize,
    pub e0: usize,
    pub e1: usize,
    pub e_inf: usize,
}

impl CombinatorialType {
    pub fn new(d: usize, e0: usize, e1: usize, e_inf: usize) -> Result<Self> {
        let ct = CombinatorialType { d, e0, e1, e_inf };
        ct.validate()?;
        Ok(ct)
    }

    /// Infers `d = (e₀ + e₁ + e∞ − 1)/2` from the Riemann–Hurwitz relation.
    pub fn from_exponents(e0: usize, e1: usize, e_inf: usize) -> Result<Self> {
        let sum = e0 + e1 + e_inf;
        if sum.is_multiple_of(2) {
            return Err(Error::InvalidType(format!(
                "e0 + e1 + eInf = {sum} is even, so no integer d satisfies e0 + e1 + eInf = 2d + 1"
            )));
        }
        Self::new((sum - 1) / 2, e0, e1, e_inf)
    }

    /// Parses `"e0,e1,eInf"` and infers `d`.
    pub fn parse_exponents(spec: &str) -> Result<Self> {
        let [e0, e1, e_inf] = parse_triple(spec)?;
        Self::from_exponents(e0, e1, e_inf)
    }

    /// Builds the type with `e∞ = 2d + 1 − e₀ − e₁`.
    pub fn from_pair(d: usize, e0: usize, e1: usize) -> Result<Self> {
        let e_inf = (2 * d + 1).checked_sub(e0 + e1).ok_or_else(|| {
            Error::InvalidType(format!("e0 + e1 = {} exceeds 2d + 1 = {}", e0 + e1, 2 * d + 1))
        })?;
        Self::new(d, e0, e1, e_inf)
    }

    pub fn validate(&self) -> Result<()> {
        let CombinatorialType { d, e0, e1, e_inf } = *self;
        if d < 3 {
            return Err(Error::InvalidType(format!("degree d = {d} is below 3")));
        }
        for (name, e) in [("e0", e0), ("e1", e1), ("eInf", e_inf)] {
            if !(2..=d).contains(&e) {
                return Err(Error::InvalidType(format!(
                    "{name} = {e} is outside the range [2, {d}]"
                )));
            }
        }
        if e0 + e1 + e_inf != 2 * d + 1 {
            return Err(Error::InvalidType(format!(
                "Riemann–Hurwitz: e0 + e1 + eInf = {} but 2d + 1 = {}",
                e0 + e1 + e_inf,
                2 * d + 1
            )));
        }
        Ok(())
    }

    /// Every valid type of degree `d`, ordered by `(e₀, e₁)`.
    pub fn all_of_degree(d: usize) -> Vec<CombinatorialType> {
        if d < 3 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for e0 in 2..=d {
            for e1 in 2..=d {
                if let Ok(ct) = Self::from_pair(d, e0, e1) {
                    out.push(ct);
                }
            }
        }
        out
    }

    pub fn exponents(&self) -> [usize; 3] {
        [self.e0, self.e1, self.e_inf]
    }
}

/// Parses three comma-separated positive integers.
pub fn parse_triple(spec: &str) -> Result<[usize; 3]> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let bad = || Error::Parse(format!("expected \"e0,e1,eInf\", got {spec:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [0; 3];
    for (slot, p) in out.iter_mut().zip(&parts) {
        *slot = p.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

impl fmt::Display for CombinatorialType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}) in degree {}", self.e0, self.e1, self.e_inf, self.d)
    }
}

impl<'de> Deserialize<'de> for CombinatorialType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(rename_all = "camelCase")]
        struct Raw {
            d: usize,
            e0: usize,
            e1: usize,
            e_inf: usize,
        }
        let r = Raw::deserialize(d)?;
        CombinatorialType::new(r.d, r.e0, r.e1, r.e_inf).map_err(serde::de::Error::custom)
    }
}
