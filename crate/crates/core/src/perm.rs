//! Permutations of `{1, …, d}`.
//!
//! Points are 1-based everywhere in the public API. Products act left to
//! right: `a.compose(&b)` sends `i` to `b(a(i))`, so `σ₀σ₁σ∞ = 1` reads as
//! "apply σ₀, then σ₁, then σ∞".

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images; images[i] = σ(i+1) − 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    /// Builds from 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        let mut zero_based = Vec::with_capacity(d);
        for &img in images {
            if img == 0 || img > d || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={d}"
                )));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation of degree `d` from disjoint cycles of 1-based
    /// points. Points not mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(d: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut seen = vec![false; d];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (idx, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > d {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} outside 1..={d}"
                    )));
                }
                if seen[pt - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} appears twice"
                    )));
                }
                seen[pt - 1] = true;
                images[pt - 1] = cycle[(idx + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The cycle `(first first+1 … last)`.
    pub fn consecutive_cycle(d: usize, first: usize, last: usize) -> Result<Self> {
        let cycle: Vec<usize> = (first..=last).collect();
        Self::from_cycles(d, &[cycle])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(())
    }

    /// `self · other`: apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `t⁻¹ · self · t`, which sends `t(i)` to `t(self(i))`.
    pub fn conjugate(&self, t: &Permutation) -> Result<Self> {
        self.check_degree(t)?;
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[t.images[i]] = t.images[j];
        }
        Ok(Permutation { images })
    }

    /// Disjoint cycles including fixed points, each rotated to start at its
    /// smallest point and sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycles of length at least 2.
    pub fn nontrivial_cycles(&self) -> Vec<Vec<usize>> {
        self.cycles().into_iter().filter(|c| c.len() >= 2).collect()
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`, with commas accepted
    /// as separators. `"()"` is the identity.
    pub fn parse_cycles(d: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|e| (r, e)))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation: {text:?}")))?;
            let (body, end) = inner_end;
            let points = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[end + 1..].trim_start();
        }
        Self::from_cycles(d, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cycles().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    /// Every point must appear, so the degree is the number of points listed.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let cycles = Vec::<Vec<usize>>::deserialize(d)?;
        let degree = cycles.iter().map(Vec::len).sum();
        Permutation::from_cycles(degree, &cycles).map_err(serde::de::Error::custom)
    }
}

/// Cycle lengths in non-increasing order, fixed points included.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Parts of size at least 2.
    pub fn nontrivial(&self) -> Vec<usize> {
        self.0.iter().copied().filter(|&p| p >= 2).collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Whether the group generated by `gens` acts transitively on `{1, …, d}`.
/// Orbits of a finite group are closed under the generators alone, so no
/// inverses are needed.
pub fn is_transitive(gens: &[Permutation]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidPermutation("empty generator list".into()));
    };
    let d = first.degree();
    for g in gens {
        first.check_degree(g)?;
    }
    if d == 0 {
        return Ok(true);
    }
    let mut seen = vec![false; d];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut count = 1;
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let j = g.images[i];
            if !seen[j] {
                seen[j] = true;
                count += 1;
                queue.push_back(j);
            }
        }
    }
    Ok(count == d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(d, cycles).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = cyc(5, &[&[3, 4, 5]]);
        let b = cyc(5, &[&[1, 2, 3]]);
        assert_eq!(a.compose(&b).unwrap(), cyc(5, &[&[1, 2, 3, 4, 5]]));
        let id = Permutation::identity(5);
        assert_eq!(id.compose(&b).unwrap(), b);
        assert_eq!(a.compose(&a.inverse()).unwrap(), id);
        assert_eq!(
            a.compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch(5, 4))
        );
    }

    #[test]
    fn cycle_decomposition() {
        assert_eq!(Permutation::identity(3).cycles(), vec![vec![1], vec![2], vec![3]]);
        let full = Permutation::consecutive_cycle(6, 1, 6).unwrap();
        assert_eq!(full.cycles(), vec![vec![1, 2, 3, 4, 5, 6]]);
        let s0 = cyc(5, &[&[5, 3, 4]]);
        assert_eq!(s0.cycles(), vec![vec![1], vec![2], vec![3, 4, 5]]);
        assert_eq!(s0.to_string(), "(1)(2)(3 4 5)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(s0.cycle_type(), CycleType::new(vec![1, 3, 1]));
        assert_eq!(s0.cycle_type().parts(), &[3, 1, 1]);
    }

    #[test]
    fn transitivity() {
        for d in 3..=10 {
            let full = Permutation::consecutive_cycle(d, 1, d).unwrap();
            assert!(is_transitive(&[full]).unwrap());
        }
        assert!(is_transitive(&[cyc(5, &[&[3, 4, 5]]), cyc(5, &[&[1, 2, 3]])]).unwrap());
        assert!(!is_transitive(&[cyc(3, &[&[1, 2]])]).unwrap());
        assert!(is_transitive(&[]).is_err());
        assert!(is_transitive(&[cyc(3, &[&[1, 2]]), Permutation::identity(4)]).is_err());
    }

    #[test]
    fn conjugation() {
        let p = cyc(3, &[&[1, 2]]);
        let t = cyc(3, &[&[1, 2, 3]]);
        assert_eq!(p.conjugate(&t).unwrap(), cyc(3, &[&[2, 3]]));
        assert_eq!(p.conjugate(&Permutation::identity(3)).unwrap(), p);
        // t⁻¹ · p · t written out
        let explicit = t.inverse().compose(&p).unwrap().compose(&t).unwrap();
        assert_eq!(p.conjugate(&t).unwrap(), explicit);
    }

    #[test]
    fn invalid_input() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert_eq!(Permutation::from_images(&[2, 3, 1]).unwrap(), cyc(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn text_and_json() {
        let p = Permutation::parse_cycles(6, "(1 2)(3,4, 5)").unwrap();
        assert_eq!(p, cyc(6, &[&[1, 2], &[3, 4, 5]]));
        assert_eq!(Permutation::parse_cycles(3, "()").unwrap(), Permutation::identity(3));
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 x)").is_err());

        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[1,2],[3,4,5],[6]]");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p);
        assert!(serde_json::from_str::<Permutation>("[[1,2],[4]]").is_err());
    }
}
