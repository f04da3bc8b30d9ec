//! Triptych records (map, generating system, dessin) and the catalog of all
//! single-cycle types up to a degree bound.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dessin::{Dessin, DessinShape};
use crate::error::{Error, Result};
use crate::families::{BelyiMap, Family, RamificationProfile};
use crate::gensys::{CombinatorialType, GeneratingSystem};

/// Largest degree `enumerate` accepts.
pub const MAX_CATALOG_DEGREE: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RecordInvariants {
    pub genus: usize,
    pub diameter: usize,
    pub shape: Option<DessinShape>,
    pub is_belyi: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<RamificationProfile>,
}

/// One instance of the correspondence. The map is present whenever a closed
/// form is known; the type is present for single-cycle instances.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriptychRecord {
    #[serde(rename = "type")]
    pub ct: Option<CombinatorialType>,
    pub map: Option<BelyiMap>,
    pub gensys: GeneratingSystem,
    pub dessin: Dessin,
    pub invariants: RecordInvariants,
}

impl TriptychRecord {
    fn assemble(
        ct: Option<CombinatorialType>,
        map: Option<BelyiMap>,
        gensys: GeneratingSystem,
    ) -> Result<Self> {
        let dessin = Dessin::from_gensys(&gensys);
        let profile = map.as_ref().map(BelyiMap::profile).transpose()?;
        let record = TriptychRecord {
            invariants: RecordInvariants {
                genus: dessin.genus(),
                diameter: dessin.diameter_vertices(),
                shape: dessin.shape(),
                is_belyi: profile.as_ref().map(|p| p.is_belyi),
                profile,
            },
            ct,
            map,
            gensys,
            dessin,
        };
        record.validate()?;
        Ok(record)
    }

    /// The canonical record of a single-cycle type, with the closed-form map
    /// attached when one of the families covers the type.
    pub fn for_type(ct: &CombinatorialType) -> Result<Self> {
        let gensys = GeneratingSystem::canonical_single_cycle(ct)?;
        let map = BelyiMap::for_type(ct).transpose()?;
        Self::assemble(Some(*ct), map, gensys)
    }

    pub fn for_map(map: BelyiMap) -> Result<Self> {
        match map.family {
            Family::Power => {
                let gs = GeneratingSystem::power_map(map.d)?;
                Self::assemble(None, Some(map), gs)
            }
            Family::Chebyshev => {
                let gs = GeneratingSystem::chebyshev(map.d)?;
                Self::assemble(None, Some(map), gs)
            }
            _ => {
                let ct = map.claimed_type.ok_or_else(|| {
                    Error::Verification("map has no combinatorial type to build a triptych from".into())
                })?;
                let gs = GeneratingSystem::canonical_single_cycle(&ct)?;
                Self::assemble(Some(ct), Some(map), gs)
            }
        }
    }

    /// Re-derives every invariant from the stored representations.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Verification(msg));
        if Dessin::from_gensys(&self.gensys) != self.dessin {
            return fail("dessin does not match the generating system".into());
        }
        if self.dessin.to_gensys() != self.gensys {
            return fail("dessin does not recover the generating system".into());
        }
        let genus = self.gensys.genus();
        if genus != self.dessin.genus() || genus != self.invariants.genus {
            return fail(format!("genus disagreement (generating system gives {genus})"));
        }
        if self.dessin.diameter_vertices() != self.invariants.diameter {
            return fail("stored diameter is stale".into());
        }
        if self.dessin.shape() != self.invariants.shape {
            return fail("stored shape is stale".into());
        }
        if let Some(ct) = &self.ct {
            if self.gensys.single_cycle_type().as_ref() != Some(ct) {
                return fail(format!("generating system is not of type {ct}"));
            }
            if self.invariants.shape != Some(DessinShape::for_type(ct)) {
                return fail(format!("dessin shape does not match the two-hub counts for {ct}"));
            }
            if genus != 0 || self.invariants.diameter > 4 {
                return fail(format!("single-cycle dessin of type {ct} is not planar of diameter ≤ 4"));
            }
        }
        match &self.map {
            Some(map) => {
                let profile = map.profile()?;
                if !profile.is_belyi || self.invariants.is_belyi != Some(true) {
                    return fail("attached map is not Belyi".into());
                }
                if self.invariants.profile.as_ref() != Some(&profile) {
                    return fail("stored ramification profile is stale".into());
                }
                if map.d != self.gensys.degree() || map.f.degree() != map.d {
                    return fail("map degree does not match the generating system".into());
                }
                let cycle_types: Vec<Vec<usize>> = self
                    .gensys
                    .triple()
                    .iter()
                    .map(|p| p.cycle_type().parts().to_vec())
                    .collect();
                if profile.fibers().to_vec() != cycle_types {
                    return fail(format!(
                        "ramification profile {profile} does not match the cycle types of {}",
                        self.gensys
                    ));
                }
                if let Some(ct) = &self.ct {
                    profile.check_type(ct).into_result()?;
                }
            }
            None => {
                if self.invariants.is_belyi.is_some() || self.invariants.profile.is_some() {
                    return fail("map-derived invariants present without a map".into());
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub records: Vec<TriptychRecord>,
    /// Records removed as conjugate to an earlier one (dedup only).
    pub collapsed: usize,
}

impl Catalog {
    /// Every valid single-cycle type with `3 ≤ d ≤ d_max`, sorted by
    /// `(d, e₀, e₁)`. Types are processed in parallel; the order of the
    /// output does not depend on scheduling.
    pub fn enumerate(d_max: usize, dedup: bool) -> Result<Self> {
        if !(3..=MAX_CATALOG_DEGREE).contains(&d_max) {
            return Err(Error::ParameterOutOfRange(format!(
                "dmax must be in 3..={MAX_CATALOG_DEGREE}, got {d_max}"
            )));
        }
        let types: Vec<CombinatorialType> =
            (3..=d_max).flat_map(CombinatorialType::all_of_degree).collect();
        let records = types
            .par_iter()
            .map(TriptychRecord::for_type)
            .collect::<Result<Vec<_>>>()?;
        let mut catalog = Catalog {
            records,
            collapsed: 0,
        };
        if dedup {
            catalog.dedup()?;
        }
        Ok(catalog)
    }

    /// Drops every record whose generating system is conjugate to an earlier
    /// record's. Only records with identical cycle-type profiles are compared.
    pub fn dedup(&mut self) -> Result<()> {
        let mut buckets: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        let mut keep = vec![true; self.records.len()];
        for (idx, rec) in self.records.iter().enumerate() {
            let key: Vec<_> = rec.gensys.triple().iter().map(|p| p.cycle_type()).collect();
            let bucket = buckets.entry((rec.gensys.degree(), key)).or_default();
            for &prev in bucket.iter() {
                if self.records[prev].gensys.equivalent(&rec.gensys)? {
                    keep[idx] = false;
                    break;
                }
            }
            if keep[idx] {
                bucket.push(idx);
            }
        }
        let before = self.records.len();
        let mut flags = keep.into_iter();
        self.records.retain(|_| flags.next().unwrap_or(true));
        self.collapsed += before - self.records.len();
        Ok(())
    }

    pub fn per_degree(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for rec in &self.records {
            *counts.entry(rec.gensys.degree()).or_insert(0) += 1;
        }
        counts
    }

    /// JSON Lines, one record per line. Each record is re-validated before it
    /// is written.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for rec in &self.records {
            rec.validate()?;
            let line = serde_json::to_string(rec)
                .map_err(|e| Error::Verification(format!("serialization failed: {e}")))?;
            writeln!(out, "{line}").map_err(|e| Error::Verification(format!("write failed: {e}")))?;
        }
        Ok(())
    }

    pub fn read_jsonl(text: &str) -> Result<Vec<TriptychRecord>> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str(l)
                    .map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))
            })
            .collect()
    }
}
