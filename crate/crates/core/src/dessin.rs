//! Dessins d'enfants as bipartite ribbon graphs.
//!
//! A dessin with `d` edges labelled `1..=d` is stored as the cyclic order of
//! edge labels around each black vertex and each white vertex. Black vertices
//! are the cycles of σ₀ and white vertices the cycles of σ₁, so the rotation
//! at a vertex is read directly off the permutation. Reversing every rotation
//! gives the mirror dessin; no orientation beyond "rotation = cycle" is fixed.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gensys::{CombinatorialType, GeneratingSystem};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Dessin {
    d: usize,
    black: Vec<Vec<usize>>,
    white: Vec<Vec<usize>>,
}

/// Counts describing a dessin with one black hub and one white hub, every
/// other vertex being a leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DessinShape {
    pub white_leaves: usize,
    pub black_leaves: usize,
    pub parallel_edges: usize,
    pub black_hub_degree: usize,
    pub white_hub_degree: usize,
}

impl DessinShape {
    /// The two-hub shape of the canonical dessin of a single-cycle type:
    /// `d − e₁` white leaves on the black hub, `d − e₀` black leaves on the
    /// white hub and `e₀ + e₁ − d` edges between the hubs.
    pub fn for_type(ct: &CombinatorialType) -> Self {
        DessinShape {
            white_leaves: ct.d - ct.e1,
            black_leaves: ct.d - ct.e0,
            parallel_edges: ct.e0 + ct.e1 - ct.d,
            black_hub_degree: ct.e0,
            white_hub_degree: ct.e1,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.white_leaves + self.black_leaves + self.parallel_edges
    }
}

fn canonical_rotation(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
    cycle
}

fn canonical_vertices(vertices: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vertices.into_iter().map(canonical_rotation).collect();
    out.sort_by_key(|c| c.first().copied());
    out
}

impl Dessin {
    /// Validates and canonicalizes: each label appears at exactly one black
    /// and one white vertex, and the graph is connected.
    pub fn new(d: usize, black: Vec<Vec<usize>>, white: Vec<Vec<usize>>) -> Result<Self> {
        if black.iter().chain(&white).any(Vec::is_empty) {
            return Err(Error::InvalidDessin("vertex with no edges".into()));
        }
        let sigma0 = Permutation::from_cycles(d, &black)
            .map_err(|e| Error::InvalidDessin(format!("black rotations: {e}")))?;
        let sigma1 = Permutation::from_cycles(d, &white)
            .map_err(|e| Error::InvalidDessin(format!("white rotations: {e}")))?;
        let count = |vs: &[Vec<usize>]| vs.iter().map(Vec::len).sum::<usize>();
        if count(&black) != d || count(&white) != d {
            return Err(Error::InvalidDessin(format!(
                "every edge 1..={d} must appear at exactly one black and one white vertex"
            )));
        }
        GeneratingSystem::new(sigma0, sigma1).map_err(|e| match e {
            Error::NotTransitive(_) => Error::InvalidDessin("graph is not connected".into()),
            other => other,
        })?;
        Ok(Dessin {
            d,
            black: canonical_vertices(black),
            white: canonical_vertices(white),
        })
    }

    /// One black vertex per cycle of σ₀ and one white vertex per cycle of σ₁,
    /// fixed points included.
    pub fn from_gensys(gs: &GeneratingSystem) -> Self {
        Dessin {
            d: gs.degree(),
            black: gs.sigma0().cycles(),
            white: gs.sigma1().cycles(),
        }
    }

    pub fn to_gensys(&self) -> GeneratingSystem {
        let sigma0 = Permutation::from_cycles(self.d, &self.black).expect("validated rotations");
        let sigma1 = Permutation::from_cycles(self.d, &self.white).expect("validated rotations");
        GeneratingSystem::new(sigma0, sigma1).expect("validated dessin is connected")
    }

    pub fn edge_count(&self) -> usize {
        self.d
    }

    pub fn black(&self) -> &[Vec<usize>] {
        &self.black
    }

    pub fn white(&self) -> &[Vec<usize>] {
        &self.white
    }

    pub fn vertex_count(&self) -> usize {
        self.black.len() + self.white.len()
    }

    /// Number of faces, i.e. cycles of `σ∞ = (σ₀σ₁)⁻¹`.
    pub fn face_count(&self) -> usize {
        self.to_gensys().sigma_inf().num_cycles()
    }

    /// Genus of the surface the ribbon graph embeds in, from
    /// `V − E + F = 2 − 2g`.
    pub fn genus(&self) -> usize {
        let chi = self.vertex_count() as isize - self.d as isize + self.face_count() as isize;
        debug_assert!(chi <= 2 && chi % 2 == 0);
        ((2 - chi) / 2) as usize
    }

    /// For each edge label, the (black, white) vertex indices it joins.
    fn endpoints(&self) -> Vec<(usize, usize)> {
        let mut ends = vec![(0, 0); self.d + 1];
        for (b, rot) in self.black.iter().enumerate() {
            for &e in rot {
                ends[e].0 = b;
            }
        }
        for (w, rot) in self.white.iter().enumerate() {
            for &e in rot {
                ends[e].1 = w;
            }
        }
        ends
    }

    /// Adjacency of the underlying simple graph; white vertex `w` has index
    /// `black.len() + w`.
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let nb = self.black.len();
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(b, w) in &self.endpoints()[1..] {
            adj[b].push(nb + w);
            adj[nb + w].push(b);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    /// Diameter counted in vertices: the largest number of vertices on a
    /// shortest path, i.e. the edge-count diameter plus one.
    pub fn diameter_vertices(&self) -> usize {
        let adj = self.adjacency();
        let n = adj.len();
        let mut best = 0;
        for src in 0..n {
            let mut dist = vec![usize::MAX; n];
            dist[src] = 0;
            let mut queue = VecDeque::from([src]);
            while let Some(v) = queue.pop_front() {
                for &u in &adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            best = best.max(dist.into_iter().max().unwrap_or(0));
        }
        best + 1
    }

    /// Two-hub counts, or `None` if the dessin does not have exactly one black
    /// and one white vertex of degree at least 2.
    pub fn shape(&self) -> Option<DessinShape> {
        let hub = |vs: &[Vec<usize>]| -> Option<usize> {
            let mut hubs = vs.iter().enumerate().filter(|(_, r)| r.len() >= 2);
            let (i, _) = hubs.next()?;
            hubs.next().is_none().then_some(i)
        };
        let bh = hub(&self.black)?;
        let wh = hub(&self.white)?;
        let parallel = self.endpoints()[1..]
            .iter()
            .filter(|&&(b, w)| b == bh && w == wh)
            .count();
        let shape = DessinShape {
            white_leaves: self.white.iter().filter(|r| r.len() == 1).count(),
            black_leaves: self.black.iter().filter(|r| r.len() == 1).count(),
            parallel_edges: parallel,
            black_hub_degree: self.black[bh].len(),
            white_hub_degree: self.white[wh].len(),
        };
        debug_assert_eq!(shape.white_leaves + shape.parallel_edges, shape.black_hub_degree);
        debug_assert_eq!(shape.black_leaves + shape.parallel_edges, shape.white_hub_degree);
        Some(shape)
    }

    /// Isomorphism of dessins, decided as conjugacy of their generating
    /// systems.
    pub fn isomorphic(&self, other: &Dessin) -> bool {
        self.d == other.d
            && self
                .to_gensys()
                .equivalent(&other.to_gensys())
                .expect("equal degrees")
    }

    /// Relabels edges by `ℓ ↦ relabel(ℓ)`.
    pub fn relabel(&self, relabel: &Permutation) -> Result<Self> {
        let gs = self.to_gensys().conjugate(relabel)?;
        Ok(Dessin::from_gensys(&gs))
    }

    /// Graphviz text. Black vertices are `b0, b1, …` and white vertices
    /// `w0, w1, …` in canonical storage order; edges are listed by label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dessin {\n");
        out.push_str("  node [shape=circle, label=\"\", width=0.25];\n");
        for (i, rot) in self.black.iter().enumerate() {
            let _ = writeln!(
                out,
                "  b{i} [style=filled, fillcolor=black, tooltip=\"{}\"];",
                rotation_text(rot)
            );
        }
        for (i, rot) in self.white.iter().enumerate() {
            let _ = writeln!(
                out,
                "  w{i} [style=solid, fillcolor=white, tooltip=\"{}\"];",
                rotation_text(rot)
            );
        }
        for (label, (b, w)) in self.endpoints().into_iter().enumerate().skip(1) {
            let _ = writeln!(out, "  b{b} -- w{w} [label=\"{label}\"];");
        }
        out.push_str("}\n");
        out
    }
}

fn rotation_text(rot: &[usize]) -> String {
    let parts: Vec<String> = rot.iter().map(usize::to_string).collect();
    format!("({})", parts.join(" "))
}

impl<'de> Deserialize<'de> for Dessin {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            d: usize,
            black: Vec<Vec<usize>>,
            white: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(d)?;
        Dessin::new(raw.d, raw.black, raw.white).map_err(serde::de::Error::custom)
    }
}
