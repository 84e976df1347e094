//! Combinatorial galleries of type `γ_λ`, root operators, positive folding,
//! dimension, and the crystal of LS galleries.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::affine::{AffWeylElt, Affine, AffineError, AffineRoot, Face, GalleryType};
use crate::crystal::{CrystalGraph, CrystalNode};
use crate::rootdata::{Coweight, RootDatum, WeylElt};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GalleryError {
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error("crystal closure exceeded {0} nodes")]
    NodeCap(usize),
    #[error("gallery {0} produced by root operators is not LS")]
    NotLs(String),
    #[error("gallery set not closed under e_{color} at {node}")]
    NotClosed { node: String, color: usize },
    #[error("tuple has {got} steps, gallery type needs {want}")]
    Length { got: usize, want: usize },
}

/// The tuple `(δ₀, δ₁, …, δ_p)`; `steps[j-1]` is true when `δ_j = s_{i_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gallery {
    pub head: WeylElt,
    pub steps: Vec<bool>,
}

/// Faces of a gallery: alcoves `Δ_0..Δ_p` and faces `Δ′_0..Δ′_{p+1}`.
#[derive(Clone, Debug)]
pub struct GalleryFaces {
    pub alcoves: Vec<Face>,
    pub facets: Vec<Face>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GalleryRecord {
    pub lambda: Coweight,
    pub word: Vec<usize>,
    pub deltas: Vec<Vec<usize>>,
}

/// All galleries of one fixed type `γ_λ`.
#[derive(Clone, Debug)]
pub struct GalleryModel {
    pub aff: Affine,
    pub ty: GalleryType,
}

/// The LS crystal together with the galleries indexing its nodes.
#[derive(Clone, Debug)]
pub struct LsCrystal {
    pub galleries: Vec<Gallery>,
    pub graph: CrystalGraph,
}

impl GalleryModel {
    pub fn new(aff: Affine, lambda: &Coweight, word: &[usize]) -> Result<GalleryModel, GalleryError> {
        let ty = GalleryType::new(&aff, lambda, word)?;
        Ok(GalleryModel { aff, ty })
    }

    pub fn minimal(aff: Affine, lambda: &Coweight) -> Result<GalleryModel, GalleryError> {
        let ty = GalleryType::minimal(&aff, lambda)?;
        Ok(GalleryModel { aff, ty })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.aff.datum
    }

    pub fn rank(&self) -> usize {
        self.aff.rank()
    }

    pub fn len(&self) -> usize {
        self.ty.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ty.is_empty()
    }

    /// `γ_λ` itself: trivial head, every step a crossing.
    pub fn gamma(&self) -> Gallery {
        Gallery { head: WeylElt::identity(self.rank()), steps: vec![true; self.len()] }
    }

    pub fn gallery(&self, head: WeylElt, steps: Vec<bool>) -> Result<Gallery, GalleryError> {
        if steps.len() != self.len() {
            return Err(GalleryError::Length { got: steps.len(), want: self.len() });
        }
        Ok(Gallery { head, steps })
    }

    /// Every tuple of the type: `|W|·2^p` galleries. Only for small cases.
    pub fn all_galleries(&self) -> Vec<Gallery> {
        let p = self.len();
        let mut out = Vec::new();
        for w in self.datum().weyl_group() {
            for mask in 0u64..(1u64 << p) {
                let steps = (0..p).map(|j| mask >> j & 1 == 1).collect();
                out.push(Gallery { head: w.clone(), steps });
            }
        }
        out
    }

    /// Prefix products `P_j = δ₀⋯δ_j` for `0 ≤ j ≤ p`.
    pub fn prefixes(&self, d: &Gallery) -> Vec<AffWeylElt> {
        let mut cur = AffWeylElt::finite(d.head.clone());
        let mut out = Vec::with_capacity(d.steps.len() + 1);
        out.push(cur.clone());
        for (&i, &cross) in self.ty.word.iter().zip(&d.steps) {
            if cross {
                cur = cur.compose(self.aff.simple_reflection(i));
            }
            out.push(cur.clone());
        }
        out
    }

    pub fn faces(&self, d: &Gallery) -> GalleryFaces {
        let pre = self.prefixes(d);
        let p = self.len();
        let origin: Vec<usize> = (1..=self.rank()).collect();
        let alcoves = pre.iter().map(|g| Face::new(g.clone(), vec![])).collect();
        let mut facets = Vec::with_capacity(p + 2);
        facets.push(Face::new(pre[0].clone(), origin));
        for j in 1..=p {
            facets.push(Face::new(pre[j - 1].clone(), vec![self.ty.word[j - 1]]));
        }
        facets.push(Face::new(pre[p].clone(), self.ty.fund_kind.clone()));
        GalleryFaces { alcoves, facets }
    }

    /// `ν = δ₀⋯δ_p(λ_fund)`.
    pub fn weight(&self, d: &Gallery) -> Coweight {
        self.prefixes(d).last().unwrap().act_point(&self.ty.lambda_fund)
    }

    fn levels(&self, faces: &GalleryFaces, i: usize) -> Vec<Option<i64>> {
        let a = self.datum().simple_root(i);
        faces.facets.iter().map(|f| self.aff.wall_level(f, &a)).collect()
    }

    /// Smallest m with some `Δ′_j ⊆ H_{α_i,m}`.
    pub fn min_wall_level(&self, d: &Gallery, i: usize) -> i64 {
        let faces = self.faces(d);
        self.levels(&faces, i).into_iter().flatten().min().expect("Δ′₀ = {0} lies in every wall through 0")
    }

    fn pairing_int(&self, i: usize, v: &Coweight) -> i64 {
        let x = self.datum().simple_pairing(i, v);
        assert!(x.is_integer(), "gallery weight is not integral");
        x.to_integer()
    }

    /// `(wt, ε_i, φ_i)` with `ε_i = −m` and `φ_i = ⟨α_i,ν⟩ − m`.
    pub fn crystal_maps(&self, d: &Gallery, i: usize) -> (Coweight, i64, i64) {
        let nu = self.weight(d);
        let m = self.min_wall_level(d, i);
        let top = self.pairing_int(i, &nu);
        (nu, -m, top - m)
    }

    /// For `e_i`: the minimal level m and the indices `j < k` bounding the
    /// reflected stretch (faces `j..k` move by `s_{α_i,m+1}`, later ones by
    /// `t^{α_i^∨}`).
    pub fn raise_data(&self, d: &Gallery, i: usize) -> Option<(i64, usize, usize)> {
        let faces = self.faces(d);
        let lv = self.levels(&faces, i);
        let m = lv.iter().flatten().copied().min().unwrap();
        if m == 0 {
            return None;
        }
        let p = self.len();
        let k = (1..=p + 1).find(|&k| lv[k] == Some(m)).expect("a face reaches the minimal level");
        let j = (0..k).rev().find(|&j| lv[j] == Some(m + 1)).expect("the gallery crosses level m+1 before k");
        Some((m, j, k))
    }

    pub fn root_e(&self, d: &Gallery, i: usize) -> Option<Gallery> {
        let (m, j, k) = self.raise_data(d, i)?;
        let a = self.datum().simple_root(i);
        let refl = self.aff.reflection(&AffineRoot { root: a, level: m + 1 });
        let shift = AffWeylElt::translation(self.datum().simple_coroot(i));
        Some(self.surgery(d, j, k, &refl, &shift))
    }

    pub fn root_f(&self, d: &Gallery, i: usize) -> Option<Gallery> {
        let faces = self.faces(d);
        let lv = self.levels(&faces, i);
        let m = lv.iter().flatten().copied().min().unwrap();
        let nu = self.aff.sample_point(faces.facets.last().unwrap());
        if m == self.pairing_int(i, &nu) {
            return None;
        }
        let p = self.len();
        let j = (0..=p).rev().find(|&j| lv[j] == Some(m)).expect("a face reaches the minimal level");
        let k = (j + 1..=p + 1).find(|&k| lv[k] == Some(m + 1)).expect("the gallery climbs to level m+1 after j");
        let a = self.datum().simple_root(i);
        let refl = self.aff.reflection(&AffineRoot { root: a, level: m });
        let shift = AffWeylElt::translation(-&self.datum().simple_coroot(i));
        Some(self.surgery(d, j, k, &refl, &shift))
    }

    /// Move alcove `Δ_l` by id for `l < j`, `refl` for `j ≤ l < k`, `shift`
    /// for `l ≥ k`, then read the tuple back off the moved chain.
    fn surgery(&self, d: &Gallery, j: usize, k: usize, refl: &AffWeylElt, shift: &AffWeylElt) -> Gallery {
        let pre = self.prefixes(d);
        let moved: Vec<AffWeylElt> = pre
            .iter()
            .enumerate()
            .map(|(l, g)| match l {
                l if l < j => g.clone(),
                l if l < k => refl.compose(g),
                _ => shift.compose(g),
            })
            .collect();
        assert!(moved[0].is_finite(), "moved head left the finite Weyl group");
        let mut steps = Vec::with_capacity(self.len());
        for (l, &i) in self.ty.word.iter().enumerate() {
            let (prev, cur) = (&moved[l], &moved[l + 1]);
            if prev == cur {
                steps.push(false);
            } else if prev.compose(self.aff.simple_reflection(i)) == *cur {
                steps.push(true);
            } else {
                panic!("root operator broke the gallery type at step {}", l + 1);
            }
        }
        Gallery { head: moved[0].finite.clone(), steps }
    }

    /// `Φ₊^aff(Δ′_j, Δ_j)`.
    pub fn step_phi_plus(&self, faces: &GalleryFaces, j: usize) -> Vec<AffineRoot> {
        self.aff.phi_plus_aff(&faces.facets[j], &faces.alcoves[j])
    }

    pub fn is_positively_folded(&self, d: &Gallery) -> bool {
        let faces = self.faces(d);
        d.steps.iter().enumerate().all(|(l, &cross)| cross || !self.step_phi_plus(&faces, l + 1).is_empty())
    }

    /// `Σ_{j=0}^{p} |Φ₊^aff(Δ′_j, Δ_j)|`.
    pub fn dimension(&self, d: &Gallery) -> usize {
        let faces = self.faces(d);
        (0..=self.len()).map(|j| self.step_phi_plus(&faces, j).len()).sum()
    }

    pub fn is_ls(&self, d: &Gallery) -> bool {
        if !self.is_positively_folded(d) {
            return false;
        }
        let gap = self.dimension(&self.gamma()) as i64 - self.dimension(d) as i64;
        let h = self.datum().height(&(&self.ty.lambda - &self.weight(d))).expect("weight in λ + coroot lattice");
        gap == h
    }

    /// `[lex-min word of δ₀, [] or [i_1], …, [] or [i_p]]`.
    pub fn deltas(&self, d: &Gallery) -> Vec<Vec<usize>> {
        let mut out = vec![self.datum().reduced_word(&d.head)];
        for (&i, &cross) in self.ty.word.iter().zip(&d.steps) {
            out.push(if cross { vec![i] } else { vec![] });
        }
        out
    }

    pub fn record(&self, d: &Gallery) -> GalleryRecord {
        GalleryRecord { lambda: self.ty.lambda.clone(), word: self.ty.word.clone(), deltas: self.deltas(d) }
    }

    pub fn label(&self, d: &Gallery) -> String {
        serde_json::to_string(&self.deltas(d)).unwrap()
    }

    fn node(&self, id: usize, d: &Gallery) -> CrystalNode {
        let r = self.rank();
        let mut eps = Vec::with_capacity(r);
        let mut phi = Vec::with_capacity(r);
        let mut weight = None;
        for i in 1..=r {
            let (w, e, f) = self.crystal_maps(d, i);
            eps.push(e);
            phi.push(f);
            weight = Some(w);
        }
        let weight = weight.unwrap_or_else(|| self.weight(d));
        CrystalNode { id, tuple: self.deltas(d), weight, dim: Some(self.dimension(d) as i64), eps, phi }
    }

    /// Breadth-first closure of `{γ_λ}` under the lowering operators.
    pub fn enumerate_ls(&self, cap: usize) -> Result<LsCrystal, GalleryError> {
        let r = self.rank();
        let mut galleries = vec![self.gamma()];
        let mut index: HashMap<Gallery, usize> = HashMap::from([(self.gamma(), 0)]);
        let mut f = vec![vec![None; r]];
        let mut e = vec![vec![None; r]];
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for i in 1..=r {
                let Some(g) = self.root_f(&galleries[u], i) else { continue };
                let v = match index.get(&g) {
                    Some(&v) => v,
                    None => {
                        if galleries.len() >= cap {
                            return Err(GalleryError::NodeCap(cap));
                        }
                        let v = galleries.len();
                        index.insert(g.clone(), v);
                        galleries.push(g);
                        f.push(vec![None; r]);
                        e.push(vec![None; r]);
                        queue.push_back(v);
                        v
                    }
                };
                f[u][i - 1] = Some(v);
                e[v][i - 1] = Some(u);
            }
        }
        for (b, g) in galleries.iter().enumerate() {
            if !self.is_ls(g) {
                return Err(GalleryError::NotLs(self.label(g)));
            }
            for i in 1..=r {
                let up = self.root_e(g, i).map(|h| index.get(&h).copied());
                let ok = match (up, e[b][i - 1]) {
                    (None, None) => true,
                    (Some(Some(x)), Some(y)) => x == y,
                    _ => false,
                };
                if !ok {
                    return Err(GalleryError::NotClosed { node: self.label(g), color: i });
                }
            }
        }
        let nodes = galleries.iter().enumerate().map(|(id, g)| self.node(id, g)).collect();
        Ok(LsCrystal { galleries, graph: CrystalGraph { rank: r, nodes, f, e } })
    }

    /// One line per gallery: its deltas and its weight.
    pub fn describe(&self, d: &Gallery) -> String {
        let mut s = self.label(d);
        let _ = write!(s, " wt={}", self.weight(d));
        s
    }
}

/// `height(λ − w₀λ)`, the number of steps from `γ_λ` down to the lowest gallery.
pub fn depth(datum: &RootDatum, lambda: &Coweight) -> i64 {
    let low = datum.longest_element().act(lambda);
    datum.height(&(lambda - &low)).expect("λ − w₀λ lies in the coroot lattice")
}
