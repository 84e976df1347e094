//! Affine roots, the affine Weyl group `W ⋉ ZΦ^∨`, faces of the Coxeter
//! complex and the minimal gallery type attached to a dominant coweight.
//!
//! Affine simple indices run over `0..=rank`; index 0 is the reflection in
//! the wall `H_{θ,1}`. A face is a mover applied to a face of the
//! fundamental alcove, and every geometric question is answered by exact
//! evaluation at one interior sample point.

use std::collections::HashMap;
use std::fmt;

use num::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::rootdata::{Coweight, Root, RootDatum, RootError, WeylElt, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AffineError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("word {0:?} does not send the fundamental vertex to {1}")]
    WrongEndpoint(Vec<usize>, Coweight),
    #[error("word {0:?} is not the minimal coset representative")]
    NotMinimal(Vec<usize>),
    #[error("index {0} is not an affine simple index")]
    BadIndex(usize),
    #[error("folding into the fundamental alcove did not terminate")]
    Runaway,
}

/// The pair `(α, n)`; its wall is `⟨α,x⟩ = n`, its negative half-space `⟨α,x⟩ ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineRoot {
    pub root: Root,
    pub level: i64,
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{})", self.root.0, self.level)
    }
}

/// `x ↦ w(x) + λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffWeylElt {
    pub translation: Coweight,
    pub finite: WeylElt,
}

impl AffWeylElt {
    pub fn identity(rank: usize) -> Self {
        AffWeylElt { translation: Coweight::zero(rank), finite: WeylElt::identity(rank) }
    }

    pub fn translation(l: Coweight) -> Self {
        let r = l.rank();
        AffWeylElt { translation: l, finite: WeylElt::identity(r) }
    }

    pub fn finite(w: WeylElt) -> Self {
        AffWeylElt { translation: Coweight::zero(w.rank()), finite: w }
    }

    pub fn is_finite(&self) -> bool {
        self.translation.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.is_finite() && self.finite.is_identity()
    }

    /// `(λ,w)(μ,v) = (λ + w(μ), wv)`.
    pub fn compose(&self, o: &AffWeylElt) -> AffWeylElt {
        AffWeylElt {
            translation: &self.translation + &self.finite.act(&o.translation),
            finite: self.finite.compose(&o.finite),
        }
    }

    pub fn act_point(&self, x: &Coweight) -> Coweight {
        &self.finite.act(x) + &self.translation
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WallRelation {
    InWall,
    StrictlyMinus,
    StrictlyPlus,
}

/// `mover(φ_J)` where `φ_J` is the face of the fundamental alcove lying on
/// exactly the walls indexed by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub mover: AffWeylElt,
    pub kind: Vec<usize>,
}

impl Face {
    pub fn new(mover: AffWeylElt, mut kind: Vec<usize>) -> Face {
        kind.sort_unstable();
        kind.dedup();
        Face { mover, kind }
    }
}

/// A root datum together with its affine Weyl group data.
#[derive(Clone, Debug)]
pub struct Affine {
    pub datum: RootDatum,
    simple: Vec<AffWeylElt>,
    /// vertex k of the closed fundamental alcove lies on every wall except wall k
    vertices: Vec<Coweight>,
}

impl Affine {
    pub fn new(datum: RootDatum) -> Affine {
        let r = datum.rank;
        let mut simple = vec![Self::reflection_in(&datum, &AffineRoot { root: datum.highest_root.clone(), level: 1 })];
        simple.extend((1..=r).map(|i| AffWeylElt::finite(datum.simple_reflection(i).clone())));
        let mut vertices = vec![Coweight::zero(r)];
        vertices.extend(
            (1..=r).map(|i| datum.fundamental_coweight(i).scale(Q::new(1, datum.marks[i - 1]))),
        );
        Affine { datum, simple, vertices }
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    fn reflection_in(datum: &RootDatum, b: &AffineRoot) -> AffWeylElt {
        let cor = datum.coroot_of(&b.root).expect("not a root");
        AffWeylElt { translation: cor.scale(Q::from_integer(b.level)), finite: datum.reflection(&b.root) }
    }

    /// `s_{α,n}(x) = x − (⟨α,x⟩ − n) α^∨`.
    pub fn reflection(&self, b: &AffineRoot) -> AffWeylElt {
        Self::reflection_in(&self.datum, b)
    }

    pub fn simple_reflection(&self, i: usize) -> &AffWeylElt {
        &self.simple[i]
    }

    pub fn from_word(&self, word: &[usize]) -> AffWeylElt {
        word.iter().fold(AffWeylElt::identity(self.rank()), |g, &i| g.compose(&self.simple[i]))
    }

    pub fn inverse(&self, g: &AffWeylElt) -> AffWeylElt {
        let winv = self.datum.inverse(&g.finite);
        AffWeylElt { translation: -&winv.act(&g.translation), finite: winv }
    }

    /// `(λ,w)·(α,n) = (wα, n + ⟨wα,λ⟩)`, so that `g(H⁻_β) = H⁻_{gβ}`.
    pub fn act_root(&self, g: &AffWeylElt, b: &AffineRoot) -> AffineRoot {
        let wa = g.finite.act_root(&b.root);
        let shift = self.datum.pairing(&wa, &g.translation);
        assert!(shift.is_integer(), "translation outside the coweight lattice");
        AffineRoot { level: b.level + shift.to_integer(), root: wa }
    }

    /// The affine simple root with index i: `α_0 = (−θ,−1)`, `α_i = (α_i, 0)`.
    pub fn simple_root(&self, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot { root: -&self.datum.highest_root, level: -1 }
        } else {
            AffineRoot { root: self.datum.simple_root(i), level: 0 }
        }
    }

    pub fn vertex(&self, k: usize) -> &Coweight {
        &self.vertices[k]
    }

    fn barycenter(&self, kind: &[usize], perturb: bool) -> Coweight {
        let qual: Vec<usize> = (0..=self.rank()).filter(|k| !kind.contains(k)).collect();
        assert!(!qual.is_empty(), "face type must be a proper subset");
        let mut total = Q::zero();
        let mut acc = Coweight::zero(self.rank());
        for (n, &k) in qual.iter().enumerate() {
            let wgt = if perturb && n == 0 { Q::from_integer(2) } else { Q::one() };
            acc = &acc + &self.vertices[k].scale(wgt);
            total += wgt;
        }
        acc.scale(total.recip())
    }

    pub fn sample_point(&self, f: &Face) -> Coweight {
        f.mover.act_point(&self.barycenter(&f.kind, false))
    }

    /// A second interior point of the same face, distinct unless the face is a vertex.
    pub fn perturbed_point(&self, f: &Face) -> Coweight {
        f.mover.act_point(&self.barycenter(&f.kind, true))
    }

    pub fn wall_relation(&self, f: &Face, b: &AffineRoot) -> WallRelation {
        let v = self.datum.pairing(&b.root, &self.sample_point(f));
        let n = Q::from_integer(b.level);
        match v.cmp(&n) {
            std::cmp::Ordering::Equal => WallRelation::InWall,
            std::cmp::Ordering::Less => WallRelation::StrictlyMinus,
            std::cmp::Ordering::Greater => WallRelation::StrictlyPlus,
        }
    }

    /// The level n with `f ⊆ H_{α,n}`, if there is one.
    pub fn wall_level(&self, f: &Face, a: &Root) -> Option<i64> {
        let v = self.datum.pairing(a, &self.sample_point(f));
        if !v.is_integer() {
            return None;
        }
        let w = self.datum.pairing(a, &self.perturbed_point(f));
        (w == v).then(|| v.to_integer())
    }

    /// `Φ₊^aff(F′,F)`: positive affine roots whose wall contains `F′`
    /// while `F` lies strictly on the positive side.
    pub fn phi_plus_aff(&self, inner: &Face, outer: &Face) -> Vec<AffineRoot> {
        let x_in = self.sample_point(inner);
        let x_out = self.sample_point(outer);
        self.datum
            .positive_roots
            .iter()
            .filter_map(|a| {
                let lv = self.datum.pairing(a, &x_in);
                (lv.is_integer() && self.datum.pairing(a, &x_out) > lv)
                    .then(|| AffineRoot { root: a.clone(), level: lv.to_integer() })
            })
            .collect()
    }

    pub fn fundamental_alcove(&self) -> Face {
        Face::new(AffWeylElt::identity(self.rank()), vec![])
    }

    /// Number of walls separating the fundamental alcove from its image.
    pub fn length(&self, g: &AffWeylElt) -> usize {
        let y = g.act_point(&self.barycenter(&[], false));
        self.datum
            .positive_roots
            .iter()
            .map(|a| self.datum.pairing(a, &y).floor().to_integer().unsigned_abs() as usize)
            .sum()
    }

    fn violated_wall(&self, x: &Coweight) -> Option<usize> {
        if let Some(i) = (1..=self.rank()).find(|&i| self.datum.simple_pairing(i, x) < Q::zero()) {
            return Some(i);
        }
        (self.datum.pairing(&self.datum.highest_root, x) > Q::one()).then_some(0)
    }

    /// Fold λ into the closed fundamental alcove. Returns the folded point,
    /// the set of walls through it and g with `g(folded) = λ`.
    pub fn fundamentalize(&self, lambda: &Coweight) -> Result<(Coweight, Vec<usize>, AffWeylElt), AffineError> {
        let d = &self.datum;
        // each reflection crosses one wall between the point and the alcove
        let bound: i64 = d
            .positive_roots
            .iter()
            .map(|a| d.pairing(a, lambda).abs().ceil().to_integer() + 1)
            .sum();
        let mut x = lambda.clone();
        let mut g = AffWeylElt::identity(self.rank());
        let mut steps = 0;
        while let Some(i) = self.violated_wall(&x) {
            steps += 1;
            if steps > bound {
                return Err(AffineError::Runaway);
            }
            x = self.simple[i].act_point(&x);
            g = g.compose(&self.simple[i]);
        }
        let kind = self.walls_through(&x);
        Ok((x, kind, g))
    }

    fn walls_through(&self, x: &Coweight) -> Vec<usize> {
        (0..=self.rank())
            .filter(|&i| {
                let b = self.simple_root(i);
                self.datum.pairing(&b.root, x) == Q::from_integer(b.level)
            })
            .collect()
    }

    /// The minimal element of the coset `g W_J`, by greedy right descent.
    pub fn minimal_in_coset(&self, g: &AffWeylElt, kind: &[usize]) -> AffWeylElt {
        let mut g = g.clone();
        let mut len = self.length(&g);
        while let Some(u) = kind.iter().map(|&j| g.compose(&self.simple[j])).find(|u| self.length(u) < len) {
            g = u;
            len -= 1;
        }
        g
    }

    /// A reduced word, peeled off from the right using the smallest descent.
    pub fn reduced_word(&self, g: &AffWeylElt) -> Vec<usize> {
        let mut g = g.clone();
        let mut len = self.length(&g);
        let mut rev = Vec::with_capacity(len);
        while len > 0 {
            let (i, u) = (0..=self.rank())
                .map(|i| (i, g.compose(&self.simple[i])))
                .find(|(_, u)| self.length(u) < len)
                .expect("nonidentity element has a right descent");
            rev.push(i);
            g = u;
            len -= 1;
        }
        rev.reverse();
        rev
    }

    pub fn enumerate_reduced_words(&self, g: &AffWeylElt) -> Vec<Vec<usize>> {
        let mut memo = HashMap::new();
        let mut out = self.words_rec(g, &mut memo);
        out.sort();
        out
    }

    fn words_rec(&self, g: &AffWeylElt, memo: &mut HashMap<AffWeylElt, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if let Some(v) = memo.get(g) {
            return v.clone();
        }
        let len = self.length(g);
        let out = if len == 0 {
            vec![vec![]]
        } else {
            let mut out = Vec::new();
            for i in 0..=self.rank() {
                let u = g.compose(&self.simple[i]);
                if self.length(&u) < len {
                    for mut w in self.words_rec(&u, memo) {
                        w.push(i);
                        out.push(w);
                    }
                }
            }
            out
        };
        memo.insert(g.clone(), out.clone());
        out
    }

    /// The element `w_λ` of minimal length with `w_λ(λ_fund) = λ`.
    pub fn minimal_element(&self, lambda: &Coweight) -> Result<(AffWeylElt, Coweight, Vec<usize>), AffineError> {
        if !self.datum.is_dominant(lambda) {
            return Err(RootError::NotDominant(lambda.clone()).into());
        }
        let (fund, kind, g) = self.fundamentalize(lambda)?;
        let w = self.minimal_in_coset(&g, &kind);
        assert_eq!(w.act_point(&fund), *lambda);
        Ok((w, fund, kind))
    }

    pub fn minimal_word(&self, lambda: &Coweight) -> Result<Vec<usize>, AffineError> {
        let (w, _, _) = self.minimal_element(lambda)?;
        let word = self.reduced_word(&w);
        assert_eq!(word.len(), self.length(&w));
        assert_eq!(self.from_word(&word), w);
        Ok(word)
    }
}

/// The type of the minimal gallery `γ_λ`: λ, its fundamental vertex and a
/// reduced word of `w_λ`.
#[derive(Clone, Debug, Serialize)]
pub struct GalleryType {
    pub lambda: Coweight,
    pub lambda_fund: Coweight,
    /// walls of the fundamental alcove through `lambda_fund`
    pub fund_kind: Vec<usize>,
    pub word: Vec<usize>,
    #[serde(skip)]
    pub w_lambda: AffWeylElt,
}

impl GalleryType {
    pub fn new(aff: &Affine, lambda: &Coweight, word: &[usize]) -> Result<GalleryType, AffineError> {
        if let Some(&i) = word.iter().find(|&&i| i > aff.rank()) {
            return Err(AffineError::BadIndex(i));
        }
        let (wmin, fund, kind) = aff.minimal_element(lambda)?;
        let g = aff.from_word(word);
        if aff.length(&g) != word.len() {
            return Err(AffineError::NotReduced(word.to_vec()));
        }
        if g.act_point(&fund) != *lambda {
            return Err(AffineError::WrongEndpoint(word.to_vec(), lambda.clone()));
        }
        if g != wmin {
            return Err(AffineError::NotMinimal(word.to_vec()));
        }
        let t = GalleryType { lambda: lambda.clone(), lambda_fund: fund, fund_kind: kind, word: word.to_vec(), w_lambda: g };
        let (alcoves, facets) = t.fundamental_faces(aff);
        for f in alcoves.iter().chain(&facets) {
            let x = aff.sample_point(f);
            assert!(aff.datum.is_dominant(&x), "fundamental face outside the dominant chamber");
        }
        Ok(t)
    }

    pub fn minimal(aff: &Affine, lambda: &Coweight) -> Result<GalleryType, AffineError> {
        let word = aff.minimal_word(lambda)?;
        GalleryType::new(aff, lambda, &word)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `Γ_j = s_{i_1}⋯s_{i_j}(A_fund)` for `0 ≤ j ≤ p` and
    /// `Γ′_j = s_{i_1}⋯s_{i_{j-1}}(φ_{i_j})` for `1 ≤ j ≤ p`.
    pub fn fundamental_faces(&self, aff: &Affine) -> (Vec<Face>, Vec<Face>) {
        let mut g = AffWeylElt::identity(aff.rank());
        let mut alcoves = vec![Face::new(g.clone(), vec![])];
        let mut facets = Vec::new();
        for &i in &self.word {
            facets.push(Face::new(g.clone(), vec![i]));
            g = g.compose(aff.simple_reflection(i));
            alcoves.push(Face::new(g.clone(), vec![]));
        }
        (alcoves, facets)
    }

    /// `|{α ∈ Φ₊ : ⟨α,λ⟩ = 0}|`.
    pub fn parabolic_dim(&self, aff: &Affine) -> usize {
        let d = &aff.datum;
        d.positive_roots.iter().filter(|a| d.pairing(a, &self.lambda).is_zero()).count()
    }

    pub fn is_regular(&self, aff: &Affine) -> bool {
        self.parabolic_dim(aff) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Series;

    fn aff(s: Series, n: usize) -> Affine {
        Affine::new(RootDatum::new(s, n).unwrap())
    }

    fn alpha1(a: &Affine, lvl: i64) -> AffineRoot {
        AffineRoot { root: a.datum.simple_root(1), level: lvl }
    }

    #[test]
    fn point_action() {
        let a = aff(Series::A, 2);
        let x = a.datum.rho_coroot().scale(Q::new(1, 4));
        let y = a.simple_reflection(1).act_point(&x);
        assert_eq!(a.datum.simple_pairing(1, &y), Q::new(-1, 4));
        let t = AffWeylElt::translation(a.datum.simple_coroot(1));
        assert_eq!(t.act_point(&Coweight::zero(2)), a.datum.simple_coroot(1));
    }

    #[test]
    fn root_action() {
        let a = aff(Series::A, 1);
        let t = AffWeylElt::translation(a.datum.simple_coroot(1));
        assert_eq!(a.act_root(&t, &alpha1(&a, 0)), alpha1(&a, 2));
        let s1 = a.simple_reflection(1);
        assert_eq!(a.act_root(s1, &alpha1(&a, 0)), AffineRoot { root: Root(vec![-1]), level: 0 });
        let g = t.compose(s1);
        assert_eq!(a.act_root(&g, &alpha1(&a, 3)), AffineRoot { root: Root(vec![-1]), level: 1 });
    }

    #[test]
    fn affine_simple_reflections() {
        let a = aff(Series::A, 1);
        assert_eq!(a.simple_reflection(0).act_point(&Coweight::zero(1)), Coweight::from_ints(&[1]));
        for s in [Series::A, Series::B, Series::G] {
            let a = aff(s, 2);
            for i in 0..=2 {
                let g = a.simple_reflection(i);
                assert!(g.compose(g).is_identity());
                assert_eq!(a.length(g), 1);
            }
            // s_0 fixes a point of H_{θ,1}
            let v = a.vertex(1).clone();
            assert_eq!(a.simple_reflection(0).act_point(&v), v);
        }
    }

    #[test]
    fn face_samples() {
        let a = aff(Series::A, 1);
        let half = Q::new(1, 2);
        assert_eq!(a.sample_point(&a.fundamental_alcove()), Coweight(vec![half / 2]));
        let id = AffWeylElt::identity(1);
        assert_eq!(a.sample_point(&Face::new(id.clone(), vec![1])), Coweight::zero(1));
        assert_eq!(a.sample_point(&Face::new(id, vec![0])), Coweight(vec![half]));
    }

    #[test]
    fn wall_relations() {
        let a = aff(Series::A, 1);
        let id = AffWeylElt::identity(1);
        let origin = Face::new(id, vec![1]);
        assert_eq!(a.wall_relation(&origin, &alpha1(&a, 0)), WallRelation::InWall);
        assert_eq!(a.wall_relation(&a.fundamental_alcove(), &alpha1(&a, 0)), WallRelation::StrictlyPlus);
        assert_eq!(a.wall_relation(&a.fundamental_alcove(), &alpha1(&a, 1)), WallRelation::StrictlyMinus);
    }

    #[test]
    fn plus_sets() {
        for (s, n) in [(Series::A, 2), (Series::B, 3), (Series::C, 2), (Series::D, 4), (Series::G, 2)] {
            let a = aff(s, n);
            let origin = Face::new(AffWeylElt::identity(n), (1..=n).collect());
            assert_eq!(a.phi_plus_aff(&origin, &a.fundamental_alcove()).len(), a.datum.positive_roots.len());
        }
        let a = aff(Series::A, 1);
        let wall0 = Face::new(AffWeylElt::identity(1), vec![0]);
        assert!(a.phi_plus_aff(&wall0, &a.fundamental_alcove()).is_empty());
    }

    #[test]
    fn folding() {
        let a = aff(Series::A, 1);
        let (x, kind, g) = a.fundamentalize(&Coweight::zero(1)).unwrap();
        assert_eq!((x, kind), (Coweight::zero(1), vec![1]));
        assert!(g.is_identity());
        let lam = Coweight::from_ints(&[1]);
        let (x, kind, g) = a.fundamentalize(&lam).unwrap();
        assert_eq!((x.clone(), kind), (Coweight::zero(1), vec![1]));
        assert_eq!(g.act_point(&x), lam);
    }

    #[test]
    fn minimal_words() {
        let a = aff(Series::A, 1);
        assert_eq!(a.minimal_word(&Coweight::zero(1)).unwrap(), Vec::<usize>::new());
        assert_eq!(a.minimal_word(&Coweight::from_ints(&[1])).unwrap(), vec![0]);
        assert!(a.minimal_word(&Coweight::from_ints(&[-1])).is_err());
        let a2 = aff(Series::A, 2);
        let theta = a2.datum.theta_coroot();
        assert_eq!(a2.minimal_word(&theta).unwrap(), vec![0]);
    }

    #[test]
    fn gamma_lambda_faces() {
        let a = aff(Series::A, 1);
        let t = GalleryType::new(&a, &Coweight::from_ints(&[1]), &[0]).unwrap();
        let (alc, fac) = t.fundamental_faces(&a);
        assert_eq!(a.sample_point(&alc[0]), Coweight(vec![Q::new(1, 4)]));
        assert_eq!(a.sample_point(&fac[0]), Coweight(vec![Q::new(1, 2)]));
        assert_eq!(a.sample_point(&alc[1]), Coweight(vec![Q::new(3, 4)]));
        assert!(GalleryType::new(&a, &Coweight::from_ints(&[1]), &[1, 0]).is_err());
        assert!(GalleryType::new(&a, &Coweight::from_ints(&[1]), &[0, 1]).is_err());
    }

    /// `|Φ₊| + p = height(λ − w₀λ) + |{α>0 : ⟨α,λ⟩ = 0}|` for small dominant λ.
    #[test]
    fn gallery_length_identity() {
        for (s, n) in [(Series::A, 2), (Series::A, 3), (Series::B, 2), (Series::C, 3), (Series::G, 2), (Series::D, 4)] {
            let a = aff(s, n);
            let w0 = a.datum.longest_element();
            for lam in a.datum.dominant_coweights_up_to(5, false) {
                let t = GalleryType::minimal(&a, &lam).unwrap();
                let h = a.datum.height(&(&lam - &w0.act(&lam))).unwrap();
                assert_eq!(
                    a.datum.positive_roots.len() + t.len(),
                    h as usize + t.parabolic_dim(&a),
                    "{s}{n} {lam}"
                );
            }
        }
    }

    #[test]
    fn inverse_and_words() {
        let a = aff(Series::B, 2);
        let g = a.from_word(&[0, 1, 2, 0, 1]);
        assert!(a.inverse(&g).compose(&g).is_identity());
        for w in a.enumerate_reduced_words(&g) {
            assert_eq!(a.from_word(&w), g);
            assert_eq!(w.len(), a.length(&g));
        }
    }

    #[test]
    fn relation_is_equivariant() {
        let a = aff(Series::A, 2);
        let movers: Vec<AffWeylElt> = [vec![], vec![0], vec![1, 0], vec![2, 1, 0, 2]].iter().map(|w| a.from_word(w)).collect();
        let faces = [vec![], vec![0], vec![1], vec![1, 2]];
        for g in &movers {
            for h in &movers {
                for k in &faces {
                    let f = Face::new(h.clone(), k.clone());
                    let gf = Face::new(g.compose(h), k.clone());
                    for lvl in -2..=2 {
                        for root in &a.datum.positive_roots {
                            let b = AffineRoot { root: root.clone(), level: lvl };
                            assert_eq!(a.wall_relation(&f, &b), a.wall_relation(&gf, &a.act_root(g, &b)));
                        }
                    }
                }
            }
        }
    }
}
