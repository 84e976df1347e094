//! Finite root data of types A, B, C, D and G up to rank four.
//!
//! Roots are integer vectors in the simple-root basis, coweights are exact
//! rational vectors in the simple-coroot basis. The two live in different
//! types so that the pairing can only ever be taken between a root and a
//! coweight. Simple indices are 1-based throughout (`1..=rank`).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Q = num::rational::Rational64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("unsupported root datum {0}{1}")]
    Unsupported(Series, usize),
    #[error("unknown series letter {0:?}")]
    BadSeries(String),
    #[error("coweight {0} is not in the coroot lattice")]
    NotInCorootLattice(Coweight),
    #[error("coweight has {got} coordinates, datum has rank {rank}")]
    Rank { got: usize, rank: usize },
    #[error("{0} is not dominant")]
    NotDominant(Coweight),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Series {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "G" => Ok(Series::G),
            other => Err(RootError::BadSeries(other.to_string())),
        }
    }
}

/// A root, in coordinates over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

/// An element of the coweight space, in coordinates over the simple coroots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<Q>);

impl Coweight {
    pub fn zero(rank: usize) -> Coweight {
        Coweight(vec![Q::zero(); rank])
    }

    pub fn from_ints(c: &[i64]) -> Coweight {
        Coweight(c.iter().map(|&x| Q::from_integer(x)).collect())
    }

    pub fn simple_coroot(rank: usize, i: usize) -> Coweight {
        let mut v = Coweight::zero(rank);
        v.0[i - 1] = Q::one();
        v
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: Q) -> Coweight {
        Coweight(self.0.iter().map(|c| c * k).collect())
    }

    /// Integer coordinates, if the coweight lies in the coroot lattice.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Coweight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, o: &Coweight) -> Coweight {
        assert_eq!(self.rank(), o.rank());
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, o: &Coweight) -> Coweight {
        assert_eq!(self.rank(), o.rank());
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }
}

/// Parse comma separated coordinates such as `1,0,-1` or `1/2,1`.
pub fn parse_coweight(s: &str) -> Result<Coweight, String> {
    s.split(',')
        .map(|t| t.trim().parse::<Q>().map_err(|e| format!("bad coordinate {t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Coweight)
}

/// Weyl group element, stored by its matrices on the simple coroots
/// (column j is the image of the j-th simple coroot) and on the simple roots.
/// Equality and hashing only look at the coroot matrix.
#[derive(Clone, Debug)]
pub struct WeylElt {
    rank: usize,
    coroot_mat: Vec<i64>,
    root_mat: Vec<i64>,
}

impl PartialEq for WeylElt {
    fn eq(&self, o: &Self) -> bool {
        self.coroot_mat == o.coroot_mat
    }
}
impl Eq for WeylElt {}
impl std::hash::Hash for WeylElt {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.coroot_mat.hash(h)
    }
}
impl PartialOrd for WeylElt {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for WeylElt {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.coroot_mat.cmp(&o.coroot_mat)
    }
}

fn mat_mul(r: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let aik = a[i * r + k];
            if aik == 0 {
                continue;
            }
            for j in 0..r {
                out[i * r + j] += aik * b[k * r + j];
            }
        }
    }
    out
}

fn identity(r: usize) -> Vec<i64> {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

impl WeylElt {
    pub fn identity(rank: usize) -> WeylElt {
        WeylElt { rank, coroot_mat: identity(rank), root_mat: identity(rank) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coroot_matrix(&self) -> &[i64] {
        &self.coroot_mat
    }

    pub fn is_identity(&self) -> bool {
        self.coroot_mat == identity(self.rank)
    }

    pub fn compose(&self, o: &WeylElt) -> WeylElt {
        WeylElt {
            rank: self.rank,
            coroot_mat: mat_mul(self.rank, &self.coroot_mat, &o.coroot_mat),
            root_mat: mat_mul(self.rank, &self.root_mat, &o.root_mat),
        }
    }

    pub fn act(&self, v: &Coweight) -> Coweight {
        let r = self.rank;
        assert_eq!(v.rank(), r, "coweight rank mismatch");
        Coweight(
            (0..r)
                .map(|i| (0..r).fold(Q::zero(), |acc, j| acc + v.0[j] * self.coroot_mat[i * r + j]))
                .collect(),
        )
    }

    pub fn act_root(&self, a: &Root) -> Root {
        let r = self.rank;
        assert_eq!(a.0.len(), r, "root rank mismatch");
        Root((0..r).map(|i| (0..r).map(|j| self.root_mat[i * r + j] * a.0[j]).sum()).collect())
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub series: Series,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>`.
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    /// Coroot of `positive_roots[k]`, in the simple-coroot basis.
    pub positive_coroots: Vec<Vec<i64>>,
    pub highest_root: Root,
    pub marks: Vec<i64>,
    root_index: HashMap<Root, usize>,
    simple: Vec<WeylElt>,
    inv_cartan: Vec<Vec<Q>>,
}

fn cartan_matrix(series: Series, n: usize) -> Result<Vec<Vec<i64>>, RootError> {
    let ok = match series {
        Series::A => (1..=4).contains(&n),
        Series::B | Series::C => (2..=4).contains(&n),
        Series::D => (3..=4).contains(&n),
        Series::G => n == 2,
    };
    if !ok {
        return Err(RootError::Unsupported(series, n));
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match series {
        Series::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n short
            link(n - 1, n, -2, -1);
        }
        Series::C => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            // alpha_n long
            link(n - 1, n, -1, -2);
        }
        Series::D => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n, -1, -1);
        }
        Series::G => link(1, 2, -1, -3), // alpha_1 short
    }
    Ok(a)
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("singular Cartan matrix");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    inv
}

impl RootDatum {
    pub fn new(series: Series, rank: usize) -> Result<RootDatum, RootError> {
        let cartan = cartan_matrix(series, rank)?;
        let r = rank;
        let simple: Vec<WeylElt> = (1..=r)
            .map(|i| {
                let mut cm = identity(r);
                let mut rm = identity(r);
                // s_i(alpha_j^vee) = alpha_j^vee - <alpha_i, alpha_j^vee> alpha_i^vee
                for j in 0..r {
                    cm[(i - 1) * r + j] -= cartan[i - 1][j];
                    // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
                    rm[(i - 1) * r + j] -= cartan[j][i - 1];
                }
                WeylElt { rank: r, coroot_mat: cm, root_mat: rm }
            })
            .collect();

        // Reflection closure on (root, coroot) pairs.
        let mut seen: HashMap<Root, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 1..=r {
            let a = Root::simple(r, i);
            let mut c = vec![0; r];
            c[i - 1] = 1;
            seen.insert(a.clone(), c.clone());
            queue.push_back((a, c));
        }
        while let Some((a, c)) = queue.pop_front() {
            for s in &simple {
                let b = s.act_root(&a);
                if !seen.contains_key(&b) {
                    let cv = s.act(&Coweight::from_ints(&c)).integer_coords().unwrap();
                    seen.insert(b.clone(), cv.clone());
                    queue.push_back((b, cv));
                }
            }
        }
        let mut pos: Vec<(Root, Vec<i64>)> = seen.into_iter().filter(|(a, _)| a.is_positive()).collect();
        pos.sort_by(|x, y| (x.0.height(), &x.0).cmp(&(y.0.height(), &y.0)));
        let highest_root = pos.last().unwrap().0.clone();
        let marks = highest_root.0.clone();
        let root_index = pos.iter().enumerate().map(|(k, (a, _))| (a.clone(), k)).collect();
        let inv_cartan = invert_rational(&cartan);
        Ok(RootDatum {
            series,
            rank,
            cartan,
            positive_roots: pos.iter().map(|p| p.0.clone()).collect(),
            positive_coroots: pos.into_iter().map(|p| p.1).collect(),
            highest_root,
            marks,
            root_index,
            simple,
            inv_cartan,
        })
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    fn check_rank(&self, v: &Coweight) {
        assert_eq!(v.rank(), self.rank, "coweight of rank {} used with {}", v.rank(), self.name());
    }

    pub fn pairing(&self, a: &Root, v: &Coweight) -> Q {
        self.check_rank(v);
        assert_eq!(a.0.len(), self.rank, "root rank mismatch");
        let mut s = Q::zero();
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, vj) in v.0.iter().enumerate() {
                s += vj * (ai * self.cartan[i][j]);
            }
        }
        s
    }

    /// `<alpha_i, v>` for a simple index `i`.
    pub fn simple_pairing(&self, i: usize, v: &Coweight) -> Q {
        self.check_rank(v);
        v.0.iter().enumerate().fold(Q::zero(), |acc, (j, c)| acc + c * self.cartan[i - 1][j])
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight::simple_coroot(self.rank, i)
    }

    pub fn is_root(&self, a: &Root) -> bool {
        self.root_index.contains_key(a) || self.root_index.contains_key(&-a)
    }

    pub fn coroot_of(&self, a: &Root) -> Option<Coweight> {
        if let Some(&k) = self.root_index.get(a) {
            return Some(Coweight::from_ints(&self.positive_coroots[k]));
        }
        self.root_index.get(&-a).map(|&k| -&Coweight::from_ints(&self.positive_coroots[k]))
    }

    pub fn positive_coroot(&self, k: usize) -> Coweight {
        Coweight::from_ints(&self.positive_coroots[k])
    }

    pub fn theta_coroot(&self) -> Coweight {
        self.coroot_of(&self.highest_root).unwrap()
    }

    /// Fundamental coweight dual to `alpha_i`.
    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        Coweight((0..self.rank).map(|k| self.inv_cartan[k][i - 1]).collect())
    }

    pub fn from_fundamental(&self, a: &[i64]) -> Coweight {
        assert_eq!(a.len(), self.rank);
        let mut v = Coweight::zero(self.rank);
        for (i, &ai) in a.iter().enumerate() {
            v = &v + &self.fundamental_coweight(i + 1).scale(Q::from_integer(ai));
        }
        v
    }

    /// Half the sum of the positive coroots.
    pub fn rho_coroot(&self) -> Coweight {
        let mut v = Coweight::zero(self.rank);
        for k in 0..self.positive_roots.len() {
            v = &v + &self.positive_coroot(k);
        }
        v.scale(Q::new(1, 2))
    }

    pub fn is_dominant(&self, v: &Coweight) -> bool {
        (1..=self.rank).all(|i| self.simple_pairing(i, v) >= Q::zero())
    }

    /// True when v pairs integrally with every root.
    pub fn in_coweight_lattice(&self, v: &Coweight) -> bool {
        (1..=self.rank).all(|i| self.simple_pairing(i, v).is_integer())
    }

    pub fn height(&self, v: &Coweight) -> Result<i64, RootError> {
        self.check_rank(v);
        v.integer_coords()
            .map(|c| c.iter().sum())
            .ok_or_else(|| RootError::NotInCorootLattice(v.clone()))
    }

    /// `mu <= lambda`: the difference is a nonnegative integer combination of simple coroots.
    pub fn dominance_leq(&self, mu: &Coweight, lambda: &Coweight) -> bool {
        match (lambda - mu).integer_coords() {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    pub fn simple_reflection(&self, i: usize) -> &WeylElt {
        &self.simple[i - 1]
    }

    pub fn weyl_from_word(&self, word: &[usize]) -> WeylElt {
        word.iter().fold(WeylElt::identity(self.rank), |w, &i| w.compose(self.simple_reflection(i)))
    }

    /// Reflection `v -> v - <a, v> a^vee` for an arbitrary root.
    pub fn reflection(&self, a: &Root) -> WeylElt {
        let r = self.rank;
        let av = self.coroot_of(a).expect("not a root").integer_coords().unwrap();
        let mut cm = identity(r);
        let mut rm = identity(r);
        for j in 0..r {
            let pj = self.pairing(a, &self.simple_coroot(j + 1)).to_integer();
            let qj = self.pairing(&self.simple_root(j + 1), &Coweight::from_ints(&av)).to_integer();
            for i in 0..r {
                cm[i * r + j] -= pj * av[i];
                rm[i * r + j] -= qj * a.0[i];
            }
        }
        WeylElt { rank: r, coroot_mat: cm, root_mat: rm }
    }

    /// Inverse through pairing invariance: `M^-1 = P^-1 N^T P` where M, N are
    /// the coroot and root matrices and P the Cartan matrix.
    pub fn inverse(&self, w: &WeylElt) -> WeylElt {
        let r = self.rank;
        let p = |i: usize, j: usize| Q::from_integer(self.cartan[i][j]);
        let n = |i: usize, j: usize| Q::from_integer(w.root_mat[i * r + j]);
        let m = |i: usize, j: usize| Q::from_integer(w.coroot_mat[i * r + j]);
        let mut cm = vec![0; r * r];
        let mut rm = vec![0; r * r];
        for i in 0..r {
            for j in 0..r {
                let mut a = Q::zero();
                let mut b = Q::zero();
                for k in 0..r {
                    for l in 0..r {
                        // (P^-1 N^T P)_{ij} and (P^-T M^T P^T)_{ij}
                        a += self.inv_cartan[i][k] * n(l, k) * p(l, j);
                        b += self.inv_cartan[k][i] * m(l, k) * p(j, l);
                    }
                }
                cm[i * r + j] = a.to_integer();
                rm[i * r + j] = b.to_integer();
            }
        }
        WeylElt { rank: r, coroot_mat: cm, root_mat: rm }
    }

    pub fn length(&self, w: &WeylElt) -> usize {
        self.positive_roots.iter().filter(|a| !w.act_root(a).is_positive()).count()
    }

    pub fn weyl_group(&self) -> Vec<WeylElt> {
        let id = WeylElt::identity(self.rank);
        let mut seen: HashSet<WeylElt> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for s in &self.simple {
                let u = w.compose(s);
                if seen.insert(u.clone()) {
                    order.push(u.clone());
                    queue.push_back(u);
                }
            }
        }
        order
    }

    pub fn longest_element(&self) -> WeylElt {
        // Build w0 by right-multiplying ascents until none remain.
        let mut w = WeylElt::identity(self.rank);
        let mut len = 0;
        loop {
            let next = (1..=self.rank).find_map(|i| {
                let u = w.compose(self.simple_reflection(i));
                (self.length(&u) > len).then_some(u)
            });
            match next {
                Some(u) => {
                    w = u;
                    len += 1;
                }
                None => return w,
            }
        }
    }

    /// The lexicographically least reduced word of w.
    pub fn reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        let mut len = self.length(&cur);
        while len > 0 {
            let i = (1..=self.rank)
                .find(|&i| self.length(&self.simple_reflection(i).compose(&cur)) < len)
                .expect("nonidentity element has a left descent");
            word.push(i);
            cur = self.simple_reflection(i).compose(&cur);
            len -= 1;
        }
        word
    }

    pub fn enumerate_reduced_words(&self, w: &WeylElt) -> Vec<Vec<usize>> {
        let mut memo = HashMap::new();
        let mut words = self.words_rec(w, &mut memo);
        words.sort();
        words
    }

    fn words_rec(&self, w: &WeylElt, memo: &mut HashMap<WeylElt, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let len = self.length(w);
        let out = if len == 0 {
            vec![vec![]]
        } else {
            let mut out = Vec::new();
            for i in 1..=self.rank {
                let u = w.compose(self.simple_reflection(i));
                if self.length(&u) < len {
                    for mut word in self.words_rec(&u, memo) {
                        word.push(i);
                        out.push(word);
                    }
                }
            }
            out
        };
        memo.insert(w.clone(), out.clone());
        out
    }

    /// The dominant element of the W-orbit of v.
    pub fn dominant_conjugate(&self, v: &Coweight) -> Coweight {
        let mut x = v.clone();
        while let Some(i) = (1..=self.rank).find(|&i| self.simple_pairing(i, &x) < Q::zero()) {
            x = self.simple_reflection(i).act(&x);
        }
        x
    }

    /// Dominant coweights with nonnegative coroot-coordinate sum at most `bound`,
    /// zero excluded; `coroot_lattice` restricts to the coroot lattice.
    pub fn dominant_coweights_up_to(&self, bound: i64, coroot_lattice: bool) -> Vec<Coweight> {
        let r = self.rank;
        let fund: Vec<Coweight> = (1..=r).map(|i| self.fundamental_coweight(i)).collect();
        let sums: Vec<Q> = fund.iter().map(|f| f.0.iter().sum()).collect();
        let mut out = Vec::new();
        let mut coeffs = vec![0i64; r];
        loop {
            let total: Q = coeffs.iter().zip(&sums).map(|(&c, s)| s * c).sum();
            if total <= Q::from_integer(bound) && coeffs.iter().any(|&c| c > 0) {
                let v = self.from_fundamental(&coeffs);
                if !coroot_lattice || v.integer_coords().is_some() {
                    out.push(v);
                }
            }
            // odometer over coefficient vectors, pruned by the bound
            let mut k = 0;
            loop {
                if k == r {
                    out.sort_by(|a, b| (a.0.iter().sum::<Q>(), a).cmp(&(b.0.iter().sum::<Q>(), b)));
                    return out;
                }
                coeffs[k] += 1;
                let t: Q = coeffs.iter().zip(&sums).map(|(&c, s)| s * c).sum();
                if t <= Q::from_integer(bound) {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
    }
}
