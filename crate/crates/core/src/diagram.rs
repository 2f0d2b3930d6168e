//! Rook n-diagrams, i.e. partial injections on `{1..n}`.
//!
//! A diagram is stored as its top-to-bottom image list: `img[a - 1] = b`
//! means the top vertex `a` is joined to the bottom vertex `b⁻`, and `0`
//! marks an isolated top vertex. Multiplication identifies the bottom row of
//! the left factor with the top row of the right factor, so that permutations
//! embedded as rank-n diagrams compose as right permutations:
//! `(i)(vw) = ((i)v)w`.

use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of vertices per row.
pub const MAX_N: usize = u8::MAX as usize;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RookDiagram {
    img: Vec<u8>,
}

/// A standard generator of the rook monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// `s_i`, the transposition of `i` and `i + 1`.
    S(usize),
    /// `p_j`, the identity with vertices `j` and `j⁻` isolated.
    P(usize),
}

impl Generator {
    /// All generators of `R_n` in the order `s_1..s_{n-1}, p_1..p_n`.
    pub fn all(n: usize) -> Vec<Generator> {
        (1..n).map(Generator::S).chain((1..=n).map(Generator::P)).collect()
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S(i) => write!(f, "s_{i}"),
            Generator::P(j) => write!(f, "p_{j}"),
        }
    }
}

impl RookDiagram {
    /// Builds a diagram from its image list, checking that the nonzero
    /// entries are distinct and lie in `1..=n`.
    pub fn new(img: &[usize]) -> Result<Self> {
        let n = img.len();
        if n == 0 {
            return Err(Error::InvalidDiagram { img: img.to_vec(), reason: "n must be at least 1" });
        }
        if n > MAX_N {
            return Err(Error::InvalidDiagram { img: img.to_vec(), reason: "too many vertices" });
        }
        let mut seen = vec![false; n + 1];
        for &b in img {
            if b > n {
                return Err(Error::InvalidDiagram { img: img.to_vec(), reason: "image out of range" });
            }
            if b != 0 {
                if seen[b] {
                    return Err(Error::InvalidDiagram { img: img.to_vec(), reason: "bottom vertex used twice" });
                }
                seen[b] = true;
            }
        }
        Ok(RookDiagram { img: img.iter().map(|&b| b as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "n out of range");
        RookDiagram { img: (1..=n as u8).collect() }
    }

    /// The all-isolated diagram `p_1 p_2 ⋯ p_n`.
    pub fn zero_rank(n: usize) -> Self {
        RookDiagram { img: vec![0; n] }
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        let mut d = RookDiagram::identity(n);
        match g {
            Generator::S(i) => {
                if i == 0 || i >= n {
                    return Err(Error::GeneratorOutOfRange { kind: 's', index: i, n });
                }
                d.img.swap(i - 1, i);
            }
            Generator::P(j) => {
                if j == 0 || j > n {
                    return Err(Error::GeneratorOutOfRange { kind: 'p', index: j, n });
                }
                d.img[j - 1] = 0;
            }
        }
        Ok(d)
    }

    /// `p_{j_1} p_{j_2} ⋯` for the given vertices.
    pub fn projector(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut d = RookDiagram::identity(n);
        for j in vertices {
            d.img[j - 1] = 0;
        }
        d
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// The image list as 1-based labels, `0` for isolated top vertices.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&b| b as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.img
    }

    /// Bottom partner of top vertex `a` (1-based), if any.
    pub fn image(&self, a: usize) -> Option<usize> {
        match self.img[a - 1] {
            0 => None,
            b => Some(b as usize),
        }
    }

    pub fn rank(&self) -> usize {
        self.img.iter().filter(|&&b| b != 0).count()
    }

    /// Number of isolated vertices in each row.
    pub fn isolated_count(&self) -> usize {
        self.n() - self.rank()
    }

    pub fn isolated_top(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&a| self.img[a - 1] == 0).collect()
    }

    pub fn isolated_bottom(&self) -> Vec<usize> {
        let mut hit = vec![false; self.n() + 1];
        for &b in &self.img {
            hit[b as usize] = true;
        }
        (1..=self.n()).filter(|&b| !hit[b]).collect()
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn multiply(&self, other: &RookDiagram) -> Result<RookDiagram> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(self.compose(other))
    }

    /// Concatenation without the size check; callers guarantee equal `n`.
    #[inline]
    pub(crate) fn compose(&self, other: &RookDiagram) -> RookDiagram {
        debug_assert_eq!(self.n(), other.n());
        RookDiagram { img: self.img.iter().map(|&b| if b == 0 { 0 } else { other.img[b as usize - 1] }).collect() }
    }

    /// The inverse partial injection (the `*` anti-automorphism on the basis).
    pub fn star(&self) -> RookDiagram {
        let mut img = vec![0u8; self.n()];
        for (a, &b) in self.img.iter().enumerate() {
            if b != 0 {
                img[b as usize - 1] = (a + 1) as u8;
            }
        }
        RookDiagram { img }
    }

    /// The unique `(d1, d2, r, σ)` with `D = d1⁻¹ p_1⋯p_r σ d2`.
    pub fn factorize(&self) -> Quadruple {
        let n = self.n();
        let r = self.isolated_count();
        let tops: Vec<usize> =
            self.isolated_top().into_iter().chain((1..=n).filter(|&a| self.img[a - 1] != 0)).collect();
        let iso_bottom = self.isolated_bottom();
        let bottoms: Vec<usize> = {
            let mut used: Vec<usize> = self.img.iter().filter(|&&b| b != 0).map(|&b| b as usize).collect();
            used.sort_unstable();
            iso_bottom.into_iter().chain(used).collect()
        };
        let mut position = vec![0usize; n + 1];
        for (slot, &b) in bottoms.iter().enumerate() {
            position[b] = slot + 1;
        }
        let sigma: Vec<usize> =
            (1..=n).map(|j| if j <= r { j } else { position[self.img[tops[j - 1] - 1] as usize] }).collect();
        Quadruple {
            d1: Permutation::from_vec_unchecked(tops),
            d2: Permutation::from_vec_unchecked(bottoms),
            r,
            sigma: Permutation::from_vec_unchecked(sigma),
        }
    }

    /// `ℓ(D) = ℓ(d1) + ℓ(σ) + ℓ(d2)`.
    pub fn length(&self) -> usize {
        let q = self.factorize();
        q.d1.length() + q.sigma.length() + q.d2.length()
    }

    /// `sgn(D) = (-1)^(r + ℓ(D))`.
    pub fn sign(&self) -> i8 {
        if (self.isolated_count() + self.length()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Restriction to the vertices in `support` (sorted), relabelled
    /// order-preservingly to `1..=|support|`. Returns `None` unless the
    /// diagram is the identity off `support`.
    pub fn restrict(&self, support: &[usize]) -> Option<RookDiagram> {
        let n = self.n();
        let mut label = vec![0usize; n + 1];
        for (k, &s) in support.iter().enumerate() {
            label[s] = k + 1;
        }
        if (1..=n).any(|a| label[a] == 0 && self.img[a - 1] as usize != a) {
            return None;
        }
        let img = support
            .iter()
            .map(|&a| match self.img[a - 1] {
                0 => Some(0u8),
                b => match label[b as usize] {
                    0 => None,
                    l => Some(l as u8),
                },
            })
            .collect::<Option<Vec<u8>>>()?;
        Some(RookDiagram { img })
    }

    /// Inverse of [`restrict`](Self::restrict): embeds a diagram on
    /// `|support|` vertices into `R_n`, acting as the identity off `support`.
    pub fn embed(&self, n: usize, support: &[usize]) -> RookDiagram {
        debug_assert_eq!(self.n(), support.len());
        let mut out = RookDiagram::identity(n);
        for (k, &a) in support.iter().enumerate() {
            out.img[a - 1] = match self.img[k] {
                0 => 0,
                b => support[b as usize - 1] as u8,
            };
        }
        out
    }
}

impl Mul for &RookDiagram {
    type Output = RookDiagram;

    fn mul(self, rhs: &RookDiagram) -> RookDiagram {
        assert_eq!(self.n(), rhs.n(), "multiplying diagrams of different sizes");
        self.compose(rhs)
    }
}

impl fmt::Debug for RookDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.img)
    }
}

impl fmt::Display for RookDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.img.iter().join(","))
    }
}

impl Serialize for RookDiagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.img.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RookDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let img = Vec::<usize>::deserialize(deserializer)?;
        RookDiagram::new(&img).map_err(serde::de::Error::custom)
    }
}

/// A bijection on `{1..n}` read as a right permutation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidPermutation { images });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(i)w`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `vw` with `(i)(vw) = ((i)v)w`.
    pub fn then(&self, w: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| w.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Coxeter length, computed as the number of inversions.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i8 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn to_diagram(&self) -> RookDiagram {
        RookDiagram { img: self.images.iter().map(|&i| i as u8).collect() }
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images }).collect()
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::new(images).map_err(serde::de::Error::custom)
    }
}

/// Factorization data `D = d1⁻¹ p_1⋯p_r σ d2`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Quadruple {
    pub d1: Permutation,
    pub d2: Permutation,
    pub r: usize,
    pub sigma: Permutation,
}

impl Quadruple {
    /// Checks `d1, d2 ∈ 𝒟_r` and that `σ` fixes `1..=r`.
    pub fn is_valid(&self) -> bool {
        let n = self.d1.n();
        self.d2.n() == n
            && self.sigma.n() == n
            && self.r <= n
            && is_coset_rep(&self.d1, self.r)
            && is_coset_rep(&self.d2, self.r)
            && (1..=self.r).all(|j| self.sigma.apply(j) == j)
    }

    /// Evaluates `d1⁻¹ · p_1⋯p_r · σ · d2` by diagram multiplication.
    pub fn compose(&self) -> RookDiagram {
        let n = self.d1.n();
        let left = self.d1.inverse().to_diagram();
        let proj = RookDiagram::projector(n, 1..=self.r);
        &(&(&left * &proj) * &self.sigma.to_diagram()) * &self.d2.to_diagram()
    }
}

/// Whether `w` increases on `1..=r` and on `r+1..=n`.
pub fn is_coset_rep(w: &Permutation, r: usize) -> bool {
    let im = w.images();
    im[..r].windows(2).all(|p| p[0] < p[1]) && im[r..].windows(2).all(|p| p[0] < p[1])
}

/// Distinguished right coset representatives `𝒟_r`, in lexicographic order.
pub fn coset_reps(n: usize, r: usize) -> Vec<Permutation> {
    assert!(r <= n);
    let mut reps: Vec<Permutation> = (1..=n)
        .combinations(r)
        .map(|head| {
            let tail = (1..=n).filter(|i| !head.contains(i));
            Permutation { images: head.iter().copied().chain(tail).collect() }
        })
        .collect();
    reps.sort();
    reps
}

/// `Rd_n[r]`: diagrams with exactly `r` isolated vertices per row, sorted
/// lexicographically by image list.
pub fn enumerate_rank_class(n: usize, r: usize) -> Vec<RookDiagram> {
    assert!(r <= n);
    let rank = n - r;
    let mut out = Vec::new();
    for tops in (1..=n).combinations(rank) {
        for bottoms in (1..=n).combinations(rank) {
            for arrangement in bottoms.iter().permutations(rank) {
                let mut img = vec![0u8; n];
                for (&a, &&b) in tops.iter().zip(&arrangement) {
                    img[a - 1] = b as u8;
                }
                out.push(RookDiagram { img });
            }
        }
    }
    out.sort();
    out
}

/// All of `R_n`, sorted lexicographically by image list.
pub fn enumerate(n: usize) -> Vec<RookDiagram> {
    let mut all: Vec<RookDiagram> = (0..=n).flat_map(|r| enumerate_rank_class(n, r)).collect();
    all.sort();
    all
}

/// `Σ_r C(n,r)² r!`, the order of `R_n`.
pub fn rook_monoid_order(n: usize) -> u128 {
    (0..=n).map(|r| rank_class_size(n, n - r)).sum()
}

/// `|Rd_n[r]| = C(n,r)² (n-r)!`.
pub fn rank_class_size(n: usize, r: usize) -> u128 {
    let c = binomial(n, r);
    c * c * factorial(n - r)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
