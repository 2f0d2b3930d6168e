//! Partitions, `λ_r^n`-tableaux, tabloids and the Specht modules `R^λ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::diagram::{Permutation, RookDiagram};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, rat, Rational, SpanBasis, SparseVector};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths, i.e. the conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect() }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "({})", self.parts.iter().join(","))
        }
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `r`, largest first part first (`(3), (2,1), (1,1,1)`).
pub fn partitions_of(r: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every `r ≤ n`, grouped by increasing `r`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// An injective filling of `[λ]` by entries from `{1..n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Tableau {
    shape: Partition,
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::MalformedTableau(format!("row lengths of {rows:?} are not a partition")))?;
        let mut seen = BTreeSet::new();
        for &x in rows.iter().flatten() {
            if x == 0 || x > n {
                return Err(Error::MalformedTableau(format!("entry {x} outside 1..={n}")));
            }
            if !seen.insert(x) {
                return Err(Error::MalformedTableau(format!("entry {x} repeated")));
            }
        }
        Ok(Tableau { shape, n, rows })
    }

    fn fill(shape: &Partition, n: usize, entries: impl IntoIterator<Item = usize>) -> Tableau {
        let mut it = entries.into_iter();
        let rows = shape.parts.iter().map(|&len| it.by_ref().take(len).collect()).collect();
        Tableau { shape: shape.clone(), n, rows }
    }

    /// `t^λ`: `1..r` along successive rows.
    pub fn canonical_row(shape: &Partition, n: usize) -> Result<Self> {
        if shape.size() > n {
            return Err(Error::PartitionTooLarge { size: shape.size(), n });
        }
        Ok(Self::fill(shape, n, 1..=shape.size()))
    }

    /// `t_λ`: `1..r` down successive columns.
    pub fn canonical_col(shape: &Partition, n: usize) -> Result<Self> {
        if shape.size() > n {
            return Err(Error::PartitionTooLarge { size: shape.size(), n });
        }
        let mut rows: Vec<Vec<usize>> = shape.parts.iter().map(|&len| Vec::with_capacity(len)).collect();
        let mut next = 1;
        for col_len in shape.conjugate().parts {
            for row in rows.iter_mut().take(col_len) {
                row.push(next);
                next += 1;
            }
        }
        Ok(Tableau { shape: shape.clone(), n, rows })
    }

    /// Every `λ_r^n`-tableau, in lexicographic order of the row-major reading.
    pub fn all(shape: &Partition, n: usize) -> Result<Vec<Tableau>> {
        let r = shape.size();
        if r > n {
            return Err(Error::PartitionTooLarge { size: r, n });
        }
        Ok((1..=n).permutations(r).map(|word| Self::fill(shape, n, word)).collect())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `𝒞_1, 𝒞_2, ...` as entry lists read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.shape.parts.first().copied().unwrap_or(0);
        (0..width).map(|j| self.rows.iter().filter_map(|row| row.get(j).copied()).collect()).collect()
    }

    /// `cont(t)`, sorted.
    pub fn content(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().sorted().collect()
    }

    pub fn tabloid(&self) -> Tabloid {
        Tabloid::from_rows(self.n, self.rows.clone())
    }

    /// `D t`: each entry `b` moves to the top vertex joined to `b⁻`; `None`
    /// (the zero vector) if some entry is an isolated bottom vertex of `D`.
    pub fn act(&self, d: &RookDiagram) -> Option<Tableau> {
        assert_eq!(d.n(), self.n, "diagram and tableau sizes differ");
        let back = d.star();
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&b| back.image(b)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Tableau { shape: self.shape.clone(), n: self.n, rows })
    }
}

#[derive(Deserialize)]
struct TableauJson {
    shape: Vec<usize>,
    n: usize,
    rows: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(deserializer)?;
        let t = Tableau::new(raw.n, raw.rows).map_err(serde::de::Error::custom)?;
        if t.shape.parts != raw.shape {
            return Err(serde::de::Error::custom("shape does not match row lengths"));
        }
        Ok(t)
    }
}

/// Row-equivalence class of a tableau; rows are stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
    n: usize,
}

impl Serialize for Tabloid {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl Tabloid {
    pub fn from_rows(n: usize, mut rows: Vec<Vec<usize>>) -> Self {
        for row in &mut rows {
            row.sort_unstable();
        }
        Tabloid { rows, n }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn content(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().sorted().collect()
    }

    /// `π{t}`; `None` stands for zero.
    pub fn act(&self, d: &RookDiagram) -> Option<Tabloid> {
        let back = d.star();
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&b| back.image(b)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Tabloid::from_rows(self.n, rows))
    }
}

/// An element of `M^λ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TabloidVector {
    n: usize,
    terms: BTreeMap<Tabloid, Rational>,
}

impl TabloidVector {
    pub fn zero(n: usize) -> Self {
        TabloidVector { n, terms: BTreeMap::new() }
    }

    pub fn basis(t: Tabloid) -> Self {
        TabloidVector { n: t.n, terms: BTreeMap::from([(t, Rational::one())]) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tabloid, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tabloid) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, t: Tabloid, c: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> TabloidVector {
        if c.is_zero() {
            return TabloidVector::zero(self.n);
        }
        TabloidVector { n: self.n, terms: self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect() }
    }

    /// Linear action of an algebra element.
    pub fn act(&self, a: &AlgebraElement) -> Result<TabloidVector> {
        if a.n() != self.n {
            return Err(Error::SizeMismatch { left: a.n(), right: self.n });
        }
        let mut out = TabloidVector::zero(self.n);
        for (d, c) in a.terms() {
            for (t, x) in &self.terms {
                if let Some(image) = t.act(d) {
                    out.add_term(image, c * x);
                }
            }
        }
        Ok(out)
    }
}

impl Serialize for TabloidVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            tabloid: &'a [Vec<usize>],
        }
        let terms: Vec<Term> =
            self.terms.iter().map(|(t, c)| Term { coeff: format_rational(c), tabloid: &t.rows }).collect();
        terms.serialize(serializer)
    }
}

/// `a · v` on `M^λ`.
pub fn act_on_tabloid_vector(a: &AlgebraElement, v: &TabloidVector) -> Result<TabloidVector> {
    v.act(a)
}

/// The permutations in the column stabilizer `C_t`, with their signs.
fn column_group(t: &Tableau) -> Vec<(Permutation, i8)> {
    let n = t.n();
    let columns = t.columns();
    let arrangements = columns.iter().map(|col| col.iter().copied().permutations(col.len()).collect::<Vec<_>>());
    arrangements
        .multi_cartesian_product()
        .map(|choice| {
            let mut images: Vec<usize> = (1..=n).collect();
            for (col, arranged) in columns.iter().zip(&choice) {
                for (&from, &to) in col.iter().zip(arranged) {
                    images[from - 1] = to;
                }
            }
            let w = Permutation::new(images).expect("column arrangements give a bijection");
            let sign = w.sign();
            (w, sign)
        })
        .collect()
}

/// `e_t = Σ_{σ ∈ C_t} sgn(σ) σ{t}`.
pub fn polytabloid(t: &Tableau) -> TabloidVector {
    let base = t.tabloid();
    if t.shape().is_empty() {
        return TabloidVector::basis(base);
    }
    let mut out = TabloidVector::zero(t.n());
    for (w, sign) in column_group(t) {
        let image = base.act(&w.to_diagram()).expect("permutations never kill");
        out.add_term(image, rat(sign as i64));
    }
    out
}

/// `R^λ` as a span of polytabloids inside `M^λ`.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    shape: Partition,
    n: usize,
    coords: Vec<Tabloid>,
    basis: SpanBasis,
}

impl SpechtModule {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.basis.dim()
    }

    /// Tabloids indexing the coordinates, in canonical order.
    pub fn coordinates(&self) -> &[Tabloid] {
        &self.coords
    }

    pub fn basis(&self) -> &SpanBasis {
        &self.basis
    }

    /// Coordinates of `v`; `None` if `v` involves a tabloid outside the
    /// indexed support (and hence lies outside `R^λ`).
    pub fn coordinates_of(&self, v: &TabloidVector) -> Option<SparseVector> {
        let entries = v
            .terms()
            .map(|(t, c)| self.coords.binary_search(t).ok().map(|i| (i, c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(SparseVector::from_entries(self.coords.len(), entries).expect("indices in range"))
    }
}

/// Span of the polytabloids of all `λ_r^n`-tableaux.
pub fn specht_basis(shape: &Partition, n: usize) -> Result<SpechtModule> {
    let vectors: Vec<TabloidVector> = Tableau::all(shape, n)?.iter().map(polytabloid).collect();
    let coords: Vec<Tabloid> =
        vectors.iter().flat_map(|v| v.terms().map(|(t, _)| t.clone())).collect::<BTreeSet<_>>().into_iter().collect();
    let mut module = SpechtModule { shape: shape.clone(), n, coords, basis: SpanBasis::new(0) };
    let mut basis = SpanBasis::new(module.coords.len());
    for v in &vectors {
        basis.insert(module.coordinates_of(v).expect("support was indexed"))?;
    }
    module.basis = basis;
    Ok(module)
}

pub fn specht_dimension(shape: &Partition, n: usize) -> Result<usize> {
    Ok(specht_basis(shape, n)?.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{binomial, enumerate, factorial, Generator};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    /// Brute-force count of standard Young tableaux.
    fn standard_count(shape: &Partition) -> usize {
        let r = shape.size();
        (1..=r)
            .permutations(r)
            .map(|w| Tableau::fill(shape, r, w))
            .filter(|t| {
                t.rows().iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
                    && t.columns().iter().all(|col| col.windows(2).all(|w| w[0] < w[1]))
            })
            .count()
    }

    #[test]
    fn tableau_json() {
        let t = Tableau::canonical_col(&part(&[2, 1]), 4).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"shape":[2,1],"n":4,"rows":[[1,3],[2]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[1,1],"n":4,"rows":[[1,3],[2]]}"#).is_err());
        let tabloid = Tableau::new(3, vec![vec![3, 1], vec![2]]).unwrap().tabloid();
        assert_eq!(serde_json::to_string(&tabloid).unwrap(), "[[1,3],[2]]");
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(partitions_of(5).len(), 7);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }

    #[test]
    fn canonical_tableaux() {
        let t = Tableau::canonical_row(&part(&[2, 1]), 3).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2], vec![3]]);
        let t = Tableau::canonical_col(&part(&[2, 1]), 3).unwrap();
        assert_eq!(t.rows(), &[vec![1, 3], vec![2]]);
        let a = Tableau::canonical_row(&part(&[1, 1]), 2).unwrap();
        let b = Tableau::canonical_col(&part(&[1, 1]), 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.columns(), vec![vec![1, 2]]);
        assert_eq!(Tableau::canonical_row(&part(&[2, 2]), 3), Err(Error::PartitionTooLarge { size: 4, n: 3 }));
        assert!(Tableau::new(3, vec![vec![1, 1]]).is_err());
        assert!(Tableau::new(3, vec![vec![4]]).is_err());
        assert!(Tableau::new(3, vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn tableau_action_examples() {
        let n = 3;
        let p1 = RookDiagram::generator(n, Generator::P(1)).unwrap();
        for lambda in partitions_of(2) {
            for t in Tableau::all(&lambda, n).unwrap() {
                assert_eq!(t.act(&RookDiagram::identity(n)), Some(t.clone()));
                if t.content().contains(&1) {
                    assert_eq!(t.act(&p1), None);
                } else {
                    assert_eq!(t.act(&p1), Some(t.clone()));
                }
            }
        }
        let t = Tableau::new(2, vec![vec![1]]).unwrap();
        let moved = t.act(&RookDiagram::new(&[0, 1]).unwrap()).unwrap();
        assert_eq!(moved.rows(), &[vec![2]]);
    }

    /// The quadruple form of the action: with `D = d1⁻¹ p_1⋯p_s σ d2`, `D t`
    /// vanishes if some `(i)d2`, `i ≤ s`, is an entry, and otherwise sends the
    /// entry `(j)d2` to `(j)σ⁻¹d1`.
    fn act_via_quadruple(d: &RookDiagram, t: &Tableau) -> Option<Tableau> {
        let q = d.factorize();
        if (1..=q.r).any(|i| t.content().contains(&q.d2.apply(i))) {
            return None;
        }
        let sigma_inv = q.sigma.inverse();
        let rows = t
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&b| {
                        let j = (1..=t.n()).find(|&j| q.d2.apply(j) == b).unwrap();
                        q.d1.apply(sigma_inv.apply(j))
                    })
                    .collect()
            })
            .collect();
        Some(Tableau::new(t.n(), rows).unwrap())
    }

    #[test]
    fn edge_rule_matches_quadruple_rule() {
        for n in 1..=3 {
            for lambda in partitions_up_to(n) {
                for t in Tableau::all(&lambda, n).unwrap() {
                    for d in enumerate(n) {
                        assert_eq!(t.act(&d), act_via_quadruple(&d, &t), "{d:?} on {t:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn tableau_action_is_a_left_action() {
        let all = enumerate(3);
        for lambda in partitions_up_to(3) {
            for t in Tableau::all(&lambda, 3).unwrap() {
                for a in &all {
                    for b in &all {
                        let lhs = t.act(&(a * b));
                        let rhs = t.act(b).and_then(|s| s.act(a));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn projector_action_on_tabloids() {
        let n = 3;
        for lambda in partitions_up_to(n) {
            for t in Tableau::all(&lambda, n).unwrap() {
                let v = TabloidVector::basis(t.tabloid());
                for j in 1..=n {
                    let p = AlgebraElement::basis(RookDiagram::generator(n, Generator::P(j)).unwrap());
                    let image = act_on_tabloid_vector(&p, &v).unwrap();
                    if t.content().contains(&j) {
                        assert!(image.is_zero());
                    } else {
                        assert_eq!(image, v);
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_action_is_a_module_action() {
        let perms = Permutation::all(3);
        let t = Tableau::new(3, vec![vec![1, 3], vec![2]]).unwrap();
        let v = polytabloid(&t);
        for s in &perms {
            for w in &perms {
                let ds = AlgebraElement::basis(s.to_diagram());
                let dw = AlgebraElement::basis(w.to_diagram());
                let lhs = v.act(&dw).unwrap().act(&ds).unwrap();
                let rhs = v.act(&ds.mul(&dw).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn polytabloid_examples() {
        let t = Tableau::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(polytabloid(&t), TabloidVector::basis(t.tabloid()));
        let t = Tableau::new(2, vec![vec![1], vec![2]]).unwrap();
        let e = polytabloid(&t);
        assert_eq!(e.len(), 2);
        assert_eq!(e.coeff(&Tabloid::from_rows(2, vec![vec![1], vec![2]])), rat(1));
        assert_eq!(e.coeff(&Tabloid::from_rows(2, vec![vec![2], vec![1]])), rat(-1));
        let empty = Tableau::canonical_row(&Partition::empty(), 3).unwrap();
        assert_eq!(polytabloid(&empty).len(), 1);
    }

    #[test]
    fn polytabloid_sizes_and_content() {
        for r in 0..=4 {
            for lambda in partitions_of(r) {
                let expected: u128 = lambda.conjugate().parts().iter().map(|&c| factorial(c)).product();
                for t in Tableau::all(&lambda, 4).unwrap() {
                    let e = polytabloid(&t);
                    assert_eq!(e.len() as u128, expected);
                    for (tab, _) in e.terms() {
                        assert_eq!(tab.content(), t.content());
                    }
                }
            }
        }
    }

    #[test]
    fn diagrams_send_polytabloids_to_signed_polytabloids() {
        for n in 1..=3 {
            let all = enumerate(n);
            for lambda in partitions_up_to(n) {
                let tableaux = Tableau::all(&lambda, n).unwrap();
                let polys: Vec<TabloidVector> = tableaux.iter().map(polytabloid).collect();
                for (t, e_t) in tableaux.iter().zip(&polys) {
                    for d in &all {
                        let image = e_t.act(&AlgebraElement::basis(d.clone())).unwrap();
                        if t.act(d).is_none() {
                            assert!(image.is_zero());
                        } else {
                            let minus = image.scale(&rat(-1));
                            assert!(polys.iter().any(|e_s| *e_s == image || *e_s == minus), "{d:?} e_{t:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(specht_dimension(&part(&[1]), 2).unwrap(), 2);
        for n in 0..=4 {
            assert_eq!(specht_dimension(&Partition::empty(), n).unwrap(), 1);
        }
        assert!(specht_dimension(&part(&[3]), 2).is_err());
    }

    #[test]
    fn dimensions_factor_through_standard_tableaux() {
        for n in 1..=4 {
            for lambda in partitions_up_to(n) {
                let r = lambda.size();
                let local = specht_dimension(&lambda, r).unwrap();
                assert_eq!(local, standard_count(&lambda), "{lambda}");
                assert_eq!(specht_dimension(&lambda, n).unwrap() as u128, binomial(n, r) * local as u128);
            }
        }
    }

    #[test]
    fn squares_of_dimensions_sum_to_monoid_order() {
        for n in 1..=4 {
            let total: usize = partitions_up_to(n).iter().map(|l| specht_dimension(l, n).unwrap().pow(2)).sum();
            assert_eq!(total as u128, crate::diagram::rook_monoid_order(n));
        }
    }
}
