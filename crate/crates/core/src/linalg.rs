//! Exact sparse linear algebra over the rationals.
//!
//! Everything here is exact: there is no floating point and no modular
//! shortcut. Row spaces are kept in reduced row echelon form with the pivot
//! of each row at its leftmost nonzero entry, which makes the stored basis a
//! canonical invariant of the subspace.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats as `num/den`, always including the denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A vector with explicitly stored nonzero entries, sorted by index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        SparseVector { dim, entries: vec![(index, Rational::one())] }
    }

    /// Collects `(index, value)` pairs, summing duplicates and dropping zeros.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, Rational)>) -> Result<Self> {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in entries {
            if i >= dim {
                return Err(Error::DimensionMismatch { expected: dim, got: i + 1 });
            }
            *acc.entry(i).or_insert_with(Rational::zero) += v;
        }
        Ok(SparseVector { dim, entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect() })
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVector {
            dim: values.len(),
            entries: values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Rational> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
        } else {
            for (_, v) in &mut self.entries {
                *v *= c;
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Rational, other: &SparseVector) {
        debug_assert_eq!(self.dim, other.dim);
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut left = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut right = other.entries.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => merged.push(left.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = right.next().unwrap();
                    merged.push((*j, c * w));
                }
                (Some(_), Some(_)) => {
                    let (i, v) = left.next().unwrap();
                    let (_, w) = right.next().unwrap();
                    let s = v + c * w;
                    if !s.is_zero() {
                        merged.push((i, s));
                    }
                }
                (Some(_), None) => merged.push(left.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = right.next().unwrap();
                    merged.push((*j, c * w));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        let mut acc = Rational::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, v) = &self.entries[a];
            let (j, w) = &other.entries[b];
            match i.cmp(j) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    acc += v * w;
                    a += 1;
                    b += 1;
                }
            }
        }
        acc
    }
}

/// Serialized as an `index: "num/den"` map.
impl Serialize for SparseVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (i, v) in &self.entries {
            map.serialize_entry(&i.to_string(), &format_rational(v))?;
        }
        map.end()
    }
}

impl SparseVector {
    /// Parses the `index: "num/den"` JSON map form.
    pub fn from_json(dim: usize, value: &serde_json::Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| Error::Parse("vector must be a JSON object".into()))?;
        let mut entries = Vec::with_capacity(obj.len());
        for (k, v) in obj {
            let i: usize = k.parse().map_err(|_| Error::Parse(format!("bad index {k:?}")))?;
            let q = match v {
                serde_json::Value::String(s) => parse_rational(s)?,
                serde_json::Value::Number(x) => parse_rational(&x.to_string())?,
                _ => return Err(Error::Parse(format!("bad value at index {i}"))),
            };
            entries.push((i, q));
        }
        SparseVector::from_entries(dim, entries)
    }
}

/// A sparse matrix in coordinate form; stored values are nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseRationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    /// Builds a matrix from triplets; duplicate coordinates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut m = Self::zero(rows, cols);
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::DimensionMismatch { expected: rows.max(cols), got: r.max(c) + 1 });
            }
            m.add_at(r, c, v);
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let triplets =
            rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, rat(v))));
        Self::from_triplets(rows.len(), cols, triplets).expect("rectangular input")
    }

    pub(crate) fn add_at(&mut self, r: usize, c: usize, v: Rational) {
        if v.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry((r, c)) {
            Entry::Vacant(e) => {
                e.insert(v);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn row_vectors(&self) -> Vec<SparseVector> {
        let mut rows = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        rows.into_iter().map(|entries| SparseVector { dim: self.cols, entries }).collect()
    }

    pub fn mul_vector(&self, x: &SparseVector) -> Result<SparseVector> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: x.dim() });
        }
        let dense = x.to_dense();
        let mut out = vec![Rational::zero(); self.rows];
        for (&(r, c), v) in &self.entries {
            if !dense[c].is_zero() {
                out[r] += v * &dense[c];
            }
        }
        Ok(SparseVector::from_dense(&out))
    }

    pub fn matmul(&self, other: &SparseRationalMatrix) -> Result<SparseRationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let right_rows = other.row_vectors();
        let mut out = Self::zero(self.rows, other.cols);
        for (&(r, k), v) in &self.entries {
            for (c, w) in right_rows[k].entries() {
                out.add_at(r, *c, v * w);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SparseRationalMatrix) -> Result<SparseRationalMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, got: other.rows * other.cols });
        }
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_at(r, c, v.clone());
        }
        Ok(out)
    }

    /// Coordinate triplet text: one `row col num/den` line per stored entry,
    /// preceded by a `rows cols` header line.
    pub fn to_triplet_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {}", self.rows, self.cols).unwrap();
        for (&(r, c), v) in &self.entries {
            writeln!(s, "{r} {c} {}", format_rational(v)).unwrap();
        }
        s
    }

    pub fn from_triplet_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse(format!("bad header {header:?}")));
        };
        let mut m = Self::zero(rows, cols);
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [r, c, v] = fields[..] else {
                return Err(Error::Parse(format!("bad triplet line {line:?}")));
            };
            let r: usize = r.parse().map_err(|_| Error::Parse(format!("bad row in {line:?}")))?;
            let c: usize = c.parse().map_err(|_| Error::Parse(format!("bad column in {line:?}")))?;
            if r >= rows || c >= cols {
                return Err(Error::Parse(format!("coordinate out of range in {line:?}")));
            }
            if m.entries.contains_key(&(r, c)) {
                return Err(Error::Parse(format!("duplicate coordinate in {line:?}")));
            }
            m.add_at(r, c, parse_rational(v)?);
        }
        Ok(m)
    }
}

/// A subspace of `Q^dim` held as reduced row echelon rows keyed by pivot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanBasis {
    dim: usize,
    rows: BTreeMap<usize, SparseVector>,
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis { dim, rows: BTreeMap::new() }
    }

    pub fn from_vectors(dim: usize, vectors: impl IntoIterator<Item = SparseVector>) -> Result<Self> {
        let mut b = SpanBasis::new(dim);
        for v in vectors {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the spanned subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Basis rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVector> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    fn check_dim(&self, v: &SparseVector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.dim() });
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVector) -> Result<SparseVector> {
        self.check_dim(v)?;
        // Rows vanish on each other's pivots, so the pivot coefficients of
        // `v` are not disturbed by earlier subtractions.
        let hits: Vec<(usize, Rational)> =
            v.entries().iter().filter(|(i, _)| self.rows.contains_key(i)).map(|(i, c)| (*i, -c)).collect();
        let mut out = v.clone();
        for (p, c) in hits {
            out.axpy(&c, &self.rows[&p]);
        }
        Ok(out)
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVector) -> Result<bool> {
        let mut w = self.reduce(&v)?;
        let Some((pivot, lead)) = w.leading() else {
            return Ok(false);
        };
        let inv = lead.recip();
        w.scale(&inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(pivot) {
                let c = -c;
                row.axpy(&c, &w);
            }
        }
        self.rows.insert(pivot, w);
        Ok(true)
    }

    pub fn contains_all(&self, other: &SpanBasis) -> Result<bool> {
        for row in other.rows() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of spans by mutual containment.
    pub fn span_equal(&self, other: &SpanBasis) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        Ok(self.dim() == other.dim() && self.contains_all(other)? && other.contains_all(self)?)
    }

    /// Basis of `{x : r·x = 0 for every row r}` (the kernel of the matrix
    /// whose rows span this subspace), one vector per non-pivot column.
    pub fn kernel(&self) -> Vec<SparseVector> {
        let mut out = Vec::with_capacity(self.dim - self.dim());
        for free in (0..self.dim).filter(|c| !self.rows.contains_key(c)) {
            let mut entries = vec![(free, Rational::one())];
            for (&p, row) in &self.rows {
                if let Some(c) = row.get(free) {
                    entries.push((p, -c));
                }
            }
            entries.sort_by_key(|(i, _)| *i);
            out.push(SparseVector { dim: self.dim, entries });
        }
        out
    }
}

/// Row space of `m` in reduced echelon form. Rows are inserted sparsest
/// first (ties by row index) to limit fill-in; the result does not depend
/// on the order.
pub fn row_space(m: &SparseRationalMatrix) -> SpanBasis {
    let mut rows: Vec<(usize, SparseVector)> = m.row_vectors().into_iter().enumerate().collect();
    rows.sort_by_key(|(i, v)| (v.nnz(), *i));
    let mut basis = SpanBasis::new(m.cols());
    for (_, v) in rows {
        if basis.is_full() {
            break;
        }
        basis.insert(v).expect("row length equals column count");
    }
    basis
}

pub fn rank(m: &SparseRationalMatrix) -> usize {
    row_space(m).dim()
}

/// Basis of `{x : Mx = 0}`.
pub fn nullspace(m: &SparseRationalMatrix) -> Vec<SparseVector> {
    row_space(m).kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v(values: &[i64]) -> SparseVector {
        SparseVector::from_dense(&values.iter().map(|&x| rat(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rational_text_round_trip() {
        assert_eq!(format_rational(&rat_frac(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(3)), "3/1");
        assert_eq!(parse_rational("-1/2").unwrap(), rat_frac(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseRationalMatrix::zero(3, 3)), 0);
        assert_eq!(rank(&SparseRationalMatrix::identity(4)), 4);
        assert_eq!(rank(&SparseRationalMatrix::from_dense(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&SparseRationalMatrix::identity(3)).is_empty());
        let ns = nullspace(&SparseRationalMatrix::from_dense(&[vec![1, 1]]));
        assert_eq!(ns.len(), 1);
        let x = &ns[0];
        assert_eq!(x.get(0).unwrap(), &-x.get(1).unwrap().clone());
    }

    #[test]
    fn rank_nullity_on_random_matrices() {
        for seed in 0..40u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let triplets: Vec<_> = (0..rng.gen_range(0..rows * cols + 1))
                .map(|_| {
                    (
                        rng.gen_range(0..rows),
                        rng.gen_range(0..cols),
                        rat_frac(rng.gen_range(-5..6), rng.gen_range(1..4)),
                    )
                })
                .collect();
            let m = SparseRationalMatrix::from_triplets(rows, cols, triplets).unwrap();
            let ns = nullspace(&m);
            assert_eq!(ns.len() + rank(&m), cols);
            for x in &ns {
                assert!(m.mul_vector(x).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn span_insert_examples() {
        let mut b = SpanBasis::new(2);
        assert!(b.insert(v(&[1, 0])).unwrap());
        assert_eq!(b.dim(), 1);
        assert!(b.insert(v(&[0, 1])).unwrap());
        assert_eq!(b.dim(), 2);
        assert!(!b.insert(v(&[1, 1])).unwrap());
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&SparseVector::zero(2)).unwrap());
        assert!(SpanBasis::new(3).contains(&SparseVector::zero(3)).unwrap());
        assert!(b.insert(SparseVector::zero(3)).is_err());
    }

    #[test]
    fn span_is_order_independent() {
        let vectors = [v(&[1, 2, 0, 3]), v(&[0, 1, 1, 0]), v(&[2, 5, 1, 6]), v(&[0, 0, 0, 1])];
        let a = SpanBasis::from_vectors(4, vectors.iter().cloned()).unwrap();
        let b = SpanBasis::from_vectors(4, vectors.iter().rev().cloned()).unwrap();
        assert_eq!(a, b);
        assert!(a.span_equal(&b).unwrap());
        let c = SpanBasis::from_vectors(4, vectors[..2].iter().cloned()).unwrap();
        assert!(!a.span_equal(&c).unwrap());
        assert!(a.contains_all(&c).unwrap());
    }

    #[test]
    fn triplet_text_round_trip() {
        let m = SparseRationalMatrix::from_triplets(3, 2, vec![(0, 1, rat_frac(1, 2)), (2, 0, rat(-3))]).unwrap();
        let text = m.to_triplet_text();
        assert_eq!(text, "3 2\n0 1 1/2\n2 0 -3/1\n");
        assert_eq!(SparseRationalMatrix::from_triplet_text(&text).unwrap(), m);
        assert!(SparseRationalMatrix::from_triplet_text("2 2\n0 0 1\n0 0 2\n").is_err());
        assert!(SparseRationalMatrix::from_triplet_text("2 2\n5 0 1\n").is_err());
    }

    #[test]
    fn vector_json_round_trip() {
        let x = SparseVector::from_entries(5, vec![(1, rat_frac(2, 3)), (4, rat(-1))]).unwrap();
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(json, serde_json::json!({"1": "2/3", "4": "-1/1"}));
        assert_eq!(SparseVector::from_json(5, &json).unwrap(), x);
    }

    #[test]
    fn matmul_matches_dense() {
        let a = SparseRationalMatrix::from_dense(&[vec![1, 2], vec![0, 1], vec![3, 0]]);
        let b = SparseRationalMatrix::from_dense(&[vec![0, 1, 1], vec![1, 0, -1]]);
        let c = a.matmul(&b).unwrap();
        assert_eq!(c, SparseRationalMatrix::from_dense(&[vec![2, 1, -1], vec![1, 0, -1], vec![0, 3, 3]]));
        assert!(b.matmul(&b).is_err());
    }
}
