//! The representation `φ : FR_n → End(U^{⊗n})`, `U = F ⊕ V`, `dim V = m`.
//!
//! Basis tensors `v_{i_1} ⊗ ⋯ ⊗ v_{i_n}` with `i_j ∈ {0..m}` are indexed
//! big-endian in base `m + 1`. Inputs sit on the bottom row of a diagram and
//! outputs on the top row: a diagram sends `v_i` to zero unless `i_b = 0` for
//! every isolated bottom vertex `b`, and otherwise to `v_k` with
//! `k_a = i_{img(a)}` (or `0` when the top vertex `a` is isolated).

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use crate::algebra::{AlgebraElement, DiagramIndex};
use crate::diagram::RookDiagram;
use crate::error::{Error, Result};
use crate::linalg::{Rational, SpanBasis, SparseRationalMatrix, SparseVector};

/// Default refusal threshold for matrix dimensions.
pub const DEFAULT_MAX_CELLS: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCaps {
    /// Largest allowed `(m+1)^n` for a single operator and `(m+1)^{2n}` for
    /// the φ-matrix.
    pub max_cells: u128,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps { max_cells: DEFAULT_MAX_CELLS }
    }
}

impl SizeCaps {
    pub fn check(&self, what: impl Into<String>, value: u128) -> Result<()> {
        if value > self.max_cells {
            return Err(Error::SizeCap { what: what.into(), value, cap: self.max_cells });
        }
        Ok(())
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub fn saturating_pow(base: usize, exp: usize) -> u128 {
    let exp = u32::try_from(exp).unwrap_or(u32::MAX);
    (base as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

/// A basis tensor `v_{i_1} ⊗ ⋯ ⊗ v_{i_n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorIndex {
    m: usize,
    digits: Vec<usize>,
}

impl TensorIndex {
    pub fn new(m: usize, digits: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&i| i > m) {
            return Err(Error::Parse(format!("tensor digit {bad} exceeds m = {m}")));
        }
        Ok(TensorIndex { m, digits })
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    /// `Σ i_j (m+1)^{n-j}`.
    pub fn linear(&self) -> usize {
        self.digits.iter().fold(0, |acc, &i| acc * (self.m + 1) + i)
    }
}

/// `U^{⊗n}` with its basis enumerated.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    m: usize,
    n: usize,
    dim: usize,
}

impl TensorSpace {
    pub fn new(m: usize, n: usize, caps: SizeCaps) -> Result<Self> {
        let dim = saturating_pow(m + 1, n);
        caps.check(format!("(m+1)^n for m={m}, n={n}"), dim)?;
        Ok(TensorSpace { m, n, dim: dim as usize })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self, linear: usize) -> TensorIndex {
        let base = self.m + 1;
        let mut digits = vec![0; self.n];
        let mut x = linear;
        for slot in digits.iter_mut().rev() {
            *slot = x % base;
            x /= base;
        }
        TensorIndex { m: self.m, digits }
    }

    /// Image of the basis tensor `input` under `D`, if nonzero.
    pub fn apply(&self, d: &RookDiagram, input: usize) -> Option<usize> {
        debug_assert_eq!(d.n(), self.n);
        let digits = self.index(input).digits;
        apply_digits(d, &digits, self.m + 1)
    }

    /// Every `(input, output)` pair with `D v_input = v_output`.
    pub fn transitions(&self, d: &RookDiagram) -> Vec<(usize, usize)> {
        let base = self.m + 1;
        let mut digits = vec![0usize; self.n];
        let mut out = Vec::new();
        for input in 0..self.dim {
            if let Some(output) = apply_digits(d, &digits, base) {
                out.push((input, output));
            }
            increment(&mut digits, base);
        }
        out
    }
}

fn increment(digits: &mut [usize], base: usize) {
    for slot in digits.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return;
        }
        *slot = 0;
    }
}

fn apply_digits(d: &RookDiagram, digits: &[usize], base: usize) -> Option<usize> {
    let img = d.raw();
    let mut hit = [false; crate::diagram::MAX_N + 1];
    for &b in img {
        hit[b as usize] = true;
    }
    for (b, &i) in digits.iter().enumerate() {
        if !hit[b + 1] && i != 0 {
            return None;
        }
    }
    Some(img.iter().fold(0, |acc, &b| acc * base + if b == 0 { 0 } else { digits[b as usize - 1] }))
}

/// The `(m+1)^n × (m+1)^n` matrix of `D` (rows are outputs, columns inputs).
pub fn diagram_matrix(d: &RookDiagram, m: usize, caps: SizeCaps) -> Result<SparseRationalMatrix> {
    let space = TensorSpace::new(m, d.n(), caps)?;
    SparseRationalMatrix::from_triplets(
        space.dim(),
        space.dim(),
        space.transitions(d).into_iter().map(|(i, o)| (o, i, Rational::one())),
    )
}

/// `Σ_D coeff(D) · diagram_matrix(D)`.
pub fn element_matrix(a: &AlgebraElement, m: usize, caps: SizeCaps) -> Result<SparseRationalMatrix> {
    let space = TensorSpace::new(m, a.n(), caps)?;
    SparseRationalMatrix::from_triplets(
        space.dim(),
        space.dim(),
        a.terms().flat_map(|(d, c)| space.transitions(d).into_iter().map(move |(i, o)| (o, i, c.clone()))),
    )
}

/// Checks `(m+1)^{2n}` against the cap.
pub fn check_phi_size(m: usize, n: usize, caps: SizeCaps) -> Result<()> {
    caps.check(format!("(m+1)^(2n) for m={m}, n={n}"), saturating_pow(m + 1, 2 * n))
}

/// The `(m+1)^{2n} × |R_n|` matrix whose column for `D` is `diagram_matrix(D)`
/// flattened row-major over `(output, input)`.
pub fn phi_matrix(m: usize, n: usize, caps: SizeCaps) -> Result<SparseRationalMatrix> {
    check_phi_size(m, n, caps)?;
    let space = TensorSpace::new(m, n, caps)?;
    let index = DiagramIndex::new(n);
    let dim = space.dim();
    SparseRationalMatrix::from_triplets(
        dim * dim,
        index.len(),
        index.diagrams().iter().enumerate().flat_map(|(col, d)| {
            space.transitions(d).into_iter().map(move |(i, o)| (o * dim + i, col, Rational::one()))
        }),
    )
}

/// Row space of the φ-matrix, built from its distinct nonzero rows.
///
/// Every row of φ is a 0/1 vector over diagrams, so rows are grouped by
/// support first; the sparsest rows go in first and insertion stops once the
/// span is everything.
pub fn phi_row_space(m: usize, n: usize, index: &DiagramIndex, caps: SizeCaps) -> Result<SpanBasis> {
    check_phi_size(m, n, caps)?;
    assert_eq!(index.n(), n);
    let space = TensorSpace::new(m, n, caps)?;
    let dim = space.dim();
    let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (col, d) in index.diagrams().iter().enumerate() {
        for (i, o) in space.transitions(d) {
            rows.entry(o * dim + i).or_default().push(col);
        }
    }
    let distinct: BTreeSet<(usize, Vec<usize>)> = rows.into_values().map(|cols| (cols.len(), cols)).collect();
    let mut basis = SpanBasis::new(index.len());
    for (_, cols) in distinct {
        if basis.is_full() {
            break;
        }
        let v = SparseVector::from_entries(index.len(), cols.into_iter().map(|c| (c, Rational::one())))?;
        basis.insert(v)?;
    }
    Ok(basis)
}

/// `Ann_{FR_n}(U^{⊗n}) = ker φ` in canonical diagram coordinates.
pub fn annihilator_basis(m: usize, n: usize, caps: SizeCaps) -> Result<SpanBasis> {
    let index = DiagramIndex::new(n);
    annihilator_basis_with(m, &index, caps)
}

pub fn annihilator_basis_with(m: usize, index: &DiagramIndex, caps: SizeCaps) -> Result<SpanBasis> {
    let rows = phi_row_space(m, index.n(), index, caps)?;
    SpanBasis::from_vectors(index.len(), rows.kernel())
}

/// Whether `a` acts as zero on `U^{⊗n}`, without materializing a matrix.
pub fn annihilates(a: &AlgebraElement, m: usize, caps: SizeCaps) -> Result<bool> {
    Ok(element_matrix(a, m, caps)?.is_zero())
}
