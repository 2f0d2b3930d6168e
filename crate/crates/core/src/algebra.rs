//! Elements of the rook monoid algebra `FR_n` on the diagram basis.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::{self, Permutation, RookDiagram};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, rat, Rational, SparseVector};
use crate::specht::Tableau;

/// A finitely supported map from rook diagrams to rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<RookDiagram, Rational>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        AlgebraElement { n, terms: BTreeMap::new() }
    }

    /// The basis element `δ_D`.
    pub fn basis(d: RookDiagram) -> Self {
        let n = d.n();
        AlgebraElement { n, terms: BTreeMap::from([(d, Rational::one())]) }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(RookDiagram::identity(n))
    }

    /// Sums repeated diagrams and drops zero coefficients.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (RookDiagram, Rational)>) -> Result<Self> {
        let mut acc: HashMap<RookDiagram, Rational> = HashMap::new();
        for (d, c) in terms {
            if d.n() != n {
                return Err(Error::SizeMismatch { left: n, right: d.n() });
            }
            *acc.entry(d).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_accumulator(n, acc))
    }

    fn from_accumulator(n: usize, acc: HashMap<RookDiagram, Rational>) -> Self {
        AlgebraElement { n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of diagrams with a nonzero coefficient.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&RookDiagram, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &RookDiagram) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_n(&self, other: &AlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            let entry = out.terms.entry(d.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(d);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.n);
        }
        AlgebraElement { n: self.n, terms: self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect() }
    }

    /// Bilinear extension of diagram concatenation.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_n(other)?;
        let mut acc: HashMap<RookDiagram, Rational> = HashMap::with_capacity(self.len().max(other.len()));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                *acc.entry(a.compose(b)).or_insert_with(Rational::zero) += x * y;
            }
        }
        Ok(Self::from_accumulator(self.n, acc))
    }

    /// `δ_D · self`.
    pub fn left_mul_diagram(&self, d: &RookDiagram) -> AlgebraElement {
        let mut acc: HashMap<RookDiagram, Rational> = HashMap::with_capacity(self.len());
        for (b, y) in &self.terms {
            *acc.entry(d.compose(b)).or_insert_with(Rational::zero) += y;
        }
        Self::from_accumulator(self.n, acc)
    }

    /// `self · δ_D`.
    pub fn right_mul_diagram(&self, d: &RookDiagram) -> AlgebraElement {
        let mut acc: HashMap<RookDiagram, Rational> = HashMap::with_capacity(self.len());
        for (a, x) in &self.terms {
            *acc.entry(a.compose(d)).or_insert_with(Rational::zero) += x;
        }
        Self::from_accumulator(self.n, acc)
    }

    /// Applies `*` termwise.
    pub fn star(&self) -> AlgebraElement {
        AlgebraElement { n: self.n, terms: self.terms.iter().map(|(d, c)| (d.star(), c.clone())).collect() }
    }

    /// Coordinates in the canonical diagram order of `index`.
    pub fn to_vector(&self, index: &DiagramIndex) -> SparseVector {
        assert_eq!(self.n, index.n());
        SparseVector::from_entries(index.len(), self.terms.iter().map(|(d, c)| (index.position(d), c.clone())))
            .expect("positions come from the index")
    }

    pub fn from_vector(index: &DiagramIndex, v: &SparseVector) -> Result<AlgebraElement> {
        if v.dim() != index.len() {
            return Err(Error::DimensionMismatch { expected: index.len(), got: v.dim() });
        }
        Ok(AlgebraElement {
            n: index.n(),
            terms: v.entries().iter().map(|(i, c)| (index.diagram(*i).clone(), c.clone())).collect(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    diagram: RookDiagram,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| TermJson { coeff: format_rational(c), diagram: d.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ElementJson::deserialize(deserializer)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| parse_rational(&t.coeff).map(|c| (t.diagram, c)))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        AlgebraElement::from_terms(raw.n, terms).map_err(serde::de::Error::custom)
    }
}

/// Position of every diagram of `R_n` in canonical (lexicographic) order.
#[derive(Clone, Debug)]
pub struct DiagramIndex {
    n: usize,
    diagrams: Vec<RookDiagram>,
    positions: HashMap<RookDiagram, usize>,
}

impl DiagramIndex {
    pub fn new(n: usize) -> Self {
        let diagrams = diagram::enumerate(n);
        let positions = diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        DiagramIndex { n, diagrams, positions }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn diagrams(&self) -> &[RookDiagram] {
        &self.diagrams
    }

    pub fn diagram(&self, i: usize) -> &RookDiagram {
        &self.diagrams[i]
    }

    pub fn position(&self, d: &RookDiagram) -> usize {
        self.positions[d]
    }
}

/// A subset `S ⊆ {1..n}`, kept sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSubset {
    n: usize,
    elems: Vec<usize>,
}

impl VertexSubset {
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::InvalidSubset { subset: elems, n });
        }
        Ok(VertexSubset { n, elems })
    }

    /// `{1, .., k}`.
    pub fn initial(n: usize, k: usize) -> Result<Self> {
        Self::new(n, 1..=k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

fn embed_terms(s: &VertexSubset, local: impl IntoIterator<Item = (RookDiagram, Rational)>) -> AlgebraElement {
    AlgebraElement { n: s.n, terms: local.into_iter().map(|(d, c)| (d.embed(s.n, &s.elems), c)).collect() }
}

/// `X_S = Σ_{σ ∈ 𝔖_S} σ + Σ_{r ≥ 1} (-1)^r r! Σ_{D ∈ Rd_S[r]} D`.
pub fn symmetrizer_x(s: &VertexSubset) -> Result<AlgebraElement> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let k = s.len();
    let local = (0..=k).flat_map(|r| {
        let mut c = rat(diagram::factorial(r) as i64);
        if r % 2 == 1 {
            c = -c;
        }
        diagram::enumerate_rank_class(k, r).into_iter().map(move |d| (d, c.clone()))
    });
    Ok(embed_terms(s, local))
}

/// `Y_S = Σ_{σ ∈ 𝔖_S} sgn(σ) σ + Σ_{D ∈ Rd_S[1]} sgn(D) D`, with signs
/// computed in the relabelled copy `R_{|S|}`.
pub fn antisymmetrizer_y(s: &VertexSubset) -> Result<AlgebraElement> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    let k = s.len();
    let local = (0..=1.min(k)).flat_map(|r| diagram::enumerate_rank_class(k, r)).map(|d| {
        let c = rat(d.sign() as i64);
        (d, c)
    });
    Ok(embed_terms(s, local))
}

/// `δ_{p_1 p_2 ⋯ p_n}`.
pub fn full_projector(n: usize) -> AlgebraElement {
    AlgebraElement::basis(RookDiagram::zero_rank(n))
}

/// `Y_{k} = Y_{{1..k}}` viewed inside `FR_n`.
pub fn y_top(k: usize, n: usize) -> Result<AlgebraElement> {
    if k > n {
        return Err(Error::TopTooLarge { k, n });
    }
    antisymmetrizer_y(&VertexSubset::initial(n, k)?)
}

/// `e(t) = Y_{𝒞_1}⋯Y_{𝒞_{λ_1}} X_{ℛ_1}⋯X_{ℛ_ℓ} ∏_{i ∉ cont(t)} p_i`,
/// multiplied left to right.
pub fn quasi_idempotent_e(t: &Tableau) -> Result<AlgebraElement> {
    let n = t.n();
    let content = t.content();
    let projector = AlgebraElement::basis(RookDiagram::projector(n, (1..=n).filter(|i| !content.contains(i))));
    let mut factors = Vec::new();
    for col in t.columns() {
        factors.push(antisymmetrizer_y(&VertexSubset::new(n, col)?)?);
    }
    for row in t.rows() {
        factors.push(symmetrizer_x(&VertexSubset::new(n, row.iter().copied())?)?);
    }
    let mut acc = AlgebraElement::identity(n);
    for f in &factors {
        acc = acc.mul(f)?;
    }
    acc.mul(&projector)
}

/// `δ_σ` for a permutation.
pub fn permutation_element(w: &Permutation) -> AlgebraElement {
    AlgebraElement::basis(w.to_diagram())
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn element(n: usize) -> impl Strategy<Value = AlgebraElement> {
        let all = diagram::enumerate(n);
        proptest::collection::vec((0..all.len(), -3i64..4), 0..6).prop_map(move |ts| {
            AlgebraElement::from_terms(n, ts.into_iter().map(|(i, c)| (all[i].clone(), rat(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn associative_and_star_reverses(a in element(3), b in element(3), c in element(3)) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.mul(&b).unwrap().star(), b.star().mul(&a.star()).unwrap());
        }
    }
}
