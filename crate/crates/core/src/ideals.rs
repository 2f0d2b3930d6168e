//! Two-sided ideals of `FR_n`, the blocks `I(λ)`, and the checkers built on
//! them.
//!
//! Ideals are spans inside the `|R_n|`-dimensional diagram-coordinate space.
//! Saturation is breadth first: every vector that enlarged the span is
//! multiplied on both sides by `s_1..s_{n-1}, p_1..p_n`, which generate `R_n`.

use std::collections::VecDeque;

use rand::Rng;
use serde_json::{json, Value};

use crate::algebra::{
    antisymmetrizer_y, full_projector, quasi_idempotent_e, symmetrizer_x, y_top, AlgebraElement, DiagramIndex,
    VertexSubset,
};
use crate::diagram::{factorial, rook_monoid_order, Generator, RookDiagram};
use crate::error::{Error, Result};
use crate::linalg::{rat, SpanBasis};
use crate::report::{Report, Sampling};
use crate::specht::{act_on_tabloid_vector, partitions_up_to, polytabloid, specht_dimension, Partition, Tableau};
use crate::tensor::{annihilator_basis_with, element_matrix, phi_row_space, SizeCaps};

/// A two-sided ideal together with the element that generated it.
#[derive(Clone, Debug)]
pub struct IdealSpan {
    n: usize,
    basis: SpanBasis,
    generator: AlgebraElement,
}

impl IdealSpan {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &SpanBasis {
        &self.basis
    }

    pub fn generator(&self) -> &AlgebraElement {
        &self.generator
    }

    pub fn contains(&self, a: &AlgebraElement, index: &DiagramIndex) -> Result<bool> {
        self.basis.contains(&a.to_vector(index))
    }

    /// The reduced echelon rows as algebra elements.
    pub fn elements(&self, index: &DiagramIndex) -> Vec<AlgebraElement> {
        self.basis.rows().map(|v| AlgebraElement::from_vector(index, v).expect("same index")).collect()
    }

    pub fn same_span(&self, other: &IdealSpan) -> Result<bool> {
        self.basis.span_equal(&other.basis)
    }
}

/// `s_1..s_{n-1}, p_1..p_n` as diagrams.
pub fn generator_diagrams(n: usize) -> Vec<(Generator, RookDiagram)> {
    Generator::all(n).into_iter().map(|g| (g, RookDiagram::generator(n, g).expect("in range"))).collect()
}

/// `FR_n · a · FR_n`.
pub fn two_sided_ideal(a: &AlgebraElement) -> Result<IdealSpan> {
    two_sided_ideal_in(a, &DiagramIndex::new(a.n()))
}

pub fn two_sided_ideal_in(a: &AlgebraElement, index: &DiagramIndex) -> Result<IdealSpan> {
    saturate(a, index, None)
}

/// Breadth-first saturation; stops as soon as the span reaches `stop_at`.
fn saturate(a: &AlgebraElement, index: &DiagramIndex, stop_at: Option<usize>) -> Result<IdealSpan> {
    if a.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    let n = a.n();
    assert_eq!(index.n(), n);
    let gens = generator_diagrams(n);
    let mut basis = SpanBasis::new(index.len());
    let mut queue = VecDeque::new();
    basis.insert(a.to_vector(index))?;
    queue.push_back(a.clone());
    'outer: while let Some(x) = queue.pop_front() {
        for (_, g) in &gens {
            for y in [x.left_mul_diagram(g), x.right_mul_diagram(g)] {
                if stop_at.is_some_and(|target| basis.dim() >= target) || basis.is_full() {
                    break 'outer;
                }
                if basis.insert(y.to_vector(index))? {
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(IdealSpan { n, basis, generator: a.clone() })
}

/// Span of `D_1 · a · D_2` over every pair of diagrams.
pub fn two_sided_ideal_exhaustive(a: &AlgebraElement, index: &DiagramIndex) -> Result<IdealSpan> {
    if a.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    let mut basis = SpanBasis::new(index.len());
    for d1 in index.diagrams() {
        let left = a.left_mul_diagram(d1);
        for d2 in index.diagrams() {
            basis.insert(left.right_mul_diagram(d2).to_vector(index))?;
        }
    }
    Ok(IdealSpan { n: a.n(), basis, generator: a.clone() })
}

/// A basis row and generator (with side) whose product leaves the span, if any.
pub fn closure_witness(basis: &SpanBasis, index: &DiagramIndex) -> Result<Option<Value>> {
    let gens = generator_diagrams(index.n());
    for v in basis.rows() {
        let x = AlgebraElement::from_vector(index, v)?;
        for (g, d) in &gens {
            for (side, y) in [("left", x.left_mul_diagram(d)), ("right", x.right_mul_diagram(d))] {
                if !basis.contains(&y.to_vector(index))? {
                    return Ok(Some(json!({ "element": x, "generator": g.to_string(), "side": side })));
                }
            }
        }
    }
    Ok(None)
}

/// `I(λ) = FR_n · e(t^λ) · FR_n`.
pub fn block_ideal(shape: &Partition, n: usize) -> Result<IdealSpan> {
    block_ideal_in(shape, &DiagramIndex::new(n))
}

pub fn block_ideal_in(shape: &Partition, index: &DiagramIndex) -> Result<IdealSpan> {
    let e = quasi_idempotent_e(&Tableau::canonical_row(shape, index.n())?)?;
    two_sided_ideal_in(&e, index)
}

fn full_subset(n: usize) -> VertexSubset {
    VertexSubset::initial(n, n).expect("n ≥ 1")
}

/// `⟨X_1⟩`, `⟨X_2⟩` and `⟨p_1⋯p_n⟩` are one-dimensional
/// and the generators act on them by the three one-dimensional characters.
pub fn check_one_dimensional(n: usize) -> Result<Report> {
    let index = DiagramIndex::new(n);
    let mut report = Report::new("one-dimensional-ideals").param("n", n);
    let x1 = symmetrizer_x(&full_subset(n))?;
    let x2 = antisymmetrizer_y(&full_subset(n))?;
    let proj = full_projector(n);
    for (name, elem) in [("X_1", &x1), ("X_2", &x2), ("P", &proj)] {
        report.assert_eq(format!("dim <{name}> = 1"), two_sided_ideal_in(elem, &index)?.dim(), 1);
    }
    for (name, elem, s_scale, p_scale) in [("X_1", &x1, 1, 0), ("X_2", &x2, -1, 0), ("P", &proj, 1, 1)] {
        let mut failures = Vec::new();
        for (g, d) in generator_diagrams(n) {
            let c = match g {
                Generator::S(_) => s_scale,
                Generator::P(_) => p_scale,
            };
            let expected = elem.scale(&rat(c));
            if elem.left_mul_diagram(&d) != expected {
                failures.push(format!("{g}·{name}"));
            }
            if elem.right_mul_diagram(&d) != expected {
                failures.push(format!("{name}·{g}"));
            }
        }
        report.assert(
            format!("s_i acts on {name} by {s_scale}, p_j by {p_scale}"),
            failures.is_empty(),
            json!(failures),
        );
    }
    Ok(report)
}

/// `FR_n = ⊕ I(λ)`, `dim I(λ) = (dim R^λ)²`, `I(λ)I(μ) = 0`.
pub fn check_block_decomposition(n: usize, sampling: Sampling) -> Result<Report> {
    let index = DiagramIndex::new(n);
    let exhaustive = sampling.exhaustive || n <= 3;
    let mut report = Report::new("block-decomposition").param("n", n).param("exhaustive", exhaustive);
    let shapes = partitions_up_to(n);
    let mut blocks = Vec::new();
    let mut total = 0u128;
    let mut union = SpanBasis::new(index.len());
    for shape in &shapes {
        let ideal = block_ideal_in(shape, &index)?;
        let specht = specht_dimension(shape, n)?;
        report.assert_eq(format!("dim I{shape} = (dim R^{shape})^2"), ideal.dim(), specht * specht);
        total += ideal.dim() as u128;
        for row in ideal.basis().rows() {
            union.insert(row.clone())?;
        }
        blocks.push(ideal);
    }
    report.assert_eq("sum of dim I(λ) = |R_n|", total, rook_monoid_order(n));
    report.assert_eq("blocks span FR_n", union.dim(), index.len());

    let elements: Vec<Vec<AlgebraElement>> = blocks.iter().map(|b| b.elements(&index)).collect();
    let mut rng = sampling.rng(312);
    let pairs = shapes.len() * shapes.len().saturating_sub(1);
    let per_pair = (sampling.samples / pairs.max(1)).max(1);
    let mut checked = 0usize;
    let mut witness = Value::Null;
    'pairs: for (i, xs) in elements.iter().enumerate() {
        for (j, ys) in elements.iter().enumerate() {
            if i == j {
                continue;
            }
            let picks: Vec<(usize, usize)> = if exhaustive {
                (0..xs.len()).flat_map(|a| (0..ys.len()).map(move |b| (a, b))).collect()
            } else {
                (0..per_pair).map(|_| (rng.gen_range(0..xs.len()), rng.gen_range(0..ys.len()))).collect()
            };
            for (a, b) in picks {
                checked += 1;
                if !xs[a].mul(&ys[b])?.is_zero() {
                    witness = json!({ "lambda": shapes[i], "mu": shapes[j], "x": xs[a], "y": ys[b] });
                    break 'pairs;
                }
            }
        }
    }
    let pass = witness.is_null();
    report.assert("I(λ)·I(μ) = 0 for λ ≠ μ", pass, if pass { json!({ "products": checked }) } else { witness });

    if exhaustive {
        let mut failures = Vec::new();
        for (shape, block) in shapes.iter().zip(&blocks) {
            let col = two_sided_ideal_in(&quasi_idempotent_e(&Tableau::canonical_col(shape, n)?)?, &index)?;
            if !col.same_span(block)? {
                failures.push(json!({ "lambda": shape, "reason": "e(t_λ) generates a different ideal" }));
            }
            for x in block.elements(&index) {
                if !two_sided_ideal_in(&x, &index)?.same_span(block)? {
                    failures.push(json!({ "lambda": shape, "element": x }));
                    break;
                }
            }
        }
        report.assert("each I(λ) is minimal and independent of t", failures.is_empty(), json!(failures));
    }
    Ok(report)
}

/// `e(t) R^μ = 0` unless `λ = μ`, and `e(t^λ) R^λ ≠ 0`.
pub fn check_quasi_idempotent_action(n: usize, sampling: Sampling) -> Result<Report> {
    let exhaustive = sampling.exhaustive || n <= 3;
    let mut report = Report::new("quasi-idempotent-action").param("n", n).param("exhaustive", exhaustive);
    let shapes = partitions_up_to(n);
    let mut rng = sampling.rng(310);
    let mut spanning = Vec::new();
    for mu in &shapes {
        let ts = Tableau::all(mu, n)?;
        spanning.push(ts.iter().map(polytabloid).collect::<Vec<_>>());
    }
    for lambda in &shapes {
        let canonical = Tableau::canonical_row(lambda, n)?;
        let mut tableaux = if exhaustive {
            Tableau::all(lambda, n)?
        } else {
            let all = Tableau::all(lambda, n)?;
            let mut picked = vec![canonical.clone(), Tableau::canonical_col(lambda, n)?];
            for _ in 0..3 {
                picked.push(all[rng.gen_range(0..all.len())].clone());
            }
            picked
        };
        tableaux.dedup();
        let es: Vec<(Tableau, AlgebraElement)> =
            tableaux.into_iter().map(|t| quasi_idempotent_e(&t).map(|e| (t, e))).collect::<Result<_>>()?;
        for (mu, polys) in shapes.iter().zip(&spanning) {
            if mu == lambda {
                let e = &es.iter().find(|(t, _)| *t == canonical).expect("canonical tableau included").1;
                let mut nonzero = false;
                for v in polys {
                    if !act_on_tabloid_vector(e, v)?.is_zero() {
                        nonzero = true;
                        break;
                    }
                }
                report.assert(format!("e(t^{lambda}) R^{lambda} != 0"), nonzero, Value::Null);
            } else {
                let mut witness = Value::Null;
                'search: for (t, e) in &es {
                    for v in polys {
                        let w = act_on_tabloid_vector(e, v)?;
                        if !w.is_zero() {
                            witness = json!({ "t": t, "e_s": v, "image": w });
                            break 'search;
                        }
                    }
                }
                let pass = witness.is_null();
                report.assert(format!("e(t) R^{mu} = 0 for t of shape {lambda}"), pass, witness);
            }
        }
    }
    Ok(report)
}

/// `Σ_{ℓ(λ) ≥ k} (dim R^λ)²` over all `λ ⊢ r ≤ n`.
pub fn specht_mass_with_length_at_least(k: usize, n: usize) -> Result<usize> {
    let mut total = 0;
    for shape in partitions_up_to(n) {
        if shape.length() >= k {
            let d = specht_dimension(&shape, n)?;
            total += d * d;
        }
    }
    Ok(total)
}

/// `Ann_{FR_n}(U^{⊗n}) = ⟨Y_{m+1}⟩` for `m < n`.
pub fn check_annihilator(m: usize, n: usize, caps: SizeCaps, sampling: Sampling) -> Result<Report> {
    if m == 0 || m >= n {
        return Err(Error::Parameter(format!("the annihilator check needs 1 <= m < n, got m = {m}, n = {n}")));
    }
    let index = DiagramIndex::new(n);
    let mut report = Report::new("schur-weyl-annihilator").param("m", m).param("n", n);
    let ann = annihilator_basis_with(m, &index, caps)?;
    let specht = specht_mass_with_length_at_least(m + 1, n)?;
    report.assert_eq("dim Ann = sum over l(λ) >= m+1 of (dim R^λ)^2", ann.dim(), specht);

    let y = y_top(m + 1, n)?;
    let stop_at = if sampling.exhaustive { None } else { Some(ann.dim()) };
    let ideal = saturate(&y, &index, stop_at)?;
    let stray = ideal.basis().rows().find(|v| !ann.contains(v).unwrap_or(false));
    report.assert(
        "<Y_{m+1}> ⊆ Ann",
        stray.is_none(),
        stray.map_or(Value::Null, |v| json!(AlgebraElement::from_vector(&index, v).expect("same index"))),
    );
    let closure = closure_witness(ideal.basis(), &index)?;
    report.assert("<Y_{m+1}> is closed under s_i, p_j", closure.is_none(), closure.unwrap_or(Value::Null));
    report.assert_eq("dim <Y_{m+1}> = dim Ann", ideal.dim(), ann.dim());
    let equal = ideal.basis().span_equal(&ann)?;
    report.assert("Ann = <Y_{m+1}>", equal, json!({ "dim_ann": ann.dim(), "dim_ideal": ideal.dim() }));
    Ok(report)
}

/// `φ` is injective when `m ≥ n`.
pub fn check_injectivity(m: usize, n: usize, caps: SizeCaps) -> Result<Report> {
    if m < n {
        return Err(Error::Parameter(format!("injectivity is only claimed for m >= n, got m = {m}, n = {n}")));
    }
    let index = DiagramIndex::new(n);
    let mut report = Report::new("schur-weyl-injective").param("m", m).param("n", n);
    let rows = phi_row_space(m, n, &index, caps)?;
    report.assert_eq("rank phi = |R_n|", rows.dim(), index.len());
    report.assert_eq("nullity phi = 0", index.len() - rows.dim(), 0);
    Ok(report)
}

/// `Y_{m+1}` acts as zero on `U^{⊗n}`, and `Y_{m+1} e(t_λ) = (m+1)! e(t_λ)`
/// whenever `ℓ(λ) ≥ m+1`.
pub fn check_y_action(m: usize, n: usize, caps: SizeCaps) -> Result<Report> {
    if m == 0 || m + 1 > n {
        return Err(Error::TopTooLarge { k: m + 1, n });
    }
    let mut report = Report::new("y-action").param("m", m).param("n", n);
    let y = y_top(m + 1, n)?;
    let mat = element_matrix(&y, m, caps)?;
    report.assert("Y_{m+1} acts as zero on U^n", mat.is_zero(), json!({ "nonzero_entries": mat.nnz() }));
    let factor = rat(factorial(m + 1) as i64);
    for shape in partitions_up_to(n).into_iter().filter(|s| s.length() > m) {
        let e = quasi_idempotent_e(&Tableau::canonical_col(&shape, n)?)?;
        let lhs = y.mul(&e)?;
        let rhs = e.scale(&factor);
        let pass = lhs == rhs;
        let witness = if pass { Value::Null } else { json!({ "lhs": lhs, "rhs": rhs }) };
        report.assert(format!("Y_{} e(t_{shape}) = {}! e(t_{shape})", m + 1, m + 1), pass, witness);
    }
    Ok(report)
}

/// `Σ_λ (dim R^λ)² = |R_n|`.
pub fn check_specht_identity(n: usize) -> Result<Report> {
    let mut report = Report::new("specht-dimensions").param("n", n);
    let mut total = 0u128;
    let mut dims = serde_json::Map::new();
    for shape in partitions_up_to(n) {
        let d = specht_dimension(&shape, n)?;
        dims.insert(shape.to_string(), json!(d));
        total += (d * d) as u128;
    }
    report.assert("sum of (dim R^λ)^2 = |R_n|", total == rook_monoid_order(n), json!({ "dims": dims, "sum": total }));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VertexSubset;
    use crate::diagram::{enumerate_rank_class, rank_class_size};
    use crate::tensor::annihilator_basis;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn one_dimensional_ideals() {
        for n in 2..=4 {
            let r = check_one_dimensional(n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn filtration_ideals_have_rank_class_bases() {
        for n in 1..=4 {
            let index = DiagramIndex::new(n);
            for r in 1..=n {
                let gen = AlgebraElement::basis(RookDiagram::projector(n, 1..=r));
                let ideal = two_sided_ideal_in(&gen, &index).unwrap();
                let expected: u128 = (r..=n).map(|f| rank_class_size(n, f)).sum();
                assert_eq!(ideal.dim() as u128, expected, "n={n} r={r}");
                for f in r..=n {
                    for d in enumerate_rank_class(n, f) {
                        assert!(ideal.contains(&AlgebraElement::basis(d), &index).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn identity_generates_everything() {
        for n in 1..=3 {
            assert_eq!(two_sided_ideal(&AlgebraElement::identity(n)).unwrap().dim() as u128, rook_monoid_order(n));
        }
    }

    #[test]
    fn zero_generator_is_rejected() {
        assert_eq!(two_sided_ideal(&AlgebraElement::zero(2)).unwrap_err(), Error::ZeroGenerator);
    }

    #[test]
    fn generator_saturation_matches_pair_enumeration() {
        for n in 1..=3 {
            let index = DiagramIndex::new(n);
            for d in index.diagrams() {
                let a = AlgebraElement::basis(d.clone());
                let fast = two_sided_ideal_in(&a, &index).unwrap();
                let slow = two_sided_ideal_exhaustive(&a, &index).unwrap();
                assert_eq!(fast.basis(), slow.basis());
            }
            let y = antisymmetrizer_y(&VertexSubset::initial(n, n).unwrap()).unwrap();
            assert_eq!(
                two_sided_ideal_in(&y, &index).unwrap().basis(),
                two_sided_ideal_exhaustive(&y, &index).unwrap().basis()
            );
        }
    }

    #[test]
    fn saturated_ideals_are_closed() {
        for n in 2..=4 {
            let index = DiagramIndex::new(n);
            for s in partitions_up_to(n) {
                let ideal = block_ideal_in(&s, &index).unwrap();
                assert_eq!(closure_witness(ideal.basis(), &index).unwrap(), None, "λ={s}");
            }
        }
    }

    #[test]
    fn block_dimensions() {
        assert_eq!(block_ideal(&shape(&[1, 1]), 2).unwrap().dim(), 1);
        assert_eq!(block_ideal(&shape(&[1]), 3).unwrap().dim(), 9);
        let dims: Vec<usize> = partitions_up_to(2).iter().map(|s| block_ideal(s, 2).unwrap().dim()).collect();
        // ∅, (1), (2), (1,1)
        assert_eq!(dims, vec![1, 4, 1, 1]);
    }

    #[test]
    fn block_decomposition_small() {
        for n in 1..=3 {
            let r = check_block_decomposition(n, Sampling::default()).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }

    #[test]
    fn quasi_idempotent_action_small() {
        for n in 1..=3 {
            let r = check_quasi_idempotent_action(n, Sampling::default()).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }

    #[test]
    fn annihilator_small() {
        for (m, n, dim) in [(1, 2, 1), (1, 3, 14), (2, 3, 1)] {
            let r = check_annihilator(m, n, SizeCaps::default(), Sampling::default()).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string_pretty(&r).unwrap());
            assert_eq!(r.assertions[0].witness["got"], dim);
        }
    }

    #[test]
    fn annihilator_check_rejects_m_at_least_n() {
        assert!(check_annihilator(2, 2, SizeCaps::default(), Sampling::default()).is_err());
        assert!(check_injectivity(1, 2, SizeCaps::default()).is_err());
    }

    #[test]
    fn injectivity_small() {
        for (m, n) in [(2, 2), (3, 2), (3, 3)] {
            assert!(check_injectivity(m, n, SizeCaps::default()).unwrap().passed());
        }
    }

    #[test]
    fn y_action_small() {
        for (m, n) in [(1, 2), (1, 3), (2, 3)] {
            let r = check_y_action(m, n, SizeCaps::default()).unwrap();
            assert!(r.passed(), "{}", serde_json::to_string_pretty(&r).unwrap());
        }
        let r = check_y_action(2, 3, SizeCaps::default()).unwrap();
        // the action on U^n plus λ = (1,1,1)
        assert_eq!(r.assertions.len(), 2);
    }

    #[test]
    fn annihilator_is_an_ideal() {
        for (m, n) in [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)] {
            let index = DiagramIndex::new(n);
            let ann = annihilator_basis(m, n, SizeCaps::default()).unwrap();
            assert_eq!(closure_witness(&ann, &index).unwrap(), None, "m={m} n={n}");
        }
    }

    #[test]
    fn specht_mass_matches_hand_sums() {
        assert_eq!(specht_mass_with_length_at_least(2, 3).unwrap(), 9 + 4 + 1);
        assert_eq!(specht_mass_with_length_at_least(2, 4).unwrap(), 36 + 64 + 16 + 9 + 4 + 9 + 1);
        assert_eq!(specht_mass_with_length_at_least(0, 4).unwrap() as u128, rook_monoid_order(4));
    }
}
