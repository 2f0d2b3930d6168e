//! End-to-end checks through the public API, with expected values produced
//! by small independent oracles written out here.

use num_traits::Zero;
use proptest::prelude::*;

use rook_algebra::algebra::{antisymmetrizer_y, symmetrizer_x, y_top, AlgebraElement, DiagramIndex, VertexSubset};
use rook_algebra::diagram::{enumerate, Generator};
use rook_algebra::ideals::{block_ideal, two_sided_ideal};
use rook_algebra::linalg::{rank, rat, SparseRationalMatrix};
use rook_algebra::specht::{partitions_up_to, specht_dimension, Partition, Tableau};
use rook_algebra::tensor::{annihilator_basis, element_matrix, phi_matrix, SizeCaps, TensorSpace};
use rook_algebra::{Rational, RookDiagram};

fn d(img: &[usize]) -> RookDiagram {
    RookDiagram::new(img).unwrap()
}

/// Composition of partial maps written as edge sets: `(a, b)` joins top `a`
/// to bottom `b`; the product joins `a` to `c` when `(a, b)` and `(b, c)` exist.
fn edge_product(x: &[(usize, usize)], y: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> =
        x.iter().flat_map(|&(a, b)| y.iter().filter(move |&&(b2, _)| b2 == b).map(move |&(_, c)| (a, c))).collect();
    out.sort();
    out
}

fn edges(dg: &RookDiagram) -> Vec<(usize, usize)> {
    (1..=dg.n()).filter_map(|a| dg.image(a).map(|b| (a, b))).collect()
}

#[test]
fn multiplication_matches_edge_composition() {
    for n in 1..=3 {
        let all = enumerate(n);
        for x in &all {
            for y in &all {
                assert_eq!(edges(&(x * y)), edge_product(&edges(x), &edges(y)));
            }
        }
    }
    assert_eq!(&d(&[0, 2]) * &d(&[2, 1]), d(&[0, 1]));
}

#[test]
fn two_vertex_symmetrizers_by_hand() {
    let s = VertexSubset::initial(2, 2).unwrap();
    let x = symmetrizer_x(&s).unwrap();
    let x_expected = AlgebraElement::from_terms(
        2,
        [
            (d(&[1, 2]), rat(1)),
            (d(&[2, 1]), rat(1)),
            (d(&[0, 2]), rat(-1)),
            (d(&[1, 0]), rat(-1)),
            (d(&[2, 0]), rat(-1)),
            (d(&[0, 1]), rat(-1)),
            (d(&[0, 0]), rat(2)),
        ],
    )
    .unwrap();
    assert_eq!(x, x_expected);
    let y = antisymmetrizer_y(&s).unwrap();
    let y_expected = AlgebraElement::from_terms(
        2,
        [
            (d(&[1, 2]), rat(1)),
            (d(&[2, 1]), rat(-1)),
            (d(&[0, 2]), rat(-1)),
            (d(&[1, 0]), rat(-1)),
            (d(&[2, 0]), rat(1)),
            (d(&[0, 1]), rat(1)),
        ],
    )
    .unwrap();
    assert_eq!(y, y_expected);
    assert_eq!(y_top(2, 2).unwrap(), y);
}

#[test]
fn y2_on_basis_tensor_by_hand() {
    // (0,1) - (1,0) - (0,1) - 0 + (1,0) + 0 = 0, with linear indices 1 and 2.
    let space = TensorSpace::new(1, 2, SizeCaps::default()).unwrap();
    let y = y_top(2, 2).unwrap();
    let mut acc = vec![Rational::zero(); space.dim()];
    for (dg, c) in y.terms() {
        if let Some(out) = space.apply(dg, 1) {
            acc[out] += c;
        }
    }
    assert!(acc.iter().all(Zero::is_zero));
}

#[test]
fn phi_rank_against_specht_oracle() {
    // rank φ(1,2) = Σ over λ with at most one row of (dim R^λ)^2 = 1 + 4 + 1
    let phi = phi_matrix(1, 2, SizeCaps::default()).unwrap();
    let oracle: usize =
        partitions_up_to(2).iter().filter(|p| p.length() <= 1).map(|p| specht_dimension(p, 2).unwrap().pow(2)).sum();
    assert_eq!(oracle, 6);
    assert_eq!(rank(&phi), oracle);
    assert_eq!(annihilator_basis(1, 2, SizeCaps::default()).unwrap().dim(), 7 - oracle);
}

#[test]
fn phi_triplets_round_trip() {
    let phi = phi_matrix(1, 2, SizeCaps::default()).unwrap();
    let text = phi.to_triplet_text();
    assert_eq!(SparseRationalMatrix::from_triplet_text(&text).unwrap(), phi);
}

#[test]
fn block_dims_are_squared_specht_dims() {
    for n in 1..=3 {
        let mut total = 0;
        for p in partitions_up_to(n) {
            let dim = block_ideal(&p, n).unwrap().dim();
            assert_eq!(dim, specht_dimension(&p, n).unwrap().pow(2), "λ={p} n={n}");
            total += dim;
        }
        assert_eq!(total, enumerate(n).len());
    }
}

#[test]
fn json_formats() {
    let t = Tableau::canonical_col(&Partition::new(vec![2, 1]).unwrap(), 4).unwrap();
    assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"shape":[2,1],"n":4,"rows":[[1,3],[2]]}"#);
    let back: Tableau = serde_json::from_str(r#"{"shape":[2,1],"n":4,"rows":[[1,3],[2]]}"#).unwrap();
    assert_eq!(back, t);
    let p1 = AlgebraElement::basis(RookDiagram::generator(2, Generator::P(1)).unwrap()).scale(&rat(3));
    let json = serde_json::to_string(&p1).unwrap();
    assert_eq!(json, r#"{"n":2,"terms":[{"coeff":"3/1","diagram":[0,2]}]}"#);
    assert_eq!(serde_json::from_str::<AlgebraElement>(&json).unwrap(), p1);
}

fn arb_diagram(n: usize) -> impl Strategy<Value = RookDiagram> {
    let all = enumerate(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn action_is_multiplicative_at_n4(a in arb_diagram(4), b in arb_diagram(4), m in 1usize..=2) {
        let caps = SizeCaps::default();
        let lhs = element_matrix(&AlgebraElement::basis(&a * &b), m, caps).unwrap();
        let rhs = element_matrix(&AlgebraElement::basis(a), m, caps)
            .unwrap()
            .matmul(&element_matrix(&AlgebraElement::basis(b), m, caps).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ideal_of_a_diagram_is_spanned_by_lower_rank_classes(i in 0usize..34) {
        let index = DiagramIndex::new(3);
        let dg = index.diagram(i).clone();
        let rank = dg.rank();
        let ideal = two_sided_ideal(&AlgebraElement::basis(dg)).unwrap();
        let expected = index.diagrams().iter().filter(|e| e.rank() <= rank).count();
        prop_assert_eq!(ideal.dim(), expected);
    }
}
