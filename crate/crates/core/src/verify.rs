//! Checkers for the monoid itself (presentation, counting, factorization),
//! for the tensor representation, and the aggregate `verify_all` runner.

use rand::Rng;
use serde_json::{json, Map, Value};

use crate::algebra::DiagramIndex;
use crate::diagram::{
    binomial, coset_reps, enumerate, enumerate_rank_class, factorial, rank_class_size, rook_monoid_order, Generator,
    Permutation, Quadruple, RookDiagram,
};
use crate::error::{Error, Result};
use crate::ideals::{
    check_annihilator, check_block_decomposition, check_injectivity, check_one_dimensional,
    check_quasi_idempotent_action, check_specht_identity, check_y_action,
};
use crate::report::{AggregateReport, Report, Sampling};
use crate::tensor::{diagram_matrix, saturating_pow, SizeCaps};

/// The eight defining relations of `R_n`, checked under `multiply`.
pub fn verify_presentation(n: usize) -> Result<Report> {
    verify_presentation_with(n, |a, b| a * b)
}

/// Same as [`verify_presentation`] with a caller-supplied product.
pub fn verify_presentation_with(n: usize, mul: impl Fn(&RookDiagram, &RookDiagram) -> RookDiagram) -> Result<Report> {
    if n < 2 {
        return Err(Error::Parameter(format!("the presentation needs n >= 2, got {n}")));
    }
    let s = |i: usize| RookDiagram::generator(n, Generator::S(i)).expect("in range");
    let p = |i: usize| RookDiagram::generator(n, Generator::P(i)).expect("in range");
    let prod = |ws: &[&RookDiagram]| {
        let mut acc = RookDiagram::identity(n);
        for w in ws {
            acc = mul(&acc, w);
        }
        acc
    };
    let one = RookDiagram::identity(n);
    let mut report = Report::new("presentation").param("n", n);

    let mut relation = |name: &str, instances: Vec<(String, RookDiagram, RookDiagram)>| {
        let violated: Vec<Value> = instances
            .into_iter()
            .filter(|(_, l, r)| l != r)
            .map(|(at, l, r)| json!({ "at": at, "lhs": l, "rhs": r }))
            .collect();
        report.assert(name, violated.is_empty(), Value::Array(violated));
    };

    relation("s_i^2 = 1", (1..n).map(|i| (format!("i={i}"), prod(&[&s(i), &s(i)]), one.clone())).collect());
    relation(
        "s_i s_j = s_j s_i, |i-j| > 1",
        pairs(1..n, 1..n, |i, j| i.abs_diff(j) > 1)
            .map(|(i, j)| (format!("i={i},j={j}"), prod(&[&s(i), &s(j)]), prod(&[&s(j), &s(i)])))
            .collect(),
    );
    relation(
        "s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}",
        (1..n.saturating_sub(1))
            .map(|i| (format!("i={i}"), prod(&[&s(i), &s(i + 1), &s(i)]), prod(&[&s(i + 1), &s(i), &s(i + 1)])))
            .collect(),
    );
    relation("p_i^2 = p_i", (1..=n).map(|i| (format!("i={i}"), prod(&[&p(i), &p(i)]), p(i))).collect());
    relation(
        "p_i p_j = p_j p_i, i != j",
        pairs(1..=n, 1..=n, |i, j| i != j)
            .map(|(i, j)| (format!("i={i},j={j}"), prod(&[&p(i), &p(j)]), prod(&[&p(j), &p(i)])))
            .collect(),
    );
    relation(
        "s_i p_i = p_{i+1} s_i",
        (1..n).map(|i| (format!("i={i}"), prod(&[&s(i), &p(i)]), prod(&[&p(i + 1), &s(i)]))).collect(),
    );
    relation(
        "s_i p_j = p_j s_i, |i-j| > 1",
        pairs(1..n, 1..=n, |i, j| i.abs_diff(j) > 1)
            .map(|(i, j)| (format!("i={i},j={j}"), prod(&[&s(i), &p(j)]), prod(&[&p(j), &s(i)])))
            .collect(),
    );
    relation(
        "p_i s_i p_i = p_i p_{i+1}",
        (1..n).map(|i| (format!("i={i}"), prod(&[&p(i), &s(i), &p(i)]), prod(&[&p(i), &p(i + 1)]))).collect(),
    );
    Ok(report)
}

fn pairs(
    a: impl Iterator<Item = usize> + Clone,
    b: impl Iterator<Item = usize> + Clone,
    keep: impl Fn(usize, usize) -> bool,
) -> impl Iterator<Item = (usize, usize)> {
    a.flat_map(move |i| b.clone().map(move |j| (i, j))).filter(move |&(i, j)| keep(i, j))
}

/// A deliberately wrong product: where `D_2` would isolate the vertex, `D_1`'s
/// edge is kept instead of being dropped. Used as a negative control.
pub fn left_projection_multiply(d1: &RookDiagram, d2: &RookDiagram) -> RookDiagram {
    let img: Vec<usize> = d1.images().into_iter().map(|b| if b == 0 { 0 } else { d2.image(b).unwrap_or(b) }).collect();
    RookDiagram::new(&img).unwrap_or_else(|_| RookDiagram::zero_rank(d1.n()))
}

/// `|R_n| = Σ_r C(n,r)² r!` and the rank-class sizes, against enumeration.
pub fn check_counting(n: usize) -> Result<Report> {
    let mut report = Report::new("counting").param("n", n);
    let formula: u128 = (0..=n).map(|r| binomial(n, r) * binomial(n, r) * factorial(r)).sum();
    report.assert_eq("|R_n| = sum C(n,r)^2 r!", enumerate(n).len() as u128, formula);
    let mut mismatched = Vec::new();
    for r in 0..=n {
        let got = enumerate_rank_class(n, r).len() as u128;
        if got != rank_class_size(n, r) {
            mismatched.push(json!({ "r": r, "got": got, "expected": rank_class_size(n, r) }));
        }
    }
    report.assert("|Rd_n[r]| = C(n,r)^2 (n-r)!", mismatched.is_empty(), Value::Array(mismatched));
    Ok(report)
}

/// Round trip through the quadruple factorization, and (optionally)
/// uniqueness by composing every admissible quadruple.
pub fn check_factorization(n: usize, uniqueness: bool) -> Result<Report> {
    let mut report = Report::new("factorization").param("n", n).param("uniqueness", uniqueness);
    let all = enumerate(n);
    let bad: Vec<Value> = all
        .iter()
        .filter(|d| {
            let q = d.factorize();
            !q.is_valid() || q.compose() != **d
        })
        .map(|d| json!(d))
        .take(10)
        .collect();
    report.assert("compose(factorize(D)) = D", bad.is_empty(), Value::Array(bad));
    if uniqueness {
        let index = DiagramIndex::new(n);
        let mut hits = vec![0usize; index.len()];
        for r in 0..=n {
            let reps = coset_reps(n, r);
            let sigmas: Vec<Permutation> =
                Permutation::all(n).into_iter().filter(|w| (1..=r).all(|j| w.apply(j) == j)).collect();
            for d1 in &reps {
                for d2 in &reps {
                    for sigma in &sigmas {
                        let q = Quadruple { d1: d1.clone(), d2: d2.clone(), r, sigma: sigma.clone() };
                        hits[index.position(&q.compose())] += 1;
                    }
                }
            }
        }
        let bad: Vec<Value> = hits
            .iter()
            .enumerate()
            .filter(|(_, &h)| h != 1)
            .map(|(i, &h)| json!({ "diagram": index.diagram(i), "quadruples": h }))
            .take(10)
            .collect();
        report.assert("each diagram has exactly one quadruple", bad.is_empty(), Value::Array(bad));
    }
    Ok(report)
}

/// `φ(D_1 D_2) = φ(D_1) φ(D_2)`: every pair when `n ≤ 3` (or exhaustive),
/// otherwise `sampling.samples` seeded random pairs.
pub fn check_homomorphism(n: usize, m: usize, caps: SizeCaps, sampling: Sampling) -> Result<Report> {
    let exhaustive = sampling.exhaustive || n <= 3;
    let mut report = Report::new("homomorphism").param("m", m).param("n", n).param("exhaustive", exhaustive);
    let index = DiagramIndex::new(n);
    let mats = index.diagrams().iter().map(|d| diagram_matrix(d, m, caps)).collect::<Result<Vec<_>>>()?;
    let picks: Vec<(usize, usize)> = if exhaustive {
        (0..index.len()).flat_map(|a| (0..index.len()).map(move |b| (a, b))).collect()
    } else {
        let mut rng = sampling.rng(41);
        (0..sampling.samples).map(|_| (rng.gen_range(0..index.len()), rng.gen_range(0..index.len()))).collect()
    };
    let mut witness = Value::Null;
    for &(a, b) in &picks {
        let product = index.diagram(a) * index.diagram(b);
        if mats[index.position(&product)] != mats[a].matmul(&mats[b])? {
            witness = json!({ "d1": index.diagram(a), "d2": index.diagram(b) });
            break;
        }
    }
    let pass = witness.is_null();
    report.assert("phi(D1 D2) = phi(D1) phi(D2)", pass, if pass { json!({ "pairs": picks.len() }) } else { witness });
    Ok(report)
}

/// Refuses parameter ranges whose largest φ-matrix or diagram basis would
/// exceed the cap.
pub fn check_verify_all_caps(n_max: usize, m_max: usize, caps: SizeCaps) -> Result<()> {
    caps.check(format!("(m+1)^(2n) for m={m_max}, n={n_max}"), saturating_pow(m_max + 1, 2 * n_max))?;
    let order = if n_max <= 30 { rook_monoid_order(n_max) } else { u128::MAX };
    caps.check(format!("|R_n| for n={n_max}"), order)
}

/// Every checker for `1 ≤ n ≤ n_max` and `1 ≤ m ≤ m_max`.
pub fn verify_all(n_max: usize, m_max: usize, caps: SizeCaps, sampling: Sampling) -> Result<AggregateReport> {
    check_verify_all_caps(n_max, m_max, caps)?;
    let mut params = Map::new();
    params.insert("n_max".into(), json!(n_max));
    params.insert("m_max".into(), json!(m_max));
    params.insert("exhaustive".into(), json!(sampling.exhaustive));
    let mut agg = AggregateReport::new("verify-all", params);
    for n in 1..=n_max {
        agg.push(check_counting(n)?);
        if n >= 2 {
            agg.push(verify_presentation(n)?);
        }
        agg.push(check_factorization(n, n <= 3 || sampling.exhaustive)?);
        agg.push(check_one_dimensional(n)?);
        agg.push(check_specht_identity(n)?);
        agg.push(check_block_decomposition(n, sampling)?);
        agg.push(check_quasi_idempotent_action(n, sampling)?);
        for m in 1..=m_max {
            agg.push(check_homomorphism(n, m, caps, sampling)?);
            if m < n {
                agg.push(check_annihilator(m, n, caps, sampling)?);
                agg.push(check_y_action(m, n, caps)?);
            } else {
                agg.push(check_injectivity(m, n, caps)?);
            }
        }
    }
    Ok(agg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_holds() {
        for n in 2..=5 {
            let r = verify_presentation(n).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.assertions.len(), 8);
        }
    }

    #[test]
    fn mutant_product_breaks_the_mixed_relation() {
        for n in 2..=4 {
            let r = verify_presentation_with(n, left_projection_multiply).unwrap();
            let mixed = r.assertions.iter().find(|a| a.name == "p_i s_i p_i = p_i p_{i+1}").unwrap();
            assert!(!mixed.pass);
            assert!(!mixed.witness.as_array().unwrap().is_empty());
        }
    }

    #[test]
    fn counting_and_factorization() {
        for n in 1..=5 {
            assert!(check_counting(n).unwrap().passed());
            assert!(check_factorization(n, n <= 3).unwrap().passed());
        }
    }

    #[test]
    fn homomorphism_small() {
        for (n, m) in [(2, 1), (2, 2), (3, 1)] {
            assert!(check_homomorphism(n, m, SizeCaps::default(), Sampling::default()).unwrap().passed());
        }
        let sampled = Sampling { samples: 50, ..Sampling::default() };
        assert!(check_homomorphism(4, 1, SizeCaps::default(), sampled).unwrap().passed());
    }

    #[test]
    fn verify_all_small_passes() {
        let agg = verify_all(3, 2, SizeCaps::default(), Sampling::default()).unwrap();
        assert!(agg.passed(), "{:?}", agg.assertions.iter().filter(|a| !a.pass).collect::<Vec<_>>());
    }

    #[test]
    fn verify_all_refuses_huge_parameters() {
        assert!(matches!(verify_all(99, 99, SizeCaps::default(), Sampling::default()), Err(Error::SizeCap { .. })));
    }
}
