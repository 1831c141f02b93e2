//! Nuclear waste dump site selection: the published interval data, grey
//! relational coefficients, priorities and grade tables.

mod support;

use greyrank_core::ahp::{principal_eigenvector, PairwiseMatrix, PriorityVector};
use greyrank_core::dea::{optimistic_slacks, pessimistic_slacks, Variant};
use greyrank_core::fuzzy::Interval;
use greyrank_core::gra::{grey_coefficients, reference_sequence, AttributeSpec};
use greyrank_core::pipeline::{full_pipeline, Column, Params, Problem, Weighting};
use support::tables::{self, site};

fn problem() -> Problem {
    let columns = (0..4)
        .map(|j| {
            Column::Intervals(
                tables::INTERVALS
                    .iter()
                    .map(|row| Interval::new(row[j].0, row[j].1).unwrap())
                    .collect(),
            )
        })
        .collect();
    Problem {
        alternatives: tables::SITES.iter().map(|s| s.to_string()).collect(),
        attributes: tables::ATTRIBUTES.iter().map(|a| AttributeSpec::desirable(*a)).collect(),
        columns,
    }
}

fn published_priorities() -> Weighting {
    Weighting::Priorities(PriorityVector::from_weights(tables::PRIORITIES.to_vec()).unwrap())
}

fn params(variant: Variant) -> Params {
    Params {
        alpha: 0.5,
        rho: 0.8,
        beta: 0.5,
        variant,
    }
}

#[test]
fn reference_and_coefficients() {
    let (_, cm, reference, xi) = greyrank_core::pipeline::coefficients(&problem(), 0.5, 0.8).unwrap();
    let r = reference_sequence(&cm).unwrap();
    assert_eq!(r, reference);
    assert_eq!(r.entries()[0], Interval::new(0.85, 1.0).unwrap());
    assert_eq!(r.entries()[2], Interval::new(0.90, 1.0).unwrap());
    assert!((xi.max_distance().unwrap() - 0.95).abs() < 1e-12);
    assert_eq!(xi.min_distance(), Some(0.0));
    for (i, row) in tables::COEFFICIENTS.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            assert!((xi.get(i, j) - want).abs() <= 5e-5, "({i},{j}) {} vs {want}", xi.get(i, j));
        }
    }
    assert!((xi.get(site("Newark"), 0) - 0.76 / 1.71).abs() < 1e-12);
    let again = grey_coefficients(&cm, &r, 0.8).unwrap();
    assert_eq!(again, xi);
}

#[test]
fn eigenvector_priorities() {
    let labels = tables::ATTRIBUTES.iter().map(|a| a.to_string()).collect();
    let rows: Vec<Vec<f64>> = tables::PAIRWISE.iter().map(|r| r.to_vec()).collect();
    let p = principal_eigenvector(&PairwiseMatrix::from_rows(labels, &rows).unwrap()).unwrap();
    for (e, want) in p.weights().iter().zip(tables::PRIORITIES) {
        assert!((e - want).abs() <= 1.5e-3);
    }
    assert!(p.consistency_ratio().unwrap() <= 0.02);
}

fn check_table(variant: Variant, weighting: Weighting, expected: &[(f64, f64, f64, usize); 12]) {
    let out = full_pipeline(&problem(), &weighting, &params(variant)).unwrap();
    for (a, &(g, gp, d, rank)) in out.report.alternatives.iter().zip(expected) {
        assert!((a.optimistic - g).abs() <= 5e-4, "{} Γ {} vs {g}", a.label, a.optimistic);
        assert!((a.pessimistic - gp).abs() <= 5e-4, "{} Γ' {} vs {gp}", a.label, a.pessimistic);
        assert!((a.compromise - d).abs() <= 5e-4, "{} Δ {} vs {d}", a.label, a.compromise);
        assert_eq!(a.rank, rank, "{} rank", a.label);
    }
}

#[test]
fn bounded_vrs_grades() {
    check_table(Variant::BoundedVrs, published_priorities(), &tables::BOUNDED_VRS);
}

#[test]
fn crs_unbounded_grades() {
    check_table(Variant::CrsUnbounded, Weighting::None, &tables::CRS_UNBOUNDED);
}

#[test]
fn eigenvector_weights_give_the_same_ranking() {
    let labels = tables::ATTRIBUTES.iter().map(|a| a.to_string()).collect();
    let rows: Vec<Vec<f64>> = tables::PAIRWISE.iter().map(|r| r.to_vec()).collect();
    let matrix = PairwiseMatrix::from_rows(labels, &rows).unwrap();
    let out = full_pipeline(&problem(), &Weighting::Matrix(matrix), &params(Variant::BoundedVrs)).unwrap();
    let ranks: Vec<usize> = tables::BOUNDED_VRS.iter().map(|r| r.3).collect();
    assert_eq!(out.report.ranks(), ranks);
}

#[test]
fn slack_diagnostics() {
    let (_, _, _, xi) = greyrank_core::pipeline::coefficients(&problem(), 0.5, 0.8).unwrap();
    let e = tables::PRIORITIES;
    let wells = site("Wells");
    let anaheim = site("Anaheim");
    assert!(optimistic_slacks(&xi, wells, &e).unwrap().objective.abs() < 1e-9);
    assert!((optimistic_slacks(&xi, anaheim, &e).unwrap().objective - 0.4038).abs() <= 5e-4);
    assert!(pessimistic_slacks(&xi, anaheim, &e).unwrap().objective.abs() < 1e-9);
    assert!((pessimistic_slacks(&xi, wells, &e).unwrap().objective - 0.4038).abs() <= 5e-4);
}

#[test]
fn newark_is_best_and_worst() {
    let out = full_pipeline(&problem(), &published_priorities(), &params(Variant::BoundedVrs)).unwrap();
    let newark = out.report.find("Newark").unwrap();
    assert!((newark.optimistic - 1.0).abs() < 1e-6);
    assert!((newark.pessimistic - 1.0).abs() < 1e-6);
    let winners = out.report.alternatives.iter().filter(|a| (a.optimistic - 1.0).abs() < 5e-5).count();
    let top = out.report.alternatives.iter().filter(|a| (a.compromise - 1.0).abs() < 5e-5).count();
    // Newark, Rock Springs, Gary, Turkey, Wells and Epcot.
    assert_eq!(winners, 6);
    assert_eq!(top, 1);
}
