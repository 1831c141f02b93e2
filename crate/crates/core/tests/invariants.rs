use greyrank_core::ahp::{principal_eigenvector, PairwiseMatrix};
use greyrank_core::fuzzy::{alpha_cut, interval_distance, Interval, TrapezoidalFuzzy};
use greyrank_core::gra::{grey_coefficients, normalize, reference_sequence, AttributeSpec, ComparabilityMatrix};
use proptest::prelude::*;

fn trapezoid() -> impl Strategy<Value = TrapezoidalFuzzy> {
    prop::array::uniform4(-100.0..100.0f64).prop_map(|mut p| {
        p.sort_by(f64::total_cmp);
        TrapezoidalFuzzy::new(p[0], p[1], p[2], p[3]).unwrap()
    })
}

fn interval() -> impl Strategy<Value = Interval> {
    (-10.0..10.0f64, 0.0..5.0f64).prop_map(|(lo, w)| Interval::new(lo, lo + w).unwrap())
}

fn unit_interval() -> impl Strategy<Value = Interval> {
    (0.0..1.0f64, 0.0..1.0f64).prop_map(|(a, b)| Interval::new(a.min(b), a.max(b)).unwrap())
}

fn comparability(max_m: usize, max_n: usize) -> impl Strategy<Value = ComparabilityMatrix> {
    (2..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        prop::collection::vec(unit_interval(), m * n).prop_map(move |cells| {
            ComparabilityMatrix::new(
                (0..m).map(|i| format!("a{i}")).collect(),
                (0..n).map(|j| format!("c{j}")).collect(),
                cells,
            )
            .unwrap()
        })
    })
}

fn positive_generator(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.1..10.0f64, n)
}

proptest! {
    #[test]
    fn alpha_cuts_are_nested(f in trapezoid(), a in 0.0..=1.0f64, b in 0.0..=1.0f64) {
        let (low, high) = if a <= b { (a, b) } else { (b, a) };
        let outer = alpha_cut(&f, low).unwrap();
        let inner = alpha_cut(&f, high).unwrap();
        prop_assert!(outer.lo() <= inner.lo() + 1e-9 && inner.hi() <= outer.hi() + 1e-9);
        prop_assert!(outer.lo() <= outer.hi() && inner.lo() <= inner.hi());
    }

    #[test]
    fn distance_is_a_metric(a in interval(), b in interval(), c in interval()) {
        let ab = interval_distance(&a, &b);
        prop_assert!(ab >= 0.0);
        prop_assert_eq!(ab, interval_distance(&b, &a));
        prop_assert_eq!(interval_distance(&a, &a), 0.0);
        prop_assert!(ab <= interval_distance(&a, &c) + interval_distance(&c, &b) + 1e-12);
        if ab == 0.0 {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn coefficients_fall_with_distance(cm in comparability(8, 4), rho in 0.05..=1.0f64) {
        let r = reference_sequence(&cm).unwrap();
        let xi = grey_coefficients(&cm, &r, rho).unwrap();
        let mut pairs = Vec::new();
        for i in 0..cm.rows() {
            for j in 0..cm.cols() {
                let d = interval_distance(&r.entries()[j], &cm.get(i, j));
                let x = xi.get(i, j);
                prop_assert!(x > 0.0 && x <= 1.0);
                if d == xi.min_distance().unwrap() {
                    prop_assert!((x - 1.0).abs() < 1e-12);
                }
                pairs.push((d, x));
            }
        }
        for &(d1, x1) in &pairs {
            for &(d2, x2) in &pairs {
                if d1 < d2 {
                    prop_assert!(x1 > x2, "ξ not strictly decreasing: d {d1} < {d2} but ξ {x1} <= {x2}");
                }
            }
        }
    }

    #[test]
    fn column_order_ignores_rho(cm in comparability(8, 4), r1 in 0.05..=1.0f64, r2 in 0.05..=1.0f64) {
        let r = reference_sequence(&cm).unwrap();
        let a = grey_coefficients(&cm, &r, r1).unwrap();
        let b = grey_coefficients(&cm, &r, r2).unwrap();
        for j in 0..cm.cols() {
            for i in 0..cm.rows() {
                for k in 0..cm.rows() {
                    let ord_a = a.get(i, j).partial_cmp(&a.get(k, j));
                    let ord_b = b.get(i, j).partial_cmp(&b.get(k, j));
                    // Exact ties may resolve to neighbours after rounding; strict orders must agree.
                    if (a.get(i, j) - a.get(k, j)).abs() > 1e-12 {
                        prop_assert_eq!(ord_a, ord_b);
                    }
                }
            }
        }
    }

    #[test]
    fn reference_dominates_every_row(cm in comparability(8, 4)) {
        let r = reference_sequence(&cm).unwrap();
        for j in 0..cm.cols() {
            let e = r.entries()[j];
            prop_assert!((0..cm.rows()).any(|i| cm.get(i, j).lo() == e.lo()));
            prop_assert!((0..cm.rows()).any(|i| cm.get(i, j).hi() == e.hi()));
            prop_assert!((0..cm.rows()).all(|i| cm.get(i, j).lo() <= e.lo() && cm.get(i, j).hi() <= e.hi()));
        }
    }

    #[test]
    fn desirable_normalization_is_idempotent(mut cells in prop::collection::vec(unit_interval(), 1..10)) {
        let top = cells[0];
        cells[0] = Interval::new(top.lo(), 1.0).unwrap();
        let spec = AttributeSpec::desirable("x");
        let once = normalize(&cells, &spec).unwrap();
        prop_assert_eq!(&once, &cells);
        prop_assert_eq!(normalize(&once, &spec).unwrap(), once);
    }

    #[test]
    fn normalized_columns_stay_on_the_unit_scale(cells in prop::collection::vec((0.5..100.0f64, 0.0..50.0f64), 1..10)) {
        let cells: Vec<Interval> = cells.into_iter().map(|(lo, w)| Interval::new(lo, lo + w).unwrap()).collect();
        for spec in [AttributeSpec::desirable("d"), AttributeSpec::undesirable("u")] {
            let out = normalize(&cells, &spec).unwrap();
            prop_assert!(out.iter().all(|v| 0.0 <= v.lo() && v.lo() <= v.hi() && v.hi() <= 1.0 + 1e-15));
            let best = out.iter().map(Interval::hi).fold(0.0, f64::max);
            prop_assert!((best - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn priorities_are_scale_invariant(v in positive_generator(5), scale in 0.01..100.0f64) {
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let base = principal_eigenvector(&PairwiseMatrix::consistent(labels.clone(), &v).unwrap()).unwrap();
        let scaled: Vec<f64> = v.iter().map(|x| x * scale).collect();
        let other = principal_eigenvector(&PairwiseMatrix::consistent(labels, &scaled).unwrap()).unwrap();
        let total: f64 = v.iter().sum();
        for ((a, b), g) in base.weights().iter().zip(other.weights()).zip(&v) {
            prop_assert!((a - b).abs() < 1e-9);
            prop_assert!((a - g / total).abs() < 1e-9);
        }
        prop_assert!((base.lambda_max().unwrap() - 5.0).abs() < 1e-9);
    }

    #[test]
    fn perturbation_raises_lambda(v in positive_generator(4), noise in prop::collection::vec(0.5..2.0f64, 6)) {
        let n = v.len();
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut entries = vec![1.0; n * n];
        let mut t = 0;
        for h in 0..n {
            for q in h + 1..n {
                let b = v[h] / v[q] * noise[t];
                t += 1;
                entries[h * n + q] = b;
                entries[q * n + h] = 1.0 / b;
            }
        }
        let p = principal_eigenvector(&PairwiseMatrix::new(labels, entries).unwrap()).unwrap();
        let lambda = p.lambda_max().unwrap();
        prop_assert!(lambda >= n as f64 - 1e-9);
        let perturbed = noise.iter().any(|x| (x - 1.0).abs() > 1e-3);
        if perturbed {
            prop_assert!(lambda > n as f64 + 1e-12, "λ = {lambda} for an inconsistent matrix");
        }
        prop_assert!((p.weights().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(p.weights().iter().all(|&w| w > 0.0));
    }

    #[test]
    fn priorities_follow_permutations(v in positive_generator(4), noise in prop::collection::vec(0.5..2.0f64, 6), perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()) {
        let n = 4;
        let mut rows = vec![vec![1.0; n]; n];
        let mut t = 0;
        for h in 0..n {
            for q in h + 1..n {
                let b = v[h] / v[q] * noise[t];
                t += 1;
                rows[h][q] = b;
                rows[q][h] = 1.0 / b;
            }
        }
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let base = principal_eigenvector(&PairwiseMatrix::from_rows(labels.clone(), &rows).unwrap()).unwrap();
        let permuted: Vec<Vec<f64>> = (0..n).map(|h| (0..n).map(|q| rows[perm[h]][perm[q]]).collect()).collect();
        let other = principal_eigenvector(&PairwiseMatrix::from_rows(labels, &permuted).unwrap()).unwrap();
        for h in 0..n {
            prop_assert!((other.weights()[h] - base.weights()[perm[h]]).abs() < 1e-9);
        }
    }
}
