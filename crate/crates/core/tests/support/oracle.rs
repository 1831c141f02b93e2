//! Brute-force vertex enumeration for small LPs over `x >= 0`.
//!
//! Every vertex of the feasible polyhedron is the unique solution of `n`
//! linearly independent active constraints chosen among the rows (as
//! equalities) and the sign constraints `x_j = 0`. The oracle enumerates all
//! such subsets, keeps the feasible solutions and returns the best
//! objective. A far box `x_j <= BOX` is added to expose unbounded programs.

use greyrank_core::lp::{LinearProgram, Relation, Sense};
use rand::Rng;

const BOX: f64 = 1e6;
const FEAS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verdict {
    Optimal(f64),
    Infeasible,
    Unbounded,
}

fn solve_square(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-10 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in 0..n {
            if row != col {
                let f = a[row][col] / a[col][col];
                if f != 0.0 {
                    for k in col..n {
                        a[row][k] -= f * a[col][k];
                    }
                    b[row] -= f * b[col];
                }
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

fn combinations(total: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, total: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..total {
            current.push(i);
            rec(i + 1, total, k, current, out);
            current.pop();
        }
    }
    rec(0, total, k, &mut current, &mut out);
    out
}

/// Enumerates vertices of `lp`, whose variables must all be bounded below by zero.
pub fn vertex_oracle(lp: &LinearProgram) -> Verdict {
    let n = lp.num_vars();
    // Hyperplanes a·x = b: rows, then x_j = 0, then x_j = BOX.
    let mut planes: Vec<(Vec<f64>, f64)> = lp
        .constraints
        .iter()
        .map(|c| (c.coefficients.clone(), c.rhs))
        .collect();
    for j in 0..n {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        planes.push((e.clone(), 0.0));
        planes.push((e, BOX));
    }
    let feasible = |x: &[f64]| {
        x.iter().all(|&v| v >= -FEAS_TOL && v <= BOX + FEAS_TOL)
            && lp.constraints.iter().all(|c| {
                let lhs: f64 = c.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
                let scale = 1.0 + c.rhs.abs();
                match c.relation {
                    Relation::Le => lhs <= c.rhs + FEAS_TOL * scale,
                    Relation::Ge => lhs >= c.rhs - FEAS_TOL * scale,
                    Relation::Eq => (lhs - c.rhs).abs() <= FEAS_TOL * scale,
                }
            })
    };
    let better = |a: f64, b: f64| match lp.sense {
        Sense::Maximize => a > b,
        Sense::Minimize => a < b,
    };

    let mut best_inner: Option<f64> = None;
    let mut best_all: Option<f64> = None;
    for subset in combinations(planes.len(), n) {
        let a = subset.iter().map(|&i| planes[i].0.clone()).collect();
        let b = subset.iter().map(|&i| planes[i].1).collect();
        let Some(x) = solve_square(a, b) else { continue };
        if !feasible(&x) {
            continue;
        }
        let value: f64 = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
        if best_all.map_or(true, |b| better(value, b)) {
            best_all = Some(value);
        }
        if x.iter().all(|&v| v <= BOX / 2.0) && best_inner.map_or(true, |b| better(value, b)) {
            best_inner = Some(value);
        }
    }
    match (best_inner, best_all) {
        (None, None) => Verdict::Infeasible,
        (Some(inner), Some(all)) => {
            let gain = match lp.sense {
                Sense::Maximize => all - inner,
                Sense::Minimize => inner - all,
            };
            if gain > 1e-6 {
                Verdict::Unbounded
            } else {
                Verdict::Optimal(inner)
            }
        }
        _ => Verdict::Unbounded,
    }
}

/// A random LP with at most 4 variables and 4 constraints, integer data and `x >= 0`.
pub fn random_lp<R: Rng>(rng: &mut R) -> LinearProgram {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=4);
    let sense = if rng.gen_bool(0.5) { Sense::Maximize } else { Sense::Minimize };
    let objective = (0..n).map(|_| rng.gen_range(-5..=5) as f64).collect();
    let mut lp = LinearProgram::new(sense, objective);
    for _ in 0..m {
        let row = (0..n).map(|_| rng.gen_range(-5..=5) as f64).collect();
        let relation = match rng.gen_range(0..10) {
            0..=4 => Relation::Le,
            5..=7 => Relation::Ge,
            _ => Relation::Eq,
        };
        lp.constrain(row, relation, rng.gen_range(-10..=10) as f64);
    }
    lp
}
