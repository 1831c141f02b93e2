//! Dense two-phase primal simplex.
//!
//! Sized for the small programs built by the DEA models: a few dozen
//! variables and rows at most. Bland's rule picks both the entering and the
//! leaving variable, so the pivot sequence (and the result) depends only on
//! the input.
//!
//! Each variable is either bounded below or free. Lower bounds are shifted
//! to zero and free variables are split into the difference of two
//! non-negative columns before the tableau is built.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const PIVOT_TOLERANCE: f64 = 1e-9;
pub const FEASIBILITY_TOLERANCE: f64 = 1e-7;
const OPTIMALITY_TOLERANCE: f64 = 1e-9;
const MAX_PIVOTS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Relation {
    #[cfg_attr(feature = "serde", serde(rename = "<="))]
    Le,
    #[cfg_attr(feature = "serde", serde(rename = "="))]
    Eq,
    #[cfg_attr(feature = "serde", serde(rename = ">="))]
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Bound {
    /// `x >= value`.
    Lower(f64),
    Free,
}

impl Default for Bound {
    fn default() -> Self {
        Bound::Lower(0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Constraint {
    pub coefficients: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<f64>,
    #[cfg_attr(feature = "serde", serde(default))]
    pub constraints: Vec<Constraint>,
    /// One per variable; an empty list means every variable is `>= 0`.
    #[cfg_attr(feature = "serde", serde(default))]
    pub bounds: Vec<Bound>,
}

impl LinearProgram {
    /// A program over `objective.len()` non-negative variables with no constraints.
    pub fn new(sense: Sense, objective: Vec<f64>) -> Self {
        let bounds = vec![Bound::default(); objective.len()];
        Self {
            sense,
            objective,
            constraints: Vec::new(),
            bounds,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn constrain(&mut self, coefficients: Vec<f64>, relation: Relation, rhs: f64) -> &mut Self {
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
        self
    }

    pub fn bound(&mut self, var: usize, bound: Bound) -> &mut Self {
        self.bounds[var] = bound;
        self
    }

    fn bound_of(&self, var: usize) -> Bound {
        self.bounds.get(var).copied().unwrap_or_default()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("objective"));
        }
        if !self.bounds.is_empty() && self.bounds.len() != n {
            return Err(Error::DimensionMismatch {
                what: "variable bounds",
                expected: n,
                found: self.bounds.len(),
            });
        }
        if self
            .bounds
            .iter()
            .any(|b| matches!(b, Bound::Lower(l) if !l.is_finite()))
        {
            return Err(Error::NonFinite("variable bound"));
        }
        for c in &self.constraints {
            if c.coefficients.len() != n {
                return Err(Error::DimensionMismatch {
                    what: "constraint row",
                    expected: n,
                    found: c.coefficients.len(),
                });
            }
            if !c.rhs.is_finite() || c.coefficients.iter().any(|a| !a.is_finite()) {
                return Err(Error::NonFinite("constraint"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::Unbounded => "unbounded",
        }
    }
}

/// Result of [`solve`]. Values other than `status` are only meaningful when
/// the status is [`Status::Optimal`]; otherwise `objective` is NaN and the
/// vectors are empty.
///
/// Duals follow the sign convention of the original program: at an optimum
/// `reduced_costs[j] = objective[j] − Σ_i duals[i]·a_ij` and the objective
/// equals `Σ_i duals[i]·rhs[i] + Σ_j reduced_costs[j]·lower[j]`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LpSolution {
    pub status: Status,
    pub objective: f64,
    pub x: Vec<f64>,
    pub duals: Vec<f64>,
    pub reduced_costs: Vec<f64>,
    pub pivots: usize,
}

impl LpSolution {
    fn without_optimum(status: Status, pivots: usize) -> Self {
        Self {
            status,
            objective: f64::NAN,
            x: Vec::new(),
            duals: Vec::new(),
            reduced_costs: Vec::new(),
            pivots,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}

#[derive(Debug, Clone, Copy)]
enum ColumnMap {
    Shifted { col: usize, lower: f64 },
    Split { pos: usize, neg: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau {
    rows: usize,
    width: usize,
    /// `rows × (width + 1)`, last entry of each row is the right-hand side.
    body: Vec<f64>,
    /// Reduced-cost row with the current objective value in the last slot.
    cost: Vec<f64>,
    basis: Vec<usize>,
    kinds: Vec<ColumnKind>,
    pivots: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.body[r * (self.width + 1) + c]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.width)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let stride = self.width + 1;
        let p = self.at(r, c);
        for v in &mut self.body[r * stride..(r + 1) * stride] {
            *v /= p;
        }
        let pivot_row: Vec<f64> = self.body[r * stride..(r + 1) * stride].to_vec();
        for i in (0..self.rows).filter(|&i| i != r) {
            let factor = self.at(i, c);
            if factor != 0.0 {
                let row = &mut self.body[i * stride..(i + 1) * stride];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= factor * pv;
                }
                row[c] = 0.0;
            }
        }
        let factor = self.cost[c];
        if factor != 0.0 {
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                *v -= factor * pv;
            }
            self.cost[c] = 0.0;
        }
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Installs `costs` (maximization) as the objective and prices out the basis.
    fn set_objective(&mut self, costs: &[f64]) {
        self.cost = costs.iter().map(|c| -c).collect();
        self.cost.push(0.0);
        let stride = self.width + 1;
        for r in 0..self.rows {
            let factor = self.cost[self.basis[r]];
            if factor != 0.0 {
                for (v, t) in self.cost.iter_mut().zip(&self.body[r * stride..(r + 1) * stride]) {
                    *v -= factor * t;
                }
            }
        }
    }

    fn optimize(&mut self, allow_artificial: bool) -> Result<Outcome> {
        loop {
            if self.pivots >= MAX_PIVOTS {
                return Err(Error::NoConvergence(MAX_PIVOTS));
            }
            // Bland: lowest-index improving column.
            let entering = (0..self.width).find(|&c| {
                (allow_artificial || self.kinds[c] != ColumnKind::Artificial)
                    && self.cost[c] < -OPTIMALITY_TOLERANCE
            });
            let Some(c) = entering else {
                return Ok(Outcome::Optimal);
            };
            // Minimum ratio, ties to the lowest basic variable index.
            let mut leaving: Option<(usize, f64)> = None;
            for r in 0..self.rows {
                let a = self.at(r, c);
                if a <= PIVOT_TOLERANCE {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                leaving = match leaving {
                    None => Some((r, ratio)),
                    Some((best, best_ratio)) => {
                        let tie = (ratio - best_ratio).abs() <= 1e-12 * (1.0 + best_ratio.abs());
                        if ratio < best_ratio && !tie || tie && self.basis[r] < self.basis[best] {
                            Some((r, ratio))
                        } else {
                            Some((best, best_ratio))
                        }
                    }
                };
            }
            match leaving {
                Some((r, _)) => self.pivot(r, c),
                None => return Ok(Outcome::Unbounded),
            }
        }
    }
}

/// Solves `lp` to optimality, or reports it infeasible or unbounded.
pub fn solve(lp: &LinearProgram) -> Result<LpSolution> {
    lp.validate()?;
    let n = lp.num_vars();
    let m = lp.constraints.len();

    let mut maps = Vec::with_capacity(n);
    let mut structural = 0;
    for j in 0..n {
        maps.push(match lp.bound_of(j) {
            Bound::Lower(lower) => {
                structural += 1;
                ColumnMap::Shifted {
                    col: structural - 1,
                    lower,
                }
            }
            Bound::Free => {
                structural += 2;
                ColumnMap::Split {
                    pos: structural - 2,
                    neg: structural - 1,
                }
            }
        });
    }

    // Rows with rhs made non-negative; `flips[i]` records a negation.
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::with_capacity(m);
    let mut flips = Vec::with_capacity(m);
    for con in &lp.constraints {
        let mut a = vec![0.0; structural];
        let mut rhs = con.rhs;
        for (j, &coef) in con.coefficients.iter().enumerate() {
            match maps[j] {
                ColumnMap::Shifted { col, lower } => {
                    a[col] = coef;
                    rhs -= coef * lower;
                }
                ColumnMap::Split { pos, neg } => {
                    a[pos] = coef;
                    a[neg] = -coef;
                }
            }
        }
        let mut relation = con.relation;
        let flip = rhs < 0.0;
        if flip {
            a.iter_mut().for_each(|v| *v = -*v);
            rhs = -rhs;
            relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        flips.push(flip);
        rows.push((a, relation, rhs));
    }

    let mut kinds = vec![ColumnKind::Structural; structural];
    let mut unit_col = vec![0; m];
    let mut extra: Vec<(usize, usize, f64)> = Vec::new();
    for (i, (_, relation, _)) in rows.iter().enumerate() {
        match relation {
            Relation::Le => {
                kinds.push(ColumnKind::Slack);
                unit_col[i] = kinds.len() - 1;
                extra.push((i, kinds.len() - 1, 1.0));
            }
            Relation::Ge => {
                kinds.push(ColumnKind::Slack);
                extra.push((i, kinds.len() - 1, -1.0));
                kinds.push(ColumnKind::Artificial);
                unit_col[i] = kinds.len() - 1;
                extra.push((i, kinds.len() - 1, 1.0));
            }
            Relation::Eq => {
                kinds.push(ColumnKind::Artificial);
                unit_col[i] = kinds.len() - 1;
                extra.push((i, kinds.len() - 1, 1.0));
            }
        }
    }
    let width = kinds.len();
    let stride = width + 1;
    let mut body = vec![0.0; m * stride];
    for (i, (a, _, rhs)) in rows.iter().enumerate() {
        body[i * stride..i * stride + structural].copy_from_slice(a);
        body[i * stride + width] = *rhs;
    }
    for (i, c, v) in extra {
        body[i * stride + c] = v;
    }

    let mut tableau = Tableau {
        rows: m,
        width,
        body,
        cost: Vec::new(),
        basis: unit_col.clone(),
        kinds,
        pivots: 0,
    };

    // Phase 1: maximize −Σ artificials.
    if tableau.kinds.contains(&ColumnKind::Artificial) {
        let costs: Vec<f64> = tableau
            .kinds
            .iter()
            .map(|k| if *k == ColumnKind::Artificial { -1.0 } else { 0.0 })
            .collect();
        tableau.set_objective(&costs);
        tableau.optimize(true)?;
        if tableau.cost[width] < -FEASIBILITY_TOLERANCE {
            return Ok(LpSolution::without_optimum(Status::Infeasible, tableau.pivots));
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..m {
            if tableau.kinds[tableau.basis[r]] != ColumnKind::Artificial {
                continue;
            }
            let replacement = (0..width).find(|&c| {
                tableau.kinds[c] != ColumnKind::Artificial && tableau.at(r, c).abs() > PIVOT_TOLERANCE
            });
            if let Some(c) = replacement {
                tableau.pivot(r, c);
            }
        }
    }

    // Phase 2 in maximization form.
    let sign = match lp.sense {
        Sense::Maximize => 1.0,
        Sense::Minimize => -1.0,
    };
    let mut costs = vec![0.0; width];
    for (j, map) in maps.iter().enumerate() {
        let c = sign * lp.objective[j];
        match *map {
            ColumnMap::Shifted { col, .. } => costs[col] = c,
            ColumnMap::Split { pos, neg } => {
                costs[pos] = c;
                costs[neg] = -c;
            }
        }
    }
    tableau.set_objective(&costs);
    if let Outcome::Unbounded = tableau.optimize(false)? {
        return Ok(LpSolution::without_optimum(Status::Unbounded, tableau.pivots));
    }

    let mut values = vec![0.0; width];
    for r in 0..m {
        values[tableau.basis[r]] = tableau.rhs(r);
    }
    let x: Vec<f64> = maps
        .iter()
        .map(|map| match *map {
            ColumnMap::Shifted { col, lower } => lower + values[col],
            ColumnMap::Split { pos, neg } => values[pos] - values[neg],
        })
        .collect();
    let duals: Vec<f64> = (0..m)
        .map(|i| {
            let y = tableau.cost[unit_col[i]];
            let y = if flips[i] { -y } else { y };
            sign * y
        })
        .collect();
    let reduced_costs = (0..n)
        .map(|j| {
            lp.objective[j]
                - lp
                    .constraints
                    .iter()
                    .zip(&duals)
                    .map(|(con, y)| y * con.coefficients[j])
                    .sum::<f64>()
        })
        .collect();
    let objective = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();

    Ok(LpSolution {
        status: Status::Optimal,
        objective,
        x,
        duals,
        reduced_costs,
        pivots: tableau.pivots,
    })
}
