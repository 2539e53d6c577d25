//! Exact two-phase simplex method over the rationals with Bland's rule.

use num_traits::{Signed, Zero};

use crate::rational::{one, zero, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub cmp: Cmp,
    pub rhs: Rational,
}

/// A linear program in `n` variables. Variables are nonnegative unless
/// marked free. The objective, if any, is maximized.
#[derive(Clone, Debug)]
pub struct Lp {
    pub free: Vec<bool>,
    pub constraints: Vec<Constraint>,
    pub objective: Option<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Optimal { x: Vec<Rational>, value: Rational },
    Unbounded { x: Vec<Rational> },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Infeasible => None,
            LpOutcome::Optimal { x, .. } | LpOutcome::Unbounded { x } => Some(x),
        }
    }
}

impl Lp {
    pub fn new(n: usize) -> Self {
        Self {
            free: vec![false; n],
            constraints: Vec::new(),
            objective: None,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.free.len()
    }

    pub fn add_var(&mut self, free: bool) -> usize {
        self.free.push(free);
        for c in &mut self.constraints {
            c.coeffs.push(zero());
        }
        if let Some(obj) = &mut self.objective {
            obj.push(zero());
        }
        self.free.len() - 1
    }

    pub fn constrain(&mut self, mut coeffs: Vec<Rational>, cmp: Cmp, rhs: Rational) {
        coeffs.resize(self.n_vars(), zero());
        self.constraints.push(Constraint { coeffs, cmp, rhs });
    }

    pub fn maximize(&mut self, mut obj: Vec<Rational>) {
        obj.resize(self.n_vars(), zero());
        self.objective = Some(obj);
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(self)
    }
}

enum Step {
    Optimal,
    Unbounded,
}

struct Tableau {
    /// Rows `[a_1 .. a_cols | rhs]`, canonical with respect to `basis`.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
    artificial_from: usize,
    /// `(positive column, negative column)` per original variable.
    var_cols: Vec<(usize, Option<usize>)>,
}

impl Tableau {
    fn build(lp: &Lp) -> Self {
        let mut var_cols = Vec::with_capacity(lp.n_vars());
        let mut cols = 0;
        for &free in &lp.free {
            let pos = cols;
            cols += 1;
            let neg = free.then(|| {
                cols += 1;
                cols - 1
            });
            var_cols.push((pos, neg));
        }
        let structural = cols;

        let mut normalized = Vec::with_capacity(lp.constraints.len());
        for c in &lp.constraints {
            let mut coeffs = vec![zero(); structural];
            for (i, a) in c.coeffs.iter().enumerate() {
                let (p, n) = var_cols[i];
                coeffs[p] = a.clone();
                if let Some(n) = n {
                    coeffs[n] = -a.clone();
                }
            }
            let (mut cmp, mut rhs) = (c.cmp, c.rhs.clone());
            if rhs.is_negative() {
                coeffs.iter_mut().for_each(|a| *a = -a.clone());
                rhs = -rhs;
                cmp = match cmp {
                    Cmp::Le => Cmp::Ge,
                    Cmp::Ge => Cmp::Le,
                    Cmp::Eq => Cmp::Eq,
                };
            }
            normalized.push((coeffs, cmp, rhs));
        }

        let slacks = normalized.iter().filter(|(_, c, _)| *c != Cmp::Eq).count();
        let artificials = normalized.iter().filter(|(_, c, _)| *c != Cmp::Le).count();
        let artificial_from = structural + slacks;
        let total = artificial_from + artificials;
        let (mut next_slack, mut next_art) = (structural, artificial_from);
        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        for (coeffs, cmp, rhs) in normalized {
            let mut row = coeffs;
            row.resize(total + 1, zero());
            row[total] = rhs;
            match cmp {
                Cmp::Le => {
                    row[next_slack] = one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Cmp::Ge => {
                    row[next_slack] = -one();
                    next_slack += 1;
                    row[next_art] = one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Cmp::Eq => {
                    row[next_art] = one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        Self {
            rows,
            basis,
            cols: total,
            artificial_from,
            var_cols,
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if p != one() {
            for a in self.rows[r].iter_mut() {
                if !a.is_zero() {
                    *a = &*a / &p;
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · y` over columns `< allowed`.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Step {
        loop {
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut rc = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if !row[j].is_zero() {
                        rc -= &cost[self.basis[i]] * &row[j];
                    }
                }
                rc.is_positive()
            });
            let Some(j) = entering else {
                return Step::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((i, _)) => self.pivot(i, j),
                None => return Step::Unbounded,
            }
        }
    }

    fn point(&self) -> Vec<Rational> {
        let mut y = vec![zero(); self.cols];
        for (i, &b) in self.basis.iter().enumerate() {
            y[b] = self.rows[i][self.cols].clone();
        }
        self.var_cols
            .iter()
            .map(|&(p, n)| match n {
                Some(n) => &y[p] - &y[n],
                None => y[p].clone(),
            })
            .collect()
    }

    fn run(mut self, lp: &Lp) -> LpOutcome {
        if self.artificial_from < self.cols {
            let mut cost = vec![zero(); self.cols];
            for c in cost.iter_mut().skip(self.artificial_from) {
                *c = -one();
            }
            self.optimize(&cost, self.cols);
            let residual = self
                .basis
                .iter()
                .zip(&self.rows)
                .any(|(&b, row)| b >= self.artificial_from && !row[self.cols].is_zero());
            if residual {
                return LpOutcome::Infeasible;
            }
            let mut i = 0;
            while i < self.rows.len() {
                if self.basis[i] >= self.artificial_from {
                    match (0..self.artificial_from).find(|&j| !self.rows[i][j].is_zero()) {
                        Some(j) => {
                            self.pivot(i, j);
                            i += 1;
                        }
                        None => {
                            self.rows.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        let Some(obj) = &lp.objective else {
            return LpOutcome::Optimal {
                x: self.point(),
                value: zero(),
            };
        };
        let mut cost = vec![zero(); self.cols];
        for (i, c) in obj.iter().enumerate() {
            let (p, n) = self.var_cols[i];
            cost[p] = c.clone();
            if let Some(n) = n {
                cost[n] = -c.clone();
            }
        }
        match self.optimize(&cost, self.artificial_from) {
            Step::Optimal => {
                let x = self.point();
                let value = x.iter().zip(obj).map(|(a, b)| a * b).sum();
                LpOutcome::Optimal { x, value }
            }
            Step::Unbounded => LpOutcome::Unbounded { x: self.point() },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 2y s.t. x + y ≤ 4, x + 3y ≤ 6, x ≤ 3.
        let mut lp = Lp::new(2);
        lp.constrain(v(&[1, 1]), Cmp::Le, int(4));
        lp.constrain(v(&[1, 3]), Cmp::Le, int(6));
        lp.constrain(v(&[1, 0]), Cmp::Le, int(3));
        lp.maximize(v(&[3, 2]));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                x: v(&[3, 1]),
                value: int(11)
            }
        );
    }

    #[test]
    fn equality_and_free_variables() {
        // x free, y ≥ 0: x + y = -1, y ≥ 1/2, max x.
        let mut lp = Lp::new(0);
        lp.add_var(true);
        lp.add_var(false);
        lp.constrain(v(&[1, 1]), Cmp::Eq, int(-1));
        lp.constrain(v(&[0, 2]), Cmp::Ge, int(1));
        lp.maximize(v(&[1, 0]));
        match lp.solve() {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(value, ratio(-3, 2));
                assert_eq!(x, vec![ratio(-3, 2), ratio(1, 2)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = Lp::new(1);
        lp.constrain(v(&[1]), Cmp::Ge, int(2));
        lp.constrain(v(&[1]), Cmp::Le, int(1));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);

        let mut lp = Lp::new(1);
        lp.constrain(v(&[1]), Cmp::Ge, int(2));
        lp.maximize(v(&[1]));
        assert!(matches!(lp.solve(), LpOutcome::Unbounded { .. }));
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = Lp::new(2);
        lp.constrain(v(&[1, 1]), Cmp::Eq, int(2));
        lp.constrain(v(&[2, 2]), Cmp::Eq, int(4));
        lp.maximize(v(&[1, -1]));
        assert_eq!(
            lp.solve(),
            LpOutcome::Optimal {
                x: v(&[2, 0]),
                value: int(2)
            }
        );
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let mut lp = Lp::new(4);
        lp.constrain(vec![ratio(1, 4), int(-8), int(-1), int(9)], Cmp::Le, int(0));
        lp.constrain(
            vec![ratio(1, 2), int(-12), ratio(-1, 2), int(3)],
            Cmp::Le,
            int(0),
        );
        lp.constrain(v(&[0, 0, 1, 0]), Cmp::Le, int(1));
        lp.maximize(vec![ratio(3, 4), int(-20), ratio(1, 2), int(-6)]);
        match lp.solve() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ratio(5, 4)),
            other => panic!("{other:?}"),
        }
    }
}
