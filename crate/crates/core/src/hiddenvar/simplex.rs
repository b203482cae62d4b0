//! Phase-1 simplex for the tiny equality system `A x = b, x >= 0`.
//!
//! The systems solved here have one column per valid assignment (eleven
//! for the seven-direction graph) and a handful of rows, so a dense
//! tableau with Bland's rule is plenty. When the artificial objective
//! cannot be driven to zero the dual multipliers form a certificate
//! `y` with `y^T A >= 0` componentwise and `y^T b < 0`.

const PIVOT_EPS: f64 = 1e-10;
const MAX_ITERS: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    /// A nonnegative solution of `A x = b`.
    Feasible(Vec<f64>),
    /// Dual ray: `dual^T A >= 0` and `dual^T b < 0`.
    Infeasible { dual: Vec<f64> },
}

pub(crate) fn feasible_point(a: &[Vec<f64>], b: &[f64], feas_tol: f64) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return LpOutcome::Feasible(vec![0.0; n]);
    }

    // Flip rows so the right-hand side is nonnegative, then start from the
    // all-artificial basis.
    let sigma: Vec<f64> = b.iter().map(|&v| if v < 0.0 { -1.0 } else { 1.0 }).collect();
    let cols = n + m;
    let mut tab: Vec<Vec<f64>> = (0..m)
        .map(|k| {
            let mut row = vec![0.0; cols + 1];
            for j in 0..n {
                row[j] = sigma[k] * a[k][j];
            }
            row[n + k] = 1.0;
            row[cols] = sigma[k] * b[k];
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-1 objective (artificials cost 1): the
    // artificial columns start at zero, the real columns at minus their
    // column sums.
    let mut cost = vec![0.0; cols];
    for (j, slot) in cost.iter_mut().enumerate().take(n) {
        *slot = -tab.iter().map(|row| row[j]).sum::<f64>();
    }

    for _ in 0..MAX_ITERS {
        // Bland: first improving column.
        let Some(pcol) = (0..cols).find(|&j| cost[j] < -PIVOT_EPS) else {
            break;
        };
        // Ratio test, ties broken by smallest basis label.
        let mut prow: Option<usize> = None;
        let mut best = f64::INFINITY;
        for k in 0..m {
            if tab[k][pcol] > PIVOT_EPS {
                let ratio = tab[k][cols] / tab[k][pcol];
                let better = match prow {
                    None => true,
                    Some(cur) => {
                        ratio < best - PIVOT_EPS
                            || (ratio < best + PIVOT_EPS && basis[k] < basis[cur])
                    }
                };
                if better {
                    prow = Some(k);
                    best = ratio;
                }
            }
        }
        let Some(prow) = prow else {
            // Phase-1 objective is bounded below by zero, so this cannot
            // happen for consistent data; stop rather than loop.
            break;
        };

        let pivot = tab[prow][pcol];
        for v in &mut tab[prow] {
            *v /= pivot;
        }
        for k in 0..m {
            if k != prow && tab[k][pcol].abs() > 0.0 {
                let factor = tab[k][pcol];
                for j in 0..=cols {
                    let delta = factor * tab[prow][j];
                    tab[k][j] -= delta;
                }
            }
        }
        let factor = cost[pcol];
        if factor.abs() > 0.0 {
            for j in 0..cols {
                cost[j] -= factor * tab[prow][j];
            }
        }
        basis[prow] = pcol;
    }

    let objective: f64 = (0..m)
        .filter(|&k| basis[k] >= n)
        .map(|k| tab[k][cols])
        .sum();
    if objective.abs() <= feas_tol {
        let mut x = vec![0.0; n];
        for k in 0..m {
            if basis[k] < n {
                x[basis[k]] = tab[k][cols];
            }
        }
        LpOutcome::Feasible(x)
    } else {
        // Multipliers from the final reduced costs of the artificial
        // columns, mapped back through the row flips.
        let dual: Vec<f64> = (0..m)
            .map(|k| -sigma[k] * (1.0 - cost[n + k]))
            .collect();
        LpOutcome::Infeasible { dual }
    }
}
