//! Exact phase-one simplex for cone membership `G λ = t, λ >= 0`.
//!
//! Bland's rule on a dense rational tableau. When the artificial objective
//! stays positive, the simplex multipliers give a Farkas witness `w` with
//! `<w, G_j> <= 0` for every column and `<w, t> > 0`.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Membership {
    Inside(Vec<Rational>),
    Outside(Vec<Rational>),
}

/// `columns[j]` is the j-th generator as a vector of length `target.len()`.
pub(crate) fn cone_membership(columns: &[Vec<Rational>], target: &[Rational]) -> Membership {
    let m = target.len();
    let k = columns.len();
    let width = k + m;

    // rows flipped so the right-hand side is nonnegative
    let row_sign: Vec<bool> = target.iter().map(|t| t.is_negative()).collect();
    let mut tab: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(width);
            for col in columns {
                let v = col[i].clone();
                row.push(if row_sign[i] { -v } else { v });
            }
            for a in 0..m {
                row.push(if a == i { Rational::from_integer(1.into()) } else { Rational::zero() });
            }
            row
        })
        .collect();
    let mut rhs: Vec<Rational> = target.iter().map(|t| t.abs()).collect();
    let mut basis: Vec<usize> = (k..width).collect();

    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost: Vec<Rational> = (0..width)
        .map(|j| {
            if j < k {
                -tab.iter().fold(Rational::zero(), |acc, row| acc + &row[j])
            } else {
                Rational::zero()
            }
        })
        .collect();
    let mut neg_obj: Rational = -rhs.iter().fold(Rational::zero(), |acc, r| acc + r);

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &tab[i][enter];
            let better = match &best {
                None => true,
                Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        // phase one is bounded below, so some row always limits the step
        let r = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut rhs, &mut cost, &mut neg_obj, r, enter);
        basis[r] = enter;
    }

    if neg_obj.is_zero() {
        let mut lambda = vec![Rational::zero(); k];
        for (i, &b) in basis.iter().enumerate() {
            if b < k {
                lambda[b] = rhs[i].clone();
            }
        }
        Membership::Inside(lambda)
    } else {
        // y_i = 1 - (reduced cost of artificial i); undo the row flips
        let one = Rational::from_integer(1.into());
        let witness = (0..m)
            .map(|i| {
                let y = &one - &cost[k + i];
                if row_sign[i] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        Membership::Outside(witness)
    }
}

fn pivot(
    tab: &mut [Vec<Rational>],
    rhs: &mut [Rational],
    cost: &mut [Rational],
    neg_obj: &mut Rational,
    r: usize,
    c: usize,
) {
    let p = tab[r][c].clone();
    for v in tab[r].iter_mut() {
        *v /= &p;
    }
    rhs[r] /= &p;
    let prow = tab[r].clone();
    let prhs = rhs[r].clone();
    for i in 0..tab.len() {
        if i == r || tab[i][c].is_zero() {
            continue;
        }
        let f = tab[i][c].clone();
        for (v, pv) in tab[i].iter_mut().zip(&prow) {
            *v -= &f * pv;
        }
        rhs[i] -= &f * &prhs;
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            *v -= &f * pv;
        }
        *neg_obj -= &f * &prhs;
    }
}
