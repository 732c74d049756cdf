use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Finds some `x >= 0` with `A x = b`, or `None` when the system is
/// infeasible. Phase-one simplex over exact arithmetic; Bland's rule on both
/// the entering and leaving choices makes cycling impossible, so termination
/// needs no iteration cap.
pub fn feasible_point<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Option<Vec<T>>> {
    let m = a.n_rows();
    let n = a.n_cols();
    if b.len() != m {
        return Err(Error::InvalidInput(format!(
            "right hand side has {} entries, expected {}",
            b.len(),
            m
        )));
    }

    // tableau over original columns plus one artificial per row
    let width = n + m;
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut rhs: Vec<T> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<T> = a.row(i).to_vec();
        let flip = b[i] < T::zero();
        if flip {
            for x in &mut row {
                *x = T::zero() - x.clone();
            }
        }
        row.extend((0..m).map(|j| if j == i { T::one() } else { T::zero() }));
        rows.push(row);
        rhs.push(if flip {
            T::zero() - b[i].clone()
        } else {
            b[i].clone()
        });
    }
    let mut basis: Vec<usize> = (n..width).collect();

    let pivot = |rows: &mut Vec<Vec<T>>, rhs: &mut Vec<T>, r: usize, c: usize| {
        let inv = T::one() / rows[r][c].clone();
        for x in &mut rows[r] {
            *x = x.clone() * inv.clone();
        }
        rhs[r] = rhs[r].clone() * inv;
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..width {
                    let delta = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - delta;
                }
                let delta = f * rhs[r].clone();
                rhs[i] = rhs[i].clone() - delta;
            }
        }
    };

    loop {
        // reduced cost of column j: cost(j) minus the artificial rows' entries
        let entering = (0..width).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let cost = if j >= n { T::one() } else { T::zero() };
            let mut rc = cost;
            for (i, &bv) in basis.iter().enumerate() {
                if bv >= n {
                    rc = rc - rows[i][j].clone();
                }
            }
            rc < T::zero()
        });
        let Some(e) = entering else { break };

        let mut leave: Option<usize> = None;
        for i in 0..m {
            if rows[i][e] > T::zero() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = rhs[l].clone() / rows[l][e].clone();
                        let cand = rhs[i].clone() / rows[i][e].clone();
                        cand < cur || (cand == cur && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(r) = leave else {
            return Err(Error::Internal(
                "phase-one column without positive entry".into(),
            ));
        };
        pivot(&mut rows, &mut rhs, r, e);
        basis[r] = e;
    }

    let objective_positive = basis
        .iter()
        .enumerate()
        .any(|(i, &bv)| bv >= n && !rhs[i].is_zero());
    if objective_positive {
        return Ok(None);
    }

    // artificials still basic sit at value zero; pivot them onto original
    // columns where possible so the solution reads off the original block
    for i in 0..m {
        if basis[i] >= n {
            if let Some(c) = (0..n).find(|&j| !rows[i][j].is_zero()) {
                pivot(&mut rows, &mut rhs, i, c);
                basis[i] = c;
            }
        }
    }

    let mut x = vec![T::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = rhs[i].clone();
        }
    }
    Ok(Some(x))
}
