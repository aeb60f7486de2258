//! Exact integer lattice routines: row Hermite normal form, integer kernels, membership.
//!
//! Vectors are `Vec<BigInt>`; a lattice is given by a list of spanning rows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type IntVec = Vec<BigInt>;

/// Brings `rows` to row echelon form by unimodular row operations, choosing pivots only
/// among the first `pivot_cols` columns. Returns the pivot columns; rows past the last
/// pivot are zero on those columns.
fn echelonize(rows: &mut [IntVec], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..pivot_cols {
        if top == rows.len() {
            break;
        }
        loop {
            let smallest = (top..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let Some(best) = smallest else { break };
            rows.swap(top, best);
            let mut all_cleared = true;
            for i in top + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let quotient = rows[i][col].div_floor(&rows[top][col]);
                let (head, tail) = rows.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[top], &quotient);
                if !rows[i][col].is_zero() {
                    all_cleared = false;
                }
            }
            if all_cleared {
                break;
            }
        }
        if rows[top][col].is_zero() {
            continue;
        }
        if rows[top][col].is_negative() {
            for entry in rows[top].iter_mut() {
                *entry = -&*entry;
            }
        }
        pivots.push(col);
        top += 1;
    }
    pivots
}

fn sub_multiple(target: &mut [BigInt], source: &[BigInt], factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= s * factor;
        }
    }
}

/// Canonical basis of the lattice spanned by `rows`: echelon form with positive pivots
/// and entries above each pivot reduced into `[0, pivot)`. Two spanning sets give the
/// same output exactly when they span the same lattice.
pub fn hermite_normal_form(rows: &[IntVec], ncols: usize) -> Vec<IntVec> {
    let mut work: Vec<IntVec> = rows
        .iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    debug_assert!(work.iter().all(|row| row.len() == ncols));
    let pivots = echelonize(&mut work, ncols);
    work.truncate(pivots.len());
    for (p, &col) in pivots.iter().enumerate() {
        for i in 0..p {
            let quotient = work[i][col].div_floor(&work[p][col]);
            let (head, tail) = work.split_at_mut(p);
            sub_multiple(&mut head[i], &tail[0], &quotient);
        }
    }
    work
}

/// Rank of the lattice spanned by `rows`.
pub fn rank(rows: &[IntVec], ncols: usize) -> usize {
    hermite_normal_form(rows, ncols).len()
}

/// A `ℤ`-basis (in Hermite normal form) of `{v ∈ ℤ^ncols : matrix · v = 0}`.
pub fn kernel_basis(matrix: &[IntVec], ncols: usize) -> Vec<IntVec> {
    let nrows = matrix.len();
    let mut augmented: Vec<IntVec> = (0..ncols)
        .map(|j| {
            let mut row: IntVec = matrix.iter().map(|r| r[j].clone()).collect();
            row.extend((0..ncols).map(|k| BigInt::from(u8::from(k == j))));
            row
        })
        .collect();
    let pivots = echelonize(&mut augmented, nrows);
    let kernel: Vec<IntVec> = augmented[pivots.len()..]
        .iter()
        .map(|row| row[nrows..].to_vec())
        .collect();
    hermite_normal_form(&kernel, ncols)
}

/// Whether `v` lies in the lattice with Hermite basis `hnf`.
pub fn lattice_contains(hnf: &[IntVec], v: &[BigInt]) -> bool {
    let mut residue = v.to_vec();
    for row in hnf {
        let Some(col) = row.iter().position(|x| !x.is_zero()) else { continue };
        let (quotient, remainder) = residue[col].div_rem(&row[col]);
        if !remainder.is_zero() {
            return false;
        }
        sub_multiple(&mut residue, row, &quotient);
    }
    residue.iter().all(Zero::is_zero)
}

/// Matrix (list of rows) times column vector.
pub fn mat_vec(matrix: &[IntVec], v: &[BigInt]) -> IntVec {
    matrix
        .iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<IntVec> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_augmentation() {
        // ℤ[ℤ₂] → ℤ summing both coefficients
        let kernel = kernel_basis(&ints(&[&[1, 1]]), 2);
        assert_eq!(kernel, ints(&[&[1, -1]]));
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(kernel_basis(&ints(&[&[1, 0], &[0, 1]]), 2).is_empty());
        assert_eq!(kernel_basis(&ints(&[&[0]]), 1), ints(&[&[1]]));
        assert_eq!(kernel_basis(&[], 2), ints(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn hnf_is_canonical() {
        let a = hermite_normal_form(&ints(&[&[2, 4], &[3, 1]]), 2);
        let b = hermite_normal_form(&ints(&[&[5, 5], &[3, 1], &[2, 4]]), 2);
        assert_eq!(a, b);
        assert_eq!(a, ints(&[&[1, 7], &[0, 10]]));
    }

    #[test]
    fn membership() {
        let hnf = hermite_normal_form(&ints(&[&[2, 0], &[0, 3]]), 2);
        assert!(lattice_contains(&hnf, &ints(&[&[4, -3]])[0]));
        assert!(!lattice_contains(&hnf, &ints(&[&[1, 0]])[0]));
    }

    #[test]
    fn saturated_kernel() {
        // kernel of [2, 4] is spanned by (2, -1), not by (4, -2)
        let kernel = kernel_basis(&ints(&[&[2, 4]]), 2);
        assert_eq!(kernel, ints(&[&[2, -1]]));
    }
}
