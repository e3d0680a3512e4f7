//! Fraction-free (Bareiss) elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{common_denominator, primitive_integers, Rat};

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    swaps: usize,
}

fn echelon(matrix: &[Vec<BigInt>], cols: usize) -> Echelon {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    for row in &mut a {
        row.resize(cols, BigInt::zero());
    }
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon {
        rows: a,
        pivots,
        swaps,
    }
}

pub fn rank(matrix: &[Vec<BigInt>], cols: usize) -> usize {
    echelon(matrix, cols).pivots.len()
}

/// Determinant of a square integer matrix.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let e = echelon(matrix, n);
    if e.pivots.len() < n {
        return BigInt::zero();
    }
    let d = e.rows[n - 1][n - 1].clone();
    if e.swaps % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Basis of the right kernel as primitive integer vectors, one per free
/// column in increasing column order.
pub fn kernel_basis_int(matrix: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let e = echelon(matrix, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for (i, &p) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[i];
                let s = (p + 1..cols).fold(Rat::zero(), |acc, j| {
                    acc + Rat::from_integer(row[j].clone()) * &x[j]
                });
                x[p] = -s / Rat::from_integer(row[p].clone());
            }
            primitive_integers(&x).expect("free coordinate is one")
        })
        .collect()
}

/// Basis of the right kernel of a rational matrix.
pub fn kernel_basis(matrix: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let ints: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let den = common_denominator(row);
            row.iter().map(|r| (r * &den).to_integer()).collect()
        })
        .collect();
    kernel_basis_int(&ints, cols)
        .into_iter()
        .map(|v| v.into_iter().map(Rat::from_integer).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{monomials, rat};
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn mat_vec_is_zero(m: &[Vec<BigInt>], v: &[BigInt]) -> bool {
        m.iter().all(|row| {
            row.iter()
                .zip(v)
                .map(|(a, b)| a * b)
                .sum::<BigInt>()
                .is_zero()
        })
    }

    /// Cofactor expansion, independent of the elimination code.
    fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * cofactor_det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    #[test]
    fn identity_and_zero() {
        let id: Vec<Vec<Rat>> = (0..3)
            .map(|i| (0..3).map(|j| rat(i64::from(i == j), 1)).collect())
            .collect();
        assert!(kernel_basis(&id, 3).is_empty());
        let zero = vec![vec![Rat::zero(); 3]; 2];
        assert_eq!(kernel_basis(&zero, 3).len(), 3);
    }

    #[test]
    fn conic_kernel() {
        // Rows: monomials of degree 2 at (k, k^2 - 2, 1), k = 0..4.
        let mons = monomials(2);
        let m: Vec<Vec<BigInt>> = (0..5i64)
            .map(|k| {
                let p = [BigInt::from(k), BigInt::from(k * k - 2), BigInt::one()];
                mons.iter()
                    .map(|mo| p[0].pow(mo.x) * p[1].pow(mo.y) * p[2].pow(mo.z))
                    .collect()
            })
            .collect();
        let ker = kernel_basis_int(&m, 6);
        assert_eq!(ker.len(), 1);
        // X^2 - Y Z - 2 Z^2 in the order X^2, XY, XZ, Y^2, YZ, Z^2.
        let expected: Vec<BigInt> = [1, 0, 0, 0, -1, -2]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        let v = &ker[0];
        assert!(v == &expected || v.iter().map(|x| -x).collect::<Vec<_>>() == expected);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            determinant(&int_matrix(&[&[2, 1], &[7, 4]])),
            BigInt::from(1)
        );
        assert_eq!(
            determinant(&int_matrix(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(&int_matrix(&[&[1, 2], &[2, 4]])),
            BigInt::zero()
        );
    }

    proptest! {
        #[test]
        fn kernel_is_exact(rows in 0usize..5, cols in 1usize..6,
                           seed in prop::collection::vec(-4i64..=4, 30)) {
            let m: Vec<Vec<BigInt>> = (0..rows)
                .map(|i| (0..cols).map(|j| BigInt::from(seed[i * cols + j])).collect())
                .collect();
            let ker = kernel_basis_int(&m, cols);
            prop_assert_eq!(rank(&m, cols) + ker.len(), cols);
            for v in &ker {
                prop_assert!(mat_vec_is_zero(&m, v));
            }
        }

        #[test]
        fn determinant_matches_cofactors(n in 1usize..5, seed in prop::collection::vec(-6i64..=6, 16)) {
            let m: Vec<Vec<BigInt>> =
                (0..n).map(|i| (0..n).map(|j| BigInt::from(seed[i * n + j])).collect()).collect();
            prop_assert_eq!(determinant(&m), cofactor_det(&m));
        }
    }
}
