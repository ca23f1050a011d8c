use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_DENSE_ORDER};

/// Exact number of spanning trees: the determinant of the Laplacian with the
/// last row and column removed, by fraction-free (Bareiss) elimination.
pub fn spanning_tree_count(g: &Graph) -> Result<BigUint> {
    let n = g.n();
    if n > MAX_DENSE_ORDER {
        return Err(Error::capacity(format!(
            "exact spanning-tree count is limited to {MAX_DENSE_ORDER} vertices"
        )));
    }
    if g.components().1 != 1 {
        return Ok(BigUint::zero());
    }
    let k = n - 1;
    let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k]; k];
    for (v, row) in a.iter_mut().enumerate() {
        row[v] = BigInt::from(g.degree(v));
    }
    for &(u, v) in g.edges() {
        if u < k && v < k {
            a[u][v] = BigInt::from(-1);
            a[v][u] = BigInt::from(-1);
        }
    }
    let det = bareiss_determinant(a);
    det.to_biguint()
        .ok_or_else(|| Error::numeric("negative Laplacian cofactor"))
}

/// Determinant of an integer matrix; every intermediate division is exact.
pub(crate) fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let k = a.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for i in 0..k {
        if a[i][i].is_zero() {
            match (i + 1..k).find(|&r| !a[r][i].is_zero()) {
                Some(r) => {
                    a.swap(i, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let v = (&a[r][c] * &a[i][i] - &a[r][i] * &a[i][c]) / &prev;
                a[r][c] = v;
            }
            a[r][i] = BigInt::zero();
        }
        prev = a[i][i].clone();
    }
    sign * &a[k - 1][k - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn count(f: Family, n: usize) -> BigUint {
        spanning_tree_count(&generate(f, n).unwrap()).unwrap()
    }

    #[test]
    fn four_vertex_counts() {
        assert_eq!(count(Family::Complete, 4), BigUint::from(16u32));
        assert_eq!(count(Family::Cycle, 4), BigUint::from(4u32));
        assert_eq!(count(Family::Star, 4), BigUint::from(1u32));
        assert_eq!(count(Family::Path, 4), BigUint::from(1u32));
        assert_eq!(count(Family::Empty, 4), BigUint::zero());
        assert_eq!(count(Family::Empty, 1), BigUint::one());
    }

    #[test]
    fn cayley_formula() {
        for n in 2..12u32 {
            assert_eq!(count(Family::Complete, n as usize), BigUint::from(n).pow(n - 2));
        }
        // n^(n-2) for n = 40 overflows every machine integer
        assert_eq!(count(Family::Complete, 40), BigUint::from(40u32).pow(38));
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = |rows: [[i64; 3]; 3]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(
            bareiss_determinant(m([[0, 1, 2], [1, 0, 3], [4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(
            bareiss_determinant(m([[1, 2, 3], [2, 4, 6], [0, 1, 1]])),
            BigInt::zero()
        );
    }
}
