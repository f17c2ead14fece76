use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The 25×25 incidence matrix of the sets `I_v = {v, v+(0,1), v+(1,0), v+(1,1)}` in
/// `Z_5^2`: entry `((i,j), (i',j'))` is one iff `(i,j) ∈ I_{(i',j')}`. Index `5i + j`.
pub fn square_incidence_matrix() -> Vec<Vec<i64>> {
    let idx = |i: usize, j: usize| 5 * (i % 5) + (j % 5);
    let mut m = vec![vec![0i64; 25]; 25];
    for i2 in 0..5 {
        for j2 in 0..5 {
            for (di, dj) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                m[idx(i2 + di, j2 + dj)][idx(i2, j2)] = 1;
            }
        }
    }
    m
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Determinant of the incidence matrix and whether it is invertible.
pub fn lemma63_matrix_check() -> (BigInt, bool) {
    let det = bareiss_determinant(&square_incidence_matrix());
    let invertible = !det.is_zero();
    (det, invertible)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        assert_eq!(
            bareiss_determinant(&[vec![2, 1], vec![1, 3]]),
            BigInt::from(5)
        );
        assert_eq!(
            bareiss_determinant(&[vec![0, 1], vec![1, 0]]),
            BigInt::from(-1)
        );
        assert_eq!(
            bareiss_determinant(&[vec![1, 2], vec![2, 4]]),
            BigInt::zero()
        );
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(bareiss_determinant(&m), BigInt::from(4));
    }

    #[test]
    fn incidence_matrix_shape() {
        let m = square_incidence_matrix();
        assert!(m.iter().all(|r| r.iter().sum::<i64>() == 4));
        assert!((0..25).all(|c| m.iter().map(|r| r[c]).sum::<i64>() == 4));
    }

    #[test]
    fn matrix_is_invertible() {
        let (det, invertible) = lemma63_matrix_check();
        assert!(invertible);
        // Golden value; also the eigenvalue product ∏ (1 + ω^a)(1 + ω^b) over fifth roots.
        assert_eq!(det, BigInt::from(1024));
    }
}
