use super::RepError;
use crate::linalg::Matrix;
use crate::scalars::Scalar;

/// Basis of `ker (a − λ)^k` for `k` large enough that the kernel is stable.
pub fn generalized_kernel(a: &Matrix, lambda: &Scalar) -> Matrix {
    let shifted = a.sub(&Matrix::scalar(a.rows(), lambda.clone()));
    let mut power = shifted.clone();
    let mut kernel = power.nullspace();
    while kernel.cols() > 0 && kernel.cols() < a.rows() {
        power = power.mul(&shifted);
        let next = power.nullspace();
        if next.cols() == kernel.cols() {
            break;
        }
        kernel = next;
    }
    kernel
}

/// Splits the space into generalized eigenspaces of `a` for eigenvalues `q^j`,
/// `|j| ≤ window`. Fails if the eigenvalues found do not account for every
/// dimension.
pub fn integral_eigenspaces(a: &Matrix, window: i32) -> Result<Vec<(i32, Matrix)>, RepError> {
    let dim = a.rows();
    let mut found = Vec::new();
    let mut total = 0;
    let candidates = std::iter::once(0).chain((1..=window).flat_map(|j| [j, -j]));
    for j in candidates {
        if total == dim {
            break;
        }
        let k = generalized_kernel(a, &Scalar::q_pow(j));
        if k.cols() > 0 {
            total += k.cols();
            found.push((j, k));
        }
    }
    if total != dim {
        return Err(RepError::NotIntegral { found: total, dim });
    }
    found.sort_by_key(|(j, _)| *j);
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jordan_block() {
        let q = Scalar::q();
        let a = Matrix::from_rows(vec![vec![q.clone(), Scalar::one()], vec![Scalar::zero(), q.clone()]]);
        assert_eq!(generalized_kernel(&a, &q).cols(), 2);
        assert_eq!(a.sub(&Matrix::scalar(2, q)).nullspace().cols(), 1);
    }

    #[test]
    fn split_diagonal() {
        let a = Matrix::diagonal(&[Scalar::one(), Scalar::q_pow(2), Scalar::q_pow(2)]);
        let parts = integral_eigenspaces(&a, 4).unwrap();
        assert_eq!(parts.iter().map(|(j, b)| (*j, b.cols())).collect::<Vec<_>>(), vec![(0, 1), (2, 2)]);
        let b = Matrix::diagonal(&[Scalar::from_int(5)]);
        assert!(integral_eigenspaces(&b, 3).is_err());
    }
}
