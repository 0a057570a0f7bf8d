//! Small dense linear algebra over [`Rational`], used for field inverses in
//! Q(ζ₈) and for weight-lattice matrices. Plain Gaussian elimination; every
//! system in scope is at most 8×8.

use super::rational::Rational;

/// Solve `m · x = rhs`. Returns `None` when `m` is singular.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip().ok()?;
        for k in col..=n {
            a[col][k] = &a[col][k] * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in col..=n {
                    a[r][k] = &a[r][k] - &(&f * &a[col][k]);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n].clone()).collect())
}

/// Matrix inverse; `None` when singular.
pub fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        cols.push(solve(m, &e)?);
    }
    // cols[j] is the j-th column of the inverse
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Determinant by fraction-aware elimination.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut result = Rational::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if pivot != col {
            a.swap(col, pivot);
            result = -result;
        }
        result = &result * &a[col][col];
        let inv = a[col][col].recip().expect("nonzero pivot");
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for k in col..n {
                    a[r][k] = &a[r][k] - &(&f * &a[col][k]);
                }
            }
        }
    }
    result
}
