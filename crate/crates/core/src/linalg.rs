//! Exact dense linear algebra over the rationals for small systems.

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

pub fn q(x: i64) -> Rational {
    Rational::from_integer(x)
}

pub fn qadd(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn qsub(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub fn qmul(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn qdiv(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_div(b).ok_or(Error::Overflow)
}

/// `sum_i a_i * b_i`, checked.
pub fn dot(a: &[Rational], b: &[Rational]) -> Result<Rational> {
    a.iter()
        .zip(b)
        .try_fold(Rational::zero(), |acc, (x, y)| qadd(&acc, &qmul(x, y)?))
}

/// Greedy scan for linearly independent vectors.
///
/// Returns the indices of the vectors that are independent of everything
/// accepted before them, and one pivot coordinate per accepted vector such
/// that the square submatrix of the accepted vectors on those coordinates is
/// invertible.
pub fn independent_prefix<'a, I>(vectors: I) -> Result<(Vec<usize>, Vec<usize>)>
where
    I: IntoIterator<Item = &'a [i64]>,
{
    let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors.into_iter().enumerate() {
        let mut r: Vec<Rational> = v.iter().map(|&x| q(x)).collect();
        for (p, row) in &rows {
            if r[*p].is_zero() {
                continue;
            }
            let f = qdiv(&r[*p], &row[*p])?;
            for (x, y) in r.iter_mut().zip(row) {
                *x = qsub(x, &qmul(&f, y)?)?;
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            rows.push((p, r));
            chosen.push(idx);
        }
    }
    Ok((chosen, rows.into_iter().map(|(p, _)| p).collect()))
}

pub fn rank<'a, I>(vectors: I) -> Result<usize>
where
    I: IntoIterator<Item = &'a [i64]>,
{
    Ok(independent_prefix(vectors)?.0.len())
}

/// Inverse of a square matrix by Gauss-Jordan elimination, or `None` when
/// singular.
pub fn inverse(m: &[Vec<Rational>]) -> Result<Option<Vec<Vec<Rational>>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| q((i == j) as i64)).collect())
        .collect();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(None);
        };
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col];
        for j in 0..n {
            a[col][j] = qdiv(&a[col][j], &d)?;
            inv[col][j] = qdiv(&inv[col][j], &d)?;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col];
            for j in 0..n {
                a[r][j] = qsub(&a[r][j], &qmul(&f, &a[col][j])?)?;
                inv[r][j] = qsub(&inv[r][j], &qmul(&f, &inv[col][j])?)?;
            }
        }
    }
    Ok(Some(inv))
}

/// `m * v`.
pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Result<Vec<Rational>> {
    m.iter().map(|row| dot(row, v)).collect()
}
