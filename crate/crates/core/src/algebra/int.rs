//! Exact integer elimination: rank, Bareiss determinants, Smith normal form,
//! saturated integer kernels and row Hermite normal form.
//!
//! Each routine is written once over [`ExactInt`] and run first on checked
//! `i128`; on overflow the same routine is rerun on `BigInt`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::MatrixZ;

pub(crate) trait ExactInt: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add_c(&self, o: &Self) -> Option<Self>;
    fn sub_c(&self, o: &Self) -> Option<Self>;
    fn mul_c(&self, o: &Self) -> Option<Self>;
    fn neg_c(&self) -> Option<Self>;
    /// Quotient of an exact division.
    fn div_exact(&self, o: &Self) -> Self;
    fn div_floor_c(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    /// `|self| < |o|`
    fn abs_lt(&self, o: &Self) -> bool;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn add_c(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg_c(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn div_floor_c(&self, o: &Self) -> Option<Self> {
        if *o == -1 {
            return self.checked_neg();
        }
        Some(Integer::div_floor(self, o))
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.unsigned_abs() < o.unsigned_abs()
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add_c(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub_c(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul_c(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg_c(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn div_floor_c(&self, o: &Self) -> Option<Self> {
        Some(Integer::div_floor(self, o))
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.magnitude() < o.magnitude()
    }
}

fn lift<T: ExactInt>(a: &MatrixZ) -> Vec<Vec<T>> {
    (0..a.rows())
        .map(|r| a.row(r).iter().map(|&v| T::from_i64(v)).collect())
        .collect()
}

pub(crate) fn lift_big<T: ExactInt>(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<T>>> {
    rows.iter()
        .map(|r| r.iter().map(T::from_big).collect())
        .collect()
}

fn to_big_rows<T: ExactInt>(rows: Vec<Vec<T>>) -> Vec<Vec<BigInt>> {
    rows.into_iter()
        .map(|r| r.iter().map(T::to_big).collect())
        .collect()
}

/// `x <- x*a - y*b` elementwise from `start`.
fn combine<T: ExactInt>(x: &mut [T], a: &T, y: &[T], b: &T, start: usize) -> Option<()> {
    for k in start..x.len() {
        let lhs = x[k].mul_c(a)?;
        let v = if y[k].is_zero() {
            lhs
        } else {
            lhs.sub_c(&y[k].mul_c(b)?)?
        };
        x[k] = v;
    }
    Some(())
}

/// `x <- x - q*y` elementwise.
fn axpy<T: ExactInt>(x: &mut [T], q: &T, y: &[T]) -> Option<()> {
    for k in 0..x.len() {
        if !y[k].is_zero() {
            x[k] = x[k].sub_c(&y[k].mul_c(q)?)?;
        }
    }
    Some(())
}

fn divide_out_content<T: ExactInt>(row: &mut [T]) {
    let mut g = T::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g == T::one() {
                return;
            }
        }
    }
    if !g.is_zero() {
        for v in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// Rank over the rationals by elimination with primitive rows.
pub(crate) fn rank_generic<T: ExactInt>(mut a: Vec<Vec<T>>, cols: usize) -> Option<usize> {
    a.retain(|r| r.iter().any(|v| !v.is_zero()));
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len())
            .filter(|&i| !a[i][c].is_zero())
            .min_by(|&i, &j| {
                if a[i][c].abs_lt(&a[j][c]) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            })
        else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let mp = pv.div_exact(&g);
            let mi = row[c].div_exact(&g);
            combine(row, &mp, pivot_row, &mi, c)?;
            divide_out_content(row);
        }
        r += 1;
    }
    Some(r)
}

/// Bareiss fraction-free determinant with row pivoting.
pub(crate) fn determinant_generic<T: ExactInt>(mut a: Vec<Vec<T>>) -> Option<T> {
    let n = a.len();
    if n == 0 {
        return Some(T::one());
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Some(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .mul_c(&a[k][k])?
                    .sub_c(&a[i][k].mul_c(&a[k][j])?)?;
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg_c()
    } else {
        Some(d)
    }
}

/// Nonzero invariant factors, positive and in divisibility order.
pub(crate) fn snf_generic<T: ExactInt>(mut a: Vec<Vec<T>>, cols: usize) -> Option<Vec<T>> {
    let rows = a.len();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows && t < cols {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs_lt(&a[bi][bj]))
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor_c(&a[t][t])?;
                let (top, rest) = a.split_at_mut(i);
                axpy(&mut rest[0][t..], &q, &top[t][t..])?;
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor_c(&a[t][t])?;
                for row in a.iter_mut().skip(t) {
                    if !row[t].is_zero() {
                        row[j] = row[j].sub_c(&row[t].mul_c(&q)?)?;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let p = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| {
                    !a[i][j].is_zero() && !a[i][j].div_floor_c(&p).is_some_and(|q| {
                        q.mul_c(&p).is_some_and(|v| v == a[i][j])
                    })
                })
            });
            match bad {
                Some(i) => {
                    let (top, rest) = a.split_at_mut(i);
                    let src = rest[0].clone();
                    for (x, y) in top[t].iter_mut().zip(src.iter()) {
                        *x = x.add_c(y)?;
                    }
                }
                None => break,
            }
        }
        let p = a[t][t].clone();
        factors.push(if p.is_negative() { p.neg_c()? } else { p });
        t += 1;
    }
    Some(factors)
}

/// Basis of the integer kernel `{x in Z^cols : A x = 0}`, saturated, in
/// row Hermite normal form.
pub(crate) fn kernel_generic<T: ExactInt>(a: Vec<Vec<T>>, cols: usize) -> Option<Vec<Vec<T>>> {
    let rows = a.len();
    // column j: A-part then U-part (U starts as the identity)
    let mut colv: Vec<Vec<T>> = (0..cols)
        .map(|j| {
            let mut v: Vec<T> = (0..rows).map(|i| a[i][j].clone()).collect();
            v.extend((0..cols).map(|k| if k == j { T::one() } else { T::zero() }));
            v
        })
        .collect();
    let mut p = 0;
    for i in 0..rows {
        if p == cols {
            break;
        }
        loop {
            let Some(k) = (p..cols)
                .filter(|&k| !colv[k][i].is_zero())
                .min_by(|&x, &y| {
                    if colv[x][i].abs_lt(&colv[y][i]) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
            else {
                break;
            };
            colv.swap(p, k);
            let mut remaining = false;
            for k in p + 1..cols {
                if colv[k][i].is_zero() {
                    continue;
                }
                let q = colv[k][i].div_floor_c(&colv[p][i])?;
                let (left, right) = colv.split_at_mut(k);
                axpy(&mut right[0], &q, &left[p])?;
                if !colv[k][i].is_zero() {
                    remaining = true;
                }
            }
            if !remaining {
                p += 1;
                break;
            }
        }
    }
    let basis: Vec<Vec<T>> = colv[p..].iter().map(|c| c[rows..].to_vec()).collect();
    hnf_generic(basis, cols)
}

/// Row Hermite normal form of the lattice spanned by `v`: positive pivots
/// in increasing columns, entries above a pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub(crate) fn hnf_generic<T: ExactInt>(mut v: Vec<Vec<T>>, cols: usize) -> Option<Vec<Vec<T>>> {
    let mut r = 0;
    for c in 0..cols {
        if r == v.len() {
            break;
        }
        loop {
            let Some(k) = (r..v.len())
                .filter(|&k| !v[k][c].is_zero())
                .min_by(|&x, &y| {
                    if v[x][c].abs_lt(&v[y][c]) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
            else {
                break;
            };
            v.swap(r, k);
            let mut remaining = false;
            for k in r + 1..v.len() {
                if v[k][c].is_zero() {
                    continue;
                }
                let q = v[k][c].div_floor_c(&v[r][c])?;
                let (top, rest) = v.split_at_mut(k);
                axpy(&mut rest[0], &q, &top[r])?;
                if !v[k][c].is_zero() {
                    remaining = true;
                }
            }
            if remaining {
                continue;
            }
            if v[r][c].is_negative() {
                for x in v[r].iter_mut() {
                    *x = x.neg_c()?;
                }
            }
            for i in 0..r {
                let q = v[i][c].div_floor_c(&v[r][c])?;
                if !q.is_zero() {
                    let (top, rest) = v.split_at_mut(r);
                    axpy(&mut top[i], &q, &rest[0])?;
                }
            }
            r += 1;
            break;
        }
    }
    v.truncate(r);
    Some(v)
}

// Public wrappers: checked i128 first, BigInt on overflow.

/// Rank over the rationals of an integer matrix.
pub fn rank_z(a: &MatrixZ) -> usize {
    rank_generic::<i128>(lift(a), a.cols())
        .unwrap_or_else(|| rank_generic::<BigInt>(lift(a), a.cols()).unwrap())
}

pub(crate) fn rank_big(rows: &[Vec<BigInt>], cols: usize) -> usize {
    lift_big::<i128>(rows)
        .and_then(|r| rank_generic(r, cols))
        .unwrap_or_else(|| rank_generic(rows.to_vec(), cols).unwrap())
}

/// Determinant of a square integer matrix.
pub fn determinant_z(a: &MatrixZ) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    determinant_generic::<i128>(lift(a))
        .map(|d| d.to_big())
        .unwrap_or_else(|| determinant_generic::<BigInt>(lift(a)).unwrap())
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_normal_form(a: &MatrixZ) -> Vec<BigInt> {
    snf_generic::<i128>(lift(a), a.cols())
        .map(|f| f.iter().map(ExactInt::to_big).collect())
        .unwrap_or_else(|| snf_generic::<BigInt>(lift(a), a.cols()).unwrap())
}

pub(crate) fn smith_normal_form_big(rows: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    lift_big::<i128>(rows)
        .and_then(|r| snf_generic(r, cols))
        .map(|f| f.iter().map(ExactInt::to_big).collect())
        .unwrap_or_else(|| snf_generic(rows.to_vec(), cols).unwrap())
}

/// Saturated basis of the integer right kernel of `a`, in row Hermite form.
pub fn integer_kernel_basis(a: &MatrixZ) -> Vec<Vec<BigInt>> {
    kernel_generic::<i128>(lift(a), a.cols())
        .map(to_big_rows)
        .unwrap_or_else(|| kernel_generic::<BigInt>(lift(a), a.cols()).unwrap())
}

/// Row Hermite normal form of the lattice spanned by `rows`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    lift_big::<i128>(rows)
        .and_then(|r| hnf_generic(r, cols))
        .map(to_big_rows)
        .unwrap_or_else(|| hnf_generic(rows.to_vec(), cols).unwrap())
}

/// Coordinates of `v` in a lattice basis given in row Hermite form, or
/// `None` when `v` is not in the lattice.
pub fn coordinates_in_hermite_basis(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for b in basis {
        let c = b.iter().position(|x| !Zero::is_zero(x))?;
        let (q, r) = rest[c].div_rem(&b[c]);
        if !Zero::is_zero(&r) {
            return None;
        }
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= &q * y;
        }
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> MatrixZ {
        let cols = rows.first().map_or(0, |r| r.len());
        MatrixZ::from_rows(cols, rows.iter().map(|r| r.to_vec()).collect())
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&m(&[&[2, 0], &[0, 3]])), big(&[1, 6]));
        assert_eq!(smith_normal_form(&m(&[&[1, 0], &[0, 1]])), big(&[1, 1]));
        assert!(smith_normal_form(&m(&[&[0, 0], &[0, 0]])).is_empty());
        assert_eq!(
            smith_normal_form(&m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])),
            big(&[2, 6, 12])
        );
    }

    #[test]
    fn rank_and_det() {
        let tri = m(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]);
        assert_eq!(rank_z(&tri), 2);
        assert_eq!(determinant_z(&tri), BigInt::from(0));
        assert_eq!(determinant_z(&m(&[&[2, 1], &[1, 2]])), BigInt::from(3));
        assert_eq!(determinant_z(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant_z(&MatrixZ::from_rows(0, vec![])), BigInt::from(1));
    }

    #[test]
    fn bigint_fallback_matches() {
        // entries large enough to overflow i128 in products
        let huge = i64::MAX / 3;
        let a = m(&[&[huge, huge - 1, 7], &[huge - 5, huge, 3], &[1, 2, huge]]);
        let d = determinant_z(&a);
        let rows: Vec<Vec<BigInt>> = (0..3).map(|r| big(a.row(r))).collect();
        assert_eq!(d, determinant_generic::<BigInt>(rows).unwrap());
    }

    #[test]
    fn kernel_of_triangle_incidence() {
        let tri = m(&[&[-1, 0, 1], &[1, -1, 0], &[0, 1, -1]]);
        assert_eq!(integer_kernel_basis(&tri), vec![big(&[1, 1, 1])]);
        let k = integer_kernel_basis(&m(&[&[2, 4]]));
        assert_eq!(k, vec![big(&[2, -1])]);
    }

    #[test]
    fn hermite_coordinates() {
        let b = hermite_normal_form(&[big(&[2, 1]), big(&[0, 3])], 2);
        assert_eq!(b, vec![big(&[2, 1]), big(&[0, 3])]);
        assert_eq!(
            coordinates_in_hermite_basis(&b, &big(&[4, 5])),
            Some(big(&[2, 1]))
        );
        assert_eq!(coordinates_in_hermite_basis(&b, &big(&[1, 0])), None);
    }
}
