//! Exact determinants of rational and polynomial matrices.

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, GenPolynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

/// Largest size the Laplace expansion accepts (column subsets fit in a `u64`).
pub const MAX_LAPLACE: usize = 63;

/// Ring operations needed by the Laplace expansion.
pub trait LaplaceEntry: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn is_zero_entry(&self) -> bool;
    fn mul_entry(&self, other: &Self) -> Self;
    fn add_assign_entry(&mut self, other: &Self);
    fn neg_entry(&self) -> Self;
}

impl LaplaceEntry for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn mul_entry(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_entry(&mut self, other: &Self) {
        *self += other;
    }
    fn neg_entry(&self) -> Self {
        -self
    }
}

impl LaplaceEntry for GenPolynomial {
    fn zero_like(&self) -> Self {
        GenPolynomial::zero(self.dim())
    }
    fn is_zero_entry(&self) -> bool {
        self.is_zero()
    }
    fn mul_entry(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_entry(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn neg_entry(&self) -> Self {
        -self
    }
}

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    size: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Domain("matrix is not square".into()));
        }
        Ok(Matrix { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> T>(size: usize, mut f: F) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        Matrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.size + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.entries[row * self.size..(row + 1) * self.size]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.size {
            self.entries.swap(a * self.size + j, b * self.size + j);
        }
    }
}

/// Determinant by Laplace expansion, memoised over column subsets.
///
/// The cost grows like `2^n`, so this is meant as an oracle for small or
/// sparse matrices. `zero` is returned for the empty matrix's complement.
pub fn laplace_det<T: LaplaceEntry>(m: &Matrix<T>, zero: &T, one: &T) -> Result<T> {
    let n = m.size();
    if n > MAX_LAPLACE {
        return Err(Error::Domain(format!("Laplace expansion limited to size {MAX_LAPLACE}")));
    }
    let mut current: HashMap<u64, T> = HashMap::new();
    current.insert(0, one.clone());
    for r in 0..n {
        let mut next: HashMap<u64, T> = HashMap::new();
        for (mask, value) in &current {
            for c in 0..n {
                let bit = 1u64 << c;
                if mask & bit != 0 {
                    continue;
                }
                let a = m.get(r, c);
                if a.is_zero_entry() {
                    continue;
                }
                let above = (mask >> c).count_ones();
                let mut term = value.mul_entry(a);
                if above % 2 == 1 {
                    term = term.neg_entry();
                }
                next.entry(mask | bit)
                    .and_modify(|v| v.add_assign_entry(&term))
                    .or_insert(term);
            }
        }
        next.retain(|_, v| !v.is_zero_entry());
        if next.is_empty() {
            return Ok(zero.zero_like());
        }
        current = next;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(current.remove(&full).unwrap_or_else(|| zero.zero_like()))
}

/// Fraction-free elimination over the integers.
pub fn bareiss_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][k].is_zero()) {
            Some(p) => p,
            None => return BigInt::zero(),
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                debug_assert!(v.is_multiple_of(&prev));
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant of a rational matrix by integer elimination after clearing
/// each column's denominators.
pub fn det_rational_bareiss(m: &Matrix<Rational>) -> Rational {
    let n = m.size();
    let mut scale = BigInt::one();
    let mut cols: Vec<BigInt> = Vec::with_capacity(n);
    for j in 0..n {
        let l = (0..n).fold(BigInt::one(), |acc, i| acc.lcm(m.get(i, j).denom()));
        scale *= &l;
        cols.push(l);
    }
    let ints: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let q = m.get(i, j);
                    q.numer() * (&cols[j] / q.denom())
                })
                .collect()
        })
        .collect();
    Rational::new(bareiss_int(ints), scale)
}

/// Determinant of a rational matrix by memoised Laplace expansion.
pub fn det_rational_cofactor(m: &Matrix<Rational>) -> Result<Rational> {
    laplace_det(m, &Rational::zero(), &Rational::one())
}

/// Rational determinant: Laplace expansion up to size 5, elimination beyond.
pub fn det_rational(m: &Matrix<Rational>) -> Rational {
    if m.size() <= 5 {
        det_rational_cofactor(m).expect("small matrix")
    } else {
        det_rational_bareiss(m)
    }
}

/// Determinant of a polynomial matrix by fraction-free elimination.
///
/// Requires natural exponents, since exact division uses the graded order.
pub fn det_poly_bareiss(m: &Matrix<GenPolynomial>, dim: usize) -> Result<GenPolynomial> {
    let n = m.size();
    if n == 0 {
        return Ok(GenPolynomial::one(dim));
    }
    if m.entries.iter().all(GenPolynomial::is_natural) {
        return det_natural_bareiss(m, dim);
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = GenPolynomial::one(dim);
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a.get(i, k).is_zero()) {
            Some(p) => p,
            None => return Ok(GenPolynomial::zero(dim)),
        };
        if pivot != k {
            a.swap_rows(pivot, k);
            negate = !negate;
        }
        let akk = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let aij = a.get(i, j);
                let akj = a.get(k, j);
                let mut v = akk.mul_entry(aij);
                if !aik.is_zero() && !akj.is_zero() {
                    v = &v - &(&aik * akj);
                }
                let q = if v.is_zero() { v } else { v.div_exact(&prev)? };
                a.entries[i * n + j] = q;
            }
        }
        prev = akk;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { -&det } else { det })
}

/// Polynomial with natural exponents and integer coefficients, keyed in grlex order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct IntPoly(BTreeMap<(u32, Vec<u32>), BigInt>);

impl IntPoly {
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, key: (u32, Vec<u32>), c: BigInt) {
        match self.0.entry(key) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = IntPoly::default();
        for ((da, ea), ca) in &self.0 {
            for ((db, eb), cb) in &other.0 {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term((da + db, e), ca * cb);
            }
        }
        out
    }

    fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.0 {
            self.add_term(k.clone(), -c);
        }
    }

    fn mul_term(&self, key: &(u32, Vec<u32>), c: &BigInt) -> Self {
        IntPoly(
            self.0
                .iter()
                .map(|((d, e), v)| ((d + key.0, e.iter().zip(&key.1).map(|(a, b)| a + b).collect()), v * c))
                .collect(),
        )
    }

    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let not_exact = || Error::Internal("inexact division in fraction-free elimination".into());
        let ((ld, le), lc) = divisor.0.iter().next_back().ok_or_else(not_exact)?;
        let shifted = |e: &[u32]| -> Option<Vec<u32>> { e.iter().zip(le).map(|(a, b)| a.checked_sub(*b)).collect() };
        let mut quot = IntPoly::default();
        if divisor.0.len() == 1 {
            for ((d, e), c) in &self.0 {
                let (q, r) = c.div_rem(lc);
                let e = shifted(e).filter(|_| r.is_zero()).ok_or_else(not_exact)?;
                quot.0.insert((d - ld, e), q);
            }
            return Ok(quot);
        }
        let mut rem = self.clone();
        while let Some(((rd, re), rc)) = rem.0.iter().next_back() {
            let (q, r) = rc.div_rem(lc);
            let e = shifted(re).filter(|_| r.is_zero()).ok_or_else(not_exact)?;
            let key = (rd - ld, e);
            rem.sub_assign(&divisor.mul_term(&key, &q));
            quot.add_term(key, q);
        }
        Ok(quot)
    }
}

/// Fraction-free elimination over integer polynomials after clearing row denominators.
fn det_natural_bareiss(m: &Matrix<GenPolynomial>, dim: usize) -> Result<GenPolynomial> {
    let n = m.size();
    let mut scale = BigInt::one();
    let mut a: Vec<IntPoly> = Vec::with_capacity(n * n);
    for i in 0..n {
        let row = m.row(i);
        let l = row
            .iter()
            .flat_map(|p| p.terms().map(|(_, c)| c.denom().clone()))
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        for p in row {
            let mut q = IntPoly::default();
            for (e, c) in p.terms() {
                let exps: Vec<u32> = e.to_ints().expect("natural").into_iter().map(|v| v as u32).collect();
                let deg = exps.iter().sum();
                q.0.insert((deg, exps), c.numer() * (&l / c.denom()));
            }
            a.push(q);
        }
        scale *= l;
    }
    let mut negate = false;
    let mut prev = IntPoly(BTreeMap::from([((0, vec![0; dim]), BigInt::one())]));
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i * n + k].is_zero()) {
            Some(p) => p,
            None => return Ok(GenPolynomial::zero(dim)),
        };
        if pivot != k {
            for j in 0..n {
                a.swap(pivot * n + j, k * n + j);
            }
            negate = !negate;
        }
        let akk = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let akj = &a[k * n + j];
                let mut v = akk.mul(&a[i * n + j]);
                if !aik.is_zero() && !akj.is_zero() {
                    v.sub_assign(&aik.mul(akj));
                }
                a[i * n + j] = if v.is_zero() { v } else { v.div_exact(&prev)? };
            }
        }
        prev = akk;
    }
    let det = std::mem::take(&mut a[n * n - 1]);
    let scale = Rational::from_integer(if negate { -scale } else { scale });
    Ok(GenPolynomial::from_terms(
        dim,
        det.0.into_iter().map(|((_, e), c)| {
            let e = ExponentVector::new(e.into_iter().map(|v| Rational::from_integer(v.into())).collect());
            (e, Rational::from_integer(c) / &scale)
        }),
    ))
}

/// Determinant of a polynomial matrix by memoised Laplace expansion.
pub fn det_poly_cofactor(m: &Matrix<GenPolynomial>, dim: usize) -> Result<GenPolynomial> {
    laplace_det(m, &GenPolynomial::zero(dim), &GenPolynomial::one(dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn small_rational_dets() {
        let m = qm(&[&[1, 2], &[3, 4]]);
        assert_eq!(det_rational_bareiss(&m), rat(-2));
        assert_eq!(det_rational_cofactor(&m).unwrap(), rat(-2));
        let m = qm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]);
        assert_eq!(det_rational_bareiss(&m), rat(-5));
        assert_eq!(det_rational_cofactor(&m).unwrap(), rat(-5));
        let singular = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(det_rational_bareiss(&singular), rat(0));
        assert_eq!(det_rational_cofactor(&singular).unwrap(), rat(0));
    }

    #[test]
    fn fractional_entries() {
        let m = Matrix::from_rows(vec![vec![ratio(1, 2), rat(1)], vec![rat(1), ratio(1, 3)]]).unwrap();
        assert_eq!(det_rational_bareiss(&m), ratio(-5, 6));
        assert_eq!(det_rational_cofactor(&m).unwrap(), ratio(-5, 6));
    }

    #[test]
    fn empty_matrix() {
        let m: Matrix<Rational> = Matrix::from_rows(vec![]).unwrap();
        assert_eq!(det_rational_bareiss(&m), rat(1));
        assert_eq!(det_rational_cofactor(&m).unwrap(), rat(1));
    }

    #[test]
    fn polynomial_dets_agree() {
        let x = GenPolynomial::var(2, 0);
        let y = GenPolynomial::var(2, 1);
        let one = GenPolynomial::one(2);
        let m = Matrix::from_rows(vec![
            vec![x.clone(), &x + &y, one.clone()],
            vec![y.clone(), &x * &y, x.clone()],
            vec![one.clone(), y.clone(), &y * &y],
        ])
        .unwrap();
        let a = det_poly_bareiss(&m, 2).unwrap();
        let b = det_poly_cofactor(&m, 2).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }

    #[test]
    fn not_square() {
        assert!(Matrix::from_rows(vec![vec![rat(1), rat(2)]]).is_err());
    }
}
