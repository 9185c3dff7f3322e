//! Small dense matrices with exact arithmetic.
//!
//! Elimination is fraction-free (Bareiss) over `i128`; rationals only show
//! up when a nullspace basis is read off the echelon form.

use num_rational::Rational64;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<i64>;
pub type RatMatrix = Matrix<Rational64>;

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T>,
{
    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|&x| Rational64::from_integer(x))
                .collect(),
        }
    }
}

/// Row echelon form computed by fraction-free elimination, with the pivot
/// column of each nonzero row.
struct Echelon {
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

fn bareiss(mut m: Vec<Vec<i128>>, cols: usize) -> Echelon {
    let nrows = m.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..nrows {
            for j in c + 1..cols {
                let num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Echelon { rows: m, pivots }
}

fn to_i128_rows(a: &IntMatrix) -> Vec<Vec<i128>> {
    (0..a.rows)
        .map(|i| (0..a.cols).map(|j| a[(i, j)] as i128).collect())
        .collect()
}

/// Clears denominators row by row so a rational matrix can go through the
/// integer elimination; row scaling does not change rank or nullspace.
fn rational_rows_to_integer(a: &RatMatrix) -> Vec<Vec<i128>> {
    (0..a.rows)
        .map(|i| {
            let lcm = (0..a.cols).fold(1i128, |acc, j| {
                let d = *a[(i, j)].denom() as i128;
                acc / gcd(acc, d) * d
            });
            (0..a.cols)
                .map(|j| {
                    let x = a[(i, j)];
                    *x.numer() as i128 * (lcm / *x.denom() as i128)
                })
                .collect()
        })
        .collect()
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

pub fn rank(a: &IntMatrix) -> usize {
    bareiss(to_i128_rows(a), a.cols).pivots.len()
}

pub fn rank_rational(a: &RatMatrix) -> usize {
    bareiss(rational_rows_to_integer(a), a.cols).pivots.len()
}

/// Basis of `{x | A x = 0}`, one vector per free column, each with a 1 in
/// its free coordinate and 0 in the other free coordinates.
pub fn nullspace(a: &IntMatrix) -> Vec<Vec<Rational64>> {
    let cols = a.cols;
    let ech = bareiss(to_i128_rows(a), cols);
    let free: Vec<usize> = (0..cols).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![Rational64::zero(); cols];
        x[f] = Rational64::one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
            let mut acc = Rational64::zero();
            for j in p + 1..cols {
                if row[j] != 0 {
                    acc += Rational64::from_integer(narrow(row[j])) * x[j];
                }
            }
            x[p] = -acc / Rational64::from_integer(narrow(row[p]));
        }
        basis.push(x);
    }
    basis
}

fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("echelon entry exceeds i64")
}
