//! Dense row-major matrices over a `Ring`.

use rand::Rng;

use super::field::{PrimeField, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

/// A `d×d` matrix mod `p`.
pub type ModMatrix = Matrix<u64>;
/// A `d^n × d^n` operator on `(F^d)^{⊗n}` mod `p`.
pub type ModTensorOperator = Matrix<u64>;

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entries in row-major order.
    pub fn data(&self) -> &[E] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn map<F, T>(&self, f: F) -> Matrix<T>
    where
        F: Fn(&E) -> T,
    {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

pub fn zeros<R: Ring>(ring: &R, rows: usize, cols: usize) -> Matrix<R::Elem> {
    Matrix::filled(rows, cols, ring.zero())
}

pub fn identity<R: Ring>(ring: &R, n: usize) -> Matrix<R::Elem> {
    let mut m = zeros(ring, n, n);
    for i in 0..n {
        m.set(i, i, ring.one());
    }
    m
}

pub fn matmul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "inner dimensions differ");
    let mut out = zeros(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if ring.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let idx = i * b.cols + j;
                out.data[idx] = ring.add(&out.data[idx], &ring.mul(aik, b.get(k, j)));
            }
        }
    }
    out
}

pub fn add<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "shapes differ");
    let data = a.data.iter().zip(&b.data).map(|(x, y)| ring.add(x, y)).collect();
    Matrix { rows: a.rows, cols: a.cols, data }
}

pub fn sub<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols), "shapes differ");
    let data = a.data.iter().zip(&b.data).map(|(x, y)| ring.sub(x, y)).collect();
    Matrix { rows: a.rows, cols: a.cols, data }
}

pub fn add_assign<R: Ring>(ring: &R, acc: &mut Matrix<R::Elem>, b: &Matrix<R::Elem>) {
    assert_eq!((acc.rows, acc.cols), (b.rows, b.cols), "shapes differ");
    for (x, y) in acc.data.iter_mut().zip(&b.data) {
        *x = ring.add(x, y);
    }
}

/// `acc += c · b`.
pub fn add_scaled<R: Ring>(ring: &R, acc: &mut Matrix<R::Elem>, c: &R::Elem, b: &Matrix<R::Elem>) {
    assert_eq!((acc.rows, acc.cols), (b.rows, b.cols), "shapes differ");
    for (x, y) in acc.data.iter_mut().zip(&b.data) {
        if !ring.is_zero(y) {
            *x = ring.add(x, &ring.mul(c, y));
        }
    }
}

pub fn scale<R: Ring>(ring: &R, c: &R::Elem, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| ring.mul(c, x))
}

pub fn neg<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    a.map(|x| ring.neg(x))
}

pub fn trace<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    (0..a.rows.min(a.cols)).fold(ring.zero(), |acc, i| ring.add(&acc, a.get(i, i)))
}

/// Kronecker product; the first factor indexes the most significant digit.
pub fn kron<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut data = Vec::with_capacity(rows * cols);
    for ar in 0..a.rows {
        for br in 0..b.rows {
            for ac in 0..a.cols {
                let x = a.get(ar, ac);
                for bc in 0..b.cols {
                    data.push(ring.mul(x, b.get(br, bc)));
                }
            }
        }
    }
    Matrix { rows, cols, data }
}

pub fn kron_all<R: Ring>(ring: &R, factors: &[Matrix<R::Elem>]) -> Matrix<R::Elem> {
    let mut acc = Matrix::filled(1, 1, ring.one());
    for f in factors {
        acc = kron(ring, &acc, f);
    }
    acc
}

pub fn is_zero_matrix<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> bool {
    a.data.iter().all(|x| ring.is_zero(x))
}

/// Determinant by Gaussian elimination over `Z/pZ`.
pub fn det(field: &PrimeField, a: &ModMatrix) -> Result<u64> {
    if !a.is_square() {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", a.rows, a.cols)));
    }
    let n = a.rows;
    let mut m = a.data.clone();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r * n + col] != 0) else {
            return Ok(0);
        };
        if pivot != col {
            for c in 0..n {
                m.swap(pivot * n + c, col * n + c);
            }
            det = field.neg(&det);
        }
        let pv = m[col * n + col];
        det = field.mul(&det, &pv);
        let inv = field.inv(pv).expect("nonzero pivot");
        for r in col + 1..n {
            let factor = field.mul(&m[r * n + col], &inv);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let v = field.mul(&factor, &m[col * n + c]);
                m[r * n + c] = field.sub(&m[r * n + c], &v);
            }
        }
    }
    Ok(det)
}

/// Inverse by Gauss–Jordan elimination; `None` when singular.
pub fn inverse(field: &PrimeField, a: &ModMatrix) -> Option<ModMatrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows;
    let mut m = a.data.clone();
    let mut inv = identity(field, n).data;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r * n + col] != 0)?;
        if pivot != col {
            for c in 0..n {
                m.swap(pivot * n + c, col * n + c);
                inv.swap(pivot * n + c, col * n + c);
            }
        }
        let pinv = field.inv(m[col * n + col])?;
        for c in 0..n {
            m[col * n + c] = field.mul(&m[col * n + c], &pinv);
            inv[col * n + c] = field.mul(&inv[col * n + c], &pinv);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = m[r * n + col];
            if factor == 0 {
                continue;
            }
            for c in 0..n {
                let v = field.mul(&factor, &m[col * n + c]);
                m[r * n + c] = field.sub(&m[r * n + c], &v);
                let w = field.mul(&factor, &inv[col * n + c]);
                inv[r * n + c] = field.sub(&inv[r * n + c], &w);
            }
        }
    }
    Some(Matrix { rows: n, cols: n, data: inv })
}

pub fn random_matrix<G: Rng + ?Sized>(field: &PrimeField, d: usize, rng: &mut G) -> ModMatrix {
    let data = (0..d * d).map(|_| rng.gen_range(0..field.modulus())).collect();
    Matrix { rows: d, cols: d, data }
}

pub fn random_matrices<G: Rng + ?Sized>(field: &PrimeField, d: usize, count: usize, rng: &mut G) -> Vec<ModMatrix> {
    (0..count).map(|_| random_matrix(field, d, rng)).collect()
}

/// A random matrix with nonzero determinant.
pub fn random_invertible<G: Rng + ?Sized>(field: &PrimeField, d: usize, rng: &mut G) -> (ModMatrix, ModMatrix) {
    loop {
        let g = random_matrix(field, d, rng);
        if let Some(gi) = inverse(field, &g) {
            return (g, gi);
        }
    }
}

/// Small random integer matrices with entries in `[-bound, bound]`.
pub fn random_integer_matrices<R: Ring, G: Rng + ?Sized>(
    ring: &R,
    d: usize,
    count: usize,
    bound: i64,
    rng: &mut G,
) -> Vec<Matrix<R::Elem>> {
    (0..count)
        .map(|_| Matrix {
            rows: d,
            cols: d,
            data: (0..d * d).map(|_| ring.from_i64(rng.gen_range(-bound..=bound))).collect(),
        })
        .collect()
}

/// `e_{ij}` for `(i, j)` in lexicographic order.
pub fn elementary_basis<R: Ring>(ring: &R, d: usize) -> Vec<Matrix<R::Elem>> {
    (0..d * d)
        .map(|idx| {
            let mut m = zeros(ring, d, d);
            m.set(idx / d, idx % d, ring.one());
            m
        })
        .collect()
}
