//! Dense tensors acting multilinearly on the columns of small matrices.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const MAX_TENSOR_DIM: usize = 8;
pub const MAX_TENSOR_ORDER: usize = 8;

/// Scalar field the composition engine is generic over.
///
/// Implemented for `f64` (numerics) and [`Rational`] (exact checks).
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Div<Output = Self>
{
    fn from_bigint(n: &BigInt) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

impl Scalar for f64 {
    fn from_bigint(n: &BigInt) -> Self {
        n.to_f64().expect("bigint out of f64 range")
    }
}

impl Scalar for Rational {
    fn from_bigint(n: &BigInt) -> Self {
        Rational::from_integer(n.clone())
    }
}

/// Dense column-major matrix; the contraction argument of a [`Tensor`].
#[derive(Debug, Clone, PartialEq)]
pub struct ColMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> ColMatrix<T> {
    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Domain("ragged columns".into()));
        }
        Ok(Self {
            rows,
            cols,
            data: columns.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[col * self.rows + row]
    }

    pub fn column(&self, col: usize) -> &[T] {
        &self.data[col * self.rows..(col + 1) * self.rows]
    }

    /// Same matrix with columns reordered by `order[new] = old`.
    pub fn with_column_order(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.cols {
            return Err(Error::Domain("column order has wrong length".into()));
        }
        Self::from_columns(order.iter().map(|&c| self.column(c).to_vec()).collect())
    }
}

/// Dense tensor of order `s` over `R^n`, stored as `n^s` entries.
///
/// Acting on an `n x s` matrix `A` gives
/// `T(A) = sum T_{i1..is} A_{i1,1} ... A_{is,s}`, linear in each column.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    order: usize,
    dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn zeros(order: usize, dim: usize) -> Result<Self> {
        check_caps(order, dim)?;
        let len = dim.pow(order as u32);
        Ok(Self {
            order,
            dim,
            entries: vec![T::zero(); len],
        })
    }

    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> T) -> Result<Self> {
        let mut t = Self::zeros(order, dim)?;
        let mut idx = vec![0usize; order];
        loop {
            let flat = t.flat_index(&idx);
            t.entries[flat] = f(&idx);
            if !advance(&mut idx, dim) {
                break;
            }
        }
        Ok(t)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, idx: &[usize]) -> &T {
        &self.entries[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: T) {
        let flat = self.flat_index(idx);
        self.entries[flat] = value;
    }

    fn flat_index(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.order, "index rank mismatch");
        let mut flat = 0usize;
        for &i in idx {
            assert!(i < self.dim, "index out of range");
            flat = flat * self.dim + i;
        }
        flat
    }

    /// Multilinear action on the columns of `a` (an `n x s` matrix).
    pub fn contract(&self, a: &ColMatrix<T>) -> Result<T> {
        if a.rows() != self.dim || a.cols() != self.order {
            return Err(Error::Domain(format!(
                "contraction of an order-{} tensor over R^{} with a {}x{} matrix",
                self.order,
                self.dim,
                a.rows(),
                a.cols()
            )));
        }
        if self.order == 0 {
            return Ok(self.entries[0].clone());
        }
        let mut acc = T::zero();
        let mut idx = vec![0usize; self.order];
        loop {
            let mut term = self.entries[self.flat_index(&idx)].clone();
            if term != T::zero() {
                for (col, &i) in idx.iter().enumerate() {
                    term = term * a.get(i, col).clone();
                }
                acc = acc + term;
            }
            if !advance(&mut idx, self.dim) {
                break;
            }
        }
        Ok(acc)
    }
}

fn check_caps(order: usize, dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_TENSOR_DIM {
        return Err(Error::Domain(format!(
            "tensor dimension must lie in 1..={MAX_TENSOR_DIM}, got {dim}"
        )));
    }
    if order > MAX_TENSOR_ORDER {
        return Err(Error::Domain(format!(
            "tensor order must not exceed {MAX_TENSOR_ORDER}, got {order}"
        )));
    }
    Ok(())
}

/// Odometer increment over `{0..dim}^len`; false once exhausted.
fn advance(idx: &mut [usize], dim: usize) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < dim {
            return true;
        }
        idx[i] = 0;
    }
    false
}
