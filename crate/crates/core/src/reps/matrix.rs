use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::scalar::{gen_binomial, HSeries, RadicalSum, Rational, ScalarError};

/// Dense square-or-rectangular matrix with truncated-series entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    order: usize,
    data: Vec<HSeries>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, order: usize) -> Self {
        Matrix {
            rows,
            cols,
            order,
            data: vec![HSeries::zero(order); rows * cols],
        }
    }

    pub fn identity(n: usize, order: usize) -> Self {
        let mut m = Self::zero(n, n, order);
        for i in 0..n {
            m.set(i, i, HSeries::one(order));
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        order: usize,
        f: impl Fn(usize, usize) -> HSeries,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                assert_eq!(v.order(), order, "entry order mismatch");
                data.push(v);
            }
        }
        Matrix {
            rows,
            cols,
            order,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> &HSeries {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: HSeries) {
        assert_eq!(v.order(), self.order, "entry order mismatch");
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(HSeries::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows, self.order)
    }

    pub fn map(&self, f: impl Fn(&HSeries) -> HSeries) -> Self {
        let data: Vec<HSeries> = self.data.iter().map(f).collect();
        let order = data.first().map_or(self.order, HSeries::order);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order,
            data,
        }
    }

    pub fn scale(&self, c: &HSeries) -> Self {
        self.map(|x| x * c)
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.map(|x| x.scale_rational(q))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut m = self.map(|x| x.truncate(order));
        m.order = order;
        m
    }

    pub fn at_h_zero(&self) -> Self {
        self.map(|x| HSeries::constant(self.order, x.at_zero()))
    }

    /// Substitutes `h -> -h`.
    pub fn negate_h(&self) -> Self {
        self.map(|x| {
            let coeffs = x
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect();
            HSeries::from_coeffs(self.order, coeffs)
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.order, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// Exact division of every entry by `h^k`.
    pub fn divide_exact(&self, k: usize) -> Result<Self, ScalarError> {
        let data = self
            .data
            .iter()
            .map(|x| x.divide_exact(k))
            .collect::<Result<Vec<_>, _>>()?;
        let order = self.order.saturating_sub(k);
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            order,
            data,
        })
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.order, rhs.order);
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zero(rows, cols, self.order);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        &(self * rhs) - &(rhs * self)
    }

    pub fn pow(&self, n: usize) -> Matrix {
        let mut acc = Self::identity(self.rows, self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `P A P^{-1}` for the permutation sending basis index `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Matrix {
        let mut out = Self::zero(self.rows, self.cols, self.order);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(perm[r], perm[c], self.get(r, c).clone());
            }
        }
        out
    }

    /// `(1 + c N)^alpha` for nilpotent `N` with series scalar `c`.
    pub fn binomial_power(n: &Matrix, c: &HSeries, alpha: &Rational) -> Matrix {
        let mut acc = Self::identity(n.rows, n.order);
        let cn = n.scale(c);
        let mut term = Self::identity(n.rows, n.order);
        for k in 1.. {
            term = &term * &cn;
            if term.is_zero() {
                break;
            }
            let g = gen_binomial(alpha, k);
            acc = &acc + &term.scale_rational(&g);
        }
        acc
    }

    /// `exp(X)` for nilpotent `X`.
    pub fn exp_nilpotent(x: &Matrix) -> Matrix {
        let mut acc = Self::identity(x.rows, x.order);
        let mut term = Self::identity(x.rows, x.order);
        for k in 1.. {
            term = (&term * x).scale_rational(&Rational::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        acc
    }

    /// `-ln(1 - X)` for nilpotent `X`.
    pub fn neg_log_one_minus(x: &Matrix) -> Matrix {
        let mut acc = Self::zero(x.rows, x.cols, x.order);
        let mut term = Self::identity(x.rows, x.order);
        for k in 1.. {
            term = &term * x;
            if term.is_zero() {
                break;
            }
            acc = &acc + &term.scale_rational(&Rational::new(1.into(), (k as i64).into()));
        }
        acc
    }

    /// Inverse of a matrix equal to the identity at `h = 0`, by the
    /// terminating Neumann series in `h`.
    pub fn inverse_unipotent(&self) -> Option<Matrix> {
        if !self.at_h_zero().is_identity() {
            return None;
        }
        let x = self - &Self::identity(self.rows, self.order);
        let mut acc = Self::identity(self.rows, self.order);
        let mut term = Self::identity(self.rows, self.order);
        for _ in 0..=self.order {
            term = -&(&term * &x);
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Some(acc)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|r| Value::Array((0..self.cols).map(|c| self.get(r, c).to_json()).collect()))
            .collect();
        json!(rows)
    }

    pub fn constant(
        rows: usize,
        cols: usize,
        order: usize,
        f: impl Fn(usize, usize) -> RadicalSum,
    ) -> Self {
        Self::from_fn(rows, cols, order, |r, c| HSeries::constant(order, f(r, c)))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.order, rhs.order, "truncation order mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols, self.order);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data,
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            data,
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|x| -x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| crate::weyl::series_text(self.get(r, c)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Operator acting on factors `i < j` of a tensor product with factor
/// dimensions `dims`, lifted to the full space.
pub fn embed_two(op: &Matrix, dims: &[usize], i: usize, j: usize) -> Matrix {
    assert!(i < j && j < dims.len());
    assert_eq!(op.rows(), dims[i] * dims[j]);
    let total: usize = dims.iter().product();
    let order = op.order();
    let decode = |mut idx: usize| {
        let mut digits = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            digits[k] = idx % dims[k];
            idx /= dims[k];
        }
        digits
    };
    let encode = |digits: &[usize]| digits.iter().zip(dims).fold(0, |acc, (d, n)| acc * n + d);
    let mut out = Matrix::zero(total, total, order);
    for col in 0..total {
        let cd = decode(col);
        let local_col = cd[i] * dims[j] + cd[j];
        for local_row in 0..op.rows() {
            let v = op.get(local_row, local_col);
            if v.is_zero() {
                continue;
            }
            let mut rd = cd.clone();
            rd[i] = local_row / dims[j];
            rd[j] = local_row % dims[j];
            out.set(encode(&rd), col, v.clone());
        }
    }
    out
}

/// The flip `v (x) w -> w (x) v` from `V_a (x) V_b` to `V_b (x) V_a`.
pub fn flip(da: usize, db: usize, order: usize) -> Matrix {
    let mut out = Matrix::zero(da * db, da * db, order);
    for a in 0..da {
        for b in 0..db {
            out.set(b * da + a, a * db + b, HSeries::one(order));
        }
    }
    out
}
