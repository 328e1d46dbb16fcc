//! Integer matrices and Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect(),
        }
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.data[i][j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i][j] = x;
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().zip(v).filter(|(a, _)| !a.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = self.clone();
        out.cols += other.cols;
        for (row, extra) in out.data.iter_mut().zip(&other.data) {
            row.extend(extra.iter().cloned());
        }
        out
    }

    /// Determinant by fraction-free elimination (square matrices only).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `U * M * V = D` with `D` diagonal, `d_1 | d_2 | ...`, and `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub u: IntegerMatrix,
    pub v: Option<IntegerMatrix>,
    pub d: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Whether `y` lies in the column space of the original matrix.
    pub fn contains(&self, y: &[BigInt]) -> bool {
        self.order_of(y) == Some(BigInt::one())
    }

    /// Smallest `m > 0` with `m y` in the column space, `None` if there is none.
    pub fn order_of(&self, y: &[BigInt]) -> Option<BigInt> {
        let z = self.u.mul_vec(y);
        if z[self.factors.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut m = BigInt::one();
        for (zi, d) in z.iter().zip(&self.factors) {
            let g = zi.gcd(d);
            let need = d / g;
            m = m.lcm(&need);
        }
        Some(m)
    }

    /// Invariant factors of the cokernel: torsion orders `> 1` then a `0` per free summand.
    pub fn cokernel_factors(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = self.factors.iter().filter(|d| !d.is_one()).cloned().collect();
        out.extend(std::iter::repeat_n(BigInt::zero(), self.d.rows() - self.factors.len()));
        out
    }
}

fn row_axpy(a: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    // row_target -= q * row_src
    let (t, s) = if target < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_axpy(a: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let d = q * &row[src];
            row[target] -= d;
        }
    }
}

fn col_swap(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// Smith normal form with both transforms.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    reduce(m, true)
}

/// Smith normal form tracking only the row transform `U`.
pub fn smith_normal_form_left(m: &IntegerMatrix) -> SmithForm {
    reduce(m, false)
}

fn reduce(m: &IntegerMatrix, track_v: bool) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut u = IntegerMatrix::identity(rows).data;
    let mut v = track_v.then(|| IntegerMatrix::identity(cols).data);
    let mut rank = 0;
    for t in 0..rows.min(cols) {
        loop {
            // Nonzero entry of least absolute value in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &a[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => x.abs() < a[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                        if x.abs().is_one() {
                            break;
                        }
                    }
                }
                if best.is_some_and(|(bi, bj)| a[bi][bj].abs().is_one()) {
                    break;
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            col_swap(&mut a, t, pj);
            if let Some(v) = v.as_mut() {
                col_swap(v, t, pj);
            }
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                row_axpy(&mut a, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                col_axpy(&mut a, j, t, &q);
                if let Some(v) = v.as_mut() {
                    col_axpy(v, j, t, &q);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            let bad = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_zero() && !(x % &p).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut a, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[t][t].is_zero() {
            break;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
        rank = t + 1;
    }
    let factors = (0..rank).map(|i| a[i][i].clone()).collect();
    SmithForm {
        factors,
        u: IntegerMatrix { rows, cols: rows, data: u },
        v: v.map(|data| IntegerMatrix { rows: cols, cols, data }),
        d: IntegerMatrix { rows, cols, data: a },
    }
}
