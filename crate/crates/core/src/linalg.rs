//! Dense exact linear algebra over a prime field F_p.
//!
//! Vectors are columns; a map V -> W of dimensions m -> n is an n x m matrix
//! and composition is matrix multiplication. Entries are reduced mod p.

/// Arithmetic in F_p for a small prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        assert!(is_prime(p), "modulus {} is not prime", p);
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        a %= self.p;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Barrett reduction for a fixed small modulus.
#[derive(Clone, Copy)]
struct Reducer {
    p: u64,
    m: u64,
}

impl Reducer {
    fn new(p: u64) -> Self {
        Reducer { p, m: ((1u128 << 64) / p as u128) as u64 }
    }

    fn reduce(&self, a: u64) -> u64 {
        let q = ((a as u128 * self.m as u128) >> 64) as u64;
        let mut r = a - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }
}

/// Row-major dense matrix over F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub p: u64,
    data: Vec<u64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize, p: u64) -> Self {
        Matrix {
            rows,
            cols,
            p,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut m = Matrix::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], p: u64) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = Matrix::zero(r, c, p);
        for (i, row) in rows.iter().enumerate() {
            assert!(row.len() == c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert!(self.cols == other.rows, "dimension mismatch in mul");
        assert!(self.p == other.p, "modulus mismatch");
        if self.p == 2 {
            return self.mul_two(other);
        }
        assert!(
            self.cols as u128 * ((self.p - 1) as u128).pow(2) < 1 << 64,
            "accumulator would overflow"
        );
        let red = Reducer::new(self.p);
        let nc = other.cols;
        let mut out = Matrix::zero(self.rows, nc, self.p);
        let mut acc = vec![0u64; nc];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|v| *v = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let or = &other.data[k * nc..(k + 1) * nc];
                for (s, &b) in acc.iter_mut().zip(or) {
                    *s += a * b;
                }
            }
            let dst = &mut out.data[i * nc..(i + 1) * nc];
            for (d, &s) in dst.iter_mut().zip(&acc) {
                *d = red.reduce(s);
            }
        }
        out
    }

    fn mul_two(&self, other: &Matrix) -> Matrix {
        let nc = other.cols;
        let words = nc.div_ceil(64).max(1);
        let mut packed = vec![0u64; other.rows * words];
        for k in 0..other.rows {
            for j in 0..nc {
                if other.data[k * nc + j] != 0 {
                    packed[k * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut out = Matrix::zero(self.rows, nc, self.p);
        let mut acc = vec![0u64; words];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|v| *v = 0);
            for k in 0..self.cols {
                if self.data[i * self.cols + k] != 0 {
                    let or = &packed[k * words..(k + 1) * words];
                    for (s, &b) in acc.iter_mut().zip(or) {
                        *s ^= b;
                    }
                }
            }
            let dst = &mut out.data[i * nc..(i + 1) * nc];
            for (j, d) in dst.iter_mut().enumerate() {
                *d = (acc[j / 64] >> (j % 64)) & 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in add");
        let f = Fp { p: self.p };
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = f.add(self.data[i], other.data[i]);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in sub");
        let f = Fp { p: self.p };
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = f.sub(self.data[i], other.data[i]);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let f = Fp { p: self.p };
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = f.mul(*v, c);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        let f = Fp { p: self.p };
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = f.neg(*v);
        }
        out
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows, "row mismatch in hstack");
        let mut out = Matrix::zero(self.rows, self.cols + other.cols, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert!(self.cols == other.cols, "col mismatch in vstack");
        let mut out = Matrix::zero(self.rows + other.rows, self.cols, self.p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                out.set(self.rows + i, j, other.get(i, j));
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.rows, idx.len(), self.p);
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zero(idx.len(), self.cols, self.p);
        for (ii, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j));
            }
        }
        out
    }

    /// Block placement: write `block` into self with top-left corner (r, c).
    pub fn set_block(&mut self, r: usize, c: usize, block: &Matrix) {
        assert!(r + block.rows <= self.rows && c + block.cols <= self.cols, "block out of range");
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r + i, c + j, block.get(i, j));
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zero(rows, cols, self.p);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r + i, c + j));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        if self.p == 2 {
            self.rref_two()
        } else {
            self.rref_odd()
        }
    }

    fn rref_two(&self) -> (Matrix, Vec<usize>) {
        let cols = self.cols;
        let words = cols.div_ceil(64).max(1);
        let mut packed = vec![0u64; self.rows * words];
        for i in 0..self.rows {
            for j in 0..cols {
                if self.data[i * cols + j] != 0 {
                    packed[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        let mut scratch = vec![0u64; words];
        for col in 0..cols {
            if row >= self.rows {
                break;
            }
            let w = col / 64;
            let bit = 1u64 << (col % 64);
            let Some(sel) = (row..self.rows).find(|&i| packed[i * words + w] & bit != 0) else {
                continue;
            };
            if sel != row {
                for k in 0..words {
                    packed.swap(row * words + k, sel * words + k);
                }
            }
            scratch.copy_from_slice(&packed[row * words..(row + 1) * words]);
            for i in 0..self.rows {
                if i != row && packed[i * words + w] & bit != 0 {
                    let ri = &mut packed[i * words..(i + 1) * words];
                    for (a, &b) in ri.iter_mut().zip(&scratch) {
                        *a ^= b;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let mut out = Matrix::zero(self.rows, cols, self.p);
        for i in 0..self.rows {
            for j in 0..cols {
                out.data[i * cols + j] = (packed[i * words + j / 64] >> (j % 64)) & 1;
            }
        }
        (out, pivots)
    }

    fn rref_odd(&self) -> (Matrix, Vec<usize>) {
        let f = Fp { p: self.p };
        let red = Reducer::new(self.p);
        let cols = self.cols;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        let mut scratch = vec![0u64; cols];
        for col in 0..cols {
            if row >= m.rows {
                break;
            }
            let Some(sel) = (row..m.rows).find(|&i| m.data[i * cols + col] != 0) else {
                continue;
            };
            if sel != row {
                for k in 0..cols {
                    m.data.swap(row * cols + k, sel * cols + k);
                }
            }
            let inv = f.inv(m.data[row * cols + col]);
            if inv != 1 {
                for v in &mut m.data[row * cols..(row + 1) * cols] {
                    *v = red.reduce(*v * inv);
                }
            }
            scratch.copy_from_slice(&m.data[row * cols..(row + 1) * cols]);
            for i in 0..m.rows {
                if i == row {
                    continue;
                }
                let c = m.data[i * cols + col];
                if c == 0 {
                    continue;
                }
                let mc = self.p - c;
                let ri = &mut m.data[i * cols..(i + 1) * cols];
                for (a, &b) in ri.iter_mut().zip(&scratch) {
                    *a = red.reduce(*a + mc * b);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of { x : self * x = 0 }.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let f = Fp { p: self.p };
        let mut out = Matrix::zero(self.cols, free.len(), self.p);
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    /// Columns form a basis of the column space.
    pub fn image_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Solve self * X = rhs for X; None if inconsistent.
    pub fn solve_right(&self, rhs: &Matrix) -> Option<Matrix> {
        assert!(self.rows == rhs.rows, "rhs row mismatch");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        for &pc in &pivots {
            if pc >= self.cols {
                return None;
            }
        }
        let mut out = Matrix::zero(self.cols, rhs.cols, self.p);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                out.set(pc, j, r.get(i, self.cols + j));
            }
        }
        Some(out)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.rows == self.cols, "inverse of non-square matrix");
        let x = self.solve_right(&Matrix::identity(self.rows, self.p))?;
        if x.mul(self).is_zero() && self.rows > 0 {
            return None;
        }
        if self.mul(&x) == Matrix::identity(self.rows, self.p) {
            Some(x)
        } else {
            None
        }
    }

    /// Do the columns of `sub` lie in the column space of self?
    pub fn contains_cols(&self, sub: &Matrix) -> bool {
        self.solve_right(sub).is_some()
    }
}

/// Complement data for a subspace W of k^n given by independent columns:
/// a projection q x n and a section n x q with proj . section = id and
/// ker(proj) = span(W), where q = n - rank(W).
pub struct QuotientData {
    pub proj: Matrix,
    pub section: Matrix,
}

pub fn quotient_by_subspace(w: &Matrix) -> QuotientData {
    let n = w.rows;
    let p = w.p;
    let basis = w.image_basis();
    let r = basis.cols;
    // Standard vectors not in the pivot row set of the subspace extend it to a basis.
    let (_, piv_rows) = basis.transpose().rref();
    let free_rows: Vec<usize> = (0..n).filter(|i| !piv_rows.contains(i)).collect();
    let q = free_rows.len();
    assert!(r + q == n, "complement count mismatch");
    let mut full = Matrix::zero(n, n, p);
    full.set_block(0, 0, &basis);
    for (k, &i) in free_rows.iter().enumerate() {
        full.set(i, r + k, 1);
    }
    let inv = full.inverse().expect("basis assembly must be invertible");
    let proj = inv.select_rows(&(r..n).collect::<Vec<_>>());
    let mut section = Matrix::zero(n, q, p);
    for (k, &i) in free_rows.iter().enumerate() {
        section.set(i, k, 1);
    }
    QuotientData { proj, section }
}
