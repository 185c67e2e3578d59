//! Dense linear algebra and subspace calculus over a [`Field`].
//!
//! Pivoting always takes the first nonzero entry, so every routine is
//! deterministic and subspaces have a canonical (reduced row-echelon) basis.

use std::fmt;

use crate::error::{Error, Result};
use crate::ffield::Field;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Self {
            field,
            rows,
            cols,
            data: vec![z; rows * cols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        let one = m.field.one();
        for i in 0..n {
            m[(i, i)] = one;
        }
        m
    }

    pub fn from_rows(field: F, cols: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: F, rows: usize, cols: &[Vec<F::Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {rows} rows",
                    c.len()
                )));
            }
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        Ok(m)
    }

    pub fn from_ints(field: F, rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        let data = vals.iter().map(|&v| field.from_int(v)).collect();
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Self { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(Self { data, ..self.clone() })
    }

    pub fn scale(&self, s: F::Elem) -> Self {
        let f = &self.field;
        Self {
            data: self.data.iter().map(|&a| f.mul(a, s)).collect(),
            ..self.clone()
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if f.is_zero(a) {
                    continue;
                }
                let orow = other.row(k);
                let dst = out.row_mut(i);
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = f.mul_add(*d, a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (&a, &b)| f.mul_add(acc, a, b))
            })
            .collect())
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(self.field.clone(), self.rows);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Reduced row-echelon form together with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !f.is_zero(m[(i, c)])) else {
                continue;
            };
            if piv != r {
                for k in 0..m.cols {
                    m.data.swap(piv * m.cols + k, r * m.cols + k);
                }
            }
            let inv = f.inv(m[(r, c)]).expect("pivot is nonzero");
            for x in m.row_mut(r) {
                *x = f.mul(*x, inv);
            }
            let prow = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m[(i, c)];
                if f.is_zero(factor) {
                    continue;
                }
                let nf = f.neg(factor);
                for (x, &y) in m.row_mut(i)[c..].iter_mut().zip(&prow[c..]) {
                    *x = f.mul_add(*x, nf, y);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right kernel `{ v : M v = 0 }`.
    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r[(i, free)]);
            }
            vecs.push(v);
        }
        Subspace::span(f.clone(), self.cols, vecs)
    }

    /// One solution of `M x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut aug = Self::zeros(f.clone(), self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug[(r, self.cols)] = b[r];
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = red[(i, self.cols)];
        }
        Ok(Some(x))
    }

    /// Sizes of the Jordan blocks of a nilpotent matrix, largest first.
    ///
    /// The number of blocks of size at least `s` is
    /// `rank(N^{s-1}) - rank(N^s)`.
    pub fn jordan_type_nilpotent(&self) -> Result<Vec<usize>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("Jordan type of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut ranks = vec![n];
        let mut power = Self::identity(self.field.clone(), n);
        while *ranks.last().unwrap() > 0 {
            if ranks.len() > n {
                return Err(Error::NotNilpotent);
            }
            power = power.mul(self)?;
            let r = power.rank();
            if r == *ranks.last().unwrap() {
                return Err(Error::NotNilpotent);
            }
            ranks.push(r);
        }
        // at_least[s] = number of blocks of size >= s
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for s in (1..=at_least.len()).rev() {
            let exactly = at_least[s - 1] - at_least.get(s).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(s, exactly));
        }
        Ok(parts)
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F::Elem;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &F::Elem {
        &self.data[r * self.cols + c]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F::Elem {
        &mut self.data[r * self.cols + c]
    }
}

/// A linear subspace of `F^n`, stored as its reduced row-echelon basis.
///
/// Two equal subspaces always have identical stored bases, so `==` is
/// subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F^{}, pivots {:?})",
            self.dim(),
            self.ambient,
            self.pivots
        )
    }
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![s.field.zero(); ambient];
            v[i] = s.field.one();
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    /// Span of the coordinate vectors with the given indices.
    pub fn coordinate(field: F, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let mut s = Self::zero(field, ambient);
        for i in idx {
            let mut v = vec![s.field.zero(); ambient];
            v[i] = s.field.one();
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn span(field: F, ambient: usize, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Assembles a subspace from pieces living on pairwise disjoint sets of
    /// coordinates. Each piece is given in the compact coordinates of its
    /// index set (sorted ascending).
    pub fn from_disjoint_pieces(field: F, ambient: usize, pieces: &[(Vec<usize>, Subspace<F>)]) -> Self {
        let mut lifted: Vec<(usize, Vec<F::Elem>)> = Vec::new();
        for (idx, sub) in pieces {
            assert_eq!(idx.len(), sub.ambient, "piece coordinates do not match its ambient");
            for (row, &pc) in sub.rows.iter().zip(&sub.pivots) {
                let mut v = vec![field.zero(); ambient];
                for (&g, &x) in idx.iter().zip(row) {
                    v[g] = x;
                }
                lifted.push((idx[pc], v));
            }
        }
        lifted.sort_by_key(|(p, _)| *p);
        let (pivots, rows) = lifted.into_iter().unzip();
        Self {
            field,
            ambient,
            rows,
            pivots,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.field.clone(), self.ambient, &self.rows).expect("rows have ambient length")
    }

    /// Normal form of `v` modulo this subspace: zero exactly when `v` lies in it.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if f.is_zero(c) {
                continue;
            }
            let nc = f.neg(c);
            for (x, &y) in w[pc..].iter_mut().zip(&row[pc..]) {
                *x = f.mul_add(*x, nc, y);
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        self.reduce(v).iter().all(|&x| self.field.is_zero(x))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let coords: Vec<F::Elem> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&coords) {
            if f.is_zero(c) {
                continue;
            }
            let nc = f.neg(c);
            for (x, &y) in w.iter_mut().zip(row) {
                *x = f.mul_add(*x, nc, y);
            }
        }
        w.iter().all(|&x| f.is_zero(x)).then_some(coords)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let f = self.field.clone();
        let mut w = self.reduce(&v);
        let Some(pc) = w.iter().position(|&x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(w[pc]).expect("pivot is nonzero");
        for x in &mut w[pc..] {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[pc];
            if f.is_zero(c) {
                continue;
            }
            let nc = f.neg(c);
            for (x, &y) in row[pc..].iter_mut().zip(&w[pc..]) {
                *x = f.mul_add(*x, nc, y);
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, w);
        true
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of F^{} and F^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let (big, small) = if self.dim() >= other.dim() {
            (self, other)
        } else {
            (other, self)
        };
        let mut s = big.clone();
        for r in &small.rows {
            s.insert(r.clone());
        }
        Ok(s)
    }

    /// `U ∩ W`, read off the kernel of the stacked system `x U = y W`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f.clone(), self.ambient));
        }
        let du = self.dim();
        let dw = other.dim();
        // columns: coefficients on U's basis, then on W's basis (negated)
        let mut m = Matrix::zeros(f.clone(), self.ambient, du + dw);
        for (j, row) in self.rows.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                m[(i, du + j)] = f.neg(x);
            }
        }
        let ker = m.kernel();
        let vecs = ker.rows.iter().map(|k| {
            let mut v = vec![f.zero(); self.ambient];
            for (coef, row) in k[..du].iter().zip(&self.rows) {
                if f.is_zero(*coef) {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.mul_add(*x, *coef, y);
                }
            }
            v
        });
        Ok(Self::span(f.clone(), self.ambient, vecs.collect::<Vec<_>>()))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    /// `{ v : u^T G v = 0 for all u in U }`.
    pub fn orth_complement(&self, gram: &Matrix<F>) -> Result<Self> {
        if !gram.is_square() || gram.rows() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "Gram matrix {}x{} on F^{}",
                gram.rows(),
                gram.cols(),
                self.ambient
            )));
        }
        if self.is_zero() {
            return Ok(Self::full(self.field.clone(), self.ambient));
        }
        let constraints = self.basis_matrix().mul(gram)?;
        Ok(constraints.kernel())
    }

    /// Image of the subspace under a linear map given on vectors.
    pub fn map(&self, target_ambient: usize, f: impl Fn(&[F::Elem]) -> Vec<F::Elem>) -> Self {
        Self::span(
            self.field.clone(),
            target_ambient,
            self.rows.iter().map(|r| f(r)).collect::<Vec<_>>(),
        )
    }

    /// Restriction of every basis vector to a set of coordinates; its rank is
    /// the dimension of the projection.
    pub fn project_rank(&self, coords: &[usize]) -> usize {
        let vecs: Vec<Vec<F::Elem>> = self
            .rows
            .iter()
            .map(|r| coords.iter().map(|&c| r[c]).collect())
            .collect();
        Subspace::span(self.field.clone(), coords.len(), vecs).dim()
    }
}

/// A basis of a quotient `V / W` for `W ⊆ V`, with a coordinate map.
pub struct QuotientBasis<F: Field> {
    denominator: Subspace<F>,
    complement: Subspace<F>,
}

impl<F: Field> QuotientBasis<F> {
    pub fn new(numerator: &Subspace<F>, denominator: &Subspace<F>) -> Result<Self> {
        numerator.check_ambient(denominator)?;
        let reduced: Vec<Vec<F::Elem>> = numerator.rows.iter().map(|r| denominator.reduce(r)).collect();
        let complement = Subspace::span(numerator.field.clone(), numerator.ambient, reduced);
        Ok(Self {
            denominator: denominator.clone(),
            complement,
        })
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    /// Representatives of the quotient basis.
    pub fn representatives(&self) -> &[Vec<F::Elem>] {
        self.complement.basis()
    }

    /// Coordinates of the class of `v`; `v` must lie in the numerator.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let nf = self.denominator.reduce(v);
        self.complement.coordinates(&nf)
    }
}
