//! Subspaces of `U_χ(sl2)` that are graded by `ad(h)`-weight.
//!
//! `ad(h)` acts diagonally on the PBW basis, so every `ad(h)`-stable subspace
//! splits along the weight classes of basis monomials. Storing one piece per
//! weight turns each `p^3`-dimensional elimination into `p` eliminations of
//! size `p^2`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::linalg::{Matrix, Subspace};
use crate::pbw::ReducedEnveloping;

/// Partition of the PBW basis indices by weight `2(i - j) mod p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightLayout {
    p: usize,
    classes: Vec<Vec<usize>>,
    /// global index -> (weight, position inside its class)
    local: Vec<(usize, usize)>,
}

impl WeightLayout {
    pub fn new<F: Field>(alg: &ReducedEnveloping<F>) -> Self {
        let classes = alg.weight_classes();
        let mut local = vec![(0, 0); alg.dim()];
        for (w, class) in classes.iter().enumerate() {
            for (pos, &g) in class.iter().enumerate() {
                local[g] = (w, pos);
            }
        }
        Self {
            p: alg.p(),
            classes,
            local,
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn ambient(&self) -> usize {
        self.local.len()
    }

    pub fn class(&self, w: usize) -> &[usize] {
        &self.classes[w]
    }

    pub fn weight_of(&self, idx: usize) -> usize {
        self.local[idx].0
    }

    /// `-w mod p`
    pub fn dual_weight(&self, w: usize) -> usize {
        (self.p - w) % self.p
    }

    pub fn restrict<E: Copy>(&self, v: &[E], w: usize) -> Vec<E> {
        self.classes[w].iter().map(|&g| v[g]).collect()
    }

    pub fn embed<F: Field>(&self, field: &F, w: usize, local: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = vec![field.zero(); self.ambient()];
        for (&g, &x) in self.classes[w].iter().zip(local) {
            v[g] = x;
        }
        v
    }

    /// Weights carrying a nonzero coordinate of `v`, ascending.
    pub fn support<F: Field>(&self, field: &F, v: &[F::Elem]) -> Vec<usize> {
        let mut seen = vec![false; self.p];
        for (g, &x) in v.iter().enumerate() {
            if !field.is_zero(x) {
                seen[self.local[g].0] = true;
            }
        }
        (0..self.p).filter(|&w| seen[w]).collect()
    }
}

fn same_layout(a: &Arc<WeightLayout>, b: &Arc<WeightLayout>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A subspace stored as one piece per weight class.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSubspace<F: Field> {
    field: F,
    layout: Arc<WeightLayout>,
    pieces: Vec<Subspace<F>>,
}

impl<F: Field> std::fmt::Debug for GradedSubspace<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GradedSubspace(dim {}, weights {:?})",
            self.dim(),
            self.weight_dims()
        )
    }
}

impl<F: Field> GradedSubspace<F> {
    pub fn zero(field: F, layout: Arc<WeightLayout>) -> Self {
        let pieces = (0..layout.p)
            .map(|w| Subspace::zero(field.clone(), layout.classes[w].len()))
            .collect();
        Self { field, layout, pieces }
    }

    pub fn full(field: F, layout: Arc<WeightLayout>) -> Self {
        let pieces = (0..layout.p)
            .map(|w| Subspace::full(field.clone(), layout.classes[w].len()))
            .collect();
        Self { field, layout, pieces }
    }

    /// Span of a set of basis monomials.
    pub fn coordinate(field: F, layout: Arc<WeightLayout>, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut per: Vec<Vec<usize>> = vec![Vec::new(); layout.p];
        for g in indices {
            let (w, pos) = layout.local[g];
            per[w].push(pos);
        }
        let pieces = per
            .into_iter()
            .enumerate()
            .map(|(w, pos)| Subspace::coordinate(field.clone(), layout.classes[w].len(), pos))
            .collect();
        Self { field, layout, pieces }
    }

    /// `V_d` of the PBW filtration.
    pub fn pbw(alg: &ReducedEnveloping<F>, layout: Arc<WeightLayout>, d: usize) -> Self {
        let idx = (0..alg.dim()).filter(|&m| alg.monomial_at(m).degree() <= d);
        Self::coordinate(alg.field().clone(), layout, idx)
    }

    /// Splits a general subspace of `U_χ` known to be weight-graded.
    pub fn from_subspace(sub: &Subspace<F>, layout: Arc<WeightLayout>) -> Result<Self> {
        let mut g = Self::zero(sub.field().clone(), layout);
        for v in sub.basis() {
            for w in g.layout.support(&g.field, v) {
                let part = g.layout.restrict(v, w);
                g.pieces[w].insert(part);
            }
        }
        if g.dim() != sub.dim() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of dim {} is not weight-graded (graded hull has dim {})",
                sub.dim(),
                g.dim()
            )));
        }
        Ok(g)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn layout(&self) -> &Arc<WeightLayout> {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.pieces.iter().map(Subspace::dim).sum()
    }

    pub fn piece(&self, w: usize) -> &Subspace<F> {
        &self.pieces[w]
    }

    /// Dimension of each weight piece, indexed by weight.
    pub fn weight_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Subspace::dim).collect()
    }

    /// Inserts a weight-homogeneous vector; returns whether the span grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> Result<bool> {
        let support = self.layout.support(&self.field, v);
        match support.as_slice() {
            [] => Ok(false),
            [w] => {
                let part = self.layout.restrict(v, *w);
                Ok(self.pieces[*w].insert(part))
            }
            _ => Err(Error::DimensionMismatch(format!(
                "vector is not weight-homogeneous (weights {support:?})"
            ))),
        }
    }

    /// Membership, testing each weight component separately.
    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.layout
            .support(&self.field, v)
            .into_iter()
            .all(|w| self.pieces[w].contains(&self.layout.restrict(v, w)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.sum(b))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.intersect(b))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        same_layout(&self.layout, &other.layout)
            && self.pieces.iter().zip(&other.pieces).all(|(a, b)| a.is_subspace_of(b))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Subspace<F>, &Subspace<F>) -> Result<Subspace<F>>) -> Result<Self> {
        if !same_layout(&self.layout, &other.layout) {
            return Err(Error::DimensionMismatch("different weight layouts".into()));
        }
        let pieces = self
            .pieces
            .iter()
            .zip(&other.pieces)
            .map(|(a, b)| op(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            field: self.field.clone(),
            layout: self.layout.clone(),
            pieces,
        })
    }

    /// Basis vectors in the full coordinate space, weight by weight.
    pub fn basis_vectors(&self) -> Vec<Vec<F::Elem>> {
        let mut out = Vec::with_capacity(self.dim());
        for (w, piece) in self.pieces.iter().enumerate() {
            for row in piece.basis() {
                out.push(self.layout.embed(&self.field, w, row));
            }
        }
        out
    }

    /// Coordinates of `v` in the basis of [`Self::basis_vectors`].
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let mut out = Vec::with_capacity(self.dim());
        for (w, piece) in self.pieces.iter().enumerate() {
            out.extend(piece.coordinates(&self.layout.restrict(v, w))?);
        }
        Some(out)
    }

    /// The same subspace as a single canonical [`Subspace`].
    pub fn to_subspace(&self) -> Subspace<F> {
        let pieces: Vec<(Vec<usize>, Subspace<F>)> = self
            .pieces
            .iter()
            .enumerate()
            .map(|(w, s)| (self.layout.classes[w].clone(), s.clone()))
            .collect();
        Subspace::from_disjoint_pieces(self.field.clone(), self.layout.ambient(), &pieces)
    }

    /// `{ v : u^T G v = 0 for all u }` for a Gram matrix pairing weight `w`
    /// only with weight `-w`. The pairing property is the caller's
    /// responsibility; see [`gram_respects_weights`].
    pub fn orth_complement(&self, gram: &Matrix<F>) -> Result<Self> {
        let n = self.layout.ambient();
        if !gram.is_square() || gram.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "Gram matrix {}x{} on F^{n}",
                gram.rows(),
                gram.cols()
            )));
        }
        let f = &self.field;
        let mut pieces = Vec::with_capacity(self.layout.p);
        for t in 0..self.layout.p {
            let w = self.layout.dual_weight(t);
            let cols = &self.layout.classes[t];
            let rows_idx = &self.layout.classes[w];
            let src = &self.pieces[w];
            if src.is_zero() {
                pieces.push(Subspace::full(f.clone(), cols.len()));
                continue;
            }
            let mut m = Matrix::zeros(f.clone(), src.dim(), cols.len());
            for (r, u) in src.basis().iter().enumerate() {
                for (a, &ua) in u.iter().enumerate() {
                    if f.is_zero(ua) {
                        continue;
                    }
                    let grow = gram.row(rows_idx[a]);
                    let out = m.row_mut(r);
                    for (x, &c) in out.iter_mut().zip(cols) {
                        *x = f.mul_add(*x, ua, grow[c]);
                    }
                }
            }
            pieces.push(m.kernel());
        }
        Ok(Self {
            field: f.clone(),
            layout: self.layout.clone(),
            pieces,
        })
    }
}

/// Whether `gram[x][y] = 0` whenever the weights of `x` and `y` do not sum to zero.
pub fn gram_respects_weights<F: Field>(gram: &Matrix<F>, layout: &WeightLayout) -> bool {
    let f = gram.field();
    (0..gram.rows()).all(|x| {
        let wx = layout.weight_of(x);
        gram.row(x)
            .iter()
            .enumerate()
            .all(|(y, &c)| f.is_zero(c) || (wx + layout.weight_of(y)).is_multiple_of(layout.p))
    })
}
