//! The reduced enveloping algebra `U_χ(sl2)` in the PBW basis `e^i f^j h^k`,
//! `0 <= i, j, k < p`.
//!
//! Multiplication works by normal ordering with
//! `h e^i = e^i (h + 2i)`, `h f^j = f^j (h - 2j)` and
//! `f e^i = e^i f - i e^{i-1} (h + i - 1)`, reducing `e^p`, `f^p` and `h^p`
//! eagerly according to the character. The action of each generator on the
//! basis is tabulated once, at construction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{Field, Poly};
use crate::linalg::{Matrix, Subspace};

/// The `p`-character, up to conjugacy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Character {
    /// `χ = 0`: relations `e^p = f^p = 0`, `h^p = h`.
    Zero,
    /// `χ = e`: relations `e^p = 0`, `f^p = 1`, `h^p = h`.
    NilpotentE,
    /// `χ = a h / 2`: relations `e^p = f^p = 0`, `h^p = h + a`.
    Regular(u32),
}

impl Character {
    pub fn is_nilpotent(self) -> bool {
        !matches!(self, Character::Regular(_))
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Character::Zero => write!(f, "zero"),
            Character::NilpotentE => write!(f, "e"),
            Character::Regular(a) => write!(f, "regular({a})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    E,
    F,
    H,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::E, Generator::F, Generator::H];

    fn slot(self) -> usize {
        match self {
            Generator::E => 0,
            Generator::F => 1,
            Generator::H => 2,
        }
    }
}

/// Exponents of a PBW monomial `e^e f^f h^h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub e: usize,
    pub f: usize,
    pub h: usize,
}

impl Monomial {
    pub fn degree(self) -> usize {
        self.e + self.f + self.h
    }
}

/// Sparse linear operator stored by columns: the image of each basis vector.
#[derive(Clone)]
struct SparseOp<E> {
    offsets: Vec<usize>,
    entries: Vec<(usize, E)>,
}

impl<E: Copy> SparseOp<E> {
    fn from_columns(cols: Vec<Vec<(usize, E)>>) -> Self {
        let mut offsets = Vec::with_capacity(cols.len() + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for c in cols {
            entries.extend(c);
            offsets.push(entries.len());
        }
        Self { offsets, entries }
    }

    #[inline]
    fn column(&self, m: usize) -> &[(usize, E)] {
        &self.entries[self.offsets[m]..self.offsets[m + 1]]
    }
}

/// An element of `U_χ(sl2)` as a coefficient vector over the PBW basis.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgElem<F: Field> {
    chi: Character,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for AlgElem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AlgElem")
            .field("chi", &self.chi)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<F: Field> AlgElem<F> {
    pub fn character(&self) -> Character {
        self.chi
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }
}

/// `U_χ(sl2)` over a field of characteristic `p`.
#[derive(Clone)]
pub struct ReducedEnveloping<F: Field> {
    field: F,
    p: usize,
    chi: Character,
    left: [SparseOp<F::Elem>; 3],
    right: [SparseOp<F::Elem>; 3],
}

impl<F: Field> fmt::Debug for ReducedEnveloping<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U_{}(sl2) over {:?}", self.chi, self.field)
    }
}

impl<F: Field> ReducedEnveloping<F> {
    pub fn new(field: F, chi: Character) -> Result<Self> {
        let p = field.characteristic() as usize;
        if let Character::Regular(a) = chi {
            if (a as usize).is_multiple_of(p) {
                return Err(Error::ZeroArtinSchreier);
            }
        }
        let mut alg = Self {
            field,
            p,
            chi,
            left: [Self::empty_op(), Self::empty_op(), Self::empty_op()],
            right: [Self::empty_op(), Self::empty_op(), Self::empty_op()],
        };
        alg.left = [
            alg.build_left(Generator::E),
            alg.build_left(Generator::F),
            alg.build_left(Generator::H),
        ];
        alg.right = [
            alg.build_right(Generator::E),
            alg.build_right(Generator::F),
            alg.build_right(Generator::H),
        ];
        Ok(alg)
    }

    fn empty_op() -> SparseOp<F::Elem> {
        SparseOp {
            offsets: vec![0],
            entries: Vec::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn character(&self) -> Character {
        self.chi
    }

    /// `p^3`
    pub fn dim(&self) -> usize {
        self.p * self.p * self.p
    }

    /// Top degree `3(p-1)` of the PBW filtration.
    pub fn top_degree(&self) -> usize {
        3 * (self.p - 1)
    }

    #[inline]
    pub fn index(&self, m: Monomial) -> usize {
        (m.e * self.p + m.f) * self.p + m.h
    }

    #[inline]
    pub fn monomial_at(&self, idx: usize) -> Monomial {
        let p = self.p;
        Monomial {
            e: idx / (p * p),
            f: (idx / p) % p,
            h: idx % p,
        }
    }

    /// Index of `e^{p-1} f^{p-1} h^{p-1}`.
    pub fn top_index(&self) -> usize {
        self.dim() - 1
    }

    /// `ad(h)`-eigenvalue `2(i - j) mod p` of a basis monomial.
    pub fn weight(&self, idx: usize) -> usize {
        let m = self.monomial_at(idx);
        (2 * (m.e + self.p - m.f)) % self.p
    }

    /// Basis indices grouped by `ad(h)`-weight `0..p`, ascending within each group.
    pub fn weight_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.p];
        for idx in 0..self.dim() {
            classes[self.weight(idx)].push(idx);
        }
        classes
    }

    /// Constant `κ` in the relation `h^p = h + κ`.
    fn h_shift(&self) -> F::Elem {
        match self.chi {
            Character::Regular(a) => self.field.from_int(i64::from(a)),
            _ => self.field.zero(),
        }
    }

    /// Pushes `coef * e^i f^j h^k` with `i < p`, `j <= p`, `k <= p`, reducing
    /// `f^p` and `h^p` (never both at once).
    fn push_reduced(&self, out: &mut Vec<(usize, F::Elem)>, i: usize, j: usize, k: usize, coef: F::Elem) {
        let f = &self.field;
        let p = self.p;
        if f.is_zero(coef) {
            return;
        }
        if j == p {
            if self.chi == Character::NilpotentE {
                out.push((self.index(Monomial { e: i, f: 0, h: k }), coef));
            }
            return;
        }
        if k == p {
            out.push((self.index(Monomial { e: i, f: j, h: 1 }), coef));
            let shift = self.h_shift();
            if !f.is_zero(shift) {
                out.push((self.index(Monomial { e: i, f: j, h: 0 }), f.mul(coef, shift)));
            }
            return;
        }
        out.push((self.index(Monomial { e: i, f: j, h: k }), coef));
    }

    fn build_left(&self, g: Generator) -> SparseOp<F::Elem> {
        let f = &self.field;
        let p = self.p;
        let one = f.one();
        let cols = (0..self.dim())
            .map(|idx| {
                let Monomial { e: i, f: j, h: k } = self.monomial_at(idx);
                let mut out = Vec::with_capacity(4);
                match g {
                    Generator::E => {
                        if i + 1 < p {
                            out.push((self.index(Monomial { e: i + 1, f: j, h: k }), one));
                        }
                    }
                    Generator::H => {
                        self.push_reduced(&mut out, i, j, k + 1, one);
                        let w = f.from_int(2 * (i as i64 - j as i64));
                        self.push_reduced(&mut out, i, j, k, w);
                    }
                    Generator::F => {
                        // f e^i = e^i f - i e^{i-1} (h + i - 1), then move h past f^j
                        self.push_reduced(&mut out, i, j + 1, k, one);
                        if i > 0 {
                            let ci = f.neg(f.from_int(i as i64));
                            self.push_reduced(&mut out, i - 1, j, k + 1, ci);
                            let shift = f.from_int(i as i64 - 1 - 2 * j as i64);
                            self.push_reduced(&mut out, i - 1, j, k, f.mul(ci, shift));
                        }
                    }
                }
                merge_terms(f, out)
            })
            .collect();
        SparseOp::from_columns(cols)
    }

    fn build_right(&self, g: Generator) -> SparseOp<F::Elem> {
        let f = &self.field;
        let products = self.monomials_times(self.generator(g).coeffs());
        let cols = products
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|(_, c)| !f.is_zero(*c)).collect())
            .collect();
        SparseOp::from_columns(cols)
    }

    fn apply_op(&self, op: &SparseOp<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); v.len()];
        for (m, &x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for &(t, c) in op.column(m) {
                out[t] = f.mul_add(out[t], c, x);
            }
        }
        out
    }

    fn apply_op_transpose(&self, op: &SparseOp<F::Elem>, w: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        (0..w.len())
            .map(|m| {
                op.column(m)
                    .iter()
                    .fold(f.zero(), |acc, &(t, c)| f.mul_add(acc, c, w[t]))
            })
            .collect()
    }

    /// `g * v`
    pub fn left_gen(&self, g: Generator, v: &[F::Elem]) -> Vec<F::Elem> {
        self.apply_op(&self.left[g.slot()], v)
    }

    /// `v * g`
    pub fn right_gen(&self, g: Generator, v: &[F::Elem]) -> Vec<F::Elem> {
        self.apply_op(&self.right[g.slot()], v)
    }

    /// Transpose of left multiplication by `g`, acting on linear functionals.
    pub fn left_gen_transpose(&self, g: Generator, w: &[F::Elem]) -> Vec<F::Elem> {
        self.apply_op_transpose(&self.left[g.slot()], w)
    }

    /// `[g, v] = g v - v g`
    pub fn ad_apply(&self, g: Generator, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let l = self.left_gen(g, v);
        let r = self.right_gen(g, v);
        l.into_iter().zip(r).map(|(a, b)| f.sub(a, b)).collect()
    }

    fn check(&self, u: &AlgElem<F>) -> Result<()> {
        if u.chi != self.chi {
            return Err(Error::CharacterMismatch);
        }
        if u.coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in an algebra of dimension {}",
                u.coeffs.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn element(&self, coeffs: Vec<F::Elem>) -> Result<AlgElem<F>> {
        let u = AlgElem { chi: self.chi, coeffs };
        self.check(&u)?;
        Ok(u)
    }

    pub fn zero(&self) -> AlgElem<F> {
        AlgElem {
            chi: self.chi,
            coeffs: vec![self.field.zero(); self.dim()],
        }
    }

    pub fn scalar(&self, c: F::Elem) -> AlgElem<F> {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    pub fn one(&self) -> AlgElem<F> {
        self.scalar(self.field.one())
    }

    pub fn monomial(&self, e: usize, f: usize, h: usize) -> AlgElem<F> {
        assert!(e < self.p && f < self.p && h < self.p, "exponent out of range");
        let mut z = self.zero();
        z.coeffs[self.index(Monomial { e, f, h })] = self.field.one();
        z
    }

    pub fn generator(&self, g: Generator) -> AlgElem<F> {
        match g {
            Generator::E => self.monomial(1, 0, 0),
            Generator::F => self.monomial(0, 1, 0),
            Generator::H => self.monomial(0, 0, 1),
        }
    }

    pub fn add(&self, u: &AlgElem<F>, v: &AlgElem<F>) -> Result<AlgElem<F>> {
        self.check(u)?;
        self.check(v)?;
        let f = &self.field;
        let coeffs = u.coeffs.iter().zip(&v.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(AlgElem { chi: self.chi, coeffs })
    }

    pub fn sub(&self, u: &AlgElem<F>, v: &AlgElem<F>) -> Result<AlgElem<F>> {
        self.check(u)?;
        self.check(v)?;
        let f = &self.field;
        let coeffs = u.coeffs.iter().zip(&v.coeffs).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(AlgElem { chi: self.chi, coeffs })
    }

    pub fn scale(&self, u: &AlgElem<F>, s: F::Elem) -> AlgElem<F> {
        let f = &self.field;
        AlgElem {
            chi: self.chi,
            coeffs: u.coeffs.iter().map(|&a| f.mul(a, s)).collect(),
        }
    }

    pub fn is_zero(&self, u: &AlgElem<F>) -> bool {
        u.coeffs.iter().all(|&c| self.field.is_zero(c))
    }

    /// Product in normal-ordered reduced form.
    pub fn mul(&self, u: &AlgElem<F>, v: &AlgElem<F>) -> Result<AlgElem<F>> {
        self.check(u)?;
        self.check(v)?;
        Ok(AlgElem {
            chi: self.chi,
            coeffs: self.mul_vec(&u.coeffs, &v.coeffs),
        })
    }

    pub fn pow(&self, u: &AlgElem<F>, n: u32) -> Result<AlgElem<F>> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, u)?;
        }
        Ok(acc)
    }

    /// `[u, v]`
    pub fn commutator(&self, u: &AlgElem<F>, v: &AlgElem<F>) -> Result<AlgElem<F>> {
        self.sub(&self.mul(u, v)?, &self.mul(v, u)?)
    }

    /// Product of raw coefficient vectors:
    /// `u v = Σ_i e^i ( Σ_j f^j ( Σ_k u_{ijk} h^k v ) )`, each sum by Horner.
    pub fn mul_vec(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let p = self.p;
        let n = self.dim();
        let max_k = (0..n).filter(|&m| !f.is_zero(u[m])).map(|m| m % p).max();
        let Some(max_k) = max_k else {
            return vec![f.zero(); n];
        };
        let mut h_powers = Vec::with_capacity(max_k + 1);
        h_powers.push(v.to_vec());
        for k in 1..=max_k {
            let next = self.left_gen(Generator::H, &h_powers[k - 1]);
            h_powers.push(next);
        }
        let mut result: Option<Vec<F::Elem>> = None;
        for i in (0..p).rev() {
            let mut acc: Option<Vec<F::Elem>> = None;
            for j in (0..p).rev() {
                if let Some(a) = acc.as_mut() {
                    *a = self.left_gen(Generator::F, a);
                }
                let base = (i * p + j) * p;
                for (k, hk) in h_powers.iter().enumerate() {
                    let c = u[base + k];
                    if f.is_zero(c) {
                        continue;
                    }
                    let a = acc.get_or_insert_with(|| vec![f.zero(); n]);
                    for (x, &y) in a.iter_mut().zip(hk) {
                        *x = f.mul_add(*x, c, y);
                    }
                }
            }
            if let Some(r) = result.as_mut() {
                *r = self.left_gen(Generator::E, r);
            }
            if let Some(a) = acc {
                match result.as_mut() {
                    None => result = Some(a),
                    Some(r) => {
                        for (x, y) in r.iter_mut().zip(a) {
                            *x = f.add(*x, y);
                        }
                    }
                }
            }
        }
        result.unwrap_or_else(|| vec![f.zero(); n])
    }

    /// `m * v` for every PBW monomial `m`, indexed like the basis.
    pub fn monomials_times(&self, v: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let p = self.p;
        let mut out = vec![Vec::new(); self.dim()];
        let mut hk = v.to_vec();
        for k in 0..p {
            let mut fjk = hk.clone();
            for j in 0..p {
                let mut eijk = fjk.clone();
                for i in 0..p {
                    let next = if i + 1 < p {
                        Some(self.left_gen(Generator::E, &eijk))
                    } else {
                        None
                    };
                    out[self.index(Monomial { e: i, f: j, h: k })] = eijk;
                    match next {
                        Some(n) => eijk = n,
                        None => break,
                    }
                }
                if j + 1 < p {
                    fjk = self.left_gen(Generator::F, &fjk);
                }
            }
            if k + 1 < p {
                hk = self.left_gen(Generator::H, &hk);
            }
        }
        out
    }

    /// `c = (h - 1)^2 + 4 e f = h^2 - 2h + 1 + 4ef`.
    pub fn casimir(&self) -> AlgElem<F> {
        let f = &self.field;
        let mut c = self.zero();
        c.coeffs[self.index(Monomial { e: 0, f: 0, h: 2 })] = f.one();
        c.coeffs[self.index(Monomial { e: 0, f: 0, h: 1 })] = f.from_int(-2);
        c.coeffs[0] = f.one();
        c.coeffs[self.index(Monomial { e: 1, f: 1, h: 0 })] = f.from_int(4);
        c
    }

    /// `c * v`, computed through the generator tables.
    pub fn casimir_times(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let hv = self.left_gen(Generator::H, v);
        let hhv = self.left_gen(Generator::H, &hv);
        let efv = self.left_gen(Generator::E, &self.left_gen(Generator::F, v));
        let two = f.from_int(2);
        let four = f.from_int(4);
        (0..v.len())
            .map(|m| {
                let mut x = f.add(hhv[m], v[m]);
                x = f.sub(x, f.mul(two, hv[m]));
                f.mul_add(x, four, efv[m])
            })
            .collect()
    }

    /// `q(c)` for a polynomial `q` in the Casimir element.
    pub fn eval_center_poly(&self, q: &Poly<F>) -> AlgElem<F> {
        let f = &self.field;
        let mut acc = vec![f.zero(); self.dim()];
        for &coef in q.coeffs().iter().rev() {
            acc = self.casimir_times(&acc);
            acc[0] = f.add(acc[0], coef);
        }
        AlgElem {
            chi: self.chi,
            coeffs: acc,
        }
    }

    /// `V_d`: span of the monomials of total degree at most `d`.
    pub fn pbw_subspace(&self, d: usize) -> Subspace<F> {
        let idx = (0..self.dim()).filter(|&m| self.monomial_at(m).degree() <= d);
        Subspace::coordinate(self.field.clone(), self.dim(), idx)
    }

    /// Matrix of `u ↦ x u - u x` in the PBW basis.
    pub fn ad_matrix(&self, g: Generator) -> Matrix<F> {
        let f = &self.field;
        let n = self.dim();
        let mut m = Matrix::zeros(f.clone(), n, n);
        for col in 0..n {
            for &(t, c) in self.left[g.slot()].column(col) {
                m[(t, col)] = f.add(m[(t, col)], c);
            }
            for &(t, c) in self.right[g.slot()].column(col) {
                m[(t, col)] = f.sub(m[(t, col)], c);
            }
        }
        m
    }
}

fn merge_terms<F: Field>(f: &F, mut terms: Vec<(usize, F::Elem)>) -> Vec<(usize, F::Elem)> {
    terms.sort_by_key(|t| t.0);
    let mut out: Vec<(usize, F::Elem)> = Vec::with_capacity(terms.len());
    for (i, c) in terms {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d = f.add(*d, c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !f.is_zero(*c));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{artin_schreier_field, PrimeField, PrimeP};

    fn alg(p: u32, chi: Character) -> ReducedEnveloping<PrimeField> {
        ReducedEnveloping::new(PrimeField::new(PrimeP::new(p).unwrap()), chi).unwrap()
    }

    #[test]
    fn commutation_relations() {
        let u = alg(5, Character::Zero);
        let (e, f, h) = (
            u.generator(Generator::E),
            u.generator(Generator::F),
            u.generator(Generator::H),
        );
        // f e = e f - h
        let fe = u.mul(&f, &e).unwrap();
        let expected = u.sub(&u.monomial(1, 1, 0), &h).unwrap();
        assert_eq!(fe, expected);
        // h e = e h + 2 e
        let he = u.mul(&h, &e).unwrap();
        let expected = u.add(&u.monomial(1, 0, 1), &u.scale(&e, 2)).unwrap();
        assert_eq!(he, expected);
        assert_eq!(u.commutator(&e, &f).unwrap(), h);
        assert_eq!(u.commutator(&h, &f).unwrap(), u.scale(&f, 3));
    }

    #[test]
    fn pth_power_reductions() {
        let p = 5;
        let z = alg(p, Character::Zero);
        let e = z.generator(Generator::E);
        assert!(z.is_zero(&z.mul(&z.monomial(4, 0, 0), &e).unwrap()));
        let ne = alg(p, Character::NilpotentE);
        let f = ne.generator(Generator::F);
        assert_eq!(ne.mul(&ne.monomial(0, 4, 0), &f).unwrap(), ne.one());
        let h = z.generator(Generator::H);
        assert_eq!(z.pow(&h, 5).unwrap(), h);
        let r = alg(p, Character::Regular(3));
        let h = r.generator(Generator::H);
        let expected = r.add(&h, &r.scalar(3)).unwrap();
        assert_eq!(r.pow(&h, 5).unwrap(), expected);
    }

    #[test]
    fn associativity_on_all_monomial_triples_p3() {
        for chi in [Character::Zero, Character::NilpotentE, Character::Regular(2)] {
            let u = alg(3, chi);
            let basis: Vec<_> = (0..27)
                .map(|m| {
                    let mo = u.monomial_at(m);
                    u.monomial(mo.e, mo.f, mo.h)
                })
                .collect();
            for a in &basis {
                for b in &basis {
                    let ab = u.mul(a, b).unwrap();
                    for c in &basis {
                        let lhs = u.mul(&ab, c).unwrap();
                        let rhs = u.mul(a, &u.mul(b, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn casimir_is_central() {
        for chi in [Character::Zero, Character::NilpotentE, Character::Regular(1)] {
            let u = alg(5, chi);
            let c = u.casimir();
            for g in Generator::ALL {
                let x = u.generator(g);
                assert_eq!(u.mul(&c, &x).unwrap(), u.mul(&x, &c).unwrap());
            }
            let v = u.monomial(2, 3, 1).into_coeffs();
            assert_eq!(u.casimir_times(&v), u.mul_vec(c.coeffs(), &v));
        }
    }

    #[test]
    fn casimir_coefficients() {
        let u = alg(5, Character::Zero);
        let c = u.casimir();
        let nz: Vec<_> = (0..u.dim())
            .filter(|&m| c.coeffs()[m] != 0)
            .map(|m| (u.monomial_at(m), c.coeffs()[m]))
            .collect();
        assert_eq!(
            nz,
            vec![
                (Monomial { e: 0, f: 0, h: 0 }, 1),
                (Monomial { e: 0, f: 0, h: 1 }, 3),
                (Monomial { e: 0, f: 0, h: 2 }, 1),
                (Monomial { e: 1, f: 1, h: 0 }, 4),
            ]
        );
    }

    #[test]
    fn pbw_subspace_dims() {
        let u = alg(5, Character::Zero);
        assert_eq!(u.pbw_subspace(0).dim(), 1);
        assert_eq!(u.pbw_subspace(1).dim(), 4);
        assert_eq!(u.pbw_subspace(12).dim(), 125);
        assert_eq!(u.pbw_subspace(40).dim(), 125);
    }

    #[test]
    fn adjoint_action() {
        let u = alg(5, Character::Zero);
        let f = u.generator(Generator::F).into_coeffs();
        let h = u.generator(Generator::H).into_coeffs();
        assert_eq!(u.ad_apply(Generator::E, &f), h);
        let adh = u.ad_matrix(Generator::H);
        for r in 0..u.dim() {
            for c in 0..u.dim() {
                let expected = if r == c { u.weight(r) as u32 } else { 0 };
                assert_eq!(adh[(r, c)], expected);
            }
        }
        let c = u.casimir();
        assert!(u.ad_apply(Generator::E, c.coeffs()).iter().all(|&x| x == 0));
        let ade = u.ad_matrix(Generator::E);
        let adf = u.ad_matrix(Generator::F);
        assert_eq!(ade.commutator(&adf).unwrap(), adh);
        assert!(ade.pow(9).unwrap().is_zero());
        assert!(adf.pow(9).unwrap().is_zero());
    }

    #[test]
    fn ad_e_jordan_type_p3() {
        let u = alg(3, Character::Zero);
        let parts = u.ad_matrix(Generator::E).jordan_type_nilpotent().unwrap();
        assert_eq!(parts.iter().sum::<usize>(), 27);
        assert!(parts.iter().all(|&s| s <= 27));
    }

    #[test]
    fn filtration_is_multiplicative() {
        let u = alg(3, Character::Zero);
        for a in 0..u.dim() {
            for b in 0..u.dim() {
                let da = u.monomial_at(a);
                let db = u.monomial_at(b);
                let x = u.monomial(da.e, da.f, da.h);
                let y = u.monomial(db.e, db.f, db.h);
                let xy = u.mul(&x, &y).unwrap();
                let d = da.degree() + db.degree();
                assert!(u.pbw_subspace(d).contains(xy.coeffs()));
            }
        }
    }

    #[test]
    fn extension_field_algebra() {
        let k = artin_schreier_field(PrimeP::new(3).unwrap(), 1).unwrap();
        let u = ReducedEnveloping::new(k, Character::Regular(1)).unwrap();
        let c = u.casimir();
        let e = u.generator(Generator::E);
        assert_eq!(u.mul(&c, &e).unwrap(), u.mul(&e, &c).unwrap());
    }

    #[test]
    fn character_mismatch_is_rejected() {
        let a = alg(3, Character::Zero);
        let b = alg(3, Character::NilpotentE);
        assert_eq!(a.mul(&a.one(), &b.one()).unwrap_err(), Error::CharacterMismatch);
        assert!(ReducedEnveloping::new(PrimeField::new(PrimeP::new(3).unwrap()), Character::Regular(3)).is_err());
    }
}
