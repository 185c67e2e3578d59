//! Finite-dimensional `U_χ(sl2)`-modules given by matrices, and the tools
//! used to decompose the adjoint action on blocks: radical series,
//! intertwiner dimensions, composition tallies and Jordan types.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::blocks::Block;
use crate::error::{Error, Result};
use crate::ffield::{Field, Poly};
use crate::filt::{filtration, ideal_c_minus_alpha, FiltrationKind};
use crate::linalg::{Matrix, QuotientBasis, Subspace};
use crate::pbw::{Character, Generator, ReducedEnveloping};
use crate::weights::{GradedSubspace, WeightLayout};

/// A module given by the actions of `e`, `f` and `h`.
#[derive(Clone)]
pub struct ModuleAction<F: Field> {
    pub chi: Character,
    pub e: Matrix<F>,
    pub f: Matrix<F>,
    pub h: Matrix<F>,
}

impl<F: Field> fmt::Debug for ModuleAction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleAction(χ={}, dim {})", self.chi, self.dim())
    }
}

/// Which relations of `U_χ(sl2)` a module satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationCheck {
    pub commutators: bool,
    pub e_power: bool,
    pub f_power: bool,
    pub h_power: bool,
}

impl RelationCheck {
    pub fn all(self) -> bool {
        self.commutators && self.e_power && self.f_power && self.h_power
    }
}

impl<F: Field> ModuleAction<F> {
    pub fn new(chi: Character, e: Matrix<F>, f: Matrix<F>, h: Matrix<F>) -> Result<Self> {
        let n = e.rows();
        for m in [&e, &f, &h] {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!("action matrices must all be {n}x{n}")));
            }
        }
        Ok(Self { chi, e, f, h })
    }

    pub fn field(&self) -> &F {
        self.e.field()
    }

    pub fn dim(&self) -> usize {
        self.e.rows()
    }

    pub fn action(&self, g: Generator) -> &Matrix<F> {
        match g {
            Generator::E => &self.e,
            Generator::F => &self.f,
            Generator::H => &self.h,
        }
    }

    pub fn relations(&self) -> Result<RelationCheck> {
        let field = self.field().clone();
        let n = self.dim();
        let p = field.characteristic();
        let id = Matrix::identity(field.clone(), n);
        let he = self.h.commutator(&self.e)?;
        let hf = self.h.commutator(&self.f)?;
        let ef = self.e.commutator(&self.f)?;
        let commutators =
            he == self.e.scale(field.from_int(2)) && hf == self.f.scale(field.from_int(-2)) && ef == self.h;
        let e_power = self.e.pow(p)?.is_zero();
        let fp = self.f.pow(p)?;
        let f_power = match self.chi {
            Character::NilpotentE => fp == id,
            _ => fp.is_zero(),
        };
        let shift = match self.chi {
            Character::Regular(a) => field.from_int(i64::from(a)),
            _ => field.zero(),
        };
        let h_power = self.h.pow(p)? == self.h.add(&id.scale(shift))?;
        Ok(RelationCheck {
            commutators,
            e_power,
            f_power,
            h_power,
        })
    }

    /// `(H - 1)^2 + 4EF`
    pub fn casimir(&self) -> Result<Matrix<F>> {
        let field = self.field();
        let shifted = self.h.sub(&Matrix::identity(field.clone(), self.dim()))?;
        shifted
            .mul(&shifted)?
            .add(&self.e.mul(&self.f)?.scale(field.from_int(4)))
    }

    /// The scalar by which the Casimir acts, if it acts by a scalar.
    pub fn casimir_scalar(&self) -> Result<Option<F::Elem>> {
        let c = self.casimir()?;
        let field = self.field();
        if self.dim() == 0 {
            return Ok(None);
        }
        let s = c[(0, 0)];
        let scalar = Matrix::identity(field.clone(), self.dim()).scale(s);
        Ok((c == scalar).then_some(s))
    }

    /// The matrix by which an algebra element (PBW coefficient vector) acts,
    /// by Horner's rule in `e`, then `f`, then `h`.
    pub fn represent(&self, p: usize, coeffs: &[F::Elem]) -> Result<Matrix<F>> {
        let field = self.field().clone();
        let n = self.dim();
        if coeffs.len() != p * p * p {
            return Err(Error::DimensionMismatch("element length is not p^3".into()));
        }
        let mut h_powers = vec![Matrix::identity(field.clone(), n)];
        for k in 1..p {
            let next = h_powers[k - 1].mul(&self.h)?;
            h_powers.push(next);
        }
        let mut result = Matrix::zeros(field.clone(), n, n);
        for i in (0..p).rev() {
            let mut acc = Matrix::zeros(field.clone(), n, n);
            for j in (0..p).rev() {
                acc = self.f.mul(&acc)?;
                for (k, hk) in h_powers.iter().enumerate() {
                    let c = coeffs[(i * p + j) * p + k];
                    if !field.is_zero(c) {
                        acc = acc.add(&hk.scale(c))?;
                    }
                }
            }
            result = self.e.mul(&result)?.add(&acc)?;
        }
        Ok(result)
    }

    /// The smallest submodule containing the given vectors.
    pub fn submodule_generated(&self, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> Subspace<F> {
        let mut span = Subspace::zero(self.field().clone(), self.dim());
        let mut queue: Vec<Vec<F::Elem>> = Vec::new();
        for v in vectors {
            if span.insert(v.clone()) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for g in Generator::ALL {
                let w = self.action(g).mul_vec(&v).expect("square action");
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        span
    }

    /// The action on `numerator / denominator` for submodules
    /// `denominator ⊆ numerator`.
    pub fn subquotient(&self, numerator: &Subspace<F>, denominator: &Subspace<F>) -> Result<Self> {
        let q = QuotientBasis::new(numerator, denominator)?;
        let field = self.field().clone();
        let reps = q.representatives();
        let mut mats = Vec::with_capacity(3);
        for g in Generator::ALL {
            let cols = reps
                .iter()
                .map(|r| {
                    let img = self.action(g).mul_vec(r)?;
                    q.coordinates(&img)
                        .ok_or_else(|| Error::DimensionMismatch("subspace is not a submodule".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            mats.push(Matrix::from_columns(field.clone(), reps.len(), &cols)?);
        }
        let h = mats.pop().expect("three generators");
        let f = mats.pop().expect("three generators");
        let e = mats.pop().expect("three generators");
        Self::new(self.chi, e, f, h)
    }
}

/// `L_λ`, `0 <= λ <= p-1`, for `χ = 0`: basis `v_0..v_λ` with
/// `H v_i = (λ - 2i) v_i`, `F v_i = v_{i+1}`, `E v_i = i(λ + 1 - i) v_{i-1}`.
pub fn simple_module<F: Field>(field: &F, lambda: u32) -> Result<ModuleAction<F>> {
    let p = field.characteristic();
    if lambda >= p {
        return Err(Error::WeightOutOfRange(format!("λ = {lambda} is not below p = {p}")));
    }
    let n = lambda as usize + 1;
    let l = i64::from(lambda);
    let mut e = Matrix::zeros(field.clone(), n, n);
    let mut f = Matrix::zeros(field.clone(), n, n);
    let mut h = Matrix::zeros(field.clone(), n, n);
    for i in 0..n {
        let ii = i as i64;
        h[(i, i)] = field.from_int(l - 2 * ii);
        if i + 1 < n {
            f[(i + 1, i)] = field.one();
        }
        if i > 0 {
            e[(i - 1, i)] = field.from_int(ii * (l + 1 - ii));
        }
    }
    ModuleAction::new(Character::Zero, e, f, h)
}

/// The baby Verma module `Δ_{χ,λ}`: basis `v_0..v_{p-1}`,
/// `H v_i = (λ - 2i) v_i`, `E v_i = i(λ - i + 1) v_{i-1}`, `F v_i = v_{i+1}`
/// and `F v_{p-1} = v_0` for `χ = e`, `0` otherwise.
pub fn baby_verma<F: Field>(field: &F, chi: Character, lambda: F::Elem) -> Result<ModuleAction<F>> {
    let p = field.characteristic() as usize;
    let valid = match chi {
        Character::Regular(a) => {
            let a = field.from_int(i64::from(a));
            field.sub(field.pow(lambda, p as u64), lambda) == a
        }
        _ => field.pow(lambda, p as u64) == lambda,
    };
    if !valid {
        return Err(Error::WeightOutOfRange(format!(
            "{lambda:?} is not a weight for χ = {chi}"
        )));
    }
    let mut e = Matrix::zeros(field.clone(), p, p);
    let mut f = Matrix::zeros(field.clone(), p, p);
    let mut h = Matrix::zeros(field.clone(), p, p);
    for i in 0..p {
        let ii = field.from_int(i as i64);
        h[(i, i)] = field.sub(lambda, field.mul(field.from_int(2), ii));
        if i + 1 < p {
            f[(i + 1, i)] = field.one();
        } else if chi == Character::NilpotentE {
            f[(0, i)] = field.one();
        }
        if i > 0 {
            let c = field.mul(ii, field.add(field.sub(lambda, ii), field.one()));
            e[(i - 1, i)] = c;
        }
    }
    ModuleAction::new(chi, e, f, h)
}

/// A complete list of simple modules for the character, labelled by
/// highest weight: `L_0..L_{p-1}` for `χ = 0`; `Δ_{e,λ}` for one `λ` in each
/// pair `{λ, -λ-2}` for `χ = e`; `Δ_{χ,λ}` for the `p` roots of
/// `x^p - x = a` for `χ = a h/2`.
pub fn simple_modules<F: Field>(field: &F, chi: Character) -> Result<Vec<(F::Elem, ModuleAction<F>)>> {
    let p = field.characteristic();
    match chi {
        Character::Zero => (0..p)
            .map(|l| Ok((field.from_int(i64::from(l)), simple_module(field, l)?)))
            .collect(),
        Character::NilpotentE => {
            let reps = (0..p).filter(|&l| l <= (p - 3) / 2 || l == p - 1);
            reps.map(|l| {
                let lam = field.from_int(i64::from(l));
                Ok((lam, baby_verma(field, chi, lam)?))
            })
            .collect()
        }
        Character::Regular(a) => {
            let mut coeffs = vec![field.zero(); p as usize + 1];
            coeffs[p as usize] = field.one();
            coeffs[1] = field.neg(field.one());
            coeffs[0] = field.neg(field.from_int(i64::from(a)));
            let roots = Poly::new(field.clone(), coeffs).roots_with_multiplicity();
            if roots.len() != p as usize {
                return Err(Error::Unsupported(format!(
                    "x^p - x - {a} does not split over {field:?}"
                )));
            }
            roots
                .into_iter()
                .map(|(lam, _)| Ok((lam, baby_verma(field, chi, lam)?)))
                .collect()
        }
    }
}

/// `dim Hom(M, N)`: the solution space of `X A_M = A_N X` for `A = E, F, H`.
pub fn hom_dim<F: Field>(m: &ModuleAction<F>, n: &ModuleAction<F>) -> Result<usize> {
    if m.chi != n.chi {
        return Err(Error::CharacterMismatch);
    }
    let field = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    // unknown X[r][c] at index r * dm + c; one equation per (g, r, c)
    let mut sys = Matrix::zeros(field.clone(), 3 * dn * dm, dn * dm);
    for (gi, g) in Generator::ALL.into_iter().enumerate() {
        let am = m.action(g);
        let an = n.action(g);
        for r in 0..dn {
            for c in 0..dm {
                let row = (gi * dn + r) * dm + c;
                // (X A_M)[r][c] = Σ_k X[r][k] A_M[k][c]
                for k in 0..dm {
                    let v = am[(k, c)];
                    if !field.is_zero(v) {
                        let col = r * dm + k;
                        sys[(row, col)] = field.add(sys[(row, col)], v);
                    }
                }
                // (A_N X)[r][c] = Σ_k A_N[r][k] X[k][c]
                for k in 0..dn {
                    let v = an[(r, k)];
                    if !field.is_zero(v) {
                        let col = k * dm + c;
                        sys[(row, col)] = field.sub(sys[(row, col)], v);
                    }
                }
            }
        }
    }
    Ok(dn * dm - sys.rank())
}

/// `dim Hom(L_λ, N)` for `χ = 0`, via `L_λ = U_0 v / ⟨e v, (h - λ) v, f^{λ+1} v⟩`:
/// the dimension of `{ v : E v = 0, H v = λ v, F^{λ+1} v = 0 }`.
pub fn hom_from_simple_dim<F: Field>(lambda: u32, n: &ModuleAction<F>) -> Result<usize> {
    if n.chi != Character::Zero {
        return Err(Error::CharacterMismatch);
    }
    let field = n.field();
    let d = n.dim();
    let shifted =
        n.h.sub(&Matrix::identity(field.clone(), d).scale(field.from_int(i64::from(lambda))))?;
    let fpow = n.f.pow(lambda + 1)?;
    let mut rows = n.e.row_vectors();
    rows.extend(shifted.row_vectors());
    rows.extend(fpow.row_vectors());
    Ok(Matrix::from_rows(field.clone(), d, &rows)?.kernel().dim())
}

/// The Jacobson radical of `U_χ(sl2)` with a set of two-sided generators.
#[derive(Clone, Debug)]
pub struct AlgebraRadical<F: Field> {
    pub subspace: GradedSubspace<F>,
    /// Elements generating the radical as a two-sided ideal.
    pub generators: Vec<Vec<F::Elem>>,
}

impl<F: Field> AlgebraRadical<F> {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

/// The kernel of `U_χ → ⊕ End(L)` over all simple modules `L`.
pub fn algebra_radical<F: Field>(alg: &ReducedEnveloping<F>, layout: &Arc<WeightLayout>) -> Result<AlgebraRadical<F>> {
    let field = alg.field();
    let p = alg.p();
    let simples = simple_modules(field, alg.character())?;
    // representation matrix: one row per matrix entry of each simple module,
    // one column per PBW monomial
    let mut columns = vec![Vec::new(); alg.dim()];
    for (_, l) in &simples {
        let n = l.dim();
        let mut h_pow = Matrix::identity(field.clone(), n);
        for k in 0..p {
            let mut fh = h_pow.clone();
            for j in 0..p {
                let mut efh = fh.clone();
                for i in 0..p {
                    let idx = (i * p + j) * p + k;
                    for r in 0..n {
                        columns[idx].extend_from_slice(efh.row(r));
                    }
                    efh = l.e.mul(&efh)?;
                }
                fh = l.f.mul(&fh)?;
            }
            h_pow = h_pow.mul(&l.h)?;
        }
    }
    let rows = columns[0].len();
    let rep = Matrix::from_columns(field.clone(), rows, &columns)?;
    let kernel = rep.kernel();
    let subspace = GradedSubspace::from_subspace(&kernel, layout.clone())?;
    let generators = two_sided_generators(alg, &subspace)?;
    Ok(AlgebraRadical { subspace, generators })
}

/// Greedy generators of a two-sided ideal: scan its basis and keep every
/// element not already in the ideal generated by the earlier ones.
fn two_sided_generators<F: Field>(alg: &ReducedEnveloping<F>, ideal: &GradedSubspace<F>) -> Result<Vec<Vec<F::Elem>>> {
    let mut closure = GradedSubspace::zero(alg.field().clone(), ideal.layout().clone());
    let mut generators = Vec::new();
    for v in ideal.basis_vectors() {
        if closure.contains(&v) {
            continue;
        }
        generators.push(v.clone());
        let mut queue = vec![v];
        while let Some(x) = queue.pop() {
            if !closure.insert(&x)? {
                continue;
            }
            for g in Generator::ALL {
                queue.push(alg.left_gen(g, &x));
                queue.push(alg.right_gen(g, &x));
            }
        }
    }
    if closure != *ideal {
        return Err(Error::DimensionMismatch("subspace is not a two-sided ideal".into()));
    }
    Ok(generators)
}

/// Smallest `k` with `J^k = 0`, searching up to `bound`; `J^k` is computed
/// as the two-sided ideal generated by `g J^{k-1}` over the generators `g`.
pub fn radical_nilpotency_index<F: Field>(
    alg: &ReducedEnveloping<F>,
    radical: &AlgebraRadical<F>,
    bound: usize,
) -> Result<Option<usize>> {
    let mut power = radical.subspace.clone();
    for k in 1..=bound {
        if power.dim() == 0 {
            return Ok(Some(k - 1));
        }
        let mut next = GradedSubspace::zero(alg.field().clone(), power.layout().clone());
        let mut queue = Vec::new();
        for g in &radical.generators {
            for s in power.basis_vectors() {
                queue.push(alg.mul_vec(g, &s));
            }
        }
        while let Some(x) = queue.pop() {
            if !next.insert(&x)? {
                continue;
            }
            for g in Generator::ALL {
                queue.push(alg.left_gen(g, &x));
                queue.push(alg.right_gen(g, &x));
            }
        }
        power = next;
    }
    Ok((power.dim() == 0).then_some(bound))
}

/// The radical series `M ⊇ J M ⊇ J^2 M ⊇ … ⊇ 0` as its semisimple layers.
pub fn radical_series<F: Field>(
    alg: &ReducedEnveloping<F>,
    radical: &AlgebraRadical<F>,
    module: &ModuleAction<F>,
) -> Result<Vec<ModuleAction<F>>> {
    let p = alg.p();
    let reps = radical
        .generators
        .iter()
        .map(|g| module.represent(p, g))
        .collect::<Result<Vec<_>>>()?;
    let mut current = Subspace::full(module.field().clone(), module.dim());
    let mut layers = Vec::new();
    while !current.is_zero() {
        let images = reps
            .iter()
            .flat_map(|r| current.basis().iter().map(move |v| r.mul_vec(v)))
            .collect::<Result<Vec<_>>>()?;
        let next = module.submodule_generated(images);
        if next.dim() == current.dim() {
            return Err(Error::NotNilpotent);
        }
        layers.push(module.subquotient(&current, &next)?);
        current = next;
    }
    Ok(layers)
}

/// Composition multiplicities keyed by highest weight `λ`.
pub type CompositionTally = BTreeMap<u32, usize>;

/// Composition factors of a `χ = 0` module: `dim Hom(L_λ, layer)` summed
/// over the semisimple layers of its radical series.
pub fn composition_tally<F: Field>(
    alg: &ReducedEnveloping<F>,
    radical: &AlgebraRadical<F>,
    module: &ModuleAction<F>,
) -> Result<CompositionTally> {
    if module.chi != Character::Zero || alg.character() != Character::Zero {
        return Err(Error::Unsupported("composition tallies are computed for χ = 0".into()));
    }
    let mut tally = CompositionTally::new();
    for layer in radical_series(alg, radical, module)? {
        for lambda in 0..alg.p() as u32 {
            let m = hom_from_simple_dim(lambda, &layer)?;
            if m > 0 {
                *tally.entry(lambda).or_insert(0) += m;
            }
        }
    }
    Ok(tally)
}

/// `Σ multiplicity · dim L_λ`
pub fn tally_dim(tally: &CompositionTally) -> usize {
    tally.iter().map(|(&l, &m)| (l as usize + 1) * m).sum()
}

/// The adjoint action of `e`, `f`, `h` restricted to a subspace of `U_χ`
/// that is stable under it, in the basis of
/// [`GradedSubspace::basis_vectors`].
pub fn adjoint_on<F: Field>(alg: &ReducedEnveloping<F>, space: &GradedSubspace<F>) -> Result<ModuleAction<F>> {
    let field = alg.field().clone();
    let basis = space.basis_vectors();
    let mut mats = Vec::with_capacity(3);
    for g in Generator::ALL {
        let cols = basis
            .iter()
            .map(|b| {
                space
                    .coordinates(&alg.ad_apply(g, b))
                    .ok_or_else(|| Error::DimensionMismatch("subspace is not ad-stable".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        mats.push(Matrix::from_columns(field.clone(), basis.len(), &cols)?);
    }
    let h = mats.pop().expect("three generators");
    let f = mats.pop().expect("three generators");
    let e = mats.pop().expect("three generators");
    // the adjoint action factors through U_0 whatever χ is
    ModuleAction::new(Character::Zero, e, f, h)
}

pub fn adjoint_module<F: Field>(alg: &ReducedEnveloping<F>, block: &Block<F>) -> Result<ModuleAction<F>> {
    adjoint_on(alg, &block.subspace)
}

/// Joint kernel of `ad(e)`, `ad(f)`, `ad(h)` on a block, computed in
/// algebra coordinates: the centralizer of `sl2` in `A_α`.
pub fn centralizer_dim<F: Field>(alg: &ReducedEnveloping<F>, block: &Block<F>) -> Result<usize> {
    let field = alg.field().clone();
    let basis = block.subspace.basis_vectors();
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for g in Generator::ALL {
        let images: Vec<Vec<F::Elem>> = basis.iter().map(|b| alg.ad_apply(g, b)).collect();
        // row r of the map basis-coefficients -> algebra coordinates
        for r in 0..alg.dim() {
            rows.push(images.iter().map(|v| v[r]).collect());
        }
    }
    Ok(Matrix::from_rows(field, basis.len(), &rows)?.kernel().dim())
}

/// Jordan type of `E` and whether every part equals `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivityCertificate {
    pub partition: Vec<usize>,
    pub certified: bool,
}

/// A module over `U_0(sl2)` on which `E` has Jordan type `(p, …, p)` is free
/// over `k[e]/e^p`; for modules with an `ad`-equivariant structure this
/// certifies projectivity.
pub fn projectivity_certificate<F: Field>(m: &ModuleAction<F>) -> Result<ProjectivityCertificate> {
    let p = m.field().characteristic() as usize;
    let partition = m.e.jordan_type_nilpotent()?;
    let certified = !partition.is_empty() && partition.iter().all(|&s| s == p);
    Ok(ProjectivityCertificate { partition, certified })
}

/// Which graded piece of a block filtration to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceTarget {
    Block,
    Ideal,
    Quotient,
}

/// The adjoint action on `gr_d` of the block, of `⟨c - α⟩`, or of
/// `A_α / ⟨c - α⟩`, for the given filtration.
pub fn graded_piece_module<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    block: &Block<F>,
    kind: FiltrationKind,
    target: PieceTarget,
    d: usize,
) -> Result<ModuleAction<F>> {
    let filt = filtration(alg, layout, block, kind)?;
    if d >= filt.terms.len() {
        return Err(Error::WeightOutOfRange(format!("degree {d} beyond the filtration")));
    }
    let zero = GradedSubspace::zero(alg.field().clone(), layout.clone());
    let (num, den) = match target {
        PieceTarget::Block => (
            filt.terms[d].clone(),
            d.checked_sub(1).map_or(zero, |e| filt.terms[e].clone()),
        ),
        PieceTarget::Ideal => {
            let ideal = ideal_c_minus_alpha(alg, layout, block)?.induced(&filt)?;
            (
                ideal.terms[d].clone(),
                d.checked_sub(1).map_or(zero, |e| ideal.terms[e].clone()),
            )
        }
        PieceTarget::Quotient => {
            let ideal = ideal_c_minus_alpha(alg, layout, block)?;
            let q = ideal.quotient(&filt)?;
            let den = d.checked_sub(1).map_or(ideal.subspace.clone(), |e| q.terms[e].clone());
            (q.terms[d].clone(), den)
        }
    };
    let ambient = adjoint_on(alg, &num)?;
    let den_coords: Vec<Vec<F::Elem>> = den
        .basis_vectors()
        .iter()
        .map(|v| {
            num.coordinates(v)
                .ok_or_else(|| Error::DimensionMismatch("filtration is not increasing".into()))
        })
        .collect::<Result<_>>()?;
    let den_sub = Subspace::span(alg.field().clone(), num.dim(), den_coords);
    let full = Subspace::full(alg.field().clone(), num.dim());
    ambient.subquotient(&full, &den_sub)
}

/// Lie-algebra composition factors of the projective cover `P_{0,λ}`:
/// `L_λ` and `L_{p-2-λ}` twice each, or the Steinberg module once.
pub fn projective_cover_tally(p: u32, lambda: u32) -> CompositionTally {
    let mut t = CompositionTally::new();
    if lambda == p - 1 {
        t.insert(lambda, 1);
    } else {
        *t.entry(lambda).or_insert(0) += 2;
        *t.entry(p - 2 - lambda).or_insert(0) += 2;
    }
    t
}

fn merge(into: &mut CompositionTally, from: &CompositionTally) {
    for (&l, &m) in from {
        *into.entry(l).or_insert(0) += m;
    }
}

/// Predicted tally for the adjoint action on `A_α`:
/// `⊕_{i ≤ (p-1)/2} P_{0,2i}` for `α = 0`; for `ω > 0` the quotient
/// `⊕_{0 ≤ i ≤ (p-1)/2} P_{0,2i} ⊕ ⊕_{p ≤ i < p+ω} L_{3p-2i-2}^2` together
/// with the ideal `⊕_{ω ≤ i ≤ (p-1)/2} P_{0,2i} ⊕ ⊕_{p-ω < i ≤ p} L_{2p-2i}^2`.
pub fn expected_adjoint_tally(p: u32, omega: u32) -> CompositionTally {
    let mut t = CompositionTally::new();
    let half = (p - 1) / 2;
    for i in 0..=half {
        merge(&mut t, &projective_cover_tally(p, 2 * i));
    }
    if omega == 0 {
        return t;
    }
    for i in p..p + omega {
        *t.entry(3 * p - 2 * i - 2).or_insert(0) += 2;
    }
    for i in omega..=half {
        merge(&mut t, &projective_cover_tally(p, 2 * i));
    }
    for i in (p - omega + 1)..=p {
        *t.entry(2 * p - 2 * i).or_insert(0) += 2;
    }
    t
}
