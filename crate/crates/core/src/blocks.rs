//! Central idempotents, block subalgebras and their coinvariant algebras.
//!
//! The Casimir `c` generates the image of the center. For `χ ∈ {0, e}` it
//! satisfies `Φ(c) = c^p - 2c^{(p+1)/2} + c = c (c - α_1)^2 ⋯`, the product
//! running over the nonzero squares `α`, and for `χ = a h/2` it satisfies
//! `Φ(c) - a^2`, which has `p` simple roots over `F_{p^p}`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffield::{omega_of_alpha, Field, Poly};
use crate::linalg::Subspace;
use crate::pbw::{AlgElem, Character, Generator, ReducedEnveloping};
use crate::weights::{GradedSubspace, WeightLayout};

/// Identifies a block by the Casimir scalar `α` on its simple modules.
#[derive(Clone, PartialEq, Eq)]
pub struct BlockLabel<F: Field> {
    pub chi: Character,
    pub alpha: F::Elem,
    /// Square root of `α` in `0..=(p-1)/2`, for nilpotent characters.
    pub omega: Option<u32>,
}

impl<F: Field> fmt::Debug for BlockLabel<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.omega {
            Some(w) => write!(f, "A[ω={w}, α={:?}]", self.alpha),
            None => write!(f, "A[α={:?}]", self.alpha),
        }
    }
}

/// `Φ(c)` for `χ ∈ {0, e}`, `Φ(c) - a^2` for `χ = a h/2`.
pub fn center_relation<F: Field>(alg: &ReducedEnveloping<F>) -> Poly<F> {
    let f = alg.field();
    let p = alg.p();
    let mut coeffs = vec![f.zero(); p + 1];
    coeffs[p] = f.one();
    coeffs[p.div_ceil(2)] = f.from_int(-2);
    coeffs[1] = f.one();
    if let Character::Regular(a) = alg.character() {
        let a = f.from_int(i64::from(a));
        coeffs[0] = f.neg(f.mul(a, a));
    }
    Poly::new(f.clone(), coeffs)
}

/// Labels in canonical order: by `ω = 0, 1, …, (p-1)/2` for nilpotent
/// characters, by coefficient vector of `α` for regular ones.
pub fn block_labels<F: Field>(alg: &ReducedEnveloping<F>) -> Result<Vec<BlockLabel<F>>> {
    let f = alg.field();
    let chi = alg.character();
    if chi.is_nilpotent() {
        return Ok((0..=(alg.p() as u32 - 1) / 2)
            .map(|w| BlockLabel {
                chi,
                alpha: f.from_int(i64::from(w * w)),
                omega: Some(w),
            })
            .collect());
    }
    let roots = center_relation(alg).roots_with_multiplicity();
    if roots.len() != alg.p() || roots.iter().any(|&(_, m)| m != 1) {
        return Err(Error::Unsupported(format!(
            "the center relation does not split into {} simple roots over {:?}",
            alg.p(),
            f
        )));
    }
    let mut alphas: Vec<F::Elem> = roots.into_iter().map(|(r, _)| r).collect();
    alphas.sort();
    Ok(alphas
        .into_iter()
        .map(|alpha| BlockLabel {
            chi,
            alpha,
            omega: None,
        })
        .collect())
}

/// The label with the given `ω` (nilpotent characters only).
pub fn label_for_omega<F: Field>(alg: &ReducedEnveloping<F>, omega: u32) -> Result<BlockLabel<F>> {
    block_labels(alg)?
        .into_iter()
        .find(|l| l.omega == Some(omega))
        .ok_or(Error::InvalidBlockLabel)
}

/// The label with the given `α`.
pub fn label_for_alpha<F: Field>(alg: &ReducedEnveloping<F>, alpha: F::Elem) -> Result<BlockLabel<F>> {
    block_labels(alg)?
        .into_iter()
        .find(|l| l.alpha == alpha)
        .ok_or(Error::InvalidBlockLabel)
}

fn check_label<F: Field>(alg: &ReducedEnveloping<F>, label: &BlockLabel<F>) -> Result<()> {
    if label.chi != alg.character() {
        return Err(Error::CharacterMismatch);
    }
    if !block_labels(alg)?.contains(label) {
        return Err(Error::InvalidBlockLabel);
    }
    Ok(())
}

/// The idempotent as a polynomial in `c`:
/// `Φ/c` for `α = 0`, `2(c + α) Φ / (c - α)^2` for other nilpotent blocks and
/// `κ_α Φ_a / (c - α)` with `κ_α` normalizing the value at `α` to 1 for
/// regular blocks.
pub fn idempotent_poly<F: Field>(alg: &ReducedEnveloping<F>, label: &BlockLabel<F>) -> Result<Poly<F>> {
    check_label(alg, label)?;
    let f = alg.field().clone();
    let phi = center_relation(alg);
    let alpha = label.alpha;
    let lin = Poly::linear(f.clone(), alpha);
    if label.chi.is_nilpotent() {
        if f.is_zero(alpha) {
            return phi.exact_divide(&lin);
        }
        let quotient = phi.exact_divide(&lin.mul(&lin))?;
        let plus = Poly::new(f.clone(), vec![alpha, f.one()]);
        return Ok(quotient.mul(&plus).scale(f.from_int(2)));
    }
    let quotient = phi.exact_divide(&lin)?;
    let kappa = f.inv(quotient.evaluate(alpha)).ok_or(Error::NotDivisible)?;
    Ok(quotient.scale(kappa))
}

pub fn idempotent<F: Field>(alg: &ReducedEnveloping<F>, label: &BlockLabel<F>) -> Result<AlgElem<F>> {
    Ok(alg.eval_center_poly(&idempotent_poly(alg, label)?))
}

/// Span of `z U_χ = { z m }` for a central element `z`, split by weight.
pub fn central_ideal<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    z: &AlgElem<F>,
) -> Result<GradedSubspace<F>> {
    let mut span = GradedSubspace::zero(alg.field().clone(), layout.clone());
    // m z = z m since z is central
    for v in alg.monomials_times(z.coeffs()) {
        span.insert(&v)?;
    }
    Ok(span)
}

/// A block `A_α = π_α U_χ`.
#[derive(Clone)]
pub struct Block<F: Field> {
    pub label: BlockLabel<F>,
    pub polynomial: Poly<F>,
    pub idempotent: AlgElem<F>,
    pub subspace: GradedSubspace<F>,
}

impl<F: Field> fmt::Debug for Block<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Block({:?}, dim {})", self.label, self.dim())
    }
}

impl<F: Field> Block<F> {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }
}

pub fn block<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    label: &BlockLabel<F>,
) -> Result<Block<F>> {
    let polynomial = idempotent_poly(alg, label)?;
    let idempotent = alg.eval_center_poly(&polynomial);
    let subspace = central_ideal(alg, layout, &idempotent)?;
    Ok(Block {
        label: label.clone(),
        polynomial,
        idempotent,
        subspace,
    })
}

/// All blocks in label order.
pub fn blocks<F: Field>(alg: &ReducedEnveloping<F>, layout: &Arc<WeightLayout>) -> Result<Vec<Block<F>>> {
    block_labels(alg)?.iter().map(|l| block(alg, layout, l)).collect()
}

/// Outcome of checking the defining properties of a complete set of
/// central idempotents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdempotentSystemCheck {
    pub idempotent: bool,
    pub orthogonal: bool,
    pub sum_is_one: bool,
    pub central: bool,
}

impl IdempotentSystemCheck {
    pub fn all(self) -> bool {
        self.idempotent && self.orthogonal && self.sum_is_one && self.central
    }
}

pub fn check_idempotent_system<F: Field>(
    alg: &ReducedEnveloping<F>,
    idempotents: &[AlgElem<F>],
) -> Result<IdempotentSystemCheck> {
    let mut out = IdempotentSystemCheck {
        idempotent: true,
        orthogonal: true,
        sum_is_one: true,
        central: true,
    };
    let mut total = alg.zero();
    for (i, a) in idempotents.iter().enumerate() {
        out.idempotent &= alg.mul(a, a)? == *a;
        for b in &idempotents[i + 1..] {
            out.orthogonal &= alg.is_zero(&alg.mul(a, b)?) && alg.is_zero(&alg.mul(b, a)?);
        }
        for g in Generator::ALL {
            out.central &= alg.ad_apply(g, a.coeffs()).iter().all(|&x| alg.field().is_zero(x));
        }
        total = alg.add(&total, a)?;
    }
    out.sum_is_one = total == alg.one();
    Ok(out)
}

/// The coinvariant algebra `π_α k[c]` of a block.
#[derive(Clone)]
pub struct Coinvariants<F: Field> {
    pub label: BlockLabel<F>,
    pub basis: Subspace<F>,
    /// `π_α (c - α)^2 = 0`
    pub square_vanishes: bool,
    /// `π_α (c - α) ≠ 0`
    pub first_power_nonzero: bool,
}

impl<F: Field> Coinvariants<F> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// The nilpotency pattern matches the dimension: `(c - α)` vanishes on
    /// 1-dimensional coinvariants and squares to zero on 2-dimensional ones.
    pub fn witness_holds(&self) -> bool {
        match self.dim() {
            1 => self.square_vanishes && !self.first_power_nonzero,
            2 => self.square_vanishes && self.first_power_nonzero,
            _ => false,
        }
    }
}

/// Expected dimension: 1 for `α = 0` and for regular characters, 2 otherwise.
pub fn expected_coinvariant_dim<F: Field>(label: &BlockLabel<F>) -> usize {
    match label.omega {
        Some(w) if w > 0 => 2,
        _ => 1,
    }
}

pub fn coinvariants<F: Field>(alg: &ReducedEnveloping<F>, block: &Block<F>) -> Result<Coinvariants<F>> {
    let f = alg.field();
    let mut basis = Subspace::zero(f.clone(), alg.dim());
    let mut power = block.idempotent.coeffs().to_vec();
    while basis.insert(power.clone()) {
        power = alg.casimir_times(&power);
    }
    let shifted = pi_c_minus_alpha(alg, block);
    let first_power_nonzero = !alg.is_zero(&shifted);
    let square = alg.casimir_times(shifted.coeffs());
    let square_vanishes = square
        .iter()
        .zip(shifted.coeffs())
        .all(|(&a, &b)| f.is_zero(f.sub(a, f.mul(block.label.alpha, b))));
    Ok(Coinvariants {
        label: block.label.clone(),
        basis,
        square_vanishes,
        first_power_nonzero,
    })
}

/// `π_α (c - α)`
pub fn pi_c_minus_alpha<F: Field>(alg: &ReducedEnveloping<F>, block: &Block<F>) -> AlgElem<F> {
    let f = alg.field();
    let pi = block.idempotent.coeffs();
    let cpi = alg.casimir_times(pi);
    let coeffs = cpi
        .iter()
        .zip(pi)
        .map(|(&a, &b)| f.sub(a, f.mul(block.label.alpha, b)))
        .collect();
    alg.element(coeffs).expect("same length")
}

/// Casimir scalar `(λ + 1)^2` on the simple module of highest weight `λ`.
pub fn weight_to_alpha<F: Field>(field: &F, lambda: u32) -> F::Elem {
    let x = field.from_int(i64::from(lambda) + 1);
    field.mul(x, x)
}

/// `ω` of the block containing the simple module `L_λ` (`χ = 0`).
pub fn weight_to_omega<F: Field>(field: &F, lambda: u32) -> Result<u32> {
    omega_of_alpha(field, weight_to_alpha(field, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::{artin_schreier_field, ArtinSchreierField, PrimeField, PrimeP};

    fn alg(p: u32, chi: Character) -> (ReducedEnveloping<PrimeField>, Arc<WeightLayout>) {
        let a = ReducedEnveloping::new(PrimeField::new(PrimeP::new(p).unwrap()), chi).unwrap();
        let l = Arc::new(WeightLayout::new(&a));
        (a, l)
    }

    fn regular(p: u32, a: u32) -> (ReducedEnveloping<ArtinSchreierField>, Arc<WeightLayout>) {
        let k = artin_schreier_field(PrimeP::new(p).unwrap(), a).unwrap();
        let u = ReducedEnveloping::new(k, Character::Regular(a)).unwrap();
        let l = Arc::new(WeightLayout::new(&u));
        (u, l)
    }

    #[test]
    fn center_relations() {
        let (u, _) = alg(5, Character::Zero);
        assert_eq!(center_relation(&u).coeffs(), &[0, 1, 0, 3, 0, 1]);
        let (u, _) = alg(5, Character::NilpotentE);
        assert_eq!(center_relation(&u).coeffs(), &[0, 1, 0, 3, 0, 1]);
        let (u, _) = alg(3, Character::Regular(1));
        assert_eq!(center_relation(&u).coeffs(), &[2, 1, 1, 1]);
        for chi in [Character::Zero, Character::NilpotentE, Character::Regular(2)] {
            let (u, _) = alg(5, chi);
            assert!(u.is_zero(&u.eval_center_poly(&center_relation(&u))));
        }
    }

    #[test]
    fn labels() {
        let (u, _) = alg(5, Character::Zero);
        let ls = block_labels(&u).unwrap();
        let pairs: Vec<_> = ls.iter().map(|l| (l.omega.unwrap(), l.alpha)).collect();
        assert_eq!(pairs, vec![(0, 0), (1, 1), (2, 4)]);
        let (u, _) = alg(3, Character::Zero);
        assert_eq!(block_labels(&u).unwrap().len(), 2);
        let (u, _) = regular(3, 1);
        let ls = block_labels(&u).unwrap();
        assert_eq!(ls.len(), 3);
        let k = u.field();
        let t = k.generator();
        for i in 0..3 {
            let r = k.add(t, k.embed(i));
            assert!(ls.iter().any(|l| l.alpha == k.mul(r, r)));
        }
    }

    #[test]
    fn regular_over_prime_field_is_unsupported() {
        let (u, _) = alg(3, Character::Regular(1));
        assert!(matches!(block_labels(&u), Err(Error::Unsupported(_))));
    }

    #[test]
    fn steinberg_idempotent_polynomial() {
        let (u, _) = alg(5, Character::Zero);
        let l = label_for_omega(&u, 0).unwrap();
        let f = *u.field();
        let expected = Poly::linear(f, 1).pow(2).mul(&Poly::linear(f, 4).pow(2));
        assert_eq!(idempotent_poly(&u, &l).unwrap(), expected);
    }

    #[test]
    fn idempotent_system_and_dims() {
        for p in [3, 5, 7] {
            for chi in [Character::Zero, Character::NilpotentE] {
                let (u, layout) = alg(p, chi);
                let bs = blocks(&u, &layout).unwrap();
                let pis: Vec<_> = bs.iter().map(|b| b.idempotent.clone()).collect();
                assert!(check_idempotent_system(&u, &pis).unwrap().all());
                let p = p as usize;
                let dims: Vec<_> = bs.iter().map(Block::dim).collect();
                let mut expected = vec![2 * p * p; p.div_ceil(2)];
                expected[0] = p * p;
                assert_eq!(dims, expected);
            }
        }
    }

    #[test]
    fn block_dims_p5() {
        let (u, layout) = alg(5, Character::Zero);
        let dims: Vec<_> = blocks(&u, &layout).unwrap().iter().map(Block::dim).collect();
        assert_eq!(dims, vec![25, 50, 50]);
    }

    #[test]
    fn blocks_are_ad_stable() {
        let (u, layout) = alg(5, Character::Zero);
        for b in blocks(&u, &layout).unwrap() {
            for v in b.subspace.basis_vectors() {
                for g in Generator::ALL {
                    assert!(b.subspace.contains(&u.ad_apply(g, &v)));
                }
            }
        }
    }

    #[test]
    fn coinvariant_dims() {
        let (u, layout) = alg(5, Character::Zero);
        for b in blocks(&u, &layout).unwrap() {
            let c = coinvariants(&u, &b).unwrap();
            assert_eq!(c.dim(), expected_coinvariant_dim(&b.label));
            assert!(c.witness_holds());
        }
        let (u, layout) = regular(3, 1);
        let bs = blocks(&u, &layout).unwrap();
        for b in &bs {
            assert_eq!(b.dim(), 9);
            let c = coinvariants(&u, b).unwrap();
            assert_eq!(c.dim(), 1);
            assert!(c.witness_holds());
        }
        let pis: Vec<_> = bs.iter().map(|b| b.idempotent.clone()).collect();
        assert!(check_idempotent_system(&u, &pis).unwrap().all());
    }

    #[test]
    fn weight_to_alpha_pairs_linked_weights() {
        let f = PrimeField::new(PrimeP::new(5).unwrap());
        assert_eq!(weight_to_alpha(&f, 4), 0);
        assert_eq!(weight_to_alpha(&f, 0), 1);
        assert_eq!(weight_to_alpha(&f, 3), 1);
        assert_eq!(weight_to_alpha(&f, 1), 4);
        assert_eq!(weight_to_alpha(&f, 2), 4);
        assert_eq!(weight_to_omega(&f, 2).unwrap(), 2);
    }

    #[test]
    fn corrupted_system_is_detected() {
        let (u, layout) = alg(3, Character::Zero);
        let bs = blocks(&u, &layout).unwrap();
        let mut pis: Vec<_> = bs.iter().map(|b| b.idempotent.clone()).collect();
        pis[0] = u.add(&pis[0], &u.generator(Generator::E)).unwrap();
        let check = check_idempotent_system(&u, &pis).unwrap();
        assert!(!check.central && !check.sum_is_one);
    }
}
