use std::sync::Arc;

use proptest::prelude::*;
use sl2_blocks::blocks::{self, center_relation};
use sl2_blocks::ffield::artin_schreier_field;
use sl2_blocks::filt::filtration;
use sl2_blocks::repdec::{baby_verma, hom_dim, hom_from_simple_dim, simple_module, simple_modules};
use sl2_blocks::{
    AlgElem, Character, Field, FiltrationKind, Matrix, ModuleAction, PrimeField, PrimeP, ReducedEnveloping, Subspace,
    WeightLayout,
};

fn pp(p: u32) -> PrimeP {
    PrimeP::new(p).unwrap()
}

fn chi_of(tag: u8) -> Character {
    match tag % 3 {
        0 => Character::Zero,
        1 => Character::NilpotentE,
        _ => Character::Regular(1),
    }
}

fn elem<F: Field>(alg: &ReducedEnveloping<F>, raw: &[u8]) -> AlgElem<F> {
    let f = alg.field();
    let coeffs = (0..alg.dim())
        .map(|i| f.from_int(i64::from(raw[i % raw.len()]) * (i as i64 + 1)))
        .collect();
    alg.element(coeffs).unwrap()
}

fn sparse<F: Field>(alg: &ReducedEnveloping<F>, raw: &[u8]) -> AlgElem<F> {
    // a few monomials keep products cheap while touching every generator
    let f = alg.field();
    let mut v = vec![f.zero(); alg.dim()];
    for chunk in raw.chunks(2) {
        let idx = usize::from(chunk[0]) * 7 % alg.dim();
        v[idx] = f.add(v[idx], f.from_int(i64::from(*chunk.get(1).unwrap_or(&1))));
    }
    alg.element(v).unwrap()
}

fn modules<F: Field>(field: &F, chi: Character) -> Vec<ModuleAction<F>> {
    let mut out: Vec<ModuleAction<F>> = simple_modules(field, chi)
        .unwrap()
        .into_iter()
        .map(|(_, m)| m)
        .collect();
    if chi == Character::Zero {
        // a non-simple baby Verma as well
        out.push(baby_verma(field, chi, field.zero()).unwrap());
    }
    out
}

fn representation_is_multiplicative<F: Field>(field: F, chi: Character, a: &[u8], b: &[u8]) {
    let alg = ReducedEnveloping::new(field.clone(), chi).unwrap();
    let p = alg.p();
    let u = elem(&alg, a);
    let v = sparse(&alg, b);
    let uv = alg.mul(&u, &v).unwrap();
    for m in modules(&field, chi) {
        let ru = m.represent(p, u.coeffs()).unwrap();
        let rv = m.represent(p, v.coeffs()).unwrap();
        let ruv = m.represent(p, uv.coeffs()).unwrap();
        assert_eq!(ru.mul(&rv).unwrap(), ruv);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modules_respect_products(
        p in prop::sample::select(vec![3u32, 5]),
        tag in 0u8..3,
        a in prop::collection::vec(any::<u8>(), 1..40),
        b in prop::collection::vec(any::<u8>(), 2..8),
    ) {
        let chi = chi_of(tag);
        match chi {
            Character::Regular(r) => representation_is_multiplicative(artin_schreier_field(pp(p), r).unwrap(), chi, &a, &b),
            _ => representation_is_multiplicative(PrimeField::new(pp(p)), chi, &a, &b),
        }
    }

    #[test]
    fn multiplication_is_associative(
        p in prop::sample::select(vec![3u32, 5]),
        tag in 0u8..2,
        a in prop::collection::vec(any::<u8>(), 2..10),
        b in prop::collection::vec(any::<u8>(), 2..10),
        c in prop::collection::vec(any::<u8>(), 1..40),
    ) {
        let alg = ReducedEnveloping::new(PrimeField::new(pp(p)), chi_of(tag)).unwrap();
        let (u, v, w) = (sparse(&alg, &a), sparse(&alg, &b), elem(&alg, &c));
        let left = alg.mul(&alg.mul(&u, &v).unwrap(), &w).unwrap();
        let right = alg.mul(&u, &alg.mul(&v, &w).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn casimir_is_central(
        p in prop::sample::select(vec![3u32, 5, 7]),
        tag in 0u8..2,
        a in prop::collection::vec(any::<u8>(), 1..40),
    ) {
        let alg = ReducedEnveloping::new(PrimeField::new(pp(p)), chi_of(tag)).unwrap();
        let u = elem(&alg, &a);
        let c = alg.casimir();
        prop_assert_eq!(alg.mul(&c, &u).unwrap(), alg.mul(&u, &c).unwrap());
        prop_assert_eq!(alg.casimir_times(u.coeffs()), alg.mul(&c, &u).unwrap().into_coeffs());
    }

    #[test]
    fn block_projections_decompose(
        p in prop::sample::select(vec![3u32, 5]),
        tag in 0u8..3,
        a in prop::collection::vec(any::<u8>(), 1..40),
    ) {
        let chi = chi_of(tag);
        match chi {
            Character::Regular(r) => projections(artin_schreier_field(pp(p), r).unwrap(), chi, &a),
            _ => projections(PrimeField::new(pp(p)), chi, &a),
        }
    }

    #[test]
    fn subspace_dimension_formula(
        n in 2usize..9,
        xs in prop::collection::vec(prop::collection::vec(0i64..7, 9), 0..6),
        ys in prop::collection::vec(prop::collection::vec(0i64..7, 9), 0..6),
    ) {
        let f = PrimeField::new(pp(7));
        let span = |vs: &[Vec<i64>]| {
            Subspace::span(f, n, vs.iter().map(|v| v[..n].iter().map(|&x| f.from_int(x)).collect()))
        };
        let (u, v) = (span(&xs), span(&ys));
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&s) && v.is_subspace_of(&s));
        let rows: Vec<Vec<u32>> = u.basis().to_vec();
        let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(f, n, &rows).unwrap().rank() };
        prop_assert_eq!(rank, u.dim());
    }

    #[test]
    fn intertwiners_from_simples_agree(
        lambda in 0u32..5,
        mu in 0u32..5,
        nu in 0u32..5,
    ) {
        let f = PrimeField::new(pp(5));
        let l = simple_module(&f, lambda).unwrap();
        let verma = baby_verma(&f, Character::Zero, f.from_int(i64::from(mu))).unwrap();
        prop_assert_eq!(hom_dim(&l, &verma).unwrap(), hom_from_simple_dim(lambda, &verma).unwrap());
        let other = simple_module(&f, nu).unwrap();
        prop_assert_eq!(hom_dim(&l, &other).unwrap(), usize::from(lambda == nu));
    }
}

fn projections<F: Field>(field: F, chi: Character, raw: &[u8]) {
    let alg = ReducedEnveloping::new(field, chi).unwrap();
    let layout = Arc::new(WeightLayout::new(&alg));
    let bs = blocks::blocks(&alg, &layout).unwrap();
    let x = elem(&alg, raw);
    let mut total = alg.zero();
    for b in &bs {
        let px = alg.mul(&b.idempotent, &x).unwrap();
        assert!(b.subspace.contains(px.coeffs()));
        assert_eq!(alg.mul(&x, &b.idempotent).unwrap(), px);
        assert_eq!(alg.mul(&b.idempotent, &px).unwrap(), px);
        total = alg.add(&total, &px).unwrap();
    }
    assert_eq!(total, x);
    // every label is a root of the center relation
    let rel = center_relation(&alg);
    for b in &bs {
        assert!(rel.roots_with_multiplicity().iter().any(|&(r, _)| r == b.label.alpha));
    }
}

#[test]
fn filtrations_are_increasing_and_exhaustive() {
    for p in [3u32, 5, 7] {
        for chi in [Character::Zero, Character::NilpotentE] {
            let alg = ReducedEnveloping::new(PrimeField::new(pp(p)), chi).unwrap();
            let layout = Arc::new(WeightLayout::new(&alg));
            for b in blocks::blocks(&alg, &layout).unwrap() {
                let pf = filtration(&alg, &layout, &b, FiltrationKind::Pf).unwrap();
                let int = filtration(&alg, &layout, &b, FiltrationKind::Int).unwrap();
                let sh = filtration(&alg, &layout, &b, FiltrationKind::Sh).unwrap();
                for f in [&pf, &int, &sh] {
                    for w in f.terms.windows(2) {
                        assert!(w[0].is_subspace_of(&w[1]));
                    }
                    assert_eq!(f.terms.last().unwrap(), &b.subspace);
                }
                // V_d ∩ A is fixed by π, so it sits inside π V_d
                for (i, q) in int.terms.iter().zip(&pf.terms) {
                    assert!(i.is_subspace_of(q));
                }
                // π_α V_0 starts both the pushforward and shifted filtrations
                assert_eq!(pf.terms[0], sh.terms[0]);
            }
        }
    }
}

#[test]
fn jordan_types_partition_the_dimension() {
    let f = PrimeField::new(pp(7));
    for lambda in 0..7u32 {
        let m = simple_module(&f, lambda).unwrap();
        let parts = m.e.jordan_type_nilpotent().unwrap();
        assert_eq!(parts, vec![lambda as usize + 1]);
    }
    let v = baby_verma(&f, Character::Zero, f.from_int(3)).unwrap();
    assert_eq!(v.e.jordan_type_nilpotent().unwrap().iter().sum::<usize>(), 7);
}
