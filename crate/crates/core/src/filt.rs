//! Filtrations of a block `A_α` induced by the PBW filtration, the trace-like
//! form `b(u, v) = φ0(uv)` and the ideal `⟨c - α⟩`.
//!
//! * pushforward: `V_i^pf = π_α V_i`
//! * intersection: `V_i^int = V_i ∩ A_α`
//! * shifted: `V_0^sh = k π_α`, `V_i^sh = π_α V_i + V_{i-1}^sh + c V_{i-1}^sh`,
//!   so the Casimir enters in degree 1.
//!
//! All terms are kept as weight-graded subspaces; every step preserves the
//! `ad(h)`-weight grading because `π_α` and `c` have weight zero.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::blocks::{central_ideal, pi_c_minus_alpha, Block};
use crate::error::{Error, Result};
use crate::ffield::Field;
use crate::linalg::Matrix;
use crate::pbw::{Generator, ReducedEnveloping};
use crate::weights::{gram_respects_weights, GradedSubspace, WeightLayout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiltrationKind {
    Pf,
    Int,
    Sh,
}

impl FiltrationKind {
    pub const ALL: [FiltrationKind; 3] = [FiltrationKind::Pf, FiltrationKind::Int, FiltrationKind::Sh];

    pub fn as_str(self) -> &'static str {
        match self {
            FiltrationKind::Pf => "pf",
            FiltrationKind::Int => "int",
            FiltrationKind::Sh => "sh",
        }
    }
}

impl fmt::Display for FiltrationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FiltrationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pf" => Ok(FiltrationKind::Pf),
            "int" => Ok(FiltrationKind::Int),
            "sh" => Ok(FiltrationKind::Sh),
            other => Err(Error::Unsupported(format!("unknown filtration kind {other:?}"))),
        }
    }
}

/// Cumulative dimensions `dim V_i^kind` for `i = 0..=3(p-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationTable {
    pub kind: FiltrationKind,
    pub cumulative: Vec<usize>,
}

impl FiltrationTable {
    /// First differences, starting with `cumulative[0]`.
    pub fn graded(&self) -> Vec<usize> {
        first_differences(&self.cumulative)
    }

    /// Smallest degree at which the filtration reaches its final value.
    pub fn stabilization_degree(&self) -> usize {
        let last = *self.cumulative.last().unwrap_or(&0);
        self.cumulative.iter().position(|&d| d == last).unwrap_or(0)
    }
}

pub fn first_differences(cumulative: &[usize]) -> Vec<usize> {
    let mut prev = 0;
    cumulative
        .iter()
        .map(|&d| {
            let g = d - prev;
            prev = d;
            g
        })
        .collect()
}

/// The terms of a filtration, indexed by degree `0..=3(p-1)`.
#[derive(Clone, Debug)]
pub struct Filtration<F: Field> {
    pub kind: FiltrationKind,
    pub terms: Vec<GradedSubspace<F>>,
}

impl<F: Field> Filtration<F> {
    pub fn table(&self) -> FiltrationTable {
        FiltrationTable {
            kind: self.kind,
            cumulative: self.terms.iter().map(GradedSubspace::dim).collect(),
        }
    }

    /// Weight multiplicities of `V_d / V_{d-1}`, indexed by weight.
    pub fn graded_weights(&self, d: usize) -> Vec<usize> {
        weight_difference(&self.terms[d], d.checked_sub(1).map(|e| &self.terms[e]))
    }
}

fn weight_difference<F: Field>(num: &GradedSubspace<F>, den: Option<&GradedSubspace<F>>) -> Vec<usize> {
    let top = num.weight_dims();
    match den {
        None => top,
        Some(d) => top.iter().zip(d.weight_dims()).map(|(a, b)| a - b).collect(),
    }
}

/// Basis indices grouped by PBW degree `0..=3(p-1)`.
fn monomials_by_degree<F: Field>(alg: &ReducedEnveloping<F>) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); alg.top_degree() + 1];
    for m in 0..alg.dim() {
        out[alg.monomial_at(m).degree()].push(m);
    }
    out
}

pub fn filtration<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    block: &Block<F>,
    kind: FiltrationKind,
) -> Result<Filtration<F>> {
    let field = alg.field().clone();
    let by_degree = monomials_by_degree(alg);
    let mut terms = Vec::with_capacity(by_degree.len());
    match kind {
        FiltrationKind::Pf => {
            let images = alg.monomials_times(block.idempotent.coeffs());
            let mut cur = GradedSubspace::zero(field, layout.clone());
            for ms in &by_degree {
                for &m in ms {
                    cur.insert(&images[m])?;
                }
                terms.push(cur.clone());
            }
        }
        FiltrationKind::Int => {
            for d in 0..by_degree.len() {
                let v = GradedSubspace::pbw(alg, layout.clone(), d);
                terms.push(v.intersect(&block.subspace)?);
            }
        }
        FiltrationKind::Sh => {
            let images = alg.monomials_times(block.idempotent.coeffs());
            let mut cur = GradedSubspace::zero(field, layout.clone());
            let mut fresh = Vec::new();
            for (d, ms) in by_degree.iter().enumerate() {
                let mut candidates: Vec<Vec<F::Elem>> = ms.iter().map(|&m| images[m].clone()).collect();
                if d > 0 {
                    // c V_{d-2} already lies in V_{d-1}, so only the vectors
                    // added in the previous step need to be multiplied by c.
                    candidates.extend(fresh.iter().map(|v: &Vec<F::Elem>| alg.casimir_times(v)));
                }
                fresh.clear();
                for v in candidates {
                    if cur.insert(&v)? {
                        fresh.push(v);
                    }
                }
                terms.push(cur.clone());
            }
        }
    }
    Ok(Filtration { kind, terms })
}

/// Gram matrix of `b(u, v) = φ0(uv)` on the PBW basis, where `φ0` picks the
/// coefficient of `e^{p-1} f^{p-1} h^{p-1}`.
#[derive(Clone, Debug)]
pub struct GramForm<F: Field> {
    pub matrix: Matrix<F>,
}

/// Row `u = e^i f^j h^k` is `(L_h^T)^k (L_f^T)^j (L_e^T)^i φ0`, because
/// `φ0(e^i f^j h^k v) = ((L_e^i L_f^j L_h^k)^T φ0)(v)`.
pub fn gram_form<F: Field>(alg: &ReducedEnveloping<F>) -> GramForm<F> {
    let f = alg.field();
    let p = alg.p();
    let n = alg.dim();
    let mut matrix = Matrix::zeros(f.clone(), n, n);
    let mut phi = vec![f.zero(); n];
    phi[alg.top_index()] = f.one();
    let mut e_row = phi;
    for i in 0..p {
        let mut f_row = e_row.clone();
        for j in 0..p {
            let mut h_row = f_row.clone();
            for k in 0..p {
                let idx = alg.index(crate::pbw::Monomial { e: i, f: j, h: k });
                matrix.row_mut(idx).copy_from_slice(&h_row);
                if k + 1 < p {
                    h_row = alg.left_gen_transpose(Generator::H, &h_row);
                }
            }
            if j + 1 < p {
                f_row = alg.left_gen_transpose(Generator::F, &f_row);
            }
        }
        if i + 1 < p {
            e_row = alg.left_gen_transpose(Generator::E, &e_row);
        }
    }
    GramForm { matrix }
}

impl<F: Field> GramForm<F> {
    /// `b(u, v)` for coefficient vectors.
    pub fn eval(&self, u: &[F::Elem], v: &[F::Elem]) -> F::Elem {
        let f = self.matrix.field();
        let mut acc = f.zero();
        for (x, &ux) in u.iter().enumerate() {
            if f.is_zero(ux) {
                continue;
            }
            let row = self.matrix.row(x);
            for (&g, &vy) in row.iter().zip(v) {
                acc = f.mul_add(acc, f.mul(ux, g), vy);
            }
        }
        acc
    }

    /// Rank, computed weight block by weight block; falls back to a dense
    /// elimination if the form does not pair opposite weights.
    pub fn rank(&self, layout: &WeightLayout) -> usize {
        if !gram_respects_weights(&self.matrix, layout) {
            return self.matrix.rank();
        }
        let f = self.matrix.field();
        (0..layout.p())
            .map(|w| {
                let rows = layout.class(w);
                let cols = layout.class(layout.dual_weight(w));
                let mut m = Matrix::zeros(f.clone(), rows.len(), cols.len());
                for (r, &x) in rows.iter().enumerate() {
                    for (c, &y) in cols.iter().enumerate() {
                        m[(r, c)] = self.matrix[(x, y)];
                    }
                }
                m.rank()
            })
            .sum()
    }
}

/// Result of checking the duality between the pushforward filtration and
/// intersections with orthogonal complements, degree by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    /// `V_i^⊥ = V_{3(p-1)-i-1}` for every `i`.
    pub pbw_perp: bool,
    /// `π(V_i)^⊥ ∩ A = A ∩ V_i^⊥` for every `i`.
    pub subspace_identity: bool,
    /// `dim π(V_i) + dim (A ∩ V_i^⊥) = dim A` for every `i`.
    pub dimension_identity: bool,
    pub first_failure: Option<usize>,
    /// `dim (A ∩ V_i^⊥)` per degree.
    pub perp_dims: Vec<usize>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.pbw_perp && self.subspace_identity && self.dimension_identity
    }
}

/// `V_i^⊥` for every degree `i`, with `V_i^⊥ = V_{3(p-1)-i-1}` checked.
pub fn pbw_complements<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    gram: &GramForm<F>,
) -> Result<(Vec<GradedSubspace<F>>, bool)> {
    let top = alg.top_degree();
    let mut ok = gram_respects_weights(&gram.matrix, layout);
    let mut perps = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let perp = GradedSubspace::pbw(alg, layout.clone(), i).orth_complement(&gram.matrix)?;
        let expected = match (top - i).checked_sub(1) {
            Some(d) => GradedSubspace::pbw(alg, layout.clone(), d),
            None => GradedSubspace::zero(alg.field().clone(), layout.clone()),
        };
        ok &= perp == expected;
        perps.push(perp);
    }
    Ok((perps, ok))
}

pub fn duality_check<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    gram: &GramForm<F>,
    perps: &[GradedSubspace<F>],
    block: &Block<F>,
) -> Result<DualityReport> {
    let pf = filtration(alg, layout, block, FiltrationKind::Pf)?;
    let a = &block.subspace;
    let mut report = DualityReport {
        pbw_perp: true,
        subspace_identity: true,
        dimension_identity: true,
        first_failure: None,
        perp_dims: Vec::with_capacity(perps.len()),
    };
    for (i, (image, perp)) in pf.terms.iter().zip(perps).enumerate() {
        let left = image.orth_complement(&gram.matrix)?.intersect(a)?;
        let right = a.intersect(perp)?;
        let same = left == right;
        let dims = image.dim() + right.dim() == a.dim();
        report.subspace_identity &= same;
        report.dimension_identity &= dims;
        if !(same && dims) && report.first_failure.is_none() {
            report.first_failure = Some(i);
        }
        report.perp_dims.push(right.dim());
    }
    Ok(report)
}

/// `⟨c - α⟩ = π_α (c - α) U_χ` with its filtration data.
#[derive(Clone, Debug)]
pub struct CMinusAlphaIdeal<F: Field> {
    pub subspace: GradedSubspace<F>,
}

impl<F: Field> CMinusAlphaIdeal<F> {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// `I ∩ V_d^kind` for each `d`.
    pub fn induced(&self, filtration: &Filtration<F>) -> Result<Filtration<F>> {
        let terms = filtration
            .terms
            .iter()
            .map(|t| t.intersect(&self.subspace))
            .collect::<Result<Vec<_>>>()?;
        Ok(Filtration {
            kind: filtration.kind,
            terms,
        })
    }

    /// `V_d^kind + I` for each `d`, whose successive quotients are the graded
    /// pieces of `A_α / I`.
    pub fn quotient(&self, filtration: &Filtration<F>) -> Result<Filtration<F>> {
        let terms = filtration
            .terms
            .iter()
            .map(|t| t.sum(&self.subspace))
            .collect::<Result<Vec<_>>>()?;
        Ok(Filtration {
            kind: filtration.kind,
            terms,
        })
    }
}

pub fn ideal_c_minus_alpha<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    block: &Block<F>,
) -> Result<CMinusAlphaIdeal<F>> {
    let z = pi_c_minus_alpha(alg, block);
    Ok(CMinusAlphaIdeal {
        subspace: central_ideal(alg, layout, &z)?,
    })
}

/// Graded dimensions of `A_α / I` from a filtration of `A_α` and the induced
/// filtration of `I`: `dim gr_d A - dim gr_d I`.
pub fn quotient_graded_dims(block_graded: &[usize], ideal_graded: &[usize]) -> Vec<usize> {
    block_graded.iter().zip(ideal_graded).map(|(a, b)| a - b).collect()
}

/// `e^{p-ω} π_α (c - α) = 0`. Only meaningful for `χ = 0`, `α ≠ 0`.
pub fn nilpotency_witness<F: Field>(alg: &ReducedEnveloping<F>, block: &Block<F>) -> Result<bool> {
    let omega = block.label.omega.ok_or(Error::InvalidBlockLabel)? as usize;
    if omega == 0 {
        return Err(Error::InvalidBlockLabel);
    }
    let z = pi_c_minus_alpha(alg, block);
    let e_pow = alg.monomial(alg.p() - omega, 0, 0);
    Ok(alg.is_zero(&alg.mul(&e_pow, &z)?))
}

/// Graded dimensions of `⟨c - α⟩` under the shifted filtration predicted by
/// its decomposition: `2d - 1` for `1 <= d <= p - ω`, then `2p - 2d + 1` for
/// `p - ω < d <= p`, padded with zeros to length `3(p-1)+1`.
pub fn expected_ideal_sh_graded(p: usize, omega: usize) -> Vec<usize> {
    let mut out = vec![0; 3 * (p - 1) + 1];
    for (d, slot) in out.iter_mut().enumerate().skip(1) {
        if d <= p - omega {
            *slot = 2 * d - 1;
        } else if d <= p {
            *slot = 2 * p - 2 * d + 1;
        }
    }
    out
}

/// `v` shifted up one degree (`out[d+1] = v[d]`), keeping the length.
pub fn shift_up(v: &[usize]) -> Vec<usize> {
    let mut out = vec![0; v.len()];
    out[1..].copy_from_slice(&v[..v.len() - 1]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{blocks, label_for_omega};
    use crate::ffield::{PrimeField, PrimeP};
    use crate::pbw::Character;

    fn setup(p: u32, chi: Character) -> (ReducedEnveloping<PrimeField>, Arc<WeightLayout>, Vec<Block<PrimeField>>) {
        let alg = ReducedEnveloping::new(PrimeField::new(PrimeP::new(p).unwrap()), chi).unwrap();
        let layout = Arc::new(WeightLayout::new(&alg));
        let bs = blocks(&alg, &layout).unwrap();
        (alg, layout, bs)
    }

    fn table(
        alg: &ReducedEnveloping<PrimeField>,
        l: &Arc<WeightLayout>,
        b: &Block<PrimeField>,
        k: FiltrationKind,
    ) -> Vec<usize> {
        filtration(alg, l, b, k).unwrap().table().cumulative
    }

    #[test]
    fn pushforward_table_p5() {
        let (alg, l, bs) = setup(5, Character::Zero);
        assert_eq!(
            &table(&alg, &l, &bs[0], FiltrationKind::Pf)[..7],
            &[1, 4, 9, 16, 25, 25, 25]
        );
        assert_eq!(
            &table(&alg, &l, &bs[1], FiltrationKind::Pf)[..7],
            &[1, 4, 10, 20, 34, 49, 50]
        );
        assert_eq!(
            &table(&alg, &l, &bs[2], FiltrationKind::Pf)[..7],
            &[1, 4, 10, 20, 34, 45, 50]
        );
    }

    #[test]
    fn intersection_table_p5() {
        let (alg, l, bs) = setup(5, Character::Zero);
        assert_eq!(
            &table(&alg, &l, &bs[0], FiltrationKind::Int)[5..],
            &[0, 0, 0, 9, 16, 21, 24, 25]
        );
        assert_eq!(
            &table(&alg, &l, &bs[1], FiltrationKind::Int)[5..],
            &[0, 1, 16, 30, 40, 46, 49, 50]
        );
        assert_eq!(
            &table(&alg, &l, &bs[2], FiltrationKind::Int)[5..],
            &[0, 5, 16, 30, 40, 46, 49, 50]
        );
    }

    #[test]
    fn shifted_graded_p5() {
        let (alg, l, bs) = setup(5, Character::Zero);
        let t = filtration(&alg, &l, &bs[1], FiltrationKind::Sh).unwrap().table();
        assert_eq!(&t.graded()[..6], &[1, 4, 8, 12, 16, 9]);
        assert_eq!(t.stabilization_degree(), 5);
        // trivial coinvariants: shifted and pushforward agree
        assert_eq!(
            table(&alg, &l, &bs[0], FiltrationKind::Sh),
            table(&alg, &l, &bs[0], FiltrationKind::Pf)
        );
    }

    #[test]
    fn gram_basics() {
        let (alg, l, _) = setup(3, Character::Zero);
        let g = gram_form(&alg);
        assert_eq!(g.matrix[(alg.top_index(), 0)], 1);
        assert_eq!(g.matrix[(0, 0)], 0);
        assert_eq!(g.rank(&l), 27);
        assert_eq!(g.matrix.rank(), 27);
        // entries are products of basis monomials read at the top monomial
        for u in 0..alg.dim() {
            for v in 0..alg.dim() {
                let mut a = vec![0; 27];
                let mut b = vec![0; 27];
                a[u] = 1;
                b[v] = 1;
                assert_eq!(g.matrix[(u, v)], alg.mul_vec(&a, &b)[alg.top_index()]);
            }
        }
    }

    #[test]
    fn gram_associative_and_full_rank_p5() {
        for chi in [Character::Zero, Character::NilpotentE] {
            let (alg, l, _) = setup(5, chi);
            let g = gram_form(&alg);
            assert_eq!(g.rank(&l), 125);
            let mono = |m: usize| {
                let x = alg.monomial_at(m);
                alg.monomial(x.e, x.f, x.h)
            };
            for (u, v, w) in [(3, 17, 101), (44, 2, 90), (124, 0, 61), (7, 77, 31)] {
                let (u, v, w) = (mono(u), mono(v), mono(w));
                let uv = alg.mul(&u, &v).unwrap();
                let vw = alg.mul(&v, &w).unwrap();
                assert_eq!(g.eval(uv.coeffs(), w.coeffs()), g.eval(u.coeffs(), vw.coeffs()));
            }
        }
    }

    #[test]
    fn duality_p5() {
        for chi in [Character::Zero, Character::NilpotentE] {
            let (alg, l, bs) = setup(5, chi);
            let g = gram_form(&alg);
            let (perps, ok) = pbw_complements(&alg, &l, &g).unwrap();
            assert!(ok);
            for b in &bs {
                let r = duality_check(&alg, &l, &g, &perps, b).unwrap();
                assert!(r.holds(), "{:?}: {:?}", b.label, r);
            }
        }
    }

    #[test]
    fn duality_examples_p5() {
        let (alg, l, bs) = setup(5, Character::Zero);
        let g = gram_form(&alg);
        let (perps, _) = pbw_complements(&alg, &l, &g).unwrap();
        let r1 = duality_check(&alg, &l, &g, &perps, &bs[1]).unwrap();
        // dim π(V_5) = 49 pairs with dim V_6 ∩ A = 1
        assert_eq!(r1.perp_dims[5], 1);
        let r0 = duality_check(&alg, &l, &g, &perps, &bs[0]).unwrap();
        assert_eq!(r0.perp_dims[3], 9);
    }

    #[test]
    fn dense_complement_agrees_p3() {
        let (alg, l, bs) = setup(3, Character::Zero);
        let g = gram_form(&alg);
        for b in &bs {
            let pf = filtration(&alg, &l, b, FiltrationKind::Pf).unwrap();
            for t in &pf.terms {
                let graded = t.orth_complement(&g.matrix).unwrap().to_subspace();
                let dense = t.to_subspace().orth_complement(&g.matrix).unwrap();
                assert_eq!(graded, dense);
            }
        }
    }

    #[test]
    fn ideal_dims_and_grading_p5() {
        let (alg, l, bs) = setup(5, Character::Zero);
        assert_eq!(ideal_c_minus_alpha(&alg, &l, &bs[0]).unwrap().dim(), 0);
        for (w, b) in bs.iter().enumerate().skip(1) {
            let ideal = ideal_c_minus_alpha(&alg, &l, b).unwrap();
            assert_eq!(ideal.dim(), w * w + (5 - w) * (5 - w));
            let sh = filtration(&alg, &l, b, FiltrationKind::Sh).unwrap();
            let isg = ideal.induced(&sh).unwrap().table().graded();
            assert_eq!(isg, expected_ideal_sh_graded(5, w));
            let pf = filtration(&alg, &l, b, FiltrationKind::Pf).unwrap();
            let ipg = ideal.induced(&pf).unwrap().table().graded();
            assert_eq!(ipg, shift_up(&isg));
            assert!(nilpotency_witness(&alg, b).unwrap());
        }
        let sh = filtration(&alg, &l, &bs[2], FiltrationKind::Sh).unwrap();
        let ideal = ideal_c_minus_alpha(&alg, &l, &bs[2]).unwrap();
        assert_eq!(&ideal.induced(&sh).unwrap().table().graded()[..6], &[0, 1, 3, 5, 3, 1]);
    }

    #[test]
    fn ideal_for_nilpotent_e_has_dim_p_squared() {
        let (alg, l, bs) = setup(5, Character::NilpotentE);
        for b in &bs[1..] {
            assert_eq!(ideal_c_minus_alpha(&alg, &l, b).unwrap().dim(), 25);
        }
    }

    #[test]
    fn witness_p7() {
        let alg = ReducedEnveloping::new(PrimeField::new(PrimeP::new(7).unwrap()), Character::Zero).unwrap();
        let l = Arc::new(WeightLayout::new(&alg));
        let label = label_for_omega(&alg, 3).unwrap();
        assert_eq!(label.alpha, 2);
        let b = crate::blocks::block(&alg, &l, &label).unwrap();
        assert!(nilpotency_witness(&alg, &b).unwrap());
    }

    #[test]
    fn filtrations_are_multiplicative_p3() {
        let (alg, l, bs) = setup(3, Character::Zero);
        for b in &bs {
            for kind in FiltrationKind::ALL {
                let filt = filtration(&alg, &l, b, kind).unwrap();
                let top = filt.terms.len() - 1;
                for i in 0..=top {
                    for j in 0..=(top - i) {
                        for u in filt.terms[i].basis_vectors() {
                            for v in filt.terms[j].basis_vectors() {
                                let uv = alg.mul_vec(&u, &v);
                                assert!(filt.terms[i + j].contains(&uv), "{kind} {i} {j}");
                            }
                        }
                    }
                }
                assert_eq!(*filt.table().cumulative.last().unwrap(), b.dim());
            }
        }
    }
}
