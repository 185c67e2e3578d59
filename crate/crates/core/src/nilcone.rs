//! The graded ring `k[x_a, x_b, x_c] / ⟨x_a^2 + x_b x_c, x_a^p, x_b^p, x_c^p⟩`
//! of the Frobenius neighbourhood of zero in the nilpotent cone of `sl2`,
//! and its comparison with graded quotients of blocks.
//!
//! The coordinates carry `ad(h)`-weights `0`, `+2` and `-2`.

use std::sync::Arc;

use crate::blocks::Block;
use crate::error::Result;
use crate::ffield::{Field, PrimeField, PrimeP};
use crate::filt::{filtration, first_differences, ideal_c_minus_alpha, FiltrationKind};
use crate::linalg::Matrix;
use crate::pbw::ReducedEnveloping;
use crate::weights::WeightLayout;

/// Graded dimensions and weight multiplicities, by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilconeRing {
    pub p: usize,
    /// `dims[d]` for `d = 0..=3(p-1)/2`.
    pub dims: Vec<usize>,
    /// `weights[d][w]`: multiplicity of weight `w mod p` in degree `d`.
    pub weights: Vec<Vec<usize>>,
}

impl NilconeRing {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Pieces of degree `< bound`, zero-padded to `len` degrees.
    pub fn truncated(&self, bound: usize, len: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
        let dims = (0..len)
            .map(|d| {
                if d < bound {
                    self.dims.get(d).copied().unwrap_or(0)
                } else {
                    0
                }
            })
            .collect();
        let weights = (0..len)
            .map(|d| {
                if d < bound {
                    self.weights.get(d).cloned().unwrap_or_else(|| vec![0; self.p])
                } else {
                    vec![0; self.p]
                }
            })
            .collect();
        (dims, weights)
    }
}

/// `p^2 + (p^2 - 1)/2`
pub fn expected_total_dim(p: usize) -> usize {
    p * p + (p * p - 1) / 2
}

/// Exponent triples `(a, b, c)` of degree `d`, each `< p`, in a fixed order.
fn monomials(p: usize, d: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..p.min(d + 1) {
        for b in 0..p.min(d - a + 1) {
            let c = d - a - b;
            if c < p {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn monomial_weight(p: usize, (_, b, c): (usize, usize, usize)) -> usize {
    (2 * (b + p * p - c)) % p
}

/// Degree-wise linear algebra: the degree-`d` part of the quotient has
/// dimension `#monomials_d - rank{ (x_a^2 + x_b x_c) m : deg m = d - 2 }`,
/// computed separately in every weight.
pub fn nilcone_oracle(p: PrimeP) -> NilconeRing {
    let field = PrimeField::new(p);
    let p = p.get() as usize;
    let top = 3 * (p - 1);
    let mut dims = Vec::new();
    let mut weights = Vec::new();
    for d in 0..=top {
        let targets = monomials(p, d);
        let sources = if d >= 2 { monomials(p, d - 2) } else { Vec::new() };
        let mut per_weight = vec![0; p];
        for w in 0..p {
            let cols: Vec<_> = targets
                .iter()
                .copied()
                .filter(|&m| monomial_weight(p, m) == w)
                .collect();
            let rows: Vec<_> = sources
                .iter()
                .copied()
                .filter(|&m| monomial_weight(p, m) == w)
                .collect();
            let pos = |m: (usize, usize, usize)| cols.iter().position(|&x| x == m);
            let mut mat = Matrix::zeros(field, rows.len(), cols.len());
            for (r, &(a, b, c)) in rows.iter().enumerate() {
                if let Some(j) = pos((a + 2, b, c)) {
                    mat[(r, j)] = field.add(mat[(r, j)], 1);
                }
                if let Some(j) = pos((a, b + 1, c + 1)) {
                    mat[(r, j)] = field.add(mat[(r, j)], 1);
                }
            }
            per_weight[w] = cols.len() - mat.rank();
        }
        dims.push(per_weight.iter().sum());
        weights.push(per_weight);
    }
    let last = dims.iter().rposition(|&x| x != 0).unwrap_or(0);
    dims.truncate(last + 1);
    weights.truncate(last + 1);
    NilconeRing { p, dims, weights }
}

/// `2d + 1` for `d < p` and `dim L_{4p-2d-2} = 2(3p - 2d - 1)` for
/// `p <= d <= 3(p-1)/2`.
pub fn nilcone_dims_closed(p: usize) -> Vec<usize> {
    (0..=3 * (p - 1) / 2)
        .map(|d| if d < p { 2 * d + 1 } else { 2 * (3 * p - 2 * d - 1) })
        .collect()
}

/// Weights in degree `d`: those of `∇_{2d}` (`2d - 2i`, `0 <= i <= 2d`) for
/// `d < p`; for `p <= d` those of `L_{p+λ} = L_λ ⊗ L_1^{[1]}` with
/// `λ = 3p - 2d - 2`, i.e. `λ - 2i` twice each.
pub fn nilcone_weights_closed(p: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; p];
    let modp = |x: i64| x.rem_euclid(p as i64) as usize;
    if d < p {
        for i in 0..=2 * d {
            out[modp(2 * d as i64 - 2 * i as i64)] += 1;
        }
    } else if d <= 3 * (p - 1) / 2 {
        let lambda = 3 * p - 2 * d - 2;
        for i in 0..=lambda {
            out[modp(lambda as i64 - 2 * i as i64)] += 2;
        }
    }
    out
}

/// Degree-wise comparison of `gr_sh (A_α / ⟨c - α⟩)` with the nilcone ring
/// truncated below `p + ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientComparison {
    pub computed_dims: Vec<usize>,
    pub expected_dims: Vec<usize>,
    pub computed_weights: Vec<Vec<usize>>,
    pub expected_weights: Vec<Vec<usize>>,
    pub first_failure: Option<usize>,
}

impl QuotientComparison {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }

    pub fn total(&self) -> usize {
        self.computed_dims.iter().sum()
    }
}

fn compare(
    computed_dims: Vec<usize>,
    computed_weights: Vec<Vec<usize>>,
    expected_dims: Vec<usize>,
    expected_weights: Vec<Vec<usize>>,
) -> QuotientComparison {
    let first_failure = (0..computed_dims.len())
        .find(|&d| computed_dims[d] != expected_dims[d] || computed_weights[d] != expected_weights[d]);
    QuotientComparison {
        computed_dims,
        expected_dims,
        computed_weights,
        expected_weights,
        first_failure,
    }
}

/// For `χ = 0`: compares the shifted-filtration quotient of a block with
/// `k[N_p]_{< p + ω}`.
pub fn compare_block_quotient<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    block: &Block<F>,
    ring: &NilconeRing,
) -> Result<QuotientComparison> {
    let omega = block.label.omega.unwrap_or(0) as usize;
    let sh = filtration(alg, layout, block, FiltrationKind::Sh)?;
    let ideal = ideal_c_minus_alpha(alg, layout, block)?;
    let quotient = ideal.quotient(&sh)?;
    let cumulative: Vec<usize> = quotient.terms.iter().map(|t| t.dim() - ideal.dim()).collect();
    let computed_dims = first_differences(&cumulative);
    let base = ideal.subspace.weight_dims();
    let computed_weights = (0..quotient.terms.len())
        .map(|d| {
            let mut w = quotient.graded_weights(d);
            if d == 0 {
                w.iter_mut().zip(&base).for_each(|(x, b)| *x -= b);
            }
            w
        })
        .collect();
    let (expected_dims, expected_weights) = ring.truncated(alg.p() + omega, quotient.terms.len());
    Ok(compare(
        computed_dims,
        computed_weights,
        expected_dims,
        expected_weights,
    ))
}

/// For regular characters: `gr_pf A_α` against `k[N_p]` truncated below `p`.
pub fn compare_regular_pushforward<F: Field>(
    alg: &ReducedEnveloping<F>,
    layout: &Arc<WeightLayout>,
    block: &Block<F>,
    ring: &NilconeRing,
) -> Result<QuotientComparison> {
    let pf = filtration(alg, layout, block, FiltrationKind::Pf)?;
    let computed_dims = pf.table().graded();
    let computed_weights = (0..pf.terms.len()).map(|d| pf.graded_weights(d)).collect();
    let (expected_dims, expected_weights) = ring.truncated(alg.p(), pf.terms.len());
    Ok(compare(
        computed_dims,
        computed_weights,
        expected_dims,
        expected_weights,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::blocks;
    use crate::ffield::artin_schreier_field;
    use crate::pbw::Character;

    fn pp(p: u32) -> PrimeP {
        PrimeP::new(p).unwrap()
    }

    #[test]
    fn oracle_dims() {
        assert_eq!(nilcone_oracle(pp(5)).dims, vec![1, 3, 5, 7, 9, 8, 4]);
        assert_eq!(nilcone_oracle(pp(3)).dims, vec![1, 3, 5, 4]);
        assert_eq!(nilcone_oracle(pp(7)).dims, vec![1, 3, 5, 7, 9, 11, 13, 12, 8, 4]);
    }

    #[test]
    fn oracle_matches_closed_form() {
        for p in [3u32, 5, 7, 11, 13] {
            let ring = nilcone_oracle(pp(p));
            let p = p as usize;
            assert_eq!(ring.dims, nilcone_dims_closed(p));
            assert_eq!(ring.total_dim(), expected_total_dim(p));
            for d in 0..ring.dims.len() {
                assert_eq!(ring.weights[d], nilcone_weights_closed(p, d), "p={p} d={d}");
            }
        }
        assert_eq!(expected_total_dim(5), 37);
    }

    #[test]
    fn weights_examples() {
        let ring = nilcone_oracle(pp(5));
        assert_eq!(ring.weights[0], vec![1, 0, 0, 0, 0]);
        assert_eq!(ring.weights[1], vec![1, 0, 1, 1, 0]);
        // ±4 ≡ 4, 1; ±2 ≡ 2, 3; 0
        assert_eq!(ring.weights[2], vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn weights_are_symmetric() {
        for p in [5u32, 7] {
            let ring = nilcone_oracle(pp(p));
            let p = p as usize;
            for w in &ring.weights {
                for x in 0..p {
                    assert_eq!(w[x], w[(p - x) % p]);
                }
            }
        }
    }

    #[test]
    fn block_quotients_p5() {
        let alg = ReducedEnveloping::new(PrimeField::new(pp(5)), Character::Zero).unwrap();
        let layout = Arc::new(WeightLayout::new(&alg));
        let ring = nilcone_oracle(pp(5));
        let bs = blocks(&alg, &layout).unwrap();
        let expected: [&[usize]; 3] = [&[1, 3, 5, 7, 9], &[1, 3, 5, 7, 9, 8], &[1, 3, 5, 7, 9, 8, 4]];
        for (b, exp) in bs.iter().zip(expected) {
            let cmp = compare_block_quotient(&alg, &layout, b, &ring).unwrap();
            assert!(cmp.holds(), "{cmp:?}");
            assert_eq!(&cmp.computed_dims[..exp.len()], exp);
            let w = b.label.omega.unwrap() as usize;
            assert_eq!(cmp.total(), 25 + 2 * w * (5 - w));
        }
    }

    #[test]
    fn regular_pushforward_p3() {
        let k = artin_schreier_field(pp(3), 2).unwrap();
        let alg = ReducedEnveloping::new(k, Character::Regular(2)).unwrap();
        let layout = Arc::new(WeightLayout::new(&alg));
        let ring = nilcone_oracle(pp(3));
        for b in blocks(&alg, &layout).unwrap() {
            let cmp = compare_regular_pushforward(&alg, &layout, &b, &ring).unwrap();
            assert!(cmp.holds(), "{cmp:?}");
            assert_eq!(cmp.total(), 9);
        }
    }
}
