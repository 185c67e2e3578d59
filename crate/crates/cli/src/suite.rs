//! Per-job computations behind the three subcommands.

use std::collections::BTreeMap;
use std::sync::Arc;

use anyhow::{Context, Result};
use sl2_blocks::blocks::{self, check_idempotent_system, coinvariants, expected_coinvariant_dim};
use sl2_blocks::ffield::artin_schreier_field;
use sl2_blocks::filt::{
    duality_check, expected_ideal_sh_graded, filtration, gram_form, ideal_c_minus_alpha, nilpotency_witness,
    pbw_complements, shift_up,
};
use sl2_blocks::nilcone::{
    compare_block_quotient, compare_regular_pushforward, expected_total_dim, nilcone_dims_closed, nilcone_oracle,
    nilcone_weights_closed, NilconeRing,
};
use sl2_blocks::repdec::{
    adjoint_module, algebra_radical, centralizer_dim, composition_tally, expected_adjoint_tally, hom_from_simple_dim,
    projectivity_certificate, tally_dim,
};
use sl2_blocks::{
    Block, BlockLabel, Character, Field, FiltrationKind, Generator, PrimeField, PrimeP, ReducedEnveloping, WeightLayout,
};

use crate::report::{BlockRow, Report, Source, TableRow};
use crate::UsageError;

/// Largest `p` for the duality, ideal and adjoint checks in `verify`.
pub const DETAILED_MAX_P: u32 = 7;

/// Largest `p` accepted for regular characters.
pub const REGULAR_MAX_P: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Job {
    pub p: PrimeP,
    pub chi: Character,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Omega(u32),
    Alpha(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Task {
    Blocks,
    Filtration {
        selector: Option<Selector>,
        kinds: Vec<FiltrationKind>,
    },
    Verify {
        corrupt_idempotent: bool,
    },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Blocks => "blocks",
            Task::Filtration { .. } => "filtration",
            Task::Verify { .. } => "verify",
        }
    }
}

pub fn chi_tag(chi: Character) -> (&'static str, Option<u32>) {
    match chi {
        Character::Zero => ("zero", None),
        Character::NilpotentE => ("e", None),
        Character::Regular(a) => ("regular", Some(a)),
    }
}

pub fn run(job: &Job, task: &Task) -> Result<Report> {
    match job.chi {
        Character::Regular(a) => run_in(artin_schreier_field(job.p, a)?, job, task),
        _ => run_in(PrimeField::new(job.p), job, task),
    }
}

/// Field elements print as a residue, or as `[c0,c1,...]` in the power
/// basis of the extension generator.
pub fn format_elem<F: Field>(field: &F, x: F::Elem) -> String {
    let c = field.coefficients(x);
    if field.degree() == 1 {
        c[0].to_string()
    } else {
        let parts: Vec<String> = c.iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

pub fn label_name<F: Field>(field: &F, label: &BlockLabel<F>) -> String {
    match label.omega {
        Some(w) => format!("omega={w}"),
        None => format!("alpha={}", format_elem(field, label.alpha)),
    }
}

/// Normalizes a user-supplied `α` to the [`format_elem`] spelling.
fn normalize_alpha<F: Field>(field: &F, text: &str) -> Result<String, UsageError> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || UsageError(format!("cannot read --alpha {text}"));
    if let Ok(n) = text.parse::<i64>() {
        return Ok(format_elem(field, field.from_int(n)));
    }
    let inner = text
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let p = i64::from(field.characteristic());
    let mut coeffs = inner
        .split(',')
        .map(|part| part.parse::<i64>().map(|n| n.rem_euclid(p).to_string()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    if coeffs.len() > field.degree() as usize {
        return Err(bad());
    }
    coeffs.resize(field.degree() as usize, "0".into());
    Ok(format!("[{}]", coeffs.join(",")))
}

fn expected_block_dim<F: Field>(p: usize, label: &BlockLabel<F>) -> usize {
    match label.omega {
        Some(w) if w > 0 => 2 * p * p,
        _ => p * p,
    }
}

struct Ctx<F: Field> {
    alg: ReducedEnveloping<F>,
    layout: Arc<WeightLayout>,
    blocks: Vec<Block<F>>,
    p: usize,
}

impl<F: Field> Ctx<F> {
    fn name(&self, b: &Block<F>) -> String {
        label_name(self.alg.field(), &b.label)
    }
}

fn run_in<F: Field>(field: F, job: &Job, task: &Task) -> Result<Report> {
    let alg = ReducedEnveloping::new(field, job.chi)?;
    let layout = Arc::new(WeightLayout::new(&alg));
    let blocks = blocks::blocks(&alg, &layout).context("block decomposition")?;
    let p = alg.p();
    let ctx = Ctx { alg, layout, blocks, p };
    let (chi, a) = chi_tag(job.chi);
    let mut report = Report::new(task.name(), job.p.get(), chi, a);
    match task {
        Task::Blocks => {
            block_rows(&ctx, &mut report)?;
        }
        Task::Filtration { selector, kinds } => {
            filtration_tables(&ctx, selector.as_ref(), kinds, &mut report)?;
        }
        Task::Verify { corrupt_idempotent } => {
            block_rows(&ctx, &mut report)?;
            verify(&ctx, *corrupt_idempotent, &mut report)?;
        }
    }
    Ok(report)
}

fn block_rows<F: Field>(ctx: &Ctx<F>, report: &mut Report) -> Result<()> {
    let f = ctx.alg.field();
    let regular = !ctx.alg.character().is_nilpotent();
    let expected_count = if regular { ctx.p } else { ctx.p.div_ceil(2) };
    report.check("blocks.count", Source::Formula, &expected_count, &ctx.blocks.len());
    let mut expected_dims = Vec::new();
    let mut expected_coinv = Vec::new();
    let mut coinv_dims = Vec::new();
    let mut witnesses = Vec::new();
    for b in &ctx.blocks {
        let co = coinvariants(&ctx.alg, b)?;
        expected_dims.push(expected_block_dim(ctx.p, &b.label));
        expected_coinv.push(expected_coinvariant_dim(&b.label));
        coinv_dims.push(co.dim());
        witnesses.push(co.witness_holds());
        report.blocks.push(BlockRow {
            label: ctx.name(b),
            omega: b.label.omega,
            alpha: format_elem(f, b.label.alpha),
            dim: b.dim(),
            coinvariant_dim: co.dim(),
            idempotent: b.polynomial.coeffs().iter().map(|&c| format_elem(f, c)).collect(),
        });
    }
    let dims: Vec<usize> = ctx.blocks.iter().map(Block::dim).collect();
    report.check("blocks.dims", Source::Formula, &expected_dims, &dims);
    report.check(
        "blocks.total",
        Source::Identity,
        &ctx.alg.dim(),
        &dims.iter().sum::<usize>(),
    );
    report.check("coinvariants.dims", Source::Formula, &expected_coinv, &coinv_dims);
    report.check(
        "coinvariants.nilpotency",
        Source::Identity,
        &vec![true; witnesses.len()],
        &witnesses,
    );
    Ok(())
}

fn select<'a, F: Field>(ctx: &'a Ctx<F>, selector: Option<&Selector>) -> Result<Vec<&'a Block<F>>> {
    let Some(sel) = selector else {
        return Ok(ctx.blocks.iter().collect());
    };
    let found = match sel {
        Selector::Omega(w) => {
            if !ctx.alg.character().is_nilpotent() {
                return Err(UsageError("--omega applies to nilpotent characters; use --alpha".into()).into());
            }
            ctx.blocks.iter().find(|b| b.label.omega == Some(*w))
        }
        Selector::Alpha(text) => {
            let key = normalize_alpha(ctx.alg.field(), text)?;
            ctx.blocks
                .iter()
                .find(|b| format_elem(ctx.alg.field(), b.label.alpha) == key)
        }
    };
    match found {
        Some(b) => Ok(vec![b]),
        None => Err(UsageError(format!("no block matches the selector at p = {}", ctx.p)).into()),
    }
}

/// Cumulative rows of the reference tables at `p = 5`, `χ = 0`, by `ω`.
fn reference_row(kind: FiltrationKind, omega: u32) -> Option<Vec<usize>> {
    let pad = |head: &[usize], zeros: usize| {
        let mut row = vec![0; zeros];
        row.extend_from_slice(head);
        let last = *row.last().expect("nonempty");
        row.resize(13, last);
        row
    };
    let row = match (kind, omega) {
        (FiltrationKind::Pf, 0) => pad(&[1, 4, 9, 16, 25], 0),
        (FiltrationKind::Pf, 1) => pad(&[1, 4, 10, 20, 34, 49, 50], 0),
        (FiltrationKind::Pf, 2) => pad(&[1, 4, 10, 20, 34, 45, 50], 0),
        (FiltrationKind::Int, 0) => pad(&[9, 16, 21, 24, 25], 8),
        (FiltrationKind::Int, 1) => pad(&[1, 16, 30, 40, 46, 49, 50], 6),
        (FiltrationKind::Int, 2) => pad(&[5, 16, 30, 40, 46, 49, 50], 6),
        _ => return None,
    };
    Some(row)
}

fn filtration_tables<F: Field>(
    ctx: &Ctx<F>,
    selector: Option<&Selector>,
    kinds: &[FiltrationKind],
    report: &mut Report,
) -> Result<()> {
    let reference = ctx.p == 5 && ctx.alg.character() == Character::Zero;
    for b in select(ctx, selector)? {
        let name = ctx.name(b);
        let mut pf_row = None;
        for &kind in kinds {
            let table = filtration(&ctx.alg, &ctx.layout, b, kind)?.table();
            let last = table.cumulative.last().copied().unwrap_or(0);
            report.check(
                format!("filtration.{kind}.{name}.exhausts"),
                Source::Identity,
                &b.dim(),
                &last,
            );
            if let (true, Some(w)) = (reference, b.label.omega) {
                if let Some(row) = reference_row(kind, w) {
                    report.check(
                        format!("reference.{kind}.{name}"),
                        Source::Reference,
                        &row,
                        &table.cumulative,
                    );
                }
            }
            if kind == FiltrationKind::Pf {
                pf_row = Some(table.cumulative.clone());
            }
            if kind == FiltrationKind::Sh && expected_coinvariant_dim(&b.label) == 1 {
                let pf = match &pf_row {
                    Some(r) => r.clone(),
                    None => {
                        filtration(&ctx.alg, &ctx.layout, b, FiltrationKind::Pf)?
                            .table()
                            .cumulative
                    }
                };
                report.check(
                    format!("filtration.sh_equals_pf.{name}"),
                    Source::Identity,
                    &pf,
                    &table.cumulative,
                );
            }
            report.tables.push(TableRow {
                block: name.clone(),
                kind,
                graded: table.graded(),
                cumulative: table.cumulative,
            });
        }
    }
    Ok(())
}

fn verify<F: Field>(ctx: &Ctx<F>, corrupt: bool, report: &mut Report) -> Result<()> {
    let alg = &ctx.alg;
    let p = ctx.p;
    let prime = PrimeP::new(p as u32)?;
    let mut pis: Vec<_> = ctx.blocks.iter().map(|b| b.idempotent.clone()).collect();
    if corrupt {
        if let Some(first) = pis.first_mut() {
            *first = alg.add(first, &alg.generator(Generator::E))?;
        }
    }
    let sys = check_idempotent_system(alg, &pis)?;
    report.check("idempotents.square", Source::Identity, &true, &sys.idempotent);
    report.check("idempotents.orthogonal", Source::Identity, &true, &sys.orthogonal);
    report.check("idempotents.sum", Source::Identity, &true, &sys.sum_is_one);
    report.check("idempotents.central", Source::Identity, &true, &sys.central);

    let ring = nilcone_oracle(prime);
    nilcone_checks(p, &ring, report);

    match alg.character() {
        Character::Regular(_) => regular_checks(ctx, &ring, report)?,
        chi if p as u32 <= DETAILED_MAX_P => {
            duality_checks(ctx, report)?;
            if chi == Character::Zero {
                ideal_checks(ctx, &ring, report)?;
                adjoint_checks(ctx, report)?;
                let kinds = [FiltrationKind::Pf, FiltrationKind::Int, FiltrationKind::Sh];
                if p == 5 {
                    filtration_tables(ctx, None, &kinds, report)?;
                }
            } else {
                for b in ctx.blocks.iter().filter(|b| b.label.omega != Some(0)) {
                    let ideal = ideal_c_minus_alpha(alg, &ctx.layout, b)?;
                    report.check(
                        format!("ideal.dim.{}", ctx.name(b)),
                        Source::Formula,
                        &(p * p),
                        &ideal.dim(),
                    );
                }
            }
        }
        _ => {}
    }
    Ok(())
}

fn nilcone_checks(p: usize, ring: &NilconeRing, report: &mut Report) {
    report.check("nilcone.dims", Source::Formula, &nilcone_dims_closed(p), &ring.dims);
    let closed: Vec<Vec<usize>> = (0..ring.dims.len()).map(|d| nilcone_weights_closed(p, d)).collect();
    report.check("nilcone.weights", Source::Formula, &closed, &ring.weights);
    report.check(
        "nilcone.total",
        Source::Formula,
        &expected_total_dim(p),
        &ring.total_dim(),
    );
}

fn regular_checks<F: Field>(ctx: &Ctx<F>, ring: &NilconeRing, report: &mut Report) -> Result<()> {
    let p = ctx.p;
    for b in &ctx.blocks {
        let cmp = compare_regular_pushforward(&ctx.alg, &ctx.layout, b, ring)?;
        let name = ctx.name(b);
        report.check(
            format!("pf_nilcone.dims.{name}"),
            Source::Oracle,
            &cmp.expected_dims,
            &cmp.computed_dims,
        );
        report.check(
            format!("pf_nilcone.weights.{name}"),
            Source::Oracle,
            &cmp.expected_weights,
            &cmp.computed_weights,
        );
        report.check(
            format!("pf_nilcone.total.{name}"),
            Source::Formula,
            &(p * p),
            &cmp.total(),
        );
    }
    Ok(())
}

fn duality_checks<F: Field>(ctx: &Ctx<F>, report: &mut Report) -> Result<()> {
    let gram = gram_form(&ctx.alg);
    report.check(
        "duality.gram_rank",
        Source::Formula,
        &ctx.alg.dim(),
        &gram.rank(&ctx.layout),
    );
    let (perps, ok) = pbw_complements(&ctx.alg, &ctx.layout, &gram)?;
    report.check("duality.pbw_perp", Source::Identity, &true, &ok);
    for b in &ctx.blocks {
        let r = duality_check(&ctx.alg, &ctx.layout, &gram, &perps, b)?;
        let name = ctx.name(b);
        report.check(
            format!("duality.subspaces.{name}"),
            Source::Identity,
            &true,
            &r.subspace_identity,
        );
        report.check(
            format!("duality.dims.{name}"),
            Source::Identity,
            &true,
            &r.dimension_identity,
        );
    }
    Ok(())
}

fn ideal_checks<F: Field>(ctx: &Ctx<F>, ring: &NilconeRing, report: &mut Report) -> Result<()> {
    let (alg, layout, p) = (&ctx.alg, &ctx.layout, ctx.p);
    for b in &ctx.blocks {
        let w = b.label.omega.unwrap_or(0) as usize;
        let name = ctx.name(b);
        let cmp = compare_block_quotient(alg, layout, b, ring)?;
        report.check(
            format!("quotient.nilcone.dims.{name}"),
            Source::Oracle,
            &cmp.expected_dims,
            &cmp.computed_dims,
        );
        report.check(
            format!("quotient.nilcone.weights.{name}"),
            Source::Oracle,
            &cmp.expected_weights,
            &cmp.computed_weights,
        );
        report.check(
            format!("quotient.total.{name}"),
            Source::Formula,
            &(p * p + 2 * w * (p - w)),
            &cmp.total(),
        );
        if w == 0 {
            // ⟨c⟩ vanishes on A_0
            let ideal = ideal_c_minus_alpha(alg, layout, b)?;
            report.check(format!("ideal.dim.{name}"), Source::Identity, &0usize, &ideal.dim());
            continue;
        }
        let ideal = ideal_c_minus_alpha(alg, layout, b)?;
        report.check(
            format!("ideal.dim.{name}"),
            Source::Formula,
            &(w * w + (p - w) * (p - w)),
            &ideal.dim(),
        );
        report.check(
            format!("ideal.witness.{name}"),
            Source::Identity,
            &true,
            &nilpotency_witness(alg, b)?,
        );
        let sh = ideal
            .induced(&filtration(alg, layout, b, FiltrationKind::Sh)?)?
            .table()
            .graded();
        report.check(
            format!("ideal.sh_graded.{name}"),
            Source::Formula,
            &expected_ideal_sh_graded(p, w),
            &sh,
        );
        let pf = ideal
            .induced(&filtration(alg, layout, b, FiltrationKind::Pf)?)?
            .table()
            .graded();
        report.check(format!("ideal.pf_shift.{name}"), Source::Identity, &shift_up(&sh), &pf);
    }
    Ok(())
}

fn tally_json(t: &BTreeMap<u32, usize>) -> BTreeMap<String, usize> {
    t.iter().map(|(l, m)| (format!("L{l}"), *m)).collect()
}

fn adjoint_checks<F: Field>(ctx: &Ctx<F>, report: &mut Report) -> Result<()> {
    let (alg, p) = (&ctx.alg, ctx.p);
    let radical = algebra_radical(alg, &ctx.layout)?;
    for b in &ctx.blocks {
        let w = b.label.omega.unwrap_or(0);
        let name = ctx.name(b);
        let m = adjoint_module(alg, b)?;
        let tally = composition_tally(alg, &radical, &m)?;
        let expected = expected_adjoint_tally(p as u32, w);
        report.check(
            format!("adjoint.tally.{name}"),
            Source::Formula,
            &tally_json(&expected),
            &tally_json(&tally),
        );
        report.check(
            format!("adjoint.tally_dim.{name}"),
            Source::Identity,
            &b.dim(),
            &tally_dim(&tally),
        );
        let invariants = if w == 0 { 1usize } else { 3 };
        report.check(
            format!("adjoint.trivial_hom.{name}"),
            Source::Reference,
            &invariants,
            &hom_from_simple_dim(0, &m)?,
        );
        report.check(
            format!("adjoint.centralizer.{name}"),
            Source::Reference,
            &invariants,
            &centralizer_dim(alg, b)?,
        );
        if w == 0 {
            let cert = projectivity_certificate(&m)?;
            report.check(
                format!("adjoint.jordan_type.{name}"),
                Source::Reference,
                &vec![p; p],
                &cert.partition,
            );
        }
    }
    Ok(())
}
