//! Multispreads: tuples of t-dimensional multi-subspaces of GF(p)^m with a
//! two-level covering property.
//!
//! A block is a t-tuple of vectors (b_1, ..., b_t) in GF(p)^m; its starred
//! span is the multiset of values sum x_i b_i over all nonzero x in GF(p)^t.
//! An n-tuple of blocks is a (lambda, mu)-multispread when the union of the
//! starred spans covers the zero vector exactly lambda times and every
//! nonzero vector exactly mu times. Kernels of check matrices built from such
//! blocks are completely regular with covering radius 1, and lambda = mu - 1
//! characterizes the mu-fold 1-perfect case.
//!
//! Constructions provided here: the trivial all-zero blocks, the fold spread
//! (projective representatives times a power basis), the subfield spread
//! (multiplicative cosets of a subfield), its coordinate projection, and the
//! composite of all three that realizes every feasible parameter set.

use crate::ff::{is_prime, vec_from_index, vec_index, FieldCtx, FpVec};
use crate::params;
use crate::Error;
use std::fmt;

/// Dense tables and per-block enumerations stay below this many entries.
const SPAN_TABLE_CAP: u64 = 1 << 24;

/// Hard bound on the number of blocks a construction will assemble.
const MAX_BLOCKS: u64 = 1_000_000;

/// A t-tuple of vectors in GF(p)^m, the building block of a multispread.
/// The tuple is ordered: block vectors become matrix columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTuple {
    vectors: Vec<FpVec>,
}

impl BlockTuple {
    pub fn new(vectors: Vec<FpVec>) -> Result<Self, Error> {
        if vectors.is_empty() {
            return Err(Error::Precondition("a block needs at least one vector".into()));
        }
        let m = vectors[0].len();
        if m == 0 {
            return Err(Error::Precondition("block vectors must have length >= 1".into()));
        }
        if vectors.iter().any(|v| v.len() != m) {
            return Err(Error::AmbientMismatch(
                "all vectors of a block must have the same length".into(),
            ));
        }
        Ok(BlockTuple { vectors })
    }

    /// The block of t zero vectors; its starred span covers only zero.
    pub fn zero(t: usize, m: usize) -> Self {
        assert!(t >= 1 && m >= 1);
        BlockTuple {
            vectors: vec![vec![0; m]; t],
        }
    }

    pub fn t(&self) -> usize {
        self.vectors.len()
    }

    pub fn m(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn vectors(&self) -> &[FpVec] {
        &self.vectors
    }
}

/// Dense multiset over GF(p)^m, indexed by `vec_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VecMultiset {
    p: u32,
    m: usize,
    counts: Vec<u64>,
}

impl VecMultiset {
    pub fn new(p: u32, m: usize) -> Result<Self, Error> {
        let size = u32::try_from(m)
            .ok()
            .and_then(|e| (p as u64).checked_pow(e))
            .filter(|&s| s <= SPAN_TABLE_CAP)
            .ok_or(Error::TooLarge {
                what: "dense vector table",
                base: p as u64,
                exp: m,
                cap: SPAN_TABLE_CAP,
            })?;
        Ok(VecMultiset {
            p,
            m,
            counts: vec![0; size as usize],
        })
    }

    fn add(&mut self, v: &[u32]) {
        debug_assert_eq!(v.len(), self.m);
        self.counts[vec_index(self.p, v) as usize] += 1;
    }

    pub fn count(&self, v: &[u32]) -> u64 {
        assert_eq!(v.len(), self.m);
        self.counts[vec_index(self.p, v) as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Accumulate the span of one block into `table`: all p^t combinations, or
/// only the p^t - 1 nonzero ones when `starred`.
fn accumulate_span(
    table: &mut VecMultiset,
    block: &BlockTuple,
    p: u32,
    starred: bool,
) -> Result<(), Error> {
    let t = block.t();
    let m = block.m();
    let combos = u32::try_from(t)
        .ok()
        .and_then(|e| (p as u64).checked_pow(e))
        .filter(|&s| s <= SPAN_TABLE_CAP)
        .ok_or(Error::TooLarge {
            what: "block span enumeration",
            base: p as u64,
            exp: t,
            cap: SPAN_TABLE_CAP,
        })?;
    for v in block.vectors() {
        if v.iter().any(|&c| c >= p) {
            return Err(Error::Precondition(format!(
                "block entry out of range for GF({p})"
            )));
        }
    }
    let mut value = vec![0u32; m];
    for idx in if starred { 1..combos } else { 0..combos } {
        let x = vec_from_index(p, t, idx);
        value.iter_mut().for_each(|c| *c = 0);
        for (xi, b) in x.iter().zip(block.vectors()) {
            if *xi == 0 {
                continue;
            }
            for (acc, &bc) in value.iter_mut().zip(b.iter()) {
                *acc = (*acc + (*xi as u64 * bc as u64 % p as u64) as u32) % p;
            }
        }
        table.add(&value);
    }
    Ok(())
}

/// The (starred) span of a single block as a multiset over GF(p)^m.
pub fn span_multiset(block: &BlockTuple, p: u32, starred: bool) -> Result<VecMultiset, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut table = VecMultiset::new(p, block.m())?;
    accumulate_span(&mut table, block, p, starred)?;
    Ok(table)
}

/// Two vectors covered a different number of times, disproving evenness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnevenWitness {
    pub vec_a: FpVec,
    pub count_a: u64,
    pub vec_b: FpVec,
    pub count_b: u64,
}

impl fmt::Display for UnevenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vector {:?} is covered {} times but vector {:?} is covered {} times",
            self.vec_a, self.count_a, self.vec_b, self.count_b
        )
    }
}

/// Result of classifying a tuple of blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Every nonzero vector is covered `mu` times and zero `lambda` times.
    Spread { lambda: u64, mu: u64 },
    /// Two nonzero vectors with different coverage.
    NotSpread(UnevenWitness),
}

/// Classify a tuple of blocks over GF(p)^m: compute the union of starred
/// spans and check that it is even on the nonzero vectors.
pub fn classify(
    blocks: &[BlockTuple],
    p: u32,
    t: usize,
    m: usize,
) -> Result<Classification, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if t == 0 || m == 0 {
        return Err(Error::Precondition("classification needs t >= 1 and m >= 1".into()));
    }
    for block in blocks {
        if block.t() != t {
            return Err(Error::AmbientMismatch(format!(
                "block has {} vectors, expected t = {t}",
                block.t()
            )));
        }
        if block.m() != m {
            return Err(Error::AmbientMismatch(format!(
                "block vectors have length {}, expected m = {m}",
                block.m()
            )));
        }
    }
    let mut table = VecMultiset::new(p, m)?;
    for block in blocks {
        accumulate_span(&mut table, block, p, true)?;
    }
    let lambda = table.counts[0];
    let mu = table.counts[1];
    for (idx, &count) in table.counts.iter().enumerate().skip(2) {
        if count != mu {
            return Ok(Classification::NotSpread(UnevenWitness {
                vec_a: vec_from_index(p, m, 1),
                count_a: mu,
                vec_b: vec_from_index(p, m, idx as u64),
                count_b: count,
            }));
        }
    }
    Ok(Classification::Spread { lambda, mu })
}

/// A verified (lambda, mu)-multispread. Construction runs `classify`, so a
/// value of this type always satisfies the covering property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multispread {
    blocks: Vec<BlockTuple>,
    p: u32,
    t: usize,
    m: usize,
    lambda: u64,
    mu: u64,
}

impl Multispread {
    pub fn new(blocks: Vec<BlockTuple>, p: u32, t: usize, m: usize) -> Result<Self, Error> {
        if blocks.is_empty() {
            return Err(Error::Precondition("a multispread needs at least one block".into()));
        }
        match classify(&blocks, p, t, m)? {
            Classification::Spread { lambda, mu } => Ok(Multispread {
                blocks,
                p,
                t,
                m,
                lambda,
                mu,
            }),
            Classification::NotSpread(witness) => Err(Error::NotMultispread(witness)),
        }
    }

    pub fn blocks(&self) -> &[BlockTuple] {
        &self.blocks
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of blocks; the code length of the derived check matrix.
    pub fn n(&self) -> usize {
        self.blocks.len()
    }

    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    pub fn mu(&self) -> u64 {
        self.mu
    }
}

/// `alpha` zero blocks: a (alpha (p^t - 1), 0)-multispread on its own.
pub fn trivial_blocks(t: usize, m: usize, alpha: u64) -> Vec<BlockTuple> {
    (0..alpha).map(|_| BlockTuple::zero(t, m)).collect()
}

/// Projective representatives of GF(p)^m: the vectors whose first nonzero
/// coordinate is 1, in index order. Every nonzero vector has exactly one
/// scalar multiple in the list.
fn projective_reps(p: u32, m: usize) -> Result<Vec<FpVec>, Error> {
    let size = u32::try_from(m)
        .ok()
        .and_then(|e| (p as u64).checked_pow(e))
        .filter(|&s| s <= SPAN_TABLE_CAP)
        .ok_or(Error::TooLarge {
            what: "projective representative enumeration",
            base: p as u64,
            exp: m,
            cap: SPAN_TABLE_CAP,
        })?;
    let mut reps = Vec::new();
    for idx in 1..size {
        let v = vec_from_index(p, m, idx);
        let first = v.iter().copied().find(|&c| c != 0);
        if first == Some(1) {
            reps.push(v);
        }
    }
    debug_assert_eq!(reps.len() as u64, (size - 1) / (p as u64 - 1));
    Ok(reps)
}

/// The fold spread in GF(p)^m for t <= m: one block r * (1, x, ..., x^(t-1))
/// per projective representative r, multiplying inside GF(p^m). Classifies as
/// (0, (p^t - 1)/(p - 1)).
pub fn fold_spread(p: u32, t: usize, m: usize) -> Result<Multispread, Error> {
    if t == 0 || t > m {
        return Err(Error::Precondition(format!(
            "the fold spread needs 1 <= t <= m, got t = {t}, m = {m}"
        )));
    }
    let ctx = FieldCtx::extension(p, m)?;
    let powers: Vec<_> = (0..t).map(|j| ctx.monomial(j)).collect();
    let mut blocks = Vec::new();
    for rep in projective_reps(p, m)? {
        let e = ctx.from_coeffs(rep)?;
        let vectors = powers
            .iter()
            .map(|xj| ctx.elem_to_vec(&ctx.mul(&e, xj)))
            .collect();
        blocks.push(BlockTuple { vectors });
    }
    Multispread::new(blocks, p, t, m)
}

/// The subfield spread in GF(p)^m for t | m: the blocks g^i * (1, z, ...,
/// z^(t-1)) for i < (p^m - 1)/(p^t - 1), where g generates GF(p^m)^* and
/// z = g^((p^m-1)/(p^t-1)) generates the subfield GF(p^t)^*. The starred
/// spans are exactly the multiplicative cosets of GF(p^t)^*, so this
/// classifies as (0, 1).
pub fn subfield_spread(p: u32, t: usize, m: usize) -> Result<Multispread, Error> {
    if t == 0 || !m.is_multiple_of(t) {
        return Err(Error::Precondition(format!(
            "the subfield spread needs t | m, got t = {t}, m = {m}"
        )));
    }
    let ctx = FieldCtx::extension(p, m)?;
    let n_blocks = (ctx.order() - 1) / ((p as u64).pow(t as u32) - 1);
    let g = ctx.generator();
    let z = ctx.pow(&g, n_blocks);
    let mut z_powers = Vec::with_capacity(t);
    let mut zp = ctx.one();
    for _ in 0..t {
        z_powers.push(zp.clone());
        zp = ctx.mul(&zp, &z);
    }
    let mut blocks = Vec::with_capacity(n_blocks as usize);
    let mut gi = ctx.one();
    for _ in 0..n_blocks {
        let vectors = z_powers
            .iter()
            .map(|zj| ctx.elem_to_vec(&ctx.mul(&gi, zj)))
            .collect();
        blocks.push(BlockTuple { vectors });
        gi = ctx.mul(&gi, &g);
    }
    Multispread::new(blocks, p, t, m)
}

/// The subfield spread of GF(p)^(m+s) with the last s coordinates deleted,
/// for t | m + s. Every fiber of the projection has p^s vectors, so this
/// classifies as (p^s - 1, p^s).
pub fn projected_spread(p: u32, t: usize, m: usize, s: usize) -> Result<Multispread, Error> {
    if m == 0 {
        return Err(Error::Precondition("projection target needs m >= 1".into()));
    }
    if s == 0 {
        return subfield_spread(p, t, m);
    }
    let full = subfield_spread(p, t, m + s)?;
    let blocks = full
        .blocks
        .into_iter()
        .map(|b| BlockTuple {
            vectors: b.vectors.into_iter().map(|v| v[..m].to_vec()).collect(),
        })
        .collect();
    Multispread::new(blocks, p, t, m)
}

/// Concatenation of alpha trivial blocks, beta projected subfield spreads
/// (with s chosen minimal so that t | m + s), and gamma fold spreads. The
/// result classifies as
/// (alpha (p^t-1) + beta (p^s-1), beta p^s + gamma (p^t-1)/(p-1)).
pub fn composite_spread(
    p: u32,
    t: usize,
    m: usize,
    alpha: u64,
    beta: u64,
    gamma: u64,
) -> Result<Multispread, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if t == 0 || m == 0 {
        return Err(Error::Precondition("composition needs t >= 1 and m >= 1".into()));
    }
    if alpha == 0 && beta == 0 && gamma == 0 {
        return Err(Error::Precondition("composition needs at least one block".into()));
    }
    if gamma > 0 && t > m {
        return Err(Error::Precondition(format!(
            "fold component needs t <= m, got t = {t}, m = {m}"
        )));
    }
    let s = (t - m % t) % t;
    let pt1 = (p as u64)
        .checked_pow(t as u32)
        .ok_or(Error::TooLarge {
            what: "block size",
            base: p as u64,
            exp: t,
            cap: u64::MAX,
        })?
        - 1;
    let proj_blocks = if beta > 0 {
        ((p as u64)
            .checked_pow((m + s) as u32)
            .ok_or(Error::TooLarge {
                what: "spread ambient",
                base: p as u64,
                exp: m + s,
                cap: u64::MAX,
            })?
            - 1)
            / pt1
    } else {
        0
    };
    let fold_blocks = if gamma > 0 {
        ((p as u64).pow(m as u32) - 1) / (p as u64 - 1)
    } else {
        0
    };
    let n_blocks = alpha
        .checked_add(beta.saturating_mul(proj_blocks))
        .and_then(|v| v.checked_add(gamma.saturating_mul(fold_blocks)))
        .filter(|&n| n <= MAX_BLOCKS)
        .ok_or_else(|| {
            Error::Precondition(format!("composition would exceed {MAX_BLOCKS} blocks"))
        })?;

    let mut blocks = trivial_blocks(t, m, alpha);
    if beta > 0 {
        let proj = projected_spread(p, t, m, s)?;
        for _ in 0..beta {
            blocks.extend_from_slice(proj.blocks());
        }
    }
    if gamma > 0 {
        let fold = fold_spread(p, t, m)?;
        for _ in 0..gamma {
            blocks.extend_from_slice(fold.blocks());
        }
    }
    debug_assert_eq!(blocks.len() as u64, n_blocks);
    let ms = Multispread::new(blocks, p, t, m)?;
    let ps = (p as u64).pow(s as u32);
    assert_eq!(ms.lambda(), alpha * pt1 + beta * (ps - 1));
    assert_eq!(ms.mu(), beta * ps + gamma * pt1 / (p as u64 - 1));
    Ok(ms)
}

/// The multispread behind an additive mu-fold 1-perfect code in H(n, p^t):
/// feasibility is checked first, then the composite construction is driven by
/// the resulting recipe. The result has n blocks and lambda = mu - 1.
pub fn perfect_code_spread(p: u32, t: usize, n: usize, mu: u64) -> Result<Multispread, Error> {
    let verdict = params::feasible_additive(p, t, n, mu)?;
    let recipe = match verdict.recipe {
        Some(r) => r,
        None => return Err(Error::Infeasible(verdict.violated)),
    };
    let ms = composite_spread(p, t, recipe.m, recipe.alpha, recipe.beta, recipe.gamma)?;
    assert_eq!(ms.n(), n);
    assert_eq!(ms.mu(), mu);
    assert_eq!(ms.lambda(), mu - 1);
    Ok(ms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Condition;

    fn block(vectors: &[&[u32]]) -> BlockTuple {
        BlockTuple::new(vectors.iter().map(|v| v.to_vec()).collect()).unwrap()
    }

    #[test]
    fn span_of_zero_block() {
        let b = BlockTuple::zero(2, 2);
        let full = span_multiset(&b, 2, false).unwrap();
        assert_eq!(full.count(&[0, 0]), 4);
        assert_eq!(full.total(), 4);
        let starred = span_multiset(&b, 2, true).unwrap();
        assert_eq!(starred.count(&[0, 0]), 3);
        assert_eq!(starred.count(&[1, 0]), 0);
    }

    #[test]
    fn span_of_repeated_vector() {
        let b = block(&[&[1, 0], &[1, 0]]);
        let starred = span_multiset(&b, 2, true).unwrap();
        assert_eq!(starred.count(&[0, 0]), 1);
        assert_eq!(starred.count(&[1, 0]), 2);
        assert_eq!(starred.count(&[0, 1]), 0);
        assert_eq!(starred.total(), 3);
    }

    #[test]
    fn span_rejects_out_of_range_entries() {
        let b = block(&[&[2, 0]]);
        assert!(matches!(span_multiset(&b, 2, true), Err(Error::Precondition(_))));
    }

    #[test]
    fn classify_zero_block() {
        let c = classify(&[BlockTuple::zero(2, 2)], 2, 2, 2).unwrap();
        assert_eq!(c, Classification::Spread { lambda: 3, mu: 0 });
    }

    #[test]
    fn classify_full_rank_block_is_perfect_spread() {
        let c = classify(&[block(&[&[1, 0], &[0, 1]])], 2, 2, 2).unwrap();
        assert_eq!(c, Classification::Spread { lambda: 0, mu: 1 });
    }

    #[test]
    fn classify_uneven_coverage() {
        let c = classify(&[block(&[&[1, 0], &[1, 0]])], 2, 2, 2).unwrap();
        match c {
            Classification::NotSpread(w) => {
                assert_eq!(w.vec_a, vec![0, 1]);
                assert_eq!(w.count_a, 0);
                assert_eq!(w.vec_b, vec![1, 0]);
                assert_eq!(w.count_b, 2);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn classify_checks_ambient() {
        let blocks = vec![block(&[&[1, 0, 0], &[0, 1, 0]])];
        assert!(matches!(
            classify(&blocks, 2, 2, 2),
            Err(Error::AmbientMismatch(_))
        ));
        assert!(matches!(
            classify(&blocks, 2, 3, 3),
            Err(Error::AmbientMismatch(_))
        ));
    }

    #[test]
    fn multispread_rejects_uneven_blocks() {
        let blocks = vec![block(&[&[1, 0], &[1, 0]])];
        assert!(matches!(
            Multispread::new(blocks, 2, 2, 2),
            Err(Error::NotMultispread(_))
        ));
    }

    #[test]
    fn trivial_blocks_classify() {
        let blocks = trivial_blocks(1, 2, 2);
        let c = classify(&blocks, 3, 1, 2).unwrap();
        assert_eq!(c, Classification::Spread { lambda: 4, mu: 0 });
    }

    fn check_identity(ms: &Multispread) {
        let p = ms.p() as u64;
        let lhs = ms.lambda() + ms.mu() * (p.pow(ms.m() as u32) - 1);
        let rhs = ms.n() as u64 * (p.pow(ms.t() as u32) - 1);
        assert_eq!(lhs, rhs, "covering identity violated");
    }

    #[test]
    fn fold_spread_small_cases() {
        let ms = fold_spread(2, 2, 2).unwrap();
        assert_eq!(ms.n(), 3);
        assert_eq!((ms.lambda(), ms.mu()), (0, 3));
        check_identity(&ms);

        let ms = fold_spread(2, 1, 2).unwrap();
        assert_eq!(ms.n(), 3);
        assert_eq!((ms.lambda(), ms.mu()), (0, 1));

        let ms = fold_spread(3, 1, 2).unwrap();
        assert_eq!(ms.n(), 4);
        assert_eq!((ms.lambda(), ms.mu()), (0, 1));

        let ms = fold_spread(2, 2, 3).unwrap();
        assert_eq!(ms.n(), 7);
        assert_eq!((ms.lambda(), ms.mu()), (0, 3));
        check_identity(&ms);

        let ms = fold_spread(3, 2, 3).unwrap();
        assert_eq!(ms.n(), 13);
        assert_eq!((ms.lambda(), ms.mu()), (0, 4));
        check_identity(&ms);
    }

    #[test]
    fn fold_spread_needs_t_at_most_m() {
        assert!(matches!(fold_spread(2, 3, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn subfield_spread_small_cases() {
        let ms = subfield_spread(2, 2, 2).unwrap();
        assert_eq!(ms.n(), 1);
        assert_eq!((ms.lambda(), ms.mu()), (0, 1));

        let ms = subfield_spread(2, 2, 4).unwrap();
        assert_eq!(ms.n(), 5);
        assert_eq!((ms.lambda(), ms.mu()), (0, 1));
        check_identity(&ms);

        let ms = subfield_spread(3, 1, 2).unwrap();
        assert_eq!(ms.n(), 4);
        assert_eq!((ms.lambda(), ms.mu()), (0, 1));

        let ms = subfield_spread(2, 3, 6).unwrap();
        assert_eq!(ms.n(), 9);
        assert_eq!((ms.lambda(), ms.mu()), (0, 1));
    }

    #[test]
    fn subfield_spread_needs_divisibility() {
        assert!(matches!(subfield_spread(2, 2, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn projected_spread_small_cases() {
        let ms = projected_spread(2, 2, 3, 1).unwrap();
        assert_eq!(ms.n(), 5);
        assert_eq!((ms.lambda(), ms.mu()), (1, 2));
        check_identity(&ms);

        let ms = projected_spread(2, 3, 1, 2).unwrap();
        assert_eq!(ms.n(), 1);
        assert_eq!((ms.lambda(), ms.mu()), (3, 4));
        check_identity(&ms);

        let ms = projected_spread(3, 2, 2, 2).unwrap();
        assert_eq!(ms.n(), 10);
        assert_eq!((ms.lambda(), ms.mu()), (8, 9));
        check_identity(&ms);
    }

    #[test]
    fn composite_spread_flagship_shape() {
        let ms = composite_spread(2, 2, 3, 1, 1, 1).unwrap();
        assert_eq!(ms.n(), 13);
        assert_eq!((ms.lambda(), ms.mu()), (4, 5));
        check_identity(&ms);
    }

    #[test]
    fn composite_spread_preconditions() {
        assert!(matches!(
            composite_spread(2, 3, 2, 0, 0, 1),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            composite_spread(2, 2, 2, 0, 0, 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn perfect_code_spread_flagship() {
        let ms = perfect_code_spread(2, 2, 13, 5).unwrap();
        assert_eq!(ms.n(), 13);
        assert_eq!((ms.lambda(), ms.mu()), (4, 5));
    }

    #[test]
    fn perfect_code_spread_binary() {
        let ms = perfect_code_spread(2, 1, 5, 3).unwrap();
        assert_eq!(ms.n(), 5);
        assert_eq!((ms.lambda(), ms.mu()), (2, 3));
        check_identity(&ms);
    }

    #[test]
    fn perfect_code_spread_small_m() {
        let ms = perfect_code_spread(2, 3, 1, 4).unwrap();
        assert_eq!(ms.n(), 1);
        assert_eq!((ms.lambda(), ms.mu()), (3, 4));
    }

    #[test]
    fn perfect_code_spread_rejects_infeasible() {
        match perfect_code_spread(2, 2, 5, 3) {
            Err(Error::Infeasible(conds)) => assert_eq!(conds, vec![Condition::PowerOfP]),
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }
}
