//! Check matrices, explicit codes in H(n, q), and verification.
//!
//! A check matrix over GF(p) with nt columns, read as n blocks of t columns,
//! defines an additive code in H(n, p^t): the kernel, with each group of t
//! base-p digits forming one base-q letter. Verification comes in two
//! flavors: structural (classify the column blocks as a multispread, valid
//! whenever the rows have full rank) and brute force (sweep every radius-1
//! ball of the graph). The equivalence of the two on full-rank matrices is
//! what the test suite checks exhaustively on small cases.
//!
//! Codes whose cardinality is not a power of p are reached as unions of
//! cosets of an additive code, picked by their syndromes.

use crate::digits::digit_char;
use crate::ff::{vec_from_index, FpMat, FpVec};
use crate::multispread::{classify, BlockTuple, Classification, Multispread, UnevenWitness};
use crate::params::{self, Recipe};
use crate::Error;
use std::fmt;

/// Default bound on explicitly enumerated codewords.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 24;

/// Default bound on the number of vertices a brute-force sweep will visit.
pub const DEFAULT_VERIFY_CAP: u64 = 1 << 24;

/// A GF(p)-matrix whose nt columns are grouped into n blocks of t; its
/// kernel is an additive code in H(n, p^t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    matrix: FpMat,
    p: u32,
    t: usize,
    n: usize,
}

impl CheckMatrix {
    /// Assemble the matrix whose block i, column j is `blocks[i].vectors()[j]`.
    pub fn from_blocks(blocks: &[BlockTuple], p: u32, t: usize) -> Result<Self, Error> {
        if blocks.is_empty() {
            return Err(Error::Precondition("a check matrix needs at least one block".into()));
        }
        let m = blocks[0].m();
        for b in blocks {
            if b.t() != t || b.m() != m {
                return Err(Error::AmbientMismatch(
                    "all blocks must share the same t and m".into(),
                ));
            }
            for v in b.vectors() {
                if v.iter().any(|&c| c >= p) {
                    return Err(Error::Precondition(format!(
                        "block entry out of range for GF({p})"
                    )));
                }
            }
        }
        let n = blocks.len();
        let mut matrix = FpMat::zeros(m, n * t);
        for (i, b) in blocks.iter().enumerate() {
            for (j, v) in b.vectors().iter().enumerate() {
                for (r, &c) in v.iter().enumerate() {
                    matrix.set(r, i * t + j, c);
                }
            }
        }
        Ok(CheckMatrix { matrix, p, t, n })
    }

    pub fn from_multispread(ms: &Multispread) -> Self {
        Self::from_blocks(ms.blocks(), ms.p(), ms.t())
            .expect("a verified multispread always yields a check matrix")
    }

    /// Wrap an existing matrix; the column count must be n * t.
    pub fn from_parts(matrix: FpMat, p: u32, t: usize, n: usize) -> Result<Self, Error> {
        if !crate::ff::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 || n == 0 {
            return Err(Error::Precondition("a check matrix needs t >= 1 and n >= 1".into()));
        }
        if matrix.cols() != n * t {
            return Err(Error::AmbientMismatch(format!(
                "matrix has {} columns, expected n * t = {}",
                matrix.cols(),
                n * t
            )));
        }
        for r in 0..matrix.rows() {
            if matrix.row(r).iter().any(|&c| c >= p) {
                return Err(Error::Precondition(format!(
                    "matrix entry out of range for GF({p})"
                )));
            }
        }
        Ok(CheckMatrix { matrix, p, t, n })
    }

    pub fn matrix(&self) -> &FpMat {
        &self.matrix
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows; the syndrome dimension m.
    pub fn m(&self) -> usize {
        self.matrix.rows()
    }

    /// Alphabet size q = p^t.
    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.t as u32)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank_kernel(self.p).0
    }

    /// The column blocks as a tuple of (m-vector) t-tuples.
    pub fn to_blocks(&self) -> Vec<BlockTuple> {
        let m = self.m();
        (0..self.n)
            .map(|i| {
                let vectors = (0..self.t)
                    .map(|j| (0..m).map(|r| self.matrix.get(r, i * self.t + j)).collect())
                    .collect();
                BlockTuple::new(vectors).expect("matrix columns form valid blocks")
            })
            .collect()
    }

    /// Syndrome of a word given as nt base-p digits.
    pub fn syndrome(&self, pvec: &[u32]) -> FpVec {
        self.matrix.mul_vec(pvec, self.p)
    }
}

/// Index of a length-n word over a size-q alphabet, most significant digit
/// first. Equals the base-p index of the word's digit expansion, so base-q
/// and base-p views of a vertex agree.
pub fn word_index(q: u64, word: &[u32]) -> u64 {
    word.iter().fold(0u64, |acc, &d| {
        debug_assert!((d as u64) < q);
        acc * q + d as u64
    })
}

pub fn word_from_index(q: u64, n: usize, mut idx: u64) -> Vec<u32> {
    let mut word = vec![0u32; n];
    for slot in word.iter_mut().rev() {
        *slot = (idx % q) as u32;
        idx /= q;
    }
    debug_assert_eq!(idx, 0);
    word
}

/// Expand base-q digits into nt base-p digits, most significant first within
/// each block.
pub fn word_to_pvec(word: &[u32], p: u32, t: usize) -> FpVec {
    let mut out = Vec::with_capacity(word.len() * t);
    for &d in word {
        let mut rem = d;
        let mut block = vec![0u32; t];
        for slot in block.iter_mut().rev() {
            *slot = rem % p;
            rem /= p;
        }
        debug_assert_eq!(rem, 0);
        out.extend_from_slice(&block);
    }
    out
}

/// Inverse of `word_to_pvec`.
pub fn pvec_to_word(pvec: &[u32], p: u32, t: usize) -> Vec<u32> {
    debug_assert_eq!(pvec.len() % t, 0);
    pvec.chunks(t)
        .map(|chunk| chunk.iter().fold(0u32, |acc, &c| acc * p + c))
        .collect()
}

/// An explicit code: a sorted set of vertex indices of H(n, q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSet {
    q: u64,
    n: usize,
    vertex_count: u64,
    words: Vec<u64>,
}

impl CodeSet {
    pub fn from_words(q: u64, n: usize, mut words: Vec<u64>) -> Result<Self, Error> {
        if q < 2 || n == 0 {
            return Err(Error::Precondition("a code lives in H(n, q) with n >= 1, q >= 2".into()));
        }
        let vertex_count = u32::try_from(n)
            .ok()
            .and_then(|e| q.checked_pow(e))
            .ok_or(Error::TooLarge {
                what: "vertex indexing",
                base: q,
                exp: n,
                cap: u64::MAX,
            })?;
        words.sort_unstable();
        if let Some(w) = words.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "duplicate codeword with index {}",
                w[0]
            )));
        }
        if let Some(&w) = words.last() {
            if w >= vertex_count {
                return Err(Error::Precondition(format!(
                    "codeword index {w} is outside H({n}, {q})"
                )));
            }
        }
        Ok(CodeSet {
            q,
            n,
            vertex_count,
            words,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains_index(&self, idx: u64) -> bool {
        self.words.binary_search(&idx).is_ok()
    }
}

/// Rank of the matrix and a basis of its kernel as nt-vectors.
pub fn kernel_basis(cm: &CheckMatrix) -> (usize, Vec<FpVec>) {
    cm.matrix.rank_kernel(cm.p)
}

/// All vertex indices offset + span(basis), one per combination. The caller
/// bounds the combination count; this asserts index arithmetic stays exact.
fn affine_word_indices(offset: &[u32], basis: &[FpVec], p: u32) -> Vec<u64> {
    let len = offset.len();
    debug_assert!(basis.iter().all(|b| b.len() == len));
    let start = crate::ff::vec_index(p, offset);
    if p == 2 {
        // Over GF(2) adding a basis vector is XOR on the vertex index, so a
        // Gray-code walk touches one basis mask per step.
        let masks: Vec<u64> = basis.iter().map(|b| crate::ff::vec_index(2, b)).collect();
        let total = 1u64 << masks.len();
        let mut out = Vec::with_capacity(total as usize);
        let mut current = start;
        out.push(current);
        for c in 1..total {
            current ^= masks[c.trailing_zeros() as usize];
            out.push(current);
        }
        return out;
    }
    let total = (p as u64).pow(basis.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u32; basis.len()];
    let mut current = offset.to_vec();
    out.push(start);
    for _ in 1..total {
        // Odometer over GF(p)^k: each wrap re-adds a basis vector p times,
        // which is a net no-op, so only the final increment changes `current`.
        for (j, d) in digits.iter_mut().enumerate() {
            for (c, &b) in current.iter_mut().zip(basis[j].iter()) {
                *c = (*c + b) % p;
            }
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
        out.push(crate::ff::vec_index(p, &current));
    }
    out
}

/// Guard that p^(nt) indices fit in u64 and the enumeration stays below cap.
fn check_enumeration(cm: &CheckMatrix, dim: usize, count: u64, cap: u64) -> Result<(), Error> {
    let nt = cm.n * cm.t;
    if u32::try_from(nt)
        .ok()
        .and_then(|e| (cm.p as u64).checked_pow(e))
        .is_none()
    {
        return Err(Error::TooLarge {
            what: "vertex indexing",
            base: cm.p as u64,
            exp: nt,
            cap: u64::MAX,
        });
    }
    if count > cap {
        return Err(Error::TooLarge {
            what: "explicit code enumeration",
            base: cm.p as u64,
            exp: dim,
            cap,
        });
    }
    Ok(())
}

/// Enumerate the kernel of the check matrix as an explicit code. Refuses to
/// materialize more than `cap` codewords.
pub fn kernel_code(cm: &CheckMatrix, cap: u64) -> Result<CodeSet, Error> {
    let (rank, basis) = kernel_basis(cm);
    let dim = cm.n * cm.t - rank;
    debug_assert_eq!(dim, basis.len());
    let count = u32::try_from(dim)
        .ok()
        .and_then(|e| (cm.p as u64).checked_pow(e))
        .ok_or(Error::TooLarge {
            what: "explicit code enumeration",
            base: cm.p as u64,
            exp: dim,
            cap,
        })?;
    check_enumeration(cm, dim, count, cap)?;
    let offset = vec![0u32; cm.n * cm.t];
    let words = affine_word_indices(&offset, &basis, cm.p);
    CodeSet::from_words(cm.q(), cm.n, words)
}

/// The first `kappa` syndromes of GF(p)^m in index order that lie in the
/// column space, together with the union of the corresponding cosets of the
/// kernel. Distinct cosets are disjoint, so the union of kappa of them
/// multiplies the fold of the kernel code by kappa.
pub fn coset_union(cm: &CheckMatrix, kappa: u64, cap: u64) -> Result<(CodeSet, Vec<FpVec>), Error> {
    let (rank, basis) = kernel_basis(cm);
    let reachable = u32::try_from(rank)
        .ok()
        .and_then(|e| (cm.p as u64).checked_pow(e))
        .ok_or(Error::TooLarge {
            what: "syndrome enumeration",
            base: cm.p as u64,
            exp: rank,
            cap: u64::MAX,
        })?;
    if kappa == 0 || kappa > reachable {
        return Err(Error::Precondition(format!(
            "kappa = {kappa} cosets requested but the matrix reaches {reachable} syndromes"
        )));
    }
    let dim = cm.n * cm.t - rank;
    let count = (cm.p as u64)
        .checked_pow(dim as u32)
        .and_then(|c| c.checked_mul(kappa))
        .ok_or(Error::TooLarge {
            what: "explicit code enumeration",
            base: cm.p as u64,
            exp: dim,
            cap,
        })?;
    check_enumeration(cm, dim, count, cap)?;

    let m = cm.m();
    let syndrome_space = u32::try_from(m)
        .ok()
        .and_then(|e| (cm.p as u64).checked_pow(e))
        .ok_or(Error::TooLarge {
            what: "syndrome enumeration",
            base: cm.p as u64,
            exp: m,
            cap: u64::MAX,
        })?;
    let mut syndromes = Vec::with_capacity(kappa as usize);
    let mut words = Vec::with_capacity(count as usize);
    let mut idx = 0u64;
    while (syndromes.len() as u64) < kappa {
        debug_assert!(idx < syndrome_space, "fewer reachable syndromes than rank promises");
        let s = vec_from_index(cm.p, m, idx);
        idx += 1;
        let offset = match cm.matrix.solve(&s, cm.p) {
            Ok(x) => x,
            Err(Error::InconsistentSystem) => continue,
            Err(e) => return Err(e),
        };
        words.extend(affine_word_indices(&offset, &basis, cm.p));
        syndromes.push(s);
    }
    // from_words rejects duplicates, which doubles as a disjointness check.
    let code = CodeSet::from_words(cm.q(), cm.n, words)?;
    Ok((code, syndromes))
}

/// The 2x2 quotient matrix of a completely regular code of covering radius 1
/// in H(n, q): row one counts neighbors of a codeword (inside, outside), row
/// two neighbors of a non-codeword.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub lambda: u64,
    pub mu: u64,
    pub n: usize,
    pub q: u64,
}

impl QuotientMatrix {
    pub fn rows(&self) -> [[u64; 2]; 2] {
        let degree = (self.q - 1) * self.n as u64;
        [
            [self.lambda, degree - self.lambda],
            [self.mu, degree - self.mu],
        ]
    }
}

impl fmt::Display for QuotientMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.rows();
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            r[0][0], r[0][1], r[1][0], r[1][1]
        )
    }
}

fn word_string(q: u64, n: usize, idx: u64) -> String {
    let word = word_from_index(q, n, idx);
    if q <= 36 {
        word.iter()
            .map(|&d| digit_char(d).expect("digit below radix 36"))
            .collect()
    } else {
        format!("{word:?}")
    }
}

/// Two vertices whose balls (or punctured balls) contain different numbers
/// of codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountWitness {
    pub q: u64,
    pub n: usize,
    pub vertex_a: u64,
    pub count_a: u64,
    pub vertex_b: u64,
    pub count_b: u64,
}

impl fmt::Display for CountWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} sees {} codewords but vertex {} sees {}",
            word_string(self.q, self.n, self.vertex_a),
            self.count_a,
            word_string(self.q, self.n, self.vertex_b),
            self.count_b
        )
    }
}

/// Outcome of the exhaustive multifold-perfection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectVerdict {
    /// Every radius-1 ball contains exactly mu codewords.
    Perfect { mu: u64 },
    NotPerfect { witness: CountWitness },
}

/// Outcome of the exhaustive complete-regularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularVerdict {
    Regular(QuotientMatrix),
    /// Two codewords (in_code) or two non-codewords (!in_code) with a
    /// different number of code neighbors.
    NotRegular { in_code: bool, witness: CountWitness },
}

/// Per-vertex codeword counts: ball counts when `include_self`, punctured
/// (neighbors only) otherwise. Caller has bounded vertex_count by cap.
fn sweep_counts(code: &CodeSet, include_self: bool) -> Vec<u64> {
    let q = code.q;
    let n = code.n;
    let total = code.vertex_count;
    let mut member = vec![false; total as usize];
    for &w in code.words() {
        member[w as usize] = true;
    }
    let powers: Vec<u64> = (0..n).rev().map(|e| q.pow(e as u32)).collect();
    let mut counts = vec![0u64; total as usize];
    for v in 0..total {
        let mut count = 0u64;
        if include_self && member[v as usize] {
            count += 1;
        }
        let mut rem = v;
        for &pw in &powers {
            let digit = rem / pw % q;
            let base = v - digit * pw;
            for d in 0..q {
                if d != digit && member[(base + d * pw) as usize] {
                    count += 1;
                }
            }
            rem %= pw;
        }
        counts[v as usize] = count;
    }
    counts
}

fn cap_check(code: &CodeSet, cap: u64) -> Result<(), Error> {
    if code.vertex_count > cap {
        return Err(Error::TooLarge {
            what: "exhaustive vertex sweep",
            base: code.q,
            exp: code.n,
            cap,
        });
    }
    if code.is_empty() || code.len() as u64 == code.vertex_count {
        return Err(Error::TrivialCode);
    }
    Ok(())
}

/// Sweep every radius-1 ball of H(n, q) and check that each contains the
/// same number of codewords. The reference is the ball at vertex 0.
pub fn verify_perfect_bruteforce(code: &CodeSet, cap: u64) -> Result<PerfectVerdict, Error> {
    cap_check(code, cap)?;
    let counts = sweep_counts(code, true);
    let mu = counts[0];
    for (v, &c) in counts.iter().enumerate() {
        if c != mu {
            return Ok(PerfectVerdict::NotPerfect {
                witness: CountWitness {
                    q: code.q,
                    n: code.n,
                    vertex_a: 0,
                    count_a: mu,
                    vertex_b: v as u64,
                    count_b: c,
                },
            });
        }
    }
    Ok(PerfectVerdict::Perfect { mu })
}

/// Sweep every vertex of H(n, q) and check complete regularity with covering
/// radius 1: all codewords share one code-neighbor count, all non-codewords
/// another. A connected graph rules out a uniform zero count outside.
pub fn verify_cr1_bruteforce(code: &CodeSet, cap: u64) -> Result<RegularVerdict, Error> {
    cap_check(code, cap)?;
    let counts = sweep_counts(code, false);
    let mut in_ref: Option<u64> = None;
    let mut out_ref: Option<u64> = None;
    let mut lambda = 0;
    let mut mu = 0;
    for (v, &c) in counts.iter().enumerate() {
        let inside = code.contains_index(v as u64);
        let slot = if inside { &mut in_ref } else { &mut out_ref };
        match *slot {
            None => {
                *slot = Some(v as u64);
                if inside {
                    lambda = c;
                } else {
                    mu = c;
                }
            }
            Some(first) => {
                let expected = if inside { lambda } else { mu };
                if c != expected {
                    return Ok(RegularVerdict::NotRegular {
                        in_code: inside,
                        witness: CountWitness {
                            q: code.q,
                            n: code.n,
                            vertex_a: first,
                            count_a: expected,
                            vertex_b: v as u64,
                            count_b: c,
                        },
                    });
                }
            }
        }
    }
    debug_assert!(mu >= 1, "a proper subset of a connected graph has an outside neighbor");
    Ok(RegularVerdict::Regular(QuotientMatrix {
        lambda,
        mu,
        n: code.n,
        q: code.q,
    }))
}

/// Structural verdict for the kernel of a full-row-rank check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralVerdict {
    Regular(QuotientMatrix),
    NotRegular(UnevenWitness),
}

/// Decide complete regularity of the kernel without touching the graph: the
/// kernel of a full-row-rank check matrix is completely regular with
/// covering radius 1 if and only if its column blocks form a multispread,
/// and then lambda and mu transfer directly. Rank below m is refused, since
/// the equivalence needs the rows to be independent.
pub fn verify_additive_structural(cm: &CheckMatrix) -> Result<StructuralVerdict, Error> {
    let m = cm.m();
    let rank = cm.rank();
    if rank < m {
        return Err(Error::DoesNotSpan { rank, m });
    }
    match classify(&cm.to_blocks(), cm.p, cm.t, m)? {
        Classification::Spread { lambda, mu } => {
            debug_assert!(mu >= 1, "full rank forces nonzero coverage");
            Ok(StructuralVerdict::Regular(QuotientMatrix {
                lambda,
                mu,
                n: cm.n,
                q: cm.q(),
            }))
        }
        Classification::NotSpread(w) => Ok(StructuralVerdict::NotRegular(w)),
    }
}

/// A mu-fold 1-perfect code assembled from a feasibility recipe: kappa
/// cosets of the kernel of the composite multispread's check matrix.
#[derive(Debug, Clone)]
pub struct GeneralPerfectCode {
    pub recipe: Recipe,
    pub spread: Multispread,
    pub check: CheckMatrix,
    pub syndromes: Vec<FpVec>,
    /// Present when explicit enumeration was requested and fits the cap.
    pub code: Option<CodeSet>,
}

/// Construct a mu-fold 1-perfect code in H(n, q) whenever the parameters are
/// feasible. With `explicit_cap` set, the codeword list is materialized.
pub fn construct_general_perfect(
    q: u64,
    n: usize,
    mu: u64,
    explicit_cap: Option<u64>,
) -> Result<GeneralPerfectCode, Error> {
    let verdict = params::feasible_general(q, n, mu)?;
    let recipe = match verdict.recipe {
        Some(r) => r,
        None => return Err(Error::Infeasible(verdict.violated)),
    };
    debug_assert_eq!(recipe.mu_additive * recipe.kappa, mu);
    let spread = crate::multispread::composite_spread(
        recipe.p,
        recipe.t,
        recipe.m,
        recipe.alpha,
        recipe.beta,
        recipe.gamma,
    )?;
    debug_assert_eq!(spread.n(), n);
    let check = CheckMatrix::from_multispread(&spread);
    assert_eq!(check.rank(), recipe.m, "composite spreads span the syndrome space");
    let (code, syndromes) = match explicit_cap {
        Some(cap) => {
            let (cs, syn) = coset_union(&check, recipe.kappa, cap)?;
            (Some(cs), syn)
        }
        None => {
            let syn = (0..recipe.kappa)
                .map(|i| vec_from_index(recipe.p, recipe.m, i))
                .collect();
            (None, syn)
        }
    };
    Ok(GeneralPerfectCode {
        recipe,
        spread,
        check,
        syndromes,
        code,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multispread::perfect_code_spread;

    fn hamming_7_4() -> CheckMatrix {
        let ms = perfect_code_spread(2, 1, 7, 1).unwrap();
        CheckMatrix::from_multispread(&ms)
    }

    #[test]
    fn word_pvec_round_trip() {
        let w = vec![3u32, 1];
        let pv = word_to_pvec(&w, 2, 2);
        assert_eq!(pv, vec![1, 1, 0, 1]);
        assert_eq!(pvec_to_word(&pv, 2, 2), w);
        assert_eq!(word_index(4, &w), 13);
        assert_eq!(crate::ff::vec_index(2, &pv), 13);
        assert_eq!(word_from_index(4, 2, 13), w);

        let w = vec![8u32, 0, 7];
        let pv = word_to_pvec(&w, 3, 2);
        assert_eq!(pv, vec![2, 2, 0, 0, 2, 1]);
        assert_eq!(word_index(9, &w), crate::ff::vec_index(3, &pv));
        assert_eq!(pvec_to_word(&pv, 3, 2), w);
    }

    #[test]
    fn check_matrix_layout() {
        let blocks = vec![
            BlockTuple::new(vec![vec![1, 0], vec![0, 1]]).unwrap(),
            BlockTuple::new(vec![vec![1, 1], vec![0, 0]]).unwrap(),
        ];
        let cm = CheckMatrix::from_blocks(&blocks, 2, 2).unwrap();
        assert_eq!(cm.matrix().rows(), 2);
        assert_eq!(cm.matrix().cols(), 4);
        assert_eq!(cm.matrix().row(0), &[1, 0, 1, 0]);
        assert_eq!(cm.matrix().row(1), &[0, 1, 1, 0]);
        assert_eq!(cm.q(), 4);
        assert_eq!(cm.to_blocks(), blocks);
        assert_eq!(cm.syndrome(&[1, 0, 1, 0]), vec![0, 1]);
    }

    #[test]
    fn hamming_code_is_perfect() {
        let cm = hamming_7_4();
        assert_eq!((cm.n(), cm.t(), cm.m()), (7, 1, 3));
        assert_eq!(cm.rank(), 3);
        let code = kernel_code(&cm, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(code.len(), 16);
        assert!(code.contains_index(0));
        assert_eq!(
            verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap(),
            PerfectVerdict::Perfect { mu: 1 }
        );
        match verify_cr1_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap() {
            RegularVerdict::Regular(qm) => {
                assert_eq!((qm.lambda, qm.mu), (0, 1));
                assert_eq!(qm.rows(), [[0, 7], [1, 6]]);
            }
            other => panic!("expected regular, got {other:?}"),
        }
    }

    #[test]
    fn kernel_enumeration_orders_dont_matter() {
        // Same kernel through the Gray walk (p = 2) and a rebuilt odometer
        // path (force p = 3 arithmetic on a ternary example).
        let ms = perfect_code_spread(3, 1, 4, 1).unwrap();
        let cm = CheckMatrix::from_multispread(&ms);
        let code = kernel_code(&cm, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(code.len(), 9);
        assert_eq!(
            verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap(),
            PerfectVerdict::Perfect { mu: 1 }
        );
    }

    #[test]
    fn kernel_code_respects_cap() {
        let cm = hamming_7_4();
        match kernel_code(&cm, 8) {
            Err(Error::TooLarge { what, base, exp, cap }) => {
                assert_eq!(what, "explicit code enumeration");
                assert_eq!((base, exp, cap), (2, 4, 8));
            }
            other => panic!("expected a cap error, got {other:?}"),
        }
    }

    #[test]
    fn coset_union_triples_the_fold() {
        // Kernel {000, 111} in H(3, 2); three cosets give a 3-fold code.
        let ms = perfect_code_spread(2, 1, 3, 1).unwrap();
        let cm = CheckMatrix::from_multispread(&ms);
        let kernel = kernel_code(&cm, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(kernel.words(), &[0, 7]);
        let (code, syndromes) = coset_union(&cm, 3, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(code.len(), 6);
        assert_eq!(syndromes.len(), 3);
        assert_eq!(syndromes[0], vec![0, 0]);
        assert_eq!(
            verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap(),
            PerfectVerdict::Perfect { mu: 3 }
        );
    }

    #[test]
    fn coset_union_rejects_unreachable_kappa() {
        let ms = perfect_code_spread(2, 1, 3, 1).unwrap();
        let cm = CheckMatrix::from_multispread(&ms);
        assert!(matches!(coset_union(&cm, 5, DEFAULT_ENUM_CAP), Err(Error::Precondition(_))));
        assert!(matches!(coset_union(&cm, 0, DEFAULT_ENUM_CAP), Err(Error::Precondition(_))));
    }

    #[test]
    fn trivial_codes_are_refused() {
        let empty = CodeSet::from_words(2, 2, vec![]).unwrap();
        assert_eq!(
            verify_perfect_bruteforce(&empty, DEFAULT_VERIFY_CAP),
            Err(Error::TrivialCode)
        );
        let full = CodeSet::from_words(2, 1, vec![0, 1]).unwrap();
        assert_eq!(
            verify_cr1_bruteforce(&full, DEFAULT_VERIFY_CAP),
            Err(Error::TrivialCode)
        );
    }

    #[test]
    fn imperfect_code_yields_witness() {
        let code = CodeSet::from_words(2, 3, vec![0]).unwrap();
        match verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap() {
            PerfectVerdict::NotPerfect { witness } => {
                assert_eq!(witness.vertex_a, 0);
                assert_eq!(witness.count_a, 1);
                assert!(witness.count_b != 1);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn repetition_complement_pair_is_regular_but_not_perfect() {
        // {00, 11} in H(2, 2): lambda = 0, mu = 2. Complete regularity does
        // not imply multifold perfection, which needs lambda = mu - 1: the
        // ball at 00 holds one codeword, the ball at 01 holds two.
        let code = CodeSet::from_words(2, 2, vec![0, 3]).unwrap();
        match verify_cr1_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap() {
            RegularVerdict::Regular(qm) => assert_eq!((qm.lambda, qm.mu), (0, 2)),
            other => panic!("expected regular, got {other:?}"),
        }
        match verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap() {
            PerfectVerdict::NotPerfect { witness } => {
                assert_eq!(witness.count_a, 1);
                assert_eq!(witness.count_b, 2);
            }
            other => panic!("expected imperfection, got {other:?}"),
        }
    }

    #[test]
    fn structural_matches_hamming() {
        let cm = hamming_7_4();
        match verify_additive_structural(&cm).unwrap() {
            StructuralVerdict::Regular(qm) => assert_eq!((qm.lambda, qm.mu), (0, 1)),
            other => panic!("expected regular, got {other:?}"),
        }
    }

    #[test]
    fn structural_rejects_rank_deficient_matrices() {
        let mat = FpMat::from_rows(vec![vec![1, 1], vec![1, 1]]).unwrap();
        let cm = CheckMatrix::from_parts(mat, 2, 1, 2).unwrap();
        assert_eq!(
            verify_additive_structural(&cm),
            Err(Error::DoesNotSpan { rank: 1, m: 2 })
        );
    }

    #[test]
    fn structural_flags_uneven_blocks() {
        let mat = FpMat::from_rows(vec![vec![1, 0], vec![0, 1]]).unwrap();
        let cm = CheckMatrix::from_parts(mat, 2, 1, 2).unwrap();
        match verify_additive_structural(&cm).unwrap() {
            StructuralVerdict::NotRegular(w) => {
                assert!(w.count_a != w.count_b);
            }
            other => panic!("expected uneven blocks, got {other:?}"),
        }
    }

    #[test]
    fn general_construction_explicit_small() {
        let built = construct_general_perfect(4, 5, 2, Some(DEFAULT_ENUM_CAP)).unwrap();
        assert_eq!(built.recipe.kappa, 1);
        assert_eq!((built.spread.lambda(), built.spread.mu()), (1, 2));
        let code = built.code.unwrap();
        assert_eq!(code.len(), 128);
        assert_eq!(
            verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap(),
            PerfectVerdict::Perfect { mu: 2 }
        );
        match verify_cr1_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap() {
            RegularVerdict::Regular(qm) => {
                assert_eq!((qm.lambda, qm.mu), (1, 2));
                assert_eq!(qm.rows(), [[1, 14], [2, 13]]);
            }
            other => panic!("expected regular, got {other:?}"),
        }
    }

    #[test]
    fn general_construction_flagship_shape() {
        let built = construct_general_perfect(4, 13, 5, None).unwrap();
        assert_eq!(built.check.matrix().rows(), 3);
        assert_eq!(built.check.matrix().cols(), 26);
        assert_eq!(built.check.rank(), 3);
        let (rank, basis) = kernel_basis(&built.check);
        assert_eq!(rank, 3);
        assert_eq!(basis.len(), 23);
        assert!(built.code.is_none());
        assert_eq!(built.syndromes, vec![vec![0, 0, 0]]);
    }

    #[test]
    fn general_construction_coset_case() {
        let built = construct_general_perfect(2, 3, 3, Some(DEFAULT_ENUM_CAP)).unwrap();
        assert_eq!(built.recipe.kappa, 3);
        assert_eq!(built.recipe.mu_additive, 1);
        let code = built.code.unwrap();
        assert_eq!(code.len(), 6);
        assert_eq!(
            verify_perfect_bruteforce(&code, DEFAULT_VERIFY_CAP).unwrap(),
            PerfectVerdict::Perfect { mu: 3 }
        );
    }

    #[test]
    fn general_construction_rejects_infeasible() {
        match construct_general_perfect(4, 3, 5, None) {
            Err(Error::Infeasible(conds)) => {
                assert_eq!(conds, vec![crate::params::Condition::Lloyd]);
            }
            other => panic!("expected infeasibility, got {other:?}"),
        }
    }

    #[test]
    fn quotient_display() {
        let qm = QuotientMatrix {
            lambda: 4,
            mu: 5,
            n: 13,
            q: 4,
        };
        assert_eq!(qm.to_string(), "[[4, 35], [5, 34]]");
    }
}
