//! Feasibility of (q, n, mu) parameters for mu-fold 1-perfect codes and the
//! composition recipe behind the additive constructions.
//!
//! Three arithmetic conditions govern existence in H(n, q), q = p^t:
//! the cardinality K = mu * q^n / ((q-1)n + 1) must be an integer
//! ("sphere-packing"), mu must stay below the ball size ("mu-upper-bound"),
//! and n == 1 (mod q) ("lloyd", from the eigenvalue condition). An additive,
//! GF(p)-linear code additionally needs K to be a power of p ("power-of-p")
//! and, writing K = p^k and m = nt - k, either m >= t or p^(t-m) | mu
//! ("divisibility-(ii)"); given the power-of-p condition the latter is
//! equivalent to the lloyd condition, which is asserted here on every call.
//!
//! All cardinality arithmetic is exact: q^n is a big integer, never a float.

use crate::ff::is_prime;
use crate::Error;
use num_bigint::BigUint;
use std::fmt;

/// A named existence condition, as reported in verdicts and error messages.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    SpherePacking,
    PowerOfP,
    Lloyd,
    MuUpperBound,
    DivisibilityII,
}

impl Condition {
    pub fn name(&self) -> &'static str {
        match self {
            Condition::SpherePacking => "sphere-packing",
            Condition::PowerOfP => "power-of-p",
            Condition::Lloyd => "lloyd",
            Condition::MuUpperBound => "mu-upper-bound",
            Condition::DivisibilityII => "divisibility-(ii)",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Construction plan for feasible parameters.
///
/// The code is a union of `kappa` cosets of an additive `mu_additive`-fold
/// code whose kernel has GF(p)-dimension `k`; its check matrix has `m = nt - k`
/// rows and is assembled from `alpha` zero blocks, `beta` copies of a
/// projected subfield spread (with `s` deleted coordinates), and `gamma`
/// copies of a fold spread.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub p: u32,
    pub t: usize,
    pub n: usize,
    pub mu: u64,
    pub kappa: u64,
    pub mu_additive: u64,
    pub k: usize,
    pub m: usize,
    pub s: usize,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    /// K = kappa * p^k, the number of codewords.
    pub cardinality: BigUint,
}

/// Outcome of a feasibility check: either every condition holds and a recipe
/// is attached, or the violated conditions are listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub violated: Vec<Condition>,
    pub recipe: Option<Recipe>,
}

impl Verdict {
    pub fn feasible(&self) -> bool {
        self.violated.is_empty()
    }

    fn infeasible(violated: Vec<Condition>) -> Self {
        debug_assert!(!violated.is_empty());
        Verdict {
            violated,
            recipe: None,
        }
    }
}

/// |B| = (q - 1) n + 1, the number of vertices in a radius-1 ball of H(n, q).
pub fn ball_size(n: usize, q: u64) -> Result<u64, Error> {
    if n == 0 || q < 2 {
        return Err(Error::Precondition(
            "ball size needs n >= 1 and q >= 2".into(),
        ));
    }
    (q - 1)
        .checked_mul(n as u64)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::TooLarge {
            what: "ball size",
            base: q,
            exp: n,
            cap: u64::MAX,
        })
}

/// The eigenvalue (Lloyd-type) condition: n == 1 (mod q).
pub fn lloyd_check(n: usize, q: u64) -> bool {
    n as u64 % q == 1 % q
}

/// Factor q as p^t with p prime, or report that q is not a prime power.
pub fn prime_power(q: u64) -> Result<(u32, usize), Error> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut t = 0usize;
            while rest.is_multiple_of(p) {
                rest /= p;
                t += 1;
            }
            return if rest == 1 {
                Ok((p as u32, t))
            } else {
                Err(Error::NotPrimePower(q))
            };
        }
        p += 1;
    }
    Ok((q as u32, 1)) // q itself is prime
}

fn checked_pow(base: u64, exp: usize, what: &'static str) -> Result<u64, Error> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or(Error::TooLarge {
            what,
            base,
            exp,
            cap: u64::MAX,
        })
}

/// Split mu into the block counts (s, alpha, beta, gamma) used by the
/// composite spread construction, given the syndrome dimension m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MuDecomposition {
    pub s: usize,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

/// Decompose an admissible mu. With s the least nonnegative integer such that
/// t divides m + s, admissibility means mu * p^(t-s) == 1 (mod p^t - 1); when
/// m < t it additionally requires p^(t-m) | mu. Inadmissible mu is an error.
pub fn decompose_mu(p: u32, t: usize, m: usize, mu: u64) -> Result<MuDecomposition, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if t == 0 || m == 0 || mu == 0 {
        return Err(Error::Precondition(
            "decomposition needs t >= 1, m >= 1, mu >= 1".into(),
        ));
    }
    let s = (t - m % t) % t;
    let qm1 = checked_pow(p as u64, t, "block size")? - 1;
    if m >= t {
        let ps = checked_pow(p as u64, s, "projection fiber")?;
        if mu % qm1 != ps % qm1 {
            return Err(Error::Precondition(format!(
                "mu = {mu} is inadmissible: mu * {p}^({t}-{s}) != 1 (mod {qm1})"
            )));
        }
        debug_assert!(mu >= ps);
        let alpha = (mu - ps) / qm1;
        Ok(MuDecomposition {
            s,
            alpha,
            beta: 1,
            gamma: (p as u64 - 1) * alpha,
        })
    } else {
        let fiber = checked_pow(p as u64, t - m, "projection fiber")?;
        if !mu.is_multiple_of(fiber) {
            return Err(Error::Precondition(format!(
                "mu = {mu} is inadmissible: {p}^({t}-{m}) does not divide it"
            )));
        }
        let beta = mu / fiber;
        if !(beta - 1).is_multiple_of(qm1) {
            return Err(Error::Precondition(format!(
                "mu = {mu} is inadmissible: mu * {p}^({t}-{s}) != 1 (mod {qm1})"
            )));
        }
        Ok(MuDecomposition {
            s: t - m,
            alpha: (beta - 1) / qm1,
            beta,
            gamma: 0,
        })
    }
}

/// Strip the largest power of p from a big integer: returns (k, residual)
/// with value = residual * p^k and p not dividing the residual.
fn strip_p(mut value: BigUint, p: u32) -> (usize, BigUint) {
    let p_big = BigUint::from(p);
    let zero = BigUint::from(0u32);
    let mut k = 0usize;
    while value != zero && &value % &p_big == zero {
        value /= &p_big;
        k += 1;
    }
    (k, value)
}

/// Feasibility of an additive (GF(p)-linear) mu-fold 1-perfect code in
/// H(n, p^t). On success the verdict carries the construction recipe.
pub fn feasible_additive(p: u32, t: usize, n: usize, mu: u64) -> Result<Verdict, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if t == 0 || n == 0 || mu == 0 {
        return Err(Error::Precondition(
            "feasibility needs t >= 1, n >= 1, mu >= 1".into(),
        ));
    }
    let q = checked_pow(p as u64, t, "alphabet size")?;
    let ball = ball_size(n, q)?;
    let lloyd = lloyd_check(n, q);

    let mut violated = Vec::new();
    if mu >= ball {
        violated.push(Condition::MuUpperBound);
    }

    let knum = BigUint::from(mu) * BigUint::from(q).pow(n as u32);
    let ball_big = BigUint::from(ball);
    let mut power_k = None;
    if &knum % &ball_big != BigUint::from(0u32) {
        violated.push(Condition::SpherePacking);
    } else {
        let (k, residual) = strip_p(&knum / &ball_big, p);
        if residual == BigUint::from(1u32) {
            power_k = Some(k);
        } else {
            violated.push(Condition::PowerOfP);
        }
    }

    if let Some(k) = power_k {
        if mu < ball {
            let m = n * t - k;
            debug_assert!(m >= 1);
            let cond_ii = m >= t || mu.is_multiple_of(checked_pow(p as u64, t - m, "divisor")?);
            // With the cardinality a power of p, the divisibility condition
            // and the lloyd condition are equivalent.
            assert_eq!(cond_ii, lloyd, "condition equivalence broken for p={p} t={t} n={n} mu={mu}");
            if !cond_ii {
                violated.push(Condition::DivisibilityII);
                violated.push(Condition::Lloyd);
            }
            if violated.is_empty() {
                let d = decompose_mu(p, t, m, mu)?;
                let pm = checked_pow(p as u64, m, "syndrome space")?;
                debug_assert_eq!(mu * pm, ball);
                let recipe = Recipe {
                    p,
                    t,
                    n,
                    mu,
                    kappa: 1,
                    mu_additive: mu,
                    k,
                    m,
                    s: d.s,
                    alpha: d.alpha,
                    beta: d.beta,
                    gamma: d.gamma,
                    cardinality: BigUint::from(p).pow(k as u32),
                };
                debug_assert_eq!(block_count(&recipe)?, n as u64);
                return Ok(Verdict {
                    violated: vec![],
                    recipe: Some(recipe),
                });
            }
        }
    }
    Ok(Verdict::infeasible(violated))
}

/// Number of blocks the recipe assembles; always equals n for a recipe
/// produced by a feasible verdict.
fn block_count(r: &Recipe) -> Result<u64, Error> {
    let pt1 = checked_pow(r.p as u64, r.t, "block size")? - 1;
    let proj = (checked_pow(r.p as u64, r.m + r.s, "spread ambient")? - 1) / pt1;
    let fold = (checked_pow(r.p as u64, r.m, "spread ambient")? - 1) / (r.p as u64 - 1);
    Ok(r.alpha + r.beta * proj + r.gamma * fold)
}

/// Feasibility of any mu-fold 1-perfect code in H(n, q) for a prime power q.
/// On success the recipe factors K = kappa * p^k with gcd(kappa, p) = 1; the
/// code is reached as kappa cosets of an additive (mu/kappa)-fold code.
pub fn feasible_general(q: u64, n: usize, mu: u64) -> Result<Verdict, Error> {
    let (p, t) = prime_power(q)?;
    if n == 0 || mu == 0 {
        return Err(Error::Precondition("feasibility needs n >= 1, mu >= 1".into()));
    }
    let ball = ball_size(n, q)?;

    let mut violated = Vec::new();
    if mu >= ball {
        violated.push(Condition::MuUpperBound);
    }
    let knum = BigUint::from(mu) * BigUint::from(q).pow(n as u32);
    let ball_big = BigUint::from(ball);
    if &knum % &ball_big != BigUint::from(0u32) {
        violated.push(Condition::SpherePacking);
    }
    if !lloyd_check(n, q) {
        violated.push(Condition::Lloyd);
    }
    if !violated.is_empty() {
        return Ok(Verdict::infeasible(violated));
    }

    let (k, kappa_big) = strip_p(&knum / &ball_big, p);
    let kappa = u64::try_from(&kappa_big).expect("kappa divides mu, so it fits in u64");
    assert_eq!(mu % kappa, 0, "kappa must divide mu");
    let sub = feasible_additive(p, t, n, mu / kappa)?;
    let mut recipe = sub
        .recipe
        .expect("the additive sub-problem of feasible parameters is feasible");
    debug_assert_eq!(recipe.k, k);
    recipe.mu = mu;
    recipe.kappa = kappa;
    recipe.cardinality = kappa_big * BigUint::from(p).pow(k as u32);
    Ok(Verdict {
        violated: vec![],
        recipe: Some(recipe),
    })
}

/// One row of the feasibility table for H(n, q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibleRow {
    pub n: usize,
    pub mu: u64,
    pub kappa: u64,
    pub k: usize,
    /// n = 1: every ball is the whole vertex set, so any mu < q works.
    pub degenerate: bool,
}

/// Every feasible (n, mu) with n <= n_max, listed in increasing (n, mu)
/// order. Rows with kappa = 1 are purely additive; kappa > 1 means a union
/// of kappa cosets.
pub fn enumerate_feasible(q: u64, n_max: usize) -> Result<Vec<FeasibleRow>, Error> {
    prime_power(q)?;
    let mut budget: u64 = 0;
    for n in 1..=n_max {
        if lloyd_check(n, q) {
            budget = budget.saturating_add(ball_size(n, q)?);
        }
    }
    const MAX_TABLE_WORK: u64 = 1 << 20;
    if budget > MAX_TABLE_WORK {
        return Err(Error::TooLarge {
            what: "feasibility table",
            base: q,
            exp: n_max,
            cap: MAX_TABLE_WORK,
        });
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        if !lloyd_check(n, q) {
            continue;
        }
        for mu in 1..ball_size(n, q)? {
            let verdict = feasible_general(q, n, mu)?;
            if let Some(recipe) = verdict.recipe {
                rows.push(FeasibleRow {
                    n,
                    mu,
                    kappa: recipe.kappa,
                    k: recipe.k,
                    degenerate: n == 1,
                });
            }
        }
    }
    Ok(rows)
}
