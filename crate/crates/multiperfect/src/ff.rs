//! Arithmetic over GF(p) and GF(p^d), and dense linear algebra over GF(p).
//!
//! Field elements are coefficient vectors in the power basis 1, x, ..., x^(d-1),
//! reduced modulo a monic irreducible polynomial that is found deterministically,
//! so a given (p, d) always names the same field representation. Everything here
//! is exact integer arithmetic; there is no randomness and no floating point.

use crate::Error;

/// A vector over GF(p): residues in [0, p).
pub type FpVec = Vec<u32>;

/// Largest prime modulus accepted; keeps residue products inside u64.
pub const MAX_PRIME: u32 = 1 << 20;

/// Largest field order p^d a context will represent.
pub const MAX_FIELD_ORDER: u64 = 1 << 32;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    if s >= p as u64 {
        (s - p as u64) as u32
    } else {
        s as u32
    }
}

pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn pow_mod(a: u32, mut e: u64, p: u32) -> u32 {
    let mut base = a % p;
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "zero is not invertible");
    pow_mod(a, p as u64 - 2, p)
}

/// Radix-p value of a vector, leftmost coordinate most significant.
/// Index order therefore equals lexicographic coordinate order, which is the
/// order used whenever vectors of GF(p)^m are enumerated "first to last".
pub fn vec_index(p: u32, v: &[u32]) -> u64 {
    v.iter().fold(0u64, |acc, &c| acc * p as u64 + c as u64)
}

/// Inverse of [`vec_index`]: the length-m vector with the given radix-p value.
pub fn vec_from_index(p: u32, m: usize, mut idx: u64) -> FpVec {
    let mut v = vec![0u32; m];
    for i in (0..m).rev() {
        v[i] = (idx % p as u64) as u32;
        idx /= p as u64;
    }
    debug_assert_eq!(idx, 0, "index out of range for GF(p)^m");
    v
}

fn digits_low_first(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for c in out.iter_mut() {
        *c = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

// --- polynomials over GF(p), coefficient of x^i at position i ---

fn poly_eval(f: &[u32], x: u32, p: u32) -> u32 {
    f.iter()
        .rev()
        .fold(0u32, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// Remainder of a modulo a monic divisor b of degree >= 1.
fn poly_rem_monic(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let e = b.len() - 1;
    debug_assert!(e >= 1 && b[e] == 1);
    let mut r = a.to_vec();
    for i in (e..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            r[i] = 0;
            for j in 0..e {
                r[i - e + j] = sub_mod(r[i - e + j], mul_mod(c, b[j], p), p);
            }
        }
    }
    r.truncate(e);
    r
}

/// Irreducibility of a monic polynomial over GF(p): no root in GF(p) and no
/// monic divisor of degree 2..=deg/2, checked by trial division.
fn poly_is_irreducible(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    debug_assert!(d >= 1 && f[d] == 1);
    if d == 1 {
        return true;
    }
    for x in 0..p {
        if poly_eval(f, x, p) == 0 {
            return false;
        }
    }
    for e in 2..=d / 2 {
        let pe = (p as u64).pow(e as u32);
        for v in 0..pe {
            let mut g = digits_low_first(v, p, e);
            g.push(1);
            if poly_rem_monic(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree d over GF(p) whose coefficient
/// vector, read as the base-p integer c_0 + c_1 p + ... + c_(d-1) p^(d-1), is
/// smallest. Returned lowest degree first with the leading 1 included; degree
/// 1 yields x itself.
pub fn find_irreducible(p: u32, d: usize) -> Result<Vec<u32>, Error> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 {
        return Err(Error::Precondition(
            "extension degree must be at least 1".into(),
        ));
    }
    let pd = (p as u64)
        .checked_pow(d as u32)
        .filter(|&n| n <= MAX_FIELD_ORDER)
        .ok_or(Error::TooLarge {
            what: "field order",
            base: p as u64,
            exp: d,
            cap: MAX_FIELD_ORDER,
        })?;
    for v in 0..pd {
        let mut f = digits_low_first(v, p, d);
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// An element of GF(p^d): power-basis coefficients, lowest degree first,
/// always of length d and fully reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coeffs: Vec<u32>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Arithmetic context for GF(p^d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    p: u32,
    d: usize,
    modulus: Vec<u32>,
    order: u64,
}

impl FieldCtx {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self, Error> {
        Self::extension(p, 1)
    }

    /// GF(p^d) with the deterministic modulus from [`find_irreducible`].
    pub fn extension(p: u32, d: usize) -> Result<Self, Error> {
        if is_prime(p) && p > MAX_PRIME {
            return Err(Error::Precondition(format!(
                "prime modulus {p} exceeds the supported bound {MAX_PRIME}"
            )));
        }
        let modulus = find_irreducible(p, d)?;
        let order = (p as u64).pow(d as u32);
        Ok(FieldCtx {
            p,
            d,
            modulus,
            order,
        })
    }

    /// GF(p^d) with an explicitly supplied monic modulus, rejected unless the
    /// polynomial is irreducible over GF(p).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::Precondition(format!(
                "prime modulus {p} exceeds the supported bound {MAX_PRIME}"
            )));
        }
        if modulus.len() < 2 {
            return Err(Error::Precondition(
                "modulus must have degree at least 1".into(),
            ));
        }
        let d = modulus.len() - 1;
        if modulus[d] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Precondition(
                "modulus must be monic with coefficients in [0, p)".into(),
            ));
        }
        let order = (p as u64)
            .checked_pow(d as u32)
            .filter(|&n| n <= MAX_FIELD_ORDER)
            .ok_or(Error::TooLarge {
                what: "field order",
                base: p as u64,
                exp: d,
                cap: MAX_FIELD_ORDER,
            })?;
        if !poly_is_irreducible(&modulus, p) {
            return Err(Error::NotIrreducible { p });
        }
        Ok(FieldCtx {
            p,
            d,
            modulus,
            order,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Modulus coefficients, lowest degree first, leading 1 included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// p^d, the number of field elements.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.d],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.monomial(0)
    }

    /// x^k as a field element; requires k < d.
    pub fn monomial(&self, k: usize) -> FieldElem {
        assert!(k < self.d, "monomial degree {k} outside the power basis");
        let mut coeffs = vec![0; self.d];
        coeffs[k] = 1;
        FieldElem { coeffs }
    }

    pub fn from_coeffs(&self, coeffs: FpVec) -> Result<FieldElem, Error> {
        if coeffs.len() != self.d {
            return Err(Error::AmbientMismatch(format!(
                "expected {} coefficients, got {}",
                self.d,
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Precondition(
                "coefficient out of range for GF(p)".into(),
            ));
        }
        Ok(FieldElem { coeffs })
    }

    /// The element whose coefficient of x^i is the p^i digit of v.
    pub fn from_value(&self, v: u64) -> FieldElem {
        assert!(v < self.order, "value out of range for the field");
        FieldElem {
            coeffs: digits_low_first(v, self.p, self.d),
        }
    }

    pub fn value(&self, a: &FieldElem) -> u64 {
        a.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64)
    }

    /// All field elements in ascending [`value`](Self::value) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order).map(move |v| self.from_value(v))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| add_mod(x, y, self.p))
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| sub_mod(x, y, self.p))
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        let p = self.p;
        let d = self.d;
        let mut buf = vec![0u32; 2 * d - 1];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                buf[i + j] = add_mod(buf[i + j], mul_mod(ai, bj, p), p);
            }
        }
        for i in (d..buf.len()).rev() {
            let c = buf[i];
            if c != 0 {
                buf[i] = 0;
                for j in 0..d {
                    buf[i - d + j] = sub_mod(buf[i - d + j], mul_mod(c, self.modulus[j], p), p);
                }
            }
        }
        buf.truncate(d);
        FieldElem { coeffs: buf }
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem, Error> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn pow(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Power-basis coordinates of a as a vector in GF(p)^d. The map is
    /// GF(p)-linear and bijective.
    pub fn elem_to_vec(&self, a: &FieldElem) -> FpVec {
        self.check(a);
        a.coeffs.clone()
    }

    /// Order of a nonzero element in the multiplicative group.
    pub fn multiplicative_order(&self, a: &FieldElem) -> Result<u64, Error> {
        if a.is_zero() {
            return Err(Error::Precondition(
                "the zero element has no multiplicative order".into(),
            ));
        }
        let group = self.order - 1;
        let mut ord = group;
        for (f, _) in factorize(group) {
            while ord.is_multiple_of(f) && self.pow(a, ord / f) == self.one() {
                ord /= f;
            }
        }
        Ok(ord)
    }

    /// The first multiplicative generator in element value order.
    pub fn generator(&self) -> FieldElem {
        let group = self.order - 1;
        let factors = factorize(group);
        'outer: for v in 1..self.order {
            let a = self.from_value(v);
            for &(f, _) in &factors {
                if self.pow(&a, group / f) == self.one() {
                    continue 'outer;
                }
            }
            return a;
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    fn check(&self, a: &FieldElem) {
        debug_assert_eq!(a.coeffs.len(), self.d, "element from a different field");
    }
}

/// A dense matrix over GF(p), row major. The modulus accompanies each
/// operation rather than the value; entries are expected to be reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FpMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<FpVec>) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::Precondition("a matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Precondition("matrix rows differ in length".into()));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            data.extend(r);
        }
        Ok(FpMat {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn mul_vec(&self, v: &[u32], p: u32) -> FpVec {
        assert_eq!(v.len(), self.cols, "vector length must match matrix columns");
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (c, &vc) in v.iter().enumerate() {
                    acc = (acc + self.get(r, c) as u64 * vc as u64) % p as u64;
                }
                acc as u32
            })
            .collect()
    }

    /// Reduced row echelon form under a fixed pivot rule: columns are scanned
    /// left to right and the surviving row with the smallest index supplies
    /// each pivot. Returns the reduced matrix and the pivot columns in order.
    pub fn rref(&self, p: u32) -> (FpMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for col in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(pr) = (next..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            m.swap_rows(next, pr);
            let inv = inv_mod(m.get(next, col), p);
            for c in col..m.cols {
                m.set(next, c, mul_mod(m.get(next, c), inv, p));
            }
            for r in 0..m.rows {
                if r == next {
                    continue;
                }
                let f = m.get(r, col);
                if f != 0 {
                    for c in col..m.cols {
                        let v = sub_mod(m.get(r, c), mul_mod(f, m.get(next, c), p), p);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        (m, pivots)
    }

    /// Rank and a deterministic kernel basis: one vector per free column, in
    /// ascending column order. rank + basis.len() == cols always holds.
    pub fn rank_kernel(&self, p: u32) -> (usize, Vec<FpVec>) {
        let (r, pivots) = self.rref(p);
        let rank = pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut kernel = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                let c = r.get(row, free);
                if c != 0 {
                    v[pc] = p - c;
                }
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    /// The solution of self * x = rhs with every free variable set to zero.
    pub fn solve(&self, rhs: &[u32], p: u32) -> Result<FpVec, Error> {
        if rhs.len() != self.rows {
            return Err(Error::AmbientMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let mut aug = FpMat::zeros(self.rows, self.cols + 1);
        for (r, &b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b);
        }
        let (red, pivots) = aug.rref(p);
        if pivots.last() == Some(&self.cols) {
            return Err(Error::InconsistentSystem);
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(row, self.cols);
        }
        Ok(x)
    }
}

impl std::ops::Index<(usize, usize)> for FpMat {
    type Output = u32;

    fn index(&self, (r, c): (usize, usize)) -> &u32 {
        &self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
    }

    // Independent route to reducibility: a monic polynomial of degree d is
    // reducible exactly when it is a product of monic factors of degrees
    // (e, d - e). Multiply all such pairs and mark the products.
    fn reducible_set(p: u32, d: usize) -> std::collections::HashSet<Vec<u32>> {
        fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
            let mut out = vec![0u32; a.len() + b.len() - 1];
            for (i, &ai) in a.iter().enumerate() {
                for (j, &bj) in b.iter().enumerate() {
                    out[i + j] = add_mod(out[i + j], mul_mod(ai, bj, p), p);
                }
            }
            out
        }
        let monics = |e: usize| -> Vec<Vec<u32>> {
            (0..(p as u64).pow(e as u32))
                .map(|v| {
                    let mut f = digits_low_first(v, p, e);
                    f.push(1);
                    f
                })
                .collect()
        };
        let mut set = std::collections::HashSet::new();
        for e in 1..=d / 2 {
            for a in monics(e) {
                for b in monics(d - e) {
                    set.insert(mul(&a, &b, p));
                }
            }
        }
        set
    }

    #[test]
    fn find_irreducible_is_minimal() {
        for &(p, d) in &[(2u32, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (5, 3)] {
            let reducible = reducible_set(p, d);
            let found = find_irreducible(p, d).unwrap();
            assert!(!reducible.contains(&found), "GF({p}), degree {d}");
            let value = found[..d]
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc * p as u64 + c as u64);
            for v in 0..value {
                let mut f = digits_low_first(v, p, d);
                f.push(1);
                assert!(reducible.contains(&f), "smaller candidate missed in GF({p})^{d}");
            }
        }
    }

    #[test]
    fn gf8_multiplication() {
        let ctx = FieldCtx::extension(2, 3).unwrap();
        assert_eq!(ctx.modulus(), &[1, 1, 0, 1]);
        let x = ctx.monomial(1);
        let x2 = ctx.monomial(2);
        assert_eq!(ctx.mul(&x, &x2).coeffs(), &[1, 1, 0]);
    }

    #[test]
    fn gf5_inverse() {
        let ctx = FieldCtx::prime(5).unwrap();
        let two = ctx.from_value(2);
        assert_eq!(ctx.inv(&two).unwrap(), ctx.from_value(3));
        assert_eq!(ctx.inv(&ctx.zero()), Err(Error::ZeroInverse));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for ctx in [FieldCtx::extension(2, 3).unwrap(), FieldCtx::extension(3, 2).unwrap()] {
            let elems: Vec<FieldElem> = ctx.elements().collect();
            for a in &elems {
                assert_eq!(ctx.add(a, &ctx.zero()), *a);
                assert_eq!(ctx.mul(a, &ctx.one()), *a);
                assert_eq!(ctx.add(a, &ctx.neg(a)), ctx.zero());
                if !a.is_zero() {
                    let inv = ctx.inv(a).unwrap();
                    assert_eq!(ctx.mul(a, &inv), ctx.one());
                    assert_eq!(ctx.pow(a, ctx.order() - 1), ctx.one());
                }
                for b in &elems {
                    assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                    for c in &elems {
                        assert_eq!(ctx.mul(&ctx.mul(a, b), c), ctx.mul(a, &ctx.mul(b, c)));
                        assert_eq!(
                            ctx.mul(a, &ctx.add(b, c)),
                            ctx.add(&ctx.mul(a, b), &ctx.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn power_basis_coordinates() {
        let ctx = FieldCtx::extension(2, 3).unwrap();
        assert_eq!(ctx.elem_to_vec(&ctx.zero()), vec![0, 0, 0]);
        let x_plus_1 = ctx.add(&ctx.monomial(1), &ctx.one());
        assert_eq!(ctx.elem_to_vec(&x_plus_1), vec![1, 1, 0]);

        let ctx9 = FieldCtx::extension(3, 2).unwrap();
        assert_eq!(ctx9.modulus(), &[1, 0, 1]);
        let two_x = ctx9.from_coeffs(vec![0, 2]).unwrap();
        assert_eq!(ctx9.elem_to_vec(&two_x), vec![0, 2]);
    }

    #[test]
    fn elem_to_vec_is_additive_and_bijective() {
        let ctx = FieldCtx::extension(3, 2).unwrap();
        let mut seen = std::collections::HashSet::new();
        for a in ctx.elements() {
            assert!(seen.insert(ctx.elem_to_vec(&a)));
            for b in ctx.elements() {
                let lhs = ctx.elem_to_vec(&ctx.add(&a, &b));
                let rhs: FpVec = ctx
                    .elem_to_vec(&a)
                    .iter()
                    .zip(ctx.elem_to_vec(&b))
                    .map(|(&x, y)| add_mod(x, y, 3))
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn generators() {
        let ctx4 = FieldCtx::extension(2, 2).unwrap();
        let g = ctx4.generator();
        assert_eq!(ctx4.multiplicative_order(&g).unwrap(), 3);
        assert_eq!(ctx4.value(&g), 2); // x is the first generator in value order

        for ctx in [
            FieldCtx::prime(7).unwrap(),
            FieldCtx::extension(2, 4).unwrap(),
            FieldCtx::extension(3, 3).unwrap(),
        ] {
            let g = ctx.generator();
            assert_eq!(ctx.multiplicative_order(&g).unwrap(), ctx.order() - 1);
        }
    }

    #[test]
    fn with_modulus_checks_irreducibility() {
        assert_eq!(
            FieldCtx::with_modulus(2, vec![1, 0, 1]),
            Err(Error::NotIrreducible { p: 2 })
        );
        let ctx = FieldCtx::with_modulus(3, vec![1, 0, 1]).unwrap();
        assert_eq!(ctx.order(), 9);
        assert_eq!(FieldCtx::with_modulus(4, vec![1, 1]), Err(Error::NotPrime(4)));
    }

    #[test]
    fn vector_indexing_round_trip() {
        assert_eq!(vec_index(2, &[1, 0, 1]), 5);
        assert_eq!(vec_from_index(3, 3, 5), vec![0, 1, 2]);
        for p in [2u32, 3, 5] {
            for idx in 0..(p as u64).pow(3) {
                assert_eq!(vec_index(p, &vec_from_index(p, 3, idx)), idx);
            }
        }
    }

    #[test]
    fn rank_kernel_examples() {
        let (rank, kernel) = FpMat::identity(3).rank_kernel(2);
        assert_eq!((rank, kernel), (3, vec![]));

        let (rank, kernel) = FpMat::zeros(2, 4).rank_kernel(3);
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 4);

        let m = FpMat::from_rows(vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let (rank, kernel) = m.rank_kernel(2);
        assert_eq!(rank, 2);
        assert_eq!(kernel, vec![vec![1, 1, 1]]);
    }

    // Every matrix of a small shape, checked against direct enumeration of
    // {v : Mv = 0}.
    #[test]
    fn rank_kernel_matches_bruteforce() {
        fn all_vecs(p: u32, n: usize) -> Vec<FpVec> {
            (0..(p as u64).pow(n as u32))
                .map(|i| vec_from_index(p, n, i))
                .collect()
        }
        for (p, rows, cols) in [(2u32, 2usize, 3usize), (3, 2, 2)] {
            for mi in 0..(p as u64).pow((rows * cols) as u32) {
                let flat = vec_from_index(p, rows * cols, mi);
                let m = FpMat::from_rows(flat.chunks(cols).map(|c| c.to_vec()).collect()).unwrap();
                let brute: Vec<FpVec> = all_vecs(p, cols)
                    .into_iter()
                    .filter(|v| m.mul_vec(v, p).iter().all(|&s| s == 0))
                    .collect();
                let (rank, basis) = m.rank_kernel(p);
                assert_eq!(rank + basis.len(), cols);
                let mut spanned: Vec<FpVec> = Vec::new();
                for ci in 0..(p as u64).pow(basis.len() as u32) {
                    let coeffs = vec_from_index(p, basis.len(), ci);
                    let mut v = vec![0u32; cols];
                    for (b, &c) in basis.iter().zip(&coeffs) {
                        for (vi, &bi) in v.iter_mut().zip(b) {
                            *vi = add_mod(*vi, mul_mod(c, bi, p), p);
                        }
                    }
                    spanned.push(v);
                }
                spanned.sort();
                spanned.dedup();
                let mut brute_sorted = brute;
                brute_sorted.sort();
                assert_eq!(spanned, brute_sorted, "p={p} matrix {mi}");
            }
        }
    }

    #[test]
    fn solve_examples() {
        let m = FpMat::from_rows(vec![vec![1, 1]]).unwrap();
        assert_eq!(m.solve(&[1], 2).unwrap(), vec![1, 0]);

        let id = FpMat::identity(3);
        assert_eq!(id.solve(&[2, 0, 1], 3).unwrap(), vec![2, 0, 1]);

        let zero = FpMat::zeros(1, 2);
        assert_eq!(zero.solve(&[1], 2), Err(Error::InconsistentSystem));
    }

    #[test]
    fn solve_matches_bruteforce() {
        for mi in 0..(2u64).pow(6) {
            let flat = vec_from_index(2, 6, mi);
            let m = FpMat::from_rows(flat.chunks(3).map(|c| c.to_vec()).collect()).unwrap();
            for ri in 0..4u64 {
                let rhs = vec_from_index(2, 2, ri);
                let brute_solvable = (0..8u64).any(|vi| {
                    let v = vec_from_index(2, 3, vi);
                    m.mul_vec(&v, 2) == rhs
                });
                match m.solve(&rhs, 2) {
                    Ok(x) => {
                        assert!(brute_solvable);
                        assert_eq!(m.mul_vec(&x, 2), rhs);
                    }
                    Err(Error::InconsistentSystem) => assert!(!brute_solvable),
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }
}
