//! Exact arithmetic in `F_p` and in the Artin-Schreier extension `F_{p^p}`,
//! plus dense univariate polynomials over either.

use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Default upper bound on the characteristic.
pub const DEFAULT_MAX_PRIME: u32 = 13;

/// Largest extension degree an [`ExtElem`] can hold, so `F_{p^p}` is
/// available for `p <= 7`.
pub const MAX_EXT_DEGREE: usize = 8;

/// An odd prime inside a configurable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeP(u32);

impl PrimeP {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_bound(p, DEFAULT_MAX_PRIME)
    }

    pub fn with_bound(p: u32, bound: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if p > bound {
            return Err(Error::PrimeOutOfRange { p, bound });
        }
        Ok(Self(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for PrimeP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A finite field given by a runtime descriptor.
///
/// Elements are plain `Copy` values; every operation goes through the
/// descriptor so that one element type can serve fields of different sizes.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static {
    type Elem: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static;

    fn characteristic(&self) -> u32;
    /// Degree over the prime field.
    fn degree(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under `Z -> F`.
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    /// Every element of the field, in canonical order.
    fn elements(&self) -> Vec<Self::Elem>;
    /// Coordinates over `F_p` in the field's power basis.
    fn coefficients(&self, a: Self::Elem) -> Vec<u32>;
    /// The element as a residue if it lies in `F_p`.
    fn prime_part(&self, a: Self::Elem) -> Option<u32>;

    fn order(&self) -> u64 {
        u64::from(self.characteristic()).pow(self.degree())
    }

    #[inline]
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    /// `acc + a * b`
    #[inline]
    fn mul_add(&self, acc: Self::Elem, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(acc, self.mul(a, b))
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    fn pow(&self, a: Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }
}

/// The prime field `F_p`, elements stored as least nonnegative residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: PrimeP) -> Self {
        Self { p: p.get() }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn characteristic(&self) -> u32 {
        self.p
    }

    fn degree(&self) -> u32 {
        1
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(i64::from(self.p)) as u32
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    #[inline]
    fn mul_add(&self, acc: u32, a: u32, b: u32) -> u32 {
        (acc + a * b) % self.p
    }

    fn inv(&self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, u64::from(self.p - 2)))
        }
    }

    fn elements(&self) -> Vec<u32> {
        (0..self.p).collect()
    }

    fn coefficients(&self, a: u32) -> Vec<u32> {
        vec![a]
    }

    fn prime_part(&self, a: u32) -> Option<u32> {
        Some(a)
    }
}

/// Element of `F_p[t]/(t^p - t - a)`: coefficients of `1, t, .., t^{p-1}`.
///
/// Unused trailing slots are always zero, so the derived ordering is the
/// lexicographic order on coefficient vectors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElem(pub [u8; MAX_EXT_DEGREE]);

impl fmt::Debug for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// The Artin-Schreier extension `F_p[t]/(t^p - t - a)` of degree `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinSchreierField {
    p: u32,
    a: u32,
}

/// Builds `F_{p^p} = F_p[t]/(t^p - t - a)`.
///
/// `t^p - t - a` is irreducible over `F_p` for every `a != 0`, and its roots
/// are `t + i` for `i` in `F_p`.
pub fn artin_schreier_field(p: PrimeP, a: u32) -> Result<ArtinSchreierField> {
    let pv = p.get();
    if pv as usize > MAX_EXT_DEGREE {
        return Err(Error::Unsupported(format!(
            "extension fields need p <= {MAX_EXT_DEGREE}, got {pv}"
        )));
    }
    let a = a % pv;
    if a == 0 {
        return Err(Error::ZeroArtinSchreier);
    }
    Ok(ArtinSchreierField { p: pv, a })
}

impl ArtinSchreierField {
    /// The constant term `a` of the defining polynomial.
    pub fn parameter(&self) -> u32 {
        self.a
    }

    /// The generator `t`.
    pub fn generator(&self) -> ExtElem {
        let mut c = [0u8; MAX_EXT_DEGREE];
        c[1] = 1;
        ExtElem(c)
    }

    /// Embedding of `F_p`.
    pub fn embed(&self, r: u32) -> ExtElem {
        let mut c = [0u8; MAX_EXT_DEGREE];
        c[0] = (r % self.p) as u8;
        ExtElem(c)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<ExtElem> {
        if coeffs.len() > self.p as usize {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a degree-{} extension",
                coeffs.len(),
                self.p
            )));
        }
        let mut c = [0u8; MAX_EXT_DEGREE];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = (v % self.p) as u8;
        }
        Ok(ExtElem(c))
    }
}

impl Field for ArtinSchreierField {
    type Elem = ExtElem;

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn degree(&self) -> u32 {
        self.p
    }

    fn zero(&self) -> ExtElem {
        ExtElem([0; MAX_EXT_DEGREE])
    }

    fn one(&self) -> ExtElem {
        self.embed(1)
    }

    fn from_int(&self, n: i64) -> ExtElem {
        self.embed(n.rem_euclid(i64::from(self.p)) as u32)
    }

    #[inline]
    fn add(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let p = self.p as u8;
        let mut out = [0u8; MAX_EXT_DEGREE];
        for k in 0..self.p as usize {
            let s = a.0[k] + b.0[k];
            out[k] = if s >= p { s - p } else { s };
        }
        ExtElem(out)
    }

    #[inline]
    fn neg(&self, a: ExtElem) -> ExtElem {
        let p = self.p as u8;
        let mut out = [0u8; MAX_EXT_DEGREE];
        for k in 0..self.p as usize {
            out[k] = if a.0[k] == 0 { 0 } else { p - a.0[k] };
        }
        ExtElem(out)
    }

    fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let n = self.p as usize;
        let mut buf = [0u32; 2 * MAX_EXT_DEGREE];
        for i in 0..n {
            let ai = u32::from(a.0[i]);
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                buf[i + j] += ai * u32::from(b.0[j]);
            }
        }
        // t^k = t^{k-p} (t + a) for k >= p
        for k in (n..2 * n - 1).rev() {
            let c = buf[k] % self.p;
            if c != 0 {
                buf[k - n + 1] += c;
                buf[k - n] += c * self.a;
            }
            buf[k] = 0;
        }
        let mut out = [0u8; MAX_EXT_DEGREE];
        for k in 0..n {
            out[k] = (buf[k] % self.p) as u8;
        }
        ExtElem(out)
    }

    fn inv(&self, a: ExtElem) -> Option<ExtElem> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.order() - 2))
        }
    }

    fn elements(&self) -> Vec<ExtElem> {
        let n = self.p as usize;
        let total = self.order() as usize;
        let mut out = Vec::with_capacity(total);
        let mut c = [0u8; MAX_EXT_DEGREE];
        for _ in 0..total {
            out.push(ExtElem(c));
            // little-endian counter over the last coefficient first keeps the
            // output sorted lexicographically
            for k in (0..n).rev() {
                c[k] += 1;
                if u32::from(c[k]) < self.p {
                    break;
                }
                c[k] = 0;
            }
        }
        out
    }

    fn coefficients(&self, a: ExtElem) -> Vec<u32> {
        a.0[..self.p as usize].iter().map(|&c| u32::from(c)).collect()
    }

    fn prime_part(&self, a: ExtElem) -> Option<u32> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(u32::from(a.0[0]))
        } else {
            None
        }
    }
}

/// Legendre symbol of a prime-field element: `1`, `0` or `-1`.
pub fn legendre<F: Field>(field: &F, a: F::Elem) -> Result<i8> {
    let r = field.prime_part(a).ok_or(Error::NotInPrimeField)?;
    let p = field.characteristic();
    if r == 0 {
        return Ok(0);
    }
    let fp = PrimeField { p };
    Ok(if fp.pow(r, u64::from((p - 1) / 2)) == 1 { 1 } else { -1 })
}

/// The square root `omega` of a residue `alpha` with `1 <= omega <= (p-1)/2`,
/// or `0` when `alpha = 0`.
pub fn omega_of_alpha<F: Field>(field: &F, alpha: F::Elem) -> Result<u32> {
    let r = field.prime_part(alpha).ok_or(Error::NotInPrimeField)?;
    let p = field.characteristic();
    (0..=(p - 1) / 2)
        .find(|&w| (w * w) % p == r)
        .ok_or(Error::NonResidue(r))
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poly").field("coeffs", &self.coeffs).finish()
    }
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|&c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn from_ints(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&n| field.from_int(n)).collect();
        Self::new(field, c)
    }

    pub fn zero(field: F) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `x - r`
    pub fn linear(field: F, r: F::Elem) -> Self {
        let one = field.one();
        let c0 = field.neg(r);
        Self::new(field, vec![c0, one])
    }

    /// `c * x^n`
    pub fn monomial(field: F, c: F::Elem, n: usize) -> Self {
        let mut v = vec![field.zero(); n + 1];
        v[n] = c;
        Self::new(field, v)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<F::Elem> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(f.zero());
                let b = other.coeffs.get(i).copied().unwrap_or(f.zero());
                f.add(a, b)
            })
            .collect();
        Self::new(f.clone(), c)
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|&a| self.field.neg(a)).collect();
        Self::new(self.field.clone(), c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: F::Elem) -> Self {
        let c = self.coeffs.iter().map(|&a| self.field.mul(a, s)).collect();
        Self::new(self.field.clone(), c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let mut c = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(c[i + j], a, b);
            }
        }
        Self::new(f.clone(), c)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.field.clone(), self.field.one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let f = &self.field;
        let dd = divisor.degree()?;
        let lead_inv = f.inv(divisor.leading()?)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if f.is_zero(c) {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        Some((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    /// `self / divisor`, failing unless the division is exact.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self> {
        match self.div_rem(divisor) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::NotDivisible),
        }
    }

    pub fn evaluate(&self, x: F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// All roots in the field with multiplicities, found by scanning every
    /// element. Roots come out in the field's canonical element order.
    pub fn roots_with_multiplicity(&self) -> Vec<(F::Elem, usize)> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        for x in self.field.elements() {
            if !self.field.is_zero(self.evaluate(x)) {
                continue;
            }
            let lin = Self::linear(self.field.clone(), x);
            let mut q = self.clone();
            let mut m = 0;
            while let Ok(next) = q.exact_divide(&lin) {
                q = next;
                m += 1;
            }
            out.push((x, m));
        }
        out
    }
}
