//! Arithmetic in GF(p^e).
//!
//! Elements are encoded as integers in `[0, q)`. For prime fields the index
//! is the residue itself; for extension fields the base-`p` digits of the
//! index are the polynomial coefficients, lowest degree first, so that
//! `idx = sum(c_i * p^i)` for the element `sum(c_i * X^i)`.
//!
//! Multiplication of nonzero elements goes through exp/log tables of a fixed
//! primitive element. Addition in extension fields uses Zech logarithms:
//! `g^a + g^b = g^a (1 + g^(b-a))`, so only `q - 1` extra entries are needed.

mod poly;

pub use poly::{interpolate, Poly};

use serde::Serialize;
use thiserror::Error;

/// Largest field order accepted by [`FieldSpec::new`].
pub const MAX_FIELD_ORDER: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds the supported bound {MAX_FIELD_ORDER}")]
    TooLarge { p: u32, e: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("zero raised to non-positive power {0}")]
    ZeroPower(i64),
    #[error("element index {idx} out of range for GF({q})")]
    OutOfRange { idx: u32, q: u32 },
}

/// A field element, identified by its canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw index. Range is not checked here; use [`FieldSpec::element`]
    /// for validated construction.
    #[inline]
    pub const fn from_index(idx: u32) -> Self {
        FieldElement(idx)
    }

    #[inline]
    pub const fn idx(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
}

/// A constructed finite field. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    /// Coefficients of the defining polynomial, lowest degree first, monic.
    /// Empty for prime fields.
    modulus: Vec<u32>,
    primitive: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[d] = log(1 + g^d)`, or `NO_LOG` when `1 + g^d = 0`.
    zech: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power_parts(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Prime powers in `[lo, hi]`, ascending.
pub fn prime_powers_in(lo: u32, hi: u32) -> Vec<u32> {
    (lo.max(2)..=hi)
        .filter(|&q| prime_power_parts(q).is_some())
        .collect()
}

/// `gcd(a mod (q-1), q-1)`, with `gcd(0, q-1) = q-1`.
pub fn gcd_bar(a: i64, q: u32) -> u32 {
    let n = i64::from(q) - 1;
    debug_assert!(n >= 1);
    let r = a.rem_euclid(n);
    if r == 0 {
        n as u32
    } else {
        num_integer::gcd(r, n) as u32
    }
}

/// All `k` in `[1, n]` coprime to `n`, ascending. `units_mod(1) == [1]`.
pub fn units_mod(n: u32) -> Vec<u32> {
    assert!(n >= 1, "units_mod requires n >= 1");
    if n == 1 {
        return vec![1];
    }
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).collect()
}

/// Inverse of `k` modulo `n`, when `gcd(k, n) = 1`.
pub fn inverse_mod(k: u32, n: u32) -> Option<u32> {
    if n == 1 {
        return Some(0);
    }
    let ext = num_integer::Integer::extended_gcd(&i64::from(k), &i64::from(n));
    (ext.gcd == 1).then(|| ext.x.rem_euclid(i64::from(n)) as u32)
}

impl FieldSpec {
    /// Builds GF(p^e) with the lexicographically smallest monic irreducible
    /// modulus (compared from the highest coefficient down) and the
    /// smallest-index primitive element.
    pub fn new(p: u32, e: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(FieldError::TooLarge { p, e })?;

        let modulus = if e == 1 {
            Vec::new()
        } else {
            poly::smallest_irreducible(p, e as usize)
        };
        let arith = poly::DigitArith::new(p, e as usize, &modulus);

        let order = q - 1;
        let primitive = (1..q)
            .find(|&g| arith.multiplicative_order(g) == order)
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![NO_LOG; q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp.push(cur);
            log[cur as usize] = i;
            cur = arith.mul(cur, primitive);
        }
        debug_assert_eq!(cur, 1);

        let zech = exp
            .iter()
            .map(|&x| {
                let s = arith.add(x, 1);
                if s == 0 {
                    NO_LOG
                } else {
                    log[s as usize]
                }
            })
            .collect();

        Ok(FieldSpec {
            p,
            e,
            q,
            modulus,
            primitive: FieldElement(primitive),
            exp,
            log,
            zech,
        })
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn with_order(q: u32) -> Result<Self, FieldError> {
        let (p, e) = prime_power_parts(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, e)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Defining polynomial coefficients, highest degree first. Empty for
    /// prime fields.
    pub fn modulus_high_first(&self) -> Vec<u32> {
        self.modulus.iter().rev().copied().collect()
    }

    pub fn primitive(&self) -> FieldElement {
        self.primitive
    }

    pub fn exp_table(&self) -> &[u32] {
        &self.exp
    }

    pub fn log_table(&self) -> &[u32] {
        &self.log
    }

    pub fn element(&self, idx: u32) -> Result<FieldElement, FieldError> {
        if idx < self.q {
            Ok(FieldElement(idx))
        } else {
            Err(FieldError::OutOfRange { idx, q: self.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    /// Discrete log base the primitive element, `None` for zero.
    #[inline]
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        let l = self.log[a.0 as usize];
        (l != NO_LOG).then_some(l)
    }

    #[inline]
    pub fn exp(&self, i: u64) -> FieldElement {
        FieldElement(self.exp[(i % u64::from(self.q - 1)) as usize])
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.e == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= self.p { s - self.p } else { s });
        }
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let order = self.q - 1;
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + order - la };
        match self.zech[d as usize] {
            NO_LOG => FieldElement::ZERO,
            z => {
                let s = la + z;
                FieldElement(self.exp[(if s >= order { s - order } else { s }) as usize])
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.0 == 0 || self.p == 2 {
            return a;
        }
        if self.e == 1 {
            return FieldElement(self.p - a.0);
        }
        // -1 = g^((q-1)/2) in odd characteristic
        let order = self.q - 1;
        let s = self.log[a.0 as usize] + order / 2;
        FieldElement(self.exp[(if s >= order { s - order } else { s }) as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let order = self.q - 1;
        let s = self.log[a.0 as usize] + self.log[b.0 as usize];
        FieldElement(self.exp[(if s >= order { s - order } else { s }) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::InverseOfZero);
        }
        let order = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(FieldElement(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Single entry point over [`ArithOp`]. Binary ops require `b`.
    pub fn arith(
        &self,
        op: ArithOp,
        a: FieldElement,
        b: Option<FieldElement>,
    ) -> Result<FieldElement, FieldError> {
        let rhs = || b.expect("binary field operation requires a second operand");
        Ok(match op {
            ArithOp::Add => self.add(a, rhs()),
            ArithOp::Sub => self.sub(a, rhs()),
            ArithOp::Mul => self.mul(a, rhs()),
            ArithOp::Neg => self.neg(a),
            ArithOp::Inv => self.inv(a)?,
        })
    }

    /// `a^m` for any integer `m`; negative exponents go through the inverse.
    pub fn pow(&self, a: FieldElement, m: i64) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return if m >= 1 {
                Ok(FieldElement::ZERO)
            } else {
                Err(FieldError::ZeroPower(m))
            };
        }
        Ok(self.pow_nonzero(a, m))
    }

    /// `a^m` for `m >= 1`, never fails.
    #[inline]
    pub fn pow_pos(&self, a: FieldElement, m: u32) -> FieldElement {
        debug_assert!(m >= 1);
        if a.0 == 0 {
            FieldElement::ZERO
        } else {
            self.pow_nonzero(a, i64::from(m))
        }
    }

    #[inline]
    fn pow_nonzero(&self, a: FieldElement, m: i64) -> FieldElement {
        let order = i64::from(self.q - 1);
        let l = i64::from(self.log[a.0 as usize]);
        let i = (l * m.rem_euclid(order)).rem_euclid(order);
        FieldElement(self.exp[i as usize])
    }

    /// Base-`p` digits of an element, lowest degree first, length `e`.
    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.e as usize);
        let mut x = a.0;
        for _ in 0..self.e {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_and_square_of_x() {
        let f = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f.modulus_high_first(), vec![1, 1, 1]);
        let x = FieldElement::from_index(2);
        assert_eq!(f.mul(x, x), FieldElement::from_index(3));
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f.modulus_high_first(), vec![1, 0, 1]);
    }

    #[test]
    fn gf5_primitive_is_2() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert!(f.modulus_high_first().is_empty());
        assert_eq!(f.primitive(), FieldElement::from_index(2));
        let e = |i| FieldElement::from_index(i);
        assert_eq!(f.mul(e(2), e(3)), e(1));
        assert_eq!(f.pow(e(2), 3).unwrap(), e(3));
    }

    #[test]
    fn gf3_frobenius_example() {
        let f = FieldSpec::new(3, 1).unwrap();
        let two = FieldElement::from_index(2);
        assert_eq!(f.pow(two, 3).unwrap(), two);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldSpec::new(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(FieldSpec::new(3, 0), Err(FieldError::ZeroDegree));
        assert!(matches!(
            FieldSpec::new(2, 17),
            Err(FieldError::TooLarge { .. })
        ));
        assert!(FieldSpec::new(2, 16).is_ok());
        let f = FieldSpec::new(7, 1).unwrap();
        assert_eq!(f.inv(FieldElement::ZERO), Err(FieldError::InverseOfZero));
        assert_eq!(f.pow(FieldElement::ZERO, 0), Err(FieldError::ZeroPower(0)));
        assert_eq!(
            f.pow(FieldElement::ZERO, -2),
            Err(FieldError::ZeroPower(-2))
        );
        assert_eq!(f.pow(FieldElement::ZERO, 5), Ok(FieldElement::ZERO));
        assert!(f.element(7).is_err());
    }

    #[test]
    fn negative_exponent_uses_inverse() {
        let f = FieldSpec::new(11, 1).unwrap();
        for a in f.nonzero_elements() {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.pow(a, -1).unwrap(), inv);
            assert_eq!(f.pow(a, -3).unwrap(), f.pow(inv, 3).unwrap());
        }
    }

    #[test]
    fn gcd_bar_examples() {
        assert_eq!(gcd_bar(4, 17), 4);
        assert_eq!(gcd_bar(0, 11), 10);
        assert_eq!(gcd_bar(-1, 3), 1);
        assert_eq!(gcd_bar(12, 17), 4);
        assert_eq!(gcd_bar(-3, 17), 1);
        assert_eq!(gcd_bar(5, 2), 1);
    }

    #[test]
    fn units_mod_examples() {
        assert_eq!(units_mod(4), vec![1, 3]);
        assert_eq!(units_mod(1), vec![1]);
        assert_eq!(units_mod(10), vec![1, 3, 7, 9]);
    }

    #[test]
    fn inverse_mod_roundtrip() {
        for n in 1..40u32 {
            for k in units_mod(n) {
                let inv = inverse_mod(k, n).unwrap();
                assert_eq!((k * inv) % n, 1 % n);
            }
        }
        assert_eq!(inverse_mod(2, 4), None);
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_parts(27), Some((3, 3)));
        assert_eq!(prime_power_parts(12), None);
        assert_eq!(prime_power_parts(1), None);
        assert_eq!(prime_powers_in(2, 13), vec![2, 3, 4, 5, 7, 8, 9, 11, 13]);
    }
}
