//! Packed monomials and monomial orders.
//!
//! A monomial in at most [`MAX_VARS`] variables is one `u64`: byte `i` holds
//! the exponent of variable `i` (`i < 7`) and the top byte holds the total
//! degree. Exponents stay below 128 so divisibility and lcm can be computed
//! bytewise without carries.

use std::cmp::Ordering;

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 7;

const EXP_MASK: u64 = 0x00FF_FFFF_FFFF_FFFF;
const HIGH: u64 = 0x0080_8080_8080_8080;

#[inline]
fn byte_sum(x: u64) -> u64 {
    let s = (x & 0x00FF_00FF_00FF_00FF) + ((x >> 8) & 0x00FF_00FF_00FF_00FF);
    let s = (s & 0x0000_FFFF_0000_FFFF) + ((s >> 16) & 0x0000_FFFF_0000_FFFF);
    (s & 0xFFFF_FFFF) + (s >> 32)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u32]) -> Result<Monomial> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: exps.len() });
        }
        let mut packed = 0u64;
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e >= 128 {
                return Err(Error::ExponentOverflow);
            }
            packed |= (e as u64) << (8 * i);
            deg += e;
        }
        if deg > 255 {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial(packed | ((deg as u64) << 56)))
    }

    pub fn var(i: usize) -> Monomial {
        assert!(i < MAX_VARS);
        Monomial((1u64 << (8 * i)) | (1u64 << 56))
    }

    #[inline]
    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xFF) as u32
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> 56) as u32
    }

    pub fn exponents(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn raw(self) -> u64 {
        self.0
    }

    /// Product, or `None` when an exponent would reach 128.
    #[inline]
    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let exps = (self.0 & EXP_MASK) + (other.0 & EXP_MASK);
        let deg = self.degree() + other.degree();
        if exps & HIGH != 0 || deg > 255 {
            return None;
        }
        Some(Monomial(exps | ((deg as u64) << 56)))
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    /// Whether `self` divides `other`.
    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        (((other.0 & EXP_MASK) | HIGH) - (self.0 & EXP_MASK)) & HIGH == HIGH
    }

    /// `other / self`; caller guarantees divisibility.
    #[inline]
    pub fn quotient_of(self, other: Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0 - self.0)
    }

    #[inline]
    pub fn lcm(self, other: Monomial) -> Monomial {
        let a = self.0 & EXP_MASK;
        let b = other.0 & EXP_MASK;
        let ge = ((a | HIGH) - b) & HIGH;
        let mask = (ge >> 7) * 0xFF;
        let exps = (a & mask) | (b & !mask & EXP_MASK);
        Monomial(exps | (byte_sum(exps) << 56))
    }

    #[inline]
    pub fn is_coprime(self, other: Monomial) -> bool {
        self.support() & other.support() == 0
    }

    /// Bitmask of the variables that occur.
    #[inline]
    pub fn support(self) -> u8 {
        let x = self.0 & EXP_MASK;
        let mut mask = 0u8;
        for i in 0..MAX_VARS {
            if (x >> (8 * i)) & 0xFF != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Monomial orders used by the Gröbner engine. Variables are ordered
/// `x_0 > x_1 > … > x_{n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    Lex,
    /// Block order: the exponent of `var` first, ties by grevlex on the rest.
    Elimination { var: usize },
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: Monomial, b: Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => (a.0 ^ EXP_MASK).cmp(&(b.0 ^ EXP_MASK)),
            MonomialOrder::Lex => (a.0 & EXP_MASK).swap_bytes().cmp(&(b.0 & EXP_MASK).swap_bytes()),
            MonomialOrder::Elimination { var } => a
                .exponent(var)
                .cmp(&b.exponent(var))
                .then_with(|| (a.0 ^ EXP_MASK).cmp(&(b.0 ^ EXP_MASK))),
        }
    }
}

/// All monomials of degree `d` in `nvars` variables, in descending grevlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i + 1 == n {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps).expect("degree fits"));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(*b, *a));
    out
}
