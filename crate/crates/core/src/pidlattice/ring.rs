//! The two Euclidean rings: `Z` and `F_q[t]`.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Field;

/// A Euclidean domain with a finite unit group.
pub trait Pid: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Euclidean division with `size(r) < size(b)`; `b` must be nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// Euclidean size of a nonzero element.
    fn size_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    /// All units, `1` first.
    fn units(&self) -> Vec<Self::Elem>;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// The unit `u` making `u·a` the normalized associate
    /// (non-negative integer, monic polynomial).
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).1)
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        if self.is_zero(&x) {
            x
        } else {
            self.mul(&self.normalizing_unit(&x), &x)
        }
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }
}

/// The integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Pid for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        // floor division keeps |r| < |b|
        a.div_mod_floor(b)
    }
    fn size_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude().cmp(b.magnitude())
    }
    fn units(&self) -> Vec<BigInt> {
        vec![BigInt::one(), -BigInt::one()]
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude() == &BigUint::one()
    }
    fn normalizing_unit(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// Univariate polynomials over a finite field, dense, low degree first,
/// without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    field: Field,
}

impl FpPoly {
    pub fn new(field: &Field) -> FpPoly {
        FpPoly { field: field.clone() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `c_0 + c_1 t + …` from raw field values.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Vec<u32> {
        let mut v = coeffs.to_vec();
        trim(&mut v);
        v
    }

    /// The constant `c` reduced into the prime field.
    pub fn constant(&self, c: i64) -> Vec<u32> {
        self.from_coeffs(&[self.field.from_int(c)])
    }

    /// The variable `t`.
    pub fn t(&self) -> Vec<u32> {
        vec![0, 1]
    }

    pub fn degree(&self, a: &[u32]) -> Option<usize> {
        a.len().checked_sub(1)
    }
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Pid for FpPoly {
    type Elem = Vec<u32>;

    fn zero(&self) -> Vec<u32> {
        Vec::new()
    }
    fn one(&self) -> Vec<u32> {
        vec![1]
    }
    fn is_zero(&self, a: &Vec<u32>) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut out: Vec<u32> = (0..n)
            .map(|i| self.field.add(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0)))
            .collect();
        trim(&mut out);
        out
    }
    fn sub(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        let nb: Vec<u32> = b.iter().map(|&c| self.field.neg(c)).collect();
        self.add(a, &nb)
    }
    fn mul(&self, a: &Vec<u32>, b: &Vec<u32>) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.field.add(out[i + j], self.field.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }
    fn div_rem(&self, a: &Vec<u32>, b: &Vec<u32>) -> (Vec<u32>, Vec<u32>) {
        let lead_inv = self.field.inv(*b.last().expect("division by zero polynomial")).expect("nonzero");
        let mut r = a.clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![0u32; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = self.field.mul(*r.last().unwrap(), lead_inv);
            q[shift] = c;
            for (j, &y) in b.iter().enumerate() {
                r[shift + j] = self.field.sub(r[shift + j], self.field.mul(c, y));
            }
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }
    fn size_cmp(&self, a: &Vec<u32>, b: &Vec<u32>) -> Ordering {
        a.len().cmp(&b.len())
    }
    fn units(&self) -> Vec<Vec<u32>> {
        let mut u: Vec<Vec<u32>> = self.field.elements().filter(|&c| c != 0).map(|c| vec![c]).collect();
        u.sort_by_key(|v| v[0] != 1);
        u
    }
    fn is_unit(&self, a: &Vec<u32>) -> bool {
        a.len() == 1
    }
    fn normalizing_unit(&self, a: &Vec<u32>) -> Vec<u32> {
        match a.last() {
            Some(&c) => vec![self.field.inv(c).expect("nonzero")],
            None => vec![1],
        }
    }
    fn format(&self, a: &Vec<u32>) -> String {
        if a.is_empty() {
            return "0".into();
        }
        let coeff = |c: u32| -> String {
            if self.field.is_prime_field() {
                c.to_string()
            } else {
                let parts: Vec<String> = self.field.coords(c).iter().map(u32::to_string).collect();
                format!("[{}]", parts.join(","))
            }
        };
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => coeff(c),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{}*t", coeff(c)),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{}*t^{i}", coeff(c)),
            })
            .collect();
        terms.join(" + ")
    }
}
