//! Finite fields `F_{p^k}` with a deterministic choice of modulus.
//!
//! Elements are stored as `u32` values packing the coordinates of the
//! polynomial basis `1, u, …, u^{k-1}` in base `p`, low degree first. Fields
//! up to `2^20` elements get log/antilog tables; larger ones fall back to
//! polynomial arithmetic modulo the defining polynomial.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

const TABLE_LIMIT: u64 = 1 << 20;

/// A finite field `F_q`, `q = p^k`. Cheap to clone and shareable across threads.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

struct FieldInner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, low degree first, length `k + 1`. Empty when `k = 1`.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{}[mod {:?}]", self.0.p, self.0.k, self.0.modulus)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds `F_{p^k}`. The modulus is the least monic irreducible of degree
    /// `k`, comparing coefficient tuples lexicographically from the constant
    /// term upward.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k < 1 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(k).filter(|&q| q < u32::MAX as u128);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge { p, k }),
        };
        let p = p as u32;
        let modulus = if k == 1 { Vec::new() } else { least_irreducible(p, k as usize) };
        let mut inner = FieldInner { p, k, q, modulus, tables: None };
        if k > 1 && (q as u64) <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// The field with `q` elements; fails unless `q` is a prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or(Error::NotPrime(q))?;
        let mut rest = q;
        let mut k = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
        }
        Field::new(p, k)
    }

    /// Prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Defining polynomial, low degree first (empty for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    /// Packs coordinates (low degree first) into an element value.
    pub fn from_coords(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() > self.0.k as usize {
            return Err(Error::LengthMismatch { expected: self.0.k as usize, got: coords.len() });
        }
        let mut v = 0u32;
        for &c in coords.iter().rev() {
            if c >= self.0.p {
                return Err(Error::InvalidArgument(format!(
                    "coordinate {c} is not a residue mod {}",
                    self.0.p
                )));
            }
            v = v * self.0.p + c;
        }
        Ok(v)
    }

    /// Coordinates of `a`, length `k`, low degree first.
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.k as usize);
        let mut v = a;
        for _ in 0..self.0.k {
            out.push(v % self.0.p);
            v /= self.0.p;
        }
        out
    }

    /// Reduces an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            let s = a + b;
            if s >= p {
                s - p
            } else {
                s
            }
        } else if p == 2 {
            a ^ b
        } else {
            let (mut x, mut y) = (a, b);
            let mut out = 0u32;
            let mut scale = 1u32;
            for _ in 0..self.0.k {
                let d = (x % p + y % p) % p;
                out += d * scale;
                scale = scale.wrapping_mul(p);
                x /= p;
                y /= p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if self.0.k == 1 {
            if a == 0 {
                0
            } else {
                p - a
            }
        } else if p == 2 {
            a
        } else {
            let mut x = a;
            let mut out = 0u32;
            let mut scale = 1u32;
            for _ in 0..self.0.k {
                let d = x % p;
                out += ((p - d) % p) * scale;
                scale = scale.wrapping_mul(p);
                x /= p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.0.k == 1 {
            return ((a as u64 * b as u64) % self.0.p as u64) as u32;
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.q - 1;
                let s = t.log[a as usize] + t.log[b as usize];
                t.exp[(if s >= n { s - n } else { s }) as usize]
            }
            None => slow_mul(&self.0, a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.0.k == 1 {
            return Some(inv_mod(a as i64, self.0.p as i64) as u32);
        }
        match &self.0.tables {
            Some(t) => {
                let n = self.0.q - 1;
                let l = t.log[a as usize];
                Some(t.exp[((n - l) % n) as usize])
            }
            None => Some(self.pow(a, self.0.q as u64 - 2)),
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Wraps a raw value as a checked element.
    pub fn element(&self, value: u32) -> FieldElement {
        debug_assert!(value < self.0.q);
        FieldElement { field: self.clone(), value }
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }
}

/// A field element tied to its field, with checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{:?}", self.field.coords(self.value))
        }
    }
}

impl FieldElement {
    pub fn from_coords(field: &Field, coords: &[u32]) -> Result<FieldElement> {
        Ok(field.element(field.from_coords(coords)?))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn coords(&self) -> Vec<u32> {
        self.field.coords(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let v = self.field.div(self.value, other.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.element(v))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let v = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.field.element(v))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.element(self.field.pow(self.value, e))
    }
}

/// An injection `F_q -> F_{q^l}`.
///
/// The top field is built directly as `F_{p^{kl}}` with its own least
/// irreducible modulus; the base generator maps to the least root of the base
/// modulus in the top field.
#[derive(Clone, Debug)]
pub struct ExtensionEmbedding {
    base: Field,
    top: Field,
    degree: u32,
    images: Vec<u32>,
}

impl ExtensionEmbedding {
    pub fn new(base: &Field, degree: u32) -> Result<ExtensionEmbedding> {
        if degree < 1 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        if degree == 1 {
            return Ok(ExtensionEmbedding {
                base: base.clone(),
                top: base.clone(),
                degree,
                images: base.elements().collect(),
            });
        }
        let k = base.degree().checked_mul(degree).ok_or(Error::FieldTooLarge {
            p: base.characteristic() as u64,
            k: u32::MAX,
        })?;
        let top = Field::new(base.characteristic() as u64, k)?;
        let images = if base.is_prime_field() {
            // prime subfield elements have the same packing in every extension
            base.elements().collect()
        } else {
            let modulus = base.modulus();
            let root = top
                .elements()
                .find(|&a| {
                    let mut acc = 0u32;
                    for &c in modulus.iter().rev() {
                        acc = top.add(top.mul(acc, a), c);
                    }
                    acc == 0
                })
                .ok_or_else(|| Error::Verification("base modulus has no root in extension".into()))?;
            base.elements()
                .map(|b| {
                    let mut acc = 0u32;
                    for c in base.coords(b).into_iter().rev() {
                        acc = top.add(top.mul(acc, root), c);
                    }
                    acc
                })
                .collect()
        };
        Ok(ExtensionEmbedding { base: base.clone(), top, degree, images })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn top(&self) -> &Field {
        &self.top
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn map(&self, a: u32) -> u32 {
        self.images[a as usize]
    }
}

fn inv_mod(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (m, a.rem_euclid(m));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(m)
}

fn slow_mul(f: &FieldInner, a: u32, b: u32) -> u32 {
    let p = f.p as u64;
    let k = f.k as usize;
    let da = digits(a, f.p, k);
    let db = digits(b, f.p, k);
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
        }
    }
    // reduce by the monic modulus from the top
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in f.modulus[..k].iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
        }
        prod[deg] = 0;
    }
    let mut v = 0u32;
    for &c in prod[..k].iter().rev() {
        v = v * f.p + c as u32;
    }
    v
}

fn digits(a: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(k);
    let mut v = a;
    for _ in 0..k {
        out.push(v % p);
        v /= p;
    }
    out
}

fn build_tables(f: &FieldInner) -> Tables {
    let n = f.q - 1;
    let factors = prime_factors(n as u64);
    let slow_pow = |a: u32, mut e: u64| {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = slow_mul(f, acc, base);
            }
            base = slow_mul(f, base, base);
            e >>= 1;
        }
        acc
    };
    let gen = (2..f.q)
        .find(|&g| factors.iter().all(|&l| slow_pow(g, n as u64 / l) != 1))
        .unwrap_or(1);
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; f.q as usize];
    let mut x = 1u32;
    for i in 0..n {
        exp[i as usize] = x;
        log[x as usize] = i;
        x = slow_mul(f, x, gen);
    }
    Tables { exp, log }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over `F_p`, low degree first, used for the modulus search.
mod fp_poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = super::inv_mod(m[dm] as i64, p as i64) as u64;
        while r.len() > dm {
            let top = r.len() - 1;
            let c = (r[top] as u64 * lead_inv) % p as u64;
            for (i, &mi) in m.iter().enumerate() {
                let idx = top - dm + i;
                r[idx] = ((r[idx] as u64 + (p as u64 - c) * mi as u64) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        rem(&prod, m, p)
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }
}

/// Ben-Or irreducibility test for a monic `f` of degree `k` over `F_p`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = vec![0, 1];
    let mut power = x.clone(); // x^{p^i} mod f
    for _ in 1..=k / 2 {
        // raise to the p-th power
        let mut acc = vec![1u32];
        let mut base = power.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_poly::mulmod(&acc, &base, f, p);
            }
            base = fp_poly::mulmod(&base, &base, f, p);
            e >>= 1;
        }
        power = acc;
        let mut diff = power.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_poly::trim(&mut diff);
        let g = fp_poly::gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn least_irreducible(p: u32, k: usize) -> Vec<u32> {
    // lexicographic over (c_0, c_1, ..., c_{k-1}) with c_0 most significant
    let mut lower = vec![0u32; k];
    loop {
        let mut f = lower.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        // increment with c_{k-1} as the fastest-moving digit
        let mut i = k;
        loop {
            i -= 1;
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            assert!(i > 0, "an irreducible polynomial of every degree exists");
        }
    }
}
