//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::Rng;

use super::field::{ExtensionEmbedding, Field, FieldElement};
use super::monomial::{monomials_of_degree, Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// A polynomial with terms kept in descending grevlex order and no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    nvars: usize,
    terms: Vec<(Monomial, u32)>,
}

fn desc(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(*b, *a)
}

impl Poly {
    pub fn zero(field: &Field, nvars: usize) -> Poly {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        Poly { field: field.clone(), nvars, terms: Vec::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: u32) -> Poly {
        let mut p = Poly::zero(field, nvars);
        if c != 0 {
            p.terms.push((Monomial::ONE, c));
        }
        p
    }

    pub fn var(field: &Field, nvars: usize, i: usize) -> Poly {
        assert!(i < nvars);
        let mut p = Poly::zero(field, nvars);
        p.terms.push((Monomial::var(i), 1));
        p
    }

    pub fn monomial(field: &Field, nvars: usize, m: Monomial, c: u32) -> Poly {
        let mut p = Poly::zero(field, nvars);
        if c != 0 {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(field: &Field, nvars: usize, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Poly {
        let mut acc: BTreeMap<u64, (Monomial, u32)> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m.raw()).or_insert((m, 0));
            e.1 = field.add(e.1, c);
        }
        let mut terms: Vec<_> = acc.into_values().filter(|t| t.1 != 0).collect();
        terms.sort_by(|a, b| desc(&a.0, &b.0));
        Poly { field: field.clone(), nvars, terms }
    }

    pub(crate) fn from_sorted_terms(field: &Field, nvars: usize, terms: Vec<(Monomial, u32)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| desc(&w[0].0, &w[1].0) == Ordering::Less));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Poly { field: field.clone(), nvars, terms }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    /// Common degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.terms.first().map(|t| t.0.degree())
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: Monomial) -> u32 {
        self.terms.iter().find(|t| t.0 == m).map_or(0, |t| t.1)
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.nvars != other.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: other.nvars });
        }
        Ok(())
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                desc(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { f.neg(b[j].1) } else { b[j].1 };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(a[i].1, b[j].1) } else { f.add(a[i].1, b[j].1) };
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { field: f.clone(), nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|&(m, c)| (m, self.field.neg(c))).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: u32) -> Poly {
        if c == 0 {
            return Poly::zero(&self.field, self.nvars);
        }
        let terms = self.terms.iter().map(|&(m, a)| (m, self.field.mul(a, c))).collect();
        Poly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let f = &self.field;
        let mut acc: BTreeMap<u64, (Monomial, u32)> = BTreeMap::new();
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &other.terms {
                let m = ma.checked_mul(mb).ok_or(Error::ExponentOverflow)?;
                let e = acc.entry(m.raw()).or_insert((m, 0));
                e.1 = f.add(e.1, f.mul(ca, cb));
            }
        }
        let mut terms: Vec<_> = acc.into_values().filter(|t| t.1 != 0).collect();
        terms.sort_by(|a, b| desc(&a.0, &b.0));
        Ok(Poly { field: f.clone(), nvars: self.nvars, terms })
    }

    pub fn pow(&self, e: u32) -> Result<Poly> {
        let mut acc = Poly::constant(&self.field, self.nvars, 1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Divides every coefficient by the leading one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Evaluation at a point with raw coordinates in the same field.
    pub fn eval_raw(&self, point: &[u32]) -> u32 {
        let f = &self.field;
        let mut acc = 0u32;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &x) in point.iter().enumerate().take(self.nvars) {
                let e = m.exponent(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Evaluation at a point over the polynomial's own field.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch { expected: self.nvars, got: point.len() });
        }
        if point.iter().any(|x| x.field() != &self.field) {
            return Err(Error::MixedFields);
        }
        let raw: Vec<u32> = point.iter().map(FieldElement::value).collect();
        Ok(self.field.element(self.eval_raw(&raw)))
    }

    /// Evaluation at a point over an extension, mapping coefficients through `emb`.
    pub fn evaluate_in(&self, emb: &ExtensionEmbedding, point: &[FieldElement]) -> Result<FieldElement> {
        if emb.base() != &self.field {
            return Err(Error::MixedFields);
        }
        self.map_field(emb).evaluate(point)
    }

    /// The same polynomial with coefficients pushed into `emb.top()`.
    pub fn map_field(&self, emb: &ExtensionEmbedding) -> Poly {
        let terms = self.terms.iter().map(|&(m, c)| (m, emb.map(c))).collect();
        Poly { field: emb.top().clone(), nvars: self.nvars, terms }
    }

    /// Composes with the linear map `x_j = Σ_s rows[s][j] · t_s`, producing a
    /// polynomial in `rows.len()` variables. The rows must be linearly
    /// independent.
    pub fn substitute_linear(&self, rows: &[Vec<u32>]) -> Result<Poly> {
        if !self.is_homogeneous() {
            return Err(Error::Inhomogeneous);
        }
        let m = rows.len();
        if m > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: m });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != self.nvars) {
            return Err(Error::LengthMismatch { expected: self.nvars, got: bad.len() });
        }
        if crate::linalg::rank(&self.field, rows) < m {
            return Err(Error::RankDeficient);
        }
        Ok(self.substitute_unchecked(rows))
    }

    pub(crate) fn substitute_unchecked(&self, rows: &[Vec<u32>]) -> Poly {
        let f = &self.field;
        let m = rows.len();
        let images: Vec<Poly> = (0..self.nvars)
            .map(|j| {
                Poly::from_terms(f, m, (0..m).map(|s| (Monomial::var(s), rows[s][j])))
            })
            .collect();
        // cache powers of each image
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::constant(f, m, 1), p.clone()]).collect();
        let mut acc = Poly::zero(f, m);
        for &(mono, c) in &self.terms {
            let mut term = Poly::constant(f, m, c);
            for (j, pw) in powers.iter_mut().enumerate() {
                let e = mono.exponent(j) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul(&images[j]).expect("same ring");
                    pw.push(next);
                }
                if e > 0 {
                    term = term.mul(&pw[e]).expect("same ring");
                }
            }
            acc = acc.merge(&term, false);
        }
        acc
    }

    /// Uniformly random element of `S_d` in `nvars` variables: every one of the
    /// `binom(nvars - 1 + d, d)` coefficients is drawn independently from the
    /// whole field, zero included.
    pub fn random_homogeneous<R: Rng + ?Sized>(field: &Field, nvars: usize, d: u32, rng: &mut R) -> Poly {
        let q = field.order();
        let terms = monomials_of_degree(nvars, d)
            .into_iter()
            .filter_map(|m| {
                let c = rng.random_range(0..q);
                (c != 0).then_some((m, c))
            })
            .collect();
        Poly { field: field.clone(), nvars, terms }
    }

    /// The polynomial of `S_d` whose coefficient vector (in descending grevlex
    /// order of the degree-`d` monomials) is `coeffs`.
    pub fn from_coefficients(field: &Field, nvars: usize, d: u32, coeffs: &[u32]) -> Poly {
        let mons = monomials_of_degree(nvars, d);
        assert_eq!(mons.len(), coeffs.len());
        let terms = mons.into_iter().zip(coeffs.iter().copied()).filter(|t| t.1 != 0).collect();
        Poly { field: field.clone(), nvars, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn lin(field: &Field, nvars: usize, coeffs: &[u32]) -> Poly {
        Poly::from_terms(field, nvars, coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(i), c)))
    }

    #[test]
    fn evaluation_examples() {
        let f2 = f(2);
        let x: Vec<_> = (0..4).map(|i| Poly::var(&f2, 4, i)).collect();
        let xyz = x[0].mul(&x[1]).unwrap().mul(&x[2]).unwrap();
        assert_eq!(xyz.eval_raw(&[1, 1, 1, 1]), 1);

        let f3 = f(3);
        let sq: Poly = (0..3)
            .map(|i| Poly::var(&f3, 3, i).pow(2).unwrap())
            .fold(Poly::zero(&f3, 3), |a, b| a.add(&b).unwrap());
        assert_eq!(sq.eval_raw(&[1, 1, 1]), 0);

        let xy = lin(&f2, 2, &[1, 1]);
        assert_eq!(xy.eval_raw(&[1, 1]), 0);
        let pt = vec![f2.element(1)];
        assert!(matches!(xy.evaluate(&pt), Err(Error::LengthMismatch { .. })));
        let other = vec![f3.element(1), f3.element(1)];
        assert_eq!(xy.evaluate(&other).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn evaluation_over_extension() {
        let f2 = f(2);
        let emb = ExtensionEmbedding::new(&f2, 2).unwrap();
        // x^2 + x y + y^2 has no F_2 roots but vanishes at [1 : u]
        let p = Poly::from_terms(
            &f2,
            2,
            [
                (Monomial::from_exponents(&[2, 0]).unwrap(), 1),
                (Monomial::from_exponents(&[1, 1]).unwrap(), 1),
                (Monomial::from_exponents(&[0, 2]).unwrap(), 1),
            ],
        );
        let top = emb.top();
        let u = top.element(2);
        let v = p.evaluate_in(&emb, &[top.element(1), u]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn substitution_examples() {
        let f2 = f(2);
        // zx on the line z = 0
        let z = Poly::var(&f2, 3, 2);
        let zx = z.mul(&Poly::var(&f2, 3, 0)).unwrap();
        let plane = vec![vec![1, 0, 0], vec![0, 1, 0]];
        assert!(zx.substitute_linear(&plane).unwrap().is_zero());

        // x^2 + y^2 + z^2 = (x + y + z)^2 vanishes on x = s, y = t, z = s + t
        let sq = (0..3)
            .map(|i| Poly::var(&f2, 3, i).pow(2).unwrap())
            .fold(Poly::zero(&f2, 3), |a, b| a.add(&b).unwrap());
        let rows = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert!(sq.substitute_linear(&rows).unwrap().is_zero());

        // xy on x = s, y = s gives s^2
        let xy = Poly::var(&f2, 2, 0).mul(&Poly::var(&f2, 2, 1)).unwrap();
        let s2 = xy.substitute_linear(&[vec![1, 1]]).unwrap();
        assert_eq!(s2, Poly::var(&f2, 1, 0).pow(2).unwrap());

        assert_eq!(xy.substitute_linear(&[vec![1, 1], vec![1, 1]]).unwrap_err(), Error::RankDeficient);
        let inhom = xy.add(&Poly::var(&f2, 2, 0)).unwrap();
        assert_eq!(inhom.substitute_linear(&[vec![1, 0]]).unwrap_err(), Error::Inhomogeneous);
    }

    #[test]
    fn random_poly_is_reproducible_and_uniform_on_s1() {
        let f2 = f(2);
        let a = Poly::random_homogeneous(&f2, 2, 1, &mut ChaCha8Rng::seed_from_u64(42));
        let b = Poly::random_homogeneous(&f2, 2, 1, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(a, b);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts = [0usize; 4];
        let n = 40_000;
        for _ in 0..n {
            let p = Poly::random_homogeneous(&f2, 2, 1, &mut rng);
            let idx = p.coefficient(Monomial::var(0)) + 2 * p.coefficient(Monomial::var(1));
            counts[idx as usize] += 1;
        }
        let sigma = (n as f64 * 0.25 * 0.75).sqrt();
        for c in counts {
            assert!((c as f64 - n as f64 / 4.0).abs() < 4.0 * sigma, "{counts:?}");
        }
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = Poly::var(&f(2), 2, 0);
        let b = Poly::var(&f(3), 2, 0);
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
        let c = Poly::var(&f(2), 3, 0);
        assert!(a.mul(&c).is_err());
    }
}
