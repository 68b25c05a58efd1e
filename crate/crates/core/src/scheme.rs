//! Projective schemes and the parameter predicate.

use crate::algebra::{Field, Poly, MAX_VARS};
use crate::error::{Error, Result};
use crate::groebner::{krull_dimension, leading_monomials};

/// A nonempty closed subscheme `X = V(gens) ⊆ P^r` over a finite field.
///
/// `n` is the projective dimension of `S/(gens)`; for a non-equidimensional
/// `X` that is the largest component dimension. `deghat`, the sum of the
/// degrees of the reduced irreducible components, cannot be computed here
/// (that needs a decomposition) so it is either supplied by the caller or
/// bounded above by the product of generator degrees.
#[derive(Clone, Debug)]
pub struct ProjScheme {
    field: Field,
    r: usize,
    gens: Vec<Poly>,
    n: i32,
    deghat_value: Option<u64>,
}

impl ProjScheme {
    pub fn new(field: &Field, r: usize, gens: Vec<Poly>, deghat: Option<u64>) -> Result<ProjScheme> {
        if r + 1 > MAX_VARS {
            return Err(Error::TooManyVariables { max: MAX_VARS, got: r + 1 });
        }
        for g in &gens {
            if g.field() != field {
                return Err(Error::MixedFields);
            }
            if g.nvars() != r + 1 {
                return Err(Error::LengthMismatch { expected: r + 1, got: g.nvars() });
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
        }
        let n = dimension_of(field, r, &gens, &[]);
        if n < 0 {
            return Err(Error::EmptyScheme);
        }
        let x = ProjScheme { field: field.clone(), r, gens, n, deghat_value: None };
        if let Some(v) = deghat {
            let bound = x.degree_product();
            if v == 0 || v > bound {
                return Err(Error::InvalidArgument(format!(
                    "deghat {v} must lie in [1, {bound}] (product of generator degrees)"
                )));
            }
        }
        Ok(ProjScheme { deghat_value: deghat, ..x })
    }

    /// All of `P^r`.
    pub fn projective_space(field: &Field, r: usize) -> Result<ProjScheme> {
        ProjScheme::new(field, r, Vec::new(), Some(1))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Ambient dimension `r` of `P^r`.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn nvars(&self) -> usize {
        self.r + 1
    }

    /// Projective dimension of `X`.
    pub fn n(&self) -> i32 {
        self.n
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn deghat_value(&self) -> Option<u64> {
        self.deghat_value
    }

    /// Product of the degrees of the nonzero generators (1 for `P^r`).
    pub fn degree_product(&self) -> u64 {
        self.gens
            .iter()
            .filter_map(Poly::homogeneous_degree)
            .fold(1u64, |acc, d| acc.saturating_mul(d as u64))
    }

    /// The supplied `deghat`, or else the Bezout-type bound `∏ deg g_i`.
    pub fn deghat_bound(&self) -> u64 {
        self.deghat_value.unwrap_or_else(|| self.degree_product())
    }

    /// `X ∩ V(extra)`; fails with [`Error::EmptyScheme`] when empty.
    pub fn intersect(&self, extra: &[Poly]) -> Result<ProjScheme> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().filter(|p| !p.is_zero()).cloned());
        ProjScheme::new(&self.field, self.r, gens, None)
    }

    /// Projective dimension of `X ∩ V(extra)`, `-1` when empty.
    pub fn dim_with(&self, extra: &[Poly]) -> i32 {
        dimension_of(&self.field, self.r, &self.gens, extra)
    }
}

fn dimension_of(field: &Field, r: usize, gens: &[Poly], extra: &[Poly]) -> i32 {
    let refs: Vec<&Poly> = gens.iter().chain(extra).filter(|p| !p.is_zero()).collect();
    if refs.is_empty() {
        return r as i32;
    }
    let lms = leading_monomials(field, &refs);
    krull_dimension(&lms, r + 1) as i32 - 1
}

/// A tuple `(f_0, …, f_k)` of forms of a common degree `d`. Zero entries are
/// allowed: they belong to the sample space `S_d^{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTuple {
    polys: Vec<Poly>,
    d: u32,
}

impl ParamTuple {
    pub fn new(polys: Vec<Poly>, d: u32) -> Result<ParamTuple> {
        if polys.is_empty() {
            return Err(Error::InvalidArgument("a parameter tuple needs at least one entry".into()));
        }
        for p in &polys {
            if !p.is_zero() && p.homogeneous_degree() != Some(d) {
                return Err(Error::DegreeMismatch { expected: d });
            }
        }
        Ok(ParamTuple { polys, d })
    }

    /// Infers the degree from the first nonzero entry.
    pub fn from_polys(polys: Vec<Poly>) -> Result<ParamTuple> {
        let d = polys.iter().find_map(Poly::total_degree).unwrap_or(0);
        ParamTuple::new(polys, d)
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Index `k` of the last entry.
    pub fn k(&self) -> usize {
        self.polys.len() - 1
    }
}

/// Whether `T = (f_0, …, f_k)` are parameters on `X`:
/// `dim X ∩ V(f_0, …, f_k) = dim X - (k + 1)`.
pub fn is_parameters(x: &ProjScheme, t: &ParamTuple) -> Result<bool> {
    for p in t.polys() {
        if p.field() != x.field() {
            return Err(Error::MixedFields);
        }
        if p.nvars() != x.nvars() {
            return Err(Error::LengthMismatch { expected: x.nvars(), got: p.nvars() });
        }
    }
    if t.k() as i32 > x.n() {
        return Err(Error::IndexTooLarge { k: t.k(), n: x.n() });
    }
    Ok(parameters_unchecked(x, t.polys()))
}

/// The predicate without ring or degree validation.
pub(crate) fn parameters_unchecked(x: &ProjScheme, polys: &[Poly]) -> bool {
    x.dim_with(polys) == x.n() - polys.len() as i32
}
