//! Point counts over extension fields, closed-point tallies, truncated zeta
//! values and censuses of linear subspaces.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ExtensionEmbedding, Field, Monomial, Poly};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::groebner_basis;
use crate::linalg;
use crate::scheme::ProjScheme;

/// `N_ℓ = #X(F_{q^ℓ})` for `ℓ = 1..=e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCounts {
    q: u64,
    counts: Vec<u128>,
}

impl PointCounts {
    /// Wraps externally known counts, `counts[ℓ - 1] = N_ℓ`.
    pub fn new(q: u64, counts: Vec<u128>) -> PointCounts {
        PointCounts { q, counts }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    /// Highest degree counted.
    pub fn e(&self) -> usize {
        self.counts.len()
    }
}

/// `a_ℓ`, the number of closed points of degree `ℓ`, for `ℓ = 1..=e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedPointTally {
    q: u64,
    a: Vec<u128>,
}

impl ClosedPointTally {
    pub fn q(&self) -> u64 {
        self.q
    }

    /// `a()[ℓ - 1] = a_ℓ`.
    pub fn a(&self) -> &[u128] {
        &self.a
    }
}

/// `∏_{ℓ ≤ e} (1 - q^{-sℓ})^{a_ℓ}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZetaTruncation {
    pub s: u32,
    pub e: usize,
    pub value: f64,
}

impl ZetaTruncation {
    pub fn from_tally(tally: &ClosedPointTally, s: u32) -> ZetaTruncation {
        let q = tally.q as f64;
        let log: f64 = tally
            .a
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let x = q.powf(-(s as f64) * (i + 1) as f64);
                a as f64 * (-x).ln_1p()
            })
            .sum();
        ZetaTruncation { s, e: tally.a.len(), value: log.exp() }
    }
}

/// An `m`-plane of `P^r`, given by the reduced row echelon matrix whose rows
/// span it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSubspace {
    rows: Vec<Vec<u32>>,
}

impl LinearSubspace {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len() - 1
    }

    /// Linear forms cutting out the plane.
    pub fn ideal(&self, field: &Field) -> Vec<Poly> {
        let nvars = self.rows[0].len();
        linalg::nullspace(field, &self.rows, nvars)
            .into_iter()
            .map(|v| Poly::from_terms(field, nvars, v.into_iter().enumerate().map(|(i, c)| (Monomial::var(i), c))))
            .collect()
    }
}

/// The `m`-planes contained in `X`.
#[derive(Clone, Debug, Serialize)]
pub struct PlaneCensus {
    pub m: usize,
    pub count: u64,
    pub planes: Vec<LinearSubspace>,
}

/// `#P^{n}(F_Q) = (Q^{n+1} - 1)/(Q - 1)`.
fn projective_points(q_ell: u128, n: u32) -> Option<u128> {
    let top = q_ell.checked_pow(n + 1)?;
    Some((top - 1) / (q_ell - 1))
}

/// `#X(F_{q^ℓ})`.
///
/// When the reduced Gröbner basis consists of linear forms, `X` is a linear
/// space and the count is closed-form; otherwise every normalized projective
/// representative (first nonzero coordinate equal to 1) is tested, which
/// requires `q^{ℓ(r+1)} ≤ budget.max_points`.
pub fn count_points(x: &ProjScheme, ell: u32, budget: &Budget) -> Result<u128> {
    if ell < 1 {
        return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
    }
    let q = x.field().order() as u128;
    let overflow = || Error::InvalidArgument("point count overflows 128 bits".into());
    let q_ell = q.checked_pow(ell).ok_or_else(overflow)?;
    if let Some(dim) = linear_dimension(x)? {
        return projective_points(q_ell, dim).ok_or_else(overflow);
    }
    let needed = (q_ell as f64).powi(x.nvars() as i32);
    if needed > budget.max_points as f64 {
        return Err(Error::budget("point enumeration", needed, budget.max_points as f64));
    }
    let emb = ExtensionEmbedding::new(x.field(), ell)?;
    let polys: Vec<Poly> = x.gens().iter().map(|g| g.map_field(&emb)).collect();
    Ok(enumerate_points(&polys, emb.top(), x.nvars()))
}

/// Projective dimension of `X` when its ideal is generated by linear forms.
fn linear_dimension(x: &ProjScheme) -> Result<Option<u32>> {
    let gens: Vec<Poly> = x.gens().iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(Some(x.r() as u32));
    }
    let gb = groebner_basis(&gens)?;
    if gb.leading_monomials().iter().all(|m| m.degree() == 1) {
        Ok(Some((x.r() - gb.generators().len()) as u32))
    } else {
        Ok(None)
    }
}

fn enumerate_points(polys: &[Poly], field: &Field, nvars: usize) -> u128 {
    let q = field.order() as u64;
    (0..nvars)
        .map(|lead| {
            let free = (nvars - lead - 1) as u32;
            (0..q.pow(free))
                .into_par_iter()
                .map_init(
                    || vec![0u32; nvars],
                    |pt, mut idx| {
                        pt[..lead].fill(0);
                        pt[lead] = 1;
                        for c in pt[lead + 1..].iter_mut() {
                            *c = (idx % q) as u32;
                            idx /= q;
                        }
                        polys.iter().all(|g| g.eval_raw(pt) == 0) as u128
                    },
                )
                .sum::<u128>()
        })
        .sum()
}

/// `N_1, …, N_e`.
pub fn point_counts(x: &ProjScheme, e: usize, budget: &Budget) -> Result<PointCounts> {
    let counts = (1..=e as u32).map(|ell| count_points(x, ell, budget)).collect::<Result<_>>()?;
    Ok(PointCounts { q: x.field().order() as u64, counts })
}

fn mobius(mut n: usize) -> i128 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Möbius inversion `a_ℓ = (1/ℓ) Σ_{m | ℓ} μ(m) N_{ℓ/m}`.
///
/// A negative or fractional `a_ℓ` means the counts are not those of a
/// variety and is reported as [`Error::InvalidTally`].
pub fn closed_point_tally(counts: &PointCounts) -> Result<ClosedPointTally> {
    let n = &counts.counts;
    let a = (1..=n.len())
        .map(|ell| {
            let mut sum: i128 = 0;
            for m in (1..=ell).filter(|m| ell % m == 0) {
                let term = i128::try_from(n[ell / m - 1]).map_err(|_| Error::InvalidTally(ell))?;
                sum = mobius(m)
                    .checked_mul(term)
                    .and_then(|t| sum.checked_add(t))
                    .ok_or(Error::InvalidTally(ell))?;
            }
            if sum < 0 || sum % ell as i128 != 0 {
                return Err(Error::InvalidTally(ell));
            }
            Ok((sum / ell as i128) as u128)
        })
        .collect::<Result<_>>()?;
    Ok(ClosedPointTally { q: counts.q, a })
}

/// `∏_{ℓ=1}^{e} (1 - q^{-sℓ})^{a_ℓ}`, the inverse zeta function truncated to
/// closed points of degree at most `e`.
pub fn zeta_inv_truncated(x: &ProjScheme, s: u32, e: usize, budget: &Budget) -> Result<ZetaTruncation> {
    if s < 1 || e < 1 {
        return Err(Error::InvalidArgument("s and e must be at least 1".into()));
    }
    let tally = closed_point_tally(&point_counts(x, e, budget)?)?;
    Ok(ZetaTruncation::from_tally(&tally, s))
}

/// Gaussian binomial `[n choose k]_q`, `None` on overflow.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(q.checked_pow(n - i)? - 1)?;
        den = den.checked_mul(q.checked_pow(i + 1)? - 1)?;
    }
    Some(num / den)
}

/// Whether the plane spanned by `rows` lies in `X`: every generator pulls back
/// to the zero polynomial.
pub fn contains_plane(x: &ProjScheme, rows: &[Vec<u32>]) -> Result<bool> {
    for g in x.gens() {
        if !g.substitute_linear(rows)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `m`-planes `L ⊆ X` defined over the base field, enumerated by reduced
/// row echelon matrices in lexicographic order of pivot columns.
pub fn count_linear_subspaces(x: &ProjScheme, m: usize, budget: &Budget) -> Result<PlaneCensus> {
    if m as i32 > x.n() {
        return Err(Error::InvalidArgument(format!("plane dimension {m} exceeds dim X = {}", x.n())));
    }
    let field = x.field();
    let q = field.order() as u64;
    let (rows, cols) = (m + 1, x.nvars());
    let total = gaussian_binomial(cols as u32, rows as u32, q).map_or(f64::INFINITY, |g| g as f64);
    if total > budget.max_points as f64 {
        return Err(Error::budget("plane enumeration", total, budget.max_points as f64));
    }
    let mut planes = Vec::new();
    for pivots in combinations(cols, rows) {
        let free: Vec<(usize, usize)> = (0..rows)
            .flat_map(|i| ((pivots[i] + 1)..cols).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
            .collect();
        for idx in 0..q.pow(free.len() as u32) {
            let mut mat = vec![vec![0u32; cols]; rows];
            for (i, &p) in pivots.iter().enumerate() {
                mat[i][p] = 1;
            }
            let mut v = idx;
            for &(i, j) in free.iter().rev() {
                mat[i][j] = (v % q) as u32;
                v /= q;
            }
            if x.gens().iter().all(|g| g.substitute_unchecked(&mat).is_zero()) {
                planes.push(LinearSubspace { rows: mat });
            }
        }
    }
    Ok(PlaneCensus { m, count: planes.len() as u64, planes })
}

/// `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { return out };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{default_var_names, parse_poly};

    fn scheme(p: u64, k: u32, r: usize, gens: &[&str]) -> ProjScheme {
        let f = Field::new(p, k).unwrap();
        let names = default_var_names(r + 1);
        let gens = gens.iter().map(|g| parse_poly(g, &f, &names).unwrap()).collect();
        ProjScheme::new(&f, r, gens, None).unwrap()
    }

    #[test]
    fn point_count_examples() {
        let b = Budget::default();
        assert_eq!(count_points(&scheme(2, 1, 1, &[]), 1, &b).unwrap(), 3);
        assert_eq!(count_points(&scheme(2, 1, 3, &["x*y*z"]), 1, &b).unwrap(), 13);
        assert_eq!(count_points(&scheme(2, 2, 2, &[]), 1, &b).unwrap(), 21);
    }

    #[test]
    fn projective_space_counts_by_enumeration_and_formula() {
        let b = Budget::default();
        for r in 1..=3usize {
            for ell in 1..=3u32 {
                let x = scheme(2, 1, r, &[]);
                let expect = (2u128.pow(ell * (r as u32 + 1)) - 1) / (2u128.pow(ell) - 1);
                assert_eq!(count_points(&x, ell, &b).unwrap(), expect);
            }
        }
        // the conic x*y = z^2 is a P^1: 2^ℓ + 1 points
        let conic = scheme(2, 1, 2, &["x*y + z^2"]);
        for ell in 1..=4 {
            assert_eq!(count_points(&conic, ell, &b).unwrap(), 2u128.pow(ell) + 1);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let b = Budget { max_points: 100, ..Budget::default() };
        let x = scheme(2, 1, 3, &["x*y*z"]);
        assert!(matches!(count_points(&x, 2, &b), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn tally_examples() {
        let t = closed_point_tally(&PointCounts::new(2, vec![3, 5])).unwrap();
        assert_eq!(t.a(), &[3, 1]);
        let t = closed_point_tally(&PointCounts::new(2, vec![1, 1, 1, 1])).unwrap();
        assert_eq!(t.a(), &[1, 0, 0, 0]);
        assert_eq!(closed_point_tally(&PointCounts::new(2, vec![3, 4])).unwrap_err(), Error::InvalidTally(2));
        assert_eq!(closed_point_tally(&PointCounts::new(2, vec![3, 1])).unwrap_err(), Error::InvalidTally(2));
    }

    #[test]
    fn zeta_examples() {
        let one = ClosedPointTally { q: 2, a: vec![1] };
        assert_eq!(ZetaTruncation::from_tally(&one, 1).value, 0.5);
        let two = ClosedPointTally { q: 2, a: vec![2] };
        assert_eq!(ZetaTruncation::from_tally(&two, 1).value, 0.25);
        let z = zeta_inv_truncated(&scheme(2, 1, 1, &[]), 2, 12, &Budget::default()).unwrap();
        assert!((z.value - 0.375).abs() < 1e-3);
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 2, 2), Some(35));
        assert_eq!(gaussian_binomial(4, 2, 4), Some(357));
        assert_eq!(gaussian_binomial(3, 1, 3), Some(13));
        assert_eq!(gaussian_binomial(3, 4, 3), Some(0));
    }

    #[test]
    fn line_census_examples() {
        let b = Budget::default();
        assert_eq!(count_linear_subspaces(&scheme(2, 1, 3, &["x*y*z"]), 1, &b).unwrap().count, 18);
        assert_eq!(count_linear_subspaces(&scheme(2, 2, 3, &["x^3 + y^3 + z^3 + w^3"]), 1, &b).unwrap().count, 27);
        let no_lines = scheme(2, 2, 3, &["x^3 + y^3 + z^3 + [0,1]*w^3"]);
        assert_eq!(count_linear_subspaces(&no_lines, 1, &b).unwrap().count, 0);
    }

    #[test]
    fn plane_ideal_cuts_out_the_plane() {
        let x = scheme(3, 1, 3, &["x*y"]);
        let census = count_linear_subspaces(&x, 1, &Budget::default()).unwrap();
        for plane in &census.planes {
            for form in plane.ideal(x.field()) {
                assert!(form.substitute_linear(plane.rows()).unwrap().is_zero());
            }
            assert_eq!(plane.ideal(x.field()).len(), 2);
        }
    }
}
