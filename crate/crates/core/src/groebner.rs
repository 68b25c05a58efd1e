//! Buchberger's algorithm over finite fields, dimensions from leading-term
//! ideals, and Hilbert functions.
//!
//! Pairs are pruned with the Gebauer–Möller update (product and chain
//! criteria) and processed by smallest lcm: degree first, then the monomial
//! order, then pair indices. Output is fully deterministic.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::{monomials_of_degree, Field, Monomial, MonomialOrder, Poly, MAX_VARS};
use crate::error::{Error, Result};

type Terms = Vec<(Monomial, u32)>;

/// A reduced Gröbner basis: monic generators, no leading monomial dividing
/// another, sorted by descending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: Field,
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Poly>,
    leading: Vec<Monomial>,
}

/// `dim_F (S/I)_d` for one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub d: u32,
    pub value: u64,
}

struct Engine<'f> {
    field: &'f Field,
    order: MonomialOrder,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Engine<'_> {
    fn to_terms(&self, p: &Poly) -> Terms {
        let mut t = p.terms().to_vec();
        if self.order != MonomialOrder::Grevlex {
            t.sort_by(|a, b| self.order.cmp(b.0, a.0));
        }
        t
    }

    fn make_monic(&self, t: &mut Terms) {
        if let Some(&(_, c)) = t.first() {
            if c != 1 {
                let inv = self.field.inv(c).expect("nonzero");
                for x in t.iter_mut() {
                    x.1 = self.field.mul(x.1, inv);
                }
            }
        }
    }

    /// `a - c * m * b`, all inputs sorted descending.
    fn sub_mul(&self, a: &[(Monomial, u32)], c: u32, m: Monomial, b: &[(Monomial, u32)]) -> Terms {
        let f = self.field;
        let nc = f.neg(c);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bm = m.mul(b[j].0);
            match self.order.cmp(a[i].0, bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, f.mul(nc, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.add(a[i].1, f.mul(nc, b[j].1));
                    if v != 0 {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for &(bm, bc) in &b[j..] {
            out.push((m.mul(bm), f.mul(nc, bc)));
        }
        out
    }

    /// Full reduction of `p` by monic `basis` elements.
    fn reduce(&self, mut p: Terms, basis: &[&Terms]) -> Terms {
        let mut rem = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (m, c) = p[start];
            match basis.iter().find(|g| g[0].0.divides(m)) {
                Some(g) => {
                    let q = g[0].0.quotient_of(m);
                    p = self.sub_mul(&p[start + 1..], c, q, &g[1..]);
                    start = 0;
                }
                None => {
                    rem.push((m, c));
                    start += 1;
                }
            }
        }
        rem
    }

    fn spoly(&self, a: &Terms, b: &Terms, lcm: Monomial) -> Terms {
        let qa = a[0].0.quotient_of(lcm);
        let qb = b[0].0.quotient_of(lcm);
        let shifted: Terms = a[1..].iter().map(|&(m, c)| (qa.mul(m), c)).collect();
        self.sub_mul(&shifted, 1, qb, &b[1..])
    }

    fn pair_cmp(&self, x: &Pair, y: &Pair) -> Ordering {
        x.lcm
            .degree()
            .cmp(&y.lcm.degree())
            .then_with(|| self.order.cmp(x.lcm, y.lcm))
            .then_with(|| (x.i, x.j).cmp(&(y.i, y.j)))
    }

    /// Returns a minimal (not yet inter-reduced) Gröbner basis.
    fn buchberger(&self, gens: Vec<Terms>) -> Vec<Terms> {
        let mut polys: Vec<Terms> = Vec::new();
        let mut active: Vec<bool> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        let mut inputs: Vec<Terms> = gens.into_iter().filter(|t| !t.is_empty()).collect();
        inputs.sort_by(|a, b| self.order.cmp(a[0].0, b[0].0).then_with(|| a.len().cmp(&b.len())));
        for g in inputs {
            let basis: Vec<&Terms> = polys.iter().zip(&active).filter(|x| *x.1).map(|x| x.0).collect();
            let mut h = self.reduce(g, &basis);
            if h.is_empty() {
                continue;
            }
            self.make_monic(&mut h);
            if h[0].0 == Monomial::ONE {
                return vec![h];
            }
            polys.push(h);
            active.push(false);
            self.update(&polys, &mut active, &mut pairs, polys.len() - 1);
        }

        while !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| self.pair_cmp(&pairs[a], &pairs[b]))
                .unwrap();
            let pair = pairs.swap_remove(best);
            let s = self.spoly(&polys[pair.i], &polys[pair.j], pair.lcm);
            if s.is_empty() {
                continue;
            }
            let basis: Vec<&Terms> = polys.iter().zip(&active).filter(|x| *x.1).map(|x| x.0).collect();
            let mut h = self.reduce(s, &basis);
            if h.is_empty() {
                continue;
            }
            self.make_monic(&mut h);
            if h[0].0 == Monomial::ONE {
                return vec![h];
            }
            polys.push(h);
            active.push(false);
            self.update(&polys, &mut active, &mut pairs, polys.len() - 1);
        }

        polys.into_iter().zip(active).filter(|x| x.1).map(|x| x.0).collect()
    }

    fn update(&self, polys: &[Terms], active: &mut [bool], pairs: &mut Vec<Pair>, h: usize) {
        let lh = polys[h][0].0;
        let cands: Vec<(usize, Monomial)> = (0..h)
            .filter(|&g| active[g])
            .map(|g| (g, lh.lcm(polys[g][0].0)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, &(g1, l1)) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(polys[g1][0].0);
            let dominated = cands[idx + 1..].iter().any(|&(_, l2)| l2.divides(l1))
                || kept.iter().any(|&(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        pairs.retain(|p| {
            let li = polys[p.i][0].0;
            let lj = polys[p.j][0].0;
            !(lh.divides(p.lcm) && li.lcm(lh) != p.lcm && lh.lcm(lj) != p.lcm)
        });
        for (g, l) in kept {
            if !lh.is_coprime(polys[g][0].0) {
                pairs.push(Pair { i: g, j: h, lcm: l });
            }
        }
        for g in 0..h {
            if active[g] && lh.divides(polys[g][0].0) {
                active[g] = false;
            }
        }
        active[h] = true;
    }

    fn interreduce(&self, mut basis: Vec<Terms>) -> Vec<Terms> {
        basis.sort_by(|a, b| self.order.cmp(b[0].0, a[0].0));
        let n = basis.len();
        for i in 0..n {
            let others: Vec<Terms> = basis.iter().enumerate().filter(|x| x.0 != i).map(|x| x.1.clone()).collect();
            let refs: Vec<&Terms> = others.iter().collect();
            let head = basis[i][0];
            let tail = self.reduce(basis[i][1..].to_vec(), &refs);
            let mut t = vec![head];
            t.extend(tail);
            basis[i] = t;
        }
        basis
    }
}

fn check_ring(gens: &[Poly]) -> Result<Option<(Field, usize)>> {
    let Some(first) = gens.first() else { return Ok(None) };
    for g in gens {
        if g.field() != first.field() {
            return Err(Error::MixedFields);
        }
        if g.nvars() != first.nvars() {
            return Err(Error::LengthMismatch { expected: first.nvars(), got: g.nvars() });
        }
    }
    Ok(Some((first.field().clone(), first.nvars())))
}

fn terms_to_poly(field: &Field, nvars: usize, mut t: Terms) -> Poly {
    t.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b.0, a.0));
    Poly::from_sorted_terms(field, nvars, t)
}

/// Reduced Gröbner basis under grevlex.
pub fn groebner_basis(gens: &[Poly]) -> Result<GroebnerBasis> {
    groebner_basis_with_order(gens, MonomialOrder::Grevlex)
}

pub fn groebner_basis_with_order(gens: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis> {
    let Some((field, nvars)) = check_ring(gens)? else {
        return Err(Error::InvalidArgument("empty generator list: use GroebnerBasis::zero_ideal".into()));
    };
    Ok(basis_in(&field, nvars, gens, order))
}

fn basis_in(field: &Field, nvars: usize, gens: &[Poly], order: MonomialOrder) -> GroebnerBasis {
    let engine = Engine { field, order };
    let terms: Vec<Terms> = gens.iter().map(|g| engine.to_terms(g)).collect();
    let reduced = engine.interreduce(engine.buchberger(terms));
    let leading = reduced.iter().map(|t| t[0].0).collect();
    let generators = reduced.into_iter().map(|t| terms_to_poly(field, nvars, t)).collect();
    GroebnerBasis { field: field.clone(), nvars, order, generators, leading }
}

/// Leading monomials of a minimal Gröbner basis under grevlex, skipping the
/// final inter-reduction. This is all the dimension predicate needs.
pub(crate) fn leading_monomials(field: &Field, gens: &[&Poly]) -> Vec<Monomial> {
    let engine = Engine { field, order: MonomialOrder::Grevlex };
    let terms: Vec<Terms> = gens.iter().map(|g| g.terms().to_vec()).collect();
    engine.buchberger(terms).into_iter().map(|t| t[0].0).collect()
}

impl GroebnerBasis {
    /// The basis of the zero ideal.
    pub fn zero_ideal(field: &Field, nvars: usize) -> GroebnerBasis {
        GroebnerBasis { field: field.clone(), nvars, order: MonomialOrder::Grevlex, generators: vec![], leading: vec![] }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading.first() == Some(&Monomial::ONE)
    }

    /// Remainder of `p` on division by the basis.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let engine = Engine { field: &self.field, order: self.order };
        let basis: Vec<Terms> = self.generators.iter().map(|g| engine.to_terms(g)).collect();
        let refs: Vec<&Terms> = basis.iter().collect();
        let r = engine.reduce(engine.to_terms(p), &refs);
        terms_to_poly(&self.field, self.nvars, r)
    }

    /// Krull dimension of `S / in(I)`.
    pub fn krull_dimension(&self) -> usize {
        krull_dimension(&self.leading, self.nvars)
    }

    /// Dimension of `Proj(S/I)`, `-1` when empty.
    pub fn proj_dim(&self) -> i32 {
        self.krull_dimension() as i32 - 1
    }

    /// Number of degree-`d` monomials outside the leading-term ideal.
    pub fn hilbert_function(&self, d: u32) -> HilbertData {
        HilbertData { d, value: count_standard_monomials(&self.leading, self.nvars, d) }
    }

    /// Whether every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let engine = Engine { field: &self.field, order: self.order };
        let basis: Vec<Terms> = self.generators.iter().map(|g| engine.to_terms(g)).collect();
        let refs: Vec<&Terms> = basis.iter().collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let l = basis[i][0].0.lcm(basis[j][0].0);
                let s = engine.spoly(&basis[i], &basis[j], l);
                if !engine.reduce(s, &refs).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Largest set of variables containing the support of no leading monomial.
pub fn krull_dimension(leading: &[Monomial], nvars: usize) -> usize {
    let supports: Vec<u8> = leading.iter().map(|m| m.support()).collect();
    if supports.contains(&0) {
        return 0;
    }
    (0u32..1 << nvars)
        .filter(|&y| supports.iter().all(|&s| (s as u32) & !y != 0))
        .map(|y| y.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub(crate) fn count_standard_monomials(leading: &[Monomial], nvars: usize, d: u32) -> u64 {
    monomials_of_degree(nvars, d)
        .into_iter()
        .filter(|m| !leading.iter().any(|l| l.divides(*m)))
        .count() as u64
}

fn check_homogeneous(gens: &[Poly]) -> Result<()> {
    if gens.iter().all(Poly::is_homogeneous) {
        Ok(())
    } else {
        Err(Error::Inhomogeneous)
    }
}

/// Dimension of `Proj(S/I)` in `P^r`, or `-1` when the ideal is irrelevant.
pub fn proj_dim(gens: &[Poly], r: usize) -> Result<i32> {
    check_homogeneous(gens)?;
    check_ring(gens)?;
    if r + 1 > MAX_VARS {
        return Err(Error::TooManyVariables { max: MAX_VARS, got: r + 1 });
    }
    if gens.iter().all(Poly::is_zero) {
        return Ok(r as i32);
    }
    let field = gens[0].field();
    let refs: Vec<&Poly> = gens.iter().collect();
    let lms = leading_monomials(field, &refs);
    Ok(krull_dimension(&lms, r + 1) as i32 - 1)
}

/// Hilbert function of `S/I` in degree `d`, `S` having `r + 1` variables.
pub fn hilbert_function(gens: &[Poly], r: usize, d: u32) -> Result<HilbertData> {
    check_homogeneous(gens)?;
    check_ring(gens)?;
    let nonzero: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(HilbertData { d, value: count_standard_monomials(&[], r + 1, d) });
    }
    Ok(groebner_basis(&nonzero)?.hilbert_function(d))
}

/// Generators of `I ∩ J`, by eliminating a tag variable from `t·I + (1 - t)·J`.
pub fn ideal_intersection(a: &[Poly], b: &[Poly]) -> Result<Vec<Poly>> {
    let all: Vec<Poly> = a.iter().chain(b).cloned().collect();
    let Some((field, nvars)) = check_ring(&all)? else { return Ok(vec![]) };
    if nvars + 1 > MAX_VARS {
        return Err(Error::TooManyVariables { max: MAX_VARS, got: nvars + 1 });
    }
    if a.iter().all(Poly::is_zero) || b.iter().all(Poly::is_zero) {
        return Ok(vec![]);
    }
    let lift = |p: &Poly| Poly::from_terms(&field, nvars + 1, p.terms().iter().copied());
    let t = Poly::var(&field, nvars + 1, nvars);
    let one_minus_t = Poly::constant(&field, nvars + 1, 1).sub(&t)?;
    let mut gens = Vec::new();
    for p in a {
        gens.push(lift(p).mul(&t)?);
    }
    for p in b {
        gens.push(lift(p).mul(&one_minus_t)?);
    }
    let gb = basis_in(&field, nvars + 1, &gens, MonomialOrder::Elimination { var: nvars });
    Ok(gb
        .generators
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponent(nvars) == 0))
        .map(|g| Poly::from_terms(&field, nvars, g.terms().iter().copied()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{default_var_names, parse_poly};

    fn polys(field: &Field, nvars: usize, src: &[&str]) -> Vec<Poly> {
        let names = default_var_names(nvars);
        src.iter().map(|s| parse_poly(s, field, &names).unwrap()).collect()
    }

    #[test]
    fn small_bases() {
        let f2 = Field::prime(2).unwrap();
        let gb = groebner_basis(&polys(&f2, 2, &["x + y", "y"])).unwrap();
        assert_eq!(gb.generators(), &polys(&f2, 2, &["x", "y"])[..]);
        let gb = groebner_basis(&polys(&f2, 3, &["x*y", "x*z"])).unwrap();
        assert_eq!(gb.generators(), &polys(&f2, 3, &["x*y", "x*z"])[..]);
        let gb = groebner_basis(&polys(&f2, 1, &["x"])).unwrap();
        assert_eq!(gb.generators().len(), 1);
    }

    #[test]
    fn dimension_examples() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(proj_dim(&polys(&f2, 4, &["x*y*z"]), 3).unwrap(), 2);
        assert_eq!(proj_dim(&polys(&f2, 4, &["x", "y", "z", "w"]), 3).unwrap(), -1);
        assert_eq!(proj_dim(&polys(&f2, 2, &["x*y"]), 1).unwrap(), 0);
        assert_eq!(proj_dim(&polys(&f2, 3, &["x + y*z"]), 2), Err(Error::Inhomogeneous));
        assert_eq!(proj_dim(&polys(&f2, 3, &["0"]), 2).unwrap(), 2);
    }

    #[test]
    fn hilbert_examples() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(hilbert_function(&polys(&f2, 3, &["0"]), 2, 2).unwrap().value, 6);
        assert_eq!(hilbert_function(&polys(&f2, 2, &["x*y"]), 1, 3).unwrap().value, 2);
        let f7 = Field::prime(7).unwrap();
        assert_eq!(hilbert_function(&polys(&f7, 3, &["x^3 + y^3 + z^3"]), 2, 5).unwrap().value, 15);
    }

    #[test]
    fn unit_ideal_collapses() {
        let f3 = Field::prime(3).unwrap();
        let gb = groebner_basis(&polys(&f3, 2, &["x", "x + 1"])).unwrap();
        assert!(gb.is_unit_ideal());
        assert_eq!(gb.krull_dimension(), 0);
    }

    #[test]
    fn buchberger_criterion_on_a_nontrivial_basis() {
        let f5 = Field::prime(5).unwrap();
        let gb = groebner_basis(&polys(&f5, 3, &["x^2 + 2*y*z", "x*y + 3*z^2", "y^3 + x*z^2"])).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        for g in polys(&f5, 3, &["x^2 + 2*y*z", "x*y + 3*z^2"]) {
            assert!(gb.normal_form(&g).is_zero());
        }
    }

    #[test]
    fn intersection_of_two_lines() {
        // lines {x = y = 0} and {x = z = 0} in P^3 share a point
        let f2 = Field::prime(2).unwrap();
        let l1 = polys(&f2, 4, &["x", "y"]);
        let l2 = polys(&f2, 4, &["x", "z"]);
        let inter = ideal_intersection(&l1, &l2).unwrap();
        let gb = groebner_basis(&inter).unwrap();
        assert_eq!(gb.generators(), &polys(&f2, 4, &["y*z", "x"])[..]);
        for d in 1..6 {
            assert_eq!(gb.hilbert_function(d).value, 2 * d as u64 + 1);
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = polys(&Field::prime(2).unwrap(), 2, &["x"]);
        let b = polys(&Field::prime(3).unwrap(), 2, &["y"]);
        let all: Vec<Poly> = a.into_iter().chain(b).collect();
        assert_eq!(groebner_basis(&all).unwrap_err(), Error::MixedFields);
    }
}
