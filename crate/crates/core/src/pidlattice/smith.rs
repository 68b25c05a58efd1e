//! Smith normal form and what it decides: membership in a column lattice and
//! whether that lattice contains a vector of units.

use std::cmp::Ordering;

use super::ring::Pid;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A dense matrix over a PID.
#[derive(Clone, Debug, PartialEq)]
pub struct PidMatrix<R: Pid> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<R::Elem>>,
}

impl<R: Pid> PidMatrix<R> {
    pub fn new(ring: &R, entries: Vec<Vec<R::Elem>>) -> Result<PidMatrix<R>> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if let Some(bad) = entries.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { expected: cols, got: bad.len() });
        }
        Ok(PidMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn zeros(ring: &R, rows: usize, cols: usize) -> PidMatrix<R> {
        PidMatrix { ring: ring.clone(), rows, cols, entries: vec![vec![ring.zero(); cols]; rows] }
    }

    pub fn identity(ring: &R, n: usize) -> PidMatrix<R> {
        let mut m = PidMatrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i][i] = ring.one();
        }
        m
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<R::Elem>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.entries[i][j]
    }

    pub fn mul(&self, other: &PidMatrix<R>) -> Result<PidMatrix<R>> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, got: other.rows });
        }
        let r = &self.ring;
        let entries = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| {
                        (0..self.cols).fold(r.zero(), |acc, k| r.add(&acc, &r.mul(&self.entries[i][k], &other.entries[k][j])))
                    })
                    .collect()
            })
            .collect();
        Ok(PidMatrix { ring: r.clone(), rows: self.rows, cols: other.cols, entries })
    }

    pub fn mul_vec(&self, v: &[R::Elem]) -> Result<Vec<R::Elem>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, got: v.len() });
        }
        let r = &self.ring;
        Ok(self
            .entries
            .iter()
            .map(|row| row.iter().zip(v).fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b))))
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.entries.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.entries {
            row.swap(a, b);
        }
    }

    /// `row_dst += c · row_src`.
    fn add_row(&mut self, dst: usize, src: usize, c: &R::Elem) {
        for j in 0..self.cols {
            let v = self.ring.mul(c, &self.entries[src][j]);
            self.entries[dst][j] = self.ring.add(&self.entries[dst][j], &v);
        }
    }

    /// `col_dst += c · col_src`.
    fn add_col(&mut self, dst: usize, src: usize, c: &R::Elem) {
        for i in 0..self.rows {
            let v = self.ring.mul(c, &self.entries[i][src]);
            self.entries[i][dst] = self.ring.add(&self.entries[i][dst], &v);
        }
    }

    fn scale_row(&mut self, i: usize, u: &R::Elem) {
        for j in 0..self.cols {
            self.entries[i][j] = self.ring.mul(u, &self.entries[i][j]);
        }
    }
}

/// `U · M · V = D` with `U`, `V` invertible and `D` diagonal,
/// `d_1 | d_2 | …`, each `d_i` normalized.
#[derive(Clone, Debug)]
pub struct SmithForm<R: Pid> {
    pub u: PidMatrix<R>,
    pub v: PidMatrix<R>,
    pub d: PidMatrix<R>,
}

impl<R: Pid> SmithForm<R> {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<R::Elem> {
        let r = self.d.ring();
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.entries[i][i].clone())
            .take_while(|x| !r.is_zero(x))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Some `x` with `M · x = target`, or `None` when `target` lies outside
    /// the column lattice of `M`.
    pub fn solve(&self, target: &[R::Elem]) -> Result<Option<Vec<R::Elem>>> {
        let r = self.d.ring();
        let w = self.u.mul_vec(target)?;
        let factors = self.invariant_factors();
        let mut y = vec![r.zero(); self.d.cols];
        for (i, wi) in w.iter().enumerate() {
            match factors.get(i) {
                Some(di) => {
                    let (q, rem) = r.div_rem(wi, di);
                    if !r.is_zero(&rem) {
                        return Ok(None);
                    }
                    y[i] = q;
                }
                None if !r.is_zero(wi) => return Ok(None),
                None => {}
            }
        }
        Ok(Some(self.v.mul_vec(&y)?))
    }
}

/// Smith normal form. The pivot is always the nonzero entry of least
/// Euclidean size in the remaining block, earliest in row-major order on
/// ties, so the output is deterministic.
pub fn smith_normal_form<R: Pid>(m: &PidMatrix<R>) -> SmithForm<R> {
    let r = m.ring.clone();
    let mut d = m.clone();
    let mut u = PidMatrix::identity(&r, m.rows);
    let mut v = PidMatrix::identity(&r, m.cols);
    let steps = m.rows.min(m.cols);
    for t in 0..steps {
        while let Some((pi, pj)) = least_pivot(&d, t) {
            if pi != t {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if pj != t {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            let pivot = d.entries[t][t].clone();
            let mut clean = true;
            for i in t + 1..d.rows {
                if r.is_zero(&d.entries[i][t]) {
                    continue;
                }
                let (q, rem) = r.div_rem(&d.entries[i][t], &pivot);
                let nq = r.neg(&q);
                d.add_row(i, t, &nq);
                u.add_row(i, t, &nq);
                clean &= r.is_zero(&rem);
            }
            for j in t + 1..d.cols {
                if r.is_zero(&d.entries[t][j]) {
                    continue;
                }
                let (q, rem) = r.div_rem(&d.entries[t][j], &pivot);
                let nq = r.neg(&q);
                d.add_col(j, t, &nq);
                v.add_col(j, t, &nq);
                clean &= r.is_zero(&rem);
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole remaining block
            let bad = (t + 1..d.rows).find(|&i| (t + 1..d.cols).any(|j| !r.divides(&pivot, &d.entries[i][j])));
            match bad {
                Some(i) => {
                    let one = r.one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if !r.is_zero(&d.entries[t][t]) {
            let unit = r.normalizing_unit(&d.entries[t][t]);
            d.scale_row(t, &unit);
            u.scale_row(t, &unit);
        }
    }
    SmithForm { u, v, d }
}

fn least_pivot<R: Pid>(d: &PidMatrix<R>, t: usize) -> Option<(usize, usize)> {
    let r = &d.ring;
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = &d.entries[i][j];
            if r.is_zero(x) {
                continue;
            }
            let better = match best {
                None => true,
                Some((bi, bj)) => r.size_cmp(x, &d.entries[bi][bj]) == Ordering::Less,
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Some `x` with `M · x = v`, if the ring admits one.
pub fn solve_membership<R: Pid>(m: &PidMatrix<R>, v: &[R::Elem]) -> Result<Option<Vec<R::Elem>>> {
    if v.len() != m.rows {
        return Err(Error::LengthMismatch { expected: m.rows, got: v.len() });
    }
    smith_normal_form(m).solve(v)
}

/// Rows indexed by points, columns by the degree-`d` monomials in
/// lexicographically descending order (`x^d, x^{d-1}y, …, y^d` on `P^1`);
/// entry `(i, j)` is monomial `j` at the given coordinates of point `i`.
pub fn evaluation_matrix<R: Pid>(ring: &R, points: &[Vec<R::Elem>], d: u32) -> Result<PidMatrix<R>> {
    let nvars = points.first().map_or(0, Vec::len);
    if let Some(bad) = points.iter().find(|p| p.len() != nvars) {
        return Err(Error::LengthMismatch { expected: nvars, got: bad.len() });
    }
    let monomials = lex_exponents(nvars, d);
    let entries = points
        .iter()
        .map(|p| {
            monomials
                .iter()
                .map(|exps| exps.iter().zip(p).fold(ring.one(), |acc, (&e, c)| ring.mul(&acc, &ring.pow(c, e))))
                .collect()
        })
        .collect();
    PidMatrix::new(ring, entries)
}

/// Exponent vectors of degree `d`, lexicographically descending.
fn lex_exponents(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    if nvars == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|a| {
            lex_exponents(nvars - 1, d - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

/// Whether some `x` makes every entry of `M · x` a unit.
///
/// Targets are unit vectors with first entry 1 (a common unit factor does
/// not change the answer), so `#units^{rows-1}` membership problems are
/// solved against one Smith form; that count must fit `budget.max_enum`.
pub fn unit_vector_in_image<R: Pid>(m: &PidMatrix<R>, budget: &Budget) -> Result<bool> {
    Ok(unit_vector_witness(m, budget)?.is_some())
}

/// A preimage `x` and the unit vector `M · x`.
pub type UnitWitness<E> = (Vec<E>, Vec<E>);

/// Like [`unit_vector_in_image`], returning the preimage and the unit target.
pub fn unit_vector_witness<R: Pid>(m: &PidMatrix<R>, budget: &Budget) -> Result<Option<UnitWitness<R::Elem>>> {
    let r = m.ring();
    if m.rows == 0 {
        return Ok(Some((vec![r.zero(); m.cols], vec![])));
    }
    let units = r.units();
    let patterns = (units.len() as f64).powi(m.rows as i32 - 1);
    if patterns > budget.max_enum as f64 {
        return Err(Error::budget("unit patterns", patterns, budget.max_enum as f64));
    }
    let snf = smith_normal_form(m);
    let mut digits = vec![0usize; m.rows - 1];
    loop {
        let target: Vec<R::Elem> =
            std::iter::once(r.one()).chain(digits.iter().map(|&i| units[i].clone())).collect();
        if let Some(x) = snf.solve(&target)? {
            return Ok(Some((x, target)));
        }
        let Some(pos) = digits.iter().rposition(|&i| i + 1 < units.len()) else {
            return Ok(None);
        };
        digits[pos] += 1;
        for x in &mut digits[pos + 1..] {
            *x = 0;
        }
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant<R: Pid>(m: &PidMatrix<R>) -> Result<R::Elem> {
    if m.rows != m.cols {
        return Err(Error::LengthMismatch { expected: m.rows, got: m.cols });
    }
    let r = m.ring();
    let n = m.rows;
    let mut a = m.entries.clone();
    let mut sign_flip = false;
    let mut prev = r.one();
    for k in 0..n {
        if r.is_zero(&a[k][k]) {
            let Some(p) = (k + 1..n).find(|&i| !r.is_zero(&a[i][k])) else {
                return Ok(r.zero());
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = r.sub(&r.mul(&a[i][j], &a[k][k]), &r.mul(&a[i][k], &a[k][j]));
                a[i][j] = r.div_rem(&num, &prev).0;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { r.one() } else { a[n - 1][n - 1].clone() };
    Ok(if sign_flip { r.neg(&det) } else { det })
}
