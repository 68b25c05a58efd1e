mod common;

use common::*;
use proptest::prelude::*;
use sop_core::algebra::{ExtensionEmbedding, Poly};
use sop_core::counting::*;
use sop_core::{Budget, ProjScheme};

fn pn_points(q: u128, n: u32) -> u128 {
    (q.pow(n + 1) - 1) / (q - 1)
}

#[test]
fn projective_space_counts_match_the_closed_form() {
    let b = Budget::default();
    for p in [2u64, 3] {
        for r in 1..=3usize {
            // P^r as the hyperplane w = 0 of P^{r+1} takes the enumeration path
            // only when the generator is not linear, so use the square
            let f = field(p, 1);
            let last = ["y", "z", "w", "x4"][r - 1];
            let names: Vec<String> = ["x", "y", "z", "w", "x4"][..r + 2].iter().map(|s| s.to_string()).collect();
            let g = sop_core::algebra::parse_poly(&format!("{last}^2"), &f, &names).unwrap();
            let x = ProjScheme::new(&f, r + 1, vec![g], None).unwrap();
            for ell in 1..=3u32 {
                if (p as f64).powi((ell * (r as u32 + 2)) as i32) > b.max_points as f64 {
                    continue;
                }
                let expect = pn_points((p as u128).pow(ell), r as u32);
                assert_eq!(count_points(&x, ell, &b).unwrap(), expect, "p={p} r={r} ell={ell}");
            }
        }
    }
}

#[test]
fn coordinate_planes_by_inclusion_exclusion() {
    // three planes of P^3 meeting pairwise in lines, all three in a point
    let x = scheme(2, 1, 3, &["x*y*z"], None);
    let b = Budget::default();
    for ell in 1..=4u32 {
        let q = 2u128.pow(ell);
        let expect = 3 * pn_points(q, 2) - 3 * pn_points(q, 1) + 1;
        assert_eq!(count_points(&x, ell, &b).unwrap(), expect);
    }
}

#[test]
fn point_counts_respect_the_projective_degree_bound() {
    let b = Budget::default();
    for (name, x) in exact_deghat_fixtures() {
        let n = count_points(&x, 1, &b).unwrap();
        let q = x.field().order() as u128;
        let bound = x.deghat_bound() as u128 * pn_points(q, x.n() as u32);
        assert!(n <= bound, "{name}: {n} > {bound}");
    }
}

#[test]
fn affine_point_bound_fails_projectively() {
    // deghat · q^n undercounts projective space and the coordinate planes
    let b = Budget::default();
    let p1 = scheme(2, 1, 1, &[], Some(1));
    assert!(count_points(&p1, 1, &b).unwrap() > 2);
    let xyz = scheme(2, 1, 3, &["x*y*z"], Some(3));
    let points = count_points(&xyz, 1, &b).unwrap();
    assert_eq!(points, 13);
    assert!(points > xyz.deghat_bound() as u128 * 4);
}

#[test]
fn tallies_are_consistent() {
    let b = Budget::default();
    for (name, x) in exact_deghat_fixtures() {
        let e = (1..=6usize)
            .take_while(|&e| (x.field().order() as f64).powi((e * x.nvars()) as i32) <= b.max_points as f64)
            .last()
            .unwrap_or(1);
        let counts = point_counts(&x, e, &b).unwrap();
        let tally = closed_point_tally(&counts).unwrap();
        for ell in 1..=e {
            let sum: u128 = (1..=ell).filter(|m| ell % m == 0).map(|m| m as u128 * tally.a()[m - 1]).sum();
            assert_eq!(sum, counts.counts()[ell - 1], "{name} at ell = {ell}");
        }
    }
}

#[test]
fn truncated_zeta_of_projective_space_matches_the_product() {
    let b = Budget::default();
    for q in [2u64, 3] {
        for n in 0..=2usize {
            let x = scheme(q, 1, n.max(1), if n == 0 { &["y"] } else { &[] }, None);
            let s = n as u32 + 2;
            let z = zeta_inv_truncated(&x, s, 25, &b).unwrap();
            let closed: f64 = (0..=n as i32).map(|i| 1.0 - (q as f64).powi(i - s as i32)).product();
            assert!((z.value - closed).abs() <= 1e-9 * closed, "q={q} n={n}: {} vs {closed}", z.value);
        }
    }
}

/// All lines of `P^3(F_q)` as point sets, by spanning pairs of points.
fn all_lines(q: u32) -> Vec<Vec<[u32; 4]>> {
    let f = field(q as u64, 1);
    let points: Vec<[u32; 4]> = (0..q.pow(4))
        .map(|i| [i % q, (i / q) % q, (i / q / q) % q, i / q / q / q])
        .filter(|p| p.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    let normalize = |v: [u32; 4]| -> Option<[u32; 4]> {
        let lead = *v.iter().find(|&&c| c != 0)?;
        let inv = f.inv(lead).unwrap();
        Some(v.map(|c| f.mul(c, inv)))
    };
    let mut lines: Vec<Vec<[u32; 4]>> = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let mut span: Vec<[u32; 4]> = (0..q)
                .flat_map(|s| (0..q).map(move |t| (s, t)))
                .filter_map(|(s, t)| normalize([0, 1, 2, 3].map(|j| f.add(f.mul(s, a[j]), f.mul(t, b[j])))))
                .collect();
            span.sort();
            span.dedup();
            if !lines.contains(&span) {
                lines.push(span);
            }
        }
    }
    lines
}

#[test]
fn line_census_matches_brute_force() {
    // a line lies on a surface of degree c iff the surface vanishes at more
    // than c points of the line over some extension
    for (q, gens) in [(2u32, "x*y*z"), (2, "x*y + z*w"), (3, "x*y*z"), (3, "x^2 + y^2 - z^2 - w^2")] {
        let x = scheme(q as u64, 1, 3, &[gens], None);
        let lines = all_lines(q);
        assert_eq!(lines.len() as u128, gaussian_binomial(4, 2, q as u64).unwrap());
        let emb = ExtensionEmbedding::new(x.field(), 2).unwrap();
        let top = emb.top();
        let lifted: Vec<Poly> = x.gens().iter().map(|g| g.map_field(&emb)).collect();
        let brute = lines
            .iter()
            .filter(|line| {
                let (a, b) = (line[0].map(|c| emb.map(c)), line[1].map(|c| emb.map(c)));
                top.elements().all(|s| {
                    let pt: Vec<u32> = (0..4).map(|j| top.add(top.mul(s, a[j]), b[j])).collect();
                    lifted.iter().all(|g| g.eval_raw(&pt) == 0)
                })
            })
            .count() as u64;
        let census = count_linear_subspaces(&x, 1, &Budget::default()).unwrap();
        assert_eq!(census.count, brute, "{gens} over F_{q}");
    }
}

#[test]
fn census_values() {
    let b = Budget::default();
    assert_eq!(count_linear_subspaces(&scheme(2, 1, 3, &["x*y*z"], None), 1, &b).unwrap().count, 18);
    // 3 planes: 3·7 lines minus the 3 double-counted axes
    assert_eq!(count_linear_subspaces(&scheme(2, 1, 3, &["x*y*z"], None), 2, &b).unwrap().count, 3);
    assert_eq!(count_linear_subspaces(&scheme(2, 2, 3, &["x^3 + y^3 + z^3 + w^3"], None), 1, &b).unwrap().count, 27);
    let none = scheme(2, 2, 3, &["x^3 + y^3 + z^3 + [0,1]*w^3"], None);
    assert_eq!(count_linear_subspaces(&none, 1, &b).unwrap().count, 0);
}

fn invertible_2x2(q: u32) -> impl Strategy<Value = [u32; 4]> {
    prop::array::uniform4(0..q).prop_filter("invertible", move |m| !(m[0] * m[3] + (q - 1) * m[1] * m[2]).is_multiple_of(q))
}

proptest! {
    #[test]
    fn containment_ignores_the_choice_of_basis(
        rows in prop::array::uniform8(0u32..3),
        g in invertible_2x2(3),
        which in 0usize..3,
    ) {
        let x = [
            scheme(3, 1, 3, &["x*y*z"], None),
            scheme(3, 1, 3, &["x*y - z*w"], None),
            scheme(3, 1, 3, &["x^2 + y^2 - z^2 - w^2"], None),
        ][which].clone();
        let f = x.field().clone();
        let a = vec![rows[..4].to_vec(), rows[4..].to_vec()];
        let b: Vec<Vec<u32>> = (0..2)
            .map(|i| (0..4).map(|j| f.add(f.mul(g[2 * i], a[0][j]), f.mul(g[2 * i + 1], a[1][j]))).collect())
            .collect();
        match (contains_plane(&x, &a), contains_plane(&x, &b)) {
            (Ok(u), Ok(v)) => prop_assert_eq!(u, v),
            (Err(_), Err(_)) => {}
            other => prop_assert!(false, "rank mismatch: {:?}", other),
        }
    }
}
