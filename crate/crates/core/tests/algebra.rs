mod common;

use common::*;
use proptest::prelude::*;
use sop_core::algebra::{monomials_of_degree, stream_rng, ExtensionEmbedding, Field, Poly};

const ORDERS: [(u64, u32); 8] = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4)];

#[test]
fn every_nonzero_element_is_invertible() {
    for (p, k) in ORDERS {
        let f = field(p, k);
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "F_{}", f.order());
        }
        assert_eq!(f.inv(0), None);
    }
}

#[test]
fn frobenius_fixes_extensions_and_their_base() {
    for (p, k) in [(2u64, 1u32), (2, 2), (3, 1), (5, 1)] {
        let base = field(p, k);
        let q = base.order() as u64;
        for ell in 1..=3u32 {
            let emb = ExtensionEmbedding::new(&base, ell).unwrap();
            let top = emb.top();
            for x in top.elements() {
                assert_eq!(top.pow(x, q.pow(ell)), x);
            }
            for b in base.elements() {
                let y = emb.map(b);
                assert_eq!(top.pow(y, q), y);
                assert_eq!(emb.map(base.mul(b, b)), top.mul(y, y));
            }
        }
    }
}

fn field_and_triple() -> impl Strategy<Value = (Field, u32, u32, u32)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|(p, k)| {
        let f = field(p, k);
        let q = f.order();
        (Just(f), 0..q, 0..q, 0..q)
    })
}

fn random_form(f: &Field, nvars: usize, d: u32, seed: u64) -> Poly {
    Poly::random_homogeneous(f, nvars, d, &mut stream_rng(seed, 0))
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in field_and_triple()) {
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
    }

    #[test]
    fn evaluation_is_multiplicative(
        (p, k) in prop::sample::select(ORDERS.to_vec()),
        seed in any::<u64>(),
        d1 in 0u32..4,
        d2 in 0u32..4,
        point in prop::array::uniform3(any::<u32>()),
    ) {
        let f = field(p, k);
        let pt = point.map(|c| c % f.order());
        let g = random_form(&f, 3, d1, seed);
        let h = random_form(&f, 3, d2, seed ^ 1);
        prop_assert_eq!(g.mul(&h).unwrap().eval_raw(&pt), f.mul(g.eval_raw(&pt), h.eval_raw(&pt)));
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        (p, k) in prop::sample::select(ORDERS.to_vec()),
        seed in any::<u64>(),
        d in 1u32..4,
        entries in prop::array::uniform8(any::<u32>()),
        params in prop::array::uniform2(any::<u32>()),
    ) {
        let f = field(p, k);
        let q = f.order();
        let rows = vec![entries[..4].iter().map(|c| c % q).collect::<Vec<_>>(), entries[4..].iter().map(|c| c % q).collect()];
        let t = params.map(|c| c % q);
        let g = random_form(&f, 4, d, seed);
        match g.substitute_linear(&rows) {
            Ok(sub) => {
                let image: Vec<u32> = (0..4).map(|j| f.add(f.mul(t[0], rows[0][j]), f.mul(t[1], rows[1][j]))).collect();
                prop_assert_eq!(sub.eval_raw(&t), g.eval_raw(&image));
            }
            Err(_) => {
                // dependent rows: one row is a multiple of the other
                let det_zero = (0..4).all(|i| (0..4).all(|j| f.mul(rows[0][i], rows[1][j]) == f.mul(rows[0][j], rows[1][i])));
                prop_assert!(det_zero);
            }
        }
    }
}

#[test]
fn random_coefficients_are_uniform() {
    // F_3, three variables, degree 2: six coefficients per draw
    let f = field(3, 1);
    let mons = monomials_of_degree(3, 2);
    let draws = 100_000u32;
    let mut rng = stream_rng(7, 0);
    let mut freq = vec![[0u32; 3]; mons.len()];
    for _ in 0..draws {
        let g = Poly::random_homogeneous(&f, 3, 2, &mut rng);
        for (i, &m) in mons.iter().enumerate() {
            freq[i][g.coefficient(m) as usize] += 1;
        }
    }
    let p = 1.0 / 3.0;
    let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
    for row in freq {
        for count in row {
            assert!((count as f64 - draws as f64 * p).abs() <= 4.0 * sigma, "{count}");
        }
    }
}

#[test]
fn degree_one_draws_cover_the_space_evenly() {
    let f = field(2, 1);
    let mut seen = [0u32; 4];
    for i in 0..4000 {
        let g = Poly::random_homogeneous(&f, 2, 1, &mut stream_rng(42, i));
        let idx = g.coefficient(monomials_of_degree(2, 1)[0]) + 2 * g.coefficient(monomials_of_degree(2, 1)[1]);
        seen[idx as usize] += 1;
    }
    let sigma = (4000.0f64 * 0.25 * 0.75).sqrt();
    assert!(seen.iter().all(|&c| (c as f64 - 1000.0).abs() <= 4.0 * sigma), "{seen:?}");
    let a = Poly::random_homogeneous(&f, 2, 1, &mut stream_rng(42, 0));
    let b = Poly::random_homogeneous(&f, 2, 1, &mut stream_rng(42, 0));
    assert_eq!(a, b);
}
