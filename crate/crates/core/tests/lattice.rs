use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;
use sop_core::algebra::{stream_rng, Field};
use sop_core::pidlattice::*;
use sop_core::Budget;

fn random_matrix<R: Pid>(ring: &R, rng: &mut impl Rng, entry: &impl Fn(&mut dyn rand::RngCore) -> R::Elem) -> PidMatrix<R> {
    let rows = rng.random_range(1..=4);
    let cols = rng.random_range(1..=4);
    let entries = (0..rows).map(|_| (0..cols).map(|_| entry(rng)).collect()).collect();
    PidMatrix::new(ring, entries).unwrap()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n).flat_map(|last| combinations(last, k - 1).into_iter().map(move |mut c| {
        c.push(last);
        c
    })).collect()
}

/// `gcd` of all `k × k` minors, normalized.
fn minor_gcd<R: Pid>(m: &PidMatrix<R>, k: usize) -> R::Elem {
    let ring = m.ring();
    let mut g = ring.zero();
    for rs in combinations(m.rows(), k) {
        for cs in combinations(m.cols(), k) {
            let sub: Vec<Vec<R::Elem>> = rs.iter().map(|&i| cs.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
            let det = determinant(&PidMatrix::new(ring, sub).unwrap()).unwrap();
            g = ring.gcd(&g, &det);
        }
    }
    g
}

fn normalized<R: Pid>(ring: &R, a: &R::Elem) -> R::Elem {
    ring.mul(&ring.normalizing_unit(a), a)
}

fn check_snf<R: Pid>(ring: &R, m: &PidMatrix<R>) {
    let snf = smith_normal_form(m);
    assert_eq!(snf.u.mul(m).unwrap().mul(&snf.v).unwrap().entries(), snf.d.entries(), "U·M·V = D for {m:?}");
    for i in 0..snf.d.rows() {
        for j in 0..snf.d.cols() {
            assert!(i == j || ring.is_zero(snf.d.get(i, j)));
        }
    }
    assert!(ring.is_unit(&determinant(&snf.u).unwrap()));
    assert!(ring.is_unit(&determinant(&snf.v).unwrap()));
    let factors = snf.invariant_factors();
    for w in factors.windows(2) {
        assert!(ring.divides(&w[0], &w[1]), "divisibility chain {factors:?}");
    }
    // the product of the first k invariant factors is the gcd of k × k minors
    let mut product = ring.one();
    for k in 1..=m.rows().min(m.cols()) {
        let expect = minor_gcd(m, k);
        if k <= factors.len() {
            product = ring.mul(&product, &factors[k - 1]);
            assert_eq!(normalized(ring, &product), expect, "k = {k} for {m:?}");
        } else {
            assert!(ring.is_zero(&expect));
        }
    }
}

#[test]
fn smith_forms_over_the_integers() {
    let mut rng = stream_rng(60, 0);
    for _ in 0..200 {
        let m = random_matrix(&Integers, &mut rng, &|r: &mut dyn rand::RngCore| BigInt::from(r.random_range(-9..=9)));
        check_snf(&Integers, &m);
    }
}

#[test]
fn smith_forms_over_polynomial_rings() {
    for (p, max_deg) in [(2u64, 3usize), (3, 2)] {
        let ring = FpPoly::new(&Field::prime(p).unwrap());
        let mut rng = stream_rng(61, p);
        for _ in 0..200 {
            let m = random_matrix(&ring, &mut rng, &|r: &mut dyn rand::RngCore| {
                let coeffs: Vec<u32> = (0..=max_deg).map(|_| r.random_range(0..p as u32)).collect();
                ring.from_coeffs(&coeffs)
            });
            check_snf(&ring, &m);
        }
    }
}

fn int_matrix(rows: &[&[i64]]) -> PidMatrix<Integers> {
    PidMatrix::new(&Integers, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
}

proptest! {
    #[test]
    fn membership_is_sound_and_complete(entries in prop::array::uniform4(-6i64..=6), v in prop::array::uniform2(-20i64..=20)) {
        let m = int_matrix(&[&entries[..2], &entries[2..]]);
        let target: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        let solution = solve_membership(&m, &target).unwrap();
        if let Some(x) = &solution {
            prop_assert_eq!(&m.mul_vec(x).unwrap(), &target);
        }
        let boxed = (-10i64..=10).any(|a| (-10i64..=10).any(|b| {
            entries[0] * a + entries[1] * b == v[0] && entries[2] * a + entries[3] * b == v[1]
        }));
        if boxed {
            prop_assert!(solution.is_some());
        }
    }

    #[test]
    fn unit_verdict_survives_unimodular_changes(
        entries in prop::collection::vec(-4i64..=4, 9),
        ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..6),
        signs in prop::array::uniform3(prop::bool::ANY),
    ) {
        let m = int_matrix(&[&entries[0..3], &entries[3..6], &entries[6..9]]);
        let budget = Budget::default();
        let before = unit_vector_in_image(&m, &budget).unwrap();
        // column operations c_j += a·c_i, then row scaling by ±1
        let mut rows: Vec<Vec<i64>> = entries.chunks(3).map(<[i64]>::to_vec).collect();
        for (i, j, a) in ops {
            if i != j {
                for row in rows.iter_mut() {
                    row[j] += a * row[i];
                }
            }
        }
        for (row, neg) in rows.iter_mut().zip(signs) {
            if neg {
                row.iter_mut().for_each(|x| *x = -*x);
            }
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        prop_assert_eq!(unit_vector_in_image(&int_matrix(&refs), &budget).unwrap(), before);
    }
}

#[test]
fn pass_sets_are_closed_under_lcm() {
    let budget = Budget::default();
    let reports = [
        verify_arithmetic_example(Preset::Deg60 { d_max: 120 }, &budget).unwrap(),
        verify_arithmetic_example(Preset::KtTwoPoints { p: 2, d_max: 12 }, &budget).unwrap(),
        verify_arithmetic_example(Preset::KtTwoPoints { p: 3, d_max: 12 }, &budget).unwrap(),
    ];
    assert_eq!(reports[0].pass_set.as_deref(), Some(&[60, 120][..]));
    for r in &reports {
        let set = r.pass_set.as_ref().unwrap();
        let d_max = r.params["d_max"] as u32;
        for &a in set {
            for &b in set {
                let l = num_integer::lcm(a, b);
                assert!(l > d_max || set.contains(&l), "{}: lcm({a}, {b})", r.preset);
            }
        }
    }
}
