#![allow(dead_code)]

use sop_core::algebra::{default_var_names, parse_poly, Field, Poly};
use sop_core::ProjScheme;

pub fn field(p: u64, k: u32) -> Field {
    Field::new(p, k).unwrap()
}

pub fn polys(f: &Field, nvars: usize, src: &[&str]) -> Vec<Poly> {
    let names = default_var_names(nvars);
    src.iter().map(|s| parse_poly(s, f, &names).unwrap()).collect()
}

pub fn scheme(p: u64, k: u32, r: usize, gens: &[&str], deghat: Option<u64>) -> ProjScheme {
    let f = field(p, k);
    ProjScheme::new(&f, r, polys(&f, r + 1, gens), deghat).unwrap()
}

/// Schemes whose `deghat` is known exactly.
pub fn exact_deghat_fixtures() -> Vec<(&'static str, ProjScheme)> {
    vec![
        ("P^1/F_2", scheme(2, 1, 1, &[], Some(1))),
        ("P^2/F_3", scheme(3, 1, 2, &[], Some(1))),
        ("V(xy)/F_2", scheme(2, 1, 2, &["x*y"], Some(2))),
        ("V(xyz)/F_2", scheme(2, 1, 3, &["x*y*z"], Some(3))),
        ("V(xyz)/F_3", scheme(3, 1, 3, &["x*y*z"], Some(3))),
        ("V(x^2+y^2+z^2)/F_2", scheme(2, 1, 3, &["x^2 + y^2 + z^2"], Some(1))),
        ("V(x^2+y^2+z^2)/F_3", scheme(3, 1, 3, &["x^2 + y^2 + z^2"], Some(2))),
        ("V(x^2+y^2+z^2)/F_5", scheme(5, 1, 3, &["x^2 + y^2 + z^2"], Some(2))),
        ("conic/F_2", scheme(2, 1, 2, &["x*y + z^2"], Some(1))),
        ("three points/F_2", scheme(2, 1, 1, &["x^2*y + x*y^2"], Some(3))),
        ("Fermat cubic/F_4", scheme(2, 2, 3, &["x^3 + y^3 + z^3 + w^3"], Some(3))),
    ]
}
