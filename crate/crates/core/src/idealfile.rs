//! Line-oriented ideal files.
//!
//! ```text
//! # the coordinate tetrahedron
//! field 2
//! vars x y z w
//! gen x*y*z
//! deghat 3
//! ```
//!
//! `field <p> [<k>]` and `vars <name>…` (at most seven names) come first;
//! each `gen` line holds one homogeneous polynomial; `deghat` optionally
//! supplies the sum of the degrees of the reduced components. `#` starts a
//! comment.

use std::fmt::Write as _;

use crate::algebra::{format_poly, text::parse_poly_at, Field, Poly, MAX_VARS};
use crate::error::{Error, Result};
use crate::scheme::ProjScheme;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub field: Field,
    pub vars: Vec<String>,
    pub gens: Vec<Poly>,
    pub deghat: Option<u64>,
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<IdealFile> {
        let mut field: Option<Field> = None;
        let mut vars: Option<Vec<String>> = None;
        let mut gens = Vec::new();
        let mut deghat = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "field" => {
                    if field.is_some() {
                        return Err(Error::parse(line_no, "duplicate field line"));
                    }
                    let nums: Vec<u64> = rest
                        .split_whitespace()
                        .map(|w| w.parse().map_err(|_| Error::parse(line_no, format!("bad number '{w}'"))))
                        .collect::<Result<_>>()?;
                    let f = match nums[..] {
                        [p] => Field::new(p, 1),
                        [p, k] => Field::new(p, k as u32),
                        _ => return Err(Error::parse(line_no, "expected 'field <p> [<k>]'")),
                    };
                    field = Some(f.map_err(|e| Error::parse(line_no, e.to_string()))?);
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(Error::parse(line_no, "duplicate vars line"));
                    }
                    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    validate_names(&names).map_err(|msg| Error::parse(line_no, msg))?;
                    vars = Some(names);
                }
                "gen" => {
                    let (Some(f), Some(v)) = (&field, &vars) else {
                        return Err(Error::parse(line_no, "gen before field and vars"));
                    };
                    let p = parse_poly_at(rest, f, v, line_no)?;
                    if !p.is_homogeneous() {
                        return Err(Error::parse(line_no, "generator is not homogeneous"));
                    }
                    gens.push(p);
                }
                "deghat" => {
                    if deghat.is_some() {
                        return Err(Error::parse(line_no, "duplicate deghat line"));
                    }
                    let v: u64 = rest.parse().map_err(|_| Error::parse(line_no, format!("bad deghat '{rest}'")))?;
                    deghat = Some(v);
                }
                other => return Err(Error::parse(line_no, format!("unknown directive '{other}'"))),
            }
        }
        let last = text.lines().count().max(1);
        let field = field.ok_or_else(|| Error::parse(last, "missing field line"))?;
        let vars = vars.ok_or_else(|| Error::parse(last, "missing vars line"))?;
        Ok(IdealFile { field, vars, gens, deghat })
    }

    /// Canonical text: zero generators dropped, polynomials in canonical form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.field.is_prime_field() {
            writeln!(out, "field {}", self.field.characteristic()).unwrap();
        } else {
            writeln!(out, "field {} {}", self.field.characteristic(), self.field.degree()).unwrap();
        }
        writeln!(out, "vars {}", self.vars.join(" ")).unwrap();
        for g in self.gens.iter().filter(|g| !g.is_zero()) {
            writeln!(out, "gen {}", format_poly(g, &self.vars)).unwrap();
        }
        if let Some(d) = self.deghat {
            writeln!(out, "deghat {d}").unwrap();
        }
        out
    }

    /// The scheme cut out in `P^{#vars - 1}`.
    pub fn scheme(&self) -> Result<ProjScheme> {
        if self.vars.is_empty() {
            return Err(Error::InvalidArgument("no variables".into()));
        }
        let gens = self.gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        ProjScheme::new(&self.field, self.vars.len() - 1, gens, self.deghat)
    }
}

fn validate_names(names: &[String]) -> std::result::Result<(), String> {
    if names.is_empty() {
        return Err("vars line needs at least one name".into());
    }
    if names.len() > MAX_VARS {
        return Err(format!("at most {MAX_VARS} variables are supported, got {}", names.len()));
    }
    for (i, n) in names.iter().enumerate() {
        let mut chars = n.chars();
        let ok_start = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if !ok_start || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(format!("bad variable name '{n}'"));
        }
        if names[..i].contains(n) {
            return Err(format!("duplicate variable '{n}'"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const XYZ: &str = "# coordinate planes\nfield 2\nvars x y z w\ngen x*y*z  # three planes\ndeghat 3\n";

    #[test]
    fn parses_and_builds_scheme() {
        let f = IdealFile::parse(XYZ).unwrap();
        assert_eq!(f.vars.len(), 4);
        assert_eq!(f.deghat, Some(3));
        let x = f.scheme().unwrap();
        assert_eq!((x.r(), x.n(), x.deghat_bound()), (3, 2, 3));
        assert_eq!(f.to_text(), "field 2\nvars x y z w\ngen x*y*z\ndeghat 3\n");
    }

    #[test]
    fn extension_fields_round_trip() {
        let text = "field 2 2\nvars x y z w\ngen x^3 + y^3 + z^3 + [0,1]*w^3\n";
        let f = IdealFile::parse(text).unwrap();
        assert_eq!(f.to_text(), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("vars x y\nfield 2\ngen x + y^2\n", 3),
            ("field 4\n", 1),
            ("field 2\nvars x x\n", 2),
            ("field 2\nvars a b c d e f g h\n", 2),
            ("gen x\n", 1),
            ("field 2\nvars x y\nbogus\n", 3),
            ("field 2\n", 1),
            ("field 2\nvars x y\ngen x + q\n", 3),
        ];
        for (text, line) in cases {
            match IdealFile::parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    proptest! {
        #[test]
        fn print_parse_print_is_stable(coeffs in proptest::collection::vec(0u32..5, 10), deghat in proptest::option::of(1u64..4)) {
            let field = Field::prime(5).unwrap();
            let vars: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
            let g = Poly::from_coefficients(&field, 3, 3, &coeffs);
            let file = IdealFile { field, vars, gens: vec![g], deghat };
            let text = file.to_text();
            let back = IdealFile::parse(&text).unwrap();
            prop_assert_eq!(back.to_text(), text);
        }
    }
}
