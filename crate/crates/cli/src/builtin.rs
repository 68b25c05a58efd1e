//! Ideal files shipped with the binary, addressable by name.

pub const IDEALS: &[(&str, &str)] = &[
    ("xyz-f2", include_str!("../ideals/xyz-f2.ideal")),
    ("xyz-f3", include_str!("../ideals/xyz-f3.ideal")),
    ("xyz-f5", include_str!("../ideals/xyz-f5.ideal")),
    ("quadric-f2", include_str!("../ideals/quadric-f2.ideal")),
    ("quadric-f3", include_str!("../ideals/quadric-f3.ideal")),
    ("quadric-f5", include_str!("../ideals/quadric-f5.ideal")),
    ("fermat-f4", include_str!("../ideals/fermat-f4.ideal")),
    ("noline-f4", include_str!("../ideals/noline-f4.ideal")),
    ("two-lines-f2", include_str!("../ideals/two-lines-f2.ideal")),
    ("p1-f2", include_str!("../ideals/p1-f2.ideal")),
];

pub fn lookup(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".ideal").unwrap_or(name);
    IDEALS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sop_core::idealfile::IdealFile;

    #[test]
    fn builtins_parse_and_round_trip() {
        for (name, text) in IDEALS {
            let file = IdealFile::parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            file.scheme().unwrap_or_else(|e| panic!("{name}: {e}"));
            let again = IdealFile::parse(&file.to_text()).unwrap();
            assert_eq!(again.to_text(), file.to_text());
        }
        assert!(lookup("xyz-f2.ideal").is_some());
        assert!(lookup("nope").is_none());
    }
}
