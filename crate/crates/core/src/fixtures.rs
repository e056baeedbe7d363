//! Bundled example structures, compiled into the library.

use crate::io::format::parse_poset;
use crate::poset::OpPoset;

pub const EX1: &str = include_str!("../fixtures/ex1.poset");
pub const M3: &str = include_str!("../fixtures/m3.poset");
pub const FIG3: &str = include_str!("../fixtures/fig3.poset");
pub const BENZENE: &str = include_str!("../fixtures/benzene.poset");
pub const CUBE8: &str = include_str!("../fixtures/cube8.poset");

/// `(file name, contents)` for every bundled fixture.
pub const ALL: [(&str, &str); 5] = [
    ("ex1.poset", EX1),
    ("m3.poset", M3),
    ("fig3.poset", FIG3),
    ("benzene.poset", BENZENE),
    ("cube8.poset", CUBE8),
];

/// Looks up a bundled fixture by file name, with or without the extension.
pub fn bundled(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".poset").unwrap_or(name);
    ALL.iter()
        .find(|(file, _)| file.strip_suffix(".poset") == Some(stem))
        .map(|(_, text)| *text)
}

fn load(text: &str) -> OpPoset {
    parse_poset(text)
        .expect("bundled fixture parses")
        .to_op_poset()
        .expect("bundled fixture is complete")
}

/// Seven-element complemented poset whose `'` is not an involution.
pub fn ex1() -> OpPoset {
    load(EX1)
}

/// `M3` with the cyclic complementation `a -> b -> c -> a`.
pub fn m3() -> OpPoset {
    load(M3)
}

/// Fourteen-element orthomodular lattice made of two Boolean blocks.
pub fn fig3() -> OpPoset {
    load(FIG3)
}

/// Orthocomplemented `O6`.
pub fn benzene() -> OpPoset {
    load(BENZENE)
}

/// Boolean algebra `2^3`.
pub fn cube8() -> OpPoset {
    load(CUBE8)
}
