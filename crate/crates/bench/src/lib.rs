//! Fixed inputs shared by the benchmarks.

use platjones::{BraidWord, PlatSpec, Spin};

/// Deterministic word on `strands` strands cycling through all generators.
pub fn cycling_word(strands: usize, len: usize) -> BraidWord {
    let text: Vec<String> = (0..len)
        .map(|i| {
            let g = i % (strands - 1) + 1;
            if i % 3 == 2 {
                format!("s{g}^-1")
            } else {
                format!("s{g}")
            }
        })
        .collect();
    BraidWord::parse(&text.join(" "), strands).expect("generated word parses")
}

pub fn half_spec(strands: usize, k: u32) -> PlatSpec {
    PlatSpec::uniform(strands, Spin::HALF, k, "").expect("valid plat")
}
