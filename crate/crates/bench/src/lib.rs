//! Fixture algebras shared by the benchmarks.

use mgs_core::AlgebraSpec;

/// A labelled algebra, smallest first.
pub fn fixtures() -> Vec<(&'static str, AlgebraSpec)> {
    vec![
        ("a3_mixed", AlgebraSpec::type_a("<>").unwrap()),
        ("a4_linear", AlgebraSpec::type_a("<<<").unwrap()),
        ("a4_alternating", AlgebraSpec::type_a("<><").unwrap()),
        ("nakayama_3321", AlgebraSpec::linear_nakayama(&[3, 3, 2, 1]).unwrap()),
        ("cyclic_322", AlgebraSpec::cyclic_nakayama(&[3, 2, 2]).unwrap()),
        ("a5_alternating", AlgebraSpec::type_a("<><>").unwrap()),
    ]
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_are_valid() {
        for (_, spec) in super::fixtures() {
            spec.validate().unwrap();
        }
    }
}
