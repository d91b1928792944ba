//! The fermion-current algebra: generators `b*`, `c*`, `j⁺`, `j⁰`, `j⁻`, their
//! operator-product rules, normal ordering, mode extraction and admissibility.

mod modes;
mod order;
mod rules;
mod spectral;
mod word;

pub use modes::{admissible, mode_extract, parse_word, Admissibility, Arg, ModeLetter, ModeWord, ParsedWord};
pub use order::{normal_order, normal_order_with, reorder_normal, Orderer, Strategy};
pub use rules::{ope, OpeRule, RULES};
pub use spectral::{Scaled, Spectral, Symbolic};
pub use word::{canonical_mono, is_canonical, order_key, word_to_string, Kind, Letter, NormalForm, Word};
