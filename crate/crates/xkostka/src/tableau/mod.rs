//! Partitions, words, skew tableaux, insertion, jeu de taquin, charge and
//! the `Γ̃` bijection.

pub mod charge;
pub mod checks;
pub mod enumerate;
pub mod insertion;
pub mod jdt;
pub mod knuth;
pub mod partition;
pub mod skew;
pub mod word;

pub use charge::{charge, charge_tableau};
pub use enumerate::{enumerate_bounded, enumerate_pairs, enumerate_tableaux, lr_coefficient};
pub use insertion::{
    column_insert, gamma, insert_word, insertion_rows, rectify, row_sequence, rs, rs_inverse, superstandard,
};
pub use jdt::{jdt_slide, jdt_slide_traced, lower_positions, upper_positions, Cell, Slide};
pub use knuth::{knuth_class, knuth_equivalent, knuth_moves};
pub use partition::{DoublePartition, Partition, SkewShape};
pub use skew::{Tableau, TableauPair};
pub use word::Word;
