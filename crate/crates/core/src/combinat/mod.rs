//! Words, partitions, tableaux and the monomial families attached to
//! `R_{n,k,r}`.

mod families;
mod partitions;
mod tableaux;
mod words;

pub use families::{
    code, good_monomials, good_monomials_by_staircase, is_good, phi_inverse, psi, skip_monomial, skip_vector,
    staircase, staircases,
};
pub use partitions::{
    binomial, compositions, compositions_with_length, factorial, partitions, partitions_in_box, subsets, Composition,
    Partition,
};
pub use tableaux::{all_standard_tableaux, semistandard_tableaux, standard_tableaux, StandardTableau};
pub use words::{enumerate_tail_positive, multiset_permutations, next_permutation, permutations, Word};

pub use crate::qt::{q_binomial, q_factorial, q_integer, QtPolynomial};

/// `syt(n)`: every standard tableau with `n` cells.
pub fn syt(n: u32) -> Vec<StandardTableau> {
    all_standard_tableaux(n)
}
