//! The Magnus bi-ordering of free groups, randomized checks of its order
//! properties, and orderability verdicts drawn from Alexander polynomials.

mod magnus;
mod suites;
mod verdict;

pub use magnus::{default_depth, magnus_compare, magnus_expand, Comparison, MagnusSeries, DEFAULT_DEPTH, DEPTH_ENV};
pub use suites::{
    bi_order_suite, convexity_suite, lemma8_suite, lemma_comm_suite, random_triangular, random_word, BiOrderReport,
    CommutatorReport, SuiteReport, DEFAULT_SEED, MAX_WORD_LENGTH,
};
pub use verdict::{
    clay_rolfsen_verdict, has_positive_real_eigenvalue, theorem2_report, OrderStatus, OrderVerdict, Theorem2Report,
};
