//! Tournaments, labeled-copy census, closed-form counts and the three
//! verdict routes.

mod census;
mod formulas;
mod tournament;
mod verdict;

pub use census::{
    census, count_embeddings, CensusMode, CensusReport, EmbeddingCounter, DEFAULT_SAMPLES, DEFAULT_SEED,
    MAX_EXACT_PAIRS,
};
pub use formulas::{multinomial, random_expected_count, transitive_count};
pub use tournament::Tournament;
pub use verdict::{
    census_verdict, census_verdict_with, AUTO_EXACT_PAIRS, is_impartial, sign_sum_check, verdict, Route, Verdict, Witness,
    MAX_SIGNSUM_EDGES,
};
