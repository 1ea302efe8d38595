//! Bounded search trees beyond deletion sets: an alternating hitting-set
//! game and weight-bounded CNF satisfiability.

mod cnf;
mod hitting;

pub use cnf::{evaluate, parse_dimacs_cnf, weighted_qcnf_sat, weighted_qcnf_search, CnfError, CnfInstance, SatSearch};
pub use hitting::{player_one_wins, solve_hitting_game, HittingError, HittingGameInstance, HittingOutcome};
