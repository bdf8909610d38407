//! Conventional (non-LLM) agents: uniform random, UCT Monte-Carlo tree
//! search, tit-for-tat, and the brute-force oracles used to derive ground
//! truth for tests and sanity checks.

pub mod kuhn_cfr;
pub mod mcts;
pub mod oracle;
pub mod random;
pub mod tit_for_tat;

pub use mcts::{mcts_act, MctsAgent, MctsConfig};
pub use oracle::{optimal_actions, solve, OracleError, OracleResult};
pub use random::{random_act, RandomAgent};
pub use tit_for_tat::{tit_for_tat_act, TitForTatAgent};
