//! Exhaustive ground-truth solvers for the small games.
//!
//! Supported: Tic-Tac-Toe, Nim, Liar's Dice (revealed dice), Kuhn Poker
//! (perfect-information value mid-hand; mixed-strategy game value at the
//! root, see [`crate::solvers::kuhn_cfr`]), Connect-4 under a node budget,
//! and capped-depth expectimax for Pig. Values are reported from the mover's
//! perspective.

use crate::engine::{ActionToken, GameId, GameState, Player, ToMove, TurnActions};
use crate::games::Position;
use std::collections::HashMap;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("oracle does not support {0}")]
    UnsupportedGame(GameId),
    #[error("state space above the configured node budget")]
    BudgetExceeded,
    #[error("oracle requires a non-terminal state")]
    Terminal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Exact value for the player to move (expectation over chance where the
    /// game has chance events).
    pub value: f64,
    /// An optimal action, absent when optimal play at this state is a mixed
    /// strategy (the pre-deal Kuhn root).
    pub best_action: Option<ActionToken>,
}

/// Node budget for the Connect-4 alpha-beta; positions too far from the end
/// of the game exceed it and report an error instead of spinning.
const NODE_BUDGET: usize = 50_000_000;

/// Depth cap (plies) for the Pig expectimax.
const PIG_DEPTH: u32 = 12;

struct Search {
    /// Full-width memo for the small state spaces; disabled for Connect-4,
    /// where alpha-beta cutoffs would poison exact values.
    memo: Option<HashMap<Position, f64>>,
    nodes: usize,
}

impl Search {
    fn for_game(game: GameId) -> Search {
        Search {
            memo: (game != GameId::Connect4).then(HashMap::new),
            nodes: 0,
        }
    }

    /// Value to player 0 under optimal play of a deterministic, perfect-
    /// information, zero-sum game, alpha-beta bounded to `(alpha, beta)`.
    fn value0(&mut self, state: &GameState, mut alpha: f64, mut beta: f64) -> Result<f64, OracleError> {
        if let Some(v) = self.memo.as_ref().and_then(|m| m.get(state.position())) {
            return Ok(*v);
        }
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return Err(OracleError::BudgetExceeded);
        }
        let Some(ToMove::One(mover)) = state.to_move() else {
            let v = state.outcome().expect("terminal").returns[0];
            return Ok(v);
        };
        let full_window = self.memo.is_some();
        let mut best = if mover == 0 {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        };
        // Game-ending children first: forced wins cut off the rest.
        let mut children: Vec<GameState> = state
            .legal_actions(mover)
            .expect("non-terminal")
            .into_iter()
            .map(|token| {
                state
                    .apply(&TurnActions::Single(token))
                    .expect("legal action")
            })
            .collect();
        if !full_window {
            children.sort_by_key(|c| !c.terminal());
        }
        for child in children {
            let (a, b) = if full_window {
                (f64::NEG_INFINITY, f64::INFINITY)
            } else {
                (alpha, beta)
            };
            let v = self.value0(&child, a, b)?;
            if mover == 0 {
                best = best.max(v);
                alpha = alpha.max(best);
            } else {
                best = best.min(v);
                beta = beta.min(best);
            }
            if !full_window && beta <= alpha {
                break;
            }
        }
        if let Some(memo) = self.memo.as_mut() {
            memo.insert(state.position().clone(), best);
        }
        Ok(best)
    }
}

fn child_values(state: &GameState) -> Result<Vec<(f64, ActionToken)>, OracleError> {
    let Some(ToMove::One(mover)) = state.to_move() else {
        return Err(OracleError::Terminal);
    };
    let mut search = Search::for_game(state.game());
    // Payoffs are bounded by +-1 in the alpha-beta games, which lets a found
    // forced win cut the remaining siblings immediately.
    let (alpha, beta) = if search.memo.is_some() {
        (f64::NEG_INFINITY, f64::INFINITY)
    } else {
        (-1.0, 1.0)
    };
    let sign = if mover == 0 { 1.0 } else { -1.0 };
    let mut scored = Vec::new();
    for token in state.legal_actions(mover).expect("non-terminal") {
        let child = state
            .apply(&TurnActions::Single(token.clone()))
            .expect("legal action");
        let v = search.value0(&child, alpha, beta)? * sign;
        scored.push((v, token));
    }
    Ok(scored)
}

fn minimax(state: &GameState) -> Result<OracleResult, OracleError> {
    let Some(ToMove::One(mover)) = state.to_move() else {
        return Err(OracleError::Terminal);
    };
    let mut search = Search::for_game(state.game());
    let full_window = search.memo.is_some();
    let sign = if mover == 0 { 1.0 } else { -1.0 };
    // Alpha-beta across the root children as well: a proven forced win
    // prunes the remaining (possibly deep) siblings.
    let mut pairs: Vec<(ActionToken, GameState)> = state
        .legal_actions(mover)
        .expect("non-terminal")
        .into_iter()
        .map(|token| {
            let child = state
                .apply(&TurnActions::Single(token.clone()))
                .expect("legal action");
            (token, child)
        })
        .collect();
    if !full_window {
        pairs.sort_by_key(|(_, c)| !c.terminal());
    }
    let mut best: Option<(f64, ActionToken)> = None;
    for (token, child) in pairs {
        // Child windows live in player-0 value space; only improvements on
        // the current best (mover space) are interesting, and +-1 bounds
        // the payoffs.
        let vb = best.as_ref().map_or(-1.0, |(v, _)| *v);
        let (a, b) = if full_window {
            (f64::NEG_INFINITY, f64::INFINITY)
        } else if mover == 0 {
            (vb, 1.0)
        } else {
            (-1.0, -vb)
        };
        let v = search.value0(&child, a, b)? * sign;
        if best.as_ref().map_or(true, |(bv, _)| v > *bv) {
            best = Some((v, token));
        }
        if !full_window && best.as_ref().is_some_and(|(v, _)| *v >= 1.0) {
            break;
        }
    }
    let (value, token) = best.expect("non-empty legal actions");
    Ok(OracleResult {
        value,
        best_action: Some(token),
    })
}

/// All oracle-optimal actions for the mover (every action whose subtree
/// value equals the state value).
pub fn optimal_actions(state: &GameState) -> Result<Vec<ActionToken>, OracleError> {
    match state.game() {
        GameId::Tictactoe | GameId::Nim | GameId::Connect4 | GameId::LiarsDice => {}
        other => return Err(OracleError::UnsupportedGame(other)),
    }
    let scored = child_values(state)?;
    let best = scored
        .iter()
        .map(|(v, _)| *v)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(scored
        .into_iter()
        .filter(|(v, _)| *v == best)
        .map(|(_, t)| t)
        .collect())
}

/// Capped-depth expectimax for Pig; capped states evaluate to the sign of
/// the banked-score difference from the mover's perspective.
fn pig_expectimax(
    banked: [u32; 2],
    turn_total: u32,
    mover: Player,
    target: u32,
    depth: u32,
) -> (f64, Option<&'static str>) {
    if banked[0] >= target {
        return (if mover == 0 { 1.0 } else { -1.0 }, None);
    }
    if banked[1] >= target {
        return (if mover == 1 { 1.0 } else { -1.0 }, None);
    }
    if depth == 0 {
        let me = banked[mover] + turn_total;
        let them = banked[1 - mover];
        let v = match me.cmp(&them) {
            std::cmp::Ordering::Greater => 1.0,
            std::cmp::Ordering::Less => -1.0,
            std::cmp::Ordering::Equal => 0.0,
        };
        return (v, None);
    }
    // <stop>
    let mut stopped = banked;
    stopped[mover] += turn_total;
    let (v_opp, _) = pig_expectimax(stopped, 0, 1 - mover, target, depth - 1);
    let stop_v = -v_opp;
    // <roll>: face 1 busts, 2..=6 accumulate
    let mut roll_v = {
        let (v_opp, _) = pig_expectimax(banked, 0, 1 - mover, target, depth - 1);
        -v_opp / 6.0
    };
    for face in 2..=6u32 {
        let (v, _) = pig_expectimax(banked, turn_total + face, mover, target, depth - 1);
        roll_v += v / 6.0;
    }
    if roll_v > stop_v {
        (roll_v, Some("<roll>"))
    } else {
        (stop_v, Some("<stop>"))
    }
}

/// Exact game-theoretic value for the mover under optimal play.
///
/// Kuhn with an empty betting sequence is solved as the imperfect-
/// information game (expectation over all six deals under optimal mixed
/// strategies); since the optimum is mixed there, no single best action is
/// reported. Mid-hand Kuhn and Liar's Dice states are valued with both
/// private holdings revealed.
pub fn solve(state: &GameState) -> Result<OracleResult, OracleError> {
    if state.terminal() {
        return Err(OracleError::Terminal);
    }
    match state.game() {
        GameId::Tictactoe | GameId::Nim | GameId::Connect4 | GameId::LiarsDice => minimax(state),
        GameId::Kuhn => {
            let Position::Kuhn(hand) = state.position() else {
                unreachable!()
            };
            if hand.sequence().is_empty() {
                Ok(OracleResult {
                    value: super::kuhn_cfr::certified_value().to_f64(),
                    best_action: None,
                })
            } else {
                minimax(state)
            }
        }
        GameId::Pig => {
            let Position::Pig(score) = state.position() else {
                unreachable!()
            };
            let Some(ToMove::One(mover)) = state.to_move() else {
                return Err(OracleError::Terminal);
            };
            let (value, action) = pig_expectimax(
                [score.banked(0), score.banked(1)],
                score.turn_total(),
                mover,
                state.params().pig_target,
                PIG_DEPTH,
            );
            let best_action = action.map(|s| {
                ActionToken::new(if s == "<roll>" {
                    crate::engine::Move::Roll
                } else {
                    crate::engine::Move::Stop
                })
            });
            Ok(OracleResult { value, best_action })
        }
        other => Err(OracleError::UnsupportedGame(other)),
    }
}
