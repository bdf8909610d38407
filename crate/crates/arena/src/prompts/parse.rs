//! Action extraction from agent generations.
//!
//! The last occurrence of the game's bracketed pattern in the text wins:
//! step-by-step generations routinely discuss candidate moves before
//! committing, and the templates put the final action last.

use crate::engine::action::{scan_last, Scan};
use crate::engine::{ActionToken, GameState, Player};
use regex::Regex;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseStatus {
    /// An action was found and it is legal in the current state.
    Ok,
    /// No occurrence of the game's action grammar in the generation.
    NoActionFound,
    /// The grammar matched but a field was unusable.
    Malformed,
    /// A well-formed action that is not legal for this player here.
    Illegal,
}

/// Outcome of extracting an action from one generation.
#[derive(Clone, Debug)]
pub struct ParseResult {
    pub status: ParseStatus,
    /// Canonical legal token on `Ok`; the parsed-but-rejected token on
    /// `Illegal`; absent otherwise.
    pub action: Option<ActionToken>,
    /// The generation text as received.
    pub raw: String,
}

impl ParseResult {
    pub fn ok(&self) -> bool {
        self.status == ParseStatus::Ok
    }
}

/// Scan `generation` for `player`'s action in the game of `state` and check
/// it against the legal set. All failures are encoded in the status.
pub fn parse_action(state: &GameState, player: Player, generation: &str) -> ParseResult {
    let raw = generation.to_string();
    match scan_last(state.game(), generation) {
        Scan::NotFound => ParseResult {
            status: ParseStatus::NoActionFound,
            action: None,
            raw,
        },
        Scan::Malformed => ParseResult {
            status: ParseStatus::Malformed,
            action: None,
            raw,
        },
        Scan::Found(mv) => match state.find_legal(player, &mv) {
            Some(canonical) => ParseResult {
                status: ParseStatus::Ok,
                action: Some(canonical),
                raw,
            },
            None => ParseResult {
                status: ParseStatus::Illegal,
                action: Some(ActionToken::new(mv)),
                raw,
            },
        },
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VoteError {
    #[error("majority vote over an empty action list")]
    Empty,
}

/// Most frequent action; ties break toward the earliest trajectory index.
pub fn majority_vote(actions: &[ActionToken]) -> Result<ActionToken, VoteError> {
    if actions.is_empty() {
        return Err(VoteError::Empty);
    }
    let mut counted: Vec<(&ActionToken, usize)> = Vec::new();
    for action in actions {
        match counted.iter_mut().find(|(a, _)| *a == action) {
            Some((_, n)) => *n += 1,
            None => counted.push((action, 1)),
        }
    }
    // Strictly-greater comparison keeps the earliest action on ties, since
    // `counted` preserves first-occurrence order.
    let mut best = counted[0];
    for &(action, n) in &counted[1..] {
        if n > best.1 {
            best = (action, n);
        }
    }
    Ok(best.0.clone())
}

/// Extract the 1-based choice id from a deliberation vote ("The best choice
/// is {s}"); last occurrence wins. Out-of-range ids are parse failures.
pub fn parse_vote(generation: &str, num_candidates: usize) -> Option<usize> {
    static RE: OnceLock<Regex> = OnceLock::new();
    let re = RE.get_or_init(|| Regex::new(r"The best choice is \{?([0-9]+)\}?").expect("static"));
    let id: usize = re
        .captures_iter(generation)
        .last()?
        .get(1)?
        .as_str()
        .parse()
        .ok()?;
    (1..=num_candidates).contains(&id).then(|| id - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{GameId, Move, TurnActions};

    #[test]
    fn cot_generation_parses_the_action_block() {
        let state = GameState::new_match(GameId::Tictactoe, 1);
        let result = parse_action(&state, 0, "Thought: center is strong.\n\nAction: <C1R2>");
        assert!(result.ok());
        assert_eq!(result.action.unwrap().parsed, Move::Mark { col: 1, row: 2 });
    }

    #[test]
    fn illegal_moves_are_flagged_not_accepted() {
        let state = GameState::new_match(GameId::Nim, 1);
        let result = parse_action(&state, 0, "I will take <pile:1, take:2>");
        assert_eq!(result.status, ParseStatus::Illegal);
        assert_eq!(
            result.action.unwrap().parsed,
            Move::Take { pile: 1, count: 2 }
        );
    }

    #[test]
    fn prose_without_tokens_is_no_action_found() {
        let state = GameState::new_match(GameId::Kuhn, 1);
        let result = parse_action(&state, 0, "Thought: I should bet.");
        assert_eq!(result.status, ParseStatus::NoActionFound);
        assert!(result.action.is_none());
    }

    #[test]
    fn action_inside_thought_still_counts_by_the_last_match_rule() {
        let state = GameState::new_match(GameId::Pig, 1);
        let result = parse_action(&state, 0, "Thought: maybe <roll>? No final answer.");
        assert!(result.ok());
        assert_eq!(result.action.unwrap().parsed, Move::Roll);
    }

    #[test]
    fn last_action_wins_over_candidates_discussed_earlier() {
        let state = GameState::new_match(GameId::Tictactoe, 1);
        let result = parse_action(
            &state,
            0,
            "I compared <C1R1> and <C2R2>.\nAction:\n<C3R3>",
        );
        assert_eq!(result.action.unwrap().parsed, Move::Mark { col: 3, row: 3 });
    }

    #[test]
    fn never_ok_with_an_action_outside_the_legal_set() {
        // Exhaust a cell then feed it back in.
        let state = GameState::new_match(GameId::Tictactoe, 1);
        let state = state
            .apply(&TurnActions::Single(ActionToken::new(Move::Mark {
                col: 1,
                row: 1,
            })))
            .unwrap();
        let result = parse_action(&state, 1, "Action: <C1R1>");
        assert_eq!(result.status, ParseStatus::Illegal);
    }

    #[test]
    fn majority_vote_counts_and_breaks_ties_by_first_appearance() {
        let a = ActionToken::new(Move::Mark { col: 1, row: 1 });
        let b = ActionToken::new(Move::Mark { col: 2, row: 2 });
        let c = ActionToken::new(Move::Mark { col: 3, row: 3 });
        let votes = [a.clone(), a.clone(), b.clone(), a.clone(), c.clone()];
        assert_eq!(majority_vote(&votes).unwrap(), a);
        let tied = [a.clone(), a.clone(), b.clone(), b.clone(), c];
        assert_eq!(majority_vote(&tied).unwrap(), a);
        let single = [b.clone()];
        assert_eq!(majority_vote(&single).unwrap(), b);
        assert!(matches!(majority_vote(&[]), Err(VoteError::Empty)));
    }

    #[test]
    fn vote_ids_are_one_based_and_range_checked() {
        assert_eq!(parse_vote("The best choice is 2", 3), Some(1));
        assert_eq!(parse_vote("The best choice is {3}", 3), Some(2));
        assert_eq!(parse_vote("The best choice is 4", 3), None);
        assert_eq!(parse_vote("The best choice is 0", 3), None);
        assert_eq!(parse_vote("no verdict here", 3), None);
        assert_eq!(
            parse_vote("The best choice is 1... wait, The best choice is 3", 3),
            Some(2)
        );
    }
}
