//! Match execution: observe → act → apply loop with validity accounting,
//! plus the JSONL transcript format consumed by the metrics pipeline.
//!
//! One illegal or unparseable action ends the match immediately as invalid;
//! re-sampling until enough valid matches exist is the orchestrator's job.

use super::{ActionToken, GameId, GameParams, GameState, Player, ToMove, TurnActions};
use serde::{Deserialize, Serialize};

/// Why an agent could not produce an action.
#[derive(Debug, Clone, thiserror::Error)]
pub enum AgentError {
    #[error("agent transport: {0}")]
    Transport(String),
    #[error("agent timeout")]
    Timeout,
}

/// One agent turn: the chosen action (if any parsed) plus optional prompt
/// and raw generation for the transcript.
#[derive(Debug, Clone, Default)]
pub struct Decision {
    pub action: Option<ActionToken>,
    /// Parse-failure detail when `action` is `None` ("no_action_found",
    /// "malformed") or when the agent knowingly returns an illegal token.
    pub failure: Option<String>,
    pub prompt: Option<String>,
    pub generation: Option<String>,
}

impl Decision {
    pub fn of(action: ActionToken) -> Decision {
        Decision {
            action: Some(action),
            ..Decision::default()
        }
    }
}

/// A policy that plays one seat of a match.
pub trait AgentPolicy: Send {
    fn id(&self) -> &str;
    fn act(&mut self, state: &GameState, player: Player) -> Result<Decision, AgentError>;
}

/// One line of the JSONL transcript.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchRecord {
    pub game: GameId,
    pub seed: u64,
    pub agents: [String; 2],
    pub turns: Vec<TurnRecord>,
    pub outcome: OutcomeRecord,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub invalid_cause: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TurnRecord {
    pub player: u8,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prompt: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub generation: Option<String>,
    /// Canonical action surface; empty when nothing parsed.
    pub action: String,
    pub legal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub returns: [f64; 2],
    pub winner: Option<u8>,
    pub draw: bool,
}

impl OutcomeRecord {
    fn zero() -> OutcomeRecord {
        OutcomeRecord {
            returns: [0.0, 0.0],
            winner: None,
            draw: false,
        }
    }
}

impl MatchRecord {
    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("record serialization is infallible")
    }

    pub fn from_jsonl(line: &str) -> Result<MatchRecord, serde_json::Error> {
        serde_json::from_str(line)
    }
}

fn turn_record(player: Player, decision: &Decision, legal: bool) -> TurnRecord {
    TurnRecord {
        player: player as u8,
        prompt: decision.prompt.clone(),
        generation: decision.generation.clone(),
        action: decision
            .action
            .as_ref()
            .map(|a| a.surface.clone())
            .unwrap_or_default(),
        legal,
    }
}

enum TurnFailure {
    Invalid(String),
    Agent(AgentError),
}

/// Collect one player's decision and validate it against the current state.
fn collect(
    state: &GameState,
    agent: &mut dyn AgentPolicy,
    player: Player,
    turns: &mut Vec<TurnRecord>,
) -> Result<ActionToken, TurnFailure> {
    let decision = match agent.act(state, player) {
        Ok(d) => d,
        Err(e) => {
            turns.push(TurnRecord {
                player: player as u8,
                prompt: None,
                generation: None,
                action: String::new(),
                legal: false,
            });
            return Err(TurnFailure::Agent(e));
        }
    };
    let Some(token) = decision.action.clone() else {
        turns.push(turn_record(player, &decision, false));
        let cause = decision
            .failure
            .clone()
            .unwrap_or_else(|| "no_action_found".to_string());
        return Err(TurnFailure::Invalid(cause));
    };
    match state.find_legal(player, &token.parsed) {
        Some(canonical) => {
            let mut d = decision;
            d.action = Some(canonical.clone());
            turns.push(turn_record(player, &d, true));
            Ok(canonical)
        }
        None => {
            turns.push(turn_record(player, &decision, false));
            Err(TurnFailure::Invalid("illegal action".to_string()))
        }
    }
}

/// Run one match to termination or invalidation.
///
/// Sequential games alternate observe → act → apply; simultaneous games
/// collect both actions against the same pre-state before applying the
/// joint pair. The record is valid iff every produced action was legal.
pub fn run_match(
    game: GameId,
    agents: &mut [&mut dyn AgentPolicy; 2],
    seed: u64,
    params: &GameParams,
) -> MatchRecord {
    let ids = [agents[0].id().to_string(), agents[1].id().to_string()];
    let mut state = GameState::new_match_with(game, seed, params.clone());
    let mut turns = Vec::new();
    let mut invalid_cause: Option<String> = None;

    while let Some(to_move) = state.to_move() {
        let step = match to_move {
            ToMove::One(player) => {
                collect(&state, &mut *agents[player], player, &mut turns).map(TurnActions::Single)
            }
            ToMove::Both => {
                // Two-phase commit: both act on the same pre-state.
                collect(&state, &mut *agents[0], 0, &mut turns).and_then(|a| {
                    collect(&state, &mut *agents[1], 1, &mut turns)
                        .map(|b| TurnActions::Joint([a, b]))
                })
            }
        };
        match step {
            Ok(actions) => {
                state = state
                    .apply(&actions)
                    .expect("validated action must apply");
            }
            Err(TurnFailure::Invalid(cause)) => {
                invalid_cause = Some(cause);
                break;
            }
            Err(TurnFailure::Agent(e)) => {
                invalid_cause = Some(match e {
                    AgentError::Transport(_) => "agent transport".to_string(),
                    AgentError::Timeout => "agent timeout".to_string(),
                });
                break;
            }
        }
    }

    let outcome = if invalid_cause.is_none() && state.terminal() {
        let o = state.outcome().expect("terminal");
        OutcomeRecord {
            returns: o.returns,
            winner: o.winner.map(|p| p as u8),
            draw: o.draw,
        }
    } else {
        OutcomeRecord::zero()
    };

    MatchRecord {
        game,
        seed,
        agents: ids,
        turns,
        outcome,
        valid: invalid_cause.is_none(),
        invalid_cause,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Move;

    /// Plays back a fixed list of moves; runs out → transport error.
    struct Scripted {
        id: String,
        moves: Vec<Move>,
        at: usize,
    }

    impl Scripted {
        fn new(id: &str, moves: Vec<Move>) -> Scripted {
            Scripted {
                id: id.to_string(),
                moves,
                at: 0,
            }
        }
    }

    impl AgentPolicy for Scripted {
        fn id(&self) -> &str {
            &self.id
        }
        fn act(&mut self, _state: &GameState, _player: Player) -> Result<Decision, AgentError> {
            let mv = self
                .moves
                .get(self.at)
                .cloned()
                .ok_or_else(|| AgentError::Transport("script exhausted".into()))?;
            self.at += 1;
            Ok(Decision::of(ActionToken::new(mv)))
        }
    }

    fn mark(col: u8, row: u8) -> Move {
        Move::Mark { col, row }
    }

    #[test]
    fn scripted_tictactoe_win_produces_valid_record() {
        let mut a = Scripted::new("a", vec![mark(1, 1), mark(2, 1), mark(3, 1)]);
        let mut b = Scripted::new("b", vec![mark(1, 2), mark(2, 2)]);
        let record = run_match(
            GameId::Tictactoe,
            &mut [&mut a, &mut b],
            7,
            &GameParams::default(),
        );
        assert!(record.valid);
        assert_eq!(record.turns.len(), 5);
        assert_eq!(record.outcome.winner, Some(0));
        assert_eq!(record.outcome.returns, [1.0, -1.0]);
        assert!(record.turns.iter().all(|t| t.legal));
    }

    #[test]
    fn illegal_scripted_action_invalidates_with_cause() {
        // Pile 1 holds a single match; taking two is illegal.
        let mut a = Scripted::new("a", vec![Move::Take { pile: 1, count: 2 }]);
        let mut b = Scripted::new("b", vec![]);
        let record = run_match(GameId::Nim, &mut [&mut a, &mut b], 1, &GameParams::default());
        assert!(!record.valid);
        assert_eq!(record.invalid_cause.as_deref(), Some("illegal action"));
        assert_eq!(record.turns.len(), 1);
        assert!(!record.turns[0].legal);
        assert_eq!(record.outcome.returns, [0.0, 0.0]);
    }

    #[test]
    fn transport_failure_invalidates_with_cause() {
        let mut a = Scripted::new("a", vec![]);
        let mut b = Scripted::new("b", vec![]);
        let record = run_match(GameId::Pig, &mut [&mut a, &mut b], 1, &GameParams::default());
        assert!(!record.valid);
        assert_eq!(record.invalid_cause.as_deref(), Some("agent transport"));
    }

    #[test]
    fn seeded_reruns_are_byte_identical() {
        let run = || {
            let mut a = Scripted::new(
                "a",
                vec![mark(1, 1), mark(2, 1), mark(3, 1)],
            );
            let mut b = Scripted::new("b", vec![mark(1, 2), mark(2, 2)]);
            run_match(
                GameId::Tictactoe,
                &mut [&mut a, &mut b],
                7,
                &GameParams::default(),
            )
            .to_jsonl()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn jsonl_round_trips() {
        let mut a = Scripted::new("a", vec![mark(1, 1), mark(2, 1), mark(3, 1)]);
        let mut b = Scripted::new("b", vec![mark(1, 2), mark(2, 2)]);
        let record = run_match(
            GameId::Tictactoe,
            &mut [&mut a, &mut b],
            7,
            &GameParams::default(),
        );
        let line = record.to_jsonl();
        assert_eq!(MatchRecord::from_jsonl(&line).unwrap(), record);
        // Field names are part of the on-disk contract.
        assert!(line.starts_with(r#"{"game":"tictactoe","seed":7,"agents":["a","b"],"turns":"#));
    }

    #[test]
    fn simultaneous_turns_commit_against_the_pre_state() {
        let mut a = Scripted::new("a", vec![Move::Silent; 5]);
        let mut b = Scripted::new("b", vec![Move::Testify; 5]);
        let record = run_match(
            GameId::PrisonersDilemma,
            &mut [&mut a, &mut b],
            1,
            &GameParams::default(),
        );
        assert!(record.valid);
        assert_eq!(record.turns.len(), 10);
        assert_eq!(record.outcome.returns, [0.0, 15.0]);
    }
}
