//! Core game abstraction: specs, states, actions, observations, outcomes,
//! and the seeded match runner.

pub mod action;
pub mod rng;
pub mod runner;
pub mod state;

pub use action::{ActionToken, Move};
pub use runner::{run_match, AgentError, AgentPolicy, Decision, MatchRecord, OutcomeRecord, TurnRecord};
pub use state::{GameParams, GameState, TurnActions};

use serde::{Deserialize, Serialize};
use std::fmt;

/// Player seat index; matches are always two-player.
pub type Player = usize;

/// The ten supported games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameId {
    Tictactoe,
    Connect4,
    Breakthrough,
    Kuhn,
    LiarsDice,
    Auction,
    Negotiation,
    Nim,
    Pig,
    PrisonersDilemma,
}

impl GameId {
    pub const ALL: [GameId; 10] = [
        GameId::Tictactoe,
        GameId::Connect4,
        GameId::Breakthrough,
        GameId::Kuhn,
        GameId::LiarsDice,
        GameId::Auction,
        GameId::Negotiation,
        GameId::Nim,
        GameId::Pig,
        GameId::PrisonersDilemma,
    ];

    /// Stable identifier used in configs, CLI flags, and log paths.
    pub fn key(&self) -> &'static str {
        match self {
            GameId::Tictactoe => "tictactoe",
            GameId::Connect4 => "connect4",
            GameId::Breakthrough => "breakthrough",
            GameId::Kuhn => "kuhn",
            GameId::LiarsDice => "liars_dice",
            GameId::Auction => "auction",
            GameId::Negotiation => "negotiation",
            GameId::Nim => "nim",
            GameId::Pig => "pig",
            GameId::PrisonersDilemma => "prisoners_dilemma",
        }
    }

    /// Human-facing name for reports.
    pub fn display_name(&self) -> &'static str {
        match self {
            GameId::Tictactoe => "Tic-Tac-Toe",
            GameId::Connect4 => "Connect-4",
            GameId::Breakthrough => "Breakthrough",
            GameId::Kuhn => "Kuhn Poker",
            GameId::LiarsDice => "Liar's Dice",
            GameId::Auction => "Blind Auction",
            GameId::Negotiation => "Negotiation",
            GameId::Nim => "Nim",
            GameId::Pig => "Pig",
            GameId::PrisonersDilemma => "Iterated Prisoner's Dilemma",
        }
    }

    pub fn parse_key(s: &str) -> Result<GameId, EngineError> {
        GameId::ALL
            .iter()
            .copied()
            .find(|g| g.key() == s)
            .ok_or_else(|| EngineError::UnknownGame(s.to_string()))
    }

    /// Static rule metadata for this game.
    pub fn spec(&self) -> GameSpec {
        let (turn_mode, zero_sum, has_chance, first_player_advantage) = match self {
            GameId::Tictactoe => (TurnMode::Sequential, true, false, true),
            GameId::Connect4 => (TurnMode::Sequential, true, false, true),
            GameId::Breakthrough => (TurnMode::Sequential, true, false, false),
            GameId::Kuhn => (TurnMode::Sequential, true, true, true),
            GameId::LiarsDice => (TurnMode::Sequential, true, true, false),
            GameId::Auction => (TurnMode::Simultaneous, false, true, false),
            GameId::Negotiation => (TurnMode::Sequential, false, true, false),
            GameId::Nim => (TurnMode::Sequential, true, false, true),
            GameId::Pig => (TurnMode::Sequential, false, true, false),
            GameId::PrisonersDilemma => (TurnMode::Simultaneous, false, false, false),
        };
        GameSpec {
            game_id: *self,
            turn_mode,
            num_players: 2,
            zero_sum,
            has_chance,
            first_player_advantage,
        }
    }
}

impl fmt::Display for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Whether players move one at a time or commit a joint action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TurnMode {
    Sequential,
    Simultaneous,
}

/// Rule metadata for one game.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GameSpec {
    pub game_id: GameId,
    pub turn_mode: TurnMode,
    pub num_players: usize,
    pub zero_sum: bool,
    pub has_chance: bool,
    /// Metadata only; the protocol compensates by alternating the opener.
    pub first_player_advantage: bool,
}

/// Who is expected to act on a non-terminal state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToMove {
    One(Player),
    Both,
}

/// Terminal result of a match.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    /// Per-seat payoffs. Zero-sum games sum to exactly 0; non-zero-sum games
    /// carry the raw game rewards (auction surplus, bargaining value, win
    /// indicator, accumulated dilemma payoffs).
    pub returns: [f64; 2],
    pub winner: Option<Player>,
    pub draw: bool,
}

impl Outcome {
    pub(crate) fn win(winner: Player, magnitude: f64) -> Outcome {
        let mut returns = [0.0; 2];
        returns[winner] = magnitude;
        returns[1 - winner] = -magnitude;
        Outcome {
            returns,
            winner: Some(winner),
            draw: false,
        }
    }

    pub(crate) fn draw_zero() -> Outcome {
        Outcome {
            returns: [0.0, 0.0],
            winner: None,
            draw: true,
        }
    }
}

/// Per-player, per-turn information set rendered into template variables.
#[derive(Clone, Debug, PartialEq)]
pub struct ObservationView {
    pub player: Player,
    /// Named template variables, e.g. `self_moves`, `board_preview`, `card`.
    pub variables: std::collections::BTreeMap<String, String>,
}

impl ObservationView {
    pub fn get(&self, name: &str) -> Option<&str> {
        self.variables.get(name).map(|s| s.as_str())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error("unknown game id: {0}")]
    UnknownGame(String),
    #[error("operation on a terminal state")]
    TerminalState,
    #[error("outcome requested on a non-terminal state")]
    NonTerminal,
    #[error("player {0} is not to move")]
    NotToMove(Player),
    #[error("illegal action {surface} for player {player}")]
    IllegalAction { player: Player, surface: String },
    #[error("wrong action arity for {0:?} turn mode")]
    WrongArity(TurnMode),
}
