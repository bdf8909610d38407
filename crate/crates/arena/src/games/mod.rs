//! The ten rule sets behind the engine abstraction.
//!
//! Each game module owns its position type, move generation, transition
//! function, terminal detection, payoffs, and observation variables. The
//! engine dispatches through [`Position`]; positions are immutable values
//! and every function here is pure (chance is resolved from named seed
//! substreams, see [`crate::engine::rng`]).

pub mod auction;
pub mod breakthrough;
pub mod connect4;
pub mod ipd;
pub mod kuhn;
pub mod liars_dice;
pub mod negotiation;
pub mod nim;
pub mod pig;
pub mod tictactoe;

use crate::engine::{ActionToken, GameId, GameParams, Move, Outcome, Player, ToMove};

/// Game-specific payload of a [`crate::engine::GameState`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    Tictactoe(tictactoe::Board),
    Connect4(connect4::Board),
    Breakthrough(breakthrough::Board),
    Kuhn(kuhn::Hand),
    LiarsDice(liars_dice::Table),
    Auction(auction::Sealed),
    Negotiation(negotiation::Table),
    Nim(nim::Piles),
    Pig(pig::Score),
    Ipd(ipd::Rounds),
}

impl Position {
    pub fn game(&self) -> GameId {
        match self {
            Position::Tictactoe(_) => GameId::Tictactoe,
            Position::Connect4(_) => GameId::Connect4,
            Position::Breakthrough(_) => GameId::Breakthrough,
            Position::Kuhn(_) => GameId::Kuhn,
            Position::LiarsDice(_) => GameId::LiarsDice,
            Position::Auction(_) => GameId::Auction,
            Position::Negotiation(_) => GameId::Negotiation,
            Position::Nim(_) => GameId::Nim,
            Position::Pig(_) => GameId::Pig,
            Position::Ipd(_) => GameId::PrisonersDilemma,
        }
    }
}

/// Initial position; all chance draws are a pure function of `seed`.
pub fn initial(game: GameId, seed: u64, params: &GameParams) -> Position {
    match game {
        GameId::Tictactoe => Position::Tictactoe(tictactoe::Board::new()),
        GameId::Connect4 => Position::Connect4(connect4::Board::new()),
        GameId::Breakthrough => Position::Breakthrough(breakthrough::Board::new()),
        GameId::Kuhn => Position::Kuhn(kuhn::Hand::deal(seed)),
        GameId::LiarsDice => Position::LiarsDice(liars_dice::Table::roll(seed)),
        GameId::Auction => Position::Auction(auction::Sealed::draw(seed, params)),
        GameId::Negotiation => Position::Negotiation(negotiation::Table::draw(seed, params)),
        GameId::Nim => Position::Nim(nim::Piles::new()),
        GameId::Pig => Position::Pig(pig::Score::new()),
        GameId::PrisonersDilemma => Position::Ipd(ipd::Rounds::new()),
    }
}

/// Who is to act; `None` on terminal positions.
pub fn to_move(pos: &Position, params: &GameParams) -> Option<ToMove> {
    match pos {
        Position::Tictactoe(b) => b.to_move().map(ToMove::One),
        Position::Connect4(b) => b.to_move().map(ToMove::One),
        Position::Breakthrough(b) => b.to_move().map(ToMove::One),
        Position::Kuhn(h) => h.to_move().map(ToMove::One),
        Position::LiarsDice(t) => t.to_move().map(ToMove::One),
        Position::Auction(s) => s.open().then_some(ToMove::Both),
        Position::Negotiation(t) => t.to_move(params).map(ToMove::One),
        Position::Nim(p) => p.to_move().map(ToMove::One),
        Position::Pig(s) => s.to_move(params).map(ToMove::One),
        Position::Ipd(r) => r.open(params).then_some(ToMove::Both),
    }
}

/// Legal moves for `player`, in a deterministic canonical order.
pub fn legal(pos: &Position, player: Player, _params: &GameParams) -> Vec<Move> {
    match pos {
        Position::Tictactoe(b) => b.legal(),
        Position::Connect4(b) => b.legal(),
        Position::Breakthrough(b) => b.legal(),
        Position::Kuhn(h) => h.legal(),
        Position::LiarsDice(t) => t.legal(),
        Position::Auction(s) => s.legal(player),
        Position::Negotiation(t) => t.legal(player),
        Position::Nim(p) => p.legal(),
        Position::Pig(s) => s.legal(),
        Position::Ipd(r) => r.legal(),
    }
}

/// Apply one move of a sequential game. The caller has already validated
/// legality and that `player` is to move.
pub fn apply_sequential(
    pos: &Position,
    player: Player,
    mv: &Move,
    seed: u64,
    _params: &GameParams,
) -> Position {
    match (pos, mv) {
        (Position::Tictactoe(b), Move::Mark { col, row }) => {
            Position::Tictactoe(b.mark(*col, *row))
        }
        (Position::Connect4(b), Move::Drop { col }) => Position::Connect4(b.drop(*col)),
        (Position::Breakthrough(b), Move::Push { .. }) => Position::Breakthrough(b.push(mv)),
        (Position::Kuhn(h), Move::Bet) => Position::Kuhn(h.play(kuhn::Act::Bet)),
        (Position::Kuhn(h), Move::Pass) => Position::Kuhn(h.play(kuhn::Act::Pass)),
        (Position::LiarsDice(t), Move::Bid { quantity, face }) => {
            Position::LiarsDice(t.bid(*quantity, *face))
        }
        (Position::LiarsDice(t), Move::Liar) => Position::LiarsDice(t.challenge(player)),
        (Position::Negotiation(t), _) => Position::Negotiation(t.play(player, mv)),
        (Position::Nim(p), Move::Take { pile, count }) => Position::Nim(p.take(*pile, *count)),
        (Position::Pig(s), Move::Roll) => Position::Pig(s.roll(seed)),
        (Position::Pig(s), Move::Stop) => Position::Pig(s.stop()),
        _ => unreachable!("move/game mismatch was validated by the engine"),
    }
}

/// Apply a joint move of a simultaneous game.
pub fn apply_joint(pos: &Position, moves: [&Move; 2]) -> Position {
    match (pos, moves) {
        (Position::Auction(s), [Move::SealedBid { amount: a }, Move::SealedBid { amount: b }]) => {
            Position::Auction(s.close([*a, *b]))
        }
        (Position::Ipd(r), [a, b]) => Position::Ipd(r.play([a, b])),
        _ => unreachable!("move/game mismatch was validated by the engine"),
    }
}

/// Terminal payoffs; call only when `to_move` is `None`.
pub fn outcome(pos: &Position, params: &GameParams) -> Outcome {
    match pos {
        Position::Tictactoe(b) => b.outcome(),
        Position::Connect4(b) => b.outcome(),
        Position::Breakthrough(b) => b.outcome(),
        Position::Kuhn(h) => h.outcome(),
        Position::LiarsDice(t) => t.outcome(),
        Position::Auction(s) => s.outcome(),
        Position::Negotiation(t) => t.outcome(params),
        Position::Nim(p) => p.outcome(),
        Position::Pig(s) => s.outcome(params),
        Position::Ipd(r) => r.outcome(),
    }
}

/// Observation template variables for `player`'s information set.
///
/// `legal_moves` is the already-rendered legal-move list and `history` the
/// match move history (some games quote it back to the player).
pub fn observation_vars(
    pos: &Position,
    player: Player,
    legal_moves: String,
    history: &[(Player, ActionToken)],
) -> Vec<(String, String)> {
    let mut vars = match pos {
        Position::Tictactoe(_) | Position::Connect4(_) => move_list_vars(player, history),
        Position::Breakthrough(b) => {
            let mut v = move_list_vars(player, history);
            v.push(("board_preview".into(), b.preview()));
            v
        }
        Position::Kuhn(h) => {
            let mut v = move_list_vars(player, history);
            v.push(("card".into(), h.card(player).to_string()));
            v
        }
        Position::LiarsDice(t) => t.observation(player, history),
        Position::Auction(s) => vec![("valuation".into(), s.valuation(player).to_string())],
        Position::Negotiation(t) => t.observation(player),
        Position::Nim(p) => p.observation(),
        Position::Pig(s) => s.observation(player),
        Position::Ipd(r) => r.observation(player),
    };
    vars.push(("legal_moves".into(), legal_moves));
    vars
}

fn render_moves(player: Player, history: &[(Player, ActionToken)]) -> String {
    let list: Vec<&str> = history
        .iter()
        .filter(|(p, _)| *p == player)
        .map(|(_, t)| t.surface.as_str())
        .collect();
    list.join(", ")
}

fn move_list_vars(player: Player, history: &[(Player, ActionToken)]) -> Vec<(String, String)> {
    vec![
        ("self_moves".into(), render_moves(player, history)),
        ("opponent_moves".into(), render_moves(1 - player, history)),
    ]
}
