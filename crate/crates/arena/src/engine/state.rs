//! Match state and the five state operations: create, enumerate, apply,
//! observe, and score.

use super::{
    ActionToken, EngineError, GameId, GameSpec, Move, ObservationView, Outcome, Player, ToMove,
    TurnMode,
};
use crate::games::{self, Position};

/// Tunable rule parameters. Defaults reproduce the reference protocol; only
/// deviating studies need to touch these.
#[derive(Clone, Debug, PartialEq)]
pub struct GameParams {
    /// Rounds per Iterated Prisoner's Dilemma match.
    pub ipd_rounds: u32,
    /// Negotiation proposal+utterance exchanges before a forced no-deal.
    pub negotiation_round_cap: u32,
    /// Upper bound (inclusive) of each negotiation pool item count.
    pub negotiation_pool_max: u32,
    /// Required dot product of each value vector with the pool.
    pub negotiation_total_value: u32,
    /// Banked score that wins a Pig match.
    pub pig_target: u32,
    /// Upper bound (inclusive) of auction valuations.
    pub auction_max_valuation: u32,
}

impl Default for GameParams {
    fn default() -> GameParams {
        GameParams {
            ipd_rounds: 5,
            negotiation_round_cap: 10,
            negotiation_pool_max: 5,
            negotiation_total_value: 10,
            pig_target: 100,
            auction_max_valuation: 10,
        }
    }
}

/// What one turn of input looks like, depending on the game's turn mode.
#[derive(Clone, Debug, PartialEq)]
pub enum TurnActions {
    Single(ActionToken),
    Joint([ActionToken; 2]),
}

/// Immutable snapshot of one match of one game. `apply` returns a new state;
/// values are freely shareable across threads.
#[derive(Clone, Debug, PartialEq)]
pub struct GameState {
    spec: GameSpec,
    position: Position,
    move_history: Vec<(Player, ActionToken)>,
    rng_seed: u64,
    params: GameParams,
}

impl GameState {
    /// Initial state of a match. All chance draws (cards, dice, valuations,
    /// item pools) are a pure function of `seed`.
    pub fn new_match(game: GameId, seed: u64) -> GameState {
        GameState::new_match_with(game, seed, GameParams::default())
    }

    pub fn new_match_with(game: GameId, seed: u64, params: GameParams) -> GameState {
        GameState {
            spec: game.spec(),
            position: games::initial(game, seed, &params),
            move_history: Vec::new(),
            rng_seed: seed,
            params,
        }
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn game(&self) -> GameId {
        self.spec.game_id
    }

    pub fn position(&self) -> &Position {
        &self.position
    }

    pub fn params(&self) -> &GameParams {
        &self.params
    }

    pub fn seed(&self) -> u64 {
        self.rng_seed
    }

    pub fn move_history(&self) -> &[(Player, ActionToken)] {
        &self.move_history
    }

    pub fn terminal(&self) -> bool {
        self.to_move().is_none()
    }

    /// Who acts next; `None` on terminal states.
    pub fn to_move(&self) -> Option<ToMove> {
        games::to_move(&self.position, &self.params)
    }

    fn may_act(&self, player: Player) -> bool {
        match self.to_move() {
            Some(ToMove::One(p)) => p == player,
            Some(ToMove::Both) => player < 2,
            None => false,
        }
    }

    /// Legal actions for `player`, non-empty on every reachable non-terminal
    /// state, in a canonical deterministic order.
    pub fn legal_actions(&self, player: Player) -> Result<Vec<ActionToken>, EngineError> {
        if self.terminal() {
            return Err(EngineError::TerminalState);
        }
        if !self.may_act(player) {
            return Err(EngineError::NotToMove(player));
        }
        Ok(games::legal(&self.position, player, &self.params)
            .into_iter()
            .map(ActionToken::new)
            .collect())
    }

    /// Find the canonical legal token matching `mv` for `player`.
    ///
    /// Matching uses move identity (`Move::same_play`), so a Breakthrough
    /// token without the capture star resolves to the starred canonical form.
    pub fn find_legal(&self, player: Player, mv: &Move) -> Option<ActionToken> {
        let legal = self.legal_actions(player).ok()?;
        legal.into_iter().find(|t| t.parsed.same_play(mv))
    }

    /// Apply a turn. Sequential games take a single action of the player to
    /// move; simultaneous games take the joint pair collected on this same
    /// pre-state. Any action outside `legal_actions` is rejected.
    pub fn apply(&self, actions: &TurnActions) -> Result<GameState, EngineError> {
        let to_move = self.to_move().ok_or(EngineError::TerminalState)?;
        match (to_move, actions) {
            (ToMove::One(player), TurnActions::Single(token)) => {
                let canonical =
                    self.find_legal(player, &token.parsed)
                        .ok_or(EngineError::IllegalAction {
                            player,
                            surface: token.surface.clone(),
                        })?;
                let mut next = self.clone();
                next.position = games::apply_sequential(
                    &self.position,
                    player,
                    &canonical.parsed,
                    self.rng_seed,
                    &self.params,
                );
                next.move_history.push((player, canonical));
                Ok(next)
            }
            (ToMove::Both, TurnActions::Joint(tokens)) => {
                let mut canonical = Vec::with_capacity(2);
                for (player, token) in tokens.iter().enumerate() {
                    canonical.push(self.find_legal(player, &token.parsed).ok_or(
                        EngineError::IllegalAction {
                            player,
                            surface: token.surface.clone(),
                        },
                    )?);
                }
                let mut next = self.clone();
                next.position = games::apply_joint(
                    &self.position,
                    [&canonical[0].parsed, &canonical[1].parsed],
                );
                next.move_history.push((0, canonical[0].clone()));
                next.move_history.push((1, canonical[1].clone()));
                Ok(next)
            }
            (ToMove::One(_), TurnActions::Joint(_)) => {
                Err(EngineError::WrongArity(TurnMode::Sequential))
            }
            (ToMove::Both, TurnActions::Single(_)) => {
                Err(EngineError::WrongArity(TurnMode::Simultaneous))
            }
        }
    }

    /// The per-player view rendered into observation template variables.
    /// Contains only information in `player`'s information set.
    pub fn observe(&self, player: Player) -> ObservationView {
        let legal_moves = if self.terminal() || !self.may_act(player) {
            String::new()
        } else {
            self.legal_actions(player)
                .map(|actions| {
                    actions
                        .iter()
                        .map(|t| t.surface.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .unwrap_or_default()
        };
        let variables = games::observation_vars(
            &self.position,
            player,
            legal_moves,
            &self.move_history,
        )
        .into_iter()
        .collect();
        ObservationView { player, variables }
    }

    /// Terminal payoffs.
    pub fn outcome(&self) -> Result<Outcome, EngineError> {
        if !self.terminal() {
            return Err(EngineError::NonTerminal);
        }
        Ok(games::outcome(&self.position, &self.params))
    }

    /// Copy of this state with a different chance seed. Used by searching
    /// agents to resample future chance without touching the real match
    /// stream; the position (including rolls already consumed) is unchanged.
    pub fn reseeded(&self, seed: u64) -> GameState {
        let mut next = self.clone();
        next.rng_seed = seed;
        next
    }

    /// Copy of this state with the position replaced. Solver-side helper for
    /// determinizing hidden information; history and seed are preserved.
    pub(crate) fn with_position(&self, position: Position) -> GameState {
        let mut next = self.clone();
        next.position = position;
        next
    }
}
