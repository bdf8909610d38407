//! Tit-for-Tat: cooperate first, then mirror the opponent's previous move.
//! Only meaningful for the Iterated Prisoner's Dilemma.

use crate::engine::{ActionToken, AgentError, AgentPolicy, Decision, GameState, Move, Player};
use crate::games::Position;

/// Round 0 plays `<Silent>`; round k mirrors the opponent's round k-1 action.
/// Panics if applied to a game other than the Iterated Prisoner's Dilemma.
pub fn tit_for_tat_act(state: &GameState, player: Player) -> ActionToken {
    let Position::Ipd(rounds) = state.position() else {
        panic!("tit-for-tat only plays the Iterated Prisoner's Dilemma");
    };
    let mv = match rounds.history().last() {
        None => Move::Silent,
        Some(joint) => joint[1 - player].to_move(),
    };
    ActionToken::new(mv)
}

pub struct TitForTatAgent {
    id: String,
}

impl TitForTatAgent {
    pub fn new(id: impl Into<String>) -> TitForTatAgent {
        TitForTatAgent { id: id.into() }
    }
}

impl AgentPolicy for TitForTatAgent {
    fn id(&self) -> &str {
        &self.id
    }

    fn act(&mut self, state: &GameState, player: Player) -> Result<Decision, AgentError> {
        Ok(Decision::of(tit_for_tat_act(state, player)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{GameId, TurnActions};

    #[test]
    fn opens_cooperatively() {
        let state = GameState::new_match(GameId::PrisonersDilemma, 1);
        assert_eq!(tit_for_tat_act(&state, 0).parsed, Move::Silent);
        assert_eq!(tit_for_tat_act(&state, 1).parsed, Move::Silent);
    }

    #[test]
    fn mirrors_the_opponents_previous_action() {
        let state = GameState::new_match(GameId::PrisonersDilemma, 1);
        let state = state
            .apply(&TurnActions::Joint([
                ActionToken::new(Move::Silent),
                ActionToken::new(Move::Testify),
            ]))
            .unwrap();
        assert_eq!(tit_for_tat_act(&state, 0).parsed, Move::Testify);
        assert_eq!(tit_for_tat_act(&state, 1).parsed, Move::Silent);
    }

    #[test]
    fn mutual_silence_is_the_self_play_fixed_point() {
        let mut state = GameState::new_match(GameId::PrisonersDilemma, 1);
        while !state.terminal() {
            let a = tit_for_tat_act(&state, 0);
            let b = tit_for_tat_act(&state, 1);
            assert_eq!(a.parsed, Move::Silent);
            assert_eq!(b.parsed, Move::Silent);
            state = state.apply(&TurnActions::Joint([a, b])).unwrap();
        }
        assert_eq!(state.outcome().unwrap().returns, [10.0, 10.0]);
    }

    #[test]
    fn is_deterministic_in_the_history() {
        let state = GameState::new_match(GameId::PrisonersDilemma, 1)
            .apply(&TurnActions::Joint([
                ActionToken::new(Move::Testify),
                ActionToken::new(Move::Silent),
            ]))
            .unwrap();
        assert_eq!(tit_for_tat_act(&state, 1), tit_for_tat_act(&state, 1));
    }
}
