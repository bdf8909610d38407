//! Uniform random baseline agent.

use crate::engine::{rng, ActionToken, AgentError, AgentPolicy, Decision, GameState, Player};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Uniform choice over the legal actions, drawn from a stream seeded with
/// `seed`. Panics if called on a terminal state (precondition).
pub fn random_act(state: &GameState, player: Player, seed: u64) -> ActionToken {
    let mut stream = rng::stream(seed, "random_agent");
    choose(state, player, &mut stream)
}

fn choose(state: &GameState, player: Player, stream: &mut ChaCha8Rng) -> ActionToken {
    let legal = state
        .legal_actions(player)
        .expect("random_act requires a non-terminal state");
    let i = stream.gen_range(0..legal.len());
    legal[i].clone()
}

/// Agent wrapper owning its seeded stream for the whole match.
pub struct RandomAgent {
    id: String,
    stream: ChaCha8Rng,
}

impl RandomAgent {
    pub fn new(id: impl Into<String>, seed: u64) -> RandomAgent {
        RandomAgent {
            id: id.into(),
            stream: rng::stream(seed, "random_agent"),
        }
    }
}

impl AgentPolicy for RandomAgent {
    fn id(&self) -> &str {
        &self.id
    }

    fn act(&mut self, state: &GameState, player: Player) -> Result<Decision, AgentError> {
        Ok(Decision::of(choose(state, player, &mut self.stream)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{GameId, Move, TurnActions};

    #[test]
    fn single_legal_action_is_forced() {
        // Liar's Dice after the maximal bid leaves exactly <Liar>.
        let state = GameState::new_match(GameId::LiarsDice, 3);
        let state = state
            .apply(&TurnActions::Single(ActionToken::new(Move::Bid {
                quantity: 2,
                face: 6,
            })))
            .unwrap();
        for seed in 0..20 {
            assert_eq!(random_act(&state, 1, seed).parsed, Move::Liar);
        }
    }

    #[test]
    fn choices_are_seed_deterministic() {
        let state = GameState::new_match(GameId::Tictactoe, 0);
        assert_eq!(random_act(&state, 0, 5), random_act(&state, 0, 5));
    }

    #[test]
    fn empty_board_draws_are_uniform() {
        // 90,000 seeded draws over the 9 opening cells: each frequency within
        // 1/9 +- 0.01, and the chi-square statistic comfortably below the
        // 0.001 critical value for 8 degrees of freedom (26.12).
        let state = GameState::new_match(GameId::Tictactoe, 0);
        let mut counts = [0usize; 9];
        let n = 90_000;
        for seed in 0..n {
            let token = random_act(&state, 0, seed as u64);
            let Move::Mark { col, row } = token.parsed else { panic!() };
            counts[((row - 1) * 3 + (col - 1)) as usize] += 1;
        }
        let expected = n as f64 / 9.0;
        let mut chi2 = 0.0;
        for &c in &counts {
            let freq = c as f64 / n as f64;
            assert!((freq - 1.0 / 9.0).abs() < 0.01, "freq {freq}");
            chi2 += (c as f64 - expected).powi(2) / expected;
        }
        assert!(chi2 < 26.12, "chi-square {chi2}");
    }
}
