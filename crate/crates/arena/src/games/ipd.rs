//! Iterated Prisoner's Dilemma, simultaneous moves over a fixed number of
//! rounds (default 5).
//!
//! Sentences are mapped to rewards as `3 - years`, which keeps every score
//! non-negative and preserves the canonical payoff ordering: testify against
//! silent 3/0, mutual silence 2/2, mutual testimony 1/1.

use crate::engine::{Move, Outcome, Player};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Choice {
    Testify,
    Silent,
}

impl Choice {
    pub fn from_move(mv: &Move) -> Choice {
        match mv {
            Move::Testify => Choice::Testify,
            Move::Silent => Choice::Silent,
            _ => unreachable!("validated by the engine"),
        }
    }

    pub fn to_move(self) -> Move {
        match self {
            Choice::Testify => Move::Testify,
            Choice::Silent => Move::Silent,
        }
    }
}

/// Per-round payoffs under the `3 - years` mapping.
pub fn round_payoffs(joint: [Choice; 2]) -> [u32; 2] {
    match joint {
        [Choice::Testify, Choice::Silent] => [3, 0],
        [Choice::Silent, Choice::Testify] => [0, 3],
        [Choice::Testify, Choice::Testify] => [1, 1],
        [Choice::Silent, Choice::Silent] => [2, 2],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rounds {
    history: Vec<[Choice; 2]>,
}

impl Rounds {
    pub fn new() -> Rounds {
        Rounds {
            history: Vec::new(),
        }
    }

    pub fn with_history(history: Vec<[Choice; 2]>) -> Rounds {
        Rounds { history }
    }

    pub fn history(&self) -> &[[Choice; 2]] {
        &self.history
    }

    pub fn round(&self) -> usize {
        self.history.len()
    }

    pub fn open(&self, params: &crate::engine::GameParams) -> bool {
        (self.history.len() as u32) < params.ipd_rounds
    }

    pub fn legal(&self) -> Vec<Move> {
        vec![Move::Testify, Move::Silent]
    }

    pub fn play(&self, joint: [&Move; 2]) -> Rounds {
        let mut next = self.clone();
        next.history
            .push([Choice::from_move(joint[0]), Choice::from_move(joint[1])]);
        next
    }

    pub fn totals(&self) -> [u32; 2] {
        self.history.iter().fold([0, 0], |acc, &joint| {
            let p = round_payoffs(joint);
            [acc[0] + p[0], acc[1] + p[1]]
        })
    }

    pub fn outcome(&self) -> Outcome {
        let totals = self.totals();
        Outcome {
            returns: [totals[0] as f64, totals[1] as f64],
            winner: None,
            draw: false,
        }
    }

    pub fn observation(&self, player: Player) -> Vec<(String, String)> {
        let rendered: Vec<String> = self
            .history
            .iter()
            .enumerate()
            .map(|(idx, joint)| {
                format!(
                    "In the {} th round, you decided to {} and your opponent decided to {}.",
                    idx + 1,
                    joint[player].to_move(),
                    joint[1 - player].to_move()
                )
            })
            .collect();
        vec![("history".into(), rendered.join(" "))]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::GameParams;

    #[test]
    fn payoff_matrix_matches_the_sentence_mapping() {
        assert_eq!(round_payoffs([Choice::Testify, Choice::Silent]), [3, 0]);
        assert_eq!(round_payoffs([Choice::Silent, Choice::Testify]), [0, 3]);
        assert_eq!(round_payoffs([Choice::Testify, Choice::Testify]), [1, 1]);
        assert_eq!(round_payoffs([Choice::Silent, Choice::Silent]), [2, 2]);
    }

    #[test]
    fn mutual_silence_maximizes_the_system_reward() {
        let sums: Vec<u32> = [
            [Choice::Testify, Choice::Silent],
            [Choice::Silent, Choice::Testify],
            [Choice::Testify, Choice::Testify],
        ]
        .iter()
        .map(|&j| round_payoffs(j).iter().sum())
        .collect();
        let silent_sum: u32 = round_payoffs([Choice::Silent, Choice::Silent]).iter().sum();
        assert_eq!(silent_sum, 4);
        assert!(sums.iter().all(|&s| s < silent_sum));
    }

    #[test]
    fn five_rounds_of_mutual_silence_pay_ten_each() {
        let params = GameParams::default();
        let mut r = Rounds::new();
        while r.open(&params) {
            r = r.play([&Move::Silent, &Move::Silent]);
        }
        assert_eq!(r.round(), 5);
        assert_eq!(r.outcome().returns, [10.0, 10.0]);
    }

    #[test]
    fn history_is_visible_to_both_players_in_their_own_perspective() {
        let r = Rounds::new().play([&Move::Testify, &Move::Silent]);
        let obs0 = r.observation(0);
        let obs1 = r.observation(1);
        assert_eq!(
            obs0[0].1,
            "In the 1 th round, you decided to <Testify> and your opponent decided to <Silent>."
        );
        assert_eq!(
            obs1[0].1,
            "In the 1 th round, you decided to <Silent> and your opponent decided to <Testify>."
        );
    }
}
