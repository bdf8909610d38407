//! Multi-issue bargaining over a pool of peppers, strawberries, and cherries.
//!
//! Each player's turn has two stages: a proposal stage (propose a division or
//! accept the opponent's standing proposal) and an utterance stage (cheap
//! talk about the desired division; it has no payoff effect). On `<Agree>`
//! the opponent takes their own last proposal and the agreeing player takes
//! the complement. If the exchange cap is reached with no agreement both
//! players earn 0.
//!
//! Pool quantities are uniform in `1..=5` per item; each player's value
//! vector is uniform over the non-negative integer vectors whose dot product
//! with the pool is exactly the configured total (pools admitting no such
//! vector are redrawn).

use crate::engine::{rng, GameParams, Move, Outcome, Player};
use rand::Rng;

pub const ITEMS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Proposal,
    Utterance,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    pool: [u32; ITEMS],
    values: [[u32; ITEMS]; 2],
    stage: Stage,
    next: Player,
    proposals: [Option<[u32; ITEMS]>; 2],
    utterances: [Option<[u32; ITEMS]>; 2],
    exchanges_done: u32,
    agreed_by: Option<Player>,
}

fn dot(a: [u32; ITEMS], b: [u32; ITEMS]) -> u32 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// All non-negative integer vectors `v` with `dot(v, pool) == total`.
pub fn value_vectors(pool: [u32; ITEMS], total: u32) -> Vec<[u32; ITEMS]> {
    let mut out = Vec::new();
    for a in 0..=total / pool[0] {
        let rest_a = total - a * pool[0];
        for b in 0..=rest_a / pool[1] {
            let rest_b = rest_a - b * pool[1];
            if rest_b % pool[2] == 0 {
                out.push([a, b, rest_b / pool[2]]);
            }
        }
    }
    out
}

impl Table {
    pub fn draw(seed: u64, params: &GameParams) -> Table {
        let mut stream = rng::stream(seed, "negotiation.init");
        let max = params.negotiation_pool_max;
        let total = params.negotiation_total_value;
        let (pool, vectors) = loop {
            let pool = [
                stream.gen_range(1..=max),
                stream.gen_range(1..=max),
                stream.gen_range(1..=max),
            ];
            let vectors = value_vectors(pool, total);
            if !vectors.is_empty() {
                break (pool, vectors);
            }
        };
        let values = [
            vectors[stream.gen_range(0..vectors.len())],
            vectors[stream.gen_range(0..vectors.len())],
        ];
        Table::with_setup(pool, values)
    }

    pub fn with_setup(pool: [u32; ITEMS], values: [[u32; ITEMS]; 2]) -> Table {
        Table {
            pool,
            values,
            stage: Stage::Proposal,
            next: 0,
            proposals: [None; 2],
            utterances: [None; 2],
            exchanges_done: 0,
            agreed_by: None,
        }
    }

    pub fn pool(&self) -> [u32; ITEMS] {
        self.pool
    }

    pub fn values(&self, player: Player) -> [u32; ITEMS] {
        self.values[player]
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn last_proposal(&self, player: Player) -> Option<[u32; ITEMS]> {
        self.proposals[player]
    }

    pub fn to_move(&self, params: &GameParams) -> Option<Player> {
        if self.agreed_by.is_some() || self.exchanges_done >= params.negotiation_round_cap {
            None
        } else {
            Some(self.next)
        }
    }

    pub fn legal(&self, player: Player) -> Vec<Move> {
        let mut moves = Vec::new();
        match self.stage {
            Stage::Proposal => {
                if self.proposals[1 - player].is_some() {
                    moves.push(Move::Agree);
                }
                for a in 0..=self.pool[0] {
                    for b in 0..=self.pool[1] {
                        for c in 0..=self.pool[2] {
                            moves.push(Move::Proposal([a, b, c]));
                        }
                    }
                }
            }
            Stage::Utterance => {
                for a in 0..=self.pool[0] {
                    for b in 0..=self.pool[1] {
                        for c in 0..=self.pool[2] {
                            moves.push(Move::Utterance([a, b, c]));
                        }
                    }
                }
            }
        }
        moves
    }

    pub fn play(&self, player: Player, mv: &Move) -> Table {
        let mut next = self.clone();
        match (self.stage, mv) {
            (Stage::Proposal, Move::Agree) => {
                next.agreed_by = Some(player);
            }
            (Stage::Proposal, Move::Proposal(take)) => {
                next.proposals[player] = Some(*take);
                next.stage = Stage::Utterance;
            }
            (Stage::Utterance, Move::Utterance(say)) => {
                next.utterances[player] = Some(*say);
                next.stage = Stage::Proposal;
                next.next = 1 - player;
                next.exchanges_done += 1;
            }
            _ => unreachable!("validated by the engine"),
        }
        next
    }

    /// Final divisions: `(allocation[0], allocation[1])`, present only on
    /// agreement. Complements of each other with respect to the pool.
    pub fn allocations(&self) -> Option<[[u32; ITEMS]; 2]> {
        let agreeing = self.agreed_by?;
        let opponent = 1 - agreeing;
        let theirs = self.proposals[opponent].expect("agree requires a standing proposal");
        let mut mine = [0u32; ITEMS];
        for i in 0..ITEMS {
            mine[i] = self.pool[i] - theirs[i];
        }
        let mut out = [[0u32; ITEMS]; 2];
        out[opponent] = theirs;
        out[agreeing] = mine;
        Some(out)
    }

    pub fn outcome(&self, _params: &GameParams) -> Outcome {
        let returns = match self.allocations() {
            Some(allocs) => [
                dot(self.values[0], allocs[0]) as f64,
                dot(self.values[1], allocs[1]) as f64,
            ],
            None => [0.0, 0.0], // no deal
        };
        Outcome {
            returns,
            winner: None,
            draw: false,
        }
    }

    pub fn observation(&self, player: Player) -> Vec<(String, String)> {
        let take = |v: Option<[u32; ITEMS]>, i: usize| -> String {
            v.map(|x| x[i].to_string()).unwrap_or_else(|| "None".into())
        };
        let opp = 1 - player;
        let mut vars = vec![(
            "turn_type".to_string(),
            match self.stage {
                Stage::Proposal => "proposal".to_string(),
                Stage::Utterance => "utterance".to_string(),
            },
        )];
        match self.stage {
            Stage::Proposal => {
                for i in 0..ITEMS {
                    vars.push((
                        format!("opponent_proposal_take[{i}]"),
                        take(self.proposals[opp], i),
                    ));
                }
            }
            Stage::Utterance => {
                for i in 0..ITEMS {
                    vars.push((
                        format!("agent_proposal_take[{i}]"),
                        take(self.proposals[player], i),
                    ));
                }
            }
        }
        for i in 0..ITEMS {
            vars.push((
                format!("opponent_utterance_take[{i}]"),
                take(self.utterances[opp], i),
            ));
        }
        vars
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Table {
        Table::with_setup([1, 2, 3], [[2, 2, 2], [1, 1, 2]])
    }

    #[test]
    fn agree_takes_the_complement() {
        let params = GameParams::default();
        let t = table();
        let t = t.play(0, &Move::Proposal([1, 0, 2]));
        let t = t.play(0, &Move::Utterance([1, 0, 2]));
        assert_eq!(t.to_move(&params), Some(1));
        let t = t.play(1, &Move::Agree);
        assert_eq!(t.to_move(&params), None);
        let allocs = t.allocations().unwrap();
        assert_eq!(allocs[0], [1, 0, 2]);
        assert_eq!(allocs[1], [0, 2, 1]);
        let out = t.outcome(&params);
        assert_eq!(out.returns, [6.0, 4.0]);
        assert_eq!(out.winner, None);
        assert!(!out.draw);
    }

    #[test]
    fn first_proposal_turn_cannot_agree() {
        let t = table();
        assert!(!t.legal(0).contains(&Move::Agree));
        assert_eq!(t.legal(0).len(), 2 * 3 * 4);
    }

    #[test]
    fn agree_is_available_once_the_opponent_proposed() {
        let t = table()
            .play(0, &Move::Proposal([0, 0, 0]))
            .play(0, &Move::Utterance([0, 0, 0]));
        assert!(t.legal(1).contains(&Move::Agree));
    }

    #[test]
    fn proposals_stay_within_the_pool() {
        let t = table();
        assert!(!t.legal(0).contains(&Move::Proposal([2, 0, 0])));
        assert!(t.legal(0).contains(&Move::Proposal([1, 2, 3])));
    }

    #[test]
    fn exchange_cap_without_agreement_pays_nothing() {
        let params = GameParams::default();
        let mut t = table();
        for round in 0..params.negotiation_round_cap {
            let p = (round % 2) as usize;
            assert_eq!(t.to_move(&params), Some(p));
            t = t.play(p, &Move::Proposal([0, 0, 0]));
            t = t.play(p, &Move::Utterance([0, 0, 0]));
        }
        assert_eq!(t.to_move(&params), None);
        assert_eq!(t.outcome(&params).returns, [0.0, 0.0]);
    }

    #[test]
    fn value_vectors_hit_the_total_exactly() {
        for v in value_vectors([1, 2, 3], 10) {
            assert_eq!(v[0] + 2 * v[1] + 3 * v[2], 10);
        }
        // pool (3,3,3) cannot reach 10
        assert!(value_vectors([3, 3, 3], 10).is_empty());
    }

    #[test]
    fn draw_redraws_unsolvable_pools() {
        let params = GameParams::default();
        for seed in 0..50 {
            let t = Table::draw(seed, &params);
            assert_eq!(dot(t.values(0), t.pool()).max(dot(t.values(1), t.pool())), 10);
            assert_eq!(dot(t.values(0), t.pool()), 10);
            assert_eq!(dot(t.values(1), t.pool()), 10);
            assert_eq!(Table::draw(seed, &params), t);
        }
    }

    #[test]
    fn allocation_complement_identity() {
        let params = GameParams::default();
        for seed in 0..30 {
            let t = Table::draw(seed, &params)
                .play(0, &Move::Proposal([1, 0, 0]))
                .play(0, &Move::Utterance([1, 0, 0]))
                .play(1, &Move::Agree);
            let allocs = t.allocations().unwrap();
            for i in 0..ITEMS {
                assert_eq!(allocs[0][i] + allocs[1][i], t.pool()[i]);
            }
            let _ = t.outcome(&params);
        }
    }
}
