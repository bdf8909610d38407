//! First-price sealed-bid (blind) auction, one simultaneous round.
//!
//! Integer valuations are drawn per player from the match seed; a bid is
//! legal iff it is an integer in `0..=valuation`. The higher bidder wins and
//! pays their bid: winner reward is `valuation - bid`, loser reward is 0.
//! Ties are broken by a seeded fair coin.

use crate::engine::{rng, GameParams, Move, Outcome, Player};
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sealed {
    valuations: [u32; 2],
    bids: Option<[u32; 2]>,
    tie_winner: Player,
}

impl Sealed {
    pub fn draw(seed: u64, params: &GameParams) -> Sealed {
        let mut stream = rng::stream(seed, "auction.valuation");
        let valuations = [
            stream.gen_range(1..=params.auction_max_valuation),
            stream.gen_range(1..=params.auction_max_valuation),
        ];
        let tie_winner = rng::stream(seed, "auction.tie").gen_range(0..2usize);
        Sealed {
            valuations,
            bids: None,
            tie_winner,
        }
    }

    pub fn with_valuations(valuations: [u32; 2], tie_winner: Player) -> Sealed {
        Sealed {
            valuations,
            bids: None,
            tie_winner,
        }
    }

    pub fn valuation(&self, player: Player) -> u32 {
        self.valuations[player]
    }

    pub fn bids(&self) -> Option<[u32; 2]> {
        self.bids
    }

    /// Sealed round with `player`'s valuation replaced. Solver-side
    /// determinization helper.
    pub fn with_valuation_replaced(&self, player: Player, valuation: u32) -> Sealed {
        let mut next = self.clone();
        next.valuations[player] = valuation;
        next
    }

    /// True while the joint bid has not been committed.
    pub fn open(&self) -> bool {
        self.bids.is_none()
    }

    pub fn legal(&self, player: Player) -> Vec<Move> {
        (0..=self.valuations[player])
            .map(|amount| Move::SealedBid { amount })
            .collect()
    }

    pub fn close(&self, bids: [u32; 2]) -> Sealed {
        let mut next = self.clone();
        next.bids = Some(bids);
        next
    }

    pub fn winner(&self) -> Player {
        let bids = self.bids.expect("terminal");
        if bids[0] > bids[1] {
            0
        } else if bids[1] > bids[0] {
            1
        } else {
            self.tie_winner
        }
    }

    pub fn outcome(&self) -> Outcome {
        let bids = self.bids.expect("terminal");
        let winner = self.winner();
        let mut returns = [0.0; 2];
        returns[winner] = (self.valuations[winner] - bids[winner]) as f64;
        Outcome {
            returns,
            winner: Some(winner),
            draw: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn winner_pays_their_bid() {
        let s = Sealed::with_valuations([10, 6], 0).close([7, 4]);
        let out = s.outcome();
        assert_eq!(out.winner, Some(0));
        assert_eq!(out.returns, [3.0, 0.0]);
    }

    #[test]
    fn loser_earns_nothing() {
        let s = Sealed::with_valuations([8, 6], 0).close([5, 6]);
        let out = s.outcome();
        assert_eq!(out.winner, Some(1));
        assert_eq!(out.returns, [0.0, 0.0]); // 6 - 6 = 0 for the winner too
    }

    #[test]
    fn ties_use_the_seeded_coin() {
        for tie_winner in 0..2 {
            let s = Sealed::with_valuations([9, 7], tie_winner).close([5, 5]);
            let out = s.outcome();
            assert_eq!(out.winner, Some(tie_winner));
            let expected = (s.valuation(tie_winner) - 5) as f64;
            assert_eq!(out.returns[tie_winner], expected);
            assert_eq!(out.returns[1 - tie_winner], 0.0);
        }
    }

    #[test]
    fn legal_bids_are_bounded_by_valuation() {
        let s = Sealed::with_valuations([3, 10], 0);
        let legal: Vec<String> = s.legal(0).iter().map(|m| m.to_string()).collect();
        assert_eq!(legal, vec!["<0>", "<1>", "<2>", "<3>"]);
        assert_eq!(s.legal(1).len(), 11);
    }

    #[test]
    fn valuations_are_seeded_within_range() {
        let params = GameParams::default();
        for seed in 0..100 {
            let s = Sealed::draw(seed, &params);
            assert!((1..=10).contains(&s.valuation(0)));
            assert!((1..=10).contains(&s.valuation(1)));
            assert_eq!(Sealed::draw(seed, &params), s);
        }
    }
}
