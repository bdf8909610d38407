//! Two-player Liar's Dice with one die each.
//!
//! Bids are ordered by quantity first, then face value; a new bid must be
//! strictly higher. Face 1 is not wild. `<Liar>` challenges the standing bid:
//! the dice are revealed and the last bidder wins iff at least `quantity`
//! dice show `face`.

use crate::engine::{rng, ActionToken, Move, Outcome, Player};
use rand::Rng;

pub const MAX_QUANTITY: u8 = 2;
pub const FACES: u8 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    dice: [u8; 2],
    bid: Option<(u8, u8)>, // (quantity, face)
    challenger: Option<Player>,
    next: Player,
}

/// Strict total order on bids: (q', v') > (q, v) iff q' > q, or q' = q and v' > v.
pub fn bid_beats(new: (u8, u8), standing: (u8, u8)) -> bool {
    new.0 > standing.0 || (new.0 == standing.0 && new.1 > standing.1)
}

impl Table {
    pub fn roll(seed: u64) -> Table {
        let mut stream = rng::stream(seed, "liars_dice.roll");
        Table {
            dice: [stream.gen_range(1..=FACES), stream.gen_range(1..=FACES)],
            bid: None,
            challenger: None,
            next: 0,
        }
    }

    pub fn with_dice(dice: [u8; 2]) -> Table {
        Table {
            dice,
            bid: None,
            challenger: None,
            next: 0,
        }
    }

    pub fn die(&self, player: Player) -> u8 {
        self.dice[player]
    }

    /// Table with `player`'s die replaced. Solver-side determinization helper.
    pub fn with_die_replaced(&self, player: Player, face: u8) -> Table {
        let mut next = self.clone();
        next.dice[player] = face;
        next
    }

    pub fn standing_bid(&self) -> Option<(u8, u8)> {
        self.bid
    }

    pub fn to_move(&self) -> Option<Player> {
        if self.challenger.is_some() {
            None
        } else {
            Some(self.next)
        }
    }

    pub fn legal(&self) -> Vec<Move> {
        let mut moves = Vec::new();
        for quantity in 1..=MAX_QUANTITY {
            for face in 1..=FACES {
                let ok = match self.bid {
                    None => true,
                    Some(standing) => bid_beats((quantity, face), standing),
                };
                if ok {
                    moves.push(Move::Bid { quantity, face });
                }
            }
        }
        if self.bid.is_some() {
            moves.push(Move::Liar);
        }
        moves
    }

    pub fn bid(&self, quantity: u8, face: u8) -> Table {
        let mut next = self.clone();
        next.bid = Some((quantity, face));
        next.next = 1 - self.next;
        next
    }

    pub fn challenge(&self, challenger: Player) -> Table {
        let mut next = self.clone();
        next.challenger = Some(challenger);
        next
    }

    pub fn outcome(&self) -> Outcome {
        let challenger = self.challenger.expect("terminal");
        let (quantity, face) = self.bid.expect("challenge requires a standing bid");
        let count = self.dice.iter().filter(|&&d| d == face).count() as u8;
        let bidder = 1 - challenger;
        let winner = if count >= quantity { bidder } else { challenger };
        Outcome::win(winner, 1.0)
    }

    pub fn observation(
        &self,
        player: Player,
        history: &[(Player, ActionToken)],
    ) -> Vec<(String, String)> {
        let last = history
            .iter()
            .rev()
            .find(|(p, _)| *p != player)
            .map(|(_, t)| t.surface.clone())
            .unwrap_or_else(|| "None".to_string());
        vec![
            ("face_value".into(), self.dice[player].to_string()),
            ("opponent_last_action".into(), last),
        ]
    }
}
