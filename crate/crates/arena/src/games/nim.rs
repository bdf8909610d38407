//! Misère Nim with piles of 1, 3, 5, and 7 matches.
//!
//! A move removes 1..=pile matches from a single pile; the player who takes
//! the final match loses.

use crate::engine::{Move, Outcome, Player};

pub const INITIAL: [u32; 4] = [1, 3, 5, 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Piles {
    piles: [u32; 4],
    next: Player,
}

impl Piles {
    pub fn new() -> Piles {
        Piles {
            piles: INITIAL,
            next: 0,
        }
    }

    pub fn with_piles(piles: [u32; 4], next: Player) -> Piles {
        Piles { piles, next }
    }

    pub fn piles(&self) -> [u32; 4] {
        self.piles
    }

    pub fn total(&self) -> u32 {
        self.piles.iter().sum()
    }

    pub fn to_move(&self) -> Option<Player> {
        if self.total() == 0 {
            None
        } else {
            Some(self.next)
        }
    }

    pub fn legal(&self) -> Vec<Move> {
        let mut moves = Vec::new();
        for pile in 1..=4u8 {
            for count in 1..=self.piles[pile as usize - 1] {
                moves.push(Move::Take { pile, count });
            }
        }
        moves
    }

    pub fn take(&self, pile: u8, count: u32) -> Piles {
        let mut next = *self;
        next.piles[pile as usize - 1] -= count;
        next.next = 1 - self.next;
        next
    }

    pub fn outcome(&self) -> Outcome {
        // Misère: the player who took the final match loses, so the player
        // who would move next wins.
        Outcome::win(self.next, 1.0)
    }

    pub fn observation(&self) -> Vec<(String, String)> {
        (0..4)
            .map(|i| (format!("piles[{i}]"), self.piles[i].to_string()))
            .collect()
    }
}
