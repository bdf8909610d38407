//! Connect-4 on the standard six-row, seven-column grid.
//!
//! Bitboard layout: one u64 per player, bit `col * 7 + row` with row 0 at the
//! bottom; the seventh bit of each column is a guard row so shift-based line
//! detection never wraps across columns.

use crate::engine::{Move, Outcome, Player};

pub const COLS: u8 = 7;
pub const ROWS: u8 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    bb: [u64; 2],
    heights: [u8; 7],
    next: Player,
}

fn connects(bb: u64) -> bool {
    // vertical, horizontal, and the two diagonals
    for shift in [1u32, 7, 6, 8] {
        let m = bb & (bb >> shift);
        if m & (m >> (2 * shift)) != 0 {
            return true;
        }
    }
    false
}

impl Board {
    pub fn new() -> Board {
        Board {
            bb: [0; 2],
            heights: [0; 7],
            next: 0,
        }
    }

    pub fn winner(&self) -> Option<Player> {
        (0..2).find(|&p| connects(self.bb[p]))
    }

    pub fn full(&self) -> bool {
        self.heights.iter().all(|&h| h >= ROWS)
    }

    pub fn to_move(&self) -> Option<Player> {
        if self.winner().is_some() || self.full() {
            None
        } else {
            Some(self.next)
        }
    }

    pub fn column_height(&self, col: u8) -> u8 {
        self.heights[col as usize - 1]
    }

    /// Occupant of a 1-based (col, row) cell, row 1 at the bottom.
    pub fn cell(&self, col: u8, row: u8) -> Option<Player> {
        let bit = 1u64 << ((col - 1) * 7 + (row - 1));
        (0..2).find(|&p| self.bb[p] & bit != 0)
    }

    pub fn legal(&self) -> Vec<Move> {
        (1..=COLS)
            .filter(|&c| self.column_height(c) < ROWS)
            .map(|col| Move::Drop { col })
            .collect()
    }

    pub fn drop(&self, col: u8) -> Board {
        let mut next = *self;
        let c = col as usize - 1;
        next.bb[self.next] |= 1u64 << (c as u8 * 7 + self.heights[c]);
        next.heights[c] += 1;
        next.next = 1 - self.next;
        next
    }

    pub fn outcome(&self) -> Outcome {
        match self.winner() {
            Some(p) => Outcome::win(p, 1.0),
            None => Outcome::draw_zero(),
        }
    }
}
