//! Tic-Tac-Toe on a 3x3 grid, winning length 3.

use crate::engine::{Move, Outcome, Player};

const LINES: [[usize; 3]; 8] = [
    [0, 1, 2],
    [3, 4, 5],
    [6, 7, 8],
    [0, 3, 6],
    [1, 4, 7],
    [2, 5, 8],
    [0, 4, 8],
    [2, 4, 6],
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    cells: [Option<Player>; 9],
    next: Player,
}

impl Board {
    pub fn new() -> Board {
        Board {
            cells: [None; 9],
            next: 0,
        }
    }

    fn idx(col: u8, row: u8) -> usize {
        (row as usize - 1) * 3 + (col as usize - 1)
    }

    pub fn cell(&self, col: u8, row: u8) -> Option<Player> {
        self.cells[Board::idx(col, row)]
    }

    pub fn winner(&self) -> Option<Player> {
        LINES.iter().find_map(|line| {
            let first = self.cells[line[0]]?;
            line[1..]
                .iter()
                .all(|&i| self.cells[i] == Some(first))
                .then_some(first)
        })
    }

    pub fn full(&self) -> bool {
        self.cells.iter().all(|c| c.is_some())
    }

    pub fn to_move(&self) -> Option<Player> {
        if self.winner().is_some() || self.full() {
            None
        } else {
            Some(self.next)
        }
    }

    pub fn legal(&self) -> Vec<Move> {
        let mut moves = Vec::new();
        for col in 1..=3u8 {
            for row in 1..=3u8 {
                if self.cell(col, row).is_none() {
                    moves.push(Move::Mark { col, row });
                }
            }
        }
        moves
    }

    pub fn mark(&self, col: u8, row: u8) -> Board {
        let mut next = self.clone();
        next.cells[Board::idx(col, row)] = Some(self.next);
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

#[cfg(test)]
mod tests {
    use super::*;

    fn play(moves: &[(u8, u8)]) -> Board {
        moves
            .iter()
            .fold(Board::new(), |b, &(c, r)| b.mark(c, r))
    }

    #[test]
    fn empty_board_has_nine_moves_for_first_player() {
        let b = Board::new();
        assert_eq!(b.to_move(), Some(0));
        assert_eq!(b.legal().len(), 9);
        assert_eq!(b.legal()[0], Move::Mark { col: 1, row: 1 });
    }

    #[test]
    fn mark_places_and_alternates() {
        let b = Board::new().mark(1, 1);
        assert_eq!(b.cell(1, 1), Some(0));
        assert_eq!(b.to_move(), Some(1));
    }

    #[test]
    fn row_win_detected() {
        // X: C1R1 C2R1 C3R1, O: C1R2 C2R2
        let b = play(&[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]);
        assert_eq!(b.winner(), Some(0));
        let out = b.outcome();
        assert_eq!(out.returns, [1.0, -1.0]);
        assert_eq!(out.winner, Some(0));
    }

    #[test]
    fn diagonal_win_detected() {
        // X holds C1R1, C2R2, plays C3R3; O elsewhere.
        let b = play(&[(1, 1), (1, 2), (2, 2), (2, 1), (3, 3)]);
        assert_eq!(b.winner(), Some(0));
    }

    #[test]
    fn full_board_without_line_is_draw() {
        // X: C1R1 C3R1 C2R2 C1R3 C3R3? build a known drawn game:
        // X C2R2, O C1R1, X C3R1, O C1R3, X C1R2, O C3R2, X C2R1? -> check no line
        let b = play(&[
            (2, 2),
            (1, 1),
            (3, 1),
            (1, 3),
            (1, 2),
            (3, 2),
            (2, 3),
            (2, 1),
            (3, 3),
        ]);
        assert_eq!(b.winner(), None);
        assert!(b.full());
        let out = b.outcome();
        assert!(out.draw);
        assert_eq!(out.returns, [0.0, 0.0]);
    }
}
