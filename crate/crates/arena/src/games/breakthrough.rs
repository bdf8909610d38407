//! Breakthrough scaled to a 3-column (a-c) by 8-row board.
//!
//! White (player 0) starts on rows 1-2 and pushes toward row 8; Black
//! (player 1) starts on rows 7-8 and pushes toward row 1. Pieces move one
//! row forward, straight only onto an empty square, diagonally onto an empty
//! square or an opponent piece (capture). Reaching the opponent's home row
//! or wiping out the opponent wins; there are no draws.

use crate::engine::{Move, Outcome, Player};

pub const COLS: u8 = 3;
pub const ROWS: u8 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    /// `cells[row-1][col-1]`
    cells: [[Option<Player>; COLS as usize]; ROWS as usize],
    next: Player,
}

fn forward(player: Player) -> i8 {
    if player == 0 {
        1
    } else {
        -1
    }
}

fn home_row_of_opponent(player: Player) -> u8 {
    if player == 0 {
        ROWS
    } else {
        1
    }
}

impl Board {
    pub fn new() -> Board {
        let mut cells = [[None; COLS as usize]; ROWS as usize];
        for row in [1u8, 2] {
            for col in 1..=COLS {
                cells[row as usize - 1][col as usize - 1] = Some(0);
            }
        }
        for row in [ROWS - 1, ROWS] {
            for col in 1..=COLS {
                cells[row as usize - 1][col as usize - 1] = Some(1);
            }
        }
        Board { cells, next: 0 }
    }

    pub fn at(&self, col: u8, row: u8) -> Option<Player> {
        self.cells[row as usize - 1][col as usize - 1]
    }

    fn set(&mut self, col: u8, row: u8, v: Option<Player>) {
        self.cells[row as usize - 1][col as usize - 1] = v;
    }

    pub fn piece_count(&self, player: Player) -> usize {
        self.cells
            .iter()
            .flatten()
            .filter(|c| **c == Some(player))
            .count()
    }

    fn breached(&self, player: Player) -> bool {
        let row = home_row_of_opponent(player);
        (1..=COLS).any(|col| self.at(col, row) == Some(player))
    }

    pub fn winner(&self) -> Option<Player> {
        for p in 0..2 {
            if self.breached(p) || self.piece_count(1 - p) == 0 {
                return Some(p);
            }
        }
        None
    }

    pub fn to_move(&self) -> Option<Player> {
        if self.winner().is_some() {
            None
        } else {
            Some(self.next)
        }
    }

    pub fn legal(&self) -> Vec<Move> {
        let player = self.next;
        let dir = forward(player);
        let mut moves = Vec::new();
        for from_col in 1..=COLS {
            for from_row in 1..=ROWS {
                if self.at(from_col, from_row) != Some(player) {
                    continue;
                }
                let to_row = from_row as i8 + dir;
                if !(1..=ROWS as i8).contains(&to_row) {
                    continue; // already on the last row means the game is over
                }
                let to_row = to_row as u8;
                for dc in [-1i8, 0, 1] {
                    let to_col = from_col as i8 + dc;
                    if !(1..=COLS as i8).contains(&to_col) {
                        continue;
                    }
                    let to_col = to_col as u8;
                    let target = self.at(to_col, to_row);
                    let ok = if dc == 0 {
                        target.is_none() // straight captures are forbidden
                    } else {
                        target != Some(player)
                    };
                    if ok {
                        moves.push(Move::Push {
                            from_col,
                            from_row,
                            to_col,
                            to_row,
                            capture: target == Some(1 - player),
                        });
                    }
                }
            }
        }
        moves.sort();
        moves
    }

    pub fn push(&self, mv: &Move) -> Board {
        let Move::Push {
            from_col,
            from_row,
            to_col,
            to_row,
            ..
        } = mv
        else {
            unreachable!("validated by the engine")
        };
        let mut next = self.clone();
        next.set(*from_col, *from_row, None);
        next.set(*to_col, *to_row, Some(self.next));
        next.next = 1 - self.next;
        next
    }

    pub fn outcome(&self) -> Outcome {
        Outcome::win(self.winner().expect("terminal"), 1.0)
    }

    /// Board rendering for observation prompts: one line per row, top row
    /// first, row index followed by the three cells (`b`, `w`, or `.`).
    pub fn preview(&self) -> String {
        let mut lines = Vec::with_capacity(ROWS as usize);
        for row in (1..=ROWS).rev() {
            let mut line = row.to_string();
            for col in 1..=COLS {
                line.push(' ');
                line.push(match self.at(col, row) {
                    Some(0) => 'w',
                    Some(_) => 'b',
                    None => '.',
                });
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn push(b: &Board, s: &str) -> Board {
        let crate::engine::action::Scan::Found(mv) =
            crate::engine::action::scan_last(crate::engine::GameId::Breakthrough, s)
        else {
            panic!("bad test move {s}")
        };
        assert!(
            b.legal().iter().any(|m| m.same_play(&mv)),
            "{s} not legal on\n{}",
            b.preview()
        );
        b.push(&mv)
    }

    #[test]
    fn initial_setup() {
        let b = Board::new();
        assert_eq!(b.piece_count(0), 6);
        assert_eq!(b.piece_count(1), 6);
        assert_eq!(b.at(2, 2), Some(0));
        assert_eq!(b.at(2, 7), Some(1));
        assert_eq!(b.to_move(), Some(0));
    }

    #[test]
    fn quiet_straight_move() {
        let b = push(&Board::new(), "<b2->b3>");
        assert_eq!(b.at(2, 3), Some(0));
        assert_eq!(b.at(2, 2), None);
        assert_eq!(b.to_move(), Some(1));
    }

    #[test]
    fn straight_capture_is_forbidden() {
        // March white b-pawn to b5, black b-pawn to b6; b5->b6 must be absent.
        let mut b = Board::new();
        b = push(&b, "<b2->b3>");
        b = push(&b, "<b7->b6>");
        b = push(&b, "<b3->b4>");
        b = push(&b, "<c7->c6>");
        b = push(&b, "<b4->b5>");
        b = push(&b, "<c8->c7>");
        // white to move, black piece on b6 directly ahead of b5
        assert_eq!(b.at(2, 6), Some(1));
        assert!(!b
            .legal()
            .iter()
            .any(|m| matches!(m, Move::Push { from_col: 2, from_row: 5, to_col: 2, to_row: 6, .. })));
        // but the diagonal captures exist and carry the star
        let diag: Vec<String> = b
            .legal()
            .iter()
            .filter(|m| matches!(m, Move::Push { from_row: 5, .. }))
            .map(|m| m.to_string())
            .collect();
        assert!(diag.contains(&"<b5->a6>".to_string()));
        assert!(diag.contains(&"<b5->c6*>".to_string()));
    }

    #[test]
    fn reaching_home_row_wins() {
        let mut b = Board::new();
        // Clear a path: white walks up column a capturing as needed.
        b = push(&b, "<a2->a3>");
        b = push(&b, "<b7->b6>");
        b = push(&b, "<a3->a4>");
        b = push(&b, "<b6->b5>");
        b = push(&b, "<a4->b5*>"); // capture
        b = push(&b, "<a7->a6>");
        b = push(&b, "<b5->a6*>"); // capture
        b = push(&b, "<b8->b7>");
        b = push(&b, "<a6->b7*>"); // capture
        b = push(&b, "<c7->c6>");
        b = push(&b, "<b7->a8*>"); // capture into the home row
        assert_eq!(b.winner(), Some(0));
        assert_eq!(b.outcome().returns, [1.0, -1.0]);
    }

    #[test]
    fn piece_counts_never_increase() {
        let b = Board::new();
        let after = push(&b, "<b2->b3>");
        assert!(after.piece_count(0) <= b.piece_count(0));
        assert!(after.piece_count(1) <= b.piece_count(1));
    }

    #[test]
    fn preview_shows_rows_top_down() {
        let p = Board::new().preview();
        let lines: Vec<&str> = p.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "8 b b b");
        assert_eq!(lines[7], "1 w w w");
        assert_eq!(lines[3], "5 . . .");
    }
}
