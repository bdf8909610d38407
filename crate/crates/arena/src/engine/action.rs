//! Game moves, their bracketed surface syntax, and the per-game grammars
//! used to extract the last action token from free-form generation text.
//!
//! Surface formats are fixed per game:
//! `<CxRy>`, `<Cx>`, `<ax->by>` / `<ax->by*>`, `<Bet>`/`<Pass>`,
//! `<q dices, v value>`/`<Liar>`, `<x>`,
//! `<Proposal: [a, b, c]>`/`<Utterance: [a, b, c]>`/`<Agree>`,
//! `<pile:x, take:y>`, `<roll>`/`<stop>`, `<Testify>`/`<Silent>`.
//!
//! Keyword actions match case-insensitively; coordinate actions are exact.
//! Rendering always emits the canonical form, and `parse(render(m)) == m`
//! for every legal move of every game.

use super::GameId;
use regex::Regex;
use std::fmt;
use std::sync::OnceLock;

/// A parsed move of any of the ten games.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Tic-Tac-Toe `<CxRy>`; 1-based column and row.
    Mark { col: u8, row: u8 },
    /// Connect-4 `<Cx>`; 1-based column.
    Drop { col: u8 },
    /// Breakthrough `<ax->by>` (`*` suffix on captures); columns 1..=3 map to
    /// letters a..=c, rows are 1-based from White's home side.
    Push {
        from_col: u8,
        from_row: u8,
        to_col: u8,
        to_row: u8,
        capture: bool,
    },
    /// Kuhn Poker `<Bet>`.
    Bet,
    /// Kuhn Poker `<Pass>`.
    Pass,
    /// Liar's Dice `<q dices, v value>`.
    Bid { quantity: u8, face: u8 },
    /// Liar's Dice `<Liar>`.
    Liar,
    /// Blind Auction `<x>`.
    SealedBid { amount: u32 },
    /// Negotiation `<Agree>`.
    Agree,
    /// Negotiation `<Proposal: [a, b, c]>`.
    Proposal([u32; 3]),
    /// Negotiation `<Utterance: [a, b, c]>`.
    Utterance([u32; 3]),
    /// Nim `<pile:x, take:y>`; 1-based pile index.
    Take { pile: u8, count: u32 },
    /// Pig `<roll>`.
    Roll,
    /// Pig `<stop>`.
    Stop,
    /// Prisoner's Dilemma `<Testify>`.
    Testify,
    /// Prisoner's Dilemma `<Silent>`.
    Silent,
}

impl Move {
    /// Move identity for legality matching. Exact equality everywhere except
    /// Breakthrough, where the capture star is derived from the board and two
    /// tokens naming the same from/to squares denote the same play.
    pub fn same_play(&self, other: &Move) -> bool {
        match (self, other) {
            (
                Move::Push {
                    from_col: fa,
                    from_row: ra,
                    to_col: ta,
                    to_row: wa,
                    ..
                },
                Move::Push {
                    from_col: fb,
                    from_row: rb,
                    to_col: tb,
                    to_row: wb,
                    ..
                },
            ) => fa == fb && ra == rb && ta == tb && wa == wb,
            (a, b) => a == b,
        }
    }
}

fn col_letter(col: u8) -> char {
    (b'a' + col - 1) as char
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Mark { col, row } => write!(f, "<C{col}R{row}>"),
            Move::Drop { col } => write!(f, "<C{col}>"),
            Move::Push {
                from_col,
                from_row,
                to_col,
                to_row,
                capture,
            } => write!(
                f,
                "<{}{}->{}{}{}>",
                col_letter(*from_col),
                from_row,
                col_letter(*to_col),
                to_row,
                if *capture { "*" } else { "" }
            ),
            Move::Bet => write!(f, "<Bet>"),
            Move::Pass => write!(f, "<Pass>"),
            Move::Bid { quantity, face } => write!(f, "<{quantity} dices, {face} value>"),
            Move::Liar => write!(f, "<Liar>"),
            Move::SealedBid { amount } => write!(f, "<{amount}>"),
            Move::Agree => write!(f, "<Agree>"),
            Move::Proposal([a, b, c]) => write!(f, "<Proposal: [{a}, {b}, {c}]>"),
            Move::Utterance([a, b, c]) => write!(f, "<Utterance: [{a}, {b}, {c}]>"),
            Move::Take { pile, count } => write!(f, "<pile:{pile}, take:{count}>"),
            Move::Roll => write!(f, "<roll>"),
            Move::Stop => write!(f, "<stop>"),
            Move::Testify => write!(f, "<Testify>"),
            Move::Silent => write!(f, "<Silent>"),
        }
    }
}

/// A move paired with its canonical surface form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionToken {
    pub surface: String,
    pub parsed: Move,
}

impl ActionToken {
    pub fn new(parsed: Move) -> ActionToken {
        ActionToken {
            surface: parsed.to_string(),
            parsed,
        }
    }
}

impl fmt::Display for ActionToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.surface)
    }
}

/// Result of scanning text for a game's action grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scan {
    /// No occurrence of the grammar anywhere in the text.
    NotFound,
    /// The last occurrence matched the shape but a field did not fit its
    /// machine range (e.g. a 12-digit column index).
    Malformed,
    /// The last occurrence parsed.
    Found(Move),
}

fn re(cell: &'static OnceLock<Regex>, pattern: &str) -> &'static Regex {
    cell.get_or_init(|| Regex::new(pattern).expect("static regex"))
}

struct Hit {
    start: usize,
    mv: Option<Move>, // None = malformed fields
}

fn last_hit(hits: impl Iterator<Item = Hit>) -> Option<Hit> {
    hits.max_by_key(|h| h.start)
}

fn parse_u8(s: &str) -> Option<u8> {
    s.parse::<u8>().ok()
}

fn parse_u32(s: &str) -> Option<u32> {
    s.parse::<u32>().ok()
}

/// Scan `text` for the last occurrence of `game`'s bracketed action pattern.
pub fn scan_last(game: GameId, text: &str) -> Scan {
    let hit = match game {
        GameId::Tictactoe => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(&RE, r"<C([0-9]+)R([0-9]+)>");
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: parse_u8(&c[1])
                    .zip(parse_u8(&c[2]))
                    .map(|(col, row)| Move::Mark { col, row }),
            }))
        }
        GameId::Connect4 => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(&RE, r"<C([0-9]+)>");
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: parse_u8(&c[1]).map(|col| Move::Drop { col }),
            }))
        }
        GameId::Breakthrough => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(&RE, r"<([a-c])([0-9]+)->([a-c])([0-9]+)(\*?)>");
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: parse_u8(&c[2]).zip(parse_u8(&c[4])).map(|(fr, tr)| Move::Push {
                    from_col: c[1].as_bytes()[0] - b'a' + 1,
                    from_row: fr,
                    to_col: c[3].as_bytes()[0] - b'a' + 1,
                    to_row: tr,
                    capture: &c[5] == "*",
                }),
            }))
        }
        GameId::Kuhn => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(&RE, r"(?i)<(Bet|Pass)>");
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: Some(if c[1].eq_ignore_ascii_case("bet") {
                    Move::Bet
                } else {
                    Move::Pass
                }),
            }))
        }
        GameId::LiarsDice => {
            static BID: OnceLock<Regex> = OnceLock::new();
            static LIAR: OnceLock<Regex> = OnceLock::new();
            let bid = re(&BID, r"(?i)<\s*([0-9]+)\s+dices?\s*,\s*([0-9]+)\s+values?\s*>");
            let liar = re(&LIAR, r"(?i)<Liar>");
            let bids = bid.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: parse_u8(&c[1])
                    .zip(parse_u8(&c[2]))
                    .map(|(quantity, face)| Move::Bid { quantity, face }),
            });
            let liars = liar.find_iter(text).map(|m| Hit {
                start: m.start(),
                mv: Some(Move::Liar),
            });
            last_hit(bids.chain(liars))
        }
        GameId::Auction => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(&RE, r"<([0-9]+)>");
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: parse_u32(&c[1]).map(|amount| Move::SealedBid { amount }),
            }))
        }
        GameId::Negotiation => {
            static AGREE: OnceLock<Regex> = OnceLock::new();
            static VEC: OnceLock<Regex> = OnceLock::new();
            let agree = re(&AGREE, r"(?i)<Agree>");
            let vec = re(
                &VEC,
                r"(?i)<(Proposal|Utterance)\s*:\s*\[\s*([0-9]+)\s*,\s*([0-9]+)\s*,\s*([0-9]+)\s*\]\s*>",
            );
            let agrees = agree.find_iter(text).map(|m| Hit {
                start: m.start(),
                mv: Some(Move::Agree),
            });
            let vecs = vec.captures_iter(text).map(|c| {
                let nums = parse_u32(&c[2]).zip(parse_u32(&c[3])).zip(parse_u32(&c[4]));
                Hit {
                    start: c.get(0).unwrap().start(),
                    mv: nums.map(|((a, b), cc)| {
                        if c[1].eq_ignore_ascii_case("proposal") {
                            Move::Proposal([a, b, cc])
                        } else {
                            Move::Utterance([a, b, cc])
                        }
                    }),
                }
            });
            last_hit(agrees.chain(vecs))
        }
        GameId::Nim => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(
                &RE,
                r"(?i)<\s*pile\s*:\s*([0-9]+)\s*,\s*take\s*:\s*([0-9]+)\s*>",
            );
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: parse_u8(&c[1])
                    .zip(parse_u32(&c[2]))
                    .map(|(pile, count)| Move::Take { pile, count }),
            }))
        }
        GameId::Pig => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(&RE, r"(?i)<(roll|stop)>");
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: Some(if c[1].eq_ignore_ascii_case("roll") {
                    Move::Roll
                } else {
                    Move::Stop
                }),
            }))
        }
        GameId::PrisonersDilemma => {
            static RE: OnceLock<Regex> = OnceLock::new();
            let r = re(&RE, r"(?i)<(Testify|Silent)>");
            last_hit(r.captures_iter(text).map(|c| Hit {
                start: c.get(0).unwrap().start(),
                mv: Some(if c[1].eq_ignore_ascii_case("testify") {
                    Move::Testify
                } else {
                    Move::Silent
                }),
            }))
        }
    };
    match hit {
        None => Scan::NotFound,
        Some(Hit { mv: None, .. }) => Scan::Malformed,
        Some(Hit { mv: Some(m), .. }) => Scan::Found(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_surfaces() {
        assert_eq!(Move::Mark { col: 1, row: 2 }.to_string(), "<C1R2>");
        assert_eq!(Move::Drop { col: 3 }.to_string(), "<C3>");
        assert_eq!(
            Move::Push {
                from_col: 2,
                from_row: 2,
                to_col: 2,
                to_row: 3,
                capture: false
            }
            .to_string(),
            "<b2->b3>"
        );
        assert_eq!(
            Move::Push {
                from_col: 1,
                from_row: 4,
                to_col: 2,
                to_row: 5,
                capture: true
            }
            .to_string(),
            "<a4->b5*>"
        );
        assert_eq!(Move::Bid { quantity: 2, face: 6 }.to_string(), "<2 dices, 6 value>");
        assert_eq!(Move::SealedBid { amount: 7 }.to_string(), "<7>");
        assert_eq!(Move::Proposal([1, 0, 2]).to_string(), "<Proposal: [1, 0, 2]>");
        assert_eq!(Move::Take { pile: 2, count: 3 }.to_string(), "<pile:2, take:3>");
    }

    #[test]
    fn last_occurrence_wins() {
        let text = "I considered <C1R1> but Action: <C2R3>";
        assert_eq!(
            scan_last(GameId::Tictactoe, text),
            Scan::Found(Move::Mark { col: 2, row: 3 })
        );
    }

    #[test]
    fn keyword_actions_are_case_insensitive() {
        assert_eq!(scan_last(GameId::Kuhn, "<bet>"), Scan::Found(Move::Bet));
        assert_eq!(scan_last(GameId::Kuhn, "<BET>"), Scan::Found(Move::Bet));
        assert_eq!(scan_last(GameId::Pig, "<ROLL>"), Scan::Found(Move::Roll));
        assert_eq!(
            scan_last(GameId::PrisonersDilemma, "<silent>"),
            Scan::Found(Move::Silent)
        );
    }

    #[test]
    fn coordinate_actions_are_exact_case() {
        assert_eq!(scan_last(GameId::Tictactoe, "<c1r2>"), Scan::NotFound);
        assert_eq!(scan_last(GameId::Breakthrough, "<A2->B3>"), Scan::NotFound);
    }

    #[test]
    fn liars_dice_flexible_whitespace() {
        assert_eq!(
            scan_last(GameId::LiarsDice, "bid < 2 dices,6 value >"),
            Scan::Found(Move::Bid { quantity: 2, face: 6 })
        );
        assert_eq!(scan_last(GameId::LiarsDice, "<liar>"), Scan::Found(Move::Liar));
    }

    #[test]
    fn overflowing_fields_are_malformed() {
        assert_eq!(scan_last(GameId::Tictactoe, "<C999999999999R1>"), Scan::Malformed);
        assert_eq!(
            scan_last(GameId::Auction, "<99999999999999999999>"),
            Scan::Malformed
        );
    }

    #[test]
    fn no_token_is_not_found() {
        assert_eq!(scan_last(GameId::Kuhn, "I should bet."), Scan::NotFound);
        assert_eq!(scan_last(GameId::Auction, "<abc>"), Scan::NotFound);
    }

    #[test]
    fn push_same_play_ignores_capture_star() {
        let quiet = Move::Push {
            from_col: 2,
            from_row: 2,
            to_col: 3,
            to_row: 3,
            capture: false,
        };
        let star = Move::Push {
            from_col: 2,
            from_row: 2,
            to_col: 3,
            to_row: 3,
            capture: true,
        };
        assert!(quiet.same_play(&star));
        assert_ne!(quiet, star);
    }
}
