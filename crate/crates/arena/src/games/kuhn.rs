//! One-round Kuhn poker with the standard zero-sum rules: both players ante
//! 1, the bet size is 1, and the deck is {J, Q, K} with one card set aside.
//!
//! Terminal betting sequences and returns for the pot winner:
//! pass-pass showdown for 1, bet-pass 1 to the bettor, bet-bet showdown
//! for 2, pass-bet-pass 1 to the bettor, pass-bet-bet showdown for 2.

use crate::engine::{rng, Move, Outcome, Player};
use rand::seq::SliceRandom;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Card {
    Jack,
    Queen,
    King,
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Card::Jack => "J",
            Card::Queen => "Q",
            Card::King => "K",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Act {
    Pass,
    Bet,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hand {
    cards: [Card; 2],
    seq: Vec<Act>,
}

impl Hand {
    /// Deal two distinct cards from the match seed; the third is set aside.
    pub fn deal(seed: u64) -> Hand {
        let mut deck = [Card::Jack, Card::Queen, Card::King];
        deck.shuffle(&mut rng::stream(seed, "kuhn.deal"));
        Hand {
            cards: [deck[0], deck[1]],
            seq: Vec::new(),
        }
    }

    pub fn with_cards(cards: [Card; 2], seq: Vec<Act>) -> Hand {
        Hand { cards, seq }
    }

    pub fn card(&self, player: Player) -> Card {
        self.cards[player]
    }

    /// Hand with the opponent's hidden card resampled uniformly from the two
    /// cards `player` cannot see. Solver-side determinization helper.
    pub fn resample_opponent(&self, player: Player, rng: &mut impl rand::Rng) -> Hand {
        let mine = self.cards[player];
        let others: Vec<Card> = [Card::Jack, Card::Queen, Card::King]
            .into_iter()
            .filter(|c| *c != mine)
            .collect();
        let mut cards = self.cards;
        cards[1 - player] = others[rng.gen_range(0..others.len())];
        Hand {
            cards,
            seq: self.seq.clone(),
        }
    }

    pub fn sequence(&self) -> &[Act] {
        &self.seq
    }

    fn sequence_terminal(&self) -> bool {
        match self.seq.as_slice() {
            [Act::Pass, Act::Pass] | [Act::Bet, _] => true,
            [Act::Pass, Act::Bet, _] => true,
            _ => false,
        }
    }

    pub fn to_move(&self) -> Option<Player> {
        if self.sequence_terminal() {
            None
        } else {
            Some(self.seq.len() % 2)
        }
    }

    pub fn legal(&self) -> Vec<Move> {
        vec![Move::Bet, Move::Pass]
    }

    pub fn play(&self, act: Act) -> Hand {
        let mut next = self.clone();
        next.seq.push(act);
        next
    }

    fn showdown(&self) -> Player {
        if self.cards[0] > self.cards[1] {
            0
        } else {
            1
        }
    }

    pub fn outcome(&self) -> Outcome {
        match self.seq.as_slice() {
            [Act::Pass, Act::Pass] => Outcome::win(self.showdown(), 1.0),
            [Act::Bet, Act::Pass] => Outcome::win(0, 1.0),
            [Act::Bet, Act::Bet] => Outcome::win(self.showdown(), 2.0),
            [Act::Pass, Act::Bet, Act::Pass] => Outcome::win(1, 1.0),
            [Act::Pass, Act::Bet, Act::Bet] => Outcome::win(self.showdown(), 2.0),
            _ => unreachable!("outcome on a non-terminal hand"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hand(cards: [Card; 2], seq: &[Act]) -> Hand {
        Hand::with_cards(cards, seq.to_vec())
    }

    #[test]
    fn deal_is_seeded_and_distinct() {
        for seed in 0..50 {
            let h = Hand::deal(seed);
            assert_ne!(h.card(0), h.card(1));
            assert_eq!(Hand::deal(seed), h);
        }
    }

    #[test]
    fn both_pass_higher_card_wins_one() {
        let h = hand([Card::King, Card::Queen], &[Act::Pass, Act::Pass]);
        assert_eq!(h.outcome().returns, [1.0, -1.0]);
    }

    #[test]
    fn fold_concedes_regardless_of_cards() {
        let h = hand([Card::Jack, Card::Queen], &[Act::Bet, Act::Pass]);
        assert_eq!(h.outcome().returns, [1.0, -1.0]);
    }

    #[test]
    fn called_bet_doubles_the_pot() {
        let h = hand([Card::Jack, Card::King], &[Act::Bet, Act::Bet]);
        assert_eq!(h.outcome().returns, [-2.0, 2.0]);
    }

    #[test]
    fn check_bet_fold_pays_the_bettor() {
        let h = hand([Card::King, Card::Jack], &[Act::Pass, Act::Bet, Act::Pass]);
        assert_eq!(h.outcome().returns, [-1.0, 1.0]);
    }

    #[test]
    fn turn_order_follows_the_sequence() {
        let h = hand([Card::King, Card::Jack], &[]);
        assert_eq!(h.to_move(), Some(0));
        let h = h.play(Act::Pass);
        assert_eq!(h.to_move(), Some(1));
        let h = h.play(Act::Bet);
        assert_eq!(h.to_move(), Some(0));
        let h = h.play(Act::Bet);
        assert_eq!(h.to_move(), None);
        assert_eq!(h.outcome().returns, [2.0, -2.0]);
    }
}
