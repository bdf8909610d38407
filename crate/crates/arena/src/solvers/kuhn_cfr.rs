//! Self-contained Kuhn poker equilibrium solver.
//!
//! A deliberately independent transcription of the one-round Kuhn rules
//! (never routed through the engine) used to derive the game value. Runs
//! CFR+ (regret-matching+ with alternating updates and linear averaging)
//! and brackets the true game value by evaluating exact pure best responses
//! against the average strategies: `lower <= v* <= upper` with the bracket
//! shrinking as iterations grow. The known value for the first player is
//! -1/18.
//!
//! Also enumerates every terminal history of every deal, which doubles as an
//! independent oracle for the engine's Kuhn returns.

/// Cards ranked J < Q < K.
pub const CARDS: [u8; 3] = [0, 1, 2];

/// The six ordered deals (card0, card1).
pub fn deals() -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for &a in &CARDS {
        for &b in &CARDS {
            if a != b {
                out.push((a, b));
            }
        }
    }
    out
}

/// Betting histories are strings over {p, b}. Terminal: pp, bp, bb, pbp, pbb.
pub fn is_terminal(history: &str) -> bool {
    matches!(history, "pp" | "bp" | "bb" | "pbp" | "pbb")
}

/// Utility to player 0 at a terminal history.
pub fn terminal_value(history: &str, card0: u8, card1: u8) -> f64 {
    let showdown = |pot: f64| if card0 > card1 { pot } else { -pot };
    match history {
        "pp" => showdown(1.0),
        "bp" => 1.0,
        "bb" => showdown(2.0),
        "pbp" => -1.0,
        "pbb" => showdown(2.0),
        _ => unreachable!("non-terminal history"),
    }
}

/// Every (deal, terminal history, value to player 0).
pub fn enumerate_terminals() -> Vec<((u8, u8), &'static str, f64)> {
    let mut out = Vec::new();
    for (c0, c1) in deals() {
        for h in ["pp", "bp", "bb", "pbp", "pbb"] {
            out.push(((c0, c1), h, terminal_value(h, c0, c1)));
        }
    }
    out
}

fn acting_player(history: &str) -> usize {
    history.len() % 2
}

/// Infoset index: player 0 acts at "" (0..3 by card) and "pb" (3..6);
/// player 1 acts at "p" (0..3) and "b" (3..6).
fn infoset(player: usize, card: u8, history: &str) -> usize {
    let slot = match (player, history) {
        (0, "") => 0,
        (0, "pb") => 1,
        (1, "p") => 0,
        (1, "b") => 1,
        _ => unreachable!("no decision for player {player} at {history:?}"),
    };
    slot * 3 + card as usize
}

const ACTIONS: [char; 2] = ['p', 'b']; // 0 = pass, 1 = bet

#[derive(Clone)]
struct Profile {
    /// `strategy[player][infoset][action]`
    strategy: [[[f64; 2]; 6]; 2],
}

impl Profile {
    fn uniform() -> Profile {
        Profile {
            strategy: [[[0.5; 2]; 6]; 2],
        }
    }
}

/// `lower <= game value (player 0) <= upper`, certified by exact best
/// responses against the average profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueBracket {
    pub lower: f64,
    pub upper: f64,
}

impl ValueBracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

pub const DEFAULT_ITERATIONS: u32 = 200_000;

struct Cfr {
    regret: [[[f64; 2]; 6]; 2],
    strategy_sum: [[[f64; 2]; 6]; 2],
}

impl Cfr {
    fn current(&self, player: usize, info: usize) -> [f64; 2] {
        let r = self.regret[player][info];
        let pos = [r[0].max(0.0), r[1].max(0.0)];
        let total = pos[0] + pos[1];
        if total > 0.0 {
            [pos[0] / total, pos[1] / total]
        } else {
            [0.5, 0.5]
        }
    }

    /// One traversal updating `traverser`'s regrets. Returns the utility to
    /// `traverser` under (current strategies, opponent reach weight).
    fn walk(
        &mut self,
        history: String,
        cards: (u8, u8),
        traverser: usize,
        reach_opp: f64,
        weight: f64,
    ) -> f64 {
        if is_terminal(&history) {
            let v0 = terminal_value(&history, cards.0, cards.1);
            return if traverser == 0 { v0 } else { -v0 };
        }
        let player = acting_player(&history);
        let card = if player == 0 { cards.0 } else { cards.1 };
        let info = infoset(player, card, &history);
        let sigma = self.current(player, info);

        if player == traverser {
            let mut child = [0.0f64; 2];
            let mut node = 0.0;
            for (i, a) in ACTIONS.iter().enumerate() {
                let mut h = history.clone();
                h.push(*a);
                child[i] = self.walk(h, cards, traverser, reach_opp, weight);
                node += sigma[i] * child[i];
            }
            for i in 0..2 {
                // Regret-matching+: regrets floored at zero.
                self.regret[player][info][i] =
                    (self.regret[player][info][i] + reach_opp * (child[i] - node)).max(0.0);
            }
            node
        } else {
            // Linear averaging of the opponent's strategy, weighted by reach.
            for i in 0..2 {
                self.strategy_sum[player][info][i] += weight * reach_opp * sigma[i];
            }
            let mut node = 0.0;
            for (i, a) in ACTIONS.iter().enumerate() {
                let mut h = history.clone();
                h.push(*a);
                node += sigma[i] * self.walk(h, cards, traverser, reach_opp * sigma[i], weight);
            }
            node
        }
    }

    fn average(&self) -> Profile {
        let mut profile = Profile::uniform();
        for player in 0..2 {
            for info in 0..6 {
                let s = self.strategy_sum[player][info];
                let total = s[0] + s[1];
                if total > 0.0 {
                    profile.strategy[player][info] = [s[0] / total, s[1] / total];
                }
            }
        }
        profile
    }
}

/// Expected utility to player 0 when both players follow `profile`.
fn expected_value(profile: &Profile) -> f64 {
    let mut total = 0.0;
    for (c0, c1) in deals() {
        total += history_value(profile, String::new(), (c0, c1));
    }
    total / 6.0
}

fn history_value(profile: &Profile, history: String, cards: (u8, u8)) -> f64 {
    if is_terminal(&history) {
        return terminal_value(&history, cards.0, cards.1);
    }
    let player = acting_player(&history);
    let card = if player == 0 { cards.0 } else { cards.1 };
    let sigma = profile.strategy[player][infoset(player, card, &history)];
    let mut v = 0.0;
    for (i, a) in ACTIONS.iter().enumerate() {
        let mut h = history.clone();
        h.push(*a);
        v += sigma[i] * history_value(profile, h, cards);
    }
    v
}

/// Exact best-response value for `responder` against `profile`'s other side.
///
/// Enumerates the responder's pure strategies per card (the two decision
/// points per card are jointly chosen) and maximizes expected utility over
/// the uniform deal and the opponent's mixed behavior.
fn best_response_value(profile: &Profile, responder: usize) -> f64 {
    let mut total = 0.0;
    for &card in &CARDS {
        let mut best = f64::NEG_INFINITY;
        for first in 0..2usize {
            for second in 0..2usize {
                let mut v = 0.0;
                for &opp_card in &CARDS {
                    if opp_card == card {
                        continue;
                    }
                    let cards = if responder == 0 {
                        (card, opp_card)
                    } else {
                        (opp_card, card)
                    };
                    v += response_walk(profile, String::new(), cards, responder, [first, second]);
                }
                // Two consistent opponent cards, each with chance 1/6 within
                // the deal distribution conditioned on our card being fixed.
                best = best.max(v / 6.0);
            }
        }
        total += best;
    }
    total
}

fn response_walk(
    profile: &Profile,
    history: String,
    cards: (u8, u8),
    responder: usize,
    pure: [usize; 2],
) -> f64 {
    if is_terminal(&history) {
        let v0 = terminal_value(&history, cards.0, cards.1);
        return if responder == 0 { v0 } else { -v0 };
    }
    let player = acting_player(&history);
    if player == responder {
        // First decision point is the shorter history.
        let slot = match (player, history.as_str()) {
            (0, "") | (1, "p") => 0,
            (0, "pb") | (1, "b") => 1,
            _ => unreachable!(),
        };
        let mut h = history.clone();
        h.push(ACTIONS[pure[slot]]);
        response_walk(profile, h, cards, responder, pure)
    } else {
        let card = if player == 0 { cards.0 } else { cards.1 };
        let sigma = profile.strategy[player][infoset(player, card, &history)];
        let mut v = 0.0;
        for (i, a) in ACTIONS.iter().enumerate() {
            let mut h = history.clone();
            h.push(*a);
            v += sigma[i] * response_walk(profile, h, cards, responder, pure);
        }
        v
    }
}

/// Run CFR+ and certify the first-player game value with an exact
/// best-response bracket.
pub fn optimal_value(iterations: u32) -> ValueBracket {
    let mut cfr = Cfr {
        regret: [[[0.0; 2]; 6]; 2],
        strategy_sum: [[[0.0; 2]; 6]; 2],
    };
    for t in 1..=iterations {
        let weight = t as f64;
        for traverser in 0..2 {
            for (c0, c1) in deals() {
                cfr.walk(String::new(), (c0, c1), traverser, 1.0 / 6.0, weight);
            }
        }
    }
    let profile = cfr.average();
    // Player 0 can guarantee at least u0(sigma0, BR1); the true value is at
    // most u0(BR0, sigma1).
    let lower = -best_response_value(&profile, 1);
    let upper = best_response_value(&profile, 0);
    ValueBracket { lower, upper }
}

/// Exact rational arithmetic for the equilibrium certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    num: i64,
    den: i64,
}

impl Frac {
    pub fn new(num: i64, den: i64) -> Frac {
        assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        Frac {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn zero() -> Frac {
        Frac::new(0, 1)
    }

    pub fn add(self, other: Frac) -> Frac {
        Frac::new(self.num * other.den + other.num * self.den, self.den * other.den)
    }

    pub fn mul(self, other: Frac) -> Frac {
        Frac::new(self.num * other.num, self.den * other.den)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Behavioral probabilities of betting/calling, `[player][infoset]`, as
/// exact fractions. Indexing matches [`infoset`].
type RationalProfile = [[Frac; 6]; 2];

/// The closed-form optimal profile at bluff parameter 1/3.
///
/// First player: bet a Jack with probability 1/3, never bet a Queen (call a
/// check-raise with 2/3), always bet a King. Second player facing a check:
/// bet a Jack with 1/3, check a Queen, always bet a King; facing a bet:
/// fold a Jack, call a Queen with 1/3, always call a King.
fn reference_profile() -> RationalProfile {
    let f = Frac::new;
    let mut p = [[Frac::zero(); 6]; 2];
    // player 0 at "" (slot 0): J, Q, K
    p[0][0] = f(1, 3);
    p[0][1] = f(0, 1);
    p[0][2] = f(1, 1);
    // player 0 at "pb" (slot 1)
    p[0][3] = f(0, 1);
    p[0][4] = f(2, 3);
    p[0][5] = f(1, 1);
    // player 1 at "p" (slot 0)
    p[1][0] = f(1, 3);
    p[1][1] = f(0, 1);
    p[1][2] = f(1, 1);
    // player 1 at "b" (slot 1)
    p[1][3] = f(0, 1);
    p[1][4] = f(1, 3);
    p[1][5] = f(1, 1);
    p
}

fn rational_terminal(history: &str, c0: u8, c1: u8) -> Frac {
    Frac::new(terminal_value(history, c0, c1) as i64, 1)
}

fn bet_prob(profile: &RationalProfile, player: usize, card: u8, history: &str) -> Frac {
    profile[player][infoset(player, card, history)]
}

fn rational_value(profile: &RationalProfile, history: String, cards: (u8, u8)) -> Frac {
    if is_terminal(&history) {
        return rational_terminal(&history, cards.0, cards.1);
    }
    let player = acting_player(&history);
    let card = if player == 0 { cards.0 } else { cards.1 };
    let bet = bet_prob(profile, player, card, &history);
    let pass = Frac::new(bet.den - bet.num, bet.den);
    let mut hp = history.clone();
    hp.push('p');
    let mut hb = history;
    hb.push('b');
    pass.mul(rational_value(profile, hp, cards))
        .add(bet.mul(rational_value(profile, hb, cards)))
}

fn rational_response(
    profile: &RationalProfile,
    history: String,
    cards: (u8, u8),
    responder: usize,
    pure: [usize; 2],
) -> Frac {
    if is_terminal(&history) {
        let v = rational_terminal(&history, cards.0, cards.1);
        return if responder == 0 { v } else { Frac::new(-v.num, v.den) };
    }
    let player = acting_player(&history);
    if player == responder {
        let slot = match (player, history.as_str()) {
            (0, "") | (1, "p") => 0,
            (0, "pb") | (1, "b") => 1,
            _ => unreachable!(),
        };
        let mut h = history;
        h.push(ACTIONS[pure[slot]]);
        rational_response(profile, h, cards, responder, pure)
    } else {
        let card = if player == 0 { cards.0 } else { cards.1 };
        let bet = bet_prob(profile, player, card, &history);
        let pass = Frac::new(bet.den - bet.num, bet.den);
        let mut hp = history.clone();
        hp.push('p');
        let mut hb = history;
        hb.push('b');
        pass.mul(rational_response(profile, hp, cards, responder, pure))
            .add(bet.mul(rational_response(profile, hb, cards, responder, pure)))
    }
}

fn rational_best_response(profile: &RationalProfile, responder: usize) -> Frac {
    let mut total = Frac::zero();
    for &card in &CARDS {
        let mut best: Option<Frac> = None;
        for first in 0..2usize {
            for second in 0..2usize {
                let mut v = Frac::zero();
                for &opp in &CARDS {
                    if opp == card {
                        continue;
                    }
                    let cards = if responder == 0 { (card, opp) } else { (opp, card) };
                    v = v.add(rational_response(
                        profile,
                        String::new(),
                        cards,
                        responder,
                        [first, second],
                    ));
                }
                let v = v.mul(Frac::new(1, 6));
                best = Some(match best {
                    None => v,
                    Some(b) if v.to_f64() > b.to_f64() => v,
                    Some(b) => b,
                });
            }
        }
        total = total.add(best.expect("four pure strategies"));
    }
    total
}

/// Certify the exact first-player game value.
///
/// Evaluates the closed-form reference profile with exact rational
/// arithmetic and proves it is a Nash equilibrium by checking that neither
/// player's exact pure best response improves on it. The certified value is
/// returned as a fraction (-1/18); panics if the certificate fails, which
/// would mean the reference profile was transcribed wrongly.
pub fn certified_value() -> Frac {
    let profile = reference_profile();
    let mut value = Frac::zero();
    for (c0, c1) in deals() {
        value = value.add(rational_value(&profile, String::new(), (c0, c1)));
    }
    let value = value.mul(Frac::new(1, 6));
    let br0 = rational_best_response(&profile, 0);
    let br1 = rational_best_response(&profile, 1);
    // u0(BR0, sigma1) == u0(sigma) and u1(sigma0, BR1) == -u0(sigma).
    assert_eq!(br0, value, "player 0 improves on the reference profile");
    assert_eq!(br1, Frac::new(-value.num, value.den), "player 1 improves");
    value
}

/// Convenience: equilibrium expected value of the average profile.
pub fn equilibrium_estimate(iterations: u32) -> f64 {
    let mut cfr = Cfr {
        regret: [[[0.0; 2]; 6]; 2],
        strategy_sum: [[[0.0; 2]; 6]; 2],
    };
    for t in 1..=iterations {
        let weight = t as f64;
        for traverser in 0..2 {
            for (c0, c1) in deals() {
                cfr.walk(String::new(), (c0, c1), traverser, 1.0 / 6.0, weight);
            }
        }
    }
    expected_value(&cfr.average())
}

#[cfg(test)]
mod tests {
    use super::*;

    const KUHN_VALUE: f64 = -1.0 / 18.0;

    #[test]
    fn thirty_terminal_histories_with_returns_in_the_payoff_set() {
        let all = enumerate_terminals();
        assert_eq!(all.len(), 30);
        for (_, _, v) in &all {
            assert!([1.0, -1.0, 2.0, -2.0].contains(v));
        }
    }

    #[test]
    fn terminal_values_are_zero_sum_by_construction() {
        // Utility is stated for player 0; player 1 earns the negation, so the
        // sum over seats is identically zero. Spot-check the fold lines.
        assert_eq!(terminal_value("bp", 0, 2), 1.0); // fold beats a better card
        assert_eq!(terminal_value("pbp", 2, 0), -1.0);
    }

    #[test]
    fn cfr_brackets_the_known_game_value() {
        let bracket = optimal_value(20_000);
        assert!(
            bracket.lower <= KUHN_VALUE + 1e-12 && KUHN_VALUE - 1e-12 <= bracket.upper,
            "bracket {bracket:?}"
        );
        assert!(bracket.width() < 1e-3, "width {}", bracket.width());
    }

    #[test]
    fn certificate_pins_the_value_exactly() {
        let v = certified_value();
        assert_eq!(v, Frac::new(-1, 18));
        assert!((v.to_f64() - KUHN_VALUE).abs() <= 1e-9);
    }

    #[test]
    fn bracket_contains_the_certified_value() {
        let bracket = optimal_value(DEFAULT_ITERATIONS);
        let v = certified_value().to_f64();
        assert!(bracket.lower <= v && v <= bracket.upper, "bracket {bracket:?}");
        assert!(bracket.width() < 2e-4, "width {}", bracket.width());
    }

    #[test]
    fn average_profile_value_matches_the_bracket() {
        let v = equilibrium_estimate(50_000);
        assert!((v - KUHN_VALUE).abs() < 1e-4, "estimate {v}");
    }
}
