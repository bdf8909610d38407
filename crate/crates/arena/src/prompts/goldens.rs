//! Golden prompt fixtures: checked-in renderings of every
//! (game, stage, reasoning style) prompt over fixed observation views.
//!
//! `render_all` produces the canonical golden document;
//! `validate` byte-compares it against the embedded `assets/goldens.txt`.
//! Regenerate with `arena validate-prompts --write` after a deliberate
//! template change.

use super::{compose, ReasoningStyle};
use crate::engine::{ActionToken, GameId, GameState, Move, ObservationView, TurnActions};
use crate::games::{pig, Position};

/// Embedded golden document.
pub fn embedded() -> &'static str {
    include_str!("../../assets/goldens.txt")
}

/// Path of the golden document in the source tree (for `--write`).
pub fn source_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("assets/goldens.txt")
}

fn seq(state: GameState, moves: &[Move]) -> GameState {
    moves.iter().fold(state, |s, mv| {
        s.apply(&TurnActions::Single(ActionToken::new(mv.clone())))
            .expect("fixture move is legal")
    })
}

/// Deterministic observation fixtures, one per game plus one per
/// negotiation stage, each a real reachable engine state.
pub fn fixture_views() -> Vec<(String, GameId, ObservationView)> {
    let mut out = Vec::new();

    let ttt = seq(
        GameState::new_match(GameId::Tictactoe, 1),
        &[Move::Mark { col: 2, row: 2 }, Move::Mark { col: 1, row: 1 }],
    );
    out.push(("tictactoe".into(), GameId::Tictactoe, ttt.observe(0)));

    let c4 = seq(
        GameState::new_match(GameId::Connect4, 1),
        &[Move::Drop { col: 4 }, Move::Drop { col: 4 }],
    );
    out.push(("connect4".into(), GameId::Connect4, c4.observe(0)));

    let bt = seq(
        GameState::new_match(GameId::Breakthrough, 1),
        &[
            Move::Push {
                from_col: 2,
                from_row: 2,
                to_col: 2,
                to_row: 3,
                capture: false,
            },
            Move::Push {
                from_col: 2,
                from_row: 7,
                to_col: 2,
                to_row: 6,
                capture: false,
            },
        ],
    );
    out.push(("breakthrough".into(), GameId::Breakthrough, bt.observe(0)));

    let kuhn = seq(GameState::new_match(GameId::Kuhn, 5), &[Move::Pass]);
    out.push(("kuhn".into(), GameId::Kuhn, kuhn.observe(1)));

    let dice = seq(
        GameState::new_match(GameId::LiarsDice, 3),
        &[Move::Bid {
            quantity: 1,
            face: 3,
        }],
    );
    out.push(("liars_dice".into(), GameId::LiarsDice, dice.observe(1)));

    let auction = GameState::new_match(GameId::Auction, 4);
    out.push(("auction".into(), GameId::Auction, auction.observe(0)));

    let negotiation = seq(
        GameState::new_match(GameId::Negotiation, 11),
        &[Move::Proposal([1, 0, 1]), Move::Utterance([1, 0, 1])],
    );
    out.push((
        "negotiation_proposal".into(),
        GameId::Negotiation,
        negotiation.observe(1),
    ));
    let negotiation_utt = seq(
        GameState::new_match(GameId::Negotiation, 11),
        &[Move::Proposal([1, 0, 1])],
    );
    out.push((
        "negotiation_utterance".into(),
        GameId::Negotiation,
        negotiation_utt.observe(0),
    ));

    let nim = seq(
        GameState::new_match(GameId::Nim, 1),
        &[Move::Take { pile: 2, count: 2 }],
    );
    out.push(("nim".into(), GameId::Nim, nim.observe(1)));

    // Mid-game Pig scores exercise all three score variables.
    let pig_state = GameState::new_match(GameId::Pig, 7)
        .with_position(Position::Pig(pig::Score::with_scores([40, 55], 12, 0)));
    out.push(("pig".into(), GameId::Pig, pig_state.observe(0)));

    let ipd = GameState::new_match(GameId::PrisonersDilemma, 1)
        .apply(&TurnActions::Joint([
            ActionToken::new(Move::Silent),
            ActionToken::new(Move::Testify),
        ]))
        .expect("legal joint")
        .apply(&TurnActions::Joint([
            ActionToken::new(Move::Testify),
            ActionToken::new(Move::Testify),
        ]))
        .expect("legal joint");
    out.push((
        "prisoners_dilemma".into(),
        GameId::PrisonersDilemma,
        ipd.observe(0),
    ));

    out
}

fn marker(label: &str, style: ReasoningStyle) -> String {
    format!("=== {} {} ===", label, style.key())
}

/// Render the full golden document: every fixture under every reasoning
/// style, each section carrying the assembled prompt text.
pub fn render_all() -> String {
    let mut doc = String::new();
    for (label, game, view) in fixture_views() {
        for style in ReasoningStyle::ALL {
            let bundle = compose(game, &view, style).expect("fixtures carry all variables");
            doc.push_str(&marker(&label, style));
            doc.push('\n');
            doc.push_str(&bundle.as_text());
            doc.push('\n');
        }
    }
    doc
}

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error("golden document is stale: regenerate with `arena validate-prompts --write`\nfirst differing section: {section}")]
    Stale { section: String },
    #[error("golden document is empty: generate it with `arena validate-prompts --write`")]
    Empty,
}

/// Byte-compare freshly composed prompts against the embedded goldens.
/// Returns the number of sections checked.
pub fn validate() -> Result<usize, GoldenError> {
    let expected = embedded();
    if expected.trim().is_empty() {
        return Err(GoldenError::Empty);
    }
    let actual = render_all();
    if expected == actual {
        return Ok(fixture_views().len() * ReasoningStyle::ALL.len());
    }
    // Locate the first differing section for the diagnostic.
    let section = actual
        .split("=== ")
        .zip(expected.split("=== "))
        .find(|(a, e)| a != e)
        .map(|(a, _)| a.lines().next().unwrap_or("").to_string())
        .unwrap_or_else(|| "<section count differs>".to_string());
    Err(GoldenError::Stale { section })
}
