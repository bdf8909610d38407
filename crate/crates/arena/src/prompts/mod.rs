//! Prompt adapter: composes observation views into the four-part modular
//! prompts (system, head, observation, reasoning) and extracts actions from
//! agent generations.
//!
//! Template texts are immutable embedded assets with `<variable>`
//! placeholders; reasoning templates are game-independent, so a new game
//! only needs a head and an observation template.

pub mod completion;
pub mod goldens;
pub mod parse;

pub use completion::{completion_rate, CompletionOutcome};
pub use parse::{majority_vote, parse_action, parse_vote, ParseResult, ParseStatus, VoteError};

use crate::engine::{GameId, ObservationView};

/// Message role on the chat wire.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    System,
    User,
    Assistant,
}

/// One role-tagged message of an assembled prompt.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ChatMessage {
    pub role: Role,
    pub content: String,
}

impl ChatMessage {
    pub fn system(content: impl Into<String>) -> ChatMessage {
        ChatMessage {
            role: Role::System,
            content: content.into(),
        }
    }

    pub fn user(content: impl Into<String>) -> ChatMessage {
        ChatMessage {
            role: Role::User,
            content: content.into(),
        }
    }
}

/// The reasoning harness whose template closes the prompt.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReasoningStyle {
    Prompt,
    Cot,
    ScCot,
    TotStep,
    TotVote,
}

impl ReasoningStyle {
    pub const ALL: [ReasoningStyle; 5] = [
        ReasoningStyle::Prompt,
        ReasoningStyle::Cot,
        ReasoningStyle::ScCot,
        ReasoningStyle::TotStep,
        ReasoningStyle::TotVote,
    ];

    pub fn key(&self) -> &'static str {
        match self {
            ReasoningStyle::Prompt => "prompt",
            ReasoningStyle::Cot => "cot",
            ReasoningStyle::ScCot => "sc_cot",
            ReasoningStyle::TotStep => "tot_step",
            ReasoningStyle::TotVote => "tot_vote",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PromptError {
    #[error("missing template variable {0}")]
    MissingVariable(String),
}

/// The four prompt parts plus the assembled message list
/// (system -> head -> observation -> reasoning).
#[derive(Clone, Debug, PartialEq)]
pub struct PromptBundle {
    pub system: String,
    pub head: String,
    pub observation: String,
    pub reasoning: String,
    pub assembled: Vec<ChatMessage>,
}

impl PromptBundle {
    /// Canonical single-text rendering, used for goldens and transcripts.
    pub fn as_text(&self) -> String {
        format!(
            "{}\n\n{}\n\n{}\n\n{}",
            self.system, self.head, self.observation, self.reasoning
        )
    }
}

fn asset(text: &'static str) -> &'static str {
    text.trim_end_matches('\n')
}

pub fn system_template() -> &'static str {
    asset(include_str!("../../assets/prompts/system.txt"))
}

pub fn head_template(game: GameId) -> &'static str {
    asset(match game {
        GameId::Tictactoe => include_str!("../../assets/prompts/head/tictactoe.txt"),
        GameId::Connect4 => include_str!("../../assets/prompts/head/connect4.txt"),
        GameId::Breakthrough => include_str!("../../assets/prompts/head/breakthrough.txt"),
        GameId::Kuhn => include_str!("../../assets/prompts/head/kuhn.txt"),
        GameId::LiarsDice => include_str!("../../assets/prompts/head/liars_dice.txt"),
        GameId::Auction => include_str!("../../assets/prompts/head/auction.txt"),
        GameId::Negotiation => include_str!("../../assets/prompts/head/negotiation.txt"),
        GameId::Nim => include_str!("../../assets/prompts/head/nim.txt"),
        GameId::Pig => include_str!("../../assets/prompts/head/pig.txt"),
        GameId::PrisonersDilemma => {
            include_str!("../../assets/prompts/head/prisoners_dilemma.txt")
        }
    })
}

pub fn reasoning_template(style: ReasoningStyle) -> &'static str {
    asset(match style {
        ReasoningStyle::Prompt => include_str!("../../assets/prompts/reasoning/prompt.txt"),
        ReasoningStyle::Cot => include_str!("../../assets/prompts/reasoning/cot.txt"),
        ReasoningStyle::ScCot => include_str!("../../assets/prompts/reasoning/sc_cot.txt"),
        ReasoningStyle::TotStep => include_str!("../../assets/prompts/reasoning/tot_step.txt"),
        ReasoningStyle::TotVote => include_str!("../../assets/prompts/reasoning/tot_vote.txt"),
    })
}

/// The five alternative chain-of-thought phrasings kept for sensitivity
/// studies; index 0..=4.
pub fn cot_variant_template(index: usize) -> Option<&'static str> {
    Some(asset(match index {
        0 => include_str!("../../assets/prompts/reasoning/cot_variant_0.txt"),
        1 => include_str!("../../assets/prompts/reasoning/cot_variant_1.txt"),
        2 => include_str!("../../assets/prompts/reasoning/cot_variant_2.txt"),
        3 => include_str!("../../assets/prompts/reasoning/cot_variant_3.txt"),
        4 => include_str!("../../assets/prompts/reasoning/cot_variant_4.txt"),
        _ => return None,
    }))
}

/// Observation template for one view (negotiation has one per stage).
fn observation_template(game: GameId, view: &ObservationView) -> &'static str {
    asset(match game {
        GameId::Tictactoe => include_str!("../../assets/prompts/obs/tictactoe.txt"),
        GameId::Connect4 => include_str!("../../assets/prompts/obs/connect4.txt"),
        GameId::Breakthrough => include_str!("../../assets/prompts/obs/breakthrough.txt"),
        GameId::Kuhn => include_str!("../../assets/prompts/obs/kuhn.txt"),
        GameId::LiarsDice => include_str!("../../assets/prompts/obs/liars_dice.txt"),
        GameId::Auction => include_str!("../../assets/prompts/obs/auction.txt"),
        GameId::Negotiation => {
            if view.get("turn_type") == Some("utterance") {
                include_str!("../../assets/prompts/obs/negotiation_utterance.txt")
            } else {
                include_str!("../../assets/prompts/obs/negotiation_proposal.txt")
            }
        }
        GameId::Nim => include_str!("../../assets/prompts/obs/nim.txt"),
        GameId::Pig => include_str!("../../assets/prompts/obs/pig.txt"),
        GameId::PrisonersDilemma => {
            include_str!("../../assets/prompts/obs/prisoners_dilemma.txt")
        }
    })
}

/// Placeholder names each observation template consumes, in substitution
/// order (`legal_moves` last so substituted values can never be re-expanded).
fn required_variables(game: GameId, view: &ObservationView) -> &'static [&'static str] {
    match game {
        GameId::Tictactoe | GameId::Connect4 => &["opponent_moves", "self_moves", "legal_moves"],
        GameId::Breakthrough => &[
            "board_preview",
            "opponent_moves",
            "self_moves",
            "legal_moves",
        ],
        GameId::Kuhn => &["card", "self_moves", "opponent_moves", "legal_moves"],
        GameId::LiarsDice => &["face_value", "opponent_last_action", "legal_moves"],
        GameId::Auction => &["valuation", "legal_moves"],
        GameId::Negotiation => {
            if view.get("turn_type") == Some("utterance") {
                &[
                    "agent_proposal_take[0]",
                    "agent_proposal_take[1]",
                    "agent_proposal_take[2]",
                    "opponent_utterance_take[0]",
                    "opponent_utterance_take[1]",
                    "opponent_utterance_take[2]",
                    "legal_moves",
                ]
            } else {
                &[
                    "opponent_proposal_take[0]",
                    "opponent_proposal_take[1]",
                    "opponent_proposal_take[2]",
                    "opponent_utterance_take[0]",
                    "opponent_utterance_take[1]",
                    "opponent_utterance_take[2]",
                    "legal_moves",
                ]
            }
        }
        GameId::Nim => &["piles[0]", "piles[1]", "piles[2]", "piles[3]", "legal_moves"],
        GameId::Pig => &[
            "agent_current_score",
            "opponent_current_score",
            "turn_total_score",
            "legal_moves",
        ],
        GameId::PrisonersDilemma => &["history", "legal_moves"],
    }
}

fn substitute(
    template: &str,
    game: GameId,
    view: &ObservationView,
) -> Result<String, PromptError> {
    let mut out = template.to_string();
    for name in required_variables(game, view) {
        let value = view
            .get(name)
            .ok_or_else(|| PromptError::MissingVariable(name.to_string()))?;
        out = out.replace(&format!("<{name}>"), value);
    }
    Ok(out)
}

/// Compose the full prompt for one view under one reasoning style.
/// Pure function of its inputs.
pub fn compose(
    game: GameId,
    view: &ObservationView,
    style: ReasoningStyle,
) -> Result<PromptBundle, PromptError> {
    compose_with_reasoning(game, view, reasoning_template(style))
}

/// Compose with an explicit reasoning template (used for the chain-of-
/// thought sensitivity variants).
pub fn compose_with_reasoning(
    game: GameId,
    view: &ObservationView,
    reasoning: &str,
) -> Result<PromptBundle, PromptError> {
    let system = system_template().to_string();
    let head = head_template(game).to_string();
    let observation = substitute(observation_template(game, view), game, view)?;
    let reasoning = reasoning.to_string();
    let assembled = vec![
        ChatMessage::system(system.clone()),
        ChatMessage::user(format!("{head}\n\n{observation}\n\n{reasoning}")),
    ];
    Ok(PromptBundle {
        system,
        head,
        observation,
        reasoning,
        assembled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::GameState;

    #[test]
    fn auction_observation_substitutes_the_valuation() {
        let state = GameState::new_match(GameId::Auction, 4);
        let view = state.observe(0);
        let valuation = view.get("valuation").unwrap().to_string();
        let bundle = compose(GameId::Auction, &view, ReasoningStyle::Prompt).unwrap();
        assert!(bundle.observation.contains(&format!(
            "your budget is {valuation}. Your bid must be strictly lower than or equal to {valuation}"
        )));
        assert!(bundle.observation.contains("The legal actions are: <0>, <1>"));
    }

    #[test]
    fn cot_reasoning_has_thought_and_action_blocks() {
        let state = GameState::new_match(GameId::Tictactoe, 1);
        let bundle = compose(GameId::Tictactoe, &state.observe(0), ReasoningStyle::Cot).unwrap();
        assert!(bundle.reasoning.contains("Thought:"));
        assert!(bundle.reasoning.contains("Action:"));
        assert!(bundle.reasoning.starts_with("First think about your current situation"));
    }

    #[test]
    fn missing_variable_is_an_error() {
        let view = ObservationView {
            player: 0,
            variables: Default::default(),
        };
        let err = compose(GameId::Tictactoe, &view, ReasoningStyle::Prompt).unwrap_err();
        assert!(matches!(err, PromptError::MissingVariable(v) if v == "opponent_moves"));
    }

    #[test]
    fn assembled_order_is_system_then_user() {
        let state = GameState::new_match(GameId::Pig, 1);
        let bundle = compose(GameId::Pig, &state.observe(0), ReasoningStyle::Prompt).unwrap();
        assert_eq!(bundle.assembled.len(), 2);
        assert_eq!(bundle.assembled[0].role, Role::System);
        assert_eq!(bundle.assembled[1].role, Role::User);
        let user = &bundle.assembled[1].content;
        let head_at = user.find(&bundle.head).unwrap();
        let obs_at = user.find(&bundle.observation).unwrap();
        let reasoning_at = user.find(&bundle.reasoning).unwrap();
        assert!(head_at < obs_at && obs_at < reasoning_at);
    }

    #[test]
    fn negotiation_stage_selects_the_template() {
        let state = GameState::new_match(GameId::Negotiation, 11);
        let proposal_view = state.observe(0);
        let b = compose(GameId::Negotiation, &proposal_view, ReasoningStyle::Prompt).unwrap();
        assert!(b.observation.contains("you should output Agree"));

        let state = state
            .apply(&crate::engine::TurnActions::Single(
                crate::engine::ActionToken::new(crate::engine::Move::Proposal([0, 0, 0])),
            ))
            .unwrap();
        let utterance_view = state.observe(0);
        let b = compose(GameId::Negotiation, &utterance_view, ReasoningStyle::Prompt).unwrap();
        assert!(b.observation.contains("provide your utterance"));
        assert!(b.observation.contains("Last time, you propose to take 0 peppers"));
    }

    #[test]
    fn literal_action_formats_survive_substitution() {
        // The negotiation templates mention <Proposal: [a, b, c]> literally;
        // placeholders must not touch it.
        let state = GameState::new_match(GameId::Negotiation, 11);
        let bundle = compose(GameId::Negotiation, &state.observe(0), ReasoningStyle::Prompt).unwrap();
        assert!(bundle.observation.contains("<Proposal: [a, b, c]>"));
        // Same for the reasoning templates' <format> placeholder.
        assert!(bundle.reasoning.contains("<format>"));
    }

    #[test]
    fn cot_variants_exist_and_share_the_format_block() {
        for i in 0..5 {
            let t = cot_variant_template(i).unwrap();
            assert!(t.contains("Thought:"));
            assert!(t.contains("Action:"));
        }
        assert!(cot_variant_template(5).is_none());
        assert!(cot_variant_template(1)
            .unwrap()
            .starts_with("First, think about your current situation by thinking carefully"));
    }

    #[test]
    fn compose_is_pure() {
        let state = GameState::new_match(GameId::Kuhn, 2);
        let view = state.observe(1);
        let a = compose(GameId::Kuhn, &view, ReasoningStyle::ScCot).unwrap();
        let b = compose(GameId::Kuhn, &view, ReasoningStyle::ScCot).unwrap();
        assert_eq!(a, b);
    }
}
