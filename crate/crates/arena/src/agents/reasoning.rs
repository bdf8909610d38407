//! The four reasoning harnesses over a chat transport.
//!
//! Per-move completion budgets: prompt and chain-of-thought use one
//! completion, self-consistency uses `sc_trajectories` (default 5) and
//! majority-votes the parsed legal actions, deliberation generates
//! `tot_candidates` step completions then `tot_votes` vote completions
//! (defaults 3 and 3) and plays the most-voted candidate.

use super::{ChatClient, GenerationParams, TransportError};
use crate::engine::{AgentError, AgentPolicy, Decision, GameState, Player};
use crate::prompts::{
    self, compose, compose_with_reasoning, majority_vote, parse_action, parse_vote, ChatMessage,
    ParseResult, ParseStatus, PromptBundle, ReasoningStyle,
};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Harness {
    Prompt,
    Cot,
    ScCot,
    Tot,
}

impl Harness {
    pub fn key(&self) -> &'static str {
        match self {
            Harness::Prompt => "prompt",
            Harness::Cot => "cot",
            Harness::ScCot => "sc_cot",
            Harness::Tot => "tot",
        }
    }

    pub fn parse_key(s: &str) -> Option<Harness> {
        match s {
            "prompt" => Some(Harness::Prompt),
            "cot" => Some(Harness::Cot),
            "sc_cot" => Some(Harness::ScCot),
            "tot" => Some(Harness::Tot),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReasoningConfig {
    pub style: Harness,
    pub sc_trajectories: u32,
    pub tot_candidates: u32,
    pub tot_votes: u32,
    /// Optional chain-of-thought sensitivity variant (0..=4) replacing the
    /// default CoT reasoning template.
    pub cot_variant: Option<usize>,
}

impl Default for ReasoningConfig {
    fn default() -> ReasoningConfig {
        ReasoningConfig {
            style: Harness::Prompt,
            sc_trajectories: 5,
            tot_candidates: 3,
            tot_votes: 3,
            cot_variant: None,
        }
    }
}

fn transport_to_agent(e: TransportError) -> AgentError {
    match e {
        TransportError::Timeout => AgentError::Timeout,
        other => AgentError::Transport(other.to_string()),
    }
}

fn failure_name(status: ParseStatus) -> Option<String> {
    match status {
        ParseStatus::Ok => None,
        ParseStatus::NoActionFound => Some("no_action_found".into()),
        ParseStatus::Malformed => Some("malformed".into()),
        ParseStatus::Illegal => Some("illegal".into()),
    }
}

fn decision_from_parse(result: ParseResult, prompt: String) -> Decision {
    Decision {
        failure: failure_name(result.status),
        action: if result.status == ParseStatus::Ok || result.status == ParseStatus::Illegal {
            result.action
        } else {
            None
        },
        prompt: Some(prompt),
        generation: Some(result.raw),
    }
}

/// Direct prompting: one completion, parsed for the action.
pub fn prompt_agent_act(
    state: &GameState,
    player: Player,
    client: &dyn ChatClient,
    params: &GenerationParams,
) -> Result<Decision, AgentError> {
    single_completion_act(state, player, client, params, ReasoningStyle::Prompt, None)
}

/// Chain-of-thought: one step-by-step completion, parsed for the Action
/// block (last bracketed token wins).
pub fn cot_agent_act(
    state: &GameState,
    player: Player,
    client: &dyn ChatClient,
    params: &GenerationParams,
    variant: Option<usize>,
) -> Result<Decision, AgentError> {
    single_completion_act(state, player, client, params, ReasoningStyle::Cot, variant)
}

fn compose_bundle(
    state: &GameState,
    player: Player,
    style: ReasoningStyle,
    variant: Option<usize>,
) -> PromptBundle {
    let view = state.observe(player);
    match variant.and_then(prompts::cot_variant_template) {
        Some(reasoning) => compose_with_reasoning(state.game(), &view, reasoning),
        None => compose(state.game(), &view, style),
    }
    .expect("engine views carry every template variable")
}

fn single_completion_act(
    state: &GameState,
    player: Player,
    client: &dyn ChatClient,
    params: &GenerationParams,
    style: ReasoningStyle,
    variant: Option<usize>,
) -> Result<Decision, AgentError> {
    let bundle = compose_bundle(state, player, style, variant);
    let completions = client
        .complete(
            &bundle.assembled,
            &GenerationParams {
                num_samples: 1,
                ..params.clone()
            },
        )
        .map_err(transport_to_agent)?;
    let result = parse_action(state, player, &completions[0]);
    Ok(decision_from_parse(result, bundle.as_text()))
}

/// Self-consistent chain-of-thought: `sc_trajectories` samples, majority
/// vote over the legal parses; trajectories that fail to parse (or parse to
/// illegal actions) are excluded from the vote.
pub fn sc_cot_agent_act(
    state: &GameState,
    player: Player,
    client: &dyn ChatClient,
    params: &GenerationParams,
    config: &ReasoningConfig,
) -> Result<Decision, AgentError> {
    let bundle = compose_bundle(state, player, ReasoningStyle::ScCot, config.cot_variant);
    let completions = client
        .complete(
            &bundle.assembled,
            &GenerationParams {
                num_samples: config.sc_trajectories.max(1),
                ..params.clone()
            },
        )
        .map_err(transport_to_agent)?;
    let mut legal_votes = Vec::new();
    for text in &completions {
        let parsed = parse_action(state, player, text);
        if parsed.ok() {
            legal_votes.push(parsed.action.expect("ok carries an action"));
        }
    }
    let generation = completions.join("\n---\n");
    match majority_vote(&legal_votes) {
        Ok(action) => Ok(Decision {
            action: Some(action),
            failure: None,
            prompt: Some(bundle.as_text()),
            generation: Some(generation),
        }),
        Err(_) => Ok(Decision {
            action: None,
            failure: Some("no_action_found".into()),
            prompt: Some(bundle.as_text()),
            generation: Some(generation),
        }),
    }
}

/// Deliberation (generate then vote): `tot_candidates` step completions,
/// then `tot_votes` vote completions over the numbered candidates; votes for
/// candidates that did not parse to a legal action are skipped, zero
/// surviving votes fall back to the first legal candidate.
pub fn tot_agent_act(
    state: &GameState,
    player: Player,
    client: &dyn ChatClient,
    params: &GenerationParams,
    config: &ReasoningConfig,
) -> Result<Decision, AgentError> {
    let step_bundle = compose_bundle(state, player, ReasoningStyle::TotStep, None);
    let candidates = client
        .complete(
            &step_bundle.assembled,
            &GenerationParams {
                num_samples: config.tot_candidates.max(1),
                ..params.clone()
            },
        )
        .map_err(transport_to_agent)?;

    let parsed: Vec<ParseResult> = candidates
        .iter()
        .map(|text| parse_action(state, player, text))
        .collect();

    let vote_bundle = {
        let mut content = prompts::reasoning_template(ReasoningStyle::TotVote).to_string();
        for (i, candidate) in candidates.iter().enumerate() {
            content.push_str(&format!("\n\nChoice {}:\n{}", i + 1, candidate));
        }
        vec![
            ChatMessage::system(prompts::system_template()),
            ChatMessage::user(content),
        ]
    };
    let votes = client
        .complete(
            &vote_bundle,
            &GenerationParams {
                num_samples: config.tot_votes.max(1),
                ..params.clone()
            },
        )
        .map_err(transport_to_agent)?;

    let mut tally = vec![0u32; candidates.len()];
    for vote in &votes {
        if let Some(idx) = parse_vote(vote, candidates.len()) {
            if parsed[idx].ok() {
                tally[idx] += 1;
            }
        }
    }
    let winner = tally
        .iter()
        .enumerate()
        .filter(|(_, n)| **n > 0)
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(i, _)| i)
        .or_else(|| parsed.iter().position(|p| p.ok()));

    let generation = format!(
        "{}\n=== votes ===\n{}",
        candidates.join("\n---\n"),
        votes.join("\n---\n")
    );
    match winner {
        Some(idx) => Ok(Decision {
            action: parsed[idx].action.clone(),
            failure: None,
            prompt: Some(step_bundle.as_text()),
            generation: Some(generation),
        }),
        None => Ok(Decision {
            action: None,
            failure: Some("no_action_found".into()),
            prompt: Some(step_bundle.as_text()),
            generation: Some(generation),
        }),
    }
}

/// An LLM-backed seat: reasoning harness + transport + sampling parameters.
pub struct LlmAgent {
    id: String,
    client: Arc<dyn ChatClient>,
    params: GenerationParams,
    config: ReasoningConfig,
}

impl LlmAgent {
    pub fn new(
        id: impl Into<String>,
        client: Arc<dyn ChatClient>,
        params: GenerationParams,
        config: ReasoningConfig,
    ) -> LlmAgent {
        LlmAgent {
            id: id.into(),
            client,
            params,
            config,
        }
    }
}

impl AgentPolicy for LlmAgent {
    fn id(&self) -> &str {
        &self.id
    }

    fn act(&mut self, state: &GameState, player: Player) -> Result<Decision, AgentError> {
        match self.config.style {
            Harness::Prompt => prompt_agent_act(state, player, &*self.client, &self.params),
            Harness::Cot => cot_agent_act(
                state,
                player,
                &*self.client,
                &self.params,
                self.config.cot_variant,
            ),
            Harness::ScCot => {
                sc_cot_agent_act(state, player, &*self.client, &self.params, &self.config)
            }
            Harness::Tot => {
                tot_agent_act(state, player, &*self.client, &self.params, &self.config)
            }
        }
    }
}
