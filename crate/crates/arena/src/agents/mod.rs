//! LLM-backed policies: a pluggable chat-completion transport plus the four
//! reasoning harnesses (direct prompt, chain-of-thought, self-consistent
//! chain-of-thought, and generate-then-vote deliberation).

pub mod http;
pub mod reasoning;
pub mod scripted;

pub use http::HttpChatClient;
pub use reasoning::{LlmAgent, ReasoningConfig};
pub use scripted::ScriptedClient;

use crate::prompts::ChatMessage;

/// Sampling parameters sent on the wire. Defaults follow the evaluation
/// protocol: temperature 0.2, 1024 max tokens, one sample.
#[derive(Clone, Debug, PartialEq)]
pub struct GenerationParams {
    pub temperature: f64,
    pub max_tokens: u32,
    pub num_samples: u32,
}

impl Default for GenerationParams {
    fn default() -> GenerationParams {
        GenerationParams {
            temperature: 0.2,
            max_tokens: 1024,
            num_samples: 1,
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum TransportError {
    #[error("network: {0}")]
    Network(String),
    #[error("authentication rejected")]
    Auth,
    #[error("context window exceeded")]
    ContextOverflow,
    #[error("http status {0}")]
    Http(u16),
    #[error("script exhausted")]
    ScriptExhausted,
    #[error("request timed out")]
    Timeout,
}

impl TransportError {
    /// Transient failures are retried with bounded backoff.
    pub fn transient(&self) -> bool {
        matches!(
            self,
            TransportError::Network(_) | TransportError::Http(429) | TransportError::Http(500..)
        )
    }
}

/// A chat-completion backend. Implementations must tolerate concurrent
/// in-flight requests from parallel matches.
pub trait ChatClient: Send + Sync {
    /// Return exactly `params.num_samples` completion texts.
    fn complete(
        &self,
        messages: &[ChatMessage],
        params: &GenerationParams,
    ) -> Result<Vec<String>, TransportError>;
}

/// Test/diagnostic wrapper that records every request it forwards.
pub struct RecordingClient<C> {
    inner: C,
    pub log: std::sync::Mutex<Vec<(Vec<ChatMessage>, GenerationParams)>>,
}

impl<C> RecordingClient<C> {
    pub fn new(inner: C) -> RecordingClient<C> {
        RecordingClient {
            inner,
            log: std::sync::Mutex::new(Vec::new()),
        }
    }

    /// Total completions handed out (sum of `num_samples` over requests).
    pub fn completions_served(&self) -> u32 {
        self.log
            .lock()
            .unwrap()
            .iter()
            .map(|(_, p)| p.num_samples)
            .sum()
    }
}

impl<C: ChatClient> ChatClient for RecordingClient<C> {
    fn complete(
        &self,
        messages: &[ChatMessage],
        params: &GenerationParams,
    ) -> Result<Vec<String>, TransportError> {
        self.log
            .lock()
            .unwrap()
            .push((messages.to_vec(), params.clone()));
        self.inner.complete(messages, params)
    }
}
