//! OpenAI-compatible chat-completion transport over HTTP.
//!
//! Speaks the `POST {endpoint}/chat/completions` wire shape (role-tagged
//! messages in, `choices[].message.content` out). Transient failures are
//! retried up to three attempts with bounded exponential backoff; the
//! per-request timeout doubles as the per-move wall clock.

use super::{ChatClient, GenerationParams, TransportError};
use crate::prompts::{ChatMessage, Role};
use serde::Deserialize;
use std::time::Duration;

const ATTEMPTS: u32 = 3;
const BACKOFF_BASE_MS: u64 = 500;

pub struct HttpChatClient {
    endpoint: String,
    model: String,
    api_key: Option<String>,
    client: reqwest::blocking::Client,
}

#[derive(Deserialize)]
struct Completion {
    choices: Vec<Choice>,
}

#[derive(Deserialize)]
struct Choice {
    message: Content,
}

#[derive(Deserialize)]
struct Content {
    content: String,
}

impl HttpChatClient {
    pub fn new(
        endpoint: impl Into<String>,
        model: impl Into<String>,
        api_key: Option<String>,
        timeout: Duration,
    ) -> HttpChatClient {
        HttpChatClient {
            endpoint: endpoint.into(),
            model: model.into(),
            api_key,
            client: reqwest::blocking::Client::builder()
                .timeout(timeout)
                .build()
                .expect("client construction"),
        }
    }

    fn attempt(
        &self,
        messages: &[ChatMessage],
        params: &GenerationParams,
    ) -> Result<Vec<String>, TransportError> {
        let body = serde_json::json!({
            "model": self.model,
            "messages": messages.iter().map(|m| serde_json::json!({
                "role": match m.role {
                    Role::System => "system",
                    Role::User => "user",
                    Role::Assistant => "assistant",
                },
                "content": m.content,
            })).collect::<Vec<_>>(),
            "temperature": params.temperature,
            "max_tokens": params.max_tokens,
            "n": params.num_samples,
        });
        let url = format!("{}/chat/completions", self.endpoint.trim_end_matches('/'));
        let mut request = self.client.post(&url).json(&body);
        if let Some(key) = &self.api_key {
            request = request.bearer_auth(key);
        }
        let response = request.send().map_err(|e| {
            if e.is_timeout() {
                TransportError::Timeout
            } else {
                TransportError::Network(e.to_string())
            }
        })?;
        let status = response.status();
        if status.as_u16() == 401 || status.as_u16() == 403 {
            return Err(TransportError::Auth);
        }
        if !status.is_success() {
            // Context-overflow surfaces as a 400 with a length complaint.
            if status.as_u16() == 400 {
                let text = response.text().unwrap_or_default();
                if text.contains("context") || text.contains("length") {
                    return Err(TransportError::ContextOverflow);
                }
            }
            return Err(TransportError::Http(status.as_u16()));
        }
        let completion: Completion = response
            .json()
            .map_err(|e| TransportError::Network(e.to_string()))?;
        if completion.choices.len() < params.num_samples as usize {
            return Err(TransportError::Network(format!(
                "expected {} choices, got {}",
                params.num_samples,
                completion.choices.len()
            )));
        }
        Ok(completion
            .choices
            .into_iter()
            .take(params.num_samples as usize)
            .map(|c| c.message.content)
            .collect())
    }
}

impl ChatClient for HttpChatClient {
    fn complete(
        &self,
        messages: &[ChatMessage],
        params: &GenerationParams,
    ) -> Result<Vec<String>, TransportError> {
        let mut last = TransportError::Network("unreachable".into());
        for attempt in 0..ATTEMPTS {
            match self.attempt(messages, params) {
                Ok(out) => return Ok(out),
                Err(e) if e.transient() && attempt + 1 < ATTEMPTS => {
                    std::thread::sleep(Duration::from_millis(BACKOFF_BASE_MS << attempt));
                    last = e;
                }
                Err(e) => return Err(e),
            }
        }
        Err(last)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transient_classification() {
        assert!(TransportError::Network("reset".into()).transient());
        assert!(TransportError::Http(429).transient());
        assert!(TransportError::Http(503).transient());
        assert!(!TransportError::Auth.transient());
        assert!(!TransportError::Http(400).transient());
        assert!(!TransportError::ContextOverflow.transient());
    }

    #[test]
    fn unreachable_endpoint_fails_with_network_error() {
        let client = HttpChatClient::new(
            "http://127.0.0.1:1", // nothing listens on port 1
            "test-model",
            None,
            Duration::from_millis(200),
        );
        let err = client
            .complete(
                &[ChatMessage::user("hi")],
                &GenerationParams {
                    num_samples: 1,
                    ..GenerationParams::default()
                },
            )
            .unwrap_err();
        assert!(matches!(
            err,
            TransportError::Network(_) | TransportError::Timeout
        ));
    }
}
