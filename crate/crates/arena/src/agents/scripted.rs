//! Scripted playback transport for hermetic tests: one completion per line,
//! consumed in order; an exhausted queue surfaces a transport error that
//! invalidates the match.

use super::{ChatClient, GenerationParams, TransportError};
use crate::prompts::ChatMessage;
use std::collections::VecDeque;
use std::sync::Mutex;

pub struct ScriptedClient {
    queue: Mutex<VecDeque<String>>,
}

impl ScriptedClient {
    pub fn from_lines<I, S>(lines: I) -> ScriptedClient
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ScriptedClient {
            queue: Mutex::new(lines.into_iter().map(Into::into).collect()),
        }
    }

    /// Playback file: one completion per line. Literal `\n` escapes allow
    /// multi-line completions.
    pub fn from_file(path: &std::path::Path) -> std::io::Result<ScriptedClient> {
        let text = std::fs::read_to_string(path)?;
        Ok(ScriptedClient::from_lines(
            text.lines().map(|l| l.replace("\\n", "\n")),
        ))
    }

    pub fn remaining(&self) -> usize {
        self.queue.lock().unwrap().len()
    }
}

impl ChatClient for ScriptedClient {
    fn complete(
        &self,
        _messages: &[ChatMessage],
        params: &GenerationParams,
    ) -> Result<Vec<String>, TransportError> {
        let mut queue = self.queue.lock().unwrap();
        let mut out = Vec::with_capacity(params.num_samples as usize);
        for _ in 0..params.num_samples {
            out.push(queue.pop_front().ok_or(TransportError::ScriptExhausted)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32) -> GenerationParams {
        GenerationParams {
            num_samples: n,
            ..GenerationParams::default()
        }
    }

    #[test]
    fn plays_back_in_order() {
        let client = ScriptedClient::from_lines(["<Bet>", "<Pass>"]);
        assert_eq!(client.complete(&[], &params(1)).unwrap(), vec!["<Bet>"]);
        assert_eq!(client.complete(&[], &params(1)).unwrap(), vec!["<Pass>"]);
    }

    #[test]
    fn num_samples_pops_that_many() {
        let client = ScriptedClient::from_lines(["a", "b", "c", "d", "e"]);
        assert_eq!(client.complete(&[], &params(5)).unwrap().len(), 5);
        assert_eq!(client.remaining(), 0);
    }

    #[test]
    fn exhaustion_is_a_transport_error() {
        let client = ScriptedClient::from_lines(["only"]);
        assert!(matches!(
            client.complete(&[], &params(2)),
            Err(TransportError::ScriptExhausted)
        ));
    }

    #[test]
    fn file_playback_unescapes_newlines() {
        let dir = std::env::temp_dir().join("arena-scripted-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("script.txt");
        std::fs::write(&path, "Thought: hm.\\nAction:\\n<stop>\n<roll>\n").unwrap();
        let client = ScriptedClient::from_file(&path).unwrap();
        let out = client.complete(&[], &params(1)).unwrap();
        assert_eq!(out[0], "Thought: hm.\nAction:\n<stop>");
        assert_eq!(client.remaining(), 1);
    }
}
