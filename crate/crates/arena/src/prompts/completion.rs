//! Completion-rate accounting for the valid-match protocol.

/// Result of consuming a validity stream toward a target of valid matches.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompletionOutcome {
    /// `target / attempts` when the target was reached, else
    /// `valid / attempts` (the attempt stream ran dry).
    pub rate: f64,
    pub attempts: usize,
    pub valid: usize,
    pub reached_target: bool,
}

/// Consume validity flags until `target` valid matches have accumulated and
/// report `target / N` where `N` is the number of attempts. If the stream
/// ends early the outcome carries the attempted counts instead.
pub fn completion_rate(
    flags: impl IntoIterator<Item = bool>,
    target: usize,
) -> CompletionOutcome {
    let mut attempts = 0;
    let mut valid = 0;
    for flag in flags {
        attempts += 1;
        if flag {
            valid += 1;
            if valid == target {
                break;
            }
        }
    }
    CompletionOutcome {
        rate: if attempts == 0 {
            0.0
        } else {
            valid as f64 / attempts as f64
        },
        attempts,
        valid,
        reached_target: valid == target && target > 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_valid_is_perfect() {
        let out = completion_rate(std::iter::repeat(true).take(60), 50);
        assert_eq!(out.rate, 1.0);
        assert_eq!(out.attempts, 50);
        assert!(out.reached_target);
    }

    #[test]
    fn five_retries_out_of_fifty_five() {
        let mut flags = vec![true; 55];
        for i in [3, 10, 20, 30, 40] {
            flags[i] = false;
        }
        let out = completion_rate(flags, 50);
        assert_eq!(out.attempts, 55);
        assert_eq!(out.rate, 50.0 / 55.0);
        assert!(out.reached_target);
    }

    #[test]
    fn exhausted_stream_reports_attempted_counts() {
        let out = completion_rate(vec![true, false, true], 50);
        assert!(!out.reached_target);
        assert_eq!(out.attempts, 3);
        assert_eq!(out.valid, 2);
        assert_eq!(out.rate, 2.0 / 3.0);
    }

    #[test]
    fn stops_consuming_once_the_target_is_met() {
        let mut pulled = 0;
        let flags = std::iter::from_fn(|| {
            pulled += 1;
            Some(true)
        })
        .take(1000);
        let out = completion_rate(flags, 50);
        assert_eq!(out.attempts, 50);
        assert_eq!(pulled, 50);
    }
}
