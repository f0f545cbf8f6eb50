//! Verdict records for law checks, one per (statement, instance).

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One checked law instance. A witness is present exactly when the verdict
/// is a failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub statement: String,
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl LawReport {
    pub fn pass(statement: impl Into<String>, instance: impl Into<String>) -> Self {
        LawReport {
            statement: statement.into(),
            instance: instance.into(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn fail(
        statement: impl Into<String>,
        instance: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        LawReport {
            statement: statement.into(),
            instance: instance.into(),
            verdict: Verdict::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn of_result<E: std::fmt::Display>(
        statement: impl Into<String>,
        instance: impl Into<String>,
        result: Result<(), E>,
    ) -> Self {
        match result {
            Ok(()) => Self::pass(statement, instance),
            Err(e) => Self::fail(statement, instance, e.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_lines_shape() {
        let pass = LawReport::pass("law", "instance");
        let line = serde_json::to_string(&pass).unwrap();
        assert_eq!(
            line,
            r#"{"statement":"law","instance":"instance","verdict":"pass"}"#
        );
        let fail = LawReport::fail("law", "instance", "w");
        let line = serde_json::to_string(&fail).unwrap();
        assert!(line.contains(r#""witness":"w""#));
    }
}
