//! Finite labeled ground sets.

use std::fmt;

use crate::error::{Error, Result};

/// A finite ground set with distinct, ordered element labels.
///
/// The label order is fixed at construction and is used for all matrix
/// indexing throughout the library.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    /// Builds a universe from element labels. Labels must be nonempty,
    /// distinct, and free of structural characters (braces, commas,
    /// parentheses, whitespace).
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidUniverse("need at least one element".into()));
        }
        for label in &labels {
            if label.is_empty() {
                return Err(Error::InvalidUniverse("empty label".into()));
            }
            if label
                .chars()
                .any(|c| c.is_whitespace() || matches!(c, '{' | '}' | ',' | '(' | ')'))
            {
                return Err(Error::InvalidUniverse(format!(
                    "label {label:?} contains a structural character"
                )));
            }
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::InvalidUniverse(format!("duplicate label {label:?}")));
            }
        }
        Ok(Universe { labels })
    }

    /// Parses the text form `{a,b,c}`. Whitespace-insensitive; labels are
    /// `[A-Za-z0-9_]+`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut p = crate::text::Parser::new(input);
        let labels = p.braced_label_list()?;
        p.finish()?;
        Universe::new(labels)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index lookup that reports unknown labels as errors.
    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Errors unless `other` is the same universe.
    pub fn check_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}
