use thiserror::Error;

/// Everything that can go wrong while building or computing over finite
/// categorical data. Validation failures carry the full list of violations,
/// not just the first one found.
#[derive(Debug, Error)]
pub enum Error {
    #[error("validation failed:\n{0}")]
    Validation(ValidationReport),

    #[error("budget exceeded in {context}: needed {needed}, cap {cap}")]
    Budget {
        context: String,
        needed: u64,
        cap: u64,
    },

    #[error("{what} does not exist{}", at.as_ref().map(|a| format!(" at {a}")).unwrap_or_default())]
    DoesNotExist { what: String, at: Option<String> },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unresolved reference `{name}` at line {line}")]
    Reference { line: usize, name: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn budget(context: impl Into<String>, needed: u64, cap: u64) -> Self {
        Error::Budget {
            context: context.into(),
            needed,
            cap,
        }
    }

    pub fn missing(what: impl Into<String>) -> Self {
        Error::DoesNotExist {
            what: what.into(),
            at: None,
        }
    }

    pub fn missing_at(what: impl Into<String>, at: impl Into<String>) -> Self {
        Error::DoesNotExist {
            what: what.into(),
            at: Some(at.into()),
        }
    }
}

/// A single violated axiom, with enough data to reproduce the failure.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum ValidationIssue {
    UnknownObject { name: String, context: String },
    UnknownMorphism { name: String, context: String },
    DuplicateName { name: String, context: String },
    MissingIdentity { object: String },
    BadIdentityEndpoints { object: String, morphism: String },
    /// compose(g, f) was declared although cod(f) != dom(g).
    NotComposable { g: String, f: String },
    /// cod(f) = dom(g) but no composite declared.
    MissingComposite { g: String, f: String },
    /// dom/cod of the declared composite do not match the outer pair.
    CompositeEndpointsMismatch { g: String, f: String, h: String },
    IdentityLawViolation { morphism: String, composite: String },
    NonAssociativeTriple { h: String, g: String, f: String },
    TooLarge { morphisms: usize, cap: usize },
    FunctorIdentity { object: String },
    FunctorComposite { g: String, f: String },
    FunctorEndpoints { morphism: String },
    ComponentEndpoints { object: String },
    NaturalitySquare { morphism: String },
    NotFull { source: String, target: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn push(&mut self, issue: ValidationIssue) {
        self.issues.push(issue);
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(Error::Validation(self))
        }
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for issue in &self.issues {
            writeln!(f, "  - {issue:?}")?;
        }
        Ok(())
    }
}
