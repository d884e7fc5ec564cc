use thiserror::Error;

/// Errors raised by parsing, construction and the analysis entry points.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown generator '{letter}'{}", location_suffix(*.line, *.column))]
    UnknownLetter {
        letter: char,
        line: usize,
        column: usize,
    },

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generator '{0}' declared twice")]
    DuplicateGenerator(char),

    #[error("'{0}' cannot be used as a generator name")]
    ReservedGenerator(char),

    #[error("invalid precedence: {0}")]
    InvalidPrecedence(String),

    #[error("relation {0} cannot be oriented")]
    UnorientableRelation(String),

    #[error("normalization exceeded the budget of {0} rewrite steps")]
    StepBudgetExceeded(usize),

    #[error("word {0} is not in normal form")]
    NotNormalForm(String),

    #[error("word represents the zero element")]
    ZeroElement,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

fn location_suffix(line: usize, column: usize) -> String {
    if line == 0 {
        String::new()
    } else {
        format!(" at line {line}, column {column}")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
