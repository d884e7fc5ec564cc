use std::fmt;

use cfmonoid::catalog::{self, mn_parameter};
use cfmonoid::completion::{check_local_confluence, knuth_bendix, CompletionLimits};
use cfmonoid::{orient, Element, Presentation, RewritingSystem, Word};

use crate::{Source, Status};

const MAX_CATALOG_N: usize = 64;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Undetermined(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Input(_) => Status::InputError,
            CliError::Undetermined(_) => Status::Undetermined,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Undetermined(m) => f.write_str(m),
        }
    }
}

impl From<cfmonoid::Error> for CliError {
    fn from(e: cfmonoid::Error) -> Self {
        match e {
            cfmonoid::Error::StepBudgetExceeded(_) => CliError::Undetermined(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// The presentation named on the command line.
pub struct Loaded {
    pub presentation: Presentation,
    /// Set for `M<n>` catalog entries.
    pub mn: Option<usize>,
}

pub fn catalog_entry(name: &str) -> CliResult<catalog::CatalogEntry> {
    if let Some(n) = mn_parameter(name) {
        if n > MAX_CATALOG_N {
            return Err(CliError::Input(format!(
                "M_n is limited to n <= {MAX_CATALOG_N}"
            )));
        }
    }
    Ok(catalog::lookup(name)?)
}

pub fn load(source: &Source) -> CliResult<Loaded> {
    match (&source.catalog, &source.presentation) {
        (Some(name), None) => {
            let entry = catalog_entry(name)?;
            Ok(Loaded {
                presentation: entry.presentation,
                mn: mn_parameter(name),
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            Ok(Loaded {
                presentation: Presentation::parse(&text)?,
                mn: None,
            })
        }
        (None, None) => Err(CliError::Input(
            "an input is required: --catalog NAME or --presentation FILE".into(),
        )),
        (Some(_), Some(_)) => Err(CliError::Input(
            "--catalog and --presentation are mutually exclusive".into(),
        )),
    }
}

impl Loaded {
    /// Relations oriented by shortlex, without completion.
    pub fn oriented(&self) -> CliResult<RewritingSystem> {
        let p = &self.presentation;
        Ok(orient(p, &p.alphabet.shortlex())?)
    }

    /// A complete system for the presentation, running completion when the
    /// oriented relations are not already complete.
    pub fn complete(&self) -> CliResult<RewritingSystem> {
        let s = self.oriented()?;
        if check_local_confluence(&s).is_complete() {
            return Ok(s);
        }
        log::info!("oriented relations are not confluent; running completion");
        let p = &self.presentation;
        let outcome = knuth_bendix(p, &p.alphabet.shortlex(), CompletionLimits::default())?;
        if outcome.is_completed() {
            Ok(outcome.system().clone())
        } else {
            Err(CliError::Undetermined(
                "completion did not finish within its limits; no complete system available".into(),
            ))
        }
    }

    pub fn word(&self, text: &str) -> CliResult<Word> {
        Ok(self.presentation.alphabet.parse_word(text)?)
    }

    /// A word or the literal `0`.
    pub fn element(&self, text: &str) -> CliResult<Element> {
        Ok(self.presentation.alphabet.parse_element(text)?)
    }
}
