use ramloci::curves::CurveError;
use ramloci::formulas::FormulaError;
use ramloci::numeric::NumericError;
use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INCONCLUSIVE: i32 = 3;
}

/// Code for malformed command lines rejected by the argument parser.
pub const ARGUMENT_ERROR: &str = "E200";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error("invalid range {0:?}: expected N, A..B or A..=B")]
    Range(String),
    #[error("invalid range {name} {start}..{end}: {reason}")]
    Bounds {
        name: &'static str,
        start: i64,
        end: i64,
        reason: &'static str,
    },
    #[error("invalid filter pattern: {0}")]
    Pattern(#[from] glob::PatternError),
    #[error("filter {0:?} matches no case")]
    EmptyFilter(String),
    #[error("invalid place {0:?}: expected inf, X or X,Y with rational coordinates")]
    Place(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn syntax(column: usize, message: impl Into<String>) -> Self {
        CliError::Syntax {
            column,
            message: message.into(),
        }
    }

    /// Stable identifier printed with every error.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "E101",
            CliError::Curve(e) => match e {
                CurveError::EvenDegree(_) => "E102",
                CurveError::DegreeTooSmall(_) => "E103",
                CurveError::NotMonic => "E104",
                CurveError::NotSquarefree => "E105",
                CurveError::NotSplit => "E106",
                CurveError::NotOnCurve(_) => "E107",
                CurveError::UnsupportedModel(_) => "E108",
                CurveError::Inconclusive { .. } => "E301",
                CurveError::Numeric(
                    NumericError::PrecisionExhausted { .. }
                    | NumericError::UndeterminedValuation { .. },
                ) => "E302",
                CurveError::Numeric(_) => "E303",
                CurveError::DegenerateWronskian => "E401",
                CurveError::Inconsistent(_) => "E402",
            },
            CliError::Formula(FormulaError::InsufficientGrid { .. }) => "E201",
            CliError::Formula(FormulaError::InvalidGrid { .. }) => "E202",
            CliError::Range(_) => "E203",
            CliError::Bounds { .. } => "E204",
            CliError::Pattern(_) => "E205",
            CliError::EmptyFilter(_) => "E206",
            CliError::Place(_) => "E207",
            CliError::Usage(_) => "E208",
            CliError::Io(_) => "E501",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.code().as_bytes()[1] {
            b'1' | b'2' => exit::USAGE,
            b'3' => exit::INCONCLUSIVE,
            _ => exit::FAILURE,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_map_to_exit_statuses() {
        assert_eq!(CliError::syntax(1, "x").exit_code(), exit::USAGE);
        assert_eq!(
            CliError::Curve(CurveError::Inconclusive { cap: 8 }).exit_code(),
            exit::INCONCLUSIVE
        );
        assert_eq!(
            CliError::Curve(CurveError::DegenerateWronskian).exit_code(),
            exit::FAILURE
        );
        assert_eq!(CliError::Range("..".into()).exit_code(), exit::USAGE);
        let all = [
            CliError::syntax(1, ""),
            CliError::Curve(CurveError::EvenDegree(4)),
            CliError::Curve(CurveError::DegreeTooSmall(1)),
            CliError::Curve(CurveError::NotMonic),
            CliError::Curve(CurveError::NotSquarefree),
            CliError::Curve(CurveError::NotSplit),
            CliError::Curve(CurveError::NotOnCurve(String::new())),
            CliError::Curve(CurveError::UnsupportedModel(String::new())),
            CliError::Curve(CurveError::Inconclusive { cap: 1 }),
            CliError::Curve(CurveError::Numeric(NumericError::UnboundedPrecision)),
            CliError::Curve(CurveError::DegenerateWronskian),
            CliError::Curve(CurveError::Inconsistent(String::new())),
            CliError::Range(String::new()),
            CliError::EmptyFilter(String::new()),
            CliError::Place(String::new()),
            CliError::Usage(String::new()),
        ];
        let mut codes: Vec<_> = all.iter().map(CliError::code).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), all.len());
    }
}
