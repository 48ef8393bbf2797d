use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::ValueEnum;
use ramloci::curves::PrecisionPolicy;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    Json,
    Tsv,
}

/// An inclusive integer range written `A..B`, `A..=B` or `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<i64>);

impl FromStr for Span {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Range(s.to_string());
        let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(Span(num(a)?..=num(b)?))
            }
            None => {
                let n = num(s)?;
                Ok(Span(n..=n))
            }
        }
    }
}

/// Settings for a run, checked before any work starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub g: RangeInclusive<i64>,
    pub i: RangeInclusive<i64>,
    pub precision_cap: usize,
    pub format: Format,
    pub filter: Option<String>,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            g: ramloci::formulas::DEFAULT_G_RANGE,
            i: ramloci::formulas::DEFAULT_I_RANGE,
            precision_cap: PrecisionPolicy::DEFAULT_CAP,
            format: Format::Pretty,
            filter: None,
            jobs: 1,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let (g0, g1) = (*self.g.start(), *self.g.end());
        let (i0, i1) = (*self.i.start(), *self.i.end());
        if g0 < 1 {
            return Err(CliError::Bounds {
                name: "g",
                start: g0,
                end: g1,
                reason: "g must start at 1 or more",
            });
        }
        if g0 > g1 {
            return Err(CliError::Bounds {
                name: "g",
                start: g0,
                end: g1,
                reason: "range is empty",
            });
        }
        if i0 < 0 {
            return Err(CliError::Bounds {
                name: "i",
                start: i0,
                end: i1,
                reason: "i must start at 0 or more",
            });
        }
        if i0 > i1 {
            return Err(CliError::Bounds {
                name: "i",
                start: i0,
                end: i1,
                reason: "range is empty",
            });
        }
        if self.precision_cap == 0 {
            return Err(CliError::Usage("precision cap must be positive".into()));
        }
        if let Some(f) = &self.filter {
            glob::Pattern::new(f)?;
        }
        Ok(())
    }

    /// Whether a case name passes the filter.
    pub fn selects(&self, name: &str) -> bool {
        match &self.filter {
            None => true,
            Some(f) => glob::Pattern::new(f)
                .map(|p| p.matches(name))
                .unwrap_or(false),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("1..9".parse::<Span>().unwrap(), Span(1..=9));
        assert_eq!("1..=9".parse::<Span>().unwrap(), Span(1..=9));
        assert_eq!(" 3 ".parse::<Span>().unwrap(), Span(3..=3));
        assert_eq!("-1..2".parse::<Span>().unwrap(), Span(-1..=2));
        assert!("1..".parse::<Span>().is_err());
        assert!("a..b".parse::<Span>().is_err());
    }

    #[test]
    fn validation() {
        assert!(RunConfig::default().validate().is_ok());
        let bad_g = RunConfig {
            g: 0..=3,
            ..RunConfig::default()
        };
        assert!(matches!(
            bad_g.validate(),
            Err(CliError::Bounds { name: "g", .. })
        ));
        let (lo, hi) = (4, 2);
        let empty = RunConfig {
            i: lo..=hi,
            ..RunConfig::default()
        };
        assert!(matches!(
            empty.validate(),
            Err(CliError::Bounds { name: "i", .. })
        ));
        let pattern = RunConfig {
            filter: Some("[".into()),
            ..RunConfig::default()
        };
        assert!(matches!(pattern.validate(), Err(CliError::Pattern(_))));
    }

    #[test]
    fn filters() {
        let c = RunConfig {
            filter: Some("*_degree".into()),
            ..RunConfig::default()
        };
        assert!(c.selects("SW_degree"));
        assert!(!c.selects("identity_a"));
        assert!(RunConfig::default().selects("anything"));
    }
}
