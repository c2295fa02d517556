//! Run-time field selection.

use std::fmt;
use std::str::FromStr;

use binedge_core::homology::RankField;
use binedge_core::poly::{Field, Fp, Rational, DEFAULT_PRIME};

use crate::CliError;

/// Coefficient field of a run: exact rationals or `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FieldChoice {
    #[default]
    Rational,
    Prime(u32),
}

impl FieldChoice {
    pub const DEFAULT_PRIME_FIELD: FieldChoice = FieldChoice::Prime(DEFAULT_PRIME);

    pub fn label(self) -> String {
        match self {
            FieldChoice::Rational => Rational::label(()),
            FieldChoice::Prime(p) => Fp::label(p),
        }
    }

    /// The field used for homology ranks.
    pub fn rank_field(self) -> RankField {
        match self {
            FieldChoice::Rational => RankField::Rational,
            FieldChoice::Prime(p) => RankField::Prime(p),
        }
    }
}

impl FromStr for FieldChoice {
    type Err = CliError;

    /// `q` for the rationals, `gf:<p>` for a prime field.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim().to_ascii_lowercase();
        if matches!(s.as_str(), "q" | "qq") {
            return Ok(FieldChoice::Rational);
        }
        let p = s
            .strip_prefix("gf:")
            .and_then(|p| p.parse::<u32>().ok())
            .ok_or_else(|| CliError::Usage(format!("unknown field {s:?}; use q or gf:<prime>")))?;
        Fp::check_modulus(p)?;
        Ok(FieldChoice::Prime(p))
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Runs `$body` with the type alias `$f` bound to the chosen field and
/// `$params` to its parameters.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $f:ident, $params:ident => $body:expr) => {
        match $choice {
            $crate::FieldChoice::Rational => {
                type $f = ::binedge_core::poly::Rational;
                let $params = ();
                $body
            }
            $crate::FieldChoice::Prime(p) => {
                type $f = ::binedge_core::poly::Fp;
                let $params = p;
                $body
            }
        }
    };
}
