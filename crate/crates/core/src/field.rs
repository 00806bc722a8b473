use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The coefficient field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    /// Exact rationals; ranks come from fraction-free integer elimination.
    #[default]
    Rationals,
    /// `GF(p)` for a prime `p < 2^31`.
    Prime(u32),
}

/// The largest prime below `2^31`, used as the fast modular field.
pub const LARGE_PRIME: u32 = 2_147_483_647;

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::Range(format!("prime {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// `GF(2147483647)`.
    pub fn fast() -> Self {
        FieldSpec::Prime(LARGE_PRIME)
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` (rationals) or `gf<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        match s.strip_prefix("gf").map(str::parse::<u64>) {
            Some(Ok(p)) if p < 1 << 31 => FieldSpec::prime(p as u32),
            Some(Ok(p)) => Err(Error::Range(format!("prime {p} is not below 2^31"))),
            _ => Err(Error::Domain(format!(
                "unknown field `{s}`; expected `q` or `gf<p>`"
            ))),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_checked() {
        assert!(FieldSpec::prime(LARGE_PRIME).is_ok());
        assert!(FieldSpec::prime(2).is_ok());
        assert!(matches!(FieldSpec::prime(91), Err(Error::Domain(_))));
        assert!(matches!(FieldSpec::prime(1), Err(Error::Domain(_))));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!(FieldSpec::fast().to_string(), "gf2147483647");
        assert!("gf8".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
        assert!("gf4294967311".parse::<FieldSpec>().is_err());
    }
}
