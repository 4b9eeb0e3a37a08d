//! Algebra specifications and their text grammar.
//!
//! ```text
//! sl(4,R)  sl(4,C)  su(2,1)  so(3,1)  so(4,C)  sl(2,R)+so(3,1)
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A simple member of one of the supported classical families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleAlgebra {
    /// `sl(n,R)`, `n ≥ 2`.
    SlReal(usize),
    /// `sl(n,C)`, `n ≥ 2`.
    SlComplex(usize),
    /// `su(p,q)`, `p ≥ q ≥ 1`.
    Su(usize, usize),
    /// `so(p,q)`, `p ≥ q ≥ 1`, `p + q ≥ 3`.
    SoReal(usize, usize),
    /// `so(m,C)`, `m ≥ 3`.
    SoComplex(usize),
}

impl SimpleAlgebra {
    pub fn sl_real(n: usize) -> Result<Self> {
        SimpleAlgebra::SlReal(n).checked()
    }

    pub fn sl_complex(n: usize) -> Result<Self> {
        SimpleAlgebra::SlComplex(n).checked()
    }

    /// Signature arguments may be given in either order.
    pub fn su(p: usize, q: usize) -> Result<Self> {
        SimpleAlgebra::Su(p.max(q), p.min(q)).checked()
    }

    pub fn so_real(p: usize, q: usize) -> Result<Self> {
        SimpleAlgebra::SoReal(p.max(q), p.min(q)).checked()
    }

    pub fn so_complex(m: usize) -> Result<Self> {
        SimpleAlgebra::SoComplex(m).checked()
    }

    fn checked(self) -> Result<Self> {
        let ok = match self {
            SimpleAlgebra::SlReal(n) | SimpleAlgebra::SlComplex(n) => n >= 2,
            SimpleAlgebra::Su(p, q) => p >= q && q >= 1,
            SimpleAlgebra::SoReal(p, q) => p >= q && q >= 1 && p + q >= 3,
            SimpleAlgebra::SoComplex(m) => m >= 3,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnsupportedAlgebra(self.to_string()))
        }
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, SimpleAlgebra::SlComplex(_) | SimpleAlgebra::SoComplex(_))
    }

    /// Dimension of the defining representation.
    pub fn vector_dim(&self) -> usize {
        match *self {
            SimpleAlgebra::SlReal(n) | SimpleAlgebra::SlComplex(n) | SimpleAlgebra::SoComplex(n) => n,
            SimpleAlgebra::Su(p, q) | SimpleAlgebra::SoReal(p, q) => p + q,
        }
    }
}

impl fmt::Display for SimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimpleAlgebra::SlReal(n) => write!(f, "sl({n},R)"),
            SimpleAlgebra::SlComplex(n) => write!(f, "sl({n},C)"),
            SimpleAlgebra::Su(p, q) => write!(f, "su({p},{q})"),
            SimpleAlgebra::SoReal(p, q) => write!(f, "so({p},{q})"),
            SimpleAlgebra::SoComplex(m) => write!(f, "so({m},C)"),
        }
    }
}

impl FromStr for SimpleAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let token: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parse_err = |reason: &str| Error::Parse { token: token.clone(), reason: reason.to_string() };

        let open = token.find('(').ok_or_else(|| parse_err("expected `family(a,b)`"))?;
        if !token.ends_with(')') {
            return Err(parse_err("missing `)`"));
        }
        let family = &token[..open];
        let args: Vec<&str> = token[open + 1..token.len() - 1].split(',').collect();
        if args.len() != 2 {
            return Err(parse_err("expected two arguments"));
        }
        let int = |a: &str| a.parse::<usize>().map_err(|_| parse_err("expected a nonnegative integer"));
        let field = |a: &str| match a {
            "R" | "r" | "ℝ" => Some(false),
            "C" | "c" | "ℂ" => Some(true),
            _ => None,
        };

        let built = match (family, field(args[1])) {
            ("sl", Some(false)) => SimpleAlgebra::sl_real(int(args[0])?),
            ("sl", Some(true)) => SimpleAlgebra::sl_complex(int(args[0])?),
            ("so", Some(true)) => SimpleAlgebra::so_complex(int(args[0])?),
            ("so", None) => SimpleAlgebra::so_real(int(args[0])?, int(args[1])?),
            ("su", None) => SimpleAlgebra::su(int(args[0])?, int(args[1])?),
            ("sl" | "so" | "su", _) => return Err(parse_err("unexpected field or argument")),
            _ => return Err(parse_err("unknown family (expected sl, su or so)")),
        };
        built.map_err(|e| match e {
            Error::UnsupportedAlgebra(_) => parse_err("parameters out of range"),
            other => other,
        })
    }
}

/// A formal direct sum of simple members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSpec {
    summands: Vec<SimpleAlgebra>,
}

impl AlgebraSpec {
    pub fn new(summands: Vec<SimpleAlgebra>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::UnsupportedAlgebra("empty direct sum".into()));
        }
        let summands = summands.into_iter().map(SimpleAlgebra::checked).collect::<Result<_>>()?;
        Ok(AlgebraSpec { summands })
    }

    pub fn simple(member: SimpleAlgebra) -> Self {
        AlgebraSpec { summands: vec![member] }
    }

    pub fn summands(&self) -> &[SimpleAlgebra] {
        &self.summands
    }

    pub fn as_simple(&self) -> Option<SimpleAlgebra> {
        match self.summands.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    pub fn is_complex(&self) -> bool {
        self.summands.iter().all(SimpleAlgebra::is_complex)
    }
}

impl From<SimpleAlgebra> for AlgebraSpec {
    fn from(member: SimpleAlgebra) -> Self {
        AlgebraSpec::simple(member)
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let summands = s.split('+').map(str::parse).collect::<Result<Vec<SimpleAlgebra>>>()?;
        AlgebraSpec::new(summands)
    }
}

impl Serialize for AlgebraSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        assert_eq!("sl(4,R)".parse::<SimpleAlgebra>().unwrap(), SimpleAlgebra::SlReal(4));
        assert_eq!("sl(4,C)".parse::<SimpleAlgebra>().unwrap(), SimpleAlgebra::SlComplex(4));
        assert_eq!("su(2,1)".parse::<SimpleAlgebra>().unwrap(), SimpleAlgebra::Su(2, 1));
        assert_eq!("so(3,1)".parse::<SimpleAlgebra>().unwrap(), SimpleAlgebra::SoReal(3, 1));
        assert_eq!("so(4,C)".parse::<SimpleAlgebra>().unwrap(), SimpleAlgebra::SoComplex(4));
        let sum: AlgebraSpec = "sl(2,R) + so(3,1)".parse().unwrap();
        assert_eq!(sum.summands(), &[SimpleAlgebra::SlReal(2), SimpleAlgebra::SoReal(3, 1)]);
        assert_eq!(sum.to_string(), "sl(2,R)+so(3,1)");
    }

    #[test]
    fn normalizes_signature_order() {
        assert_eq!("su(1,2)".parse::<SimpleAlgebra>().unwrap(), SimpleAlgebra::Su(2, 1));
        assert_eq!(SimpleAlgebra::so_real(1, 3).unwrap(), SimpleAlgebra::SoReal(3, 1));
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        for bad in ["sl(1,R)", "su(2,0)", "so(1,1)", "so(2,C)", "sp(4,R)", "sl(4)", "so(3,x)", "", "sl(2,R)+"] {
            let err = bad.parse::<AlgebraSpec>().unwrap_err();
            assert!(matches!(err, Error::Parse { .. }), "{bad}: {err:?}");
        }
    }

    #[test]
    fn parse_error_echoes_token() {
        let err = "sl(2,R)+sq(3,1)".parse::<AlgebraSpec>().unwrap_err();
        assert!(err.to_string().contains("sq(3,1)"));
    }
}
