//! The Gauss-sum invariant as a multiplicative function on connected-sum
//! expressions over a few surfaces with known values.
//!
//! Expression syntax: atoms separated by `#`.
//!
//! * `ribbon:<h>`: ribbon surface-knot whose value is `2^(h-1)`, `h >= 1`
//! * `spun-torus`: value 2
//! * `turned-spun-torus`: value 0
//! * `custom:<name>=<value>`: any surface with a chosen integer value

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SigmaAtom {
    RibbonGenus(u32),
    SpunTorus,
    TurnedSpunTorus,
    Custom { name: String, value: BigInt },
}

impl SigmaAtom {
    pub fn value(&self) -> Result<BigInt> {
        match self {
            SigmaAtom::RibbonGenus(0) => Err(Error::domain(
                "ribbon:0 has no assigned value; enter genus-0 pieces as custom:<name>=<value>",
            )),
            SigmaAtom::RibbonGenus(h) => Ok(BigInt::one() << (h - 1)),
            SigmaAtom::SpunTorus => Ok(BigInt::from(2)),
            SigmaAtom::TurnedSpunTorus => Ok(BigInt::zero()),
            SigmaAtom::Custom { value, .. } => Ok(value.clone()),
        }
    }
}

impl fmt::Display for SigmaAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaAtom::RibbonGenus(h) => write!(f, "ribbon:{h}"),
            SigmaAtom::SpunTorus => f.write_str("spun-torus"),
            SigmaAtom::TurnedSpunTorus => f.write_str("turned-spun-torus"),
            SigmaAtom::Custom { name, value } => write!(f, "custom:{name}={value}"),
        }
    }
}

impl FromStr for SigmaAtom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "spun-torus" => return Ok(SigmaAtom::SpunTorus),
            "turned-spun-torus" => return Ok(SigmaAtom::TurnedSpunTorus),
            _ => {}
        }
        if let Some(h) = s.strip_prefix("ribbon:") {
            return h
                .parse()
                .map(SigmaAtom::RibbonGenus)
                .map_err(|_| Error::structural(format!("bad ribbon genus '{h}'")));
        }
        if let Some(rest) = s.strip_prefix("custom:") {
            let (name, value) = rest
                .split_once('=')
                .ok_or_else(|| Error::structural(format!("custom atom needs name=value, got '{rest}'")))?;
            let value = value
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::structural(format!("bad custom value '{value}'")))?;
            return Ok(SigmaAtom::Custom {
                name: name.trim().to_string(),
                value,
            });
        }
        Err(Error::structural(format!("unknown atom '{s}'")))
    }
}

/// A connected sum of atoms; the empty sum is the trivial sphere.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SigmaExpression {
    pub factors: Vec<SigmaAtom>,
}

impl SigmaExpression {
    pub fn new(factors: Vec<SigmaAtom>) -> Self {
        SigmaExpression { factors }
    }
}

impl fmt::Display for SigmaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" # "))
    }
}

impl FromStr for SigmaExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(SigmaExpression::default());
        }
        s.split('#')
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(SigmaExpression::new)
    }
}

/// Product of the atom values.
pub fn sigma_value(e: &SigmaExpression) -> Result<BigInt> {
    e.factors
        .iter()
        .try_fold(BigInt::one(), |acc, a| Ok(acc * a.value()?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusPairVerdict {
    pub g: u32,
    pub with_spun: BigInt,
    pub with_turned: BigInt,
}

impl GenusPairVerdict {
    pub fn distinguished(&self) -> bool {
        self.with_spun != self.with_turned
    }

    pub fn verdict(&self) -> &'static str {
        if self.distinguished() {
            "condition (iii') fails"
        } else {
            "not distinguished"
        }
    }
}

/// Compares `G # T` with `G # T~`, where `G` is the ribbon atom `ribbon:g`.
pub fn distinguish_genus_g_pair(g: u32) -> Result<GenusPairVerdict> {
    if g == 0 {
        return Err(Error::domain("genus must be at least 1"));
    }
    let base = SigmaAtom::RibbonGenus(g);
    let spun = SigmaExpression::new(vec![base.clone(), SigmaAtom::SpunTorus]);
    let turned = SigmaExpression::new(vec![base, SigmaAtom::TurnedSpunTorus]);
    Ok(GenusPairVerdict {
        g,
        with_spun: sigma_value(&spun)?,
        with_turned: sigma_value(&turned)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> Result<BigInt> {
        sigma_value(&s.parse()?)
    }

    #[test]
    fn atom_values() {
        assert_eq!(eval("ribbon:1").unwrap(), BigInt::one());
        assert_eq!(eval("ribbon:3 # spun-torus").unwrap(), BigInt::from(8));
        assert_eq!(eval("ribbon:3 # turned-spun-torus").unwrap(), BigInt::zero());
        assert_eq!(eval("").unwrap(), BigInt::one());
        assert_eq!(eval("custom:G=3 # spun-torus").unwrap(), BigInt::from(6));
        assert!(matches!(eval("ribbon:0"), Err(Error::Domain(_))));
    }

    #[test]
    fn parse_errors() {
        for bad in ["ribbon:x", "torus", "custom:G", "custom:G=x", "ribbon:1 # # spun-torus"] {
            assert!(matches!(eval(bad), Err(Error::Structural(_))), "{bad}");
        }
    }

    #[test]
    fn order_does_not_matter() {
        let a = eval("ribbon:2 # spun-torus # custom:H=-5").unwrap();
        let b = eval("custom:H=-5 # ribbon:2 # spun-torus").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, BigInt::from(-20));
    }

    #[test]
    fn genus_pairs() {
        let v = distinguish_genus_g_pair(1).unwrap();
        assert_eq!((v.with_spun.clone(), v.with_turned.clone()), (BigInt::from(2), BigInt::zero()));
        assert_eq!(distinguish_genus_g_pair(5).unwrap().with_spun, BigInt::from(32));
        for g in 1..=10 {
            assert_eq!(distinguish_genus_g_pair(g).unwrap().verdict(), "condition (iii') fails");
        }
        assert!(distinguish_genus_g_pair(0).is_err());
    }

    #[test]
    fn display_round_trip() {
        let e: SigmaExpression = "ribbon:2 # spun-torus # turned-spun-torus # custom:G=3".parse().unwrap();
        assert_eq!(e.to_string(), "ribbon:2 # spun-torus # turned-spun-torus # custom:G=3");
        assert_eq!(e.to_string().parse::<SigmaExpression>().unwrap(), e);
    }
}
