//! Exact rational values in lowest terms.
//!
//! Every comparison cross-multiplies in 128-bit integers; no floating
//! point is used anywhere in this crate's computational paths.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A non-negative rational p/q stored in lowest terms with q >= 1.
///
/// `0/q` canonicalizes to `0/1` and `q/q` to `1/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Result<Fraction, Error> {
        if den == 0 {
            return Err(Error::InvalidDenominator);
        }
        let g = gcd(num, den);
        Ok(Fraction {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_proper(&self) -> bool {
        self.num <= self.den
    }

    /// The mediant (a+c)/(b+d), reduced. For a <= b the result lies in
    /// [a, b], strictly inside when a < b.
    pub fn mediant(a: Fraction, b: Fraction) -> Fraction {
        let num = a.num.checked_add(b.num).expect("mediant numerator overflow");
        let den = a.den.checked_add(b.den).expect("mediant denominator overflow");
        Fraction::new(num, den).expect("nonzero denominator")
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Fraction) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Fraction) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Parses the `p/q` form used on the command line.
    fn from_str(s: &str) -> Result<Fraction, Error> {
        let (p, q) = s
            .split_once('/')
            .ok_or_else(|| Error::InvalidArgument(format!("expected p/q, got {s:?}")))?;
        let num: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad numerator {p:?}")))?;
        let den: u64 = q
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad denominator {q:?}")))?;
        Fraction::new(num, den)
    }
}
