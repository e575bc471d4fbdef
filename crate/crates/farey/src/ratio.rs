//! Minimal exact signed rational for metrics and angle reporting.

use std::cmp::Ordering;
use std::fmt;

fn gcd_i(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Signed rational in lowest terms, den > 0. Magnitudes here stay far
/// below i128 cross-product range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };

    pub fn new(num: i128, den: i128) -> Ratio {
        assert!(den != 0, "ratio denominator must be nonzero");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd_i(num, den).max(1);
        Ratio {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_integer(n: i128) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn abs(&self) -> Ratio {
        Ratio {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn sub(&self, other: Ratio) -> Ratio {
        Ratio::new(self.num * other.den - other.num * self.den, self.den * other.den)
    }

    /// Decimal rendering rounded half away from zero, integer
    /// arithmetic only.
    pub fn to_decimal(&self, places: u32) -> String {
        let scale = 10i128.pow(places);
        let scaled = self.num.abs() * scale;
        let rounded = (scaled + self.den / 2) / self.den;
        let (int, frac) = (rounded / scale, rounded % scale);
        let sign = if self.num < 0 && rounded != 0 { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac:0width$}", width = places as usize)
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(Ratio::new(2, 4), Ratio::new(1, 2));
        assert_eq!(Ratio::new(1, -2), Ratio::new(-1, 2));
        assert_eq!(Ratio::new(0, 5), Ratio::ZERO);
    }

    #[test]
    fn ordering_and_sub() {
        assert!(Ratio::new(1, 3) < Ratio::new(2, 5));
        assert_eq!(Ratio::new(1, 2).sub(Ratio::new(1, 3)), Ratio::new(1, 6));
    }

    #[test]
    fn decimals() {
        assert_eq!(Ratio::new(8874000, 97856).to_decimal(2), "90.68");
        assert_eq!(Ratio::new(1, 2).to_decimal(0), "1");
        assert_eq!(Ratio::new(-1, 8).to_decimal(2), "-0.13");
    }
}
