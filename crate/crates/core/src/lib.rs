//! Exact conjugacy-class and cycle-index statistics for the finite orthogonal
//! groups `O^±_{2n}(q)` with `q` even, together with the machinery they rest
//! on: integer partitions, arithmetic in small finite fields, truncated formal
//! power series over the rationals, unipotent class bookkeeping for `Sp` and
//! `O^±` in characteristic 2, probability measures on partitions with Markov
//! chain samplers, and a brute-force matrix-group oracle that validates every
//! formula on desk-scale groups.
//!
//! All formula paths use exact rational arithmetic; nothing is floating point.

pub mod cycleindex;
pub mod enumerate;
pub mod measures;
pub mod oracle;
pub mod orders;
pub mod partitions;
pub mod qpoly;
pub mod series;
pub mod unipotent;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the formula paths.
pub type Rat = BigRational;

/// The type `ε = ±` of a quadratic form or orthogonal group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn of_unit(v: i64) -> Sign {
        if v >= 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

/// `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `q^e` for a signed exponent, as an exact rational.
pub fn qpow(q: u64, e: i64) -> Rat {
    let p = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rat::from_integer(p)
    } else {
        Rat::new(BigInt::one(), p)
    }
}

/// `q^e` as an exact integer, `e >= 0`.
pub fn ipow(q: u64, e: u64) -> BigInt {
    BigInt::from(q).pow(e as u32)
}

/// Render a rational as `num/den` (or just `num` when the denominator is 1).
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `num/den` or a bare integer into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Half the L1 distance between two finitely supported mass functions.
pub fn total_variation<'a, I>(pairs: I) -> Rat
where
    I: IntoIterator<Item = (&'a Rat, &'a Rat)>,
{
    let mut acc = Rat::zero();
    for (a, b) in pairs {
        acc += (a - b).abs();
    }
    acc / rat(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qpow_signs() {
        assert_eq!(qpow(2, 3), rat(8));
        assert_eq!(qpow(2, -3), rat_frac(1, 8));
        assert_eq!(qpow(5, 0), rat(1));
    }

    #[test]
    fn rat_render_parse() {
        assert_eq!(rat_str(&rat_frac(3, 6)), "1/2");
        assert_eq!(rat_str(&rat(4)), "4");
        assert_eq!(parse_rat("7/2"), Some(rat_frac(7, 2)));
        assert_eq!(parse_rat("-3"), Some(rat(-3)));
        assert_eq!(parse_rat("1/0"), None);
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus.unit(), -1);
    }
}
