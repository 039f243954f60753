//! Exact rational arithmetic over 128-bit integers.
//!
//! Every value is kept in canonical lowest terms with a positive
//! denominator, so structural equality is numerical equality. All
//! arithmetic is overflow-checked: a result that does not fit in
//! `i128` is reported as [`RatioError::Overflow`], never wrapped.
//!
//! Besides field arithmetic, the module provides the least common
//! multiple of two positive rationals,
//! `lcm(a/b, c/d) = lcm(a, c) / gcd(b, d)` (operands in lowest terms),
//! which is the smallest positive rational that is an integer multiple
//! of both operands. Chained lcms of periods grow multiplicatively,
//! hence the insistence on checked 128-bit arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RatioError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("expected a positive value, got {0}")]
    NotPositive(String),
    #[error("malformed rational literal `{0}`")]
    Parse(String),
}

/// An exact rational number in canonical lowest terms.
///
/// Invariants: the denominator is always positive, the sign lives on
/// the numerator, `gcd(|num|, den) == 1`, and zero is stored as `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: i128,
    den: i128,
}

pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
pub const ONE: Ratio = Ratio { num: 1, den: 1 };

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

impl Ratio {
    /// Builds `num/den` reduced to canonical form. The denominator
    /// carries no sign afterwards.
    pub fn new(num: i128, den: i128) -> Result<Self, RatioError> {
        if den == 0 {
            return Err(RatioError::ZeroDenominator);
        }
        if num == 0 {
            return Ok(ZERO);
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let mut num = num / g;
        let mut den = den / g;
        if den < 0 {
            num = num.checked_neg().ok_or(RatioError::Overflow)?;
            den = den.checked_neg().ok_or(RatioError::Overflow)?;
        }
        Ok(Ratio { num, den })
    }

    pub const fn from_int(n: i128) -> Self {
        Ratio { num: n, den: 1 }
    }

    pub const fn numer(&self) -> i128 {
        self.num
    }

    pub const fn denom(&self) -> i128 {
        self.den
    }

    pub const fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub const fn is_positive(&self) -> bool {
        self.num > 0
    }

    pub const fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub const fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn try_add(self, rhs: Self) -> Result<Self, RatioError> {
        let a = self.num.checked_mul(rhs.den).ok_or(RatioError::Overflow)?;
        let b = rhs.num.checked_mul(self.den).ok_or(RatioError::Overflow)?;
        let num = a.checked_add(b).ok_or(RatioError::Overflow)?;
        let den = self.den.checked_mul(rhs.den).ok_or(RatioError::Overflow)?;
        Ratio::new(num, den)
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self, RatioError> {
        self.try_add(rhs.try_neg()?)
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self, RatioError> {
        // Cross-reduce first so intermediate products stay small.
        let g1 = gcd_u128(self.num.unsigned_abs(), rhs.den.unsigned_abs()).max(1) as i128;
        let g2 = gcd_u128(rhs.num.unsigned_abs(), self.den.unsigned_abs()).max(1) as i128;
        let num = (self.num / g1)
            .checked_mul(rhs.num / g2)
            .ok_or(RatioError::Overflow)?;
        let den = (self.den / g2)
            .checked_mul(rhs.den / g1)
            .ok_or(RatioError::Overflow)?;
        Ratio::new(num, den)
    }

    pub fn try_div(self, rhs: Self) -> Result<Self, RatioError> {
        if rhs.is_zero() {
            return Err(RatioError::DivisionByZero);
        }
        self.try_mul(rhs.try_recip()?)
    }

    pub fn try_neg(self) -> Result<Self, RatioError> {
        Ok(Ratio {
            num: self.num.checked_neg().ok_or(RatioError::Overflow)?,
            den: self.den,
        })
    }

    pub fn try_recip(self) -> Result<Self, RatioError> {
        if self.is_zero() {
            return Err(RatioError::DivisionByZero);
        }
        Ratio::new(self.den, self.num)
    }

    pub fn abs(self) -> Self {
        if self.num < 0 {
            self.try_neg().expect("abs overflow")
        } else {
            self
        }
    }

    /// Largest integer not greater than the value.
    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    /// Nearest integer, ties rounded away from zero. Falls back to
    /// `floor` (at most one off) if the half-step cannot be
    /// represented.
    pub fn round(&self) -> i128 {
        let two = Ratio::from_int(2);
        let half_up = if self.num >= 0 {
            self.try_add(ONE.try_div(two).unwrap())
        } else {
            self.try_sub(ONE.try_div(two).unwrap())
        };
        match half_up {
            Ok(r) if self.num >= 0 => r.floor(),
            Ok(r) => -(r.try_neg().unwrap().floor()),
            Err(_) => self.floor(),
        }
    }

    /// Euclidean remainder modulo a positive rational: the unique
    /// `r` in `[0, modulus)` with `self - r` an integer multiple of
    /// `modulus`.
    pub fn rem_euclid(self, modulus: Self) -> Result<Self, RatioError> {
        if !modulus.is_positive() {
            return Err(RatioError::NotPositive(modulus.to_string()));
        }
        let q = self.try_div(modulus)?.floor();
        self.try_sub(modulus.try_mul(Ratio::from_int(q))?)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Fixed-point decimal rendering with exact rounding (ties away
    /// from zero). Falls back to float formatting if the scaled
    /// numerator overflows 128 bits.
    pub fn to_decimal_string(&self, places: usize) -> String {
        let scale = 10i128.checked_pow(places.min(30) as u32);
        let scaled = scale.and_then(|s| self.num.unsigned_abs().checked_mul(s as u128));
        match (scale, scaled) {
            (Some(_), Some(scaled)) => {
                let den = self.den as u128;
                let rounded = scaled / den + u128::from(scaled % den >= den.div_ceil(2));
                let digits = format!("{rounded:0>width$}", width = places + 1);
                let (int_part, frac_part) = digits.split_at(digits.len() - places);
                let sign = if self.num < 0 { "-" } else { "" };
                if places == 0 {
                    format!("{sign}{int_part}")
                } else {
                    format!("{sign}{int_part}.{frac_part}")
                }
            }
            _ => format!("{:.*}", places, self.to_f64()),
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Ratio {
    type Err = RatioError;

    /// Accepts `num/den`, decimal strings like `29.46`, and plain
    /// integers. Exactness survives parsing:
    ///
    /// ```
    /// use conjunct_core::ratio::Ratio;
    ///
    /// let saturn: Ratio = "29.46".parse()?;
    /// assert_eq!(saturn, Ratio::new(1473, 50)?);
    /// # Ok::<(), conjunct_core::ratio::RatioError>(())
    /// ```
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let parse_err = || RatioError::Parse(s.trim().to_string());
        if t.is_empty() {
            return Err(parse_err());
        }
        if let Some((n, d)) = t.split_once('/') {
            let num: i128 = n.trim().parse().map_err(|_| parse_err())?;
            let den: i128 = d.trim().parse().map_err(|_| parse_err())?;
            return Ratio::new(num, den);
        }
        if let Some((int_part, frac_part)) = t.split_once('.') {
            let negative = int_part.starts_with('-');
            let digits = int_part.strip_prefix(['-', '+']).unwrap_or(int_part);
            if digits.is_empty()
                || frac_part.is_empty()
                || !digits.bytes().all(|b| b.is_ascii_digit())
                || !frac_part.bytes().all(|b| b.is_ascii_digit())
            {
                return Err(parse_err());
            }
            let whole: i128 = digits.parse().map_err(|_| parse_err())?;
            let frac: i128 = frac_part.parse().map_err(|_| parse_err())?;
            let den = 10i128
                .checked_pow(frac_part.len() as u32)
                .ok_or(RatioError::Overflow)?;
            let num = whole
                .checked_mul(den)
                .and_then(|w| w.checked_add(frac))
                .ok_or(RatioError::Overflow)?;
            let num = if negative { -num } else { num };
            return Ratio::new(num, den);
        }
        let num: i128 = t.parse().map_err(|_| parse_err())?;
        Ok(Ratio::from_int(num))
    }
}

impl From<i128> for Ratio {
    fn from(n: i128) -> Self {
        Ratio::from_int(n)
    }
}

impl From<i64> for Ratio {
    fn from(n: i64) -> Self {
        Ratio::from_int(n as i128)
    }
}

impl From<i32> for Ratio {
    fn from(n: i32) -> Self {
        Ratio::from_int(n as i128)
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross multiplication when it fits; otherwise compare by the
        // continued-fraction expansion, which never overflows.
        match (
            self.num.checked_mul(other.den),
            other.num.checked_mul(self.den),
        ) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => cmp_by_euclid(*self, *other),
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn cmp_by_euclid(a: Ratio, b: Ratio) -> Ordering {
    match (a.num.signum(), b.num.signum()) {
        (x, y) if x != y => return x.cmp(&y),
        (0, 0) => return Ordering::Equal,
        _ => {}
    }
    // Both strictly same sign. Compare integer parts, then recurse on
    // the reciprocals of the fractional parts (flipping the order).
    let (fa, fb) = (a.floor(), b.floor());
    if fa != fb {
        return fa.cmp(&fb);
    }
    let ra = Ratio::new(a.num.rem_euclid(a.den), a.den).unwrap();
    let rb = Ratio::new(b.num.rem_euclid(b.den), b.den).unwrap();
    match (ra.is_zero(), rb.is_zero()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        // num and den swap, so magnitudes shrink: terminates.
        (false, false) => cmp_by_euclid(rb.try_recip().unwrap(), ra.try_recip().unwrap()),
    }
}

macro_rules! panicking_binop {
    ($Op:ident, $op:ident, $try_op:ident) => {
        impl std::ops::$Op for Ratio {
            type Output = Ratio;
            fn $op(self, rhs: Ratio) -> Ratio {
                self.$try_op(rhs).expect(concat!(
                    "exact arithmetic failure in `",
                    stringify!($op),
                    "`"
                ))
            }
        }
    };
}

panicking_binop!(Add, add, try_add);
panicking_binop!(Sub, sub, try_sub);
panicking_binop!(Mul, mul, try_mul);
panicking_binop!(Div, div, try_div);

impl std::ops::Neg for Ratio {
    type Output = Ratio;
    fn neg(self) -> Ratio {
        self.try_neg().expect("negation overflow")
    }
}

/// Greatest common divisor of two integers `>= 1`.
pub fn gcd_int(a: i128, b: i128) -> Result<i128, RatioError> {
    if a < 1 || b < 1 {
        return Err(RatioError::NotPositive(format!("gcd({a}, {b})")));
    }
    Ok(gcd_u128(a as u128, b as u128) as i128)
}

/// Least common multiple of two integers `>= 1`.
pub fn lcm_int(a: i128, b: i128) -> Result<i128, RatioError> {
    let g = gcd_int(a, b)?;
    (a / g).checked_mul(b).ok_or(RatioError::Overflow)
}

/// Least common multiple of two positive rationals: the smallest
/// positive `r` such that `r/p` and `r/q` are both integers.
///
/// With `p = a/b` and `q = c/d` in lowest terms (guaranteed by the
/// canonical-form invariant), `r = lcm(a, c) / gcd(b, d)`.
///
/// ```
/// use conjunct_core::ratio::{lcm_ratio, Ratio};
///
/// let minute_hour = Ratio::new(12, 11)?;
/// let second_minute = Ratio::new(1, 59)?;
/// assert_eq!(lcm_ratio(minute_hour, second_minute)?, Ratio::from_int(12));
/// # Ok::<(), conjunct_core::ratio::RatioError>(())
/// ```
pub fn lcm_ratio(p: Ratio, q: Ratio) -> Result<Ratio, RatioError> {
    if !p.is_positive() {
        return Err(RatioError::NotPositive(p.to_string()));
    }
    if !q.is_positive() {
        return Err(RatioError::NotPositive(q.to_string()));
    }
    Ratio::new(lcm_int(p.num, q.num)?, gcd_int(p.den, q.den)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(num: i128, den: i128) -> Ratio {
        Ratio::new(num, den).unwrap()
    }

    #[test]
    fn construction_reduces_to_lowest_terms() {
        assert_eq!(r(4, 6), r(2, 3));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(r(3, -6).numer(), -1);
        assert_eq!(r(3, -6).denom(), 2);
        assert_eq!(r(0, 7), ZERO);
        assert_eq!(r(0, 7).denom(), 1);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Ratio::new(1, 0), Err(RatioError::ZeroDenominator));
    }

    #[test]
    fn field_arithmetic_is_exact() {
        // 12 * 30 / (30 - 12) = 20
        let t_j = Ratio::from_int(12);
        let t_s = Ratio::from_int(30);
        assert_eq!(t_j * t_s / (t_s - t_j), Ratio::from_int(20));
        // (1/60 * 1) / (1 - 1/60) = 1/59
        let sec = r(1, 60);
        assert_eq!(sec * ONE / (ONE - sec), r(1, 59));
        // identity
        assert_eq!(r(9, 5) * ONE, r(9, 5));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(ONE.try_div(ZERO), Err(RatioError::DivisionByZero));
        assert_eq!(ZERO.try_recip(), Err(RatioError::DivisionByZero));
    }

    #[test]
    fn overflow_is_detected_not_wrapped() {
        let big = Ratio::from_int(i128::MAX);
        assert_eq!(big.try_add(ONE), Err(RatioError::Overflow));
        assert_eq!(big.try_mul(Ratio::from_int(2)), Err(RatioError::Overflow));
    }

    #[test]
    fn gcd_lcm_int_known_values() {
        assert_eq!(lcm_int(12, 1).unwrap(), 12);
        assert_eq!(gcd_int(11, 59).unwrap(), 1);
        // 36 = 2^2 3^2, 90 = 2 3^2 5 -> lcm = 2^2 3^2 5 = 180
        assert_eq!(lcm_int(36, 90).unwrap(), 180);
        assert!(matches!(gcd_int(0, 3), Err(RatioError::NotPositive(_))));
        assert!(matches!(lcm_int(-4, 3), Err(RatioError::NotPositive(_))));
    }

    #[test]
    fn lcm_ratio_known_values() {
        assert_eq!(lcm_ratio(r(12, 11), r(1, 59)).unwrap(), Ratio::from_int(12));
        assert_eq!(
            lcm_ratio(r(36, 17), r(90, 47)).unwrap(),
            Ratio::from_int(180)
        );
        assert_eq!(
            lcm_ratio(r(59, 3), r(531, 250)).unwrap(),
            Ratio::from_int(531)
        );
        let a = r(7, 4);
        assert_eq!(lcm_ratio(a, a).unwrap(), a);
        assert!(matches!(
            lcm_ratio(ZERO, ONE),
            Err(RatioError::NotPositive(_))
        ));
        assert!(matches!(
            lcm_ratio(ONE, r(-1, 2)),
            Err(RatioError::NotPositive(_))
        ));
    }

    #[test]
    fn parse_accepts_fractions_decimals_integers() {
        assert_eq!("9/5".parse::<Ratio>().unwrap(), r(9, 5));
        assert_eq!("29.46".parse::<Ratio>().unwrap(), r(1473, 50));
        assert_eq!("11.86".parse::<Ratio>().unwrap(), r(593, 50));
        assert_eq!("-0.5".parse::<Ratio>().unwrap(), r(-1, 2));
        assert_eq!("42".parse::<Ratio>().unwrap(), Ratio::from_int(42));
        assert_eq!(" 12/11 ".parse::<Ratio>().unwrap(), r(12, 11));
        assert_eq!("3/-6".parse::<Ratio>().unwrap(), r(-1, 2));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in ["", "x", "1/0", "1.2.3", ".5", "5.", "1/ /2", "--3"] {
            assert!(bad.parse::<Ratio>().is_err(), "accepted {bad:?}");
        }
        assert_eq!("1/0".parse::<Ratio>(), Err(RatioError::ZeroDenominator));
    }

    #[test]
    fn display_matches_literal_format() {
        assert_eq!(r(12, 11).to_string(), "12/11");
        assert_eq!(Ratio::from_int(20).to_string(), "20");
        assert_eq!(r(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn decimal_string_rounds_exactly() {
        assert_eq!(Ratio::from_int(20).to_decimal_string(2), "20.00");
        assert_eq!(r(12, 11).to_decimal_string(4), "1.0909");
        assert_eq!(r(1, 3).to_decimal_string(2), "0.33");
        assert_eq!(r(2, 3).to_decimal_string(2), "0.67");
        assert_eq!(r(-1, 8).to_decimal_string(2), "-0.13");
        assert_eq!(r(873489, 44000).to_decimal_string(2), "19.85");
    }

    #[test]
    fn ordering_is_exact_even_when_cross_products_overflow() {
        let huge = Ratio::new(i128::MAX - 1, 3).unwrap();
        let huger = Ratio::new(i128::MAX, 3).unwrap();
        assert!(huge < huger);
        assert!(r(1, 3) < r(1, 2));
        assert!(r(-1, 2) < r(1, 1_000_000));
        let a = Ratio::new(i128::MAX, i128::MAX - 2).unwrap();
        let b = Ratio::new(i128::MAX - 1, i128::MAX - 3).unwrap();
        // a = 1 + 2/(MAX-2), b = 1 + 2/(MAX-3): b is larger.
        assert_eq!(a.cmp(&b), Ordering::Less);
    }

    #[test]
    fn rem_euclid_wraps_into_range() {
        let full = Ratio::from_int(360);
        assert_eq!(r(720, 1).rem_euclid(full).unwrap(), ZERO);
        assert_eq!(r(4320, 11).rem_euclid(full).unwrap(), r(360, 11));
        assert_eq!(r(-30, 1).rem_euclid(full).unwrap(), Ratio::from_int(330));
    }

    #[test]
    fn floor_and_round() {
        assert_eq!(r(7, 2).floor(), 3);
        assert_eq!(r(-7, 2).floor(), -4);
        assert_eq!(r(7, 2).round(), 4);
        assert_eq!(r(-7, 2).round(), -4);
        assert_eq!(r(397, 20).round(), 20); // 19.85
    }
}
