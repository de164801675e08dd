//! Exact rational scalar used for every criterion value.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), exp as usize)
}

/// Arbitrary-precision rational. All public criterion values use this type;
/// floating point appears nowhere in the evaluation path.
pub type Rat = num_rational::BigRational;

/// Builds `num/den` as a reduced rational. Panics if `den == 0`; callers
/// guard zero denominators (they only arise from degenerate parameter
/// combinations that are screened out beforehand).
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Exact integer as a rational.
pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// `num/den` when `num != 0`, exact zero otherwise. Lets closed-form
/// coefficient formulas skip divisions whose denominator vanishes only when
/// the numerator already does (e.g. `f(f−1)/(F(F−1))` at `F = 1`).
pub fn ratio_or_zero(num: i64, den: i64) -> Rat {
    if num == 0 {
        Rat::zero()
    } else {
        rat(num, den)
    }
}

/// Binomial coefficient as an unsigned big integer.
pub fn binomial(n: u64, k: u64) -> num_bigint::BigUint {
    num_integer::binomial(num_bigint::BigUint::from(n), num_bigint::BigUint::from(k))
}

/// Renders a rational in decimal with `sig` significant digits (round half
/// away from zero), trimming trailing zeros from the fraction part. Exact
/// zero renders as `"0"`.
pub fn decimal_string(value: &Rat, sig: usize) -> String {
    assert!(sig > 0, "need at least one significant digit");
    if value.is_zero() {
        return "0".to_string();
    }
    let negative = value.is_negative();
    let num = value.numer().abs();
    let den = value.denom().abs();

    // Scale so the integer `digits` carries `sig` significant digits: find
    // the decimal exponent e with 10^(e-1) <= num/den < 10^e, then round
    // num/den * 10^(sig - e) to the nearest integer.
    let mut exp: i64 = 0;
    let ten = BigInt::from(10);
    let mut lo = num.clone();
    let mut hi = den.clone();
    // Increase exp while value >= 10^exp, decrease while value < 10^(exp-1).
    while lo >= hi {
        hi *= &ten;
        exp += 1;
    }
    while &lo * &ten < hi {
        lo *= &ten;
        exp -= 1;
    }
    // Now 10^(exp-1) <= value < 10^exp.
    let shift = sig as i64 - exp;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num * pow10(shift as u32), den.clone())
    } else {
        (num, den * pow10((-shift) as u32))
    };
    let (q, r) = num_integer::Integer::div_rem(&scaled_num, &scaled_den);
    let mut digits = q;
    if &r * 2 >= scaled_den {
        digits += 1;
    }
    // Rounding may have pushed us to sig+1 digits (e.g. 9.99 -> 10.0).
    let mut digit_str = digits.to_string();
    if digit_str.len() > sig {
        exp += (digit_str.len() - sig) as i64;
        digit_str.truncate(sig);
    }

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp <= 0 {
        out.push_str("0.");
        for _ in 0..(-exp) {
            out.push('0');
        }
        out.push_str(digit_str.trim_end_matches('0'));
        if out.ends_with('.') {
            out.push('0');
        }
    } else if (exp as usize) >= digit_str.len() {
        out.push_str(&digit_str);
        for _ in 0..(exp as usize - digit_str.len()) {
            out.push('0');
        }
    } else {
        let (int_part, frac_part) = digit_str.split_at(exp as usize);
        out.push_str(int_part);
        let frac = frac_part.trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    }
    out
}

/// Parses a rational value from `p`, `p/q`, or a decimal string such as
/// `0.25` or `-1.5e-2`-free plain decimals (no exponents). Used by weights
/// files and command-line tolerances.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rat::new(p, q));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || frac_part.is_empty()
        {
            return None;
        }
        let digits = format!("{int_digits}{frac_part}");
        let num: BigInt = digits.parse().ok()?;
        let den = pow10(frac_part.len() as u32);
        return Some(Rat::new(BigInt::from(sign) * num, den));
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

/// Nearest `f64` to an exact rational. Presentation and tolerance checks
/// only; never feeds back into exact arithmetic.
pub fn approx_f64(value: &Rat) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_rendering_matches_reference_style() {
        assert_eq!(decimal_string(&rat(5, 36), 6), "0.138889");
        assert_eq!(decimal_string(&rat(5, 18), 6), "0.277778");
        assert_eq!(decimal_string(&rat(5, 9), 6), "0.555556");
        assert_eq!(decimal_string(&rat(10, 9), 6), "1.11111");
        assert_eq!(decimal_string(&rat(16, 9), 6), "1.77778");
        assert_eq!(decimal_string(&rat(0, 5), 6), "0");
        assert_eq!(decimal_string(&rat(-16, 9), 6), "-1.77778");
        assert_eq!(decimal_string(&rat_int(3), 6), "3");
        assert_eq!(decimal_string(&rat(1, 2), 6), "0.5");
        assert_eq!(decimal_string(&rat(1, 1000), 6), "0.001");
        assert_eq!(decimal_string(&rat(999999999, 100000000), 6), "10");
        assert_eq!(decimal_string(&rat_int(1200000), 6), "1200000");
    }

    #[test]
    fn parse_rat_accepts_integers_fractions_and_decimals() {
        assert_eq!(parse_rat("1/10"), Some(rat(1, 10)));
        assert_eq!(parse_rat("-3/4"), Some(rat(-3, 4)));
        assert_eq!(parse_rat("0.25"), Some(rat(1, 4)));
        assert_eq!(parse_rat("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rat("7"), Some(rat_int(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(parse_rat("1."), None);
    }

    #[test]
    fn ratio_or_zero_guards_vanishing_denominators() {
        assert_eq!(ratio_or_zero(0, 0), Rat::zero());
        assert_eq!(ratio_or_zero(3, 6), rat(1, 2));
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10u32.into());
        assert_eq!(binomial(11, 5), 462u32.into());
        assert_eq!(binomial(4, 0), 1u32.into());
        assert_eq!(binomial(3, 5), 0u32.into());
    }
}
