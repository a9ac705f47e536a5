//! Arbitrary-precision evaluation for the formulas that leave the
//! rational field: cot(π/n), arctan, and the π of the rotation solids.
//! Precision is counted in decimal digits; results carry their digit
//! budget so callers can render consistently.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};

use crate::sexagesimal::SexRational;

/// Decimal digits used when no precision is requested.
pub const DEFAULT_DIGITS: u32 = 50;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Binary precision comfortably covering the requested decimal digits.
fn bits(digits: u32) -> usize {
    (digits as usize) * 7 / 2 + 64
}

/// An approximate real carrying its decimal-digit budget.
#[derive(Debug, Clone)]
pub struct Approx {
    value: BigFloat,
    digits: u32,
}

impl Approx {
    pub(crate) fn new(value: BigFloat, digits: u32) -> Self {
        Approx { value, digits }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Nearest f64, for numeric cross-checks.
    pub fn to_f64(&self) -> f64 {
        // astro-float has no direct f64 conversion; its scientific
        // Display form parses cleanly.
        format!("{}", self.value).parse().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded to the digit budget.
    pub fn to_decimal_string(&self) -> String {
        decimal_string(&self.value, self.digits)
    }

    /// Rescales by an exact rational, e.g. for unit conversion.
    pub fn scale(&self, factor: &SexRational) -> Approx {
        let p = bits(self.digits);
        let f = to_bigfloat(factor, self.digits);
        Approx::new(self.value.mul(&f, p, RM), self.digits)
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

pub(crate) fn to_bigfloat(q: &SexRational, digits: u32) -> BigFloat {
    let p = bits(digits);
    with_consts(|cc| {
        let n = BigFloat::parse(&q.numer().to_string(), Radix::Dec, p, RM, cc);
        let d = BigFloat::parse(&q.denom().to_string(), Radix::Dec, p, RM, cc);
        n.div(&d, p, RM)
    })
}

/// cot(π/n) at the requested precision.
pub(crate) fn cot_pi_over_n(n: u32, digits: u32) -> BigFloat {
    let p = bits(digits);
    with_consts(|cc| {
        let pi = cc.pi(p, RM);
        let angle = pi.div(&BigFloat::from_u32(n, p), p, RM);
        let tan = angle.tan(p, RM, cc);
        BigFloat::from_u32(1, p).div(&tan, p, RM)
    })
}

/// arctan(1/x) converted to degrees.
pub(crate) fn arctan_reciprocal_degrees(x: &SexRational, digits: u32) -> BigFloat {
    let p = bits(digits);
    let xf = to_bigfloat(x, digits);
    with_consts(|cc| {
        let t = BigFloat::from_u32(1, p).div(&xf, p, RM);
        let radians = t.atan(p, RM, cc);
        let pi = cc.pi(p, RM);
        radians.mul(&BigFloat::from_u32(180, p), p, RM).div(&pi, p, RM)
    })
}

/// π × (exact rational), the common shape of every rotation volume.
pub(crate) fn pi_times(q: &SexRational, digits: u32) -> BigFloat {
    let p = bits(digits);
    let qf = to_bigfloat(q, digits);
    with_consts(|cc| cc.pi(p, RM).mul(&qf, p, RM))
}

/// cot(π/n) × (exact rational), the n-gon frustum shape.
pub(crate) fn cot_times(n: u32, q: &SexRational, digits: u32) -> BigFloat {
    let p = bits(digits);
    let qf = to_bigfloat(q, digits);
    cot_pi_over_n(n, digits).mul(&qf, p, RM)
}

/// Positional decimal rendering with `digits` significant digits,
/// rounded half-up, trailing zeros trimmed. Falls back to scientific
/// notation for extreme exponents.
fn decimal_string(value: &BigFloat, digits: u32) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    if value.is_nan() {
        return "NaN".to_string();
    }
    if value.is_inf() {
        return if value.is_negative() { "-inf" } else { "inf" }.to_string();
    }
    let digits = digits.max(1) as usize;
    let (sign, mantissa, exponent) = with_consts(|cc| {
        value
            .convert_to_radix(Radix::Dec, RM, cc)
            .expect("finite value converts to decimal")
    });
    let mut exponent = exponent as i64;

    // The value is 0.m[0]m[1]… × 10^exponent. Round to the digit budget.
    let mut m: Vec<u8> = mantissa;
    if m.len() > digits {
        let round_up = m[digits] >= 5;
        m.truncate(digits);
        if round_up {
            let mut i = m.len();
            loop {
                if i == 0 {
                    m.insert(0, 1);
                    exponent += 1;
                    m.truncate(digits);
                    break;
                }
                i -= 1;
                if m[i] == 9 {
                    m[i] = 0;
                } else {
                    m[i] += 1;
                    break;
                }
            }
        }
    }
    while m.len() > 1 && m.last() == Some(&0) {
        m.pop();
    }
    if m.iter().all(|&d| d == 0) {
        return "0".to_string();
    }

    let digit_str =
        |ds: &[u8]| ds.iter().map(|d| (b'0' + d) as char).collect::<String>();
    let neg = if sign == Sign::Neg { "-" } else { "" };

    let rendered = if exponent > 0 && exponent as usize <= m.len() {
        let (int_part, frac_part) = m.split_at(exponent as usize);
        if frac_part.is_empty() {
            digit_str(int_part)
        } else {
            format!("{}.{}", digit_str(int_part), digit_str(frac_part))
        }
    } else if exponent > 0 && (exponent as usize) <= digits + 4 {
        let mut whole = m.clone();
        whole.resize(exponent as usize, 0);
        digit_str(&whole)
    } else if exponent <= 0 && exponent > -8 {
        format!("0.{}{}", "0".repeat(-exponent as usize), digit_str(&m))
    } else {
        let mut s = digit_str(&m);
        if s.len() > 1 {
            s.insert(1, '.');
        }
        format!("{s}e{}", exponent - 1)
    };
    format!("{neg}{rendered}")
}
