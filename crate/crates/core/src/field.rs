//! Exact coefficient arithmetic over GF(2), GF(p) for an odd prime p < 2^31,
//! and the rationals.
//!
//! Every [`FieldElement`] carries its field, so values from different fields
//! can never be combined silently: mixed-field arithmetic panics. GF(p)
//! arithmetic reduces through 64-bit intermediates, rationals are backed by
//! arbitrary-precision integers and kept in lowest terms with a positive
//! denominator, so all computation in this crate is exact.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// A coefficient field: GF(2), GF(p) with p an odd prime below 2^31, or Q.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Field {
    Gf2,
    Gfp(u32),
    Rational,
}

/// Errors raised while constructing a field or parsing one of its elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldError {
    /// The requested prime modulus is composite, too small or too large.
    BadModulus(u64),
    /// An unrecognised field name was given.
    UnknownField(String),
    /// An element literal did not parse in the requested field.
    BadElement { field: Field, literal: String },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::BadModulus(p) => {
                write!(f, "modulus {p} is not an odd prime below 2^31")
            }
            FieldError::UnknownField(name) => write!(f, "unknown field `{name}`"),
            FieldError::BadElement { field, literal } => {
                write!(f, "`{literal}` is not an element of {field}")
            }
        }
    }
}

impl std::error::Error for FieldError {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// Constructs GF(p). Fails unless p is prime and below 2^31; p = 2 is
    /// routed to the dedicated GF(2) representation.
    pub fn gfp(p: u64) -> Result<Field, FieldError> {
        if p == 2 {
            return Ok(Field::Gf2);
        }
        if p >= 1 << 31 || !is_prime(p) {
            return Err(FieldError::BadModulus(p));
        }
        Ok(Field::Gfp(p as u32))
    }

    /// Parses a field name: `gf2`, `gf<p>` (also accepted as plain `<p>`), or
    /// `q` for the rationals.
    pub fn from_name(name: &str) -> Result<Field, FieldError> {
        let lower = name.trim().to_ascii_lowercase();
        if lower == "q" || lower == "rational" {
            return Ok(Field::Rational);
        }
        let digits = lower.strip_prefix("gf").unwrap_or(&lower);
        match digits.parse::<u64>() {
            Ok(p) => Field::gfp(p),
            Err(_) => Err(FieldError::UnknownField(name.to_string())),
        }
    }

    /// The additive identity.
    pub fn zero(&self) -> FieldElement {
        match *self {
            Field::Gf2 => FieldElement::Gf2(0),
            Field::Gfp(p) => FieldElement::Gfp { p, value: 0 },
            Field::Rational => FieldElement::Rational(BigRational::zero()),
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> FieldElement {
        match *self {
            Field::Gf2 => FieldElement::Gf2(1),
            Field::Gfp(p) => FieldElement::Gfp { p, value: 1 },
            Field::Rational => FieldElement::Rational(BigRational::one()),
        }
    }

    /// Embeds a signed integer, reducing modulo p where applicable.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        match *self {
            Field::Gf2 => FieldElement::Gf2((n.rem_euclid(2)) as u8),
            Field::Gfp(p) => FieldElement::Gfp {
                p,
                value: n.rem_euclid(p as i64) as u32,
            },
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Parses an element literal: a decimal integer, or `a/b` over Q.
    pub fn parse_element(&self, literal: &str) -> Result<FieldElement, FieldError> {
        let text = literal.trim();
        let bad = || FieldError::BadElement {
            field: *self,
            literal: literal.to_string(),
        };
        match *self {
            Field::Gf2 | Field::Gfp(_) => {
                let n: i64 = text.parse().map_err(|_| bad())?;
                Ok(self.from_i64(n))
            }
            Field::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(FieldElement::Rational(BigRational::new(num, den)))
            }
        }
    }

    /// Draws a uniformly random element; over Q, a small fraction with
    /// numerator in [-9, 9] and denominator in [1, 4].
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match *self {
            Field::Gf2 => FieldElement::Gf2(rng.gen_range(0..2u8)),
            Field::Gfp(p) => FieldElement::Gfp {
                p,
                value: rng.gen_range(0..p),
            },
            Field::Rational => {
                let num = rng.gen_range(-9i64..=9);
                let den = rng.gen_range(1i64..=4);
                FieldElement::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
        }
    }

    /// A short name for display: `gf2`, `gf7`, `q`.
    pub fn name(&self) -> String {
        match *self {
            Field::Gf2 => "gf2".to_string(),
            Field::Gfp(p) => format!("gf{p}"),
            Field::Rational => "q".to_string(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Field::Gf2 => write!(f, "GF(2)"),
            Field::Gfp(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// An element of one of the supported fields. The variant records which
/// field the value lives in; operations on elements of different fields are
/// a programming error and panic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FieldElement {
    Gf2(u8),
    Gfp { p: u32, value: u32 },
    Rational(BigRational),
}

impl FieldElement {
    /// The field this element belongs to.
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Gf2(_) => Field::Gf2,
            FieldElement::Gfp { p, .. } => Field::Gfp(*p),
            FieldElement::Rational(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Gf2(v) => *v == 0,
            FieldElement::Gfp { value, .. } => *value == 0,
            FieldElement::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Gf2(v) => *v == 1,
            FieldElement::Gfp { value, .. } => *value == 1,
            FieldElement::Rational(r) => r.is_one(),
        }
    }

    fn require_same_field(&self, other: &FieldElement, op: &str) {
        assert!(
            self.field() == other.field(),
            "cannot {op} elements of {} and {}",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.require_same_field(other, "add");
        match (self, other) {
            (FieldElement::Gf2(a), FieldElement::Gf2(b)) => FieldElement::Gf2(a ^ b),
            (FieldElement::Gfp { p, value: a }, FieldElement::Gfp { value: b, .. }) => {
                FieldElement::Gfp {
                    p: *p,
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a + b)
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.require_same_field(other, "subtract");
        match (self, other) {
            (FieldElement::Gf2(a), FieldElement::Gf2(b)) => FieldElement::Gf2(a ^ b),
            (FieldElement::Gfp { p, value: a }, FieldElement::Gfp { value: b, .. }) => {
                FieldElement::Gfp {
                    p: *p,
                    value: ((*a as u64 + (*p - *b) as u64) % *p as u64) as u32,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a - b)
            }
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.require_same_field(other, "multiply");
        match (self, other) {
            (FieldElement::Gf2(a), FieldElement::Gf2(b)) => FieldElement::Gf2(a & b),
            (FieldElement::Gfp { p, value: a }, FieldElement::Gfp { value: b, .. }) => {
                FieldElement::Gfp {
                    p: *p,
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                }
            }
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a * b)
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Gf2(a) => FieldElement::Gf2(*a),
            FieldElement::Gfp { p, value } => FieldElement::Gfp {
                p: *p,
                value: if *value == 0 { 0 } else { *p - *value },
            },
            FieldElement::Rational(a) => FieldElement::Rational(-a),
        }
    }

    /// The multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> FieldElement {
        assert!(!self.is_zero(), "zero has no multiplicative inverse");
        match self {
            FieldElement::Gf2(_) => FieldElement::Gf2(1),
            FieldElement::Gfp { p, value } => {
                // Extended Euclid on (value, p); p prime so the gcd is 1.
                let (mut r0, mut r1) = (*value as i64, *p as i64);
                let (mut s0, mut s1) = (1i64, 0i64);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                FieldElement::Gfp {
                    p: *p,
                    value: s0.rem_euclid(*p as i64) as u32,
                }
            }
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
        }
    }

    /// Field division. Panics when `other` is zero.
    pub fn div(&self, other: &FieldElement) -> FieldElement {
        self.mul(&other.inv())
    }

    /// Repeated squaring; exponent 0 gives 1 even for the zero element.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Gf2(v) => write!(f, "{v}"),
            FieldElement::Gfp { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl FieldElement {
    /// True for rationals with negative sign; GF values are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_negative(),
            _ => false,
        }
    }

    /// The absolute value; identity outside Q.
    pub fn abs(&self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.abs()),
            _ => self.clone(),
        }
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}
