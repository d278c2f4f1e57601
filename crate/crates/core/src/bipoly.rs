//! Bivariate forms in k[x, z] under the graded lexicographic order with
//! x > z, together with the univariate polynomials they homogenise.
//!
//! A [`Form`] is homogeneous and nonzero by construction; the zero
//! polynomial is represented by `Option::None` wherever an operation can
//! cancel. Coefficients are stored densely by z-power: index `j` holds the
//! coefficient of `x^(d-j) * z^j`, so the leading (grlex-greatest) monomial
//! of a form is the first nonzero entry and arithmetic scans contiguous
//! windows.
//!
//! Division here is the graded special case used throughout the crate:
//! dividing a form by a monic form whose leading monomial is off the z-axis
//! reduces, via dehomogenisation, to univariate long division, and the
//! remainder rehomogenises with an explicit z-padding. The remainder is
//! either zero or divisible by z and of the dividend's degree.

use std::cmp::Ordering;
use std::fmt;

use crate::field::{Field, FieldElement};

/// A parse failure for polynomial or coefficient text.
#[derive(Clone, Debug)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

/// A monomial x^a z^b.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    pub xdeg: u32,
    pub zdeg: u32,
}

impl Monomial {
    pub fn new(xdeg: u32, zdeg: u32) -> Monomial {
        Monomial { xdeg, zdeg }
    }

    pub fn total_degree(&self) -> u32 {
        self.xdeg + self.zdeg
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.xdeg <= other.xdeg && self.zdeg <= other.zdeg
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.xdeg.max(other.xdeg), self.zdeg.max(other.zdeg))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.xdeg + other.xdeg, self.zdeg + other.zdeg)
    }

    /// The quotient monomial; the caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::new(self.xdeg - other.xdeg, self.zdeg - other.zdeg)
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.xdeg.min(other.xdeg) == 0 && self.zdeg.min(other.zdeg) == 0
    }
}

/// Graded lex with x > z: compare total degree first, then x-exponent.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.xdeg.cmp(&other.xdeg))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.xdeg {
            0 => {}
            1 => parts.push("x".to_string()),
            a => parts.push(format!("x^{a}")),
        }
        match self.zdeg {
            0 => {}
            1 => parts.push("z".to_string()),
            b => parts.push(format!("z^{b}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A nonzero homogeneous polynomial in k[x, z].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
    degree: usize,
    /// Index `j` holds the coefficient of x^(degree-j) z^j.
    coeffs: Vec<FieldElement>,
}

impl Form {
    /// Builds a form of the given degree from coefficients listed by
    /// z-power. Returns `None` when every coefficient is zero.
    pub fn from_coeffs(degree: usize, coeffs: Vec<FieldElement>) -> Option<Form> {
        assert_eq!(coeffs.len(), degree + 1, "a degree-{degree} form needs {} coefficients", degree + 1);
        let field = coeffs[0].field();
        assert!(
            coeffs.iter().all(|c| c.field() == field),
            "form coefficients must share one field"
        );
        if coeffs.iter().all(|c| c.is_zero()) {
            return None;
        }
        Some(Form { degree, coeffs })
    }

    /// The form c * x^a z^b; `c` must be nonzero.
    pub fn term(c: FieldElement, xdeg: usize, zdeg: usize) -> Form {
        assert!(!c.is_zero(), "a term needs a nonzero coefficient");
        let field = c.field();
        let degree = xdeg + zdeg;
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[zdeg] = c;
        Form { degree, coeffs }
    }

    /// The monomial x^k as a form.
    pub fn x_power(field: Field, k: usize) -> Form {
        Form::term(field.one(), k, 0)
    }

    /// The monomial z^k as a form.
    pub fn z_power(field: Field, k: usize) -> Form {
        Form::term(field.one(), 0, k)
    }

    /// The constant form 1.
    pub fn one(field: Field) -> Form {
        Form::term(field.one(), 0, 0)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.coeffs[0].field()
    }

    /// The coefficient of x^(d-j) z^j.
    pub fn coeff_by_zpow(&self, j: usize) -> &FieldElement {
        &self.coeffs[j]
    }

    /// The coefficient of x^a z^(d-a).
    pub fn coeff_by_xpow(&self, a: usize) -> &FieldElement {
        &self.coeffs[self.degree - a]
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// The largest k with z^k dividing the form; equals the leading
    /// monomial's z-exponent.
    pub fn z_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap()
    }

    /// The grlex-greatest monomial and its coefficient.
    pub fn leading(&self) -> (Monomial, &FieldElement) {
        let j = self.z_valuation();
        (
            Monomial::new((self.degree - j) as u32, j as u32),
            &self.coeffs[j],
        )
    }

    /// The exponent of the leading monomial as an (x, z) pair.
    pub fn exponent(&self) -> (u32, u32) {
        let (m, _) = self.leading();
        (m.xdeg, m.zdeg)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().1.is_one()
    }

    /// True when the form is monic and its leading monomial is not
    /// divisible by z.
    pub fn is_phi(&self) -> bool {
        self.coeffs[0].is_one()
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Form {
        let lc = self.leading().1.clone();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.inv()).unwrap()
    }

    /// Adds two forms of equal degree; `None` when they cancel.
    pub fn add(&self, other: &Form) -> Option<Form> {
        assert_eq!(self.degree, other.degree, "can only add forms of equal degree");
        let coeffs: Vec<FieldElement> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            None
        } else {
            Some(Form {
                degree: self.degree,
                coeffs,
            })
        }
    }

    pub fn sub(&self, other: &Form) -> Option<Form> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Multiplies every coefficient by `c`; `None` when `c` is zero.
    pub fn scale(&self, c: &FieldElement) -> Option<Form> {
        if c.is_zero() {
            return None;
        }
        Some(Form {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        })
    }

    /// The product of two nonzero forms; degrees add.
    pub fn mul(&self, other: &Form) -> Form {
        let field = self.field();
        let degree = self.degree + other.degree;
        let mut coeffs = vec![field.zero(); degree + 1];
        for (j1, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j2, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[j1 + j2] = &coeffs[j1 + j2] + &(a * b);
            }
        }
        Form { degree, coeffs }
    }

    /// Multiplies by x^k: the z-power layout is unchanged apart from
    /// trailing zero padding.
    pub fn mul_x(&self, k: usize) -> Form {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat(self.field().zero()).take(k));
        Form {
            degree: self.degree + k,
            coeffs,
        }
    }

    /// Multiplies by z^k.
    pub fn mul_z(&self, k: usize) -> Form {
        let mut coeffs = vec![self.field().zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Form {
            degree: self.degree + k,
            coeffs,
        }
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Form {
        self.mul_x(m.xdeg as usize).mul_z(m.zdeg as usize)
    }

    /// Divides by z^k; the valuation must be at least k.
    pub fn div_z(&self, k: usize) -> Form {
        assert!(self.z_valuation() >= k, "form is not divisible by z^{k}");
        Form {
            degree: self.degree - k,
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Substitutes z = 1.
    pub fn dehomogenise(&self) -> UniPoly {
        let top = self.degree - self.z_valuation();
        let coeffs = (0..=top)
            .map(|a| self.coeff_by_xpow(top - a).clone())
            .collect();
        UniPoly { coeffs }
    }

    /// Divides by a monic form `g` with leading monomial off the z-axis.
    /// Returns `(quotient, remainder)` with `self = q*g + r`; when nonzero,
    /// the quotient has degree `|self| - |g|` and the remainder has degree
    /// `|self|`. For `|self| >= |g|` the remainder is divisible by z; a
    /// dividend of smaller degree is returned unchanged as the remainder.
    pub fn div_rem(&self, g: &Form) -> (Option<Form>, Option<Form>) {
        assert!(g.is_phi(), "divisor must be monic with leading monomial off the z-axis");
        if self.degree < g.degree {
            return (None, Some(self.clone()));
        }
        let (alpha, beta) = self.dehomogenise().div_rem(&g.dehomogenise());
        let quotient = if alpha.is_zero() {
            None
        } else {
            let pad = (self.degree - g.degree) - alpha.degree();
            Some(alpha.homogenise().mul_z(pad))
        };
        let remainder = if beta.is_zero() {
            None
        } else {
            let pad = self.degree - beta.degree();
            Some(beta.homogenise().mul_z(pad))
        };
        (quotient, remainder)
    }

    /// Parses canonical polynomial text such as `x^4 + x*z^3 + z^4`,
    /// rejecting non-homogeneous or zero input.
    pub fn parse(field: Field, text: &str) -> Result<Form, ParseError> {
        let terms = parse_terms(field, text)?;
        let degree = match terms.first() {
            None => return Err(ParseError("a form cannot be zero".to_string())),
            Some((m, _)) => m.total_degree() as usize,
        };
        if terms.iter().any(|(m, _)| m.total_degree() as usize != degree) {
            return Err(ParseError(format!("`{text}` is not homogeneous")));
        }
        let mut coeffs = vec![field.zero(); degree + 1];
        for (m, c) in terms {
            let j = m.zdeg as usize;
            coeffs[j] = &coeffs[j] + &c;
        }
        Form::from_coeffs(degree, coeffs).ok_or_else(|| ParseError(format!("`{text}` cancels to zero")))
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(&self.terms(), f)
    }
}

impl Form {
    /// The nonzero terms in decreasing grlex order.
    pub fn terms(&self) -> Vec<(Monomial, FieldElement)> {
        (0..=self.degree)
            .filter(|&j| !self.coeffs[j].is_zero())
            .map(|j| {
                (
                    Monomial::new((self.degree - j) as u32, j as u32),
                    self.coeffs[j].clone(),
                )
            })
            .collect()
    }
}

/// Renders a term sequence as canonical text; shared by forms, univariate
/// and general bivariate polynomials.
pub(crate) fn format_terms(terms: &[(Monomial, FieldElement)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, (m, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        if k == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mag = c.abs();
        if m.total_degree() == 0 {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{m}")?;
        } else {
            write!(f, "{mag}*{m}")?;
        }
    }
    Ok(())
}

/// Splits canonical polynomial text into monomial/coefficient pairs.
pub(crate) fn parse_terms(
    field: Field,
    text: &str,
) -> Result<Vec<(Monomial, FieldElement)>, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseError("empty polynomial text".to_string()));
    }
    if compact == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let bytes: Vec<char> = compact.chars().collect();
    let mut start = 0;
    let mut signs = vec![false]; // true = negated term
    let mut splits = Vec::new();
    for (i, &c) in bytes.iter().enumerate() {
        if i > 0 && (c == '+' || c == '-') {
            splits.push(i);
            signs.push(c == '-');
        }
    }
    splits.push(bytes.len());
    let leading_minus = bytes[0] == '-';
    if leading_minus {
        start = 1;
        signs[0] = true;
    }
    for (k, &end) in splits.iter().enumerate() {
        let chunk: String = bytes[start..end].iter().collect();
        let (m, c) = parse_single_term(field, &chunk)?;
        let c = if signs[k] { c.neg() } else { c };
        if !c.is_zero() {
            terms.push((m, c));
        }
        start = end + 1;
    }
    terms.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(terms)
}

fn parse_single_term(field: Field, chunk: &str) -> Result<(Monomial, FieldElement), ParseError> {
    if chunk.is_empty() {
        return Err(ParseError("dangling sign in polynomial text".to_string()));
    }
    let mut coeff = field.one();
    let mut xdeg = 0u32;
    let mut zdeg = 0u32;
    let mut saw_coeff = false;
    for factor in chunk.split('*') {
        if factor.is_empty() {
            return Err(ParseError(format!("empty factor in term `{chunk}`")));
        }
        let first = factor.chars().next().unwrap();
        if first == 'x' || first == 'z' {
            let exp = match factor[1..].strip_prefix('^') {
                None if factor.len() == 1 => 1u32,
                Some(digits) => digits
                    .parse()
                    .map_err(|_| ParseError(format!("bad exponent in `{factor}`")))?,
                None => return Err(ParseError(format!("bad factor `{factor}`"))),
            };
            if first == 'x' {
                xdeg += exp;
            } else {
                zdeg += exp;
            }
        } else {
            if saw_coeff {
                return Err(ParseError(format!("two coefficients in term `{chunk}`")));
            }
            saw_coeff = true;
            coeff = field
                .parse_element(factor)
                .map_err(|e| ParseError(e.to_string()))?;
        }
    }
    Ok((Monomial::new(xdeg, zdeg), coeff))
}

/// A univariate polynomial in k[x], stored by descending x-power with a
/// nonzero leading coefficient; the empty vector is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> UniPoly {
        UniPoly {
            coeffs: vec![field.one()],
        }
    }

    /// The monomial x^k.
    pub fn x_power(field: Field, k: usize) -> UniPoly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[0] = field.one();
        UniPoly { coeffs }
    }

    /// Builds from coefficients listed by descending x-power; leading zeros
    /// are trimmed.
    pub fn from_coeffs(coeffs: Vec<FieldElement>) -> UniPoly {
        let skip = coeffs.iter().position(|c| !c.is_zero());
        match skip {
            None => UniPoly::zero(),
            Some(k) => UniPoly {
                coeffs: coeffs[k..].to_vec(),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The degree; panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "the zero polynomial has no degree");
        self.coeffs.len() - 1
    }

    pub fn field(&self) -> Option<Field> {
        self.coeffs.first().map(|c| c.field())
    }

    /// The coefficient of x^a (zero beyond the degree).
    pub fn coeff(&self, a: usize) -> FieldElement {
        if self.is_zero() || a > self.degree() {
            match self.field() {
                Some(field) => field.zero(),
                None => panic!("coefficient of the bare zero polynomial has no field"),
            }
        } else {
            self.coeffs[self.degree() - a].clone()
        }
    }

    pub fn leading_coeff(&self) -> &FieldElement {
        &self.coeffs[0]
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.coeffs[0].is_one()
    }

    /// Coefficients by descending x-power.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let d = self.degree().max(other.degree());
        let field = self.coeffs[0].field();
        let coeffs = (0..=d)
            .rev()
            .map(|a| {
                let mut c = field.zero();
                if a <= self.degree() {
                    c = &c + &self.coeff(a);
                }
                if a <= other.degree() {
                    c = &c + &other.coeff(a);
                }
                c
            })
            .collect();
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        match other.field() {
            None => self.clone(),
            Some(field) => self.add(&other.scale(&field.one().neg())),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let field = self.coeffs[0].field();
        let d = self.degree() + other.degree();
        let mut coeffs = vec![field.zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Multiplies by x^k.
    pub fn mul_xpow(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let field = self.coeffs[0].field();
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat(field.zero()).take(k));
        UniPoly { coeffs }
    }

    /// Long division by a nonzero polynomial: `self = q*g + r` with `r`
    /// zero or of degree below `g`.
    pub fn div_rem(&self, g: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!g.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.degree() < g.degree() {
            return (UniPoly::zero(), self.clone());
        }
        let field = self.coeffs[0].field();
        let glc_inv = g.leading_coeff().inv();
        let mut rem = self.coeffs.clone();
        let qlen = self.degree() - g.degree() + 1;
        let mut quot = vec![field.zero(); qlen];
        for k in 0..qlen {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &glc_inv;
            for (i, gc) in g.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&q * gc);
            }
            quot[k] = q;
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Homogenises to a form of the same degree: x^a becomes x^a z^(d-a).
    pub fn homogenise(&self) -> Form {
        assert!(!self.is_zero(), "cannot homogenise the zero polynomial");
        Form {
            degree: self.degree(),
            coeffs: self.coeffs.clone(),
        }
    }

    /// Parses canonical univariate text such as `x^4 + x + 1`.
    pub fn parse(field: Field, text: &str) -> Result<UniPoly, ParseError> {
        let terms = parse_terms(field, text)?;
        let degree = terms.iter().map(|(m, _)| m.xdeg).max().unwrap_or(0) as usize;
        let mut coeffs = vec![field.zero(); degree + 1];
        for (m, c) in terms {
            if m.zdeg != 0 {
                return Err(ParseError(format!("`{text}` is not univariate in x")));
            }
            let idx = degree - m.xdeg as usize;
            coeffs[idx] = &coeffs[idx] + &c;
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    fn terms(&self) -> Vec<(Monomial, FieldElement)> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::new((d - k) as u32, 0), c.clone()))
            .collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(&self.terms(), f)
    }
}
