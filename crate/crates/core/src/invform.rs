//! Inverse forms: nonzero homogeneous elements of k[x^-1, z^-1] of total
//! degree m <= 0, the module action of forms on them, and discrepancies.
//!
//! An [`InverseForm`] stores the coefficients F_i of x^i z^(m-i) for
//! m <= i <= 0. Acting with a form keeps exactly the product coefficients
//! whose monomials stay inside k[x^-1, z^-1]; everything with a positive
//! exponent is discarded. A form annihilates F when the kept window is
//! zero, and the annihilators of F make up the ideal the rest of the crate
//! computes with.
//!
//! The discrepancy of a form against an inverse form is the single kept
//! coefficient at the window's lower edge. It is the one field-arithmetic
//! kernel of the solver loop, so it is a plain dot product of two
//! coefficient windows; the full Laurent product is deliberately confined
//! to the oracle module.

use std::fmt;

use crate::bipoly::{Form, ParseError};
use crate::field::{Field, FieldElement};

/// A nonzero inverse form of total degree m <= 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InverseForm {
    degree: i64,
    /// Index `(i - m)` holds F_i, the coefficient of x^i z^(m-i).
    coeffs: Vec<FieldElement>,
}

impl InverseForm {
    /// Builds an inverse form of the given degree from the coefficients
    /// F_m, ..., F_0. Returns `None` when every coefficient is zero.
    pub fn from_coeffs(degree: i64, coeffs: Vec<FieldElement>) -> Option<InverseForm> {
        assert!(degree <= 0, "an inverse form has total degree <= 0");
        assert_eq!(
            coeffs.len() as i64,
            1 - degree,
            "a degree-{degree} inverse form needs {} coefficients",
            1 - degree
        );
        let field = coeffs[0].field();
        assert!(
            coeffs.iter().all(|c| c.field() == field),
            "inverse form coefficients must share one field"
        );
        if coeffs.iter().all(|c| c.is_zero()) {
            return None;
        }
        Some(InverseForm { degree, coeffs })
    }

    /// The single term c * x^i z^j with i, j <= 0; `c` must be nonzero.
    pub fn term(c: FieldElement, i: i64, j: i64) -> InverseForm {
        assert!(!c.is_zero(), "a term needs a nonzero coefficient");
        assert!(i <= 0 && j <= 0, "inverse monomials have non-positive exponents");
        let degree = i + j;
        let mut coeffs = vec![c.field().zero(); (1 - degree) as usize];
        coeffs[(i - degree) as usize] = c;
        InverseForm { degree, coeffs }
    }

    /// The monomial x^i as an inverse form, i <= 0.
    pub fn x_power(field: Field, i: i64) -> InverseForm {
        InverseForm::term(field.one(), i, 0)
    }

    /// The monomial z^j as an inverse form, j <= 0.
    pub fn z_power(field: Field, j: i64) -> InverseForm {
        InverseForm::term(field.one(), 0, j)
    }

    /// The total degree m <= 0.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.coeffs[0].field()
    }

    /// The order: the largest index with a nonzero coefficient.
    pub fn order(&self) -> i64 {
        let pos = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        self.degree + pos as i64
    }

    /// The coefficient F_i; zero outside the window m <= i <= 0.
    pub fn coeff(&self, i: i64) -> FieldElement {
        if i < self.degree || i > 0 {
            self.field().zero()
        } else {
            self.coeffs[(i - self.degree) as usize].clone()
        }
    }

    /// The stored coefficients F_m, ..., F_0.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Adds two inverse forms of equal degree; `None` when they cancel.
    pub fn add(&self, other: &InverseForm) -> Option<InverseForm> {
        assert_eq!(
            self.degree, other.degree,
            "can only add inverse forms of equal degree"
        );
        let coeffs: Vec<FieldElement> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        InverseForm::from_coeffs(self.degree, coeffs)
    }

    /// Multiplies every coefficient by `c`; `None` when `c` is zero.
    pub fn scale(&self, c: &FieldElement) -> Option<InverseForm> {
        if c.is_zero() {
            return None;
        }
        Some(InverseForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        })
    }

    /// Scales so the coefficient at the order is 1. The annihilator ideal
    /// is unchanged: it depends only on F up to a nonzero scalar.
    pub fn normalise(&self) -> InverseForm {
        let lead = self.coeff(self.order());
        if lead.is_one() {
            self.clone()
        } else {
            self.scale(&lead.inv()).unwrap()
        }
    }

    /// The augmentation: prepends `a` as the new lowest coefficient,
    /// giving a x^(m-1) plus the z-shift of the form, of degree m - 1.
    pub fn augment(&self, a: &FieldElement) -> InverseForm {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(a.clone());
        coeffs.extend(self.coeffs.iter().cloned());
        InverseForm {
            degree: self.degree - 1,
            coeffs,
        }
    }

    /// The subform of degree i: the terms of index i and above, re-graded
    /// to total degree i. Requires m <= i <= order.
    pub fn subform(&self, i: i64) -> InverseForm {
        assert!(
            self.degree <= i && i <= self.order(),
            "subform index {i} outside [{}, {}]",
            self.degree,
            self.order()
        );
        InverseForm {
            degree: i,
            coeffs: self.coeffs[(i - self.degree) as usize..].to_vec(),
        }
    }

    /// The geometric ratio r with F_i = r * F_(i+1), if the form is
    /// geometric: m <= -1, F_0 = 1 and the ratio recurrence holds.
    pub fn is_geometric(&self) -> Option<FieldElement> {
        if self.degree > -1 || !self.coeff(0).is_one() {
            return None;
        }
        let r = self.coeff(-1);
        for i in self.degree..0 {
            if self.coeff(i) != r.mul(&self.coeff(i + 1)) {
                return None;
            }
        }
        Some(r)
    }

    /// Parses the canonical text format `m=<int>; F=<F_m>,...,<F_0>`.
    pub fn parse(field: Field, text: &str) -> Result<InverseForm, ParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let shape = || ParseError(format!("expected `m=<int>; F=<coefficients>`, got `{text}`"));
        let rest = compact.strip_prefix("m=").ok_or_else(shape)?;
        let (mtext, ftail) = rest.split_once(';').ok_or_else(shape)?;
        let degree: i64 = mtext
            .parse()
            .map_err(|_| ParseError(format!("bad degree `{mtext}`")))?;
        if degree > 0 {
            return Err(ParseError(format!(
                "an inverse form has degree <= 0, got {degree}"
            )));
        }
        let body = ftail.strip_prefix("F=").ok_or_else(shape)?;
        let coeffs: Vec<FieldElement> = body
            .split(',')
            .map(|t| field.parse_element(t).map_err(|e| ParseError(e.to_string())))
            .collect::<Result<_, _>>()?;
        if coeffs.len() as i64 != 1 - degree {
            return Err(ParseError(format!(
                "degree {degree} needs {} coefficients, got {}",
                1 - degree,
                coeffs.len()
            )));
        }
        InverseForm::from_coeffs(degree, coeffs)
            .ok_or_else(|| ParseError("an inverse form cannot be zero".to_string()))
    }

    /// Renders the canonical text format parsed by [`InverseForm::parse`].
    pub fn serialize(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("m={}; F={}", self.degree, body.join(","))
    }

    /// The JSON mirror of the text format.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field().name(),
            "degree": self.degree,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Reads the JSON mirror; coefficients may be strings or integers.
    pub fn from_json(value: &serde_json::Value) -> Result<InverseForm, ParseError> {
        let name = value
            .get("field")
            .and_then(|v| v.as_str())
            .ok_or_else(|| ParseError("missing `field` name".to_string()))?;
        let field = Field::from_name(name).map_err(|e| ParseError(e.to_string()))?;
        let degree = value
            .get("degree")
            .and_then(|v| v.as_i64())
            .ok_or_else(|| ParseError("missing integer `degree`".to_string()))?;
        if degree > 0 {
            return Err(ParseError(format!(
                "an inverse form has degree <= 0, got {degree}"
            )));
        }
        let list = value
            .get("coeffs")
            .and_then(|v| v.as_array())
            .ok_or_else(|| ParseError("missing `coeffs` array".to_string()))?;
        let coeffs: Vec<FieldElement> = list
            .iter()
            .map(|v| {
                let literal = match v {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Number(n) => n.to_string(),
                    _ => return Err(ParseError("coefficients must be strings or integers".to_string())),
                };
                field.parse_element(&literal).map_err(|e| ParseError(e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        if coeffs.len() as i64 != 1 - degree {
            return Err(ParseError(format!(
                "degree {degree} needs {} coefficients, got {}",
                1 - degree,
                coeffs.len()
            )));
        }
        InverseForm::from_coeffs(degree, coeffs)
            .ok_or_else(|| ParseError("an inverse form cannot be zero".to_string()))
    }
}

impl fmt::Display for InverseForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let i = self.degree + k as i64;
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if i != 0 {
                parts.push(format!("x^{i}"));
            }
            if self.degree - i != 0 {
                parts.push(format!("z^{}", self.degree - i));
            }
            if parts.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{mag}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The action of a form on an inverse form: the Laurent product truncated
/// to the window of degree |phi| + |F|, or `None` when that window is zero
/// (in particular whenever the window degree is positive).
pub fn act(phi: &Form, f: &InverseForm) -> Option<InverseForm> {
    let e = phi.degree() as i64;
    let d = e + f.degree;
    if d > 0 {
        return None;
    }
    let field = f.field();
    let mut coeffs = vec![field.zero(); (1 - d) as usize];
    for (slot, c) in coeffs.iter_mut().enumerate() {
        let i = d + slot as i64;
        // [phi . F]_i collects phi's z-layout against a window of F.
        let mut acc = field.zero();
        for j in 0..=e {
            let cj = phi.coeff_by_zpow(j as usize);
            if cj.is_zero() {
                continue;
            }
            acc = &acc + &(cj * &f.coeff(i - e + j));
        }
        *c = acc;
    }
    InverseForm::from_coeffs(d, coeffs)
}

/// True when the form annihilates the inverse form.
pub fn annihilates(phi: &Form, f: &InverseForm) -> bool {
    act(phi, f).is_none()
}

/// The discrepancy: the kept product coefficient at the lower window edge
/// |phi| + |G|, taken as zero when that edge is positive. One dot product
/// of phi's coefficients against the low end of G.
pub fn discrepancy(phi: &Form, g: &InverseForm) -> FieldElement {
    let e = phi.degree() as i64;
    let b = g.degree;
    let field = g.field();
    if e + b > 0 {
        return field.zero();
    }
    let mut acc = field.zero();
    for j in 0..=e {
        let cj = phi.coeff_by_zpow(j as usize);
        if cj.is_zero() {
            continue;
        }
        acc = &acc + &(cj * &g.coeff(b + j));
    }
    acc
}
