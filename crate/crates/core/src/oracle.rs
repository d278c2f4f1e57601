//! Brute-force verifiers, deliberately naive and independent.
//!
//! Everything here recomputes from first principles: annihilation through
//! a full Laurent product instead of windowed dot products, complexities
//! by enumerating every candidate of every degree, dimensions by counting
//! lattice points under a staircase. The searches refuse inputs beyond
//! fixed budgets rather than truncating silently, so a passing oracle run
//! means the fast paths were checked in full.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use crate::bipoly::{Form, Monomial, UniPoly};
use crate::field::{Field, FieldElement};
use crate::groebner::{form_buchberger, form_remainder};
use crate::invform::InverseForm;
use crate::sequence::{is_annihilating, SequenceRecord, UsageError};

/// Raised when an exhaustive search would overrun its budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefusalError(pub String);

impl fmt::Display for RefusalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "refused: {}", self.0)
    }
}

impl Error for RefusalError {}

/// A sparse Laurent polynomial in x and z, exponents of either sign.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly {
    field: Field,
    // No explicit zero entries, so emptiness means the zero polynomial.
    terms: BTreeMap<(i64, i64), FieldElement>,
}

impl LaurentPoly {
    pub fn zero(field: Field) -> LaurentPoly {
        LaurentPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Adds c * x^i z^j, cancelling the entry if the sum vanishes.
    pub fn add_term(&mut self, i: i64, j: i64, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((i, j)) {
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
        }
    }

    pub fn from_form(phi: &Form) -> LaurentPoly {
        let e = phi.degree();
        let mut out = LaurentPoly::zero(phi.field());
        for j in 0..=e {
            out.add_term((e - j) as i64, j as i64, phi.coeff_by_zpow(j));
        }
        out
    }

    pub fn from_inverse(f: &InverseForm) -> LaurentPoly {
        let m = f.degree();
        let mut out = LaurentPoly::zero(f.field());
        for i in m..=0 {
            out.add_term(i, m - i, &f.coeff(i));
        }
        out
    }

    pub fn coeff(&self, i: i64, j: i64) -> FieldElement {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.field);
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
            }
        }
        out
    }

    /// Whether every monomial of x-degree i has cancelled away.
    pub fn x_section_is_zero(&self, i: i64) -> bool {
        self.terms
            .range((i, i64::MIN)..=(i, i64::MAX))
            .next()
            .is_none()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &FieldElement)> {
        self.terms.iter()
    }
}

/// Annihilation by full multiplication: expand phi * F in the Laurent ring
/// and demand that every x-degree from |phi| + |F| up to 0 has cancelled.
/// Must agree with the windowed fast path everywhere.
pub fn laurent_annihilation_check(phi: &Form, f: &InverseForm) -> bool {
    let product = LaurentPoly::from_form(phi).mul(&LaurentPoly::from_inverse(f));
    let low = phi.degree() as i64 + f.degree();
    (low..=0).all(|i| product.x_section_is_zero(i))
}

fn enumerable_elements(field: Field, purpose: &str) -> Result<Vec<FieldElement>, RefusalError> {
    match field {
        Field::Gf2 => Ok(vec![field.zero(), field.one()]),
        Field::Gfp(3) => Ok((0..3).map(|k| field.from_i64(k)).collect()),
        _ => Err(RefusalError(format!(
            "{purpose} enumerates coefficients and needs GF(2) or GF(3), not {}",
            field.name()
        ))),
    }
}

/// The minimal degree of a monic form with z-free leader annihilating F,
/// found by trying every candidate degree by degree. Guaranteed to stop:
/// at degree 1 - m the window is empty and the pure power alone passes.
pub fn exhaustive_lambda(f: &InverseForm) -> Result<usize, RefusalError> {
    let elements = enumerable_elements(f.field(), "exhaustive_lambda")?;
    let span = (1 - f.degree()) as usize;
    let budget = if elements.len() == 2 { 14 } else { 9 };
    if span > budget {
        return Err(RefusalError(format!(
            "degree span {span} exceeds the exhaustive_lambda budget {budget} over {}",
            f.field().name()
        )));
    }
    let p = elements.len();
    for e in 1..=span {
        for index in 0..p.pow(e as u32) {
            let mut coeffs = Vec::with_capacity(e + 1);
            coeffs.push(f.field().one());
            let mut rest = index;
            for _ in 0..e {
                coeffs.push(elements[rest % p].clone());
                rest /= p;
            }
            let candidate = Form::from_coeffs(e, coeffs).unwrap();
            if laurent_annihilation_check(&candidate, f) {
                return Ok(e);
            }
        }
    }
    unreachable!("the pure power of degree 1 - m always annihilates");
}

/// Counts the monomials inside the box [0, 1-m]^2 that lie under none of
/// the leading exponents. The leaders must contain a pure power of each
/// variable no larger than the box, otherwise the box does not bound the
/// staircase and the count would be meaningless.
pub fn standard_monomial_count(basis: &[Form], m: i64) -> Result<usize, UsageError> {
    let span = (1 - m) as u32;
    let leaders: Vec<Monomial> = basis.iter().map(|g| g.leading().0).collect();
    let x_closed = leaders.iter().any(|t| t.zdeg == 0 && t.xdeg <= span);
    let z_closed = leaders.iter().any(|t| t.xdeg == 0 && t.zdeg <= span);
    if !x_closed || !z_closed {
        return Err(UsageError(format!(
            "the leading terms do not close the box [0, {span}]^2 in both variables"
        )));
    }
    let mut count = 0;
    for i in 0..=span {
        for j in 0..=span {
            let point = Monomial::new(i, j);
            if !leaders.iter().any(|t| t.divides(&point)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The minimal degree of a monic annihilating polynomial of s, found by
/// enumeration. Stops at degree n at the latest, where the defining window
/// is empty.
pub fn exhaustive_lc(s: &SequenceRecord) -> Result<usize, RefusalError> {
    let elements = enumerable_elements(s.field(), "exhaustive_lc")?;
    let n = s.len();
    let budget = if elements.len() == 2 { 14 } else { 9 };
    if n > budget {
        return Err(RefusalError(format!(
            "length {n} exceeds the exhaustive_lc budget {budget} over {}",
            s.field().name()
        )));
    }
    let p = elements.len();
    for e in 0..=n {
        for index in 0..p.pow(e as u32) {
            let mut coeffs = Vec::with_capacity(e + 1);
            coeffs.push(s.field().one());
            let mut rest = index;
            for _ in 0..e {
                coeffs.push(elements[rest % p].clone());
                rest /= p;
            }
            let candidate = UniPoly::from_coeffs(coeffs);
            if is_annihilating(&candidate, s) {
                return Ok(e);
            }
        }
    }
    unreachable!("x^n always annihilates a sequence of length n");
}

fn spans(host: &[Form], members: &[Form]) -> bool {
    let gb = form_buchberger(host);
    members.iter().all(|g| form_remainder(g, &gb).is_none())
}

/// Whether two generator lists span the same ideal: reduce each generator
/// against a basis of the other side, both ways.
pub fn ideal_equal(a: &[Form], b: &[Form]) -> bool {
    spans(a, b) && spans(b, a)
}
