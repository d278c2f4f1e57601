//! Finite-sequence specialisation: LFSR synthesis and linear complexity.
//!
//! A sequence s_0, ..., s_{n-1} has an inverse form of degree 1 - n, so
//! the whole annihilator theory applies to it. This module runs the pair
//! solver directly on sequence windows, without materialising the inverse
//! form, and adds the univariate side: annihilating polynomials, minimal
//! polynomials and the Berlekamp-Massey-style variant that computes them.
//! Dehomogenisation maps one side onto the other exactly, and the two
//! independent loops make that correspondence a genuine cross-check.

use std::fmt;

use crate::annihilator::{self, ViablePair};
use crate::bipoly::{Form, ParseError, UniPoly};
use crate::field::{Field, FieldElement};
use crate::invform::InverseForm;

/// Arguments the operations cannot honour: structurally valid input used
/// in an inconsistent way, as opposed to a syntax error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

/// A finite sequence s_0, ..., s_{n-1} over one field, n >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    field: Field,
    terms: Vec<FieldElement>,
}

impl SequenceRecord {
    pub fn from_terms(terms: Vec<FieldElement>) -> SequenceRecord {
        assert!(!terms.is_empty(), "a sequence needs at least one term");
        let field = terms[0].field();
        assert!(
            terms.iter().all(|t| t.field() == field),
            "sequence terms must share one field"
        );
        SequenceRecord { field, terms }
    }

    /// Parses comma-separated terms, s_0 first.
    pub fn parse(field: Field, text: &str) -> Result<SequenceRecord, ParseError> {
        let terms: Vec<FieldElement> = text
            .split(',')
            .map(|t| {
                field
                    .parse_element(t.trim())
                    .map_err(|e| ParseError(e.to_string()))
            })
            .collect::<Result<_, _>>()?;
        if terms.is_empty() {
            return Err(ParseError("a sequence needs at least one term".to_string()));
        }
        Ok(SequenceRecord { field, terms })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[FieldElement] {
        &self.terms
    }

    /// The number of terms n.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }
}

impl fmt::Display for SequenceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.terms {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

/// A minimal polynomial together with an auxiliary polynomial, the output
/// shape of the sequence-side synthesis algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmPair {
    mu: UniPoly,
    mu_prime: UniPoly,
}

impl BmPair {
    pub fn new(mu: UniPoly, mu_prime: UniPoly) -> BmPair {
        assert!(mu.is_monic(), "the minimal polynomial must be monic");
        assert!(
            mu_prime.is_zero() || mu_prime.is_monic(),
            "the auxiliary polynomial must be monic or zero"
        );
        BmPair { mu, mu_prime }
    }

    pub fn mu(&self) -> &UniPoly {
        &self.mu
    }

    pub fn mu_prime(&self) -> &UniPoly {
        &self.mu_prime
    }

    /// The (1, 0) output reserved for trivial sequences.
    pub fn is_trivial(&self) -> bool {
        self.mu_prime.is_zero()
    }
}

/// The inverse form of the sequence, of degree 1 - n, with F_i = s_(-i);
/// `None` for a trivial sequence.
pub fn inverse_form(s: &SequenceRecord) -> Option<InverseForm> {
    let degree = 1 - s.len() as i64;
    InverseForm::from_coeffs(degree, s.terms.iter().rev().cloned().collect())
}

/// The window discrepancy of a monic head against the prefix ending at
/// index i: the dot product of the head coefficients with the last
/// matching terms. With an empty head this is s_i, which realises the
/// trivial-prefix conventions without a special case.
fn window_discrepancy(head: &[FieldElement], s: &SequenceRecord, i: usize) -> FieldElement {
    let mut delta = s.field().zero();
    for (c, t) in head.iter().zip(s.terms[..=i].iter().rev()) {
        if !c.is_zero() {
            delta = delta.add(&c.mul(t));
        }
    }
    delta
}

struct Synthesis {
    f1: Form,
    f2: Option<Form>,
    profile: Vec<usize>,
    multiplications: u64,
}

/// The pair solver on sequence windows: one iteration per term, starting
/// from the sentinel (1, 0) with a unit cached discrepancy, so trivial
/// prefixes cost nothing and the first nonzero term installs the basis
/// pair of the scanned subform.
fn synthesise(s: &SequenceRecord) -> Synthesis {
    let field = s.field();
    let mut f1 = Form::one(field);
    let mut f2: Option<Form> = None;
    let mut delta2 = field.one();
    let mut d = 1i64;
    let mut profile = Vec::with_capacity(s.len());
    let mut multiplications = 0u64;
    for i in 0..s.len() {
        debug_assert!(f1.degree() <= i);
        let delta1 = window_discrepancy(f1.coeffs(), s, i);
        multiplications += f1.degree() as u64;
        let q = delta1.div(&delta2);
        if !delta1.is_zero() {
            match &f2 {
                None => {
                    // The subtracted term vanishes with f2, leaving x^d.
                    debug_assert!(d > 0 && f1.degree() == 0);
                    f2 = Some(std::mem::replace(
                        &mut f1,
                        Form::x_power(field, d as usize),
                    ));
                    delta2 = delta1;
                    d = -d;
                }
                Some(g) => {
                    multiplications += g.degree() as u64;
                    let head = annihilator::ominus(&f1, g, d, &q);
                    if d <= 0 {
                        f1 = head;
                    } else {
                        f2 = Some(std::mem::replace(&mut f1, head));
                        delta2 = delta1;
                        d = -d;
                    }
                }
            }
        }
        f2 = f2.map(|g| g.mul_z(1));
        d += 1;
        profile.push(f1.degree());
        if let Some(g) = &f2 {
            debug_assert_eq!(d, g.degree() as i64 - f1.degree() as i64);
        }
    }
    Synthesis { f1, f2, profile, multiplications }
}

/// Viable pair for the annihilator ideal of a non-trivial sequence;
/// `None` stands for the algorithm's sentinel output (1, 0) on trivial
/// input.
pub fn viable_pair_seq(s: &SequenceRecord) -> Option<ViablePair> {
    let run = synthesise(s);
    run.f2.map(|f2| ViablePair::new(run.f1, f2, 1 - s.len() as i64))
}

/// Whether the monic (or zero, by convention) polynomial annihilates the
/// sequence: every window sum over the final terms vanishes. Vacuously
/// true from degree n upward.
pub fn is_annihilating(psi: &UniPoly, s: &SequenceRecord) -> bool {
    if psi.is_zero() {
        return true;
    }
    let e = psi.degree() as i64;
    let n = s.len() as i64;
    (e + 1 - n..=0).all(|i| {
        let mut sum = s.field().zero();
        for j in 0..=e {
            let c = psi.coeff(j as usize);
            if !c.is_zero() {
                sum = sum.add(&c.mul(&s.terms[(j - i) as usize]));
            }
        }
        sum.is_zero()
    })
}

/// The linear complexity of the sequence; 0 when trivial.
pub fn linear_complexity(s: &SequenceRecord) -> usize {
    *synthesise(s).profile.last().unwrap()
}

/// Linear complexities of all n prefixes, shortest first.
pub fn lc_profile(s: &SequenceRecord) -> Vec<usize> {
    synthesise(s).profile
}

/// The multiplication count of the synthesis loop, under the same cost
/// model as the inverse-form solver: |f1| per discrepancy and |f2| more
/// per nonzero one.
pub fn synthesis_cost(s: &SequenceRecord) -> u64 {
    synthesise(s).multiplications
}

/// The normalised Berlekamp-Massey variant, computing a minimal and an
/// auxiliary polynomial directly in k[x]. An independent code path from
/// the form-side solver on purpose; the two are linked by `dehom_pair`.
pub fn bm_variant(s: &SequenceRecord) -> BmPair {
    let field = s.field();
    let mut mu = UniPoly::one(field);
    let mut mu_prime = UniPoly::zero();
    let mut delta_prime = field.one();
    let mut d = 1i64;
    for i in 0..s.len() {
        debug_assert!(mu.degree() <= i);
        let delta = window_discrepancy(mu.coeffs(), s, i);
        let q = delta.div(&delta_prime);
        if !delta.is_zero() {
            if d <= 0 {
                mu = mu.sub(&mu_prime.mul_xpow((-d) as usize).scale(&q));
            } else {
                let head = mu.mul_xpow(d as usize).sub(&mu_prime.scale(&q));
                mu_prime = std::mem::replace(&mut mu, head);
                delta_prime = delta;
                d = -d;
            }
        }
        d += 1;
    }
    BmPair::new(mu, mu_prime)
}

/// Dehomogenises both pair components, yielding the minimal and
/// auxiliary polynomial of the underlying sequence.
pub fn dehom_pair(f: &ViablePair) -> (UniPoly, UniPoly) {
    (f.f1().dehomogenise(), f.f2().dehomogenise())
}

/// Rebuilds the viable pair of a length-n sequence from its polynomial
/// pair: homogenise both and pad the second with z to degree n + 1 - |mu|.
pub fn hom_pair(p: &BmPair, n: usize) -> Result<ViablePair, UsageError> {
    if p.mu_prime.is_zero() {
        return Err(UsageError(
            "the trivial pair (1, 0) has no viable counterpart".to_string(),
        ));
    }
    let pad = n as i64 + 1 - p.mu.degree() as i64 - p.mu_prime.degree() as i64;
    if pad < 1 {
        return Err(UsageError(format!(
            "degrees {} + {} do not fit a length-{n} sequence",
            p.mu.degree(),
            p.mu_prime.degree()
        )));
    }
    Ok(ViablePair::new(
        p.mu.homogenise(),
        p.mu_prime.homogenise().mul_z(pad as usize),
        1 - n as i64,
    ))
}

/// A minimal polynomial of the sequence: the dehomogenised first pair
/// component, or 1 for trivial input.
pub fn minimal_polynomial(s: &SequenceRecord) -> UniPoly {
    match viable_pair_seq(s) {
        Some(f) => f.f1().dehomogenise(),
        None => UniPoly::one(s.field()),
    }
}

/// Generators of the intersection of two annihilator ideals, via the
/// syzygy route on the two viable pairs.
pub fn intersect_annihilators(
    s: &SequenceRecord,
    t: &SequenceRecord,
) -> Result<Vec<Form>, UsageError> {
    let trivial = |name| UsageError(format!("{name} is trivial and annihilated by everything"));
    let f = viable_pair_seq(s).ok_or_else(|| trivial("first sequence"))?;
    let g = viable_pair_seq(t).ok_or_else(|| trivial("second sequence"))?;
    Ok(f.intersect(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annihilator::{form_vector, viable_pair};
    use crate::groebner::{form_is_reduced, form_same_ideal, Poly};
    use crate::invform::annihilates;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf2() -> Field {
        Field::Gf2
    }

    fn q() -> Field {
        Field::Rational
    }

    fn seq(field: Field, text: &str) -> SequenceRecord {
        SequenceRecord::parse(field, text).unwrap()
    }

    fn form(field: Field, text: &str) -> Form {
        Form::parse(field, text).unwrap()
    }

    fn uni(field: Field, text: &str) -> UniPoly {
        UniPoly::parse(field, text).unwrap()
    }

    fn random_seq<R: Rng>(field: Field, n: usize, rng: &mut R) -> SequenceRecord {
        SequenceRecord::from_terms((0..n).map(|_| field.sample(rng)).collect())
    }

    /// 0, ..., 0, 1 with n terms.
    fn irs(field: Field, n: usize) -> SequenceRecord {
        let mut terms = vec![field.zero(); n];
        terms[n - 1] = field.one();
        SequenceRecord::from_terms(terms)
    }

    fn running_sequence() -> SequenceRecord {
        seq(gf2(), "1,0,0,1,1,0,1,0")
    }

    #[test]
    fn record_parsing_and_display() {
        let s = running_sequence();
        assert_eq!(s.len(), 8);
        assert!(!s.is_trivial());
        assert_eq!(s.to_string(), "1,0,0,1,1,0,1,0");
        assert!(seq(gf2(), "0,0,0").is_trivial());
        assert!(SequenceRecord::parse(q(), "").is_err());
        assert!(SequenceRecord::parse(gf2(), "1,,0").is_err());
        let rats = seq(q(), "1/2, -3, 0");
        assert_eq!(rats.to_string(), "1/2,-3,0");
    }

    #[test]
    fn inverse_form_examples() {
        assert_eq!(
            inverse_form(&irs(q(), 5)),
            Some(InverseForm::x_power(q(), -4))
        );
        assert_eq!(
            inverse_form(&seq(q(), "1,0,0,0")),
            Some(InverseForm::z_power(q(), -3))
        );
        assert_eq!(
            inverse_form(&running_sequence()),
            Some(InverseForm::parse(gf2(), "m=-7; F=0,1,0,1,1,0,0,1").unwrap())
        );
        assert_eq!(inverse_form(&seq(gf2(), "0,0")), None);
    }

    #[test]
    fn viable_pair_fixtures() {
        assert!(viable_pair_seq(&seq(q(), "0,0,0")).is_none());
        for n in 3..=8 {
            let mut terms = vec![gf2().zero(); n];
            terms[0] = gf2().one();
            terms[n - 1] = gf2().one();
            let s = SequenceRecord::from_terms(terms);
            let pair = viable_pair_seq(&s).unwrap();
            assert_eq!(
                pair.f1(),
                &Form::x_power(gf2(), n - 1).add(&Form::z_power(gf2(), n - 1)).unwrap()
            );
            assert_eq!(pair.f2(), &form(gf2(), "x*z"));
        }
        let pair = viable_pair_seq(&running_sequence()).unwrap();
        assert_eq!(pair.f1(), &form(gf2(), "x^4 + x*z^3 + z^4"));
        assert_eq!(pair.f2(), &form(gf2(), "x^3*z^2 + x^2*z^3 + x*z^4 + z^5"));
        let pair = viable_pair_seq(&irs(q(), 6)).unwrap();
        assert_eq!(pair.f1(), &form(q(), "x^6"));
        assert_eq!(pair.f2(), &form(q(), "z"));
        let f7 = Field::gfp(7).unwrap();
        let geo = seq(f7, "1,3,2,6,4");
        let pair = viable_pair_seq(&geo).unwrap();
        assert_eq!(pair.f1(), &form(f7, "x + 4*z"));
        assert_eq!(pair.f2(), &form(f7, "z^5"));
        let single = seq(q(), "7");
        let pair = viable_pair_seq(&single).unwrap();
        assert_eq!(pair.f1(), &form(q(), "x"));
        assert_eq!(pair.f2(), &form(q(), "z"));
    }

    #[test]
    fn sequence_loop_matches_the_inverse_form_solver() {
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        for field in [gf2(), Field::gfp(3).unwrap(), Field::gfp(7).unwrap(), q()] {
            for _ in 0..15 {
                let n = rng.gen_range(1..=16);
                let s = random_seq(field, n, &mut rng);
                match inverse_form(&s) {
                    None => assert!(viable_pair_seq(&s).is_none()),
                    Some(f) => {
                        assert_eq!(viable_pair_seq(&s).unwrap(), viable_pair(&f));
                    }
                }
            }
        }
    }

    #[test]
    fn annihilating_polynomial_examples() {
        let s = running_sequence();
        assert!(is_annihilating(&UniPoly::x_power(gf2(), 8), &s));
        assert!(is_annihilating(&UniPoly::zero(), &s));
        assert!(is_annihilating(&minimal_polynomial(&s), &s));
        assert!(!is_annihilating(&uni(gf2(), "x"), &s));
        let geo = seq(q(), "1,3,9,27");
        assert!(is_annihilating(&uni(q(), "x - 3"), &geo));
    }

    #[test]
    fn degree_n_windows_are_vacuous_but_the_ideal_still_discriminates() {
        // At degree n the defining window is empty, so x^6 + x^3
        // annihilates 1,0,0,1,1,1 vacuously. The published rejection of
        // it lives in the bivariate ideal, where the polynomial is
        // inhomogeneous and its x^3 component fails; the homogenisation
        // of full degree is in the ideal outright.
        let s = seq(gf2(), "1,0,0,1,1,1");
        let f = inverse_form(&s).unwrap();
        assert!(is_annihilating(&uni(gf2(), "x^6 + x^3"), &s));
        assert!(is_annihilating(&uni(gf2(), "x^6 + x^3 + x^2"), &s));
        let basis: Vec<Poly> = form_vector(&f)
            .form_vector()
            .iter()
            .map(Poly::from)
            .collect();
        let stray = Poly::parse(gf2(), "x^6 + x^3").unwrap();
        assert!(!crate::groebner::remainder(&stray, &basis).is_zero());
        assert!(!annihilates(&form(gf2(), "x^3"), &f));
        assert!(annihilates(&uni(gf2(), "x^6 + x^3").homogenise(), &f));
    }

    #[test]
    fn linear_complexity_examples() {
        assert_eq!(linear_complexity(&irs(gf2(), 6)), 6);
        assert_eq!(lc_profile(&irs(gf2(), 6)), [0, 0, 0, 0, 0, 6]);
        assert_eq!(linear_complexity(&seq(q(), "1,0,0,0,0")), 1);
        assert_eq!(linear_complexity(&seq(q(), "0,0")), 0);
        let s = running_sequence();
        assert_eq!(linear_complexity(&s), 4);
        assert_eq!(lc_profile(&s), [1, 1, 1, 3, 3, 3, 4, 4]);
    }

    #[test]
    fn lc_profile_is_nondecreasing_and_flags_geometric() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for field in [gf2(), Field::gfp(7).unwrap()] {
            for _ in 0..40 {
                let n = rng.gen_range(2..=14);
                let s = random_seq(field, n, &mut rng);
                let profile = lc_profile(&s);
                assert!(profile.windows(2).all(|w| w[0] <= w[1]));
                let all_ones = profile.iter().all(|&l| l == 1);
                let geometric = inverse_form(&s)
                    .map_or(false, |f| f.normalise().is_geometric().is_some());
                assert_eq!(all_ones, geometric);
            }
        }
    }

    #[test]
    fn small_complexities_match_brute_force() {
        // Exhaustive over GF(2): the loop's |f1| is the least degree of a
        // monic annihilating polynomial.
        for n in 1..=7usize {
            for bits in 0..1u64 << n {
                let terms = (0..n)
                    .map(|k| {
                        if bits >> k & 1 == 1 { gf2().one() } else { gf2().zero() }
                    })
                    .collect();
                let s = SequenceRecord::from_terms(terms);
                let lc = linear_complexity(&s);
                let brute = (0..=n)
                    .find(|&e| {
                        (0..1u64 << e).any(|mask| {
                            let mut coeffs = vec![gf2().one()];
                            coeffs.extend((0..e).map(|k| {
                                if mask >> k & 1 == 1 { gf2().one() } else { gf2().zero() }
                            }));
                            is_annihilating(&UniPoly::from_coeffs(coeffs), &s)
                        })
                    })
                    .unwrap();
                assert_eq!(lc, brute);
            }
        }
    }

    #[test]
    fn bm_variant_fixtures() {
        assert_eq!(
            bm_variant(&seq(gf2(), "0,0,0,0")),
            BmPair::new(UniPoly::one(gf2()), UniPoly::zero())
        );
        assert_eq!(
            bm_variant(&irs(q(), 5)),
            BmPair::new(UniPoly::x_power(q(), 5), UniPoly::one(q()))
        );
        assert_eq!(
            bm_variant(&seq(q(), "1,3,9,27")),
            BmPair::new(uni(q(), "x - 3"), UniPoly::one(q()))
        );
        let p = bm_variant(&running_sequence());
        assert_eq!(p.mu(), &uni(gf2(), "x^4 + x + 1"));
        assert_eq!(p.mu_prime(), &uni(gf2(), "x^3 + x^2 + x + 1"));
        let p = bm_variant(&seq(q(), "4"));
        assert_eq!(p.mu(), &uni(q(), "x"));
        assert_eq!(p.mu_prime(), &UniPoly::one(q()));
    }

    #[test]
    fn dehomogenisation_correspondence() {
        let mut rng = ChaCha8Rng::seed_from_u64(68);
        for field in [gf2(), Field::gfp(3).unwrap(), Field::gfp(7).unwrap(), q()] {
            for _ in 0..25 {
                let n = rng.gen_range(1..=20);
                let s = random_seq(field, n, &mut rng);
                let p = bm_variant(&s);
                match viable_pair_seq(&s) {
                    None => {
                        assert!(p.is_trivial());
                        assert!(hom_pair(&p, n).is_err());
                    }
                    Some(f) => {
                        assert_eq!(dehom_pair(&f), (p.mu().clone(), p.mu_prime().clone()));
                        assert_eq!(hom_pair(&p, n).unwrap(), f);
                    }
                }
            }
        }
    }

    #[test]
    fn annihilator_membership_transfers_both_ways() {
        let mut rng = ChaCha8Rng::seed_from_u64(69);
        for field in [gf2(), Field::gfp(7).unwrap()] {
            for _ in 0..15 {
                let n = rng.gen_range(2..=12);
                let s = random_seq(field, n, &mut rng);
                if s.is_trivial() {
                    continue;
                }
                let f = inverse_form(&s).unwrap();
                let pair = viable_pair_seq(&s).unwrap();
                // Monic multiples of the minimal polynomial annihilate,
                // and homogenising lands them in the ideal.
                let mut coeffs = vec![field.one()];
                coeffs.extend((0..rng.gen_range(0..3)).map(|_| field.sample(&mut rng)));
                let psi = minimal_polynomial(&s).mul(&UniPoly::from_coeffs(coeffs));
                assert!(is_annihilating(&psi, &s));
                assert!(annihilates(&psi.homogenise(), &f));
                // And back: a z-free-headed ideal element dehomogenises
                // into an annihilating polynomial.
                let tail = rng.gen_range(0..3);
                let phi = pair.f1().mul(&Form::from_coeffs(
                    tail,
                    (0..=tail)
                        .map(|k| if k == 0 { field.one() } else { field.sample(&mut rng) })
                        .collect(),
                ).unwrap());
                assert!(annihilates(&phi, &f));
                assert!(is_annihilating(&phi.dehomogenise(), &s));
            }
        }
    }

    #[test]
    fn accumulated_basis_is_reduced_at_low_complexity() {
        let mut rng = ChaCha8Rng::seed_from_u64(70);
        let mut seen = 0;
        while seen < 25 {
            let n = rng.gen_range(4..=16);
            let s = random_seq(gf2(), n, &mut rng);
            if s.is_trivial() || 2 * linear_complexity(&s) > n {
                continue;
            }
            let fv = form_vector(&inverse_form(&s).unwrap());
            if fv.form_vector().len() < 3 {
                continue;
            }
            seen += 1;
            assert!(form_is_reduced(fv.form_vector()));
        }
    }

    #[test]
    fn intersection_recovers_the_published_examples() {
        let s = seq(gf2(), "1,0,0,1,1,1");
        let t = seq(gf2(), "1,0,0,0,1,0,0,1");
        let f = viable_pair_seq(&s).unwrap();
        assert_eq!(f.f1(), &form(gf2(), "x^3 + x^2*z + z^3"));
        assert_eq!(f.f2(), &form(gf2(), "x*z^3"));
        let g = viable_pair_seq(&t).unwrap();
        assert_eq!(g.f1(), &form(gf2(), "x^4 + x*z^3 + z^4"));
        assert_eq!(g.f2(), &form(gf2(), "x*z^4"));
        let meet = intersect_annihilators(&s, &t).unwrap();
        let expected = [
            form(gf2(), "x^6 + x^3*z^3 + x^2*z^4"),
            form(gf2(), "x^4*z + x*z^4 + z^5"),
            form(gf2(), "x*z^4"),
        ];
        assert!(form_same_ideal(&meet, &expected));

        let s = seq(gf2(), "1,0,0,1,1,1,0,1");
        let t = running_sequence();
        let meet = intersect_annihilators(&s, &t).unwrap();
        let expected = [
            form(gf2(), "x^6 + x^5*z + x^2*z^4 + z^6"),
            form(gf2(), "x^3*z^3 + x^2*z^4 + z^6"),
            form(gf2(), "x*z^5"),
            form(gf2(), "z^8"),
        ];
        assert!(form_same_ideal(&meet, &expected));
        assert!(is_annihilating(&uni(gf2(), "x^6 + x^5 + x^2 + 1"), &s));
        assert!(is_annihilating(&uni(gf2(), "x^6 + x^5 + x^2 + 1"), &t));

        assert!(intersect_annihilators(&seq(gf2(), "0,0"), &t).is_err());
    }

    #[test]
    fn hom_pair_rejects_inconsistent_degrees() {
        let p = BmPair::new(uni(q(), "x^2"), uni(q(), "x"));
        assert!(hom_pair(&p, 2).is_err());
        let f = hom_pair(&p, 3).unwrap();
        assert_eq!(f.f1(), &form(q(), "x^2"));
        assert_eq!(f.f2(), &form(q(), "x*z"));
    }

    #[test]
    fn synthesis_cost_respects_the_quadratic_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for n in [64u64, 256] {
            let s = random_seq(gf2(), n as usize, &mut rng);
            let cost = synthesis_cost(&s);
            assert!(cost <= 2 * (1 + n) + n * (n + 1) / 2);
        }
        assert_eq!(synthesis_cost(&seq(gf2(), "0,0,0")), 0);
    }
}
