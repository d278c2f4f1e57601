//! Viable pairs and Groebner bases of annihilator ideals.
//!
//! The solver scans an inverse form one coefficient at a time, starting
//! from the pure-power basis pair `(x^{1-nu}, z)` at the order `nu` and
//! updating the pair through a discrepancy test at each lower degree.
//! Accumulating every intermediate generator yields the form vector, a
//! minimal homogeneous grlex Groebner basis of the ideal; a one-line
//! tail-reduction inside the loop upgrades it to the reduced basis.
//!
//! Alongside the pair the solver records a trace (one row per processed
//! degree), the degree vector listing when each basis element was last
//! active, the complexity profile, and the auxiliary triple that links
//! the second pair component to an earlier generator.

use crate::bipoly::Form;
use crate::field::FieldElement;
use crate::groebner;
use crate::invform::{annihilates, discrepancy, InverseForm};
use serde_json::json;

/// Ordered generator pair for the annihilator ideal of an inverse form.
///
/// Shape invariants are enforced at construction; whether the pair
/// actually generates the ideal of a given form is `is_viable`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViablePair {
    f1: Form,
    f2: Form,
    source_degree: i64,
}

impl ViablePair {
    /// Panics unless f1 is monic with z-free leading monomial, f2 is
    /// monic and divisible by z, and |f1| + |f2| = 2 - m.
    pub fn new(f1: Form, f2: Form, source_degree: i64) -> ViablePair {
        assert!(source_degree <= 0, "source degree must be non-positive");
        assert!(f1.is_phi(), "first component must be monic with z-free leading monomial");
        assert!(f2.is_monic() && f2.z_valuation() >= 1, "second component must be monic and divisible by z");
        assert_eq!(
            (f1.degree() + f2.degree()) as i64,
            2 - source_degree,
            "component degrees must sum to 2 - m"
        );
        ViablePair { f1, f2, source_degree }
    }

    pub fn f1(&self) -> &Form {
        &self.f1
    }

    pub fn f2(&self) -> &Form {
        &self.f2
    }

    /// Degree of the inverse form the pair was computed for.
    pub fn source_degree(&self) -> i64 {
        self.source_degree
    }

    /// The running difference |f2| - |f1| maintained by the solver.
    pub fn d(&self) -> i64 {
        self.f2.degree() as i64 - self.f1.degree() as i64
    }

    /// Generators of the intersection of the two pair ideals.
    pub fn intersect(&self, other: &ViablePair) -> Vec<Form> {
        groebner::intersect_ideals(
            &[self.f1.clone(), self.f2.clone()],
            &[other.f1.clone(), other.f2.clone()],
        )
    }
}

/// One solver step: the degree processed, the discrepancy ratio q
/// (absent on the basis row), the updated difference d, the exchange
/// flag B and the pair after the step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub i: i64,
    pub q: Option<FieldElement>,
    pub d: i64,
    pub b: bool,
    pub pair: (Form, Form),
}

/// Everything a full solver run produces.
#[derive(Clone, Debug)]
pub struct AnnihilatorResult {
    pair: ViablePair,
    form_vector: Vec<Form>,
    degree_vector: Vec<i64>,
    profile: Vec<usize>,
    triple: Option<(i64, Form, FieldElement)>,
    trace: Vec<TraceRow>,
    multiplications: u64,
}

impl AnnihilatorResult {
    pub fn pair(&self) -> &ViablePair {
        &self.pair
    }

    /// Minimal homogeneous Groebner basis accumulated by the run.
    pub fn form_vector(&self) -> &[Form] {
        &self.form_vector
    }

    /// Degrees at which each basis element was last the active f1.
    pub fn degree_vector(&self) -> &[i64] {
        &self.degree_vector
    }

    /// Minimal degree of a monic annihilator with z-free leading term.
    pub fn lambda(&self) -> usize {
        self.profile[0]
    }

    /// Profile entries for the subforms at degrees m ..= nu.
    pub fn lambda_profile(&self) -> &[usize] {
        &self.profile
    }

    /// Sum of the profile.
    pub fn big_lambda(&self) -> usize {
        self.profile.iter().sum()
    }

    /// Dimension of the quotient by the ideal as a vector space.
    pub fn dimension(&self) -> usize {
        let m = self.pair.source_degree;
        let lambda = self.lambda();
        let dim = self.pair.f1.degree() * self.pair.f2.degree();
        debug_assert_eq!(dim, self.big_lambda());
        debug_assert_eq!(dim, lambda * ((2 - m) as usize - lambda));
        dim
    }

    /// Auxiliary triple (m', f1', delta1'); absent when the source form
    /// is a unit or geometric.
    pub fn triple(&self) -> Option<&(i64, Form, FieldElement)> {
        self.triple.as_ref()
    }

    pub fn trace(&self) -> &[TraceRow] {
        &self.trace
    }

    /// Field multiplications charged by the solver's cost model: |f1|
    /// per discrepancy, |f2| more per non-zero discrepancy.
    pub fn multiplication_count(&self) -> u64 {
        self.multiplications
    }

    /// CSV rows of the trace; an absent q renders as "-".
    pub fn trace_csv(&self) -> String {
        let mut out = String::from("i,q,d,B,f1,f2\n");
        for row in &self.trace {
            let q = row.q.as_ref().map_or("-".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                row.i, q, row.d, row.b as u8, row.pair.0, row.pair.1
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "f1": self.pair.f1.to_string(),
            "f2": self.pair.f2.to_string(),
            "form_vector": self.form_vector.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "degree_vector": self.degree_vector,
            "lambda": self.lambda(),
            "dimension": self.dimension(),
        })
    }
}

/// The pair update `x^{max(d,0)} f1 - q x^{-min(d,0)} f2`.
///
/// Panics when q is zero or the arguments do not have the shape of a
/// solver pair with d = |f2| - |f1|.
pub fn ominus(f1: &Form, f2: &Form, d: i64, q: &FieldElement) -> Form {
    assert!(!q.is_zero(), "pair update needs a non-zero discrepancy ratio");
    assert!(f1.is_phi(), "first component must be monic with z-free leading monomial");
    assert!(f2.z_valuation() >= 1, "second component must be divisible by z");
    assert_eq!(d, f2.degree() as i64 - f1.degree() as i64, "d must be |f2| - |f1|");
    let lhs = f1.mul_x(d.max(0) as usize);
    let rhs = f2.mul_x((-d.min(0)) as usize).scale(q).unwrap();
    let out = lhs.sub(&rhs).expect("x-pure leading term cannot cancel");
    debug_assert!(out.is_phi() && out.degree() == f1.degree().max(f2.degree()));
    out
}

struct Run {
    forms: Vec<Form>,
    degs: Vec<i64>,
    profile: Vec<usize>,
    trace: Vec<TraceRow>,
    delta2: FieldElement,
    multiplications: u64,
}

/// Coefficient scan behind every public operation.  Works on the true
/// coefficients of an unnormalised form: the initial cached discrepancy
/// is F_nu rather than 1, which keeps every ratio q exact.
fn solve(f: &InverseForm, reduce: bool) -> Run {
    let field = f.field();
    let m = f.degree();
    let nu = f.order();
    let mut forms = vec![Form::x_power(field, (1 - nu) as usize), Form::z_power(field, 1)];
    let mut degs = vec![nu, nu + 1];
    let mut delta2 = f.coeff(nu);
    let mut d = nu;
    let mut g = f.subform(nu);
    let mut profile = vec![(1 - nu) as usize];
    let mut trace = vec![TraceRow {
        i: nu,
        q: None,
        d,
        b: false,
        pair: (forms[0].clone(), forms[1].clone()),
    }];
    let mut multiplications = 0u64;

    for i in (m..nu).rev() {
        g = g.augment(&f.coeff(i));
        debug_assert!(forms[0].degree() as i64 + i <= 0);
        let delta1 = discrepancy(&forms[0], &g);
        multiplications += forms[0].degree() as u64;
        let q = delta1.div(&delta2);
        if !delta1.is_zero() {
            multiplications += forms[1].degree() as u64;
            let head = ominus(&forms[0], &forms[1], d, &q);
            if d > 0 {
                let kept = std::mem::replace(&mut forms[0], head);
                forms.insert(1, kept);
                degs.insert(1, degs[0]);
                delta2 = delta1;
                d = -d;
            } else {
                forms[0] = head;
            }
        }
        degs[0] = i;
        for tail in forms.iter_mut().skip(1) {
            *tail = tail.mul_z(1);
        }
        d += 1;
        if reduce && d <= 0 {
            // Tail-reducing f1 by f2 after the update is all it takes to
            // keep the whole vector reduced.
            let head = groebner::form_remainder(&forms[0], &forms[1..2])
                .expect("z-free leading term survives tail reduction");
            forms[0] = head;
        }
        profile.push(forms[0].degree());
        trace.push(TraceRow {
            i,
            q: Some(q),
            d,
            b: false,
            pair: (forms[0].clone(), forms[1].clone()),
        });
        debug_assert_eq!(d, forms[1].degree() as i64 - forms[0].degree() as i64);
    }

    // A row's B flag marks the pair that the next step archives into f2:
    // the stored d is positive and the next discrepancy is non-zero.  On
    // the final row the flag reads the row's own q instead.
    let last = trace.len() - 1;
    for k in 0..=last {
        let next = if k < last { &trace[k + 1] } else { &trace[k] };
        let hot = next.q.as_ref().map_or(false, |v| !v.is_zero());
        trace[k].b = trace[k].d > 0 && hot;
    }

    // The degree vector brackets the run: strictly increasing from m to
    // nu + 1, with the profile strictly decreasing along it.
    assert_eq!(degs[0], m);
    assert_eq!(*degs.last().unwrap(), nu + 1);
    assert!(degs.windows(2).all(|w| w[0] < w[1]));
    let lambda_at = |i: i64| -> usize {
        if i > nu {
            0
        } else {
            profile[(nu - i) as usize]
        }
    };
    assert!(degs.windows(2).all(|w| lambda_at(w[0]) > lambda_at(w[1])));
    for (fj, nj) in forms.iter().zip(&degs) {
        let (xd, zd) = fj.exponent();
        assert_eq!(xd as usize, lambda_at(*nj), "leader x-degree must follow the profile");
        assert_eq!(zd as i64, nj - m, "leader z-degree must record the activation step");
    }

    profile.reverse();
    Run { forms, degs, profile, trace, delta2, multiplications }
}

fn result_from_run(run: Run, m: i64) -> AnnihilatorResult {
    let Run { forms, degs, profile, trace, delta2, multiplications } = run;
    let pair = ViablePair::new(forms[0].clone(), forms[1].clone(), m);
    let m_prime = degs[1];
    let triple = if m_prime <= 0 {
        let shift = (m_prime - m) as usize;
        assert_eq!(forms[1].z_valuation(), shift);
        let f1_prime = forms[1].div_z(shift);
        // The two pair degrees on either side of the last exchange add
        // up to 2 - m'.
        let lambda_prime = f1_prime.degree();
        assert_eq!((pair.f1.degree() + lambda_prime) as i64, 2 - m_prime);
        assert!(!delta2.is_zero());
        Some((m_prime, f1_prime, delta2))
    } else {
        None
    };
    AnnihilatorResult {
        pair,
        form_vector: forms,
        degree_vector: degs,
        profile,
        triple,
        trace,
        multiplications,
    }
}

/// Generator pair for the annihilator ideal of `f`.
pub fn viable_pair(f: &InverseForm) -> ViablePair {
    let run = solve(f, false);
    ViablePair::new(run.forms[0].clone(), run.forms[1].clone(), f.degree())
}

/// Full solver run: pair, form vector, degree vector, profile, triple
/// and trace.
pub fn form_vector(f: &InverseForm) -> AnnihilatorResult {
    result_from_run(solve(f, false), f.degree())
}

/// The unique reduced grlex Groebner basis of the annihilator ideal.
pub fn reduced_gb(f: &InverseForm) -> Vec<Form> {
    solve(f, true).forms
}

pub fn lambda(f: &InverseForm) -> usize {
    form_vector(f).lambda()
}

pub fn lambda_profile(f: &InverseForm) -> Vec<usize> {
    form_vector(f).lambda_profile().to_vec()
}

pub fn big_lambda(f: &InverseForm) -> usize {
    form_vector(f).big_lambda()
}

pub fn dimension(f: &InverseForm) -> usize {
    form_vector(f).dimension()
}

/// Auxiliary triple of `f`; `None` when `f` is a unit or geometric.
pub fn essential_triple(f: &InverseForm) -> Option<(i64, Form, FieldElement)> {
    form_vector(f).triple.clone()
}

/// Syzygy of the first three form-vector components, recovered by
/// dividing the S-polynomial of the pair by the rest of the basis.
///
/// Panics when the form vector has fewer than three components.
pub fn syzygy_triple(result: &AnnihilatorResult) -> (Form, Form, FieldElement) {
    let fv = result.form_vector();
    assert!(fv.len() >= 3, "syzygy triple needs at least three basis elements");
    let field = fv[0].field();
    let m = result.pair.source_degree;
    let m_prime = result.degree_vector[1];
    let p = (fv[0].exponent().0 - fv[1].exponent().0) as usize;

    let spol = groebner::form_spoly(&fv[0], &fv[1]).expect("pair S-polynomial is non-zero here");
    let (quotients, remainder) = groebner::form_divide(&spol, &fv[1..3]);
    assert!(remainder.is_none(), "pair S-polynomial must reduce to zero");

    let s1 = Form::z_power(field, (m_prime - m) as usize);
    let xp = Form::x_power(field, p);
    let s2 = match &quotients[0] {
        Some(a2) => xp.add(a2).expect("x^p cannot cancel against a z-divisible tail").neg(),
        None => xp.neg(),
    };
    let a3 = quotients[1].as_ref().expect("constant quotient present");
    assert_eq!(a3.degree(), 0, "third syzygy entry must be scalar");
    let s3 = a3.coeff_by_zpow(0).neg();

    // Shape: -x^p head, any further s2 terms divisible by z.
    assert!(s2.coeff_by_zpow(0).clone().neg().is_one());
    assert!(!s3.is_zero());
    let dot = groebner::Poly::from(&s1)
        .mul(&groebner::Poly::from(&fv[0]))
        .add(&groebner::Poly::from(&s2).mul(&groebner::Poly::from(&fv[1])))
        .add(&groebner::Poly::from(&fv[2]).scale(&s3));
    assert!(dot.is_zero(), "syzygy must annihilate the basis head");
    (s1, s2, s3)
}

/// Whether the pair generates exactly the annihilator ideal of `f`:
/// shape checks, annihilation, then mutual zero remainders between a
/// Groebner basis of the pair ideal and the reduced basis of the ideal.
pub fn is_viable(pair: &ViablePair, f: &InverseForm) -> bool {
    if pair.source_degree != f.degree() {
        return false;
    }
    if !annihilates(&pair.f1, f) || !annihilates(&pair.f2, f) {
        return false;
    }
    let generated = groebner::form_buchberger(&[pair.f1.clone(), pair.f2.clone()]);
    let target = reduced_gb(f);
    target.iter().all(|t| groebner::form_remainder(t, &generated).is_none())
        && generated.iter().all(|g| groebner::form_remainder(g, &target).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::groebner::{
        form_buchberger, form_is_groebner, form_is_minimal, form_is_reduced, form_reduce_gb,
        form_same_ideal, form_spoly, Poly,
    };
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf2() -> Field {
        Field::Gf2
    }

    fn q() -> Field {
        Field::Rational
    }

    fn form(field: Field, text: &str) -> Form {
        Form::parse(field, text).unwrap()
    }

    fn forms(field: Field, texts: &[&str]) -> Vec<Form> {
        texts.iter().map(|t| form(field, t)).collect()
    }

    fn invform(field: Field, text: &str) -> InverseForm {
        InverseForm::parse(field, text).unwrap()
    }

    fn random_invform<R: Rng>(field: Field, degree: i64, rng: &mut R) -> InverseForm {
        loop {
            let coeffs: Vec<_> = (degree..=0).map(|_| field.sample(rng)).collect();
            if let Some(f) = InverseForm::from_coeffs(degree, coeffs) {
                return f;
            }
        }
    }

    /// F_i = r^(-i) down to degree m, the annihilator of x - r z.
    fn geometric(r: &FieldElement, m: i64) -> InverseForm {
        let coeffs = (m..=0).map(|i| r.pow((-i) as u64)).collect();
        InverseForm::from_coeffs(m, coeffs).unwrap()
    }

    fn running_example() -> InverseForm {
        invform(gf2(), "m=-7; F=0,1,0,1,1,0,0,1")
    }

    /// Every GF(2) inverse form of the given degree, leading zeros included.
    fn all_gf2_invforms(degree: i64) -> Vec<InverseForm> {
        let field = gf2();
        let len = (1 - degree) as usize;
        (1u64..1 << len)
            .map(|bits| {
                let coeffs = (0..len)
                    .map(|k| if bits >> k & 1 == 1 { field.one() } else { field.zero() })
                    .collect();
                InverseForm::from_coeffs(degree, coeffs).unwrap()
            })
            .collect()
    }

    #[test]
    fn pure_powers_keep_the_basis_pair() {
        for field in [gf2(), Field::gfp(7).unwrap(), q()] {
            for m in [0i64, -1, -4] {
                let f = InverseForm::x_power(field, m);
                let result = form_vector(&f);
                assert_eq!(result.pair().f1(), &Form::x_power(field, (1 - m) as usize));
                assert_eq!(result.pair().f2(), &Form::z_power(field, 1));
                assert_eq!(result.degree_vector(), [m, m + 1]);
                assert_eq!(result.lambda_profile(), [(1 - m) as usize]);
                assert_eq!(result.dimension(), (1 - m) as usize);
                assert_eq!(result.trace().len(), 1);
                assert_eq!(result.trace()[0].q, None);
                if m < 0 {
                    let (mp, f1p, d1p) = result.triple().unwrap();
                    assert_eq!(*mp, m + 1);
                    assert_eq!(*f1p, Form::one(field));
                    assert!(d1p.is_one());
                } else {
                    assert!(result.triple().is_none());
                }
            }
        }
        // Scaling moves only the cached discrepancy, not the pair.
        let c = Field::gfp(7).unwrap().from_i64(4);
        let f = InverseForm::term(c.clone(), -3, 0);
        let result = form_vector(&f);
        assert_eq!(result.pair().f1(), &form(c.field(), "x^4"));
        assert_eq!(result.triple(), Some(&(-2, Form::one(c.field()), c)));
    }

    #[test]
    fn geometric_forms_give_a_binomial_and_a_power() {
        let cases = [
            (Field::gfp(7).unwrap(), 3i64, -4i64),
            (Field::gfp(3).unwrap(), 0, -3),
            (q(), 2, -3),
            (gf2(), 1, -5),
        ];
        for (field, r, m) in cases {
            let r = field.from_i64(r);
            let f = geometric(&r, m);
            assert_eq!(f.is_geometric(), Some(r.clone()));
            let result = form_vector(&f);
            let f1 = Form::from_coeffs(1, vec![field.one(), r.neg()]).unwrap();
            assert_eq!(result.pair().f1(), &f1);
            assert_eq!(result.pair().f2(), &Form::z_power(field, (1 - m) as usize));
            assert_eq!(result.degree_vector(), [m, 1]);
            assert!(result.lambda_profile().iter().all(|&l| l == 1));
            assert!(result.triple().is_none());
            // The pair shrugs off scaling of the whole form.
            let scaled = f.scale(&field.from_i64(5)).unwrap();
            assert_eq!(viable_pair(&scaled), *result.pair());
        }
    }

    #[test]
    fn trace_of_the_running_example() {
        let zero = gf2().zero();
        let one = gf2().one();
        let rows = [
            (0i64, None, 0i64, false, "x", "z"),
            (-1, Some(zero.clone()), 1, false, "x", "z^2"),
            (-2, Some(zero), 2, true, "x", "z^3"),
            (-3, Some(one.clone()), -1, false, "x^3 + z^3", "x*z"),
            (-4, Some(one.clone()), 0, false, "x^3 + x^2*z + z^3", "x*z^2"),
            (-5, Some(one.clone()), 1, true, "x^3 + x^2*z + x*z^2 + z^3", "x*z^3"),
            (-6, Some(one.clone()), 0, false, "x^4 + x^3*z + x^2*z^2", "x^3*z + x^2*z^2 + x*z^3 + z^4"),
            (-7, Some(one), 1, true, "x^4 + x*z^3 + z^4", "x^3*z^2 + x^2*z^3 + x*z^4 + z^5"),
        ];
        let expected: Vec<TraceRow> = rows
            .into_iter()
            .map(|(i, q, d, b, f1, f2)| TraceRow {
                i,
                q,
                d,
                b,
                pair: (form(gf2(), f1), form(gf2(), f2)),
            })
            .collect();
        assert_eq!(form_vector(&running_example()).trace(), expected);
    }

    #[test]
    fn form_vector_rows_of_the_running_example() {
        // Running the solver on the subform at degree i reproduces the
        // state after the full run has processed degree i.
        let f = running_example();
        let rows: [(i64, &[&str]); 8] = [
            (0, &["x", "z"]),
            (-1, &["x", "z^2"]),
            (-2, &["x", "z^3"]),
            (-3, &["x^3 + z^3", "x*z", "z^4"]),
            (-4, &["x^3 + x^2*z + z^3", "x*z^2", "z^5"]),
            (-5, &["x^3 + x^2*z + x*z^2 + z^3", "x*z^3", "z^6"]),
            (-6, &["x^4 + x^3*z + x^2*z^2", "x^3*z + x^2*z^2 + x*z^3 + z^4", "x*z^4", "z^7"]),
            (-7, &["x^4 + x*z^3 + z^4", "x^3*z^2 + x^2*z^3 + x*z^4 + z^5", "x*z^5", "z^8"]),
        ];
        for (i, expected) in rows {
            let result = form_vector(&f.subform(i));
            assert_eq!(result.form_vector(), forms(gf2(), expected), "at degree {i}");
        }
    }

    #[test]
    fn degree_vector_rows_of_the_running_example() {
        let f = running_example();
        let rows: [(i64, &[i64]); 8] = [
            (0, &[0, 1]),
            (-1, &[-1, 1]),
            (-2, &[-2, 1]),
            (-3, &[-3, -2, 1]),
            (-4, &[-4, -2, 1]),
            (-5, &[-5, -2, 1]),
            (-6, &[-6, -5, -2, 1]),
            (-7, &[-7, -5, -2, 1]),
        ];
        for (i, expected) in rows {
            let result = form_vector(&f.subform(i));
            assert_eq!(result.degree_vector(), expected, "at degree {i}");
        }
    }

    #[test]
    fn profile_of_the_running_example() {
        let result = form_vector(&running_example());
        assert_eq!(result.lambda_profile(), [4, 4, 3, 3, 3, 1, 1, 1]);
        assert_eq!(result.lambda(), 4);
        assert_eq!(result.big_lambda(), 20);
        assert_eq!(result.dimension(), 20);
    }

    #[test]
    fn prefixed_geometric_pair() {
        // The degree -3 subform of the running example in its own right.
        let f = invform(gf2(), "m=-3; F=1,0,0,1");
        let result = form_vector(&f);
        assert_eq!(result.form_vector(), forms(gf2(), &["x^3 + z^3", "x*z", "z^4"]));
        assert_eq!(result.degree_vector(), [-3, -2, 1]);
        assert_eq!(result.triple(), Some(&(-2, form(gf2(), "x"), gf2().one())));
    }

    #[test]
    fn reduced_basis_fixtures() {
        let over_q = invform(q(), "m=-2; F=2,1,2");
        assert_eq!(
            reduced_gb(&over_q),
            forms(q(), &["x^2 - z^2", "x*z - 1/2*z^2", "z^3"])
        );
        let bits = invform(gf2(), "m=-5; F=0,1,0,1,1,0");
        assert_eq!(
            reduced_gb(&bits),
            forms(gf2(), &["x^4 + x*z^3 + z^4", "x^2*z + x*z^2 + z^3", "z^5"])
        );
        // Pure powers and the running example are already reduced.
        let f = InverseForm::x_power(q(), -4);
        assert_eq!(reduced_gb(&f), forms(q(), &["x^5", "z"]));
        let f = running_example();
        assert_eq!(reduced_gb(&f), form_vector(&f).form_vector());
    }

    #[test]
    fn reduced_runs_match_the_generic_pipeline() {
        let mut rng = ChaCha8Rng::seed_from_u64(60);
        for field in [gf2(), Field::gfp(3).unwrap(), Field::gfp(7).unwrap(), q()] {
            let max = if field == q() { 8 } else { 12 };
            for _ in 0..10 {
                let m = -(rng.gen_range(1..=max) as i64);
                let f = random_invform(field, m, &mut rng);
                let reduced = reduced_gb(&f);
                assert!(form_is_reduced(&reduced));
                let pair = viable_pair(&f);
                let pipeline =
                    form_reduce_gb(&form_buchberger(&[pair.f1().clone(), pair.f2().clone()]));
                assert_eq!(reduced, pipeline);
                assert_eq!(reduced, form_reduce_gb(form_vector(&f).form_vector()));
            }
        }
    }

    #[test]
    fn triple_fixtures() {
        let result = form_vector(&running_example());
        assert_eq!(
            result.triple(),
            Some(&(-5, form(gf2(), "x^3 + x^2*z + x*z^2 + z^3"), gf2().one()))
        );
        let over_q = invform(q(), "m=-2; F=2,1,2");
        let (mp, f1p, d1p) = essential_triple(&over_q).unwrap();
        assert_eq!(mp, -1);
        assert_eq!(f1p, form(q(), "x - 1/2*z"));
        assert_eq!(d1p, q().parse_element("3/2").unwrap());
        // Units and geometric forms have no triple.
        assert!(essential_triple(&invform(q(), "m=0; F=5")).is_none());
        let f7 = Field::gfp(7).unwrap();
        let r = f7.from_i64(3);
        assert!(essential_triple(&geometric(&r, -4)).is_none());
    }

    #[test]
    fn triple_of_an_augmented_geometric_form() {
        // Append a wrong continuation a to a geometric form of degree m:
        // the triple becomes (m, x - r z, a - r^(1-m)).
        let f7 = Field::gfp(7).unwrap();
        let r = f7.from_i64(3);
        let m = -3i64;
        let wrong = f7.one();
        assert_ne!(wrong, r.pow((1 - m) as u64));
        let f = geometric(&r, m).augment(&wrong);
        let (mp, f1p, d1p) = essential_triple(&f).unwrap();
        assert_eq!(mp, m);
        assert_eq!(f1p, Form::from_coeffs(1, vec![f7.one(), r.neg()]).unwrap());
        assert_eq!(d1p, wrong.sub(&r.pow((1 - m) as u64)));
    }

    #[test]
    fn syzygy_fixtures() {
        let result = form_vector(&running_example());
        let fv = result.form_vector();
        assert_eq!(
            form_spoly(&fv[0], &fv[1]),
            Some(form(gf2(), "x^3*z^3 + x^2*z^4 + z^6"))
        );
        let (s1, s2, s3) = syzygy_triple(&result);
        assert_eq!(s1, form(gf2(), "z^2"));
        assert_eq!(s2, form(gf2(), "x + z"));
        assert!(s3.is_one());

        let result = form_vector(&invform(gf2(), "m=-5; F=0,1,0,1,1,0"));
        assert_eq!(
            result.form_vector(),
            forms(gf2(), &["x^4 + x^3*z + x^2*z^2 + z^4", "x^2*z + x*z^2 + z^3", "z^5"])
        );
        let (s1, s2, s3) = syzygy_triple(&result);
        assert_eq!(s1, form(gf2(), "z"));
        assert_eq!(s2, form(gf2(), "x^2"));
        assert!(s3.is_one());
    }

    #[test]
    fn syzygy_shape_on_random_runs() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for field in [gf2(), Field::gfp(7).unwrap(), q()] {
            let max = if field == q() { 8 } else { 12 };
            let mut seen = 0;
            while seen < 12 {
                let m = -(rng.gen_range(2..=max) as i64);
                let result = form_vector(&random_invform(field, m, &mut rng));
                if result.form_vector().len() < 3 {
                    continue;
                }
                seen += 1;
                let (s1, s2, _s3) = syzygy_triple(&result);
                let shift = result.degree_vector()[1] - m;
                assert_eq!(s1, Form::z_power(field, shift as usize));
                // Beyond the -x^p head every s2 term is divisible by z.
                let p = s2.exponent().0 as usize;
                if let Some(tail) = s2.add(&Form::x_power(field, p)) {
                    assert!(tail.z_valuation() >= 1);
                }
            }
        }
    }

    /// Monic degree-e candidates with z-free leading monomial, as bits
    /// over the e remaining coefficient slots.
    fn gf2_phi_candidates(e: usize) -> Vec<Form> {
        let field = gf2();
        (0u64..1 << e)
            .map(|bits| {
                let mut coeffs = vec![field.one()];
                coeffs.extend((0..e).map(|k| {
                    if bits >> k & 1 == 1 { field.one() } else { field.zero() }
                }));
                Form::from_coeffs(e, coeffs).unwrap()
            })
            .collect()
    }

    /// Monic degree-e candidates divisible by z.
    fn gf2_z_divisible_candidates(e: usize) -> Vec<Form> {
        let field = gf2();
        (1u64..1 << e)
            .map(|bits| {
                let mut coeffs = vec![field.zero()];
                coeffs.extend((0..e).map(|k| {
                    if bits >> k & 1 == 1 { field.one() } else { field.zero() }
                }));
                Form::from_coeffs(e, coeffs).unwrap().monic()
            })
            .collect()
    }

    #[test]
    fn uniqueness_trichotomy_over_gf2() {
        // f1 is the unique minimal annihilator with z-free leading term
        // exactly when |f1| < |f2|, and then f2 is never unique in its
        // own shape class; below the minimal degree nothing annihilates.
        for m in -9..=0i64 {
            for f in all_gf2_invforms(m) {
                let result = form_vector(&f);
                let pair = result.pair();
                let lambda = result.lambda();
                for e in 0..lambda {
                    assert!(gf2_phi_candidates(e).iter().all(|c| !annihilates(c, &f)));
                }
                let head_count = gf2_phi_candidates(lambda)
                    .iter()
                    .filter(|c| annihilates(c, &f))
                    .count();
                let tail_count = gf2_z_divisible_candidates(pair.f2().degree())
                    .iter()
                    .filter(|c| annihilates(c, &f))
                    .count();
                assert!(annihilates(pair.f1(), &f) && annihilates(pair.f2(), &f));
                let narrow = pair.d() > 0;
                assert_eq!(narrow, 2 * lambda < (2 - m) as usize);
                assert_eq!(narrow, head_count == 1);
                assert_eq!(narrow, tail_count >= 2);
                if !narrow {
                    assert_eq!(tail_count, 1);
                    assert!(head_count >= 2);
                }
            }
        }
    }

    #[test]
    fn lambda_is_monotone_under_augmentation() {
        for m in -8..=0i64 {
            for f in all_gf2_invforms(m) {
                let result = form_vector(&f);
                let profile = result.lambda_profile();
                assert!(profile.windows(2).all(|w| w[0] >= w[1]));
                for a in [gf2().zero(), gf2().one()] {
                    assert!(lambda(&f.augment(&a)) >= result.lambda());
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        for field in [Field::gfp(7).unwrap(), q()] {
            for _ in 0..20 {
                let m = -(rng.gen_range(1..=8) as i64);
                let f = random_invform(field, m, &mut rng);
                let a = field.sample(&mut rng);
                assert!(lambda(&f.augment(&a)) >= lambda(&f));
            }
        }
    }

    #[test]
    fn basis_length_and_stability_bounds() {
        let mut perfect_seen = 0usize;
        for m in -7..=0i64 {
            for f in all_gf2_invforms(m) {
                let result = form_vector(&f);
                let lambda = result.lambda();
                assert!(result.form_vector().len() <= lambda + 1);
                // Generic profile: a new element every other degree.
                let perfect: Vec<usize> =
                    (m..=f.order()).map(|i| ((2 - i) / 2) as usize).collect();
                if result.lambda_profile() == perfect {
                    perfect_seen += 1;
                    assert_eq!(result.form_vector().len(), lambda + 1);
                }
                let spread = (2 - m) as usize;
                assert!(4 * result.big_lambda() <= spread * spread);
                assert_eq!(4 * result.big_lambda() == spread * spread, 2 * lambda == spread);
            }
        }
        assert!(perfect_seen > 0, "the equality case must be exercised");
    }

    #[test]
    fn form_vector_is_a_minimal_groebner_basis() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        for field in [gf2(), Field::gfp(3).unwrap(), Field::gfp(7).unwrap(), q()] {
            let max = if field == q() { 8 } else { 12 };
            for _ in 0..15 {
                let m = -(rng.gen_range(1..=max) as i64);
                let f = random_invform(field, m, &mut rng);
                let result = form_vector(&f);
                let fv = result.form_vector();
                assert!(form_is_groebner(fv));
                assert!(form_is_minimal(fv));
                assert!(fv.iter().all(|g| annihilates(g, &f)));
                let pair = [result.pair().f1().clone(), result.pair().f2().clone()];
                assert!(form_same_ideal(fv, &pair));
                assert!(is_viable(result.pair(), &f));
            }
        }
    }

    #[test]
    fn ideal_members_annihilate_componentwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(64);
        for field in [gf2(), Field::gfp(7).unwrap()] {
            for _ in 0..15 {
                let m = -(rng.gen_range(1..=10) as i64);
                let f = random_invform(field, m, &mut rng);
                let fv = form_vector(&f);
                let mut member = Poly::zero();
                for g in fv.form_vector() {
                    let cofactor = Poly::from_terms(
                        (0..3)
                            .map(|_| {
                                let mono = crate::bipoly::Monomial::new(
                                    rng.gen_range(0..3),
                                    rng.gen_range(0..3),
                                );
                                (mono, field.sample(&mut rng))
                            })
                            .collect(),
                    );
                    member = member.add(&cofactor.mul(&Poly::from(g)));
                }
                for component in member.homogeneous_components() {
                    assert!(annihilates(&component, &f));
                }
            }
        }
    }

    #[test]
    fn is_viable_rejects_wrong_pairs() {
        // A pair can annihilate without generating: (x^3, x z) misses
        // z^4 from the ideal of the padded unit.
        let f = invform(gf2(), "m=-3; F=0,0,0,1");
        let wide = ViablePair::new(form(gf2(), "x^3"), form(gf2(), "x*z"), -3);
        assert!(annihilates(wide.f1(), &f) && annihilates(wide.f2(), &f));
        assert!(!is_viable(&wide, &f));
        assert!(is_viable(&viable_pair(&f), &f));
        // Degree mismatch and a pair of a different form both fail.
        let running = viable_pair(&running_example());
        assert!(!is_viable(&running, &f));
        let ones = geometric(&gf2().one(), -7);
        assert!(!is_viable(&running, &ones));
    }

    #[test]
    fn multiplication_count_respects_the_quadratic_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(65);
        for n in [64i64, 128] {
            for _ in 0..3 {
                let f = random_invform(gf2(), 1 - n, &mut rng);
                let count = form_vector(&f).multiplication_count();
                assert!(count > 0);
                assert!(count <= (2 * (1 + n) + n * (n + 1) / 2) as u64);
            }
        }
    }

    #[test]
    fn ominus_examples() {
        let f7 = Field::gfp(7).unwrap();
        assert_eq!(
            ominus(&form(f7, "x + 4*z"), &form(f7, "z^3"), 2, &f7.from_i64(5)),
            form(f7, "x^3 + 4*x^2*z + 2*z^3")
        );
        assert_eq!(
            ominus(&form(gf2(), "x^2 + x*z + z^2"), &form(gf2(), "z^4"), 2, &gf2().one()),
            form(gf2(), "x^4 + x^3*z + x^2*z^2 + z^4")
        );
        assert_eq!(
            ominus(
                &form(gf2(), "x^3 + x^2*z + z^3"),
                &form(gf2(), "x*z^2"),
                0,
                &gf2().one()
            ),
            form(gf2(), "x^3 + x^2*z + x*z^2 + z^3")
        );
    }

    #[test]
    #[should_panic(expected = "non-zero discrepancy")]
    fn ominus_rejects_a_zero_ratio() {
        ominus(&form(gf2(), "x"), &form(gf2(), "z"), 0, &gf2().zero());
    }

    #[test]
    fn trace_csv_and_json_round_out_the_run() {
        let result = form_vector(&running_example());
        let csv = result.trace_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "i,q,d,B,f1,f2");
        assert_eq!(lines[1], "0,-,0,0,x,z");
        assert_eq!(
            lines[8],
            "-7,1,1,1,x^4 + x*z^3 + z^4,x^3*z^2 + x^2*z^3 + x*z^4 + z^5"
        );
        let json = result.to_json();
        assert_eq!(json["f1"], "x^4 + x*z^3 + z^4");
        assert_eq!(json["degree_vector"], serde_json::json!([-7, -5, -2, 1]));
        assert_eq!(json["lambda"], 4);
        assert_eq!(json["dimension"], 20);
        assert_eq!(json["form_vector"][3], "z^8");
    }
}
