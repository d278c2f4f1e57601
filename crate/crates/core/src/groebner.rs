//! Grlex Groebner machinery over k[x, z] and over free modules R^e.
//!
//! The ideal-level half (S-polynomials, fixed-order division, Buchberger,
//! minimal and reduced bases) doubles as an independent check on the
//! closed-form bases the solver produces. The module-level half computes
//! syzygies by tagged lifting under a position-over-term order and powers
//! the intersection of two annihilator ideals.
//!
//! A [`Poly`] is a possibly zero, possibly non-homogeneous bivariate
//! polynomial; forms convert in and, when homogeneous, back out. Division
//! always walks the divisor list in its given order, so remainders are
//! deterministic; against a Groebner basis they are canonical normal
//! forms.

use std::collections::HashSet;
use std::fmt;

use crate::bipoly::{format_terms, parse_terms, Form, Monomial, ParseError};
use crate::field::{Field, FieldElement};

/// A bivariate polynomial: nonzero terms in decreasing grlex order, the
/// empty list being zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    terms: Vec<(Monomial, FieldElement)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    /// The single term c * m; `c` must be nonzero.
    pub fn term(m: Monomial, c: FieldElement) -> Poly {
        assert!(!c.is_zero(), "a term needs a nonzero coefficient");
        Poly { terms: vec![(m, c)] }
    }

    /// Normalises an arbitrary term list: sorts, merges equal monomials,
    /// drops zero coefficients.
    pub fn from_terms(terms: Vec<(Monomial, FieldElement)>) -> Poly {
        let mut terms = terms;
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Monomial, FieldElement)> = Vec::new();
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Poly { terms: merged }
    }

    /// Parses polynomial text; `0` parses to zero, homogeneity is not
    /// required.
    pub fn parse(field: Field, text: &str) -> Result<Poly, ParseError> {
        Ok(Poly::from_terms(parse_terms(field, text)?))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn field(&self) -> Option<Field> {
        self.terms.first().map(|(_, c)| c.field())
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    /// The grlex-greatest term; panics on zero.
    pub fn leading(&self) -> (Monomial, &FieldElement) {
        let (m, c) = self.terms.first().expect("the zero polynomial has no leading term");
        (*m, c)
    }

    fn without_leading(&self) -> Poly {
        Poly {
            terms: self.terms[1..].to_vec(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((*ma, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((*mb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((*ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    /// Multiplies by a scalar; zero collapses to the zero polynomial.
    pub fn scale(&self, c: &FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by the term c * m; `c` must be nonzero.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Poly {
        assert!(!c.is_zero(), "a term needs a nonzero coefficient");
        Poly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, c));
        }
        acc
    }

    /// Divides through by the leading coefficient; panics on zero.
    pub fn monic(&self) -> Poly {
        let (_, lc) = self.leading();
        if lc.is_one() {
            self.clone()
        } else {
            self.scale(&lc.inv())
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.total_degree();
                self.terms.iter().all(|(t, _)| t.total_degree() == d)
            }
        }
    }

    /// Converts a homogeneous polynomial back to a form; `None` on zero,
    /// panics when the terms mix degrees.
    pub fn as_form(&self) -> Option<Form> {
        if self.is_zero() {
            return None;
        }
        assert!(self.is_homogeneous(), "polynomial is not homogeneous");
        let degree = self.terms[0].0.total_degree() as usize;
        let field = self.field().unwrap();
        let mut coeffs = vec![field.zero(); degree + 1];
        for (m, c) in &self.terms {
            coeffs[m.zdeg as usize] = c.clone();
        }
        Form::from_coeffs(degree, coeffs)
    }

    /// The homogeneous components as forms, in decreasing degree.
    pub fn homogeneous_components(&self) -> Vec<Form> {
        let mut degrees: Vec<u32> = self.terms.iter().map(|(m, _)| m.total_degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .rev()
            .map(|d| {
                Poly {
                    terms: self
                        .terms
                        .iter()
                        .filter(|(m, _)| m.total_degree() == d)
                        .cloned()
                        .collect(),
                }
                .as_form()
                .unwrap()
            })
            .collect()
    }
}

impl From<&Form> for Poly {
    fn from(f: &Form) -> Poly {
        Poly { terms: f.terms() }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(&self.terms, f)
    }
}

/// The S-polynomial on leading terms: (L/LT(g))g - (L/LT(h))h with L the
/// lcm of the leading monomials.
pub fn spoly(g: &Poly, h: &Poly) -> Poly {
    let (mg, cg) = g.leading();
    let (mh, ch) = h.leading();
    let l = mg.lcm(&mh);
    let a = g.mul_term(&l.div(&mg), &cg.inv());
    let b = h.mul_term(&l.div(&mh), &ch.inv());
    a.sub(&b)
}

/// Multivariate division in the fixed order of `divisors`: returns the
/// quotients and the remainder, with phi = sum(q_i * d_i) + r and no
/// remainder monomial divisible by any divisor's leading monomial.
pub fn divide(phi: &Poly, divisors: &[Poly]) -> (Vec<Poly>, Poly) {
    assert!(
        divisors.iter().all(|d| !d.is_zero()),
        "division requires nonzero divisors"
    );
    let mut quotients = vec![Poly::zero(); divisors.len()];
    let mut rem = Vec::new();
    let mut p = phi.clone();
    'outer: while !p.is_zero() {
        let (m, c) = p.leading();
        let c = c.clone();
        for (k, d) in divisors.iter().enumerate() {
            let (dm, dc) = d.leading();
            if dm.divides(&m) {
                let qm = m.div(&dm);
                let qc = &c * &dc.inv();
                quotients[k] = quotients[k].add(&Poly::term(qm, qc.clone()));
                p = p.sub(&d.mul_term(&qm, &qc));
                continue 'outer;
            }
        }
        // The leading term moves to the remainder; later terms are smaller,
        // so the collected list stays sorted.
        rem.push((m, c));
        p = p.without_leading();
    }
    (quotients, Poly { terms: rem })
}

/// The division remainder alone.
pub fn remainder(phi: &Poly, divisors: &[Poly]) -> Poly {
    divide(phi, divisors).1
}

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// coprime-leader and chain criteria. Output elements are monic, in
/// insertion order.
pub fn buchberger(gens: &[Poly]) -> Vec<Poly> {
    assert!(!gens.is_empty(), "cannot take a basis of no generators");
    assert!(gens.iter().all(|g| !g.is_zero()), "generators must be nonzero");
    let mut basis: Vec<Poly> = gens.iter().map(|g| g.monic()).collect();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let mut handled: HashSet<(usize, usize)> = HashSet::new();
    while !pending.is_empty() {
        // Normal strategy: smallest lcm first, ties by index.
        let lcm_of = |&(i, j): &(usize, usize)| -> Monomial {
            basis[i].leading().0.lcm(&basis[j].leading().0)
        };
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| lcm_of(a).cmp(&lcm_of(b)).then(a.cmp(b)))
            .map(|(k, _)| k)
            .unwrap();
        let (i, j) = pending.swap_remove(best);
        handled.insert((i, j));
        let mi = basis[i].leading().0;
        let mj = basis[j].leading().0;
        if mi.is_coprime_with(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading().0.divides(&l)
                && handled.contains(&(i.min(k), i.max(k)))
                && handled.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let r = remainder(&spoly(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let new = basis.len() - 1;
            for t in 0..new {
                pending.push((t, new));
            }
        }
    }
    basis
}

/// True when every S-polynomial of the list reduces to zero against it.
pub fn is_groebner(basis: &[Poly]) -> bool {
    for j in 1..basis.len() {
        for i in 0..j {
            if !remainder(&spoly(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Strips elements whose leading monomial another element's leader
/// divides, and makes the rest monic; on a Groebner basis this yields a
/// minimal one. Output in decreasing leader x-degree, the order bases are
/// conventionally listed in.
pub fn minimalize(basis: &[Poly]) -> Vec<Poly> {
    let mut sorted: Vec<&Poly> = basis.iter().collect();
    sorted.sort_by(|a, b| a.leading().0.cmp(&b.leading().0));
    let mut kept: Vec<Poly> = Vec::new();
    for g in sorted {
        let lm = g.leading().0;
        if !kept.iter().any(|k| k.leading().0.divides(&lm)) {
            kept.push(g.monic());
        }
    }
    kept.sort_by(|a, b| b.leading().0.xdeg.cmp(&a.leading().0.xdeg));
    kept
}

/// The unique reduced Groebner basis of the ideal the input basis
/// generates: minimal, monic, every tail in normal form, in decreasing
/// leader x-degree order.
pub fn reduce_gb(basis: &[Poly]) -> Vec<Poly> {
    let mut out = minimalize(basis);
    loop {
        let mut changed = false;
        for k in 0..out.len() {
            let rest: Vec<Poly> = out
                .iter()
                .enumerate()
                .filter(|(t, _)| *t != k)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = remainder(&out[k], &rest);
            assert!(!reduced.is_zero(), "a minimal basis element cannot reduce away");
            if reduced != out[k] {
                out[k] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    out
}

/// True for a monic Groebner basis with pairwise non-divisible leaders.
pub fn is_minimal(basis: &[Poly]) -> bool {
    let monic = basis.iter().all(|g| g.leading().1.is_one());
    let independent = basis.iter().enumerate().all(|(k, g)| {
        let lm = g.leading().0;
        basis
            .iter()
            .enumerate()
            .all(|(t, h)| t == k || !h.leading().0.divides(&lm))
    });
    monic && independent && is_groebner(basis)
}

/// True for a minimal basis in which no monomial of any element lies in
/// the leading ideal of the others.
pub fn is_reduced(basis: &[Poly]) -> bool {
    if !is_minimal(basis) {
        return false;
    }
    basis.iter().enumerate().all(|(k, g)| {
        g.terms().iter().all(|(m, _)| {
            basis
                .iter()
                .enumerate()
                .all(|(t, h)| t == k || !h.leading().0.divides(m))
        })
    })
}

/// True when the two generator lists generate the same ideal, by mutual
/// reduction against each other's bases.
pub fn same_ideal(a: &[Poly], b: &[Poly]) -> bool {
    let ga = buchberger(a);
    if !b.iter().all(|p| remainder(p, &ga).is_zero()) {
        return false;
    }
    let gb = buchberger(b);
    a.iter().all(|p| remainder(p, &gb).is_zero())
}

/// A module term: a monomial sitting in one position of R^e.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModuleTerm {
    /// Zero-based position; lower positions dominate.
    pub position: usize,
    pub monomial: Monomial,
}

/// Position over term: a term in a lower position beats any term in a
/// higher one; ties fall back to grlex.
impl Ord for ModuleTerm {
    fn cmp(&self, other: &ModuleTerm) -> std::cmp::Ordering {
        other
            .position
            .cmp(&self.position)
            .then(self.monomial.cmp(&other.monomial))
    }
}

impl PartialOrd for ModuleTerm {
    fn partial_cmp(&self, other: &ModuleTerm) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl ModuleTerm {
    pub fn divides(&self, other: &ModuleTerm) -> bool {
        self.position == other.position && self.monomial.divides(&other.monomial)
    }
}

/// An element of R^e for a fixed e: one polynomial per position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVector {
    components: Vec<Poly>,
}

impl PolyVector {
    pub fn new(components: Vec<Poly>) -> PolyVector {
        assert!(!components.is_empty(), "a module element needs a positive rank");
        PolyVector { components }
    }

    pub fn zeros(e: usize) -> PolyVector {
        PolyVector::new(vec![Poly::zero(); e])
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn component(&self, k: usize) -> &Poly {
        &self.components[k]
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    /// The position-over-term leading term and its coefficient.
    pub fn leading(&self) -> Option<(ModuleTerm, FieldElement)> {
        let position = self.components.iter().position(|p| !p.is_zero())?;
        let (monomial, c) = self.components[position].leading();
        Some((ModuleTerm { position, monomial }, c.clone()))
    }

    pub fn add(&self, other: &PolyVector) -> PolyVector {
        assert_eq!(self.len(), other.len(), "module ranks differ");
        PolyVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &PolyVector) -> PolyVector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyVector {
        PolyVector {
            components: self.components.iter().map(|p| p.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> PolyVector {
        PolyVector {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> PolyVector {
        PolyVector {
            components: self.components.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn monic(&self) -> PolyVector {
        let (_, lc) = self.leading().expect("the zero vector cannot be made monic");
        if lc.is_one() {
            self.clone()
        } else {
            self.scale(&lc.inv())
        }
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Reduces a vector against a basis under position-over-term: whenever a
/// basis leader divides the current leading term the step is performed,
/// otherwise the term drops into the remainder.
pub fn vector_remainder(u: &PolyVector, basis: &[PolyVector]) -> PolyVector {
    let mut p = u.clone();
    let mut rem = vec![Poly::zero(); u.len()];
    while let Some((t, c)) = p.leading() {
        let hit = basis.iter().find(|b| match b.leading() {
            Some((bt, _)) => bt.divides(&t),
            None => false,
        });
        match hit {
            Some(b) => {
                let (bt, bc) = b.leading().unwrap();
                let qm = t.monomial.div(&bt.monomial);
                let qc = &c * &bc.inv();
                p = p.sub(&b.mul_term(&qm, &qc));
            }
            None => {
                rem[t.position] = rem[t.position].add(&Poly::term(t.monomial, c));
                let mut components = p.components;
                components[t.position] = components[t.position].without_leading();
                p = PolyVector { components };
            }
        }
    }
    PolyVector::new(rem)
}

/// Buchberger over R^e under position-over-term. Only pairs whose leaders
/// share a position have an S-vector; no further pair criteria are used,
/// as the ideal-case ones do not carry over to modules.
pub fn module_groebner(rows: &[PolyVector]) -> Vec<PolyVector> {
    assert!(!rows.is_empty(), "cannot take a basis of no generators");
    assert!(rows.iter().all(|r| !r.is_zero()), "generators must be nonzero");
    let e = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == e), "module ranks differ");
    let mut basis: Vec<PolyVector> = rows.iter().map(|r| r.monic()).collect();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let enqueue = |pending: &mut Vec<(usize, usize)>, basis: &[PolyVector], j: usize| {
        for i in 0..j {
            let (ti, _) = basis[i].leading().unwrap();
            let (tj, _) = basis[j].leading().unwrap();
            if ti.position == tj.position {
                pending.push((i, j));
            }
        }
    };
    for j in 1..basis.len() {
        enqueue(&mut pending, &basis, j);
    }
    while !pending.is_empty() {
        let lcm_of = |&(i, j): &(usize, usize)| -> Monomial {
            let (ti, _) = basis[i].leading().unwrap();
            let (tj, _) = basis[j].leading().unwrap();
            ti.monomial.lcm(&tj.monomial)
        };
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| lcm_of(a).cmp(&lcm_of(b)).then(a.cmp(b)))
            .map(|(k, _)| k)
            .unwrap();
        let (i, j) = pending.swap_remove(best);
        let (ti, _) = basis[i].leading().unwrap();
        let (tj, _) = basis[j].leading().unwrap();
        let l = ti.monomial.lcm(&tj.monomial);
        // Basis elements are monic, so the S-vector needs no coefficients.
        let one = basis[i].leading().unwrap().1.field().one();
        let s = basis[i]
            .mul_term(&l.div(&ti.monomial), &one)
            .sub(&basis[j].mul_term(&l.div(&tj.monomial), &one));
        if s.is_zero() {
            continue;
        }
        let r = vector_remainder(&s, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let j = basis.len() - 1;
            enqueue(&mut pending, &basis, j);
        }
    }
    basis
}

/// Generators of the syzygy module of `rows`: vectors w with
/// sum(w_k * rows_k) = 0. Each row is tagged with a unit vector appended
/// after the image positions; position-over-term then eliminates the
/// image, and basis elements leading in a tag position are syzygies.
pub fn syzygy_basis(rows: &[PolyVector]) -> Vec<PolyVector> {
    assert!(!rows.is_empty(), "cannot take syzygies of no generators");
    let e = rows[0].len();
    let s = rows.len();
    let field = rows
        .iter()
        .find_map(|r| r.components().iter().find_map(|p| p.field()))
        .expect("generators must be nonzero");
    let tagged: Vec<PolyVector> = rows
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let mut components = r.components().to_vec();
            components.resize(e + s, Poly::zero());
            components[e + k] = Poly::term(Monomial::new(0, 0), field.one());
            PolyVector::new(components)
        })
        .collect();
    module_groebner(&tagged)
        .into_iter()
        .filter(|v| v.leading().unwrap().0.position >= e)
        .map(|v| PolyVector::new(v.components()[e..].to_vec()))
        .collect()
}

/// Generators of the intersection of two homogeneous ideals, given
/// generators of each: syzygies of the rows [1,1], [f_i,0], [0,g_j] are
/// computed in R^(1+|f|+|g|), and their first coordinates generate the
/// intersection. Output is split into homogeneous forms.
pub fn intersect_ideals(f: &[Form], g: &[Form]) -> Vec<Form> {
    assert!(!f.is_empty() && !g.is_empty(), "intersection needs generators on both sides");
    let field = f[0].field();
    let one = Poly::term(Monomial::new(0, 0), field.one());
    let mut rows = vec![PolyVector::new(vec![one.clone(), one])];
    for p in f {
        rows.push(PolyVector::new(vec![Poly::from(p), Poly::zero()]));
    }
    for p in g {
        rows.push(PolyVector::new(vec![Poly::zero(), Poly::from(p)]));
    }
    let mut out = Vec::new();
    for w in syzygy_basis(&rows) {
        let first = w.component(0);
        if !first.is_zero() {
            out.extend(first.homogeneous_components());
        }
    }
    // The raw first components generate the intersection but carry syzygy
    // debris and need not form a basis; hand back the canonical reduced
    // basis instead.
    let polys: Vec<Poly> = out.iter().map(Poly::from).collect();
    reduce_gb(&buchberger(&polys))
        .iter()
        .map(|p| p.as_form().unwrap())
        .collect()
}

/// Form-level wrappers for homogeneous inputs.
pub fn form_spoly(g: &Form, h: &Form) -> Option<Form> {
    spoly(&Poly::from(g), &Poly::from(h)).as_form()
}

pub fn form_divide(phi: &Form, divisors: &[Form]) -> (Vec<Option<Form>>, Option<Form>) {
    let list: Vec<Poly> = divisors.iter().map(Poly::from).collect();
    let (quotients, rem) = divide(&Poly::from(phi), &list);
    (quotients.iter().map(|q| q.as_form()).collect(), rem.as_form())
}

pub fn form_remainder(phi: &Form, divisors: &[Form]) -> Option<Form> {
    form_divide(phi, divisors).1
}

pub fn form_buchberger(gens: &[Form]) -> Vec<Form> {
    let list: Vec<Poly> = gens.iter().map(Poly::from).collect();
    buchberger(&list).iter().map(|p| p.as_form().unwrap()).collect()
}

pub fn form_reduce_gb(gens: &[Form]) -> Vec<Form> {
    let list: Vec<Poly> = gens.iter().map(Poly::from).collect();
    reduce_gb(&list).iter().map(|p| p.as_form().unwrap()).collect()
}

pub fn form_is_groebner(basis: &[Form]) -> bool {
    is_groebner(&basis.iter().map(Poly::from).collect::<Vec<_>>())
}

pub fn form_is_minimal(basis: &[Form]) -> bool {
    is_minimal(&basis.iter().map(Poly::from).collect::<Vec<_>>())
}

pub fn form_is_reduced(basis: &[Form]) -> bool {
    is_reduced(&basis.iter().map(Poly::from).collect::<Vec<_>>())
}

pub fn form_same_ideal(a: &[Form], b: &[Form]) -> bool {
    same_ideal(
        &a.iter().map(Poly::from).collect::<Vec<_>>(),
        &b.iter().map(Poly::from).collect::<Vec<_>>(),
    )
}
