//! Spot-checks the fast paths against the deliberately naive oracles.

use annform::annihilator::{dimension, form_vector, lambda};
use annform::field::Field;
use annform::invform::{annihilates, InverseForm};
use annform::oracle::{
    exhaustive_lambda, exhaustive_lc, laurent_annihilation_check, standard_monomial_count,
};
use annform::sequence::{linear_complexity, SequenceRecord};

fn main() {
    let f = InverseForm::parse(Field::Gf2, "m=-7; F=0,1,0,1,1,0,0,1").unwrap();
    let run = form_vector(&f);

    // Full Laurent products against windowed dot products.
    for g in run.form_vector() {
        assert!(laurent_annihilation_check(g, &f));
        assert!(annihilates(g, &f));
    }
    println!("laurent products agree on every basis element");

    // Smallest annihilating degree by enumerating all candidates.
    println!(
        "lambda: solver {} / exhaustive {}",
        lambda(&f),
        exhaustive_lambda(&f).unwrap()
    );

    // Dimension by counting lattice points under the leader staircase.
    println!(
        "dimension: solver {} / lattice count {}",
        dimension(&f),
        standard_monomial_count(run.form_vector(), f.degree()).unwrap()
    );

    // Linear complexity by enumerating annihilating polynomials.
    let s = SequenceRecord::parse(Field::Gf2, "1,0,0,1,1,0,1,0").unwrap();
    println!(
        "complexity: solver {} / exhaustive {}",
        linear_complexity(&s),
        exhaustive_lc(&s).unwrap()
    );

    // The searches refuse work beyond their budget instead of guessing.
    let long = vec!["1"; 15].join(",");
    let refused = exhaustive_lc(&SequenceRecord::parse(Field::Gf2, &long).unwrap());
    println!("oversized request: {}", refused.unwrap_err());
}
