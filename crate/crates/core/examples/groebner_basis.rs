//! The accumulated generators form a minimal Groebner basis without any
//! reduction step; an independent Buchberger run confirms it.

use annform::annihilator::form_vector;
use annform::field::Field;
use annform::groebner::{form_buchberger, form_is_groebner, form_is_minimal, form_same_ideal};
use annform::invform::InverseForm;

fn main() {
    let f = InverseForm::parse(Field::Gf2, "m=-7; F=0,1,0,1,1,0,0,1").unwrap();
    let run = form_vector(&f);

    println!("basis of the annihilator ideal of {f}:");
    for g in run.form_vector() {
        println!("  {g}");
    }
    println!("degree vector = {:?}", run.degree_vector());
    println!("lambda profile = {:?}", run.lambda_profile());

    println!("is Groebner: {}", form_is_groebner(run.form_vector()));
    println!("is minimal:  {}", form_is_minimal(run.form_vector()));
    let direct = form_buchberger(run.form_vector());
    println!(
        "same ideal as a fresh Buchberger closure: {}",
        form_same_ideal(run.form_vector(), &direct)
    );
}
