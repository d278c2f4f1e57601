//! Reduced Groebner bases from one extra reduction inside the same scan.

use annform::annihilator::reduced_gb;
use annform::field::Field;
use annform::groebner::form_is_reduced;
use annform::invform::InverseForm;

fn show(f: &InverseForm) {
    let basis = reduced_gb(f);
    println!("reduced basis for {f}:");
    for g in &basis {
        println!("  {g}");
    }
    println!("  confirmed reduced: {}", form_is_reduced(&basis));
}

fn main() {
    show(&InverseForm::parse(Field::Rational, "m=-2; F=2,1,2").unwrap());
    show(&InverseForm::parse(Field::Gf2, "m=-5; F=0,1,0,1,1,0").unwrap());
    show(&InverseForm::parse(Field::gfp(7).unwrap(), "m=-3; F=3,1,5,2").unwrap());
}
