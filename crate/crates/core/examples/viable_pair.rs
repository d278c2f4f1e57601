//! Computes the viable generator pair of an annihilator ideal and prints
//! the trace of the scan that produced it.

use annform::annihilator::form_vector;
use annform::field::Field;
use annform::invform::InverseForm;

fn main() {
    // The running example: a binary inverse form of degree -7.
    let f = InverseForm::parse(Field::Gf2, "m=-7; F=0,1,0,1,1,0,0,1").unwrap();
    let run = form_vector(&f);

    println!("F  = {f}");
    println!("f1 = {}", run.pair().f1());
    println!("f2 = {}", run.pair().f2());
    println!();
    print!("{}", run.trace_csv());
    println!();
    println!("lambda = {}", run.lambda());
    println!("dimension = {}", run.dimension());
    println!("multiplications = {}", run.multiplication_count());
    if let Some((degree, head, delta)) = run.triple() {
        println!("essential triple: m' = {degree}, f1' = {head}, delta1' = {delta}");
    }
}
