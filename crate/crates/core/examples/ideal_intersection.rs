//! Intersects the annihilator ideals of two sequences via a syzygy
//! computation in a rank-5 free module, then reads off a polynomial that
//! annihilates both.

use annform::field::Field;
use annform::sequence::{intersect_annihilators, is_annihilating, SequenceRecord};
use annform::UniPoly;

fn seq(text: &str) -> SequenceRecord {
    SequenceRecord::parse(Field::Gf2, text).unwrap()
}

fn main() {
    let s = seq("1,0,0,1,1,1");
    let t = seq("1,0,0,0,1,0,0,1");
    println!("s = {s}");
    println!("t = {t}");
    println!("reduced basis of the intersection:");
    for g in intersect_annihilators(&s, &t).unwrap() {
        println!("  {g}");
    }
    println!();

    let u = seq("1,0,0,1,1,1,0,1");
    let v = seq("1,0,0,1,1,0,1,0");
    println!("u = {u}");
    println!("v = {v}");
    println!("reduced basis of the intersection:");
    for g in intersect_annihilators(&u, &v).unwrap() {
        println!("  {g}");
    }

    // The dehomogenised top generator annihilates both sequences.
    let shared = UniPoly::parse(Field::Gf2, "x^6 + x^5 + x^2 + 1").unwrap();
    assert!(is_annihilating(&shared, &u));
    assert!(is_annihilating(&shared, &v));
    println!("shared annihilating polynomial: {shared}");
}
