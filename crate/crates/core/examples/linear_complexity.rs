//! Linear complexity and its profile, read straight off a sequence.

use annform::field::Field;
use annform::sequence::{lc_profile, linear_complexity, minimal_polynomial, SequenceRecord};

fn report(s: &SequenceRecord) {
    let profile: Vec<String> = lc_profile(s).iter().map(|c| c.to_string()).collect();
    println!("s = {s}");
    println!("  lc = {}", linear_complexity(s));
    println!("  profile = {}", profile.join(","));
    println!("  minimal polynomial = {}", minimal_polynomial(s));
}

fn main() {
    report(&SequenceRecord::parse(Field::Gf2, "1,0,0,1,1,0,1,0").unwrap());

    // A geometric sequence keeps complexity 1 at every prefix length.
    report(&SequenceRecord::parse(Field::gfp(7).unwrap(), "1,3,2,6,4").unwrap());

    // An impulse response needs the full length.
    report(&SequenceRecord::parse(Field::Gf2, "0,0,0,0,1").unwrap());
}
