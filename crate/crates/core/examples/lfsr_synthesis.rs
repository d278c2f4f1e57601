//! LFSR synthesis two ways: the bivariate pair solver and a univariate
//! Berlekamp-Massey-style loop, linked exactly by dehomogenisation.

use annform::field::Field;
use annform::sequence::{bm_variant, dehom_pair, hom_pair, viable_pair_seq, SequenceRecord};

fn main() {
    let s = SequenceRecord::parse(Field::Gf2, "1,0,0,1,1,0,1,0").unwrap();
    println!("s = {s}");

    let pair = viable_pair_seq(&s).expect("nontrivial");
    println!("bivariate pair:");
    println!("  f1 = {}", pair.f1());
    println!("  f2 = {}", pair.f2());

    let bm = bm_variant(&s);
    println!("univariate pair:");
    println!("  mu  = {}", bm.mu());
    println!("  mu' = {}", bm.mu_prime());

    // Dropping z from the pair gives the univariate pair, and weighting
    // the univariate pair back up recovers the forms exactly.
    let (mu, mu_prime) = dehom_pair(&pair);
    assert_eq!(&mu, bm.mu());
    assert_eq!(&mu_prime, bm.mu_prime());
    let back = hom_pair(&bm, s.len()).unwrap();
    assert_eq!(back.f1(), pair.f1());
    assert_eq!(back.f2(), pair.f2());
    println!("dehomogenisation round trip: exact");
}
