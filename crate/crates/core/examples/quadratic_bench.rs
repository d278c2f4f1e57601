//! Field-multiplication counts of the synthesis loop stay under the
//! quadratic bound, and the measured time scales accordingly.

use std::time::Instant;

use annform::field::Field;
use annform::sequence::{synthesis_cost, SequenceRecord};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_sequence(rng: &mut ChaCha8Rng, n: usize) -> SequenceRecord {
    loop {
        let terms: Vec<_> = (0..n).map(|_| Field::Gf2.sample(rng)).collect();
        if terms.iter().any(|t| !t.is_zero()) {
            return SequenceRecord::from_terms(terms);
        }
    }
}

fn timed(s: &SequenceRecord) -> f64 {
    let mut best = f64::INFINITY;
    for _ in 0..5 {
        let started = Instant::now();
        let _ = synthesis_cost(s);
        best = best.min(started.elapsed().as_secs_f64());
    }
    best
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut previous: Option<(usize, f64)> = None;
    for n in [256usize, 512, 1024, 2048, 4096] {
        let s = random_sequence(&mut rng, n);
        let count = synthesis_cost(&s);
        let bound = (2 * (1 + n) + n * (n + 1) / 2) as u64;
        assert!(count <= bound);
        let secs = timed(&s);
        match previous {
            Some((half, before)) if half * 2 == n => println!(
                "n = {n:5}: {count:9} multiplications (bound {bound:9}), {secs:.6}s, x{:.2}",
                secs / before
            ),
            _ => println!(
                "n = {n:5}: {count:9} multiplications (bound {bound:9}), {secs:.6}s"
            ),
        }
        previous = Some((n, secs));
    }
}
