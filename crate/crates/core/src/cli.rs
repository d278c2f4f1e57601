//! Command line front end over the library.
//!
//! Subcommands mirror the library one to one: `pair`, `gb` and `rgb` run
//! the solver on an inverse form or a sequence, `lc` and `intersect` work
//! on sequences, `verify` cross-checks the fast paths against the
//! brute-force oracles and `bench` reports cost counts and timings on
//! random sequences. Exit codes are a stable contract: 0 for success, 2
//! for bad input, 3 when an internal invariant breaks or a verification
//! fails.

use std::error::Error;
use std::fmt;
use std::fs;
use std::io::Read;
use std::panic;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::annihilator::{form_vector, reduced_gb, viable_pair, AnnihilatorResult};
use crate::bipoly::Form;
use crate::field::{Field, FieldElement, FieldError};
use crate::invform::InverseForm;
use crate::oracle::{exhaustive_lambda, exhaustive_lc, ideal_equal, laurent_annihilation_check,
    standard_monomial_count};
use crate::sequence::{bm_variant, dehom_pair, hom_pair, intersect_annihilators, inverse_form,
    lc_profile, linear_complexity, synthesis_cost, viable_pair_seq, SequenceRecord};
use crate::{groebner, invform};

#[derive(Parser)]
#[command(
    name = "annform",
    about = "Annihilator ideals of inverse forms and finite sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Viable generator pair of the annihilator ideal
    Pair(PairArgs),
    /// Minimal Groebner basis with its degree vector
    Gb(BasisArgs),
    /// Reduced Groebner basis
    Rgb(BasisArgs),
    /// Linear complexity of a sequence
    Lc(LcArgs),
    /// Intersection of the annihilator ideals of two inputs
    Intersect(IntersectArgs),
    /// Cross-check the fast paths against the brute-force oracles
    Verify(SeededArgs),
    /// Multiplication counts and timings on random sequences
    Bench(SeededArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Coefficient field: gf2, gfp:<p> or q
    #[arg(long, default_value = "gf2")]
    field: String,
    /// Inline sequence s_0,...,s_{n-1}
    #[arg(long)]
    seq: Option<String>,
    /// Inline inverse form "m=<degree>; F=<coefficients>"
    #[arg(long)]
    invform: Option<String>,
    /// File holding the input line
    #[arg(long)]
    file: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Append the solver trace
    #[arg(long)]
    trace: bool,
    /// Print the trace as bare CSV only
    #[arg(long)]
    csv: bool,
    /// Print the reduced basis instead of the bare pair
    #[arg(long)]
    reduced: bool,
}

#[derive(Args)]
struct BasisArgs {
    #[command(flatten)]
    input: InputArgs,
}

#[derive(Args)]
struct LcArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also print the complexity profile
    #[arg(long)]
    profile: bool,
}

#[derive(Args)]
struct IntersectArgs {
    /// Coefficient field: gf2, gfp:<p> or q
    #[arg(long, default_value = "gf2")]
    field: String,
    /// Sequence input, given twice
    #[arg(long)]
    seq: Vec<String>,
    /// Inverse form input, given twice
    #[arg(long)]
    invform: Vec<String>,
    /// File holding two input lines
    #[arg(long)]
    file: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SeededArgs {
    /// Seed for the random cases
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

/// Raised when `verify` finds a disagreement; maps to exit code 3, since a
/// failed cross-check is an invariant violation, not an input problem.
#[derive(Debug)]
struct VerifyFailed(usize);

impl fmt::Display for VerifyFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} verification check(s) failed", self.0)
    }
}

impl Error for VerifyFailed {}

/// Parses the arguments, runs the chosen command and maps the outcome to
/// the stable exit codes 0 / 2 / 3.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    match panic::catch_unwind(move || dispatch(cli)) {
        Ok(Ok(())) => 0,
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            if err.is::<VerifyFailed>() {
                3
            } else {
                2
            }
        }
        Err(_) => 3,
    }
}

fn dispatch(cli: Cli) -> Result<(), Box<dyn Error>> {
    match cli.command {
        Command::Pair(args) => cmd_pair(args),
        Command::Gb(args) => cmd_basis(args, false),
        Command::Rgb(args) => cmd_basis(args, true),
        Command::Lc(args) => cmd_lc(args),
        Command::Intersect(args) => cmd_intersect(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

enum Input {
    Sequence(SequenceRecord),
    Inverse(InverseForm),
}

fn parse_field(name: &str) -> Result<Field, FieldError> {
    let trimmed = name.trim();
    match trimmed.strip_prefix("gfp:") {
        Some(p) => Field::from_name(&format!("gf{p}")),
        None => Field::from_name(trimmed),
    }
}

fn classify_line(field: Field, line: &str) -> Result<Input, Box<dyn Error>> {
    let line = line.trim();
    if line.starts_with("m=") {
        Ok(Input::Inverse(InverseForm::parse(field, line)?))
    } else {
        Ok(Input::Sequence(SequenceRecord::parse(field, line)?))
    }
}

fn read_input(args: &InputArgs) -> Result<Input, Box<dyn Error>> {
    let field = parse_field(&args.field)?;
    let sources =
        args.seq.is_some() as u32 + args.invform.is_some() as u32 + args.file.is_some() as u32;
    if sources > 1 {
        return Err("give at most one of --seq, --invform and --file".into());
    }
    if let Some(text) = &args.seq {
        return Ok(Input::Sequence(SequenceRecord::parse(field, text)?));
    }
    if let Some(text) = &args.invform {
        return Ok(Input::Inverse(InverseForm::parse(field, text)?));
    }
    let text = match &args.file {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let line = text.lines().next().ok_or("empty input")?;
    classify_line(field, line)
}

/// The inverse-form view of an input; the caller has already dealt with
/// the trivial sequence, which has none.
fn realise(input: Input) -> Result<(InverseForm, Option<SequenceRecord>), Box<dyn Error>> {
    match input {
        Input::Sequence(s) => {
            let f = inverse_form(&s).ok_or("the all-zero sequence has no inverse form")?;
            Ok((f, Some(s)))
        }
        Input::Inverse(f) => Ok((f, None)),
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn trace_json(run: &AnnihilatorResult) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = run
        .trace()
        .iter()
        .map(|row| {
            json!({
                "i": row.i,
                "q": row.q.as_ref().map(|q| q.to_string()),
                "d": row.d,
                "B": row.b as u8,
                "f1": row.pair.0.to_string(),
                "f2": row.pair.1.to_string(),
            })
        })
        .collect();
    serde_json::Value::Array(rows)
}

fn sequence_json(s: &SequenceRecord, run: &AnnihilatorResult) -> serde_json::Value {
    let bm = bm_variant(s);
    json!({
        "field": s.field().name(),
        "n": s.len(),
        "seq": s.to_string(),
        "f1": run.pair().f1().to_string(),
        "f2": run.pair().f2().to_string(),
        "mu": bm.mu().to_string(),
        "mu_prime": bm.mu_prime().to_string(),
        "lc": linear_complexity(s),
        "lc_profile": lc_profile(s),
    })
}

fn cmd_pair(args: PairArgs) -> Result<(), Box<dyn Error>> {
    let input = read_input(&args.input)?;
    if let Input::Sequence(s) = &input {
        if s.is_trivial() {
            if args.input.json {
                println!(
                    "{}",
                    json!({
                        "field": s.field().name(),
                        "n": s.len(),
                        "trivial": true,
                        "f": ["1", "0"],
                    })
                );
            } else {
                println!("f = (1, 0)");
            }
            return Ok(());
        }
    }
    let (f, seq) = realise(input)?;
    let run = form_vector(&f);
    if args.input.json {
        let mut value = match &seq {
            Some(s) => sequence_json(s, &run),
            None => run.to_json(),
        };
        if args.reduced {
            value["reduced_basis"] = json!(reduced_gb(&f)
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>());
        }
        if args.trace || args.csv {
            value["trace"] = trace_json(&run);
        }
        println!("{value}");
        return Ok(());
    }
    if args.csv {
        print!("{}", run.trace_csv());
        return Ok(());
    }
    if args.reduced {
        println!("basis = {}", join(reduced_gb(&f)));
    } else {
        println!("f1 = {}", run.pair().f1());
        println!("f2 = {}", run.pair().f2());
    }
    if args.trace {
        print!("{}", run.trace_csv());
    }
    Ok(())
}

fn cmd_basis(args: BasisArgs, reduce: bool) -> Result<(), Box<dyn Error>> {
    let input = read_input(&args.input)?;
    if let Input::Sequence(s) = &input {
        if s.is_trivial() {
            if args.input.json {
                println!(
                    "{}",
                    json!({ "field": s.field().name(), "trivial": true, "basis": ["1"] })
                );
            } else {
                println!("basis = 1");
            }
            return Ok(());
        }
    }
    let (f, _) = realise(input)?;
    let run = form_vector(&f);
    let basis = if reduce {
        reduced_gb(&f)
    } else {
        run.form_vector().to_vec()
    };
    if args.input.json {
        println!(
            "{}",
            json!({
                "field": f.field().name(),
                "m": f.degree(),
                "basis": basis.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "degree_vector": run.degree_vector(),
                "lambda": run.lambda(),
                "dimension": run.dimension(),
            })
        );
    } else {
        println!("basis = {}", join(&basis));
        println!("N = {}", join(run.degree_vector()));
    }
    Ok(())
}

fn cmd_lc(args: LcArgs) -> Result<(), Box<dyn Error>> {
    let input = read_input(&args.input)?;
    let s = match input {
        Input::Sequence(s) => s,
        Input::Inverse(_) => return Err("lc works on sequences; give --seq or a sequence line".into()),
    };
    let lc = linear_complexity(&s);
    if args.input.json {
        let bm = bm_variant(&s);
        println!(
            "{}",
            json!({
                "field": s.field().name(),
                "n": s.len(),
                "lc": lc,
                "profile": lc_profile(&s),
                "mu": bm.mu().to_string(),
                "mu_prime": bm.mu_prime().to_string(),
            })
        );
        return Ok(());
    }
    println!("lc = {lc}");
    if args.profile {
        let profile: Vec<String> = lc_profile(&s).iter().map(|c| c.to_string()).collect();
        println!("profile = {}", profile.join(","));
    }
    Ok(())
}

fn cmd_intersect(args: IntersectArgs) -> Result<(), Box<dyn Error>> {
    let field = parse_field(&args.field)?;
    let mut inputs: Vec<Input> = Vec::new();
    for text in &args.seq {
        inputs.push(Input::Sequence(SequenceRecord::parse(field, text)?));
    }
    for text in &args.invform {
        inputs.push(Input::Inverse(InverseForm::parse(field, text)?));
    }
    if let Some(path) = &args.file {
        if !inputs.is_empty() {
            return Err("give either --file or inline inputs, not both".into());
        }
        let text = fs::read_to_string(path)?;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            inputs.push(classify_line(field, line)?);
        }
    }
    let gens = match (inputs.pop(), inputs.pop(), inputs.pop()) {
        (Some(second), Some(first), None) => match (first, second) {
            (Input::Sequence(s), Input::Sequence(t)) => intersect_annihilators(&s, &t)?,
            (Input::Inverse(f), Input::Inverse(g)) => {
                viable_pair(&f).intersect(&viable_pair(&g))
            }
            _ => return Err("intersect needs two inputs of the same kind".into()),
        },
        _ => return Err("intersect needs exactly two inputs".into()),
    };
    if args.json {
        println!(
            "{}",
            json!({
                "field": field.name(),
                "basis": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("basis = {}", join(&gens));
    }
    Ok(())
}

struct Check {
    name: &'static str,
    pass: bool,
}

fn random_sequence(rng: &mut ChaCha8Rng, field: Field, n: usize) -> SequenceRecord {
    loop {
        let terms: Vec<FieldElement> = (0..n).map(|_| field.sample(rng)).collect();
        if terms.iter().any(|t| !t.is_zero()) {
            return SequenceRecord::from_terms(terms);
        }
    }
}

fn random_invform(rng: &mut ChaCha8Rng, field: Field, max_span: usize) -> InverseForm {
    use rand::Rng as _;
    loop {
        let span = rng.gen_range(1..=max_span);
        let coeffs: Vec<FieldElement> = (0..span).map(|_| field.sample(rng)).collect();
        if let Some(f) = InverseForm::from_coeffs(1 - span as i64, coeffs) {
            return f;
        }
    }
}

fn random_form(rng: &mut ChaCha8Rng, field: Field, max_degree: usize) -> Form {
    use rand::Rng as _;
    loop {
        let e = rng.gen_range(1..=max_degree);
        let coeffs: Vec<FieldElement> = (0..=e).map(|_| field.sample(rng)).collect();
        if let Some(phi) = Form::from_coeffs(e, coeffs) {
            return phi;
        }
    }
}

fn verify_fields() -> Vec<Field> {
    vec![
        Field::Gf2,
        Field::gfp(3).unwrap(),
        Field::gfp(7).unwrap(),
        Field::Rational,
    ]
}

fn check_laurent_agreement(seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for field in verify_fields() {
        for round in 0..300 {
            let phi = random_form(&mut rng, field, 5);
            let f = random_invform(&mut rng, field, 6);
            if laurent_annihilation_check(&phi, &f) != invform::annihilates(&phi, &f) {
                return false;
            }
            if round % 25 == 0 {
                for g in form_vector(&f).form_vector() {
                    if !laurent_annihilation_check(g, &f) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn check_exhaustive_lambda(seed: u64) -> bool {
    for span in 1..=7usize {
        for bits in 1u32..(1 << span) {
            let coeffs: Vec<FieldElement> = (0..span)
                .map(|k| Field::Gf2.from_i64(((bits >> k) & 1) as i64))
                .collect();
            let f = InverseForm::from_coeffs(1 - span as i64, coeffs).unwrap();
            if exhaustive_lambda(&f) != Ok(crate::annihilator::lambda(&f)) {
                return false;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gf3 = Field::gfp(3).unwrap();
    (0..30).all(|_| {
        let f = random_invform(&mut rng, gf3, 6);
        exhaustive_lambda(&f) == Ok(crate::annihilator::lambda(&f))
    })
}

fn check_monomial_count(seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    verify_fields().into_iter().all(|field| {
        (0..20).all(|_| {
            let f = random_invform(&mut rng, field, 8);
            let run = form_vector(&f);
            standard_monomial_count(run.form_vector(), f.degree()) == Ok(run.dimension())
        })
    })
}

fn check_exhaustive_lc(seed: u64) -> bool {
    for n in 1..=7usize {
        for bits in 0u32..(1 << n) {
            let terms: Vec<FieldElement> = (0..n)
                .map(|k| Field::Gf2.from_i64(((bits >> k) & 1) as i64))
                .collect();
            let s = SequenceRecord::from_terms(terms);
            if exhaustive_lc(&s) != Ok(linear_complexity(&s)) {
                return false;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gf3 = Field::gfp(3).unwrap();
    (0..30).all(|_| {
        use rand::Rng as _;
        let n = rng.gen_range(1..=6);
        let terms: Vec<FieldElement> = (0..n).map(|_| gf3.sample(&mut rng)).collect();
        let s = SequenceRecord::from_terms(terms);
        exhaustive_lc(&s) == Ok(linear_complexity(&s))
    })
}

fn check_dehomogenisation(seed: u64) -> bool {
    use rand::Rng as _;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    verify_fields().into_iter().all(|field| {
        (0..50).all(|_| {
            let n = rng.gen_range(1..=16);
            let s = random_sequence(&mut rng, field, n);
            let Some(pair) = viable_pair_seq(&s) else {
                return true;
            };
            let (mu, mu_prime) = dehom_pair(&pair);
            let bm = bm_variant(&s);
            if &mu != bm.mu() || &mu_prime != bm.mu_prime() {
                return false;
            }
            match hom_pair(&bm, s.len()) {
                Ok(back) => back.f1() == pair.f1() && back.f2() == pair.f2(),
                Err(_) => false,
            }
        })
    })
}

fn check_reference_intersections() -> bool {
    let gf2 = Field::Gf2;
    let parse = |t: &str| Form::parse(gf2, t).unwrap();
    let seq = |t: &str| SequenceRecord::parse(gf2, t).unwrap();

    let first = intersect_annihilators(&seq("1,0,0,1,1,1"), &seq("1,0,0,0,1,0,0,1"));
    let expected_first = vec![
        parse("x^6 + x^3*z^3 + x^2*z^4"),
        parse("x^4*z + x*z^4 + z^5"),
        parse("x*z^4"),
    ];
    let second = intersect_annihilators(&seq("1,0,0,1,1,1,0,1"), &seq("1,0,0,1,1,0,1,0"));
    let expected_second = vec![
        parse("x^6 + x^5*z + x^2*z^4 + z^6"),
        parse("x^3*z^3 + x^2*z^4 + z^6"),
        parse("x*z^5"),
        parse("z^8"),
    ];
    matches!(first, Ok(gens) if ideal_equal(&gens, &expected_first))
        && matches!(second, Ok(gens) if ideal_equal(&gens, &expected_second))
}

fn check_solver_bases(seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    verify_fields().into_iter().all(|field| {
        (0..15).all(|_| {
            let f = random_invform(&mut rng, field, 8);
            let run = form_vector(&f);
            let fv = run.form_vector();
            groebner::form_is_groebner(fv)
                && groebner::form_is_minimal(fv)
                && groebner::form_is_reduced(&reduced_gb(&f))
                && run.dimension() == run.pair().f1().degree() * run.pair().f2().degree()
        })
    })
}

fn cmd_verify(args: SeededArgs) -> Result<(), Box<dyn Error>> {
    let seed = args.seed;
    let checks = vec![
        Check {
            name: "laurent product agrees with windowed annihilation",
            pass: check_laurent_agreement(seed),
        },
        Check {
            name: "exhaustive lambda agrees with the solver",
            pass: check_exhaustive_lambda(seed.wrapping_add(1)),
        },
        Check {
            name: "standard monomial count agrees with the dimension",
            pass: check_monomial_count(seed.wrapping_add(2)),
        },
        Check {
            name: "exhaustive complexity agrees with the synthesis loop",
            pass: check_exhaustive_lc(seed.wrapping_add(3)),
        },
        Check {
            name: "dehomogenisation round trip",
            pass: check_dehomogenisation(seed.wrapping_add(4)),
        },
        Check {
            name: "reference intersections reproduced",
            pass: check_reference_intersections(),
        },
        Check {
            name: "solver bases are minimal Groebner bases",
            pass: check_solver_bases(seed.wrapping_add(5)),
        },
    ];
    let failures = checks.iter().filter(|c| !c.pass).count();
    if args.json {
        println!(
            "{}",
            json!({
                "seed": seed,
                "checks": checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "pass": c.pass }))
                    .collect::<Vec<_>>(),
                "failures": failures,
            })
        );
    } else {
        println!("seed = {seed}");
        for check in &checks {
            println!("{} {}", if check.pass { "ok  " } else { "FAIL" }, check.name);
        }
    }
    if failures > 0 {
        return Err(Box::new(VerifyFailed(failures)));
    }
    Ok(())
}

fn cmd_bench(args: SeededArgs) -> Result<(), Box<dyn Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let sizes = [1024usize, 2048, 4096];
    let mut rows = Vec::new();
    for &n in &sizes {
        let s = random_sequence(&mut rng, Field::Gf2, n);
        let count = synthesis_cost(&s);
        let bound = (2 * (1 + n) + n * (n + 1) / 2) as u64;
        let mut best = f64::INFINITY;
        for _ in 0..3 {
            let started = Instant::now();
            let _ = synthesis_cost(&s);
            best = best.min(started.elapsed().as_secs_f64());
        }
        rows.push((n, count, bound, best));
    }
    let ratios: Vec<(usize, f64)> = rows
        .windows(2)
        .map(|w| (w[1].0, w[1].3 / w[0].3))
        .collect();
    if args.json {
        println!(
            "{}",
            json!({
                "seed": args.seed,
                "runs": rows
                    .iter()
                    .map(|(n, count, bound, secs)| json!({
                        "n": n,
                        "multiplications": count,
                        "bound": bound,
                        "seconds": secs,
                    }))
                    .collect::<Vec<_>>(),
                "ratios": ratios
                    .iter()
                    .map(|(n, r)| json!({ "n": n, "ratio": r }))
                    .collect::<Vec<_>>(),
            })
        );
        return Ok(());
    }
    println!("seed = {}", args.seed);
    for (n, count, bound, secs) in &rows {
        println!("n = {n}: multiplications = {count}, bound = {bound}, time = {secs:.6}s");
    }
    for (n, ratio) in &ratios {
        println!("ratio time({n})/time({}) = {ratio:.2}", n / 2);
    }
    Ok(())
}
