// Produces a proof trace that a_1 a_2 a_3 = 0 for nilpotents 2, 4, 6 of
// Z/8, verifies it, and shows that a tampered copy is rejected.

use absorbing_ideals::proof::{prove_radical_power_zero_with, verify_trace, TraceOptions};
use absorbing_ideals::{Limits, Result, Ring};

pub fn run_example() -> Result<()> {
    let limits = Limits::default();
    let ring = Ring::parse("Zmod:8")?;
    let gens = ring.parse_elements("2,4,6")?;
    let options = TraceOptions {
        full_machinery: true,
    };
    let trace = prove_radical_power_zero_with(&ring, &gens, &limits, options)?;
    println!("{trace}");
    let last = trace.steps.last().expect("steps");
    println!(
        "last step {:?}: matrix {:?}, j sequence {:?}",
        last.monomial, last.matrix, last.j_sequence
    );
    println!("verified: {}", verify_trace(&trace, &limits).valid);

    let mut forged = trace.clone();
    forged.steps.pop();
    let verdict = verify_trace(&forged, &limits);
    println!(
        "forged: valid = {}, reason = {:?}",
        verdict.valid, verdict.reason
    );
    Ok(())
}

fn main() {
    run_example().expect("proof trace example");
}
