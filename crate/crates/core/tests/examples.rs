macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(ring_arithmetic, "ring_arithmetic.rs");
example!(ideal_lattice, "ideal_lattice.rs");
example!(absorbing_omega, "absorbing_omega.rs");
example!(radical_power_scan, "radical_power_scan.rs");
example!(zero_diagonal, "zero_diagonal.rs");
example!(proof_trace, "proof_trace.rs");
example!(corollaries, "corollaries.rs");

#[test]
fn examples_run() {
    ring_arithmetic::run_example().expect("ring_arithmetic");
    ideal_lattice::run_example().expect("ideal_lattice");
    absorbing_omega::run_example().expect("absorbing_omega");
    radical_power_scan::run_example().expect("radical_power_scan");
    zero_diagonal::run_example().expect("zero_diagonal");
    proof_trace::run_example().expect("proof_trace");
    corollaries::run_example().expect("corollaries");
}
