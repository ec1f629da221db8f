// Checks the colon-ideal consequences for the 3-absorbing zero ideals of
// Z/8 and Z/27.

use absorbing_ideals::absorbing::{check_chain_comparability, check_colon_two_absorbing};
use absorbing_ideals::{Ideal, Limits, Result, Ring};

pub fn run_example() -> Result<()> {
    let limits = Limits::default();
    for spec in ["Zmod:8", "Zmod:27"] {
        let ring = Ring::parse(spec)?;
        let zero = Ideal::zero(&ring);
        let colons = check_colon_two_absorbing(&zero, &limits)?;
        println!("{spec}: radical {}", colons.radical);
        for c in &colons.checks {
            println!(
                "  (0 : {}) = {}  ok: {}",
                ring.render(c.x),
                c.colon,
                c.holds()
            );
        }
        let chain = check_chain_comparability(&zero, &limits)?;
        let family: Vec<String> = chain.colon_ideals.iter().map(|i| i.to_string()).collect();
        println!("  chain {family:?} holds: {}", chain.holds());
    }
    let z16 = Ring::parse("Zmod:16")?;
    if let Err(e) = check_colon_two_absorbing(&Ideal::zero(&z16), &limits) {
        println!("Zmod:16: {e}");
    }
    Ok(())
}

fn main() {
    run_example().expect("corollaries example");
}
