// Scans every proper ideal of a few rings: ω, the radical-power bound and
// whether the bound is sharp.

use absorbing_ideals::corpus::scan_ring;
use absorbing_ideals::{Limits, Result, Ring};

pub fn run_example() -> Result<()> {
    let limits = Limits::default();
    for spec in [
        "Zmod:24",
        "Product:[Zmod:4,Zmod:3]",
        "PolyQuot:{p:2,poly:[0,0,0,1]}",
    ] {
        let summary = scan_ring(&Ring::parse(spec)?, &limits)?;
        println!(
            "{spec}: {} proper ideals, {} failures",
            summary.ideals.len(),
            summary.failures
        );
        for i in &summary.ideals {
            println!(
                "  {:<12} omega {:?}  (√I)^ω ⊆ I: {:?}  sharp: {:?}",
                i.ideal, i.omega, i.radical_power_holds, i.sharp
            );
        }
    }
    Ok(())
}

fn main() {
    run_example().expect("radical power scan example");
}
