// Decides n-absorbing for the zero ideal of a few rings, prints witnesses
// and ω, and shows that ω is sharp for Z/8.

use absorbing_ideals::absorbing::{check_radical_power, is_n_absorbing, omega};
use absorbing_ideals::{Ideal, Limits, Result, Ring};

pub fn run_example() -> Result<()> {
    let limits = Limits::default();
    for spec in [
        "Zmod:12",
        "Zmod:8",
        "PolyQuot:{p:3,poly:[0,0,0,1]}",
        "Zmod:32",
    ] {
        let ring = Ring::parse(spec)?;
        let zero = Ideal::zero(&ring);
        let report = omega(&zero, 4, &limits)?;
        match report.value {
            Some(w) => println!("{spec}: omega((0)) = {w}"),
            None => println!("{spec}: (0) is not n-absorbing for n <= 4"),
        }
        for level in &report.levels {
            if let Some(wit) = &level.witness {
                println!(
                    "  not {}-absorbing: {:?}",
                    level.n,
                    ring.render_all(wit.tuple())
                );
            }
        }
    }
    let z8 = Ring::parse("Zmod:8")?;
    let zero = Ideal::zero(&z8);
    println!(
        "Z/8: (√0)^3 ⊆ 0: {}, (√0)^2 ⊆ 0: {}",
        check_radical_power(&zero, 3)?,
        check_radical_power(&zero, 2)?
    );
    println!(
        "(0) 3-absorbing in Z/8: {}",
        is_n_absorbing(&zero, 3, &limits)?.holds
    );
    Ok(())
}

fn main() {
    run_example().expect("absorbing example");
}
