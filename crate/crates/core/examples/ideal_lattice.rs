// Lists every ideal of Z/12 with its radical, and a few colon ideals.

use absorbing_ideals::{enumerate_ideals, Ideal, Result, Ring};

pub fn run_example() -> Result<()> {
    let ring = Ring::parse("Zmod:12")?;
    for ideal in enumerate_ideals(&ring, 4096)? {
        println!(
            "{ideal:>5}  size {:>2}  radical {}",
            ideal.len(),
            ideal.radical()
        );
    }
    let zero = Ideal::zero(&ring);
    for x in ring.parse_elements("2,3,4,6")? {
        println!("(0 : {}) = {}", ring.render(x), zero.colon(x)?);
    }
    let two = Ideal::parse(&ring, "(2)")?;
    println!(
        "(2)^2 = {}, (2)+(3) = {}",
        two.power(2)?,
        two.sum(&Ideal::parse(&ring, "(3)")?)?
    );
    Ok(())
}

fn main() {
    run_example().expect("ideal lattice example");
}
