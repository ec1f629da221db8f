// Builds each kind of finite ring from its text spec and does some
// arithmetic, including a quotient and the CRT splitting of Z/12.

use absorbing_ideals::{quotient_ring, Ideal, Result, Ring};

pub fn run_example() -> Result<()> {
    let f4 = Ring::parse("PolyQuot:{p:2,poly:[1,1,1]}")?;
    let x = f4.parse_element("[0,1]")?;
    println!(
        "in {f4}: x^2 = {}, x^3 = {}",
        f4.render(f4.mul(x, x)),
        f4.render(f4.pow(x, 3))
    );

    let z12 = Ring::parse("Zmod:12")?;
    let crt = Ring::parse("Product:[Zmod:4,Zmod:3]")?;
    let seven = crt.parse_element("(3,1)")?;
    println!("{crt}: (3,1)^2 = {}", crt.render(crt.mul(seven, seven)));
    println!(
        "7^2 in {z12} = {}",
        z12.render(z12.pow(z12.parse_element("7")?, 2))
    );

    let q = quotient_ring(&z12, &Ideal::parse(&z12, "(4)")?)?;
    println!("{} has {} elements", q.quotient(), q.quotient().size());
    for r in z12.elements().take(6) {
        println!(
            "  {} -> {}",
            z12.render(r),
            q.quotient().render(q.project(r))
        );
    }
    Ok(())
}

fn main() {
    run_example().expect("ring arithmetic example");
}
