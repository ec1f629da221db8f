// Runs the zero-diagonal search on every projectively zero upper-triangular
// 2x2 and 3x3 matrix over Z/4 with exactly one zero entry on the diagonal,
// printing a few runs that needed more than one step, then shows the search
// rejecting the identity.

use absorbing_ideals::proof::{find_zero_diagonal, is_projectively_zero, SquareMatrix, VectorScan};
use absorbing_ideals::{Elem, Result, Ring};

fn upper_triangular(ring: &Ring, m: usize, code: usize) -> Result<SquareMatrix> {
    let q = ring.size();
    let mut code = code;
    let mut rows = vec![vec![ring.zero(); m]; m];
    for (i, row) in rows.iter_mut().enumerate() {
        for cell in row.iter_mut().skip(i) {
            *cell = ring.element(code % q).expect("index in range");
            code /= q;
        }
    }
    SquareMatrix::from_rows(ring, rows)
}

pub fn run_example() -> Result<()> {
    let ring = Ring::parse("Zmod:4")?;
    for m in [2, 3] {
        let cells = m * (m + 1) / 2;
        let mut shown = 0;
        let mut found = 0;
        for code in 0..ring.size().pow(cells as u32) {
            let c = upper_triangular(&ring, m, code)?;
            let diag: Vec<Elem> = (0..m).map(|i| c.get(i, i)).collect();
            if diag.iter().filter(|&&d| ring.is_zero(d)).count() != 1 {
                continue;
            }
            if !is_projectively_zero(&c, VectorScan::Exhaustive, 1_000_000)?.holds {
                continue;
            }
            found += 1;
            let z = find_zero_diagonal(&c).expect("projectively zero");
            if shown < 3 && z.sequence.len() > 2 {
                println!("{c:?}: C({0},{0}) = 0 via {1:?}", z.index, z.sequence);
                shown += 1;
            }
        }
        println!("m = {m}: {found} projectively zero matrices with one zero on the diagonal");
    }
    let id = SquareMatrix::parse(&ring, &[&["1", "0"], &["0", "1"]])?;
    if let Err(e) = find_zero_diagonal(&id) {
        println!("identity: {e}");
    }
    Ok(())
}

fn main() {
    run_example().expect("zero diagonal example");
}
