//! Fantastacks: the hat fan, then the Chow ring with and without simplification.

use num_bigint::BigInt;
use toric_chow::fan::Fan;
use toric_chow::present::{graded_invariants, render_text, simplify};
use toric_chow::stacky::{fantastack_chow, induced_stacky_fan};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn main() -> toric_chow::Result<()> {
    let quadrant = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]])?;
    let images = [ints(&[2, 0]), ints(&[0, 3]), ints(&[4, 2])];
    let sf = induced_stacky_fan(&quadrant, &images)?;
    println!("hat fan cones: {:?}", sf.fan().max_cones());

    let ring = fantastack_chow(&quadrant, &images)?;
    println!("{}", render_text(&ring));
    let small = simplify(&ring);
    println!("{}", render_text(&small));
    print!("{}", graded_invariants(&small, 4)?);

    let p2 = Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    )?;
    let ring = fantastack_chow(&p2, &[ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, -1])])?;
    println!("P^2: {}", render_text(&simplify(&ring)));

    match fantastack_chow(&quadrant, &[ints(&[1, 0]), ints(&[0, 1]), ints(&[-1, 1])]) {
        Ok(r) => println!("unexpected: {}", render_text(&r)),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
