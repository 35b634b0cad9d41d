//! The weighted projective line P(6,4) as a non-strict stacky fan on A^2 minus the origin.

use num_bigint::BigInt;
use toric_chow::exactla::IntMatrix;
use toric_chow::fan::Fan;
use toric_chow::present::{graded_invariants, render_latex, render_text, simplify};
use toric_chow::stacky::StackyFan;

fn main() -> toric_chow::Result<()> {
    let fan = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0], &[1]])?;
    let lift = IntMatrix::from_i64(&[&[2, -3], &[1, -1]]);
    let sf = StackyFan::new(fan, 1, vec![BigInt::from(2)], lift)?;

    let cox = sf.assemble_block_matrix();
    println!("block matrix {}", cox.matrix);
    println!("M = {}, weights {}", cox.character_group, cox.weights);

    let ring = sf.chow_ring()?;
    println!("{}", render_text(&ring));
    let small = simplify(&ring);
    println!("{}", render_text(&small));
    println!("{}", render_latex(&small));
    print!("{}", graded_invariants(&small, 6)?);
    Ok(())
}
