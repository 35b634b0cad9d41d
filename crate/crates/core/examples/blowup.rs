//! A stacky blow-up of A^3 at the origin, compared with a cubic in two variables.

use num_bigint::BigInt;
use toric_chow::exactla::IntMatrix;
use toric_chow::fan::Fan;
use toric_chow::present::{graded_equal, parse_presentation, render_text, simplify};
use toric_chow::stacky::StackyFan;

fn main() -> toric_chow::Result<()> {
    let fan = Fan::from_i64(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        &[&[0, 1, 3], &[1, 2, 3], &[2, 0, 3]],
    )?;
    let lift = IntMatrix::from_i64(&[&[3, -1, 0], &[4, 0, -1], &[0, -1, 1]]);
    let sf = StackyFan::new(fan, 2, vec![BigInt::from(2)], lift)?;

    let ring = sf.chow_ring()?;
    println!("raw:        {}", render_text(&ring));
    let small = simplify(&ring);
    println!("simplified: {}", render_text(&small));

    let target = parse_presentation("(u+2*v)*(u+6*v)*(u+8*v)")?;
    println!(
        "graded-equal to {} up to degree 6: {}",
        render_text(&target),
        graded_equal(&small, &target, 6)?
    );
    Ok(())
}
