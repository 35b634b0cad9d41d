//! B(G) for G = Z^2 x Z/2 x Z/3: trivial fan, zero lattice map, infinite cokernel.

use num_bigint::BigInt;
use toric_chow::exactla::IntMatrix;
use toric_chow::fan::Fan;
use toric_chow::present::render_text;
use toric_chow::stacky::StackyFan;

fn main() -> toric_chow::Result<()> {
    let torsion = vec![BigInt::from(2), BigInt::from(3)];
    let sf = StackyFan::new(Fan::trivial(0), 2, torsion, IntMatrix::zeros(4, 0))?;
    println!("cokernel finite: {}", sf.cokernel_is_finite());

    let (n0, reduced) = sf.split_infinite();
    println!(
        "free part of rank {n0}, reduced target {}",
        reduced.target()
    );
    println!("{}", render_text(&sf.chow_ring()?));
    Ok(())
}
