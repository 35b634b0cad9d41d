//! Saturating a sublattice and completing it to a basis of the ambient lattice.

use toric_chow::exactla::{complement, coordinates_in_basis, is_saturated, saturation, IntMatrix};

fn main() {
    // columns (2, 0, 0) and (0, 2, 2) span an index-4 sublattice of its saturation
    let sub = IntMatrix::from_i64(&[&[2, 0], &[0, 2], &[0, 2]]);
    let sat = saturation(&sub);
    println!("sublattice columns: {sub}");
    println!("saturated: {}", is_saturated(&sub));
    println!("saturation basis (columns): {sat}");
    println!(
        "coordinates of the generators: {}",
        coordinates_in_basis(&sat, &sub).unwrap()
    );

    let extra = complement(&sat, 3).unwrap();
    println!("complement (columns): {extra}");
    let full = sat.hstack(&extra).unwrap();
    println!(
        "det [saturation | complement] = {}",
        full.determinant().unwrap()
    );
}
