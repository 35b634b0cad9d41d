//! Smith normal form, invariant factors and the cokernel of an integer matrix.

use toric_chow::exactla::{cokernel, smith_normal_form, IntMatrix};

fn main() {
    let m = IntMatrix::from_i64(&[&[2, 1], &[-3, -1], &[0, 2]]);
    let snf = smith_normal_form(&m);
    println!("M = {m}");
    println!("D = {}", snf.d);
    println!("U = {}", snf.u);
    println!("V = {}", snf.v);
    assert_eq!(snf.u.mul(&m).unwrap().mul(&snf.v).unwrap(), snf.d);

    let coker = cokernel(&m);
    println!("coker M = {}", coker.group);
    println!("projection = {}", coker.projection);

    let diag = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
    println!("coker diag(2,3) = {}", cokernel(&diag).group);
}
