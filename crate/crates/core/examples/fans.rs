//! Fan validation, smoothness and the Stanley-Reisner monomials of a few fans.

use toric_chow::fan::Fan;

fn show(name: &str, fan: &Fan) {
    let report = fan.validate();
    println!("{name}:");
    if report.is_ok() {
        println!("  valid fan");
    }
    for v in &report.violations {
        println!("  violation: {v}");
    }
    println!("  smooth: {}", fan.is_smooth());
    println!("  torus factor: {}", fan.has_torus_factor());
    println!("  minimal non-faces: {:?}", fan.minimal_nonfaces().unwrap());
}

fn main() {
    let p2 = Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    )
    .unwrap();
    show("P^2", &p2);

    let blowup = Fan::from_i64(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        &[&[0, 1, 3], &[1, 2, 3], &[2, 0, 3]],
    )
    .unwrap();
    show("blow-up of A^3 at the origin", &blowup);

    let singular = Fan::from_i64(2, &[&[1, 0], &[1, 2]], &[&[0, 1]]).unwrap();
    show("A^2/mu_2", &singular);

    // two quadrants that overlap in their interiors
    let bad = Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[1, 1], &[-1, 1]],
        &[&[0, 1], &[2, 3]],
    )
    .unwrap();
    show("overlapping cones", &bad);

    let hat = p2
        .hat_fan(&[
            vec![1.into(), 0.into()],
            vec![0.into(), 1.into()],
            vec![(-1).into(), (-1).into()],
        ])
        .unwrap();
    println!("hat fan of P^2 with its own rays: {:?}", hat.max_cones());
}
