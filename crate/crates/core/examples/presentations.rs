//! Parsing, rendering and degree-by-degree comparison of graded rings.

use toric_chow::present::{
    graded_equal, graded_invariants, parse_presentation, render, simplify, Format,
};

fn main() -> toric_chow::Result<()> {
    let p = parse_presentation("Z[a,b,c]/(a - 2*b - c, (a+b)^2 - 3*c^2)")?;
    for format in [Format::Text, Format::Latex, Format::Json] {
        println!("{}", render(&p, format));
    }
    let s = simplify(&p);
    println!("simplified: {}", render(&s, Format::Text));
    print!("{}", graded_invariants(&s, 4)?);
    println!(
        "same graded pieces up to degree 5: {}",
        graded_equal(&p, &s, 5)?
    );

    match parse_presentation("Z[a,b]/(a + b^2)") {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
