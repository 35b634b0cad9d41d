//! Graded presentations `Z[x_1, ..., x_n] / (relations)` with every variable in
//! degree one: polynomial arithmetic, a linear-elimination simplifier, the
//! per-degree invariant-factor oracle, a relation parser and renderers.

mod graded;
mod parse;
mod poly;
mod presentation;
mod render;
mod simplify;

pub use graded::{
    component, graded_equal, graded_invariants, GradedTable, MAX_COMPONENT, MAX_DEGREE,
    MAX_VARIABLES,
};
pub use parse::{parse_presentation, parse_relations, variables_in};
pub use poly::{Monomial, Polynomial};
pub use presentation::{Presentation, Variable};
pub use render::{
    from_doc, poly_text, render, render_latex, render_text, to_doc, Format, PresentationDoc,
};
pub use simplify::simplify;
