//! The interval calculus on its own: parse construction expressions,
//! evaluate them to dimension bounds, and show the derivation trace.

use gklab::calculus::{bergman_normalize, parse_construction};
use gklab::{eval_construction, DimBound, DimValue};
use num_rational::BigRational;

fn show(text: &str) {
    let expr = parse_construction(text).unwrap();
    let (bound, trace) = eval_construction(&expr).unwrap();
    println!("{text}\n  => {bound}");
    for step in &trace {
        println!("     {}: {} ({})", step.node, step.rule, step.cite);
    }
    println!();
}

fn main() {
    // Exact all the way: polynomial extensions add their variable count.
    show("(polyext (base \"Z\" 0 0 :commutative) :m 3)");

    // A quotient only keeps the upper end of its child's bound.
    show("(quotient (polyext (base 0 0) :m 2))");

    // Tensor products default to the max/sum envelope; a finitely
    // generated witness tightens them to the sum.
    show("(tensor (polyext (base 0 0) :m 1) (polyext (base 0 0) :m 2))");
    show("(tensor (polyext (base 0 0) :m 1) (polyext (base 0 0) :m 2) :fg)");

    // Free on two or more letters is infinite; on one letter it is a
    // polynomial ring in disguise.
    show("(freealg 2)");
    show("(freealg 1)");

    // Module nodes: the regular module has the algebra's dimension, and
    // annihilating it passes the bound through unchanged.
    show("(annmod (regmod (polyext (base 0 0) :m 2)))");

    // No algebra has a dimension strictly between 1 and 2, so a bound
    // entering that strip can be snapped to its admissible part.
    let loose = DimBound::new(
        DimValue::finite(BigRational::new(3.into(), 2.into())).unwrap(),
        DimValue::finite(BigRational::from_integer(5.into())).unwrap(),
    )
    .unwrap();
    let snapped = bergman_normalize(&loose).unwrap();
    println!("gap normalization: {loose} tightens to {snapped}");
}
