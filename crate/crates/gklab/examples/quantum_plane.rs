//! The quantum plane over Z[q]: same growth as the commutative plane,
//! but the straightening constant q is not a unit of the coefficient
//! domain, and the shape validator says so.

use gklab::{estimate_gkdim, growth_sequence, Frame, Presentation};

fn main() {
    let pres = Presentation::parse(
        "domain: Z[q]\ngenerators: x y\nrule: y x -> q x y\nflags: pbw\n",
    )
    .unwrap();

    let report = pres.validate_pbw_shape();
    println!("pbw_shape:           {}", report.pbw_shape);
    println!("quasi_commutative:   {}", report.quasi_commutative);
    println!("bijective_constants: {}", report.bijective_constants);
    for note in &report.notes {
        println!("note: {note}");
    }

    let frame = Frame::new(
        &pres,
        ["1", "x", "y"].iter().map(|e| pres.parse_poly(e).unwrap()).collect(),
    )
    .unwrap();
    let seq = growth_sequence(&pres, &frame, 10).unwrap();
    println!("\nranks over Frac(Z[q]): {:?}", seq.values);

    // q is invertible in the fraction field, so rank-wise the relation
    // yx = q xy behaves exactly like yx = xy.
    let est = estimate_gkdim(&seq, 3, 6).unwrap();
    println!("dimension {} (class {:?})", est.dim, est.class);
}
