//! Cyclic monomial modules over the commutative plane. Killing y leaves
//! a line (dimension drops from 2 to 1); killing both generators leaves
//! a point.

use gklab::growth::{module_growth_sequence, MonomialModule};
use gklab::{estimate_gkdim, growth_sequence, Frame, Presentation};

fn main() {
    let pres = Presentation::parse(
        "domain: Z\ngenerators: x y\nrule: y x -> x y\nflags: pbw commutative\n",
    )
    .unwrap();
    let frame = Frame::new(
        &pres,
        ["1", "x", "y"].iter().map(|e| pres.parse_poly(e).unwrap()).collect(),
    )
    .unwrap();

    let algebra = growth_sequence(&pres, &frame, 10).unwrap();
    let alg_est = estimate_gkdim(&algebra, 3, 6).unwrap();
    println!("algebra ranks   {:?}", algebra.values);
    println!("algebra dim     {}", alg_est.dim);

    for (label, ann) in [("A / (y)", vec!["y"]), ("A / (x, y)", vec!["x", "y"])] {
        let ann_words = ann.iter().map(|w| pres.parse_word(w).unwrap()).collect();
        let gens = vec![pres.parse_word("1").unwrap()];
        let module = MonomialModule::new(&pres, ann_words, gens).unwrap();
        let seq = module_growth_sequence(&pres, &module, &frame, 10).unwrap();
        let est = estimate_gkdim(&seq, 3, 6).unwrap();
        println!("\n{label}");
        println!("  module ranks  {:?}", seq.values);
        println!("  module dim    {} (class {:?})", est.dim, est.class);
        assert!(
            seq.values.iter().zip(&algebra.values).all(|(m, a)| m <= a),
            "a cyclic module can never outgrow the algebra"
        );
    }
}
