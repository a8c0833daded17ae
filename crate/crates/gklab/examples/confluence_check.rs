//! Critical pairs and what a failed resolution costs.
//!
//! The absorbing pair `xy -> x`, `yx -> y` leaves the word xyx with two
//! competing reductions that land on different normal forms. Rank
//! computations still run, but their results are only upper bounds and
//! are marked as such.

use gklab::{growth_sequence, Frame, Presentation};

fn report(pres: &Presentation) {
    let cap = 2 * pres.max_rule_lhs_len().max(1) - 1;
    let ambiguities = pres.confluence_check(cap);
    println!("  {} ambiguities at exhaustive cap {cap}", ambiguities.len());
    for a in &ambiguities {
        let status = if a.resolved { "resolved" } else { "UNRESOLVED" };
        println!(
            "  word `{}` (rules {} and {}): {status}, branches `{}` vs `{}`",
            pres.render_word(&a.overlap_word),
            a.rule_a,
            a.rule_b,
            pres.render_poly(&a.reduction_a),
            pres.render_poly(&a.reduction_b),
        );
    }
    println!("  certified: {}", pres.confluence_certified());
}

fn main() {
    let absorbing = Presentation::parse(
        "domain: Z\ngenerators: x y\nrule: x y -> x\nrule: y x -> y\n",
    )
    .unwrap();
    println!("absorbing pair:");
    report(&absorbing);

    let frame = Frame::new(
        &absorbing,
        ["1", "x", "y"].iter().map(|e| absorbing.parse_poly(e).unwrap()).collect(),
    )
    .unwrap();
    let seq = growth_sequence(&absorbing, &frame, 6).unwrap();
    println!(
        "  ranks {:?} (upper bounds only: {})\n",
        seq.values, seq.upper_bound_only
    );

    let weyl = Presentation::parse(
        "domain: Z\ngenerators: x y\nrule: y x -> x y + 1\nflags: pbw\n",
    )
    .unwrap();
    println!("Weyl algebra:");
    report(&weyl);
}
