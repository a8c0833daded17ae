//! The pool-restricted transcendence-degree heuristic on the commutative
//! plane. The true quantity takes a sup over all frames and an inf over
//! all regular elements; finite pools bound neither side, which is why
//! every report carries its label.

use gklab::growth::tdeg_pool_estimate;
use gklab::{Frame, Presentation};

fn main() {
    let pres = Presentation::parse(
        "domain: Z\ngenerators: x y\nrule: y x -> x y\nflags: pbw commutative\n",
    )
    .unwrap();
    let frame = |elems: &[&str]| {
        Frame::new(
            &pres,
            elems.iter().map(|e| pres.parse_poly(e).unwrap()).collect(),
        )
        .unwrap()
    };

    let frames = vec![frame(&["1", "x"]), frame(&["1", "x", "y"])];
    let candidates = vec![
        pres.parse_poly("1").unwrap(),
        pres.parse_poly("x").unwrap(),
        pres.parse_poly("x + y").unwrap(),
    ];

    let report = tdeg_pool_estimate(&pres, &frames, &candidates, 10).unwrap();
    println!("frame  candidate  estimate");
    for t in &report.triples {
        println!(
            "{:>5}  {:>9}  {}",
            t.frame_index, t.candidate_index, t.estimate.dim
        );
    }
    println!("\nper-frame minima: {:?}", report
        .per_frame_min
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>());
    println!("summary: {} ({})", report.summary, report.label);
}
