//! Commutative polynomial rings in one to three variables. The rank at
//! degree n counts monomials of total degree at most n, and the estimate
//! recovers the variable count as the dimension.

use gklab::growth::standard_monomial_count;
use gklab::{estimate_gkdim, growth_sequence, Frame, Presentation};
use num_bigint::BigUint;

fn ring(m: usize) -> String {
    let names = ["x", "y", "z"];
    let gens = names[..m].join(" ");
    let mut src = format!("domain: Z\ngenerators: {gens}\n");
    for j in 1..m {
        for i in 0..j {
            src.push_str(&format!("rule: {} {} -> {} {}\n", names[j], names[i], names[i], names[j]));
        }
    }
    src.push_str("flags: pbw commutative\n");
    src
}

fn main() {
    for m in 1..=3 {
        let pres = Presentation::parse(&ring(m)).unwrap();
        let mut elems = vec![pres.parse_poly("1").unwrap()];
        for g in pres.generators() {
            elems.push(pres.parse_poly(g).unwrap());
        }
        let frame = Frame::new(&pres, elems).unwrap();
        let seq = growth_sequence(&pres, &frame, 10).unwrap();
        let est = estimate_gkdim(&seq, 3, 6).unwrap();
        println!("Z[{}]:", pres.generators().join(", "));
        println!("  ranks {:?}", seq.values);
        println!("  dimension {} (exact: {})", est.dim, est.exact);
        for (n, d) in seq.values.iter().enumerate() {
            assert_eq!(BigUint::from(*d), standard_monomial_count(m, n));
        }
    }
}
