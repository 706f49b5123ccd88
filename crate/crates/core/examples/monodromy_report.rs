//! Prints, for each m in 3..=5, how many order-m automorphisms of the fiber
//! group exist, how many give connected quandles, and how those split into
//! isomorphism classes.

use std::time::Instant;

use knotquandle::knots::{build_twist_spun_trefoil, monodromy_candidates};

fn main() {
    for m in 1..=5 {
        let start = Instant::now();
        let t = build_twist_spun_trefoil(m).expect("m in range");
        println!(
            "m={m} group={} order={} monodromy={} ({:.1?})",
            t.group_name,
            t.quandle.order(),
            if t.monodromy.len() <= 24 { format!("{:?}", t.monodromy) } else { "...".into() },
            start.elapsed()
        );
    }
    for m in 3..=5 {
        let start = Instant::now();
        let r = monodromy_candidates(m).expect("m in range");
        println!(
            "m={m}: {} candidates, {} connected, {} isomorphism classes {:?} ({:.1?})",
            r.candidates,
            r.connected.len(),
            r.iso_classes.len(),
            r.iso_classes.iter().map(Vec::len).collect::<Vec<_>>(),
            start.elapsed()
        );
    }
}
