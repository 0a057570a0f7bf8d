use qrefl::coxeter::{root_system, CoxeterType};
use std::time::Instant;

fn main() {
    for t in [CoxeterType::E6, CoxeterType::E7] {
        let t0 = Instant::now();
        let rs = root_system(t).unwrap();
        let w = rs.weyl_group();
        let t1 = t0.elapsed();
        let t0 = Instant::now();
        let d = w.derived_subgroup();
        println!(
            "{t}: {} roots, |W| = {} ({t1:?}), |W'| = {} ({:?})",
            rs.root_count(),
            w.order(),
            d.order(),
            t0.elapsed()
        );
    }
}
