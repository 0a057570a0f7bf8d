use qrefl::aut::{automorphism_count, minimal_generators, DenseGroup};
use qrefl::pauli::pauli_group_table;
use std::time::Instant;

fn main() {
    let p2 = pauli_group_table(2);
    let t0 = Instant::now();
    let d = DenseGroup::from_table(&p2).unwrap();
    let gens = minimal_generators(&d);
    println!("P2 dense + {} min gens in {:?}", gens.len(), t0.elapsed());
    let t0 = Instant::now();
    let count = automorphism_count(&d, &gens);
    println!("|Aut(P2)| = {count} in {:?}", t0.elapsed());
}
