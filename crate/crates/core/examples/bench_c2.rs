use qrefl::matrix::{gate, Gate};
use qrefl::table::{enumerate_matrix_group, quotient, Mode};
use std::time::Instant;

fn main() {
    let i2 = gate(Gate::I);
    let gens = [
        gate(Gate::H).tensor(&i2),
        i2.tensor(&gate(Gate::H)),
        gate(Gate::P).tensor(&i2),
        i2.tensor(&gate(Gate::P)),
        gate(Gate::Cz),
    ];
    let t0 = Instant::now();
    let c2 = enumerate_matrix_group(&gens, Mode::Full, 2_000_000).unwrap();
    println!("C2: {} in {:?}", c2.order(), t0.elapsed());

    let t0 = Instant::now();
    let z = c2.center();
    let ctil = quotient(&c2, &z).unwrap();
    println!("C2/Z: {} in {:?}", ctil.order(), t0.elapsed());

    // P2 as matrices from the five generator observables
    let x = gate(Gate::X);
    let zg = gate(Gate::Z);
    let y = gate(Gate::Y);
    let p2gens = [
        i2.tensor(&x),
        x.tensor(&x),
        zg.tensor(&zg),
        y.tensor(&zg),
        zg.tensor(&x),
    ];
    let t0 = Instant::now();
    let p2 = enumerate_matrix_group(&p2gens, Mode::Full, 1000).unwrap();
    println!("P2: {} in {:?}", p2.order(), t0.elapsed());

    let t0 = Instant::now();
    let q = quotient(&c2, &p2).unwrap();
    println!("C2/P2: {} in {:?}", q.order(), t0.elapsed());

    let t0 = Instant::now();
    let n = c2.index2_normal_subgroup_count();
    println!("index-2 normal subgroups: {} in {:?}", n, t0.elapsed());
}
