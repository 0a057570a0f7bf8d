use qrefl::perm::{Bsgs, Perm};

fn transposition(degree: usize, a: usize, b: usize) -> Perm {
    let mut im: Vec<u16> = (0..degree as u16).collect();
    im.swap(a, b);
    Perm::from_images(im)
}

fn cycle(degree: usize, pts: &[usize]) -> Perm {
    let mut im: Vec<u16> = (0..degree as u16).collect();
    for w in pts.windows(2) {
        im[w[0]] = w[1] as u16;
    }
    im[*pts.last().unwrap()] = pts[0] as u16;
    Perm::from_images(im)
}

fn main() {
    let gens = vec![
        transposition(4, 0, 1),
        cycle(4, &[0, 1, 2, 3]),
        transposition(4, 2, 3),
    ];
    let orders = [
        vec![gens[0].clone(), gens[1].clone(), gens[2].clone()],
        vec![gens[2].clone(), gens[0].clone(), gens[1].clone()],
        vec![gens[1].clone(), gens[2].clone(), gens[0].clone()],
    ];
    for (k, g) in orders.iter().enumerate() {
        let b = Bsgs::new(4, g.clone());
        println!("shuffle {k}: order {} base {:?} orbits {:?}", b.order(), b.base(), b.orbit_lengths());
    }
}
