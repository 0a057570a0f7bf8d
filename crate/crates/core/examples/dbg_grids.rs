use qrefl::geometry::*;

fn main() {
    let g = two_qubit_geometry();
    let planes = enumerate_hyperplanes(&g).unwrap();
    for (k, h) in planes.iter().enumerate().filter(|(_, h)| h.class == HyperplaneClass::Grid) {
        let signs = mermin_square_signs(&g, h).unwrap();
        let pts: Vec<String> = h.points.iter().map(|&p| {
            let pt = &g.points[p];
            format!("{}", observable_rep(pt))
        }).collect();
        println!(
            "grid {k}: entangled={} classes={:?} product={} points={:?}",
            grid_is_entangled(&g, h),
            signs.classes,
            signs.global_product(),
            pts
        );
    }
}
