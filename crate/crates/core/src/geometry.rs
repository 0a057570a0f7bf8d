//! The commutation incidence geometry of two-qubit Pauli observables: the
//! generalized quadrangle GQ(2,2), its geometric hyperplanes, the Mermin
//! square sign pattern, and the independent-set subgroup chains.
//!
//! Points are the 15 nonzero symplectic classes with phase-0
//! representatives; collinearity is commutation, and the 15 lines are the
//! pairwise-commuting triples {a, b, a+b}. Group-generating operations use
//! the Hermitian representatives i^(x·z)·X^x Z^z — those are the
//! observables whose products the sign claims are about.

use std::sync::Arc;

use crate::error::GeomError;
use crate::matrix::ExactMatrix;
use crate::pauli::{PauliElement, PauliOps};
use crate::table::{GroupOps, GroupTable, Mode};

#[derive(Debug, Clone)]
pub struct IncidenceGeometry {
    pub points: Vec<PauliElement>,
    pub lines: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HyperplaneClass {
    PerpSet,
    Grid,
    Ovoid,
}

impl HyperplaneClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            HyperplaneClass::PerpSet => "perp-set",
            HyperplaneClass::Grid => "grid",
            HyperplaneClass::Ovoid => "ovoid",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Hyperplane {
    pub class: HyperplaneClass,
    pub points: Vec<usize>,
    pub internal_lines: Vec<usize>,
}

/// The 15-point, 15-line commutation geometry of the two-qubit system.
pub fn two_qubit_geometry() -> IncidenceGeometry {
    let points: Vec<PauliElement> = crate::pauli::unsigned_points(2)
        .into_iter()
        .map(|(x, z)| PauliElement::new(2, 0, x, z))
        .collect();
    let mut lines = Vec::new();
    let n = points.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (pa, pb, pc) = (&points[a], &points[b], &points[c]);
                if pa.commutes_with(pb) && pa.commutes_with(pc) && pb.commutes_with(pc) {
                    lines.push(vec![a, b, c]);
                }
            }
        }
    }
    IncidenceGeometry { points, lines }
}

impl IncidenceGeometry {
    pub fn point_index(&self, x: u16, z: u16) -> Option<usize> {
        self.points.iter().position(|p| p.x == x && p.z == z)
    }

    pub fn collinear(&self, a: usize, b: usize) -> bool {
        self.lines
            .iter()
            .any(|l| l.contains(&a) && l.contains(&b))
    }

    /// Edges of the collinearity graph.
    pub fn collinearity_edges(&self) -> Vec<(usize, usize)> {
        let n = self.points.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.collinear(a, b) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }
}

/// The tensor-product observable of a point's symplectic class: the matrix
/// ⊗_q σ_(letter q), i.e. i^k·X^x Z^z where k counts the σ_y factors. This
/// is the representative whose products the sign claims are about.
pub fn observable_rep(p: &PauliElement) -> PauliElement {
    let y_count = (p.x & p.z).count_ones() as u8;
    PauliElement::new(p.n as usize, y_count & 3, p.x, p.z)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GqAxiomReport {
    pub line_size_ok: bool,
    pub point_degree_ok: bool,
    pub near_linear_ok: bool,
    pub antiflag_ok: bool,
}

impl GqAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.line_size_ok && self.point_degree_ok && self.near_linear_ok && self.antiflag_ok
    }
}

/// Verify the GQ(s,t) axioms: s+1 points per line, t+1 lines per point,
/// near-linearity, and the antiflag axiom (a point off a line sees exactly
/// one line meeting it).
pub fn check_gq_axioms(g: &IncidenceGeometry, s: usize, t: usize) -> GqAxiomReport {
    let line_size_ok = g.lines.iter().all(|l| l.len() == s + 1);
    let point_degree_ok = (0..g.points.len()).all(|p| {
        g.lines.iter().filter(|l| l.contains(&p)).count() == t + 1
    });
    let mut near_linear_ok = true;
    for a in 0..g.points.len() {
        for b in a + 1..g.points.len() {
            let shared = g
                .lines
                .iter()
                .filter(|l| l.contains(&a) && l.contains(&b))
                .count();
            if shared > 1 {
                near_linear_ok = false;
            }
        }
    }
    let mut antiflag_ok = true;
    for (p, _) in g.points.iter().enumerate() {
        for line in &g.lines {
            if line.contains(&p) {
                continue;
            }
            let meeting = g
                .lines
                .iter()
                .filter(|l| l.contains(&p) && l.iter().any(|q| line.contains(q)))
                .count();
            if meeting != 1 {
                antiflag_ok = false;
            }
        }
    }
    GqAxiomReport {
        line_size_ok,
        point_degree_ok,
        near_linear_ok,
        antiflag_ok,
    }
}

/// Exhaustive scan over all point subsets for the hyperplane condition:
/// every line has exactly one point inside or lies entirely inside.
pub fn enumerate_hyperplanes(g: &IncidenceGeometry) -> Result<Vec<Hyperplane>, GeomError> {
    let n = g.points.len();
    if n > 24 {
        return Err(GeomError::TooManyPoints(n));
    }
    let mut found = Vec::new();
    // proper nonempty subsets only: the full point set satisfies the
    // condition vacuously and is not a geometric hyperplane
    'subset: for mask in 1u32..((1 << n) - 1) {
        let inside = |p: usize| mask & (1 << p) != 0;
        let mut internal_lines = Vec::new();
        for (li, line) in g.lines.iter().enumerate() {
            let count = line.iter().filter(|&&p| inside(p)).count();
            if count == line.len() {
                internal_lines.push(li);
            } else if count != 1 {
                continue 'subset;
            }
        }
        let points: Vec<usize> = (0..n).filter(|&p| inside(p)).collect();
        let class = match (points.len(), internal_lines.len()) {
            (7, 3) => HyperplaneClass::PerpSet,
            (9, 6) => HyperplaneClass::Grid,
            (5, 0) => HyperplaneClass::Ovoid,
            other => unreachable!("unexpected hyperplane shape {other:?}"),
        };
        found.push(Hyperplane {
            class,
            points,
            internal_lines,
        });
    }
    Ok(found)
}

pub fn hyperplane_census(planes: &[Hyperplane]) -> (usize, usize, usize) {
    let count = |c: HyperplaneClass| planes.iter().filter(|h| h.class == c).count();
    (
        count(HyperplaneClass::PerpSet),
        count(HyperplaneClass::Grid),
        count(HyperplaneClass::Ovoid),
    )
}

/// Sign of the exact matrix product of a line's three observables
/// (Hermitian representatives commute, so the order is immaterial).
pub fn line_product_sign(g: &IncidenceGeometry, line: &[usize]) -> i8 {
    let mut acc = ExactMatrix::identity(4);
    for &p in line {
        acc = acc.mul(&observable_rep(&g.points[p]).to_matrix().unwrap());
    }
    if acc == ExactMatrix::identity(4) {
        1
    } else if acc == ExactMatrix::identity(4).neg() {
        -1
    } else {
        unreachable!("line product must be ±I")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MerminSigns {
    /// signs per line, one entry per parallel class; the class containing
    /// the lowest-numbered internal line comes first
    pub classes: [Vec<i8>; 2],
}

impl MerminSigns {
    pub fn global_product(&self) -> i8 {
        self.classes
            .iter()
            .flat_map(|c| c.iter())
            .product::<i8>()
    }
}

/// Split a grid's six internal lines into the two parallel classes (each
/// partitions the nine points) and compute the exact ±1 product per line.
pub fn mermin_square_signs(
    g: &IncidenceGeometry,
    h: &Hyperplane,
) -> Result<MerminSigns, GeomError> {
    if h.class != HyperplaneClass::Grid {
        return Err(GeomError::NotAGrid);
    }
    let lines: Vec<&Vec<usize>> = h.internal_lines.iter().map(|&li| &g.lines[li]).collect();
    let disjoint = |a: &[usize], b: &[usize]| a.iter().all(|p| !b.contains(p));
    let first = lines[0];
    let mut class_a = vec![0usize];
    let mut class_b = Vec::new();
    for (k, line) in lines.iter().enumerate().skip(1) {
        if disjoint(first, line) {
            class_a.push(k);
        } else {
            class_b.push(k);
        }
    }
    if class_a.len() != 3 || class_b.len() != 3 {
        return Err(GeomError::NotAGrid);
    }
    let signs = |class: &[usize]| -> Vec<i8> {
        class
            .iter()
            .map(|&k| line_product_sign(g, lines[k]))
            .collect()
    };
    Ok(MerminSigns {
        classes: [signs(&class_a), signs(&class_b)],
    })
}

/// True when all nine grid points are entangled-type observables (no
/// identity tensor factor on either qubit).
pub fn grid_is_entangled(g: &IncidenceGeometry, h: &Hyperplane) -> bool {
    h.points.iter().all(|&p| {
        let pt = &g.points[p];
        let q0 = (pt.x | pt.z) & 1 != 0;
        let q1 = (pt.x | pt.z) & 2 != 0;
        q0 && q1
    })
}

/// Subgroup of the Pauli group generated by the observables of a point
/// subset (no independence requirement).
pub fn subset_group(
    g: &IncidenceGeometry,
    subset: &[usize],
) -> Arc<GroupTable<PauliElement>> {
    let gens: Vec<PauliElement> = subset
        .iter()
        .map(|&p| observable_rep(&g.points[p]))
        .collect();
    let n = g.points[0].n as usize;
    let ops: Arc<dyn GroupOps<PauliElement>> = Arc::new(PauliOps { n });
    Arc::new(GroupTable::enumerate(ops, gens, Mode::Full, 4 * 4usize.pow(n as u32)).unwrap())
}

/// The chain g₂ = ⟨m₁,m₂⟩, …, g_k = ⟨m₁..m_k⟩ over pairwise-anticommuting
/// observables.
pub fn independent_set_chain(
    observables: &[PauliElement],
    up_to: usize,
) -> Result<Vec<Arc<GroupTable<PauliElement>>>, GeomError> {
    assert!(up_to <= observables.len());
    for (i, a) in observables.iter().enumerate() {
        for b in observables.iter().skip(i + 1) {
            if a.commutes_with(b) {
                return Err(GeomError::NotIndependent);
            }
        }
    }
    let n = observables[0].n as usize;
    let mut chain = Vec::new();
    for k in 2..=up_to {
        let gens: Vec<PauliElement> = observables[..k].to_vec();
        let ops: Arc<dyn GroupOps<PauliElement>> = Arc::new(PauliOps { n });
        chain.push(Arc::new(
            GroupTable::enumerate(ops, gens, Mode::Full, 4 * 4usize.pow(n as u32)).unwrap(),
        ));
    }
    Ok(chain)
}

/// The structurally located reference hyperplanes: the perp-set centered at
/// σx⊗σ₀, the all-entangled grid, and the lexicographically first ovoid
/// containing σ₀⊗σx.
pub fn reference_hyperplanes(
    g: &IncidenceGeometry,
    planes: &[Hyperplane],
) -> (Hyperplane, Hyperplane, Hyperplane) {
    let center = g.point_index(1, 0).expect("σx⊗σ0 present");
    let perp = planes
        .iter()
        .find(|h| {
            h.class == HyperplaneClass::PerpSet
                && h.points.contains(&center)
                && h.points
                    .iter()
                    .all(|&p| p == center || g.collinear(center, p))
        })
        .expect("perp-set centered at σx⊗σ0");
    let grid = planes
        .iter()
        .find(|h| h.class == HyperplaneClass::Grid && grid_is_entangled(g, h))
        .expect("the all-entangled grid");
    let first_point = g.point_index(2, 0).expect("σ0⊗σx present");
    let ovoid = planes
        .iter()
        .find(|h| h.class == HyperplaneClass::Ovoid && h.points.contains(&first_point))
        .expect("an ovoid through σ0⊗σx");
    (perp.clone(), grid.clone(), ovoid.clone())
}

/// Deterministic search for a three-qubit maximal independent set whose
/// chain realizes a target Aut-order sequence: candidate sets are built in
/// lexicographic symplectic order and the first match wins. The match
/// predicate is supplied by the caller since automorphism counting lives a
/// layer above.
pub fn three_qubit_independent_sets() -> impl Iterator<Item = Vec<PauliElement>> {
    let all: Vec<PauliElement> = crate::pauli::unsigned_points(3)
        .into_iter()
        .map(|(x, z)| observable_rep(&PauliElement::new(3, 0, x, z)))
        .collect();
    ThreeQubitSets {
        all,
        stack: vec![0],
        chosen: Vec::new(),
    }
}

struct ThreeQubitSets {
    all: Vec<PauliElement>,
    stack: Vec<usize>,
    chosen: Vec<usize>,
}

impl Iterator for ThreeQubitSets {
    type Item = Vec<PauliElement>;

    fn next(&mut self) -> Option<Vec<PauliElement>> {
        // depth-first lexicographic enumeration of 6-element
        // pairwise-anticommuting subsets
        loop {
            let next = self.stack.pop()?;
            if next >= self.all.len() {
                self.chosen.pop();
                continue;
            }
            self.stack.push(next + 1);
            let cand = &self.all[next];
            let compatible = self
                .chosen
                .iter()
                .all(|&c| !self.all[c].commutes_with(cand));
            if !compatible {
                continue;
            }
            self.chosen.push(next);
            if self.chosen.len() == 6 {
                let result = self.chosen.iter().map(|&i| self.all[i]).collect();
                self.chosen.pop();
                return Some(result);
            }
            self.stack.push(next + 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::two;

    #[test]
    fn fifteen_points_fifteen_lines() {
        let g = two_qubit_geometry();
        assert_eq!(g.points.len(), 15);
        assert_eq!(g.lines.len(), 15);
    }

    #[test]
    fn named_line_present() {
        let g = two_qubit_geometry();
        // {σ0⊗σx, σx⊗σ0, σx⊗σx} is a line
        let a = g.point_index(0b10, 0).unwrap();
        let b = g.point_index(0b01, 0).unwrap();
        let c = g.point_index(0b11, 0).unwrap();
        assert!(g
            .lines
            .iter()
            .any(|l| l.contains(&a) && l.contains(&b) && l.contains(&c)));
        // anticommuting pair lies on no common line
        let d = g.point_index(0b10, 0b10).unwrap(); // σ0⊗σy
        assert!(!g.collinear(a, d));
    }

    #[test]
    fn gq22_axioms() {
        let g = two_qubit_geometry();
        assert!(check_gq_axioms(&g, 2, 2).all_pass());
    }

    #[test]
    fn broken_geometries_fail_axioms() {
        let g = two_qubit_geometry();
        // duplicating a line breaks near-linearity
        let mut dup = g.clone();
        dup.lines.push(dup.lines[0].clone());
        assert!(!check_gq_axioms(&dup, 2, 2).near_linear_ok);
        // a triangle violates the antiflag axiom
        let tri = IncidenceGeometry {
            points: g.points[..3].to_vec(),
            lines: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        };
        let report = check_gq_axioms(&tri, 1, 1);
        assert!(!report.antiflag_ok);
    }

    #[test]
    fn hyperplane_census_is_15_10_6() {
        let g = two_qubit_geometry();
        let planes = enumerate_hyperplanes(&g).unwrap();
        assert_eq!(planes.len(), 31);
        assert_eq!(hyperplane_census(&planes), (15, 10, 6));
        for h in &planes {
            match h.class {
                HyperplaneClass::PerpSet => assert_eq!(h.points.len(), 7),
                HyperplaneClass::Grid => assert_eq!(h.points.len(), 9),
                HyperplaneClass::Ovoid => assert_eq!(h.points.len(), 5),
            }
        }
    }

    #[test]
    fn ovoids_are_maximal_independent_sets() {
        let g = two_qubit_geometry();
        let planes = enumerate_hyperplanes(&g).unwrap();
        for h in planes.iter().filter(|h| h.class == HyperplaneClass::Ovoid) {
            for p in 0..15 {
                if h.points.contains(&p) {
                    continue;
                }
                // some ovoid point is collinear with p
                assert!(h.points.iter().any(|&q| g.collinear(p, q)));
            }
        }
    }

    #[test]
    fn mermin_grid_signs() {
        // Exhaustive scan truth: every grid carries the Kochen–Specker
        // obstruction (global product −1, independent of representative
        // choice), and the all-entangled grid is the unique one whose
        // parallel classes split cleanly as (−,−,−)/(+,+,+).
        let g = two_qubit_geometry();
        let planes = enumerate_hyperplanes(&g).unwrap();
        let mut clean_split_grids = 0;
        for h in planes.iter().filter(|h| h.class == HyperplaneClass::Grid) {
            let signs = mermin_square_signs(&g, h).unwrap();
            assert_eq!(signs.global_product(), -1);
            let mut sorted = signs.classes.clone();
            sorted.sort();
            let clean = sorted[0] == vec![-1, -1, -1] && sorted[1] == vec![1, 1, 1];
            if clean {
                clean_split_grids += 1;
                assert!(grid_is_entangled(&g, h));
            }
            if grid_is_entangled(&g, h) {
                assert!(clean);
            }
            // each line's product squares to the identity
            for &li in &h.internal_lines {
                let s = line_product_sign(&g, &g.lines[li]);
                assert_eq!(s * s, 1);
            }
        }
        assert_eq!(clean_split_grids, 1);
    }

    #[test]
    fn single_qubit_chain_example() {
        // ⟨X, Y⟩ = {±I, ±X, ±Y, ±iZ}, order 8 with (XY)⁴ = 1
        let x = crate::pauli::sigma(1, 0, 'x');
        let y = crate::pauli::sigma(1, 0, 'y');
        let chain = independent_set_chain(&[x, y], 2).unwrap();
        assert_eq!(chain[0].order(), 8);
    }

    #[test]
    fn commuting_points_rejected() {
        let a = two(('i', 'x'));
        let b = two(('x', 'i'));
        assert_eq!(
            independent_set_chain(&[a, b], 2).unwrap_err(),
            GeomError::NotIndependent
        );
    }

    #[test]
    fn two_qubit_ovoid_chain_orders() {
        let g = two_qubit_geometry();
        let planes = enumerate_hyperplanes(&g).unwrap();
        let (_, _, ovoid) = reference_hyperplanes(&g, &planes);
        let obs: Vec<PauliElement> = ovoid
            .points
            .iter()
            .map(|&p| observable_rep(&g.points[p]))
            .collect();
        let chain = independent_set_chain(&obs, 5).unwrap();
        // |g2| = 8, |g3| = 16, |g4| = 32, g5 = g4
        assert_eq!(chain[0].order(), 8);
        assert_eq!(chain[1].order(), 16);
        assert_eq!(chain[2].order(), 32);
        assert_eq!(chain[3].order(), 32);
    }

    #[test]
    fn reference_planes_found() {
        let g = two_qubit_geometry();
        let planes = enumerate_hyperplanes(&g).unwrap();
        let (perp, grid, ovoid) = reference_hyperplanes(&g, &planes);
        assert_eq!(perp.class, HyperplaneClass::PerpSet);
        assert_eq!(grid.class, HyperplaneClass::Grid);
        assert_eq!(ovoid.class, HyperplaneClass::Ovoid);
        assert!(grid_is_entangled(&g, &grid));
    }

    #[test]
    fn three_qubit_sets_enumerate() {
        let mut iter = three_qubit_independent_sets();
        let first = iter.next().unwrap();
        assert_eq!(first.len(), 6);
        for (i, a) in first.iter().enumerate() {
            for b in first.iter().skip(i + 1) {
                assert!(!a.commutes_with(b));
            }
        }
    }
}
