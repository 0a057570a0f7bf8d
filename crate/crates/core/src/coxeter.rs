//! Root systems, Cartan matrices, Coxeter presentations and Weyl groups
//! realized as permutation groups on their root sets.
//!
//! Everything is exact: roots live in rational coordinates (half-integer
//! coordinates appear in the E-series), reflections are rational linear
//! maps, and pairwise orders m_ij are computed as exact permutation orders
//! rather than from angles.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::CoxeterError;
use crate::exact::{linalg, Rational};
use crate::perm::{Bsgs, Perm};
use crate::table::{Element, GroupOps, GroupTable, Mode};

pub type RootVec = Vec<Rational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    I2(usize),
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => write!(f, "E6"),
            CoxeterType::E7 => write!(f, "E7"),
            CoxeterType::E8 => write!(f, "E8"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::G2 => write!(f, "G2"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let up = t.to_ascii_uppercase();
        let parse_rank = |prefix: &str| -> Option<usize> {
            up.strip_prefix(prefix).and_then(|r| r.parse().ok())
        };
        if let Some(inner) = up.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m = inner
                .parse()
                .map_err(|_| CoxeterError::UnsupportedType(s.to_string()))?;
            return Ok(CoxeterType::I2(m));
        }
        match up.as_str() {
            "E6" => return Ok(CoxeterType::E6),
            "E7" => return Ok(CoxeterType::E7),
            "E8" => return Ok(CoxeterType::E8),
            "F4" => return Ok(CoxeterType::F4),
            "G2" => return Ok(CoxeterType::G2),
            _ => {}
        }
        if let Some(n) = parse_rank("A") {
            return Ok(CoxeterType::A(n));
        }
        if let Some(n) = parse_rank("B") {
            return Ok(CoxeterType::B(n));
        }
        if let Some(n) = parse_rank("D") {
            return Ok(CoxeterType::D(n));
        }
        Err(CoxeterError::UnsupportedType(s.to_string()))
    }
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

fn basis_diff(dim: usize, i: usize, j: usize) -> RootVec {
    let mut v = vec![q(0); dim];
    v[i] = q(1);
    v[j] = q(-1);
    v
}

/// Standard simple roots in rational coordinates. I₂(m) is realized only
/// for the crystallographic m ∈ {2, 3, 4, 6}; other dihedral groups are
/// handled symbolically by [`dihedral_group`].
pub fn simple_roots(t: CoxeterType) -> Result<Vec<RootVec>, CoxeterError> {
    match t {
        CoxeterType::A(n) if n >= 1 => {
            Ok((0..n).map(|i| basis_diff(n + 1, i, i + 1)).collect())
        }
        CoxeterType::B(n) if n >= 2 => {
            let mut v: Vec<RootVec> = (0..n - 1).map(|i| basis_diff(n, i, i + 1)).collect();
            let mut last = vec![q(0); n];
            last[n - 1] = q(1);
            v.push(last);
            Ok(v)
        }
        CoxeterType::D(n) if n >= 2 => {
            let mut v: Vec<RootVec> = (0..n - 1).map(|i| basis_diff(n, i, i + 1)).collect();
            let mut last = vec![q(0); n];
            last[n - 2] = q(1);
            last[n - 1] = q(1);
            v.push(last);
            Ok(v)
        }
        CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
            let rank = match t {
                CoxeterType::E6 => 6,
                CoxeterType::E7 => 7,
                _ => 8,
            };
            let mut v = Vec::with_capacity(rank);
            let mut a1 = vec![half(-1); 8];
            a1[0] = half(1);
            a1[7] = half(1);
            v.push(a1);
            let mut a2 = vec![q(0); 8];
            a2[0] = q(1);
            a2[1] = q(1);
            v.push(a2);
            for k in 0..rank - 2 {
                let mut r = vec![q(0); 8];
                r[k] = q(-1);
                r[k + 1] = q(1);
                v.push(r);
            }
            Ok(v)
        }
        CoxeterType::F4 => {
            let mut a3 = vec![q(0); 4];
            a3[3] = q(1);
            Ok(vec![
                basis_diff(4, 1, 2),
                basis_diff(4, 2, 3),
                a3,
                vec![half(1), half(-1), half(-1), half(-1)],
            ])
        }
        CoxeterType::G2 => Ok(vec![
            basis_diff(3, 0, 1),
            vec![q(-2), q(1), q(1)],
        ]),
        // short root first; this ordering is what the weight-lattice
        // computation for I2(4) uses
        CoxeterType::I2(2) => Ok(vec![
            vec![q(1), q(0)],
            vec![q(0), q(1)],
        ]),
        CoxeterType::I2(3) => simple_roots(CoxeterType::A(2)),
        CoxeterType::I2(4) => Ok(vec![vec![q(0), q(1)], basis_diff(2, 0, 1)]),
        CoxeterType::I2(6) => simple_roots(CoxeterType::G2),
        other => Err(CoxeterError::UnsupportedType(other.to_string())),
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        acc = &acc + &(x * y);
    }
    acc
}

/// s_α(x) = x − 2(x,α)/(α,α) · α
pub fn reflect(x: &[Rational], alpha: &[Rational]) -> RootVec {
    let coef = &(&q(2) * &dot(x, alpha)) / &dot(alpha, alpha);
    x.iter()
        .zip(alpha)
        .map(|(xi, ai)| xi - &(&coef * ai))
        .collect()
}

/// A root system: simple roots plus the full reflection-closed root set,
/// sorted for deterministic numbering.
#[derive(Debug)]
pub struct RootSystem {
    pub simple: Vec<RootVec>,
    pub roots: Vec<RootVec>,
}

pub const ROOT_CLOSURE_CAP: usize = 1000;

/// Orbit closure of the simple roots under the simple reflections.
pub fn generate_root_system(simple: Vec<RootVec>) -> Result<RootSystem, CoxeterError> {
    use std::collections::BTreeSet;
    let mut set: BTreeSet<RootVec> = simple.iter().cloned().collect();
    let mut queue: Vec<RootVec> = simple.clone();
    while let Some(r) = queue.pop() {
        for alpha in &simple {
            let image = reflect(&r, alpha);
            if set.insert(image.clone()) {
                queue.push(image);
                if set.len() > ROOT_CLOSURE_CAP {
                    return Err(CoxeterError::NonTerminating(ROOT_CLOSURE_CAP));
                }
            }
        }
    }
    Ok(RootSystem {
        simple,
        roots: set.into_iter().collect(),
    })
}

pub fn root_system(t: CoxeterType) -> Result<RootSystem, CoxeterError> {
    generate_root_system(simple_roots(t)?)
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// Cartan matrix C[i][j] = 2(αᵢ,αⱼ)/(αⱼ,αⱼ); every entry must be an
    /// integer for a crystallographic system.
    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>, CoxeterError> {
        let r = self.rank();
        let mut c = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let v = &(&q(2) * &dot(&self.simple[i], &self.simple[j]))
                    / &dot(&self.simple[j], &self.simple[j]);
                c[i][j] = v
                    .as_integer()
                    .ok_or(CoxeterError::NotCrystallographic)?;
            }
        }
        Ok(c)
    }

    /// The permutation each simple reflection induces on the sorted root
    /// list.
    pub fn simple_reflection_perms(&self) -> Vec<Perm> {
        let find = |v: &RootVec| -> usize {
            self.roots
                .binary_search(v)
                .expect("root set closed under reflections")
        };
        self.simple
            .iter()
            .map(|alpha| {
                let images: Vec<u16> = self
                    .roots
                    .iter()
                    .map(|r| find(&reflect(r, alpha)) as u16)
                    .collect();
                Perm::from_images(images)
            })
            .collect()
    }

    /// BSGS of the Weyl group acting on the roots.
    pub fn weyl_group(&self) -> Bsgs {
        Bsgs::new(self.root_count(), self.simple_reflection_perms())
    }

    /// Exact pairwise orders m_ij of products of simple reflections.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let perms = self.simple_reflection_perms();
        let r = perms.len();
        let mut m = vec![vec![1u32; r]; r];
        for i in 0..r {
            for j in 0..r {
                if i != j {
                    m[i][j] = perms[i].compose(&perms[j]).order() as u32;
                }
            }
        }
        m
    }
}

/// Closed-form orders of the finite Coxeter groups.
pub fn coxeter_order(t: CoxeterType) -> Result<u128, CoxeterError> {
    fn fact(n: usize) -> u128 {
        (1..=n as u128).product()
    }
    match t {
        CoxeterType::A(n) if n >= 1 => Ok(fact(n + 1)),
        CoxeterType::B(n) if n >= 2 => Ok((1u128 << n) * fact(n)),
        CoxeterType::D(n) if n >= 2 => Ok((1u128 << (n - 1)) * fact(n)),
        CoxeterType::E6 => Ok(51_840),
        CoxeterType::E7 => Ok(2_903_040),
        CoxeterType::E8 => Ok(696_729_600),
        CoxeterType::F4 => Ok(1_152),
        CoxeterType::G2 => Ok(12),
        CoxeterType::I2(m) if m >= 2 => Ok(2 * m as u128),
        other => Err(CoxeterError::UnsupportedType(other.to_string())),
    }
}

/// det(C)·C⁻¹ for the type's Cartan matrix; integral for every type in
/// scope here.
pub fn weight_lattice_matrix(t: CoxeterType) -> Result<Vec<Vec<i64>>, CoxeterError> {
    let rs = root_system(t)?;
    let c = rs.cartan_matrix()?;
    let rational: Vec<Vec<Rational>> = c
        .iter()
        .map(|row| row.iter().map(|&v| q(v)).collect())
        .collect();
    let det = linalg::det(&rational);
    let inv = linalg::invert(&rational).ok_or(CoxeterError::NonIntegralResult)?;
    inv.iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    (&det * v)
                        .as_integer()
                        .ok_or(CoxeterError::NonIntegralResult)
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Coxeter presentations and witnesses

/// Relations (sᵢsⱼ)^m[i][j] = 1 with m[i][i] = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterPresentation {
    pub m: Vec<Vec<u32>>,
}

impl CoxeterPresentation {
    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// Build from rank and off-diagonal edges (i, j, m); unlisted pairs
    /// get m = 2.
    pub fn from_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut m = vec![vec![2u32; rank]; rank];
        for i in 0..rank {
            m[i][i] = 1;
        }
        for &(i, j, v) in edges {
            m[i][j] = v;
            m[j][i] = v;
        }
        CoxeterPresentation { m }
    }

    pub fn standard(t: CoxeterType) -> Result<Self, CoxeterError> {
        if let CoxeterType::I2(m) = t {
            return Ok(Self::from_edges(2, &[(0, 1, m as u32)]));
        }
        Ok(CoxeterPresentation {
            m: root_system(t)?.coxeter_matrix(),
        })
    }

    /// Verify every relation on a tuple of permutations.
    pub fn holds_for_perms(&self, witness: &[Perm]) -> bool {
        let r = self.rank();
        if witness.len() != r {
            return false;
        }
        for i in 0..r {
            for j in 0..r {
                let prod = witness[i].compose(&witness[j]);
                if !prod.pow(self.m[i][j] as u64).is_identity() {
                    return false;
                }
            }
        }
        true
    }

    /// Verify every relation on a tuple of table element ids.
    pub fn holds_for_table<E: Element>(&self, t: &GroupTable<E>, ids: &[u32]) -> bool {
        let r = self.rank();
        if ids.len() != r {
            return false;
        }
        let id_elem = t.ops().identity();
        for i in 0..r {
            for j in 0..r {
                let prod = t.mul_elems(t.element(ids[i]), t.element(ids[j]));
                let mut acc = t.ops().identity();
                for _ in 0..self.m[i][j] {
                    acc = t.mul_elems(&acc, &prod);
                }
                if acc != id_elem {
                    return false;
                }
            }
        }
        true
    }
}

/// Graph isomorphism between two Coxeter diagrams: a permutation σ with
/// target.m[i][j] = realized.m[σ(i)][σ(j)]. Ranks in scope are ≤ 8, so a
/// direct backtracking search is fine.
pub fn diagram_match(
    target: &CoxeterPresentation,
    realized: &CoxeterPresentation,
) -> Option<Vec<usize>> {
    let r = target.rank();
    if realized.rank() != r {
        return None;
    }
    let mut sigma: Vec<usize> = Vec::with_capacity(r);
    let mut used = vec![false; r];
    fn go(
        target: &CoxeterPresentation,
        realized: &CoxeterPresentation,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = sigma.len();
        if i == target.rank() {
            return true;
        }
        for cand in 0..target.rank() {
            if used[cand] {
                continue;
            }
            let ok = (0..i).all(|j| {
                target.m[i][j] == realized.m[cand][sigma[j]]
                    && target.m[j][i] == realized.m[sigma[j]][cand]
            });
            if ok {
                used[cand] = true;
                sigma.push(cand);
                if go(target, realized, sigma, used) {
                    return true;
                }
                sigma.pop();
                used[cand] = false;
            }
        }
        false
    }
    if go(target, realized, &mut sigma, &mut used) {
        Some(sigma)
    } else {
        None
    }
}

/// Witness for a presentation inside a realized Weyl group: match the
/// target diagram to the root-system diagram and take simple reflections.
/// The returned tuple is re-verified against every relation and checked to
/// generate the full Weyl group.
pub fn weyl_presentation_witness(
    rs: &RootSystem,
    pres: &CoxeterPresentation,
) -> Option<Vec<Perm>> {
    let realized = CoxeterPresentation {
        m: rs.coxeter_matrix(),
    };
    let sigma = diagram_match(pres, &realized)?;
    let perms = rs.simple_reflection_perms();
    let witness: Vec<Perm> = sigma.iter().map(|&k| perms[k].clone()).collect();
    if !pres.holds_for_perms(&witness) {
        return None;
    }
    let full = Bsgs::new(rs.root_count(), perms).order();
    let generated = Bsgs::new(rs.root_count(), witness.clone()).order();
    if full == generated {
        Some(witness)
    } else {
        None
    }
}

/// Brute backtracking witness search over a small group table: tuples of
/// involutions, filtered by the pairwise relations, that generate the whole
/// group. Deterministic first-found in lexicographic id order.
pub fn table_presentation_witness<E: Element>(
    table: &GroupTable<E>,
    pres: &CoxeterPresentation,
    expected_order: Option<u128>,
) -> Option<Vec<u32>> {
    let rank = pres.rank();
    assert!(rank <= 3, "brute search is limited to rank <= 3");
    assert!(table.order() <= 10_000, "brute search is limited to |G| <= 1e4");
    if let Some(expect) = expected_order {
        if table.order() as u128 != expect {
            return None;
        }
    }
    let involutions: Vec<u32> = (0..table.order() as u32)
        .filter(|&id| table.element_order(id) == 2)
        .collect();
    let mut tuple: Vec<u32> = Vec::with_capacity(rank);
    fn go<E: Element>(
        table: &GroupTable<E>,
        pres: &CoxeterPresentation,
        involutions: &[u32],
        tuple: &mut Vec<u32>,
    ) -> bool {
        let i = tuple.len();
        if i == pres.rank() {
            let closure = table.subgroup_closure_ids(tuple);
            return closure.len() == table.order();
        }
        'next: for &cand in involutions {
            for (j, &prev) in tuple.iter().enumerate() {
                let prod = table.mul_ids(prev, cand);
                let mut acc = prod;
                let mut ord = 1u32;
                let id0 = table.id_of(&table.ops().identity()).unwrap();
                while acc != id0 {
                    acc = table.mul_ids(acc, prod);
                    ord += 1;
                    if ord > pres.m[j][i] {
                        continue 'next;
                    }
                }
                if pres.m[j][i] % ord != 0 {
                    continue 'next;
                }
            }
            tuple.push(cand);
            if go(table, pres, involutions, tuple) {
                return true;
            }
            tuple.pop();
        }
        false
    }
    if go(table, pres, &involutions, &mut tuple) {
        // independent re-verification of all relations
        assert!(pres.holds_for_table(table, &tuple));
        Some(tuple)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Dihedral groups, symbolically

/// ρ^rot · σ^flip in Dih_m: rotation exponent plus flip bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihElem {
    pub rot: u32,
    pub flip: bool,
}

pub struct DihOps {
    pub m: u32,
}

impl GroupOps<DihElem> for DihOps {
    fn identity(&self) -> DihElem {
        DihElem { rot: 0, flip: false }
    }

    fn mul(&self, a: &DihElem, b: &DihElem) -> DihElem {
        // ρ^r1 σ^f1 · ρ^r2 σ^f2 = ρ^(r1 ± r2) σ^(f1+f2)
        let r2 = if a.flip { (self.m - b.rot) % self.m } else { b.rot };
        DihElem {
            rot: (a.rot + r2) % self.m,
            flip: a.flip ^ b.flip,
        }
    }

    fn inverse(&self, a: &DihElem) -> DihElem {
        if a.flip {
            *a
        } else {
            DihElem {
                rot: (self.m - a.rot) % self.m,
                flip: false,
            }
        }
    }
}

/// Abstract table of Dih_m (order 2m), generated by two reflections.
pub fn dihedral_group(m: u32) -> Arc<GroupTable<DihElem>> {
    assert!(m >= 2);
    let ops: Arc<dyn GroupOps<DihElem>> = Arc::new(DihOps { m });
    let gens = vec![
        DihElem { rot: 0, flip: true },
        DihElem { rot: 1, flip: true },
    ];
    Arc::new(GroupTable::enumerate(ops, gens, Mode::Full, 2 * m as usize).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_roots_and_cartan() {
        let rs = root_system(CoxeterType::A(2)).unwrap();
        assert_eq!(rs.root_count(), 6);
        assert_eq!(rs.cartan_matrix().unwrap(), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(rs.weyl_group().order(), 6);
    }

    #[test]
    fn b2_cartan() {
        let rs = root_system(CoxeterType::B(2)).unwrap();
        assert_eq!(rs.root_count(), 8);
        // long root first in the B-series basis; the transpose convention
        // gives the other orientation
        assert_eq!(rs.cartan_matrix().unwrap(), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn d5_roots() {
        let rs = root_system(CoxeterType::D(5)).unwrap();
        assert_eq!(rs.root_count(), 40);
        assert_eq!(rs.weyl_group().order(), 1920);
    }

    #[test]
    fn e6_system() {
        let rs = root_system(CoxeterType::E6).unwrap();
        assert_eq!(rs.root_count(), 72);
        let c = rs.cartan_matrix().unwrap();
        let cr: Vec<Vec<Rational>> = c
            .iter()
            .map(|row| row.iter().map(|&v| q(v)).collect())
            .collect();
        assert_eq!(linalg::det(&cr), q(3));
    }

    #[test]
    fn root_system_properties() {
        // property I: only ±1 multiples; property III: Cartan integers
        for t in [
            CoxeterType::A(3),
            CoxeterType::B(3),
            CoxeterType::D(4),
            CoxeterType::G2,
        ] {
            let rs = root_system(t).unwrap();
            for (i, a) in rs.roots.iter().enumerate() {
                for (j, b) in rs.roots.iter().enumerate() {
                    if i != j {
                        // b = λa only for λ = −1
                        let ratio: Option<Rational> = {
                            let mut lambda = None;
                            let mut ok = true;
                            for (x, y) in a.iter().zip(b) {
                                if x.is_zero() != y.is_zero() {
                                    ok = false;
                                    break;
                                }
                                if !x.is_zero() {
                                    let r = y / x;
                                    match &lambda {
                                        None => lambda = Some(r),
                                        Some(l) if *l == r => {}
                                        _ => {
                                            ok = false;
                                            break;
                                        }
                                    }
                                }
                            }
                            if ok {
                                lambda
                            } else {
                                None
                            }
                        };
                        if let Some(l) = ratio {
                            assert_eq!(l, q(-1), "non-trivial multiple in root system");
                        }
                    }
                    // crystallographic integers
                    let v = &(&q(2) * &dot(a, b)) / &dot(a, a);
                    assert!(v.is_integer());
                }
            }
        }
    }

    #[test]
    fn non_crystallographic_closure_diverges() {
        // (1,0) and (3/5,4/5): rational unit vectors at an angle that is
        // not a rational multiple of π; the reflection orbit never closes
        let bad = vec![
            vec![q(1), q(0)],
            vec![Rational::new(3, 5), Rational::new(4, 5)],
        ];
        assert_eq!(
            generate_root_system(bad).unwrap_err(),
            CoxeterError::NonTerminating(ROOT_CLOSURE_CAP)
        );
    }

    #[test]
    fn closed_form_orders() {
        assert_eq!(coxeter_order(CoxeterType::F4).unwrap(), 1152);
        assert_eq!(coxeter_order(CoxeterType::I2(6)).unwrap(), 12);
        assert_eq!(coxeter_order(CoxeterType::D(5)).unwrap(), 1920);
        assert_eq!(coxeter_order(CoxeterType::A(3)).unwrap(), 24);
        assert_eq!(coxeter_order(CoxeterType::E7).unwrap(), 2903040);
    }

    #[test]
    fn weyl_orders_match_closed_form() {
        for t in [
            CoxeterType::A(2),
            CoxeterType::A(3),
            CoxeterType::A(4),
            CoxeterType::B(2),
            CoxeterType::B(3),
            CoxeterType::D(4),
            CoxeterType::D(5),
            CoxeterType::F4,
            CoxeterType::G2,
        ] {
            let rs = root_system(t).unwrap();
            assert_eq!(
                rs.weyl_group().order(),
                coxeter_order(t).unwrap(),
                "order mismatch for {t}"
            );
        }
    }

    #[test]
    fn weight_lattices() {
        assert_eq!(
            weight_lattice_matrix(CoxeterType::A(2)).unwrap(),
            vec![vec![2, 1], vec![1, 2]]
        );
        // computed value for I2(4); the printed variant elsewhere differs
        assert_eq!(
            weight_lattice_matrix(CoxeterType::I2(4)).unwrap(),
            vec![vec![2, 1], vec![2, 2]]
        );
    }

    #[test]
    fn e6_weight_lattice_matches_reference() {
        let expect = vec![
            vec![4, 3, 5, 6, 4, 2],
            vec![3, 6, 6, 9, 6, 3],
            vec![5, 6, 10, 12, 8, 4],
            vec![6, 9, 12, 18, 12, 6],
            vec![4, 6, 8, 12, 10, 5],
            vec![2, 3, 4, 6, 5, 4],
        ];
        assert_eq!(weight_lattice_matrix(CoxeterType::E6).unwrap(), expect);
    }

    #[test]
    fn dihedral_tables() {
        assert_eq!(dihedral_group(6).order(), 12);
        assert_eq!(dihedral_group(4).order(), 8);
        let d2 = dihedral_group(2);
        assert_eq!(d2.order(), 4);
        // Z2 x Z2: every element is an involution
        for id in 0..4 {
            assert!(d2.element_order(id) <= 2);
        }
    }

    #[test]
    fn g2_witness_in_dih6() {
        let d6 = dihedral_group(6);
        let pres = CoxeterPresentation::from_edges(2, &[(0, 1, 6)]);
        let w = table_presentation_witness(&d6, &pres, Some(12)).unwrap();
        assert!(pres.holds_for_table(&d6, &w));
    }

    #[test]
    fn identity_tuple_is_rejected() {
        // relations hold trivially on identities but generation fails
        let d6 = dihedral_group(6);
        let pres = CoxeterPresentation::from_edges(2, &[(0, 1, 6)]);
        let id0 = d6.id_of(&DihElem { rot: 0, flip: false }).unwrap();
        assert!(pres.holds_for_table(&d6, &[id0, id0]));
        assert_ne!(d6.subgroup_closure_ids(&[id0, id0]).len(), d6.order());
    }

    #[test]
    fn e6_diagram_matches_itself() {
        let rs = root_system(CoxeterType::E6).unwrap();
        // the reference presentation with edges 1-3, 3-4, 2-4, 4-5, 5-6
        let pres = CoxeterPresentation::from_edges(
            6,
            &[(0, 2, 3), (2, 3, 3), (1, 3, 3), (3, 4, 3), (4, 5, 3)],
        );
        let w = weyl_presentation_witness(&rs, &pres).unwrap();
        assert!(pres.holds_for_perms(&w));
    }

    #[test]
    fn type_parsing() {
        assert_eq!("A3".parse::<CoxeterType>().unwrap(), CoxeterType::A(3));
        assert_eq!("e6".parse::<CoxeterType>().unwrap(), CoxeterType::E6);
        assert_eq!(
            "I2(6)".parse::<CoxeterType>().unwrap(),
            CoxeterType::I2(6)
        );
        assert!("H3".parse::<CoxeterType>().is_err());
    }
}
