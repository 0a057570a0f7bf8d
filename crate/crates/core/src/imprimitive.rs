//! Imprimitive unitary reflection groups G(m,p,n) = A(m,p,n) ⋊ S_n for
//! m ∈ {1,2,4,8} (so that the diagonal roots of unity live in Q(ζ₈)), plus
//! the relation data of the exceptional presentations No 9 and No 31.
//!
//! Small members are enumerated outright as monomial matrix groups; large
//! ones (G(8,2,5) has order 1 966 080) are realized faithfully as
//! permutations of the m·n coordinate-axis classes {ζₘ^k e_i}.

use std::sync::Arc;

use crate::error::ImprimitiveError;
use crate::matrix::ExactMatrix;
use crate::perm::{Bsgs, Perm};
use crate::table::{enumerate_matrix_group, GroupTable, Mode, DEFAULT_CAP};
use crate::CycEight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImprimitiveSpec {
    pub m: u64,
    pub p: u64,
    pub n: u64,
}

impl ImprimitiveSpec {
    pub fn new(m: u64, p: u64, n: u64) -> Result<Self, ImprimitiveError> {
        if p == 0 || m == 0 || n == 0 || m % p != 0 {
            return Err(ImprimitiveError::InvalidSpec { m, p });
        }
        Ok(ImprimitiveSpec { m, p, n })
    }

    /// mⁿ · n! / p
    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        (self.m as u128).pow(self.n as u32) * fact / self.p as u128
    }
}

fn zeta_m(m: u64) -> Result<CycEight, ImprimitiveError> {
    match m {
        1 => Ok(CycEight::one()),
        2 => Ok(CycEight::from_int(-1)),
        4 => Ok(CycEight::i()),
        8 => Ok(CycEight::zeta_pow(1)),
        other => Err(ImprimitiveError::UnsupportedRootOfUnity(other)),
    }
}

/// Generating matrices: the n−1 adjacent transpositions, the diagonal
/// Diag(ζₘ, ζₘ⁻¹, 1, …) generating the determinant-one diagonals, and
/// Diag(ζₘ^p, 1, …) when p < m.
pub fn generators(spec: &ImprimitiveSpec) -> Result<Vec<ExactMatrix>, ImprimitiveError> {
    let n = spec.n as usize;
    let zeta = zeta_m(spec.m)?;
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut t = ExactMatrix::identity(n);
        t.set(i, i, CycEight::zero());
        t.set(i + 1, i + 1, CycEight::zero());
        t.set(i, i + 1, CycEight::one());
        t.set(i + 1, i, CycEight::one());
        gens.push(t);
    }
    if spec.m > 1 && n >= 2 {
        let mut d = ExactMatrix::identity(n);
        d.set(0, 0, zeta.clone());
        d.set(1, 1, zeta.inv().expect("root of unity"));
        gens.push(d);
    }
    if spec.p < spec.m {
        let mut d = ExactMatrix::identity(n);
        let mut w = CycEight::one();
        for _ in 0..spec.p {
            w = w.mul(&zeta);
        }
        d.set(0, 0, w);
        gens.push(d);
    } else if spec.m > 1 && n == 1 {
        // G(m,m,1) is trivial; nothing to add
    }
    Ok(gens)
}

/// Full matrix-group table; errors with CapExceeded beyond `cap`.
pub fn enumerate(
    spec: &ImprimitiveSpec,
    cap: usize,
) -> Result<Arc<GroupTable<ExactMatrix>>, crate::error::TableError> {
    let gens = generators(spec).map_err(|_| crate::error::TableError::NotUnitary)?;
    if gens.is_empty() {
        let ops: Arc<dyn crate::table::GroupOps<ExactMatrix>> =
            Arc::new(MatIdentOps { dim: spec.n as usize });
        return Ok(Arc::new(GroupTable::from_elements(
            ops,
            vec![ExactMatrix::identity(spec.n as usize)],
            Vec::new(),
        )));
    }
    enumerate_matrix_group(&gens, Mode::Full, cap)
}

struct MatIdentOps {
    dim: usize,
}

impl crate::table::GroupOps<ExactMatrix> for MatIdentOps {
    fn identity(&self) -> ExactMatrix {
        ExactMatrix::identity(self.dim)
    }
    fn mul(&self, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        a.mul(b)
    }
    fn inverse(&self, a: &ExactMatrix) -> ExactMatrix {
        a.adjoint()
    }
}

/// Faithful permutation realization on the m·n axis classes ζₘ^k·e_i;
/// point (i, k) is index i·m + k. Every generator is monomial, so its
/// action decodes exactly.
pub fn axis_permutation_group(spec: &ImprimitiveSpec) -> Result<Bsgs, ImprimitiveError> {
    let gens = generators(spec)?;
    let m = spec.m as usize;
    let n = spec.n as usize;
    let degree = m * n;
    let zeta = zeta_m(spec.m)?;
    // power-of-ζₘ lookup
    let mut powers = Vec::with_capacity(m);
    let mut acc = CycEight::one();
    for _ in 0..m {
        powers.push(acc.clone());
        acc = acc.mul(&zeta);
    }
    let mut perms = Vec::with_capacity(gens.len());
    for g in &gens {
        let mut images = vec![0u16; degree];
        for col in 0..n {
            // find the unique nonzero row and its phase
            let mut hit = None;
            for row in 0..n {
                let e = g.get(row, col);
                if !e.is_zero() {
                    let a = powers
                        .iter()
                        .position(|p| p == e)
                        .expect("monomial entry is an m-th root of unity");
                    hit = Some((row, a));
                }
            }
            let (row, a) = hit.expect("monomial matrix");
            for k in 0..m {
                images[col * m + k] = (row * m + (k + a) % m) as u16;
            }
        }
        perms.push(Perm::from_images(images));
    }
    Ok(Bsgs::new(degree, perms))
}

/// True when exactly one eigenvalue differs from 1, i.e. rank(g − I) = 1.
pub fn is_unitary_reflection(g: &ExactMatrix) -> bool {
    let dim = g.dim();
    let mut rows: Vec<Vec<CycEight>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let mut v = g.get(i, j).clone();
                    if i == j {
                        v = v.sub(&CycEight::one());
                    }
                    v
                })
                .collect()
        })
        .collect();
    // rank by Gaussian elimination over the field Q(ζ₈)
    let mut rank = 0;
    for col in 0..dim {
        let pivot = (rank..dim).find(|&r| !rows[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in 0..dim {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].mul(&inv);
                for c in col..dim {
                    let sub = f.mul(&rows[rank][c]);
                    rows[r][c] = rows[r][c].sub(&sub);
                }
            }
        }
        rank += 1;
    }
    rank == 1
}

// ---------------------------------------------------------------------------
// Shephard–Todd exceptional presentations (relation data)

/// A relation is a word over generator indices; negative entries denote
/// inverses, so `[-2, 1]` reads x₂⁻¹·x₁.
#[derive(Debug, Clone)]
pub struct StPresentation {
    pub number: u32,
    pub ngens: usize,
    pub relations: Vec<Vec<i32>>,
}

/// Relation lists of Shephard–Todd No 9 and No 31, exactly as printed in
/// the source material.
pub fn shephard_todd(no: u32) -> Option<StPresentation> {
    match no {
        9 => Some(StPresentation {
            number: 9,
            ngens: 2,
            relations: vec![
                vec![1, 1],
                vec![2, 2],
                vec![-2, 1, -2, 1, -2, 1, 2, 1, 2, 1, 2, 1],
            ],
        }),
        31 => Some(StPresentation {
            number: 31,
            ngens: 5,
            relations: {
                let mut r: Vec<Vec<i32>> = (1..=5).map(|i| vec![i, i]).collect();
                for (a, b) in [(1, 4), (2, 4), (2, 5)] {
                    r.push(vec![a, b, a, b]);
                }
                for (a, b) in [(2, 1), (3, 2), (4, 3), (5, 4)] {
                    r.push(vec![a, b, a, b, a, b]);
                }
                r.push(vec![5, 1, 3, 1, 5, 3]);
                r.push(vec![1, 5, 3, 1, 3, 5]);
                r
            },
        }),
        _ => None,
    }
}

/// Evaluate every relation on a candidate tuple of table element ids.
pub fn relations_hold<E: crate::table::Element>(
    table: &GroupTable<E>,
    pres: &StPresentation,
    tuple: &[u32],
) -> bool {
    assert_eq!(tuple.len(), pres.ngens);
    let identity = table.ops().identity();
    for rel in &pres.relations {
        let mut acc = table.ops().identity();
        for &letter in rel {
            let idx = (letter.unsigned_abs() - 1) as usize;
            let e = table.element(tuple[idx]);
            let factor = if letter < 0 {
                table.ops().inverse(e)
            } else {
                e.clone()
            };
            acc = table.mul_elems(&acc, &factor);
        }
        if acc != identity {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StOutcome {
    /// Generating tuple satisfying every relation.
    Found(Vec<u32>),
    /// Some tuples satisfy the relations but none of them generates.
    RelationsHoldWithoutGeneration,
}

/// Exhaustive witness search for a two-generator presentation over a table:
/// all candidate pairs filtered by the x² = 1 relations, then full relation
/// and generation checks.
pub fn st_witness_search<E: crate::table::Element>(
    table: &GroupTable<E>,
    pres: &StPresentation,
) -> StOutcome {
    assert_eq!(pres.ngens, 2, "exhaustive search is for rank-2 presentations");
    let candidates: Vec<u32> = (0..table.order() as u32)
        .filter(|&id| {
            let o = table.element_order(id);
            o == 1 || o == 2
        })
        .collect();
    for &a in &candidates {
        for &b in &candidates {
            if relations_hold(table, pres, &[a, b])
                && table.subgroup_closure_ids(&[a, b]).len() == table.order()
            {
                return StOutcome::Found(vec![a, b]);
            }
        }
    }
    StOutcome::RelationsHoldWithoutGeneration
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{fingerprint_table, GroupFingerprint};
    use crate::coxeter::dihedral_group;
    use crate::pauli::pauli_group_table;

    fn fp_pauli(n: usize) -> GroupFingerprint {
        crate::aut::fingerprint_table(&pauli_group_table(n))
    }

    #[test]
    fn order_formula() {
        assert_eq!(ImprimitiveSpec::new(2, 2, 5).unwrap().order(), 1920);
        assert_eq!(ImprimitiveSpec::new(4, 2, 5).unwrap().order(), 61440);
        assert_eq!(ImprimitiveSpec::new(8, 2, 5).unwrap().order(), 1966080);
        assert!(ImprimitiveSpec::new(4, 3, 5).is_err());
    }

    #[test]
    fn small_enumerations_match_formula() {
        for (m, p, n) in [
            (1, 1, 3),
            (1, 1, 4),
            (2, 1, 2),
            (2, 2, 2),
            (2, 2, 3),
            (2, 2, 4),
            (4, 2, 2),
            (4, 4, 2),
            (8, 2, 2),
            (8, 8, 2),
            (4, 2, 3),
        ] {
            let spec = ImprimitiveSpec::new(m, p, n).unwrap();
            let t = enumerate(&spec, DEFAULT_CAP).unwrap();
            assert_eq!(t.order() as u128, spec.order(), "G({m},{p},{n})");
        }
    }

    #[test]
    fn g222_is_klein() {
        let spec = ImprimitiveSpec::new(2, 2, 2).unwrap();
        let t = enumerate(&spec, 100).unwrap();
        assert_eq!(t.order(), 4);
        for id in 0..4 {
            assert!(t.element_order(id) <= 2);
        }
    }

    #[test]
    fn g422_matches_pauli1() {
        let spec = ImprimitiveSpec::new(4, 2, 2).unwrap();
        let t = enumerate(&spec, 100).unwrap();
        assert_eq!(t.order(), 16);
        assert!(fingerprint_table(&t).matches(&fp_pauli(1)));
    }

    #[test]
    fn gmm2_is_dihedral() {
        for m in [2u64, 4, 8] {
            let spec = ImprimitiveSpec::new(m, m, 2).unwrap();
            let t = enumerate(&spec, 100).unwrap();
            assert_eq!(t.order() as u128, 2 * m as u128);
            let d = dihedral_group(m as u32);
            assert!(fingerprint_table(&t).matches(&fingerprint_table(&d)));
        }
    }

    #[test]
    fn g225_is_wd5() {
        let spec = ImprimitiveSpec::new(2, 2, 5).unwrap();
        let t = enumerate(&spec, 10_000).unwrap();
        assert_eq!(t.order(), 1920);
    }

    #[test]
    fn axis_permutation_orders() {
        for (m, p, n) in [(2u64, 2, 5), (4, 2, 5), (8, 2, 5)] {
            let spec = ImprimitiveSpec::new(m, p, n).unwrap();
            let b = axis_permutation_group(&spec).unwrap();
            assert_eq!(b.order(), spec.order(), "G({m},{p},{n}) via axes");
        }
    }

    #[test]
    fn reflection_generators_have_rank_one() {
        // the transpositions and Diag(ζᵖ,1,…) are reflections; the
        // determinant-one diagonal Diag(ζ, ζ⁻¹, 1, …) is a product of two
        let spec = ImprimitiveSpec::new(4, 2, 3).unwrap();
        let gens = generators(&spec).unwrap();
        // τ1, τ2, Diag(i,−i,1), Diag(−1,1,1)
        assert_eq!(gens.len(), 4);
        assert!(is_unitary_reflection(&gens[0]));
        assert!(is_unitary_reflection(&gens[1]));
        assert!(!is_unitary_reflection(&gens[2]));
        assert!(is_unitary_reflection(&gens[3]));
    }

    #[test]
    fn unsupported_roots() {
        assert!(matches!(
            generators(&ImprimitiveSpec::new(3, 1, 2).unwrap()),
            Err(ImprimitiveError::UnsupportedRootOfUnity(3))
        ));
    }

    #[test]
    fn st9_on_identity_tuple() {
        // relations hold on the identity pair, but it generates nothing
        let d6 = dihedral_group(6);
        let pres = shephard_todd(9).unwrap();
        let id0 = d6.id_of(&crate::coxeter::DihElem { rot: 0, flip: false }).unwrap();
        assert!(relations_hold(&d6, &pres, &[id0, id0]));
        assert_ne!(d6.subgroup_closure_ids(&[id0, id0]).len(), d6.order());
    }

    #[test]
    fn st31_relation_data() {
        let pres = shephard_todd(31).unwrap();
        assert_eq!(pres.ngens, 5);
        assert_eq!(pres.relations.len(), 5 + 3 + 4 + 2);
    }
}
