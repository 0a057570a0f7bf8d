//! Fully enumerated finite groups with hashed element lookup.
//!
//! A [`GroupTable`] holds every element of a finite group plus a hash index
//! for O(1) membership; multiplication goes through the element operation
//! (matrix product, symplectic Pauli product, permutation composition, ...)
//! rather than a stored Cayley table, so groups of ~10⁵ elements stay cheap
//! in memory. Lookup buckets by a stable 64-bit key and resolves collisions
//! by full exact equality.
//!
//! Construction is a deterministic breadth-first closure: identical
//! generators in identical order always produce the identical element-id
//! assignment, which the on-disk cache and the report determinism depend on.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::TableError;
use crate::matrix::ExactMatrix;
use crate::util::fnv_hash;

/// Requirements on element types stored in a table.
pub trait Element: Clone + Eq + std::hash::Hash + Ord + Send + Sync + 'static {}
impl<T: Clone + Eq + std::hash::Hash + Ord + Send + Sync + 'static> Element for T {}

/// The group operation for an element type. Implementations must be
/// consistent: `mul(a, inverse(a)) = identity`.
pub trait GroupOps<E>: Send + Sync {
    fn identity(&self) -> E;
    fn mul(&self, a: &E, b: &E) -> E;
    fn inverse(&self, a: &E) -> E;
    /// Canonical form of an externally supplied element (projective tables
    /// reduce to the scalar-class representative here).
    fn normalize(&self, e: E) -> E {
        e
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Full,
    /// Elements are scalar classes under the 8th-root phase group ⟨ζ⟩.
    Projective,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::Projective => "projective",
        }
    }
}

/// Hash → element-ids with collision resolution by exact equality.
#[derive(Default)]
struct KeyIndex {
    buckets: HashMap<u64, Vec<u32>>,
}

pub struct GroupTable<E: Element> {
    ops: Arc<dyn GroupOps<E>>,
    elements: Vec<E>,
    index: KeyIndex,
    generators: Vec<u32>,
    mode: Mode,
}

impl<E: Element> std::fmt::Debug for GroupTable<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupTable(order = {}, mode = {})",
            self.order(),
            self.mode.as_str()
        )
    }
}

impl<E: Element> GroupTable<E> {
    /// Breadth-first closure of `gens` under left multiplication.
    pub fn enumerate(
        ops: Arc<dyn GroupOps<E>>,
        gens: Vec<E>,
        mode: Mode,
        cap: usize,
    ) -> Result<Self, TableError> {
        let mut t = GroupTable {
            ops,
            elements: Vec::new(),
            index: KeyIndex::default(),
            generators: Vec::new(),
            mode,
        };
        let id = t.ops.identity();
        t.insert_new(id);
        let gens: Vec<E> = gens.into_iter().map(|g| t.ops.normalize(g)).collect();
        for g in &gens {
            let gid = t.insert_or_get(g.clone());
            t.generators.push(gid);
        }
        t.close_over(&gens, 0, cap)?;
        Ok(t)
    }

    /// Table over an explicit element list (first element must be the
    /// identity); used for groups defined by membership rather than by
    /// generators, e.g. classical groups over tiny fields.
    pub fn from_elements(
        ops: Arc<dyn GroupOps<E>>,
        elements: Vec<E>,
        generators: Vec<E>,
    ) -> Self {
        let mut t = GroupTable {
            ops,
            elements: Vec::new(),
            index: KeyIndex::default(),
            generators: Vec::new(),
            mode: Mode::Full,
        };
        let id = t.ops.identity();
        assert!(
            elements[0] == id,
            "element list must start with the identity"
        );
        for e in elements {
            t.insert_or_get(e);
        }
        for g in generators {
            let gid = t
                .id_of(&g)
                .expect("generator must be among the listed elements");
            t.generators.push(gid);
        }
        t
    }

    /// Extend an already closed table by extra generators and re-close.
    fn extend_with(&mut self, new_gens: &[E], cap: usize) -> Result<(), TableError> {
        let old_len = self.elements.len();
        let all_gens = {
            let mut v = self.generator_elements();
            v.extend(new_gens.iter().cloned());
            v
        };
        for g in new_gens {
            let gid = self.insert_or_get(g.clone());
            self.generators.push(gid);
        }
        for idx in 0..old_len {
            for g in new_gens {
                let prod = self.ops.mul(g, &self.elements[idx]);
                self.insert_or_get(prod);
                if self.elements.len() > cap {
                    return Err(TableError::CapExceeded(cap));
                }
            }
        }
        self.close_over(&all_gens, old_len, cap)
    }

    fn close_over(&mut self, gens: &[E], from: usize, cap: usize) -> Result<(), TableError> {
        let mut next = from;
        while next < self.elements.len() {
            for g in gens {
                let prod = self.ops.mul(g, &self.elements[next]);
                self.insert_or_get(prod);
                if self.elements.len() > cap {
                    return Err(TableError::CapExceeded(cap));
                }
            }
            next += 1;
        }
        Ok(())
    }

    fn insert_new(&mut self, e: E) -> u32 {
        let id = self.elements.len() as u32;
        let key = fnv_hash(&e);
        self.elements.push(e);
        self.index.buckets.entry(key).or_default().push(id);
        id
    }

    fn insert_or_get(&mut self, e: E) -> u32 {
        match self.id_of(&e) {
            Some(id) => id,
            None => self.insert_new(e),
        }
    }

    pub fn id_of(&self, e: &E) -> Option<u32> {
        let key = fnv_hash(e);
        self.index
            .buckets
            .get(&key)?
            .iter()
            .copied()
            .find(|&id| &self.elements[id as usize] == e)
    }

    pub fn contains(&self, e: &E) -> bool {
        self.id_of(e).is_some()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn ops(&self) -> &Arc<dyn GroupOps<E>> {
        &self.ops
    }

    pub fn element(&self, id: u32) -> &E {
        &self.elements[id as usize]
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generator_ids(&self) -> &[u32] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<E> {
        self.generators
            .iter()
            .map(|&i| self.elements[i as usize].clone())
            .collect()
    }

    pub fn mul_elems(&self, a: &E, b: &E) -> E {
        self.ops.mul(a, b)
    }

    pub fn mul_ids(&self, a: u32, b: u32) -> u32 {
        let prod = self
            .ops
            .mul(&self.elements[a as usize], &self.elements[b as usize]);
        self.id_of(&prod).expect("table closed under multiplication")
    }

    pub fn inverse_id(&self, a: u32) -> u32 {
        let inv = self.ops.inverse(&self.elements[a as usize]);
        self.id_of(&inv).expect("table closed under inversion")
    }

    pub fn element_order(&self, id: u32) -> u64 {
        let e = &self.elements[id as usize];
        let identity = self.ops.identity();
        let mut acc = e.clone();
        let mut n = 1;
        while acc != identity {
            acc = self.ops.mul(&acc, e);
            n += 1;
        }
        n
    }

    /// Subgroup of elements commuting with every generator (= the center,
    /// since the generators generate).
    pub fn center(&self) -> GroupTable<E> {
        let gens = self.generator_elements();
        let members: Vec<E> = self
            .elements
            .iter()
            .filter(|e| {
                gens.iter()
                    .all(|g| self.ops.mul(e, g) == self.ops.mul(g, e))
            })
            .cloned()
            .collect();
        let gens = members.clone();
        GroupTable::from_elements(self.ops.clone(), members, gens)
    }

    /// Normal closure of the given seed elements inside this group.
    pub fn normal_closure(&self, seeds: Vec<E>) -> GroupTable<E> {
        let identity = self.ops.identity();
        let mut kgens: Vec<E> = Vec::new();
        for s in seeds {
            if s != identity && !kgens.contains(&s) {
                kgens.push(s);
            }
        }
        let cap = self.order();
        let outer: Vec<(E, E)> = self
            .generator_elements()
            .into_iter()
            .map(|g| {
                let gi = self.ops.inverse(&g);
                (g, gi)
            })
            .collect();
        let mut table =
            GroupTable::enumerate(self.ops.clone(), kgens.clone(), self.mode, cap)
                .expect("closure bounded by parent order");
        loop {
            let mut escaped: Vec<E> = Vec::new();
            for k in &kgens {
                for (g, gi) in &outer {
                    let c = self.ops.mul(&self.ops.mul(g, k), gi);
                    if !table.contains(&c) && !escaped.contains(&c) {
                        escaped.push(c);
                    }
                }
            }
            if escaped.is_empty() {
                return table;
            }
            table
                .extend_with(&escaped, cap)
                .expect("closure bounded by parent order");
            kgens.extend(escaped);
        }
    }

    /// Normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> GroupTable<E> {
        let gens = self.generator_elements();
        let mut seeds = Vec::new();
        for a in &gens {
            for b in &gens {
                if a != b {
                    let ai = self.ops.inverse(a);
                    let bi = self.ops.inverse(b);
                    seeds.push(self.ops.mul(&self.ops.mul(a, b), &self.ops.mul(&ai, &bi)));
                }
            }
        }
        self.normal_closure(seeds)
    }

    /// Number of index-2 (hence normal) subgroups: 2^r − 1 where 2^r is the
    /// order of the elementary-2 abelianization G/(G'·G²).
    pub fn index2_normal_subgroup_count(&self) -> u64 {
        let gens = self.generator_elements();
        let mut seeds = Vec::new();
        for a in &gens {
            for b in &gens {
                if a != b {
                    let ai = self.ops.inverse(a);
                    let bi = self.ops.inverse(b);
                    seeds.push(self.ops.mul(&self.ops.mul(a, b), &self.ops.mul(&ai, &bi)));
                }
            }
            seeds.push(self.ops.mul(a, a));
        }
        let k = self.normal_closure(seeds);
        let index = (self.order() / k.order()) as u64;
        assert!(index.is_power_of_two(), "G/(G'G^2) must be a 2-group");
        index - 1
    }

    /// Subgroup membership precheck plus normality of `n` (conjugation of
    /// n's generators by this table's generators stays inside `n`).
    pub fn check_normal_subgroup(&self, n: &GroupTable<E>) -> Result<(), TableError> {
        for e in &n.elements {
            if !self.contains(e) {
                return Err(TableError::NotSubgroup);
            }
        }
        for ng in n.generator_elements() {
            for g in self.generator_elements() {
                let gi = self.ops.inverse(&g);
                let c = self.ops.mul(&self.ops.mul(&g, &ng), &gi);
                if !n.contains(&c) {
                    return Err(TableError::NotNormal);
                }
            }
        }
        Ok(())
    }

    /// BFS closure of a set of element ids inside the table; returns the
    /// sorted id list of the generated subgroup.
    pub fn subgroup_closure_ids(&self, gen_ids: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order()];
        let id0 = self
            .id_of(&self.ops.identity())
            .expect("identity present");
        let mut queue = vec![id0];
        seen[id0 as usize] = true;
        let mut next = 0;
        while next < queue.len() {
            let cur = queue[next];
            next += 1;
            for &g in gen_ids {
                let prod = self.mul_ids(g, cur);
                if !seen[prod as usize] {
                    seen[prod as usize] = true;
                    queue.push(prod);
                }
            }
        }
        queue.sort_unstable();
        queue
    }
}

/// Quotient-group multiplication: cosets of a normal subgroup, represented
/// by their lexicographically minimal member.
pub struct CosetOps<E: Element> {
    parent: Arc<GroupTable<E>>,
    coset_of: Arc<Vec<u32>>,
    reps: Arc<Vec<E>>,
}

impl<E: Element> GroupOps<E> for CosetOps<E> {
    fn identity(&self) -> E {
        let pid = self
            .parent
            .id_of(&self.parent.ops.identity())
            .expect("identity present");
        self.reps[self.coset_of[pid as usize] as usize].clone()
    }

    fn mul(&self, a: &E, b: &E) -> E {
        let prod = self.parent.ops.mul(a, b);
        let pid = self.parent.id_of(&prod).expect("parent closed");
        self.reps[self.coset_of[pid as usize] as usize].clone()
    }

    fn inverse(&self, a: &E) -> E {
        let inv = self.parent.ops.inverse(a);
        let pid = self.parent.id_of(&inv).expect("parent closed");
        self.reps[self.coset_of[pid as usize] as usize].clone()
    }
}

/// Quotient of `parent` by the normal subgroup `n`: the group of cosets,
/// each keyed by its minimal member. Order is |G|/|N|.
pub fn quotient<E: Element>(
    parent: &Arc<GroupTable<E>>,
    n: &GroupTable<E>,
) -> Result<GroupTable<E>, TableError> {
    parent.check_normal_subgroup(n)?;
    let size = parent.order();
    let unassigned = u32::MAX;
    let mut coset_of = vec![unassigned; size];
    let mut reps: Vec<E> = Vec::with_capacity(size / n.order());
    for pid in 0..size as u32 {
        if coset_of[pid as usize] != unassigned {
            continue;
        }
        let cid = reps.len() as u32;
        let e = parent.element(pid);
        let mut min_member: Option<E> = None;
        for m in n.elements() {
            let member = parent.ops().mul(e, m);
            let mid = parent.id_of(&member).ok_or(TableError::NotSubgroup)?;
            coset_of[mid as usize] = cid;
            min_member = match min_member {
                Some(cur) if cur <= member => Some(cur),
                _ => Some(member),
            };
        }
        reps.push(min_member.expect("nonempty coset"));
    }
    let coset_of = Arc::new(coset_of);
    let reps = Arc::new(reps);
    let ops: Arc<dyn GroupOps<E>> = Arc::new(CosetOps {
        parent: parent.clone(),
        coset_of: coset_of.clone(),
        reps: reps.clone(),
    });
    let elements: Vec<E> = reps.iter().cloned().collect();
    // quotient generators = images of the parent's generators
    let generators: Vec<E> = parent
        .generator_ids()
        .iter()
        .map(|&gid| reps[coset_of[gid as usize] as usize].clone())
        .collect();
    // the identity coset is discovered first (pid 0 is the parent identity)
    Ok(GroupTable::from_elements(ops, elements, generators))
}

/// Ordinary matrix-group operations; inverses use the Hermitian adjoint,
/// which is why enumeration insists on unitary generators.
pub struct MatOps {
    dim: usize,
    projective: bool,
}

impl GroupOps<ExactMatrix> for MatOps {
    fn identity(&self) -> ExactMatrix {
        ExactMatrix::identity(self.dim)
    }

    fn mul(&self, a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        let m = a.mul(b);
        if self.projective {
            m.projective_canonical()
        } else {
            m
        }
    }

    fn inverse(&self, a: &ExactMatrix) -> ExactMatrix {
        let m = a.adjoint();
        if self.projective {
            m.projective_canonical()
        } else {
            m
        }
    }

    fn normalize(&self, e: ExactMatrix) -> ExactMatrix {
        if self.projective {
            e.projective_canonical()
        } else {
            e
        }
    }
}

pub const DEFAULT_CAP: usize = 2_000_000;

/// Enumerate the matrix group generated by unitary matrices of equal
/// dimension. In projective mode, elements are canonical representatives of
/// scalar classes under 8th-root phases.
pub fn enumerate_matrix_group(
    gens: &[ExactMatrix],
    mode: Mode,
    cap: usize,
) -> Result<Arc<GroupTable<ExactMatrix>>, TableError> {
    let dim = gens.first().map(|g| g.dim()).unwrap_or(1);
    for g in gens {
        if g.dim() != dim {
            return Err(TableError::DimMismatch(dim, g.dim()));
        }
        if !g.is_unitary() {
            return Err(TableError::NotUnitary);
        }
    }
    let ops: Arc<dyn GroupOps<ExactMatrix>> = Arc::new(MatOps {
        dim,
        projective: mode == Mode::Projective,
    });
    Ok(Arc::new(GroupTable::enumerate(
        ops,
        gens.to_vec(),
        mode,
        cap,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{gate, Gate};

    #[test]
    fn sigma_x_generates_order_two() {
        let t = enumerate_matrix_group(&[gate(Gate::X)], Mode::Full, 100).unwrap();
        assert_eq!(t.order(), 2);
        assert!(t.contains(&ExactMatrix::identity(2)));
    }

    #[test]
    fn x_and_y_generate_dih4() {
        // ⟨X,Y⟩ = {±I, ±X, ±Y, ±iZ}: order 8
        let t = enumerate_matrix_group(&[gate(Gate::X), gate(Gate::Y)], Mode::Full, 100).unwrap();
        assert_eq!(t.order(), 8);
        // (XY)⁴ = I
        let xy = gate(Gate::X).mul(&gate(Gate::Y));
        assert_eq!(t.element_order(t.id_of(&xy).unwrap()), 4);
    }

    #[test]
    fn cap_exceeded() {
        let err = enumerate_matrix_group(&[gate(Gate::H), gate(Gate::P)], Mode::Full, 10)
            .unwrap_err();
        assert_eq!(err, TableError::CapExceeded(10));
    }

    #[test]
    fn non_unitary_rejected() {
        let m = ExactMatrix::from_rows(vec![
            vec![crate::CycEight::one(), crate::CycEight::one()],
            vec![crate::CycEight::zero(), crate::CycEight::one()],
        ]);
        assert_eq!(
            enumerate_matrix_group(&[m], Mode::Full, 10).unwrap_err(),
            TableError::NotUnitary
        );
    }

    #[test]
    fn abelian_group_center_and_derived() {
        let t = enumerate_matrix_group(&[gate(Gate::P)], Mode::Full, 100).unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.center().order(), 4);
        assert_eq!(t.derived_subgroup().order(), 1);
    }

    #[test]
    fn quotient_by_self_is_trivial() {
        let t = enumerate_matrix_group(&[gate(Gate::X), gate(Gate::Y)], Mode::Full, 100).unwrap();
        let q = quotient(&t, &t).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn index2_counts() {
        // cyclic of order 4: one index-2 subgroup
        let z4 = enumerate_matrix_group(&[gate(Gate::P)], Mode::Full, 100).unwrap();
        assert_eq!(z4.index2_normal_subgroup_count(), 1);
        // Z2 x Z2 (as {I,X}⊗{I,X}): three
        let a = gate(Gate::X).tensor(&gate(Gate::I));
        let b = gate(Gate::I).tensor(&gate(Gate::X));
        let v4 = enumerate_matrix_group(&[a, b], Mode::Full, 100).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.index2_normal_subgroup_count(), 3);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let gens = [gate(Gate::H), gate(Gate::P)];
        let a = enumerate_matrix_group(&gens, Mode::Full, 1000).unwrap();
        let b = enumerate_matrix_group(&gens, Mode::Full, 1000).unwrap();
        assert_eq!(a.order(), b.order());
        for id in 0..a.order() as u32 {
            assert_eq!(a.element(id), b.element(id));
        }
    }

    #[test]
    fn not_normal_detected() {
        // S3-like: projective ⟨H, P⟩ won't be needed; use ⟨X,Y⟩ and the
        // non-normal subgroup ⟨X⟩ (conjugate of X by Y is -X... which IS in ⟨X⟩?
        // -X ∉ {I, X}: YXY⁻¹ = -X, so ⟨X⟩ is not normal in ⟨X,Y⟩.
        let t = enumerate_matrix_group(&[gate(Gate::X), gate(Gate::Y)], Mode::Full, 100).unwrap();
        let sub = enumerate_matrix_group(&[gate(Gate::X)], Mode::Full, 100).unwrap();
        assert_eq!(
            quotient(&t, &sub).unwrap_err(),
            TableError::NotNormal
        );
    }
}
