//! Automorphism groups of small finite groups by exhaustive generator-image
//! counting, with the fingerprint/evidence machinery behind every
//! identification claim.

mod dense;
mod fingerprint;
pub mod refs;

pub use dense::{
    automorphism_count, explicit_isomorphism, for_each_automorphism, minimal_generators,
    DenseGroup,
};
pub use fingerprint::{abelian_invariants, fingerprint_bsgs, fingerprint_table, GroupFingerprint};

use std::sync::Arc;

use crate::error::AutError;
use crate::perm::Perm;
use crate::table::{Element, GroupTable};

/// Strength at which an identification claim has been established, weakest
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EvidenceLevel {
    OrderMatch,
    FingerprintMatch,
    PresentationWitness,
    ExplicitIsomorphism,
}

impl EvidenceLevel {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvidenceLevel::OrderMatch => "order",
            EvidenceLevel::FingerprintMatch => "fingerprint",
            EvidenceLevel::PresentationWitness => "witness",
            EvidenceLevel::ExplicitIsomorphism => "isomorphism",
        }
    }
}

/// |Aut(G)| for a table-backed group, via a minimal generating tuple.
pub fn automorphism_count_table<E: Element>(t: &GroupTable<E>) -> Result<u64, AutError> {
    let d = DenseGroup::from_table(t)?;
    let gens = minimal_generators(&d);
    Ok(automorphism_count(&d, &gens))
}

/// (|Inn|, |Out|): |Inn| = |G|/|Z(G)|, |Out| = |Aut|/|Inn|, with the
/// integrality of the division checked.
pub fn inn_out_orders<E: Element>(t: &GroupTable<E>, aut_count: u64) -> Result<(u64, u64), AutError> {
    let inn = (t.order() / t.center().order()) as u64;
    if aut_count % inn != 0 {
        return Err(AutError::NonIntegralOut);
    }
    Ok((inn, aut_count / inn))
}

/// The full automorphism group realized as permutations of the element ids,
/// returned as an enumerated table. Sized for |Aut| up to a few 10⁴.
pub fn automorphism_perm_table<E: Element>(
    t: &GroupTable<E>,
) -> Result<Arc<GroupTable<Perm>>, AutError> {
    let d = DenseGroup::from_table(t)?;
    let gens = minimal_generators(&d);
    let mut perms: Vec<Perm> = Vec::new();
    for_each_automorphism(&d, &gens, |phi| {
        perms.push(Perm::from_images(phi.to_vec()));
        true
    });
    perms.sort();
    // the identity map is lexicographically least, hence first
    let ops: Arc<dyn crate::table::GroupOps<Perm>> =
        Arc::new(refs::PermOps { degree: t.order() });
    let table = GroupTable::from_elements(ops, perms, Vec::new());
    let gen_ids = refs::greedy_generators(&table);
    let gens: Vec<Perm> = gen_ids
        .iter()
        .map(|&id| table.element(id).clone())
        .collect();
    let elements: Vec<Perm> = table.elements().to_vec();
    let ops: Arc<dyn crate::table::GroupOps<Perm>> =
        Arc::new(refs::PermOps { degree: t.order() });
    Ok(Arc::new(GroupTable::from_elements(ops, elements, gens)))
}

/// The inner automorphisms (conjugation maps) of a table-backed group, as
/// permutations of the element ids.
pub fn inner_automorphism_perms<E: Element>(t: &GroupTable<E>) -> Vec<Perm> {
    let n = t.order() as u32;
    let mut perms: Vec<Perm> = Vec::new();
    for g in 0..n {
        let ginv = t.inverse_id(g);
        let images: Vec<u16> = (0..n)
            .map(|e| t.mul_ids(t.mul_ids(g, e), ginv) as u16)
            .collect();
        let p = Perm::from_images(images);
        if !perms.contains(&p) {
            perms.push(p);
        }
    }
    perms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{gate, Gate};
    use crate::pauli::pauli_group_table;
    use crate::table::{enumerate_matrix_group, Mode};

    #[test]
    fn aut_of_klein_four() {
        // |Aut(Z2×Z2)| = |GL(2,2)| = (4−1)(4−2) = 6
        let a = gate(Gate::X).tensor(&gate(Gate::I));
        let b = gate(Gate::I).tensor(&gate(Gate::X));
        let v4 = enumerate_matrix_group(&[a, b], Mode::Full, 100).unwrap();
        assert_eq!(automorphism_count_table(&v4).unwrap(), 6);
    }

    #[test]
    fn aut_of_dih4_is_dih4() {
        let dih4 = enumerate_matrix_group(&[gate(Gate::X), gate(Gate::Y)], Mode::Full, 100)
            .unwrap();
        assert_eq!(automorphism_count_table(&dih4).unwrap(), 8);
    }

    #[test]
    fn aut_of_pauli1() {
        let p1 = pauli_group_table(1);
        let count = automorphism_count_table(&p1).unwrap();
        assert_eq!(count, 48);
        let (inn, out) = inn_out_orders(&p1, count).unwrap();
        assert_eq!(inn, 4);
        assert_eq!(out, 12);
    }

    #[test]
    fn minimal_generator_lengths() {
        // cyclic of order 8: one generator (the phase-scaled identity won't
        // do, so use a rotation)
        let z8 = refs::cyclic_table(8);
        let d = DenseGroup::from_table(&z8).unwrap();
        assert_eq!(minimal_generators(&d).len(), 1);
        let a = gate(Gate::X).tensor(&gate(Gate::I));
        let b = gate(Gate::I).tensor(&gate(Gate::X));
        let v4 = enumerate_matrix_group(&[a, b], Mode::Full, 100).unwrap();
        let d = DenseGroup::from_table(&v4).unwrap();
        assert_eq!(minimal_generators(&d).len(), 2);
    }

    #[test]
    fn pauli1_needs_three_generators() {
        // The phase i is not a product of σx and σz alone: ⟨σx, σz⟩ has
        // order 8, while the Frattini quotient of the full 16-element group
        // is Z2³. A brute scan over all pairs is the oracle.
        let p1 = pauli_group_table(1);
        let d = DenseGroup::from_table(&p1).unwrap();
        for a in 0..16u16 {
            for b in 0..16u16 {
                assert!(d.closure(&[a, b]).len() < 16);
            }
        }
        assert_eq!(minimal_generators(&d).len(), 3);
    }

    #[test]
    fn count_independent_of_tuple() {
        let p1 = pauli_group_table(1);
        let d = DenseGroup::from_table(&p1).unwrap();
        let first = minimal_generators(&d);
        let baseline = automorphism_count(&d, &first);
        // a different generating triple: σy, σz, σx in reverse id order
        let mut alt = first.clone();
        alt.reverse();
        assert_eq!(d.closure(&alt).len(), 16);
        assert_eq!(automorphism_count(&d, &alt), baseline);
    }

    #[test]
    fn counted_tuples_are_automorphisms_full_audit() {
        // complete O(n²) multiplication-table audit for a 16-element group
        let p1 = pauli_group_table(1);
        let d = DenseGroup::from_table(&p1).unwrap();
        let gens = minimal_generators(&d);
        let mut total = 0u64;
        for_each_automorphism(&d, &gens, |phi| {
            for a in 0..d.n as u16 {
                for b in 0..d.n as u16 {
                    assert_eq!(
                        phi[d.mul(a, b) as usize],
                        d.mul(phi[a as usize], phi[b as usize])
                    );
                }
            }
            let mut seen = vec![false; d.n];
            for &v in phi.iter() {
                assert!(!seen[v as usize]);
                seen[v as usize] = true;
            }
            total += 1;
            true
        });
        assert_eq!(total, 48);
    }

    #[test]
    fn explicit_iso_finds_map() {
        // the two-qubit commuting pair group vs the dihedral realization of
        // Z2×Z2 — explicit isomorphism must exist
        let a = gate(Gate::X).tensor(&gate(Gate::I));
        let b = gate(Gate::I).tensor(&gate(Gate::X));
        let v4 = enumerate_matrix_group(&[a, b], Mode::Full, 100).unwrap();
        let d4 = crate::coxeter::dihedral_group(2);
        let src = DenseGroup::from_table(&v4).unwrap();
        let dst = DenseGroup::from_table(&d4).unwrap();
        let gens = minimal_generators(&src);
        assert!(explicit_isomorphism(&src, &gens, &dst).is_some());
        // and must not exist onto Z4
        let z4 = refs::cyclic_table(4);
        let dst = DenseGroup::from_table(&z4).unwrap();
        assert!(explicit_isomorphism(&src, &gens, &dst).is_none());
    }

    #[test]
    fn aut_perm_table_of_pauli1() {
        let p1 = pauli_group_table(1);
        let aut = automorphism_perm_table(&p1).unwrap();
        assert_eq!(aut.order(), 48);
        let inner = inner_automorphism_perms(&p1);
        assert_eq!(inner.len(), 4);
        for p in &inner {
            assert!(aut.contains(p));
        }
    }
}
