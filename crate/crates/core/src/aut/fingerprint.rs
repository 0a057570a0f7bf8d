//! Isomorphism-invariant fingerprints: order, center order, derived series,
//! abelianization invariants, element-order histogram, exponent. Two groups
//! with different fingerprints are non-isomorphic; matching fingerprints
//! are the "FingerprintMatch" rung of the evidence ladder.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::perm::Bsgs;
use crate::table::{quotient, Element, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub order: u128,
    pub center_order: Option<u128>,
    /// |G|, |G'|, |G''|, … down to the stable term.
    pub derived_series: Vec<u128>,
    /// invariant factors of G/G', largest first; empty for perfect groups
    pub abelianization: Option<Vec<u64>>,
    pub exponent: Option<u64>,
    pub order_histogram: Option<BTreeMap<u64, u64>>,
}

impl GroupFingerprint {
    /// Compare on every field both sides carry.
    pub fn matches(&self, other: &Self) -> bool {
        fn both<T: PartialEq>(a: &Option<T>, b: &Option<T>) -> bool {
            match (a, b) {
                (Some(x), Some(y)) => x == y,
                _ => true,
            }
        }
        self.order == other.order
            && self.derived_series == other.derived_series
            && both(&self.center_order, &other.center_order)
            && both(&self.abelianization, &other.abelianization)
            && both(&self.exponent, &other.exponent)
            && both(&self.order_histogram, &other.order_histogram)
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "order {} center {} derived {:?}",
            self.order,
            self.center_order
                .map_or("-".to_string(), |v| v.to_string()),
            self.derived_series,
        );
        if let Some(ab) = &self.abelianization {
            s.push_str(&format!(" ab {ab:?}"));
        }
        if let Some(h) = &self.order_histogram {
            let compact: Vec<String> = h.iter().map(|(o, c)| format!("{o}^{c}")).collect();
            s.push_str(&format!(" orders {{{}}}", compact.join(",")));
        }
        s
    }
}

/// Full fingerprint of a table-backed group.
pub fn fingerprint_table<E: Element>(t: &Arc<GroupTable<E>>) -> GroupFingerprint {
    let order = t.order() as u128;
    let center_order = Some(t.center().order() as u128);
    let mut derived_series = vec![order];
    let mut current: Arc<GroupTable<E>> = t.clone();
    loop {
        let d = Arc::new(current.derived_subgroup());
        if d.order() == current.order() {
            break;
        }
        derived_series.push(d.order() as u128);
        current = d;
        if *derived_series.last().unwrap() == 1 {
            break;
        }
    }
    let abelianization = {
        let d = t.derived_subgroup();
        let q = quotient(t, &d).expect("derived subgroup is normal");
        Some(abelian_invariants(&Arc::new(q)))
    };
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for id in 0..t.order() as u32 {
        *histogram.entry(t.element_order(id)).or_insert(0) += 1;
    }
    let exponent = histogram.keys().copied().fold(1u64, lcm);
    GroupFingerprint {
        order,
        center_order,
        derived_series,
        abelianization,
        exponent: Some(exponent),
        order_histogram: Some(histogram),
    }
}

/// Order and derived series only; histograms are a table-mode luxury.
pub fn fingerprint_bsgs(b: &Bsgs) -> GroupFingerprint {
    let order = b.order();
    let mut derived_series = vec![order];
    let mut current = b.derived_subgroup();
    loop {
        let next_order = current.order();
        if next_order == *derived_series.last().unwrap() {
            break;
        }
        derived_series.push(next_order);
        if next_order == 1 {
            break;
        }
        current = current.derived_subgroup();
    }
    GroupFingerprint {
        order,
        center_order: None,
        derived_series,
        abelianization: None,
        exponent: None,
        order_histogram: None,
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    a / gcd(a, b) * b
}

/// Invariant factors d₁ ≥ d₂ ≥ … of a finite abelian group: peel off a
/// cyclic subgroup of maximal order (always a direct factor) and recurse on
/// the quotient.
pub fn abelian_invariants<E: Element>(q: &Arc<GroupTable<E>>) -> Vec<u64> {
    if q.order() == 1 {
        return Vec::new();
    }
    let (max_id, max_order) = (0..q.order() as u32)
        .map(|id| (id, q.element_order(id)))
        .max_by_key(|&(id, ord)| (ord, std::cmp::Reverse(id)))
        .unwrap();
    let g = q.element(max_id).clone();
    // cyclic subgroup table [1, g, g², ...]
    let mut powers = vec![q.ops().identity()];
    let mut acc = g.clone();
    while acc != q.ops().identity() {
        powers.push(acc.clone());
        acc = q.mul_elems(&acc, &g);
    }
    let cyclic = GroupTable::from_elements(q.ops().clone(), powers, vec![g]);
    let rest = quotient(q, &cyclic).expect("subgroups of abelian groups are normal");
    let mut factors = vec![max_order];
    factors.extend(abelian_invariants(&Arc::new(rest)));
    factors
}
