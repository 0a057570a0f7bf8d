//! Dense Cayley-table form of a small group, plus the generator-image
//! backtracking that counts automorphisms exactly.
//!
//! The search fixes a minimal generating tuple (g₀..g_{k−1}) and walks the
//! chain H₀ ⊂ H₁ ⊂ … ⊂ H_{k−1} = G with H_j = ⟨g₀..g_j⟩. At level j a
//! candidate image t_j (order-matched to g_j) extends the partial map over
//! the new elements of H_j via their breadth-first words; the extension is
//! rejected on any injectivity failure or any violated product edge
//! φ(e·g_i) = φ(e)·t_i. Surviving full-depth assignments are exactly the
//! automorphisms: edge consistency on a generating set propagates to all
//! products, and injectivity on a finite group forces bijectivity.

use crate::error::AutError;
use crate::table::{Element, GroupTable};

const DENSE_LIMIT: usize = 1024;

/// A group of at most [`DENSE_LIMIT`] elements with a full multiplication
/// table over element ids.
pub struct DenseGroup {
    pub n: usize,
    pub id: u16,
    table: Vec<u16>,
    inv: Vec<u16>,
    orders: Vec<u16>,
}

impl DenseGroup {
    pub fn from_table<E: Element>(t: &GroupTable<E>) -> Result<Self, AutError> {
        let n = t.order();
        if n > DENSE_LIMIT {
            return Err(AutError::TooLarge(n));
        }
        let mut table = vec![0u16; n * n];
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                table[a as usize * n + b as usize] = t.mul_ids(a, b) as u16;
            }
        }
        let id = t
            .id_of(&t.ops().identity())
            .expect("identity present") as u16;
        let mut inv = vec![0u16; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| table[a * n + b] == id)
                .expect("finite group") as u16;
        }
        let mut orders = vec![0u16; n];
        for a in 0..n as u16 {
            let mut acc = a;
            let mut ord = 1u16;
            while acc != id {
                acc = table[acc as usize * n + a as usize];
                ord += 1;
            }
            orders[a as usize] = ord;
        }
        Ok(DenseGroup {
            n,
            id,
            table,
            inv,
            orders,
        })
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.n + b as usize]
    }

    pub fn inverse(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn order_of(&self, a: u16) -> u16 {
        self.orders[a as usize]
    }

    /// Ids of the subgroup generated by `gens`, ascending.
    pub fn closure(&self, gens: &[u16]) -> Vec<u16> {
        let mut seen = vec![false; self.n];
        seen[self.id as usize] = true;
        let mut queue = vec![self.id];
        let mut next = 0;
        while next < queue.len() {
            let cur = queue[next];
            next += 1;
            for &g in gens {
                let p = self.mul(cur, g);
                if !seen[p as usize] {
                    seen[p as usize] = true;
                    queue.push(p);
                }
            }
        }
        queue.sort_unstable();
        queue
    }
}

/// Lexicographically first generating tuple of minimal length.
///
/// For 2-groups the Burnside basis theorem applies: minimal generating sets
/// are exactly the lifts of bases of the Frattini quotient G/(G²·G'), so a
/// greedy ascending scan that keeps elements outside the closure-so-far is
/// both minimal and lexicographically least. Other groups in scope are tiny
/// and get a direct length-by-length search.
pub fn minimal_generators(d: &DenseGroup) -> Vec<u16> {
    if d.n == 1 {
        return Vec::new();
    }
    if d.n.is_power_of_two() {
        // Frattini subgroup of a 2-group: generated by squares and
        // commutators (the seed set is conjugation-invariant, so plain
        // closure is the normal closure)
        let mut seeds: Vec<u16> = Vec::new();
        for a in 0..d.n as u16 {
            seeds.push(d.mul(a, a));
            for b in 0..d.n as u16 {
                let c = d.mul(
                    d.mul(a, b),
                    d.mul(d.inverse(a), d.inverse(b)),
                );
                seeds.push(c);
            }
        }
        seeds.sort_unstable();
        seeds.dedup();
        let mut picked: Vec<u16> = Vec::new();
        let mut closure = d.closure(&seeds);
        while closure.len() < d.n {
            let cand = (0..d.n as u16)
                .find(|c| closure.binary_search(c).is_err())
                .expect("proper subgroup misses some element");
            picked.push(cand);
            let mut gens = seeds.clone();
            gens.extend_from_slice(&picked);
            closure = d.closure(&gens);
        }
        // the Frattini elements are non-generators: the picked set alone
        // already generates
        debug_assert_eq!(d.closure(&picked).len(), d.n);
        return picked;
    }
    for k in 1..=8 {
        let mut tuple = Vec::with_capacity(k);
        if search_tuple(d, k, 0, &mut tuple) {
            return tuple;
        }
    }
    unreachable!("groups in scope have few generators");
}

fn search_tuple(d: &DenseGroup, k: usize, start: u16, tuple: &mut Vec<u16>) -> bool {
    if tuple.len() == k {
        return d.closure(tuple).len() == d.n;
    }
    let closure = d.closure(tuple);
    for cand in start..d.n as u16 {
        // a minimal tuple never contains a redundant element
        if closure.binary_search(&cand).is_ok() {
            continue;
        }
        tuple.push(cand);
        if search_tuple(d, k, cand + 1, tuple) {
            return true;
        }
        tuple.pop();
    }
    false
}

/// Breadth-first chain data for a fixed generating tuple.
struct Chain {
    k: usize,
    gens: Vec<u16>,
    /// new elements of H_j in discovery order, with (parent, gen) words
    layers: Vec<Vec<(u16, u16, u8)>>,
    /// members of H_{j-1} (everything known before layer j starts)
    prefixes: Vec<Vec<u16>>,
}

fn build_chain(d: &DenseGroup, gens: &[u16]) -> Chain {
    let k = gens.len();
    let mut known = vec![false; d.n];
    known[d.id as usize] = true;
    let mut members: Vec<u16> = vec![d.id];
    let mut layers = Vec::with_capacity(k);
    let mut prefixes = Vec::with_capacity(k);
    for j in 0..k {
        prefixes.push(members.clone());
        let mut layer: Vec<(u16, u16, u8)> = Vec::new();
        // seed: products of old members with the new generator
        let mut queue_start = members.len();
        for idx in 0..members.len() {
            let e = members[idx];
            let p = d.mul(e, gens[j]);
            if !known[p as usize] {
                known[p as usize] = true;
                members.push(p);
                layer.push((p, e, j as u8));
            }
        }
        // close under all generators up to j
        while queue_start < members.len() {
            let e = members[queue_start];
            queue_start += 1;
            for (i, &g) in gens.iter().take(j + 1).enumerate() {
                let p = d.mul(e, g);
                if !known[p as usize] {
                    known[p as usize] = true;
                    members.push(p);
                    layer.push((p, e, i as u8));
                }
            }
        }
        layers.push(layer);
    }
    assert_eq!(members.len(), d.n, "tuple must generate the group");
    Chain {
        k,
        gens: gens.to_vec(),
        layers,
        prefixes,
    }
}

/// Visit every automorphism of the group underlying `d`, presented as the
/// full image map on element ids. Returns the number visited. The visitor
/// may return `false` to stop early.
pub fn for_each_automorphism(
    d: &DenseGroup,
    gens: &[u16],
    mut visit: impl FnMut(&[u16]) -> bool,
) -> u64 {
    let chain = build_chain(d, gens);
    // candidate images per level, filtered by element order
    let candidates: Vec<Vec<u16>> = gens
        .iter()
        .map(|&g| {
            (0..d.n as u16)
                .filter(|&t| d.order_of(t) == d.order_of(g))
                .collect()
        })
        .collect();
    let unset = u16::MAX;
    let mut phi = vec![unset; d.n];
    let mut used = vec![false; d.n];
    phi[d.id as usize] = d.id;
    used[d.id as usize] = true;
    let mut images = vec![0u16; chain.k];
    let mut count = 0u64;
    let mut stop = false;
    rec(
        d, &chain, &candidates, 0, &mut phi, &mut used, &mut images, &mut count, &mut stop,
        &mut visit,
    );
    count
}

#[allow(clippy::too_many_arguments)]
fn rec(
    d: &DenseGroup,
    chain: &Chain,
    candidates: &[Vec<u16>],
    j: usize,
    phi: &mut [u16],
    used: &mut [bool],
    images: &mut [u16],
    count: &mut u64,
    stop: &mut bool,
    visit: &mut impl FnMut(&[u16]) -> bool,
) {
    if *stop {
        return;
    }
    if j == chain.k {
        *count += 1;
        if !visit(phi) {
            *stop = true;
        }
        return;
    }
    'cand: for &t in &candidates[j] {
        images[j] = t;
        // extend phi over the new layer via breadth-first words
        let layer = &chain.layers[j];
        let mut assigned = 0usize;
        for &(e, parent, gen) in layer {
            let v = d.mul(phi[parent as usize], images[gen as usize]);
            if used[v as usize] {
                // injectivity failure; undo and try the next candidate
                for &(e2, _, _) in layer.iter().take(assigned) {
                    let v2 = phi[e2 as usize];
                    used[v2 as usize] = false;
                    phi[e2 as usize] = u16::MAX;
                }
                continue 'cand;
            }
            phi[e as usize] = v;
            used[v as usize] = true;
            assigned += 1;
        }
        // verify the new product edges
        let ok = {
            let mut ok = true;
            // old elements against the new generator image
            for &e in &chain.prefixes[j] {
                let lhs = phi[d.mul(e, chain.gens[j]) as usize];
                let rhs = d.mul(phi[e as usize], t);
                if lhs != rhs {
                    ok = false;
                    break;
                }
            }
            if ok {
                // new elements against every generator up to j
                'outer: for &(e, _, _) in layer {
                    for i in 0..=j {
                        let lhs = phi[d.mul(e, chain.gens[i]) as usize];
                        let rhs = d.mul(phi[e as usize], images[i]);
                        if lhs != rhs {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            ok
        };
        if ok {
            rec(
                d, chain, candidates, j + 1, phi, used, images, count, stop, visit,
            );
            if *stop {
                return;
            }
        }
        for &(e, _, _) in layer {
            let v = phi[e as usize];
            used[v as usize] = false;
            phi[e as usize] = u16::MAX;
        }
    }
}

/// |Aut(G)| by exhaustive generator-image counting over a minimal
/// generating tuple.
pub fn automorphism_count(d: &DenseGroup, gens: &[u16]) -> u64 {
    for_each_automorphism(d, gens, |_| true)
}

/// First isomorphism from the group of `chain_gens` in `src` onto `dst`
/// found by the same backtracking, as a src-id → dst-id map. `None` when
/// the groups are not isomorphic. Orders must agree.
pub fn explicit_isomorphism(
    src: &DenseGroup,
    src_gens: &[u16],
    dst: &DenseGroup,
) -> Option<Vec<u16>> {
    if src.n != dst.n {
        return None;
    }
    let chain = build_chain(src, src_gens);
    let candidates: Vec<Vec<u16>> = src_gens
        .iter()
        .map(|&g| {
            (0..dst.n as u16)
                .filter(|&t| dst.order_of(t) == src.order_of(g))
                .collect()
        })
        .collect();
    let mut phi = vec![u16::MAX; src.n];
    let mut used = vec![false; dst.n];
    phi[src.id as usize] = dst.id;
    used[dst.id as usize] = true;
    let mut images = vec![0u16; chain.k];
    let mut found: Option<Vec<u16>> = None;
    rec_iso(
        src, dst, &chain, &candidates, 0, &mut phi, &mut used, &mut images, &mut found,
    );
    found
}

#[allow(clippy::too_many_arguments)]
fn rec_iso(
    src: &DenseGroup,
    dst: &DenseGroup,
    chain: &Chain,
    candidates: &[Vec<u16>],
    j: usize,
    phi: &mut [u16],
    used: &mut [bool],
    images: &mut [u16],
    found: &mut Option<Vec<u16>>,
) {
    if found.is_some() {
        return;
    }
    if j == chain.k {
        *found = Some(phi.to_vec());
        return;
    }
    'cand: for &t in &candidates[j] {
        images[j] = t;
        let layer = &chain.layers[j];
        let mut assigned = 0usize;
        for &(e, parent, gen) in layer {
            let v = dst.mul(phi[parent as usize], images[gen as usize]);
            if used[v as usize] {
                for &(e2, _, _) in layer.iter().take(assigned) {
                    used[phi[e2 as usize] as usize] = false;
                    phi[e2 as usize] = u16::MAX;
                }
                continue 'cand;
            }
            phi[e as usize] = v;
            used[v as usize] = true;
            assigned += 1;
        }
        let mut ok = true;
        for &e in &chain.prefixes[j] {
            if phi[src.mul(e, chain.gens[j]) as usize] != dst.mul(phi[e as usize], t) {
                ok = false;
                break;
            }
        }
        if ok {
            'outer: for &(e, _, _) in layer {
                for i in 0..=j {
                    if phi[src.mul(e, chain.gens[i]) as usize]
                        != dst.mul(phi[e as usize], images[i])
                    {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            rec_iso(src, dst, chain, candidates, j + 1, phi, used, images, found);
            if found.is_some() {
                return;
            }
        }
        for &(e, _, _) in layer {
            used[phi[e as usize] as usize] = false;
            phi[e as usize] = u16::MAX;
        }
    }
}
