//! Permutations and base/strong-generating-set machinery (Schreier–Sims)
//! for groups too large to enumerate element by element: Weyl groups acting
//! on root systems, Clifford and Bell groups acting on Pauli classes.
//!
//! The implementation is the deterministic incremental algorithm with
//! extend-only transversals: orbit points keep their first coset
//! representative forever, so previously verified sift paths stay valid
//! when deeper levels grow. Base points are chosen as the first point moved
//! by the offending generator, which makes construction reproducible.

use std::collections::HashMap;
use std::fmt;

use crate::error::PauliError;

/// A permutation of {0..degree−1}, stored as the image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(
                (i as usize) < images.len() && !seen[i as usize],
                "not a bijection"
            );
            seen[i as usize] = true;
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Function composition: `(self.compose(rhs))(x) = self(rhs(x))`.
    pub fn compose(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.degree(), rhs.degree());
        Perm {
            images: rhs.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u16;
        }
        Perm { images }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Perm::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = base.compose(&acc);
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut n = 1;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            n += 1;
        }
        n
    }

    fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &v)| *i != v as usize)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl fmt::Display for Perm {
    /// Space-separated image list, the cache line format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

impl std::str::FromStr for Perm {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images: Result<Vec<u16>, _> = s.split_whitespace().map(|t| t.parse()).collect();
        let images = images.map_err(|_| PauliError::Parse(s.to_string()))?;
        Ok(Perm::from_images(images))
    }
}

struct Level {
    point: usize,
    orbit: Vec<usize>,
    /// orbit point → u with u(point) = that orbit point
    transversal: HashMap<usize, Perm>,
}

/// Base and strong generating set of a permutation group.
///
/// Strong generators are held in one global list; level `i` sees exactly
/// those fixing `base[0..i]`. Verification walks levels bottom-up and
/// restarts below whenever a sifted Schreier generator survives, the
/// classic deterministic Schreier–Sims loop.
pub struct Bsgs {
    degree: usize,
    gens: Vec<Perm>,
    base: Vec<usize>,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl fmt::Debug for Bsgs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bsgs(degree = {}, order = {})", self.degree, self.order())
    }
}

impl Bsgs {
    /// Deterministic Schreier–Sims over the given generators.
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        let mut b = Bsgs {
            degree,
            gens: Vec::new(),
            base: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens {
            b.extend(g);
        }
        b
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    /// Add one generator and restore the strong-generation invariant.
    pub fn extend(&mut self, g: Perm) {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        self.gens.push(g.clone());
        if g.is_identity() || self.contains_unchecked(&g) {
            return;
        }
        self.admit_strong(g);
        self.verify_all();
    }

    /// Record a new strong generator, extending the base so that every
    /// strong generator moves some base point.
    fn admit_strong(&mut self, g: Perm) {
        if self.base.iter().all(|&b| g.apply(b) == b) {
            let point = g.first_moved().expect("not the identity");
            self.base.push(point);
            self.levels.push(Level {
                point,
                orbit: Vec::new(),
                transversal: HashMap::new(),
            });
        }
        self.strong.push(g);
    }

    /// Strong generators visible at level i: those fixing base[0..i].
    fn level_gens(&self, i: usize) -> Vec<Perm> {
        self.strong
            .iter()
            .filter(|g| self.base[..i].iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect()
    }

    fn rebuild_level(&mut self, i: usize) {
        let gens = self.level_gens(i);
        let point = self.base[i];
        let mut orbit = vec![point];
        let mut transversal = HashMap::new();
        transversal.insert(point, Perm::identity(self.degree));
        let mut next = 0;
        while next < orbit.len() {
            let p = orbit[next];
            next += 1;
            let rep = transversal[&p].clone();
            for g in &gens {
                let q = g.apply(p);
                if !transversal.contains_key(&q) {
                    transversal.insert(q, g.compose(&rep));
                    orbit.push(q);
                }
            }
        }
        self.levels[i] = Level {
            point,
            orbit,
            transversal,
        };
    }

    /// One verification pass of level i. Returns the first surviving sift
    /// residue, or None when every Schreier generator lands in the group
    /// generated below.
    fn verify_level(&mut self, i: usize) -> Option<Perm> {
        self.rebuild_level(i);
        let gens = self.level_gens(i);
        for idx in 0..self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[idx];
            let u_p = self.levels[i].transversal[&p].clone();
            for s in &gens {
                let q = s.apply(p);
                let u_q_inv = self.levels[i].transversal[&q].inverse();
                let schreier = u_q_inv.compose(s).compose(&u_p);
                if schreier.is_identity() {
                    continue;
                }
                let residue = self.sift_from(i + 1, schreier);
                if !residue.is_identity() {
                    return Some(residue);
                }
            }
        }
        None
    }

    /// Bottom-up verification; on a surviving residue, admit it as a strong
    /// generator one level down and resume there.
    fn verify_all(&mut self) {
        if self.base.is_empty() {
            return;
        }
        for i in 0..self.base.len() {
            self.rebuild_level(i);
        }
        let mut i = self.base.len() - 1;
        loop {
            match self.verify_level(i) {
                Some(residue) => {
                    self.admit_strong(residue);
                    // the residue fixes base[0..=i], so it belongs below
                    i = (i + 1).min(self.base.len() - 1);
                }
                None => {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                }
            }
        }
    }

    /// Sift through levels `from..`, returning the residue.
    fn sift_from(&self, from: usize, mut g: Perm) -> Perm {
        for level in &self.levels[from..] {
            if g.is_identity() {
                return g;
            }
            let img = g.apply(level.point);
            match level.transversal.get(&img) {
                None => return g,
                Some(u) => g = u.inverse().compose(&g),
            }
        }
        g
    }

    fn contains_unchecked(&self, p: &Perm) -> bool {
        self.sift_from(0, p.clone()).is_identity()
    }

    /// Exact group order: the product of the basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len().max(1) as u128)
            .product()
    }

    /// Membership test by sifting.
    pub fn contains(&self, p: &Perm) -> Result<bool, PauliError> {
        if p.degree() != self.degree {
            return Err(PauliError::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.contains_unchecked(p))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// BSGS of the normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> Bsgs {
        let mut k = Bsgs::new(self.degree, Vec::new());
        let mut worklist: Vec<Perm> = Vec::new();
        for (i, a) in self.gens.iter().enumerate() {
            for b in self.gens.iter().skip(i + 1) {
                let c = a
                    .compose(b)
                    .compose(&a.inverse())
                    .compose(&b.inverse());
                if !c.is_identity() && !k.contains_unchecked(&c) {
                    k.extend(c.clone());
                    worklist.push(c);
                }
            }
        }
        while let Some(w) = worklist.pop() {
            for g in &self.gens {
                let c = g.compose(&w).compose(&g.inverse());
                if !k.contains_unchecked(&c) {
                    k.extend(c.clone());
                    worklist.push(c);
                }
            }
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn s4_order() {
        let b = Bsgs::new(4, vec![transposition(4, 0, 1), cycle(4, &[0, 1, 2, 3])]);
        assert_eq!(b.order(), 24);
    }

    #[test]
    fn membership() {
        let b = Bsgs::new(4, vec![transposition(4, 0, 1), cycle(4, &[0, 1, 2, 3])]);
        assert!(b.contains(&Perm::identity(4)).unwrap());
        for g in b.generators() {
            assert!(b.contains(g).unwrap());
        }
        // alternating group on 4 points misses transpositions
        let a4 = Bsgs::new(4, vec![cycle(4, &[0, 1, 2]), cycle(4, &[1, 2, 3])]);
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&transposition(4, 0, 1)).unwrap());
        // degree mismatch is an error
        assert!(a4.contains(&Perm::identity(5)).is_err());
    }

    #[test]
    fn derived_subgroups() {
        let s4 = Bsgs::new(4, vec![transposition(4, 0, 1), cycle(4, &[0, 1, 2, 3])]);
        let a4 = s4.derived_subgroup();
        assert_eq!(a4.order(), 12);
        let v4 = a4.derived_subgroup();
        assert_eq!(v4.order(), 4);
        let triv = v4.derived_subgroup();
        assert_eq!(triv.order(), 1);
        // abelian group: trivial derived subgroup
        let z5 = Bsgs::new(5, vec![cycle(5, &[0, 1, 2, 3, 4])]);
        assert_eq!(z5.derived_subgroup().order(), 1);
    }

    #[test]
    fn derived_order_divides_group_order() {
        let s4 = Bsgs::new(4, vec![transposition(4, 0, 1), cycle(4, &[0, 1, 2, 3])]);
        let d = s4.derived_subgroup();
        assert_eq!(s4.order() % d.order(), 0);
    }

    #[test]
    fn order_independent_of_generator_order() {
        let gens = vec![
            transposition(4, 0, 1),
            cycle(4, &[0, 1, 2, 3]),
            transposition(4, 2, 3),
        ];
        let mut shuffles = vec![
            gens.clone(),
            vec![gens[2].clone(), gens[0].clone(), gens[1].clone()],
            vec![gens[1].clone(), gens[2].clone(), gens[0].clone()],
        ];
        let orders: Vec<u128> = shuffles
            .drain(..)
            .map(|g| Bsgs::new(4, g).order())
            .collect();
        assert!(orders.iter().all(|&o| o == 24));
    }

    #[test]
    fn random_words_are_members() {
        // deterministic pseudo-random walk over the generators
        let gens = vec![transposition(6, 0, 1), cycle(6, &[0, 1, 2, 3, 4, 5])];
        let b = Bsgs::new(6, gens.clone());
        assert_eq!(b.order(), 720);
        let mut state = 0x12345678u64;
        for _ in 0..200 {
            let mut w = Perm::identity(6);
            for _ in 0..12 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let pick = (state >> 33) as usize % gens.len();
                w = gens[pick].compose(&w);
            }
            assert!(b.contains(&w).unwrap());
        }
    }

    #[test]
    fn perm_text_round_trip() {
        let p = cycle(5, &[0, 2, 4]);
        let s = p.to_string();
        assert_eq!(s.parse::<Perm>().unwrap(), p);
    }
}
