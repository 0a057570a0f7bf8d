//! Reference groups for identification claims: symmetric groups and direct
//! products as permutation tables, classical groups over tiny fields by
//! outright enumeration.

use std::sync::Arc;

use crate::perm::Perm;
use crate::table::{Element, GroupOps, GroupTable, Mode};

pub struct PermOps {
    pub degree: usize,
}

impl GroupOps<Perm> for PermOps {
    fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.compose(b)
    }

    fn inverse(&self, a: &Perm) -> Perm {
        a.inverse()
    }
}

pub fn perm_table(degree: usize, gens: Vec<Perm>, cap: usize) -> Arc<GroupTable<Perm>> {
    let ops: Arc<dyn GroupOps<Perm>> = Arc::new(PermOps { degree });
    Arc::new(GroupTable::enumerate(ops, gens, Mode::Full, cap).unwrap())
}

fn transposition(degree: usize, a: usize, b: usize) -> Perm {
    let mut im: Vec<u16> = (0..degree as u16).collect();
    im.swap(a, b);
    Perm::from_images(im)
}

/// S_n on n points; n ≤ 7 keeps the table comfortable.
pub fn symmetric_table(n: usize) -> Arc<GroupTable<Perm>> {
    assert!((1..=7).contains(&n));
    let gens: Vec<Perm> = (0..n.saturating_sub(1))
        .map(|i| transposition(n, i, i + 1))
        .collect();
    perm_table(n, gens, 5100)
}

pub fn cyclic_table(m: usize) -> Arc<GroupTable<Perm>> {
    let mut im: Vec<u16> = (0..m as u16).collect();
    im.rotate_left(1);
    perm_table(m, vec![Perm::from_images(im)], m + 1)
}

/// A × B acting on the disjoint union of the two point sets.
pub fn direct_product_table(
    a: &GroupTable<Perm>,
    da: usize,
    b: &GroupTable<Perm>,
    db: usize,
) -> Arc<GroupTable<Perm>> {
    let degree = da + db;
    let embed_a = |p: &Perm| {
        let mut im: Vec<u16> = (0..degree as u16).collect();
        for x in 0..da {
            im[x] = p.apply(x) as u16;
        }
        Perm::from_images(im)
    };
    let embed_b = |p: &Perm| {
        let mut im: Vec<u16> = (0..degree as u16).collect();
        for x in 0..db {
            im[da + x] = (da + p.apply(x)) as u16;
        }
        Perm::from_images(im)
    };
    let mut gens: Vec<Perm> = a.generator_elements().iter().map(&embed_a).collect();
    gens.extend(b.generator_elements().iter().map(&embed_b));
    perm_table(degree, gens, a.order() * b.order() + 1)
}

/// Z₂ × S_n, the recurring outer-automorphism shape.
pub fn z2_times_symmetric(n: usize) -> Arc<GroupTable<Perm>> {
    let z2 = symmetric_table(2);
    let sn = symmetric_table(n);
    direct_product_table(&z2, 2, &sn, n)
}

// ---------------------------------------------------------------------------
// Matrix groups over F_q for tiny q

/// An n×n matrix over F_q, entries row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FqMatrix {
    pub q: u8,
    pub n: u8,
    pub e: Vec<u8>,
}

impl FqMatrix {
    pub fn identity(n: u8, q: u8) -> Self {
        let mut e = vec![0u8; (n * n) as usize];
        for k in 0..n {
            e[(k * n + k) as usize] = 1;
        }
        FqMatrix { q, n, e }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.n as usize;
        let q = self.q as u16;
        let mut e = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u16;
                for k in 0..n {
                    acc += self.e[i * n + k] as u16 * rhs.e[k * n + j] as u16;
                }
                e[i * n + j] = (acc % q) as u8;
            }
        }
        FqMatrix { q: self.q, n: self.n, e }
    }

    pub fn det(&self) -> u8 {
        // elimination over F_q with modular inverses; q is prime here
        let n = self.n as usize;
        let q = self.q as i64;
        let mut m: Vec<i64> = self.e.iter().map(|&v| v as i64).collect();
        let mut det = 1i64;
        for col in 0..n {
            let pivot = (col..n).find(|&r| m[r * n + col] % q != 0);
            let pivot = match pivot {
                Some(p) => p,
                None => return 0,
            };
            if pivot != col {
                for k in 0..n {
                    m.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = m[col * n + col] % q;
            det = det * p % q;
            let pinv = mod_inverse(p, q);
            for r in col + 1..n {
                let f = m[r * n + col] % q * pinv % q;
                for k in col..n {
                    m[r * n + k] = ((m[r * n + k] - f * m[col * n + k]) % q + q * q) % q;
                }
            }
        }
        (det.rem_euclid(q)) as u8
    }

    pub fn inverse(&self) -> Self {
        let n = self.n as usize;
        let q = self.q as i64;
        let mut a: Vec<i64> = self.e.iter().map(|&v| v as i64).collect();
        let mut b: Vec<i64> = FqMatrix::identity(self.n, self.q)
            .e
            .iter()
            .map(|&v| v as i64)
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r * n + col] % q != 0)
                .expect("invertible");
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                    b.swap(col * n + k, pivot * n + k);
                }
            }
            let pinv = mod_inverse(a[col * n + col] % q, q);
            for k in 0..n {
                a[col * n + k] = a[col * n + k] * pinv % q;
                b[col * n + k] = b[col * n + k] * pinv % q;
            }
            for r in 0..n {
                if r != col && a[r * n + col] % q != 0 {
                    let f = a[r * n + col] % q;
                    for k in 0..n {
                        a[r * n + k] = ((a[r * n + k] - f * a[col * n + k]) % q + q * q) % q;
                        b[r * n + k] = ((b[r * n + k] - f * b[col * n + k]) % q + q * q) % q;
                    }
                }
            }
        }
        FqMatrix {
            q: self.q,
            n: self.n,
            e: b.iter().map(|&v| (v.rem_euclid(q)) as u8).collect(),
        }
    }
}

fn mod_inverse(a: i64, q: i64) -> i64 {
    // q prime and tiny; scan
    (1..q).find(|&x| a * x % q == 1).expect("unit")
}

pub struct FqOps {
    pub n: u8,
    pub q: u8,
}

impl GroupOps<FqMatrix> for FqOps {
    fn identity(&self) -> FqMatrix {
        FqMatrix::identity(self.n, self.q)
    }

    fn mul(&self, a: &FqMatrix, b: &FqMatrix) -> FqMatrix {
        a.mul(b)
    }

    fn inverse(&self, a: &FqMatrix) -> FqMatrix {
        a.inverse()
    }
}

fn all_matrices(n: u8, q: u8) -> impl Iterator<Item = FqMatrix> {
    let cells = (n * n) as u32;
    let total = (q as u64).pow(cells);
    (0..total).map(move |mut code| {
        let mut e = vec![0u8; cells as usize];
        for slot in e.iter_mut() {
            *slot = (code % q as u64) as u8;
            code /= q as u64;
        }
        FqMatrix { q, n, e }
    })
}

fn fq_group(n: u8, q: u8, keep: impl Fn(u8) -> bool) -> Arc<GroupTable<FqMatrix>> {
    let identity = FqMatrix::identity(n, q);
    let mut elems = vec![identity.clone()];
    for m in all_matrices(n, q) {
        if m != identity && keep(m.det()) {
            elems.push(m);
        }
    }
    let gens = elems.clone();
    let ops: Arc<dyn GroupOps<FqMatrix>> = Arc::new(FqOps { n, q });
    Arc::new(GroupTable::from_elements(ops, elems, gens))
}

/// GL(n, q) by enumerating all matrices with nonzero determinant.
pub fn gl_table(n: u8, q: u8) -> Arc<GroupTable<FqMatrix>> {
    assert!((q as u64).pow((n * n) as u32) <= 1 << 20, "field too large");
    fq_group(n, q, |d| d != 0)
}

/// SL(n, q): determinant exactly one.
pub fn sl_table(n: u8, q: u8) -> Arc<GroupTable<FqMatrix>> {
    assert!((q as u64).pow((n * n) as u32) <= 1 << 20, "field too large");
    fq_group(n, q, |d| d == 1)
}

/// Pick a small generating subset of an enumerated table, greedily in id
/// order. Useful when a table was built from its full element list.
pub fn greedy_generators<E: Element>(t: &GroupTable<E>) -> Vec<u32> {
    let mut gens: Vec<u32> = Vec::new();
    let mut closure_len = 1usize;
    for id in 0..t.order() as u32 {
        if closure_len == t.order() {
            break;
        }
        let mut trial = gens.clone();
        trial.push(id);
        let c = t.subgroup_closure_ids(&trial);
        if c.len() > closure_len {
            gens.push(id);
            closure_len = c.len();
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        assert_eq!(symmetric_table(4).order(), 24);
        assert_eq!(symmetric_table(6).order(), 720);
    }

    #[test]
    fn direct_products() {
        let t = z2_times_symmetric(6);
        assert_eq!(t.order(), 1440);
        let t = z2_times_symmetric(5);
        assert_eq!(t.order(), 240);
    }

    #[test]
    fn classical_orders() {
        // |GL(2,3)| = (9−1)(9−3) = 48, |SL(2,3)| = 24, |GL(3,2)| = 168
        assert_eq!(gl_table(2, 3).order(), 48);
        assert_eq!(sl_table(2, 3).order(), 24);
        assert_eq!(gl_table(3, 2).order(), 168);
        assert_eq!(gl_table(2, 2).order(), 6);
    }

    #[test]
    fn fq_inverse() {
        let g = gl_table(2, 3);
        for id in 0..g.order() as u32 {
            let m = g.element(id);
            assert_eq!(m.mul(&m.inverse()), FqMatrix::identity(2, 3));
        }
    }

    #[test]
    fn greedy_generating_set() {
        let s4 = symmetric_table(4);
        let gens = greedy_generators(&s4);
        assert!(gens.len() <= 3);
        assert_eq!(s4.subgroup_closure_ids(&gens).len(), 24);
    }
}
