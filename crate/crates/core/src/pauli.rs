//! Symplectic encoding of n-qubit Pauli operators and the conjugation
//! action of exact unitaries on them. An element is i^δ · X^x Z^z with the
//! phase exponent δ mod 4 and bit vectors x, z of length n; multiplication
//! follows (δ₁,x₁,z₁)·(δ₂,x₂,z₂) = (δ₁+δ₂+2·(z₁·x₂), x₁⊕x₂, z₁⊕z₂).
//!
//! Conjugating the non-identity Pauli classes by a unitary yields a
//! permutation; this is how the large Clifford-like groups are handled when
//! full matrix enumeration is out of reach. Two actions are provided:
//!
//! - unsigned: points are the 4ⁿ−1 nonzero symplectic classes (x, z);
//! - signed: points are the 2(4ⁿ−1) non-central classes of the quotient by
//!   ⟨i⟩-phases keeping track of sign, realized concretely by Hermitian
//!   representatives i^(x·z)·(−1)^s X^x Z^z with sign bit s. Conjugation
//!   preserves Hermiticity, so the action is well defined, and only scalar
//!   matrices act trivially, which makes the signed image isomorphic to the
//!   central quotient of the matrix group acting.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::PauliError;
use crate::matrix::ExactMatrix;
use crate::perm::Perm;
use crate::table::{GroupOps, GroupTable, Mode};
use crate::CycEight;

/// i^phase · X^x Z^z on `n` qubits; bit k of x/z is qubit k, qubit 0 is the
/// leftmost tensor factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliElement {
    pub n: u8,
    pub phase: u8,
    pub x: u16,
    pub z: u16,
}

impl PauliElement {
    pub fn new(n: usize, phase: u8, x: u16, z: u16) -> Self {
        assert!(n <= 16);
        let mask = Self::mask(n);
        PauliElement {
            n: n as u8,
            phase: phase & 3,
            x: x & mask,
            z: z & mask,
        }
    }

    fn mask(n: usize) -> u16 {
        if n >= 16 {
            u16::MAX
        } else {
            (1u16 << n) - 1
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, 0, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.x == 0 && self.z == 0
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        let cross = (self.z & rhs.x).count_ones() as u8;
        PauliElement {
            n: self.n,
            phase: (self.phase + rhs.phase + 2 * cross) & 3,
            x: self.x ^ rhs.x,
            z: self.z ^ rhs.z,
        }
    }

    pub fn inverse(&self) -> Self {
        let cross = (self.z & self.x).count_ones() as u8;
        PauliElement {
            n: self.n,
            phase: (4u8.wrapping_sub(self.phase).wrapping_sub(2 * cross)) & 3,
            x: self.x,
            z: self.z,
        }
    }

    /// True iff the symplectic form x₁·z₂ + z₁·x₂ vanishes over F₂.
    pub fn commutes_with(&self, rhs: &Self) -> bool {
        debug_assert_eq!(self.n, rhs.n);
        let form = (self.x & rhs.z).count_ones() + (self.z & rhs.x).count_ones();
        form % 2 == 0
    }

    /// δ ≡ x·z (mod 2) characterizes Hermitian elements.
    pub fn is_hermitian(&self) -> bool {
        (self.phase & 1) == ((self.x & self.z).count_ones() as u8 & 1)
    }

    /// Dense 2ⁿ×2ⁿ matrix: entry (c⊕x, c) = i^δ·(−1)^(z·c).
    pub fn to_matrix(&self) -> Result<ExactMatrix, PauliError> {
        let n = self.n as usize;
        if n > 4 {
            return Err(PauliError::DimensionTooLarge(n));
        }
        let dim = 1usize << n;
        let mut m = ExactMatrix::from_entries(dim, vec![CycEight::zero(); dim * dim]);
        let phase = CycEight::i();
        let mut base = CycEight::one();
        for _ in 0..self.phase {
            base = base.mul(&phase);
        }
        for col in 0..dim {
            let row = col ^ self.col_bits();
            let sign = (self.row_bits() & col as u16).count_ones() % 2;
            let v = if sign == 1 { base.neg() } else { base.clone() };
            m.set(row, col, v);
        }
        Ok(m)
    }

    // basis index bit k of the computational state corresponds to qubit k
    // counted from the LEFT tensor factor, i.e. qubit 0 is the high bit
    fn col_bits(&self) -> usize {
        reverse_bits(self.x, self.n as usize) as usize
    }

    fn row_bits(&self) -> u16 {
        reverse_bits(self.z, self.n as usize)
    }
}

fn reverse_bits(v: u16, n: usize) -> u16 {
    let mut out = 0u16;
    for k in 0..n {
        if v & (1 << k) != 0 {
            out |= 1 << (n - 1 - k);
        }
    }
    out
}

impl fmt::Debug for PauliElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PauliElement {
    /// `i^δ` followed by one letter per qubit, e.g. `i^1 XZ`. The letter Y
    /// stands for the bit pair (x=1, z=1), i.e. the X·Z factor without its
    /// own i; σ_y itself prints as `i^1 Y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i^{} ", self.phase)?;
        for k in 0..self.n as usize {
            let x = self.x >> k & 1;
            let z = self.z >> k & 1;
            let c = match (x, z) {
                (0, 0) => 'I',
                (1, 0) => 'X',
                (0, 1) => 'Z',
                _ => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for PauliElement {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rest = s
            .strip_prefix("i^")
            .ok_or_else(|| PauliError::Parse(s.to_string()))?;
        let (digit, letters) = rest
            .split_once(' ')
            .ok_or_else(|| PauliError::Parse(s.to_string()))?;
        let phase: u8 = digit
            .parse()
            .map_err(|_| PauliError::Parse(s.to_string()))?;
        let letters = letters.trim();
        let mut x = 0u16;
        let mut z = 0u16;
        for (k, c) in letters.chars().enumerate() {
            if k >= 16 {
                return Err(PauliError::Parse(s.to_string()));
            }
            match c {
                'I' => {}
                'X' => x |= 1 << k,
                'Z' => z |= 1 << k,
                'Y' => {
                    x |= 1 << k;
                    z |= 1 << k;
                }
                _ => return Err(PauliError::Parse(s.to_string())),
            }
        }
        Ok(PauliElement::new(letters.len(), phase, x, z))
    }
}

/// Single-qubit σ with letter semantics of the matrix constructors: `y` is
/// the actual σ_y = i·X·Z.
pub fn sigma(n: usize, qubit: usize, letter: char) -> PauliElement {
    let bit = 1u16 << qubit;
    match letter {
        'I' | 'i' => PauliElement::new(n, 0, 0, 0),
        'X' | 'x' => PauliElement::new(n, 0, bit, 0),
        'Z' | 'z' => PauliElement::new(n, 0, 0, bit),
        'Y' | 'y' => PauliElement::new(n, 1, bit, bit),
        _ => panic!("unknown Pauli letter {letter:?}"),
    }
}

/// Decode an exact matrix as a Pauli element; x comes from the nonzero
/// pattern of column 0, then δ and z from entry values, then the whole
/// matrix is checked.
pub fn matrix_to_pauli(m: &ExactMatrix) -> Result<PauliElement, PauliError> {
    let dim = m.dim();
    if !dim.is_power_of_two() {
        return Err(PauliError::NotPowerOfTwo(dim));
    }
    let n = dim.trailing_zeros() as usize;
    // column 0: unique nonzero row r = x-pattern, value i^δ
    let mut row0 = None;
    for r in 0..dim {
        if !m.get(r, 0).is_zero() {
            if row0.is_some() {
                return Err(PauliError::NotPauli);
            }
            row0 = Some(r);
        }
    }
    let row0 = row0.ok_or(PauliError::NotPauli)?;
    let v0 = m.get(row0, 0).clone();
    let mut phase = None;
    let mut acc = CycEight::one();
    for d in 0..4u8 {
        if v0 == acc {
            phase = Some(d);
            break;
        }
        acc = acc.mul(&CycEight::i());
    }
    let phase = phase.ok_or(PauliError::NotPauli)?;
    // z bits from the sign at basis columns e_k
    let mut z_rev = 0u16;
    for k in 0..n {
        let col = 1usize << (n - 1 - k);
        let row = col ^ row0;
        let v = m.get(row, col);
        let mut base = CycEight::one();
        for _ in 0..phase {
            base = base.mul(&CycEight::i());
        }
        if *v == base.neg() {
            z_rev |= 1 << (n - 1 - k);
        } else if *v != base {
            return Err(PauliError::NotPauli);
        }
    }
    let x = reverse_bits(row0 as u16, n);
    let z = reverse_bits(z_rev, n);
    let candidate = PauliElement::new(n, phase, x, z);
    if &candidate.to_matrix().map_err(|_| PauliError::NotPauli)? == m {
        Ok(candidate)
    } else {
        Err(PauliError::NotPauli)
    }
}

pub struct PauliOps {
    pub n: usize,
}

impl GroupOps<PauliElement> for PauliOps {
    fn identity(&self) -> PauliElement {
        PauliElement::identity(self.n)
    }

    fn mul(&self, a: &PauliElement, b: &PauliElement) -> PauliElement {
        a.mul(b)
    }

    fn inverse(&self, a: &PauliElement) -> PauliElement {
        a.inverse()
    }
}

/// The n-qubit Pauli group as a full table over symplectic elements,
/// generated the way the text generates it: ⟨σx, σy, σz⟩ for one qubit,
/// the five listed observables for two qubits, and the local X/Z set plus
/// one σy for three.
pub fn pauli_group_table(n: usize) -> Arc<GroupTable<PauliElement>> {
    assert!(n <= 3, "table mode is for n <= 3");
    let gens: Vec<PauliElement> = match n {
        1 => vec![sigma(1, 0, 'x'), sigma(1, 0, 'y'), sigma(1, 0, 'z')],
        2 => vec![
            two(('i', 'x')),
            two(('x', 'x')),
            two(('z', 'z')),
            two(('y', 'z')),
            two(('z', 'x')),
        ],
        3 => {
            let mut v = Vec::new();
            for q in 0..3 {
                v.push(sigma(3, q, 'x'));
                v.push(sigma(3, q, 'z'));
            }
            v.push(sigma(3, 0, 'y'));
            v
        }
        _ => unreachable!(),
    };
    let ops: Arc<dyn GroupOps<PauliElement>> = Arc::new(PauliOps { n });
    Arc::new(GroupTable::enumerate(ops, gens, Mode::Full, 4 * 4usize.pow(n as u32)).unwrap())
}

/// Tensor of two single-qubit letters, qubit 0 on the left.
pub fn two(p: (char, char)) -> PauliElement {
    sigma(2, 0, p.0).mul(&sigma(2, 1, p.1))
}

/// Points of the unsigned action: nonzero (x, z) in lexicographic order.
pub fn unsigned_points(n: usize) -> Vec<(u16, u16)> {
    let size = 1u32 << n;
    let mut pts = Vec::new();
    for x in 0..size as u16 {
        for z in 0..size as u16 {
            if x != 0 || z != 0 {
                pts.push((x, z));
            }
        }
    }
    pts
}

/// Points of the signed action: Hermitian representatives
/// i^(x·z)·(−1)^s X^x Z^z for nonzero (x, z) and s ∈ {0, 1}.
pub fn signed_points(n: usize) -> Vec<PauliElement> {
    let mut pts = Vec::new();
    for (x, z) in unsigned_points(n) {
        let parity = (x & z).count_ones() as u8 & 1;
        for s in 0..2u8 {
            pts.push(PauliElement::new(n, (parity + 2 * s) & 3, x, z));
        }
    }
    pts
}

/// The permutation induced on Pauli classes by conjugation g ↦ U·g·U†.
/// Fails with NotClifford when some conjugate is not a Pauli operator.
pub fn clifford_action(
    u: &ExactMatrix,
    n: usize,
    signed: bool,
) -> Result<Perm, PauliError> {
    if u.dim() != 1 << n {
        return Err(PauliError::DegreeMismatch(1 << n, u.dim()));
    }
    let udag = u.adjoint();
    let conj = |p: &PauliElement| -> Result<PauliElement, PauliError> {
        let m = p.to_matrix()?;
        matrix_to_pauli(&u.mul(&m).mul(&udag)).map_err(|_| PauliError::NotClifford)
    };
    if signed {
        let pts = signed_points(n);
        let index: std::collections::HashMap<PauliElement, usize> =
            pts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut images = Vec::with_capacity(pts.len());
        for p in &pts {
            let q = conj(p)?;
            let &target = index.get(&q).ok_or(PauliError::NotClifford)?;
            images.push(target as u16);
        }
        Ok(Perm::from_images(images))
    } else {
        let pts = unsigned_points(n);
        let index: std::collections::HashMap<(u16, u16), usize> =
            pts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut images = Vec::with_capacity(pts.len());
        for &(x, z) in &pts {
            let q = conj(&PauliElement::new(n, 0, x, z))?;
            let &target = index.get(&(q.x, q.z)).ok_or(PauliError::NotClifford)?;
            images.push(target as u16);
        }
        Ok(Perm::from_images(images))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{gate, Gate};
    use crate::table::quotient;
    use proptest::prelude::*;

    #[test]
    fn commutation_basics() {
        let x = sigma(1, 0, 'x');
        let z = sigma(1, 0, 'z');
        assert!(!x.commutes_with(&z));
        assert!(x.commutes_with(&x));
        // σ0⊗σx vs σx⊗σ0 commute
        let a = two(('i', 'x'));
        let b = two(('x', 'i'));
        assert!(a.commutes_with(&b));
    }

    #[test]
    fn to_matrix_basics() {
        // (δ=1, x=1, z=1) on one qubit is iXZ = σy
        let y = PauliElement::new(1, 1, 1, 1);
        assert_eq!(y.to_matrix().unwrap(), gate(Gate::Y));
        assert_eq!(
            PauliElement::identity(2).to_matrix().unwrap(),
            ExactMatrix::identity(4)
        );
        // (0, x=10, z=01) is σx ⊗ σz
        let p = PauliElement::new(2, 0, 0b01, 0b10);
        assert_eq!(
            p.to_matrix().unwrap(),
            gate(Gate::X).tensor(&gate(Gate::Z))
        );
        assert!(PauliElement::identity(5).to_matrix().is_err());
    }

    #[test]
    fn matrix_decoding() {
        // round trip of σy ⊗ σz = (iXZ)⊗Z: phase 1, x = 10, z = 11
        let m = gate(Gate::Y).tensor(&gate(Gate::Z));
        let p = matrix_to_pauli(&m).unwrap();
        assert_eq!(p, PauliElement::new(2, 1, 0b01, 0b11));
        assert_eq!(p.to_matrix().unwrap(), m);
        // Hadamard is not a Pauli
        assert_eq!(matrix_to_pauli(&gate(Gate::H)), Err(PauliError::NotPauli));
        // −I4 is i^2 · identity
        let m = ExactMatrix::identity(4).neg();
        assert_eq!(matrix_to_pauli(&m).unwrap(), PauliElement::new(2, 2, 0, 0));
    }

    #[test]
    fn group_orders() {
        assert_eq!(pauli_group_table(1).order(), 16);
        assert_eq!(pauli_group_table(2).order(), 64);
        assert_eq!(pauli_group_table(3).order(), 256);
    }

    #[test]
    fn two_qubit_table_is_full_phase_times_symplectic() {
        let t = pauli_group_table(2);
        for phase in 0..4u8 {
            for x in 0..4u16 {
                for z in 0..4u16 {
                    assert!(t.contains(&PauliElement::new(2, phase, x, z)));
                }
            }
        }
    }

    #[test]
    fn central_quotient_is_elementary_abelian() {
        for n in 1..=3usize {
            let t = pauli_group_table(n);
            let z = t.center();
            assert_eq!(z.order(), 4);
            let q = quotient(&t, &z).unwrap();
            assert_eq!(q.order(), 4usize.pow(n as u32));
            for id in 0..q.order() as u32 {
                assert!(q.element_order(id) <= 2);
            }
        }
    }

    #[test]
    fn single_qubit_actions() {
        // H swaps the X and Z classes, fixes the Y class
        let h = clifford_action(&gate(Gate::H), 1, false).unwrap();
        let pts = unsigned_points(1);
        let find = |x: u16, z: u16| pts.iter().position(|&p| p == (x, z)).unwrap();
        assert_eq!(h.apply(find(1, 0)), find(0, 1));
        assert_eq!(h.apply(find(0, 1)), find(1, 0));
        assert_eq!(h.apply(find(1, 1)), find(1, 1));
        // P maps the X class to the Y class, fixes Z
        let p = clifford_action(&gate(Gate::P), 1, false).unwrap();
        assert_eq!(p.apply(find(1, 0)), find(1, 1));
        assert_eq!(p.apply(find(0, 1)), find(0, 1));
    }

    #[test]
    fn non_clifford_detected() {
        // diag(1, ζ) conjugates X outside the Pauli group
        let mut m = ExactMatrix::identity(2);
        m.set(1, 1, CycEight::zeta_pow(1));
        assert_eq!(
            clifford_action(&m, 1, false),
            Err(PauliError::NotClifford)
        );
        // T = ζ·P·H is a Clifford word, so it does act
        assert!(clifford_action(&gate(Gate::T), 1, true).is_ok());
    }

    #[test]
    fn signed_action_faithful_modulo_scalars() {
        // conjugation by Z sends X to −X: nontrivial on signed classes,
        // trivial on unsigned ones
        let z_unsigned = clifford_action(&gate(Gate::Z), 1, false).unwrap();
        assert!(z_unsigned.is_identity());
        let z_signed = clifford_action(&gate(Gate::Z), 1, true).unwrap();
        assert!(!z_signed.is_identity());
        // scalar matrices act trivially in both
        let s = ExactMatrix::identity(2).scale(&CycEight::zeta_pow(1));
        assert!(clifford_action(&s, 1, true).unwrap().is_identity());
    }

    #[test]
    fn text_round_trip() {
        for s in ["i^1 XZ", "i^0 III", "i^3 YXZ", "i^2 Y"] {
            let p: PauliElement = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn commutation_matches_matrices_exhaustively_n2() {
        let t = pauli_group_table(2);
        let elems = t.elements();
        for a in elems.iter() {
            for b in elems.iter() {
                let ma = a.to_matrix().unwrap();
                let mb = b.to_matrix().unwrap();
                let commute = ma.mul(&mb) == mb.mul(&ma);
                assert_eq!(a.commutes_with(b), commute, "{a} vs {b}");
            }
        }
    }

    fn arb_pauli(n: usize) -> impl Strategy<Value = PauliElement> {
        let size = 1u16 << n;
        (0..4u8, 0..size, 0..size).prop_map(move |(d, x, z)| PauliElement::new(n, d, x, z))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        /// the dense-matrix map is a homomorphism
        #[test]
        fn matrix_homomorphism(n in 1usize..4, seed in proptest::array::uniform6(0u16..256)) {
            let size = 1u16 << n;
            let a = PauliElement::new(n, (seed[0] % 4) as u8, seed[1] % size, seed[2] % size);
            let b = PauliElement::new(n, (seed[3] % 4) as u8, seed[4] % size, seed[5] % size);
            let lhs = a.mul(&b).to_matrix().unwrap();
            let rhs = a.to_matrix().unwrap().mul(&b.to_matrix().unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn parse_round_trip(p in arb_pauli(3)) {
            let s = p.to_string();
            prop_assert_eq!(s.parse::<PauliElement>().unwrap(), p);
        }

        #[test]
        fn inverse_law(p in arb_pauli(3)) {
            prop_assert!(p.mul(&p.inverse()).is_identity());
        }
    }

    #[test]
    fn action_is_homomorphism_on_words() {
        // random words in {H⊗I, I⊗H, P⊗I, CZ} on two qubits
        let i2 = gate(Gate::I);
        let gens = [
            gate(Gate::H).tensor(&i2),
            i2.tensor(&gate(Gate::H)),
            gate(Gate::P).tensor(&i2),
            gate(Gate::Cz),
        ];
        let mut state = 0xdeadbeefu64;
        for _ in 0..25 {
            let mut u = ExactMatrix::identity(4);
            let mut v = ExactMatrix::identity(4);
            for _ in 0..4 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                u = u.mul(&gens[(state >> 33) as usize % gens.len()]);
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                v = v.mul(&gens[(state >> 33) as usize % gens.len()]);
            }
            for signed in [false, true] {
                let a = clifford_action(&u.mul(&v), 2, signed).unwrap();
                let b = clifford_action(&u, 2, signed)
                    .unwrap()
                    .compose(&clifford_action(&v, 2, signed).unwrap());
                assert_eq!(a, b);
            }
        }
    }
}
