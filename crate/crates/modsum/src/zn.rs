//! Exact arithmetic of subsets of `Z_n`: modular sumsets, difference sets,
//! arithmetic-progression detection and cardinality bounds.
//!
//! Sets are dense bit-vectors (bit `i` set ⟺ residue `i` is a member), so the
//! modulus is capped at [`MAX_MODULUS`]. All values are immutable after
//! construction and safe to share across threads.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest supported modulus; members live in a single `u64` word.
pub const MAX_MODULUS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("modulus {0} exceeds the supported maximum {MAX_MODULUS}")]
    ModulusTooLarge(u32),
    #[error("residue {member} out of range for Z_{modulus}")]
    MemberOutOfRange { member: u32, modulus: u32 },
    #[error("incompatible moduli {0} and {1}")]
    IncompatibleModuli(u32, u32),
    #[error("operation requires a nonempty set")]
    EmptyOperand,
}

/// A subset of `Z_n` together with its modulus.
///
/// Residues are canonical representatives `0..n-1`; there are no negative
/// residues anywhere in the public surface. The empty set is representable
/// (some operations legitimately return it) but every operation that models
/// a vertex or edge label rejects empty operands.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZnSet {
    modulus: u32,
    bits: u64,
}

impl ZnSet {
    /// Builds a set from a list of residues. Duplicates are idempotent.
    pub fn new(modulus: u32, members: &[u32]) -> Result<Self, SetError> {
        if modulus == 0 {
            return Err(SetError::ZeroModulus);
        }
        if modulus > MAX_MODULUS {
            return Err(SetError::ModulusTooLarge(modulus));
        }
        let mut bits = 0u64;
        for &member in members {
            if member >= modulus {
                return Err(SetError::MemberOutOfRange { member, modulus });
            }
            bits |= 1 << member;
        }
        Ok(ZnSet { modulus, bits })
    }

    /// The empty subset of `Z_n`.
    pub fn empty(modulus: u32) -> Result<Self, SetError> {
        Self::new(modulus, &[])
    }

    /// The full ground set `Z_n`.
    pub fn full(modulus: u32) -> Result<Self, SetError> {
        Self::empty(modulus)?;
        Ok(ZnSet {
            modulus,
            bits: word_mask(modulus),
        })
    }

    /// Builds a set directly from a membership word. Bits at or above the
    /// modulus must be clear.
    pub fn from_mask(modulus: u32, mask: u64) -> Result<Self, SetError> {
        if modulus == 0 {
            return Err(SetError::ZeroModulus);
        }
        if modulus > MAX_MODULUS {
            return Err(SetError::ModulusTooLarge(modulus));
        }
        if mask & !word_mask(modulus) != 0 {
            return Err(SetError::MemberOutOfRange {
                member: 63 - mask.leading_zeros(),
                modulus,
            });
        }
        Ok(ZnSet {
            modulus,
            bits: mask,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Membership word; bit `i` set ⟺ residue `i` is a member.
    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn card(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == word_mask(self.modulus)
    }

    pub fn contains(&self, residue: u32) -> bool {
        residue < self.modulus && self.bits & (1 << residue) != 0
    }

    pub fn is_subset_of(&self, other: &ZnSet) -> bool {
        self.modulus == other.modulus && self.bits & !other.bits == 0
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        let bits = self.bits;
        (0..self.modulus).filter(move |i| bits & (1 << i) != 0)
    }

    pub fn members(&self) -> Vec<u32> {
        self.iter().collect()
    }

    fn require_same_modulus(&self, other: &ZnSet) -> Result<(), SetError> {
        if self.modulus != other.modulus {
            return Err(SetError::IncompatibleModuli(self.modulus, other.modulus));
        }
        Ok(())
    }

    /// Modular sumset `{(a + b) mod n : a ∈ self, b ∈ other}`.
    ///
    /// Computed as a union of cyclic shifts of `self`, one per member of
    /// `other`; equal by construction to the naive double loop over members.
    pub fn sumset(&self, other: &ZnSet) -> Result<ZnSet, SetError> {
        self.require_same_modulus(other)?;
        if self.is_empty() || other.is_empty() {
            return Err(SetError::EmptyOperand);
        }
        Ok(ZnSet {
            modulus: self.modulus,
            bits: sumset_word(self.bits, other.bits, self.modulus),
        })
    }

    /// Modular difference set `{(a_i - a_j) mod n : a_i, a_j ∈ self, a_i ≠ a_j}`.
    ///
    /// Excludes 0 and is closed under negation mod n. A singleton yields the
    /// empty set.
    pub fn modular_difference_set(&self) -> Result<ZnSet, SetError> {
        if self.is_empty() {
            return Err(SetError::EmptyOperand);
        }
        Ok(ZnSet {
            modulus: self.modulus,
            bits: diff_word(self.bits, self.modulus),
        })
    }

    /// Absolute-value difference set `{|a_i - a_j| : a_i, a_j ∈ self, a_i ≠ a_j}`
    /// over the canonical representatives, returned as plain integers.
    ///
    /// This is not modular arithmetic; it is retained alongside
    /// [`modular_difference_set`](Self::modular_difference_set) so the gap
    /// between the two semantics can be demonstrated.
    pub fn absolute_difference_set(&self) -> Result<std::collections::BTreeSet<u32>, SetError> {
        if self.is_empty() {
            return Err(SetError::EmptyOperand);
        }
        let members = self.members();
        let mut out = std::collections::BTreeSet::new();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                out.insert(b.max(a) - b.min(a));
            }
        }
        Ok(out)
    }

    /// Common difference of the members, sorted ascending, when they form an
    /// arithmetic progression. Singletons answer 0, pairs their forced gap.
    pub fn is_arithmetic_progression(&self) -> Result<Option<u32>, SetError> {
        if self.is_empty() {
            return Err(SetError::EmptyOperand);
        }
        let members = self.members();
        if members.len() == 1 {
            return Ok(Some(0));
        }
        let d = members[1] - members[0];
        for pair in members.windows(2) {
            if pair[1] - pair[0] != d {
                return Ok(None);
            }
        }
        Ok(Some(d))
    }

    /// Evaluates every cardinality bound for the sumset of the two sets.
    pub fn check_bounds(&self, other: &ZnSet) -> Result<BoundsReport, SetError> {
        let sum = self.sumset(other)?;
        let n = self.modulus;
        let lower_integer = self.card() + other.card() - 1;
        let product = self.card() as u64 * other.card() as u64;
        Ok(BoundsReport {
            lower_integer,
            lower_safe: lower_integer.min(n),
            upper: (n as u64).min(product) as u32,
            actual: sum.card(),
            integer_lower_holds: sum.card() >= lower_integer,
        })
    }
}

impl fmt::Debug for ZnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZnSet(Z_{}, {})", self.modulus, self)
    }
}

/// Renders as a sorted brace list, e.g. `{0,2}`.
impl fmt::Display for ZnSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, member) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{member}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ZnSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ZnSetRepr {
            n: self.modulus,
            members: self.members(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ZnSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ZnSetRepr::deserialize(deserializer)?;
        ZnSet::new(repr.n, &repr.members).map_err(serde::de::Error::custom)
    }
}

/// Wire form: `{"n": modulus, "members": [sorted residues]}`.
#[derive(Serialize, Deserialize)]
struct ZnSetRepr {
    n: u32,
    members: Vec<u32>,
}

/// Cardinality bounds for one sumset, as claimed versus as observed.
///
/// `lower_integer` is the integer-sumset bound `|A|+|B|-1`, which modular
/// wraparound can defeat; `lower_safe` is its `min(n, ·)` guard, which for
/// prime moduli is the Cauchy–Davenport bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower_integer: u32,
    pub lower_safe: u32,
    pub upper: u32,
    pub actual: u32,
    pub integer_lower_holds: bool,
}

/// Bit mask with the low `n` bits set.
pub(crate) fn word_mask(n: u32) -> u64 {
    debug_assert!((1..=MAX_MODULUS).contains(&n));
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Rotates the low `n` bits of `bits` left by `k` positions (addition of `k`
/// mod `n` applied to every member).
fn rotate_within(bits: u64, k: u32, n: u32) -> u64 {
    debug_assert!(k < n);
    if k == 0 {
        bits
    } else {
        ((bits << k) | (bits >> (n - k))) & word_mask(n)
    }
}

/// Sumset on raw membership words: the union of `a` rotated by each member
/// of `b`. Fast path for the search engine; equals the naive double loop.
pub(crate) fn sumset_word(a: u64, b: u64, n: u32) -> u64 {
    let mut acc = 0u64;
    let mut rest = b;
    while rest != 0 {
        let k = rest.trailing_zeros();
        rest &= rest - 1;
        acc |= rotate_within(a, k, n);
    }
    acc
}

/// Modular difference set on a raw membership word: the union of `a`
/// rotated by the negation of each member, with 0 removed (differences of
/// equal members are skipped). Closed under negation mod n by symmetry.
pub(crate) fn diff_word(a: u64, n: u32) -> u64 {
    let mut acc = 0u64;
    let mut rest = a;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        acc |= rotate_within(a, (n - y) % n, n);
    }
    acc & !1
}
