use std::fmt;
use std::str::FromStr;

use crate::error::StabilizerError;
use crate::graph::{bit, low_mask, MAX_VERTICES};

/// An n-qubit Pauli operator `i^phase * P_0 ⊗ ... ⊗ P_{n-1}`.
///
/// Qubit `q` carries X if only bit `q` of `x` is set, Z if only bit `q` of
/// `z` is set, and Y (the Hermitian Pauli Y, not XZ) if both are set. With
/// this convention the operator is Hermitian exactly when `phase` is even.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    n: usize,
    x: u64,
    z: u64,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        PauliOperator {
            n,
            x: 0,
            z: 0,
            phase: 0,
        }
    }

    /// Builds an operator from support masks. Bits at or above `n` are
    /// rejected.
    pub fn new(n: usize, x: u64, z: u64, phase: u8) -> Result<Self, StabilizerError> {
        if n > MAX_VERTICES || (x | z) & !low_mask(n) != 0 {
            return Err(StabilizerError::LengthMismatch(
                n,
                64 - (x | z).leading_zeros() as usize,
            ));
        }
        Ok(PauliOperator {
            n,
            x,
            z,
            phase: phase % 4,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    /// Exponent of `i` in front of the tensor product.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn is_hermitian(&self) -> bool {
        self.phase % 2 == 0
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// The single-qubit factor on qubit `q` as one of `I`, `X`, `Y`, `Z`.
    pub fn letter(&self, q: usize) -> char {
        match (self.x & bit(q) != 0, self.z & bit(q) != 0) {
            (false, false) => 'I',
            (true, false) => 'X',
            (true, true) => 'Y',
            (false, true) => 'Z',
        }
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    pub fn commutes_with(&self, other: &PauliOperator) -> bool {
        ((self.x & other.z).count_ones() + (self.z & other.x).count_ones()) % 2 == 0
    }

    /// `self * other`.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator, StabilizerError> {
        if self.n != other.n {
            return Err(StabilizerError::LengthMismatch(self.n, other.n));
        }
        // Rewrite each factor as i^(phase + #Y) X^x Z^z, multiply, and move
        // Z^z1 past X^x2 at a cost of (-1)^|z1 & x2|.
        let y1 = (self.x & self.z).count_ones();
        let y2 = (other.x & other.z).count_ones();
        let x = self.x ^ other.x;
        let z = self.z ^ other.z;
        let y3 = (x & z).count_ones();
        let xz =
            self.phase as u32 + y1 + other.phase as u32 + y2 + 2 * (self.z & other.x).count_ones();
        let phase = ((xz + 4 * 64 - y3) % 4) as u8;
        Ok(PauliOperator {
            n: self.n,
            x,
            z,
            phase,
        })
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "i", "-", "-i"][self.phase as usize];
        write!(f, "{prefix}")?;
        for q in 0..self.n {
            write!(f, "{}", self.letter(q))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl serde::Serialize for PauliOperator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for PauliOperator {
    type Err = StabilizerError;

    /// Accepts an optional sign prefix (`+`, `-`, `−`, `i`, `-i`) followed by
    /// letters from `IXYZ`.
    fn from_str(s: &str) -> Result<Self, StabilizerError> {
        let bad = || StabilizerError::BadPauliString(s.to_string());
        let t = s.trim();
        let (neg, t) = if let Some(r) = t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
            (true, r)
        } else {
            (false, t.strip_prefix('+').unwrap_or(t))
        };
        let (imag, t) = match t.strip_prefix('i') {
            Some(r) => (true, r),
            None => (false, t),
        };
        let phase = 2 * neg as u8 + imag as u8;
        if t.is_empty() || t.chars().count() > MAX_VERTICES {
            return Err(bad());
        }
        let (mut x, mut z) = (0u64, 0u64);
        for (q, c) in t.chars().enumerate() {
            match c {
                'I' => {}
                'X' => x |= bit(q),
                'Y' => {
                    x |= bit(q);
                    z |= bit(q);
                }
                'Z' => z |= bit(q),
                _ => return Err(bad()),
            }
        }
        Ok(PauliOperator {
            n: t.chars().count(),
            x,
            z,
            phase,
        })
    }
}
