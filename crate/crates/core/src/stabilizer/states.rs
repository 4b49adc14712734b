use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::PauliOperator;
use crate::error::StabilizerError;
use crate::graph::{bit, MAX_VERTICES};

/// The six single-qubit stabilizer states.
///
/// Text labels: `0`, `1` (Z±), `+`, `-` (X±), `i`, `j` (Y±).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingleQubitState {
    ZPlus,
    ZMinus,
    XPlus,
    XMinus,
    YPlus,
    YMinus,
}

use SingleQubitState::*;

/// A power of `i`, stored mod 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Phase(pub u8);

impl Phase {
    pub const ONE: Phase = Phase(0);

    pub fn times(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    /// `Some(±1)` for real phases.
    pub fn sign(self) -> Option<i8> {
        match self.0 % 4 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ][(self.0 % 4) as usize]
    }
}

impl SingleQubitState {
    pub const ALL: [SingleQubitState; 6] = [ZPlus, ZMinus, XPlus, XMinus, YPlus, YMinus];

    pub fn label(self) -> char {
        match self {
            ZPlus => '0',
            ZMinus => '1',
            XPlus => '+',
            XMinus => '-',
            YPlus => 'i',
            YMinus => 'j',
        }
    }

    pub fn from_label(c: char) -> Option<Self> {
        Some(match c {
            '0' => ZPlus,
            '1' => ZMinus,
            '+' => XPlus,
            '-' | '−' => XMinus,
            'i' => YPlus,
            'j' => YMinus,
            _ => return None,
        })
    }

    /// Amplitudes `(⟨0|s⟩, ⟨1|s⟩)` in the computational basis.
    pub fn ket(self) -> [Complex64; 2] {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let c = |re: f64, im: f64| Complex64::new(re, im);
        match self {
            ZPlus => [c(1.0, 0.0), c(0.0, 0.0)],
            ZMinus => [c(0.0, 0.0), c(1.0, 0.0)],
            XPlus => [c(h, 0.0), c(h, 0.0)],
            XMinus => [c(h, 0.0), c(-h, 0.0)],
            YPlus => [c(h, 0.0), c(0.0, h)],
            YMinus => [c(h, 0.0), c(0.0, -h)],
        }
    }

    /// Bloch vector.
    pub fn bloch(self) -> [f64; 3] {
        match self {
            ZPlus => [0.0, 0.0, 1.0],
            ZMinus => [0.0, 0.0, -1.0],
            XPlus => [1.0, 0.0, 0.0],
            XMinus => [-1.0, 0.0, 0.0],
            YPlus => [0.0, 1.0, 0.0],
            YMinus => [0.0, -1.0, 0.0],
        }
    }

    /// `⟨self|other⟩`.
    pub fn inner(self, other: SingleQubitState) -> Complex64 {
        let a = self.ket();
        let b = other.ket();
        a[0].conj() * b[0] + a[1].conj() * b[1]
    }

    /// `P|self⟩ = i^k |s'⟩` for `P` one of `I`, `X`, `Y`, `Z`.
    pub fn apply_pauli(self, p: char) -> (Phase, SingleQubitState) {
        match (p, self) {
            ('I', s) => (Phase(0), s),
            ('X', ZPlus) => (Phase(0), ZMinus),
            ('X', ZMinus) => (Phase(0), ZPlus),
            ('X', XPlus) => (Phase(0), XPlus),
            ('X', XMinus) => (Phase(2), XMinus),
            ('X', YPlus) => (Phase(1), YMinus),
            ('X', YMinus) => (Phase(3), YPlus),
            ('Z', ZPlus) => (Phase(0), ZPlus),
            ('Z', ZMinus) => (Phase(2), ZMinus),
            ('Z', XPlus) => (Phase(0), XMinus),
            ('Z', XMinus) => (Phase(0), XPlus),
            ('Z', YPlus) => (Phase(0), YMinus),
            ('Z', YMinus) => (Phase(0), YPlus),
            ('Y', ZPlus) => (Phase(1), ZMinus),
            ('Y', ZMinus) => (Phase(3), ZPlus),
            ('Y', XPlus) => (Phase(3), XMinus),
            ('Y', XMinus) => (Phase(1), XPlus),
            ('Y', YPlus) => (Phase(0), YPlus),
            ('Y', YMinus) => (Phase(2), YMinus),
            _ => unreachable!("not a Pauli letter: {p}"),
        }
    }

    /// Image under `exp(-iπ/4 X) = (I - iX)/√2`, a square root of `-iX`,
    /// up to global phase.
    pub fn sqrt_minus_i_x(self) -> SingleQubitState {
        match self {
            ZPlus => YMinus,
            ZMinus => YPlus,
            YPlus => ZPlus,
            YMinus => ZMinus,
            s => s,
        }
    }

    /// Image under `exp(iπ/4 Z) = (I + iZ)/√2`, a square root of `iZ`, up to
    /// global phase.
    pub fn sqrt_i_z(self) -> SingleQubitState {
        match self {
            XPlus => YMinus,
            XMinus => YPlus,
            YPlus => XPlus,
            YMinus => XMinus,
            s => s,
        }
    }
}

/// A product of single-qubit stabilizer states, qubit 0 first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductStabilizerState {
    qubits: Vec<SingleQubitState>,
}

impl ProductStabilizerState {
    pub fn new(qubits: Vec<SingleQubitState>) -> Self {
        assert!(!qubits.is_empty() && qubits.len() <= MAX_VERTICES);
        ProductStabilizerState { qubits }
    }

    pub fn n(&self) -> usize {
        self.qubits.len()
    }

    pub fn qubits(&self) -> &[SingleQubitState] {
        &self.qubits
    }

    pub fn qubit(&self, q: usize) -> SingleQubitState {
        self.qubits[q]
    }

    /// `⟨self|other⟩`, one factor per qubit.
    pub fn inner(&self, other: &ProductStabilizerState) -> Complex64 {
        assert_eq!(self.n(), other.n());
        self.qubits
            .iter()
            .zip(&other.qubits)
            .map(|(a, b)| a.inner(*b))
            .product()
    }

    /// Amplitude `⟨z|self⟩` where bit `q` of `z` is qubit `q`.
    pub fn amplitude(&self, z: u64) -> Complex64 {
        self.qubits
            .iter()
            .enumerate()
            .map(|(q, s)| s.ket()[((z >> q) & 1) as usize])
            .product()
    }

    /// `p|self⟩ = i^k |self'⟩`.
    pub fn apply(
        &self,
        p: &PauliOperator,
    ) -> Result<(Phase, ProductStabilizerState), StabilizerError> {
        if p.n() != self.n() {
            return Err(StabilizerError::LengthMismatch(p.n(), self.n()));
        }
        let mut phase = Phase(p.phase());
        let mut qubits = self.qubits.clone();
        for (q, s) in qubits.iter_mut().enumerate() {
            if (p.x() | p.z()) & bit(q) == 0 {
                continue;
            }
            let (k, t) = s.apply_pauli(p.letter(q));
            phase = phase.times(k);
            *s = t;
        }
        Ok((phase, ProductStabilizerState { qubits }))
    }

    /// Whether `p|self⟩ = |self⟩`.
    pub fn is_stabilized_by(&self, p: &PauliOperator) -> bool {
        matches!(self.apply(p), Ok((Phase(0), ref s)) if s == self)
    }
}

/// `p|psi⟩ = i^k |psi'⟩`. For the operators and states arising from graph
/// stabilizers restricted to an independent set the phase is always real.
pub fn apply_generator(
    p: &PauliOperator,
    psi: &ProductStabilizerState,
) -> Result<(Phase, ProductStabilizerState), StabilizerError> {
    psi.apply(p)
}

impl fmt::Display for ProductStabilizerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.qubits {
            write!(f, "{}", s.label())?;
        }
        Ok(())
    }
}

impl fmt::Debug for ProductStabilizerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{self}⟩")
    }
}

impl FromStr for ProductStabilizerState {
    type Err = StabilizerError;

    fn from_str(s: &str) -> Result<Self, StabilizerError> {
        let t = s
            .trim()
            .trim_start_matches('|')
            .trim_end_matches('⟩')
            .trim_end_matches('>');
        let qubits: Option<Vec<_>> = t.chars().map(SingleQubitState::from_label).collect();
        match qubits {
            Some(q) if !q.is_empty() && q.len() <= MAX_VERTICES => {
                Ok(ProductStabilizerState { qubits: q })
            }
            _ => Err(StabilizerError::BadStateString(s.to_string())),
        }
    }
}

impl Serialize for ProductStabilizerState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ProductStabilizerState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> ProductStabilizerState {
        s.parse().unwrap()
    }

    #[test]
    fn pauli_table_matches_kets() {
        let mats: [(char, [[Complex64; 2]; 2]); 3] = {
            let o = Complex64::new(0.0, 0.0);
            let l = Complex64::new(1.0, 0.0);
            let i = Complex64::new(0.0, 1.0);
            [
                ('X', [[o, l], [l, o]]),
                ('Y', [[o, -i], [i, o]]),
                ('Z', [[l, o], [o, -l]]),
            ]
        };
        for (p, m) in mats {
            for s in SingleQubitState::ALL {
                let v = s.ket();
                let w = [
                    m[0][0] * v[0] + m[0][1] * v[1],
                    m[1][0] * v[0] + m[1][1] * v[1],
                ];
                let (k, t) = s.apply_pauli(p);
                let u = t.ket();
                for r in 0..2 {
                    assert!(
                        (w[r] - k.to_complex() * u[r]).norm() < 1e-12,
                        "{p} on {s:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn clifford_roots_match_matrices() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let c = |re: f64, im: f64| Complex64::new(re, im);
        let rx = [[c(h, 0.0), c(0.0, -h)], [c(0.0, -h), c(h, 0.0)]];
        let rz = [[c(h, h), c(0.0, 0.0)], [c(0.0, 0.0), c(h, -h)]];
        for (m, f) in [
            (
                rx,
                SingleQubitState::sqrt_minus_i_x as fn(SingleQubitState) -> SingleQubitState,
            ),
            (rz, SingleQubitState::sqrt_i_z),
        ] {
            for s in SingleQubitState::ALL {
                let v = s.ket();
                let w = [
                    m[0][0] * v[0] + m[0][1] * v[1],
                    m[1][0] * v[0] + m[1][1] * v[1],
                ];
                let t = f(s).ket();
                let ov = t[0].conj() * w[0] + t[1].conj() * w[1];
                assert!((ov.norm() - 1.0).abs() < 1e-12, "{s:?}");
            }
        }
        assert_eq!(ZPlus.sqrt_minus_i_x(), YMinus);
        assert_eq!(XPlus.sqrt_minus_i_x(), XPlus);
        assert_eq!(ZPlus.sqrt_i_z(), ZPlus);
    }

    #[test]
    fn text_form() {
        assert_eq!(st("++++00").to_string(), "++++00");
        assert_eq!(st("|+-ij01⟩").to_string(), "+-ij01");
        assert!("+x".parse::<ProductStabilizerState>().is_err());
    }

    #[test]
    fn two_stars_generator_actions() {
        let g5: PauliOperator = "IIZZXZ".parse().unwrap();
        let g6: PauliOperator = "ZZIIZX".parse().unwrap();
        assert_eq!(
            apply_generator(&g5, &st("--++01")).unwrap(),
            (Phase(2), st("----11"))
        );
        assert_eq!(
            apply_generator(&g6, &st("++++00")).unwrap(),
            (Phase(0), st("--++01"))
        );
        let id = PauliOperator::identity(6);
        assert_eq!(
            apply_generator(&id, &st("--++01")).unwrap(),
            (Phase(0), st("--++01"))
        );
    }

    #[test]
    fn inner_products() {
        assert!((st("+0").inner(&st("+0")).re - 1.0).abs() < 1e-12);
        assert!(st("+0").inner(&st("-1")).norm() < 1e-12);
        assert!((st("0").inner(&st("+")).norm_sqr() - 0.5).abs() < 1e-12);
    }
}
