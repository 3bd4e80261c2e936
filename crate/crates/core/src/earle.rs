//! Earle's twisted 1-cocycle, computed combinatorially as
//! `psi = -f / (2g-2) + delta a_0` with
//! `a_0 = (0, ..., 0, 2, ..., 2) / (2g-2)` and
//! `delta a_0 (phi) = rho(phi)^-1 a_0 - a_0`.

use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::endomorphism::NWitness;
use crate::error::Result;
use crate::freegroup::Surface;
use crate::homology::{induced_matrix, HVec, SpMat};
use crate::morita::morita_f;

/// An exact rational vector of length `2g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QVec(Vec<BigRational>);

impl QVec {
    pub fn zero(surface: Surface) -> Self {
        QVec(vec![BigRational::zero(); surface.rank()])
    }

    pub fn from_ratios(entries: &[(i64, i64)]) -> Self {
        QVec(entries.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect())
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn scale(&self, c: &BigRational) -> QVec {
        QVec(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Numerators over the common denominator `den`, if every entry fits.
    pub fn numerators_over(&self, den: i64) -> Option<Vec<BigInt>> {
        let den = BigRational::from_integer(den.into());
        self.0
            .iter()
            .map(|x| {
                let y = x * &den;
                y.is_integer().then(|| y.to_integer())
            })
            .collect()
    }

    /// Over the canonical denominator `2g - 2`.
    pub fn canonical_numerators(&self) -> Option<Vec<BigInt>> {
        self.numerators_over(2 * (self.0.len() as i64 / 2) - 2)
    }

    /// Entries as `p/q` strings in lowest terms (`p` when `q = 1`).
    pub fn lowest_terms(&self) -> Vec<String> {
        self.0.iter().map(format_ratio).collect()
    }

    fn check(&self, other: &QVec) {
        assert_eq!(self.0.len(), other.0.len(), "QVec genus mismatch");
    }
}

fn format_ratio(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl From<&HVec> for QVec {
    fn from(v: &HVec) -> Self {
        QVec(v.entries().iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        self.check(rhs);
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        self.check(rhs);
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.lowest_terms().join(", "))
    }
}

impl Serialize for QVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.lowest_terms())
    }
}

/// `M v` with exact rationals.
pub fn apply_rational(m: &SpMat, v: &QVec) -> QVec {
    let n = m.dim();
    assert_eq!(n, v.0.len(), "dimension mismatch");
    QVec(
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| m.get(i, j) != 0)
                    .map(|j| &v.0[j] * BigRational::from_integer(m.get(i, j).into()))
                    .fold(BigRational::zero(), |acc, x| acc + x)
            })
            .collect(),
    )
}

pub fn a0(surface: Surface) -> QVec {
    let g = surface.genus() as usize;
    let b = BigRational::new(BigInt::one(), BigInt::from(surface.genus() - 1));
    QVec((0..2 * g).map(|j| if j < g { BigRational::zero() } else { b.clone() }).collect())
}

/// `delta a_0 (phi) = rho(phi)^-1 a_0 - a_0`.
pub fn coboundary_a0(phi: &NWitness) -> Result<QVec> {
    let a = a0(phi.surface());
    let rho_inv = induced_matrix(phi.element()).inverse()?;
    Ok(&apply_rational(&rho_inv, &a) - &a)
}

/// `psi(pi(phi)) = -f(pi(phi)) / (2g-2) + delta a_0 (phi)`.
pub fn earle_psi(phi: &NWitness) -> Result<QVec> {
    let surface = phi.surface();
    let f = QVec::from(&morita_f(phi)?);
    let c = -BigRational::new(BigInt::one(), BigInt::from(surface.euler_abs()));
    Ok(&f.scale(&c) + &coboundary_a0(phi)?)
}

/// True when `(2g-2) v` is integral.
pub fn has_canonical_denominator(v: &QVec) -> bool {
    v.canonical_numerators().is_some()
}

/// Absolute values of the denominators; handy in diagnostics.
pub fn max_denominator(v: &QVec) -> BigInt {
    v.0.iter().map(|x| x.denom().abs()).max().unwrap_or_else(BigInt::one)
}
