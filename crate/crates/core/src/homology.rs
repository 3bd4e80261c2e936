//! First homology `H = Z^{2g}` of the surface, in the basis
//! `[A_1], ..., [A_g], [B_1], ..., [B_g]`.
//!
//! The intersection form has `[A_i].[B_i] = +1`. This sign is the one for
//! which `d(xy) = d(x) + d(y) + [x].[y]` holds for the Morita d-function:
//! on the two-generator words, `d(alpha beta) = 1` and `d(alpha) = d(beta) = 0`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::endomorphism::Endo;
use crate::error::{Error, Result};
use crate::freegroup::{Surface, Word};

/// An element of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HVec(Vec<i64>);

impl HVec {
    pub fn zero(surface: Surface) -> Self {
        HVec(vec![0; surface.rank()])
    }

    pub fn from_entries(surface: Surface, entries: Vec<i64>) -> Self {
        assert_eq!(entries.len(), surface.rank(), "HVec length must be 2g");
        HVec(entries)
    }

    /// Basis vector for the `j`-th generator.
    pub fn basis(surface: Surface, j: usize) -> Self {
        let mut v = HVec::zero(surface);
        v.0[j] = 1;
        v
    }

    pub fn genus(&self) -> u32 {
        (self.0.len() / 2) as u32
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn scale(&self, c: i64) -> HVec {
        HVec(self.0.iter().map(|x| c * x).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    fn check(&self, other: &HVec) {
        assert_eq!(self.0.len(), other.0.len(), "HVec genus mismatch");
    }
}

impl Add for &HVec {
    type Output = HVec;
    fn add(self, rhs: &HVec) -> HVec {
        self.check(rhs);
        HVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &HVec {
    type Output = HVec;
    fn sub(self, rhs: &HVec) -> HVec {
        self.check(rhs);
        HVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &HVec {
    type Output = HVec;
    fn neg(self) -> HVec {
        self.scale(-1)
    }
}

impl fmt::Display for HVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Signed letter count, the abelianization `F -> H`.
pub fn abelianize(x: &Word) -> HVec {
    let surface = x.surface();
    let mut v = HVec::zero(surface);
    for l in x.letters() {
        v.0[l.gen.basis_index(surface)] += l.sign();
    }
    v
}

/// `x^T J y` with `J = [[0, I], [-I, 0]]`.
pub fn intersection(x: &HVec, y: &HVec) -> i64 {
    x.check(y);
    let g = x.0.len() / 2;
    (0..g).map(|i| x.0[i] * y.0[g + i] - x.0[g + i] * y.0[i]).sum()
}

/// Poincaré dual of a functional given by its values on the basis: the unique
/// `a` with `intersection(a, y) = lambda(y)`.
pub fn dual(surface: Surface, values_on_basis: &[i64]) -> HVec {
    let g = surface.genus() as usize;
    assert_eq!(values_on_basis.len(), 2 * g, "functional needs 2g values");
    let mut a = vec![0; 2 * g];
    for j in 0..g {
        a[j] = values_on_basis[g + j];
        a[g + j] = -values_on_basis[j];
    }
    HVec(a)
}

/// A square integer matrix acting on `H` by column vectors. Not every value
/// is symplectic; see [`SpMat::is_symplectic`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpMat {
    n: usize,
    data: Vec<i64>,
}

impl SpMat {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        SpMat { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_columns(columns: &[HVec]) -> Self {
        let n = columns.len();
        let mut data = vec![0; n * n];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.0.len(), n, "matrix must be square");
            for i in 0..n {
                data[i * n + j] = col.0[i];
            }
        }
        SpMat { n, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        SpMat { n, data }
    }

    /// The intersection form matrix `J`.
    pub fn form(surface: Surface) -> Self {
        let g = surface.genus() as usize;
        let n = 2 * g;
        let mut data = vec![0; n * n];
        for i in 0..g {
            data[i * n + g + i] = 1;
            data[(g + i) * n + i] = -1;
        }
        SpMat { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> SpMat {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.get(i, j);
            }
        }
        SpMat { n, data }
    }

    pub fn scale(&self, c: i64) -> SpMat {
        SpMat { n: self.n, data: self.data.iter().map(|x| c * x).collect() }
    }

    pub fn mul(&self, other: &SpMat) -> SpMat {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        SpMat { n, data }
    }

    pub fn apply(&self, v: &HVec) -> HVec {
        assert_eq!(self.n, v.0.len(), "dimension mismatch");
        HVec((0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * v.0[j]).sum()).collect())
    }

    /// `M^T J M == J`.
    pub fn is_symplectic(&self) -> bool {
        if self.n % 2 != 0 || self.n == 0 {
            return false;
        }
        let surface = match Surface::new((self.n / 2) as u32) {
            Ok(s) => s,
            Err(_) => return false,
        };
        let j = SpMat::form(surface);
        self.transpose().mul(&j).mul(self) == j
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        bareiss_det(self.n, self.data.iter().map(|&x| x as i128).collect())
    }

    /// Exact inverse through the adjugate. Fails unless `det = +-1`.
    pub fn inverse(&self) -> Result<SpMat> {
        let n = self.n;
        let det = self.determinant();
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular { det });
        }
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                // adj[j][i] = (-1)^(i+j) det(minor_ij)
                let minor: Vec<i128> = (0..n)
                    .filter(|&r| r != i)
                    .flat_map(|r| (0..n).filter(move |&c| c != j).map(move |c| (r, c)))
                    .map(|(r, c)| self.get(r, c) as i128)
                    .collect();
                let cof = bareiss_det(n - 1, minor) * if (i + j) % 2 == 0 { 1 } else { -1 };
                data[j * n + i] = i64::try_from(cof * det).expect("inverse entry overflows i64");
            }
        }
        Ok(SpMat { n, data })
    }
}

fn bareiss_det(n: usize, mut m: Vec<i128>) -> i128 {
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                return 0;
            };
            for c in 0..n {
                m.swap(k * n + c, p * n + c);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                m[i * n + j] = (m[i * n + j] * pivot - m[i * n + k] * m[k * n + j]) / prev;
            }
        }
        prev = pivot;
    }
    sign * m[n * n - 1]
}

impl fmt::Display for SpMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `rho(phi)`: the `j`-th column is the class of the image of the `j`-th
/// generator.
pub fn induced_matrix(phi: &Endo) -> SpMat {
    let columns: Vec<HVec> = phi.images().iter().map(abelianize).collect();
    SpMat::from_columns(&columns)
}
