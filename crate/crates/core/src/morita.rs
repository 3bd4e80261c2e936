//! Morita's d-function and twisted 1-cocycle.
//!
//! `d` is first defined on the free group `F(alpha, beta)` from the syllable
//! decomposition `x = alpha^e1 beta^d1 ... alpha^en beta^dn`, then on `F` by
//! summing over the projections `p_i` onto each handle. The cocycle
//! `f~(phi)` is the Poincaré dual of the homomorphism `x -> d(phi(x)) - d(x)`.
//!
//! [`morita_f`] evaluates the cocycle on the pointed mapping class of
//! `phi in N` rather than on `phi` itself. With a witness
//! `phi(zeta) = u zeta u^-1`, the map `phi_1 = inner(u^-1) o phi` fixes
//! `zeta`. Expanding `pi(phi) = [u] pi(phi_1)` with the cocycle rule, the
//! restriction `f = (2-2g) theta` on point-pushes, and `f~(inner x) = 2[x]`
//! gives
//!
//! ```text
//! f(pi(phi)) = f~(phi) - 2g rho(phi)^-1 [u].
//! ```

use std::fmt;

use crate::endomorphism::NWitness;
use crate::error::Result;
use crate::freegroup::{Kind, Word};
use crate::homology::{abelianize, dual, induced_matrix, HVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    Alpha,
    Beta,
}

/// `alpha^(+-1)` or `beta^(+-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairLetter {
    pub gen: Pair,
    pub exp: i8,
}

/// A reduced word in the free group on `alpha`, `beta`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwoGenWord(Vec<PairLetter>);

impl TwoGenWord {
    pub fn reduce<I: IntoIterator<Item = PairLetter>>(raw: I) -> Self {
        let mut out: Vec<PairLetter> = Vec::new();
        for l in raw {
            assert!(l.exp == 1 || l.exp == -1, "exponent must be +-1");
            if out.last().is_some_and(|t| t.gen == l.gen && t.exp == -l.exp) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        TwoGenWord(out)
    }

    /// Parses tokens `a`, `b`, `a^-1`, `b^-1`.
    pub fn parse(text: &str) -> Option<Self> {
        let letters = text
            .split_whitespace()
            .map(|t| match t {
                "a" => Some(PairLetter { gen: Pair::Alpha, exp: 1 }),
                "a^-1" => Some(PairLetter { gen: Pair::Alpha, exp: -1 }),
                "b" => Some(PairLetter { gen: Pair::Beta, exp: 1 }),
                "b^-1" => Some(PairLetter { gen: Pair::Beta, exp: -1 }),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(TwoGenWord::reduce(letters))
    }

    pub fn letters(&self) -> &[PairLetter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for TwoGenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let tokens: Vec<&str> = self
            .0
            .iter()
            .map(|l| match (l.gen, l.exp) {
                (Pair::Alpha, 1) => "a",
                (Pair::Alpha, _) => "a^-1",
                (Pair::Beta, 1) => "b",
                (Pair::Beta, _) => "b^-1",
            })
            .collect();
        write!(f, "{}", tokens.join(" "))
    }
}

/// One factor `alpha^alpha_exp beta^beta_exp`, exponents in `{-1, 0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Syllable {
    pub alpha: i8,
    pub beta: i8,
}

/// `p_i`: sends `A_i -> alpha`, `B_i -> beta` and every other generator to 1.
pub fn project(i: u32, x: &Word) -> TwoGenWord {
    TwoGenWord::reduce(x.letters().iter().filter(|l| l.gen.index == i).map(|l| PairLetter {
        gen: match l.gen.kind {
            Kind::A => Pair::Alpha,
            Kind::B => Pair::Beta,
        },
        exp: if l.inverted { -1 } else { 1 },
    }))
}

/// Greedy left-to-right decomposition: take one `alpha^(+-1)` if present
/// (else exponent 0), then one `beta^(+-1)` if it comes next (else 0).
pub fn syllables(x: &TwoGenWord) -> Vec<Syllable> {
    let letters = x.letters();
    let mut out = Vec::new();
    let mut i = 0;
    while i < letters.len() {
        let mut s = Syllable { alpha: 0, beta: 0 };
        if letters[i].gen == Pair::Alpha {
            s.alpha = letters[i].exp;
            i += 1;
        }
        if i < letters.len() && letters[i].gen == Pair::Beta {
            s.beta = letters[i].exp;
            i += 1;
        }
        out.push(s);
    }
    out
}

/// `d(x) = sum_k e_k sum_{l>=k} d_l - sum_k d_k sum_{l>k} e_l`.
pub fn d2(x: &TwoGenWord) -> i64 {
    let syl = syllables(x);
    let mut beta_from = 0i64; // sum_{l>=k} d_l
    let mut alpha_after = 0i64; // sum_{l>k} e_l
    let mut total = 0i64;
    for s in syl.iter().rev() {
        beta_from += s.beta as i64;
        total += s.alpha as i64 * beta_from - s.beta as i64 * alpha_after;
        alpha_after += s.alpha as i64;
    }
    total
}

/// `d` on `F`: the sum of `d2(p_i(x))` over the handles.
pub fn d(x: &Word) -> i64 {
    (1..=x.surface().genus()).map(|i| d2(&project(i, x))).sum()
}

/// `f~(phi, x) = d(phi(x)) - d(x)`.
pub fn f_tilde_at(phi: &NWitness, x: &Word) -> i64 {
    d(&phi.element().apply(x)) - d(x)
}

/// `f~(phi)` as an element of `H`: the dual of `y -> f~(phi, y)`, evaluated on
/// the basis generators.
pub fn f_tilde(phi: &NWitness) -> HVec {
    let surface = phi.surface();
    let values: Vec<i64> = surface.generators().map(|g| f_tilde_at(phi, &surface.generator(g))).collect();
    dual(surface, &values)
}

/// Morita's cocycle on the mapping class `pi(phi)`, descended through the
/// witness carried by `phi`.
pub fn morita_f(phi: &NWitness) -> Result<HVec> {
    let surface = phi.surface();
    let rho_inv = induced_matrix(phi.element()).inverse()?;
    let correction = rho_inv.apply(&abelianize(phi.conjugator())).scale(2 * surface.genus() as i64);
    Ok(&f_tilde(phi) - &correction)
}
