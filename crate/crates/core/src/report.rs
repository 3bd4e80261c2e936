//! Cocycle evaluation reports, in text and structured (JSON) form.
//!
//! A structured report is self-describing: it carries the genus, the input
//! map, the conjugator witness used for the descent to `M_{g,*}`, and every
//! requested value. Key order is fixed.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use crate::earle::{earle_psi, QVec};
use crate::endomorphism::NWitness;
use crate::error::Result;
use crate::format::{AutomorphismFile, Loaded};
use crate::homology::{induced_matrix, HVec};
use crate::morita::{f_tilde, morita_f};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum)]
pub enum Selector {
    Rho,
    MoritaFTilde,
    MoritaF,
    EarlePsi,
}

impl Selector {
    pub const ALL: [Selector; 4] =
        [Selector::Rho, Selector::MoritaFTilde, Selector::MoritaF, Selector::EarlePsi];
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsiReport {
    /// Entries as `p/q` in lowest terms.
    pub values: Vec<String>,
    /// Entries times `denominator`.
    pub numerators: Vec<Value>,
    /// Always `2g - 2`.
    pub denominator: i64,
}

impl PsiReport {
    pub fn new(v: &QVec, denominator: i64) -> Self {
        let numerators = v
            .numerators_over(denominator)
            .expect("psi lies in H/(2g-2)")
            .into_iter()
            .map(|n| match i64::try_from(&n) {
                Ok(x) => Value::from(x),
                Err(_) => Value::from(n.to_string()),
            })
            .collect();
        PsiReport { values: v.lowest_terms(), numerators, denominator }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EvalReport {
    pub genus: u32,
    /// Whether the input came with a verified inverse.
    pub certified_automorphism: bool,
    pub input: AutomorphismFile,
    /// `u` with `phi(zeta) = u zeta u^-1`.
    pub conjugator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub morita_f_tilde: Option<HVec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub morita_f: Option<HVec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub earle_psi: Option<PsiReport>,
}

/// Evaluates the selected quantities. An empty selection means all of them.
pub fn evaluate(loaded: &Loaded, witness: &NWitness, selectors: &[Selector]) -> Result<EvalReport> {
    let want = |s| selectors.is_empty() || selectors.contains(&s);
    let surface = witness.surface();
    let rho = induced_matrix(witness.element());
    // Fail early on non-invertible rho even when only f~ was requested.
    rho.inverse()?;
    Ok(EvalReport {
        genus: surface.genus(),
        certified_automorphism: loaded.is_certified(),
        input: loaded.to_file(),
        conjugator: witness.conjugator().to_string(),
        rho: want(Selector::Rho).then(|| rho.rows()),
        morita_f_tilde: want(Selector::MoritaFTilde).then(|| f_tilde(witness)),
        morita_f: if want(Selector::MoritaF) { Some(morita_f(witness)?) } else { None },
        earle_psi: if want(Selector::EarlePsi) {
            Some(PsiReport::new(&earle_psi(witness)?, surface.euler_abs()))
        } else {
            None
        },
    })
}

impl EvalReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let kind = if self.certified_automorphism {
            "automorphism (inverse verified)"
        } else {
            "endomorphism (no inverse supplied)"
        };
        let _ = writeln!(out, "genus: {}", self.genus);
        let _ = writeln!(out, "input: {kind}");
        let _ = writeln!(out, "conjugator u: {}", self.conjugator);
        if let Some(rows) = &self.rho {
            let _ = writeln!(out, "rho:");
            for r in rows {
                let cells: Vec<String> = r.iter().map(|x| format!("{x:>3}")).collect();
                let _ = writeln!(out, "  [{}]", cells.join(" "));
            }
        }
        if let Some(v) = &self.morita_f_tilde {
            let _ = writeln!(out, "morita-f-tilde: {v}");
        }
        if let Some(v) = &self.morita_f {
            let _ = writeln!(out, "morita-f: {v}");
        }
        if let Some(p) = &self.earle_psi {
            let nums: Vec<String> = p.numerators.iter().map(|n| n.to_string().replace('"', "")).collect();
            let _ = writeln!(
                out,
                "earle-psi: ({}) = ({})/{}",
                p.values.join(", "),
                nums.join(", "),
                p.denominator
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endomorphism::jablow;
    use crate::freegroup::Surface;

    #[test]
    fn jablow_report() {
        let s = Surface::new(3).unwrap();
        let loaded = Loaded::Auto(jablow(s));
        let w = NWitness::certify(loaded.endo()).unwrap();
        let r = evaluate(&loaded, &w, &[Selector::EarlePsi]).unwrap();
        assert!(r.rho.is_none() && r.morita_f.is_none());
        let psi = r.earle_psi.as_ref().unwrap();
        assert_eq!(psi.values, ["1/2", "1/2", "1/2", "-1/2", "-1", "-3/2"]);
        assert_eq!(psi.denominator, 4);
        assert_eq!(psi.numerators, [2, 2, 2, -2, -4, -6].map(Value::from).to_vec());
        assert_eq!(r.conjugator, "B3 B2 B1");
        assert!(r.to_text().contains("earle-psi: (1/2, 1/2, 1/2, -1/2, -1, -3/2) = (2, 2, 2, -2, -4, -6)/4"));

        let json = r.to_json();
        let keys: Vec<usize> =
            ["\"genus\"", "\"certified_automorphism\"", "\"input\"", "\"conjugator\"", "\"earle_psi\""]
                .iter()
                .map(|k| json.find(k).unwrap())
                .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn all_selectors_by_default() {
        let s = Surface::new(2).unwrap();
        let loaded = Loaded::Auto(jablow(s));
        let w = NWitness::certify(loaded.endo()).unwrap();
        let r = evaluate(&loaded, &w, &[]).unwrap();
        assert_eq!(
            r.rho.unwrap(),
            vec![vec![-1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, -1, 0], vec![0, 0, 0, -1]]
        );
        assert_eq!(r.morita_f_tilde.unwrap().entries(), &[-2, -2, -6, -4]);
        assert_eq!(r.morita_f.unwrap().entries(), &[-2, -2, -2, 0]);
    }
}
