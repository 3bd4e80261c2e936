//! Randomized and fixed-vector property suites behind `mcg-cocycles verify`.
//!
//! Every property draws from its own ChaCha stream, derived from the seed,
//! the property name and the genus, so results do not depend on which
//! suites run or in which order.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::earle::{coboundary_a0, earle_psi, has_canonical_denominator, QVec};
use crate::endomorphism::{in_m_g1, inner, jablow, random_element_with, x_b, Auto, Endo, NWitness};
use crate::freegroup::{Generator, Letter, Surface, Word};
use crate::homology::{abelianize, induced_matrix, intersection, HVec, SpMat};
use crate::morita::{d, d2, f_tilde, f_tilde_at, morita_f, TwoGenWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Suite {
    Words,
    DFunction,
    CocycleN,
    Descent,
    Earle,
    #[value(name = "paper-vectors", alias = "reference-vectors")]
    ReferenceVectors,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Words => "words",
            Suite::DFunction => "d-function",
            Suite::CocycleN => "cocycle-n",
            Suite::Descent => "descent",
            Suite::Earle => "earle",
            Suite::ReferenceVectors => "paper-vectors",
            Suite::All => "all",
        }
    }

    const CONCRETE: [Suite; 6] = [
        Suite::Words,
        Suite::DFunction,
        Suite::CocycleN,
        Suite::Descent,
        Suite::Earle,
        Suite::ReferenceVectors,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub genera: Vec<u32>,
    pub samples: usize,
    pub seed: u64,
    /// Maximum length of random words.
    pub max_len: usize,
    /// Number of factors in random elements of `N`.
    pub budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { genera: (2..=5).collect(), samples: 200, seed: 0, max_len: 50, budget: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub property: &'static str,
    pub genus: u32,
    pub checked: usize,
    pub failures: usize,
    /// The first few failing inputs.
    pub counterexamples: Vec<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

const MAX_COUNTEREXAMPLES: usize = 3;

/// FNV-1a, used only to give each property its own RNG stream.
fn stream_id(name: &str, genus: u32) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes().chain(genus.to_le_bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

struct Runner<'a> {
    cfg: &'a Config,
    suite: &'static str,
    surface: Surface,
    results: Vec<PropertyResult>,
}

impl<'a> Runner<'a> {
    /// Runs `count` trials; a trial returns `Some(description)` on failure.
    fn check<F>(&mut self, property: &'static str, count: usize, mut trial: F)
    where
        F: FnMut(&mut ChaCha8Rng, Surface) -> Option<String>,
    {
        let mut rng = ChaCha8Rng::seed_from_u64(self.cfg.seed);
        rng.set_stream(stream_id(property, self.surface.genus()));
        let mut failures = 0;
        let mut counterexamples = Vec::new();
        for _ in 0..count {
            if let Some(msg) = trial(&mut rng, self.surface) {
                failures += 1;
                if counterexamples.len() < MAX_COUNTEREXAMPLES {
                    counterexamples.push(msg);
                }
            }
        }
        self.results.push(PropertyResult {
            suite: self.suite,
            property,
            genus: self.surface.genus(),
            checked: count,
            failures,
            counterexamples,
        });
    }
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Option<String> {
    bad.then(msg)
}

fn witness(phi: &Endo) -> NWitness {
    NWitness::certify(phi).expect("random elements lie in N")
}

fn rho_inv(phi: &Endo) -> SpMat {
    induced_matrix(phi).inverse().expect("automorphisms have unimodular rho")
}

/// Runs a suite over every genus in the configuration.
pub fn run(suite: Suite, cfg: &Config) -> Vec<PropertyResult> {
    if suite == Suite::All {
        return Suite::CONCRETE.iter().flat_map(|&s| run(s, cfg)).collect();
    }
    let mut results = Vec::new();
    for &g in &cfg.genera {
        let surface = Surface::new(g).expect("suite genera are validated by the caller");
        let mut r = Runner { cfg, suite: suite.name(), surface, results: Vec::new() };
        match suite {
            Suite::Words => words(&mut r),
            Suite::DFunction => d_function(&mut r),
            Suite::CocycleN => cocycle_n(&mut r),
            Suite::Descent => descent(&mut r),
            Suite::Earle => earle(&mut r),
            Suite::ReferenceVectors => reference_vectors(&mut r),
            Suite::All => unreachable!(),
        }
        results.extend(r.results);
    }
    results
}

fn words(r: &mut Runner) {
    let n = r.cfg.samples;
    let max_len = r.cfg.max_len;
    r.check("reduce-idempotent", n, |rng, s| {
        let len = rng.gen_range(0..=max_len);
        let raw: Vec<Letter> = (0..len)
            .map(|_| {
                Letter::new(Generator::from_basis_index(s, rng.gen_range(0..s.rank())), rng.gen_bool(0.5))
            })
            .collect();
        let once = Word::reduce(s, raw.iter().copied());
        let twice = Word::reduce(s, once.letters().iter().copied());
        let adjacent = once.letters().windows(2).any(|p| p[0].cancels(p[1]));
        fail_if(once != twice || adjacent, || format!("raw length {len}, reduced {once}"))
    });
    r.check("associativity", n, |rng, s| {
        let (x, y, z) =
            (s.random_word(rng, max_len), s.random_word(rng, max_len), s.random_word(rng, max_len));
        fail_if((&x * &y).multiply(&z) != x.multiply(&(&y * &z)), || format!("x={x} y={y} z={z}"))
    });
    r.check("identity", n, |rng, s| {
        let x = s.random_word(rng, max_len);
        let e = s.identity();
        fail_if(&e * &x != x || &x * &e != x, || format!("x={x}"))
    });
    r.check("inverse", n, |rng, s| {
        let x = s.random_word(rng, max_len);
        fail_if(!(&x * &x.inverse()).is_empty() || !(&x.inverse() * &x).is_empty(), || format!("x={x}"))
    });
    r.check("cyclic-reduce", n, |rng, s| {
        let x = s.random_word(rng, max_len);
        let (core, prefix) = x.cyclic_reduce();
        let rebuilt = core.conjugate_by(&prefix);
        fail_if(rebuilt != x || !core.is_cyclically_reduced(), || format!("x={x}"))
    });
    r.check("conjugator-complete", n, |rng, s| {
        let w = s.random_word(rng, max_len);
        let v = s.random_word(rng, max_len);
        let w1 = w.conjugate_by(&v);
        match Word::conjugator(&w1, &w) {
            Some(u) => fail_if(w.conjugate_by(&u) != w1, || format!("unsound u={u} for w={w} v={v}")),
            None => Some(format!("no witness for w={w} v={v}")),
        }
    });
    r.check("conjugator-sound", n, |rng, s| {
        let w1 = s.random_word(rng, 6);
        let w2 = s.random_word(rng, 6);
        match Word::conjugator(&w1, &w2) {
            Some(u) => fail_if(w2.conjugate_by(&u) != w1, || format!("u={u} w1={w1} w2={w2}")),
            None => None,
        }
    });
}

fn d_function(r: &mut Runner) {
    let n = r.cfg.samples;
    r.check("product-rule", n, |rng, s| {
        let x = s.random_word(rng, 50);
        let y = s.random_word(rng, 50);
        let lhs = d(&(&x * &y));
        let rhs = d(&x) + d(&y) + intersection(&abelianize(&x), &abelianize(&y));
        fail_if(lhs != rhs, || format!("x={x} y={y}: {lhs} != {rhs}"))
    });
    let max_len = r.cfg.max_len;
    r.check("inverse-negates", n, |rng, s| {
        let x = s.random_word(rng, max_len);
        fail_if(d(&x.inverse()) != -d(&x), || format!("x={x}"))
    });
}

fn cocycle_n(r: &mut Runner) {
    let n = r.cfg.samples;
    let budget = r.cfg.budget;
    let max_len = r.cfg.max_len;
    r.check("rho-symplectic", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        fail_if(!induced_matrix(phi.forward()).is_symplectic(), || phi.forward().to_string())
    });
    r.check("rho-functorial", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let psi = random_element_with(s, budget, rng);
        let lhs = induced_matrix(Auto::compose(&phi, &psi).forward());
        let rhs = induced_matrix(phi.forward()).mul(&induced_matrix(psi.forward()));
        fail_if(lhs != rhs, || format!("phi:\n{}\npsi:\n{}", phi.forward(), psi.forward()))
    });
    r.check("in-n-witness", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let zeta = s.zeta();
        match NWitness::certify(phi.forward()) {
            Ok(w) => {
                fail_if(phi.apply(&zeta) != zeta.conjugate_by(w.conjugator()), || phi.forward().to_string())
            }
            Err(e) => Some(e.to_string()),
        }
    });
    r.check("apply-homomorphism", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let x = s.random_word(rng, max_len);
        let y = s.random_word(rng, max_len);
        fail_if(phi.apply(&(&x * &y)) != &phi.apply(&x) * &phi.apply(&y), || format!("x={x} y={y}"))
    });
    r.check("compose-apply", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let psi = random_element_with(s, budget, rng);
        let x = s.random_word(rng, max_len);
        let lhs = Endo::compose(phi.forward(), psi.forward()).apply(&x);
        fail_if(lhs != phi.apply(&psi.apply(&x)), || format!("x={x}"))
    });
    r.check("f-tilde-additive", n, |rng, s| {
        let phi = witness(random_element_with(s, budget, rng).forward());
        let x = s.random_word(rng, max_len);
        let y = s.random_word(rng, max_len);
        let lhs = f_tilde_at(&phi, &(&x * &y));
        fail_if(lhs != f_tilde_at(&phi, &x) + f_tilde_at(&phi, &y), || format!("x={x} y={y}"))
    });
    r.check("f-tilde-cocycle", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let psi = random_element_with(s, budget, rng);
        let prod = witness(Auto::compose(&phi, &psi).forward());
        let lhs = f_tilde(&prod);
        let rhs = &rho_inv(psi.forward()).apply(&f_tilde(&witness(phi.forward())))
            + &f_tilde(&witness(psi.forward()));
        fail_if(lhs != rhs, || format!("{lhs} != {rhs}"))
    });
    r.check("f-tilde-inner", n, |rng, s| {
        let x = s.random_word(rng, max_len);
        let got = f_tilde(&witness(inner(&x).forward()));
        fail_if(got != abelianize(&x).scale(2), || format!("x={x}: {got}"))
    });
}

fn descent(r: &mut Runner) {
    let n = r.cfg.samples;
    let budget = r.cfg.budget;
    let max_len = r.cfg.max_len;
    r.check("morita-f-cocycle", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let psi = random_element_with(s, budget, rng);
        let f = |a: &Endo| morita_f(&witness(a)).expect("unimodular");
        let lhs = f(Auto::compose(&phi, &psi).forward());
        let rhs = &rho_inv(psi.forward()).apply(&f(phi.forward())) + &f(psi.forward());
        fail_if(lhs != rhs, || format!("{lhs} != {rhs}"))
    });
    r.check("morita-f-inner", n, |rng, s| {
        let x = s.random_word(rng, max_len);
        let got = morita_f(&witness(inner(&x).forward())).expect("unimodular");
        let expected = abelianize(&x).scale(2 - 2 * s.genus() as i64);
        fail_if(got != expected, || format!("x={x}: {got}"))
    });
    r.check("witness-independence", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let base = witness(phi.forward());
        let reference = morita_f(&base).expect("unimodular");
        let zeta = s.zeta();
        (-2..=2).find_map(|m| {
            let u = base.conjugator().multiply(&zeta.pow(m));
            let w = NWitness::with_conjugator(phi.forward(), u).expect("u zeta^m is a witness");
            let got = morita_f(&w).expect("unimodular");
            fail_if(got != reference, || format!("m={m}: {got} != {reference}"))
        })
    });
    r.check("agrees-on-m-g1", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let u = witness(phi.forward()).conjugator().clone();
        let lifted = Auto::compose(&inner(&u.inverse()), &phi);
        if !in_m_g1(lifted.forward()) {
            return Some(format!("inner(u^-1) o phi does not fix zeta, u={u}"));
        }
        let w = witness(lifted.forward());
        fail_if(morita_f(&w).expect("unimodular") != f_tilde(&w), || format!("u={u}"))
    });
    r.check("boundary-push-vanishes", 5, {
        let mut m = -3i64;
        move |_, s| {
            m += 1;
            let w = witness(inner(&s.zeta().pow(m)).forward());
            let got = morita_f(&w).expect("unimodular");
            fail_if(!got.is_zero(), || format!("m={m}: {got}"))
        }
    });
}

fn earle(r: &mut Runner) {
    let n = r.cfg.samples;
    let budget = r.cfg.budget;
    let max_len = r.cfg.max_len;
    r.check("psi-cocycle", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let psi = random_element_with(s, budget, rng);
        let e = |a: &Endo| earle_psi(&witness(a)).expect("unimodular");
        let lhs = e(Auto::compose(&phi, &psi).forward());
        let rhs =
            &crate::earle::apply_rational(&rho_inv(psi.forward()), &e(phi.forward())) + &e(psi.forward());
        fail_if(lhs != rhs, || format!("{lhs} != {rhs}"))
    });
    r.check("psi-inner", n, |rng, s| {
        let x = s.random_word(rng, max_len);
        let got = earle_psi(&witness(inner(&x).forward())).expect("unimodular");
        fail_if(got != QVec::from(&abelianize(&x)), || format!("x={x}: {got}"))
    });
    r.check("psi-denominator", n, |rng, s| {
        let phi = random_element_with(s, budget, rng);
        let got = earle_psi(&witness(phi.forward())).expect("unimodular");
        fail_if(!has_canonical_denominator(&got), || format!("{got}"))
    });
    r.check("psi-minus-coboundary", n, |rng, s| {
        let phi = witness(random_element_with(s, budget, rng).forward());
        let psi = earle_psi(&phi).expect("unimodular");
        let scale = BigRational::new(One::one(), s.euler_abs().into());
        let f = QVec::from(&morita_f(&phi).expect("unimodular")).scale(&scale);
        let residue = &(&psi + &f) - &coboundary_a0(&phi).expect("unimodular");
        fail_if(!residue.is_zero(), || format!("{residue}"))
    });
}

/// The exact vectors for Jablow's involution and its `M_{g,1}` lift.
pub fn reference_values(s: Surface) -> ReferenceValues {
    let g = s.genus() as i64;
    let mut f_tilde_iota = vec![-2; g as usize];
    f_tilde_iota.extend((1..=g).map(|k| -4 - 2 * (g - k)));
    let mut f_tilde_lift = vec![-2; g as usize];
    f_tilde_lift.extend((1..=g).map(|k| -2 * g + 2 * (k - 1)));
    let over = |nums: Vec<i64>| QVec::from_ratios(&nums.into_iter().map(|p| (p, g - 1)).collect::<Vec<_>>());
    let psi_iota = over((0..g).map(|_| 1).chain((1..=g).map(|k| -k)).collect());
    let psi_lift = over((0..g).map(|_| 1).chain((1..=g).map(|k| g - 1 - k)).collect());
    ReferenceValues {
        f_tilde_iota: HVec::from_entries(s, f_tilde_iota),
        f_tilde_lift: HVec::from_entries(s, f_tilde_lift),
        psi_iota,
        psi_lift,
    }
}

pub struct ReferenceValues {
    pub f_tilde_iota: HVec,
    pub f_tilde_lift: HVec,
    pub psi_iota: QVec,
    pub psi_lift: QVec,
}

fn reference_vectors(r: &mut Runner) {
    r.check("d-unit-values", 1, |_, _| {
        let cases =
            [("b a b a^-1 b^-1 a^-1 b^-1", 4), ("b a b a^-1 b^-1 b^-1", 2), ("b a b^-1 a^-1 b^-1", -2)];
        cases.iter().find_map(|&(text, want)| {
            let got = d2(&TwoGenWord::parse(text).expect("valid literal"));
            fail_if(got != want, || format!("d({text}) = {got}, expected {want}"))
        })
    });
    r.check("jablow-involution", 1, |_, s| {
        let iota = jablow(s);
        fail_if(!Endo::compose(iota.forward(), iota.forward()).is_identity(), || "iota^2 != id".into())
    });
    r.check("jablow-zeta-conjugate", 1, |_, s| {
        let iota = jablow(s);
        let zeta = s.zeta();
        let expected_u = x_b(s).inverse();
        let found = match Word::conjugator(&iota.apply(&zeta), &zeta) {
            Some(u) => u,
            None => return Some("iota(zeta) not conjugate to zeta".into()),
        };
        let rest = expected_u.inverse().multiply(&found);
        let up_to_zeta = (-2..=2).any(|m| zeta.pow(m) == rest);
        fail_if(!up_to_zeta || in_m_g1(iota.forward()), || format!("found u={found}"))
    });
    r.check("jablow-rho", 1, |_, s| {
        let m = induced_matrix(jablow(s).forward());
        fail_if(m != SpMat::identity(s.rank()).scale(-1), || format!("{m}"))
    });
    r.check("lift-fixes-zeta", 1, |_, s| {
        let lifted = Auto::compose(&inner(&x_b(s)), &jablow(s));
        fail_if(!in_m_g1(lifted.forward()), || "x_B iota moves zeta".into())
    });
    r.check("f-tilde-jablow", 1, |_, s| {
        let got = f_tilde(&witness(jablow(s).forward()));
        let want = reference_values(s).f_tilde_iota;
        fail_if(got != want, || format!("{got} != {want}"))
    });
    r.check("f-tilde-lift", 1, |_, s| {
        let lifted = Auto::compose(&inner(&x_b(s)), &jablow(s));
        let got = f_tilde(&witness(lifted.forward()));
        let want = reference_values(s).f_tilde_lift;
        fail_if(got != want, || format!("{got} != {want}"))
    });
    r.check("psi-jablow", 1, |_, s| {
        let got = earle_psi(&witness(jablow(s).forward())).expect("unimodular");
        let want = reference_values(s).psi_iota;
        fail_if(got != want, || format!("{got} != {want}"))
    });
    r.check("psi-lift", 1, |_, s| {
        let lifted = Auto::compose(&inner(&x_b(s)), &jablow(s));
        let got = earle_psi(&witness(lifted.forward())).expect("unimodular");
        let want = reference_values(s).psi_lift;
        fail_if(got != want, || format!("{got} != {want}"))
    });
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub genera: Vec<u32>,
    pub samples: usize,
    pub seed: u64,
    pub passed: bool,
    pub results: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn new(suite: Suite, cfg: &Config, results: Vec<PropertyResult>) -> Self {
        VerifyReport {
            suite: suite.name(),
            genera: cfg.genera.clone(),
            samples: cfg.samples,
            seed: cfg.seed,
            passed: results.iter().all(PropertyResult::passed),
            results,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status}  {}/{} g={}  ({} checked, {} failed)",
                r.suite, r.property, r.genus, r.checked, r.failures
            );
            for c in &r.counterexamples {
                let _ = writeln!(out, "      counterexample: {}", c.replace('\n', "; "));
            }
        }
        let total = self.results.len();
        let failed = self.results.iter().filter(|r| !r.passed()).count();
        let _ = writeln!(out, "{} of {total} properties passed", total - failed);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
