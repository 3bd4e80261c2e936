//! Endomorphisms of `F` given by generator images, automorphisms certified
//! by an explicit inverse, and membership in `M_{g,1}` and `N`.
//!
//! Products follow the functional convention: `compose(outer, inner)` maps
//! `x` to `outer(inner(x))`, so in a product `phi_1 phi_2` the right factor
//! acts first.
//!
//! Automorphism-hood is only ever established by a supplied or constructed
//! inverse. A bare [`Endo`] that lands in `N` can still be fed to the cocycle
//! functions, but being in `N` with a symplectic `rho` does not imply that the
//! map is an automorphism of `F`; the results are then only meaningful if it
//! is one.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freegroup::{Generator, Surface, Word};
use crate::homology::induced_matrix;

/// A map `F -> F` given by the images of `A_1..A_g, B_1..B_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endo {
    surface: Surface,
    images: Vec<Word>,
}

impl Endo {
    pub fn new(surface: Surface, images: Vec<Word>) -> Result<Self> {
        if images.len() != surface.rank() {
            return Err(Error::ImageCount { expected: surface.rank(), found: images.len() });
        }
        if let Some(bad) = images.iter().find(|w| w.surface() != surface) {
            return Err(Error::GenusMismatch { expected: surface.genus(), found: bad.surface().genus() });
        }
        Ok(Endo { surface, images })
    }

    pub fn identity(surface: Surface) -> Self {
        let images = surface.generators().map(|g| surface.generator(g)).collect();
        Endo { surface, images }
    }

    /// Builds a map that fixes every generator except the listed ones.
    pub fn with_images(surface: Surface, changes: &[(Generator, Word)]) -> Result<Self> {
        let mut e = Endo::identity(surface);
        for (g, w) in changes {
            if w.surface() != surface {
                return Err(Error::GenusMismatch { expected: surface.genus(), found: w.surface().genus() });
            }
            e.images[g.basis_index(surface)] = w.clone();
        }
        Ok(e)
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    /// Images in basis order.
    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, gen: Generator) -> &Word {
        &self.images[gen.basis_index(self.surface)]
    }

    pub fn apply(&self, x: &Word) -> Word {
        assert_eq!(x.surface(), self.surface, "word and map have different genus");
        let mut out = self.surface.identity();
        for l in x.letters() {
            let img = &self.images[l.gen.basis_index(self.surface)];
            out = if l.inverted { out.multiply(&img.inverse()) } else { out.multiply(img) };
        }
        out
    }

    /// `outer o inner`.
    pub fn compose(outer: &Endo, inner: &Endo) -> Endo {
        assert_eq!(outer.surface, inner.surface, "maps have different genus");
        Endo { surface: outer.surface, images: inner.images.iter().map(|w| outer.apply(w)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.surface
            .generators()
            .zip(&self.images)
            .all(|(g, w)| w.len() == 1 && w.letters()[0].gen == g && !w.letters()[0].inverted)
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, w)) in self.surface.generators().zip(&self.images).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{g} -> {w}")?;
        }
        Ok(())
    }
}

/// An automorphism of `F` together with a verified inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Auto {
    forward: Endo,
    backward: Endo,
}

impl Auto {
    pub fn new(forward: Endo, backward: Endo) -> Result<Self> {
        if forward.surface != backward.surface {
            return Err(Error::GenusMismatch {
                expected: forward.surface.genus(),
                found: backward.surface.genus(),
            });
        }
        if !Endo::compose(&forward, &backward).is_identity() {
            return Err(Error::NotInverse("forward o backward is not the identity".into()));
        }
        if !Endo::compose(&backward, &forward).is_identity() {
            return Err(Error::NotInverse("backward o forward is not the identity".into()));
        }
        Ok(Auto { forward, backward })
    }

    pub fn identity(surface: Surface) -> Self {
        Auto { forward: Endo::identity(surface), backward: Endo::identity(surface) }
    }

    pub fn forward(&self) -> &Endo {
        &self.forward
    }

    pub fn backward(&self) -> &Endo {
        &self.backward
    }

    pub fn into_endo(self) -> Endo {
        self.forward
    }

    pub fn surface(&self) -> Surface {
        self.forward.surface
    }

    pub fn inverse(&self) -> Auto {
        Auto { forward: self.backward.clone(), backward: self.forward.clone() }
    }

    pub fn apply(&self, x: &Word) -> Word {
        self.forward.apply(x)
    }

    /// `outer o inner`; the inverse is `inner^-1 o outer^-1`.
    pub fn compose(outer: &Auto, inner: &Auto) -> Auto {
        Auto {
            forward: Endo::compose(&outer.forward, &inner.forward),
            backward: Endo::compose(&inner.backward, &outer.backward),
        }
    }
}

/// The inner automorphism `y -> x y x^-1`.
pub fn inner(x: &Word) -> Auto {
    let surface = x.surface();
    let x_inv = x.inverse();
    let forward = surface.generators().map(|g| surface.generator(g).conjugate_by(x)).collect();
    let backward = surface.generators().map(|g| surface.generator(g).conjugate_by(&x_inv)).collect();
    Auto { forward: Endo { surface, images: forward }, backward: Endo { surface, images: backward } }
}

/// `B_g B_{g-1} ... B_k`.
fn b_tail(surface: Surface, k: u32) -> Word {
    let letters = (k..=surface.genus()).rev().map(|l| surface.generator(Generator::b(l)));
    letters.fold(surface.identity(), |acc, b| acc.multiply(&b))
}

/// Jablow's involution: a lift to `Aut(F)` of a hyperelliptic involution,
///
/// ```text
/// A_k -> (prod_{l=k..g} [B_g...B_l A_l, B_l] B_l) A_k^-1 (prod_{l=k..g} B_l^-1)
/// B_k -> [B_g...B_k A_k, B_k^-1] B_k^-1
/// ```
///
/// It squares to the identity, which is checked on construction.
pub fn jablow(surface: Surface) -> Auto {
    let g = surface.genus();
    let a = |k| surface.generator(Generator::a(k));
    let b = |k| surface.generator(Generator::b(k));
    let e = |l: u32| {
        let head = b_tail(surface, l).multiply(&a(l));
        Word::commutator(&head, &b(l)).multiply(&b(l))
    };

    let mut images = Vec::with_capacity(surface.rank());
    for k in 1..=g {
        let mut w = surface.identity();
        for l in k..=g {
            w = w.multiply(&e(l));
        }
        w = w.multiply(&a(k).inverse());
        for l in k..=g {
            w = w.multiply(&b(l).inverse());
        }
        images.push(w);
    }
    for k in 1..=g {
        let head = b_tail(surface, k).multiply(&a(k));
        images.push(Word::commutator(&head, &b(k).inverse()).multiply(&b(k).inverse()));
    }

    let forward = Endo { surface, images };
    Auto::new(forward.clone(), forward).expect("Jablow's map must be an involution")
}

/// `x_B = (B_g ... B_1)^-1`; `inner(x_B) o jablow` fixes the surface word.
pub fn x_b(surface: Surface) -> Word {
    b_tail(surface, 1).inverse()
}

pub fn in_m_g1(phi: &Endo) -> bool {
    let zeta = phi.surface.zeta();
    phi.apply(&zeta) == zeta
}

/// Certificate that `phi(zeta) = u zeta u^-1`, i.e. `phi` lies in `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NWitness {
    element: Endo,
    conjugator: Word,
}

impl NWitness {
    /// Searches for a conjugator; fails with the cyclically reduced image of
    /// `zeta` when there is none.
    pub fn certify(phi: &Endo) -> Result<NWitness> {
        let zeta = phi.surface.zeta();
        let image = phi.apply(&zeta);
        match Word::conjugator(&image, &zeta) {
            Some(u) => Ok(NWitness { element: phi.clone(), conjugator: u }),
            None => Err(Error::NotInN { zeta_image: image.cyclic_reduce().0.to_string() }),
        }
    }

    /// Uses a caller-chosen conjugator after checking it.
    pub fn with_conjugator(phi: &Endo, u: Word) -> Result<NWitness> {
        let zeta = phi.surface.zeta();
        if phi.apply(&zeta) != zeta.conjugate_by(&u) {
            return Err(Error::BadWitness { conjugator: u.to_string() });
        }
        Ok(NWitness { element: phi.clone(), conjugator: u })
    }

    pub fn element(&self) -> &Endo {
        &self.element
    }

    pub fn conjugator(&self) -> &Word {
        &self.conjugator
    }

    pub fn surface(&self) -> Surface {
        self.element.surface
    }
}

pub fn in_n(phi: &Endo) -> Option<NWitness> {
    NWitness::certify(phi).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistVariant {
    /// `A_k -> A_k B_k`
    A,
    /// `B_k -> B_k A_k`
    B,
    /// A map mixing handles `k` and `k+1`.
    Bridge,
}

/// A named element of the test catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Twist {
    pub handle: u32,
    pub variant: TwistVariant,
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.variant {
            TwistVariant::A => "a",
            TwistVariant::B => "b",
            TwistVariant::Bridge => "bridge",
        };
        write!(f, "twist:{}:{v}", self.handle)
    }
}

impl std::str::FromStr for TwistVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(TwistVariant::A),
            "b" => Ok(TwistVariant::B),
            "bridge" => Ok(TwistVariant::Bridge),
            _ => Err(Error::UnknownBuiltin(format!("twist variant {s}"))),
        }
    }
}

/// Builds one catalog automorphism, verifying that it fixes `zeta` and acts
/// symplectically.
pub fn twist(surface: Surface, handle: u32, variant: TwistVariant) -> Result<Auto> {
    let name = Twist { handle, variant }.to_string();
    let fail = |reason: &str| Error::Catalog { name: name.clone(), reason: reason.to_string() };
    let last = if variant == TwistVariant::Bridge { surface.genus() - 1 } else { surface.genus() };
    if handle == 0 || handle > last {
        return Err(fail("handle index out of range"));
    }
    let k = handle;
    let w = |text: String| surface.word(&text);
    let (fwd, bwd): (Vec<(Generator, Word)>, Vec<(Generator, Word)>) = match variant {
        TwistVariant::A => (
            vec![(Generator::a(k), w(format!("A{k} B{k}"))?)],
            vec![(Generator::a(k), w(format!("A{k} b{k}"))?)],
        ),
        TwistVariant::B => (
            vec![(Generator::b(k), w(format!("B{k} A{k}"))?)],
            vec![(Generator::b(k), w(format!("B{k} a{k}"))?)],
        ),
        TwistVariant::Bridge => {
            let j = k + 1;
            (
                vec![
                    (Generator::a(k), w(format!("A{k} A{j}"))?),
                    (Generator::b(k), w(format!("a{j} B{k} A{j}"))?),
                    (Generator::a(j), w(format!("a{j} B{k} A{j} b{j}"))?),
                    (Generator::b(j), w(format!("B{j} A{j} b{j}"))?),
                ],
                vec![
                    (Generator::a(k), w(format!("A{k} b{k} A{j} b{j} a{j} B{k}"))?),
                    (Generator::b(k), w(format!("b{k} A{j} B{j} a{j} B{k} A{j} b{j} a{j} B{k}"))?),
                    (Generator::a(j), w(format!("b{k} A{j} B{j} a{j} B{k}"))?),
                    (Generator::b(j), w(format!("a{j} B{k}"))?),
                ],
            )
        }
    };
    let forward = Endo::with_images(surface, &fwd)?;
    let backward = Endo::with_images(surface, &bwd)?;
    let auto = Auto::new(forward, backward).map_err(|e| fail(&e.to_string()))?;
    if !in_m_g1(auto.forward()) {
        return Err(fail("does not fix zeta"));
    }
    if !induced_matrix(auto.forward()).is_symplectic() {
        return Err(fail("induced matrix is not symplectic"));
    }
    Ok(auto)
}

/// Every catalog entry for this genus: the `a` and `b` twists on each handle
/// and a bridge between each pair of adjacent handles. These are not a
/// generating set of `M_{g,1}`; they exist to produce nontrivial test elements.
pub fn twist_catalog(surface: Surface) -> Result<Vec<(Twist, Auto)>> {
    let g = surface.genus();
    let mut out = Vec::new();
    for handle in 1..=g {
        for variant in [TwistVariant::A, TwistVariant::B] {
            out.push((Twist { handle, variant }, twist(surface, handle, variant)?));
        }
    }
    for handle in 1..g {
        let variant = TwistVariant::Bridge;
        out.push((Twist { handle, variant }, twist(surface, handle, variant)?));
    }
    Ok(out)
}

/// Length cap for the random words fed to inner automorphisms.
const INNER_WORD_LEN: usize = 3;

/// Deterministic pseudorandom element of `N`: a product of `budget` factors,
/// each a catalog entry or its inverse, an inner automorphism of a short
/// random word, or Jablow's involution.
pub fn random_element(surface: Surface, budget: usize, seed: u64) -> Auto {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_element_with(surface, budget, &mut rng)
}

pub fn random_element_with<R: Rng + ?Sized>(surface: Surface, budget: usize, rng: &mut R) -> Auto {
    let catalog = twist_catalog(surface).expect("twist catalog failed verification");
    let mut acc = Auto::identity(surface);
    for _ in 0..budget {
        let factor = match rng.gen_range(0..8) {
            0..=4 => {
                let (_, t) = &catalog[rng.gen_range(0..catalog.len())];
                if rng.gen_bool(0.5) {
                    t.clone()
                } else {
                    t.inverse()
                }
            }
            5 | 6 => inner(&surface.random_word(rng, INNER_WORD_LEN)),
            _ => jablow(surface),
        };
        acc = Auto::compose(&factor, &acc);
    }
    acc
}
