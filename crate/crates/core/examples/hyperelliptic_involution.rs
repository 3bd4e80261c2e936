//! Jablow's involution: it squares to the identity, acts as -I on H, and
//! sends zeta to a conjugate by B_g ... B_1. Composing with the inner
//! automorphism of x_B = (B_g ... B_1)^-1 gives a lift fixing zeta.

use mcg_cocycles::endomorphism::x_b;
use mcg_cocycles::{in_m_g1, induced_matrix, inner, jablow, Auto, Endo, NWitness, SpMat, Surface};

fn main() -> mcg_cocycles::Result<()> {
    for g in 2..=4 {
        let s = Surface::new(g)?;
        let iota = jablow(s);
        println!("genus {g}");
        for (gen, image) in s.generators().zip(iota.forward().images()) {
            println!("  {gen} -> {image}");
        }
        let squared = Endo::compose(iota.forward(), iota.forward());
        println!("  iota^2 = id: {}", squared.is_identity());
        let minus_id = SpMat::identity(s.rank()).scale(-1);
        println!("  rho(iota) = -I: {}", induced_matrix(iota.forward()) == minus_id);
        println!("  conjugator: {}", NWitness::certify(iota.forward())?.conjugator());
        let lift = Auto::compose(&inner(&x_b(s)), &iota);
        println!("  x_B iota fixes zeta: {}", in_m_g1(lift.forward()));
    }
    Ok(())
}
