//! Abelianization, the intersection form and the induced action on H.

use mcg_cocycles::endomorphism::{twist, TwistVariant};
use mcg_cocycles::{abelianize, induced_matrix, intersection, Surface};

fn main() -> mcg_cocycles::Result<()> {
    let s = Surface::new(2)?;
    let x = s.word("A1 A1 b2 A2")?;
    let (a1, b1) = (abelianize(&s.word("A1")?), abelianize(&s.word("B1")?));
    println!("theta({x}) = {}", abelianize(&x));
    println!("A1 . B1 = {}", intersection(&a1, &b1));

    for (k, v) in [(1, TwistVariant::A), (1, TwistVariant::Bridge)] {
        let t = twist(s, k, v)?;
        let rho = induced_matrix(t.forward());
        println!("rho(twist:{k}:{v:?}) =\n{rho}");
        println!("symplectic: {}, det {}", rho.is_symplectic(), rho.determinant());
        println!("inverse =\n{}", rho.inverse()?);
    }
    Ok(())
}
