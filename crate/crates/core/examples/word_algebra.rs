//! Reduced words, cyclic reduction and the conjugacy problem in the free
//! group of rank 2g.

use mcg_cocycles::{Surface, Word};

fn main() -> mcg_cocycles::Result<()> {
    let s = Surface::new(2)?;
    let x = s.word("A1 B1 b1 A2")?;
    let y = s.word("a2 B2")?;
    println!("x = {x}");
    println!("x y = {}", &x * &y);
    println!("[A1, B1] = {}", Word::commutator(&s.word("A1")?, &s.word("B1")?));
    println!("zeta = {}", s.zeta());

    let w = s.word("B1 A2 A1 b1")?;
    let (core, prefix) = w.cyclic_reduce();
    println!("{w}: core {core}, prefix {prefix}");

    let zeta = s.zeta();
    let pushed = zeta.conjugate_by(&s.word("A2 b1")?);
    match Word::conjugator(&pushed, &zeta) {
        Some(u) => println!("{pushed} = u zeta u^-1 with u = {u}"),
        None => println!("not conjugate"),
    }
    println!("A1 ~ B1? {}", Word::conjugator(&s.word("A1")?, &s.word("B1")?).is_some());
    Ok(())
}
