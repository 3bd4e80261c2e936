//! Morita's cocycle: the d-function on two-generator words, the cocycle f~
//! on N, and its descent f to the pointed mapping class group.

use mcg_cocycles::{d, d2, f_tilde, inner, jablow, morita_f, NWitness, Surface, TwoGenWord};

fn main() -> mcg_cocycles::Result<()> {
    for text in ["b a b a^-1 b^-1 a^-1 b^-1", "b a b a^-1 b^-1 b^-1", "b a b^-1 a^-1 b^-1"] {
        let w = TwoGenWord::parse(text).expect("valid word");
        println!("d({w}) = {}", d2(&w));
    }

    let s = Surface::new(3)?;
    let x = s.word("A1 B2 a3")?;
    println!("d({x}) = {}", d(&x));

    let iota = NWitness::certify(jablow(s).forward())?;
    println!("f~(iota) = {}", f_tilde(&iota));
    println!("f(iota)  = {} using u = {}", morita_f(&iota)?, iota.conjugator());

    let push = NWitness::certify(inner(&x).forward())?;
    println!("f~(inner x) = {}  (2 theta)", f_tilde(&push));
    println!("f(inner x)  = {}  ((2-2g) theta)", morita_f(&push)?);
    Ok(())
}
