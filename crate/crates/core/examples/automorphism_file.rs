//! Writing an automorphism file, reading it back and evaluating every
//! cocycle on it, as `mcg-cocycles eval --in` does.

use mcg_cocycles::endomorphism::{twist, TwistVariant};
use mcg_cocycles::format::AutomorphismFile;
use mcg_cocycles::report::evaluate;
use mcg_cocycles::{jablow, Auto, NWitness, Surface};

fn main() -> mcg_cocycles::Result<()> {
    let s = Surface::new(2)?;
    let phi = Auto::compose(&twist(s, 1, TwistVariant::Bridge)?, &jablow(s));
    let text = AutomorphismFile::from_auto(&phi).to_json();
    println!("{text}");

    let loaded = AutomorphismFile::from_json(&text)?.load()?;
    let witness = NWitness::certify(loaded.endo())?;
    let report = evaluate(&loaded, &witness, &[])?;
    print!("{}", report.to_text());
    Ok(())
}
