//! Earle's cocycle psi on Jablow's involution for g = 2..6, computed purely
//! from the d-function. Prints each value over the denominator 2g - 2.

use mcg_cocycles::{earle_psi, jablow, NWitness, Surface};

fn main() -> mcg_cocycles::Result<()> {
    for g in 2..=6 {
        let s = Surface::new(g)?;
        let psi = earle_psi(&NWitness::certify(jablow(s).forward())?)?;
        let nums: Vec<String> = psi
            .canonical_numerators()
            .expect("denominator divides 2g-2")
            .iter()
            .map(|n| n.to_string())
            .collect();
        println!("g={g}: psi(iota) = {psi} = ({})/{}", nums.join(", "), s.euler_abs());
    }
    Ok(())
}
