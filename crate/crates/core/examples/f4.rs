//! Type F4: gamma3, gamma4 and the full check of the reference tables.
//!
//! cargo run --release --example f4

use schubert_flag::{degree2_generator_images, gamma_expansion, verify_paper, CartanType, ReferenceTables, SchubertCalculus};

fn main() -> schubert_flag::Result<()> {
    let calc = SchubertCalculus::new(CartanType::f4());
    for (name, e) in degree2_generator_images(&calc)? {
        println!("{name} = {e}");
    }
    println!("gamma3 = {}", gamma_expansion(&calc, 3)?);
    println!("gamma4 = {}", gamma_expansion(&calc, 4)?);
    let report = verify_paper(&calc, &ReferenceTables::builtin());
    println!("{} checks, {} failed", report.len(), report.failures().count());
    Ok(())
}
