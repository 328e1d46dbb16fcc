//! Types B and D: c_k = 2 Z_w and the recursion Delta_n(c_k) = 2 c_{k-1} of a smaller rank.
//!
//! cargo run --release --example orthogonal

use schubert_flag::presentations::{gamma_indices, gamma_word};
use schubert_flag::{verify_paper, CartanType, ReferenceTables, SchubertCalculus};

fn main() -> schubert_flag::Result<()> {
    let tables = ReferenceTables::builtin();
    let types: Vec<CartanType> = (2..=5).map(CartanType::b).chain((4..=5).map(CartanType::d)).collect::<Result<_, _>>()?;
    for ty in types {
        let calc = SchubertCalculus::new(ty);
        let parts: Vec<String> = gamma_indices(ty)
            .into_iter()
            .map(|k| {
                let e = calc.expand(&calc.datum().chern(k)).unwrap();
                format!("c{k} = {e} (Z_{})", gamma_word(ty, k).unwrap())
            })
            .collect();
        println!("{ty}: {}", parts.join("; "));
        let report = verify_paper(&calc, &tables);
        println!("   {} checks, {} failed", report.len(), report.failures().count());
    }
    Ok(())
}
