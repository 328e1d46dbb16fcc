//! Type G2: the generator gamma3, its divided differences and the relations.
//!
//! cargo run --example g2

use schubert_flag::{gamma_expansion, verify_paper, CartanType, ReferenceTables, SchubertCalculus};

fn main() -> schubert_flag::Result<()> {
    let calc = SchubertCalculus::new(CartanType::g2());
    let c3 = calc.datum().chern(3);
    for w in ["121", "212"] {
        println!("Delta_{w}(c3) = {}", calc.delta_w(&calc.element(w)?, &c3)?);
    }
    println!("gamma3 = {}", gamma_expansion(&calc, 3)?);
    let report = verify_paper(&calc, &ReferenceTables::builtin());
    print!("{}", report.to_table());
    Ok(())
}
