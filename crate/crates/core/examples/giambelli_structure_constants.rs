//! Giambelli polynomials and structure constants Z_u Z_v = sum a_{uv}^w Z_w.
//!
//! cargo run --release --example giambelli_structure_constants

use schubert_flag::{CartanType, SchubertCalculus, SchubertExpansion};

fn main() -> schubert_flag::Result<()> {
    let calc = SchubertCalculus::new(CartanType::g2());
    for w in calc.group().all_elements() {
        let p = calc.giambelli_poly(&w);
        assert_eq!(calc.expand(&p)?, SchubertExpansion::indicator(&w));
        println!("P_{w} = {p}");
    }
    let (u, v) = (calc.element("12")?, calc.element("21")?);
    println!("G2: Z_12 * Z_21 = {}", calc.structure_constants(&u, &v)?);

    let f4 = SchubertCalculus::new(CartanType::f4());
    let (u, v) = (f4.element("123")?, f4.element("234")?);
    println!("F4: Z_123 * Z_234 = {}", f4.structure_constants(&u, &v)?);
    Ok(())
}
