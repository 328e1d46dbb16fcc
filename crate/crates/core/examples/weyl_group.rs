//! Enumerating a Weyl group by length with lex-minimal reduced words.
//!
//! cargo run --example weyl_group

use std::sync::Arc;

use schubert_flag::{CartanType, RootDatum, WeylGroup};

fn main() -> schubert_flag::Result<()> {
    let g2 = WeylGroup::new(Arc::new(RootDatum::new(CartanType::g2())));
    for k in 0..=g2.max_length() {
        let words: Vec<String> = g2.elements_of_length(k)?.elements().iter().map(|w| w.to_string()).collect();
        println!("G2 length {k}: {}", words.join(" "));
    }

    let f4 = WeylGroup::new(Arc::new(RootDatum::new(CartanType::f4())));
    println!("F4: |W| = {}, length counts {:?}", f4.order(), f4.length_counts());
    println!("F4 longest element: {}", f4.longest_element());

    // Words are evaluated, so any expression of an element gives the same element.
    let a = f4.parse_word("3234")?;
    let b = f4.parse_word("2324")?;
    let c = f4.parse_word("123321")?;
    println!("3234 -> {a}, 2324 -> {b}, 123321 -> {c}");
    Ok(())
}
