//! Oracles shared by the integration tests.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use schubert_flag::{Monomial, Polynomial, SchubertCalculus, WeylElement};

/// `Delta_w f` computed over every reduced word of `w` at once: the value at `u`
/// is `Delta_i` of the value at `s_i u` for every left descent `i`, and all of
/// these must agree. Visits each element below `w` in the left weak order once.
pub fn delta_all_words(calc: &SchubertCalculus, w: &WeylElement, f: &Polynomial) -> Result<Polynomial, String> {
    let g = calc.group();
    let mut memo: HashMap<WeylElement, Polynomial> = HashMap::new();
    memo.insert(g.identity(), f.clone());
    let mut stack = vec![w.clone()];
    while let Some(u) = stack.pop() {
        if memo.contains_key(&u) {
            continue;
        }
        let lower: Vec<(usize, WeylElement)> = (1..=g.rank())
            .filter_map(|i| {
                let s = g.simple_reflection(i).unwrap();
                let v = g.compose(&s, &u);
                (v.length() + 1 == u.length()).then_some((i, v))
            })
            .collect();
        let missing: Vec<WeylElement> = lower.iter().filter(|(_, v)| !memo.contains_key(v)).map(|(_, v)| v.clone()).collect();
        if !missing.is_empty() {
            stack.push(u);
            stack.extend(missing);
            continue;
        }
        let mut value: Option<Polynomial> = None;
        for (i, v) in &lower {
            let d = calc.divided_difference(*i, &memo[v]).unwrap();
            match &value {
                None => value = Some(d),
                Some(x) if *x == d => {}
                Some(x) => return Err(format!("{u}: words through {i} give {d}, others {x}")),
            }
        }
        memo.insert(u, value.unwrap());
    }
    Ok(memo.remove(w).unwrap())
}

/// Homogeneous polynomial of degree `deg` with small integer coefficients.
pub fn poly_from(nvars: usize, deg: u32, seeds: &[(i64, Vec<u32>)]) -> Polynomial {
    let mut f = Polynomial::zero(nvars);
    for (c, raw) in seeds {
        // Turn `raw` into an exponent vector of total degree `deg`.
        let mut exps = vec![0u32; nvars];
        let mut left = deg;
        for (i, r) in raw.iter().take(nvars - 1).enumerate() {
            let e = if left == 0 { 0 } else { r % (left + 1) };
            exps[i] = e;
            left -= e;
        }
        exps[nvars - 1] = left;
        let m = Polynomial::monomial(nvars, Monomial::from_exponents(&exps), BigRational::from_integer(BigInt::from(*c)));
        f = &f + &m;
    }
    f
}
