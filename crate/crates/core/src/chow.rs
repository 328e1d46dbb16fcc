//! Chow rings `A(G) = H*(G/B) / (degree-2 classes)`, computed one codimension
//! at a time from the Schubert basis.
//!
//! The codim-`k` piece of the ideal is spanned by `c(lambda) Z_w` with
//! `l(w) = k - 1` and `lambda` running over a basis of the degree-2 lattice:
//! all fundamental weights for the simply connected group, the `t_i` for
//! `SO(m)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::presentations::{Check, VerificationReport};
use crate::rootdata::{CartanType, Family};
use crate::schubert::{SchubertCalculus, SchubertExpansion};
use crate::snf::{smith_normal_form_left, IntegerMatrix, SmithForm};
use crate::weyl::WeylElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    SimplyConnected,
    SpecialOrthogonal,
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::SimplyConnected => "simply_connected",
            Variant::SpecialOrthogonal => "special_orthogonal",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::SimplyConnected => "spin",
            Variant::SpecialOrthogonal => "so",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "spin" | "sc" | "simply_connected" => Ok(Variant::SimplyConnected),
            "so" | "special_orthogonal" => Ok(Variant::SpecialOrthogonal),
            _ => Err(Error::Invalid(format!("unknown variant `{s}` (expected spin or so)"))),
        }
    }
}

fn check_variant(ty: CartanType, variant: Variant) -> Result<()> {
    if variant == Variant::SpecialOrthogonal && !matches!(ty.family(), Family::B | Family::D) {
        return Err(Error::UnsupportedVariant {
            family: ty.to_string(),
            variant: variant.to_string(),
        });
    }
    Ok(())
}

/// `SO(7)`, `Spin(10)`, `G2`, ...
pub fn group_name(ty: CartanType, variant: Variant) -> String {
    let n = ty.rank();
    let m = match ty.family() {
        Family::B => 2 * n + 1,
        Family::D => 2 * n,
        _ => return ty.to_string(),
    };
    match variant {
        Variant::SimplyConnected => format!("Spin({m})"),
        Variant::SpecialOrthogonal => format!("SO({m})"),
    }
}

/// Basis of the degree-2 lattice in omega coordinates.
pub fn degree2_lattice(calc: &SchubertCalculus, variant: Variant) -> Result<Vec<Vec<i64>>> {
    let datum = calc.datum();
    check_variant(datum.cartan_type(), variant)?;
    let l = datum.rank();
    Ok(match variant {
        Variant::SimplyConnected => (0..l)
            .map(|i| {
                let mut v = vec![0; l];
                v[i] = 1;
                v
            })
            .collect(),
        Variant::SpecialOrthogonal => datum
            .t_basis()
            .iter()
            .map(|t| t.weight.to_integral().expect("t-classes are integral in types B and D"))
            .collect(),
    })
}

fn column(stratum_pos: impl Fn(&WeylElement) -> usize, rows: usize, e: &SchubertExpansion) -> Vec<BigInt> {
    let mut col = vec![BigInt::zero(); rows];
    for (w, c) in e.terms() {
        col[stratum_pos(w)] = c.clone();
    }
    col
}

/// Columns are the codim-`k` expansions of `lambda * Z_w`, `l(w) = k - 1`,
/// ordered by `w` then by lattice basis vector. Rows follow the sorted stratum.
pub fn degree2_ideal_stratum(calc: &SchubertCalculus, variant: Variant, k: usize) -> Result<IntegerMatrix> {
    let lattice = degree2_lattice(calc, variant)?;
    build_stratum(calc, &lattice, k)
}

fn build_stratum(calc: &SchubertCalculus, lattice: &[Vec<i64>], k: usize) -> Result<IntegerMatrix> {
    let g = calc.group();
    let n = g.max_length();
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "codim",
            value: k as i64,
            min: 1,
            max: n as i64,
        });
    }
    let below = g.elements_of_length(k - 1)?;
    let here = g.elements_of_length(k)?;
    let pos = |w: &WeylElement| here.position(w).expect("element of the stratum");
    let mut cols = Vec::with_capacity(below.len() * lattice.len());
    for w in below.elements() {
        let z = SchubertExpansion::indicator(w);
        for lambda in lattice {
            cols.push(column(pos, here.len(), &calc.multiply_by_weight(lambda, &z)));
        }
    }
    Ok(IntegerMatrix::from_columns(here.len(), &cols))
}

/// Finitely generated abelian groups indexed by codimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAbelianGroup {
    /// `strata[k]`: invariant factors `> 1` in increasing divisibility, then a `0` per free summand.
    pub strata: Vec<Vec<BigInt>>,
}

impl GradedAbelianGroup {
    pub fn max_codim(&self) -> usize {
        self.strata.len().saturating_sub(1)
    }

    pub fn factors(&self, k: usize) -> &[BigInt] {
        self.strata.get(k).map_or(&[], Vec::as_slice)
    }

    /// Positive codimensions with a nonzero group.
    pub fn nontrivial(&self) -> BTreeMap<usize, Vec<BigInt>> {
        self.strata
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, f)| !f.is_empty())
            .map(|(k, f)| (k, f.clone()))
            .collect()
    }

    pub fn order(&self, k: usize) -> Option<BigInt> {
        let f = self.factors(k);
        if f.iter().any(Zero::is_zero) {
            None
        } else {
            Some(f.iter().product())
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.strata
                .iter()
                .enumerate()
                .map(|(k, f)| json!({"codim": k, "factors": f.iter().map(|d| d.to_string()).collect::<Vec<_>>()}))
                .collect(),
        )
    }
}

pub fn format_group(factors: &[BigInt]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    factors
        .iter()
        .map(|d| if d.is_zero() { "Z".to_string() } else { format!("Z/{d}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nontrivial()
            .iter()
            .map(|(k, g)| format!("{k}: {}", format_group(g)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Invariant factors of `Z/o_1 + Z/o_2 + ...` (an order `0` is a free summand).
pub fn invariant_factors(orders: &[u64]) -> Vec<BigInt> {
    let free = orders.iter().filter(|&&o| o == 0).count();
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &o in orders.iter().filter(|&&o| o > 1) {
        let mut m = o;
        let mut p = 2;
        while m > 1 {
            if p * p > m {
                p = m;
            }
            if m % p == 0 {
                let mut q = 1;
                while m % p == 0 {
                    m /= p;
                    q *= p;
                }
                by_prime.entry(p).or_default().push(q);
            }
            p += 1;
        }
    }
    let count = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![BigInt::one(); count];
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        for (j, q) in powers.iter().enumerate() {
            out[count - 1 - j] *= BigInt::from(*q);
        }
    }
    out.extend(std::iter::repeat_n(BigInt::zero(), free));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowGenerator {
    pub symbol: String,
    pub codim: usize,
    /// Word `u` of the Schubert class `Z_u` whose image is the generator.
    pub word: String,
    pub torsion: u64,
    pub exponent: u32,
}

/// `Z[X_i] / (m_i X_i, X_i^{p_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowPresentation {
    pub cartan_type: CartanType,
    pub variant: Variant,
    pub generators: Vec<ChowGenerator>,
}

/// `2^(floor(log2(a / i)) + 1)`.
fn two_power_exponent(a: usize, i: usize) -> u32 {
    let mut e = 0;
    while i << (e + 1) <= a {
        e += 1;
    }
    1 << (e + 1)
}

impl ChowPresentation {
    pub fn closed_form(ty: CartanType, variant: Variant) -> Result<Self> {
        check_variant(ty, variant)?;
        let n = ty.rank();
        let gen = |i: usize, word: String, torsion: u64, exponent: u32| ChowGenerator {
            symbol: format!("X{i}"),
            codim: i,
            word,
            torsion,
            exponent,
        };
        let digits = |r: std::ops::RangeInclusive<usize>| r.map(|j| j.to_string()).collect::<String>();
        let first = if variant == Variant::SpecialOrthogonal { 1 } else { 3 };
        let generators = match ty.family() {
            Family::B => {
                let top = 2 * n.div_ceil(2) - 1;
                (first..=top)
                    .step_by(2)
                    .map(|i| gen(i, digits(n - i + 1..=n), 2, two_power_exponent(n, i)))
                    .collect()
            }
            Family::D => {
                let top = 2 * (n / 2) - 1;
                (first..=top)
                    .step_by(2)
                    .map(|i| {
                        let word = if i == 1 { n.to_string() } else { format!("{}{n}", digits(n - i..=n - 2)) };
                        gen(i, word, 2, two_power_exponent(n - 1, i))
                    })
                    .collect()
            }
            Family::G2 => vec![gen(3, "121".into(), 2, 2)],
            Family::F4 => vec![gen(3, "123".into(), 2, 2), gen(4, "1234".into(), 3, 3)],
        };
        Ok(ChowPresentation {
            cartan_type: ty,
            variant,
            generators,
        })
    }

    /// Graded pieces of the presentation up to `max_codim`, by enumerating the
    /// surviving monomials: `prod X_i^{a_i}` with `a_i < p_i` contributes
    /// `Z / gcd{m_i : a_i > 0}`.
    pub fn monomial_oracle(&self, max_codim: usize) -> GradedAbelianGroup {
        let mut orders: Vec<Vec<u64>> = vec![Vec::new(); max_codim + 1];
        let mut exps = vec![0u32; self.generators.len()];
        loop {
            let codim: usize = exps.iter().zip(&self.generators).map(|(&a, g)| a as usize * g.codim).sum();
            if codim <= max_codim {
                let order = exps
                    .iter()
                    .zip(&self.generators)
                    .filter(|(&a, _)| a > 0)
                    .fold(0u64, |acc, (_, g)| acc.gcd(&g.torsion));
                orders[codim].push(order);
            }
            // Odometer over 0 <= a_i < p_i.
            let mut j = 0;
            loop {
                if j == exps.len() {
                    return GradedAbelianGroup {
                        strata: orders.iter().map(|o| invariant_factors(o)).collect(),
                    };
                }
                exps[j] += 1;
                if exps[j] < self.generators[j].exponent {
                    break;
                }
                exps[j] = 0;
                j += 1;
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": group_name(self.cartan_type, self.variant),
            "generators": self.generators.iter().map(|g| json!({
                "symbol": g.symbol,
                "codim": g.codim,
                "schubert_word": g.word,
                "torsion": g.torsion,
                "exponent": g.exponent,
            })).collect::<Vec<_>>(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for ChowPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("Z");
        }
        let syms: Vec<&str> = self.generators.iter().map(|g| g.symbol.as_str()).collect();
        let mut rels: Vec<String> = self.generators.iter().map(|g| format!("{}{}", g.torsion, g.symbol)).collect();
        rels.extend(self.generators.iter().map(|g| format!("{}^{}", g.symbol, g.exponent)));
        write!(f, "Z[{}]/({})", syms.join(", "), rels.join(", "))
    }
}

/// Default codimension bound: all of `G/B` for G2 and F4, otherwise
/// `2 max p_i i` capped at `N`.
pub fn default_max_codim(ty: CartanType, variant: Variant) -> Result<usize> {
    let n = ty.num_positive_roots();
    match ty.family() {
        Family::G2 | Family::F4 => Ok(n),
        _ => {
            let pres = ChowPresentation::closed_form(ty, variant)?;
            let m = pres.generators.iter().map(|g| g.exponent as usize * g.codim).max().unwrap_or(1);
            Ok((2 * m).min(n))
        }
    }
}

/// Quotient of the Schubert lattice by the degree-2 ideal, one codim at a time.
pub struct ChowRing {
    calc: Arc<SchubertCalculus>,
    variant: Variant,
    lattice: Vec<Vec<i64>>,
    strata: Vec<OnceLock<SmithForm>>,
}

impl ChowRing {
    pub fn new(calc: Arc<SchubertCalculus>, variant: Variant) -> Result<Self> {
        let lattice = degree2_lattice(&calc, variant)?;
        let n = calc.group().max_length();
        Ok(ChowRing {
            calc,
            variant,
            lattice,
            strata: (0..=n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn calculus(&self) -> &Arc<SchubertCalculus> {
        &self.calc
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn max_codim(&self) -> usize {
        self.strata.len() - 1
    }

    fn check_codim(&self, k: usize) -> Result<()> {
        if k > self.max_codim() {
            return Err(Error::OutOfRange {
                what: "codim",
                value: k as i64,
                min: 0,
                max: self.max_codim() as i64,
            });
        }
        Ok(())
    }

    /// Smith form of the codim-`k` ideal matrix (`k >= 1`).
    pub fn smith(&self, k: usize) -> Result<&SmithForm> {
        self.check_codim(k)?;
        if k == 0 {
            return Err(Error::OutOfRange {
                what: "codim",
                value: 0,
                min: 1,
                max: self.max_codim() as i64,
            });
        }
        if let Some(s) = self.strata[k].get() {
            return Ok(s);
        }
        let m = build_stratum(&self.calc, &self.lattice, k)?;
        Ok(self.strata[k].get_or_init(|| smith_normal_form_left(&m)))
    }

    /// Computes the strata `1..=max` on worker threads.
    pub fn precompute(&self, max: usize) -> Result<()> {
        self.check_codim(max)?;
        let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
        let ks: Vec<usize> = (1..=max).rev().collect();
        let next = std::sync::atomic::AtomicUsize::new(0);
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    let Some(&k) = ks.get(i) else { break };
                    let _ = self.smith(k);
                });
            }
        });
        Ok(())
    }

    /// Invariant factors of `A^k(G)`.
    pub fn group(&self, k: usize) -> Result<Vec<BigInt>> {
        if k == 0 {
            self.check_codim(0)?;
            return Ok(vec![BigInt::zero()]);
        }
        Ok(self.smith(k)?.cokernel_factors())
    }

    pub fn groups(&self, max_codim: usize) -> Result<GradedAbelianGroup> {
        self.precompute(max_codim.max(1).min(self.max_codim()))?;
        let strata = (0..=max_codim).map(|k| self.group(k)).collect::<Result<_>>()?;
        Ok(GradedAbelianGroup { strata })
    }

    fn vector(&self, e: &SchubertExpansion) -> Result<Vec<BigInt>> {
        let stratum = self.calc.group().elements_of_length(e.codim())?;
        Ok(column(|w| stratum.position(w).unwrap(), stratum.len(), e))
    }

    /// Order of the image of `e` in `A(G)`; `None` for infinite order.
    pub fn order(&self, e: &SchubertExpansion) -> Result<Option<BigInt>> {
        let k = e.codim();
        self.check_codim(k)?;
        if k == 0 {
            return Ok(if e.is_zero() { Some(BigInt::one()) } else { None });
        }
        Ok(self.smith(k)?.order_of(&self.vector(e)?))
    }

    /// Whether `e` lies in the degree-2 ideal.
    pub fn is_zero(&self, e: &SchubertExpansion) -> Result<bool> {
        if e.codim() > self.max_codim() {
            return Ok(true);
        }
        Ok(self.order(e)? == Some(BigInt::one()))
    }

    /// Coordinates of the image of `e`, one per nontrivial cyclic summand
    /// (reduced mod the torsion order). Equal images have equal coordinates.
    pub fn coordinates(&self, e: &SchubertExpansion) -> Result<Vec<BigInt>> {
        let k = e.codim();
        let s = self.smith(k)?;
        let z = s.u.mul_vec(&self.vector(e)?);
        let mut out = Vec::new();
        for (i, zi) in z.iter().enumerate() {
            match s.factors.get(i) {
                Some(d) if d.is_one() => {}
                Some(d) => out.push(zi.mod_floor(d)),
                None => out.push(zi.clone()),
            }
        }
        Ok(out)
    }

    /// Whether the images of `ys` (all of codim `k`) generate `A^k(G)`.
    pub fn generates(&self, k: usize, ys: &[SchubertExpansion]) -> Result<bool> {
        let s = self.smith(k)?;
        let rows = s.d.rows();
        let idx: Vec<usize> = (0..rows).filter(|&i| s.factors.get(i).is_none_or(|d| !d.is_one())).collect();
        if idx.is_empty() {
            return Ok(true);
        }
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for y in ys {
            let z = s.u.mul_vec(&self.vector(y)?);
            cols.push(idx.iter().map(|&i| z[i].clone()).collect());
        }
        for (r, &i) in idx.iter().enumerate() {
            if let Some(d) = s.factors.get(i) {
                let mut col = vec![BigInt::zero(); idx.len()];
                col[r] = d.clone();
                cols.push(col);
            }
        }
        let small = smith_normal_form_left(&IntegerMatrix::from_columns(idx.len(), &cols));
        Ok(small.rank() == idx.len() && small.factors.iter().all(One::is_one))
    }

    /// Schubert class of a presentation generator.
    pub fn generator_class(&self, g: &ChowGenerator) -> Result<SchubertExpansion> {
        Ok(SchubertExpansion::indicator(&self.calc.element(&g.word)?))
    }

    /// `x * c`; codimension-one factors go through Chevalley.
    pub fn multiply(&self, x: &SchubertExpansion, c: &SchubertExpansion) -> Result<SchubertExpansion> {
        if c.codim() == 1 && c.len() == 1 && x.codim() < self.max_codim() {
            let (w, a) = c.terms().next().unwrap();
            let lambda: Vec<i64> = (1..=self.calc.rank()).map(|i| i64::from(w.word()[0] as usize == i)).collect();
            return Ok(self.calc.multiply_by_weight(&lambda, x).scale(a));
        }
        self.calc.multiply(x, c)
    }
}

/// Additive structure of `A(G)` up to `max_codim` (`N` if `None`).
pub fn chow_groups(calc: Arc<SchubertCalculus>, variant: Variant, max_codim: Option<usize>) -> Result<GradedAbelianGroup> {
    let ring = ChowRing::new(calc, variant)?;
    let max = max_codim.unwrap_or(ring.max_codim());
    ring.check_codim(max)?;
    ring.groups(max)
}

/// Checks the closed-form presentation against the computed quotient.
pub fn verify_chow(calc: Arc<SchubertCalculus>, variant: Variant, max_codim: Option<usize>) -> Result<VerificationReport> {
    let ty = calc.datum().cartan_type();
    let pres = ChowPresentation::closed_form(ty, variant)?;
    let ring = ChowRing::new(calc, variant)?;
    let max = match max_codim {
        Some(m) => m,
        None => default_max_codim(ty, variant)?,
    };
    ring.check_codim(max)?;
    Ok(verify_with(&ring, &pres, max))
}

fn verify_with(ring: &ChowRing, pres: &ChowPresentation, max: usize) -> VerificationReport {
    let name = group_name(pres.cartan_type, pres.variant);
    let mut report = VerificationReport::default();
    let computed = match ring.groups(max) {
        Ok(g) => g,
        Err(e) => {
            report.push(Check::new(format!("A({name}) strata"), "computed", format!("error: {e}")));
            return report;
        }
    };
    let oracle = pres.monomial_oracle(max);
    for k in 1..=max {
        report.push(Check::new(
            format!("A^{k}({name})"),
            format_group(oracle.factors(k)),
            format_group(computed.factors(k)),
        ));
    }

    // Generator classes: their torsion orders and their exact nilpotency.
    let mut classes = Vec::new();
    for g in &pres.generators {
        let class = match ring.generator_class(g) {
            Ok(c) => c,
            Err(e) => {
                report.push(Check::new(format!("{name} {} class", g.symbol), g.word.clone(), format!("error: {e}")));
                continue;
            }
        };
        if g.codim <= max {
            let order = ring.order(&class).map(|o| o.map_or("infinite".to_string(), |o| o.to_string()));
            report.push(Check::new(
                format!("{name} order of {} = [Z_{}]", g.symbol, g.word),
                g.torsion,
                order.unwrap_or_else(|e| format!("error: {e}")),
            ));
        }
        let n = ring.max_codim();
        let mut power = class.clone();
        let mut e = 1u32;
        let got = loop {
            match ring.is_zero(&power) {
                Ok(true) => break e.to_string(),
                Ok(false) => {}
                Err(err) => break format!("error: {err}"),
            }
            if g.codim * (e as usize + 1) > max.min(n) && g.codim * (e as usize + 1) <= n {
                break format!("> {e} (bound {max})");
            }
            power = match ring.multiply(&power, &class) {
                Ok(p) => p,
                Err(err) => break format!("error: {err}"),
            };
            e += 1;
        };
        report.push(Check::new(format!("{name} nilpotency of {}", g.symbol), g.exponent, got));
        classes.push((g.clone(), class));
    }

    // Monomials in the generators span every stratum.
    let mut monomials: BTreeMap<Vec<u32>, SchubertExpansion> = BTreeMap::new();
    let identity = SchubertExpansion::indicator(&ring.calculus().group().identity());
    monomials.insert(vec![0; classes.len()], identity);
    let mut frontier = vec![vec![0u32; classes.len()]];
    while let Some(exps) = frontier.pop() {
        let base = monomials[&exps].clone();
        for (j, (g, class)) in classes.iter().enumerate() {
            if exps[j] + 1 >= g.exponent || base.codim() + g.codim > max {
                continue;
            }
            // Build each monomial from its lexicographically first parent only.
            if exps[j + 1..].iter().any(|&a| a > 0) {
                continue;
            }
            let mut next = exps.clone();
            next[j] += 1;
            match ring.multiply(&base, class) {
                Ok(p) => {
                    monomials.insert(next.clone(), p);
                    frontier.push(next);
                }
                Err(e) => report.push(Check::new(format!("{name} monomial {next:?}"), "product", format!("error: {e}"))),
            }
        }
    }
    for k in 1..=max {
        let ys: Vec<SchubertExpansion> = monomials.values().filter(|m| m.codim() == k).cloned().collect();
        let got = ring.generates(k, &ys).map(|b| if b { "generated" } else { "not generated" }.to_string());
        report.push(Check::new(
            format!("A^{k}({name}) spanned by monomials"),
            "generated",
            got.unwrap_or_else(|e| format!("error: {e}")),
        ));
    }
    report
}

/// Everything the `chow` subcommand prints.
pub fn chow_json(ty: CartanType, variant: Variant, groups: &GradedAbelianGroup, report: &VerificationReport) -> Result<Value> {
    let pres = ChowPresentation::closed_form(ty, variant)?;
    Ok(json!({
        "type": ty.to_string(),
        "variant": variant.name(),
        "group": group_name(ty, variant),
        "strata": groups.to_json(),
        "presentation": pres.to_json(),
        "checks": report.to_json()["checks"].clone(),
    }))
}
