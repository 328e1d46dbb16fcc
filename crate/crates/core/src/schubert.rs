//! Divided differences, Schubert-basis expansion, Chevalley products and
//! Giambelli representatives.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rootdata::{CartanType, RootDatum};
use crate::weyl::{WeylElement, WeylGroup};

/// An integer combination of Schubert classes `Z_w` of one codimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertExpansion {
    codim: usize,
    coeffs: BTreeMap<WeylElement, BigInt>,
}

impl SchubertExpansion {
    pub fn zero(codim: usize) -> Self {
        SchubertExpansion {
            codim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn indicator(w: &WeylElement) -> Self {
        let mut e = Self::zero(w.length());
        e.coeffs.insert(w.clone(), BigInt::one());
        e
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &WeylElement) -> BigInt {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, w: &WeylElement, c: &BigInt) {
        assert_eq!(w.length(), self.codim, "Z_{} does not have codimension {}", w, self.codim);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-BigInt::one());
        out
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: &BigInt) {
        if other.is_zero() {
            return;
        }
        assert_eq!(self.codim, other.codim, "codimensions differ");
        for (w, a) in &other.coeffs {
            self.add_term(w, &(a * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.codim);
        out.add_assign_scaled(self, c);
        out
    }

    /// Exact division of every coefficient; fails on the first remainder.
    pub fn div_exact(&self, m: i64) -> Result<Self> {
        let mb = BigInt::from(m);
        let mut out = Self::zero(self.codim);
        for (w, c) in &self.coeffs {
            if !(c % &mb).is_zero() {
                return Err(Error::NotDivisibleByMultiplier {
                    multiplier: m,
                    word: w.word_string(),
                    coeff: c.to_string(),
                });
            }
            out.coeffs.insert(w.clone(), c / &mb);
        }
        Ok(out)
    }

    /// `(word, coeff)` pairs, words as digit strings.
    pub fn to_word_map(&self) -> BTreeMap<String, BigInt> {
        self.coeffs.iter().map(|(w, c)| (w.word_string(), c.clone())).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut terms: Vec<(String, &BigInt)> = self.coeffs.iter().map(|(w, c)| (w.word_string(), c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let terms: Vec<Value> = terms
            .into_iter()
            .map(|(w, c)| {
                json!({
                    "word": w,
                    "coeff": Value::Number(c.to_string().parse().expect("integer literal")),
                })
            })
            .collect();
        json!({ "codim": self.codim, "terms": terms })
    }

    /// Inverse of [`Self::to_json`]; words are evaluated in `group`.
    pub fn from_json(group: &WeylGroup, value: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Invalid(format!("malformed expansion JSON: {m}"));
        let codim = value
            .get("codim")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing codim"))? as usize;
        let mut out = Self::zero(codim);
        for t in value.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))? {
            let word = t.get("word").and_then(Value::as_str).ok_or_else(|| bad("term without word"))?;
            let coeff: BigInt = match t.get("coeff") {
                Some(Value::Number(n)) => n.to_string().parse().map_err(|_| bad("coefficient is not an integer"))?,
                _ => return Err(bad("term without coeff")),
            };
            let w = group.parse_word(word)?;
            if w.length() != codim {
                return Err(bad(&format!("Z_{word} has length {} but codim is {codim}", w.length())));
            }
            out.add_term(&w, &coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.coeffs.iter().enumerate() {
            let name = if w.is_identity() { "Z_e".to_string() } else { format!("Z_{}", w.word_string()) };
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        Ok(())
    }
}

/// Computation context for one Cartan type: caches the Weyl group strata,
/// divided-difference kernels and Giambelli polynomials.
#[derive(Debug)]
pub struct SchubertCalculus {
    group: Arc<WeylGroup>,
    /// Per simple index: `h_m = (u^m - v^m) / (u - v)` with `u = w_i`, `v = s_i(w_i)`.
    kernels: Vec<Mutex<Vec<Polynomial>>>,
    reflections: Vec<(Box<[i64]>, Vec<i64>)>,
    giambelli: RwLock<HashMap<WeylElement, Arc<Polynomial>>>,
}

impl SchubertCalculus {
    pub fn new(ty: CartanType) -> Self {
        Self::from_group(Arc::new(WeylGroup::new(Arc::new(RootDatum::new(ty)))))
    }

    pub fn from_group(group: Arc<WeylGroup>) -> Self {
        let l = group.rank();
        let datum = Arc::clone(group.datum());
        let reflections = group
            .reflection_matrices()
            .into_iter()
            .zip(datum.positive_roots())
            .map(|(m, b)| (m, datum.coroot_coords(b)))
            .collect();
        SchubertCalculus {
            group,
            kernels: (0..l).map(|_| Mutex::new(Vec::new())).collect(),
            reflections,
            giambelli: RwLock::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn datum(&self) -> &RootDatum {
        self.group.datum()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::OutOfRange {
                what: "simple index",
                value: i as i64,
                min: 1,
                max: self.rank() as i64,
            });
        }
        Ok(())
    }

    fn kernel(&self, i: usize, m: usize) -> Polynomial {
        let l = self.rank();
        let mut cache = self.kernels[i - 1].lock().unwrap();
        if cache.is_empty() {
            cache.push(Polynomial::zero(l));
            cache.push(Polynomial::one(l));
        }
        if cache.len() <= m {
            let u = Polynomial::var(l, i - 1);
            let alpha = Polynomial::linear_int(self.datum().simple_root_omega(i));
            let v = &u - &alpha;
            while cache.len() <= m {
                let k = cache.len() - 1;
                let next = &(&u * &cache[k]) + &v.pow(k as u32);
                cache.push(next);
            }
        }
        cache[m].clone()
    }

    /// `Delta_i(f) = (f - s_i f) / alpha_i`.
    ///
    /// Only `w_i` moves under `s_i`, so writing `f = sum_m G_m w_i^m` gives
    /// `Delta_i f = sum_m G_m h_m` with the integral kernels `h_m`.
    pub fn divided_difference(&self, i: usize, f: &Polynomial) -> Result<Polynomial> {
        self.check_index(i)?;
        Ok(f.combine_split(i - 1, &mut |m| self.kernel(i, m)))
    }

    /// The same operator via substitution and exact division.
    pub fn divided_difference_by_division(&self, i: usize, f: &Polynomial) -> Result<Polynomial> {
        self.check_index(i)?;
        let s = self.group.simple_reflection(i)?;
        let alpha = Polynomial::linear_int(self.datum().simple_root_omega(i));
        (f - &s.substitute(f)).exact_div_linear(&alpha)
    }

    /// `Delta_{i_1} .. Delta_{i_k} f` for the word `i_1 .. i_k` (need not be reduced).
    pub fn delta_word(&self, word: &[u8], f: &Polynomial) -> Result<Polynomial> {
        let mut g = f.clone();
        for &i in word.iter().rev() {
            if g.is_zero() {
                break;
            }
            g = self.divided_difference(i as usize, &g)?;
        }
        Ok(g)
    }

    /// `Delta_w f` along the stored reduced word of `w`.
    pub fn delta_w(&self, w: &WeylElement, f: &Polynomial) -> Result<Polynomial> {
        self.delta_word(w.word(), f)
    }

    /// All `Delta_w f` for `l(w) = deg f`, as exact rationals.
    pub fn expand_rational(&self, f: &Polynomial) -> Result<BTreeMap<WeylElement, BigRational>> {
        let k = match f.degree() {
            None => return Ok(BTreeMap::new()),
            Some(k) => k as usize,
        };
        if !f.is_homogeneous() {
            return Err(Error::Invalid(format!("cannot expand the inhomogeneous polynomial {f}")));
        }
        if k > self.group.max_length() {
            return Ok(BTreeMap::new());
        }
        let l = self.rank();
        let mut level: Vec<(WeylElement, Polynomial)> = vec![(self.group.identity(), f.clone())];
        for _ in 0..k {
            let mut next: HashMap<WeylElement, Polynomial> = HashMap::new();
            for (v, g) in &level {
                for i in 1..=l {
                    let Some(u) = self.group.left_ascent(i, v) else { continue };
                    if next.contains_key(&u) {
                        continue;
                    }
                    let h = self.divided_difference(i, g)?;
                    next.insert(u, h);
                }
            }
            level = next.into_iter().filter(|(_, g)| !g.is_zero()).collect();
            level.sort_by(|a, b| a.0.cmp(&b.0));
        }
        Ok(level
            .into_iter()
            .map(|(w, g)| (w, g.as_constant().expect("degree-0 result")))
            .collect())
    }

    /// `c(f) = sum_{l(w) = deg f} Delta_w(f) Z_w`.
    pub fn expand(&self, f: &Polynomial) -> Result<SchubertExpansion> {
        let codim = f.degree().unwrap_or(0) as usize;
        let mut out = SchubertExpansion::zero(codim);
        for (w, c) in self.expand_rational(f)? {
            if !c.is_integer() {
                return Err(Error::NonIntegralExpansion {
                    word: w.word_string(),
                    value: c.to_string(),
                });
            }
            out.add_term(&w, &c.to_integer());
        }
        Ok(out)
    }

    /// Chevalley formula: `Z_{s_alpha} Z_w = sum (beta^v | w_alpha) Z_{w s_beta}`
    /// over positive `beta` with `l(w s_beta) = l(w) + 1`.
    pub fn chevalley_product(&self, alpha: usize, w: &WeylElement) -> Result<SchubertExpansion> {
        self.check_index(alpha)?;
        let mut lambda = vec![0i64; self.rank()];
        lambda[alpha - 1] = 1;
        Ok(self.multiply_by_weight(&lambda, &SchubertExpansion::indicator(w)))
    }

    /// `c(lambda) * E` for an integral weight in omega coordinates.
    pub fn multiply_by_weight(&self, lambda: &[i64], e: &SchubertExpansion) -> SchubertExpansion {
        let k = e.codim();
        let mut out = SchubertExpansion::zero(k + 1);
        if k >= self.group.max_length() {
            return out;
        }
        let next = self.group.elements_of_length(k + 1).unwrap();
        for (w, a) in e.terms() {
            for (refl, coroot) in &self.reflections {
                let pairing: i64 = coroot.iter().zip(lambda).map(|(x, y)| x * y).sum();
                if pairing == 0 {
                    continue;
                }
                let ws = self.group.right_mul_action(w, refl);
                if let Some(u) = next.get_by_action(&ws) {
                    out.add_term(u, &(a * BigInt::from(pairing)));
                }
            }
        }
        out
    }

    /// `d / |W|` with `d` the product of the positive roots.
    pub fn top_polynomial(&self) -> Arc<Polynomial> {
        self.giambelli_poly(&self.group.longest_element())
    }

    fn compute_top(&self) -> Polynomial {
        let l = self.rank();
        let mut d = Polynomial::one(l);
        for b in self.datum().positive_roots() {
            d = &d * &Polynomial::linear_int(&b.omega_coords);
        }
        let order = BigInt::from(self.datum().cartan_type().weyl_group_order());
        d.scale(&BigRational::new(BigInt::one(), order))
    }

    /// Giambelli representative `Delta_{w^{-1} w_0}(d / |W|)`, memoized per element.
    pub fn giambelli_poly(&self, w: &WeylElement) -> Arc<Polynomial> {
        if let Some(p) = self.giambelli.read().unwrap().get(w) {
            return Arc::clone(p);
        }
        // Climb by smallest right ascents until a cached element (or w_0).
        let mut chain = vec![(w.clone(), 0usize)];
        let mut start: Option<Arc<Polynomial>> = None;
        loop {
            let (cur, _) = chain.last().unwrap().clone();
            if let Some(p) = self.giambelli.read().unwrap().get(&cur) {
                start = Some(Arc::clone(p));
                chain.pop();
                chain.push((cur, 0));
                break;
            }
            if cur.length() == self.group.max_length() {
                break;
            }
            let i = (1..=self.rank()).find(|&i| self.group.is_right_ascent(&cur, i)).unwrap();
            let up = self.group.right_ascent(&cur, i).unwrap();
            chain.last_mut().unwrap().1 = i;
            chain.push((up, 0));
        }
        let (top_el, _) = chain.pop().unwrap();
        let mut p = start.unwrap_or_else(|| Arc::new(self.compute_top()));
        self.giambelli.write().unwrap().insert(top_el, Arc::clone(&p));
        while let Some((el, i)) = chain.pop() {
            let q = self.divided_difference(i, &p).expect("simple index in range");
            p = Arc::new(q);
            self.giambelli.write().unwrap().insert(el, Arc::clone(&p));
        }
        p
    }

    /// `sum a_w P_w` for an expansion `sum a_w Z_w`.
    pub fn representative(&self, e: &SchubertExpansion) -> Polynomial {
        let mut acc = Polynomial::zero(self.rank());
        for (w, a) in e.terms() {
            let p = self.giambelli_poly(w);
            acc = &acc + &p.scale(&BigRational::from_integer(a.clone()));
        }
        acc
    }

    /// Product in the Schubert basis via Giambelli representatives.
    pub fn multiply(&self, a: &SchubertExpansion, b: &SchubertExpansion) -> Result<SchubertExpansion> {
        let codim = a.codim() + b.codim();
        if codim > self.group.max_length() {
            return Ok(SchubertExpansion::zero(codim));
        }
        if a.is_zero() || b.is_zero() {
            return Ok(SchubertExpansion::zero(codim));
        }
        let f = &self.representative(a) * &self.representative(b);
        let e = self.expand(&f)?;
        Ok(if e.is_zero() { SchubertExpansion::zero(codim) } else { e })
    }

    /// `a^e`, with `a^0 = Z_e`.
    pub fn power(&self, a: &SchubertExpansion, e: u32) -> Result<SchubertExpansion> {
        let mut acc = SchubertExpansion::indicator(&self.group.identity());
        for _ in 0..e {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// `Z_u Z_v = sum a_{u,v}^w Z_w`; a negative coefficient is reported as an error.
    pub fn structure_constants(&self, u: &WeylElement, v: &WeylElement) -> Result<SchubertExpansion> {
        let n = self.group.max_length();
        if u.length() + v.length() > n {
            return Err(Error::OutOfRange {
                what: "l(u) + l(v)",
                value: (u.length() + v.length()) as i64,
                min: 0,
                max: n as i64,
            });
        }
        let f = &*self.giambelli_poly(u) * &*self.giambelli_poly(v);
        let mut e = self.expand(&f)?;
        if e.is_zero() {
            e = SchubertExpansion::zero(u.length() + v.length());
        }
        if let Some((w, c)) = e.terms().find(|(_, c)| c.is_negative()) {
            return Err(Error::PositivityViolation {
                word: w.word_string(),
                value: c.to_string(),
            });
        }
        Ok(e)
    }

    /// Parses a digit word and returns its element.
    pub fn element(&self, word: &str) -> Result<WeylElement> {
        self.group.parse_word(word)
    }

    /// Builds an expansion from `(word, coeff)` pairs.
    pub fn expansion_from_words(&self, terms: &[(&str, i64)]) -> Result<SchubertExpansion> {
        let mut codim = None;
        let mut parsed = Vec::new();
        for &(w, c) in terms {
            let el = self.group.parse_word(w)?;
            match codim {
                None => codim = Some(el.length()),
                Some(k) if k != el.length() => {
                    return Err(Error::InvalidWord {
                        word: w.to_string(),
                        reason: format!("length {} differs from codimension {k}", el.length()),
                    })
                }
                _ => {}
            }
            parsed.push((el, BigInt::from(c)));
        }
        let mut e = SchubertExpansion::zero(codim.unwrap_or(0));
        for (el, c) in parsed {
            e.add_term(&el, &c);
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn calc(ty: CartanType) -> SchubertCalculus {
        SchubertCalculus::new(ty)
    }

    #[test]
    fn delta_of_fundamental_weights() {
        for ty in [CartanType::g2(), CartanType::f4(), CartanType::b(3).unwrap(), CartanType::d(4).unwrap()] {
            let s = calc(ty);
            let l = s.rank();
            for i in 1..=l {
                for j in 0..l {
                    let d = s.divided_difference(i, &Polynomial::var(l, j)).unwrap();
                    assert_eq!(d, Polynomial::from_int(l, i64::from(i - 1 == j)), "{ty} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_division() {
        let s = calc(CartanType::f4());
        let t = s.datum().t_class("t").unwrap().weight.to_polynomial();
        let f = &(&s.datum().chern(3) * &t) - &t.pow(4).scale(&BigRational::from_integer(5.into()));
        for i in 1..=4 {
            assert_eq!(s.divided_difference(i, &f).unwrap(), s.divided_difference_by_division(i, &f).unwrap());
        }
    }

    #[test]
    fn g2_chern_class_deltas() {
        let s = calc(CartanType::g2());
        let c3 = s.datum().chern(3);
        assert_eq!(s.delta_word(&[1, 2, 1], &c3).unwrap(), Polynomial::from_int(2, -2));
        assert!(s.delta_word(&[2, 1, 2], &c3).unwrap().is_zero());
        assert!(s.delta_word(&[1, 2, 1, 2], &c3).unwrap().is_zero());
    }

    #[test]
    fn expand_weight_gives_simple_class() {
        let s = calc(CartanType::f4());
        for i in 1..=4 {
            let e = s.expand(&Polynomial::var(4, i - 1)).unwrap();
            assert_eq!(e, SchubertExpansion::indicator(&s.group().simple_reflection(i).unwrap()));
        }
    }

    #[test]
    fn chevalley_from_identity() {
        let s = calc(CartanType::g2());
        let e = s.group().identity();
        for a in 1..=2 {
            assert_eq!(
                s.chevalley_product(a, &e).unwrap(),
                SchubertExpansion::indicator(&s.group().simple_reflection(a).unwrap())
            );
        }
    }

    #[test]
    fn g2_giambelli_round_trip() {
        let s = calc(CartanType::g2());
        for w in s.group().all_elements() {
            let p = s.giambelli_poly(&w);
            assert_eq!(s.expand(&p).unwrap(), SchubertExpansion::indicator(&w), "w = {w}");
        }
    }

    #[test]
    fn g2_square_of_z1() {
        // Z_1 Z_1 by Chevalley, against the Giambelli product.
        let s = calc(CartanType::g2());
        let z1 = s.element("1").unwrap();
        let chev = s.chevalley_product(1, &z1).unwrap();
        let giam = s.structure_constants(&z1, &z1).unwrap();
        assert_eq!(chev, giam);
        assert_eq!(chev.to_string(), "Z_21");
    }

    #[test]
    fn json_round_trip() {
        let s = calc(CartanType::f4());
        let e = s.expansion_from_words(&[("123", 2), ("234", -2), ("243", -4), ("343", 6)]).unwrap();
        let text = e.to_json().to_string();
        let back = SchubertExpansion::from_json(s.group(), &serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_json().to_string(), text);
    }

    #[test]
    fn non_integral_expansion_is_reported() {
        let s = calc(CartanType::g2());
        let f = Polynomial::var(2, 0).scale(&BigRational::new(1.into(), 2.into()));
        assert!(matches!(s.expand(&f), Err(Error::NonIntegralExpansion { .. })));
        assert_eq!(s.expand_rational(&f).unwrap().len(), 1);
    }
}
