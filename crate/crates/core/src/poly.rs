//! Exact multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] is stored as integer numerators over one shared positive
//! denominator, kept in lowest terms. All arithmetic is exact; the ring is
//! `Q[w1, .., wn]` with `n <= MAX_VARS`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Maximum number of variables (and hence the maximum supported rank).
pub const MAX_VARS: usize = 8;

/// Exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial([u8; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0; MAX_VARS];
        for (slot, &x) in e.iter_mut().zip(exps) {
            *slot = u8::try_from(x).expect("exponent overflow");
        }
        Monomial(e)
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        u32::from(self.0[i])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    #[inline]
    fn with_exp(mut self, i: usize, e: u32) -> Self {
        self.0[i] = u8::try_from(e).expect("exponent overflow");
        self
    }

    #[inline]
    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u8; MAX_VARS];
        for k in 0..MAX_VARS {
            e[k] = self.0[k]
                .checked_add(other.0[k])
                .expect("exponent overflow");
        }
        Monomial(e)
    }
}

/// An element of `Q[w1, .., wn]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
    denom: BigInt,
}

fn accumulate(acc: &mut HashMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
            denom: BigInt::one(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c.numer().clone());
            p.denom = c.denom().clone();
        }
        p
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(c.into()))
    }

    /// The variable `w_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::var(i), BigInt::one());
        p
    }

    pub fn monomial(nvars: usize, m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c.numer().clone());
            p.denom = c.denom().clone();
        }
        p
    }

    /// The linear form `sum_i coeffs[i] * w_{i+1}`.
    pub fn linear(coeffs: &[BigRational]) -> Self {
        let nvars = coeffs.len();
        let mut acc = HashMap::new();
        let denom = coeffs
            .iter()
            .fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut acc, Monomial::var(i), c.numer() * (&denom / c.denom()));
            }
        }
        Self::from_parts(nvars, acc, denom)
    }

    pub fn linear_int(coeffs: &[i64]) -> Self {
        let mut acc = HashMap::new();
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                accumulate(&mut acc, Monomial::var(i), BigInt::from(c));
            }
        }
        Self::from_parts(coeffs.len(), acc, BigInt::one())
    }

    /// Builds a polynomial from integer terms over `denom`, normalizing.
    pub fn from_integer_terms<I>(nvars: usize, terms: I, denom: BigInt) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut acc = HashMap::new();
        for (m, c) in terms {
            accumulate(&mut acc, m, c);
        }
        Self::from_parts(nvars, acc, denom)
    }

    fn from_parts(nvars: usize, acc: HashMap<Monomial, BigInt>, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        let terms: BTreeMap<_, _> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut p = Polynomial {
            nvars,
            terms,
            denom,
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        if self.terms.is_empty() {
            self.denom = BigInt::one();
            return;
        }
        if self.denom.is_negative() {
            self.denom = -std::mem::take(&mut self.denom);
            for c in self.terms.values_mut() {
                *c = -std::mem::take(c);
            }
        }
        if self.denom.is_one() {
            return;
        }
        let mut g = self.denom.clone();
        for c in self.terms.values() {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.denom /= &g;
            for c in self.terms.values_mut() {
                *c /= &g;
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Common denominator of all coefficients (positive, lowest terms).
    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    /// Terms as (monomial, exact coefficient), ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, BigRational)> + '_ {
        self.terms
            .iter()
            .map(move |(m, c)| (*m, BigRational::new(c.clone(), self.denom.clone())))
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms
            .get(m)
            .map(|c| BigRational::new(c.clone(), self.denom.clone()))
            .unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The value if this polynomial is a constant (zero included).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| BigRational::new(c.clone(), self.denom.clone()))
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let acc = self
            .terms
            .iter()
            .map(|(m, x)| (*m, x * c.numer()))
            .collect();
        Self::from_parts(self.nvars, acc, &self.denom * c.denom())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_vars(&self, other: &Polynomial) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials live in rings with different variable counts"
        );
    }

    fn add_scaled(&self, other: &Polynomial, sign: i32) -> Polynomial {
        self.check_vars(other);
        let denom = self.denom.lcm(&other.denom);
        let fa = &denom / &self.denom;
        let fb = &denom / &other.denom;
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() + other.terms.len());
        for (m, c) in &self.terms {
            accumulate(&mut acc, *m, c * &fa);
        }
        for (m, c) in &other.terms {
            let v = c * &fb;
            accumulate(&mut acc, *m, if sign < 0 { -v } else { v });
        }
        Self::from_parts(self.nvars, acc, denom)
    }

    /// Splits by the exponent of variable `i`: entry `m` holds the integer
    /// numerators (with `w_i` removed) multiplying `w_i^m`.
    fn split_by_var(&self, i: usize) -> Vec<Vec<(Monomial, BigInt)>> {
        let mut parts: Vec<Vec<(Monomial, BigInt)>> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(i) as usize;
            if parts.len() <= e {
                parts.resize_with(e + 1, Vec::new);
            }
            parts[e].push((m.with_exp(i, 0), c.clone()));
        }
        parts
    }

    /// Linear change of variables `w_j -> sum_k images[j][k] w_k`.
    pub fn substitute_linear(&self, images: &[Vec<i64>]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let moved: Vec<usize> = (0..self.nvars)
            .filter(|&j| images[j].iter().enumerate().any(|(k, &c)| c != i64::from(k == j)))
            .collect();
        if moved.is_empty() {
            return self.clone();
        }
        // Group terms by exponents of moved variables.
        let mut groups: BTreeMap<Vec<u32>, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u32> = moved.iter().map(|&j| m.exp(j)).collect();
            let mut rest = *m;
            for &j in &moved {
                rest = rest.with_exp(j, 0);
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        let linear: Vec<Polynomial> = moved.iter().map(|&j| Polynomial::linear_int(&images[j])).collect();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(self.nvars)]; moved.len()];
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (key, rest) in groups {
            let mut factor = Polynomial::one(self.nvars);
            for (slot, &e) in key.iter().enumerate() {
                while powers[slot].len() <= e as usize {
                    let next = powers[slot].last().unwrap() * &linear[slot];
                    powers[slot].push(next);
                }
                if e > 0 {
                    factor = &factor * &powers[slot][e as usize];
                }
            }
            // factor has denominator 1 (integer images).
            for (fm, fc) in &factor.terms {
                for (rm, rc) in &rest {
                    accumulate(&mut acc, fm.mul(rm), fc * rc);
                }
            }
        }
        Self::from_parts(self.nvars, acc, self.denom.clone())
    }

    /// Exact quotient by a nonzero homogeneous linear form.
    ///
    /// Eliminates the lowest-index variable `w_k` occurring in `ell` by
    /// synthetic division in `w_k`; any nonzero remainder is an error.
    pub fn exact_div_linear(&self, ell: &Polynomial) -> Result<Polynomial> {
        self.check_vars(ell);
        if ell.is_zero() || ell.degree() != Some(1) || !ell.is_homogeneous() {
            return Err(Error::Invalid(format!("divisor {ell} is not a nonzero linear form")));
        }
        let mut lin = vec![BigRational::zero(); self.nvars];
        for (m, c) in ell.terms() {
            let j = (0..self.nvars).find(|&j| m.exp(j) == 1).unwrap();
            lin[j] = c;
        }
        let k = lin.iter().position(|c| !c.is_zero()).unwrap();
        let lead = lin[k].clone();
        let mut rest_coeffs = lin.clone();
        rest_coeffs[k] = BigRational::zero();
        let rest = Polynomial::linear(&rest_coeffs);

        let parts = self.split_by_var(k);
        if parts.is_empty() {
            return Ok(Polynomial::zero(self.nvars));
        }
        let as_poly = |v: &Vec<(Monomial, BigInt)>| {
            Polynomial::from_integer_terms(self.nvars, v.iter().cloned(), self.denom.clone())
        };
        let mut g: Vec<Polynomial> = parts.iter().map(as_poly).collect();
        let top = g.len() - 1;
        let inv_lead = lead.recip();
        let mut q: Vec<Polynomial> = vec![Polynomial::zero(self.nvars); top.max(1)];
        // g = sum_m g_m w_k^m, ell = lead*w_k + rest; q = sum_m q_m w_k^m.
        for m in (1..=top).rev() {
            let qm = g[m].scale(&inv_lead);
            g[m - 1] = &g[m - 1] - &(&rest * &qm);
            q[m - 1] = qm;
        }
        if !g[0].is_zero() {
            return Err(Error::NotDivisible {
                divisor: ell.to_string(),
            });
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        let mut denom = BigInt::one();
        for qm in &q {
            denom = denom.lcm(&qm.denom);
        }
        for (m, qm) in q.iter().enumerate() {
            let f = &denom / &qm.denom;
            for (mono, c) in &qm.terms {
                let e = mono.exp(k) + m as u32;
                accumulate(&mut acc, mono.with_exp(k, e), c * &f);
            }
        }
        Ok(Self::from_parts(self.nvars, acc, denom))
    }

    /// `sum_m parts[m] * kernels[m]` where `parts` comes from
    /// [`Self::split_by_var`]; used for divided differences.
    pub(crate) fn combine_split(&self, var: usize, kernels: &mut dyn FnMut(usize) -> Polynomial) -> Polynomial {
        let parts = self.split_by_var(var);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, part) in parts.iter().enumerate() {
            if part.is_empty() {
                continue;
            }
            let kernel = kernels(m);
            debug_assert!(kernel.denom.is_one());
            for (km, kc) in &kernel.terms {
                for (pm, pc) in part {
                    accumulate(&mut acc, km.mul(pm), kc * pc);
                }
            }
        }
        Self::from_parts(self.nvars, acc, self.denom.clone())
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut total = BigRational::zero();
        for (m, c) in self.terms() {
            let mut v = c;
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        p
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * rhs.terms.len().min(64));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                accumulate(&mut acc, ma.mul(mb), ca * cb);
            }
        }
        Polynomial::from_parts(self.nvars, acc, &self.denom * &rhs.denom)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Descending lexicographic order, e.g. `2*w1^3 - 3*w1^2*w2 + w1*w2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let q = BigRational::new(c.clone(), self.denom.clone());
            let neg = q.is_negative();
            let a = q.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for i in 0..self.nvars {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(format!("w{}", i + 1)),
                    e => factors.push(format!("w{}^{}", i + 1, e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{a}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
