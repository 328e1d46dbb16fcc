//! Root systems of types B, D, G2 and F4 in Bourbaki numbering.
//!
//! Everything is expressed in the basis of fundamental weights: a weight is a
//! vector of coordinates on `w1, .., wl`, and a simple root `a_j` is the `j`-th
//! column of the Cartan matrix, whose entry `(i, j)` is `<a_j, a_i^v>`.
//! Long roots have squared length 2.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
    G2,
    F4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
        })
    }
}

/// A Cartan type with its rank. Construct through [`CartanType::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::G2 => rank == 2,
            Family::F4 => rank == 4,
        };
        if !ok || rank > MAX_VARS {
            return Err(Error::UnsupportedRank {
                family: family.to_string(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn b(n: usize) -> Result<Self> {
        Self::new(Family::B, n)
    }

    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::D, n)
    }

    pub fn g2() -> Self {
        CartanType {
            family: Family::G2,
            rank: 2,
        }
    }

    pub fn f4() -> Self {
        CartanType {
            family: Family::F4,
            rank: 4,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, i.e. the complex dimension of `G/B`.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::B => n * n,
            Family::D => n * (n - 1),
            Family::G2 => 6,
            Family::F4 => 24,
        }
    }

    pub fn weyl_group_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact: u64 = (1..=n).product();
        match self.family {
            Family::B => (1u64 << n) * fact,
            Family::D => (1u64 << (n - 1)) * fact,
            Family::G2 => 12,
            Family::F4 => 1152,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::B | Family::D => write!(f, "{}{}", self.family, self.rank),
            _ => write!(f, "{}", self.family),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `B3`, `D4`, `G2`, `F4` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        match up.as_str() {
            "G2" => return Ok(Self::g2()),
            "F4" => return Ok(Self::f4()),
            _ => {}
        }
        let (head, tail) = up.split_at(up.len().min(1));
        let family = match head {
            "B" => Family::B,
            "D" => Family::D,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = tail.parse().map_err(|_| Error::UnknownType(s.to_string()))?;
        Self::new(family, rank)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<BigRational>);

impl Weight {
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![BigRational::zero(); rank])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    /// Integer coordinates, if the weight lies in the weight lattice.
    pub fn to_integral(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    /// The weight as a linear polynomial in `w1, .., wl`.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// A root, stored both in simple-root and in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub simple_coords: Vec<i64>,
    pub omega_coords: Vec<i64>,
    pub length_sq: BigRational,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.simple_coords.iter().all(|&m| m >= 0)
    }

    pub fn weight(&self) -> Weight {
        Weight::from_ints(&self.omega_coords)
    }

    pub fn negate(&self) -> Root {
        Root {
            simple_coords: self.simple_coords.iter().map(|m| -m).collect(),
            omega_coords: self.omega_coords.iter().map(|m| -m).collect(),
            length_sq: self.length_sq.clone(),
        }
    }
}

/// A named degree-2 class (`t1`, `t2`, ..., and `t` for F4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TClass {
    pub name: String,
    pub weight: Weight,
}

#[derive(Debug)]
pub struct RootDatum {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    simple_length_sq: Vec<BigRational>,
    simple_roots: Vec<Root>,
    positive_roots: Vec<Root>,
    t_basis: Vec<TClass>,
    /// Integer multiple of the height functional on omega coordinates.
    height: Vec<i64>,
    /// omega coords -> (index into positive_roots, sign)
    root_index: HashMap<Vec<i64>, (usize, bool)>,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn cartan_matrix(ty: CartanType) -> Vec<Vec<i64>> {
    let l = ty.rank();
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ty.family() {
        Family::B => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            // a_{n-1} long, a_n short
            link(l - 2, l - 1, -1, -2);
        }
        Family::D => {
            for i in 0..l - 2 {
                link(i, i + 1, -1, -1);
            }
            link(l - 3, l - 1, -1, -1);
        }
        Family::G2 => link(0, 1, -3, -1),
        Family::F4 => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
    }
    a
}

fn simple_lengths(ty: CartanType) -> Vec<BigRational> {
    let l = ty.rank();
    match ty.family() {
        Family::B => (0..l).map(|i| if i + 1 == l { q(1, 1) } else { q(2, 1) }).collect(),
        Family::D => vec![q(2, 1); l],
        Family::G2 => vec![q(2, 3), q(2, 1)],
        Family::F4 => vec![q(2, 1), q(2, 1), q(1, 1), q(1, 1)],
    }
}

/// The classes `t_i` (and `t` for F4) in omega coordinates.
fn t_classes(ty: CartanType) -> Vec<(String, Vec<i64>)> {
    let n = ty.rank();
    let unit = |i: usize| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v
    };
    let diff = |i: usize| {
        // -w_{i-1} + w_i  (zero-based: -w[i-1] + w[i])
        let mut v = unit(i);
        v[i - 1] = -1;
        v
    };
    let named = |vs: Vec<Vec<i64>>| -> Vec<(String, Vec<i64>)> {
        vs.into_iter()
            .enumerate()
            .map(|(i, v)| (format!("t{}", i + 1), v))
            .collect()
    };
    match ty.family() {
        Family::B => {
            let mut vs = vec![unit(0)];
            for i in 1..n - 1 {
                vs.push(diff(i));
            }
            let mut last = vec![0i64; n];
            last[n - 2] = -1;
            last[n - 1] = 2;
            vs.push(last);
            named(vs)
        }
        Family::D => {
            let mut vs = vec![unit(0)];
            for i in 1..n - 2 {
                vs.push(diff(i));
            }
            let mut pen = vec![0i64; n];
            pen[n - 3] = -1;
            pen[n - 2] = 1;
            pen[n - 1] = 1;
            vs.push(pen);
            let mut last = vec![0i64; n];
            last[n - 2] = -1;
            last[n - 1] = 1;
            vs.push(last);
            named(vs)
        }
        Family::G2 => named(vec![vec![-1, 0], vec![-1, 1], vec![2, -1]]),
        Family::F4 => {
            let mut v = named(vec![
                vec![0, 0, 0, -1],
                vec![1, 0, 0, -1],
                vec![-1, 1, 0, -1],
                vec![0, -1, 2, -1],
            ]);
            v.push(("t".to_string(), vec![0, 0, 1, -2]));
            v
        }
    }
}

/// Inverse of a square integer matrix over the rationals.
fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular Cartan matrix");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

impl RootDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let l = cartan_type.rank();
        let cartan = cartan_matrix(cartan_type);
        let simple_length_sq = simple_lengths(cartan_type);

        // (a_i, a_j) = A_ij * |a_i|^2 / 2
        let form: Vec<Vec<BigRational>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| BigRational::from_integer(cartan[i][j].into()) * &simple_length_sq[i] / BigRational::from_integer(2.into()))
                    .collect()
            })
            .collect();
        let length_of = |m: &[i64]| -> BigRational {
            let mut s = BigRational::zero();
            for i in 0..l {
                for j in 0..l {
                    if m[i] != 0 && m[j] != 0 {
                        s += &form[i][j] * BigRational::from_integer((m[i] * m[j]).into());
                    }
                }
            }
            s
        };
        let omega_of = |m: &[i64]| -> Vec<i64> {
            (0..l).map(|i| (0..l).map(|j| cartan[i][j] * m[j]).sum()).collect()
        };
        let make_root = |m: Vec<i64>| Root {
            omega_coords: omega_of(&m),
            length_sq: length_of(&m),
            simple_coords: m,
        };

        let simple_roots: Vec<Root> = (0..l)
            .map(|i| {
                let mut m = vec![0i64; l];
                m[i] = 1;
                make_root(m)
            })
            .collect();

        // Reflection closure from the simple roots.
        let mut seen: std::collections::HashSet<Vec<i64>> = simple_roots.iter().map(|r| r.simple_coords.clone()).collect();
        let mut queue: Vec<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(m) = queue.pop() {
            for i in 0..l {
                let pairing: i64 = (0..l).map(|j| m[j] * cartan[i][j]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut next = m.clone();
                next[i] -= pairing;
                if next.iter().all(|&x| x >= 0) && seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut coords: Vec<Vec<i64>> = seen.into_iter().collect();
        coords.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let positive_roots: Vec<Root> = coords.into_iter().map(make_root).collect();

        let inv = rational_inverse(&cartan);
        let col_sums: Vec<BigRational> = (0..l)
            .map(|j| (0..l).map(|i| inv[i][j].clone()).fold(BigRational::zero(), |a, b| a + b))
            .collect();
        let scale = col_sums.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let height: Vec<i64> = col_sums
            .iter()
            .map(|c| (c * BigRational::from_integer(scale.clone())).to_integer().to_i64().unwrap())
            .collect();

        let mut root_index = HashMap::new();
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.omega_coords.clone(), (k, true));
            root_index.insert(r.omega_coords.iter().map(|x| -x).collect(), (k, false));
        }

        let t_basis = t_classes(cartan_type)
            .into_iter()
            .map(|(name, v)| TClass {
                name,
                weight: Weight::from_ints(&v),
            })
            .collect();

        RootDatum {
            cartan_type,
            cartan,
            simple_length_sq,
            simple_roots,
            positive_roots,
            t_basis,
            height,
            root_index,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// Entry `(i, j)` is `<a_j, a_i^v>` (zero-based indices).
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn simple_length_sq(&self) -> &[BigRational] {
        &self.simple_length_sq
    }

    /// `t1, .., tn` followed by `t` for F4.
    pub fn t_basis(&self) -> &[TClass] {
        &self.t_basis
    }

    /// Number of `t_i` classes (excluding the extra F4 class `t`).
    pub fn num_t(&self) -> usize {
        self.t_basis.iter().filter(|c| c.name != "t").count()
    }

    pub fn t_class(&self, name: &str) -> Option<&TClass> {
        self.t_basis.iter().find(|c| c.name == name)
    }

    /// Simple root `a_i` (1-based) in omega coordinates: column `i` of the Cartan matrix.
    pub fn simple_root_omega(&self, i: usize) -> &[i64] {
        &self.simple_roots[i - 1].omega_coords
    }

    /// `true` if the integral weight (assumed to be a root) is positive.
    pub fn is_positive_root_omega(&self, omega: &[i64]) -> bool {
        let h: i64 = omega.iter().zip(&self.height).map(|(a, b)| a * b).sum();
        debug_assert!(h != 0, "zero height: not a root");
        h > 0
    }

    /// Looks a root up by its omega coordinates.
    pub fn root_from_omega(&self, omega: &[i64]) -> Option<Root> {
        self.root_index.get(omega).map(|&(k, pos)| {
            let r = &self.positive_roots[k];
            if pos {
                r.clone()
            } else {
                r.negate()
            }
        })
    }

    /// Simple-root coordinates of an arbitrary weight.
    pub fn simple_coords_of(&self, lambda: &Weight) -> Vec<BigRational> {
        let inv = rational_inverse(&self.cartan);
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| &inv[i][j] * &lambda.0[j]).fold(BigRational::zero(), |a, b| a + b))
            .collect()
    }

    fn check_root(&self, beta: &Root) -> Result<()> {
        match self.root_from_omega(&beta.omega_coords) {
            Some(r) if r == *beta => Ok(()),
            _ => Err(Error::NotARoot(format!("{:?}", beta.simple_coords))),
        }
    }

    /// `(beta^v | lambda)` for a root `beta` and a weight `lambda`.
    pub fn coroot_pairing(&self, beta: &Root, lambda: &Weight) -> Result<BigRational> {
        self.check_root(beta)?;
        if lambda.0.len() != self.rank() {
            return Err(Error::Invalid("weight has the wrong number of coordinates".into()));
        }
        let mut s = BigRational::zero();
        for (i, &m) in beta.simple_coords.iter().enumerate() {
            if m != 0 {
                s += BigRational::from_integer(m.into()) * &self.simple_length_sq[i] / &beta.length_sq * &lambda.0[i];
            }
        }
        if lambda.to_integral().is_some() {
            assert!(s.is_integer(), "coroot pairing with a lattice weight must be integral");
        }
        Ok(s)
    }

    /// Integer coroot pairing `(beta^v | w_j)` for all `j`.
    pub(crate) fn coroot_coords(&self, beta: &Root) -> Vec<i64> {
        beta.simple_coords
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let v = BigRational::from_integer(m.into()) * &self.simple_length_sq[i] / &beta.length_sq;
                assert!(v.is_integer());
                v.to_integer().to_i64().unwrap()
            })
            .collect()
    }

    /// The class `t_i` (1-based) as a polynomial in the omega variables.
    pub fn t_polynomial(&self, i: usize) -> Polynomial {
        self.t_basis[i - 1].weight.to_polynomial()
    }

    /// Elementary symmetric polynomial `e_l(t1, .., tm)` in omega variables.
    pub fn elem_sym_t(&self, l: usize, m: usize) -> Result<Polynomial> {
        let n = self.num_t();
        if m < 1 || m > n {
            return Err(Error::OutOfRange {
                what: "m",
                value: m as i64,
                min: 1,
                max: n as i64,
            });
        }
        if l > m {
            return Err(Error::OutOfRange {
                what: "l",
                value: l as i64,
                min: 0,
                max: m as i64,
            });
        }
        Ok(self.elem_sym_t_ext(l as i64, m))
    }

    /// `e_l(t1, .., tm)` with the conventions `e_0 = 1` (also for `m = 0`)
    /// and `e_l = 0` for `l < 0` or `l > m`.
    pub(crate) fn elem_sym_t_ext(&self, l: i64, m: usize) -> Polynomial {
        let nv = self.rank();
        if l < 0 || l as usize > m {
            return Polynomial::zero(nv);
        }
        let mut e = vec![Polynomial::one(nv)];
        for i in 1..=m {
            let t = self.t_polynomial(i);
            e.push(Polynomial::zero(nv));
            for k in (1..e.len()).rev() {
                e[k] = &e[k] + &(&t * &e[k - 1]);
            }
        }
        e.swap_remove(l as usize)
    }

    /// Total Chern class coefficient convenience: `c_k = e_k(t1, .., tn)`.
    pub fn chern(&self, k: usize) -> Polynomial {
        self.elem_sym_t_ext(k as i64, self.num_t())
    }

    /// Expresses a weight in the `t`-basis `t1, .., tn` (rational coordinates).
    pub fn t_coords_of(&self, lambda: &Weight) -> Vec<BigRational> {
        let n = self.num_t();
        let l = self.rank();
        // Solve sum_i x_i t_i = lambda; for G2 the t's are dependent, use t1, t2.
        let basis: Vec<&Weight> = self.t_basis[..n].iter().map(|c| &c.weight).collect();
        let cols = if n > l { l } else { n };
        let mat: Vec<Vec<i64>> = (0..l)
            .map(|r| (0..cols).map(|c| basis[c].to_integral().unwrap()[r]).collect())
            .collect();
        let inv = rational_inverse(&mat);
        let mut x: Vec<BigRational> = (0..cols)
            .map(|i| (0..l).map(|j| &inv[i][j] * &lambda.0[j]).fold(BigRational::zero(), |a, b| a + b))
            .collect();
        x.resize(n, BigRational::zero());
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanType> {
        let mut v = vec![CartanType::g2(), CartanType::f4()];
        for n in 2..=6 {
            v.push(CartanType::b(n).unwrap());
        }
        for n in 4..=6 {
            v.push(CartanType::d(n).unwrap());
        }
        v
    }

    #[test]
    fn rank_constraints() {
        assert!(CartanType::b(1).is_err());
        assert!(CartanType::d(3).is_err());
        assert!(CartanType::new(Family::G2, 3).is_err());
        assert!(CartanType::new(Family::F4, 2).is_err());
        assert!(matches!(CartanType::b(9), Err(Error::UnsupportedRank { .. })));
        assert_eq!("b3".parse::<CartanType>().unwrap(), CartanType::b(3).unwrap());
        assert_eq!("F4".parse::<CartanType>().unwrap(), CartanType::f4());
        assert!("E6".parse::<CartanType>().is_err());
    }

    #[test]
    fn cartan_and_root_counts() {
        for ty in all_types() {
            let rd = RootDatum::new(ty);
            let a = rd.cartan_matrix();
            for i in 0..ty.rank() {
                assert_eq!(a[i][i], 2);
                for j in 0..ty.rank() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                    }
                }
                assert_eq!(rd.simple_roots()[i].omega_coords, (0..ty.rank()).map(|r| a[r][i]).collect::<Vec<_>>());
            }
            assert_eq!(rd.positive_roots().len(), ty.num_positive_roots(), "{ty}");
            for b in rd.positive_roots() {
                for j in 0..ty.rank() {
                    let mut e = vec![0; ty.rank()];
                    e[j] = 1;
                    let p = rd.coroot_pairing(b, &Weight::from_ints(&e)).unwrap();
                    assert!(p.is_integer() && p >= BigRational::zero());
                }
                assert!(rd.is_positive_root_omega(&b.omega_coords));
                assert!(!rd.is_positive_root_omega(&b.negate().omega_coords));
            }
        }
    }

    #[test]
    fn pairing_with_fundamental_weights_is_kronecker() {
        for ty in all_types() {
            let rd = RootDatum::new(ty);
            for (i, a) in rd.simple_roots().iter().enumerate() {
                for j in 0..ty.rank() {
                    let mut e = vec![0; ty.rank()];
                    e[j] = 1;
                    let p = rd.coroot_pairing(a, &Weight::from_ints(&e)).unwrap();
                    assert_eq!(p, BigRational::from_integer(i64::from(i == j).into()));
                }
                assert!(rd.coroot_pairing(a, &Weight::zero(ty.rank())).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn not_a_root() {
        let rd = RootDatum::new(CartanType::g2());
        let fake = Root {
            simple_coords: vec![1, 1],
            omega_coords: vec![5, 5],
            length_sq: q(2, 1),
        };
        assert!(matches!(rd.coroot_pairing(&fake, &Weight::zero(2)), Err(Error::NotARoot(_))));
    }

    #[test]
    fn t_basis_tables() {
        let b3 = RootDatum::new(CartanType::b(3).unwrap());
        assert_eq!(b3.t_basis()[2].weight, Weight::from_ints(&[0, -1, 2]));
        let g2 = RootDatum::new(CartanType::g2());
        assert_eq!(g2.t_basis()[1].weight, Weight::from_ints(&[-1, 1]));
        assert_eq!(g2.t_basis()[2].weight, Weight::from_ints(&[2, -1]));
        let d5 = RootDatum::new(CartanType::d(5).unwrap());
        assert_eq!(d5.t_basis()[4].weight, Weight::from_ints(&[0, 0, 0, -1, 1]));
        assert_eq!(d5.t_basis()[3].weight, Weight::from_ints(&[0, 0, -1, 1, 1]));
    }

    #[test]
    fn elementary_symmetric_in_t() {
        let g2 = RootDatum::new(CartanType::g2());
        let c3 = g2.elem_sym_t(3, 3).unwrap();
        let w1 = Polynomial::var(2, 0);
        let w2 = Polynomial::var(2, 1);
        let expected = &(&(&Polynomial::from_int(2, 2) * &w1.pow(3)) - &(&Polynomial::from_int(2, 3) * &(&w1.pow(2) * &w2)))
            + &(&w1 * &w2.pow(2));
        assert_eq!(c3, expected);
        let b4 = RootDatum::new(CartanType::b(4).unwrap());
        assert_eq!(b4.elem_sym_t(0, 3).unwrap(), Polynomial::one(4));
        assert!(b4.elem_sym_t(2, 5).is_err());
        assert!(b4.elem_sym_t(4, 3).is_err());
        let f4 = RootDatum::new(CartanType::f4());
        let t = f4.t_class("t").unwrap().weight.to_polynomial();
        assert_eq!(f4.elem_sym_t(1, 4).unwrap(), &Polynomial::from_int(4, 2) * &t);
    }

    /// Independent route: `2 (beta, lambda) / (beta, beta)` with `lambda`
    /// converted to simple-root coordinates and the symmetric form built from
    /// the Cartan matrix.
    fn pairing_via_form(rd: &RootDatum, beta: &Root, lambda: &Weight) -> BigRational {
        let l = rd.rank();
        let a = rd.cartan_matrix();
        let lam = rd.simple_coords_of(lambda);
        let mut ip = BigRational::zero();
        for i in 0..l {
            for j in 0..l {
                let form = BigRational::from_integer(a[i][j].into()) * &rd.simple_length_sq()[i] / q(2, 1);
                ip += form * BigRational::from_integer(beta.simple_coords[i].into()) * &lam[j];
            }
        }
        q(2, 1) * ip / &beta.length_sq
    }

    #[test]
    fn f4_highest_root_pairing() {
        let f4 = RootDatum::new(CartanType::f4());
        let theta = f4.positive_roots().last().unwrap();
        assert_eq!(theta.simple_coords, vec![2, 3, 4, 2]);
        let w1 = Weight::from_ints(&[1, 0, 0, 0]);
        let w4 = Weight::from_ints(&[0, 0, 0, 1]);
        // theta = w1 is the highest weight of the adjoint representation.
        assert_eq!(theta.omega_coords, vec![1, 0, 0, 0]);
        assert_eq!(pairing_via_form(&f4, theta, &w1), q(2, 1));
        assert_eq!(f4.coroot_pairing(theta, &w1).unwrap(), q(2, 1));
        assert_eq!(f4.coroot_pairing(theta, &w4).unwrap(), q(1, 1));
    }

    #[test]
    fn pairing_agrees_with_symmetric_form() {
        for ty in all_types() {
            let rd = RootDatum::new(ty);
            for b in rd.positive_roots() {
                for j in 0..ty.rank() {
                    let mut e = vec![0; ty.rank()];
                    e[j] = 1;
                    let lam = Weight::from_ints(&e);
                    assert_eq!(rd.coroot_pairing(b, &lam).unwrap(), pairing_via_form(&rd, b, &lam));
                }
            }
        }
    }
}
