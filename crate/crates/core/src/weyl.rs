//! Weyl group elements as integer matrices acting on the weight lattice.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rootdata::{Root, RootDatum, Weight};

/// An element of the Weyl group.
///
/// `action` is the `l x l` matrix (row-major) whose column `j` holds the
/// omega coordinates of `w(w_j)`. Equality and hashing use `action` only;
/// ordering is by length, then by the lexicographically minimal reduced word.
#[derive(Clone, Debug)]
pub struct WeylElement {
    rank: usize,
    action: Box<[i64]>,
    length: usize,
    word: Vec<u8>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.word_string())
        }
    }
}

fn mat_mul(a: &[i64], b: &[i64], l: usize) -> Box<[i64]> {
    let mut out = vec![0i64; l * l];
    for r in 0..l {
        for k in 0..l {
            let x = a[r * l + k];
            if x != 0 {
                for c in 0..l {
                    out[r * l + c] += x * b[k * l + c];
                }
            }
        }
    }
    out.into_boxed_slice()
}

fn identity_matrix(l: usize) -> Box<[i64]> {
    let mut m = vec![0i64; l * l];
    for i in 0..l {
        m[i * l + i] = 1;
    }
    m.into_boxed_slice()
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self) -> &[i64] {
        &self.action
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Lexicographically minimal reduced word, letters 1-based.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// The reduced word as a digit string, e.g. `"1243"`; empty for the identity.
    pub fn word_string(&self) -> String {
        self.word.iter().map(|d| char::from(b'0' + d)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of an integral weight.
    pub fn apply_int(&self, lambda: &[i64]) -> Vec<i64> {
        let l = self.rank;
        (0..l)
            .map(|r| (0..l).map(|c| self.action[r * l + c] * lambda[c]).sum())
            .collect()
    }

    /// Linear action on weights.
    pub fn act(&self, lambda: &Weight) -> Weight {
        let l = self.rank;
        assert_eq!(lambda.0.len(), l, "weight has the wrong number of coordinates");
        Weight(
            (0..l)
                .map(|r| {
                    (0..l)
                        .filter(|&c| self.action[r * l + c] != 0)
                        .map(|c| BigRational::from_integer(self.action[r * l + c].into()) * &lambda.0[c])
                        .fold(BigRational::zero(), |a, b| a + b)
                })
                .collect(),
        )
    }

    /// Columns of the action matrix: the images of `w1, .., wl`.
    pub fn images(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        (0..l)
            .map(|c| (0..l).map(|r| self.action[r * l + c]).collect())
            .collect()
    }

    /// Ring homomorphism `f(w1, .., wl) -> f(w(w1), .., w(wl))`.
    pub fn substitute(&self, f: &Polynomial) -> Polynomial {
        f.substitute_linear(&self.images())
    }
}

/// One length stratum of the group.
#[derive(Debug)]
pub struct Stratum {
    length: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Box<[i64]>, usize>,
}

impl Stratum {
    pub fn length(&self) -> usize {
        self.length
    }

    /// Elements sorted by reduced word.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.action).copied()
    }

    pub fn get_by_action(&self, action: &[i64]) -> Option<&WeylElement> {
        self.index.get(action).map(|&k| &self.elements[k])
    }
}

/// The Weyl group of a root datum with a lazily filled, per-length cache.
#[derive(Debug)]
pub struct WeylGroup {
    datum: Arc<RootDatum>,
    simple: Vec<Box<[i64]>>,
    strata: RwLock<Vec<Arc<Stratum>>>,
}

impl WeylGroup {
    pub fn new(datum: Arc<RootDatum>) -> Self {
        let l = datum.rank();
        let simple = (1..=l)
            .map(|i| {
                let alpha = datum.simple_root_omega(i);
                let mut m = identity_matrix(l);
                for r in 0..l {
                    m[r * l + (i - 1)] -= alpha[r];
                }
                m
            })
            .collect();
        WeylGroup {
            datum,
            simple,
            strata: RwLock::new(Vec::new()),
        }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Length of the longest element.
    pub fn max_length(&self) -> usize {
        self.datum.positive_roots().len()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            rank: self.rank(),
            action: identity_matrix(self.rank()),
            length: 0,
            word: Vec::new(),
        }
    }

    fn check_letter(&self, i: usize) -> Result<()> {
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

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_letter(i)?;
        Ok(WeylElement {
            rank: self.rank(),
            action: self.simple[i - 1].clone(),
            length: 1,
            word: vec![i as u8],
        })
    }

    /// `true` iff `action(alpha_i)` is a positive root, i.e. `l(w s_i) = l(w) + 1`.
    fn sends_simple_positive(&self, action: &[i64], i: usize) -> bool {
        let l = self.rank();
        let alpha = self.datum.simple_root_omega(i);
        let img: Vec<i64> = (0..l).map(|r| (0..l).map(|c| action[r * l + c] * alpha[c]).sum()).collect();
        self.datum.is_positive_root_omega(&img)
    }

    /// `true` iff `l(w s_i) = l(w) + 1`.
    pub fn is_right_ascent(&self, w: &WeylElement, i: usize) -> bool {
        self.sends_simple_positive(&w.action, i)
    }

    fn right_mul_simple(&self, action: &[i64], i: usize) -> Box<[i64]> {
        mat_mul(action, &self.simple[i - 1], self.rank())
    }

    fn left_mul_simple(&self, i: usize, action: &[i64]) -> Box<[i64]> {
        mat_mul(&self.simple[i - 1], action, self.rank())
    }

    /// Number of positive roots sent to negative roots, counted from the matrix alone.
    pub fn inversion_count(&self, w: &WeylElement) -> usize {
        let l = self.rank();
        let action = w.action();
        self.datum
            .positive_roots()
            .iter()
            .filter(|b| {
                let img: Vec<i64> = (0..l)
                    .map(|r| (0..l).map(|c| action[r * l + c] * b.omega_coords[c]).sum())
                    .collect();
                !self.datum.is_positive_root_omega(&img)
            })
            .count()
    }

    /// Canonical element for an action matrix: length and lex-minimal
    /// reduced word are recomputed from the matrix.
    pub fn element_from_action(&self, action: &[i64]) -> WeylElement {
        let l = self.rank();
        assert_eq!(action.len(), l * l);
        // Any reduced word via right descents gives the inverse matrix.
        let mut v: Box<[i64]> = action.into();
        let mut descents = Vec::new();
        'outer: loop {
            for j in 1..=l {
                if !self.sends_simple_positive(&v, j) {
                    v = self.right_mul_simple(&v, j);
                    descents.push(j);
                    continue 'outer;
                }
            }
            break;
        }
        assert!(v.iter().zip(identity_matrix(l).iter()).all(|(a, b)| a == b), "matrix is not a Weyl group element");
        // w = s_{j_r} .. s_{j_1}, so w^{-1} = s_{j_1} .. s_{j_r}.
        let mut inv = identity_matrix(l);
        for &j in &descents {
            inv = self.right_mul_simple(&inv, j);
        }
        // Left descents of w are right descents of w^{-1}; take the smallest each time.
        let mut word = Vec::with_capacity(descents.len());
        let mut u = inv;
        'greedy: loop {
            for i in 1..=l {
                if !self.sends_simple_positive(&u, i) {
                    word.push(i as u8);
                    u = self.right_mul_simple(&u, i);
                    continue 'greedy;
                }
            }
            break;
        }
        debug_assert_eq!(word.len(), descents.len());
        WeylElement {
            rank: l,
            action: action.into(),
            length: word.len(),
            word,
        }
    }

    /// Evaluates a (not necessarily reduced) word of 1-based letters.
    pub fn element_from_word(&self, word: &[u8]) -> Result<WeylElement> {
        let mut m = identity_matrix(self.rank());
        for &i in word {
            self.check_letter(i as usize).map_err(|_| Error::InvalidWord {
                word: word.iter().map(|d| d.to_string()).collect(),
                reason: format!("letter {i} is not a simple index 1..={}", self.rank()),
            })?;
            m = self.right_mul_simple(&m, i as usize);
        }
        Ok(self.element_from_action(&m))
    }

    /// Parses a digit string such as `"1243"`; the identity is `""`, `"e"` or `"id"`.
    pub fn parse_word(&self, text: &str) -> Result<WeylElement> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "id" {
            return Ok(self.identity());
        }
        let mut letters = Vec::new();
        for ch in t.chars() {
            match ch.to_digit(10) {
                Some(d) => letters.push(d as u8),
                None if ch == 's' || ch == ',' || ch == ' ' || ch == '_' => {}
                None => {
                    return Err(Error::InvalidWord {
                        word: text.to_string(),
                        reason: format!("unexpected character `{ch}`"),
                    })
                }
            }
        }
        let letters_str: String = letters.iter().map(|d| d.to_string()).collect();
        self.element_from_word(&letters).map_err(|e| match e {
            Error::InvalidWord { reason, .. } => Error::InvalidWord {
                word: letters_str.clone(),
                reason,
            },
            other => other,
        })
    }

    /// `w v`: action matrices multiply; length and word are recomputed.
    pub fn compose(&self, w: &WeylElement, v: &WeylElement) -> WeylElement {
        self.element_from_action(&mat_mul(&w.action, &v.action, self.rank()))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut rev = w.word.clone();
        rev.reverse();
        self.element_from_word(&rev).expect("valid letters")
    }

    pub fn act(&self, w: &WeylElement, lambda: &Weight) -> Weight {
        w.act(lambda)
    }

    /// `s_i w`, if that has length `l(w) + 1`.
    pub fn left_ascent(&self, i: usize, w: &WeylElement) -> Option<WeylElement> {
        let next = self.stratum(w.length + 1)?;
        let action = self.left_mul_simple(i, &w.action);
        next.get_by_action(&action).cloned()
    }

    /// `w s_i`, if that has length `l(w) + 1`.
    pub fn right_ascent(&self, w: &WeylElement, i: usize) -> Option<WeylElement> {
        if !self.is_right_ascent(w, i) {
            return None;
        }
        let next = self.stratum(w.length + 1)?;
        next.get_by_action(&self.right_mul_simple(&w.action, i)).cloned()
    }

    /// `w s_i`, if that has length `l(w) - 1`.
    pub fn right_descent(&self, w: &WeylElement, i: usize) -> Option<WeylElement> {
        if w.length == 0 || self.is_right_ascent(w, i) {
            return None;
        }
        let prev = self.stratum(w.length - 1)?;
        prev.get_by_action(&self.right_mul_simple(&w.action, i)).cloned()
    }

    fn stratum(&self, k: usize) -> Option<Arc<Stratum>> {
        self.elements_of_length(k).ok()
    }

    fn build_next(&self, prev: &Stratum) -> Stratum {
        let l = self.rank();
        let mut found: HashMap<Box<[i64]>, Vec<u8>> = HashMap::new();
        for w in &prev.elements {
            for i in 1..=l {
                if !self.sends_simple_positive(&w.action, i) {
                    continue;
                }
                let u = self.right_mul_simple(&w.action, i);
                let mut word = w.word.clone();
                word.push(i as u8);
                found
                    .entry(u)
                    .and_modify(|best| {
                        if word < *best {
                            *best = word.clone();
                        }
                    })
                    .or_insert(word);
            }
        }
        let mut elements: Vec<WeylElement> = found
            .into_iter()
            .map(|(action, word)| WeylElement {
                rank: l,
                action,
                length: prev.length + 1,
                word,
            })
            .collect();
        elements.sort();
        let index = elements.iter().enumerate().map(|(k, e)| (e.action.clone(), k)).collect();
        Stratum {
            length: prev.length + 1,
            elements,
            index,
        }
    }

    /// All elements of length `k`, enumerated by breadth-first search on
    /// right multiplication and cached.
    pub fn elements_of_length(&self, k: usize) -> Result<Arc<Stratum>> {
        let n = self.max_length();
        if k > n {
            return Err(Error::OutOfRange {
                what: "length",
                value: k as i64,
                min: 0,
                max: n as i64,
            });
        }
        {
            let strata = self.strata.read().unwrap();
            if let Some(s) = strata.get(k) {
                return Ok(Arc::clone(s));
            }
        }
        let mut strata = self.strata.write().unwrap();
        if strata.is_empty() {
            let e = self.identity();
            let index = std::iter::once((e.action.clone(), 0)).collect();
            strata.push(Arc::new(Stratum {
                length: 0,
                elements: vec![e],
                index,
            }));
        }
        while strata.len() <= k {
            let next = self.build_next(strata.last().unwrap());
            strata.push(Arc::new(next));
        }
        Ok(Arc::clone(&strata[k]))
    }

    /// Number of elements of each length `0..=N`.
    pub fn length_counts(&self) -> Vec<usize> {
        (0..=self.max_length())
            .map(|k| self.elements_of_length(k).unwrap().len())
            .collect()
    }

    pub fn order(&self) -> usize {
        self.length_counts().iter().sum()
    }

    /// Iterates over all elements, sorted by length then word.
    pub fn all_elements(&self) -> Vec<WeylElement> {
        (0..=self.max_length())
            .flat_map(|k| self.elements_of_length(k).unwrap().elements().to_vec())
            .collect()
    }

    pub fn longest_element(&self) -> WeylElement {
        let l = self.rank();
        let mut m = identity_matrix(l);
        'up: loop {
            for i in 1..=l {
                if self.sends_simple_positive(&m, i) {
                    m = self.right_mul_simple(&m, i);
                    continue 'up;
                }
            }
            break;
        }
        self.element_from_action(&m)
    }

    /// The reflection `s_beta` for a positive root `beta`.
    pub fn root_reflection(&self, beta: &Root) -> Result<WeylElement> {
        match self.datum.root_from_omega(&beta.omega_coords) {
            Some(r) if r == *beta && r.is_positive() => {}
            _ => return Err(Error::NotARoot(format!("{:?}", beta.simple_coords))),
        }
        let l = self.rank();
        let pairing = self.datum.coroot_coords(beta);
        let mut m = identity_matrix(l);
        for c in 0..l {
            for r in 0..l {
                m[r * l + c] -= pairing[c] * beta.omega_coords[r];
            }
        }
        Ok(self.element_from_action(&m))
    }

    /// `w s_beta` for every positive root, as raw action matrices.
    pub(crate) fn reflection_matrices(&self) -> Vec<Box<[i64]>> {
        self.datum
            .positive_roots()
            .iter()
            .map(|b| self.root_reflection(b).unwrap().action)
            .collect()
    }

    pub(crate) fn right_mul_action(&self, w: &WeylElement, action: &[i64]) -> Box<[i64]> {
        mat_mul(&w.action, action, self.rank())
    }
}
