//! Hard-coded reference data for G2 and F4: Weyl group tables, actions on
//! the t-classes, divided-difference tables, generator expansions, the
//! polynomial identities for Schubert classes and the Borel relations.
//!
//! The data is plain serde so a modified copy can be loaded from JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// `word -> coefficient`.
pub type WordTable = BTreeMap<String, i64>;

/// One monomial `coeff * t1^t1 * t^t * c_c * gamma3^g3 * gamma4^g4`
/// (`c = 0` means no Chern factor).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub t1: u32,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub t: u32,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub c: u32,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub g3: u32,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub g4: u32,
}

fn is_zero(x: &u32) -> bool {
    *x == 0
}

fn term(coeff: i64, t1: u32, t: u32, c: u32, g3: u32, g4: u32) -> Term {
    Term { coeff, t1, t, c, g3, g4 }
}

/// A named relation or identity `sum terms = 0` (relation) or `Z_word = sum terms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub name: String,
    pub terms: Vec<Term>,
}

/// `Z_word = sum terms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassIdentity {
    pub word: String,
    pub terms: Vec<Term>,
}

/// Action of each simple reflection: `s_i -> (generator -> linear combination)`.
/// Generators missing from a row are fixed.
pub type ActionTable = BTreeMap<String, BTreeMap<String, BTreeMap<String, i64>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G2Tables {
    pub length_counts: Vec<usize>,
    pub elements: Vec<Vec<String>>,
    pub coxeter_identity_words: Vec<String>,
    pub action: ActionTable,
    pub t_images: BTreeMap<String, WordTable>,
    pub c3_in_omega: String,
    pub c3_deltas: WordTable,
    pub gamma3: WordTable,
    pub relations: Vec<Identity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F4Tables {
    pub length_counts_prefix: Vec<usize>,
    pub order: usize,
    pub elements: Vec<Vec<String>>,
    pub coxeter_identity_words: Vec<String>,
    pub action: ActionTable,
    pub t_images: BTreeMap<String, WordTable>,
    pub c3_deltas: WordTable,
    pub gamma4_numerator: String,
    pub gamma4_numerator_deltas: WordTable,
    pub gamma3: WordTable,
    pub gamma4: WordTable,
    pub positive_roots: Vec<String>,
    pub longest_word: String,
    pub schubert_identities: Vec<ClassIdentity>,
    pub relations: Vec<Identity>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceTables {
    pub g2: G2Tables,
    pub f4: F4Tables,
}

fn words(list: &str) -> Vec<String> {
    list.split_whitespace().map(str::to_string).collect()
}

fn table(entries: &[(&str, i64)]) -> WordTable {
    entries.iter().map(|&(w, c)| (w.to_string(), c)).collect()
}

fn action(rows: &[(&str, &[(&str, &[(&str, i64)])])]) -> ActionTable {
    rows.iter()
        .map(|&(s, gens)| {
            let m = gens
                .iter()
                .map(|&(g, img)| (g.to_string(), img.iter().map(|&(h, c)| (h.to_string(), c)).collect()))
                .collect();
            (s.to_string(), m)
        })
        .collect()
}

fn identity(name: &str, terms: Vec<Term>) -> Identity {
    Identity {
        name: name.to_string(),
        terms,
    }
}

fn class(word: &str, terms: Vec<Term>) -> ClassIdentity {
    ClassIdentity {
        word: word.to_string(),
        terms,
    }
}

impl ReferenceTables {
    pub fn builtin() -> Self {
        ReferenceTables {
            g2: G2Tables::builtin(),
            f4: F4Tables::builtin(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn from_json_str(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Invalid(format!("reference tables: {e}")))
    }
}

impl G2Tables {
    pub fn builtin() -> Self {
        G2Tables {
            length_counts: vec![1, 2, 2, 2, 2, 2, 1],
            elements: vec![
                vec![String::new()],
                words("1 2"),
                words("12 21"),
                words("121 212"),
                words("1212 2121"),
                words("12121 21212"),
                words("121212"),
            ],
            coxeter_identity_words: words("11 22 121212121212"),
            action: action(&[
                ("s1", &[("t1", &[("t2", -1)]), ("t2", &[("t1", -1)]), ("t3", &[("t3", -1)])]),
                ("s2", &[("t1", &[("t1", 1)]), ("t2", &[("t3", 1)]), ("t3", &[("t2", 1)])]),
            ]),
            t_images: [
                ("t1", table(&[("1", -1)])),
                ("t2", table(&[("1", -1), ("2", 1)])),
                ("t3", table(&[("1", 2), ("2", -1)])),
            ]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
            c3_in_omega: "2*w1^3 - 3*w1^2*w2 + w1*w2^2".to_string(),
            c3_deltas: table(&[("121", -2), ("212", 0)]),
            gamma3: table(&[("121", -1)]),
            relations: vec![
                identity("rho1", vec![term(1, 0, 0, 1, 0, 0)]),
                identity("rho2", vec![term(1, 0, 0, 2, 0, 0)]),
                identity("rho3", vec![term(1, 0, 0, 3, 0, 0), term(-2, 0, 0, 0, 1, 0)]),
                identity("rho6", vec![term(1, 0, 0, 0, 2, 0)]),
            ],
        }
    }
}

impl F4Tables {
    pub fn builtin() -> Self {
        F4Tables {
            length_counts_prefix: vec![1, 4, 9, 16, 25],
            order: 1152,
            elements: vec![
                vec![String::new()],
                words("1 2 3 4"),
                words("12 13 14 21 23 24 32 34 43"),
                words("121 123 124 132 134 143 213 214 232 234 243 321 323 324 343 432"),
                words(
                    "1213 1214 1232 1234 1243 1321 1323 1324 1343 1432 \
                     2132 2134 2143 2321 2323 2324 2343 2432 3213 3214 \
                     3234 3243 3432 4321 4323",
                ),
            ],
            coxeter_identity_words: words("11 22 33 44 121212 343434 23232323 1313 1414 2424"),
            action: action(&[
                ("s1", &[("t2", &[("t3", 1)]), ("t3", &[("t2", 1)])]),
                ("s2", &[("t3", &[("t4", 1)]), ("t4", &[("t3", 1)])]),
                ("s3", &[("t4", &[("t4", -1)]), ("t", &[("t", 1), ("t4", -1)])]),
                (
                    "s4",
                    &[
                        ("t1", &[("t1", 1), ("t", -1)]),
                        ("t2", &[("t2", 1), ("t", -1)]),
                        ("t3", &[("t3", 1), ("t", -1)]),
                        ("t4", &[("t4", 1), ("t", -1)]),
                        ("t", &[("t", -1)]),
                    ],
                ),
            ]),
            t_images: [
                ("t1", table(&[("4", -1)])),
                ("t2", table(&[("1", 1), ("4", -1)])),
                ("t3", table(&[("1", -1), ("2", 1), ("4", -1)])),
                ("t4", table(&[("2", -1), ("3", 2), ("4", -1)])),
                ("t", table(&[("3", 1), ("4", -2)])),
            ]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
            c3_deltas: table(&[
                ("121", 0),
                ("123", 2),
                ("124", 0),
                ("132", 0),
                ("134", 0),
                ("143", 0),
                ("213", 0),
                ("214", 0),
                ("232", 0),
                ("234", -2),
                ("243", -4),
                ("321", 0),
                ("323", 0),
                ("324", 0),
                ("343", 6),
                ("432", 0),
            ]),
            gamma4_numerator: "t1*t2*t3*t4 - 2*t*(t1*t2*t3 + t1*t2*t4 + t1*t3*t4 + t2*t3*t4) + 8*t^4".to_string(),
            gamma4_numerator_deltas: table(&[
                ("1213", 0),
                ("1214", 0),
                ("1232", 0),
                ("1234", 3),
                ("1243", -30),
                ("1321", 0),
                ("1323", 12),
                ("1324", 0),
                ("1343", 0),
                ("1432", 0),
                ("2132", 0),
                ("2134", 0),
                ("2143", 0),
                ("2321", 0),
                ("2323", 0),
                ("2324", 0),
                ("2343", 0),
                ("2432", 0),
                ("3213", 0),
                ("3214", 0),
                ("3234", -3),
                ("3243", 30),
                ("3432", 0),
                ("4321", 0),
                ("4323", -24),
            ]),
            gamma3: table(&[("123", 1), ("234", -1), ("243", -2), ("343", 3)]),
            gamma4: table(&[
                ("1234", 1),
                ("1243", -10),
                ("1323", 4),
                ("3234", -1),
                ("3243", 10),
                ("4323", -8),
            ]),
            positive_roots: {
                let mut roots = Vec::new();
                for i in 1..=4 {
                    for j in i + 1..=4 {
                        roots.push(format!("t{i} + t{j}"));
                        roots.push(format!("t{i} - t{j}"));
                    }
                }
                for i in 1..=4 {
                    roots.push(format!("t{i}"));
                }
                for signs in 0..8u32 {
                    let s = |b: u32| if signs >> b & 1 == 0 { '+' } else { '-' };
                    roots.push(format!("(t1 {} t2 {} t3 {} t4)/2", s(0), s(1), s(2)));
                }
                roots
            },
            longest_word: "121321323432132343213234".to_string(),
            schubert_identities: vec![
                class("123", vec![term(1, 0, 0, 0, 1, 0), term(-2, 3, 0, 0, 0, 0), term(3, 2, 1, 0, 0, 0), term(-2, 1, 2, 0, 0, 0)]),
                class("234", vec![term(-1, 3, 0, 0, 0, 0)]),
                class("243", vec![term(-2, 3, 0, 0, 0, 0), term(3, 2, 1, 0, 0, 0), term(-1, 1, 2, 0, 0, 0)]),
                class("343", vec![term(-1, 3, 0, 0, 0, 0), term(1, 2, 1, 0, 0, 0)]),
                class(
                    "1234",
                    vec![
                        term(-1, 0, 0, 0, 0, 1),
                        term(1, 1, 0, 0, 1, 0),
                        term(-2, 0, 1, 0, 1, 0),
                        term(1, 3, 1, 0, 0, 0),
                        term(-1, 2, 2, 0, 0, 0),
                        term(3, 0, 4, 0, 0, 0),
                    ],
                ),
                class(
                    "1243",
                    vec![
                        term(1, 0, 0, 0, 0, 1),
                        term(-2, 1, 0, 0, 1, 0),
                        term(2, 0, 1, 0, 1, 0),
                        term(2, 4, 0, 0, 0, 0),
                        term(-4, 3, 1, 0, 0, 0),
                        term(3, 2, 2, 0, 0, 0),
                        term(-3, 0, 4, 0, 0, 0),
                    ],
                ),
                class(
                    "1323",
                    vec![
                        term(-1, 0, 0, 0, 0, 1),
                        term(-1, 0, 1, 0, 1, 0),
                        term(2, 4, 0, 0, 0, 0),
                        term(-4, 3, 1, 0, 0, 0),
                        term(4, 2, 2, 0, 0, 0),
                        term(-2, 1, 3, 0, 0, 0),
                        term(3, 0, 4, 0, 0, 0),
                    ],
                ),
                class(
                    "3234",
                    vec![
                        term(1, 0, 0, 0, 0, 1),
                        term(-1, 1, 0, 0, 1, 0),
                        term(2, 0, 1, 0, 1, 0),
                        term(1, 4, 0, 0, 0, 0),
                        term(-1, 3, 1, 0, 0, 0),
                        term(1, 2, 2, 0, 0, 0),
                        term(-3, 0, 4, 0, 0, 0),
                    ],
                ),
                class("3243", vec![term(1, 4, 0, 0, 0, 0), term(-2, 3, 1, 0, 0, 0), term(1, 2, 2, 0, 0, 0)]),
                class(
                    "4323",
                    vec![
                        term(-1, 0, 0, 0, 0, 1),
                        term(2, 1, 0, 0, 1, 0),
                        term(-2, 0, 1, 0, 1, 0),
                        term(-1, 1, 3, 0, 0, 0),
                        term(3, 0, 4, 0, 0, 0),
                    ],
                ),
            ],
            relations: vec![
                identity("rho1", vec![term(1, 0, 0, 1, 0, 0), term(-2, 0, 1, 0, 0, 0)]),
                identity("rho2", vec![term(1, 0, 0, 2, 0, 0), term(-2, 0, 2, 0, 0, 0)]),
                identity("rho3", vec![term(1, 0, 0, 3, 0, 0), term(-2, 0, 0, 0, 1, 0)]),
                identity(
                    "rho4",
                    vec![term(1, 0, 0, 4, 0, 0), term(-4, 0, 1, 0, 1, 0), term(8, 0, 4, 0, 0, 0), term(-3, 0, 0, 0, 0, 1)],
                ),
                identity(
                    "rho6",
                    vec![term(1, 0, 0, 0, 2, 0), term(-3, 0, 2, 0, 0, 1), term(-4, 0, 3, 0, 1, 0), term(8, 0, 6, 0, 0, 0)],
                ),
                identity(
                    "rho8",
                    vec![term(3, 0, 0, 0, 0, 2), term(6, 0, 1, 0, 1, 1), term(-3, 0, 4, 0, 0, 1), term(-13, 0, 8, 0, 0, 0)],
                ),
                identity(
                    "rho12",
                    vec![term(1, 0, 0, 0, 0, 3), term(-6, 0, 4, 0, 0, 2), term(12, 0, 8, 0, 0, 1), term(-8, 0, 12, 0, 0, 0)],
                ),
            ],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let t = ReferenceTables::builtin();
        let text = t.to_json_string();
        assert_eq!(ReferenceTables::from_json_str(&text).unwrap(), t);
    }

    #[test]
    fn table_sizes() {
        let t = ReferenceTables::builtin();
        assert_eq!(t.f4.c3_deltas.len(), 16);
        assert_eq!(t.f4.gamma4_numerator_deltas.len(), 25);
        assert_eq!(t.f4.schubert_identities.len(), 10);
        assert_eq!(t.f4.positive_roots.len(), 24);
        assert_eq!(t.f4.relations.len(), 7);
        assert_eq!(t.f4.longest_word.len(), 24);
        for (k, row) in t.f4.elements.iter().enumerate() {
            assert_eq!(row.len(), t.f4.length_counts_prefix[k]);
        }
    }
}
