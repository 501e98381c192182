//! Fibers of the map from Weyl-group classes to unipotent classes for the
//! exceptional types, one table per characteristic variant.
//!
//! # Table file format
//!
//! UTF-8 text, one record per line. Blank lines and lines starting with `#`
//! are ignored. A record is a `;`-separated list of `key = value` fields:
//!
//! ```text
//! classes = <label>|<label>|... ; unipotent = <name>
//! ```
//!
//! Labels follow the Carter-label grammar of [`crate::weyl_classes::CarterLabel`].
//! Unipotent names are opaque; `~` stands for a tilde and a trailing `_k`
//! outside brackets marks a class specific to characteristic `k`, as in
//! `(B_2)_2`. The first label of a row is the fiber's minimizer.
//!
//! Each file's SHA-256 is pinned below and checked on load, along with the
//! table invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::weyl_classes::{CarterLabel, CharVariant, Family, GroupContext};

struct TableSource {
    family: Family,
    variant: CharVariant,
    name: &'static str,
    text: &'static str,
    sha256: &'static str,
}

macro_rules! source {
    ($family:ident, $variant:ident, $file:literal, $sha:literal) => {
        TableSource {
            family: Family::$family,
            variant: CharVariant::$variant,
            name: $file,
            text: include_str!(concat!("../data/", $file)),
            sha256: $sha,
        }
    };
}

const SOURCES: [TableSource; 10] = [
    source!(
        G2,
        Good,
        "g2.good.tbl",
        "7d0df76a8cd1109ebb81b0569af5ac48b705e5c5a3d3ca6bfc7a894ca9802b90"
    ),
    source!(
        G2,
        P3,
        "g2.p3.tbl",
        "f52aa7848a3b1ca936f4bb290a86608901e92b4406ec7d255615d9fd908b35a5"
    ),
    source!(
        F4,
        Good,
        "f4.good.tbl",
        "1142e00c95be9212a1d589e4005bb0d6ff0f1709f4c746791d6c6f6c0c20c4c5"
    ),
    source!(
        F4,
        P2,
        "f4.p2.tbl",
        "ef37a3b27c19462d3d7faa297130cdcc83874ebf85b28a5f7e62293e3c6a015c"
    ),
    source!(
        E6,
        Good,
        "e6.tbl",
        "584fb34ed02cd87bbfe55c6003e2ff6638aa34a3d57394df4bfd74f2e732d8d2"
    ),
    source!(
        E7,
        Good,
        "e7.good.tbl",
        "fe3821f15dcbb2de50bb2787e3a64ee412656016a935e52d01f193f5b4179fc7"
    ),
    source!(
        E7,
        P2,
        "e7.p2.tbl",
        "6a4674895aa4b4e9bde5ec6d3cb924cac645f20ef6ba90d1d443dcebda41a11b"
    ),
    source!(
        E8,
        Good,
        "e8.good.tbl",
        "52442a6ada9375e0acf55e0600448dba4b706b21d3e617b6647c679ed8547f44"
    ),
    source!(
        E8,
        P2,
        "e8.p2.tbl",
        "4fcb75232391d53b1976a5349b4046f4c590cb3c18b0c6ab8a4b4f8109a12ed0"
    ),
    source!(
        E8,
        P3,
        "e8.p3.tbl",
        "048df8f68d197c528801524f7e3338488c07b6ce0699ba6ff44986251abdf3a2"
    ),
];

/// A row that a characteristic-`p` table puts in place of a row of the
/// good-characteristic table, in the record syntax of the data files.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Replacement {
    pub removed: &'static str,
    pub added: &'static [&'static str],
}

/// The replacement lines for a bad-characteristic variant, in table order.
pub fn replacements(ctx: &GroupContext) -> &'static [Replacement] {
    const G2_P3: &[Replacement] = &[Replacement {
        removed: "classes = A_1+~A_1|~A_1 ; unipotent = ~A_1",
        added: &[
            "classes = A_1+~A_1 ; unipotent = ~A_1",
            "classes = ~A_1 ; unipotent = (~A_1)_3",
        ],
    }];
    const F4_P2: &[Replacement] = &[
        Replacement {
            removed: "classes = 2A_1|~A_1 ; unipotent = ~A_1",
            added: &[
                "classes = 2A_1 ; unipotent = ~A_1",
                "classes = ~A_1 ; unipotent = (~A_1)_2",
            ],
        },
        Replacement {
            removed: "classes = A_2+~A_2|~A_2+A_1 ; unipotent = ~A_2+A_1",
            added: &[
                "classes = A_2+~A_2 ; unipotent = ~A_2+A_1",
                "classes = ~A_2+A_1 ; unipotent = (~A_2+A_1)_2",
            ],
        },
        Replacement {
            removed: "classes = A_3|B_2 ; unipotent = B_2",
            added: &[
                "classes = A_3 ; unipotent = B_2",
                "classes = B_2 ; unipotent = (B_2)_2",
            ],
        },
        Replacement {
            removed: "classes = A_3+~A_1|B_2+A_1 ; unipotent = C_3(a_1)",
            added: &[
                "classes = A_3+~A_1 ; unipotent = C_3(a_1)",
                "classes = B_2+A_1 ; unipotent = (C_3(a_1))_2",
            ],
        },
    ];
    const E7_P2: &[Replacement] = &[Replacement {
        removed: "classes = D_4(a_1)+2A_1|A_3+A_2 ; unipotent = A_3+A_2",
        added: &[
            "classes = D_4(a_1)+2A_1 ; unipotent = A_3+A_2",
            "classes = A_3+A_2 ; unipotent = (A_3+A_2)_2",
        ],
    }];
    const E8_P3: &[Replacement] = &[Replacement {
        removed: "classes = D_8(a_3)|A''_7 ; unipotent = A_7",
        added: &[
            "classes = D_8(a_3) ; unipotent = A_7",
            "classes = A''_7 ; unipotent = (A_7)_3",
        ],
    }];
    const E8_P2: &[Replacement] = &[
        Replacement {
            removed: "classes = (2A_3)'|A_3+A_2 ; unipotent = A_3+A_2",
            added: &[
                "classes = (2A_3)' ; unipotent = A_3+A_2",
                "classes = A_3+A_2 ; unipotent = (A_3+A_2)_2",
            ],
        },
        Replacement {
            removed: "classes = D_4+A_3|D_4+A_2 ; unipotent = D_4+A_2",
            added: &[
                "classes = D_4+A_3 ; unipotent = D_4+A_2",
                "classes = D_4+A_2 ; unipotent = (D_4+A_2)_2",
            ],
        },
        Replacement {
            removed: "classes = A_7+A_1|D_5+A_2 ; unipotent = D_5+A_2",
            added: &[
                "classes = A_7+A_1 ; unipotent = D_5+A_2",
                "classes = D_5+A_2 ; unipotent = (D_5+A_2)_2",
            ],
        },
        Replacement {
            removed: "classes = D_8(a_2)|D_7(a_1) ; unipotent = D_7(a_1)",
            added: &[
                "classes = D_8(a_2) ; unipotent = D_7(a_1)",
                "classes = D_7(a_1) ; unipotent = (D_7(a_1))_2",
            ],
        },
    ];
    match (ctx.family(), ctx.variant()) {
        (Family::G2, CharVariant::P3) => G2_P3,
        (Family::F4, CharVariant::P2) => F4_P2,
        (Family::E7, CharVariant::P2) => E7_P2,
        (Family::E8, CharVariant::P3) => E8_P3,
        (Family::E8, CharVariant::P2) => E8_P2,
        _ => &[],
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberRow {
    pub classes: Vec<CarterLabel>,
    pub unipotent: String,
}

impl FiberRow {
    pub fn psi(&self) -> &CarterLabel {
        &self.classes[0]
    }

    /// The row in data-file syntax.
    pub fn to_record(&self) -> String {
        let mut s = String::from("classes = ");
        for (i, l) in self.classes.iter().enumerate() {
            if i > 0 {
                s.push('|');
            }
            write!(s, "{l}").unwrap();
        }
        write!(s, " ; unipotent = {}", self.unipotent).unwrap();
        s
    }
}

#[derive(Clone, Debug)]
pub struct FiberTable {
    context: GroupContext,
    rows: Vec<FiberRow>,
    by_class: BTreeMap<CarterLabel, usize>,
    by_unipotent: BTreeMap<String, usize>,
}

impl FiberTable {
    /// Builds a table and checks that its rows partition the classes, that
    /// unipotent names are distinct and that each row's first class has the
    /// strictly smallest fixed-space dimension.
    pub fn from_rows(context: GroupContext, rows: Vec<FiberRow>) -> Result<Self> {
        let err = |msg: String| Error::Table {
            table: context.to_string(),
            msg,
        };
        let mut by_class = BTreeMap::new();
        let mut by_unipotent = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            if row.classes.is_empty() {
                return Err(err(format!("row {} is empty", row.unipotent)));
            }
            if by_unipotent.insert(row.unipotent.clone(), i).is_some() {
                return Err(err(format!("unipotent {} listed twice", row.unipotent)));
            }
            for label in &row.classes {
                if label.rank() > context.rank() {
                    return Err(err(format!(
                        "class {label} has rank above {}",
                        context.rank()
                    )));
                }
                if by_class.insert(label.clone(), i).is_some() {
                    return Err(err(format!("class {label} listed twice")));
                }
            }
            // Larger label rank means smaller fixed space.
            let first = row.classes[0].rank();
            if let Some(other) = row.classes[1..].iter().find(|l| l.rank() >= first) {
                return Err(err(format!(
                    "row {}: {} does not strictly minimise against {other}",
                    row.unipotent, row.classes[0]
                )));
            }
        }
        Ok(FiberTable {
            context,
            rows,
            by_class,
            by_unipotent,
        })
    }

    pub fn context(&self) -> &GroupContext {
        &self.context
    }

    pub fn rows(&self) -> &[FiberRow] {
        &self.rows
    }

    /// All classes in row order.
    pub fn classes(&self) -> impl Iterator<Item = &CarterLabel> {
        self.rows.iter().flat_map(|r| r.classes.iter())
    }

    pub fn unipotents(&self) -> impl Iterator<Item = &str> {
        self.rows.iter().map(|r| r.unipotent.as_str())
    }

    pub fn contains_class(&self, label: &CarterLabel) -> bool {
        self.by_class.contains_key(label)
    }

    pub fn contains_unipotent(&self, name: &str) -> bool {
        self.by_unipotent.contains_key(name)
    }

    pub fn row_of_class(&self, label: &CarterLabel) -> Result<&FiberRow> {
        self.by_class
            .get(label)
            .map(|&i| &self.rows[i])
            .ok_or_else(|| Error::UnknownClass {
                class: label.to_string(),
                context: self.context.to_string(),
            })
    }

    pub fn row_of_unipotent(&self, name: &str) -> Result<&FiberRow> {
        self.by_unipotent
            .get(name)
            .map(|&i| &self.rows[i])
            .ok_or_else(|| Error::UnknownUnipotent {
                unipotent: name.to_string(),
                context: self.context.to_string(),
            })
    }
}

/// Splits record text into `(line number, [(key, value)])`, skipping comments.
pub(crate) fn records(text: &str) -> impl Iterator<Item = (usize, Vec<(&str, &str)>)> + '_ {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let fields = line
            .split(';')
            .map(|f| match f.split_once('=') {
                Some((k, v)) => (k.trim(), v.trim()),
                None => (f.trim(), ""),
            })
            .collect();
        Some((i + 1, fields))
    })
}

/// Parses table text in the format described at the top of this module.
pub fn parse_rows(name: &str, text: &str) -> Result<Vec<FiberRow>> {
    let mut rows = Vec::new();
    for (line, fields) in records(text) {
        let err = |msg: String| Error::Table {
            table: name.to_string(),
            msg: format!("line {line}: {msg}"),
        };
        match fields.as_slice() {
            [("classes", classes), ("unipotent", unipotent)] if !unipotent.is_empty() => {
                let classes = classes
                    .split('|')
                    .map(|l| {
                        l.trim()
                            .parse::<CarterLabel>()
                            .map_err(|e| err(e.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(FiberRow {
                    classes,
                    unipotent: unipotent.to_string(),
                });
            }
            _ => return Err(err("expected `classes = ... ; unipotent = ...`".into())),
        }
    }
    Ok(rows)
}

pub(crate) fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .fold(String::new(), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        })
}

fn build(source: &TableSource) -> Result<FiberTable> {
    let digest = sha256_hex(source.text);
    if digest != source.sha256 {
        return Err(Error::Table {
            table: source.name.to_string(),
            msg: format!("checksum mismatch: {digest}"),
        });
    }
    let ctx = GroupContext::exceptional(source.family, source.variant)?;
    FiberTable::from_rows(ctx, parse_rows(source.name, source.text)?)
}

/// The fiber table for an exceptional context.
pub fn load_table(ctx: &GroupContext) -> Result<&'static FiberTable> {
    static TABLES: [OnceLock<Result<FiberTable>>; SOURCES.len()] =
        [const { OnceLock::new() }; SOURCES.len()];
    let index = SOURCES
        .iter()
        .position(|s| s.family == ctx.family() && s.variant == ctx.variant())
        .ok_or_else(|| Error::UnknownContext(format!("no exceptional table for {ctx}")))?;
    TABLES[index]
        .get_or_init(|| build(&SOURCES[index]))
        .as_ref()
        .map_err(Clone::clone)
}

/// Raw text of the data file behind `ctx`'s table.
pub fn table_source(ctx: &GroupContext) -> Option<&'static str> {
    SOURCES
        .iter()
        .find(|s| s.family == ctx.family() && s.variant == ctx.variant())
        .map(|s| s.text)
}

pub fn phi_lookup(ctx: &GroupContext, class: &CarterLabel) -> Result<String> {
    Ok(load_table(ctx)?.row_of_class(class)?.unipotent.clone())
}

pub fn fiber(ctx: &GroupContext, unipotent: &str) -> Result<Vec<CarterLabel>> {
    Ok(load_table(ctx)?
        .row_of_unipotent(unipotent)?
        .classes
        .clone())
}

pub fn psi_lookup(ctx: &GroupContext, unipotent: &str) -> Result<CarterLabel> {
    Ok(load_table(ctx)?.row_of_unipotent(unipotent)?.psi().clone())
}

/// `X` when `name` is `(X)_k` for a characteristic subscript `k`.
pub fn strip_characteristic_subscript(name: &str) -> Option<&str> {
    let (inner, k) = name.rsplit_once(")_")?;
    let inner = inner.strip_prefix('(')?;
    (!k.is_empty() && k.bytes().all(|b| b.is_ascii_digit())).then_some(inner)
}

/// Unipotent names of a table, as a set.
pub fn unipotent_set(table: &FiberTable) -> BTreeSet<String> {
    table.unipotents().map(str::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(f: Family, v: CharVariant) -> GroupContext {
        GroupContext::exceptional(f, v).unwrap()
    }

    fn label(s: &str) -> CarterLabel {
        s.parse().unwrap()
    }

    #[test]
    fn every_table_loads() {
        for s in &SOURCES {
            let c = ctx(s.family, s.variant);
            load_table(&c).unwrap_or_else(|e| panic!("{}: {e}", s.name));
        }
    }

    #[test]
    fn g2_tables() {
        let good = load_table(&ctx(Family::G2, CharVariant::Good)).unwrap();
        assert_eq!(good.rows().len(), 5);
        assert_eq!(good.classes().count(), 6);
        let p3 = load_table(&ctx(Family::G2, CharVariant::P3)).unwrap();
        assert_eq!(p3.rows().len(), 6);
        assert_eq!(
            p3.row_of_unipotent("(~A_1)_3").unwrap().classes,
            vec![label("~A_1")]
        );
    }

    #[test]
    fn e7_p2_replacement() {
        let t = load_table(&ctx(Family::E7, CharVariant::P2)).unwrap();
        assert_eq!(
            t.row_of_unipotent("(A_3+A_2)_2").unwrap().classes,
            vec![label("A_3+A_2")]
        );
        assert_eq!(
            t.row_of_unipotent("A_3+A_2").unwrap().classes,
            vec![label("D_4(a_1)+2A_1")]
        );
    }

    #[test]
    fn lookups() {
        let g2 = ctx(Family::G2, CharVariant::Good);
        assert_eq!(phi_lookup(&g2, &label("A_2")).unwrap(), "G_2(a_1)");
        let e6 = ctx(Family::E6, CharVariant::Good);
        assert_eq!(phi_lookup(&e6, &label("E_6(a_2)")).unwrap(), "A_5+A_1");
        let e8 = ctx(Family::E8, CharVariant::Good);
        assert_eq!(phi_lookup(&e8, &label("E_8(a_8)")).unwrap(), "2A_4");
        assert!(matches!(
            phi_lookup(&e8, &label("E_6(a_3)")),
            Err(Error::UnknownClass { .. })
        ));

        let e7 = ctx(Family::E7, CharVariant::Good);
        let labels = |v: &[&str]| v.iter().map(|s| label(s)).collect::<Vec<_>>();
        assert_eq!(
            fiber(&e7, "4A_1").unwrap(),
            labels(&["7A_1", "6A_1", "5A_1", "(4A_1)'"])
        );
        let f4 = ctx(Family::F4, CharVariant::Good);
        assert_eq!(fiber(&f4, "F_4").unwrap(), labels(&["F_4"]));
        assert_eq!(
            fiber(&e8, "A_3+A_2+A_1").unwrap(),
            labels(&["2A_3+2A_1", "A_3+A_2+2A_1", "2A_3+A_1", "A_3+A_2+A_1"])
        );
        assert!(matches!(
            fiber(&e8, "B_9"),
            Err(Error::UnknownUnipotent { .. })
        ));

        assert_eq!(psi_lookup(&e7, "D_6").unwrap(), label("D_6+A_1"));
        assert_eq!(psi_lookup(&e8, "2A_3").unwrap(), label("2D_4(a_1)"));
        let f4p2 = ctx(Family::F4, CharVariant::P2);
        assert_eq!(psi_lookup(&f4p2, "(C_3(a_1))_2").unwrap(), label("B_2+A_1"));
    }

    #[test]
    fn rejects_broken_tables() {
        let c = ctx(Family::G2, CharVariant::Good);
        let dup = parse_rows(
            "t",
            "classes = A_0 ; unipotent = A_0\nclasses = A_0 ; unipotent = X",
        )
        .unwrap();
        assert!(FiberTable::from_rows(c, dup).is_err());
        let order = parse_rows("t", "classes = A_1|A_2 ; unipotent = A_1").unwrap();
        assert!(FiberTable::from_rows(c, order).is_err());
        assert!(parse_rows("t", "classes = A_0").is_err());
        assert!(parse_rows("t", "classes = Q_0 ; unipotent = A_0").is_err());
    }

    #[test]
    fn record_round_trip() {
        for s in &SOURCES {
            let rows = parse_rows(s.name, s.text).unwrap();
            let recs: Vec<String> = rows.iter().map(FiberRow::to_record).collect();
            let original: Vec<&str> = s
                .text
                .lines()
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect();
            assert_eq!(recs, original, "{}", s.name);
        }
    }

    #[test]
    fn subscripts() {
        assert_eq!(strip_characteristic_subscript("(B_2)_2"), Some("B_2"));
        assert_eq!(
            strip_characteristic_subscript("(C_3(a_1))_2"),
            Some("C_3(a_1)")
        );
        assert_eq!(strip_characteristic_subscript("(~A_1)_3"), Some("~A_1"));
        assert_eq!(strip_characteristic_subscript("(3A_1)''"), None);
        assert_eq!(strip_characteristic_subscript("D_4(a_1)"), None);
    }
}
