//! Group contexts and conjugacy-class symbols for Weyl groups of every simple type.
//!
//! Classical classes are pairs `(r, p)`: `r` lists the sizes of the χ-stable
//! cycles of a signed permutation (all even), `p` the sizes of the remaining
//! cycles (which come in pairs). Type D is handled at the level of
//! `W`-classes inside `W'`; a class meeting `W'` in two classes is reported as
//! split and never distinguished further.

mod carter;

use std::fmt;
use std::str::FromStr;

pub use carter::{parse_carter_label, CarterLabel, LabelComponent, Series};

use crate::error::{Error, Result};
use crate::exceptional_tables;
use crate::partitions::{
    enumerate_partitions, fill_partitions, in_p_tilde, in_s_kappa, Partition,
    DEFAULT_ENUMERATION_BOUND,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
    ];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::B | Family::C | Family::D)
    }

    pub fn is_exceptional(self) -> bool {
        matches!(
            self,
            Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8
        )
    }

    /// The fixed rank of an exceptional family.
    pub fn exceptional_rank(self) -> Option<u32> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    fn min_rank(self) -> u32 {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            f => f.exceptional_rank().unwrap(),
        }
    }

    /// Characteristic variants with distinct data, in a fixed order.
    pub fn variants(self) -> &'static [CharVariant] {
        use CharVariant::*;
        match self {
            Family::A | Family::E6 => &[Good],
            Family::B | Family::C | Family::D | Family::F4 | Family::E7 => &[Good, P2],
            Family::G2 => &[Good, P3],
            Family::E8 => &[Good, P2, P3],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownContext(format!("unknown family {s:?}")))
    }
}

/// Which table or case split applies. `Good` is the variant that also
/// describes characteristic zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharVariant {
    Good,
    P2,
    P3,
}

impl CharVariant {
    pub fn name(self) -> &'static str {
        match self {
            CharVariant::Good => "good",
            CharVariant::P2 => "p2",
            CharVariant::P3 => "p3",
        }
    }
}

impl fmt::Display for CharVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CharVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "good" => Ok(CharVariant::Good),
            "p2" => Ok(CharVariant::P2),
            "p3" => Ok(CharVariant::P3),
            _ => Err(Error::UnknownContext(format!(
                "unknown characteristic {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupContext {
    family: Family,
    rank: u32,
    variant: CharVariant,
}

impl GroupContext {
    /// Validates rank and variant. Exceptional families accept only their own rank.
    pub fn new(family: Family, rank: u32, variant: CharVariant) -> Result<Self> {
        if let Some(fixed) = family.exceptional_rank() {
            if rank != fixed {
                return Err(Error::UnknownContext(format!(
                    "{family} has rank {fixed}, not {rank}"
                )));
            }
        } else if rank < family.min_rank() {
            return Err(Error::UnknownContext(format!(
                "{family}_{rank}: rank must be at least {}",
                family.min_rank()
            )));
        }
        if !family.variants().contains(&variant) {
            return Err(Error::UnknownContext(format!(
                "{family} has no separate {variant} variant"
            )));
        }
        Ok(GroupContext {
            family,
            rank,
            variant,
        })
    }

    /// Context for the characteristic given as `p2`/`p3`/`good`, folding a
    /// prime into `Good` when the family's data does not change there
    /// (e.g. `G2` in characteristic 2).
    pub fn for_characteristic(family: Family, rank: u32, requested: CharVariant) -> Result<Self> {
        let variant = if family.variants().contains(&requested) {
            requested
        } else {
            CharVariant::Good
        };
        GroupContext::new(family, rank, variant)
    }

    pub fn exceptional(family: Family, variant: CharVariant) -> Result<Self> {
        let rank = family
            .exceptional_rank()
            .ok_or_else(|| Error::UnknownContext(format!("{family} is not exceptional")))?;
        GroupContext::new(family, rank, variant)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn variant(&self) -> CharVariant {
        self.variant
    }

    /// The same group in characteristic zero.
    pub fn good(&self) -> GroupContext {
        GroupContext {
            variant: CharVariant::Good,
            ..*self
        }
    }

    pub fn is_good(&self) -> bool {
        self.variant == CharVariant::Good
    }

    /// Parity `κ` of the encoding `(r, p)`: 1 for B and C, 0 for D.
    pub fn kappa(&self) -> Option<u8> {
        match self.family {
            Family::B | Family::C => Some(1),
            Family::D => Some(0),
            _ => None,
        }
    }

    /// Dimension of the natural representation whose unipotent classes
    /// are recorded: `2n+1` for B, `2n` for C and D.
    pub fn natural_dimension(&self) -> Option<u32> {
        match self.family {
            Family::B => Some(2 * self.rank + 1),
            Family::C | Family::D => Some(2 * self.rank),
            _ => None,
        }
    }

    /// Contexts with distinct data for a family, in variant order.
    pub fn variants_of(family: Family, rank: u32) -> Result<Vec<GroupContext>> {
        family
            .variants()
            .iter()
            .map(|&v| GroupContext::new(family, rank, v))
            .collect()
    }
}

impl fmt::Display for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_exceptional() {
            write!(f, "{} ({})", self.family, self.variant)
        } else {
            write!(f, "{}_{} ({})", self.family, self.rank, self.variant)
        }
    }
}

/// A classical class `(r, p)` with its encoding parity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassicalPair {
    pub r: Partition,
    pub p: Partition,
    pub kappa: u8,
}

impl ClassicalPair {
    pub fn new(r: Partition, p: Partition, kappa: u8) -> Result<Self> {
        if kappa > 1 {
            return Err(Error::BadInput(format!(
                "kappa must be 0 or 1, got {kappa}"
            )));
        }
        if !in_s_kappa(&r, kappa) {
            return Err(Error::BadInput(format!(
                "r={r} is not an admissible χ-stable part"
            )));
        }
        if !in_p_tilde(&p) {
            return Err(Error::BadInput(format!("p={p} is not paired")));
        }
        Ok(ClassicalPair { r, p, kappa })
    }

    /// `r` empty and every part of `p` even.
    pub fn all_cycles_even_unstable(&self) -> bool {
        self.r.is_empty() && self.p.iter().all(|x| x % 2 == 0)
    }
}

impl fmt::Display for ClassicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={};p={}", self.r, self.p)
    }
}

/// A conjugacy class of the Weyl group of some context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassSymbol {
    TypeA(Partition),
    Classical(ClassicalPair),
    Exceptional(CarterLabel),
}

impl ClassSymbol {
    /// Parses the text form appropriate to `ctx` and validates it there.
    pub fn parse(ctx: &GroupContext, text: &str) -> Result<Self> {
        let text = text.trim();
        let symbol = match ctx.family {
            Family::A => ClassSymbol::TypeA(text.parse()?),
            Family::B | Family::C | Family::D => {
                let kappa = ctx.kappa().unwrap();
                let bad = || {
                    Error::BadInput(format!(
                        "expected r=<partition>;p=<partition>, got {text:?}"
                    ))
                };
                let (r, p) = text.split_once(';').ok_or_else(bad)?;
                let r = r.trim().strip_prefix("r=").ok_or_else(bad)?;
                let p = p.trim().strip_prefix("p=").ok_or_else(bad)?;
                ClassSymbol::Classical(ClassicalPair::new(r.parse()?, p.parse()?, kappa)?)
            }
            _ => ClassSymbol::Exceptional(text.parse()?),
        };
        symbol.validate(ctx)?;
        Ok(symbol)
    }

    /// Checks that the symbol names a class of `ctx`.
    pub fn validate(&self, ctx: &GroupContext) -> Result<()> {
        let invalid = || Error::InvalidClass {
            class: self.to_string(),
            context: ctx.to_string(),
        };
        match (ctx.family, self) {
            (Family::A, ClassSymbol::TypeA(p)) if p.size() == ctx.rank + 1 => Ok(()),
            (Family::B | Family::C | Family::D, ClassSymbol::Classical(pair))
                if Some(pair.kappa) == ctx.kappa()
                    && in_s_kappa(&pair.r, pair.kappa)
                    && in_p_tilde(&pair.p)
                    && pair.r.size() + pair.p.size() == 2 * ctx.rank =>
            {
                Ok(())
            }
            (f, ClassSymbol::Exceptional(label)) if f.is_exceptional() => {
                let table = exceptional_tables::load_table(ctx)?;
                if table.contains_class(label) {
                    Ok(())
                } else {
                    Err(invalid())
                }
            }
            _ => Err(invalid()),
        }
    }

    pub fn as_classical(&self) -> Option<&ClassicalPair> {
        match self {
            ClassSymbol::Classical(pair) => Some(pair),
            _ => None,
        }
    }
}

impl fmt::Display for ClassSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSymbol::TypeA(p) => write!(f, "{p}"),
            ClassSymbol::Classical(pair) => write!(f, "{pair}"),
            ClassSymbol::Exceptional(label) => write!(f, "{label}"),
        }
    }
}

/// Dimension of the fixed space of any element of the class on the
/// reflection representation.
pub fn m_of_class(ctx: &GroupContext, class: &ClassSymbol) -> Result<u32> {
    class.validate(ctx)?;
    Ok(match class {
        ClassSymbol::TypeA(p) => p.len() as u32 - 1,
        ClassSymbol::Classical(pair) => pair.p.len() as u32 / 2,
        ClassSymbol::Exceptional(label) => ctx.rank - label.rank(),
    })
}

/// For type D: does the `W`-class split into two `W'`-classes?
pub fn is_split_weyl_class(ctx: &GroupContext, class: &ClassSymbol) -> Result<bool> {
    if ctx.family != Family::D {
        return Err(Error::WrongFamily {
            expected: "D",
            got: ctx.family.to_string(),
        });
    }
    class.validate(ctx)?;
    Ok(class
        .as_classical()
        .is_some_and(ClassicalPair::all_cycles_even_unstable))
}

/// `true` when `ctx` is of type D and the class splits; `false` otherwise.
pub fn is_split(ctx: &GroupContext, class: &ClassSymbol) -> bool {
    ctx.family == Family::D
        && class
            .as_classical()
            .is_some_and(ClassicalPair::all_cycles_even_unstable)
}

/// Every class of `ctx`, duplicate-free, in a fixed order.
///
/// Classical classes are ordered by decreasing `|r|`, then `r` and `p`
/// lexicographically decreasing; exceptional classes follow the table rows.
pub fn enumerate_classes(ctx: &GroupContext) -> Result<Vec<ClassSymbol>> {
    match ctx.family {
        Family::A => Ok(enumerate_partitions(ctx.rank + 1, |_| true)?
            .into_iter()
            .map(ClassSymbol::TypeA)
            .collect()),
        Family::B | Family::C | Family::D => {
            let two_n = 2 * ctx.rank;
            if two_n > DEFAULT_ENUMERATION_BOUND {
                return Err(Error::BoundExceeded {
                    requested: two_n,
                    bound: DEFAULT_ENUMERATION_BOUND,
                });
            }
            let kappa = ctx.kappa().unwrap();
            Ok(enumerate_pairs(two_n, kappa)
                .into_iter()
                .map(ClassSymbol::Classical)
                .collect())
        }
        _ => Ok(exceptional_tables::load_table(ctx)?
            .classes()
            .map(|l| ClassSymbol::Exceptional(l.clone()))
            .collect()),
    }
}

/// All `(r, p)` with `r` in `S^κ`, `p` paired and `|r| + |p| = two_n`.
pub(crate) fn enumerate_pairs(two_n: u32, kappa: u8) -> Vec<ClassicalPair> {
    let mut out = Vec::new();
    for r_size in (0..=two_n).rev().step_by(2) {
        let rs = halved_partitions(r_size / 2, |h| kappa == 1 || h.len() % 2 == 0, |x| 2 * x);
        let ps = halved_partitions((two_n - r_size) / 2, |_| true, |x| x);
        for r in &rs {
            for p in &ps {
                let p = Partition::from_multiset(p.iter().flat_map(|x| [x, x]));
                out.push(ClassicalPair {
                    r: r.clone(),
                    p,
                    kappa,
                });
            }
        }
    }
    out
}

/// Partitions of `half` accepted by `keep`, with every part mapped by `scale`.
fn halved_partitions(
    half: u32,
    keep: impl Fn(&[u32]) -> bool,
    scale: impl Fn(u32) -> u32,
) -> Vec<Partition> {
    let mut out = Vec::new();
    fill_partitions(half, half, &mut Vec::new(), &mut |parts| {
        if keep(parts) {
            out.push(Partition::from_multiset(parts.iter().map(|&x| scale(x))));
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(f: Family, n: u32, v: CharVariant) -> GroupContext {
        GroupContext::new(f, n, v).unwrap()
    }

    fn class(c: &GroupContext, s: &str) -> ClassSymbol {
        ClassSymbol::parse(c, s).unwrap()
    }

    #[test]
    fn context_validation() {
        assert!(GroupContext::new(Family::D, 2, CharVariant::Good).is_err());
        assert!(GroupContext::new(Family::B, 2, CharVariant::P3).is_err());
        assert!(GroupContext::new(Family::F4, 5, CharVariant::Good).is_err());
        assert!(GroupContext::new(Family::G2, 2, CharVariant::P2).is_err());
        let g2 = GroupContext::for_characteristic(Family::G2, 2, CharVariant::P2).unwrap();
        assert_eq!(g2.variant(), CharVariant::Good);
        assert_eq!(ctx(Family::C, 3, CharVariant::P2).to_string(), "C_3 (p2)");
        assert_eq!(ctx(Family::E8, 8, CharVariant::P3).to_string(), "E8 (p3)");
    }

    #[test]
    fn fixed_space_dimensions() {
        let c3 = ctx(Family::C, 3, CharVariant::Good);
        assert_eq!(m_of_class(&c3, &class(&c3, "r=4;p=1,1")).unwrap(), 1);
        let d4 = ctx(Family::D, 4, CharVariant::Good);
        assert_eq!(m_of_class(&d4, &class(&d4, "r=4,4;p=")).unwrap(), 0);
        let f4 = ctx(Family::F4, 4, CharVariant::Good);
        assert_eq!(m_of_class(&f4, &class(&f4, "~A_1")).unwrap(), 3);
        let a3 = ctx(Family::A, 3, CharVariant::Good);
        assert_eq!(m_of_class(&a3, &class(&a3, "2,1,1")).unwrap(), 2);
    }

    #[test]
    fn invalid_classes_rejected() {
        let d4 = ctx(Family::D, 4, CharVariant::Good);
        // r must have an even number of parts in type D.
        assert!(ClassSymbol::parse(&d4, "r=8;p=").is_err());
        assert!(ClassSymbol::parse(&d4, "r=4;p=").is_err());
        assert!(ClassSymbol::parse(&d4, "r=4,4;p=1").is_err());
        let f4 = ctx(Family::F4, 4, CharVariant::Good);
        assert!(ClassSymbol::parse(&f4, "E_6").is_err());
        let a2 = ctx(Family::A, 2, CharVariant::Good);
        assert!(ClassSymbol::parse(&a2, "2,1,1").is_err());
    }

    #[test]
    fn split_classes() {
        let d4 = ctx(Family::D, 4, CharVariant::Good);
        assert!(is_split_weyl_class(&d4, &class(&d4, "r=;p=4,4")).unwrap());
        assert!(!is_split_weyl_class(&d4, &class(&d4, "r=4,4;p=")).unwrap());
        assert!(!is_split_weyl_class(&d4, &class(&d4, "r=;p=3,3,1,1")).unwrap());
        let c4 = ctx(Family::C, 4, CharVariant::Good);
        assert!(matches!(
            is_split_weyl_class(&c4, &class(&c4, "r=;p=4,4")),
            Err(Error::WrongFamily { .. })
        ));
    }

    #[test]
    fn enumerate_c2() {
        let c2 = ctx(Family::C, 2, CharVariant::Good);
        let texts: Vec<String> = enumerate_classes(&c2)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            texts,
            [
                "r=4;p=",
                "r=2,2;p=",
                "r=2;p=1,1",
                "r=;p=2,2",
                "r=;p=1,1,1,1"
            ]
        );
    }

    #[test]
    fn enumerate_d3() {
        let d3 = ctx(Family::D, 3, CharVariant::Good);
        let texts: Vec<String> = enumerate_classes(&d3)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(
            texts,
            [
                "r=4,2;p=",
                "r=2,2;p=1,1",
                "r=;p=3,3",
                "r=;p=2,2,1,1",
                "r=;p=1,1,1,1,1,1"
            ]
        );
    }

    #[test]
    fn exceptional_class_counts() {
        for (family, count) in [
            (Family::G2, 6),
            (Family::F4, 25),
            (Family::E6, 25),
            (Family::E7, 60),
            (Family::E8, 112),
        ] {
            for c in GroupContext::variants_of(family, family.exceptional_rank().unwrap()).unwrap()
            {
                assert_eq!(enumerate_classes(&c).unwrap().len(), count, "{c}");
            }
        }
    }
}
