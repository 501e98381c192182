//! A full dump of Φ, Ψ, ρ, π and τ for one context, as text records.
//!
//! One record per line; fields are separated by tabs and each field is
//! `key=value`, split at the first `=` (values such as `r=4;p=` contain
//! `=` and `;` but never a tab). The first field names the record kind;
//! below, `\t` stands for a tab:
//!
//! ```text
//! context=C_2 (p2)\tfamily=C\trank=2\tchar=p2
//! class=r=2;p=1,1\tm=1\tphi=2,1,1[]\tsplit=0
//! unipotent=2,2[2:1]\tpsi=r=2,2;p=\trho=2,2\tsplit=0
//! pi=2,2\timage=2,2[2:1]
//! special=r=4;p=\ttau=y=2;z=\tsplit=0
//! ```
//!
//! `rho` and `pi` values live in characteristic 0.

use std::fmt::Write as _;

use crate::classical_maps::{
    enumerate_unipotents, is_split_unipotent, phi, pi, psi, rho, UnipotentSymbol,
};
use crate::error::{Error, Result};
use crate::special_classes::{special_classes, Bipartition, RepLabel};
use crate::weyl_classes::{
    enumerate_classes, is_split, m_of_class, CharVariant, ClassSymbol, Family, GroupContext,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEntry {
    pub class: ClassSymbol,
    pub m: u32,
    pub phi: UnipotentSymbol,
    pub split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentEntry {
    pub unipotent: UnipotentSymbol,
    pub psi: ClassSymbol,
    pub rho: UnipotentSymbol,
    pub split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiEntry {
    pub source: UnipotentSymbol,
    pub image: UnipotentSymbol,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialEntry {
    pub class: ClassSymbol,
    pub tau: RepLabel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atlas {
    pub context: GroupContext,
    pub classes: Vec<ClassEntry>,
    pub unipotents: Vec<UnipotentEntry>,
    pub pi: Vec<PiEntry>,
    pub specials: Vec<SpecialEntry>,
}

pub fn build_atlas(ctx: &GroupContext) -> Result<Atlas> {
    let good = ctx.good();
    let classes = enumerate_classes(ctx)?
        .into_iter()
        .map(|class| {
            Ok(ClassEntry {
                m: m_of_class(ctx, &class)?,
                phi: phi(ctx, &class)?,
                split: is_split(ctx, &class),
                class,
            })
        })
        .collect::<Result<_>>()?;
    let unipotents = enumerate_unipotents(ctx)?
        .into_iter()
        .map(|u| {
            Ok(UnipotentEntry {
                psi: psi(ctx, &u)?,
                rho: rho(ctx, &u)?,
                split: is_split_unipotent(ctx, &u),
                unipotent: u,
            })
        })
        .collect::<Result<_>>()?;
    let pi = enumerate_unipotents(&good)?
        .into_iter()
        .map(|u0| {
            Ok(PiEntry {
                image: pi(ctx, &u0)?,
                source: u0,
            })
        })
        .collect::<Result<_>>()?;
    let specials = special_classes(ctx)?
        .into_iter()
        .map(|(image, tau)| SpecialEntry {
            class: image.class,
            tau,
        })
        .collect();
    Ok(Atlas {
        context: *ctx,
        classes,
        unipotents,
        pi,
        specials,
    })
}

fn flag(b: bool) -> u8 {
    u8::from(b)
}

impl Atlas {
    pub fn to_records(&self) -> String {
        let ctx = &self.context;
        let mut out = String::new();
        writeln!(
            out,
            "context={ctx}\tfamily={}\trank={}\tchar={}",
            ctx.family(),
            ctx.rank(),
            ctx.variant()
        )
        .unwrap();
        for e in &self.classes {
            writeln!(
                out,
                "class={}\tm={}\tphi={}\tsplit={}",
                e.class,
                e.m,
                e.phi,
                flag(e.split)
            )
            .unwrap();
        }
        for e in &self.unipotents {
            writeln!(
                out,
                "unipotent={}\tpsi={}\trho={}\tsplit={}",
                e.unipotent,
                e.psi,
                e.rho,
                flag(e.split)
            )
            .unwrap();
        }
        for e in &self.pi {
            writeln!(out, "pi={}\timage={}", e.source, e.image).unwrap();
        }
        for e in &self.specials {
            writeln!(
                out,
                "special={}\ttau={}\tsplit={}",
                e.class,
                e.tau,
                flag(e.tau.is_split())
            )
            .unwrap();
        }
        out
    }
}

/// Splits one record line into `(key, value)` fields.
pub fn record_fields(line: &str) -> Vec<(&str, &str)> {
    line.split('\t')
        .map(|f| f.split_once('=').unwrap_or((f, "")))
        .collect()
}

fn parse_flag(v: &str) -> Result<bool> {
    match v {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(Error::BadInput(format!("flag must be 0 or 1, got {v:?}"))),
    }
}

fn parse_tau(ctx: &GroupContext, text: &str, split: bool) -> Result<RepLabel> {
    Ok(match ctx.family() {
        Family::A => RepLabel::Partition(text.parse()?),
        Family::B | Family::C | Family::D => RepLabel::Bipartition {
            label: text.parse::<Bipartition>()?,
            split,
        },
        _ => RepLabel::Exceptional(text.to_string()),
    })
}

/// Reads back the output of [`Atlas::to_records`].
pub fn parse_atlas(text: &str) -> Result<Atlas> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines
        .next()
        .ok_or_else(|| Error::BadInput("empty atlas".into()))?;
    let ctx = match record_fields(head).as_slice() {
        [("context", _), ("family", f), ("rank", n), ("char", v)] => {
            let family: Family = f.parse()?;
            let rank: u32 = n
                .parse()
                .map_err(|_| Error::BadInput(format!("bad rank {n:?}")))?;
            GroupContext::new(family, rank, v.parse::<CharVariant>()?)?
        }
        _ => return Err(Error::BadInput(format!("bad atlas header {head:?}"))),
    };
    let good = ctx.good();
    let mut atlas = Atlas {
        context: ctx,
        classes: Vec::new(),
        unipotents: Vec::new(),
        pi: Vec::new(),
        specials: Vec::new(),
    };
    for (i, line) in lines {
        let bad = || Error::BadInput(format!("atlas line {}: {line:?}", i + 1));
        match record_fields(line).as_slice() {
            [("class", c), ("m", m), ("phi", u), ("split", s)] => atlas.classes.push(ClassEntry {
                class: ClassSymbol::parse(&ctx, c)?,
                m: m.parse().map_err(|_| bad())?,
                phi: UnipotentSymbol::parse(&ctx, u)?,
                split: parse_flag(s)?,
            }),
            [("unipotent", u), ("psi", c), ("rho", r), ("split", s)] => {
                atlas.unipotents.push(UnipotentEntry {
                    unipotent: UnipotentSymbol::parse(&ctx, u)?,
                    psi: ClassSymbol::parse(&ctx, c)?,
                    rho: UnipotentSymbol::parse(&good, r)?,
                    split: parse_flag(s)?,
                })
            }
            [("pi", u0), ("image", u)] => atlas.pi.push(PiEntry {
                source: UnipotentSymbol::parse(&good, u0)?,
                image: UnipotentSymbol::parse(&ctx, u)?,
            }),
            [("special", c), ("tau", t), ("split", s)] => atlas.specials.push(SpecialEntry {
                class: ClassSymbol::parse(&ctx, c)?,
                tau: parse_tau(&ctx, t, parse_flag(s)?)?,
            }),
            _ => return Err(bad()),
        }
    }
    Ok(atlas)
}
