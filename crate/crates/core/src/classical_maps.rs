//! The maps Φ (classes to unipotent classes) and Ψ (its minimizing section)
//! and the cross-characteristic maps ρ = Φ₀Ψ and π = ΦΨ₀.
//!
//! Classical types are computed combinatorially; exceptional types defer to
//! [`crate::exceptional_tables`]. Which classical map applies:
//!
//! | context      | Φ                               | unipotent classes          |
//! |--------------|---------------------------------|----------------------------|
//! | C, good      | [`iota`]                        | partitions in `T_{2n}`     |
//! | C or B, p=2  | [`iota2`]                       | marked partitions of `2n`  |
//! | B, good      | [`xi`] at κ=1, union with `p`   | partitions in `Q_{2n+1}`   |
//! | D, good      | [`xi`] at κ=0, union with `p`   | partitions in `Q_{2n}`     |
//! | D, p=2       | [`iota2`] on `κ=0` pairs        | marked, even part count    |

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exceptional_tables;
use crate::partitions::{
    enumerate_partitions, in_p_tilde, in_q, in_r, in_s_kappa, in_t, EpsilonMap, MarkedPartition,
    Partition,
};
use crate::weyl_classes::{
    enumerate_classes, m_of_class, CharVariant, ClassSymbol, ClassicalPair, Family, GroupContext,
};

/// A unipotent class of some context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnipotentSymbol {
    TypeA(Partition),
    Plain(Partition),
    Marked(MarkedPartition),
    Exceptional(String),
}

impl fmt::Display for UnipotentSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnipotentSymbol::TypeA(p) | UnipotentSymbol::Plain(p) => write!(f, "{p}"),
            UnipotentSymbol::Marked(m) => write!(f, "{m}"),
            UnipotentSymbol::Exceptional(name) => f.write_str(name),
        }
    }
}

impl UnipotentSymbol {
    /// Parses the text form used by `ctx` and validates it there.
    pub fn parse(ctx: &GroupContext, text: &str) -> Result<Self> {
        let text = text.trim();
        let symbol = match unipotent_kind(ctx) {
            Kind::TypeA => UnipotentSymbol::TypeA(text.parse()?),
            Kind::Symplectic | Kind::Orthogonal(_) => UnipotentSymbol::Plain(text.parse()?),
            Kind::Marked { .. } => UnipotentSymbol::Marked(text.parse()?),
            Kind::Exceptional => UnipotentSymbol::Exceptional(text.to_string()),
        };
        symbol.validate(ctx)?;
        Ok(symbol)
    }

    pub fn validate(&self, ctx: &GroupContext) -> Result<()> {
        let ok = match (unipotent_kind(ctx), self) {
            (Kind::TypeA, UnipotentSymbol::TypeA(p)) => p.size() == ctx.rank() + 1,
            (Kind::Symplectic, UnipotentSymbol::Plain(c)) => in_t(c, 2 * ctx.rank()),
            (Kind::Orthogonal(dim), UnipotentSymbol::Plain(c)) => in_q(c, dim),
            (Kind::Marked { even_length }, UnipotentSymbol::Marked(m)) => {
                in_t(m.partition(), 2 * ctx.rank())
                    && (!even_length || m.partition().len() % 2 == 0)
            }
            (Kind::Exceptional, UnipotentSymbol::Exceptional(name)) => {
                exceptional_tables::load_table(ctx)?.contains_unipotent(name)
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidUnipotent {
                unipotent: self.to_string(),
                context: ctx.to_string(),
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    TypeA,
    Symplectic,
    Orthogonal(u32),
    Marked { even_length: bool },
    Exceptional,
}

fn unipotent_kind(ctx: &GroupContext) -> Kind {
    match (ctx.family(), ctx.variant()) {
        (Family::A, _) => Kind::TypeA,
        (Family::C, CharVariant::Good) => Kind::Symplectic,
        (Family::B | Family::D, CharVariant::Good) => {
            Kind::Orthogonal(ctx.natural_dimension().unwrap())
        }
        (Family::B | Family::C, _) => Kind::Marked { even_length: false },
        (Family::D, _) => Kind::Marked { even_length: true },
        _ => Kind::Exceptional,
    }
}

fn check_pair(r: &Partition, p: &Partition, kappa: u8) -> Result<()> {
    if !in_s_kappa(r, kappa) || !in_p_tilde(p) {
        return Err(Error::BadInput(format!(
            "(r={r}, p={p}) is not a classical pair for κ={kappa}"
        )));
    }
    Ok(())
}

/// Multiset union of `r` and `p`.
pub fn iota(r: &Partition, p: &Partition) -> Result<Partition> {
    check_pair(r, p, 1)?;
    Ok(r.union(p))
}

/// [`iota`] together with the marking `ε(j) = 1` exactly when `j` is a part of `r`.
pub fn iota2(r: &Partition, p: &Partition) -> Result<MarkedPartition> {
    let c = iota(r, p)?;
    Ok(mark_by_r(c, r))
}

fn mark_by_r(c: Partition, r: &Partition) -> MarkedPartition {
    let mut eps = EpsilonMap::new();
    for j in crate::partitions::epsilon_domain(&c) {
        eps.insert(j, r.multiplicity(j) > 0);
    }
    MarkedPartition::new(c, eps).expect("domain built from c")
}

/// Ξ: shifts the entries of `r` by ψ ∈ {+1, 0, −1} and appends a part 1
/// when `σ + κ` is odd.
pub fn xi(r: &Partition, kappa: u8) -> Result<Partition> {
    if kappa > 1 || !in_s_kappa(r, kappa) {
        return Err(Error::BadInput(format!("r={r} is not in S^{kappa}")));
    }
    let parts = r.parts();
    let sigma = parts.len();
    let mut out: Vec<u32> = Vec::with_capacity(sigma + 1);
    for (i, &rt) in parts.iter().enumerate() {
        let t = i + 1;
        let shifted = if t % 2 == 1 && parts[..i].iter().all(|&rx| rt < rx) {
            rt + 1
        } else if t % 2 == 0 && parts[t..].iter().all(|&rx| rx < rt) {
            rt - 1
        } else {
            rt
        };
        out.push(shifted);
    }
    if (sigma + kappa as usize) % 2 == 1 {
        out.push(1);
    }
    debug_assert!(
        out.windows(2).all(|w| w[0] >= w[1]),
        "Ξ({r}) = {out:?} not ordered"
    );
    Ok(Partition::from_multiset(out))
}

/// Inverse of [`xi`] on corrected partitions: `r_k + ζ(k)` with
/// `ζ(k) = (−1)^k` for odd `r_k` and 0 otherwise, dropping the last entry
/// when it equals `κ`.
pub fn xi_inv(r: &Partition, kappa: u8) -> Result<Partition> {
    let in_corrected = in_r(r).map_err(|_| Error::NotInR(r.to_string()))?;
    if kappa > 1 || !in_corrected || r.size() % 2 != u32::from(kappa) {
        return Err(Error::NotInR(r.to_string()));
    }
    let parts = r.parts();
    let tau = parts.len();
    let keep = if tau > 0 && parts[tau - 1] == u32::from(kappa) {
        tau - 1
    } else {
        tau
    };
    let out: Vec<u32> = parts[..keep]
        .iter()
        .enumerate()
        .map(|(i, &rk)| match (rk % 2, (i + 1) % 2) {
            (0, _) => rk,
            (_, 1) => rk - 1,
            _ => rk + 1,
        })
        .collect();
    debug_assert!(out.windows(2).all(|w| w[0] >= w[1]) && !out.contains(&0));
    Ok(Partition::from_multiset(out))
}

/// `Ξ(r) ∪ p`, the orthogonal-group form of Φ.
pub fn iota_prime(r: &Partition, p: &Partition, kappa: u8) -> Result<Partition> {
    check_pair(r, p, kappa)?;
    Ok(xi(r, kappa)?.union(p))
}

/// Minimizer for the symplectic case: even parts to `r`, odd parts to `p`.
pub fn psi_even_r(c: &Partition) -> Result<(Partition, Partition)> {
    if !in_t(c, c.size()) {
        return Err(Error::BadInput(format!(
            "{c} has an odd part of odd multiplicity"
        )));
    }
    Ok((
        Partition::from_multiset(c.iter().filter(|x| x % 2 == 0)),
        Partition::from_multiset(c.iter().filter(|x| x % 2 == 1)),
    ))
}

/// Minimizer for marked partitions: odd parts, and even parts of even
/// multiplicity marked 0, go to `p`; every other part goes to `r`.
pub fn psi_marked(cm: &MarkedPartition) -> Result<(Partition, Partition)> {
    let c = cm.partition();
    if !in_t(c, c.size()) {
        return Err(Error::BadInput(format!(
            "{c} has an odd part of odd multiplicity"
        )));
    }
    let mut r = Vec::new();
    let mut p = Vec::new();
    for (e, q) in c.multiplicities() {
        let to_p = e % 2 == 1 || cm.epsilon().get(e) == Some(false);
        let target = if to_p { &mut p } else { &mut r };
        target.extend(std::iter::repeat_n(e, q));
    }
    Ok((Partition::from_multiset(r), Partition::from_multiset(p)))
}

/// The `p`-minimal preimage `(r̃, p)` of `c` under "corrected partition
/// union paired partition", built part value by part value.
pub fn iota_tilde_prime(c: &Partition) -> Result<(Partition, Partition)> {
    if !in_q(c, c.size()) {
        return Err(Error::NotInQ(c.to_string()));
    }
    let mut r = Vec::new();
    let mut p = Vec::new();
    // 1-based position in the odd-part list where each odd value's block starts.
    let mut block_start = 1usize;
    let mults = c.multiplicities();
    for &(e, q) in mults.iter().filter(|(e, _)| e % 2 == 1) {
        let to_r = if q % 2 == 1 {
            1
        } else if block_start.is_multiple_of(2) {
            2
        } else {
            0
        };
        r.extend(std::iter::repeat_n(e, to_r));
        p.extend(std::iter::repeat_n(e, q - to_r));
        block_start += q;
    }
    let odd_r = r.clone();
    for &(e, q) in mults.iter().filter(|(e, _)| e % 2 == 0) {
        let target = if in_even_gap(&odd_r, e) {
            &mut p
        } else {
            &mut r
        };
        target.extend(std::iter::repeat_n(e, q));
    }
    Ok((Partition::from_multiset(r), Partition::from_multiset(p)))
}

/// Whether `e` lies in an even-indexed gap of the decreasing list `odd`:
/// above `odd[0]`, strictly between `odd[2v-1]` and `odd[2v]`, or below the
/// last entry when the list has even length. An empty list has a single
/// gap, of index 0.
fn in_even_gap(odd: &[u32], e: u32) -> bool {
    // Gap index = number of odd entries above e.
    let above = odd.iter().filter(|&&x| x > e).count();
    above % 2 == 0
}

/// Ψ for the orthogonal cases: the rule-based preimage with Ξ undone.
pub fn psi_orthogonal(c: &Partition, kappa: u8) -> Result<(Partition, Partition)> {
    let (r_tilde, p) = iota_tilde_prime(c)?;
    Ok((xi_inv(&r_tilde, kappa)?, p))
}

/// Φ: conjugacy class to unipotent class.
pub fn phi(ctx: &GroupContext, class: &ClassSymbol) -> Result<UnipotentSymbol> {
    class.validate(ctx)?;
    match class {
        ClassSymbol::TypeA(p) => Ok(UnipotentSymbol::TypeA(p.clone())),
        ClassSymbol::Classical(ClassicalPair { r, p, kappa }) => Ok(match unipotent_kind(ctx) {
            Kind::Symplectic => UnipotentSymbol::Plain(iota(r, p)?),
            Kind::Orthogonal(_) => UnipotentSymbol::Plain(iota_prime(r, p, *kappa)?),
            Kind::Marked { .. } => {
                check_pair(r, p, *kappa)?;
                UnipotentSymbol::Marked(mark_by_r(r.union(p), r))
            }
            _ => unreachable!("classical pair validated for a classical context"),
        }),
        ClassSymbol::Exceptional(label) => Ok(UnipotentSymbol::Exceptional(
            exceptional_tables::phi_lookup(ctx, label)?,
        )),
    }
}

/// Ψ: the unique class of smallest fixed-space dimension in the fiber of `u`.
pub fn psi(ctx: &GroupContext, u: &UnipotentSymbol) -> Result<ClassSymbol> {
    u.validate(ctx)?;
    let pair = |(r, p): (Partition, Partition)| -> Result<ClassSymbol> {
        let class = ClassSymbol::Classical(ClassicalPair::new(r, p, ctx.kappa().unwrap())?);
        class.validate(ctx)?;
        Ok(class)
    };
    match (unipotent_kind(ctx), u) {
        (Kind::TypeA, UnipotentSymbol::TypeA(p)) => Ok(ClassSymbol::TypeA(p.clone())),
        (Kind::Symplectic, UnipotentSymbol::Plain(c)) => pair(psi_even_r(c)?),
        (Kind::Orthogonal(_), UnipotentSymbol::Plain(c)) => {
            pair(psi_orthogonal(c, ctx.kappa().unwrap())?)
        }
        (Kind::Marked { .. }, UnipotentSymbol::Marked(m)) => pair(psi_marked(m)?),
        (Kind::Exceptional, UnipotentSymbol::Exceptional(name)) => Ok(ClassSymbol::Exceptional(
            exceptional_tables::psi_lookup(ctx, name)?,
        )),
        _ => unreachable!("symbol validated against its context"),
    }
}

/// ρ = Φ₀Ψ: from unipotent classes of `ctx` to those of characteristic zero.
pub fn rho(ctx: &GroupContext, u: &UnipotentSymbol) -> Result<UnipotentSymbol> {
    phi(&ctx.good(), &psi(ctx, u)?)
}

/// π = ΦΨ₀: from unipotent classes of characteristic zero into those of `ctx`.
pub fn pi(ctx: &GroupContext, u0: &UnipotentSymbol) -> Result<UnipotentSymbol> {
    phi(ctx, &psi(&ctx.good(), u0)?)
}

/// For type D: the unipotent class splits into two classes of the
/// special orthogonal group (all parts even, and unmarked in characteristic 2).
pub fn is_split_unipotent(ctx: &GroupContext, u: &UnipotentSymbol) -> bool {
    if ctx.family() != Family::D {
        return false;
    }
    match u {
        UnipotentSymbol::Plain(c) => c.iter().all(|x| x % 2 == 0),
        UnipotentSymbol::Marked(m) => {
            m.partition()
                .multiplicities()
                .iter()
                .all(|&(v, q)| v % 2 == 0 && q % 2 == 0)
                && m.epsilon().iter().all(|(_, e)| !e)
        }
        _ => false,
    }
}

/// Every unipotent class of `ctx` in a fixed order.
pub fn enumerate_unipotents(ctx: &GroupContext) -> Result<Vec<UnipotentSymbol>> {
    let two_n = 2 * ctx.rank();
    Ok(match unipotent_kind(ctx) {
        Kind::TypeA => enumerate_partitions(ctx.rank() + 1, |_| true)?
            .into_iter()
            .map(UnipotentSymbol::TypeA)
            .collect(),
        Kind::Symplectic => enumerate_partitions(two_n, |c| in_t(c, two_n))?
            .into_iter()
            .map(UnipotentSymbol::Plain)
            .collect(),
        Kind::Orthogonal(dim) => enumerate_partitions(dim, |c| in_q(c, dim))?
            .into_iter()
            .map(UnipotentSymbol::Plain)
            .collect(),
        Kind::Marked { even_length } => enumerate_partitions(two_n, |c| {
            in_t(c, two_n) && (!even_length || c.len() % 2 == 0)
        })?
        .iter()
        .flat_map(MarkedPartition::all_markings)
        .map(UnipotentSymbol::Marked)
        .collect(),
        Kind::Exceptional => exceptional_tables::load_table(ctx)?
            .unipotents()
            .map(|n| UnipotentSymbol::Exceptional(n.to_string()))
            .collect(),
    })
}

/// All fibers of Φ, computed by applying Φ to every class. Each fiber is
/// sorted by fixed-space dimension, ties kept in enumeration order; for
/// exceptional types this is the table order.
pub fn compute_fibers(ctx: &GroupContext) -> Result<BTreeMap<UnipotentSymbol, Vec<ClassSymbol>>> {
    let mut fibers: BTreeMap<UnipotentSymbol, Vec<(u32, ClassSymbol)>> = BTreeMap::new();
    for class in enumerate_classes(ctx)? {
        let u = phi(ctx, &class)?;
        let m = m_of_class(ctx, &class)?;
        fibers.entry(u).or_default().push((m, class));
    }
    Ok(fibers
        .into_iter()
        .map(|(u, mut v)| {
            if !ctx.family().is_exceptional() {
                v.sort_by_key(|(m, _)| *m);
            }
            (u, v.into_iter().map(|(_, c)| c).collect())
        })
        .collect())
}

/// The fiber of `u`, ordered as in [`compute_fibers`].
pub fn fiber(ctx: &GroupContext, u: &UnipotentSymbol) -> Result<Vec<ClassSymbol>> {
    u.validate(ctx)?;
    if let UnipotentSymbol::Exceptional(name) = u {
        return Ok(exceptional_tables::fiber(ctx, name)?
            .into_iter()
            .map(ClassSymbol::Exceptional)
            .collect());
    }
    let mut out: Vec<(u32, ClassSymbol)> = Vec::new();
    for class in enumerate_classes(ctx)? {
        if phi(ctx, &class)? == *u {
            out.push((m_of_class(ctx, &class)?, class));
        }
    }
    out.sort_by_key(|(m, _)| *m);
    Ok(out.into_iter().map(|(_, c)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ctx(f: Family, n: u32, v: CharVariant) -> GroupContext {
        GroupContext::new(f, n, v).unwrap()
    }

    fn class(c: &GroupContext, s: &str) -> ClassSymbol {
        ClassSymbol::parse(c, s).unwrap()
    }

    fn unip(c: &GroupContext, s: &str) -> UnipotentSymbol {
        UnipotentSymbol::parse(c, s).unwrap()
    }

    #[test]
    fn iota_unions() {
        assert_eq!(iota(&p(&[4]), &p(&[1, 1])).unwrap(), p(&[4, 1, 1]));
        assert_eq!(iota(&p(&[]), &p(&[])).unwrap(), p(&[]));
        assert_eq!(
            iota(&p(&[2, 2]), &p(&[3, 3, 1, 1])).unwrap(),
            p(&[3, 3, 2, 2, 1, 1])
        );
        assert!(iota(&p(&[3]), &p(&[])).is_err());
        assert!(iota(&p(&[2]), &p(&[2])).is_err());
    }

    #[test]
    fn iota2_marks() {
        let m = iota2(&p(&[2, 2]), &p(&[4, 4])).unwrap();
        assert_eq!(m.to_string(), "4,4,2,2[4:0;2:1]");
        assert_eq!(iota2(&p(&[2]), &p(&[2, 2])).unwrap().to_string(), "2,2,2[]");
        assert_eq!(iota2(&p(&[4, 2]), &p(&[])).unwrap().to_string(), "4,2[]");
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi(&p(&[4, 4]), 0).unwrap(), p(&[5, 3]));
        assert_eq!(xi(&p(&[2, 2]), 1).unwrap(), p(&[3, 1, 1]));
        assert_eq!(xi(&p(&[2, 2, 2, 2]), 0).unwrap(), p(&[3, 2, 2, 1]));
        assert_eq!(xi(&p(&[]), 1).unwrap(), p(&[1]));
        assert_eq!(xi(&p(&[]), 0).unwrap(), p(&[]));
        assert!(xi(&p(&[4]), 0).is_err());
        assert!(xi(&p(&[3, 3]), 0).is_err());
    }

    #[test]
    fn xi_inverse_values() {
        assert_eq!(xi_inv(&p(&[5, 3]), 0).unwrap(), p(&[4, 4]));
        assert_eq!(xi_inv(&p(&[3, 1, 1]), 1).unwrap(), p(&[2, 2]));
        assert_eq!(xi_inv(&p(&[]), 0).unwrap(), p(&[]));
        assert_eq!(xi_inv(&p(&[1]), 1).unwrap(), p(&[]));
        assert!(matches!(xi_inv(&p(&[4, 4]), 0), Err(Error::NotInR(_))));
        assert!(matches!(xi_inv(&p(&[5, 3]), 1), Err(Error::NotInR(_))));
        assert!(matches!(xi_inv(&p(&[4, 3, 1]), 0), Err(Error::NotInR(_))));
    }

    #[test]
    fn phi_examples() {
        let b4 = ctx(Family::B, 4, CharVariant::Good);
        assert_eq!(
            phi(&b4, &class(&b4, "r=;p=3,3,1,1")).unwrap(),
            unip(&b4, "3,3,1,1,1")
        );
        let c2 = ctx(Family::C, 2, CharVariant::Good);
        assert_eq!(
            phi(&c2, &class(&c2, "r=2;p=1,1")).unwrap(),
            unip(&c2, "2,1,1")
        );
        let d4 = ctx(Family::D, 4, CharVariant::Good);
        assert_eq!(phi(&d4, &class(&d4, "r=4,4;p=")).unwrap(), unip(&d4, "5,3"));
        let d4p2 = ctx(Family::D, 4, CharVariant::P2);
        assert_eq!(
            phi(&d4p2, &class(&d4p2, "r=;p=4,4")).unwrap(),
            unip(&d4p2, "4,4[4:0]")
        );
        let a3 = ctx(Family::A, 3, CharVariant::Good);
        assert_eq!(phi(&a3, &class(&a3, "2,2")).unwrap(), unip(&a3, "2,2"));
    }

    #[test]
    fn minimizer_rules() {
        assert_eq!(psi_even_r(&p(&[2, 1, 1])).unwrap(), (p(&[2]), p(&[1, 1])));
        assert_eq!(psi_even_r(&p(&[4, 4])).unwrap(), (p(&[4, 4]), p(&[])));
        assert_eq!(
            psi_even_r(&p(&[1, 1, 1, 1])).unwrap(),
            (p(&[]), p(&[1, 1, 1, 1]))
        );
        assert!(psi_even_r(&p(&[3, 1])).is_err());

        let m: MarkedPartition = "4,4,2,2[4:0;2:1]".parse().unwrap();
        assert_eq!(psi_marked(&m).unwrap(), (p(&[2, 2]), p(&[4, 4])));
        let m: MarkedPartition = "2,2,2,1,1[]".parse().unwrap();
        assert_eq!(psi_marked(&m).unwrap(), (p(&[2, 2, 2]), p(&[1, 1])));

        assert_eq!(iota_tilde_prime(&p(&[4, 4])).unwrap(), (p(&[]), p(&[4, 4])));
        assert_eq!(iota_tilde_prime(&p(&[5, 3])).unwrap(), (p(&[5, 3]), p(&[])));
        // Three 3s: one to r, a pair to p; the 1s start at position 4 (even).
        assert_eq!(
            iota_tilde_prime(&p(&[3, 3, 3, 1, 1])).unwrap(),
            (p(&[3, 1, 1]), p(&[3, 3]))
        );
        assert!(matches!(
            iota_tilde_prime(&p(&[4, 1])),
            Err(Error::NotInQ(_))
        ));
    }

    #[test]
    fn psi_examples() {
        let c2 = ctx(Family::C, 2, CharVariant::Good);
        assert_eq!(
            psi(&c2, &unip(&c2, "2,1,1")).unwrap(),
            class(&c2, "r=2;p=1,1")
        );
        let d4 = ctx(Family::D, 4, CharVariant::Good);
        let s = psi(&d4, &unip(&d4, "4,4")).unwrap();
        assert_eq!(s, class(&d4, "r=;p=4,4"));
        assert!(crate::weyl_classes::is_split_weyl_class(&d4, &s).unwrap());
        let f4 = GroupContext::exceptional(Family::F4, CharVariant::Good).unwrap();
        assert_eq!(
            psi(&f4, &unip(&f4, "C_3(a_1)")).unwrap(),
            class(&f4, "A_3+~A_1")
        );
    }

    #[test]
    fn rho_examples() {
        let c2 = ctx(Family::C, 2, CharVariant::P2);
        let c2g = c2.good();
        assert_eq!(rho(&c2, &unip(&c2, "2,2[2:1]")).unwrap(), unip(&c2g, "2,2"));
        assert_eq!(rho(&c2, &unip(&c2, "2,2[2:0]")).unwrap(), unip(&c2g, "2,2"));
        let f4 = GroupContext::exceptional(Family::F4, CharVariant::P2).unwrap();
        assert_eq!(
            rho(&f4, &unip(&f4, "(B_2)_2")).unwrap(),
            unip(&f4.good(), "B_2")
        );
    }

    #[test]
    fn pi_examples() {
        let c2 = ctx(Family::C, 2, CharVariant::P2);
        assert_eq!(
            pi(&c2, &unip(&c2.good(), "2,2")).unwrap(),
            unip(&c2, "2,2[2:1]")
        );
        assert_eq!(
            pi(&c2, &unip(&c2.good(), "2,1,1")).unwrap(),
            unip(&c2, "2,1,1[]")
        );
        let g2 = GroupContext::exceptional(Family::G2, CharVariant::P3).unwrap();
        assert_eq!(
            pi(&g2, &unip(&g2.good(), "~A_1")).unwrap(),
            unip(&g2, "~A_1")
        );
    }

    #[test]
    fn unipotent_validation() {
        let d4p2 = ctx(Family::D, 4, CharVariant::P2);
        // odd number of parts is excluded in type D, characteristic 2
        assert!(UnipotentSymbol::parse(&d4p2, "4,2,2[]").is_err());
        let b2 = ctx(Family::B, 2, CharVariant::Good);
        assert!(UnipotentSymbol::parse(&b2, "4,1").is_err());
        assert!(UnipotentSymbol::parse(&b2, "3,1,1").is_ok());
        let e6 = GroupContext::exceptional(Family::E6, CharVariant::Good).unwrap();
        assert!(UnipotentSymbol::parse(&e6, "(A_5)_2").is_err());
    }

    #[test]
    fn split_unipotents() {
        let d4 = ctx(Family::D, 4, CharVariant::Good);
        assert!(is_split_unipotent(&d4, &unip(&d4, "4,4")));
        assert!(is_split_unipotent(&d4, &unip(&d4, "2,2,2,2")));
        assert!(!is_split_unipotent(&d4, &unip(&d4, "5,3")));
        let d4p2 = ctx(Family::D, 4, CharVariant::P2);
        assert!(is_split_unipotent(&d4p2, &unip(&d4p2, "4,4[4:0]")));
        assert!(!is_split_unipotent(&d4p2, &unip(&d4p2, "4,4[4:1]")));
        assert!(!is_split_unipotent(&d4p2, &unip(&d4p2, "4,2,1,1[]")));
    }

    #[test]
    fn fibers_are_sorted() {
        let c2 = ctx(Family::C, 2, CharVariant::Good);
        let f = fiber(&c2, &unip(&c2, "2,2")).unwrap();
        assert_eq!(f, vec![class(&c2, "r=2,2;p="), class(&c2, "r=;p=2,2")]);
    }
}
