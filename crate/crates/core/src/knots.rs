//! Knot quandles of twist-spun knots, built as generalized Alexander quandles
//! of the fiber group with its monodromy.
//!
//! For the `m`-twist-spun trefoil the fiber group is trivial, `Z/3`, `Q8`,
//! `SL(2,3)` or `SL(2,5)` for `m = 1..5`. For the 2-twist-spun 2-bridge knot
//! of type `(p, q)` it is `Z/p` with the inversion as monodromy, so the
//! quandle is dihedral of order `p` whatever `q` is.

use num_integer::Integer;
use thiserror::Error;

use crate::alexander::{alexander_quandle, AlexanderError};
use crate::group::{
    cyclic_group, enumerate_automorphisms_of_order, quaternion_group, special_linear_group,
    FiniteGroup, GroupAutomorphism, GroupError,
};
use crate::iso::are_isomorphic;
use crate::quandle::{is_connected, Quandle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error(
        "twist parameter m = {0} unsupported: only 1 <= m <= 5 give finite knot quandles \
         of the twist-spun trefoil (for m >= 6 the quandle is infinite)"
    )]
    UnsupportedTwist(u32),
    #[error("invalid 2-bridge type ({p}, {q}): {reason}")]
    InvalidTwoBridge { p: u64, q: i64, reason: &'static str },
    #[error("p = {0} must be odd and at least 3")]
    InvalidModulus(u64),
    #[error("tuple length must be at least 2, got {0}")]
    TupleTooShort(usize),
    #[error("no odd p <= {p_max} has {l} inequivalent classes")]
    NotFound { l: usize, p_max: u64 },
    #[error("no order-{0} automorphism gives a connected quandle")]
    NoConnectedMonodromy(u32),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseKnot {
    Trefoil,
    TwoBridge { p: u64, q: i64 },
}

/// The `m`-twist spin of a base knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistSpinSpec {
    m: u32,
    base: BaseKnot,
}

impl TwistSpinSpec {
    pub fn new(m: u32, base: BaseKnot) -> Result<Self, KnotError> {
        if m == 0 {
            return Err(KnotError::UnsupportedTwist(0));
        }
        if let BaseKnot::TwoBridge { p, q } = base {
            validate_two_bridge(p, q)?;
        }
        Ok(TwistSpinSpec { m, base })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn base(&self) -> BaseKnot {
        self.base
    }
}

/// `p` odd positive, `gcd(p, q) = 1`, `|q| < p`.
pub fn validate_two_bridge(p: u64, q: i64) -> Result<(), KnotError> {
    let bad = |reason| Err(KnotError::InvalidTwoBridge { p, q, reason });
    if p == 0 || p.is_multiple_of(2) {
        return bad("p must be odd and positive");
    }
    if q.unsigned_abs() >= p {
        return bad("|q| must be less than p");
    }
    if p.gcd(&q.unsigned_abs()) != 1 {
        return bad("p and q must be coprime");
    }
    Ok(())
}

/// Fiber group of the `m`-twist-spun trefoil.
pub fn trefoil_fiber_group(m: u32) -> Result<FiniteGroup, KnotError> {
    match m {
        1 => Ok(cyclic_group(1)?),
        2 => Ok(cyclic_group(3)?),
        3 => Ok(quaternion_group()),
        4 => Ok(special_linear_group(3)?),
        5 => Ok(special_linear_group(5)?),
        _ => Err(KnotError::UnsupportedTwist(m)),
    }
}

/// Monodromy permutation on [`trefoil_fiber_group`]`(m)`.
///
/// `m = 1` is the identity of the trivial group and `m = 2` the inversion of
/// `Z/3`. For `m = 3, 4, 5` it is the lexicographically least automorphism of
/// order exactly `m` whose Alexander quandle is connected.
pub fn trefoil_monodromy(group: &FiniteGroup, m: u32) -> Result<GroupAutomorphism<'_>, KnotError> {
    match m {
        1 => Ok(GroupAutomorphism::identity(group)),
        2 => Ok(GroupAutomorphism::inversion(group)?),
        3..=5 => {
            for aut in enumerate_automorphisms_of_order(group, m as usize, true)? {
                if is_connected(&alexander_quandle(group, &aut)?) {
                    return Ok(aut);
                }
            }
            Err(KnotError::NoConnectedMonodromy(m))
        }
        _ => Err(KnotError::UnsupportedTwist(m)),
    }
}

/// Knot quandle of a twist-spun trefoil together with how it was built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpunQuandle {
    pub m: u32,
    pub group_name: String,
    pub monodromy: Vec<usize>,
    pub quandle: Quandle,
}

pub fn build_twist_spun_trefoil(m: u32) -> Result<TwistSpunQuandle, KnotError> {
    let group = trefoil_fiber_group(m)?;
    let phi = trefoil_monodromy(&group, m)?;
    let quandle = alexander_quandle(&group, &phi)?.with_name(format!("trefoil-{m}"));
    Ok(TwistSpunQuandle {
        m,
        group_name: group.name().to_string(),
        monodromy: phi.into_perm(),
        quandle,
    })
}

/// Knot quandle of the `m`-twist-spun trefoil, `1 <= m <= 5`; orders 1, 3, 8, 24, 120.
pub fn twist_spun_trefoil_quandle(m: u32) -> Result<Quandle, KnotError> {
    build_twist_spun_trefoil(m).map(|t| t.quandle)
}

/// Knot quandle of the 2-twist-spun 2-bridge knot of type `(p, q)`: the
/// Alexander quandle of `Z/p` with inversion. `q` is only validated.
pub fn twist_spun_two_bridge_quandle(p: u64, q: i64) -> Result<Quandle, KnotError> {
    validate_two_bridge(p, q)?;
    if p < 3 {
        return Err(KnotError::InvalidModulus(p));
    }
    let group = cyclic_group(p as usize)?;
    let phi = GroupAutomorphism::inversion(&group)?;
    Ok(alexander_quandle(&group, &phi)?.with_name(format!("twobridge-{p}-{q}")))
}

/// Summary of all order-`m` monodromy candidates for the twist-spun trefoil.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyReport {
    pub m: u32,
    /// Number of automorphisms of order exactly `m`.
    pub candidates: usize,
    /// Those whose Alexander quandle is connected, lexicographically sorted.
    pub connected: Vec<Vec<usize>>,
    /// Partition of `connected` (by index) into quandle isomorphism classes.
    pub iso_classes: Vec<Vec<usize>>,
}

pub fn monodromy_candidates(m: u32) -> Result<MonodromyReport, KnotError> {
    let group = trefoil_fiber_group(m)?;
    let auts = enumerate_automorphisms_of_order(&group, m as usize, true)?;
    let candidates = auts.len();
    let mut connected = Vec::new();
    let mut quandles = Vec::new();
    for aut in auts {
        let q = alexander_quandle(&group, &aut)?;
        if is_connected(&q) {
            connected.push(aut.into_perm());
            quandles.push(q);
        }
    }
    let mut iso_classes: Vec<Vec<usize>> = Vec::new();
    for (i, q) in quandles.iter().enumerate() {
        match iso_classes.iter_mut().find(|c| are_isomorphic(&quandles[c[0]], q).is_isomorphic()) {
            Some(class) => class.push(i),
            None => iso_classes.push(vec![i]),
        }
    }
    Ok(MonodromyReport { m, candidates, connected, iso_classes })
}

fn check_modulus(p: u64) -> Result<(), KnotError> {
    if p < 3 || p.is_multiple_of(2) {
        Err(KnotError::InvalidModulus(p))
    } else {
        Ok(())
    }
}

/// Inverse of a unit `a` modulo `p`.
fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(p as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(p as i64) as u64)
}

fn residue(q: i64, p: u64) -> u64 {
    q.rem_euclid(p as i64) as u64
}

/// `{q, -q, q^-1, -q^-1} mod p`, sorted.
fn class_of(q: u64, p: u64) -> Vec<u64> {
    let inv = mod_inverse(q, p).expect("q is a unit mod p");
    let mut class = vec![q, (p - q) % p, inv, (p - inv) % p];
    class.sort_unstable();
    class.dedup();
    class
}

/// Whether the 2-twist-spun 2-bridge knots of types `(p, q)` and `(p, q')`
/// are equivalent, i.e. `q' = +-q^(+-1) mod p`.
pub fn two_bridge_equivalent(p: u64, q: i64, q_prime: i64) -> Result<bool, KnotError> {
    validate_two_bridge(p, q)?;
    validate_two_bridge(p, q_prime)?;
    if p == 1 {
        return Ok(true);
    }
    Ok(class_of(residue(q, p), p).contains(&residue(q_prime, p)))
}

/// Units mod `p` closed under negation and inversion. `representatives` is
/// sorted, so the minimal positive representative comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBridgeClass {
    pub p: u64,
    pub representatives: Vec<u64>,
}

impl TwoBridgeClass {
    pub fn minimal(&self) -> u64 {
        self.representatives[0]
    }
}

/// Partition of the units mod `p` by `q ~ +-q^(+-1)`, ordered by minimal
/// representative.
pub fn equivalence_classes(p: u64) -> Result<Vec<TwoBridgeClass>, KnotError> {
    check_modulus(p)?;
    let mut seen = vec![false; p as usize];
    let mut classes = Vec::new();
    for q in 1..p {
        if seen[q as usize] || q.gcd(&p) != 1 {
            continue;
        }
        let representatives = class_of(q, p);
        for &r in &representatives {
            seen[r as usize] = true;
        }
        classes.push(TwoBridgeClass { p, representatives });
    }
    Ok(classes)
}

/// `l` mutually inequivalent 2-bridge types sharing one modulus `p`; their
/// 2-twist spins all have the dihedral quandle of order `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequivalentTuple {
    pub p: u64,
    pub qs: Vec<u64>,
}

/// Smallest odd `p <= p_max` with at least `l` classes, and the minimal
/// representatives of its first `l` classes.
pub fn find_tuple(l: usize, p_max: u64) -> Result<InequivalentTuple, KnotError> {
    if l < 2 {
        return Err(KnotError::TupleTooShort(l));
    }
    let mut p = 3;
    while p <= p_max {
        let classes = equivalence_classes(p)?;
        if classes.len() >= l {
            let qs = classes.iter().take(l).map(TwoBridgeClass::minimal).collect();
            return Ok(InequivalentTuple { p, qs });
        }
        p += 2;
    }
    Err(KnotError::NotFound { l, p_max })
}
