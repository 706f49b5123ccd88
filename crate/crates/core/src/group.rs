//! Finite groups as explicit multiplication tables.
//!
//! Elements are indices `0..n` with the identity at index 0. Besides the
//! table-level type this module builds the handful of concrete groups needed
//! for twist-spun trefoils (cyclic, quaternion, `SL(2, F_q)`) and validates
//! and enumerates automorphisms.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Largest group order accepted by [`enumerate_automorphisms_of_order`].
pub const MAX_ENUMERATION_ORDER: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cyclic group order must be at least 1")]
    ZeroOrder,
    #[error("unsupported field size {0}, expected 3 or 5")]
    UnsupportedField(u32),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("permutation has length {found} but the group has order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("permutation is not a bijection: image {0} is out of range or repeated")]
    NotBijective(usize),
    #[error("not a homomorphism at ({a}, {b}): perm[a*b] != perm[a]*perm[b]")]
    NotHomomorphism { a: usize, b: usize },
    #[error("element {element} out of range for group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group of order {0} exceeds the enumeration bound of {MAX_ENUMERATION_ORDER}")]
    GroupTooLarge(usize),
}

/// A finite group given by its Cayley table, identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a row-major Cayley table and checks the group axioms
    /// exhaustively (identity at 0, inverses, associativity).
    pub fn from_table(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut mult = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(GroupError::InvalidTable(format!(
                        "entry ({a}, {b}) = {c} out of range"
                    )));
                }
            }
            mult.extend_from_slice(row);
        }
        Self::from_flat(name.into(), n, mult)
    }

    fn from_flat(name: String, n: usize, mult: Vec<usize>) -> Result<Self, GroupError> {
        for a in 0..n {
            if mult[a] != a || mult[a * n] != a {
                return Err(GroupError::InvalidTable(format!(
                    "element 0 is not a two-sided identity at {a}"
                )));
            }
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            let mut found = None;
            for b in 0..n {
                if mult[a * n + b] == 0 {
                    if found.is_some() {
                        return Err(GroupError::InvalidTable(format!(
                            "element {a} has more than one right inverse"
                        )));
                    }
                    found = Some(b);
                }
            }
            match found {
                Some(b) => inv[a] = b,
                None => {
                    return Err(GroupError::InvalidTable(format!("element {a} has no inverse")))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mult[a * n + b];
                for c in 0..n {
                    if mult[ab * n + c] != mult[a * n + mult[b * n + c]] {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { name, order: n, mult, inv })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.mult[a * self.order..(a + 1) * self.order]
    }

    /// Order of the element `a` in the group.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`, as a sorted list of elements.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// Greedy generating set: scan elements in index order and keep each one
    /// that enlarges the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        for x in 1..self.order {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.generated(&gens);
            }
        }
        gens
    }

    /// Exhaustive re-check of identity, inverse and associativity laws.
    pub fn verify_axioms(&self) -> Result<(), GroupError> {
        Self::from_flat(self.name.clone(), self.order, self.mult.clone()).map(|_| ())
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

/// `Z/pZ` under addition.
pub fn cyclic_group(p: usize) -> Result<FiniteGroup, GroupError> {
    if p == 0 {
        return Err(GroupError::ZeroOrder);
    }
    let mult = (0..p).flat_map(|a| (0..p).map(move |b| (a + b) % p)).collect();
    FiniteGroup::from_flat(format!("Z/{p}"), p, mult)
}

/// The quaternion group, elements indexed `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion_group() -> FiniteGroup {
    // unit products over {1, i, j, k}: (negated, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let mut mult = Vec::with_capacity(64);
    for a in 0..8 {
        for b in 0..8 {
            let (neg, unit) = UNIT[a / 2][b / 2];
            let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
            mult.push(2 * unit + usize::from(sign));
        }
    }
    FiniteGroup::from_flat("Q8".into(), 8, mult).expect("quaternion table is a group")
}

/// `SL(2, F_q)` for `q` in {3, 5}: the binary tetrahedral group (order 24)
/// and the binary icosahedral group (order 120).
///
/// Matrices `[[a, b], [c, d]]` are indexed with the identity first and the
/// rest in lexicographic order of `(a, b, c, d)`.
pub fn special_linear_group(q: u32) -> Result<FiniteGroup, GroupError> {
    if q != 3 && q != 5 {
        return Err(GroupError::UnsupportedField(q));
    }
    let q = q as usize;
    let identity = [1, 0, 0, 1];
    let mut elements = vec![identity];
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = [a, b, c, d];
                    if (a * d + q * q - b * c) % q == 1 && m != identity {
                        elements.push(m);
                    }
                }
            }
        }
    }
    let index: HashMap<[usize; 4], usize> =
        elements.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let n = elements.len();
    let mut mult = Vec::with_capacity(n * n);
    for x in &elements {
        for y in &elements {
            let prod = [
                (x[0] * y[0] + x[1] * y[2]) % q,
                (x[0] * y[1] + x[1] * y[3]) % q,
                (x[2] * y[0] + x[3] * y[2]) % q,
                (x[2] * y[1] + x[3] * y[3]) % q,
            ];
            mult.push(index[&prod]);
        }
    }
    FiniteGroup::from_flat(format!("SL(2,{q})"), n, mult)
}

/// A validated automorphism of a borrowed group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAutomorphism<'g> {
    group: &'g FiniteGroup,
    perm: Vec<usize>,
}

impl<'g> GroupAutomorphism<'g> {
    pub fn identity(group: &'g FiniteGroup) -> Self {
        GroupAutomorphism { group, perm: (0..group.order()).collect() }
    }

    /// `a -> a^-1`; an automorphism only when the group is abelian.
    pub fn inversion(group: &'g FiniteGroup) -> Result<Self, GroupError> {
        let perm = (0..group.order()).map(|a| group.inv(a)).collect();
        automorphism_from_permutation(group, perm)
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.perm[a]
    }

    pub fn into_perm(self) -> Vec<usize> {
        self.perm
    }
}

/// Validates `perm` as an automorphism of `group`.
pub fn automorphism_from_permutation(
    group: &FiniteGroup,
    perm: Vec<usize>,
) -> Result<GroupAutomorphism<'_>, GroupError> {
    let n = group.order();
    if perm.len() != n {
        return Err(GroupError::LengthMismatch { expected: n, found: perm.len() });
    }
    let mut hit = vec![false; n];
    for &x in &perm {
        if x >= n || hit[x] {
            return Err(GroupError::NotBijective(x));
        }
        hit[x] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if perm[group.mul(a, b)] != group.mul(perm[a], perm[b]) {
                return Err(GroupError::NotHomomorphism { a, b });
            }
        }
    }
    Ok(GroupAutomorphism { group, perm })
}

/// Smallest `t >= 1` with `perm^t` the identity.
pub fn automorphism_order(aut: &GroupAutomorphism<'_>) -> usize {
    permutation_order(aut.perm())
}

pub(crate) fn permutation_order(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

/// A subgroup, stored as its sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    group: &'g FiniteGroup,
    members: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    /// Validates that `elements` form a subgroup (duplicates are ignored).
    pub fn new(group: &'g FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let members: BTreeSet<usize> = elements.iter().copied().collect();
        if let Some(&e) = members.iter().find(|&&e| e >= group.order()) {
            return Err(GroupError::ElementOutOfRange { element: e, order: group.order() });
        }
        if !members.contains(&0) {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        for &a in &members {
            if !members.contains(&group.inv(a)) {
                return Err(GroupError::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !members.contains(&group.mul(a, b)) {
                    return Err(GroupError::NotSubgroup(format!("{a}*{b} not in the set")));
                }
            }
        }
        Ok(Subgroup { group, members: members.into_iter().collect() })
    }

    pub fn trivial(group: &'g FiniteGroup) -> Self {
        Subgroup { group, members: vec![0] }
    }

    pub fn whole(group: &'g FiniteGroup) -> Self {
        Subgroup { group, members: (0..group.order()).collect() }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }
}

/// `{g : phi(g) = g}`.
pub fn fixed_subgroup<'g>(aut: &GroupAutomorphism<'g>) -> Subgroup<'g> {
    let members = (0..aut.group().order()).filter(|&g| aut.apply(g) == g).collect();
    Subgroup { group: aut.group(), members }
}

/// All automorphisms of `group` whose order divides `m` (or equals `m` when
/// `exact` is set), sorted lexicographically by permutation.
///
/// Backtracks over images of a greedy generating set. Each generator may only
/// map to an element of the same order, and every partial assignment is
/// extended over the subgroup its generators span before going deeper.
pub fn enumerate_automorphisms_of_order(
    group: &FiniteGroup,
    m: usize,
    exact: bool,
) -> Result<Vec<GroupAutomorphism<'_>>, GroupError> {
    let n = group.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(GroupError::GroupTooLarge(n));
    }
    let gens = group.generating_set();
    let orders: Vec<usize> = (0..n).map(|a| group.element_order(a)).collect();
    let mut images = Vec::with_capacity(gens.len());
    let mut found = Vec::new();
    search_images(group, &gens, &orders, &mut images, &mut found);

    let mut result: Vec<GroupAutomorphism<'_>> = found
        .into_iter()
        .filter(|perm| {
            let t = permutation_order(perm);
            if exact { t == m } else { m.is_multiple_of(t) }
        })
        .map(|perm| automorphism_from_permutation(group, perm))
        .collect::<Result<_, _>>()?;
    result.sort_by(|a, b| a.perm.cmp(&b.perm));
    Ok(result)
}

fn search_images(
    group: &FiniteGroup,
    gens: &[usize],
    orders: &[usize],
    images: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
) {
    let depth = images.len();
    let Some(map) = extend_homomorphism(group, &gens[..depth], images) else {
        return;
    };
    if depth == gens.len() {
        if map.iter().all(|&x| x != usize::MAX) {
            found.push(map);
        }
        return;
    }
    let g = gens[depth];
    for candidate in 0..group.order() {
        if orders[candidate] != orders[g] {
            continue;
        }
        images.push(candidate);
        search_images(group, gens, orders, images, found);
        images.pop();
    }
}

/// Extends `gens[i] -> images[i]` to an injective map on the subgroup the
/// generators span, via `f(x * g) = f(x) * f(g)`. Unreached entries are
/// `usize::MAX`. Returns `None` on any conflict.
fn extend_homomorphism(group: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = group.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = group.mul(x, g);
            let fy = group.mul(map[x], img);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}
