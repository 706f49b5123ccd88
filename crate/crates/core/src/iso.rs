//! Quandle isomorphism testing.
//!
//! [`are_isomorphic`] rejects on cheap invariants first, then backtracks over
//! bijections. Each assignment `x -> u` is propagated through the table
//! (`f(x * y) = f(x) * f(y)` for every already-mapped `y`), so a connected
//! quandle is usually settled once its few generators are placed.
//! [`brute_force_isomorphic`] is the exhaustive oracle for small orders.

use std::fmt;

use thiserror::Error;

use crate::quandle::{column_permutation, orbits, Quandle};

/// Largest order accepted by [`brute_force_isomorphic`] (9! bijections).
pub const BRUTE_FORCE_MAX_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("brute force limited to order {BRUTE_FORCE_MAX_ORDER}, got {0}")]
    OrderTooLarge(usize),
}

/// Relabeling-invariant summary of a quandle. Equal profiles are necessary
/// for isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantProfile {
    pub order: usize,
    pub orbit_sizes: Vec<usize>,
    pub column_cycle_types: Vec<Vec<usize>>,
    pub fixed_point_counts: Vec<usize>,
}

pub fn profile(q: &Quandle) -> InvariantProfile {
    let mut orbit_sizes: Vec<usize> = orbits(q).iter().map(Vec::len).collect();
    orbit_sizes.sort_unstable();
    let mut column_cycle_types = Vec::with_capacity(q.order());
    let mut fixed_point_counts = Vec::with_capacity(q.order());
    for y in 0..q.order() {
        let c = column_permutation(q, y);
        fixed_point_counts.push(c.fixed_points());
        column_cycle_types.push(c.cycle_type);
    }
    column_cycle_types.sort();
    fixed_point_counts.sort_unstable();
    InvariantProfile { order: q.order(), orbit_sizes, column_cycle_types, fixed_point_counts }
}

impl InvariantProfile {
    /// Name of the first field where the two profiles differ.
    pub fn first_difference(&self, other: &InvariantProfile) -> Option<&'static str> {
        if self.order != other.order {
            Some("order")
        } else if self.orbit_sizes != other.orbit_sizes {
            Some("orbit_sizes")
        } else if self.column_cycle_types != other.column_cycle_types {
            Some("column_cycle_types")
        } else if self.fixed_point_counts != other.fixed_point_counts {
            Some("fixed_point_counts")
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoCertificate {
    /// `f[x]` is the image of `x`; verified to satisfy `f(x * y) = f(x) * f(y)`.
    Isomorphic(Vec<usize>),
    /// Name of the invariant that separates the two quandles.
    NonIsomorphic(String),
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoCertificate::Isomorphic(_))
    }
}

impl fmt::Display for IsoCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoCertificate::Isomorphic(map) => {
                f.write_str("iso")?;
                for x in map {
                    write!(f, " {x}")?;
                }
                Ok(())
            }
            IsoCertificate::NonIsomorphic(reason) => write!(f, "noniso {reason}"),
        }
    }
}

/// True when `f` is a bijection `a -> b` preserving the operation.
pub fn is_isomorphism(a: &Quandle, b: &Quandle, f: &[usize]) -> bool {
    let n = a.order();
    if b.order() != n || f.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &u in f {
        if u >= n || hit[u] {
            return false;
        }
        hit[u] = true;
    }
    (0..n).all(|x| (0..n).all(|y| f[a.op(x, y)] == b.op(f[x], f[y])))
}

/// Per-element invariant: orbit size and cycle type of the element's column.
fn local_keys(q: &Quandle) -> Vec<(usize, Vec<usize>)> {
    let mut orbit_size = vec![0; q.order()];
    for orbit in orbits(q) {
        for &x in &orbit {
            orbit_size[x] = orbit.len();
        }
    }
    (0..q.order()).map(|y| (orbit_size[y], column_permutation(q, y).cycle_type)).collect()
}

struct Search<'a> {
    a: &'a Quandle,
    b: &'a Quandle,
    key_a: Vec<usize>,
    key_b: Vec<usize>,
    forward: Vec<usize>,
    backward: Vec<usize>,
    assigned: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Assigns `x -> u` and closes under the operation. On conflict, every
    /// assignment made by this call is undone and `false` is returned.
    fn assign(&mut self, x: usize, u: usize) -> bool {
        let mark = self.assigned.len();
        if self.push(x, u) && self.propagate(mark) {
            return true;
        }
        self.undo(mark);
        false
    }

    fn push(&mut self, x: usize, u: usize) -> bool {
        if self.forward[x] != UNSET {
            return self.forward[x] == u;
        }
        if self.backward[u] != UNSET || self.key_a[x] != self.key_b[u] {
            return false;
        }
        self.forward[x] = u;
        self.backward[u] = x;
        self.assigned.push(x);
        true
    }

    fn propagate(&mut self, mut cursor: usize) -> bool {
        while cursor < self.assigned.len() {
            let x = self.assigned[cursor];
            let fx = self.forward[x];
            let mut i = 0;
            while i <= cursor {
                let y = self.assigned[i];
                let fy = self.forward[y];
                if !self.push(self.a.op(x, y), self.b.op(fx, fy))
                    || !self.push(self.a.op(y, x), self.b.op(fy, fx))
                {
                    return false;
                }
                i += 1;
            }
            cursor += 1;
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for x in self.assigned.drain(mark..) {
            self.backward[self.forward[x]] = UNSET;
            self.forward[x] = UNSET;
        }
    }

    fn solve(&mut self, order: &[usize], candidates: &[Vec<usize>]) -> bool {
        let Some(pos) = order.iter().position(|&x| self.forward[x] == UNSET) else {
            return true;
        };
        let x = order[pos];
        for &u in &candidates[x] {
            if self.backward[u] != UNSET {
                continue;
            }
            let mark = self.assigned.len();
            if self.assign(x, u) {
                if self.solve(&order[pos + 1..], candidates) {
                    return true;
                }
                self.undo(mark);
            }
        }
        false
    }
}

/// Decides whether `a` and `b` are isomorphic, returning a verified bijection
/// or the name of a separating invariant.
pub fn are_isomorphic(a: &Quandle, b: &Quandle) -> IsoCertificate {
    let (pa, pb) = (profile(a), profile(b));
    if let Some(field) = pa.first_difference(&pb) {
        return IsoCertificate::NonIsomorphic(field.to_string());
    }
    let n = a.order();
    let (la, lb) = (local_keys(a), local_keys(b));
    let mut distinct: Vec<&(usize, Vec<usize>)> = la.iter().chain(lb.iter()).collect();
    distinct.sort();
    distinct.dedup();
    let id = |k: &(usize, Vec<usize>)| distinct.binary_search(&k).unwrap();
    let key_a: Vec<usize> = la.iter().map(id).collect();
    let key_b: Vec<usize> = lb.iter().map(id).collect();

    let candidates: Vec<Vec<usize>> =
        (0..n).map(|x| (0..n).filter(|&u| key_b[u] == key_a[x]).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return IsoCertificate::NonIsomorphic("local_invariants".to_string());
    }
    // smallest orbit first, then fewest candidates, then index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (la[x].0, candidates[x].len(), x));

    let mut search = Search {
        a,
        b,
        key_a,
        key_b,
        forward: vec![UNSET; n],
        backward: vec![UNSET; n],
        assigned: Vec::with_capacity(n),
    };
    if search.solve(&order, &candidates) {
        let f = search.forward;
        assert!(is_isomorphism(a, b, &f), "isomorphism search produced an invalid bijection");
        IsoCertificate::Isomorphic(f)
    } else {
        IsoCertificate::NonIsomorphic("exhaustive_search".to_string())
    }
}

/// Tries every bijection. Only for `order <= 9`.
pub fn brute_force_isomorphic(a: &Quandle, b: &Quandle) -> Result<bool, IsoError> {
    let n = a.order().max(b.order());
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(IsoError::OrderTooLarge(n));
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if is_isomorphism(a, b, &perm) {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
