//! Finite quandles stored as dense operation tables.

use std::fmt;

use thiserror::Error;

/// The first axiom a table fails, with a witnessing tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x * x != x`
    Idempotence { x: usize },
    /// `x1 * y == x2 * y` with `x1 != x2`
    RightInvertibility { y: usize, x1: usize, x2: usize },
    /// `(x * y) * z != (x * z) * (y * z)`
    SelfDistributivity { x: usize, y: usize, z: usize },
}

impl AxiomViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            AxiomViolation::Idempotence { .. } => "Q1",
            AxiomViolation::RightInvertibility { .. } => "Q2",
            AxiomViolation::SelfDistributivity { .. } => "Q3",
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::Idempotence { x } => write!(f, "Q1 x={x}"),
            AxiomViolation::RightInvertibility { y, x1, x2 } => {
                write!(f, "Q2 y={y} x={x1} x'={x2}")
            }
            AxiomViolation::SelfDistributivity { x, y, z } => write!(f, "Q3 x={x} y={y} z={z}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("table must be non-empty and square, got {rows} rows for order {order}")]
    Shape { order: usize, rows: usize },
    #[error("entry ({x}, {y}) = {value} out of range for order {order}")]
    OutOfRangeEntry { x: usize, y: usize, value: usize, order: usize },
    #[error("axiom violation: {0}")]
    Axiom(AxiomViolation),
    #[error("dihedral quandles need order at least 2, got {0}")]
    DihedralOrder(usize),
    #[error("quandle order must be at least 1")]
    ZeroOrder,
}

/// Checks Q1, Q2, Q3 on a row-major `n x n` table, in that order.
pub fn validate_table(n: usize, op: &[usize]) -> Result<(), QuandleError> {
    if n == 0 || op.len() != n * n {
        return Err(QuandleError::Shape { order: n, rows: op.len().checked_div(n).unwrap_or(0) });
    }
    for (idx, &value) in op.iter().enumerate() {
        if value >= n {
            return Err(QuandleError::OutOfRangeEntry { x: idx / n, y: idx % n, value, order: n });
        }
    }
    check_axioms(n, op).map_err(QuandleError::Axiom)
}

fn check_axioms(n: usize, op: &[usize]) -> Result<(), AxiomViolation> {
    let at = |x: usize, y: usize| op[x * n + y];
    for x in 0..n {
        if at(x, x) != x {
            return Err(AxiomViolation::Idempotence { x });
        }
    }
    let mut owner = vec![usize::MAX; n];
    for y in 0..n {
        owner.fill(usize::MAX);
        for x in 0..n {
            let v = at(x, y);
            if owner[v] != usize::MAX {
                return Err(AxiomViolation::RightInvertibility { y, x1: owner[v], x2: x });
            }
            owner[v] = x;
        }
    }
    for z in 0..n {
        for x in 0..n {
            let xz = at(x, z);
            for y in 0..n {
                if at(at(x, y), z) != at(xz, at(y, z)) {
                    return Err(AxiomViolation::SelfDistributivity { x, y, z });
                }
            }
        }
    }
    Ok(())
}

/// A finite quandle: `op[x][y] = x * y` on `{0, .., n-1}`.
///
/// Every value of this type has passed [`validate_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quandle {
    name: String,
    order: usize,
    op: Vec<usize>,
}

impl Quandle {
    pub fn new(name: impl Into<String>, order: usize, op: Vec<usize>) -> Result<Self, QuandleError> {
        validate_table(order, &op)?;
        Ok(Quandle { name: name.into(), order, op })
    }

    pub fn from_rows(name: impl Into<String>, rows: &[Vec<usize>]) -> Result<Self, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::ZeroOrder);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(QuandleError::Shape { order: n, rows: n });
        }
        Self::new(name, n, rows.concat())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.order + y]
    }

    /// Row-major table.
    pub fn table(&self) -> &[usize] {
        &self.op
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.op[x * self.order..(x + 1) * self.order]
    }

    /// Re-runs the exhaustive axiom check.
    pub fn validate(&self) -> Result<(), AxiomViolation> {
        check_axioms(self.order, &self.op)
    }

    /// Image of the quandle under the relabeling `x -> sigma[x]`.
    ///
    /// Panics if `sigma` is not a permutation of `0..order`.
    pub fn relabel(&self, sigma: &[usize]) -> Quandle {
        let n = self.order;
        assert_eq!(sigma.len(), n, "relabeling has wrong length");
        let mut op = vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                op[sigma[x] * n + sigma[y]] = sigma[self.op(x, y)];
            }
        }
        assert!(op.iter().all(|&v| v < n), "relabeling is not a permutation");
        Quandle { name: self.name.clone(), order: n, op }
    }
}

/// Result of [`validate_quandle`]: `Ok` or the first violated axiom.
pub fn validate_quandle(q: &Quandle) -> Result<(), AxiomViolation> {
    q.validate()
}

/// `x * y = x`.
pub fn trivial_quandle(p: usize) -> Result<Quandle, QuandleError> {
    if p == 0 {
        return Err(QuandleError::ZeroOrder);
    }
    let op = (0..p).flat_map(|x| std::iter::repeat_n(x, p)).collect();
    Quandle::new(format!("trivial-{p}"), p, op)
}

/// `x * y = 2y - x mod p`, for `p >= 2`.
pub fn dihedral_quandle(p: usize) -> Result<Quandle, QuandleError> {
    if p < 2 {
        return Err(QuandleError::DihedralOrder(p));
    }
    let op = (0..p).flat_map(|x| (0..p).map(move |y| (2 * y + p - x) % p)).collect();
    Quandle::new(format!("dihedral-{p}"), p, op)
}

/// Orbits of the inner automorphism group: classes of the equivalence
/// generated by `x ~ x * y`. Each orbit is sorted and orbits are ordered by
/// their smallest element.
///
/// The pairs `(x, x / y)` give the same undirected edges as `(x * y, x)`, so
/// unioning along the operation alone already covers the inverse columns.
pub fn orbits(q: &Quandle) -> Vec<Vec<usize>> {
    let n = q.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, q.op(x, y)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut slot = vec![usize::MAX; n];
    let mut result: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let root = find(&mut parent, x);
        if slot[root] == usize::MAX {
            slot[root] = result.len();
            result.push(Vec::new());
        }
        result[slot[root]].push(x);
    }
    result
}

pub fn is_connected(q: &Quandle) -> bool {
    orbits(q).len() == 1
}

/// The right translation `x -> x * y` of one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPermutation {
    pub perm: Vec<usize>,
    /// Cycle lengths in ascending order, fixed points included as 1s.
    pub cycle_type: Vec<usize>,
}

impl ColumnPermutation {
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (x, &y) in self.perm.iter().enumerate() {
            inv[y] = x;
        }
        inv
    }

    pub fn fixed_points(&self) -> usize {
        self.cycle_type.iter().take_while(|&&c| c == 1).count()
    }
}

pub fn column_permutation(q: &Quandle, y: usize) -> ColumnPermutation {
    let perm: Vec<usize> = (0..q.order()).map(|x| q.op(x, y)).collect();
    let cycle_type = cycle_type(&perm);
    ColumnPermutation { perm, cycle_type }
}

pub(crate) fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
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
        lengths.push(len);
    }
    lengths.sort_unstable();
    lengths
}
