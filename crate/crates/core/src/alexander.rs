//! Generalized Alexander quandles `(G, phi)` with `x * y = phi(x y^-1) y`,
//! and their quotients on right cosets of a `phi`-fixed subgroup.

use thiserror::Error;

use crate::group::{FiniteGroup, GroupAutomorphism, Subgroup};
use crate::quandle::{Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("automorphism belongs to {found}, not to {expected}")]
    GroupMismatch { expected: String, found: String },
    #[error("subgroup element {element} is moved by the automorphism (maps to {image})")]
    SubgroupNotFixed { element: usize, image: usize },
    #[error("ill-formed subgroup: {0}")]
    IllFormedSubgroup(String),
    #[error("coset operation depends on representatives: {0:?}")]
    NotWellDefined(Counterexample),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
}

/// Right cosets `Hx` of a subgroup, ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    cosets: Vec<Vec<usize>>,
    rep: Vec<usize>,
}

impl CosetSpace {
    pub fn right_cosets(h: &Subgroup<'_>) -> Self {
        let g = h.group();
        let n = g.order();
        let mut rep = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        for x in 0..n {
            if rep[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = h.members().iter().map(|&m| g.mul(m, x)).collect();
            coset.sort_unstable();
            for &y in &coset {
                rep[y] = cosets.len();
            }
            cosets.push(coset);
        }
        CosetSpace { cosets, rep }
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Index of the coset containing `x`.
    pub fn coset_of(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }
}

fn check_same_group(g: &FiniteGroup, phi: &GroupAutomorphism<'_>) -> Result<(), AlexanderError> {
    let owner = phi.group();
    if std::ptr::eq(owner, g) || owner == g {
        Ok(())
    } else {
        Err(AlexanderError::GroupMismatch {
            expected: g.name().to_string(),
            found: owner.name().to_string(),
        })
    }
}

#[inline]
fn alexander_op(g: &FiniteGroup, phi: &GroupAutomorphism<'_>, x: usize, y: usize) -> usize {
    g.mul(phi.apply(g.mul(x, g.inv(y))), y)
}

/// `(G, phi)` on the elements of `g`.
pub fn alexander_quandle(g: &FiniteGroup, phi: &GroupAutomorphism<'_>) -> Result<Quandle, AlexanderError> {
    check_same_group(g, phi)?;
    let n = g.order();
    let mut op = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            op.push(alexander_op(g, phi, x, y));
        }
    }
    Ok(Quandle::new(format!("alexander({})", g.name()), n, op)?)
}

/// Witness that `Hx * Hy` depends on the chosen representatives:
/// `Hx = Hx'` and `Hy = Hy'` but the products land in different cosets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counterexample {
    pub x: usize,
    pub x_alt: usize,
    pub y: usize,
    pub y_alt: usize,
}

/// Outcome of checking the coset operation for well-definedness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    /// First subgroup element not fixed by `phi`, if any.
    pub unfixed: Option<usize>,
    /// First representative pair giving different cosets, if any.
    pub counterexample: Option<Counterexample>,
}

impl IndependenceReport {
    pub fn is_independent(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks every `x, x', y, y'` with `Hx = Hx'`, `Hy = Hy'` against
/// `H phi(x y^-1) y = H phi(x' y'^-1) y'`. Runs whether or not `phi` fixes `h`.
pub fn check_representative_independence(
    g: &FiniteGroup,
    phi: &GroupAutomorphism<'_>,
    h: &Subgroup<'_>,
) -> IndependenceReport {
    let unfixed = h.members().iter().copied().find(|&e| phi.apply(e) != e);
    let cosets = CosetSpace::right_cosets(h);
    let mut counterexample = None;
    'outer: for cx in cosets.cosets() {
        for cy in cosets.cosets() {
            let expected = cosets.coset_of(alexander_op(g, phi, cx[0], cy[0]));
            for &x in cx {
                for &y in cy {
                    if cosets.coset_of(alexander_op(g, phi, x, y)) != expected {
                        counterexample = Some(Counterexample { x: cx[0], x_alt: x, y: cy[0], y_alt: y });
                        break 'outer;
                    }
                }
            }
        }
    }
    IndependenceReport { unfixed, counterexample }
}

/// The quotient of `(G, phi)` by a `phi`-fixed subgroup `h`, on right cosets
/// ordered by smallest element.
pub fn quotient_quandle(
    g: &FiniteGroup,
    phi: &GroupAutomorphism<'_>,
    h: &Subgroup<'_>,
) -> Result<Quandle, AlexanderError> {
    check_same_group(g, phi)?;
    if !(std::ptr::eq(h.group(), g) || h.group() == g) {
        return Err(AlexanderError::IllFormedSubgroup(format!(
            "subgroup belongs to {}, not {}",
            h.group().name(),
            g.name()
        )));
    }
    let report = check_representative_independence(g, phi, h);
    if let Some(element) = report.unfixed {
        return Err(AlexanderError::SubgroupNotFixed { element, image: phi.apply(element) });
    }
    if let Some(c) = report.counterexample {
        return Err(AlexanderError::NotWellDefined(c));
    }
    let cosets = CosetSpace::right_cosets(h);
    let k = cosets.len();
    let mut op = Vec::with_capacity(k * k);
    for cx in cosets.cosets() {
        for cy in cosets.cosets() {
            op.push(cosets.coset_of(alexander_op(g, phi, cx[0], cy[0])));
        }
    }
    let name = format!("quotient({}/{})", g.name(), h.order());
    Ok(Quandle::new(name, k, op)?)
}

/// Builds the subgroup from an element list and the quotient in one step,
/// mapping subgroup validation failures to [`AlexanderError::IllFormedSubgroup`].
pub fn quotient_by_elements(
    g: &FiniteGroup,
    phi: &GroupAutomorphism<'_>,
    elements: &[usize],
) -> Result<Quandle, AlexanderError> {
    let h = Subgroup::new(g, elements).map_err(|e| AlexanderError::IllFormedSubgroup(e.to_string()))?;
    quotient_quandle(g, phi, &h)
}
