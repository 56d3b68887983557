//! Abstract comparison groups built from their standard presentations.
//!
//! Names: `Z<n>` (cyclic), `Dih<2n>` (dihedral), `Dic<4n>` (dicyclic), and
//! `AxB` for direct products, e.g. `Z4xZ2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// `⟨a | aⁿ⟩`
    Cyclic(usize),
    /// `⟨r, s | rⁿ, s², srs⁻¹ = r⁻¹⟩`, order 2n.
    Dihedral(usize),
    /// `⟨a, x | a²ⁿ, x² = aⁿ, xax⁻¹ = a⁻¹⟩`, order 4n.
    Dicyclic(usize),
    DirectProduct(Box<GroupKind>, Box<GroupKind>),
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match self {
            GroupKind::Cyclic(n) => *n,
            GroupKind::Dihedral(n) => 2 * n,
            GroupKind::Dicyclic(n) => 4 * n,
            GroupKind::DirectProduct(a, b) => a.order() * b.order(),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "Z{n}"),
            GroupKind::Dihedral(n) => write!(f, "Dih{}", 2 * n),
            GroupKind::Dicyclic(n) => write!(f, "Dic{}", 4 * n),
            GroupKind::DirectProduct(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once(['x', 'X', '×']) {
            return Ok(GroupKind::DirectProduct(Box::new(a.parse()?), Box::new(b.parse()?)));
        }
        let bad = || Error::parse(format!("unknown group `{s}` (expected Z<n>, Dih<2n>, Dic<4n> or AxB)"));
        let number = |digits: &str| digits.parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(bad);
        if let Some(d) = s.strip_prefix("Dih") {
            let order = number(d)?;
            if order % 2 != 0 {
                return Err(Error::ParameterRange(format!("dihedral order {order} is odd")));
            }
            Ok(GroupKind::Dihedral(order / 2))
        } else if let Some(d) = s.strip_prefix("Dic") {
            let order = number(d)?;
            if order % 4 != 0 {
                return Err(Error::ParameterRange(format!("dicyclic order {order} is not a multiple of 4")));
            }
            Ok(GroupKind::Dicyclic(order / 4))
        } else if let Some(d) = s.strip_prefix('Z') {
            Ok(GroupKind::Cyclic(number(d)?))
        } else {
            Err(bad())
        }
    }
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn with_suffix(base: &str, k: usize, suffix: &str) -> String {
    match k {
        0 => suffix.to_string(),
        _ => format!("{} {suffix}", power_label(base, k)),
    }
}

/// Cayley table of the group named by `kind`.
pub fn abstract_group(kind: &GroupKind) -> Result<FiniteGroup> {
    match kind {
        GroupKind::Cyclic(n) | GroupKind::Dihedral(n) | GroupKind::Dicyclic(n) if *n == 0 => {
            Err(Error::ParameterRange(format!("{kind:?}: parameter must be at least 1")))
        }
        &GroupKind::Cyclic(n) => {
            let labels = (0..n).map(|k| power_label("a", k)).collect();
            let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
            FiniteGroup::from_table(labels, table)
        }
        &GroupKind::Dihedral(n) => {
            // index = k + n·x for rᵏsˣ
            let split = |i: usize| (i % n, i / n);
            let labels = (0..2 * n)
                .map(|i| match split(i) {
                    (k, 0) => power_label("r", k),
                    (k, _) => with_suffix("r", k, "s"),
                })
                .collect();
            let table = (0..2 * n)
                .map(|i| {
                    (0..2 * n)
                        .map(|j| {
                            let ((a, x), (b, y)) = (split(i), split(j));
                            let b = if x == 1 { (n - b) % n } else { b };
                            (a + b) % n + n * ((x + y) % 2)
                        })
                        .collect()
                })
                .collect();
            FiniteGroup::from_table(labels, table)
        }
        &GroupKind::Dicyclic(n) => {
            // index = k + 2n·p for aᵏxᵖ
            let m = 2 * n;
            let split = |i: usize| (i % m, i / m);
            let labels = (0..2 * m)
                .map(|i| match split(i) {
                    (k, 0) => power_label("a", k),
                    (k, _) => with_suffix("a", k, "x"),
                })
                .collect();
            let table = (0..2 * m)
                .map(|i| {
                    (0..2 * m)
                        .map(|j| {
                            let ((a, p), (b, q)) = (split(i), split(j));
                            match (p, q) {
                                (0, _) => (a + b) % m + m * q,
                                // aᵃx·aᵇ = aᵃ⁻ᵇx
                                (_, 0) => (a + m - b) % m + m,
                                // aᵃx·aᵇx = aᵃ⁻ᵇx² = aᵃ⁻ᵇ⁺ⁿ
                                _ => (a + m - b + n) % m,
                            }
                        })
                        .collect()
                })
                .collect();
            FiniteGroup::from_table(labels, table)
        }
        GroupKind::DirectProduct(a, b) => {
            let (ga, gb) = (abstract_group(a)?, abstract_group(b)?);
            let nb = gb.order();
            let n = ga.order() * nb;
            let labels = (0..n).map(|i| format!("({},{})", ga.label(i / nb), gb.label(i % nb))).collect();
            let table = (0..n)
                .map(|i| {
                    (0..n).map(|j| ga.mul(i / nb, j / nb) * nb + gb.mul(i % nb, j % nb)).collect()
                })
                .collect();
            FiniteGroup::from_table(labels, table)
        }
    }
}
