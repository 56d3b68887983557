//! Finite groups given by a full multiplication table.

mod catalog;
mod closure;
mod double;
mod iso;
mod named;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{ApproxMat2, ExactMat2};
use crate::pt::SpacetimeSymmetry;

pub use catalog::{abstract_group, GroupKind};
pub use closure::{
    close, generate_approx_closure, generate_closure, generate_spacetime_closure, Backend, ClosureElement,
    ClosureOptions, DEFAULT_MAX_ORDER,
};
pub use double::{
    conventional_parity, double_group, double_group_generators, double_group_verdict, double_group_verdict_for,
    double_group_verdict_with, DoubleGroupConfig, PointGroup, ReflectionAxis, Verdict, VerdictReport, N_RANGE,
};
pub use iso::{find_isomorphism, verify_isomorphism, IsomorphismWitness, SIZE_LIMIT};
pub use named::{gpt_hat, gpt_spacetime, GPT_HAT_LABELS, GPT_SPACETIME_LABELS};

/// Triples checked exhaustively for associativity up to this order.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 64;
const SAMPLED_TRIPLES: usize = 200_000;

/// Concrete elements behind each index, when the group came from a closure.
#[derive(Clone, Debug, PartialEq)]
pub enum ElementSource {
    Exact(Vec<ExactMat2>),
    Approx(Vec<ApproxMat2>),
    Spacetime(Vec<SpacetimeSymmetry>),
}

impl ElementSource {
    fn reordered(&self, order: &[usize]) -> ElementSource {
        fn pick<T: Clone>(v: &[T], order: &[usize]) -> Vec<T> {
            order.iter().map(|&i| v[i].clone()).collect()
        }
        match self {
            ElementSource::Exact(v) => ElementSource::Exact(pick(v, order)),
            ElementSource::Approx(v) => ElementSource::Approx(pick(v, order)),
            ElementSource::Spacetime(v) => ElementSource::Spacetime(pick(v, order)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    source: Option<ElementSource>,
}

impl FiniteGroup {
    /// Validates the group axioms: Latin square, two-sided identity and
    /// associativity (exhaustive up to order 64, sampled above).
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidTable(format!("table is not {n}x{n}")));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::InvalidTable(format!("label `{l}` used by elements {j} and {i}")));
            }
        }
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let (r, c) = (table[i][j], table[j][i]);
                if r >= n || c >= n {
                    return Err(Error::InvalidTable(format!("entry out of range near ({i}, {j})")));
                }
                if std::mem::replace(&mut row_seen[r], true) || std::mem::replace(&mut col_seen[c], true) {
                    return Err(Error::InvalidTable(format!("not a Latin square at row/column {i}")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;

        let group = FiniteGroup { labels, table, identity, source: None };
        if let Some((a, b, c)) = group.associativity_violation() {
            return Err(Error::InvalidTable(format!("not associative on ({a}, {b}, {c})")));
        }
        Ok(group)
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        let fails = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if fails(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            None
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            (0..SAMPLED_TRIPLES)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .find(|&(a, b, c)| fails(a, b, c))
        }
    }

    pub fn with_source(mut self, source: ElementSource) -> Self {
        self.source = Some(source);
        self
    }

    pub fn source(&self) -> Option<&ElementSource> {
        self.source.as_ref()
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == self.identity).expect("Latin square has inverses")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted list of element orders.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        orders.sort_unstable();
        orders
    }

    /// `order → number of elements with that order`.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for o in self.order_multiset() {
            *profile.entry(o).or_insert(0) += 1;
        }
        profile
    }

    pub fn involution_count(&self) -> usize {
        (0..self.order()).filter(|&a| self.element_order(a) == 2).count()
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Same group with elements listed in `order` (a permutation of indices).
    pub fn reordered(&self, order: &[usize]) -> Result<FiniteGroup> {
        let n = self.order();
        let mut position = vec![usize::MAX; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || position[old] != usize::MAX {
                return Err(Error::InvalidTable("reordering is not a permutation".into()));
            }
            position[old] = new;
        }
        if order.len() != n {
            return Err(Error::InvalidTable("reordering is not a permutation".into()));
        }
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let table = order
            .iter()
            .map(|&a| order.iter().map(|&b| position[self.mul(a, b)]).collect())
            .collect();
        Ok(FiniteGroup {
            labels,
            table,
            identity: position[self.identity],
            source: self.source.as_ref().map(|s| s.reordered(order)),
        })
    }

    pub fn relabeled(mut self, labels: Vec<String>) -> Result<FiniteGroup> {
        if labels.len() != self.order() {
            return Err(Error::InvalidTable("label count differs from group order".into()));
        }
        let source = self.source.take();
        let g = FiniteGroup::from_table(labels, self.table)?;
        Ok(FiniteGroup { source, ..g })
    }

    pub fn cayley_table(&self) -> CayleyTable {
        CayleyTable { elements: self.labels.clone(), table: self.table.clone() }
    }

    /// Grid of product labels for the given row and column elements.
    pub fn product_grid(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<String>> {
        rows.iter()
            .map(|&r| cols.iter().map(|&c| self.labels[self.mul(r, c)].clone()).collect())
            .collect()
    }

    /// Text rendering with a header row; row and column order as given.
    pub fn render_text(&self, rows: &[usize], cols: &[usize]) -> String {
        let grid = self.product_grid(rows, cols);
        let width = self.labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:>width$}", "");
        for &c in cols {
            let _ = write!(out, " {:>width$}", self.labels[c]);
        }
        out.push('\n');
        for (r, row) in rows.iter().zip(&grid) {
            let _ = write!(out, "{:>width$}", self.labels[*r]);
            for cell in row {
                let _ = write!(out, " {cell:>width$}");
            }
            out.push('\n');
        }
        out
    }

    /// The subgroup generated by `gens`, as a sorted index list.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order()).filter(|&i| member[i]).collect()
    }
}

/// Serializable Cayley table: `{elements: [label], table: [[index]]}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CayleyTable {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}
