//! Backtracking isomorphism search over generator images.
//!
//! Generators of `G` are chosen greedily (smallest index outside the subgroup
//! generated so far). Images are tried in increasing index order among
//! elements of matching order, and each partial assignment is extended along
//! the Cayley graph of the subgroup it generates, pruning on conflicts. The
//! first complete assignment is therefore the lexicographically smallest
//! tuple of generator images.

use serde::Serialize;

use crate::error::{Error, Result};

use super::FiniteGroup;

/// Largest order accepted by [`find_isomorphism`].
pub const SIZE_LIMIT: usize = 256;

/// A bijection `G → H` given by `mapping[g] = h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismWitness {
    pub mapping: Vec<usize>,
}

/// `true` when `mapping` is a bijection with `mapping(ab) = mapping(a)mapping(b)`
/// for every pair.
pub fn verify_isomorphism(g: &FiniteGroup, h: &FiniteGroup, mapping: &[usize]) -> bool {
    let n = g.order();
    if h.order() != n || mapping.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in mapping {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| mapping[g.mul(a, b)] == h.mul(mapping[a], mapping[b])))
}

fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut member = vec![false; g.order()];
    member[g.identity()] = true;
    for x in 0..g.order() {
        if !member[x] {
            gens.push(x);
            for y in g.generated_subgroup(&gens) {
                member[y] = true;
            }
        }
    }
    gens
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends `images` over the subgroup generated by the first
    /// `images.len()` generators. `None` on a conflict or collision.
    fn extend(&self, images: &[usize]) -> Option<Vec<Option<usize>>> {
        let (g, h) = (self.g, self.h);
        let mut map = vec![None; g.order()];
        let mut used = vec![false; h.order()];
        map[g.identity()] = Some(h.identity());
        used[h.identity()] = true;
        let mut queue = vec![g.identity()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fx = map[x].expect("queued elements are mapped");
            for (&gen, &img) in self.gens.iter().zip(images) {
                let y = g.mul(x, gen);
                let fy = h.mul(fx, img);
                match map[y] {
                    Some(prev) if prev != fy => return None,
                    Some(_) => {}
                    None => {
                        if std::mem::replace(&mut used[fy], true) {
                            return None;
                        }
                        map[y] = Some(fy);
                        queue.push(y);
                    }
                }
            }
        }
        Some(map)
    }

    fn run(&self, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        let map = self.extend(images)?;
        if images.len() == self.gens.len() {
            let mapping: Option<Vec<usize>> = map.into_iter().collect();
            return mapping.filter(|m| verify_isomorphism(self.g, self.h, m));
        }
        for &c in &self.candidates[images.len()] {
            // An image already hit by the current subgroup would collide.
            if map.contains(&Some(c)) {
                continue;
            }
            images.push(c);
            if let Some(found) = self.run(images) {
                return Some(found);
            }
            images.pop();
        }
        None
    }
}

/// Searches for an isomorphism `G → H`. Returns `Ok(None)` when none exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<IsomorphismWitness>> {
    let n = g.order();
    let largest = n.max(h.order());
    if largest > SIZE_LIMIT {
        return Err(Error::SizeLimitExceeded { order: largest, limit: SIZE_LIMIT });
    }
    if n != h.order() || g.order_multiset() != h.order_multiset() || g.is_abelian() != h.is_abelian() {
        return Ok(None);
    }
    let h_orders: Vec<usize> = (0..n).map(|y| h.element_order(y)).collect();
    let gens = greedy_generators(g);
    let candidates = gens
        .iter()
        .map(|&x| {
            let o = g.element_order(x);
            (0..n).filter(|&y| h_orders[y] == o).collect()
        })
        .collect();
    let search = Search { g, h, gens, candidates };
    Ok(search.run(&mut Vec::new()).map(|mapping| IsomorphismWitness { mapping }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{abstract_group, GroupKind};

    fn grp(kind: GroupKind) -> FiniteGroup {
        abstract_group(&kind).unwrap()
    }

    fn product(a: GroupKind, b: GroupKind) -> GroupKind {
        GroupKind::DirectProduct(Box::new(a), Box::new(b))
    }

    #[test]
    fn cyclic_four_is_not_klein() {
        let z4 = grp(GroupKind::Cyclic(4));
        let v4 = grp(product(GroupKind::Cyclic(2), GroupKind::Cyclic(2)));
        assert_eq!(find_isomorphism(&z4, &v4).unwrap(), None);
    }

    #[test]
    fn z6_is_z2_times_z3() {
        let z6 = grp(GroupKind::Cyclic(6));
        let z2z3 = grp(product(GroupKind::Cyclic(2), GroupKind::Cyclic(3)));
        let w = find_isomorphism(&z6, &z2z3).unwrap().expect("isomorphic");
        assert!(verify_isomorphism(&z6, &z2z3, &w.mapping));
    }

    #[test]
    fn identity_map_is_smallest_for_self() {
        let d = grp(GroupKind::Dihedral(4));
        let w = find_isomorphism(&d, &d).unwrap().unwrap();
        assert!(verify_isomorphism(&d, &d, &w.mapping));
    }

    #[test]
    fn quaternion_vs_dihedral() {
        let q = grp(GroupKind::Dicyclic(2));
        let d = grp(GroupKind::Dihedral(4));
        assert_eq!(find_isomorphism(&q, &d).unwrap(), None);
    }

    #[test]
    fn size_limit() {
        let big = grp(GroupKind::Cyclic(300));
        assert_eq!(
            find_isomorphism(&big, &big),
            Err(Error::SizeLimitExceeded { order: 300, limit: SIZE_LIMIT })
        );
    }

    #[test]
    fn verify_rejects_non_bijections() {
        let z2 = grp(GroupKind::Cyclic(2));
        assert!(!verify_isomorphism(&z2, &z2, &[0, 0]));
        assert!(!verify_isomorphism(&z2, &z2, &[1, 0]));
        assert!(verify_isomorphism(&z2, &z2, &[0, 1]));
    }
}
