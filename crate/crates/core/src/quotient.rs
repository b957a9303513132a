//! Quotients `K\X` of a Cayley graph over `S5 × Z/2 × Z/3` by a subgroup
//! `K` acting on the left.
//!
//! Left multiplication commutes with the right action of the move letters,
//! so `Ka·ξ` is well defined and the projection `a ↦ Ka` is a covering map
//! of letter-labelled digraphs. Loops and parallel arcs in the quotient are
//! kept as they are.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;
use serde_json::json;

use crate::graph::LabeledDigraph;
use crate::group::{Group, GroupElem, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: BTreeSet<GroupElem>,
    pub description: String,
}

impl Subgroup {
    pub fn elements(&self) -> &BTreeSet<GroupElem> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        self.elements.contains(g)
    }

    /// Contains the identity and is closed under products and inverses.
    pub fn is_closed(&self) -> bool {
        self.contains(&GroupElem::IDENTITY)
            && self
                .elements
                .iter()
                .all(|a| self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.mul(b))))
    }

    pub fn trivial() -> Self {
        make_subgroup(&[], false, false)
    }

    /// `⟨(1,2,3,4,5)⟩ × Z/2 × Z/3`, 30 elements.
    pub fn k0() -> Self {
        make_subgroup(&[five_cycle()], true, true)
    }

    /// `⟨(1,2,3,4,5)⟩ × {0} × Z/3`, 15 elements.
    pub fn k1() -> Self {
        make_subgroup(&[five_cycle()], false, true)
    }
}

fn five_cycle() -> Perm {
    Perm::parse_cycles("(1,2,3,4,5)").expect("literal cycle")
}

/// `⟨perm_gens⟩ × (Z/2 or {0}) × (Z/3 or {0})`.
pub fn make_subgroup(perm_gens: &[Perm], include_z2: bool, include_z3: bool) -> Subgroup {
    let mut perms = BTreeSet::from([Perm::IDENTITY]);
    let mut queue = VecDeque::from([Perm::IDENTITY]);
    while let Some(p) = queue.pop_front() {
        for g in perm_gens {
            let q = p.compose(g);
            if perms.insert(q) {
                queue.push_back(q);
            }
        }
    }
    let xs: &[i64] = if include_z2 { &[0, 1] } else { &[0] };
    let ys: &[i64] = if include_z3 { &[0, 1, 2] } else { &[0] };
    let mut elements = BTreeSet::new();
    for &p in &perms {
        for &x in xs {
            for &y in ys {
                elements.insert(GroupElem::new(p, x, y));
            }
        }
    }

    let gens = if perm_gens.is_empty() {
        "1".to_string()
    } else {
        let list: Vec<String> = perm_gens.iter().map(Perm::to_cycles).collect();
        format!("⟨{}⟩", list.join(", "))
    };
    let description =
        format!("{gens} × {} × {}", if include_z2 { "Z/2" } else { "{0}" }, if include_z3 { "Z/3" } else { "{0}" });
    Subgroup { elements, description }
}

/// `K\X` together with the covering data.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub base: LabeledDigraph<GroupElem>,
    pub subgroup: Subgroup,
    /// Vertices are the cosets, carried by their minimal representative.
    pub graph: LabeledDigraph<GroupElem>,
    coset_of: Vec<usize>,
    fibers: Vec<Vec<usize>>,
}

impl QuotientGraph {
    pub fn coset_count(&self) -> usize {
        self.fibers.len()
    }

    /// Base vertices of a coset, ascending.
    pub fn fiber(&self, coset: usize) -> &[usize] {
        &self.fibers[coset]
    }

    pub fn representative(&self, coset: usize) -> GroupElem {
        *self.graph.vertex(coset)
    }

    /// `{"subgroup": ..., "representatives": [...], "arcs": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.graph.to_json();
        v["subgroup"] = json!(self.subgroup.description);
        v["fiber_size"] = json!(self.subgroup.len());
        v
    }
}

/// Projection `π(v) = Kv`.
pub fn project(q: &QuotientGraph, v: usize) -> usize {
    q.coset_of[v]
}

pub fn build_quotient(base: &LabeledDigraph<GroupElem>, subgroup: &Subgroup) -> QuotientGraph {
    let n = base.vertex_count();
    let mut coset_of = vec![usize::MAX; n];
    let mut fibers: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if coset_of[v] != usize::MAX {
            continue;
        }
        let a = *base.vertex(v);
        let mut fiber: Vec<usize> = subgroup
            .elements()
            .iter()
            .map(|k| base.index_of(&k.mul(&a)).expect("K·a lies in the base graph"))
            .collect();
        fiber.sort_unstable();
        for &u in &fiber {
            coset_of[u] = fibers.len();
        }
        fibers.push(fiber);
    }
    // Left action is free, so every fiber has |K| elements.
    assert!(fibers.iter().all(|f| f.len() == subgroup.len()), "unequal fibers");

    let reps: Vec<GroupElem> = fibers.iter().map(|f| *base.vertex(f[0])).collect();
    let succ: Vec<[usize; 3]> = fibers
        .iter()
        .map(|f| {
            let targets = base.successors(f[0]).map(|t| coset_of[t]);
            debug_assert!(f.iter().all(|&u| base.successors(u).map(|t| coset_of[t]) == targets));
            targets
        })
        .collect();

    QuotientGraph {
        base: base.clone(),
        subgroup: subgroup.clone(),
        graph: LabeledDigraph::from_parts(reps, succ),
        coset_of,
        fibers,
    }
}

impl Serialize for Subgroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.description)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cayley_g;
    use crate::group::MoveLetter;

    #[test]
    fn subgroup_sizes() {
        // Closure oracle: the cycle (1,2,3,4,5) generates 5 permutations.
        let c = five_cycle();
        let powers: BTreeSet<Perm> = (0..10).map(|k| c.pow(k)).collect();
        assert_eq!(powers.len(), 5);

        let k0 = Subgroup::k0();
        assert_eq!(k0.len(), powers.len() * 2 * 3);
        assert!(k0.is_closed());
        let k1 = Subgroup::k1();
        assert_eq!(k1.len(), powers.len() * 3);
        assert!(k1.is_closed());
        assert_eq!(Subgroup::trivial().len(), 1);
        assert_eq!(k0.description, "⟨(1,2,3,4,5)⟩ × Z/2 × Z/3");
        assert_eq!(k1.description, "⟨(1,2,3,4,5)⟩ × {0} × Z/3");
    }

    #[test]
    fn quotient_sizes() {
        let x = cayley_g();
        let q0 = build_quotient(&x, &Subgroup::k0());
        assert_eq!(q0.coset_count(), 24);
        let q1 = build_quotient(&x, &Subgroup::k1());
        assert_eq!(q1.coset_count(), 48);
        for q in [&q0, &q1] {
            assert!((0..q.coset_count()).all(|c| q.fiber(c).len() == q.subgroup.len()));
            assert_eq!(q.representative(0), GroupElem::IDENTITY);
        }
    }

    #[test]
    fn trivial_quotient_is_the_base() {
        let x = cayley_g();
        let q = build_quotient(&x, &Subgroup::trivial());
        assert_eq!(q.coset_count(), 720);
        assert!((0..720).all(|v| project(&q, v) == v));
        assert!(q.graph.same_arcs(&x));
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let x = cayley_g();
        for k in [Subgroup::k0(), Subgroup::k1()] {
            let q = build_quotient(&x, &k);
            for g in k.elements() {
                assert_eq!(project(&q, x.index_of(g).unwrap()), project(&q, 0));
            }
            for v in 0..x.vertex_count() {
                for l in MoveLetter::ALL {
                    assert_eq!(project(&q, x.successor(v, l)), q.graph.successor(project(&q, v), l));
                }
            }
        }
    }
}
