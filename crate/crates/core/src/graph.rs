//! Letter-labelled digraphs where every vertex has exactly one outgoing arc
//! per move letter: the state graph, Cayley graphs and their quotients.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{Display, Write as _};
use std::hash::Hash;

use serde::Serialize;
use serde_json::json;

use crate::group::{Group, GroupElem, MoveLetter, MoveWord, Perm};
use crate::puzzle::Position;

#[derive(Clone, Debug)]
pub struct LabeledDigraph<V> {
    vertices: Vec<V>,
    index: HashMap<V, usize>,
    /// `succ[v][letter.index()]`
    succ: Vec<[usize; 3]>,
}

impl<V: Clone + Eq + Hash> LabeledDigraph<V> {
    /// Builds a graph from explicit vertex payloads and successor table.
    ///
    /// Panics if a successor is out of range or a payload is repeated.
    pub fn from_parts(vertices: Vec<V>, succ: Vec<[usize; 3]>) -> Self {
        assert_eq!(vertices.len(), succ.len());
        let n = vertices.len();
        assert!(succ.iter().flatten().all(|&t| t < n), "successor out of range");
        let index: HashMap<V, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        assert_eq!(index.len(), n, "duplicate vertex payload");
        LabeledDigraph { vertices, index, succ }
    }

    /// Breadth-first closure of `seed` under `step`, with vertices then
    /// renumbered in ascending order of `key`.
    pub fn from_closure<K: Ord>(seed: V, step: impl Fn(&V, MoveLetter) -> V, key: impl Fn(&V) -> K) -> Self {
        let mut found: HashMap<V, usize> = HashMap::from([(seed.clone(), 0)]);
        let mut order = vec![seed];
        let mut raw_succ: Vec<[V; 3]> = Vec::new();
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            let targets = MoveLetter::ALL.map(|l| step(&order[i], l));
            for t in &targets {
                if !found.contains_key(t) {
                    found.insert(t.clone(), order.len());
                    queue.push_back(order.len());
                    order.push(t.clone());
                }
            }
            // FIFO order: vertices are expanded in discovery order.
            debug_assert_eq!(raw_succ.len(), i);
            raw_succ.push(targets);
        }

        let mut perm: Vec<usize> = (0..order.len()).collect();
        perm.sort_by_key(|&i| key(&order[i]));
        let vertices: Vec<V> = perm.iter().map(|&i| order[i].clone()).collect();
        let index: HashMap<V, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let succ = perm.iter().map(|&i| raw_succ[i].clone().map(|t| index[&t])).collect();
        LabeledDigraph { vertices, index, succ }
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }
}

impl<V> LabeledDigraph<V> {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &V {
        &self.vertices[i]
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn successor(&self, v: usize, letter: MoveLetter) -> usize {
        self.succ[v][letter.index()]
    }

    pub fn successors(&self, v: usize) -> [usize; 3] {
        self.succ[v]
    }

    /// All arcs `(source, letter, target)` in source-then-letter order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, MoveLetter, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(v, ts)| MoveLetter::ALL.into_iter().map(move |l| (v, l, ts[l.index()])))
    }

    pub fn arc_count(&self) -> usize {
        self.succ.len() * 3
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for (_, _, t) in self.arcs() {
            deg[t] += 1;
        }
        deg
    }

    /// End vertex of `word` read from `start`.
    pub fn walk_end(&self, start: usize, word: &MoveWord) -> usize {
        word.letters().iter().fold(start, |v, &l| self.successor(v, l))
    }

    pub fn trace(&self, start: usize, word: &MoveWord) -> WalkTrace {
        let mut visited = Vec::with_capacity(word.len() + 1);
        visited.push(start);
        let mut v = start;
        for &l in word.letters() {
            v = self.successor(v, l);
            visited.push(v);
        }
        WalkTrace { start, word: word.clone(), visited }
    }

    /// Underlying simple undirected graph, loops dropped, as sorted pairs.
    pub fn undirected_edges(&self) -> BTreeSet<(usize, usize)> {
        self.arcs().filter(|&(s, _, t)| s != t).map(|(s, _, t)| (s.min(t), s.max(t))).collect()
    }

    pub fn undirected_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for (a, b) in self.undirected_edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Vertices reachable from `start` along arcs (or against them when
    /// `reverse` is set).
    pub fn reachable(&self, start: usize, reverse: bool) -> Vec<bool> {
        let n = self.vertex_count();
        let mut preds = vec![Vec::new(); if reverse { n } else { 0 }];
        if reverse {
            for (s, _, t) in self.arcs() {
                preds[t].push(s);
            }
        }
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            let next: Vec<usize> = if reverse { preds[v].clone() } else { self.succ[v].to_vec() };
            for t in next {
                if !std::mem::replace(&mut seen[t], true) {
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.vertex_count() == 0
            || (self.reachable(0, false).into_iter().all(|b| b) && self.reachable(0, true).into_iter().all(|b| b))
    }

    /// Same vertex numbering and the same labelled arcs.
    pub fn same_arcs<W>(&self, other: &LabeledDigraph<W>) -> bool {
        self.succ == other.succ
    }
}

impl<V: Serialize> LabeledDigraph<V> {
    /// `{"vertices": [...], "arcs": [[src, "R", dst], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let arcs: Vec<_> = self.arcs().map(|(s, l, t)| json!([s, l.to_string(), t])).collect();
        json!({ "vertices": self.vertices, "arcs": arcs })
    }
}

impl<V: Display> LabeledDigraph<V> {
    /// Graphviz rendering. With `directed` every arc is drawn with its
    /// letter; otherwise the undirected view is drawn with the letters
    /// that realise each edge.
    pub fn to_dot(&self, name: &str, directed: bool) -> String {
        let mut out = String::new();
        let (kind, sep) = if directed { ("digraph", "->") } else { ("graph", "--") };
        let _ = writeln!(out, "{kind} \"{name}\" {{");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{v}\"];");
        }
        if directed {
            for (s, l, t) in self.arcs() {
                let _ = writeln!(out, "  {s} {sep} {t} [label=\"{l}\"];");
            }
        } else {
            let mut labels: std::collections::BTreeMap<(usize, usize), BTreeSet<MoveLetter>> = Default::default();
            for (s, l, t) in self.arcs().filter(|&(s, _, t)| s != t) {
                labels.entry((s.min(t), s.max(t))).or_default().insert(l);
            }
            for ((a, b), ls) in labels {
                let ls: String = ls.iter().map(|l| l.as_char()).collect();
                let _ = writeln!(out, "  {a} {sep} {b} [label=\"{ls}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// The walk obtained by reading a word from a start vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTrace {
    pub start: usize,
    pub word: MoveWord,
    /// `word.len() + 1` vertices, beginning with `start`.
    pub visited: Vec<usize>,
}

impl WalkTrace {
    pub fn end(&self) -> usize {
        *self.visited.last().expect("walk has a start")
    }

    pub fn is_closed(&self) -> bool {
        self.end() == self.start
    }

    pub fn distinct_count(&self) -> usize {
        self.visited.iter().collect::<BTreeSet<_>>().len()
    }

    /// First index whose vertex already appeared earlier in the walk.
    pub fn first_repeat(&self) -> Option<usize> {
        let mut seen = BTreeSet::new();
        self.visited.iter().position(|v| !seen.insert(*v))
    }

    /// No vertex repeats.
    pub fn is_simple_path(&self) -> bool {
        self.first_repeat().is_none()
    }

    /// Closed, non-empty, and no vertex repeats before the return.
    pub fn is_simple_cycle(&self) -> bool {
        if self.word.is_empty() || !self.is_closed() {
            return false;
        }
        let body =
            WalkTrace { start: self.start, word: MoveWord::empty(), visited: self.visited[..self.word.len()].to_vec() };
        body.is_simple_path()
    }

    pub fn is_hamiltonian_cycle(&self, vertex_count: usize) -> bool {
        self.word.len() == vertex_count && self.is_simple_cycle()
    }

    pub fn is_hamiltonian_path(&self, vertex_count: usize) -> bool {
        self.visited.len() == vertex_count && self.is_simple_path()
    }
}

/// `Cay(H, {L, R, V})` closed breadth-first from `seed` under right
/// multiplication, with vertices in ascending group order.
pub fn build_cayley<T: Group>(generators: [T; 3], seed: T) -> LabeledDigraph<T> {
    LabeledDigraph::from_closure(seed, |g, l| g.mul(&generators[l.index()]), |g| *g)
}

/// `Cay(S5 × Z/2 × Z/3, {L̂, R̂, V̂})`.
pub fn cayley_g() -> LabeledDigraph<GroupElem> {
    build_cayley(MoveLetter::ALL.map(MoveLetter::generator), GroupElem::IDENTITY)
}

/// `Cay(S5, {L, R, V})`.
pub fn cayley_s5() -> LabeledDigraph<Perm> {
    build_cayley(MoveLetter::ALL.map(MoveLetter::perm), Perm::IDENTITY)
}

/// All positions reachable from the home position by moves, ordered by
/// their encoding.
pub fn build_state_graph() -> LabeledDigraph<Position> {
    LabeledDigraph::from_closure(Position::HOME, |f, l| f.apply_move(l), Position::encode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_sizes_and_degrees() {
        let g = cayley_g();
        assert_eq!(g.vertex_count(), 720);
        assert_eq!(g.arc_count(), 2160);
        assert!(g.in_degrees().iter().all(|&d| d == 3));
        assert_eq!(g.undirected_edges().len(), 1080);
        assert!(g.undirected_degrees().iter().all(|&d| d == 3));
        assert_eq!(cayley_s5().vertex_count(), 120);
        assert_eq!(*g.vertex(0), GroupElem::IDENTITY);
    }

    #[test]
    fn letter_actions_are_invertible() {
        let g = cayley_g();
        for v in 0..g.vertex_count() {
            let r = g.successor(v, MoveLetter::R);
            assert_eq!(g.successor(r, MoveLetter::L), v);
            let l = g.successor(v, MoveLetter::L);
            assert_eq!(g.successor(l, MoveLetter::R), v);
            let vv = g.successor(v, MoveLetter::V);
            assert_eq!(g.successor(vv, MoveLetter::V), v);
        }
    }

    #[test]
    fn state_graph_matches_cayley_graph() {
        let state = build_state_graph();
        let cay = cayley_g();
        assert_eq!(state.vertex_count(), 720);
        assert!(state.is_strongly_connected());
        for (i, f) in state.vertices().iter().enumerate() {
            assert_eq!(f.encode(), *cay.vertex(i));
        }
        assert!(state.same_arcs(&cay));
    }

    #[test]
    fn traces() {
        let s5 = cayley_s5();
        let ss: MoveWord = "VLVRVLVRVRVLVLVRVLVRVRVR".parse().unwrap();
        let t = s5.trace(0, &ss);
        assert_eq!(s5.vertex(t.end()).to_string(), "53412");
        let empty = s5.trace(7, &MoveWord::empty());
        assert_eq!(empty.visited, vec![7]);
        assert!(empty.is_closed() && !empty.is_simple_cycle());

        let g = cayley_g();
        let back = g.trace(0, &ss.repeat(15));
        assert!(back.is_closed());
        assert_eq!(ss.repeat(15).product(), GroupElem::IDENTITY);
    }

    #[test]
    fn json_export_shape() {
        let s5 = cayley_s5();
        let v = s5.to_json();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 120);
        assert_eq!(v["vertices"][0], "12345");
        assert_eq!(v["arcs"].as_array().unwrap().len(), 360);
        assert_eq!(v["arcs"][0][1], "L");
    }

    #[test]
    fn dot_export_counts() {
        let s5 = cayley_s5();
        let dot = s5.to_dot("s5", false);
        assert_eq!(dot.matches(" -- ").count(), s5.undirected_edges().len());
        let directed = s5.to_dot("s5", true);
        assert_eq!(directed.matches(" -> ").count(), 360);
    }
}
