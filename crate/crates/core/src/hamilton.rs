//! Hamiltonian cycles: exhaustive backtracking on small labelled digraphs,
//! canonical forms of cyclic words, lifting a quotient cycle to a cycle
//! cover of the base graph, and splicing a two-cycle cover into a
//! Hamiltonian path.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{LabeledDigraph, WalkTrace};
use crate::group::{Group, MoveLetter, MoveWord};
use crate::quotient::QuotientGraph;

/// A word certifying a Hamiltonian cycle of the graph named `graph_id` when
/// read from `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamCycleWord {
    pub word: MoveWord,
    pub start: usize,
    pub graph_id: String,
}

impl HamCycleWord {
    pub fn verify<V>(&self, graph: &LabeledDigraph<V>) -> Result<()> {
        if self.start >= graph.vertex_count() {
            return Err(Error::InvalidCertificate(format!("start vertex {} out of range", self.start)));
        }
        let trace = graph.trace(self.start, &self.word);
        if self.word.len() != graph.vertex_count() {
            return Err(Error::InvalidCertificate(format!(
                "word has {} letters, graph has {} vertices",
                self.word.len(),
                graph.vertex_count()
            )));
        }
        if let Some(i) = trace.first_repeat().filter(|&i| i < self.word.len()) {
            return Err(Error::InvalidCertificate(format!("vertex {} revisited at step {i}", trace.visited[i])));
        }
        if !trace.is_closed() {
            return Err(Error::InvalidCertificate("walk does not return to its start".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Vertex every cycle is read from.
    pub anchor: usize,
    /// Stop after this many cycles.
    pub limit: Option<usize>,
    /// Cut branches whose unvisited part can no longer be closed up.
    pub prune: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { anchor: 0, limit: None, prune: true, threads: 1 }
    }
}

/// Every directed Hamiltonian cycle of `graph`, as words read from
/// `opts.anchor`, in depth-first order with letters tried as L, R, V.
///
/// The result does not depend on `opts.threads` or `opts.prune`.
pub fn find_ham_cycles<V: Sync>(graph: &LabeledDigraph<V>, graph_id: &str, opts: &SearchOptions) -> Vec<HamCycleWord> {
    let n = graph.vertex_count();
    if n < 2 || opts.limit == Some(0) {
        return Vec::new();
    }
    let words = if opts.threads <= 1 || n <= 3 {
        Search::new(graph, opts).run(&[])
    } else {
        // Fan out over two-letter prefixes; concatenating the branch results
        // in prefix order reproduces the sequential order.
        let prefixes: Vec<[MoveLetter; 2]> =
            MoveLetter::ALL.into_iter().flat_map(|a| MoveLetter::ALL.into_iter().map(move |b| [a, b])).collect();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build().expect("thread pool");
        let parts: Vec<Vec<MoveWord>> =
            pool.install(|| prefixes.par_iter().map(|p| Search::new(graph, opts).run(p)).collect());
        parts.into_iter().flatten().collect()
    };
    let mut words = words;
    if let Some(limit) = opts.limit {
        words.truncate(limit);
    }
    words.into_iter().map(|word| HamCycleWord { word, start: opts.anchor, graph_id: graph_id.to_string() }).collect()
}

struct Search<'a, V> {
    graph: &'a LabeledDigraph<V>,
    preds: Vec<Vec<usize>>,
    anchor: usize,
    prune: bool,
    limit: Option<usize>,
    visited: Vec<bool>,
    unvisited: usize,
    path: Vec<MoveLetter>,
    found: Vec<MoveWord>,
    // scratch for the reachability check
    stack: Vec<usize>,
    mark: Vec<bool>,
}

/// Outcome of the pruning test after the path has been extended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Dead,
    Open {
        /// The only unvisited vertex that can still be entered from the head
        /// can only be entered from it, so it must come next.
        next: Option<usize>,
        /// The only vertex that can still return to the anchor must be
        /// visited last.
        last: Option<usize>,
    },
}

const OPEN: Verdict = Verdict::Open { next: None, last: None };

impl<'a, V> Search<'a, V> {
    fn new(graph: &'a LabeledDigraph<V>, opts: &SearchOptions) -> Self {
        let n = graph.vertex_count();
        let mut preds = vec![Vec::new(); n];
        for (s, _, t) in graph.arcs() {
            if s != t && !preds[t].contains(&s) {
                preds[t].push(s);
            }
        }
        Search {
            graph,
            preds,
            anchor: opts.anchor,
            prune: opts.prune,
            limit: opts.limit,
            visited: vec![false; n],
            unvisited: n,
            path: Vec::with_capacity(n),
            found: Vec::new(),
            stack: Vec::with_capacity(n),
            mark: vec![false; n],
        }
    }

    /// Enumerates the cycles that begin with `prefix`.
    fn run(mut self, prefix: &[MoveLetter]) -> Vec<MoveWord> {
        // Prefixes are shorter than the graph, so the closing step is never
        // part of one.
        debug_assert!(prefix.len() < self.graph.vertex_count());
        self.visit(self.anchor);
        let mut head = self.anchor;
        let mut verdict = OPEN;
        for &l in prefix {
            let t = self.graph.successor(head, l);
            if !self.allowed(t, verdict) {
                return Vec::new();
            }
            self.visit(t);
            self.path.push(l);
            head = t;
            verdict = self.check(head);
            if verdict == Verdict::Dead {
                return Vec::new();
            }
        }
        self.extend(head, verdict);
        self.found
    }

    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.unvisited -= 1;
    }

    fn unvisit(&mut self, v: usize) {
        self.visited[v] = false;
        self.unvisited += 1;
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn allowed(&self, t: usize, verdict: Verdict) -> bool {
        if self.visited[t] {
            return false;
        }
        match verdict {
            Verdict::Dead => false,
            Verdict::Open { next, last } => next.is_none_or(|f| f == t) && (last != Some(t) || self.unvisited == 1),
        }
    }

    fn check(&mut self, head: usize) -> Verdict {
        if self.prune {
            self.feasible(head)
        } else {
            OPEN
        }
    }

    fn extend(&mut self, head: usize, verdict: Verdict) {
        if self.unvisited == 0 {
            for l in MoveLetter::ALL {
                if self.graph.successor(head, l) == self.anchor {
                    let mut word = self.path.clone();
                    word.push(l);
                    self.found.push(MoveWord::new(word));
                    if self.done() {
                        return;
                    }
                }
            }
            return;
        }
        for l in MoveLetter::ALL {
            let t = self.graph.successor(head, l);
            if !self.allowed(t, verdict) {
                continue;
            }
            self.visit(t);
            self.path.push(l);
            let next = self.check(t);
            if next != Verdict::Dead {
                self.extend(t, next);
            }
            self.path.pop();
            self.unvisit(t);
            if self.done() {
                return;
            }
        }
    }

    /// Necessary conditions for the path ending at `head` to close up into
    /// a Hamiltonian cycle: every unvisited vertex keeps a usable entry and a
    /// usable exit through two different neighbours, and all unvisited
    /// vertices are reachable from `head` through unvisited vertices.
    fn feasible(&mut self, head: usize) -> Verdict {
        if self.unvisited == 0 {
            return if self.graph.successors(head).contains(&self.anchor) { OPEN } else { Verdict::Dead };
        }
        let (mut next, mut last) = (None, None);
        for u in 0..self.graph.vertex_count() {
            if self.visited[u] {
                continue;
            }
            let mut entries = self.preds[u].iter().copied().filter(|&p| p == head || !self.visited[p]);
            let Some(first_in) = entries.next() else {
                return Verdict::Dead;
            };
            let single_in = entries.next().is_none();

            let succ = self.graph.successors(u);
            let mut exits = succ.iter().copied().filter(|&t| t != u && (t == self.anchor || !self.visited[t]));
            let Some(first_out) = exits.next() else {
                return Verdict::Dead;
            };
            let single_out = exits.all(|t| t == first_out);

            if single_in && single_out && first_in == first_out {
                return Verdict::Dead;
            }
            if single_in && first_in == head {
                if next.is_some() {
                    return Verdict::Dead;
                }
                next = Some(u);
            }
            if single_out && first_out == self.anchor {
                if last.is_some() {
                    return Verdict::Dead;
                }
                last = Some(u);
            }
        }
        if next.is_some() && next == last && self.unvisited > 1 {
            return Verdict::Dead;
        }

        self.mark.iter_mut().for_each(|m| *m = false);
        self.stack.clear();
        self.stack.push(head);
        self.mark[head] = true;
        let mut reached = 0;
        while let Some(v) = self.stack.pop() {
            for t in self.graph.successors(v) {
                if !self.visited[t] && !self.mark[t] {
                    self.mark[t] = true;
                    reached += 1;
                    self.stack.push(t);
                }
            }
        }
        if reached == self.unvisited {
            Verdict::Open { next, last }
        } else {
            Verdict::Dead
        }
    }
}

/// An element of the group generated by rotation, reversal and the L↔R
/// reflection, acting on words of a fixed length.
///
/// Applied as: rotate left by `rotation`, then reverse if `reversed`, then
/// reflect if `reflected`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordSymmetry {
    pub rotation: usize,
    pub reversed: bool,
    pub reflected: bool,
}

impl WordSymmetry {
    pub fn apply(&self, word: &MoveWord) -> MoveWord {
        let mut w = word.rotate(self.rotation);
        if self.reversed {
            w = w.reversed();
        }
        if self.reflected {
            w = w.reflected();
        }
        w
    }

    /// All `4n` symmetries of words of length `n`.
    pub fn all(n: usize) -> impl Iterator<Item = WordSymmetry> {
        (0..n.max(1)).flat_map(|rotation| {
            [(false, false), (true, false), (false, true), (true, true)]
                .into_iter()
                .map(move |(reversed, reflected)| WordSymmetry { rotation, reversed, reflected })
        })
    }
}

/// Distinct images of `word` under every [`WordSymmetry`].
pub fn orbit(word: &MoveWord) -> BTreeSet<MoveWord> {
    WordSymmetry::all(word.len()).map(|g| g.apply(word)).collect()
}

/// Least word (L < R < V) in the orbit of `word` under rotation, reversal
/// and reflection.
pub fn canonicalize(word: &MoveWord) -> MoveWord {
    let bases = [word.clone(), word.reflected(), word.reversed(), word.reversed().reflected()];
    bases.iter().map(least_rotation).min().unwrap_or_default()
}

fn least_rotation(word: &MoveWord) -> MoveWord {
    let letters = word.letters();
    let n = letters.len();
    let best = (0..n)
        .min_by(|&a, &b| letters[a..].iter().chain(&letters[..a]).cmp(letters[b..].iter().chain(&letters[..b])))
        .unwrap_or(0);
    word.rotate(best)
}

/// Sorted, deduplicated canonical forms of the given cycles.
pub fn canonical_classes<'a>(cycles: impl IntoIterator<Item = &'a HamCycleWord>) -> Vec<MoveWord> {
    cycles.into_iter().map(|c| canonicalize(&c.word)).collect::<BTreeSet<_>>().into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCycle {
    pub start: usize,
    pub word: MoveWord,
}

/// Vertex-disjoint directed cycles, each read from its start vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCover {
    pub cycles: Vec<CoverCycle>,
}

impl CycleCover {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(|c| c.word.len()).collect()
    }

    /// Checks every cycle is simple and closed and that together they
    /// partition the vertex set.
    pub fn verify<V>(&self, graph: &LabeledDigraph<V>) -> Result<()> {
        let mut owner = vec![None; graph.vertex_count()];
        for (k, c) in self.cycles.iter().enumerate() {
            let trace = graph.trace(c.start, &c.word);
            if !trace.is_simple_cycle() {
                return Err(Error::InvalidCertificate(format!("cover cycle {k} is not a simple cycle")));
            }
            for &v in &trace.visited[..c.word.len()] {
                if let Some(j) = owner[v].replace(k) {
                    return Err(Error::InvalidCertificate(format!("cycles {j} and {k} share vertex {v}")));
                }
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidCertificate(format!("vertex {v} is not covered")));
        }
        Ok(())
    }
}

/// Lifts a Hamiltonian cycle of `q` to the cycle cover of `q.base` it
/// induces: from each vertex of the start coset's fiber (ascending) the
/// word is repeated until the walk returns.
pub fn lift_cycle(q: &QuotientGraph, cycle: &HamCycleWord) -> Result<CycleCover> {
    cycle.verify(&q.graph)?;
    let base = &q.base;
    let mut covered = vec![false; base.vertex_count()];
    let mut cycles = Vec::new();
    for &v in q.fiber(cycle.start) {
        if covered[v] {
            continue;
        }
        let mut head = v;
        let mut reps = 0;
        loop {
            for &l in cycle.word.letters() {
                covered[head] = true;
                head = base.successor(head, l);
            }
            reps += 1;
            if head == v {
                break;
            }
        }
        cycles.push(CoverCycle { start: v, word: cycle.word.repeat(reps) });
    }
    let cover = CycleCover { cycles };
    debug_assert!(cover.verify(base).is_ok());
    Ok(cover)
}

/// Vertices from which `word` reads as a Hamiltonian cycle. A cyclic word
/// of a quotient graph generally closes up only from some of its vertices.
pub fn hamiltonian_starts<V>(graph: &LabeledDigraph<V>, word: &MoveWord) -> Vec<usize> {
    (0..graph.vertex_count()).filter(|&v| graph.trace(v, word).is_hamiltonian_cycle(graph.vertex_count())).collect()
}

/// Expected length of every lifted cycle: `|u| · ord(φ_G(û))`.
pub fn lifted_cycle_length(word: &MoveWord) -> usize {
    word.len() * word.product().order() as usize
}

/// Result of [`splice_to_path`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplicedPath {
    pub trace: WalkTrace,
    /// Cover cycle that is broken open.
    pub cycle: usize,
    /// Index of the replaced letter within that cycle's word.
    pub position: usize,
    pub replaced: MoveLetter,
    pub substitute: MoveLetter,
    /// First vertex of the other cycle on the path.
    pub landing: usize,
}

/// Joins a two-cycle cover into a Hamiltonian path by redirecting one arc.
///
/// Positions in the first cycle are scanned from the last letter backwards
/// (then the second cycle likewise); at each, the alternative letters are
/// tried (R↔L first). When the redirected arc lands in the other cycle the
/// path runs once around the broken cycle, jumps, and runs once around the
/// other cycle. A one-cycle cover is opened at its closing arc.
pub fn splice_to_path<V>(cover: &CycleCover, graph: &LabeledDigraph<V>) -> Result<SplicedPath> {
    cover.verify(graph)?;
    match cover.len() {
        1 => {
            let c = &cover.cycles[0];
            let n = c.word.len();
            let trace = graph.trace(c.start, &c.word.without_last());
            let last = c.word.letters()[n - 1];
            Ok(SplicedPath { trace, cycle: 0, position: n - 1, replaced: last, substitute: last, landing: c.start })
        }
        2 => {
            let traces: Vec<WalkTrace> = cover.cycles.iter().map(|c| graph.trace(c.start, &c.word)).collect();
            let mut slot = vec![(usize::MAX, 0); graph.vertex_count()];
            for (k, t) in traces.iter().enumerate() {
                for (i, &v) in t.visited[..t.word.len()].iter().enumerate() {
                    slot[v] = (k, i);
                }
            }
            for (a, b) in [(0, 1), (1, 0)] {
                let ta = &traces[a];
                let n = ta.word.len();
                for p in (0..n).rev() {
                    let u = ta.visited[p];
                    let current = ta.word.letters()[p];
                    for l in alternatives(current) {
                        let target = graph.successor(u, l);
                        let (k, j) = slot[target];
                        if k != b {
                            continue;
                        }
                        let wb = &traces[b].word;
                        let mut letters = ta.word.rotate(p + 1).letters()[..n - 1].to_vec();
                        letters.push(l);
                        letters.extend_from_slice(&wb.rotate(j).letters()[..wb.len() - 1]);
                        let start = ta.visited[(p + 1) % n];
                        let trace = graph.trace(start, &MoveWord::new(letters));
                        debug_assert!(trace.is_hamiltonian_path(graph.vertex_count()));
                        return Ok(SplicedPath {
                            trace,
                            cycle: a,
                            position: p,
                            replaced: current,
                            substitute: l,
                            landing: target,
                        });
                    }
                }
            }
            Err(Error::SpliceNotFound)
        }
        k => Err(Error::UnsupportedCover(k)),
    }
}

fn alternatives(letter: MoveLetter) -> [MoveLetter; 2] {
    match letter {
        MoveLetter::L => [MoveLetter::R, MoveLetter::V],
        MoveLetter::R => [MoveLetter::L, MoveLetter::V],
        MoveLetter::V => [MoveLetter::L, MoveLetter::R],
    }
}

/// `s = VLVRVLVRVRVL`.
pub fn word_s() -> MoveWord {
    "VLVRVLVRVRVL".parse().expect("literal word")
}

/// `s` with its last letter replaced by R.
pub fn word_s_prime() -> MoveWord {
    word_s().with_letter(11, MoveLetter::R)
}

/// `s` rotated by one.
pub fn word_t() -> MoveWord {
    word_s().rotate(1)
}

/// `s'` rotated by one.
pub fn word_t_prime() -> MoveWord {
    word_s_prime().rotate(1)
}

/// `ss'`, whose five-fold repetition is a Hamiltonian cycle of `Cay(S5)`.
pub fn word_ss_prime() -> MoveWord {
    word_s().concat(&word_s_prime())
}

/// `(ss')^14 · ss · (tt')^15` without its last letter: 719 moves visiting
/// all 720 positions.
pub fn build_theorem1_word() -> MoveWord {
    let (s, sp) = (word_s(), word_s_prime());
    let tt = word_t().concat(&word_t_prime());
    s.concat(&sp).repeat(14).concat(&s).concat(&s).concat(&tt.repeat(15)).without_last()
}

/// The 48-move word whose 15-fold repetition is a Hamiltonian cycle of the
/// state graph.
pub fn build_theorem2_word() -> MoveWord {
    THEOREM2_WORD.parse().expect("literal word")
}

pub const THEOREM2_WORD: &str = "RVLVRVLVRRRVLVRVRVLVLVRVLVLLVRVRVLLLVLVRRRVRVRVR";

/// Hamiltonian cycles of `K0\X` and the number of cycles in their lifts.
pub const TABLE2: [(&str, usize); 4] = [
    ("VRVLVRVLVLVRVRVLVRVLVLVL", 2),
    ("VLVLVLVRVLVLVRVRVRVLVRVR", 2),
    ("LLLLLVLVRRRVLLLVRVRRRRRV", 6),
    ("LLLLLVRRRRRVLVRRRVLLLVRV", 6),
];

/// Machine-readable record of a verified cycle, cover or path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub graph: String,
    pub start: String,
    pub word: MoveWord,
    pub kind: CertificateKind,
    pub cycle_lengths: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Cycle,
    Cover,
    Path,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cayley_g, cayley_s5};
    use crate::group::GroupElem;
    use crate::quotient::{build_quotient, Subgroup};

    fn w(s: &str) -> MoveWord {
        s.parse().unwrap()
    }

    /// Three vertices in a ring: L steps forward, R back, V is a loop.
    fn triangle() -> LabeledDigraph<usize> {
        LabeledDigraph::from_parts(vec![0, 1, 2], vec![[1, 2, 0], [2, 0, 1], [0, 1, 2]])
    }

    #[test]
    fn triangle_has_one_cycle_each_way() {
        let cycles = find_ham_cycles(&triangle(), "triangle", &SearchOptions::default());
        let words: Vec<String> = cycles.iter().map(|c| c.word.to_string()).collect();
        assert_eq!(words, ["LLL", "RRR"]);
        assert_eq!(canonical_classes(&cycles), vec![w("LLL")]);
    }

    #[test]
    fn tiny_graphs() {
        let single = LabeledDigraph::from_parts(vec![0], vec![[0, 0, 0]]);
        assert!(find_ham_cycles(&single, "one", &SearchOptions::default()).is_empty());
        // Two vertices joined only by V.
        let pair = LabeledDigraph::from_parts(vec![0, 1], vec![[0, 0, 1], [1, 1, 0]]);
        let cycles = find_ham_cycles(&pair, "pair", &SearchOptions::default());
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].word, w("VV"));
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(canonicalize(&w("VRVL")), canonicalize(&w("RVLV")));
        let row1 = w(TABLE2[0].0);
        assert_eq!(canonicalize(&row1), canonicalize(&row1.reflected()));
        assert_eq!(canonicalize(&row1), canonicalize(&row1.inverse()));
        let c = canonicalize(&row1);
        assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn orbit_size_divides_group_order() {
        for word in TABLE2.iter().map(|(s, _)| w(s)) {
            let size = orbit(&word).len();
            assert_eq!(96 % size, 0, "{word}: {size}");
        }
        assert_eq!(40 % orbit(&w("LRVVRVLRVV")).len(), 0);
    }

    #[test]
    fn named_words() {
        assert_eq!(word_ss_prime().to_string(), "VLVRVLVRVRVLVLVRVLVRVRVR");
        assert_eq!(word_t().to_string(), "LVRVLVRVRVLV");
        assert_eq!(word_t_prime().to_string(), "LVRVLVRVRVRV");
        let v = build_theorem1_word();
        assert_eq!(v.len(), 719);
        assert_eq!(v.letters()[..12], w("VLVRVLVRVRVL").letters()[..]);
        assert_eq!(v.letters()[12..23], v.letters()[..11]);
        assert_eq!(v.letters()[23], MoveLetter::R);
        let c = build_theorem2_word();
        assert_eq!(c.len(), 48);
    }

    #[test]
    fn theorem2_word_letter_counts() {
        // Counted from the displayed word, letter by letter.
        let displayed =
            "R V L V R V L V R R R V L V R V R V L V L V R V L V L L V R V R V L L L V L V R R R V R V R V R";
        let letters: Vec<&str> = displayed.split(' ').collect();
        assert_eq!(letters.len(), 48);
        let count = |x: &str| letters.iter().filter(|&&l| l == x).count();
        let c = build_theorem2_word();
        assert_eq!(c.count(MoveLetter::R), count("R"));
        assert_eq!(c.count(MoveLetter::L), count("L"));
        assert_eq!(c.count(MoveLetter::V), count("V"));
        assert_eq!((count("R"), count("L"), count("V")), (16, 12, 20));
        let phi = c.product();
        assert_eq!((phi.x(), phi.y()), (0, 1));
    }

    #[test]
    fn search_on_k0_quotient() {
        let q = build_quotient(&cayley_g(), &Subgroup::k0());
        let cycles = find_ham_cycles(&q.graph, "quotient-k0", &SearchOptions::default());
        for c in &cycles {
            c.verify(&q.graph).unwrap();
        }
        let classes = canonical_classes(&cycles);
        assert_eq!(classes.len(), 4);
        let table: BTreeSet<MoveWord> = TABLE2.iter().map(|(s, _)| canonicalize(&w(s))).collect();
        assert_eq!(classes.into_iter().collect::<BTreeSet<_>>(), table);
    }

    #[test]
    fn pruning_and_threads_do_not_change_results() {
        let q = build_quotient(&cayley_g(), &Subgroup::k0());
        let pruned = find_ham_cycles(&q.graph, "k0", &SearchOptions::default());
        let plain = find_ham_cycles(&q.graph, "k0", &SearchOptions { prune: false, ..Default::default() });
        let threaded = find_ham_cycles(&q.graph, "k0", &SearchOptions { threads: 4, ..Default::default() });
        assert_eq!(pruned, plain);
        assert_eq!(pruned, threaded);
        let limited =
            find_ham_cycles(&q.graph, "k0", &SearchOptions { limit: Some(3), threads: 3, ..Default::default() });
        assert_eq!(limited[..], pruned[..3]);
    }

    fn table2_cycle(q: &QuotientGraph, row: usize) -> HamCycleWord {
        let word = w(TABLE2[row].0);
        let start = hamiltonian_starts(&q.graph, &word)[0];
        HamCycleWord { word, start, graph_id: "quotient-k0".into() }
    }

    #[test]
    fn lifts_of_table2_words() {
        let x = cayley_g();
        let q = build_quotient(&x, &Subgroup::k0());
        let mut counts = Vec::new();
        for row in 0..4 {
            let cycle = table2_cycle(&q, row);
            let cover = lift_cycle(&q, &cycle).unwrap();
            cover.verify(&x).unwrap();
            let len = lifted_cycle_length(&cycle.word);
            assert!(cover.cycle_lengths().iter().all(|&l| l == len));
            assert_eq!(cover.len() * len, 720);
            counts.push(cover.len());
        }
        // Z/3 parts of the four words are 1, 0, 0, 0 (row 2 has six Ls and
        // six Rs), and every S5 part has order 5, so only row 1 lifts to
        // cycles of length 360.
        assert_eq!(counts, [2, 6, 6, 6]);
    }

    #[test]
    fn lift_of_search_output_matches_table_rows() {
        let x = cayley_g();
        let q = build_quotient(&x, &Subgroup::k0());
        for cycle in find_ham_cycles(&q.graph, "quotient-k0", &SearchOptions::default()) {
            let row = TABLE2.iter().position(|(t, _)| canonicalize(&w(t)) == canonicalize(&cycle.word)).unwrap();
            let table = lift_cycle(&q, &table2_cycle(&q, row)).unwrap();
            assert_eq!(lift_cycle(&q, &cycle).unwrap().len(), table.len());
        }
    }

    #[test]
    fn lift_rejects_non_hamiltonian_words() {
        let q = build_quotient(&cayley_g(), &Subgroup::k0());
        let bad = HamCycleWord { word: w("VVVVVVVVVVVVVVVVVVVVVVVV"), start: 0, graph_id: "k0".into() };
        assert!(matches!(lift_cycle(&q, &bad), Err(Error::InvalidCertificate(_))));
        let short = HamCycleWord { word: w("RL"), start: 0, graph_id: "k0".into() };
        assert!(lift_cycle(&q, &short).is_err());
    }

    #[test]
    fn trivial_lift_and_splice() {
        let x = cayley_g();
        let q = build_quotient(&x, &Subgroup::trivial());
        let c = build_theorem2_word().repeat(15);
        let cover = lift_cycle(&q, &HamCycleWord { word: c.clone(), start: 0, graph_id: "x".into() }).unwrap();
        assert_eq!(cover.cycle_lengths(), vec![720]);
        let path = splice_to_path(&cover, &x).unwrap();
        assert_eq!(path.trace.word, c.without_last());
        assert!(path.trace.is_hamiltonian_path(720));
    }

    #[test]
    fn splice_reproduces_the_719_move_path() {
        let x = cayley_g();
        let d = word_ss_prime().repeat(15);
        let a1 = x.index_of(&GroupElem::new(crate::group::Perm::IDENTITY, 1, 0)).unwrap();
        let cover =
            CycleCover { cycles: vec![CoverCycle { start: 0, word: d.clone() }, CoverCycle { start: a1, word: d }] };
        cover.verify(&x).unwrap();
        let spliced = splice_to_path(&cover, &x).unwrap();
        assert_eq!((spliced.cycle, spliced.position), (0, 359));
        assert_eq!((spliced.replaced, spliced.substitute), (MoveLetter::R, MoveLetter::L));
        assert_eq!(x.vertex(spliced.landing).to_string(), "(12453,0,1)");
        assert_eq!(spliced.trace.word, build_theorem1_word());
        assert!(spliced.trace.is_hamiltonian_path(720));
    }

    #[test]
    fn splice_rejects_larger_covers() {
        let x = cayley_g();
        let q = build_quotient(&x, &Subgroup::k0());
        let cover = lift_cycle(&q, &table2_cycle(&q, 2)).unwrap();
        assert_eq!(splice_to_path(&cover, &x), Err(Error::UnsupportedCover(6)));
    }

    #[test]
    fn five_fold_table2_words_are_hamiltonian_in_s5() {
        let s5 = cayley_s5();
        for (text, _) in TABLE2 {
            assert!(s5.trace(0, &w(text).repeat(5)).is_hamiltonian_cycle(120), "{text}");
        }
    }
}
