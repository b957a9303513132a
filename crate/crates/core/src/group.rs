//! Permutations of five points, the direct product `S5 × Z/2 × Z/3`, and
//! words over the move alphabet `{L, R, V}`.
//!
//! Composition is right-to-left: `(a·b)(i) = a(b(i))`. A word acts on the
//! right, so the running product of a word is built by right-multiplying the
//! previous product by the next letter's generator.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of points moved by [`Perm`].
pub const DEGREE: usize = 5;

/// Minimal group interface shared by [`Perm`] and [`GroupElem`], enough to
/// build Cayley graphs and take word products in either group.
pub trait Group: Copy + Eq + Ord + Hash + fmt::Debug {
    fn identity() -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// The image of `letter` in this group.
    fn generator(letter: MoveLetter) -> Self;

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::identity();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Smallest `k >= 1` with `self^k = id`.
    fn order(&self) -> u64 {
        let id = Self::identity();
        let mut acc = *self;
        let mut k = 1;
        while acc != id {
            acc = acc.mul(self);
            k += 1;
        }
        k
    }
}

/// A permutation of `{1, ..., 5}` stored in one-line notation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; DEGREE]);

impl Perm {
    pub const IDENTITY: Perm = Perm([1, 2, 3, 4, 5]);

    /// Builds a permutation from its one-line images (`images[i]` is the
    /// image of `i + 1`).
    pub fn from_images(images: [u8; DEGREE]) -> Result<Self> {
        let mut seen = [false; DEGREE];
        for &p in &images {
            let text = images.iter().map(|d| d.to_string()).collect::<String>();
            if !(1..=DEGREE as u8).contains(&p) {
                return Err(Error::InvalidPerm { text, reason: format!("point {p} out of range") });
            }
            if std::mem::replace(&mut seen[p as usize - 1], true) {
                return Err(Error::InvalidPerm { text, reason: format!("point {p} repeated") });
            }
        }
        Ok(Perm(images))
    }

    pub fn images(&self) -> [u8; DEGREE] {
        self.0
    }

    /// Image of `point` (1-based).
    pub fn apply(&self, point: u8) -> u8 {
        self.0[point as usize - 1]
    }

    /// `i ↦ self(other(i))`: `other` acts first.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut out = [0; DEGREE];
        for (slot, &p) in out.iter_mut().zip(&other.0) {
            *slot = self.apply(p);
        }
        Perm(out)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = [0; DEGREE];
        for (i, &p) in self.0.iter().enumerate() {
            out[p as usize - 1] = i as u8 + 1;
        }
        Perm(out)
    }

    pub fn order(&self) -> u64 {
        <Self as Group>::order(self)
    }

    /// Position of this permutation in the lexicographic order of one-line
    /// strings, in `0..120`.
    pub fn rank(&self) -> usize {
        let mut rank = 0;
        for i in 0..DEGREE {
            let smaller_later = self.0[i + 1..].iter().filter(|&&p| p < self.0[i]).count();
            rank = rank * (DEGREE - i) + smaller_later;
        }
        rank
    }

    /// Inverse of [`Perm::rank`].
    pub fn unrank(mut rank: usize) -> Perm {
        let mut pool: Vec<u8> = (1..=DEGREE as u8).collect();
        let mut fact = (1..DEGREE).product::<usize>();
        let mut out = [0; DEGREE];
        for (i, slot) in out.iter_mut().enumerate() {
            let pick = rank / fact;
            rank %= fact;
            *slot = pool.remove(pick);
            if i + 1 < DEGREE {
                fact /= DEGREE - 1 - i;
            }
        }
        Perm(out)
    }

    /// Parses disjoint cycle notation such as `(1,2)(3,4,5)`. Points not
    /// mentioned are fixed; the empty string and `()` are the identity.
    pub fn parse_cycles(text: &str) -> Result<Perm> {
        let mut images = Perm::IDENTITY.0;
        let mut used = [false; DEGREE];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(syntax(rest, "expected `(`"));
            };
            let Some(close) = body.find(')') else {
                return Err(syntax(rest, "unclosed cycle"));
            };
            let inner = body[..close].trim();
            rest = body[close + 1..].trim_start();
            if inner.is_empty() {
                continue;
            }
            let mut points = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                let p: u8 = tok.parse().map_err(|_| syntax(tok, "not a point"))?;
                if !(1..=DEGREE as u8).contains(&p) {
                    return Err(syntax(tok, "point out of range 1..5"));
                }
                if std::mem::replace(&mut used[p as usize - 1], true) {
                    return Err(syntax(tok, "point repeated"));
                }
                points.push(p);
            }
            for (i, &p) in points.iter().enumerate() {
                images[p as usize - 1] = points[(i + 1) % points.len()];
            }
        }
        Ok(Perm(images))
    }

    /// Disjoint cycle notation with fixed points omitted; `()` for the
    /// identity.
    pub fn to_cycles(&self) -> String {
        let mut seen = [false; DEGREE];
        let mut out = String::new();
        for start in 1..=DEGREE as u8 {
            if seen[start as usize - 1] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p as usize - 1] {
                seen[p as usize - 1] = true;
                cycle.push(p.to_string());
                p = self.apply(p);
            }
            out.push('(');
            out.push_str(&cycle.join(","));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

fn syntax(token: &str, reason: &str) -> Error {
    Error::CycleSyntax { token: token.to_string(), reason: reason.to_string() }
}

impl Group for Perm {
    fn identity() -> Self {
        Perm::IDENTITY
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }
    fn inverse(&self) -> Self {
        Perm::inverse(self)
    }
    fn generator(letter: MoveLetter) -> Self {
        letter.perm()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.0 {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// One-line notation, e.g. `45312`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::InvalidPerm { text: s.to_string(), reason: reason.to_string() };
        if s.chars().count() != DEGREE {
            return Err(bad("expected five digits"));
        }
        let mut images = [0; DEGREE];
        for (slot, c) in images.iter_mut().zip(s.chars()) {
            *slot = c.to_digit(10).ok_or_else(|| bad("expected five digits"))? as u8;
        }
        Perm::from_images(images)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An element `(σ, x, y)` of `S5 × Z/2 × Z/3`. The derived ordering is the
/// lexicographic order of `(one-line σ, x, y)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    pub sigma: Perm,
    x: u8,
    y: u8,
}

impl GroupElem {
    /// Number of elements of the group.
    pub const ORDER: usize = 720;

    pub const IDENTITY: GroupElem = GroupElem { sigma: Perm::IDENTITY, x: 0, y: 0 };

    /// Residues are reduced to `0..2` and `0..3`.
    pub fn new(sigma: Perm, x: i64, y: i64) -> Self {
        GroupElem { sigma, x: x.rem_euclid(2) as u8, y: y.rem_euclid(3) as u8 }
    }

    pub fn x(&self) -> u8 {
        self.x
    }

    pub fn y(&self) -> u8 {
        self.y
    }

    /// Dense index in `0..720` that agrees with the derived ordering.
    pub fn index(&self) -> usize {
        self.sigma.rank() * 6 + self.x as usize * 3 + self.y as usize
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < Self::ORDER, "group index {index} out of range");
        let (rank, rest) = (index / 6, index % 6);
        GroupElem { sigma: Perm::unrank(rank), x: (rest / 3) as u8, y: (rest % 3) as u8 }
    }

    /// Every element, in ascending order.
    pub fn all() -> impl Iterator<Item = GroupElem> {
        (0..Self::ORDER).map(GroupElem::from_index)
    }
}

impl Group for GroupElem {
    fn identity() -> Self {
        GroupElem::IDENTITY
    }
    fn mul(&self, rhs: &Self) -> Self {
        GroupElem { sigma: self.sigma.compose(&rhs.sigma), x: (self.x + rhs.x) % 2, y: (self.y + rhs.y) % 3 }
    }
    fn inverse(&self) -> Self {
        GroupElem { sigma: self.sigma.inverse(), x: (2 - self.x) % 2, y: (3 - self.y) % 3 }
    }
    fn generator(letter: MoveLetter) -> Self {
        letter.generator()
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.sigma, self.x, self.y)
    }
}

impl fmt::Debug for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GroupElem {
    type Err = Error;

    /// Parses `(45312,1,0)`; the parentheses are optional.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPerm { text: s.to_string(), reason: "expected (σ,x,y)".into() };
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let [sigma, x, y] = parts.as_slice() else {
            return Err(bad());
        };
        let x: u8 = x.parse().map_err(|_| bad())?;
        let y: u8 = y.parse().map_err(|_| bad())?;
        if x > 1 || y > 2 {
            return Err(bad());
        }
        Ok(GroupElem::new(sigma.parse()?, x.into(), y.into()))
    }
}

impl Serialize for GroupElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One of the three moves of the blank: left, right, vertical.
///
/// The variant order `L < R < V` is the order used for canonical words and
/// for branching in the Hamiltonian search.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum MoveLetter {
    L,
    R,
    V,
}

impl MoveLetter {
    pub const ALL: [MoveLetter; 3] = [MoveLetter::L, MoveLetter::R, MoveLetter::V];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'L' => Ok(MoveLetter::L),
            'R' => Ok(MoveLetter::R),
            'V' => Ok(MoveLetter::V),
            _ => Err(Error::InvalidLetter(c)),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            MoveLetter::L => 'L',
            MoveLetter::R => 'R',
            MoveLetter::V => 'V',
        }
    }

    /// Swaps L and R. Since `R⁻¹ = L` and `V⁻¹ = V` this is also the letter
    /// of the inverse generator.
    pub fn reflect(self) -> Self {
        match self {
            MoveLetter::L => MoveLetter::R,
            MoveLetter::R => MoveLetter::L,
            MoveLetter::V => MoveLetter::V,
        }
    }

    /// `L = (1,2)(3,5,4)`, `R = (1,2)(3,4,5)`, `V = (1,4)(2,5)`.
    pub fn perm(self) -> Perm {
        match self {
            MoveLetter::L => Perm([2, 1, 5, 3, 4]),
            MoveLetter::R => Perm([2, 1, 4, 5, 3]),
            MoveLetter::V => Perm([4, 5, 3, 1, 2]),
        }
    }

    /// `L̂ = (L,0,2)`, `R̂ = (R,0,1)`, `V̂ = (V,1,0)`.
    pub fn generator(self) -> GroupElem {
        match self {
            MoveLetter::L => GroupElem { sigma: self.perm(), x: 0, y: 2 },
            MoveLetter::R => GroupElem { sigma: self.perm(), x: 0, y: 1 },
            MoveLetter::V => GroupElem { sigma: self.perm(), x: 1, y: 0 },
        }
    }
}

impl fmt::Display for MoveLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{L, R, V}`. Parsed case-insensitively, printed in
/// uppercase without separators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MoveWord(Vec<MoveLetter>);

impl MoveWord {
    pub fn new(letters: Vec<MoveLetter>) -> Self {
        MoveWord(letters)
    }

    pub fn empty() -> Self {
        MoveWord(Vec::new())
    }

    pub fn letters(&self) -> &[MoveLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: MoveLetter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn concat(&self, other: &MoveWord) -> MoveWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        MoveWord(letters)
    }

    pub fn repeat(&self, times: usize) -> MoveWord {
        MoveWord(self.0.repeat(times))
    }

    /// Cyclic left shift by `k`: `x1..xn ↦ x(k+1)..xn x1..xk`.
    pub fn rotate(&self, k: usize) -> MoveWord {
        let mut letters = self.0.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        MoveWord(letters)
    }

    pub fn reversed(&self) -> MoveWord {
        MoveWord(self.0.iter().rev().copied().collect())
    }

    /// L and R interchanged.
    pub fn reflected(&self) -> MoveWord {
        MoveWord(self.0.iter().map(|l| l.reflect()).collect())
    }

    /// Word tracing the same walk backwards.
    pub fn inverse(&self) -> MoveWord {
        self.reversed().reflected()
    }

    /// Drops the final letter, if any.
    pub fn without_last(&self) -> MoveWord {
        let mut letters = self.0.clone();
        letters.pop();
        MoveWord(letters)
    }

    pub fn with_letter(&self, position: usize, letter: MoveLetter) -> MoveWord {
        let mut letters = self.0.clone();
        letters[position] = letter;
        MoveWord(letters)
    }

    /// Left-to-right product of the letters' images in `G`.
    pub fn product_in<G: Group>(&self) -> G {
        self.0.iter().fold(G::identity(), |acc, &l| acc.mul(&G::generator(l)))
    }

    /// `φ_{S5}(w)`.
    pub fn perm_product(&self) -> Perm {
        self.product_in()
    }

    /// `φ_G(ŵ)`.
    pub fn product(&self) -> GroupElem {
        self.product_in()
    }

    /// Running products `g_1, ..., g_n` (the identity is not included).
    pub fn prefix_products<G: Group>(&self) -> Vec<G> {
        let mut acc = G::identity();
        self.0
            .iter()
            .map(|&l| {
                acc = acc.mul(&G::generator(l));
                acc
            })
            .collect()
    }
}

/// Product of `word` either in `S5 × Z/2 × Z/3` (`lift = true`) or in `S5`.
pub fn word_product(word: &MoveWord, lift: bool) -> WordValue {
    if lift {
        WordValue::Lifted(word.product())
    } else {
        WordValue::Plain(word.perm_product())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordValue {
    Plain(Perm),
    Lifted(GroupElem),
}

impl From<Vec<MoveLetter>> for MoveWord {
    fn from(letters: Vec<MoveLetter>) -> Self {
        MoveWord(letters)
    }
}

impl FromIterator<MoveLetter> for MoveWord {
    fn from_iter<I: IntoIterator<Item = MoveLetter>>(iter: I) -> Self {
        MoveWord(iter.into_iter().collect())
    }
}

impl fmt::Display for MoveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MoveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MoveWord({self})")
    }
}

impl FromStr for MoveWord {
    type Err = Error;

    /// Whitespace is ignored so that grouped words like `VLVR VLVR` parse.
    fn from_str(s: &str) -> Result<Self> {
        s.chars().filter(|c| !c.is_whitespace()).map(MoveLetter::from_char).collect()
    }
}

impl Serialize for MoveWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MoveWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn compose_matches_table_rows() {
        assert_eq!(p("45312").compose(&p("21534")), p("54231"));
        assert_eq!(p("24153").compose(&p("31254")), p("12435"));
        let sigma = p("35241");
        assert_eq!(Perm::IDENTITY.compose(&sigma), sigma);
    }

    #[test]
    fn inverse_and_order() {
        assert_eq!(MoveLetter::R.perm().inverse(), MoveLetter::L.perm());
        assert_eq!(Perm::IDENTITY.inverse(), Perm::IDENTITY);
        let g24 = p("53412");
        let inv = g24.inverse();
        // Direct evaluation: g24 maps 1→5, 2→3, 3→4, 4→1, 5→2, so the
        // inverse maps 5→1, 3→2, 4→3, 1→4, 2→5.
        assert_eq!(inv, p("45231"));
        assert_eq!(inv, Perm::parse_cycles("(1,4,3,2,5)").unwrap());
        assert_eq!(g24.compose(&inv), Perm::IDENTITY);
        assert_eq!(g24.order(), 5);
        assert_eq!(Perm::IDENTITY.order(), 1);
        assert_eq!(p("45312").order(), 2);
        assert_eq!(p("45312").compose(&p("45312")), Perm::IDENTITY);
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Perm::parse_cycles("(1,2)(3,4,5)").unwrap(), p("21453"));
        assert_eq!(Perm::parse_cycles("").unwrap(), Perm::IDENTITY);
        assert_eq!(Perm::parse_cycles("(1,5,2,3,4)").unwrap(), p("53412"));
        assert_eq!(Perm::parse_cycles(" (1, 4) (2,5) ").unwrap(), MoveLetter::V.perm());
        assert_eq!(p("53412").to_cycles(), "(1,5,2,3,4)");
        assert_eq!(Perm::IDENTITY.to_cycles(), "()");
    }

    #[test]
    fn cycle_notation_errors_name_the_token() {
        match Perm::parse_cycles("(1,2)(2,3)") {
            Err(Error::CycleSyntax { token, .. }) => assert_eq!(token, "2"),
            other => panic!("unexpected {other:?}"),
        }
        match Perm::parse_cycles("(1,6)") {
            Err(Error::CycleSyntax { token, .. }) => assert_eq!(token, "6"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Perm::parse_cycles("(1,x)").is_err());
        assert!(Perm::parse_cycles("(1,2").is_err());
        assert!(Perm::parse_cycles("1,2)").is_err());
    }

    #[test]
    fn one_line_parsing_rejects_non_permutations() {
        assert!("12344".parse::<Perm>().is_err());
        assert!("1234".parse::<Perm>().is_err());
        assert!("12346".parse::<Perm>().is_err());
        assert!("1234a".parse::<Perm>().is_err());
    }

    #[test]
    fn rank_is_lexicographic() {
        let mut all: Vec<Perm> = (0..120).map(Perm::unrank).collect();
        assert_eq!(all[0], Perm::IDENTITY);
        assert_eq!(all[119], p("54321"));
        for (i, q) in all.iter().enumerate() {
            assert_eq!(q.rank(), i);
        }
        let sorted = {
            let mut s = all.clone();
            s.sort();
            s
        };
        assert_eq!(all, sorted);
        all.dedup();
        assert_eq!(all.len(), 120);
    }

    #[test]
    fn generators() {
        assert_eq!(MoveLetter::R.generator(), GroupElem::new(p("21453"), 0, 1));
        assert_eq!(MoveLetter::L.generator(), GroupElem::new(p("21534"), 0, 2));
        assert_eq!(MoveLetter::V.generator(), GroupElem::new(p("45312"), 1, 0));
    }

    #[test]
    fn group_mul_examples() {
        let r = MoveLetter::R.generator();
        let l = MoveLetter::L.generator();
        let v = MoveLetter::V.generator();
        assert_eq!(r.mul(&r.inverse()), GroupElem::IDENTITY);
        assert_eq!(l.mul(&l), GroupElem::new(p("12453"), 0, 1));
        assert_eq!(v.mul(&v), GroupElem::IDENTITY);
        assert_eq!(r.mul(&l).y(), 0);
        assert_eq!(r.inverse(), l);
    }

    #[test]
    fn residues_are_canonical() {
        let g = GroupElem::new(Perm::IDENTITY, -3, 7);
        assert_eq!((g.x(), g.y()), (1, 1));
        assert_eq!("(12345,1,1)".parse::<GroupElem>().unwrap(), g);
        assert!("(12345,2,0)".parse::<GroupElem>().is_err());
    }

    #[test]
    fn index_round_trip() {
        for (i, g) in GroupElem::all().enumerate() {
            assert_eq!(g.index(), i);
        }
        let mut v: Vec<_> = GroupElem::all().collect();
        let copy = v.clone();
        v.sort();
        assert_eq!(v, copy);
    }

    #[test]
    fn words_parse_and_print() {
        let w: MoveWord = "vlVR".parse().unwrap();
        assert_eq!(w.to_string(), "VLVR");
        assert!("VLX".parse::<MoveWord>().is_err());
        assert_eq!(w.rotate(1).to_string(), "LVRV");
        assert_eq!(w.reflected().to_string(), "VRVL");
        assert_eq!(w.reversed().to_string(), "RVLV");
        assert_eq!(w.inverse().to_string(), "LVRV");
        assert!(MoveWord::empty().rotate(3).is_empty());
    }

    #[test]
    fn word_products() {
        let s: MoveWord = "VLVRVLVRVRVL".parse().unwrap();
        assert_eq!(s.perm_product(), p("25413"));
        assert_eq!(word_product(&s, false), WordValue::Plain(p("25413")));
        let ss: MoveWord = "VLVRVLVRVRVLVLVRVLVRVRVR".parse().unwrap();
        assert_eq!(ss.repeat(5).perm_product(), Perm::IDENTITY);
        // 7 R and 5 L: 7·1 + 5·2 = 17 ≡ 2 (mod 3).
        assert_eq!((ss.count(MoveLetter::R), ss.count(MoveLetter::L)), (7, 5));
        assert_eq!(ss.product().y(), 2);
        assert_eq!(MoveWord::empty().product(), GroupElem::IDENTITY);
    }
}
