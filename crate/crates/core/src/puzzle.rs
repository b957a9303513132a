//! The cylindrical 5-puzzle: five tiles and a blank on the 2×3 grid whose
//! columns wrap around.
//!
//! A position is encoded as `(σ, x, y)` where `(x, y)` is the blank cell and
//! `σ` lists the tiles found at the offsets `(0,1) (0,2) (1,0) (1,1) (1,2)`
//! from the blank, in that order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{GroupElem, MoveLetter, Perm};

pub const ROWS: usize = 2;
pub const COLS: usize = 3;
pub const CELLS: usize = ROWS * COLS;

/// A cell of the board, an element of `Z/2 × Z/3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CylCoord {
    pub row: u8,
    pub col: u8,
}

impl std::ops::Add for CylCoord {
    type Output = CylCoord;

    fn add(self, other: CylCoord) -> CylCoord {
        CylCoord::new(i64::from(self.row + other.row), i64::from(self.col + other.col))
    }
}

impl std::ops::Sub for CylCoord {
    type Output = CylCoord;

    fn sub(self, other: CylCoord) -> CylCoord {
        CylCoord::new(i64::from(self.row) - i64::from(other.row), i64::from(self.col) - i64::from(other.col))
    }
}

impl CylCoord {
    pub fn new(row: i64, col: i64) -> Self {
        CylCoord { row: row.rem_euclid(ROWS as i64) as u8, col: col.rem_euclid(COLS as i64) as u8 }
    }

    /// Row-major cell index.
    pub fn index(self) -> usize {
        self.row as usize * COLS + self.col as usize
    }

    pub fn from_index(i: usize) -> Self {
        CylCoord { row: (i / COLS) as u8, col: (i % COLS) as u8 }
    }
}

/// Offsets from the blank at which `σ` reads its five entries.
pub const READ_OFFSETS: [CylCoord; 5] = [
    CylCoord { row: 0, col: 1 },
    CylCoord { row: 0, col: 2 },
    CylCoord { row: 1, col: 0 },
    CylCoord { row: 1, col: 1 },
    CylCoord { row: 1, col: 2 },
];

/// Displacement of the blank under each move.
pub fn move_offset(letter: MoveLetter) -> CylCoord {
    match letter {
        MoveLetter::R => CylCoord { row: 0, col: 1 },
        MoveLetter::L => CylCoord { row: 0, col: 2 },
        MoveLetter::V => CylCoord { row: 1, col: 0 },
    }
}

/// A simple undirected graph on the cells of the board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoardGraph {
    pub vertices: Vec<CylCoord>,
    /// Pairs of vertex indices with `a < b`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl BoardGraph {
    pub fn has_edge(&self, a: CylCoord, b: CylCoord) -> bool {
        let (a, b) = (a.index(), b.index());
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: CylCoord) -> usize {
        let v = v.index();
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }
}

/// The 2×3 cylinder: `v ~ w` iff `v - w ∈ {(1,0), ±(0,1)}`.
pub fn build_cylinder(rows: usize, cols: usize) -> Result<BoardGraph> {
    if (rows, cols) != (ROWS, COLS) {
        return Err(Error::UnsupportedBoard { rows, cols });
    }
    let vertices: Vec<CylCoord> = (0..CELLS).map(CylCoord::from_index).collect();
    let steps = [CylCoord::new(1, 0), CylCoord::new(0, 1), CylCoord::new(0, -1)];
    let mut edges = BTreeSet::new();
    for &v in &vertices {
        for &w in &vertices {
            if v != w && steps.contains(&(v - w)) {
                edges.insert((v.index().min(w.index()), v.index().max(w.index())));
            }
        }
    }
    Ok(BoardGraph { vertices, edges })
}

/// Tile labels by row-major cell; `0` is the blank.
///
/// Text form is two slash-separated rows, e.g. `012/345`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position([u8; CELLS]);

impl Position {
    /// Blank at `(0,0)`, tiles placed so that the encoding is the identity.
    pub const HOME: Position = Position([0, 1, 2, 3, 4, 5]);

    pub fn from_cells(cells: [u8; CELLS]) -> Result<Self> {
        let mut seen = [false; CELLS];
        for &t in &cells {
            if t as usize >= CELLS || std::mem::replace(&mut seen[t as usize], true) {
                let text = Position(cells).to_string();
                return Err(Error::InvalidPosition { text, reason: "each of 0-5 must appear once".into() });
            }
        }
        Ok(Position(cells))
    }

    pub fn cells(&self) -> [u8; CELLS] {
        self.0
    }

    pub fn tile_at(&self, c: CylCoord) -> u8 {
        self.0[c.index()]
    }

    pub fn blank(&self) -> CylCoord {
        let i = self.0.iter().position(|&t| t == 0).expect("position has a blank");
        CylCoord::from_index(i)
    }

    /// Swaps the blank with the tile one move away.
    pub fn apply_move(&self, letter: MoveLetter) -> Position {
        let b = self.blank();
        let target = b + move_offset(letter);
        let mut cells = self.0;
        cells.swap(b.index(), target.index());
        Position(cells)
    }

    pub fn encode(&self) -> GroupElem {
        let b = self.blank();
        let mut images = [0; 5];
        for (slot, off) in images.iter_mut().zip(READ_OFFSETS) {
            *slot = self.tile_at(b + off);
        }
        let sigma = Perm::from_images(images).expect("non-blank cells hold 1..5");
        GroupElem::new(sigma, b.row.into(), b.col.into())
    }

    pub fn decode(g: &GroupElem) -> Position {
        let b = CylCoord::new(g.x().into(), g.y().into());
        let mut cells = [0; CELLS];
        for (&tile, off) in g.sigma.images().iter().zip(READ_OFFSETS) {
            cells[(b + off).index()] = tile;
        }
        Position(cells)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i == COLS {
                write!(f, "/")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Position({self})")
    }
}

impl FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidPosition { text: s.to_string(), reason: reason.to_string() };
        let rows: Vec<&str> = s.trim().split('/').collect();
        if rows.len() != ROWS || rows.iter().any(|r| r.chars().count() != COLS) {
            return Err(bad("expected two rows of three digits, e.g. 012/345"));
        }
        let mut cells = [0; CELLS];
        for (slot, c) in cells.iter_mut().zip(rows.concat().chars()) {
            let d = c.to_digit(10).filter(|&d| (d as usize) < CELLS).ok_or_else(|| bad("digits must be 0-5"))?;
            *slot = d as u8;
        }
        Position::from_cells(cells).map_err(|_| bad("each of 0-5 must appear once"))
    }
}

impl Serialize for Position {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Position {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
