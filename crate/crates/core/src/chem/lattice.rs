//! Hexagonal lattice with exact integer coordinates.
//!
//! Hexagon cells live in axial coordinates `(q, r)`. Corner vertices live on
//! a doubled integer lattice: the cell `(q, r)` has scaled center
//! `(2q + r, 3r)` and its six corners are the center plus the fixed offsets
//! below, so corners shared between adjacent cells coincide as integer pairs
//! and merge by key equality — no floating point anywhere.

/// Number of lattice directions; direction labels are `0..6` in cyclic order
/// with `d` and `(d + 3) % 6` opposite.
pub const DIRECTION_COUNT: u8 = 6;

const CELL_DELTAS: [(i32, i32); 6] = [(1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1)];

const CORNER_OFFSETS: [(i32, i32); 6] = [(1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1), (0, 2)];

/// A hexagon cell in axial coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub q: i32,
    pub r: i32,
}

/// A hexagon corner on the doubled integer lattice. Each corner is shared by
/// up to three mutually adjacent cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub x: i32,
    pub y: i32,
}

pub fn opposite(direction: u8) -> u8 {
    (direction + 3) % 6
}

impl Cell {
    pub const ORIGIN: Cell = Cell { q: 0, r: 0 };

    pub fn neighbor(self, direction: u8) -> Cell {
        let (dq, dr) = CELL_DELTAS[direction as usize];
        Cell {
            q: self.q + dq,
            r: self.r + dr,
        }
    }

    pub fn is_adjacent(self, other: Cell) -> bool {
        let delta = (other.q - self.q, other.r - self.r);
        CELL_DELTAS.contains(&delta)
    }

    /// The six corners in cyclic order. The edge shared with
    /// `self.neighbor(d)` is exactly `(corners[d], corners[(d + 1) % 6])`.
    pub fn corners(self) -> [Corner; 6] {
        let cx = 2 * self.q + self.r;
        let cy = 3 * self.r;
        CORNER_OFFSETS.map(|(ox, oy)| Corner {
            x: cx + ox,
            y: cy + oy,
        })
    }

    /// Rotation by one direction step about the origin.
    pub fn rotated(self) -> Cell {
        Cell {
            q: -self.r,
            r: self.q + self.r,
        }
    }

    /// Reflection swapping the two axial axes.
    pub fn reflected(self) -> Cell {
        Cell {
            q: self.r,
            r: self.q,
        }
    }
}

/// Canonical representative of a cell set under the 12 lattice symmetries
/// (6 rotations, optionally composed with a reflection) and translation:
/// the lexicographically smallest normalized sorted coordinate list.
pub fn canonical_cells(cells: &[Cell]) -> Vec<Cell> {
    let mut best: Option<Vec<Cell>> = None;
    let mut variant: Vec<Cell> = cells.to_vec();
    for flip in 0..2 {
        if flip == 1 {
            variant = cells.iter().map(|c| c.reflected()).collect();
        }
        for _ in 0..6 {
            variant = variant.iter().map(|c| c.rotated()).collect();
            let normalized = normalize(&variant);
            if best.as_ref().is_none_or(|b| normalized < *b) {
                best = Some(normalized);
            }
        }
    }
    best.unwrap_or_default()
}

fn normalize(cells: &[Cell]) -> Vec<Cell> {
    let min_q = cells.iter().map(|c| c.q).min().unwrap_or(0);
    let min_r = cells.iter().map(|c| c.r).min().unwrap_or(0);
    let mut out: Vec<Cell> = cells
        .iter()
        .map(|c| Cell {
            q: c.q - min_q,
            r: c.r - min_r,
        })
        .collect();
    out.sort();
    out
}
