//! Sliding-piece puzzles as groupoids.
//!
//! The objects of a puzzle groupoid are hole positions. Moving the hole from
//! `a` to the neighboring cell `b` slides the piece on `b` into `a`. At hole
//! `h` the slots are the other cells in increasing order, and a morphism
//! sends the slot of a piece's old cell to the slot of its new cell, so a
//! closed hole tour yields "the piece that started on cell `c` ends on
//! `π(c)`".
//!
//! On the 2×2 board with the hole on cell 0, the tour 0→1→3→2→0 moves the
//! piece from 1 to 2, from 2 to 3 and from 3 to 1.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::CellComplex;
use crate::graph::Graph;
use crate::groupoid::{ElemMorphism, Groupoid};
use crate::holonomy::{holonomy_group, HolonomyResult};
use crate::perm::{Perm, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GamesError {
    #[error("board must be connected with at least 2 cells")]
    DegenerateBoard,
    #[error("cell {0} is not on the board")]
    NoSuchCell(usize),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("states belong to boards with {expected} and {found} cells")]
    BoardMismatch { expected: usize, found: usize },
    #[error("cells {0} and {1} are not neighbors")]
    NotAMove(usize, usize),
}

/// One hole on a connected board; every other cell carries a piece.
#[derive(Clone, Debug)]
pub struct Puzzle {
    board: Graph,
}

impl Puzzle {
    pub fn new(board: Graph) -> Result<Self, GamesError> {
        if board.vertex_count() < 2 || !board.is_connected() {
            return Err(GamesError::DegenerateBoard);
        }
        Ok(Puzzle { board })
    }

    pub fn board(&self) -> &Graph {
        &self.board
    }

    pub fn cell_count(&self) -> usize {
        self.board.vertex_count()
    }

    pub fn piece_count(&self) -> usize {
        self.cell_count() - 1
    }

    /// One object per hole position.
    pub fn object_count(&self) -> usize {
        self.cell_count()
    }

    /// Hole-position groupoid; each board edge `{a, b}` with `a < b` is the
    /// morphism `a → b` labelled by its edge index.
    pub fn groupoid(&self) -> Groupoid {
        let moves = self
            .board
            .edges()
            .iter()
            .enumerate()
            .map(|(label, &(a, b))| ElemMorphism {
                source: a,
                target: b,
                label,
                map: self.move_map(a, b),
            })
            .collect();
        Groupoid::from_generators(self.cell_count(), self.piece_count(), None, moves)
            .expect("board edges are in range")
    }

    fn move_map(&self, a: usize, b: usize) -> Perm {
        let images = (0..self.cell_count())
            .filter(|&c| c != a)
            .map(|c| slot(b, if c == b { a } else { c }))
            .collect();
        Perm::from_images(images).unwrap()
    }

    /// Holonomy at a hole position, acting on that position's slots.
    pub fn holonomy(&self, base_hole: usize) -> Result<HolonomyResult, GamesError> {
        if base_hole >= self.cell_count() {
            return Err(GamesError::NoSuchCell(base_hole));
        }
        Ok(holonomy_group(&self.groupoid(), base_hole).expect("boards are connected"))
    }

    /// Shortest hole path between two cells, endpoints included.
    pub fn hole_path(&self, from: usize, to: usize) -> Result<Vec<usize>, GamesError> {
        for c in [from, to] {
            if c >= self.cell_count() {
                return Err(GamesError::NoSuchCell(c));
            }
        }
        let parent = self.board.bfs_parents(to);
        let mut path = vec![from];
        let mut at = from;
        while at != to {
            at = parent[at].expect("boards are connected");
            path.push(at);
        }
        Ok(path)
    }
}

/// The `m × n` grid board; cell `(r, c)` is `r * n + c`.
pub fn grid_puzzle(m: usize, n: usize) -> Result<Puzzle, GamesError> {
    if m * n < 2 {
        return Err(GamesError::DegenerateBoard);
    }
    Puzzle::new(Graph::grid(m, n))
}

/// Puzzle holonomy at `base_hole` as a group on its piece slots.
pub fn puzzle_holonomy(p: &Puzzle, base_hole: usize) -> Result<PermGroup, GamesError> {
    Ok(p.holonomy(base_hole)?.group)
}

/// Slot of cell `c` when the hole is on `hole`.
fn slot(hole: usize, c: usize) -> usize {
    if c < hole {
        c
    } else {
        c - 1
    }
}

/// A position with labelled pieces: `placement[piece] = cell`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelledState {
    pub hole: usize,
    pub placement: Vec<usize>,
}

impl LabelledState {
    /// Pieces `0, 1, …` on the non-hole cells in increasing order.
    pub fn ordered(cells: usize, hole: usize) -> Self {
        LabelledState {
            hole,
            placement: (0..cells).filter(|&c| c != hole).collect(),
        }
    }

    pub fn cell_count(&self) -> usize {
        self.placement.len() + 1
    }

    pub fn validate(&self, p: &Puzzle) -> Result<(), GamesError> {
        if self.cell_count() != p.cell_count() {
            return Err(GamesError::BoardMismatch {
                expected: p.cell_count(),
                found: self.cell_count(),
            });
        }
        let mut used = vec![false; p.cell_count()];
        if self.hole >= used.len() {
            return Err(GamesError::InvalidState(format!("hole {} is off the board", self.hole)));
        }
        used[self.hole] = true;
        for (piece, &c) in self.placement.iter().enumerate() {
            if c >= used.len() || std::mem::replace(&mut used[c], true) {
                return Err(GamesError::InvalidState(format!(
                    "piece {piece} placed on occupied or missing cell {c}"
                )));
            }
        }
        Ok(())
    }

    /// Slides the piece on the neighboring cell `to` into the hole.
    pub fn slide(&self, p: &Puzzle, to: usize) -> Result<LabelledState, GamesError> {
        if to >= p.cell_count() {
            return Err(GamesError::NoSuchCell(to));
        }
        if !p.board().has_edge(self.hole, to) {
            return Err(GamesError::NotAMove(self.hole, to));
        }
        let placement = self
            .placement
            .iter()
            .map(|&c| if c == to { self.hole } else { c })
            .collect();
        Ok(LabelledState { hole: to, placement })
    }

    /// Moves the hole through `holes` in turn (the current hole excluded).
    pub fn follow(&self, p: &Puzzle, holes: &[usize]) -> Result<LabelledState, GamesError> {
        let mut state = self.clone();
        for &h in holes {
            state = state.slide(p, h)?;
        }
        Ok(state)
    }
}

/// Whether `b` can be reached from `a` by sliding pieces.
///
/// `a` is carried along a shortest hole path to `b`'s hole; the remaining
/// piece permutation must lie in the holonomy there.
pub fn reachable(p: &Puzzle, a: &LabelledState, b: &LabelledState) -> Result<bool, GamesError> {
    a.validate(p)?;
    b.validate(p)?;
    let path = p.hole_path(a.hole, b.hole)?;
    let moved = a.follow(p, &path[1..])?;
    let h = b.hole;
    let mut images = vec![0; p.piece_count()];
    for (piece, &c) in moved.placement.iter().enumerate() {
        images[slot(h, c)] = slot(h, b.placement[piece]);
    }
    let residual = Perm::from_images(images).expect("both states are bijective");
    Ok(puzzle_holonomy(p, h)?.contains(&residual).unwrap())
}

/// The facet-flip groupoid of a pure complex read as a game: positions are
/// facets, a move exchanges one vertex.
pub fn game_groupoid_from_complex(k: &CellComplex) -> Groupoid {
    Groupoid::from_complex(k)
}
