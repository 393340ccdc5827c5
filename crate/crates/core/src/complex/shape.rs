use serde::{Deserialize, Serialize};

/// The combinatorial type shared by all facets of a pure complex.
///
/// A facet's vertices are addressed by *slots*. For a `d`-simplex the slots
/// are `0..=d` in increasing vertex order; for a `k`-cube they are the corner
/// addresses `0..2^k`, bit `i` of an address being coordinate `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "shape", content = "dim", rename_all = "lowercase")]
pub enum CellShape {
    Simplex(usize),
    Cube(usize),
}

impl CellShape {
    pub fn dim(&self) -> usize {
        match *self {
            CellShape::Simplex(d) | CellShape::Cube(d) => d,
        }
    }

    pub fn slot_count(&self) -> usize {
        match *self {
            CellShape::Simplex(d) => d + 1,
            CellShape::Cube(k) => 1 << k,
        }
    }

    /// Dimension of a face from its number of vertices.
    pub fn face_dim(&self, vertex_count: usize) -> usize {
        match self {
            CellShape::Simplex(_) => vertex_count - 1,
            CellShape::Cube(_) => vertex_count.trailing_zeros() as usize,
        }
    }

    /// Every nonempty face as a sorted slot list.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        match *self {
            CellShape::Simplex(d) => (1usize..1 << (d + 1))
                .map(|mask| (0..=d).filter(|i| mask >> i & 1 == 1).collect())
                .collect(),
            CellShape::Cube(k) => {
                let full = (1usize << k) - 1;
                let mut out = Vec::new();
                for free in 0..=full {
                    let fixed_axes = full & !free;
                    // enumerate values on the fixed axes
                    let mut value = 0usize;
                    loop {
                        out.push(cube_face_slots(free, value));
                        if value == fixed_axes {
                            break;
                        }
                        value = (value.wrapping_sub(fixed_axes)) & fixed_axes;
                    }
                }
                out
            }
        }
    }

    /// Codimension-one faces as sorted slot lists. For cubes the ridge with
    /// index `2 * axis + value` freezes coordinate `axis` at `value`; for
    /// simplices ridge `j` omits slot `j`.
    pub fn ridges(&self) -> Vec<Vec<usize>> {
        match *self {
            CellShape::Simplex(d) => (0..=d)
                .map(|j| (0..=d).filter(|&i| i != j).collect())
                .collect(),
            CellShape::Cube(k) => (0..2 * k)
                .map(|r| {
                    let (axis, value) = (r / 2, r % 2);
                    (0..1usize << k).filter(|x| x >> axis & 1 == value).collect()
                })
                .collect(),
        }
    }

    /// The 1-dimensional faces as slot pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            CellShape::Simplex(d) => (0..=d)
                .flat_map(|a| (a + 1..=d).map(move |b| (a, b)))
                .collect(),
            CellShape::Cube(k) => (0..1usize << k)
                .flat_map(|x| {
                    (0..k)
                        .filter(move |i| x >> i & 1 == 0)
                        .map(move |i| (x, x | 1 << i))
                })
                .collect(),
        }
    }

    /// Slot bijection `source → target` for the unique isomorphism of the two
    /// cells that fixes their shared ridge pointwise.
    ///
    /// `source` and `target` hold vertex ids by slot; the ridges are given by
    /// their index in [`CellShape::ridges`] within each cell.
    pub fn flip_map(
        &self,
        source: &[usize],
        source_ridge: usize,
        target: &[usize],
        target_ridge: usize,
    ) -> Vec<usize> {
        let slot_in_target = |v: usize| target.iter().position(|&w| w == v).expect("shared vertex");
        match *self {
            CellShape::Simplex(_) => {
                // ridge j omits slot j, so the free slots are the ridge indices
                (0..source.len())
                    .map(|s| {
                        if s == source_ridge {
                            target_ridge
                        } else {
                            slot_in_target(source[s])
                        }
                    })
                    .collect()
            }
            CellShape::Cube(_) => {
                let (axis, value) = (source_ridge / 2, source_ridge % 2);
                let target_axis = target_ridge / 2;
                (0..source.len())
                    .map(|x| {
                        if x >> axis & 1 == value {
                            slot_in_target(source[x])
                        } else {
                            slot_in_target(source[x ^ 1 << axis]) ^ 1 << target_axis
                        }
                    })
                    .collect()
            }
        }
    }
}

fn cube_face_slots(free: usize, value: usize) -> Vec<usize> {
    // all x with x & !free == value, in increasing order
    let mut out = Vec::new();
    let mut sub = 0usize;
    loop {
        out.push(value | sub);
        if sub == free {
            break;
        }
        sub = (sub.wrapping_sub(free)) & free;
    }
    out.sort_unstable();
    out
}
