//! Named example complexes, seeded random corpora, and the bundled example
//! directory.

use std::collections::BTreeMap;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{CubicalComplex, SimplicialComplex};
use crate::games::LabelledState;
use crate::graph::Graph;
use crate::graphconn::GraphConnection;
use crate::groupoid::{tribar_groupoid, TRIBAR_OBJECTS};
use crate::invariants::quotient_identify;
use crate::io::{to_pretty_json, ComplexFile};
use crate::perm::{Perm, SignedPerm};

/// Environment variable overriding the bundled corpus location.
pub const CORPUS_DIR_VAR: &str = "GROUPOID_CORPUS_DIR";

pub fn bundled_dir() -> PathBuf {
    std::env::var_os(CORPUS_DIR_VAR)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus"))
}

pub fn cycle(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_graph(&Graph::cycle(n)).unwrap()
}

pub fn tetrahedron_boundary() -> SimplicialComplex {
    SimplicialComplex::new(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).unwrap()
}

/// Antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron_boundary() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    SimplicialComplex::new(facets).unwrap()
}

/// Triangles `{i, i+1, i+2}` for `i < n`.
pub fn fan_strip(n: usize) -> SimplicialComplex {
    SimplicialComplex::new((0..n).map(|i| vec![i, i + 1, i + 2]).collect()).unwrap()
}

/// Triangles of the unit squares with lower-left corners `cells`, each cut
/// along the diagonal `(x, y)–(x+1, y+1)`. Vertex ids follow sorted
/// coordinates.
pub fn triangulated_patch(cells: &[(i64, i64)]) -> (SimplicialComplex, Vec<Vec<i64>>) {
    let mut triangles = Vec::new();
    for &(x, y) in cells {
        triangles.push([(x, y), (x + 1, y), (x + 1, y + 1)]);
        triangles.push([(x, y), (x, y + 1), (x + 1, y + 1)]);
    }
    let mut points: Vec<(i64, i64)> = triangles.iter().flatten().copied().collect();
    points.sort_unstable();
    points.dedup();
    let id = |p: &(i64, i64)| points.binary_search(p).unwrap();
    let facets = triangles.iter().map(|t| t.iter().map(id).collect()).collect();
    let coords = points.iter().map(|&(x, y)| vec![x, y]).collect();
    (SimplicialComplex::new(facets).unwrap(), coords)
}

/// Union of unit `k`-cubes with the given lower corners; vertex ids follow
/// sorted coordinates, bit `i` of a corner address steps along axis `i`.
pub fn lattice_cubes(k: usize, cells: &[Vec<i64>]) -> (CubicalComplex, Vec<Vec<i64>>) {
    let corner = |base: &[i64], address: usize| -> Vec<i64> {
        (0..k).map(|i| base[i] + (address >> i & 1) as i64).collect()
    };
    let mut points: Vec<Vec<i64>> = cells
        .iter()
        .flat_map(|b| (0..1usize << k).map(move |a| corner(b, a)))
        .collect();
    points.sort_unstable();
    points.dedup();
    let cubes = cells
        .iter()
        .map(|b| {
            (0..1usize << k)
                .map(|a| points.binary_search(&corner(b, a)).unwrap())
                .collect()
        })
        .collect();
    (CubicalComplex::new(k, cubes).unwrap(), points)
}

/// The box of `sizes[0] × sizes[1] × …` unit cubes.
pub fn grid_patch(sizes: &[usize]) -> (CubicalComplex, Vec<Vec<i64>>) {
    lattice_cubes(sizes.len(), &box_cells(sizes))
}

fn box_cells(sizes: &[usize]) -> Vec<Vec<i64>> {
    let mut cells = vec![vec![]];
    for &s in sizes {
        cells = cells
            .into_iter()
            .flat_map(|c: Vec<i64>| {
                (0..s as i64).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    cells
}

/// A single `k`-cube with 0/1 coordinates.
pub fn cube(k: usize) -> (CubicalComplex, Vec<Vec<i64>>) {
    grid_patch(&vec![1; k])
}

/// `n ≥ 3` unit `k`-cubes glued end to end along axis 0 into a ring; the
/// last gluing applies `twist`, a symmetry of the `(k−1)`-cube cross
/// section.
pub fn prism_ring(n: usize, k: usize, twist: &SignedPerm) -> CubicalComplex {
    assert!(n >= 3 && k >= 2 && twist.degree() == k - 1);
    let section = 1usize << (k - 1);
    let glue = twist.corner_action();
    let cubes = (0..n)
        .map(|i| {
            (0..1usize << k)
                .map(|x| {
                    let c = x >> 1;
                    match (x & 1, i + 1 == n) {
                        (0, _) => i * section + c,
                        (_, false) => (i + 1) * section + c,
                        (_, true) => glue.apply(c),
                    }
                })
                .collect()
        })
        .collect();
    CubicalComplex::new(k, cubes).unwrap()
}

/// Ring of `n` squares, optionally closed with a reflection of the cross
/// edge.
pub fn square_ring(n: usize, twisted: bool) -> CubicalComplex {
    let twist = if twisted {
        SignedPerm::reflection(1, 0)
    } else {
        SignedPerm::identity(1)
    };
    prism_ring(n, 2, &twist)
}

/// The 3×3 square grid with the corner `(0,0)` identified with `(3,0)`.
pub fn quotient_example() -> CubicalComplex {
    let (grid, coords) = grid_patch(&[3, 3]);
    let id = |p: [i64; 2]| coords.iter().position(|c| c[..] == p).unwrap();
    let q = quotient_identify(&grid, id([0, 0]), id([3, 0])).expect("corners are far apart");
    CubicalComplex::try_from(q).unwrap()
}

/// Lloyd's board with the pieces in order and the hole on the last cell.
pub fn lloyd_start() -> LabelledState {
    LabelledState::ordered(16, 15)
}

/// The same position with the pieces labelled 14 and 15 (0-based 13 and 14)
/// exchanged.
pub fn lloyd_14_15() -> LabelledState {
    let mut s = lloyd_start();
    s.placement.swap(13, 14);
    s
}

/// A member of a generated corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub complex: CubicalComplex,
    /// lattice coordinates when the complex is a union of lattice cubes
    pub coords: Option<Vec<Vec<i64>>>,
}

impl CorpusEntry {
    pub fn is_grid_subcomplex(&self) -> bool {
        self.coords.is_some()
    }
}

fn random_cells(rng: &mut ChaCha8Rng, sizes: &[usize]) -> Vec<Vec<i64>> {
    let keep = rng.gen_range(0.4..0.95);
    let mut cells: Vec<Vec<i64>> = box_cells(sizes)
        .into_iter()
        .filter(|_| rng.gen_bool(keep))
        .collect();
    if cells.is_empty() {
        cells.push(vec![0; sizes.len()]);
    }
    cells
}

fn random_signed(rng: &mut ChaCha8Rng, k: usize) -> SignedPerm {
    let mut images: Vec<usize> = (0..k).collect();
    images.shuffle(rng);
    let signs = (0..k).map(|_| if rng.gen_bool(0.5) { -1 } else { 1 }).collect();
    SignedPerm::new(Perm::from_images(images).unwrap(), signs).unwrap()
}

/// Reproducible random cubical complexes: subsets of 2- and 3-dimensional
/// grids, rings of squares and cubes closed by random cross-section
/// symmetries, and quotients of grid subsets by a vertex identification.
pub fn random_cubical(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| match rng.gen_range(0..4) {
            0 => {
                let sizes = [rng.gen_range(1..=4), rng.gen_range(1..=4)];
                let (complex, coords) = lattice_cubes(2, &random_cells(&mut rng, &sizes));
                CorpusEntry {
                    name: format!("grid2-{i}"),
                    complex,
                    coords: Some(coords),
                }
            }
            1 => {
                let sizes = [rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=2)];
                let (complex, coords) = lattice_cubes(3, &random_cells(&mut rng, &sizes));
                CorpusEntry {
                    name: format!("grid3-{i}"),
                    complex,
                    coords: Some(coords),
                }
            }
            2 => {
                let k = rng.gen_range(2..=3);
                let n = rng.gen_range(3..=7);
                let twist = random_signed(&mut rng, k - 1);
                CorpusEntry {
                    name: format!("ring-{i}"),
                    complex: prism_ring(n, k, &twist),
                    coords: None,
                }
            }
            _ => {
                let sizes = [rng.gen_range(2..=4), rng.gen_range(2..=4)];
                let (grid, _) = lattice_cubes(2, &random_cells(&mut rng, &sizes));
                let n = grid.vertex_count();
                let merged = (0..10).find_map(|_| {
                    let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    quotient_identify(&grid, u.min(v), u.max(v)).ok()
                });
                CorpusEntry {
                    name: format!("quotient-{i}"),
                    complex: merged
                        .map(|q| CubicalComplex::try_from(q).unwrap())
                        .unwrap_or(grid),
                    coords: None,
                }
            }
        })
        .collect()
}

/// Reproducible random triangulated lattice patches.
pub fn random_simplicial(seed: u64, count: usize) -> Vec<(String, SimplicialComplex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let sizes = [rng.gen_range(1..=4), rng.gen_range(1..=4)];
            let cells: Vec<(i64, i64)> = random_cells(&mut rng, &sizes)
                .into_iter()
                .map(|c| (c[0], c[1]))
                .collect();
            (format!("patch-{i}"), triangulated_patch(&cells).0)
        })
        .collect()
}

/// Every bundled example as `(file name, contents)`.
pub fn bundled_files() -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut put = |name: &str, body: String| {
        out.insert(format!("{name}.json"), body);
    };
    for n in [3, 4, 5, 6, 7, 8, 9, 11] {
        let name = format!("c{n}");
        put(&name, to_pretty_json(&ComplexFile::simplicial(&cycle(n), Some(&name))));
    }
    for (name, k) in [
        ("tetrahedron-boundary", tetrahedron_boundary()),
        ("octahedron-boundary", octahedron_boundary()),
        ("fan-strip", fan_strip(6)),
    ] {
        put(name, to_pretty_json(&ComplexFile::simplicial(&k, Some(name))));
    }
    for (name, (k, coords)) in [
        ("square", cube(2)),
        ("cube", cube(3)),
        ("grid-3x3", grid_patch(&[3, 3])),
        ("grid-4x4", grid_patch(&[4, 4])),
        ("grid-2x2x2", grid_patch(&[2, 2, 2])),
    ] {
        put(name, to_pretty_json(&ComplexFile::cubical(&k, Some(name), Some(coords))));
    }
    let (l_shape, coords) = lattice_cubes(2, &[vec![0, 0], vec![1, 0], vec![2, 0], vec![0, 1], vec![0, 2]]);
    put("grid-l-shape", to_pretty_json(&ComplexFile::cubical(&l_shape, Some("grid-l-shape"), Some(coords))));
    for (name, k) in [
        ("twisted-strip", square_ring(4, true)),
        ("twisted-ring-5", square_ring(5, true)),
        ("annulus", square_ring(4, false)),
        ("quotient-example", quotient_example()),
    ] {
        put(name, to_pretty_json(&ComplexFile::cubical(&k, Some(name), None)));
    }
    put(
        "tribar",
        to_pretty_json(&ComplexFile::groupoid(&tribar_groupoid(), Some("tribar"), &TRIBAR_OBJECTS)),
    );
    put("lloyd-start", to_pretty_json(&lloyd_start()));
    put("lloyd-14-15", to_pretty_json(&lloyd_14_15()));
    put(
        "c4-connection",
        to_pretty_json(&GraphConnection::order_preserving(&Graph::cycle(4)).unwrap().to_file()),
    );
    put(
        "k4-rotation",
        to_pretty_json(&GraphConnection::rotation(&Graph::complete(4), 1).unwrap().to_file()),
    );
    out
}
