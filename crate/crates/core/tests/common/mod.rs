//! Brute-force oracles shared by the integration tests. None of them calls
//! the library's group or holonomy algorithms.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use combgroupoid::complex::CellComplex;
use combgroupoid::games::{LabelledState, Puzzle};
use combgroupoid::graph::Graph;
use combgroupoid::groupoid::Groupoid;
use combgroupoid::perm::Perm;

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}

/// Every element generated by `gens`, by breadth-first multiplication.
pub fn closure(degree: usize, gens: &[Vec<usize>], limit: usize) -> Option<HashSet<Vec<usize>>> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

/// Slot maps of all closed walks at `base` of length at most `max_len`,
/// closed under composition.
pub fn closed_path_group(g: &Groupoid, base: usize, max_len: usize) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..g.slot_count()).collect();
    let mut seen = HashSet::from([(base, id.clone())]);
    let mut frontier = vec![(base, id)];
    let mut loops = Vec::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (x, map) in &frontier {
            for m in g.morphisms().iter().filter(|m| m.source == *x) {
                let state = (m.target, compose(map, m.map.images()));
                if seen.insert(state.clone()) {
                    if state.0 == base {
                        loops.push(state.1.clone());
                    }
                    next.push(state);
                }
            }
        }
        frontier = next;
    }
    closure(g.slot_count(), &loops, 1_000_000).expect("small groups only")
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// All slot bijections between two facets that fix the shared vertices and
/// send faces onto faces.
pub fn brute_force_flips(k: &CellComplex, a: usize, b: usize) -> Vec<Vec<usize>> {
    let faces: HashSet<Vec<usize>> = k.shape().faces().into_iter().collect();
    let (fa, fb) = (k.facet(a), k.facet(b));
    permutations(k.shape().slot_count())
        .into_iter()
        .filter(|pi| {
            fa.iter().enumerate().all(|(s, v)| !fb.contains(v) || fb[pi[s]] == *v)
                && faces.iter().all(|f| {
                    let mut image: Vec<usize> = f.iter().map(|&s| pi[s]).collect();
                    image.sort_unstable();
                    faces.contains(&image)
                })
        })
        .collect()
}

/// Every labelled state reachable from `start` by sliding pieces.
pub fn reachable_states(p: &Puzzle, start: &LabelledState) -> HashSet<LabelledState> {
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(s) = queue.pop_front() {
        for &to in p.board().neighbors(s.hole) {
            let mut placement = s.placement.clone();
            for c in &mut placement {
                if *c == to {
                    *c = s.hole;
                }
            }
            let t = LabelledState { hole: to, placement };
            if seen.insert(t.clone()) {
                queue.push_back(t);
            }
        }
    }
    seen
}

/// Every labelled state of a board with `cells` cells.
pub fn all_states(cells: usize) -> Vec<LabelledState> {
    let mut out = Vec::new();
    for hole in 0..cells {
        let free: Vec<usize> = (0..cells).filter(|&c| c != hole).collect();
        for pi in permutations(cells - 1) {
            out.push(LabelledState {
                hole,
                placement: pi.iter().map(|&i| free[i]).collect(),
            });
        }
    }
    out
}

/// Whether some vertex coloring with `colors` colors makes every facet
/// rainbow.
pub fn rainbow_coloring_exists(k: &CellComplex, colors: usize) -> bool {
    fn go(k: &CellComplex, colors: usize, v: usize, assign: &mut Vec<usize>) -> bool {
        if v == k.vertex_count() {
            return true;
        }
        for c in 0..colors {
            assign.push(c);
            let ok = k.star(v).iter().all(|&f| {
                let seen: Vec<usize> = k.facet(f).iter().filter(|&&w| w <= v).map(|&w| assign[w]).collect();
                let mut dedup = seen.clone();
                dedup.sort_unstable();
                dedup.dedup();
                dedup.len() == seen.len()
            });
            if ok && go(k, colors, v + 1, assign) {
                return true;
            }
            assign.pop();
        }
        false
    }
    go(k, colors, 0, &mut Vec::new())
}

/// Cells of `Hom(G, H)` by testing every tuple of nonempty vertex sets.
pub fn brute_force_hom(g: &Graph, h: &Graph) -> Vec<Vec<u64>> {
    let sets = (1u64 << h.vertex_count()) - 1;
    let mut out = Vec::new();
    let mut eta = vec![1u64; g.vertex_count()];
    if g.vertex_count() == 0 {
        return out;
    }
    loop {
        let valid = g.edges().iter().all(|&(i, j)| {
            (0..h.vertex_count()).all(|a| {
                eta[i] >> a & 1 == 0
                    || (0..h.vertex_count()).all(|b| eta[j] >> b & 1 == 0 || h.has_edge(a, b))
            })
        });
        if valid {
            out.push(eta.clone());
        }
        // odometer over 1..=sets
        let mut i = 0;
        loop {
            if i == eta.len() {
                return out;
            }
            if eta[i] < sets {
                eta[i] += 1;
                break;
            }
            eta[i] = 1;
            i += 1;
        }
    }
}

pub fn perm(images: &[usize]) -> Perm {
    Perm::from_images(images.to_vec()).unwrap()
}
