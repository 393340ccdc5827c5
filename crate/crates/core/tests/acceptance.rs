//! One PASS/FAIL line per acceptance criterion. Runs against the bundled
//! corpus directory and exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::time::{Duration, Instant};

use combgroupoid::complex::{CellComplex, CubicalComplex, VertexMap};
use combgroupoid::corpus::{
    bundled_dir, cycle, lattice_cubes, lloyd_14_15, lloyd_start, quotient_example, random_cubical,
    random_simplicial,
};
use combgroupoid::games::{grid_puzzle, puzzle_holonomy, reachable, LabelledState, Puzzle};
use combgroupoid::graph::Graph;
use combgroupoid::groupoid::{tribar_groupoid, Groupoid};
use combgroupoid::holonomy::{complex_holonomy, holonomy_group, induced_embedding_check};
use combgroupoid::homcx::{induced_swap_action, HomComplex};
use combgroupoid::invariants::{
    compare_invariants, i_invariant, is_rainbow, lattice_parity_coloring,
    locally_strongly_connected, transport_coloring, ParityForm, TransportColoringError,
};
use combgroupoid::io::{parse_document, Document, Loaded};
use combgroupoid::perm::{GroupTag, PermGroup};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    check(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn corpus() -> BTreeMap<String, Document> {
    let dir = bundled_dir();
    let mut out = BTreeMap::new();
    for entry in fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())) {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        // states and connections are not complex documents
        if let Ok(doc) = parse_document(&text) {
            out.insert(path.file_stem().unwrap().to_string_lossy().into_owned(), doc);
        }
    }
    out
}

fn lloyd() -> Outcome {
    let start = Instant::now();
    let p = grid_puzzle(4, 4).map_err(|e| e.to_string())?;
    let group = puzzle_holonomy(&p, 15).map_err(|e| e.to_string())?;
    let half: BigUint = (1..=15u32).map(BigUint::from).product::<BigUint>() / 2u32;
    check(group.order() == &half, format!("order {}", group.order()))?;
    check(half == BigUint::from(653_837_184_000u64), "15!/2")?;
    check(group.recognize() == GroupTag::Alternating(15), format!("{}", group.recognize()))?;
    let swapped = reachable(&p, &lloyd_start(), &lloyd_14_15()).map_err(|e| e.to_string())?;
    check(!swapped, "14-15 instance reported reachable")?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("order {} alternating(15), unreachable, {:?}", group.order(), start.elapsed()))
}

fn cycles() -> Outcome {
    for n in [3, 5, 7, 9, 11, 4, 6, 8] {
        let h = complex_holonomy(&cycle(n), 0).map_err(|e| e.to_string())?;
        let expected = if n % 2 == 1 { 2 } else { 1 };
        check(h.tag().is_cyclic_of(expected), format!("c{n}: {}", h.tag()))?;
        check(h.order() == &BigUint::from(expected), format!("c{n}: order {}", h.order()))?;
    }
    Ok("odd cycles cyclic(2), even cycles trivial".into())
}

fn hom_spheres() -> Outcome {
    let start = Instant::now();
    let mut found = Vec::new();
    for (m, chi) in [(3, 0), (4, 2), (5, 0), (6, 2)] {
        let x = HomComplex::new(&Graph::complete(2), &Graph::complete(m)).map_err(|e| e.to_string())?;
        check(x.euler_characteristic() == chi, format!("K{m}: chi {}", x.euler_characteristic()))?;
        let swap = induced_swap_action(&x).map_err(|e| e.to_string())?;
        check(swap.is_free(), format!("K{m}: swap has fixed points"))?;
        found.push(x.euler_characteristic().to_string());
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    Ok(format!("chi {} with free swaps, {:?}", found.join(","), start.elapsed()))
}

fn cubical_invariants() -> Outcome {
    let entries = random_cubical(0, 200);
    let mut both = 0;
    for e in &entries {
        let r = compare_invariants(&e.complex);
        check(r.i <= r.nacl, format!("{}: I={} NaCl={}", e.name, r.i, r.nacl))?;
        if r.hypotheses_hold() {
            both += 1;
            check(r.equal, format!("{}: I={} NaCl={}", e.name, r.i, r.nacl))?;
        }
    }
    let q = compare_invariants(&quotient_example());
    check(q.i == 0 && q.nacl == 1, format!("quotient example: I={} NaCl={}", q.i, q.nacl))?;
    Ok(format!("200 complexes, {both} satisfy both hypotheses, quotient I=0 NaCl=1"))
}

/// Lower corners of the cubes of a lattice complex.
fn cells_of(k: &CubicalComplex, coords: &[Vec<i64>]) -> Vec<Vec<i64>> {
    k.facets()
        .iter()
        .map(|f| {
            (0..coords[0].len())
                .map(|i| f.iter().map(|&v| coords[v][i]).min().unwrap())
                .collect()
        })
        .collect()
}

fn subsets(cells: &[Vec<i64>], rng: &mut ChaCha8Rng) -> Vec<Vec<Vec<i64>>> {
    let n = cells.len();
    let masks: Vec<u64> = if n <= 10 {
        (1..1u64 << n).collect()
    } else {
        (0..300).map(|_| rng.gen_range(1..1u64 << n)).collect()
    };
    masks
        .into_iter()
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| cells[i].clone()).collect())
        .collect()
}

fn zonotope() -> Outcome {
    let mut patches = 0;
    let mut subcomplexes = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for (name, doc) in corpus() {
        let (Loaded::Cubical(k), Some(coords)) = (&doc.body, &doc.coords) else {
            continue;
        };
        patches += 1;
        for form in [ParityForm::Lattice, ParityForm::Zonotope] {
            let points: Vec<Vec<i64>> = match form {
                ParityForm::Lattice => coords.clone(),
                // corners of the product of intervals [-1, 1]
                ParityForm::Zonotope => coords
                    .iter()
                    .map(|p| p.iter().map(|&x| if x % 2 == 0 { 1 } else { -1 }).collect())
                    .collect(),
            };
            let colors = lattice_parity_coloring(&points, form);
            check(k.one_skeleton().is_proper_coloring(&colors), format!("{name}: {form:?}"))?;
        }
        for cells in subsets(&cells_of(k, coords), &mut rng) {
            let (sub, _) = lattice_cubes(k.dim(), &cells);
            check(i_invariant(&sub).value == 0, format!("{name}: subcomplex {cells:?}"))?;
            subcomplexes += 1;
        }
    }
    for e in random_cubical(0, 200).iter().filter(|e| e.is_grid_subcomplex()) {
        let colors = lattice_parity_coloring(e.coords.as_ref().unwrap(), ParityForm::Lattice);
        check(e.complex.one_skeleton().is_proper_coloring(&colors), e.name.clone())?;
        check(i_invariant(&e.complex).value == 0, e.name.clone())?;
        subcomplexes += 1;
    }
    check(patches >= 5, format!("only {patches} bundled lattice complexes"))?;
    Ok(format!("{patches} bundled patches, {subcomplexes} grid subcomplexes with I=0"))
}

fn coverings() -> Outcome {
    for (n, m) in [(6, 3), (9, 3), (8, 4)] {
        let (source, target) = (cycle(n), cycle(m));
        let f = VertexMap::new(&source, &target, (0..n).map(|i| i % m).collect())
            .map_err(|e| e.to_string())?;
        let r = induced_embedding_check(&f).map_err(|e| e.to_string())?;
        check(r.embedded, format!("c{n}->c{m}: {r:?}"))?;
        check(r.image_order == r.source_order, format!("c{n}->c{m}: {r:?}"))?;
    }
    Ok("c6->c3, c9->c3, c8->c4 embed with equal image order".into())
}

fn transport() -> Outcome {
    let mut complexes: Vec<(String, CellComplex)> = corpus()
        .into_iter()
        .filter_map(|(name, doc)| match doc.body {
            Loaded::Simplicial(k) => Some((name, k.into_inner())),
            _ => None,
        })
        .collect();
    complexes.extend(random_simplicial(0, 40).into_iter().map(|(n, k)| (n, k.into_inner())));
    let mut colored = 0;
    for (name, k) in &complexes {
        let Ok(h) = complex_holonomy(k, 0) else { continue };
        if !h.group.is_trivial() || !locally_strongly_connected(k) {
            continue;
        }
        let c = transport_coloring(k).map_err(|e| format!("{name}: {e}"))?;
        check(is_rainbow(k, &c), format!("{name}: not rainbow"))?;
        colored += 1;
    }
    check(colored > 0, "no complex qualified")?;
    match transport_coloring(&cycle(3)) {
        Err(TransportColoringError::NontrivialHolonomy { .. }) => {}
        other => return Err(format!("c3: {other:?}")),
    }
    Ok(format!("{colored} complexes colored, c3 refused"))
}

fn tribar() -> Outcome {
    let h = holonomy_group(&tribar_groupoid(), 0).map_err(|e| e.to_string())?;
    check(h.tag() == GroupTag::Cyclic(4), format!("{}", h.tag()))?;
    Ok(format!("{}", h.tag()))
}

fn oracles() -> Outcome {
    // group orders against closure
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut sets = 0;
    while sets < 50 {
        let degree = rng.gen_range(1..=8);
        let gens: Vec<Vec<usize>> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let mut p: Vec<usize> = (0..degree).collect();
                for i in (1..degree).rev() {
                    p.swap(i, rng.gen_range(0..=i));
                }
                p
            })
            .collect();
        let Some(elements) = closure(degree, &gens, 100_000) else { continue };
        let group = PermGroup::new(degree, gens.iter().map(|g| perm(g)).collect()).unwrap();
        check(group.order() == &BigUint::from(elements.len()), format!("{gens:?}"))?;
        sets += 1;
    }

    // holonomy against closed walks
    let mut complexes: Vec<CellComplex> = (3..=8).map(|n| cycle(n).into_inner()).collect();
    for doc in corpus().into_values() {
        if let Some(k) = doc.body.complex() {
            complexes.push(k.clone());
        }
    }
    complexes.extend(random_cubical(1, 40).into_iter().map(|e| e.complex.into_inner()));
    let mut groupoids: Vec<Groupoid> = complexes
        .iter()
        .filter(|k| k.facet_count() <= 8 && k.is_strongly_connected())
        .map(Groupoid::from_complex)
        .collect();
    groupoids.push(tribar_groupoid());
    for g in &groupoids {
        let h = holonomy_group(g, 0).unwrap();
        let walks = closed_path_group(g, 0, 2 * g.object_count());
        check(h.order() == &BigUint::from(walks.len()), "holonomy order")?;
        for gen in &h.generators {
            check(walks.contains(gen.images()), format!("generator {gen}"))?;
        }
    }

    // reachability against state search
    let boards = [Graph::grid(2, 2), Graph::grid(2, 3), Graph::cycle(5), Graph::complete(4), Graph::path(6)];
    let mut states = 0;
    for board in boards {
        let p = Puzzle::new(board).unwrap();
        let start = LabelledState::ordered(p.cell_count(), 0);
        let seen: HashSet<LabelledState> = reachable_states(&p, &start);
        for s in all_states(p.cell_count()) {
            check(reachable(&p, &start, &s).unwrap() == seen.contains(&s), format!("{s:?}"))?;
            states += 1;
        }
    }
    Ok(format!("50 generator sets, {} groupoids, {states} puzzle states", groupoids.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("15-puzzle holonomy", lloyd),
        ("cycle holonomy", cycles),
        ("Hom spheres", hom_spheres),
        ("cubical invariants", cubical_invariants),
        ("lattice parity", zonotope),
        ("induced functor", coverings),
        ("transport coloring", transport),
        ("tribar", tribar),
        ("oracle suites", oracles),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: panicked", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
