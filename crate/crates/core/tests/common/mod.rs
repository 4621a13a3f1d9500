#![allow(dead_code)]

use framelink::codecs::parse_pd;
use framelink::diagram::LinkDiagram;

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
pub const HOPF: &str = "X[4,1,3,2] X[2,3,1,4]";

pub fn pd(s: &str) -> LinkDiagram {
    parse_pd(s).unwrap()
}

/// Rolfsen table knots through eight crossings as DT codes.
pub const TABLE_KNOTS: &[(&str, &str)] = &[
    ("3_1", "4 6 2"),
    ("4_1", "4 6 8 2"),
    ("5_1", "6 8 10 2 4"),
    ("5_2", "4 8 10 2 6"),
    ("6_1", "4 8 12 10 2 6"),
    ("6_2", "4 8 10 12 2 6"),
    ("6_3", "4 8 10 2 12 6"),
    ("7_1", "8 10 12 14 2 4 6"),
    ("7_2", "4 10 14 12 2 8 6"),
    ("7_3", "6 10 12 14 2 4 8"),
    ("7_4", "6 10 12 14 4 2 8"),
    ("7_5", "4 10 12 14 2 8 6"),
    ("7_6", "4 8 12 2 14 6 10"),
    ("7_7", "4 8 10 12 2 14 6"),
    ("8_1", "4 10 16 14 12 2 8 6"),
    ("8_2", "4 10 12 14 16 2 6 8"),
    ("8_3", "6 12 10 16 14 4 2 8"),
    ("8_4", "6 10 12 16 14 4 2 8"),
    ("8_5", "6 8 12 2 14 16 4 10"),
    ("8_6", "4 10 14 16 12 2 8 6"),
    ("8_7", "4 10 12 14 2 16 6 8"),
    ("8_8", "4 8 12 2 16 14 6 10"),
    ("8_9", "6 10 12 14 16 4 2 8"),
    ("8_10", "4 8 12 2 14 16 6 10"),
    ("8_11", "4 10 12 14 16 2 8 6"),
    ("8_12", "4 8 14 10 2 16 6 12"),
    ("8_13", "4 10 12 14 2 16 8 6"),
    ("8_14", "4 8 10 14 2 16 6 12"),
    ("8_15", "4 8 12 2 14 6 16 10"),
    ("8_16", "6 8 14 12 4 16 2 10"),
    ("8_17", "6 8 12 14 4 16 2 10"),
    ("8_18", "6 8 10 12 14 16 2 4"),
    ("8_19", "4 8 -12 2 -14 -16 -6 -10"),
    ("8_20", "4 8 -12 2 -14 -6 -16 -10"),
    ("8_21", "4 8 -12 2 14 -6 16 10"),
];

use framelink::diagram::ComponentId;
use framelink::sampling::random_diagram;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn sample(seed: u64, components: usize, max_crossings: usize) -> LinkDiagram {
    random_diagram(&mut ChaCha8Rng::seed_from_u64(seed), components, max_crossings)
}

/// Arcs of components `a` and `b` that can be joined by a band.
pub fn band_arcs(d: &LinkDiagram, a: ComponentId, b: ComponentId) -> Option<(u32, u32)> {
    let comps = d.trace_components();
    for &x in comps[a.0].arcs() {
        for &y in comps[b.0].arcs() {
            if d.band_faces(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Where each component of `d` went in `e`, found through arc labels that
/// survive the edit. Crossing-free components are matched in order.
pub fn component_map(d: &LinkDiagram, e: &LinkDiagram) -> Vec<ComponentId> {
    use framelink::diagram::ArcRef;
    let n = e.component_count();
    let mut map: Vec<Option<ComponentId>> = d
        .trace_components()
        .iter()
        .map(|c| c.arcs().iter().find_map(|&a| e.component_of(ArcRef::Label(a))))
        .collect();
    let free: Vec<ComponentId> = (0..n).map(ComponentId).filter(|c| !map.contains(&Some(*c))).collect();
    let mut free = free.into_iter();
    for m in map.iter_mut().filter(|m| m.is_none()) {
        *m = free.next();
    }
    map.into_iter().map(|m| m.expect("component survives")).collect()
}

/// `m` with rows and columns moved by `map`.
pub fn permuted(m: &[Vec<i64>], map: &[ComponentId]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[map[i].0][map[j].0] = m[i][j];
        }
    }
    out
}

/// Whether some reordering of components carries `a` to `b`.
pub fn equal_up_to_order(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    a.len() == b.len()
        && perms(a.len()).iter().any(|p| {
            let map: Vec<ComponentId> = p.iter().map(|&i| ComponentId(i)).collect();
            permuted(a, &map) == b
        })
}
