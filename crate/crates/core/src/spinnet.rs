//! Rotation and twist–rotation graphs on binary coupling schemes.
//!
//! A vertex is a planar binary tree over `n + 1` labeled leaves, written as a
//! bracketed word such as `((a b) c)`. A rotation re-brackets one triple and
//! keeps the leaf order; a twist swaps the two subtrees of one internal node.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fusion::Shape;

pub const MIN_N: usize = 2;
pub const MAX_N: usize = 8;
/// Largest `n` for which the labeled (twist) graph is materialised.
pub const MAX_TWIST_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Rotation,
    Twist,
}

/// Handedness of a twist in the q-braided graph, where each twist edge splits in two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Handedness {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub kind: EdgeKind,
}

#[derive(Clone, Debug)]
pub struct CouplingGraph {
    pub n: usize,
    pub twists: bool,
    pub vertices: Vec<Shape>,
    pub edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

fn swap_at(s: &Shape, index: usize) -> Option<Shape> {
    fn walk(s: &Shape, index: usize, seen: &mut usize) -> Option<Shape> {
        let Shape::Node(l, r) = s else { return None };
        if *seen == index {
            return Some(Shape::Node(r.clone(), l.clone()));
        }
        *seen += 1;
        let before = *seen;
        if let Some(nl) = walk(l, index, seen) {
            return Some(Shape::Node(Box::new(nl), r.clone()));
        }
        *seen = before + l.internal_count();
        walk(r, index, seen).map(|nr| Shape::Node(l.clone(), Box::new(nr)))
    }
    walk(s, index, &mut 0)
}

fn leaf_order(s: &Shape) -> Vec<usize> {
    match s {
        Shape::Leaf(i) => vec![*i],
        Shape::Node(l, r) => {
            let mut v = leaf_order(l);
            v.extend(leaf_order(r));
            v
        }
    }
}

/// Bracketed-word encoding with leaves named `a, b, c, ...`.
pub fn encode(s: &Shape) -> String {
    match s {
        Shape::Leaf(i) => char::from(b'a' + *i as u8).to_string(),
        Shape::Node(l, r) => format!("({} {})", encode(l), encode(r)),
    }
}

fn neighbors(s: &Shape, twists: bool) -> Vec<(EdgeKind, Shape)> {
    let mut out: Vec<(EdgeKind, Shape)> = s.neighbors().into_iter().map(|(_, t)| (EdgeKind::Rotation, t)).collect();
    if twists {
        for idx in 0..s.internal_count() {
            out.push((EdgeKind::Twist, swap_at(s, idx).expect("index is internal")));
        }
    }
    out
}

fn check_range(n: usize, max: usize) -> Result<()> {
    if (MIN_N..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::GraphRange { n, min: MIN_N, max })
    }
}

impl CouplingGraph {
    /// Full graph on `n + 1` leaves. Without twists the leaf order stays fixed.
    pub fn build(n: usize, twists: bool) -> Result<Self> {
        check_range(n, if twists { MAX_TWIST_N } else { MAX_N })?;
        let start = Shape::left_comb(n + 1);
        let mut index: HashMap<Shape, usize> = HashMap::from([(start.clone(), 0)]);
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new()];
        let mut cursor = 0;
        while cursor < vertices.len() {
            let here = vertices[cursor].clone();
            for (kind, next) in neighbors(&here, twists) {
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = vertices.len();
                        index.insert(next.clone(), id);
                        vertices.push(next);
                        adjacency.push(Vec::new());
                        id
                    }
                };
                if cursor < id {
                    edges.push(Edge { a: cursor, b: id, kind });
                }
                adjacency[cursor].push(id);
            }
            cursor += 1;
        }
        Ok(CouplingGraph { n, twists, vertices, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn encoding(&self, v: usize) -> String {
        encode(&self.vertices[v])
    }

    /// Every twist edge once per handedness.
    pub fn braided_twists(&self) -> impl Iterator<Item = (Edge, Handedness)> + '_ {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Twist)
            .flat_map(|&e| [(e, Handedness::Left), (e, Handedness::Right)])
    }

    /// Breadth-first distances from `source`.
    pub fn distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn eccentricity(&self, source: usize) -> usize {
        self.distances(source).into_iter().max().unwrap_or(0)
    }

    /// Exact diameter by breadth-first search from every vertex.
    pub fn diameter(&self) -> usize {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        self.max_eccentricity(&all)
    }

    /// Diameter of a twist graph using the leaf-relabeling symmetry: every
    /// vertex is the image of one with leaves in natural order, so only those
    /// sources are searched.
    pub fn diameter_by_symmetry(&self) -> usize {
        if !self.twists {
            return self.diameter();
        }
        let natural: Vec<usize> = (0..=self.n).collect();
        let sources: Vec<usize> =
            (0..self.vertices.len()).filter(|&v| leaf_order(&self.vertices[v]) == natural).collect();
        self.max_eccentricity(&sources)
    }

    /// Largest eccentricity over `sources`, searched on all available cores.
    fn max_eccentricity(&self, sources: &[usize]) -> usize {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(sources.len().max(1));
        let chunk = sources.len().div_ceil(workers).max(1);
        std::thread::scope(|s| {
            let handles: Vec<_> = sources
                .chunks(chunk)
                .map(|part| s.spawn(move || part.iter().map(|&v| self.eccentricity(v)).max().unwrap_or(0)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("search thread panicked")).max().unwrap_or(0)
        })
    }

    pub fn is_connected(&self) -> bool {
        self.distances(0).iter().all(|&d| d != usize::MAX)
    }
}

/// `n! · Catalan(n)` for the labeled family, `Catalan(n)` for a fixed leaf order.
pub fn expected_vertices(n: usize, twists: bool) -> u64 {
    let catalan = (0..n as u64).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2));
    if twists {
        (1..=n as u64 + 1).product::<u64>() * catalan
    } else {
        catalan
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRow {
    pub n: usize,
    pub vertices: usize,
    pub diameter: usize,
    /// `diameter / (n ln n)`.
    pub ratio: f64,
    /// `c · n ln n` with the fitted `c`.
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
    /// Smallest `c` with `diameter <= c · n ln n` on every row.
    pub fitted_c: f64,
    /// Largest over smallest per-row ratio.
    pub spread: f64,
}

impl GrowthTable {
    pub fn monotone(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].diameter <= w[1].diameter)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,vertices,diameter,ratio,bound\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{:.6},{:.6}", r.n, r.vertices, r.diameter, r.ratio, r.bound);
        }
        out
    }
}

/// Diameter sweep over `n = 2..=n_max` on the fixed-order rotation graphs.
pub fn growth_check(n_max: usize) -> Result<GrowthTable> {
    growth_table(n_max, false)
}

/// Same sweep on the labeled twist–rotation graphs.
pub fn growth_check_twists(n_max: usize) -> Result<GrowthTable> {
    growth_table(n_max, true)
}

fn growth_table(n_max: usize, twists: bool) -> Result<GrowthTable> {
    check_range(n_max, if twists { MAX_TWIST_N } else { MAX_N })?;
    let mut rows = Vec::new();
    for n in MIN_N..=n_max {
        let g = CouplingGraph::build(n, twists)?;
        let diameter = g.diameter_by_symmetry();
        let nlogn = n as f64 * (n as f64).ln();
        rows.push(GrowthRow { n, vertices: g.vertex_count(), diameter, ratio: diameter as f64 / nlogn, bound: 0.0 });
    }
    let fitted_c = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    let min_ratio = rows.iter().map(|r| r.ratio).fold(f64::INFINITY, f64::min);
    for r in &mut rows {
        r.bound = fitted_c * r.n as f64 * (r.n as f64).ln();
    }
    Ok(GrowthTable { rows, fitted_c, spread: fitted_c / min_ratio })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_counts() {
        assert_eq!(CouplingGraph::build(3, true).unwrap().vertex_count(), 120);
        assert_eq!(CouplingGraph::build(2, true).unwrap().vertex_count(), 12);
        assert_eq!(CouplingGraph::build(3, false).unwrap().vertex_count(), 5);
        for n in 2..=7 {
            let g = CouplingGraph::build(n, false).unwrap();
            assert_eq!(g.vertex_count() as u64, expected_vertices(n, false));
        }
        assert_eq!(expected_vertices(3, true), 120);
    }

    #[test]
    fn small_diameters() {
        assert_eq!(CouplingGraph::build(2, false).unwrap().diameter(), 1);
        assert_eq!(CouplingGraph::build(3, false).unwrap().diameter(), 2);
        let g = CouplingGraph::build(3, true).unwrap();
        assert_eq!(g.diameter_by_symmetry(), g.diameter());
    }

    #[test]
    fn range_errors() {
        assert_eq!(CouplingGraph::build(1, false).unwrap_err(), Error::GraphRange { n: 1, min: 2, max: 8 });
        assert!(CouplingGraph::build(9, false).is_err());
        assert!(CouplingGraph::build(7, true).is_err());
    }

    #[test]
    fn encodings() {
        let g = CouplingGraph::build(2, false).unwrap();
        assert_eq!(g.encoding(0), "((a b) c)");
        assert_eq!(g.encoding(1), "(a (b c))");
    }

    #[test]
    fn regular_degrees() {
        for n in 2..=5 {
            let g = CouplingGraph::build(n, true).unwrap();
            let mut rot = vec![0; g.vertex_count()];
            let mut tw = vec![0; g.vertex_count()];
            for e in &g.edges {
                let slot = if e.kind == EdgeKind::Rotation { &mut rot } else { &mut tw };
                slot[e.a] += 1;
                slot[e.b] += 1;
            }
            assert!(rot.iter().all(|&d| d == n - 1), "n={n}");
            assert!(tw.iter().all(|&d| d == n), "n={n}");
            assert_eq!(g.braided_twists().count(), 2 * g.edges.iter().filter(|e| e.kind == EdgeKind::Twist).count());
        }
    }

    #[test]
    fn growth_table_shape() {
        let t = growth_check(6).unwrap();
        assert_eq!(t.rows.len(), 5);
        assert!(t.monotone());
        assert!(t.rows.iter().all(|r| r.bound > 0.0 && r.diameter as f64 <= r.bound + 1e-12));
        assert!(t.to_csv().starts_with("n,vertices,diameter,ratio,bound\n2,2,1,"));
    }
}
