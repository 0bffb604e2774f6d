//! Fusion trees in the singlet sector, F-moves between them and the braid action.
//!
//! A state of `2N` colored points with total spin 0 is stored as a planar
//! binary tree over the first `2N - 1` leaves whose root label equals the
//! color of the last leaf (the last leaf fuses with the root to the singlet).
//! Internal nodes are addressed by pre-order index and identified across
//! rotations by the leaf span they cover.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qtensor::{QContext, Spin};

/// Planar binary tree shape; leaves are numbered left to right from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf(usize),
    Node(Box<Shape>, Box<Shape>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `((a b) c) -> (a (b c))`
    Right,
    /// `(a (b c)) -> ((a b) c)`
    Left,
}

/// A rotation at the internal node with the given pre-order index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub node: usize,
    pub direction: Direction,
}

impl Rotation {
    pub fn inverse(self) -> Self {
        let direction = match self.direction {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        };
        Rotation { node: self.node, direction }
    }
}

fn node(l: Shape, r: Shape) -> Shape {
    Shape::Node(Box::new(l), Box::new(r))
}

impl Shape {
    /// `(((0 1) 2) ... (n-1))`
    pub fn left_comb(n: usize) -> Shape {
        (1..n).fold(Shape::Leaf(0), |acc, i| node(acc, Shape::Leaf(i)))
    }

    /// Left comb with leaves `i` and `i + 1` grouped into one pair.
    pub fn left_comb_with_pair(n: usize, i: usize) -> Shape {
        let mut acc = if i == 0 { node(Shape::Leaf(0), Shape::Leaf(1)) } else { Shape::Leaf(0) };
        let mut next = if i == 0 { 2 } else { 1 };
        while next < n {
            if next == i {
                acc = node(acc, node(Shape::Leaf(i), Shape::Leaf(i + 1)));
                next += 2;
            } else {
                acc = node(acc, Shape::Leaf(next));
                next += 1;
            }
        }
        acc
    }

    /// Tree for `N` cap pairs in which every odd generator acts diagonally:
    /// the pairs `(1 2) (3 4) ...` joined by a left comb, then point `2N - 1`.
    pub fn odd(caps: usize) -> Shape {
        let n = 2 * caps - 1;
        if n == 1 {
            return Shape::Leaf(0);
        }
        let pair = |l: usize| node(Shape::Leaf(2 * l), Shape::Leaf(2 * l + 1));
        let comb = (1..caps - 1).fold(pair(0), |acc, l| node(acc, pair(l)));
        node(comb, Shape::Leaf(n - 1))
    }

    /// Tree in which every even generator acts diagonally: point 1 joined with
    /// a left comb over the pairs `(2 3) (4 5) ... (2N-2 2N-1)`.
    pub fn even(caps: usize) -> Shape {
        if caps == 1 {
            return Shape::Leaf(0);
        }
        let pair = |l: usize| node(Shape::Leaf(2 * l + 1), Shape::Leaf(2 * l + 2));
        let comb = (1..caps - 1).fold(pair(0), |acc, l| node(acc, pair(l)));
        node(Shape::Leaf(0), comb)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Shape::Leaf(_) => 1,
            Shape::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn internal_count(&self) -> usize {
        self.leaf_count() - 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Shape::Leaf(_))
    }

    /// Inclusive range of leaves below this node.
    pub fn span(&self) -> (usize, usize) {
        match self {
            Shape::Leaf(i) => (*i, *i),
            Shape::Node(l, r) => (l.span().0, r.span().1),
        }
    }

    /// Spans of the internal nodes in pre-order.
    pub fn internal_spans(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.internal_count());
        fn walk(s: &Shape, out: &mut Vec<(usize, usize)>) {
            if let Shape::Node(l, r) = s {
                out.push(s.span());
                walk(l, out);
                walk(r, out);
            }
        }
        walk(self, &mut out);
        out
    }

    /// The internal node with the given pre-order index.
    pub fn internal(&self, index: usize) -> Option<&Shape> {
        fn walk<'a>(s: &'a Shape, index: usize, seen: &mut usize) -> Option<&'a Shape> {
            let Shape::Node(l, r) = s else { return None };
            if *seen == index {
                return Some(s);
            }
            *seen += 1;
            walk(l, index, seen).or_else(|| walk(r, index, seen))
        }
        walk(self, index, &mut 0)
    }

    /// Applies a rotation, or returns `None` when the node lacks the needed local shape.
    pub fn rotate(&self, rot: Rotation) -> Option<Shape> {
        fn walk(s: &Shape, rot: Rotation, seen: &mut usize) -> Option<Shape> {
            let Shape::Node(l, r) = s else { return None };
            if *seen == rot.node {
                return match (rot.direction, l.as_ref(), r.as_ref()) {
                    (Direction::Right, Shape::Node(a, b), c) => {
                        Some(node((**a).clone(), node((**b).clone(), c.clone())))
                    }
                    (Direction::Left, a, Shape::Node(b, c)) => {
                        Some(node(node(a.clone(), (**b).clone()), (**c).clone()))
                    }
                    _ => None,
                };
            }
            *seen += 1;
            let before = *seen;
            if let Some(nl) = walk(l, rot, seen) {
                return Some(node(nl, (**r).clone()));
            }
            *seen = before + l.internal_count();
            walk(r, rot, seen).map(|nr| node((**l).clone(), nr))
        }
        if rot.node >= self.internal_count() {
            return None;
        }
        walk(self, rot, &mut 0)
    }

    /// All shapes one rotation away, in a fixed order.
    pub fn neighbors(&self) -> Vec<(Rotation, Shape)> {
        let mut out = Vec::new();
        for idx in 0..self.internal_count() {
            for direction in [Direction::Right, Direction::Left] {
                let rot = Rotation { node: idx, direction };
                if let Some(s) = self.rotate(rot) {
                    out.push((rot, s));
                }
            }
        }
        out
    }

    /// True when leaves `i` and `i + 1` hang from the same node.
    pub fn are_siblings(&self, i: usize) -> bool {
        match self {
            Shape::Leaf(_) => false,
            Shape::Node(l, r) => {
                matches!((l.as_ref(), r.as_ref()), (Shape::Leaf(a), Shape::Leaf(b)) if *a == i && *b == i + 1)
                    || l.are_siblings(i)
                    || r.are_siblings(i)
            }
        }
    }

    /// True when the root's right child is the last leaf (or the tree is a single leaf).
    pub fn last_leaf_at_root(&self) -> bool {
        match self {
            Shape::Leaf(_) => true,
            Shape::Node(_, r) => matches!(r.as_ref(), Shape::Leaf(i) if *i + 1 == self.leaf_count()),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Leaf(i) => write!(f, "{i}"),
            Shape::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// Color and orientation carried by one of the `2N` points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Decoration {
    pub color: Spin,
    pub orientation: i8,
}

/// A tree shape plus the decorations of all `2N` points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FusionTree {
    pub shape: Shape,
    pub leaves: Vec<Decoration>,
}

impl FusionTree {
    pub fn new(shape: Shape, leaves: Vec<Decoration>) -> Result<Self> {
        if leaves.len() < 2 || !leaves.len().is_multiple_of(2) {
            return Err(Error::OddStrands(leaves.len()));
        }
        if shape.leaf_count() + 1 != leaves.len() {
            return Err(Error::Spec(format!("shape has {} leaves, expected {}", shape.leaf_count(), leaves.len() - 1)));
        }
        Ok(FusionTree { shape, leaves })
    }

    pub fn points(&self) -> usize {
        self.leaves.len()
    }

    pub fn caps(&self) -> usize {
        self.leaves.len() / 2
    }

    fn color(&self, leaf: usize) -> Spin {
        self.leaves[leaf].color
    }

    fn with_shape(&self, shape: Shape) -> FusionTree {
        FusionTree { shape, leaves: self.leaves.clone() }
    }
}

/// Admissible labelings of the internal nodes (pre-order), sorted lexicographically.
pub fn enumerate_states(tree: &FusionTree, ctx: &QContext) -> Vec<Vec<Spin>> {
    fn walk(s: &Shape, tree: &FusionTree, ctx: &QContext) -> Vec<(Spin, Vec<Spin>)> {
        match s {
            Shape::Leaf(i) => vec![(tree.color(*i), Vec::new())],
            Shape::Node(l, r) => {
                let left = walk(l, tree, ctx);
                let right = walk(r, tree, ctx);
                let mut out = Vec::new();
                for (a, la) in &left {
                    for (b, lb) in &right {
                        for z in ctx.channels(*a, *b) {
                            let mut labels = Vec::with_capacity(1 + la.len() + lb.len());
                            labels.push(z);
                            labels.extend_from_slice(la);
                            labels.extend_from_slice(lb);
                            out.push((z, labels));
                        }
                    }
                }
                out
            }
        }
    }
    let total = tree.color(tree.points() - 1);
    let mut states: Vec<Vec<Spin>> =
        walk(&tree.shape, tree, ctx).into_iter().filter(|(z, _)| *z == total).map(|(_, l)| l).collect();
    states.sort();
    states
}

/// Complex amplitudes over the enumerated states of one tree.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    pub tree: FusionTree,
    pub basis: Vec<Vec<Spin>>,
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn zero(tree: FusionTree, ctx: &QContext) -> Self {
        let basis = enumerate_states(&tree, ctx);
        let amplitudes = vec![Complex64::new(0.0, 0.0); basis.len()];
        StateVector { tree, basis, amplitudes }
    }

    /// The basis vector with the given labels.
    pub fn basis_state(tree: FusionTree, labels: &[Spin], ctx: &QContext) -> Result<Self> {
        let mut v = Self::zero(tree, ctx);
        let idx = v
            .index_of(labels)
            .ok_or_else(|| Error::Inadmissible(format!("labels {labels:?} are not an admissible state")))?;
        v.amplitudes[idx] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, labels: &[Spin]) -> Option<usize> {
        self.basis.binary_search_by(|b| b.as_slice().cmp(labels)).ok()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`, conjugate-linear in `self`; zero when the decorations differ.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.tree.leaves != other.tree.leaves {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if self.tree.shape != other.tree.shape {
            return Err(Error::Spec("inner product needs a common tree shape".into()));
        }
        Ok(self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum())
    }
}

/// Applies one rotation, transforming amplitudes with the F-matrix.
pub fn rotate(v: &StateVector, rot: Rotation, ctx: &QContext) -> Result<StateVector> {
    let old_shape = &v.tree.shape;
    let new_shape = old_shape.rotate(rot).ok_or(Error::BadNode(rot.node))?;
    let x = old_shape.internal(rot.node).ok_or(Error::BadNode(rot.node))?;
    let Shape::Node(xl, xr) = x else { return Err(Error::BadNode(rot.node)) };
    let (a, b, c) = match (rot.direction, xl.as_ref(), xr.as_ref()) {
        (Direction::Right, Shape::Node(a, b), c) => (a.span(), b.span(), c.span()),
        (Direction::Left, a, Shape::Node(b, c)) => (a.span(), b.span(), c.span()),
        _ => return Err(Error::BadNode(rot.node)),
    };
    let x_span = x.span();
    let ab = (a.0, b.1);
    let bc = (b.0, c.1);
    let (removed, added) = match rot.direction {
        Direction::Right => (ab, bc),
        Direction::Left => (bc, ab),
    };

    let new_tree = v.tree.with_shape(new_shape);
    let new_basis = enumerate_states(&new_tree, ctx);
    let old_spans = old_shape.internal_spans();
    let new_spans = new_tree.shape.internal_spans();
    let old_pos: HashMap<(usize, usize), usize> = old_spans.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let new_pos: HashMap<(usize, usize), usize> = new_spans.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let removed_pos = old_pos[&removed];
    let added_pos = new_pos[&added];
    let sentinel = Spin::from_twice(u32::MAX);

    let mut by_key: HashMap<Vec<Spin>, Vec<(usize, Spin)>> = HashMap::new();
    for (idx, labels) in v.basis.iter().enumerate() {
        if v.amplitudes[idx] == Complex64::new(0.0, 0.0) {
            continue;
        }
        let key: Vec<Spin> =
            new_spans.iter().map(|s| if *s == added { sentinel } else { labels[old_pos[s]] }).collect();
        by_key.entry(key).or_default().push((idx, labels[removed_pos]));
    }

    let label_of = |labels: &[Spin], span: (usize, usize)| -> Spin {
        if span.0 == span.1 {
            new_tree.color(span.0)
        } else {
            labels[new_pos[&span]]
        }
    };
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); new_basis.len()];
    for (n_idx, labels) in new_basis.iter().enumerate() {
        let mut key = labels.clone();
        let fresh = key[added_pos];
        key[added_pos] = sentinel;
        let Some(sources) = by_key.get(&key) else { continue };
        let (la, lb, lc, d) = (label_of(labels, a), label_of(labels, b), label_of(labels, c), label_of(labels, x_span));
        let mut acc = Complex64::new(0.0, 0.0);
        for &(o_idx, old) in sources {
            let (e, f) = match rot.direction {
                Direction::Right => (old, fresh),
                Direction::Left => (fresh, old),
            };
            acc += v.amplitudes[o_idx] * ctx.norm_racah(la, lb, lc, d, e, f);
        }
        amplitudes[n_idx] = acc;
    }
    Ok(StateVector { tree: new_tree, basis: new_basis, amplitudes })
}

/// Elementary F-move `((a b) c) -> (a (b c))` at an internal node.
pub fn f_move(v: &StateVector, node: usize, ctx: &QContext) -> Result<StateVector> {
    rotate(v, Rotation { node, direction: Direction::Right }, ctx)
}

/// Target of a basis-change plan.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Goal {
    /// Leaves `i` and `i + 1` hang from one node.
    Siblings(usize),
    /// The last tree leaf is the right child of the root.
    LastAtRoot,
    Exact(Shape),
}

impl Goal {
    pub fn reached(&self, s: &Shape) -> bool {
        match self {
            Goal::Siblings(i) => s.are_siblings(*i),
            Goal::LastAtRoot => s.last_leaf_at_root(),
            Goal::Exact(t) => s == t,
        }
    }
}

/// Largest leaf count for which plans come from an exhaustive search over shapes.
pub const SEARCH_LEAVES: usize = 7;

type PlanCache = RwLock<HashMap<(Shape, Goal), Vec<Rotation>>>;

fn plan_cache() -> &'static PlanCache {
    static CACHE: OnceLock<PlanCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Rotations taking `from` to a shape satisfying `goal`.
///
/// Shortest by breadth-first search for up to [`SEARCH_LEAVES`] leaves;
/// beyond that the plan routes through the left comb.
pub fn plan(from: &Shape, goal: &Goal) -> Vec<Rotation> {
    if goal.reached(from) {
        return Vec::new();
    }
    let key = (from.clone(), goal.clone());
    if let Some(p) = plan_cache().read().expect("plan cache poisoned").get(&key) {
        return p.clone();
    }
    let p = if from.leaf_count() <= SEARCH_LEAVES { search(from, goal) } else { route(from, goal) };
    plan_cache().write().expect("plan cache poisoned").insert(key, p.clone());
    p
}

fn search(from: &Shape, goal: &Goal) -> Vec<Rotation> {
    let mut parent: HashMap<Shape, Option<(Shape, Rotation)>> = HashMap::new();
    parent.insert(from.clone(), None);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(s) = queue.pop_front() {
        if goal.reached(&s) {
            let mut path = Vec::new();
            let mut cur = s;
            while let Some(Some((prev, rot))) = parent.get(&cur).cloned() {
                path.push(rot);
                cur = prev;
            }
            path.reverse();
            return path;
        }
        for (rot, next) in s.neighbors() {
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((s.clone(), rot)));
                queue.push_back(next);
            }
        }
    }
    unreachable!("rotation graph on a fixed leaf order is connected")
}

fn to_left_comb(from: &Shape) -> Vec<Rotation> {
    let mut path = Vec::new();
    let mut cur = from.clone();
    loop {
        let spans = cur.internal_spans();
        let next = (0..spans.len()).find_map(|idx| {
            let rot = Rotation { node: idx, direction: Direction::Left };
            cur.rotate(rot).map(|s| (rot, s))
        });
        match next {
            Some((rot, s)) => {
                path.push(rot);
                cur = s;
            }
            None => return path,
        }
    }
}

fn route(from: &Shape, goal: &Goal) -> Vec<Rotation> {
    let n = from.leaf_count();
    let target = match goal {
        Goal::Siblings(i) => Shape::left_comb_with_pair(n, *i),
        Goal::LastAtRoot => Shape::left_comb(n),
        Goal::Exact(t) => t.clone(),
    };
    let mut path = to_left_comb(from);
    let back = to_left_comb(&target);
    path.extend(back.iter().rev().map(|r| r.inverse()));
    path
}

/// Re-expresses `v` on the tree shape `target`; returns the vector and the number of F-moves.
pub fn change_basis(v: &StateVector, target: &Shape, ctx: &QContext) -> Result<(StateVector, usize)> {
    if target.leaf_count() != v.tree.shape.leaf_count() {
        return Err(Error::BoundaryMismatch);
    }
    let steps = plan(&v.tree.shape, &Goal::Exact(target.clone()));
    let mut cur = v.clone();
    for &rot in &steps {
        cur = rotate(&cur, rot, ctx)?;
    }
    Ok((cur, steps.len()))
}

/// Eigenvalue of the half-twist of `(j j')` in channel `z`.
///
/// Parallel strands (`orientation_product = +1`) give
/// `(-1)^{j+j'-z} q^{(c_j+c_j')/2 + c_min - c_z/2}`; antiparallel strands give
/// the inverse of `(-1)^{|j-j'|-z} q^{|c_j-c_j'|/2 - c_z/2}`, with `c_x = x(x+1)`.
pub fn braid_eigenvalue(z: Spin, j: Spin, jp: Spin, orientation_product: i8, ctx: &QContext) -> Result<Complex64> {
    if !ctx.admissible(j, jp, z) {
        return Err(Error::Inadmissible(format!("channel {z} of {j} x {jp}")));
    }
    Ok(if orientation_product > 0 {
        parallel_eigenvalue(z, j, jp, ctx)
    } else {
        antiparallel_eigenvalue(z, j, jp, ctx).inv()
    })
}

fn sign_of(twice: i64) -> f64 {
    if (twice / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn parallel_eigenvalue(z: Spin, j: Spin, jp: Spin, ctx: &QContext) -> Complex64 {
    let sign = sign_of(j.twice() as i64 + jp.twice() as i64 - z.twice() as i64);
    let cmin = j.min(jp).casimir();
    ctx.q_pow((j.casimir() + jp.casimir()) / 2.0 + cmin - z.casimir() / 2.0) * sign
}

fn antiparallel_eigenvalue(z: Spin, j: Spin, jp: Spin, ctx: &QContext) -> Complex64 {
    let diff = j.twice().abs_diff(jp.twice()) as i64;
    let sign = sign_of(diff - z.twice() as i64);
    ctx.q_pow((j.casimir() - jp.casimir()).abs() / 2.0 - z.casimir() / 2.0) * sign
}

/// Phase applied to channel `z` when a letter of the given sign crosses the pair.
///
/// Parallel pairs use the parallel eigenvalue; antiparallel pairs use the
/// printed antiparallel expression itself, so that both families are scalar
/// multiples of one R-matrix.
pub fn crossing_phase(z: Spin, j: Spin, jp: Spin, orientation_product: i8, sign: i8, ctx: &QContext) -> Complex64 {
    let base = if orientation_product > 0 {
        parallel_eigenvalue(z, j, jp, ctx)
    } else {
        antiparallel_eigenvalue(z, j, jp, ctx)
    };
    if sign > 0 {
        base
    } else {
        base.inv()
    }
}

/// Acts with the generator `s_index^sign` (index counted from 1).
///
/// Rotates first when the two points are not directly coupled; the second
/// value is the number of F-moves spent.
pub fn apply_generator(v: &StateVector, index: usize, sign: i8, ctx: &QContext) -> Result<(StateVector, usize)> {
    let points = v.tree.points();
    if index == 0 || index >= points {
        return Err(Error::GeneratorOutOfRange { index, max: points - 1 });
    }
    let last = index == points - 1;
    let goal = if last { Goal::LastAtRoot } else { Goal::Siblings(index - 1) };
    let steps = plan(&v.tree.shape, &goal);
    let mut cur = v.clone();
    for &rot in &steps {
        cur = rotate(&cur, rot, ctx)?;
    }

    let (p, pp) = (index - 1, index);
    let (dl, dr) = (cur.tree.leaves[p], cur.tree.leaves[pp]);
    let spans = cur.tree.shape.internal_spans();
    let channel_pos = if last {
        match &cur.tree.shape {
            Shape::Leaf(_) => None,
            Shape::Node(l, _) => spans.iter().position(|&s| s == l.span()),
        }
    } else {
        spans.iter().position(|&s| s == (p, pp))
    };
    let eps = dl.orientation * dr.orientation;
    for (labels, amp) in cur.basis.iter().zip(cur.amplitudes.iter_mut()) {
        // A lone pair of points can only sit in the singlet.
        let z = channel_pos.map_or(Spin::ZERO, |pos| labels[pos]);
        *amp *= crossing_phase(z, dl.color, dr.color, eps, sign, ctx);
    }
    cur.tree.leaves.swap(p, pp);
    if last && !cur.tree.shape.is_leaf() {
        let root = cur.tree.color(points - 1);
        for labels in &mut cur.basis {
            labels[0] = root;
        }
    }
    Ok((cur, steps.len()))
}

/// Matrix of `s_index^sign` on the basis of `tree`, expressed back on the same shape.
///
/// Column `b` is the image of basis state `b`; the returned tree carries the
/// permuted decorations of the output space.
pub fn generator_matrix(
    tree: &FusionTree,
    index: usize,
    sign: i8,
    ctx: &QContext,
) -> Result<(Vec<Vec<Complex64>>, FusionTree)> {
    let basis = enumerate_states(tree, ctx);
    let dim = basis.len();
    let mut columns = Vec::with_capacity(dim);
    let mut out_tree = tree.clone();
    for labels in &basis {
        let v = StateVector::basis_state(tree.clone(), labels, ctx)?;
        let (w, _) = apply_generator(&v, index, sign, ctx)?;
        let (w, _) = change_basis(&w, &tree.shape, ctx)?;
        out_tree = w.tree.clone();
        columns.push(w.amplitudes);
    }
    let mut m = vec![vec![Complex64::new(0.0, 0.0); dim]; columns.first().map_or(0, |c| c.len())];
    for (col, values) in columns.iter().enumerate() {
        for (row, &x) in values.iter().enumerate() {
            m[row][col] = x;
        }
    }
    Ok((m, out_tree))
}
