//! Brute-force Kauffman bracket of a plat diagram and the Jones polynomial derived from it.
//!
//! The diagram is a grid: strand position `p` at height `t` is a node, each
//! letter occupies the band between heights `t` and `t + 1`, and caps close
//! adjacent positions at heights `0` and `m`. A state picks one smoothing per
//! crossing; its loops are counted with a union-find.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::braid::{BraidWord, LinkDiagram, PlatSpec};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qtensor::QContext;

/// Largest crossing count the state sum accepts.
pub const CROSSING_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketResult {
    /// Unknot-normalized bracket in the variable `A`.
    pub bracket: LaurentPoly,
    pub writhe: i64,
    pub components: usize,
    /// Number of smoothing states visited.
    pub states: u64,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when `a` and `b` were in different classes.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Kauffman bracket by the full `2^κ` state sum.
///
/// For `s_i` the A-smoothing joins the strands vertically and the B-smoothing
/// joins the bottom pair and the top pair; the inverse letter swaps the two.
/// Loops weigh `d = -A^2 - A^-2` and the single loop is normalized to 1.
pub fn kauffman_bracket(diagram: &LinkDiagram) -> Result<BracketResult> {
    let kappa = diagram.crossing_count();
    if kappa > CROSSING_CAP {
        return Err(Error::CrossingCap { count: kappa, cap: CROSSING_CAP });
    }
    let n = diagram.strands;
    let m = kappa;
    let node = |p: usize, t: usize| t * n + p;
    let nodes = n * (m + 1);

    // Edges that do not depend on the state: caps and straight-through segments.
    let mut fixed: Vec<(usize, usize)> = Vec::new();
    for l in 0..n / 2 {
        fixed.push((node(2 * l, 0), node(2 * l + 1, 0)));
        fixed.push((node(2 * l, m), node(2 * l + 1, m)));
    }
    for c in &diagram.crossings {
        for p in 0..n {
            if p != c.position && p != c.position + 1 {
                fixed.push((node(p, c.row), node(p, c.row + 1)));
            }
        }
    }

    let mut base = UnionFind::new(nodes);
    let mut base_merges = 0;
    for &(a, b) in &fixed {
        base_merges += base.union(a, b) as usize;
    }

    // (#A - #B, loops) -> multiplicity
    let mut tally: BTreeMap<(i32, usize), i64> = BTreeMap::new();
    let mut states: u64 = 0;
    for mask in 0u32..(1u32 << kappa) {
        states += 1;
        let mut uf = UnionFind { parent: base.parent.clone() };
        let mut merges = base_merges;
        let mut balance = 0i32;
        for (i, c) in diagram.crossings.iter().enumerate() {
            let a_smoothing = mask & (1 << i) == 0;
            balance += if a_smoothing { 1 } else { -1 };
            let vertical = a_smoothing == (c.exponent > 0);
            let (bl, br) = (node(c.position, c.row), node(c.position + 1, c.row));
            let (tl, tr) = (node(c.position, c.row + 1), node(c.position + 1, c.row + 1));
            if vertical {
                merges += uf.union(bl, tl) as usize;
                merges += uf.union(br, tr) as usize;
            } else {
                merges += uf.union(bl, br) as usize;
                merges += uf.union(tl, tr) as usize;
            }
        }
        let loops = nodes - merges;
        *tally.entry((balance, loops)).or_insert(0) += 1;
    }
    debug_assert_eq!(states, 1u64 << kappa);

    let d = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut bracket = LaurentPoly::zero();
    for (&(balance, loops), &mult) in &tally {
        let term = &d.pow(loops as u32 - 1) * &LaurentPoly::monomial(mult, balance);
        bracket = &bracket + &term;
    }
    Ok(BracketResult { bracket, writhe: diagram.writhe(), components: diagram.components, states })
}

/// Jones polynomial `V = (-A)^{-3w} <D>` rewritten in `t = A^{-4}`.
///
/// Exponents of the result are stored as four times the power of `t`.
pub fn jones_from_bracket(b: &BracketResult) -> LaurentPoly {
    let w = b.writhe as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = &b.bracket * &LaurentPoly::monomial(sign, -3 * w);
    normalized.rescale(-1)
}

/// Jones polynomial of the plat closure of `word`.
pub fn jones_polynomial(spec: &PlatSpec, word: &BraidWord) -> Result<(LaurentPoly, BracketResult)> {
    let diagram = LinkDiagram::build(spec, word)?;
    let bracket = kauffman_bracket(&diagram)?;
    Ok((jones_from_bracket(&bracket), bracket))
}

/// Evaluates a polynomial with quarter-power exponents at `t = q`, using the
/// principal `q^{1/4} = exp(-πi/(2k))`.
pub fn eval_at_root(p: &LaurentPoly, ctx: &QContext) -> Complex64 {
    p.eval(ctx.q_pow(0.25))
}

/// Evaluates at `t = q` with `t^{1/4} = A^{-1}` and `A = i q^{-1/4}`, the branch
/// on which the bracket variable and `t` are tied together.
///
/// Differs from [`eval_at_root`] by `(-1)^{c-1}` for a `c`-component link.
pub fn eval_at_root_kauffman(p: &LaurentPoly, ctx: &QContext) -> Complex64 {
    p.eval(Complex64::new(0.0, -1.0) * ctx.q_pow(0.25))
}
