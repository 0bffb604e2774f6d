//! Self-checks behind the `verify` command.
//!
//! Each suite returns a list of named checks with the measured value and the
//! limit it was held to.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automaton::{bound_constant, Automaton};
use crate::braid::{default_pattern, BraidWord, Letter, PlatSpec};
use crate::calibration::calibrate;
use crate::error::{Error, Result};
use crate::fusion::{enumerate_states, generator_matrix, Decoration, FusionTree, Shape};
use crate::laurent::LaurentPoly;
use crate::oracle::{eval_at_root_kauffman, jones_polynomial};
use crate::qtensor::{QContext, QRacahKey, Spin};
use crate::spinnet::{growth_check, CouplingGraph};

type Matrix = Vec<Vec<Complex64>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    YangBaxter,
    Oracle,
    Trefoil,
    Graph,
    Eigenbasis,
    Ledger,
    Axioms,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Trefoil,
        Suite::Oracle,
        Suite::YangBaxter,
        Suite::Identities,
        Suite::Eigenbasis,
        Suite::Ledger,
        Suite::Graph,
        Suite::Axioms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::YangBaxter => "yangbaxter",
            Suite::Oracle => "oracle",
            Suite::Trefoil => "trefoil",
            Suite::Graph => "graph",
            Suite::Eigenbasis => "eigenbasis",
            Suite::Ledger => "ledger",
            Suite::Axioms => "axioms",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Spec(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: f64,
    pub limit: f64,
    pub detail: String,
}

impl Check {
    /// Passes when `value <= limit`.
    fn at_most(name: &str, value: f64, limit: f64, detail: String) -> Check {
        Check { name: name.into(), passed: value <= limit, value, limit, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub seconds: f64,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    /// Longest 4-strand word in the oracle comparison; 6-strand words stop at 4.
    pub max_crossings: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_crossings: 6, seed: 0x5eed }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let start = Instant::now();
    let checks = match suite {
        Suite::Identities => identities(opts)?,
        Suite::YangBaxter => yang_baxter()?,
        Suite::Oracle => oracle_equivalence(opts)?,
        Suite::Trefoil => trefoil()?,
        Suite::Graph => graph()?,
        Suite::Eigenbasis => eigenbasis()?,
        Suite::Ledger => ledger(opts)?,
        Suite::Axioms => axioms(opts)?,
    };
    Ok(SuiteReport {
        suite: suite.name().into(),
        passed: checks.iter().all(|c| c.passed),
        seconds: start.elapsed().as_secs_f64(),
        checks,
    })
}

/// Every word of length at most `max_len` over `s_1^±, ..., s_{n-1}^±`.
pub fn enumerate_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<Letter> = (1..strands).flat_map(|i| [Letter::new(i, 1), Letter::new(i, -1)]).collect();
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
        for w in &frontier {
            for &l in &alphabet {
                let mut x = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter().map(|l| BraidWord::new(strands, l).expect("letters in range")).collect()
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters =
        (0..len).map(|_| Letter::new(rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|l| row[l] * b[l][j]).sum()).collect()).collect()
}

fn max_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.iter().zip(b).flat_map(|(r, s)| r.iter().zip(s).map(|(x, y)| (x - y).norm())).fold(0.0, f64::max)
}

fn unitarity_residual(m: &Matrix) -> f64 {
    let n = m.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let dot: Complex64 = (0..n).map(|r| m[r][i].conj() * m[r][j]).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).norm());
        }
    }
    worst
}

fn max_off_diagonal(m: &Matrix) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                worst = worst.max(x.norm());
            }
        }
    }
    worst
}

fn tree(shape: Shape, colors: &[Spin], orientations: &[i8]) -> Result<FusionTree> {
    let leaves =
        orientations.iter().enumerate().map(|(p, &o)| Decoration { color: colors[p / 2], orientation: o }).collect();
    FusionTree::new(shape, leaves)
}

/// `B_{word[last]} ... B_{word[0]}` starting on `tree`, each factor expressed on the same shape.
fn product(t: &FusionTree, letters: &[(usize, i8)], ctx: &QContext) -> Result<(Matrix, FusionTree)> {
    let dim = enumerate_states(t, ctx).len();
    let mut acc: Matrix =
        (0..dim).map(|i| (0..dim).map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0)).collect()).collect();
    let mut cur = t.clone();
    for &(i, s) in letters {
        let (m, next) = generator_matrix(&cur, i, s, ctx)?;
        acc = matmul(&m, &acc);
        cur = next;
    }
    Ok((acc, cur))
}

fn cap_colorings(caps: usize) -> Vec<Vec<Spin>> {
    (0..1usize << caps)
        .map(|mask| (0..caps).map(|c| if mask & (1 << c) == 0 { Spin::HALF } else { Spin::ONE }).collect())
        .collect()
}

fn yang_baxter() -> Result<Vec<Check>> {
    let (mut yb, mut far, mut gen_u, mut f_u) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut spaces = 0;
    for k in [5u32, 6, 7] {
        let ctx = QContext::new(k)?;
        for caps in [2usize, 3] {
            let n = 2 * caps;
            let alternating: Vec<i8> = (0..n).map(|p| if p % 2 == 0 { 1 } else { -1 }).collect();
            for colors in cap_colorings(caps) {
                for orientations in [default_pattern(n), alternating.clone()] {
                    let t = tree(Shape::odd(caps), &colors, &orientations)?;
                    if enumerate_states(&t, &ctx).is_empty() {
                        continue;
                    }
                    spaces += 1;
                    for i in 1..n {
                        for s in [1i8, -1] {
                            gen_u = gen_u.max(unitarity_residual(&generator_matrix(&t, i, s, &ctx)?.0));
                        }
                    }
                    for i in 1..n - 1 {
                        let (l, _) = product(&t, &[(i, 1), (i + 1, 1), (i, 1)], &ctx)?;
                        let (r, _) = product(&t, &[(i + 1, 1), (i, 1), (i + 1, 1)], &ctx)?;
                        yb = yb.max(max_diff(&l, &r));
                    }
                    for i in 1..n {
                        for j in i + 2..n {
                            let (l, _) = product(&t, &[(i, 1), (j, 1)], &ctx)?;
                            let (r, _) = product(&t, &[(j, 1), (i, 1)], &ctx)?;
                            far = far.max(max_diff(&l, &r));
                        }
                    }
                }
            }
        }
        let spins: Vec<Spin> = (0..=ctx.level()).map(Spin::from_twice).collect();
        for &a in &spins {
            for &b in &spins {
                for &c in &spins {
                    for &j in &spins {
                        if let Ok(f) = ctx.f_matrix(a, b, c, j) {
                            f_u = f_u.max(f.unitarity_residual());
                        }
                    }
                }
            }
        }
    }
    Ok(vec![
        Check::at_most("yang-baxter", yb, 1e-10, format!("{spaces} spaces, k in 5..=7")),
        Check::at_most("far-commutativity", far, 1e-10, format!("{spaces} spaces")),
        Check::at_most("generator-unitarity", gen_u, 1e-12, "all generators and inverses".into()),
        Check::at_most("duality-unitarity", f_u, 1e-12, "all F-matrices, k in 5..=7".into()),
    ])
}

fn projections(j: Spin) -> impl Iterator<Item = i32> {
    let t = j.twice() as i32;
    (-t..=t).step_by(2)
}

/// `<((j1 j2)_{j12} j3)_j, m=j | (j1 (j2 j3)_{j23})_j, m=j>` from Clebsch-Gordan coefficients.
pub fn cg_overlap(ctx: &QContext, j1: Spin, j2: Spin, j3: Spin, j: Spin, j12: Spin, j23: Spin) -> Result<Complex64> {
    let m = j.twice() as i32;
    let mut s = Complex64::new(0.0, 0.0);
    for m1 in projections(j1) {
        for m2 in projections(j2) {
            let m3 = m - m1 - m2;
            if m3.unsigned_abs() > j3.twice() || (j3.twice() as i32 - m3) % 2 != 0 {
                continue;
            }
            if (m1 + m2).unsigned_abs() > j12.twice() || (m2 + m3).unsigned_abs() > j23.twice() {
                continue;
            }
            s += ctx.q_cg(j1, m1, j2, m2, j12, m1 + m2)?
                * ctx.q_cg(j12, m1 + m2, j3, m3, j, m)?
                * ctx.q_cg(j2, m2, j3, m3, j23, m2 + m3)?
                * ctx.q_cg(j1, m1, j23, m2 + m3, j, m)?;
        }
    }
    Ok(s)
}

fn parity(twice: u32) -> f64 {
    if (twice / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn random_spin<R: Rng>(rng: &mut R, ctx: &QContext) -> Spin {
    Spin::from_twice(rng.gen_range(0..=ctx.max_spin().twice()))
}

fn identities(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut contraction = 0.0f64;
    let mut cases = 0;
    for k in [5u32, 6, 8] {
        let ctx = QContext::new(k)?;
        let spins: Vec<Spin> = (0..=3.min(ctx.level())).map(Spin::from_twice).collect();
        for &j1 in &spins {
            for &j2 in &spins {
                for &j3 in &spins {
                    for j12 in ctx.channels(j1, j2) {
                        for j in ctx.channels(j12, j3) {
                            for j23 in ctx.channels(j2, j3) {
                                if !ctx.admissible(j1, j23, j) {
                                    continue;
                                }
                                let overlap = cg_overlap(&ctx, j1, j2, j3, j, j12, j23)?;
                                let scale = (ctx.q_int(j12.twice() + 1) * ctx.q_int(j23.twice() + 1)).sqrt();
                                let phase = parity(j1.twice() + j2.twice() + j3.twice() + j.twice());
                                let from_cg = overlap * phase / scale;
                                let six = ctx.six_j(QRacahKey::new([j1, j2, j12], [j3, j, j23]));
                                contraction = contraction.max((from_cg - six).norm());
                                cases += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut be, mut be_nonzero) = (0.0f64, 0);
    let mut tuples = 0;
    while tuples < 200 {
        let ctx = QContext::new(rng.gen_range(3..=10))?;
        let s: Vec<Spin> = (0..9).map(|_| random_spin(&mut rng, &ctx)).collect();
        let [a, b, c, d, e, f, p, q, r] = [s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]];
        let fixed = [(a, d, p), (c, b, p), (c, f, q), (e, d, q), (e, a, r), (b, f, r), (p, q, r)];
        if !fixed.iter().all(|&(x, y, z)| ctx.admissible(x, y, z)) {
            continue;
        }
        tuples += 1;
        let total: u32 = s.iter().map(|x| x.twice()).sum();
        let sj = |t: [Spin; 3], u: [Spin; 3]| ctx.six_j(QRacahKey::new(t, u));
        let mut lhs = 0.0;
        for x in (0..=ctx.max_spin().twice()).map(Spin::from_twice) {
            let term = sj([a, b, x], [c, d, p]) * sj([c, d, x], [e, f, q]) * sj([e, f, x], [b, a, r]);
            if term != 0.0 {
                lhs += parity(total + x.twice()) * ctx.q_int(x.twice() + 1) * term;
            }
        }
        let rhs = sj([p, q, r], [e, a, d]) * sj([p, q, r], [f, b, c]);
        be_nonzero += (rhs.abs() > 1e-12) as usize;
        be = be.max((lhs - rhs).abs());
    }

    let mut orth = 0.0f64;
    tuples = 0;
    while tuples < 200 {
        let ctx = QContext::new(rng.gen_range(3..=10))?;
        let s: Vec<Spin> = (0..6).map(|_| random_spin(&mut rng, &ctx)).collect();
        let [a, b, c, d, p, q] = [s[0], s[1], s[2], s[3], s[4], s[5]];
        let fixed = [(a, d, p), (c, b, p), (a, d, q), (c, b, q)];
        if !fixed.iter().all(|&(x, y, z)| ctx.admissible(x, y, z)) {
            continue;
        }
        tuples += 1;
        let mut sum = 0.0;
        for x in (0..=ctx.max_spin().twice()).map(Spin::from_twice) {
            sum += ctx.q_int(x.twice() + 1)
                * ctx.q_int(p.twice() + 1)
                * ctx.six_j(QRacahKey::new([a, b, x], [c, d, p]))
                * ctx.six_j(QRacahKey::new([a, b, x], [c, d, q]));
        }
        let target = if p == q { 1.0 } else { 0.0 };
        orth = orth.max((sum - target).abs());
    }

    Ok(vec![
        Check::at_most("6j-vs-cg", contraction, 1e-10, format!("{cases} cases, spins <= 3/2, k in {{5,6,8}}")),
        Check::at_most(
            "biedenharn-elliott",
            be,
            1e-10,
            format!("200 tuples, {be_nonzero} with nonzero right side, k <= 10"),
        ),
        Check::at_most("orthogonality", orth, 1e-10, "200 tuples, k <= 10".into()),
    ])
}

fn oracle_equivalence(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (strands, max_len) in [(4usize, opts.max_crossings), (6, opts.max_crossings.min(4))] {
        let words = enumerate_words(strands, max_len);
        let probe = PlatSpec::uniform(strands, Spin::HALF, 5, "")?;
        let polys: Vec<(LaurentPoly, i64)> =
            words.iter().map(|w| jones_polynomial(&probe, w).map(|(v, b)| (v, b.writhe))).collect::<Result<_>>()?;
        let mut worst = 0.0f64;
        let mut worst_word = String::new();
        for k in [5u32, 7, 8] {
            let automaton = Automaton::new(&PlatSpec::uniform(strands, Spin::HALF, k, "")?)?;
            let ctx = automaton.context();
            for (w, (v, writhe)) in words.iter().zip(&polys) {
                let value = calibrate(automaton.extended_jones(w)?, Spin::HALF, *writhe, ctx);
                let d = (value - eval_at_root_kauffman(v, ctx)).norm();
                if d > worst {
                    worst = d;
                    worst_word = format!("k={k} '{w}'");
                }
            }
        }
        checks.push(Check::at_most(
            &format!("oracle-{strands}-strands"),
            worst,
            1e-8,
            format!("{} words up to length {max_len}, k in {{5,7,8}}, worst at {worst_word}", words.len()),
        ));
    }
    Ok(checks)
}

fn trefoil() -> Result<Vec<Check>> {
    let start = Instant::now();
    let (mut printed, mut mirror) = (0.0f64, 0.0f64);
    for k in 5..=16u32 {
        let spec = PlatSpec::uniform(4, Spin::HALF, k, "s2 s2 s2")?;
        let automaton = Automaton::new(&spec)?;
        let ctx = automaton.context();
        let word = spec.braid_word()?;
        let report = automaton.run(&word)?;
        let value = calibrate(automaton.extended_jones(&word)?, Spin::HALF, report.writhe, ctx);
        let q = ctx.q();
        let expected = (q * q * q + q - 1.0) / q.powi(4);
        let qi = q.inv();
        let expected_mirror = (qi * qi * qi + qi - 1.0) / qi.powi(4);
        printed = printed.max((value - expected).norm());
        mirror = mirror.max((value - expected_mirror).norm());
    }
    let elapsed = start.elapsed().as_secs_f64();
    let best = printed.min(mirror);
    let which = if mirror <= printed { "mirror of printed form" } else { "printed form" };
    Ok(vec![
        Check::at_most("trefoil-k5-16", best, 1e-9, format!("matches the {which}")),
        Check::at_most("trefoil-seconds", elapsed, 1.0, "12 levels".into()),
    ])
}

fn graph() -> Result<Vec<Check>> {
    let start = Instant::now();
    let labeled = CouplingGraph::build(3, true)?.vertex_count();
    let table = growth_check(8)?;
    let elapsed = start.elapsed().as_secs_f64();
    let diameters: Vec<String> = table.rows.iter().map(|r| r.diameter.to_string()).collect();
    Ok(vec![
        Check {
            name: "labeled-vertices-n3".into(),
            passed: labeled == 120,
            value: labeled as f64,
            limit: 120.0,
            detail: "twist-rotation graph".into(),
        },
        Check {
            name: "diameter-monotone".into(),
            passed: table.monotone(),
            value: table.monotone() as u8 as f64,
            limit: 1.0,
            detail: format!("n=2..=8 diameters {}", diameters.join(",")),
        },
        Check {
            name: "ratio-spread".into(),
            passed: table.spread < 2.0,
            value: table.spread,
            limit: 2.0,
            detail: format!("fitted c = {:.4}", table.fitted_c),
        },
        Check::at_most("graph-seconds", elapsed, 120.0, String::new()),
    ])
}

fn eigenbasis() -> Result<Vec<Check>> {
    let (mut odd, mut even) = (0.0f64, 0.0f64);
    for k in [5u32, 6, 7] {
        let ctx = QContext::new(k)?;
        for caps in [2usize, 3] {
            let n = 2 * caps;
            for color in [Spin::HALF, Spin::ONE] {
                let colors = vec![color; caps];
                let orientations = default_pattern(n);
                let t_odd = tree(Shape::odd(caps), &colors, &orientations)?;
                let t_even = tree(Shape::even(caps), &colors, &orientations)?;
                for i in 1..n {
                    let (t, slot) = if i % 2 == 1 { (&t_odd, &mut odd) } else { (&t_even, &mut even) };
                    for s in [1i8, -1] {
                        *slot = slot.max(max_off_diagonal(&generator_matrix(t, i, s, &ctx)?.0));
                    }
                }
            }
        }
    }
    Ok(vec![
        Check::at_most("odd-generators-on-odd-tree", odd, 1e-14, "2N in {4,6}".into()),
        Check::at_most("even-generators-on-even-tree", even, 1e-14, "2N in {4,6}".into()),
    ])
}

fn ledger(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x1ed6e);
    let mut automata = Vec::new();
    for strands in [4usize, 6, 8] {
        automata.push(Automaton::new(&PlatSpec::uniform(strands, Spin::HALF, 8, "")?)?);
    }
    let mut worst_ratio = 0.0f64;
    let mut violations = 0;
    for _ in 0..500 {
        let a = &automata[rng.gen_range(0..automata.len())];
        let len = rng.gen_range(0..=20);
        let w = random_word(&mut rng, a.spec().strands, len);
        let r = a.run(&w)?;
        if w.is_empty() {
            continue;
        }
        let ratio = r.moves as f64 / (bound_constant(a.caps()) * w.len() as f64);
        worst_ratio = worst_ratio.max(ratio);
        violations += (ratio > 1.0) as usize;
    }
    Ok(vec![Check::at_most(
        "moves-within-bound",
        worst_ratio,
        1.0,
        format!("500 words, 2N in {{4,6,8}}, {violations} over the bound"),
    )])
}

fn splice(parts: &[&[Letter]], strands: usize) -> BraidWord {
    BraidWord::new(strands, parts.concat()).expect("letters in range")
}

fn axioms(opts: &VerifyOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xa710);
    let mut empty_err = 0.0f64;
    let (mut reduce, mut relation, mut modulus) = (0.0f64, 0.0f64, 0.0f64);
    for strands in [4usize, 6] {
        for k in [5u32, 7] {
            let a = Automaton::new(&PlatSpec::uniform(strands, Spin::HALF, k, "")?)?;
            empty_err = empty_err.max((a.run(&BraidWord::empty(strands)?)?.amplitude() - 1.0).norm());
            for _ in 0..50 {
                let (hl, tl) = (rng.gen_range(0..6), rng.gen_range(0..6));
                let head = random_word(&mut rng, strands, hl);
                let tail = random_word(&mut rng, strands, tl);
                let (h, t) = (head.letters(), tail.letters());

                let g = Letter::new(rng.gen_range(1..strands), if rng.gen_bool(0.5) { 1 } else { -1 });
                let padded = splice(&[h, &[g, g.inverse()], t], strands);
                let amp = a.run(&padded)?.amplitude();
                reduce = reduce.max((amp - a.run(&padded.free_reduce())?.amplitude()).norm());
                reduce = reduce.max((amp - a.run(&splice(&[h, t], strands))?.amplitude()).norm());
                modulus = modulus.max(amp.norm());

                let i = rng.gen_range(1..strands - 1);
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                let (x, y) = (Letter::new(i, s), Letter::new(i + 1, s));
                let l = a.run(&splice(&[h, &[x, y, x], t], strands))?.amplitude();
                let r = a.run(&splice(&[h, &[y, x, y], t], strands))?.amplitude();
                relation = relation.max((l - r).norm());
                modulus = modulus.max(l.norm());

                let far = Letter::new(rng.gen_range(1..strands), 1);
                if far.index.abs_diff(x.index) >= 2 {
                    let l = a.run(&splice(&[h, &[x, far], t], strands))?.amplitude();
                    let r = a.run(&splice(&[h, &[far, x], t], strands))?.amplitude();
                    relation = relation.max((l - r).norm());
                }
            }
        }
    }
    Ok(vec![
        Check::at_most("empty-word", empty_err, 1e-12, "amplitude 1".into()),
        Check::at_most("free-reduction", reduce, 1e-10, "200 words".into()),
        Check::at_most("braid-relations", relation, 1e-10, "200 words".into()),
        Check::at_most("amplitude-modulus", modulus, 1.0 + 1e-12, "|amplitude| <= 1".into()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn word_counts() {
        assert_eq!(enumerate_words(4, 2).len(), 1 + 6 + 36);
        assert_eq!(enumerate_words(2, 0).len(), 1);
    }

    #[test]
    fn quick_suites_pass() {
        for s in [Suite::Trefoil, Suite::Eigenbasis] {
            let r = run_suite(s, &VerifyOptions::default()).unwrap();
            assert!(r.passed, "{r:?}");
        }
        let small = VerifyOptions { max_crossings: 2, ..Default::default() };
        assert!(run_suite(Suite::Oracle, &small).unwrap().passed);
    }
}
