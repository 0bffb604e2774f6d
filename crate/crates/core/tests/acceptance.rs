//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Reference values are computed here from closed forms and direct sums
//! rather than through the library's own verification suites.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use platjones::automaton::bound_constant;
use platjones::braid::default_pattern;
use platjones::fusion::{enumerate_states, generator_matrix};
use platjones::oracle::jones_polynomial;
use platjones::spinnet::growth_check;
use platjones::{
    Automaton, BraidWord, CouplingGraph, Decoration, FusionTree, LaurentPoly, Letter, PlatSpec, QContext, QRacahKey,
    Shape, Spin,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

type Matrix = Vec<Vec<Complex64>>;

struct Outcome {
    passed: bool,
    summary: String,
}

fn outcome(passed: bool, summary: String) -> Outcome {
    Outcome { passed, summary }
}

fn q_of(k: u32) -> Complex64 {
    Complex64::from_polar(1.0, -2.0 * PI / k as f64)
}

fn qint(n: u32, k: u32) -> f64 {
    (PI * n as f64 / k as f64).sin() / (PI / k as f64).sin()
}

fn sign(half_units: u32) -> f64 {
    if (half_units / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Jones value at `t = q` with `t^{1/4} = -i e^{-πi/(2k)}`; exponents are stored as `4 · power`.
fn jones_at_root(v: &LaurentPoly, k: u32) -> Complex64 {
    let quarter = Complex64::new(0.0, -1.0) * Complex64::from_polar(1.0, -PI / (2.0 * k as f64));
    v.terms().map(|(e, c)| quarter.powi(e) * c as f64).sum()
}

fn normalized(automaton: &Automaton, word: &BraidWord, k: u32) -> Complex64 {
    automaton.extended_jones(word).unwrap() / qint(2, k)
}

fn words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let mut all = vec![Vec::<Letter>::new()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = all.len();
        for w in start..end {
            for i in 1..strands {
                for s in [1, -1] {
                    let mut x = all[w].clone();
                    x.push(Letter::new(i, s));
                    all.push(x);
                }
            }
        }
        start = end;
    }
    all.into_iter().map(|l| BraidWord::new(strands, l).unwrap()).collect()
}

fn random_word(rng: &mut ChaCha20Rng, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len).map(|_| Letter::new(rng.gen_range(1..strands), [1, -1][rng.gen_range(0..2)])).collect();
    BraidWord::new(strands, letters).unwrap()
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    (0..a.len()).map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|l| a[i][l] * b[l][j]).sum()).collect()).collect()
}

fn distance(a: &Matrix, b: &Matrix) -> f64 {
    let mut worst: f64 = 0.0;
    for (r, s) in a.iter().zip(b) {
        for (x, y) in r.iter().zip(s) {
            worst = worst.max((x - y).norm());
        }
    }
    worst
}

fn deviation_from_unitary(m: &Matrix) -> f64 {
    let n = m.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let g: Complex64 = (0..n).map(|r| m[r][i].conj() * m[r][j]).sum();
            worst = worst.max((g - if i == j { 1.0 } else { 0.0 }).norm());
        }
    }
    worst
}

fn fusion_tree(shape: Shape, caps: &[Spin], orientations: &[i8]) -> FusionTree {
    let leaves =
        orientations.iter().enumerate().map(|(p, &o)| Decoration { color: caps[p / 2], orientation: o }).collect();
    FusionTree::new(shape, leaves).unwrap()
}

/// Matrix of the word read left to right, starting on `tree`.
fn word_matrix(tree: &FusionTree, letters: &[(usize, i8)], ctx: &QContext) -> Matrix {
    let mut cur = tree.clone();
    let mut acc: Option<Matrix> = None;
    for &(i, s) in letters {
        let (m, next) = generator_matrix(&cur, i, s, ctx).unwrap();
        acc = Some(match acc {
            None => m,
            Some(a) => mul(&m, &a),
        });
        cur = next;
    }
    acc.unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for k in 5..=16u32 {
        let spec = PlatSpec::uniform(4, Spin::HALF, k, "s2 s2 s2").unwrap();
        let automaton = Automaton::new(&spec).unwrap();
        let value = normalized(&automaton, &spec.braid_word().unwrap(), k);
        // Mirror image of (-1 + q + q^3) / q^4.
        let q = q_of(k);
        let expected = -q.powi(4) + q.powi(3) + q;
        worst = worst.max((value - expected).norm());
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(worst <= 1e-9 && secs < 1.0, format!("trefoil k=5..16 max err {worst:.2e} in {secs:.3}s"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for (strands, max_len) in [(4usize, 6usize), (6, 4)] {
        let corpus = words(strands, max_len);
        let probe = PlatSpec::uniform(strands, Spin::HALF, 5, "").unwrap();
        let jones: Vec<LaurentPoly> = corpus.iter().map(|w| jones_polynomial(&probe, w).unwrap().0).collect();
        for k in [5u32, 7, 8] {
            let automaton = Automaton::new(&PlatSpec::uniform(strands, Spin::HALF, k, "").unwrap()).unwrap();
            for (w, v) in corpus.iter().zip(&jones) {
                worst = worst.max((normalized(&automaton, w, k) - jones_at_root(v, k)).norm());
                count += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst <= 1e-8 && secs < 300.0,
        format!("{count} word/level pairs vs state-sum oracle, max err {worst:.2e} in {secs:.1}s"),
    )
}

fn criterion_3() -> Outcome {
    let (mut yb, mut far, mut unit): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for k in [5u32, 6, 7] {
        let ctx = QContext::new(k).unwrap();
        for caps in [2usize, 3] {
            let n = 2 * caps;
            for mask in 0..1u32 << caps {
                let colors: Vec<Spin> =
                    (0..caps).map(|c| if mask >> c & 1 == 0 { Spin::HALF } else { Spin::ONE }).collect();
                let tree = fusion_tree(Shape::odd(caps), &colors, &default_pattern(n));
                if enumerate_states(&tree, &ctx).is_empty() {
                    continue;
                }
                for i in 1..n {
                    for s in [1, -1] {
                        unit = unit.max(deviation_from_unitary(&generator_matrix(&tree, i, s, &ctx).unwrap().0));
                    }
                }
                for i in 1..n - 1 {
                    for s in [1, -1] {
                        let l = word_matrix(&tree, &[(i, s), (i + 1, s), (i, s)], &ctx);
                        let r = word_matrix(&tree, &[(i + 1, s), (i, s), (i + 1, s)], &ctx);
                        yb = yb.max(distance(&l, &r));
                    }
                }
                for i in 1..n {
                    for j in i + 2..n {
                        let l = word_matrix(&tree, &[(i, 1), (j, -1)], &ctx);
                        let r = word_matrix(&tree, &[(j, -1), (i, 1)], &ctx);
                        far = far.max(distance(&l, &r));
                    }
                }
            }
        }
        let top = ctx.level();
        for t in 0..(top + 1).pow(4) {
            let s: Vec<Spin> = (0..4).map(|d| Spin::from_twice(t / (top + 1).pow(d) % (top + 1))).collect();
            if let Ok(f) = ctx.f_matrix(s[0], s[1], s[2], s[3]) {
                let m: Matrix = f.entries.iter().map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect();
                unit = unit.max(deviation_from_unitary(&m));
            }
        }
    }
    outcome(
        yb <= 1e-10 && far <= 1e-10 && unit <= 1e-12,
        format!("yang-baxter {yb:.2e}, far commutation {far:.2e}, unitarity {unit:.2e}"),
    )
}

fn contraction(ctx: &QContext, j: [Spin; 6]) -> Complex64 {
    let [j1, j2, j3, jt, j12, j23] = j.map(|s| s.twice() as i32);
    let mut s = Complex64::new(0.0, 0.0);
    let sp = Spin::from_twice;
    for m1 in (-j1..=j1).step_by(2) {
        for m2 in (-j2..=j2).step_by(2) {
            let m3 = jt - m1 - m2;
            if m3.abs() > j3 || (j3 - m3) % 2 != 0 || (m1 + m2).abs() > j12 || (m2 + m3).abs() > j23 {
                continue;
            }
            let cg = |a: i32, ma: i32, b: i32, mb: i32, c: i32, mc: i32| {
                ctx.q_cg(sp(a as u32), ma, sp(b as u32), mb, sp(c as u32), mc).unwrap()
            };
            s += cg(j1, m1, j2, m2, j12, m1 + m2)
                * cg(j12, m1 + m2, j3, m3, jt, jt)
                * cg(j2, m2, j3, m3, j23, m2 + m3)
                * cg(j1, m1, j23, m2 + m3, jt, jt);
        }
    }
    s
}

fn criterion_4() -> Outcome {
    let mut cg: f64 = 0.0;
    for k in [5u32, 6, 8] {
        let ctx = QContext::new(k).unwrap();
        let spins: Vec<Spin> = (0..=3.min(ctx.level())).map(Spin::from_twice).collect();
        for &a in &spins {
            for &b in &spins {
                for &c in &spins {
                    for ab in ctx.channels(a, b) {
                        for j in ctx.channels(ab, c) {
                            for bc in ctx.channels(b, c).into_iter().filter(|&x| ctx.admissible(a, x, j)) {
                                let phase = sign(a.twice() + b.twice() + c.twice() + j.twice());
                                let scale = (qint(ab.twice() + 1, k) * qint(bc.twice() + 1, k)).sqrt();
                                let expected = contraction(&ctx, [a, b, c, j, ab, bc]) * phase / scale;
                                let six = ctx.six_j(QRacahKey::new([a, b, ab], [c, j, bc]));
                                cg = cg.max((expected - six).norm());
                            }
                        }
                    }
                }
            }
        }
    }

    let mut rng = ChaCha20Rng::seed_from_u64(20_240_601);
    let (mut be, mut orth): (f64, f64) = (0.0, 0.0);
    let mut found = 0;
    while found < 200 {
        let k = rng.gen_range(3..=10u32);
        let ctx = QContext::new(k).unwrap();
        let s: Vec<Spin> = (0..9).map(|_| Spin::from_twice(rng.gen_range(0..=k - 2))).collect();
        let (a, b, c, d, e, f, p, q, r) = (s[0], s[1], s[2], s[3], s[4], s[5], s[6], s[7], s[8]);
        let triads = [(a, d, p), (c, b, p), (c, f, q), (e, d, q), (e, a, r), (b, f, r), (p, q, r)];
        if !triads.iter().all(|&(x, y, z)| ctx.admissible(x, y, z)) {
            continue;
        }
        found += 1;
        let six = |t: [Spin; 3], u: [Spin; 3]| ctx.six_j(QRacahKey::new(t, u));
        let total: u32 = s.iter().map(|x| x.twice()).sum();
        let lhs: f64 = (0..=k - 2)
            .map(Spin::from_twice)
            .map(|x| {
                let t = six([a, b, x], [c, d, p]) * six([c, d, x], [e, f, q]) * six([e, f, x], [b, a, r]);
                if t == 0.0 {
                    0.0
                } else {
                    sign(total + x.twice()) * qint(x.twice() + 1, k) * t
                }
            })
            .sum();
        be = be.max((lhs - six([p, q, r], [e, a, d]) * six([p, q, r], [f, b, c])).abs());

        // Orthogonality over the same k on the pair (p, q) with both triads of each side valid.
        if ctx.admissible(a, d, q) && ctx.admissible(c, b, q) {
            let sum: f64 = (0..=k - 2)
                .map(Spin::from_twice)
                .map(|x| {
                    qint(x.twice() + 1, k)
                        * qint(p.twice() + 1, k)
                        * six([a, b, x], [c, d, p])
                        * six([a, b, x], [c, d, q])
                })
                .sum();
            orth = orth.max((sum - if p == q { 1.0 } else { 0.0 }).abs());
        }
        let sum: f64 = (0..=k - 2)
            .map(Spin::from_twice)
            .map(|x| qint(x.twice() + 1, k) * qint(p.twice() + 1, k) * six([a, b, x], [c, d, p]).powi(2))
            .sum();
        orth = orth.max((sum - 1.0).abs());
    }
    outcome(
        cg <= 1e-10 && be <= 1e-10 && orth <= 1e-10,
        format!("6j vs CG {cg:.2e}, Biedenharn-Elliott {be:.2e}, orthogonality {orth:.2e} (200 tuples)"),
    )
}

fn criterion_5() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in [5u32, 6, 7] {
        let ctx = QContext::new(k).unwrap();
        for caps in [2usize, 3] {
            let n = 2 * caps;
            let colors = vec![Spin::HALF; caps];
            for i in 1..n {
                let shape = if i % 2 == 1 { Shape::odd(caps) } else { Shape::even(caps) };
                let tree = fusion_tree(shape, &colors, &default_pattern(n));
                let (m, _) = generator_matrix(&tree, i, 1, &ctx).unwrap();
                for (r, row) in m.iter().enumerate() {
                    for (c, x) in row.iter().enumerate() {
                        if r != c {
                            worst = worst.max(x.norm());
                        }
                    }
                }
            }
        }
    }
    outcome(worst <= 1e-14, format!("largest off-diagonal {worst:.2e}"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha20Rng::seed_from_u64(6);
    let mut max_ratio: f64 = 0.0;
    let mut over = 0;
    for _ in 0..500 {
        let strands = [4usize, 6, 8][rng.gen_range(0..3)];
        let len = rng.gen_range(1..=20);
        let w = random_word(&mut rng, strands, len);
        let automaton = Automaton::new(&PlatSpec::uniform(strands, Spin::HALF, 7, "").unwrap()).unwrap();
        let r = automaton.run(&w).unwrap();
        let ratio = r.moves as f64 / (bound_constant(strands / 2) * len as f64);
        max_ratio = max_ratio.max(ratio);
        over += (ratio > 1.0) as usize;
    }
    outcome(over == 0, format!("500 words, max moves/(c(N) kappa) = {max_ratio:.3}"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let vertices = CouplingGraph::build(3, true).unwrap().vertex_count();
    let table = growth_check(8).unwrap();
    let diameters: Vec<usize> = table.rows.iter().map(|r| r.diameter).collect();
    let monotone = diameters.windows(2).all(|w| w[0] <= w[1]);
    let ratios: Vec<f64> = table.rows.iter().map(|r| r.diameter as f64 / (r.n as f64 * (r.n as f64).ln())).collect();
    let spread = ratios.iter().cloned().fold(0.0, f64::max) / ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let secs = start.elapsed().as_secs_f64();
    outcome(
        vertices == 120 && monotone && spread < 2.0 && secs < 120.0,
        format!("|V(3)| = {vertices}, diameters {diameters:?}, spread {spread:.3}, {secs:.2}s"),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha20Rng::seed_from_u64(8);
    let automaton =
        |strands: usize, k: u32| Automaton::new(&PlatSpec::uniform(strands, Spin::HALF, k, "").unwrap()).unwrap();
    let empty = automaton(4, 5).run(&BraidWord::empty(4).unwrap()).unwrap().amplitude();
    let (mut inv, mut modulus): (f64, f64) = (0.0, 0.0);
    for _ in 0..200 {
        let strands = [4usize, 6][rng.gen_range(0..2)];
        let a = automaton(strands, [5u32, 6, 7, 8][rng.gen_range(0..4)]);
        let len = rng.gen_range(0..=10);
        let base = random_word(&mut rng, strands, len);
        let amp = a.run(&base).unwrap().amplitude();
        modulus = modulus.max(amp.norm());

        // Insert a cancelling pair, then rewrite with one braid relation.
        let mut letters = base.letters().to_vec();
        let cut = rng.gen_range(0..=letters.len());
        let g = Letter::new(rng.gen_range(1..strands), 1);
        letters.splice(cut..cut, [g, g.inverse()]);
        let padded = BraidWord::new(strands, letters.clone()).unwrap();
        inv = inv.max((a.run(&padded).unwrap().amplitude() - amp).norm());
        inv = inv.max((a.run(&padded.free_reduce()).unwrap().amplitude() - amp).norm());

        let i = rng.gen_range(1..strands - 1);
        let (x, y) = (Letter::new(i, 1), Letter::new(i + 1, 1));
        let cut = rng.gen_range(0..=letters.len());
        let mut left = letters.clone();
        left.splice(cut..cut, [x, y, x]);
        let mut right = letters;
        right.splice(cut..cut, [y, x, y]);
        let l = a.run(&BraidWord::new(strands, left).unwrap()).unwrap().amplitude();
        let r = a.run(&BraidWord::new(strands, right).unwrap()).unwrap().amplitude();
        inv = inv.max((l - r).norm());
        modulus = modulus.max(l.norm());
    }
    let empty_err = (empty - 1.0).norm();
    outcome(
        empty_err <= 1e-12 && inv <= 1e-10 && modulus <= 1.0 + 1e-12,
        format!("empty word err {empty_err:.1e}, invariance {inv:.2e}, max |amp| {modulus:.15}"),
    )
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 8] =
        [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8];
    let mut failed = 0;
    for (n, run) in criteria.iter().enumerate() {
        let o = run();
        println!("criterion {}: {} {}", n + 1, if o.passed { "PASS" } else { "FAIL" }, o.summary);
        failed += (!o.passed) as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
