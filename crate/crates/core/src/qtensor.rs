//! q-deformed SU(2) recoupling data at `q = exp(-2πi/k)`.
//!
//! Spins are stored as twice their value so that admissibility tests stay in
//! integer arithmetic. The truncation follows the level `ℓ = k - 2`: a spin is
//! allowed when `2j <= ℓ`, and a triad `(j1, j2, j3)` fuses when the classical
//! triangle rule holds and `j1 + j2 + j3 <= ℓ`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A spin label `j`, held as the integer `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Spin(u32);

impl Spin {
    pub const ZERO: Spin = Spin(0);
    pub const HALF: Spin = Spin(1);
    pub const ONE: Spin = Spin(2);

    pub const fn from_twice(twice_j: u32) -> Self {
        Spin(twice_j)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 2.0
    }

    /// Quadratic Casimir `j(j+1)`.
    pub fn casimir(self) -> f64 {
        let t = self.0 as f64;
        t * (t + 2.0) / 4.0
    }

    pub fn is_integer(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Spin {
    type Err = Error;

    /// Accepts `"p/2"` or a plain non-negative integer.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Syntax { pos: 0, msg: format!("invalid spin `{s}`") };
        if let Some((num, den)) = s.split_once('/') {
            if den.trim() != "2" {
                return Err(bad());
            }
            let p: u32 = num.trim().parse().map_err(|_| bad())?;
            Ok(Spin(p))
        } else {
            let n: u32 = s.parse().map_err(|_| bad())?;
            n.checked_mul(2).map(Spin).ok_or_else(bad)
        }
    }
}

impl TryFrom<String> for Spin {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Spin> for String {
    fn from(s: Spin) -> String {
        s.to_string()
    }
}

/// Six spins of a 6j symbol laid out as `{ a b e ; c d f }`.
///
/// The triads that must fuse are `(a,b,e)`, `(a,d,f)`, `(c,b,f)` and `(c,d,e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QRacahKey {
    pub a: Spin,
    pub b: Spin,
    pub e: Spin,
    pub c: Spin,
    pub d: Spin,
    pub f: Spin,
}

impl QRacahKey {
    pub fn new(top: [Spin; 3], bottom: [Spin; 3]) -> Self {
        QRacahKey { a: top[0], b: top[1], e: top[2], c: bottom[0], d: bottom[1], f: bottom[2] }
    }

    pub fn triads(&self) -> [(Spin, Spin, Spin); 4] {
        [(self.a, self.b, self.e), (self.a, self.d, self.f), (self.c, self.b, self.f), (self.c, self.d, self.e)]
    }

    fn packed(&self) -> [u32; 6] {
        [self.a.0, self.b.0, self.e.0, self.c.0, self.d.0, self.f.0]
    }
}

/// Root-of-unity regime plus cached q-arithmetic.
///
/// Immutable after construction apart from the 6j memo table, which is
/// guarded by a lock and only ever grows.
pub struct QContext {
    k: u32,
    q: Complex64,
    factorials: Vec<f64>,
    six_j_memo: RwLock<HashMap<[u32; 6], f64>>,
}

impl fmt::Debug for QContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QContext").field("k", &self.k).field("q", &self.q).finish()
    }
}

impl Clone for QContext {
    fn clone(&self) -> Self {
        QContext::new(self.k).expect("existing context has a valid k")
    }
}

impl QContext {
    pub fn new(k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidLevel(k));
        }
        let theta = -2.0 * PI / k as f64;
        let q = Complex64::from_polar(1.0, theta);
        let mut factorials = Vec::with_capacity(k as usize);
        factorials.push(1.0);
        for n in 1..k {
            let prev = factorials[(n - 1) as usize];
            factorials.push(prev * q_int_raw(n as i64, k));
        }
        Ok(QContext { k, q, factorials, six_j_memo: RwLock::new(HashMap::new()) })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Level `ℓ = k - 2`.
    pub fn level(&self) -> u32 {
        self.k - 2
    }

    pub fn q(&self) -> Complex64 {
        self.q
    }

    pub fn max_spin(&self) -> Spin {
        Spin(self.level())
    }

    /// `q^x` on the principal branch, i.e. `exp(-2πi x / k)`.
    pub fn q_pow(&self, x: f64) -> Complex64 {
        Complex64::from_polar(1.0, -2.0 * PI * x / self.k as f64)
    }

    pub fn check_spin(&self, j: Spin) -> Result<()> {
        if j.0 > self.level() {
            Err(Error::SpinOutOfRange { spin: j.to_string(), max: self.max_spin().to_string(), k: self.k })
        } else {
            Ok(())
        }
    }

    /// The q-integer `[n] = sin(πn/k) / sin(π/k)`.
    pub fn q_int(&self, n: u32) -> f64 {
        q_int_raw(n as i64, self.k)
    }

    /// `[n]!`, which vanishes once `n >= k`.
    pub fn q_factorial(&self, n: u32) -> f64 {
        self.factorials.get(n as usize).copied().unwrap_or(0.0)
    }

    /// Quantum dimension `[2j+1]`.
    pub fn q_dim(&self, j: Spin) -> Result<f64> {
        self.check_spin(j)?;
        Ok(self.q_int(j.0 + 1))
    }

    /// Truncated fusion rule.
    pub fn admissible(&self, j1: Spin, j2: Spin, j3: Spin) -> bool {
        let (a, b, c) = (j1.0, j2.0, j3.0);
        let sum = a + b + c;
        a.max(b).max(c) <= self.level() && sum % 2 == 0 && c >= a.abs_diff(b) && c <= a + b && sum <= 2 * self.level()
    }

    /// Allowed channels of `j1 ⊗ j2`, ascending.
    pub fn channels(&self, j1: Spin, j2: Spin) -> Vec<Spin> {
        let lo = j1.0.abs_diff(j2.0);
        (lo..=j1.0 + j2.0).step_by(2).map(Spin).filter(|&z| self.admissible(j1, j2, z)).collect()
    }

    fn delta(&self, a: u32, b: u32, c: u32) -> f64 {
        let num =
            self.q_factorial((a + b - c) / 2) * self.q_factorial((a + c - b) / 2) * self.q_factorial((b + c - a) / 2);
        let den = self.q_factorial((a + b + c) / 2 + 1);
        (num / den).sqrt()
    }

    /// q-Clebsch–Gordan coefficient `(j1 m1, j2 m2 | j m)_q`.
    ///
    /// Projections are passed as twice their value. The coefficients satisfy
    /// the bilinear orthogonality `Σ C(j m) C(j' m) = δ`; at a root of unity the
    /// phases make them complex, so `Σ |C|²` is not 1 in general.
    pub fn q_cg(&self, j1: Spin, m1: i32, j2: Spin, m2: i32, j: Spin, m: i32) -> Result<Complex64> {
        for (jj, mm) in [(j1, m1), (j2, m2), (j, m)] {
            self.check_spin(jj)?;
            if mm.unsigned_abs() > jj.0 || (jj.0 as i32 - mm) % 2 != 0 {
                return Err(Error::BadProjection { j: jj.to_string(), m: format!("{mm}/2") });
            }
        }
        if m != m1 + m2 || !self.admissible(j1, j2, j) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let (t1, t2, t) = (j1.0 as i32, j2.0 as i32, j.0 as i32);
        let half = |x: i32| -> i32 { x / 2 };
        let a = half(t1 + t2 - t);
        let b = half(t1 + t2 + t) + 1;
        let exponent = (a * b) as f64 / 4.0 + (t1 * m2 - t2 * m1) as f64 / 8.0;
        let f = |x: i32| self.q_factorial(x as u32);
        let norm = (f(half(t1 + m1))
            * f(half(t1 - m1))
            * f(half(t2 + m2))
            * f(half(t2 - m2))
            * f(half(t + m))
            * f(half(t - m))
            * self.q_int(j.0 + 1))
        .sqrt()
            * self.delta(j1.0, j2.0, j.0);

        let mut sum = Complex64::new(0.0, 0.0);
        for z in 0..=a {
            let args = [a - z, half(t1 - m1) - z, half(t2 + m2) - z, half(t - t2 + m1) + z, half(t - t1 - m2) + z];
            if args.iter().any(|&x| x < 0) {
                continue;
            }
            let den: f64 = f(z) * args.iter().map(|&x| f(x)).product::<f64>();
            let sign = if z % 2 == 0 { 1.0 } else { -1.0 };
            sum += self.q_pow(-(z * b) as f64 / 2.0) * (sign / den);
        }
        Ok(self.q_pow(exponent) * sum * norm)
    }

    /// The (symmetric, unitary-normalised) q-6j symbol `{a b e; c d f}_q`.
    ///
    /// Zero whenever one of the four triads fails the truncated fusion rule.
    pub fn six_j(&self, key: QRacahKey) -> f64 {
        if key.triads().iter().any(|&(x, y, z)| !self.admissible(x, y, z)) {
            return 0.0;
        }
        let packed = key.packed();
        if let Some(v) = self.six_j_memo.read().expect("6j memo poisoned").get(&packed) {
            return *v;
        }
        let v = self.six_j_uncached(key);
        self.six_j_memo.write().expect("6j memo poisoned").insert(packed, v);
        v
    }

    fn six_j_uncached(&self, key: QRacahKey) -> f64 {
        let [a, b, e, c, d, f] = key.packed();
        let triads = [a + b + e, a + d + f, c + b + f, c + d + e].map(|s| s / 2);
        let quads = [a + b + c + d, b + e + d + f, e + a + f + c].map(|s| s / 2);
        let lo = *triads.iter().max().unwrap();
        let hi = *quads.iter().min().unwrap();
        let mut sum = 0.0;
        for z in lo..=hi {
            let num = self.q_factorial(z + 1);
            if num == 0.0 {
                continue;
            }
            let den: f64 = triads.iter().map(|&t| self.q_factorial(z - t)).product::<f64>()
                * quads.iter().map(|&s| self.q_factorial(s - z)).product::<f64>();
            let sign = if z % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * num / den;
        }
        let prefactor = self.delta(a, b, e) * self.delta(a, d, f) * self.delta(c, b, f) * self.delta(c, d, e);
        prefactor * sum
    }

    /// Entry of the unitary recoupling matrix
    /// `|((j1 j2)_{j12} j3)_j> = Σ_{j23} F[j12][j23] |(j1 (j2 j3)_{j23})_j>`.
    ///
    /// Equals `(-1)^{j1+j2+j3+j} sqrt([2j12+1][2j23+1]) {j1 j2 j12; j3 j j23}_q`.
    pub fn norm_racah(&self, j1: Spin, j2: Spin, j3: Spin, j: Spin, j12: Spin, j23: Spin) -> f64 {
        let six = self.six_j(QRacahKey::new([j1, j2, j12], [j3, j, j23]));
        if six == 0.0 {
            return 0.0;
        }
        let phase = if ((j1.0 + j2.0 + j3.0 + j.0) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        phase * (self.q_int(j12.0 + 1) * self.q_int(j23.0 + 1)).sqrt() * six
    }

    /// Racah coefficient `W_q(j1 j2 j j3; j12 j23) = (-1)^{j1+j2+j3+j} {j1 j2 j12; j3 j j23}_q`.
    pub fn racah_w(&self, j1: Spin, j2: Spin, j3: Spin, j: Spin, j12: Spin, j23: Spin) -> f64 {
        let phase = if ((j1.0 + j2.0 + j3.0 + j.0) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
        phase * self.six_j(QRacahKey::new([j1, j2, j12], [j3, j, j23]))
    }

    /// The duality (F) matrix between `((j1 j2) j3)_j` and `(j1 (j2 j3))_j`.
    pub fn f_matrix(&self, j1: Spin, j2: Spin, j3: Spin, j: Spin) -> Result<FMatrix> {
        for s in [j1, j2, j3, j] {
            self.check_spin(s)?;
        }
        let rows: Vec<Spin> = self.channels(j1, j2).into_iter().filter(|&x| self.admissible(x, j3, j)).collect();
        let cols: Vec<Spin> = self.channels(j2, j3).into_iter().filter(|&x| self.admissible(j1, x, j)).collect();
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::Inadmissible(format!("no channel couples ({j1} {j2} {j3}) to {j}")));
        }
        let entries =
            rows.iter().map(|&r| cols.iter().map(|&c| self.norm_racah(j1, j2, j3, j, r, c)).collect()).collect();
        Ok(FMatrix { rows, cols, entries })
    }
}

fn q_int_raw(n: i64, k: u32) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let k = k as f64;
    (PI * n as f64 / k).sin() / (PI / k).sin()
}

/// A duality matrix with its channel labels.
#[derive(Clone, Debug, PartialEq)]
pub struct FMatrix {
    pub rows: Vec<Spin>,
    pub cols: Vec<Spin>,
    pub entries: Vec<Vec<f64>>,
}

impl FMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Largest deviation of `F Fᵀ` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        if self.rows.len() != self.cols.len() {
            return f64::INFINITY;
        }
        let n = self.rows.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|c| self.entries[i][c] * self.entries[j][c]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(twice: u32) -> Spin {
        Spin::from_twice(twice)
    }

    #[test]
    fn q_integers() {
        let ctx = QContext::new(5).unwrap();
        assert_eq!(ctx.q_int(0), 0.0);
        assert!((ctx.q_int(1) - 1.0).abs() < 1e-15);
        let golden = 2.0 * (PI / 5.0).cos();
        assert!((ctx.q_int(2) - golden).abs() < 1e-12);
        assert!((ctx.q_int(2) - 1.6180340).abs() < 1e-7);
        assert!((ctx.q_int(4) - 1.0).abs() < 1e-12);
        for k in 3..=64 {
            let ctx = QContext::new(k).unwrap();
            assert!((1..k).all(|n| ctx.q_int(n) > 0.0), "k = {k}");
            assert!((ctx.q().norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_small_k() {
        assert_eq!(QContext::new(2).unwrap_err(), Error::InvalidLevel(2));
    }

    #[test]
    fn q_dimensions() {
        let ctx = QContext::new(5).unwrap();
        assert_eq!(ctx.q_dim(Spin::ZERO).unwrap(), 1.0);
        assert!((ctx.q_dim(Spin::HALF).unwrap() - ctx.q_int(2)).abs() < 1e-15);
        assert!((ctx.q_dim(Spin::ONE).unwrap() - 1.6180340).abs() < 1e-7);
        assert!(ctx.q_dim(s(4)).is_err());
    }

    #[test]
    fn fusion_rule() {
        let k5 = QContext::new(5).unwrap();
        let k3 = QContext::new(3).unwrap();
        assert!(k5.admissible(Spin::HALF, Spin::HALF, Spin::ZERO));
        assert!(k5.admissible(Spin::HALF, Spin::HALF, Spin::ONE));
        assert!(!k3.admissible(Spin::HALF, Spin::HALF, Spin::ONE));
        assert!(!k5.admissible(Spin::HALF, Spin::ONE, Spin::ONE));
        assert_eq!(k5.channels(Spin::HALF, Spin::HALF), vec![Spin::ZERO, Spin::ONE]);
        assert_eq!(k5.channels(s(3), s(3)), vec![Spin::ZERO]);
    }

    #[test]
    fn spin_parsing() {
        assert_eq!("1/2".parse::<Spin>().unwrap(), Spin::HALF);
        assert_eq!("3".parse::<Spin>().unwrap(), s(6));
        assert_eq!(s(3).to_string(), "3/2");
        assert!("1/3".parse::<Spin>().is_err());
        assert!("x".parse::<Spin>().is_err());
    }

    #[test]
    fn clebsch_gordan_basics() {
        let ctx = QContext::new(5).unwrap();
        let stretched = ctx.q_cg(Spin::HALF, 1, Spin::HALF, 1, Spin::ONE, 2).unwrap();
        assert!((stretched - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert_eq!(ctx.q_cg(Spin::HALF, 1, Spin::HALF, 1, Spin::ONE, 0).unwrap(), Complex64::new(0.0, 0.0));
        assert!(ctx.q_cg(Spin::HALF, 3, Spin::HALF, 1, Spin::ONE, 2).is_err());
        assert!(ctx.q_cg(Spin::HALF, 0, Spin::HALF, 1, Spin::ONE, 2).is_err());

        let big = QContext::new(4000).unwrap();
        let c = big.q_cg(Spin::HALF, 1, Spin::HALF, -1, Spin::ZERO, 0).unwrap();
        assert!((c.norm() - 0.5f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn clebsch_gordan_bilinear_orthogonality() {
        for k in [5, 6, 8] {
            let ctx = QContext::new(k).unwrap();
            let spins: Vec<Spin> = (0..=ctx.level().min(3)).map(s).collect();
            for &j1 in &spins {
                for &j2 in &spins {
                    for j in ctx.channels(j1, j2) {
                        for jp in ctx.channels(j1, j2) {
                            for m in (-(j.0 as i32)..=j.0 as i32).step_by(2) {
                                if m.unsigned_abs() > jp.0 {
                                    continue;
                                }
                                let mut sum = Complex64::new(0.0, 0.0);
                                for m1 in (-(j1.0 as i32)..=j1.0 as i32).step_by(2) {
                                    let m2 = m - m1;
                                    if m2.unsigned_abs() > j2.0 || (j2.0 as i32 - m2) % 2 != 0 {
                                        continue;
                                    }
                                    sum += ctx.q_cg(j1, m1, j2, m2, j, m).unwrap()
                                        * ctx.q_cg(j1, m1, j2, m2, jp, m).unwrap();
                                }
                                let target = if j == jp { 1.0 } else { 0.0 };
                                assert!((sum - target).norm() < 1e-10, "k={k} {j1} {j2} {j} {jp} m={m}: {sum}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn six_j_values() {
        let ctx = QContext::new(5).unwrap();
        let h = Spin::HALF;
        let key = QRacahKey::new([h, h, Spin::ZERO], [h, h, Spin::ZERO]);
        // Standard sign: the classical value is -1/2.
        assert!((ctx.six_j(key) + 1.0 / ctx.q_int(2)).abs() < 1e-12);
        let bad = QRacahKey::new([h, h, s(3)], [h, h, Spin::ZERO]);
        assert_eq!(ctx.six_j(bad), 0.0);

        let big = QContext::new(10_000).unwrap();
        let key = QRacahKey::new([h, h, Spin::ONE], [h, h, Spin::ONE]);
        assert!((big.six_j(key) - 1.0 / 6.0).abs() < 1e-6);
    }

    #[test]
    fn golden_f_matrix() {
        let ctx = QContext::new(5).unwrap();
        let h = Spin::HALF;
        let f = ctx.f_matrix(h, h, h, h).unwrap();
        assert_eq!(f.rows, vec![Spin::ZERO, Spin::ONE]);
        let d = ctx.q_int(2);
        assert!((f.entries[0][0] + 1.0 / d).abs() < 1e-12);
        assert!((f.entries[0][1] - ctx.q_int(3).sqrt() / d).abs() < 1e-12);
        assert!((f.entries[0][0].abs() - 0.6180340).abs() < 1e-7);
        assert!(f.unitarity_residual() < 1e-12);
    }

    #[test]
    fn trivial_f_matrix() {
        let ctx = QContext::new(7).unwrap();
        let f = ctx.f_matrix(Spin::ONE, Spin::ZERO, Spin::HALF, Spin::HALF).unwrap();
        assert_eq!(f.dim(), 1);
        assert!((f.entries[0][0] - 1.0).abs() < 1e-12);
        assert!(ctx.f_matrix(Spin::HALF, Spin::HALF, Spin::HALF, s(5)).is_err());
    }

    #[test]
    fn norm_racah_inadmissible_is_zero() {
        let ctx = QContext::new(5).unwrap();
        let h = Spin::HALF;
        assert_eq!(ctx.norm_racah(h, h, h, h, s(3), Spin::ZERO), 0.0);
        assert!((ctx.norm_racah(h, h, h, h, Spin::ZERO, Spin::ZERO).abs() - 1.0 / ctx.q_int(2)).abs() < 1e-12);
    }
}
