//! Registry of verifiable statement families.
//!
//! Each family runs either one instance (when its instance parameters are
//! given) or its default range. The default ranges are the ones the
//! acceptance suite uses, so running every family with empty [`Params`]
//! reproduces it. Results come back in a deterministic order that does not
//! depend on the size of the thread pool.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::conjectures::{self, Growth};
use super::{
    check_cor11, check_cor41, check_lemma22, check_lemma23, check_lemma41, check_lemma42,
    check_remark11, check_remark13, check_remark52, check_thm11, check_thm12, check_thm13,
    check_thm13_ii, check_thm14_i, check_thm14_ii, check_thm15_cross, check_thm15_i,
    check_thm15_ii, check_thm41, check_thm42, check_thm43, check_thm44, paper_kernels,
    power_kernels, scan_cor11, scan_thm13, scan_thm14_i, scan_thm14_ii, CheckResult,
    KernelHypothesis, KernelSpec, ProductVariant, Strength,
};
use crate::error::{Error, Result};
use crate::exactnum::{odd_primes_below, primes_below};
use crate::qalgebra;
use crate::sequences;

/// Seed of the randomized kernel-framework grid.
pub const DEFAULT_SEED: u64 = 0x5eed_b1a5;

/// Instance parameters and range overrides. Unset fields fall back to the
/// family's defaults.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params {
    pub n: Option<u64>,
    pub p: Option<u64>,
    pub k: Option<u64>,
    pub d: Option<u64>,
    pub m: Option<u64>,
    pub a: Option<Vec<i64>>,
    pub b: Option<Vec<i64>>,
    pub a_prime: Option<u64>,
    pub s: Option<u64>,
    pub t: Option<u64>,
    pub kernel: Option<KernelSpec>,
    pub variant: Option<ProductVariant>,
    pub strength: Option<Strength>,
    pub seq: Option<String>,
    pub a_seq: Option<Vec<BigRational>>,
    pub max_n: Option<u64>,
    pub max_p: Option<u64>,
    pub max_m: Option<u64>,
    pub max_a: Option<u64>,
    pub max_b: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Identity,
    Congruence,
    QAnalogue,
    Conjecture,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Identity => "identity",
            Kind::Congruence => "congruence",
            Kind::QAnalogue => "q-analogue",
            Kind::Conjecture => "conjecture",
        }
    }
}

pub struct Family {
    pub name: &'static str,
    pub kind: Kind,
    pub statement: &'static str,
    /// Default range, for listings.
    pub range: &'static str,
    runner: fn(&Params) -> Result<Vec<CheckResult>>,
}

impl Family {
    pub fn run(&self, params: &Params) -> Result<Vec<CheckResult>> {
        (self.runner)(params)
    }
}

impl std::fmt::Debug for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Family").field("name", &self.name).finish()
    }
}

macro_rules! family {
    ($name:literal, $kind:ident, $statement:literal, $range:literal, $runner:expr) => {
        Family {
            name: $name,
            kind: Kind::$kind,
            statement: $statement,
            range: $range,
            runner: $runner,
        }
    };
}

static FAMILIES: &[Family] = &[
    family!("rec_R", Identity, "four-term recurrence of R_n", "n <= 200", run_rec_r),
    family!("rec_Rpoly", Identity, "four-term recurrence of R_n(x)", "n <= 100", run_rec_r_poly),
    family!("rec_S", Identity, "four-term recurrence of S_n", "n <= 200", run_rec_s),
    family!("thm11", Congruence, "central binomial sums weighted by 1/(2k-1) at x = 1, -2, -1/2 mod p and p^2; x^2 mod p for p = 1 mod 4", "odd p < 2000", run_thm11),
    family!("thm12", Congruence, "sum C(2k,k) C(2k,k+d)/((2k-1) 8^k) = 0 mod p for every admissible d", "odd p < 1000", run_thm12),
    family!("remark11", Identity, "closed form of sum C(2k,k) C(2k,k+d)/((2k-1) 16^k)", "n <= 40, d <= n", run_remark11),
    family!("thm13", Congruence, "sum_{k<p} R_k = -p - (-1/p) mod p^2", "odd p < 1000", run_thm13),
    family!("thm13_ii", Congruence, "divisibility of sums of R_k and R_k(-1) by n", "n <= 500", run_thm13_ii),
    family!("thm14_i", Congruence, "divisibility of sums of S_k(x) coefficients by n", "n <= 300", run_thm14_i),
    family!("thm14_ii", Congruence, "sum S_k/k mod p for primes p > 3", "5 <= p < 500", run_thm14_ii),
    family!("thm15_i", Congruence, "products of C(a_i n-1,k) C(-a_i n-1,k) against odd, cubic and hexagonal weights", "n <= 60, a_i in [-3,3]\\{0}, m <= 3", run_thm15_i),
    family!("thm15_ii", Congruence, "mixed powers C(n-1,k)^a C(-n-1,k)^b against ten rational weights", "n <= 60, a, b <= 3", run_thm15_ii),
    family!("thm15_cross", Identity, "mixed-power sums recomputed through the kernel framework", "n <= 60, a, b <= 3", run_thm15_cross),
    family!("remark13", Identity, "sum_{k<n} C(n-1,k) C(-n-1,k)/(4k^2-1) = -n", "n <= 200", run_remark13),
    family!("cor11", Congruence, "t_n, T_n and signed variants divisible by n", "n <= 150", run_cor11),
    family!("lemma22", Identity, "polynomial identity for ((16-x)k^2-4) C(2k,k)^2/(2k-1) x^(n-k)", "n <= 50", run_lemma22),
    family!("lemma23", Identity, "(-1)^k C(n,k) C(-n,k)/C(2k-1,k) = C(n+k,2k) + C(n+k-1,2k)", "n <= 50, 1 <= k <= n", run_lemma23),
    family!("qlucas", QAnalogue, "q-Lucas reduction modulo the cyclotomic polynomial", "a, b, s, t <= 6, 2 <= d <= 6", run_qlucas),
    family!("lemma32", QAnalogue, "Phi_n(q) divides sum q^h [h choose k]_q^2", "n <= 30, k < (n-1)/2", run_lemma32),
    family!("thm31", QAnalogue, "[n]_q divides [2k+1]_q [2k choose k]_q sum q^h [h choose k]_q^2", "n <= 30, k < n", run_thm31),
    family!("thm32", QAnalogue, "[n]_q divides the q-sum over [n-1 choose k]_q^a [n+k choose k]_q^b", "n <= 20, a, b <= 2, a' in {a, a-1}", run_thm32),
    family!("thm41", Congruence, "partial summation against prod C(a_i-1, b_i+k) mod d and d^2", "randomized grid", run_thm41),
    family!("cor41", Congruence, "alternating, odd, cubic and hexagonal sums over prod C(a_i-1, b_i+k)", "randomized grid", run_cor41),
    family!("thm42", Congruence, "differences of k^3-divisible kernels mod n^3", "randomized grid", run_thm42),
    family!("lemma41", Congruence, "k C(n,k) C(-n,k)/C(2k-1,k) divisible by n", "n <= 60", run_lemma41),
    family!("thm43", Congruence, "integrality of kernel differences over symmetric products", "randomized grid", run_thm43),
    family!("thm44", Congruence, "integrality of kernel differences over C(n-1,k)^a C(-n-1,k)^b", "randomized grid", run_thm44),
    family!("lemma42", Identity, "transform of (2k+1)-weighted sums by n^2", "randomized grid", run_lemma42),
    family!("remark52", Identity, "(3/n) sum (2k+1) R_k(x) has integer coefficients", "n <= 50", run_remark52),
    family!("conj51", Conjecture, "sum C(2k,k) C(2k,k+d)/((2k-1) 8^k) mod p^2 for p = 3 mod 4", "p < 1000", run_conj51),
    family!("conj52", Conjecture, "ratio monotonicity and bounds of R_n and S_n, and their n-th root ratios", "n <= 1000", run_conj52),
    family!("conj53", Conjecture, "irreducibility of R_n(x) and S_n(x) by a modular witness", "n <= 20, witnesses p < 500", run_conj53),
    family!("conj54", Conjecture, "integrality of normalized sums of R_k^2", "n <= 200", run_conj54),
    family!("conj54_p", Conjecture, "sums of R_k^2 modulo p^2", "odd p < 300", run_conj54_p),
    family!("conj55", Conjecture, "integrality of normalized (2k+1)-weighted sums of S_k", "n <= 200", run_conj55),
    family!("conj55_p", Conjecture, "(2k+1)-weighted sums of S_k modulo p^2", "p < 300", run_conj55_p),
    family!("conj56", Conjecture, "sums of s_k and the companion sequences divisible by n", "n <= 200", run_conj56),
    family!("remark53", Identity, "companion sums as integers", "n <= 200", run_remark53),
    family!("conj57", Conjecture, "[n]_q^2 divides (1+q) sum q^k s_k(q)", "n <= 25", run_conj57),
    family!("conj58i", Conjecture, "n divides sum_{k<n} S^(m)_k(x)", "m <= 4, n <= 60", run_conj58_i),
    family!("conj58ii", Conjecture, "[n]_q divides the q-analogue of sum S^(m)_k", "m <= 3, n <= 20", run_conj58_ii),
];

/// Every registered family, in listing order.
pub fn registry() -> &'static [Family] {
    FAMILIES
}

pub fn find(name: &str) -> Option<&'static Family> {
    FAMILIES.iter().find(|f| f.name == name)
}

/// Runs every family with default ranges, concatenated in registry order.
pub fn run_all(params: &Params) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for f in FAMILIES {
        out.extend(f.run(params)?);
    }
    Ok(out)
}

fn bound(value: Option<u64>, default: u64) -> u64 {
    value.unwrap_or(default)
}

fn missing(what: &str) -> Error {
    Error::Precondition(format!("missing parameter {what}"))
}

fn single_i64(list: &Option<Vec<i64>>, what: &str) -> Result<Option<i64>> {
    match list.as_deref() {
        None => Ok(None),
        Some([v]) => Ok(Some(*v)),
        Some(_) => Err(Error::Precondition(format!("{what} takes one value"))),
    }
}

fn single_u32(list: &Option<Vec<i64>>, what: &str) -> Result<Option<u32>> {
    single_i64(list, what)?
        .map(|v| u32::try_from(v).map_err(|_| Error::Precondition(format!("{what} must be >= 0"))))
        .transpose()
}

fn nonnegative(list: &[i64], what: &str) -> Result<Vec<u64>> {
    list.iter()
        .map(|&v| u64::try_from(v).map_err(|_| Error::Precondition(format!("{what} must be >= 0"))))
        .collect()
}

fn for_primes(primes: Vec<u64>, check: fn(u64) -> CheckResult) -> Vec<CheckResult> {
    primes.par_iter().map(|&p| check(p)).collect()
}

fn for_range(lo: u64, hi: u64, check: fn(u64) -> CheckResult) -> Vec<CheckResult> {
    (lo..=hi).into_par_iter().map(check).collect()
}

fn run_rec_r(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(vec![sequences::check_recurrence_r(
        bound(p.max_n.or(p.n), 200) + 3,
    )])
}

fn run_rec_r_poly(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(vec![sequences::check_recurrence_r_poly(
        bound(p.max_n.or(p.n), 100) + 3,
    )])
}

fn run_rec_s(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(vec![sequences::check_recurrence_s(
        bound(p.max_n.or(p.n), 200) + 3,
    )])
}

fn run_thm11(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.p {
        Some(q) => vec![check_thm11(q)],
        None => for_primes(odd_primes_below(bound(p.max_p, 2000)), check_thm11),
    })
}

fn run_thm12(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.p {
        Some(q) => vec![check_thm12(q)],
        None => for_primes(odd_primes_below(bound(p.max_p, 1000)), check_thm12),
    })
}

fn run_remark11(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(d)) = (p.n, p.d) {
        return Ok(vec![check_remark11(n, d)]);
    }
    let max_n = bound(p.max_n, 40);
    let jobs: Vec<(u64, u64)> = (0..=max_n)
        .flat_map(|n| (0..=n).map(move |d| (n, d)))
        .filter(|&(n, d)| p.n.is_none_or(|m| m == n) && p.d.is_none_or(|e| e == d))
        .collect();
    Ok(jobs
        .par_iter()
        .map(|&(n, d)| check_remark11(n, d))
        .collect())
}

fn run_thm13(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.p {
        Some(q) => vec![check_thm13(q)],
        None => scan_thm13(bound(p.max_p, 1000)),
    })
}

fn run_thm13_ii(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![check_thm13_ii(n)],
        None => for_range(1, bound(p.max_n, 500), check_thm13_ii),
    })
}

fn run_thm14_i(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![check_thm14_i(n)],
        None => scan_thm14_i(bound(p.max_n, 300)),
    })
}

fn run_thm14_ii(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.p {
        Some(q) => vec![check_thm14_ii(q)],
        None => scan_thm14_ii(bound(p.max_p, 500)),
    })
}

/// Multisets of size `1..=max_m` drawn from `[-max_a, max_a] \ {0}`, in
/// lexicographic order.
fn nonzero_multisets(max_m: u64, max_a: u64) -> Vec<Vec<i64>> {
    let values: Vec<i64> = (-(max_a as i64)..=max_a as i64)
        .filter(|&v| v != 0)
        .collect();
    let mut out = Vec::new();
    fn extend(
        values: &[i64],
        start: usize,
        left: u64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            extend(values, i, left - 1, cur, out);
            cur.pop();
        }
    }
    for m in 1..=max_m {
        extend(&values, 0, m, &mut Vec::new(), &mut out);
    }
    out
}

fn run_thm15_i(p: &Params) -> Result<Vec<CheckResult>> {
    let variants: Vec<ProductVariant> = match p.variant {
        Some(v) => vec![v],
        None => ProductVariant::ALL.to_vec(),
    };
    let lists = match &p.a {
        Some(a) => vec![a.clone()],
        None => nonzero_multisets(bound(p.max_m.or(p.m), 3), bound(p.max_a, 3)),
    };
    let ns: Vec<u64> = match p.n {
        Some(n) => vec![n],
        None => (1..=bound(p.max_n, 60)).collect(),
    };
    let mut jobs = Vec::new();
    for n in &ns {
        for a in &lists {
            for v in &variants {
                jobs.push((*n, a, *v));
            }
        }
    }
    Ok(jobs
        .par_iter()
        .map(|&(n, a, v)| check_thm15_i(n, a, v))
        .collect())
}

fn pair_jobs(p: &Params) -> Result<Vec<(u64, u32, u32)>> {
    let a = single_u32(&p.a, "a")?;
    let b = single_u32(&p.b, "b")?;
    let ns: Vec<u64> = match p.n {
        Some(n) => vec![n],
        None => (1..=bound(p.max_n, 60)).collect(),
    };
    let avals: Vec<u32> = match a {
        Some(a) => vec![a],
        None => (1..=bound(p.max_a, 3) as u32).collect(),
    };
    let bvals: Vec<u32> = match b {
        Some(b) => vec![b],
        None => (1..=bound(p.max_b, 3) as u32).collect(),
    };
    let mut jobs = Vec::new();
    for &n in &ns {
        for &a in &avals {
            for &b in &bvals {
                jobs.push((n, a, b));
            }
        }
    }
    Ok(jobs)
}

fn run_thm15_ii(p: &Params) -> Result<Vec<CheckResult>> {
    let jobs = pair_jobs(p)?;
    Ok(jobs
        .par_iter()
        .map(|&(n, a, b)| check_thm15_ii(n, a, b))
        .collect())
}

fn run_thm15_cross(p: &Params) -> Result<Vec<CheckResult>> {
    let jobs = pair_jobs(p)?;
    Ok(jobs
        .par_iter()
        .map(|&(n, a, b)| check_thm15_cross(n, a, b))
        .collect())
}

fn run_remark13(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![check_remark13(n)],
        None => for_range(1, bound(p.max_n, 200), check_remark13),
    })
}

fn run_cor11(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![check_cor11(n)],
        None => scan_cor11(bound(p.max_n, 150)),
    })
}

fn run_lemma22(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![check_lemma22(n)],
        None => for_range(0, bound(p.max_n, 50), check_lemma22),
    })
}

fn run_lemma23(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(k)) = (p.n, p.k) {
        return Ok(vec![check_lemma23(n, k)]);
    }
    let jobs: Vec<(u64, u64)> = (1..=bound(p.max_n, 50))
        .filter(|&n| p.n.is_none_or(|m| m == n))
        .flat_map(|n| (1..=n).map(move |k| (n, k)))
        .collect();
    Ok(jobs.par_iter().map(|&(n, k)| check_lemma23(n, k)).collect())
}

fn run_qlucas(p: &Params) -> Result<Vec<CheckResult>> {
    let a = single_i64(&p.a, "a")?;
    let b = single_i64(&p.b, "b")?;
    if let (Some(a), Some(b), Some(s), Some(t), Some(d)) = (a, b, p.s, p.t, p.d) {
        let a = nonnegative(&[a, b], "a, b")?;
        return Ok(vec![qalgebra::check_q_lucas(a[0], a[1], s, t, d)]);
    }
    let top = bound(p.max_n, 6);
    let mut jobs = Vec::new();
    for d in 2..=top {
        for a in 0..=top {
            for b in 0..=a {
                for s in 0..d {
                    for t in 0..d {
                        jobs.push((a, b, s, t, d));
                    }
                }
            }
        }
    }
    Ok(jobs
        .par_iter()
        .map(|&(a, b, s, t, d)| qalgebra::check_q_lucas(a, b, s, t, d))
        .collect())
}

fn run_lemma32(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(k)) = (p.n, p.k) {
        return Ok(vec![qalgebra::check_lemma32(n, k)]);
    }
    let jobs: Vec<(u64, u64)> = (1..=bound(p.max_n, 30))
        .filter(|&n| p.n.is_none_or(|m| m == n))
        .flat_map(|n| (0..n).filter(move |k| 2 * k + 1 < n).map(move |k| (n, k)))
        .collect();
    Ok(jobs
        .par_iter()
        .map(|&(n, k)| qalgebra::check_lemma32(n, k))
        .collect())
}

fn run_thm31(p: &Params) -> Result<Vec<CheckResult>> {
    match (p.n, p.k) {
        (Some(n), Some(k)) => Ok(vec![qalgebra::check_theorem31_q(n, k)]),
        (Some(n), None) => Ok((0..n).map(|k| qalgebra::check_theorem31_q(n, k)).collect()),
        _ => Ok(qalgebra::scan_theorem31_q(bound(p.max_n, 30))),
    }
}

fn run_thm32(p: &Params) -> Result<Vec<CheckResult>> {
    let a = single_u32(&p.a, "a")?;
    let b = single_u32(&p.b, "b")?;
    if let (Some(n), Some(a), Some(b)) = (p.n, a, b) {
        let a_prime = p.a_prime.unwrap_or(a as u64);
        return Ok(vec![qalgebra::check_theorem32_q(
            n, a as u64, b as u64, a_prime,
        )]);
    }
    let mut jobs = Vec::new();
    for n in 1..=bound(p.max_n, 20) {
        for a in 0..=bound(p.max_a, 2) {
            for b in 0..=bound(p.max_b, 2) {
                jobs.push((n, a, b, a));
                if a > 0 {
                    jobs.push((n, a, b, a - 1));
                }
            }
        }
    }
    Ok(jobs
        .par_iter()
        .map(|&(n, a, b, ap)| qalgebra::check_theorem32_q(n, a, b, ap))
        .collect())
}

/// Instances of the kernel-framework grid, generated serially from `seed`.
struct Grid {
    rng: ChaCha8Rng,
}

impl Grid {
    fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Grid { rng }
    }

    /// Common factor the generated `n`, `a_i`, `b_i` share, biased so the
    /// modulus `d` is often larger than 1.
    fn factor(&mut self) -> i64 {
        *[1i64, 1, 2, 2, 3, 4]
            .choose(&mut self.rng)
            .expect("nonempty")
    }

    fn n(&mut self, g: i64, max_n: u64) -> u64 {
        let top = (max_n as i64 / g).max(1);
        (self.rng.gen_range(1..=top) * g) as u64
    }

    fn m(&mut self, max_m: u64) -> usize {
        self.rng.gen_range(1..=max_m as usize)
    }

    fn a(&mut self, g: i64, max_a: u64) -> i64 {
        let top = max_a as i64 / g;
        self.rng.gen_range(-top..=top) * g
    }

    fn b(&mut self, g: i64, max_b: u64) -> u64 {
        let top = max_b as i64 / g;
        (self.rng.gen_range(0..=top) * g) as u64
    }

    fn kernel(&mut self, pool: &[KernelSpec]) -> KernelSpec {
        pool.choose(&mut self.rng)
            .expect("nonempty kernel pool")
            .clone()
    }
}

struct GridBounds {
    instances: u64,
    max_n: u64,
    max_m: u64,
    max_a: u64,
    max_b: u64,
    seed: u64,
}

fn grid_bounds(p: &Params, instances: u64) -> GridBounds {
    GridBounds {
        instances,
        max_n: bound(p.max_n, 40),
        max_m: bound(p.max_m, 3),
        max_a: bound(p.max_a, 4),
        max_b: bound(p.max_b, 3),
        seed: bound(p.seed, DEFAULT_SEED),
    }
}

fn kernels_with(hyp: KernelHypothesis) -> Vec<KernelSpec> {
    paper_kernels()
        .into_iter()
        .chain(power_kernels())
        .filter(|k| (1..=3).all(|m| k.require(hyp, 48, m).is_ok()))
        .collect()
}

fn require_kernel(p: &Params) -> Result<&KernelSpec> {
    p.kernel.as_ref().ok_or_else(|| missing("kernel"))
}

fn run_thm41(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(a), Some(b)) = (p.n, &p.a, &p.b) {
        return Ok(vec![check_thm41(
            n,
            require_kernel(p)?,
            a,
            &nonnegative(b, "b")?,
        )]);
    }
    let g = grid_bounds(p, 120);
    let pool = kernels_with(KernelHypothesis::PowerDivides(1));
    let mut grid = Grid::new(g.seed, 41);
    let jobs: Vec<_> = (0..g.instances)
        .map(|_| {
            let f = grid.factor();
            let m = grid.m(g.max_m);
            let n = grid.n(f, g.max_n);
            let a: Vec<i64> = (0..m).map(|_| grid.a(f, g.max_a)).collect();
            let b: Vec<u64> = (0..m).map(|_| grid.b(f, g.max_b)).collect();
            (n, grid.kernel(&pool), a, b)
        })
        .collect();
    Ok(jobs
        .par_iter()
        .map(|(n, k, a, b)| check_thm41(*n, k, a, b))
        .collect())
}

fn run_cor41(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(a), Some(b)) = (p.n, &p.a, &p.b) {
        return Ok(vec![check_cor41(n, a, &nonnegative(b, "b")?)]);
    }
    let g = grid_bounds(p, 100);
    let mut grid = Grid::new(g.seed, 141);
    let jobs: Vec<_> = (0..g.instances)
        .map(|_| {
            let f = grid.factor();
            let m = grid.m(g.max_m);
            let n = grid.n(f, g.max_n);
            let a: Vec<i64> = (0..m).map(|_| grid.a(f, g.max_a)).collect();
            let b: Vec<u64> = (0..m).map(|_| grid.b(f, g.max_b)).collect();
            (n, a, b)
        })
        .collect();
    Ok(jobs
        .par_iter()
        .map(|(n, a, b)| check_cor41(*n, a, b))
        .collect())
}

fn run_thm42(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(a)) = (p.n, &p.a) {
        return Ok(vec![check_thm42(n, require_kernel(p)?, a)]);
    }
    let g = grid_bounds(p, 100);
    let pool = kernels_with(KernelHypothesis::PowerDivides(3));
    let mut grid = Grid::new(g.seed, 42);
    let jobs: Vec<_> = (0..g.instances)
        .map(|_| {
            let m = grid.m(g.max_m);
            let n = grid.n(1, g.max_n);
            let a: Vec<i64> = (0..m).map(|_| grid.a(1, g.max_a)).collect();
            (n, grid.kernel(&pool), a)
        })
        .collect();
    Ok(jobs
        .par_iter()
        .map(|(n, k, a)| check_thm42(*n, k, a))
        .collect())
}

fn run_lemma41(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![check_lemma41(n)],
        None => for_range(1, bound(p.max_n, 60), check_lemma41),
    })
}

fn run_thm43(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(a)) = (p.n, &p.a) {
        let strength = p.strength.unwrap_or(Strength::Integral);
        return Ok(vec![check_thm43(n, require_kernel(p)?, a, strength)]);
    }
    let g = grid_bounds(p, 120);
    let integral = kernels_with(KernelHypothesis::CentralIntegral);
    let over_n = kernels_with(KernelHypothesis::CentralMultipleOfK);
    let mut grid = Grid::new(g.seed, 43);
    let jobs: Vec<_> = (0..g.instances)
        .map(|i| {
            let strength = if i % 2 == 0 {
                Strength::Integral
            } else {
                Strength::OverN
            };
            let pool = if strength == Strength::Integral {
                &integral
            } else {
                &over_n
            };
            let m = grid.m(g.max_m);
            let n = grid.n(1, g.max_n);
            let mut a: Vec<i64> = (0..m)
                .map(|_| grid.rng.gen_range(1..=g.max_a as i64))
                .collect();
            let one = grid.rng.gen_range(0..m);
            a[one] = 1;
            (n, grid.kernel(pool), a, strength)
        })
        .collect();
    Ok(jobs
        .par_iter()
        .map(|(n, k, a, s)| check_thm43(*n, k, a, *s))
        .collect())
}

fn run_thm44(p: &Params) -> Result<Vec<CheckResult>> {
    let a = single_u32(&p.a, "a")?;
    let b = single_u32(&p.b, "b")?;
    if let (Some(n), Some(a), Some(b)) = (p.n, a, b) {
        return Ok(vec![check_thm44(n, a, b, require_kernel(p)?)]);
    }
    let g = grid_bounds(p, 100);
    let pool = kernels_with(KernelHypothesis::CentralIntegral);
    let mut grid = Grid::new(g.seed, 44);
    let jobs: Vec<_> = (0..g.instances)
        .map(|_| {
            let n = grid.n(1, g.max_n);
            let a = grid.rng.gen_range(1..=g.max_a as u32);
            let b = grid.rng.gen_range(1..=g.max_a as u32);
            (n, a, b, grid.kernel(&pool))
        })
        .collect();
    Ok(jobs
        .par_iter()
        .map(|(n, a, b, k)| check_thm44(*n, *a, *b, k))
        .collect())
}

fn run_lemma42(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(n), Some(seq)) = (p.n, &p.a_seq) {
        return Ok(vec![check_lemma42(n, seq)]);
    }
    let g = grid_bounds(p, 80);
    let mut grid = Grid::new(g.seed, 142);
    let jobs: Vec<_> = (0..g.instances)
        .map(|_| {
            let n = grid.n(1, g.max_n);
            let seq: Vec<BigRational> = (0..n)
                .map(|_| {
                    BigRational::new(
                        BigInt::from(grid.rng.gen_range(-9i64..=9)),
                        BigInt::from(grid.rng.gen_range(1i64..=5)),
                    )
                })
                .collect();
            (n, seq)
        })
        .collect();
    Ok(jobs.par_iter().map(|(n, s)| check_lemma42(*n, s)).collect())
}

fn run_remark52(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![check_remark52(n)],
        None => for_range(1, bound(p.max_n, 50), check_remark52),
    })
}

fn run_conj51(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.p {
        Some(q) => vec![conjectures::check_conj51(q)],
        None => conjectures::scan_conj51(bound(p.max_p, 1000)),
    })
}

fn growth(p: &Params) -> Result<Option<Growth>> {
    match p.seq.as_deref() {
        None => Ok(None),
        Some("R") => Ok(Some(Growth::R)),
        Some("S") => Ok(Some(Growth::S)),
        Some(other) => Err(Error::Precondition(format!(
            "unknown sequence '{other}', expected R or S"
        ))),
    }
}

fn run_conj52(p: &Params) -> Result<Vec<CheckResult>> {
    let seq = growth(p)?;
    if let Some(n) = p.n {
        let seq = seq.ok_or_else(|| missing("seq"))?;
        let values = match seq {
            Growth::R => sequences::r_numbers(n + 2),
            Growth::S => sequences::s_numbers(n + 2),
        };
        return Ok(vec![conjectures::check_conj52(seq, n, &values)]);
    }
    let all = conjectures::scan_conj52(bound(p.max_n, 1000));
    Ok(match seq {
        Some(s) => all
            .into_iter()
            .filter(|r| r.params.get("seq").map(String::as_str) == Some(s.name()))
            .collect(),
        None => all,
    })
}

fn run_conj53(p: &Params) -> Result<Vec<CheckResult>> {
    let max_p = bound(p.max_p, 500);
    if let Some(n) = p.n {
        let seq = growth(p)?.ok_or_else(|| missing("seq"))?;
        return Ok(vec![conjectures::conj53_witness(
            seq,
            n,
            &primes_below(max_p),
        )]);
    }
    Ok(conjectures::scan_conj53(bound(p.max_n, 20), max_p))
}

fn run_conj54(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![conjectures::check_conj54(n)],
        None => conjectures::scan_conj54(bound(p.max_n, 200)),
    })
}

fn run_conj54_p(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.p {
        Some(q) => vec![conjectures::check_conj54_p(q)],
        None => conjectures::scan_conj54_p(bound(p.max_p, 300)),
    })
}

fn run_conj55(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![conjectures::check_conj55(n)],
        None => conjectures::scan_conj55(bound(p.max_n, 200)),
    })
}

fn run_conj55_p(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.p {
        Some(q) => vec![conjectures::check_conj55_p(q)],
        None => conjectures::scan_conj55_p(bound(p.max_p, 300)),
    })
}

fn run_conj56(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![conjectures::check_conj56(n)],
        None => conjectures::scan_conj56(bound(p.max_n, 200)),
    })
}

fn run_remark53(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![conjectures::check_remark53(n)],
        None => conjectures::scan_remark53(bound(p.max_n, 200)),
    })
}

fn run_conj57(p: &Params) -> Result<Vec<CheckResult>> {
    Ok(match p.n {
        Some(n) => vec![qalgebra::check_conj57(n)],
        None => qalgebra::scan_conj57(bound(p.max_n, 25)),
    })
}

fn run_conj58_i(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(m), Some(n)) = (p.m, p.n) {
        return Ok(vec![conjectures::check_conj58_i(m as u32, n)]);
    }
    let all = conjectures::scan_conj58_i(bound(p.max_m, 4) as u32, bound(p.max_n, 60));
    Ok(filter_m(all, p.m))
}

fn run_conj58_ii(p: &Params) -> Result<Vec<CheckResult>> {
    if let (Some(m), Some(n)) = (p.m, p.n) {
        return Ok(vec![qalgebra::check_conj58_q(m, n)]);
    }
    let jobs: Vec<(u64, u64)> = (1..=bound(p.max_m, 3))
        .filter(|&m| p.m.is_none_or(|x| x == m))
        .flat_map(|m| (1..=bound(p.max_n, 20)).map(move |n| (m, n)))
        .collect();
    Ok(jobs
        .par_iter()
        .map(|&(m, n)| qalgebra::check_conj58_q(m, n))
        .collect())
}

fn filter_m(results: Vec<CheckResult>, m: Option<u64>) -> Vec<CheckResult> {
    match m {
        None => results,
        Some(m) => {
            let m = m.to_string();
            results
                .into_iter()
                .filter(|r| r.params.get("m") == Some(&m))
                .collect()
        }
    }
}

/// Compares parameter values numerically when both parse as integers.
fn compare_values(a: &str, b: &str) -> Ordering {
    match (a.parse::<i128>(), b.parse::<i128>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

/// Canonical report order: by family, then by parameters (keys in
/// alphabetical order, integer values numerically). The sort is stable, so
/// results with equal parameters keep their generation order.
pub fn canonical_sort(results: &mut [CheckResult]) {
    results.sort_by(|x, y| {
        x.family.cmp(&y.family).then_with(|| {
            let mut xi = x.params.iter();
            let mut yi = y.params.iter();
            loop {
                match (xi.next(), yi.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((xk, xv)), Some((yk, yv))) => {
                        let c = xk.cmp(yk).then_with(|| compare_values(xv, yv));
                        if c != Ordering::Equal {
                            return c;
                        }
                    }
                }
            }
        })
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn registry_is_large_and_unique() {
        assert!(registry().len() >= 25);
        let names: HashSet<_> = registry().iter().map(|f| f.name).collect();
        assert_eq!(names.len(), registry().len());
        for name in ["thm11", "thm12", "conj57", "conj58ii", "qlucas"] {
            assert!(find(name).is_some(), "{name}");
        }
    }

    #[test]
    fn single_instances() {
        let r = find("thm13")
            .unwrap()
            .run(&Params {
                p: Some(3),
                ..Default::default()
            })
            .unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].passed());
        let r = find("conj54")
            .unwrap()
            .run(&Params {
                max_n: Some(50),
                ..Default::default()
            })
            .unwrap();
        assert_eq!(r.len(), 50);
    }

    #[test]
    fn multisets_count() {
        // 6 + 21 + 56 multisets of sizes 1..=3 from six values.
        assert_eq!(nonzero_multisets(3, 3).len(), 83);
    }

    #[test]
    fn grid_is_deterministic_and_large_enough() {
        let names = ["thm41", "cor41", "thm42", "thm43", "thm44", "lemma42"];
        let params = Params {
            max_n: Some(12),
            ..Default::default()
        };
        let mut total = 0;
        for name in names {
            let first = find(name).unwrap().run(&params).unwrap();
            let second = find(name).unwrap().run(&params).unwrap();
            assert_eq!(first, second, "{name}");
            assert!(first.iter().all(CheckResult::passed), "{name}");
            total += first.len();
        }
        assert!(total >= 500);
    }

    #[test]
    fn kernel_pools_match_hypotheses() {
        assert_eq!(kernels_with(KernelHypothesis::PowerDivides(3)).len(), 3);
        assert!(kernels_with(KernelHypothesis::CentralMultipleOfK).len() >= 4);
        assert!(kernels_with(KernelHypothesis::CentralIntegral).len() >= 10);
    }

    #[test]
    fn canonical_sort_is_numeric() {
        let mut v: Vec<CheckResult> = [10u64, 2, 1]
            .iter()
            .map(|&n| CheckResult::new("x").param("n", n))
            .collect();
        canonical_sort(&mut v);
        let order: Vec<_> = v.iter().map(|r| r.params["n"].clone()).collect();
        assert_eq!(order, ["1", "2", "10"]);
    }
}
