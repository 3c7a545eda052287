//! Root-system data for the simple Lie types in Bourbaki numbering.
//!
//! Everything downstream (dimensions, Fano indices, Table-style invariants)
//! is computed from two primitives defined here: the Cartan matrix of a
//! [`LieType`] and its full list of positive roots in simple-root
//! coordinates. Positive roots are generated by root-string closure rather
//! than transcribed from tables; the classical cardinalities serve only as
//! test assertions.
//!
//! Conventions (Bourbaki):
//! - `B_n`: node `n` short; `C_n`: node `n` long;
//! - `G_2`: node 1 short, node 2 long;
//! - `F_4`: nodes 1, 2 long, nodes 3, 4 short;
//! - Cartan entry `A[j][k] = ⟨α_j, α_k^∨⟩ = 2(α_j, α_k)/(α_k, α_k)`.
//!
//! Node indices are 1-based throughout, matching the numbering used to name
//! fundamental weights.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Default bound on the rank accepted by [`LieType::new`]; override with the
/// `HOROFANO_MAX_RANK` environment variable (read once per process).
pub const DEFAULT_MAX_RANK: usize = 64;

/// Effective rank cap for this process. Overrides are clamped to
/// `1..=10_000`; beyond that the root enumeration itself is intractable.
pub fn max_rank() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("HOROFANO_MAX_RANK")
            .ok()
            .and_then(|s| s.parse().ok())
            .map(|cap: usize| cap.clamp(1, 10_000))
            .unwrap_or(DEFAULT_MAX_RANK)
    })
}

/// The seven series of simple Lie types.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        match c {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    /// Smallest rank for which the series names a simple type without
    /// coinciding with an earlier one.
    pub fn min_rank(self) -> usize {
        match self {
            Series::A => 1,
            Series::B | Series::C => 2,
            Series::D => 4,
            Series::E => 6,
            Series::F => 4,
            Series::G => 2,
        }
    }

    fn rank_valid(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated simple Lie type, e.g. `B3` or `E8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if !series.rank_valid(rank) {
            return Err(Error::domain(format!(
                "rank {rank} is not valid for series {series}"
            )));
        }
        if rank > max_rank() {
            return Err(Error::domain(format!(
                "rank {rank} exceeds the configured cap {}",
                max_rank()
            )));
        }
        Ok(LieType { series, rank })
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::parse(format!("expected a series letter A-G in `{s}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::parse(format!("expected a rank after `{series}` in `{s}`")))?;
        LieType::new(series, rank)
    }
}

/// Bourbaki Cartan matrix, stored row-major with 1-based accessors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    fn bourbaki(t: LieType) -> Self {
        let n = t.rank();
        let mut m = CartanMatrix {
            rank: n,
            entries: vec![0; n * n],
        };
        for i in 1..=n {
            m.set(i, i, 2);
        }
        let simple_edge = |m: &mut CartanMatrix, i: usize, j: usize| {
            m.set(i, j, -1);
            m.set(j, i, -1);
        };
        match t.series() {
            Series::A => {
                for i in 1..n {
                    simple_edge(&mut m, i, i + 1);
                }
            }
            Series::B => {
                for i in 1..n - 1 {
                    simple_edge(&mut m, i, i + 1);
                }
                // node n short: ⟨α_{n-1}, α_n^∨⟩ = -2
                m.set(n - 1, n, -2);
                m.set(n, n - 1, -1);
            }
            Series::C => {
                for i in 1..n - 1 {
                    simple_edge(&mut m, i, i + 1);
                }
                // node n long: ⟨α_n, α_{n-1}^∨⟩ = -2
                m.set(n - 1, n, -1);
                m.set(n, n - 1, -2);
            }
            Series::D => {
                for i in 1..n - 2 {
                    simple_edge(&mut m, i, i + 1);
                }
                simple_edge(&mut m, n - 2, n - 1);
                simple_edge(&mut m, n - 2, n);
            }
            Series::E => {
                simple_edge(&mut m, 1, 3);
                simple_edge(&mut m, 3, 4);
                simple_edge(&mut m, 2, 4);
                simple_edge(&mut m, 4, 5);
                simple_edge(&mut m, 5, 6);
                if n >= 7 {
                    simple_edge(&mut m, 6, 7);
                }
                if n == 8 {
                    simple_edge(&mut m, 7, 8);
                }
            }
            Series::F => {
                simple_edge(&mut m, 1, 2);
                m.set(2, 3, -2);
                m.set(3, 2, -1);
                simple_edge(&mut m, 3, 4);
            }
            Series::G => {
                m.set(1, 2, -1);
                m.set(2, 1, -3);
            }
        }
        m
    }

    fn set(&mut self, j: usize, k: usize, v: i64) {
        self.entries[(j - 1) * self.rank + (k - 1)] = v;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `A[j][k] = ⟨α_j, α_k^∨⟩`, 1-based.
    pub fn entry(&self, j: usize, k: usize) -> i64 {
        assert!(
            (1..=self.rank).contains(&j) && (1..=self.rank).contains(&k),
            "Cartan index out of range"
        );
        self.entries[(j - 1) * self.rank + (k - 1)]
    }

    /// Row `j` as a slice: the pairing vector of the simple root `α_j`.
    pub fn row(&self, j: usize) -> &[i64] {
        assert!((1..=self.rank).contains(&j), "Cartan index out of range");
        &self.entries[(j - 1) * self.rank..j * self.rank]
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.rank {
            for k in 1..=self.rank {
                if k > 1 {
                    write!(f, " ")?;
                }
                write!(f, "{:>2}", self.entry(j, k))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A positive root as a non-negative integer vector over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PositiveRoot {
    coeffs: Vec<i64>,
}

impl PositiveRoot {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("a root needs at least one coefficient"));
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::domain("positive-root coefficients must be ≥ 0"));
        }
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::domain("the zero vector is not a root"));
        }
        Ok(PositiveRoot { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient on the simple root `α_k`, 1-based.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs[k - 1]
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A fully generated root system: Cartan matrix plus all positive roots in
/// canonical order (height, then lexicographic on coefficients), with the
/// pairing vector `⟨β, α_k^∨⟩` precomputed for every root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: CartanMatrix,
    roots: Vec<PositiveRoot>,
    pairings: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(t: LieType) -> Self {
        let cartan = CartanMatrix::bourbaki(t);
        let (roots, pairings) = generate_positive_roots(&cartan);
        RootSystem {
            lie_type: t,
            cartan,
            roots,
            pairings,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.roots
    }

    /// Pairing vector of the `i`-th positive root (same order as
    /// [`Self::positive_roots`]); entry `k-1` holds `⟨β_i, α_k^∨⟩`.
    pub fn pairing_row(&self, i: usize) -> &[i64] {
        &self.pairings[i]
    }

    /// `⟨β, α_k^∨⟩` for an arbitrary coefficient vector of the right length.
    pub fn pairing(&self, beta: &PositiveRoot, k: usize) -> Result<i64> {
        pairing_with_cartan(&self.cartan, beta, k)
    }
}

fn pairing_with_cartan(cartan: &CartanMatrix, beta: &PositiveRoot, k: usize) -> Result<i64> {
    let n = cartan.rank();
    if !(1..=n).contains(&k) {
        return Err(Error::domain(format!(
            "node index {k} out of range 1..={n}"
        )));
    }
    if beta.coeffs().len() != n {
        return Err(Error::domain(format!(
            "root has {} coefficients but the type has rank {n}",
            beta.coeffs().len()
        )));
    }
    Ok(beta
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, &c)| c * cartan.entry(j + 1, k))
        .sum())
}

/// Root-string closure from the simple roots. For each known root `β` and
/// simple root `α_k`, `β + α_k` is a root iff `q = p − ⟨β, α_k^∨⟩ > 0`,
/// where `p` is the largest integer with `β − p·α_k` a root. Processing by
/// height guarantees the downward string is fully known when needed.
fn generate_positive_roots(cartan: &CartanMatrix) -> (Vec<PositiveRoot>, Vec<Vec<i64>>) {
    let n = cartan.rank();
    let mut coeffs: Vec<Vec<i64>> = Vec::new();
    let mut pairings: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();

    for k in 0..n {
        let mut root = vec![0i64; n];
        root[k] = 1;
        seen.insert(root.clone(), coeffs.len());
        coeffs.push(root);
        pairings.push(cartan.row(k + 1).to_vec());
    }

    let mut frontier: Vec<usize> = (0..n).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for k in 0..n {
                let mut p = 0i64;
                let mut down = coeffs[i].clone();
                loop {
                    down[k] -= 1;
                    if down[k] < 0 || !seen.contains_key(&down) {
                        break;
                    }
                    p += 1;
                }
                let q = p - pairings[i][k];
                if q > 0 {
                    let mut up = coeffs[i].clone();
                    up[k] += 1;
                    if !seen.contains_key(&up) {
                        let mut pairing = pairings[i].clone();
                        for (v, a) in pairing.iter_mut().zip(cartan.row(k + 1)) {
                            *v += a;
                        }
                        seen.insert(up.clone(), coeffs.len());
                        next.push(coeffs.len());
                        coeffs.push(up);
                        pairings.push(pairing);
                    }
                }
            }
        }
        frontier = next;
    }

    let mut order: Vec<usize> = (0..coeffs.len()).collect();
    order.sort_by_key(|&i| (coeffs[i].iter().sum::<i64>(), coeffs[i].clone()));
    let roots = order
        .iter()
        .map(|&i| PositiveRoot {
            coeffs: coeffs[i].clone(),
        })
        .collect();
    let pairings = order.iter().map(|&i| pairings[i].clone()).collect();
    (roots, pairings)
}

/// Memoized accessor; the cache is synchronized and observationally
/// transparent. Heavy consumers (sweeps) should prefer this over the free
/// functions below.
pub fn shared(t: LieType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<LieType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("root-system cache poisoned");
    guard
        .entry(t)
        .or_insert_with(|| Arc::new(RootSystem::new(t)))
        .clone()
}

/// The Bourbaki Cartan matrix of `t`.
pub fn cartan_matrix(t: LieType) -> CartanMatrix {
    shared(t).cartan().clone()
}

/// Every positive root of `t` exactly once, graded by height with
/// lexicographic tie-break; deterministic.
pub fn positive_roots(t: LieType) -> Vec<PositiveRoot> {
    shared(t).positive_roots().to_vec()
}

/// `⟨β, α_k^∨⟩ = Σ_j β_j · A[j][k]`.
pub fn pairing(t: LieType, beta: &PositiveRoot, k: usize) -> Result<i64> {
    pairing_with_cartan(shared(t).cartan(), beta, k)
}
