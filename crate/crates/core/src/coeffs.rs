//! Exact Fourier coefficients of the partial products
//! `P_n(z) = (1 - z)(1 - z^2)...(1 - z^n)` and `Q_n(z) = (1 + z)(1 + z^2)...(1 + z^n)`,
//! together with brute-force partition oracles used to cross-check them.
//!
//! The coefficient of `z^j` in `Q_n` counts partitions of `j` into distinct
//! parts each at most `n`; the coefficient in `P_n` is the number of such
//! partitions with an even number of parts minus those with an odd number.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which of the two products a table or norm refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    /// Product of `1 - z^k`.
    P,
    /// Product of `1 + z^k`.
    Q,
}

impl Kind {
    fn factor_sign(self) -> i32 {
        match self {
            Kind::P => -1,
            Kind::Q => 1,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::P => "P",
            Kind::Q => "Q",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Kind::P),
            "Q" | "q" => Ok(Kind::Q),
            other => Err(Error::InvalidInput(format!("unknown product kind `{other}`"))),
        }
    }
}

/// Polynomial degree `n(n+1)/2` of both products.
pub fn degree(n: u32) -> usize {
    let n = n as usize;
    n * (n + 1) / 2
}

/// Size limits for coefficient construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoeffLimits {
    /// Largest admissible degree `N`.
    pub max_degree: usize,
}

impl CoeffLimits {
    pub const DEFAULT_MAX_DEGREE: usize = 200_028; // N at n = 632

    fn check(&self, n: u32) -> Result<()> {
        let degree = degree(n);
        if degree > self.max_degree {
            return Err(Error::ResourceLimit {
                degree,
                cap: self.max_degree,
            });
        }
        Ok(())
    }
}

impl Default for CoeffLimits {
    fn default() -> Self {
        Self {
            max_degree: Self::DEFAULT_MAX_DEGREE,
        }
    }
}

/// Dense exact coefficient vector of `P_n` or `Q_n`, indexed `0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    kind: Kind,
    n: u32,
    coeffs: Vec<BigInt>,
}

impl CoefficientTable {
    /// The empty product (`n = 0`), the starting point of every sweep.
    fn unit(kind: Kind) -> Self {
        Self {
            kind,
            n: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a table from raw parts, checking only that the length is `N + 1`.
    pub fn from_parts(kind: Kind, n: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        if coeffs.len() != degree(n) + 1 {
            return Err(Error::InvalidInput(format!(
                "expected {} coefficients for n = {n}, got {}",
                degree(n) + 1,
                coeffs.len()
            )));
        }
        Ok(Self { kind, n, coeffs })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Degree `N = n(n+1)/2`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^j`; zero outside `0..=N`.
    pub fn get(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Largest absolute coefficient and the first index attaining it.
    pub fn max_abs(&self) -> (BigInt, usize) {
        let mut best = BigInt::zero();
        let mut at = 0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let a = c.abs();
            if a > best {
                best = a;
                at = j;
            }
        }
        (best, at)
    }

    /// `coeffs[N - j] = s * coeffs[j]` with `s = (-1)^n` for `P` and `s = 1` for `Q`.
    pub fn has_reversal_symmetry(&self) -> bool {
        let flip = self.kind == Kind::P && self.n % 2 == 1;
        let half = self.coeffs.len() / 2;
        self.coeffs[..half]
            .iter()
            .zip(self.coeffs.iter().rev())
            .all(|(a, b)| if flip { *a == -b } else { a == b })
    }

    /// Nondecreasing up to some index and nonincreasing after it.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut j = 1;
        while j < c.len() && c[j - 1] <= c[j] {
            j += 1;
        }
        while j < c.len() && c[j - 1] >= c[j] {
            j += 1;
        }
        j == c.len()
    }

    /// Checks `coeffs[0] = 1` and the sum rule (`0` for `P`, `2^n` for `Q`).
    /// Returns the name of the first violated invariant.
    pub fn check_cheap_invariants(&self) -> std::result::Result<(), &'static str> {
        if !self.coeffs[0].is_one() {
            return Err("leading coefficient is not 1");
        }
        let expected = match self.kind {
            Kind::P => BigInt::zero(),
            Kind::Q => BigInt::one() << self.n as usize,
        };
        if self.sum() != expected {
            return Err(match self.kind {
                Kind::P => "coefficient sum is not 0",
                Kind::Q => "coefficient sum is not 2^n",
            });
        }
        Ok(())
    }

    /// Multiplies in place by `1 - z^k` (kind P) or `1 + z^k` (kind Q), `k = n + 1`.
    fn multiply_next_factor(&mut self) {
        let k = self.n as usize + 1;
        let old_len = self.coeffs.len();
        self.coeffs.resize(old_len + k, BigInt::zero());
        let subtract = self.kind.factor_sign() < 0;
        // Backward sweep so that each source coefficient is read before it is updated.
        for j in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(j);
            let src = &lo[j - k];
            if src.is_zero() {
                continue;
            }
            if subtract {
                hi[0] -= src;
            } else {
                hi[0] += src;
            }
        }
        self.n += 1;
    }
}

/// Incremental builder yielding the tables for `n = 1, 2, 3, ...` in turn.
///
/// Building every table up to `n` costs the same as building the last one.
#[derive(Debug, Clone)]
pub struct CoefficientSweep {
    table: CoefficientTable,
    limits: CoeffLimits,
}

impl CoefficientSweep {
    pub fn new(kind: Kind) -> Self {
        Self::with_limits(kind, CoeffLimits::default())
    }

    pub fn with_limits(kind: Kind, limits: CoeffLimits) -> Self {
        Self {
            table: CoefficientTable::unit(kind),
            limits,
        }
    }

    /// Index of the table currently held (0 before the first advance).
    pub fn n(&self) -> u32 {
        self.table.n
    }

    /// Multiplies in the next factor and returns the new table.
    pub fn advance(&mut self) -> Result<&CoefficientTable> {
        self.limits.check(self.table.n + 1)?;
        self.table.multiply_next_factor();
        Ok(&self.table)
    }

    /// Advances until the held table is for `n`.
    pub fn advance_to(&mut self, n: u32) -> Result<&CoefficientTable> {
        if n < self.table.n || n == 0 {
            return Err(Error::InvalidInput(format!(
                "cannot move sweep from n = {} to n = {n}",
                self.table.n
            )));
        }
        self.limits.check(n)?;
        while self.table.n < n {
            self.table.multiply_next_factor();
        }
        Ok(&self.table)
    }

    pub fn into_table(self) -> CoefficientTable {
        self.table
    }
}

/// Coefficients of `P_n` or `Q_n` under explicit limits.
pub fn coefficients(kind: Kind, n: u32, limits: CoeffLimits) -> Result<CoefficientTable> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut sweep = CoefficientSweep::with_limits(kind, limits);
    sweep.advance_to(n)?;
    Ok(sweep.into_table())
}

/// Coefficients of `P_n = prod (1 - z^k)`.
pub fn pn_coefficients(n: u32) -> Result<CoefficientTable> {
    coefficients(Kind::P, n, CoeffLimits::default())
}

/// Coefficients of `Q_n = prod (1 + z^k)`.
pub fn qn_coefficients(n: u32) -> Result<CoefficientTable> {
    coefficients(Kind::Q, n, CoeffLimits::default())
}

/// Number of indices with a nonzero coefficient.
pub fn nonzero_count(table: &CoefficientTable) -> usize {
    table.coeffs.iter().filter(|c| !c.is_zero()).count()
}

/// Entry `m` is `(-1)^k` when `m = k(3k-1)/2` for some integer `k`, else 0.
pub fn pentagonal_series_prefix(limit: usize) -> Vec<i64> {
    let mut out = vec![0i64; limit + 1];
    out[0] = 1;
    for k in 1usize.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let plus = k * (3 * k - 1) / 2;
        if plus > limit {
            break;
        }
        out[plus] = sign;
        let minus = k * (3 * k + 1) / 2;
        if minus <= limit {
            out[minus] = sign;
        }
    }
    out
}

/// Largest `n` the enumeration oracles accept.
pub const ORACLE_CAP: u32 = 25;

fn check_oracle(j: usize, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if n > ORACLE_CAP {
        return Err(Error::OracleScaleExceeded { n, cap: ORACLE_CAP });
    }
    if j > degree(n) {
        return Err(Error::InvalidInput(format!(
            "j = {j} exceeds the degree {} for n = {n}",
            degree(n)
        )));
    }
    Ok(())
}

/// Counts subsets of `{1..=largest}` summing to `target`, split by parity of size.
fn count_subsets(target: usize, largest: usize, odd_size: bool, acc: &mut (u64, u64)) {
    if target == 0 {
        if odd_size {
            acc.1 += 1;
        } else {
            acc.0 += 1;
        }
        return;
    }
    if largest * (largest + 1) / 2 < target {
        return;
    }
    for part in (1..=largest.min(target)).rev() {
        count_subsets(target - part, part - 1, !odd_size, acc);
    }
}

/// Partitions of `j` into distinct parts each at most `n`, with an even
/// and an odd number of parts, by direct enumeration.
pub fn even_odd_distinct_counts_oracle(j: usize, n: u32) -> Result<(u64, u64)> {
    check_oracle(j, n)?;
    let mut acc = (0, 0);
    count_subsets(j, n as usize, false, &mut acc);
    Ok(acc)
}

/// Partitions of `j` into distinct parts each at most `n`, by direct enumeration.
pub fn distinct_partition_count_oracle(j: usize, n: u32) -> Result<u64> {
    let (even, odd) = even_odd_distinct_counts_oracle(j, n)?;
    Ok(even + odd)
}

/// Even/odd counts for every `j` at once, visiting all `2^n` subsets of `{1..=n}`.
pub fn distinct_partition_census(n: u32) -> Result<(Vec<u64>, Vec<u64>)> {
    check_oracle(0, n)?;
    fn visit(next: usize, n: usize, sum: usize, odd: bool, even_c: &mut [u64], odd_c: &mut [u64]) {
        if next > n {
            if odd {
                odd_c[sum] += 1;
            } else {
                even_c[sum] += 1;
            }
            return;
        }
        visit(next + 1, n, sum, odd, even_c, odd_c);
        visit(next + 1, n, sum + next, !odd, even_c, odd_c);
    }
    let len = degree(n) + 1;
    let mut even = vec![0u64; len];
    let mut odd = vec![0u64; len];
    visit(1, n as usize, 0, false, &mut even, &mut odd);
    Ok((even, odd))
}
