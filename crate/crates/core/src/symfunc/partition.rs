use std::fmt;
use std::str::FromStr;

use super::SymError;

/// A weakly decreasing sequence of non-negative integers. Trailing zeros are
/// significant: the length fixes the number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SymError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn zeros(len: usize) -> Self {
        Partition(vec![0; len])
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// λ_j + ℓ − j for j = 1..ℓ: the exponents of the shifted Vandermonde.
    pub fn shifted_exponents(&self) -> Vec<u32> {
        let l = self.len();
        self.0.iter().enumerate().map(|(j, &p)| p + (l - 1 - j) as u32).collect()
    }

    /// Sum of the `k` largest parts.
    pub fn partial_weight(&self, k: usize) -> u32 {
        self.0.iter().take(k).sum()
    }

    /// (λ_1, …, λ_k, μ_1, …, μ_h); requires λ_k ≥ μ_1.
    pub fn concat(&self, other: &Partition) -> Result<Partition, SymError> {
        if let (Some(&last), Some(&first)) = (self.0.last(), other.0.first()) {
            if last < first {
                return Err(SymError::BadConcat { last, first });
            }
        }
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Ok(Partition(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| SymError::Parse(p.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// (n, ℓ, ℓ′) with n ≥ 1 and 0 ≤ ℓ′ ≤ ℓ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseParams {
    n: u32,
    l: u32,
    lp: u32,
}

impl StaircaseParams {
    pub fn new(n: u32, l: u32, lp: u32) -> Result<Self, SymError> {
        if n == 0 || lp > l {
            return Err(SymError::BadParams(format!("need n >= 1 and 0 <= l' <= l, got (n={n}, l={l}, l'={lp})")));
        }
        Ok(StaircaseParams { n, l, lp })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn lp(&self) -> u32 {
        self.lp
    }
}

impl fmt::Display for StaircaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},l={},lp={}", self.n, self.l, self.lp)
    }
}

/// λ_{n,ℓ,ℓ′}: parts (n−j)ℓ+ℓ′, (n−j)ℓ for j = 1..n.
pub fn two_staircase(p: StaircaseParams) -> Partition {
    let mut parts = Vec::with_capacity(2 * p.n as usize);
    for j in 1..=p.n {
        parts.push((p.n - j) * p.l + p.lp);
        parts.push((p.n - j) * p.l);
    }
    Partition(parts)
}

/// μ_{n,ℓ} = ((n−1)ℓ, …, ℓ, 0).
pub fn staircase(n: usize, l: u32) -> Partition {
    Partition((1..=n).map(|j| (n - j) as u32 * l).collect())
}

/// λ(N, m, ℓ, λ′): the part at position N−i, with i = am+b and 0 ≤ b < m,
/// is aℓ + λ′_{m−b} (λ′_m when b = 0). Needs λ′_1 − λ′_m ≤ ℓ.
pub fn m_staircase(big_n: usize, m: usize, l: u32, lambda_prime: &Partition) -> Result<Partition, SymError> {
    if m == 0 || lambda_prime.len() != m {
        return Err(SymError::BadParams(format!("λ' must have length m = {m}")));
    }
    let lp = lambda_prime.parts();
    if lp[0] - lp[m - 1] > l {
        return Err(SymError::BadParams(format!("λ'_1 − λ'_m = {} exceeds ℓ = {l}", lp[0] - lp[m - 1])));
    }
    let mut parts = vec![0u32; big_n];
    for i in 0..big_n {
        let (a, b) = (i / m, i % m);
        // λ′_{m−b} is lp[m−b−1]; b = 0 reads λ′_m
        parts[big_n - 1 - i] = a as u32 * l + lp[m - 1 - b];
    }
    Partition::new(parts)
}
