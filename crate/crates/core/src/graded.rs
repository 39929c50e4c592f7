//! Graded abelian groups and Poincaré polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// A finitely generated abelian group `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_s`, with
/// `t₁ | t₂ | … | t_s` and every `tᵢ > 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Builds a group from arbitrary cyclic torsion orders, normalizing to
    /// invariant factors. Orders `0` and `1` are dropped.
    pub fn new(rank: usize, torsion: impl IntoIterator<Item = u64>) -> Self {
        AbelianGroup {
            rank,
            torsion: invariant_factors(torsion.into_iter().collect()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::new(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).copied(),
        )
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Normalizes a list of cyclic orders to invariant-factor form.
///
/// Pairs are repeatedly replaced by `(gcd, lcm)` until the list is a
/// divisibility chain; this preserves the isomorphism type because
/// `Z/a ⊕ Z/b ≅ Z/gcd ⊕ Z/lcm`.
pub fn invariant_factors(mut orders: Vec<u64>) -> Vec<u64> {
    orders.retain(|&t| t > 1);
    let n = orders.len();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (orders[i], orders[j]);
            let g = a.gcd(&b);
            let l = (a / g)
                .checked_mul(b)
                .expect("torsion coefficient exceeds u64");
            orders[i] = g;
            orders[j] = l;
        }
    }
    // After the sweep, orders[i] divides every orders[j] with j > i.
    orders.retain(|&t| t > 1);
    orders
}

/// Abelian groups indexed by degree; degrees not present hold the zero group.
///
/// Serialized as `{"<degree>": {"rank": r, "torsion": [..]}, ...}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradedGroups {
    groups: BTreeMap<i32, AbelianGroup>,
}

impl GradedGroups {
    pub fn new() -> Self {
        Self::default()
    }

    /// Free groups from a rank list starting at degree 0.
    pub fn from_ranks(ranks: &[usize]) -> Self {
        let mut g = GradedGroups::new();
        for (d, &r) in ranks.iter().enumerate() {
            g.add(d as i32, &AbelianGroup::free(r));
        }
        g
    }

    /// Free groups with `ranks` given as `(degree, rank)` pairs.
    pub fn from_degree_ranks(pairs: &[(i32, usize)]) -> Self {
        let mut g = GradedGroups::new();
        for &(d, r) in pairs {
            g.add(d, &AbelianGroup::free(r));
        }
        g
    }

    /// Cohomology of the sphere `S^d`.
    pub fn sphere(d: i32) -> Self {
        GradedGroups::from_degree_ranks(&[(0, 1), (d, 1)])
    }

    pub fn get(&self, degree: i32) -> AbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: i32) -> usize {
        self.groups.get(&degree).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, degree: i32) -> &[u64] {
        self.groups
            .get(&degree)
            .map_or(&[], |g| g.torsion.as_slice())
    }

    /// Replaces the group in `degree`.
    pub fn set(&mut self, degree: i32, group: AbelianGroup) {
        if group.is_zero() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, group);
        }
    }

    /// Adds `group` as a direct summand in `degree`.
    pub fn add(&mut self, degree: i32, group: &AbelianGroup) {
        if group.is_zero() {
            return;
        }
        let merged = self.get(degree).direct_sum(group);
        self.set(degree, merged);
    }

    /// Degree-wise direct sum. Commutative and associative.
    pub fn merge(mut self, other: &GradedGroups) -> GradedGroups {
        for (&d, g) in &other.groups {
            self.add(d, g);
        }
        self
    }

    /// The same groups moved up by `shift` degrees.
    pub fn shifted(&self, shift: i32) -> GradedGroups {
        GradedGroups {
            groups: self
                .groups
                .iter()
                .map(|(&d, g)| (d + shift, g.clone()))
                .collect(),
        }
    }

    /// Removes `count` free summands from `degree`, or returns `None` if the
    /// free rank there is smaller than `count`.
    pub fn remove_free(&mut self, degree: i32, count: usize) -> Option<()> {
        let mut g = self.get(degree);
        g.rank = g.rank.checked_sub(count)?;
        self.set(degree, g);
        Some(())
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    /// Nonzero degrees in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &AbelianGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.groups.keys().next_back().copied()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(|g| g.torsion.is_empty())
    }

    /// Rank-only view; negative degrees are dropped.
    pub fn betti(&self) -> PoincarePolynomial {
        PoincarePolynomial::from_pairs(
            self.groups
                .iter()
                .filter(|(&d, _)| d >= 0)
                .map(|(&d, g)| (d as usize, g.rank)),
        )
    }
}

impl fmt::Display for GradedGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(d, g)| format!("H{d} = {g}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `degree ↦ rank` view of graded groups.
pub fn betti(groups: &GradedGroups) -> PoincarePolynomial {
    groups.betti()
}

/// A polynomial `∑ b_k t^k` with nonnegative integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoincarePolynomial {
    coefficients: BTreeMap<usize, usize>,
}

impl PoincarePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Coefficients listed from degree 0 upward.
    pub fn from_coefficients(coeffs: &[usize]) -> Self {
        Self::from_pairs(coeffs.iter().copied().enumerate())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut coefficients = BTreeMap::new();
        for (d, c) in pairs {
            if c != 0 {
                *coefficients.entry(d).or_insert(0) += c;
            }
        }
        PoincarePolynomial { coefficients }
    }

    pub fn coefficient(&self, degree: usize) -> usize {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.coefficients.iter().map(|(&d, &c)| (d, c))
    }

    /// Dense coefficient list `b_0..=b_deg`.
    pub fn to_vec(&self) -> Vec<usize> {
        match self.degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.coefficient(d)).collect(),
        }
    }

    pub fn multiply(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        let mut out = BTreeMap::new();
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                *out.entry(a + b).or_insert(0) += x * y;
            }
        }
        PoincarePolynomial::from_pairs(out)
    }

    /// `∑ (-1)^k b_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// `b_k = b_{dim-k}` for all `k`, and nothing above `dim`.
    pub fn is_symmetric(&self, dim: usize) -> bool {
        self.degree().is_none_or(|top| top <= dim)
            && (0..=dim).all(|k| self.coefficient(k) == self.coefficient(dim - k))
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(d, c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}t^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
