//! Complex simple root systems of types A–G in exact arithmetic.
//!
//! Roots are stored as integer coefficient vectors over the simple roots
//! ψ_1, …, ψ_rank, and the bilinear form is the symmetrized Cartan form with
//! long roots normalized to squared length 2.  Everything is exact: integer
//! coefficients, rational Gram entries, no floating point.
//!
//! Generation runs by weight-level closure from the simple roots using root
//! strings, so the classical root counts (A_n: n(n+1), …, E8: 240) act as
//! independent oracle checks on the construction rather than inputs to it.

use std::collections::BTreeSet;
use std::fmt;

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rat = Ratio<i64>;

/// Series letter of a simple Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
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
}

/// A valid simple Cartan type `(series, rank)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    /// Validated constructor.  Rank bounds: A ≥ 1, B,C,D ≥ 2, E ∈ {6,7,8},
    /// F = 4, G = 2.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C | Series::D => rank >= 2,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidCartanType {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::UnknownRealForm(s.into()))?;
        let series = match letter.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(Error::UnknownRealForm(s.into())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownRealForm(s.into()))?;
        CartanType::new(series, rank)
    }

    /// Number of roots of the system, by the classical closed forms.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::G => 12,
            Series::F => 48,
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }

    /// Dimension of the complex simple Lie algebra of this type.
    pub fn algebra_dim(&self) -> usize {
        self.rank + self.root_count()
    }

    /// Squared lengths of the simple roots, long roots normalized to 2.
    pub fn lengths(&self) -> Vec<Rat> {
        let two = Rat::from_integer(2);
        let one = Rat::from_integer(1);
        let n = self.rank;
        match self.series {
            Series::A | Series::D | Series::E => vec![two; n],
            Series::B => {
                let mut v = vec![two; n];
                v[n - 1] = one;
                v
            }
            Series::C => {
                let mut v = vec![one; n];
                v[n - 1] = two;
                v
            }
            Series::F => vec![two, two, one, one],
            Series::G => vec![Rat::new(2, 3), two],
        }
    }

    /// Edges of the Dynkin diagram as 0-indexed node pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.series {
            Series::A | Series::B | Series::C | Series::F | Series::G => {
                (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            }
            Series::D => {
                let mut e: Vec<(usize, usize)> = (0..n.saturating_sub(3)).map(|i| (i, i + 1)).collect();
                if n >= 3 {
                    e.push((n - 3, n - 2));
                    e.push((n - 3, n - 1));
                }
                e
            }
            Series::E => {
                // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 on node 4.
                let mut e = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
                if n >= 7 {
                    e.push((5, 6));
                }
                if n >= 8 {
                    e.push((6, 7));
                }
                e
            }
        }
    }

    /// Symmetrized Cartan form on the simple roots.
    pub fn gram(&self) -> Vec<Vec<Rat>> {
        let n = self.rank;
        let lens = self.lengths();
        let mut g = vec![vec![Rat::from_integer(0); n]; n];
        for i in 0..n {
            g[i][i] = lens[i];
        }
        for (i, j) in self.edges() {
            // For every bond of the covered types the inner product of the two
            // endpoint simple roots is -max(len_i, len_j)/2.
            let v = if lens[i] > lens[j] { lens[i] } else { lens[j] };
            let e = -v / Rat::from_integer(2);
            g[i][j] = e;
            g[j][i] = e;
        }
        g
    }

    /// Cartan matrix a_ij = 2(ψ_i,ψ_j)/(ψ_i,ψ_i).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let g = self.gram();
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = Rat::from_integer(2) * g[i][j] / g[i][i];
                assert!(v.is_integer(), "Cartan matrix entry must be integral");
                a[i][j] = v.to_integer();
            }
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// A root as an integer vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Coefficientwise partial order: `self ≤ other` iff other − self ≥ 0.
    pub fn le_coefficientwise(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The full root system of a complex simple Lie algebra, with exact Gram form.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    gram: Vec<Vec<Rat>>,
    positive: Vec<Root>,
    membership: BTreeSet<Vec<i64>>,
}

impl RootSystem {
    /// Generate the root system by weight-level closure from the simple roots.
    pub fn new(t: CartanType) -> Result<Self> {
        // CartanType can only be built validated, but accept raw pairs too.
        CartanType::new(t.series, t.rank)?;
        let n = t.rank;
        let a = t.cartan_matrix();
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut level: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            set.insert(v.clone());
            level.push(v);
        }
        while !level.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for gamma in &level {
                for i in 0..n {
                    // p = how far the i-string continues downward from gamma.
                    let mut p = 0i64;
                    loop {
                        let mut down = gamma.clone();
                        down[i] -= p + 1;
                        if down.iter().all(|c| *c == 0) || !all_same_sign(&down) {
                            break;
                        }
                        if set.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| gamma[j] * a[i][j]).sum();
                    if p - pairing > 0 {
                        let mut up = gamma.clone();
                        up[i] += 1;
                        if set.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            level = next;
        }
        let mut positive: Vec<Root> = set.iter().cloned().map(Root).collect();
        positive.sort();
        let mut membership = set;
        let negatives: Vec<Vec<i64>> = membership
            .iter()
            .map(|v| v.iter().map(|c| -c).collect())
            .collect();
        membership.extend(negatives);
        Ok(RootSystem {
            cartan_type: t,
            gram: t.gram(),
            positive,
            membership,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn gram(&self) -> &Vec<Vec<Rat>> {
        &self.gram
    }

    /// Positive roots in lexicographic order on coefficient vectors.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// All roots (both signs), deterministic order: negatives then positives.
    pub fn all_roots(&self) -> Vec<Root> {
        self.membership.iter().cloned().map(Root).collect()
    }

    pub fn len(&self) -> usize {
        self.membership.len()
    }

    pub fn is_empty(&self) -> bool {
        self.membership.is_empty()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0i64; self.rank()];
        v[i] = 1;
        Root(v)
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        v.len() == self.rank() && self.membership.contains(v)
    }

    /// Exact value of the symmetric bilinear form.
    pub fn inner(&self, a: &Root, b: &Root) -> Result<Rat> {
        inner_with(&self.gram, a.coeffs(), b.coeffs())
    }

    /// The unique coefficientwise maximum among positive roots.  For the
    /// (reducible) edge case D_2 the lexicographically largest maximal
    /// element is returned.
    pub fn highest_root(&self) -> Root {
        let maximal: Vec<&Root> = self
            .positive
            .iter()
            .filter(|r| {
                self.positive
                    .iter()
                    .all(|other| *r == other || !r.le_coefficientwise(other))
            })
            .collect();
        maximal
            .into_iter()
            .max_by(|a, b| a.0.cmp(&b.0))
            .expect("nonempty root system")
            .clone()
    }
}

fn all_same_sign(v: &[i64]) -> bool {
    let pos = v.iter().any(|c| *c > 0);
    let neg = v.iter().any(|c| *c < 0);
    !(pos && neg)
}

/// Bilinear form of two coefficient vectors under a Gram matrix.
pub fn inner_with(gram: &[Vec<Rat>], a: &[i64], b: &[i64]) -> Result<Rat> {
    let n = gram.len();
    if a.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a.len(),
        });
    }
    if b.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: b.len(),
        });
    }
    let mut acc = Rat::from_integer(0);
    for i in 0..n {
        if a[i] == 0 {
            continue;
        }
        for j in 0..n {
            if b[j] != 0 {
                acc += gram[i][j] * Rat::from_integer(a[i] * b[j]);
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(series: Series, rank: usize) -> RootSystem {
        RootSystem::new(CartanType::new(series, rank).unwrap()).unwrap()
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(CartanType::new(Series::E, 5).is_err());
        assert!(CartanType::new(Series::F, 3).is_err());
        assert!(CartanType::new(Series::G, 3).is_err());
        assert!(CartanType::new(Series::B, 1).is_err());
        assert!(CartanType::new(Series::A, 0).is_err());
    }

    #[test]
    fn a2_by_hand() {
        let rs = sys(Series::A, 2);
        assert_eq!(rs.len(), 6);
        assert_eq!(rs.positive_roots().len(), 3);
        assert!(rs.is_root(&[1, 1]));
        assert!(!rs.is_root(&[2, 1]));
        let a1 = rs.simple_root(0);
        let a2 = rs.simple_root(1);
        assert_eq!(rs.inner(&a1, &a1).unwrap(), Rat::from_integer(2));
        assert_eq!(rs.inner(&a1, &a2).unwrap(), Rat::from_integer(-1));
    }

    #[test]
    fn root_counts_match_closed_forms() {
        let cases = [
            (Series::A, 1),
            (Series::A, 4),
            (Series::A, 8),
            (Series::B, 2),
            (Series::B, 5),
            (Series::C, 3),
            (Series::C, 8),
            (Series::D, 2),
            (Series::D, 3),
            (Series::D, 4),
            (Series::D, 8),
            (Series::G, 2),
            (Series::F, 4),
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
        ];
        for (s, r) in cases {
            let t = CartanType::new(s, r).unwrap();
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(rs.len(), t.root_count(), "count for {t}");
            assert_eq!(rs.positive_roots().len() * 2, rs.len());
        }
    }

    #[test]
    fn g2_highest_root() {
        let rs = sys(Series::G, 2);
        assert_eq!(rs.len(), 12);
        assert_eq!(rs.highest_root(), Root(vec![3, 2]));
        // 3ψ1+2ψ2 is orthogonal to the short simple root ψ1 and pairs
        // positively with the long one.
        let hi = rs.highest_root();
        assert_eq!(rs.inner(&hi, &rs.simple_root(0)).unwrap(), Rat::from_integer(0));
        assert_eq!(rs.inner(&hi, &rs.simple_root(1)).unwrap(), Rat::from_integer(1));
    }

    #[test]
    fn f4_highest_root() {
        let rs = sys(Series::F, 4);
        assert_eq!(rs.highest_root(), Root(vec![2, 3, 4, 2]));
    }

    #[test]
    fn e8_highest_root() {
        let rs = sys(Series::E, 8);
        assert_eq!(rs.highest_root(), Root(vec![2, 3, 4, 6, 5, 4, 3, 2]));
    }

    #[test]
    fn c3_positive_count() {
        let rs = sys(Series::C, 3);
        assert_eq!(rs.positive_roots().len(), 9);
    }

    #[test]
    fn negation_closure_and_cartan_integrality() {
        for (s, r) in [(Series::B, 3), (Series::G, 2), (Series::F, 4), (Series::D, 4)] {
            let rs = sys(s, r);
            for a in rs.all_roots() {
                assert!(rs.is_root(a.negated().coeffs()));
                for b in rs.all_roots() {
                    let num = Rat::from_integer(2) * rs.inner(&a, &b).unwrap();
                    let den = rs.inner(&b, &b).unwrap();
                    assert!((num / den).is_integer(), "2(a,b)/(b,b) integral");
                }
            }
        }
    }

    #[test]
    fn highest_root_is_dominant() {
        for (s, r) in [
            (Series::A, 5),
            (Series::B, 4),
            (Series::C, 4),
            (Series::D, 5),
            (Series::E, 6),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let rs = sys(s, r);
            let hi = rs.highest_root();
            for i in 0..rs.rank() {
                let v = rs.inner(&hi, &rs.simple_root(i)).unwrap();
                assert!(v >= Rat::from_integer(0), "{s:?}{r} node {i}");
            }
            // And it dominates every positive root coefficientwise.
            for p in rs.positive_roots() {
                assert!(p.le_coefficientwise(&hi));
            }
        }
    }

    #[test]
    fn closure_is_idempotent() {
        // Re-running the string test on the generated set adds nothing.
        let rs = sys(Series::F, 4);
        for a in rs.all_roots() {
            for i in 0..rs.rank() {
                let s = rs.simple_root(i);
                if a == s || a == s.negated() {
                    continue;
                }
                let sum: Vec<i64> = a.coeffs().iter().zip(s.coeffs()).map(|(x, y)| x + y).collect();
                if rs.is_root(&sum) {
                    continue;
                }
                // If the string test would admit it, it must already be a root.
                let pairing = Rat::from_integer(2) * rs.inner(&a, &s).unwrap()
                    / rs.inner(&s, &s).unwrap();
                let mut p = 0i64;
                loop {
                    let down: Vec<i64> = a
                        .coeffs()
                        .iter()
                        .zip(s.coeffs())
                        .map(|(x, y)| x - (p + 1) * y)
                        .collect();
                    if rs.is_root(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                assert!(p - pairing.to_integer() <= 0);
            }
        }
    }
}
