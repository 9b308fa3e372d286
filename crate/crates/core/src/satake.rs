//! Satake diagrams of the quasi-split real forms with abelian Levi factor,
//! and restriction to the maximal split torus.
//!
//! The classification has three cases: (1) split forms, (2) underlying real
//! structures of complex simple algebras, (3) four remaining families
//! su(ℓ,ℓ+1), su(ℓ,ℓ), so(ℓ−1,ℓ+1) and the quasi-split E6.  Case (2) is
//! modelled as a doubled diagram (two copies of the type swapped by the
//! involution), which makes restriction one uniform orbit-collapse map
//! α_i ↦ ψ_[orbit of i] across all cases.
//!
//! Diagrams with black nodes can be described (they serve as negative
//! controls for the abelian-Levi criterion) but are rejected by `restrict`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root::{inner_with, CartanType, Rat, RootSystem, Series};

/// Identifier for a real form with abelian Levi factor.
///
/// String grammar (stable, used by the CLI):
/// `split:<type>`, `complex:<type>`, `su(p,q)` with q ∈ {p, p+1},
/// `so(l-1,l+1):<l>`, `e6(a1a5)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealFormId {
    Split(CartanType),
    Complex(CartanType),
    /// su(ℓ,ℓ), ℓ ≥ 2 (su(1,1) coincides with split A1).
    SuEqual { l: usize },
    /// su(ℓ,ℓ+1), ℓ ≥ 1.
    SuNearly { l: usize },
    /// so(ℓ−1,ℓ+1), ℓ ≥ 3.
    SoNearly { l: usize },
    /// The quasi-split E6 form with restricted system of F4 shape.
    E6Quasi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseTag {
    Split,
    Complex,
    QuasiSplit,
}

impl RealFormId {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("split:") {
            return Ok(RealFormId::Split(CartanType::parse(rest)?));
        }
        if let Some(rest) = s.strip_prefix("complex:") {
            return Ok(RealFormId::Complex(CartanType::parse(rest)?));
        }
        if s == "e6(a1a5)" {
            return Ok(RealFormId::E6Quasi);
        }
        if let Some(rest) = s.strip_prefix("so(l-1,l+1):") {
            let l: usize = rest.parse().map_err(|_| Error::UnknownRealForm(s.into()))?;
            if l < 3 {
                return Err(Error::UnknownRealForm(s.into()));
            }
            return Ok(RealFormId::SoNearly { l });
        }
        if let Some(rest) = s.strip_prefix("su(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::UnknownRealForm(s.into()))?;
            let mut parts = inner.split(',');
            let p: usize = parts
                .next()
                .and_then(|x| x.trim().parse().ok())
                .ok_or_else(|| Error::UnknownRealForm(s.into()))?;
            let q: usize = parts
                .next()
                .and_then(|x| x.trim().parse().ok())
                .ok_or_else(|| Error::UnknownRealForm(s.into()))?;
            if parts.next().is_some() {
                return Err(Error::UnknownRealForm(s.into()));
            }
            if q == p && p >= 2 {
                return Ok(RealFormId::SuEqual { l: p });
            }
            if q == p + 1 && p >= 1 {
                return Ok(RealFormId::SuNearly { l: p });
            }
            return Err(Error::UnknownRealForm(s.into()));
        }
        Err(Error::UnknownRealForm(s.into()))
    }

    pub fn case(&self) -> CaseTag {
        match self {
            RealFormId::Split(_) => CaseTag::Split,
            RealFormId::Complex(_) => CaseTag::Complex,
            _ => CaseTag::QuasiSplit,
        }
    }

    /// Conventional name of the underlying real Lie algebra.
    pub fn algebra_name(&self) -> String {
        match self {
            RealFormId::Split(t) => match t.series {
                Series::A => format!("sl({};R)", t.rank + 1),
                Series::B => format!("so({},{})", t.rank, t.rank + 1),
                Series::C => format!("sp({};R)", t.rank),
                Series::D => format!("so({},{})", t.rank, t.rank),
                Series::E => format!("e{}(split)", t.rank),
                Series::F => "f4(split)".into(),
                Series::G => "g2(split)".into(),
            },
            RealFormId::Complex(t) => match t.series {
                Series::A => format!("sl({};C)", t.rank + 1),
                Series::B => format!("so({};C)", 2 * t.rank + 1),
                Series::C => format!("sp({};C)", t.rank),
                Series::D => format!("so({};C)", 2 * t.rank),
                Series::E => format!("e{}(C)", t.rank),
                Series::F => "f4(C)".into(),
                Series::G => "g2(C)".into(),
            },
            RealFormId::SuEqual { l } => format!("su({l},{l})"),
            RealFormId::SuNearly { l } => format!("su({},{})", l, l + 1),
            RealFormId::SoNearly { l } => format!("so({},{})", l - 1, l + 1),
            RealFormId::E6Quasi => "e6(a1a5)".into(),
        }
    }

    /// Real dimension of the Lie algebra (curated closed forms, used only
    /// as a consistency cross-check on restricted multiplicities).
    pub fn algebra_dim(&self) -> usize {
        match self {
            RealFormId::Split(t) => t.algebra_dim(),
            RealFormId::Complex(t) => 2 * t.algebra_dim(),
            RealFormId::SuEqual { l } => (2 * l) * (2 * l) - 1,
            RealFormId::SuNearly { l } => (2 * l + 1) * (2 * l + 1) - 1,
            RealFormId::SoNearly { l } => (2 * l) * (2 * l - 1) / 2,
            RealFormId::E6Quasi => 78,
        }
    }
}

impl fmt::Display for RealFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealFormId::Split(t) => write!(f, "split:{t}"),
            RealFormId::Complex(t) => write!(f, "complex:{t}"),
            RealFormId::SuEqual { l } => write!(f, "su({l},{l})"),
            RealFormId::SuNearly { l } => write!(f, "su({},{})", l, l + 1),
            RealFormId::SoNearly { l } => write!(f, "so(l-1,l+1):{l}"),
            RealFormId::E6Quasi => write!(f, "e6(a1a5)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeColor {
    White,
    Black,
}

/// An involution-decorated Dynkin diagram, possibly doubled (case 2).
#[derive(Debug, Clone)]
pub struct SatakeDiagram {
    /// One entry for a plain diagram, two equal entries for the doubled case.
    pub pieces: Vec<CartanType>,
    pub colors: Vec<NodeColor>,
    /// Permutation of the nodes; an automorphism of the diagram.
    pub involution: Vec<usize>,
    gram: Vec<Vec<Rat>>,
    /// Positive ambient roots, block-embedded into the joint node space.
    positive: Vec<Vec<i64>>,
}

impl SatakeDiagram {
    /// Assemble a diagram from pieces, colors and involution.  Checks that
    /// the involution squares to the identity and respects the diagram
    /// metric and the coloring.
    pub fn assemble(
        pieces: Vec<CartanType>,
        colors: Vec<NodeColor>,
        involution: Vec<usize>,
    ) -> Result<Self> {
        let mut gram: Vec<Vec<Rat>> = Vec::new();
        let mut positive: Vec<Vec<i64>> = Vec::new();
        let total: usize = pieces.iter().map(|t| t.rank).sum();
        let zero = Rat::from_integer(0);
        gram.resize_with(total, || vec![zero; total]);
        let mut offset = 0;
        for t in &pieces {
            let sub = RootSystem::new(*t)?;
            let g = t.gram();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    gram[offset + i][offset + j] = g[i][j];
                }
            }
            for r in sub.positive_roots() {
                let mut v = vec![0i64; total];
                v[offset..offset + t.rank].copy_from_slice(r.coeffs());
                positive.push(v);
            }
            offset += t.rank;
        }
        if colors.len() != total || involution.len() != total {
            return Err(Error::DimensionMismatch {
                expected: total,
                got: colors.len().max(involution.len()),
            });
        }
        for i in 0..total {
            let j = involution[i];
            if j >= total || involution[j] != i {
                return Err(Error::integrity("satake", "involution must square to identity"));
            }
            if colors[i] != colors[j] {
                return Err(Error::integrity("satake", "involution must preserve colors"));
            }
            for k in 0..total {
                if gram[i][k] != gram[involution[i]][involution[k]] {
                    return Err(Error::integrity(
                        "satake",
                        "involution must be a diagram automorphism",
                    ));
                }
            }
        }
        positive.sort();
        Ok(SatakeDiagram {
            pieces,
            colors,
            involution,
            gram,
            positive,
        })
    }

    pub fn nodes(&self) -> usize {
        self.colors.len()
    }

    pub fn gram(&self) -> &Vec<Vec<Rat>> {
        &self.gram
    }

    pub fn has_black(&self) -> bool {
        self.colors.contains(&NodeColor::Black)
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.gram[i][j] != Rat::from_integer(0)
    }
}

/// The Satake diagram of a real form in the abelian-Levi classification.
pub fn satake_of(id: &RealFormId) -> Result<SatakeDiagram> {
    match id {
        RealFormId::Split(t) => {
            let n = t.rank;
            SatakeDiagram::assemble(vec![*t], vec![NodeColor::White; n], (0..n).collect())
        }
        RealFormId::Complex(t) => {
            let n = t.rank;
            let inv: Vec<usize> = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
            SatakeDiagram::assemble(vec![*t, *t], vec![NodeColor::White; 2 * n], inv)
        }
        RealFormId::SuNearly { l } => {
            // Ambient A_{2ℓ}, nodes i ↔ 2ℓ+1-i (1-indexed), no fixed node.
            let n = 2 * l;
            let t = CartanType::new(Series::A, n)?;
            let inv: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            SatakeDiagram::assemble(vec![t], vec![NodeColor::White; n], inv)
        }
        RealFormId::SuEqual { l } => {
            // Ambient A_{2ℓ-1}, middle node fixed.
            let n = 2 * l - 1;
            let t = CartanType::new(Series::A, n)?;
            let inv: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
            SatakeDiagram::assemble(vec![t], vec![NodeColor::White; n], inv)
        }
        RealFormId::SoNearly { l } => {
            // Ambient D_ℓ with the two fork nodes swapped.
            let t = CartanType::new(Series::D, *l)?;
            let mut inv: Vec<usize> = (0..*l).collect();
            inv.swap(l - 2, l - 1);
            SatakeDiagram::assemble(vec![t], vec![NodeColor::White; *l], inv)
        }
        RealFormId::E6Quasi => {
            // Bourbaki E6 flip: 1↔6, 3↔5, nodes 2 and 4 fixed.
            let t = CartanType::new(Series::E, 6)?;
            let inv = vec![5, 1, 4, 3, 2, 0];
            SatakeDiagram::assemble(vec![t], vec![NodeColor::White; 6], inv)
        }
    }
}

/// Levi factor criterion: the Levi Lie algebra m is abelian exactly when no
/// simple root restricts to zero, i.e. the diagram has no black node.
pub fn is_m_abelian(d: &SatakeDiagram) -> bool {
    !d.has_black()
}

/// Number of white nodes not adjacent to a black node and not attached to
/// another node by an arrow.
pub fn r_invariant(d: &SatakeDiagram) -> usize {
    (0..d.nodes())
        .filter(|&i| {
            d.colors[i] == NodeColor::White
                && d.involution[i] == i
                && (0..d.nodes()).all(|j| !(d.adjacent(i, j) && d.colors[j] == NodeColor::Black))
        })
        .count()
}

/// A restricted root with the number of ambient roots above it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RestrictedRoot {
    pub coeffs: Vec<i64>,
    pub multiplicity: usize,
}

impl RestrictedRoot {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn le_coefficientwise(&self, other: &RestrictedRoot) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for RestrictedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Restricted root system on ψ-space, with multiplicities and exact Gram.
#[derive(Debug, Clone)]
pub struct RestrictedRootSystem {
    pub restricted_rank: usize,
    /// Positive restricted roots, lexicographically sorted.
    positive: Vec<RestrictedRoot>,
    membership: BTreeSet<Vec<i64>>,
    mults: BTreeMap<Vec<i64>, usize>,
    gram: Vec<Vec<Rat>>,
    pub reduced: bool,
    /// Number of involution orbits of size 2 (equals dim m for these forms).
    pub paired_orbits: usize,
    /// Ambient rank of the Satake diagram the system was restricted from.
    pub ambient_rank: usize,
}

impl RestrictedRootSystem {
    pub fn positive_roots(&self) -> &[RestrictedRoot] {
        &self.positive
    }

    pub fn gram(&self) -> &Vec<Vec<Rat>> {
        &self.gram
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        v.len() == self.restricted_rank && self.membership.contains(v)
    }

    pub fn multiplicity(&self, v: &[i64]) -> Option<usize> {
        let pos: Vec<i64> = if v.iter().all(|c| *c >= 0) {
            v.to_vec()
        } else {
            v.iter().map(|c| -c).collect()
        };
        self.mults.get(&pos).copied()
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Result<Rat> {
        inner_with(&self.gram, a, b)
    }

    /// Multiplicity-weighted count of positive restricted roots = dim n.
    pub fn dim_n(&self) -> usize {
        self.positive.iter().map(|r| r.multiplicity).sum()
    }

    /// dim m of the real form: every 2-orbit of simple roots contributes one
    /// compact Cartan direction, and no root restricts to zero here.
    pub fn dim_m(&self) -> usize {
        self.paired_orbits
    }

    pub fn dim_a(&self) -> usize {
        self.restricted_rank
    }
}

/// Apply the orbit-collapse restriction map to a quasi-split diagram.
pub fn restrict(d: &SatakeDiagram) -> Result<RestrictedRootSystem> {
    if d.has_black() {
        return Err(Error::UnsupportedDiagram);
    }
    let n = d.nodes();
    // Orbits in order of their smallest node.
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let j = d.involution[i];
        let orbit = if j == i { vec![i] } else { vec![i, j] };
        for &k in &orbit {
            orbit_of[k] = orbits.len();
        }
        orbits.push(orbit);
    }
    let k = orbits.len();

    // Restriction of every positive ambient root; none restrict to zero.
    let mut mults: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for v in &d.positive {
        let mut w = vec![0i64; k];
        for (i, c) in v.iter().enumerate() {
            w[orbit_of[i]] += c;
        }
        debug_assert!(w.iter().any(|c| *c != 0));
        *mults.entry(w).or_insert(0) += 1;
    }

    // Gram of the orbit-average representatives (1/|o|) Σ_{i∈o} α_i.
    let mut gram = vec![vec![Rat::from_integer(0); k]; k];
    for (a, oa) in orbits.iter().enumerate() {
        for (b, ob) in orbits.iter().enumerate() {
            let mut acc = Rat::from_integer(0);
            for &i in oa {
                for &j in ob {
                    acc += d.gram()[i][j];
                }
            }
            gram[a][b] = acc / Rat::from_integer((oa.len() * ob.len()) as i64);
        }
    }

    let positive: Vec<RestrictedRoot> = mults
        .iter()
        .map(|(v, m)| RestrictedRoot {
            coeffs: v.clone(),
            multiplicity: *m,
        })
        .collect();
    let mut membership: BTreeSet<Vec<i64>> = mults.keys().cloned().collect();
    let negatives: Vec<Vec<i64>> = membership
        .iter()
        .map(|v| v.iter().map(|c| -c).collect())
        .collect();
    membership.extend(negatives);
    let reduced = !positive.iter().any(|r| {
        let twice: Vec<i64> = r.coeffs.iter().map(|c| 2 * c).collect();
        membership.contains(&twice)
    });
    Ok(RestrictedRootSystem {
        restricted_rank: k,
        positive,
        membership,
        mults,
        gram,
        reduced,
        paired_orbits: orbits.iter().filter(|o| o.len() == 2).count(),
        ambient_rank: n,
    })
}

/// Positive restricted roots α with 2α also restricted.
pub fn multipliable_roots(rrs: &RestrictedRootSystem) -> Vec<RestrictedRoot> {
    rrs.positive
        .iter()
        .filter(|r| {
            let twice: Vec<i64> = r.coeffs.iter().map(|c| 2 * c).collect();
            rrs.membership.contains(&twice)
        })
        .cloned()
        .collect()
}

/// The full classification list up to ambient rank `max_rank`, deduplicated
/// under the stated low-rank coincidences su(1,1) = sp(1;R) = sl(2;R) and
/// so(2,3) = sp(2;R): split C starts at rank 3 (C2 is covered by split:B2),
/// su(ℓ,ℓ) starts at ℓ = 2, and so(ℓ−1,ℓ+1) at ℓ = 3.
pub fn enumerate_abelian_levi_forms(max_rank: usize) -> Vec<RealFormId> {
    let mut out = Vec::new();
    let split_types = |out: &mut Vec<CartanType>| {
        for r in 1..=max_rank {
            out.push(CartanType::new(Series::A, r).unwrap());
        }
        for r in 2..=max_rank {
            out.push(CartanType::new(Series::B, r).unwrap());
        }
        for r in 3..=max_rank {
            out.push(CartanType::new(Series::C, r).unwrap());
        }
        for r in 3..=max_rank {
            out.push(CartanType::new(Series::D, r).unwrap());
        }
        if max_rank >= 2 {
            out.push(CartanType::new(Series::G, 2).unwrap());
        }
        if max_rank >= 4 {
            out.push(CartanType::new(Series::F, 4).unwrap());
        }
        for r in 6..=max_rank.min(8) {
            out.push(CartanType::new(Series::E, r).unwrap());
        }
    };
    let mut types = Vec::new();
    split_types(&mut types);
    out.extend(types.iter().map(|t| RealFormId::Split(*t)));
    out.extend(types.iter().map(|t| RealFormId::Complex(*t)));
    for l in 1..=max_rank / 2 {
        out.push(RealFormId::SuNearly { l });
    }
    for l in 2..=max_rank.div_ceil(2) {
        out.push(RealFormId::SuEqual { l });
    }
    for l in 3..=max_rank {
        out.push(RealFormId::SoNearly { l });
    }
    if max_rank >= 6 {
        out.push(RealFormId::E6Quasi);
    }
    out
}

/// Conventional label of the restricted root system shape.
pub fn restricted_shape(id: &RealFormId) -> String {
    match id {
        RealFormId::Split(t) | RealFormId::Complex(t) => t.to_string(),
        RealFormId::SuNearly { l } => format!("BC{l}"),
        RealFormId::SuEqual { l } => format!("C{l}"),
        RealFormId::SoNearly { l } => format!("B{}", l - 1),
        RealFormId::E6Quasi => "F4".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rrs(id: &str) -> RestrictedRootSystem {
        restrict(&satake_of(&RealFormId::parse(id).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn parse_roundtrip() {
        for s in [
            "split:G2",
            "split:B4",
            "complex:E8",
            "su(3,4)",
            "su(3,3)",
            "so(l-1,l+1):5",
            "e6(a1a5)",
        ] {
            let id = RealFormId::parse(s).unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!(RealFormId::parse("su(1,3)").is_err());
        assert!(RealFormId::parse("so(l-1,l+1):2").is_err());
        assert!(RealFormId::parse("split:E5").is_err());
    }

    #[test]
    fn split_g2_diagram() {
        let d = satake_of(&RealFormId::parse("split:G2").unwrap()).unwrap();
        assert_eq!(d.nodes(), 2);
        assert_eq!(d.involution, vec![0, 1]);
        assert!(is_m_abelian(&d));
        assert_eq!(r_invariant(&d), 2);
    }

    #[test]
    fn su34_diagram_and_restriction() {
        // su(3,4): ambient A6, involution (1 6)(2 5)(3 4) in 1-indexed terms.
        let d = satake_of(&RealFormId::parse("su(3,4)").unwrap()).unwrap();
        assert_eq!(d.nodes(), 6);
        assert_eq!(d.involution, vec![5, 4, 3, 2, 1, 0]);
        assert_eq!(r_invariant(&d), 0);
        let r = restrict(&d).unwrap();
        assert_eq!(r.restricted_rank, 3);
        assert!(!r.reduced);
        // 2(ψ_u + … + ψ_3) restricted for u = 1..3.
        for u in 0..3 {
            let mut v = vec![0i64; 3];
            for slot in v.iter_mut().skip(u) {
                *slot = 2;
            }
            assert!(r.is_root(&v), "β_{u} missing");
            assert_eq!(r.multiplicity(&v), Some(1));
        }
        assert_eq!(r.dim_n(), 2 * 3 * 3 + 3);
        let multi = multipliable_roots(&r);
        assert_eq!(multi.len(), 3);
        for m in &multi {
            // ψ_u + … + ψ_3, each with computed multiplicity 2.
            assert_eq!(m.multiplicity, 2);
        }
    }

    #[test]
    fn complex_forms_double_multiplicities() {
        let r = rrs("complex:G2");
        assert_eq!(r.restricted_rank, 2);
        assert_eq!(r.positive_roots().len(), 6);
        assert!(r.positive_roots().iter().all(|x| x.multiplicity == 2));
        assert_eq!(r.dim_m(), 2);

        let split = rrs("split:G2");
        assert!(split.positive_roots().iter().all(|x| x.multiplicity == 1));
        // Same root vectors, doubled multiplicities.
        let a: Vec<_> = r.positive_roots().iter().map(|x| x.coeffs.clone()).collect();
        let b: Vec<_> = split.positive_roots().iter().map(|x| x.coeffs.clone()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn restriction_identities_for_split_and_complex() {
        // Split: restriction is the identity embedding with multiplicity 1;
        // complex: the same vectors with multiplicity 2.
        for t in ["A4", "B3", "C3", "D4", "F4", "E6"] {
            let ambient = RootSystem::new(CartanType::parse(t).unwrap()).unwrap();
            let ambient_pos: Vec<Vec<i64>> = ambient
                .positive_roots()
                .iter()
                .map(|r| r.coeffs().to_vec())
                .collect();
            let split = rrs(&format!("split:{t}"));
            let split_pos: Vec<Vec<i64>> =
                split.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
            assert_eq!(split_pos, ambient_pos, "split:{t}");
            assert!(split.positive_roots().iter().all(|r| r.multiplicity == 1));
            assert_eq!(split.gram(), ambient.gram());

            let complex = rrs(&format!("complex:{t}"));
            let complex_pos: Vec<Vec<i64>> =
                complex.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
            assert_eq!(complex_pos, ambient_pos, "complex:{t}");
            assert!(complex.positive_roots().iter().all(|r| r.multiplicity == 2));
        }
    }

    #[test]
    fn so_nearly_split_shape() {
        let r = rrs("so(l-1,l+1):5");
        assert_eq!(r.restricted_rank, 4);
        assert!(r.reduced);
        // B4 shape: 16 positive roots; short roots have multiplicity 2.
        assert_eq!(r.positive_roots().len(), 16);
        let shorts: Vec<_> = r
            .positive_roots()
            .iter()
            .filter(|x| r.inner(&x.coeffs, &x.coeffs).unwrap() < Rat::from_integer(2))
            .collect();
        assert_eq!(shorts.len(), 4);
        assert!(shorts.iter().all(|x| x.multiplicity == 2));
        assert_eq!(r.dim_n(), 4 * 5);
    }

    #[test]
    fn e6_quasi_is_f4_shape() {
        let d = satake_of(&RealFormId::E6Quasi).unwrap();
        assert_eq!(r_invariant(&d), 2);
        let r = restrict(&d).unwrap();
        assert_eq!(r.restricted_rank, 4);
        assert_eq!(r.positive_roots().len(), 24);
        assert_eq!(r.dim_n(), 12 + 24);
        assert_eq!(r.dim_m(), 2);
        assert!(multipliable_roots(&r).is_empty());
    }

    #[test]
    fn black_nodes_rejected() {
        // su(1,3)-style control: A3 with a black middle node and end arrow.
        let t = CartanType::new(Series::A, 3).unwrap();
        let d = SatakeDiagram::assemble(
            vec![t],
            vec![NodeColor::White, NodeColor::Black, NodeColor::White],
            vec![2, 1, 0],
        )
        .unwrap();
        assert!(!is_m_abelian(&d));
        assert_eq!(r_invariant(&d), 0);
        assert!(matches!(restrict(&d), Err(Error::UnsupportedDiagram)));
    }

    #[test]
    fn dim_consistency_across_enumeration() {
        for id in enumerate_abelian_levi_forms(8) {
            let r = rrs(&id.to_string());
            let dim_g = id.algebra_dim();
            assert_eq!(
                dim_g,
                r.dim_m() + r.dim_a() + 2 * r.dim_n(),
                "dim bookkeeping for {id}"
            );
        }
    }

    #[test]
    fn r_invariant_matches_case_formulas() {
        for id in enumerate_abelian_levi_forms(8) {
            let d = satake_of(&id).unwrap();
            let r = r_invariant(&d);
            let expected = match &id {
                RealFormId::Split(t) => t.rank,
                RealFormId::Complex(_) => 0,
                RealFormId::SuNearly { .. } => 0,
                RealFormId::SuEqual { .. } => 1,
                RealFormId::SoNearly { l } => l - 2,
                RealFormId::E6Quasi => 2,
            };
            assert_eq!(r, expected, "r for {id}");
            assert!(is_m_abelian(&d));
        }
    }

    #[test]
    fn enumeration_includes_expected_forms() {
        let forms = enumerate_abelian_levi_forms(8);
        let strings: Vec<String> = forms.iter().map(|f| f.to_string()).collect();
        for wanted in ["split:G2", "split:E8", "complex:A1", "su(4,5)", "e6(a1a5)"] {
            assert!(strings.contains(&wanted.to_string()), "{wanted}");
        }
        // Deduplicated coincidences: no su(1,1), no split:C2.
        assert!(!strings.contains(&"su(1,1)".to_string()));
        assert!(!strings.contains(&"split:C2".to_string()));
        // No duplicates at all.
        let set: BTreeSet<_> = strings.iter().collect();
        assert_eq!(set.len(), strings.len());
    }
}
