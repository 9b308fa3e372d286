//! The maximal strongly orthogonal cascade β_1 … β_m and the layer
//! decomposition of the nilradical.
//!
//! β_1 is the highest positive restricted root and β_{r+1} is a maximum among
//! the positive roots orthogonal to β_1, …, β_r.  When the orthogonal
//! complement splits into several irreducible pieces there are incomparable
//! maximal candidates; the canonical choice here takes the candidate of
//! smallest height (largest lexicographically on ties), which reproduces the
//! classical tables: for B/D shapes the short A1 factor ψ_{r-1} comes before
//! the next long chain, and for E7/E8 the lone ψ_7 precedes the D4 block.
//!
//! Layers are computed twice, from the difference definition
//! Δ⁺_r = {α : β_r − α ∈ Δ⁺, α unassigned} and independently from the
//! orthogonality/positivity definition {α : α ⊥ β_i (i<r), ⟨α,β_r⟩ > 0},
//! so the two can be diffed against each other.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigUint;
use num::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root::Rat;
use crate::satake::{RestrictedRoot, RestrictedRootSystem};

/// Full combinatorial data of the decomposition N = L_1 L_2 … L_m.
#[derive(Debug, Clone)]
pub struct CascadeDecomposition {
    pub betas: Vec<RestrictedRoot>,
    /// Δ⁺_r excluding β_r, including ½β_r when β_r is divisible.
    pub layers: Vec<Vec<RestrictedRoot>>,
    /// dim l_r, multiplicity-weighted.
    pub dim_l: Vec<usize>,
    /// dim z_r = dim g_{β_r} = mult(β_r).
    pub dim_z: Vec<usize>,
    /// d_r = dim(l_r/z_r)/2.
    pub d: Vec<usize>,
    /// c = 2^{d_1+…+d_m} d_1! … d_m!.
    pub c: BigUint,
    pub dim_n: usize,
    pub dim_s: usize,
}

impl CascadeDecomposition {
    pub fn m(&self) -> usize {
        self.betas.len()
    }
}

fn is_orthogonal(rrs: &RestrictedRootSystem, a: &[i64], b: &[i64]) -> bool {
    rrs.inner(a, b).map(|v| v == Rat::from_integer(0)).unwrap_or(false)
}

/// Greedy strongly orthogonal cascade.
pub fn cascade_roots(rrs: &RestrictedRootSystem) -> Result<Vec<RestrictedRoot>> {
    let mut chosen: Vec<RestrictedRoot> = Vec::new();
    loop {
        let candidates: Vec<&RestrictedRoot> = rrs
            .positive_roots()
            .iter()
            .filter(|r| chosen.iter().all(|b| is_orthogonal(rrs, &r.coeffs, &b.coeffs)))
            .collect();
        if candidates.is_empty() {
            break;
        }
        let maximal: Vec<&RestrictedRoot> = candidates
            .iter()
            .filter(|r| {
                candidates
                    .iter()
                    .all(|other| r.coeffs == other.coeffs || !r.le_coefficientwise(other))
            })
            .copied()
            .collect();
        if maximal.is_empty() {
            return Err(Error::CascadeAmbiguity(candidates.len()));
        }
        let pick = maximal
            .iter()
            .min_by(|a, b| {
                a.height()
                    .cmp(&b.height())
                    .then_with(|| b.coeffs.cmp(&a.coeffs))
            })
            .unwrap();
        chosen.push((*pick).clone());
    }
    Ok(chosen)
}

fn positive_difference(rrs: &RestrictedRootSystem, beta: &[i64], alpha: &[i64]) -> bool {
    let diff: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - a).collect();
    diff.iter().any(|c| *c != 0) && diff.iter().all(|c| *c >= 0) && rrs.is_root(&diff)
}

/// Layer sets by the difference definition, assigned in cascade order.
pub fn layers(rrs: &RestrictedRootSystem, betas: &[RestrictedRoot]) -> Vec<Vec<RestrictedRoot>> {
    let mut assigned: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out = Vec::with_capacity(betas.len());
    for beta in betas {
        let layer: Vec<RestrictedRoot> = rrs
            .positive_roots()
            .iter()
            .filter(|a| !assigned.contains(&a.coeffs) && positive_difference(rrs, &beta.coeffs, &a.coeffs))
            .cloned()
            .collect();
        for a in &layer {
            assigned.insert(a.coeffs.clone());
        }
        out.push(layer);
    }
    out
}

/// Layer sets by the orthogonality/positivity definition.
pub fn layers_alt(rrs: &RestrictedRootSystem, betas: &[RestrictedRoot]) -> Vec<Vec<RestrictedRoot>> {
    let mut out = Vec::with_capacity(betas.len());
    for (r, beta) in betas.iter().enumerate() {
        let layer: Vec<RestrictedRoot> = rrs
            .positive_roots()
            .iter()
            .filter(|a| {
                a.coeffs != beta.coeffs
                    && betas[..r].iter().all(|b| is_orthogonal(rrs, &a.coeffs, &b.coeffs))
                    && rrs
                        .inner(&a.coeffs, &beta.coeffs)
                        .map(|v| v > Rat::from_integer(0))
                        .unwrap_or(false)
            })
            .cloned()
            .collect();
        out.push(layer);
    }
    out
}

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// d_r = dim(l_r/z_r)/2 for every layer, and c = 2^{Σd} Π d_r!.
pub fn dims_and_c(dim_l: &[usize], dim_z: &[usize]) -> Result<(Vec<usize>, BigUint)> {
    let mut d = Vec::with_capacity(dim_l.len());
    for (r, (&l, &z)) in dim_l.iter().zip(dim_z).enumerate() {
        let diff = l - z;
        if diff % 2 != 0 {
            return Err(Error::integrity(
                "dims_and_c",
                format!("layer {} has odd dim(l/z) = {}", r + 1, diff),
            ));
        }
        d.push(diff / 2);
    }
    let total: usize = d.iter().sum();
    let mut c = BigUint::from(2usize).pow(total as u32);
    for &dr in &d {
        c *= factorial(dr);
    }
    Ok((d, c))
}

/// Run the whole cascade pipeline on a restricted system.
pub fn decompose(rrs: &RestrictedRootSystem) -> Result<CascadeDecomposition> {
    let betas = cascade_roots(rrs)?;
    let layers = layers(rrs, &betas);
    let dim_z: Vec<usize> = betas.iter().map(|b| b.multiplicity).collect();
    let dim_l: Vec<usize> = layers
        .iter()
        .zip(&dim_z)
        .map(|(layer, z)| z + layer.iter().map(|a| a.multiplicity).sum::<usize>())
        .collect();
    let (d, c) = dims_and_c(&dim_l, &dim_z)?;
    let dim_n = dim_l.iter().sum();
    let dim_s = dim_z.iter().sum();
    Ok(CascadeDecomposition {
        betas,
        layers,
        dim_l,
        dim_z,
        d,
        c,
        dim_n,
        dim_s,
    })
}

/// The Heisenberg pairs (α, β_r − α) of one layer, self-pair listed once.
pub fn heisenberg_pairs(
    beta: &RestrictedRoot,
    layer: &[RestrictedRoot],
) -> Vec<(RestrictedRoot, RestrictedRoot)> {
    let by_coeffs: BTreeMap<&Vec<i64>, &RestrictedRoot> =
        layer.iter().map(|a| (&a.coeffs, a)).collect();
    let mut pairs = Vec::new();
    for a in layer {
        let partner: Vec<i64> = beta.coeffs.iter().zip(&a.coeffs).map(|(b, x)| b - x).collect();
        if a.coeffs <= partner {
            if let Some(p) = by_coeffs.get(&partner) {
                pairs.push((a.clone(), (*p).clone()));
            }
        }
    }
    pairs
}

/// A linear functional on a, written in ψ-coordinates on a* with exact
/// rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFunctionalOnA(pub Vec<Rat>);

impl LinearFunctionalOnA {
    pub fn from_integers(v: &[i64]) -> Self {
        LinearFunctionalOnA(v.iter().map(|c| Rat::from_integer(*c)).collect())
    }

    /// Pairing with a coordinate vector of a (dual bases).
    pub fn evaluate(&self, xi: &[Rat]) -> Rat {
        self.0
            .iter()
            .zip(xi)
            .map(|(a, b)| *a * *b)
            .fold(Rat::from_integer(0), |acc, x| acc + x)
    }
}

/// Modular data of Det∘Ad on the nilradical.
#[derive(Debug, Clone, Serialize)]
pub struct ModularWeights {
    /// e_r = (dim l_r + dim z_r)/2, one per layer.
    pub exponents: Vec<i64>,
    /// Σ_r e_r β_r in ψ-coordinates (= sum of positive roots with multiplicity).
    pub weight: Vec<i64>,
    /// The per-layer vector identity Σ_{Δ⁺_r ∪ {β_r}} mult(α)·α = e_r β_r.
    pub identity_ok: bool,
}

impl ModularWeights {
    /// The weight of the modular function as a functional on a.
    pub fn weight_functional(&self) -> LinearFunctionalOnA {
        LinearFunctionalOnA::from_integers(&self.weight)
    }
}

/// Exponents of the modular function and the per-layer trace identity.
pub fn modular_weights(decomp: &CascadeDecomposition) -> Result<ModularWeights> {
    let mut exponents = Vec::with_capacity(decomp.m());
    let rank = decomp
        .betas
        .first()
        .map(|b| b.coeffs.len())
        .unwrap_or_default();
    let mut weight = vec![0i64; rank];
    let mut identity_ok = true;
    for r in 0..decomp.m() {
        let num = decomp.dim_l[r] + decomp.dim_z[r];
        if !num.is_multiple_of(2) {
            return Err(Error::integrity(
                "modular_weights",
                format!("layer {}: (dim l + dim z) = {} is odd", r + 1, num),
            ));
        }
        let e = (num / 2) as i64;
        exponents.push(e);
        // Sum of all roots of the layer, with multiplicity.
        let mut sum = vec![0i64; rank];
        for (i, c) in decomp.betas[r].coeffs.iter().enumerate() {
            sum[i] += (decomp.dim_z[r] as i64) * c;
        }
        for a in &decomp.layers[r] {
            for (i, c) in a.coeffs.iter().enumerate() {
                sum[i] += (a.multiplicity as i64) * c;
            }
        }
        let expected: Vec<i64> = decomp.betas[r].coeffs.iter().map(|c| e * c).collect();
        if sum != expected {
            identity_ok = false;
        }
        for (i, c) in expected.iter().enumerate() {
            weight[i] += c;
        }
    }
    Ok(ModularWeights {
        exponents,
        weight,
        identity_ok,
    })
}

/// Degree of the Dixmier–Pukánszky operator: (dim n + dim s)/2.
pub fn dp_degree(decomp: &CascadeDecomposition) -> Result<usize> {
    let total = decomp.dim_n + decomp.dim_s;
    if !total.is_multiple_of(2) {
        return Err(Error::integrity(
            "dp_degree",
            format!("dim n + dim s = {total} is odd"),
        ));
    }
    Ok(total / 2)
}

/// One named structural check with the witnesses that violate it.
#[derive(Debug, Clone, Serialize)]
pub struct SetupCheck {
    pub name: String,
    pub ok: bool,
    pub witnesses: Vec<String>,
}

/// Result of the root-combinatorics verification of the layer setup.
#[derive(Debug, Clone, Serialize)]
pub struct SetupReport {
    pub checks: Vec<SetupCheck>,
}

impl SetupReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Check, at the level of root sums, the bracket requirements of the
/// decomposition: centers bracket to zero with later layers, layer brackets
/// avoid every g_{β_t}, the pairing involution α ↦ β_r − α preserves each
/// layer with multiplicity, and the partial sums n_r are ideals.
pub fn verify_setup(decomp: &CascadeDecomposition, rrs: &RestrictedRootSystem) -> SetupReport {
    let m = decomp.m();
    let beta_set: BTreeSet<&Vec<i64>> = decomp.betas.iter().map(|b| &b.coeffs).collect();
    let mut layer_of: BTreeMap<&Vec<i64>, usize> = BTreeMap::new();
    for (r, layer) in decomp.layers.iter().enumerate() {
        for a in layer {
            layer_of.insert(&a.coeffs, r);
        }
    }
    for (r, b) in decomp.betas.iter().enumerate() {
        layer_of.insert(&b.coeffs, r);
    }
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };

    let mut checks = Vec::new();

    // (i) [l_r, z_s] = 0 for r > s: α + β_s is never a restricted root.
    let mut witnesses = Vec::new();
    for r in 0..m {
        for s in 0..r {
            let members = decomp.layers[r]
                .iter()
                .chain(std::iter::once(&decomp.betas[r]));
            for a in members {
                let sum = add(&a.coeffs, &decomp.betas[s].coeffs);
                if rrs.is_root(&sum) {
                    witnesses.push(format!("layer {} root {} + β_{}", r + 1, a, s + 1));
                }
            }
        }
    }
    checks.push(SetupCheck {
        name: "center-brackets-vanish".into(),
        ok: witnesses.is_empty(),
        witnesses,
    });

    // (ii) [l_r, l_s] ⊂ v for r > s: sums that are roots avoid every β_t.
    let mut witnesses = Vec::new();
    for r in 0..m {
        for s in 0..r {
            let from_r: Vec<&RestrictedRoot> = decomp.layers[r]
                .iter()
                .chain(std::iter::once(&decomp.betas[r]))
                .collect();
            for a in &from_r {
                for g in &decomp.layers[s] {
                    let sum = add(&a.coeffs, &g.coeffs);
                    if rrs.is_root(&sum)
                        && (beta_set.contains(&sum) || !layer_of.contains_key(&sum)) {
                            witnesses.push(format!(
                                "{} (layer {}) + {} (layer {}) = {:?}",
                                a,
                                r + 1,
                                g,
                                s + 1,
                                sum
                            ));
                        }
                }
            }
        }
    }
    checks.push(SetupCheck {
        name: "layer-brackets-in-v".into(),
        ok: witnesses.is_empty(),
        witnesses,
    });

    // (iii) pairing involution α ↦ β_r − α inside each layer.
    let mut witnesses = Vec::new();
    for (r, layer) in decomp.layers.iter().enumerate() {
        let in_layer: BTreeMap<&Vec<i64>, usize> =
            layer.iter().map(|a| (&a.coeffs, a.multiplicity)).collect();
        for a in layer {
            let partner: Vec<i64> = decomp.betas[r]
                .coeffs
                .iter()
                .zip(&a.coeffs)
                .map(|(b, x)| b - x)
                .collect();
            match in_layer.get(&partner) {
                Some(&mult) if mult == a.multiplicity => {}
                Some(_) => witnesses.push(format!("layer {}: multiplicity mismatch at {}", r + 1, a)),
                None => witnesses.push(format!("layer {}: {} has no partner", r + 1, a)),
            }
        }
    }
    checks.push(SetupCheck {
        name: "pairing-involution".into(),
        ok: witnesses.is_empty(),
        witnesses,
    });

    // (iv) each n_r = l_1 + … + l_r is an ideal of n.
    let mut witnesses = Vec::new();
    for r in 0..m {
        for a in rrs.positive_roots() {
            for g in decomp
                .layers
                .iter()
                .take(r + 1)
                .flatten()
                .chain(decomp.betas.iter().take(r + 1))
            {
                let sum = add(&a.coeffs, &g.coeffs);
                if rrs.is_root(&sum) {
                    let t = layer_of.get(&sum).copied();
                    if t.map(|t| t > r).unwrap_or(true) {
                        witnesses.push(format!("n_{}: {} + {} escapes", r + 1, a, g));
                    }
                }
            }
        }
    }
    checks.push(SetupCheck {
        name: "filtration-ideals".into(),
        ok: witnesses.is_empty(),
        witnesses,
    });

    // Partition: layers ⊔ {β_r} exhaust the positive roots exactly.
    let mut witnesses = Vec::new();
    let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for x in decomp.layers.iter().flatten().chain(decomp.betas.iter()) {
        *seen.entry(x.coeffs.clone()).or_insert(0) += 1;
    }
    for p in rrs.positive_roots() {
        match seen.get(&p.coeffs) {
            Some(1) => {}
            Some(k) => witnesses.push(format!("{} assigned {} times", p, k)),
            None => witnesses.push(format!("{} unassigned", p)),
        }
    }
    if seen.len() != rrs.positive_roots().len() {
        witnesses.push("assignment contains non-roots".into());
    }
    checks.push(SetupCheck {
        name: "layer-partition".into(),
        ok: witnesses.is_empty(),
        witnesses,
    });

    SetupReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::{enumerate_abelian_levi_forms, restrict, satake_of, RealFormId};

    fn decomp_of(id: &str) -> (RestrictedRootSystem, CascadeDecomposition) {
        let rrs = restrict(&satake_of(&RealFormId::parse(id).unwrap()).unwrap()).unwrap();
        let d = decompose(&rrs).unwrap();
        (rrs, d)
    }

    fn beta_vecs(d: &CascadeDecomposition) -> Vec<Vec<i64>> {
        d.betas.iter().map(|b| b.coeffs.clone()).collect()
    }

    #[test]
    fn split_c4_cascade() {
        let (_, d) = decomp_of("split:C4");
        assert_eq!(
            beta_vecs(&d),
            vec![
                vec![2, 2, 2, 1],
                vec![0, 2, 2, 1],
                vec![0, 0, 2, 1],
                vec![0, 0, 0, 1],
            ]
        );
    }

    #[test]
    fn split_a4_cascade() {
        let (_, d) = decomp_of("split:A4");
        assert_eq!(beta_vecs(&d), vec![vec![1, 1, 1, 1], vec![0, 1, 1, 0]]);
        assert_eq!(d.d, vec![3, 1]);
        assert_eq!(d.c, BigUint::from(96usize));
    }

    #[test]
    fn split_e8_cascade_matches_tables() {
        let (_, d) = decomp_of("split:E8");
        assert_eq!(
            beta_vecs(&d),
            vec![
                vec![2, 3, 4, 6, 5, 4, 3, 2],
                vec![2, 2, 3, 4, 3, 2, 1, 0],
                vec![0, 1, 1, 2, 2, 2, 1, 0],
                vec![0, 0, 0, 0, 0, 0, 1, 0],
                vec![0, 1, 1, 2, 1, 0, 0, 0],
                vec![0, 1, 0, 0, 0, 0, 0, 0],
                vec![0, 0, 1, 0, 0, 0, 0, 0],
                vec![0, 0, 0, 0, 1, 0, 0, 0],
            ]
        );
        assert_eq!(d.d, vec![28, 16, 8, 0, 4, 0, 0, 0]);
        let sizes: Vec<usize> = d.dim_l.clone();
        assert_eq!(sizes, vec![57, 33, 17, 1, 9, 1, 1, 1]);
    }

    #[test]
    fn split_e7_layer_sizes() {
        let (_, d) = decomp_of("split:E7");
        assert_eq!(d.dim_l, vec![33, 17, 1, 9, 1, 1, 1]);
        assert_eq!(d.betas[2].coeffs, vec![0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(d.betas[4].coeffs, vec![0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(d.betas[6].coeffs, vec![0, 0, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn split_g2_layers_and_constants() {
        let (rrs, d) = decomp_of("split:G2");
        assert_eq!(beta_vecs(&d), vec![vec![3, 2], vec![1, 0]]);
        let layer1: Vec<Vec<i64>> = d.layers[0].iter().map(|a| a.coeffs.clone()).collect();
        assert_eq!(
            layer1,
            vec![vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1]]
        );
        assert!(d.layers[1].is_empty());
        assert_eq!(d.d, vec![2, 0]);
        assert_eq!(d.c, BigUint::from(8usize));

        let mw = modular_weights(&d).unwrap();
        assert_eq!(mw.exponents, vec![3, 1]);
        assert!(mw.identity_ok);
        // 3β_1 + β_2 = (10,6) = sum of all positive roots.
        assert_eq!(mw.weight, vec![10, 6]);
        let mut total = vec![0i64; 2];
        for p in rrs.positive_roots() {
            for (i, c) in p.coeffs.iter().enumerate() {
                total[i] += *c * p.multiplicity as i64;
            }
        }
        assert_eq!(mw.weight, total);

        assert_eq!(dp_degree(&d).unwrap(), 4);
        assert!(verify_setup(&d, &rrs).passed());
        // The two bracketed pairs of the G2 layer.
        let pairs = heisenberg_pairs(&d.betas[0], &d.layers[0]);
        assert_eq!(pairs.len(), 2);
    }

    #[test]
    fn split_b4_even_layers_are_bare_centers() {
        let (_, d) = decomp_of("split:B4");
        assert_eq!(
            beta_vecs(&d),
            vec![
                vec![1, 2, 2, 2],
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 2],
                vec![0, 0, 1, 0],
            ]
        );
        assert!(d.layers[1].is_empty());
        assert!(d.layers[3].is_empty());
        assert_eq!(d.dim_l, vec![11, 1, 3, 1]);
    }

    #[test]
    fn su23_divisible_layer() {
        let (rrs, d) = decomp_of("su(2,3)");
        assert_eq!(beta_vecs(&d), vec![vec![2, 2], vec![0, 2]]);
        // ½β_1 = ψ_1 + ψ_2 sits inside the first layer.
        assert!(d.layers[0].iter().any(|a| a.coeffs == vec![1, 1]));
        assert!(d.layers[1].iter().any(|a| a.coeffs == vec![0, 1]));
        assert_eq!(d.dim_l, vec![7, 3]);
        let mw = modular_weights(&d).unwrap();
        assert_eq!(mw.exponents, vec![4, 2]);
        assert!(mw.identity_ok);
        let report = verify_setup(&d, &rrs);
        assert!(report.passed(), "{report:?}");
        // Self-paired ½β_1.
        let pairs = heisenberg_pairs(&d.betas[0], &d.layers[0]);
        assert!(pairs.iter().any(|(a, b)| a == b && a.coeffs == vec![1, 1]));
    }

    #[test]
    fn weight_functional_evaluates_exactly() {
        let (_, d) = decomp_of("split:G2");
        let mw = modular_weights(&d).unwrap();
        let f = mw.weight_functional();
        // δ weight (10,6) against ξ = (1/2, -1/3).
        let xi = vec![Rat::new(1, 2), Rat::new(-1, 3)];
        assert_eq!(f.evaluate(&xi), Rat::new(3, 1));
    }

    #[test]
    fn complex_exponents_double_split() {
        let (_, ds) = decomp_of("split:A2");
        let (_, dc) = decomp_of("complex:A2");
        let ms = modular_weights(&ds).unwrap();
        let mc = modular_weights(&dc).unwrap();
        assert_eq!(ms.exponents, vec![2]);
        assert_eq!(mc.exponents, vec![4]);
    }

    #[test]
    fn layers_agree_with_alt_definition_everywhere() {
        for id in enumerate_abelian_levi_forms(8) {
            let rrs = restrict(&satake_of(&id).unwrap()).unwrap();
            let betas = cascade_roots(&rrs).unwrap();
            let a = layers(&rrs, &betas);
            let b = layers_alt(&rrs, &betas);
            assert_eq!(a, b, "layer definitions disagree for {id}");
        }
    }

    #[test]
    fn cascade_is_strongly_orthogonal_and_independent() {
        for id in enumerate_abelian_levi_forms(8) {
            let rrs = restrict(&satake_of(&id).unwrap()).unwrap();
            let betas = cascade_roots(&rrs).unwrap();
            for i in 0..betas.len() {
                for j in 0..i {
                    assert!(is_orthogonal(&rrs, &betas[i].coeffs, &betas[j].coeffs));
                    // Strong orthogonality: neither sum nor difference a root.
                    let sum: Vec<i64> = betas[i]
                        .coeffs
                        .iter()
                        .zip(&betas[j].coeffs)
                        .map(|(a, b)| a + b)
                        .collect();
                    let diff: Vec<i64> = betas[i]
                        .coeffs
                        .iter()
                        .zip(&betas[j].coeffs)
                        .map(|(a, b)| a - b)
                        .collect();
                    assert!(!rrs.is_root(&sum), "{id}");
                    assert!(!rrs.is_root(&diff), "{id}");
                }
            }
            // Linear independence over Q: Gram of the betas is diagonal with
            // nonzero entries, which suffices.
            for b in &betas {
                assert!(rrs.inner(&b.coeffs, &b.coeffs).unwrap() > Rat::from_integer(0));
            }
        }
    }

    #[test]
    fn setup_verifies_across_enumeration() {
        for id in enumerate_abelian_levi_forms(8) {
            let rrs = restrict(&satake_of(&id).unwrap()).unwrap();
            let d = decompose(&rrs).unwrap();
            let report = verify_setup(&d, &rrs);
            assert!(report.passed(), "setup checks failed for {id}: {report:?}");
            let mw = modular_weights(&d).unwrap();
            assert!(mw.identity_ok, "modular identity failed for {id}");
            dp_degree(&d).unwrap();
        }
    }
}
