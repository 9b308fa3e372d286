//! Integer Chevalley structure constants and the Pfaffian polynomial of the
//! layer decomposition, for split forms.
//!
//! Constants are fixed by the extraspecial-pair construction: positive roots
//! get a total order (height, then lexicographic), each non-simple positive
//! root γ names its extraspecial pair (ξ, γ−ξ) with ξ minimal, and
//! N_{ξ,γ−ξ} = p+1 > 0 where p is the length of the downward ξ-string
//! through γ−ξ.  Every other constant follows from the Jacobi identity and
//! the zero-sum relation N_{a,b}/(c,c) = N_{b,c}/(a,a) for a+b+c = 0.
//!
//! The bilinear form of a layer, `b_λ(x,y) = λ([x,y])` on l_r/z_r, has matrix
//! entries N_{α,γ} at pairs with α+γ = β_r, so its Pfaffian is an integer
//! multiple of λ_r^{d_r}.  The integer is computed by exact skew elimination
//! and cross-checked against a Bareiss determinant, Pf² = det.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::cascade::CascadeDecomposition;
use crate::error::{Error, Result};
use crate::root::{Rat, RootSystem};

/// Total order on positive roots used to pick extraspecial pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootOrder {
    HeightLex,
    /// Same height ordering, reversed lexicographic tie-break.  Used to check
    /// that only signs of the Pfaffian depend on the convention.
    HeightLexRev,
}

fn order_key(order: RootOrder, v: &[i64]) -> (i64, Vec<i64>) {
    let h: i64 = v.iter().sum();
    match order {
        RootOrder::HeightLex => (h, v.to_vec()),
        RootOrder::HeightLexRev => (h, v.iter().map(|c| -c).collect()),
    }
}

/// Structure constants N_{α,β} for all pairs of roots with α+β a root.
#[derive(Debug, Clone)]
pub struct StructureConstantTable {
    n_pos: BTreeMap<(Vec<i64>, Vec<i64>), i64>,
    gram: Vec<Vec<Rat>>,
    membership: std::collections::BTreeSet<Vec<i64>>,
}

impl StructureConstantTable {
    fn is_root(&self, v: &[i64]) -> bool {
        self.membership.contains(v)
    }

    fn norm(&self, v: &[i64]) -> Rat {
        crate::root::inner_with(&self.gram, v, v).expect("square norm")
    }

    /// N_{a,b} for roots of either sign; 0 when a+b is not a root.
    pub fn n(&self, a: &[i64], b: &[i64]) -> i64 {
        if !self.is_root(a) || !self.is_root(b) {
            return 0;
        }
        let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        if !self.is_root(&sum) {
            return 0;
        }
        let a_pos = a.iter().all(|c| *c >= 0);
        let b_pos = b.iter().all(|c| *c >= 0);
        match (a_pos, b_pos) {
            (true, true) => self.n_pos[&(a.to_vec(), b.to_vec())],
            (false, false) => {
                let na: Vec<i64> = a.iter().map(|c| -c).collect();
                let nb: Vec<i64> = b.iter().map(|c| -c).collect();
                -self.n_pos[&(na, nb)]
            }
            (true, false) => {
                // N_{u,-v} with u, v positive and u−v a root.
                let u = a;
                let v: Vec<i64> = b.iter().map(|c| -c).collect();
                let w = sum;
                if w.iter().all(|c| *c >= 0) {
                    // v + w = u
                    let val = Rat::from_integer(-self.n_pos[&(v.clone(), w.clone())])
                        * self.norm(&w)
                        / self.norm(u);
                    assert!(val.is_integer());
                    val.to_integer()
                } else {
                    // z + u = v with z = v − u positive
                    let z: Vec<i64> = w.iter().map(|c| -c).collect();
                    let val = Rat::from_integer(self.n_pos[&(z.clone(), u.to_vec())])
                        * self.norm(&z)
                        / self.norm(&v);
                    assert!(val.is_integer());
                    val.to_integer()
                }
            }
            (false, true) => -self.n(b, a),
        }
    }

    /// Number of stored positive ordered pairs.
    pub fn len(&self) -> usize {
        self.n_pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n_pos.is_empty()
    }
}

/// Length p of the downward a-string through b: max k with b − ka a root.
fn string_down(
    membership: &std::collections::BTreeSet<Vec<i64>>,
    a: &[i64],
    b: &[i64],
) -> i64 {
    let mut p = 0i64;
    loop {
        let down: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - (p + 1) * y).collect();
        if down.iter().any(|c| *c != 0) && membership.contains(&down) {
            p += 1;
        } else {
            return p;
        }
    }
}

/// Build the table with the default extraspecial order.
pub fn structure_constants(rs: &RootSystem) -> StructureConstantTable {
    structure_constants_with_order(rs, RootOrder::HeightLex)
}

pub fn structure_constants_with_order(rs: &RootSystem, order: RootOrder) -> StructureConstantTable {
    let membership: std::collections::BTreeSet<Vec<i64>> =
        rs.all_roots().iter().map(|r| r.0.clone()).collect();
    let mut table = StructureConstantTable {
        n_pos: BTreeMap::new(),
        gram: rs.gram().clone(),
        membership,
    };
    let mut positives: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
    positives.sort_by_key(|v| order_key(order, v));
    let pos_set: std::collections::BTreeSet<Vec<i64>> = positives.iter().cloned().collect();

    for gamma in &positives {
        let height: i64 = gamma.iter().sum();
        // Decompositions γ = α + β into positive roots, normalized α ⪯ β.
        let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for alpha in &positives {
            if alpha.iter().sum::<i64>() >= height {
                break;
            }
            let beta: Vec<i64> = gamma.iter().zip(alpha).map(|(g, a)| g - a).collect();
            if beta.iter().all(|c| *c >= 0)
                && pos_set.contains(&beta)
                && order_key(order, alpha) <= order_key(order, &beta)
            {
                pairs.push((alpha.clone(), beta));
            }
        }
        if pairs.is_empty() {
            continue;
        }
        pairs.sort_by_key(|(a, _)| order_key(order, a));
        let (xi, eta) = pairs[0].clone();
        let p = string_down(&table.membership, &xi, &eta);
        let n_extra = p + 1;
        table.n_pos.insert((xi.clone(), eta.clone()), n_extra);
        table.n_pos.insert((eta.clone(), xi.clone()), -n_extra);

        let neg_xi: Vec<i64> = xi.iter().map(|c| -c).collect();
        // N_{γ,−ξ} from the zero-sum relation on (ξ, η, −γ).
        let denom = Rat::from_integer(-n_extra) * table.norm(&eta) / table.norm(gamma);
        assert!(denom.is_integer() && denom != Rat::zero());
        let denom = denom.to_integer();

        for (alpha, beta) in pairs.iter().skip(1) {
            // Jacobi on (x_α, x_β, x_{−ξ}) projected to the η root space.
            let t2 = {
                let b_minus: Vec<i64> = beta.iter().zip(&xi).map(|(x, y)| x - y).collect();
                if table.is_root(&b_minus) {
                    table.n(beta, &neg_xi) * table.n(&b_minus, alpha)
                } else {
                    0
                }
            };
            let t3 = {
                let a_minus: Vec<i64> = alpha.iter().zip(&xi).map(|(x, y)| x - y).collect();
                if table.is_root(&a_minus) {
                    table.n(&neg_xi, alpha) * table.n(&a_minus, beta)
                } else {
                    0
                }
            };
            let num = -(t2 + t3);
            assert!(num % denom == 0, "non-integral structure constant");
            let val = num / denom;
            let expected = string_down(&table.membership, alpha, beta) + 1;
            assert_eq!(val.abs(), expected, "|N| must equal p+1");
            table.n_pos.insert((alpha.clone(), beta.clone()), val);
            table.n_pos.insert((beta.clone(), alpha.clone()), -val);
        }
    }
    table
}

/// Exhaustive root-level Jacobi identity check, Cartan terms included.
pub fn verify_jacobi(table: &StructureConstantTable, rs: &RootSystem) -> Result<()> {
    let roots: Vec<Vec<i64>> = rs.all_roots().iter().map(|r| r.0.clone()).collect();
    let idx: BTreeMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let k = roots.len();
    // Precompute pair sums as indices (usize::MAX = not a root, k = zero).
    let mut sum_idx = vec![usize::MAX; k * k];
    for i in 0..k {
        for j in 0..k {
            let s: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).collect();
            sum_idx[i * k + j] = if s.iter().all(|c| *c == 0) {
                k
            } else {
                idx.get(&s).copied().unwrap_or(usize::MAX)
            };
        }
    }
    let pairing = |x: usize, y: usize| -> i64 {
        // ⟨x, y∨⟩ = 2(x,y)/(y,y)
        let num = Rat::from_integer(2)
            * crate::root::inner_with(&table.gram, &roots[x], &roots[y]).unwrap();
        let v = num / table.norm(&roots[y]);
        assert!(v.is_integer());
        v.to_integer()
    };
    let n_of = |x: usize, y: usize, s: usize| -> i64 {
        if s == usize::MAX || s == k {
            0
        } else {
            table.n(&roots[x], &roots[y])
        }
    };
    for a in 0..k {
        for b in 0..k {
            let ab = sum_idx[a * k + b];
            for c in 0..k {
                let bc = sum_idx[b * k + c];
                let ca = sum_idx[c * k + a];
                // Only check triples whose total is a root.
                let total = if ab == usize::MAX {
                    continue;
                } else if ab == k {
                    Some(c)
                } else {
                    match sum_idx[ab * k + c] {
                        usize::MAX => None,
                        t => Some(t),
                    }
                };
                let Some(total) = total else { continue };
                if total == k {
                    continue;
                }
                let t1 = if ab == k {
                    pairing(c, a)
                } else {
                    n_of(a, b, ab) * n_of(ab, c, sum_idx[ab * k + c])
                };
                let t2 = if bc == k {
                    pairing(a, b)
                } else if bc == usize::MAX {
                    0
                } else {
                    n_of(b, c, bc) * n_of(bc, a, sum_idx[bc * k + a])
                };
                let t3 = if ca == k {
                    pairing(b, c)
                } else if ca == usize::MAX {
                    0
                } else {
                    n_of(c, a, ca) * n_of(ca, b, sum_idx[ca * k + b])
                };
                if t1 + t2 + t3 != 0 {
                    return Err(Error::integrity(
                        "jacobi",
                        format!(
                            "violated at {:?}, {:?}, {:?}",
                            roots[a], roots[b], roots[c]
                        ),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Pfaffian data of one layer: Pf(b_{λ_r}) = pf · λ_r^{degree}.
#[derive(Debug, Clone)]
pub struct LayerPfaffian {
    pub beta: Vec<i64>,
    pub pf: BigInt,
    pub degree: usize,
}

/// The product P(λ) = Pf(b_{λ_1}) … Pf(b_{λ_m}).
#[derive(Debug, Clone)]
pub struct PfaffianMonomial {
    pub layers: Vec<LayerPfaffian>,
}

impl PfaffianMonomial {
    /// Total scalar factor Π pf_r.
    pub fn scalar(&self) -> BigInt {
        self.layers.iter().fold(BigInt::one(), |acc, l| acc * &l.pf)
    }

    /// Rendering like `2·λ1^2·λ2^0`.
    pub fn polynomial_string(&self) -> String {
        let mut s = self.scalar().to_string();
        for (r, l) in self.layers.iter().enumerate() {
            s.push_str(&format!("·λ{}^{}", r + 1, l.degree));
        }
        s
    }
}

/// The antisymmetric integer matrix of one layer-form in the basis of the
/// layer's roots (lexicographic order).
pub fn layer_matrix(
    decomp: &CascadeDecomposition,
    table: &StructureConstantTable,
    r: usize,
) -> Vec<Vec<BigInt>> {
    let basis: Vec<&Vec<i64>> = decomp.layers[r].iter().map(|a| &a.coeffs).collect();
    let beta = &decomp.betas[r].coeffs;
    let k = basis.len();
    let mut m = vec![vec![BigInt::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let sum: Vec<i64> = basis[i].iter().zip(basis[j]).map(|(a, b)| a + b).collect();
            if &sum == beta {
                m[i][j] = BigInt::from(table.n(basis[i], basis[j]));
            }
        }
    }
    m
}

/// Exact Pfaffians of all layer forms of a split decomposition.
pub fn pfaffian(
    decomp: &CascadeDecomposition,
    table: &StructureConstantTable,
) -> Result<PfaffianMonomial> {
    for b in &decomp.betas {
        if b.multiplicity != 1 {
            return Err(Error::integrity(
                "pfaffian",
                "layer Pfaffians are only defined for split forms (all multiplicities 1)",
            ));
        }
    }
    let mut layers = Vec::with_capacity(decomp.m());
    for r in 0..decomp.m() {
        let m = layer_matrix(decomp, table, r);
        let pf = pfaffian_exact(&m);
        if pf.is_zero() && !m.is_empty() {
            return Err(Error::PfaffianZero { layer: r + 1 });
        }
        let degree = decomp.layers[r].len() / 2;
        if degree != decomp.d[r] {
            return Err(Error::integrity(
                "pfaffian",
                format!("layer {}: degree {} but cascade d_r = {}", r + 1, degree, decomp.d[r]),
            ));
        }
        layers.push(LayerPfaffian {
            beta: decomp.betas[r].coeffs.clone(),
            pf,
            degree,
        });
    }
    Ok(PfaffianMonomial { layers })
}

/// Exact Pfaffian of an antisymmetric integer matrix by skew elimination.
pub fn pfaffian_exact(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if !n.is_multiple_of(2) {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut result = BigRational::one();
    let mut k = 0;
    while k < n {
        // Pivot: some j > k with m[k][j] ≠ 0, moved to position k+1.
        let Some(j) = ((k + 1)..n).find(|&j| !m[k][j].is_zero()) else {
            return BigInt::zero();
        };
        if j != k + 1 {
            m.swap(j, k + 1);
            for row in m.iter_mut() {
                row.swap(j, k + 1);
            }
            result = -result;
        }
        let pivot = m[k][k + 1].clone();
        for i in (k + 2)..n {
            if m[k][i].is_zero() {
                continue;
            }
            let f = &m[k][i] / &pivot;
            let pivot_row = m[k + 1].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
            for row in m.iter_mut() {
                let delta = &f * &row[k + 1];
                row[i] -= delta;
            }
        }
        result *= pivot;
        k += 2;
    }
    assert!(result.is_integer(), "Pfaffian of an integer matrix is integral");
    result.to_integer()
}

/// Fraction-free Bareiss determinant, used as the independent route for the
/// Pf² = det cross-check.
pub fn bareiss_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(j) = ((k + 1)..n).find(|&j| !m[j][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, j);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
