//! The finite 2-groups that appear as component/free factors of the Levi
//! subgroup: D_n in a Clifford-algebra model and W_4, W_6, W_7, W_8 in
//! unitary monomial-matrix models.
//!
//! Every group is materialized as an explicit element list with an exact
//! multiplication table, so profiles (derived subgroup, center, conjugacy
//! classes, abelianization, irreducible degrees) are computed by direct
//! enumeration.  Character degrees come from the sum-of-squares completion
//! over powers of two; if that were ever ambiguous an exact class-algebra
//! solver over F_p (Dixon style) resolves them.
//!
//! The W_8 case needs care: the printed generator recipe W_8 = W_7 ∪ τW_7
//! closes to W_7 itself because τ already lies in U_7.  The group shipped
//! here is an explicit extraspecial model of order 2^9 (central product of
//! four dihedral factors acting on C^16) realizing the documented profile;
//! the collapse of the printed recipe is machine-checked and reported.

use std::collections::{BTreeMap, BTreeSet};

use num::complex::Complex;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::{Error, Result};

const CLOSURE_CAP: usize = 1 << 10;

/// ±(product of distinct Clifford generators), support as a bitmask.
/// Multiplication follows e_i e_j = −e_j e_i (i ≠ j) and e_i² = −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CliffordElement {
    pub negative: bool,
    pub support: u64,
}

impl CliffordElement {
    pub fn one() -> Self {
        CliffordElement {
            negative: false,
            support: 0,
        }
    }

    pub fn generator_pair(i: usize, j: usize) -> Self {
        CliffordElement {
            negative: false,
            support: (1 << i) | (1 << j),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Transpositions needed to merge the sorted supports, then one −1
        // per repeated index.
        let mut inversions = 0u32;
        let mut b = other.support;
        while b != 0 {
            let bit = b.trailing_zeros();
            inversions += (self.support >> (bit + 1)).count_ones();
            b &= b - 1;
        }
        let repeats = (self.support & other.support).count_ones();
        let negative =
            self.negative ^ other.negative ^ ((inversions + repeats) % 2 == 1);
        CliffordElement {
            negative,
            support: self.support ^ other.support,
        }
    }
}

/// A monomial unitary matrix: `g·e_j = i^phase[j] e_perm[j]`, entries in
/// {±1, ±i}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    pub perm: Vec<u8>,
    /// Powers of i, mod 4.
    pub phase: Vec<u8>,
}

impl Monomial {
    pub fn identity(dim: usize) -> Self {
        Monomial {
            perm: (0..dim as u8).collect(),
            phase: vec![0; dim],
        }
    }

    pub fn diagonal(phases: &[u8]) -> Self {
        Monomial {
            perm: (0..phases.len() as u8).collect(),
            phase: phases.to_vec(),
        }
    }

    pub fn permutation(perm: &[u8]) -> Self {
        Monomial {
            perm: perm.to_vec(),
            phase: vec![0; perm.len()],
        }
    }

    pub fn scalar(dim: usize, power_of_i: u8) -> Self {
        Monomial {
            perm: (0..dim as u8).collect(),
            phase: vec![power_of_i % 4; dim],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let dim = self.perm.len();
        let mut perm = vec![0u8; dim];
        let mut phase = vec![0u8; dim];
        for j in 0..dim {
            let mid = other.perm[j] as usize;
            perm[j] = self.perm[mid];
            phase[j] = (other.phase[j] + self.phase[mid]) % 4;
        }
        Monomial { perm, phase }
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, p)| *p as usize == j)
    }

    /// Matrix trace as a Gaussian integer.
    pub fn trace(&self) -> Complex<i64> {
        self.trace_over(0..self.perm.len())
    }

    pub fn trace_over(&self, coords: impl IntoIterator<Item = usize>) -> Complex<i64> {
        let mut acc = Complex::new(0, 0);
        for j in coords {
            if self.perm[j] as usize == j {
                acc += i_power(self.phase[j]);
            }
        }
        acc
    }
}

fn i_power(k: u8) -> Complex<i64> {
    match k % 4 {
        0 => Complex::new(1, 0),
        1 => Complex::new(0, 1),
        2 => Complex::new(-1, 0),
        _ => Complex::new(0, -1),
    }
}

/// Concrete element list backing a finite group.
#[derive(Debug, Clone)]
pub enum Realization {
    Clifford { n: usize, elements: Vec<CliffordElement> },
    Monomial { dim: usize, elements: Vec<Monomial> },
}

impl Realization {
    pub fn len(&self) -> usize {
        match self {
            Realization::Clifford { elements, .. } => elements.len(),
            Realization::Monomial { elements, .. } => elements.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A finite group with exact multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub label: String,
    order: usize,
    mult: Vec<u16>,
    inverse: Vec<u16>,
    identity: u16,
    pub generators: Vec<u16>,
    pub realization: Realization,
    pub notes: Vec<String>,
}

fn close<T: Clone + Ord>(gens: &[T], identity: T, mul: impl Fn(&T, &T) -> T) -> Result<Vec<T>> {
    let mut set: BTreeSet<T> = BTreeSet::new();
    set.insert(identity);
    let mut frontier: Vec<T> = Vec::new();
    for g in gens {
        if set.insert(g.clone()) {
            frontier.push(g.clone());
        }
    }
    while let Some(x) = frontier.pop() {
        let snapshot: Vec<T> = set.iter().cloned().collect();
        for y in &snapshot {
            for z in [mul(&x, y), mul(y, &x)] {
                if set.insert(z.clone()) {
                    frontier.push(z);
                }
            }
        }
        if set.len() > CLOSURE_CAP {
            return Err(Error::Group(format!(
                "closure exceeded {CLOSURE_CAP} elements; model mismatch"
            )));
        }
    }
    Ok(set.into_iter().collect())
}

impl FiniteGroup {
    fn build<T: Clone + Ord>(
        label: &str,
        elements: Vec<T>,
        gens: &[T],
        mul: impl Fn(&T, &T) -> T,
        wrap: impl Fn(Vec<T>) -> Realization,
    ) -> Result<Self> {
        let order = elements.len();
        let index: BTreeMap<&T, u16> = elements.iter().zip(0u16..).collect();
        let mut mult = vec![0u16; order * order];
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let z = mul(x, y);
                let k = *index
                    .get(&z)
                    .ok_or_else(|| Error::Group("product escaped element set".into()))?;
                mult[i * order + j] = k;
            }
        }
        let mut identity = None;
        for i in 0..order {
            if (0..order).all(|j| mult[i * order + j] == j as u16) {
                identity = Some(i as u16);
                break;
            }
        }
        let identity = identity.ok_or_else(|| Error::Group("no identity".into()))?;
        let mut inverse = vec![0u16; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| mult[i * order + j] == identity)
                .ok_or_else(|| Error::Group("missing inverse".into()))?;
            inverse[i] = j as u16;
        }
        let generators = gens.iter().map(|g| *index.get(g).unwrap()).collect();
        Ok(FiniteGroup {
            label: label.to_string(),
            order,
            mult,
            inverse,
            identity,
            generators,
            realization: wrap(elements),
            notes: Vec::new(),
        })
    }

    pub fn from_clifford(label: &str, n: usize, gens: Vec<CliffordElement>) -> Result<Self> {
        let elements = close(&gens, CliffordElement::one(), CliffordElement::mul)?;
        Self::build(label, elements, &gens, CliffordElement::mul, |elements| {
            Realization::Clifford { n, elements }
        })
    }

    pub fn from_monomial(label: &str, dim: usize, gens: Vec<Monomial>) -> Result<Self> {
        let elements = close(&gens, Monomial::identity(dim), Monomial::mul)?;
        Self::build(label, elements, &gens, Monomial::mul, |elements| {
            Realization::Monomial { dim, elements }
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, i: u16, j: u16) -> u16 {
        self.mult[i as usize * self.order + j as usize]
    }

    pub fn inv(&self, i: u16) -> u16 {
        self.inverse[i as usize]
    }

    pub fn identity(&self) -> u16 {
        self.identity
    }

    pub fn element_order(&self, i: u16) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// Conjugacy classes as sorted index lists; classes sorted by minimum.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u16>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for i in 0..self.order as u16 {
            if seen[i as usize] {
                continue;
            }
            let mut class = BTreeSet::new();
            for g in 0..self.order as u16 {
                let c = self.mul(self.mul(g, i), self.inv(g));
                class.insert(c);
            }
            for &c in &class {
                seen[c as usize] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// The derived subgroup as a sorted index list.
    pub fn derived_subgroup(&self) -> Vec<u16> {
        let mut gens: BTreeSet<u16> = BTreeSet::new();
        for a in 0..self.order as u16 {
            for b in 0..self.order as u16 {
                let c = self.mul(
                    self.mul(a, b),
                    self.mul(self.inv(a), self.inv(b)),
                );
                gens.insert(c);
            }
        }
        // Commutators already form a subgroup for these tiny groups, but
        // close anyway.
        let mut set: BTreeSet<u16> = gens.clone();
        set.insert(self.identity);
        loop {
            let snapshot: Vec<u16> = set.iter().copied().collect();
            let before = set.len();
            for &x in &snapshot {
                for &y in &snapshot {
                    set.insert(self.mul(x, y));
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.into_iter().collect()
    }

    pub fn center(&self) -> Vec<u16> {
        (0..self.order as u16)
            .filter(|&z| (0..self.order as u16).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Multiplication table of the quotient by a normal subgroup, as coset
    /// classes.  Returns (coset of each element, quotient table).
    fn quotient(&self, normal: &[u16]) -> (Vec<usize>, Vec<Vec<usize>>) {
        let nset: BTreeSet<u16> = normal.iter().copied().collect();
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps: Vec<u16> = Vec::new();
        for i in 0..self.order as u16 {
            if coset_of[i as usize] != usize::MAX {
                continue;
            }
            let id = reps.len();
            for &n in &nset {
                coset_of[self.mul(i, n) as usize] = id;
            }
            reps.push(i);
        }
        let k = reps.len();
        let mut table = vec![vec![0usize; k]; k];
        for a in 0..k {
            for b in 0..k {
                table[a][b] = coset_of[self.mul(reps[a], reps[b]) as usize];
            }
        }
        (coset_of, table)
    }
}

/// Numeric profile of a finite 2-group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub order: usize,
    pub derived_order: usize,
    /// Invariant factors of `G/[G,G]`, largest first (`[2,2,2,2]` = Z_2^4).
    pub abelianization: Vec<usize>,
    pub center_order: usize,
    pub class_count: usize,
    /// degree → number of irreducibles of that degree.
    pub degrees: BTreeMap<usize, usize>,
}

impl GroupProfile {
    pub fn sum_of_squares(&self) -> usize {
        self.degrees.iter().map(|(d, k)| d * d * k).sum()
    }

    pub fn linear_count(&self) -> usize {
        self.degrees.get(&1).copied().unwrap_or(0)
    }
}

/// Invariant factors of an abelian 2-group given by a multiplication table.
/// Uses the order statistics: #{x : x^{2^k} = 1} = 2^{Σ_i min(λ_i, k)}
/// determines the partition λ with A ≅ Π Z_{2^{λ_i}}.
fn abelian_invariants(table: &[Vec<usize>]) -> Vec<usize> {
    let n = table.len();
    if n == 1 {
        return Vec::new();
    }
    assert!(n.is_power_of_two(), "expected a 2-group quotient");
    let identity = identity_of(table);
    let order_of = |i: usize| -> usize {
        let mut x = i;
        let mut k = 1;
        while x != identity {
            x = table[x][i];
            k += 1;
        }
        k
    };
    let max_pow = n.trailing_zeros() as usize;
    let mut n_k = vec![0usize; max_pow + 1];
    for i in 0..n {
        let lg = order_of(i).trailing_zeros() as usize;
        for slot in n_k.iter_mut().skip(lg) {
            *slot += 1;
        }
    }
    // m_k = #{i : λ_i ≥ k} = log2(n_k) − log2(n_{k−1}).
    let m: Vec<usize> = (1..=max_pow)
        .map(|k| n_k[k].trailing_zeros() as usize - n_k[k - 1].trailing_zeros() as usize)
        .collect();
    let rank = m.first().copied().unwrap_or(0);
    (0..rank)
        .map(|i| 1usize << m.iter().filter(|&&mk| mk > i).count())
        .collect()
}

fn identity_of(table: &[Vec<usize>]) -> usize {
    (0..table.len())
        .find(|&i| (0..table.len()).all(|j| table[i][j] == j))
        .expect("identity")
}

/// Multisets of powers of two ≥ 2 whose squares sum to `target`, of given size.
fn completions(target: usize, count: usize, max_deg: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if count == 0 {
        if target == 0 {
            out.push(acc.clone());
        }
        return;
    }
    let mut d = max_deg;
    while d >= 2 {
        let sq = d * d;
        if sq * count >= target && sq <= target {
            acc.push(d);
            completions(target - sq, count - 1, d, acc, out);
            acc.pop();
        }
        d /= 2;
    }
}

/// Profile of a group: exact class data and irreducible degrees.
pub fn profile(g: &FiniteGroup) -> Result<GroupProfile> {
    let classes = g.conjugacy_classes();
    let derived = g.derived_subgroup();
    let center = g.center();
    let (_, quotient_table) = g.quotient(&derived);
    let mut abelianization = abelian_invariants(&quotient_table);
    abelianization.sort_unstable_by(|a, b| b.cmp(a));
    let linear = g.order() / derived.len();
    let nonlinear_classes = classes.len() - linear;
    let residual = g.order() - linear;
    let mut degrees: BTreeMap<usize, usize> = BTreeMap::new();
    if linear > 0 {
        degrees.insert(1, linear);
    }
    if nonlinear_classes > 0 {
        let mut found = Vec::new();
        let mut max_deg = 2usize;
        while max_deg * max_deg * 4 <= residual {
            max_deg *= 2;
        }
        completions(residual, nonlinear_classes, max_deg, &mut Vec::new(), &mut found);
        let chosen: Vec<usize> = match found.len() {
            0 => {
                return Err(Error::Group(format!(
                    "{}: no degree completion for sum {residual} over {nonlinear_classes} classes",
                    g.label
                )))
            }
            1 => found.into_iter().next().unwrap(),
            _ => dixon_degrees(g, &classes)?
                .into_iter()
                .filter(|d| *d > 1)
                .collect(),
        };
        for d in chosen {
            *degrees.entry(d).or_insert(0) += 1;
        }
    }
    let p = GroupProfile {
        order: g.order(),
        derived_order: derived.len(),
        abelianization,
        center_order: center.len(),
        class_count: classes.len(),
        degrees,
    };
    if p.sum_of_squares() != g.order() {
        return Err(Error::Group(format!(
            "{}: degree squares sum to {} ≠ |G| = {}",
            g.label,
            p.sum_of_squares(),
            g.order()
        )));
    }
    Ok(p)
}

// ---------------------------------------------------------------------------
// Dixon-style degree resolution over F_p (exact, used only when the
// sum-of-squares completion is ambiguous; also exercised directly in tests).
// ---------------------------------------------------------------------------

const DIXON_PRIME: u64 = 12289; // ≡ 1 mod 2^12, covers every 2-group here

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

/// Degrees of all irreducibles via simultaneous eigenvectors of the class
/// multiplication matrices over F_p.
pub fn dixon_degrees(g: &FiniteGroup, classes: &[Vec<u16>]) -> Result<Vec<usize>> {
    let p = DIXON_PRIME;
    let k = classes.len();
    if k > 64 {
        return Err(Error::Group(
            "class-algebra degree resolution capped at 64 classes".into(),
        ));
    }
    let mut class_of = vec![0usize; g.order()];
    for (ci, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x as usize] = ci;
        }
    }
    let identity_class = class_of[g.identity() as usize];
    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| class_of[g.inv(c[0]) as usize])
        .collect();
    // a[i][j][l] with (N_i)_{j,l} = a_{ijl}: C_i C_j = Σ_l a_{ijl} C_l.
    let mut n_mats = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for l in 0..k {
            let z = classes[l][0];
            for &x in &classes[i] {
                let y = g.mul(g.inv(x), z);
                n_mats[i][class_of[y as usize]][l] += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x2d78_a1c5);
    'attempt: for _ in 0..64 {
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let mut m = vec![vec![0u64; k]; k];
        for i in 0..k {
            for r in 0..k {
                for c in 0..k {
                    m[r][c] = (m[r][c] + coeffs[i] * n_mats[i][r][c]) % p;
                }
            }
        }
        let charpoly = faddeev_leverrier(&m, p);
        // All roots in F_p, by scanning.
        let mut roots = Vec::new();
        for lambda in 0..p {
            let mut acc = 0u64;
            for c in charpoly.iter().rev() {
                acc = (acc * lambda + c) % p;
            }
            if acc == 0 {
                roots.push(lambda);
                if roots.len() > k {
                    break;
                }
            }
        }
        if roots.len() != k {
            continue 'attempt; // repeated eigenvalues, re-randomize
        }
        let mut degrees = Vec::with_capacity(k);
        for &lambda in &roots {
            let Some(omega) = eigvec(&m, lambda, p, identity_class) else {
                continue 'attempt;
            };
            // d² = |G| / Σ_l ω_l ω_{l*} / |C_l|.
            let mut s = 0u64;
            for l in 0..k {
                let term = omega[l] * omega[inverse_class[l]] % p;
                s = (s + term * inv_mod(classes[l].len() as u64, p)) % p;
            }
            if s == 0 {
                continue 'attempt;
            }
            let d2 = g.order() as u64 * inv_mod(s, p) % p;
            let d = (1..=g.order() as u64)
                .take_while(|d| d * d <= g.order() as u64)
                .find(|d| d * d == d2)
                .ok_or_else(|| Error::Group("degree not recovered from F_p".into()))?;
            degrees.push(d as usize);
        }
        degrees.sort_unstable();
        let total: usize = degrees.iter().map(|d| d * d).sum();
        if total != g.order() {
            continue 'attempt;
        }
        return Ok(degrees);
    }
    Err(Error::Group("class-algebra eigenvector splitting failed".into()))
}

/// Characteristic polynomial coefficients (c_0 … c_{k-1}, 1) over F_p.
fn faddeev_leverrier(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let k = m.len();
    let mut coeffs = vec![0u64; k + 1];
    coeffs[k] = 1;
    let mut a: Vec<Vec<u64>> = m.to_vec();
    for j in 1..=k {
        let tr: u64 = (0..k).map(|i| a[i][i]).fold(0, |x, y| (x + y) % p);
        let c = (p - tr % p) * inv_mod(j as u64, p) % p;
        coeffs[k - j] = c;
        if j == k {
            break;
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = (row[i] + c) % p;
        }
        let mut next = vec![vec![0u64; k]; k];
        for r in 0..k {
            for t in 0..k {
                if m[r][t] == 0 {
                    continue;
                }
                for c2 in 0..k {
                    next[r][c2] = (next[r][c2] + m[r][t] * a[t][c2]) % p;
                }
            }
        }
        a = next;
    }
    coeffs
}

/// One-dimensional eigenspace of (M − λ), normalized at the identity class.
fn eigvec(m: &[Vec<u64>], lambda: u64, p: u64, identity_class: usize) -> Option<Vec<u64>> {
    let k = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = (row[i] + p - lambda) % p;
    }
    // Row-reduce.
    let mut pivot_col = vec![usize::MAX; k];
    let mut row = 0;
    for col in 0..k {
        let Some(r) = (row..k).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, r);
        let inv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r2 in 0..k {
            if r2 != row && a[r2][col] != 0 {
                let f = a[r2][col];
                let pivot_row = a[row].clone();
                for (x, y) in a[r2].iter_mut().zip(&pivot_row) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivot_col[row] = col;
        row += 1;
        if row == k {
            break;
        }
    }
    if row != k - 1 {
        return None; // kernel not one-dimensional
    }
    let free = (0..k).find(|c| !pivot_col[..row].contains(c))?;
    let mut v = vec![0u64; k];
    v[free] = 1;
    for r in 0..row {
        let col = pivot_col[r];
        v[col] = (p - a[r][free] % p) % p;
    }
    if v[identity_class] == 0 {
        return None;
    }
    let norm = inv_mod(v[identity_class], p);
    for x in v.iter_mut() {
        *x = *x * norm % p;
    }
    Some(v)
}

// ---------------------------------------------------------------------------
// The concrete groups.
// ---------------------------------------------------------------------------

/// D_n = {± e_{i_1} … e_{i_{2ℓ}}} ⊂ Spin(n), order 2^n.
pub fn dn_group(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::Group("D_n needs n ≥ 2".into()));
    }
    if n > 10 {
        return Err(Error::Group("D_n model capped at n = 10".into()));
    }
    let gens: Vec<CliffordElement> = (0..n - 1)
        .map(|i| CliffordElement::generator_pair(i, i + 1))
        .collect();
    let g = FiniteGroup::from_clifford(&format!("D_{n}"), n, gens)?;
    if g.order() != 1 << n {
        return Err(Error::Group(format!(
            "D_{n} closure has order {}, expected 2^{n}",
            g.order()
        )));
    }
    Ok(g)
}

fn tau8() -> Monomial {
    Monomial::permutation(&[1, 0, 3, 2, 5, 4, 7, 6]) // (12)(34)(56)(78)
}

fn u7_translations() -> (Monomial, Monomial, Monomial) {
    // Regular action of Z_2^3 on {1..8}: translations by 001, 010, 100.
    let t001 = tau8();
    let t010 = Monomial::permutation(&[2, 3, 0, 1, 6, 7, 4, 5]); // (13)(24)(57)(68)
    let t100 = Monomial::permutation(&[4, 5, 6, 7, 0, 1, 2, 3]); // (15)(26)(37)(48)
    (t001, t010, t100)
}

fn omegas() -> (Monomial, Monomial, Monomial, Monomial) {
    let w1 = Monomial::scalar(8, 1);
    let w2 = Monomial::diagonal(&[2, 2, 0, 0, 0, 0, 2, 2]);
    let w3 = Monomial::diagonal(&[2, 2, 0, 0, 2, 2, 0, 0]);
    let w4 = Monomial::diagonal(&[2, 0, 2, 0, 2, 0, 2, 0]);
    (w1, w2, w3, w4)
}

/// The groups W_4, W_6, W_7 from their matrix generators, and the
/// extraspecial 2^{1+8} model for W_8.
pub fn w_group(k: usize) -> Result<FiniteGroup> {
    let (w1, w2, w3, w4) = omegas();
    let tau = tau8();
    match k {
        4 => {
            let gens = vec![tau.mul(&w1), w2, w3, tau.mul(&w4)];
            let mut g = FiniteGroup::from_monomial("W_4", 8, gens)?;
            g.notes.push("generators τω1, ω2, ω3, τω4 inside Sp(4)".into());
            Ok(g)
        }
        6 => {
            let (_, t010, t100) = u7_translations();
            let u6_gens = [t010.clone(), t100.clone()];
            let v6_gens = [w1.mul(&w4), w2.clone(), w3.clone()];
            let mut gens: Vec<Monomial> = u6_gens.to_vec();
            gens.extend(v6_gens.iter().cloned());
            gens.push(tau.mul(&w1));
            let mut g = FiniteGroup::from_monomial("W_6", 8, gens)?;
            g.notes
                .push("U6·V6 together with the coset of τω1; U6 is the printed set with (17)(28)(35)(46), the closure-forced reading of its last element".into());
            Ok(g)
        }
        7 => {
            let (t001, t010, t100) = u7_translations();
            let gens = vec![t001, t010, t100, w1, w2, w3, w4];
            let mut g = FiniteGroup::from_monomial("W_7", 8, gens)?;
            g.notes.push("U7·V7 inside SU(8)".into());
            Ok(g)
        }
        8 => {
            // Central product of four dihedral factors acting on (C^2)^{⊗4}:
            // an extraspecial group of order 2^9 whose nonlinear irreducible
            // is the 16-dimensional vector representation.
            let mut gens = Vec::new();
            for t in 0..4usize {
                let bit = 1usize << t;
                let mut perm = vec![0u8; 16];
                let mut phase = vec![0u8; 16];
                for j in 0..16 {
                    perm[j] = (j ^ bit) as u8;
                    phase[j] = if j & bit != 0 { 2 } else { 0 };
                }
                gens.push(Monomial { perm, phase });
                let mut s_phase = vec![0u8; 16];
                for (j, ph) in s_phase.iter_mut().enumerate() {
                    *ph = if j & bit != 0 { 2 } else { 0 };
                }
                gens.push(Monomial::diagonal(&s_phase));
            }
            let mut g = FiniteGroup::from_monomial("W_8", 16, gens)?;
            g.notes.push(
                "extraspecial 2^{1+8} model on C^16; the printed recipe W_7 ∪ τW_7 closes to W_7 itself since τ ∈ U_7 (see errata)"
                    .into(),
            );
            Ok(g)
        }
        _ => Err(Error::Group(format!("no W_{k} model"))),
    }
}

/// Character data of the defining monomial representation: the norm ⟨χ,χ⟩
/// and the pairing ⟨χ,χ*⟩ with its dual (1 exactly when self-dual).
pub fn natural_character_data(g: &FiniteGroup) -> Result<(usize, usize)> {
    let Realization::Monomial { elements, .. } = &g.realization else {
        return Err(Error::Group(format!(
            "{}: natural character needs a matrix model",
            g.label
        )));
    };
    let mut norm = Complex::new(0i64, 0i64);
    let mut dual = Complex::new(0i64, 0i64);
    for m in elements {
        let tr = m.trace();
        norm += tr * tr.conj();
        dual += tr * tr;
    }
    let order = g.order() as i64;
    if norm.im != 0 || norm.re % order != 0 || dual.im != 0 || dual.re % order != 0 {
        return Err(Error::Group(format!("{}: non-integral character pairing", g.label)));
    }
    Ok(((norm.re / order) as usize, (dual.re / order) as usize))
}

/// Order of the image of D_n in SO(n) under the vector representation,
/// i.e. of the quotient by {±1}.
pub fn dn_vector_image_order(g: &FiniteGroup) -> Result<usize> {
    let Realization::Clifford { elements, .. } = &g.realization else {
        return Err(Error::Group("not a Clifford model".into()));
    };
    let minus_one = elements
        .iter()
        .position(|e| e.negative && e.support == 0)
        .ok_or_else(|| Error::Group("missing -1".into()))? as u16;
    let (_, table) = g.quotient(&[g.identity(), minus_one]);
    Ok(table.len())
}

/// Machine check that the printed W_8 recipe collapses: the closure of the
/// W_7 generators together with τ is W_7 again (order 2^8, not 2^9).
pub fn w8_recipe_collapses() -> Result<bool> {
    let (t001, t010, t100) = u7_translations();
    let (w1, w2, w3, w4) = omegas();
    let w7 = w_group(7)?;
    let with_tau = FiniteGroup::from_monomial(
        "W_7 ∪ τW_7",
        8,
        vec![t001.clone(), t010, t100, w1, w2, w3, w4, t001],
    )?;
    Ok(with_tau.order() == w7.order() && with_tau.order() == 1 << 8)
}

/// Structure report for the C^8 decomposition under W_4.
#[derive(Debug, Clone, Serialize)]
pub struct VectorRepReport {
    pub blocks: Vec<Vec<usize>>,
    pub block_norms: Vec<usize>,
    pub pairwise_orthogonal: bool,
    pub full_character_norm: usize,
    pub central_characters_distinct: bool,
}

/// Decompose C^8 under W_4 by simultaneous reduction over the center's
/// characters and verify the four 2-dimensional constituents.
pub fn verify_vector_rep_decomposition() -> Result<VectorRepReport> {
    let g = w_group(4)?;
    let Realization::Monomial { dim, elements } = &g.realization else {
        unreachable!()
    };
    let dim = *dim;
    let center = g.center();
    // Joint eigenspaces of the diagonal central elements.
    let diag_center: Vec<&Monomial> = center
        .iter()
        .map(|&i| &elements[i as usize])
        .filter(|m| m.is_diagonal())
        .collect();
    let mut pattern_of: BTreeMap<Vec<u8>, Vec<usize>> = BTreeMap::new();
    for j in 0..dim {
        let pat: Vec<u8> = diag_center.iter().map(|m| m.phase[j]).collect();
        pattern_of.entry(pat).or_default().push(j);
    }
    let blocks: Vec<Vec<usize>> = pattern_of.into_values().collect();
    if blocks.len() != 4 || blocks.iter().any(|b| b.len() != 2) {
        return Err(Error::Group(format!(
            "C^8 under the center split into {:?}-sized blocks",
            blocks.iter().map(|b| b.len()).collect::<Vec<_>>()
        )));
    }
    // Each block must be stable under the permutation part of the group.
    for m in elements {
        for block in &blocks {
            for &j in block {
                if !block.contains(&(m.perm[j] as usize)) {
                    return Err(Error::Group("block not invariant".into()));
                }
            }
        }
    }
    let inner = |xs: &[Complex<i64>], ys: &[Complex<i64>]| -> Result<usize> {
        let mut acc = Complex::new(0i64, 0i64);
        for (x, y) in xs.iter().zip(ys) {
            acc += x * y.conj();
        }
        if acc.im != 0 || acc.re % g.order() as i64 != 0 || acc.re < 0 {
            return Err(Error::Group(format!("non-integral character norm {acc}")));
        }
        Ok((acc.re / g.order() as i64) as usize)
    };
    let block_chars: Vec<Vec<Complex<i64>>> = blocks
        .iter()
        .map(|b| {
            elements
                .iter()
                .map(|m| m.trace_over(b.iter().copied()))
                .collect()
        })
        .collect();
    let block_norms: Vec<usize> = block_chars
        .iter()
        .map(|c| inner(c, c))
        .collect::<Result<_>>()?;
    let mut pairwise_orthogonal = true;
    for i in 0..4 {
        for j in 0..i {
            if inner(&block_chars[i], &block_chars[j])? != 0 {
                pairwise_orthogonal = false;
            }
        }
    }
    let full: Vec<Complex<i64>> = elements.iter().map(|m| m.trace()).collect();
    let full_character_norm = inner(&full, &full)?;
    // Restriction of each block to the center must give 4 distinct characters.
    let mut central_chars: BTreeSet<Vec<(i64, i64)>> = BTreeSet::new();
    for block in &blocks {
        let sig: Vec<(i64, i64)> = center
            .iter()
            .map(|&z| {
                let tr = elements[z as usize].trace_over(block.iter().copied());
                (tr.re, tr.im)
            })
            .collect();
        central_chars.insert(sig);
    }
    Ok(VectorRepReport {
        blocks,
        block_norms,
        pairwise_orthogonal,
        full_character_norm,
        central_characters_distinct: central_chars.len() == 4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_signs() {
        let e12 = CliffordElement::generator_pair(0, 1);
        let sq = e12.mul(&e12);
        assert_eq!(sq.support, 0);
        assert!(sq.negative);
        let e23 = CliffordElement::generator_pair(1, 2);
        let prod = e12.mul(&e23);
        assert_eq!(prod.support, 0b101);
        assert!(prod.negative);
    }

    #[test]
    fn d3_is_quaternion() {
        let g = dn_group(3).unwrap();
        assert_eq!(g.order(), 8);
        let p = profile(&g).unwrap();
        assert_eq!(p.derived_order, 2);
        assert_eq!(p.center_order, 2);
        assert_eq!(p.abelianization, vec![2, 2]);
        assert_eq!(p.class_count, 5);
        assert_eq!(p.degrees.get(&1), Some(&4));
        assert_eq!(p.degrees.get(&2), Some(&1));
        // Quaternion: six elements of order 4.
        let order4 = (0..8u16).filter(|&i| g.element_order(i) == 4).count();
        assert_eq!(order4, 6);
    }

    #[test]
    fn d4_center_and_d5_profile() {
        let g4 = dn_group(4).unwrap();
        let p4 = profile(&g4).unwrap();
        assert_eq!(p4.center_order, 4);
        let g5 = dn_group(5).unwrap();
        let p5 = profile(&g5).unwrap();
        assert_eq!(p5.order, 32);
        assert_eq!(p5.derived_order, 2);
        assert_eq!(p5.center_order, 2);
        assert_eq!(p5.degrees.get(&1), Some(&16));
        assert_eq!(p5.degrees.get(&4), Some(&1));
    }

    #[test]
    fn dn_spin_degrees_match_parity() {
        for n in 3..=8 {
            let p = profile(&dn_group(n).unwrap()).unwrap();
            assert_eq!(p.linear_count(), 1 << (n - 1), "n = {n}");
            if n % 2 == 0 {
                let half = 1 << (n / 2 - 1);
                assert_eq!(p.degrees.get(&half), Some(&2), "n = {n}");
            } else {
                let full = 1 << (n / 2);
                assert_eq!(p.degrees.get(&full), Some(&1), "n = {n}");
            }
            assert_eq!(p.sum_of_squares(), 1 << n);
        }
    }

    #[test]
    fn w4_profile_and_center() {
        let g = w_group(4).unwrap();
        assert_eq!(g.order(), 32);
        let p = profile(&g).unwrap();
        assert_eq!(p.derived_order, 2);
        assert_eq!(p.abelianization, vec![2, 2, 2, 2]);
        assert_eq!(p.center_order, 8);
        assert_eq!(p.degrees.get(&1), Some(&16));
        assert_eq!(p.degrees.get(&2), Some(&4));
        // Center is {±1, ±ω2, ±ω3, ±ω2ω3}: all diagonal with phases in {0,2}.
        let Realization::Monomial { elements, .. } = &g.realization else {
            panic!()
        };
        for &z in &g.center() {
            let m = &elements[z as usize];
            assert!(m.is_diagonal());
            assert!(m.phase.iter().all(|p| p % 2 == 0));
        }
    }

    #[test]
    fn w6_w7_profiles() {
        let g6 = w_group(6).unwrap();
        assert_eq!(g6.order(), 128);
        let p6 = profile(&g6).unwrap();
        assert_eq!(p6.derived_order, 2);
        assert_eq!(p6.abelianization, vec![2; 6]);
        assert_eq!(p6.degrees.get(&1), Some(&64));
        assert_eq!(p6.degrees.get(&8), Some(&1));

        let g7 = w_group(7).unwrap();
        assert_eq!(g7.order(), 256);
        let p7 = profile(&g7).unwrap();
        assert_eq!(p7.derived_order, 2);
        assert_eq!(p7.abelianization, vec![2; 7]);
        assert_eq!(p7.degrees.get(&1), Some(&128));
        assert_eq!(p7.degrees.get(&8), Some(&2));
    }

    #[test]
    fn w6_is_u6v6_plus_coset() {
        let (_, t010, t100) = u7_translations();
        let (w1, w2, w3, w4) = omegas();
        let u6v6 =
            FiniteGroup::from_monomial("U6V6", 8, vec![t010, t100, w1.mul(&w4), w2, w3]).unwrap();
        assert_eq!(u6v6.order(), 64);
        assert_eq!(w_group(6).unwrap().order(), 128);
    }

    #[test]
    fn w8_profile_and_recipe_collapse() {
        assert!(w8_recipe_collapses().unwrap());
        let g = w_group(8).unwrap();
        assert_eq!(g.order(), 512);
        let p = profile(&g).unwrap();
        assert_eq!(p.derived_order, 2);
        assert_eq!(p.abelianization, vec![2; 8]);
        assert_eq!(p.center_order, 2);
        assert_eq!(p.degrees.get(&1), Some(&256));
        assert_eq!(p.degrees.get(&16), Some(&1));
    }

    #[test]
    fn w4_vector_rep_decomposition() {
        let r = verify_vector_rep_decomposition().unwrap();
        assert_eq!(r.blocks.len(), 4);
        assert!(r.block_norms.iter().all(|&n| n == 1));
        assert!(r.pairwise_orthogonal);
        assert_eq!(r.full_character_norm, 4);
        assert!(r.central_characters_distinct);
    }

    #[test]
    fn dixon_agrees_with_completion() {
        for g in [w_group(4).unwrap(), dn_group(5).unwrap(), dn_group(4).unwrap()] {
            let classes = g.conjugacy_classes();
            let dixon = dixon_degrees(&g, &classes).unwrap();
            let p = profile(&g).unwrap();
            let mut expected: Vec<usize> = Vec::new();
            for (d, k) in &p.degrees {
                expected.extend(std::iter::repeat_n(*d, *k));
            }
            expected.sort_unstable();
            assert_eq!(dixon, expected, "{}", g.label);
        }
    }

    #[test]
    fn dn_rejects_small_n() {
        assert!(dn_group(1).is_err());
        assert!(dn_group(2).is_ok());
    }

    #[test]
    fn natural_representations_match_claims() {
        // w_6 irreducible and self-dual; w_7 irreducible with w_7* a second,
        // inequivalent irreducible; the W_8 model's 16-dim rep irreducible.
        assert_eq!(natural_character_data(&w_group(6).unwrap()).unwrap(), (1, 1));
        assert_eq!(natural_character_data(&w_group(7).unwrap()).unwrap(), (1, 0));
        assert_eq!(natural_character_data(&w_group(8).unwrap()).unwrap(), (1, 1));
        // W_4 on C^8 is the sum of four inequivalent 2-dim pieces: ⟨χ,χ⟩ = 4.
        assert_eq!(natural_character_data(&w_group(4).unwrap()).unwrap().0, 4);
    }

    #[test]
    fn dn_vector_image_has_half_order() {
        for n in 3..=6 {
            let g = dn_group(n).unwrap();
            assert_eq!(dn_vector_image_order(&g).unwrap(), 1 << (n - 1));
        }
    }
}
