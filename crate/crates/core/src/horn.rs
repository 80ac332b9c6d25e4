//! Comparison layer for Grassmannians and the Lagrangian Grassmannian: the
//! classical Horn recursion, the Horn recursion using one Levi factor, and
//! the naive inequalities for `LG(n)` pulled back from the isotropic
//! Grassmannians `Sp(2n)/P_{n-r}`.
//!
//! Everything here works on partitions. A `Gr(k,n)` position is a partition
//! `μ` in the `k × (n-k)` box, padded with zeros to length `k`; an `LG(n)`
//! position is a strict partition with parts at most `n`, whose shifted
//! diagram is its coinversion set.

use crate::error::{Error, Result};
use crate::feasibility::{Mode, Solver};
use crate::notation::partition;
use crate::oracles::lr::{self, partitions_in_box, trim, Partition};
use crate::oracles::shifted;
use crate::space::build_space;
use parking_lot::RwLock;
use rayon::prelude::*;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

fn part(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

fn size(p: &[usize]) -> usize {
    p.iter().sum()
}

fn binomial2(r: usize) -> usize {
    r * (r + 1) / 2
}

/// Checks that `p` is a partition fitting the `rows × cols` box.
pub fn check_box(p: &[usize], rows: usize, cols: usize) -> Result<()> {
    let p = trim(p);
    if p.len() > rows || p.iter().any(|&x| x > cols) || p.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument(format!("{p:?} is not a partition in the {rows}×{cols} box")));
    }
    Ok(())
}

/// Checks that `p` is a strict partition with parts at most `n`.
pub fn check_strict(p: &[usize], n: usize) -> Result<()> {
    let p = trim(p);
    if p.iter().any(|&x| x > n) || p.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::InvalidArgument(format!("{p:?} is not a strict partition with parts at most {n}")));
    }
    Ok(())
}

/// The conjugate partition.
pub fn transpose(p: &[usize]) -> Partition {
    let first = part(p, 0);
    (1..=first).map(|c| p.iter().filter(|&&x| x >= c).count()).collect()
}

/// The dual `ν̂` in the `k × (n-k)` box: `ν̂^a = n - k - ν^{k+1-a}`.
pub fn dual_partition(nu: &[usize], k: usize, n: usize) -> Partition {
    trim(&(1..=k).map(|a| n - k - part(nu, k - a)).collect::<Vec<_>>())
}

/// A Schubert position `κ` of `Gr(r,k)`, used to select rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HornSelector {
    pub r: usize,
    pub k: usize,
    pub kappa: Partition,
}

impl HornSelector {
    pub fn new(r: usize, k: usize, kappa: &[usize]) -> Result<HornSelector> {
        if r > k {
            return Err(Error::InvalidArgument(format!("selector rank {r} exceeds {k}")));
        }
        check_box(kappa, r, k - r)?;
        Ok(HornSelector { r, k, kappa: trim(kappa) })
    }

    /// The selected rows `κ[a] = a + κ^{r+1-a}` for `a = 1..=r`, increasing
    /// and 1-based.
    pub fn indices(&self) -> Vec<usize> {
        kappa_indices(self.r, &self.kappa)
    }
}

/// `κ[a] = a + κ^{r+1-a}` for `a = 1..=r`.
pub fn kappa_indices(r: usize, kappa: &[usize]) -> Vec<usize> {
    (1..=r).map(|a| a + part(kappa, r - a)).collect()
}

/// `|μ|^κ = Σ_a μ^{κ[a]}` for `μ` in the `k × (n-k)` box.
pub fn mu_kappa(k: usize, n: usize, mu: &[usize], sel: &HornSelector) -> Result<usize> {
    if sel.k != k || n < k {
        return Err(Error::InvalidArgument(format!("selector for Gr({},{}) used on Gr({k},{n})", sel.r, sel.k)));
    }
    check_box(mu, k, n - k)?;
    Ok(sel.indices().iter().map(|&i| part(mu, i - 1)).sum())
}

fn mu_kappa_unchecked(mu: &[usize], r: usize, kappa: &[usize]) -> usize {
    kappa_indices(r, kappa).iter().map(|&i| part(mu, i - 1)).sum()
}

/// The boxes of `μ` left after crossing out the given rows (1-based). For
/// `Gr(5,11)` with `μ = (6,5,3,3,1)` and rows `{2,4}` this is `10`.
pub fn rows_removed(mu: &[usize], rows: &[usize]) -> usize {
    let rows: BTreeSet<usize> = rows.iter().copied().collect();
    mu.iter().enumerate().filter(|(i, _)| !rows.contains(&(i + 1))).map(|(_, &x)| x).sum()
}

/// All ordered `s`-tuples of `list` whose sizes sum to `total`.
fn tuples_of_degree(list: &[Partition], s: usize, total: usize) -> Vec<Vec<Partition>> {
    fn go(list: &[Partition], s: usize, left: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if cur.len() == s {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in list {
            let d = size(p);
            if d <= left {
                cur.push(p.clone());
                go(list, s, left - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(list, s, total, &mut Vec::new(), &mut out);
    out
}

/// All ordered top-degree `s`-tuples of positions of `Gr(k,n)`.
pub fn gr_top_tuples(k: usize, n: usize, s: usize) -> Vec<Vec<Partition>> {
    tuples_of_degree(&partitions_in_box(k, n - k), s, k * (n - k))
}

/// All ordered top-degree `s`-tuples of positions of `LG(n)`.
pub fn lg_top_tuples(n: usize, s: usize) -> Vec<Vec<Partition>> {
    tuples_of_degree(&shifted::strict_partitions(n), s, binomial2(n))
}

/// How `naive_lg_check` produces the feasible tuples on `Gr(r,n)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LambdaSource {
    /// The cominuscule recursion.
    #[default]
    Recursion,
    /// The Littlewood–Richardson rule.
    Oracle,
}

impl FromStr for LambdaSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<LambdaSource> {
        match s {
            "recursion" => Ok(LambdaSource::Recursion),
            "oracle" => Ok(LambdaSource::Oracle),
            _ => Err(Error::InvalidArgument(format!("unknown source {s:?}; expected recursion or oracle"))),
        }
    }
}

impl fmt::Display for LambdaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaSource::Recursion => "recursion",
            LambdaSource::Oracle => "oracle",
        })
    }
}

/// A violated naive inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveWitness {
    pub r: usize,
    /// The feasible tuple on `Gr(r,n)`, as partitions.
    pub lambdas: Vec<Partition>,
    pub lhs: usize,
    pub rhs: usize,
}

/// Outcome of [`naive_lg_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveReport {
    pub passes: bool,
    pub witness: Option<NaiveWitness>,
}

/// `|π|_{λ̂^t}` for `π` on `LG(n)` and `λ` on `Gr(r,n)`: the coinversions of
/// `π` in the shifted diagram whose row and column both avoid the indices
/// `n+1-κ[a]`, where `κ = λ^t` and `κ[a] = a + κ^{n-r+1-a}`.
pub fn naive_term(n: usize, pi: &[usize], r: usize, lambda: &[usize]) -> usize {
    naive_term_masked(pi, uncrossed_mask(n, r, lambda))
}

/// Bit `i` is set for each index `1 ≤ i ≤ n` not crossed by `λ` in
/// [`naive_term`].
fn uncrossed_mask(n: usize, r: usize, lambda: &[usize]) -> u64 {
    let kappa = transpose(lambda);
    let all = ((1u64 << n) - 1) << 1;
    kappa_indices(n - r, &kappa).iter().fold(all, |m, &x| m & !(1u64 << (n + 1 - x)))
}

/// Cells `(i, j)` of the shifted diagram of `π` with bits `i` and `j` both
/// set in `allowed`.
fn naive_term_masked(pi: &[usize], allowed: u64) -> usize {
    pi.iter()
        .enumerate()
        .filter(|&(i0, _)| allowed >> (i0 + 1) & 1 == 1)
        .map(|(i0, &len)| (allowed >> (i0 + 1) & ((1u64 << len) - 1)).count_ones() as usize)
        .sum()
}

type HornKey = (usize, usize, usize);
type HornList = Arc<Vec<(Vec<Partition>, Partition)>>;
type TupleKey = (usize, usize, usize);
type TupleList = Arc<Vec<Vec<Partition>>>;
type LambdaKey = (usize, usize, usize, LambdaSource);

/// Feasible `λ`-tuples on `Gr(r,n)` with the uncrossed-index mask of each slot.
struct LambdaTable {
    tuples: Vec<Vec<Partition>>,
    masks: Vec<Vec<u64>>,
}

/// Memoised Horn-feasible sets. Locks are never held while computing, so a
/// race only costs duplicate work.
#[derive(Default)]
pub struct Horn {
    classical: RwLock<HashMap<HornKey, HornList>>,
    one_factor: RwLock<HashMap<TupleKey, TupleList>>,
    lambdas: RwLock<HashMap<LambdaKey, Arc<LambdaTable>>>,
}

impl Horn {
    pub fn new() -> Horn {
        Horn::default()
    }

    pub fn global() -> &'static Horn {
        static GLOBAL: OnceLock<Horn> = OnceLock::new();
        GLOBAL.get_or_init(Horn::new)
    }

    /// Whether `σ_ν` occurs in `∏ σ_{μ_i}` on `Gr(k,n)`, decided by the
    /// classical Horn inequalities `Σ|μ_i|^{κ_i} ≥ |ν|^θ` over all
    /// `1 ≤ r < k` and all `(κ_1, …, κ_m; θ)` on `Gr(r,k)` for which the
    /// same recursion says `σ_θ` occurs in `∏ σ_{κ_i}`.
    pub fn classical_horn_feasible(&self, k: usize, n: usize, mus: &[Partition], nu: &[usize]) -> Result<bool> {
        if n < k {
            return Err(Error::InvalidArgument(format!("Gr({k},{n}) needs k ≤ n")));
        }
        for mu in mus.iter().map(|m| m.as_slice()).chain([nu]) {
            check_box(mu, k, n - k)?;
        }
        let degree: usize = mus.iter().map(|m| size(m)).sum();
        if degree != size(nu) {
            return Err(Error::InvalidArgument(format!("degree mismatch: Σ|μ_i| = {degree} but |ν| = {}", size(nu))));
        }
        Ok(self.classical_unchecked(k, mus, nu))
    }

    fn classical_unchecked(&self, k: usize, mus: &[Partition], nu: &[usize]) -> bool {
        for r in 1..k {
            for (kappas, theta) in self.horn_list(r, k, mus.len()).iter() {
                let lhs: usize = mus.iter().zip(kappas).map(|(mu, kappa)| mu_kappa_unchecked(mu, r, kappa)).sum();
                if lhs < mu_kappa_unchecked(nu, r, theta) {
                    return false;
                }
            }
        }
        true
    }

    /// The Horn-feasible `(κ_1, …, κ_m; θ)` on `Gr(r,k)`.
    fn horn_list(&self, r: usize, k: usize, m: usize) -> HornList {
        if let Some(v) = self.classical.read().get(&(r, k, m)) {
            return v.clone();
        }
        let boxes = partitions_in_box(r, k - r);
        let mut out = Vec::new();
        for total in 0..=r * (k - r) {
            let thetas: Vec<&Partition> = boxes.iter().filter(|t| size(t) == total).collect();
            if thetas.is_empty() {
                continue;
            }
            for kappas in tuples_of_degree(&boxes, m, total) {
                for &theta in &thetas {
                    if self.classical_unchecked(r, &kappas, theta) {
                        out.push((kappas.clone(), theta.clone()));
                    }
                }
            }
        }
        let v = Arc::new(out);
        self.classical.write().insert((r, k, m), v.clone());
        v
    }

    /// Feasibility of a top-degree tuple on `Gr(k,n)` by the recursion over
    /// one Levi factor: `Σ (|μ_i| - |μ_i|^{κ_i}) ≤ (k-r)(n-k)` for every
    /// `1 ≤ r < k` and every tuple `λ_i = κ_i^t` on `Gr(k-r,k)` that is
    /// feasible by the same recursion.
    pub fn one_factor_feasible(&self, k: usize, n: usize, mus: &[Partition]) -> Result<bool> {
        if n < k {
            return Err(Error::InvalidArgument(format!("Gr({k},{n}) needs k ≤ n")));
        }
        for mu in mus {
            check_box(mu, k, n - k)?;
        }
        let degree: usize = mus.iter().map(|m| size(m)).sum();
        if degree != k * (n - k) {
            return Err(Error::InvalidArgument(format!("not top degree: Σ|μ_i| = {degree}, dim = {}", k * (n - k))));
        }
        Ok(self.one_factor_unchecked(k, n, mus))
    }

    fn one_factor_unchecked(&self, k: usize, n: usize, mus: &[Partition]) -> bool {
        for r in 1..k {
            let rhs = (k - r) * (n - k);
            for lambdas in self.one_factor_list(k - r, k, mus.len()).iter() {
                let lhs: usize =
                    mus.iter().zip(lambdas).map(|(mu, l)| size(mu) - mu_kappa_unchecked(mu, r, &transpose(l))).sum();
                if lhs > rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Feasible top-degree `s`-tuples on `Gr(k,n)` by the one-factor
    /// recursion.
    fn one_factor_list(&self, k: usize, n: usize, s: usize) -> TupleList {
        if let Some(v) = self.one_factor.read().get(&(k, n, s)) {
            return v.clone();
        }
        let out: Vec<_> = gr_top_tuples(k, n, s).into_iter().filter(|t| self.one_factor_unchecked(k, n, t)).collect();
        let v = Arc::new(out);
        self.one_factor.write().insert((k, n, s), v.clone());
        v
    }

    /// Feasible top-degree `s`-tuples on `Gr(r,n)` from the chosen source.
    fn lambda_list(&self, r: usize, n: usize, s: usize, source: LambdaSource) -> Result<Arc<LambdaTable>> {
        if let Some(v) = self.lambdas.read().get(&(r, n, s, source)) {
            return Ok(v.clone());
        }
        let out: Vec<Vec<Partition>> = match source {
            LambdaSource::Oracle => {
                gr_top_tuples(r, n, s).into_iter().filter(|t| lr::product_nonzero(r, n, t)).collect()
            }
            LambdaSource::Recursion => {
                let space = build_space(&format!("Gr({r},{n})"))?;
                let f = space.factors[0].clone();
                let mut list: Vec<Vec<Partition>> = Solver::global()
                    .enumerate_feasible(&space, s, true, Mode::Top)?
                    .iter()
                    .map(|t| t.iter().map(|p| trim(&partition(&f, p[0]).expect("Grassmannian"))).collect())
                    .collect();
                list.sort();
                list
            }
        };
        let masks = out.iter().map(|t| t.iter().map(|l| uncrossed_mask(n, r, l)).collect()).collect();
        let v = Arc::new(LambdaTable { tuples: out, masks });
        self.lambdas.write().insert((r, n, s, source), v.clone());
        Ok(v)
    }

    /// The naive inequalities `Σ|π_i|_{λ̂_i^t} ≥ binom(r+1,2)` for a
    /// top-degree tuple on `LG(n)`, over `1 ≤ r < n` and feasible top-degree
    /// tuples `λ_1, …, λ_s` on `Gr(r,n)`. Every feasible tuple passes; the
    /// first violated inequality is returned otherwise.
    pub fn naive_lg_check(&self, n: usize, pis: &[Partition], source: LambdaSource) -> Result<NaiveReport> {
        for p in pis {
            check_strict(p, n)?;
        }
        let degree: usize = pis.iter().map(|p| size(p)).sum();
        if degree != binomial2(n) {
            return Err(Error::InvalidArgument(format!("not top degree: Σ|π_i| = {degree}, dim = {}", binomial2(n))));
        }
        let pis: Vec<Partition> = pis.iter().map(|p| trim(p)).collect();
        for r in 1..n {
            let rhs = binomial2(r);
            let table = self.lambda_list(r, n, pis.len(), source)?;
            for (lambdas, masks) in table.tuples.iter().zip(&table.masks) {
                let lhs: usize = pis.iter().zip(masks).map(|(p, &m)| naive_term_masked(p, m)).sum();
                if lhs < rhs {
                    return Ok(NaiveReport {
                        passes: false,
                        witness: Some(NaiveWitness { r, lambdas: lambdas.clone(), lhs, rhs }),
                    });
                }
            }
        }
        Ok(NaiveReport { passes: true, witness: None })
    }
}

/// [`Horn::classical_horn_feasible`] on the global cache.
pub fn classical_horn_feasible(k: usize, n: usize, mus: &[Partition], nu: &[usize]) -> Result<bool> {
    Horn::global().classical_horn_feasible(k, n, mus, nu)
}

/// [`Horn::one_factor_feasible`] on the global cache.
pub fn one_factor_feasible(k: usize, n: usize, mus: &[Partition]) -> Result<bool> {
    Horn::global().one_factor_feasible(k, n, mus)
}

/// [`Horn::naive_lg_check`] on the global cache.
pub fn naive_lg_check(n: usize, pis: &[Partition], source: LambdaSource) -> Result<NaiveReport> {
    Horn::global().naive_lg_check(n, pis, source)
}

/// Verdicts of the four deciders on one `Gr(k,n)` tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornVerdicts {
    pub tuple: Vec<Partition>,
    pub classical: bool,
    pub one_factor: bool,
    pub recursion: bool,
    pub oracle: bool,
}

impl HornVerdicts {
    pub fn agree(&self) -> bool {
        self.classical == self.one_factor && self.one_factor == self.recursion && self.recursion == self.oracle
    }
}

/// Agreement table of the four deciders over top-degree tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HornComparison {
    pub tuples: usize,
    pub feasible: usize,
    pub mismatches: Vec<HornVerdicts>,
}

/// Runs the classical Horn recursion (with `ν` the dual of the last slot),
/// the one-factor recursion, the cominuscule recursion and the
/// Littlewood–Richardson rule on every top-degree `s`-tuple of `Gr(k,n)`.
pub fn compare_gr(k: usize, n: usize, s: usize) -> Result<HornComparison> {
    if s == 0 || n < k {
        return Err(Error::InvalidArgument("need s ≥ 1 and k ≤ n".into()));
    }
    let space = build_space(&format!("Gr({k},{n})"))?;
    let f = space.factors[0].clone();
    let horn = Horn::global();
    let verdicts = gr_top_tuples(k, n, s)
        .into_par_iter()
        .map(|tuple| {
            let (mus, last) = tuple.split_at(s - 1);
            let nu = dual_partition(&last[0], k, n);
            let positions = tuple
                .iter()
                .map(|p| Ok(vec![crate::notation::ideal_from_partition(&f, p)?]))
                .collect::<Result<Vec<_>>>()?;
            Ok(HornVerdicts {
                classical: horn.classical_horn_feasible(k, n, mus, &nu)?,
                one_factor: horn.one_factor_feasible(k, n, &tuple)?,
                recursion: Solver::global().is_feasible(&space, &positions, Mode::Top)?.feasible,
                oracle: lr::product_nonzero(k, n, &tuple),
                tuple,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = HornComparison { tuples: verdicts.len(), ..Default::default() };
    for v in verdicts {
        out.feasible += v.oracle as usize;
        if !v.agree() {
            out.mismatches.push(v);
        }
    }
    Ok(out)
}

/// Comparison of the naive inequalities with the shifted oracle on
/// top-degree `LG(n)` tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NaiveComparison {
    pub tuples: usize,
    pub feasible: usize,
    pub naive_feasible: usize,
    /// Feasible tuples violating a naive inequality (necessity failures).
    pub false_negatives: Vec<(Vec<Partition>, NaiveWitness)>,
    /// Infeasible tuples passing every naive inequality.
    pub false_positives: Vec<Vec<Partition>>,
}

/// Checks the naive inequalities against the shifted oracle on every
/// top-degree `s`-tuple of `LG(n)`.
pub fn compare_naive_lg(n: usize, s: usize, source: LambdaSource) -> Result<NaiveComparison> {
    let horn = Horn::global();
    // Fill the λ caches before fanning out.
    for r in 1..n {
        horn.lambda_list(r, n, s, source)?;
    }
    let results = lg_top_tuples(n, s)
        .into_par_iter()
        .map(|tuple| {
            let truth = shifted::product_nonzero(n, &tuple);
            let report = horn.naive_lg_check(n, &tuple, source)?;
            Ok((tuple, truth, report))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = NaiveComparison { tuples: results.len(), ..Default::default() };
    for (tuple, truth, report) in results {
        out.feasible += truth as usize;
        out.naive_feasible += report.passes as usize;
        match (truth, report.witness) {
            (true, Some(w)) => out.false_negatives.push((tuple, w)),
            (false, None) => out.false_positives.push(tuple),
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits;
    use crate::feasibility::count_pi_lambda;
    use crate::notation::ideal_from_partition;
    use crate::orbit::m_of_p;
    use crate::space::Space;

    /// A Grassmannian Levi factor whose simple roots run against the
    /// parent's ε-coordinates is labelled by conjugate partitions. Type A
    /// numbers its simple roots `e_{u+1} - e_u`, types C and D `e_u - e_{u+1}`.
    fn flipped(f: &crate::orbit::LeviFactor, parent_is_a: bool) -> bool {
        f.node_map.len() > 1 && (f.node_map[0] > f.node_map[1]) == parent_is_a
    }

    fn factor_ideal(f: &crate::orbit::LeviFactor, parent_is_a: bool, p: &[usize]) -> Bits {
        let p = if flipped(f, parent_is_a) { transpose(p) } else { p.to_vec() };
        ideal_from_partition(&f.space, &p).unwrap()
    }

    fn factor_partition(f: &crate::orbit::LeviFactor, parent_is_a: bool, ideal: Bits) -> Partition {
        let p = trim(&partition(&f.space, ideal).unwrap());
        if flipped(f, parent_is_a) {
            transpose(&p)
        } else {
            p
        }
    }

    #[test]
    fn partition_algebra() {
        for k in 1..=4 {
            for n in k..=7 {
                for mu in partitions_in_box(k, n - k) {
                    assert_eq!(dual_partition(&dual_partition(&mu, k, n), k, n), mu);
                    assert_eq!(transpose(&transpose(&mu)), mu);
                    assert_eq!(size(&mu) + size(&dual_partition(&mu, k, n)), k * (n - k));
                    check_box(&transpose(&mu), n - k, k).unwrap();
                }
            }
        }
    }

    #[test]
    fn selectors() {
        let empty = HornSelector::new(2, 5, &[]).unwrap();
        assert_eq!(empty.indices(), vec![1, 2]);
        assert_eq!(mu_kappa(5, 11, &[6, 5, 3, 3, 1], &empty).unwrap(), 11);
        // Rows 2 and 4 correspond to κ = (2,1).
        let sel = HornSelector::new(2, 5, &[2, 1]).unwrap();
        assert_eq!(sel.indices(), vec![2, 4]);
        assert_eq!(rows_removed(&[6, 5, 3, 3, 1], &sel.indices()), 10);
        assert!(HornSelector::new(2, 5, &[4]).is_err());
        assert!(mu_kappa(5, 11, &[7], &sel).is_err());
    }

    /// `|ν|^θ = r(n-k) - |ν̂|^{θ̂}`.
    #[test]
    fn dual_selector_identity() {
        for k in 2..=5 {
            for n in k..=8 {
                for r in 1..k {
                    for theta in partitions_in_box(r, k - r) {
                        let th = dual_partition(&theta, r, k);
                        for nu in partitions_in_box(k, n - k) {
                            let nh = dual_partition(&nu, k, n);
                            assert_eq!(
                                mu_kappa_unchecked(&nu, r, &theta),
                                r * (n - k) - mu_kappa_unchecked(&nh, r, &th)
                            );
                        }
                    }
                }
            }
        }
    }

    /// `|π|_λ = |μ| - |μ|^κ`, with `|π|_λ` evaluated on root subsets: the
    /// rows of `Gr(k,n)` meeting `Φ(z)` translated by `λ` acting on the
    /// `Gr(k-r,k)` factor only.
    #[test]
    fn row_selection_matches_root_count() {
        for (k, n) in [(2, 4), (3, 5), (3, 6), (4, 7)] {
            let space = build_space(&format!("Gr({k},{n})")).unwrap();
            let f = space.factors[0].clone();
            for datum in m_of_p(&f).unwrap().iter() {
                let r = datum.r;
                let rows: BTreeSet<usize> =
                    datum.phi_z.iter().map(|w| crate::notation::cell(&f, w).unwrap().0).collect();
                let s = (0..f.dim())
                    .filter(|&w| rows.contains(&crate::notation::cell(&f, w).unwrap().0))
                    .fold(Bits::EMPTY, |b, w| b.with(w));
                // The factor acting on rows sits on the nodes below the marked one.
                let row_factor = datum.factors.iter().position(|g| g.node_map.iter().all(|&v| v < k - 1)).unwrap();
                let rf = &datum.factors[row_factor];
                for lam in rf.space.ideals().unwrap().list.iter() {
                    let mut lambda = vec![Bits::EMPTY; datum.factors.len()];
                    lambda[row_factor] = *lam;
                    let kappa = transpose(&factor_partition(rf, true, *lam));
                    for &pi in f.ideals().unwrap().list.iter() {
                        let mu = partition(&f, pi).unwrap();
                        let root_count = crate::feasibility::generalized_codim(&f, s, pi, datum, &lambda).unwrap();
                        assert_eq!(
                            root_count,
                            size(&mu) - mu_kappa_unchecked(&mu, r, &kappa),
                            "Gr({k},{n}) r={r} μ={mu:?} κ={kappa:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classical_examples() {
        let h = Horn::new();
        assert!(h.classical_horn_feasible(2, 4, &[vec![1], vec![1], vec![1], vec![1]], &[2, 2]).unwrap());
        assert!(!h.classical_horn_feasible(2, 4, &[vec![2], vec![1, 1]], &[2, 2]).unwrap());
        assert!(h.classical_horn_feasible(2, 4, &[vec![1], vec![1]], &[1, 1]).unwrap());
        assert!(h.classical_horn_feasible(2, 4, &[vec![1]], &[2]).is_err());
        // A single factor: σ_ν occurs in σ_μ iff ν = μ.
        for (k, n) in [(2, 5), (3, 6)] {
            for mu in partitions_in_box(k, n - k) {
                for nu in partitions_in_box(k, n - k).into_iter().filter(|nu| size(nu) == size(&mu)) {
                    assert_eq!(h.classical_horn_feasible(k, n, std::slice::from_ref(&mu), &nu).unwrap(), mu == nu);
                }
            }
        }
    }

    #[test]
    fn one_factor_examples() {
        let h = Horn::new();
        // Gr(2,4), s=3 exhaustively against the oracle.
        for t in gr_top_tuples(2, 4, 3) {
            assert_eq!(h.one_factor_feasible(2, 4, &t).unwrap(), lr::product_nonzero(2, 4, &t), "{t:?}");
        }
        // Identities padded by a dual pair.
        let mu = vec![3, 1];
        let t = vec![vec![], mu.clone(), dual_partition(&mu, 3, 6)];
        assert!(h.one_factor_feasible(3, 6, &t).unwrap());
        assert!(h.one_factor_feasible(3, 6, &[vec![1]]).is_err());
    }

    #[test]
    fn recursions_agree_on_small_grassmannians() {
        for (k, n) in [(1, 3), (2, 4), (2, 5), (3, 6)] {
            let c = compare_gr(k, n, 3).unwrap();
            assert!(c.mismatches.is_empty(), "Gr({k},{n}): {:?}", c.mismatches.first());
            assert!(c.feasible > 0);
        }
    }

    /// The shifted diagram of `π`, as cells `(i,j)`, `i ≤ j`.
    fn cells(pi: &[usize]) -> BTreeSet<(usize, usize)> {
        pi.iter().enumerate().flat_map(|(i, &l)| (i + 1..i + 1 + l).map(move |j| (i + 1, j))).collect()
    }

    /// The increasing sequence `w ⊂ [2n]`, one of each `{i, 2n+1-i}`, with a
    /// coinversion at `(n+1-a, n+1-b)` iff `w^a + w^b > 2n+1`.
    fn w_sequence(n: usize, pi: &[usize]) -> Vec<usize> {
        let target = cells(pi);
        let found: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| {
                let mut w: Vec<usize> =
                    (1..=n).map(|i| if mask >> (i - 1) & 1 == 1 { 2 * n + 1 - i } else { i }).collect();
                w.sort();
                w
            })
            .filter(|w| {
                let mut c = BTreeSet::new();
                for a in 1..=n {
                    for b in a..=n {
                        if w[a - 1] + w[b - 1] > 2 * n + 1 {
                            c.insert((n + 1 - b, n + 1 - a));
                        }
                    }
                }
                c == target
            })
            .collect();
        assert_eq!(found.len(), 1, "π = {pi:?}");
        found[0].clone()
    }

    fn w_size(n: usize, w: &[usize]) -> usize {
        let cross = (0..w.len())
            .flat_map(|a| (a + 1..w.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| w[a] + w[b] > 2 * n + 1)
            .count();
        w.iter().enumerate().map(|(j, &x)| x - (j + 1)).sum::<usize>() - cross
    }

    /// `‖π‖_λ = |π| + |λ| - |π|_{λ̂^t}`, where `‖π‖_λ` is the codimension
    /// of the projected position `w' = (w^{κ[j]})`.
    #[test]
    fn projected_codimension_identity() {
        for n in 1..=5 {
            for pi in shifted::strict_partitions(n) {
                let w = w_sequence(n, &pi);
                assert_eq!(w_size(n, &w), size(&pi));
                for r in 1..=n {
                    for lambda in partitions_in_box(r, n - r) {
                        let kappa = transpose(&lambda);
                        let wp: Vec<usize> = kappa_indices(n - r, &kappa).iter().map(|&x| w[x - 1]).collect();
                        assert_eq!(
                            w_size(n, &wp) + naive_term(n, &pi, r, &lambda),
                            size(&pi) + size(&lambda),
                            "n={n} π={pi:?} λ={lambda:?}"
                        );
                    }
                }
            }
        }
    }

    /// The hook count equals the orbit slot `|Inv^c(π) ∩ λ̂^t Φ(z)|` for the
    /// orbit of rank `n-r`, and it differs from `|π|_{λ̂}` on the rank `r`
    /// orbit for some pairs.
    #[test]
    fn naive_term_is_an_orbit_slot() {
        let mut differs = false;
        for n in 2..=5 {
            let space = build_space(&format!("LG({n})")).unwrap();
            let f = space.factors[0].clone();
            let data = m_of_p(&f).unwrap();
            for r in 1..n {
                let dr = &data[r - 1];
                let dnr = &data[n - r - 1];
                for lambda in partitions_in_box(r, n - r) {
                    let lam_hat = dual_partition(&lambda, r, n);
                    let lam_hat_t = vec![factor_ideal(&dnr.factors[0], false, &transpose(&lam_hat))];
                    let lam_pos = vec![factor_ideal(&dr.factors[0], false, &lambda)];
                    let lam_hat_pos = vec![factor_ideal(&dr.factors[0], false, &lam_hat)];
                    for pi in shifted::strict_partitions(n) {
                        let ideal = ideal_from_partition(&f, &pi).unwrap();
                        let slot = count_pi_lambda(&f, dnr, ideal, &lam_hat_t).unwrap();
                        assert_eq!(naive_term(n, &pi, r, &lambda), slot, "n={n} r={r} π={pi:?} λ={lambda:?}");
                        differs |= count_pi_lambda(&f, dr, ideal, &lam_pos).unwrap()
                            != count_pi_lambda(&f, dr, ideal, &lam_hat_pos).unwrap();
                    }
                }
            }
        }
        assert!(differs);
    }

    #[test]
    fn naive_inequalities_are_necessary_on_small_lagrangians() {
        for n in 1..=4 {
            for source in [LambdaSource::Recursion, LambdaSource::Oracle] {
                let c = compare_naive_lg(n, 3, source).unwrap();
                assert!(c.false_negatives.is_empty(), "LG({n}): {:?}", c.false_negatives.first());
                assert!(c.false_positives.is_empty(), "LG({n}): {:?}", c.false_positives.first());
            }
        }
        // Identities padded by a dual pair pass.
        let pi = vec![3, 1];
        let dual: Partition = {
            let space: Space = build_space("LG(3)").unwrap();
            let f = &space.factors[0];
            let d = f.dual(ideal_from_partition(f, &pi).unwrap());
            trim(&partition(f, d).unwrap())
        };
        assert!(naive_lg_check(3, &[vec![], pi, dual], LambdaSource::Recursion).unwrap().passes);
        assert!(naive_lg_check(3, &[vec![3]], LambdaSource::Recursion).is_err());
    }
}
