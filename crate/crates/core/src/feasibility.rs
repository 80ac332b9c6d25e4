//! The recursive feasibility test.
//!
//! A tuple `(π_1, …, π_s)` of positions on a cominuscule `G/P` is feasible
//! iff the basic codimension inequality `Σ |π_i| ≤ dim G/P` holds and, for
//! every orbit datum of rank `r` and every feasible tuple `(λ_1, …, λ_s)` on
//! its Levi quotient `L/Q`,
//!
//! ```text
//! Σ_i |Inv^c(π_i) ∩ λ_i Φ(z)| ≤ |Φ(z)|.
//! ```
//!
//! In [`Mode::Top`] only top-degree `λ`-tuples are used; in [`Mode::Full`]
//! every feasible `λ`-tuple is. Feasibility of `λ`-tuples is decided by the
//! same procedure on the smaller space, and products are handled factor by
//! factor.

use crate::bits::Bits;
use crate::coset;
use crate::error::{Error, Result};
use crate::orbit::{m_of_p, OrbitDatum};
use crate::space::{CominusculeSpace, Position, Signature, Space, DEFAULT_IDEAL_CAP};
use parking_lot::RwLock;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

/// Default cap on the number of candidate tuples examined per enumeration.
pub const DEFAULT_TUPLE_CAP: usize = 20_000_000;

/// Which `λ`-tuples the recursion ranges over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Feasible top-degree `λ`-tuples only.
    #[default]
    Top,
    /// All feasible `λ`-tuples.
    Full,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "top" => Ok(Mode::Top),
            "full" => Ok(Mode::Full),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}; expected top or full"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Top => "top",
            Mode::Full => "full",
        })
    }
}

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of order ideals enumerated for one space.
    pub ideals: usize,
    /// Maximum number of candidate tuples examined by one enumeration.
    pub tuples: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { ideals: DEFAULT_IDEAL_CAP, tuples: DEFAULT_TUPLE_CAP }
    }
}

/// A violated inequality. `r = 0` denotes the basic codimension inequality,
/// whose `λ`-tuple is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Index of the factor of a product space the inequality lives on.
    pub factor: usize,
    pub r: usize,
    /// One position on `L/Q` per slot.
    pub lambdas: Vec<Position>,
    pub lhs: usize,
    pub rhs: usize,
}

/// Verdict of [`Solver::is_feasible`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// The first violated inequality in canonical order.
    pub witness: Option<Witness>,
}

/// One linear inequality `Σ_i |Inv^c(π_i) ∩ slots[i]| ≤ rhs` on a factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub factor: usize,
    /// Orbit rank; 0 for the basic codimension inequality.
    pub r: usize,
    pub lambdas: Vec<Position>,
    /// `λ_i Φ(z)` as sets of weights of the factor.
    pub slots: Vec<Bits>,
    pub rhs: usize,
}

impl Inequality {
    /// Left-hand side on a tuple of positions of the whole space.
    pub fn lhs(&self, space: &Space, positions: &[Position]) -> usize {
        let f = &space.factors[self.factor];
        positions.iter().zip(&self.slots).map(|(p, &s)| f.coinversions(p[self.factor]).intersect(s).len()).sum()
    }

    pub fn holds(&self, space: &Space, positions: &[Position]) -> bool {
        self.lhs(space, positions) <= self.rhs
    }
}

/// `|π|_λ = |Inv^c(π) ∩ λΦ(z)|`.
pub fn count_pi_lambda(space: &CominusculeSpace, datum: &OrbitDatum, pi: Bits, lambda: &Position) -> Result<usize> {
    space.check_position(pi)?;
    Ok(space.coinversions(pi).intersect(datum.lambda_z(lambda)?).len())
}

/// `|S ∖ Inv(πλ)|` for an upper set `S` of weights, computed from the
/// inversion set of the product `πλ`.
pub fn generalized_codim(
    space: &CominusculeSpace,
    s: Bits,
    pi: Bits,
    datum: &OrbitDatum,
    lambda: &Position,
) -> Result<usize> {
    if !space.is_upper_set(s) {
        return Err(Error::InvalidArgument("S is not an upper set of weights".into()));
    }
    let inv = coset::pi_lambda_inv(space, pi, datum, lambda)?;
    Ok(s.iter().filter(|&w| !inv.contains(&space.weight_root(w))).count())
}

type TupleList = Arc<Vec<Vec<usize>>>;
type MemoKey = (Signature, Mode, Vec<Bits>);
type TupleKey = (Signature, usize, bool, Mode);

/// Feasibility engine with caches for verdicts and feasible tuple lists.
///
/// Caches are shared behind read-write locks; no lock is held while a value
/// is being computed, so concurrent callers may duplicate work but never
/// block each other.
pub struct Solver {
    caps: Caps,
    memo: RwLock<HashMap<MemoKey, bool>>,
    tuples: RwLock<HashMap<TupleKey, TupleList>>,
}

impl Default for Solver {
    fn default() -> Solver {
        Solver::new(Caps::default())
    }
}

impl Solver {
    pub fn new(caps: Caps) -> Solver {
        Solver { caps, memo: RwLock::new(HashMap::new()), tuples: RwLock::new(HashMap::new()) }
    }

    /// A process-wide solver with default caps.
    pub fn global() -> &'static Solver {
        static GLOBAL: OnceLock<Solver> = OnceLock::new();
        GLOBAL.get_or_init(Solver::default)
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Decides feasibility of a tuple of positions on a product space.
    pub fn is_feasible(&self, space: &Space, positions: &[Position], mode: Mode) -> Result<FeasibilityReport> {
        for p in positions {
            space.check_position(p)?;
        }
        for (j, f) in space.factors.iter().enumerate() {
            let ideals: Vec<Bits> = positions.iter().map(|p| p[j]).collect();
            if let Some(mut w) = self.check(f, &ideals, mode)? {
                w.factor = j;
                return Ok(FeasibilityReport { feasible: false, witness: Some(w) });
            }
        }
        Ok(FeasibilityReport { feasible: true, witness: None })
    }

    /// Memoised verdict on a simple space.
    pub fn feasible_simple(&self, space: &CominusculeSpace, ideals: &[Bits], mode: Mode) -> Result<bool> {
        if ideals.len() <= 1 {
            return Ok(true);
        }
        let mut key = ideals.to_vec();
        key.sort();
        let key = (space.signature(), mode, key);
        if let Some(&v) = self.memo.read().get(&key) {
            return Ok(v);
        }
        let v = self.check(space, ideals, mode)?.is_none();
        self.memo.write().insert(key, v);
        Ok(v)
    }

    /// The first violated inequality on a simple space, if any.
    fn check(&self, space: &CominusculeSpace, ideals: &[Bits], mode: Mode) -> Result<Option<Witness>> {
        let s = ideals.len();
        if s <= 1 {
            return Ok(None);
        }
        let lhs: usize = ideals.iter().map(|&p| space.codim(p)).sum();
        if lhs > space.dim() {
            return Ok(Some(Witness { factor: 0, r: 0, lambdas: vec![], lhs, rhs: space.dim() }));
        }
        let coinv: Vec<Bits> = ideals.iter().map(|&p| space.coinversions(p)).collect();
        for datum in m_of_p(space)?.iter() {
            let lists: Vec<TupleList> = datum
                .factors
                .iter()
                .map(|f| self.feasible_tuples(&f.space, s, mode == Mode::Top, mode))
                .collect::<Result<_>>()?;
            let rhs = datum.dim_z();
            let mut found = None;
            for_each_product(&lists, |choice| {
                let lhs: usize = (0..s)
                    .map(|i| {
                        let idx: usize = choice
                            .iter()
                            .zip(&lists)
                            .zip(datum.strides())
                            .map(|((&t, list), &stride)| list[t][i] * stride)
                            .sum();
                        coinv[i].intersect(datum.mask(idx)).len()
                    })
                    .sum();
                if lhs > rhs {
                    found = Some((choice.to_vec(), lhs));
                    return false;
                }
                true
            });
            if let Some((choice, lhs)) = found {
                let mut lambdas = vec![Vec::with_capacity(datum.factors.len()); s];
                for ((&t, list), f) in choice.iter().zip(&lists).zip(&datum.factors) {
                    let fideals = f.space.ideals()?;
                    for (i, slot) in lambdas.iter_mut().enumerate() {
                        slot.push(fideals.list[list[t][i]]);
                    }
                }
                return Ok(Some(Witness { factor: 0, r: datum.r, lambdas, lhs, rhs }));
            }
        }
        Ok(None)
    }

    /// Feasible `s`-tuples on a simple space as ideal indices, sorted
    /// lexicographically. With `top_only` only tuples with `Σ codim = dim`
    /// are listed, otherwise all with `Σ codim ≤ dim`.
    pub fn feasible_tuples(&self, space: &CominusculeSpace, s: usize, top_only: bool, mode: Mode) -> Result<TupleList> {
        let key = (space.signature(), s, top_only, mode);
        if let Some(v) = self.tuples.read().get(&key) {
            return Ok(v.clone());
        }
        let ideals = space.ideals()?;
        if ideals.list.len() > self.caps.ideals {
            return Err(Error::CapExceeded { what: format!("ideals of {}", space.name()), cap: self.caps.ideals });
        }
        let codims: Vec<usize> = ideals.list.iter().map(|&b| space.codim(b)).collect();
        let dim = space.dim();
        let mut candidates = Vec::new();
        let mut current = Vec::with_capacity(s);
        let mut overflow = false;
        multisets(&codims, s, 0, 0, dim, top_only, &mut current, &mut candidates, self.caps.tuples, &mut overflow);
        if overflow {
            return Err(Error::CapExceeded { what: format!("{s}-tuples on {}", space.name()), cap: self.caps.tuples });
        }
        let verdicts: Vec<bool> = candidates
            .par_iter()
            .map(|c| {
                let t: Vec<Bits> = c.iter().map(|&i| ideals.list[i]).collect();
                self.feasible_simple(space, &t, mode)
            })
            .collect::<Result<_>>()?;
        let mut out = Vec::new();
        for (c, ok) in candidates.iter().zip(verdicts) {
            if ok {
                permutations(c, &mut out);
                if out.len() > self.caps.tuples {
                    return Err(Error::CapExceeded {
                        what: format!("{s}-tuples on {}", space.name()),
                        cap: self.caps.tuples,
                    });
                }
            }
        }
        out.sort();
        let out = Arc::new(out);
        self.tuples.write().insert(key, out.clone());
        Ok(out)
    }

    /// Feasible `s`-tuples on a product space in canonical order.
    pub fn enumerate_feasible(
        &self,
        space: &Space,
        s: usize,
        top_only: bool,
        mode: Mode,
    ) -> Result<Vec<Vec<Position>>> {
        let lists: Vec<TupleList> =
            space.factors.iter().map(|f| self.feasible_tuples(f, s, top_only, mode)).collect::<Result<_>>()?;
        let ideals: Vec<_> = space.factors.iter().map(|f| f.ideals()).collect::<Result<_>>()?;
        let total = lists.iter().try_fold(1usize, |acc, l| acc.checked_mul(l.len()));
        if total.is_none_or(|t| t > self.caps.tuples) {
            return Err(Error::CapExceeded { what: format!("{s}-tuples on {}", space.name()), cap: self.caps.tuples });
        }
        let mut out = Vec::new();
        for_each_product(&lists, |choice| {
            let tuple: Vec<Position> = (0..s)
                .map(|i| choice.iter().enumerate().map(|(j, &t)| ideals[j].list[lists[j][t][i]]).collect())
                .collect();
            out.push(tuple);
            true
        });
        Ok(out)
    }

    /// The basic codimension inequality and one inequality per orbit datum
    /// and feasible top-degree `λ`-tuple, for every factor.
    pub fn emit_inequalities(&self, space: &Space, s: usize) -> Result<Vec<Inequality>> {
        let mut out = Vec::new();
        for (j, f) in space.factors.iter().enumerate() {
            out.push(Inequality { factor: j, r: 0, lambdas: vec![], slots: vec![f.full(); s], rhs: f.dim() });
            for datum in m_of_p(f)?.iter() {
                let lq = datum.levi_quotient();
                for lambdas in self.enumerate_feasible(&lq, s, true, Mode::Top)? {
                    let slots = lambdas.iter().map(|l| datum.lambda_z(l)).collect::<Result<_>>()?;
                    out.push(Inequality { factor: j, r: datum.r, lambdas, slots, rhs: datum.dim_z() });
                }
            }
        }
        Ok(out)
    }
}

/// Calls `f` on every index vector of the Cartesian product of the lists in
/// lexicographic order until it returns `false`.
fn for_each_product<T>(lists: &[Arc<Vec<T>>], mut f: impl FnMut(&[usize]) -> bool) {
    if lists.iter().any(|l| l.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        if !f(&idx) {
            return;
        }
        let mut j = lists.len();
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < lists[j].len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Non-decreasing index sequences of length `s` whose codimensions sum to
/// `dim` (or at most `dim`).
#[allow(clippy::too_many_arguments)]
fn multisets(
    codims: &[usize],
    s: usize,
    start: usize,
    sum: usize,
    dim: usize,
    top_only: bool,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
    overflow: &mut bool,
) {
    if *overflow {
        return;
    }
    if current.len() == s {
        if !top_only || sum == dim {
            out.push(current.clone());
            if out.len() > cap {
                *overflow = true;
            }
        }
        return;
    }
    for i in start..codims.len() {
        if sum + codims[i] > dim {
            continue;
        }
        current.push(i);
        multisets(codims, s, i, sum + codims[i], dim, top_only, current, out, cap, overflow);
        current.pop();
    }
}

/// Appends the distinct permutations of a sorted sequence.
fn permutations(sorted: &[usize], out: &mut Vec<Vec<usize>>) {
    fn go(rest: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(current.clone());
            return;
        }
        let mut prev = None;
        for i in 0..rest.len() {
            if prev == Some(rest[i]) {
                continue;
            }
            prev = Some(rest[i]);
            let x = rest.remove(i);
            current.push(x);
            go(rest, current, out);
            current.pop();
            rest.insert(i, x);
        }
    }
    go(&mut sorted.to_vec(), &mut Vec::new(), out);
}

/// [`Solver::is_feasible`] on the global solver.
pub fn is_feasible(space: &Space, positions: &[Position], mode: Mode) -> Result<FeasibilityReport> {
    Solver::global().is_feasible(space, positions, mode)
}

/// [`Solver::enumerate_feasible`] on the global solver.
pub fn enumerate_feasible(space: &Space, s: usize, top_only: bool) -> Result<Vec<Vec<Position>>> {
    Solver::global().enumerate_feasible(space, s, top_only, Mode::Top)
}

/// [`Solver::emit_inequalities`] on the global solver.
pub fn emit_inequalities(space: &Space, s: usize) -> Result<Vec<Inequality>> {
    Solver::global().emit_inequalities(space, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_ideal, parse_position};
    use crate::space::build_space;
    use proptest::prelude::*;

    fn simple(text: &str) -> Arc<CominusculeSpace> {
        build_space(text).unwrap().factors[0].clone()
    }

    fn parse(space: &Space, texts: &[&str]) -> Vec<Position> {
        texts.iter().map(|t| parse_position(space, t).unwrap()).collect()
    }

    #[test]
    fn identities_are_feasible() {
        for name in ["Gr(2,4)", "LG(3)", "Q(6)", "OP2", "Q(2)", "pt"] {
            let space = build_space(name).unwrap();
            // The fundamental class: every weight is an inversion.
            let e: Position = space.factors.iter().map(|f| f.full()).collect();
            for s in 1..=4 {
                assert!(is_feasible(&space, &vec![e.clone(); s], Mode::Top).unwrap().feasible);
            }
        }
    }

    #[test]
    fn gr24_two_by_one_one_is_infeasible() {
        let space = build_space("Gr(2,4)").unwrap();
        let report = is_feasible(&space, &parse(&space, &["(2)", "(1,1)"]), Mode::Top).unwrap();
        assert!(!report.feasible);
        let w = report.witness.unwrap();
        assert!(w.lhs > w.rhs);
        assert!(w.r >= 1);
        assert!(is_feasible(&space, &parse(&space, &["(2)", "(2)"]), Mode::Top).unwrap().feasible);
        assert!(is_feasible(&space, &parse(&space, &["(1)", "(1)", "(1)", "(1)"]), Mode::Top).unwrap().feasible);
        let over = is_feasible(&space, &parse(&space, &["(2,1)", "(2)"]), Mode::Top).unwrap();
        assert_eq!(over.witness.unwrap().r, 0);
    }

    #[test]
    fn projective_line_pairs() {
        let space = build_space("Gr(1,2)").unwrap();
        let tuples = enumerate_feasible(&space, 2, true).unwrap();
        assert_eq!(tuples.len(), 2);
        assert_eq!(enumerate_feasible(&build_space("pt").unwrap(), 3, true).unwrap(), vec![vec![vec![]; 3]]);
    }

    #[test]
    fn worked_values() {
        // Gr(5,11), r=2: crossing rows 2 and 4 and columns 1 and 5 (counted
        // from the left) leaves 7 boxes of the coinversion diagram.
        let s = simple("Gr(5,11)");
        let pi = parse_ideal(&s, "1 3 6 7 10 | 2 4 5 8 9 11").unwrap();
        let data = m_of_p(&s).unwrap();
        let d = &data[1];
        let target = Bits::from_indices((0..s.dim()).filter(|&w| {
            let (i, j) = crate::notation::cell(&s, w).unwrap();
            ![2, 4].contains(&i) && ![1, 5].contains(&j)
        }));
        let lq = d.levi_quotient();
        let lambda = lq
            .enumerate_positions(1 << 20, None)
            .unwrap()
            .into_iter()
            .find(|l| d.lambda_z(l).unwrap() == target)
            .unwrap();
        assert_eq!(count_pi_lambda(&s, d, pi, &lambda).unwrap(), 7);
        // Staircases: cross out the rows and columns through the removed
        // diagonal indices.
        for (name, pi, removed, r, expect) in
            [("LG(7)", "7 5 2 1", vec![2, 3, 6], 3, 5), ("OG(9)", "8 5 3 2", vec![3, 5, 6, 9], 2, 6)]
        {
            let s = simple(name);
            let pi = parse_ideal(&s, pi).unwrap();
            let data = m_of_p(&s).unwrap();
            let d = &data[r - 1];
            let target = Bits::from_indices((0..s.dim()).filter(|&w| {
                let (i, j) = crate::notation::cell(&s, w).unwrap();
                !removed.contains(&i) && !removed.contains(&j)
            }));
            let lq = d.levi_quotient();
            let lambda = lq
                .enumerate_positions(1 << 20, None)
                .unwrap()
                .into_iter()
                .find(|l| d.lambda_z(l).unwrap() == target)
                .unwrap();
            assert_eq!(count_pi_lambda(&s, d, pi, &lambda).unwrap(), expect, "{name}");
        }
    }

    #[test]
    fn generalized_codim_agrees_with_count() {
        for name in ["Gr(2,5)", "Gr(3,6)", "LG(3)", "OG(5)", "Q(6)", "Q(7)"] {
            let s = simple(name);
            for d in m_of_p(&s).unwrap().iter() {
                let lq = d.levi_quotient();
                for lambda in lq.enumerate_positions(1 << 20, None).unwrap() {
                    for &pi in &s.ideals().unwrap().list {
                        assert_eq!(
                            generalized_codim(&s, d.phi_z, pi, d, &lambda).unwrap(),
                            count_pi_lambda(&s, d, pi, &lambda).unwrap()
                        );
                    }
                }
            }
            // Trivial cases: S = Φ(g/p) with λ = e gives the codimension.
            let d = &m_of_p(&s).unwrap()[0];
            let e: Position = d.factors.iter().map(|_| Bits::EMPTY).collect();
            for &pi in &s.ideals().unwrap().list {
                assert_eq!(generalized_codim(&s, s.full(), pi, d, &e).unwrap(), s.codim(pi));
                assert_eq!(generalized_codim(&s, Bits::EMPTY, pi, d, &e).unwrap(), 0);
            }
            assert!(generalized_codim(&s, Bits::singleton(0), Bits::EMPTY, d, &e).is_err());
        }
    }

    #[test]
    fn inversion_identity_cardinality() {
        let s = simple("Gr(2,4)");
        let d = &m_of_p(&s).unwrap()[0];
        let lq = d.levi_quotient();
        for lambda in lq.enumerate_positions(1 << 20, None).unwrap() {
            let lam_len: usize = lambda.iter().map(|b| b.len()).sum();
            for &pi in &s.ideals().unwrap().list {
                let inv = coset::pi_lambda_inv(&s, pi, d, &lambda).unwrap();
                assert_eq!(inv.len(), pi.len() + lam_len);
                let word = coset::pi_lambda_word(&s, pi, d, &lambda).unwrap();
                assert_eq!(s.root_system().inversion_set(&word).unwrap(), inv);
            }
        }
    }

    #[test]
    fn emitted_inequalities_cut_out_the_feasible_set() {
        for (name, s) in [("Gr(2,4)", 3), ("LG(3)", 3), ("Q(8)", 2), ("Gr(2,5)", 3)] {
            let space = build_space(name).unwrap();
            let ineqs = emit_inequalities(&space, s).unwrap();
            let feasible = enumerate_feasible(&space, s, true).unwrap();
            let all: Vec<Vec<Position>> = {
                let f = &space.factors[0];
                let list = f.ideals().unwrap().list.clone();
                let mut out = vec![vec![]];
                for _ in 0..s {
                    out = out
                        .into_iter()
                        .flat_map(|t: Vec<Position>| {
                            list.iter().map(move |&b| {
                                let mut t = t.clone();
                                t.push(vec![b]);
                                t
                            })
                        })
                        .collect();
                }
                out.into_iter().filter(|t| space.dim() == t.iter().map(|p| space.codim(p)).sum::<usize>()).collect()
            };
            for t in &all {
                let accepted = ineqs.iter().all(|q| q.holds(&space, t));
                assert_eq!(accepted, feasible.contains(t), "{name} {t:?}");
            }
            let id = vec![space.factors.iter().map(|f| f.full()).collect::<Position>(); s];
            assert!(ineqs.iter().all(|q| q.holds(&space, &id)));
        }
    }

    #[test]
    fn mode_agreement_and_monotonicity_small() {
        let solver = Solver::default();
        for name in ["Gr(2,4)", "Gr(2,5)", "LG(3)", "OG(4)", "Q(6)", "Q(7)"] {
            let space = build_space(name).unwrap();
            let f = &space.factors[0];
            let list = f.ideals().unwrap().list.clone();
            for &a in &list {
                for &b in &list {
                    for &c in &list {
                        let t = vec![vec![a], vec![b], vec![c]];
                        let top = solver.is_feasible(&space, &t, Mode::Top).unwrap().feasible;
                        let full = solver.is_feasible(&space, &t, Mode::Full).unwrap().feasible;
                        assert_eq!(top, full, "{name} {t:?}");
                        if top {
                            // Enlarging an ideal lowers codimension.
                            for w in 0..f.dim() {
                                let bigger = a.with(w);
                                if f.is_lower_ideal(bigger) {
                                    let t2 = vec![vec![bigger], vec![b], vec![c]];
                                    assert!(solver.is_feasible(&space, &t2, Mode::Top).unwrap().feasible);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn products_are_componentwise() {
        let q2 = build_space("Q(2)").unwrap();
        let bad = parse(&q2, &["(1);()", "(1);()"]);
        let report = is_feasible(&q2, &bad, Mode::Top).unwrap();
        assert!(!report.feasible);
        assert_eq!(report.witness.unwrap().factor, 0);
        assert!(is_feasible(&q2, &parse(&q2, &["(1);()", "();(1)"]), Mode::Top).unwrap().feasible);
        assert_eq!(enumerate_feasible(&q2, 2, true).unwrap().len(), 4);
        assert_eq!(enumerate_feasible(&q2, 2, false).unwrap().len(), 9);
    }

    #[test]
    fn caps_are_enforced() {
        let solver = Solver::new(Caps { ideals: 1_000, tuples: 10 });
        let space = build_space("Gr(2,5)").unwrap();
        assert!(matches!(solver.enumerate_feasible(&space, 3, true, Mode::Top), Err(Error::CapExceeded { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn feasibility_is_permutation_invariant_and_dual_pairs_are_feasible(
            idx in proptest::collection::vec(0usize..70, 3),
            name in prop::sample::select(vec!["Gr(3,6)", "LG(4)", "OG(6)", "Q(9)", "Q(10)"]),
        ) {
            let space = build_space(name).unwrap();
            let f = &space.factors[0];
            let list = &f.ideals().unwrap().list;
            let t: Vec<Position> = idx.iter().map(|&i| vec![list[i % list.len()]]).collect();
            let v = is_feasible(&space, &t, Mode::Top).unwrap().feasible;
            let mut r = t.clone();
            r.rotate_left(1);
            prop_assert_eq!(v, is_feasible(&space, &r, Mode::Top).unwrap().feasible);
            r.swap(0, 1);
            prop_assert_eq!(v, is_feasible(&space, &r, Mode::Top).unwrap().feasible);
            let p = t[0][0];
            prop_assert!(is_feasible(&space, &[vec![p], vec![f.dual(p)]], Mode::Top).unwrap().feasible);
        }
    }
}
