//! Root systems of types A, B, C, D, E6 and E7 in exact integer arithmetic.
//!
//! Roots are stored by their coefficients on the simple roots. The bilinear
//! form is the symmetrised Cartan form with Bourbaki labelling: in simply
//! laced types every root has norm 2; in types B and C long roots have norm 4
//! and short roots norm 2. Simple roots are positive.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

/// Dynkin type letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
}

impl CartanType {
    pub fn from_letter(c: char) -> Option<CartanType> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanType::A),
            'B' => Some(CartanType::B),
            'C' => Some(CartanType::C),
            'D' => Some(CartanType::D),
            'E' => Some(CartanType::E),
            _ => None,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A root, given by its coefficients `m_δ(β)` on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub coords: Vec<i32>,
    pub long: bool,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }
}

/// A finite crystallographic root system with precomputed reflection tables.
///
/// Root indices `0..num_positive()` are the positive roots in canonical order
/// (height, then reverse lexicographic on coordinates); index `i + num_positive()` is
/// the negative of root `i`. Simple root `s` has root index `s`.
#[derive(Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    gram: Vec<Vec<i32>>,
    roots: Vec<Root>,
    lookup: HashMap<Vec<i32>, usize>,
    norms: Vec<i32>,
    reflect: Vec<Vec<usize>>,
    highest: usize,
}

/// Element of the Weyl group with a reduced word and its inversion set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Simple reflection indices; the rightmost letter acts first.
    pub word: Vec<usize>,
    /// `Inv(w) = {β > 0 : w(β) < 0}` as positive-root indices.
    pub inv: BTreeSet<usize>,
}

/// Default hard cap for [`RootSystem::weyl_enumerate`].
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

fn gram_matrix(t: CartanType, n: usize) -> Result<Vec<Vec<i32>>> {
    let bad = || Error::UnsupportedRootSystem(format!("{t}{n}"));
    let ok = match t {
        CartanType::A => n >= 1,
        CartanType::B | CartanType::C => n >= 2,
        CartanType::D => n >= 3,
        CartanType::E => n == 6 || n == 7,
    };
    if !ok {
        return Err(bad());
    }
    let mut g = vec![vec![0i32; n]; n];
    let bond = |g: &mut Vec<Vec<i32>>, i: usize, j: usize, v: i32| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t {
        CartanType::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 1 {
                bond(&mut g, i, i + 1, -1);
            }
        }
        CartanType::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                bond(&mut g, i, i + 1, -2);
            }
        }
        CartanType::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 2, n - 1, -2);
        }
        CartanType::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                bond(&mut g, i, i + 1, -1);
            }
            bond(&mut g, n - 3, n - 1, -1);
        }
        CartanType::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            bond(&mut g, 0, 2, -1);
            bond(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                bond(&mut g, i, i + 1, -1);
            }
        }
    }
    Ok(g)
}

impl RootSystem {
    /// Builds the root system of the given type and rank by closing the
    /// simple roots under simple reflections.
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<RootSystem> {
        let gram = gram_matrix(cartan_type, rank)?;
        let n = rank;
        let ip = |a: &[i32], b: &[i32]| -> i32 {
            let mut s = 0;
            for i in 0..n {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..n {
                    s += a[i] * gram[i][j] * b[j];
                }
            }
            s
        };
        let unit = |i: usize| {
            let mut v = vec![0i32; n];
            v[i] = 1;
            v
        };
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..n {
            seen.insert(unit(i));
            queue.push_back(unit(i));
        }
        while let Some(b) = queue.pop_front() {
            for s in 0..n {
                let e = unit(s);
                let p = 2 * ip(&b, &e) / gram[s][s];
                let mut c = b.clone();
                c[s] -= p;
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let mut pos: Vec<Vec<i32>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let np = pos.len();
        let mut coords = pos.clone();
        coords.extend(pos.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
        let norms: Vec<i32> = coords.iter().map(|c| ip(c, c)).collect();
        let max_norm = *norms.iter().max().expect("nonempty root system");
        let roots: Vec<Root> =
            coords.iter().zip(&norms).map(|(c, &nm)| Root { coords: c.clone(), long: nm == max_norm }).collect();
        let lookup: HashMap<Vec<i32>, usize> = coords.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let mut reflect = vec![vec![0usize; roots.len()]; n];
        for s in 0..n {
            let e = unit(s);
            for (i, c) in coords.iter().enumerate() {
                let p = 2 * ip(c, &e) / gram[s][s];
                let mut d = c.clone();
                d[s] -= p;
                reflect[s][i] = lookup[&d];
            }
        }
        let highest = np - 1;
        Ok(RootSystem { cartan_type, rank, gram, roots, lookup, norms, reflect, highest })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Name such as `E6` or `B3`.
    pub fn name(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Index of the root with the given simple-root coordinates.
    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn negate(&self, i: usize) -> usize {
        let np = self.num_positive();
        if i < np {
            i + np
        } else {
            i - np
        }
    }

    /// Symmetrised Cartan form on simple roots.
    pub fn gram(&self) -> &[Vec<i32>] {
        &self.gram
    }

    pub fn highest_root(&self) -> usize {
        self.highest
    }

    /// Squared length `(β, β)`.
    pub fn norm(&self, i: usize) -> i32 {
        self.norms[i]
    }

    /// The invariant form `(β, γ)`.
    pub fn inner(&self, b: usize, c: usize) -> i32 {
        let (x, y) = (&self.roots[b].coords, &self.roots[c].coords);
        let mut s = 0;
        for i in 0..self.rank {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// The pairing `⟨β, α⟩ = 2(β, α)/(α, α)`.
    pub fn pairing(&self, beta: usize, alpha: usize) -> i32 {
        2 * self.inner(beta, alpha) / self.norms[alpha]
    }

    /// Image of root `i` under the simple reflection `s`.
    pub fn reflect(&self, s: usize, i: usize) -> usize {
        self.reflect[s][i]
    }

    /// Applies a word (rightmost letter first) to a root.
    pub fn act(&self, word: &[usize], root: usize) -> Result<usize> {
        let mut r = root;
        for &s in word.iter().rev() {
            if s >= self.rank {
                return Err(Error::InvalidArgument(format!("letter {s} out of range for {}", self.name())));
            }
            r = self.reflect[s][r];
        }
        Ok(r)
    }

    /// `Inv(w)` of a word, computed by acting on every positive root.
    pub fn inversion_set(&self, word: &[usize]) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for b in 0..self.num_positive() {
            if !self.is_positive(self.act(word, b)?) {
                out.insert(b);
            }
        }
        Ok(out)
    }

    /// Coefficient of the highest root on simple root `node`.
    pub fn highest_coefficient(&self, node: usize) -> i32 {
        self.roots[self.highest].coords[node]
    }

    /// Enumerates the whole Weyl group by breadth-first search on length.
    ///
    /// Refuses with [`Error::CapExceeded`] once more than `cap` elements
    /// have been produced.
    pub fn weyl_enumerate(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let mut out = vec![WeylElement { word: vec![], inv: BTreeSet::new() }];
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::new();
        seen.insert(BTreeSet::new());
        let mut frontier = 0;
        while frontier < out.len() {
            let w = out[frontier].clone();
            frontier += 1;
            for s in 0..self.rank {
                if w.inv.contains(&s) {
                    continue;
                }
                // Inv(w s) = s Inv(w) ⊔ {α_s} when α_s is not an inversion of w.
                let mut inv: BTreeSet<usize> = w.inv.iter().map(|&b| self.reflect[s][b]).collect();
                inv.insert(s);
                if seen.insert(inv.clone()) {
                    let mut word = w.word.clone();
                    word.push(s);
                    out.push(WeylElement { word, inv });
                    if out.len() > cap {
                        return Err(Error::CapExceeded { what: format!("Weyl group of {}", self.name()), cap });
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<(CartanType, usize)> {
        let mut v = vec![];
        for n in 1..=7 {
            v.push((CartanType::A, n));
        }
        for n in 2..=6 {
            v.push((CartanType::B, n));
            v.push((CartanType::C, n));
        }
        for n in 3..=7 {
            v.push((CartanType::D, n));
        }
        v.push((CartanType::E, 6));
        v.push((CartanType::E, 7));
        v
    }

    fn classical_count(t: CartanType, n: usize) -> usize {
        match t {
            CartanType::A => n * (n + 1),
            CartanType::B | CartanType::C => 2 * n * n,
            CartanType::D => 2 * n * (n - 1),
            CartanType::E => {
                if n == 6 {
                    72
                } else {
                    126
                }
            }
        }
    }

    #[test]
    fn root_counts_match_classical_formulas() {
        for (t, n) in all_types() {
            let rs = RootSystem::new(t, n).unwrap();
            assert_eq!(rs.num_roots(), classical_count(t, n), "{t}{n}");
        }
    }

    #[test]
    fn unsupported_ranks_are_rejected() {
        assert!(RootSystem::new(CartanType::B, 1).is_err());
        assert!(RootSystem::new(CartanType::D, 2).is_err());
        assert!(RootSystem::new(CartanType::E, 8).is_err());
        assert!(RootSystem::new(CartanType::A, 0).is_err());
    }

    #[test]
    fn a2_small_facts() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        assert_eq!(rs.num_roots(), 6);
        assert_eq!(rs.root(rs.highest_root()).coords, vec![1, 1]);
        assert_eq!(rs.pairing(0, 1), -1);
        assert_eq!(rs.pairing(0, 0), 2);
    }

    #[test]
    fn c3_highest_root_has_unit_coefficient_on_long_simple_root() {
        let rs = RootSystem::new(CartanType::C, 3).unwrap();
        assert_eq!(rs.root(rs.highest_root()).coords, vec![2, 2, 1]);
        assert!(rs.root(2).long && !rs.root(0).long);
    }

    #[test]
    fn reflection_closure_and_sign_split() {
        for (t, n) in all_types() {
            let rs = RootSystem::new(t, n).unwrap();
            let np = rs.num_positive();
            for i in 0..rs.num_roots() {
                let r = rs.root(i);
                let nonzero_signs: HashSet<bool> = r.coords.iter().filter(|&&c| c != 0).map(|&c| c > 0).collect();
                assert_eq!(nonzero_signs.len(), 1);
                assert_eq!(r.is_positive(), i < np);
                assert_eq!(rs.negate(rs.negate(i)), i);
                for s in 0..n {
                    assert_eq!(rs.reflect(s, rs.reflect(s, i)), i);
                }
            }
            for s in 0..n {
                // s_δ permutes Φ⁺ ∖ {δ}.
                let image: HashSet<usize> = (0..np).filter(|&b| b != s).map(|b| rs.reflect(s, b)).collect();
                assert!(image.iter().all(|&b| b < np && b != s));
            }
            let h = rs.highest_root();
            for i in 0..np {
                for s in 0..n {
                    let sum: Vec<i32> =
                        rs.root(h).coords.iter().enumerate().map(|(j, &c)| c + (j == s) as i32).collect();
                    assert!(rs.index_of(&sum).is_none(), "highest root is maximal");
                }
                assert!(rs.root(i).height() <= rs.root(h).height());
            }
        }
    }

    #[test]
    fn pairing_values_with_long_roots() {
        for (t, n) in all_types() {
            let rs = RootSystem::new(t, n).unwrap();
            for a in 0..rs.num_roots() {
                assert_eq!(rs.pairing(a, a), 2);
                if !rs.root(a).long {
                    continue;
                }
                for b in 0..rs.num_roots() {
                    let p = rs.pairing(b, a);
                    assert!((-2..=2).contains(&p));
                    if p.abs() == 2 {
                        assert!(b == a || b == rs.negate(a));
                    }
                    if p < 0 && b != rs.negate(a) {
                        let sum: Vec<i32> =
                            rs.root(b).coords.iter().zip(&rs.root(a).coords).map(|(x, y)| x + y).collect();
                        assert!(rs.index_of(&sum).is_some(), "β+α must be a root");
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_group_orders() {
        let cases = [
            (CartanType::A, 2, 6),
            (CartanType::A, 3, 24),
            (CartanType::B, 3, 48),
            (CartanType::C, 3, 48),
            (CartanType::D, 4, 192),
        ];
        for (t, n, order) in cases {
            let rs = RootSystem::new(t, n).unwrap();
            let w = rs.weyl_enumerate(DEFAULT_WEYL_CAP).unwrap();
            assert_eq!(w.len(), order);
            let longest = w.iter().map(|e| e.inv.len()).max().unwrap();
            assert_eq!(longest, rs.num_positive());
        }
        let a2 = RootSystem::new(CartanType::A, 2).unwrap().weyl_enumerate(10).unwrap();
        assert_eq!(a2.iter().map(|e| e.inv.len()).max(), Some(3));
        assert!(matches!(
            RootSystem::new(CartanType::A, 4).unwrap().weyl_enumerate(50),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn weyl_words_are_reduced_and_inversion_sets_distinct() {
        for (t, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::D, 4)] {
            let rs = RootSystem::new(t, n).unwrap();
            let w = rs.weyl_enumerate(DEFAULT_WEYL_CAP).unwrap();
            let distinct: HashSet<_> = w.iter().map(|e| e.inv.clone()).collect();
            assert_eq!(distinct.len(), w.len());
            for e in &w {
                assert_eq!(e.word.len(), e.inv.len());
                assert_eq!(rs.inversion_set(&e.word).unwrap(), e.inv);
                // The action permutes Φ and sends exactly ℓ(w) positive roots
                // negative under w⁻¹.
                let inverse: Vec<usize> = e.word.iter().rev().copied().collect();
                let image: HashSet<usize> = (0..rs.num_roots()).map(|b| rs.act(&e.word, b).unwrap()).collect();
                assert_eq!(image.len(), rs.num_roots());
                let flips = (0..rs.num_positive()).filter(|&b| !rs.is_positive(rs.act(&inverse, b).unwrap())).count();
                assert_eq!(flips, e.word.len());
            }
        }
    }

    #[test]
    fn act_basics() {
        let rs = RootSystem::new(CartanType::A, 3).unwrap();
        assert_eq!(rs.act(&[], 4).unwrap(), 4);
        assert_eq!(rs.act(&[1], 1).unwrap(), rs.negate(1));
        assert!(rs.act(&[3], 0).is_err());
    }
}
