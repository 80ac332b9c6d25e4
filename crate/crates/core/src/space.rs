//! Cominuscule flag varieties as weight posets, and their Schubert positions
//! as lower order ideals.
//!
//! A space `G/P` is determined by a root system and a marked simple root `α`
//! whose coefficient in the highest root is 1. Its weights `Φ(g/p)` are the
//! positive roots with `m_α = 1`, ordered by `β ≤ β'` when `β' - β` is a
//! nonnegative combination of simple roots. A Schubert position `π` is stored
//! as its inversion set `Inv(π)`, a lower order ideal; its codimension is the
//! size of the complementary upper set `Inv^c(π)` of coinversions.

use crate::bits::{Bits, MAX_BITS};
use crate::coset;
use crate::error::{Error, Result};
use crate::orbit::OrbitDatum;
use crate::rootsys::{CartanType, RootSystem};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Default cap on the number of order ideals enumerated for one space.
pub const DEFAULT_IDEAL_CAP: usize = 10_000_000;

/// Identifies a cominuscule space up to the choice of notation:
/// Dynkin type, rank and marked node (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub node: usize,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({},{},{})", self.cartan_type, self.rank, self.node + 1)
    }
}

/// The family a space was requested as; selects the position notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpaceKind {
    /// `Gr(k, n)`, type `A_{n-1}` marked at node `k`.
    Grassmannian { k: usize, n: usize },
    /// `LG(n)`, type `C_n` marked at node `n`.
    Lagrangian { n: usize },
    /// `OG(m)`, the spinor variety of type `D_m` marked at node `m`.
    /// With `m = n + 1` its positions are strict partitions in the height-`n`
    /// staircase.
    Orthogonal { m: usize },
    /// `Q^m` for odd `m = 2n - 1`, type `B_n` marked at node 1.
    OddQuadric { m: usize },
    /// `Q^m` for even `m = 2n`, type `D_{n+1}` marked at node 1.
    EvenQuadric { m: usize },
    /// The Cayley plane, `E6` marked at node 1.
    CayleyPlane,
    /// The 27-dimensional `E7` space, marked at node 7.
    Freudenthal,
    /// Any other marking, written `X(type,rank,node)`.
    Generic,
}

/// A cominuscule flag variety `G/P` with its weight poset.
pub struct CominusculeSpace {
    rs: Arc<RootSystem>,
    node: usize,
    kind: SpaceKind,
    weights: Vec<usize>,
    weight_of_root: Vec<Option<usize>>,
    below: Vec<Bits>,
    above: Vec<Bits>,
    lower_covers: Vec<Bits>,
    involution: Vec<usize>,
    ideals: OnceLock<std::result::Result<Arc<Ideals>, Error>>,
    pub(crate) orbit_data: OnceLock<std::result::Result<Arc<Vec<OrbitDatum>>, Error>>,
}

/// All order ideals of a space, in canonical order: by codimension, then
/// by bitset value.
pub struct Ideals {
    pub list: Vec<Bits>,
    pub index: HashMap<Bits, usize>,
}

impl fmt::Debug for CominusculeSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CominusculeSpace({})", self.name())
    }
}

impl CominusculeSpace {
    /// Builds the space for a root system and a 0-based marked node.
    pub fn new(rs: Arc<RootSystem>, node: usize, kind: SpaceKind) -> Result<CominusculeSpace> {
        if node >= rs.rank() {
            return Err(Error::InvalidArgument(format!("node {} out of range for {}", node + 1, rs.name())));
        }
        if rs.highest_coefficient(node) != 1 {
            return Err(Error::NotCominuscule { system: rs.name(), node: node + 1 });
        }
        let weights: Vec<usize> = (0..rs.num_positive()).filter(|&b| rs.root(b).coords[node] == 1).collect();
        if weights.len() > MAX_BITS {
            return Err(Error::InvalidArgument(format!(
                "{} weights exceed the supported maximum of {MAX_BITS}",
                weights.len()
            )));
        }
        let mut weight_of_root = vec![None; rs.num_roots()];
        for (i, &b) in weights.iter().enumerate() {
            weight_of_root[b] = Some(i);
        }
        let d = weights.len();
        let leq = |i: usize, j: usize| {
            rs.root(weights[i]).coords.iter().zip(&rs.root(weights[j]).coords).all(|(a, b)| a <= b)
        };
        let mut below = vec![Bits::EMPTY; d];
        let mut above = vec![Bits::EMPTY; d];
        for i in 0..d {
            for j in 0..d {
                if i != j && leq(i, j) {
                    below[j] = below[j].with(i);
                    above[i] = above[i].with(j);
                }
            }
        }
        let mut lower_covers = vec![Bits::EMPTY; d];
        for j in 0..d {
            for i in below[j].iter() {
                if below[j].intersect(above[i]).is_empty() {
                    lower_covers[j] = lower_covers[j].with(i);
                }
            }
        }
        // The involution is the action of the longest element of W_L.
        let levi_positive: BTreeSet<usize> = (0..rs.num_positive()).filter(|&b| rs.root(b).coords[node] == 0).collect();
        let w0 = coset::reduced_word(&rs, &levi_positive)?;
        let mut involution = vec![0; d];
        for i in 0..d {
            let img = rs.act(&w0, weights[i])?;
            involution[i] =
                weight_of_root[img].ok_or_else(|| Error::Internal("longest Levi element left Φ(g/p)".into()))?;
        }
        Ok(CominusculeSpace {
            rs,
            node,
            kind,
            weights,
            weight_of_root,
            below,
            above,
            lower_covers,
            involution,
            ideals: OnceLock::new(),
            orbit_data: OnceLock::new(),
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Marked node, 0-based.
    pub fn node(&self) -> usize {
        self.node
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn signature(&self) -> Signature {
        Signature { cartan_type: self.rs.cartan_type(), rank: self.rs.rank(), node: self.node }
    }

    /// Human readable name in the space grammar.
    pub fn name(&self) -> String {
        match self.kind {
            SpaceKind::Grassmannian { k, n } => format!("Gr({k},{n})"),
            SpaceKind::Lagrangian { n } => format!("LG({n})"),
            SpaceKind::Orthogonal { m } => format!("OG({m})"),
            SpaceKind::OddQuadric { m } | SpaceKind::EvenQuadric { m } => format!("Q({m})"),
            SpaceKind::CayleyPlane => "OP2".into(),
            SpaceKind::Freudenthal => "E7".into(),
            SpaceKind::Generic => self.signature().to_string(),
        }
    }

    /// `dim G/P = |Φ(g/p)|`.
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Root indices of the weights, in canonical order.
    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight_root(&self, i: usize) -> usize {
        self.weights[i]
    }

    /// Weight index of a root, if it lies in `Φ(g/p)`.
    pub fn weight_of_root(&self, root: usize) -> Option<usize> {
        self.weight_of_root[root]
    }

    /// Strictly smaller weights.
    pub fn below(&self, i: usize) -> Bits {
        self.below[i]
    }

    /// Strictly larger weights.
    pub fn above(&self, i: usize) -> Bits {
        self.above[i]
    }

    pub fn lower_covers(&self, i: usize) -> Bits {
        self.lower_covers[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.below[j].contains(i)
    }

    /// The order-reversing involution of the weight poset.
    pub fn involution(&self) -> &[usize] {
        &self.involution
    }

    pub fn full(&self) -> Bits {
        Bits::full(self.dim())
    }

    pub fn is_lower_ideal(&self, s: Bits) -> bool {
        s.is_subset(self.full()) && s.iter().all(|i| self.below[i].is_subset(s))
    }

    pub fn is_upper_set(&self, s: Bits) -> bool {
        s.is_subset(self.full()) && s.iter().all(|i| self.above[i].is_subset(s))
    }

    /// Checks that `ideal` is a valid Schubert position.
    pub fn check_position(&self, ideal: Bits) -> Result<()> {
        if self.is_lower_ideal(ideal) {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{ideal:?} is not an order ideal of {}", self.name())))
        }
    }

    /// `|π| = |Inv^c(π)|`.
    pub fn codim(&self, ideal: Bits) -> usize {
        self.dim() - ideal.len()
    }

    /// `Inv^c(π)`.
    pub fn coinversions(&self, ideal: Bits) -> Bits {
        ideal.complement(self.dim())
    }

    /// The Poincaré dual position: the involution applied to `Inv^c(π)`.
    pub fn dual(&self, ideal: Bits) -> Bits {
        Bits::from_indices(self.coinversions(ideal).iter().map(|i| self.involution[i]))
    }

    /// All order ideals, enumerated once and cached.
    pub fn ideals(&self) -> Result<Arc<Ideals>> {
        self.ideals.get_or_init(|| self.enumerate_ideals(DEFAULT_IDEAL_CAP).map(Arc::new)).clone()
    }

    fn enumerate_ideals(&self, cap: usize) -> Result<Ideals> {
        let d = self.dim();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, Bits::EMPTY)];
        while let Some((i, cur)) = stack.pop() {
            if i == d {
                out.push(cur);
                if out.len() > cap {
                    return Err(Error::CapExceeded { what: format!("order ideals of {}", self.name()), cap });
                }
                continue;
            }
            stack.push((i + 1, cur));
            if self.below[i].is_subset(cur) {
                stack.push((i + 1, cur.with(i)));
            }
        }
        out.sort_by_key(|b| (d - b.len(), b.0));
        let index = out.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        Ok(Ideals { list: out, index })
    }

    /// All Schubert positions, optionally restricted to one codimension.
    pub fn enumerate_positions(&self, cap: usize, codim: Option<usize>) -> Result<Vec<Bits>> {
        let ideals = self.ideals()?;
        if ideals.list.len() > cap {
            return Err(Error::CapExceeded { what: format!("order ideals of {}", self.name()), cap });
        }
        Ok(ideals.list.iter().copied().filter(|&b| codim.is_none_or(|c| self.codim(b) == c)).collect())
    }

    /// Canonical index of a position in [`CominusculeSpace::ideals`].
    pub fn position_index(&self, ideal: Bits) -> Result<usize> {
        let ideals = self.ideals()?;
        ideals
            .index
            .get(&ideal)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("{ideal:?} is not an order ideal of {}", self.name())))
    }
}

/// A product of cominuscule spaces; the empty product is a point.
#[derive(Clone, Debug)]
pub struct Space {
    pub factors: Vec<Arc<CominusculeSpace>>,
}

/// A Schubert position on a [`Space`]: one order ideal per factor.
pub type Position = Vec<Bits>;

impl Space {
    pub fn simple(s: Arc<CominusculeSpace>) -> Space {
        Space { factors: vec![s] }
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).sum()
    }

    pub fn name(&self) -> String {
        if self.factors.is_empty() {
            return "pt".into();
        }
        self.factors.iter().map(|f| f.name()).collect::<Vec<_>>().join(" x ")
    }

    pub fn codim(&self, p: &Position) -> usize {
        self.factors.iter().zip(p).map(|(f, &b)| f.codim(b)).sum()
    }

    pub fn dual(&self, p: &Position) -> Position {
        self.factors.iter().zip(p).map(|(f, &b)| f.dual(b)).collect()
    }

    pub fn check_position(&self, p: &Position) -> Result<()> {
        if p.len() != self.factors.len() {
            return Err(Error::InvalidArgument(format!(
                "position has {} components but {} has {} factors",
                p.len(),
                self.name(),
                self.factors.len()
            )));
        }
        self.factors.iter().zip(p).try_for_each(|(f, &b)| f.check_position(b))
    }

    /// All positions: the Cartesian product of the factor ideals.
    pub fn enumerate_positions(&self, cap: usize, codim: Option<usize>) -> Result<Vec<Position>> {
        let mut acc: Vec<Position> = vec![vec![]];
        for f in &self.factors {
            let ideals = f.ideals()?;
            let mut next = Vec::new();
            for p in &acc {
                for &b in &ideals.list {
                    let mut q = p.clone();
                    q.push(b);
                    next.push(q);
                }
                if next.len() > cap {
                    return Err(Error::CapExceeded { what: format!("positions of {}", self.name()), cap });
                }
            }
            acc = next;
        }
        Ok(acc.into_iter().filter(|p| codim.is_none_or(|c| self.codim(p) == c)).collect())
    }
}

type RegistryKey = (Signature, SpaceKind);

fn registry() -> &'static Mutex<HashMap<RegistryKey, Arc<CominusculeSpace>>> {
    static REG: OnceLock<Mutex<HashMap<RegistryKey, Arc<CominusculeSpace>>>> = OnceLock::new();
    REG.get_or_init(Default::default)
}

fn root_system(t: CartanType, rank: usize) -> Result<Arc<RootSystem>> {
    type Registry = Mutex<HashMap<(CartanType, usize), Arc<RootSystem>>>;
    static RS: OnceLock<Registry> = OnceLock::new();
    let reg = RS.get_or_init(Default::default);
    if let Some(rs) = reg.lock().expect("root system registry").get(&(t, rank)) {
        return Ok(rs.clone());
    }
    let rs = Arc::new(RootSystem::new(t, rank)?);
    Ok(reg.lock().expect("root system registry").entry((t, rank)).or_insert(rs).clone())
}

/// Returns the shared space for a type, rank, 0-based node and notation.
pub fn space_for(t: CartanType, rank: usize, node: usize, kind: SpaceKind) -> Result<Arc<CominusculeSpace>> {
    let sig = Signature { cartan_type: t, rank, node };
    if let Some(s) = registry().lock().expect("space registry").get(&(sig, kind)) {
        return Ok(s.clone());
    }
    let space = Arc::new(CominusculeSpace::new(root_system(t, rank)?, node, kind)?);
    Ok(registry().lock().expect("space registry").entry((sig, kind)).or_insert(space).clone())
}

/// Kind implied by a canonical signature, used for Levi factors.
pub fn canonical_kind(sig: Signature) -> SpaceKind {
    let (t, r, node) = (sig.cartan_type, sig.rank, sig.node + 1);
    match t {
        CartanType::A => SpaceKind::Grassmannian { k: node, n: r + 1 },
        CartanType::B if node == 1 => SpaceKind::OddQuadric { m: 2 * r - 1 },
        CartanType::C if node == r => SpaceKind::Lagrangian { n: r },
        CartanType::D if node == 1 => SpaceKind::EvenQuadric { m: 2 * r - 2 },
        CartanType::D if node == r => SpaceKind::Orthogonal { m: r },
        CartanType::E if r == 6 && node == 1 => SpaceKind::CayleyPlane,
        CartanType::E if r == 7 && node == 7 => SpaceKind::Freudenthal,
        _ => SpaceKind::Generic,
    }
}

/// Shared space for a canonical signature with its canonical notation.
pub fn canonical_space(sig: Signature) -> Result<Arc<CominusculeSpace>> {
    space_for(sig.cartan_type, sig.rank, sig.node, canonical_kind(sig))
}

fn syntax(text: &str, reason: impl Into<String>) -> Error {
    Error::SpaceSyntax { text: text.into(), reason: reason.into() }
}

/// Parses the space grammar
/// `Gr(k,n) | LG(n) | OG(m) | Q(m) | OP2 | E7 | X(type,rank,node)`.
///
/// `OG(m)` is the spinor variety of type `D_m`, the space of one family of
/// maximal isotropic subspaces of a `2m`-dimensional quadratic space; its
/// positions are strict partitions in the staircase of height `m - 1`.
/// Small cases that fall outside the supported Dynkin types are realised by
/// isomorphic spaces: `LG(1) = OG(2) = Q(1) = P^1` and `Q(2) = P^1 x P^1`.
///
/// A product is written with factors separated by ` x ` or `×`, e.g.
/// `Gr(2,4) x LG(2)`.
pub fn build_space(text: &str) -> Result<Space> {
    let parts: Vec<&str> = text.split('×').flat_map(|p| p.split(" x ")).collect();
    if parts.len() > 1 {
        let mut factors = Vec::new();
        for p in parts {
            if p.trim().is_empty() {
                return Err(syntax(text, "empty factor in product"));
            }
            factors.extend(build_space(p)?.factors);
        }
        return Ok(Space { factors });
    }
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let upper = t.to_ascii_uppercase();
    if upper == "OP2" {
        return Ok(Space::simple(space_for(CartanType::E, 6, 0, SpaceKind::CayleyPlane)?));
    }
    if upper == "E7" {
        return Ok(Space::simple(space_for(CartanType::E, 7, 6, SpaceKind::Freudenthal)?));
    }
    if upper == "PT" || upper == "POINT" {
        return Ok(Space { factors: vec![] });
    }
    let open = t.find('(').ok_or_else(|| syntax(text, "expected NAME(args)"))?;
    if !t.ends_with(')') {
        return Err(syntax(text, "missing closing parenthesis"));
    }
    let head = upper[..open].to_string();
    let args: Vec<&str> = t[open + 1..t.len() - 1].split(',').collect();
    let nums = || -> Result<Vec<usize>> {
        args.iter().map(|a| a.parse::<usize>().map_err(|_| syntax(text, format!("bad integer {a:?}")))).collect()
    };
    let p1 = |kind| space_for(CartanType::A, 1, 0, kind);
    let want = |n: usize, v: &Vec<usize>| -> Result<()> {
        if v.len() == n {
            Ok(())
        } else {
            Err(syntax(text, format!("expected {n} argument(s)")))
        }
    };
    match head.as_str() {
        "GR" => {
            let v = nums()?;
            want(2, &v)?;
            let (k, n) = (v[0], v[1]);
            if k == 0 || k >= n {
                return Err(syntax(text, "need 0 < k < n"));
            }
            Ok(Space::simple(space_for(CartanType::A, n - 1, k - 1, SpaceKind::Grassmannian { k, n })?))
        }
        "LG" => {
            let v = nums()?;
            want(1, &v)?;
            let n = v[0];
            let kind = SpaceKind::Lagrangian { n };
            match n {
                0 => Err(syntax(text, "need n >= 1")),
                1 => Ok(Space::simple(p1(kind)?)),
                _ => Ok(Space::simple(space_for(CartanType::C, n, n - 1, kind)?)),
            }
        }
        "OG" => {
            let v = nums()?;
            want(1, &v)?;
            let m = v[0];
            let kind = SpaceKind::Orthogonal { m };
            match m {
                0 | 1 => Err(syntax(text, "need m >= 2")),
                2 => Ok(Space::simple(p1(kind)?)),
                _ => Ok(Space::simple(space_for(CartanType::D, m, m - 1, kind)?)),
            }
        }
        "Q" => {
            let v = nums()?;
            want(1, &v)?;
            let m = v[0];
            match m {
                0 => Err(syntax(text, "need m >= 1")),
                1 => Ok(Space::simple(p1(SpaceKind::OddQuadric { m })?)),
                2 => {
                    let f = space_for(CartanType::A, 1, 0, SpaceKind::Grassmannian { k: 1, n: 2 })?;
                    Ok(Space { factors: vec![f.clone(), f] })
                }
                _ if m % 2 == 1 => {
                    Ok(Space::simple(space_for(CartanType::B, m.div_ceil(2), 0, SpaceKind::OddQuadric { m })?))
                }
                _ => Ok(Space::simple(space_for(CartanType::D, m / 2 + 1, 0, SpaceKind::EvenQuadric { m })?)),
            }
        }
        "X" => {
            let (letter, rank, node) = match args.len() {
                3 => (args[0], args[1], args[2]),
                2 => (&args[0][..1], &args[0][1..], args[1]),
                _ => return Err(syntax(text, "expected X(type,rank,node)")),
            };
            let ct = letter
                .chars()
                .next()
                .and_then(CartanType::from_letter)
                .filter(|_| letter.len() == 1)
                .ok_or_else(|| syntax(text, format!("unknown type {letter:?}")))?;
            let rank: usize = rank.parse().map_err(|_| syntax(text, "bad rank"))?;
            let node: usize = node.parse().map_err(|_| syntax(text, "bad node"))?;
            if node == 0 || node > rank {
                return Err(syntax(text, "node must be between 1 and rank"));
            }
            Ok(Space::simple(space_for(ct, rank, node - 1, SpaceKind::Generic)?))
        }
        _ => Err(syntax(text, format!("unknown space family {:?}", &t[..open]))),
    }
}
