//! Orbit data: for each rank `r` of a non-dense, non-zero `L`-orbit on
//! `g/p`, an orthogonal sequence of long roots `α_1, ..., α_r`, the root-set
//! decomposition into `z`, `l·v`, `l/q`, `q` and `n_P`, and the cominuscule
//! factorisation of the Levi quotient `L/Q`.

use crate::bits::Bits;
use crate::coset;
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem};
use crate::space::{canonical_space, CominusculeSpace, Position, Signature, Space};
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

/// One cominuscule factor of `L/Q` with its embedding into `G`.
#[derive(Clone, Debug)]
pub struct LeviFactor {
    pub space: Arc<CominusculeSpace>,
    /// `node_map[t]` is the simple root of `G` carrying simple root `t` of the
    /// factor.
    pub node_map: Vec<usize>,
    parent: Arc<RootSystem>,
}

/// The data attached to one orbit rank `r`.
#[derive(Debug)]
pub struct OrbitDatum {
    pub r: usize,
    /// Root indices of `α_1, ..., α_r`.
    pub alphas: Vec<usize>,
    /// `Φ(z)`: weights orthogonal to every `α_i`.
    pub phi_z: Bits,
    /// `Φ(l·v)`: weights with `⟨β, α_i⟩ ≥ 1` for some `i`.
    pub phi_lv: Bits,
    /// `Φ(q)` as root indices.
    pub phi_q: BTreeSet<usize>,
    /// `Φ(l/q)` as root indices.
    pub phi_l_mod_q: BTreeSet<usize>,
    /// Simple roots of `L` omitted by `Q`.
    pub omitted: Vec<usize>,
    pub factors: Vec<LeviFactor>,
    strides: Vec<usize>,
    masks: Vec<Bits>,
}

impl OrbitDatum {
    /// `dim z = |Φ(z)|`.
    pub fn dim_z(&self) -> usize {
        self.phi_z.len()
    }

    /// `L/Q` as a product space.
    pub fn levi_quotient(&self) -> Space {
        Space { factors: self.factors.iter().map(|f| f.space.clone()).collect() }
    }

    /// Number of elements of `W^Q`.
    pub fn num_lambdas(&self) -> usize {
        self.masks.len()
    }

    /// Index of `λ` in the mixed-radix enumeration of `W^Q`, taking factor
    /// position indices.
    pub fn lambda_index_of(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    /// Mixed-radix weights: `λ` with factor position indices `idx` has
    /// enumeration index `Σ idx[j] * strides()[j]`.
    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    /// Index of a position on `L/Q` in the enumeration of `W^Q`.
    pub fn lambda_index(&self, lambda: &Position) -> Result<usize> {
        if lambda.len() != self.factors.len() {
            return Err(Error::InvalidArgument("λ has the wrong number of factors".into()));
        }
        let mut idx = Vec::with_capacity(lambda.len());
        for (f, &b) in self.factors.iter().zip(lambda) {
            idx.push(f.space.position_index(b)?);
        }
        Ok(self.lambda_index_of(&idx))
    }

    /// `λΦ(z)` as a set of weights of `G/P`, by enumeration index.
    pub fn mask(&self, lambda_index: usize) -> Bits {
        self.masks[lambda_index]
    }

    /// `λΦ(z)` for a position on `L/Q`.
    pub fn lambda_z(&self, lambda: &Position) -> Result<Bits> {
        Ok(self.masks[self.lambda_index(lambda)?])
    }

    /// Word of `λ` in the simple reflections of `G`: the concatenation of
    /// the factor words, which commute since factors have disjoint support.
    pub fn lambda_word(&self, lambda: &Position) -> Result<Vec<usize>> {
        if lambda.len() != self.factors.len() {
            return Err(Error::InvalidArgument("λ has the wrong number of factors".into()));
        }
        let mut word = Vec::new();
        for (f, &b) in self.factors.iter().zip(lambda) {
            let w = coset::word_from_ideal(&f.space, b)?;
            word.extend(w.into_iter().map(|t| f.node_map[t]));
        }
        Ok(word)
    }

    /// `Inv(λ)` as root indices of `G`.
    pub fn lambda_inversions(&self, lambda: &Position) -> Result<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        for (f, &b) in self.factors.iter().zip(lambda) {
            f.space.check_position(b)?;
            for i in b.iter() {
                out.insert(embed(f, f.space.weight_root(i), &f.parent)?);
            }
        }
        Ok(out)
    }
}

fn embed(f: &LeviFactor, factor_root: usize, parent: &RootSystem) -> Result<usize> {
    let mut c = vec![0i32; parent.rank()];
    for (t, &x) in f.space.root_system().root(factor_root).coords.iter().enumerate() {
        c[f.node_map[t]] = x;
    }
    parent.index_of(&c).ok_or_else(|| Error::Internal("factor root does not embed as a root".into()))
}

/// Greedy orthogonal sequence of long roots in `Φ(g/p)`: repeatedly the
/// first weight in canonical order (hence a minimal one) that is long and
/// orthogonal to all previously chosen roots.
pub fn maximal_orthogonal_sequence(space: &CominusculeSpace) -> Vec<usize> {
    let rs = space.root_system();
    let mut seq: Vec<usize> = Vec::new();
    loop {
        let next =
            space.weights().iter().copied().find(|&b| rs.root(b).long && seq.iter().all(|&a| rs.inner(a, b) == 0));
        match next {
            Some(b) => seq.push(b),
            None => return seq,
        }
    }
}

/// Length of the longest orthogonal sequence of long roots.
pub fn max_rank(space: &CominusculeSpace) -> usize {
    maximal_orthogonal_sequence(space).len()
}

/// The first `r` roots of the greedy orthogonal sequence.
pub fn orthogonal_sequence(space: &CominusculeSpace, r: usize) -> Result<Vec<usize>> {
    let seq = maximal_orthogonal_sequence(space);
    if r == 0 || r > seq.len() {
        return Err(Error::InvalidArgument(format!("orbit rank {r} outside 1..={} for {}", seq.len(), space.name())));
    }
    Ok(seq[..r].to_vec())
}

/// Which piece of the decomposition of `Φ` a root belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    Z,
    LV,
    LModQ,
    Q,
    NP,
}

/// Evaluates every row of the decomposition table on one root, returning
/// the rows whose full characterisation (the `m_α` value together with the
/// pairing condition) holds.
pub fn table_rows(rs: &RootSystem, node: usize, alphas: &[usize], gamma: usize) -> Vec<Piece> {
    let m = rs.root(gamma).coords[node];
    let p: Vec<i32> = alphas.iter().map(|&a| rs.pairing(gamma, a)).collect();
    let all = |f: &dyn Fn(i32) -> bool| p.iter().all(|&x| f(x));
    let some = |f: &dyn Fn(i32) -> bool| p.iter().any(|&x| f(x));
    let mut rows = Vec::new();
    if m == 1 && all(&|x| x == 0) {
        rows.push(Piece::Z);
    }
    if m == 1 && all(&|x| x >= 0) && some(&|x| x >= 1) {
        rows.push(Piece::LV);
    }
    if m == 0 && all(&|x| x <= 0) && p.iter().filter(|&&x| x == -1).count() == 1 {
        rows.push(Piece::LModQ);
    }
    if m == 0 && (all(&|x| x == 0) || some(&|x| x >= 1)) {
        rows.push(Piece::Q);
    }
    if m == -1 && all(&|x| x <= 0) {
        rows.push(Piece::NP);
    }
    rows
}

/// Computes the orbit datum of rank `r`.
pub fn orbit_datum(space: &CominusculeSpace, r: usize) -> Result<OrbitDatum> {
    let alphas = orthogonal_sequence(space, r)?;
    let rs = space.root_system().clone();
    let node = space.node();
    let mut phi_z = Bits::EMPTY;
    let mut phi_lv = Bits::EMPTY;
    let mut phi_q = BTreeSet::new();
    let mut phi_l_mod_q = BTreeSet::new();
    for g in 0..rs.num_roots() {
        let m = rs.root(g).coords[node];
        let p: Vec<i32> = alphas.iter().map(|&a| rs.pairing(g, a)).collect();
        match m {
            1 => {
                let w = space.weight_of_root(g).ok_or_else(|| Error::Internal("weight lookup".into()))?;
                if p.iter().all(|&x| x == 0) {
                    phi_z = phi_z.with(w);
                } else {
                    phi_lv = phi_lv.with(w);
                }
            }
            0 => {
                if p.iter().all(|&x| x <= 0) && p.iter().filter(|&&x| x == -1).count() == 1 {
                    phi_l_mod_q.insert(g);
                } else {
                    phi_q.insert(g);
                }
            }
            _ => {}
        }
    }
    // Standardness: Q contains the Borel subgroup of L.
    if let Some(&bad) = phi_l_mod_q.iter().find(|&&g| !rs.is_positive(g)) {
        return Err(Error::Internal(format!(
            "orthogonal sequence for {} at r={r} is not standard: negative root {:?} lies in Φ(l/q)",
            space.name(),
            rs.root(bad).coords
        )));
    }
    let omitted: Vec<usize> = (0..rs.rank()).filter(|&s| s != node && phi_l_mod_q.contains(&s)).collect();
    let factors = factorize(&rs, node, &omitted)?;
    // Check that the factors carry their weights bijectively onto Φ(l/q).
    let mut covered = BTreeSet::new();
    for f in &factors {
        for &b in f.space.weights() {
            let e = embed(f, b, &rs)?;
            if !phi_l_mod_q.contains(&e) || !covered.insert(e) {
                return Err(Error::Internal(format!("Levi factor {} does not embed into Φ(l/q)", f.space.name())));
            }
        }
    }
    if covered != phi_l_mod_q {
        return Err(Error::Internal(format!("Levi factors of {} at r={r} miss part of Φ(l/q)", space.name())));
    }
    let mut datum =
        OrbitDatum { r, alphas, phi_z, phi_lv, phi_q, phi_l_mod_q, omitted, factors, strides: vec![], masks: vec![] };
    fill_masks(space, &mut datum)?;
    Ok(datum)
}

fn fill_masks(space: &CominusculeSpace, datum: &mut OrbitDatum) -> Result<()> {
    let rs = space.root_system();
    let z_roots = coset::weight_roots(space, datum.phi_z);
    let mut sizes = Vec::new();
    let mut factor_words: Vec<Vec<Vec<usize>>> = Vec::new();
    for f in &datum.factors {
        let ideals = f.space.ideals()?;
        sizes.push(ideals.list.len());
        let mut words = Vec::with_capacity(ideals.list.len());
        for &b in &ideals.list {
            let w = coset::word_from_ideal(&f.space, b)?;
            words.push(w.into_iter().map(|t| f.node_map[t]).collect());
        }
        factor_words.push(words);
    }
    let mut strides = vec![1usize; sizes.len()];
    for j in (0..sizes.len().saturating_sub(1)).rev() {
        strides[j] = strides[j + 1] * sizes[j + 1];
    }
    let total: usize = sizes.iter().product();
    let mut masks = Vec::with_capacity(total);
    for idx in 0..total {
        let mut word = Vec::new();
        for (j, words) in factor_words.iter().enumerate() {
            word.extend_from_slice(&words[(idx / strides[j]) % sizes[j]]);
        }
        let mut m = Bits::EMPTY;
        for &b in &z_roots {
            let c = rs.act(&word, b)?;
            let w =
                space.weight_of_root(c).ok_or_else(|| Error::Internal("λΦ(z) is not contained in Φ(g/p)".into()))?;
            m = m.with(w);
        }
        masks.push(m);
    }
    datum.strides = strides;
    datum.masks = masks;
    Ok(())
}

/// The set `M(P)`: one datum for each `r = 1, ..., max_rank - 1`. Cached on
/// the space.
pub fn m_of_p(space: &CominusculeSpace) -> Result<Arc<Vec<OrbitDatum>>> {
    space
        .orbit_data
        .get_or_init(|| {
            let top = max_rank(space);
            (1..top).map(|r| orbit_datum(space, r)).collect::<Result<Vec<_>>>().map(Arc::new)
        })
        .clone()
}

/// The Levi quotient of a datum as a product space.
pub fn factorize_levi(datum: &OrbitDatum) -> Space {
    datum.levi_quotient()
}

/// Splits the Dynkin diagram of `L` into connected components and turns
/// each component carrying an omitted node into a cominuscule factor.
fn factorize(rs: &Arc<RootSystem>, node: usize, omitted: &[usize]) -> Result<Vec<LeviFactor>> {
    let g = rs.gram();
    let n = rs.rank();
    let mut comp = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if start == node || comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            for v in 0..n {
                if v != node && v != u && g[u][v] != 0 && comp[v] == usize::MAX {
                    comp[v] = id;
                    members.push(v);
                }
            }
            i += 1;
        }
        members.sort();
        components.push(members);
    }
    let mut factors = Vec::new();
    for members in components {
        let marked: Vec<usize> = members.iter().copied().filter(|v| omitted.contains(v)).collect();
        match marked.len() {
            0 => continue,
            1 => {}
            _ => return Err(Error::Internal("a Levi component carries two omitted nodes".into())),
        }
        let (t, labels) = classify(g, &members, marked[0])?;
        let label = labels.iter().position(|&v| v == marked[0]).expect("marked node is labelled");
        let sig = Signature { cartan_type: t, rank: labels.len(), node: label };
        let space = canonical_space(sig).map_err(|e| Error::Internal(format!("Levi factor {sig}: {e}")))?;
        let fg = space.root_system().gram();
        for a in 0..labels.len() {
            for b in 0..labels.len() {
                if fg[a][b] != g[labels[a]][labels[b]] {
                    return Err(Error::Internal(format!("Levi factor {sig} has a different normalisation")));
                }
            }
        }
        factors.push(LeviFactor { space, node_map: labels, parent: rs.clone() });
    }
    Ok(factors)
}

/// Identifies a connected Dynkin diagram and returns its type and the
/// parent node carrying each canonical (Bourbaki) label, choosing among
/// diagram symmetries so that the marked node gets the canonical
/// cominuscule label.
fn classify(g: &[Vec<i32>], members: &[usize], marked: usize) -> Result<(CartanType, Vec<usize>)> {
    let m = members.len();
    let adj: HashMap<usize, Vec<usize>> =
        members.iter().map(|&u| (u, members.iter().copied().filter(|&v| v != u && g[u][v] != 0).collect())).collect();
    let unsupported = || Error::Internal(format!("unsupported Levi component on nodes {members:?}"));
    if m == 1 {
        return Ok((CartanType::A, vec![members[0]]));
    }
    // Walk a path starting at `start`, away from `avoid`.
    let walk = |start: usize, avoid: Option<usize>| -> Vec<usize> {
        let mut path = vec![start];
        let mut prev = avoid;
        let mut cur = start;
        loop {
            let next: Vec<usize> =
                adj[&cur].iter().copied().filter(|&v| Some(v) != prev && !path.contains(&v)).collect();
            if next.len() != 1 {
                return path;
            }
            prev = Some(cur);
            cur = next[0];
            path.push(cur);
        }
    };
    let branch: Vec<usize> = members.iter().copied().filter(|u| adj[u].len() >= 3).collect();
    if branch.is_empty() {
        let ends: Vec<usize> = members.iter().copied().filter(|u| adj[u].len() == 1).collect();
        if ends.len() != 2 {
            return Err(unsupported());
        }
        let path = walk(ends[0], None);
        let norms: Vec<i32> = path.iter().map(|&u| g[u][u]).collect();
        if norms.iter().all(|&x| x == norms[0]) {
            let pos = path.iter().position(|&u| u == marked).expect("marked in component");
            let reversed = pos + 1 > m - pos || (pos + 1 == m - pos && path[0] > path[m - 1]);
            let labels = if reversed { path.into_iter().rev().collect() } else { path };
            return Ok((CartanType::A, labels));
        }
        // One double bond, at an end of the path.
        let mut path = path;
        if norms[0] != norms[1] && norms[m - 1] == norms[m - 2] {
            path.reverse();
        }
        let norms: Vec<i32> = path.iter().map(|&u| g[u][u]).collect();
        if norms[..m - 1].iter().any(|&x| x != norms[0]) || norms[m - 1] == norms[m - 2] {
            return Err(unsupported());
        }
        let t = if m == 2 {
            // Rank two: label the long node first, as in B2.
            if norms[0] < norms[1] {
                path.reverse();
            }
            CartanType::B
        } else if norms[m - 1] < norms[m - 2] {
            CartanType::B
        } else {
            CartanType::C
        };
        return Ok((t, path));
    }
    if branch.len() != 1 || members.iter().any(|&u| g[u][u] != g[members[0]][members[0]]) {
        return Err(unsupported());
    }
    let b = branch[0];
    if adj[&b].len() != 3 {
        return Err(unsupported());
    }
    let mut arms: Vec<Vec<usize>> = adj[&b].iter().map(|&v| walk(v, Some(b))).collect();
    // Prefer the arm holding the marked node among arms of equal length.
    arms.sort_by_key(|a| (a.len(), !a.contains(&marked), a[0]));
    let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
    let far_first = |a: &Vec<usize>| -> Vec<usize> { a.iter().rev().copied().collect() };
    match lens.as_slice() {
        [1, 1, k] if *k >= 1 => {
            // D_m: long arm labelled 1..m-3 from its far end, branch m-2,
            // short leaves m-1 and m. For D4 all arms are short, and the
            // arm holding the marked node becomes the long arm.
            let (long, s1, s2) = if *k == 1 {
                let mut a = arms.clone();
                a.sort_by_key(|x| (!x.contains(&marked), x[0]));
                (a[0].clone(), a[1][0], a[2][0])
            } else {
                // Marked leaf of a short arm gets label m.
                let (x, y) = (arms[0][0], arms[1][0]);
                let (s1, s2) = if x == marked {
                    (y, x)
                } else if y == marked {
                    (x, y)
                } else {
                    (x.min(y), x.max(y))
                };
                (arms[2].clone(), s1, s2)
            };
            let mut labels = far_first(&long);
            labels.push(b);
            labels.push(s1);
            labels.push(s2);
            Ok((CartanType::D, labels))
        }
        [1, 2, 2] => {
            // E6: 1-3-4-5-6 with 2 attached to 4; marked end gets label 1.
            let (a, c) = if arms[2].contains(&marked) { (&arms[2], &arms[1]) } else { (&arms[1], &arms[2]) };
            let labels = vec![a[1], arms[0][0], a[0], b, c[0], c[1]];
            Ok((CartanType::E, labels))
        }
        [1, 2, 3] => {
            let (s, a, c) = (&arms[0], &arms[1], &arms[2]);
            let labels = vec![a[1], s[0], a[0], b, c[0], c[1], c[2]];
            Ok((CartanType::E, labels))
        }
        _ => Err(unsupported()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{build_space, SpaceKind};

    fn simple(text: &str) -> Arc<CominusculeSpace> {
        build_space(text).unwrap().factors[0].clone()
    }

    fn factor_names(d: &OrbitDatum) -> Vec<String> {
        let mut v: Vec<String> = d.factors.iter().map(|f| f.space.name()).collect();
        v.sort();
        v
    }

    #[test]
    fn max_ranks() {
        for (k, n) in [(2, 4), (2, 5), (3, 7), (4, 8)] {
            assert_eq!(max_rank(&simple(&format!("Gr({k},{n})"))), k.min(n - k));
        }
        for n in 2..=6 {
            assert_eq!(max_rank(&simple(&format!("LG({n})"))), n);
            assert_eq!(max_rank(&simple(&format!("OG({})", n + 1))), n.div_ceil(2));
        }
        for m in [3, 4, 5, 6, 8, 10] {
            assert_eq!(max_rank(&simple(&format!("Q({m})"))), 2);
        }
        assert_eq!(max_rank(&simple("OP2")), 2);
        assert_eq!(max_rank(&simple("E7")), 3);
    }

    #[test]
    fn grassmannian_sequence_runs_up_the_antidiagonal() {
        let s = simple("Gr(5,11)");
        let rs = s.root_system();
        let seq = orthogonal_sequence(&s, 2).unwrap();
        // α_i = e_{k+i} - e_{k+1-i}: simple-root support [k+1-i, k+i-1].
        for (i, &a) in seq.iter().enumerate() {
            let i = i + 1;
            let expect: Vec<i32> = (1..=10).map(|t| (t >= 6 - i && t <= 4 + i) as i32).collect();
            assert_eq!(rs.root(a).coords, expect);
        }
        assert!(orthogonal_sequence(&s, 6).is_err());
    }

    #[test]
    fn dimensions_of_z() {
        for (k, n) in [(2, 5), (3, 7), (4, 8), (5, 11)] {
            let s = simple(&format!("Gr({k},{n})"));
            for d in m_of_p(&s).unwrap().iter() {
                assert_eq!(d.dim_z(), (k - d.r) * (n - k - d.r));
                assert_eq!(factor_names(d), {
                    let mut v = vec![
                        format!("Gr({},{})", (k - d.r).min(d.r), k),
                        format!("Gr({},{})", d.r.min(n - k - d.r), n - k),
                    ];
                    v.sort();
                    v
                });
            }
        }
        for n in 2..=7 {
            let s = simple(&format!("LG({n})"));
            let data = m_of_p(&s).unwrap();
            assert_eq!(data.len(), n - 1);
            for d in data.iter() {
                assert_eq!(d.dim_z(), (n - d.r + 1) * (n - d.r) / 2);
                assert_eq!(factor_names(d), vec![format!("Gr({},{n})", d.r.min(n - d.r))]);
            }
        }
        for n in 3..=8 {
            let s = simple(&format!("OG({})", n + 1));
            for d in m_of_p(&s).unwrap().iter() {
                let c = n + 1 - 2 * d.r;
                assert_eq!(d.dim_z(), c * (c - 1) / 2);
                // L/Q is Gr(2r, n+1).
                assert_eq!(factor_names(d), vec![format!("Gr({},{})", (2 * d.r).min(n + 1 - 2 * d.r), n + 1)]);
            }
        }
    }

    #[test]
    fn quadrics_and_exceptional_levi_quotients() {
        for n in 2..=6 {
            let s = simple(&format!("Q({})", 2 * n));
            let data = m_of_p(&s).unwrap();
            assert_eq!(data.len(), 1);
            assert_eq!(data[0].dim_z(), 1);
            let lq = data[0].levi_quotient();
            assert_eq!(lq.dim(), 2 * n - 2);
        }
        let op2 = m_of_p(&simple("OP2")).unwrap();
        assert_eq!(op2.len(), 1);
        assert_eq!(factor_names(&op2[0]), vec!["OG(5)".to_string()]);
        assert_eq!(op2[0].factors[0].space.kind(), SpaceKind::Orthogonal { m: 5 });
        let e7 = m_of_p(&simple("E7")).unwrap();
        assert_eq!(e7.len(), 2);
        for d in e7.iter() {
            assert_eq!(factor_names(d), vec!["OP2".to_string()]);
        }
        // The two embeddings of the Cayley plane use opposite ends of the E6
        // diagram of L.
        let ends: Vec<usize> = e7.iter().map(|d| d.factors[0].node_map[0]).collect();
        assert_ne!(ends[0], ends[1]);
        assert_eq!(e7.iter().map(|d| d.dim_z()).collect::<Vec<_>>(), vec![10, 1]);
    }

    #[test]
    fn masks_have_size_dim_z_and_identity_gives_z() {
        for name in ["Gr(3,7)", "LG(4)", "OG(6)", "Q(8)", "OP2", "E7"] {
            let s = simple(name);
            for d in m_of_p(&s).unwrap().iter() {
                let full: Position = d.factors.iter().map(|_| Bits::EMPTY).collect();
                assert_eq!(d.lambda_z(&full).unwrap(), d.phi_z);
                for i in 0..d.num_lambdas() {
                    assert_eq!(d.mask(i).len(), d.dim_z());
                }
            }
        }
    }
}
