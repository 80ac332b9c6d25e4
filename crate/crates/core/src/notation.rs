//! Human-readable notation for Schubert positions.
//!
//! * `Gr(k,n)`: a partition `(μ¹,…,μᵏ)` with `n-k ≥ μ¹ ≥ … ≥ μᵏ ≥ 0`, where
//!   `μⁱ` counts the coinversions `e_j - e_i`, or a one-line permutation with
//!   its unique descent marked, `1 3 6 7 10 | 2 4 5 8 9 11`.
//! * `LG(n)` and `OG(m)`: the strict partition of row lengths of the
//!   coinversion set drawn in the staircase, e.g. `7 5 2 1`.
//! * Quadrics: the label of the ideal in the lattice `Λ`, i.e. its size, with
//!   the two middle ideals written `n` and `nbar`.
//! * Everything else: a bitstring over the weights (`1` = inversion), or `e`
//!   for the identity. The form `bits:0110…` is accepted for every space.
//!
//! Positions on products are separated by `;`; the point has position `pt`.
//!
//! Coordinates: in type A the simple roots are `α_u = e_{u+1} - e_u` and the
//! weight `e_j - e_i` (`i ≤ k < j`) sits in row `i`, column `j-k`. In type C
//! `α_u = e_u - e_{u+1}`, `α_n = 2e_n`, and `e_i + e_j` (`i ≤ j`) sits in
//! cell `(i,j)`. In type D `α_{m} = e_{m-1} + e_m` and `e_i + e_j` (`i < j`)
//! sits in cell `(i,j)`.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::rootsys::CartanType;
use crate::space::{CominusculeSpace, Position, Space, SpaceKind};

fn syntax(text: &str, reason: impl Into<String>) -> Error {
    Error::PositionSyntax { text: text.to_string(), reason: reason.into() }
}

/// The ε-coordinates of a root of a classical space.
fn epsilon(space: &CominusculeSpace, root: usize) -> Vec<i32> {
    let rs = space.root_system();
    let c = &rs.root(root).coords;
    let n = rs.rank();
    match rs.cartan_type() {
        CartanType::A => {
            let mut v = vec![0; n + 1];
            for (u, &x) in c.iter().enumerate() {
                v[u + 1] += x;
                v[u] -= x;
            }
            v
        }
        CartanType::C => {
            let mut v = vec![0; n];
            for u in 0..n - 1 {
                v[u] += c[u];
                v[u + 1] -= c[u];
            }
            v[n - 1] += 2 * c[n - 1];
            v
        }
        CartanType::D => {
            let mut v = vec![0; n];
            for u in 0..n - 1 {
                v[u] += c[u];
                v[u + 1] -= c[u];
            }
            v[n - 2] += c[n - 1];
            v[n - 1] += c[n - 1];
            v
        }
        CartanType::B => {
            let mut v = vec![0; n];
            for u in 0..n - 1 {
                v[u] += c[u];
                v[u + 1] -= c[u];
            }
            v[n - 1] += c[n - 1];
            v
        }
        CartanType::E => vec![],
    }
}

/// Number of staircase or box rows for spaces drawn as diagrams.
fn num_rows(space: &CominusculeSpace) -> Option<usize> {
    match space.kind() {
        SpaceKind::Grassmannian { k, .. } => Some(k),
        SpaceKind::Lagrangian { n } => Some(n),
        SpaceKind::Orthogonal { m } => Some(m - 1),
        _ => None,
    }
}

/// Row and column (1-based) of a weight for Grassmannians, Lagrangian and
/// orthogonal Grassmannians; `None` for other spaces.
pub fn cell(space: &CominusculeSpace, weight: usize) -> Option<(usize, usize)> {
    let root = space.weight_root(weight);
    let small = space.root_system().rank() == 1;
    match space.kind() {
        SpaceKind::Grassmannian { k, .. } => {
            let v = epsilon(space, root);
            let i = v.iter().position(|&x| x == -1)? + 1;
            let j = v.iter().position(|&x| x == 1)? + 1;
            Some((i, j - k))
        }
        SpaceKind::Lagrangian { .. } if small => Some((1, 1)),
        SpaceKind::Orthogonal { .. } if small => Some((1, 2)),
        SpaceKind::Lagrangian { .. } | SpaceKind::Orthogonal { .. } => {
            let v = epsilon(space, root);
            if let Some(i) = v.iter().position(|&x| x == 2) {
                return Some((i + 1, i + 1));
            }
            let ones: Vec<usize> = v.iter().enumerate().filter(|(_, &x)| x == 1).map(|(i, _)| i + 1).collect();
            (ones.len() == 2).then(|| (ones[0], ones[1]))
        }
        _ => None,
    }
}

/// Row lengths of the coinversion set of an ideal: `μ` for `Gr(k,n)` and the
/// strict partition for `LG(n)`/`OG(m)`. `None` for other spaces.
pub fn partition(space: &CominusculeSpace, ideal: Bits) -> Option<Vec<usize>> {
    let rows = num_rows(space)?;
    let mut parts = vec![0usize; rows];
    for w in space.coinversions(ideal).iter() {
        parts[cell(space, w)?.0 - 1] += 1;
    }
    Some(parts)
}

/// Inverse of [`partition`]: row `i` of the coinversion set consists of the
/// `parts[i]` highest weights of that row.
pub fn ideal_from_partition(space: &CominusculeSpace, parts: &[usize]) -> Result<Bits> {
    let rows =
        num_rows(space).ok_or_else(|| Error::InvalidArgument(format!("{} has no partition notation", space.name())))?;
    let text = format!("{parts:?}");
    if parts.len() > rows {
        return Err(syntax(&text, format!("at most {rows} parts allowed")));
    }
    let rs = space.root_system();
    let mut by_row: Vec<Vec<usize>> = vec![vec![]; rows];
    for w in 0..space.dim() {
        let (i, _) = cell(space, w).ok_or_else(|| Error::Internal("weight without a cell".into()))?;
        by_row[i - 1].push(w);
    }
    let mut coinv = Bits::EMPTY;
    for (i, row) in by_row.iter_mut().enumerate() {
        row.sort_by_key(|&w| std::cmp::Reverse(rs.root(space.weight_root(w)).height()));
        let want = parts.get(i).copied().unwrap_or(0);
        if want > row.len() {
            return Err(syntax(&text, format!("part {want} does not fit row {} of length {}", i + 1, row.len())));
        }
        for &w in &row[..want] {
            coinv = coinv.with(w);
        }
    }
    let ideal = coinv.complement(space.dim());
    if !space.is_lower_ideal(ideal) {
        return Err(syntax(&text, "not a valid shape for this space"));
    }
    Ok(ideal)
}

/// The one-line permutation of a Grassmannian position: the values in the
/// first `k` places increase, as do the remaining ones.
pub fn one_line(space: &CominusculeSpace, ideal: Bits) -> Option<Vec<usize>> {
    let SpaceKind::Grassmannian { k, n } = space.kind() else { return None };
    let mu = partition(space, ideal)?;
    let head: Vec<usize> = (1..=k).map(|i| i + (n - k) - mu[i - 1]).collect();
    let tail = (1..=n).filter(|x| !head.contains(x));
    Some(head.iter().copied().chain(tail).collect())
}

/// The label of a quadric position in `Λ`: its size, with the flag set for
/// the barred middle ideal.
pub fn quadric_label(space: &CominusculeSpace, ideal: Bits) -> Option<(usize, bool)> {
    match space.kind() {
        SpaceKind::OddQuadric { .. } => Some((ideal.len(), false)),
        SpaceKind::EvenQuadric { m } => {
            let n = m / 2;
            let size = ideal.len();
            if size != n || space.root_system().rank() == 1 {
                return Some((size, false));
            }
            Some((size, !ideal.iter().any(|w| is_unbarred_branch(space, w))))
        }
        _ => None,
    }
}

/// In `Q(2n)` over `D_{n+1}`, the two incomparable middle weights have
/// coordinates `[1,…,1,1,0]` and `[1,…,1,0,1]`; the first lies in the ideal
/// labelled `n`.
fn is_unbarred_branch(space: &CominusculeSpace, w: usize) -> bool {
    let c = &space.root_system().root(space.weight_root(w)).coords;
    let r = c.len();
    c[r - 2] == 1 && c[r - 1] == 0 && c[..r - 2].iter().all(|&x| x == 1)
}

fn quadric_ideal(space: &CominusculeSpace, label: usize, bar: bool, text: &str) -> Result<Bits> {
    let dim = space.dim();
    if label > dim {
        return Err(syntax(text, format!("label {label} out of range 0..={dim}")));
    }
    let even_middle =
        matches!(space.kind(), SpaceKind::EvenQuadric { m } if m / 2 == label) && space.root_system().rank() > 1;
    if bar && !even_middle {
        return Err(syntax(text, "only the middle label of an even quadric can be barred"));
    }
    let ideals = space.ideals()?;
    ideals
        .list
        .iter()
        .copied()
        .find(|&b| quadric_label(space, b) == Some((label, bar)))
        .ok_or_else(|| syntax(text, "no such label"))
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let inner = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if inner.trim().is_empty() || inner.trim() == "∅" {
        return Ok(vec![]);
    }
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| syntax(text, format!("bad part {t:?}"))))
        .collect()
}

fn format_parts(parts: &[usize]) -> String {
    let nz: Vec<String> = parts.iter().filter(|&&p| p > 0).map(|p| p.to_string()).collect();
    format!("({})", nz.join(","))
}

fn parse_bits(space: &CominusculeSpace, s: &str, text: &str) -> Result<Bits> {
    if s.len() != space.dim() || !s.chars().all(|c| c == '0' || c == '1') {
        return Err(syntax(text, format!("expected {} binary digits", space.dim())));
    }
    let ideal = Bits::from_indices(s.char_indices().filter(|(_, c)| *c == '1').map(|(i, _)| i));
    if !space.is_lower_ideal(ideal) {
        return Err(syntax(text, "not a lower order ideal"));
    }
    Ok(ideal)
}

fn format_bits(space: &CominusculeSpace, ideal: Bits) -> String {
    (0..space.dim()).map(|i| if ideal.contains(i) { '1' } else { '0' }).collect()
}

fn parse_one_line(space: &CominusculeSpace, k: usize, n: usize, text: &str) -> Result<Bits> {
    let (a, b) = text.split_once('|').expect("caller checked for a bar");
    let nums = |s: &str| -> Result<Vec<usize>> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| syntax(text, format!("bad entry {t:?}"))))
            .collect()
    };
    let (head, tail) = (nums(a)?, nums(b)?);
    if head.len() != k || tail.len() != n - k {
        return Err(syntax(text, format!("expected {k} entries before the bar and {} after", n - k)));
    }
    let mut all: Vec<usize> = head.iter().chain(&tail).copied().collect();
    all.sort();
    if all != (1..=n).collect::<Vec<_>>() {
        return Err(syntax(text, format!("not a permutation of 1..{n}")));
    }
    if head.windows(2).any(|w| w[0] > w[1]) || tail.windows(2).any(|w| w[0] > w[1]) {
        return Err(syntax(text, "both blocks must increase"));
    }
    let mu: Vec<usize> = head.iter().enumerate().map(|(i, &v)| i + 1 + (n - k) - v).collect();
    ideal_from_partition(space, &mu)
}

/// Parses a position on a simple space.
pub fn parse_ideal(space: &CominusculeSpace, text: &str) -> Result<Bits> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("bits:") {
        return parse_bits(space, rest.trim(), text);
    }
    match space.kind() {
        SpaceKind::Grassmannian { k, n } => {
            if t.contains('|') {
                return parse_one_line(space, k, n, text);
            }
            let parts = parse_parts(t)?;
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(syntax(text, "parts must weakly decrease"));
            }
            ideal_from_partition(space, &parts)
        }
        SpaceKind::Lagrangian { .. } | SpaceKind::Orthogonal { .. } => {
            let parts: Vec<usize> = parse_parts(t)?.into_iter().filter(|&p| p > 0).collect();
            if parts.windows(2).any(|w| w[0] <= w[1]) {
                return Err(syntax(text, "parts must strictly decrease"));
            }
            ideal_from_partition(space, &parts)
        }
        SpaceKind::OddQuadric { .. } | SpaceKind::EvenQuadric { .. } => {
            let (digits, bar) = if let Some(d) = t.strip_suffix("bar") {
                (d, true)
            } else if let Some(d) = t.strip_suffix('\u{0304}') {
                (d, true)
            } else {
                (t, false)
            };
            let label: usize = digits.trim().parse().map_err(|_| syntax(text, "expected a label such as 3 or 5bar"))?;
            quadric_ideal(space, label, bar, text)
        }
        _ => {
            if t == "e" || t.is_empty() {
                Ok(Bits::EMPTY)
            } else {
                parse_bits(space, t, text)
            }
        }
    }
}

/// Formats a position on a simple space; inverse of [`parse_ideal`].
pub fn format_ideal(space: &CominusculeSpace, ideal: Bits) -> String {
    if let Some(parts) = partition(space, ideal) {
        return format_parts(&parts);
    }
    if let Some((label, bar)) = quadric_label(space, ideal) {
        return if bar { format!("{label}bar") } else { label.to_string() };
    }
    if ideal.is_empty() {
        "e".to_string()
    } else {
        format_bits(space, ideal)
    }
}

/// Parses a position on a product space, factors separated by `;`.
pub fn parse_position(space: &Space, text: &str) -> Result<Position> {
    let t = text.trim();
    if space.factors.is_empty() {
        return if t.is_empty() || t == "pt" {
            Ok(vec![])
        } else {
            Err(syntax(text, "the point has only the position pt"))
        };
    }
    let pieces: Vec<&str> = t.split(';').collect();
    if pieces.len() != space.factors.len() {
        return Err(syntax(text, format!("expected {} factor position(s) separated by ';'", space.factors.len())));
    }
    space.factors.iter().zip(pieces).map(|(f, p)| parse_ideal(f, p)).collect()
}

/// Formats a position on a product space.
pub fn format_position(space: &Space, p: &Position) -> String {
    if space.factors.is_empty() {
        return "pt".to_string();
    }
    space.factors.iter().zip(p).map(|(f, &b)| format_ideal(f, b)).collect::<Vec<_>>().join(";")
}
