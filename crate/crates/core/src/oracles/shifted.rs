//! Stembridge's shifted Littlewood–Richardson rule for Schur `P`-functions,
//! and the resulting products in the cohomology of `LG(n)` (Schur `Q`) and
//! `OG(n+1)` (Schur `P`), both truncated to strict partitions with parts at
//! most `n`.
//!
//! Marked letters are encoded as integers: `i'` is `2i - 1` and `i` is `2i`.

use super::lr::{trim, Partition};
use super::ClassVector;
use parking_lot::RwLock;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

/// Strict partitions with parts at most `n`, in lexicographic order.
pub fn strict_partitions(n: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> =
        (0u32..1 << n).map(|mask| (1..=n).rev().filter(|&p| mask >> (p - 1) & 1 == 1).collect()).collect();
    out.sort();
    out
}

fn part(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

fn letter(v: usize) -> (usize, bool) {
    (v.div_ceil(2), v % 2 == 1)
}

/// Stembridge's lattice property together with the condition that the
/// leftmost occurrence of each `i` in the unmarked word is unmarked.
fn is_ample(word: &[usize], max_letter: usize) -> bool {
    let n = word.len();
    for i in 1..=max_letter {
        if let Some(&v) = word.iter().find(|&&v| letter(v).0 == i) {
            if letter(v).1 {
                return false;
            }
        }
    }
    // m[i] after scanning j letters: first the unmarked letters from the
    // right end, then the marked letters from the left end.
    let mut m = vec![0usize; max_letter + 2];
    for j in 0..2 * n {
        for i in 2..=max_letter {
            if m[i] == m[i - 1] {
                let bad = if j < n {
                    let w = letter(word[n - j - 1]);
                    w.0 == i
                } else {
                    let w = letter(word[j - n]);
                    (w.0 == i - 1 && !w.1) || (w.0 == i && w.1)
                };
                if bad {
                    return false;
                }
            }
        }
        if j < n {
            let (i, marked) = letter(word[n - j - 1]);
            if !marked {
                m[i] += 1;
            }
        } else {
            let (i, marked) = letter(word[j - n]);
            if marked {
                m[i] += 1;
            }
        }
    }
    true
}

/// Cells of the shifted skew diagram `λ/μ` in row-major order.
fn skew_cells(lambda: &[usize], mu: &[usize]) -> Vec<(usize, usize)> {
    (0..lambda.len()).flat_map(|r| (r + part(mu, r)..r + lambda[r]).map(move |c| (r, c))).collect()
}

/// Callback receiving the cells of a skew shape and one filling of them;
/// returning `true` stops the enumeration.
type Visit<'a> = dyn FnMut(&[(usize, usize)], &[usize]) -> bool + 'a;

/// Enumerates marked shifted tableaux of shape `λ/μ` with the given
/// content bound, calling `visit` with the filling in row-major order.
/// With `unmarked_diagonal` the main diagonal carries no primes.
fn tableaux(
    lambda: &[usize],
    mu: &[usize],
    content: &[usize],
    exact: bool,
    unmarked_diagonal: bool,
    visit: &mut Visit<'_>,
) {
    let cells = skew_cells(lambda, mu);
    let width = lambda.first().copied().unwrap_or(0) + 1;
    let mut grid = vec![vec![0usize; width + lambda.len()]; lambda.len()];
    let mut used = vec![0usize; content.len() + 1];
    let mut filling = Vec::with_capacity(cells.len());
    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        mu: &[usize],
        content: &[usize],
        exact: bool,
        unmarked_diagonal: bool,
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
        filling: &mut Vec<usize>,
        visit: &mut Visit<'_>,
    ) -> bool {
        if idx == cells.len() {
            return (!exact || used[1..].iter().zip(content).all(|(u, c)| u == c)) && visit(cells, filling);
        }
        let (r, c) = cells[idx];
        let left = (c > r + part(mu, r)).then(|| grid[r][c - 1]);
        let up = (r > 0 && c >= (r - 1) + part(mu, r - 1)).then(|| grid[r - 1][c]);
        let lo = left.into_iter().chain(up).max().unwrap_or(1).max(1);
        for v in lo..=2 * content.len() {
            let (i, marked) = letter(v);
            if used[i] >= content[i - 1] {
                continue;
            }
            // A primed letter may not repeat in a row, an unprimed one may
            // not repeat in a column.
            if marked && left == Some(v) {
                continue;
            }
            if !marked && up == Some(v) {
                continue;
            }
            if marked && unmarked_diagonal && r == c {
                continue;
            }
            grid[r][c] = v;
            used[i] += 1;
            filling.push(v);
            let stop = go(idx + 1, cells, mu, content, exact, unmarked_diagonal, grid, used, filling, visit);
            filling.pop();
            used[i] -= 1;
            if stop {
                return true;
            }
        }
        false
    }
    go(0, &cells, mu, content, exact, unmarked_diagonal, &mut grid, &mut used, &mut filling, visit);
}

/// `f^λ_{μν}` with `P_μ P_ν = Σ_λ f^λ_{μν} P_λ`, counted by Stembridge's
/// rule: tableaux of shape `λ/μ` and content `ν` whose word, read left to
/// right along rows from the bottom row up, is lattice and has each
/// leftmost `i` unmarked.
pub fn shifted_lr_coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let (lambda, mu, nu) = (trim(lambda), trim(mu), trim(nu));
    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() + nu.iter().sum::<usize>() {
        return 0;
    }
    // The coefficient is symmetric in μ and ν, so both must fit in λ.
    if !contains(&lambda, &mu) || !contains(&lambda, &nu) {
        return 0;
    }
    let rows = lambda.len();
    let mut count = 0u64;
    let mut word = Vec::new();
    tableaux(&lambda, &mu, &nu, true, false, &mut |cells, filling| {
        word.clear();
        for r in (0..rows).rev() {
            word.extend(cells.iter().zip(filling).filter(|((cr, _), _)| *cr == r).map(|(_, &v)| v));
        }
        count += is_ample(&word, nu.len()) as u64;
        false
    });
    count
}

/// Whether `f^λ_{μν} > 0`. Cells are filled in reverse reading order, so
/// the right-to-left pass of the lattice condition prunes partial fillings.
pub fn shifted_lr_nonzero(lambda: &[usize], mu: &[usize], nu: &[usize]) -> bool {
    let (lambda, mu, nu) = (trim(lambda), trim(mu), trim(nu));
    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() + nu.iter().sum::<usize>() {
        return false;
    }
    if !contains(&lambda, &mu) || !contains(&lambda, &nu) {
        return false;
    }
    let rows = lambda.len();
    let cells: Vec<(usize, usize)> =
        (0..rows).flat_map(|r| (r + part(&mu, r)..r + lambda[r]).rev().map(move |c| (r, c))).collect();
    let width = part(&lambda, 0) + rows;
    let mut search = Pruned {
        lambda: &lambda,
        mu: &mu,
        nu: &nu,
        cells: &cells,
        grid: vec![vec![0; width]; rows],
        used: vec![0; nu.len() + 1],
        unmarked: vec![0; nu.len() + 1],
        filling: Vec::with_capacity(cells.len()),
    };
    search.go(0)
}

struct Pruned<'a> {
    lambda: &'a [usize],
    mu: &'a [usize],
    nu: &'a [usize],
    cells: &'a [(usize, usize)],
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
    /// Unmarked letters counted from the right end of the word.
    unmarked: Vec<usize>,
    filling: Vec<usize>,
}

impl Pruned<'_> {
    fn go(&mut self, idx: usize) -> bool {
        if idx == self.cells.len() {
            let word: Vec<usize> = self.filling.iter().rev().copied().collect();
            return is_ample(&word, self.nu.len());
        }
        let (r, c) = self.cells[idx];
        let right = (c + 1 < r + self.lambda[r]).then(|| self.grid[r][c + 1]);
        let up = (r > 0 && c >= r - 1 + part(self.mu, r - 1)).then(|| self.grid[r - 1][c]);
        let lo = up.unwrap_or(1).max(1);
        let hi = right.unwrap_or(2 * self.nu.len()).min(2 * self.nu.len());
        for v in lo..=hi {
            let (i, marked) = letter(v);
            if self.used[i] >= self.nu[i - 1] {
                continue;
            }
            if (marked && right == Some(v)) || (!marked && up == Some(v)) {
                continue;
            }
            // Reading from the right, a letter `i` or `i'` may not appear
            // while `i` and `i-1` have been seen equally often unmarked.
            if i >= 2 && self.unmarked[i] == self.unmarked[i - 1] {
                continue;
            }
            self.grid[r][c] = v;
            self.used[i] += 1;
            if !marked {
                self.unmarked[i] += 1;
            }
            self.filling.push(v);
            let found = self.go(idx + 1);
            self.filling.pop();
            if !marked {
                self.unmarked[i] -= 1;
            }
            self.used[i] -= 1;
            if found {
                return true;
            }
        }
        false
    }
}

fn contains(big: &[usize], small: &[usize]) -> bool {
    small.len() <= big.len() && small.iter().zip(big).all(|(s, b)| s <= b)
}

/// `P_μ P_ν` truncated to strict partitions with parts at most `n`.
pub fn multiply(n: usize, mu: &[usize], nu: &[usize]) -> ClassVector<Partition> {
    let degree = mu.iter().sum::<usize>() + nu.iter().sum::<usize>();
    strict_partitions(n)
        .into_iter()
        .filter(|l| l.iter().sum::<usize>() == degree)
        .filter_map(|l| {
            let c = shifted_lr_coefficient(&l, mu, nu);
            (c > 0).then_some((l, c))
        })
        .collect()
}

/// Strict partitions with parts at most `n` occurring in `P_μ P_ν`.
pub fn product_support(n: usize, mu: &[usize], nu: &[usize]) -> Vec<Partition> {
    let degree = mu.iter().sum::<usize>() + nu.iter().sum::<usize>();
    strict_partitions(n)
        .into_iter()
        .filter(|l| l.iter().sum::<usize>() == degree && shifted_lr_nonzero(l, mu, nu))
        .collect()
}

type SupportCache = RwLock<HashMap<(usize, Partition, Partition), Arc<Vec<Partition>>>>;

/// [`product_support`] memoised per `(n, {μ, ν})`.
fn support_cached(n: usize, mu: &[usize], nu: &[usize]) -> Arc<Vec<Partition>> {
    static CACHE: OnceLock<SupportCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let (a, b) = (trim(mu), trim(nu));
    let key = if a <= b { (n, a, b) } else { (n, b, a) };
    if let Some(v) = cache.read().get(&key) {
        return v.clone();
    }
    let v = Arc::new(product_support(n, &key.1, &key.2));
    cache.write().insert(key, v.clone());
    v
}

/// Whether `∏ σ_{λ_i}` is nonzero in the cohomology of `LG(n)` (equivalently
/// of `OG(n+1)`; the structure constants differ by powers of two only).
/// Coefficients are nonnegative, so only supports are tracked.
pub fn product_nonzero(n: usize, parts: &[Partition]) -> bool {
    let mut support: BTreeSet<Partition> = [Vec::new()].into_iter().collect();
    for p in parts {
        let mut next = BTreeSet::new();
        for mu in &support {
            next.extend(support_cached(n, mu, p).iter().cloned());
        }
        if next.is_empty() {
            return false;
        }
        support = next;
    }
    true
}
