//! Littlewood–Richardson coefficients from semistandard skew tableaux whose
//! reverse reading word is a lattice word, and products of Schubert classes
//! of `Gr(k,n)` in the `k × (n-k)` box.

use super::ClassVector;

/// A partition with its trailing zeros removed.
pub type Partition = Vec<usize>;

/// Removes trailing zero parts.
pub fn trim(p: &[usize]) -> Partition {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn part(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

/// All partitions inside the `rows × cols` box, in lexicographic order.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn go(rows: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(trim(current));
        if current.len() == rows {
            return;
        }
        for v in 1..=max {
            current.push(v);
            go(rows, v, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `c^λ_{μν}`: the number of semistandard tableaux of shape `λ/μ` and
/// content `ν` whose word, read right to left along rows from the top, is a
/// lattice word.
pub fn lr_coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let (lambda, mu, nu) = (trim(lambda), trim(mu), trim(nu));
    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() + nu.iter().sum::<usize>() {
        return 0;
    }
    if mu.len() > lambda.len() || (0..mu.len()).any(|i| mu[i] > lambda[i]) {
        return 0;
    }
    let cells: Vec<(usize, usize)> =
        (0..lambda.len()).flat_map(|r| (part(&mu, r)..lambda[r]).rev().map(move |c| (r, c))).collect();
    let mut tab = vec![vec![0usize; part(&lambda, 0)]; lambda.len()];
    let mut count = vec![0usize; nu.len() + 1];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        mu: &[usize],
        lambda: &[usize],
        nu: &[usize],
        tab: &mut Vec<Vec<usize>>,
        count: &mut Vec<usize>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        // Rows weakly increase: bounded above by the right neighbour.
        let hi = if c + 1 < lambda[r] { tab[r][c + 1] } else { nu.len() };
        // Columns strictly increase: bounded below by the cell above.
        let lo = if r > 0 && c >= part(mu, r - 1) { tab[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi.min(nu.len()) {
            if count[v] >= nu[v - 1] || (v > 1 && count[v - 1] <= count[v]) {
                continue;
            }
            tab[r][c] = v;
            count[v] += 1;
            total += go(idx + 1, cells, mu, lambda, nu, tab, count);
            count[v] -= 1;
        }
        total
    }
    go(0, &cells, &mu, &lambda, &nu, &mut tab, &mut count)
}

/// `σ_μ σ_ν` in the cohomology of `Gr(k,n)`.
pub fn multiply(k: usize, n: usize, mu: &[usize], nu: &[usize]) -> ClassVector<Partition> {
    let degree = mu.iter().sum::<usize>() + nu.iter().sum::<usize>();
    partitions_in_box(k, n - k)
        .into_iter()
        .filter(|l| l.iter().sum::<usize>() == degree)
        .filter_map(|l| {
            let c = lr_coefficient(&l, mu, nu);
            (c > 0).then_some((l, c))
        })
        .collect()
}

/// Multiplies a class vector by `σ_ν`.
pub fn multiply_vector(k: usize, n: usize, v: &ClassVector<Partition>, nu: &[usize]) -> ClassVector<Partition> {
    let mut out = ClassVector::new();
    for (mu, &a) in v {
        for (l, b) in multiply(k, n, mu, nu) {
            *out.entry(l).or_insert(0) += a * b;
        }
    }
    out
}

/// Whether `∏ σ_{μ_i}` is nonzero in the cohomology of `Gr(k,n)`.
pub fn product_nonzero(k: usize, n: usize, parts: &[Partition]) -> bool {
    let mut v: ClassVector<Partition> = [(Vec::new(), 1)].into_iter().collect();
    for p in parts {
        v = multiply_vector(k, n, &v, p);
        if v.is_empty() {
            return false;
        }
    }
    true
}
