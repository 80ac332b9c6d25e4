//! The cohomology ring of a smooth quadric `Q^m` in its Schubert basis.
//!
//! Classes are indexed by codimension `c ∈ 0..=m`; for even `m = 2n` there
//! are two classes of codimension `n`, told apart by a flag. With
//! `h` the hyperplane class, `σ_c = h^c` for `c < n` (writing `n = ⌈m/2⌉`
//! for odd `m`), `h^c = 2σ_c` above the middle, and for even `m` the middle
//! classes satisfy `h^n = σ_n + σ_n'`, `σ_n² = σ_n'² = [pt]` iff `n` is even
//! and `σ_n σ_n' = [pt]` iff `n` is odd.

use super::ClassVector;

/// A Schubert class of a quadric: codimension and, in the middle of an
/// even quadric, which of the two classes.
pub type QuadricClass = (usize, bool);

/// Multiplication table of `H^*(Q^m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadricRing {
    pub m: usize,
}

impl QuadricRing {
    pub fn new(m: usize) -> QuadricRing {
        QuadricRing { m }
    }

    fn middle(&self) -> Option<usize> {
        self.m.is_multiple_of(2).then_some(self.m / 2)
    }

    /// All classes, ordered by codimension.
    pub fn classes(&self) -> Vec<QuadricClass> {
        let mut out = Vec::new();
        for c in 0..=self.m {
            out.push((c, false));
            if Some(c) == self.middle() {
                out.push((c, true));
            }
        }
        out
    }

    /// `σ_a σ_b` in the Schubert basis.
    pub fn multiply(&self, a: QuadricClass, b: QuadricClass) -> ClassVector<QuadricClass> {
        let m = self.m;
        let s = a.0 + b.0;
        let mut out = ClassVector::new();
        if s > m {
            return out;
        }
        if a.0 == 0 {
            out.insert(b, 1);
            return out;
        }
        if b.0 == 0 {
            out.insert(a, 1);
            return out;
        }
        match self.middle() {
            None => {
                let n = m.div_ceil(2);
                let coeff = if a.0 < n && b.0 < n && s >= n { 2 } else { 1 };
                out.insert((s, false), coeff);
            }
            Some(n) => {
                let (am, bm) = (a.0 == n, b.0 == n);
                if am && bm {
                    let same = a.1 == b.1;
                    if same == (n % 2 == 0) {
                        out.insert((m, false), 1);
                    }
                } else if am || bm || s < n {
                    out.insert((s, false), 1);
                } else if s == n {
                    out.insert((n, false), 1);
                    out.insert((n, true), 1);
                } else if a.0 < n && b.0 < n {
                    out.insert((s, false), 2);
                } else {
                    out.insert((s, false), 1);
                }
            }
        }
        out
    }

    /// Whether `∏ σ_{c_i}` is nonzero.
    pub fn product_nonzero(&self, classes: &[QuadricClass]) -> bool {
        let mut v: ClassVector<QuadricClass> = [((0, false), 1)].into_iter().collect();
        for &c in classes {
            let mut next = ClassVector::new();
            for (&x, &a) in &v {
                for (y, b) in self.multiply(x, c) {
                    *next.entry(y).or_insert(0) += a * b;
                }
            }
            if next.is_empty() {
                return false;
            }
            v = next;
        }
        true
    }
}
