//! Minimal coset representatives: reduced words from inversion sets, the
//! action on root sets, the inversion identity `Inv(πλ) = Inv(λ) ⊔ λ⁻¹Inv(π)`
//! and the pattern map.
//!
//! Words are read right to left: the rightmost reflection acts first, so
//! `Inv(w s) = s Inv(w) ⊔ {α_s}` whenever `α_s ∉ Inv(w)`.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::orbit::OrbitDatum;
use crate::rootsys::RootSystem;
use crate::space::{CominusculeSpace, Position};
use std::collections::BTreeSet;

/// A reduced word `w` with `Inv(w) = inv`, found by repeatedly splitting off a
/// right descent: any simple root `δ ∈ Inv(w)` gives `w = w' s_δ` with
/// `Inv(w') = s_δ(Inv(w) ∖ {δ})`.
pub fn reduced_word(rs: &RootSystem, inv: &BTreeSet<usize>) -> Result<Vec<usize>> {
    let mut set = inv.clone();
    let mut peeled = Vec::with_capacity(set.len());
    while !set.is_empty() {
        let d = (0..rs.rank())
            .find(|s| set.contains(s))
            .ok_or_else(|| Error::Internal("set has no simple root, so it is not an inversion set".into()))?;
        set.remove(&d);
        let mut next = BTreeSet::new();
        for &b in &set {
            let c = rs.reflect(d, b);
            if !rs.is_positive(c) {
                return Err(Error::Internal("peeling left the positive roots".into()));
            }
            next.insert(c);
        }
        set = next;
        peeled.push(d);
    }
    peeled.reverse();
    Ok(peeled)
}

/// Root indices of a set of weights.
pub fn weight_roots(space: &CominusculeSpace, s: Bits) -> BTreeSet<usize> {
    s.iter().map(|i| space.weight_root(i)).collect()
}

/// Reduced word of the minimal coset representative whose inversion set is
/// the given order ideal.
pub fn word_from_ideal(space: &CominusculeSpace, ideal: Bits) -> Result<Vec<usize>> {
    space.check_position(ideal)?;
    reduced_word(space.root_system(), &weight_roots(space, ideal))
}

/// Image of a set of roots under a word.
pub fn act_set(rs: &RootSystem, word: &[usize], roots: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    roots.iter().map(|&b| rs.act(word, b)).collect()
}

/// `Inv(πλ) = Inv(λ) ⊔ λ⁻¹Inv(π)` for `π` on `G/P` and `λ ∈ W^Q` given as a
/// position on the Levi quotient `L/Q` of an orbit datum.
pub fn pi_lambda_inv(
    space: &CominusculeSpace,
    pi: Bits,
    datum: &OrbitDatum,
    lambda: &Position,
) -> Result<BTreeSet<usize>> {
    space.check_position(pi)?;
    let word = datum.lambda_word(lambda)?;
    let inverse: Vec<usize> = word.iter().rev().copied().collect();
    let rs = space.root_system();
    let mut out = datum.lambda_inversions(lambda)?;
    for b in weight_roots(space, pi) {
        let c = rs.act(&inverse, b)?;
        if !out.insert(c) {
            return Err(Error::Internal("Inv(λ) and λ⁻¹Inv(π) overlap".into()));
        }
    }
    Ok(out)
}

/// Reduced word for `πλ`: the word of `π` followed by the word of `λ`.
pub fn pi_lambda_word(space: &CominusculeSpace, pi: Bits, datum: &OrbitDatum, lambda: &Position) -> Result<Vec<usize>> {
    let mut w = word_from_ideal(space, pi)?;
    w.extend(datum.lambda_word(lambda)?);
    Ok(w)
}

/// The pattern map on inversion sets: `Inv(w̄) = Φ(g') ∩ Inv(w)` for a
/// root-closed subsystem `Φ(g')`.
pub fn pattern_map(sub_roots: &BTreeSet<usize>, w_inv: &BTreeSet<usize>) -> BTreeSet<usize> {
    sub_roots.intersection(w_inv).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{CartanType, DEFAULT_WEYL_CAP};
    use crate::space::build_space;

    #[test]
    fn identity_and_small_words() {
        let s = build_space("Gr(1,3)").unwrap().factors[0].clone();
        assert!(word_from_ideal(&s, Bits::EMPTY).unwrap().is_empty());
        let w = word_from_ideal(&s, s.full()).unwrap();
        assert_eq!(w.len(), 2);
        assert!(word_from_ideal(&s, Bits::singleton(1)).is_err());
    }

    #[test]
    fn reduced_words_round_trip_through_weyl_oracle() {
        for (t, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::C, 3), (CartanType::D, 4)] {
            let rs = RootSystem::new(t, n).unwrap();
            for e in rs.weyl_enumerate(DEFAULT_WEYL_CAP).unwrap() {
                let w = reduced_word(&rs, &e.inv).unwrap();
                assert_eq!(w.len(), e.inv.len());
                assert_eq!(rs.inversion_set(&w).unwrap(), e.inv);
            }
        }
    }

    #[test]
    fn every_grassmannian_ideal_round_trips() {
        let s = build_space("Gr(2,4)").unwrap().factors[0].clone();
        let rs = s.root_system();
        for &p in &s.ideals().unwrap().list {
            let w = word_from_ideal(&s, p).unwrap();
            assert_eq!(rs.inversion_set(&w).unwrap(), weight_roots(&s, p));
        }
    }

    #[test]
    fn pattern_map_trivial_cases() {
        let all: BTreeSet<usize> = (0..10).collect();
        let inv: BTreeSet<usize> = [1, 4, 7].into_iter().collect();
        assert_eq!(pattern_map(&all, &inv), inv);
        assert!(pattern_map(&all, &BTreeSet::new()).is_empty());
    }
}
