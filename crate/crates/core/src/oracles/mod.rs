//! Independent ground truth for feasibility on classical spaces: products
//! of Schubert classes computed with the Littlewood–Richardson rule
//! (Grassmannians), Stembridge's shifted rule (`LG(n)` and `OG(n+1)`) and the
//! quadric ring. A tuple is feasible iff the product of its classes is
//! nonzero.

pub mod lr;
pub mod quadric;
pub mod shifted;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::notation::{partition, quadric_label};
use crate::space::{canonical_space, CominusculeSpace, Position, Space, SpaceKind};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Nonnegative integer combination of Schubert classes.
pub type ClassVector<K> = BTreeMap<K, u64>;

/// Which product rule to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum OracleKind {
    Lr,
    Shifted,
    Quadric,
    /// Pick the rule matching the space.
    #[default]
    Auto,
}

impl FromStr for OracleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<OracleKind> {
        match s {
            "lr" => Ok(OracleKind::Lr),
            "shifted" => Ok(OracleKind::Shifted),
            "quadric" => Ok(OracleKind::Quadric),
            "auto" => Ok(OracleKind::Auto),
            _ => Err(Error::InvalidArgument(format!("unknown oracle {s:?}; expected lr, shifted, quadric or auto"))),
        }
    }
}

impl fmt::Display for OracleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleKind::Lr => "lr",
            OracleKind::Shifted => "shifted",
            OracleKind::Quadric => "quadric",
            OracleKind::Auto => "auto",
        })
    }
}

/// The oracle matching a simple space, if there is one. Generic spaces
/// given as `X(type,rank,node)` are recognised by their signature.
pub fn oracle_for(space: &CominusculeSpace) -> Option<OracleKind> {
    match canonical_space(space.signature()).ok()?.kind() {
        SpaceKind::Grassmannian { .. } => Some(OracleKind::Lr),
        SpaceKind::Lagrangian { .. } | SpaceKind::Orthogonal { .. } => Some(OracleKind::Shifted),
        SpaceKind::OddQuadric { .. } | SpaceKind::EvenQuadric { .. } => Some(OracleKind::Quadric),
        _ => None,
    }
}

/// Whether `∏ σ_{π_i}` is nonzero on a simple space.
pub fn product_nonzero_simple(space: &CominusculeSpace, ideals: &[Bits], oracle: OracleKind) -> Result<bool> {
    let native = oracle_for(space).ok_or_else(|| Error::NoOracle(space.name()))?;
    if oracle != OracleKind::Auto && oracle != native {
        return Err(Error::NoOracle(format!("{} has no {oracle} oracle", space.name())));
    }
    for &p in ideals {
        space.check_position(p)?;
    }
    // The canonical space has the same weights, so ideals carry over.
    let canon = canonical_space(space.signature())?;
    let parts = |p: Bits| lr::trim(&partition(&canon, p).expect("classical space has partitions"));
    match canon.kind() {
        SpaceKind::Grassmannian { k, n } => {
            Ok(lr::product_nonzero(k, n, &ideals.iter().map(|&p| parts(p)).collect::<Vec<_>>()))
        }
        SpaceKind::Lagrangian { n } => {
            Ok(shifted::product_nonzero(n, &ideals.iter().map(|&p| parts(p)).collect::<Vec<_>>()))
        }
        SpaceKind::Orthogonal { m } => {
            Ok(shifted::product_nonzero(m - 1, &ideals.iter().map(|&p| parts(p)).collect::<Vec<_>>()))
        }
        SpaceKind::OddQuadric { m } | SpaceKind::EvenQuadric { m } => {
            let ring = quadric::QuadricRing::new(m);
            let classes: Vec<_> = ideals
                .iter()
                .map(|&p| {
                    let (label, bar) = quadric_label(&canon, p).expect("quadric has labels");
                    (m - label, bar)
                })
                .collect();
            Ok(ring.product_nonzero(&classes))
        }
        _ => Err(Error::NoOracle(space.name())),
    }
}

/// Whether `∏ σ_{π_i}` is nonzero on a product space, factor by factor.
pub fn product_nonzero(space: &Space, positions: &[Position], oracle: OracleKind) -> Result<bool> {
    for p in positions {
        space.check_position(p)?;
    }
    for (j, f) in space.factors.iter().enumerate() {
        let ideals: Vec<Bits> = positions.iter().map(|p| p[j]).collect();
        if !product_nonzero_simple(f, &ideals, oracle)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::{enumerate_feasible, is_feasible, Mode};
    use crate::notation::parse_position;
    use crate::space::build_space;

    fn top_tuples(space: &Space, s: usize) -> Vec<Vec<Position>> {
        let f = &space.factors[0];
        let list = f.ideals().unwrap().list.clone();
        let mut out: Vec<Vec<Position>> = vec![vec![]];
        for _ in 0..s {
            out = out
                .into_iter()
                .flat_map(|t| {
                    list.iter().map(move |&b| {
                        let mut t = t.clone();
                        t.push(vec![b]);
                        t
                    })
                })
                .collect();
        }
        out.retain(|t| t.iter().map(|p| space.codim(p)).sum::<usize>() == space.dim());
        out
    }

    #[test]
    fn small_oracle_verdicts() {
        let g = build_space("Gr(2,4)").unwrap();
        let t: Vec<Position> = ["(2)", "(1,1)"].iter().map(|x| parse_position(&g, x).unwrap()).collect();
        assert!(!product_nonzero(&g, &t, OracleKind::Auto).unwrap());
        assert!(product_nonzero(&g, &t[..1], OracleKind::Lr).unwrap());
        assert!(matches!(product_nonzero(&g, &t, OracleKind::Shifted), Err(Error::NoOracle(_))));
        let e = build_space("OP2").unwrap();
        assert!(matches!(product_nonzero(&e, &[vec![Bits::EMPTY]], OracleKind::Auto), Err(Error::NoOracle(_))));
        // Generic notation for a Grassmannian still has an oracle.
        let x = build_space("X(A,3,2)").unwrap();
        assert_eq!(oracle_for(&x.factors[0]), Some(OracleKind::Lr));
    }

    #[test]
    fn lagrangian_and_orthogonal_verdicts_agree_on_small_cases() {
        for n in 1..=3 {
            let lg = build_space(&format!("LG({n})")).unwrap();
            let og = build_space(&format!("OG({})", n + 1)).unwrap();
            for t in top_tuples(&lg, 3) {
                let text: Vec<String> = t.iter().map(|p| crate::notation::format_position(&lg, p)).collect();
                let u: Vec<Position> = text.iter().map(|x| parse_position(&og, x).unwrap()).collect();
                assert_eq!(
                    product_nonzero(&lg, &t, OracleKind::Auto).unwrap(),
                    product_nonzero(&og, &u, OracleKind::Auto).unwrap()
                );
            }
        }
    }

    #[test]
    fn recursion_matches_oracles_on_small_spaces() {
        for name in ["Gr(2,4)", "Gr(2,5)", "Gr(3,6)", "LG(3)", "OG(4)", "Q(5)", "Q(6)", "Q(8)"] {
            let space = build_space(name).unwrap();
            for t in top_tuples(&space, 3) {
                assert_eq!(
                    is_feasible(&space, &t, Mode::Top).unwrap().feasible,
                    product_nonzero(&space, &t, OracleKind::Auto).unwrap(),
                    "{name} {t:?}"
                );
            }
            assert!(!enumerate_feasible(&space, 3, true).unwrap().is_empty());
        }
    }
}
