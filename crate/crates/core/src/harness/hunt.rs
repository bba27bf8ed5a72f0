//! Deterministic counterexample search over enumerated labeled posets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremality::{irreducible, relatively_maximal, strongly_irreducible};
use crate::qoset::Qoset;
use crate::subset::Subset;

use super::enumerate::{enum_posets, POSET_ENUM_CAP};

/// A registered search: a name, what it looks for, and a predicate returning the
/// offending elements of a poset (empty when the poset is not a witness).
pub struct Property {
    pub name: &'static str,
    pub description: &'static str,
    pub witness: fn(&Qoset) -> Result<Subset>,
}

fn irr_not_str(q: &Qoset) -> Result<Subset> {
    Ok(irreducible(q)?.minus(strongly_irreducible(q)))
}

fn nonmax_irr_not_str(q: &Qoset) -> Result<Subset> {
    Ok(irr_not_str(q)?.minus(q.max_of(q.full())))
}

fn str_not_in_rmax(q: &Qoset) -> Result<Subset> {
    Ok(strongly_irreducible(q).minus(relatively_maximal(q)?))
}

fn rmax_ne_irr(q: &Qoset) -> Result<Subset> {
    let (r, i) = (relatively_maximal(q)?, irreducible(q)?);
    Ok(r.minus(i).union(i.minus(r)))
}

fn riesz_irr_ne_str(q: &Qoset) -> Result<Subset> {
    if !q.is_riesz()? {
        return Ok(Subset::EMPTY);
    }
    irr_not_str(q)
}

pub const PROPERTIES: &[Property] = &[
    Property {
        name: "irreducible-not-strongly-irreducible",
        description: "an irreducible element whose strict up-set is not a filter",
        witness: irr_not_str,
    },
    Property {
        name: "nonmaximal-irreducible-not-strongly-irreducible",
        description: "a non-maximal irreducible element whose strict up-set is not a filter",
        witness: nonmax_irr_not_str,
    },
    Property {
        name: "strongly-irreducible-not-relatively-maximal",
        description: "a strongly irreducible element that is not relatively maximal",
        witness: str_not_in_rmax,
    },
    Property {
        name: "relatively-maximal-ne-irreducible",
        description: "an element in exactly one of the relatively maximal and irreducible sets",
        witness: rmax_ne_irr,
    },
    Property {
        name: "riesz-irreducible-not-strongly-irreducible",
        description: "a Riesz poset with an irreducible element that is not strongly irreducible",
        witness: riesz_irr_ne_str,
    },
];

pub fn find_property(name: &str) -> Result<&'static Property> {
    PROPERTIES
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownProperty(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    /// Position of the poset in the enumeration for `n`.
    pub index: usize,
    pub leq_pairs: Vec<(usize, usize)>,
    pub elements: Subset,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HuntResult {
    pub property: String,
    pub n_max: usize,
    pub posets_scanned: u64,
    pub witness: Option<Witness>,
}

/// Scans posets by increasing size, in enumeration order, and stops at the first witness,
/// so a witness found has the fewest possible elements.
pub fn counterexample_search(name: &str, n_max: usize) -> Result<HuntResult> {
    let prop = find_property(name)?;
    if n_max > POSET_ENUM_CAP {
        return Err(Error::CapExceeded { what: "counterexample search", size: n_max, cap: POSET_ENUM_CAP });
    }
    let mut scanned = 0u64;
    for n in 0..=n_max {
        for (index, q) in enum_posets(n)?.iter().enumerate() {
            scanned += 1;
            let elements = (prop.witness)(q)?;
            if !elements.is_empty() {
                let leq_pairs = q.leq_pairs().into_iter().filter(|(a, b)| a != b).collect();
                return Ok(HuntResult {
                    property: name.to_string(),
                    n_max,
                    posets_scanned: scanned,
                    witness: Some(Witness { n, index, leq_pairs, elements }),
                });
            }
        }
    }
    Ok(HuntResult { property: name.to_string(), n_max, posets_scanned: scanned, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_property() {
        assert!(matches!(counterexample_search("nope", 3), Err(Error::UnknownProperty(_))));
    }

    #[test]
    fn maximal_elements_give_the_first_witness() {
        let r = counterexample_search("irreducible-not-strongly-irreducible", 4).unwrap();
        let w = r.witness.unwrap();
        assert_eq!((w.n, w.leq_pairs.len()), (2, 0));
    }
}
