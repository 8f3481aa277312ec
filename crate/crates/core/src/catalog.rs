//! Fixed examples: a battery of certified free-group automorphisms and the
//! permutation groups of order at most six.

use crate::finite_rep::FiniteGroup;
use crate::free_group::FreeEndomorphism;
use crate::mapping_torus::MappingTorus;
use crate::Result;

/// Automorphism of `F₂` with abelianization `[[2,1],[1,1]]`, the monodromy
/// of the figure-eight knot complement.
pub fn figure_eight() -> MappingTorus {
    MappingTorus::parse(2, &["aba", "ba"], &["aB", "bbA"], "figure-eight").expect("certified")
}

/// Automorphisms given by images and inverse images.
const LISTED: &[(&str, usize, &[&str], &[&str])] = &[
    ("figure-eight", 2, &["aba", "ba"], &["aB", "bbA"]),
    ("figure-eight-alt", 2, &["ab", "bab"], &["aaB", "bA"]),
    ("trefoil", 2, &["b", "Ab"], &["aB", "a"]),
    ("fibonacci", 2, &["ab", "a"], &["b", "Ba"]),
    ("quarter-turn", 2, &["b", "A"], &["B", "a"]),
    ("dehn-twist", 2, &["ab", "b"], &["aB", "b"]),
    ("inversion", 2, &["A", "B"], &["A", "B"]),
    ("swap", 2, &["b", "a"], &["b", "a"]),
    ("identity-f3", 3, &["a", "b", "c"], &["a", "b", "c"]),
    ("rotation-f3", 3, &["b", "c", "a"], &["c", "a", "b"]),
    ("twisted-rotation-f3", 3, &["b", "c", "ab"], &["cA", "a", "b"]),
    ("figure-eight-plus-f3", 3, &["aba", "ba", "c"], &["aB", "bbA", "c"]),
];

/// Certified automorphisms of `F₂` and `F₃` used as test manifolds.
pub fn battery() -> Result<Vec<MappingTorus>> {
    let mut out = LISTED
        .iter()
        .map(|(name, rank, im, inv)| MappingTorus::parse(*rank, im, inv, *name))
        .collect::<Result<Vec<_>>>()?;
    let find = |name: &str| out.iter().find(|m| m.label() == name).unwrap().monodromy().clone();
    let composites: Vec<(String, FreeEndomorphism)> = vec![
        ("figure-eight-then-swap".into(), find("swap").compose(&find("figure-eight"))?),
        ("trefoil-then-twist".into(), find("dehn-twist").compose(&find("trefoil"))?),
    ];
    for (name, theta) in composites {
        out.push(MappingTorus::new(theta, name)?);
    }
    Ok(out)
}

pub fn cyclic_group(k: usize) -> Result<FiniteGroup> {
    if k <= 1 {
        return FiniteGroup::from_cycle_strings(1, &["()"]);
    }
    let pts: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    FiniteGroup::from_cycle_strings(k, &[&format!("({})", pts.join(" "))])
}

/// One representative of each group of order at most six, as permutation
/// groups.
pub fn small_groups() -> Result<Vec<(&'static str, FiniteGroup)>> {
    Ok(vec![
        ("Z1", cyclic_group(1)?),
        ("Z2", cyclic_group(2)?),
        ("Z3", cyclic_group(3)?),
        ("Z4", cyclic_group(4)?),
        ("Z2xZ2", FiniteGroup::from_cycle_strings(4, &["(1 2)", "(3 4)"])?),
        ("Z5", cyclic_group(5)?),
        ("Z6", cyclic_group(6)?),
        ("S3", FiniteGroup::from_cycle_strings(3, &["(1 2)", "(1 2 3)"])?),
    ])
}
