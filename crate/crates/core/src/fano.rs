//! The Fano plane, its labeling, the incidence group of order 168, and the 30
//! plane structures on a labeled 7-set.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm, PermGroup};

/// The reference labeling: line `b` (1-based) has point triple `BASE_LINES[b-1]`.
///
/// With this labeling incidence is self-dual: `a` lies on line `b` iff `b`
/// lies on line `a`.
pub const BASE_LINES: [[u8; 3]; 7] = [
    [2, 3, 4],
    [1, 3, 5],
    [1, 2, 6],
    [1, 4, 7],
    [2, 5, 7],
    [3, 6, 7],
    [4, 5, 6],
];

/// A point (`1..=7`) or a line index (`1..=7`).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum PointOrLine {
    Point(u8),
    Line(u8),
}

/// The labeled Fano plane.
#[derive(Clone, PartialEq, Debug)]
pub struct FanoPlane {
    lines: [[u8; 3]; 7],
}

impl FanoPlane {
    /// The reference plane.
    pub fn base() -> Self {
        FanoPlane { lines: BASE_LINES }
    }

    pub fn lines(&self) -> &[[u8; 3]; 7] {
        &self.lines
    }

    pub fn line(&self, b: u8) -> [u8; 3] {
        self.lines[(b - 1) as usize]
    }

    /// Is point `a` on line `b`?
    pub fn incident(&self, a: u8, b: u8) -> bool {
        self.line(b).contains(&a)
    }

    /// The four points not on line `b`.
    pub fn complement(&self, b: u8) -> [u8; 4] {
        let mut out = [0u8; 4];
        let mut k = 0;
        for p in 1..=7u8 {
            if !self.incident(p, b) {
                out[k] = p;
                k += 1;
            }
        }
        out
    }

    /// Checks the plane axioms plus self-duality of the labeling.
    pub fn verify_axioms(&self) -> Result<()> {
        check_axioms(&self.lines)?;
        for a in 1..=7u8 {
            for b in 1..=7u8 {
                if self.incident(a, b) != self.incident(b, a) {
                    return Err(Error::Inconsistency(format!(
                        "labeling not self-dual at point {a}, line {b}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The line through two distinct points.
    pub fn line_through(&self, a: u8, b: u8) -> u8 {
        for l in 1..=7u8 {
            if self.incident(a, l) && self.incident(b, l) {
                return l;
            }
        }
        unreachable!("two distinct points always share a line")
    }

    /// The permutation a line-preserving `p` induces on line indices.
    pub fn line_action(&self, p: &Perm) -> Perm {
        let mut images = [0u8; 7];
        for b in 1..=7u8 {
            let img = p.apply_triple(self.line(b));
            let target = self
                .lines
                .iter()
                .position(|l| *l == img)
                .expect("permutation must preserve the line set");
            images[(b - 1) as usize] = (target + 1) as u8;
        }
        Perm::from_images(images)
    }

    /// Does `p` map lines to lines?
    pub fn preserves_lines(&self, p: &Perm) -> bool {
        self.lines
            .iter()
            .all(|&l| self.lines.contains(&p.apply_triple(l)))
    }
}

fn check_axioms(lines: &[[u8; 3]; 7]) -> Result<()> {
    // each point on exactly 3 lines
    for p in 1..=7u8 {
        let count = lines.iter().filter(|l| l.contains(&p)).count();
        if count != 3 {
            return Err(Error::Inconsistency(format!(
                "point {p} lies on {count} lines, expected 3"
            )));
        }
    }
    // two distinct points on exactly one common line
    for a in 1..=7u8 {
        for b in (a + 1)..=7u8 {
            let count = lines
                .iter()
                .filter(|l| l.contains(&a) && l.contains(&b))
                .count();
            if count != 1 {
                return Err(Error::Inconsistency(format!(
                    "points {a},{b} lie on {count} common lines, expected 1"
                )));
            }
        }
    }
    Ok(())
}

/// A Fano-plane structure on the labeled set `{1..7}`: seven sorted triples,
/// listed in lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FanoStructure {
    lines: [[u8; 3]; 7],
}

impl FanoStructure {
    pub fn from_lines(mut lines: [[u8; 3]; 7]) -> Result<Self> {
        for l in &mut lines {
            l.sort_unstable();
        }
        lines.sort_unstable();
        check_axioms(&lines)?;
        Ok(FanoStructure { lines })
    }

    pub fn lines(&self) -> &[[u8; 3]; 7] {
        &self.lines
    }

    /// The base structure (the reference labeling, lines re-sorted).
    pub fn base() -> Self {
        FanoStructure::from_lines(BASE_LINES).expect("reference labeling is a plane")
    }

    /// Number of permutations preserving this structure (168 for any plane).
    pub fn automorphism_count(&self) -> usize {
        all_perms()
            .iter()
            .filter(|p| {
                self.lines
                    .iter()
                    .all(|&l| self.lines.contains(&p.apply_triple(l)))
            })
            .count()
    }
}

/// All distinct Fano structures on `{1..7}` with, for each, a representative
/// relabeling `phi` carrying the base structure onto it
/// (`phi(base line)` is always a line of the structure).
///
/// Deterministic: structures come out sorted by their line lists.
pub fn all_fano_structures() -> Vec<(FanoStructure, Perm)> {
    let base = FanoStructure::base();
    let mut seen: BTreeMap<FanoStructure, Perm> = BTreeMap::new();
    for p in all_perms() {
        let mut lines = [[0u8; 3]; 7];
        for (k, &l) in base.lines().iter().enumerate() {
            lines[k] = p.apply_triple(l);
        }
        lines.sort_unstable();
        let s = FanoStructure { lines };
        seen.entry(s).or_insert(p);
    }
    seen.into_iter().collect()
}

/// Filters all of S7 for line preservation; the incidence group of order 168.
pub fn build_group(plane: &FanoPlane) -> PermGroup {
    PermGroup::from_elements(
        all_perms()
            .into_iter()
            .filter(|p| plane.preserves_lines(p))
            .collect(),
    )
}

/// The stabilizer of a point or a line inside `group`.
pub fn stabilizer(plane: &FanoPlane, group: &PermGroup, i: PointOrLine) -> PermGroup {
    match i {
        PointOrLine::Point(a) => group.filter(|p| p.apply(a) == a),
        PointOrLine::Line(b) => {
            let triple = plane.line(b);
            group.filter(|p| p.apply_triple(triple) == triple)
        }
    }
}

/// A deterministically chosen 7-Sylow subgroup: the cyclic group generated by
/// the order-7 element with the lexicographically smallest one-line notation.
pub fn sylow7(group: &PermGroup) -> PermGroup {
    let gen = group
        .elements()
        .iter()
        .find(|p| p.order() == 7)
        .expect("a group of order 168 has elements of order 7");
    let mut elements = vec![Perm::identity()];
    let mut acc = *gen;
    while acc != Perm::identity() {
        elements.push(acc);
        acc = acc.compose(gen);
    }
    PermGroup::from_elements(elements)
}

/// Precomputed group data reused across constructions: the plane, its group,
/// the chosen 7-Sylow, and Sylow representatives reaching every point / line.
#[derive(Clone, Debug)]
pub struct FanoContext {
    pub plane: FanoPlane,
    pub group: PermGroup,
    /// The chosen Sylow as an ordered list: identity first, then powers.
    pub sylow: Vec<Perm>,
    /// `by_point[a-1]` is the Sylow element mapping point 1 to `a`.
    pub by_point: [Perm; 7],
    /// `by_line[b-1]` is the Sylow element mapping line 1 to line `b`.
    pub by_line: [Perm; 7],
}

impl FanoContext {
    pub fn new() -> Self {
        let plane = FanoPlane::base();
        let group = build_group(&plane);
        let syl = sylow7(&group);
        let gen = *syl
            .elements()
            .iter()
            .find(|p| p.order() == 7)
            .expect("sylow of order 7");
        let mut sylow = vec![Perm::identity()];
        let mut acc = gen;
        while acc != Perm::identity() {
            sylow.push(acc);
            acc = acc.compose(&gen);
        }
        let mut by_point = [Perm::identity(); 7];
        let mut by_line = [Perm::identity(); 7];
        for s in &sylow {
            by_point[(s.apply(1) - 1) as usize] = *s;
            by_line[(plane.line_action(s).apply(1) - 1) as usize] = *s;
        }
        FanoContext {
            plane,
            group,
            sylow,
            by_point,
            by_line,
        }
    }

    /// Induced permutation of line indices.
    pub fn line_action(&self, p: &Perm) -> Perm {
        self.plane.line_action(p)
    }
}

impl Default for FanoContext {
    fn default() -> Self {
        Self::new()
    }
}

/// The unique nontrivial character `G_i -> {±1}`: +1 exactly on the derived
/// subgroup (of index 2 in a stabilizer isomorphic to S4).
#[derive(Clone, Debug)]
pub struct SignChar {
    kernel: PermGroup,
}

impl SignChar {
    pub fn eval(&self, p: &Perm) -> i8 {
        if self.kernel.contains(p) {
            1
        } else {
            -1
        }
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }
}

/// Builds the sign character of a stabilizer.
pub fn sign_char(stab: &PermGroup) -> SignChar {
    let kernel = stab.derived_subgroup();
    assert_eq!(
        kernel.order() * 2,
        stab.order(),
        "stabilizer's derived subgroup must have index 2"
    );
    SignChar { kernel }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_plane_axioms_and_self_duality() {
        FanoPlane::base().verify_axioms().unwrap();
    }

    #[test]
    fn group_order_and_membership() {
        let plane = FanoPlane::base();
        let g = build_group(&plane);
        assert_eq!(g.order(), 168);
        assert!(g.is_closed());
        assert!(g.contains(&Perm::from_cycles(&[&[2, 3, 4], &[5, 7, 6]])));
        assert!(g.contains(&Perm::from_cycles(&[&[2, 3, 6, 5], &[4, 7]])));
        // all elements are even permutations
        assert!(g.elements().iter().all(|p| p.sign() == 1));
    }

    #[test]
    fn stabilizers_have_order_24() {
        let plane = FanoPlane::base();
        let g = build_group(&plane);
        let g1 = stabilizer(&plane, &g, PointOrLine::Point(1));
        assert_eq!(g1.order(), 24);
        let g1p = stabilizer(&plane, &g, PointOrLine::Line(1));
        assert_eq!(g1p.order(), 24);
        assert!(g1p.contains(&Perm::from_cycles(&[&[1, 5, 6, 7], &[3, 4]])));
        // non-incident point/line flag stabilizer: order from enumeration
        let both = g1.intersection(&g1p);
        assert_eq!(both.order(), 6);
    }

    #[test]
    fn sylow_is_transitive_order_7() {
        let plane = FanoPlane::base();
        let g = build_group(&plane);
        let syl = sylow7(&g);
        assert_eq!(syl.order(), 7);
        let gen = syl.elements().iter().find(|p| p.order() == 7).unwrap();
        assert!(plane.preserves_lines(gen));
        let orbit: std::collections::BTreeSet<u8> =
            syl.elements().iter().map(|p| p.apply(1)).collect();
        assert_eq!(orbit.len(), 7);
    }

    #[test]
    fn sylow_to_cosets_bijective_for_every_point_and_line() {
        let plane = FanoPlane::base();
        let g = build_group(&plane);
        let syl = sylow7(&g);
        for a in 1..=7u8 {
            let orbit: std::collections::BTreeSet<u8> =
                syl.elements().iter().map(|p| p.apply(a)).collect();
            assert_eq!(orbit.len(), 7, "point {a}");
            let orbit_l: std::collections::BTreeSet<u8> = syl
                .elements()
                .iter()
                .map(|p| plane.line_action(p).apply(a))
                .collect();
            assert_eq!(orbit_l.len(), 7, "line {a}");
        }
    }

    #[test]
    fn thirty_structures_each_with_168_automorphisms() {
        let all = all_fano_structures();
        assert_eq!(all.len(), 30);
        let base = FanoStructure::base();
        assert!(all.iter().any(|(s, _)| *s == base));
        for (s, phi) in &all {
            // phi carries base lines onto structure lines
            for &l in FanoStructure::base().lines() {
                assert!(s.lines().contains(&phi.apply_triple(l)));
            }
        }
        // automorphism count: spot-check a few (full sweep is slower)
        for (s, _) in all.iter().step_by(7) {
            assert_eq!(s.automorphism_count(), 168);
        }
    }

    #[test]
    fn sign_char_multiplicative_and_surjective() {
        let plane = FanoPlane::base();
        let g = build_group(&plane);
        for i in [PointOrLine::Point(1), PointOrLine::Line(1)] {
            let stab = stabilizer(&plane, &g, i);
            let eps = sign_char(&stab);
            let mut saw_minus = false;
            for a in stab.elements() {
                for b in stab.elements() {
                    assert_eq!(
                        eps.eval(&a.compose(b)),
                        eps.eval(a) * eps.eval(b)
                    );
                }
                if eps.eval(a) == -1 {
                    saw_minus = true;
                }
                assert_eq!(eps.eval(&a.compose(a)), 1);
            }
            assert!(saw_minus);
        }
    }

    #[test]
    fn three_cycles_are_in_the_kernel() {
        let plane = FanoPlane::base();
        let g = build_group(&plane);
        let g1 = stabilizer(&plane, &g, PointOrLine::Point(1));
        let eps = sign_char(&g1);
        assert_eq!(eps.eval(&Perm::from_cycles(&[&[2, 3, 4], &[5, 7, 6]])), 1);
    }
}
