//! Permutations of {1..7} and the incidence-preserving group machinery.

use std::fmt;

/// A permutation of `{1..7}` in one-line notation: `images[i-1]` is the image
/// of `i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: [u8; 7],
}

impl Perm {
    pub fn identity() -> Self {
        Perm {
            images: [1, 2, 3, 4, 5, 6, 7],
        }
    }

    /// Builds from one-line images; panics unless it is a bijection of 1..=7.
    pub fn from_images(images: [u8; 7]) -> Self {
        let mut seen = [false; 8];
        for &v in &images {
            assert!((1..=7).contains(&v) && !seen[v as usize], "not a permutation");
            seen[v as usize] = true;
        }
        Perm { images }
    }

    /// Builds from disjoint cycles, e.g. `&[&[2,3,4], &[5,7,6]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Self {
        let mut images = [1u8, 2, 3, 4, 5, 6, 7];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                images[from - 1] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.images[(i - 1) as usize]
    }

    pub fn images(&self) -> [u8; 7] {
        self.images
    }

    /// `(self * rhs)(i) = self(rhs(i))`.
    pub fn compose(&self, rhs: &Perm) -> Perm {
        let mut images = [0u8; 7];
        for i in 1..=7u8 {
            images[(i - 1) as usize] = self.apply(rhs.apply(i));
        }
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = [0u8; 7];
        for i in 1..=7u8 {
            images[(self.apply(i) - 1) as usize] = i;
        }
        Perm { images }
    }

    /// Parity sign: `+1` for even permutations.
    pub fn sign(&self) -> i8 {
        let mut visited = [false; 7];
        let mut sign = 1i8;
        for start in 0..7 {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = (self.images[cur] - 1) as usize;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut n = 1;
        while acc != Perm::identity() {
            acc = acc.compose(self);
            n += 1;
        }
        n
    }

    /// Applies to a sorted triple of points.
    pub fn apply_triple(&self, t: [u8; 3]) -> [u8; 3] {
        let mut out = [self.apply(t[0]), self.apply(t[1]), self.apply(t[2])];
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Perm {
    /// Disjoint cycle notation, fixed points omitted; identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut visited = [false; 7];
        let mut wrote = false;
        for start in 1..=7u8 {
            if visited[(start - 1) as usize] || self.apply(start) == start {
                visited[(start - 1) as usize] = true;
                continue;
            }
            write!(f, "(")?;
            let mut cur = start;
            loop {
                visited[(cur - 1) as usize] = true;
                write!(f, "{cur}")?;
                cur = self.apply(cur);
                if cur == start {
                    break;
                }
                write!(f, " ")?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// All 5040 permutations of `{1..7}` in lexicographic one-line order.
pub fn all_perms() -> Vec<Perm> {
    let mut out = Vec::with_capacity(5040);
    let mut items: Vec<u8> = (1..=7).collect();
    fn rec(prefix: &mut Vec<u8>, rest: &mut Vec<u8>, out: &mut Vec<Perm>) {
        if rest.is_empty() {
            let mut images = [0u8; 7];
            images.copy_from_slice(prefix);
            out.push(Perm { images });
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            prefix.push(v);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(k, v);
        }
    }
    rec(&mut Vec::with_capacity(7), &mut items, &mut out);
    out
}

/// A set of permutations closed under composition and inverse.
#[derive(Clone, PartialEq, Debug)]
pub struct PermGroup {
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Sorted, deduplicated element list; closure is the caller's business
    /// (and is what `is_closed` checks).
    pub fn from_elements(mut elements: Vec<Perm>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        PermGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self.elements.iter().all(|b| self.contains(&a.compose(b)))
        })
    }

    /// Subgroup of elements satisfying a predicate (caller guarantees closure).
    pub fn filter(&self, pred: impl Fn(&Perm) -> bool) -> PermGroup {
        PermGroup::from_elements(self.elements.iter().copied().filter(pred).collect())
    }

    /// The derived (commutator) subgroup.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut set: std::collections::BTreeSet<Perm> = [Perm::identity()].into();
        for a in &self.elements {
            for b in &self.elements {
                let comm = a
                    .compose(b)
                    .compose(&a.inverse())
                    .compose(&b.inverse());
                set.insert(comm);
            }
        }
        // close under composition
        loop {
            let mut grew = false;
            let snapshot: Vec<Perm> = set.iter().copied().collect();
            for a in &snapshot {
                for b in &snapshot {
                    if set.insert(a.compose(b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        PermGroup::from_elements(set.into_iter().collect())
    }

    /// Intersection as a group.
    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        self.filter(|p| other.contains(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_construction_and_sign() {
        let p = Perm::from_cycles(&[&[2, 3, 4], &[5, 7, 6]]);
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.apply(4), 2);
        assert_eq!(p.apply(5), 7);
        assert_eq!(p.apply(1), 1);
        assert_eq!(p.sign(), 1);
        assert_eq!(p.order(), 3);
        let q = Perm::from_cycles(&[&[2, 3, 6, 5], &[4, 7]]);
        assert_eq!(q.sign(), 1); // 4-cycle times transposition is even
        assert_eq!(q.order(), 4);
        assert_eq!(Perm::from_cycles(&[&[4, 7]]).sign(), -1);
    }

    #[test]
    fn compose_and_inverse() {
        let p = Perm::from_cycles(&[&[1, 2, 3]]);
        let q = Perm::from_cycles(&[&[3, 4]]);
        // (p*q)(3) = p(q(3)) = p(4) = 4
        assert_eq!(p.compose(&q).apply(3), 4);
        assert_eq!(p.compose(&p.inverse()), Perm::identity());
    }

    #[test]
    fn enumerates_all_of_s7() {
        let all = all_perms();
        assert_eq!(all.len(), 5040);
        let mut sorted = all.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 5040);
        // lexicographic order
        assert_eq!(all[0], Perm::identity());
        assert_eq!(all[1], Perm::from_cycles(&[&[6, 7]]));
    }

    #[test]
    fn derived_subgroup_of_s3_embedded() {
        // S3 on {1,2,3}
        let s3: Vec<Perm> = all_perms()
            .into_iter()
            .filter(|p| (4..=7).all(|i| p.apply(i) == i))
            .collect();
        let g = PermGroup::from_elements(s3);
        assert_eq!(g.order(), 6);
        assert!(g.is_closed());
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 3);
    }
}
