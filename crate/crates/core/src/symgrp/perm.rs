use std::fmt;

use crate::error::{Error, Result};
use crate::symgrp::{all_matchings, Partition};

/// A permutation of `{1,…,d}`, stored as a dense 0-indexed image table.
///
/// The composition convention throughout the crate is `p.compose(&q) = p∘q`,
/// the map `x ↦ p(q(x))`: the right factor acts first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &y in &images {
            if y >= images.len() || seen[y] {
                return Err(Error::InvalidPermutation);
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a b)`, 0-indexed.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a < degree && b < degree);
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| self.images[y] == i)
    }

    pub fn is_transposition(&self) -> bool {
        self.images.iter().enumerate().filter(|&(i, &y)| i != y).count() == 2
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y] = i;
        }
        Permutation { images }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// All cycles including fixed points, each starting at its minimum,
    /// sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        let lengths: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    /// Parses 1-indexed cycle notation, e.g. `"(1 2 3)(4 5)"`, with `"id"`
    /// for the identity.  Whitespace inside parentheses is arbitrary.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let s = s.trim();
        if s == "id" || s.is_empty() {
            return Ok(Permutation::identity(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = s;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected `(` in cycle notation `{s}`")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in `{s}`")));
            };
            let body = &stripped[..close];
            rest = &stripped[close + 1..];
            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point `{tok}` in `{s}`")))?;
                if p == 0 || p > degree {
                    return Err(Error::Parse(format!(
                        "point {p} out of range 1..={degree} in `{s}`"
                    )));
                }
                if used[p - 1] {
                    return Err(Error::Parse(format!("point {p} repeated in `{s}`")));
                }
                used[p - 1] = true;
                cycle.push(p - 1);
            }
            if cycle.len() < 2 {
                return Err(Error::Parse(format!("cycle of length < 2 in `{s}`")));
            }
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut free = vec![true; degree];
    fn rec(current: &mut Vec<usize>, free: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if current.len() == free.len() {
            out.push(Permutation {
                images: current.clone(),
            });
            return;
        }
        for y in 0..free.len() {
            if free[y] {
                free[y] = false;
                current.push(y);
                rec(current, free, out);
                current.pop();
                free[y] = true;
            }
        }
    }
    rec(&mut current, &mut free, &mut out);
    out
}

pub fn permutations_with_cycle_type(t: &Partition) -> Vec<Permutation> {
    all_permutations(t.size())
        .into_iter()
        .filter(|p| &p.cycle_type() == t)
        .collect()
}

pub fn all_transpositions(degree: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for a in 0..degree {
        for b in a + 1..degree {
            out.push(Permutation::transposition(degree, a, b));
        }
    }
    out
}

/// All involutions of `𝕊_d` including the identity, in the enumeration
/// order of [`all_matchings`].
pub fn all_involutions(degree: usize) -> Vec<Permutation> {
    all_matchings(degree).iter().map(|m| m.to_involution()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    #[test]
    fn compose_examples() {
        let d = 3;
        assert_eq!(Permutation::identity(d).compose(&p("(1 2)", d)).unwrap(), p("(1 2)", d));
        assert_eq!(p("(1 2)", d).compose(&p("(1 2)", d)).unwrap(), Permutation::identity(d));
        // q = (2 3) acts first: 1 ↦ 1 ↦ 2, 2 ↦ 3 ↦ 3, 3 ↦ 2 ↦ 1.
        assert_eq!(p("(1 2)", d).compose(&p("(2 3)", d)).unwrap(), p("(1 2 3)", d));
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(2);
        let b = Permutation::identity(3);
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(3).cycle_type(), Partition::new(vec![1, 1, 1]).unwrap());
        assert_eq!(p("(1 2 3)(4 5)", 5).cycle_type(), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(p("(1 2)(3 4)", 5).cycle_type(), Partition::new(vec![2, 2, 1]).unwrap());
    }

    #[test]
    fn conjugation_examples() {
        let c = p("(1 2 3)", 3);
        assert_eq!(c.conjugate_by(&p("(2 3)", 3)).unwrap(), p("(1 3 2)", 3));
        assert_eq!(c.conjugate_by(&Permutation::identity(3)).unwrap(), c);
    }

    #[test]
    fn conjugation_preserves_cycle_type() {
        // exhaustively up to degree 4, spot samples at degree 5
        for d in 1..=4 {
            for q in all_permutations(d) {
                for g in all_permutations(d) {
                    assert_eq!(q.conjugate_by(&g).unwrap().cycle_type(), q.cycle_type());
                }
            }
        }
        for q in all_permutations(5) {
            for g in [p("(1 2)", 5), p("(1 2 3 4 5)", 5), p("(2 4)(3 5)", 5)] {
                assert_eq!(q.conjugate_by(&g).unwrap().cycle_type(), q.cycle_type());
            }
        }
    }

    #[test]
    fn compose_inverse_is_identity_exhaustive() {
        for d in 1..=5 {
            for q in all_permutations(d) {
                assert!(q.compose(&q.inverse()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn compose_associative_small() {
        let perms = all_permutations(4);
        for a in &perms {
            for b in &perms {
                for c in perms.iter().take(6) {
                    let left = a.compose(b).unwrap().compose(c).unwrap();
                    let right = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn involution_counts() {
        // recurrence I(d) = I(d−1) + (d−1)·I(d−2): 1, 2, 4, 10, 26, 76, …
        let mut expected = vec![1usize, 1];
        for d in 2..=6 {
            expected.push(expected[d - 1] + (d - 1) * expected[d - 2]);
        }
        assert_eq!(&expected[1..=6], &[1, 2, 4, 10, 26, 76]);
        for d in 1..=6 {
            assert_eq!(all_involutions(d).len(), expected[d]);
            assert!(all_involutions(d).iter().all(|p| p.is_involution()));
        }
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(p("( 1   2 3)( 4 5 )", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(4).to_string(), "id");
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("(1 1)", 3).is_err());
        assert!(Permutation::parse("(1 4)", 3).is_err());
    }

    proptest! {
        #[test]
        fn parse_roundtrip(indices in proptest::collection::vec(0usize..720, 1..4)) {
            let perms = all_permutations(6);
            for i in indices {
                let q = &perms[i % perms.len()];
                let back = Permutation::parse(&q.to_string(), 6).unwrap();
                prop_assert_eq!(&back, q);
            }
        }
    }
}
