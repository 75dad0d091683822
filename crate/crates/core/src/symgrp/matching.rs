use std::fmt;

use crate::error::{Error, Result};
use crate::symgrp::Permutation;

/// A partial matching of `{1,…,d}`: pairwise disjoint unordered pairs.
///
/// Matchings correspond bijectively to involutions: matched pairs are
/// 2-cycles, unmatched vertices are fixed points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    degree: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(degree: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut norm: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        norm.sort_unstable();
        let mut used = vec![false; degree];
        for &(a, b) in &norm {
            if a == b || b >= degree || used[a] || used[b] {
                return Err(Error::InvalidPartition);
            }
            used[a] = true;
            used[b] = true;
        }
        Ok(Matching { degree, pairs: norm })
    }

    pub fn empty(degree: usize) -> Self {
        Matching { degree, pairs: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains_pair(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.pairs.binary_search(&key).is_ok()
    }

    pub fn partner(&self, x: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn free_vertices(&self) -> Vec<usize> {
        let mut used = vec![false; self.degree];
        for &(a, b) in &self.pairs {
            used[a] = true;
            used[b] = true;
        }
        (0..self.degree).filter(|&x| !used[x]).collect()
    }

    /// The matching of an involution; errors when `p∘p ≠ id`.
    pub fn of_involution(p: &Permutation) -> Result<Self> {
        if !p.is_involution() {
            return Err(Error::NotInvolution);
        }
        let pairs = (0..p.degree())
            .filter(|&x| p.apply(x) > x)
            .map(|x| (x, p.apply(x)))
            .collect();
        Ok(Matching { degree: p.degree(), pairs })
    }

    pub fn to_involution(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.degree).collect();
        for &(a, b) in &self.pairs {
            images.swap(a, b);
        }
        Permutation::from_images(images).expect("disjoint pairs give a bijection")
    }

    pub fn with_pair(&self, a: usize, b: usize) -> Result<Self> {
        let mut pairs = self.pairs.clone();
        pairs.push((a, b));
        Matching::new(self.degree, pairs)
    }

    pub fn without_pair(&self, a: usize, b: usize) -> Self {
        let key = if a < b { (a, b) } else { (b, a) };
        Matching {
            degree: self.degree,
            pairs: self.pairs.iter().copied().filter(|&p| p != key).collect(),
        }
    }

    /// Parses a 1-indexed pair list such as `"1-2,3-4"`; `""` or `"-"` is
    /// the empty matching.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Matching::empty(degree));
        }
        let mut pairs = Vec::new();
        for tok in s.split(',') {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad pair `{tok}`")))?;
            let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad pair `{tok}`")))?;
            let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad pair `{tok}`")))?;
            if a == 0 || b == 0 || a > degree || b > degree {
                return Err(Error::Parse(format!("pair `{tok}` out of range 1..={degree}")));
            }
            pairs.push((a - 1, b - 1));
        }
        Matching::new(degree, pairs).map_err(|_| Error::Parse(format!("pairs in `{s}` overlap")))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "-");
        }
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All matchings of `{1,…,d}` (equivalently all involutions), enumerated by
/// recursively deciding the smallest undecided vertex.
pub fn all_matchings(degree: usize) -> Vec<Matching> {
    fn rec(degree: usize, free: &[usize], pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        let Some((&first, rest)) = free.split_first() else {
            let mut sorted = pairs.clone();
            sorted.sort_unstable();
            out.push(Matching { degree, pairs: sorted });
            return;
        };
        // leave `first` unmatched
        rec(degree, rest, pairs, out);
        // or pair it with each later free vertex
        for (i, &other) in rest.iter().enumerate() {
            let remaining: Vec<usize> = rest
                .iter()
                .copied()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v)
                .collect();
            pairs.push((first, other));
            rec(degree, &remaining, pairs, out);
            pairs.pop();
        }
    }
    let mut out = Vec::new();
    rec(degree, &(0..degree).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgrp::all_involutions;

    #[test]
    fn involution_roundtrip_exhaustive() {
        for d in 1..=6 {
            for p in all_involutions(d) {
                let m = Matching::of_involution(&p).unwrap();
                assert_eq!(m.to_involution(), p);
            }
            for m in all_matchings(d) {
                assert_eq!(Matching::of_involution(&m.to_involution()).unwrap(), m);
            }
        }
    }

    #[test]
    fn rejects_non_involution() {
        let c = Permutation::parse("(1 2 3)", 3).unwrap();
        assert_eq!(Matching::of_involution(&c), Err(Error::NotInvolution));
    }

    #[test]
    fn identity_gives_empty_matching() {
        let m = Matching::of_involution(&Permutation::identity(3)).unwrap();
        assert!(m.is_empty());
        assert_eq!(m.free_vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn parse_and_display() {
        let m = Matching::parse("3-4,1-2", 4).unwrap();
        assert_eq!(m.to_string(), "1-2,3-4");
        assert_eq!(Matching::parse("-", 3).unwrap(), Matching::empty(3));
        assert!(Matching::parse("1-2,2-3", 4).is_err());
        assert!(Matching::parse("1-5", 4).is_err());
    }

    #[test]
    fn overlap_rejected() {
        assert!(Matching::new(4, vec![(0, 1), (1, 2)]).is_err());
        assert!(Matching::new(4, vec![(0, 0)]).is_err());
    }
}
