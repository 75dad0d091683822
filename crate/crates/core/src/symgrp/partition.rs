use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts decreasingly; rejects zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All partitions of `n`, in no particular order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: stack.clone() });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                stack.push(p);
                rec(remaining - p, p, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated list such as `"4,2,2"`; the result is
    /// normalized to decreasing order.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition entry `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_and_validates() {
        let p = Partition::new(vec![2, 4, 2]).unwrap();
        assert_eq!(p.parts(), &[4, 2, 2]);
        assert_eq!(p.size(), 8);
        assert_eq!(p.len(), 3);
        assert!(Partition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "2,4,2".parse().unwrap();
        assert_eq!(p.to_string(), "4,2,2");
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn counts_of_all_partitions() {
        // p(n) for n = 1..8
        let expected = [1, 2, 3, 5, 7, 11, 15, 22];
        for n in 1..=8 {
            assert_eq!(Partition::all_of(n).len(), expected[n - 1]);
            assert!(Partition::all_of(n).iter().all(|p| p.size() == n));
        }
    }
}
