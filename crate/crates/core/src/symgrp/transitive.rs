use crate::symgrp::Permutation;

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn component_count(&mut self, n: usize) -> usize {
        (0..n).filter(|&x| self.find(x) == x).count()
    }
}

/// Whether the group generated by `generators` acts transitively on
/// `{1,…,d}`.
///
/// The orbit partition of the generated group equals the orbit partition of
/// the generators, so a union-find over generator orbits suffices; the group
/// itself is never materialized.
pub fn is_transitive(generators: &[Permutation], degree: usize) -> bool {
    debug_assert!(generators.iter().all(|g| g.degree() == degree));
    let mut uf = UnionFind::new(degree);
    for g in generators {
        for x in 0..degree {
            uf.union(x, g.apply(x));
        }
    }
    uf.component_count(degree) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    #[test]
    fn examples() {
        assert!(is_transitive(&[p("(1 2)", 2)], 2));
        assert!(!is_transitive(&[p("(1 2)", 3)], 3));
        assert!(is_transitive(&[p("(1 2)", 3), p("(2 3)", 3)], 3));
    }

    #[test]
    fn empty_generators() {
        assert!(is_transitive(&[], 1));
        assert!(!is_transitive(&[], 2));
    }
}
