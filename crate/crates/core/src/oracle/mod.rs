//! Brute-force reference engine: enumerate the monodromy tuples
//! `(γ, σ, τ₁,…,τᵣ)` behind a Hurwitz count and derive everything else by
//! grouping.
//!
//! This module is the ground truth the other engines are checked against,
//! so it favors clarity over speed; the only accelerations are exact
//! prunes (cycle-count distance to the target type, and the shrinking set
//! of still-compatible involutions).

mod graph_builder;

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::symgrp::{
    all_involutions, all_transpositions, is_transitive, permutations_with_cycle_type, Partition,
    Permutation,
};

pub use graph_builder::{monodromy_graph_of_tuple, tuple_count_for_graph};

/// A real double Hurwitz number query: ramification `mu` over one end,
/// `nu` over the other, `genus`, and whether covers are counted together
/// with a real structure.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HurwitzQuery {
    mu: Partition,
    nu: Partition,
    genus: usize,
    with_structure: bool,
}

impl HurwitzQuery {
    pub fn new(mu: Partition, nu: Partition, genus: usize, with_structure: bool) -> Result<Self> {
        if mu.size() != nu.size() {
            return Err(Error::InvalidQuery(format!(
                "|mu| = {} but |nu| = {}",
                mu.size(),
                nu.size()
            )));
        }
        if mu.size() == 0 {
            return Err(Error::InvalidQuery("degree must be at least 1".into()));
        }
        let r = 2 * genus as i64 - 2 + mu.len() as i64 + nu.len() as i64;
        if r <= 0 {
            return Err(Error::InvalidQuery(format!(
                "2g - 2 + l(mu) + l(nu) = {r} must be positive"
            )));
        }
        Ok(HurwitzQuery { mu, nu, genus, with_structure })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn with_structure(&self) -> bool {
        self.with_structure
    }

    pub fn degree(&self) -> usize {
        self.mu.size()
    }

    /// The number r of simple branch points.
    pub fn branch_points(&self) -> usize {
        (2 * self.genus as i64 - 2 + self.mu.len() as i64 + self.nu.len() as i64) as usize
    }
}

/// Enumeration limits; the search space is factorial in both parameters.
#[derive(Clone, Copy, Debug)]
pub struct SearchCap {
    pub max_degree: usize,
    pub max_branch_points: usize,
}

impl Default for SearchCap {
    fn default() -> Self {
        SearchCap { max_degree: 6, max_branch_points: 6 }
    }
}

/// A tuple `(γ, σ, τ₁,…,τᵣ)`: an involution γ, a base permutation σ, and r
/// transpositions, with every partial product inverted by conjugation with
/// γ and the whole family acting transitively.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonodromyTuple {
    gamma: Permutation,
    sigma: Permutation,
    taus: Vec<Permutation>,
    partials: Vec<Permutation>,
}

impl MonodromyTuple {
    pub fn new(gamma: Permutation, sigma: Permutation, taus: Vec<Permutation>) -> Result<Self> {
        let d = sigma.degree();
        if gamma.degree() != d {
            return Err(Error::DegreeMismatch(gamma.degree(), d));
        }
        if !gamma.is_involution() {
            return Err(Error::NotInvolution);
        }
        let mut partials = vec![sigma.clone()];
        for tau in &taus {
            if tau.degree() != d {
                return Err(Error::DegreeMismatch(tau.degree(), d));
            }
            if !tau.is_transposition() {
                return Err(Error::InvalidQuery(format!("{tau} is not a transposition")));
            }
            partials.push(tau.compose(partials.last().unwrap())?);
        }
        for rho in &partials {
            if rho.conjugate_by(&gamma)? != rho.inverse() {
                return Err(Error::InvalidQuery(format!(
                    "conjugation by {gamma} does not invert {rho}"
                )));
            }
        }
        let mut generators = vec![sigma.clone()];
        generators.extend(taus.iter().cloned());
        if !is_transitive(&generators, d) {
            return Err(Error::InvalidQuery("generated group is not transitive".into()));
        }
        Ok(MonodromyTuple { gamma, sigma, taus, partials })
    }

    fn new_unchecked(gamma: Permutation, sigma: Permutation, taus: Vec<Permutation>, partials: Vec<Permutation>) -> Self {
        MonodromyTuple { gamma, sigma, taus, partials }
    }

    pub fn gamma(&self) -> &Permutation {
        &self.gamma
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn taus(&self) -> &[Permutation] {
        &self.taus
    }

    /// The partial products σ₀ = σ, σᵢ = τᵢ∘⋯∘τ₁∘σ.
    pub fn partials(&self) -> &[Permutation] {
        &self.partials
    }

    pub fn degree(&self) -> usize {
        self.sigma.degree()
    }

    pub fn branch_points(&self) -> usize {
        self.taus.len()
    }

    /// Line format `gamma=<cycles> sigma=<cycles> taus=<cycles>;<cycles>`.
    pub fn serialize(&self) -> String {
        let taus: Vec<String> = self.taus.iter().map(|t| t.to_string()).collect();
        format!("gamma={} sigma={} taus={}", self.gamma, self.sigma, taus.join(";"))
    }

    pub fn parse(line: &str, degree: usize) -> Result<Self> {
        let line = line.trim();
        let bad = || Error::Parse(format!("bad tuple line `{line}`"));
        let rest = line.strip_prefix("gamma=").ok_or_else(bad)?;
        let sigma_at = rest.find("sigma=").ok_or_else(bad)?;
        let taus_at = rest.find("taus=").ok_or_else(bad)?;
        let gamma = Permutation::parse(rest[..sigma_at].trim(), degree)?;
        let sigma = Permutation::parse(rest[sigma_at + 6..taus_at].trim(), degree)?;
        let taus = rest[taus_at + 5..]
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        MonodromyTuple::new(gamma, sigma, taus)
    }
}

/// Every involution γ (identity included) with `γ∘ρ∘γ = ρ⁻¹` for all the
/// given permutations, found by filtering all involutions of the degree.
pub fn compatible_involutions(partials: &[Permutation]) -> Vec<Permutation> {
    let Some(first) = partials.first() else {
        return Vec::new();
    };
    let d = first.degree();
    all_involutions(d)
        .into_iter()
        .filter(|g| {
            partials
                .iter()
                .all(|rho| rho.conjugate_by(g).unwrap() == rho.inverse())
        })
        .collect()
}

/// Fixed-size bitset over the involution list of one degree.
#[derive(Clone, PartialEq, Eq)]
struct InvSet {
    words: Vec<u64>,
}

impl InvSet {
    fn intersect(&mut self, other: &InvSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        out
    }
}

struct EnumContext {
    involutions: Vec<Permutation>,
    transpositions: Vec<Permutation>,
    target_type: Partition,
    target_cycles: usize,
    branch_points: usize,
    with_structure: bool,
}

impl EnumContext {
    /// Bitset of involutions γ with γργ = ρ⁻¹, memoized per permutation.
    fn gamma_set(&self, cache: &mut HashMap<Vec<usize>, InvSet>, rho: &Permutation) -> InvSet {
        if let Some(s) = cache.get(rho.images()) {
            return s.clone();
        }
        let inv = rho.inverse();
        let mut words = vec![0u64; self.involutions.len().div_ceil(64)];
        for (i, g) in self.involutions.iter().enumerate() {
            let ok = (0..rho.degree()).all(|x| g.apply(rho.apply(g.apply(x))) == inv.apply(x));
            if ok {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let set = InvSet { words };
        cache.insert(rho.images().to_vec(), set.clone());
        set
    }

    fn search(
        &self,
        cache: &mut HashMap<Vec<usize>, InvSet>,
        sigma: &Permutation,
        partials: &mut Vec<Permutation>,
        taus: &mut Vec<usize>,
        gammas: &InvSet,
        out: &mut Vec<MonodromyTuple>,
    ) {
        let current = partials.last().unwrap().clone();
        let remaining = self.branch_points - taus.len();
        // A transposition changes the cycle count by exactly one.
        let dist = current.cycle_count().abs_diff(self.target_cycles);
        if dist > remaining || (remaining - dist) % 2 != 0 {
            return;
        }
        if remaining == 0 {
            if current.cycle_type() != self.target_type {
                return;
            }
            let mut generators = vec![sigma.clone()];
            generators.extend(taus.iter().map(|&t| self.transpositions[t].clone()));
            if !is_transitive(&generators, sigma.degree()) {
                return;
            }
            let tau_perms: Vec<Permutation> =
                taus.iter().map(|&t| self.transpositions[t].clone()).collect();
            let hits = gammas.ones();
            let selected = if self.with_structure { hits } else { hits[..1].to_vec() };
            for gi in selected {
                out.push(MonodromyTuple::new_unchecked(
                    self.involutions[gi].clone(),
                    sigma.clone(),
                    tau_perms.clone(),
                    partials.clone(),
                ));
            }
            return;
        }
        for (ti, tau) in self.transpositions.iter().enumerate() {
            let next = tau.compose(&current).unwrap();
            let mut narrowed = gammas.clone();
            narrowed.intersect(&self.gamma_set(cache, &next));
            if narrowed.is_empty() {
                continue;
            }
            partials.push(next);
            taus.push(ti);
            self.search(cache, sigma, partials, taus, &narrowed, out);
            taus.pop();
            partials.pop();
        }
    }
}

/// All tuples for the query, in a deterministic order.  With
/// `with_structure` each compatible γ yields its own tuple; without, one
/// representative tuple (with the first compatible γ) is produced per
/// distinct `(σ, τ₁,…,τᵣ)`.
pub fn enumerate_tuples(q: &HurwitzQuery) -> Result<Vec<MonodromyTuple>> {
    enumerate_tuples_with_cap(q, SearchCap::default())
}

pub fn enumerate_tuples_with_cap(q: &HurwitzQuery, cap: SearchCap) -> Result<Vec<MonodromyTuple>> {
    let d = q.degree();
    let r = q.branch_points();
    if d > cap.max_degree || r > cap.max_branch_points {
        let trans = BigUint::from(d * (d - 1) / 2);
        let mut estimate = count_of_cycle_type(q.mu());
        for _ in 0..r {
            estimate *= &trans;
        }
        return Err(Error::Infeasible {
            degree: d,
            branch_points: r,
            estimate: estimate.to_string(),
        });
    }
    let ctx = EnumContext {
        involutions: all_involutions(d),
        transpositions: all_transpositions(d),
        target_type: q.nu().clone(),
        target_cycles: q.nu().len(),
        branch_points: r,
        with_structure: q.with_structure(),
    };
    let sigmas = permutations_with_cycle_type(q.mu());
    let results: Vec<Vec<MonodromyTuple>> = sigmas
        .par_iter()
        .map(|sigma| {
            let mut cache = HashMap::new();
            let mut out = Vec::new();
            let start = ctx.gamma_set(&mut cache, sigma);
            if !start.is_empty() {
                ctx.search(
                    &mut cache,
                    sigma,
                    &mut vec![sigma.clone()],
                    &mut Vec::new(),
                    &start,
                    &mut out,
                );
            }
            out
        })
        .collect();
    Ok(results.into_iter().flatten().collect())
}

fn count_of_cycle_type(t: &Partition) -> BigUint {
    // d! / (∏ parts · ∏ multiplicities!)
    let d = t.size();
    let mut den = BigUint::one();
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in t.parts() {
        den *= BigUint::from(p);
        *mult.entry(p).or_insert(0) += 1;
    }
    for m in mult.values() {
        for k in 1..=*m {
            den *= BigUint::from(k);
        }
    }
    let mut num = BigUint::one();
    for k in 1..=d {
        num *= BigUint::from(k);
    }
    num / den
}

/// The Hurwitz number as `(number of tuples) / d!`.
pub fn hurwitz_oracle(q: &HurwitzQuery) -> Result<Dyadic> {
    hurwitz_oracle_with_cap(q, SearchCap::default())
}

pub fn hurwitz_oracle_with_cap(q: &HurwitzQuery, cap: SearchCap) -> Result<Dyadic> {
    let tuples = enumerate_tuples_with_cap(q, cap)?;
    let mut fact = BigUint::one();
    for k in 1..=q.degree() {
        fact *= BigUint::from(k);
    }
    Dyadic::ratio(BigUint::from(tuples.len()).into(), fact.into())
}
