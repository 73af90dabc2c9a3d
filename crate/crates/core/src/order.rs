//! Finite posets and the order-theoretic predicates every other module uses.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits;
use crate::set::{PointSet, MAX_POINTS};

/// A finite partial order. Elements are kept in lexicographic order and
/// referred to by their index in that order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    elements: Vec<String>,
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs: Vec<_> = self
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.elements[a], self.elements[b]))
            .collect();
        f.debug_struct("FinitePoset")
            .field("elements", &self.elements)
            .field("covers", &pairs)
            .finish()
    }
}

impl FinitePoset {
    /// Build a poset from identifiers and generating pairs `(x, y)` meaning
    /// `x <= y`; the reflexive-transitive closure is taken.
    pub fn new<S, P, Q>(elements: impl IntoIterator<Item = S>, pairs: impl IntoIterator<Item = (P, Q)>) -> Result<Self>
    where
        S: Into<String>,
        P: AsRef<str>,
        Q: AsRef<str>,
    {
        let mut names: Vec<String> = elements.into_iter().map(Into::into).collect();
        limits::check("poset carrier", names.len(), MAX_POINTS)?;
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateId(w[0].clone()));
        }
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let n = names.len();
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (x, y) in pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let i = *index.get(x).ok_or_else(|| Error::UnknownElement(x.to_string()))?;
            let j = *index.get(y).ok_or_else(|| Error::UnknownElement(y.to_string()))?;
            up[i] = up[i].with(j);
        }
        Self::from_relation(names, up)
    }

    /// Close `up` (where `up[i]` holds the elements above `i`) under
    /// reflexivity and transitivity, then check antisymmetry.
    pub(crate) fn from_relation(elements: Vec<String>, mut up: Vec<PointSet>) -> Result<Self> {
        let n = elements.len();
        for (i, u) in up.iter_mut().enumerate() {
            *u = u.with(i);
        }
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        let mut down = vec![PointSet::EMPTY; n];
        for i in 0..n {
            for j in up[i].iter() {
                down[j] = down[j].with(i);
            }
        }
        for i in 0..n {
            if let Some(j) = up[i].intersection(down[i]).without(i).first() {
                return Err(Error::CycleDetected(elements[i].clone(), elements[j].clone()));
            }
        }
        Ok(FinitePoset { elements, up, down })
    }

    pub fn chain(n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<_> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Self::new(names, pairs).expect("chain is a valid poset")
    }

    pub fn antichain(names: &[&str]) -> Result<Self> {
        Self::new(names.iter().copied(), std::iter::empty::<(&str, &str)>())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.elements
            .binary_search_by(|e| e.as_str().cmp(name))
            .map_err(|_| Error::UnknownElement(name.to_string()))
    }

    pub fn set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<PointSet> {
        names
            .into_iter()
            .try_fold(PointSet::EMPTY, |s, n| Ok(s.with(self.index(n.as_ref())?)))
    }

    pub fn names(&self, set: PointSet) -> Vec<String> {
        set.iter().map(|i| self.elements[i].clone()).collect()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// `↑i`
    pub fn up(&self, i: usize) -> PointSet {
        self.up[i]
    }

    /// `↓i`
    pub fn down(&self, i: usize) -> PointSet {
        self.down[i]
    }

    pub fn up_set(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    pub fn down_set(&self, s: PointSet) -> PointSet {
        s.iter().fold(PointSet::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    pub fn is_upper(&self, s: PointSet) -> bool {
        self.up_set(s) == s
    }

    pub fn is_lower(&self, s: PointSet) -> bool {
        self.down_set(s) == s
    }

    pub(crate) fn check_subset(&self, s: PointSet) -> Result<()> {
        match s.difference(self.all()).first() {
            Some(i) => Err(Error::UnknownElement(format!("#{i}"))),
            None => Ok(()),
        }
    }

    /// Nonempty, and every pair has an upper bound inside `d`.
    pub fn is_directed(&self, d: PointSet) -> bool {
        !d.is_empty()
            && d.iter()
                .all(|x| d.iter().all(|y| self.up[x].intersection(self.up[y]).meets(d)))
    }

    pub fn is_filtered(&self, d: PointSet) -> bool {
        !d.is_empty()
            && d.iter()
                .all(|x| d.iter().all(|y| self.down[x].intersection(self.down[y]).meets(d)))
    }

    pub fn maximal_in(&self, s: PointSet) -> Result<PointSet> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(s.iter().filter(|&x| self.up[x].intersection(s) == PointSet::singleton(x)).collect())
    }

    pub fn minimal_in(&self, s: PointSet) -> Result<PointSet> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(s.iter().filter(|&x| self.down[x].intersection(s) == PointSet::singleton(x)).collect())
    }

    pub fn upper_bounds(&self, s: PointSet) -> PointSet {
        s.iter().fold(self.all(), |acc, i| acc.intersection(self.up[i]))
    }

    pub fn lower_bounds(&self, s: PointSet) -> PointSet {
        s.iter().fold(self.all(), |acc, i| acc.intersection(self.down[i]))
    }

    /// Least element of `s`, if any.
    pub fn least_of(&self, s: PointSet) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.up[x]))
    }

    pub fn greatest_of(&self, s: PointSet) -> Option<usize> {
        s.iter().find(|&x| s.is_subset(self.down[x]))
    }

    pub fn sup(&self, s: PointSet) -> Option<usize> {
        self.least_of(self.upper_bounds(s))
    }

    pub fn inf(&self, s: PointSet) -> Option<usize> {
        self.greatest_of(self.lower_bounds(s))
    }

    /// Pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            let above = self.up[x].without(x);
            for y in above.iter() {
                let between = above.intersection(self.down[y]).without(y);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Every order pair `(x, y)` with `x <= y`, including the reflexive ones.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.up[x].iter().map(move |y| (x, y))).collect()
    }

    /// Property D: every nonempty family of principal down-sets with a common
    /// lower bound intersects to a directed set.
    pub fn property_d(&self) -> Result<PropertyD> {
        limits::check_carrier("property D subset enumeration", self.len())?;
        let mut counterexample: Option<(PointSet, PointSet)> = None;
        for s in self.all().subsets().filter(|s| !s.is_empty()) {
            let meet = self.lower_bounds(s);
            if !meet.is_empty() && !self.is_directed(meet) {
                let better = counterexample.is_none_or(|(c, _)| s < c);
                if better {
                    counterexample = Some((s, meet));
                }
            }
        }
        Ok(PropertyD {
            holds: counterexample.is_none(),
            counterexample,
        })
    }

    pub fn lattice_flags(&self) -> Result<LatticeFlags> {
        limits::check_carrier("lattice flag subset enumeration", self.len())?;
        let n = self.len();
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| PointSet::from_indices([x, y])));
        let sup_semilattice = pairs().all(|s| self.sup(s).is_some());
        let inf_semilattice = pairs().all(|s| self.inf(s).is_some());
        let bounded_complete = self
            .all()
            .subsets()
            .filter(|&s| !self.upper_bounds(s).is_empty())
            .all(|s| self.sup(s).is_some());
        // Finite posets are dcpos, so only the infima need checking.
        let complete_semilattice = self
            .all()
            .subsets()
            .filter(|s| !s.is_empty())
            .all(|s| self.inf(s).is_some());
        Ok(LatticeFlags {
            sup_semilattice,
            inf_semilattice,
            bounded_complete,
            complete_semilattice,
        })
    }

    /// Relabel with `names` (already in the desired index order) and return
    /// the poset re-sorted into canonical order.
    pub fn relabel(&self, names: &[String]) -> Result<Self> {
        let pairs: Vec<(String, String)> = self
            .leq_pairs()
            .into_iter()
            .map(|(x, y)| (names[x].clone(), names[y].clone()))
            .collect();
        FinitePoset::new(names.iter().cloned(), pairs)
    }

    /// Isomorphism-invariant key: the lexicographically least strict-order
    /// adjacency bitmask over all relabellings.
    pub fn canonical_key(&self) -> u64 {
        let n = self.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        loop {
            let mut key = 0u64;
            for x in 0..n {
                for y in self.up[x].without(x).iter() {
                    key |= 1u64 << (perm[x] * n + perm[y]);
                }
            }
            best = best.min(key);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyD {
    pub holds: bool,
    /// `(S, ⋂_{x∈S} ↓x)` for the canonically least failing `S`.
    pub counterexample: Option<(PointSet, PointSet)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LatticeFlags {
    pub sup_semilattice: bool,
    pub inf_semilattice: bool,
    pub bounded_complete: bool,
    pub complete_semilattice: bool,
}

/// A total, order-preserving map between finite posets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    source: FinitePoset,
    target: FinitePoset,
    assignment: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: FinitePoset, target: FinitePoset, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(Error::InvariantViolated(format!(
                "map assigns {} points but the source has {}",
                assignment.len(),
                source.len()
            )));
        }
        if let Some(&bad) = assignment.iter().find(|&&t| t >= target.len()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        if !is_monotone(&source, &target, &assignment) {
            return Err(Error::NotContinuous);
        }
        Ok(MonotoneMap { source, target, assignment })
    }

    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, s: PointSet) -> PointSet {
        s.iter().map(|i| self.assignment[i]).collect()
    }
}

pub fn is_monotone(source: &FinitePoset, target: &FinitePoset, f: &[usize]) -> bool {
    source.leq_pairs().into_iter().all(|(x, y)| target.leq(f[x], f[y]))
}

/// Labels used for enumerated and random posets: `p0, p1, ...`.
pub fn generic_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// Known labeled-poset counts for n = 0..=6.
pub const LABELED_POSET_COUNTS: [usize; 7] = [1, 1, 3, 19, 219, 4231, 130023];

/// Every partial order on the labels `p0..p{n-1}` (labeled, not up to
/// isomorphism). Exhaustive over strict relations, so limited to n <= 5.
pub fn labeled_posets(n: usize) -> Result<Vec<FinitePoset>> {
    limits::check("labeled poset enumeration", n, 5)?;
    let names = generic_labels(n);
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    'outer: for mask in 0u64..(1u64 << slots.len()) {
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (bit, &(x, y)) in slots.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                up[x] = up[x].with(y);
            }
        }
        // Keep only relations that are already transitive and antisymmetric,
        // so each order is produced exactly once.
        for x in 0..n {
            for y in up[x].iter() {
                if !up[y].is_subset(up[x]) {
                    continue 'outer;
                }
                if y != x && up[y].contains(x) {
                    continue 'outer;
                }
            }
        }
        out.push(FinitePoset::from_relation(names.clone(), up)?);
    }
    Ok(out)
}

/// Keep the first poset of each isomorphism class.
pub fn dedup_isomorphic(posets: Vec<FinitePoset>) -> Vec<FinitePoset> {
    let mut seen = std::collections::HashSet::new();
    posets.into_iter().filter(|p| seen.insert(p.canonical_key())).collect()
}

/// Random poset generator used by the randomized suites.
///
/// Draw `x_i <= x_j` for each `i < j` independently with probability
/// `edge_prob`, take the transitive closure, then assign the labels
/// `p0..p{n-1}` through a uniformly random permutation.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, edge_prob: f64) -> FinitePoset {
    let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(edge_prob) {
                up[i] = up[i].with(j);
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let labels = generic_labels(n);
    let names: Vec<String> = perm.iter().map(|&p| labels[p].clone()).collect();
    let dag = FinitePoset::from_relation(generic_labels(n), up).expect("forward edges are acyclic");
    dag.relabel(&names).expect("relabelling preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> FinitePoset {
        FinitePoset::new(["bot", "a", "b"], [("bot", "a"), ("bot", "b")]).unwrap()
    }

    fn m4() -> FinitePoset {
        FinitePoset::new(
            ["a", "b", "c", "d"],
            [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap()
    }

    #[test]
    fn build_examples() {
        let one = FinitePoset::new(["a"], std::iter::empty::<(&str, &str)>()).unwrap();
        assert_eq!(one.leq_pairs(), vec![(0, 0)]);
        assert_eq!(p3().leq_pairs().len(), 5);
        assert_eq!(
            FinitePoset::new(["x", "y"], [("x", "y"), ("y", "x")]),
            Err(Error::CycleDetected("x".into(), "y".into()))
        );
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            FinitePoset::new(["a", "a"], std::iter::empty::<(&str, &str)>()),
            Err(Error::DuplicateId("a".into()))
        );
        assert_eq!(
            FinitePoset::new(["a"], [("a", "z")]),
            Err(Error::UnknownElement("z".into()))
        );
    }

    #[test]
    fn down_and_up_sets() {
        let p = p3();
        assert_eq!(p.down_set(p.set(["a"]).unwrap()), p.set(["bot", "a"]).unwrap());
        assert_eq!(p.up_set(p.set(["bot"]).unwrap()), p.all());
        let m = m4();
        assert_eq!(m.up_set(m.set(["c"]).unwrap()), m.set(["c"]).unwrap());
    }

    #[test]
    fn directedness() {
        let p = p3();
        assert!(p.is_directed(p.set(["bot", "a"]).unwrap()));
        assert!(!p.is_directed(p.set(["a", "b"]).unwrap()));
        assert!(!p.is_directed(PointSet::EMPTY));
    }

    #[test]
    fn maximal_minimal() {
        let p = p3();
        assert_eq!(p.maximal_in(p.all()).unwrap(), p.set(["a", "b"]).unwrap());
        let c2 = FinitePoset::chain(2);
        assert_eq!(c2.maximal_in(c2.all()).unwrap(), c2.set(["1"]).unwrap());
        let m = m4();
        assert_eq!(m.minimal_in(m.all()).unwrap(), m.set(["a", "b"]).unwrap());
        assert_eq!(p.maximal_in(PointSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn property_d_examples() {
        assert!(p3().property_d().unwrap().holds);
        let m = m4();
        let d = m.property_d().unwrap();
        assert!(!d.holds);
        let (s, meet) = d.counterexample.unwrap();
        assert_eq!(s, m.set(["c", "d"]).unwrap());
        assert_eq!(meet, m.set(["a", "b"]).unwrap());
        assert!(FinitePoset::chain(5).property_d().unwrap().holds);
    }

    #[test]
    fn lattice_flag_examples() {
        let c2 = FinitePoset::chain(2).lattice_flags().unwrap();
        assert!(c2.sup_semilattice && c2.inf_semilattice && c2.bounded_complete && c2.complete_semilattice);
        let p = p3().lattice_flags().unwrap();
        assert!(p.bounded_complete);
        assert!(!p.sup_semilattice);
        assert!(!m4().lattice_flags().unwrap().bounded_complete);
    }

    #[test]
    fn labeled_counts_match_known_values() {
        for n in 0..=4 {
            assert_eq!(labeled_posets(n).unwrap().len(), LABELED_POSET_COUNTS[n], "n = {n}");
        }
    }

    #[test]
    fn unlabeled_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| dedup_isomorphic(labeled_posets(n).unwrap()).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16]);
    }

    #[test]
    fn monotone_map_rejects_order_reversal() {
        let c2 = FinitePoset::chain(2);
        assert!(MonotoneMap::new(c2.clone(), c2.clone(), vec![0, 1]).is_ok());
        assert_eq!(MonotoneMap::new(c2.clone(), c2, vec![1, 0]), Err(Error::NotContinuous));
    }
}
