//! Finite T₀ spaces with an explicit open-set family.
//!
//! Every finite topology is the Alexandroff topology of its specialization
//! order. We store the opens anyway and check that collapse law on
//! construction, so the order-based shortcuts used elsewhere always have an
//! independent definitional counterpart to be tested against.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits;
use crate::order::FinitePoset;
use crate::set::{canonical, PointSet, MAX_POINTS};

/// Bound on the size of open families we are willing to materialize.
const MAX_OPENS: usize = 1 << 20;

#[derive(Clone)]
pub struct FiniteSpace {
    order: FinitePoset,
    opens: Vec<PointSet>,
    open_index: HashSet<PointSet>,
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let opens: Vec<_> = self.opens.iter().map(|&u| self.names(u)).collect();
        f.debug_struct("FiniteSpace")
            .field("carrier", &self.order.elements())
            .field("opens", &opens)
            .finish()
    }
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        self.order.elements() == other.order.elements() && self.opens == other.opens
    }
}

impl Eq for FiniteSpace {}

impl FiniteSpace {
    /// Build a space from named points and named open sets.
    pub fn new<S, T, O>(carrier: impl IntoIterator<Item = S>, opens: impl IntoIterator<Item = O>) -> Result<Self>
    where
        S: Into<String>,
        T: AsRef<str>,
        O: IntoIterator<Item = T>,
    {
        let mut names: Vec<String> = carrier.into_iter().map(Into::into).collect();
        limits::check("space carrier", names.len(), MAX_POINTS)?;
        names.sort();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateId(w[0].clone()));
        }
        let lookup = |name: &str| {
            names
                .binary_search_by(|e| e.as_str().cmp(name))
                .map_err(|_| Error::UnknownElement(name.to_string()))
        };
        let mut sets = Vec::new();
        for open in opens {
            let mut s = PointSet::EMPTY;
            for p in open {
                s = s.with(lookup(p.as_ref())?);
            }
            sets.push(s);
        }
        Self::from_opens(names, sets)
    }

    /// Validate an open family over `names` (already sorted).
    pub(crate) fn from_opens(names: Vec<String>, opens: Vec<PointSet>) -> Result<Self> {
        let n = names.len();
        let all = PointSet::full(n);
        let opens = canonical(opens);
        let open_index: HashSet<PointSet> = opens.iter().copied().collect();
        if !open_index.contains(&PointSet::EMPTY) {
            return Err(Error::InvalidTopology("the empty set is not open".into()));
        }
        if !open_index.contains(&all) {
            return Err(Error::InvalidTopology("the carrier is not open".into()));
        }
        if let Some(u) = opens.iter().find(|u| !u.is_subset(all)) {
            return Err(Error::InvalidTopology(format!("open set {u:?} leaves the carrier")));
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if !open_index.contains(&u.union(v)) || !open_index.contains(&u.intersection(v)) {
                    return Err(Error::InvalidTopology(format!(
                        "opens not closed under union and intersection at {u:?}, {v:?}"
                    )));
                }
            }
        }
        // Minimal open neighbourhoods give the specialization order.
        let nbhd: Vec<PointSet> = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(all, |acc, &u| acc.intersection(u))
            })
            .collect();
        let order = FinitePoset::from_relation(names, nbhd).map_err(|e| match e {
            Error::CycleDetected(a, b) => {
                Error::InvalidTopology(format!("not T0: `{a}` and `{b}` have the same neighbourhoods"))
            }
            other => other,
        })?;
        let space = FiniteSpace { order, opens, open_index };
        if upper_sets(&space.order)? != space.opens {
            return Err(Error::InvariantViolated(
                "open family differs from the upper sets of the specialization order".into(),
            ));
        }
        Ok(space)
    }

    /// The Alexandroff topology: all upper sets of `poset`.
    pub fn alexandroff(poset: &FinitePoset) -> Result<Self> {
        limits::check_carrier("Alexandroff carrier", poset.len())?;
        Self::alexandroff_unchecked(poset)
    }

    pub(crate) fn alexandroff_unchecked(poset: &FinitePoset) -> Result<Self> {
        let opens = upper_sets(poset)?;
        let open_index = opens.iter().copied().collect();
        Ok(FiniteSpace {
            order: poset.clone(),
            opens,
            open_index,
        })
    }

    /// The specialization order `x <= y iff x ∈ cl{y}`.
    pub fn specialization(&self) -> &FinitePoset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn points(&self) -> &[String] {
        self.order.elements()
    }

    pub fn all(&self) -> PointSet {
        self.order.all()
    }

    pub fn set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<PointSet> {
        self.order.set(names)
    }

    pub fn names(&self, s: PointSet) -> Vec<String> {
        self.order.names(s)
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.open_index.contains(&s)
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.is_subset(self.all()) && self.is_open(s.complement(self.len()))
    }

    /// Closed sets in canonical order.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        canonical(self.opens.iter().map(|u| u.complement(self.len())).collect())
    }

    pub fn closure(&self, s: PointSet) -> Result<PointSet> {
        self.order.check_subset(s)?;
        Ok(self
            .opens
            .iter()
            .filter(|u| !u.meets(s))
            .fold(self.all(), |acc, u| acc.difference(*u)))
    }

    pub fn interior(&self, s: PointSet) -> Result<PointSet> {
        self.order.check_subset(s)?;
        Ok(self
            .opens
            .iter()
            .filter(|u| u.is_subset(s))
            .fold(PointSet::EMPTY, |acc, &u| acc.union(u)))
    }

    /// Intersection of all open sets containing `s`.
    pub fn saturate(&self, s: PointSet) -> Result<PointSet> {
        self.order.check_subset(s)?;
        Ok(self
            .opens
            .iter()
            .filter(|u| s.is_subset(**u))
            .fold(self.all(), |acc, &u| acc.intersection(u)))
    }

    pub fn point_closure(&self, x: usize) -> PointSet {
        self.order.down(x)
    }

    /// Minimal open neighbourhood of `x`.
    pub fn neighbourhood(&self, x: usize) -> PointSet {
        self.order.up(x)
    }

    /// Irreducibility by the definition: whenever `a` is covered by two
    /// closed sets it lies inside one of them.
    pub fn is_irreducible(&self, a: PointSet) -> Result<bool> {
        self.order.check_subset(a)?;
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        let closed = self.closed_sets();
        // Only the traces on `a` matter; dedupe them first.
        let traces = canonical(closed.iter().map(|f| f.intersection(a)).filter(|t| *t != a).collect());
        Ok(!traces
            .iter()
            .enumerate()
            .any(|(i, &f1)| traces[i..].iter().any(|&f2| f1.union(f2) == a)))
    }

    /// Irreducibility via minimal neighbourhoods: any two points of `a` have
    /// neighbourhoods meeting inside `a`. Equivalent to `is_irreducible` on
    /// finite spaces and much cheaper.
    pub fn is_irreducible_by_neighbourhoods(&self, a: PointSet) -> Result<bool> {
        self.order.check_subset(a)?;
        if a.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(a.iter().all(|x| {
            a.iter()
                .all(|y| self.neighbourhood(x).intersection(self.neighbourhood(y)).meets(a))
        }))
    }

    /// Irreducible closed sets in canonical order.
    pub fn irr_c(&self) -> Result<Vec<PointSet>> {
        limits::check("closed-set family", self.opens.len(), MAX_OPENS)?;
        let mut out = Vec::new();
        for c in self.closed_sets().into_iter().filter(|c| !c.is_empty()) {
            if self.is_irreducible(c)? {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// `irr_c` through the neighbourhood criterion.
    pub fn irr_c_fast(&self) -> Vec<PointSet> {
        self.closed_sets()
            .into_iter()
            .filter(|c| !c.is_empty() && self.is_irreducible_by_neighbourhoods(*c).unwrap_or(false))
            .collect()
    }

    /// Nonempty compact saturated sets, `K(X)`.
    pub fn compact_saturated(&self) -> Result<Vec<PointSet>> {
        limits::check("open family", self.opens.len(), MAX_OPENS)?;
        let mut out = Vec::new();
        for &u in &self.opens {
            if u.is_empty() || self.saturate(u)? != u {
                continue;
            }
            if !self.is_compact(u) {
                return Err(Error::InvariantViolated(format!("saturated set {u:?} is not compact")));
            }
            out.push(u);
        }
        Ok(out)
    }

    /// Open-cover compactness. Every cover drawn from a finite open family
    /// is itself finite; we still extract an explicit subcover with at most
    /// one member per point of `s`.
    pub fn is_compact(&self, s: PointSet) -> bool {
        let cover: Vec<PointSet> = self.opens.iter().copied().filter(|u| u.meets(s)).collect();
        let covered = cover.iter().fold(PointSet::EMPTY, |acc, &u| acc.union(u));
        if !s.is_subset(covered) {
            return false;
        }
        let subcover: Vec<PointSet> = s
            .iter()
            .filter_map(|x| cover.iter().copied().find(|u| u.contains(x)))
            .collect();
        s.is_subset(subcover.iter().fold(PointSet::EMPTY, |acc, &u| acc.union(u)))
    }

    pub fn image(f: &[usize], s: PointSet) -> PointSet {
        s.iter().map(|i| f[i]).collect()
    }

    pub fn preimage(f: &[usize], s: PointSet) -> PointSet {
        f.iter().enumerate().filter(|(_, &y)| s.contains(y)).map(|(x, _)| x).collect()
    }

    /// The subspace on `y` with induced opens. Point `k` of the result is
    /// the `k`-th point of `y` in index order.
    pub fn subspace(&self, y: PointSet) -> Result<FiniteSpace> {
        self.order.check_subset(y)?;
        let idx: Vec<usize> = y.iter().collect();
        let names: Vec<String> = idx.iter().map(|&i| self.points()[i].clone()).collect();
        let opens = canonical(self.opens.iter().map(|u| restrict(&idx, *u)).collect());
        FiniteSpace::from_opens(names, opens)
    }

    pub fn is_sober(&self) -> bool {
        self.sobriety_witness().is_none()
    }

    /// An irreducible closed set that is not a point closure, if any.
    pub fn sobriety_witness(&self) -> Option<PointSet> {
        let points: HashSet<PointSet> = (0..self.len()).map(|x| self.point_closure(x)).collect();
        self.irr_c_fast().into_iter().find(|c| !points.contains(c))
    }
}

/// Restrict `s` to the points listed in `idx`, renumbered by position.
pub(crate) fn restrict(idx: &[usize], s: PointSet) -> PointSet {
    idx.iter().enumerate().filter(|(_, &i)| s.contains(i)).map(|(k, _)| k).collect()
}

/// All upper sets of `poset`, built as the union closure of the principal
/// up-sets so it also works on the larger carriers of power spaces.
pub fn upper_sets(poset: &FinitePoset) -> Result<Vec<PointSet>> {
    union_closure((0..poset.len()).map(|x| poset.up(x)), PointSet::full(poset.len()))
}

/// Close `generators` under arbitrary unions; the result always contains
/// the empty set and `all`.
pub(crate) fn union_closure(generators: impl IntoIterator<Item = PointSet>, all: PointSet) -> Result<Vec<PointSet>> {
    let mut seen: HashSet<PointSet> = HashSet::from([PointSet::EMPTY, all]);
    let mut family = vec![PointSet::EMPTY, all];
    for g in generators {
        let mut added = Vec::new();
        for &s in &family {
            let u = s.union(g);
            if seen.insert(u) {
                added.push(u);
            }
        }
        family.extend(added);
        limits::check("generated topology", family.len(), MAX_OPENS)?;
    }
    Ok(canonical(family))
}

/// Topology generated by a subbase: finite intersections, then unions.
pub(crate) fn generate_topology(subbase: impl IntoIterator<Item = PointSet>, all: PointSet) -> Result<Vec<PointSet>> {
    let mut seen: HashSet<PointSet> = HashSet::from([all]);
    let mut base = vec![all];
    for s in subbase {
        let mut added = Vec::new();
        for &b in base.iter().chain(std::iter::once(&all)) {
            let i = b.intersection(s);
            if seen.insert(i) {
                added.push(i);
            }
        }
        base.extend(added);
        limits::check("generated base", base.len(), MAX_OPENS)?;
    }
    union_closure(base, all)
}

pub fn is_continuous(f: &[usize], x: &FiniteSpace, y: &FiniteSpace) -> bool {
    f.len() == x.len()
        && f.iter().all(|&t| t < y.len())
        && y.opens().iter().all(|&v| x.is_open(FiniteSpace::preimage(f, v)))
}

/// Injective, continuous, and open onto its image.
pub fn is_embedding(f: &[usize], x: &FiniteSpace, y: &FiniteSpace) -> bool {
    let injective = f.iter().collect::<HashSet<_>>().len() == f.len();
    if !injective || !is_continuous(f, x, y) {
        return false;
    }
    let image = FiniteSpace::image(f, x.all());
    let traces: HashSet<PointSet> = y.opens().iter().map(|v| v.intersection(image)).collect();
    x.opens().iter().all(|&u| traces.contains(&FiniteSpace::image(f, u)))
}

/// Search all bijections for a homeomorphism `x -> y`.
pub fn find_homeomorphism(x: &FiniteSpace, y: &FiniteSpace) -> Option<Vec<usize>> {
    if x.len() != y.len() || x.opens().len() != y.opens().len() {
        return None;
    }
    let n = x.len();
    let mut perm: Vec<usize> = (0..n).collect();
    fn search(k: usize, perm: &mut Vec<usize>, x: &FiniteSpace, y: &FiniteSpace) -> bool {
        if k == perm.len() {
            return is_embedding(perm, x, y);
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            // Prune on the specialization order of the assigned prefix.
            let ok = (0..=k).all(|a| {
                (0..=k).all(|b| x.specialization().leq(a, b) == y.specialization().leq(perm[a], perm[b]))
            });
            if ok && search(k + 1, perm, x, y) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    search(0, &mut perm, x, y).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> FiniteSpace {
        FiniteSpace::alexandroff(&FinitePoset::new(["bot", "a", "b"], [("bot", "a"), ("bot", "b")]).unwrap()).unwrap()
    }

    fn a2() -> FiniteSpace {
        FiniteSpace::alexandroff(&FinitePoset::antichain(&["a", "b"]).unwrap()).unwrap()
    }

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::new(["0", "1"], vec![vec![], vec!["1"], vec!["0", "1"]]).unwrap()
    }

    #[test]
    fn alexandroff_examples() {
        let c2 = FiniteSpace::alexandroff(&FinitePoset::chain(2)).unwrap();
        let names: Vec<_> = c2.opens().iter().map(|&u| c2.names(u)).collect();
        assert_eq!(names, vec![vec![], vec!["1".to_string()], vec!["0".into(), "1".into()]]);
        assert_eq!(p3().opens().len(), 5);
        assert_eq!(a2().opens().len(), 4);
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(sierpinski().specialization(), &FinitePoset::chain(2));
        let p = p3();
        let round = FiniteSpace::alexandroff(p.specialization()).unwrap();
        assert_eq!(round, p);
        assert_eq!(a2().specialization(), &FinitePoset::antichain(&["a", "b"]).unwrap());
    }

    #[test]
    fn rejects_invalid_topologies() {
        let missing_union = FiniteSpace::new(["a", "b"], vec![vec![], vec!["a"], vec!["b"], vec!["a", "b"]]);
        assert!(missing_union.is_ok());
        let bad = FiniteSpace::new(["a", "b", "c"], vec![vec![], vec!["a"], vec!["b"], vec!["a", "b", "c"]]);
        assert!(matches!(bad, Err(Error::InvalidTopology(_))));
        let not_t0 = FiniteSpace::new(["a", "b"], vec![vec![], vec!["a", "b"]]);
        assert!(matches!(not_t0, Err(Error::InvalidTopology(m)) if m.contains("T0")));
        let no_empty = FiniteSpace::new(["a"], vec![vec!["a"]]);
        assert!(matches!(no_empty, Err(Error::InvalidTopology(_))));
    }

    #[test]
    fn closure_interior_saturation() {
        let x = p3();
        let s = |n: &[&str]| x.set(n.iter().copied()).unwrap();
        assert_eq!(x.closure(s(&["a"])).unwrap(), s(&["bot", "a"]));
        assert_eq!(x.saturate(s(&["bot"])).unwrap(), x.all());
        assert_eq!(x.interior(s(&["bot", "a"])).unwrap(), s(&["a"]));
    }

    #[test]
    fn irreducibility_examples() {
        let x = p3();
        let s = |n: &[&str]| x.set(n.iter().copied()).unwrap();
        assert!(x.is_irreducible(s(&["bot", "a"])).unwrap());
        assert!(!x.is_irreducible(x.all()).unwrap());
        for p in 0..3 {
            assert!(x.is_irreducible(PointSet::singleton(p)).unwrap());
        }
        assert_eq!(x.is_irreducible(PointSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn irr_c_examples() {
        let x = p3();
        let s = |n: &[&str]| x.set(n.iter().copied()).unwrap();
        assert_eq!(x.irr_c().unwrap(), canonical(vec![s(&["bot"]), s(&["bot", "a"]), s(&["bot", "b"])]));
        let y = a2();
        assert_eq!(y.irr_c().unwrap(), vec![y.set(["a"]).unwrap(), y.set(["b"]).unwrap()]);
        let one = FiniteSpace::alexandroff(&FinitePoset::chain(1)).unwrap();
        assert_eq!(one.irr_c().unwrap(), vec![one.all()]);
    }

    #[test]
    fn compact_saturated_examples() {
        assert_eq!(p3().compact_saturated().unwrap().len(), 4);
        let y = a2();
        assert_eq!(
            y.compact_saturated().unwrap(),
            vec![y.set(["a"]).unwrap(), y.set(["b"]).unwrap(), y.all()]
        );
        let x = p3();
        assert!(x.is_compact(x.set(["a", "b"]).unwrap()));
        assert!(x.is_compact(PointSet::EMPTY));
    }

    #[test]
    fn continuity_examples() {
        let s = sierpinski();
        assert!(is_continuous(&[0, 1], &s, &s));
        assert!(is_continuous(&[1, 1], &s, &s));
        assert!(!is_continuous(&[1, 0], &s, &s));
    }

    #[test]
    fn homeomorphism_search() {
        let s = sierpinski();
        let c2 = FiniteSpace::alexandroff(&FinitePoset::chain(2)).unwrap();
        assert_eq!(find_homeomorphism(&s, &c2), Some(vec![0, 1]));
        assert!(find_homeomorphism(&s, &a2()).is_none());
    }

    #[test]
    fn subspace_induces_opens() {
        let x = p3();
        let sub = x.subspace(x.set(["a", "b"]).unwrap()).unwrap();
        assert_eq!(sub.opens().len(), 4);
    }
}
