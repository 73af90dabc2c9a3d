//! The set-class tower `S_c ⊆ D_c ⊆ RD ⊆ WD ⊆ Irr_c` on finite spaces.
//!
//! Each class is computed from its definition. On a finite T₀ space all five
//! coincide, which is what makes the definitional versions useful as oracles
//! for each other.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::{self, DEFAULT_FAMILY_LIMIT};
use crate::order::{dedup_isomorphic, is_monotone, labeled_posets, FinitePoset};
use crate::set::{canonical, PointSet};
use crate::space::{is_continuous, FiniteSpace};

/// Default largest target poset searched by `wd_refute`.
pub const DEFAULT_WD_TARGET: usize = 3;

/// A nonempty family of compact saturated sets, filtered under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilteredFamily(Vec<PointSet>);

impl FilteredFamily {
    pub fn new(x: &FiniteSpace, members: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let members = canonical(members.into_iter().collect());
        if members.is_empty() {
            return Err(Error::NotFiltered);
        }
        let k = x.compact_saturated()?;
        if members.iter().any(|m| k.binary_search(m).is_err()) {
            return Err(Error::NotCompactSaturated);
        }
        if !is_filtered_family(&members) {
            return Err(Error::NotFiltered);
        }
        Ok(FilteredFamily(members))
    }

    pub fn members(&self) -> &[PointSet] {
        &self.0
    }
}

/// Every two members contain a third member inside their intersection.
pub fn is_filtered_family(family: &[PointSet]) -> bool {
    !family.is_empty()
        && family.iter().all(|&a| {
            family
                .iter()
                .all(|&b| family.iter().any(|c| c.is_subset(a.intersection(b))))
        })
}

/// Point closures `{cl{x}}`.
pub fn sc(x: &FiniteSpace) -> Vec<PointSet> {
    canonical((0..x.len()).map(|p| x.point_closure(p)).collect())
}

/// Closures of all directed subsets.
pub fn dc(x: &FiniteSpace) -> Result<Vec<PointSet>> {
    limits::check_carrier("directed-subset search", x.len())?;
    let order = x.specialization();
    let mut out = Vec::new();
    for d in x.all().subsets() {
        if order.is_directed(d) {
            out.push(x.closure(d)?);
        }
    }
    Ok(canonical(out))
}

/// `m(K)`: closed sets meeting every member of `family`, minimal under
/// inclusion.
pub fn minimal_closed_meeting(x: &FiniteSpace, family: &[PointSet]) -> Vec<PointSet> {
    let meeting: Vec<PointSet> = x
        .closed_sets()
        .into_iter()
        .filter(|c| family.iter().all(|k| c.meets(*k)))
        .collect();
    minimal_members(&meeting)
}

fn minimal_members(family: &[PointSet]) -> Vec<PointSet> {
    family
        .iter()
        .copied()
        .filter(|&c| !family.iter().any(|&d| d != c && d.is_subset(c)))
        .collect()
}

/// Rudin sets by exhaustive enumeration of the filtered subfamilies of `K(X)`.
pub fn rd(x: &FiniteSpace, family_limit: usize) -> Result<Vec<PointSet>> {
    let k = x.compact_saturated()?;
    // Subfamilies are bitmasks; 2^24 is already far beyond desk scale.
    limits::check("compact-saturated family", k.len(), family_limit.min(24))?;
    let closed = x.closed_sets();
    // meets[c] has bit i when closed set c meets K_i.
    let meets: Vec<u64> = closed
        .iter()
        .map(|c| {
            k.iter()
                .enumerate()
                .filter(|(_, ki)| c.meets(**ki))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut found = vec![false; closed.len()];
    for mask in filtered_subfamilies(&k) {
        let hits: Vec<usize> = (0..closed.len()).filter(|&c| meets[c] & mask == mask).collect();
        for &c in &hits {
            let minimal = !hits
                .iter()
                .any(|&d| d != c && closed[d].is_subset(closed[c]));
            if minimal {
                found[c] = true;
            }
        }
    }
    Ok(closed
        .into_iter()
        .zip(found)
        .filter_map(|(c, f)| f.then_some(c))
        .collect())
}

/// Bitmasks over `k` of every nonempty subfamily that is filtered.
/// `k.len()` must stay well below 64.
pub fn filtered_subfamilies(k: &[PointSet]) -> Vec<u64> {
    // below[i][j] has bit l when K_l ⊆ K_i ∩ K_j.
    let below: Vec<Vec<u64>> = k
        .iter()
        .map(|&a| {
            k.iter()
                .map(|&b| {
                    k.iter()
                        .enumerate()
                        .filter(|(_, c)| c.is_subset(a.intersection(b)))
                        .fold(0u64, |acc, (l, _)| acc | 1 << l)
                })
                .collect()
        })
        .collect();
    (1u64..(1u64 << k.len()))
        .filter(|&mask| {
            let members = PointSet::from_bits(mask);
            members
                .iter()
                .all(|i| members.iter().all(|j| below[i][j] & mask != 0))
        })
        .collect()
}

/// Rudin sets through the least-member reduction: a finite filtered family
/// has a least member `K`, and `m` of the family equals `m({K})`.
pub fn rd_least_member(x: &FiniteSpace) -> Result<Vec<PointSet>> {
    let mut out = Vec::new();
    for k in x.compact_saturated()? {
        out.extend(minimal_closed_meeting(x, &[k]));
    }
    Ok(canonical(out))
}

/// `rd` when `K(X)` is within the family limit, otherwise the least-member
/// reduction.
pub fn rd_auto(x: &FiniteSpace) -> Result<Vec<PointSet>> {
    match rd(x, DEFAULT_FAMILY_LIMIT) {
        Err(Error::SizeLimit { .. }) => rd_least_member(x),
        other => other,
    }
}

/// Check that `a` lies in `m(family)`.
pub fn rudin_witness_check(x: &FiniteSpace, a: PointSet, family: &[PointSet]) -> Result<bool> {
    if !x.is_closed(a) {
        return Err(Error::NotClosed);
    }
    let family = FilteredFamily::new(x, family.iter().copied())?;
    let members = family.members();
    let meets_all = |c: PointSet| members.iter().all(|k| c.meets(*k));
    if !meets_all(a) {
        return Ok(false);
    }
    Ok(!x
        .closed_sets()
        .into_iter()
        .any(|c| c != a && c.is_subset(a) && meets_all(c)))
}

/// A continuous map into a finite poset (viewed as an Alexandroff space)
/// under which the image closure of a set is not a point closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WdWitness {
    pub target: Vec<String>,
    pub target_order: Vec<(String, String)>,
    pub map: Vec<String>,
    pub image_closure: Vec<String>,
}

/// Search continuous maps `X -> Y` over finite targets `Y` for one that
/// sends `a` to a set whose closure is not a point closure. The identity
/// map is tried first.
pub fn wd_refute(x: &FiniteSpace, a: PointSet, max_target: usize) -> Result<Option<WdWitness>> {
    limits::check_carrier("map source", x.len())?;
    limits::check("target size", max_target, 4)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let identity: Vec<usize> = (0..x.len()).collect();
    if let Some(w) = refutes(x.specialization(), &identity, a, x.specialization()) {
        return Ok(Some(w));
    }
    for m in 1..=max_target {
        let pool = dedup_isomorphic(labeled_posets(m)?);
        limits::check("map count", m.pow(x.len() as u32), 1 << 22)?;
        for target in &pool {
            let mut f = vec![0usize; x.len()];
            loop {
                if is_monotone(x.specialization(), target, &f) {
                    if let Some(w) = refutes(x.specialization(), &f, a, target) {
                        return Ok(Some(w));
                    }
                }
                if !next_map(&mut f, m) {
                    break;
                }
            }
        }
    }
    Ok(None)
}

fn next_map(f: &mut [usize], m: usize) -> bool {
    for v in f.iter_mut() {
        *v += 1;
        if *v < m {
            return true;
        }
        *v = 0;
    }
    false
}

fn refutes(source: &FinitePoset, f: &[usize], a: PointSet, target: &FinitePoset) -> Option<WdWitness> {
    let image = FiniteSpace::image(f, a);
    let closure = target.down_set(image);
    if target.greatest_of(closure).is_some() {
        return None;
    }
    let pairs = target
        .cover_pairs()
        .into_iter()
        .map(|(i, j)| (target.name(i).to_string(), target.name(j).to_string()))
        .collect();
    Some(WdWitness {
        target: target.elements().to_vec(),
        target_order: pairs,
        map: (0..source.len()).map(|i| target.name(f[i]).to_string()).collect(),
        image_closure: target.names(closure),
    })
}

/// `WD(X)` for a finite space: the point closures, with a refuting map
/// confirmed for every other nonempty closed set.
pub fn wd_finite(x: &FiniteSpace) -> Result<Vec<PointSet>> {
    let points = sc(x);
    for c in x.closed_sets() {
        if c.is_empty() || points.binary_search(&c).is_ok() {
            continue;
        }
        if wd_refute(x, c, DEFAULT_WD_TARGET)?.is_none() {
            return Err(Error::InvariantViolated(format!(
                "no refuting map for closed set {:?}",
                x.names(c)
            )));
        }
    }
    Ok(points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PushForward {
    pub in_rd_source: bool,
    pub in_rd_target: bool,
    pub in_wd_source: bool,
    pub in_wd_target: bool,
}

impl PushForward {
    pub fn preserved(&self) -> bool {
        (!self.in_rd_source || self.in_rd_target) && (!self.in_wd_source || self.in_wd_target)
    }
}

/// Membership of `a` and of `cl f(a)` in `RD` and `WD`.
pub fn push_forward_class_check(f: &[usize], x: &FiniteSpace, y: &FiniteSpace, a: PointSet) -> Result<PushForward> {
    if !is_continuous(f, x, y) {
        return Err(Error::NotContinuous);
    }
    if !x.is_closed(a) {
        return Err(Error::NotClosed);
    }
    let b = y.closure(FiniteSpace::image(f, a))?;
    let (rd_x, rd_y) = (rd_auto(x)?, rd_auto(y)?);
    let (wd_x, wd_y) = (wd_finite(x)?, wd_finite(y)?);
    Ok(PushForward {
        in_rd_source: rd_x.contains(&a),
        in_rd_target: rd_y.contains(&b),
        in_wd_source: wd_x.contains(&a),
        in_wd_target: wd_y.contains(&b),
    })
}

/// Smallest directed `D ⊆ a` with `cl D = a`, least in canonical order.
pub fn extract_directed_dense(x: &FiniteSpace, a: PointSet) -> Result<PointSet> {
    limits::check_carrier("directed-subset search", x.len())?;
    if !x.is_closed(a) || a.is_empty() || !x.is_irreducible(a)? {
        return Err(Error::NotIrreducibleClosed);
    }
    let order = x.specialization();
    let mut candidates: Vec<PointSet> = a.subsets().filter(|d| order.is_directed(*d)).collect();
    candidates.sort();
    for d in candidates {
        if x.closure(d)? == a {
            return Ok(d);
        }
    }
    Err(Error::InvariantViolated(format!(
        "irreducible closed set {:?} has no dense directed subset",
        x.names(a)
    )))
}

/// `K_A = {K ∈ K(X) : A ∩ int K ≠ ∅}`, checked to be a filtered family
/// with `A ∈ m(K_A)`.
pub fn build_lc_rudin_family(x: &FiniteSpace, a: PointSet) -> Result<FilteredFamily> {
    if !x.is_closed(a) || a.is_empty() || !x.is_irreducible(a)? {
        return Err(Error::NotIrreducibleClosed);
    }
    let mut members = Vec::new();
    for k in x.compact_saturated()? {
        if a.meets(x.interior(k)?) {
            members.push(k);
        }
    }
    let family = FilteredFamily::new(x, members).map_err(|e| {
        Error::InvariantViolated(format!("family for {:?} is not a filtered family: {e}", x.names(a)))
    })?;
    if !rudin_witness_check(x, a, family.members())? {
        return Err(Error::InvariantViolated(format!(
            "{:?} is not minimal for its own family",
            x.names(a)
        )));
    }
    Ok(family)
}

/// The unique `y` with `cl f(a) = cl{y}`, for a Rudin set `a`.
pub fn singleton_image_check(f: &[usize], x: &FiniteSpace, a: PointSet, y: &FiniteSpace) -> Result<Option<usize>> {
    if !is_continuous(f, x, y) {
        return Err(Error::NotContinuous);
    }
    if !rd_auto(x)?.contains(&a) {
        return Err(Error::NotRudinSet);
    }
    let b = y.closure(FiniteSpace::image(f, a))?;
    let mut points = (0..y.len()).filter(|&p| y.point_closure(p) == b);
    let first = points.next();
    Ok(if points.next().is_none() { first } else { None })
}

/// The five classes side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    pub sc: Vec<PointSet>,
    pub dc: Vec<PointSet>,
    pub rd: Vec<PointSet>,
    pub wd: Vec<PointSet>,
    pub irr: Vec<PointSet>,
}

impl Tower {
    pub fn compute(x: &FiniteSpace) -> Result<Self> {
        Ok(Tower {
            sc: sc(x),
            dc: dc(x)?,
            rd: rd_auto(x)?,
            wd: wd_finite(x)?,
            irr: x.irr_c()?,
        })
    }

    pub fn is_nested(&self) -> bool {
        let sub = |a: &[PointSet], b: &[PointSet]| a.iter().all(|s| b.contains(s));
        sub(&self.sc, &self.dc) && sub(&self.dc, &self.rd) && sub(&self.rd, &self.wd) && sub(&self.wd, &self.irr)
    }

    pub fn is_collapsed(&self) -> bool {
        self.sc == self.dc && self.dc == self.rd && self.rd == self.wd && self.wd == self.irr
    }
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

    fn one() -> FiniteSpace {
        FiniteSpace::alexandroff(&FinitePoset::chain(1)).unwrap()
    }

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::alexandroff(&FinitePoset::chain(2)).unwrap()
    }

    fn s(x: &FiniteSpace, names: &[&str]) -> PointSet {
        x.set(names.iter().copied()).unwrap()
    }

    #[test]
    fn sc_dc_examples() {
        let x = p3();
        let expected = canonical(vec![s(&x, &["bot"]), s(&x, &["bot", "a"]), s(&x, &["bot", "b"])]);
        assert_eq!(sc(&x), expected);
        assert_eq!(dc(&x).unwrap(), expected);
        assert_eq!(dc(&one()).unwrap(), vec![PointSet::singleton(0)]);
    }

    #[test]
    fn rd_examples() {
        let x = p3();
        assert_eq!(rd(&x, 16).unwrap(), sc(&x));
        let y = a2();
        assert_eq!(rd(&y, 16).unwrap(), vec![s(&y, &["a"]), s(&y, &["b"])]);
        assert_eq!(rd(&one(), 16).unwrap(), vec![PointSet::singleton(0)]);
        assert!(matches!(rd(&x, 3), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn rudin_witness_examples() {
        let x = p3();
        let a = s(&x, &["a"]);
        assert!(rudin_witness_check(&x, s(&x, &["bot", "a"]), &[a]).unwrap());
        assert!(!rudin_witness_check(&x, x.all(), &[a]).unwrap());
        assert!(rudin_witness_check(&one(), PointSet::singleton(0), &[PointSet::singleton(0)]).unwrap());
        assert_eq!(rudin_witness_check(&x, s(&x, &["a"]), &[a]), Err(Error::NotClosed));
        assert_eq!(
            rudin_witness_check(&x, x.all(), &[a, s(&x, &["b"])]),
            Err(Error::NotFiltered)
        );
        assert_eq!(
            rudin_witness_check(&x, x.all(), &[s(&x, &["bot"])]),
            Err(Error::NotCompactSaturated)
        );
    }

    #[test]
    fn wd_refute_examples() {
        let x = p3();
        let w = wd_refute(&x, x.all(), 3).unwrap().unwrap();
        assert_eq!(w.map, vec!["a", "b", "bot"]);
        assert!(wd_refute(&x, s(&x, &["bot", "a"]), 3).unwrap().is_none());
        assert!(wd_refute(&one(), PointSet::singleton(0), 3).unwrap().is_none());
    }

    #[test]
    fn wd_finite_examples() {
        assert_eq!(wd_finite(&p3()).unwrap(), sc(&p3()));
        let y = a2();
        assert_eq!(wd_finite(&y).unwrap(), vec![s(&y, &["a"]), s(&y, &["b"])]);
        assert_eq!(wd_finite(&one()).unwrap(), vec![PointSet::singleton(0)]);
    }

    #[test]
    fn push_forward_examples() {
        let x = p3();
        let y = sierpinski();
        // points of P3 in canonical order: a, b, bot
        let collapse = [1, 1, 0];
        let r = push_forward_class_check(&collapse, &x, &y, s(&x, &["bot", "a"])).unwrap();
        assert!(r.in_rd_source && r.in_rd_target && r.preserved());
        let constant = [0, 0, 0];
        let r = push_forward_class_check(&constant, &x, &y, x.all()).unwrap();
        assert!(r.in_rd_target);
        assert_eq!(
            push_forward_class_check(&[0, 0, 1], &x, &y, x.all()),
            Err(Error::NotContinuous)
        );
    }

    #[test]
    fn directed_dense_examples() {
        let x = p3();
        assert_eq!(extract_directed_dense(&x, s(&x, &["bot", "a"])).unwrap(), s(&x, &["a"]));
        let y = a2();
        assert_eq!(extract_directed_dense(&y, s(&y, &["a"])).unwrap(), s(&y, &["a"]));
        let c = sierpinski();
        assert_eq!(extract_directed_dense(&c, c.all()).unwrap(), s(&c, &["1"]));
        assert_eq!(extract_directed_dense(&x, x.all()), Err(Error::NotIrreducibleClosed));
    }

    #[test]
    fn lc_rudin_family_examples() {
        let x = p3();
        let fam = build_lc_rudin_family(&x, s(&x, &["bot", "a"])).unwrap();
        assert_eq!(
            fam.members(),
            &canonical(vec![s(&x, &["a"]), s(&x, &["a", "b"]), x.all()])[..]
        );
        let o = one();
        assert_eq!(build_lc_rudin_family(&o, o.all()).unwrap().members(), &[o.all()]);
        let y = a2();
        assert_eq!(
            build_lc_rudin_family(&y, s(&y, &["a"])).unwrap().members(),
            &[s(&y, &["a"]), y.all()]
        );
    }

    #[test]
    fn singleton_image_examples() {
        let x = p3();
        let id = [0, 1, 2];
        assert_eq!(singleton_image_check(&id, &x, s(&x, &["bot", "a"]), &x).unwrap(), Some(0));
        assert_eq!(
            singleton_image_check(&[0, 0, 0], &x, s(&x, &["bot", "b"]), &one()).unwrap(),
            Some(0)
        );
        let y = sierpinski();
        assert_eq!(singleton_image_check(&[1, 1, 0], &x, s(&x, &["bot", "b"]), &y).unwrap(), Some(1));
        assert_eq!(singleton_image_check(&id, &x, x.all(), &x), Err(Error::NotRudinSet));
    }

    #[test]
    fn tower_collapses_on_small_spaces() {
        for x in [p3(), a2(), one(), sierpinski()] {
            let t = Tower::compute(&x).unwrap();
            assert!(t.is_nested());
            assert!(t.is_collapsed());
        }
    }
}
