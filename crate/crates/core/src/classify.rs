//! Property decisions for finite spaces and the order-derived topologies.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::classes::{filtered_subfamilies, rd_auto, sc, wd_finite};
use crate::error::{Error, Result};
use crate::limits::{self, DEFAULT_FAMILY_LIMIT};
use crate::order::FinitePoset;
use crate::set::{canonical, PointSet};
use crate::space::{generate_topology, upper_sets, FiniteSpace};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub t1: bool,
    pub d_space: bool,
    pub strong_d: bool,
    pub well_filtered: bool,
    pub sober: bool,
    pub coherent: bool,
    pub locally_compact: bool,
    pub locally_hypercompact: bool,
    /// One entry per false flag.
    pub witnesses: BTreeMap<String, Value>,
}

impl PropertyReport {
    /// The arrows between computed flags: T₁ ⇒ strong d, sober ⇒
    /// well-filtered ⇒ d-space, strong d ⇒ d-space.
    pub fn implications_hold(&self) -> bool {
        (!self.t1 || self.strong_d)
            && (!self.sober || self.well_filtered)
            && (!self.well_filtered || self.d_space)
            && (!self.strong_d || self.d_space)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckCatalogResult {
    pub check_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckCatalogResult {
    pub fn new(check_id: &str, failure: Option<Value>) -> Self {
        CheckCatalogResult {
            check_id: check_id.to_string(),
            status: if failure.is_some() { Status::Fail } else { Status::Pass },
            counterexample: failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Replayable description of a space, in the CLI descriptor format.
pub fn space_json(x: &FiniteSpace) -> Value {
    json!({
        "kind": "finite-space",
        "carrier": x.points(),
        "opens": x.opens().iter().map(|&u| x.names(u)).collect::<Vec<_>>(),
    })
}

/// Nonempty subsets of `p` that are directed.
pub fn directed_subsets(p: &FinitePoset) -> Result<Vec<PointSet>> {
    limits::check_carrier("directed-subset search", p.len())?;
    let mut out: Vec<PointSet> = p.all().subsets().filter(|d| p.is_directed(*d)).collect();
    out.sort();
    Ok(out)
}

/// `⋂_{d∈D} ↑d`.
pub fn meet_of_ups(p: &FinitePoset, d: PointSet) -> PointSet {
    d.iter().fold(p.all(), |acc, i| acc.intersection(p.up(i)))
}

/// The five equivalent d-space conditions, each evaluated on its own.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DSpaceConditions {
    pub dcpo_and_scott_opens: bool,
    pub dc_equals_sc: bool,
    pub directed_meets_open: bool,
    pub closed_contains_meet: bool,
    pub closure_meets_meet: bool,
    pub witness: Option<Value>,
}

impl DSpaceConditions {
    pub fn values(&self) -> [bool; 5] {
        [
            self.dcpo_and_scott_opens,
            self.dc_equals_sc,
            self.directed_meets_open,
            self.closed_contains_meet,
            self.closure_meets_meet,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }
}

pub fn d_space_conditions(x: &FiniteSpace) -> Result<DSpaceConditions> {
    let p = x.specialization();
    let directed = directed_subsets(p)?;
    let closed = x.closed_sets();
    let names = |s: PointSet| x.names(s);
    let mut witness = None;

    let mut c1 = true;
    for &d in &directed {
        match p.sup(d) {
            None => {
                c1 = false;
                witness.get_or_insert(json!({"directed": names(d), "reason": "no supremum"}));
            }
            Some(s) => {
                if let Some(&u) = x.opens().iter().find(|u| u.contains(s) && !u.meets(d)) {
                    c1 = false;
                    witness.get_or_insert(json!({"directed": names(d), "open": names(u)}));
                }
            }
        }
    }

    let mut dc = Vec::new();
    for &d in &directed {
        dc.push(x.closure(d)?);
    }
    let c2 = canonical(dc) == sc(x);

    let c3 = directed.iter().all(|&d| {
        let m = meet_of_ups(p, d);
        x.opens()
            .iter()
            .all(|&u| !m.is_subset(u) || d.iter().any(|e| p.up(e).is_subset(u)))
    });
    let c4 = directed.iter().all(|&d| {
        let m = meet_of_ups(p, d);
        closed.iter().all(|&a| !d.is_subset(a) || a.meets(m))
    });
    let mut c5 = true;
    for &d in &directed {
        if !x.closure(d)?.meets(meet_of_ups(p, d)) {
            c5 = false;
        }
    }
    Ok(DSpaceConditions {
        dcpo_and_scott_opens: c1,
        dc_equals_sc: c2,
        directed_meets_open: c3,
        closed_contains_meet: c4,
        closure_meets_meet: c5,
        witness,
    })
}

/// Strong d-space by the definition, over all directed `D`, points `x` and
/// opens `U`. Returns a failing triple.
pub fn strong_d_witness(x: &FiniteSpace) -> Result<Option<Value>> {
    let p = x.specialization();
    for d in directed_subsets(p)? {
        let m = meet_of_ups(p, d);
        for y in 0..x.len() {
            let lhs = m.intersection(p.up(y));
            for &u in x.opens() {
                if lhs.is_subset(u) && !d.iter().any(|e| p.up(e).intersection(p.up(y)).is_subset(u)) {
                    return Ok(Some(json!({
                        "directed": x.names(d),
                        "point": p.name(y),
                        "open": x.names(u),
                    })));
                }
            }
        }
    }
    Ok(None)
}

/// The same condition with `↑x` replaced by every `↑F` for finite `F`.
pub fn strong_d_finite_sets(x: &FiniteSpace) -> Result<bool> {
    let p = x.specialization();
    let fins: Vec<PointSet> = x.opens().iter().copied().filter(|u| !u.is_empty()).collect();
    for d in directed_subsets(p)? {
        let m = meet_of_ups(p, d);
        for &f in &fins {
            for &u in x.opens() {
                if m.intersection(f).is_subset(u) && !d.iter().any(|e| p.up(e).intersection(f).is_subset(u)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_strong_d(x: &FiniteSpace) -> Result<bool> {
    let definitional = strong_d_witness(x)?.is_none();
    if definitional != strong_d_finite_sets(x)? {
        return Err(Error::InvariantViolated(
            "strong d-space definition and finite-set variant disagree".into(),
        ));
    }
    Ok(definitional)
}

/// Well-filteredness: every filtered `𝒦 ⊆ K(X)` with `⋂𝒦 ⊆ U` has a member
/// inside `U`. Exhaustive over subfamilies while `K(X)` is within the family
/// limit; above it, a finite filtered family always contains its
/// intersection as least member, so the implication holds with that member.
pub fn well_filtered_witness(x: &FiniteSpace) -> Result<Option<Value>> {
    let k = x.compact_saturated()?;
    if k.len() > DEFAULT_FAMILY_LIMIT {
        return Ok(None);
    }
    for mask in filtered_subfamilies(&k) {
        let members: Vec<PointSet> = PointSet::from_bits(mask).iter().map(|i| k[i]).collect();
        let meet = members.iter().fold(x.all(), |acc, &m| acc.intersection(m));
        for &u in x.opens() {
            if meet.is_subset(u) && !members.iter().any(|m| m.is_subset(u)) {
                return Ok(Some(json!({
                    "family": members.iter().map(|&m| x.names(m)).collect::<Vec<_>>(),
                    "open": x.names(u),
                })));
            }
        }
    }
    Ok(None)
}

/// The flags together with the cross-checks `classify` asserts.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub report: PropertyReport,
    pub d_conditions: DSpaceConditions,
    pub strong_d_variants_agree: bool,
}

/// Decide every flag, with definitional checks and their cross-checks.
pub fn classify(x: &FiniteSpace) -> Result<PropertyReport> {
    let e = evaluate(x)?;
    if !e.d_conditions.agree() {
        return Err(Error::InvariantViolated(format!(
            "d-space conditions disagree: {:?}",
            e.d_conditions.values()
        )));
    }
    if !e.strong_d_variants_agree {
        return Err(Error::InvariantViolated(
            "strong d-space definition and finite-set variant disagree".into(),
        ));
    }
    if !e.report.implications_hold() {
        return Err(Error::InvariantViolated(format!("property implications fail: {:?}", e.report)));
    }
    Ok(e.report)
}

/// `classify` without the assertions, for callers that report
/// disagreements instead of failing on them.
pub fn evaluate(x: &FiniteSpace) -> Result<Evaluation> {
    limits::check_carrier("classified space", x.len())?;
    let p = x.specialization();
    let mut witnesses = BTreeMap::new();

    let t1_fail = (0..x.len()).find(|&y| x.point_closure(y).len() > 1);
    if let Some(y) = t1_fail {
        witnesses.insert("t1".into(), json!({"point": p.name(y), "closure": x.names(x.point_closure(y))}));
    }

    let d = d_space_conditions(x)?;
    if let Some(w) = &d.witness {
        witnesses.insert("d_space".into(), w.clone());
    }

    let strong = strong_d_witness(x)?;
    let strong_d_variants_agree = strong.is_none() == strong_d_finite_sets(x)?;
    if let Some(w) = &strong {
        witnesses.insert("strong_d".into(), w.clone());
    }

    let wf = well_filtered_witness(x)?;
    if let Some(w) = &wf {
        witnesses.insert("well_filtered".into(), w.clone());
    }

    let points = sc(x);
    let bad_irr = x.irr_c()?.into_iter().find(|a| points.binary_search(a).is_err());
    if let Some(a) = bad_irr {
        witnesses.insert("sober".into(), json!({"irreducible_closed": x.names(a)}));
    }

    let k = x.compact_saturated()?;
    let mut coherent = true;
    'pairs: for &k1 in &k {
        for &k2 in &k {
            if !x.is_compact(k1.intersection(k2)) {
                witnesses.insert("coherent".into(), json!({"k1": x.names(k1), "k2": x.names(k2)}));
                coherent = false;
                break 'pairs;
            }
        }
    }

    let lc = local_compactness_witness(x, &k)?;
    if let Some(w) = &lc {
        witnesses.insert("locally_compact".into(), w.clone());
    }
    let lhc = local_hypercompactness_witness(x)?;
    if let Some(w) = &lhc {
        witnesses.insert("locally_hypercompact".into(), w.clone());
    }

    let report = PropertyReport {
        t1: t1_fail.is_none(),
        d_space: d.dcpo_and_scott_opens,
        strong_d: strong.is_none(),
        well_filtered: wf.is_none(),
        sober: bad_irr.is_none(),
        coherent,
        locally_compact: lc.is_none(),
        locally_hypercompact: lhc.is_none(),
        witnesses,
    };
    Ok(Evaluation {
        report,
        d_conditions: d,
        strong_d_variants_agree,
    })
}

/// A point and open neighbourhood with no compact saturated `K` such that
/// `x ∈ int K ⊆ K ⊆ U`.
fn local_compactness_witness(x: &FiniteSpace, k: &[PointSet]) -> Result<Option<Value>> {
    for y in 0..x.len() {
        for &u in x.opens().iter().filter(|u| u.contains(y)) {
            let mut found = false;
            for &c in k.iter().filter(|c| c.is_subset(u)) {
                if x.interior(c)?.contains(y) {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(Some(json!({"point": x.points()[y], "open": x.names(u)})));
            }
        }
    }
    Ok(None)
}

/// As above with `↑F` for finite `F ⊆ U` in place of `K`.
fn local_hypercompactness_witness(x: &FiniteSpace) -> Result<Option<Value>> {
    let p = x.specialization();
    for y in 0..x.len() {
        for &u in x.opens().iter().filter(|u| u.contains(y)) {
            let mut candidates: Vec<PointSet> = u.subsets().filter(|f| !f.is_empty()).collect();
            candidates.sort();
            let mut found = false;
            for f in candidates {
                let up = p.up_set(f);
                if up.is_subset(u) && x.interior(up)?.contains(y) {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(Some(json!({"point": x.points()[y], "open": x.names(u)})));
            }
        }
    }
    Ok(None)
}

/// `↓(a ∩ k)`.
pub(crate) fn down_meet(p: &FinitePoset, a: PointSet, k: PointSet) -> PointSet {
    p.down_set(a.intersection(k))
}

/// Filter in `(family, ⊆)`: nonempty, upward closed within `family`, and
/// downward directed.
pub fn is_filter_in(members: &[PointSet], family: &[PointSet]) -> bool {
    !members.is_empty()
        && members
            .iter()
            .all(|&m| family.iter().all(|&f| !m.is_subset(f) || members.contains(&f)))
        && members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| members.iter().any(|c| c.is_subset(a.intersection(b))))
        })
}

/// `Ψ(A) = {K ∈ family : K ∩ A ≠ ∅}`.
pub fn psi(family: &[PointSet], a: PointSet) -> Vec<PointSet> {
    family.iter().copied().filter(|k| k.meets(a)).collect()
}

/// Evaluate `max(A) ≠ ∅ and ↓(A ∩ K) closed` over `classes × ks`.
fn pair_condition(x: &FiniteSpace, classes: &[PointSet], ks: &[PointSet], with_max: bool) -> Option<Value> {
    let p = x.specialization();
    for &a in classes {
        if with_max && p.maximal_in(a).map(|m| m.is_empty()).unwrap_or(true) {
            return Some(json!({"set": x.names(a), "reason": "no maximal point"}));
        }
        for &k in ks {
            if !x.is_closed(down_meet(p, a, k)) {
                return Some(json!({"set": x.names(a), "k": x.names(k), "reason": "down-set not closed"}));
            }
        }
    }
    None
}

/// Every upper set of the specialization order, empty set included.
pub fn up_family(x: &FiniteSpace) -> Result<Vec<PointSet>> {
    upper_sets(x.specialization())
}

fn compare(check_id: &str, x: &FiniteSpace, expected: bool, failure: Option<Value>) -> CheckCatalogResult {
    let condition = failure.is_none();
    CheckCatalogResult::new(
        check_id,
        (condition != expected).then(|| {
            json!({
                "space": space_json(x),
                "expected": expected,
                "condition": condition,
                "detail": failure,
            })
        }),
    )
}

/// Well-filteredness against the pair conditions over `WD`/`RD` crossed
/// with `up(X)`/`K(X)`, plus the variants without the max clause when `X`
/// is a d-space.
pub fn wf_characterization_check(x: &FiniteSpace) -> Result<Vec<CheckCatalogResult>> {
    let report = classify(x)?;
    let wd = wd_finite(x)?;
    let rd = rd_auto(x)?;
    let up = up_family(x)?;
    let k = x.compact_saturated()?;
    let mut out = Vec::new();
    for (id, classes, ks) in [
        ("well-filtered-iff-wd-up-pairs", &wd, &up),
        ("well-filtered-iff-rd-up-pairs", &rd, &up),
        ("well-filtered-iff-wd-k-pairs", &wd, &k),
        ("well-filtered-iff-rd-k-pairs", &rd, &k),
    ] {
        out.push(compare(id, x, report.well_filtered, pair_condition(x, classes, ks, true)));
        if report.d_space {
            let id = format!("d-space-{id}-without-max");
            out.push(compare(&id, x, report.well_filtered, pair_condition(x, classes, ks, false)));
        }
    }
    Ok(out)
}

/// Sobriety against the `Ψ`-filter conditions over `up(X)` and `K(X)`.
pub fn sober_characterization_check(x: &FiniteSpace) -> Result<Vec<CheckCatalogResult>> {
    let report = classify(x)?;
    let irr = x.irr_c()?;
    let up = up_family(x)?;
    let k = x.compact_saturated()?;
    let mut out = Vec::new();
    for (id, ks) in [("sober-iff-psi-up-filters", &up), ("sober-iff-psi-k-filters", &k)] {
        let psi_failure = irr.iter().find_map(|&a| {
            let members = psi(ks, a);
            (!is_filter_in(&members, ks)).then(|| json!({"set": x.names(a), "reason": "psi is not a filter"}))
        });
        let with_max = psi_failure.clone().or_else(|| pair_condition(x, &irr, ks, true));
        out.push(compare(id, x, report.sober, with_max));
        if report.d_space {
            let without_max = psi_failure.or_else(|| pair_condition(x, &irr, ks, false));
            out.push(compare(&format!("d-space-{id}-without-max"), x, report.sober, without_max));
        }
    }
    Ok(out)
}

/// Strongly Scott open: an upper set satisfying the strong inaccessibility
/// condition for every directed `D` and point `x`.
pub fn strongly_scott_open(p: &FinitePoset, u: PointSet) -> Result<bool> {
    p.check_subset(u)?;
    if !p.is_upper(u) {
        return Err(Error::NotUpperSet);
    }
    for d in directed_subsets(p)? {
        let m = meet_of_ups(p, d);
        for y in 0..p.len() {
            if m.intersection(p.up(y)).is_subset(u) && !d.iter().any(|e| p.up(e).intersection(p.up(y)).is_subset(u)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `σ^s(P)`: all strongly Scott open sets.
pub fn strongly_scott_opens(p: &FinitePoset) -> Result<Vec<PointSet>> {
    let mut out = Vec::new();
    for u in upper_sets(p)? {
        if strongly_scott_open(p, u)? {
            out.push(u);
        }
    }
    Ok(out)
}

/// The strong Scott topology, generated by `σ^s(P)` as a base. Checked to
/// sit between the upper and Scott topologies.
pub fn sigma_s(p: &FinitePoset) -> Result<Vec<PointSet>> {
    let base = strongly_scott_opens(p)?;
    let all = p.all();
    let family = crate::space::union_closure(base, all)?;
    let t = topologies(p)?;
    let within = |a: &[PointSet], b: &[PointSet]| a.iter().all(|s| b.binary_search(s).is_ok());
    if !within(&t.upper, &family) || !within(&family, &t.scott) {
        return Err(Error::InvariantViolated("strong Scott topology is not between upper and Scott".into()));
    }
    if family != t.alexandroff {
        return Err(Error::InvariantViolated("strong Scott topology differs from the upper sets".into()));
    }
    Ok(family)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topologies {
    pub upper: Vec<PointSet>,
    pub scott: Vec<PointSet>,
    pub lower: Vec<PointSet>,
    pub lawson: Vec<PointSet>,
    pub alexandroff: Vec<PointSet>,
}

/// The five order topologies, each from its own definition.
pub fn topologies(p: &FinitePoset) -> Result<Topologies> {
    limits::check_carrier("order topologies", p.len())?;
    let all = p.all();
    let n = p.len();
    let upper = generate_topology((0..n).map(|x| p.down(x).complement(n)), all)?;
    let lower = generate_topology((0..n).map(|x| p.up(x).complement(n)), all)?;
    let directed = directed_subsets(p)?;
    let alexandroff = upper_sets(p)?;
    let scott: Vec<PointSet> = alexandroff
        .iter()
        .copied()
        .filter(|&u| {
            directed
                .iter()
                .all(|&d| p.sup(d).is_none_or(|s| !u.contains(s) || u.meets(d)))
        })
        .collect();
    let lawson = generate_topology(scott.iter().chain(lower.iter()).copied(), all)?;
    if upper != scott || scott != alexandroff {
        return Err(Error::InvariantViolated("upper, Scott and Alexandroff topologies differ".into()));
    }
    if lawson.len() != 1usize << n {
        return Err(Error::InvariantViolated("Lawson topology is not discrete".into()));
    }
    Ok(Topologies {
        upper,
        scott,
        lower,
        lawson,
        alexandroff,
    })
}

/// A space on the carrier of `p` with the given open family.
pub fn space_with(p: &FinitePoset, opens: &[PointSet]) -> Result<FiniteSpace> {
    FiniteSpace::from_opens(p.elements().to_vec(), opens.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> FiniteSpace {
        FiniteSpace::alexandroff(&FinitePoset::new(["bot", "a", "b"], [("bot", "a"), ("bot", "b")]).unwrap()).unwrap()
    }

    fn m4() -> FinitePoset {
        FinitePoset::new(
            ["a", "b", "c", "d"],
            [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap()
    }

    #[test]
    fn classify_examples() {
        let r = classify(&p3()).unwrap();
        assert!(!r.t1);
        assert!(r.d_space && r.strong_d && r.well_filtered && r.sober && r.coherent);
        assert!(r.locally_compact && r.locally_hypercompact);
        assert_eq!(r.witnesses.keys().collect::<Vec<_>>(), vec!["t1"]);

        let discrete = FiniteSpace::alexandroff(&FinitePoset::antichain(&["a", "b"]).unwrap()).unwrap();
        let r = classify(&discrete).unwrap();
        assert!(r.t1 && r.d_space && r.strong_d && r.well_filtered && r.sober && r.coherent);
        assert!(r.witnesses.is_empty());

        let s = FiniteSpace::alexandroff(&FinitePoset::chain(2)).unwrap();
        let r = classify(&s).unwrap();
        assert!(!r.t1 && r.sober && r.strong_d);
    }

    #[test]
    fn characterizations_on_p3() {
        let x = p3();
        let wf = wf_characterization_check(&x).unwrap();
        assert_eq!(wf.len(), 8);
        assert!(wf.iter().all(|c| c.passed()));
        let sober = sober_characterization_check(&x).unwrap();
        assert!(sober.iter().all(|c| c.passed()));
        let p = x.specialization();
        let a = p.down(p.index("a").unwrap());
        let k = p.set(["a", "b"]).unwrap();
        assert_eq!(down_meet(p, a, k), a);
        let members = psi(&x.compact_saturated().unwrap(), a);
        assert_eq!(members, canonical(vec![p.set(["a"]).unwrap(), k, x.all()]));
        assert!(is_filter_in(&members, &x.compact_saturated().unwrap()));
    }

    #[test]
    fn psi_examples() {
        let y = FiniteSpace::alexandroff(&FinitePoset::antichain(&["a", "b"]).unwrap()).unwrap();
        let a = y.set(["a"]).unwrap();
        assert_eq!(psi(&y.compact_saturated().unwrap(), a), vec![a, y.all()]);
        let one = FiniteSpace::alexandroff(&FinitePoset::chain(1)).unwrap();
        let k = one.compact_saturated().unwrap();
        assert_eq!(psi(&k, one.all()), k);
    }

    #[test]
    fn strongly_scott_examples() {
        let p = m4();
        assert!(strongly_scott_open(&p, p.set(["c", "d"]).unwrap()).unwrap());
        assert!(strongly_scott_open(&p, PointSet::EMPTY).unwrap());
        assert_eq!(strongly_scott_open(&p, p.set(["a"]).unwrap()), Err(Error::NotUpperSet));
        let p3 = p3();
        assert_eq!(sigma_s(p3.specialization()).unwrap(), upper_sets(p3.specialization()).unwrap());
    }

    #[test]
    fn topology_examples() {
        let c2 = FinitePoset::chain(2);
        let t = topologies(&c2).unwrap();
        assert_eq!(t.lawson.len(), 4);
        let p = p3();
        assert_eq!(topologies(p.specialization()).unwrap().scott, upper_sets(p.specialization()).unwrap());
        let one = topologies(&FinitePoset::chain(1)).unwrap();
        for fam in [&one.upper, &one.scott, &one.lower, &one.lawson, &one.alexandroff] {
            assert_eq!(fam, &vec![PointSet::EMPTY, PointSet::singleton(0)]);
        }
    }

    #[test]
    fn d_space_conditions_agree_on_examples() {
        let c = d_space_conditions(&p3()).unwrap();
        assert!(c.agree() && c.values()[0]);
        assert!(is_strong_d(&p3()).unwrap());
    }
}
