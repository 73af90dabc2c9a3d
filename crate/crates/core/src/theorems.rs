//! Catalog of theorem instances checked on a finite space.
//!
//! Each entry evaluates hypotheses and conclusions independently and fails
//! only when the hypotheses hold and the conclusion does not. The space
//! itself is part of every failure payload, so a failure can be replayed
//! with `ordtop classify`.

use serde_json::{json, Value};

use crate::classes::Tower;
use crate::classify::{
    down_meet, evaluate, sober_characterization_check, space_json, space_with, strong_d_witness,
    strongly_scott_opens, topologies, well_filtered_witness, wf_characterization_check, CheckCatalogResult,
    Evaluation, Topologies,
};
use crate::error::Result;
use crate::limits;
use crate::order::FinitePoset;
use crate::set::PointSet;
use crate::space::{is_continuous, union_closure, FiniteSpace};

struct Ctx<'a> {
    x: &'a FiniteSpace,
    p: &'a FinitePoset,
    eval: Evaluation,
    topo: Topologies,
    scott: FiniteSpace,
    upper: FiniteSpace,
    lawson: FiniteSpace,
    tower: Tower,
}

type Check = fn(&Ctx) -> Result<Option<Value>>;

const CATALOG: &[(&str, Check)] = &[
    ("d-space-conditions-agree", d_space_conditions_agree),
    ("strong-d-finite-set-variant-agrees", strong_d_variants_agree),
    ("property-implications", property_implications),
    ("set-class-tower", set_class_tower),
    ("finite-space-is-sober", finite_space_is_sober),
    ("closed-sets-have-maximal-points", closed_sets_have_maximal_points),
    ("well-filtered-implies-d-space", well_filtered_implies_d_space),
    ("retract-of-well-filtered-is-well-filtered", retract_of_well_filtered),
    ("locally-compact-well-filtered-is-sober", locally_compact_well_filtered_is_sober),
    ("semiclosed-order-down-of-compact-is-scott-closed", down_of_compact_is_scott_closed),
    ("down-of-intersection-decomposes", down_of_intersection_decomposes),
    ("weakly-upper-semicompact-lawson-gives-well-filtered-scott", weakly_upper_semicompact_gives_wf),
    ("upper-semicompact-lawson-gives-well-filtered-scott", upper_semicompact_gives_wf),
    ("t1-implies-strong-d", t1_implies_strong_d),
    ("coherent-well-filtered-implies-strong-d", coherent_well_filtered_implies_strong_d),
    ("strong-d-opens-are-strongly-scott-open", strong_d_opens_strongly_scott_open),
    ("sup-semilattice-strong-scott-equals-scott", sup_semilattice_strong_scott),
    ("upper-topology-strong-d-iff-closure-condition", upper_strong_d_iff),
    ("scott-strong-d-iff-closure-condition", scott_strong_d_iff),
    ("property-d-gives-upper-strong-d", property_d_gives_upper_strong_d),
    ("property-d-distributivity-chain", property_d_distributivity_chain),
    ("closure-condition-gives-strong-d", closure_condition_gives_strong_d),
    ("wd-conditions-give-well-filtered-strong-d", wd_conditions_give_wf_strong_d),
    ("rd-conditions-give-well-filtered-strong-d", rd_conditions_give_wf_strong_d),
    ("d-space-closure-condition-gives-well-filtered-strong-d", d_space_closure_gives_wf_strong_d),
    ("upper-semicompact-lawson-gives-strong-d-scott", upper_semicompact_gives_strong_d),
    ("locally-hypercompact-classes-collapse", locally_hypercompact_collapse),
];

/// Identifiers of the catalog entries, in order.
pub fn catalog_ids() -> Vec<&'static str> {
    CATALOG.iter().map(|(id, _)| *id).collect()
}

/// Run the catalog, then the well-filtered and sober characterizations.
pub fn theorem_suite(x: &FiniteSpace) -> Result<Vec<CheckCatalogResult>> {
    limits::check_carrier("theorem suite", x.len())?;
    let p = x.specialization();
    let topo = topologies(p)?;
    let ctx = Ctx {
        x,
        p,
        eval: evaluate(x)?,
        scott: space_with(p, &topo.scott)?,
        upper: space_with(p, &topo.upper)?,
        lawson: space_with(p, &topo.lawson)?,
        topo,
        tower: Tower::compute(x)?,
    };
    let mut out = Vec::with_capacity(CATALOG.len() + 12);
    for (id, check) in CATALOG {
        let failure = check(&ctx)?.map(|detail| json!({"space": space_json(x), "detail": detail}));
        out.push(CheckCatalogResult::new(id, failure));
    }
    out.extend(wf_characterization_check(x)?);
    out.extend(sober_characterization_check(x)?);
    Ok(out)
}

fn fail_if(cond: bool, detail: impl FnOnce() -> Value) -> Result<Option<Value>> {
    Ok(cond.then(detail))
}

fn sets(x: &FiniteSpace, family: &[PointSet]) -> Vec<Vec<String>> {
    family.iter().map(|&s| x.names(s)).collect()
}

fn d_space_conditions_agree(c: &Ctx) -> Result<Option<Value>> {
    let d = &c.eval.d_conditions;
    fail_if(!d.agree(), || json!({"conditions": d.values()}))
}

fn strong_d_variants_agree(c: &Ctx) -> Result<Option<Value>> {
    fail_if(!c.eval.strong_d_variants_agree, || json!("definition and finite-set variant differ"))
}

fn property_implications(c: &Ctx) -> Result<Option<Value>> {
    let r = &c.eval.report;
    fail_if(!r.implications_hold(), || json!({"report": r}))
}

fn set_class_tower(c: &Ctx) -> Result<Option<Value>> {
    let t = &c.tower;
    fail_if(!t.is_nested() || !t.is_collapsed(), || {
        json!({
            "sc": sets(c.x, &t.sc),
            "dc": sets(c.x, &t.dc),
            "rd": sets(c.x, &t.rd),
            "wd": sets(c.x, &t.wd),
            "irr": sets(c.x, &t.irr),
        })
    })
}

fn finite_space_is_sober(c: &Ctx) -> Result<Option<Value>> {
    fail_if(!c.eval.report.sober, || json!({"witness": c.eval.report.witnesses.get("sober")}))
}

fn closed_sets_have_maximal_points(c: &Ctx) -> Result<Option<Value>> {
    if !c.eval.report.d_space {
        return Ok(None);
    }
    for a in c.x.closed_sets().into_iter().filter(|a| !a.is_empty()) {
        if c.p.maximal_in(a)?.is_empty() {
            return Ok(Some(json!({"closed": c.x.names(a)})));
        }
    }
    Ok(None)
}

fn well_filtered_implies_d_space(c: &Ctx) -> Result<Option<Value>> {
    let r = &c.eval.report;
    fail_if(r.well_filtered && !r.d_space, || json!({"report": r}))
}

fn retract_of_well_filtered(c: &Ctx) -> Result<Option<Value>> {
    if !c.eval.report.well_filtered {
        return Ok(None);
    }
    let n = c.x.len();
    limits::check("retract search carrier", n, 7)?;
    let mut images = std::collections::BTreeSet::new();
    let mut f = vec![0usize; n];
    loop {
        let idempotent = (0..n).all(|i| f[f[i]] == f[i]);
        if idempotent && is_continuous(&f, c.x, c.x) {
            images.insert(FiniteSpace::image(&f, c.x.all()));
        }
        if !advance(&mut f, n) {
            break;
        }
    }
    for r in images {
        let sub = c.x.subspace(r)?;
        if let Some(w) = well_filtered_witness(&sub)? {
            return Ok(Some(json!({"retract": c.x.names(r), "witness": w})));
        }
    }
    Ok(None)
}

fn advance(f: &mut [usize], m: usize) -> bool {
    for v in f.iter_mut() {
        *v += 1;
        if *v < m {
            return true;
        }
        *v = 0;
    }
    false
}

fn locally_compact_well_filtered_is_sober(c: &Ctx) -> Result<Option<Value>> {
    let r = &c.eval.report;
    fail_if(r.locally_compact && r.well_filtered && !r.sober, || json!({"report": r}))
}

/// `↑x` closed in `(P, λ(P))` for every `x`.
fn lawson_upper_semiclosed(c: &Ctx) -> bool {
    (0..c.p.len()).all(|x| c.lawson.is_closed(c.p.up(x)))
}

fn down_of_compact_is_scott_closed(c: &Ctx) -> Result<Option<Value>> {
    if !lawson_upper_semiclosed(c) {
        return Ok(None);
    }
    for a in c.p.all().subsets() {
        if c.lawson.is_compact(a) && !c.scott.is_closed(c.p.down_set(a)) {
            return Ok(Some(json!({"compact": c.x.names(a)})));
        }
    }
    Ok(None)
}

fn down_of_intersection_decomposes(c: &Ctx) -> Result<Option<Value>> {
    if strong_d_or_d(&c.scott, false)? {
        let p = c.p;
        for a in c.x.closed_sets() {
            let hyp = (0..p.len()).all(|y| c.scott.is_closed(down_meet(p, p.up(y), a)));
            if !hyp {
                continue;
            }
            for k in c.scott.compact_saturated()? {
                let lhs = down_meet(p, a, k);
                let rhs = k
                    .iter()
                    .fold(PointSet::EMPTY, |acc, y| acc.union(down_meet(p, p.up(y), a)));
                if lhs != rhs || !c.scott.is_closed(lhs) {
                    return Ok(Some(json!({"closed": c.x.names(a), "k": c.x.names(k)})));
                }
            }
        }
    }
    Ok(None)
}

/// d-space (or strong d-space) flag of an auxiliary space.
fn strong_d_or_d(x: &FiniteSpace, strong: bool) -> Result<bool> {
    if strong {
        Ok(strong_d_witness(x)?.is_none())
    } else {
        Ok(evaluate(x)?.d_conditions.dcpo_and_scott_opens)
    }
}

fn weakly_upper_semicompact_gives_wf(c: &Ctx) -> Result<Option<Value>> {
    let irr = c.lawson.irr_c()?;
    let hyp = (0..c.p.len()).all(|x| irr.iter().all(|&a| c.lawson.is_compact(c.p.up(x).intersection(a))));
    if !hyp {
        return Ok(None);
    }
    Ok(well_filtered_witness(&c.scott)?.map(|w| json!({"scott_witness": w})))
}

fn upper_semicompact_gives_wf(c: &Ctx) -> Result<Option<Value>> {
    let hyp = (0..c.p.len()).all(|x| c.lawson.is_compact(c.p.up(x)));
    if !hyp {
        return Ok(None);
    }
    Ok(well_filtered_witness(&c.scott)?.map(|w| json!({"scott_witness": w})))
}

fn t1_implies_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let r = &c.eval.report;
    fail_if(r.t1 && !r.strong_d, || json!({"report": r}))
}

fn coherent_well_filtered_implies_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let r = &c.eval.report;
    fail_if(r.coherent && r.well_filtered && !r.strong_d, || json!({"report": r}))
}

fn sigma_s_family(c: &Ctx) -> Result<(Vec<PointSet>, Vec<PointSet>)> {
    let base = strongly_scott_opens(c.p)?;
    let generated = union_closure(base.iter().copied(), c.p.all())?;
    Ok((base, generated))
}

fn strong_d_opens_strongly_scott_open(c: &Ctx) -> Result<Option<Value>> {
    let r = &c.eval.report;
    let (_, sigma_s) = sigma_s_family(c)?;
    let opens_inside = c.x.opens().iter().all(|u| sigma_s.binary_search(u).is_ok());
    let second = r.d_space && opens_inside;
    if r.strong_d && !second {
        return Ok(Some(json!({"direction": "strong d gives d-space with strongly Scott opens"})));
    }
    let sup = c.p.lattice_flags()?.sup_semilattice;
    fail_if(sup && second && !r.strong_d, || json!({"direction": "converse on a sup semilattice"}))
}

fn sup_semilattice_strong_scott(c: &Ctx) -> Result<Option<Value>> {
    let (base, sigma_s) = sigma_s_family(c)?;
    if c.p.lattice_flags()?.sup_semilattice {
        if sigma_s != c.topo.scott {
            return Ok(Some(json!({"reason": "strong Scott topology differs from Scott"})));
        }
        if !strong_d_or_d(&c.scott, true)? {
            return Ok(Some(json!({"reason": "Scott space is not a strong d-space"})));
        }
    }
    if base == sigma_s {
        let strong_scott = space_with(c.p, &sigma_s)?;
        if !strong_d_or_d(&strong_scott, true)? {
            return Ok(Some(json!({"reason": "strong Scott space is not a strong d-space"})));
        }
    }
    Ok(None)
}

fn is_dcpo(p: &FinitePoset) -> Result<bool> {
    Ok(crate::classify::directed_subsets(p)?.into_iter().all(|d| p.sup(d).is_some()))
}

/// Nonempty lower sets, i.e. every `↓F` for nonempty finite `F`.
fn finite_down_sets(p: &FinitePoset) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = p.all().subsets().filter(|s| !s.is_empty()).map(|s| p.down_set(s)).collect();
    out.sort();
    out.dedup();
    out
}

fn upper_strong_d_iff(c: &Ctx) -> Result<Option<Value>> {
    let p = c.p;
    let lhs = strong_d_or_d(&c.upper, true)?;
    let downs = finite_down_sets(p);
    let mut rhs = is_dcpo(p)?;
    'outer: for (i, &f1) in downs.iter().enumerate() {
        for &f2 in &downs[i..] {
            let meet = f1.intersection(f2);
            for y in 0..p.len() {
                if !c.scott.is_closed(down_meet(p, p.up(y), meet)) {
                    rhs = false;
                    break 'outer;
                }
            }
        }
    }
    fail_if(lhs != rhs, || json!({"upper_strong_d": lhs, "closure_condition": rhs}))
}

fn scott_strong_d_iff(c: &Ctx) -> Result<Option<Value>> {
    let p = c.p;
    let lhs = strong_d_or_d(&c.scott, true)?;
    let rhs = is_dcpo(p)?
        && c.scott
            .closed_sets()
            .into_iter()
            .all(|a| (0..p.len()).all(|y| c.scott.is_closed(down_meet(p, p.up(y), a))));
    fail_if(lhs != rhs, || json!({"scott_strong_d": lhs, "closure_condition": rhs}))
}

fn property_d_gives_upper_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let has_d = c.p.property_d()?.holds;
    fail_if(has_d && !strong_d_or_d(&c.upper, true)?, || json!({"reason": "property D without upper strong d"}))
}

fn property_d_distributivity_chain(c: &Ctx) -> Result<Option<Value>> {
    let p = c.p;
    let first = p.property_d()?.holds;
    let downs = finite_down_sets(p);
    let mut second = true;
    let n = downs.len();
    'outer: for i in 0..n {
        for j in i..n {
            for k in j..n {
                for y in 0..p.len() {
                    let family = [downs[i], downs[j], downs[k]];
                    let parts: Vec<PointSet> = family.iter().map(|&f| p.up(y).intersection(f)).collect();
                    let lhs = p.down_set(parts.iter().fold(p.all(), |acc, &s| acc.intersection(s)));
                    let rhs = parts.iter().fold(p.all(), |acc, &s| acc.intersection(p.down_set(s)));
                    if lhs != rhs {
                        second = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let third = strong_d_or_d(&c.upper, false)?;
    if first && !second {
        return Ok(Some(json!({"step": "property D gives distributivity"})));
    }
    fail_if(second && !third, || json!({"step": "distributivity gives upper d-space"}))
}

/// `↓(↑x ∩ A)` closed for every point and closed set.
fn closure_condition(x: &FiniteSpace) -> bool {
    let p = x.specialization();
    x.closed_sets()
        .into_iter()
        .all(|a| (0..p.len()).all(|y| x.is_closed(down_meet(p, p.up(y), a))))
}

fn closure_condition_gives_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let r = &c.eval.report;
    fail_if(r.d_space && closure_condition(c.x) && !r.strong_d, || json!({"report": r}))
}

/// `↓(A ∩ K)` closed for every closed `A` and `K ∈ K(X)`.
fn pair_closure_condition(c: &Ctx) -> Result<bool> {
    let k = c.x.compact_saturated()?;
    Ok(c.x
        .closed_sets()
        .into_iter()
        .all(|a| k.iter().all(|&kk| c.x.is_closed(down_meet(c.p, a, kk)))))
}

fn max_nonempty(c: &Ctx, family: &[PointSet]) -> Result<bool> {
    for &b in family {
        if c.p.maximal_in(b)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn wf_and_strong_d(c: &Ctx) -> bool {
    c.eval.report.well_filtered && c.eval.report.strong_d
}

fn wd_conditions_give_wf_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let hyp = max_nonempty(c, &c.tower.wd)? && pair_closure_condition(c)?;
    fail_if(hyp && !wf_and_strong_d(c), || json!({"report": c.eval.report}))
}

fn rd_conditions_give_wf_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let hyp = max_nonempty(c, &c.tower.rd)? && pair_closure_condition(c)?;
    fail_if(hyp && !wf_and_strong_d(c), || json!({"report": c.eval.report}))
}

fn d_space_closure_gives_wf_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let hyp = c.eval.report.d_space && pair_closure_condition(c)?;
    fail_if(hyp && !wf_and_strong_d(c), || json!({"report": c.eval.report}))
}

fn upper_semicompact_gives_strong_d(c: &Ctx) -> Result<Option<Value>> {
    let hyp = (0..c.p.len()).all(|x| c.lawson.is_compact(c.p.up(x)));
    fail_if(hyp && !strong_d_or_d(&c.scott, true)?, || json!({"reason": "Scott space is not a strong d-space"}))
}

fn locally_hypercompact_collapse(c: &Ctx) -> Result<Option<Value>> {
    let t = &c.tower;
    let collapsed = t.irr == t.wd && t.wd == t.rd && t.rd == t.dc;
    fail_if(c.eval.report.locally_hypercompact && !collapsed, || json!({"reason": "classes differ"}))
}
