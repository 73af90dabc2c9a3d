//! Exhaustive and randomized runs of the theorem catalog over finite posets.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classes::{rd, rd_least_member};
use crate::classify::{space_json, CheckCatalogResult};
use crate::error::{Error, Result};
use crate::order::{dedup_isomorphic, labeled_posets, random_poset, FinitePoset, LABELED_POSET_COUNTS};
use crate::powerspace::{eta, intersection_closure_check, point_saturations_homeomorphic, smyth_sober_iff_check, xi};
use crate::set::canonical;
use crate::space::FiniteSpace;
use crate::theorems::theorem_suite;

pub const MAX_SUITE_SIZE: usize = 6;
pub const EXHAUSTIVE_MAX: usize = 4;
pub const RANDOM_EDGE_PROB: f64 = 0.4;
/// Every nonempty subfamily of `K(X)` is tried up to this carrier size.
pub const FAMILY_CLOSURE_MAX: usize = 3;
pub const POWER_SPACE_MAX: usize = 4;
/// Exhaustive `rd` is compared with the least-member reduction up to this
/// size of `K(X)`.
pub const RD_ORACLE_MAX: usize = 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SizeCount {
    pub size: usize,
    pub labeled: usize,
    pub checked: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckTally {
    pub check_id: String,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub exhaustive: Vec<SizeCount>,
    pub random_samples: usize,
    pub random_sizes: BTreeMap<usize, usize>,
    pub instances: usize,
    pub checks: Vec<CheckTally>,
    pub failures: Vec<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All checks the suite runs on one space.
pub fn instance_checks(x: &FiniteSpace) -> Vec<CheckCatalogResult> {
    let n = x.len();
    let mut out = match theorem_suite(x) {
        Ok(r) => r,
        Err(e) => vec![fail_with("theorem-suite", x, &e.to_string())],
    };
    let mut push = |id: &str, r: Result<bool>| {
        out.push(match r {
            Ok(true) => CheckCatalogResult::new(id, None),
            Ok(false) => fail_with(id, x, "check returned false"),
            Err(e) => fail_with(id, x, &e.to_string()),
        })
    };
    if n <= FAMILY_CLOSURE_MAX {
        push("intersection-of-smyth-closure", family_closure_check(x));
    }
    if n <= POWER_SPACE_MAX {
        push("smyth-sober-iff-sober", smyth_sober_iff_check(x));
        push("point-saturations-embed", point_saturations_homeomorphic(x));
        push("eta-xi-embeddings", eta(x).and(xi(x)).map(|_| true));
    }
    if let Ok(k) = x.compact_saturated() {
        if k.len() <= RD_ORACLE_MAX {
            push("rd-double-oracle", rd(x, RD_ORACLE_MAX).and_then(|a| Ok(canonical(a) == rd_least_member(x)?)));
        }
    }
    out
}

fn fail_with(id: &str, x: &FiniteSpace, detail: &str) -> CheckCatalogResult {
    CheckCatalogResult::new(id, Some(json!({"space": space_json(x), "detail": detail})))
}

fn family_closure_check(x: &FiniteSpace) -> Result<bool> {
    let k = x.compact_saturated()?;
    crate::limits::check("compact-saturated family", k.len(), 16)?;
    for mask in 1u32..(1 << k.len()) {
        let fam: Vec<_> = (0..k.len()).filter(|i| mask >> i & 1 == 1).map(|i| k[i]).collect();
        if !intersection_closure_check(x, &fam)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_instances(max_size: usize, seed: u64, samples: usize) -> Vec<FinitePoset> {
    if max_size <= EXHAUSTIVE_MAX {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let n = rng.gen_range(EXHAUSTIVE_MAX + 1..=max_size);
            random_poset(&mut rng, n, RANDOM_EDGE_PROB)
        })
        .collect()
}

/// Exhaustive over labeled posets up to `min(max_size, 4)`, then `samples`
/// random posets of sizes 5 to `max_size` drawn from `seed`.
pub fn run_suite(max_size: usize, seed: u64, samples: usize, dedup: bool) -> Result<SuiteReport> {
    if max_size == 0 || max_size > MAX_SUITE_SIZE {
        return Err(Error::SizeLimit { what: "suite max size", size: max_size, limit: MAX_SUITE_SIZE });
    }
    let mut exhaustive = Vec::new();
    let mut posets = Vec::new();
    for n in 1..=max_size.min(EXHAUSTIVE_MAX) {
        let all = labeled_posets(n)?;
        if all.len() != LABELED_POSET_COUNTS[n] {
            return Err(Error::InvariantViolated(format!(
                "enumerated {} labeled posets of size {n}, expected {}",
                all.len(),
                LABELED_POSET_COUNTS[n]
            )));
        }
        let labeled = all.len();
        let kept = if dedup { dedup_isomorphic(all) } else { all };
        exhaustive.push(SizeCount { size: n, labeled, checked: kept.len() });
        posets.extend(kept);
    }
    let random = random_instances(max_size, seed, samples);
    let mut random_sizes = BTreeMap::new();
    for p in &random {
        *random_sizes.entry(p.len()).or_insert(0) += 1;
    }
    let random_samples = random.len();
    posets.extend(random);
    Ok(run_instances(&posets, exhaustive, random_samples, random_sizes))
}

/// The per-instance checks on a single space, in the suite report format.
pub fn run_single(x: &FiniteSpace) -> SuiteReport {
    let results = instance_checks(x);
    assemble(vec![results], Vec::new(), 0, BTreeMap::new())
}

fn run_instances(
    posets: &[FinitePoset],
    exhaustive: Vec<SizeCount>,
    random_samples: usize,
    random_sizes: BTreeMap<usize, usize>,
) -> SuiteReport {
    let results: Vec<Vec<CheckCatalogResult>> = posets
        .par_iter()
        .map(|p| match FiniteSpace::alexandroff(p) {
            Ok(x) => instance_checks(&x),
            Err(e) => vec![CheckCatalogResult::new("alexandroff", Some(json!(e.to_string())))],
        })
        .collect();
    assemble(results, exhaustive, random_samples, random_sizes)
}

fn assemble(
    results: Vec<Vec<CheckCatalogResult>>,
    exhaustive: Vec<SizeCount>,
    random_samples: usize,
    random_sizes: BTreeMap<usize, usize>,
) -> SuiteReport {
    let mut tallies: Vec<CheckTally> = Vec::new();
    let mut failures = Vec::new();
    for (i, rs) in results.iter().enumerate() {
        for r in rs {
            let t = match tallies.iter_mut().find(|t| t.check_id == r.check_id) {
                Some(t) => t,
                None => {
                    tallies.push(CheckTally { check_id: r.check_id.clone(), pass: 0, fail: 0 });
                    tallies.last_mut().unwrap()
                }
            };
            if r.passed() {
                t.pass += 1;
            } else {
                t.fail += 1;
                failures.push(json!({"instance": i, "check_id": r.check_id, "counterexample": r.counterexample}));
            }
        }
    }
    SuiteReport { exhaustive, random_samples, random_sizes, instances: results.len(), checks: tallies, failures }
}
