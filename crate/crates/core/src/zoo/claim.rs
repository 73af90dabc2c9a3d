//! Certificates for failure properties of zoo spaces, and their checker.
//!
//! Statements quantified over a family parameter `n` are checked on every
//! concrete `n` from `start` up to a bound past which all threshold
//! comparisons are stable, and once more on the eventual normal form in
//! which thresholds are affine in `n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::expr::{self, Ast};
use super::line::{Affine, Bound, Line};
use super::sets::{Carrier, Point, ZSet};
use super::{closure, compact_saturated, is_closed, is_open, leq, Decision, ZooSpaceId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub parameter: String,
    pub start: u64,
    pub member: String,
    pub sample_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceSpec {
    pub parameter: String,
    pub start: u64,
    pub point: String,
    pub sample_bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "witness", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Witness {
    NotWellFiltered { family: FamilySpec, open: String },
    NotStrongD { sequence: SequenceSpec, point: String, open: String },
    NotCoherent { k1: String, k2: String, cover: FamilySpec },
    NotSober { closed: String },
    RudinMember { closed: String, family: FamilySpec },
    IrrFragment { bound: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub space: ZooSpaceId,
    #[serde(flatten)]
    pub witness: Witness,
}

impl Claim {
    pub fn kind(&self) -> &'static str {
        match self.witness {
            Witness::NotWellFiltered { .. } => "NOT_WELL_FILTERED",
            Witness::NotStrongD { .. } => "NOT_STRONG_D",
            Witness::NotCoherent { .. } => "NOT_COHERENT",
            Witness::NotSober { .. } => "NOT_SOBER",
            Witness::RudinMember { .. } => "RUDIN_MEMBER",
            Witness::IrrFragment { .. } => "IRR_FRAGMENT",
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("claim: {e}")))
    }

    /// Pretty JSON with a trailing newline, the layout of the shipped files.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("claims serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Verified,
    Refuted(String),
    NotDecidable(String),
}

impl Verdict {
    pub fn is_verified(&self) -> bool {
        *self == Verdict::Verified
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Verified => write!(f, "VERIFIED"),
            Verdict::Refuted(r) => write!(f, "REFUTED: {r}"),
            Verdict::NotDecidable(r) => write!(f, "NOT_DECIDABLE: {r}"),
        }
    }
}

/// Early exit for a failed or undecided sub-check.
enum Stop {
    Verdict(Verdict),
    Error(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Error(e)
    }
}

type Check<T> = std::result::Result<T, Stop>;

fn refuted<T>(msg: impl Into<String>) -> Check<T> {
    Err(Stop::Verdict(Verdict::Refuted(msg.into())))
}

fn undecided<T>(msg: impl Into<String>) -> Check<T> {
    Err(Stop::Verdict(Verdict::NotDecidable(msg.into())))
}

fn require(ok: bool, msg: impl FnOnce() -> String) -> Check<()> {
    if ok {
        Ok(())
    } else {
        refuted(msg())
    }
}

fn decided(d: Decision, msg: impl FnOnce() -> String) -> Check<()> {
    match d {
        Decision::Yes => Ok(()),
        Decision::No => refuted(format!("fails: {}", msg())),
        Decision::Unknown => undecided(format!("cannot decide: {}", msg())),
    }
}

/// A parametrized family of sets with its concrete check range.
struct Family {
    ast: Ast,
    carrier: Carrier,
    start: u64,
    /// Eventual forms are exact from here on.
    stable: u64,
    /// Last concrete index checked; at least `stable`.
    hi: u64,
}

const EXTRA_STABILITY_SAMPLES: u64 = 8;

impl Family {
    fn new(ast: Ast, carrier: Carrier, start: u64, sample_bound: u64, also: &[&Ast]) -> Check<Self> {
        let mut asts = vec![&ast];
        asts.extend_from_slice(also);
        let stable = expr::stabilization_bound(&asts, &[]);
        let f = Family { carrier, start, stable, hi: stable.max(start + sample_bound), ast };
        f.check_stability()?;
        Ok(f)
    }

    fn from_spec(spec: &FamilySpec, carrier: Carrier, also: &[&Ast]) -> Check<Self> {
        let ast = expr::parse(&spec.member, Some(&spec.parameter))?;
        Self::new(ast, carrier, spec.start, spec.sample_bound, also)
    }

    fn at(&self, n: u64) -> Result<ZSet<u64>> {
        expr::eval(&self.ast, self.carrier, &n)
    }

    fn eventual(&self, shift: i64) -> Result<ZSet<Affine>> {
        expr::eval(&self.ast, self.carrier, &Affine { slope: 1, offset: shift })
    }

    fn concrete(&self) -> std::ops::RangeInclusive<u64> {
        self.start..=self.hi
    }

    /// The eventual form must reproduce concrete stages past `stable`.
    fn check_stability(&self) -> Check<()> {
        let ev = self.eventual(0)?;
        for n in self.stable.max(self.start)..self.stable.max(self.start) + EXTRA_STABILITY_SAMPLES {
            if ev.at(n).as_ref() != Some(&self.at(n)?) {
                return undecided(format!("eventual form {ev} does not match stage {n}"));
            }
        }
        Ok(())
    }

    fn check_decreasing(&self) -> Check<()> {
        for n in self.concrete() {
            if !self.at(n + 1)?.is_subset(&self.at(n)?) {
                return Err(Stop::Error(Error::NonMonotoneFamily(format!(
                    "member {} is not inside member {n}",
                    n + 1
                ))));
            }
        }
        if !self.eventual(1)?.is_subset(&self.eventual(0)?) {
            return Err(Stop::Error(Error::NonMonotoneFamily("eventually increasing".into())));
        }
        Ok(())
    }

    fn for_all(
        &self,
        what: &str,
        concrete: impl Fn(&ZSet<u64>) -> Decision,
        eventual: impl Fn(&ZSet<Affine>) -> Decision,
    ) -> Check<()> {
        for n in self.concrete() {
            let s = self.at(n)?;
            decided(concrete(&s), || format!("{what} at n = {n} ({s})"))?;
        }
        let ev = self.eventual(0)?;
        decided(eventual(&ev), || format!("{what} for large n ({ev})"))
    }

    fn check_compact_saturated(&self, id: ZooSpaceId) -> Check<()> {
        self.for_all(
            "member is compact saturated",
            |s| compact_saturated(id, s),
            |s| compact_saturated(id, s),
        )
    }
}

fn lift(s: &ZSet<u64>) -> ZSet<Affine> {
    s.map_lines(|l| l.map(|v| Affine::constant(*v)))
}

struct Ctx {
    id: ZooSpaceId,
    carrier: Carrier,
}

impl Ctx {
    fn set(&self, s: &str) -> Check<(Ast, ZSet<u64>)> {
        let ast = expr::parse(s, None)?;
        let set = expr::eval(&ast, self.carrier, &0u64)?;
        Ok((ast, set))
    }

    fn open(&self, s: &str) -> Check<(Ast, ZSet<u64>)> {
        let (ast, u) = self.set(s)?;
        require(is_open(self.id, &u), || format!("{u} is not open in {}", self.id))?;
        Ok((ast, u))
    }

    fn closed(&self, s: &str) -> Check<(Ast, ZSet<u64>)> {
        let (ast, a) = self.set(s)?;
        require(is_closed(self.id, &a), || format!("{a} is not closed in {}", self.id))?;
        Ok((ast, a))
    }

    /// Limit inside `U`, and no member inside `U`.
    fn escapes(&self, fam: &Family, u: &ZSet<u64>) -> Check<()> {
        let ev = fam.eventual(0)?;
        let limit = ev.limit();
        require(limit.is_subset(u), || format!("the intersection {limit} is not inside {u}"))?;
        let lu = lift(u);
        fam.for_all(
            &format!("member is not inside {u}"),
            |s| Decision::from(!s.is_subset(u)),
            |s| Decision::from(!s.is_subset(&lu)),
        )
    }

    fn not_well_filtered(&self, family: &FamilySpec, open: &str) -> Check<()> {
        let (u_ast, u) = self.open(open)?;
        let fam = Family::from_spec(family, self.carrier, &[&u_ast])?;
        fam.check_decreasing()?;
        fam.check_compact_saturated(self.id)?;
        self.escapes(&fam, &u)
    }

    fn not_strong_d(&self, seq: &SequenceSpec, point: &str, open: &str) -> Check<()> {
        let (u_ast, u) = self.open(open)?;
        let d = expr::parse_point(&seq.point, Some(&seq.parameter))?;
        let x = expr::parse_point(point, None)?;
        expr::eval_point(&x, self.carrier, &0u64)?;
        let ups = Family::new(Ast::Up(d.clone()), self.carrier, seq.start, seq.sample_bound, &[&u_ast])?;
        if let Err(Stop::Error(Error::NonMonotoneFamily(m))) = ups.check_decreasing() {
            return refuted(format!("the sequence {} is not increasing: {m}", seq.point));
        }
        let stages = Family::new(
            Ast::Inter(vec![Ast::Up(d), Ast::Up(x)]),
            self.carrier,
            seq.start,
            seq.sample_bound,
            &[&u_ast],
        )?;
        self.escapes(&stages, &u)
    }

    fn not_coherent(&self, k1: &str, k2: &str, cover: &FamilySpec) -> Check<()> {
        let (a1, k1) = self.set(k1)?;
        let (a2, k2) = self.set(k2)?;
        for k in [&k1, &k2] {
            decided(compact_saturated(self.id, k), || format!("{k} is compact saturated"))?;
        }
        let meet = k1.intersection(&k2);
        let fam = Family::from_spec(cover, self.carrier, &[&a1, &a2])?;
        let id = self.id;
        fam.for_all("cover member is open", |s| Decision::from(is_open(id, s)), |s| {
            Decision::from(is_open(id, s))
        })?;
        let head: Vec<ZSet<u64>> = (fam.start..fam.stable.max(fam.start))
            .map(|n| fam.at(n))
            .collect::<Result<_>>()?;
        let head_union = head.iter().fold(ZSet::empty(self.carrier), |acc, s| acc.union(s));
        let Some((tail_total, tail_prefix)) = sweep(&fam.eventual(0)?, fam.stable.max(fam.start)) else {
            return undecided("cover members must be constant or slide with slope 1");
        };
        let total = head_union.union(&tail_total);
        require(meet.is_subset(&total), || format!("the cover misses part of {meet}"))?;
        let mut prefix = ZSet::empty(self.carrier);
        for n in fam.concrete() {
            prefix = prefix.union(&fam.at(n)?);
            let rest = meet.difference(&prefix)?;
            require(!rest.is_empty(), || format!("members up to n = {n} already cover {meet}"))?;
            if n >= fam.stable {
                let sym = lift(&head_union).union(&tail_prefix);
                if sym.at(n).as_ref() != Some(&prefix) {
                    return undecided(format!("symbolic prefix union does not match at n = {n}"));
                }
            }
        }
        let sym_prefix = lift(&head_union).union(&tail_prefix);
        let residue = lift(&meet).difference(&sym_prefix)?;
        require(!residue.is_empty(), || "a finite prefix of the cover covers the intersection".into())
    }

    fn rudin_member(&self, closed: &str, family: &FamilySpec) -> Check<()> {
        let (a_ast, a) = self.closed(closed)?;
        let fam = Family::from_spec(family, self.carrier, &[&a_ast])?;
        fam.check_decreasing()?;
        fam.check_compact_saturated(self.id)?;
        let la = lift(&a);
        fam.for_all(
            &format!("{a} meets the member"),
            |s| Decision::from(!s.intersection(&a).is_empty()),
            |s| Decision::from(!s.intersection(&la).is_empty()),
        )?;
        let ZSet::Nat { items, co } = &a else {
            return undecided("minimality is decided only on the co-finite and co-countable fragments");
        };
        // A finite closed set meets every member of a decreasing family of
        // nonempty sets exactly when it meets the limit.
        let limit = fam.eventual(0)?.limit();
        if *co {
            let ZSet::Nat { items: l, co: lco } = &limit else { unreachable!() };
            if *lco || !l.is_empty() {
                return refuted(format!("a point of {limit} is a smaller closed set meeting every member"));
            }
            return Ok(());
        }
        let meets: Vec<u64> = items.points().filter(|p| limit.contains(&Point::Nat(*p))).collect();
        let singleton = items.len() == Some(1);
        match meets.first() {
            Some(p) if !singleton => refuted(format!("FIN({p}) is a smaller closed set meeting every member")),
            _ => Ok(()),
        }
    }

    fn not_sober(&self, closed: &str) -> Check<()> {
        let (_, a) = self.closed(closed)?;
        if a.is_all() {
            decided(all_irreducible(self.id), || format!("ALL is irreducible in {}", self.id))?;
            return self.all_is_no_point_closure();
        }
        match &a {
            ZSet::Nat { items, .. } => {
                require(items.len() == Some(1), || format!("{a} is reducible"))?;
                refuted(format!("{a} is the closure of its point"))
            }
            ZSet::Johnstone { columns, .. } => {
                require(columns.len() == 1, || format!("{a} splits along columns"))?;
                let (j, l) = columns.iter().next().unwrap();
                refuted(format!("{a} is the closure of ({j},{})", l.last().unwrap()))
            }
            ZSet::Ex334 { .. } => undecided("irreducibility of proper closed sets of this space"),
        }
    }

    /// Each point `p` has a point outside `cl{p} = ↓p`, given uniformly.
    fn all_is_no_point_closure(&self) -> Check<()> {
        let escape = |p: &Point<u64>| match p {
            Point::Nat(v) => Point::Nat(v + 1),
            Point::J(j, _) => Point::J(j + 1, Some(j + 1)),
            Point::A(_) | Point::W0 => Point::B,
            Point::B => Point::A(1),
            Point::W(n) => Point::W(n + 1),
        };
        for p in sample_points(self.carrier, 20) {
            let q = escape(&p);
            let in_closure = match self.carrier {
                Carrier::Nat => p == q,
                _ => leq(&q, &p),
            };
            require(!in_closure, || format!("{q} lies in the closure of {p}"))?;
        }
        Ok(())
    }

    fn irr_fragment(&self, bound: u64) -> Check<()> {
        if self.carrier != Carrier::Nat {
            return undecided("the fragment check covers the co-finite and co-countable spaces");
        }
        crate::limits::check("IRR_FRAGMENT bound", bound as usize, 16)?;
        decided(all_irreducible(self.id), || "ALL is irreducible".into())?;
        require(is_closed(self.id, &ZSet::<u64>::all(Carrier::Nat)), || "ALL is not closed".into())?;
        for mask in 1u64..(1 << bound) {
            let pts: Vec<u64> = (0..bound).filter(|i| mask >> i & 1 == 1).collect();
            let f = ZSet::nat(Line::from_intervals(pts.iter().map(|&p| (p, Some(p)))), false);
            require(is_closed(self.id, &f), || format!("{f} is not closed"))?;
            let first = ZSet::point(&Point::Nat(pts[0]));
            let rest = f.difference(&first)?;
            if pts.len() == 1 {
                // Two closed sets covering a singleton: one of them contains it.
                require(closure(self.id, &first)? == first, || format!("{f} is not a closed point"))?;
            } else {
                let split = is_closed(self.id, &first)
                    && is_closed(self.id, &rest)
                    && first.union(&rest) == f
                    && first != f
                    && rest != f;
                require(split, || format!("{f} does not split into two proper closed sets"))?;
            }
        }
        Ok(())
    }
}

fn sample_points(c: Carrier, n: u64) -> Vec<Point<u64>> {
    match c {
        Carrier::Nat => (0..n).map(Point::Nat).collect(),
        Carrier::Johnstone => (1..n)
            .flat_map(|j| (1..n).map(move |k| Point::J(j, Some(k))).chain([Point::J(j, None)]))
            .collect(),
        Carrier::Ex334 => (1..n)
            .flat_map(|i| [Point::A(i), Point::W(i)])
            .chain([Point::B, Point::W0])
            .collect(),
    }
}

/// Irreducibility of the whole space, by a rule per space.
pub fn all_irreducible(id: ZooSpaceId) -> Decision {
    match id {
        // Two nonempty co-finite (co-countable) subsets of an infinite
        // (uncountable) set meet.
        ZooSpaceId::CofiniteNat | ZooSpaceId::Cocountable => Decision::Yes,
        // A nonempty Scott open set holds some (m, k), hence OMEGATAIL(k);
        // two such tails meet.
        ZooSpaceId::JohnstoneScott => Decision::Yes,
        // No ↓F with F finite is everything, and basic open sets of the
        // upper topology are closed under finite intersection.
        ZooSpaceId::JohnstoneUpper | ZooSpaceId::Ex334Upper => Decision::Yes,
        ZooSpaceId::Ex334Scott => {
            let w = |n| ZSet::<u64>::point(&Point::W(n));
            let split = is_open(id, &w(1)) && is_open(id, &w(2)) && w(1).intersection(&w(2)).is_empty();
            Decision::from(!split)
        }
    }
}

/// Union over `n ≥ from` and, symbolically, over `from ≤ n ≤ N`, of an
/// eventual form whose intervals are constant or slide with slope 1.
fn sweep(ev: &ZSet<Affine>, from: u64) -> Option<(ZSet<u64>, ZSet<Affine>)> {
    if matches!(ev, ZSet::Nat { co: true, .. }) {
        return None;
    }
    let mut ok = true;
    let total = ev.map_lines(|l| {
        let mut out = Vec::new();
        for (lo, hi) in l.intervals() {
            match sweep_interval(lo, hi.as_ref(), from) {
                Some((t, _)) => out.push(t),
                None => ok = false,
            }
        }
        Line::from_intervals(out)
    });
    let prefix = ev.map_lines(|l| {
        Line::from_intervals(
            l.intervals()
                .iter()
                .filter_map(|(lo, hi)| sweep_interval(lo, hi.as_ref(), from).map(|(_, p)| p)),
        )
    });
    ok.then_some((total, prefix))
}

type Pieces = ((u64, Option<u64>), (Affine, Option<Affine>));

fn sweep_interval(lo: &Affine, hi: Option<&Affine>, from: u64) -> Option<Pieces> {
    let c = |v: u64| Affine::constant(v);
    match (lo.slope, hi.map(|h| h.slope)) {
        (0, Some(0)) | (0, None) => {
            let lo = lo.as_constant()?;
            let hi = hi.map(|h| h.as_constant()).unwrap_or(None);
            Some(((lo, hi), (c(lo), hi.map(c))))
        }
        (1, Some(1)) if hi.unwrap().offset >= lo.offset => {
            let start = lo.at(from)?;
            Some(((start, None), (c(start), hi.cloned())))
        }
        (1, None) => {
            let start = lo.at(from)?;
            Some(((start, None), (c(start), None)))
        }
        _ => None,
    }
}

pub fn verify_claim(claim: &Claim) -> Result<Verdict> {
    let cx = Ctx { id: claim.space, carrier: claim.space.carrier() };
    let r = match &claim.witness {
        Witness::NotWellFiltered { family, open } => cx.not_well_filtered(family, open),
        Witness::NotStrongD { sequence, point, open } => cx.not_strong_d(sequence, point, open),
        Witness::NotCoherent { k1, k2, cover } => cx.not_coherent(k1, k2, cover),
        Witness::NotSober { closed } => cx.not_sober(closed),
        Witness::RudinMember { closed, family } => cx.rudin_member(closed, family),
        Witness::IrrFragment { bound } => cx.irr_fragment(*bound),
    };
    match r {
        Ok(()) => Ok(Verdict::Verified),
        Err(Stop::Verdict(v)) => Ok(v),
        Err(Stop::Error(e)) => Err(e),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub claim: Claim,
    pub rule: String,
    pub topologies: Vec<String>,
}

const TRANSFER_RULE: &str = "the directed set, the point and the stages depend only on the order; \
U is open in the upper topology, hence in every topology between the upper and Alexandroff topologies";

pub fn strong_d_transfer(verified: &Claim, finer: ZooSpaceId) -> Result<Transfer> {
    let coarse = verified.space;
    let Witness::NotStrongD { open, .. } = &verified.witness else {
        return Err(Error::NotCoarser(format!("{} is not a NOT_STRONG_D claim", verified.kind())));
    };
    if !coarse.is_upper_topology() || finer.carrier() != coarse.carrier() || finer == coarse {
        return Err(Error::NotCoarser(format!("{coarse} is not the upper topology below {finer}")));
    }
    let u = coarse.parse(open)?;
    if !coarse.is_open(&u)? {
        return Err(Error::NotCoarser(format!("{u} is not open in {coarse}")));
    }
    let v = verify_claim(verified)?;
    if !v.is_verified() {
        return Err(Error::InvariantViolated(format!("transferred claim does not verify: {v}")));
    }
    Ok(Transfer {
        claim: Claim { space: finer, witness: verified.witness.clone() },
        rule: TRANSFER_RULE.to_string(),
        topologies: vec!["strong-scott".into(), "scott".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(member: &str, start: u64) -> FamilySpec {
        FamilySpec { parameter: "n".into(), start, member: member.into(), sample_bound: 20 }
    }

    fn strong_d(space: ZooSpaceId, d: &str, x: &str, open: &str) -> Claim {
        Claim {
            space,
            witness: Witness::NotStrongD {
                sequence: SequenceSpec { parameter: "n".into(), start: 1, point: d.into(), sample_bound: 20 },
                point: x.into(),
                open: open.into(),
            },
        }
    }

    #[test]
    fn cofinite_not_well_filtered() {
        let c = Claim {
            space: ZooSpaceId::CofiniteNat,
            witness: Witness::NotWellFiltered { family: fam("COFIN(0..n)", 0), open: "EMPTY".into() },
        };
        assert_eq!(verify_claim(&c).unwrap(), Verdict::Verified);
        let mut t = c.clone();
        if let Witness::NotWellFiltered { open, .. } = &mut t.witness {
            *open = "ALL".into();
        }
        assert!(matches!(verify_claim(&t).unwrap(), Verdict::Refuted(_)));
        let mut g = c.clone();
        if let Witness::NotWellFiltered { family, .. } = &mut g.witness {
            family.member = "FIN(0..n)".into();
        }
        assert!(matches!(verify_claim(&g), Err(Error::NonMonotoneFamily(_))));
    }

    #[test]
    fn johnstone_stage_witnesses() {
        let ok = strong_d(ZooSpaceId::JohnstoneUpper, "(1,n)", "(2,2)", "EMPTY");
        assert_eq!(verify_claim(&ok).unwrap(), Verdict::Verified);
        // (2,1) lies below (1,ω), which survives in every stage.
        let literal = strong_d(ZooSpaceId::JohnstoneUpper, "(1,n)", "(2,1)", "EMPTY");
        match verify_claim(&literal).unwrap() {
            Verdict::Refuted(r) => assert!(r.contains("PT(1,w)"), "{r}"),
            v => panic!("{v}"),
        }
        let t = strong_d_transfer(&ok, ZooSpaceId::JohnstoneScott).unwrap();
        assert_eq!(verify_claim(&t.claim).unwrap(), Verdict::Verified);
    }

    #[test]
    fn ex334_witnesses() {
        let sd = strong_d(ZooSpaceId::Ex334Upper, "a(n)", "b", "EMPTY");
        assert_eq!(verify_claim(&sd).unwrap(), Verdict::Verified);
        let t = strong_d_transfer(&sd, ZooSpaceId::Ex334Scott).unwrap();
        assert_eq!(verify_claim(&t.claim).unwrap(), Verdict::Verified);
        let coh = Claim {
            space: ZooSpaceId::Ex334Scott,
            witness: Witness::NotCoherent { k1: "UP(a(1))".into(), k2: "UP(b)".into(), cover: fam("W_PT(n)", 1) },
        };
        assert_eq!(verify_claim(&coh).unwrap(), Verdict::Verified);
        let mut bad = coh.clone();
        if let Witness::NotCoherent { cover, .. } = &mut bad.witness {
            cover.member = "WTAIL(n)".into();
        }
        assert!(matches!(verify_claim(&bad).unwrap(), Verdict::Refuted(_)));
    }

    #[test]
    fn transfer_guards() {
        let sd = strong_d(ZooSpaceId::Ex334Upper, "a(n)", "b", "W_PT(3)");
        assert!(matches!(strong_d_transfer(&sd, ZooSpaceId::Ex334Scott), Err(Error::NotCoarser(_))));
        let sd = strong_d(ZooSpaceId::Ex334Scott, "a(n)", "b", "EMPTY");
        assert!(matches!(strong_d_transfer(&sd, ZooSpaceId::Ex334Upper), Err(Error::NotCoarser(_))));
    }

    #[test]
    fn sobriety_and_rudin_claims() {
        let ns = |space, closed: &str| Claim { space, witness: Witness::NotSober { closed: closed.into() } };
        assert_eq!(verify_claim(&ns(ZooSpaceId::Cocountable, "ALL")).unwrap(), Verdict::Verified);
        assert_eq!(verify_claim(&ns(ZooSpaceId::JohnstoneScott, "ALL")).unwrap(), Verdict::Verified);
        assert!(matches!(verify_claim(&ns(ZooSpaceId::Ex334Scott, "ALL")).unwrap(), Verdict::Refuted(_)));
        assert!(matches!(verify_claim(&ns(ZooSpaceId::Cocountable, "FIN(4)")).unwrap(), Verdict::Refuted(_)));
        let rm = |closed: &str, member: &str| Claim {
            space: ZooSpaceId::CofiniteNat,
            witness: Witness::RudinMember { closed: closed.into(), family: fam(member, 0) },
        };
        assert_eq!(verify_claim(&rm("ALL", "COFIN(0..n)")).unwrap(), Verdict::Verified);
        assert!(matches!(verify_claim(&rm("ALL", "FIN(3)")).unwrap(), Verdict::Refuted(_)));
        assert_eq!(verify_claim(&rm("FIN(3)", "FIN(3)")).unwrap(), Verdict::Verified);
        assert!(matches!(verify_claim(&rm("FIN(3,4)", "FIN(3)")).unwrap(), Verdict::Refuted(_)));
        let irr = Claim { space: ZooSpaceId::CofiniteNat, witness: Witness::IrrFragment { bound: 8 } };
        assert_eq!(verify_claim(&irr).unwrap(), Verdict::Verified);
    }

    #[test]
    fn claim_json_round_trip() {
        let c = strong_d(ZooSpaceId::Ex334Upper, "a(n)", "b", "EMPTY");
        let s = c.to_json();
        assert_eq!(Claim::from_json(&s).unwrap(), c);
        assert_eq!(Claim::from_json(&s).unwrap().to_json(), s);
        assert!(s.starts_with("{\n  \"space\": \"EX334_UPPER\",\n  \"kind\": \"NOT_STRONG_D\""));
    }
}
