//! Exact set algebra on four infinite counterexample spaces, with a
//! checker for certificates of their failure properties.

pub mod claim;
pub mod curated;
pub mod expr;
pub mod line;
pub mod sets;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use line::{Bound, Line};
pub use claim::{verify_claim, strong_d_transfer, Claim, FamilySpec, SequenceSpec, Transfer, Verdict, Witness};
pub use curated::{curated_results, CuratedEntry, Status};
pub use sets::{Carrier, Point, ZSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ZooSpaceId {
    /// ℕ with the co-finite topology.
    CofiniteNat,
    /// An uncountable set with the co-countable topology.
    Cocountable,
    /// Johnstone's dcpo with the Scott topology.
    JohnstoneScott,
    /// Johnstone's dcpo with the upper topology.
    JohnstoneUpper,
    /// `{a_n} ∪ {ω_0} ∪ {b} ∪ {ω_n}` with the Scott topology.
    Ex334Scott,
    Ex334Upper,
}

impl fmt::Display for ZooSpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).unwrap();
        write!(f, "{}", s.as_str().unwrap())
    }
}

impl std::str::FromStr for ZooSpaceId {
    type Err = Error;

    /// Accepts `JOHNSTONE_SCOTT` as well as `johnstone-scott`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        serde_json::from_value(serde_json::Value::String(norm))
            .map_err(|_| Error::Parse(format!("unknown zoo space {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

/// A normalized set of a zoo space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetExpr {
    pub space: ZooSpaceId,
    pub set: ZSet<u64>,
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.set)
    }
}

impl ZooSpaceId {
    pub const ALL: [ZooSpaceId; 6] = [
        ZooSpaceId::CofiniteNat,
        ZooSpaceId::Cocountable,
        ZooSpaceId::JohnstoneScott,
        ZooSpaceId::JohnstoneUpper,
        ZooSpaceId::Ex334Scott,
        ZooSpaceId::Ex334Upper,
    ];

    pub fn carrier(self) -> Carrier {
        match self {
            ZooSpaceId::CofiniteNat | ZooSpaceId::Cocountable => Carrier::Nat,
            ZooSpaceId::JohnstoneScott | ZooSpaceId::JohnstoneUpper => Carrier::Johnstone,
            ZooSpaceId::Ex334Scott | ZooSpaceId::Ex334Upper => Carrier::Ex334,
        }
    }

    /// The Scott and upper variants of an ordered carrier.
    pub fn is_upper_topology(self) -> bool {
        matches!(self, ZooSpaceId::JohnstoneUpper | ZooSpaceId::Ex334Upper)
    }

    pub fn parse(self, s: &str) -> Result<SetExpr> {
        let ast = expr::parse(s, None)?;
        Ok(SetExpr { space: self, set: expr::eval(&ast, self.carrier(), &0u64)? })
    }

    pub fn point(self, s: &str) -> Result<Point<u64>> {
        expr::eval_point(&expr::parse_point(s, None)?, self.carrier(), &0u64)
    }

    fn wrap(self, set: ZSet<u64>) -> SetExpr {
        SetExpr { space: self, set }
    }

    fn check(self, e: &SetExpr) -> Result<()> {
        if e.space.carrier() != self.carrier() {
            return Err(Error::WrongGrammar(format!("{} set used in {self}", e.space)));
        }
        Ok(())
    }

    pub fn contains(self, e: &SetExpr, p: &Point<u64>) -> Result<bool> {
        self.check(e)?;
        Ok(e.set.contains(p))
    }

    pub fn union(self, a: &SetExpr, b: &SetExpr) -> Result<SetExpr> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(a.set.union(&b.set)))
    }

    pub fn intersect(self, a: &SetExpr, b: &SetExpr) -> Result<SetExpr> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(a.set.intersection(&b.set)))
    }

    pub fn is_empty(self, e: &SetExpr) -> Result<bool> {
        self.check(e)?;
        Ok(e.set.is_empty())
    }

    pub fn up(self, p: &Point<u64>) -> Result<SetExpr> {
        if p.carrier() != self.carrier() {
            return Err(Error::WrongGrammar(format!("point {p} in {self}")));
        }
        Ok(self.wrap(ZSet::up(p)))
    }

    pub fn is_open(self, e: &SetExpr) -> Result<bool> {
        self.check(e)?;
        Ok(is_open(self, &e.set))
    }

    pub fn is_closed(self, e: &SetExpr) -> Result<bool> {
        self.check(e)?;
        Ok(is_closed(self, &e.set))
    }

    pub fn closure(self, e: &SetExpr) -> Result<SetExpr> {
        self.check(e)?;
        Ok(self.wrap(closure(self, &e.set)?))
    }

    pub fn is_compact_saturated(self, e: &SetExpr) -> Result<Decision> {
        self.check(e)?;
        Ok(compact_saturated(self, &e.set))
    }
}

/// The order of the carrier on concrete points.
pub fn leq(p: &Point<u64>, q: &Point<u64>) -> bool {
    use Point::*;
    match (p, q) {
        (Nat(x), Nat(y)) => x == y,
        (J(j, k), J(m, n)) => match (k, n) {
            (_, None) if j == m => true,
            (Some(k), None) => k <= m,
            (Some(k), Some(n)) => j == m && k <= n,
            (None, _) => false,
        },
        (A(m), A(n)) => m <= n,
        (A(_), W0) | (B, W(_)) => true,
        (A(m), W(n)) => m <= n,
        (B, B) | (W0, W0) => true,
        (W(m), W(n)) => m == n,
        _ => false,
    }
}

pub fn is_scott_open_symbolic(id: ZooSpaceId, e: &SetExpr) -> Result<bool> {
    if !matches!(id, ZooSpaceId::JohnstoneScott | ZooSpaceId::Ex334Scott) {
        return Err(Error::WrongGrammar(format!("{id} is not a Scott space of the zoo")));
    }
    id.is_open(e)
}

pub(crate) fn is_upper<T: Bound>(s: &ZSet<T>) -> bool {
    let one = || T::constant(1);
    match s {
        ZSet::Nat { .. } => true,
        ZSet::Johnstone { all: true, .. } => true,
        ZSet::Johnstone { columns, omega, .. } => columns.iter().all(|(j, l)| {
            let lo = l.first().unwrap().clone();
            *l == Line::tail(lo.clone())
                && Line::tail(lo).union(&Line::point(T::constant(*j))).is_subset(omega, 1)
        }),
        ZSet::Ex334 { a, b, w0, w } => {
            let a_ok = match a.first() {
                None => true,
                Some(lo) => *a == Line::tail(lo.clone()) && *w0 && Line::tail(lo.clone()).is_subset(w, 1),
            };
            let b_ok = !b || Line::tail(one()).is_subset(w, 1);
            a_ok && b_ok
        }
    }
}

pub(crate) fn is_open<T: Bound>(id: ZooSpaceId, s: &ZSet<T>) -> bool {
    if s.is_empty() || s.is_all() {
        return true;
    }
    match (id, s) {
        (ZooSpaceId::CofiniteNat | ZooSpaceId::Cocountable, ZSet::Nat { co, .. }) => *co,
        (ZooSpaceId::JohnstoneScott, ZSet::Johnstone { columns, omega, .. }) => {
            is_upper(s) && omega.is_finite() && omega_points_covered(columns, omega)
        }
        (ZooSpaceId::JohnstoneUpper, _) => false,
        (ZooSpaceId::Ex334Scott, ZSet::Ex334 { a, w0, .. }) => is_upper(s) && (!w0 || !a.is_empty()),
        (ZooSpaceId::Ex334Upper, _) => {
            let c = s.complement().expect("EX334 sets have complements");
            ex334_closure(&c, true) == c
        }
        _ => false,
    }
}

/// Each `(j, ω)` in a finite omega line needs a same-column tail.
fn omega_points_covered<T: Bound>(columns: &std::collections::BTreeMap<u64, Line<T>>, omega: &Line<T>) -> bool {
    omega.intervals().iter().all(|(lo, hi)| {
        let (Some(lo), Some(hi)) = (lo.as_constant(), hi.as_ref().and_then(Bound::as_constant)) else {
            return false;
        };
        (lo..=hi).all(|j| columns.contains_key(&j))
    })
}

fn ex334_closure<T: Bound>(s: &ZSet<T>, upper: bool) -> ZSet<T> {
    let ZSet::Ex334 { a, b, w0, w } = s else { unreachable!() };
    if upper && !w.is_finite() {
        return ZSet::all(Carrier::Ex334);
    }
    let one = || T::constant(1);
    let a2 = if *w0 || !a.is_finite() || !w.is_finite() {
        Line::tail(one())
    } else {
        match a.last().into_iter().chain(w.last()).max() {
            Some(m) => Line::range(one(), m.clone()),
            None => Line::empty(),
        }
    };
    ZSet::Ex334 {
        w0: *w0 || !a2.is_finite(),
        a: a2,
        b: *b || !w.is_empty(),
        w: w.clone(),
    }
}

pub(crate) fn closure<T: Bound>(id: ZooSpaceId, s: &ZSet<T>) -> Result<ZSet<T>> {
    match s {
        ZSet::Nat { co, .. } => Ok(if *co { ZSet::all(Carrier::Nat) } else { s.clone() }),
        ZSet::Johnstone { all: true, .. } => Ok(s.clone()),
        ZSet::Johnstone { columns, omega, .. } => {
            if !omega.is_empty() || columns.values().any(|l| !l.is_finite()) {
                return Err(Error::UnrepresentableSet(format!(
                    "closure of {s} in {id} meets infinitely many columns"
                )));
            }
            let cols = columns
                .iter()
                .map(|(j, l)| (*j, Line::range(T::constant(1), l.last().unwrap().clone())))
                .collect();
            Ok(ZSet::johnstone(cols, Line::empty()))
        }
        ZSet::Ex334 { .. } => Ok(ex334_closure(s, id.is_upper_topology())),
    }
}

pub(crate) fn is_closed<T: Bound>(id: ZooSpaceId, s: &ZSet<T>) -> bool {
    match s {
        ZSet::Johnstone { all: true, .. } => true,
        ZSet::Johnstone { columns, omega, .. } => {
            omega.is_empty()
                && columns.values().all(|l| {
                    l.is_finite() && *l == Line::range(T::constant(1), l.last().unwrap().clone())
                })
        }
        _ => closure(id, s).is_ok_and(|c| c == *s),
    }
}

/// Membership in `K(X)`: nonempty, compact and saturated.
pub(crate) fn compact_saturated<T: Bound>(id: ZooSpaceId, s: &ZSet<T>) -> Decision {
    if s.is_empty() {
        return Decision::No;
    }
    match s {
        ZSet::Nat { co, .. } => match id {
            ZooSpaceId::CofiniteNat => Decision::Yes,
            _ => Decision::from(!co),
        },
        _ if !is_upper(s) => Decision::No,
        ZSet::Johnstone { all: true, .. } => Decision::Unknown,
        ZSet::Johnstone { columns, omega, .. } => {
            let mut covered = Line::empty();
            for (j, l) in columns {
                covered = covered
                    .union(&Line::tail(l.first().unwrap().clone()))
                    .union(&Line::point(T::constant(*j)));
            }
            finite_generators(omega.difference(&covered, 1).is_finite())
        }
        ZSet::Ex334 { a, b, w, .. } => {
            let mut covered = Line::empty();
            if let Some(lo) = a.first() {
                covered = Line::tail(lo.clone());
            }
            if *b {
                covered = Line::tail(T::constant(1));
            }
            finite_generators(w.difference(&covered, 1).is_finite())
        }
    }
}

/// An upper set with finitely many minimal elements is `↑F`, hence
/// compact. Other upper sets are left undecided.
fn finite_generators(finite: bool) -> Decision {
    if finite {
        Decision::Yes
    } else {
        Decision::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ZooSpaceId::*;

    fn e(id: ZooSpaceId, s: &str) -> SetExpr {
        id.parse(s).unwrap()
    }

    #[test]
    fn closedness_and_compactness_on_the_cofinite_line() {
        assert!(CofiniteNat.is_closed(&e(CofiniteNat, "FIN(3,5)")).unwrap());
        assert!(!CofiniteNat.is_closed(&e(CofiniteNat, "COFIN(3)")).unwrap());
        assert!(CofiniteNat.is_closed(&e(CofiniteNat, "ALL")).unwrap());
        assert_eq!(CofiniteNat.is_compact_saturated(&e(CofiniteNat, "COFIN(1)")).unwrap(), Decision::Yes);
        assert_eq!(Cocountable.is_compact_saturated(&e(Cocountable, "COFIN(1)")).unwrap(), Decision::No);
        assert_eq!(Cocountable.is_compact_saturated(&e(Cocountable, "FIN(1,9)")).unwrap(), Decision::Yes);
    }

    #[test]
    fn scott_openness_rules() {
        assert!(is_scott_open_symbolic(Ex334Scott, &e(Ex334Scott, "W_PT(3)")).unwrap());
        assert!(!is_scott_open_symbolic(Ex334Scott, &e(Ex334Scott, "W0_PT")).unwrap());
        assert!(is_scott_open_symbolic(Ex334Scott, &e(Ex334Scott, "UP(a(2))")).unwrap());
        assert!(is_scott_open_symbolic(JohnstoneScott, &e(JohnstoneScott, "ALL")).unwrap());
        assert!(!is_scott_open_symbolic(JohnstoneScott, &e(JohnstoneScott, "UP((2,1))")).unwrap());
        assert!(!is_scott_open_symbolic(JohnstoneScott, &e(JohnstoneScott, "PT(1,w)")).unwrap());
        assert!(is_scott_open_symbolic(CofiniteNat, &e(CofiniteNat, "ALL")).is_err());
        assert!(!Ex334Upper.is_open(&e(Ex334Upper, "W_PT(3)")).unwrap());
        assert!(Ex334Upper.is_open(&e(Ex334Upper, "UP(a(2))")).unwrap());
    }

    #[test]
    fn closures() {
        let c = Ex334Scott.closure(&e(Ex334Scott, "ATAIL(4)")).unwrap();
        assert_eq!(c.to_string(), "ATAIL(1) | W0_PT");
        let c = Ex334Scott.closure(&e(Ex334Scott, "W_PT(2)")).unwrap();
        assert_eq!(c.to_string(), "A_PT(1..2) | B_PT | W_PT(2)");
        assert!(Ex334Upper.closure(&e(Ex334Upper, "WTAIL(2)")).unwrap().set.is_all());
        let c = JohnstoneScott.closure(&e(JohnstoneScott, "PT(1,3) | PT(2,1)")).unwrap();
        assert_eq!(c.to_string(), "PT(1,1..3) | PT(2,1)");
        assert!(matches!(
            JohnstoneScott.closure(&e(JohnstoneScott, "PT(1,w)")),
            Err(Error::UnrepresentableSet(_))
        ));
    }

    #[test]
    fn up_sets_are_upward_closures_of_the_order() {
        let pts: Vec<Point<u64>> = (1..5)
            .flat_map(|j| (1..5).map(move |k| Point::J(j, Some(k))).chain([Point::J(j, None)]))
            .collect();
        for p in &pts {
            let up = ZSet::up(p);
            for q in &pts {
                assert_eq!(up.contains(q), leq(p, q), "{p} {q}");
            }
        }
        let pts: Vec<Point<u64>> = (1..5)
            .flat_map(|n| [Point::A(n), Point::W(n)])
            .chain([Point::B, Point::W0])
            .collect();
        for p in &pts {
            for q in &pts {
                assert_eq!(ZSet::up(p).contains(q), leq(p, q), "{p} {q}");
            }
        }
    }

    #[test]
    fn compact_saturated_sets_of_ordered_spaces() {
        let yes = |id: ZooSpaceId, s| id.is_compact_saturated(&e(id, s)).unwrap();
        assert_eq!(yes(Ex334Scott, "UP(a(1))"), Decision::Yes);
        assert_eq!(yes(Ex334Scott, "UP(b)"), Decision::Yes);
        assert_eq!(yes(Ex334Scott, "WTAIL(1)"), Decision::Unknown);
        assert_eq!(yes(Ex334Scott, "A_PT(1)"), Decision::No);
        assert_eq!(yes(JohnstoneScott, "UP((1,3)) | PT(7,w)"), Decision::Yes);
        assert_eq!(yes(JohnstoneScott, "OMEGATAIL(3)"), Decision::Unknown);
    }

    #[test]
    fn space_ids_round_trip() {
        for id in ZooSpaceId::ALL {
            assert_eq!(id.to_string().parse::<ZooSpaceId>().unwrap(), id);
        }
        assert_eq!("johnstone-scott".parse::<ZooSpaceId>().unwrap(), JohnstoneScott);
    }
}
