//! Set algebras for the three carrier shapes of the zoo.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

use super::line::{Affine, Bound, Line};

/// Which atom grammar a set belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Carrier {
    /// ℕ, or the named countable pool of the co-countable space.
    Nat,
    /// Points `(j, k)` with `j ≥ 1` and `k ∈ {1, 2, …} ∪ {ω}`.
    Johnstone,
    /// Points `a_n`, `b`, `ω_0`, `ω_n` with `n ≥ 1`.
    Ex334,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point<T: Bound> {
    Nat(T),
    /// Column and height; `None` is ω.
    J(u64, Option<T>),
    A(T),
    B,
    W0,
    W(T),
}

impl<T: Bound> Point<T> {
    pub fn carrier(&self) -> Carrier {
        match self {
            Point::Nat(_) => Carrier::Nat,
            Point::J(..) => Carrier::Johnstone,
            _ => Carrier::Ex334,
        }
    }
}

impl<T: Bound> Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Nat(v) => write!(f, "{v}"),
            Point::J(j, Some(k)) => write!(f, "({j},{k})"),
            Point::J(j, None) => write!(f, "({j},w)"),
            Point::A(n) => write!(f, "a({n})"),
            Point::B => write!(f, "b"),
            Point::W0 => write!(f, "w0"),
            Point::W(n) => write!(f, "w({n})"),
        }
    }
}

/// A representable subset. Every variant is kept in normal form, so the
/// derived equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ZSet<T: Bound> {
    /// `items` when `co` is false, otherwise the complement of `items`.
    Nat { items: Line<T>, co: bool },
    /// `all` is the whole carrier, which no finite union of atoms reaches.
    Johnstone { all: bool, columns: BTreeMap<u64, Line<T>>, omega: Line<T> },
    Ex334 { a: Line<T>, b: bool, w0: bool, w: Line<T> },
}

fn unrepresentable(what: &str) -> crate::Error {
    crate::Error::UnrepresentableSet(what.to_string())
}

impl<T: Bound> ZSet<T> {
    pub fn empty(c: Carrier) -> Self {
        match c {
            Carrier::Nat => ZSet::Nat { items: Line::empty(), co: false },
            Carrier::Johnstone => ZSet::Johnstone {
                all: false,
                columns: BTreeMap::new(),
                omega: Line::empty(),
            },
            Carrier::Ex334 => ZSet::Ex334 { a: Line::empty(), b: false, w0: false, w: Line::empty() },
        }
    }

    pub fn all(c: Carrier) -> Self {
        match c {
            Carrier::Nat => ZSet::Nat { items: Line::empty(), co: true },
            Carrier::Johnstone => ZSet::Johnstone {
                all: true,
                columns: BTreeMap::new(),
                omega: Line::empty(),
            },
            Carrier::Ex334 => ZSet::Ex334 {
                a: Line::tail(T::constant(1)),
                b: true,
                w0: true,
                w: Line::tail(T::constant(1)),
            },
        }
    }

    pub fn carrier(&self) -> Carrier {
        match self {
            ZSet::Nat { .. } => Carrier::Nat,
            ZSet::Johnstone { .. } => Carrier::Johnstone,
            ZSet::Ex334 { .. } => Carrier::Ex334,
        }
    }

    /// An infinite line over ℕ is co-finite, so it is stored by its
    /// complement to keep `items` finite.
    pub fn nat(items: Line<T>, co: bool) -> Self {
        if items.is_finite() {
            ZSet::Nat { items, co }
        } else {
            ZSet::Nat { items: items.complement(0), co: !co }
        }
    }

    pub fn johnstone(columns: BTreeMap<u64, Line<T>>, omega: Line<T>) -> Self {
        let columns = columns.into_iter().filter(|(_, l)| !l.is_empty()).collect();
        ZSet::Johnstone { all: false, columns, omega }
    }

    pub fn point(p: &Point<T>) -> Self {
        let mut s = Self::empty(p.carrier());
        match (&mut s, p) {
            (ZSet::Nat { items, .. }, Point::Nat(v)) => *items = Line::point(v.clone()),
            (ZSet::Johnstone { columns, .. }, Point::J(j, Some(k))) => {
                columns.insert(*j, Line::point(k.clone()));
            }
            (ZSet::Johnstone { omega, .. }, Point::J(j, None)) => *omega = Line::point(T::constant(*j)),
            (ZSet::Ex334 { a, .. }, Point::A(n)) => *a = Line::point(n.clone()),
            (ZSet::Ex334 { b, .. }, Point::B) => *b = true,
            (ZSet::Ex334 { w0, .. }, Point::W0) => *w0 = true,
            (ZSet::Ex334 { w, .. }, Point::W(n)) => *w = Line::point(n.clone()),
            _ => unreachable!(),
        }
        s
    }

    pub fn is_empty(&self) -> bool {
        match self {
            ZSet::Nat { items, co } => !co && items.is_empty(),
            ZSet::Johnstone { all, columns, omega } => !all && columns.is_empty() && omega.is_empty(),
            ZSet::Ex334 { a, b, w0, w } => a.is_empty() && !b && !w0 && w.is_empty(),
        }
    }

    pub fn is_all(&self) -> bool {
        *self == Self::all(self.carrier())
    }

    pub fn contains(&self, p: &Point<T>) -> bool {
        match (self, p) {
            (ZSet::Nat { items, co }, Point::Nat(v)) => items.contains(v) != *co,
            (ZSet::Johnstone { all: true, .. }, Point::J(..)) => true,
            (ZSet::Johnstone { columns, .. }, Point::J(j, Some(k))) => {
                columns.get(j).is_some_and(|l| l.contains(k))
            }
            (ZSet::Johnstone { omega, .. }, Point::J(j, None)) => omega.contains(&T::constant(*j)),
            (ZSet::Ex334 { a, .. }, Point::A(n)) => a.contains(n),
            (ZSet::Ex334 { b, .. }, Point::B) => *b,
            (ZSet::Ex334 { w0, .. }, Point::W0) => *w0,
            (ZSet::Ex334 { w, .. }, Point::W(n)) => w.contains(n),
            _ => false,
        }
    }

    fn check_carrier(&self, other: &Self) {
        assert_eq!(self.carrier(), other.carrier(), "mixing sets of different spaces");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_carrier(other);
        match (self, other) {
            (ZSet::Nat { items: x, co: cx }, ZSet::Nat { items: y, co: cy }) => match (cx, cy) {
                (false, false) => ZSet::nat(x.union(y), false),
                (false, true) => ZSet::nat(y.difference(x, 0), true),
                (true, false) => ZSet::nat(x.difference(y, 0), true),
                (true, true) => ZSet::nat(x.intersection(y), true),
            },
            (
                ZSet::Johnstone { all: ax, columns: cx, omega: ox },
                ZSet::Johnstone { all: ay, columns: cy, omega: oy },
            ) => {
                if *ax || *ay {
                    return Self::all(Carrier::Johnstone);
                }
                let mut cols = cx.clone();
                for (j, l) in cy {
                    let merged = cols.get(j).map_or_else(|| l.clone(), |m| m.union(l));
                    cols.insert(*j, merged);
                }
                ZSet::johnstone(cols, ox.union(oy))
            }
            (ZSet::Ex334 { a, b, w0, w }, ZSet::Ex334 { a: a2, b: b2, w0: w02, w: w2 }) => ZSet::Ex334 {
                a: a.union(a2),
                b: *b || *b2,
                w0: *w0 || *w02,
                w: w.union(w2),
            },
            _ => unreachable!(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_carrier(other);
        match (self, other) {
            (ZSet::Nat { items: x, co: cx }, ZSet::Nat { items: y, co: cy }) => match (cx, cy) {
                (false, false) => ZSet::nat(x.intersection(y), false),
                (false, true) => ZSet::nat(x.difference(y, 0), false),
                (true, false) => ZSet::nat(y.difference(x, 0), false),
                (true, true) => ZSet::nat(x.union(y), true),
            },
            (ZSet::Johnstone { all: true, .. }, _) => other.clone(),
            (_, ZSet::Johnstone { all: true, .. }) => self.clone(),
            (
                ZSet::Johnstone { columns: cx, omega: ox, .. },
                ZSet::Johnstone { columns: cy, omega: oy, .. },
            ) => {
                let cols = cx
                    .iter()
                    .filter_map(|(j, l)| cy.get(j).map(|m| (*j, l.intersection(m))))
                    .collect();
                ZSet::johnstone(cols, ox.intersection(oy))
            }
            (ZSet::Ex334 { a, b, w0, w }, ZSet::Ex334 { a: a2, b: b2, w0: w02, w: w2 }) => ZSet::Ex334 {
                a: a.intersection(a2),
                b: *b && *b2,
                w0: *w0 && *w02,
                w: w.intersection(w2),
            },
            _ => unreachable!(),
        }
    }

    pub fn complement(&self) -> crate::Result<Self> {
        Ok(match self {
            ZSet::Nat { items, co } => ZSet::nat(items.clone(), !co),
            ZSet::Johnstone { all: true, .. } => Self::empty(Carrier::Johnstone),
            ZSet::Johnstone { .. } if self.is_empty() => Self::all(Carrier::Johnstone),
            ZSet::Johnstone { .. } => return Err(unrepresentable("complement of a proper Johnstone set")),
            ZSet::Ex334 { a, b, w0, w } => ZSet::Ex334 {
                a: a.complement(1),
                b: !b,
                w0: !w0,
                w: w.complement(1),
            },
        })
    }

    pub fn difference(&self, other: &Self) -> crate::Result<Self> {
        self.check_carrier(other);
        if let (ZSet::Johnstone { all: false, columns: cx, omega: ox }, ZSet::Johnstone { all: ay, columns: cy, omega: oy }) =
            (self, other)
        {
            if *ay {
                return Ok(Self::empty(Carrier::Johnstone));
            }
            let cols = cx
                .iter()
                .map(|(j, l)| (*j, cy.get(j).map_or_else(|| l.clone(), |m| l.difference(m, 1))))
                .collect();
            return Ok(ZSet::johnstone(cols, ox.difference(oy, 1)));
        }
        Ok(self.intersection(&other.complement()?))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        match (self, other) {
            (_, ZSet::Johnstone { all: true, .. }) => true,
            (ZSet::Johnstone { all: true, .. }, _) => false,
            _ => self.difference(other).expect("difference into a proper set").is_empty(),
        }
    }

    /// Principal upper set in the order of the carrier. The co-finite and
    /// co-countable spaces are T1, so their order is discrete.
    pub fn up(p: &Point<T>) -> Self {
        let one = || T::constant(1);
        match p {
            Point::Nat(_) => Self::point(p),
            Point::J(j, Some(k)) => {
                let mut cols = BTreeMap::new();
                cols.insert(*j, Line::tail(k.clone()));
                let omega = Line::tail(k.clone()).union(&Line::point(T::constant(*j)));
                ZSet::johnstone(cols, omega)
            }
            Point::J(_, None) => Self::point(p),
            Point::A(n) => ZSet::Ex334 {
                a: Line::tail(n.clone()),
                b: false,
                w0: true,
                w: Line::tail(n.clone()),
            },
            Point::B => ZSet::Ex334 { a: Line::empty(), b: true, w0: false, w: Line::tail(one()) },
            Point::W0 | Point::W(_) => Self::point(p),
        }
    }

    /// Every line and flag of the set, for computing stabilization bounds.
    pub fn endpoints(&self) -> Vec<T> {
        let mut out = Vec::new();
        let mut take = |l: &Line<T>| out.extend(l.endpoints().cloned());
        match self {
            ZSet::Nat { items, .. } => take(items),
            ZSet::Johnstone { columns, omega, .. } => {
                columns.values().for_each(&mut take);
                take(omega);
            }
            ZSet::Ex334 { a, w, .. } => {
                take(a);
                take(w);
            }
        }
        out
    }

    pub fn map_lines<U: Bound>(&self, mut f: impl FnMut(&Line<T>) -> Line<U>) -> ZSet<U> {
        match self {
            ZSet::Nat { items, co } => ZSet::nat(f(items), *co),
            ZSet::Johnstone { all, columns, omega } => {
                let mut s = ZSet::johnstone(columns.iter().map(|(j, l)| (*j, f(l))).collect(), f(omega));
                if *all {
                    s = ZSet::all(Carrier::Johnstone);
                }
                s
            }
            ZSet::Ex334 { a, b, w0, w } => ZSet::Ex334 { a: f(a), b: *b, w0: *w0, w: f(w) },
        }
    }
}

impl ZSet<Affine> {
    pub fn at(&self, n: u64) -> Option<ZSet<u64>> {
        let mut failed = false;
        let s = self.map_lines(|l| {
            l.at(n).unwrap_or_else(|| {
                failed = true;
                Line::empty()
            })
        });
        (!failed).then_some(s)
    }

    /// Pointwise eventual limit. For a monotone family this is the
    /// intersection (or union) of all members.
    pub fn limit(&self) -> ZSet<u64> {
        self.map_lines(Line::limit)
    }
}

fn range_arg<T: Bound>(lo: &T, hi: &T) -> String {
    if lo == hi {
        format!("{lo}")
    } else {
        format!("{lo}..{hi}")
    }
}

fn line_atoms<T: Bound>(
    l: &Line<T>,
    out: &mut Vec<String>,
    finite: impl Fn(String) -> String,
    tail: impl Fn(&T) -> String,
) {
    for (lo, hi) in l.intervals() {
        match hi {
            Some(hi) => out.push(finite(range_arg(lo, hi))),
            None => out.push(tail(lo)),
        }
    }
}

impl<T: Bound> Display for ZSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "EMPTY");
        }
        if self.is_all() {
            return write!(f, "ALL");
        }
        let mut atoms = Vec::new();
        match self {
            ZSet::Nat { items, co } => {
                let list: Vec<String> = items
                    .intervals()
                    .iter()
                    .map(|(lo, hi)| range_arg(lo, hi.as_ref().expect("FIN lists are finite")))
                    .collect();
                let name = if *co { "COFIN" } else { "FIN" };
                atoms.push(format!("{name}({})", list.join(",")));
            }
            ZSet::Johnstone { columns, omega, .. } => {
                for (j, l) in columns {
                    line_atoms(l, &mut atoms, |r| format!("PT({j},{r})"), |lo| format!("COLTAIL({j},{lo})"));
                }
                line_atoms(omega, &mut atoms, |r| format!("PT({r},w)"), |lo| format!("OMEGATAIL({lo})"));
            }
            ZSet::Ex334 { a, b, w0, w } => {
                line_atoms(a, &mut atoms, |r| format!("A_PT({r})"), |lo| format!("ATAIL({lo})"));
                if *b {
                    atoms.push("B_PT".into());
                }
                if *w0 {
                    atoms.push("W0_PT".into());
                }
                line_atoms(w, &mut atoms, |r| format!("W_PT({r})"), |lo| format!("WTAIL({lo})"));
            }
        }
        write!(f, "{}", atoms.join(" | "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(j: u64, k: u64) -> Point<u64> {
        Point::J(j, Some(k))
    }

    #[test]
    fn johnstone_up_sets() {
        assert_eq!(ZSet::up(&j(2, 1)).to_string(), "COLTAIL(2,1) | OMEGATAIL(1)");
        assert_eq!(ZSet::up(&j(1, 3)).to_string(), "COLTAIL(1,3) | PT(1,w) | OMEGATAIL(3)");
        let s = ZSet::up(&j(1, 3)).intersection(&ZSet::up(&j(2, 1)));
        assert_eq!(s.to_string(), "PT(1,w) | OMEGATAIL(3)");
        let s = ZSet::up(&j(1, 3)).intersection(&ZSet::up(&j(2, 2)));
        assert_eq!(s.to_string(), "OMEGATAIL(3)");
    }

    #[test]
    fn ex334_up_sets() {
        let s = ZSet::<u64>::up(&Point::A(4)).intersection(&ZSet::up(&Point::B));
        assert_eq!(s.to_string(), "WTAIL(4)");
        assert_eq!(ZSet::<u64>::up(&Point::A(1)).to_string(), "ATAIL(1) | W0_PT | WTAIL(1)");
    }

    #[test]
    fn nat_boolean_algebra() {
        let fin = ZSet::nat(Line::from_intervals([(3u64, Some(3)), (5, Some(5))]), false);
        let cof = ZSet::nat(Line::range(0u64, 4), true);
        assert_eq!(fin.to_string(), "FIN(3,5)");
        assert_eq!(fin.union(&cof).to_string(), "COFIN(0..2,4)");
        assert_eq!(fin.intersection(&cof).to_string(), "FIN(5)");
        assert_eq!(cof.complement().unwrap().to_string(), "FIN(0..4)");
        assert!(fin.union(&fin.complement().unwrap()).is_all());
    }

    #[test]
    fn johnstone_complement_is_guarded() {
        let s = ZSet::point(&j(1, 1));
        assert!(matches!(s.complement(), Err(crate::Error::UnrepresentableSet(_))));
        let all = ZSet::<u64>::all(Carrier::Johnstone);
        assert!(s.is_subset(&all));
        assert!(!all.is_subset(&s));
        assert!(all.difference(&s).is_err());
        assert!(s.difference(&all).unwrap().is_empty());
    }
}
