//! Finite unions of intervals on a copy of ℕ.
//!
//! Endpoints are either concrete naturals or affine functions of a family
//! parameter compared eventually (for all large enough values of the
//! parameter). Both cases share the normalization code below, which is why
//! [`Bound`] only asks for an order and successor/predecessor.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};

pub trait Bound: Clone + Ord + Debug + Display {
    fn constant(v: u64) -> Self;
    fn succ(&self) -> Self;
    /// Only called on values strictly above the domain minimum.
    fn pred(&self) -> Self;
    fn as_constant(&self) -> Option<u64>;
    /// `slope * n + offset`, where `n` is a value of this type.
    fn affine(slope: u64, offset: i64, n: &Self) -> Option<Self>;
    /// Growth in the parameter; 0 for constants.
    fn slope(&self) -> u64;
}

impl Bound for u64 {
    fn constant(v: u64) -> Self {
        v
    }

    fn succ(&self) -> Self {
        self + 1
    }

    fn pred(&self) -> Self {
        self - 1
    }

    fn as_constant(&self) -> Option<u64> {
        Some(*self)
    }

    fn affine(slope: u64, offset: i64, n: &Self) -> Option<Self> {
        let v = (slope as i128) * (*n as i128) + offset as i128;
        u64::try_from(v).ok()
    }

    fn slope(&self) -> u64 {
        0
    }
}

/// `slope * n + offset`, ordered by its values for all large `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: u64,
    pub offset: i64,
}

impl Affine {
    pub const PARAM: Affine = Affine { slope: 1, offset: 0 };

    pub fn at(&self, n: u64) -> Option<u64> {
        u64::affine(self.slope, self.offset, &n)
    }
}

impl Ord for Affine {
    fn cmp(&self, other: &Self) -> Ordering {
        self.slope.cmp(&other.slope).then(self.offset.cmp(&other.offset))
    }
}

impl PartialOrd for Affine {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope, self.offset) {
            (0, o) => write!(f, "{o}"),
            (s, o) => {
                if s == 1 {
                    write!(f, "n")?;
                } else {
                    write!(f, "{s}n")?;
                }
                match o.cmp(&0) {
                    Ordering::Greater => write!(f, "+{o}"),
                    Ordering::Less => write!(f, "{o}"),
                    Ordering::Equal => Ok(()),
                }
            }
        }
    }
}

impl Debug for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Bound for Affine {
    fn constant(v: u64) -> Self {
        Affine { slope: 0, offset: v as i64 }
    }

    fn succ(&self) -> Self {
        Affine { slope: self.slope, offset: self.offset + 1 }
    }

    fn pred(&self) -> Self {
        Affine { slope: self.slope, offset: self.offset - 1 }
    }

    fn as_constant(&self) -> Option<u64> {
        (self.slope == 0 && self.offset >= 0).then_some(self.offset as u64)
    }

    fn affine(slope: u64, offset: i64, n: &Self) -> Option<Self> {
        let r = Affine {
            slope: slope * n.slope,
            offset: slope as i64 * n.offset + offset,
        };
        (r.slope > 0 || r.offset >= 0).then_some(r)
    }

    fn slope(&self) -> u64 {
        self.slope
    }
}

/// Closed interval `[lo, hi]`; `hi = None` is unbounded.
pub type Interval<T> = (T, Option<T>);

/// Sorted, disjoint, non-adjacent intervals. The representation of a set
/// is unique, so structural equality is set equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line<T: Bound> {
    intervals: Vec<Interval<T>>,
}

impl<T: Bound> Default for Line<T> {
    fn default() -> Self {
        Line { intervals: Vec::new() }
    }
}

impl<T: Bound> Debug for Line<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|(lo, hi)| match hi {
                Some(hi) if hi == lo => format!("{lo}"),
                Some(hi) => format!("{lo}..{hi}"),
                None => format!("{lo}.."),
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn le_hi<T: Bound>(a: &Option<T>, b: &Option<T>) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(a), Some(b)) => a <= b,
    }
}

fn min_hi<T: Bound>(a: &Option<T>, b: &Option<T>) -> Option<T> {
    if le_hi(a, b) {
        a.clone()
    } else {
        b.clone()
    }
}

impl<T: Bound> Line<T> {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(intervals: impl IntoIterator<Item = Interval<T>>) -> Self {
        let mut v: Vec<Interval<T>> = intervals
            .into_iter()
            .filter(|(lo, hi)| hi.as_ref().is_none_or(|h| lo <= h))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<Interval<T>> = Vec::with_capacity(v.len());
        for (lo, hi) in v {
            if let Some((_, last_hi)) = out.last_mut() {
                let touches = match last_hi {
                    None => true,
                    Some(h) => lo <= h.succ(),
                };
                if touches {
                    if !le_hi(&hi, last_hi) {
                        *last_hi = hi;
                    }
                    continue;
                }
            }
            out.push((lo, hi));
        }
        Line { intervals: out }
    }

    pub fn point(v: T) -> Self {
        Line { intervals: vec![(v.clone(), Some(v))] }
    }

    pub fn range(lo: T, hi: T) -> Self {
        Self::from_intervals([(lo, Some(hi))])
    }

    pub fn tail(lo: T) -> Self {
        Line { intervals: vec![(lo, None)] }
    }

    pub fn intervals(&self) -> &[Interval<T>] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.intervals.last().is_none_or(|(_, hi)| hi.is_some())
    }

    pub fn first(&self) -> Option<&T> {
        self.intervals.first().map(|(lo, _)| lo)
    }

    /// Largest element of a finite nonempty line.
    pub fn last(&self) -> Option<&T> {
        self.intervals.last().and_then(|(_, hi)| hi.as_ref())
    }

    pub fn contains(&self, v: &T) -> bool {
        self.intervals
            .iter()
            .any(|(lo, hi)| lo <= v && hi.as_ref().is_none_or(|h| v <= h))
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_intervals(self.intervals.iter().chain(&other.intervals).cloned())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for (a_lo, a_hi) in &self.intervals {
            for (b_lo, b_hi) in &other.intervals {
                let lo = a_lo.max(b_lo).clone();
                let hi = min_hi(a_hi, b_hi);
                out.push((lo, hi));
            }
        }
        Self::from_intervals(out)
    }

    /// Complement within `[min, ∞)`.
    pub fn complement(&self, min: u64) -> Self {
        let mut out = Vec::new();
        let mut next = Some(T::constant(min));
        for (lo, hi) in &self.intervals {
            if let Some(n) = &next {
                if n < lo {
                    out.push((n.clone(), Some(lo.pred())));
                }
            }
            next = hi.as_ref().map(|h| h.succ());
        }
        if let Some(n) = next {
            out.push((n, None));
        }
        Self::from_intervals(out)
    }

    pub fn difference(&self, other: &Self, min: u64) -> Self {
        self.intersection(&other.complement(min))
    }

    pub fn is_subset(&self, other: &Self, min: u64) -> bool {
        self.difference(other, min).is_empty()
    }

    pub fn map<U: Bound>(&self, f: impl Fn(&T) -> U) -> Line<U> {
        Line::from_intervals(self.intervals.iter().map(|(lo, hi)| (f(lo), hi.as_ref().map(&f))))
    }

    /// Largest constant appearing, and largest slope and |offset| seen, as
    /// input to the stabilization bound.
    pub fn endpoints(&self) -> impl Iterator<Item = &T> {
        self.intervals
            .iter()
            .flat_map(|(lo, hi)| std::iter::once(lo).chain(hi.as_ref()))
    }
}

impl Line<u64> {
    /// Points of a finite line in ascending order.
    pub fn points(&self) -> impl Iterator<Item = u64> + '_ {
        self.intervals
            .iter()
            .flat_map(|(lo, hi)| *lo..=hi.expect("points() on an infinite line"))
    }

    pub fn len(&self) -> Option<u64> {
        self.is_finite()
            .then(|| self.intervals.iter().map(|(lo, hi)| hi.unwrap() - lo + 1).sum())
    }
}

impl Line<Affine> {
    /// Instantiate at a concrete parameter value.
    pub fn at(&self, n: u64) -> Option<Line<u64>> {
        let mut out = Vec::new();
        for (lo, hi) in &self.intervals {
            let hi = match hi {
                Some(h) => Some(h.at(n)?),
                None => None,
            };
            out.push((lo.at(n)?, hi));
        }
        Some(Line::from_intervals(out))
    }

    /// Pointwise eventual limit: an interval survives only if its lower end
    /// is constant, and becomes unbounded if its upper end grows.
    pub fn limit(&self) -> Line<u64> {
        Line::from_intervals(self.intervals.iter().filter_map(|(lo, hi)| {
            let lo = lo.as_constant()?;
            let hi = match hi {
                Some(h) => h.as_constant(),
                None => None,
            };
            Some((lo, hi))
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_merges_adjacent_and_overlapping() {
        let l = Line::from_intervals([(5u64, Some(7)), (1, Some(2)), (3, Some(3)), (6, Some(9))]);
        assert_eq!(l.intervals(), &[(1, Some(3)), (5, Some(9))]);
        let t = Line::from_intervals([(4u64, None), (2, Some(4))]);
        assert_eq!(t.intervals(), &[(2, None)]);
    }

    #[test]
    fn complement_and_difference() {
        let l = Line::from_intervals([(1u64, Some(3)), (6, None)]);
        assert_eq!(l.complement(0).intervals(), &[(0, Some(0)), (4, Some(5))]);
        assert_eq!(l.complement(1).intervals(), &[(4, Some(5))]);
        assert!(Line::<u64>::empty().complement(1) == Line::tail(1));
        let d = Line::tail(0u64).difference(&Line::range(2, 4), 0);
        assert_eq!(d.intervals(), &[(0, Some(1)), (5, None)]);
    }

    #[test]
    fn affine_order_is_eventual() {
        let n = Affine::PARAM;
        let big = Affine { slope: 0, offset: 1000 };
        assert!(big < n);
        assert!(n < n.succ());
        assert_eq!(format!("{}", Affine { slope: 2, offset: -1 }), "2n-1");
        let l = Line::from_intervals([(n, Some(Affine { slope: 2, offset: 0 })), (Affine::constant(3), Some(Affine::constant(5)))]);
        assert_eq!(l.limit(), Line::range(3, 5));
        assert_eq!(Line::from_intervals([(Affine::constant(0), Some(n))]).limit(), Line::tail(0));
    }

    #[test]
    fn instantiation() {
        let n = Affine::PARAM;
        let l = Line::from_intervals([(Affine::constant(0), Some(n))]);
        assert_eq!(l.at(4).unwrap(), Line::range(0, 4));
        assert_eq!(l.at(0).unwrap(), Line::point(0));
    }
}
