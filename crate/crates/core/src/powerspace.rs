//! Smyth, Hoare and Alexandroff power spaces and the sobrification.
//!
//! A power space is an ordinary [`FiniteSpace`] whose points are subsets of
//! the base carrier. Point names are the member sets printed as `{a,b}`,
//! and `members()[i]` is the base subset behind point `i`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits;
use crate::set::{canonical, PointSet, MAX_POINTS};
use crate::space::{find_homeomorphism, generate_topology, is_embedding, union_closure, FiniteSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PowerKind {
    Smyth,
    Hoare,
    AlexPower,
    Sobrification,
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PowerKind::Smyth => "SMYTH",
            PowerKind::Hoare => "HOARE",
            PowerKind::AlexPower => "ALEX_POWER",
            PowerKind::Sobrification => "SOBRIFICATION",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone)]
pub struct PowerSpace {
    base: FiniteSpace,
    kind: PowerKind,
    space: FiniteSpace,
    members: Vec<PointSet>,
    index: HashMap<PointSet, usize>,
}

impl PowerSpace {
    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn point_of(&self, member: PointSet) -> Option<usize> {
        self.index.get(&member).copied()
    }

    /// Points of the power space for a family of base subsets.
    pub fn points_of(&self, family: &[PointSet]) -> Option<PointSet> {
        family.iter().map(|m| self.point_of(*m)).collect::<Option<Vec<_>>>().map(PointSet::from_iter)
    }

    /// Base subsets behind a set of power-space points.
    pub fn family(&self, points: PointSet) -> Vec<PointSet> {
        canonical(points.iter().map(|p| self.members[p]).collect())
    }

    fn build(
        base: &FiniteSpace,
        kind: PowerKind,
        members: Vec<PointSet>,
        generators: impl Fn(&[PointSet]) -> Result<Vec<PointSet>>,
    ) -> Result<PowerSpace> {
        limits::check("power-space carrier", members.len(), MAX_POINTS)?;
        let mut named: Vec<(String, PointSet)> = members.into_iter().map(|m| (set_name(base, m), m)).collect();
        named.sort();
        let (names, members): (Vec<String>, Vec<PointSet>) = named.into_iter().unzip();
        let opens = generators(&members)?;
        let space = FiniteSpace::from_opens(names, opens)?;
        let index = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(PowerSpace {
            base: base.clone(),
            kind,
            space,
            members,
            index,
        })
    }
}

/// `{a,b}` with names in canonical point order.
pub fn set_name(x: &FiniteSpace, s: PointSet) -> String {
    format!("{{{}}}", x.names(s).join(","))
}

fn boxes(members: &[PointSet], opens: &[PointSet]) -> Vec<PointSet> {
    opens
        .iter()
        .map(|&u| (0..members.len()).filter(|&i| members[i].is_subset(u)).collect())
        .collect()
}

fn diamonds(members: &[PointSet], opens: &[PointSet]) -> Vec<PointSet> {
    opens
        .iter()
        .map(|&u| (0..members.len()).filter(|&i| members[i].meets(u)).collect())
        .collect()
}

/// Upper Vietoris topology on `K(X)`, base `□U = {K : K ⊆ U}`.
pub fn smyth(x: &FiniteSpace) -> Result<PowerSpace> {
    limits::check_carrier("Smyth base", x.len())?;
    let ps = smyth_unchecked(x)?;
    // Specialization order is reverse inclusion.
    let order = ps.space.specialization();
    for (i, &k1) in ps.members.iter().enumerate() {
        for (j, &k2) in ps.members.iter().enumerate() {
            if order.leq(i, j) != k2.is_subset(k1) {
                return Err(Error::InvariantViolated(format!(
                    "Smyth order disagrees with reverse inclusion at {}, {}",
                    set_name(x, k1),
                    set_name(x, k2)
                )));
            }
        }
    }
    // P_S(X) sits inside P_S(up(X)) as a subspace.
    let outer = alexandroff_power(x)?;
    let inside = outer
        .points_of(&ps.members)
        .ok_or_else(|| Error::InvariantViolated("K(X) is not contained in up(X)".into()))?;
    let sub = outer.space.subspace(inside)?;
    if sub != ps.space {
        return Err(Error::InvariantViolated(
            "Smyth space is not a subspace of the Alexandroff power space".into(),
        ));
    }
    Ok(ps)
}

fn smyth_unchecked(x: &FiniteSpace) -> Result<PowerSpace> {
    let members = x.compact_saturated()?;
    PowerSpace::build(x, PowerKind::Smyth, members, |m| {
        union_closure(boxes(m, x.opens()), PointSet::full(m.len()))
    })
}

/// `P_S(up(X))`: the Smyth construction over the nonempty upper sets of the
/// specialization order, i.e. over the Alexandroff refinement of `X`.
pub fn alexandroff_power(x: &FiniteSpace) -> Result<PowerSpace> {
    limits::check_carrier("Alexandroff power base", x.len())?;
    let up = FiniteSpace::alexandroff_unchecked(x.specialization())?;
    let members: Vec<PointSet> = up.opens().iter().copied().filter(|u| !u.is_empty()).collect();
    PowerSpace::build(x, PowerKind::AlexPower, members, |m| {
        union_closure(boxes(m, up.opens()), PointSet::full(m.len()))
    })
}

/// Lower Vietoris topology on the nonempty closed sets, subbase
/// `◊U = {A : A ∩ U ≠ ∅}`.
pub fn hoare(x: &FiniteSpace) -> Result<PowerSpace> {
    limits::check_carrier("Hoare base", x.len())?;
    let members: Vec<PointSet> = x.closed_sets().into_iter().filter(|c| !c.is_empty()).collect();
    let ps = PowerSpace::build(x, PowerKind::Hoare, members, |m| {
        generate_topology(diamonds(m, x.opens()), PointSet::full(m.len()))
    })?;
    if let Some(w) = ps.space.sobriety_witness() {
        return Err(Error::InvariantViolated(format!(
            "Hoare power space is not sober: {:?}",
            ps.space.names(w)
        )));
    }
    Ok(ps)
}

/// Irreducible closed sets with the `◊` topology.
pub fn sobrification(x: &FiniteSpace) -> Result<PowerSpace> {
    limits::check_carrier("sobrification base", x.len())?;
    let members = x.irr_c()?;
    PowerSpace::build(x, PowerKind::Sobrification, members, |m| {
        generate_topology(diamonds(m, x.opens()), PointSet::full(m.len()))
    })
}

/// `x ↦ cl{x}` into the sobrification, checked to be an embedding and, on
/// a finite space, a homeomorphism.
pub fn eta(x: &FiniteSpace) -> Result<(PowerSpace, Vec<usize>)> {
    let s = sobrification(x)?;
    let f: Vec<usize> = (0..x.len())
        .map(|p| s.point_of(x.point_closure(p)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvariantViolated("point closure missing from the sobrification".into()))?;
    if !is_embedding(&f, x, &s.space) {
        return Err(Error::InvariantViolated("eta is not an embedding".into()));
    }
    if f.len() != s.members.len() {
        return Err(Error::InvariantViolated("eta is not onto the sobrification".into()));
    }
    Ok((s, f))
}

/// `x ↦ ↑x` into the Smyth power space, checked to be an embedding.
pub fn xi(x: &FiniteSpace) -> Result<(PowerSpace, Vec<usize>)> {
    let s = smyth(x)?;
    let f: Vec<usize> = (0..x.len())
        .map(|p| s.point_of(x.neighbourhood(p)))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::InvariantViolated("point saturation missing from K(X)".into()))?;
    if !is_embedding(&f, x, &s.space) {
        return Err(Error::InvariantViolated("xi is not an embedding".into()));
    }
    Ok((s, f))
}

/// `X` is homeomorphic to the subspace of `P_S(X)` on point saturations.
pub fn point_saturations_homeomorphic(x: &FiniteSpace) -> Result<bool> {
    let (s, f) = xi(x)?;
    let image: PointSet = f.iter().copied().collect();
    let sub = s.space.subspace(image)?;
    Ok(find_homeomorphism(x, &sub).is_some())
}

/// `⋂𝒜` equals the intersection of the closure of `𝒜`, with the closure
/// taken in `P_S(X)` and again in `P_S(up(X))`.
pub fn intersection_closure_check(x: &FiniteSpace, family: &[PointSet]) -> Result<bool> {
    if family.is_empty() {
        return Err(Error::EmptySet);
    }
    let meet = |fam: &[PointSet]| fam.iter().fold(x.all(), |acc, &k| acc.intersection(k));
    let direct = meet(family);
    for ps in [smyth(x)?, alexandroff_power(x)?] {
        let points = ps.points_of(family).ok_or(Error::NotCompactSaturated)?;
        let closed = ps.space.closure(points)?;
        if meet(&ps.family(closed)) != direct {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `X` is sober exactly when `P_S(X)` is.
pub fn smyth_sober_iff_check(x: &FiniteSpace) -> Result<bool> {
    Ok(x.is_sober() == smyth(x)?.space.is_sober())
}
