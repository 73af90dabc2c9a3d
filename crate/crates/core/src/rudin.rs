//! Topological and poset versions of Rudin's Lemma as extraction procedures.

use crate::classes::is_filtered_family;
use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::powerspace::{alexandroff_power, smyth, PowerSpace};
use crate::set::PointSet;
use crate::space::FiniteSpace;

/// Power spaces of one base space, built once and reused across queries.
pub struct RudinContext {
    space: FiniteSpace,
    smyth: PowerSpace,
    alex: PowerSpace,
}

impl RudinContext {
    pub fn new(x: &FiniteSpace) -> Result<Self> {
        Ok(RudinContext {
            space: x.clone(),
            smyth: smyth(x)?,
            alex: alexandroff_power(x)?,
        })
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn smyth(&self) -> &PowerSpace {
        &self.smyth
    }

    /// Irreducibility of `family` in `P_S(X)`, in `P_S(up(X))`, and of its
    /// closure in `P_S(up(X))`. The three answers must agree.
    pub fn is_irreducible_smyth(&self, family: &[PointSet]) -> Result<bool> {
        if family.is_empty() {
            return Err(Error::EmptySet);
        }
        let in_smyth = self.smyth.points_of(family).ok_or(Error::NotCompactSaturated)?;
        let in_alex = self.alex.points_of(family).ok_or(Error::NotCompactSaturated)?;
        let a = self.smyth.space().is_irreducible(in_smyth)?;
        let b = self.alex.space().is_irreducible(in_alex)?;
        let c = self.alex.space().is_irreducible(self.alex.space().closure(in_alex)?)?;
        if a != b || b != c {
            return Err(Error::InvariantViolated(format!(
                "irreducibility disagrees across power spaces: {a} {b} {c}"
            )));
        }
        Ok(a)
    }

    /// A minimal closed subset of `c` meeting every member of `family`,
    /// chosen irreducible and least in canonical order.
    pub fn minimal_irr_closed(&self, family: &[PointSet], c: PointSet) -> Result<PointSet> {
        if !self.is_irreducible_smyth(family)? {
            return Err(Error::NotIrreducibleFamily);
        }
        let x = &self.space;
        if !x.is_closed(c) {
            return Err(Error::NotClosed);
        }
        if family.iter().any(|k| !c.meets(*k)) {
            return Err(Error::MissesMember);
        }
        let meeting: Vec<PointSet> = x
            .closed_sets()
            .into_iter()
            .filter(|a| a.is_subset(c) && family.iter().all(|k| a.meets(*k)))
            .collect();
        let mut minimal: Vec<PointSet> = meeting
            .iter()
            .copied()
            .filter(|&a| !meeting.iter().any(|&b| b != a && b.is_subset(a)))
            .collect();
        minimal.retain(|&a| x.is_irreducible(a).unwrap_or(false));
        minimal.sort();
        let a = minimal.first().copied().ok_or_else(|| {
            Error::InvariantViolated("no minimal closed set is irreducible".into())
        })?;
        if !(0..x.len()).any(|p| x.point_closure(p) == a) {
            return Err(Error::InvariantViolated(format!(
                "minimal irreducible closed set {:?} is not a point closure",
                x.names(a)
            )));
        }
        Ok(a)
    }
}

pub fn is_irreducible_smyth(x: &FiniteSpace, family: &[PointSet]) -> Result<bool> {
    RudinContext::new(x)?.is_irreducible_smyth(family)
}

pub fn minimal_irr_closed(x: &FiniteSpace, family: &[PointSet], c: PointSet) -> Result<PointSet> {
    RudinContext::new(x)?.minimal_irr_closed(family, c)
}

/// A directed `D ⊆ c` whose down-closure meets every member of `family`.
/// `family` lists upper sets `↑F`; `c` is a lower set.
pub fn poset_rudin(p: &FinitePoset, family: &[PointSet], c: PointSet) -> Result<PointSet> {
    if !is_filtered_family(family) {
        return Err(Error::NotFiltered);
    }
    if family.iter().any(|f| !p.is_upper(*f)) {
        return Err(Error::NotUpperSet);
    }
    if !p.is_lower(c) {
        return Err(Error::NotClosed);
    }
    if family.iter().any(|f| !f.meets(c)) {
        return Err(Error::MissesMember);
    }
    let x = FiniteSpace::alexandroff(p)?;
    let a = minimal_irr_closed(&x, family, c)?;
    let d = p.maximal_in(a)?;
    let ok = d.is_subset(c) && p.is_directed(d) && family.iter().all(|f| p.down_set(d).meets(*f));
    if !ok {
        return Err(Error::InvariantViolated(format!("extracted set {:?} fails the lemma", p.names(d))));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> FinitePoset {
        FinitePoset::new(["bot", "a", "b"], [("bot", "a"), ("bot", "b")]).unwrap()
    }

    #[test]
    fn smyth_irreducibility_examples() {
        let p = p3();
        let x = FiniteSpace::alexandroff(&p).unwrap();
        let up = |n: &str| p.up(p.index(n).unwrap());
        assert!(is_irreducible_smyth(&x, &[up("bot"), up("a")]).unwrap());
        assert!(!is_irreducible_smyth(&x, &[up("a"), up("b")]).unwrap());
        assert!(is_irreducible_smyth(&x, &[up("b")]).unwrap());
        assert_eq!(
            is_irreducible_smyth(&x, &[x.set(["bot"]).unwrap()]),
            Err(Error::NotCompactSaturated)
        );
    }

    #[test]
    fn minimal_irr_closed_examples() {
        let p = p3();
        let x = FiniteSpace::alexandroff(&p).unwrap();
        let up = |n: &str| p.up(p.index(n).unwrap());
        assert_eq!(
            minimal_irr_closed(&x, &[up("bot"), up("a")], x.all()).unwrap(),
            p.set(["bot", "a"]).unwrap()
        );
        assert_eq!(
            minimal_irr_closed(&x, &[up("a"), up("b")], x.all()),
            Err(Error::NotIrreducibleFamily)
        );
        assert_eq!(
            minimal_irr_closed(&x, &[up("a")], p.set(["bot", "b"]).unwrap()),
            Err(Error::MissesMember)
        );
        let a2 = FiniteSpace::alexandroff(&FinitePoset::antichain(&["a", "b"]).unwrap()).unwrap();
        let a = a2.set(["a"]).unwrap();
        assert_eq!(minimal_irr_closed(&a2, &[a], a).unwrap(), a);
    }

    #[test]
    fn poset_rudin_examples() {
        let p = p3();
        let up = |n: &str| p.up(p.index(n).unwrap());
        let c = p.down(p.index("a").unwrap());
        assert_eq!(poset_rudin(&p, &[up("bot"), up("a")], c).unwrap(), p.set(["a"]).unwrap());
        let c2 = FinitePoset::chain(2);
        assert_eq!(poset_rudin(&c2, &[c2.up(0)], c2.down(1)).unwrap(), PointSet::singleton(0));
        let one = FinitePoset::chain(1);
        assert_eq!(poset_rudin(&one, &[one.all()], one.all()).unwrap(), one.all());
        assert_eq!(poset_rudin(&p, &[up("a"), up("b")], p.all()), Err(Error::NotFiltered));
    }
}
