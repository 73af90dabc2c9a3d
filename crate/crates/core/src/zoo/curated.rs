//! Known results about the zoo spaces, each either replayed through the
//! claim checker or marked as assumed.

use serde::Serialize;

use super::claim::{strong_d_transfer, verify_claim, Claim, FamilySpec, SequenceSpec, Witness};
use super::ZooSpaceId::{self, *};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Verified,
    Assumed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuratedEntry {
    pub id: &'static str,
    pub space: ZooSpaceId,
    pub description: &'static str,
    pub status: Status,
    /// The certificate replayed for a verified entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim: Option<Claim>,
    /// Entries this one is derived from.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub premises: Vec<&'static str>,
    /// Why an assumed entry is not checked.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<&'static str>,
}

fn family(member: &str, start: u64) -> FamilySpec {
    FamilySpec { parameter: "n".into(), start, member: member.into(), sample_bound: 100 }
}

fn not_strong_d(space: ZooSpaceId, d: &str, x: &str) -> Claim {
    Claim {
        space,
        witness: Witness::NotStrongD {
            sequence: SequenceSpec { parameter: "n".into(), start: 1, point: d.into(), sample_bound: 100 },
            point: x.into(),
            open: "EMPTY".into(),
        },
    }
}

fn not_sober(space: ZooSpaceId) -> Claim {
    Claim { space, witness: Witness::NotSober { closed: "ALL".into() } }
}

/// Certificates shipped under `claims/`, keyed by file stem.
pub fn shipped_claims() -> Vec<(&'static str, Claim)> {
    vec![
        (
            "cofinite-not-well-filtered",
            Claim {
                space: CofiniteNat,
                witness: Witness::NotWellFiltered { family: family("COFIN(0..n)", 0), open: "EMPTY".into() },
            },
        ),
        (
            "cofinite-rudin-member",
            Claim {
                space: CofiniteNat,
                witness: Witness::RudinMember { closed: "ALL".into(), family: family("COFIN(0..n)", 0) },
            },
        ),
        ("cofinite-irr-fragment", Claim { space: CofiniteNat, witness: Witness::IrrFragment { bound: 10 } }),
        ("cocountable-not-sober", not_sober(Cocountable)),
        ("johnstone-upper-not-strong-d", not_strong_d(JohnstoneUpper, "(1,n)", "(2,2)")),
        ("johnstone-scott-not-strong-d", not_strong_d(JohnstoneScott, "(1,n)", "(2,2)")),
        ("johnstone-scott-not-sober", not_sober(JohnstoneScott)),
        ("ex334-upper-not-strong-d", not_strong_d(Ex334Upper, "a(n)", "b")),
        ("ex334-scott-not-strong-d", not_strong_d(Ex334Scott, "a(n)", "b")),
        (
            "ex334-scott-not-coherent",
            Claim {
                space: Ex334Scott,
                witness: Witness::NotCoherent {
                    k1: "UP(a(1))".into(),
                    k2: "UP(b)".into(),
                    cover: family("W_PT(n)", 1),
                },
            },
        ),
    ]
}

fn shipped(id: &str) -> Claim {
    shipped_claims().into_iter().find(|(k, _)| *k == id).map(|(_, c)| c).unwrap()
}

fn verified(id: &'static str, description: &'static str) -> CuratedEntry {
    let claim = shipped(id);
    CuratedEntry { id, space: claim.space, description, status: Status::Verified, claim: Some(claim), premises: vec![], basis: None }
}

fn transferred(id: &'static str, from: &'static str, finer: ZooSpaceId, description: &'static str) -> CuratedEntry {
    CuratedEntry {
        id,
        space: finer,
        description,
        status: Status::Verified,
        claim: None,
        premises: vec![from],
        basis: None,
    }
}

fn assumed(id: &'static str, space: ZooSpaceId, description: &'static str, basis: &'static str) -> CuratedEntry {
    CuratedEntry { id, space, description, status: Status::Assumed, claim: None, premises: vec![], basis: Some(basis) }
}

fn all_entries() -> Vec<CuratedEntry> {
    vec![
        verified("cofinite-not-well-filtered", "not well-filtered"),
        verified("cofinite-rudin-member", "X ∈ RD(X)"),
        verified("cofinite-irr-fragment", "Irr_c(X) is {X} plus the singletons"),
        verified("cocountable-not-sober", "not sober"),
        assumed(
            "cocountable-well-filtered",
            Cocountable,
            "well-filtered",
            "quantifies over all filtered families of an uncountable space",
        ),
        assumed(
            "cocountable-wd-rd-sc",
            Cocountable,
            "WD(X) = RD(X) = S_c(X)",
            "quantifies over all filtered families of an uncountable space",
        ),
        verified("johnstone-upper-not-strong-d", "not a strong d-space"),
        verified("johnstone-scott-not-strong-d", "not a strong d-space"),
        transferred(
            "johnstone-scott-not-strong-d-transfer",
            "johnstone-upper-not-strong-d",
            JohnstoneScott,
            "not a strong d-space (transferred from the upper topology)",
        ),
        verified("johnstone-scott-not-sober", "not sober"),
        assumed(
            "johnstone-scott-not-well-filtered",
            JohnstoneScott,
            "not well-filtered",
            "no witness family is available to check",
        ),
        verified("ex334-upper-not-strong-d", "not a strong d-space"),
        verified("ex334-scott-not-strong-d", "not a strong d-space"),
        transferred(
            "ex334-scott-not-strong-d-transfer",
            "ex334-upper-not-strong-d",
            Ex334Scott,
            "not a strong d-space (transferred from the upper topology)",
        ),
        verified("ex334-scott-not-coherent", "not coherent"),
        assumed("ex334-scott-sober", Ex334Scott, "sober", "needs irreducibility of arbitrary closed sets"),
        assumed(
            "ex334-continuous-dcpo",
            Ex334Scott,
            "P is a continuous dcpo",
            "way-below relation is outside the set algebra",
        ),
    ]
}

/// Replays every verified entry, then returns the rows for `id`.
///
/// Fails if a verified entry does not replay, or rests on an assumed one.
pub fn curated_results(id: ZooSpaceId) -> Result<Vec<CuratedEntry>> {
    let entries = all_entries();
    let status = |name: &str| entries.iter().find(|e| e.id == name).map(|e| e.status);
    for e in entries.iter().filter(|e| e.space == id && e.status == Status::Verified) {
        for p in &e.premises {
            match status(p) {
                Some(Status::Verified) => {}
                s => {
                    return Err(Error::InvariantViolated(format!(
                        "{} rests on {p}, which is {s:?}",
                        e.id
                    )))
                }
            }
        }
        let replay = match (&e.claim, e.premises.as_slice()) {
            (Some(c), _) => verify_claim(c)?,
            (None, [from]) => {
                let src = shipped(from);
                verify_claim(&strong_d_transfer(&src, e.space)?.claim)?
            }
            _ => return Err(Error::InvariantViolated(format!("{} has no certificate", e.id))),
        };
        if !replay.is_verified() {
            return Err(Error::InvariantViolated(format!("{} does not replay: {replay}", e.id)));
        }
    }
    Ok(entries.into_iter().filter(|e| e.space == id).collect())
}
