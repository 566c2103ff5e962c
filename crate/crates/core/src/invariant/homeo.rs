//! Consistency checks across homeomorphic lens spaces.
//!
//! `L(m, n) ≅ L(m, n')` when `n n' ≡ 1 (mod m)`, so `F` must agree on the
//! pair. `L(m, m - n)` is the orientation reversal of `L(m, n)`, which
//! conjugates `F` and therefore leaves `∇` unchanged.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::cyclo::CycNum;
use crate::Result;

use super::{Engine, LensSpec, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum HomeoKind {
    /// `F(L(m, n)) = F(L(m, n'))`.
    InverseN,
    /// `∇(L(m, n)) = ∇(L(m, m - n))`.
    Reversal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomeoCheck {
    pub kind: HomeoKind,
    pub left: LensSpec,
    pub right: LensSpec,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomeoReport {
    pub checks: Vec<HomeoCheck>,
}

impl HomeoReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &HomeoCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Every `L(m, n)` with `m ≤ m_max` against its `n'` and `m - n` partners.
pub fn homeo_suite(engine: &Engine, m_max: i64, strategy: Strategy) -> Result<HomeoReport> {
    let mut cache: BTreeMap<LensSpec, (CycNum, CycNum)> = BTreeMap::new();
    for spec in LensSpec::all_up_to(m_max) {
        let r = engine.lens_invariant(spec, strategy)?;
        cache.insert(spec, (r.f, r.nabla));
    }
    let mut report = HomeoReport::default();
    for (&spec, (f, nabla)) in &cache {
        let inv = LensSpec::new(spec.m(), spec.inverse_n())?;
        if inv > spec {
            report.checks.push(HomeoCheck {
                kind: HomeoKind::InverseN,
                left: spec,
                right: inv,
                passed: *f == cache[&inv].0,
            });
        }
        let rev = spec.reversed();
        if rev > spec {
            report.checks.push(HomeoCheck {
                kind: HomeoKind::Reversal,
                left: spec,
                right: rev,
                passed: *nabla == cache[&rev].1,
            });
        }
    }
    Ok(report)
}
