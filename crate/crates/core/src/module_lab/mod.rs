//! Finite modules over the integral group ring of the Klein four-group:
//! validation, exhaustive checks and enumeration.

mod enumerate;
mod module;

use rayon::prelude::*;

pub use enumerate::{
    abelian_groups, enumerate_modules, enumerate_modules_exhaustive, factorize, Dedup, ModuleStream,
};
pub use module::{
    check_implication, check_kernel_equality, check_qh90, verify_theorem3, verify_theorem3_bounded,
    FiniteKleinModule, KernelComparison, ModuleTables, Theorem3Report, Verdict,
    DEFAULT_MAX_ELEMENTS,
};

use crate::error::Result;

/// One module together with the outcome of its checks.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub module: FiniteKleinModule,
    pub report: Result<Theorem3Report>,
}

/// Tallies over a sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub modules: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub errors: usize,
    /// Modules where `ker(1−σ1) + ker(1−σ2) ⊆ ker((1−σ1)(1−σ2))` failed.
    pub inclusion_failures: usize,
    /// Modules satisfying QH90 on which the kernel equality fails.
    pub kernel_eq_fails_with_qh90: usize,
    /// Modules failing QH90 on which the kernel equality still holds.
    pub kernel_eq_holds_without_qh90: usize,
}

impl SweepSummary {
    pub fn tally<'a>(entries: impl IntoIterator<Item = &'a SweepEntry>) -> Self {
        let mut s = SweepSummary::default();
        for e in entries {
            s.modules += 1;
            match &e.report {
                Err(_) => s.errors += 1,
                Ok(r) => {
                    match r.verdict {
                        Verdict::Pass => s.pass += 1,
                        Verdict::Fail => s.fail += 1,
                        Verdict::Skipped => s.skipped += 1,
                    }
                    if !r.inclusion {
                        s.inclusion_failures += 1;
                    }
                    let qh90 = r.qh90 == [true, true];
                    if qh90 && !r.kernel_eq {
                        s.kernel_eq_fails_with_qh90 += 1;
                    }
                    if !qh90 && r.kernel_eq {
                        s.kernel_eq_holds_without_qh90 += 1;
                    }
                }
            }
        }
        s
    }
}

/// Checks every module of order `≤ max_order` in parallel. Results keep the
/// enumeration order, so output is deterministic.
pub fn sweep(max_order: u64, max_elements: u64) -> Vec<SweepEntry> {
    let modules: Vec<FiniteKleinModule> = enumerate_modules(max_order).collect();
    modules
        .into_par_iter()
        .map(|module| {
            let report = verify_theorem3_bounded(&module, max_elements);
            SweepEntry { module, report }
        })
        .collect()
}
