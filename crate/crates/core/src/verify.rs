//! One-call audit of a construction instance: ledger verdict, exact
//! accounting, bounds, and table fidelity, with claimed and computed
//! values side by side.

use serde::Serialize;

use crate::bounds::{bound_report, BoundReport};
use crate::error::Result;
use crate::ledger::{build_ledger, count_totals, n_t_by_summation, Totals, Verdict};
use crate::params::{Mode, Params};
use crate::table::{table_fidelity, TableFidelityReport};

pub const REPORT_SCHEMA_VERSION: &str = "1";

/// Everything needed to audit one instance.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub schema_version: &'static str,
    pub params: Params,
    pub totals: Totals,
    /// Claimed edge gain for the mode: `36t` strict, `36t - 2` simple.
    pub expected_edge_gain: u128,
    pub edge_gain: u128,
    pub edge_gain_ok: bool,
    pub expected_cycle_rank: u128,
    pub cycle_rank_ok: bool,
    /// The closed form `540t^2 + (175811/2)t + 7989/2`.
    pub n_t_closed_form: u128,
    /// Strict-mode vertex total at tail length zero, by summation.
    pub n_t_summed: u128,
    pub n_t_ok: bool,
    pub vertices_equal_n: bool,
    pub ledger_entries: u64,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub bound: BoundReport,
    pub table: TableFidelityReport,
    /// Exit gate: ledger distinct and the edge-gain identity holds.
    pub passed: bool,
}

pub fn verify(params: &Params) -> Result<VerificationReport> {
    let totals = count_totals(params)?;
    let ledger = build_ledger(params)?;
    let expected_edge_gain: u128 = match params.mode {
        Mode::Strict => 36 * params.t as u128,
        Mode::Simple => 36 * params.t as u128 - 2,
    };
    let edge_gain = totals.edges - totals.vertices;
    let edge_gain_ok = edge_gain == expected_edge_gain;
    let expected_cycle_rank = expected_edge_gain + 1;
    let cycle_rank_ok = totals.cycle_rank == expected_cycle_rank;
    let n_t_summed = n_t_by_summation(params.t)?;
    let n_t_ok = n_t_summed == params.n_t;
    let table = table_fidelity();
    let passed = ledger.verdict.is_distinct() && edge_gain_ok;
    Ok(VerificationReport {
        schema_version: REPORT_SCHEMA_VERSION,
        params: *params,
        totals,
        expected_edge_gain,
        edge_gain,
        edge_gain_ok,
        expected_cycle_rank,
        cycle_rank_ok,
        n_t_closed_form: params.n_t,
        n_t_summed,
        n_t_ok,
        vertices_equal_n: totals.vertices == params.n,
        ledger_entries: ledger.entries.len() as u64,
        verdict: ledger.verdict,
        bound: bound_report(params),
        table,
        passed,
    })
}
