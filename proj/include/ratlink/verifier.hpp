#pragma once

#include <array>
#include <string>
#include <vector>

#include "ratlink/bigint.hpp"
#include "ratlink/engine.hpp"

namespace ratlink {

/// The six identity families checked on a trace. Each one recovers some
/// quantity of the trace from a different part of it, so a corrupted step
/// cannot slip through all of them.
enum class Lemma { difij, corsn, snminus1, dk, twodk, propsum };

const char* lemma_name(Lemma lemma);

/// Outcome of one identity at one step and column. Both sides are kept so a
/// failure pinpoints the first divergent value; pass means lhs == rhs exactly.
/// There is intentionally no tolerance anywhere in this module.
struct LemmaReport {
    Lemma lemma = Lemma::difij;
    int n = 0;   // step index the identity is anchored at
    int t = 0;   // column, 1..3
    bool pass = false;
    BigInt lhs;
    BigInt rhs;
};

// All checks below evaluate their identity with local arithmetic on the
// given matrices and sums only. They never call back into the engine, so a
// bug there cannot cancel out of both sides.

/// Row difference across one step: the gap between the two guide rows of the
/// post-step tally is, up to the sign given by the parity of a, the sum of
/// those rows before the step plus a parity-selected corner term.
std::array<LemmaReport, 3> check_difij(const DataMatrix& D, const DataMatrix& D_next,
                                       const GuideState& guides_next, const BigInt& a, int n);

/// Recovers the pre-step column sums from the post-step tally alone and
/// compares them with the expected sums.
std::array<LemmaReport, 3> check_sn(const DataMatrix& D_next, const GuideState& guides_next,
                                    const BigInt& a, const ColumnSums& s_expected, int n);

/// Recovers the column sums of two steps back from the current tally.
std::array<LemmaReport, 3> check_snminus1(const DataMatrix& D, const GuideState& guides_next,
                                          const ColumnSums& s_prev_expected, int n);

/// Internal row redundancy: the idle-to-be row is determined by the other two
/// rows plus parity corrections.
std::array<LemmaReport, 3> check_dk(const DataMatrix& D, const GuideState& guides_next, int n);

/// Column sums from the idle-to-be row alone; compared against the sums
/// computed column-wise from D.
std::array<LemmaReport, 3> check_2dk(const DataMatrix& D, const GuideState& guides_next, int n);

/// Three-term recurrence of the column sums, in both its raw form (using the
/// tally entries) and, for n >= 1, its reduced form (using s_{n-1} and a
/// parity term only). Both routes must reproduce s_{n+1} exactly.
std::array<LemmaReport, 3> check_propsum(const ColumnSums& s_n, const ColumnSums& s_prev,
                                         const ColumnSums& s_next, const BigInt& a,
                                         const DataMatrix& D, const GuideState& guides_next,
                                         int n);

/// Runs every family over a whole trace: one check per family per step.
/// For the checks anchored past the last step the guide state is advanced
/// once beyond the end, which only needs the final term's parity.
std::vector<LemmaReport> verify_trace(const TransformTrace& trace);

bool all_pass(const std::vector<LemmaReport>& reports);

}  // namespace ratlink
