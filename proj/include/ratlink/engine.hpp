#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "ratlink/bigint.hpp"
#include "ratlink/contfrac.hpp"
#include "ratlink/guides.hpp"
#include "ratlink/mat3.hpp"
#include "ratlink/schubert.hpp"

namespace ratlink {

/// Running tally of undercrossings: entry (r,t) counts how many times string
/// r passes under string t. Starts at zero; entries never decrease, and the
/// idle string's row is carried over unchanged at every step.
using DataMatrix = Mat3;

/// Column sums (s_1, s_2, s_3) of a DataMatrix; index 0 holds column 1.
using ColumnSums = std::array<BigInt, 3>;

/// Everything recorded about one step of the transformation.
struct StepRecord {
    int n = 0;            // step index, 1-based
    BigInt a;             // size of the twist region absorbed in this step
    GuideState guides;    // roles during this step
    ChangeMatrix M;       // update matrix of this step
    DataMatrix D;         // tally after this step
    ColumnSums s{};       // column sums of D
    int mu = 0;           // parity of n
    BigInt p;             // s_1 + 1 - mu
    BigInt q;             // s_3 + mu

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// Which reading of the last tally produced the final presentation: the even
/// length case reads it directly, the odd length case first removes the kink
/// the construction leaves behind (one fewer crossing under the left bridge,
/// first-crossing position shifted by one).
enum class FinalRule { even_m, odd_m_kink };

struct TransformTrace {
    ContinuedFraction input;
    std::vector<StepRecord> steps;
    BridgePresentation final;
    FinalRule rule = FinalRule::even_m;

    friend bool operator==(const TransformTrace&, const TransformTrace&) = default;
};

/// One step of the tally recurrence: D' = 2 M D + D + M, exact.
DataMatrix step(const DataMatrix& D, const ChangeMatrix& M);

/// The same step computed entry-by-entry from the per-string crossing counts
/// (idle row copied; guide rows updated with the floor/ceil coefficient
/// pattern plus the end-of-string additions). Must agree with step() exactly;
/// the two are kept as independent code paths on purpose.
DataMatrix step_scalar(const DataMatrix& D, const GuideState& guides, const BigInt& a);

ColumnSums column_sums(const DataMatrix& D);

/// Presentation numbers at step n: p = s_1 + 1 - mu(n), q = s_3 + mu(n).
std::pair<BigInt, BigInt> pq_at_step(const ColumnSums& s, int n);

/// Runs the whole transformation and records one StepRecord per term.
/// The final presentation is extracted by parity of the length and checked
/// against pq_at_step before being returned. The empty fraction is refused
/// unless allow_empty is set, in which case the trace has no steps and the
/// final presentation is the trivial 1/0.
TransformTrace transform(const ContinuedFraction& cf, bool allow_empty = false);

}  // namespace ratlink
