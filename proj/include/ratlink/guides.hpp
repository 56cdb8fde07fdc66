#pragma once

#include "ratlink/bigint.hpp"
#include "ratlink/mat3.hpp"

namespace ratlink {

/// The per-step role assignment of the three strings: which string leads the
/// current twist region (principal), which follows it (secondary), and which
/// sits out (idle). Always a permutation of {1,2,3}; step 1 is the identity.
struct GuideState {
    int n = 1;          // step index
    int principal = 1;  // string crossing over at the twist's first crossing
    int secondary = 2;  // string crossing under at the twist's first crossing
    int idle = 3;       // string not touched in this step

    static GuideState initial() { return GuideState{}; }

    bool valid() const {
        int seen = 0;
        for (int s : {principal, secondary, idle}) {
            if (s < 1 || s > 3) return false;
            seen |= 1 << s;
        }
        return seen == 0b1110 && n >= 1;
    }

    friend bool operator==(const GuideState&, const GuideState&) = default;
};

/// The update matrix of one step: its only non-zero entries sit at the four
/// guide positions, with column sums a (principal column) and a-1 (secondary).
using ChangeMatrix = Mat3;

/// Next step's roles. The new principal is always the previously idle string;
/// whether the old principal or the old secondary goes idle depends on the
/// parity of the twist just absorbed.
GuideState advance_guides(const GuideState& state, const BigInt& a);

/// Change matrix built entry-by-entry at the guide positions.
ChangeMatrix change_matrix(const GuideState& state, const BigInt& a);

/// Same matrix via the base pattern conjugated by the permutation matrix of
/// the state. Kept as a second, independent route for cross-checking.
ChangeMatrix change_matrix_conjugated(const GuideState& state, const BigInt& a);

/// Permutation matrix P with P(state(r), r) = 1, mapping position r to the
/// string playing role r (roles ordered principal, secondary, idle).
Mat3 permutation_matrix(const GuideState& state);

}  // namespace ratlink
