#include "ratlink/guides.hpp"

#include <stdexcept>

namespace ratlink {

GuideState advance_guides(const GuideState& state, const BigInt& a) {
    if (!state.valid()) throw std::invalid_argument("invalid guide state");
    if (a < 1) throw std::domain_error("twist size must be positive");
    GuideState next;
    next.n = state.n + 1;
    next.principal = state.idle;
    if (parity(a) == 0) {
        next.secondary = state.secondary;
        next.idle = state.principal;
    } else {
        next.secondary = state.principal;
        next.idle = state.secondary;
    }
    return next;
}

ChangeMatrix change_matrix(const GuideState& state, const BigInt& a) {
    if (!state.valid()) throw std::invalid_argument("invalid guide state");
    if (a < 1) throw std::domain_error("twist size must be positive");
    const int i = state.principal, j = state.secondary;
    ChangeMatrix m;
    m.at(i, i) = floor_half(a);
    m.at(i, j) = ceil_half(a - 1);
    m.at(j, i) = ceil_half(a);
    m.at(j, j) = floor_half(a - 1);
    return m;
}

Mat3 permutation_matrix(const GuideState& state) {
    Mat3 p;
    p.at(state.principal, 1) = 1;
    p.at(state.secondary, 2) = 1;
    p.at(state.idle, 3) = 1;
    return p;
}

ChangeMatrix change_matrix_conjugated(const GuideState& state, const BigInt& a) {
    ChangeMatrix base = change_matrix(GuideState::initial(), a);
    Mat3 p = permutation_matrix(state);
    return p * base * p.transposed();
}

}  // namespace ratlink
