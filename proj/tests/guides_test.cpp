#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ratlink/guides.hpp"
#include "testutil.hpp"

using namespace ratlink;
using namespace ratlink::testutil;

TEST_CASE("advance follows the parity rule") {
    // odd twist: old principal becomes secondary
    CHECK(advance_guides(guide(1, 1, 2, 3), 1) == guide(2, 3, 1, 2));
    // even twist: secondary stays
    CHECK(advance_guides(guide(1, 1, 2, 3), 2) == guide(2, 3, 2, 1));
    CHECK(advance_guides(guide(2, 3, 2, 1), 5) == guide(3, 1, 3, 2));
    CHECK(advance_guides(guide(3, 1, 3, 2), 4) == guide(4, 2, 3, 1));
    CHECK(advance_guides(guide(4, 2, 3, 1), 1) == guide(5, 1, 2, 3));
}

TEST_CASE("change matrix holds the four-entry block at the guide positions") {
    CHECK(change_matrix(guide(2, 3, 2, 1), 5) == mat({{{0, 0, 0}, {0, 2, 3}, {0, 2, 2}}}));
    CHECK(change_matrix(guide(3, 1, 3, 2), 4) == mat({{{2, 0, 2}, {0, 0, 0}, {2, 0, 1}}}));
    CHECK(change_matrix(guide(1, 1, 2, 3), 1) == mat({{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}}));
    CHECK(change_matrix(guide(4, 2, 3, 1), 1) == mat({{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}}));
}

TEST_CASE("conjugated route reproduces the direct construction") {
    // the identity state conjugates by the identity
    for (int a = 1; a <= 9; ++a)
        CHECK(change_matrix_conjugated(guide(1, 1, 2, 3), a) ==
              change_matrix(guide(1, 1, 2, 3), a));
    CHECK(change_matrix_conjugated(guide(2, 3, 2, 1), 5) ==
          mat({{{0, 0, 0}, {0, 2, 3}, {0, 2, 2}}}));
    CHECK(change_matrix_conjugated(guide(2, 2, 3, 1), 3) == change_matrix(guide(2, 2, 3, 1), 3));
}

TEST_CASE("both routes agree on all states and small twist sizes") {
    const std::vector<GuideState> states = {guide(1, 1, 2, 3), guide(1, 1, 3, 2),
                                            guide(1, 2, 1, 3), guide(1, 2, 3, 1),
                                            guide(1, 3, 1, 2), guide(1, 3, 2, 1)};
    int cases = 0;
    for (const auto& st : states)
        for (int a = 1; a <= 9; ++a) {
            ChangeMatrix direct = change_matrix(st, a);
            CHECK(direct == change_matrix_conjugated(st, a));
            // column sums: a under the principal, a-1 under the secondary,
            // nothing under the idle string
            BigInt ci = direct.at(1, st.principal) + direct.at(2, st.principal) +
                        direct.at(3, st.principal);
            BigInt cj = direct.at(1, st.secondary) + direct.at(2, st.secondary) +
                        direct.at(3, st.secondary);
            BigInt ck = direct.at(1, st.idle) + direct.at(2, st.idle) + direct.at(3, st.idle);
            CHECK(ci == a);
            CHECK(cj == a - 1);
            CHECK(ck == 0);
            ++cases;
        }
    CHECK(cases == 54);
}

TEST_CASE("trajectories stay permutations and rotate the idle string in") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> term(1, 9);
    for (int run = 0; run < 100; ++run) {
        GuideState g = GuideState::initial();
        for (int s = 0; s < 20; ++s) {
            int a = term(rng);
            GuideState next = advance_guides(g, a);
            CHECK(next.valid());
            CHECK(next.principal == g.idle);
            CHECK(next.n == g.n + 1);
            g = next;
        }
    }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(advance_guides(GuideState{1, 1, 1, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(change_matrix(guide(1, 1, 2, 3), 0), std::domain_error);
}
