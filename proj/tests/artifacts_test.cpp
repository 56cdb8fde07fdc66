#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "ratlink/engine.hpp"
#include "ratlink/render.hpp"
#include "ratlink/trace_io.hpp"
#include "testutil.hpp"

using namespace ratlink;
using namespace ratlink::testutil;

namespace {

int crossing_count(const std::string& svg) { return count_occurrences(svg, "class=\"crossing\""); }

// data-over of the first crossing of each twist region, in order
std::vector<int> first_over_strings(const std::string& svg, std::size_t tangles) {
    std::vector<int> out;
    for (std::size_t n = 1; n <= tangles; ++n) {
        std::string anchor = "data-tangle=\"" + std::to_string(n) + "\" data-index=\"1\"";
        auto pos = svg.find(anchor);
        REQUIRE(pos != std::string::npos);
        auto over = svg.find("data-over=\"", pos);
        REQUIRE(over != std::string::npos);
        out.push_back(svg[over + 11] - '0');
    }
    return out;
}

}  // namespace

TEST_CASE("twist-region diagram carries one tagged group per crossing") {
    auto svg = render_conway(DiagramSpec::for_conway(cf({1, 2, 2})));
    CHECK(crossing_count(svg) == 5);
    CHECK(svg.find("data-kind=\"odd-m\"") != std::string::npos);

    auto one = render_conway(DiagramSpec::for_conway(cf({1})));
    CHECK(crossing_count(one) == 1);

    auto four = render_conway(DiagramSpec::for_conway(cf({2, 5, 4, 1})));
    CHECK(crossing_count(four) == 12);
    CHECK(four.find("data-kind=\"even-m\"") != std::string::npos);
    // odd positions draw the negative twists
    CHECK(four.find("data-tangle=\"1\" data-index=\"1\" data-sign=\"negative\"") !=
          std::string::npos);
    CHECK(four.find("data-tangle=\"2\" data-index=\"1\" data-sign=\"positive\"") !=
          std::string::npos);
}

TEST_CASE("the string crossing over first in each twist is the principal guide") {
    std::mt19937_64 rng(2025);
    for (int run = 0; run < 25; ++run) {
        auto f = random_cf(rng, 8, 6);
        auto svg = render_conway(DiagramSpec::for_conway(f));
        auto overs = first_over_strings(svg, f.length());
        TransformTrace trace = transform(f);
        for (std::size_t n = 0; n < f.length(); ++n)
            CHECK(overs[n] == trace.steps[n].guides.principal);
    }
}

TEST_CASE("rendering is deterministic") {
    auto spec = DiagramSpec::for_conway(cf({3, 1, 4}));
    CHECK(render_conway(spec) == render_conway(spec));
    auto spec2 = DiagramSpec::for_schubert(normalize(11, 4));
    CHECK(render_schubert(spec2) == render_schubert(spec2));
}

TEST_CASE("two-bridge diagram counts and metadata") {
    auto svg = render_schubert(DiagramSpec::for_schubert(normalize(7, 3)));
    CHECK(crossing_count(svg) == 12);
    CHECK(svg.find("data-p=\"7\"") != std::string::npos);
    CHECK(svg.find("data-q=\"3\"") != std::string::npos);
    CHECK(svg.find("data-pos=\"3\" data-first-alpha-under-beta=\"true\"") != std::string::npos);
    CHECK(count_occurrences(svg, "data-first-alpha-under-beta") == 1);

    CHECK(crossing_count(render_schubert(DiagramSpec::for_schubert(normalize(2, 1)))) == 2);
    CHECK(crossing_count(render_schubert(DiagramSpec::for_schubert(normalize(57, 26)))) == 112);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(render_conway(DiagramSpec::for_conway(ContinuedFraction{})),
                    std::domain_error);
    CHECK_THROWS_AS(render_schubert(DiagramSpec::for_schubert(normalize(1, 0))),
                    std::domain_error);
    auto wrong_kind = DiagramSpec::for_conway(cf({1, 2}));
    CHECK_THROWS_AS(render_schubert(wrong_kind), std::invalid_argument);
    auto bad_style = DiagramSpec::for_conway(cf({1, 2}));
    bad_style.style.gap = 0;
    CHECK_THROWS_AS(render_conway(bad_style), std::invalid_argument);
}

TEST_CASE("json traces round-trip losslessly") {
    std::mt19937_64 rng(606);
    for (int run = 0; run < 30; ++run) {
        TransformTrace trace = transform(random_cf(rng, 10, 9));
        TransformTrace back = parse_trace(emit_trace(trace, TraceFormat::json));
        CHECK(back == trace);
    }
    // big values survive as decimal strings
    std::vector<BigInt> terms(64, BigInt(9));
    TransformTrace big = transform(ContinuedFraction{terms});
    CHECK(parse_trace(emit_trace(big, TraceFormat::json)) == big);

    CHECK_THROWS_AS(parse_trace("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_trace("{\"input\":[]}"), std::invalid_argument);
}

TEST_CASE("json trace records the final presentation") {
    auto doc = emit_trace(transform(cf({1, 2, 2})), TraceFormat::json);
    CHECK(doc.find("\"p\": \"7\"") != std::string::npos);
    CHECK(doc.find("\"q\": \"5\"") != std::string::npos);
    CHECK(doc.find("\"rule\": \"odd-m-kink\"") != std::string::npos);
}

TEST_CASE("markdown trace reproduces the worked table row for row") {
    auto doc = emit_trace(transform(cf({2, 5, 4, 1})), TraceFormat::markdown);
    const std::string expected =
        "| n | a_n | i_n | j_n | M_n | D_n | p_n | q_n |\n"
        "|---|-----|-----|-----|-----|-----|-----|-----|\n"
        "| 1 | 2 | 1 | 2 | [[1,1,0],[1,0,0],[0,0,0]] | [[1,1,0],[1,0,0],[0,0,0]] | 2 | 1 |\n"
        "| 2 | 5 | 3 | 2 | [[0,0,0],[0,2,3],[0,2,2]] | [[1,1,0],[5,2,3],[4,2,2]] | 11 | 5 |\n"
        "| 3 | 4 | 1 | 3 | [[2,0,2],[0,0,0],[2,0,1]] | [[23,13,10],[5,2,3],[18,10,7]] | 46 | 21 "
        "|\n"
        "| 4 | 1 | 2 | 3 | [[0,0,0],[0,0,0],[0,1,0]] | [[23,13,10],[5,2,3],[28,15,13]] | 57 | 26 "
        "|\n"
        "\nfinal: 57/26 (even-m)\n";
    CHECK(doc == expected);

    auto single = emit_trace(transform(cf({4})), TraceFormat::markdown);
    CHECK(count_occurrences(single, "\n| ") == 1);
}

TEST_CASE("csv trace mirrors the table columns") {
    auto doc = emit_trace(transform(cf({2, 5, 4, 1})), TraceFormat::csv);
    CHECK(doc.rfind("n,a_n,i_n,j_n,M_n,D_n,p_n,q_n\n", 0) == 0);
    CHECK(doc.find("1,2,1,2,1 1 0 1 0 0 0 0 0,1 1 0 1 0 0 0 0 0,2,1\n") != std::string::npos);
    CHECK(doc.find("4,1,2,3,0 0 0 0 0 0 0 1 0,23 13 10 5 2 3 28 15 13,57,26\n") !=
          std::string::npos);
}

TEST_CASE("convergents serialize with decimal strings") {
    auto doc = convergents_to_json(convergents(cf({2, 5, 4, 1})));
    CHECK(doc.find("\"n\": 0") != std::string::npos);
    CHECK(doc.find("\"p\": \"57\"") != std::string::npos);
    CHECK(doc.find("\"q\": \"26\"") != std::string::npos);
}

TEST_CASE("verifier reports serialize") {
    TransformTrace trace = transform(cf({1, 2, 2}));
    auto doc = reports_to_json(verify_trace(trace));
    CHECK(doc.find("\"lemma\": \"difij\"") != std::string::npos);
    CHECK(doc.find("\"pass\": true") != std::string::npos);
}
