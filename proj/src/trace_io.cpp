#include "ratlink/trace_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace ratlink {

namespace {

using json = nlohmann::ordered_json;

// Big integers travel as decimal strings; native JSON numbers would silently
// lose precision past 2^53 in most consumers.
json big_to_json(const BigInt& v) { return v.str(); }

// Terms are emitted as plain numbers when they fit, per the documented
// schema; the parser accepts both forms.
json term_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt big_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    throw std::invalid_argument("expected an integer or decimal string");
}

json mat_to_json(const Mat3& m) {
    json rows = json::array();
    for (int r = 1; r <= 3; ++r) {
        json row = json::array();
        for (int t = 1; t <= 3; ++t) row.push_back(big_to_json(m.at(r, t)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat3 mat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("matrix must have 3 rows");
    Mat3 m;
    for (int r = 1; r <= 3; ++r) {
        const json& row = j[r - 1];
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("matrix row must have 3 entries");
        for (int t = 1; t <= 3; ++t) m.at(r, t) = big_from_json(row[t - 1]);
    }
    return m;
}

const char* rule_name(FinalRule rule) {
    return rule == FinalRule::even_m ? "even-m" : "odd-m-kink";
}

FinalRule rule_from_name(const std::string& name) {
    if (name == "even-m") return FinalRule::even_m;
    if (name == "odd-m-kink") return FinalRule::odd_m_kink;
    throw std::invalid_argument("unknown final rule: " + name);
}

json trace_to_json(const TransformTrace& trace) {
    json root;
    json input = json::array();
    for (const auto& a : trace.input.terms()) input.push_back(term_to_json(a));
    root["input"] = std::move(input);

    json steps = json::array();
    for (const auto& st : trace.steps) {
        json s;
        s["n"] = st.n;
        s["a_n"] = term_to_json(st.a);
        s["guides"] = {{"n", st.guides.n},
                       {"i", st.guides.principal},
                       {"j", st.guides.secondary},
                       {"k", st.guides.idle}};
        s["M"] = mat_to_json(st.M);
        s["D"] = mat_to_json(st.D);
        s["s"] = json::array({big_to_json(st.s[0]), big_to_json(st.s[1]), big_to_json(st.s[2])});
        s["p_n"] = big_to_json(st.p);
        s["q_n"] = big_to_json(st.q);
        steps.push_back(std::move(s));
    }
    root["steps"] = std::move(steps);

    root["final"] = {{"p", big_to_json(trace.final.p)},
                     {"q", big_to_json(trace.final.q)},
                     {"rule", rule_name(trace.rule)},
                     {"degenerate", trace.final.degenerate}};
    return root;
}

}  // namespace

std::string emit_trace(const TransformTrace& trace, TraceFormat format) {
    switch (format) {
        case TraceFormat::json:
            return trace_to_json(trace).dump(2) + "\n";
        case TraceFormat::csv: {
            std::string out = "n,a_n,i_n,j_n,M_n,D_n,p_n,q_n\n";
            for (const auto& st : trace.steps) {
                auto flat = [](const Mat3& m) {
                    std::string s;
                    for (int r = 1; r <= 3; ++r)
                        for (int t = 1; t <= 3; ++t) {
                            if (!s.empty()) s += " ";
                            s += m.at(r, t).str();
                        }
                    return s;
                };
                out += std::to_string(st.n) + "," + st.a.str() + "," +
                       std::to_string(st.guides.principal) + "," +
                       std::to_string(st.guides.secondary) + "," + flat(st.M) + "," +
                       flat(st.D) + "," + st.p.str() + "," + st.q.str() + "\n";
            }
            return out;
        }
        case TraceFormat::markdown: {
            std::string out = "| n | a_n | i_n | j_n | M_n | D_n | p_n | q_n |\n";
            out += "|---|-----|-----|-----|-----|-----|-----|-----|\n";
            for (const auto& st : trace.steps) {
                out += "| " + std::to_string(st.n) + " | " + st.a.str() + " | " +
                       std::to_string(st.guides.principal) + " | " +
                       std::to_string(st.guides.secondary) + " | " + st.M.to_string() + " | " +
                       st.D.to_string() + " | " + st.p.str() + " | " + st.q.str() + " |\n";
            }
            out += "\nfinal: " + trace.final.to_string() + " (" + rule_name(trace.rule) + ")\n";
            return out;
        }
    }
    throw std::invalid_argument("unknown trace format");
}

TransformTrace parse_trace(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad trace document: ") + e.what());
    }
    try {
        TransformTrace trace;
        std::vector<BigInt> terms;
        for (const auto& t : root.at("input")) terms.push_back(big_from_json(t));
        trace.input = ContinuedFraction(std::move(terms));

        for (const auto& s : root.at("steps")) {
            StepRecord rec;
            rec.n = s.at("n").get<int>();
            rec.a = big_from_json(s.at("a_n"));
            const auto& g = s.at("guides");
            rec.guides.n = g.at("n").get<int>();
            rec.guides.principal = g.at("i").get<int>();
            rec.guides.secondary = g.at("j").get<int>();
            rec.guides.idle = g.at("k").get<int>();
            if (!rec.guides.valid()) throw std::invalid_argument("invalid guides in trace");
            rec.M = mat_from_json(s.at("M"));
            rec.D = mat_from_json(s.at("D"));
            const auto& sums = s.at("s");
            if (!sums.is_array() || sums.size() != 3)
                throw std::invalid_argument("column sums must have 3 entries");
            for (int t = 0; t < 3; ++t) rec.s[t] = big_from_json(sums[t]);
            rec.mu = parity(rec.n);
            rec.p = big_from_json(s.at("p_n"));
            rec.q = big_from_json(s.at("q_n"));
            trace.steps.push_back(std::move(rec));
        }

        const auto& fin = root.at("final");
        trace.final.p = big_from_json(fin.at("p"));
        trace.final.q = big_from_json(fin.at("q"));
        trace.final.degenerate = fin.at("degenerate").get<bool>();
        trace.rule = rule_from_name(fin.at("rule").get<std::string>());
        return trace;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad trace document: ") + e.what());
    }
}

std::string convergents_to_json(const std::vector<Convergent>& cs) {
    json arr = json::array();
    for (const auto& c : cs)
        arr.push_back({{"n", c.n}, {"p", c.p.str()}, {"q", c.q.str()}});
    return arr.dump(2) + "\n";
}

std::string reports_to_json(const std::vector<LemmaReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back({{"lemma", lemma_name(r.lemma)},
                       {"n", r.n},
                       {"t", r.t},
                       {"pass", r.pass},
                       {"lhs", r.lhs.str()},
                       {"rhs", r.rhs.str()}});
    return arr.dump(2) + "\n";
}

}  // namespace ratlink
