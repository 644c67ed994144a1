#pragma once

// Per-knot reports and batch tables built on the bounds pipeline.
//
// Anywhere a code is expected, "A # B # ..." denotes a connect sum. The sum
// is realised as a diagram by splicing at the first arc of each summand;
// s is additionally pinned by adding the summands' intervals, and s2 adds.

#include "vknot/bounds.hpp"
#include "vknot/cobordism.hpp"
#include "vknot/error.hpp"
#include "vknot/gauss_code.hpp"

#include <json.hpp>

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace vknot {

struct KnotExpression {
    std::vector<GaussCode> summands;
    GaussCode diagram;  // splice of all summands
};

inline std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline KnotExpression parse_expression(std::string_view text) {
    KnotExpression out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find('#', start);
        auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        auto code = parse(piece);
        require_knot(code, "connect sum");
        out.summands.push_back(std::move(code));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    out.diagram = out.summands.front();
    for (std::size_t i = 1; i < out.summands.size(); ++i) out.diagram = connect_sum(out.diagram, out.summands[i], 0, 0);
    return out;
}

struct KnotReport {
    std::vector<std::string> inputs;  // one per diagram supplied
    GaussCode diagram;                // first diagram
    BoundsReport bounds;              // of the first diagram
    Interval s;
    Interval s1;
    long s2 = 0;
    GenusReport genus;
    std::vector<long> certificate_genera;
};

// Combines several diagrams of one knot: intervals are intersected, upper
// bounds pooled. Certificates only count when their start matches one of
// the diagrams up to rotation.
inline KnotReport make_report(const std::vector<std::string>& inputs, const std::vector<Certificate>& certificates = {}) {
    if (inputs.empty()) throw Error(ErrorKind::MalformedToken, "no diagram given");
    KnotReport r;
    r.inputs = inputs;
    std::vector<UpperBound> uppers;
    std::optional<long> j;
    std::vector<GaussCode> diagrams;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        auto expr = parse_expression(inputs[k]);
        auto b = compute_bounds(expr.diagram);
        Interval s = b.s_interval;
        long s2_value = b.j;
        if (expr.summands.size() > 1) {
            Interval sum{0, 0};
            long upper_sum = 0;
            s2_value = 0;
            for (const auto& part : expr.summands) {
                sum = sum + s_interval(part);
                s2_value += odd_writhe(part);
                upper_sum += static_cast<long>(part.num_crossings() / 2);
            }
            s = intersect(s, sum);
            uppers.push_back({upper_sum, "summands"});
        }
        uppers.push_back({static_cast<long>(expr.diagram.num_crossings() / 2), "crossings/2"});
        if (k == 0) {
            r.diagram = expr.diagram;
            r.bounds = b;
            r.s = s;
            r.s1 = b.s1_interval;
        } else {
            r.s = intersect(r.s, s);
            r.s1 = intersect(r.s1, b.s1_interval);
        }
        if (j && *j != s2_value)
            throw Error(ErrorKind::MalformedToken, "diagrams have different odd writhe, so they are not the same knot");
        j = s2_value;
        diagrams.push_back(expr.diagram);
    }
    r.s2 = *j;
    for (const auto& cert : certificates) {
        bool matches = false;
        for (const auto& d : diagrams) matches = matches || equivalent_up_to_rotation(cert.start, d);
        if (!matches) continue;
        auto acc = verify(cert);
        r.certificate_genera.push_back(acc.genus);
        uppers.push_back({acc.genus, "certificate"});
    }
    r.genus = estimate_genus(r.s, r.s1, r.s2, uppers);
    return r;
}

inline std::string genus_text(const GenusReport& g) {
    if (!g.upper) return ">= " + std::to_string(g.lower);
    if (g.status == GenusStatus::Determined) return std::to_string(g.lower);
    return "[" + std::to_string(g.lower) + ", " + std::to_string(*g.upper) + "]";
}

inline nlohmann::json interval_json(Interval i) { return {{"lo", i.lo}, {"hi", i.hi}}; }

inline nlohmann::json to_json(const KnotReport& r) {
    nlohmann::json j;
    j["inputs"] = r.inputs;
    j["code"] = to_string(r.diagram);
    j["crossings"] = r.bounds.crossings;
    j["writhe"] = r.bounds.writhe;
    j["u_v"] = r.bounds.u_v;
    j["delta_v"] = r.bounds.delta_v;
    j["u_d"] = r.bounds.u_d;
    j["delta_d"] = r.bounds.delta_d;
    j["n_o_plus"] = r.bounds.n_o_plus;
    j["n_o_minus"] = r.bounds.n_o_minus;
    j["l_hom"] = r.bounds.l_hom;
    j["d_hom"] = r.bounds.d_hom;
    j["s"] = interval_json(r.s);
    j["s1"] = interval_json(r.s1);
    j["s2"] = r.s2;
    nlohmann::json g;
    g["lower"] = r.genus.lower;
    g["upper"] = r.genus.upper ? nlohmann::json(*r.genus.upper) : nlohmann::json(nullptr);
    g["status"] = to_string(r.genus.status);
    g["provenance"] = r.genus.provenance;
    j["g_star"] = g;
    j["certificate_genera"] = r.certificate_genera;
    return j;
}

inline std::string to_text(const KnotReport& r) {
    std::ostringstream os;
    os << "code       " << (r.diagram.num_crossings() == 0 ? "\"\"" : to_string(r.diagram)) << '\n';
    os << "crossings  " << r.bounds.crossings << '\n';
    os << "writhe     " << r.bounds.writhe << '\n';
    os << "U_v        " << r.bounds.u_v << '\n';
    os << "Delta_v    " << r.bounds.delta_v << '\n';
    os << "U_d        " << r.bounds.u_d << '\n';
    os << "Delta_d    " << r.bounds.delta_d << '\n';
    os << "n_o+       " << r.bounds.n_o_plus << '\n';
    os << "n_o-       " << r.bounds.n_o_minus << '\n';
    os << "l-hom      " << (r.bounds.l_hom ? "true" : "false") << '\n';
    os << "d-hom      " << (r.bounds.d_hom ? "true" : "false") << '\n';
    os << "s          " << to_string(r.s) << '\n';
    os << "s1         " << to_string(r.s1) << '\n';
    os << "s2         " << r.s2 << '\n';
    os << "g*         " << genus_text(r.genus) << " (" << to_string(r.genus.status) << ")\n";
    os << "g* lower   " << r.genus.lower << '\n';
    os << "g* upper   " << (r.genus.upper ? std::to_string(*r.genus.upper) : std::string("unknown")) << '\n';
    os << "provenance";
    for (const auto& p : r.genus.provenance) os << "  " << p;
    os << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Tables

struct TableRow {
    std::string name;
    std::string code_text;
    std::optional<KnotReport> report;
    std::string error;  // nonempty iff report is absent
};

struct TableInput {
    std::string name;
    std::string code;
    bool has_code = true;
};

// "x" -> x with doubled quotes collapsed; "" is the empty field.
inline std::string csv_unquote(const std::string& s) {
    if (s.size() < 2 || s.front() != '"' || s.back() != '"') return s;
    std::string out;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        out += s[i];
        if (s[i] == '"' && i + 2 < s.size() && s[i + 1] == '"') ++i;
    }
    return out;
}

// Lines "name,code"; an optional "name,code" header, blank lines and lines
// starting with '#' are skipped.
inline std::vector<TableInput> read_table_input(std::istream& in) {
    std::vector<TableInput> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto comma = t.find(',');
        TableInput row;
        if (comma == std::string::npos) {
            row.name = t;
            row.has_code = false;
        } else {
            row.name = csv_unquote(trim(std::string_view(t).substr(0, comma)));
            row.code = csv_unquote(trim(std::string_view(t).substr(comma + 1)));
        }
        if (first && row.name == "name" && row.code == "code") {
            first = false;
            continue;
        }
        first = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline TableRow make_row(const TableInput& in) {
    TableRow row{in.name, in.code, std::nullopt, {}};
    try {
        if (!in.has_code) throw Error(ErrorKind::MalformedToken, "missing code column");
        row.report = make_report({in.code});
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

inline std::vector<TableRow> make_table(const std::vector<TableInput>& inputs) {
    std::vector<TableRow> rows;
    rows.reserve(inputs.size());
    for (const auto& in : inputs) rows.push_back(make_row(in));
    return rows;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string to_csv(const std::vector<TableRow>& rows) {
    bool any_error = false;
    for (const auto& r : rows) any_error = any_error || !r.report;
    std::ostringstream os;
    os << "name,l_hom,d_hom,s_lo,s_hi,s1_lo,s1_hi,s2,g_lo,g_hi";
    if (any_error) os << ",error";
    os << '\n';
    for (const auto& r : rows) {
        os << csv_field(r.name);
        if (r.report) {
            const auto& k = *r.report;
            os << ',' << (k.bounds.l_hom ? "true" : "false") << ',' << (k.bounds.d_hom ? "true" : "false") << ','
               << k.s.lo << ',' << k.s.hi << ',' << k.s1.lo << ',' << k.s1.hi << ',' << k.s2 << ',' << k.genus.lower
               << ',' << (k.genus.upper ? std::to_string(*k.genus.upper) : std::string());
            if (any_error) os << ',';
        } else {
            os << ",,,,,,,,,," << csv_field(r.error);
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json to_json(const std::vector<TableRow>& rows) {
    auto out = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["name"] = r.name;
        if (r.report)
            j["report"] = to_json(*r.report);
        else
            j["error"] = r.error;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace vknot
