// vknot: slice genus bounds, doubled Khovanov homology and cobordism
// certificates for virtual knots given as signed Gauss codes.

#include "vknot/vknot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { Ok = 0, RowFailure = 1, ParseFailure = 2, SizeLimit = 3 };

int exit_code_for(vknot::ErrorKind kind) {
    using vknot::ErrorKind;
    switch (kind) {
    case ErrorKind::SizeLimitExceeded: return SizeLimit;
    case ErrorKind::MalformedToken:
    case ErrorKind::LabelCountMismatch:
    case ErrorKind::RoleConflict:
    case ErrorKind::SignConflict:
    case ErrorKind::NotAKnot:
    case ErrorKind::MalformedCertificate: return ParseFailure;
    default: return RowFailure;
    }
}

std::size_t default_max_crossings() {
    if (const char* env = std::getenv("VKNOT_MAX_CROSSINGS")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "ignoring VKNOT_MAX_CROSSINGS=" << env << '\n';
        }
    }
    return 10;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw vknot::Error(vknot::ErrorKind::MalformedToken, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// One diagram per nonblank line; '#' at the start of a line is a comment.
std::vector<std::string> read_codes(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        auto t = vknot::trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.push_back(t == "\"\"" ? std::string() : t);
    }
    return out;
}

std::string unquote(const std::string& s) { return s == "\"\"" ? std::string() : s; }

struct Options {
    bool json = false;
    bool strict = false;
    bool with_bounds = false;
    std::size_t max_crossings = default_max_crossings();
    std::uint64_t seed = 1;
    std::size_t count = 20;
    std::vector<std::string> codes;
    std::string file;
    std::string output;
    std::vector<std::string> certificates;
};

int cmd_invariants(const Options& o) {
    std::vector<std::string> inputs;
    for (const auto& c : o.codes) inputs.push_back(unquote(c));
    if (!o.file.empty())
        for (auto& c : read_codes(o.file)) inputs.push_back(c);
    if (inputs.empty()) inputs.emplace_back();
    std::vector<vknot::Certificate> certs;
    for (const auto& path : o.certificates) certs.push_back(vknot::parse_certificate(read_file(path)));
    auto report = vknot::make_report(inputs, certs);
    if (o.json)
        std::cout << vknot::to_json(report).dump(2) << '\n';
    else
        std::cout << vknot::to_text(report);
    return Ok;
}

int cmd_table(const Options& o) {
    std::istringstream in(read_file(o.file.empty() ? "-" : o.file));
    auto rows = vknot::make_table(vknot::read_table_input(in));
    std::string text = o.json ? vknot::to_json(rows).dump(2) + "\n" : vknot::to_csv(rows);
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.output);
        out << text;
    }
    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.report ? 0 : 1;
    if (failed) std::cerr << failed << " row(s) failed\n";
    return failed && o.strict ? RowFailure : Ok;
}

int cmd_certify(const Options& o) {
    auto cert = vknot::parse_certificate(read_file(o.file));
    vknot::SurfaceAccounting acc;
    try {
        acc = vknot::verify(cert);
    } catch (const vknot::Error& e) {
        if (o.json) {
            nlohmann::json j{{"ok", false}, {"error", e.what()}, {"kind", vknot::to_string(e.kind())}};
            j["step"] = e.step() ? nlohmann::json(*e.step()) : nlohmann::json(nullptr);
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "failed";
            if (e.step()) std::cout << " at step " << *e.step();
            std::cout << ": " << e.what() << '\n';
        }
        return RowFailure;
    }
    std::optional<vknot::KnotReport> report;
    if (o.with_bounds && cert.start.is_knot()) report = vknot::make_report({vknot::to_string(cert.start)}, {cert});
    if (o.json) {
        nlohmann::json j{{"ok", true},          {"genus", acc.genus},   {"saddles", acc.saddles},
                         {"births", acc.births}, {"deaths", acc.deaths}, {"patches", acc.patches}};
        if (report) j["bounds"] = vknot::to_json(*report);
        std::cout << j.dump(2) << '\n';
        return Ok;
    }
    std::cout << "genus " << acc.genus;
    if (report) {
        const auto& g = report->genus;
        std::cout << "; " << (acc.genus == g.lower ? "matches lower bound" : "lower bound " + std::to_string(g.lower));
        std::cout << "; g* = " << vknot::genus_text(g);
    }
    std::cout << '\n';
    std::cout << "saddles " << acc.saddles << ", births " << acc.births << ", deaths " << acc.deaths << '\n';
    return Ok;
}

int cmd_homology(const Options& o) {
    auto code = o.codes.empty() ? std::string() : unquote(o.codes.front());
    auto expr = vknot::parse_expression(code);
    vknot::BuildOptions opts;
    opts.max_crossings = o.max_crossings;
    auto cx = vknot::build_complex(expr.diagram, opts);
    auto table = vknot::homology(cx);
    if (o.json) {
        nlohmann::json j;
        j["code"] = vknot::to_string(expr.diagram);
        auto ranks = nlohmann::json::array();
        for (const auto& [key, r] : table) ranks.push_back({key.first, key.second, r});
        j["ranks"] = ranks;
        j["poincare"] = vknot::poincare_polynomial(table);
        j["eta_edges"] = cx.single_cycle_edges;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << vknot::rank_lines(table) << vknot::poincare_polynomial(table) << '\n';
    }
    return Ok;
}

// Random Reidemeister moves must leave J and the homology unchanged, and the
// s intervals must overlap. Diagrams grow by at most four crossings. When
// either cube fails d^2 = 0 the homology comparison is reported as skipped.
int cmd_selftest(const Options& o) {
    std::vector<std::string> inputs = {"", "O1+U2+O3+U1+O2+U3+", "O1-U2-O3-U1-O2-U3-", "O1+O2+U1+U2+"};
    for (const auto& c : o.codes) inputs.push_back(unquote(c));
    int failures = 0;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        auto d = vknot::parse_expression(inputs[k]).diagram;
        vknot::RandomMoveOptions ropts;
        ropts.max_crossings = std::min(o.max_crossings, d.num_crossings() + 4);
        auto seq = vknot::random_move_sequence(d, o.count, o.seed + k, ropts);
        bool ok = vknot::odd_writhe(d) == vknot::odd_writhe(seq.result);
        ok = ok && !vknot::intersect(vknot::s_interval(d), vknot::s_interval(seq.result)).empty();
        std::string note;
        try {
            ok = ok && vknot::dkh_ranks(d, o.max_crossings) == vknot::dkh_ranks(seq.result, o.max_crossings);
        } catch (const vknot::Error& e) {
            if (e.kind() != vknot::ErrorKind::NotAComplex && e.kind() != vknot::ErrorKind::SizeLimitExceeded) throw;
            note = " [homology skipped: " + e.message() + "]";
        }
        std::cout << (ok ? "ok   " : "FAIL ") << (inputs[k].empty() ? "\"\"" : inputs[k]) << " -> "
                  << vknot::to_string(seq.result) << " (" << seq.moves.size() << " moves)" << note << '\n';
        failures += ok ? 0 : 1;
    }
    return failures ? RowFailure : Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Slice genus bounds and doubled Khovanov homology for virtual knots"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--max-crossings", o.max_crossings, "crossing limit for homology (env VKNOT_MAX_CROSSINGS)");

    auto* inv = app.add_subcommand("invariants", "bounds and genus report for one knot");
    inv->add_option("codes", o.codes, "Gauss codes or \"A # B\" sums of the same knot");
    inv->add_option("-f,--file", o.file, "file with one diagram per line");
    inv->add_option("-c,--certificate", o.certificates, "certificate files for the upper bound");

    auto* table = app.add_subcommand("table", "CSV table for name,code rows");
    table->add_option("input", o.file, "input CSV (default stdin)");
    table->add_option("-o,--output", o.output, "output file");
    table->add_flag("--strict", o.strict, "exit 1 if any row fails");

    auto* certify = app.add_subcommand("certify", "verify a cobordism certificate");
    certify->add_option("certificate", o.file, "certificate file")->required();
    certify->add_flag("--with-bounds", o.with_bounds, "compare against the genus bounds of the start knot");

    auto* hom = app.add_subcommand("homology", "doubled Khovanov ranks");
    hom->add_option("code", o.codes, "Gauss code")->expected(0, 1);

    auto* self = app.add_subcommand("selftest", "random Reidemeister invariance checks");
    self->add_option("codes", o.codes, "additional codes");
    self->add_option("--seed", o.seed, "random seed");
    self->add_option("--count", o.count, "moves per code");

    for (auto* sub : {inv, table, certify, hom, self}) {
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_option("--max-crossings", o.max_crossings, "crossing limit for homology");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : ParseFailure;
    }

    try {
        if (*inv) return cmd_invariants(o);
        if (*table) return cmd_table(o);
        if (*certify) return cmd_certify(o);
        if (*hom) return cmd_homology(o);
        if (*self) return cmd_selftest(o);
    } catch (const vknot::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ParseFailure;
    }
    return Ok;
}
