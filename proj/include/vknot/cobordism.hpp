#pragma once

// Reidemeister moves, oriented saddles, births and deaths on Gauss codes,
// and replay of cobordism certificates.
//
// Arc arguments use GaussCode::num_arcs numbering: arcs are listed in
// serialization order, one after every passage of a nonempty component and
// one for each crossing-free component. Crossing labels refer to the
// canonical labels of the current code; every move returns a canonically
// relabeled code.

#include "vknot/disjoint_sets.hpp"
#include "vknot/error.hpp"
#include "vknot/gauss_code.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace vknot {

enum class MoveKind { R1Plus, R1Minus, R2Plus, R2Minus, R3, Saddle, Birth, Death };

struct Move {
    MoveKind kind = MoveKind::Birth;
    std::size_t arc1 = 0;
    std::size_t arc2 = 0;
    int sign = +1;             // R1+: crossing sign; R2+: sign of the first crossing on the over strand
    Role first = Role::Over;   // R1+: role met first along the strand
    int over = 1;              // R2+: which arc argument becomes the over strand
    bool antiparallel = false; // R2+: under strand meets the two crossings in reverse order
    std::array<int, 3> labels{0, 0, 0};
    std::size_t component = 0;  // Death
    std::size_t variant = 0;    // R3: which triangle on the three crossings

    friend bool operator==(const Move&, const Move&) = default;

    static Move r1_plus(std::size_t arc, int sign, Role first) {
        Move m{MoveKind::R1Plus};
        m.arc1 = arc;
        m.sign = sign;
        m.first = first;
        return m;
    }
    static Move r1_minus(int label) {
        Move m{MoveKind::R1Minus};
        m.labels = {label, 0, 0};
        return m;
    }
    static Move r2_plus(std::size_t arc1, std::size_t arc2, int over, bool antiparallel = false, int sign = +1) {
        Move m{MoveKind::R2Plus};
        m.arc1 = arc1;
        m.arc2 = arc2;
        m.over = over;
        m.antiparallel = antiparallel;
        m.sign = sign;
        return m;
    }
    static Move r2_minus(int l1, int l2) {
        Move m{MoveKind::R2Minus};
        m.labels = {l1, l2, 0};
        return m;
    }
    static Move r3(int l1, int l2, int l3, std::size_t variant = 0) {
        Move m{MoveKind::R3};
        m.labels = {l1, l2, l3};
        m.variant = variant;
        return m;
    }
    static Move saddle(std::size_t arc1, std::size_t arc2) {
        Move m{MoveKind::Saddle};
        m.arc1 = arc1;
        m.arc2 = arc2;
        return m;
    }
    static Move birth() { return Move{MoveKind::Birth}; }
    static Move death(std::size_t component) {
        Move m{MoveKind::Death};
        m.component = component;
        return m;
    }
};

inline bool is_reidemeister(MoveKind k) {
    return k == MoveKind::R1Plus || k == MoveKind::R1Minus || k == MoveKind::R2Plus || k == MoveKind::R2Minus ||
           k == MoveKind::R3;
}

namespace detail {

[[noreturn]] inline void not_applicable(const std::string& why) { throw Error(ErrorKind::MoveNotApplicable, why); }

inline std::size_t crossing_index(const GaussCode& d, int label) {
    if (label < 1 || static_cast<std::size_t>(label) > d.num_crossings())
        not_applicable("no crossing labelled " + std::to_string(label));
    return static_cast<std::size_t>(label - 1);
}

inline bool adjacent(const GaussCode& d, std::size_t p, std::size_t q) {
    return p != q && d.component_of(p) == d.component_of(q) && (d.next(p) == q || d.next(q) == p);
}

// Ordered pair (first, second) along the strand; requires adjacent(p, q).
inline std::pair<std::size_t, std::size_t> along(const GaussCode& d, std::size_t p, std::size_t q) {
    return d.next(p) == q ? std::pair{p, q} : std::pair{q, p};
}

inline Passage& at(std::vector<Component>& comps, const GaussCode& d, std::size_t p) {
    std::size_t k = d.component_of(p);
    return comps[k][p - d.component_offset(k)];
}

inline std::vector<Component> remove_positions(const GaussCode& d, std::vector<std::size_t> positions) {
    std::sort(positions.begin(), positions.end());
    std::vector<Component> comps(d.num_components());
    std::size_t next = 0;
    for (std::size_t k = 0; k < d.num_components(); ++k)
        for (std::size_t i = 0; i < d.components()[k].size(); ++i) {
            std::size_t p = d.component_offset(k) + i;
            if (next < positions.size() && positions[next] == p) {
                ++next;
                continue;
            }
            comps[k].push_back(d.components()[k][i]);
        }
    return comps;
}

struct Insertion {
    std::size_t component;
    std::size_t index;  // insert before this local index
    std::size_t order;  // tie-break: lower order ends up first
    std::vector<Passage> block;
};

inline std::vector<Component> insert_blocks(const GaussCode& d, std::vector<Insertion> ins) {
    auto comps = d.components();
    // Back to front so earlier indices stay valid; ties placed in reverse order.
    std::sort(ins.begin(), ins.end(), [](const Insertion& a, const Insertion& b) {
        if (a.component != b.component) return a.component < b.component;
        if (a.index != b.index) return a.index > b.index;
        return a.order > b.order;
    });
    for (const auto& x : ins) {
        auto& comp = comps[x.component];
        comp.insert(comp.begin() + static_cast<long>(x.index), x.block.begin(), x.block.end());
    }
    return comps;
}

inline std::pair<std::size_t, std::size_t> insertion_point(const GaussCode& d, std::size_t arc) {
    auto loc = d.arc_location(arc);
    std::size_t idx = d.components()[loc.component].empty() ? 0 : loc.local + 1;
    return {loc.component, idx};
}

// R3 triangle: three strand segments, each an adjacent pair of passages.
struct Triangle {
    std::array<std::pair<std::size_t, std::size_t>, 3> segments;  // top, middle, bottom (ordered along strand)
};

// All legal triangles on three crossings, in a fixed order. Short diagrams
// can carry two triangles on the same crossings.
inline std::vector<Triangle> find_triangles(const GaussCode& d, int l1, int l2, int l3) {
    if (l1 == l2 || l2 == l3 || l1 == l3) return {};
    std::array<std::size_t, 3> cs{};
    std::array<int, 3> ls{l1, l2, l3};
    for (int i = 0; i < 3; ++i) {
        if (ls[i] < 1 || static_cast<std::size_t>(ls[i]) > d.num_crossings()) return {};
        cs[i] = static_cast<std::size_t>(ls[i] - 1);
    }
    std::array<std::size_t, 6> pos{};
    for (int i = 0; i < 3; ++i) {
        pos[2 * i] = d.over_position(cs[i]);
        pos[2 * i + 1] = d.under_position(cs[i]);
    }
    auto crossing_of = [&](std::size_t p) { return static_cast<std::size_t>(d.passage(p).label - 1); };

    // Enumerate the 15 perfect matchings of the six passages.
    std::array<int, 6> used{};
    std::array<std::pair<std::size_t, std::size_t>, 3> pairs{};
    std::vector<Triangle> found;
    auto try_matching = [&]() {
        std::optional<std::size_t> top, mid, bot;
        for (std::size_t k = 0; k < 3; ++k) {
            auto [p, q] = pairs[k];
            int overs = (d.passage(p).role == Role::Over) + (d.passage(q).role == Role::Over);
            if (overs == 2) top = k;
            else if (overs == 1) mid = k;
            else bot = k;
        }
        if (!top || !mid || !bot) return;
        auto seg_crossings = [&](std::size_t k) { return std::pair{crossing_of(pairs[k].first), crossing_of(pairs[k].second)}; };
        auto shared = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
            auto [a1, a2] = seg_crossings(a);
            auto [b1, b2] = seg_crossings(b);
            std::optional<std::size_t> s;
            for (auto x : {a1, a2})
                for (auto y : {b1, b2})
                    if (x == y) {
                        if (s) return std::nullopt;
                        s = x;
                    }
            return s;
        };
        auto c12 = shared(*top, *mid), c13 = shared(*top, *bot), c23 = shared(*mid, *bot);
        if (!c12 || !c13 || !c23 || *c12 == *c13 || *c12 == *c23 || *c13 == *c23) return;
        // Middle strand must be under at 12 and over at 23.
        for (auto p : {pairs[*mid].first, pairs[*mid].second}) {
            auto c = crossing_of(p);
            if (c == *c12 && d.passage(p).role != Role::Under) return;
            if (c == *c23 && d.passage(p).role != Role::Over) return;
        }
        Triangle t;
        t.segments = {along(d, pairs[*top].first, pairs[*top].second), along(d, pairs[*mid].first, pairs[*mid].second),
                      along(d, pairs[*bot].first, pairs[*bot].second)};
        auto order = [&](std::size_t seg, std::size_t first_crossing) {
            return crossing_of(t.segments[seg].first) == first_crossing ? 1 : -1;
        };
        int o1 = order(0, *c12), o2 = order(1, *c12), o3 = order(2, *c13);
        int s12 = d.crossing_sign(*c12), s13 = d.crossing_sign(*c13), s23 = d.crossing_sign(*c23);
        // Realizable by three straight strands iff sign_ij = o_i o_j w for a common w.
        if (s12 * s13 != o2 * o3 || s12 * s23 != o1 * o3) return;
        found.push_back(t);
    };
    std::function<void(std::size_t)> match = [&](std::size_t k) {
        if (k == 3) {
            try_matching();
            return;
        }
        std::size_t i = 0;
        while (used[i]) ++i;
        used[i] = 1;
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (used[j]) continue;
            if (!adjacent(d, pos[i], pos[j]) || crossing_of(pos[i]) == crossing_of(pos[j])) continue;
            used[j] = 1;
            pairs[k] = {pos[i], pos[j]};
            match(k + 1);
            used[j] = 0;
        }
        used[i] = 0;
    };
    match(0);
    return found;
}

}  // namespace detail

inline bool r1_removable(const GaussCode& d, int label) {
    if (label < 1 || static_cast<std::size_t>(label) > d.num_crossings()) return false;
    auto c = static_cast<std::size_t>(label - 1);
    return detail::adjacent(d, d.over_position(c), d.under_position(c));
}

inline bool r2_removable(const GaussCode& d, int l1, int l2) {
    if (l1 == l2) return false;
    for (int l : {l1, l2})
        if (l < 1 || static_cast<std::size_t>(l) > d.num_crossings()) return false;
    auto a = static_cast<std::size_t>(l1 - 1), b = static_cast<std::size_t>(l2 - 1);
    return d.crossing_sign(a) == -d.crossing_sign(b) && detail::adjacent(d, d.over_position(a), d.over_position(b)) &&
           detail::adjacent(d, d.under_position(a), d.under_position(b));
}

inline bool r3_applicable(const GaussCode& d, int l1, int l2, int l3) {
    return !detail::find_triangles(d, l1, l2, l3).empty();
}

inline GaussCode apply_move(const GaussCode& d, const Move& m) {
    using namespace detail;
    const int fresh = static_cast<int>(d.num_crossings()) + 1;
    switch (m.kind) {
    case MoveKind::R1Plus: {
        if (m.sign != 1 && m.sign != -1) not_applicable("r1+ sign must be + or -");
        auto [k, idx] = insertion_point(d, m.arc1);
        std::vector<Passage> block{{fresh, m.first, m.sign}, {fresh, opposite(m.first), m.sign}};
        return GaussCode(insert_blocks(d, {{k, idx, 0, block}}));
    }
    case MoveKind::R1Minus: {
        auto c = crossing_index(d, m.labels[0]);
        if (!r1_removable(d, m.labels[0]))
            not_applicable("crossing " + std::to_string(m.labels[0]) + " is not a kink");
        return GaussCode(remove_positions(d, {d.over_position(c), d.under_position(c)}));
    }
    case MoveKind::R2Plus: {
        if (m.over != 1 && m.over != 2) not_applicable("r2+ over selector must be 1 or 2");
        if (m.sign != 1 && m.sign != -1) not_applicable("r2+ sign must be + or -");
        auto [k1, i1] = insertion_point(d, m.arc1);
        auto [k2, i2] = insertion_point(d, m.arc2);
        const int x = fresh, y = fresh + 1;
        std::vector<Passage> over_block{{x, Role::Over, m.sign}, {y, Role::Over, -m.sign}};
        std::vector<Passage> under_block{{x, Role::Under, m.sign}, {y, Role::Under, -m.sign}};
        if (m.antiparallel) std::swap(under_block[0], under_block[1]);
        auto& b1 = m.over == 1 ? over_block : under_block;
        auto& b2 = m.over == 1 ? under_block : over_block;
        return GaussCode(insert_blocks(d, {{k1, i1, 0, b1}, {k2, i2, 1, b2}}));
    }
    case MoveKind::R2Minus: {
        int l1 = m.labels[0], l2 = m.labels[1];
        crossing_index(d, l1);
        crossing_index(d, l2);
        if (!r2_removable(d, l1, l2))
            not_applicable("crossings " + std::to_string(l1) + "," + std::to_string(l2) + " do not form a bigon");
        auto a = static_cast<std::size_t>(l1 - 1), b = static_cast<std::size_t>(l2 - 1);
        return GaussCode(remove_positions(
            d, {d.over_position(a), d.under_position(a), d.over_position(b), d.under_position(b)}));
    }
    case MoveKind::R3: {
        auto ts = find_triangles(d, m.labels[0], m.labels[1], m.labels[2]);
        if (ts.empty()) not_applicable("crossings do not form a legal triangle");
        if (m.variant >= ts.size()) not_applicable("no triangle " + std::to_string(m.variant) + " on these crossings");
        const Triangle* t = &ts[m.variant];
        auto comps = d.components();
        for (auto [p, q] : t->segments) std::swap(at(comps, d, p), at(comps, d, q));
        return GaussCode(std::move(comps));
    }
    case MoveKind::Saddle: {
        auto l1 = d.arc_location(m.arc1);
        auto l2 = d.arc_location(m.arc2);
        auto comps = d.components();
        // Word of a component read from just after a given arc.
        auto read_from = [&](ArcLocation loc) {
            const auto& w = comps[loc.component];
            Component out;
            for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(loc.local + 1 + i) % w.size()]);
            return out;
        };
        if (l1.component == l2.component) {
            const auto& w = comps[l1.component];
            Component first, second;
            if (!w.empty() && l1.local != l2.local) {
                std::size_t m_len = w.size();
                std::size_t len1 = (l2.local + m_len - l1.local) % m_len;
                for (std::size_t i = 0; i < m_len; ++i) {
                    const auto& p = w[(l1.local + 1 + i) % m_len];
                    (i < len1 ? first : second).push_back(p);
                }
            } else {
                // Same arc: a crossing-free circle splits off.
                second = read_from(l1);
            }
            comps[l1.component] = std::move(first);
            comps.insert(comps.begin() + static_cast<long>(l1.component) + 1, std::move(second));
        } else {
            Component merged = read_from(l1);
            auto tail = read_from(l2);
            merged.insert(merged.end(), tail.begin(), tail.end());
            std::size_t lo = std::min(l1.component, l2.component), hi = std::max(l1.component, l2.component);
            comps[lo] = std::move(merged);
            comps.erase(comps.begin() + static_cast<long>(hi));
        }
        return GaussCode(std::move(comps));
    }
    case MoveKind::Birth: {
        auto comps = d.components();
        comps.emplace_back();
        return GaussCode(std::move(comps));
    }
    case MoveKind::Death: {
        if (m.component >= d.num_components())
            not_applicable("no component " + std::to_string(m.component));
        if (!d.components()[m.component].empty())
            not_applicable("component " + std::to_string(m.component) + " has crossings");
        if (d.num_components() == 1) not_applicable("cannot remove the last component");
        auto comps = d.components();
        comps.erase(comps.begin() + static_cast<long>(m.component));
        return GaussCode(std::move(comps));
    }
    }
    not_applicable("unknown move");
}

// ---------------------------------------------------------------------------
// Certificate text format

inline std::string to_string(const Move& m) {
    auto sign = [](int s) { return s > 0 ? "+" : "-"; };
    switch (m.kind) {
    case MoveKind::R1Plus:
        return "r1+ " + std::to_string(m.arc1) + " " + sign(m.sign) + " " + (m.first == Role::Over ? "O" : "U");
    case MoveKind::R1Minus: return "r1- " + std::to_string(m.labels[0]);
    case MoveKind::R2Plus: {
        std::string s = "r2+ " + std::to_string(m.arc1) + " " + std::to_string(m.arc2) + " " + std::to_string(m.over);
        if (m.antiparallel || m.sign < 0) s += std::string(m.antiparallel ? " anti " : " par ") + sign(m.sign);
        return s;
    }
    case MoveKind::R2Minus: return "r2- " + std::to_string(m.labels[0]) + " " + std::to_string(m.labels[1]);
    case MoveKind::R3:
        return "r3 " + std::to_string(m.labels[0]) + " " + std::to_string(m.labels[1]) + " " +
               std::to_string(m.labels[2]) + (m.variant ? " " + std::to_string(m.variant) : std::string());
    case MoveKind::Saddle: return "saddle " + std::to_string(m.arc1) + " " + std::to_string(m.arc2);
    case MoveKind::Birth: return "birth";
    case MoveKind::Death: return "death " + std::to_string(m.component);
    }
    return "";
}

inline Move parse_move(const std::string& line) {
    std::istringstream in(line);
    std::string op;
    in >> op;
    std::vector<std::string> args;
    for (std::string a; in >> a;) args.push_back(a);
    auto bad = [&]() -> Error { return Error(ErrorKind::MalformedCertificate, "cannot parse move '" + line + "'"); };
    auto num = [&](const std::string& s) -> long {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw bad();
        return std::stol(s);
    };
    auto sgn = [&](const std::string& s) {
        if (s == "+") return 1;
        if (s == "-") return -1;
        throw bad();
    };
    auto count = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) throw bad();
    };
    if (op == "r1+") {
        count(3, 3);
        if (args[2] != "O" && args[2] != "U") throw bad();
        return Move::r1_plus(static_cast<std::size_t>(num(args[0])), sgn(args[1]), args[2] == "O" ? Role::Over : Role::Under);
    }
    if (op == "r1-") {
        count(1, 1);
        return Move::r1_minus(static_cast<int>(num(args[0])));
    }
    if (op == "r2+") {
        count(3, 5);
        auto over = num(args[2]);
        if (over != 1 && over != 2) throw bad();
        bool anti = false;
        int s = 1;
        if (args.size() >= 4) {
            if (args[3] != "par" && args[3] != "anti") throw bad();
            anti = args[3] == "anti";
        }
        if (args.size() == 5) s = sgn(args[4]);
        return Move::r2_plus(static_cast<std::size_t>(num(args[0])), static_cast<std::size_t>(num(args[1])),
                             static_cast<int>(over), anti, s);
    }
    if (op == "r2-") {
        count(2, 2);
        return Move::r2_minus(static_cast<int>(num(args[0])), static_cast<int>(num(args[1])));
    }
    if (op == "r3") {
        count(3, 4);
        return Move::r3(static_cast<int>(num(args[0])), static_cast<int>(num(args[1])), static_cast<int>(num(args[2])),
                        args.size() == 4 ? static_cast<std::size_t>(num(args[3])) : 0);
    }
    if (op == "saddle") {
        count(2, 2);
        return Move::saddle(static_cast<std::size_t>(num(args[0])), static_cast<std::size_t>(num(args[1])));
    }
    if (op == "birth") {
        count(0, 0);
        return Move::birth();
    }
    if (op == "death") {
        count(1, 1);
        return Move::death(static_cast<std::size_t>(num(args[0])));
    }
    throw bad();
}

struct Certificate {
    GaussCode start;
    std::vector<Move> moves;
    GaussCode end;
};

// Line-oriented: "start <code>", move lines, "end <code>". Blank lines are skipped.
inline Certificate parse_certificate(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back(line);
    }
    auto keyword_rest = [](const std::string& line, const std::string& key) -> std::optional<std::string> {
        auto b = line.find_first_not_of(" \t");
        if (line.compare(b, key.size(), key) != 0) return std::nullopt;
        auto rest = line.substr(b + key.size());
        if (!rest.empty() && !std::isspace(static_cast<unsigned char>(rest[0]))) return std::nullopt;
        return rest;
    };
    if (lines.size() < 2) throw Error(ErrorKind::MalformedCertificate, "certificate needs start and end lines");
    auto start = keyword_rest(lines.front(), "start");
    auto end = keyword_rest(lines.back(), "end");
    if (!start) throw Error(ErrorKind::MalformedCertificate, "first line must be 'start <code>'");
    if (!end) throw Error(ErrorKind::MalformedCertificate, "last line must be 'end <code>'");
    // An empty code may be written as nothing or as "".
    auto code = [](std::string text) {
        auto b = text.find_first_not_of(" \t");
        text = b == std::string::npos ? std::string() : text.substr(b, text.find_last_not_of(" \t") - b + 1);
        return parse(text == "\"\"" ? std::string() : text);
    };
    Certificate cert{code(*start), {}, code(*end)};
    for (std::size_t i = 1; i + 1 < lines.size(); ++i) cert.moves.push_back(parse_move(lines[i]));
    return cert;
}

inline Certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    return parse_certificate(in);
}

inline std::string to_string(const Certificate& c) {
    auto code = [](const GaussCode& d) { return d.num_components() == 1 && d.num_crossings() == 0 ? std::string("\"\"") : to_string(d); };
    std::string out = "start " + code(c.start) + "\n";
    for (const auto& m : c.moves) out += to_string(m) + "\n";
    out += "end " + code(c.end) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Verification

struct SurfaceAccounting {
    std::size_t saddles = 0;
    std::size_t births = 0;
    std::size_t deaths = 0;
    std::size_t patches = 0;  // surface pieces created (start components plus births)
    long genus = 0;
};

// Replays the moves while tracking which surface patch each diagram
// component belongs to. Births open a patch, saddles join the patches of
// their two arcs. The surface must end up connected.
inline SurfaceAccounting verify(const Certificate& cert) {
    GaussCode current = cert.start;
    DisjointSets patches(cert.start.num_components());
    std::vector<std::size_t> patch_of(cert.start.num_components());
    for (std::size_t k = 0; k < patch_of.size(); ++k) patch_of[k] = k;
    SurfaceAccounting acc;

    for (std::size_t step = 0; step < cert.moves.size(); ++step) {
        const Move& m = cert.moves[step];
        GaussCode next;
        try {
            next = apply_move(current, m);
        } catch (const Error& e) {
            throw Error(e.kind(), "step " + std::to_string(step) + " (" + to_string(m) + "): " + e.message(), step);
        }
        switch (m.kind) {
        case MoveKind::Saddle: {
            ++acc.saddles;
            auto k1 = current.arc_location(m.arc1).component;
            auto k2 = current.arc_location(m.arc2).component;
            if (k1 == k2) {
                patch_of.insert(patch_of.begin() + static_cast<long>(k1) + 1, patch_of[k1]);
            } else {
                patches.unite(patch_of[k1], patch_of[k2]);
                patch_of.erase(patch_of.begin() + static_cast<long>(std::max(k1, k2)));
            }
            break;
        }
        case MoveKind::Birth:
            ++acc.births;
            patch_of.push_back(patches.add());
            break;
        case MoveKind::Death:
            ++acc.deaths;
            patch_of.erase(patch_of.begin() + static_cast<long>(m.component));
            break;
        default: break;
        }
        current = std::move(next);
    }
    if (!equivalent_up_to_rotation(current, cert.end))
        throw Error(ErrorKind::EndMismatch, "final code " + to_string(current) + " does not match " + to_string(cert.end));
    if (patches.num_sets() != 1) throw Error(ErrorKind::DisconnectedSurface, "surface has " +
                                                 std::to_string(patches.num_sets()) + " pieces");
    acc.patches = patches.size();
    // chi = births + deaths - saddles; a connected surface with b boundary circles has chi = 2 - 2g - b.
    long chi = static_cast<long>(acc.births + acc.deaths) - static_cast<long>(acc.saddles);
    long b = static_cast<long>(cert.start.num_components() + cert.end.num_components());
    long twice = 2 - b - chi;
    if (twice < 0 || twice % 2 != 0)
        throw Error(ErrorKind::NonIntegerGenus, "2g = " + std::to_string(twice) + " is not a nonnegative even number");
    acc.genus = twice / 2;
    return acc;
}

// ---------------------------------------------------------------------------
// Random Reidemeister moves

struct RandomMoveOptions {
    // Insertion moves that would exceed this many crossings are skipped.
    std::size_t max_crossings = std::numeric_limits<std::size_t>::max();
};

inline std::vector<Move> legal_r1_removals(const GaussCode& d) {
    std::vector<Move> out;
    for (int l = 1; l <= static_cast<int>(d.num_crossings()); ++l)
        if (r1_removable(d, l)) out.push_back(Move::r1_minus(l));
    return out;
}

inline std::vector<Move> legal_r2_removals(const GaussCode& d) {
    std::vector<Move> out;
    int n = static_cast<int>(d.num_crossings());
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (r2_removable(d, a, b)) out.push_back(Move::r2_minus(a, b));
    return out;
}

inline std::vector<Move> legal_r3_moves(const GaussCode& d) {
    std::vector<Move> out;
    int n = static_cast<int>(d.num_crossings());
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (std::size_t v = 0; v < detail::find_triangles(d, a, b, c).size(); ++v)
                    out.push_back(Move::r3(a, b, c, v));
    return out;
}

struct MoveSequence {
    GaussCode result;
    std::vector<Move> moves;
};

// Applies `count` random legal R1/R2/R3 moves; draws that are not applicable are skipped.
inline MoveSequence random_move_sequence(const GaussCode& d, std::size_t count, std::uint64_t seed,
                                         RandomMoveOptions opts = {}) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    MoveSequence seq{d, {}};
    std::size_t attempts = 0;
    while (seq.moves.size() < count && attempts++ < 100 * (count + 1)) {
        const GaussCode& cur = seq.result;
        std::optional<Move> m;
        switch (pick(5)) {
        case 0:
            if (cur.num_crossings() + 1 <= opts.max_crossings)
                m = Move::r1_plus(pick(cur.num_arcs()), pick(2) ? 1 : -1, pick(2) ? Role::Over : Role::Under);
            break;
        case 1:
            if (cur.num_crossings() + 2 <= opts.max_crossings)
                m = Move::r2_plus(pick(cur.num_arcs()), pick(cur.num_arcs()), pick(2) ? 1 : 2, pick(2) == 1,
                                  pick(2) ? 1 : -1);
            break;
        case 2:
            if (auto c = legal_r1_removals(cur); !c.empty()) m = c[pick(c.size())];
            break;
        case 3:
            if (auto c = legal_r2_removals(cur); !c.empty()) m = c[pick(c.size())];
            break;
        default:
            if (auto c = legal_r3_moves(cur); !c.empty()) m = c[pick(c.size())];
            break;
        }
        if (!m) continue;
        seq.result = apply_move(cur, *m);
        seq.moves.push_back(*m);
    }
    return seq;
}

inline GaussCode random_moves(const GaussCode& d, std::size_t count, std::uint64_t seed, RandomMoveOptions opts = {}) {
    return random_move_sequence(d, count, seed, opts).result;
}

// A move undoing `m` on apply_move(before, m): exact when possible, otherwise
// up to rotation of components. Only Reidemeister moves and births are invertible.
inline std::optional<Move> invert_move(const GaussCode& before, const Move& m) {
    GaussCode after = apply_move(before, m);
    std::vector<Move> candidates;
    switch (m.kind) {
    case MoveKind::R1Plus: candidates = legal_r1_removals(after); break;
    case MoveKind::R2Plus: candidates = legal_r2_removals(after); break;
    case MoveKind::R3: candidates = legal_r3_moves(after); break;
    case MoveKind::R1Minus:
        for (std::size_t a = 0; a < after.num_arcs(); ++a)
            for (int s : {1, -1})
                for (Role r : {Role::Over, Role::Under}) candidates.push_back(Move::r1_plus(a, s, r));
        break;
    case MoveKind::R2Minus:
        for (std::size_t a = 0; a < after.num_arcs(); ++a)
            for (std::size_t b = 0; b < after.num_arcs(); ++b)
                for (int over : {1, 2})
                    for (bool anti : {false, true})
                        for (int s : {1, -1}) candidates.push_back(Move::r2_plus(a, b, over, anti, s));
        break;
    case MoveKind::Birth: return Move::death(after.num_components() - 1);
    default: return std::nullopt;
    }
    std::optional<Move> loose;
    for (const auto& c : candidates) {
        GaussCode back;
        try {
            back = apply_move(after, c);
        } catch (const Error&) {
            continue;
        }
        if (back == before) return c;
        if (!loose && equivalent_up_to_rotation(back, before)) loose = c;
    }
    return loose;
}

}  // namespace vknot
