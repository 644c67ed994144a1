#include "support/corpus.hpp"
#include "support/khovanov_oracle.hpp"

#include <gtest/gtest.h>

using namespace vknot;

namespace {
const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
const char* k21 = "O1+O2+U1+U2+";
}  // namespace

TEST(Trace, Examples) {
    auto d = parse(k21);
    // both positive: 0 is the oriented reconnection
    EXPECT_EQ(trace_state(d, Resolution({0, 0})).num_cycles(), 1u);
    EXPECT_EQ(trace_state(d, Resolution({1, 1})).num_cycles(), 2u);
    EXPECT_EQ(trace_state(parse(""), Resolution()).num_cycles(), 1u);
    EXPECT_EQ(trace_state(parse("/"), Resolution()).num_cycles(), 2u);
}

TEST(Trace, PartialResolution) {
    auto d = parse(k21);
    EXPECT_THROW(trace_state(d, Resolution({0})), Error);
    EXPECT_THROW(Resolution({0, 2}), Error);
    try {
        trace_state(d, Resolution({0}));
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PartialResolution);
    }
}

TEST(Trace, EveryArcInOneCycle) {
    for (const auto& d : corpus::random_knot_codes(50, 0, 6, 3)) {
        auto s = trace_state(d, Resolution::from_mask(d.num_crossings(), 0b10110));
        std::size_t total = 0;
        for (const auto& cyc : s.cycles()) total += cyc.size();
        EXPECT_EQ(total, d.num_arcs());
        for (std::size_t a = 0; a < d.num_arcs(); ++a) {
            EXPECT_GE(s.cycle_of_arc(a), 0);
            EXPECT_LT(static_cast<std::size_t>(s.cycle_of_arc(a)), s.num_cycles());
        }
    }
}

TEST(Smoothings, Oriented) {
    auto t = oriented_smoothing(parse(kTrefoil));
    EXPECT_EQ(t.num_cycles(), 2u);
    EXPECT_EQ(t.height(), 0);
    EXPECT_EQ(oriented_smoothing(parse(k21)).num_cycles(), 1u);
    EXPECT_EQ(oriented_smoothing(parse("")).num_cycles(), 1u);
    auto m = oriented_smoothing(mirror(parse(kTrefoil)));
    EXPECT_EQ(m.height(), 0);
    EXPECT_EQ(m.num_cycles(), 2u);
}

TEST(Smoothings, AlternatelyColoured) {
    auto s = alternately_coloured_smoothing(parse(k21));
    EXPECT_EQ(s.num_cycles(), 2u);
    EXPECT_EQ(s.height(), 2);
    auto t = parse(kTrefoil);
    EXPECT_EQ(alternately_coloured_resolution(t), oriented_resolution(t));
    auto u = alternately_coloured_smoothing(parse(""));
    EXPECT_EQ(u.num_cycles(), 1u);
    EXPECT_EQ(u.height(), 0);
}

TEST(Classify, Examples) {
    auto d = parse(k21);
    EXPECT_EQ(classify_edge(d, Resolution({0, 0}), 1), EdgeType::SingleCycle);
    EXPECT_EQ(classify_edge(d, Resolution({0, 0}), 2), EdgeType::SingleCycle);
    EXPECT_EQ(classify_edge(parse(kTrefoil), Resolution({0, 0, 0}), 2), EdgeType::Merge);
    auto k = classify_edge(parse("O1+U1+"), Resolution({0}), 1);
    EXPECT_NE(k, EdgeType::SingleCycle);
    try {
        classify_edge(d, Resolution({1, 0}), 1);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EdgeNotOutgoing);
    }
}

// The jump-rule tracer against endpoint gluing, over whole cubes.
TEST(Properties, CycleCountsMatchEndpointGluing) {
    auto codes = corpus::all_knot_codes(3);
    auto more = corpus::random_knot_codes(150, 4, 6, 11);
    codes.insert(codes.end(), more.begin(), more.end());
    codes.push_back(parse("O1+U2-/U1+O2-/"));
    for (const auto& d : codes) {
        StateCube cube(d);
        for (std::uint64_t m = 0; m < cube.size(); ++m)
            ASSERT_EQ(cube.at(m).num_cycles(), static_cast<std::size_t>(oracle::smooth(d, m).circles))
                << to_string(d) << " mask " << m;
    }
}

TEST(Properties, EdgesChangeCyclesByAtMostOne) {
    for (const auto& d : corpus::random_knot_codes(100, 1, 6, 5)) {
        StateCube cube(d);
        const bool even = is_even_diagram(d);
        for (std::uint64_t m = 0; m < cube.size(); ++m) {
            // knot: cycles(m) has the parity of weight + cycles(0) unless some step was single-cycle
            for (std::size_t c = 0; c < d.num_crossings(); ++c) {
                if ((m >> c) & 1U) continue;
                auto a = static_cast<long>(cube.at(m).num_cycles());
                auto b = static_cast<long>(cube.at(m | (1ULL << c)).num_cycles());
                EXPECT_LE(std::labs(a - b), 1);
                if (even) EXPECT_NE(cube.edge_type(m, c), EdgeType::SingleCycle);
            }
        }
    }
}

TEST(Properties, AlternatelyColouredHeightIsOddWrithe) {
    for (const auto& d : corpus::random_knot_codes(300, 0, 8, 17)) {
        auto s = alternately_coloured_smoothing(d);
        EXPECT_EQ(s.height(), odd_writhe(d));
        EXPECT_EQ(oriented_smoothing(d).height(), 0);
    }
}

TEST(Properties, EvenCodesHaveNoSingleCycleEdges) {
    std::size_t checked = 0;
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& d : corpus::all_knot_codes(n)) {
            if (!is_even_diagram(d)) continue;
            ++checked;
            StateCube cube(d);
            for (std::uint64_t m = 0; m < cube.size(); ++m)
                for (std::size_t c = 0; c < n; ++c)
                    if (!((m >> c) & 1U)) ASSERT_NE(cube.edge_type(m, c), EdgeType::SingleCycle) << to_string(d);
        }
    EXPECT_GT(checked, 100u);
}
