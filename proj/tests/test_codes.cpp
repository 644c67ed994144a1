#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace vknot;

namespace {

const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";
const char* k21 = "O1+O2+U1+U2+";

ErrorKind kind_of(const std::string& text) {
    try {
        parse(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorKind::MalformedCertificate;
}

}  // namespace

TEST(Parse, Examples) {
    auto d = parse(k21);
    EXPECT_TRUE(d.is_knot());
    EXPECT_EQ(d.num_crossings(), 2u);
    EXPECT_EQ(d.crossing_sign(0), 1);
    EXPECT_EQ(d.crossing_sign(1), 1);

    auto u = parse("");
    EXPECT_EQ(u.num_crossings(), 0u);
    EXPECT_EQ(u.num_components(), 1u);

    auto t = parse(kTrefoil);
    EXPECT_EQ(t.num_crossings(), 3u);
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(t.crossing_sign(c), 1);
}

TEST(Parse, WhitespaceAndRelabel) {
    auto d = parse(" O7+ O3+\tU7+ U3+ ");
    EXPECT_EQ(to_string(d), k21);
    EXPECT_EQ(to_string(parse("O1-U2+/U1-O2+")), "O1-U2+/U1-O2+");
    EXPECT_EQ(to_string(parse("/")), "/");
    EXPECT_EQ(parse("/").num_components(), 2u);
}

TEST(Parse, Errors) {
    EXPECT_EQ(kind_of("O1+X"), ErrorKind::MalformedToken);
    EXPECT_EQ(kind_of("O1U1+"), ErrorKind::MalformedToken);
    EXPECT_EQ(kind_of("O+U1+"), ErrorKind::MalformedToken);
    EXPECT_EQ(kind_of("O0+U0+"), ErrorKind::MalformedToken);
    EXPECT_EQ(kind_of("O1+"), ErrorKind::LabelCountMismatch);
    EXPECT_EQ(kind_of("O1+U1+O1+"), ErrorKind::LabelCountMismatch);
    EXPECT_EQ(kind_of("O1+O1+"), ErrorKind::RoleConflict);
    EXPECT_EQ(kind_of("U1+U1+"), ErrorKind::RoleConflict);
    EXPECT_EQ(kind_of("O1+U1-"), ErrorKind::SignConflict);
}

TEST(Writhe, Examples) {
    EXPECT_EQ(writhe(parse(kTrefoil)), 3);
    EXPECT_EQ(writhe(parse("")), 0);
    EXPECT_EQ(writhe(parse(k21)), 2);
}

TEST(Parity, Examples) {
    for (const auto& info : crossing_parities(parse(k21))) EXPECT_EQ(info.parity, Parity::Odd);
    for (const auto& info : crossing_parities(parse(kTrefoil))) EXPECT_EQ(info.parity, Parity::Even);
    EXPECT_TRUE(crossing_parities(parse("")).empty());
    EXPECT_EQ(odd_writhe(parse(k21)), 2);
    EXPECT_EQ(odd_writhe(parse(kTrefoil)), 0);
    EXPECT_EQ(odd_writhe(parse("")), 0);
}

TEST(Parity, LinkCrossingsAreMixed) {
    auto d = parse("O1-U2+/U1-O2+");
    for (const auto& info : crossing_parities(d)) {
        EXPECT_TRUE(info.mixed);
        EXPECT_EQ(info.parity, Parity::Even);
    }
    EXPECT_THROW(odd_writhe(d), Error);
}

TEST(Mirror, Examples) {
    auto m = mirror(parse(kTrefoil));
    EXPECT_EQ(to_string(m), "U1-O2-U3-O1-U2-O3-");
    EXPECT_EQ(mirror(parse("")), parse(""));
    EXPECT_EQ(mirror(mirror(parse(k21))), parse(k21));
}

TEST(ConnectSum, Examples) {
    auto d = parse(k21);
    auto s = connect_sum(d, d, 0, 0);
    EXPECT_EQ(s.num_crossings(), 4u);
    EXPECT_EQ(odd_writhe(s), 4);
    EXPECT_EQ(connect_sum(d, parse(""), 1, 0), d);
    auto t = connect_sum(parse(kTrefoil), mirror(parse(kTrefoil)), 2, 4);
    EXPECT_EQ(t.num_crossings(), 6u);
    EXPECT_EQ(writhe(t), 0);
    EXPECT_THROW(connect_sum(d, d, 4, 0), Error);
}

TEST(Properties, RoundTripRotationMirrorAndSums) {
    auto codes = corpus::all_knot_codes(3);
    auto more = corpus::random_knot_codes(200, 1, 8, 7);
    codes.insert(codes.end(), more.begin(), more.end());
    for (const auto& d : codes) {
        EXPECT_EQ(parse(to_string(d)), d);
        EXPECT_EQ(odd_writhe(mirror(d)), -odd_writhe(d));
        std::multiset<std::pair<int, int>> par;
        for (const auto& i : crossing_parities(d)) par.insert({static_cast<int>(i.parity), i.sign});
        for (std::size_t r = 0; r < d.num_passages(); ++r) {
            auto rd = rotate(d, 0, r);
            EXPECT_EQ(odd_writhe(rd), odd_writhe(d));
            EXPECT_TRUE(equivalent_up_to_rotation(rd, d));
            std::multiset<std::pair<int, int>> pr;
            for (const auto& i : crossing_parities(rd)) pr.insert({static_cast<int>(i.parity), i.sign});
            EXPECT_EQ(pr, par);
        }
    }
}

TEST(Properties, OddWritheAddsAtEverySite) {
    auto small = corpus::all_knot_codes(2);
    auto three = corpus::all_knot_codes(3);
    small.insert(small.end(), three.begin(), three.begin() + 40);
    for (const auto& a : small)
        for (std::size_t j = 0; j < small.size(); j += 7) {
            const auto& b = small[j];
            for (std::size_t sa = 0; sa < a.num_arcs(); ++sa)
                for (std::size_t sb = 0; sb < b.num_arcs(); ++sb)
                    EXPECT_EQ(odd_writhe(connect_sum(a, b, sa, sb)), odd_writhe(a) + odd_writhe(b));
        }
}

TEST(Equivalence, DistinguishesChirality) {
    EXPECT_FALSE(equivalent_up_to_rotation(parse(kTrefoil), mirror(parse(kTrefoil))));
    EXPECT_TRUE(equivalent_up_to_rotation(parse("O1+U1+/O2-U2-"), parse("U1+O1+/U2-O2-")));
    EXPECT_FALSE(equivalent_up_to_rotation(parse("O1+U1+/O2-U2-"), parse("O1-U1-/O2+U2+")));
}

TEST(Corpus, ExhaustiveCounts) {
    EXPECT_EQ(corpus::all_knot_codes(0).size(), 1u);
    // one chord, roles and signs up to rotation: O1+U1+, O1-U1-
    EXPECT_EQ(corpus::all_knot_codes(1).size(), 2u);
    for (const auto& d : corpus::all_knot_codes(4)) EXPECT_EQ(d.num_crossings(), 4u);
}
