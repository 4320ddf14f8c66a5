#include "bowlab/matrix.hpp"
#include "bowlab/rng.hpp"
#include "bowlab/shapes.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace bowlab;

namespace {

// Compare pattern_entry against a picture given row by row with characters
// '1', '0', '*'.
void check_pattern(ShapeKind kind, const Mu& mu,
                   const std::vector<std::string>& picture) {
    REQUIRE(static_cast<int>(picture.size()) == mu.total());
    for (int r = 0; r < mu.total(); ++r) {
        REQUIRE(static_cast<int>(picture[static_cast<std::size_t>(r)].size()) ==
                mu.total());
        for (int c = 0; c < mu.total(); ++c) {
            EntryRule want = EntryRule::Free;
            char ch = picture[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (ch == '0') want = EntryRule::Zero;
            if (ch == '1') want = EntryRule::One;
            INFO("entry (" << r + 1 << "," << c + 1 << ")");
            CHECK(pattern_entry(kind, mu, r, c) == want);
        }
    }
}

RatMat from_picture(const std::vector<std::string>& picture, Rng& rng) {
    int n = static_cast<int>(picture.size());
    RatMat m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            char ch = picture[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (ch == '1') {
                m.at(r, c) = rat(1);
            } else if (ch == '*') {
                m.at(r, c) = rng.nonzero_rational();
            }
        }
    }
    return m;
}

RatMat random_matrix(int n, Rng& rng) {
    RatMat m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m.at(r, c) = rng.rational();
    }
    return m;
}

} // namespace

TEST_CASE("dimension chains") {
    CHECK(chain_from_mu(Mu({2, 4})) == std::vector<int>{6, 4, 0});
    CHECK(chain_from_mu(Mu({1})) == std::vector<int>{1, 0});
    CHECK(chain_from_mu(Mu({2, 2, 1})) == std::vector<int>{5, 3, 1, 0});
}

TEST_CASE("projected subdiagonal matrix") {
    SUBCASE("two blocks of sizes 2 and 4") {
        RatMat f = build_f(Mu({2, 4}));
        int ones = 0;
        for (int r = 0; r < 6; ++r) {
            for (int c = 0; c < 6; ++c) {
                if (f.at(r, c) != rat(0)) {
                    ++ones;
                    CHECK(f.at(r, c) == rat(1));
                }
            }
        }
        CHECK(ones == 4);
        CHECK(f.at(1, 0) == rat(1)); // (2,1)
        CHECK(f.at(3, 2) == rat(1)); // (4,3)
        CHECK(f.at(4, 3) == rat(1)); // (5,4)
        CHECK(f.at(5, 4) == rat(1)); // (6,5)
        CHECK(f.at(2, 1) == rat(0)); // boundary-crossing position stays 0
    }
    SUBCASE("all blocks of size one give zero") {
        CHECK(build_f(Mu({1, 1})).is_zero());
    }
    SUBCASE("single block") {
        RatMat f = build_f(Mu({2}));
        CHECK(f.at(1, 0) == rat(1));
        CHECK(f.at(0, 0) == rat(0));
        CHECK(f.at(0, 1) == rat(0));
        CHECK(f.at(1, 1) == rat(0));
    }
}

TEST_CASE("printed six-by-six patterns") {
    Mu mu({2, 4});
    SUBCASE("unipotent group shape") {
        std::vector<std::string> picture = {
            "1*****",
            "010000",
            "001***",
            "0001**",
            "00001*",
            "000001",
        };
        check_pattern(ShapeKind::GroupU, mu, picture);
        Rng rng(31);
        RatMat m = from_picture(picture, rng);
        CHECK(shape_membership(ShapeKind::GroupU, mu, m).ok);
    }
    SUBCASE("slice shape") {
        std::vector<std::string> picture = {
            "0*****",
            "1*0000",
            "0*000*",
            "0*100*",
            "0*010*",
            "0*001*",
        };
        check_pattern(ShapeKind::SliceS, mu, picture);
        Rng rng(32);
        RatMat m = from_picture(picture, rng);
        CHECK(shape_membership(ShapeKind::SliceS, mu, m).ok);
        CHECK(shape_membership(ShapeKind::LevelP, mu, m).ok);
    }
    SUBCASE("identity membership") {
        RatMat id = RatMat::identity(6);
        CHECK(shape_membership(ShapeKind::GroupU, mu, id).ok);
        CHECK(!shape_membership(ShapeKind::SliceS, mu, id).ok);
    }
}

TEST_CASE("violation reports use one-based positions and cap out") {
    Mu mu({2, 4});
    RatMat bad = RatMat::identity(6);
    bad.at(1, 0) = rat(5); // row 2, column 1
    MembershipReport rep = shape_membership(ShapeKind::GroupU, mu, bad);
    CHECK(!rep.ok);
    REQUIRE(rep.violation_count == 1);
    CHECK(rep.violations[0].row == 2);
    CHECK(rep.violations[0].col == 1);

    RatMat worse(6, 6);
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) worse.at(r, c) = rat(7);
    }
    MembershipReport rep2 = shape_membership(ShapeKind::GroupU, mu, worse);
    CHECK(!rep2.ok);
    CHECK(rep2.violation_count > MembershipReport::kMaxViolations);
    CHECK(static_cast<int>(rep2.violations.size()) ==
          MembershipReport::kMaxViolations);
}

TEST_CASE("the projected subdiagonal lies in its own level set") {
    for (const std::vector<int>& parts :
         {std::vector<int>{2, 4}, std::vector<int>{1, 1, 1},
          std::vector<int>{3, 2}, std::vector<int>{2, 2, 1}, std::vector<int>{1}}) {
        Mu mu(parts);
        RatMat f = build_f(mu);
        CHECK(shape_membership(ShapeKind::LevelP, mu, f).ok);
        CHECK(shape_membership(ShapeKind::FMatrix, mu, f).ok);
        CHECK(level_membership_via_corners(mu, f).ok);
    }
}

TEST_CASE("slice members lie in the level set") {
    for (const std::vector<int>& parts :
         {std::vector<int>{2, 4}, std::vector<int>{1, 1, 1},
          std::vector<int>{3, 2}, std::vector<int>{2, 2, 1}}) {
        Mu mu(parts);
        Rng rng(500 + mu.total());
        for (int t = 0; t < 50; ++t) {
            RatMat s = sample_shape(ShapeKind::SliceS, mu, rng);
            CHECK(shape_membership(ShapeKind::SliceS, mu, s).ok);
            CHECK(shape_membership(ShapeKind::LevelP, mu, s).ok);
        }
    }
}

TEST_CASE("unipotent shape is a group") {
    for (const std::vector<int>& parts :
         {std::vector<int>{2, 4}, std::vector<int>{1, 1, 1}, std::vector<int>{3, 2}}) {
        Mu mu(parts);
        Rng rng(900 + mu.total());
        CHECK(shape_membership(ShapeKind::GroupU, mu, RatMat::identity(mu.total())).ok);
        for (int t = 0; t < 200; ++t) {
            RatMat g = sample_shape(ShapeKind::GroupU, mu, rng);
            RatMat h = sample_shape(ShapeKind::GroupU, mu, rng);
            CHECK(shape_membership(ShapeKind::GroupU, mu, g * h).ok);
            CHECK(shape_membership(ShapeKind::GroupU, mu, rat_inverse(g)).ok);
        }
    }
}

TEST_CASE("both level-set characterizations agree") {
    for (const std::vector<int>& parts :
         {std::vector<int>{2, 4}, std::vector<int>{1, 1, 1}, std::vector<int>{3, 2}}) {
        Mu mu(parts);
        Rng rng(1234 + mu.total());
        int in_level = 0;
        for (int t = 0; t < 500; ++t) {
            RatMat m;
            switch (t % 3) {
            case 0:
                m = sample_shape(ShapeKind::LevelP, mu, rng);
                break;
            case 1:
                m = random_matrix(mu.total(), rng);
                break;
            default: {
                m = sample_shape(ShapeKind::LevelP, mu, rng);
                int r = static_cast<int>(rng.int_in(0, mu.total() - 1));
                int c = static_cast<int>(rng.int_in(0, mu.total() - 1));
                m.at(r, c) = m.at(r, c) + rng.nonzero_rational();
                break;
            }
            }
            bool a = shape_membership(ShapeKind::LevelP, mu, m).ok;
            bool b = level_membership_via_corners(mu, m).ok;
            CHECK(a == b);
            if (a) ++in_level;
        }
        CHECK(in_level >= 100); // the sampler path really exercises members
    }
}

TEST_CASE("single-step patterns") {
    Rng rng(2718);
    SUBCASE("level pattern of one step") {
        // v2 = 3, v1 = 1, v = 2: column 0 must have a 1 at row 1 and 0 below.
        RatMat k = random_matrix(3, rng);
        k.at(1, 0) = rat(1);
        k.at(2, 0) = rat(0);
        CHECK(step_level_membership(3, 1, k).ok);
        k.at(2, 0) = rat(4);
        CHECK(!step_level_membership(3, 1, k).ok);
    }
    SUBCASE("slice pattern of one step") {
        RatMat k(3, 3);
        k.at(0, 0) = rat(0);
        k.at(1, 0) = rat(1);
        k.at(0, 1) = rng.rational();
        k.at(0, 2) = rng.rational();
        k.at(1, 1) = rat(0);
        k.at(1, 2) = rat(0);
        k.at(2, 1) = rng.rational();
        k.at(2, 2) = rng.rational();
        CHECK(step_slice_membership(3, 1, k).ok);
        k.at(1, 2) = rat(1);
        CHECK(!step_slice_membership(3, 1, k).ok);
    }
}

TEST_CASE("sampler respects every pattern kind") {
    for (const std::vector<int>& parts :
         {std::vector<int>{2, 4}, std::vector<int>{1, 1, 1}, std::vector<int>{2, 2, 1}}) {
        Mu mu(parts);
        Rng rng(4321 + mu.n());
        for (ShapeKind kind : {ShapeKind::GroupU, ShapeKind::SliceS,
                               ShapeKind::LevelP, ShapeKind::FMatrix}) {
            for (int t = 0; t < 20; ++t) {
                RatMat m = sample_shape(kind, mu, rng);
                CHECK(shape_membership(kind, mu, m).ok);
            }
        }
    }
}
