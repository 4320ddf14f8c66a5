#include "bowlab/cores.hpp"
#include "bowlab/errors.hpp"
#include "bowlab/polynomial.hpp"
#include "bowlab/rational.hpp"

#include <doctest.h>

#include <cstdlib>
#include <vector>

using namespace bowlab;

namespace {

// Coefficients of the box-counting generating function, computed by an
// independent partition count: the x^d coefficient is the number of
// partitions of d fitting in a k x (m-k) box.
long long partitions_in_box(int d, int parts, int size) {
    if (d == 0) return 1;
    if (d < 0 || parts == 0 || size == 0) return 0;
    // either use a part equal to `size`, or shrink the box
    return partitions_in_box(d - size, parts - 1, size) +
           partitions_in_box(d, parts, size - 1);
}

} // namespace

TEST_CASE("signature validity") {
    CHECK(signature_valid({1, {2, 0}}));
    CHECK(signature_valid({0, {1}}));
    CHECK(signature_valid({2, {2, 2}}));
    CHECK(!signature_valid({3, {2, 2}}));
    CHECK(!signature_valid({1, {3, 0}}));
    CHECK(!signature_valid({-1, {1}}));
    CHECK(!signature_valid({0, {}}));
    TwoRowSignature sig{1, {2, 0}};
    CHECK(sig.u() == std::vector<int>{2, 2});
    CHECK(sig.total() == 2);
}

TEST_CASE("core data on the worked signatures") {
    SUBCASE("one double increment and one zero") {
        CoreData d = core_data({1, {2, 0}});
        CHECK(d.a == std::vector<int>{1});
        CHECK(d.b == std::vector<int>{2});
        CHECK(d.r == std::vector<int>{1});
        CHECK(d.rank == 1);
    }
    SUBCASE("no zeros after the last double increment") {
        CoreData d = core_data({2, {2, 2}});
        CHECK(d.b.empty());
        CHECK(d.rank == 0);
    }
    SUBCASE("two of each") {
        CoreData d = core_data({2, {2, 2, 0, 0}});
        CHECK(d.a == std::vector<int>{2, 1});
        CHECK(d.b == std::vector<int>{4, 3});
        CHECK(d.r == std::vector<int>{2, 2});
        CHECK(d.rank == 4);
    }
}

TEST_CASE("surgery steps on the worked signatures") {
    SUBCASE("rank four signature") {
        TwoRowSignature sig{2, {2, 2, 0, 0}};
        TwoRowSignature u = u_step(sig);
        CHECK(u.c == std::vector<int>{2, 1, 1, 0});
        CHECK(u.k == 2);
        CHECK(core_data(u).rank == 1);
        TwoRowSignature v = v_step(sig);
        CHECK(v.c == std::vector<int>{2, 0, 2, 0});
        CHECK(core_data(v).rank == 3);
    }
    SUBCASE("rank one signature") {
        TwoRowSignature sig{1, {2, 0}};
        CHECK(u_step(sig).c == std::vector<int>{1, 1});
        CHECK(v_step(sig).c == std::vector<int>{0, 2});
        CHECK(core_data(u_step(sig)).rank == 0);
        CHECK(core_data(v_step(sig)).rank == 0);
    }
    SUBCASE("a double increment above the acted zero stays put") {
        // the split must happen below the zero, not at the top
        TwoRowSignature sig{2, {2, 0, 2}};
        CHECK(core_data(sig).rank == 1);
        CHECK(u_step(sig).c == std::vector<int>{1, 1, 2});
        CHECK(v_step(sig).c == std::vector<int>{0, 2, 2});
    }
    SUBCASE("rank zero refuses surgery") {
        CHECK_THROWS_AS(u_step({2, {2, 2}}), ValidationError);
        CHECK_THROWS_AS(v_step({2, {2, 2}}), ValidationError);
    }
}

TEST_CASE("every valid signature steps down to valid signatures") {
    for (int n = 1; n <= 4; ++n) {
        for (const TwoRowSignature& sig : enumerate_signatures(n)) {
            CoreData d = core_data(sig);
            if (d.rank == 0) {
                BaseCase bc = base_case_descriptor(sig);
                CHECK(bc.sub >= 0);
                CHECK(bc.sub <= bc.amb);
                continue;
            }
            TwoRowSignature u = u_step(sig);
            TwoRowSignature v = v_step(sig);
            CHECK(signature_valid(u));
            CHECK(signature_valid(v));
            CHECK(core_data(u).rank < d.rank);
            CHECK(core_data(v).rank == d.rank - 1);
        }
    }
}

TEST_CASE("nilpotent seed matrix") {
    SUBCASE("printed three-block case") {
        RatMat nil = nil_matrix({1, {1, 0, 2}});
        CHECK(nil.rows() == 3);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                CHECK(nil.at(r, c) == ((r == 1 && c == 0) ? rat(1) : rat(0)));
            }
        }
    }
    SUBCASE("no double increments gives zero") {
        CHECK(nil_matrix({1, {1, 1}}).is_zero());
    }
    SUBCASE("worked two-by-two") {
        RatMat nil = nil_matrix({1, {2, 0}});
        CHECK(nil.at(1, 0) == rat(1));
        CHECK(nil.at(0, 0) == rat(0));
        CHECK(nil.at(0, 1) == rat(0));
        CHECK(nil.at(1, 1) == rat(0));
    }
}

TEST_CASE("free pattern of the gl factor") {
    SUBCASE("printed three-block case") {
        TwoRowSignature sig{1, {1, 0, 2}};
        const bool expect[3][3] = {
            {false, true, true},
            {false, true, false},
            {false, true, true},
        };
        for (int r = 1; r <= 3; ++r) {
            for (int c = 1; c <= 3; ++c) {
                INFO("entry (" << r << "," << c << ")");
                CHECK(m_entry_free(sig, r, c) == expect[r - 1][c - 1]);
            }
        }
    }
    SUBCASE("printed four-by-four case") {
        TwoRowSignature sig{2, {2, 2, 0, 0}};
        const bool expect[4][4] = {
            {false, true, true, true},
            {false, true, false, false},
            {false, true, false, true},
            {false, true, false, true},
        };
        for (int r = 1; r <= 4; ++r) {
            for (int c = 1; c <= 4; ++c) {
                INFO("entry (" << r << "," << c << ")");
                CHECK(m_entry_free(sig, r, c) == expect[r - 1][c - 1]);
            }
        }
    }
}

TEST_CASE("torus weights") {
    CHECK(torus_weights({1, {2, 0}}) == std::vector<int>{2, 0});
    CHECK(torus_weights({2, {2, 2, 0, 0}}) == std::vector<int>{2, 0, 2, 0});
    CHECK(torus_weights({1, {1, 1}}) == std::vector<int>{1, 1});
}

TEST_CASE("chart weight lists match the printed examples") {
    SUBCASE("two blocks") {
        ChartDescription chart = chart_description({1, {2, 0}});
        CHECK(chart.all() == std::vector<int>{2, 0, 0, 2, 4, 2});
    }
    SUBCASE("four blocks") {
        ChartDescription chart = chart_description({2, {2, 2, 0, 0}});
        CHECK(chart.m_weights == std::vector<int>{4, 2, 4, 2, 4, 4, 2, 2});
    }
    SUBCASE("all single increments put weight two on every free entry") {
        ChartDescription chart = chart_description({1, {1, 1}});
        for (int w : chart.m_weights) CHECK(w == 2);
        CHECK(chart.tail_weights.empty());
    }
}

TEST_CASE("box counting polynomials") {
    SUBCASE("four choose two") {
        Polynomial g = gaussian_binomial(4, 2);
        CHECK(g == Polynomial(std::vector<Rational>{rat(1), rat(1), rat(2),
                                                    rat(1), rat(1)}));
    }
    SUBCASE("coefficients count partitions in a box") {
        for (int m = 0; m <= 6; ++m) {
            for (int k = 0; k <= m; ++k) {
                Polynomial g = gaussian_binomial(m, k);
                CHECK(g.degree() == static_cast<long>(k) * (m - k));
                for (long d = 0; d <= g.degree(); ++d) {
                    CHECK(g.coeff(d) ==
                          rat(partitions_in_box(static_cast<int>(d), k, m - k)));
                }
            }
        }
    }
    SUBCASE("symmetry and palindromes") {
        for (int m = 0; m <= 6; ++m) {
            for (int k = 0; k <= m; ++k) {
                Polynomial g = gaussian_binomial(m, k);
                CHECK(g == gaussian_binomial(m, m - k));
                for (long d = 0; d <= g.degree(); ++d) {
                    CHECK(g.coeff(d) == g.coeff(g.degree() - d));
                }
            }
        }
    }
    SUBCASE("out of range") {
        CHECK(gaussian_binomial(3, 5).is_zero());
        CHECK(gaussian_binomial(3, -1).is_zero());
    }
}

TEST_CASE("recursion tree bookkeeping") {
    TwoRowSignature sig{1, {2, 0}};
    TreeStats stats = recursion_tree(sig);
    CHECK(stats.nodes == 3);
    CHECK(stats.leaves == 2);
    CHECK(stats.max_depth == 1);
    REQUIRE(stats.leaf_cases.size() == 2);
    CHECK(stats.leaf_cases[0].sub == 1); // branch with the split increment
    CHECK(stats.leaf_cases[0].amb == 2);
    CHECK(stats.leaf_cases[1].sub == 0); // branch with the inserted zero
    CHECK(stats.leaf_cases[1].amb == 0);
}

TEST_CASE("node budget is honored") {
    setenv("BOWLAB_NODE_BUDGET", "2", 1);
    CHECK_THROWS_AS(recursion_tree({1, {2, 0}}), ValidationError);
    unsetenv("BOWLAB_NODE_BUDGET");
    CHECK(recursion_tree({1, {2, 0}}).nodes == 3);
}

TEST_CASE("trees stay in budget for all small signatures") {
    for (int n = 1; n <= 4; ++n) {
        for (const TwoRowSignature& sig : enumerate_signatures(n)) {
            TreeStats stats = recursion_tree(sig);
            CHECK(stats.nodes >= 1);
            for (const BaseCase& bc : stats.leaf_cases) {
                Polynomial g = gaussian_binomial(bc.amb, bc.sub);
                CHECK(!g.is_zero());
                for (long d = 0; d <= g.degree(); ++d) {
                    CHECK(g.coeff(d) == g.coeff(g.degree() - d));
                }
            }
        }
    }
}
