#include <catch2/catch_amalgamated.hpp>

#include "homalg/lie_homology.hpp"
#include "oracle.hpp"

using namespace homalg;

namespace {

std::vector<long> exterior_graded_dims(const std::vector<int>& generator_degrees, int cap) {
    // coefficients of prod (1 + q^d)
    std::vector<long> coeff(cap + 1, 0);
    coeff[0] = 1;
    for (int d : generator_degrees)
        for (int n = cap; n >= d; --n) coeff[n] += coeff[n - d];
    return coeff;
}

}  // namespace

TEST_CASE("abelian Lie algebras have exterior-power homology") {
    std::vector<std::vector<Svec>> br(3, std::vector<Svec>(3));
    auto g = build_lie_algebra("abelian3", {"x", "y", "z"}, br);
    auto cc = chevalley_eilenberg_complex(g, 3);
    CHECK(cc.vanishes_above);
    auto hr = compute_homology(cc);
    CHECK(hr.betti() == std::vector<long>{1, 3, 3, 1});
    for (int p = 1; p <= 3; ++p) CHECK(cc.d[p].is_zero());
}

TEST_CASE("gl_1 has Betti (1,1)") {
    auto g = commutator_lie(ground_field());
    auto hr = compute_homology(chevalley_eilenberg_complex(g, 1));
    CHECK(hr.betti() == std::vector<long>{1, 1});
}

TEST_CASE("gl_2 homology against the dense oracle and the odd-generator dims") {
    auto g = commutator_lie(matrix_algebra(ground_field(), 2).alg);
    auto cc = chevalley_eilenberg_complex(g, 4);
    CHECK(cc.vanishes_above);

    // independent dense boundary + rank oracle
    std::vector<std::vector<std::vector<int>>> bases;
    for (int p = 0; p <= 4; ++p) bases.push_back(homalg::detail::subsets(4, p));
    std::vector<int> ranks(6, 0);
    for (int p = 1; p <= 4; ++p)
        ranks[p] = oracle::dense_rank(oracle::ce_boundary(g, p, bases[p], bases[p - 1]));
    std::vector<long> expected;
    for (int p = 0; p <= 4; ++p)
        expected.push_back(static_cast<long>(bases[p].size()) - ranks[p] - ranks[p + 1]);
    REQUIRE(expected == std::vector<long>{1, 1, 0, 1, 1});  // frozen

    auto hr = compute_homology(cc);
    CHECK(hr.betti() == expected);
    CHECK(hr.betti() == exterior_graded_dims({1, 3}, 4));
}

TEST_CASE("gl_3 homology matches the free graded algebra on x1, x3, x5 in degrees <= 6") {
    auto g = commutator_lie(matrix_algebra(ground_field(), 3).alg);
    auto cc = chevalley_eilenberg_complex(g, 7);
    auto hr = compute_homology(cc, false);
    auto expected = exterior_graded_dims({1, 3, 5}, 6);
    for (int p = 0; p <= 6; ++p) {
        INFO("degree " << p);
        CHECK(hr.betti()[p] == expected[p]);
    }
}

TEST_CASE("cap beyond the dimension pads with exact zero degrees") {
    auto g = commutator_lie(ground_field());
    auto cc = chevalley_eilenberg_complex(g, 4);
    auto hr = compute_homology(cc);
    CHECK(hr.betti() == std::vector<long>{1, 1, 0, 0, 0});
    for (const auto& deg : hr.degrees) CHECK(deg.reliable);
}

TEST_CASE("d squared is zero is constructor-enforced") {
    auto g = commutator_lie(matrix_algebra(ground_field(), 2).alg);
    auto cc = chevalley_eilenberg_complex(g, 4);
    for (int p = 2; p <= 4; ++p) CHECK(cc.d[p - 1].compose(cc.d[p]).is_zero());
}
