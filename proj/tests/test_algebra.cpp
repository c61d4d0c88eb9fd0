#include <catch2/catch_amalgamated.hpp>

#include "homalg/constructions.hpp"

using namespace homalg;

namespace {

// tiny dense rank over Q, independent of the sparse engine
int dense_rank(std::vector<std::vector<Rational>> m) {
    int rank = 0;
    if (m.empty())
        return 0;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("build_algebra accepts the ground field and dual numbers") {
    auto k = ground_field();
    CHECK(k->dim() == 1);
    auto d = dual_numbers();
    CHECK(d->dim() == 2);
    CHECK(d->mul(svec_unit(1), svec_unit(1)).empty());  // eps^2 = 0
}

TEST_CASE("build_algebra rejects bogus structure constants") {
    // eps*eps = eps with a corrupted unit row: eps*1 = 0
    std::vector<std::vector<Svec>> t(2, std::vector<Svec>(2));
    t[0][0] = svec_unit(0);
    t[0][1] = svec_unit(1);
    t[1][0] = Svec{};
    t[1][1] = svec_unit(1);
    try {
        build_algebra("bogus", {"1", "eps"}, t, svec_unit(0));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("unit fails on basis element 'eps'") != std::string::npos);
    }

    // non-associative 3-dimensional table: (a a) a = 0 but a (a a) = 1
    std::vector<std::vector<Svec>> t3(3, std::vector<Svec>(3));
    for (int i = 0; i < 3; ++i) {
        t3[0][i] = svec_unit(i);
        t3[i][0] = svec_unit(i);
    }
    t3[1][1] = svec_unit(2);  // a a = b
    t3[1][2] = svec_unit(0);  // a b = 1
    t3[2][1] = Svec{};        // b a = 0
    t3[2][2] = Svec{};
    try {
        build_algebra("nonassoc", {"1", "a", "b"}, t3, svec_unit(0));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("associativity fails on triple (a, a, a)") !=
              std::string::npos);
    }
}

TEST_CASE("build_algebra names the offending associativity triple") {
    // x*x = 1 on a basis {1, x} but with a broken mixed product
    std::vector<std::vector<Svec>> t(2, std::vector<Svec>(2));
    t[0][0] = svec_unit(0);
    t[0][1] = svec_unit(1);
    t[1][0] = svec_unit(1);
    t[1][1] = svec_sum(svec_unit(0), svec_unit(1));  // x^2 = 1 + x, fine so far
    auto ok = build_algebra("quad", {"1", "x"}, t, svec_unit(0));
    CHECK(ok->dim() == 2);
    t[1][1] = Svec{{0, Rational(1)}};
    // now force a failure by corrupting 1*x instead
    t[0][1] = Svec{{0, Rational(1)}};
    try {
        build_algebra("broken", {"1", "x"}, t, svec_unit(0));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("unit fails") != std::string::npos);
    }
}

TEST_CASE("product algebra: k x k has orthogonal idempotents") {
    auto kk = product_algebra(ground_field(), ground_field());
    CHECK(kk->dim() == 2);
    CHECK(kk->mul(svec_unit(0), svec_unit(1)).empty());
    CHECK(kk->mul(svec_unit(0), svec_unit(0)) == svec_unit(0));
    auto kd = product_algebra(ground_field(), dual_numbers());
    CHECK(kd->dim() == 3);
}

TEST_CASE("matrix algebra unit relations") {
    auto m2 = matrix_algebra(ground_field(), 2);
    CHECK(m2.alg->dim() == 4);
    int e12 = m2.index(1, 2, 0), e21 = m2.index(2, 1, 0), e11 = m2.index(1, 1, 0);
    CHECK(m2.alg->mul(svec_unit(e12), svec_unit(e21)) == svec_unit(e11));
    CHECK(m2.alg->mul(svec_unit(e12), svec_unit(e12)).empty());

    auto m1 = matrix_algebra(ground_field(), 1);
    CHECK(m1.alg->dim() == 1);

    auto m2d = matrix_algebra(dual_numbers(), 2);
    CHECK(m2d.alg->dim() == 8);
    int e11eps = m2d.index(1, 1, 1);
    CHECK(m2d.alg->mul(svec_unit(e11eps), svec_unit(e11eps)).empty());
}

TEST_CASE("cyclic group algebra") {
    CHECK(cyclic_group_algebra(1).alg->dim() == 1);
    auto z2 = cyclic_group_algebra(2);
    CHECK(z2.alg->mul(svec_unit(1), svec_unit(1)) == svec_unit(0));
    CHECK(z2.counit(1) == 1);
    CHECK(z2.inverse(1) == 1);
    auto z3 = cyclic_group_algebra(3);
    CHECK(z3.inverse(1) == 2);
}

TEST_CASE("smash product of k^2 by the swap is the 2x2 matrix algebra") {
    auto a = idempotent_tuple_algebra(2);
    auto h = cyclic_group_algebra(2);
    auto swap = build_automorphism(a, {svec_unit(1), svec_unit(0)});
    auto c = smash_product(a, h, swap);
    CHECK(c.alg->dim() == 4);
    // ((1,0) (x) g0) ((0,1) (x) g0) = (1,0)(0,1) (x) g0 = 0
    CHECK(c.alg->mul(svec_unit(c.index(0, 0)), svec_unit(c.index(1, 0))).empty());

    // explicit isomorphism (a_1..a_n) (x) g^i |-> sum_k a_k e_{k, k+i}
    auto m2 = matrix_algebra(ground_field(), 2);
    const int n = 2;
    std::vector<Svec> iso(c.alg->dim());
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i < n; ++i) {
            int kp = ((k - 1 + i) % n) + 1;
            iso[c.index(k - 1, i)] = svec_unit(m2.index(k, kp, 0));
        }
    auto apply = [&](const Svec& v) {
        Svec out;
        for (const auto& [x, cv] : v) svec_add_scaled(out, iso[x], cv);
        return out;
    };
    CHECK(apply(c.alg->unit) == m2.alg->unit);
    for (int x = 0; x < c.alg->dim(); ++x)
        for (int y = 0; y < c.alg->dim(); ++y)
            CHECK(apply(c.alg->mul_basis(x, y)) == m2.alg->mul(iso[x], iso[y]));
}

TEST_CASE("smash product with the trivial group gives the algebra back") {
    auto k = ground_field();
    auto h = cyclic_group_algebra(1);
    auto id = build_automorphism(k, {svec_unit(0)});
    auto c = smash_product(k, h, id);
    CHECK(c.alg->dim() == 1);
}

TEST_CASE("smash product rejects a non-automorphism") {
    auto a = idempotent_tuple_algebra(2);
    CHECK_THROWS_AS(build_automorphism(a, {svec_unit(0), svec_unit(0)}), ValidationError);
    // order-3 rotation cannot act through Z/2
    auto a3 = idempotent_tuple_algebra(3);
    auto rot = build_automorphism(a3, {svec_unit(1), svec_unit(2), svec_unit(0)});
    CHECK_THROWS_AS(smash_product(a3, cyclic_group_algebra(2), rot), ValidationError);
}

TEST_CASE("abelianization dimensions") {
    auto k = ground_field();
    auto ab_k = abelianization(k);
    CHECK(ab_k.dim == 1);
    CHECK(ab_k.projection.at(0, 0) == 1);

    // matrix algebra: commutator span has rank 3 (brute force over the 16
    // basis commutators, independent dense eliminator), leaving the trace line
    auto m2 = matrix_algebra(ground_field(), 2);
    std::vector<std::vector<Rational>> comms;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Svec c = m2.alg->commutator(svec_unit(i), svec_unit(j));
            std::vector<Rational> dense(4, Rational(0));
            for (const auto& [x, v] : c) dense[x] = v;
            comms.push_back(dense);
        }
    CHECK(dense_rank(comms) == 3);
    CHECK(abelianization(m2.alg).dim == 1);

    CHECK(abelianization(dual_numbers()).dim == 2);
}

TEST_CASE("abelianization of matrix algebras matches the coefficient algebra") {
    std::vector<AlgebraPtr> rs = {ground_field(), product_algebra(ground_field(), ground_field()),
                                  dual_numbers()};
    for (const auto& r : rs) {
        int expected = abelianization(r).dim;
        for (int n = 2; n <= 3; ++n) CHECK(abelianization(matrix_algebra(r, n).alg).dim == expected);
    }
}

TEST_CASE("separability witnesses") {
    auto kk = idempotent_tuple_algebra(2);
    auto w = make_separability_witness(
        kk, {"d1", "d2"}, {svec_unit(0), svec_unit(1)},
        {{{0, 0}, Rational(1)}, {{1, 1}, Rational(1)}});
    CHECK(verify_separability(w).pass);

    auto k = ground_field();
    auto wk = make_separability_witness(k, {"1"}, {svec_unit(0)}, {{{0, 0}, Rational(1)}});
    CHECK(verify_separability(wk).pass);

    auto bad = make_separability_witness(kk, {"d1", "d2"}, {svec_unit(0), svec_unit(1)},
                                         {{{0, 0}, Rational(1)}});
    auto verdict = verify_separability(bad);
    CHECK_FALSE(verdict.pass);
    CHECK(verdict.failure.find("!= 1") != std::string::npos);
}

TEST_CASE("commutator lie algebra") {
    auto k = ground_field();
    auto gk = commutator_lie(k);
    CHECK(gk.dim() == 1);
    CHECK(gk.bracket[0][0].empty());

    auto m2 = matrix_algebra(ground_field(), 2);
    auto g = commutator_lie(m2.alg);
    int e12 = m2.index(1, 2, 0), e21 = m2.index(2, 1, 0);
    Svec expected = svec_diff(svec_unit(m2.index(1, 1, 0)), svec_unit(m2.index(2, 2, 0)));
    CHECK(g.bracket[e12][e21] == expected);

    auto gd = commutator_lie(dual_numbers());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(gd.bracket[i][j].empty());
}

TEST_CASE("group coinvariants") {
    auto z2 = cyclic_group_algebra(2);
    // trivial action on k
    {
        std::vector<std::vector<Svec>> act(2, std::vector<Svec>(1, svec_unit(0)));
        Bimodule m = build_bimodule(z2.alg, {"v"}, act, act);
        CHECK(group_coinvariants(z2, m).dim == 1);
    }
    // swap of two basis lines, trivial right action
    {
        std::vector<std::vector<Svec>> left(2), right(2);
        left[0] = {svec_unit(0), svec_unit(1)};   // identity
        left[1] = {svec_unit(1), svec_unit(0)};   // swap
        right[0] = {svec_unit(0), svec_unit(1)};
        right[1] = {svec_unit(0), svec_unit(1)};  // counit: g acts as 1
        Bimodule m = build_bimodule(z2.alg, {"x", "y"}, left, right);
        auto co = group_coinvariants(z2, m);
        CHECK(co.dim == 1);
        // the diagonal survives: x and y project to the same class
        CHECK(co.projection.apply(svec_unit(0)) == co.projection.apply(svec_unit(1)));
    }
}

TEST_CASE("bimodule helpers") {
    auto a = dual_numbers();
    Bimodule m = algebra_as_bimodule(a);
    CHECK(m.dim() == 2);
    Bimodule s = bimodule_direct_sum(m, m);
    CHECK(s.dim() == 4);

    auto m2 = matrix_algebra(ground_field(), 2);
    auto diag = idempotent_tuple_algebra(2);
    auto f = build_algebra_morphism(diag, m2.alg,
                                    {svec_unit(m2.index(1, 1, 0)), svec_unit(m2.index(2, 2, 0))});
    Bimodule restricted = restrict_bimodule(f, algebra_as_bimodule(m2.alg));
    CHECK(restricted.dim() == 4);
    CHECK(restricted.over == diag);
}
