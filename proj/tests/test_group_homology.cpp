#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homalg/group_homology.hpp"

using namespace homalg;

namespace {

SeqElement random_finite(std::mt19937_64& rng, int vdim, int spread = 5) {
    SeqElement m = SeqElement::zero(vdim);
    int nspikes = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < nspikes; ++s) {
        long i = static_cast<long>(rng() % (2 * spread + 1)) - spread;
        std::vector<Rational> v(vdim, Rational(0));
        for (int c = 0; c < vdim; ++c) v[c] = Rational(static_cast<long>(rng() % 5) - 2);
        m.set_value(i, detail::vvalue_add(m.value(i), v, 1));
    }
    return m;
}

SeqElement random_representable(std::mt19937_64& rng, int vdim) {
    SeqElement m = random_finite(rng, vdim);
    for (int c = 0; c < vdim; ++c) {
        m.left[c] = Rational(static_cast<long>(rng() % 5) - 2);
        m.right[c] = Rational(static_cast<long>(rng() % 5) - 2);
    }
    return m;
}

}  // namespace

TEST_CASE("shift and values") {
    SeqElement m = SeqElement::spike(1, 0, {Rational(1)});
    SeqElement s = m.shift(1);  // value'(i) = value(i+1): spike moves to -1
    CHECK(s.value(-1) == std::vector<Rational>{Rational(1)});
    CHECK(s.value(0) == std::vector<Rational>{Rational(0)});

    SeqElement c = SeqElement::constant({Rational(3)});
    CHECK(c.shift(5) == c);  // constants are shift-fixed

    // step function: right constant 1, shifting moves the step
    SeqElement step = SeqElement::zero(1);
    step.right = {Rational(1)};
    SeqElement t = step.shift(1);
    CHECK(t.value(-1) == std::vector<Rational>{Rational(1)});
    CHECK(t.value(-2) == std::vector<Rational>{Rational(0)});
    CHECK(t.value(0) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("degree-zero preimage: the spike at zero") {
    SeqElement m = SeqElement::spike(1, 0, {Rational(1)});
    GroupOneChain pre = h0_preimage(m);
    REQUIRE(pre.terms.size() == 1);
    REQUIRE(pre.terms.count(-1) == 1);
    const SeqElement& mt = pre.terms.at(-1);
    // mtilde = -1 on all i < 0, 0 on i >= 0 ("-e_{-1} extended")
    CHECK(mt.left == std::vector<Rational>{Rational(-1)});
    CHECK(mt.right == std::vector<Rational>{Rational(0)});
    CHECK(mt.corrections.empty());
    CHECK(group_boundary(pre) == m);
}

TEST_CASE("degree-zero preimage: zero, differences, and random inputs") {
    // m = 0
    CHECK(group_boundary(h0_preimage(SeqElement::zero(1))).is_zero());

    // m = e1 - e0
    SeqElement m = SeqElement::spike(1, 1, {Rational(1)}).plus(SeqElement::spike(1, 0, {Rational(1)}), Rational(-1));
    CHECK(group_boundary(h0_preimage(m)) == m);

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        int vdim = 1 + static_cast<int>(rng() % 3);
        SeqElement t = random_finite(rng, vdim);
        CHECK(group_boundary(h0_preimage(t)) == t);
    }
}

TEST_CASE("degree-zero preimage rejects non-finitely-supported input") {
    SeqElement c = SeqElement::constant({Rational(1)});
    try {
        h0_preimage(c);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("not finitely supported") != std::string::npos);
    }
}

TEST_CASE("tau-reduction formulas") {
    std::mt19937_64 rng(9);
    SeqElement m = random_representable(rng, 2);
    // p = 1: m itself
    CHECK(reduce_to_tau(m, 1) == m);
    // p = 2: m + m[1]
    CHECK(reduce_to_tau(m, 2) == m.plus(m.shift(1)));
    // p = -1: -m[-1]
    CHECK(reduce_to_tau(m, -1) == m.shift(-1).scaled(Rational(-1)));
    // p = 0: zero
    CHECK(reduce_to_tau(m, 0).is_zero());
}

TEST_CASE("tau-reduction witnesses bound the difference exactly, |p| <= 4") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int vdim = 1 + static_cast<int>(rng() % 2);
        SeqElement m = random_representable(rng, vdim);
        for (long p = -4; p <= 4; ++p) {
            GroupOneChain target;
            target.vdim = vdim;
            target.add(m, p);
            target.add(reduce_to_tau(m, p), 1, Rational(-1));
            GroupTwoChain w = tau_reduction_witness(m, p);
            INFO("p = " << p);
            CHECK(group_boundary(w) == target);
        }
    }
}

TEST_CASE("degree-one kernel characterization") {
    CHECK(h1_kernel_test(SeqElement::constant({Rational(2), Rational(-1)})));
    CHECK_FALSE(h1_kernel_test(SeqElement::spike(1, 0, {Rational(1)})));
    SeqElement mixed = SeqElement::constant({Rational(1)}).plus(SeqElement::spike(1, 0, {Rational(1)}));
    CHECK_FALSE(h1_kernel_test(mixed));
    // the characterization agrees with the boundary: b(m (x) tau) = m - m[1]
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        SeqElement m = random_representable(rng, 1);
        CHECK(h1_kernel_test(m) == group_boundary_one(m, 1).is_zero());
    }
}

TEST_CASE("half-line module: the shift has no nonzero representable fixed vectors") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        int vdim = 1 + static_cast<int>(rng() % 2);
        SeqElement m = random_finite(rng, vdim);
        for (int c = 0; c < vdim; ++c) m.right[c] = Rational(static_cast<long>(rng() % 5) - 2);
        REQUIRE(m.in_halfline_module());
        long p = static_cast<long>(rng() % 7) - 3;
        if (p == 0)
            p = 1;
        if (!m.is_zero())
            CHECK_FALSE(group_boundary_one(m, p).is_zero());
    }
    // the constant-on-the-half-line element is moved by the shift
    SeqElement step = SeqElement::zero(1);
    step.right = {Rational(1)};
    CHECK_FALSE(group_boundary_one(step, 1).is_zero());
    CHECK(group_boundary_one(step, 1) == SeqElement::spike(1, -1, {Rational(-1)}));
}

TEST_CASE("half-line degree-zero witnesses for finitely supported targets") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 100; ++trial) {
        SeqElement t = random_finite(rng, 1 + static_cast<int>(rng() % 2));
        GroupOneChain pre = halfline_h0_preimage(t);
        for (const auto& [p, x] : pre.terms) CHECK(x.in_halfline_module());
        CHECK(group_boundary(pre) == t);
    }
    // explicit witness for e0: the indicator of i >= 0
    SeqElement e0 = SeqElement::spike(1, 0, {Rational(1)});
    GroupOneChain pre = halfline_h0_preimage(e0);
    REQUIRE(pre.terms.count(-1) == 1);
    CHECK(pre.terms.at(-1).right == std::vector<Rational>{Rational(1)});
    CHECK(pre.terms.at(-1).left == std::vector<Rational>{Rational(0)});

    // no representable witness for targets with nonzero eventual value
    SeqElement step = SeqElement::zero(1);
    step.right = {Rational(1)};
    CHECK_THROWS_AS(halfline_h0_preimage(step), InputError);
}

TEST_CASE("half-line kernel/image report") {
    SeqElement e0 = SeqElement::spike(1, 0, {Rational(1)});
    HalflineReport r = halfline_kernel_image_test(e0, 1);
    CHECK(r.in_module);
    CHECK_FALSE(r.is_cycle);
    REQUIRE(r.has_preimage);
    CHECK(group_boundary(r.preimage) == e0);

    SeqElement step = SeqElement::zero(1);
    step.right = {Rational(2)};
    HalflineReport rs = halfline_kernel_image_test(step, 2);
    CHECK(rs.in_module);
    CHECK_FALSE(rs.is_cycle);
    CHECK_FALSE(rs.has_preimage);
    CHECK(rs.note.find("no representable preimage") != std::string::npos);

    SeqElement outside = SeqElement::constant({Rational(1)});
    CHECK_FALSE(halfline_kernel_image_test(outside, 1).in_module);

    CHECK(halfline_kernel_image_test(SeqElement::zero(1), 3).is_cycle);
}

TEST_CASE("kernel elements at exponent zero are boundaries") {
    // b(m (x) 1 (x) 1) = m (x) 1, so m (x) tau^0 dies in homology
    std::mt19937_64 rng(99);
    SeqElement m = random_representable(rng, 2);
    GroupTwoChain two;
    two.vdim = 2;
    two.terms.emplace_back(m, 0, 0);
    GroupOneChain expected;
    expected.vdim = 2;
    expected.add(m, 0);
    CHECK(group_boundary(two) == expected);
}
