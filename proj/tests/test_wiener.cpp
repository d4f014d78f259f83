#include <doctest.h>

#include <random>

#include "smi/wiener.hpp"
#include "test_util.hpp"

using namespace smi;
using namespace smi::test;

TEST_CASE("signal_support thresholding") {
    const GroupSpec z6 = make_group({6});
    Signal f = make_zero_signal(z6, 1.0);
    f.values[1] = 1.0;
    f.values[4] = 1e-14;  // below the relative threshold
    CHECK(signal_support(f) == std::vector<std::int64_t>({1}));
    CHECK(signal_support(make_zero_signal(z6, 1.0)).empty());
    CHECK(signal_support(f, 1e-15) == std::vector<std::int64_t>({1, 4}));
}

TEST_CASE("fully translation-invariant space on Z_6 is a Fourier support condition") {
    const GroupSpec z6 = make_group({6});
    const Subgroup lambda = subgroup_from_generators(z6, {Element({3})});

    // window with Fourier support {0, 1}
    Signal phi_hat = make_zero_signal(z6, 1.0 / 6.0);
    phi_hat.values[0] = 1.0;
    phi_hat.values[1] = 0.7;
    const Signal phi = inverse_fourier(phi_hat);

    const auto ch = full_translation_support({phi}, lambda);
    CHECK(ch.invariant);
    CHECK(ch.support == std::vector<std::int64_t>({0, 1, 3, 4}));
    CHECK(ch.orbit_rank == 4);
    CHECK(ch.translation_modulus == lambda);
}

TEST_CASE("the support characterization holds across lattices and generators") {
    std::mt19937 rng(61);
    std::normal_distribution<double> dist;
    for (const auto& factors :
         {std::vector<std::int64_t>{6}, {8}, {2, 4}, {12}}) {
        const GroupSpec g = GroupSpec(factors);
        for (const auto& lam : all_subgroups(g)) {
            // two sparse windows with random Fourier supports
            std::vector<Signal> A;
            std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
            for (int k = 0; k < 2; ++k) {
                Signal phat = make_zero_signal(g, 1.0 / static_cast<double>(g.order()));
                for (int s = 0; s < 2; ++s) {
                    phat.values[pick(rng)] = cplx(dist(rng), dist(rng));
                }
                A.push_back(inverse_fourier(phat));
            }
            const auto ch = full_translation_support(A, lam);
            CHECK(ch.invariant);
            CHECK(ch.orbit_rank == static_cast<std::int64_t>(ch.support.size()));

            // mirror statement on the time side
            const auto mch = full_modulation_support(A, lam);
            CHECK(mch.invariant);
            CHECK(mch.orbit_rank == static_cast<std::int64_t>(mch.support.size()));
        }
    }
}

TEST_CASE("modulation mirror computes plain supports") {
    const GroupSpec z6 = make_group({6});
    Signal f = make_zero_signal(z6, 1.0);
    f.values[0] = 1.0;
    f.values[2] = 0.5;

    const auto ch = full_modulation_support({f}, Subgroup::trivial(z6));
    CHECK(ch.invariant);
    CHECK(ch.support == std::vector<std::int64_t>({0, 2}));
    CHECK(ch.orbit_rank == 2);

    const Subgroup t3 = subgroup_from_generators(z6, {Element({3})});
    const auto sh = full_modulation_support({f}, t3);
    CHECK(sh.invariant);
    CHECK(sh.support == std::vector<std::int64_t>({0, 2, 3, 5}));
    CHECK(sh.orbit_rank == 4);
}

TEST_CASE("jointly invariant spaces are all or nothing") {
    const GroupSpec z6 = make_group({6});
    std::mt19937 rng(59);
    CHECK(is_whole_space({random_signal(z6, 1.0, rng)}, z6));
    CHECK(is_whole_space({make_delta(z6, Element({4}), 1.0)}, z6));
    CHECK_FALSE(is_whole_space({make_zero_signal(z6, 1.0)}, z6));
    CHECK(is_whole_space({make_zero_signal(z6, 1.0), make_delta(z6, Element({0}), 1.0)}, z6));
    CHECK_THROWS_AS(is_whole_space({}, z6), Error);
    CHECK_THROWS_AS(full_translation_support({}, Subgroup::whole(z6)), Error);
}
