#include <cstdint>
#include <vector>

#include "doctest.h"

#include "cmdeg/dual.hpp"

using namespace cmdeg;

TEST_CASE("module structure by case") {
    CHECK(module_structure(TorsionModuleSpec::split(2, 1, 1, 3)) ==
          AbelianPair{1, 3});
    CHECK(module_structure(TorsionModuleSpec::ramified(3, 2, 5)) ==
          AbelianPair{2, 3});
    CHECK(module_structure(TorsionModuleSpec::ramified(3, 2, 4)) ==
          AbelianPair{2, 2});
    CHECK(module_structure(TorsionModuleSpec::inert(5, 1, 2)) ==
          AbelianPair{2, 2});
    CHECK(module_structure(TorsionModuleSpec::split(2, 0, 0, 0)) ==
          AbelianPair{0, 0});
}

TEST_CASE("kernel intersection exponent by case") {
    CHECK(kernel_intersection(TorsionModuleSpec::split(2, 1, 1, 3)) == 1);
    CHECK(kernel_intersection(TorsionModuleSpec::split(2, 3, 1, 5)) == 1);
    CHECK(kernel_intersection(TorsionModuleSpec::split(2, 1, 4, 5)) == 1);
    CHECK(kernel_intersection(TorsionModuleSpec::ramified(3, 2, 5)) == 2);
    CHECK(kernel_intersection(TorsionModuleSpec::ramified(3, 1, 5)) == 1);
    CHECK(kernel_intersection(TorsionModuleSpec::inert(5, 1, 2)) == 1);
    CHECK(kernel_intersection(TorsionModuleSpec::inert(5, 4, 2)) == 2);
}

TEST_CASE("dual image: frozen values") {
    CHECK(dual_image(TorsionModuleSpec::split(2, 1, 1, 3)) == AbelianPair{0, 3});
    CHECK(dual_image(TorsionModuleSpec::ramified(3, 2, 5)) == AbelianPair{0, 3});
    CHECK(dual_image(TorsionModuleSpec::inert(5, 1, 2)) == AbelianPair{1, 2});
    CHECK(dual_image(TorsionModuleSpec::split(2, 0, 2, 2)) == AbelianPair{2, 2});
    CHECK(dual_image(TorsionModuleSpec::split(2, 5, 2, 7)) == AbelianPair{0, 7});
}

TEST_CASE("conservation identities over a parameter sweep") {
    std::int64_t tuples = 0;
    for (std::int64_t ell : {2, 3, 5}) {
        for (std::int64_t c = 0; c <= 4; ++c) {
            std::vector<TorsionModuleSpec> specs;
            for (std::int64_t b = 0; b <= 8; ++b) {
                for (std::int64_t a = 0; a <= b; ++a)
                    specs.push_back(TorsionModuleSpec::split(ell, c, a, b));
                specs.push_back(TorsionModuleSpec::inert(ell, c, b));
                specs.push_back(TorsionModuleSpec::ramified(ell, c, b));
            }
            for (const TorsionModuleSpec& spec : specs) {
                ++tuples;
                const AbelianPair module = module_structure(spec);
                const std::int64_t kernel = kernel_intersection(spec);
                const AbelianPair image = dual_image(spec);
                CHECK(module.inv1 <= module.inv2);
                CHECK(image.inv1 <= image.inv2);
                CHECK(kernel >= 0);
                CHECK(kernel <= spec.c);
                CHECK(kernel <= module.inv1);
                // Order conservation: the image loses exactly the kernel.
                CHECK(image.order_exponent() + kernel == module.order_exponent());
                // Exponent preservation: the largest cyclic piece survives.
                CHECK(image.exponent() == module.exponent());
                // Only the smaller invariant factor is eroded.
                CHECK(image.inv1 == module.inv1 - kernel);
                CHECK(image.inv2 == module.inv2);
            }
        }
    }
    CHECK(tuples == 945);
}

TEST_CASE("torsion specs reject malformed parameters") {
    CHECK_THROWS_AS(TorsionModuleSpec::split(4, 0, 0, 1), invalid_input);
    CHECK_THROWS_AS(TorsionModuleSpec::split(2, -1, 0, 1), invalid_input);
    CHECK_THROWS_AS(TorsionModuleSpec::split(2, 0, 2, 1), invalid_input);
    CHECK_THROWS_AS(TorsionModuleSpec::ramified(2, 0, -1), invalid_input);
    CHECK_THROWS_AS(TorsionModuleSpec::inert(9, 0, 1), invalid_input);
}
