#include "cmdeg/dual.hpp"

#include <algorithm>

#include "cmdeg/checked.hpp"

namespace cmdeg {

namespace {

void validate_common(std::int64_t ell, std::int64_t c) {
    if (!is_prime(ell)) throw invalid_input("torsion spec: ell must be prime");
    if (c < 0) throw invalid_input("torsion spec: c must be >= 0");
}

}  // namespace

TorsionModuleSpec TorsionModuleSpec::split(std::int64_t ell, std::int64_t c,
                                           std::int64_t a, std::int64_t b) {
    validate_common(ell, c);
    if (a < 0 || b < 0 || a > b)
        throw invalid_input("torsion spec: split needs 0 <= a <= b");
    return TorsionModuleSpec{TorsionCase::Split, ell, c, a, b, 0};
}

TorsionModuleSpec TorsionModuleSpec::ramified(std::int64_t ell, std::int64_t c,
                                              std::int64_t d) {
    validate_common(ell, c);
    if (d < 0) throw invalid_input("torsion spec: ramified needs d >= 0");
    return TorsionModuleSpec{TorsionCase::Ramified, ell, c, 0, 0, d};
}

TorsionModuleSpec TorsionModuleSpec::inert(std::int64_t ell, std::int64_t c,
                                           std::int64_t b) {
    validate_common(ell, c);
    if (b < 0) throw invalid_input("torsion spec: inert needs b >= 0");
    return TorsionModuleSpec{TorsionCase::Inert, ell, c, 0, b, 0};
}

AbelianPair module_structure(const TorsionModuleSpec& spec) {
    switch (spec.kind) {
        case TorsionCase::Split:
            return {spec.a, spec.b};
        case TorsionCase::Ramified:
            return {spec.d / 2, spec.d - spec.d / 2};
        case TorsionCase::Inert:
            return {spec.b, spec.b};
    }
    throw invalid_input("torsion spec: unknown case");
}

std::int64_t kernel_intersection(const TorsionModuleSpec& spec) {
    return std::min(module_structure(spec).inv1, spec.c);
}

AbelianPair dual_image(const TorsionModuleSpec& spec) {
    const AbelianPair full = module_structure(spec);
    return {std::max<std::int64_t>(full.inv1 - spec.c, 0), full.inv2};
}

}  // namespace cmdeg
