#include "rcpoly/report.hpp"

#include <array>

namespace rcpoly {

namespace {

constexpr std::array<std::string_view, 10> kNames = {
    "carlitz", "thm1", "thm2", "thm3", "dedekind",
    "rademacher", "lemma4a", "lemma4b", "conic", "oracle",
};

}  // namespace

std::string_view to_string(IdentityId id) {
    return kNames[static_cast<std::size_t>(id)];
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (kNames[i] == name) return static_cast<IdentityId>(i);
    return std::nullopt;
}

}  // namespace rcpoly
