#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcpoly {

enum class IdentityId {
    carlitz,
    thm1,
    thm2,
    thm3,
    dedekind,
    rademacher,
    lemma4a,
    lemma4b,
    conic,
    oracle,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Outcome of checking one identity instance. holds is true exactly when
/// diff is absent.
struct VerificationReport {
    IdentityId id;
    std::vector<std::pair<std::string, std::string>> params;
    bool holds = false;
    std::string lhs;
    std::string rhs;
    std::optional<std::string> diff;
    std::string notes;
};

}  // namespace rcpoly
