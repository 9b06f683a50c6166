#pragma once

// Name-based dispatch over every matrix the library can build, used by the
// command line tool.

#include "hankelmonde/generators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hankelmonde {

struct FamilyArgs {
    Params params;
    /// Derivative / block index for Ak, Hk and Kbar_j (as j); block size for L.
    std::optional<unsigned> k;
    std::optional<unsigned> j;
    /// Block count for L (defaults to mu).
    std::optional<unsigned> m;
};

/// u, w, M, calM, calN, U, W, Utilde, Wtilde, Ak, calA, calAbar, calAhat,
/// calAtilde, L, F, K, G, Kbar, Kbar_j, kernelN0, kernelN, B0, C, Hk, Minv,
/// constKernel.
const std::vector<std::string>& family_names();

/// Throws UnknownFamily, InvalidArgument for a missing index, and whatever
/// the underlying constructor throws (CaseViolation in particular).
PolyMatrix generate_family(const std::string& family, const FamilyArgs& args);

} // namespace hankelmonde
