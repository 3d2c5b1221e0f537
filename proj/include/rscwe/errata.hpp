#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rscwe {

/// A place where the published closed forms disagree with exhaustive
/// enumeration, and what the builders do instead.
struct Erratum {
    std::string id;
    std::string location;
    std::string printed;
    std::string implemented;
    /// Runs a small exhaustive check and describes the outcome. Returns false
    /// if the implemented reading fails to match brute force.
    std::function<bool(std::string& report)> check;
};

const std::vector<Erratum>& errata();

/// Human-readable ledger with live check results. `ok` is cleared if any check fails.
std::string explain_errata(bool* ok = nullptr);

}  // namespace rscwe
