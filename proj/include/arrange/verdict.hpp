#pragma once

#include <optional>
#include <string>
#include <vector>

namespace arrange {

enum class FreeStatus { Free, NotFree, Inconclusive };

inline const char* to_string(FreeStatus s) {
    switch (s) {
        case FreeStatus::Free: return "Free";
        case FreeStatus::NotFree: return "NotFree";
        default: return "Inconclusive";
    }
}

// Outcome of a freeness decision plus the trail of facts it rests on.
struct FreenessVerdict {
    FreeStatus status = FreeStatus::Inconclusive;
    std::optional<std::vector<long long>> exponents; // present only when Free
    std::vector<std::string> evidence;
};

} // namespace arrange
