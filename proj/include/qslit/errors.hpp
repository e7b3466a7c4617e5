#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qslit {

/// A caller broke a documented precondition (wrong representation tag,
/// mismatched grids, invalid parameters).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// The numerical setup cannot represent the requested state or evolution
/// ("grid too small", "grid too coarse", non-normalizable input).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree disagreed, or a density came out negative:
/// a bug in this library, not in the caller's input.
class InternalConsistencyError : public std::runtime_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration file rejected. Carries every violation found, not just
/// the first one.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string all = "config rejected:";
        for (const auto& s : issues) {
            all += "\n  - ";
            all += s;
        }
        return all;
    }
    std::vector<std::string> issues_;
};

// CLI exit codes per failure class.
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalError = 3;
inline constexpr int kExitInternalError = 4;

} // namespace qslit
