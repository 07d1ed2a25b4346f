#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rrcc {

using i64 = long long;

// every library failure carries a stable machine-readable code; the CLI maps
// codes to exit codes, tests match on them
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool ok, const std::string& code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

constexpr i64 kInfinite = -1; // nilpotency_index: no power within cap vanished

// deterministic sampler, bias is irrelevant at desk scale
template <class Rng>
i64 rnd_below(Rng& rng, i64 k) {
    return static_cast<i64>(rng() % static_cast<unsigned long long>(k));
}

} // namespace rrcc
