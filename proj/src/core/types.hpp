#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace beliefnet {

using VertexId = std::uint64_t;

// A link is positive, neutral or negative; nothing else is representable.
enum class EdgeSign : std::int8_t {
    Negative = -1,
    Neutral = 0,
    Positive = 1,
};

inline int sign_value(EdgeSign s) { return static_cast<int>(s); }

inline EdgeSign sign_from_int(int v) {
    switch (v) {
        case -1: return EdgeSign::Negative;
        case 0: return EdgeSign::Neutral;
        case 1: return EdgeSign::Positive;
        default: break;
    }
    throw std::invalid_argument("edge sign must be -1, 0 or 1, got " + std::to_string(v));
}

struct VertexAttrs {
    double fitness = 1.0;     // f, >= 0
    double g = 0.0;           // probability a new link of this vertex is positive
    double h = 0.0;           // probability a new link of this vertex is negative
    std::uint64_t ordinal = 0;  // insertion index, 0-based

    bool valid() const {
        return fitness >= 0.0 && g >= 0.0 && h >= 0.0 && g + h <= 1.0 + 1e-12;
    }
};

// Relative weights of possible positive / negative / neutral links.
struct SignCounts {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
};

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}
    int line;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (g, h) from relative counts: g = a/(a+b+c), h = b/(a+b+c).
inline std::pair<double, double> sign_probs_from_counts(const SignCounts& counts) {
    if (counts.a < 0.0 || counts.b < 0.0 || counts.c < 0.0)
        throw ConfigError("sign counts must be non-negative");
    const double total = counts.a + counts.b + counts.c;
    if (total <= 0.0) throw ConfigError("sign counts must have a positive sum");
    return {counts.a / total, counts.b / total};
}

}  // namespace beliefnet
