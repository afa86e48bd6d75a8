#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "socprobe/core/errors.hpp"

namespace socprobe {

// Event clock. Ticks are non-negative and monotone per state.
using Tick = std::int64_t;

// Agents are numbered in registration order. The probe flag travels with
// the id so filtering never needs an agent lookup.
struct AgentId {
    std::uint32_t value = 0;
    bool is_probe = false;

    friend bool operator==(const AgentId& a, const AgentId& b) { return a.value == b.value; }
    friend bool operator!=(const AgentId& a, const AgentId& b) { return a.value != b.value; }
    friend bool operator<(const AgentId& a, const AgentId& b) { return a.value < b.value; }
};

struct PostId {
    std::uint64_t value = 0;
    auto operator<=>(const PostId&) const = default;
};

// Assigned in strictly increasing creation order across the whole state.
struct CommentId {
    std::uint64_t value = 0;
    auto operator<=>(const CommentId&) const = default;
};

// A comment's parent is either its post or an earlier comment on the same post.
struct ParentRef {
    enum class Kind { post, comment };
    Kind kind = Kind::post;
    std::uint64_t value = 0;

    static ParentRef of(PostId p) { return {Kind::post, p.value}; }
    static ParentRef of(CommentId c) { return {Kind::comment, c.value}; }
    bool is_post() const { return kind == Kind::post; }
    auto operator<=>(const ParentRef&) const = default;
};

// Stimulus tiers: joint reasoning, information synthesis, basic interaction.
enum class Tier { I, II, III };

inline const char* to_string(Tier t) {
    switch (t) {
        case Tier::I: return "I";
        case Tier::II: return "II";
        case Tier::III: return "III";
    }
    return "?";
}

inline Tier tier_from_string(const std::string& s) {
    if (s == "I") return Tier::I;
    if (s == "II") return Tier::II;
    if (s == "III") return Tier::III;
    throw ValidationError("unknown tier: " + s);
}

// Hidden pointer from a probe post to its dataset entry. Never rendered
// into visible content.
struct ProbeRef {
    Tier tier = Tier::I;
    std::size_t index = 0;
    auto operator<=>(const ProbeRef&) const = default;
};

inline std::string to_string(const ProbeRef& ref) {
    return std::string(to_string(ref.tier)) + ":" + std::to_string(ref.index);
}

}  // namespace socprobe
