#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "socprobe/core/platform.hpp"
#include "socprobe/core/textnum.hpp"
#include "socprobe/probe/dataset.hpp"

namespace socprobe {

// State of a counting chain after replaying a prefix of the thread.
// The starting number belongs to the post author, so an immediate
// self-reply by the poster counts as a double post.
struct ChainState {
    std::int64_t expected;        // the next number a rule-following reply must contain
    std::uint32_t last_author;    // author of the most recent valid number
    bool has_last_author = true;
};

inline ChainState chain_start(const CountingProbe& probe, const Post& post) {
    return ChainState{probe.start + probe.step, post.author.value, true};
}

// Classify one reply against the current chain state and advance the
// chain when the reply is a valid continuation. Format problems are
// decided before authorship, authorship before value:
//   no digits anywhere            -> OFFTOPIC
//   digits embedded in other text -> COUNT_WRONG_FORMAT
//   same author as previous valid -> DOUBLE_POST (chain unchanged)
//   bare number == expected       -> COUNT_OK (chain advances)
//   bare number != expected       -> COUNT_WRONG_VALUE
inline CountVerdict chain_step(ChainState& chain, const CountingProbe& probe,
                               const Comment& reply) {
    if (!contains_integer_token(reply.content)) return CountVerdict::OFFTOPIC;
    std::optional<std::int64_t> value = parse_bare_integer(reply.content);
    if (!value) return CountVerdict::COUNT_WRONG_FORMAT;
    if (chain.has_last_author && reply.author.value == chain.last_author)
        return CountVerdict::DOUBLE_POST;
    if (*value == chain.expected) {
        chain.expected += probe.step;
        chain.last_author = reply.author.value;
        chain.has_last_author = true;
        return CountVerdict::COUNT_OK;
    }
    return CountVerdict::COUNT_WRONG_VALUE;
}

// The number a rule-following reply to `thread` must contain next.
// Invalid, off-topic, or double-posted comments never move the chain.
inline std::int64_t expected_next(const CountingProbe& probe, const Thread& thread) {
    ChainState chain = chain_start(probe, thread.post);
    for (const Comment& c : thread.comments) {
        chain_step(chain, probe, c);
    }
    return chain.expected;
}

}  // namespace socprobe
