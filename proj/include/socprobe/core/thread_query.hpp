#pragma once

#include <set>
#include <unordered_map>
#include <vector>

#include "socprobe/core/platform.hpp"

namespace socprobe {

// Maximum nesting level over comments. A direct reply to the post is
// level 1; a post with no comments has depth 0.
inline std::uint64_t thread_depth(const Thread& thread) {
    std::unordered_map<std::uint64_t, std::uint64_t> level;  // comment id -> level
    std::uint64_t depth = 0;
    for (const Comment& c : thread.comments) {
        std::uint64_t lvl = 1;
        if (!c.parent.is_post()) {
            auto it = level.find(c.parent.value);
            if (it == level.end()) throw ValidationError("thread_depth: parent outside thread");
            lvl = it->second + 1;
        }
        level[c.id.value] = lvl;
        depth = std::max(depth, lvl);
    }
    return depth;
}

// Distinct organic commenters: probe agents and the post author never count.
inline std::uint64_t unique_repliers(const Thread& thread) {
    std::set<std::uint32_t> authors;
    for (const Comment& c : thread.comments) {
        if (c.author.is_probe) continue;
        if (c.author == thread.post.author) continue;
        authors.insert(c.author.value);
    }
    return authors.size();
}

// The response set R_q: comments from regular (non-probing) agents,
// creation order preserved.
inline std::vector<Comment> external_comments(const Thread& thread) {
    std::vector<Comment> out;
    for (const Comment& c : thread.comments) {
        if (!c.author.is_probe) out.push_back(c);
    }
    return out;
}

}  // namespace socprobe
