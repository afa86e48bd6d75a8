#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "socprobe/core/errors.hpp"
#include "socprobe/core/ids.hpp"
#include "socprobe/core/labels.hpp"

namespace socprobe {

struct Agent {
    AgentId id;
    std::string name;
};

struct Post {
    PostId id;
    AgentId author;
    std::string title;
    std::string content;
    Tick created_at = 0;
    std::uint32_t upvotes = 0;
    std::optional<ProbeRef> probe_tag;  // hidden metadata, never rendered
};

struct Comment {
    CommentId id;
    PostId post;
    ParentRef parent;
    AgentId author;
    std::string content;
    Tick created_at = 0;
    std::optional<LatentLabel> latent;  // ground truth, stripped before judging
};

// A post with its comment forest, comments in creation order (= id order).
struct Thread {
    Post post;
    std::vector<Comment> comments;
};

// Full society state. Single writer at a time; queries are pure and copy
// what they return, so snapshots can be consumed concurrently.
class PlatformState {
public:
    Tick clock() const { return clock_; }

    // Clock only moves forward.
    void advance_clock(Tick t) {
        if (t < clock_) throw ValidationError("clock cannot move backwards");
        clock_ = t;
    }

    AgentId add_agent(std::string name, bool is_probe) {
        if (name_index_.count(name)) throw ValidationError("duplicate agent name: " + name);
        AgentId id{static_cast<std::uint32_t>(agents_.size()), is_probe};
        name_index_.emplace(name, id.value);
        agents_.push_back(Agent{id, std::move(name)});
        return id;
    }

    bool has_agent(AgentId id) const { return id.value < agents_.size(); }

    const Agent& agent(AgentId id) const {
        if (!has_agent(id)) throw ValidationError("unknown agent id " + std::to_string(id.value));
        return agents_[id.value];
    }

    std::optional<AgentId> find_agent(const std::string& name) const {
        auto it = name_index_.find(name);
        if (it == name_index_.end()) return std::nullopt;
        return agents_[it->second].id;
    }

    const std::vector<Agent>& agents() const { return agents_; }
    const std::vector<Post>& posts() const { return posts_; }
    const std::vector<Comment>& comments() const { return comments_; }

    bool has_post(PostId id) const { return id.value < posts_.size(); }

    const Post& post(PostId id) const {
        if (!has_post(id)) throw ValidationError("unknown post id " + std::to_string(id.value));
        return posts_[id.value];
    }

    bool has_comment(CommentId id) const { return id.value < comments_.size(); }

    const Comment& comment(CommentId id) const {
        if (!has_comment(id)) throw ValidationError("unknown comment id " + std::to_string(id.value));
        return comments_[id.value];
    }

    friend PostId publish_post(PlatformState&, AgentId, std::string, std::string,
                               std::optional<ProbeRef>);
    friend CommentId publish_comment(PlatformState&, AgentId, PostId, ParentRef, std::string,
                                     std::optional<LatentLabel>);
    friend void add_upvote(PlatformState&, AgentId, PostId);

private:
    Tick clock_ = 0;
    std::vector<Agent> agents_;
    std::vector<Post> posts_;
    std::vector<Comment> comments_;
    std::unordered_map<std::string, std::uint32_t> name_index_;
};

inline PostId publish_post(PlatformState& state, AgentId author, std::string title,
                           std::string content, std::optional<ProbeRef> probe_tag = std::nullopt) {
    if (!state.has_agent(author)) throw ValidationError("publish_post: unknown author");
    if (probe_tag && !author.is_probe)
        throw ValidationError("publish_post: probe_tag on non-probe author");
    PostId id{state.posts_.size()};
    state.posts_.push_back(Post{id, author, std::move(title), std::move(content), state.clock_, 0,
                                probe_tag});
    return id;
}

inline CommentId publish_comment(PlatformState& state, AgentId author, PostId post,
                                 ParentRef parent, std::string content,
                                 std::optional<LatentLabel> latent = std::nullopt) {
    if (!state.has_agent(author)) throw ValidationError("publish_comment: unknown author");
    if (!state.has_post(post)) throw ValidationError("publish_comment: unknown post");
    if (parent.is_post()) {
        if (parent.value != post.value)
            throw ValidationError("publish_comment: parent post differs from comment's post");
    } else {
        CommentId pid{parent.value};
        if (!state.has_comment(pid)) throw ValidationError("publish_comment: dangling parent");
        const Comment& p = state.comment(pid);
        if (p.post != post)
            throw ValidationError("publish_comment: parent belongs to another post");
        if (p.created_at > state.clock_)
            throw ValidationError("publish_comment: parent is newer than the clock");
    }
    CommentId id{state.comments_.size()};
    state.comments_.push_back(
        Comment{id, post, parent, author, std::move(content), state.clock_, latent});
    return id;
}

inline void add_upvote(PlatformState& state, AgentId agent, PostId post) {
    if (!state.has_agent(agent)) throw ValidationError("add_upvote: unknown agent");
    if (!state.has_post(post)) throw ValidationError("add_upvote: unknown post");
    state.posts_[post.value].upvotes += 1;
}

// Assemble the thread for a post. Comments come out in creation order,
// which by construction equals (created_at, id) order.
inline Thread make_thread(const PlatformState& state, PostId post) {
    Thread t;
    t.post = state.post(post);
    for (const Comment& c : state.comments()) {
        if (c.post == post) t.comments.push_back(c);
    }
    return t;
}

// Walk every comment's parent chain back to its post. Throws on the first
// violation; used by property tests and by the trace loader.
inline void check_integrity(const PlatformState& state) {
    for (const Comment& c : state.comments()) {
        if (!state.has_post(c.post)) throw ValidationError("integrity: comment on unknown post");
        if (!state.has_agent(c.author)) throw ValidationError("integrity: unknown comment author");
        ParentRef p = c.parent;
        std::uint64_t hops = 0;
        while (!p.is_post()) {
            if (p.value >= c.id.value) throw ValidationError("integrity: parent not older");
            const Comment& pc = state.comment(CommentId{p.value});
            if (pc.post != c.post) throw ValidationError("integrity: cross-post parent chain");
            if (pc.created_at > c.created_at)
                throw ValidationError("integrity: parent newer than child");
            p = pc.parent;
            if (++hops > state.comments().size())
                throw ValidationError("integrity: parent cycle");
        }
        if (p.value != c.post.value) throw ValidationError("integrity: chain ends at wrong post");
        if (c.created_at > state.clock()) throw ValidationError("integrity: comment from future");
    }
    for (const Post& post : state.posts()) {
        if (!state.has_agent(post.author)) throw ValidationError("integrity: unknown post author");
        if (post.created_at > state.clock()) throw ValidationError("integrity: post from future");
        if (post.probe_tag && !post.author.is_probe)
            throw ValidationError("integrity: probe_tag on non-probe author");
    }
}

}  // namespace socprobe
