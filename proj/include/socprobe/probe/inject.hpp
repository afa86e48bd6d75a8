#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "socprobe/core/platform.hpp"
#include "socprobe/probe/counting.hpp"
#include "socprobe/probe/dataset.hpp"

namespace socprobe {

// All loaded stimuli, resolvable by ProbeRef. Traces embed the payload of
// every injected probe so downstream judging never needs the dataset files.
struct ProbeSet {
    std::vector<ReasoningProbe> reasoning;
    std::vector<SynthesisProbe> synthesis;
    std::vector<CountingProbe> counting;

    std::size_t count(Tier t) const {
        switch (t) {
            case Tier::I: return reasoning.size();
            case Tier::II: return synthesis.size();
            case Tier::III: return counting.size();
        }
        return 0;
    }

    void check(ProbeRef ref) const {
        if (ref.index >= count(ref.tier))
            throw ValidationError("unresolvable probe ref " + to_string(ref));
    }

    const ReasoningProbe& reasoning_at(ProbeRef ref) const {
        check(ref);
        return reasoning[ref.index];
    }
    const SynthesisProbe& synthesis_at(ProbeRef ref) const {
        check(ref);
        return synthesis[ref.index];
    }
    const CountingProbe& counting_at(ProbeRef ref) const {
        check(ref);
        return counting[ref.index];
    }
};

struct ScheduledProbe {
    Tick tick = 0;
    ProbeRef ref;
};

// One planned platform write: the stimulus post, or one premise comment.
struct PlannedPost {
    AgentId author;
    std::string title;
    std::string content;
    ProbeRef ref;
};

struct PlannedComment {
    AgentId author;
    std::string content;
};

struct InjectionPlan {
    PlannedPost post;
    std::vector<PlannedComment> premise_comments;
};

// Post titles reuse the question head so probe posts look like any other
// post on the platform.
inline std::string title_from_question(const std::string& question) {
    std::string head = question.substr(0, 80);
    if (question.size() > 80) {
        std::size_t cut = head.find_last_of(' ');
        if (cut != std::string::npos && cut > 20) head.resize(cut);
        head += "...";
    }
    return head;
}

inline InjectionPlan plan_reasoning_probe(const ReasoningProbe& probe, ProbeRef ref,
                                          AgentId poster) {
    if (!poster.is_probe) throw ValidationError("probe posts need a probe author");
    return InjectionPlan{{poster, title_from_question(probe.question), probe.question, ref}, {}};
}

// Tier II plan: one post holding only the question plus the pointer line,
// then one comment per premise, each by a distinct probe agent, in
// premise order. No premise text ever appears in the post body.
inline InjectionPlan compose_synthesis_probe(const SynthesisProbe& probe, ProbeRef ref,
                                             const std::vector<AgentId>& probe_agents) {
    const std::size_t m = probe.premises.size();
    std::set<std::uint32_t> distinct;
    for (AgentId a : probe_agents) {
        if (!a.is_probe) throw ValidationError("compose_synthesis_probe: non-probe agent in pool");
        distinct.insert(a.value);
    }
    if (distinct.size() < m + 1)
        throw ValidationError("compose_synthesis_probe: need at least " + std::to_string(m + 1) +
                              " distinct probe agents, got " + std::to_string(distinct.size()));
    InjectionPlan plan;
    plan.post = PlannedPost{probe_agents[0], probe.title,
                            probe.question + " (Other premises can be found in the comments)", ref};
    std::vector<AgentId> commenters;
    for (AgentId a : probe_agents) {
        if (a == plan.post.author) continue;
        bool seen = false;
        for (AgentId c : commenters) {
            if (c == a) seen = true;
        }
        if (!seen) commenters.push_back(a);
        if (commenters.size() == m) break;
    }
    for (std::size_t i = 0; i < m; ++i) {
        plan.premise_comments.push_back(PlannedComment{commenters[i], probe.premises[i]});
    }
    return plan;
}

inline InjectionPlan plan_counting_probe(const CountingProbe& probe, ProbeRef ref,
                                         AgentId poster) {
    if (!poster.is_probe) throw ValidationError("probe posts need a probe author");
    std::string title = probe.step == 1 ? "Counting Game - Reply with the Next Number"
                                        : "Count by " + std::to_string(probe.step) +
                                              "s - Skip Counting Challenge";
    return InjectionPlan{{poster, std::move(title), probe.rules_text, ref}, {}};
}

inline InjectionPlan plan_probe(const ProbeSet& probes, ProbeRef ref,
                                const std::vector<AgentId>& probe_agents) {
    if (probe_agents.empty()) throw ValidationError("no probe agents available");
    switch (ref.tier) {
        case Tier::I: return plan_reasoning_probe(probes.reasoning_at(ref), ref, probe_agents[0]);
        case Tier::II: return compose_synthesis_probe(probes.synthesis_at(ref), ref, probe_agents);
        case Tier::III: return plan_counting_probe(probes.counting_at(ref), ref, probe_agents[0]);
    }
    throw ValidationError("bad tier");
}

// Injected stimuli recorded against the posts they created.
struct InjectionLog {
    std::map<PostId, ProbeRef> post_refs;
};

// Execute the schedule entries due at `tick`. Each probe contributes its
// initial post (plus premise comments for Tier II) and nothing afterwards;
// probe agents never react to organic comments. Premise comments land at
// the same tick as their post, in premise order, so every probe-agent
// event precedes the first organic comment on the thread.
inline std::vector<PostId> inject_probes_at(PlatformState& state, const ProbeSet& probes,
                                            const std::vector<ScheduledProbe>& schedule, Tick tick,
                                            const std::vector<AgentId>& probe_agents,
                                            InjectionLog& log, std::set<std::string>* injected) {
    std::vector<PostId> created;
    std::size_t rotation = 0;
    for (const ScheduledProbe& s : schedule) {
        if (s.tick != tick) continue;
        if (injected) {
            std::string key = to_string(s.ref);
            if (injected->count(key))
                throw ValidationError("duplicate injection of probe " + key);
            injected->insert(key);
        }
        // rotate the poster so consecutive probes come from different accounts
        std::vector<AgentId> pool;
        pool.reserve(probe_agents.size());
        for (std::size_t i = 0; i < probe_agents.size(); ++i) {
            pool.push_back(probe_agents[(rotation + i) % probe_agents.size()]);
        }
        ++rotation;
        InjectionPlan plan = plan_probe(probes, s.ref, pool);
        PostId post = publish_post(state, plan.post.author, plan.post.title, plan.post.content,
                                   plan.post.ref);
        for (const PlannedComment& pc : plan.premise_comments) {
            publish_comment(state, pc.author, post, ParentRef::of(post), pc.content);
        }
        log.post_refs.emplace(post, s.ref);
        created.push_back(post);
    }
    return created;
}

}  // namespace socprobe
