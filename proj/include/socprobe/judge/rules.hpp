#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "socprobe/core/labels.hpp"
#include "socprobe/core/thread_query.hpp"
#include "socprobe/judge/answers.hpp"
#include "socprobe/probe/counting.hpp"
#include "socprobe/sim/templates.hpp"

namespace socprobe {

enum class Confidence { high, medium, low };

inline const char* to_string(Confidence c) {
    switch (c) {
        case Confidence::high: return "high";
        case Confidence::medium: return "medium";
        case Confidence::low: return "low";
    }
    return "?";
}

inline Confidence confidence_from_string(const std::string& s) {
    if (s == "high") return Confidence::high;
    if (s == "medium") return Confidence::medium;
    if (s == "low") return Confidence::low;
    throw ValidationError("unknown confidence: " + s);
}

// Appendix-style verdict over a whole thread.
struct CollectiveJudgment {
    bool collective_correct = false;
    std::optional<std::string> final_answer;  // set when collective_correct
    Confidence confidence = Confidence::high;
    std::string reasoning;
};

struct RelevanceScore {
    std::uint64_t comment_id = 0;
    int score = 0;  // 0..5
    std::string reason;
};

// Holistic thread judgment, rule-based. A thread counts as collectively
// correct when (a) any single external comment is individually correct,
// (b) a "Consensus: X" line states the correct answer, or (c) the
// external comments, concatenated in order, commit to the correct answer
// even though no single comment does.
inline CollectiveJudgment judge_thread_collective(const Thread& thread, const std::string& answer,
                                                  AnswerType type) {
    std::vector<Comment> external = external_comments(thread);
    if (external.empty())
        throw ValidationError("judge_thread_collective: thread has no external comments");

    CollectiveJudgment out;
    for (const Comment& c : external) {
        Judgment j = judge_answer(c, answer, type);
        if (j.is_correct && *j.is_correct) {
            out.collective_correct = true;
            out.final_answer = j.answer_value;
            out.confidence = Confidence::high;
            out.reasoning = "comment " + std::to_string(c.id.value) +
                            " states the correct answer on its own";
            return out;
        }
    }
    for (const Comment& c : external) {
        for (const std::string& v : detail::consensus_values(c.content)) {
            if (!v.empty() && answer_equivalent(v, answer, type)) {
                out.collective_correct = true;
                out.final_answer = v;
                out.confidence = Confidence::medium;
                out.reasoning = "a consensus line converges on the correct answer";
                return out;
            }
        }
    }
    std::string joined;
    for (const Comment& c : external) {
        if (!joined.empty()) joined += "\n";
        joined += c.content;
    }
    Comment merged;
    merged.id = CommentId{0};
    merged.content = joined;
    Judgment j = judge_answer(merged, answer, type);
    if (j.is_correct && *j.is_correct) {
        out.collective_correct = true;
        out.final_answer = j.answer_value;
        out.confidence = Confidence::medium;
        out.reasoning = "partial contributions combine to the correct answer";
        return out;
    }
    out.collective_correct = false;
    out.confidence = Confidence::high;
    out.reasoning = "no committed correct answer, consensus, or combined derivation found";
    return out;
}

namespace detail {

inline bool contains_phrase(const std::string& content, const char* phrase) {
    return to_lower(content).find(phrase) != std::string::npos;
}

// Content-word overlap between a comment and the post, in [0, 1] of the
// comment's words. Drives the heuristic fallback for free-form replies.
inline double topic_overlap(const std::string& comment, const std::string& post_text) {
    auto content_words = [](const std::string& s) {
        std::vector<std::string> out;
        for (const std::string& t : split_tokens(to_lower(s))) {
            std::string w = strip_token_punct(t);
            if (w.size() >= 4) out.push_back(w);
        }
        return out;
    };
    std::vector<std::string> cw = content_words(comment);
    if (cw.empty()) return 0.0;
    std::vector<std::string> pw = content_words(post_text);
    std::size_t hits = 0;
    for (const std::string& w : cw) {
        for (const std::string& p : pw) {
            if (w == p) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(cw.size());
}

inline bool looks_like_praise(const std::string& content) {
    static const char* phrases[] = {"great post",  "thanks for sharing", "nice post",
                                    "love this",   "welcome",            "following",
                                    "interesting", "well said",          "so true",
                                    "this!",       "awesome"};
    for (const char* p : phrases) {
        if (contains_phrase(content, p)) return true;
    }
    return false;
}

}  // namespace detail

// Classify a Tier I/II comment into exactly one quality category.
// In strict mode every comment must carry a known template marker;
// outside synthetic runs, a documented heuristic takes over.
inline QualityLabel classify_quality(const Comment& comment, const std::string& question,
                                     const std::string& answer, AnswerType type,
                                     bool strict = true) {
    if (const CommentTemplate* t = recognize_template(comment.content)) {
        switch (t->cls) {
            case MarkerClass::attempt: {
                Judgment j = judge_answer(comment, answer, type);
                if (j.is_correct && *j.is_correct) return QualityLabel::CORRECT_REASONING;
                return QualityLabel::WRONG_REASONING;
            }
            case MarkerClass::partial: return QualityLabel::PARTIAL_REASONING;
            case MarkerClass::superficial: return QualityLabel::SUPERFICIAL;
            case MarkerClass::irrelevant: return QualityLabel::IRRELEVANT;
        }
    }
    if (strict)
        throw ValidationError("classify_quality: unknown marker in strict synthetic mode: " +
                              comment.content.substr(0, 60));
    Judgment j = judge_answer(comment, answer, type);
    if (j.offers_answer) {
        return *j.is_correct ? QualityLabel::CORRECT_REASONING : QualityLabel::WRONG_REASONING;
    }
    if (detail::looks_like_praise(comment.content)) return QualityLabel::SUPERFICIAL;
    double overlap = detail::topic_overlap(comment.content, question);
    if (overlap >= 0.15) return QualityLabel::PARTIAL_REASONING;
    return QualityLabel::IRRELEVANT;
}

// Rate replies on the 0-5 substantiveness scale, at most 15 per call.
// Rule mode reads each reply's marker class; unknown content falls back
// to a topical heuristic.
inline std::vector<RelevanceScore> score_relevance(const Post& post,
                                                   const std::vector<Comment>& replies) {
    if (replies.size() > 15)
        throw ValidationError("score_relevance: at most 15 replies per call; batch the rest");
    std::vector<RelevanceScore> out;
    out.reserve(replies.size());
    for (const Comment& c : replies) {
        RelevanceScore s;
        s.comment_id = c.id.value;
        if (const CommentTemplate* t = recognize_template(c.content)) {
            s.score = t->relevance;
            s.reason = "recognized phrasing class";
        } else if (parse_bare_integer(c.content)) {
            s.score = 3;
            s.reason = "bare follow-up value, on topic but shallow";
        } else if (detail::looks_like_praise(c.content)) {
            s.score = 1;
            s.reason = "generic boilerplate";
        } else {
            double overlap = detail::topic_overlap(c.content, post.title + " " + post.content);
            std::size_t words = split_tokens(c.content).size();
            if (overlap < 0.10) {
                s.score = 0;
                s.reason = "no topical connection to the post";
            } else if (overlap >= 0.60 && words < 30) {
                s.score = 2;
                s.reason = "mostly restates the post";
            } else if (words < 12) {
                s.score = 3;
                s.reason = "on topic but brief";
            } else {
                s.score = 4;
                s.reason = "substantive engagement with the post";
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

// Batch wrapper over the 15-reply call limit.
inline std::vector<RelevanceScore> score_relevance_batched(const Post& post,
                                                           const std::vector<Comment>& replies) {
    std::vector<RelevanceScore> out;
    for (std::size_t at = 0; at < replies.size(); at += 15) {
        std::vector<Comment> chunk(replies.begin() + at,
                                   replies.begin() + std::min(replies.size(), at + 15));
        std::vector<RelevanceScore> part = score_relevance(post, chunk);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// The C_q* view: drop every comment judged to offer an explicit answer,
// correctness notwithstanding. Probe-authored comments (the stimulus
// itself) always stay. The input thread is untouched; the operation is
// idempotent.
inline Thread filter_answer_comments(const Thread& thread,
                                     const std::unordered_map<std::uint64_t, Judgment>& judgments) {
    Thread out;
    out.post = thread.post;
    for (const Comment& c : thread.comments) {
        if (c.author.is_probe) {
            out.comments.push_back(c);
            continue;
        }
        auto it = judgments.find(c.id.value);
        if (it == judgments.end())
            throw ValidationError("filter_answer_comments: missing judgment for comment " +
                                  std::to_string(c.id.value));
        if (!it->second.offers_answer) out.comments.push_back(c);
    }
    return out;
}

// Verdict for one reply on a counting thread, judged against the chain
// state produced by every comment that precedes it.
inline CountVerdict judge_counting_reply(const CountingProbe& probe, const Thread& thread,
                                         const Comment& reply) {
    bool found = false;
    for (const Comment& c : thread.comments) {
        if (c.id == reply.id) found = true;
    }
    if (!found || reply.post != thread.post.id)
        throw ValidationError("judge_counting_reply: reply is not part of the probe thread");
    ChainState chain = chain_start(probe, thread.post);
    for (const Comment& c : thread.comments) {
        if (c.id == reply.id) break;
        chain_step(chain, probe, c);
    }
    return chain_step(chain, probe, reply);
}

}  // namespace socprobe
