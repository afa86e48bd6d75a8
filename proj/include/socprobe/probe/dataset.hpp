#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "socprobe/core/errors.hpp"
#include "socprobe/core/ids.hpp"
#include "socprobe/core/textnum.hpp"

namespace socprobe {

enum class AnswerType { exactMatch, multipleChoice };

inline const char* to_string(AnswerType t) {
    return t == AnswerType::exactMatch ? "exactMatch" : "multipleChoice";
}

inline AnswerType answer_type_from_string(const std::string& s) {
    if (s == "exactMatch") return AnswerType::exactMatch;
    if (s == "multipleChoice") return AnswerType::multipleChoice;
    throw ValidationError("unknown answer_type: " + s);
}

// The eight subject categories, in the order reports use.
inline const std::array<std::string, 8>& subject_categories() {
    static const std::array<std::string, 8> cats = {
        "Math", "CS/AI", "Bio/Med.", "Physics", "Human./SS", "Other", "Chem.", "Eng."};
    return cats;
}

inline bool is_known_category(const std::string& c) {
    for (const auto& k : subject_categories()) {
        if (k == c) return true;
    }
    return false;
}

// Tier I stimulus: a frontier-difficulty question with a known answer.
struct ReasoningProbe {
    std::string question;
    std::string answer;
    AnswerType answer_type = AnswerType::exactMatch;
    std::string category;
};

// Tier II stimulus: the question goes in the post, the premises go into
// separate comments by distinct probe agents. `solution` is an arithmetic
// expression over the given quantities; the validator checks it.
struct SynthesisProbe {
    std::string title;
    std::string question;
    std::vector<std::string> premises;
    double answer = 0.0;
    std::string solution;
};

// Tier III stimulus: a counting chain with a start value and step.
struct CountingProbe {
    std::int64_t start = 0;
    std::int64_t step = 1;
    std::string rules_text;  // rendered at load time; includes the one-number rule
};

namespace detail {

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ValidationError("cannot open file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

template <typename T>
T require_field(const nlohmann::json& j, const char* key, const std::string& where) {
    if (!j.contains(key))
        throw ValidationError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError(where + ": field '" + key + "' has the wrong type");
    }
}

// Recursive-descent evaluator for + - * / and parentheses. Enough to
// check the solution expressions shipped with synthesis probes.
class ExprEval {
public:
    explicit ExprEval(std::string_view s) : s_(s) {}

    double eval() {
        double v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ValidationError("trailing characters in expression");
        return v;
    }

    // Every numeric literal in the expression, for the premise-coverage check.
    static std::vector<double> literals(std::string_view s) {
        std::vector<double> out;
        std::size_t i = 0;
        while (i < s.size()) {
            if (is_digit(s[i]) || (s[i] == '.' && i + 1 < s.size() && is_digit(s[i + 1]))) {
                std::size_t j = i;
                std::string num;
                while (j < s.size() && (is_digit(s[j]) || s[j] == '.')) num.push_back(s[j++]);
                if (auto p = parse_number(num)) out.push_back(p->value);
                i = j;
            } else {
                ++i;
            }
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    double expr() {
        double v = term();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                char op = s_[pos_++];
                double r = term();
                v = op == '+' ? v + r : v - r;
            } else {
                return v;
            }
        }
    }

    double term() {
        double v = factor();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == 'x' || s_[pos_] == '/')) {
                char op = s_[pos_++];
                double r = factor();
                if (op == '/') {
                    if (r == 0.0) throw ValidationError("division by zero in expression");
                    v /= r;
                } else {
                    v *= r;
                }
            } else {
                return v;
            }
        }
    }

    double factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ValidationError("unexpected end of expression");
        if (s_[pos_] == '(') {
            ++pos_;
            double v = expr();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')')
                throw ValidationError("missing ')' in expression");
            ++pos_;
            return v;
        }
        if (s_[pos_] == '-') {
            ++pos_;
            return -factor();
        }
        std::string num;
        while (pos_ < s_.size() && (is_digit(s_[pos_]) || s_[pos_] == '.')) num.push_back(s_[pos_++]);
        auto p = parse_number(num);
        if (!p) throw ValidationError("expected a number in expression");
        return p->value;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Tier I file: JSON list of {question, answer, answer_type, category}.
inline std::vector<ReasoningProbe> load_reasoning_probes(const std::string& path) {
    nlohmann::json j = detail::load_json_file(path);
    if (!j.is_array()) throw ValidationError(path + ": expected a JSON array");
    std::vector<ReasoningProbe> out;
    out.reserve(j.size());
    std::size_t line = 0;
    for (const auto& item : j) {
        ++line;
        std::string where = path + " item " + std::to_string(line);
        ReasoningProbe p;
        p.question = detail::require_field<std::string>(item, "question", where);
        p.answer = detail::require_field<std::string>(item, "answer", where);
        p.answer_type =
            answer_type_from_string(detail::require_field<std::string>(item, "answer_type", where));
        p.category = detail::require_field<std::string>(item, "category", where);
        if (p.question.empty()) throw ValidationError(where + ": empty question");
        if (p.answer.empty()) throw ValidationError(where + ": empty answer");
        if (!is_known_category(p.category))
            throw ValidationError(where + ": unknown category '" + p.category + "'");
        out.push_back(std::move(p));
    }
    return out;
}

// Tier II file: JSON list of {title, question, premises[], answer, solution?}.
inline std::vector<SynthesisProbe> load_synthesis_probes(const std::string& path) {
    nlohmann::json j = detail::load_json_file(path);
    if (!j.is_array()) throw ValidationError(path + ": expected a JSON array");
    std::vector<SynthesisProbe> out;
    std::size_t line = 0;
    for (const auto& item : j) {
        ++line;
        std::string where = path + " item " + std::to_string(line);
        SynthesisProbe p;
        p.title = detail::require_field<std::string>(item, "title", where);
        p.question = detail::require_field<std::string>(item, "question", where);
        p.premises = detail::require_field<std::vector<std::string>>(item, "premises", where);
        p.answer = detail::require_field<double>(item, "answer", where);
        if (item.contains("solution")) p.solution = item.at("solution").get<std::string>();
        if (p.premises.size() < 2)
            throw ValidationError(where + ": a synthesis probe needs at least 2 premises");
        out.push_back(std::move(p));
    }
    return out;
}

// The rules block rendered into every counting post. Every variant states
// the one-number-per-comment rule and the no-double-posting rule.
inline std::string render_counting_rules(std::int64_t start, std::int64_t step) {
    std::ostringstream out;
    if (step == 1) {
        out << "Let's play a counting chain.\n\n"
            << "Rules:\n"
            << "- One number per comment only.\n"
            << "- Follow the natural number order.\n"
            << "- No skipping numbers.\n"
            << "- No double posting.\n\n"
            << "Starting number:\n"
            << start;
    } else {
        out << "Let's count together in steps of " << step << ".\n\n"
            << "Rules:\n"
            << "- Reply with the next number, " << step << " more than the last.\n"
            << "- One number per comment only.\n"
            << "- Stay in order: " << start << ", " << (start + step) << ", "
            << (start + 2 * step) << ", " << (start + 3 * step) << " ...\n"
            << "- No double posting.\n\n"
            << "Starting number:\n"
            << start;
    }
    return out.str();
}

// Tier III file: JSON list of {start, step}.
inline std::vector<CountingProbe> load_counting_probes(const std::string& path) {
    nlohmann::json j = detail::load_json_file(path);
    if (!j.is_array()) throw ValidationError(path + ": expected a JSON array");
    std::vector<CountingProbe> out;
    std::size_t line = 0;
    for (const auto& item : j) {
        ++line;
        std::string where = path + " item " + std::to_string(line);
        CountingProbe p;
        p.start = detail::require_field<std::int64_t>(item, "start", where);
        p.step = detail::require_field<std::int64_t>(item, "step", where);
        if (p.step < 1) throw ValidationError(where + ": step must be a positive integer");
        p.rules_text = render_counting_rules(p.start, p.step);
        out.push_back(std::move(p));
    }
    return out;
}

// Enforces the distributed-premise design mechanically:
//  - the solution expression evaluates to the stated answer,
//  - every premise mentions at least one quantity used by the solution,
//  - the question alone omits at least one quantity the solution needs.
inline void validate_synthesis_probe(const SynthesisProbe& p, const std::string& where) {
    if (p.solution.empty())
        throw ValidationError(where + ": missing solution expression");
    double v = detail::ExprEval(p.solution).eval();
    if (std::abs(v - p.answer) > 1e-6 * std::max(1.0, std::abs(p.answer)))
        throw ValidationError(where + ": solution evaluates to " + std::to_string(v) +
                              ", answer says " + std::to_string(p.answer));
    std::vector<double> needed = detail::ExprEval::literals(p.solution);
    if (needed.empty()) throw ValidationError(where + ": solution has no quantities");
    auto mentions = [](const std::vector<double>& nums, double q) {
        for (double n : nums) {
            if (std::abs(n - q) < 1e-9) return true;
        }
        return false;
    };
    std::size_t i = 0;
    for (const std::string& premise : p.premises) {
        ++i;
        std::vector<double> nums = extract_mentioned_numbers(premise);
        bool used = false;
        for (double n : nums) {
            if (mentions(needed, n)) {
                used = true;
                break;
            }
        }
        if (!used)
            throw ValidationError(where + ": premise " + std::to_string(i) +
                                  " contributes no quantity used by the solution");
    }
    std::vector<double> in_question = extract_mentioned_numbers(p.question);
    bool omits_one = false;
    for (double q : needed) {
        if (!mentions(in_question, q)) {
            omits_one = true;
            break;
        }
    }
    if (!omits_one)
        throw ValidationError(where + ": question already states every quantity the solution needs");
}

inline void validate_synthesis_probes(const std::vector<SynthesisProbe>& probes,
                                      const std::string& path) {
    std::size_t i = 0;
    for (const auto& p : probes) {
        ++i;
        validate_synthesis_probe(p, path + " item " + std::to_string(i));
    }
}

}  // namespace socprobe
