#pragma once

#include "nnfc/formula.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnfc {

enum class RuleId {
    PN1, PN2, PN3, PN4, PN5, PN6, PN7, PN8, PN9, PN10,
    SUB1, SUB2,
    ForallE,
    AndI,
    ExistsM,
    SAT1, SAT2,
};

std::string rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);
bool is_pn_rule(RuleId r);

/** ltr pushes the quantifier inward (left column to right column of the PN table). */
enum class Direction { LeftToRight, RightToLeft };

struct Payload {
    Direction dir = Direction::LeftToRight;
    std::optional<Var> from; // SUB1/SUB2: old name; ForallE: the universal variable
    std::optional<Var> to;   // SUB1/SUB2: new name; ForallE: the replacing existential (y0 = fresh)

    bool operator==(const Payload&) const = default;
};

struct DerivationStep {
    RuleId rule;
    Path position;
    Payload payload;
    Formula result;
};

struct Certificate {
    Formula initial;
    std::vector<DerivationStep> steps;
    Formula final;
    bool claims_refutation = true;
};

class RuleError : public std::runtime_error {
public:
    enum class Kind { PatternMismatch, SideConditionViolated };
    RuleError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/** Applies one rule at position. Throws RuleError. */
Formula apply_rule(const Formula& f, RuleId rule, const Path& position, const Payload& payload = {});

bool is_explicit_contradiction(const Formula& f);

struct VerifyResult {
    bool verified = false;
    std::size_t step = 0; // 1-based index of the failing step; steps.size()+1 for the final check
    std::string reason;
};

VerifyResult verify_certificate(const Certificate& c);

std::string certificate_to_text(const Certificate& c);
/** Throws std::invalid_argument / ParseError on malformed input. */
Certificate certificate_from_text(const std::string& text);
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/** A formula together with the checked steps that produced it. */
class Derivation {
public:
    explicit Derivation(Formula start) : initial_(start), current_(std::move(start)) {}

    const Formula& current() const { return current_; }
    const Formula& initial() const { return initial_; }
    const std::vector<DerivationStep>& steps() const { return steps_; }

    const Formula& apply(RuleId rule, const Path& position, const Payload& payload = {});
    void append(const Derivation& other);

    Certificate certificate(bool claims_refutation = true) const;

private:
    Formula initial_;
    Formula current_;
    std::vector<DerivationStep> steps_;
};

} // namespace nnfc
