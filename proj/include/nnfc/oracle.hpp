#pragma once

#include "nnfc/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnfc {

enum class SkolemVerdict { Contradictory, Satisfiable };

/**
 * Skolemizes a two-literal disjunction-free formula along its own quantifier nesting and
 * unifies the two literals (occurs check on). Contradictory iff they unify.
 */
SkolemVerdict skolem_decide(const Formula& psi);

struct PredicateTable {
    int arity = 0;
    std::vector<bool> truth; // index: tuple read as a base-size number, first argument most significant
};

struct Model {
    int size = 1;
    std::map<std::string, PredicateTable> tables;

    bool holds(const std::string& pred, const std::vector<int>& tuple) const;
    std::string str() const;
};

bool model_eval(const Formula& f, const Model& m);

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

constexpr std::uint64_t kDefaultModelBudget = std::uint64_t{1} << 20;

/** First model in enumeration order (smallest size first), or nullopt if none up to max_size. */
std::optional<Model> find_model(const Formula& f, int max_size, std::uint64_t budget = kDefaultModelBudget);

/** A model of the given size on which a and b take different truth values. */
std::optional<Model> find_difference(const Formula& a, const Formula& b, int size,
                                     std::uint64_t budget = kDefaultModelBudget);

/** True iff a and b agree on every model of each size in [1, max_size]. */
bool models_equivalent(const Formula& a, const Formula& b, int max_size, std::uint64_t budget = kDefaultModelBudget);

/** True iff a has a model of size <= max_size exactly when b has one. */
bool small_models_agree(const Formula& a, const Formula& b, int max_size, std::uint64_t budget = kDefaultModelBudget);

enum class KernelKind { Auto, Scalar, Avx2 };

bool avx2_kernel_available();
std::string active_kernel_name();

/** Truth value of f on every model of the given size, indexed like the enumeration. */
std::vector<bool> truth_vector(const Formula& f, int size, KernelKind kernel = KernelKind::Auto,
                               std::uint64_t budget = kDefaultModelBudget);

/** The model with the given enumeration index over the predicates of f. */
Model model_at(const Formula& f, int size, std::uint64_t index);

} // namespace nnfc
