#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nnfc {

enum class VarKind : std::uint8_t { Universal, Existential };

/**
 * A variable such as x3, y1_2 or y0.
 *
 * Canonical variables use the letter 'x' (universal) or 'y' (existential).
 * Before rectification the parser also accepts other letters (v, w, z9, ...);
 * those carry letter != 'x'/'y' and possibly no base index.
 */
struct Var {
    char letter = 'x';
    int base = 0;                    // -1 when the identifier has no digits
    std::vector<std::uint32_t> subs; // deeper index levels

    Var() = default;
    Var(char l, int b, std::vector<std::uint32_t> s = {}) : letter(l), base(b), subs(std::move(s)) {}

    static Var x(int base, std::vector<std::uint32_t> subs = {}) { return Var('x', base, std::move(subs)); }
    static Var y(int base, std::vector<std::uint32_t> subs = {}) { return Var('y', base, std::move(subs)); }
    static Var y0() { return Var('y', 0); }

    bool is_universal() const { return letter == 'x'; }
    bool is_existential() const { return letter == 'y'; }
    bool is_y0() const { return letter == 'y' && base == 0 && subs.empty(); }
    bool is_canonical() const { return (letter == 'x' || letter == 'y') && base >= 0; }
    std::size_t depth() const { return 1 + subs.size(); }
    VarKind kind() const { return letter == 'y' ? VarKind::Existential : VarKind::Universal; }

    /** Same variable with one more index level appended. */
    Var with_sub(std::uint32_t s) const;
    /** Drops all sub-indices (the level-1 name this variable derives from). */
    Var root() const { return Var(letter, base); }

    std::string str() const;

    auto operator<=>(const Var&) const = default;
    bool operator==(const Var&) const = default;
};

std::optional<Var> parse_var(const std::string& text);

enum class NodeKind : std::uint8_t { Atom, Not, And, Or, Forall, Exists, Sat };

class Formula;
struct Node;

using Path = std::vector<int>;

std::string path_str(const Path& p);
std::optional<Path> parse_path(const std::string& text);

/** Immutable, structurally shared formula tree. */
class Formula {
public:
    Formula() = default;

    static Formula atom(std::string pred, std::vector<Var> args);
    static Formula neg(Formula f);
    static Formula conj(Formula l, Formula r);
    static Formula disj(Formula l, Formula r);
    static Formula forall(Var v, Formula body);
    static Formula exists(Var v, Formula body);
    static Formula quant(NodeKind k, Var v, Formula body);
    static Formula binary(NodeKind k, Formula l, Formula r);
    /** The pruner's placeholder for deleted literals. Never produced by parse(). */
    static Formula sat();

    bool valid() const { return node_ != nullptr; }
    NodeKind kind() const;
    bool is_atom() const { return kind() == NodeKind::Atom; }
    bool is_not() const { return kind() == NodeKind::Not; }
    bool is_and() const { return kind() == NodeKind::And; }
    bool is_or() const { return kind() == NodeKind::Or; }
    bool is_forall() const { return kind() == NodeKind::Forall; }
    bool is_exists() const { return kind() == NodeKind::Exists; }
    bool is_quant() const { return is_forall() || is_exists(); }
    bool is_binary() const { return is_and() || is_or(); }
    bool is_sat() const { return kind() == NodeKind::Sat; }
    bool is_literal() const;

    const std::string& pred() const;
    const std::vector<Var>& args() const;
    const Var& var() const;
    const Formula& left() const;
    const Formula& right() const;
    const Formula& body() const { return left(); }
    const Formula& child(int i) const { return i == 0 ? left() : right(); }
    int num_children() const;

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    /** Concrete syntax. */
    std::string str() const;

private:
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Node {
    NodeKind kind;
    std::string pred;
    std::vector<Var> args;
    Var var;
    Formula lhs;
    Formula rhs;
};

enum class Polarity : std::uint8_t { Pos, Neg };

struct LiteralOccurrence {
    Path path;
    Polarity polarity = Polarity::Pos;
    std::string pred;
    std::vector<Var> args;

    std::string str() const;
    bool operator==(const LiteralOccurrence&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct ParseOptions {
    bool allow_y0 = false;       // certificates mention the fresh variable
    bool require_closed = true;
};

Formula parse(const std::string& text, const ParseOptions& opts = {});

// ---- tree navigation ----
const Formula& subformula_at(const Formula& f, const Path& p);
bool has_path(const Formula& f, const Path& p);
Formula replace_at(const Formula& f, const Path& p, const Formula& replacement);

/** Literal occurrences in left-to-right (path-lexicographic) order. */
std::vector<LiteralOccurrence> literals(const Formula& f);

std::set<Var> free_vars(const Formula& f);
bool occurs_free(const Formula& f, const Var& v);
/** All variables mentioned anywhere (binders and atom arguments). */
std::set<Var> all_vars(const Formula& f);
std::vector<Var> binders(const Formula& f);
std::set<std::string> predicates(const Formula& f);
std::size_t quantifier_count(const Formula& f);

/** Capture-avoiding is not attempted: replaces free occurrences of from by to. */
Formula substitute(const Formula& f, const Var& from, const Var& to);

// ---- predicates on shape ----
bool is_nnf(const Formula& f);
bool is_wedge_nnf(const Formula& f);
bool is_rectified(const Formula& f);
bool is_closed(const Formula& f);
bool contains_sat(const Formula& f);
bool contains_forall(const Formula& f);

// ---- normal forms ----
Formula to_nnf(const Formula& f);
Formula rectify(const Formula& f);
Formula max_subscript(const Formula& f);
std::vector<Formula> to_foldnf(const Formula& f);

struct QuantifiedVar {
    NodeKind kind; // Forall or Exists
    Var var;
    bool operator==(const QuantifiedVar&) const = default;
    std::string str() const;
};

struct DnfMatrix {
    std::vector<QuantifiedVar> prefix;
    std::vector<std::vector<LiteralOccurrence>> matrix;
};

DnfMatrix dnf_matrix(const Formula& f);

// ---- comparison modulo normalizations ----
/** Canonical text modulo AC of &/| and reordering inside same-kind quantifier blocks. */
std::string ac_canonical(const Formula& f);
bool equal_modulo_ac(const Formula& a, const Formula& b);
/** Equality modulo bound-variable renaming and AC of &/|. */
bool alpha_equal(const Formula& a, const Formula& b);

Formula and_all(const std::vector<Formula>& fs);
Formula or_all(const std::vector<Formula>& fs);

} // namespace nnfc
