#include "nnfc/oracle.hpp"

#include <map>

namespace nnfc {

namespace {

struct Term {
    bool is_var;
    int symbol; // variable id or function symbol id
    std::vector<int> args;
};

class Unifier {
public:
    int var(int id)
    {
        terms_.push_back({true, id, {}});
        return static_cast<int>(terms_.size()) - 1;
    }
    int fn(int symbol, std::vector<int> args)
    {
        terms_.push_back({false, symbol, std::move(args)});
        return static_cast<int>(terms_.size()) - 1;
    }

    bool unify(int a, int b)
    {
        a = walk(a);
        b = walk(b);
        if (a == b)
            return true;
        const Term& ta = terms_[a];
        const Term& tb = terms_[b];
        if (ta.is_var && tb.is_var && ta.symbol == tb.symbol)
            return true;
        if (ta.is_var)
            return bind(a, b);
        if (tb.is_var)
            return bind(b, a);
        if (ta.symbol != tb.symbol || ta.args.size() != tb.args.size())
            return false;
        std::vector<int> xs = ta.args, ys = tb.args;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (!unify(xs[i], ys[i]))
                return false;
        return true;
    }

private:
    int walk(int t) const
    {
        while (terms_[t].is_var) {
            auto it = binding_.find(terms_[t].symbol);
            if (it == binding_.end())
                break;
            t = it->second;
        }
        return t;
    }

    bool occurs(int var_symbol, int t) const
    {
        t = walk(t);
        const Term& tt = terms_[t];
        if (tt.is_var)
            return tt.symbol == var_symbol;
        for (int a : tt.args)
            if (occurs(var_symbol, a))
                return true;
        return false;
    }

    bool bind(int v, int t)
    {
        int sym = terms_[v].symbol;
        if (occurs(sym, t))
            return false;
        binding_[sym] = t;
        return true;
    }

    std::vector<Term> terms_;
    std::map<int, int> binding_;
};

} // namespace

SkolemVerdict skolem_decide(const Formula& psi)
{
    auto lits = literals(psi);
    if (lits.size() != 2 || lits[0].polarity == lits[1].polarity || lits[0].pred != lits[1].pred ||
        lits[0].args.size() != lits[1].args.size())
        return SkolemVerdict::Satisfiable;

    Unifier u;
    std::map<Var, int> function_symbol;
    int next_var = 0;
    std::vector<int> arg_terms[2];

    for (int side = 0; side < 2; ++side) {
        // universals are renamed apart per literal; skolem symbols are shared
        std::map<Var, int> term_of;
        std::vector<int> universals;
        const Formula* node = &psi;
        for (int step : lits[side].path) {
            if (node->is_forall()) {
                int t = u.var(next_var++);
                term_of[node->var()] = t;
                universals.push_back(t);
            } else if (node->is_exists()) {
                auto [it, _] = function_symbol.try_emplace(node->var(), static_cast<int>(function_symbol.size()));
                term_of[node->var()] = u.fn(it->second, universals);
            }
            node = &node->child(step);
        }
        for (const Var& v : lits[side].args)
            arg_terms[side].push_back(term_of.at(v));
    }

    for (std::size_t i = 0; i < arg_terms[0].size(); ++i)
        if (!u.unify(arg_terms[0][i], arg_terms[1][i]))
            return SkolemVerdict::Satisfiable;
    return SkolemVerdict::Contradictory;
}

} // namespace nnfc
