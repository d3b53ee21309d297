#include "sliced.hpp"

#include "nnfc/oracle.hpp"

#include <map>
#include <optional>

namespace nnfc::sliced {

std::uint32_t Layout::bit(std::size_t pred, const std::vector<int>& tuple) const
{
    std::uint32_t idx = 0;
    for (int d : tuple)
        idx = idx * static_cast<std::uint32_t>(size) + static_cast<std::uint32_t>(d);
    return offset[pred] + idx;
}

Layout make_layout(const std::vector<Formula>& fs, int size)
{
    std::map<std::string, int> arities;
    for (const auto& f : fs)
        for (const auto& lit : literals(f)) {
            auto [it, fresh] = arities.emplace(lit.pred, static_cast<int>(lit.args.size()));
            if (!fresh && it->second != static_cast<int>(lit.args.size()))
                throw std::invalid_argument("predicate " + lit.pred + " used with two arities");
        }
    Layout l;
    l.size = size;
    std::uint64_t bits = 0;
    for (const auto& [name, ar] : arities) {
        l.preds.push_back(name);
        l.arity.push_back(ar);
        l.offset.push_back(static_cast<std::uint32_t>(bits));
        std::uint64_t entries = 1;
        for (int i = 0; i < ar; ++i)
            entries *= static_cast<std::uint64_t>(size);
        bits += entries;
        if (bits > 63)
            throw BudgetExceeded("model space has more than 2^63 tables");
    }
    l.bits = static_cast<std::uint32_t>(bits);
    return l;
}

namespace {

struct Compiler {
    const Layout& layout;
    std::map<std::string, std::size_t> index;
    std::map<Var, int> env;
    Program prog;

    void emit(const Formula& f)
    {
        switch (f.kind()) {
        case NodeKind::Atom: {
            std::vector<int> tuple;
            for (const Var& v : f.args()) {
                auto it = env.find(v);
                if (it == env.end())
                    throw std::invalid_argument("free variable " + v.str() + " in model check");
                tuple.push_back(it->second);
            }
            prog.push_back({Op::Atom, layout.bit(index.at(f.pred()), tuple)});
            return;
        }
        case NodeKind::Not:
            emit(f.body());
            prog.push_back({Op::Not, 0});
            return;
        case NodeKind::And:
        case NodeKind::Or:
            emit(f.left());
            emit(f.right());
            prog.push_back({f.is_and() ? Op::And : Op::Or, 2});
            return;
        case NodeKind::Forall:
        case NodeKind::Exists: {
            auto saved = env.find(f.var()) == env.end() ? std::optional<int>() : std::optional<int>(env[f.var()]);
            for (int d = 0; d < layout.size; ++d) {
                env[f.var()] = d;
                emit(f.body());
            }
            if (saved)
                env[f.var()] = *saved;
            else
                env.erase(f.var());
            if (layout.size > 1)
                prog.push_back({f.is_forall() ? Op::And : Op::Or, static_cast<std::uint32_t>(layout.size)});
            return;
        }
        case NodeKind::Sat:
            throw std::invalid_argument("the sat marker has no model-theoretic meaning");
        }
    }
};

} // namespace

Program compile(const Formula& f, const Layout& layout)
{
    Compiler c{layout, {}, {}, {}};
    for (std::size_t i = 0; i < layout.preds.size(); ++i)
        c.index[layout.preds[i]] = i;
    c.emit(f);
    return c.prog;
}

} // namespace nnfc::sliced
