#include "nnfc/prenex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nnfc {

std::string XList::str() const
{
    std::ostringstream out;
    out << '{' << xvar.str();
    if (side != 0)
        out << '@' << side;
    for (const auto& y : yvars)
        out << ',' << y.str();
    out << '}';
    return out.str();
}

bool SubstitutionList::ambiguous() const
{
    return std::any_of(entries.begin(), entries.end(), [](const XList& l) { return !l.unambiguous(); });
}

const Var& SubstitutionList::target(const Var& xvar) const
{
    for (const auto& e : entries)
        if (e.xvar == xvar) {
            if (!e.unambiguous())
                throw std::logic_error("x list of " + xvar.str() + " is ambiguous");
            return *e.yvars.begin();
        }
    throw std::out_of_range("no x list for " + xvar.str());
}

std::string SubstitutionList::str() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            out += ", ";
        out += entries[i].str();
    }
    return out + "}";
}

SubstitutionList substitution_list(const ConnectedPair& p, bool tag_sides)
{
    using Key = std::pair<Var, int>;
    std::map<Key, Key> parent;
    std::map<Key, std::set<Var>> linked_y;

    auto find = [&](Key k) {
        while (parent.at(k) != k)
            k = parent.at(k);
        return k;
    };
    auto key = [&](const Var& v, int side) { return Key{v, tag_sides ? side : 0}; };

    // sigma1: aligned pairs with at least one x variable
    for (std::size_t n = 0; n < p.l1.args.size(); ++n) {
        const Var& a = p.l1.args[n];
        const Var& b = p.l2.args[n];
        if (a.is_universal())
            parent.try_emplace(key(a, 1), key(a, 1));
        if (b.is_universal())
            parent.try_emplace(key(b, 2), key(b, 2));
        if (a.is_universal() && b.is_universal()) {
            Key ra = find(key(a, 1)), rb = find(key(b, 2));
            if (ra != rb)
                parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    // sigma2: each x cluster collects the y variables linked to any member
    for (std::size_t n = 0; n < p.l1.args.size(); ++n) {
        const Var& a = p.l1.args[n];
        const Var& b = p.l2.args[n];
        if (a.is_universal() && b.is_existential())
            linked_y[find(key(a, 1))].insert(b);
        else if (a.is_existential() && b.is_universal())
            linked_y[find(key(b, 2))].insert(a);
    }
    // sigma3: one list per x variable, y0 when nothing links it to a y variable
    SubstitutionList sigma;
    for (const auto& [k, _] : parent) {
        XList l{k.first, k.second, {}};
        auto it = linked_y.find(find(k));
        if (it == linked_y.end() || it->second.empty())
            l.yvars.insert(Var::y0());
        else
            l.yvars = it->second;
        sigma.entries.push_back(std::move(l));
    }
    return sigma;
}

} // namespace nnfc
