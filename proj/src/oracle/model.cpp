#include "nnfc/oracle.hpp"

#include "sliced.hpp"

#include <functional>
#include <sstream>

namespace nnfc {

bool Model::holds(const std::string& pred, const std::vector<int>& tuple) const
{
    const PredicateTable& t = tables.at(pred);
    std::size_t idx = 0;
    for (int d : tuple)
        idx = idx * static_cast<std::size_t>(size) + static_cast<std::size_t>(d);
    return t.truth.at(idx);
}

std::string Model::str() const
{
    std::ostringstream out;
    out << "size " << size;
    for (const auto& [name, t] : tables) {
        out << "; " << name << " = {";
        bool first = true;
        for (std::size_t idx = 0; idx < t.truth.size(); ++idx) {
            if (!t.truth[idx])
                continue;
            std::vector<int> tuple(static_cast<std::size_t>(t.arity));
            std::size_t rest = idx;
            for (int i = t.arity - 1; i >= 0; --i) {
                tuple[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(size));
                rest /= static_cast<std::size_t>(size);
            }
            out << (first ? "" : " ") << '(';
            for (std::size_t i = 0; i < tuple.size(); ++i)
                out << (i ? "," : "") << tuple[i];
            out << ')';
            first = false;
        }
        out << '}';
    }
    return out.str();
}

namespace {

bool eval_rec(const Formula& f, const Model& m, std::map<Var, int>& env)
{
    switch (f.kind()) {
    case NodeKind::Atom: {
        std::vector<int> tuple;
        for (const Var& v : f.args())
            tuple.push_back(env.at(v));
        return m.holds(f.pred(), tuple);
    }
    case NodeKind::Not:
        return !eval_rec(f.body(), m, env);
    case NodeKind::And:
        return eval_rec(f.left(), m, env) && eval_rec(f.right(), m, env);
    case NodeKind::Or:
        return eval_rec(f.left(), m, env) || eval_rec(f.right(), m, env);
    case NodeKind::Forall:
    case NodeKind::Exists: {
        auto prev = env.find(f.var());
        std::optional<int> saved;
        if (prev != env.end())
            saved = prev->second;
        bool want = f.is_exists();
        bool result = !want;
        for (int d = 0; d < m.size && result != want; ++d) {
            env[f.var()] = d;
            if (eval_rec(f.body(), m, env) == want)
                result = want;
        }
        if (saved)
            env[f.var()] = *saved;
        else
            env.erase(f.var());
        return result;
    }
    default:
        throw std::invalid_argument("the sat marker has no model-theoretic meaning");
    }
}

sliced::Kernel pick_kernel(KernelKind k)
{
#if NNFC_WITH_AVX2
    if (k != KernelKind::Scalar && __builtin_cpu_supports("avx2"))
        return sliced::run_avx2;
#endif
    if (k == KernelKind::Avx2)
        throw std::runtime_error("AVX2 kernel not available on this machine or build");
    return sliced::run_scalar;
}

std::uint64_t model_count(const sliced::Layout& l, std::uint64_t budget)
{
    if (l.bits >= 63 || (std::uint64_t{1} << l.bits) > budget)
        throw BudgetExceeded("size " + std::to_string(l.size) + " needs 2^" + std::to_string(l.bits) +
                             " tables, budget is " + std::to_string(budget));
    return std::uint64_t{1} << l.bits;
}

using Combine = std::function<sliced::Block(const std::vector<sliced::Block>&)>;

/** Visits every block of models; stops early when visit returns false. */
void scan(const std::vector<Formula>& fs, const sliced::Layout& layout, std::uint64_t budget, KernelKind kind,
          const Combine& combine, const std::function<bool(std::uint64_t, const sliced::Block&)>& visit)
{
    std::uint64_t count = model_count(layout, budget);
    sliced::Kernel kernel = pick_kernel(kind);
    std::vector<sliced::Program> progs;
    for (const auto& f : fs)
        progs.push_back(sliced::compile(f, layout));
    std::vector<sliced::Block> stack(16);
    std::vector<sliced::Block> outs(fs.size());
    for (std::uint64_t base = 0; base < count; base += sliced::kLanes) {
        for (std::size_t i = 0; i < progs.size(); ++i)
            kernel(progs[i], base, stack, outs[i]);
        if (!visit(base, combine(outs)))
            return;
    }
}

std::optional<std::uint64_t> first_set(const std::vector<Formula>& fs, const sliced::Layout& layout,
                                       std::uint64_t budget, const Combine& combine)
{
    std::uint64_t count = model_count(layout, budget);
    std::optional<std::uint64_t> found;
    scan(fs, layout, budget, KernelKind::Auto, combine, [&](std::uint64_t base, const sliced::Block& b) {
        for (int w = 0; w < sliced::kWords; ++w)
            if (b[w]) {
                std::uint64_t idx = base + 64 * static_cast<std::uint64_t>(w) +
                                    static_cast<std::uint64_t>(__builtin_ctzll(b[w]));
                if (idx < count)
                    found = idx;
                return false;
            }
        return true;
    });
    return found;
}

Model decode(const sliced::Layout& l, std::uint64_t index)
{
    Model m;
    m.size = l.size;
    for (std::size_t p = 0; p < l.preds.size(); ++p) {
        PredicateTable t;
        t.arity = l.arity[p];
        std::size_t entries = 1;
        for (int i = 0; i < t.arity; ++i)
            entries *= static_cast<std::size_t>(l.size);
        for (std::size_t e = 0; e < entries; ++e)
            t.truth.push_back((index >> (l.offset[p] + e)) & 1);
        m.tables[l.preds[p]] = std::move(t);
    }
    return m;
}

} // namespace

bool model_eval(const Formula& f, const Model& m)
{
    std::map<Var, int> env;
    return eval_rec(f, m, env);
}

std::optional<Model> find_model(const Formula& f, int max_size, std::uint64_t budget)
{
    for (int n = 1; n <= max_size; ++n) {
        auto layout = sliced::make_layout({f}, n);
        auto idx = first_set({f}, layout, budget, [](const std::vector<sliced::Block>& o) { return o[0]; });
        if (idx)
            return decode(layout, *idx);
    }
    return std::nullopt;
}

std::optional<Model> find_difference(const Formula& a, const Formula& b, int size, std::uint64_t budget)
{
    auto layout = sliced::make_layout({a, b}, size);
    auto idx = first_set({a, b}, layout, budget, [](const std::vector<sliced::Block>& o) {
        sliced::Block x;
        for (int w = 0; w < sliced::kWords; ++w)
            x[w] = o[0][w] ^ o[1][w];
        return x;
    });
    if (idx)
        return decode(layout, *idx);
    return std::nullopt;
}

bool models_equivalent(const Formula& a, const Formula& b, int max_size, std::uint64_t budget)
{
    for (int n = 1; n <= max_size; ++n)
        if (find_difference(a, b, n, budget))
            return false;
    return true;
}

bool small_models_agree(const Formula& a, const Formula& b, int max_size, std::uint64_t budget)
{
    return find_model(a, max_size, budget).has_value() == find_model(b, max_size, budget).has_value();
}

bool avx2_kernel_available()
{
#if NNFC_WITH_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::string active_kernel_name()
{
    return avx2_kernel_available() ? "avx2" : "scalar";
}

std::vector<bool> truth_vector(const Formula& f, int size, KernelKind kernel, std::uint64_t budget)
{
    auto layout = sliced::make_layout({f}, size);
    std::uint64_t count = model_count(layout, budget);
    std::vector<bool> out(count);
    scan({f}, layout, budget, kernel, [](const std::vector<sliced::Block>& o) { return o[0]; },
         [&](std::uint64_t base, const sliced::Block& b) {
             for (std::uint64_t lane = 0; lane < sliced::kLanes && base + lane < count; ++lane)
                 out[base + lane] = (b[lane / 64] >> (lane % 64)) & 1;
             return true;
         });
    return out;
}

Model model_at(const Formula& f, int size, std::uint64_t index)
{
    return decode(sliced::make_layout({f}, size), index);
}

} // namespace nnfc
