#include "nnfc/cli.hpp"

#include "nnfc/calculus.hpp"
#include "nnfc/decision.hpp"
#include "nnfc/oracle.hpp"
#include "nnfc/pruner.hpp"

#include "json.hpp"

#include <sstream>

namespace nnfc {

std::optional<Command> parse_command(const std::string& name)
{
    if (name == "decide")
        return Command::Decide;
    if (name == "prune")
        return Command::Prune;
    if (name == "verify")
        return Command::Verify;
    if (name == "oracle-check")
        return Command::OracleCheck;
    if (name == "pipeline-dump")
        return Command::PipelineDump;
    return std::nullopt;
}

namespace {

using nlohmann::json;

std::string strip_comments(const std::string& text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#')
            continue;
        out += line + "\n";
    }
    return out;
}

int verdict_code(Verdict v)
{
    switch (v) {
    case Verdict::Contradictory: return exit_code::contradictory;
    case Verdict::Satisfiable: return exit_code::satisfiable;
    default: return exit_code::unknown;
    }
}

std::string pair_str(const ConnectedPair& p)
{
    return p.l1.str() + " / " + p.l2.str();
}

struct Normalized {
    Formula input;
    Formula nnf;
    Formula rectified;
    std::vector<Formula> disjuncts;
};

Normalized normalize(const std::string& text)
{
    Normalized n;
    n.input = parse(strip_comments(text));
    n.nnf = to_nnf(n.input);
    n.rectified = rectify(n.nnf);
    n.disjuncts = to_foldnf(n.rectified);
    return n;
}

void dump_stages(std::ostream& out, const PsiStages& st)
{
    out << "    pair formula: " << st.psi.str() << "\n";
    out << "    scoped:       " << st.scoped.str() << "\n";
    out << "    multiplied:   " << st.optimized.str() << "\n";
    out << "    sigma:        " << st.sigma.str() << "\n";
    if (st.prenexes.empty())
        out << "    prenex:       (not computed)\n";
    for (const auto& p : st.prenexes)
        out << "    prenex:       " << p.formula().str() << "\n";
    out << "    chosen:       " << (st.chosen ? st.chosen->formula().str() : std::string("none")) << "\n";
}

void dump_pipeline(std::ostream& out, const Decision& overall)
{
    for (std::size_t i = 0; i < overall.disjuncts.size(); ++i) {
        const Decision& d = overall.disjuncts[i];
        out << "disjunct " << i + 1 << ": " << d.formula.str() << "\n";
        if (d.pairs.empty())
            out << "  (no pairs decided: " << witness_name(d.witness) << ")\n";
        for (const auto& p : d.pairs) {
            out << "  pair " << pair_str(p.pair) << ": " << verdict_name(p.verdict);
            if (p.verdict != Verdict::Contradictory)
                out << " (" << witness_name(p.witness) << ")";
            out << "\n";
            if (p.stages)
                dump_stages(out, *p.stages);
        }
    }
}

/** Independent re-checks; returns the list of disagreements. */
std::vector<std::string> oracle_checks(const Normalized& n, const Decision& overall, int max_size,
                                       std::vector<std::string>& notes)
{
    std::vector<std::string> bad;
    auto equivalent = [&](const std::string& what, const Formula& a, const Formula& b) {
        try {
            if (!models_equivalent(a, b, max_size))
                bad.push_back(what + " changed the truth value on a small model");
        } catch (const BudgetExceeded& e) {
            notes.push_back(what + ": model check skipped (" + e.what() + ")");
        }
    };
    equivalent("NNF conversion", n.input, n.nnf);
    equivalent("rectification", n.nnf, n.rectified);
    if (!n.disjuncts.empty())
        equivalent("disjunct split", n.rectified, or_all(n.disjuncts));

    for (const auto& d : overall.disjuncts) {
        if (d.certificate) {
            auto v = verify_certificate(*d.certificate);
            if (!v.verified)
                bad.push_back("certificate rejected at step " + std::to_string(v.step) + ": " + v.reason);
        }
        for (const auto& p : d.pairs) {
            Formula psi = p.stages ? p.stages->psi : extract_subformula(d.formula, p.pair);
            bool skolem_refutes = skolem_decide(psi) == SkolemVerdict::Contradictory;
            bool refutes = p.verdict == Verdict::Contradictory;
            if (skolem_refutes != refutes)
                bad.push_back("pair " + pair_str(p.pair) + ": unification oracle says " +
                              (skolem_refutes ? "contradictory" : "satisfiable"));
            if (!p.stages)
                continue;
            equivalent("scope minimization of " + psi.str(), p.stages->psi, p.stages->scoped);
            for (const auto& form : p.stages->prenexes)
                equivalent("prenex " + form.formula().str(), p.stages->optimized, form.formula());
        }
    }
    return bad;
}

json decision_json(const Decision& overall)
{
    json disjuncts = json::array();
    for (const auto& d : overall.disjuncts) {
        json pairs = json::array();
        for (const auto& r : unifiable_pairs(d.formula)) {
            json failed = json::array();
            for (auto c : r.failed)
                failed.push_back(criterion_name(c));
            pairs.push_back({{"l1", r.pair.l1.str()}, {"l2", r.pair.l2.str()}, {"unifiable", r.unifiable},
                             {"failed", failed}});
        }
        const PairDecision* chosen = nullptr;
        for (const auto& p : d.pairs)
            if (p.verdict == Verdict::Contradictory) {
                chosen = &p;
                break;
            }
        json entry = {
            {"formula", d.formula.str()},
            {"verdict", verdict_name(d.verdict)},
            {"witness", witness_name(d.witness)},
            {"pairs", pairs},
            {"sigma", nullptr},
            {"optimal_prenex", nullptr},
            {"certificate", nullptr},
        };
        if (chosen && chosen->stages) {
            entry["sigma"] = chosen->stages->sigma.str();
            if (chosen->stages->chosen)
                entry["optimal_prenex"] = chosen->stages->chosen->formula().str();
        }
        if (d.certificate)
            entry["certificate"] = certificate_to_json(*d.certificate);
        disjuncts.push_back(std::move(entry));
    }
    return {{"status", verdict_name(overall.verdict)}, {"disjuncts", disjuncts}};
}

RunResult run_decide(const RunConfig& cfg, const std::string& input)
{
    Normalized n = normalize(input);
    Decision overall = decide_foldnf(n.disjuncts);
    std::ostringstream out;
    RunResult r;
    r.code = verdict_code(overall.verdict);

    std::vector<std::string> notes;
    std::vector<std::string> mismatches;
    if (cfg.oracle || cfg.command == Command::OracleCheck)
        mismatches = oracle_checks(n, overall, cfg.max_model_size, notes);

    if (cfg.command == Command::PipelineDump) {
        dump_pipeline(out, overall);
        r.code = exit_code::ok;
        r.out = out.str();
        return r;
    }

    if (cfg.json) {
        json doc = decision_json(overall);
        if (cfg.oracle || cfg.command == Command::OracleCheck)
            doc["oracle"] = {{"mismatches", mismatches}, {"notes", notes}};
        out << doc.dump(2) << "\n";
    } else {
        if (cfg.command != Command::OracleCheck || mismatches.empty())
            out << verdict_name(overall.verdict) << "\n";
        if (overall.verdict != Verdict::Contradictory)
            out << "witness: " << witness_name(overall.witness) << "\n";
        for (std::size_t i = 0; i < overall.disjuncts.size(); ++i) {
            const Decision& d = overall.disjuncts[i];
            out << "disjunct " << i + 1 << ": " << verdict_name(d.verdict);
            if (d.verdict != Verdict::Contradictory)
                out << " (" << witness_name(d.witness) << ")";
            out << "\n";
            for (const auto& p : d.pairs) {
                out << "  pair " << pair_str(p.pair) << ": ";
                out << (p.verdict == Verdict::Contradictory ? std::string("unifiable") : witness_name(p.witness))
                    << "\n";
            }
        }
        if (cfg.emit_certificate)
            for (std::size_t i = 0; i < overall.disjuncts.size(); ++i)
                if (overall.disjuncts[i].certificate) {
                    out << "# certificate for disjunct " << i + 1 << "\n";
                    out << certificate_to_text(*overall.disjuncts[i].certificate);
                }
        if (cfg.trace)
            dump_pipeline(out, overall);
        for (const auto& note : notes)
            out << "note: " << note << "\n";
        for (const auto& m : mismatches)
            out << "ORACLE MISMATCH: " << m << "\n";
        if (cfg.command == Command::OracleCheck && mismatches.empty())
            out << "oracle: all checks agree\n";
    }
    if (!mismatches.empty())
        r.code = exit_code::oracle_mismatch;
    else if (cfg.command == Command::OracleCheck)
        r.code = exit_code::ok;
    r.out = out.str();
    return r;
}

RunResult run_verify(const RunConfig& cfg, const std::string& input)
{
    auto first = input.find_first_not_of(" \t\r\n");
    Certificate c = first != std::string::npos && input[first] == '{'
                        ? certificate_from_json(json::parse(input))
                        : certificate_from_text(input);
    VerifyResult v = verify_certificate(c);
    RunResult r;
    if (cfg.json) {
        json doc = {{"status", v.verified ? "VERIFIED" : "REJECTED"}};
        if (!v.verified)
            doc["step"] = v.step, doc["reason"] = v.reason;
        r.out = doc.dump(2) + "\n";
    } else if (v.verified) {
        r.out = "VERIFIED\n";
    } else {
        r.out = "REJECTED step " + std::to_string(v.step) + ": " + v.reason + "\n";
    }
    r.code = v.verified ? exit_code::ok : exit_code::usage;
    return r;
}

RunResult run_prune(const RunConfig& cfg, const std::string& input)
{
    Formula f = rectify(to_nnf(parse(strip_comments(input))));
    Formula pruned = prune(f);
    RunResult r;
    if (cfg.json)
        r.out = json{{"input", f.str()}, {"pruned", pruned.str()}}.dump(2) + "\n";
    else
        r.out = pruned.str() + "\n";
    return r;
}

} // namespace

RunResult run(const RunConfig& config, const std::string& input)
{
    if (config.max_model_size < 1 || config.max_model_size > 3)
        return {exit_code::usage, "error: --max-model-size must be between 1 and 3\n"};
    try {
        switch (config.command) {
        case Command::Verify: return run_verify(config, input);
        case Command::Prune: return run_prune(config, input);
        default: return run_decide(config, input);
        }
    } catch (const ParseError& e) {
        return {exit_code::usage, std::string("parse error at ") + e.what() + "\n"};
    } catch (const json::exception& e) {
        return {exit_code::usage, std::string("error: malformed JSON: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {exit_code::usage, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace nnfc
