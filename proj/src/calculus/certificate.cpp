#include "nnfc/calculus.hpp"

#include <sstream>

namespace nnfc {

namespace {

const ParseOptions kCertParse{true, true};

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> payload_fields(RuleId r, const Payload& p)
{
    std::vector<std::pair<std::string, std::string>> out;
    if (is_pn_rule(r))
        out.emplace_back("dir", p.dir == Direction::LeftToRight ? "ltr" : "rtl");
    if (r == RuleId::ForallE) {
        if (p.from)
            out.emplace_back("var", p.from->str());
        if (p.to)
            out.emplace_back("by", p.to->str());
    } else {
        if (p.from)
            out.emplace_back("from", p.from->str());
        if (p.to)
            out.emplace_back("to", p.to->str());
    }
    return out;
}

Var parse_payload_var(const std::string& key, const std::string& text)
{
    auto v = parse_var(text);
    if (!v)
        throw std::invalid_argument("bad variable '" + text + "' for " + key);
    return *v;
}

void set_payload_field(Payload& p, const std::string& key, const std::string& value)
{
    if (key == "dir") {
        if (value == "ltr")
            p.dir = Direction::LeftToRight;
        else if (value == "rtl")
            p.dir = Direction::RightToLeft;
        else
            throw std::invalid_argument("dir must be ltr or rtl");
    } else if (key == "var" || key == "from") {
        p.from = parse_payload_var(key, value);
    } else if (key == "by" || key == "to") {
        p.to = parse_payload_var(key, value);
    } else {
        throw std::invalid_argument("unknown payload key '" + key + "'");
    }
}

DerivationStep parse_step_line(const std::string& line)
{
    std::string body = line;
    std::string result_text;
    auto arrow = body.find("=>");
    if (arrow != std::string::npos) {
        result_text = trim(body.substr(arrow + 2));
        body = body.substr(0, arrow);
    }
    std::istringstream in(body);
    std::string name, at, path;
    in >> name >> at >> path;
    auto rule = rule_from_name(name);
    if (!rule)
        throw std::invalid_argument("unknown rule '" + name + "'");
    if (at != "@")
        throw std::invalid_argument("expected '@' after rule name");
    auto p = parse_path(path);
    if (!p)
        throw std::invalid_argument("bad path '" + path + "'");
    DerivationStep step{*rule, *p, {}, {}};
    std::string kv;
    while (in >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value, got '" + kv + "'");
        set_payload_field(step.payload, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!result_text.empty())
        step.result = parse(result_text, kCertParse);
    return step;
}

} // namespace

std::string certificate_to_text(const Certificate& c)
{
    std::ostringstream out;
    out << "initial: " << c.initial.str() << "\n";
    for (const auto& s : c.steps) {
        out << rule_name(s.rule) << " @ " << path_str(s.position);
        for (const auto& [k, v] : payload_fields(s.rule, s.payload))
            out << ' ' << k << '=' << v;
        if (s.result.valid())
            out << " => " << s.result.str();
        out << "\n";
    }
    out << "final: " << c.final.str() << "\n";
    out << "claim: " << (c.claims_refutation ? "refutation" : "none") << "\n";
    return out.str();
}

Certificate certificate_from_text(const std::string& text)
{
    Certificate c;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#')
            continue;
        try {
            if (line.rfind("initial:", 0) == 0)
                c.initial = parse(trim(line.substr(8)), kCertParse);
            else if (line.rfind("final:", 0) == 0)
                c.final = parse(trim(line.substr(6)), kCertParse);
            else if (line.rfind("claim:", 0) == 0)
                c.claims_refutation = trim(line.substr(6)) != "none";
            else
                c.steps.push_back(parse_step_line(line));
        } catch (const ParseError& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!c.initial.valid())
        throw std::invalid_argument("certificate has no 'initial:' line");
    return c;
}

nlohmann::json certificate_to_json(const Certificate& c)
{
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : c.steps) {
        nlohmann::json payload = nlohmann::json::object();
        for (const auto& [k, v] : payload_fields(s.rule, s.payload))
            payload[k] = v;
        nlohmann::json step = {{"rule", rule_name(s.rule)}, {"path", s.position}, {"payload", payload}};
        if (s.result.valid())
            step["result"] = s.result.str();
        steps.push_back(std::move(step));
    }
    return {
        {"initial", c.initial.str()},
        {"steps", steps},
        {"final", c.final.valid() ? c.final.str() : ""},
        {"claim", c.claims_refutation ? "refutation" : "none"},
    };
}

Certificate certificate_from_json(const nlohmann::json& j)
{
    Certificate c;
    c.initial = parse(j.at("initial").get<std::string>(), kCertParse);
    for (const auto& s : j.at("steps")) {
        auto rule = rule_from_name(s.at("rule").get<std::string>());
        if (!rule)
            throw std::invalid_argument("unknown rule " + s.at("rule").dump());
        DerivationStep step{*rule, s.at("path").get<Path>(), {}, {}};
        if (s.contains("payload"))
            for (const auto& [k, v] : s.at("payload").items())
                set_payload_field(step.payload, k, v.get<std::string>());
        if (s.contains("result"))
            step.result = parse(s.at("result").get<std::string>(), kCertParse);
        c.steps.push_back(std::move(step));
    }
    std::string fin = j.value("final", "");
    if (!fin.empty())
        c.final = parse(fin, kCertParse);
    c.claims_refutation = j.value("claim", "refutation") != "none";
    return c;
}

} // namespace nnfc
