#include "conwaylink/json_io.hpp"

#include <cctype>
#include <sstream>

namespace cwl {

json to_json(const LaurentPoly& p) {
    json j;
    j["vars"] = p.vars();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        if (p.nvars() == 1)
            term["e"] = json::array({e[0]});
        else
            term["e"] = json::array({e[0], e[1]});
        term["c"] = c.get_str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly laurent_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    LaurentPoly p(vars);
    for (const auto& term : j.at("terms")) {
        const auto& e = term.at("e");
        LaurentPoly::Exp exp{0, 0};
        if (e.size() != vars.size()) throw usage_error("laurent_from_json: exponent arity");
        for (std::size_t i = 0; i < e.size(); ++i) exp[i] = e[i].get<std::int64_t>();
        p.insert(exp, Int(term.at("c").get<std::string>()));
    }
    return p;
}

json to_json(const TruncatedSeries& s) {
    json j;
    j["vars"] = json::array({s.var()});
    j["order"] = s.order();
    json terms = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        if (s.coeff(k) == 0) continue;
        json term;
        term["e"] = json::array({k});
        term["c"] = s.coeff(k).get_str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

TruncatedSeries series_from_json(const json& j) {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    if (vars.size() != 1) throw usage_error("series_from_json: one variable required");
    TruncatedSeries s(vars[0], j.at("order").get<int>());
    for (const auto& term : j.at("terms"))
        s.set_coeff(term.at("e").at(0).get<int>(), Int(term.at("c").get<std::string>()));
    return s;
}

json to_json(const WElement& e) {
    json j;
    j["lambda"] = e.lambda();
    json terms = json::array();
    auto emit = [&](const WElement::Table& t, bool w) {
        for (const auto& [k, c] : t) {
            json term;
            term["i"] = k.first;
            term["j"] = k.second;
            term["w"] = w;
            term["c"] = c.get_str();
            terms.push_back(std::move(term));
        }
    };
    emit(e.plain(), false);
    emit(e.wpart(), true);
    j["terms"] = std::move(terms);
    if (!e.is_exact()) j["order"] = e.order();
    return j;
}

WElement welement_from_json(const json& j) {
    WElement e(j.at("lambda").get<int>(), j.contains("order") ? j.at("order").get<int>() : -1);
    for (const auto& term : j.at("terms"))
        e.insert(term.at("i").get<int>(), term.at("j").get<int>(), term.at("w").get<bool>(),
                 Int(term.at("c").get<std::string>()));
    return e;
}

json to_json(const FitCertificate& cert) {
    json j;
    j["bound"] = {{"M", cert.bound.M}, {"N", cert.bound.N}};
    j["order"] = cert.order;
    j["verdict"] = cert.fit_found ? "fit" : "no-fit";
    j["rank"] = {{"system", cert.rank}, {"augmented", cert.rank_augmented}};
    if (cert.fit) {
        j["fit"] = {{"num", to_json(cert.fit->num())}, {"den", to_json(cert.fit->den())}};
    }
    return j;
}

json to_json(const ModulePresentation& pres) {
    json j;
    switch (pres.ring) {
        case RingTag::ZT: j["ring"] = "Z[t]"; break;
        case RingTag::ZST: j["ring"] = "Z[s,t]"; break;
        case RingTag::ZT_loc: j["ring"] = "Z[t,1/(1-t)]"; break;
    }
    j["gens"] = pres.gens;
    json rels = json::array();
    for (const auto& row : pres.rels) {
        json jrow = json::array();
        for (const auto& entry : row) jrow.push_back(to_json(entry)["terms"]);
        rels.push_back(std::move(jrow));
    }
    j["rels"] = std::move(rels);
    return j;
}

ModulePresentation presentation_from_json(const json& j) {
    ModulePresentation pres;
    const std::string ring = j.at("ring").get<std::string>();
    std::vector<std::string> vars;
    if (ring == "Z[t]" || ring == "Z[t^]") {
        pres.ring = RingTag::ZT;
        vars = {"t"};
    } else if (ring == "Z[s,t]") {
        pres.ring = RingTag::ZST;
        vars = {"s", "t"};
    } else if (ring == "Z[t,1/(1-t)]" || ring == "Z[t^,1/(1-t)]") {
        pres.ring = RingTag::ZT_loc;
        vars = {"t"};
    } else {
        throw usage_error("presentation_from_json: unknown ring '" + ring + "'");
    }
    pres.gens = j.at("gens").get<std::vector<std::string>>();
    for (const auto& jrow : j.at("rels")) {
        std::vector<LaurentPoly> row;
        for (const auto& jentry : jrow) {
            LaurentPoly entry(vars);
            auto add_term = [&](const json& term) {
                const auto& e = term.at("e");
                LaurentPoly::Exp exp{0, 0};
                if (e.is_array()) {
                    if (e.size() != vars.size())
                        throw usage_error("presentation_from_json: exponent arity");
                    for (std::size_t i = 0; i < e.size(); ++i) exp[i] = e[i].get<std::int64_t>();
                } else {
                    exp[0] = e.get<std::int64_t>();
                }
                const json& c = term.at("c");
                entry.insert(exp, c.is_string() ? Int(c.get<std::string>())
                                                : Int(c.get<std::int64_t>()));
            };
            if (jentry.is_array())
                for (const auto& term : jentry) add_term(term);
            else
                add_term(jentry);
            row.push_back(std::move(entry));
        }
        pres.rels.push_back(std::move(row));
    }
    pres.validate();
    return pres;
}

std::string to_csv(const LaurentPoly& p) {
    if (p.nvars() != 1) throw usage_error("to_csv: univariate polynomial required");
    std::ostringstream out;
    out << "exponent,coefficient\n";
    for (const auto& [e, c] : p.terms()) out << e[0] << "," << c.get_str() << "\n";
    return out.str();
}

std::string family_csv(const std::vector<std::pair<std::int64_t, LaurentPoly>>& family) {
    std::ostringstream out;
    out << "exponent";
    for (const auto& [r, p] : family) out << ",r=" << r;
    out << "\n";
    std::int64_t lo = 0, hi = 0;
    for (const auto& [r, p] : family) {
        if (p.is_zero()) continue;
        lo = std::min(lo, p.low_degree());
        hi = std::max(hi, p.degree());
    }
    for (std::int64_t e = lo; e <= hi; ++e) {
        out << e;
        for (const auto& [r, p] : family) out << "," << p.coeff1(e).get_str();
        out << "\n";
    }
    return out.str();
}

LaurentPoly parse_poly(const std::string& text) {
    std::size_t pos = 0;
    std::string var;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_int = [&]() -> Int {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty()) throw usage_error("parse_poly: number expected at " + std::to_string(pos));
        Int v(digits);
        return neg ? Int(-v) : v;
    };
    std::vector<std::pair<std::int64_t, Int>> terms;
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        Int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw usage_error("parse_poly: '+' or '-' expected at " + std::to_string(pos));
        }
        first = false;
        Int coeff = 1;
        bool saw_coeff = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_int();
            saw_coeff = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        std::int64_t exp = 0;
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            std::string name(1, text[pos++]);
            if (var.empty()) var = name;
            if (name != var) throw usage_error("parse_poly: mixed variables");
            exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = static_cast<std::int64_t>(parse_int().get_si());
            }
        } else if (!saw_coeff) {
            throw usage_error("parse_poly: term expected at " + std::to_string(pos));
        }
        terms.emplace_back(exp, sign * coeff);
        skip_ws();
    }
    LaurentPoly p({var.empty() ? "t" : var});
    for (const auto& [e, c] : terms) p.insert({e, 0}, c);
    return p;
}

}  // namespace cwl
