// cwl: batch front-end for the exact link-invariant calculus.
//
// Subcommands: conway (family polynomials), certify (rationality
// certificates), group (conjugacy demos), module (knot-module reports).
// Exit codes: 0 = computed and all verifications passed, 2 = usage error,
// 3 = verification mismatch (library defect), 4 = resource limit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "conwaylink/conway.hpp"
#include "conwaylink/groups.hpp"
#include "conwaylink/json_io.hpp"
#include "conwaylink/knot_module.hpp"
#include "conwaylink/rationality.hpp"
#include "conwaylink/walgebra.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitResource = 4;

constexpr std::int64_t kMaxFamilyR = 4000;
constexpr std::int64_t kMaxOmegaR = 64;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw cwl::usage_error("cannot open output file: " + path);
    out << text;
}

std::vector<std::int64_t> parse_r_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw cwl::usage_error("empty r list");
    return out;
}

struct ConwayOptions {
    std::string which = "J";
    std::int64_t r = 0;
    std::string r_list;
    bool verify = false;
    std::string format = "table";
    std::string output;
    int jobs = 1;
};

int run_conway(const ConwayOptions& opt) {
    std::vector<std::int64_t> rs;
    if (!opt.r_list.empty())
        rs = parse_r_list(opt.r_list);
    else
        rs.push_back(opt.r);
    for (std::int64_t r : rs) {
        if (r < 1) throw cwl::usage_error("r must be >= 1");
        const std::int64_t cap = opt.which == "omega" ? kMaxOmegaR : kMaxFamilyR;
        if (r > cap) {
            std::cerr << "resource limit: r = " << r << " exceeds the supported bound " << cap
                      << " for --which " << opt.which
                      << "; split the computation or raise the bound in a custom build\n";
            return kExitResource;
        }
    }

    std::vector<cwl::LaurentPoly> results(rs.size());
    std::vector<std::string> errors(rs.size());
    auto compute = [&](std::size_t idx) {
        try {
            const std::int64_t r = rs[idx];
            if (opt.which == "J")
                results[idx] = cwl::nabla_J(r);
            else if (opt.which == "M")
                results[idx] = cwl::nabla_M(r);
            else
                results[idx] = cwl::omega_Mr(r);
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || rs.size() == 1) {
        for (std::size_t i = 0; i < rs.size(); ++i) compute(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < rs.size();
                     i += static_cast<std::size_t>(jobs))
                    compute(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors)
        if (!err.empty()) throw cwl::usage_error(err);

    if (opt.verify) {
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const std::int64_t r = rs[i];
            bool ok = true;
            if (opt.which == "J") {
                ok = results[i] == cwl::nabla_J_oracle(r);
            } else if (opt.which == "M") {
                // independent route: z * Omega_{M_r}(x, x) recovered through z
                cwl::LaurentPoly diag = cwl::omega_Mr(r).collapse_vars("x");
                cwl::LaurentPoly viaz = cwl::to_z_polynomial(diag) *
                                        cwl::LaurentPoly::monomial1("z", 1, 1);
                ok = results[i] == viaz;
            } else {
                ok = r <= 16 ? results[i] == cwl::omega_Mr_oracle(r)
                             : results[i].eval_ones() == 1;
            }
            if (!ok) {
                std::cerr << "verification mismatch at r = " << r << "\n";
                return kExitVerify;
            }
        }
    }

    std::ostringstream out;
    if (opt.format == "json") {
        cwl::json j;
        j["command"] = "conway";
        j["which"] = opt.which;
        j["verified"] = opt.verify;
        cwl::json arr = cwl::json::array();
        for (std::size_t i = 0; i < rs.size(); ++i)
            arr.push_back({{"r", rs[i]}, {"poly", cwl::to_json(results[i])}});
        j["results"] = std::move(arr);
        out << j.dump() << "\n";
    } else if (opt.format == "csv") {
        if (opt.which == "omega") throw cwl::usage_error("csv output needs a univariate family");
        if (rs.size() == 1) {
            out << cwl::to_csv(results[0]);
        } else {
            std::vector<std::pair<std::int64_t, cwl::LaurentPoly>> fam;
            for (std::size_t i = 0; i < rs.size(); ++i) fam.emplace_back(rs[i], results[i]);
            out << cwl::family_csv(fam);
        }
    } else {
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const char* name = opt.which == "J" ? "nabla_J" : opt.which == "M" ? "nabla_M" : "Omega_M";
            out << name << "(" << rs[i] << ") = " << results[i].str() << "\n";
        }
        if (opt.verify) out << "verify: ok\n";
    }
    write_output(out.str(), opt.output);
    return kExitOk;
}

struct CertifyOptions {
    std::string variant = "growth1";
    std::string r_list;
    int M = -1;
    int N = -1;
    int order = 0;
    std::string demo;
    std::string output;
};

int run_certify(const CertifyOptions& opt) {
    std::ostringstream out;
    if (!opt.demo.empty()) {
        const int order = opt.order > 0 ? opt.order : 16;
        if (opt.demo == "rational-product") {
            cwl::CounterexampleResult r = cwl::counterexample_product(order);
            auto fit = cwl::fit_rational(r.series, {0, 1});
            if (!fit || *fit != r.fit) {
                std::cerr << "verification mismatch: product demo did not fit 2/(1-x)\n";
                return kExitVerify;
            }
            out << "product counterexample at order " << order << ": fit " << fit->str() << "\n";
        } else if (opt.demo == "mobius-sum") {
            cwl::MobiusCounterexample m = cwl::counterexample_mobius_sum(order);
            auto fit = cwl::fit_rational(m.series, {1, 1});
            if (!fit || *fit != m.fit) {
                std::cerr << "verification mismatch: mobius demo did not fit 2x/(1-2x)\n";
                return kExitVerify;
            }
            out << "mobius counterexample at order " << order << ": fit " << fit->str() << "\n";
        } else {
            throw cwl::usage_error("unknown demo '" + opt.demo + "'");
        }
        write_output(out.str(), opt.output);
        return kExitOk;
    }

    if (opt.r_list.empty() || opt.M < 0 || opt.N < 0)
        throw cwl::usage_error("certify needs --r, --M, --N (or --demo)");
    const cwl::GrowthVariant variant = opt.variant == "growth1" ? cwl::GrowthVariant::growth1
                                       : opt.variant == "growth2"
                                           ? cwl::GrowthVariant::growth2
                                           : throw cwl::usage_error("unknown variant '" +
                                                                    opt.variant + "'");
    std::vector<std::int64_t> rs = parse_r_list(opt.r_list);
    cwl::Schedule sched{variant, {}};
    for (std::int64_t r : rs) sched.r.emplace_back(r);
    cwl::ScheduleReport rep = cwl::schedule_validate(sched);
    if (!rep.ok)
        throw cwl::usage_error("invalid schedule at index " +
                               std::to_string(rep.first_violation) + ": " + rep.reason);

    std::vector<cwl::StageData> stages;
    for (std::int64_t r : rs) stages.push_back(cwl::make_stage(variant, r));
    int order = std::max(2 * opt.M, opt.N * opt.N) + 1;
    for (const auto& st : stages)
        order = std::max(order, static_cast<int>(st.P.low_degree()));
    if (opt.order > 0) order = opt.order;

    cwl::TruncatedSeries series = variant == cwl::GrowthVariant::growth1
                                      ? cwl::accumulate_product(stages, order)
                                      : cwl::accumulate_sum(stages, order);
    cwl::FitCertificate cert = cwl::certify_no_fit(series, {opt.M, opt.N});
    cwl::json j = cwl::to_json(cert);
    j["variant"] = cwl::variant_name(variant);
    j["schedule"] = cwl::json::array();
    for (const auto& r : sched.r) j["schedule"].push_back(r.get_str());
    write_output(j.dump(2) + "\n", opt.output);
    return cert.fit_found ? kExitVerify : kExitOk;
}

struct GroupOptions {
    std::string demo;
    std::int64_t bound = 3;
};

int run_group(const GroupOptions& opt) {
    std::ostringstream out;
    if (opt.demo == "heis-conj") {
        cwl::ConjugacyVerdict v = cwl::conj_t_vs_txy(opt.bound);
        cwl::AbelianizationCheck abel = cwl::abelianization_check();
        out << "t and txy " << (v.conjugate ? "conjugate" : "not conjugate")
            << "; inconsistent system " << v.witness << "\n";
        out << "exhaustive search bound " << v.searched_bound << ": no conjugator found\n";
        out << "abelianization: det(phibar) = " << abel.det_phibar
            << ", det(phibar - id) = " << abel.det_phibar_minus_id
            << ", order(phibar) = " << abel.order_of_phibar << "\n";
        if (v.conjugate || !abel.ok) {
            std::cerr << out.str();
            return kExitVerify;
        }
    } else if (opt.demo == "trefoil-meridian") {
        cwl::MeridianVerdict v = cwl::trefoil_meridian_test();
        out << "x^2y^-1 -> " << v.candidate.str() << " (alternation "
            << v.alternation_candidate << ")\n";
        out << "meridian x -> " << v.meridian.str() << " (alternation "
            << v.alternation_meridian << ")\n";
        out << "alternation " << v.alternation_candidate << " vs " << v.alternation_meridian
            << " => " << (v.conjugate ? "conjugate" : "not conjugate") << "\n";
        if (v.conjugate) {
            std::cerr << out.str();
            return kExitVerify;
        }
    } else {
        throw cwl::usage_error("unknown demo '" + opt.demo + "'");
    }
    std::cout << out.str();
    return kExitOk;
}

struct ModuleOptions {
    std::string action;
    std::string delta;
    int free_rank = -1;
    std::string input;
    std::string output;
};

int run_module(const ModuleOptions& opt) {
    std::ostringstream out;
    if (opt.action == "reduce") {
        cwl::WildReduction red = cwl::presentation_reduce_wild();
        for (const auto& line : red.log) out << line << "\n";
        out << "single relator: " << red.relator.str() << "\n";
    } else if (opt.action == "companion") {
        cwl::CompanionAction c = cwl::wild_module_companion();
        out << "s-action on (x0, x1):\n";
        out << "  [ " << c.action[0][0].str() << " , " << c.action[0][1].str() << " ]\n";
        out << "  [ " << c.action[1][0].str() << " , " << c.action[1][1].str() << " ]\n";
        out << "determinant: " << c.determinant.str()
            << (c.determinant.is_unit() ? " (unit)" : " (NOT a unit)") << "\n";
        std::array<cwl::LocalizedLaurent, 2> e0{cwl::LocalizedLaurent::constant(1),
                                                cwl::LocalizedLaurent()};
        auto round = c.apply_inverse(c.apply(e0));
        const bool id_ok = round[0] == e0[0] && round[1] == e0[1];
        out << "action o inverse = id: " << (id_ok ? "ok" : "FAIL") << "\n";
        if (!c.determinant.is_unit() || !id_ok) {
            std::cerr << out.str();
            return kExitVerify;
        }
    } else if (opt.action == "torsion") {
        cwl::ModulePresentation pres;
        if (!opt.delta.empty()) {
            cwl::LaurentPoly d = cwl::parse_poly(opt.delta).with_vars({"t"});
            pres = cwl::ModulePresentation{cwl::RingTag::ZT, {"a"}, {{d}}};
            out << "cyclic presentation <a | (" << d.str() << ") a>\n";
            out << "torsion: " << (cwl::torsion_decide(pres) ? "true" : "false") << "\n";
            out << "(1-t) invertible (Delta(1) = +-1): "
                << (cwl::one_minus_t_invertible(d) ? "true" : "false") << "\n";
        } else if (opt.free_rank >= 0) {
            for (int g = 0; g < opt.free_rank; ++g) pres.gens.push_back("g" + std::to_string(g));
            out << "free presentation of rank " << opt.free_rank << "\n";
            out << "torsion: " << (cwl::torsion_decide(pres) ? "true" : "false") << "\n";
        } else if (!opt.input.empty()) {
            std::ifstream in(opt.input);
            if (!in) throw cwl::usage_error("cannot open input file: " + opt.input);
            cwl::json j;
            try {
                in >> j;
            } catch (const std::exception& e) {
                throw cwl::usage_error(std::string("malformed JSON: ") + e.what());
            }
            pres = cwl::presentation_from_json(j);
            if (pres.ring == cwl::RingTag::ZST)
                throw cwl::usage_error("torsion decision needs a one-variable ring");
            out << "presentation with " << pres.gens.size() << " generators, "
                << pres.rels.size() << " relations\n";
            out << "torsion: " << (cwl::torsion_decide(pres) ? "true" : "false") << "\n";
        } else {
            throw cwl::usage_error("torsion needs --delta, --free or --input");
        }
    } else {
        throw cwl::usage_error("unknown action '" + opt.action + "'");
    }
    write_output(out.str(), opt.output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Conway-potential calculus for the fake Mazur link family"};
    app.require_subcommand(1);

    ConwayOptions conway;
    CLI::App* cmd_conway = app.add_subcommand("conway", "family polynomials nabla_J, nabla_M, Omega_M");
    cmd_conway->add_option("--which", conway.which, "J | M | omega")
        ->check(CLI::IsMember({"J", "M", "omega"}));
    cmd_conway->add_option("--r", conway.r, "cover degree r >= 1");
    cmd_conway->add_option("--r-list", conway.r_list, "comma-separated list of r values");
    cmd_conway->add_flag("--verify", conway.verify, "run the independent oracle cross-check");
    cmd_conway->add_option("--format", conway.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd_conway->add_option("--output", conway.output, "write to file instead of stdout");
    cmd_conway->add_option("--jobs", conway.jobs, "parallelize independent r values");

    CertifyOptions certify;
    CLI::App* cmd_certify = app.add_subcommand("certify", "rationality certificates");
    cmd_certify->add_option("--variant", certify.variant, "growth1 | growth2");
    cmd_certify->add_option("--r", certify.r_list, "schedule r1,r2,...");
    cmd_certify->add_option("--M", certify.M, "numerator degree bound");
    cmd_certify->add_option("--N", certify.N, "denominator degree bound");
    cmd_certify->add_option("--order", certify.order, "truncation order override");
    cmd_certify->add_option("--demo", certify.demo, "rational-product | mobius-sum");
    cmd_certify->add_option("--output", certify.output, "write certificate to file");

    GroupOptions group;
    CLI::App* cmd_group = app.add_subcommand("group", "conjugacy demos");
    cmd_group->add_option("--demo", group.demo, "heis-conj | trefoil-meridian")->required();
    cmd_group->add_option("--bound", group.bound, "exhaustive search bound");

    ModuleOptions module;
    CLI::App* cmd_module = app.add_subcommand("module", "knot-module reports");
    cmd_module->add_option("--action", module.action, "reduce | torsion | companion")->required();
    cmd_module->add_option("--delta", module.delta, "cyclic relator polynomial, e.g. \"t^2-t+1\"");
    cmd_module->add_option("--free", module.free_rank, "free presentation of the given rank");
    cmd_module->add_option("--input", module.input, "presentation JSON file");
    cmd_module->add_option("--output", module.output, "write report to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_conway->parsed()) return run_conway(conway);
        if (cmd_certify->parsed()) return run_certify(certify);
        if (cmd_group->parsed()) return run_group(group);
        if (cmd_module->parsed()) return run_module(module);
    } catch (const cwl::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cwl::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource limit: out of memory\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "internal error (library defect): " << e.what() << "\n";
        return kExitVerify;
    }
    return kExitUsage;
}
