#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flatrank/families.hpp"
#include "flatrank/flattening.hpp"
#include "flatrank/koszul.hpp"
#include "flatrank/lgv.hpp"
#include "flatrank/poly_json.hpp"
#include "flatrank/verify.hpp"

using nlohmann::json;
using namespace flatrank;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 42;
    int primes = 2;
    std::size_t cap = 0;  // 0 keeps the per-module defaults
    std::string format = "json";
    std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(g.out);
        if (!f) throw Error("cannot open output file: " + g.out);
        f << text << "\n";
    }
}

FamilyOptions family_opts(const GlobalOpts& g) {
    FamilyOptions o;
    if (g.cap) o.term_cap = g.cap;
    return o;
}

FlatteningOptions flattening_opts(const GlobalOpts& g) {
    FlatteningOptions o;
    if (g.cap) o.dim_cap = g.cap;
    o.rank.prime_count = g.primes;
    o.rank.seed = g.seed;
    return o;
}

json rank_report_json(const RankReport& r) {
    return json{{"rows", r.rows},
                {"cols", r.cols},
                {"rank", r.rank},
                {"certainty", to_string(r.certainty)},
                {"primes", r.primes},
                {"method", r.method}};
}

json config_json(const GlobalOpts& g) {
    return json{{"seed", g.seed}, {"primes", g.primes}};
}

struct FamilyParams {
    std::string name;
    int n = 0, d = 0, k = 0, m = 0;
    int bound = 100;
};

struct FamilySpec {
    std::string name;
    std::vector<std::string> params;
    std::string description;
};

const std::vector<FamilySpec>& family_registry() {
    static const std::vector<FamilySpec> reg = {
        {"power", {"n", "d"}, "power sum x1^d + ... + xn^d"},
        {"h", {"n", "d"}, "complete symmetric polynomial"},
        {"e", {"n", "d"}, "elementary symmetric polynomial"},
        {"f", {"n", "k"}, "(x1^2+...+xn^2)^k"},
        {"ftilde", {"n", "k"}, "(x1+...+xn)(x1^2+...+xn^2)^k"},
        {"bierman", {"n", "d"}, "sum of (alpha.x)^d over |alpha| = d"},
        {"perm", {"m"}, "permanent of an m x m variable matrix"},
        {"det", {"m"}, "determinant of an m x m variable matrix"},
        {"imm", {"n", "d"}, "trace(X_1...X_d), n x n slots"},
        {"pow", {"n", "d"}, "trace(X^d), X an n x n variable matrix"},
        {"generic", {"n", "d"}, "random integer coefficients (seeded, |c| <= bound)"},
    };
    return reg;
}

RatPoly make_family(const FamilyParams& fp, const GlobalOpts& g) {
    auto fam = family_opts(g);
    if (fp.name == "power") return power_sum(fp.n, fp.d);
    if (fp.name == "h") return complete_symmetric(fp.n, fp.d, fam);
    if (fp.name == "e") return elementary_symmetric(fp.n, fp.d, fam);
    if (fp.name == "f") return f_family(fp.n, fp.k, fam);
    if (fp.name == "ftilde") return ftilde_family(fp.n, fp.k, fam);
    if (fp.name == "bierman") return bierman(fp.n, fp.d, fam);
    if (fp.name == "perm") return permanent(fp.m, fam);
    if (fp.name == "det") return determinant(fp.m, fam);
    if (fp.name == "imm") return imm(fp.n, fp.d, fam);
    if (fp.name == "pow") return pow_trace(fp.n, fp.d, fam);
    if (fp.name == "generic") return random_poly(fp.n, fp.d, g.seed, fp.bound, fam);
    throw PreconditionViolation("unknown family: " + fp.name + " (see `family --list`)");
}

json family_params_json(const FamilyParams& fp, const GlobalOpts& g) {
    json j{{"family", fp.name}};
    for (const auto& spec : family_registry())
        if (spec.name == fp.name) {
            for (const auto& p : spec.params) {
                if (p == "n") j["n"] = fp.n;
                if (p == "d") j["d"] = fp.d;
                if (p == "k") j["k"] = fp.k;
                if (p == "m") j["m"] = fp.m;
            }
        }
    if (fp.name == "generic") {
        j["bound"] = fp.bound;
        j["seed"] = g.seed;
    }
    return j;
}

void add_family_options(CLI::App* sub, FamilyParams& fp, bool require_name = true) {
    auto* nameopt = sub->add_option("--family,--name", fp.name, "family name (see `family --list`)");
    if (require_name) nameopt->required();
    sub->add_option("--n", fp.n, "number of variables");
    sub->add_option("--d", fp.d, "degree");
    sub->add_option("--k", fp.k, "power parameter");
    sub->add_option("--m", fp.m, "matrix size");
    sub->add_option("--bound", fp.bound, "coefficient bound for generic family");
}

int range_lo(const std::string& r) {
    auto colon = r.find(':');
    return std::stoi(colon == std::string::npos ? r : r.substr(0, colon));
}

int range_hi(const std::string& r) {
    auto colon = r.find(':');
    return std::stoi(colon == std::string::npos ? r : r.substr(colon + 1));
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int run_verify(const GlobalOpts& g, const std::string& suite) {
    VerifyOptions vo;
    vo.seed = g.seed;
    vo.prime_count = g.primes;
    if (g.cap) {
        vo.term_cap = g.cap;
        vo.dim_cap = g.cap;
    }
    auto results = verify_suite(suite, vo);
    int failed = 0, skipped = 0;
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"name", r.name},
                               {"pass", r.pass},
                               {"skipped", r.skipped},
                               {"detail", r.detail}});
            if (r.skipped)
                ++skipped;
            else if (!r.pass)
                ++failed;
        }
        json outj{{"suite", suite},
                  {"config", config_json(g)},
                  {"results", arr},
                  {"failed", failed},
                  {"skipped", skipped},
                  {"total", results.size()}};
        emit(g, outj.dump(2));
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            const char* tag = r.skipped ? "[SKIP]" : (r.pass ? "[PASS]" : "[FAIL]");
            if (r.skipped)
                ++skipped;
            else if (!r.pass)
                ++failed;
            os << tag << ' ' << r.name;
            if (!r.detail.empty()) os << "  (" << r.detail << ")";
            os << '\n';
        }
        os << (failed ? "FAILED" : "OK") << ": " << results.size() << " checks, " << failed
           << " failed, " << skipped << " skipped";
        emit(g, os.str());
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact flattening, shifted-partial and Koszul rank toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for primes and random inputs");
    app.add_option("--primes", g.primes, "number of primes for modular certification");
    app.add_option("--cap", g.cap, "override size caps (terms / target dimension)");
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "write output to this file instead of stdout");

    int exit_code = 0;

    // family
    {
        auto* sub = app.add_subcommand("family", "emit a polynomial family as JSON");
        sub->fallthrough();
        auto fp = std::make_shared<FamilyParams>();
        auto list = std::make_shared<bool>(false);
        add_family_options(sub, *fp, false);
        sub->add_flag("--list", *list, "list family names and parameter schemas");
        sub->callback([&, fp, list] {
            if (*list) {
                json arr = json::array();
                for (const auto& spec : family_registry())
                    arr.push_back(json{{"name", spec.name},
                                       {"params", spec.params},
                                       {"description", spec.description}});
                emit(g, arr.dump(2));
                return;
            }
            if (fp->name.empty())
                throw PreconditionViolation("either --name or --list is required");
            json j = poly_to_json(make_family(*fp, g));
            j["params"] = family_params_json(*fp, g);
            emit(g, j.dump(2));
        });
    }

    // catalecticant
    {
        auto* sub = app.add_subcommand("catalecticant", "partial-derivative map rank");
        sub->fallthrough();
        auto fp = std::make_shared<FamilyParams>();
        auto e = std::make_shared<int>(0);
        add_family_options(sub, *fp);
        sub->add_option("--e", *e, "derivative order")->required();
        sub->callback([&, fp, e] {
            RatPoly p = make_family(*fp, g);
            auto fo = flattening_opts(g);
            CatalecticantMatrix cm = catalecticant(p, *e, fo);
            RankReport rep = compute_rank(cm.mat, fo.rank);
            Int full = full_flattening_rank(p.vars(), p.degree(), *e);
            json params = family_params_json(*fp, g);
            params["e"] = *e;
            json j{{"command", "catalecticant"},
                   {"params", params},
                   {"config", config_json(g)},
                   {"rows", cm.mat.rows()},
                   {"cols", cm.mat.cols()},
                   {"rank", rep.rank},
                   {"full_rank", Int(rep.rank) == full},
                   {"method", rep.method},
                   {"rank_report", rank_report_json(rep)}};
            emit(g, j.dump(2));
        });
    }

    // shifted
    {
        auto* sub = app.add_subcommand("shifted", "shifted partial derivative dimension");
        sub->fallthrough();
        auto fp = std::make_shared<FamilyParams>();
        auto e = std::make_shared<int>(0);
        auto tau = std::make_shared<int>(0);
        add_family_options(sub, *fp);
        sub->add_option("--e", *e, "derivative order")->required();
        sub->add_option("--tau", *tau, "shift degree")->required();
        sub->callback([&, fp, e, tau] {
            RatPoly p = make_family(*fp, g);
            ShiftedOptions so;
            if (g.cap) so.dim_cap = g.cap;
            so.seed = g.seed;
            auto sp = shifted_partials_dim(p, *e, *tau, so);
            json params = family_params_json(*fp, g);
            params["e"] = *e;
            params["tau"] = *tau;
            json j{{"command", "shifted"},
                   {"params", params},
                   {"config", config_json(g)},
                   {"dim", sp.dim},
                   {"generators", sp.generator_count},
                   {"duplicates_skipped", sp.duplicates_skipped},
                   {"certainty", to_string(sp.certainty)},
                   {"method", sp.method}};
            emit(g, j.dump(2));
        });
    }

    // koszul
    {
        auto* sub = app.add_subcommand("koszul", "Koszul flattening rank and border-rank bound");
        sub->fallthrough();
        auto fp = std::make_shared<FamilyParams>();
        auto q = std::make_shared<int>(1);
        auto s = std::make_shared<int>(-1);
        auto check_skew = std::make_shared<bool>(false);
        add_family_options(sub, *fp);
        sub->add_option("--q", *q, "exterior power")->required();
        sub->add_option("--s", *s, "derivative order (default: k for odd degree)");
        sub->add_flag("--check-skew", *check_skew, "also test volume-form skew symmetry");
        sub->callback([&, fp, q, s, check_skew] {
            RatPoly p = make_family(*fp, g);
            int d = p.degree();
            int sval = *s;
            if (sval < 0) {
                if (d % 2 == 0)
                    throw PreconditionViolation("--s is required for even degree");
                sval = (d - 1) / 2;
            }
            auto fo = flattening_opts(g);
            auto lb = koszul_border_rank_lb(p, sval, *q, fo);
            json params = family_params_json(*fp, g);
            params["q"] = *q;
            params["s"] = sval;
            json j{{"command", "koszul"},
                   {"params", params},
                   {"config", config_json(g)},
                   {"rows", lb.rank_report.rows},
                   {"cols", lb.rank_report.cols},
                   {"rank", lb.rank_report.rank},
                   {"denominator", lb.denominator.get_str()},
                   {"ratio", lb.ratio.get_str()},
                   {"border_rank_lb", lb.ceiling.get_str()},
                   {"rank_report", rank_report_json(lb.rank_report)}};
            if (d % 2 == 1 && sval == (d - 1) / 2)
                j["apriori"] = apriori_bound(p.vars(), sval, *q).get_str();
            else
                j["apriori"] = nullptr;
            if (*check_skew) {
                if (p.vars() == 2 * *q + 1 && *q % 2 == 1 && d % 2 == 1 && sval == (d - 1) / 2)
                    j["skew"] = skew_symmetry_check(p, *q, fo);
                else
                    j["skew"] = nullptr;
            }
            emit(g, j.dump(2));
        });
    }

    // lgv
    {
        auto* sub = app.add_subcommand("lgv", "Gessel-Viennot binomial matrix rank");
        sub->fallthrough();
        auto tuples_str = std::make_shared<std::string>();
        sub->add_option("--tuples", *tuples_str, "JSON list of integer tuples, e.g. [[0],[1],[2]]")
            ->required();
        sub->callback([&, tuples_str] {
            auto tj = json::parse(*tuples_str);
            std::vector<std::vector<long>> tuples = tj.get<std::vector<std::vector<long>>>();
            GVMatrix gv = gv_matrix(tuples);
            RankReport rep = rank_exact_rational(gv.mat);
            json j{{"command", "lgv"},
                   {"config", config_json(g)},
                   {"rank", rep.rank},
                   {"distinct", distinct_tuple_count(tuples)},
                   {"definite", is_positive_definite(gv.mat)},
                   {"rank_report", rank_report_json(rep)}};
            emit(g, j.dump(2));
        });
    }

    // verify
    {
        auto* sub = app.add_subcommand("verify", "run a named assertion suite");
        sub->fallthrough();
        auto suite = std::make_shared<std::string>("all");
        sub->add_option("--suite", *suite,
                        "flattenings | specializations | lgv | koszul | all")
            ->check(CLI::IsMember({"flattenings", "specializations", "lgv", "koszul", "shifted",
                                   "nestimate", "structural", "all"}));
        sub->callback([&, suite] { exit_code = run_verify(g, *suite); });
    }

    // sweep
    {
        auto* sub = app.add_subcommand("sweep", "tabulate ranks against bounds over a grid");
        sub->fallthrough();
        auto kind = std::make_shared<std::string>();
        auto fp = std::make_shared<FamilyParams>();
        auto nr = std::make_shared<std::string>("");
        auto dr = std::make_shared<std::string>("");
        auto kr = std::make_shared<std::string>("");
        auto mr = std::make_shared<std::string>("");
        auto er = std::make_shared<std::string>("");
        auto taur = std::make_shared<std::string>("");
        auto q = std::make_shared<int>(1);
        sub->add_option("--kind", *kind, "catalecticant | koszul | shifted")
            ->required()
            ->check(CLI::IsMember({"catalecticant", "koszul", "shifted"}));
        add_family_options(sub, *fp);
        sub->add_option("--n-range", *nr, "lo:hi");
        sub->add_option("--d-range", *dr, "lo:hi");
        sub->add_option("--k-range", *kr, "lo:hi");
        sub->add_option("--m-range", *mr, "lo:hi");
        sub->add_option("--e-range", *er, "lo:hi");
        sub->add_option("--tau-range", *taur, "lo:hi");
        sub->add_option("--q", *q, "exterior power for koszul sweeps");
        sub->callback([&, kind, fp, nr, dr, kr, mr, er, taur, q] {
            struct Row {
                json obj;
                std::vector<std::string> csv;
            };
            std::vector<std::future<Row>> jobs;
            auto fo = flattening_opts(g);
            std::vector<std::string> header;

            if (*kind == "catalecticant") {
                header = {"family", "n", "d", "e", "rows", "cols", "rank", "bound",
                          "full_rank", "certainty"};
                if (nr->empty() || dr->empty())
                    throw PreconditionViolation("catalecticant sweep needs --n-range and --d-range");
                for (int n = range_lo(*nr); n <= range_hi(*nr); ++n)
                    for (int d = range_lo(*dr); d <= range_hi(*dr); ++d) {
                        FamilyParams c = *fp;
                        c.n = n;
                        c.d = d;
                        c.k = d;  // for f/ftilde driven by k
                        int elo = er->empty() ? 0 : range_lo(*er);
                        int ehi = er->empty() ? d : range_hi(*er);
                        for (int e = elo; e <= ehi && e <= d; ++e)
                            jobs.push_back(std::async(std::launch::async, [c, e, &g, fo] {
                                RatPoly p = make_family(c, g);
                                auto cm = catalecticant(p, e, fo);
                                auto rep = compute_rank(cm.mat, fo.rank);
                                Int bound = full_flattening_rank(p.vars(), p.degree(), e);
                                Row r;
                                r.obj = json{{"family", c.name}, {"n", c.n}, {"d", p.degree()},
                                             {"e", e}, {"rows", cm.mat.rows()},
                                             {"cols", cm.mat.cols()}, {"rank", rep.rank},
                                             {"bound", bound.get_str()},
                                             {"full_rank", Int(rep.rank) == bound},
                                             {"certainty", to_string(rep.certainty)}};
                                r.csv = {c.name, std::to_string(c.n), std::to_string(p.degree()),
                                         std::to_string(e), std::to_string(cm.mat.rows()),
                                         std::to_string(cm.mat.cols()), std::to_string(rep.rank),
                                         bound.get_str(),
                                         Int(rep.rank) == bound ? "true" : "false",
                                         to_string(rep.certainty)};
                                return r;
                            }));
                    }
            } else if (*kind == "koszul") {
                header = {"family", "n", "k", "q", "s", "rows", "cols", "rank", "apriori",
                          "rank_equals_apriori", "certainty"};
                if (nr->empty() || kr->empty())
                    throw PreconditionViolation("koszul sweep needs --n-range and --k-range");
                for (int n = range_lo(*nr); n <= range_hi(*nr); ++n)
                    for (int k = range_lo(*kr); k <= range_hi(*kr); ++k) {
                        FamilyParams c = *fp;
                        c.n = n;
                        c.k = k;
                        c.d = 2 * k + 1;
                        int qv = *q;
                        jobs.push_back(std::async(std::launch::async, [c, qv, &g, fo] {
                            RatPoly p = make_family(c, g);
                            int k2 = (p.degree() - 1) / 2;
                            auto km = koszul_matrix(p, k2, qv, fo);
                            auto rep = compute_rank(km.mat, fo.rank);
                            Int ap = apriori_bound(p.vars(), k2, qv);
                            Row r;
                            r.obj = json{{"family", c.name}, {"n", c.n}, {"k", k2}, {"q", qv},
                                         {"s", k2}, {"rows", km.mat.rows()},
                                         {"cols", km.mat.cols()}, {"rank", rep.rank},
                                         {"apriori", ap.get_str()},
                                         {"rank_equals_apriori", Int(rep.rank) == ap},
                                         {"certainty", to_string(rep.certainty)}};
                            r.csv = {c.name, std::to_string(c.n), std::to_string(k2),
                                     std::to_string(qv), std::to_string(k2),
                                     std::to_string(km.mat.rows()), std::to_string(km.mat.cols()),
                                     std::to_string(rep.rank), ap.get_str(),
                                     Int(rep.rank) == ap ? "true" : "false",
                                     to_string(rep.certainty)};
                            return r;
                        }));
                    }
            } else {  // shifted
                header = {"family", "m", "n", "e", "tau", "dim", "generators", "certainty"};
                if (mr->empty() && nr->empty())
                    throw PreconditionViolation("shifted sweep needs --m-range or --n-range");
                int mlo = mr->empty() ? range_lo(*nr) : range_lo(*mr);
                int mhi = mr->empty() ? range_hi(*nr) : range_hi(*mr);
                bool use_m = !mr->empty();
                int elo = er->empty() ? 1 : range_lo(*er);
                int ehi = er->empty() ? 1 : range_hi(*er);
                int tlo = taur->empty() ? 0 : range_lo(*taur);
                int thi = taur->empty() ? 0 : range_hi(*taur);
                for (int v = mlo; v <= mhi; ++v)
                    for (int e = elo; e <= ehi; ++e)
                        for (int tau = tlo; tau <= thi; ++tau) {
                            FamilyParams c = *fp;
                            if (use_m)
                                c.m = v;
                            else
                                c.n = v;
                            jobs.push_back(std::async(std::launch::async, [c, e, tau, &g] {
                                RatPoly p = make_family(c, g);
                                ShiftedOptions so;
                                if (g.cap) so.dim_cap = g.cap;
                                so.seed = g.seed;
                                auto sp = shifted_partials_dim(p, e, tau, so);
                                Row r;
                                r.obj = json{{"family", c.name}, {"m", c.m}, {"n", p.vars()},
                                             {"e", e}, {"tau", tau}, {"dim", sp.dim},
                                             {"generators", sp.generator_count},
                                             {"certainty", to_string(sp.certainty)}};
                                r.csv = {c.name, std::to_string(c.m), std::to_string(p.vars()),
                                         std::to_string(e), std::to_string(tau),
                                         std::to_string(sp.dim),
                                         std::to_string(sp.generator_count),
                                         to_string(sp.certainty)};
                                return r;
                            }));
                        }
            }

            std::vector<Row> rows;
            rows.reserve(jobs.size());
            for (auto& jfut : jobs) rows.push_back(jfut.get());

            if (g.format == "csv") {
                std::ostringstream os;
                os << "# schema=flatrank.sweep.v1 kind=" << *kind << " seed=" << g.seed
                   << " primes=" << g.primes << "\n";
                for (std::size_t i = 0; i < header.size(); ++i)
                    os << (i ? "," : "") << header[i];
                for (const auto& r : rows) {
                    os << "\n";
                    for (std::size_t i = 0; i < r.csv.size(); ++i)
                        os << (i ? "," : "") << csv_escape(r.csv[i]);
                }
                emit(g, os.str());
            } else {
                json arr = json::array();
                for (const auto& r : rows) arr.push_back(r.obj);
                json j{{"command", "sweep"},
                       {"kind", *kind},
                       {"config", config_json(g)},
                       {"rows", arr}};
                emit(g, j.dump(2));
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
