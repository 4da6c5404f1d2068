#include "chowlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "chowlab/json_io.hpp"
#include "chowlab/verify.hpp"

namespace chowlab {

namespace {

struct MatroidOpt {
    int boolean_n = 0;
    std::vector<int> uniform; // r n
    std::string file;
    std::string inline_json;

    void attach(CLI::App* cmd) {
        cmd->add_option("--boolean", boolean_n, "boolean matroid B_n");
        cmd->add_option("--uniform", uniform, "uniform matroid U_{r,n}")->expected(2);
        cmd->add_option("--file", file, "matroid JSON file");
        cmd->add_option("--json", inline_json, "inline matroid JSON");
    }

    Matroid get() const {
        int given = (boolean_n > 0) + !uniform.empty() + !file.empty() + !inline_json.empty();
        if (given != 1)
            throw ArgumentError("exactly one of --boolean/--uniform/--file/--json is required");
        if (boolean_n > 0) return boolean_matroid(boolean_n);
        if (!uniform.empty()) return uniform_matroid(uniform[0], uniform[1]);
        nlohmann::json j;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw ArgumentError("cannot open matroid file " + file);
            in >> j;
        } else {
            j = nlohmann::json::parse(inline_json);
        }
        return matroid_from_json(j);
    }

    std::string display() const {
        if (boolean_n > 0) return "B_" + std::to_string(boolean_n);
        if (!uniform.empty())
            return "U_{" + std::to_string(uniform[0]) + "," + std::to_string(uniform[1]) + "}";
        if (!file.empty()) return file;
        return "(inline)";
    }
};

std::string csv_coeffs(const IntPolynomial& p) {
    std::string s;
    for (const auto& c : p.coeffs()) {
        if (!s.empty()) s += " ";
        s += c.get_str();
    }
    return s.empty() ? "0" : s;
}

void print_poly(std::ostream& out, const std::string& format, const std::string& label,
                const IntPolynomial& p) {
    if (format == "json") {
        nlohmann::json j{{"matroid", label}, {"coeffs", poly_to_json(p)}};
        out << j.dump() << "\n";
    } else if (format == "csv") {
        out << csv_coeffs(p) << "\n";
    } else {
        out << p.str() << "\n";
    }
}

IntPolynomial chow_poly_of(const Matroid& m) {
    FlatLattice L = lattice_of_flats(m);
    return chow_function(characteristic(L.poset)).at(L.bottom(), L.top());
}

IntPolynomial aug_chow_poly_of(const Matroid& m) {
    FlatLattice L = lattice_of_flats(m);
    return aug_chow_left(characteristic(L.poset)).at(L.bottom(), L.top());
}

int emit_reports(std::ostream& out, const std::string& format,
                 const std::vector<VerificationReport>& reports) {
    int failed = 0;
    for (const auto& r : reports) {
        if (!r.pass) ++failed;
        if (format == "json") {
            out << report_to_json(r).dump() << "\n";
        } else if (format == "csv") {
            out << r.name << "," << r.instance << "," << (r.pass ? "pass" : "FAIL") << "\n";
        } else {
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " " << r.instance;
            if (!r.pass) out << "  lhs=" << r.lhs << "  rhs=" << r.rhs;
            out << "\n";
        }
    }
    if (format == "pretty")
        out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) FAILED")
            << " (" << reports.size() << " run)\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chowlab: Chow functions, KLS functions and Chow-ring models of matroids"};
    app.require_subcommand(1);
    std::string format = "pretty";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    // matroid info
    auto* matroid_cmd = app.add_subcommand("matroid", "matroid utilities");
    matroid_cmd->require_subcommand(1);
    auto* info_cmd = matroid_cmd->add_subcommand("info", "summarize a matroid");
    MatroidOpt info_opt;
    info_opt.attach(info_cmd);

    // polynomials
    auto* chow_cmd = app.add_subcommand("chow-poly", "Chow polynomial H of a matroid");
    MatroidOpt chow_opt;
    chow_opt.attach(chow_cmd);
    bool chow_via_model = false;
    chow_cmd->add_flag("--via-model", chow_via_model,
                       "compute through the explicit graded ring model");

    auto* aug_cmd = app.add_subcommand("aug-chow-poly", "augmented Chow polynomial G");
    MatroidOpt aug_opt;
    aug_opt.attach(aug_cmd);
    bool aug_via_model = false;
    aug_cmd->add_flag("--via-model", aug_via_model,
                      "compute through the explicit graded ring model");

    auto* kls_cmd = app.add_subcommand("kls", "Kazhdan-Lusztig polynomial of a matroid");
    MatroidOpt kls_opt;
    kls_opt.attach(kls_cmd);
    bool kls_left_flag = false;
    kls_cmd->add_flag("--left", kls_left_flag, "left KLS function instead of the right one");
    std::string kls_poset_file;
    kls_cmd->add_option("--poset", kls_poset_file,
                        "weakly ranked poset JSON (uses its characteristic kernel)");

    auto* euler_cmd = app.add_subcommand("euler", "Eulerian polynomials A_1..A_N");
    int euler_max = 0;
    euler_cmd->add_option("--max", euler_max, "largest n")->required();

    auto* verify_cmd = app.add_subcommand("verify", "machine verification suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember({"thm1", "thm2", "aug", "corirred", "euler", "coloop", "explicit",
                               "all"}));
    std::string corpus_arg = "default";
    verify_cmd->add_option("--corpus", corpus_arg, "default, or a JSON file with matroids");
    SuiteOptions opts;
    verify_cmd->add_option("--hilbert-bound", opts.hilbert_rank_bound,
                           "rank-sum bound for Hilbert identities");
    verify_cmd->add_option("--explicit-bound", opts.explicit_rank_bound,
                           "rank-sum bound for explicit-map checks");

    std::vector<std::string> argv_copy = args;
    std::vector<char*> argv;
    argv.reserve(argv_copy.size());
    std::string prog = "chowlab";
    argv.push_back(prog.data());
    for (auto& a : argv_copy) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*info_cmd) {
            Matroid m = info_opt.get();
            std::vector<int> by_rank(m.rank() + 1, 0);
            for (int r : m.flat_rank) ++by_rank[r];
            std::vector<int> coloops;
            for (int i = 0; i < m.ground; ++i)
                if (is_coloop(m, i)) coloops.push_back(i);
            if (format == "json") {
                nlohmann::json j = matroid_to_json(m);
                j["flats_by_rank"] = by_rank;
                j["coloops"] = coloops;
                out << j.dump() << "\n";
            } else if (format == "csv") {
                out << m.ground << "," << m.rank() << "," << m.flat_count() << "\n";
            } else {
                out << "ground size: " << m.ground << "\n";
                out << "rank: " << m.rank() << "\n";
                out << "flats: " << m.flat_count() << " (";
                for (size_t r = 0; r < by_rank.size(); ++r)
                    out << (r ? " " : "") << by_rank[r];
                out << " by rank)\n";
                out << "coloops:";
                for (int i : coloops) out << " " << i;
                out << (coloops.empty() ? " none" : "") << "\n";
            }
            return 0;
        }
        if (*chow_cmd) {
            Matroid m = chow_opt.get();
            IntPolynomial p = chow_via_model
                                  ? hilbert(GradedRingModel::build(m, RingKind::chow))
                                  : chow_poly_of(m);
            print_poly(out, format, chow_opt.display(), p);
            return 0;
        }
        if (*aug_cmd) {
            Matroid m = aug_opt.get();
            IntPolynomial p = aug_via_model
                                  ? hilbert(GradedRingModel::build(m, RingKind::augmented))
                                  : aug_chow_poly_of(m);
            print_poly(out, format, aug_opt.display(), p);
            return 0;
        }
        if (*kls_cmd) {
            IntPolynomial p;
            std::string label;
            if (!kls_poset_file.empty()) {
                std::ifstream in(kls_poset_file);
                if (!in) throw ArgumentError("cannot open poset file " + kls_poset_file);
                nlohmann::json j;
                in >> j;
                PosetPtr poset = poset_from_json(j);
                IncidenceFunction kern = characteristic(poset);
                IncidenceFunction f = kls_left_flag ? kls_left(kern) : kls_right(kern);
                p = f.at(0, poset->size() - 1);
                label = kls_poset_file;
            } else {
                Matroid m = kls_opt.get();
                FlatLattice L = lattice_of_flats(m);
                IncidenceFunction kern = characteristic(L.poset);
                IncidenceFunction f = kls_left_flag ? kls_left(kern) : kls_right(kern);
                p = f.at(L.bottom(), L.top());
                label = kls_opt.display();
            }
            print_poly(out, format, label, p);
            return 0;
        }
        if (*euler_cmd) {
            for (int n = 1; n <= euler_max; ++n) {
                IntPolynomial a = eulerian(n);
                if (format == "json") {
                    nlohmann::json j{{"n", n}, {"coeffs", poly_to_json(a)}};
                    out << j.dump() << "\n";
                } else if (format == "csv") {
                    out << n << "," << csv_coeffs(a) << "\n";
                } else {
                    out << "A_" << n << " = " << a.str() << "\n";
                }
            }
            return 0;
        }
        if (*verify_cmd) {
            if (const char* env = std::getenv("CHOWLAB_MAX_RANK")) {
                int bound = std::atoi(env);
                if (bound > 0) {
                    opts.hilbert_rank_bound = bound;
                    opts.explicit_rank_bound = std::min(opts.explicit_rank_bound, bound);
                }
            }
            std::vector<CorpusEntry> corpus;
            if (corpus_arg == "default") {
                corpus = default_corpus();
            } else {
                std::ifstream in(corpus_arg);
                if (!in) throw ArgumentError("cannot open corpus file " + corpus_arg);
                nlohmann::json j;
                in >> j;
                if (!j.is_array()) throw ArgumentError("corpus file: expected a JSON array");
                int idx = 0;
                for (const auto& e : j)
                    corpus.push_back({"corpus[" + std::to_string(idx++) + "]",
                                      matroid_from_json(e)});
            }
            return emit_reports(out, format, run_suite(suite, corpus, opts));
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace chowlab
