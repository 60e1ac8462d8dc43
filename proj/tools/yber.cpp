// yber command-line tool. Talks to the core exclusively through the C API.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "yber.h"

namespace {

// Exit codes: 0 ok, 1 parse, 2 predicate failed, 3 precondition, 4 resource.
constexpr int kExitParse = 1;
constexpr int kExitPredicate = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

int exit_code_for(int status) {
    switch (status) {
        case YBER_OK: return 0;
        case YBER_E_PARSE: return kExitParse;
        case YBER_E_PREDICATE: return kExitPredicate;
        case YBER_E_PRECONDITION: return kExitPrecondition;
        case YBER_E_RESOURCE: return kExitResource;
        default: return kExitParse;
    }
}

[[noreturn]] void die(int status) {
    std::cerr << "yber: " << yber_last_error() << "\n";
    std::exit(exit_code_for(status));
}

void check(int status) {
    if (status != YBER_OK) die(status);
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A solution argument is a file path or a catalog name.
yber_solution* load_solution(const std::string& arg) {
    yber_solution* s = nullptr;
    if (std::filesystem::exists(arg)) {
        auto text = read_file(arg);
        if (!text) {
            std::cerr << "yber: cannot read '" << arg << "'\n";
            std::exit(kExitParse);
        }
        check(yber_solution_parse(text->c_str(), &s));
        return s;
    }
    if (yber_solution_from_catalog(arg.c_str(), &s) == YBER_OK) return s;
    std::cerr << "yber: '" << arg << "' is neither a readable file nor a catalog name\n";
    std::exit(kExitParse);
}

// A reflection argument is a file path or an inline form "k=3,3,3" (commas or
// spaces; a bare digit string works for single-digit labels).
std::vector<int> load_reflection(const std::string& arg, int n) {
    if (std::filesystem::exists(arg)) {
        auto text = read_file(arg);
        if (!text) {
            std::cerr << "yber: cannot read '" << arg << "'\n";
            std::exit(kExitParse);
        }
        int* k = nullptr;
        int kn = 0;
        check(yber_reflection_parse(text->c_str(), &k, &kn));
        std::vector<int> out(k, k + kn);
        yber_free(k);
        if (kn != n) {
            std::cerr << "yber: reflection has order " << kn << ", solution has order " << n << "\n";
            std::exit(kExitParse);
        }
        return out;
    }
    std::string body = arg;
    if (body.rfind("k=", 0) == 0) body = body.substr(2);
    std::vector<int> out;
    if (body.find_first_of(", ") == std::string::npos && (int)body.size() == n) {
        for (char c : body) {
            if (c < '1' || c > '9') {
                std::cerr << "yber: bad reflection '" << arg << "'\n";
                std::exit(kExitParse);
            }
            out.push_back(c - '0');
        }
    } else {
        std::istringstream in(body);
        std::string tok;
        while (std::getline(in, tok, body.find(',') != std::string::npos ? ',' : ' '))
            if (!tok.empty()) out.push_back(std::atoi(tok.c_str()));
    }
    if ((int)out.size() != n) {
        std::cerr << "yber: reflection needs " << n << " entries\n";
        std::exit(kExitParse);
    }
    for (int v : out)
        if (v < 1 || v > n) {
            std::cerr << "yber: reflection entry out of range 1.." << n << "\n";
            std::exit(kExitParse);
        }
    return out;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); i++) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

const char* verdict(int v) { return v == 1 ? "pass" : v == 0 ? "fail" : "skip"; }

int cmd_check(const std::string& sol_arg) {
    yber_solution* s = load_solution(sol_arg);
    yber_report rep{};
    check(yber_check(s, &rep));
    std::cout << "ybe=" << (rep.ybe ? "true" : "false") << "\n";
    if (!rep.ybe) {
        std::cout << "note=not a YBE solution; remaining predicates not meaningful\n";
        yber_solution_free(s);
        return kExitPredicate;
    }
    std::cout << "rnd=" << (rep.rnd ? "true" : "false") << "\n"
              << "lnd=" << (rep.lnd ? "true" : "false") << "\n"
              << "involutive=" << (rep.involutive ? "true" : "false") << "\n"
              << "invertible=" << (rep.invertible ? "true" : "false") << "\n"
              << "power=" << rep.power_s << "," << rep.power_t << "\n";
    yber_solution_free(s);
    return 0;
}

int cmd_reflections(const std::string& sol_arg, const std::string& criterion, bool classes) {
    yber_solution* s = load_solution(sol_arg);
    int crit = criterion == "brute" ? 1 : criterion == "left" ? 2 : criterion == "right" ? 3 : 0;
    int n = 0;
    check(yber_solution_order(s, &n));
    yber_reflections* refl = nullptr;
    check(yber_reflections_enumerate(s, crit, classes ? 1 : 0, &refl));
    std::vector<int> k(n);
    if (!classes) {
        int count = 0;
        check(yber_reflections_count(refl, &count));
        for (int i = 0; i < count; i++) {
            check(yber_reflections_get(refl, i, k.data()));
            std::cout << join(k) << "\n";
        }
    } else {
        int nclasses = 0;
        check(yber_reflections_class_count(refl, &nclasses));
        for (int c = 0; c < nclasses; c++) {
            if (c) std::cout << "\n";
            int size = 0;
            check(yber_reflections_class_size(refl, c, &size));
            for (int j = 0; j < size; j++) {
                int index = 0;
                check(yber_reflections_class_member(refl, c, j, &index));
                check(yber_reflections_get(refl, index, k.data()));
                std::cout << join(k) << "\n";
            }
        }
    }
    yber_reflections_free(refl);
    yber_solution_free(s);
    return 0;
}

void print_solution(yber_solution* s) {
    char* text = nullptr;
    check(yber_solution_format(s, &text));
    std::cout << text;
    yber_free(text);
}

int cmd_derive(const std::string& sol_arg, const std::string& refl_arg, bool all, bool classify,
               int iterate) {
    yber_solution* s = load_solution(sol_arg);
    int n = 0;
    check(yber_solution_order(s, &n));

    if (!all) {
        std::vector<int> k = load_reflection(refl_arg, n);
        // convenience loop: re-derive as long as k stays a reflection of the
        // current solution (always true for k = id)
        yber_solution* cur = s;
        for (int step = 0; step < iterate; step++) {
            if (step > 0) {
                int still = 0;
                check(yber_is_reflection(cur, k.data(), &still));
                if (!still) {
                    std::cerr << "yber: k is no longer a reflection after " << step
                              << " derivation step(s)\n";
                    yber_solution_free(cur);
                    return kExitPrecondition;
                }
            }
            yber_solution* next = nullptr;
            check(yber_derive(cur, k.data(), &next));
            yber_solution_free(cur);
            cur = next;
        }
        print_solution(cur);
        yber_solution_free(cur);
        return 0;
    }

    if (classify) {
        yber_derived_classes* cls = nullptr;
        check(yber_classify_derived(s, &cls));
        int count = 0;
        check(yber_derived_classes_count(cls, &count));
        std::vector<int> k(n);
        for (int i = 0; i < count; i++) {
            if (i) std::cout << "\n";
            std::cout << "class=" << (i + 1) << "\n";
            int size = 0;
            check(yber_derived_classes_size(cls, i, &size));
            std::cout << "reflections=";
            for (int j = 0; j < size; j++) {
                check(yber_derived_classes_reflection(cls, i, j, k.data()));
                if (j) std::cout << "; ";
                std::cout << join(k);
            }
            std::cout << "\n";
            yber_solution* rep = nullptr;
            check(yber_derived_classes_solution(cls, i, &rep));
            print_solution(rep);
            yber_solution_free(rep);
        }
        yber_derived_classes_free(cls);
    } else {
        yber_reflections* refl = nullptr;
        check(yber_reflections_enumerate(s, 0, 0, &refl));
        int count = 0;
        check(yber_reflections_count(refl, &count));
        std::vector<int> k(n);
        for (int i = 0; i < count; i++) {
            check(yber_reflections_get(refl, i, k.data()));
            if (i) std::cout << "\n";
            std::cout << "k=" << join(k) << "\n";
            yber_solution* d = nullptr;
            check(yber_derive(s, k.data(), &d));
            print_solution(d);
            yber_solution_free(d);
        }
        yber_reflections_free(refl);
    }
    yber_solution_free(s);
    return 0;
}

int cmd_verify(const std::string& sol_arg, const std::string& refl_arg, int degree) {
    yber_solution* s = load_solution(sol_arg);
    int n = 0;
    check(yber_solution_order(s, &n));
    std::vector<int> k = load_reflection(refl_arg, n);
    yber_verify_report rep{};
    check(yber_verify(s, k.data(), degree, &rep));
    std::cout << "entwining_guitar=" << verdict(rep.entwine_guitar) << "\n"
              << "entwining_garside=" << verdict(rep.entwine_garside) << "\n"
              << "product_guitar=" << verdict(rep.product_guitar) << "\n"
              << "product_garside=" << verdict(rep.product_garside) << "\n"
              << "graded_bijection=" << verdict(rep.graded_bijection) << "\n"
              << "monoid_action=" << verdict(rep.monoid_action) << "\n"
              << "shelf_coincidence=" << verdict(rep.shelf_coincide) << "\n"
              << "shelf_second_identity=" << verdict(rep.shelf_second) << "\n";
    yber_solution_free(s);
    bool failed = rep.entwine_guitar == 0 || rep.entwine_garside == 0 ||
                  rep.product_guitar == 0 || rep.product_garside == 0 ||
                  rep.graded_bijection == 0 || rep.monoid_action == 0 ||
                  rep.shelf_coincide == 0 || rep.shelf_second == 0;
    return failed ? kExitPredicate : 0;
}

int cmd_strange(int n, bool count, int threads) {
    if (count) {
        uint64_t result = 0;
        check(yber_strange_count(n, threads, &result));
        std::cout << result << "\n";
        return 0;
    }
    if (n >= 4) {
        std::cerr << "yber: --list is limited to n <= 3 (output size)\n";
        return kExitResource;
    }
    int* tables = nullptr;
    int ntables = 0;
    check(yber_strange_list(n, &tables, &ntables));
    for (int t = 0; t < ntables; t++) {
        if (t) std::cout << "\n";
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                if (b) std::cout << ' ';
                std::cout << tables[(t * n + a) * n + b];
            }
            std::cout << "\n";
        }
    }
    yber_free(tables);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite Yang-Baxter solutions, reflections, and derived structures"};
    app.require_subcommand(1);

    std::string sol_arg, refl_arg, criterion = "auto";
    bool classes = false, all = false, classify = false, count = false, list = false;
    int degree = 4, n = 0, threads = 0, iterate = 1;

    auto* c_check = app.add_subcommand("check", "predicate report for a solution file");
    c_check->add_option("solution", sol_arg, "solution file or catalog name")->required();

    auto* c_refl = app.add_subcommand("reflections", "enumerate all reflections");
    c_refl->add_option("solution", sol_arg)->required();
    c_refl->add_option("--criterion", criterion, "auto|brute|left|right")
        ->check(CLI::IsMember({"auto", "brute", "left", "right"}));
    c_refl->add_flag("--classes", classes, "group by twist-map equivalence");

    auto* c_derive = app.add_subcommand("derive", "derived solution(s)");
    c_derive->add_option("solution", sol_arg)->required();
    c_derive->add_option("reflection", refl_arg, "reflection file or inline k=...");
    c_derive->add_flag("--all", all, "derive for every reflection");
    c_derive->add_flag("--classify", classify, "group results up to isomorphism");
    c_derive->add_option("--iterate", iterate, "repeat the derivation (single reflection only)")
        ->check(CLI::Range(1, 64));

    auto* c_verify = app.add_subcommand("verify", "verify structural identities");
    c_verify->add_option("solution", sol_arg)->required();
    c_verify->add_option("reflection", refl_arg)->required();
    c_verify->add_option("--degree", degree, "word-degree bound (default 4)")
        ->check(CLI::Range(1, 12));

    auto* c_strange = app.add_subcommand("strange", "strange binary operations");
    c_strange->add_option("n", n, "set size")->required()->check(CLI::Range(1, 64));
    c_strange->add_flag("--count", count, "print the number of operations up to isomorphism");
    c_strange->add_flag("--list", list, "stream canonical operation tables (n <= 3)");
    c_strange->add_option("--threads", threads, "worker threads (default: YBER_THREADS or cores)");

    CLI11_PARSE(app, argc, argv);

    if (c_check->parsed()) return cmd_check(sol_arg);
    if (c_refl->parsed()) return cmd_reflections(sol_arg, criterion, classes);
    if (c_derive->parsed()) {
        if (!all && refl_arg.empty()) {
            std::cerr << "yber: derive needs a reflection or --all\n";
            return kExitParse;
        }
        return cmd_derive(sol_arg, refl_arg, all, classify, iterate);
    }
    if (c_verify->parsed()) return cmd_verify(sol_arg, refl_arg, degree);
    if (c_strange->parsed()) {
        if (count == list) {
            std::cerr << "yber: strange needs exactly one of --count, --list\n";
            return kExitParse;
        }
        return cmd_strange(n, count, threads);
    }
    return 0;
}
