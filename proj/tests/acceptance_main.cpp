// one PASS/FAIL line per acceptance criterion; failing sub-checks are listed under their criterion
#include "klrwb/acceptance.hpp"

#include <chrono>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    klrwb::AcceptanceOptions opts;
    bool strict = false, verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--strict")) strict = true;
        else if (!std::strcmp(argv[i], "--verbose")) verbose = true;
        else if (!std::strcmp(argv[i], "--lambda") && i + 1 < argc) opts.lam = klrwb::parse_rational(argv[++i]);
        else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) opts.only = argv[++i];
        else {
            std::cerr << "usage: acceptance [--strict] [--verbose] [--lambda p/q] [--only groups]\n";
            return 1;
        }
    }
    auto t0 = std::chrono::steady_clock::now();
    auto run = klrwb::run_acceptance(opts);
    for (const auto& s : run.criteria) {
        if (!s.ran) continue;
        std::cout << (s.pass ? "PASS" : "FAIL") << " criterion " << s.criterion << ": " << s.title;
        if (!s.pass && s.known_unattainable) std::cout << " [known unattainable, see README]";
        std::cout << "\n";
        for (const auto& r : run.checks) {
            if (r.criterion != s.criterion || (r.pass && !verbose)) continue;
            std::cout << "    " << (r.pass ? "ok   " : "FAIL ") << r.label;
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
    }
    std::cerr << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
    if (strict) return run.all_pass() ? 0 : 2;
    return run.only_known_failures() ? 0 : 2;
}
