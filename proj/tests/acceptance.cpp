#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "ppl/suite.hpp"

// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is 0 only if all criteria pass.
int main(int argc, char** argv) {
    ppl::suite::Options opt;
    opt.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    int failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    auto last = t0;
    ppl::suite::run_all(opt, [&](const ppl::suite::Criterion& c) {
        const auto now = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(now - last).count();
        last = now;
        if (!c.pass) ++failed;
        std::printf("%s  [%.2fs]\n", ppl::suite::summary_line(c).c_str(), secs);
        std::fflush(stdout);
    });
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/%d criteria passed (seed %llu, %.1fs)\n", ppl::suite::kCriteria - failed, ppl::suite::kCriteria,
                static_cast<unsigned long long>(opt.seed), total);
    return failed == 0 ? 0 : 1;
}
