#include "ppl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace ppl {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

u64 SampleRng::below(u64 bound) {
    if (bound == 0) throw std::invalid_argument("SampleRng::below: empty range");
    const u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % bound;
    for (;;) {
        const u64 x = engine_();
        if (x < limit) return x % bound;
    }
}

FpkElement random_point(SampleRng& rng, const CtxPtr& ctx) {
    return FpkElement::from_index(ctx, 2 + rng.below(ctx->field_size() - 2));
}

WittApprox random_w(SampleRng& rng, const CtxPtr& ctx) {
    Poly c(static_cast<std::size_t>(ctx->k()));
    bool zero = true;
    for (auto& e : c) {
        e = rng.below(ctx->modulus());
        zero = zero && e == 0;
    }
    if (zero) return WittApprox::zero(ctx);
    return WittApprox::from_coeffs(ctx, c);
}

Precision resolve_precision(const CheckParams& cp, int weight) {
    Precision prec{cp.A > 0 ? cp.A : weight + 4, cp.m > 0 ? cp.m : weight + 2, cp.M};
    prec.A = std::max(prec.A, prec.m);
    return prec;
}

std::vector<SampleTask> sample_tasks(const CheckParams& cp) {
    if (!cp.replay.empty()) return cp.replay;
    std::vector<SampleTask> tasks;
    for (int i = 0; i < cp.samples; ++i) tasks.push_back({i, splitmix64(cp.seed + static_cast<u64>(i))});
    return tasks;
}

std::vector<nlohmann::ordered_json> run_tasks(const std::vector<SampleTask>& tasks, int jobs,
                                              const std::function<nlohmann::ordered_json(const SampleTask&)>& fn) {
    std::vector<nlohmann::ordered_json> out(tasks.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = fn(tasks[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
                try {
                    out[i] = fn(tasks[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

void run_into(Report& report, const CheckParams& cp,
              const std::function<nlohmann::ordered_json(const SampleTask&)>& fn) {
    auto guarded = [&](const SampleTask& t) {
        try {
            return fn(t);
        } catch (const PrecisionError& e) {
            nlohmann::ordered_json rec;
            rec["index"] = t.index;
            rec["sampleSeed"] = t.seed;
            rec["error"] = "precision";
            rec["message"] = e.what();
            rec["pass"] = false;
            return rec;
        }
    };
    for (auto& rec : run_tasks(sample_tasks(cp), cp.jobs, guarded)) report.add_sample(std::move(rec));
}

void record_params(Report& report, const CheckParams& cp, const CtxPtr& ctx, const Precision& prec) {
    report.params["p"] = cp.p;
    report.params["n"] = cp.n;
    report.params["k"] = cp.k;
    report.params["hbar"] = ctx->hbar_string();
    report.params["A"] = prec.A;
    report.params["m"] = prec.m;
    if (prec.M > 0)
        report.params["M"] = prec.M;
    else
        report.params["M"] = "auto";
    report.params["seed"] = cp.seed;
    report.params["samples"] = cp.replay.empty() ? cp.samples : static_cast<int>(cp.replay.size());
}

nlohmann::ordered_json to_json(const FpkElement& x) { return x.coeffs(); }

}  // namespace ppl
