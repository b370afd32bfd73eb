#pragma once

#include <functional>
#include <random>
#include <vector>

#include "json.hpp"

#include "ppl/fpk.hpp"
#include "ppl/report.hpp"
#include "ppl/witt.hpp"

namespace ppl {

// SplitMix64 finalizer; per-sample seeds are splitmix64(seed + index).
u64 splitmix64(u64 x);

// mt19937_64 with rejection sampling, so draws depend only on the engine's
// output sequence and reproduce across standard libraries.
class SampleRng {
public:
    explicit SampleRng(u64 sample_seed) : engine_(sample_seed) {}
    // Uniform in [0, bound).
    u64 below(u64 bound);

private:
    std::mt19937_64 engine_;
};

// Uniform over F_{p^k} \ {0, 1}.
FpkElement random_point(SampleRng& rng, const CtxPtr& ctx);
// Uniform over integral elements modulo p^A.
WittApprox random_w(SampleRng& rng, const CtxPtr& ctx);

struct SampleTask {
    int index;
    u64 seed;
};

struct CheckParams {
    u64 p = 5;
    int n = 2;
    int k = 1;
    int samples = 20;
    u64 seed = 0;
    int A = 0;  // 0: derived from the weight
    int m = 0;  // 0: derived from the weight
    int M = 0;  // 0: smallest order that certifies the target
    int jobs = 1;
    bool trace = false;
    std::vector<SampleTask> replay;  // when non-empty, run exactly these
};

struct Precision {
    int A;
    int m;
    int M;  // 0 when chosen per series
};

// Defaults A = weight + 4 and m = weight + 2, with A raised to at least m.
Precision resolve_precision(const CheckParams& cp, int weight);

std::vector<SampleTask> sample_tasks(const CheckParams& cp);

// Runs fn over the tasks on up to `jobs` threads; output is in task order.
std::vector<nlohmann::ordered_json> run_tasks(const std::vector<SampleTask>& tasks, int jobs,
                                              const std::function<nlohmann::ordered_json(const SampleTask&)>& fn);

// Runs fn per task, turning precision shortfalls into failing records tagged
// "error": "precision" so they are never mistaken for a disproof.
void run_into(Report& report, const CheckParams& cp,
              const std::function<nlohmann::ordered_json(const SampleTask&)>& fn);

void record_params(Report& report, const CheckParams& cp, const CtxPtr& ctx, const Precision& prec);

nlohmann::ordered_json to_json(const FpkElement& x);

}  // namespace ppl
