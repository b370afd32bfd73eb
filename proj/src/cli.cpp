#include "ppl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "ppl/coleman.hpp"
#include "ppl/finite_poly.hpp"
#include "ppl/identities.hpp"
#include "ppl/section3.hpp"
#include "ppl/suite.hpp"

namespace ppl::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::vector<std::string> kChecks = {"theorem",  "proposition1", "corollary", "maincong", "valuation-lemma",
                                          "remark",   "li1-log",      "delprop",   "f-lemmas", "e-route",
                                          "identities", "all"};

std::vector<Report> run_check(const std::string& check, const CheckParams& cp) {
    if (check == "theorem") return {coleman::verify_theorem(cp)};
    if (check == "proposition1") return {coleman::check_proposition(cp)};
    if (check == "corollary") return {coleman::check_corollary(cp)};
    if (check == "maincong") return {coleman::check_maincong(cp)};
    if (check == "valuation-lemma") return {coleman::check_valuation_lemma(cp)};
    if (check == "remark") return {coleman::check_remark(cp)};
    if (check == "li1-log") return {coleman::check_li1_log(cp)};
    if (check == "delprop") return {section3::delprop_check(cp)};
    if (check == "e-route") return {section3::e_recover_check(cp)};
    if (check == "f-lemmas") {
        if (cp.p <= static_cast<u64>(cp.n) + 1) throw std::invalid_argument("f-lemmas: requires p > n + 1");
        std::vector<Report> out{section3::f_congruence_check(cp)};
        if (cp.n >= 1) out.push_back(section3::df_lemma_check(cp));
        return out;
    }
    if (check == "identities") {
        if (cp.n < 2) throw std::invalid_argument("identities: n must be >= 2");
        return {identities::uniqueness_check(2, cp.n), identities::gen_function_check(cp.n),
                identities::constants_check(1, cp.n)};
    }
    throw std::invalid_argument("unknown check '" + check + "'");
}

void emit(const std::vector<Report>& reports, Format f, std::ostream& out) {
    if (f == Format::json) {
        if (reports.size() == 1) {
            out << reports[0].to_json().dump(2) << '\n';
            return;
        }
        ojson j;
        j["schemaVersion"] = kReportSchemaVersion;
        bool pass = true;
        auto arr = ojson::array();
        for (const Report& r : reports) {
            pass = pass && r.pass;
            arr.push_back(r.to_json());
        }
        j["pass"] = pass;
        j["reports"] = arr;
        out << j.dump(2) << '\n';
        return;
    }
    for (const Report& r : reports) out << (f == Format::csv ? r.to_csv() : r.to_text());
}

int verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.check == "all") {
        if (cfg.matrix != "small") throw std::invalid_argument("unknown matrix '" + cfg.matrix + "'");
        suite::Options opt;
        opt.seed = cfg.cp.seed;
        opt.jobs = cfg.cp.jobs;
        bool pass = true;
        auto arr = ojson::array();
        suite::run_all(opt, [&](const suite::Criterion& c) {
            pass = pass && c.pass;
            if (cfg.format == Format::json)
                arr.push_back(suite::to_json(c));
            else if (cfg.format == Format::text)
                out << suite::summary_line(c) << '\n' << std::flush;
            else
                for (const Report& r : c.reports) out << r.to_csv();
        });
        if (cfg.format == Format::json) {
            ojson j;
            j["schemaVersion"] = kReportSchemaVersion;
            j["matrix"] = cfg.matrix;
            j["seed"] = cfg.cp.seed;
            j["pass"] = pass;
            j["criteria"] = arr;
            out << j.dump(2) << '\n';
        }
        return pass ? kExitPass : kExitFail;
    }
    std::vector<Report> reports;
    const int hi = cfg.n_hi < 0 ? cfg.cp.n : cfg.n_hi;
    for (int n = cfg.cp.n; n <= hi; ++n) {
        CheckParams cp = cfg.cp;
        cp.n = n;
        for (Report& r : run_check(cfg.check, cp)) reports.push_back(std::move(r));
    }
    emit(reports, cfg.format, out);
    for (const Report& r : reports)
        if (!r.pass) return kExitFail;
    return kExitPass;
}

int finite_table(const RunConfig& cfg, std::ostream& out) {
    const CheckParams& cp = cfg.cp;
    if (cp.n < 0) throw std::invalid_argument("finite-table: n must be >= 0");
    const auto ctx = make_ctx(cp.p, cp.k, 1);
    const finite::LiTable table(cp.p, cp.n);
    ojson rows = ojson::array();
    for (u64 i = 0; i < ctx->field_size(); ++i) {
        const FpkElement x = FpkElement::from_index(ctx, i);
        ojson row;
        row["index"] = i;
        row["x"] = to_json(x);
        row["li"] = to_json(finite::li_finite(table, x));
        rows.push_back(row);
    }
    if (cfg.format == Format::json) {
        ojson j;
        j["schemaVersion"] = kReportSchemaVersion;
        j["p"] = cp.p;
        j["k"] = cp.k;
        j["n"] = cp.n;
        j["hbar"] = ctx->hbar_string();
        j["rows"] = rows;
        out << j.dump(2) << '\n';
    } else {
        const char* sep = cfg.format == Format::csv ? "," : "\t";
        out << "index" << sep << "x" << sep << "li_" << cp.n << '\n';
        for (const auto& r : rows) {
            const std::string x = r["x"].dump(), li = r["li"].dump();
            if (cfg.format == Format::csv)
                out << r["index"].dump() << ",\"" << x << "\",\"" << li << "\"\n";
            else
                out << r["index"].dump() << sep << x << sep << li << '\n';
        }
    }
    return kExitPass;
}

int coeffs(const RunConfig& cfg, std::ostream& out) {
    const int n = cfg.cp.n;
    if (n < 2) throw std::invalid_argument("coeffs: n must be >= 2");
    const auto a = identities::a_coeffs(n);
    const auto e = identities::e_coeffs(n);
    ojson j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["n"] = n;
    auto as = ojson::array(), es = ojson::array();
    for (const auto& x : a) as.push_back(to_string(x));
    for (const auto& x : e) es.push_back(to_string(x));
    j["a"] = as;
    j["e"] = es;
    j["c"] = to_string(identities::c_sum(n));
    j["d"] = to_string(identities::d_sum(n));
    if (cfg.format == Format::json) {
        out << j.dump(2) << '\n';
        return kExitPass;
    }
    const char* sep = cfg.format == Format::csv ? "," : "\t";
    out << "index" << sep << "a" << sep << "e\n";
    for (std::size_t i = 0; i < std::max(a.size(), e.size()); ++i)
        out << i << sep << (i < a.size() ? to_string(a[i]) : "") << sep << (i < e.size() ? to_string(e[i]) : "")
            << '\n';
    out << "c" << sep << j["c"].get<std::string>() << '\n' << "d" << sep << j["d"].get<std::string>() << '\n';
    return kExitPass;
}

int env_int(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return 0;
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (*end != '\0' || x < 1 || x > 1000) throw std::invalid_argument(std::string(name) + ": expected a positive integer");
    return static_cast<int>(x);
}

void load_replay(RunConfig& cfg, const std::string& path, const std::map<std::string, bool>& explicit_flags) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read replay file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("replay file '" + path + "': " + e.what());
    }
    cfg.cp.replay = replay_tasks(doc);
    if (!doc.is_object() || !doc.contains("perSample")) return;
    // A whole report also fixes the parameters, unless overridden.
    auto take = [&](const char* key, auto& field) {
        if (explicit_flags.at(key) || !doc.contains(key) || !doc[key].is_number_integer()) return;
        field = doc[key].get<std::remove_reference_t<decltype(field)>>();
    };
    take("p", cfg.cp.p);
    take("n", cfg.cp.n);
    take("k", cfg.cp.k);
    take("A", cfg.cp.A);
    take("m", cfg.cp.m);
    take("M", cfg.cp.M);
    take("seed", cfg.cp.seed);
}

}  // namespace

std::vector<SampleTask> replay_tasks(const nlohmann::json& doc) {
    auto one = [](const nlohmann::json& r) {
        if (!r.is_object() || !r.contains("index") || !r.contains("sampleSeed"))
            throw std::invalid_argument("replay record needs 'index' and 'sampleSeed'");
        return SampleTask{r["index"].get<int>(), r["sampleSeed"].get<u64>()};
    };
    std::vector<SampleTask> out;
    if (doc.is_array()) {
        for (const auto& r : doc) out.push_back(one(r));
    } else if (doc.is_object() && doc.contains("perSample")) {
        for (const auto& r : doc["perSample"])
            if (!r.value("pass", false)) out.push_back(one(r));
        if (out.empty())
            for (const auto& r : doc["perSample"]) out.push_back(one(r));
    } else {
        out.push_back(one(doc));
    }
    if (out.empty()) throw std::invalid_argument("replay document names no samples");
    return out;
}

void apply_env(CheckParams& cp) {
    if (cp.A == 0) cp.A = env_int("PPL_PRECISION");
    if (cp.m == 0) cp.m = env_int("PPL_RIEMANN_M");
    if (cp.M == 0) cp.M = env_int("PPL_SERIES_M");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "verify") return verify(cfg, out);
        if (cfg.command == "finite-table") return finite_table(cfg, out);
        if (cfg.command == "coeffs") return coeffs(cfg, out);
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const PrecisionError& e) {
        err << "precision shortfall: " << e.what() << '\n';
        return kExitFail;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verify congruences for p-adic and finite polylogarithms."};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string n_spec = "2", format = "text", replay;
    int A = 0, m = 0, M = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.cp.p, "prime")->check(CLI::PositiveNumber);
        sub->add_option("--n", n_spec, "weight, or a range a..b");
        sub->add_option("--k", cfg.cp.k, "residue field degree")->check(CLI::Range(1, 16));
        sub->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto* verify_cmd = app.add_subcommand("verify", "run a verification check");
    verify_cmd->add_option("check", cfg.check, "check name")->required()->check(CLI::IsMember(kChecks));
    add_common(verify_cmd);
    verify_cmd->add_option("--samples", cfg.cp.samples, "random samples")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", cfg.cp.seed, "base seed");
    verify_cmd->add_option("--A", A, "working precision")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--m", m, "Riemann-sum modulus exponent")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--M", M, "series truncation order")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--jobs", cfg.cp.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--trace", cfg.cp.trace, "include series dumps");
    verify_cmd->add_option("--replay", replay, "re-run the samples named in a record or report file");
    verify_cmd->add_option("--matrix", cfg.matrix, "acceptance matrix for 'all'");
    auto* table_cmd = app.add_subcommand("finite-table", "tabulate li_n over F_{p^k}");
    add_common(table_cmd);
    auto* coeffs_cmd = app.add_subcommand("coeffs", "print a_k, e_m, c and d for weight n");
    add_common(coeffs_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitConfig;
    }
    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    try {
        const auto dots = n_spec.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            cfg.cp.n = std::stoi(n_spec, &used);
            if (used != n_spec.size()) throw std::invalid_argument(n_spec);
        } else {
            cfg.cp.n = std::stoi(n_spec.substr(0, dots));
            cfg.n_hi = std::stoi(n_spec.substr(dots + 2), &used);
            if (used != n_spec.size() - dots - 2 || cfg.n_hi < cfg.cp.n) throw std::invalid_argument(n_spec);
        }
    } catch (const std::exception&) {
        err << "configuration error: --n expects an integer or a range a..b\n";
        return kExitConfig;
    }
    cfg.cp.A = A;
    cfg.cp.m = m;
    cfg.cp.M = M;
    try {
        if (!replay.empty()) {
            const std::map<std::string, bool> explicit_flags = {
                {"p", sub->count("--p") > 0}, {"n", sub->count("--n") > 0},       {"k", sub->count("--k") > 0},
                {"A", sub->count("--A") > 0}, {"m", sub->count("--m") > 0},       {"M", sub->count("--M") > 0},
                {"seed", sub->count("--seed") > 0}};
            load_replay(cfg, replay, explicit_flags);
        }
        apply_env(cfg.cp);
    } catch (const std::invalid_argument& e) {
        err << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    }
    return run(cfg, out, err);
}

}  // namespace ppl::cli
