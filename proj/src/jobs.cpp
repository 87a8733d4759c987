#include "kalu/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

namespace kalu {

namespace {

std::string string_field(const Json& j, const std::string& name) {
    const Json& f = require_field(j, name);
    if (!f.is_string()) throw validation_error("field '" + name + "' must be a string");
    return f.get<std::string>();
}

std::string join_dashed(const std::vector<int>& v) {
    std::string out;
    for (size_t a = 0; a < v.size(); ++a) {
        if (a) out += '-';
        out += std::to_string(v[a]);
    }
    return out;
}

bool is_base_offsets(const SchubertDatum& d, const CondVector& p) {
    return static_cast<int>(p.size()) == d.arity() &&
           std::all_of(p.begin(), p.end(), [](int x) { return x == 0; });
}

CondVector zero_offsets(const SchubertDatum& d) {
    return CondVector(static_cast<size_t>(d.arity()), 0);
}

std::string multiplicities_text(const std::vector<std::pair<long, Integer>>& mults) {
    std::string out = "{";
    for (size_t a = 0; a < mults.size(); ++a) {
        if (a) out += ", ";
        out += std::to_string(mults[a].first) + ": " + mults[a].second.str();
    }
    return out + "}";
}

}  // namespace

struct TableCache::Entry {
    std::mutex mx;
    std::unique_ptr<KaLuTable> table;
};

TableCache::TableCache(std::string dir) : dir_(std::move(dir)) {}
TableCache::~TableCache() = default;

std::string TableCache::file_for(const SchubertDatum& d) const {
    return dir_ + "/k" + std::to_string(d.k) + "_l" + std::to_string(d.l) + "_I" +
           join_dashed(d.I) + "_J" + join_dashed(d.J) + ".json";
}

std::shared_ptr<TableCache::Entry> TableCache::entry_for(const SchubertDatum& d) {
    const std::string key = dump(to_json(d));
    std::lock_guard<std::mutex> lk(mx_);
    auto& slot = entries_[key];
    if (!slot) slot = std::make_shared<Entry>();
    return slot;
}

void TableCache::with_table(const SchubertDatum& datum, const std::function<void(KaLuTable&)>& fn) {
    require_valid(datum);
    std::shared_ptr<Entry> entry = entry_for(datum);
    std::lock_guard<std::mutex> lk(entry->mx);
    if (!entry->table) {
        auto table = std::make_unique<KaLuTable>(datum, zero_offsets(datum));
        bool loaded = false;
        if (persistent()) {
            std::ifstream in(file_for(datum));
            if (in) {
                const Json j = Json::parse(in, nullptr, false);
                if (!j.is_discarded()) {
                    try {
                        load_table(*table, j);
                        loaded = true;
                    } catch (const validation_error&) {
                        // stale or foreign file: recompute below
                    }
                }
            }
        }
        table->extend_to(max_admissible(table->context()));
        if (persistent() && !loaded) {
            try {
                std::filesystem::create_directories(dir_);
                static std::atomic<unsigned> counter{std::random_device{}()};
                const std::string tmp =
                    file_for(datum) + ".tmp" + std::to_string(counter.fetch_add(1));
                std::ofstream out(tmp);
                out << dump(to_json(*table)) << "\n";
                out.close();
                if (out) std::filesystem::rename(tmp, file_for(datum));
            } catch (const std::exception&) {
                // the cache is best-effort; the computed table still serves
            }
        }
        entry->table = std::move(table);
    }
    fn(*entry->table);
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("KALU_CACHE_DIR");
    return env ? env : "";
}

JobSpec job_from_json(const Json& j) {
    JobSpec job;
    job.command = string_field(j, "command");
    job.datum = datum_from_json(require_field(j, "datum"));
    if (j.contains("p")) job.p = int_vector(j.at("p"), "field 'p'");
    if (j.contains("q")) job.q = int_vector(j.at("q"), "field 'q'");
    if (j.contains("mode")) job.mode = string_field(j, "mode");
    if (j.contains("output")) {
        const std::string output = string_field(j, "output");
        if (output != "text" && output != "json")
            throw validation_error("field 'output' must be \"text\" or \"json\"");
        job.json_output = output == "json";
    }
    return job;
}

namespace {

JobResult run_impl(const JobSpec& job, TableCache& cache) {
    const SchubertDatum& d = job.datum;
    require_valid(d);
    if (d.arity() == 0) throw validation_error("at least one condition is required");

    JobResult out;
    std::ostringstream text;

    if (job.command == "kl") {
        if (!job.p) throw validation_error("kl requires p");
        if (!job.q) throw validation_error("kl requires q");
        IntPoly b;
        if (cache.persistent() && is_base_offsets(d, *job.p)) {
            cache.with_table(d, [&](KaLuTable& table) {
                const CondVector qb = adapt(table.context(), *job.q);
                b = table.cell(table.context().base.p_bar, qb).b;
            });
        } else {
            b = kalu(d, *job.p, *job.q);
        }
        out.json = Json{{"datum", to_json(d)}, {"p", *job.p}, {"q", *job.q}, {"b", to_json(b)}};
        text << "b = " << b.to_text();
    } else if (job.command == "decompose") {
        DecompositionReport report;
        cache.with_table(d, [&](KaLuTable& table) { report = decompose(table); });
        out.json = to_json(report);
        text << "dim = " << report.dim << "\n";
        for (const DecompositionEntry& e : report.entries)
            text << "q = " << to_text(e.q) << "  g = " << e.g.to_text()
                 << "  multiplicities = " << multiplicities_text(e.multiplicities) << "\n";
    } else if (job.command == "smallness") {
        const CondVector p = job.p.value_or(zero_offsets(d));
        const SmallnessReport report = smallness(d, p);
        out.json = Json{{"datum", to_json(d)}, {"p", p}};
        const Json fields = to_json(report);
        for (const auto& [key, value] : fields.items()) out.json[key] = value;
        text << "pi: " << (report.pi_small ? "small" : "not small") << ", xi: "
             << (report.xi_small ? "small" : "not small");
    } else if (job.command == "scan-relevant") {
        std::vector<ScanRow> rows;
        cache.with_table(d, [&](KaLuTable& table) { rows = scan_relevant(table); });
        out.json = to_json(rows);
        std::string silent;
        for (const ScanRow& row : rows) {
            text << "q = " << to_text(row.q) << "  m = " << row.m << "  dim_f = " << row.dim_f
                 << "  " << (row.relevant ? "relevant" : "not relevant")
                 << (row.silent ? ", silent" : "") << "  g = " << row.g.to_text() << "\n";
            if (row.silent) silent += (silent.empty() ? "" : "; ") + to_text(row.q);
        }
        text << "silent: " << (silent.empty() ? "none" : silent);
    } else if (job.command == "essential") {
        const CondVector p = job.p.value_or(zero_offsets(d));
        const EssentialPair pair = essentialize(d, p);
        const Partition lam = lambda_of(d, p);
        out.json = Json{{"datum", to_json(d)}, {"p", p}};
        const Json fields = to_json(pair);
        for (const auto& [key, value] : fields.items()) out.json[key] = value;
        out.json["targets"] = pair.targets();
        out.json["lambda"] = lam;
        out.json["dim"] = dim_variety(d, p);
        out.json["codim"] = area(lam);
        text << "positions: " << to_text(pair.positions) << "\n"
             << "I: " << to_text(pair.i_bar) << "  J: " << to_text(pair.j_bar)
             << "  p: " << to_text(pair.p_bar) << "\n"
             << "targets: " << to_text(pair.targets()) << "\n"
             << "lambda: " << to_text(lam) << "\n"
             << "dim = " << dim_variety(d, p) << ", codim = " << area(lam) << "\n"
             << render_ferrers(lam, d.k, d.l);
    } else if (job.command == "verify") {
        if (job.mode.empty()) throw validation_error("verify requires mode");
        const VerifyReport report = verify_identities(d, job.mode);
        out.json = to_json(report);
        out.code = report.passed ? 0 : 1;
        text << report.mode << ": " << (report.passed ? "passed" : "FAILED") << " ("
             << report.checked << " checks)";
        for (const std::string& f : report.failures) text << "\n  " << f;
    } else {
        throw validation_error("unknown command '" + job.command +
                               "' (expected kl, decompose, smallness, scan-relevant, essential or "
                               "verify)");
    }
    out.text = text.str();
    return out;
}

Json line_output(long line, const std::string& raw, TableCache& cache) {
    Json out{{"line", line}};
    const Json parsed = Json::parse(raw, nullptr, false);
    if (parsed.is_discarded()) {
        out["error"] = "line is not valid JSON";
        return out;
    }
    try {
        const JobSpec job = job_from_json(parsed);
        const JobResult r = run_impl(job, cache);
        out["result"] = job.json_output ? r.json : Json(r.text);
    } catch (const validation_error& e) {
        out["error"] = e.what();
    } catch (const std::exception& e) {
        out["error"] = std::string("internal: ") + e.what();
    }
    return out;
}

}  // namespace

JobResult run(const JobSpec& job, TableCache& cache) {
    try {
        return run_impl(job, cache);
    } catch (const validation_error& e) {
        return {1, Json{{"error", e.what()}}, std::string("error: ") + e.what()};
    } catch (const std::exception& e) {
        return {2, Json{{"error", e.what()}}, std::string("internal error: ") + e.what()};
    }
}

JobResult run(const JobSpec& job) {
    TableCache cache(resolve_cache_dir(job.cache_dir));
    return run(job, cache);
}

void run_batch(std::istream& in, std::ostream& out, TableCache& cache, int threads) {
    struct Item {
        long line;
        std::string raw;
    };
    std::vector<Item> items;
    std::string raw;
    long line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        items.push_back({line, std::move(raw)});
    }

    std::vector<Json> results(items.size());
    std::atomic<size_t> next{0};
    const auto work = [&] {
        for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1))
            results[i] = line_output(items[i].line, items[i].raw, cache);
    };

    size_t width = threads > 0 ? static_cast<size_t>(threads)
                               : std::max<size_t>(1, std::min<size_t>(
                                     std::thread::hardware_concurrency(), 8));
    width = std::min(width, items.size());
    if (width <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(width);
        for (size_t t = 0; t < width; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (const Json& r : results) out << dump(r) << "\n";
}

}  // namespace kalu
