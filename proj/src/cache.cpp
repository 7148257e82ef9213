#include "mdsa/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "mdsa/antipode.hpp"
#include "mdsa/json_io.hpp"
#include "mdsa/power_ops.hpp"

namespace mdsa {

namespace fs = std::filesystem;

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("MDSA_CACHE")) return env;
    if (const char* home = std::getenv("HOME"))
        return fs::path(home) / ".cache" / "mdsa";
    return fs::path(".mdsa-cache");
}

std::string convention_hash(int window_lo, int window_hi) {
    // grading conventions are fixed in code; the window participates because
    // cached values must have been produced inside a compatible truncation
    return "v1;tau(0,-1);rho(-1,-1);u(-1,-1);v(-2,-1);window[" +
           std::to_string(window_lo) + "," + std::to_string(window_hi) + "]";
}

namespace {

const char* kChiFile = "antipode.json";
const char* kQFile = "qvalues.json";

json table_to_json(const std::map<std::string, AElement>& t, const CacheConfig& cfg) {
    json entries = json::object();
    for (const auto& [k, v] : t) entries[k] = to_json(v);
    return json{{"version", 1},
                {"convention", convention_hash(cfg.window_lo, cfg.window_hi)},
                {"entries", entries}};
}

std::optional<std::map<std::string, AElement>> table_from_file(const fs::path& p,
                                                               const CacheConfig& cfg) {
    std::ifstream in(p);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        if (j.at("version").get<int>() != 1) return std::nullopt;
        if (j.at("convention").get<std::string>() !=
            convention_hash(cfg.window_lo, cfg.window_hi))
            return std::nullopt;
        std::map<std::string, AElement> t;
        for (const auto& [k, v] : j.at("entries").items())
            t.emplace(k, aelement_from_json(v));
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace

std::string cache_load(const CacheConfig& cfg) {
    std::string status;
    if (auto t = table_from_file(cfg.dir / kChiFile, cfg)) {
        chi_cache::restore(*t);
        status += "antipode: " + std::to_string(t->size()) + " entries; ";
    } else {
        status += "antipode: none; ";
    }
    if (auto t = table_from_file(cfg.dir / kQFile, cfg)) {
        q_cache::restore(*t);
        status += "q-values: " + std::to_string(t->size()) + " entries";
    } else {
        status += "q-values: none";
    }
    return status;
}

std::string cache_save(const CacheConfig& cfg) {
    std::error_code ec;
    fs::create_directories(cfg.dir, ec);
    {
        std::ofstream out(cfg.dir / kChiFile);
        out << table_to_json(chi_cache::snapshot(), cfg).dump(1);
    }
    {
        std::ofstream out(cfg.dir / kQFile);
        out << table_to_json(q_cache::snapshot(), cfg).dump(1);
    }
    return "saved " + std::to_string(chi_cache::size()) + " antipode and " +
           std::to_string(q_cache::size()) + " q entries to " + cfg.dir.string();
}

std::string cache_clear(const CacheConfig& cfg) {
    std::error_code ec;
    fs::remove(cfg.dir / kChiFile, ec);
    fs::remove(cfg.dir / kQFile, ec);
    chi_cache::clear();
    q_cache::clear();
    return "cache cleared";
}

std::string cache_info(const CacheConfig& cfg) {
    std::string s = "cache dir: " + cfg.dir.string() + "\n";
    s += "convention: " + convention_hash(cfg.window_lo, cfg.window_hi) + "\n";
    s += "in-memory: " + std::to_string(chi_cache::size()) + " antipode, " +
         std::to_string(q_cache::size()) + " q entries\n";
    s += std::string("antipode file: ") +
         (fs::exists(cfg.dir / kChiFile) ? "present" : "absent") + "\n";
    s += std::string("q-values file: ") +
         (fs::exists(cfg.dir / kQFile) ? "present" : "absent");
    return s;
}

} // namespace mdsa
