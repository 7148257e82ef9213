#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace mdsa {

// Persistent memo caches (antipode table and Q-values) as versioned JSON.
// A convention hash in the header ties a file to the grading conventions and
// the truncation window it was produced under; a mismatch discards the file.
struct CacheConfig {
    std::filesystem::path dir;
    int window_lo = -40;
    int window_hi = 40;
};

// flag > MDSA_CACHE environment variable > ~/.cache/mdsa
std::filesystem::path default_cache_dir();

std::string convention_hash(int window_lo, int window_hi);

// load both memo tables from dir if present and convention-compatible;
// returns a human-readable status line
std::string cache_load(const CacheConfig& cfg);

// persist both memo tables
std::string cache_save(const CacheConfig& cfg);

// remove cache files and clear in-memory tables
std::string cache_clear(const CacheConfig& cfg);

// entry counts and file presence
std::string cache_info(const CacheConfig& cfg);

} // namespace mdsa
